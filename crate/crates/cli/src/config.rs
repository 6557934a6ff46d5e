//! Optional TOML config: top-level `key = value` pairs fill in flags of the
//! chosen subcommand that were not given on the command line.

use std::ffi::OsString;
use std::fs;

use anyhow::{bail, Context, Result};
use clap::Command;

/// Value of `--config PATH` or `--config=PATH`, if present.
fn config_path(args: &[OsString]) -> Option<String> {
    let mut it = args.iter().map(|a| a.to_string_lossy().into_owned());
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next();
        }
        if let Some(v) = a.strip_prefix("--config=") {
            return Some(v.to_string());
        }
    }
    None
}

fn flag_given(args: &[OsString], long: &str) -> bool {
    let flag = format!("--{long}");
    let eq = format!("--{long}=");
    args.iter().any(|a| {
        let a = a.to_string_lossy();
        a == flag || a.starts_with(&eq)
    })
}

fn render(v: &toml::Value) -> Result<Option<String>> {
    Ok(Some(match v {
        toml::Value::String(s) => s.clone(),
        toml::Value::Integer(i) => i.to_string(),
        toml::Value::Float(f) => f.to_string(),
        toml::Value::Boolean(_) => return Ok(None),
        other => bail!("unsupported config value {other}"),
    }))
}

/// Appends config-file defaults to `args` for flags the user did not pass.
pub fn merge(cmd: &Command, args: Vec<OsString>) -> Result<Vec<OsString>> {
    let Some(path) = config_path(&args) else { return Ok(args) };
    let text = fs::read_to_string(&path).with_context(|| format!("reading config {path}"))?;
    let table: toml::Table = text.parse().with_context(|| format!("parsing config {path}"))?;

    let names: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let Some(sub) = cmd.get_subcommands().find(|s| names.iter().any(|n| n == s.get_name())) else {
        return Ok(args);
    };
    let mut out = args.clone();
    for (key, value) in &table {
        let long = key.replace('_', "-");
        if !sub.get_arguments().any(|a| a.get_long() == Some(long.as_str())) || flag_given(&args, &long) {
            continue;
        }
        match (value, render(value)?) {
            (toml::Value::Boolean(true), _) => out.push(format!("--{long}").into()),
            (toml::Value::Boolean(false), _) => {}
            (_, Some(v)) => {
                out.push(format!("--{long}").into());
                out.push(v.into());
            }
            (_, None) => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::{Arg, ArgAction};

    fn cmd() -> Command {
        Command::new("t").arg(Arg::new("config").long("config").global(true)).subcommand(
            Command::new("run")
                .arg(Arg::new("n").long("n"))
                .arg(Arg::new("q-min").long("q-min"))
                .arg(Arg::new("bounded").long("bounded").action(ArgAction::SetTrue)),
        )
    }

    #[test]
    fn flags_override_config() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.toml");
        fs::write(&path, "n = 4\nq_min = 0.5\nbounded = true\nunrelated = 1\n").unwrap();
        let args: Vec<OsString> =
            ["t", "run", "--n", "6", "--config", path.to_str().unwrap()].iter().map(OsString::from).collect();
        let merged = merge(&cmd(), args).unwrap();
        let m = cmd().try_get_matches_from(merged).unwrap();
        let (_, sub) = m.subcommand().unwrap();
        assert_eq!(sub.get_one::<String>("n").unwrap(), "6");
        assert_eq!(sub.get_one::<String>("q-min").unwrap(), "0.5");
        assert!(sub.get_flag("bounded"));
    }

    #[test]
    fn no_config_is_identity() {
        let args: Vec<OsString> = ["t", "run"].iter().map(OsString::from).collect();
        assert_eq!(merge(&cmd(), args.clone()).unwrap(), args);
    }
}
