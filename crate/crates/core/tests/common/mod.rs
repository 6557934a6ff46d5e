use std::path::PathBuf;

use pql_core::atlas::{render_csv, scan_grid};

pub fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/golden/n6_200.csv")
}

pub fn golden_csv() -> String {
    let scan = scan_grid(6, (-1.0, 4.0), (0.0, 2.0), (200, 200), false, None).unwrap();
    render_csv(&scan)
}

/// Compares against the stored file, rewriting it when `UPDATE_GOLDEN` is set.
pub fn golden_matches() -> Result<(), String> {
    let fresh = golden_csv();
    let path = golden_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &fresh).map_err(|e| e.to_string())?;
    }
    let stored = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if stored == fresh {
        return Ok(());
    }
    let line = stored.lines().zip(fresh.lines()).position(|(a, b)| a != b);
    Err(format!(
        "golden mismatch at line {:?} ({} stored vs {} fresh lines)",
        line.map(|i| i + 1),
        stored.lines().count(),
        fresh.lines().count()
    ))
}
