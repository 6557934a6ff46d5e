use std::collections::HashMap;
use std::path::Path;

use crate::exprcas::{parse_expr, substitute_all, ParseError, RatExpr, Symbol};

/// Bundled formula file, one `NAME := expression` definition per line.
pub const BUNDLED: &str = include_str!("../../formulas/appendixA.txt");

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("cannot read formula corpus {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: expected `NAME := expression`")]
    Malformed { line: usize },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
    #[error("line {line}: `{name}` defined twice")]
    Duplicate { line: usize, name: String },
    #[error("corpus has no definition for `{0}`")]
    Missing(String),
}

/// Named expressions with earlier definitions expanded into later ones.
#[derive(Clone, Debug)]
pub struct Corpus {
    order: Vec<String>,
    defs: HashMap<String, RatExpr>,
    raw: HashMap<String, RatExpr>,
}

impl Corpus {
    pub fn bundled() -> Corpus {
        Corpus::parse(BUNDLED).expect("bundled corpus is well formed")
    }

    pub fn from_path(path: &Path) -> Result<Corpus, CorpusError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CorpusError::Io { path: path.display().to_string(), source })?;
        Corpus::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Corpus, CorpusError> {
        let mut corpus = Corpus { order: Vec::new(), defs: HashMap::new(), raw: HashMap::new() };
        let mut expand: HashMap<Symbol, RatExpr> = HashMap::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (name, expr) = body.split_once(":=").ok_or(CorpusError::Malformed { line: line_no })?;
            let name = name.trim();
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(CorpusError::Malformed { line: line_no });
            }
            if corpus.defs.contains_key(name) {
                return Err(CorpusError::Duplicate { line: line_no, name: name.to_string() });
            }
            let raw = parse_expr(expr).map_err(|source| CorpusError::Parse { line: line_no, source })?;
            let full = substitute_all(&raw, &expand);
            expand.insert(Symbol::new(name), full.clone());
            corpus.order.push(name.to_string());
            corpus.raw.insert(name.to_string(), raw);
            corpus.defs.insert(name.to_string(), full);
        }
        Ok(corpus)
    }

    /// Fully expanded definition.
    pub fn get(&self, name: &str) -> Result<&RatExpr, CorpusError> {
        self.defs.get(name).ok_or_else(|| CorpusError::Missing(name.to_string()))
    }

    /// Definition as written, before expanding earlier names.
    pub fn raw(&self, name: &str) -> Option<&RatExpr> {
        self.raw.get(name)
    }

    pub fn names(&self) -> &[String] {
        &self.order
    }
}
