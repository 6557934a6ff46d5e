use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

/// Variables known up front. Their table position fixes the monomial order
/// so canonical forms are identical from run to run.
const PRELOADED: &[&str] = &[
    "n", "q", "p", "l", "beta", "gamma", "k", "d", "sigma", "tau", "delta", "epsilon", "rho",
    "theta", "x", "y", "z", "H", "L", "S1", "S2", "S3",
];

#[derive(Default)]
struct Interner {
    names: Vec<Arc<str>>,
    index: HashMap<Arc<str>, u32>,
}

impl Interner {
    fn intern(&mut self, name: &str) -> u32 {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let id = self.names.len() as u32;
        let name: Arc<str> = Arc::from(name);
        self.names.push(name.clone());
        self.index.insert(name, id);
        id
    }
}

fn table() -> &'static RwLock<Interner> {
    static TABLE: OnceLock<RwLock<Interner>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Interner::default();
        for name in PRELOADED {
            t.intern(name);
        }
        RwLock::new(t)
    })
}

/// Interned variable name. Ordering follows table position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u32);

impl Symbol {
    pub fn new(name: &str) -> Symbol {
        if let Some(&i) = table().read().expect("symbol table poisoned").index.get(name) {
            return Symbol(i);
        }
        Symbol(table().write().expect("symbol table poisoned").intern(name))
    }

    pub fn name(&self) -> Arc<str> {
        table().read().expect("symbol table poisoned").names[self.0 as usize].clone()
    }
}

impl From<&str> for Symbol {
    fn from(name: &str) -> Symbol {
        Symbol::new(name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol({})", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let a = Symbol::new("some_new_var");
        let b = Symbol::new("some_new_var");
        assert_eq!(a, b);
        assert_eq!(&*a.name(), "some_new_var");
        assert!(Symbol::new("n") < Symbol::new("q"));
        assert!(Symbol::new("S3") < a);
    }
}
