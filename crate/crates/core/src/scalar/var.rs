//! Interned indeterminates.
//!
//! Every parameter and every generic-element coordinate is a [`Var`]. The
//! ordering of variables is the order in which they were first registered,
//! so the parameters of an algebra registered in declaration order compare
//! in declaration order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

#[derive(Default)]
struct Registry {
    names: Vec<Arc<str>>,
    ids: HashMap<Arc<str>, u32>,
}

fn registry() -> &'static RwLock<Registry> {
    static REGISTRY: OnceLock<RwLock<Registry>> = OnceLock::new();
    REGISTRY.get_or_init(Default::default)
}

impl Var {
    /// Returns the variable with this name, registering it on first use.
    pub fn named(name: &str) -> Var {
        if let Some(v) = Var::lookup(name) {
            return v;
        }
        let mut reg = registry().write().expect("variable registry poisoned");
        if let Some(&id) = reg.ids.get(name) {
            return Var(id);
        }
        let id = u32::try_from(reg.names.len()).expect("too many variables");
        let name: Arc<str> = Arc::from(name);
        reg.names.push(name.clone());
        reg.ids.insert(name, id);
        Var(id)
    }

    pub fn lookup(name: &str) -> Option<Var> {
        let reg = registry().read().expect("variable registry poisoned");
        reg.ids.get(name).map(|&id| Var(id))
    }

    pub fn name(self) -> Arc<str> {
        let reg = registry().read().expect("variable registry poisoned");
        reg.names[self.0 as usize].clone()
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Var({})", self.name())
    }
}
