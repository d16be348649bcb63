//! Pluggable persistence for reduced bases.
//!
//! The library never touches the file system by itself. A front end may
//! install a [`BasisStore`]; memoized computations then consult it before
//! computing and hand it every freshly computed basis.

use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::exactla::ReducedBasis;
use crate::polyring::MONOMIAL_ORDER_TAG;

/// Bumped whenever the meaning of a stored basis changes.
pub const FORMAT_VERSION: u32 = 1;

/// Identifies one stored basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub kind: String,
    pub k: usize,
    pub n: Option<usize>,
    pub shape: Option<Vec<usize>>,
    pub degree: u32,
    pub order: String,
    pub version: u32,
}

impl CacheKey {
    pub fn new(kind: &str, k: usize, n: Option<usize>, shape: Option<&[usize]>, degree: u32) -> Self {
        CacheKey {
            kind: kind.to_string(),
            k,
            n,
            shape: shape.map(<[usize]>::to_vec),
            degree,
            order: MONOMIAL_ORDER_TAG.to_string(),
            version: FORMAT_VERSION,
        }
    }

    /// File-name friendly rendering, unique per key.
    pub fn file_stem(&self) -> String {
        let n = self.n.map_or_else(|| "x".to_string(), |n| n.to_string());
        let shape = self
            .shape
            .as_ref()
            .map_or_else(|| "x".to_string(), |s| s.iter().map(usize::to_string).collect::<Vec<_>>().join("-"));
        format!("{}_k{}_n{}_s{}_d{}_{}_v{}", self.kind, self.k, n, shape, self.degree, self.order, self.version)
    }
}

impl fmt::Display for CacheKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.file_stem())
    }
}

pub trait BasisStore: Send + Sync {
    fn load(&self, key: &CacheKey) -> Option<ReducedBasis>;
    fn store(&self, key: &CacheKey, basis: &ReducedBasis);
}

fn slot() -> &'static RwLock<Option<Arc<dyn BasisStore>>> {
    static SLOT: OnceLock<RwLock<Option<Arc<dyn BasisStore>>>> = OnceLock::new();
    SLOT.get_or_init(|| RwLock::new(None))
}

/// Installs (or with `None`, removes) the global store.
pub fn set_basis_store(store: Option<Arc<dyn BasisStore>>) {
    *slot().write().expect("store slot poisoned") = store;
}

pub fn basis_store() -> Option<Arc<dyn BasisStore>> {
    slot().read().expect("store slot poisoned").clone()
}
