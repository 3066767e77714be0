//! Memo store for `Ver_p(SL(n))` fusion products.
//!
//! Fusion is a pure function, so the cache only ever trades recomputation
//! for memory. Concurrent callers may both compute the same product; the
//! second insert overwrites an identical value.

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::{AlcoveWeight, FusionExpansion, SLnParams};
use crate::error::{Error, Result};
use crate::prime::Prime;

type Key = (SLnParams, Vec<u32>, Vec<u32>);

#[derive(Default)]
pub struct FusionCache {
    map: RwLock<HashMap<Key, FusionExpansion>>,
}

static GLOBAL: OnceLock<FusionCache> = OnceLock::new();

pub fn global() -> &'static FusionCache {
    GLOBAL.get_or_init(FusionCache::default)
}

#[derive(Serialize, Deserialize)]
struct Entry {
    p: u32,
    n: u32,
    lambda: Vec<u32>,
    mu: Vec<u32>,
    result: Vec<(Vec<u32>, u64)>,
}

#[derive(Serialize, Deserialize)]
struct Store {
    version: u32,
    entries: Vec<Entry>,
}

impl FusionCache {
    pub fn get_or_compute(
        &self,
        lambda: &AlcoveWeight,
        mu: &AlcoveWeight,
        compute: impl FnOnce() -> FusionExpansion,
    ) -> FusionExpansion {
        let key = (lambda.params, lambda.parts.clone(), mu.parts.clone());
        if let Some(hit) = self.map.read().expect("cache lock poisoned").get(&key) {
            return hit.clone();
        }
        let value = compute();
        self.map.write().expect("cache lock poisoned").insert(key, value.clone());
        value
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().expect("cache lock poisoned").clear();
    }

    /// Merge entries from a JSON store. A missing file is not an error.
    pub fn load(&self, path: &Path) -> Result<usize> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(Error::invalid(format!("reading {}: {e}", path.display()))),
        };
        let store: Store = serde_json::from_str(&text)
            .map_err(|e| Error::invalid(format!("parsing cache {}: {e}", path.display())))?;
        if store.version != 1 {
            return Err(Error::invalid(format!("unknown cache version {}", store.version)));
        }
        let mut map = self.map.write().expect("cache lock poisoned");
        let mut loaded = 0;
        for e in store.entries {
            let params = SLnParams::new(Prime::new(e.p)?, e.n)?;
            let lambda = AlcoveWeight::new(params, &e.lambda)?;
            let mu = AlcoveWeight::new(params, &e.mu)?;
            let mut value = FusionExpansion::zero(params);
            for (parts, m) in e.result {
                value.add_term(AlcoveWeight::new(params, &parts)?, m);
            }
            map.insert((params, lambda.parts, mu.parts), value);
            loaded += 1;
        }
        Ok(loaded)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let map = self.map.read().expect("cache lock poisoned");
        let mut entries: Vec<Entry> = map
            .iter()
            .map(|((params, l, m), v)| Entry {
                p: params.prime().get(),
                n: params.n(),
                lambda: l.clone(),
                mu: m.clone(),
                result: v.terms().iter().map(|(w, &c)| (w.parts().to_vec(), c)).collect(),
            })
            .collect();
        entries.sort_by(|a, b| (a.p, a.n, &a.lambda, &a.mu).cmp(&(b.p, b.n, &b.lambda, &b.mu)));
        let text = serde_json::to_string(&Store { version: 1, entries })
            .map_err(|e| Error::invalid(e.to_string()))?;
        fs::write(path, text).map_err(|e| Error::invalid(format!("writing {}: {e}", path.display())))
    }
}
