//! Process-wide memo tables keyed by group fingerprint.
//!
//! Entries are populated under a lock held only for lookup and insertion; the
//! computation itself runs unlocked, and the first inserted result wins so every
//! caller sees the same value.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::character::table::CharacterTable;
use crate::error::Result;
use crate::group::PermGroup;

type Bucket<T> = Vec<(PermGroup, Arc<T>)>;

pub(crate) struct GroupCache<K, T> {
    map: Mutex<HashMap<(u64, K), Bucket<T>>>,
}

impl<K: std::hash::Hash + Eq + Clone, T> GroupCache<K, T> {
    pub(crate) fn new() -> Self {
        GroupCache {
            map: Mutex::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_compute(
        &self,
        group: &PermGroup,
        key: K,
        compute: impl FnOnce() -> Result<T>,
    ) -> Result<Arc<T>> {
        let fp = group.fingerprint()?;
        let lookup = |map: &HashMap<(u64, K), Bucket<T>>| {
            map.get(&(fp, key.clone()))
                .and_then(|b| b.iter().find(|(g, _)| g == group).map(|(_, v)| v.clone()))
        };
        if let Some(v) = lookup(&self.map.lock().expect("cache poisoned")) {
            return Ok(v);
        }
        let value = Arc::new(compute()?);
        let mut map = self.map.lock().expect("cache poisoned");
        if let Some(v) = lookup(&map) {
            return Ok(v);
        }
        map.entry((fp, key)).or_default().push((group.clone(), value.clone()));
        Ok(value)
    }
}

fn tables() -> &'static GroupCache<(), CharacterTable> {
    static CACHE: OnceLock<GroupCache<(), CharacterTable>> = OnceLock::new();
    CACHE.get_or_init(GroupCache::new)
}

/// The character table of `g`, computed once per distinct group.
pub fn character_table(g: &PermGroup) -> Result<Arc<CharacterTable>> {
    tables().get_or_compute(g, (), || CharacterTable::compute(g))
}
