//! Memo tables for the expensive symbolic kernels.
//!
//! With the `std` feature the tables are process-wide and shared between
//! threads; concurrent writers may race only to insert identical values, so a
//! plain `RwLock` is enough.  Without `std` the "cache" recomputes every
//! time — same results, more work.

#[cfg(feature = "std")]
mod imp {
    use std::collections::BTreeMap;
    use std::sync::RwLock;

    pub(crate) struct Cache<K, V> {
        map: RwLock<BTreeMap<K, V>>,
    }

    impl<K: Ord + Clone, V: Clone> Cache<K, V> {
        pub(crate) const fn new() -> Self {
            Cache { map: RwLock::new(BTreeMap::new()) }
        }

        pub(crate) fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> V {
            if let Some(v) = self.map.read().unwrap().get(key) {
                return v.clone();
            }
            // Compute outside the lock: `compute` may itself recurse into
            // this cache.
            let v = compute();
            let mut map = self.map.write().unwrap();
            map.entry(key.clone()).or_insert_with(|| v.clone());
            v
        }
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    use core::marker::PhantomData;

    pub(crate) struct Cache<K, V> {
        _marker: PhantomData<fn() -> (K, V)>,
    }

    impl<K, V> Cache<K, V> {
        pub(crate) const fn new() -> Self {
            Cache { _marker: PhantomData }
        }

        pub(crate) fn get_or_insert_with(&self, _key: &K, compute: impl FnOnce() -> V) -> V {
            compute()
        }
    }
}

pub(crate) use imp::Cache;
