//! Thread-safe memo tables. Values are computed under the write lock and
//! published whole, so readers never observe a partially filled table.

use std::sync::{Arc, RwLock};

/// A prefix `v_0, v_1, ...` extended on demand, each term computed from the
/// terms before it.
pub(crate) struct PrefixMemo<T> {
    values: RwLock<Option<Arc<Vec<T>>>>,
}

impl<T: Clone> PrefixMemo<T> {
    pub(crate) const fn new() -> Self {
        PrefixMemo { values: RwLock::new(None) }
    }

    /// All terms through index `n`.
    pub(crate) fn upto(&self, n: usize, next: impl Fn(&[T]) -> T) -> Arc<Vec<T>> {
        {
            let current = self.values.read().expect("memo lock poisoned");
            if let Some(v) = current.as_ref().filter(|v| v.len() > n) {
                return Arc::clone(v);
            }
        }
        let mut slot = self.values.write().expect("memo lock poisoned");
        let have = slot.as_ref().map_or(0, |v| v.len());
        if have <= n {
            let mut extended: Vec<T> = slot.as_deref().cloned().unwrap_or_default();
            while extended.len() <= n {
                let v = next(&extended);
                extended.push(v);
            }
            *slot = Some(Arc::new(extended));
        }
        Arc::clone(slot.as_ref().expect("just filled"))
    }

    pub(crate) fn get(&self, n: usize, next: impl Fn(&[T]) -> T) -> T {
        self.upto(n, next)[n].clone()
    }
}

/// A single value that is rebuilt at a larger size when a caller needs more
/// than the cached one covers. Sizes at least double on each rebuild.
pub(crate) struct GrowMemo<T> {
    value: RwLock<Option<(usize, Arc<T>)>>,
}

impl<T> GrowMemo<T> {
    pub(crate) const fn new() -> Self {
        GrowMemo { value: RwLock::new(None) }
    }

    pub(crate) fn at_least(&self, size: usize, build: impl Fn(usize) -> T) -> Arc<T> {
        {
            let current = self.value.read().expect("memo lock poisoned");
            if let Some((s, v)) = current.as_ref() {
                if *s >= size {
                    return Arc::clone(v);
                }
            }
        }
        let mut slot = self.value.write().expect("memo lock poisoned");
        let old = slot.as_ref().map(|(s, _)| *s);
        if old.is_none_or(|old| old < size) {
            let old = old.unwrap_or(0);
            let target = size.max(2 * old);
            *slot = Some((target, Arc::new(build(target))));
        }
        Arc::clone(&slot.as_ref().expect("just filled").1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_extends_in_order() {
        let fib: PrefixMemo<u64> = PrefixMemo::new();
        let next = |p: &[u64]| match p.len() {
            0 | 1 => 1,
            n => p[n - 1] + p[n - 2],
        };
        assert_eq!(fib.get(10, next), 89);
        assert_eq!(fib.get(3, next), 3);
        assert_eq!(fib.upto(3, next).len(), 11);
    }

    #[test]
    fn concurrent_readers_agree() {
        let memo: Arc<PrefixMemo<u64>> = Arc::new(PrefixMemo::new());
        let handles: Vec<_> = (0..8)
            .map(|t| {
                let memo = Arc::clone(&memo);
                std::thread::spawn(move || memo.get(20 + t, |p| p.len() as u64 * 2))
            })
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), (20 + t as u64) * 2);
        }
    }

    #[test]
    fn grow_doubles() {
        let m: GrowMemo<Vec<usize>> = GrowMemo::new();
        assert_eq!(m.at_least(3, |s| (0..s).collect()).len(), 3);
        assert_eq!(m.at_least(4, |s| (0..s).collect()).len(), 6);
        assert_eq!(m.at_least(5, |s| (0..s).collect()).len(), 6);
        let z: GrowMemo<usize> = GrowMemo::new();
        assert_eq!(*z.at_least(0, |s| s + 7), 7);
    }
}
