//! Small deterministic fan-out helper. Work is split into contiguous
//! chunks, each chunk runs on its own thread, and results are merged in
//! chunk order, so the outcome does not depend on the thread count.

/// Applies `f` to every item, optionally on `threads` worker threads.
/// Output order matches input order.
pub(crate) fn map_chunked<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk_size = items.len().div_ceil(threads);
    let mut out: Vec<Vec<R>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk_size)
            .map(|chunk| scope.spawn(|| chunk.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        for h in handles {
            out.push(h.join().expect("worker panicked"));
        }
    });
    out.into_iter().flatten().collect()
}

/// Visits every size-k subset of {0..n} as a bitmask, ascending
/// (Gosper's hack).
pub(crate) fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(u64)) {
    if k == 0 {
        f(0);
        return;
    }
    if k > n {
        return;
    }
    let limit = 1u64 << n;
    let mut x: u64 = (1u64 << k) - 1;
    while x < limit {
        f(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

/// Collects every size-k subset mask, ascending.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    let mut masks = Vec::new();
    for_each_subset_of_size(n, k, |m| masks.push(m));
    masks
}
