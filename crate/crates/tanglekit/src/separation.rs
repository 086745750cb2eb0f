//! Separations (A, B): ordered pairs of vertex sets covering V with no
//! edge between A\B and B\A. Ordered pairs are deliberate: tangles orient
//! separations, and by convention the second component is the large side.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{Graph, VertexSet};

/// An ordered separation. Construction through [`Separation::new`] checks
/// the separation laws against a graph; the derived `Ord` gives the
/// canonical (sorted A, sorted B) ordering used everywhere for
/// deterministic output.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Separation {
    side_a: VertexSet,
    side_b: VertexSet,
}

impl Separation {
    pub fn new(g: &Graph, side_a: VertexSet, side_b: VertexSet) -> Result<Separation> {
        if !is_separation(g, &side_a, &side_b) {
            return Err(Error::NotASeparation);
        }
        Ok(Separation { side_a, side_b })
    }

    /// For callers that construct separations known to be valid
    /// (enumeration, augmentation by an apex set).
    pub fn from_sides(side_a: VertexSet, side_b: VertexSet) -> Separation {
        Separation { side_a, side_b }
    }

    pub fn side_a(&self) -> &VertexSet {
        &self.side_a
    }

    pub fn side_b(&self) -> &VertexSet {
        &self.side_b
    }

    pub fn separator(&self) -> VertexSet {
        self.side_a.intersection(&self.side_b).copied().collect()
    }

    pub fn order(&self) -> usize {
        self.side_a.intersection(&self.side_b).count()
    }

    pub fn reversed(&self) -> Separation {
        Separation { side_a: self.side_b.clone(), side_b: self.side_a.clone() }
    }
}

/// True iff side_a and side_b cover V(g) and no edge joins side_a\side_b
/// to side_b\side_a.
pub fn is_separation(g: &Graph, side_a: &VertexSet, side_b: &VertexSet) -> bool {
    if side_a.iter().chain(side_b.iter()).any(|&v| v >= g.vertex_count()) {
        return false;
    }
    if side_a.union(side_b).count() != g.vertex_count() {
        return false;
    }
    g.edges().all(|(u, v)| {
        let u_only_a = side_a.contains(&u) && !side_b.contains(&u);
        let v_only_a = side_a.contains(&v) && !side_b.contains(&v);
        let u_only_b = side_b.contains(&u) && !side_a.contains(&u);
        let v_only_b = side_b.contains(&v) && !side_a.contains(&v);
        !(u_only_a && v_only_b || u_only_b && v_only_a)
    })
}

/// Every ordered separation of order <= max_order, each exactly once, in
/// canonical order. Generated by iterating candidate separators S = A ∩ B
/// and assigning each component of g - S to a side.
pub fn enumerate_separations(g: &Graph, max_order: usize, cap: usize) -> Result<Vec<Separation>> {
    enumerate_separations_threaded(g, max_order, cap, 1)
}

/// Same as [`enumerate_separations`], with the separator-subset space
/// partitioned across worker threads. Output is identical for any thread
/// count.
pub fn enumerate_separations_threaded(
    g: &Graph,
    max_order: usize,
    cap: usize,
    threads: usize,
) -> Result<Vec<Separation>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::InstanceTooLarge { size: n, cap });
    }
    let mut separator_masks = Vec::new();
    for k in 0..=max_order.min(n) {
        separator_masks.extend(exec::subsets_of_size(n, k));
    }

    let per_separator = exec::map_chunked(&separator_masks, threads, |&mask| {
        let separator: VertexSet = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let parts = g.components(&separator);
        let mut out = Vec::with_capacity(1 << parts.len());
        for assignment in 0u64..(1 << parts.len()) {
            let mut side_a = separator.clone();
            let mut side_b = separator.clone();
            for (idx, part) in parts.iter().enumerate() {
                if assignment & (1 << idx) != 0 {
                    side_a.extend(part.iter().copied());
                } else {
                    side_b.extend(part.iter().copied());
                }
            }
            out.push(Separation { side_a, side_b });
        }
        out
    });

    let dedup: BTreeSet<Separation> = per_separator.into_iter().flatten().collect();
    Ok(dedup.into_iter().collect())
}
