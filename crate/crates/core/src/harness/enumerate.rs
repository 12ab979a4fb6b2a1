//! Orderly generation of all graphs up to isomorphism by canonical
//! augmentation: each graph on `n` vertices is produced exactly once, as a
//! child of a graph on `n - 1` vertices plus a new last vertex.

use rayon::prelude::*;

use crate::graph::{SimpleGraph, VertexSet};

use super::canon::{canonical_form, Perm};

/// Largest order the enumerator supports.
pub const ENUM_MAX: usize = 10;

/// A generated graph with generators of its automorphism group.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: SimpleGraph,
    pub generators: Vec<Perm>,
}

fn invariant(g: &SimpleGraph, v: usize) -> u32 {
    let nsum: usize = g.neighbors(v).iter().map(|u| g.degree(u)).sum();
    (g.degree(v) * 1024 + nsum) as u32
}

/// The children of `parent` in the generation tree, in order of the
/// neighborhood mask of the new vertex.
pub fn children(parent: &Generated) -> Vec<Generated> {
    let n = parent.graph.n();
    let subsets = 1usize << n;
    // representative = least mask in its orbit under Aut(parent)
    let mut rep: Vec<u32> = (0..subsets as u32).collect();
    fn find(r: &mut [u32], mut x: u32) -> u32 {
        while r[x as usize] != x {
            r[x as usize] = r[r[x as usize] as usize];
            x = r[x as usize];
        }
        x
    }
    for g in &parent.generators {
        for mask in 0..subsets as u32 {
            let mut img = 0u32;
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros();
                m &= m - 1;
                img |= 1 << g[v as usize];
            }
            let (a, b) = (find(&mut rep, mask), find(&mut rep, img));
            if a != b {
                rep[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut out = Vec::new();
    for mask in 0..subsets as u32 {
        if find(&mut rep, mask) != mask {
            continue;
        }
        let child = parent
            .graph
            .with_vertex(VertexSet::from_bits(mask as u128))
            .expect("within cap");
        if let Some(generated) = accept(child) {
            out.push(generated);
        }
    }
    out
}

/// Keeps `g` iff its last vertex lies in the orbit of the canonically
/// chosen vertex: the maximum-invariant vertex placed last canonically.
fn accept(g: SimpleGraph) -> Option<Generated> {
    let v = g.n() - 1;
    let inv: Vec<u32> = (0..g.n()).map(|u| invariant(&g, u)).collect();
    let top = *inv.iter().max().expect("non-empty");
    if inv[v] < top {
        return None;
    }
    let cf = canonical_form(&g);
    let unique = inv.iter().filter(|&&x| x == top).count() == 1;
    if !unique {
        let pos = cf.positions();
        let m = (0..g.n())
            .filter(|&u| inv[u] == top)
            .max_by_key(|&u| pos[u])
            .expect("some vertex has the top invariant");
        let orb = cf.orbits();
        if orb[m] != orb[v] {
            return None;
        }
    }
    Some(Generated {
        graph: g,
        generators: cf.generators,
    })
}

fn root() -> Generated {
    Generated {
        graph: SimpleGraph::empty(1),
        generators: Vec::new(),
    }
}

/// The next level, generated in parallel and kept in parent order.
pub fn next_level(parents: &[Generated]) -> Vec<Generated> {
    parents.par_iter().flat_map_iter(children).collect()
}

/// All levels `1..=max_n` (index `i` holds the graphs on `i + 1` vertices).
pub fn levels(max_n: usize) -> Vec<Vec<Generated>> {
    assert!(max_n <= ENUM_MAX, "enumeration supports n <= {ENUM_MAX}");
    let mut out: Vec<Vec<Generated>> = Vec::new();
    if max_n == 0 {
        return out;
    }
    out.push(vec![root()]);
    while out.len() < max_n {
        let next = next_level(out.last().expect("non-empty"));
        out.push(next);
    }
    out
}

/// One graph per isomorphism class on `n` vertices, keeping those that pass `filter`.
pub fn enumerate_graphs(n: usize, filter: impl Fn(&SimpleGraph) -> bool + Sync) -> Vec<SimpleGraph> {
    if n == 0 {
        let g = SimpleGraph::empty(0);
        return if filter(&g) { vec![g] } else { Vec::new() };
    }
    let mut all = levels(n);
    all.pop()
        .expect("n >= 1")
        .into_par_iter()
        .map(|x| x.graph)
        .filter(|g| filter(g))
        .collect()
}

/// Folds `f` over every graph on `n` vertices without storing the last
/// level. Results of different parents are combined with `reduce` in
/// parent order, so the outcome does not depend on the thread count as
/// long as `reduce` is associative.
pub fn fold_graphs<T, F, R>(n: usize, identity: impl Fn() -> T + Sync + Send, f: F, reduce: R) -> T
where
    T: Send,
    F: Fn(T, &SimpleGraph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    assert!((1..=ENUM_MAX).contains(&n), "enumeration supports 1 <= n <= {ENUM_MAX}");
    if n == 1 {
        return f(identity(), &SimpleGraph::empty(1));
    }
    let parents = levels(n - 1).pop().expect("n - 1 >= 1");
    parents
        .par_iter()
        .map(|p| children(p).iter().fold(identity(), |acc, c| f(acc, &c.graph)))
        .collect::<Vec<T>>()
        .into_iter()
        .fold(identity(), &reduce)
}

/// Known counts of graphs on `n` vertices up to isomorphism, `n = 0..=10`.
pub const UNLABELED_COUNTS: [u64; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

/// Known counts of connected graphs up to isomorphism, `n = 0..=10`.
pub const CONNECTED_COUNTS: [u64; 11] = [1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let lv = levels(7);
        for (i, level) in lv.iter().enumerate() {
            assert_eq!(level.len() as u64, UNLABELED_COUNTS[i + 1], "n = {}", i + 1);
        }
        assert_eq!(enumerate_graphs(5, |g| g.is_connected()).len(), 21);
        assert_eq!(enumerate_graphs(0, |_| true).len(), 1);
        assert_eq!(enumerate_graphs(1, |_| true), vec![SimpleGraph::empty(1)]);
    }

    #[test]
    fn fold_matches_levels() {
        let count = fold_graphs(6, || 0u64, |acc, _| acc + 1, |a, b| a + b);
        assert_eq!(count, 156);
        let connected = fold_graphs(6, || 0u64, |acc, g| acc + g.is_connected() as u64, |a, b| a + b);
        assert_eq!(connected, 112);
    }
}
