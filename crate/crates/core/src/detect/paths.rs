//! Enumeration of induced paths between two fixed vertices.

use std::ops::ControlFlow;

use crate::graph::{SimpleGraph, VertexSet};

/// Calls `visit` on every induced path from `a` to `b` whose interior lies in
/// `pool`, depth-first with neighbors taken in ascending order.
///
/// When `a` and `b` are adjacent the single edge is the only induced path.
pub fn visit_induced_paths<B>(
    g: &SimpleGraph,
    a: usize,
    b: usize,
    pool: VertexSet,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    assert!(a != b, "path ends must differ");
    if g.has_edge(a, b) {
        return match visit(&[a, b]) {
            ControlFlow::Break(x) => Some(x),
            ControlFlow::Continue(()) => None,
        };
    }
    let pool = pool.without(a).without(b);
    let mut path = vec![a];
    match extend(g, b, pool, VertexSet::singleton(a), &mut path, &mut visit) {
        ControlFlow::Break(x) => Some(x),
        ControlFlow::Continue(()) => None,
    }
}

// `forbidden` holds the path and the neighbors of all path vertices but the last.
fn extend<B>(
    g: &SimpleGraph,
    b: usize,
    pool: VertexSet,
    forbidden: VertexSet,
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let last = *path.last().expect("path is non-empty");
    let next_forbidden = forbidden | g.neighbors(last);
    for w in (g.neighbors(last) & pool) - forbidden {
        path.push(w);
        if g.has_edge(w, b) {
            path.push(b);
            let r = visit(path);
            path.pop();
            path.pop();
            r?;
        } else {
            extend(g, b, pool, next_forbidden.with(w), path, visit)?;
            path.pop();
        }
    }
    ControlFlow::Continue(())
}

/// All induced `a`–`b` paths with interior in `pool`.
pub fn induced_paths(g: &SimpleGraph, a: usize, b: usize, pool: VertexSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    visit_induced_paths::<()>(g, a, b, pool, |p| {
        out.push(p.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Interior vertices of a path (all but the two ends).
pub fn interior(path: &[usize]) -> VertexSet {
    if path.len() <= 2 {
        VertexSet::EMPTY
    } else {
        path[1..path.len() - 1].iter().collect()
    }
}

/// A path stored with its interior and the closed neighborhood of that interior.
#[derive(Clone, Debug)]
pub(crate) struct Strand {
    pub path: Vec<usize>,
    pub inner: VertexSet,
    pub reach: VertexSet,
}

impl Strand {
    pub fn new(g: &SimpleGraph, path: Vec<usize>) -> Self {
        let inner = interior(&path);
        let reach = inner | g.neighborhood_of(inner);
        Strand { path, inner, reach }
    }

    /// Interiors are disjoint and anticomplete.
    #[inline]
    pub fn separated(&self, other: &Strand) -> bool {
        self.reach.is_disjoint(other.inner)
    }
}

/// First triple `(i, j, k)` (one strand from each list, lexicographic by
/// index) whose interiors are pairwise disjoint and anticomplete.
pub(crate) fn separated_triple(lists: [&[Strand]; 3]) -> Option<[usize; 3]> {
    for (i, p) in lists[0].iter().enumerate() {
        let second: Vec<usize> = (0..lists[1].len()).filter(|&j| p.separated(&lists[1][j])).collect();
        if second.is_empty() {
            continue;
        }
        let third: Vec<usize> = (0..lists[2].len()).filter(|&k| p.separated(&lists[2][k])).collect();
        for &j in &second {
            let q = &lists[1][j];
            if let Some(&k) = third.iter().find(|&&k| q.separated(&lists[2][k])) {
                return Some([i, j, k]);
            }
        }
    }
    None
}
