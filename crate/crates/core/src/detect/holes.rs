//! Hole enumeration by induced-path extension.
//!
//! Every hole is reported exactly once, in its canonical orientation:
//! it starts at its least vertex `c0`, and `c1 < c_last`. Holes anchored
//! at a smaller `c0` come first; within an anchor the depth-first search
//! takes neighbors in ascending order, so holes are produced in
//! lexicographic order of their canonical sequences.

use std::ops::ControlFlow;

use crate::graph::{SimpleGraph, VertexSet};

use super::certificate::Certificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Any,
    Even,
    Odd,
}

impl Parity {
    #[inline]
    pub fn admits(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => len % 2 == 0,
            Parity::Odd => len % 2 == 1,
        }
    }
}

/// Calls `visit` on every hole of `g[within]` whose length lies in
/// `min_len..=max_len`, in canonical lexicographic order. Stops early when
/// the visitor breaks.
pub fn visit_holes<B>(
    g: &SimpleGraph,
    within: VertexSet,
    min_len: usize,
    max_len: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    let min_len = min_len.max(4);
    if max_len < min_len {
        return None;
    }
    let mut path = Vec::with_capacity(max_len);
    for s in within {
        let pool = within.above(s);
        if (g.neighbors(s) & pool).len() < 2 {
            continue;
        }
        path.clear();
        path.push(s);
        let mut search = Search {
            g,
            pool,
            min_len,
            max_len,
            path: &mut path,
        };
        if let ControlFlow::Break(b) = search.first_steps(&mut visit) {
            return Some(b);
        }
    }
    None
}

struct Search<'a> {
    g: &'a SimpleGraph,
    pool: VertexSet,
    min_len: usize,
    max_len: usize,
    path: &'a mut Vec<usize>,
}

impl Search<'_> {
    fn first_steps<B>(&mut self, visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>) -> ControlFlow<B> {
        let s = self.path[0];
        for p1 in self.g.neighbors(s) & self.pool {
            self.path.push(p1);
            let forbidden = VertexSet::singleton(s).with(p1);
            self.extend(forbidden, visit)?;
            self.path.pop();
        }
        ControlFlow::Continue(())
    }

    /// `forbidden` holds the path plus the neighbors of every interior vertex.
    fn extend<B>(
        &mut self,
        forbidden: VertexSet,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let g = self.g;
        let s = self.path[0];
        let p1 = self.path[1];
        let last = *self.path.last().expect("path is non-empty");
        let k = self.path.len();
        let candidates = (g.neighbors(last) & self.pool) - forbidden;
        for u in candidates {
            if g.has_edge(u, s) {
                // closing: cycle length k + 1, never a triangle since k >= 3 here
                let len = k + 1;
                if k >= 3 && len >= self.min_len && len <= self.max_len && p1 < u {
                    self.path.push(u);
                    let r = visit(self.path);
                    self.path.pop();
                    r?;
                }
            } else if k + 2 <= self.max_len {
                self.path.push(u);
                self.extend((forbidden | g.neighbors(last)).with(u), visit)?;
                self.path.pop();
            }
        }
        ControlFlow::Continue(())
    }
}

/// All holes of `g` as canonical sequences, in canonical order.
pub fn all_holes(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    visit_holes::<()>(g, g.vertices(), 4, g.n(), |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// The lexicographically least canonical hole with the requested parity and
/// length at least `min_len`.
///
/// # Panics
/// If `min_len < 4`.
pub fn find_hole(g: &SimpleGraph, parity: Parity, min_len: usize) -> Option<Certificate> {
    find_hole_within(g, g.vertices(), parity, min_len)
}

pub fn find_hole_within(g: &SimpleGraph, within: VertexSet, parity: Parity, min_len: usize) -> Option<Certificate> {
    assert!(min_len >= 4, "holes have at least four vertices");
    visit_holes(g, within, min_len, within.len(), |c| {
        if parity.admits(c.len()) {
            ControlFlow::Break(c.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    })
    .map(|cycle| Certificate::Hole { cycle })
}

/// Cheap test for an induced four-cycle: two non-adjacent vertices with two
/// non-adjacent common neighbors.
pub fn has_c4(g: &SimpleGraph) -> bool {
    let n = g.n();
    for u in 0..n {
        let non = g.vertices().above(u) - g.neighbors(u);
        for w in non {
            let common = g.neighbors(u) & g.neighbors(w);
            if common.len() >= 2 && !g.is_clique(common) {
                return true;
            }
        }
    }
    false
}

/// The lexicographically least induced four-cycle.
pub fn find_c4(g: &SimpleGraph) -> Option<Certificate> {
    if !has_c4(g) {
        return None;
    }
    visit_holes(g, g.vertices(), 4, 4, |c| ControlFlow::Break(c.to_vec())).map(|cycle| Certificate::Hole { cycle })
}

/// Rotates and reflects a cycle into canonical orientation.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let (start, _) = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .expect("cycle is non-empty");
    let fwd: Vec<usize> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| cycle[(start + k - i) % k]).collect();
    fwd.min(bwd)
}
