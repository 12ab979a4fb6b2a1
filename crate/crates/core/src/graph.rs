//! Immutable simple graphs over dense vertex indices, with bitset adjacency.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count any graph may have.
pub const MAX_VERTICES: usize = 128;

/// A set of vertices of some ambient graph, stored as a single 128-bit word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds cap");
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex {v} exceeds cap");
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        *self |= VertexSet::singleton(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        self | VertexSet::singleton(v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members strictly greater than `v`.
    #[inline]
    pub fn above(self, v: usize) -> Self {
        if v + 1 >= MAX_VERTICES {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & (u128::MAX << (v + 1)))
        }
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} exceeds cap")));
        }
        Ok(v.into_iter().collect())
    }
}

/// An ordered list of distinct vertices, read as a path or a cycle.
pub type PathSeq = Vec<usize>;

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; values are never mutated after
/// construction, so they can be shared freely between worker threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds cap {MAX_VERTICES}");
        SimpleGraph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, cap: MAX_VERTICES });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::contract(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::contract(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(SimpleGraph { n, adj })
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, cap: MAX_VERTICES });
        }
        let all = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if !row.is_subset(all) || row.contains(v) {
                return Err(Error::contract(format!("bad adjacency row for vertex {v}")));
            }
            if row.iter().any(|u| !adj[u].contains(v)) {
                return Err(Error::contract(format!("asymmetric adjacency at vertex {v}")));
            }
        }
        Ok(SimpleGraph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(SimpleGraph::from_adjacency(adj.clone()).is_ok());
        SimpleGraph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Self {
        let all = VertexSet::full(n);
        Self::from_adjacency_unchecked((0..n).map(|v| all.without(v)).collect())
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    /// The cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::from_edges(a + b, &edges).expect("bipartite edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].above(u).iter().map(move |v| (u, v)))
    }

    /// Vertices outside `set` with a neighbor in `set`.
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set {
            out |= self.adj[v];
        }
        out - set
    }

    /// Neighbors of `v` inside `set`.
    #[inline]
    pub fn neighbors_in(&self, v: usize, set: VertexSet) -> VertexSet {
        self.adj[v] & set
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// New graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> SimpleGraph {
        assert!(u < self.n && v < self.n && u != v, "invalid edge {u}-{v}");
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        SimpleGraph { n: self.n, adj }
    }

    /// New graph with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> SimpleGraph {
        assert!(u < self.n && v < self.n, "invalid edge {u}-{v}");
        let mut adj = self.adj.clone();
        adj[u].remove(v);
        adj[v].remove(u);
        SimpleGraph { n: self.n, adj }
    }

    /// New graph with one extra vertex `n` adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<SimpleGraph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooLarge {
                n: self.n + 1,
                cap: MAX_VERTICES,
            });
        }
        if !nbrs.is_subset(self.vertices()) {
            return Err(Error::contract("new vertex neighbors out of range"));
        }
        let v = self.n;
        let mut adj = self.adj.clone();
        for u in nbrs {
            adj[u].insert(v);
        }
        adj.push(nbrs);
        Ok(SimpleGraph { n: v + 1, adj })
    }

    pub fn complement(&self) -> SimpleGraph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| (all - self.adj[v]).without(v)).collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Graph induced by `set`, relabeled `0..|set|` in ascending order.
    ///
    /// The second component maps each new index to its original vertex.
    pub fn induced_subgraph(&self, set: VertexSet) -> (SimpleGraph, Vec<usize>) {
        assert!(set.is_subset(self.vertices()), "induced_subgraph: member out of range");
        let map = set.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & set).iter().map(|u| pos[u]).collect())
            .collect();
        (SimpleGraph { n: map.len(), adj }, map)
    }

    /// Applies `perm` (old vertex -> new vertex) to produce an isomorphic copy.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n, "relabel: permutation length mismatch");
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        SimpleGraph::from_adjacency(adj).expect("relabel: permutation is not a bijection")
    }

    /// Disjoint union, with `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, cap: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        for row in &other.adj {
            adj.push(VertexSet::from_bits(row.bits() << self.n));
        }
        Ok(SimpleGraph { n, adj })
    }

    /// Connected components in order of their least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced by `set`.
    pub fn components_within(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut left = set;
        let mut out = Vec::new();
        while let Some(s) = left.min() {
            let comp = self.reach(s, set);
            left = left - comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `set` (which must contain `s`).
    pub fn reach(&self, s: usize, set: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = (next & set) - seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.min() {
            None => true,
            Some(s) => self.reach(s, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// True iff no edge joins `x` to `y`.
    ///
    /// # Panics
    /// If `x` and `y` overlap.
    pub fn is_anticomplete(&self, x: VertexSet, y: VertexSet) -> bool {
        assert!(x.is_disjoint(y), "is_anticomplete: sets overlap");
        x.iter().all(|v| self.adj[v].is_disjoint(y))
    }

    /// True iff every vertex of `x` is adjacent to every vertex of `y`.
    ///
    /// # Panics
    /// If `x` and `y` overlap.
    pub fn is_complete_to(&self, x: VertexSet, y: VertexSet) -> bool {
        assert!(x.is_disjoint(y), "is_complete_to: sets overlap");
        x.iter().all(|v| y.is_subset(self.adj[v]))
    }

    /// True iff `seq` is an induced path: consecutive vertices adjacent,
    /// all other pairs non-adjacent.
    ///
    /// # Panics
    /// If `seq` repeats a vertex or names one out of range.
    pub fn is_induced_path(&self, seq: &[usize]) -> bool {
        let set = self.checked_set(seq);
        seq.iter().enumerate().all(|(i, &v)| {
            let mut expect = VertexSet::EMPTY;
            if i > 0 {
                expect.insert(seq[i - 1]);
            }
            if i + 1 < seq.len() {
                expect.insert(seq[i + 1]);
            }
            self.adj[v] & set == expect
        })
    }

    /// True iff `seq` (length at least 4) is a hole in cyclic order.
    ///
    /// # Panics
    /// If `seq` repeats a vertex or names one out of range.
    pub fn is_hole(&self, seq: &[usize]) -> bool {
        let k = seq.len();
        let set = self.checked_set(seq);
        k >= 4
            && seq.iter().enumerate().all(|(i, &v)| {
                let expect = VertexSet::singleton(seq[(i + 1) % k]).with(seq[(i + k - 1) % k]);
                self.adj[v] & set == expect
            })
    }

    pub(crate) fn checked_set(&self, seq: &[usize]) -> VertexSet {
        let mut set = VertexSet::EMPTY;
        for &v in seq {
            assert!(v < self.n, "vertex {v} out of range for n={}", self.n);
            assert!(!set.contains(v), "vertex {v} repeated in sequence");
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> SimpleGraph {
        SimpleGraph::complete(3)
    }

    #[test]
    fn induced_subgraph_examples() {
        let (g, map) = k3().induced_subgraph(VertexSet::from_iter([0, 1]));
        assert_eq!(g, SimpleGraph::complete(2));
        assert_eq!(map, vec![0, 1]);

        let (g, _) = SimpleGraph::cycle(5).induced_subgraph(VertexSet::EMPTY);
        assert_eq!(g.n(), 0);

        let (g, map) = SimpleGraph::cycle(5).induced_subgraph(VertexSet::from_iter([3, 4, 0]));
        assert_eq!(map, vec![0, 3, 4]);
        // 3-4-0 is a path with centre 4, relabelled to 2
        assert_eq!(g, SimpleGraph::from_edges(3, &[(0, 2), (1, 2)]).unwrap());
    }

    #[test]
    fn induced_subgraph_of_everything_is_identity() {
        let g = SimpleGraph::cycle(7).with_edge(0, 3);
        let (h, map) = g.induced_subgraph(g.vertices());
        assert_eq!(h, g);
        assert_eq!(map, (0..7).collect::<Vec<_>>());
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn induced_subgraph_rejects_out_of_range() {
        k3().induced_subgraph(VertexSet::singleton(5));
    }

    #[test]
    fn anticomplete_examples() {
        let p3 = SimpleGraph::path(3);
        let s = VertexSet::singleton;
        assert!(p3.is_anticomplete(s(0), s(2)));
        assert!(!p3.is_anticomplete(s(0), s(1)));
        assert!(p3.is_anticomplete(s(0), VertexSet::EMPTY));
        assert!(p3.is_complete_to(s(1), s(0).with(2)));
    }

    #[test]
    #[should_panic(expected = "overlap")]
    fn anticomplete_rejects_overlap() {
        let p3 = SimpleGraph::path(3);
        p3.is_anticomplete(VertexSet::from_iter([0, 1]), VertexSet::singleton(1));
    }

    #[test]
    fn induced_path_examples() {
        let c4 = SimpleGraph::cycle(4);
        assert!(c4.is_induced_path(&[0, 1, 2]));
        assert!(!c4.is_induced_path(&[0, 1, 2, 3]));
        assert!(!k3().is_induced_path(&[0, 1, 2]));
        assert!(c4.is_hole(&[0, 1, 2, 3]));
        assert!(!c4.is_hole(&[0, 2, 1, 3]));
    }

    #[test]
    #[should_panic(expected = "repeated")]
    fn induced_path_rejects_duplicates() {
        SimpleGraph::cycle(4).is_induced_path(&[0, 1, 0]);
    }

    #[test]
    fn components_partition() {
        let g = SimpleGraph::from_edges(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(
            comps,
            vec![
                VertexSet::from_iter([0, 1]),
                VertexSet::from_iter([2, 3, 4]),
                VertexSet::singleton(5)
            ]
        );
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                assert!(g.is_anticomplete(*a, *b));
            }
        }
    }

    #[test]
    fn rejects_loops_and_oversize() {
        assert!(SimpleGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(matches!(SimpleGraph::from_edges(129, &[]), Err(Error::TooLarge { .. })));
        assert!(SimpleGraph::from_edges(128, &[(0, 127)]).is_ok());
    }

    #[test]
    fn vertex_set_ops() {
        let s = VertexSet::from_iter([1, 5, 127]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.min(), Some(1));
        assert_eq!(s.max(), Some(127));
        assert_eq!(s.above(1).to_vec(), vec![5, 127]);
        assert_eq!(s.above(127), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(128).len(), 128);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[1,5,127]");
        assert_eq!(serde_json::from_str::<VertexSet>(&json).unwrap(), s);
    }
}
