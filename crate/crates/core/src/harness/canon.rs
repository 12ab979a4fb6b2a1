//! Canonical labeling and automorphism generators for small graphs.
//!
//! Individualization-refinement in the style of nauty: equitable
//! refinement, individualize the first non-singleton cell, keep the leaf
//! with the least adjacency key. Automorphisms found by comparing leaves
//! are used to prune sibling branches.

use crate::graph::SimpleGraph;

/// Largest vertex count the canonical labeler accepts (the key is a `u128`
/// holding the upper triangle).
pub const CANON_MAX: usize = 16;

/// A permutation of `0..n`: `perm[v]` is the image of `v`.
pub type Perm = Vec<u8>;

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Upper-triangle adjacency bits of the relabeled graph, first pair most significant.
    pub key: u128,
    /// `lab[i]` is the vertex placed at canonical position `i`.
    pub lab: Vec<u8>,
    /// Generators of the automorphism group.
    pub generators: Vec<Perm>,
}

impl CanonicalForm {
    /// Canonical position of each vertex.
    pub fn positions(&self) -> Vec<u8> {
        let mut pos = vec![0u8; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        pos
    }

    /// Orbit representative (least member) of each vertex under the automorphism group.
    pub fn orbits(&self) -> Vec<u8> {
        orbits(self.lab.len(), self.generators.iter())
    }
}

/// Least member of each vertex's orbit under the group generated by `gens`.
pub fn orbits<'a>(n: usize, gens: impl Iterator<Item = &'a Perm>) -> Vec<u8> {
    let mut parent: Vec<u8> = (0..n as u8).collect();
    fn find(p: &mut [u8], mut x: u8) -> u8 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    for g in gens {
        for v in 0..n as u8 {
            let (a, b) = (find(&mut parent, v), find(&mut parent, g[v as usize]));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi as usize] = lo;
            }
        }
    }
    (0..n as u8).map(|v| find(&mut parent, v)).collect()
}

pub fn key_of(g: &SimpleGraph, lab: &[u8]) -> u128 {
    let mut key = 0u128;
    for j in 1..lab.len() {
        let row = g.neighbors(lab[j] as usize);
        for &li in &lab[..j] {
            key = key << 1 | row.contains(li as usize) as u128;
        }
    }
    key
}

/// Canonical form of `g`.
///
/// # Panics
/// If `g` has more than [`CANON_MAX`] vertices.
pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let n = g.n();
    assert!(
        n <= CANON_MAX,
        "canonical labeling supports at most {CANON_MAX} vertices"
    );
    let adj: Vec<u16> = (0..n).map(|v| g.neighbors(v).bits() as u16).collect();
    let mut s = Search {
        g,
        adj,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    if n == 0 {
        return CanonicalForm {
            key: 0,
            lab: Vec::new(),
            generators: Vec::new(),
        };
    }
    let mut cells: Vec<u16> = Vec::new();
    // start from the degree partition, cells in ascending degree
    let mut by_degree: Vec<(usize, u16)> = Vec::new();
    for v in 0..n {
        let d = g.degree(v);
        match by_degree.iter_mut().find(|(deg, _)| *deg == d) {
            Some((_, m)) => *m |= 1 << v,
            None => by_degree.push((d, 1 << v)),
        }
    }
    by_degree.sort();
    cells.extend(by_degree.into_iter().map(|(_, m)| m));
    s.refine(&mut cells);
    let mut prefix = Vec::new();
    s.descend(cells, &mut prefix);
    let (key, lab, _) = s.best.expect("at least one leaf");
    CanonicalForm {
        key,
        lab,
        generators: s.generators,
    }
}

struct Search<'a> {
    g: &'a SimpleGraph,
    adj: Vec<u16>,
    /// (key, lab, individualized prefix) of the first leaf.
    first: Option<(u128, Vec<u8>, Vec<u8>)>,
    best: Option<(u128, Vec<u8>, Vec<u8>)>,
    generators: Vec<Perm>,
}

impl Search<'_> {
    /// Splits cells by neighbor counts into every cell until the partition is equitable.
    fn refine(&self, cells: &mut Vec<u16>) {
        let mut changed = true;
        while changed {
            changed = false;
            let mut w = 0;
            while w < cells.len() {
                let splitter = cells[w];
                let mut i = 0;
                while i < cells.len() {
                    let cell = cells[i];
                    if cell.count_ones() == 1 {
                        i += 1;
                        continue;
                    }
                    let mut groups: [u16; 17] = [0; 17];
                    let mut members = cell;
                    while members != 0 {
                        let v = members.trailing_zeros() as usize;
                        members &= members - 1;
                        groups[(self.adj[v] & splitter).count_ones() as usize] |= 1 << v;
                    }
                    let parts: Vec<u16> = groups.iter().copied().filter(|&m| m != 0).collect();
                    if parts.len() > 1 {
                        let k = parts.len();
                        cells.splice(i..=i, parts);
                        changed = true;
                        i += k;
                    } else {
                        i += 1;
                    }
                }
                w += 1;
            }
        }
    }

    /// Returns `Some(level)` to unwind the search to that depth.
    fn descend(&mut self, cells: Vec<u16>, prefix: &mut Vec<u8>) -> Option<usize> {
        let Some(t) = cells.iter().position(|c| c.count_ones() > 1) else {
            let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
            return self.leaf(lab, prefix);
        };
        let target = cells[t];
        let mut tried: u16 = 0;
        let mut members = target;
        while members != 0 {
            let v = members.trailing_zeros() as u8;
            members &= members - 1;
            if tried != 0 {
                let fixing: Vec<&Perm> = self
                    .generators
                    .iter()
                    .filter(|g| prefix.iter().all(|&p| g[p as usize] == p))
                    .collect();
                let orb = orbits(self.adj.len(), fixing.into_iter());
                let rep = orb[v as usize];
                let seen = (0..self.adj.len() as u8).any(|u| tried >> u & 1 == 1 && orb[u as usize] == rep);
                if seen {
                    continue;
                }
            }
            tried |= 1 << v;
            let mut child = cells.clone();
            child.splice(t..=t, [1u16 << v, target & !(1 << v)]);
            self.refine(&mut child);
            prefix.push(v);
            let r = self.descend(child, prefix);
            prefix.pop();
            if let Some(level) = r {
                if level < prefix.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, lab: Vec<u8>, prefix: &[u8]) -> Option<usize> {
        let key = key_of(self.g, &lab);
        let Some((first_key, first_lab, first_prefix)) = &self.first else {
            self.first = Some((key, lab.clone(), prefix.to_vec()));
            self.best = Some((key, lab, prefix.to_vec()));
            return None;
        };
        if key == *first_key {
            self.generators.push(perm_between(first_lab, &lab));
            let common = first_prefix.iter().zip(prefix).take_while(|(a, b)| a == b).count();
            return Some(common);
        }
        let (best_key, best_lab, _) = self.best.as_ref().expect("set with first");
        if key == *best_key {
            self.generators.push(perm_between(best_lab, &lab));
        } else if key < *best_key {
            self.best = Some((key, lab, prefix.to_vec()));
        }
        None
    }
}

/// The automorphism sending `from[i]` to `to[i]`.
fn perm_between(from: &[u8], to: &[u8]) -> Perm {
    let mut p = vec![0u8; from.len()];
    for (a, b) in from.iter().zip(to) {
        p[*a as usize] = *b;
    }
    p
}

/// Relabels `g` into its canonical form.
pub fn canonical_graph(g: &SimpleGraph) -> SimpleGraph {
    let cf = canonical_form(g);
    let perm: Vec<usize> = cf.positions().into_iter().map(usize::from).collect();
    g.relabel(&perm)
}
