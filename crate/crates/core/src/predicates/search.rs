use serde::{Deserialize, Serialize};

use crate::detect::cliques::{find_clique_within, find_stable_within};
use crate::error::{Error, Result};
use crate::graph::{PathSeq, SimpleGraph, VertexSet, MAX_VERTICES};

use super::inner;

/// Picks paths `P_1..P_nu` (as indices into `paths`) such that the second
/// vertices `x_{P_i}` together with `b` form a stable set, and each `x_{P_i}`
/// has a neighbor in the interior of every later `P_j` other than `x_{P_j}`.
///
/// The paths run from `a` to `b`, are pairwise internally disjoint, and
/// `a`, `b` are non-adjacent. Exhaustive over ordered selections.
pub fn banana_select(g: &SimpleGraph, a: usize, b: usize, paths: &[PathSeq], nu: usize) -> Option<Vec<usize>> {
    debug_assert!(paths.iter().all(|p| p.len() >= 3 && p[0] == a && p[p.len() - 1] == b));
    let x: Vec<usize> = paths.iter().map(|p| p[1]).collect();
    let tail: Vec<VertexSet> = paths.iter().zip(&x).map(|(p, &xp)| inner(p).without(xp)).collect();
    let mut picked = Vec::with_capacity(nu);
    fn go(g: &SimpleGraph, b: usize, x: &[usize], tail: &[VertexSet], nu: usize, picked: &mut Vec<usize>) -> bool {
        if picked.len() == nu {
            return true;
        }
        for j in 0..x.len() {
            if picked.contains(&j) || g.has_edge(x[j], b) {
                continue;
            }
            let fits = picked
                .iter()
                .all(|&i| !g.has_edge(x[i], x[j]) && !g.neighbors(x[i]).is_disjoint(tail[j]));
            if fits {
                picked.push(j);
                if go(g, b, x, tail, nu, picked) {
                    return true;
                }
                picked.pop();
            }
        }
        false
    }
    go(g, b, &x, &tail, nu, &mut picked).then_some(picked)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "vertices", rename_all = "snake_case")]
pub enum RamseySplit {
    Clique(Vec<usize>),
    Stable(Vec<usize>),
    Neither,
}

/// A clique on `c` vertices, else a stable set on `s` vertices, else neither.
pub fn ramsey_split(g: &SimpleGraph, c: usize, s: usize) -> RamseySplit {
    if let Some(k) = find_clique_within(g, g.vertices(), c) {
        return RamseySplit::Clique(k.to_vec());
    }
    match find_stable_within(g, g.vertices(), s) {
        Some(st) => RamseySplit::Stable(st.to_vec()),
        None => RamseySplit::Neither,
    }
}

/// Indices of `q` sets that are pairwise anticomplete, if any. The sets must
/// be pairwise disjoint.
pub fn anticomplete_family(g: &SimpleGraph, sets: &[VertexSet], q: usize) -> Result<Option<Vec<usize>>> {
    if sets.len() > MAX_VERTICES {
        return Err(Error::TooLarge {
            n: sets.len(),
            cap: MAX_VERTICES,
        });
    }
    if let Some(bad) = sets.iter().find_map(|&s| s.max().filter(|&v| v >= g.n())) {
        return Err(Error::contract(format!("vertex {bad} out of range for n={}", g.n())));
    }
    let mut adj = vec![VertexSet::EMPTY; sets.len()];
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !sets[i].is_disjoint(sets[j]) {
                return Err(Error::contract(format!("sets {i} and {j} overlap")));
            }
            if !g.is_anticomplete(sets[i], sets[j]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let conflict = SimpleGraph::from_adjacency(adj).expect("symmetric by construction");
    Ok(find_stable_within(&conflict, conflict.vertices(), q).map(VertexSet::to_vec))
}
