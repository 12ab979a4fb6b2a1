//! k-trees: validation, recognition, the chordal embedding, quotients,
//! generators and induced-subgraph search.

mod embed;
mod generate;
mod induced;

pub use embed::{dirac_order, embed_in_ktree};
pub use generate::{cone, gen_tdr, random_graph, random_ktree};
pub use induced::{contains_induced, is_induced_embedding, Embedding};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::io::{parse_graph6, write_graph6};

/// A graph with an elimination ordering witnessing that it is a k-tree.
///
/// `order[i]` is the vertex at position `i + 1`; the forward neighbors of a
/// vertex are its neighbors later in the order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTree {
    pub graph: SimpleGraph,
    pub k: usize,
    pub order: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KTreeCheck {
    Valid,
    /// The vertex at this 0-based position breaks the definition; for a
    /// graph on at most `k` vertices the position is 0.
    Violated {
        position: usize,
    },
}

impl KTreeCheck {
    pub fn is_valid(self) -> bool {
        self == KTreeCheck::Valid
    }
}

fn check_bijection(n: usize, order: &[usize]) -> Result<()> {
    let seen: VertexSet = order.iter().filter(|&&v| v < n).collect();
    if order.len() != n || seen.len() != n {
        return Err(Error::contract("order is not a bijection onto the vertex set"));
    }
    Ok(())
}

/// Checks the k-tree definition: either `g` is `K_k`, or the forward
/// neighbors of each of the first `h - k` vertices form a clique of size
/// exactly `k`.
pub fn validate_ktree(g: &SimpleGraph, k: usize, order: &[usize]) -> Result<KTreeCheck> {
    check_bijection(g.n(), order)?;
    let h = g.n();
    if h <= k {
        let ok = h == k && g.is_clique(g.vertices());
        return Ok(if ok {
            KTreeCheck::Valid
        } else {
            KTreeCheck::Violated { position: 0 }
        });
    }
    let mut later = g.vertices();
    for (i, &v) in order.iter().enumerate().take(h - k) {
        later.remove(v);
        let fwd = g.neighbors(v) & later;
        if fwd.len() != k || !g.is_clique(fwd) {
            return Ok(KTreeCheck::Violated { position: i });
        }
    }
    Ok(KTreeCheck::Valid)
}

impl KTree {
    pub fn validate(&self) -> Result<KTreeCheck> {
        validate_ktree(&self.graph, self.k, &self.order)
    }

    pub fn h(&self) -> usize {
        self.graph.n()
    }

    /// Two lines: the graph6 string, then `k` followed by the order.
    pub fn to_text(&self) -> String {
        let order: Vec<String> = self.order.iter().map(|v| v.to_string()).collect();
        format!("{}\n{} {}\n", write_graph6(&self.graph), self.k, order.join(" "))
    }

    pub fn from_text(text: &str) -> Result<KTree> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let g6 = lines.next().ok_or_else(|| Error::parse(0, "missing graph6 line"))?;
        let graph = parse_graph6(g6)?;
        let offset = text.find(g6).unwrap_or(0) + g6.len();
        let rest = lines.next().ok_or_else(|| Error::parse(offset, "missing order line"))?;
        let nums: Vec<usize> = rest
            .split_whitespace()
            .map(|s| s.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::parse(offset, format!("bad integer in order line: {e}")))?;
        let (&k, order) = nums
            .split_first()
            .ok_or_else(|| Error::parse(offset, "empty order line"))?;
        check_bijection(graph.n(), order)?;
        Ok(KTree {
            graph,
            k,
            order: order.to_vec(),
        })
    }
}

/// Greedy peeling: repeatedly remove the least vertex whose remaining
/// neighborhood is a `k`-clique, until `k` vertices remain, which must form
/// a clique.
pub fn recognize_ktree(g: &SimpleGraph, k: usize) -> Option<Vec<usize>> {
    if k == 0 || g.n() < k {
        return None;
    }
    let mut left = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    while left.len() > k {
        let v = left.iter().find(|&v| {
            let fwd = g.neighbors(v) & left;
            fwd.len() == k && g.is_clique(fwd)
        })?;
        left.remove(v);
        order.push(v);
    }
    if !g.is_clique(left) {
        return None;
    }
    order.extend(left.iter());
    Some(order)
}

/// Removes the first `i` vertices of the order. The result's vertex `j`
/// is the original vertex `map[j]`.
pub fn ktree_quotient(t: &KTree, i: usize) -> Result<(KTree, Vec<usize>)> {
    if t.h() < t.k || i > t.h() - t.k {
        return Err(Error::contract(format!(
            "quotient index {i} outside 0..={}",
            t.h().saturating_sub(t.k)
        )));
    }
    let keep: VertexSet = t.order[i..].iter().collect();
    let (graph, map) = t.graph.induced_subgraph(keep);
    let mut pos = vec![usize::MAX; t.h()];
    for (new, &old) in map.iter().enumerate() {
        pos[old] = new;
    }
    let order = t.order[i..].iter().map(|&v| pos[v]).collect();
    Ok((KTree { graph, k: t.k, order }, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> SimpleGraph {
        // 2 and 3 are the degree-2 vertices
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_ktree(&SimpleGraph::complete(2), 2, &[1, 0])
            .unwrap()
            .is_valid());
        assert!(validate_ktree(&diamond(), 2, &[2, 0, 1, 3]).unwrap().is_valid());
        assert_eq!(
            validate_ktree(&diamond(), 2, &[0, 1, 2, 3]).unwrap(),
            KTreeCheck::Violated { position: 0 }
        );
        let c4 = SimpleGraph::cycle(4);
        for order in [[0, 1, 2, 3], [3, 1, 2, 0], [1, 3, 0, 2]] {
            assert!(!validate_ktree(&c4, 2, &order).unwrap().is_valid());
        }
        assert!(validate_ktree(&c4, 2, &[0, 1, 2]).is_err());
        assert!(validate_ktree(&c4, 2, &[0, 1, 2, 2]).is_err());
    }

    #[test]
    fn recognition() {
        let tree = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let order = recognize_ktree(&tree, 1).unwrap();
        assert!(validate_ktree(&tree, 1, &order).unwrap().is_valid());
        assert!(recognize_ktree(&SimpleGraph::complete(3), 2).is_some());
        assert_eq!(recognize_ktree(&SimpleGraph::complete_bipartite(2, 3), 2), None);
        assert_eq!(recognize_ktree(&SimpleGraph::empty(2), 1), None);
    }

    #[test]
    fn quotients() {
        let t = KTree {
            graph: diamond(),
            k: 2,
            order: vec![2, 0, 1, 3],
        };
        let (q0, _) = ktree_quotient(&t, 0).unwrap();
        assert_eq!(q0, t);
        let (q1, map) = ktree_quotient(&t, 1).unwrap();
        assert_eq!(q1.graph, SimpleGraph::complete(3));
        assert_eq!(map, vec![0, 1, 3]);
        assert!(q1.validate().unwrap().is_valid());
        let (q2, _) = ktree_quotient(&t, 2).unwrap();
        assert_eq!(q2.graph, SimpleGraph::complete(2));
        assert!(ktree_quotient(&t, 3).is_err());
    }

    #[test]
    fn text_round_trip() {
        let t = KTree {
            graph: diamond(),
            k: 2,
            order: vec![2, 0, 1, 3],
        };
        let text = t.to_text();
        assert_eq!(text.lines().nth(1), Some("2 2 0 1 3"));
        assert_eq!(KTree::from_text(&text).unwrap(), t);
        assert!(KTree::from_text("Cz\n2 0 1\n").is_err());
        assert!(KTree::from_text("Cz\n").is_err());
    }
}
