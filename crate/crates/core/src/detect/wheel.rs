//! Even wheels, wheel-center classification and substantial centers.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

use super::certificate::Certificate;
use super::holes::visit_holes;

/// How an outside vertex sees a hole.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WheelClass {
    /// Exactly one neighbor on the hole.
    Good,
    /// Neighbors on the hole form a clique of size at least two.
    Bad,
    /// Neighbors on the hole are not a clique.
    Ugly,
    NoNeighbor,
}

/// A shortest even wheel: holes are scanned by increasing length, and for
/// each hole the candidate centers in ascending order.
pub fn find_even_wheel(g: &SimpleGraph) -> Option<Certificate> {
    let all = g.vertices();
    // a center needs four neighbors, so the hole sits among the rest
    if g.vertices().iter().all(|v| g.degree(v) < 4) {
        return None;
    }
    (4..g.n()).find_map(|len| {
        visit_holes(g, all, len, len, |cycle| {
            let rim: VertexSet = cycle.iter().collect();
            for v in all - rim {
                let spokes = (g.neighbors(v) & rim).len();
                if spokes >= 4 && spokes % 2 == 0 {
                    return ControlFlow::Break(Certificate::EvenWheel {
                        rim: cycle.to_vec(),
                        center: v,
                    });
                }
            }
            ControlFlow::Continue(())
        })
    })
}

/// Classifies `v` against the hole `cycle`.
pub fn classify_against_hole(g: &SimpleGraph, cycle: &[usize], v: usize) -> Result<WheelClass> {
    if cycle.iter().any(|&c| c >= g.n()) || v >= g.n() {
        return Err(Error::contract("vertex out of range"));
    }
    let rim: VertexSet = cycle.iter().collect();
    if rim.len() != cycle.len() || !g.is_hole(cycle) {
        return Err(Error::contract("sequence is not a hole"));
    }
    if rim.contains(v) {
        return Err(Error::contract(format!("vertex {v} lies on the hole")));
    }
    Ok(class_of(g, g.neighbors(v) & rim))
}

pub(crate) fn class_of(g: &SimpleGraph, on_rim: VertexSet) -> WheelClass {
    match on_rim.len() {
        0 => WheelClass::NoNeighbor,
        1 => WheelClass::Good,
        _ if g.is_clique(on_rim) => WheelClass::Bad,
        _ => WheelClass::Ugly,
    }
}

/// A hole avoiding `v` on which `v` has at least `d + 1` neighbors whose
/// removal disconnects the hole.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstantialHole {
    pub cycle: Vec<usize>,
    pub neighbors: Vec<usize>,
}

/// Searches for a hole `C` of `G - v` with `|N_C(v)| >= d + 1` and
/// `C - N_C(v)` disconnected. An empty remainder counts as connected.
pub fn is_d_substantial(g: &SimpleGraph, v: usize, d: usize) -> Option<SubstantialHole> {
    assert!(d >= 1, "d must be positive");
    let within = g.vertices().without(v);
    if g.degree(v) < d + 1 {
        return None;
    }
    visit_holes(g, within, 4, within.len(), |cycle| {
        let rim: VertexSet = cycle.iter().collect();
        let on = g.neighbors(v) & rim;
        if on.len() > d && g.components_within(rim - on).len() >= 2 {
            ControlFlow::Break(SubstantialHole {
                cycle: cycle.to_vec(),
                neighbors: on.to_vec(),
            })
        } else {
            ControlFlow::Continue(())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6_plus(nbrs: &[usize]) -> SimpleGraph {
        SimpleGraph::cycle(6).with_vertex(nbrs.iter().collect()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let w6 = c6_plus(&[0, 1, 2, 3, 4, 5]);
        let cert = find_even_wheel(&w6).expect("C6 plus a universal vertex");
        assert_eq!(cert.validate(&w6), Ok(()));
        let w5 = SimpleGraph::cycle(5).with_vertex(VertexSet::full(5)).unwrap();
        assert_eq!(find_even_wheel(&w5), None);
        assert_eq!(find_even_wheel(&SimpleGraph::cycle(8)), None);
    }

    #[test]
    fn classes() {
        let rim: Vec<usize> = (0..6).collect();
        assert_eq!(classify_against_hole(&c6_plus(&[2]), &rim, 6), Ok(WheelClass::Good));
        assert_eq!(classify_against_hole(&c6_plus(&[2, 3]), &rim, 6), Ok(WheelClass::Bad));
        assert_eq!(classify_against_hole(&c6_plus(&[0, 3]), &rim, 6), Ok(WheelClass::Ugly));
        assert_eq!(
            classify_against_hole(&c6_plus(&[]), &rim, 6),
            Ok(WheelClass::NoNeighbor)
        );
        assert!(classify_against_hole(&c6_plus(&[]), &[0, 1, 2], 6).is_err());
        assert!(classify_against_hole(&c6_plus(&[]), &rim, 3).is_err());
    }

    #[test]
    fn substantial() {
        let g = c6_plus(&[0, 2, 4]);
        let w = is_d_substantial(&g, 6, 2).unwrap();
        assert_eq!(w.neighbors, vec![0, 2, 4]);
        assert_eq!(is_d_substantial(&c6_plus(&[0, 3]), 6, 2), None);
        assert_eq!(is_d_substantial(&SimpleGraph::path(5), 2, 1), None);
    }

    #[test]
    fn shortest_wheel_first() {
        // the 6-rim wheel has smaller labels, but the 4-rim wheel is shorter
        let w4 = SimpleGraph::cycle(4).with_vertex(VertexSet::full(4)).unwrap();
        let g = c6_plus(&[0, 1, 2, 3, 4, 5]).disjoint_union(&w4).unwrap();
        let cert = find_even_wheel(&g).unwrap();
        assert_eq!(
            cert,
            Certificate::EvenWheel {
                rim: vec![7, 8, 9, 10],
                center: 11
            }
        );
    }
}
