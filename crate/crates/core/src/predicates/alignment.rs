use serde::{Deserialize, Serialize};

use crate::detect::wheel::{class_of, WheelClass};
use crate::error::Result;
use crate::graph::{PathSeq, SimpleGraph, VertexSet};

use super::{check_range, check_set, distinct, is_path, require, Clause, Outcome};

/// An apex `a`, a stable set `s` of its neighbors, and disjoint paths that
/// `a` misses and every member of `s` touches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Palanquin {
    pub a: usize,
    pub s: VertexSet,
    pub paths: Vec<PathSeq>,
}

/// A stable set listed in the order `π(1), π(2), …` in which its neighbor
/// blocks appear along `path`, read from the end `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alignment {
    pub order: Vec<usize>,
    pub path: PathSeq,
    pub x: usize,
}

pub fn verify_palanquin(g: &SimpleGraph, p: &Palanquin) -> Result<Outcome> {
    check_range(g, [p.a].iter().chain(p.paths.iter().flatten()))?;
    check_set(g, p.s)?;
    Ok(Outcome::from_clauses(palanquin_clauses(g, p)))
}

fn palanquin_clauses(g: &SimpleGraph, p: &Palanquin) -> std::result::Result<(), Clause> {
    let off = p.s.with(p.a);
    let mut used = VertexSet::EMPTY;
    let mut disjoint = true;
    for l in &p.paths {
        let set: VertexSet = l.iter().collect();
        disjoint &= used.is_disjoint(set);
        used = used | set;
    }
    require(
        !p.s.contains(p.a)
            && p.s.is_subset(g.neighbors(p.a))
            && g.is_stable(p.s)
            && disjoint
            && p.paths
                .iter()
                .all(|l| is_path(g, l) && !l.iter().any(|&v| off.contains(v))),
        Clause::P1,
    )?;
    require(
        p.paths.iter().all(|l| {
            let set: VertexSet = l.iter().collect();
            g.neighbors(p.a).is_disjoint(set) && p.s.iter().all(|s| !g.neighbors(s).is_disjoint(set))
        }),
        Clause::P2,
    )
}

pub fn verify_alignment(g: &SimpleGraph, al: &Alignment) -> Result<Outcome> {
    check_range(g, al.order.iter().chain(&al.path).chain([al.x].iter()))?;
    Ok(Outcome::from_clauses(alignment_clauses(g, al)))
}

fn alignment_clauses(g: &SimpleGraph, al: &Alignment) -> std::result::Result<(), Clause> {
    let s = distinct(&al.order);
    let l = &al.path;
    require(
        s.is_some_and(|s| {
            g.is_stable(s)
                && is_path(g, l)
                && !l.iter().any(|&v| s.contains(v))
                && (l.first() == Some(&al.x) || l.last() == Some(&al.x))
        }),
        Clause::A1,
    )?;
    let spans = spans_from(g, l, al.x, &al.order);
    require(spans.iter().all(Option::is_some), Clause::A2)?;
    let spans: Vec<(usize, usize)> = spans.into_iter().flatten().collect();
    require(spans.windows(2).all(|w| w[0].1 < w[1].0), Clause::A3)
}

/// First and last neighbor position of each vertex along `l` read from `x`.
fn spans_from(g: &SimpleGraph, l: &[usize], x: usize, vs: &[usize]) -> Vec<Option<(usize, usize)>> {
    let from_x: Vec<usize> = if l.first() == Some(&x) {
        l.to_vec()
    } else {
        l.iter().rev().copied().collect()
    };
    vs.iter()
        .map(|&s| {
            let mut hits = from_x
                .iter()
                .enumerate()
                .filter(|(_, &v)| g.has_edge(s, v))
                .map(|(i, _)| i);
            let first = hits.next()?;
            Some((first, hits.last().unwrap_or(first)))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AlignmentSearch {
    Found {
        alignment: Alignment,
    },
    /// The inputs do not meet the hypotheses; nothing is claimed.
    Skip {
        reason: String,
    },
    /// Hypotheses hold but two neighbor intervals overlap. In a theta-free
    /// host this cannot happen.
    Anomaly {
        overlapping: (usize, usize),
    },
}

/// Orders `s` by the interval between each vertex's first and last
/// neighbor along `l` from the end `x`.
///
/// Hypotheses: `(a, s, [l])` is a palanquin, `x` is an end of `l`, no two
/// members of `s` share a neighbor on `l`, and either all members see `l`
/// as a clique of size at least two or none do.
pub fn find_alignment(g: &SimpleGraph, a: usize, s: VertexSet, l: &[usize], x: usize) -> Result<AlignmentSearch> {
    let pal = Palanquin {
        a,
        s,
        paths: vec![l.to_vec()],
    };
    check_range(g, [x].iter())?;
    if let Outcome::Violated(c) = verify_palanquin(g, &pal)? {
        return Ok(skip(format!("not a palanquin ({c:?} fails)")));
    }
    if l.first() != Some(&x) && l.last() != Some(&x) {
        return Ok(skip(format!("{x} is not an end of the path")));
    }
    let on: VertexSet = l.iter().collect();
    let mut seen = VertexSet::EMPTY;
    for v in s {
        let nb = g.neighbors(v) & on;
        if !seen.is_disjoint(nb) {
            return Ok(skip("two vertices share a neighbor on the path".to_string()));
        }
        seen = seen | nb;
    }
    let classes: Vec<WheelClass> = s.iter().map(|v| class_of(g, g.neighbors(v) & on)).collect();
    let uniform = classes.iter().all(|&c| c == WheelClass::Bad) || classes.iter().all(|&c| c == WheelClass::Ugly);
    if !uniform {
        return Ok(skip("members are not uniformly bad or uniformly ugly".to_string()));
    }
    let members = s.to_vec();
    let spans = spans_from(g, l, x, &members);
    let mut keyed: Vec<((usize, usize), usize)> = spans
        .into_iter()
        .map(|sp| sp.expect("palanquin members touch the path"))
        .zip(members)
        .collect();
    keyed.sort();
    if let Some(w) = keyed.windows(2).find(|w| w[0].0 .1 >= w[1].0 .0) {
        return Ok(AlignmentSearch::Anomaly {
            overlapping: (w[0].1, w[1].1),
        });
    }
    Ok(AlignmentSearch::Found {
        alignment: Alignment {
            order: keyed.into_iter().map(|(_, v)| v).collect(),
            path: l.to_vec(),
            x,
        },
    })
}

fn skip(reason: String) -> AlignmentSearch {
    AlignmentSearch::Skip { reason }
}
