use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PathSeq, SimpleGraph, VertexSet};

use super::{check_range, check_set, distinct, inner, internally_disjoint, is_path_between, require, Clause, Outcome};

/// An apex `a` with two neighbors `x`, `y` and a family of `x`–`y` paths
/// avoiding `a`, whose interiors `a` does not see.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Kaleidoscope {
    pub a: usize,
    pub x: usize,
    pub y: usize,
    pub paths: Vec<PathSeq>,
}

impl Kaleidoscope {
    pub fn w(&self) -> usize {
        self.paths.len()
    }

    /// The hole `a-x-W-y-a` for path `i`, as a cyclic sequence.
    pub fn hole(&self, i: usize) -> Vec<usize> {
        let mut c = vec![self.a];
        c.extend(&self.paths[i]);
        c
    }

    /// `a` together with every vertex on a path.
    pub fn support(&self) -> VertexSet {
        self.paths.iter().flatten().collect::<VertexSet>().with(self.a)
    }

    fn check_range(&self, g: &SimpleGraph) -> Result<()> {
        check_range(g, [self.a, self.x, self.y].iter().chain(self.paths.iter().flatten()))
    }
}

/// A set `z` to be checked as `d`-mirrored by a kaleidoscope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorSpec {
    pub z: VertexSet,
    pub d: usize,
}

pub fn verify_kaleidoscope(g: &SimpleGraph, k: &Kaleidoscope) -> Result<Outcome> {
    k.check_range(g)?;
    Ok(Outcome::from_clauses(kaleidoscope_clauses(g, k)))
}

fn kaleidoscope_clauses(g: &SimpleGraph, k: &Kaleidoscope) -> std::result::Result<(), Clause> {
    let (a, x, y) = (k.a, k.x, k.y);
    require(
        distinct(&[x, a, y]).is_some() && g.has_edge(a, x) && g.has_edge(a, y) && !g.has_edge(x, y),
        Clause::K1,
    )?;
    require(
        k.paths.iter().all(|p| is_path_between(g, p, x, y) && !p.contains(&a)) && internally_disjoint(&k.paths),
        Clause::K2,
    )?;
    require(k.paths.iter().all(|p| g.neighbors(a).is_disjoint(inner(p))), Clause::K3)
}

/// Checks the kaleidoscope clauses, then that `m.z` is `m.d`-mirrored by it.
pub fn verify_mirrored(g: &SimpleGraph, k: &Kaleidoscope, m: &MirrorSpec) -> Result<Outcome> {
    k.check_range(g)?;
    check_set(g, m.z)?;
    if m.d == 0 {
        return Err(Error::contract("mirroring degree d must be positive"));
    }
    Ok(Outcome::from_clauses(
        kaleidoscope_clauses(g, k).and_then(|()| mirror_clauses(g, k, m.z, m.d)),
    ))
}

fn mirror_clauses(g: &SimpleGraph, k: &Kaleidoscope, z: VertexSet, d: usize) -> std::result::Result<(), Clause> {
    require(z.is_disjoint(k.support()), Clause::M1)?;
    require((g.neighbors(k.a) & z).len() <= 1, Clause::M2)?;
    require(
        k.paths.iter().all(|p| z.iter().all(|v| sees_well(g, p, v, d))),
        Clause::M3,
    )
}

/// `v` misses both ends of `p` and their neighbors on `p`, and has at least
/// `d` neighbors on `p`.
pub(crate) fn sees_well(g: &SimpleGraph, p: &[usize], v: usize, d: usize) -> bool {
    let on: VertexSet = p.iter().collect();
    let l = p.len();
    let ends: VertexSet = [p[0], p[1], p[l - 2], p[l - 1]].iter().collect();
    let nb = g.neighbors(v) & on;
    nb.is_disjoint(ends) && nb.len() >= d
}

/// The sub-kaleidoscope of paths on which `z` has at least `d` neighbors.
/// `z` must be 1-mirrored by `k`.
pub fn filter_mirrored(g: &SimpleGraph, k: &Kaleidoscope, z: usize, d: usize) -> Result<Kaleidoscope> {
    let spec = MirrorSpec {
        z: VertexSet::singleton(z),
        d: 1,
    };
    match verify_mirrored(g, k, &spec)? {
        Outcome::Ok => {}
        Outcome::Violated(c) => {
            return Err(Error::precondition(format!("{z} is not 1-mirrored ({c:?} fails)")));
        }
    }
    let paths = k.paths.iter().filter(|p| sees_well(g, p, z, d)).cloned().collect();
    Ok(Kaleidoscope { paths, ..k.clone() })
}
