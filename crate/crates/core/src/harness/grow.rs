//! Best-effort search for a blurry copy of a 2-tree: find a strong 2-block,
//! assemble a kaleidoscope that 3-mirrors an edge, then add one vertex at a
//! time, each a common neighbor of its two forward neighbors taken from a
//! hole of the kaleidoscope.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::detect::certificate::Certificate;
use crate::detect::chordal::forward_neighbors;
use crate::detect::class::{in_class_et, Verdict};
use crate::detect::paths::visit_induced_paths;
use crate::error::{Error, Result};
use crate::graph::{PathSeq, SimpleGraph, VertexSet};
use crate::ktree::KTree;
use crate::predicates::{find_strong_block, sees_well, BlockSearch, BlurryWitness, Kaleidoscope};

/// Mirroring degree demanded of every vertex of the growing copy.
pub const MIRROR_DEGREE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowParams {
    /// The host must be `K_t`-free.
    pub t: usize,
    /// Paths the kaleidoscope must still have once the copy is complete.
    pub w: usize,
    /// Work limit, applied to each stage separately.
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Host,
    Seed,
    StrongBlock,
    Kaleidoscope,
    Extension,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub stage: Stage,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GrowOutcome {
    Success {
        blurry: BlurryWitness,
        /// The surviving paths; `None` when no kaleidoscope was needed.
        kaleidoscope: Option<Kaleidoscope>,
    },
    /// The search space of this stage was covered without success.
    Exhausted { stage: Stage, step: usize },
    /// The budget ran out during this stage.
    Inconclusive { stage: Stage, step: usize },
    /// The host is not in the class.
    Rejected { certificate: Certificate },
}

/// The kaleidoscope found in the assembly stage and the edge it mirrors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowSeed {
    pub kaleidoscope: Kaleidoscope,
    pub edge: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowTrace {
    pub entries: Vec<TraceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<GrowSeed>,
    pub outcome: GrowOutcome,
}

impl GrowTrace {
    pub fn succeeded(&self) -> bool {
        matches!(self.outcome, GrowOutcome::Success { .. })
    }
}

struct Tracer {
    entries: Vec<TraceEntry>,
    seed: Option<GrowSeed>,
}

impl Tracer {
    fn log(&mut self, stage: Stage, note: impl Into<String>) {
        self.entries.push(TraceEntry {
            stage,
            note: note.into(),
        });
    }

    fn finish(self, outcome: GrowOutcome) -> GrowTrace {
        GrowTrace {
            entries: self.entries,
            seed: self.seed,
            outcome,
        }
    }
}

/// Tries to grow a blurry copy of `target` (a 2-tree) in `g`.
pub fn pipeline_grow(g: &SimpleGraph, target: &KTree, params: GrowParams) -> Result<GrowTrace> {
    if target.k != 2 || !target.validate()?.is_valid() {
        return Err(Error::contract("target is not a valid 2-tree"));
    }
    if params.t == 0 {
        return Err(Error::contract("t must be positive"));
    }
    let mut tr = Tracer {
        entries: Vec::new(),
        seed: None,
    };
    if let Verdict::Violation { certificate } = in_class_et(g, params.t) {
        tr.log(Stage::Host, format!("host contains a {}", certificate.kind()));
        return Ok(tr.finish(GrowOutcome::Rejected { certificate }));
    }
    tr.log(Stage::Host, format!("host is in the class and K{}-free", params.t));
    let h = target.h();

    if h == 2 && params.w == 0 {
        return Ok(match g.edges().next() {
            Some((u, v)) => {
                tr.log(Stage::Seed, format!("no paths demanded; edge {u}-{v} is the copy"));
                let blurry = BlurryWitness {
                    order: vec![u, v],
                    y_edges: vec![(u, v)],
                    target: target.clone(),
                };
                tr.finish(GrowOutcome::Success {
                    blurry,
                    kaleidoscope: None,
                })
            }
            None => {
                tr.log(Stage::Seed, "host has no edge");
                tr.finish(GrowOutcome::Exhausted {
                    stage: Stage::Seed,
                    step: 0,
                })
            }
        });
    }

    let block = match find_strong_block(g, 2, params.budget)? {
        BlockSearch::Found { witness } => witness.block,
        BlockSearch::Absent => {
            tr.log(Stage::StrongBlock, "no strong 2-block");
            return Ok(tr.finish(GrowOutcome::Exhausted {
                stage: Stage::StrongBlock,
                step: 0,
            }));
        }
        BlockSearch::Inconclusive { expanded } => {
            tr.log(Stage::StrongBlock, format!("budget spent after {expanded} expansions"));
            return Ok(tr.finish(GrowOutcome::Inconclusive {
                stage: Stage::StrongBlock,
                step: 0,
            }));
        }
    };
    tr.log(Stage::StrongBlock, format!("strong 2-block {:?}", block.to_vec()));

    // each extension consumes at least the path it takes its vertex from
    let need = (params.w + h - 2).max(1);
    let seed = match assemble(g, block, need, params.budget) {
        Assembly::Found(seed) => seed,
        Assembly::Short { best } => {
            tr.log(
                Stage::Kaleidoscope,
                format!("largest family 3-mirroring an edge has {best} paths, {need} needed"),
            );
            return Ok(tr.finish(GrowOutcome::Exhausted {
                stage: Stage::Kaleidoscope,
                step: 0,
            }));
        }
        Assembly::OutOfBudget => {
            tr.log(Stage::Kaleidoscope, "budget spent enumerating paths");
            return Ok(tr.finish(GrowOutcome::Inconclusive {
                stage: Stage::Kaleidoscope,
                step: 0,
            }));
        }
    };
    let Seed { mut k, z1, z2 } = seed;
    tr.seed = Some(GrowSeed {
        kaleidoscope: k.clone(),
        edge: (z1, z2),
    });
    tr.log(
        Stage::Kaleidoscope,
        format!(
            "apex {} with ends {}, {}: {} paths 3-mirror edge {z1}-{z2}{}",
            k.a,
            k.x,
            k.y,
            k.w(),
            if g.has_edge(k.a, z1) || g.has_edge(k.a, z2) {
                "; the apex sees the edge"
            } else {
                ""
            }
        ),
    );

    // image of each target vertex, filled from the base edge backwards
    let mut image = vec![usize::MAX; h];
    image[target.order[h - 2]] = z1;
    image[target.order[h - 1]] = z2;
    let mut y_edges = vec![(z1, z2)];
    let mut z = VertexSet::singleton(z1).with(z2);
    let mut work = 0u64;
    for (step, i) in (0..h - 2).rev().enumerate() {
        let u = target.order[i];
        let fwd = forward_neighbors(&target.graph, &target.order, i).to_vec();
        let (c1, c2) = (image[fwd[0]], image[fwd[1]]);
        let required = params.w + i;
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut missing = 0;
        for (wi, w) in k.paths.iter().enumerate() {
            work += 1;
            if work > params.budget {
                tr.log(Stage::Extension, format!("step {step}: budget spent"));
                return Ok(tr.finish(GrowOutcome::Inconclusive {
                    stage: Stage::Extension,
                    step,
                }));
            }
            let Some(&cand) = w.iter().find(|&&v| g.has_edge(v, c1) && g.has_edge(v, c2)) else {
                missing += 1;
                continue;
            };
            let seen = g.neighbors(cand) & z;
            let allowed = (g.closed_neighbors(c1) & g.closed_neighbors(c2)) & z;
            if z.contains(cand) || g.has_edge(k.a, cand) || !seen.is_subset(allowed) {
                continue;
            }
            let keep: Vec<usize> = (0..k.w())
                .filter(|&j| j != wi && !k.paths[j].contains(&cand) && sees_well(g, &k.paths[j], cand, MIRROR_DEGREE))
                .collect();
            if best.as_ref().map_or(true, |(_, b)| keep.len() > b.len()) {
                best = Some((cand, keep));
            }
        }
        if missing > 0 {
            tr.log(
                Stage::Extension,
                format!("step {step}: {missing} paths carry no common neighbor of {c1} and {c2}"),
            );
        }
        let got = best.as_ref().map_or(0, |(_, keep)| keep.len());
        let Some((cand, keep)) = best.filter(|_| got >= required) else {
            let emptied = if got == 0 { "; filtering emptied the family" } else { "" };
            tr.log(
                Stage::Extension,
                format!("step {step}: best choice keeps {got} paths, {required} needed{emptied}"),
            );
            return Ok(tr.finish(GrowOutcome::Exhausted {
                stage: Stage::Extension,
                step,
            }));
        };
        image[u] = cand;
        y_edges.push((cand, c1));
        y_edges.push((cand, c2));
        z.insert(cand);
        k.paths = keep.iter().map(|&j| k.paths[j].clone()).collect();
        let emptied = if k.paths.is_empty() {
            "; filtering emptied the family"
        } else {
            ""
        };
        tr.log(
            Stage::Extension,
            format!(
                "step {step}: added {cand} on {c1}, {c2}; {} paths remain{emptied}",
                k.w()
            ),
        );
    }

    let blurry = BlurryWitness {
        order: target.order.iter().map(|&u| image[u]).collect(),
        y_edges,
        target: target.clone(),
    };
    Ok(tr.finish(GrowOutcome::Success {
        blurry,
        kaleidoscope: Some(k),
    }))
}

struct Seed {
    k: Kaleidoscope,
    z1: usize,
    z2: usize,
}

enum Assembly {
    Found(Seed),
    Short { best: usize },
    OutOfBudget,
}

/// The apex, ends and edge (apices in the block first) whose paths contain
/// the most pairwise internally disjoint ones that 3-mirror the edge,
/// chosen greedily shortest first. Ties go to the first found.
fn assemble(g: &SimpleGraph, block: VertexSet, need: usize, budget: u64) -> Assembly {
    let mut work = 0u64;
    let mut best: Option<Seed> = None;
    let apices = block.iter().chain((g.vertices() - block).iter());
    for a in apices {
        let na = g.neighbors(a);
        let pool = g.vertices() - g.closed_neighbors(a);
        for x in na {
            for y in na.above(x) - g.neighbors(x) {
                let mut paths: Vec<PathSeq> = Vec::new();
                let over = visit_induced_paths(g, x, y, pool, |p| {
                    work += 1;
                    if work > budget {
                        return ControlFlow::Break(());
                    }
                    if p.len() >= 7 {
                        paths.push(p.to_vec());
                    }
                    ControlFlow::Continue(())
                });
                if over.is_some() {
                    return Assembly::OutOfBudget;
                }
                let have = best.as_ref().map_or(0, |s| s.k.w());
                if paths.len() <= have {
                    continue;
                }
                paths.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
                let ends = g.closed_neighbors(x) | g.closed_neighbors(y);
                for (z1, z2) in g.edges() {
                    let pair = VertexSet::singleton(z1).with(z2);
                    if !pair.is_disjoint(ends.with(a)) || (na & pair).len() > 1 {
                        continue;
                    }
                    let good: Vec<&PathSeq> = paths
                        .iter()
                        .filter(|p| {
                            !p.contains(&z1)
                                && !p.contains(&z2)
                                && sees_well(g, p, z1, MIRROR_DEGREE)
                                && sees_well(g, p, z2, MIRROR_DEGREE)
                        })
                        .collect();
                    let family = greedy_disjoint(&good);
                    if family.len() > best.as_ref().map_or(0, |s| s.k.w()) {
                        let paths = family.into_iter().map(|i| good[i].clone()).collect();
                        best = Some(Seed {
                            k: Kaleidoscope { a, x, y, paths },
                            z1,
                            z2,
                        });
                    }
                }
            }
        }
    }
    match best {
        Some(seed) if seed.k.w() >= need => Assembly::Found(seed),
        other => Assembly::Short {
            best: other.map_or(0, |s| s.k.w()),
        },
    }
}

fn greedy_disjoint(paths: &[&PathSeq]) -> Vec<usize> {
    let mut used = VertexSet::EMPTY;
    let mut out = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        let inner: VertexSet = p[1..p.len() - 1].iter().collect();
        if used.is_disjoint(inner) {
            used = used | inner;
            out.push(i);
        }
    }
    out
}
