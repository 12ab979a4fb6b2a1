use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::detect::paths::visit_induced_paths;
use crate::error::{Error, Result};
use crate::graph::{PathSeq, SimpleGraph, VertexSet};

use super::{check_range, check_set, distinct, inner, internally_disjoint, is_path_between, require, Clause, Outcome};

/// Paths joining one pair of block vertices, each read from `x` to `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub x: usize,
    pub y: usize,
    pub paths: Vec<PathSeq>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongBlockWitness {
    pub block: VertexSet,
    /// One family per 2-subset of the block.
    pub families: Vec<PathFamily>,
}

/// Checks that `w` is a strong `k`-block. Families must name pairs of block
/// vertices, at most one family per pair.
pub fn verify_strong_block(g: &SimpleGraph, k: usize, w: &StrongBlockWitness) -> Result<Outcome> {
    if k == 0 {
        return Err(Error::contract("k must be positive"));
    }
    check_set(g, w.block)?;
    let mut pairs = Vec::new();
    for f in &w.families {
        check_range(g, [f.x, f.y].iter().chain(f.paths.iter().flatten()))?;
        if f.x == f.y || !w.block.contains(f.x) || !w.block.contains(f.y) {
            return Err(Error::contract(format!(
                "family {}-{} is not a pair of block vertices",
                f.x, f.y
            )));
        }
        let key = (f.x.min(f.y), f.x.max(f.y));
        if pairs.contains(&key) {
            return Err(Error::contract(format!(
                "two families for the pair {}-{}",
                key.0, key.1
            )));
        }
        pairs.push(key);
    }
    Ok(Outcome::from_clauses(block_clauses(g, k, w, pairs.len())))
}

fn block_clauses(g: &SimpleGraph, k: usize, w: &StrongBlockWitness, pairs: usize) -> std::result::Result<(), Clause> {
    let b = w.block.len();
    require(b >= k, Clause::BlockSize)?;
    require(pairs == b * (b - 1) / 2, Clause::BlockPaths)?;
    require(
        w.families.iter().all(|f| {
            let mut distinct_paths = f.paths.clone();
            distinct_paths.sort();
            distinct_paths.dedup();
            distinct_paths.len() >= k
                && f.paths.iter().all(|p| is_path_between(g, p, f.x, f.y))
                && internally_disjoint(&f.paths)
        }),
        Clause::BlockPaths,
    )?;
    for (i, f) in w.families.iter().enumerate() {
        for h in &w.families[i + 1..] {
            let shared = VertexSet::singleton(f.x).with(f.y) & VertexSet::singleton(h.x).with(h.y);
            for p in &f.paths {
                let ps = distinct(p).expect("checked as a path");
                for q in &h.paths {
                    let qs = distinct(q).expect("checked as a path");
                    require(ps & qs == shared, Clause::BlockCrossing)?;
                }
            }
        }
    }
    Ok(())
}

/// Maximum number of internally disjoint `x`–`y` paths with interiors in
/// `within`, by unit vertex capacities. Adjacent ends count the edge once.
pub fn internally_disjoint_count(g: &SimpleGraph, x: usize, y: usize, within: VertexSet) -> usize {
    assert!(x != y && x < g.n() && y < g.n(), "ends must be distinct vertices");
    let inside = within.without(x).without(y);
    let direct = g.has_edge(x, y) as usize;
    // node 2v is v's entry, 2v + 1 its exit
    let m = 2 * g.n();
    let mut cap = vec![vec![0u8; m]; m];
    for v in inside {
        cap[2 * v][2 * v + 1] = 1;
    }
    let live = inside.with(x).with(y);
    for u in live {
        for v in g.neighbors(u) & live {
            if !(u == x && v == y || u == y && v == x) {
                cap[2 * u + 1][2 * v] = 1;
            }
        }
    }
    let (source, sink) = (2 * x + 1, 2 * y);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; m];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..m {
                if cap[u][v] > 0 && prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow + direct;
        }
        let mut v = sink;
        while v != source {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum BlockSearch {
    Found {
        witness: StrongBlockWitness,
    },
    /// Every candidate was examined; there is no strong `k`-block.
    Absent,
    /// The node budget ran out first.
    Inconclusive {
        expanded: u64,
    },
}

/// Searches for a strong `k`-block on exactly `k` vertices (a larger block
/// contains one). Candidate sets are stable when `k >= 2`, since adjacent
/// ends admit only the one-edge path. Each pair is screened by max-flow, then
/// families are chosen by backtracking over induced paths so that all
/// interiors are disjoint. `budget` bounds candidate sets, enumerated paths
/// and backtracking steps together.
pub fn find_strong_block(g: &SimpleGraph, k: usize, budget: u64) -> Result<BlockSearch> {
    if k == 0 {
        return Err(Error::precondition("k must be positive"));
    }
    let mut search = Search {
        g,
        k,
        budget,
        expanded: 0,
    };
    if k == 1 {
        return Ok(match g.vertices().min() {
            Some(v) => BlockSearch::Found {
                witness: StrongBlockWitness {
                    block: VertexSet::singleton(v),
                    families: Vec::new(),
                },
            },
            None => BlockSearch::Absent,
        });
    }
    match search.subsets(VertexSet::EMPTY, g.vertices()) {
        Ok(Some(witness)) => Ok(BlockSearch::Found { witness }),
        Ok(None) => Ok(BlockSearch::Absent),
        Err(OutOfBudget) => Ok(BlockSearch::Inconclusive {
            expanded: search.expanded,
        }),
    }
}

struct OutOfBudget;

struct Search<'a> {
    g: &'a SimpleGraph,
    k: usize,
    budget: u64,
    expanded: u64,
}

type Step<T> = std::result::Result<T, OutOfBudget>;

impl Search<'_> {
    fn tick(&mut self) -> Step<()> {
        self.expanded += 1;
        if self.expanded > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    fn subsets(&mut self, chosen: VertexSet, mut cand: VertexSet) -> Step<Option<StrongBlockWitness>> {
        if chosen.len() == self.k {
            self.tick()?;
            return self.try_block(chosen);
        }
        while let Some(v) = cand.min() {
            if chosen.len() + cand.len() < self.k {
                break;
            }
            cand.remove(v);
            if let Some(w) = self.subsets(chosen.with(v), cand - self.g.neighbors(v))? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn try_block(&mut self, block: VertexSet) -> Step<Option<StrongBlockWitness>> {
        let g = self.g;
        let outside = g.vertices() - block;
        let pairs: Vec<(usize, usize)> = block
            .iter()
            .flat_map(|x| block.above(x).iter().map(move |y| (x, y)))
            .collect();
        if pairs
            .iter()
            .any(|&(x, y)| internally_disjoint_count(g, x, y, outside) < self.k)
        {
            return Ok(None);
        }
        let mut lists = Vec::with_capacity(pairs.len());
        for &(x, y) in &pairs {
            let mut paths: Vec<PathSeq> = Vec::new();
            let mut out = Ok(());
            visit_induced_paths(g, x, y, outside, |p| {
                if let Err(e) = self.tick() {
                    out = Err(e);
                    return ControlFlow::Break(());
                }
                paths.push(p.to_vec());
                ControlFlow::Continue(())
            });
            out?;
            paths.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
            lists.push(paths);
        }
        let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
        if !self.assign(&lists, 0, 0, VertexSet::EMPTY, &mut chosen)? {
            return Ok(None);
        }
        let families = pairs
            .iter()
            .zip(&chosen)
            .zip(&lists)
            .map(|((&(x, y), idx), list)| PathFamily {
                x,
                y,
                paths: idx.iter().map(|&i| list[i].clone()).collect(),
            })
            .collect();
        Ok(Some(StrongBlockWitness { block, families }))
    }

    /// Picks paths for family `f` starting at list index `from`, keeping all
    /// interiors disjoint from `used`.
    fn assign(
        &mut self,
        lists: &[Vec<PathSeq>],
        f: usize,
        from: usize,
        used: VertexSet,
        chosen: &mut [Vec<usize>],
    ) -> Step<bool> {
        if f == lists.len() {
            return Ok(true);
        }
        if chosen[f].len() == self.k {
            return self.assign(lists, f + 1, 0, used, chosen);
        }
        for i in from..lists[f].len() {
            let int = inner(&lists[f][i]);
            if !used.is_disjoint(int) {
                continue;
            }
            self.tick()?;
            chosen[f].push(i);
            if self.assign(lists, f, i + 1, used | int, chosen)? {
                return Ok(true);
            }
            chosen[f].pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_opposite_pair() {
        let g = SimpleGraph::cycle(4);
        let w = StrongBlockWitness {
            block: VertexSet::singleton(0).with(2),
            families: vec![PathFamily {
                x: 0,
                y: 2,
                paths: vec![vec![0, 1, 2], vec![0, 3, 2]],
            }],
        };
        assert_eq!(verify_strong_block(&g, 2, &w), Ok(Outcome::Ok));
        assert_eq!(verify_strong_block(&g, 3, &w), Ok(Outcome::Violated(Clause::BlockSize)));
        let BlockSearch::Found { witness } = find_strong_block(&g, 2, 1000).unwrap() else {
            panic!("C4 has a strong 2-block");
        };
        assert_eq!(witness, w);
    }

    #[test]
    fn crossing_and_missing_families() {
        // K_{2,3} with parts {0,1} and {2,3,4}: {2,3} share the path through 0
        let g = SimpleGraph::complete_bipartite(2, 3);
        let w = StrongBlockWitness {
            block: [2usize, 3, 4].iter().collect(),
            families: vec![
                PathFamily {
                    x: 2,
                    y: 3,
                    paths: vec![vec![2, 0, 3], vec![2, 1, 3]],
                },
                PathFamily {
                    x: 2,
                    y: 4,
                    paths: vec![vec![2, 0, 4], vec![2, 1, 4]],
                },
                PathFamily {
                    x: 3,
                    y: 4,
                    paths: vec![vec![3, 0, 4], vec![3, 1, 4]],
                },
            ],
        };
        assert_eq!(
            verify_strong_block(&g, 2, &w),
            Ok(Outcome::Violated(Clause::BlockCrossing))
        );
        let short = StrongBlockWitness {
            families: w.families[..2].to_vec(),
            ..w.clone()
        };
        assert_eq!(
            verify_strong_block(&g, 2, &short),
            Ok(Outcome::Violated(Clause::BlockPaths))
        );
        let mut dup = w.clone();
        dup.families.push(w.families[0].clone());
        assert!(verify_strong_block(&g, 2, &dup).is_err());
    }

    #[test]
    fn searches() {
        let tree = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(find_strong_block(&tree, 2, 10_000).unwrap(), BlockSearch::Absent);
        // adjacent ends admit only the edge, so K4 has no strong 2-block
        assert_eq!(
            find_strong_block(&SimpleGraph::complete(4), 2, 10_000).unwrap(),
            BlockSearch::Absent
        );
        assert!(matches!(
            find_strong_block(&tree, 1, 0).unwrap(),
            BlockSearch::Found { .. }
        ));
        // three pairs need nine private middle vertices
        let k39 = SimpleGraph::complete_bipartite(3, 9);
        let BlockSearch::Found { witness } = find_strong_block(&k39, 3, 100_000).unwrap() else {
            panic!("K39 has a strong 3-block");
        };
        assert_eq!(witness.block, VertexSet::full(3));
        assert_eq!(verify_strong_block(&k39, 3, &witness), Ok(Outcome::Ok));
        let k38 = SimpleGraph::complete_bipartite(3, 8);
        assert_eq!(find_strong_block(&k38, 3, 1_000_000).unwrap(), BlockSearch::Absent);
        assert!(matches!(
            find_strong_block(&k39, 3, 2).unwrap(),
            BlockSearch::Inconclusive { .. }
        ));
        assert!(find_strong_block(&k39, 0, 10).is_err());
    }

    #[test]
    fn flow_counts() {
        let g = SimpleGraph::complete_bipartite(3, 4);
        assert_eq!(internally_disjoint_count(&g, 0, 1, g.vertices()), 4);
        assert_eq!(internally_disjoint_count(&g, 3, 4, g.vertices()), 3);
        assert_eq!(
            internally_disjoint_count(&SimpleGraph::complete(5), 0, 1, VertexSet::full(5)),
            4
        );
        assert_eq!(
            internally_disjoint_count(&SimpleGraph::cycle(6), 0, 3, VertexSet::full(6)),
            2
        );
    }
}
