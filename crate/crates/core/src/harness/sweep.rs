//! Exhaustive and randomized sweeps. Each returns a [`SweepReport`] whose
//! content depends only on its parameters: partial results are merged in
//! enumeration order and findings are sorted before they are returned.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::detect::certificate::Certificate;
use crate::detect::chordal::is_chordal;
use crate::detect::cliques::clique_number;
use crate::detect::holes::{all_holes, find_c4, find_hole, has_c4, Parity};
use crate::detect::{find_even_wheel, find_prism, find_theta, in_class_e, is_member_e};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::io::{parse_graph6, write_graph6};
use crate::ktree::{embed_in_ktree, is_induced_embedding, random_ktree};
use crate::minor::{
    check_adjacent_centers, check_minors_with, eligible_pairs, triangle_minor, AdjacentCentersCheck, TriangleMinor,
};
use crate::predicates::{extract_induced_from_blurry, verify_blurry, BlurryWitness, Extraction, Outcome};

use super::enumerate::{fold_graphs, ENUM_MAX};

pub const REPORT_SCHEMA: &str = "obstruction-lab/sweep/v1";

/// A graph and the evidence attached to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub graph: String,
    pub witness: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: String,
    pub name: String,
    pub n_range: [usize; 2],
    pub graphs_examined: u64,
    pub instances_checked: u64,
    pub violations: Vec<Finding>,
    /// Positive findings of searches (not failures).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exemplars: Vec<Finding>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counters: BTreeMap<String, u64>,
    /// Not serialized, so reports of identical runs compare byte for byte.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<SweepReport> {
        let r: SweepReport = serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        if r.schema != REPORT_SCHEMA {
            return Err(Error::parse(0, format!("unknown schema {:?}", r.schema)));
        }
        Ok(r)
    }

    pub fn counter(&self, key: &str) -> u64 {
        self.counters.get(key).copied().unwrap_or(0)
    }
}

/// Most exemplars a search keeps; the smallest ones in sorted order win.
pub const EXEMPLAR_CAP: usize = 16;

#[derive(Default)]
struct Tally {
    graphs: u64,
    instances: u64,
    violations: Vec<Finding>,
    exemplars: Vec<Finding>,
    counters: BTreeMap<String, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.graphs += other.graphs;
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self.exemplars.extend(other.exemplars);
        if self.exemplars.len() > 4 * EXEMPLAR_CAP {
            sort_findings(&mut self.exemplars);
            self.exemplars.truncate(EXEMPLAR_CAP);
        }
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
        self
    }

    fn bump(&mut self, key: &str) {
        *self.counters.entry(key.to_string()).or_default() += 1;
    }

    fn violation(&mut self, g: &SimpleGraph, witness: impl Serialize) {
        self.violations.push(finding(g, witness));
    }

    fn into_report(mut self, name: &str, n_range: [usize; 2], started: Instant) -> SweepReport {
        sort_findings(&mut self.violations);
        sort_findings(&mut self.exemplars);
        self.exemplars.truncate(EXEMPLAR_CAP);
        SweepReport {
            schema: REPORT_SCHEMA.to_string(),
            name: name.to_string(),
            n_range,
            graphs_examined: self.graphs,
            instances_checked: self.instances,
            violations: self.violations,
            exemplars: self.exemplars,
            counters: self.counters,
            wall_time: started.elapsed(),
        }
    }
}

fn finding(g: &SimpleGraph, witness: impl Serialize) -> Finding {
    Finding {
        graph: write_graph6(g),
        witness: serde_json::to_value(witness).expect("witness serializes"),
    }
}

// smaller graphs first, then graph6, then witness text
fn sort_findings(fs: &mut [Finding]) {
    fs.sort_by_cached_key(|f| (f.graph.len(), f.graph.clone(), f.witness.to_string()));
}

fn check_max_n(max_n: usize) -> Result<()> {
    if (1..=ENUM_MAX).contains(&max_n) {
        Ok(())
    } else {
        Err(Error::precondition(format!(
            "max_n must be in 1..={ENUM_MAX}, got {max_n}"
        )))
    }
}

/// Where a sweep takes its graphs from.
#[derive(Clone, Copy, Debug)]
pub enum Source<'a> {
    /// Every graph on `1..=max_n` vertices up to isomorphism.
    Exhaustive(usize),
    /// The given graphs, in order.
    Graphs(&'a [SimpleGraph]),
}

/// The per-graph sweeps, for running over a [`Source`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Thm31,
    Thm32,
    EvenHoleSubsetE,
    Embed(usize),
    C4Necessity,
}

pub fn run_suite(suite: Suite, source: Source) -> Result<SweepReport> {
    match suite {
        Suite::Thm31 => sweep_over(
            "thm31",
            source,
            minor_check(&|g, z1, z2| triangle_minor(g, z1, z2).expect("eligible pairs are edges")),
        ),
        Suite::Thm32 => sweep_over("thm32", source, centers_check),
        Suite::EvenHoleSubsetE => sweep_over("even-hole-subset-e", source, even_hole_check),
        Suite::Embed(k) => {
            if k == 0 {
                return Err(Error::precondition("k must be at least 1"));
            }
            sweep_over(&format!("embed-k{k}"), source, embed_check(k))
        }
        Suite::C4Necessity => sweep_over("c4-necessity", source, c4_check),
    }
}

fn sweep_over(name: &str, source: Source, per_graph: impl Fn(&SimpleGraph, &mut Tally) + Sync) -> Result<SweepReport> {
    let started = Instant::now();
    let visit = |mut t: Tally, g: &SimpleGraph| {
        t.graphs += 1;
        per_graph(g, &mut t);
        t
    };
    match source {
        Source::Exhaustive(max_n) => {
            check_max_n(max_n)?;
            let mut total = Tally::default();
            for n in 1..=max_n {
                total = total.merge(fold_graphs(n, Tally::default, visit, Tally::merge));
            }
            Ok(total.into_report(name, [1, max_n], started))
        }
        Source::Graphs(gs) => {
            let lo = gs.iter().map(SimpleGraph::n).min().unwrap_or(0);
            let hi = gs.iter().map(SimpleGraph::n).max().unwrap_or(0);
            let total = gs
                .par_iter()
                .fold(Tally::default, |t, g| visit(t, g))
                .reduce(Tally::default, Tally::merge);
            Ok(total.into_report(name, [lo, hi], started))
        }
    }
}

pub type MinorFn = dyn Fn(&SimpleGraph, usize, usize) -> TriangleMinor + Sync;

/// Every eligible pair of every class member on at most `max_n` vertices:
/// the triangle minor must stay in the class.
pub fn sweep_thm31(max_n: usize) -> Result<SweepReport> {
    run_suite(Suite::Thm31, Source::Exhaustive(max_n))
}

/// [`sweep_thm31`] with the minor computation replaced, for fault injection.
pub fn sweep_thm31_with(max_n: usize, name: &str, minor: &MinorFn) -> Result<SweepReport> {
    sweep_over(name, Source::Exhaustive(max_n), minor_check(minor))
}

fn minor_check(minor: &MinorFn) -> impl Fn(&SimpleGraph, &mut Tally) + Sync + '_ {
    move |g, t| {
        if has_c4(g) || eligible_pairs(g).is_empty() || !is_member_e(g) {
            return;
        }
        let (pairs, violations) = check_minors_with(g, minor);
        t.instances += pairs as u64;
        for v in violations {
            t.violation(g, v);
        }
    }
}

/// The triangle minor with one wrong edge: the contracted vertex is joined
/// to the least vertex it does not already see.
pub fn corrupted_minor(g: &SimpleGraph, z1: usize, z2: usize) -> TriangleMinor {
    let mut m = triangle_minor(g, z1, z2).expect("eligible pairs are edges");
    let miss = m.graph.vertices() - m.graph.closed_neighbors(m.z);
    if let Some(v) = miss.min() {
        m.graph = m.graph.with_edge(m.z, v);
    }
    m
}

#[derive(Serialize)]
struct CentersViolation<'a> {
    hole: &'a [usize],
    z1: usize,
    z2: usize,
    outcome: AdjacentCentersCheck,
}

/// Every hole and every edge off it whose ends both see the hole without a
/// common neighbor there, in class members on at most `max_n` vertices:
/// exactly one end sees the hole as a clique.
pub fn sweep_thm32(max_n: usize) -> Result<SweepReport> {
    run_suite(Suite::Thm32, Source::Exhaustive(max_n))
}

fn centers_check(g: &SimpleGraph, t: &mut Tally) {
    if has_c4(g) || !is_member_e(g) {
        return;
    }
    for hole in all_holes(g) {
        let rim: VertexSet = hole.iter().collect();
        for (z1, z2) in g.edges() {
            if rim.contains(z1) || rim.contains(z2) {
                continue;
            }
            match check_adjacent_centers(g, &hole, z1, z2) {
                AdjacentCentersCheck::Skip { .. } => {}
                AdjacentCentersCheck::Pass { .. } => t.instances += 1,
                outcome @ AdjacentCentersCheck::Violation { .. } => {
                    t.instances += 1;
                    t.violation(
                        g,
                        CentersViolation {
                            hole: &hole,
                            z1,
                            z2,
                            outcome,
                        },
                    );
                }
            }
        }
    }
}

/// Every even-hole-free graph on at most `max_n` vertices is a class member.
pub fn sweep_even_hole_subset_e(max_n: usize) -> Result<SweepReport> {
    run_suite(Suite::EvenHoleSubsetE, Source::Exhaustive(max_n))
}

fn even_hole_check(g: &SimpleGraph, t: &mut Tally) {
    if has_c4(g) || find_hole(g, Parity::Even, 6).is_some() {
        return;
    }
    t.instances += 1;
    if let Some(c) = in_class_e(g).certificate() {
        t.violation(g, c);
    }
}

#[derive(Serialize)]
#[serde(tag = "failure", rename_all = "snake_case")]
enum EmbedFailure {
    Error { message: String },
    InvalidKTree { tree: String },
    NotInduced { tree: String, embedding: Vec<usize> },
}

/// Every chordal graph on at most `max_n` vertices without `K_{k+2}` embeds
/// as an induced subgraph of a valid k-tree.
pub fn sweep_embed(max_n: usize, k: usize) -> Result<SweepReport> {
    run_suite(Suite::Embed(k), Source::Exhaustive(max_n))
}

fn embed_check(k: usize) -> impl Fn(&SimpleGraph, &mut Tally) + Sync {
    move |g, t| {
        if clique_number(g) >= k + 2 || !is_chordal(g).is_chordal() {
            return;
        }
        t.instances += 1;
        let (tree, map) = match embed_in_ktree(g, k) {
            Ok(x) => x,
            Err(e) => return t.violation(g, EmbedFailure::Error { message: e.to_string() }),
        };
        if !tree.validate().is_ok_and(|c| c.is_valid()) {
            return t.violation(g, EmbedFailure::InvalidKTree { tree: tree.to_text() });
        }
        if !is_induced_embedding(&tree.graph, g, &map) {
            t.violation(
                g,
                EmbedFailure::NotInduced {
                    tree: tree.to_text(),
                    embedding: map,
                },
            );
        }
        let key = format!("added_vertices_{:02}", tree.h() - g.n());
        t.bump(&key);
    }
}

/// A host with a C4 but no theta, prism or even wheel, and an eligible pair
/// whose triangle minor has a theta.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C4Exemplar {
    pub host: String,
    pub z1: usize,
    pub z2: usize,
    pub minor: String,
    pub c4: Certificate,
    pub theta: Certificate,
}

impl C4Exemplar {
    /// Re-derives every claim from the graph6 strings.
    pub fn reverify(&self) -> std::result::Result<(), String> {
        let g = parse_graph6(&self.host).map_err(|e| e.to_string())?;
        let m = parse_graph6(&self.minor).map_err(|e| e.to_string())?;
        self.c4.validate(&g)?;
        if self.c4.kind() != "c4" {
            return Err(format!("expected a c4 certificate, got {}", self.c4.kind()));
        }
        if find_theta(&g).is_some() || find_prism(&g).is_some() || find_even_wheel(&g).is_some() {
            return Err("host has a theta, prism or even wheel".into());
        }
        if !eligible_pairs(&g).iter().any(|p| (p.z1, p.z2) == (self.z1, self.z2)) {
            return Err(format!("({}, {}) is not an eligible pair", self.z1, self.z2));
        }
        let computed = triangle_minor(&g, self.z1, self.z2).map_err(|e| e.to_string())?;
        if computed.graph != m {
            return Err("stored minor differs from the computed one".into());
        }
        if self.theta.kind() != "theta" {
            return Err(format!("expected a theta certificate, got {}", self.theta.kind()));
        }
        self.theta.validate(&m)
    }
}

/// Searches graphs on at most `max_n` vertices for [`C4Exemplar`]s.
pub fn sweep_c4_necessity(max_n: usize) -> Result<SweepReport> {
    run_suite(Suite::C4Necessity, Source::Exhaustive(max_n))
}

fn c4_check(g: &SimpleGraph, t: &mut Tally) {
    let Some(c4) = find_c4(g) else { return };
    let pairs = eligible_pairs(g);
    if pairs.is_empty() || find_theta(g).is_some() || find_prism(g).is_some() || find_even_wheel(g).is_some() {
        return;
    }
    t.bump("hosts");
    for p in pairs {
        t.instances += 1;
        let m = triangle_minor(g, p.z1, p.z2).expect("eligible pairs are edges");
        if let Some(theta) = find_theta(&m.graph) {
            t.bump("exemplars");
            let ex = C4Exemplar {
                host: write_graph6(g),
                z1: p.z1,
                z2: p.z2,
                minor: write_graph6(&m.graph),
                c4: c4.clone(),
                theta,
            };
            t.exemplars.push(finding(g, ex));
        }
    }
}

/// Bounds for the randomized blurry-copy constructions.
pub const OBS51_TREE_SIZES: [usize; 2] = [2, 9];
pub const OBS51_MAX_EXTRA: usize = 4;
const OBS51_EDGE_P: f64 = 0.35;

/// A random 2-tree planted in a random `K_4`-free host.
pub fn random_blurry_instance<R: Rng>(rng: &mut R) -> (SimpleGraph, BlurryWitness) {
    let h = rng.gen_range(OBS51_TREE_SIZES[0]..=OBS51_TREE_SIZES[1]);
    let target = random_ktree(2, h, rng);
    let n = h + rng.gen_range(0..=OBS51_MAX_EXTRA);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = SimpleGraph::empty(n);
    let mut y_edges = Vec::new();
    for (u, v) in target.graph.edges() {
        g = g.with_edge(labels[u], labels[v]);
        y_edges.push((labels[u], labels[v]));
    }
    // outside vertices get random edges that close no K4
    for &o in &labels[h..] {
        for v in 0..n {
            if v != o && !g.has_edge(o, v) && rng.gen_bool(OBS51_EDGE_P) {
                let common = g.neighbors(o) & g.neighbors(v);
                if g.is_stable(common) {
                    g = g.with_edge(o, v);
                }
            }
        }
    }
    let order = target.order.iter().map(|&u| labels[u]).collect();
    (g, BlurryWitness { order, y_edges, target })
}

#[derive(Serialize)]
#[serde(tag = "failure", rename_all = "snake_case")]
enum BlurryFailure {
    NotBlurry { outcome: Outcome },
    Error { message: String },
    Fallback { extraction: Extraction },
    NotInduced { embedding: Vec<usize> },
}

/// `trials` random blurry copies in `K_4`-free hosts: extraction must take
/// the direct path and the embedding must be induced.
pub fn sweep_obs51(trials: u64, seed: u64) -> Result<SweepReport> {
    let started = Instant::now();
    let tally = (0..trials)
        .map(|i| {
            let mut t = Tally::default();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let (g, w) = random_blurry_instance(&mut rng);
            t.graphs += 1;
            t.instances += 1;
            if crate::detect::has_clique(&g, 4).is_some() {
                t.violation(
                    &g,
                    BlurryFailure::Error {
                        message: "construction produced a K4".into(),
                    },
                );
                return t;
            }
            let record = |t: &mut Tally, f: BlurryFailure| {
                t.violations.push(finding(&g, (&w, f)));
            };
            match verify_blurry(&g, &w) {
                Ok(Outcome::Ok) => {}
                Ok(outcome) => {
                    record(&mut t, BlurryFailure::NotBlurry { outcome });
                    return t;
                }
                Err(e) => {
                    record(&mut t, BlurryFailure::Error { message: e.to_string() });
                    return t;
                }
            }
            match extract_induced_from_blurry(&g, &w) {
                Ok(Extraction::Direct { embedding }) => {
                    t.bump("direct");
                    if !is_induced_embedding(&g, &w.target.graph, &embedding) {
                        record(&mut t, BlurryFailure::NotInduced { embedding });
                    }
                }
                Ok(extraction) => {
                    t.bump("fallback");
                    record(&mut t, BlurryFailure::Fallback { extraction });
                }
                Err(e) => record(&mut t, BlurryFailure::Error { message: e.to_string() }),
            }
            t
        })
        .fold(Tally::default(), Tally::merge);
    let hi = OBS51_TREE_SIZES[1] + OBS51_MAX_EXTRA;
    Ok(tally.into_report("obs51", [OBS51_TREE_SIZES[0], hi], started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_theorem_sweeps_are_clean() {
        for r in [
            sweep_thm31(6).unwrap(),
            sweep_thm32(7).unwrap(),
            sweep_even_hole_subset_e(6).unwrap(),
            sweep_embed(6, 2).unwrap(),
        ] {
            assert!(r.passed(), "{}: {:?}", r.name, r.violations.first());
            assert!(r.instances_checked > 0, "{} checked nothing", r.name);
        }
        // 1 + 2 + 4 + 11 + 34 + 156
        assert_eq!(sweep_thm31(6).unwrap().graphs_examined, 208);
    }

    #[test]
    fn corruption_is_caught() {
        let r = sweep_thm31_with(6, "mutant", &corrupted_minor).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn reports_round_trip_and_repeat() {
        let a = sweep_obs51(50, 7).unwrap();
        let b = sweep_obs51(50, 7).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.passed(), "{:?}", a.violations.first());
        assert_eq!(a.counter("direct"), 50);
        assert_eq!(SweepReport::from_json(&a.to_json()).unwrap().to_json(), a.to_json());
        assert!(sweep_thm31(11).is_err());
    }
}
