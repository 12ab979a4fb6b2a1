use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::io::{parse_graph6, write_graph6};

/// Version tag written into every JSON envelope.
pub const SCHEMA: &str = "obstruction-lab/v1";

/// An explicit witness for an induced structure, with role-annotated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Induced cycle in cyclic order.
    Hole {
        cycle: Vec<usize>,
    },
    /// Non-adjacent ends joined by three paths (each listed from `ends[0]` to `ends[1]`).
    Theta {
        ends: [usize; 2],
        paths: [Vec<usize>; 3],
    },
    /// `paths[i]` runs from `triangles[0][i]` to `triangles[1][i]`.
    Prism {
        triangles: [[usize; 3]; 2],
        paths: [Vec<usize>; 3],
    },
    EvenWheel {
        rim: Vec<usize>,
        center: usize,
    },
    Clique {
        vertices: Vec<usize>,
    },
    Biclique {
        left: Vec<usize>,
        right: Vec<usize>,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Hole { cycle } if cycle.len() == 4 => "c4",
            Certificate::Hole { .. } => "hole",
            Certificate::Theta { .. } => "theta",
            Certificate::Prism { .. } => "prism",
            Certificate::EvenWheel { .. } => "even_wheel",
            Certificate::Clique { .. } => "clique",
            Certificate::Biclique { .. } => "biclique",
        }
    }

    /// Every vertex the certificate mentions.
    pub fn vertex_set(&self) -> VertexSet {
        match self {
            Certificate::Hole { cycle } => cycle.iter().collect(),
            Certificate::Theta { ends, paths } => paths.iter().flatten().chain(ends.iter()).collect(),
            Certificate::Prism { triangles, paths } => {
                paths.iter().flatten().chain(triangles.iter().flatten()).collect()
            }
            Certificate::EvenWheel { rim, center } => rim.iter().collect::<VertexSet>().with(*center),
            Certificate::Clique { vertices } => vertices.iter().collect(),
            Certificate::Biclique { left, right } => left.iter().chain(right).collect(),
        }
    }

    /// Re-checks the certificate against `g` using only the definitions.
    pub fn validate(&self, g: &SimpleGraph) -> std::result::Result<(), String> {
        let n = g.n();
        match self {
            Certificate::Hole { cycle } => {
                in_range(n, cycle.iter())?;
                distinct(cycle)?;
                ensure(g.is_hole(cycle), "not an induced cycle of length >= 4")
            }
            Certificate::Theta { ends: [a, b], paths } => {
                in_range(n, paths.iter().flatten().chain([a, b]))?;
                ensure(a != b, "ends coincide")?;
                ensure(!g.has_edge(*a, *b), "ends are adjacent")?;
                let mut interiors = Vec::new();
                for p in paths {
                    ensure(p.len() >= 3, "path shorter than two edges")?;
                    ensure(p[0] == *a && p[p.len() - 1] == *b, "path does not join the ends")?;
                    distinct(p)?;
                    ensure(g.is_induced_path(p), "path is not induced")?;
                    interiors.push(p[1..p.len() - 1].iter().collect::<VertexSet>());
                }
                pairwise_separated(g, &interiors)
            }
            Certificate::Prism { triangles, paths } => {
                in_range(n, paths.iter().flatten().chain(triangles.iter().flatten()))?;
                let [ta, tb] = triangles;
                let sa: VertexSet = ta.iter().collect();
                let sb: VertexSet = tb.iter().collect();
                ensure(sa.len() == 3 && g.is_clique(sa), "first triangle invalid")?;
                ensure(sb.len() == 3 && g.is_clique(sb), "second triangle invalid")?;
                ensure(sa.is_disjoint(sb), "triangles intersect")?;
                let mut sets = Vec::new();
                for (i, p) in paths.iter().enumerate() {
                    ensure(!p.is_empty(), "empty path")?;
                    ensure(
                        p[0] == ta[i] && p[p.len() - 1] == tb[i],
                        "path ends do not match triangles",
                    )?;
                    ensure(p.len() >= 2, "path has a single vertex")?;
                    distinct(p)?;
                    ensure(g.is_induced_path(p), "path is not induced")?;
                    sets.push(p.iter().collect::<VertexSet>());
                }
                for i in 0..3 {
                    for j in i + 1..3 {
                        ensure(sets[i].is_disjoint(sets[j]), "paths intersect")?;
                        for u in sets[i] {
                            let expect = if u == ta[i] {
                                VertexSet::singleton(ta[j])
                            } else if u == tb[i] {
                                VertexSet::singleton(tb[j])
                            } else {
                                VertexSet::EMPTY
                            };
                            ensure(g.neighbors(u) & sets[j] == expect, "extra edge between paths")?;
                        }
                    }
                }
                Ok(())
            }
            Certificate::EvenWheel { rim, center } => {
                in_range(n, rim.iter().chain([center]))?;
                distinct(rim)?;
                ensure(g.is_hole(rim), "rim is not a hole")?;
                ensure(!rim.contains(center), "center lies on the rim")?;
                let spokes = (g.neighbors(*center) & rim.iter().collect()).len();
                ensure(
                    spokes >= 4 && spokes % 2 == 0,
                    "center does not have an even number (>= 4) of rim neighbors",
                )
            }
            Certificate::Clique { vertices } => {
                in_range(n, vertices.iter())?;
                distinct(vertices)?;
                ensure(g.is_clique(vertices.iter().collect()), "not a clique")
            }
            Certificate::Biclique { left, right } => {
                in_range(n, left.iter().chain(right))?;
                distinct(left)?;
                distinct(right)?;
                let l: VertexSet = left.iter().collect();
                let r: VertexSet = right.iter().collect();
                ensure(left.len() == right.len() && !left.is_empty(), "sides differ in size")?;
                ensure(l.is_disjoint(r), "sides intersect")?;
                ensure(g.is_stable(l) && g.is_stable(r), "side is not stable")?;
                ensure(g.is_complete_to(l, r), "sides are not complete to each other")
            }
        }
    }
}

fn ensure(ok: bool, msg: &str) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn in_range<'a>(n: usize, vs: impl IntoIterator<Item = &'a usize>) -> std::result::Result<(), String> {
    match vs.into_iter().find(|&&v| v >= n) {
        Some(v) => Err(format!("vertex {v} out of range")),
        None => Ok(()),
    }
}

fn distinct(seq: &[usize]) -> std::result::Result<(), String> {
    let set: VertexSet = seq.iter().collect();
    ensure(set.len() == seq.len(), "repeated vertex")
}

fn pairwise_separated(g: &SimpleGraph, sets: &[VertexSet]) -> std::result::Result<(), String> {
    for (i, &a) in sets.iter().enumerate() {
        for &b in &sets[i + 1..] {
            ensure(a.is_disjoint(b), "path interiors intersect")?;
            ensure(g.is_anticomplete(a, b), "path interiors are not anticomplete")?;
        }
    }
    Ok(())
}

/// JSON envelope carrying a certificate together with its host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub schema: String,
    pub host: String,
    pub certificate: Certificate,
}

impl CertificateReport {
    pub fn new(host: &SimpleGraph, certificate: Certificate) -> Self {
        CertificateReport {
            schema: SCHEMA.to_string(),
            host: write_graph6(host),
            certificate,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))
    }

    /// Parses the host and validates the certificate against it.
    pub fn revalidate(&self) -> Result<()> {
        let g = parse_graph6(&self.host)?;
        self.certificate.validate(&g).map_err(Error::Contract)
    }
}
