//! Brute-force reference implementations: enumerate vertex subsets and
//! classify the induced subgraph by its degree pattern.

use obstruction_lab::{SimpleGraph, VertexSet};

fn degrees_within(g: &SimpleGraph, s: VertexSet) -> Vec<(usize, usize)> {
    s.iter().map(|v| (v, (g.neighbors(v) & s).len())).collect()
}

/// `s` induces a hole.
pub fn is_hole_set(g: &SimpleGraph, s: VertexSet) -> bool {
    s.len() >= 4 && degrees_within(g, s).iter().all(|&(_, d)| d == 2) && g.is_connected_within(s)
}

/// `s` induces a theta.
pub fn is_theta_set(g: &SimpleGraph, s: VertexSet) -> bool {
    let deg = degrees_within(g, s);
    let ends: Vec<usize> = deg.iter().filter(|&&(_, d)| d == 3).map(|&(v, _)| v).collect();
    if ends.len() != 2 || deg.iter().any(|&(_, d)| d != 2 && d != 3) {
        return false;
    }
    let (a, b) = (ends[0], ends[1]);
    if g.has_edge(a, b) || !g.is_connected_within(s) {
        return false;
    }
    let rest = s.without(a).without(b);
    g.components_within(rest)
        .iter()
        .all(|&c| !(g.neighbors(a) & c).is_empty() && !(g.neighbors(b) & c).is_empty())
}

/// `s` induces a prism.
pub fn is_prism_set(g: &SimpleGraph, s: VertexSet) -> bool {
    let deg = degrees_within(g, s);
    if deg.iter().any(|&(_, d)| d != 2 && d != 3) {
        return false;
    }
    let cubic: Vec<usize> = deg.iter().filter(|&&(_, d)| d == 3).map(|&(v, _)| v).collect();
    if cubic.len() != 6 {
        return false;
    }
    // try every split of the six cubic vertices into two triangles
    for mask in 0u32..64 {
        if mask.count_ones() != 3 || mask & 1 == 0 {
            continue;
        }
        let t1: VertexSet = (0..6).filter(|i| mask >> i & 1 == 1).map(|i| cubic[i]).collect();
        let t2: VertexSet = (0..6).filter(|i| mask >> i & 1 == 0).map(|i| cubic[i]).collect();
        if !g.is_clique(t1) || !g.is_clique(t2) {
            continue;
        }
        let mut h = g.clone();
        for t in [t1, t2] {
            let v = t.to_vec();
            h = h
                .without_edge(v[0], v[1])
                .without_edge(v[0], v[2])
                .without_edge(v[1], v[2]);
        }
        let comps = h.components_within(s);
        let ok = comps.len() == 3
            && comps.iter().all(|&c| {
                // a path (edges = vertices - 1) with one end in each triangle
                let edges: usize = c.iter().map(|v| (h.neighbors(v) & c).len()).sum::<usize>() / 2;
                edges + 1 == c.len() && (c & t1).len() == 1 && (c & t2).len() == 1
            });
        if ok {
            return true;
        }
    }
    false
}

/// `s` induces an even wheel.
pub fn is_even_wheel_set(g: &SimpleGraph, s: VertexSet) -> bool {
    s.iter().any(|v| {
        let rim = s.without(v);
        let spokes = (g.neighbors(v) & rim).len();
        spokes >= 4 && spokes % 2 == 0 && is_hole_set(g, rim)
    })
}

fn any_subset(g: &SimpleGraph, min: usize, pred: impl Fn(VertexSet) -> bool) -> bool {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential");
    (0u64..1 << n)
        .map(|b| VertexSet::from_bits(b as u128))
        .filter(|s| s.len() >= min)
        .any(pred)
}

pub fn has_hole(g: &SimpleGraph, parity: Option<usize>, min_len: usize) -> bool {
    any_subset(g, min_len.max(4), |s| {
        parity.map_or(true, |p| s.len() % 2 == p) && is_hole_set(g, s)
    })
}

pub fn has_theta(g: &SimpleGraph) -> bool {
    any_subset(g, 5, |s| is_theta_set(g, s))
}

pub fn has_prism(g: &SimpleGraph) -> bool {
    any_subset(g, 6, |s| is_prism_set(g, s))
}

pub fn has_even_wheel(g: &SimpleGraph) -> bool {
    any_subset(g, 5, |s| is_even_wheel_set(g, s))
}

pub fn has_c4(g: &SimpleGraph) -> bool {
    any_subset(g, 4, |s| s.len() == 4 && is_hole_set(g, s))
}

/// Membership in the class by brute force.
pub fn in_class(g: &SimpleGraph) -> bool {
    !has_c4(g) && !has_theta(g) && !has_prism(g) && !has_even_wheel(g)
}

/// Every permutation of `0..n`, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

/// Number of isomorphism classes on `n` vertices (optionally connected
/// only), by taking the least relabeled edge mask over all permutations of
/// every labeled graph.
pub fn brute_force_classes(n: usize, connected_only: bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        if connected_only && !g.is_connected() {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .fold(0u64, |k, &(i, j)| k << 1 | g.has_edge(p[i], p[j]) as u64)
            })
            .min()
            .unwrap();
        seen.insert(key);
    }
    seen.len()
}
