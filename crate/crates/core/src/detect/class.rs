//! Membership verdicts for the class of (C4, theta, prism, even wheel)-free
//! graphs, optionally also excluding `K_t`.

use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;

use super::certificate::Certificate;
use super::cliques::has_clique;
use super::holes::{find_c4, has_c4};
use super::prism::find_prism;
use super::theta::find_theta;
use super::wheel::find_even_wheel;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Member,
    Violation { certificate: Certificate },
}

impl Verdict {
    pub fn is_member(&self) -> bool {
        matches!(self, Verdict::Member)
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Member => None,
            Verdict::Violation { certificate } => Some(certificate),
        }
    }
}

fn first_violation(g: &SimpleGraph) -> Option<Certificate> {
    find_c4(g)
        .or_else(|| find_theta(g))
        .or_else(|| find_prism(g))
        .or_else(|| find_even_wheel(g))
}

/// Checks C4, theta, prism, even wheel in that order and reports the first
/// structure found.
pub fn in_class_e(g: &SimpleGraph) -> Verdict {
    match first_violation(g) {
        None => Verdict::Member,
        Some(certificate) => Verdict::Violation { certificate },
    }
}

/// As [`in_class_e`], then additionally requires the graph to be `K_t`-free.
pub fn in_class_et(g: &SimpleGraph, t: usize) -> Verdict {
    assert!(t >= 1, "t must be positive");
    match first_violation(g).or_else(|| has_clique(g, t)) {
        None => Verdict::Member,
        Some(certificate) => Verdict::Violation { certificate },
    }
}

/// Boolean membership test ordered cheapest first; no certificate is built
/// for the C4 check.
pub fn is_member_e(g: &SimpleGraph) -> bool {
    !has_c4(g) && find_theta(g).is_none() && find_prism(g).is_none() && find_even_wheel(g).is_none()
}

/// Boolean membership in the `K_t`-free subclass, with the clique test
/// moved ahead of the path searches.
pub fn is_member_et(g: &SimpleGraph, t: usize) -> bool {
    !has_c4(g)
        && has_clique(g, t).is_none()
        && find_theta(g).is_none()
        && find_prism(g).is_none()
        && find_even_wheel(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(in_class_e(&c5), Verdict::Member);
        assert_eq!(in_class_et(&c5, 3), Verdict::Member);
        let v = in_class_e(&SimpleGraph::cycle(4));
        assert_eq!(v.certificate().map(Certificate::kind), Some("c4"));
    }

    #[test]
    fn check_order() {
        // K_{2,3} holds a C4 and a theta; the C4 is reported
        let k23 = SimpleGraph::complete_bipartite(2, 3);
        assert_eq!(in_class_e(&k23).certificate().unwrap().kind(), "c4");
        let c6 = SimpleGraph::cycle(6);
        assert!(in_class_e(&c6).is_member());
        assert!(is_member_e(&c6));
        let k4 = SimpleGraph::complete(4);
        assert!(is_member_e(&k4));
        assert_eq!(in_class_et(&k4, 4).certificate().unwrap().kind(), "clique");
        assert!(!is_member_et(&k4, 4));
        assert!(is_member_et(&k4, 5));
    }

    #[test]
    fn verdict_json() {
        let v = in_class_e(&SimpleGraph::cycle(4));
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(
            text,
            r#"{"verdict":"violation","certificate":{"kind":"hole","cycle":[0,1,2,3]}}"#
        );
    }
}
