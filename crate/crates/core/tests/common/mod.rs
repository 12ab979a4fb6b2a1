#![allow(dead_code)]

pub mod oracle;

use obstruction_lab::detect::{find_even_wheel, find_hole, find_prism, find_theta, Certificate, Parity};
use obstruction_lab::SimpleGraph;

/// Compares every detector with the oracle on `g`; returns a description of the first disagreement.
pub fn disagreement(g: &SimpleGraph) -> Option<String> {
    let checks: [(&str, Option<Certificate>, bool); 6] = [
        ("theta", find_theta(g), oracle::has_theta(g)),
        ("prism", find_prism(g), oracle::has_prism(g)),
        ("even wheel", find_even_wheel(g), oracle::has_even_wheel(g)),
        ("hole", find_hole(g, Parity::Any, 4), oracle::has_hole(g, None, 4)),
        (
            "even hole",
            find_hole(g, Parity::Even, 4),
            oracle::has_hole(g, Some(0), 4),
        ),
        (
            "odd hole",
            find_hole(g, Parity::Odd, 4),
            oracle::has_hole(g, Some(1), 4),
        ),
    ];
    for (name, found, expected) in checks {
        if let Some(c) = &found {
            if let Err(e) = c.validate(g) {
                return Some(format!("{name}: invalid certificate {c:?}: {e}"));
            }
        }
        if found.is_some() != expected {
            return Some(format!("{name}: detector {} oracle {expected}", found.is_some()));
        }
    }
    None
}
