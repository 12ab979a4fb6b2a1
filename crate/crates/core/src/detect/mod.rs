//! Certificate-producing detectors for induced structures.

pub mod certificate;
pub mod chordal;
pub mod class;
pub mod cliques;
pub mod holes;
pub mod paths;
pub mod prism;
pub mod theta;
pub mod wheel;

pub use certificate::{Certificate, CertificateReport, SCHEMA};
pub use chordal::{is_chordal, is_perfect_elimination, Chordality};
pub use class::{in_class_e, in_class_et, is_member_e, is_member_et, Verdict};
pub use cliques::{clique_number, has_biclique, has_clique};
pub use holes::{all_holes, find_c4, find_hole, has_c4, Parity};
pub use prism::find_prism;
pub use theta::find_theta;
pub use wheel::{classify_against_hole, find_even_wheel, is_d_substantial, SubstantialHole, WheelClass};
