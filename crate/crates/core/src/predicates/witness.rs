use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

use super::{
    verify_alignment, verify_blurry, verify_kaleidoscope, verify_mirrored, verify_palanquin, verify_strong_block,
    Alignment, BlurryWitness, Kaleidoscope, MirrorSpec, Outcome, Palanquin, StrongBlockWitness,
};

pub const WITNESS_SCHEMA: &str = "obstruction-lab/witness/v1";

/// A witness of one named structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "predicate", rename_all = "snake_case")]
pub enum Witness {
    Kaleidoscope {
        kaleidoscope: Kaleidoscope,
    },
    Mirrored {
        kaleidoscope: Kaleidoscope,
        mirror: MirrorSpec,
    },
    Palanquin {
        palanquin: Palanquin,
    },
    Alignment {
        alignment: Alignment,
    },
    Blurry {
        blurry: BlurryWitness,
    },
    StrongBlock {
        k: usize,
        block: StrongBlockWitness,
    },
}

impl Witness {
    pub fn predicate(&self) -> &'static str {
        match self {
            Witness::Kaleidoscope { .. } => "kaleidoscope",
            Witness::Mirrored { .. } => "mirrored",
            Witness::Palanquin { .. } => "palanquin",
            Witness::Alignment { .. } => "alignment",
            Witness::Blurry { .. } => "blurry",
            Witness::StrongBlock { .. } => "strong_block",
        }
    }
}

/// A host graph (graph6) and a witness, as read and written by finders and
/// the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub schema: String,
    pub graph: SimpleGraph,
    pub witness: Witness,
}

impl WitnessFile {
    pub fn new(graph: SimpleGraph, witness: Witness) -> Self {
        WitnessFile {
            schema: WITNESS_SCHEMA.to_string(),
            graph,
            witness,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: WitnessFile = serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        if file.schema != WITNESS_SCHEMA {
            return Err(Error::contract(format!("unknown witness schema {:?}", file.schema)));
        }
        Ok(file)
    }
}

pub fn verify_witness(file: &WitnessFile) -> Result<Outcome> {
    let g = &file.graph;
    match &file.witness {
        Witness::Kaleidoscope { kaleidoscope } => verify_kaleidoscope(g, kaleidoscope),
        Witness::Mirrored { kaleidoscope, mirror } => verify_mirrored(g, kaleidoscope, mirror),
        Witness::Palanquin { palanquin } => verify_palanquin(g, palanquin),
        Witness::Alignment { alignment } => verify_alignment(g, alignment),
        Witness::Blurry { blurry } => verify_blurry(g, blurry),
        Witness::StrongBlock { k, block } => verify_strong_block(g, *k, block),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::predicates::{Clause, PathFamily};

    #[test]
    fn round_trip() {
        let block = StrongBlockWitness {
            block: VertexSet::singleton(0).with(2),
            families: vec![PathFamily {
                x: 0,
                y: 2,
                paths: vec![vec![0, 1, 2], vec![0, 3, 2]],
            }],
        };
        let file = WitnessFile::new(SimpleGraph::cycle(4), Witness::StrongBlock { k: 2, block });
        let text = file.to_json();
        let back = WitnessFile::from_json(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(verify_witness(&back), Ok(Outcome::Ok));
        let json: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(json["witness"]["predicate"], "strong_block");
        assert_eq!(json["graph"], "Cl");
        let outcome = serde_json::to_value(Outcome::Violated(Clause::K3)).unwrap();
        assert_eq!(outcome, serde_json::json!({"outcome": "violated", "clause": "K3"}));
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(WitnessFile::from_json("{"), Err(Error::Parse { .. })));
        let text = r#"{"schema":"other","graph":"Cl","witness":{"predicate":"palanquin","palanquin":{"a":0,"s":[1],"paths":[]}}}"#;
        assert!(matches!(WitnessFile::from_json(text), Err(Error::Contract(_))));
    }
}
