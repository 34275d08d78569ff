//! The JSON arrangement document: conductor, blocks of coordinate-expression
//! triples with multiplicities, optional metadata. Coordinate strings are
//! the only number format; round trips are exact.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use multinets::multinet::{MultiLine, MultinetCandidate};
use multinets::projgeom::ProjLine;
use multinets::Cyclo;

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrangementDocument {
    pub conductor: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
    pub blocks: Vec<Vec<LineEntry>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LineEntry {
    pub coords: [String; 3],
    #[serde(default = "default_mult")]
    pub mult: u32,
}

fn default_mult() -> u32 {
    1
}

impl ArrangementDocument {
    pub fn from_candidate(c: &MultinetCandidate, metadata: Option<Metadata>) -> Self {
        let blocks = c
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|ml| LineEntry {
                        coords: [
                            ml.line.coords()[0].to_string(),
                            ml.line.coords()[1].to_string(),
                            ml.line.coords()[2].to_string(),
                        ],
                        mult: ml.mult,
                    })
                    .collect()
            })
            .collect();
        ArrangementDocument {
            conductor: c.conductor(),
            metadata,
            blocks,
        }
    }

    pub fn to_candidate(&self) -> Result<MultinetCandidate, CliError> {
        if self.conductor == 0 {
            return Err(CliError::input("conductor must be a positive integer"));
        }
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (bi, block) in self.blocks.iter().enumerate() {
            let mut out = Vec::with_capacity(block.len());
            for (li, entry) in block.iter().enumerate() {
                let mut coords = Vec::with_capacity(3);
                for expr in &entry.coords {
                    let value = Cyclo::parse(expr, self.conductor).map_err(|e| {
                        CliError::input(format!(
                            "block {bi}, line {li}: cannot parse {expr:?}: {e}"
                        ))
                    })?;
                    coords.push(value);
                }
                let coords: [Cyclo; 3] = coords.try_into().expect("three coordinates");
                let line = ProjLine::new(coords).map_err(|e| {
                    CliError::input(format!("block {bi}, line {li}: {e}"))
                })?;
                out.push(MultiLine::new(line, entry.mult));
            }
            blocks.push(out);
        }
        MultinetCandidate::new(self.conductor, blocks)
            .map_err(|e| CliError::input(format!("invalid arrangement: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid JSON: {e}")))
    }
}
