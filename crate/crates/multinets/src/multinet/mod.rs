//! Multi-arrangements of lines with blocks: the multinet axioms, the base
//! locus, weight and block-structure classification, Latin squares of
//! 3-nets, and projective equivalence of arrangements.

mod analysis;
mod equiv;
mod latin;

pub use analysis::{BaseAnalysis, BasePoint, OffBasePoint, VerificationReport};
pub use equiv::projectively_equivalent;
pub use latin::{group_table, isotopic_to_group, GroupSpec, LatinSquare};

use thiserror::Error;

use crate::exactnum::NumError;
use crate::projgeom::{concurrent, meet, GeomError, ProjLine, Projectivity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultinetError {
    #[error("a multinet needs at least 3 blocks, got {0}")]
    FewerThanThreeBlocks(usize),
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("line {0} appears more than once in the arrangement")]
    DuplicateLine(String),
    #[error("line multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("coordinate conductor does not divide the arrangement conductor: {0}")]
    Conductor(#[from] NumError),
    #[error("candidate fails the multinet axioms")]
    NotAMultinet,
    #[error("arrangement is not a net")]
    NotANet,
    #[error("arrangement does not have exactly 3 blocks")]
    NotThreeBlocks,
    #[error("block has fewer than 2 lines")]
    TooFewLines,
    #[error("Latin square order {0} exceeds the brute-force bound 6")]
    OrderTooLarge(usize),
    #[error("group order {group} does not match square order {square}")]
    OrderMismatch { group: usize, square: usize },
    #[error("group of order {0} is not supported")]
    UnsupportedGroup(u32),
    #[error("rows and columns must be permutations of 1..=d")]
    NotLatin,
    #[error("arrangement too large for equivalence search ({0} lines, cap 30)")]
    TooLarge(usize),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

/// A projective line carrying a positive multiplicity m(ℓ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiLine {
    pub line: ProjLine,
    pub mult: u32,
}

impl MultiLine {
    pub fn new(line: ProjLine, mult: u32) -> Self {
        MultiLine { line, mult }
    }

    pub fn simple(line: ProjLine) -> Self {
        MultiLine { line, mult: 1 }
    }
}

/// A multi-arrangement partitioned into k ≥ 3 blocks, the object every
/// verdict in this crate is computed on. All lines are pairwise distinct
/// across the whole arrangement and live at the stated conductor.
#[derive(Debug, Clone)]
pub struct MultinetCandidate {
    conductor: u32,
    blocks: Vec<Vec<MultiLine>>,
}

impl MultinetCandidate {
    pub fn new(conductor: u32, blocks: Vec<Vec<MultiLine>>) -> Result<Self, MultinetError> {
        assert!(conductor >= 1, "conductor must be positive");
        if blocks.len() < 3 {
            return Err(MultinetError::FewerThanThreeBlocks(blocks.len()));
        }
        let mut lifted: Vec<Vec<MultiLine>> = Vec::with_capacity(blocks.len());
        for (i, block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(MultinetError::EmptyBlock(i));
            }
            let mut out = Vec::with_capacity(block.len());
            for ml in block {
                if ml.mult == 0 {
                    return Err(MultinetError::ZeroMultiplicity);
                }
                out.push(MultiLine::new(ml.line.lift(conductor)?, ml.mult));
            }
            lifted.push(out);
        }
        let mut seen = std::collections::HashSet::new();
        for ml in lifted.iter().flatten() {
            if !seen.insert(ml.line.canonical_key()) {
                return Err(MultinetError::DuplicateLine(ml.line.canonical_key()));
            }
        }
        Ok(MultinetCandidate {
            conductor,
            blocks: lifted,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<MultiLine>] {
        &self.blocks
    }

    /// Number of distinct lines, multiplicity-blind.
    pub fn line_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Lines in block order with their block index.
    pub fn flat_lines(&self) -> impl Iterator<Item = (usize, &MultiLine)> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.iter().map(move |ml| (i, ml)))
    }

    /// The full intersection data: every pairwise meet, deduplicated by
    /// canonical coordinates and split into base and off-base points.
    pub fn analyze(&self) -> BaseAnalysis {
        analysis::analyze(self)
    }

    /// Checks the two multinet axioms and reports per-axiom outcomes.
    pub fn verify(&self) -> VerificationReport {
        analysis::build_report(self, &self.analyze())
    }

    /// Structure of one block: pencil, general position, easel (4-line
    /// blocks only) or other.
    pub fn block_structure(&self, i: usize) -> Result<BlockStructure, MultinetError> {
        let lines: Vec<&ProjLine> = self.blocks[i].iter().map(|ml| &ml.line).collect();
        if lines.len() < 2 {
            return Err(MultinetError::TooFewLines);
        }
        if lines.len() == 2 {
            return Ok(BlockStructure::Pencil);
        }
        let apex = meet(lines[0], lines[1]).expect("distinct lines");
        if lines[2..]
            .iter()
            .all(|l| crate::projgeom::incident(&apex, l))
        {
            return Ok(BlockStructure::Pencil);
        }
        let mut concurrent_triples = 0usize;
        for a in 0..lines.len() {
            for b in a + 1..lines.len() {
                for c in b + 1..lines.len() {
                    if concurrent([lines[a], lines[b], lines[c]]).expect("distinct lines") {
                        concurrent_triples += 1;
                    }
                }
            }
        }
        Ok(match concurrent_triples {
            0 => BlockStructure::GeneralPosition,
            // a non-pencil 4-line block admits at most one concurrent triple
            1 if lines.len() == 4 => BlockStructure::Easel,
            _ => BlockStructure::Other,
        })
    }

    /// The image arrangement under a projectivity, acting on lines by the
    /// inverse transpose. Block order and multiplicities are preserved.
    pub fn apply_projectivity(&self, t: &Projectivity) -> MultinetCandidate {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|ml| MultiLine::new(t.apply_line(&ml.line), ml.mult))
                    .collect()
            })
            .collect();
        let conductor = self
            .blocks
            .iter()
            .flatten()
            .map(|ml| t.apply_line(&ml.line).conductor())
            .fold(self.conductor, |a, b| {
                u32::try_from(num_integer::lcm(a as u64, b as u64)).expect("conductor lcm")
            });
        MultinetCandidate::new(conductor, blocks).expect("projectivities preserve distinctness")
    }

    /// Same arrangement expressed at a larger conductor.
    pub fn lift_to(&self, m: u32) -> Result<MultinetCandidate, MultinetError> {
        MultinetCandidate::new(m, self.blocks.clone())
    }
}

/// Weight classification of a verified multinet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightClass {
    /// |𝒳| = d²: every line and base point is simple.
    Net,
    /// Proper (|𝒳| < d²) with all multiplicities 1.
    ProperLight,
    /// Proper with a line of multiplicity > 1.
    ProperHeavy,
}

impl std::fmt::Display for WeightClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            WeightClass::Net => "net",
            WeightClass::ProperLight => "proper light",
            WeightClass::ProperHeavy => "proper heavy",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockStructure {
    /// All lines through one common point.
    Pencil,
    /// No three lines concurrent.
    GeneralPosition,
    /// Exactly three of four lines concurrent.
    Easel,
    Other,
}

impl std::fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BlockStructure::Pencil => "pencil",
            BlockStructure::GeneralPosition => "general position",
            BlockStructure::Easel => "easel",
            BlockStructure::Other => "other",
        })
    }
}

/// A candidate that passed both multinet axioms, with its analysis cached.
/// Operations requiring a verified multinet take this type.
#[derive(Debug, Clone)]
pub struct VerifiedMultinet {
    candidate: MultinetCandidate,
    analysis: BaseAnalysis,
}

impl VerifiedMultinet {
    pub fn new(candidate: MultinetCandidate) -> Result<Self, MultinetError> {
        let analysis = candidate.analyze();
        let report = analysis::build_report(&candidate, &analysis);
        if !report.is_multinet() {
            return Err(MultinetError::NotAMultinet);
        }
        Ok(VerifiedMultinet {
            candidate,
            analysis,
        })
    }

    pub fn candidate(&self) -> &MultinetCandidate {
        &self.candidate
    }

    pub fn analysis(&self) -> &BaseAnalysis {
        &self.analysis
    }

    pub fn k(&self) -> usize {
        self.candidate.k()
    }

    /// Block weight d = Σ m(ℓ) over any block.
    pub fn d(&self) -> u64 {
        self.analysis.d
    }

    /// The four integer identities every multinet satisfies.
    pub fn property_checks(&self) -> PropertyReport {
        let a = &self.analysis;
        let c = &self.candidate;
        let per_block_weights: Vec<u64> = c
            .blocks()
            .iter()
            .map(|b| b.iter().map(|ml| ml.mult as u64).sum())
            .collect();
        let total_weight: u64 = per_block_weights.iter().sum();
        let sum_np_sq: u64 = a.base.iter().map(|p| p.n_p * p.n_p).sum();
        let per_line_np_sums: Vec<u64> = a
            .per_line
            .iter()
            .map(|pts| pts.iter().map(|&i| a.base[i].n_p).sum())
            .collect();
        PropertyReport {
            d: a.d,
            k: a.k,
            equal_block_weights: per_block_weights.iter().all(|&w| w == a.d),
            total_weight_is_dk: total_weight == a.d * a.k as u64,
            bezout: sum_np_sq == a.d * a.d,
            line_sums: per_line_np_sums.iter().all(|&s| s == a.d),
            per_block_weights,
            total_weight,
            sum_np_sq,
            per_line_np_sums,
        }
    }

    /// Net / proper light / proper heavy, by |𝒳| against d² and the line
    /// multiplicities.
    pub fn weight_class(&self) -> WeightClass {
        let a = &self.analysis;
        if a.base.len() as u64 == a.d * a.d {
            WeightClass::Net
        } else if self
            .candidate
            .flat_lines()
            .any(|(_, ml)| ml.mult > 1)
        {
            WeightClass::ProperHeavy
        } else {
            WeightClass::ProperLight
        }
    }

    /// The Latin square of a 3-net, rows and columns indexed by the
    /// canonically sorted lines of blocks 1 and 2, symbols by block 3.
    pub fn extract_latin(&self) -> Result<LatinSquare, MultinetError> {
        latin::extract(self)
    }
}

/// Outcome of the four multinet identities.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub d: u64,
    pub k: usize,
    pub per_block_weights: Vec<u64>,
    pub total_weight: u64,
    pub sum_np_sq: u64,
    pub per_line_np_sums: Vec<u64>,
    pub equal_block_weights: bool,
    pub total_weight_is_dk: bool,
    pub bezout: bool,
    pub line_sums: bool,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.equal_block_weights && self.total_weight_is_dk && self.bezout && self.line_sums
    }
}
