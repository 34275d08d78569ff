//! Completeness of multinets: the Riemann–Hurwitz balance, its k = 3
//! reduction, the per-point local test, and the structure certificate for
//! complete 3-nets.
//!
//! A verified (k,d)-multinet satisfies
//!
//! ```text
//! 3 + |𝒳| ≥ (2−k)·[3d − d² + Σ_{p∈𝒳}(n_p² − n_p)] + 2|𝒜| − Σ_{p∈𝒳̄}(m_p − 1)
//! ```
//!
//! with equality exactly when every singular fiber of the associated pencil
//! is completely reducible; such multinets are called complete. |𝒜| counts
//! distinct lines, multiplicity-blind, and m_p counts distinct lines
//! through an off-base point.

use thiserror::Error;

use crate::catalog;
use crate::multinet::{
    projectively_equivalent, BlockStructure, MultinetError, VerifiedMultinet, WeightClass,
};
use crate::projgeom::{ProjPoint, Projectivity};

#[derive(Debug, Error)]
pub enum CompletenessError {
    #[error("completeness is defined only for degree d >= 2, got {0}")]
    DegreeTooSmall(u64),
    #[error("the k = 3 reduction applies only to 3-multinets, got k = {0}")]
    WrongK(usize),
    #[error("the multinet is not complete")]
    NotComplete,
    #[error("complete 3-net structure violated: {0}")]
    StructureViolation(String),
    #[error(transparent)]
    Multinet(#[from] MultinetError),
}

/// Both sides of the Riemann–Hurwitz balance, with the named sums exposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhBalance {
    /// 3 + |𝒳|
    pub lhs: i64,
    /// (2−k)[3d − d² + Σ(n_p² − n_p)] + 2|𝒜| − Σ(m_p − 1)
    pub rhs: i64,
    pub k: usize,
    pub d: i64,
    /// |𝒜|: distinct lines, multiplicity-blind.
    pub line_count: i64,
    pub base_count: i64,
    pub sum_np_sq_minus_np: i64,
    pub offbase_excess: i64,
}

impl RhBalance {
    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates the balance exactly from the base analysis.
pub fn rh_balance(m: &VerifiedMultinet) -> RhBalance {
    let a = m.analysis();
    let k = a.k as i64;
    let d = a.d as i64;
    let line_count = m.candidate().line_count() as i64;
    let base_count = a.base.len() as i64;
    let sum_np_sq_minus_np: i64 = a
        .base
        .iter()
        .map(|p| (p.n_p * p.n_p) as i64 - p.n_p as i64)
        .sum();
    let offbase_excess: i64 = a.offbase.iter().map(|p| p.m_p as i64 - 1).sum();
    RhBalance {
        lhs: 3 + base_count,
        rhs: (2 - k) * (3 * d - d * d + sum_np_sq_minus_np) + 2 * line_count - offbase_excess,
        k: a.k,
        d,
        line_count,
        base_count,
        sum_np_sq_minus_np,
        offbase_excess,
    }
}

/// True iff the balance is an equality. Defined only for d ≥ 2.
pub fn is_complete(m: &VerifiedMultinet) -> Result<bool, CompletenessError> {
    if m.d() < 2 {
        return Err(CompletenessError::DegreeTooSmall(m.d()));
    }
    Ok(rh_balance(m).is_equality())
}

/// The k = 3 reduction: lhs = Σ_{p∈𝒳̄}(m_p − 1) and
/// rhs = 2|𝒜| − |𝒳| − 3(d+1) + Σ_{p∈𝒳} n_p; completeness ⟺ lhs = rhs.
/// Computed independently of `rh_balance` as a bookkeeping cross-check.
pub fn eq2_balance(m: &VerifiedMultinet) -> Result<(i64, i64), CompletenessError> {
    if m.k() != 3 {
        return Err(CompletenessError::WrongK(m.k()));
    }
    let a = m.analysis();
    let lhs: i64 = a.offbase.iter().map(|p| p.m_p as i64 - 1).sum();
    let sum_np: i64 = a.base.iter().map(|p| p.n_p as i64).sum();
    let rhs = 2 * m.candidate().line_count() as i64 - a.base.len() as i64
        - 3 * (a.d as i64 + 1)
        + sum_np;
    Ok((lhs, rhs))
}

/// One base point's local balance 2n_p − 2 = Σ_{ℓ∈𝒜_p}(m(ℓ) − 1).
#[derive(Debug, Clone)]
pub struct LocalPoint {
    pub point: ProjPoint,
    pub n_p: i64,
    /// |𝒜_p|: distinct lines through the point.
    pub line_count: i64,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

/// The local necessary condition for completeness, checked at every base
/// point. For k = 3 a passing point is exactly one with |𝒜_p| = n_p + 2.
#[derive(Debug, Clone)]
pub struct LocalReport {
    pub points: Vec<LocalPoint>,
}

impl LocalReport {
    pub fn pass(&self) -> bool {
        self.points.iter().all(|p| p.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LocalPoint> {
        self.points.iter().filter(|p| !p.pass)
    }
}

pub fn local_test(m: &VerifiedMultinet) -> LocalReport {
    let a = m.analysis();
    let lines: Vec<(usize, &crate::multinet::MultiLine)> = m.candidate().flat_lines().collect();
    let points = a
        .base
        .iter()
        .map(|bp| {
            let lhs = 2 * bp.n_p as i64 - 2;
            let rhs: i64 = bp
                .incident_lines
                .iter()
                .map(|&i| lines[i].1.mult as i64 - 1)
                .sum();
            LocalPoint {
                point: bp.point.clone(),
                n_p: bp.n_p as i64,
                line_count: bp.line_count() as i64,
                lhs,
                rhs,
                pass: lhs == rhs,
            }
        })
        .collect();
    LocalReport { points }
}

/// Witness that a complete 3-net has the expected shape: every block a
/// pencil, and a projectivity onto the Fermat arrangement of the same
/// degree.
#[derive(Debug, Clone)]
pub struct StructureCertificate {
    pub d: u64,
    pub equivalence: Projectivity,
}

/// Certifies the structure of a complete 3-net of degree d: checks that
/// every block is a pencil and finds the equivalence to `fermat(d)`. A
/// violation is reported as an error so the caller fails loudly.
pub fn complete_3net_structure(
    m: &VerifiedMultinet,
) -> Result<StructureCertificate, CompletenessError> {
    if m.k() != 3 {
        return Err(CompletenessError::WrongK(m.k()));
    }
    if m.weight_class() != WeightClass::Net {
        return Err(CompletenessError::Multinet(MultinetError::NotANet));
    }
    if !is_complete(m)? {
        return Err(CompletenessError::NotComplete);
    }
    for i in 0..3 {
        let s = m.candidate().block_structure(i)?;
        if s != BlockStructure::Pencil {
            return Err(CompletenessError::StructureViolation(format!(
                "block {i} is {s}, expected a pencil"
            )));
        }
    }
    let d = m.d();
    let target = catalog::fermat(u32::try_from(d).expect("degree fits in u32"));
    match projectively_equivalent(m.candidate(), &target)? {
        Some(equivalence) => Ok(StructureCertificate { d, equivalence }),
        None => Err(CompletenessError::StructureViolation(format!(
            "no projectivity onto the degree-{d} Fermat arrangement found"
        ))),
    }
}
