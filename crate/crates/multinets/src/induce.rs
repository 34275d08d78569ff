//! Induced multinets: restrict the P³ arrangement Q_n to a plane H,
//! cancel the fixed components of the induced pencil, and classify the
//! outcome into the ten combinatorial types.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::catalog::Hyper3Arrangement;
use crate::exactnum::Cyclo;
use crate::multinet::{MultiLine, MultinetCandidate, MultinetError, VerifiedMultinet, WeightClass};
use crate::projgeom::{GeomError, Plane3, ProjLine};

#[derive(Debug, Error)]
pub enum InduceError {
    #[error("plane coordinates must not all be zero")]
    ZeroPlane,
    #[error("the plane belongs to the arrangement")]
    PlaneInArrangement,
    #[error("all three restricted fibers are identical; everything cancels")]
    EverythingCanceled,
    #[error("restricted lines from different blocks coincide after cancellation: {0}")]
    CrossBlockCoincidence(String),
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error(transparent)]
    Multinet(#[from] MultinetError),
}

/// The multiset of restricted lines of one block of Q_n, with accumulated
/// multiplicities. Total multiplicity is the block degree 2n.
#[derive(Debug, Clone)]
pub struct RestrictedFiber {
    pub lines: Vec<(ProjLine, u32)>,
}

impl RestrictedFiber {
    pub fn total_multiplicity(&self) -> u32 {
        self.lines.iter().map(|(_, m)| m).sum()
    }
}

/// Output of the induction pipeline: the arrangement after cancellation,
/// the canceled fixed components, and the inputs that produced it.
#[derive(Debug, Clone)]
pub struct InducedResult {
    pub arrangement: MultinetCandidate,
    pub canceled: Vec<(ProjLine, u32)>,
    pub plane: Plane3,
    pub n: u32,
}

/// Coordinatizes the plane with dual coordinates `coords` by a
/// deterministic pivot-solved basis.
pub fn plane_basis(coords: [Cyclo; 4]) -> Result<Plane3, InduceError> {
    Plane3::new(coords).map_err(|_| InduceError::ZeroPlane)
}

/// Restricts every hyperplane of `q` to the plane, accumulating equal
/// restricted lines within a block into multiplicities.
pub fn restrict_arrangement(
    q: &Hyper3Arrangement,
    h: &Plane3,
) -> Result<[RestrictedFiber; 3], InduceError> {
    for hp in q.blocks.iter().flatten() {
        if h.same_plane(&hp.coords) {
            return Err(InduceError::PlaneInArrangement);
        }
    }
    let mut fibers: [Vec<(ProjLine, u32)>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for (b, block) in q.blocks.iter().enumerate() {
        let mut acc: BTreeMap<String, (ProjLine, u32)> = BTreeMap::new();
        for hp in block {
            let coords = h.restrict_form(&hp.coords);
            // a vanishing restriction would mean H equals the hyperplane
            let line = ProjLine::new(coords).map_err(|_| InduceError::PlaneInArrangement)?;
            acc.entry(line.canonical_key())
                .and_modify(|(_, m)| *m += 1)
                .or_insert((line, 1));
        }
        fibers[b] = acc.into_values().collect();
    }
    let [a, b, c] = fibers;
    Ok([
        RestrictedFiber { lines: a },
        RestrictedFiber { lines: b },
        RestrictedFiber { lines: c },
    ])
}

/// Removes the fixed components: for each line, the minimum multiplicity it
/// attains across the three fibers is subtracted from all of them.
pub fn cancel_fixed(
    fibers: [RestrictedFiber; 3],
) -> Result<([RestrictedFiber; 3], Vec<(ProjLine, u32)>), InduceError> {
    let mult_in = |f: &RestrictedFiber, key: &str| -> u32 {
        f.lines
            .iter()
            .find(|(l, _)| l.canonical_key() == key)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    };
    let mut canceled: Vec<(ProjLine, u32)> = Vec::new();
    for (line, m0) in &fibers[0].lines {
        let key = line.canonical_key();
        let common = (*m0).min(mult_in(&fibers[1], &key)).min(mult_in(&fibers[2], &key));
        if common > 0 {
            canceled.push((line.clone(), common));
        }
    }
    if fibers[0].total_multiplicity() == canceled.iter().map(|(_, m)| m).sum::<u32>() {
        return Err(InduceError::EverythingCanceled);
    }
    let strip = |f: &RestrictedFiber| -> RestrictedFiber {
        let lines = f
            .lines
            .iter()
            .filter_map(|(l, m)| {
                let cut = canceled
                    .iter()
                    .find(|(c, _)| c == l)
                    .map(|&(_, cm)| cm)
                    .unwrap_or(0);
                (*m > cut).then(|| (l.clone(), m - cut))
            })
            .collect();
        RestrictedFiber { lines }
    };
    let out = [strip(&fibers[0]), strip(&fibers[1]), strip(&fibers[2])];
    Ok((out, canceled))
}

/// The full pipeline: coordinatize H, restrict Q_n, cancel fixed
/// components, and assemble the induced candidate.
pub fn induce(n: u32, h_coords: [Cyclo; 4]) -> Result<InducedResult, InduceError> {
    assert!(n >= 1, "induce requires n >= 1");
    let q = crate::catalog::qn_in_p3(n);
    let plane = plane_basis(h_coords)?;
    let fibers = restrict_arrangement(&q, &plane)?;
    debug_assert!(fibers.iter().all(|f| f.total_multiplicity() == 2 * n));
    let (fibers, canceled) = cancel_fixed(fibers)?;
    let conductor = fibers
        .iter()
        .flat_map(|f| f.lines.iter().map(|(l, _)| l.conductor() as u64))
        .fold(n as u64, num_integer::lcm);
    let conductor = u32::try_from(conductor).expect("conductor lcm");
    let blocks: Vec<Vec<MultiLine>> = fibers
        .iter()
        .map(|f| {
            f.lines
                .iter()
                .map(|(l, m)| MultiLine::new(l.clone(), *m))
                .collect()
        })
        .collect();
    let arrangement = MultinetCandidate::new(conductor, blocks).map_err(|e| match e {
        MultinetError::DuplicateLine(key) => InduceError::CrossBlockCoincidence(key),
        other => InduceError::Multinet(other),
    })?;
    Ok(InducedResult {
        arrangement,
        canceled,
        plane,
        n,
    })
}

/// The ten combinatorial types an induced multinet can have, plus the
/// trivial pencil and a fallback for unmatched fingerprints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeTag {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    Trivial,
    Unknown,
}

impl std::fmt::Display for TypeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeTag::Trivial => write!(f, "trivial"),
            TypeTag::Unknown => write!(f, "unknown"),
            other => write!(f, "T{}", *other as u8 + 1),
        }
    }
}

/// A classification verdict with the matched fingerprint spelled out.
#[derive(Debug, Clone)]
pub struct InducedType {
    pub tag: TypeTag,
    pub evidence: String,
}

fn induced_type(tag: TypeTag, evidence: impl Into<String>) -> InducedType {
    InducedType {
        tag,
        evidence: evidence.into(),
    }
}

/// Fingerprint matching on (n, d, line multiplicities, base-point
/// multiplicities, weight class). Degenerate boundaries (d = 2n−1 at n = 2,
/// d = 2n−2 at n = 3) resolve to plain nets, so the degree is checked
/// before the point-multiplicity tests.
pub fn classify_induced(r: &InducedResult) -> InducedType {
    let cand = &r.arrangement;
    let n = r.n as u64;
    let analysis = cand.analyze();
    let d = analysis.d;

    let all_concurrent = {
        let total = cand.line_count();
        analysis.base.iter().any(|p| p.line_count() == total)
            || analysis
                .offbase
                .iter()
                .any(|p| p.incident_lines.len() == total)
    };
    if d == 1 || all_concurrent {
        return induced_type(TypeTag::Trivial, "all lines concurrent (degree 1 pencil)");
    }

    let verified = match VerifiedMultinet::new(cand.clone()) {
        Ok(v) => v,
        Err(_) => return induced_type(TypeTag::Unknown, "candidate fails the multinet axioms"),
    };
    let a = verified.analysis();

    let mut heavy_mults: Vec<u32> = cand
        .flat_lines()
        .filter(|(_, ml)| ml.mult > 1)
        .map(|(_, ml)| ml.mult)
        .collect();
    heavy_mults.sort_unstable();
    let np_count = |v: u64| a.base.iter().filter(|p| p.n_p == v).count();
    let max_np = a.base.iter().map(|p| p.n_p).max().unwrap_or(0);

    if !heavy_mults.is_empty() {
        if d != 2 * n {
            return induced_type(TypeTag::Unknown, "heavy multinet with unexpected degree");
        }
        if n > 1 && heavy_mults == vec![n as u32; 3] {
            return induced_type(
                TypeTag::T1,
                format!("three lines of multiplicity {n}, degree 2n"),
            );
        }
        if n > 1 && heavy_mults == vec![n as u32] && np_count(n) == 2 && max_np == n {
            return induced_type(
                TypeTag::T2,
                format!("unique line of multiplicity {n}, two base points of multiplicity {n}"),
            );
        }
        if n > 1
            && n % 2 == 0
            && heavy_mults == vec![2, 2, 2]
            && np_count(2) as u64 == 3 * n - 3
            && max_np == 2
        {
            return induced_type(
                TypeTag::T3,
                format!("three double lines, {} double base points", 3 * n - 3),
            );
        }
        if n > 1
            && n % 2 == 1
            && heavy_mults == vec![2, 2]
            && np_count(2) as u64 == 2 * n - 1
            && max_np == 2
        {
            return induced_type(
                TypeTag::T4,
                format!("two double lines, {} double base points", 2 * n - 1),
            );
        }
        if n > 1 && heavy_mults == vec![2] && np_count(2) as u64 == n && max_np == 2 {
            return induced_type(
                TypeTag::T5,
                format!("unique double line, {n} double base points"),
            );
        }
        return induced_type(TypeTag::Unknown, "heavy multinet with unmatched fingerprint");
    }

    // light cases
    let is_net = verified.weight_class() == WeightClass::Net;
    if d == 2 * n {
        if is_net {
            return induced_type(TypeTag::T10, "net of degree 2n");
        }
        if n > 1 && max_np == n && np_count(n) == 1 {
            return induced_type(
                TypeTag::T6,
                format!("light, unique base point of multiplicity {n}"),
            );
        }
        if max_np == 2 && np_count(2) >= 1 {
            return induced_type(
                TypeTag::T9,
                format!("light, {} double base points, none higher", np_count(2)),
            );
        }
        return induced_type(TypeTag::Unknown, "light degree-2n multinet with unmatched fingerprint");
    }
    if n > 1 && d == 2 * n - 1 {
        let expected = n - 1;
        let degenerate = expected == 1 && is_net;
        if degenerate || (max_np == expected && np_count(expected) == 1) {
            return induced_type(
                TypeTag::T7,
                format!("light, degree 2n−1, unique base point of multiplicity {expected}"),
            );
        }
    }
    if n > 2 && d == 2 * n - 2 {
        let expected = n - 2;
        let degenerate = expected == 1 && is_net;
        if degenerate || (max_np == expected && np_count(expected) == 1) {
            return induced_type(
                TypeTag::T8,
                format!("light, degree 2n−2, unique base point of multiplicity {expected}"),
            );
        }
    }
    induced_type(TypeTag::Unknown, "no fingerprint matched")
}
