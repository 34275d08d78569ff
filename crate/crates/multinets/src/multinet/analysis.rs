//! Intersection analysis: the base locus 𝒳, the off-base points 𝒳̄, and
//! the axiom checks built on them.

use std::collections::HashMap;

use crate::projgeom::{incident, meet, ProjPoint};

use super::MultinetCandidate;

/// A point where lines from at least two distinct blocks meet.
#[derive(Debug, Clone)]
pub struct BasePoint {
    pub point: ProjPoint,
    /// Σ m(ℓ) over the lines of block i through the point, for each i.
    pub per_block_sum: Vec<u64>,
    /// The common per-block sum when balanced (the largest sum otherwise).
    pub n_p: u64,
    /// Global indices (candidate flat order) of all lines through the point.
    pub incident_lines: Vec<usize>,
}

impl BasePoint {
    pub fn balanced(&self) -> bool {
        self.per_block_sum.iter().all(|&s| s == self.per_block_sum[0]) && self.per_block_sum[0] > 0
    }

    /// |𝒜_p|: the number of distinct lines through the point.
    pub fn line_count(&self) -> usize {
        self.incident_lines.len()
    }
}

/// An intersection point all of whose lines belong to a single block.
#[derive(Debug, Clone)]
pub struct OffBasePoint {
    pub point: ProjPoint,
    /// Number of distinct lines through the point, multiplicity-blind.
    pub m_p: u32,
    /// The block owning those lines.
    pub block: usize,
    pub incident_lines: Vec<usize>,
}

/// Every intersection point of the arrangement, split into 𝒳 ⊔ 𝒳̄.
/// Points lying on a single line are not intersection points and never
/// appear here. Ordering is canonical (sorted coordinate strings), so the
/// analysis is independent of input line order.
#[derive(Debug, Clone)]
pub struct BaseAnalysis {
    pub base: Vec<BasePoint>,
    pub offbase: Vec<OffBasePoint>,
    /// For each line (flat order), the indices into `base` of the base
    /// points on it.
    pub per_line: Vec<Vec<usize>>,
    /// Block weight Σ m(ℓ) of the first block.
    pub d: u64,
    pub k: usize,
}

pub(super) fn analyze(candidate: &MultinetCandidate) -> BaseAnalysis {
    let lines: Vec<(usize, &super::MultiLine)> = candidate.flat_lines().collect();
    let n = lines.len();
    let mut by_key: HashMap<String, ProjPoint> = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = meet(&lines[i].1.line, &lines[j].1.line).expect("candidate lines distinct");
            by_key.entry(p.canonical_key()).or_insert(p);
        }
    }
    let mut keys: Vec<&String> = by_key.keys().collect();
    keys.sort();

    let k = candidate.k();
    let mut base = Vec::new();
    let mut offbase = Vec::new();
    for key in keys {
        let point = by_key[key].clone();
        let incident_lines: Vec<usize> = (0..n)
            .filter(|&i| incident(&point, &lines[i].1.line))
            .collect();
        debug_assert!(incident_lines.len() >= 2);
        let blocks: std::collections::BTreeSet<usize> =
            incident_lines.iter().map(|&i| lines[i].0).collect();
        if blocks.len() >= 2 {
            let mut per_block_sum = vec![0u64; k];
            for &i in &incident_lines {
                per_block_sum[lines[i].0] += lines[i].1.mult as u64;
            }
            let n_p = per_block_sum.iter().copied().max().unwrap_or(0);
            base.push(BasePoint {
                point,
                per_block_sum,
                n_p,
                incident_lines,
            });
        } else {
            offbase.push(OffBasePoint {
                point,
                m_p: incident_lines.len() as u32,
                block: *blocks.iter().next().unwrap(),
                incident_lines,
            });
        }
    }

    let mut per_line = vec![Vec::new(); n];
    for (pi, bp) in base.iter().enumerate() {
        for &li in &bp.incident_lines {
            per_line[li].push(pi);
        }
    }

    let d = candidate.blocks()[0]
        .iter()
        .map(|ml| ml.mult as u64)
        .sum();
    BaseAnalysis {
        base,
        offbase,
        per_line,
        d,
        k,
    }
}

/// Axiom outcomes for one candidate.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// Condition (i): at every base point the per-block multiplicity sums
    /// agree (and are positive).
    pub axiom_i: bool,
    /// The first offending base point in canonical order, when (i) fails.
    pub axiom_i_offender: Option<ProjPoint>,
    /// Condition (ii) per block: the lines form a connected graph under
    /// "meets outside the base locus".
    pub axiom_ii: Vec<bool>,
    pub d: u64,
    pub k: usize,
}

impl VerificationReport {
    pub fn is_multinet(&self) -> bool {
        self.axiom_i && self.axiom_ii.iter().all(|&c| c)
    }
}

pub(super) fn build_report(
    candidate: &MultinetCandidate,
    analysis: &BaseAnalysis,
) -> VerificationReport {
    let offender = analysis.base.iter().find(|bp| !bp.balanced());
    let axiom_i = offender.is_none();
    let axiom_i_offender = offender.map(|bp| bp.point.clone());

    // Connectivity per block: two lines are adjacent when their meet is not
    // a base point, i.e. they share no base point.
    let lines: Vec<(usize, &super::MultiLine)> = candidate.flat_lines().collect();
    let mut axiom_ii = Vec::with_capacity(candidate.k());
    for block in 0..candidate.k() {
        let members: Vec<usize> = (0..lines.len()).filter(|&i| lines[i].0 == block).collect();
        axiom_ii.push(block_connected(&members, &analysis.per_line));
    }

    VerificationReport {
        axiom_i,
        axiom_i_offender,
        axiom_ii,
        d: analysis.d,
        k: analysis.k,
    }
}

fn block_connected(members: &[usize], per_line: &[Vec<usize>]) -> bool {
    if members.len() <= 1 {
        return true;
    }
    let shares_base = |a: usize, b: usize| -> bool {
        // per_line entries are sorted; intersect the two index lists
        let (mut i, mut j) = (0, 0);
        let (xs, ys) = (&per_line[a], &per_line[b]);
        while i < xs.len() && j < ys.len() {
            match xs[i].cmp(&ys[j]) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        false
    };
    let mut visited = vec![false; members.len()];
    let mut queue = std::collections::VecDeque::from([0usize]);
    visited[0] = true;
    let mut seen = 1;
    while let Some(u) = queue.pop_front() {
        for v in 0..members.len() {
            if !visited[v] && !shares_base(members[u], members[v]) {
                visited[v] = true;
                seen += 1;
                queue.push_back(v);
            }
        }
    }
    seen == members.len()
}
