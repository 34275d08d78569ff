//! Verdict reports, emitted as text or JSON with identical content.

use serde::Serialize;

use multinets::completeness::{eq2_balance, is_complete, local_test, rh_balance};
use multinets::multinet::{MultinetCandidate, MultinetError};
use multinets::VerifiedMultinet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct Balance {
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictDocument {
    pub verdict: String,
    pub k: usize,
    pub d: u64,
    pub axiom_i: bool,
    pub axiom_ii: Vec<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offbase_points: Option<usize>,
    pub block_structures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e1: Option<Balance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e2: Option<Balance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_failures: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced_evidence: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canceled: Option<Vec<String>>,
}

/// Completeness verdict values carried in the report.
pub const COMPLETE: &str = "complete";
pub const INCOMPLETE: &str = "incomplete";
pub const NOT_APPLICABLE: &str = "not-applicable (d < 2)";
pub const NOT_MULTINET: &str = "not-multinet";

pub fn build(candidate: &MultinetCandidate, with_completeness: bool) -> VerdictDocument {
    let report = candidate.verify();
    let block_structures = (0..candidate.k())
        .map(|i| match candidate.block_structure(i) {
            Ok(s) => s.to_string(),
            Err(MultinetError::TooFewLines) => "single line".to_string(),
            Err(e) => format!("error: {e}"),
        })
        .collect();

    let mut doc = VerdictDocument {
        verdict: if report.is_multinet() {
            "multinet".into()
        } else {
            "not-multinet".into()
        },
        k: report.k,
        d: report.d,
        axiom_i: report.axiom_i,
        axiom_ii: report.axiom_ii.clone(),
        weight: None,
        base_points: None,
        offbase_points: None,
        block_structures,
        e1: None,
        e2: None,
        complete: None,
        local_failures: None,
        induced_type: None,
        induced_evidence: None,
        canceled: None,
    };

    let Ok(m) = VerifiedMultinet::new(candidate.clone()) else {
        if with_completeness {
            doc.complete = Some(NOT_MULTINET.into());
        }
        return doc;
    };
    doc.weight = Some(m.weight_class().to_string());
    doc.base_points = Some(m.analysis().base.len());
    doc.offbase_points = Some(m.analysis().offbase.len());

    if with_completeness {
        let b = rh_balance(&m);
        doc.e1 = Some(Balance {
            lhs: b.lhs,
            rhs: b.rhs,
        });
        if m.k() == 3 {
            let (lhs, rhs) = eq2_balance(&m).expect("k = 3");
            doc.e2 = Some(Balance { lhs, rhs });
        }
        doc.complete = Some(match is_complete(&m) {
            Ok(true) => COMPLETE.into(),
            Ok(false) => INCOMPLETE.into(),
            Err(_) => NOT_APPLICABLE.into(),
        });
        let local = local_test(&m);
        doc.local_failures = Some(
            local
                .failures()
                .map(|p| p.point.canonical_key())
                .collect(),
        );
    }
    doc
}

pub fn emit(doc: &VerdictDocument, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("verdicts serialize"),
        Format::Text => {
            let mut out = String::new();
            let mut push = |s: String| {
                out.push_str(&s);
                out.push('\n');
            };
            push(format!("verdict:          {}", doc.verdict));
            push(format!("k:                {}", doc.k));
            push(format!("d:                {}", doc.d));
            push(format!("axiom (i):        {}", pass_fail(doc.axiom_i)));
            let blocks: Vec<String> = doc.axiom_ii.iter().map(|&b| pass_fail(b).into()).collect();
            push(format!("axiom (ii):       [{}]", blocks.join(", ")));
            if let Some(w) = &doc.weight {
                push(format!("weight class:     {w}"));
            }
            if let (Some(b), Some(o)) = (doc.base_points, doc.offbase_points) {
                push(format!("base points:      {b}"));
                push(format!("off-base points:  {o}"));
            }
            push(format!(
                "block structure:  [{}]",
                doc.block_structures.join(", ")
            ));
            if let Some(e1) = &doc.e1 {
                push(format!("balance E1:       {} vs {}", e1.lhs, e1.rhs));
            }
            if let Some(e2) = &doc.e2 {
                push(format!("balance E2:       {} vs {}", e2.lhs, e2.rhs));
            }
            if let Some(c) = &doc.complete {
                push(format!("complete:         {c}"));
            }
            if let Some(failures) = &doc.local_failures {
                if failures.is_empty() {
                    push("local test:       pass at every base point".into());
                } else {
                    push(format!("local test fails: {}", failures.join(", ")));
                }
            }
            if let Some(t) = &doc.induced_type {
                push(format!("induced type:     {t}"));
            }
            if let Some(e) = &doc.induced_evidence {
                push(format!("fingerprint:      {e}"));
            }
            if let Some(c) = &doc.canceled {
                if c.is_empty() {
                    push("canceled:         none".into());
                } else {
                    push(format!("canceled:         {}", c.join(", ")));
                }
            }
            out
        }
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}
