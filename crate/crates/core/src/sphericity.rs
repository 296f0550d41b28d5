//! Closed-form multiplicity-freeness criteria for `C[X(w)]` under the Levi
//! part of its stabilizer, with a bounded-degree empirical check.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decompose::{decompose_degree, IrreducibleLabel};
use crate::grassmann::SchubertContext;
use crate::levi::LeviContext;

/// `w = (1, ..., p, m+1, ..., m+i)` with `p + i = d` and `p != m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothForm {
    pub p: usize,
    pub m: usize,
    pub i: usize,
}

impl fmt::Display for SmoothForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} m={} i={}", self.p, self.m, self.i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremVerdict {
    MultiplicityFreeCertified,
    NotCovered,
}

impl fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremVerdict::MultiplicityFreeCertified => "certified",
            TheoremVerdict::NotCovered => "not_covered",
        })
    }
}

/// Result of a bounded-degree multiplicity scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmpiricalResult {
    pub max_degree_checked: usize,
    pub multiplicity_free_up_to_bound: bool,
    pub first_violation: Option<(IrreducibleLabel, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericityVerdict {
    pub w: crate::GrassmannWord,
    pub smooth_form: Option<SmoothForm>,
    pub determinantal_form: Option<usize>,
    /// number of blocks of `L_w`
    pub block_count: usize,
    pub last_entry_is_n: bool,
    pub theorem_verdict: TheoremVerdict,
    pub empirical: Option<EmpiricalResult>,
}

/// Maximal runs of consecutive integers.
fn runs(entries: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in entries {
        match out.last_mut() {
            Some((_, end)) if *end + 1 == x => *end = x,
            _ => out.push((x, x)),
        }
    }
    out
}

/// Canonical `(p, m, i)` when `w` has the smooth form. `(1, ..., d)` is
/// reported as `(d, 0, 0)` and a single run not starting at 1 as
/// `(0, m, d)`.
pub fn smooth_form(ctx: &SchubertContext) -> Option<SmoothForm> {
    let d = ctx.d();
    match runs(ctx.w().entries()).as_slice() {
        [(1, _)] => Some(SmoothForm { p: d, m: 0, i: 0 }),
        [(s, _)] => Some(SmoothForm { p: 0, m: s - 1, i: d }),
        [(1, p), (s, _)] => Some(SmoothForm { p: *p, m: s - 1, i: d - p }),
        _ => None,
    }
}

/// The `t` with `w = (t+1, ..., d, N-t+1, ..., N)` and `1 <= t < min(d, N-d)`.
pub fn determinantal_form(ctx: &SchubertContext) -> Option<usize> {
    let (n, d) = (ctx.n(), ctx.d());
    (1..d.min(n - d)).find(|&t| {
        let expected: Vec<usize> = (t + 1..=d).chain(n - t + 1..=n).collect();
        ctx.w().entries() == expected.as_slice()
    })
}

/// Structural verdict; `empirical` is left empty.
pub fn classify(ctx: &SchubertContext) -> SphericityVerdict {
    let block_count = LeviContext::of_stabilizer(ctx.clone()).block_count();
    let last_entry_is_n = ctx.w().entries().last() == Some(&ctx.n());
    let certified = block_count <= 2 || (block_count == 3 && !last_entry_is_n);
    SphericityVerdict {
        w: ctx.w().clone(),
        smooth_form: smooth_form(ctx),
        determinantal_form: determinantal_form(ctx),
        block_count,
        last_entry_is_n,
        theorem_verdict: if certified { TheoremVerdict::MultiplicityFreeCertified } else { TheoremVerdict::NotCovered },
        empirical: None,
    }
}

/// Decomposes every degree up to `max_degree` and looks for a constituent
/// occurring more than once within a degree. Labels of different degrees
/// never coincide, since their total box counts differ.
pub fn empirical_multiplicity_check(levi: &LeviContext, max_degree: usize) -> EmpiricalResult {
    for r in 1..=max_degree {
        let report = decompose_degree(levi, r);
        if let Some((label, m)) = report.multiplicities().into_iter().find(|(_, m)| *m > 1) {
            return EmpiricalResult {
                max_degree_checked: max_degree,
                multiplicity_free_up_to_bound: false,
                first_violation: Some((label, m)),
            };
        }
    }
    EmpiricalResult { max_degree_checked: max_degree, multiplicity_free_up_to_bound: true, first_violation: None }
}

/// Verdicts for every `w` in `I_{d,N}`, in lexicographic order of `w`, each
/// with an empirical check up to `max_degree` (skipped when 0).
pub fn scan(n: usize, d: usize, max_degree: usize) -> crate::Result<Vec<SphericityVerdict>> {
    SchubertContext::full(n, d)?;
    Ok(SchubertContext::all_words(n, d)
        .into_par_iter()
        .map(|w| {
            let ctx = SchubertContext::new(n, d, w).expect("word from I_{d,N}");
            let mut v = classify(&ctx);
            if max_degree > 0 {
                v.empirical = Some(empirical_multiplicity_check(&LeviContext::of_stabilizer(ctx), max_degree));
            }
            v
        })
        .collect())
}

/// One line of the scan table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub w: String,
    pub dprl: usize,
    pub smooth: String,
    pub determinantal: String,
    pub theorem_verdict: String,
    pub empirical_bound: usize,
    pub empirical_ok: String,
}

impl From<&SphericityVerdict> for ScanRow {
    fn from(v: &SphericityVerdict) -> Self {
        ScanRow {
            w: v.w.to_string(),
            dprl: v.block_count,
            smooth: v.smooth_form.map(|s| s.to_string()).unwrap_or_else(|| "-".into()),
            determinantal: v.determinantal_form.map(|t| format!("t={t}")).unwrap_or_else(|| "-".into()),
            theorem_verdict: v.theorem_verdict.to_string(),
            empirical_bound: v.empirical.as_ref().map_or(0, |e| e.max_degree_checked),
            empirical_ok: match &v.empirical {
                None => "-".into(),
                Some(e) => e.multiplicity_free_up_to_bound.to_string(),
            },
        }
    }
}
