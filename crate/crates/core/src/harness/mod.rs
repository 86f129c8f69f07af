//! Executable encodings of the structural results as pass/fail properties
//! over corpus entries (or any user structure), with witness reporting.
//!
//! Each result is a [`TheoremEncoding`] registered under a stable id and
//! selected by name. Expected counterexamples are first class: a check whose
//! content is "this property fails here" reports `fail-as-expected` when the
//! failure reproduces and a violation when it does not. A genuine violation
//! of a claimed property on a valid structure is reported verbatim with a
//! re-checkable witness.

mod checks;

use serde::Serialize;
use thiserror::Error;

use crate::corpus::CorpusEntry;
use crate::grading::GradedNearRing;
use crate::ideals::{enumerate_ideals, EnumerationError, Ideal};
use crate::mask::SubsetMask;
use crate::primality::{
    graded_prime_by_definition, PrimalityError, PrimalityReport,
};
use crate::quotient::QuotientError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    FailAsExpected,
    Violation,
    NotApplicable,
}

impl CheckStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::FailAsExpected => "fail-as-expected",
            CheckStatus::Violation => "VIOLATION",
            CheckStatus::NotApplicable => "not-applicable",
        }
    }
}

/// Structured, replayable evidence attached to a check detail.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CheckWitness {
    /// A primality verdict (usually a failing one) on a named ideal.
    Primality {
        ideal: Vec<usize>,
        report: PrimalityReport,
    },
    /// Checkers that should agree returned different verdicts.
    Disagreement {
        ideal: Vec<usize>,
        verdicts: Vec<(String, bool)>,
    },
    /// The preimage component identity failed in a quotient.
    PreimageComponent {
        modulus: Vec<usize>,
        quotient_ideal: Vec<usize>,
        grade: usize,
        preimage_of_component: Vec<usize>,
        component_of_preimage: Vec<usize>,
    },
    /// Power descent failed: `J^n` inside `P` without `J` inside `P`.
    PowerDescent {
        p: Vec<usize>,
        j: Vec<usize>,
        n: u32,
        componentwise: bool,
    },
    /// Primality of an ideal and of its image in a quotient disagree.
    QuotientMismatch {
        modulus: Vec<usize>,
        ideal: Vec<usize>,
        base_verdict: bool,
        quotient_verdict: bool,
    },
    /// A graded prime of a product that is not of a factor form.
    Unclassified { ideal: Vec<usize> },
    /// A proper ideal with no bounded factorization into graded primes.
    Unfactored { ideal: Vec<usize>, max_length: u32 },
    /// A maximal graded ideal that is neither graded prime nor absorbs
    /// the squared carrier.
    MaximalNotCovered {
        ideal: Vec<usize>,
        carrier_squared: Vec<usize>,
    },
    /// A stated expectation that did not reproduce.
    Expectation { description: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckDetail {
    pub structure: String,
    pub status: CheckStatus,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CheckWitness>,
}

impl CheckDetail {
    pub fn new(structure: &str, status: CheckStatus, note: impl Into<String>) -> Self {
        Self {
            structure: structure.to_string(),
            status,
            note: note.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: CheckWitness) -> Self {
        self.witness = Some(witness);
        self
    }
}

/// Result of one theorem check over one or more structures.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremCheck {
    pub id: String,
    pub title: String,
    pub scope: String,
    pub status: CheckStatus,
    pub details: Vec<CheckDetail>,
}

impl TheoremCheck {
    fn from_details(id: &str, title: &str, scope: String, details: Vec<CheckDetail>) -> Self {
        let status = combine_statuses(details.iter().map(|d| d.status));
        Self {
            id: id.to_string(),
            title: title.to_string(),
            scope,
            status,
            details,
        }
    }
}

pub(crate) fn combine_statuses<I: IntoIterator<Item = CheckStatus>>(statuses: I) -> CheckStatus {
    let mut out = CheckStatus::NotApplicable;
    for s in statuses {
        out = match (out, s) {
            (_, CheckStatus::Violation) | (CheckStatus::Violation, _) => CheckStatus::Violation,
            (_, CheckStatus::FailAsExpected) | (CheckStatus::FailAsExpected, _) => {
                CheckStatus::FailAsExpected
            }
            (_, CheckStatus::Pass) | (CheckStatus::Pass, _) => CheckStatus::Pass,
            _ => CheckStatus::NotApplicable,
        };
    }
    out
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error("unknown theorem id {id:?}")]
    UnknownTheoremId { id: String },
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("primality check failed: {0}")]
    Primality(#[from] PrimalityError),
    #[error("quotient construction failed: {0}")]
    Quotient(#[from] QuotientError),
}

/// Precomputed per-structure data shared by all checks.
pub struct EntryAnalysis {
    pub entry: CorpusEntry,
    pub ideals: Vec<Ideal>,
    pub proper_graded: Vec<Ideal>,
    /// Definition-checker reports for every proper graded ideal, in
    /// canonical ideal order.
    pub def_reports: Vec<(Ideal, PrimalityReport)>,
}

impl EntryAnalysis {
    fn new(entry: CorpusEntry, budget: usize) -> Result<Self, HarnessError> {
        let ideals = enumerate_ideals(entry.structure.ring(), budget)?;
        let proper_graded: Vec<Ideal> = ideals
            .iter()
            .filter(|i| i.is_proper() && entry.structure.is_graded_ideal(i))
            .cloned()
            .collect();
        let mut def_reports = Vec::with_capacity(proper_graded.len());
        for p in &proper_graded {
            let report = graded_prime_by_definition(&entry.structure, p, &ideals)?;
            def_reports.push((p.clone(), report));
        }
        Ok(Self {
            entry,
            ideals,
            proper_graded,
            def_reports,
        })
    }

    pub fn structure(&self) -> &GradedNearRing {
        &self.entry.structure
    }

    pub fn name(&self) -> &str {
        &self.entry.name
    }

    pub fn graded_primes(&self) -> Vec<&Ideal> {
        self.def_reports
            .iter()
            .filter(|(_, r)| r.verdict)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn def_verdict(&self, members: SubsetMask) -> Option<bool> {
        self.def_reports
            .iter()
            .find(|(i, _)| i.members() == members)
            .map(|(_, r)| r.verdict)
    }
}

/// Shared input to every check: analyzed structures plus the enumeration
/// budget for constructions performed inside checks.
pub struct CheckContext {
    pub analyses: Vec<EntryAnalysis>,
    pub budget: usize,
}

impl CheckContext {
    pub fn new(entries: Vec<CorpusEntry>, budget: usize) -> Result<Self, HarnessError> {
        let analyses = entries
            .into_iter()
            .map(|e| EntryAnalysis::new(e, budget))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { analyses, budget })
    }

    pub fn scope(&self) -> String {
        self.analyses
            .iter()
            .map(|a| a.name().to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn find(&self, name: &str) -> Option<&EntryAnalysis> {
        self.analyses.iter().find(|a| a.name() == name)
    }
}

/// One registered theorem encoding.
pub trait TheoremEncoding: Sync {
    fn id(&self) -> &'static str;
    fn title(&self) -> &'static str;
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError>;

    fn check(&self, ctx: &CheckContext, details: Vec<CheckDetail>) -> TheoremCheck {
        TheoremCheck::from_details(self.id(), self.title(), ctx.scope(), details)
    }
}

/// All registered checks in report order.
pub fn theorem_checks() -> &'static [&'static dyn TheoremEncoding] {
    checks::REGISTRY
}

pub fn theorem_ids() -> Vec<&'static str> {
    theorem_checks().iter().map(|c| c.id()).collect()
}

pub fn run_check(id: &str, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
    let check = theorem_checks()
        .iter()
        .find(|c| c.id() == id)
        .ok_or_else(|| HarnessError::UnknownTheoremId { id: id.to_string() })?;
    check.run(ctx)
}

#[derive(Clone, Debug, Serialize)]
pub struct HarnessSummary {
    pub pass: usize,
    pub fail_as_expected: usize,
    pub violation: usize,
    pub not_applicable: usize,
    /// True when no check reported a genuine violation.
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HarnessReport {
    pub scope: String,
    pub checks: Vec<TheoremCheck>,
    pub summary: HarnessSummary,
}

impl HarnessReport {
    pub fn has_violation(&self) -> bool {
        !self.summary.ok
    }
}

/// Run every registered check. Checks are independent; with `threads > 1`
/// they are distributed round-robin over scoped worker threads and merged
/// back in registry order, so the report is identical for every thread
/// count.
pub fn run_all(
    entries: Vec<CorpusEntry>,
    budget: usize,
    threads: usize,
) -> Result<HarnessReport, HarnessError> {
    let ctx = CheckContext::new(entries, budget)?;
    let registry = theorem_checks();
    let threads = threads.clamp(1, registry.len());
    let mut slots: Vec<Option<Result<TheoremCheck, HarnessError>>> =
        (0..registry.len()).map(|_| None).collect();
    if threads == 1 {
        for (i, check) in registry.iter().enumerate() {
            slots[i] = Some(check.run(&ctx));
        }
    } else {
        let ctx_ref = &ctx;
        let mut partials: Vec<Vec<(usize, Result<TheoremCheck, HarnessError>)>> =
            Vec::with_capacity(threads);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    scope.spawn(move || {
                        registry
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| i % threads == t)
                            .map(|(i, check)| (i, check.run(ctx_ref)))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                partials.push(h.join().expect("harness worker panicked"));
            }
        });
        for part in partials {
            for (i, result) in part {
                slots[i] = Some(result);
            }
        }
    }
    let mut checks = Vec::with_capacity(registry.len());
    for slot in slots {
        checks.push(slot.expect("every check ran")?);
    }
    let count = |s: CheckStatus| checks.iter().filter(|c| c.status == s).count();
    let summary = HarnessSummary {
        pass: count(CheckStatus::Pass),
        fail_as_expected: count(CheckStatus::FailAsExpected),
        violation: count(CheckStatus::Violation),
        not_applicable: count(CheckStatus::NotApplicable),
        ok: count(CheckStatus::Violation) == 0,
    };
    Ok(HarnessReport {
        scope: ctx.scope(),
        checks,
        summary,
    })
}
