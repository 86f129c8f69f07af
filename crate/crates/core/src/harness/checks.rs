//! The registered theorem encodings.
//!
//! Ids are the stable catalog keys exposed on the command line. Checks that
//! need hypotheses a structure does not satisfy report not-applicable with
//! the unmet hypothesis in the note.

use super::{
    CheckContext, CheckDetail, CheckStatus, CheckWitness, EntryAnalysis, HarnessError,
    TheoremCheck, TheoremEncoding,
};
use crate::corpus;
use crate::grading::GradedNearRing;
use crate::hom::{component_respect_witness, validate_hom};
use crate::ideals::{certify_ideal, enumerate_ideals, ideal_generated_by, set_power, Ideal};
use crate::mask::SubsetMask;
use crate::primality::{
    graded_prime_by_colon_sets, graded_prime_by_definition, graded_prime_by_homogeneous_pairs,
    graded_prime_by_noncontainment, graded_prime_by_quotient_products,
    graded_prime_by_scaled_sums, graded_prime_by_strict_extensions, is_prime_ideal,
    power_descends_componentwise, power_descends_global, PrimalityReport,
};
use crate::product::{product_mask, split_mask};
use crate::quotient::quotient;

const PASS: CheckStatus = CheckStatus::Pass;
const FAIL_AS_EXPECTED: CheckStatus = CheckStatus::FailAsExpected;
const VIOLATION: CheckStatus = CheckStatus::Violation;
const NOT_APPLICABLE: CheckStatus = CheckStatus::NotApplicable;

fn primality_witness(ideal: &Ideal, report: &PrimalityReport) -> CheckWitness {
    CheckWitness::Primality {
        ideal: ideal.members().indices(),
        report: report.clone(),
    }
}

/// Maximal graded ideals among the proper ideals of `a`.
fn maximal_graded(a: &EntryAnalysis) -> Vec<&Ideal> {
    a.proper_graded
        .iter()
        .filter(|i| {
            !a.ideals
                .iter()
                .any(|j| j.is_proper() && *j != **i && i.members().is_subset_of(&j.members()))
        })
        .collect()
}

/// All intersections of nonempty families of graded primes: the closure of
/// the graded-prime set under pairwise intersection.
fn graded_prime_intersections(a: &EntryAnalysis) -> Vec<Ideal> {
    let primes = a.graded_primes();
    let mut masks: Vec<SubsetMask> = primes.iter().map(|p| p.members()).collect();
    let mut grew = true;
    while grew {
        grew = false;
        for k in 0..masks.len() {
            for p in &primes {
                let inter = masks[k].intersection(&p.members());
                if !masks.contains(&inter) {
                    masks.push(inter);
                    grew = true;
                }
            }
        }
    }
    masks.sort();
    masks
        .into_iter()
        .map(|m| {
            certify_ideal(a.structure().ring(), m)
                .expect("an intersection of ideals is an ideal")
        })
        .collect()
}

// ---------------------------------------------------------------- 2.3

struct MaximalGradedIsPrime;

impl TheoremEncoding for MaximalGradedIsPrime {
    fn id(&self) -> &'static str {
        "2.3"
    }
    fn title(&self) -> &'static str {
        "with unity, maximal graded ideals are graded prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            if a.structure().ring().one().is_none() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no multiplicative identity",
                ));
                continue;
            }
            let maximal = maximal_graded(a);
            if maximal.is_empty() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no maximal graded ideal exists",
                ));
                continue;
            }
            let mut detail = None;
            for p in &maximal {
                if a.def_verdict(p.members()) != Some(true) {
                    let report = graded_prime_by_definition(a.structure(), p, &a.ideals)?;
                    detail = Some(
                        CheckDetail::new(
                            a.name(),
                            VIOLATION,
                            format!("maximal graded ideal {p} is not graded prime"),
                        )
                        .with_witness(primality_witness(p, &report)),
                    );
                    break;
                }
            }
            details.push(detail.unwrap_or_else(|| {
                CheckDetail::new(
                    a.name(),
                    PASS,
                    format!("{} maximal graded ideal(s), all graded prime", maximal.len()),
                )
            }));
        }
        Ok(self.check(ctx, details))
    }
}

// ---------------------------------------------------------------- 2.4

struct ChainIntersections;

impl TheoremEncoding for ChainIntersections {
    fn id(&self) -> &'static str {
        "2.4"
    }
    fn title(&self) -> &'static str {
        "intersections of comparable graded primes are graded prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            let primes = a.graded_primes();
            let mut pairs = 0usize;
            let mut bad = None;
            for p in &primes {
                for q in &primes {
                    if !p.members().is_subset_of(&q.members()) {
                        continue;
                    }
                    pairs += 1;
                    let inter = certify_ideal(
                        a.structure().ring(),
                        p.members().intersection(&q.members()),
                    )
                    .expect("an intersection of ideals is an ideal");
                    let report = graded_prime_by_definition(a.structure(), &inter, &a.ideals)?;
                    if !report.verdict {
                        bad = Some((inter, report));
                        break;
                    }
                }
            }
            let detail = match (pairs, bad) {
                (0, _) => CheckDetail::new(a.name(), NOT_APPLICABLE, "no graded prime ideals"),
                (_, Some((inter, report))) => CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    format!("chain intersection {inter} is not graded prime"),
                )
                .with_witness(primality_witness(&inter, &report)),
                (n, None) => CheckDetail::new(
                    a.name(),
                    PASS,
                    format!("{n} comparable pair(s), every chain intersection graded prime"),
                ),
            };
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

// ---------------------------------------------------------------- 2.4-cex

struct NonChainIntersectionCounterexample;

impl TheoremEncoding for NonChainIntersectionCounterexample {
    fn id(&self) -> &'static str {
        "2.4-cex"
    }
    fn title(&self) -> &'static str {
        "on z6-or the non-chain intersection {0,2,4} ∩ {0,3} is not graded prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            if a.name() != "z6-or" {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "counterexample instance lives on z6-or",
                ));
                continue;
            }
            let gn = a.structure();
            let mask = |idx: &[usize]| {
                SubsetMask::from_indices(gn.ring().order(), idx.iter().copied()).unwrap()
            };
            let p1 = certify_ideal(gn.ring(), mask(&[0, 2, 4])).expect("{0,2,4} is an ideal");
            let p2 = certify_ideal(gn.ring(), mask(&[0, 3])).expect("{0,3} is an ideal");
            let both_prime = a.def_verdict(p1.members()) == Some(true)
                && a.def_verdict(p2.members()) == Some(true);
            let inter = certify_ideal(gn.ring(), p1.members().intersection(&p2.members()))
                .expect("intersection is an ideal");
            let report = graded_prime_by_definition(gn, &inter, &a.ideals)?;
            if both_prime && !report.verdict {
                details.push(
                    CheckDetail::new(
                        a.name(),
                        FAIL_AS_EXPECTED,
                        "{0,2,4} and {0,3} are graded prime; their intersection {0} is not",
                    )
                    .with_witness(primality_witness(&inter, &report)),
                );
            } else {
                details.push(
                    CheckDetail::new(
                        a.name(),
                        VIOLATION,
                        "expected counterexample did not reproduce",
                    )
                    .with_witness(CheckWitness::Expectation {
                        description: format!(
                            "expected both factors graded prime (got {both_prime}) and the \
                             intersection not graded prime (got verdict {})",
                            report.verdict
                        ),
                    }),
                );
            }
        }
        Ok(self.check(ctx, details))
    }
}

// ---------------------------------------------------------------- 2.5 / 2.6

fn power_descent_check(
    ctx: &CheckContext,
    componentwise: bool,
    this: &dyn TheoremEncoding,
) -> Result<TheoremCheck, HarnessError> {
    let mut details = Vec::new();
    for a in &ctx.analyses {
        let intersections = graded_prime_intersections(a);
        if intersections.is_empty() {
            details.push(CheckDetail::new(
                a.name(),
                NOT_APPLICABLE,
                "no graded prime ideals to intersect",
            ));
            continue;
        }
        let order = a.structure().ring().order() as u32;
        let mut instances = 0usize;
        let mut bad = None;
        'outer: for p in &intersections {
            for j in &a.ideals {
                for n in 1..=order {
                    instances += 1;
                    let holds = if componentwise {
                        power_descends_componentwise(a.structure(), p, j, n)
                    } else {
                        power_descends_global(a.structure(), p, j, n)
                    };
                    if !holds {
                        bad = Some((p.clone(), j.clone(), n));
                        break 'outer;
                    }
                }
            }
        }
        let detail = match bad {
            Some((p, j, n)) => CheckDetail::new(
                a.name(),
                VIOLATION,
                format!(
                    "power descent fails: {j}^{n} lies in {p} but {j} does not \
                     (the descending ideal is not graded)"
                ),
            )
            .with_witness(CheckWitness::PowerDescent {
                p: p.members().indices(),
                j: j.members().indices(),
                n,
                componentwise,
            }),
            None => CheckDetail::new(
                a.name(),
                PASS,
                format!("{instances} descent instance(s) hold"),
            ),
        };
        details.push(detail);
    }
    Ok(this.check(ctx, details))
}

struct ComponentPowerDescent;

impl TheoremEncoding for ComponentPowerDescent {
    fn id(&self) -> &'static str {
        "2.5"
    }
    fn title(&self) -> &'static str {
        "componentwise power descent into intersections of graded primes"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        power_descent_check(ctx, true, self)
    }
}

struct GlobalPowerDescent;

impl TheoremEncoding for GlobalPowerDescent {
    fn id(&self) -> &'static str {
        "2.6"
    }
    fn title(&self) -> &'static str {
        "global power descent into intersections of graded primes"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        power_descent_check(ctx, false, self)
    }
}

// ---------------------------------------------------------------- 2.6-note

struct PrimeAndGradedImpliesGradedPrime;

impl TheoremEncoding for PrimeAndGradedImpliesGradedPrime {
    fn id(&self) -> &'static str {
        "2.6-note"
    }
    fn title(&self) -> &'static str {
        "prime graded ideals are graded prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            let mut domain = 0usize;
            let mut bad = None;
            for (p, report) in &a.def_reports {
                if !is_prime_ideal(a.structure().ring(), p, &a.ideals)?.verdict {
                    continue;
                }
                domain += 1;
                if !report.verdict {
                    bad = Some((p.clone(), report.clone()));
                    break;
                }
            }
            let detail = match (domain, bad) {
                (0, _) => {
                    CheckDetail::new(a.name(), NOT_APPLICABLE, "no proper prime graded ideal")
                }
                (_, Some((p, report))) => CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    format!("{p} is prime and graded but not graded prime"),
                )
                .with_witness(primality_witness(&p, &report)),
                (n, None) => CheckDetail::new(
                    a.name(),
                    PASS,
                    format!("{n} prime graded ideal(s), all graded prime"),
                ),
            };
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

// ---------------------------------------------------------------- 2.7-analog

struct GradedPrimeNotPrimeAnalog;

impl TheoremEncoding for GradedPrimeNotPrimeAnalog {
    fn id(&self) -> &'static str {
        "2.7-analog"
    }
    fn title(&self) -> &'static str {
        "in Gaussian analogs the ideal generated by 2 is graded prime but not prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            if !a.name().starts_with("gauss") {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "instance lives on the Gaussian analogs",
                ));
                continue;
            }
            let gn = a.structure();
            let nr = gn.ring();
            // the residue 2 has index 2n in the a*n + b encoding
            let n = (nr.order() as f64).sqrt() as usize;
            let two = 2 * n % nr.order();
            let p = ideal_generated_by(nr, SubsetMask::singleton(nr.order(), two));
            if !p.is_proper() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "2 is a unit here, so the ideal it generates is the whole carrier",
                ));
                continue;
            }
            let graded_report = graded_prime_by_definition(gn, &p, &a.ideals)?;
            let prime_report = is_prime_ideal(nr, &p, &a.ideals)?;
            if graded_report.verdict && !prime_report.verdict {
                details.push(
                    CheckDetail::new(
                        a.name(),
                        PASS,
                        format!("{p} is graded prime and not prime"),
                    )
                    .with_witness(primality_witness(&p, &prime_report)),
                );
            } else {
                details.push(
                    CheckDetail::new(
                        a.name(),
                        VIOLATION,
                        format!(
                            "expected {p} graded prime (got {}) and not prime (got {})",
                            graded_report.verdict, prime_report.verdict
                        ),
                    )
                    .with_witness(primality_witness(&p, &graded_report)),
                );
            }
        }
        Ok(self.check(ctx, details))
    }
}

// ------------------------------------------------------- 2.8 / 2.9 / 2.13

type CheckerFn =
    fn(&GradedNearRing, &Ideal, &[Ideal]) -> Result<PrimalityReport, crate::primality::PrimalityError>;

fn agreement_check(
    ctx: &CheckContext,
    this: &dyn TheoremEncoding,
    others: &[(&str, CheckerFn)],
) -> Result<TheoremCheck, HarnessError> {
    let mut details = Vec::new();
    for a in &ctx.analyses {
        if a.proper_graded.is_empty() {
            details.push(CheckDetail::new(
                a.name(),
                NOT_APPLICABLE,
                "no proper graded ideals",
            ));
            continue;
        }
        let mut bad = None;
        'outer: for (p, def_report) in &a.def_reports {
            let mut verdicts = vec![("def".to_string(), def_report.verdict)];
            for (id, f) in others {
                let r = f(a.structure(), p, &a.ideals)?;
                verdicts.push((id.to_string(), r.verdict));
            }
            if verdicts.iter().any(|(_, v)| *v != def_report.verdict) {
                bad = Some((p.clone(), verdicts));
                break 'outer;
            }
        }
        let detail = match bad {
            Some((p, verdicts)) => CheckDetail::new(
                a.name(),
                VIOLATION,
                format!("checkers disagree on {p}"),
            )
            .with_witness(CheckWitness::Disagreement {
                ideal: p.members().indices(),
                verdicts,
            }),
            None => CheckDetail::new(
                a.name(),
                PASS,
                format!(
                    "all checkers agree on {} proper graded ideal(s)",
                    a.proper_graded.len()
                ),
            ),
        };
        details.push(detail);
    }
    Ok(this.check(ctx, details))
}

struct EquivalentCriteria;

impl TheoremEncoding for EquivalentCriteria {
    fn id(&self) -> &'static str {
        "2.8"
    }
    fn title(&self) -> &'static str {
        "definition, homogeneous-pair, strict-extension and non-containment checkers agree"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        agreement_check(
            ctx,
            self,
            &[
                ("homog", graded_prime_by_homogeneous_pairs),
                ("t28c2", graded_prime_by_strict_extensions),
                ("t28c3", graded_prime_by_noncontainment),
            ],
        )
    }
}

struct ColonCriteria;

impl TheoremEncoding for ColonCriteria {
    fn id(&self) -> &'static str {
        "2.9"
    }
    fn title(&self) -> &'static str {
        "scaled-sum and colon-set conditions agree with the definition"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        agreement_check(
            ctx,
            self,
            &[
                ("p29c1", graded_prime_by_scaled_sums),
                ("p29c2", graded_prime_by_colon_sets),
            ],
        )
    }
}

struct QuotientCriterion;

impl TheoremEncoding for QuotientCriterion {
    fn id(&self) -> &'static str {
        "2.13"
    }
    fn title(&self) -> &'static str {
        "the quotient nonzero-product criterion agrees with the definition"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            if a.proper_graded.is_empty() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no proper graded ideals",
                ));
                continue;
            }
            let mut bad = None;
            for (p, def_report) in &a.def_reports {
                let r = graded_prime_by_quotient_products(a.structure(), p, &a.ideals, ctx.budget)?;
                if r.verdict != def_report.verdict {
                    bad = Some((
                        p.clone(),
                        vec![
                            ("def".to_string(), def_report.verdict),
                            ("p213".to_string(), r.verdict),
                        ],
                    ));
                    break;
                }
            }
            let detail = match bad {
                Some((p, verdicts)) => CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    format!("quotient criterion disagrees on {p}"),
                )
                .with_witness(CheckWitness::Disagreement {
                    ideal: p.members().indices(),
                    verdicts,
                }),
                None => CheckDetail::new(
                    a.name(),
                    PASS,
                    format!(
                        "quotient criterion agrees on {} proper graded ideal(s)",
                        a.proper_graded.len()
                    ),
                ),
            };
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

// ---------------------------------------------------------------- 2.10

struct HomTransfer;

impl TheoremEncoding for HomTransfer {
    fn id(&self) -> &'static str {
        "2.10"
    }
    fn title(&self) -> &'static str {
        "preimages of graded primes, and images over the kernel, stay graded prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            if a.proper_graded.is_empty() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no proper graded ideals, so no canonical projections",
                ));
                continue;
            }
            let gn = a.structure();
            let mut instances = 0usize;
            let mut bad: Option<CheckDetail> = None;
            'outer: for q in &a.proper_graded {
                let qs = quotient(gn, q, ctx.budget)?;
                if component_respect_witness(&qs.projection, gn, &qs.quotient, ctx.budget)?
                    .is_some()
                {
                    // hypothesis of the transfer result is unmet here
                    continue;
                }
                let q_ideals = enumerate_ideals(qs.quotient.ring(), ctx.budget)?;
                // preimages of graded primes of the quotient
                for jp in &q_ideals {
                    if !jp.is_proper() || !qs.quotient.is_graded_ideal(jp) {
                        continue;
                    }
                    if !graded_prime_by_definition(&qs.quotient, jp, &q_ideals)?.verdict {
                        continue;
                    }
                    instances += 1;
                    let pre = crate::hom::preimage_ideal(&qs.projection, gn.ring(), jp);
                    let ok = gn.is_graded_ideal(&pre)
                        && graded_prime_by_definition(gn, &pre, &a.ideals)?.verdict;
                    if !ok {
                        bad = Some(CheckDetail::new(
                            a.name(),
                            VIOLATION,
                            format!(
                                "preimage {pre} of graded prime {jp} in the quotient mod {q} \
                                 is not graded prime"
                            ),
                        ));
                        break 'outer;
                    }
                }
                // images of graded primes containing the kernel
                for (p, report) in &a.def_reports {
                    if !report.verdict || !q.members().is_subset_of(&p.members()) {
                        continue;
                    }
                    let img = crate::hom::image_ideal(&qs.projection, qs.quotient.ring(), p)
                        .expect("surjective image of an ideal is an ideal");
                    if !img.is_proper() {
                        continue;
                    }
                    instances += 1;
                    let ok = qs.quotient.is_graded_ideal(&img)
                        && graded_prime_by_definition(&qs.quotient, &img, &q_ideals)?.verdict;
                    if !ok {
                        bad = Some(CheckDetail::new(
                            a.name(),
                            VIOLATION,
                            format!(
                                "image {img} of graded prime {p} over the kernel {q} \
                                 is not graded prime"
                            ),
                        ));
                        break 'outer;
                    }
                }
            }
            details.push(bad.unwrap_or_else(|| {
                CheckDetail::new(
                    a.name(),
                    if instances == 0 { NOT_APPLICABLE } else { PASS },
                    if instances == 0 {
                        "no transfer instance met the hypotheses".to_string()
                    } else {
                        format!("{instances} transfer instance(s) hold across all projections")
                    },
                )
            }));
        }
        if let Some(detail) = z8_z2_transfer(ctx)? {
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

/// The named cross-structure instance: reduction mod 2 from z8-or onto
/// z2-or. Present only when both entries are in scope.
fn z8_z2_transfer(ctx: &CheckContext) -> Result<Option<CheckDetail>, HarnessError> {
    let (Some(z8), Some(z2)) = (ctx.find("z8-or"), ctx.find("z2-or")) else {
        return Ok(None);
    };
    let scope = "z8-or -> z2-or";
    let h = validate_hom(
        z8.structure().ring(),
        z2.structure().ring(),
        (0..8).map(|x| x % 2).collect(),
    )
    .expect("reduction mod 2 is a homomorphism");
    if component_respect_witness(&h, z8.structure(), z2.structure(), ctx.budget)?.is_some() {
        return Ok(Some(CheckDetail::new(
            scope,
            VIOLATION,
            "reduction mod 2 unexpectedly fails to respect components",
        )));
    }
    // preimages of graded primes of z2-or are graded prime in z8-or
    for (p, report) in &z2.def_reports {
        if !report.verdict {
            continue;
        }
        let pre = crate::hom::preimage_ideal(&h, z8.structure().ring(), p);
        let ok = z8.structure().is_graded_ideal(&pre)
            && graded_prime_by_definition(z8.structure(), &pre, &z8.ideals)?.verdict;
        if !ok {
            return Ok(Some(CheckDetail::new(
                scope,
                VIOLATION,
                format!("preimage {pre} of {p} is not graded prime"),
            )));
        }
    }
    // images of graded primes containing the kernel {0,2,4,6}
    for (p, report) in &z8.def_reports {
        if !report.verdict || !h.kernel().members().is_subset_of(&p.members()) {
            continue;
        }
        let img = crate::hom::image_ideal(&h, z2.structure().ring(), p)
            .expect("surjective image of an ideal is an ideal");
        if img.is_proper() {
            let ok = z2.structure().is_graded_ideal(&img)
                && graded_prime_by_definition(z2.structure(), &img, &z2.ideals)?.verdict;
            if !ok {
                return Ok(Some(CheckDetail::new(
                    scope,
                    VIOLATION,
                    format!("image {img} of {p} is not graded prime"),
                )));
            }
        }
    }
    Ok(Some(CheckDetail::new(
        scope,
        PASS,
        "mod-2 reduction transfers graded primality in both directions",
    )))
}

// ---------------------------------------------------------------- 2.11

struct PreimageComponentIdentity;

impl TheoremEncoding for PreimageComponentIdentity {
    fn id(&self) -> &'static str {
        "2.11"
    }
    fn title(&self) -> &'static str {
        "preimage component identity under canonical projections"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            if a.proper_graded.is_empty() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no proper graded ideals, so no canonical projections",
                ));
                continue;
            }
            let gn = a.structure();
            let mut applicable = 0usize;
            let mut entry_details: Vec<CheckDetail> = Vec::new();
            for q in &a.proper_graded {
                let qs = quotient(gn, q, ctx.budget)?;
                if component_respect_witness(&qs.projection, gn, &qs.quotient, ctx.budget)?
                    .is_some()
                {
                    // the identity's hypothesis (forward respect) is unmet
                    continue;
                }
                applicable += 1;
                if let Some(v) = qs.preimage_component_violations.first() {
                    entry_details.push(
                        CheckDetail::new(
                            a.name(),
                            VIOLATION,
                            format!(
                                "mod {q}: preimage of grade-{} slice of {} is {}, but the \
                                 grade-{} part of the preimage is {} ({} violation(s) total)",
                                v.grade,
                                v.quotient_ideal,
                                v.preimage_of_component,
                                v.grade,
                                v.component_of_preimage,
                                qs.preimage_component_violations.len(),
                            ),
                        )
                        .with_witness(CheckWitness::PreimageComponent {
                            modulus: q.members().indices(),
                            quotient_ideal: v.quotient_ideal.indices(),
                            grade: v.grade,
                            preimage_of_component: v.preimage_of_component.indices(),
                            component_of_preimage: v.component_of_preimage.indices(),
                        }),
                    );
                }
            }
            if entry_details.is_empty() {
                details.push(CheckDetail::new(
                    a.name(),
                    if applicable == 0 { NOT_APPLICABLE } else { PASS },
                    if applicable == 0 {
                        "no projection satisfies the forward-respect hypothesis".to_string()
                    } else {
                        format!("identity holds for all {applicable} projection(s)")
                    },
                ));
            } else {
                details.extend(entry_details);
            }
        }
        Ok(self.check(ctx, details))
    }
}

// ------------------------------------------------------ 2.12 / 2.14

struct QuotientCorrespondence;

impl TheoremEncoding for QuotientCorrespondence {
    fn id(&self) -> &'static str {
        "2.12"
    }
    fn title(&self) -> &'static str {
        "graded primality of P and of its image mod Q agree for nested graded ideals"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            let gn = a.structure();
            let mut pairs = 0usize;
            let mut bad = None;
            'outer: for q in &a.proper_graded {
                let qs = quotient(gn, q, ctx.budget)?;
                let q_ideals = enumerate_ideals(qs.quotient.ring(), ctx.budget)?;
                for (p, report) in &a.def_reports {
                    if !q.members().is_subset_of(&p.members()) {
                        continue;
                    }
                    pairs += 1;
                    let img = crate::hom::image_ideal(&qs.projection, qs.quotient.ring(), p)
                        .expect("surjective image of an ideal is an ideal");
                    let img_verdict =
                        graded_prime_by_definition(&qs.quotient, &img, &q_ideals)?.verdict;
                    if img_verdict != report.verdict {
                        bad = Some((q.clone(), p.clone(), report.verdict, img_verdict));
                        break 'outer;
                    }
                }
            }
            let detail = match (pairs, bad) {
                (0, _) => CheckDetail::new(a.name(), NOT_APPLICABLE, "no nested graded pairs"),
                (_, Some((q, p, base, quot))) => CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    format!("primality of {p} and of its image mod {q} disagree"),
                )
                .with_witness(CheckWitness::QuotientMismatch {
                    modulus: q.members().indices(),
                    ideal: p.members().indices(),
                    base_verdict: base,
                    quotient_verdict: quot,
                }),
                (n, None) => CheckDetail::new(
                    a.name(),
                    PASS,
                    format!("{n} nested pair(s) agree"),
                ),
            };
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

struct ZeroIdealCorrespondence;

impl TheoremEncoding for ZeroIdealCorrespondence {
    fn id(&self) -> &'static str {
        "2.14"
    }
    fn title(&self) -> &'static str {
        "the zero ideal of N/I is graded prime exactly when I is"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            if a.proper_graded.is_empty() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no proper graded ideals",
                ));
                continue;
            }
            let gn = a.structure();
            let mut bad = None;
            for (p, report) in &a.def_reports {
                let qs = quotient(gn, p, ctx.budget)?;
                let q_ideals = enumerate_ideals(qs.quotient.ring(), ctx.budget)?;
                let zero = certify_ideal(qs.quotient.ring(), qs.quotient.ring().zero_mask())
                    .expect("the zero ideal is an ideal");
                let zero_verdict =
                    graded_prime_by_definition(&qs.quotient, &zero, &q_ideals)?.verdict;
                if zero_verdict != report.verdict {
                    bad = Some((p.clone(), report.verdict, zero_verdict));
                    break;
                }
            }
            let detail = match bad {
                Some((p, base, quot)) => CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    format!("zero-ideal correspondence fails at {p}"),
                )
                .with_witness(CheckWitness::QuotientMismatch {
                    modulus: p.members().indices(),
                    ideal: p.members().indices(),
                    base_verdict: base,
                    quotient_verdict: quot,
                }),
                None => CheckDetail::new(
                    a.name(),
                    PASS,
                    format!(
                        "correspondence holds for all {} graded moduli",
                        a.proper_graded.len()
                    ),
                ),
            };
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

// ------------------------------------------------------ 2.15 / 2.16

struct MaximalGradedDichotomy;

impl TheoremEncoding for MaximalGradedDichotomy {
    fn id(&self) -> &'static str {
        "2.15"
    }
    fn title(&self) -> &'static str {
        "maximal graded ideals are graded prime or absorb the squared carrier"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            let maximal = maximal_graded(a);
            if maximal.is_empty() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no maximal graded ideal exists",
                ));
                continue;
            }
            let nr = a.structure().ring();
            let n_squared = set_power(nr, nr.full_mask(), 2);
            let mut bad = None;
            for p in &maximal {
                let prime = a.def_verdict(p.members()) == Some(true);
                if !prime && !n_squared.is_subset_of(&p.members()) {
                    bad = Some((*p).clone());
                    break;
                }
            }
            let detail = match bad {
                Some(p) => CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    format!("{p} is maximal graded but neither graded prime nor above N*N"),
                )
                .with_witness(CheckWitness::MaximalNotCovered {
                    ideal: p.members().indices(),
                    carrier_squared: n_squared.indices(),
                }),
                None => CheckDetail::new(
                    a.name(),
                    PASS,
                    format!("{} maximal graded ideal(s) covered", maximal.len()),
                ),
            };
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

struct UnitalMaximalGradedPrime;

impl TheoremEncoding for UnitalMaximalGradedPrime {
    fn id(&self) -> &'static str {
        "2.16"
    }
    fn title(&self) -> &'static str {
        "with unity, every maximal graded ideal is graded prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            if a.structure().ring().one().is_none() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no multiplicative identity",
                ));
                continue;
            }
            let maximal = maximal_graded(a);
            if maximal.is_empty() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no maximal graded ideal exists",
                ));
                continue;
            }
            match maximal
                .iter()
                .find(|p| a.def_verdict(p.members()) != Some(true))
            {
                Some(p) => {
                    let report = graded_prime_by_definition(a.structure(), p, &a.ideals)?;
                    details.push(
                        CheckDetail::new(
                            a.name(),
                            VIOLATION,
                            format!("maximal graded ideal {p} is not graded prime"),
                        )
                        .with_witness(primality_witness(p, &report)),
                    );
                }
                None => details.push(CheckDetail::new(
                    a.name(),
                    PASS,
                    format!("all {} maximal graded ideal(s) graded prime", maximal.len()),
                )),
            }
        }
        Ok(self.check(ctx, details))
    }
}

// ---------------------------------------------------------------- 2.17

struct KernelTransfer;

impl TheoremEncoding for KernelTransfer {
    fn id(&self) -> &'static str {
        "2.17"
    }
    fn title(&self) -> &'static str {
        "a graded prime zero ideal in the target makes the kernel graded prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            if a.proper_graded.is_empty() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no proper graded ideals, so no canonical projections",
                ));
                continue;
            }
            let gn = a.structure();
            let mut instances = 0usize;
            let mut bad = None;
            for q in &a.proper_graded {
                let qs = quotient(gn, q, ctx.budget)?;
                if component_respect_witness(&qs.projection, gn, &qs.quotient, ctx.budget)?
                    .is_some()
                {
                    continue;
                }
                let q_ideals = enumerate_ideals(qs.quotient.ring(), ctx.budget)?;
                let zero = certify_ideal(qs.quotient.ring(), qs.quotient.ring().zero_mask())
                    .expect("the zero ideal is an ideal");
                if !graded_prime_by_definition(&qs.quotient, &zero, &q_ideals)?.verdict {
                    continue;
                }
                instances += 1;
                if a.def_verdict(q.members()) != Some(true) {
                    bad = Some(q.clone());
                    break;
                }
            }
            let detail = match (instances, bad) {
                (_, Some(q)) => CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    format!("kernel {q} is not graded prime despite a graded prime zero ideal"),
                ),
                (0, None) => CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "no projection target has a graded prime zero ideal",
                ),
                (n, None) => CheckDetail::new(
                    a.name(),
                    PASS,
                    format!("{n} kernel instance(s) hold"),
                ),
            };
            details.push(detail);
        }
        if let Some(detail) = z8_z2_kernel_remark(ctx) {
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

/// The named z8/z2 instance: the zero ideal is graded prime in z2-or, the
/// mod-2 kernel is graded prime in z8-or, and the converse direction fails
/// there ({0} is not graded prime in z8-or).
fn z8_z2_kernel_remark(ctx: &CheckContext) -> Option<CheckDetail> {
    let (z8, z2) = (ctx.find("z8-or")?, ctx.find("z2-or")?);
    let scope = "z8-or -> z2-or";
    let zero2 = SubsetMask::singleton(2, z2.structure().ring().zero());
    let zero8 = SubsetMask::singleton(8, z8.structure().ring().zero());
    let kernel = SubsetMask::from_indices(8, [0, 2, 4, 6]).unwrap();
    let target_zero_prime = z2.def_verdict(zero2) == Some(true);
    let kernel_prime = z8.def_verdict(kernel) == Some(true);
    let source_zero_prime = z8.def_verdict(zero8) == Some(true);
    if target_zero_prime && kernel_prime && !source_zero_prime {
        Some(CheckDetail::new(
            scope,
            PASS,
            "zero ideal graded prime in z2-or, kernel {0, 2, 4, 6} graded prime in z8-or, \
             and the converse fails: {0} is not graded prime in z8-or",
        ))
    } else {
        Some(
            CheckDetail::new(scope, VIOLATION, "expected kernel instance did not reproduce")
                .with_witness(CheckWitness::Expectation {
                    description: format!(
                        "target zero prime = {target_zero_prime}, kernel prime = \
                         {kernel_prime}, source zero prime = {source_zero_prime}"
                    ),
                }),
        )
    }
}

// ------------------------------------------- 2.18 / 2.19 / 2.20 / 2.21 / 2.22

/// Resolve the factor entries of a product-built corpus entry.
fn factors(a: &EntryAnalysis) -> Option<(corpus::CorpusEntry, corpus::CorpusEntry)> {
    let (l, r) = a.entry.product_of.as_ref()?;
    Some((corpus::corpus_entry(l)?, corpus::corpus_entry(r)?))
}

fn not_a_product(a: &EntryAnalysis) -> CheckDetail {
    CheckDetail::new(
        a.name(),
        NOT_APPLICABLE,
        "not a componentwise product with known factors",
    )
}

struct FactorCorrespondence;

impl TheoremEncoding for FactorCorrespondence {
    fn id(&self) -> &'static str {
        "2.18"
    }
    fn title(&self) -> &'static str {
        "P is graded prime in a factor exactly when P x M is graded prime in the product"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            let Some((left, right)) = factors(a) else {
                details.push(not_a_product(a));
                continue;
            };
            if left.structure.ring().one().is_none() || right.structure.ring().one().is_none() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "a factor lacks a multiplicative identity",
                ));
                continue;
            }
            let (lo, ro) = (left.structure.ring().order(), right.structure.ring().order());
            let mut pairs = 0usize;
            let mut bad = None;
            // sides: (factor, embed as I x M or N x J)
            for side in 0..2 {
                let factor = if side == 0 { &left } else { &right };
                let f_ideals = enumerate_ideals(factor.structure.ring(), ctx.budget)?;
                for p in &f_ideals {
                    if !p.is_proper() || !factor.structure.is_graded_ideal(p) {
                        continue;
                    }
                    let factor_verdict =
                        graded_prime_by_definition(&factor.structure, p, &f_ideals)?.verdict;
                    let embedded = if side == 0 {
                        product_mask(lo, ro, p.members(), SubsetMask::full(ro))
                    } else {
                        product_mask(lo, ro, SubsetMask::full(lo), p.members())
                    };
                    let embedded = certify_ideal(a.structure().ring(), embedded)
                        .expect("a factor ideal crossed with the other carrier is an ideal");
                    if !a.structure().is_graded_ideal(&embedded) {
                        bad = Some((p.clone(), factor_verdict, false));
                        break;
                    }
                    pairs += 1;
                    let product_verdict =
                        graded_prime_by_definition(a.structure(), &embedded, &a.ideals)?.verdict;
                    if product_verdict != factor_verdict {
                        bad = Some((p.clone(), factor_verdict, product_verdict));
                        break;
                    }
                }
                if bad.is_some() {
                    break;
                }
            }
            let detail = match (pairs, bad) {
                (_, Some((p, f, q))) => CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    format!(
                        "correspondence fails for factor ideal {p}: factor verdict {f}, \
                         product verdict {q}"
                    ),
                ),
                (0, None) => CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "factors have no proper graded ideals",
                ),
                (n, None) => {
                    CheckDetail::new(a.name(), PASS, format!("{n} embedding(s) agree"))
                }
            };
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

const FACTORIZATION_BOUND: u32 = 4;

/// Masks reachable as products of at most `FACTORIZATION_BOUND` graded
/// primes (left-folded set products).
fn bounded_products(gn: &GradedNearRing, primes: &[SubsetMask]) -> Vec<SubsetMask> {
    let nr = gn.ring();
    let mut reach: Vec<SubsetMask> = primes.to_vec();
    let mut frontier = primes.to_vec();
    for _ in 1..FACTORIZATION_BOUND {
        let mut next = Vec::new();
        for m in &frontier {
            for p in primes {
                let r = crate::ideals::set_product(nr, *m, *p);
                if !reach.contains(&r) && !next.contains(&r) {
                    next.push(r);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        reach.extend(next.iter().copied());
        frontier = next;
    }
    reach
}

struct BoundedFactorization;

impl TheoremEncoding for BoundedFactorization {
    fn id(&self) -> &'static str {
        "2.19"
    }
    fn title(&self) -> &'static str {
        "factorization into graded primes transfers to products (bounded length 4)"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            let Some((left, right)) = factors(a) else {
                details.push(not_a_product(a));
                continue;
            };
            // hypothesis: every proper ideal of each factor factors into
            // graded primes within the bound
            let mut hypothesis_holds = true;
            let mut why = String::new();
            for factor in [&left, &right] {
                let f_ideals = enumerate_ideals(factor.structure.ring(), ctx.budget)?;
                let mut primes = Vec::new();
                for p in &f_ideals {
                    if p.is_proper()
                        && factor.structure.is_graded_ideal(p)
                        && graded_prime_by_definition(&factor.structure, p, &f_ideals)?.verdict
                    {
                        primes.push(p.members());
                    }
                }
                let reach = bounded_products(&factor.structure, &primes);
                if let Some(unfactored) = f_ideals
                    .iter()
                    .find(|i| i.is_proper() && !reach.contains(&i.members()))
                {
                    hypothesis_holds = false;
                    why = format!(
                        "factor {} has an unfactorable proper ideal {unfactored}",
                        factor.name
                    );
                    break;
                }
            }
            if !hypothesis_holds {
                details.push(CheckDetail::new(a.name(), NOT_APPLICABLE, why));
                continue;
            }
            let primes: Vec<SubsetMask> = a.graded_primes().iter().map(|p| p.members()).collect();
            let reach = bounded_products(a.structure(), &primes);
            match a
                .ideals
                .iter()
                .find(|i| i.is_proper() && !reach.contains(&i.members()))
            {
                Some(unfactored) => details.push(
                    CheckDetail::new(
                        a.name(),
                        VIOLATION,
                        format!("proper ideal {unfactored} has no bounded factorization"),
                    )
                    .with_witness(CheckWitness::Unfactored {
                        ideal: unfactored.members().indices(),
                        max_length: FACTORIZATION_BOUND,
                    }),
                ),
                None => details.push(CheckDetail::new(
                    a.name(),
                    PASS,
                    format!(
                        "every proper ideal factors into graded primes (length <= {})",
                        FACTORIZATION_BOUND
                    ),
                )),
            }
        }
        Ok(self.check(ctx, details))
    }
}

struct ProductClassification;

impl TheoremEncoding for ProductClassification {
    fn id(&self) -> &'static str {
        "2.20"
    }
    fn title(&self) -> &'static str {
        "graded primes of a product are exactly I x M and N x J with graded prime factor"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            let Some((left, right)) = factors(a) else {
                details.push(not_a_product(a));
                continue;
            };
            if left.structure.ring().one().is_none() || right.structure.ring().one().is_none() {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "a factor lacks a multiplicative identity",
                ));
                continue;
            }
            let (lo, ro) = (left.structure.ring().order(), right.structure.ring().order());
            let l_ideals = enumerate_ideals(left.structure.ring(), ctx.budget)?;
            let r_ideals = enumerate_ideals(right.structure.ring(), ctx.budget)?;
            let mut l_primes = Vec::new();
            for p in &l_ideals {
                if p.is_proper()
                    && left.structure.is_graded_ideal(p)
                    && graded_prime_by_definition(&left.structure, p, &l_ideals)?.verdict
                {
                    l_primes.push(p.members());
                }
            }
            let mut r_primes = Vec::new();
            for p in &r_ideals {
                if p.is_proper()
                    && right.structure.is_graded_ideal(p)
                    && graded_prime_by_definition(&right.structure, p, &r_ideals)?.verdict
                {
                    r_primes.push(p.members());
                }
            }
            let mut bad = None;
            let mut classified = 0usize;
            for p in a.graded_primes() {
                let is_factor_form = split_mask(lo, ro, p.members()).is_some_and(|(l, r)| {
                    (r == SubsetMask::full(ro) && l_primes.contains(&l))
                        || (l == SubsetMask::full(lo) && r_primes.contains(&r))
                });
                if !is_factor_form {
                    bad = Some(p.clone());
                    break;
                }
                classified += 1;
            }
            // converse: every factor form is graded prime in the product
            if bad.is_none() {
                'conv: for (side, primes, other_full) in [
                    (0usize, &l_primes, SubsetMask::full(ro)),
                    (1usize, &r_primes, SubsetMask::full(lo)),
                ] {
                    for f in primes {
                        let embedded = if side == 0 {
                            product_mask(lo, ro, *f, other_full)
                        } else {
                            product_mask(lo, ro, other_full, *f)
                        };
                        if a.def_verdict(embedded) != Some(true) {
                            bad = Some(
                                certify_ideal(a.structure().ring(), embedded)
                                    .expect("factor form is an ideal"),
                            );
                            break 'conv;
                        }
                    }
                }
            }
            let detail = match bad {
                Some(p) => CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    format!("classification fails at {p}"),
                )
                .with_witness(CheckWitness::Unclassified {
                    ideal: p.members().indices(),
                }),
                None => CheckDetail::new(
                    a.name(),
                    PASS,
                    format!("{classified} graded prime(s), all of factor form, and conversely"),
                ),
            };
            details.push(detail);
        }
        Ok(self.check(ctx, details))
    }
}

struct ZeroPairNotGradedPrime;

impl TheoremEncoding for ZeroPairNotGradedPrime {
    fn id(&self) -> &'static str {
        "2.21"
    }
    fn title(&self) -> &'static str {
        "the zero ideal of a product of nontrivial factors is never graded prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            let Some((left, right)) = factors(a) else {
                details.push(not_a_product(a));
                continue;
            };
            if left.structure.ring().order() == 1 || right.structure.ring().order() == 1 {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "a factor is the trivial near-ring",
                ));
                continue;
            }
            let zero = certify_ideal(a.structure().ring(), a.structure().ring().zero_mask())
                .expect("the zero ideal is an ideal");
            let report = graded_prime_by_definition(a.structure(), &zero, &a.ideals)?;
            if report.verdict {
                details.push(CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    "zero ideal of a nontrivial product is graded prime",
                ));
            } else {
                details.push(
                    CheckDetail::new(a.name(), PASS, "zero ideal rejected as graded prime")
                        .with_witness(primality_witness(&zero, &report)),
                );
            }
        }
        Ok(self.check(ctx, details))
    }
}

struct AllGradedPrimeForcesTrivialFactor;

impl TheoremEncoding for AllGradedPrimeForcesTrivialFactor {
    fn id(&self) -> &'static str {
        "2.22"
    }
    fn title(&self) -> &'static str {
        "a product of nontrivial factors has a graded ideal that is not graded prime"
    }
    fn run(&self, ctx: &CheckContext) -> Result<TheoremCheck, HarnessError> {
        let mut details = Vec::new();
        for a in &ctx.analyses {
            let Some((left, right)) = factors(a) else {
                details.push(not_a_product(a));
                continue;
            };
            if left.structure.ring().order() == 1 || right.structure.ring().order() == 1 {
                details.push(CheckDetail::new(
                    a.name(),
                    NOT_APPLICABLE,
                    "a factor is the trivial near-ring",
                ));
                continue;
            }
            match a.def_reports.iter().find(|(_, r)| !r.verdict) {
                Some((p, report)) => details.push(
                    CheckDetail::new(
                        a.name(),
                        PASS,
                        format!("{p} is a graded ideal that is not graded prime"),
                    )
                    .with_witness(primality_witness(p, report)),
                ),
                None => details.push(CheckDetail::new(
                    a.name(),
                    VIOLATION,
                    "every proper graded ideal is graded prime despite nontrivial factors",
                )),
            }
        }
        Ok(self.check(ctx, details))
    }
}

pub(super) static REGISTRY: &[&dyn TheoremEncoding] = &[
    &MaximalGradedIsPrime,
    &ChainIntersections,
    &NonChainIntersectionCounterexample,
    &ComponentPowerDescent,
    &GlobalPowerDescent,
    &PrimeAndGradedImpliesGradedPrime,
    &GradedPrimeNotPrimeAnalog,
    &EquivalentCriteria,
    &ColonCriteria,
    &HomTransfer,
    &PreimageComponentIdentity,
    &QuotientCorrespondence,
    &QuotientCriterion,
    &ZeroIdealCorrespondence,
    &MaximalGradedDichotomy,
    &UnitalMaximalGradedPrime,
    &KernelTransfer,
    &FactorCorrespondence,
    &BoundedFactorization,
    &ProductClassification,
    &ZeroPairNotGradedPrime,
    &AllGradedPrimeForcesTrivialFactor,
];
