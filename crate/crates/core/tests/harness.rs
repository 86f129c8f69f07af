//! End-to-end harness runs over the built-in corpus.

use nearring_core::corpus::{builtin_corpus, corpus_entry};
use nearring_core::harness::{
    run_all, run_check, theorem_ids, CheckContext, CheckStatus, HarnessError,
};
use nearring_core::ideals::DEFAULT_ENUMERATION_BUDGET;

const BUDGET: usize = DEFAULT_ENUMERATION_BUDGET;

#[test]
fn full_corpus_run_has_expected_statuses() {
    let report = run_all(builtin_corpus(), BUDGET, 1).unwrap();
    let status_of = |id: &str| {
        report
            .checks
            .iter()
            .find(|c| c.id == id)
            .unwrap_or_else(|| panic!("check {id} missing"))
            .status
    };
    assert_eq!(status_of("2.4-cex"), CheckStatus::FailAsExpected);
    // two genuine instance violations: global power descent fails for the
    // non-graded nilpotent ideal of the Gaussian analogs, and the preimage
    // component identity fails whenever the modulus leaves a component
    assert_eq!(status_of("2.6"), CheckStatus::Violation);
    assert_eq!(status_of("2.11"), CheckStatus::Violation);
    for id in [
        "2.3", "2.4", "2.5", "2.6-note", "2.7-analog", "2.8", "2.9", "2.10", "2.12", "2.13",
        "2.14", "2.15", "2.16", "2.17", "2.18", "2.19", "2.20", "2.21", "2.22",
    ] {
        assert_eq!(status_of(id), CheckStatus::Pass, "check {id}");
    }
    assert!(report.has_violation());
    assert_eq!(report.summary.violation, 2);
    assert_eq!(report.summary.fail_as_expected, 1);
    assert_eq!(report.summary.pass, 19);
}

#[test]
fn power_descent_violations_carry_the_nilpotent_witness() {
    let report = run_all(builtin_corpus(), BUDGET, 1).unwrap();
    let check = report.checks.iter().find(|c| c.id == "2.6").unwrap();
    let gauss2 = check
        .details
        .iter()
        .find(|d| d.structure == "gauss2")
        .unwrap();
    assert_eq!(gauss2.status, CheckStatus::Violation);
    // <1+i> squares to {0} inside the graded prime {0} without lying in it
    match &gauss2.witness {
        Some(nearring_core::harness::CheckWitness::PowerDescent { p, j, n, .. }) => {
            assert_eq!(p, &vec![0]);
            assert_eq!(j, &vec![0, 3]);
            assert_eq!(*n, 2);
        }
        other => panic!("unexpected witness {other:?}"),
    }
    let gauss4 = check
        .details
        .iter()
        .find(|d| d.structure == "gauss4")
        .unwrap();
    assert_eq!(gauss4.status, CheckStatus::Violation);
}

/// Every witness in the report must replay through the library: primality
/// witnesses re-check, power-descent witnesses recompute as failures, and
/// preimage-component witnesses rebuild from the quotient.
#[test]
fn report_witnesses_replay() {
    use nearring_core::harness::CheckWitness;
    use nearring_core::ideals::{certify_ideal, enumerate_ideals};
    use nearring_core::mask::SubsetMask;
    use nearring_core::primality::{checker_by_id, power_descends_componentwise, power_descends_global, verify_witness};
    use nearring_core::quotient::quotient;

    let corpus = builtin_corpus();
    let report = run_all(corpus.clone(), BUDGET, 1).unwrap();
    let entry = |name: &str| {
        corpus
            .iter()
            .find(|e| e.name == name)
            .unwrap_or_else(|| panic!("entry {name}"))
    };
    let mut replayed = 0usize;
    for check in &report.checks {
        for d in &check.details {
            let Some(w) = &d.witness else { continue };
            match w {
                CheckWitness::Primality { ideal, report } => {
                    let gn = &entry(&d.structure).structure;
                    let mask =
                        SubsetMask::from_indices(gn.ring().order(), ideal.iter().copied())
                            .unwrap();
                    let p = certify_ideal(gn.ring(), mask).expect("witness ideal certifies");
                    if let Some(pw) = &report.witness {
                        assert!(
                            verify_witness(gn, &p, pw, BUDGET),
                            "primality witness in {} does not replay",
                            check.id
                        );
                    }
                    // the producing checker reproduces the recorded verdict
                    let ideals = enumerate_ideals(gn.ring(), BUDGET).unwrap();
                    let verdict = if report.checker == "prime" {
                        nearring_core::primality::is_prime_ideal(gn.ring(), &p, &ideals)
                            .unwrap()
                            .verdict
                    } else {
                        let id = match report.checker.as_str() {
                            "p29c1" | "p29c2" => "p29",
                            other => other,
                        };
                        checker_by_id(id)
                            .unwrap_or_else(|| panic!("unknown checker {id}"))
                            .check(gn, &p, &ideals, BUDGET)
                            .unwrap()
                            .verdict
                    };
                    assert_eq!(verdict, report.verdict, "verdict drift in {}", check.id);
                    replayed += 1;
                }
                CheckWitness::PowerDescent {
                    p,
                    j,
                    n,
                    componentwise,
                } => {
                    let gn = &entry(&d.structure).structure;
                    let order = gn.ring().order();
                    let pi = certify_ideal(
                        gn.ring(),
                        SubsetMask::from_indices(order, p.iter().copied()).unwrap(),
                    )
                    .unwrap();
                    let ji = certify_ideal(
                        gn.ring(),
                        SubsetMask::from_indices(order, j.iter().copied()).unwrap(),
                    )
                    .unwrap();
                    let holds = if *componentwise {
                        power_descends_componentwise(gn, &pi, &ji, *n)
                    } else {
                        power_descends_global(gn, &pi, &ji, *n)
                    };
                    assert!(!holds, "descent witness in {} does not replay", check.id);
                    replayed += 1;
                }
                CheckWitness::PreimageComponent {
                    modulus,
                    quotient_ideal,
                    grade,
                    preimage_of_component,
                    component_of_preimage,
                } => {
                    let gn = &entry(&d.structure).structure;
                    let order = gn.ring().order();
                    let q = certify_ideal(
                        gn.ring(),
                        SubsetMask::from_indices(order, modulus.iter().copied()).unwrap(),
                    )
                    .unwrap();
                    let qs = quotient(gn, &q, BUDGET).unwrap();
                    let v = qs
                        .preimage_component_violations
                        .iter()
                        .find(|v| {
                            v.quotient_ideal.indices() == *quotient_ideal && v.grade == *grade
                        })
                        .expect("recorded violation reproduces");
                    assert_eq!(v.preimage_of_component.indices(), *preimage_of_component);
                    assert_eq!(v.component_of_preimage.indices(), *component_of_preimage);
                    replayed += 1;
                }
                // remaining kinds only appear for genuine violations of
                // checks that pass on this corpus
                _ => {}
            }
        }
    }
    assert!(replayed >= 5, "only {replayed} witnesses replayed");
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let one = serde_json::to_string_pretty(&run_all(builtin_corpus(), BUDGET, 1).unwrap()).unwrap();
    let four =
        serde_json::to_string_pretty(&run_all(builtin_corpus(), BUDGET, 4).unwrap()).unwrap();
    let again =
        serde_json::to_string_pretty(&run_all(builtin_corpus(), BUDGET, 1).unwrap()).unwrap();
    assert_eq!(one, four);
    assert_eq!(one, again);
}

#[test]
fn trivial_structure_is_mostly_not_applicable() {
    let report = run_all(vec![corpus_entry("z1").unwrap()], BUDGET, 1).unwrap();
    assert!(!report.has_violation());
    let na = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::NotApplicable)
        .count();
    assert!(na >= report.checks.len() - 2, "{na} not-applicable");
}

#[test]
fn single_checks_run_by_id() {
    let ctx = CheckContext::new(vec![corpus_entry("z2xz2").unwrap()], BUDGET).unwrap();
    let check = run_check("2.21", &ctx).unwrap();
    assert_eq!(check.status, CheckStatus::Pass);
    assert!(check.details[0].note.contains("rejected"));

    let err = run_check("9.99", &ctx).unwrap_err();
    assert!(matches!(err, HarnessError::UnknownTheoremId { .. }));
}

#[test]
fn registry_lists_every_encoding_once() {
    let ids = theorem_ids();
    assert_eq!(ids.len(), 22);
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 22);
}

#[test]
fn gauss3_is_not_applicable_for_the_two_analog() {
    let report = run_all(vec![corpus_entry("gauss3").unwrap()], BUDGET, 1).unwrap();
    let check = report.checks.iter().find(|c| c.id == "2.7-analog").unwrap();
    // 2 is a unit mod 3, so the analog ideal is improper there
    assert_eq!(check.status, CheckStatus::NotApplicable);
    assert!(check.details[0].note.contains("unit"));
}
