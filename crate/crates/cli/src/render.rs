//! Human-readable rendering of subsets, witnesses and harness reports.

use nearring_core::harness::{CheckWitness, HarnessReport, TheoremCheck};
use nearring_core::primality::PrimalityWitness;

/// Format an index list like `{0, 2, 4}`; when labels are present and carry
/// more than the bare indices, append them.
pub fn render_set(indices: &[usize], labels: Option<&Vec<String>>) -> String {
    let plain = format!(
        "{{{}}}",
        indices
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    match labels {
        Some(l) if indices.iter().any(|&i| l[i] != i.to_string()) => {
            let named = indices
                .iter()
                .map(|&i| l[i].clone())
                .collect::<Vec<_>>()
                .join(", ");
            format!("{plain} [{named}]")
        }
        _ => plain,
    }
}

pub fn render_primality_witness(w: &PrimalityWitness, labels: Option<&Vec<String>>) -> String {
    let set = |idx: &[usize]| render_set(idx, labels);
    let el = |i: usize| match labels {
        Some(l) if l[i] != i.to_string() => format!("{i} [{}]", l[i]),
        _ => i.to_string(),
    };
    match w {
        PrimalityWitness::IdealPair {
            left,
            right,
            left_grade,
            right_grade,
        } => format!(
            "A={} B={} g={left_grade} h={right_grade}",
            set(left),
            set(right)
        ),
        PrimalityWitness::HomogeneousPair {
            left_generator,
            right_generator,
            left_ideal,
            right_ideal,
            left_grade,
            right_grade,
        } => format!(
            "i={} j={} <i>={} <j>={} g={left_grade} h={right_grade}",
            el(*left_generator),
            el(*right_generator),
            set(left_ideal),
            set(right_ideal)
        ),
        PrimalityWitness::ScaledSum {
            scalar,
            scalar_grade,
            first,
            second,
            generator_grade,
        } => format!(
            "a={} b={} c={} h={scalar_grade} g={generator_grade}",
            el(*scalar),
            el(*first),
            el(*second)
        ),
        PrimalityWitness::ColonSet {
            element,
            partner,
            generator_grade,
            result_grade,
            colon,
            expected,
        } => format!(
            "x={} y={} g={generator_grade} h={result_grade} colon={} expected={}",
            el(*element),
            el(*partner),
            set(colon),
            set(expected)
        ),
        PrimalityWitness::QuotientZeroProduct {
            left,
            right,
            left_grade,
            right_grade,
        } => format!(
            "A={} B={} g={left_grade} h={right_grade} (zero product in the quotient)",
            set(left),
            set(right)
        ),
        PrimalityWitness::ClassicalPair { left, right } => {
            format!("A={} B={}", set(left), set(right))
        }
    }
}

fn render_check_witness(w: &CheckWitness) -> String {
    match w {
        CheckWitness::Primality { ideal, report } => format!(
            "ideal {} verdict {} ({}){}",
            render_set(ideal, None),
            report.verdict,
            report.checker,
            report
                .witness
                .as_ref()
                .map(|pw| format!("; {}", render_primality_witness(pw, None)))
                .unwrap_or_default()
        ),
        CheckWitness::Disagreement { ideal, verdicts } => format!(
            "ideal {}: {}",
            render_set(ideal, None),
            verdicts
                .iter()
                .map(|(id, v)| format!("{id}={v}"))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        CheckWitness::PreimageComponent {
            modulus,
            quotient_ideal,
            grade,
            preimage_of_component,
            component_of_preimage,
        } => format!(
            "mod {} ideal {} grade {grade}: preimage-of-slice {} vs slice-of-preimage {}",
            render_set(modulus, None),
            render_set(quotient_ideal, None),
            render_set(preimage_of_component, None),
            render_set(component_of_preimage, None)
        ),
        CheckWitness::PowerDescent {
            p,
            j,
            n,
            componentwise,
        } => format!(
            "P={} J={} n={n}{}",
            render_set(p, None),
            render_set(j, None),
            if *componentwise { " (componentwise)" } else { "" }
        ),
        CheckWitness::QuotientMismatch {
            modulus,
            ideal,
            base_verdict,
            quotient_verdict,
        } => format!(
            "mod {} ideal {}: base {base_verdict}, quotient {quotient_verdict}",
            render_set(modulus, None),
            render_set(ideal, None)
        ),
        CheckWitness::Unclassified { ideal } => {
            format!("ideal {}", render_set(ideal, None))
        }
        CheckWitness::Unfactored { ideal, max_length } => format!(
            "ideal {} (length bound {max_length})",
            render_set(ideal, None)
        ),
        CheckWitness::MaximalNotCovered {
            ideal,
            carrier_squared,
        } => format!(
            "ideal {} does not contain N*N = {}",
            render_set(ideal, None),
            render_set(carrier_squared, None)
        ),
        CheckWitness::Expectation { description } => description.clone(),
    }
}

pub fn render_check_table(check: &TheoremCheck) -> String {
    let mut out = format!("{:<12} {:<17} {}\n", check.id, check.status.label(), check.title);
    for d in &check.details {
        out.push_str(&format!(
            "  {:<18} {:<17} {}\n",
            d.structure,
            d.status.label(),
            d.note
        ));
        if let Some(w) = &d.witness {
            out.push_str(&format!("    witness: {}\n", render_check_witness(w)));
        }
    }
    out
}

pub fn render_report_table(report: &HarnessReport) -> String {
    let mut out = String::new();
    for check in &report.checks {
        out.push_str(&render_check_table(check));
    }
    out.push_str(&format!(
        "summary: {} pass, {} fail-as-expected, {} violation(s), {} not applicable\n",
        report.summary.pass,
        report.summary.fail_as_expected,
        report.summary.violation,
        report.summary.not_applicable
    ));
    out
}

/// Canonical machine report: every witness needed to replay a verdict.
pub fn report_json(report: &HarnessReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports always serialize");
    out.push('\n');
    out
}

pub fn check_json(check: &TheoremCheck) -> String {
    let mut out = serde_json::to_string_pretty(check).expect("checks always serialize");
    out.push('\n');
    out
}
