//! Built-in validated example structures.
//!
//! Every entry is constructed from scratch and passes full validation at
//! build time. Entry names are stable public identifiers used by the CLI.
//! Infinite classical examples are represented by clearly-labeled finite
//! analogs; nothing proved about an infinite structure is assumed for its
//! analog without being re-derived here at finite scale.

use thiserror::Error;

use crate::grading::GradedNearRing;
use crate::mask::{SubsetMask, MAX_CARRIER};
use crate::monoid::FiniteMonoid;
use crate::near_ring::{validate_near_ring, FiniteNearRing};
use crate::product::direct_product;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub structure: GradedNearRing,
    pub notes: String,
    pub labels: Vec<String>,
    /// Set when the entry is a componentwise direct product of two other
    /// entries; used by the product-shaped theorem checks.
    pub product_of: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("carrier order {order} exceeds the supported maximum of {MAX_CARRIER}")]
    OrderCapExceeded { order: usize },
    #[error("map near-rings are built over base groups of order 2 or 3, got {order}")]
    UnsupportedBaseOrder { order: usize },
}

/// Grading shape for the parametric builders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradingChoice {
    /// One grade; the whole carrier sits at the identity.
    Trivial,
    /// Two grades over the or-monoid.
    Or,
}

fn cyclic_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let add = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let mul = (0..n)
        .map(|a| (0..n).map(|b| (a * b) % n).collect())
        .collect();
    (add, mul)
}

fn trivial_grading(ring: FiniteNearRing) -> GradedNearRing {
    let full = SubsetMask::full(ring.order());
    GradedNearRing::new(ring, FiniteMonoid::trivial(), vec![full])
        .expect("trivial grading always validates")
}

/// Z_n as a near-ring. The or-grading puts the carrier at the identity
/// grade and {0} at the absorbing grade, which is multiplicative because
/// x*0 = 0 holds in a ring.
pub fn cyclic_graded(n: usize, choice: GradingChoice) -> Result<CorpusEntry, CorpusError> {
    if n > MAX_CARRIER {
        return Err(CorpusError::OrderCapExceeded { order: n });
    }
    let (add, mul) = cyclic_tables(n);
    let ring = validate_near_ring(n, add, mul).expect("Z_n is a near-ring");
    let (structure, name) = match choice {
        GradingChoice::Trivial => (trivial_grading(ring), format!("z{n}")),
        GradingChoice::Or => {
            let full = SubsetMask::full(n);
            let zero = SubsetMask::singleton(n, 0);
            (
                GradedNearRing::new(ring, FiniteMonoid::boolean_or(), vec![full, zero])
                    .expect("or-grading of Z_n validates"),
                format!("z{n}-or"),
            )
        }
    };
    Ok(CorpusEntry {
        name,
        notes: format!("cyclic ring of order {n}"),
        labels: (0..n).map(|i| i.to_string()).collect(),
        product_of: None,
        structure,
    })
}

fn map_tables(k: usize) -> (usize, Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let order = k.pow(k as u32);
    let val = |f: usize, x: usize| {
        // digits of f in base k, most significant digit = f(0)
        (f / k.pow((k - 1 - x) as u32)) % k
    };
    let enc = |values: &[usize]| values.iter().fold(0, |acc, &v| acc * k + v);
    let add = (0..order)
        .map(|f| {
            (0..order)
                .map(|g| {
                    let vals: Vec<usize> = (0..k).map(|x| (val(f, x) + val(g, x)) % k).collect();
                    enc(&vals)
                })
                .collect()
        })
        .collect();
    let mul = (0..order)
        .map(|f| {
            (0..order)
                .map(|g| {
                    let vals: Vec<usize> = (0..k).map(|x| val(f, val(g, x))).collect();
                    enc(&vals)
                })
                .collect()
        })
        .collect();
    (order, add, mul)
}

/// M(Z_k): all self-maps of the cyclic group of order k under pointwise
/// addition and composition. Left distributivity genuinely fails; the first
/// witness triple is recorded in the notes. The or-graded variant must put
/// the carrier at the absorbing grade: f composed with the zero map is the
/// constant f(0), so N_0 = M, N_1 = {0} would not be multiplicative.
pub fn map_near_ring(base_order: usize, choice: GradingChoice) -> Result<CorpusEntry, CorpusError> {
    if base_order != 2 && base_order != 3 {
        return Err(CorpusError::UnsupportedBaseOrder { order: base_order });
    }
    let (order, add, mul) = map_tables(base_order);
    let ring = validate_near_ring(order, add, mul).expect("M(G) is a near-ring");
    let diag = ring.ring_diagnostic();
    let (a, b, c) = diag
        .left_distributivity_witness
        .expect("composition is not left distributive over pointwise addition");
    let notes = format!(
        "self-maps of the cyclic group of order {base_order} under pointwise addition \
         and composition; not a ring: a*(b+c) != a*b + a*c at (a, b, c) = ({a}, {b}, {c})"
    );
    let labels: Vec<String> = (0..order)
        .map(|f| {
            let digits: String = (0..base_order)
                .map(|x| {
                    let v = (f / base_order.pow((base_order - 1 - x) as u32)) % base_order;
                    char::from_digit(v as u32, 10).unwrap()
                })
                .collect();
            format!("f{digits}")
        })
        .collect();
    let (structure, name) = match choice {
        GradingChoice::Trivial => (trivial_grading(ring), format!("mz{base_order}")),
        GradingChoice::Or => {
            let zero = SubsetMask::singleton(order, 0);
            let full = SubsetMask::full(order);
            (
                GradedNearRing::new(ring, FiniteMonoid::boolean_or(), vec![zero, full])
                    .expect("or-grading with the carrier at the absorbing grade validates"),
                format!("mz{base_order}-or"),
            )
        }
    };
    Ok(CorpusEntry {
        name,
        structure,
        notes,
        labels,
        product_of: None,
    })
}

fn gauss_label(a: usize, b: usize) -> String {
    match (a, b) {
        (0, 0) => "0".to_string(),
        (a, 0) => a.to_string(),
        (0, 1) => "i".to_string(),
        (0, b) => format!("{b}i"),
        (a, 1) => format!("{a}+i"),
        (a, b) => format!("{a}+{b}i"),
    }
}

/// Z[i]/(n): Gaussian residues with element index `a*n + b` for `a + bi`.
/// Finite analog of the infinite Gaussian integer ring; graded over the
/// two-element group with real residues at the identity grade and imaginary
/// residues at the other (i*i lands back among the reals, so the grade
/// monoid must be the group, not a monoid with an absorbing grade).
pub fn gaussian_mod(n: usize) -> Result<CorpusEntry, CorpusError> {
    let order = n * n;
    if order > MAX_CARRIER {
        return Err(CorpusError::OrderCapExceeded { order });
    }
    let m = n as i64;
    let enc = |a: i64, b: i64| (a.rem_euclid(m) * m + b.rem_euclid(m)) as usize;
    let parts = |x: usize| ((x / n) as i64, (x % n) as i64);
    let add = (0..order)
        .map(|x| {
            (0..order)
                .map(|y| {
                    let ((a, b), (c, d)) = (parts(x), parts(y));
                    enc(a + c, b + d)
                })
                .collect()
        })
        .collect();
    let mul = (0..order)
        .map(|x| {
            (0..order)
                .map(|y| {
                    let ((a, b), (c, d)) = (parts(x), parts(y));
                    enc(a * c - b * d, a * d + b * c)
                })
                .collect()
        })
        .collect();
    let ring = validate_near_ring(order, add, mul).expect("Z[i]/(n) is a near-ring");
    let reals = SubsetMask::from_indices(order, (0..n).map(|a| a * n)).unwrap();
    let imags = SubsetMask::from_indices(order, 0..n).unwrap();
    let structure = GradedNearRing::new(ring, FiniteMonoid::cyclic(2), vec![reals, imags])
        .expect("real/imaginary grading of Z[i]/(n) validates");
    Ok(CorpusEntry {
        name: format!("gauss{n}"),
        structure,
        notes: format!(
            "Gaussian residues Z[i]/({n}); finite analog of the infinite Gaussian \
             integer ring, graded by real/imaginary parts over the two-element group"
        ),
        labels: (0..order).map(|x| gauss_label(x / n, x % n)).collect(),
        product_of: None,
    })
}

/// Z2 graded over the and-monoid: carrier at the identity grade, {0} at the
/// absorbing grade.
pub fn z2_multiplicative() -> CorpusEntry {
    let (add, mul) = cyclic_tables(2);
    let ring = validate_near_ring(2, add, mul).expect("Z2 is a near-ring");
    let structure = GradedNearRing::new(
        ring,
        FiniteMonoid::boolean_and(),
        vec![SubsetMask::singleton(2, 0), SubsetMask::full(2)],
    )
    .expect("and-monoid grading of Z2 validates");
    CorpusEntry {
        name: "z2-mult".into(),
        structure,
        notes: "Z2 graded over the and-monoid: N at the identity grade, {0} at the \
                absorbing grade"
            .into(),
        labels: vec!["0".into(), "1".into()],
        product_of: None,
    }
}

fn pair_labels(left: &CorpusEntry, right: &CorpusEntry) -> Vec<String> {
    let mut out = Vec::with_capacity(left.labels.len() * right.labels.len());
    for l in &left.labels {
        for r in &right.labels {
            out.push(format!("({l},{r})"));
        }
    }
    out
}

/// Z2 x Z2 with the componentwise and-monoid grading.
pub fn z2_product() -> CorpusEntry {
    let factor = z2_multiplicative();
    let structure = direct_product(&factor.structure, &factor.structure)
        .expect("Z2 x Z2 fits the carrier cap");
    CorpusEntry {
        name: "z2xz2".into(),
        structure,
        notes: "componentwise product of two copies of z2-mult".into(),
        labels: pair_labels(&factor, &factor),
        product_of: Some(("z2-mult".into(), "z2-mult".into())),
    }
}

/// Componentwise product of two or-graded cyclic rings.
pub fn cyclic_or_product(n: usize, m: usize) -> Result<CorpusEntry, CorpusError> {
    let left = cyclic_graded(n, GradingChoice::Or)?;
    let right = cyclic_graded(m, GradingChoice::Or)?;
    let structure = direct_product(&left.structure, &right.structure).map_err(|_| {
        CorpusError::OrderCapExceeded { order: n * m }
    })?;
    Ok(CorpusEntry {
        name: format!("z{n}xz{m}"),
        structure,
        notes: format!("componentwise product of z{n}-or and z{m}-or"),
        labels: pair_labels(&left, &right),
        product_of: Some((left.name, right.name)),
    })
}

/// All built-in entries in registry order. Construction is cheap enough to
/// rebuild on every call, which keeps the registry free of global state.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    vec![
        cyclic_graded(1, GradingChoice::Trivial).unwrap(),
        cyclic_graded(2, GradingChoice::Or).unwrap(),
        z2_multiplicative(),
        cyclic_graded(6, GradingChoice::Or).unwrap(),
        cyclic_graded(8, GradingChoice::Or).unwrap(),
        map_near_ring(2, GradingChoice::Trivial).unwrap(),
        map_near_ring(2, GradingChoice::Or).unwrap(),
        map_near_ring(3, GradingChoice::Trivial).unwrap(),
        map_near_ring(3, GradingChoice::Or).unwrap(),
        gaussian_mod(2).unwrap(),
        gaussian_mod(3).unwrap(),
        gaussian_mod(4).unwrap(),
        z2_product(),
        cyclic_or_product(6, 2).unwrap(),
    ]
}

pub fn corpus_names() -> Vec<String> {
    builtin_corpus().into_iter().map(|e| e.name).collect()
}

pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    builtin_corpus().into_iter().find(|e| e.name == name)
}
