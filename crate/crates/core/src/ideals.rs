//! Subset algebra and the ideal engine: normal subgroups, two-sided ideals,
//! closure-based generation, exhaustive enumeration, set products and powers.
//!
//! An ideal of a right near-ring is an additive normal subgroup `I` with
//! `i*n` in `I` and `n*(m+i) - n*m` in `I` for all carrier elements `n, m`
//! and all `i` in `I`.

use std::collections::HashSet;

use thiserror::Error;

use crate::mask::SubsetMask;
use crate::near_ring::FiniteNearRing;

/// Default cap on subgroup-closure computations during enumeration. Corpus
/// structures use a few hundred; elementary-abelian additive groups near the
/// 64-element cap need a few hundred thousand.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 4_000_000;

/// A certified two-sided ideal. Obtainable only through checks or closure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    members: SubsetMask,
}

impl Ideal {
    pub fn members(&self) -> SubsetMask {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.contains(element)
    }

    pub fn is_proper(&self) -> bool {
        self.members != SubsetMask::full(self.members.universe())
    }

    pub fn is_zero_ideal(&self, nr: &FiniteNearRing) -> bool {
        self.members == nr.zero_mask()
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.members.fmt(f)
    }
}

/// First reason a subset fails to be an ideal, if any.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealDefect {
    #[error("subset does not contain zero")]
    MissingZero,
    #[error("subset is not closed under addition: {a} + {b} escapes")]
    AddNotClosed { a: usize, b: usize },
    #[error("subset is not closed under negation: -{a} escapes")]
    NegNotClosed { a: usize },
    #[error("subset is not normal: {n} + {i} - {n} escapes")]
    NotNormal { n: usize, i: usize },
    #[error("right ideal condition fails: {i} * {n} escapes")]
    RightProductEscapes { i: usize, n: usize },
    #[error("left ideal condition fails: {n}*({m}+{i}) - {n}*{m} escapes")]
    LeftTermEscapes { n: usize, m: usize, i: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("ideal enumeration exceeded the budget of {budget} closure computations")]
    BudgetExceeded { budget: usize },
}

/// First defect of `s` as an additive normal subgroup, or `None`.
pub fn normal_subgroup_defect(nr: &FiniteNearRing, s: SubsetMask) -> Option<IdealDefect> {
    if !s.contains(nr.zero()) {
        return Some(IdealDefect::MissingZero);
    }
    for a in s.iter() {
        if !s.contains(nr.neg(a)) {
            return Some(IdealDefect::NegNotClosed { a });
        }
        for b in s.iter() {
            if !s.contains(nr.add(a, b)) {
                return Some(IdealDefect::AddNotClosed { a, b });
            }
        }
    }
    for n in 0..nr.order() {
        for i in s.iter() {
            let conj = nr.add(nr.add(n, i), nr.neg(n));
            if !s.contains(conj) {
                return Some(IdealDefect::NotNormal { n, i });
            }
        }
    }
    None
}

pub fn is_normal_subgroup(nr: &FiniteNearRing, s: SubsetMask) -> bool {
    normal_subgroup_defect(nr, s).is_none()
}

/// First defect of `s` as a two-sided ideal, or `None`.
pub fn ideal_defect(nr: &FiniteNearRing, s: SubsetMask) -> Option<IdealDefect> {
    if let Some(d) = normal_subgroup_defect(nr, s) {
        return Some(d);
    }
    for i in s.iter() {
        for n in 0..nr.order() {
            if !s.contains(nr.mul(i, n)) {
                return Some(IdealDefect::RightProductEscapes { i, n });
            }
        }
    }
    for n in 0..nr.order() {
        for m in 0..nr.order() {
            for i in s.iter() {
                let t = nr.add(nr.mul(n, nr.add(m, i)), nr.neg(nr.mul(n, m)));
                if !s.contains(t) {
                    return Some(IdealDefect::LeftTermEscapes { n, m, i });
                }
            }
        }
    }
    None
}

pub fn is_ideal(nr: &FiniteNearRing, s: SubsetMask) -> bool {
    ideal_defect(nr, s).is_none()
}

pub fn certify_ideal(nr: &FiniteNearRing, s: SubsetMask) -> Result<Ideal, IdealDefect> {
    match ideal_defect(nr, s) {
        None => Ok(Ideal { members: s }),
        Some(d) => Err(d),
    }
}

/// Smallest additive subgroup containing `seed`. In a finite group closure
/// under addition of a zero-containing set already yields inverses.
pub fn subgroup_closure(nr: &FiniteNearRing, seed: SubsetMask) -> SubsetMask {
    let mut s = seed.union(&nr.zero_mask());
    loop {
        let mut t = s;
        for a in s.iter() {
            for b in s.iter() {
                t.insert(nr.add(a, b));
            }
        }
        if t == s {
            return s;
        }
        s = t;
    }
}

/// Least fixed point of the ideal closure rules over `seed`: addition,
/// negation, conjugation, right multiplication, and the left term
/// `n*(m+i) - n*m`.
pub fn ideal_generated_by(nr: &FiniteNearRing, seed: SubsetMask) -> Ideal {
    let order = nr.order();
    let mut s = seed.union(&nr.zero_mask());
    loop {
        let mut t = s;
        for a in s.iter() {
            t.insert(nr.neg(a));
            for b in s.iter() {
                t.insert(nr.add(a, b));
            }
        }
        for n in 0..order {
            for i in s.iter() {
                t.insert(nr.add(nr.add(n, i), nr.neg(n)));
                t.insert(nr.mul(i, n));
                for m in 0..order {
                    t.insert(nr.add(nr.mul(n, nr.add(m, i)), nr.neg(nr.mul(n, m))));
                }
            }
        }
        if t == s {
            debug_assert!(is_ideal(nr, s));
            return Ideal { members: s };
        }
        s = t;
    }
}

/// Ideal sum `I + J`: the ideal generated by the union.
pub fn ideal_sum(nr: &FiniteNearRing, i: &Ideal, j: &Ideal) -> Ideal {
    ideal_generated_by(nr, i.members().union(&j.members()))
}

/// Literal set of pairwise products `{ a*b : a in A, b in B }`. No additive
/// closure is taken; containment in an additive subgroup is unaffected.
pub fn set_product(nr: &FiniteNearRing, a: SubsetMask, b: SubsetMask) -> SubsetMask {
    let mut out = SubsetMask::empty(nr.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(nr.mul(x, y));
        }
    }
    out
}

/// Left-associated iterated set product, `n >= 1`.
pub fn set_power(nr: &FiniteNearRing, a: SubsetMask, n: u32) -> SubsetMask {
    assert!(n >= 1, "set power needs a positive exponent");
    let mut acc = a;
    for _ in 1..n {
        acc = set_product(nr, acc, a);
    }
    acc
}

/// All additive subgroups, found by closure-growing from generator sets:
/// grow each known subgroup by one extra generator, close, deduplicate.
/// Every subgroup is reachable this way. The budget counts closures.
pub fn enumerate_subgroups(
    nr: &FiniteNearRing,
    budget: usize,
) -> Result<Vec<SubsetMask>, EnumerationError> {
    let trivial = nr.zero_mask();
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(trivial.bits());
    let mut out = vec![trivial];
    let mut frontier = vec![trivial];
    let mut closures = 0usize;
    while let Some(s) = frontier.pop() {
        for x in s.complement().iter() {
            closures += 1;
            if closures > budget {
                return Err(EnumerationError::BudgetExceeded { budget });
            }
            let mut seed = s;
            seed.insert(x);
            let t = subgroup_closure(nr, seed);
            if seen.insert(t.bits()) {
                out.push(t);
                frontier.push(t);
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn enumerate_normal_subgroups(
    nr: &FiniteNearRing,
    budget: usize,
) -> Result<Vec<SubsetMask>, EnumerationError> {
    Ok(enumerate_subgroups(nr, budget)?
        .into_iter()
        .filter(|&s| normal_subgroup_defect(nr, s).is_none())
        .collect())
}

/// All two-sided ideals in canonical order: by size, then lexicographically
/// on the ascending index list.
pub fn enumerate_ideals(
    nr: &FiniteNearRing,
    budget: usize,
) -> Result<Vec<Ideal>, EnumerationError> {
    Ok(enumerate_subgroups(nr, budget)?
        .into_iter()
        .filter(|&s| ideal_defect(nr, s).is_none())
        .map(|members| Ideal { members })
        .collect())
}
