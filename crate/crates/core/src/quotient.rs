//! Quotients of graded near-rings by graded ideals, with the induced
//! grading, the canonical projection, and correspondence diagnostics.

use thiserror::Error;

use crate::grading::{GradedNearRing, GradingError};
use crate::hom::{validate_hom, NearRingHom};
use crate::ideals::{enumerate_ideals, EnumerationError, Ideal};
use crate::mask::SubsetMask;
use crate::near_ring::validate_near_ring;

/// A quotient that failed the preimage component identity
/// `pi^{-1}(J ∩ (N/Q)_g) = pi^{-1}(J) ∩ N_g` for some quotient ideal J and
/// grade g. The identity is checked, not assumed: it genuinely fails
/// whenever the modulus is not contained in the grade-g component, so
/// violations are recorded rather than treated as errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageComponentViolation {
    pub quotient_ideal: SubsetMask,
    pub grade: usize,
    pub preimage_of_component: SubsetMask,
    pub component_of_preimage: SubsetMask,
}

#[derive(Clone, Debug)]
pub struct QuotientStructure {
    pub modulus: Ideal,
    /// coset_of[x] is the quotient index of element x.
    pub coset_of: Vec<usize>,
    /// Smallest member of each coset, indexed by quotient element.
    pub representatives: Vec<usize>,
    /// Coset blocks as subsets of the base carrier.
    pub cosets: Vec<SubsetMask>,
    pub projection: NearRingHom,
    pub quotient: GradedNearRing,
    pub preimage_component_violations: Vec<PreimageComponentViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("modulus is the whole carrier; quotients need a proper ideal")]
    NotProper,
    #[error("modulus is not a graded ideal")]
    NotGraded,
    #[error("operations are not well defined on cosets at ({a}, {b})")]
    NotWellDefined { a: usize, b: usize },
    #[error("induced grading of the quotient is invalid: {0}")]
    GradingInvalid(GradingError),
    #[error(transparent)]
    Enumeration(EnumerationError),
}

/// Build `N/Q` for a proper graded ideal `Q`: cosets of the additive
/// subgroup, operations through representatives (well-definedness checked on
/// every pair), the induced grading `(N/Q)_g = pi(N_g)` validated, and the
/// projection certified with kernel `Q`.
pub fn quotient(
    gn: &GradedNearRing,
    q: &Ideal,
    budget: usize,
) -> Result<QuotientStructure, QuotientError> {
    if !q.is_proper() {
        return Err(QuotientError::NotProper);
    }
    if !gn.is_graded_ideal(q) {
        return Err(QuotientError::NotGraded);
    }
    let nr = gn.ring();
    let order = nr.order();

    let mut coset_of = vec![usize::MAX; order];
    let mut representatives = Vec::new();
    let mut cosets = Vec::new();
    for a in 0..order {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let mut block = SubsetMask::empty(order);
        for e in q.members().iter() {
            block.insert(nr.add(a, e));
        }
        let idx = representatives.len();
        for m in block.iter() {
            coset_of[m] = idx;
        }
        representatives.push(a);
        cosets.push(block);
    }
    let k = representatives.len();

    let qadd: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| coset_of[nr.add(representatives[i], representatives[j])])
                .collect()
        })
        .collect();
    let qmul: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| coset_of[nr.mul(representatives[i], representatives[j])])
                .collect()
        })
        .collect();
    for a in 0..order {
        for b in 0..order {
            if coset_of[nr.add(a, b)] != qadd[coset_of[a]][coset_of[b]]
                || coset_of[nr.mul(a, b)] != qmul[coset_of[a]][coset_of[b]]
            {
                return Err(QuotientError::NotWellDefined { a, b });
            }
        }
    }
    let qring = validate_near_ring(k, qadd, qmul)
        .expect("coset tables of a certified ideal form a near-ring");

    let induced: Vec<SubsetMask> = gn
        .grading()
        .components()
        .iter()
        .map(|c| {
            let mut m = SubsetMask::empty(k);
            for e in c.iter() {
                m.insert(coset_of[e]);
            }
            m
        })
        .collect();
    let quotient_gn = GradedNearRing::new(qring, gn.monoid().clone(), induced)
        .map_err(QuotientError::GradingInvalid)?;

    let projection = validate_hom(nr, quotient_gn.ring(), coset_of.clone())
        .expect("the canonical projection is a homomorphism");
    debug_assert_eq!(projection.kernel(), q);

    // Preimage component identity, checked for every ideal of the quotient.
    let mut violations = Vec::new();
    for j in enumerate_ideals(quotient_gn.ring(), budget).map_err(QuotientError::Enumeration)? {
        for g in 0..gn.grade_count() {
            let preimage_of_component =
                projection.preimage_mask(quotient_gn.component(j.members(), g));
            let component_of_preimage = gn
                .grading()
                .component(projection.preimage_mask(j.members()), g);
            if preimage_of_component != component_of_preimage {
                violations.push(PreimageComponentViolation {
                    quotient_ideal: j.members(),
                    grade: g,
                    preimage_of_component,
                    component_of_preimage,
                });
            }
        }
    }

    Ok(QuotientStructure {
        modulus: q.clone(),
        coset_of,
        representatives,
        cosets,
        projection,
        quotient: quotient_gn,
        preimage_component_violations: violations,
    })
}
