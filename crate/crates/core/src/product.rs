//! Direct products of graded near-rings with the componentwise grading
//! `(N x M)_g = N_g x M_g`, plus product/split helpers for ideals.

use thiserror::Error;

use crate::grading::{GradedNearRing, GradingError};
use crate::ideals::{certify_ideal, Ideal, IdealDefect};
use crate::mask::{SubsetMask, MAX_CARRIER};
use crate::near_ring::{validate_near_ring, FiniteNearRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("factors are graded over different monoids")]
    GradeMonoidMismatch,
    #[error("product order {order} exceeds the supported maximum of {MAX_CARRIER}")]
    OrderCapExceeded { order: usize },
    #[error("componentwise grading of the product failed to validate: {0}")]
    Grading(GradingError),
}

/// Pair encoding: `(a, b)` becomes `a * right_order + b`.
pub fn pair_index(right_order: usize, a: usize, b: usize) -> usize {
    a * right_order + b
}

/// Cartesian product of two subsets inside the pair encoding.
pub fn product_mask(
    left_order: usize,
    right_order: usize,
    a: SubsetMask,
    b: SubsetMask,
) -> SubsetMask {
    let mut out = SubsetMask::empty(left_order * right_order);
    for x in a.iter() {
        for y in b.iter() {
            out.insert(pair_index(right_order, x, y));
        }
    }
    out
}

/// Decompose a subset of a product carrier into factor projections, if the
/// subset is exactly the cartesian product of its projections.
pub fn split_mask(
    left_order: usize,
    right_order: usize,
    m: SubsetMask,
) -> Option<(SubsetMask, SubsetMask)> {
    let mut left = SubsetMask::empty(left_order);
    let mut right = SubsetMask::empty(right_order);
    for e in m.iter() {
        left.insert(e / right_order);
        right.insert(e % right_order);
    }
    if product_mask(left_order, right_order, left, right) == m {
        Some((left, right))
    } else {
        None
    }
}

/// Componentwise direct product. Both factors must share the grade monoid
/// and the product order must fit the carrier cap.
pub fn direct_product(
    left: &GradedNearRing,
    right: &GradedNearRing,
) -> Result<GradedNearRing, ProductError> {
    if left.monoid() != right.monoid() {
        return Err(ProductError::GradeMonoidMismatch);
    }
    let (n1, n2) = (left.ring(), right.ring());
    let order = n1.order().saturating_mul(n2.order());
    if order > MAX_CARRIER {
        return Err(ProductError::OrderCapExceeded { order });
    }
    let ro = n2.order();
    let table = |f: &dyn Fn(usize, usize, usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..order)
            .map(|x| {
                (0..order)
                    .map(|y| f(x / ro, x % ro, y / ro, y % ro))
                    .collect()
            })
            .collect()
    };
    let add = table(&|a, b, c, d| pair_index(ro, n1.add(a, c), n2.add(b, d)));
    let mul = table(&|a, b, c, d| pair_index(ro, n1.mul(a, c), n2.mul(b, d)));
    let ring = validate_near_ring(order, add, mul)
        .expect("componentwise operations on near-rings form a near-ring");
    let components = (0..left.grade_count())
        .map(|g| {
            product_mask(
                n1.order(),
                ro,
                left.component_mask(g),
                right.component_mask(g),
            )
        })
        .collect();
    GradedNearRing::new(ring, left.monoid().clone(), components).map_err(ProductError::Grading)
}

/// Cartesian product of two factor ideals, certified in the product carrier.
pub fn product_ideal(
    product: &FiniteNearRing,
    right_order: usize,
    i: &Ideal,
    j: &Ideal,
) -> Result<Ideal, IdealDefect> {
    let left_order = product.order() / right_order;
    certify_ideal(
        product,
        product_mask(left_order, right_order, i.members(), j.members()),
    )
}
