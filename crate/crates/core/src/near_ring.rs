//! Finite right near-rings as validated operation tables.
//!
//! A right near-ring is a (not necessarily abelian) additive group with an
//! associative multiplication that distributes over addition from the right:
//! `(a + b) * c = a*c + b*c`. Nothing is assumed about `a * (b + c)`.

use thiserror::Error;

use crate::mask::{SubsetMask, MAX_CARRIER};
use crate::monoid::check_table;

/// A certified finite near-ring. `zero`, `neg` and `one` are computed during
/// validation, not trusted from the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteNearRing {
    order: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    neg: Vec<usize>,
    one: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupDefect {
    #[error("addition is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no additive identity exists")]
    NoIdentity,
    #[error("element {element} has no additive inverse")]
    NoInverse { element: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NearRingError {
    #[error("malformed table: {reason}")]
    Malformed { reason: String },
    #[error("carrier order {order} exceeds the supported maximum of {MAX_CARRIER}")]
    TooLarge { order: usize },
    #[error("addition does not form a group: {0}")]
    AddNotGroup(GroupDefect),
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    MulNotAssociative { a: usize, b: usize, c: usize },
    #[error("right distributivity fails at ({a}, {b}, {c}): (a+b)c != ac + bc")]
    NotRightDistributive { a: usize, b: usize, c: usize },
}

/// Certify a pair of tables as a near-ring. Errors carry a witness.
pub fn validate_near_ring(
    order: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
) -> Result<FiniteNearRing, NearRingError> {
    if order == 0 {
        return Err(NearRingError::Malformed {
            reason: "order must be positive".into(),
        });
    }
    if order > MAX_CARRIER {
        return Err(NearRingError::TooLarge { order });
    }
    check_table(order, &add, "add").map_err(|reason| NearRingError::Malformed { reason })?;
    check_table(order, &mul, "mul").map_err(|reason| NearRingError::Malformed { reason })?;

    for a in 0..order {
        for b in 0..order {
            for c in 0..order {
                if add[add[a][b]][c] != add[a][add[b][c]] {
                    return Err(NearRingError::AddNotGroup(GroupDefect::NotAssociative {
                        a,
                        b,
                        c,
                    }));
                }
            }
        }
    }
    let zero = (0..order)
        .find(|&e| (0..order).all(|a| add[e][a] == a && add[a][e] == a))
        .ok_or(NearRingError::AddNotGroup(GroupDefect::NoIdentity))?;
    let mut neg = Vec::with_capacity(order);
    for a in 0..order {
        let inv = (0..order)
            .find(|&b| add[a][b] == zero && add[b][a] == zero)
            .ok_or(NearRingError::AddNotGroup(GroupDefect::NoInverse {
                element: a,
            }))?;
        neg.push(inv);
    }
    for a in 0..order {
        for b in 0..order {
            for c in 0..order {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Err(NearRingError::MulNotAssociative { a, b, c });
                }
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]] {
                    return Err(NearRingError::NotRightDistributive { a, b, c });
                }
            }
        }
    }
    // 0*x = 0 is forced by right distributivity plus cancellation.
    debug_assert!((0..order).all(|x| mul[zero][x] == zero));

    let one = (0..order).find(|&e| (0..order).all(|a| mul[e][a] == a && mul[a][e] == a));
    Ok(FiniteNearRing {
        order,
        add,
        mul,
        zero,
        neg,
        one,
    })
}

/// Ring-ness report: both witnesses absent means the near-ring is an actual
/// ring. Purely informational; nothing in the crate assumes either property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDiagnostic {
    pub nonabelian_witness: Option<(usize, usize)>,
    pub left_distributivity_witness: Option<(usize, usize, usize)>,
}

impl RingDiagnostic {
    pub fn is_ring(&self) -> bool {
        self.nonabelian_witness.is_none() && self.left_distributivity_witness.is_none()
    }
}

impl FiniteNearRing {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    /// Fold addition left-to-right; the empty sum is zero.
    pub fn sum_over<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.zero, |acc, x| self.add(acc, x))
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn zero_mask(&self) -> SubsetMask {
        SubsetMask::singleton(self.order, self.zero)
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.order)
    }

    pub fn ring_diagnostic(&self) -> RingDiagnostic {
        let mut nonabelian_witness = None;
        'ab: for a in 0..self.order {
            for b in 0..self.order {
                if self.add(a, b) != self.add(b, a) {
                    nonabelian_witness = Some((a, b));
                    break 'ab;
                }
            }
        }
        let mut left_distributivity_witness = None;
        'ld: for a in 0..self.order {
            for b in 0..self.order {
                for c in 0..self.order {
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        left_distributivity_witness = Some((a, b, c));
                        break 'ld;
                    }
                }
            }
        }
        RingDiagnostic {
            nonabelian_witness,
            left_distributivity_witness,
        }
    }

    /// Relabel so that zero sits at index 0. Returns the relabeled structure
    /// and the permutation mapping old indices to new ones.
    pub fn with_zero_first(&self) -> (FiniteNearRing, Vec<usize>) {
        let mut perm: Vec<usize> = (0..self.order).collect();
        perm.swap(0, self.zero);
        // perm is an involution, so old->new and new->old coincide
        let remap = |t: &[Vec<usize>]| {
            (0..self.order)
                .map(|i| (0..self.order).map(|j| perm[t[perm[i]][perm[j]]]).collect())
                .collect::<Vec<Vec<usize>>>()
        };
        let relabeled = validate_near_ring(self.order, remap(&self.add), remap(&self.mul))
            .expect("relabeling preserves the axioms");
        (relabeled, perm)
    }
}
