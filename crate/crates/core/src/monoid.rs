//! Finite monoids given by operation tables; these index the grades of a
//! grading.

use thiserror::Error;

use crate::mask::MAX_CARRIER;

/// A finite monoid: associative operation table with a two-sided identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    order: usize,
    op: Vec<Vec<usize>>,
    identity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("malformed table: {reason}")]
    Malformed { reason: String },
    #[error("monoid order {order} exceeds the supported maximum of {MAX_CARRIER}")]
    TooLarge { order: usize },
    #[error("operation is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("claimed identity is not neutral on element {element}")]
    BadIdentity { element: usize },
}

/// Check shape and entry bounds of an `order` x `order` table.
pub(crate) fn check_table(order: usize, table: &[Vec<usize>], name: &str) -> Result<(), String> {
    if table.len() != order {
        return Err(format!(
            "{name} table has {} rows, expected {order}",
            table.len()
        ));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != order {
            return Err(format!(
                "{name} table row {i} has {} entries, expected {order}",
                row.len()
            ));
        }
        for (j, &e) in row.iter().enumerate() {
            if e >= order {
                return Err(format!("{name} table entry ({i}, {j}) = {e} >= {order}"));
            }
        }
    }
    Ok(())
}

/// Certify an operation table as a monoid. The error carries a witness
/// triple or element.
pub fn validate_monoid(
    order: usize,
    op: Vec<Vec<usize>>,
    identity: usize,
) -> Result<FiniteMonoid, MonoidError> {
    if order == 0 {
        return Err(MonoidError::Malformed {
            reason: "order must be positive".into(),
        });
    }
    if order > MAX_CARRIER {
        return Err(MonoidError::TooLarge { order });
    }
    check_table(order, &op, "op").map_err(|reason| MonoidError::Malformed { reason })?;
    if identity >= order {
        return Err(MonoidError::Malformed {
            reason: format!("identity {identity} >= {order}"),
        });
    }
    for a in 0..order {
        if op[identity][a] != a || op[a][identity] != a {
            return Err(MonoidError::BadIdentity { element: a });
        }
    }
    for a in 0..order {
        for b in 0..order {
            for c in 0..order {
                if op[op[a][b]][c] != op[a][op[b][c]] {
                    return Err(MonoidError::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(FiniteMonoid {
        order,
        op,
        identity,
    })
}

impl FiniteMonoid {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a][b]
    }

    /// `g` composed with itself `n` times, `n >= 1`.
    pub fn pow(&self, g: usize, n: u32) -> usize {
        assert!(n >= 1, "monoid power needs a positive exponent");
        let mut acc = g;
        for _ in 1..n {
            acc = self.op(acc, g);
        }
        acc
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.op
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        validate_monoid(1, vec![vec![0]], 0).expect("trivial monoid is valid")
    }

    /// `({0,1}, or)` with identity 0; 1 is absorbing.
    pub fn boolean_or() -> Self {
        validate_monoid(2, vec![vec![0, 1], vec![1, 1]], 0).expect("or-monoid is valid")
    }

    /// `({0,1}, and)` with identity 1; 0 is absorbing.
    pub fn boolean_and() -> Self {
        validate_monoid(2, vec![vec![0, 0], vec![0, 1]], 1).expect("and-monoid is valid")
    }

    /// Cyclic group of order `n` viewed as a monoid.
    pub fn cyclic(n: usize) -> Self {
        let op = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        validate_monoid(n, op, 0).expect("cyclic group table is valid")
    }
}
