use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// Monomial orders.
///
/// Every order except `Lex` ends with a graded reverse lexicographic
/// tie-break, so all of them are multiplicative well-orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Total degree in the first `k` variables first, then grevlex. Any
    /// monomial involving one of the first `k` variables is larger than every
    /// monomial free of them.
    BlockElimination(usize),
    /// Compare weight rows in sequence, then grevlex.
    Weighted(Vec<Vec<u32>>),
}

#[inline]
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    let (ea, eb) = (a.exponents(), b.exponents());
    for i in (0..ea.len().max(eb.len())).rev() {
        let (x, y) = (a.exponent(i), b.exponent(i));
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Single weight vector followed by grevlex.
    pub fn weighted(weights: Vec<u32>) -> Self {
        MonomialOrder::Weighted(vec![weights])
    }

    /// Order that eliminates the variables flagged in `block`.
    pub fn eliminating(nvars: usize, block: &[usize]) -> Self {
        let mut w = vec![0; nvars];
        for &i in block {
            w[i] = 1;
        }
        MonomialOrder::Weighted(vec![w])
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => {
                for i in 0..a.nvars().max(b.nvars()) {
                    let (x, y) = (a.exponent(i), b.exponent(i));
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::BlockElimination(k) => {
                let da: u32 = (0..*k).map(|i| a.exponent(i)).sum();
                let db: u32 = (0..*k).map(|i| b.exponent(i)).sum();
                da.cmp(&db).then_with(|| grevlex(a, b))
            }
            MonomialOrder::Weighted(rows) => {
                for w in rows {
                    match a.weighted_degree(w).cmp(&b.weighted_degree(w)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                grevlex(a, b)
            }
        }
    }

    /// Checked comparison that rejects monomials over different variable
    /// counts.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::VariableCount(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }
}
