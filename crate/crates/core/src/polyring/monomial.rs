use std::fmt;

use crate::error::{Error, Result};

/// Largest number of ring variables supported by the dense exponent
/// representation.
pub const MAX_VARS: usize = 16;

/// A monomial as a dense exponent vector.
///
/// Slots past `nvars` are always zero, so arithmetic never needs to look at
/// the variable count.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], degree: 0, nvars: nvars as u8 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        assert!(i < nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Monomial::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            m.degree += e;
        }
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Sum of `weights[i] * e_i`.
    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        weights.iter().zip(self.exps.iter()).map(|(&w, &e)| w as u64 * e as u64).sum()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Bitmask of variables that occur.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.exps[i] != 0).collect()
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self * other`. Panics on exponent overflow.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, &b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(b).expect("monomial exponent overflow");
        }
        m.degree += other.degree;
        m
    }

    /// `self / other`, assuming `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut m = *self;
        for (a, &b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a -= b;
        }
        m.degree -= other.degree;
        m
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.div(other))
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut m = *self;
        for a in m.exps.iter_mut() {
            let v = (*a as u32).checked_mul(e).expect("monomial exponent overflow");
            *a = u16::try_from(v).expect("monomial exponent overflow");
        }
        m.degree *= e;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut degree = 0;
        for (a, &b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(b);
            degree += *a as u32;
        }
        m.degree = degree;
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut degree = 0;
        for (a, &b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(b);
            degree += *a as u32;
        }
        m.degree = degree;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support_mask() & other.support_mask() == 0
    }

    /// Squarefree part: every occurring variable with exponent one.
    pub fn radical(&self) -> Monomial {
        let mut m = *self;
        let mut degree = 0;
        for a in m.exps.iter_mut() {
            if *a > 0 {
                *a = 1;
                degree += 1;
            }
        }
        m.degree = degree;
        m
    }

    /// Re-indexes variables: variable `i` of `self` becomes variable
    /// `map[i]` of a monomial with `nvars` variables.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (i, &e) in self.exponents().iter().enumerate() {
            if e != 0 {
                m.exps[map[i]] += e;
            }
        }
        m.degree = self.degree;
        m
    }

    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut m = *self;
        m.degree = m.degree - m.exps[i] as u32 + e;
        m.exps[i] = u16::try_from(e).expect("monomial exponent overflow");
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn lcm_gcd_divide() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert!(a.gcd(&b).divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b).div(&a), m(&[0, 2, 1]));
        assert_eq!(a.radical(), m(&[1, 1, 0]));
        assert_eq!(a.lcm(&b).degree(), 6);
    }

    #[test]
    fn too_many_vars() {
        assert_eq!(Monomial::from_exponents(&[0; 17]), Err(Error::TooManyVariables(17)));
        assert_eq!(Monomial::from_exponents(&[70000]), Err(Error::ExponentOverflow));
    }

    #[test]
    fn remap_shifts() {
        let a = m(&[1, 2]);
        assert_eq!(a.remap(&[1, 2], 3), m(&[0, 1, 2]));
    }
}
