//! Quotient rings `R = k[x]/J`, the stand-ins for the local rings of the
//! theory, and Fedder's F-purity criterion.
//!
//! Ideals of `R` are passed around as lists of ambient polynomials; every
//! ideal operation adds `J` before computing.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{Monomial, PolyRing, Polynomial};

#[derive(Debug, Clone)]
pub struct QuotientRing {
    ring: Arc<PolyRing>,
    defining: Ideal,
}

impl QuotientRing {
    /// `ring / (rels)`. The defining ideal must be proper.
    pub fn new(ring: Arc<PolyRing>, rels: Vec<Polynomial>) -> Result<Self> {
        let defining = Ideal::new(ring.clone(), rels);
        if defining.is_unit()? {
            return Err(Error::Precondition("defining ideal is the unit ideal".into()));
        }
        // normalize generators to the reduced basis
        let gb = defining.gb()?.to_vec();
        Ok(QuotientRing { defining: Ideal::from_gb(ring.clone(), gb), ring })
    }

    pub fn polynomial(ring: Arc<PolyRing>) -> Self {
        QuotientRing { defining: Ideal::zero(ring.clone()), ring }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn defining(&self) -> &Ideal {
        &self.defining
    }

    pub fn relations(&self) -> &[Polynomial] {
        self.defining.gens()
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.characteristic()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        self.ring.parse(text)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        self.ring.format(f)
    }

    /// Canonical representative modulo `J`.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.defining.reduce(f)
    }

    pub fn is_zero(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.normal_form(&self.ring.mul(f, g))
    }

    /// Krull dimension of `R`.
    pub fn dimension(&self) -> Result<i32> {
        self.defining.dimension()
    }

    /// The ideal `I + J` of the ambient ring, for `I` given by generators.
    pub fn lift(&self, gens: &[Polynomial]) -> Ideal {
        self.defining.with_gens(gens)
    }

    /// Membership of `f` in the ideal of `R` generated by `gens`.
    pub fn ideal_contains(&self, gens: &[Polynomial], f: &Polynomial) -> Result<bool> {
        self.lift(gens).contains(f)
    }

    /// `true` when the ideal generated by `small` is inside the one generated
    /// by `big`.
    pub fn ideal_subset(&self, small: &[Polynomial], big: &[Polynomial]) -> Result<bool> {
        let b = self.lift(big);
        for g in small {
            if !b.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Height of the ideal generated by `gens` in `R`, as
    /// `dim R - dim R/I`. Exact for equidimensional `R`; the unit ideal gets
    /// `dim R + 1`.
    pub fn height(&self, gens: &[Polynomial]) -> Result<usize> {
        let d = self.dimension()?;
        let di = self.lift(gens).dimension()?;
        Ok((d - di) as usize)
    }

    /// `f` is a nonzerodivisor on `R`, i.e. `J : f = J`.
    pub fn is_regular(&self, f: &Polynomial) -> Result<bool> {
        if self.is_zero(f)? {
            return Err(Error::Precondition("element is zero in the quotient".into()));
        }
        let c = self.defining.colon(f)?;
        self.defining.contains_ideal(&c)
    }

    /// `elems` has `dim R` elements and `R/(elems)` has dimension zero.
    pub fn is_system_of_parameters(&self, elems: &[Polynomial]) -> Result<bool> {
        let d = self.dimension()?;
        if d < 0 || elems.len() != d as usize {
            return Ok(false);
        }
        Ok(self.lift(elems).dimension()? == 0)
    }

    /// `(I :_R K)` as generators reduced modulo `J` (zeros dropped).
    pub fn colon(&self, i: &[Polynomial], k: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let lifted = self.lift(i);
        let kk = Ideal::new(self.ring.clone(), k.to_vec());
        let c = lifted.colon_ideal(&kk)?;
        let mut out = Vec::new();
        for g in c.gens() {
            let nf = self.normal_form(g)?;
            if !nf.is_zero() && !out.contains(&nf) {
                out.push(nf);
            }
        }
        Ok(out)
    }

    /// Warns (returns false) when some element is not homogeneous in the
    /// standard grading; the graded proxy is only exact for homogeneous data.
    pub fn is_standard_graded(&self, elems: &[Polynomial]) -> bool {
        let ones = vec![1; self.ring.nvars()];
        elems.iter().chain(self.relations()).all(|f| f.is_homogeneous(&ones))
    }
}

fn in_frobenius_power_of_maximal(f: &Polynomial, p: u32) -> bool {
    f.terms().iter().all(|t| t.mono.exponents().iter().any(|&e| e as u32 >= p))
}

/// Fedder's criterion for `S/J` with `S` the ambient polynomial ring of
/// characteristic `p`: F-pure iff `(J^[p] : J)` is not inside `n^[p]`.
pub fn fedder_fpure(j: &Ideal, p: u32) -> Result<bool> {
    let ring = j.ring();
    if ring.characteristic() != p {
        return Err(Error::Precondition(format!(
            "criterion prime {p} differs from the characteristic {}",
            ring.characteristic()
        )));
    }
    let frob: Vec<Polynomial> = j.gens().iter().map(|g| ring.pow(g, p)).collect();
    let frob = Ideal::new(ring.clone(), frob);
    let colon = frob.colon_ideal(j)?;
    let gens = colon.gb()?;
    Ok(gens.iter().any(|g| !in_frobenius_power_of_maximal(g, p)))
}

/// A witness that some ideal of `R` is not Frobenius closed.
#[derive(Debug, Clone)]
pub struct FrobeniusWitness {
    pub ideal: Vec<Polynomial>,
    pub element: Polynomial,
}

/// `f^p ∈ I^[p]R` but `f ∉ IR`.
pub fn violates_frobenius_closure(r: &QuotientRing, ideal: &[Polynomial], f: &Polynomial) -> Result<bool> {
    let ring = r.ring();
    let p = r.characteristic();
    let frob: Vec<Polynomial> = ideal.iter().map(|g| ring.pow(g, p)).collect();
    Ok(r.ideal_contains(&frob, &ring.pow(f, p))? && !r.ideal_contains(ideal, f)?)
}

/// Samples `samples` pairs of a small test ideal and a random low-degree
/// element, looking for a failure of Frobenius closure. Test ideals are
/// `(0)`, single variables, pairs of variables and squares of variables.
pub fn sample_frobenius_closure(r: &QuotientRing, samples: usize, seed: u64) -> Result<Option<FrobeniusWitness>> {
    let ring = r.ring();
    let n = ring.nvars();
    let mut family: Vec<Vec<Polynomial>> = vec![Vec::new()];
    for i in 0..n {
        family.push(vec![ring.var(i)]);
        family.push(vec![ring.pow(&ring.var(i), 2)]);
        for k in i + 1..n {
            family.push(vec![ring.var(i), ring.var(k)]);
        }
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let p = r.characteristic() as i64;
    for _ in 0..samples {
        let ideal = family.choose(&mut rng).expect("nonempty family").clone();
        let nterms = rng.gen_range(1..=3);
        let raw: Vec<(i64, Monomial)> = (0..nterms)
            .map(|_| {
                let deg = rng.gen_range(1..=3u32);
                let mut e = vec![0u32; n];
                for _ in 0..deg {
                    e[rng.gen_range(0..n)] += 1;
                }
                (rng.gen_range(1..p), ring.mono(&e))
            })
            .collect();
        let f = ring.normalize(raw);
        if f.is_zero() {
            continue;
        }
        if violates_frobenius_closure(r, &ideal, &f)? {
            return Ok(Some(FrobeniusWitness { ideal, element: f }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quotient(p: u64, names: &[&str], rels: &str) -> QuotientRing {
        let ring = Arc::new(PolyRing::grevlex(p, names).unwrap());
        let rels = if rels.is_empty() { Vec::new() } else { ring.parse_list(rels).unwrap() };
        QuotientRing::new(ring, rels).unwrap()
    }

    fn example21() -> QuotientRing {
        quotient(32003, &["x", "y", "z", "w"], "w^2, w*z")
    }

    #[test]
    fn normal_form_examples() {
        let r = quotient(32003, &["x", "w"], "w^2");
        assert_eq!(r.normal_form(&r.parse("w^2 + x").unwrap()).unwrap(), r.parse("x").unwrap());
        assert!(r.is_zero(&r.parse("x*w^2").unwrap()).unwrap());
        let s = example21();
        assert_eq!(s.normal_form(&s.parse("w*z*y + x").unwrap()).unwrap(), s.parse("x").unwrap());
    }

    #[test]
    fn unit_defining_ideal_rejected() {
        let ring = Arc::new(PolyRing::grevlex(7, &["x"]).unwrap());
        assert!(QuotientRing::new(ring.clone(), vec![ring.one()]).is_err());
    }

    #[test]
    fn regularity_examples() {
        let r = quotient(32003, &["w"], "w^2");
        assert!(!r.is_regular(&r.parse("w").unwrap()).unwrap());
        let r = quotient(32003, &["x", "w"], "w^2");
        assert!(r.is_regular(&r.parse("x").unwrap()).unwrap());
        assert!(r.is_regular(&r.parse("w^2").unwrap()).is_err());
        let s = example21();
        assert!(!s.is_regular(&s.parse("z+w").unwrap()).unwrap());
    }

    #[test]
    fn regular_element_cancels() {
        let s = example21();
        let f = s.parse("x + y").unwrap();
        assert!(s.is_regular(&f).unwrap());
        for text in ["w", "z*w", "x*w - y", "w^3 + z"] {
            let g = s.parse(text).unwrap();
            if s.is_zero(&s.ring().mul(&f, &g)).unwrap() {
                assert!(s.is_zero(&g).unwrap());
            }
        }
    }

    #[test]
    fn parameter_examples() {
        let r = quotient(32003, &["x", "y"], "");
        assert!(r.is_system_of_parameters(&r.ring().parse_list("x, y").unwrap()).unwrap());
        assert!(!r.is_system_of_parameters(&r.ring().parse_list("x, x^2").unwrap()).unwrap());
        let s = example21();
        assert_eq!(s.dimension().unwrap(), 3);
        assert!(s.is_system_of_parameters(&s.ring().parse_list("x, y, z+w").unwrap()).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = quotient(32003, &["x", "y"], "");
        let c = r.colon(&[r.parse("x").unwrap()], &[r.parse("y").unwrap()]).unwrap();
        assert_eq!(c, vec![r.parse("x").unwrap()]);
        let s = example21();
        let c = s.colon(&[], &[s.parse("w").unwrap()]).unwrap();
        let expect = s.ring().parse_list("z, w").unwrap();
        assert!(s.ideal_subset(&c, &expect).unwrap() && s.ideal_subset(&expect, &c).unwrap());
        let planes = quotient(32003, &["a", "b", "c", "d"], "a*b, a*d, c*b, c*d");
        let x = planes.parse("a+b").unwrap();
        let c = planes.colon(&[x.clone()], &[planes.parse("c+d").unwrap()]).unwrap();
        assert!(planes.ideal_subset(&[x.clone()], &c).unwrap());
        assert!(!planes.ideal_subset(&c, &[x]).unwrap());
    }

    #[test]
    fn fedder_examples() {
        let r2 = Arc::new(PolyRing::grevlex(2, &["x", "y"]).unwrap());
        let j = Ideal::new(r2.clone(), vec![r2.parse("x*y").unwrap()]);
        assert!(fedder_fpure(&j, 2).unwrap());
        let j = Ideal::new(r2.clone(), vec![r2.parse("x^2").unwrap()]);
        assert!(!fedder_fpure(&j, 2).unwrap());
        let r3 = Arc::new(PolyRing::grevlex(3, &["x", "y"]).unwrap());
        assert!(fedder_fpure(&Ideal::zero(r3.clone()), 3).unwrap());
        assert!(fedder_fpure(&Ideal::zero(r3), 2).is_err());
    }

    #[test]
    fn frobenius_witness_for_nilpotent() {
        let r = quotient(2, &["x", "y"], "x^2");
        assert!(violates_frobenius_closure(&r, &[], &r.parse("x").unwrap()).unwrap());
        assert!(sample_frobenius_closure(&r, 200, 1).unwrap().is_some());
        let pure = quotient(2, &["x", "y"], "x*y");
        assert!(sample_frobenius_closure(&pure, 100, 1).unwrap().is_none());
    }
}
