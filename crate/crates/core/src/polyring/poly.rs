use std::cmp::Ordering;
use std::collections::HashMap;

use super::{Monomial, MonomialOrder, PrimeField, MAX_VARS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
}

/// A polynomial in canonical form: terms sorted strictly descending in the
/// order of the ring that produced it, no zero coefficients.
///
/// A `Polynomial` carries no reference to its ring; all arithmetic goes
/// through [`PolyRing`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Wraps terms that are already canonical.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    #[inline]
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    #[inline]
    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.coeff)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Returns `Some(d)` when every term has weighted degree `d`.
    pub fn homogeneous_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut it = self.terms.iter().map(|t| t.mono.weighted_degree(weights));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        self.is_zero() || self.homogeneous_degree(weights).is_some()
    }

    /// Bitmask of variables occurring anywhere in the polynomial.
    pub fn support_mask(&self) -> u32 {
        self.terms.iter().fold(0, |m, t| m | t.mono.support_mask())
    }

    pub fn involves(&self, var: usize) -> bool {
        self.support_mask() & (1 << var) != 0
    }

    /// The coefficient of the given monomial.
    pub fn coeff_of(&self, m: &Monomial) -> u32 {
        self.terms.iter().find(|t| t.mono == *m).map_or(0, |t| t.coeff)
    }
}

/// A polynomial ring `F_p[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
    degree_cap: u32,
}

impl PolyRing {
    pub fn new(field: PrimeField, names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        Ok(PolyRing { field, names, order, degree_cap: crate::DEFAULT_DEGREE_CAP })
    }

    /// Convenience constructor: grevlex over the given names.
    pub fn grevlex(p: u64, names: &[&str]) -> Result<Self> {
        PolyRing::new(PrimeField::new(p)?, names.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex)
    }

    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing { order, ..self.clone() }
    }

    /// A ring with `front` prepended to the variable list; old variable `i`
    /// becomes `i + front.len()`.
    pub fn with_front_vars(&self, front: &[String], order: MonomialOrder) -> Result<Self> {
        let mut names: Vec<String> = front.to_vec();
        names.extend(self.names.iter().cloned());
        Ok(PolyRing::new(self.field, names, order)?.with_degree_cap(self.degree_cap))
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    // ---- constructors ----

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.term(self.field.from_i64(c), Monomial::one(self.nvars()))
    }

    pub fn term(&self, coeff: u32, mono: Monomial) -> Polynomial {
        if coeff % self.characteristic() == 0 {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![Term { coeff: coeff % self.characteristic(), mono }])
        }
    }

    pub fn monomial(&self, mono: Monomial) -> Polynomial {
        self.term(1, mono)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), i))
    }

    /// Monomial from an exponent vector; panics if the length is wrong.
    pub fn mono(&self, exps: &[u32]) -> Monomial {
        assert_eq!(exps.len(), self.nvars());
        Monomial::from_exponents(exps).expect("exponent vector")
    }

    /// Merges like terms, drops zeros and sorts descending.
    pub fn normalize(&self, raw: impl IntoIterator<Item = (i64, Monomial)>) -> Polynomial {
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (c, m) in raw {
            let c = self.field.from_i64(c);
            let e = acc.entry(m).or_insert(0);
            *e = self.field.add(*e, c);
        }
        self.from_map(acc)
    }

    fn from_map(&self, acc: HashMap<Monomial, u32>) -> Polynomial {
        let mut terms: Vec<Term> =
            acc.into_iter().filter(|&(_, c)| c != 0).map(|(mono, coeff)| Term { coeff, mono }).collect();
        terms.sort_unstable_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial::from_sorted(terms)
    }

    /// Re-sorts `f` (from a ring over the same variables) under this ring's
    /// order.
    pub fn convert(&self, f: &Polynomial) -> Polynomial {
        let mut terms = f.terms.clone();
        terms.sort_unstable_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial::from_sorted(terms)
    }

    /// Moves `f` into this ring, sending source variable `i` to variable
    /// `map[i]`.
    pub fn embed(&self, f: &Polynomial, map: &[usize]) -> Polynomial {
        let n = self.nvars();
        let mut terms: Vec<Term> =
            f.terms.iter().map(|t| Term { coeff: t.coeff, mono: t.mono.remap(map, n) }).collect();
        terms.sort_unstable_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial::from_sorted(terms)
    }

    // ---- arithmetic ----

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, 1, &Monomial::one(self.nvars()), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, self.field.neg(1), &Monomial::one(self.nvars()), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(
            f.terms.iter().map(|t| Term { coeff: self.field.neg(t.coeff), mono: t.mono }).collect(),
        )
    }

    pub fn scale(&self, c: u32, f: &Polynomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(
            f.terms.iter().map(|t| Term { coeff: self.field.mul(c, t.coeff), mono: t.mono }).collect(),
        )
    }

    /// `c * m * f`.
    pub fn mul_term(&self, c: u32, m: &Monomial, f: &Polynomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(
            f.terms.iter().map(|t| Term { coeff: self.field.mul(c, t.coeff), mono: t.mono.mul(m) }).collect(),
        )
    }

    /// `f + c * m * g` by a single merge.
    pub fn add_scaled(&self, f: &Polynomial, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(f.len() + g.len());
        self.merge_into(&mut out, &f.terms, c, m, &g.terms);
        Polynomial::from_sorted(out)
    }

    pub(crate) fn merge_into(&self, out: &mut Vec<Term>, f: &[Term], c: u32, m: &Monomial, g: &[Term]) {
        if c == 0 {
            out.extend_from_slice(f);
            return;
        }
        let field = &self.field;
        let (mut i, mut j) = (0, 0);
        while i < f.len() && j < g.len() {
            let gm = g[j].mono.mul(m);
            match self.cmp(&f[i].mono, &gm) {
                Ordering::Greater => {
                    out.push(f[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: field.mul(c, g[j].coeff), mono: gm });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(f[i].coeff, field.mul(c, g[j].coeff));
                    if s != 0 {
                        out.push(Term { coeff: s, mono: gm });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f[i..]);
        out.extend(g[j..].iter().map(|t| Term { coeff: field.mul(c, t.coeff), mono: t.mono.mul(m) }));
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        if small.len() == 1 {
            let t = small.terms[0];
            return self.mul_term(t.coeff, &t.mono, large);
        }
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(f.len() * g.len());
        for a in &f.terms {
            for b in &g.terms {
                let e = acc.entry(a.mono.mul(&b.mono)).or_insert(0);
                *e = self.field.add(*e, self.field.mul(a.coeff, b.coeff));
            }
        }
        self.from_map(acc)
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut result = self.one();
        let mut base = f.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    pub fn sum<'a>(&self, fs: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        let mut acc = HashMap::new();
        for f in fs {
            for t in &f.terms {
                let e = acc.entry(t.mono).or_insert(0);
                *e = self.field.add(*e, t.coeff);
            }
        }
        self.from_map(acc)
    }

    /// Scales `f` so the leading coefficient is one.
    pub fn make_monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_coeff() {
            None | Some(1) => f.clone(),
            Some(c) => self.scale(self.field.inv(c), f),
        }
    }

    /// Exact quotient `f / g`; `None` when `g` does not divide `f`.
    pub fn divide_exact(&self, f: &Polynomial, g: &Polynomial) -> Result<Option<Polynomial>> {
        let lt = *g.leading_term().ok_or(Error::ZeroDivisor)?;
        let inv = self.field.inv(lt.coeff);
        let mut rem = f.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.leading_term().copied() {
            let Some(q) = t.mono.checked_div(&lt.mono) else {
                return Ok(None);
            };
            let c = self.field.mul(t.coeff, inv);
            quot.push(Term { coeff: c, mono: q });
            rem = self.add_scaled(&rem, self.field.neg(c), &q, g);
        }
        // quotient terms were produced in descending order
        Ok(Some(Polynomial::from_sorted(quot)))
    }

    /// Substitutes `images[i]` (a polynomial of `target`) for variable `i`.
    /// Variables that occur in `f` must have an image.
    pub fn substitute(&self, f: &Polynomial, images: &[Option<Polynomial>], target: &PolyRing) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(Error::VariableCount(images.len(), self.nvars()));
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); self.nvars()];
        let mut out = Vec::with_capacity(f.len());
        for t in &f.terms {
            let mut acc = target.constant(t.coeff as i64);
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[i].as_ref().ok_or_else(|| Error::MissingAssignment(self.names[i].clone()))?;
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(target.one());
                }
                while cache.len() <= e as usize {
                    let next = target.mul(cache.last().unwrap(), img);
                    cache.push(next);
                }
                acc = target.mul(&acc, &cache[e as usize]);
            }
            out.push(acc);
        }
        Ok(target.sum(&out))
    }

    /// Substitution with every variable assigned.
    pub fn substitute_all(&self, f: &Polynomial, images: &[Polynomial], target: &PolyRing) -> Result<Polynomial> {
        let imgs: Vec<Option<Polynomial>> = images.iter().cloned().map(Some).collect();
        self.substitute(f, &imgs, target)
    }

    /// Views `f` as a polynomial in the variables of `mask` and returns its
    /// coefficients keyed by monomials in those variables, largest first.
    pub fn split_by_vars(&self, f: &Polynomial, mask: u32) -> Vec<(Monomial, Polynomial)> {
        let n = self.nvars();
        let mut groups: HashMap<Monomial, Vec<(i64, Monomial)>> = HashMap::new();
        for t in f.terms() {
            let mut outer = Monomial::one(n);
            let mut inner = t.mono;
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    outer = outer.with_exponent(i, t.mono.exponent(i));
                    inner = inner.with_exponent(i, 0);
                }
            }
            groups.entry(outer).or_default().push((t.coeff as i64, inner));
        }
        let mut out: Vec<(Monomial, Polynomial)> =
            groups.into_iter().map(|(m, raw)| (m, self.normalize(raw))).collect();
        out.sort_by(|a, b| self.cmp(&b.0, &a.0));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> PolyRing {
        PolyRing::grevlex(32003, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let r = ring();
        let x = r.mono(&[1, 0, 0]);
        let y = r.mono(&[0, 1, 0]);
        assert_eq!(r.normalize([(1, x), (1, x)]), r.term(2, x));
        assert!(r.normalize([(1, x), (32002, x)]).is_zero());
        let f = r.normalize([(1, y), (1, x)]);
        assert_eq!(f.terms()[0].mono, x);
        assert_eq!(f.terms()[1].mono, y);
    }

    #[test]
    fn substitute_examples() {
        let r = ring();
        let t = PolyRing::grevlex(32003, &["T1", "T2"]).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        let f = t.mul(&t.var(0), &t.var(1));
        assert_eq!(t.substitute_all(&f, &[x.clone(), y.clone()], &r).unwrap(), r.mul(&x, &y));
        let missing = t.substitute(&f, &[Some(x.clone()), None], &r);
        assert_eq!(missing, Err(Error::MissingAssignment("T2".into())));
        let sq = t.pow(&t.var(0), 2);
        let xp1 = r.add(&x, &r.one());
        let expect = r.normalize([(1, r.mono(&[2, 0, 0])), (2, r.mono(&[1, 0, 0])), (1, r.mono(&[0, 0, 0]))]);
        assert_eq!(t.substitute(&sq, &[Some(xp1), None], &r).unwrap(), expect);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let (x, y) = (r.var(0), r.var(1));
        let f = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(r.divide_exact(&f, &r.add(&x, &y)).unwrap(), Some(r.sub(&x, &y)));
        assert_eq!(r.divide_exact(&x, &y).unwrap(), None);
        assert_eq!(r.divide_exact(&x, &r.zero()), Err(Error::ZeroDivisor));
    }

    fn poly3() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-5i64..5, proptest::collection::vec(0u32..3, 3)), 0..5)
            .prop_map(|raw| {
                let r = ring();
                r.normalize(raw.into_iter().map(|(c, e)| (c, r.mono(&e))))
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly3(), b in poly3(), c in poly3()) {
            let r = ring();
            prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
            prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
            prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
            prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
            prop_assert!(r.sub(&a, &a).is_zero());
        }

        #[test]
        fn substitution_composes(f in poly3(), s in proptest::collection::vec(poly3(), 3), t in proptest::collection::vec(poly3(), 3)) {
            // substitute(substitute(f, s), t) == substitute(f, t . s)
            let r = ring();
            let fs = r.substitute_all(&f, &s, &r).unwrap();
            let lhs = r.substitute_all(&fs, &t, &r).unwrap();
            let composed: Vec<Polynomial> = s.iter().map(|si| r.substitute_all(si, &t, &r).unwrap()).collect();
            let rhs = r.substitute_all(&f, &composed, &r).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn identity_substitution(f in poly3()) {
            let r = ring();
            let ids: Vec<Polynomial> = (0..3).map(|i| r.var(i)).collect();
            prop_assert_eq!(r.substitute_all(&f, &ids, &r).unwrap(), f);
        }
    }
}
