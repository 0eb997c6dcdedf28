//! Presentations of Rees algebras and their relation type.
//!
//! For `I = (g_1..g_n)` in `R = S/J`, relations live in the ring
//! `B = k[T_1..T_n, x]`. The presentation ideal of `R[It]` is the kernel of
//! `T_i -> g_i t`, computed by eliminating `t` from `J + (T_i - t g_i)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, buchberger_truncated, lift, reduce};
use crate::polyring::{MonomialOrder, PolyRing, Polynomial};
use crate::quotient::QuotientRing;

/// The ring `k[T_1..T_n, x]` of relations on `n` elements of a quotient
/// ring, ordered by `T`-degree first and grevlex after.
#[derive(Debug, Clone)]
pub struct ReesRing {
    base: QuotientRing,
    ngens: usize,
    ring: Arc<PolyRing>,
    t_weights: Vec<u32>,
}

/// A relation, homogeneous in the `T` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationPoly {
    pub poly: Polynomial,
    pub degree: u32,
}

fn t_names(base: &PolyRing, n: usize) -> Vec<String> {
    let mut prefix = "T".to_string();
    loop {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        if names.iter().all(|s| base.var_index(s).is_none()) && base.var_index(&prefix).is_none() {
            return names;
        }
        prefix.push('_');
    }
}

impl ReesRing {
    pub fn new(base: &QuotientRing, ngens: usize) -> Result<Self> {
        let s = base.ring();
        let names = t_names(s, ngens);
        let m = s.nvars();
        let t_weights: Vec<u32> = (0..ngens + m).map(|i| u32::from(i < ngens)).collect();
        let ring = s.with_front_vars(&names, MonomialOrder::weighted(t_weights.clone()))?;
        Ok(ReesRing { base: base.clone(), ngens, ring: Arc::new(ring), t_weights })
    }

    pub fn base(&self) -> &QuotientRing {
        &self.base
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// The variable `T_{i+1}`.
    pub fn t(&self, i: usize) -> Polynomial {
        self.ring.var(i)
    }

    pub fn t_weights(&self) -> &[u32] {
        &self.t_weights
    }

    fn t_mask(&self) -> u32 {
        (1u32 << self.ngens) - 1
    }

    /// Moves an element of the base ring into `B`.
    pub fn embed(&self, f: &Polynomial) -> Polynomial {
        let map: Vec<usize> = (0..self.base.ring().nvars()).map(|j| self.ngens + j).collect();
        self.ring.embed(f, &map)
    }

    /// Moves a `T`-free element of `B` back to the base ring.
    pub fn project(&self, f: &Polynomial) -> Polynomial {
        let map: Vec<usize> = (0..self.ring.nvars()).map(|i| i.saturating_sub(self.ngens)).collect();
        self.base.ring().embed(f, &map)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        self.ring.parse(text)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        self.ring.format(f)
    }

    /// Checks `T`-homogeneity and wraps `f`.
    pub fn relation(&self, f: Polynomial) -> Result<RelationPoly> {
        let degree = match f.homogeneous_degree(&self.t_weights) {
            Some(d) => d as u32,
            None if f.is_zero() => 0,
            None => return Err(Error::Inhomogeneous),
        };
        Ok(RelationPoly { poly: f, degree })
    }

    /// Coefficients of `f` as a polynomial in the `T` variables, with the
    /// `T`-monomials given as exponent vectors. Largest monomial first.
    pub fn coefficients(&self, f: &Polynomial) -> Vec<(Vec<u32>, Polynomial)> {
        self.ring
            .split_by_vars(f, self.t_mask())
            .into_iter()
            .map(|(m, c)| ((0..self.ngens).map(|i| m.exponent(i)).collect(), self.project(&c)))
            .collect()
    }

    /// `f(g_1..g_n)` reduced modulo `J`.
    pub fn evaluate(&self, f: &Polynomial, gens: &[Polynomial]) -> Result<Polynomial> {
        if gens.len() != self.ngens {
            return Err(Error::VariableCount(gens.len(), self.ngens));
        }
        let s = self.base.ring();
        let images: Vec<Polynomial> =
            gens.iter().cloned().chain((0..s.nvars()).map(|j| s.var(j))).collect();
        let v = self.ring.substitute_all(f, &images, s)?;
        self.base.normal_form(&v)
    }

    fn defining_in_b(&self) -> Vec<Polynomial> {
        self.base.relations().iter().map(|g| self.embed(g)).collect()
    }
}

/// Presentation ideal `Q` of `R[It]`, as the `T`-degree positive part of a
/// Groebner basis of `Q + J` in `B`.
#[derive(Debug, Clone)]
pub struct ReesPresentation {
    rees: ReesRing,
    gens: Vec<Polynomial>,
    relations: Vec<RelationPoly>,
}

impl ReesPresentation {
    pub fn rees_ring(&self) -> &ReesRing {
        &self.rees
    }

    pub fn base(&self) -> &QuotientRing {
        &self.rees.base
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn relations(&self) -> &[RelationPoly] {
        &self.relations
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.relations.iter().map(|r| r.degree).collect()
    }

    /// Basis of `Q_{d-1} + J` valid up to `T`-degree `d`.
    fn lower_basis(&self, d: u32) -> Result<Vec<Polynomial>> {
        let mut gens = self.rees.defining_in_b();
        gens.extend(self.relations.iter().filter(|r| r.degree < d).map(|r| r.poly.clone()));
        buchberger_truncated(&self.rees.ring, &gens, &self.rees.t_weights, d as u64)
    }

    pub fn relation_type(&self) -> Result<u32> {
        relation_type(self)
    }
}

pub fn rees_presentation(r: &QuotientRing, gens: &[Polynomial]) -> Result<ReesPresentation> {
    let mut reduced = Vec::with_capacity(gens.len());
    for g in gens {
        let nf = r.normal_form(g)?;
        if nf.is_zero() {
            return Err(Error::Precondition(format!("generator {} is zero in R", r.format(g))));
        }
        reduced.push(nf);
    }
    let rees = ReesRing::new(r, gens.len())?;
    let b = &rees.ring;
    let n = gens.len();
    // E = [t, T, x] with t eliminated first, then T-degree, then grevlex
    let e_weights_t: Vec<u32> = (0..=b.nvars()).map(|i| u32::from(i == 0)).collect();
    let e_weights_big_t: Vec<u32> = (0..=b.nvars()).map(|i| u32::from((1..=n).contains(&i))).collect();
    let mut t_name = "_t".to_string();
    while b.var_index(&t_name).is_some() {
        t_name.push('_');
    }
    let e = b.with_front_vars(&[t_name], MonomialOrder::Weighted(vec![e_weights_t, e_weights_big_t]))?;
    let shift_b: Vec<usize> = (1..=b.nvars()).collect();
    let mut input: Vec<Polynomial> = rees.defining_in_b().iter().map(|g| e.embed(g, &shift_b)).collect();
    for (i, g) in reduced.iter().enumerate() {
        let tg = e.mul(&e.var(0), &e.embed(&rees.embed(g), &shift_b));
        input.push(e.sub(&e.var(i + 1), &tg));
    }
    let gb = buchberger(&e, &input)?;
    let back: Vec<usize> = std::iter::once(0).chain(0..b.nvars()).collect();
    let mut relations = Vec::new();
    for g in gb.iter().filter(|g| !g.involves(0)) {
        let f = b.embed(g, &back);
        let rel = rees.relation(f)?;
        if rel.degree > 0 {
            relations.push(rel);
        }
    }
    relations.sort_by(|a, b2| a.degree.cmp(&b2.degree).then_with(|| b.cmp(b2.poly.leading_monomial().unwrap(), a.poly.leading_monomial().unwrap())));
    Ok(ReesPresentation { rees, gens: reduced, relations })
}

/// Smallest `k` with `Q_k = Q`: the largest degree carrying a basis element
/// outside the ideal of lower-degree relations. `1` when `Q = 0`.
pub fn relation_type(p: &ReesPresentation) -> Result<u32> {
    let top = p.relations.iter().map(|r| r.degree).max().unwrap_or(1);
    for d in (2..=top).rev() {
        let lower = p.lower_basis(d)?;
        let b = &p.rees.ring;
        if p.relations.iter().filter(|r| r.degree == d).any(|r| !reduce(b, &r.poly, &lower).is_zero()) {
            return Ok(d);
        }
    }
    Ok(1)
}

/// The linear relations `g_j T_i - g_i T_j` for `i < j`.
pub fn koszul_relations(rees: &ReesRing, gens: &[Polynomial]) -> Vec<RelationPoly> {
    let b = &rees.ring;
    let emb: Vec<Polynomial> = gens.iter().map(|g| rees.embed(g)).collect();
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let f = b.sub(&b.mul(&emb[j], &rees.t(i)), &b.mul(&emb[i], &rees.t(j)));
            out.push(RelationPoly { poly: f, degree: 1 });
        }
    }
    out
}

/// `f(g_1..g_n) = 0` in `R`.
pub fn is_relation(rees: &ReesRing, f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    rees.relation(f.clone())?;
    Ok(rees.evaluate(f, gens)?.is_zero())
}

/// Whether the relation `f` lies in `Q_{deg f - 1} + J`.
pub fn reducible_to_lower_degree(p: &ReesPresentation, f: &Polynomial) -> Result<bool> {
    let rel = p.rees.relation(f.clone())?;
    if !p.rees.evaluate(f, &p.gens)?.is_zero() {
        return Err(Error::NotARelation(p.rees.format(f)));
    }
    if rel.degree == 0 {
        return Ok(false);
    }
    let lower = p.lower_basis(rel.degree)?;
    Ok(reduce(&p.rees.ring, f, &lower).is_zero())
}

/// Result of the two-parameter descent.
#[derive(Debug, Clone)]
pub enum Descent {
    /// A relation `G` of degree `p` with the same leading coefficient.
    Lowered { relation: RelationPoly, p: u32, s: Vec<Polynomial> },
    /// Degree at most one; nothing to do.
    Unchanged(RelationPoly),
    Failed { reason: String, s: Vec<Polynomial> },
}

impl Descent {
    pub fn relation(&self) -> Option<&RelationPoly> {
        match self {
            Descent::Lowered { relation, .. } => Some(relation),
            Descent::Unchanged(r) => Some(r),
            Descent::Failed { .. } => None,
        }
    }
}

/// Lowers the degree of a relation `f` on the pair `(x, y)` using the
/// nonzerodivisor `gamma`. `rees` must have two `T` variables.
///
/// With `r_k` the coefficient of `T_1^k T_2^{N-k}` and
/// `P_j = sum_{k<j} r_{N-k} x^{j-1-k} y^k`, it finds `s_j` with
/// `gamma P_j = s_j y^j`, takes the first `p` with
/// `s_{p+1} = a gamma + sum b_i s_i`, and returns
/// `G = P_{p+1}(T) - a y T_2^p - sum b_i T_2^{p+1-i} P_i(T)`.
pub fn two_param_descent(
    rees: &ReesRing,
    x: &Polynomial,
    y: &Polynomial,
    f: &Polynomial,
    gamma: &Polynomial,
) -> Result<Descent> {
    if rees.ngens != 2 {
        return Err(Error::VariableCount(rees.ngens, 2));
    }
    let base = &rees.base;
    let s = base.ring();
    let gens = [x.clone(), y.clone()];
    let rel = rees.relation(f.clone())?;
    if !rees.evaluate(f, &gens)?.is_zero() {
        return Err(Error::NotARelation(rees.format(f)));
    }
    if !base.is_regular(gamma)? {
        return Err(Error::ZeroDivisorElement(base.format(gamma)));
    }
    let n = rel.degree;
    // r[k] = coefficient of T1^k T2^(n-k)
    let mut r = vec![s.zero(); n as usize + 1];
    for (e, c) in rees.coefficients(f) {
        r[e[0] as usize] = c;
    }
    if base.is_zero(&r[n as usize])? {
        return Err(Error::Precondition("leading coefficient r_N is zero".into()));
    }
    if n <= 1 {
        return Ok(Descent::Unchanged(rel));
    }
    let jg = base.relations().to_vec();

    // P_j in the base ring and as T-forms
    let partial = |j: u32| -> (Polynomial, Polynomial) {
        let b = &rees.ring;
        let mut pv = s.zero();
        let mut pt = b.zero();
        for k in 0..j {
            let c = &r[(n - k) as usize];
            let xv = s.mul(&s.pow(x, j - 1 - k), &s.pow(y, k));
            pv = s.add(&pv, &s.mul(c, &xv));
            let tm = b.mul(&b.pow(&rees.t(0), j - 1 - k), &b.pow(&rees.t(1), k));
            pt = b.add(&pt, &b.mul(&rees.embed(c), &tm));
        }
        (pv, pt)
    };

    let mut svals: Vec<Polynomial> = Vec::new();
    let mut forms: Vec<Polynomial> = Vec::new();
    for j in 1..=n {
        let (pv, pt) = partial(j);
        let yj = s.pow(y, j);
        let Some(c) = lift(s, &jg, &[yj], &s.mul(gamma, &pv))? else {
            return Ok(Descent::Failed {
                reason: format!("gamma * P_{j} is not in (y^{j}); gamma is not a multiplier for this pair"),
                s: svals,
            });
        };
        svals.push(base.normal_form(&c[0])?);
        forms.push(pt);
    }

    let b = &rees.ring;
    for p in 1..n {
        let mut tracked = vec![gamma.clone()];
        tracked.extend(svals[..p as usize].iter().cloned());
        let Some(c) = lift(s, &jg, &tracked, &svals[p as usize])? else { continue };
        let mut g = forms[p as usize].clone();
        let ay = rees.embed(&s.mul(&c[0], y));
        g = b.sub(&g, &b.mul(&ay, &b.pow(&rees.t(1), p)));
        for i in 1..=p {
            let bi = rees.embed(&c[i as usize]);
            let term = b.mul(&b.mul(&bi, &b.pow(&rees.t(1), p + 1 - i)), &forms[i as usize - 1]);
            g = b.sub(&g, &term);
        }
        let g = reduce_coefficients(rees, &g)?;
        let relation = rees.relation(g)?;
        return Ok(Descent::Lowered { relation, p, s: svals });
    }
    Ok(Descent::Failed { reason: format!("no p < {n} with s_(p+1) in (gamma, s_1..s_p)"), s: svals })
}

/// Reduces every `T`-coefficient modulo `J`.
fn reduce_coefficients(rees: &ReesRing, f: &Polynomial) -> Result<Polynomial> {
    let b = &rees.ring;
    let mut acc = b.zero();
    for (m, c) in b.split_by_vars(f, rees.t_mask()) {
        let nf = rees.embed(&rees.base.normal_form(&rees.project(&c))?);
        acc = b.add(&acc, &b.mul(&b.monomial(m), &nf));
    }
    Ok(acc)
}
