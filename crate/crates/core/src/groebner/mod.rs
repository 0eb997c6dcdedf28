//! Groebner bases and the ideal operations built on them.
//!
//! Colon ideals, intersections and saturations all go through a single
//! auxiliary variable and elimination, so no module Groebner bases are
//! needed.

mod buchberger;

use std::sync::Arc;

use once_cell::sync::OnceCell;

pub use buchberger::{buchberger, lift, reduce};
pub(crate) use buchberger::buchberger_truncated;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// An ideal given by generators, with its reduced Groebner basis computed
/// lazily under the ring's order and cached.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceCell<Vec<Polynomial>>,
}

impl Ideal {
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens, gb: OnceCell::new() }
    }

    pub fn zero(ring: Arc<PolyRing>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    /// Wraps generators already known to be a reduced Groebner basis.
    pub(crate) fn from_gb(ring: Arc<PolyRing>, gb: Vec<Polynomial>) -> Self {
        let cell = OnceCell::new();
        let _ = cell.set(gb.clone());
        Ideal { ring, gens: gb, gb: cell }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> Result<&[Polynomial]> {
        self.gb.get_or_try_init(|| buchberger(&self.ring, &self.gens)).map(|v| v.as_slice())
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(reduce(&self.ring, f, self.gb()?))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// `true` when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.iter().any(|g| g.is_constant()))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn with_gens(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let r = &self.ring;
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| r.mul(a, b))).collect();
        Ideal::new(r.clone(), gens)
    }

    /// `self^n` (the unit ideal for `n = 0`).
    pub fn power(&self, n: u32) -> Ideal {
        let mut acc = Ideal::new(self.ring.clone(), vec![self.ring.one()]);
        for _ in 0..n {
            acc = acc.product(self);
            let gb = acc.gb().map(|g| g.to_vec()).unwrap_or_else(|_| acc.gens.clone());
            acc = Ideal::new(self.ring.clone(), gb);
        }
        acc
    }

    /// Elements of the ideal not involving any variable in `vars`.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let r = &self.ring;
        let er = r.with_order(MonomialOrder::eliminating(r.nvars(), vars));
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| er.convert(g)).collect();
        let gb = buchberger(&er, &gens)?;
        let mask = vars.iter().fold(0u32, |m, &v| m | (1 << v));
        let kept = gb.into_iter().filter(|g| g.support_mask() & mask == 0).map(|g| r.convert(&g)).collect();
        Ok(Ideal::new(r.clone(), kept))
    }

    /// `self ∩ other`, via `u*I + (1-u)*J` and elimination of `u`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring.names() != other.ring.names() || self.ring.characteristic() != other.ring.characteristic() {
            return Err(Error::Precondition("intersection of ideals in different rings".into()));
        }
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let r = &self.ring;
        let n = r.nvars();
        let er = r.with_front_vars(&[aux_name(r)], MonomialOrder::BlockElimination(1))?;
        let shift: Vec<usize> = (1..=n).collect();
        let u = er.var(0);
        let one_minus_u = er.sub(&er.one(), &u);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| er.mul(&u, &er.embed(g, &shift))).collect();
        gens.extend(other.gens.iter().map(|g| er.mul(&one_minus_u, &er.embed(g, &shift))));
        let gb = buchberger(&er, &gens)?;
        let back: Vec<usize> = std::iter::once(0).chain(0..n).collect();
        let kept = gb
            .into_iter()
            .filter(|g| !g.involves(0))
            .map(|g| r.embed(&g, &back))
            .collect();
        Ok(Ideal::new(r.clone(), kept))
    }

    /// `(self : f) = {g : g*f in self}`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let r = &self.ring;
        let principal = Ideal::new(r.clone(), vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for h in meet.gens() {
            let q = r.divide_exact(h, f)?.expect("generator of I ∩ (f) is divisible by f");
            gens.push(q);
        }
        if gens.is_empty() {
            return Ok(Ideal::zero(r.clone()));
        }
        let gb = buchberger(r, &gens)?;
        Ok(Ideal::from_gb(r.clone(), gb))
    }

    /// `(self : other)`, the intersection of the colons by each generator.
    /// The colon by the zero ideal is the unit ideal.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc = Ideal::new(self.ring.clone(), vec![self.ring.one()]);
        for g in other.gens() {
            let c = self.colon(g)?;
            acc = if acc.gens.len() == 1 && acc.gens[0].is_constant() { c } else { acc.intersect(&c)? };
        }
        Ok(acc)
    }

    /// `(self : f^∞)`, via `I + (1 - u f)` and elimination of `u`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let r = &self.ring;
        let n = r.nvars();
        let er = r.with_front_vars(&[aux_name(r)], MonomialOrder::BlockElimination(1))?;
        let shift: Vec<usize> = (1..=n).collect();
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| er.embed(g, &shift)).collect();
        let uf = er.mul(&er.var(0), &er.embed(f, &shift));
        gens.push(er.sub(&er.one(), &uf));
        let gb = buchberger(&er, &gens)?;
        let back: Vec<usize> = std::iter::once(0).chain(0..n).collect();
        let kept: Vec<Polynomial> =
            gb.into_iter().filter(|g| !g.involves(0)).map(|g| r.embed(&g, &back)).collect();
        Ok(Ideal::new(r.clone(), kept))
    }

    /// Radical membership by the Rabinowitsch trick: `f ∈ √I` iff
    /// `1 ∈ I + (1 - u f)`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let r = &self.ring;
        let n = r.nvars();
        let er = r.with_front_vars(&[aux_name(r)], MonomialOrder::Grevlex)?;
        let shift: Vec<usize> = (1..=n).collect();
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| er.embed(g, &shift)).collect();
        let uf = er.mul(&er.var(0), &er.embed(f, &shift));
        gens.push(er.sub(&er.one(), &uf));
        let gb = buchberger(&er, &gens)?;
        Ok(gb.iter().any(|g| g.is_constant()))
    }

    /// Krull dimension of `k[x]/I`; `-1` for the unit ideal.
    pub fn dimension(&self) -> Result<i32> {
        let gb = self.gb()?;
        if gb.iter().any(|g| g.is_constant()) {
            return Ok(-1);
        }
        let lms: Vec<Monomial> = gb.iter().map(|g| *g.leading_monomial().unwrap()).collect();
        Ok(dimension_of_monomials(&lms, self.ring.nvars()) as i32)
    }

    /// `nvars - dim`; the unit ideal gets height `nvars + 1`, larger than
    /// any proper ideal.
    pub fn height(&self) -> Result<usize> {
        let n = self.ring.nvars();
        Ok(match self.dimension()? {
            -1 => n + 1,
            d => n - d as usize,
        })
    }
}

fn aux_name(r: &PolyRing) -> String {
    let mut name = "_u".to_string();
    while r.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// Largest size of a variable set containing the support of no monomial in
/// `lms`. Equals `dim k[x]/(lms)`.
pub fn dimension_of_monomials(lms: &[Monomial], nvars: usize) -> usize {
    let masks: Vec<u32> = lms.iter().map(|m| m.support_mask()).collect();
    let mut best = 0;
    for set in 0u32..(1u32 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && masks.iter().all(|&m| m & !set != 0) {
            best = size;
        }
    }
    best
}
