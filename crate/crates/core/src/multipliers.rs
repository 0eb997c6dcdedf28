//! Element-wise evidence for multipliers: Cohen-Macaulay multiplier
//! certificates, colon transfer for monomials in parameters, relation-type
//! perturbation and bounded superficiality checks.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monres::{monomial_colon, MonomialIdeal};
use crate::polyring::{Monomial, Polynomial};
use crate::quotient::QuotientRing;
use crate::rees::{rees_presentation, relation_type};

/// Outcome of `z * ((x_1..x_{k-1}) : x_k) ⊆ (x_1..x_{k-1})` for each `k`.
#[derive(Debug, Clone)]
pub struct MultiplierCertificate {
    pub z: Polynomial,
    pub sop: Vec<Polynomial>,
    /// The power of the original element that was tested.
    pub power: u32,
    pub checks: Vec<bool>,
    /// For each failed index, a colon element `c` with `z c` outside the
    /// prefix ideal.
    pub witnesses: Vec<Option<Polynomial>>,
    /// `z` is zero in `R`, so every check passes vacuously.
    pub degenerate: bool,
}

impl MultiplierCertificate {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|&c| c)
    }

    /// First index (1-based) whose check failed.
    pub fn first_failure(&self) -> Option<usize> {
        self.checks.iter().position(|&c| !c).map(|k| k + 1)
    }
}

fn require_sop(r: &QuotientRing, sop: &[Polynomial]) -> Result<()> {
    if !r.is_system_of_parameters(sop)? {
        return Err(Error::NotSystemOfParameters);
    }
    Ok(())
}

pub fn cm_multiplier_check(r: &QuotientRing, z: &Polynomial, sop: &[Polynomial]) -> Result<MultiplierCertificate> {
    require_sop(r, sop)?;
    certify(r, z, sop, 1)
}

fn certify(r: &QuotientRing, z: &Polynomial, sop: &[Polynomial], power: u32) -> Result<MultiplierCertificate> {
    let z = r.normal_form(z)?;
    let degenerate = z.is_zero();
    let mut checks = Vec::with_capacity(sop.len());
    let mut witnesses = Vec::with_capacity(sop.len());
    for k in 0..sop.len() {
        let prefix = &sop[..k];
        let colon = r.colon(prefix, &sop[k..=k])?;
        let target = r.lift(prefix);
        let mut witness = None;
        for c in &colon {
            if !target.contains(&r.ring().mul(&z, c))? {
                witness = Some(c.clone());
                break;
            }
        }
        checks.push(witness.is_none());
        witnesses.push(witness);
    }
    Ok(MultiplierCertificate { z, sop: sop.to_vec(), power, checks, witnesses, degenerate })
}

/// Tests `z, z^2, ..., z^max_power` and returns the first passing
/// certificate, or the last failing one.
pub fn cm_multiplier_power_search(
    r: &QuotientRing,
    z: &Polynomial,
    sop: &[Polynomial],
    max_power: u32,
) -> Result<MultiplierCertificate> {
    require_sop(r, sop)?;
    let ring = r.ring();
    let mut last = None;
    for e in 1..=max_power.max(1) {
        let cert = certify(r, &ring.pow(z, e), sop, e)?;
        if cert.passes() {
            return Ok(cert);
        }
        last = Some(cert);
    }
    Ok(last.expect("at least one power tested"))
}

/// Both containments of the colon transfer, for `I` and `X^m` written in
/// parameter exponents.
#[derive(Debug, Clone)]
pub struct TransferReport {
    /// `z (IR : x^m) ⊆ (I : X^m) R`.
    pub multiplied_inside: bool,
    /// `(I : X^m) R ⊆ (IR : x^m)`.
    pub expected_inside: bool,
    /// Generators of `(IR : x^m)` modulo `J`.
    pub actual_colon: Vec<Polynomial>,
    /// Generators of `(I : X^m) R`.
    pub expected_colon: Vec<Polynomial>,
}

impl TransferReport {
    pub fn passes(&self) -> bool {
        self.multiplied_inside && self.expected_inside
    }
}

fn eval_monomial(r: &QuotientRing, sop: &[Polynomial], m: &Monomial) -> Polynomial {
    let ring = r.ring();
    sop.iter().enumerate().fold(ring.one(), |acc, (i, x)| ring.mul(&acc, &ring.pow(x, m.exponent(i))))
}

pub fn colon_transfer_check(
    r: &QuotientRing,
    z: &Polynomial,
    sop: &[Polynomial],
    iexp: &MonomialIdeal,
    m: &Monomial,
) -> Result<TransferReport> {
    require_sop(r, sop)?;
    if iexp.nvars() != sop.len() || m.nvars() != sop.len() {
        return Err(Error::VariableCount(iexp.nvars(), sop.len()));
    }
    let ring = r.ring();
    let ir: Vec<Polynomial> = iexp.gens().iter().map(|g| eval_monomial(r, sop, g)).collect();
    let xm = eval_monomial(r, sop, m);
    let actual = r.colon(&ir, &[xm])?;
    let expected: Vec<Polynomial> =
        monomial_colon(iexp, m).gens().iter().map(|g| eval_monomial(r, sop, g)).collect();
    let z = r.normal_form(z)?;
    let scaled: Vec<Polynomial> = actual.iter().map(|c| ring.mul(&z, c)).collect();
    Ok(TransferReport {
        multiplied_inside: r.ideal_subset(&scaled, &expected)?,
        expected_inside: r.ideal_subset(&expected, &actual)?,
        actual_colon: actual,
        expected_colon: expected,
    })
}

#[derive(Debug, Clone)]
pub struct PerturbationReport {
    pub original: Vec<Polynomial>,
    pub perturbed: Vec<Polynomial>,
    pub rt_original: u32,
    pub rt_perturbed: u32,
    /// `alpha` passes the multiplier check on both tuples.
    pub certified: bool,
    pub certificates: [MultiplierCertificate; 2],
}

impl PerturbationReport {
    pub fn equal(&self) -> bool {
        self.rt_original == self.rt_perturbed
    }
}

/// Replaces `sop[index]` (0-based) by `sop[index] + alpha` and computes the
/// relation type of both tuples.
pub fn rt_perturbation_experiment(
    r: &QuotientRing,
    sop: &[Polynomial],
    alpha: &Polynomial,
    index: usize,
) -> Result<PerturbationReport> {
    if index >= sop.len() {
        return Err(Error::Precondition(format!("index {index} out of range for {} parameters", sop.len())));
    }
    require_sop(r, sop)?;
    let mut perturbed = sop.to_vec();
    perturbed[index] = r.normal_form(&r.ring().add(&sop[index], alpha))?;
    require_sop(r, &perturbed)?;
    let c1 = certify(r, alpha, sop, 1)?;
    let c2 = certify(r, alpha, &perturbed, 1)?;
    let rt_original = relation_type(&rees_presentation(r, sop)?)?;
    let rt_perturbed = relation_type(&rees_presentation(r, &perturbed)?)?;
    Ok(PerturbationReport {
        original: sop.to_vec(),
        perturbed,
        rt_original,
        rt_perturbed,
        certified: c1.passes() && c2.passes(),
        certificates: [c1, c2],
    })
}

/// Checks `(I^n : x) ∩ I^c = I^{n-1}` in `R` for `c < n <= nmax`. A zero
/// element is reported as not superficial.
pub fn superficial_check(r: &QuotientRing, igens: &[Polynomial], x: &Polynomial, c: u32, nmax: u32) -> Result<bool> {
    let base = r.lift(igens);
    if !base.contains(x)? {
        return Err(Error::NotInIdeal(r.format(x)));
    }
    if nmax <= c {
        return Err(Error::Precondition(format!("nmax {nmax} must exceed c {c}")));
    }
    if r.is_zero(x)? {
        return Ok(false);
    }
    let ring = r.ring();
    let i = Ideal::new(ring.clone(), igens.to_vec());
    let power = |n: u32| r.defining().sum(&i.power(n));
    let ic = power(c);
    for n in c + 1..=nmax {
        let lhs = power(n).colon(x)?.intersect(&ic)?;
        if !lhs.equals(&power(n - 1))? {
            return Ok(false);
        }
    }
    Ok(true)
}
