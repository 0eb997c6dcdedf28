//! Buchberger's algorithm with the Gebauer-Moller pair criteria and the
//! normal selection strategy, optionally tracking cofactors.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing, Polynomial, Term};

/// A basis element together with its cofactors with respect to the tracked
/// input generators.
#[derive(Debug, Clone)]
pub(crate) struct Tagged {
    pub poly: Polynomial,
    pub tags: Vec<Polynomial>,
}

/// Restricts the computation to S-pairs whose weighted lcm degree is at most
/// `bound`. Only meaningful for inputs homogeneous in that grading.
#[derive(Debug, Clone)]
pub(crate) struct Truncation {
    pub weights: Vec<u32>,
    pub bound: u64,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Basis {
    elems: Vec<Tagged>,
    lms: Vec<Monomial>,
    active: Vec<bool>,
}

fn tags_update(ring: &PolyRing, tags: &mut [Polynomial], c: u32, m: &Monomial, other: &[Polynomial]) {
    for (t, o) in tags.iter_mut().zip(other) {
        if !o.is_zero() {
            *t = ring.add_scaled(t, c, m, o);
        }
    }
}

/// Fully reduces `f` modulo `divisors`, carrying tags along. Divisors are
/// scanned in order; the first whose leading monomial divides wins.
pub(crate) fn reduce_tagged(ring: &PolyRing, f: Tagged, divisors: &[&Tagged]) -> Tagged {
    let field = ring.field();
    let lms: Vec<(Monomial, u32, u32)> = divisors
        .iter()
        .map(|g| {
            let lt = g.poly.leading_term().expect("nonzero divisor");
            (lt.mono, field.inv(lt.coeff), lt.mono.support_mask())
        })
        .collect();
    let Tagged { poly, mut tags } = f;
    let mut rest: Vec<Term> = poly.into_terms();
    let mut head = 0;
    let mut out: Vec<Term> = Vec::new();
    let mut scratch = Vec::new();
    while head < rest.len() {
        let t = rest[head];
        let mask = t.mono.support_mask();
        let hit = lms.iter().position(|(m, _, gm)| gm & !mask == 0 && m.divides(&t.mono));
        match hit {
            None => {
                out.push(t);
                head += 1;
            }
            Some(k) => {
                let (m, inv, _) = lms[k];
                let q = t.mono.div(&m);
                let c = field.neg(field.mul(t.coeff, inv));
                let g = divisors[k];
                scratch.clear();
                // the leading terms cancel, skip them on both sides
                ring.merge_into(&mut scratch, &rest[head + 1..], c, &q, &g.poly.terms()[1..]);
                std::mem::swap(&mut rest, &mut scratch);
                head = 0;
                tags_update(ring, &mut tags, c, &q, &g.tags);
            }
        }
    }
    Tagged { poly: Polynomial::from_sorted(out), tags }
}

/// Plain full reduction of `f` by `basis`.
pub fn reduce(ring: &PolyRing, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let tagged: Vec<Tagged> =
        basis.iter().filter(|g| !g.is_zero()).map(|g| Tagged { poly: g.clone(), tags: Vec::new() }).collect();
    let refs: Vec<&Tagged> = tagged.iter().collect();
    reduce_tagged(ring, Tagged { poly: f.clone(), tags: Vec::new() }, &refs).poly
}

fn make_monic(ring: &PolyRing, t: Tagged) -> Tagged {
    let c = t.poly.leading_coeff().expect("nonzero");
    if c == 1 {
        return t;
    }
    let inv = ring.field().inv(c);
    Tagged { poly: ring.scale(inv, &t.poly), tags: t.tags.iter().map(|g| ring.scale(inv, g)).collect() }
}

fn pair_key_cmp(ring: &PolyRing, a: &Pair, b: &Pair) -> Ordering {
    a.lcm
        .degree()
        .cmp(&b.lcm.degree())
        .then_with(|| ring.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
}

/// Gebauer-Moller update when the new element `h` joins the basis.
fn update(basis: &mut Basis, pairs: &mut Vec<Pair>, h: usize) {
    let hm = basis.lms[h];
    let mut cands: Vec<(Pair, bool)> = (0..h)
        .filter(|&g| basis.active[g])
        .map(|g| {
            let gm = basis.lms[g];
            (Pair { i: g, j: h, lcm: gm.lcm(&hm) }, gm.is_coprime(&hm))
        })
        .collect();

    // criterion M: drop pairs whose lcm is properly divisible by another's
    let n = cands.len();
    let mut keep = vec![true; n];
    for a in 0..n {
        for b in 0..n {
            if a != b && cands[b].0.lcm != cands[a].0.lcm && cands[b].0.lcm.divides(&cands[a].0.lcm) {
                keep[a] = false;
                break;
            }
        }
    }
    // criterion F: one pair per lcm, none at all if a coprime pair has that lcm
    let mut chosen: Vec<(Pair, bool)> = Vec::new();
    for (k, c) in cands.drain(..).enumerate() {
        if !keep[k] {
            continue;
        }
        if let Some(prev) = chosen.iter_mut().find(|(p, _)| p.lcm == c.0.lcm) {
            prev.1 |= c.1;
        } else {
            chosen.push(c);
        }
    }
    // old pairs made redundant by h
    pairs.retain(|p| {
        !(hm.divides(&p.lcm)
            && basis.lms[p.i].lcm(&hm) != p.lcm
            && basis.lms[p.j].lcm(&hm) != p.lcm)
    });
    // criterion B1 (coprime leading monomials)
    pairs.extend(chosen.into_iter().filter(|(_, coprime)| !coprime).map(|(p, _)| p));

    for g in 0..h {
        if basis.active[g] && hm.divides(&basis.lms[g]) {
            basis.active[g] = false;
        }
    }
}

/// Core Buchberger loop. Returns a reduced Groebner basis with tags.
pub(crate) fn groebner_tagged(
    ring: &PolyRing,
    input: Vec<Tagged>,
    trunc: Option<&Truncation>,
) -> Result<Vec<Tagged>> {
    let cap = ring.degree_cap();
    let mut basis = Basis { elems: Vec::new(), lms: Vec::new(), active: Vec::new() };
    let mut pairs: Vec<Pair> = Vec::new();

    let push = |basis: &mut Basis, pairs: &mut Vec<Pair>, t: Tagged| {
        let t = make_monic(ring, t);
        let lm = *t.poly.leading_monomial().unwrap();
        basis.elems.push(t);
        basis.lms.push(lm);
        basis.active.push(true);
        let h = basis.elems.len() - 1;
        update(basis, pairs, h);
    };

    let mut input = input;
    input.retain(|t| !t.poly.is_zero());
    input.sort_by(|a, b| {
        let (x, y) = (a.poly.leading_monomial().unwrap(), b.poly.leading_monomial().unwrap());
        x.degree().cmp(&y.degree()).then_with(|| ring.cmp(x, y))
    });
    for f in input {
        let divs: Vec<&Tagged> = (0..basis.elems.len()).filter(|&k| basis.active[k]).map(|k| &basis.elems[k]).collect();
        let r = reduce_tagged(ring, f, &divs);
        if !r.poly.is_zero() {
            push(&mut basis, &mut pairs, r);
        }
    }

    loop {
        if let Some(tr) = trunc {
            pairs.retain(|p| p.lcm.weighted_degree(&tr.weights) <= tr.bound);
        }
        let Some(best) = (0..pairs.len()).min_by(|&a, &b| pair_key_cmp(ring, &pairs[a], &pairs[b])) else {
            break;
        };
        let p = pairs.swap_remove(best);
        if p.lcm.degree() > cap {
            return Err(Error::DegreeCap { cap, degree: p.lcm.degree() });
        }
        let (f, g) = (&basis.elems[p.i], &basis.elems[p.j]);
        let (mf, mg) = (p.lcm.div(&basis.lms[p.i]), p.lcm.div(&basis.lms[p.j]));
        let field = ring.field();
        let neg1 = field.neg(1);
        // both monic: S = mf*f - mg*g
        let spoly = ring.add_scaled(&ring.mul_term(1, &mf, &f.poly), neg1, &mg, &g.poly);
        let mut tags: Vec<Polynomial> = f.tags.iter().map(|t| ring.mul_term(1, &mf, t)).collect();
        tags_update(ring, &mut tags, neg1, &mg, &g.tags);
        let divs: Vec<&Tagged> = (0..basis.elems.len()).filter(|&k| basis.active[k]).map(|k| &basis.elems[k]).collect();
        let r = reduce_tagged(ring, Tagged { poly: spoly, tags }, &divs);
        if !r.poly.is_zero() {
            push(&mut basis, &mut pairs, r);
        }
    }

    // interreduce the minimal basis
    let mut minimal: Vec<Tagged> =
        (0..basis.elems.len()).filter(|&k| basis.active[k]).map(|k| basis.elems[k].clone()).collect();
    minimal.sort_by(|a, b| ring.cmp(a.poly.leading_monomial().unwrap(), b.poly.leading_monomial().unwrap()));
    let mut reduced: Vec<Tagged> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let lead = minimal[k].poly.terms()[0];
        let others: Vec<&Tagged> = minimal.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, t)| t).collect();
        let tail = Tagged {
            poly: Polynomial::from_sorted(minimal[k].poly.terms()[1..].to_vec()),
            tags: minimal[k].tags.clone(),
        };
        let r = reduce_tagged(ring, tail, &others);
        let mut terms = vec![lead];
        terms.extend_from_slice(r.poly.terms());
        reduced.push(make_monic(ring, Tagged { poly: Polynomial::from_sorted(terms), tags: r.tags }));
    }
    reduced.sort_by(|a, b| ring.cmp(b.poly.leading_monomial().unwrap(), a.poly.leading_monomial().unwrap()));
    Ok(reduced)
}

/// Reduced Groebner basis of the ideal generated by `gens`, sorted by
/// descending leading monomial.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let input = gens.iter().map(|g| Tagged { poly: g.clone(), tags: Vec::new() }).collect();
    Ok(groebner_tagged(ring, input, None)?.into_iter().map(|t| t.poly).collect())
}

/// Groebner basis truncated at weighted degree `bound`. Valid for
/// membership of homogeneous elements of weighted degree at most `bound`,
/// when the generators are homogeneous and the order refines the grading.
pub(crate) fn buchberger_truncated(
    ring: &PolyRing,
    gens: &[Polynomial],
    weights: &[u32],
    bound: u64,
) -> Result<Vec<Polynomial>> {
    let input = gens.iter().map(|g| Tagged { poly: g.clone(), tags: Vec::new() }).collect();
    let tr = Truncation { weights: weights.to_vec(), bound };
    Ok(groebner_tagged(ring, input, Some(&tr))?.into_iter().map(|t| t.poly).collect())
}

/// Finds cofactors `c_i` with `h - sum c_i * tracked_i` in the ideal
/// generated by `fixed`, or `None` when `h` is not in `fixed + (tracked)`.
pub fn lift(
    ring: &PolyRing,
    fixed: &[Polynomial],
    tracked: &[Polynomial],
    h: &Polynomial,
) -> Result<Option<Vec<Polynomial>>> {
    let k = tracked.len();
    let mut input: Vec<Tagged> =
        fixed.iter().map(|g| Tagged { poly: g.clone(), tags: vec![Polynomial::zero(); k] }).collect();
    for (i, g) in tracked.iter().enumerate() {
        let mut tags = vec![Polynomial::zero(); k];
        tags[i] = ring.one();
        input.push(Tagged { poly: g.clone(), tags });
    }
    let gb = groebner_tagged(ring, input, None)?;
    let refs: Vec<&Tagged> = gb.iter().collect();
    let r = reduce_tagged(ring, Tagged { poly: h.clone(), tags: vec![Polynomial::zero(); k] }, &refs);
    if !r.poly.is_zero() {
        return Ok(None);
    }
    // h - sum(q_k G_k) = 0 and the tags accumulated -sum(q_k tags(G_k))
    Ok(Some(r.tags.iter().map(|t| ring.neg(t)).collect()))
}
