//! Monomial ideals, their mapping-cone resolutions, and the standard rank
//! and height conditions on finite free complexes.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing, Polynomial, PrimeField};
use crate::quotient::QuotientRing;

/// Largest `min(rows, cols)` accepted by the minor-based routines.
pub const MAX_MINOR_SIZE: usize = 8;
/// Largest dimension of either side accepted by the minor-based routines.
pub const MAX_MATRIX_SIDE: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Keeps only the minimal generators, sorted by exponent vector.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exponents().cmp(b.exponents())));
        all.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for m in all {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        min.sort_by(|a, b| b.exponents().cmp(a.exponents()));
        MonomialIdeal { nvars, gens: min }
    }

    /// Reads generators that must each be a single term.
    pub fn from_polynomials(ring: &PolyRing, polys: &[Polynomial]) -> Result<Self> {
        let mut gens = Vec::new();
        for p in polys {
            match p.terms() {
                [] => {}
                [t] => gens.push(t.mono),
                _ => return Err(Error::Precondition(format!("{} is not a monomial", ring.format(p)))),
            }
        }
        Ok(MonomialIdeal::new(ring.nvars(), gens))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn to_polynomials(&self, ring: &PolyRing) -> Vec<Polynomial> {
        self.gens.iter().map(|m| ring.monomial(*m)).collect()
    }
}

/// `(I : m)`, generated by `g / gcd(g, m)`.
pub fn monomial_colon(i: &MonomialIdeal, m: &Monomial) -> MonomialIdeal {
    MonomialIdeal::new(i.nvars, i.gens.iter().map(|g| g.div(&g.gcd(m))))
}

/// Stability under exchange moves for the variable order `order`, where
/// `order[0]` is the largest variable: for each generator `m` with largest
/// position variable `x_i`, every `(m / x_i) x_j` with `x_j` earlier in the
/// order must lie in `I`.
pub fn is_stable(i: &MonomialIdeal, order: &[usize]) -> Result<bool> {
    let mut seen = vec![false; i.nvars];
    if order.len() != i.nvars || order.iter().any(|&v| v >= i.nvars || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::Precondition("variable order is not a permutation".into()));
    }
    for m in &i.gens {
        let Some(pos) = order.iter().rposition(|&v| m.exponent(v) > 0) else { continue };
        let base = m.div(&Monomial::var(i.nvars, order[pos]));
        for &v in &order[..pos] {
            if !i.contains(&base.mul(&Monomial::var(i.nvars, v))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dense matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Polynomial>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Polynomial::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Polynomial) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, ring: &PolyRing, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let prods: Vec<Polynomial> =
                    (0..self.cols).map(|k| ring.mul(self.get(r, k), other.get(k, c))).collect();
                out.set(r, c, ring.sum(&prods));
            }
        }
        Ok(out)
    }

    /// Applies `f` to every entry.
    pub fn map(&self, mut f: impl FnMut(&Polynomial) -> Result<Polynomial>) -> Result<Matrix> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }
}

/// A finite free complex `0 -> G_n -> ... -> G_1 -> G_0` given by its
/// differentials; `maps[i - 1]` is `alpha_i : G_i -> G_{i-1}`.
#[derive(Debug, Clone)]
pub struct FreeComplex {
    ring: Arc<PolyRing>,
    maps: Vec<Matrix>,
}

impl FreeComplex {
    pub fn new(ring: Arc<PolyRing>, maps: Vec<Matrix>) -> Result<Self> {
        for (i, w) in maps.windows(2).enumerate() {
            if w[0].cols != w[1].rows {
                return Err(Error::Shape(format!(
                    "alpha_{} has {} columns but alpha_{} has {} rows",
                    i + 1,
                    w[0].cols,
                    i + 2,
                    w[1].rows
                )));
            }
        }
        Ok(FreeComplex { ring, maps })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Ranks `b_0..b_n` of the free modules.
    pub fn betti(&self) -> Vec<usize> {
        match self.maps.first() {
            None => vec![1],
            Some(m) => std::iter::once(m.rows).chain(self.maps.iter().map(|m| m.cols)).collect(),
        }
    }

    /// Expected ranks `r_1..r_{n+1}` with `r_i = sum_{t>=i} (-1)^(t-i) b_t`.
    pub fn expected_ranks(&self) -> Vec<i64> {
        let b = self.betti();
        let n = b.len() - 1;
        (1..=n + 1)
            .map(|i| (i..=n).map(|t| if (t - i) % 2 == 0 { b[t] as i64 } else { -(b[t] as i64) }).sum())
            .collect()
    }

    /// Whether consecutive differentials compose to zero in `r`.
    pub fn is_complex(&self, r: &QuotientRing) -> Result<bool> {
        for w in self.maps.windows(2) {
            let prod = w[0].mul(&self.ring, &w[1])?;
            for e in &prod.entries {
                if !r.is_zero(e)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Substitutes `images[i]` for variable `i` in every entry, reducing
    /// modulo the defining ideal of `target`.
    pub fn base_change(&self, target: &QuotientRing, images: &[Polynomial]) -> Result<FreeComplex> {
        let t = target.ring();
        let maps = self
            .maps
            .iter()
            .map(|m| m.map(|e| target.normal_form(&self.ring.substitute_all(e, images, t)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeComplex { ring: t.clone(), maps })
    }
}

// ---- multigraded resolutions with coefficient matrices ----

/// Resolution of `S/I` for monomial `I` where every differential is
/// multihomogeneous of degree zero: entry `(r, c)` of `maps[i]` is
/// `coeff * X^(degs[i+1][c] / degs[i][r])`.
#[derive(Debug, Clone)]
struct GradedRes {
    degs: Vec<Vec<Monomial>>,
    maps: Vec<Vec<Vec<u32>>>,
}

impl GradedRes {
    fn len(&self) -> usize {
        self.maps.len()
    }

    fn rank(&self, i: usize) -> usize {
        self.degs.get(i).map_or(0, Vec::len)
    }

    /// Matrix of `d_i` (from `F_i` to `F_{i-1}`), empty when out of range.
    fn map(&self, i: usize) -> Vec<Vec<u32>> {
        if i >= 1 && i <= self.maps.len() {
            self.maps[i - 1].clone()
        } else {
            zeros(self.rank(i - 1), self.rank(i))
        }
    }
}

fn zeros(r: usize, c: usize) -> Vec<Vec<u32>> {
    vec![vec![0; c]; r]
}

fn mat_mul(f: &PrimeField, a: &[Vec<u32>], b: &[Vec<u32>], inner: usize, cols: usize) -> Vec<Vec<u32>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).fold(0, |acc, k| f.add(acc, f.mul(row[k], b[k][c]))))
                .collect()
        })
        .collect()
}

/// Solves `a v = w` over the field, with `v` supported on `allowed`.
fn solve(f: &PrimeField, a: &[Vec<u32>], w: &[u32], allowed: &[usize]) -> Option<Vec<u32>> {
    let rows = a.len();
    let n = allowed.len();
    let mut m: Vec<Vec<u32>> = (0..rows)
        .map(|r| allowed.iter().map(|&c| a[r][c]).chain(std::iter::once(w[r])).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..rows).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, p);
        let inv = f.inv(m[row][col]);
        for x in m[row].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for r in 0..rows {
            if r != row && m[r][col] != 0 {
                let c = m[r][col];
                for k in 0..=n {
                    m[r][k] = f.sub(m[r][k], f.mul(c, m[row][k]));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if (row..rows).any(|r| m[r][n] != 0) {
        return None;
    }
    let mut v = vec![0; a.first().map_or(0, Vec::len)];
    for (r, &col) in pivots.iter().enumerate() {
        v[allowed[col]] = m[r][n];
    }
    Some(v)
}

fn direct_sum(a: &GradedRes, b: &GradedRes) -> GradedRes {
    let len = a.len().max(b.len());
    let degs = (0..=len)
        .map(|i| a.degs.get(i).into_iter().chain(b.degs.get(i)).flatten().copied().collect())
        .collect();
    let maps = (1..=len)
        .map(|i| {
            let (ar, ac, br, bc) = (a.rank(i - 1), a.rank(i), b.rank(i - 1), b.rank(i));
            let am = a.map(i);
            let bm = b.map(i);
            let mut m = zeros(ar + br, ac + bc);
            for r in 0..ar {
                m[r][..ac].copy_from_slice(&am[r][..ac]);
            }
            for r in 0..br {
                m[ar + r][ac..].copy_from_slice(&bm[r][..bc]);
            }
            m
        })
        .collect();
    GradedRes { degs, maps }
}

/// Removes pairs of basis elements joined by a unit entry until none
/// remain, leaving a minimal complex.
fn prune(f: &PrimeField, res: &mut GradedRes) {
    'outer: loop {
        for i in 1..=res.len() {
            let m = &res.maps[i - 1];
            let found = m.iter().enumerate().find_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .find(|&(c, &v)| v != 0 && res.degs[i][c] == res.degs[i - 1][r])
                    .map(|(c, _)| (r, c))
            });
            let Some((r, c)) = found else { continue };
            let m = res.maps[i - 1].clone();
            let uinv = f.inv(m[r][c]);
            let mut next = Vec::with_capacity(m.len() - 1);
            for (a, row) in m.iter().enumerate() {
                if a == r {
                    continue;
                }
                let factor = f.mul(row[c], uinv);
                next.push(
                    row.iter()
                        .enumerate()
                        .filter(|&(b, _)| b != c)
                        .map(|(b, &v)| f.sub(v, f.mul(factor, m[r][b])))
                        .collect(),
                );
            }
            res.maps[i - 1] = next;
            if i < res.len() {
                res.maps[i].remove(c);
            }
            if i >= 2 {
                for row in res.maps[i - 2].iter_mut() {
                    row.remove(r);
                }
            }
            res.degs[i].remove(c);
            res.degs[i - 1].remove(r);
            while res.degs.len() > 1 && res.degs.last().is_some_and(Vec::is_empty) {
                res.degs.pop();
                res.maps.pop();
            }
            continue 'outer;
        }
        return;
    }
}

fn resolve(f: &PrimeField, ideal: &MonomialIdeal) -> GradedRes {
    let n = ideal.nvars;
    let one = Monomial::one(n);
    match ideal.gens.len() {
        0 => return GradedRes { degs: vec![vec![one]], maps: Vec::new() },
        1 => return GradedRes { degs: vec![vec![one], vec![ideal.gens[0]]], maps: vec![vec![vec![1]]] },
        _ => {}
    }
    // split off the generator with the largest exponent of the last
    // variable, ties to the grevlex-largest
    let last = n - 1;
    let idx = (0..ideal.gens.len())
        .max_by(|&a, &b| {
            let (ma, mb) = (&ideal.gens[a], &ideal.gens[b]);
            ma.exponent(last)
                .cmp(&mb.exponent(last))
                .then_with(|| crate::polyring::MonomialOrder::Grevlex.cmp(ma, mb))
        })
        .unwrap();
    let m = ideal.gens[idx];
    let rest = MonomialIdeal::new(n, ideal.gens.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, g)| *g));
    let colon = monomial_colon(&rest, &m);

    // A' resolves S/(m (I':m)): same differentials, degrees shifted by m
    let mut a = resolve(f, &colon);
    for d in a.degs.iter_mut().skip(1) {
        for g in d.iter_mut() {
            *g = g.mul(&m);
        }
    }
    let b = direct_sum(&resolve(f, &rest), &resolve(f, &MonomialIdeal::new(n, [m])));

    // chain map phi: A' -> B over 1 -> (1, -1)
    let mut phi: Vec<Vec<Vec<u32>>> = vec![vec![vec![1], vec![f.neg(1)]]];
    for i in 1..=a.len() {
        let target = mat_mul(f, &phi[i - 1], &a.map(i), a.rank(i - 1), a.rank(i));
        let bi = b.map(i);
        let mut next = zeros(b.rank(i), a.rank(i));
        for c in 0..a.rank(i) {
            let deg = a.degs[i][c];
            let w: Vec<u32> = target.iter().map(|row| row[c]).collect();
            if w.iter().all(|&x| x == 0) {
                continue;
            }
            let allowed: Vec<usize> = (0..b.rank(i)).filter(|&k| b.degs[i][k].divides(&deg)).collect();
            let v = solve(f, &bi, &w, &allowed).expect("B is acyclic, so the chain map lifts");
            for (k, x) in v.into_iter().enumerate() {
                next[k][c] = x;
            }
        }
        phi.push(next);
    }

    // cone: C_i = B_i + A'_{i-1}, d = [[dB, phi], [0, -dA']]
    let len = b.len().max(a.len() + 1);
    let degs: Vec<Vec<Monomial>> = (0..=len)
        .map(|i| {
            let mut d = b.degs.get(i).cloned().unwrap_or_default();
            if i >= 1 {
                d.extend(a.degs.get(i - 1).into_iter().flatten());
            }
            d
        })
        .collect();
    let mut maps = Vec::with_capacity(len);
    for i in 1..=len {
        let (br0, bc) = (b.rank(i - 1), b.rank(i));
        let (ar0, ac) = (if i >= 2 { a.rank(i - 2) } else { 0 }, a.rank(i - 1));
        let mut mtx = zeros(br0 + ar0, bc + ac);
        let bm = b.map(i);
        for r in 0..br0 {
            mtx[r][..bc].copy_from_slice(&bm[r][..bc]);
            if let Some(p) = phi.get(i - 1) {
                for c in 0..ac {
                    mtx[r][bc + c] = p[r][c];
                }
            }
        }
        if i >= 2 {
            let am = a.map(i - 1);
            for r in 0..ar0 {
                for c in 0..ac {
                    mtx[br0 + r][bc + c] = f.neg(am[r][c]);
                }
            }
        }
        maps.push(mtx);
    }
    let mut out = GradedRes { degs, maps };
    prune(f, &mut out);
    out
}

/// Minimal free resolution of `S/I` obtained by iterated mapping cones of
/// `0 -> S/m(I':m) -> S/I' + S/m -> S/I -> 0`, pruned of unit entries.
pub fn mapping_cone_resolution(ring: &Arc<PolyRing>, ideal: &MonomialIdeal) -> Result<FreeComplex> {
    if ideal.nvars != ring.nvars() {
        return Err(Error::VariableCount(ideal.nvars, ring.nvars()));
    }
    let f = *ring.field();
    let res = resolve(&f, ideal);
    let maps = res
        .maps
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let rows = m
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(c, &v)| {
                            if v == 0 {
                                ring.zero()
                            } else {
                                ring.term(v, res.degs[i + 1][c].div(&res.degs[i][r]))
                            }
                        })
                        .collect()
                })
                .collect();
            Matrix::from_rows(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    FreeComplex::new(ring.clone(), maps)
}

/// One column per pair `i < j`, with `-lcm/g_i` in row `i` and `lcm/g_j` in
/// row `j`.
pub fn pairwise_syzygy_matrix(ring: &PolyRing, gens: &[Monomial]) -> Result<Matrix> {
    if gens.len() < 2 {
        return Err(Error::Precondition("need at least two generators".into()));
    }
    let pairs: Vec<(usize, usize)> =
        (0..gens.len()).flat_map(|i| (i + 1..gens.len()).map(move |j| (i, j))).collect();
    let mut m = Matrix::zero(gens.len(), pairs.len());
    let minus_one = ring.field().neg(1);
    for (c, &(i, j)) in pairs.iter().enumerate() {
        let l = gens[i].lcm(&gens[j]);
        m.set(i, c, ring.term(minus_one, l.div(&gens[i])));
        m.set(j, c, ring.monomial(l.div(&gens[j])));
    }
    Ok(m)
}

fn check_size(m: &Matrix) -> Result<()> {
    if m.rows.min(m.cols) > MAX_MINOR_SIZE || m.rows.max(m.cols) > MAX_MATRIX_SIDE {
        return Err(Error::MatrixTooLarge { rows: m.rows, cols: m.cols, max: MAX_MINOR_SIZE });
    }
    Ok(())
}

/// Memoized Laplace expansion of minors modulo `J`.
struct Minors<'a> {
    r: &'a QuotientRing,
    m: &'a Matrix,
    memo: HashMap<(u32, u32), Polynomial>,
}

impl<'a> Minors<'a> {
    fn new(r: &'a QuotientRing, m: &'a Matrix) -> Self {
        Minors { r, m, memo: HashMap::new() }
    }

    fn det(&mut self, rows: u32, cols: u32) -> Result<Polynomial> {
        if rows == 0 {
            return Ok(self.r.ring().one());
        }
        if let Some(v) = self.memo.get(&(rows, cols)) {
            return Ok(v.clone());
        }
        let ring = self.r.ring().clone();
        let r0 = rows.trailing_zeros() as usize;
        let rest = rows & !(1 << r0);
        let mut acc = ring.zero();
        let mut sign = true;
        for c in 0..self.m.cols {
            if cols & (1 << c) == 0 {
                continue;
            }
            let e = self.m.get(r0, c).clone();
            if !e.is_zero() {
                let sub = self.det(rest, cols & !(1 << c))?;
                let p = ring.mul(&e, &sub);
                acc = if sign { ring.add(&acc, &p) } else { ring.sub(&acc, &p) };
            }
            sign = !sign;
        }
        let v = self.r.normal_form(&acc)?;
        self.memo.insert((rows, cols), v.clone());
        Ok(v)
    }

    fn subsets(n: usize, k: usize) -> Vec<u32> {
        (0u32..(1u32 << n)).filter(|s| s.count_ones() as usize == k).collect()
    }

    /// Nonzero `t x t` minors, up to scalars.
    fn all(&mut self, t: usize) -> Result<Vec<Polynomial>> {
        let ring = self.r.ring().clone();
        let mut out: Vec<Polynomial> = Vec::new();
        for rs in Self::subsets(self.m.rows, t) {
            for cs in Self::subsets(self.m.cols, t) {
                let d = self.det(rs, cs)?;
                if !d.is_zero() {
                    let d = ring.make_monic(&d);
                    if !out.contains(&d) {
                        out.push(d);
                    }
                }
            }
        }
        Ok(out)
    }

    fn any_nonzero(&mut self, t: usize) -> Result<bool> {
        for rs in Self::subsets(self.m.rows, t) {
            for cs in Self::subsets(self.m.cols, t) {
                if !self.det(rs, cs)?.is_zero() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Largest `t` with a `t x t` minor nonzero in `R`.
pub fn rank_over_quotient(r: &QuotientRing, m: &Matrix) -> Result<usize> {
    check_size(m)?;
    let mut minors = Minors::new(r, m);
    let mut rank = 0;
    for t in 1..=m.rows.min(m.cols) {
        if !minors.any_nonzero(t)? {
            break;
        }
        rank = t;
    }
    Ok(rank)
}

/// Generators of the ideal `I_t(M)` of `t x t` minors, computed in `R`.
pub fn minors_ideal(r: &QuotientRing, m: &Matrix, t: usize) -> Result<Vec<Polynomial>> {
    check_size(m)?;
    if t == 0 {
        return Ok(vec![r.ring().one()]);
    }
    if t > m.rows.min(m.cols) {
        return Ok(Vec::new());
    }
    Minors::new(r, m).all(t)
}

/// One row of the rank and height table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionRow {
    pub index: usize,
    pub expected_rank: i64,
    pub rank: usize,
    /// Height of `I_{r_i}(alpha_i)`; `dim R + 1` for the unit ideal.
    pub height: usize,
    pub rank_ok: bool,
    pub height_ok: bool,
    /// Product of parameter ideals inside the radical of `I_{r_i}`, when
    /// parameters were supplied.
    pub radical_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankHeightReport {
    pub rows: Vec<ConditionRow>,
}

impl RankHeightReport {
    pub fn rank_ok(&self) -> bool {
        self.rows.iter().all(|r| r.rank_ok)
    }

    pub fn height_ok(&self) -> bool {
        self.rows.iter().all(|r| r.height_ok)
    }

    pub fn radical_ok(&self) -> bool {
        self.rows.iter().all(|r| r.radical_ok != Some(false))
    }

    pub fn passes(&self) -> bool {
        self.rank_ok() && self.height_ok() && self.radical_ok()
    }
}

/// Checks `rank alpha_i = r_i` and `height I_{r_i}(alpha_i) >= i` for every
/// differential. With `params = (x_1..x_d)` it also checks that the product
/// of all ideals `(x_{j_1}..x_{j_i})` lies in the radical of `I_{r_i}`. The
/// radical of that product is generated by the squarefree products of
/// `d - i + 1` distinct parameters, which is what gets tested.
pub fn verify_rank_height(
    r: &QuotientRing,
    c: &FreeComplex,
    params: Option<&[Polynomial]>,
) -> Result<RankHeightReport> {
    if c.ring.names() != r.ring().names() {
        return Err(Error::Shape("complex lives over a different ring".into()));
    }
    let expected = c.expected_ranks();
    let mut rows = Vec::with_capacity(c.length());
    for (k, m) in c.maps.iter().enumerate() {
        let i = k + 1;
        let ri = expected[k];
        let rank = rank_over_quotient(r, m)?;
        let rank_ok = ri >= 0 && rank as i64 == ri;
        let t = ri.max(0) as usize;
        let minors = minors_ideal(r, m, t)?;
        let height = r.height(&minors)?;
        let radical_ok = match params {
            None => None,
            Some(xs) => Some(parameter_products_in_radical(r, xs, i, &minors)?),
        };
        rows.push(ConditionRow { index: i, expected_rank: ri, rank, height, rank_ok, height_ok: height >= i, radical_ok });
    }
    Ok(RankHeightReport { rows })
}

fn parameter_products_in_radical(r: &QuotientRing, xs: &[Polynomial], i: usize, minors: &[Polynomial]) -> Result<bool> {
    let d = xs.len();
    if i > d {
        return r.lift(minors).is_unit();
    }
    let ideal = r.lift(minors);
    let ring = r.ring();
    let size = d - i + 1;
    for set in 0u32..(1u32 << d) {
        if set.count_ones() as usize != size {
            continue;
        }
        let prod = (0..d).filter(|&j| set & (1 << j) != 0).fold(ring.one(), |acc, j| ring.mul(&acc, &xs[j]));
        if !ideal.radical_contains(&prod)? {
            return Ok(false);
        }
    }
    Ok(true)
}
