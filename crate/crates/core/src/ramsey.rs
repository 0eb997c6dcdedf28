//! Chains of tuples under the componentwise order, the finite thresholds
//! `M(d, k, l)` and the constant recursion built from them.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Tuple = Vec<u32>;

/// `A ⪯ B` componentwise.
pub fn dominated(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Tuples `A_1..A_M` of width `d` with `|A_i| = k + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleSequence {
    d: usize,
    k: u32,
    tuples: Vec<Tuple>,
}

impl TupleSequence {
    pub fn new(d: usize, k: u32, tuples: Vec<Tuple>) -> Result<Self> {
        for (i, t) in tuples.iter().enumerate() {
            if t.len() != d {
                return Err(Error::Precondition(format!("tuple {} has width {}, expected {d}", i + 1, t.len())));
            }
            let sum: u64 = t.iter().map(|&x| x as u64).sum();
            if sum != k as u64 + i as u64 + 1 {
                return Err(Error::Precondition(format!("tuple {} has sum {sum}, expected {}", i + 1, k as usize + i + 1)));
            }
        }
        Ok(TupleSequence { d, k, tuples })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn tuples(&self) -> &[Tuple] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

/// A longest chain, as 0-based indices. Among longest chains the
/// lexicographically smallest index sequence is returned.
pub fn longest_chain(seq: &TupleSequence) -> Vec<usize> {
    let a = &seq.tuples;
    let m = a.len();
    // from[i] = longest chain starting at i
    let mut from = vec![1usize; m];
    for i in (0..m).rev() {
        for j in i + 1..m {
            if dominated(&a[i], &a[j]) {
                from[i] = from[i].max(from[j] + 1);
            }
        }
    }
    let Some(&best) = from.iter().max() else { return Vec::new() };
    let mut out = Vec::with_capacity(best);
    let mut need = best;
    let mut prev: Option<usize> = None;
    for i in 0..m {
        if need == 0 {
            break;
        }
        let fits = prev.is_none_or(|p| dominated(&a[p], &a[i]));
        if fits && from[i] == need {
            out.push(i);
            prev = Some(i);
            need -= 1;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseySearch {
    /// Every sequence of length `m` has an `l`-chain; `witness` has length
    /// `m - 1` and none.
    Found { m: usize, witness: TupleSequence },
    /// Some chain-free sequence reaches length `m_max`.
    UnknownAbove { m_max: usize, witness: TupleSequence },
}

impl RamseySearch {
    pub fn value(&self) -> Option<usize> {
        match self {
            RamseySearch::Found { m, .. } => Some(*m),
            RamseySearch::UnknownAbove { .. } => None,
        }
    }
}

fn compositions(total: u32, parts: usize) -> Vec<Tuple> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// For each level `v = 1..l-1`, the minimal tuples among those ending a
/// chain of length at least `v`.
type Frontier = Vec<Vec<Tuple>>;

struct Search {
    d: usize,
    k: u32,
    l: usize,
    cap: usize,
    memo: HashMap<(usize, Frontier), Vec<Tuple>>,
}

impl Search {
    /// Longest chain-free continuation (capped) from a state with `len`
    /// tuples placed.
    fn extend(&mut self, len: usize, frontier: &Frontier) -> Vec<Tuple> {
        if len >= self.cap {
            return Vec::new();
        }
        let key = (len, frontier.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut best: Vec<Tuple> = Vec::new();
        for b in compositions(self.k + len as u32 + 1, self.d) {
            // chain length ending at b
            let level = (1..self.l).rev().find(|&v| frontier[v - 1].iter().any(|a| dominated(a, &b))).map_or(1, |v| v + 1);
            if level >= self.l {
                continue;
            }
            let mut next = frontier.clone();
            for v in 1..=level {
                let set = &mut next[v - 1];
                if !set.iter().any(|a| dominated(a, &b)) {
                    set.retain(|a| !dominated(&b, a));
                    set.push(b.clone());
                    set.sort();
                }
            }
            let mut tail = self.extend(len + 1, &next);
            if tail.len() + 1 > best.len() {
                tail.insert(0, b);
                best = tail;
                if len + best.len() >= self.cap {
                    break;
                }
            }
        }
        self.memo.insert(key, best.clone());
        best
    }
}

/// Smallest `M <= m_max` such that every valid sequence of length `M`
/// contains a chain of length `l`, by exhaustive search for chain-free
/// sequences.
pub fn ramsey_number_search(d: usize, k: u32, l: usize, m_max: usize) -> Result<RamseySearch> {
    if d == 0 || l == 0 {
        return Err(Error::Precondition("d and l must be positive".into()));
    }
    let mut s = Search { d, k, l, cap: m_max, memo: HashMap::new() };
    let longest = s.extend(0, &vec![Vec::new(); l - 1]);
    let witness = TupleSequence::new(d, k, longest)?;
    if witness.len() >= m_max {
        return Ok(RamseySearch::UnknownAbove { m_max, witness });
    }
    Ok(RamseySearch::Found { m: witness.len() + 1, witness })
}

/// `K_i`, `M_i` and `N_i` for `i = 1..=steps`; `M_1` is recorded as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundConstants {
    pub d: usize,
    pub l: u128,
    pub k: Vec<u128>,
    pub m: Vec<u128>,
    pub n: Vec<u128>,
}

fn binomial(n: u128, r: u128) -> Result<u128> {
    let r = r.min(n - r.min(n));
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul(n - i).ok_or(Error::Overflow("binomial coefficient"))? / (i + 1);
    }
    Ok(acc)
}

/// Number of `(i-1)`-tuples of nonnegative integers with sum at most
/// `k_prev`: `sum_{l=0}^{k_prev} C(l+i-2, i-2) = C(k_prev+i-1, i-1)`.
pub fn tuple_count(i: u128, k_prev: u128) -> Result<u128> {
    if i < 2 {
        return Err(Error::Precondition("tuple count needs i >= 2".into()));
    }
    let top = k_prev.checked_add(i - 1).ok_or(Error::Overflow("tuple count"))?;
    binomial(top, i - 1)
}

/// `K_1 = M(d,1,L)`, then `M_i = C(K_{i-1}+i-1, i-1)`,
/// `N_i = M(d, 2K_{i-1}, M_i(L-1)+1)` and `K_i = 2K_{i-1} + N_i`.
pub fn bound_constants(
    d: usize,
    l: u128,
    steps: usize,
    mut oracle: impl FnMut(usize, u128, u128) -> Result<u128>,
) -> Result<BoundConstants> {
    if l == 0 || steps == 0 {
        return Err(Error::Precondition("L and the number of steps must be positive".into()));
    }
    let k1 = oracle(d, 1, l)?;
    let mut out = BoundConstants { d, l, k: vec![k1], m: vec![0], n: vec![k1] };
    for i in 2..=steps as u128 {
        let prev = *out.k.last().unwrap();
        let mi = tuple_count(i, prev)?;
        let twice = prev.checked_mul(2).ok_or(Error::Overflow("2 K_(i-1)"))?;
        let arg = mi
            .checked_mul(l - 1)
            .and_then(|v| v.checked_add(1))
            .ok_or(Error::Overflow("M_i (L-1) + 1"))?;
        let ni = oracle(d, twice, arg)?;
        let ki = twice.checked_add(ni).ok_or(Error::Overflow("K_i"))?;
        out.m.push(mi);
        out.n.push(ni);
        out.k.push(ki);
    }
    Ok(out)
}

/// `M(d,k,l)` via exhaustive search, usable as an oracle. Fails when the
/// arguments do not fit the search or the answer exceeds `m_max`.
pub fn search_oracle(m_max: usize) -> impl FnMut(usize, u128, u128) -> Result<u128> {
    move |d, k, l| {
        let k = u32::try_from(k).map_err(|_| Error::Overflow("k for search"))?;
        let l = usize::try_from(l).map_err(|_| Error::Overflow("l for search"))?;
        match ramsey_number_search(d, k, l, m_max)? {
            RamseySearch::Found { m, .. } => Ok(m as u128),
            RamseySearch::UnknownAbove { m_max, .. } => {
                Err(Error::Precondition(format!("M({d},{k},{l}) unknown above {m_max}")))
            }
        }
    }
}
