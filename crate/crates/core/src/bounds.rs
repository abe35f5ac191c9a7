//! Counting lower bounds and lemma-based hardness certificates for weight
//! vectors.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::weighted::{solve_weighted, subset_sums, weighted_terminal, WeightVector};

/// Number of ones in the binary representation of `n`.
#[inline]
pub fn b(n: u64) -> u32 {
    n.count_ones()
}

/// 2-adic valuation with an explicit infinite value for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    /// `k - self`, clamped at zero; an infinite valuation gives no information.
    pub fn bound_from(self, k: u32) -> u32 {
        match self {
            Valuation::Finite(m) => k.saturating_sub(m),
            Valuation::Infinite => 0,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(m) => write!(f, "{m}"),
            Valuation::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(m) => s.serialize_u32(*m),
            Valuation::Infinite => s.serialize_str("infinite"),
        }
    }
}

pub fn mu(k: &BigUint) -> Valuation {
    match k.trailing_zeros() {
        Some(z) => Valuation::Finite(z as u32),
        None => Valuation::Infinite,
    }
}

pub fn mu_u64(k: u64) -> Valuation {
    mu(&BigUint::from(k))
}

/// Number of sign vectors giving each signed sum, indexed by `sum + total`.
fn signed_sum_counts(weights: &[u64]) -> (i64, Vec<BigUint>) {
    let total: u64 = weights.iter().sum();
    let width = 2 * total as usize + 1;
    let mut counts = vec![BigUint::zero(); width];
    counts[total as usize] = BigUint::one();
    let mut lo = total as usize;
    let mut hi = total as usize;
    for &w in weights {
        let w = w as usize;
        let mut next = vec![BigUint::zero(); width];
        for s in lo..=hi {
            if counts[s].is_zero() {
                continue;
            }
            next[s + w] += &counts[s];
            next[s - w] += &counts[s];
        }
        counts = next;
        lo -= w;
        hi += w;
    }
    (total as i64, counts)
}

fn count_at(weights: &[u64], target: i64) -> BigUint {
    let (offset, counts) = signed_sum_counts(weights);
    let idx = target + offset;
    if idx < 0 || idx as usize >= counts.len() {
        BigUint::zero()
    } else {
        counts[idx as usize].clone()
    }
}

/// Number of balanced colorings (sign vectors summing to zero).
pub fn count_balanced(w: &WeightVector) -> BigUint {
    count_at(w.as_slice(), 0)
}

/// Number of colorings in which ball `i`'s color class has a strict weight majority.
pub fn count_majority_with(w: &WeightVector, i: usize) -> BigUint {
    let others: Vec<u64> = w
        .as_slice()
        .iter()
        .enumerate()
        .filter(|&(x, _)| x != i)
        .map(|(_, &v)| v)
        .collect();
    let (offset, counts) = signed_sum_counts(&others);
    let wi = w[i] as i64;
    let mut sum = BigUint::zero();
    for (idx, c) in counts.iter().enumerate() {
        if wi + idx as i64 - offset > 0 {
            sum += c;
        }
    }
    sum * 2u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Source {
    /// `k - mu(p)` from the number of balanced colorings.
    DectreeP,
    /// `k - 1 - mu(p_i)` from the colorings where ball `i` is in the majority.
    DectreePi,
    Suly1I,
    Suly1Ii,
    Suly1formaI,
    Suly1formaIi,
    Suly1corI,
    Suly1corIi,
    Suly2I,
    Suly2Ii,
    Suly2cor,
    O1g,
    ObsReduction,
    Trivial,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("source serializes");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Count {
        count: String,
        valuation: Valuation,
    },
    BallCount {
        ball: usize,
        weight: u64,
        count: String,
        valuation: Valuation,
    },
    /// `group` plays the role of the leading equal / power-of-two balls.
    Roles {
        exponent: u32,
        group: Vec<u64>,
        extra: u32,
    },
    Chain {
        vectors: Vec<WeightVector>,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub bound: u32,
    pub source: Source,
    pub witness: Witness,
}

/// Best of the two counting bounds.
pub fn dectree_bound(w: &WeightVector) -> Certificate {
    let k = w.len() as u32;
    let p = count_balanced(w);
    let vp = mu(&p);
    let mut best = Certificate {
        bound: vp.bound_from(k),
        source: Source::DectreeP,
        witness: Witness::Count {
            count: p.to_string(),
            valuation: vp,
        },
    };
    for i in 0..w.len() {
        let pi = count_majority_with(w, i);
        let vi = mu(&pi);
        let bound = vi.bound_from(k.saturating_sub(1));
        if bound > best.bound {
            best = Certificate {
                bound,
                source: Source::DectreePi,
                witness: Witness::BallCount {
                    ball: i,
                    weight: w[i],
                    count: pi.to_string(),
                    valuation: vi,
                },
            };
        }
    }
    best
}

fn multiplicity(v: &[u64], a: u64) -> usize {
    v.iter().filter(|&&x| x == a).count()
}

fn without(v: &[u64], a: u64, copies: usize) -> Vec<u64> {
    let mut left = copies;
    v.iter()
        .copied()
        .filter(|&x| {
            if x == a && left > 0 {
                left -= 1;
                false
            } else {
                true
            }
        })
        .collect()
}

fn log2_exact(x: u64) -> Option<u32> {
    (x > 0 && x.is_power_of_two()).then(|| x.trailing_zeros())
}

/// A sub-multiset of `pool` summing to `target`, if one exists.
fn subset_with_sum(pool: &[u64], target: u64) -> Option<Vec<u64>> {
    let reach: Vec<Vec<bool>> = {
        let mut rows = vec![subset_sums(std::iter::empty())];
        for i in 0..pool.len() {
            rows.push(subset_sums(pool[..=i].iter().copied()));
        }
        rows
    };
    let t = target as usize;
    if reach[pool.len()].get(t) != Some(&true) {
        return None;
    }
    let mut out = Vec::new();
    let mut rest = t;
    for i in (0..pool.len()).rev() {
        if reach[i].get(rest) == Some(&true) {
            continue;
        }
        out.push(pool[i]);
        rest -= pool[i] as usize;
    }
    debug_assert_eq!(rest, 0);
    Some(out)
}

fn roles(exponent: u32, group: Vec<u64>, extra: u32) -> Witness {
    Witness::Roles {
        exponent,
        group,
        extra,
    }
}

fn lemma_certificates(v: &[u64]) -> Vec<Certificate> {
    let k = v.len() as u64;
    let total: u64 = v.iter().sum();
    let ones = multiplicity(v, 1) as u64;
    let mut out = Vec::new();
    let mut push = |bound: u64, source: Source, witness: Witness| {
        out.push(Certificate {
            bound: bound as u32,
            source,
            witness,
        })
    };

    // Leading group of 2^n unit balls, optionally with s revealed balanced pairs.
    let mut n = 0u32;
    while 1u64 << n <= ones {
        let g = 1u64 << n;
        let mut s = 0u64;
        while g + 2 * s <= ones {
            let reduced = k - 2 * s;
            if reduced > g {
                let group = vec![1; (g + 2 * s) as usize];
                if total == 2 * g + 2 * s {
                    let (src, bound) = if s == 0 {
                        (Source::Suly1I, k - 1)
                    } else {
                        (Source::Suly1corI, k - 1 - s)
                    };
                    push(bound, src, roles(n, group.clone(), s as u32));
                }
                if total == 2 * g + 2 * s + 1 && reduced != g + 1 && k >= 2 + s {
                    let (src, bound) = if s == 0 {
                        (Source::Suly1Ii, k - 2)
                    } else {
                        (Source::Suly1corIi, k - 2 - s)
                    };
                    push(bound, src, roles(n, group, s as u32));
                }
            }
            s += 1;
        }
        n += 1;
    }

    // Leading group of 2^n equal balls of any positive weight.
    let mut distinct: Vec<u64> = v.to_vec();
    distinct.dedup();
    for &a in &distinct {
        let c = multiplicity(v, a) as u64;
        let mut n = 0u32;
        while 1u64 << n <= c {
            let g = 1u64 << n;
            if k > g + 1 {
                let rest = without(v, a, g as usize);
                let group = vec![a; g as usize];
                let partitions = count_at(&rest, (a * g) as i64);
                if partitions.bit(0) {
                    push(k - 1, Source::Suly1formaI, roles(n, group.clone(), 0));
                }
                let min_rest = *rest.iter().min().expect("rest is non-empty");
                let max_rest = *rest.iter().max().expect("rest is non-empty");
                if total > 2 * a * g
                    && total <= 2 * a * g + 2 * min_rest
                    && total < 2 * a * g + 2 * max_rest
                {
                    push(k - 2, Source::Suly1formaIi, roles(n, group, 0));
                }
            }
            n += 1;
        }
    }

    // Power-of-two group summing to 2^n.
    let powers: Vec<u64> = v.iter().copied().filter(|x| x.is_power_of_two()).collect();
    if let Some(e) = log2_exact(total) {
        if e >= 1 {
            let n = e - 1;
            if let Some(group) = subset_with_sum(&powers, 1 << n) {
                push(k - 1, Source::Suly2I, roles(n, group, 0));
            }
        }
    }
    if total >= 1 {
        if let Some(e) = log2_exact(total - 1) {
            if e >= 1 {
                let n = e - 1;
                if k > (1 << n) + 1 {
                    if let Some(group) = subset_with_sum(&powers, 1 << n) {
                        push(k - 2, Source::Suly2Ii, roles(n, group, 0));
                    }
                }
            }
        }
    }
    if total >= 3 {
        if let Some(e) = log2_exact(total - 3) {
            if e >= 1 {
                let n = e - 1;
                let g = 1u64 << n;
                if k > g + 2 {
                    if ones >= 1 {
                        let pool = without(&powers, 1, 1);
                        if let Some(group) = subset_with_sum(&pool, g) {
                            push(k - 3, Source::Suly2cor, roles(n, group, 1));
                        }
                    }
                    let twos = multiplicity(v, 2) as u64;
                    let found = (0..=twos.min(g / 2)).find(|&b2| g - 2 * b2 <= ones);
                    if let Some(b2) = found {
                        let mut group = vec![2; b2 as usize];
                        group.extend(std::iter::repeat_n(1, (g - 2 * b2) as usize));
                        push(k - 3, Source::O1g, roles(n, group, 0));
                    }
                }
            }
        }
    }
    out
}

/// Value a vector must reach to be hard: `k-1` for an even total, `k-2` for odd.
fn hard_value(v: &[u64]) -> Option<u32> {
    let k = v.len() as u32;
    let total: u64 = v.iter().sum();
    if total % 2 == 0 {
        k.checked_sub(1)
    } else {
        k.checked_sub(2)
    }
}

const OBS_DEPTH: usize = 3;

/// Chain of split vectors ending in one whose hardness a lemma certifies.
fn obs_chain(v: &[u64], depth: usize) -> Option<Vec<WeightVector>> {
    let hv = hard_value(v)?;
    if lemma_certificates(v).iter().any(|c| c.bound >= hv) {
        return Some(vec![WeightVector::new(v.iter().copied())]);
    }
    if depth == 0 {
        return None;
    }
    let mut evens: Vec<u64> = v.iter().copied().filter(|&x| x % 2 == 0).collect();
    evens.dedup();
    for a2 in evens {
        let mut split = without(v, a2, 1);
        split.extend([a2 / 2, a2 / 2]);
        split.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(mut chain) = obs_chain(&split, depth - 1) {
            chain.push(WeightVector::new(v.iter().copied()));
            return Some(chain);
        }
    }
    None
}

/// Every lemma whose hypothesis `w` satisfies, with the bound it concludes.
///
/// Zero-weight balls are removed first (they never change the value), and the
/// roles of the leading balls are searched over rather than fixed by position.
pub fn certify_lower_bound(w: &WeightVector) -> Vec<Certificate> {
    let v: Vec<u64> = w.without_zeros().as_slice().to_vec();
    let mut out = Vec::new();
    if weighted_terminal(w).is_none() {
        out.push(Certificate {
            bound: 1,
            source: Source::Trivial,
            witness: Witness::None,
        });
    }
    if v.is_empty() {
        return out;
    }
    out.extend(lemma_certificates(&v));
    if let Some(hv) = hard_value(&v) {
        let mut evens: Vec<u64> = v.iter().copied().filter(|&x| x % 2 == 0 && x > 0).collect();
        evens.dedup();
        for a2 in evens {
            let mut split = without(&v, a2, 1);
            split.extend([a2 / 2, a2 / 2]);
            split.sort_unstable_by(|a, b| b.cmp(a));
            if let Some(mut chain) = obs_chain(&split, OBS_DEPTH - 1) {
                chain.push(WeightVector::new(v.iter().copied()));
                out.push(Certificate {
                    bound: hv,
                    source: Source::ObsReduction,
                    witness: Witness::Chain { vectors: chain },
                });
                break;
            }
        }
    }
    out
}

/// Best certified lower bound, combining the counting bound and all lemmas.
pub fn best_lower_bound(w: &WeightVector) -> u32 {
    certify_lower_bound(w)
        .iter()
        .map(|c| c.bound)
        .chain(std::iter::once(dectree_bound(w).bound))
        .max()
        .unwrap_or(0)
}

/// Whether `w` attains the trivial upper bound (`k-1` even total, `k-2` odd).
pub fn is_hard(w: &WeightVector) -> bool {
    match hard_value(w.as_slice()) {
        Some(h) => solve_weighted(w) == h,
        None => false,
    }
}

/// Vectors `w` (positive parts, total at most `max_total`) with a repeated
/// weight where the merged vector is hard but `w` is not. These would refute
/// the reverse of the doubling observation.
pub fn reverse_doubling_counterexamples(max_total: u64) -> Vec<(WeightVector, WeightVector)> {
    let mut solver = crate::weighted::WeightedSolver::new();
    let mut hard = |x: &WeightVector| match hard_value(x.as_slice()) {
        Some(h) => solver.value(x) == h,
        None => false,
    };
    let mut out = Vec::new();
    for total in 1..=max_total {
        for w in crate::weighted::partitions(total) {
            let v = w.as_slice();
            let mut seen = Vec::new();
            for i in 1..v.len() {
                if v[i] == v[i - 1] && !seen.contains(&v[i]) {
                    seen.push(v[i]);
                    let mut merged = without(v, v[i], 2);
                    merged.push(2 * v[i]);
                    let merged = WeightVector::new(merged);
                    if hard(&merged) && !hard(&w) {
                        out.push((w.clone(), merged));
                    }
                }
            }
        }
    }
    out
}

/// Vectors with `mu(p) >= 3` where the counting bound `k - mu(p)` is not exact.
pub fn counting_gap_examples(max_total: u64, max_len: usize) -> Vec<(WeightVector, u32, u32)> {
    let mut solver = crate::weighted::WeightedSolver::new();
    let mut out = Vec::new();
    for total in 1..=max_total {
        for w in crate::weighted::partitions(total) {
            if w.len() > max_len {
                continue;
            }
            if let Valuation::Finite(m) = mu(&count_balanced(&w)) {
                if m >= 3 {
                    let bound = (w.len() as u32).saturating_sub(m);
                    let value = solver.value(&w);
                    if value != bound {
                        out.push((w, bound, value));
                    }
                }
            }
        }
    }
    out
}
