//! The weighted majority game on balls: a query merges two balls into one of
//! weight `a + b` (SAME) or `|a - b|` (DIFF). Exact values by memoized minimax,
//! plus relevance analysis.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multiset of non-negative ball weights, stored in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = weights.into_iter().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        WeightVector(v)
    }

    pub fn ones(k: usize) -> Self {
        WeightVector(vec![1; k])
    }

    #[inline]
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// The same multiset without zero-weight balls.
    pub fn without_zeros(&self) -> WeightVector {
        WeightVector(self.0.iter().copied().filter(|&w| w > 0).collect())
    }

    pub fn scaled(&self, c: u64) -> WeightVector {
        WeightVector(self.0.iter().map(|&w| w * c).collect())
    }

    /// Replaces balls `i` and `j` by their merge under `same`.
    pub fn merged(&self, i: usize, j: usize, same: bool) -> WeightVector {
        let (a, b) = (self.0[i], self.0[j]);
        let m = if same { a + b } else { a.abs_diff(b) };
        WeightVector::new(
            self.0
                .iter()
                .enumerate()
                .filter(|&(x, _)| x != i && x != j)
                .map(|(_, &w)| w)
                .chain(std::iter::once(m)),
        )
    }

    /// Trivial upper bound on the game value: `k-1`, or `k-2` for an odd total.
    pub fn trivial_upper_bound(&self) -> u32 {
        let k = self.len() as u32;
        if k >= 2 && self.total() % 2 == 1 {
            k - 2
        } else {
            k.saturating_sub(1)
        }
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = u64;
    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(WeightVector(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("weight {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeightVector::new)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightedOutcome {
    NoMajority,
    /// Index (in descending order) of the ball that outweighs all others.
    Ball(usize),
}

/// Determined result of a weight vector, if any.
pub fn weighted_terminal(w: &WeightVector) -> Option<WeightedOutcome> {
    terminal_slice(w.as_slice())
}

fn terminal_slice(w: &[u64]) -> Option<WeightedOutcome> {
    let total: u64 = w.iter().sum();
    if total == 0 {
        return Some(WeightedOutcome::NoMajority);
    }
    w.iter()
        .position(|&x| 2 * x > total)
        .map(WeightedOutcome::Ball)
}

/// Memoized exact solver for the weighted game.
///
/// The table is keyed by the descending multiset with zeros removed; removing
/// a zero ball never changes the value.
#[derive(Debug, Default, Clone)]
pub struct WeightedSolver {
    memo: HashMap<Vec<u64>, u32>,
}

impl WeightedSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn table_len(&self) -> usize {
        self.memo.len()
    }

    pub fn value(&mut self, w: &WeightVector) -> u32 {
        let key: Vec<u64> = w.as_slice().iter().copied().filter(|&x| x > 0).collect();
        self.value_key(&key)
    }

    /// Value for a slice that is already descending and zero-free.
    pub fn value_sorted(&mut self, key: &[u64]) -> u32 {
        debug_assert!(key.windows(2).all(|p| p[0] >= p[1]) && key.iter().all(|&x| x > 0));
        self.value_key(key)
    }

    fn value_key(&mut self, key: &[u64]) -> u32 {
        if terminal_slice(key).is_some() {
            return 0;
        }
        if let Some(&v) = self.memo.get(key) {
            return v;
        }
        let k = key.len();
        let mut best = u32::MAX;
        let mut child = Vec::with_capacity(k);
        'pairs: for i in 0..k {
            if i > 0 && key[i] == key[i - 1] {
                continue;
            }
            for j in i + 1..k {
                if j > i + 1 && key[j] == key[j - 1] {
                    continue;
                }
                let mut worst = 0;
                for same in [true, false] {
                    build_child(key, i, j, same, &mut child);
                    let v = self.value_key(&child);
                    worst = worst.max(v);
                    if 1 + worst >= best {
                        break;
                    }
                }
                if 1 + worst < best {
                    best = 1 + worst;
                    if best == 1 {
                        break 'pairs;
                    }
                }
            }
        }
        self.memo.insert(key.to_vec(), best);
        best
    }

    /// Lexicographically smallest index pair (descending order) among the
    /// optimal first queries, or `None` at a terminal vector.
    pub fn optimal_query(&mut self, w: &WeightVector) -> Option<(usize, usize)> {
        if weighted_terminal(w).is_some() {
            return None;
        }
        let target = self.value(w);
        let k = w.len();
        for i in 0..k {
            for j in i + 1..k {
                let worst = [true, false]
                    .into_iter()
                    .map(|s| self.value(&w.merged(i, j, s)))
                    .max()
                    .unwrap_or(0);
                if 1 + worst == target {
                    return Some((i, j));
                }
            }
        }
        unreachable!("some query attains the minimax value")
    }
}

fn build_child(key: &[u64], i: usize, j: usize, same: bool, out: &mut Vec<u64>) {
    out.clear();
    let m = if same {
        key[i] + key[j]
    } else {
        key[i].abs_diff(key[j])
    };
    let mut placed = m == 0;
    for (x, &w) in key.iter().enumerate() {
        if x == i || x == j {
            continue;
        }
        if !placed && m >= w {
            out.push(m);
            placed = true;
        }
        out.push(w);
    }
    if !placed {
        out.push(m);
    }
}

/// Exact worst-case number of queries for the weighted game.
pub fn solve_weighted(w: &WeightVector) -> u32 {
    WeightedSolver::new().value(w)
}

/// Subset sums reachable by the given weights, as a membership table.
pub(crate) fn subset_sums(weights: impl IntoIterator<Item = u64>) -> Vec<bool> {
    let mut reach = vec![true];
    for w in weights {
        let w = w as usize;
        let mut next = vec![false; reach.len() + w];
        for (s, &r) in reach.iter().enumerate() {
            if r {
                next[s] = true;
                next[s + w] = true;
            }
        }
        reach = next;
    }
    reach
}

/// Whether flipping ball `i` can change the outcome for some coloring of the rest.
///
/// With `s` the signed sum of the other balls, the outcome flips iff `|s| <= w_i`
/// (and `w_i > 0`), so it suffices to find the reachable `s` closest to zero.
pub fn relevant(w: &WeightVector, i: usize) -> bool {
    let wi = w[i];
    if wi == 0 {
        return false;
    }
    let others = w
        .as_slice()
        .iter()
        .enumerate()
        .filter(|&(x, _)| x != i)
        .map(|(_, &v)| v);
    let total: u64 = others.clone().sum();
    let reach = subset_sums(others);
    reach
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r)
        .any(|(sub, _)| (total as i64 - 2 * sub as i64).unsigned_abs() <= wi)
}

pub fn relevant_set(w: &WeightVector) -> Vec<bool> {
    (0..w.len()).map(|i| relevant(w, i)).collect()
}

pub fn relevant_count(w: &WeightVector) -> usize {
    relevant_set(w).into_iter().filter(|&r| r).count()
}

/// Largest weight of a non-relevant ball (0 if there is none); ball `i` is
/// relevant exactly when `w_i` exceeds it.
pub fn relevance_threshold(w: &WeightVector) -> u64 {
    relevant_set(w)
        .into_iter()
        .enumerate()
        .filter(|&(_, r)| !r)
        .map(|(i, _)| w[i])
        .max()
        .unwrap_or(0)
}

/// All descending weight vectors with positive parts summing to exactly `total`.
pub fn partitions(total: u64) -> Vec<WeightVector> {
    fn rec(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<WeightVector>) {
        if rest == 0 {
            out.push(WeightVector(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

fn has_relevant_of(w: &WeightVector, weight: u64) -> bool {
    (0..w.len()).any(|i| w[i] == weight && relevant(w, i))
}

/// Checks the structural facts about relevance on `w`, one message per failure:
/// terminal exactly when at most one ball is relevant; relevance is a weight
/// threshold and survives growing a ball; every query has an answer keeping
/// any given outside relevant ball relevant, an answer losing at most two
/// relevant balls, and SAME keeps a relevant queried ball relevant; one query
/// from the end, either two equal relevant balls carry all the weight or three
/// relevant balls remain and comparing any two of them finishes.
pub fn relevance_violations(w: &WeightVector) -> Vec<String> {
    let mut out = Vec::new();
    let rel = relevant_set(w);
    let count = rel.iter().filter(|&&r| r).count();
    if weighted_terminal(w).is_some() != (count <= 1) {
        out.push(format!(
            "{w}: terminal does not match {count} relevant balls"
        ));
    }
    let t = relevance_threshold(w);
    for i in 0..w.len() {
        if rel[i] != (w[i] > t) {
            out.push(format!("{w}: ball {i} breaks the threshold {t}"));
        }
        if rel[i] {
            let mut grown = w.as_slice().to_vec();
            grown[i] += 1;
            if !has_relevant_of(&WeightVector::new(grown), w[i] + 1) {
                out.push(format!("{w}: growing ball {i} loses relevance"));
            }
        }
    }
    if weighted_terminal(w).is_some() {
        return out;
    }
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let same = w.merged(i, j, true);
            let diff = w.merged(i, j, false);
            for x in (0..w.len()).filter(|&x| rel[x] && x != i && x != j) {
                if !has_relevant_of(&same, w[x]) && !has_relevant_of(&diff, w[x]) {
                    out.push(format!("{w}: query ({i},{j}) can kill ball {x}"));
                }
            }
            if (rel[i] || rel[j]) && !has_relevant_of(&same, w[i] + w[j]) {
                out.push(format!("{w}: SAME on ({i},{j}) is not relevant"));
            }
            if relevant_count(&same) + 2 < count && relevant_count(&diff) + 2 < count {
                out.push(format!("{w}: query ({i},{j}) loses three relevant balls"));
            }
        }
    }
    if solve_weighted(w) == 1 {
        let positive = w.as_slice().iter().filter(|&&x| x > 0).count();
        let pair = count == 2 && positive == 2 && w[0] == w[1];
        let idx: Vec<usize> = (0..w.len()).filter(|&i| rel[i]).collect();
        let triple = count == 3
            && idx.iter().enumerate().all(|(a, &i)| {
                idx[a + 1..].iter().all(|&j| {
                    weighted_terminal(&w.merged(i, j, true)).is_some()
                        && weighted_terminal(&w.merged(i, j, false)).is_some()
                })
            });
        if !pair && !triple {
            out.push(format!(
                "{w}: one query from the end with {count} relevant balls"
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(s: &str) -> WeightVector {
        s.parse().unwrap()
    }

    /// Plain minimax without memo or pruning.
    fn brute(w: &[u64]) -> u32 {
        if terminal_slice(w).is_some() {
            return 0;
        }
        let mut best = u32::MAX;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                let mut worst = 0;
                for m in [w[i] + w[j], w[i].abs_diff(w[j])] {
                    let mut c: Vec<u64> = w
                        .iter()
                        .enumerate()
                        .filter(|&(x, _)| x != i && x != j)
                        .map(|(_, &v)| v)
                        .collect();
                    c.push(m);
                    worst = worst.max(brute(&c));
                }
                best = best.min(1 + worst);
            }
        }
        best
    }

    #[test]
    fn relevance_facts_hold_up_to_twelve() {
        for total in 0..=12 {
            for w in partitions(total) {
                let v = relevance_violations(&w);
                assert!(v.is_empty(), "{v:?}");
                let mut padded = w.as_slice().to_vec();
                padded.push(0);
                let v = relevance_violations(&WeightVector::new(padded));
                assert!(v.is_empty(), "{v:?}");
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(solve_weighted(&WeightVector::ones(7)), 4);
        assert_eq!(solve_weighted(&wv("1,2,3,4,5,6,7")), 5);
        assert_eq!(solve_weighted(&wv("3,3,7,8,9")), 4);
        assert_eq!(solve_weighted(&wv("2,1,1")), 2);
    }

    #[test]
    fn all_ones_is_k_minus_popcount() {
        let mut s = WeightedSolver::new();
        for k in 1..=14u32 {
            assert_eq!(s.value(&WeightVector::ones(k as usize)), k - k.count_ones());
        }
    }

    #[test]
    fn agrees_with_unmemoized_minimax() {
        let mut s = WeightedSolver::new();
        for total in 1..=9 {
            for p in partitions(total) {
                if p.len() <= 6 {
                    assert_eq!(s.value(&p), brute(p.as_slice()), "{p}");
                }
            }
        }
        assert_eq!(s.value(&wv("0,0,2,1,1")), brute(&[0, 0, 2, 1, 1]));
    }

    #[test]
    fn terminal_examples() {
        assert_eq!(
            weighted_terminal(&wv("0,0")),
            Some(WeightedOutcome::NoMajority)
        );
        assert_eq!(
            weighted_terminal(&wv("")),
            Some(WeightedOutcome::NoMajority)
        );
        assert_eq!(
            weighted_terminal(&wv("5,1,1,1")),
            Some(WeightedOutcome::Ball(0))
        );
        assert_eq!(weighted_terminal(&wv("3,1,1,1")), None);
    }

    #[test]
    fn relevance_examples() {
        assert!(!relevant(&wv("3,1"), 1));
        assert!(relevant(&wv("3,1"), 0));
        assert!((0..3).all(|i| relevant(&wv("2,1,1"), i)));
        assert!(relevant(&wv("4,2,2"), 0));
        assert_eq!(relevance_threshold(&wv("3,1")), 1);
        assert_eq!(relevance_threshold(&wv("1,1,1")), 0);
        assert_eq!(relevance_threshold(&wv("0,0")), 0);
        assert_eq!(relevant_count(&wv("0,0")), 0);
    }

    #[test]
    fn relevance_matches_coloring_enumeration() {
        for total in 0..=8 {
            for p in partitions(total) {
                let k = p.len();
                for i in 0..k {
                    let mut witness = false;
                    for mask in 0u32..1 << k {
                        let signed = |flip_i: bool| -> i64 {
                            (0..k)
                                .map(|x| {
                                    let red = (mask >> x & 1 == 1) ^ (x == i && flip_i);
                                    if red {
                                        p[x] as i64
                                    } else {
                                        -(p[x] as i64)
                                    }
                                })
                                .sum()
                        };
                        if signed(false).signum() != signed(true).signum() {
                            witness = true;
                        }
                    }
                    assert_eq!(relevant(&p, i), witness, "{p} ball {i}");
                }
            }
        }
    }

    #[test]
    fn optimal_query_is_smallest_pair() {
        let mut s = WeightedSolver::new();
        assert_eq!(s.optimal_query(&wv("1,1")), Some((0, 1)));
        assert_eq!(s.optimal_query(&wv("5,1")), None);
        let w = wv("3,3,7,8,9");
        let (i, j) = s.optimal_query(&w).unwrap();
        let worst = [true, false].map(|x| s.value(&w.merged(i, j, x)));
        assert_eq!(1 + worst.iter().max().unwrap(), 4);
    }

    #[test]
    fn parses_and_prints() {
        assert_eq!(wv("3,3,7,8,9").to_string(), "9,8,7,3,3");
        assert!("1,x".parse::<WeightVector>().is_err());
        assert_eq!(partitions(4).len(), 5);
    }
}
