//! Verification cost when the coloring is known in advance: the fewest
//! queries whose answers already pin down the outcome.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Edge, Graph};
use crate::state::{Outcome, QueryState};

/// Largest edge count accepted by the subset search in [`cert`].
pub const CERT_MAX_EDGES: usize = 24;
/// Largest order accepted by [`path_cert`].
pub const PATH_CERT_MAX_N: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertReport {
    #[serde(serialize_with = "as_text")]
    pub coloring: Coloring,
    pub queries: Vec<Edge>,
    pub outcome: Outcome,
    pub size: usize,
}

fn as_text<S: Serializer>(c: &Coloring, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(c)
}

/// State reached by answering every edge of `queries` as `coloring` dictates.
pub fn replay(graph: &Graph, coloring: &Coloring, queries: &[Edge]) -> Result<QueryState> {
    coloring.check_len(graph.n())?;
    let mut s = QueryState::new(graph.n());
    for &(u, v) in queries {
        if !graph.has_edge(u, v) {
            return Err(Error::NotAnEdge((u, v)));
        }
        if !s.same_component(u, v) {
            s.merge_in_place((u, v), QueryState::answer_for(coloring, (u, v)))?;
        }
    }
    Ok(s)
}

/// Builds the report for `queries`, failing unless they certify the outcome.
pub fn certify(graph: &Graph, coloring: &Coloring, queries: Vec<Edge>) -> Result<CertReport> {
    let s = replay(graph, coloring, &queries)?;
    let outcome = s
        .terminal_outcome()
        .ok_or_else(|| Error::Strategy("query set does not decide the outcome".into()))?;
    if !outcome.is_correct_for(coloring) {
        return Err(Error::Strategy(format!("query set claims {outcome}")));
    }
    Ok(CertReport {
        coloring: coloring.clone(),
        size: queries.len(),
        queries,
        outcome,
    })
}

fn signs(coloring: &Coloring) -> Vec<i32> {
    coloring
        .0
        .iter()
        .map(|&c| if c == Color::Red { 1 } else { -1 })
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Smallest certifying edge set, by exhaustive search in increasing size.
pub fn cert(graph: &Graph, coloring: &Coloring) -> Result<CertReport> {
    graph.check_solvable()?;
    coloring.check_len(graph.n())?;
    let m = graph.edge_count();
    if m > CERT_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "{m} edges; the subset search takes at most {CERT_MAX_EDGES}"
        )));
    }
    let n = graph.n();
    let sign = signs(coloring);
    let edges = graph.edges();
    let mut parent = vec![0usize; n];
    let mut sum = vec![0i32; n];
    for size in 0..=m {
        // forests only: a cycle edge never changes the state
        if size >= n {
            break;
        }
        let mut mask: u32 = (1u32 << size) - 1;
        loop {
            parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
            let mut acyclic = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    if a == b {
                        acyclic = false;
                        break;
                    }
                    parent[a] = b;
                }
            }
            if acyclic {
                sum.iter_mut().for_each(|x| *x = 0);
                for v in 0..n {
                    let r = find(&mut parent, v);
                    sum[r] += sign[v];
                }
                let total: i32 = sum.iter().map(|x| x.abs()).sum();
                let max = sum.iter().map(|x| x.abs()).max().unwrap_or(0);
                if total == 0 || 2 * max > total {
                    let queries = (0..m)
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| edges[i])
                        .collect();
                    return certify(graph, coloring, queries);
                }
            }
            if size == 0 {
                break;
            }
            // next mask with the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
            if m < 32 && mask >> m != 0 {
                break;
            }
        }
    }
    certify(graph, coloring, graph.spanning_forest())
}

fn is_natural_path(graph: &Graph) -> bool {
    graph.n() >= 1 && *graph == Graph::path(graph.n())
}

fn cert_size(graph: &Graph, coloring: &Coloring) -> Result<usize> {
    if is_natural_path(graph) {
        Ok(path_cert(coloring)?.size)
    } else {
        Ok(cert(graph, coloring)?.size)
    }
}

/// Worst certification cost over all colorings, with a coloring attaining it.
pub fn m_nd_witness(graph: &Graph) -> Result<(usize, Coloring)> {
    graph.check_solvable()?;
    let n = graph.n();
    if n > 24 {
        return Err(Error::TooLarge(format!(
            "{n} vertices; coloring enumeration takes at most 24"
        )));
    }
    if n == 1 {
        return Ok((0, Coloring(vec![Color::Red])));
    }
    // the last vertex stays red: flipping every color changes nothing
    let best = (0..1u64 << (n - 1))
        .into_par_iter()
        .map(|mask| cert_size(graph, &Coloring::from_mask(n, mask)).map(|s| (s, mask)))
        .try_reduce(
            || (0, u64::MAX),
            |a, b| {
                Ok(
                    if (a.0, std::cmp::Reverse(a.1)) >= (b.0, std::cmp::Reverse(b.1)) {
                        a
                    } else {
                        b
                    },
                )
            },
        )?;
    Ok((best.0, Coloring::from_mask(n, best.1)))
}

pub fn m_nd(graph: &Graph) -> Result<usize> {
    Ok(m_nd_witness(graph)?.0)
}

/// [`cert`] specialised to the path `0 - 1 - ... - n-1`.
///
/// A certificate cuts the path into intervals. Apart from the dominant one,
/// an interval of weight at least 2 can be split into weights 1 and `w - 1`
/// at no cost, so only weights 0 and 1 occur, and jumping to the nearest
/// position with the wanted prefix difference is never worse.
pub fn path_cert(coloring: &Coloring) -> Result<CertReport> {
    let n = coloring.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty coloring".into()));
    }
    if n > PATH_CERT_MAX_N {
        return Err(Error::TooLarge(format!(
            "{n} vertices; the interval search takes at most {PATH_CERT_MAX_N}"
        )));
    }
    let mut d = vec![0i64; n + 1];
    for (i, s) in signs(coloring).into_iter().enumerate() {
        d[i + 1] = d[i] + s as i64;
    }
    let cuts = best_cuts(&d);
    let queries: Vec<Edge> = (0..n - 1)
        .filter(|&i| !cuts.contains(&(i + 1)))
        .map(|i| (i, i + 1))
        .collect();
    certify(&Graph::path(n), coloring, queries)
}

/// Interior cut positions of a best interval partition of prefix sums `d`.
fn best_cuts(d: &[i64]) -> Vec<usize> {
    let n = d.len() - 1;
    let off = n as i64;
    let width = n + 1;
    // next[p][t]: first q > p with d[q] = d[p] + t - 1
    let mut next = vec![[usize::MAX; 3]; n + 1];
    let mut last = vec![usize::MAX; 2 * n + 3];
    for p in (0..=n).rev() {
        for t in 0..3 {
            let v = d[p] + t as i64 - 1 + off + 1;
            next[p][t] = last[v as usize];
        }
        last[(d[p] + off + 1) as usize] = p;
    }
    const NONE: i32 = -1;
    let idx = |phase: usize, p: usize, u: usize| (phase * (n + 1) + p) * width + u;
    let mut best = vec![NONE; 2 * (n + 1) * width];
    let mut from = vec![usize::MAX; best.len()];
    let relax = |best: &mut Vec<i32>, from: &mut Vec<usize>, to: usize, val: i32, src: usize| {
        if val > best[to] {
            best[to] = val;
            from[to] = src;
        }
    };
    best[idx(0, 0, 0)] = 0;
    for p in 0..=n {
        for u in 0..width {
            let here = idx(0, p, u);
            let c = best[here];
            if c == NONE {
                continue;
            }
            for t in 0..3 {
                let q = next[p][t];
                let du = usize::from(t != 1);
                if q != usize::MAX && u + du < width {
                    relax(&mut best, &mut from, idx(0, q, u + du), c + 1, here);
                }
            }
            // dominant interval (p, b], first position for each value
            let mut seen = vec![false; 2 * n + 3];
            for b in p + 1..=n {
                let key = (d[b] + off + 1) as usize;
                if std::mem::replace(&mut seen[key], true) {
                    continue;
                }
                let w = (d[b] - d[p]).unsigned_abs() as usize;
                if w > u {
                    relax(&mut best, &mut from, idx(1, b, w - u - 1), c + 1, here);
                }
            }
        }
    }
    for p in 0..=n {
        for s in 0..width {
            let here = idx(1, p, s);
            let c = best[here];
            if c == NONE {
                continue;
            }
            for t in 0..3 {
                let q = next[p][t];
                if q == usize::MAX {
                    continue;
                }
                if t == 1 {
                    relax(&mut best, &mut from, idx(1, q, s), c + 1, here);
                } else if s > 0 {
                    relax(&mut best, &mut from, idx(1, q, s - 1), c + 1, here);
                }
            }
        }
    }
    let (mut pieces, mut end) = (NONE, usize::MAX);
    for s in 0..width {
        let here = idx(1, n, s);
        if best[here] > pieces {
            pieces = best[here];
            end = here;
        }
    }
    if d[n] == 0 {
        let zeros: Vec<usize> = (1..n).filter(|&i| d[i] == 0).collect();
        if zeros.len() as i32 + 1 > pieces {
            return zeros;
        }
    }
    let mut cuts = Vec::new();
    let mut at = end;
    while at != idx(0, 0, 0) {
        let p = (at / width) % (n + 1);
        if p != n {
            cuts.push(p);
        }
        at = from[at];
    }
    cuts.reverse();
    cuts
}

/// Batches of `k` alternate red and blue starting with red, then one blue
/// vertex: `k*k + 1` vertices in all.
pub fn nondet_hard_coloring(k: usize) -> Result<Coloring> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "k = {k} must be even and at least 2"
        )));
    }
    let mut c: Vec<Color> = (0..k * k)
        .map(|i| {
            if (i / k) % 2 == 0 {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .collect();
    c.push(Color::Blue);
    Ok(Coloring(c))
}

/// Which rule [`nondet_query_set`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuerySetCase {
    LargeMargin,
    Pigeonhole,
    Descent,
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// A certifying query set of size `n - Omega(sqrt n)` for an odd path.
pub fn nondet_query_set(coloring: &Coloring) -> Result<Vec<Edge>> {
    Ok(nondet_query_set_with_case(coloring)?.0)
}

pub fn nondet_query_set_with_case(coloring: &Coloring) -> Result<(Vec<Edge>, QuerySetCase)> {
    let n = coloring.len();
    if n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("n = {n} must be odd")));
    }
    let mut s: Vec<i64> = signs(coloring).into_iter().map(i64::from).collect();
    if s.iter().sum::<i64>() < 0 {
        s.iter_mut().for_each(|x| *x = -*x);
    }
    let prefix = |s: &[i64]| {
        let mut d = vec![0i64; n + 1];
        for i in 0..n {
            d[i + 1] = d[i] + s[i];
        }
        d
    };
    let dd = prefix(&s);
    let margin = dd[n];
    let nn = n as i64;
    let path_edges = |keep: &dyn Fn(usize) -> bool| -> Vec<Edge> {
        (0..n - 1)
            .filter(|&i| keep(i))
            .map(|i| (i, i + 1))
            .collect()
    };
    if margin * margin >= nn {
        let take = n - (margin as usize).div_ceil(2);
        return Ok((path_edges(&|i| i < take), QuerySetCase::LargeMargin));
    }
    // the first extreme prefix difference must be positive; reverse if not
    let extreme = |d: &[i64]| {
        let delta = d[1..].iter().map(|x| x.abs()).max().unwrap_or(0);
        let j = (1..=n).find(|&i| d[i].abs() == delta).unwrap_or(n);
        (delta, j)
    };
    let (delta, j) = extreme(&dd);
    let reversed = dd[j] < 0;
    let (d, delta, j) = if reversed {
        let r: Vec<i64> = s.iter().rev().copied().collect();
        let d = prefix(&r);
        let (delta, j) = extreme(&d);
        (d, delta, j)
    } else {
        (dd, delta, j)
    };
    // x_i .. x_{i+1} is path edge i - 1; map back if reversed
    let edge_after = |i: usize| if reversed { n - 1 - i } else { i - 1 };
    let (cut_after, case): (Vec<usize>, QuerySetCase) = if delta * delta < 4 * nn {
        let mut freq = std::collections::BTreeMap::new();
        for &v in &d[1..] {
            *freq.entry(v).or_insert(0usize) += 1;
        }
        let (&v, _) = freq
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .expect("nonempty");
        let cuts = (1..n).filter(|&i| d[i] == v).collect();
        (cuts, QuerySetCase::Pigeonhole)
    } else {
        let r = isqrt(n);
        let mut cuts = vec![j];
        let mut at = j;
        for step in 1..=r as i64 {
            at = (at + 1..=n)
                .find(|&i| d[i] == delta - step)
                .ok_or_else(|| Error::Strategy("descent ran past the end".into()))?;
            cuts.push(at);
        }
        (cuts, QuerySetCase::Descent)
    };
    let cut: std::collections::HashSet<usize> = cut_after
        .into_iter()
        .filter(|&i| i < n)
        .map(edge_after)
        .collect();
    Ok((path_edges(&|i| !cut.contains(&i)), case))
}

/// [`nondet_query_set`] checked by replay on the path.
pub fn nondet_certificate(coloring: &Coloring) -> Result<CertReport> {
    let q = nondet_query_set(coloring)?;
    certify(&Graph::path(coloring.len()), coloring, q)
}
