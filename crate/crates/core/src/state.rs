//! Query states: the partition into q-components, each with its internal color
//! split known up to a global flip, and the SAME/DIFF merge algebra.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Color, Coloring, Edge, Graph};
use crate::weighted::WeightVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Answer {
    Same,
    Diff,
}

impl Answer {
    pub const BOTH: [Answer; 2] = [Answer::Same, Answer::Diff];

    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Same => "SAME",
            Answer::Diff => "DIFF",
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    MajorityVertex(usize),
    NoMajority,
}

impl Outcome {
    /// Whether this outcome is a correct answer for the concrete coloring.
    pub fn is_correct_for(self, coloring: &Coloring) -> bool {
        match self {
            Outcome::NoMajority => coloring.is_balanced(),
            Outcome::MajorityVertex(v) => coloring.majority_color() == Some(coloring[v]),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::MajorityVertex(v) => write!(f, "MAJORITY {v}"),
            Outcome::NoMajority => f.write_str("NONE"),
        }
    }
}

/// One q-component with its split. `first` holds the side containing the
/// component's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl Component {
    pub fn weight(&self) -> usize {
        self.first.len().abs_diff(self.second.len())
    }

    pub fn len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn min_vertex(&self) -> usize {
        self.first[0]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.first.binary_search(&v).is_ok() || self.second.binary_search(&v).is_ok()
    }
}

/// Knowledge after a sequence of answered queries.
///
/// Every vertex stores the smallest vertex of its q-component (`rep`) and
/// whether its color differs from that representative (`side`). This is the
/// canonical form: the split side holding the smallest vertex comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QueryState {
    rep: Vec<usize>,
    side: Vec<bool>,
    queried: Vec<Edge>,
}

impl QueryState {
    pub fn new(n: usize) -> Self {
        QueryState {
            rep: (0..n).collect(),
            side: vec![false; n],
            queried: Vec::new(),
        }
    }

    /// Rebuilds a canonical state from arbitrary component labels and colors
    /// relative to any member; used to check canonicalization.
    pub fn from_labels(labels: &[usize], relative: &[bool]) -> Self {
        let n = labels.len();
        let mut rep = vec![usize::MAX; n];
        let mut side = vec![false; n];
        for v in 0..n {
            if rep[v] != usize::MAX {
                continue;
            }
            for w in v..n {
                if labels[w] == labels[v] {
                    rep[w] = v;
                    side[w] = relative[w] != relative[v];
                }
            }
        }
        QueryState {
            rep,
            side,
            queried: Vec::new(),
        }
    }

    pub fn canonicalized(&self) -> Self {
        let mut s = QueryState::from_labels(&self.rep, &self.side);
        s.queried = self.queried.clone();
        s
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rep.len()
    }

    /// Queried edges in the order they were asked.
    pub fn queried(&self) -> &[Edge] {
        &self.queried
    }

    #[inline]
    pub fn component_of(&self, v: usize) -> usize {
        self.rep[v]
    }

    #[inline]
    pub fn same_component(&self, u: usize, v: usize) -> bool {
        self.rep[u] == self.rep[v]
    }

    /// Whether `v` has the opposite color to the smallest vertex of its component.
    #[inline]
    pub fn flipped(&self, v: usize) -> bool {
        self.side[v]
    }

    pub fn component_count(&self) -> usize {
        (0..self.n()).filter(|&v| self.rep[v] == v).count()
    }

    /// Components ordered by smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        let mut out: Vec<Component> = Vec::new();
        for v in 0..n {
            let r = self.rep[v];
            if r == v {
                index[v] = out.len();
                out.push(Component {
                    first: Vec::new(),
                    second: Vec::new(),
                });
            }
            let c = &mut out[index[r]];
            if self.side[v] {
                c.second.push(v);
            } else {
                c.first.push(v);
            }
        }
        out
    }

    /// Signed weight per representative: (#same as rep) - (#opposite).
    fn signed_by_rep(&self) -> Vec<i64> {
        let mut s = vec![0i64; self.n()];
        for v in 0..self.n() {
            s[self.rep[v]] += if self.side[v] { -1 } else { 1 };
        }
        s
    }

    /// Weight of the component containing `v`.
    pub fn weight_of(&self, v: usize) -> usize {
        let r = self.rep[v];
        let mut s = 0i64;
        for w in 0..self.n() {
            if self.rep[w] == r {
                s += if self.side[w] { -1 } else { 1 };
            }
        }
        s.unsigned_abs() as usize
    }

    /// Component weights in component order (by smallest vertex).
    pub fn weights(&self) -> Vec<usize> {
        let s = self.signed_by_rep();
        (0..self.n())
            .filter(|&v| self.rep[v] == v)
            .map(|v| s[v].unsigned_abs() as usize)
            .collect()
    }

    /// Multiset of component weights.
    pub fn component_weights(&self) -> WeightVector {
        WeightVector::new(self.weights().into_iter().map(|w| w as u64))
    }

    pub fn total_weight(&self) -> usize {
        self.weights().iter().sum()
    }

    /// Applies an answered query, checking the edge against `graph`.
    pub fn apply_query(&self, graph: &Graph, e: Edge, answer: Answer) -> Result<QueryState> {
        let e = edge(e.0, e.1);
        if !graph.has_edge(e.0, e.1) {
            return Err(Error::NotAnEdge(e));
        }
        self.merge(e, answer)
    }

    /// Applies an answered query between any two vertices (the unrestricted game).
    pub fn merge(&self, e: Edge, answer: Answer) -> Result<QueryState> {
        let mut next = self.clone();
        next.merge_in_place(e, answer)?;
        Ok(next)
    }

    pub fn merge_in_place(&mut self, e: Edge, answer: Answer) -> Result<()> {
        let (u, v) = edge(e.0, e.1);
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        let (ru, rv) = (self.rep[u], self.rep[v]);
        if ru == rv {
            return Err(Error::IntraComponent((u, v)));
        }
        // color(rv) = color(ru) xor t
        let t = self.side[u] ^ self.side[v] ^ (answer == Answer::Diff);
        let (keep, absorb) = if ru < rv { (ru, rv) } else { (rv, ru) };
        for w in 0..n {
            if self.rep[w] == absorb {
                self.rep[w] = keep;
                self.side[w] ^= t;
            }
        }
        self.queried.push((u, v));
        Ok(())
    }

    /// The answer `coloring` gives to query `e`.
    pub fn answer_for(coloring: &Coloring, e: Edge) -> Answer {
        if coloring[e.0] == coloring[e.1] {
            Answer::Same
        } else {
            Answer::Diff
        }
    }

    /// Number of colorings consistent with the answers so far: `2^(#components)`.
    pub fn consistent_coloring_count(&self) -> BigUint {
        BigUint::from(1u8) << self.component_count()
    }

    /// Enumerates every consistent coloring exactly once (flip each component
    /// independently). Intended for small component counts.
    pub fn consistent_colorings(&self) -> impl Iterator<Item = Coloring> + '_ {
        let n = self.n();
        let mut index = vec![0usize; n];
        let mut c = 0;
        for v in 0..n {
            if self.rep[v] == v {
                index[v] = c;
                c += 1;
            }
        }
        assert!(c < 64, "too many components to enumerate colorings");
        (0u64..1u64 << c).map(move |mask| {
            Coloring(
                (0..n)
                    .map(|v| {
                        let flip = (mask >> index[self.rep[v]] & 1 == 1) ^ self.side[v];
                        if flip {
                            Color::Blue
                        } else {
                            Color::Red
                        }
                    })
                    .collect(),
            )
        })
    }

    /// Whether `coloring` agrees with every answered query.
    pub fn is_consistent_with(&self, coloring: &Coloring) -> bool {
        (0..self.n()).all(|v| {
            let r = self.rep[v];
            (coloring[v] != coloring[r]) == self.side[v]
        })
    }

    /// The game result if it is already determined.
    ///
    /// `NoMajority` when every component is balanced; `MajorityVertex(v)` when
    /// one component outweighs all others together, with `v` the smallest
    /// vertex on its heavier side.
    pub fn terminal_outcome(&self) -> Option<Outcome> {
        let s = self.signed_by_rep();
        let n = self.n();
        let mut total = 0u64;
        let mut best: Option<(u64, usize)> = None;
        for v in 0..n {
            if self.rep[v] != v {
                continue;
            }
            let w = s[v].unsigned_abs();
            total += w;
            if best.is_none_or(|(bw, _)| w > bw) {
                best = Some((w, v));
            }
        }
        let (w, r) = best?;
        if total == 0 {
            return Some(Outcome::NoMajority);
        }
        if 2 * w <= total {
            return None;
        }
        // heavier side: same as rep when signed weight is positive
        let want_flipped = s[r] < 0;
        let v = (r..n)
            .find(|&x| self.rep[x] == r && self.side[x] == want_flipped)
            .expect("a heavier side is non-empty");
        Some(Outcome::MajorityVertex(v))
    }

    pub fn is_terminal(&self) -> bool {
        self.terminal_outcome().is_some()
    }

    /// Cross-component edges of `graph`, the legal queries in this state.
    pub fn legal_queries<'a>(&'a self, graph: &'a Graph) -> impl Iterator<Item = Edge> + 'a {
        graph
            .edges()
            .iter()
            .copied()
            .filter(move |&(u, v)| self.rep[u] != self.rep[v])
    }

    /// Hashable canonical encoding: representative and side bit per vertex.
    pub fn canonical_key(&self) -> Vec<u32> {
        self.rep
            .iter()
            .zip(&self.side)
            .map(|(&r, &s)| (r as u32) << 1 | s as u32)
            .collect()
    }

    /// Per-vertex component label in order of first appearance.
    pub fn labels(&self) -> Vec<usize> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        let mut c = 0;
        (0..n)
            .map(|v| {
                let r = self.rep[v];
                if index[r] == usize::MAX {
                    index[r] = c;
                    c += 1;
                }
                index[r]
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sets(c: &Component) -> (Vec<usize>, Vec<usize>) {
        (c.first.clone(), c.second.clone())
    }

    #[test]
    fn same_and_diff_on_singletons() {
        let s = QueryState::new(2);
        let same = s.merge((0, 1), Answer::Same).unwrap();
        assert_eq!(sets(&same.components()[0]), (vec![0, 1], vec![]));
        assert_eq!(same.weights(), vec![2]);
        let diff = s.merge((0, 1), Answer::Diff).unwrap();
        assert_eq!(sets(&diff.components()[0]), (vec![0], vec![1]));
        assert_eq!(diff.weights(), vec![0]);
    }

    #[test]
    fn side_rule_merge() {
        // a=0,b=1 SAME; c=2,d=3 DIFF; then (b,c) DIFF
        let s = QueryState::new(4)
            .merge((0, 1), Answer::Same)
            .unwrap()
            .merge((2, 3), Answer::Diff)
            .unwrap();
        let t = s.merge((1, 2), Answer::Diff).unwrap();
        let comps = t.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(sets(&comps[0]), (vec![0, 1, 3], vec![2]));
        assert_eq!(t.weights(), vec![2]);
        // every consistent coloring agrees with the answers
        for c in t.consistent_colorings() {
            assert_eq!(c[0], c[1]);
            assert_ne!(c[2], c[3]);
            assert_ne!(c[1], c[2]);
        }
    }

    #[test]
    fn initial_weights_and_chain() {
        assert_eq!(QueryState::new(5).weights(), vec![1; 5]);
        let g = Graph::path(4);
        let mut s = QueryState::new(4);
        for e in [(0, 1), (1, 2), (2, 3)] {
            s = s.apply_query(&g, e, Answer::Same).unwrap();
        }
        assert_eq!(s.weights(), vec![4]);
    }

    #[test]
    fn rejects_illegal_queries() {
        let g = Graph::path(3);
        let s = QueryState::new(3)
            .apply_query(&g, (0, 1), Answer::Same)
            .unwrap();
        assert_eq!(
            s.apply_query(&g, (1, 0), Answer::Diff),
            Err(Error::IntraComponent((0, 1)))
        );
        assert_eq!(
            QueryState::new(3).apply_query(&g, (0, 2), Answer::Same),
            Err(Error::NotAnEdge((0, 2)))
        );
    }

    #[test]
    fn consistent_coloring_counts() {
        assert_eq!(QueryState::new(3).consistent_colorings().count(), 8);
        let one = QueryState::new(2).merge((0, 1), Answer::Diff).unwrap();
        assert_eq!(one.consistent_colorings().count(), 2);
        let two = QueryState::new(3).merge((0, 1), Answer::Diff).unwrap();
        assert_eq!(two.consistent_coloring_count(), BigUint::from(4u8));
    }

    fn state_with_weights(ws: &[usize]) -> QueryState {
        // build each weight as a monochromatic block, padding with balanced pairs is unnecessary
        let n: usize = ws.iter().sum::<usize>().max(1);
        let mut s = QueryState::new(n.max(ws.len()));
        let mut start = 0;
        for &w in ws {
            for i in 1..w {
                s.merge_in_place((start, start + i), Answer::Same).unwrap();
            }
            start += w.max(1);
        }
        s
    }

    #[test]
    fn terminal_examples() {
        // (0,0,0): three balanced pairs
        let mut s = QueryState::new(6);
        for i in 0..3 {
            s.merge_in_place((2 * i, 2 * i + 1), Answer::Diff).unwrap();
        }
        assert_eq!(s.terminal_outcome(), Some(Outcome::NoMajority));
        let s = state_with_weights(&[5, 1, 1, 1]);
        assert_eq!(s.terminal_outcome(), Some(Outcome::MajorityVertex(0)));
        let s = state_with_weights(&[2, 1, 1]);
        assert_eq!(s.terminal_outcome(), None);
    }

    #[test]
    fn majority_vertex_is_on_heavier_side() {
        // 0 DIFF 1, 1 SAME 2 -> {0} vs {1,2}: weight 1, heavier side holds 1
        let s = QueryState::new(3)
            .merge((0, 1), Answer::Diff)
            .unwrap()
            .merge((1, 2), Answer::Same)
            .unwrap();
        assert_eq!(s.terminal_outcome(), Some(Outcome::MajorityVertex(1)));
    }

    fn arb_state() -> impl Strategy<Value = QueryState> {
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n, any::<bool>()), 0..12).prop_map(move |qs| {
                let mut s = QueryState::new(n);
                for (u, v, same) in qs {
                    if u != v && !s.same_component(u, v) {
                        let a = if same { Answer::Same } else { Answer::Diff };
                        s.merge_in_place((u, v), a).unwrap();
                    }
                }
                s
            })
        })
    }

    proptest! {
        #[test]
        fn weight_sum_has_parity_of_n(s in arb_state()) {
            prop_assert_eq!(s.total_weight() % 2, s.n() % 2);
        }

        #[test]
        fn canonicalization_is_idempotent(s in arb_state()) {
            prop_assert_eq!(s.canonicalized(), s.clone());
        }

        #[test]
        fn merges_halve_consistent_colorings_and_realize_both_weights(
            s in arb_state(), u in 0usize..8, v in 0usize..8
        ) {
            let n = s.n();
            let (u, v) = (u % n, v % n);
            prop_assume!(u != v && !s.same_component(u, v));
            let (wx, wy) = (s.weight_of(u), s.weight_of(v));
            let mut seen = Vec::new();
            for a in Answer::BOTH {
                let t = s.merge((u, v), a).unwrap();
                prop_assert_eq!(t.consistent_colorings().count() * 2, s.consistent_colorings().count());
                seen.push(t.weight_of(u));
            }
            seen.sort_unstable();
            let mut expect = vec![wx + wy, wx.abs_diff(wy)];
            expect.sort_unstable();
            prop_assert_eq!(seen, expect);
        }

        #[test]
        fn terminal_outcome_is_correct_for_every_consistent_coloring(s in arb_state()) {
            let colorings: Vec<_> = s.consistent_colorings().collect();
            for c in &colorings {
                prop_assert!(s.is_consistent_with(c));
            }
            match s.terminal_outcome() {
                Some(o) => {
                    for c in &colorings {
                        prop_assert!(o.is_correct_for(c));
                    }
                }
                None => {
                    // undetermined: no single outcome fits every coloring
                    let any_balanced = colorings.iter().any(|c| c.is_balanced());
                    let any_majority = colorings.iter().any(|c| !c.is_balanced());
                    let fixed_vertex = (0..s.n()).any(|v| colorings.iter().all(|c| Outcome::MajorityVertex(v).is_correct_for(c)));
                    prop_assert!((any_balanced && any_majority) || (!any_balanced && !fixed_vertex));
                }
            }
        }
    }
}
