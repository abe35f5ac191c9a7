//! Undirected simple graphs, two-colorings, and their text formats.
//!
//! Graph text format: a header line `n m` followed by `m` lines `u v`,
//! vertices 0-indexed. Coloring text format: a string over `{R, B}`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes a vertex pair into an [`Edge`].
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn star(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (0, i))).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("complete graph edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            e.push((n - 1, 0));
        }
        Graph::new(n, e).expect("cycle edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in sorted order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected component label per vertex, labels in order of first vertex.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().0
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Whether the majority game can be finished at all: connected for even
    /// `n`, at most two components for odd `n`.
    pub fn is_solvable(&self) -> bool {
        let c = self.component_count();
        if self.n % 2 == 0 {
            c <= 1
        } else {
            c <= 2
        }
    }

    pub fn check_solvable(&self) -> Result<()> {
        if self.is_solvable() {
            Ok(())
        } else {
            Err(Error::Unsolvable(format!(
                "{} vertices in {} components",
                self.n,
                self.component_count()
            )))
        }
    }

    /// Whether `i -> n-1-i` maps edges onto edges.
    pub fn is_reversal_symmetric(&self) -> bool {
        let n = self.n;
        self.edges
            .iter()
            .all(|&(u, v)| self.has_edge(n - 1 - u, n - 1 - v))
    }

    /// Parity of the number of edges leaving `set` (given as a membership mask).
    pub fn boundary_parity(&self, in_set: &[bool]) -> u8 {
        let crossing = self
            .edges
            .iter()
            .filter(|&&(u, v)| in_set[u] != in_set[v])
            .count();
        (crossing % 2) as u8
    }

    /// Edge list in breadth-first order from the lowest vertex of each component,
    /// restricted to tree edges.
    pub fn spanning_forest(&self) -> Vec<Edge> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        out.push(edge(v, w));
                        queue.push_back(w);
                    }
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut nums = s.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        });
        let mut next = |what: &str| {
            nums.next()
                .unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            let u = next(&format!("endpoint of edge {i}"))?;
            let v = next(&format!("endpoint of edge {i}"))?;
            edges.push((u, v));
        }
        if nums.next().is_some() {
            return Err(Error::Parse("trailing data after the edge list".into()));
        }
        Graph::new(n, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    #[inline]
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coloring from the low `n` bits of `mask`; bit set means blue.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Coloring(
            (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Color::Blue
                    } else {
                        Color::Red
                    }
                })
                .collect(),
        )
    }

    pub fn count(&self, c: Color) -> usize {
        self.0.iter().filter(|&&x| x == c).count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.count(Color::Red) == self.len()
    }

    /// The strict-majority color, if any.
    pub fn majority_color(&self) -> Option<Color> {
        let r = self.count(Color::Red);
        let b = self.len() - r;
        match r.cmp(&b) {
            std::cmp::Ordering::Greater => Some(Color::Red),
            std::cmp::Ordering::Less => Some(Color::Blue),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn flipped(&self) -> Coloring {
        Coloring(self.0.iter().map(|c| c.flip()).collect())
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "coloring has {} vertices, graph has {n}",
                self.len()
            )))
        }
    }
}

impl std::ops::Index<usize> for Coloring {
    type Output = Color;
    fn index(&self, i: usize) -> &Color {
        &self.0[i]
    }
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'R' | 'r' => Ok(Color::Red),
                'B' | 'b' => Ok(Color::Blue),
                other => Err(Error::Parse(format!("bad color character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Coloring)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}
