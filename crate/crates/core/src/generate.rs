//! Instance generators: named families, free trees and seeded random graphs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Next rooted level sequence in reverse lexicographic order.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits a level sequence into the first subtree of the root and the rest.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Advances a candidate to the next level sequence rooted at a centre.
fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh {
        if left.len() > rest.len() || (left.len() == rest.len() && left > rest) {
            valid = false;
        }
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (i, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
            *slot = i + 1;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(layout.len());
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::new(layout.len(), edges).expect("level sequences describe trees")
}

/// Every tree on `n` vertices up to isomorphism, each exactly once.
pub fn free_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Graph::empty(1)],
        _ => {}
    }
    let mut out = Vec::new();
    let mut layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    while let Some(tree) = next_tree(layout) {
        out.push(layout_to_graph(&tree));
        match next_rooted_tree(&tree, None) {
            Some(l) => layout = l,
            None => break,
        }
    }
    out
}

/// Isomorphism-invariant string of a tree (centre-rooted parenthesis form).
pub fn tree_canonical_form(tree: &Graph) -> String {
    let n = tree.n();
    if n <= 1 {
        return "()".repeat(n);
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in tree.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn encode(tree: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = tree
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(tree, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer
        .iter()
        .map(|&c| encode(tree, c, usize::MAX))
        .min()
        .expect("a tree has a centre")
}

/// Tree decoded from a Prüfer sequence over `0..seq.len()+2`.
pub fn tree_from_pruefer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer sequences decode to trees")
}

/// Uniformly random labelled tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_pruefer(&seq)
}

/// Erdős–Rényi graph: each pair independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("simple edges")
}

/// Random connected graph: a random tree plus each other pair with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let tree = random_tree(n, seed);
    let extra = gnp(n, p, seed.wrapping_add(0x9e37_79b9));
    union(&tree, &extra)
}

/// Same vertex set, union of the edge sets.
pub fn union(a: &Graph, b: &Graph) -> Graph {
    let mut edges: Vec<Edge> = a.edges().iter().chain(b.edges()).copied().collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::new(a.n().max(b.n()), edges).expect("union of simple graphs")
}

/// A named instance family.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceSpec {
    Path(usize),
    Star(usize),
    Complete(usize),
    Cycle(usize),
    FreeTrees(usize),
    RandomTree { n: usize, seed: u64 },
    RandomGraph { n: usize, p: f64, seed: u64 },
    Minedge(usize),
    File(String),
}

impl InstanceSpec {
    /// The graphs described; a single graph except for the free-tree stream.
    pub fn generate(&self) -> Result<Vec<Graph>> {
        Ok(match self {
            InstanceSpec::Path(n) => vec![Graph::path(*n)],
            InstanceSpec::Star(n) => vec![Graph::star(*n)],
            InstanceSpec::Complete(n) => vec![Graph::complete(*n)],
            InstanceSpec::Cycle(n) => vec![Graph::cycle(*n)],
            InstanceSpec::FreeTrees(n) => free_trees(*n),
            InstanceSpec::RandomTree { n, seed } => vec![random_tree(*n, *seed)],
            InstanceSpec::RandomGraph { n, p, seed } => vec![random_connected(*n, *p, *seed)],
            InstanceSpec::Minedge(n) => vec![crate::constructions::build_minedge_graph(*n)?.graph],
            InstanceSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidArgument(format!("{path}: {e}")))?;
                vec![text.parse()?]
            }
        })
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::Path(n) => write!(f, "path:{n}"),
            InstanceSpec::Star(n) => write!(f, "star:{n}"),
            InstanceSpec::Complete(n) => write!(f, "complete:{n}"),
            InstanceSpec::Cycle(n) => write!(f, "cycle:{n}"),
            InstanceSpec::FreeTrees(n) => write!(f, "free-trees:{n}"),
            InstanceSpec::RandomTree { n, seed } => write!(f, "random-tree:{n}:{seed}"),
            InstanceSpec::RandomGraph { n, p, seed } => write!(f, "random-graph:{n}:{p}:{seed}"),
            InstanceSpec::Minedge(n) => write!(f, "minedge:{n}"),
            InstanceSpec::File(p) => write!(f, "file:{p}"),
        }
    }
}

impl FromStr for InstanceSpec {
    type Err = Error;

    /// `kind:args`, e.g. `path:15`, `random-tree:25:7`, `random-graph:8:0.3:1`.
    /// Seeds default to 0 and the edge probability to 0.3.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad instance spec {s:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<usize> {
            parts.get(i).ok_or_else(bad)?.parse().map_err(|_| bad())
        };
        let seed = |i: usize| -> Result<u64> {
            parts.get(i).map_or(Ok(0), |x| x.parse().map_err(|_| bad()))
        };
        let spec = match parts[0] {
            "path" => InstanceSpec::Path(num(1)?),
            "star" => InstanceSpec::Star(num(1)?),
            "complete" => InstanceSpec::Complete(num(1)?),
            "cycle" => InstanceSpec::Cycle(num(1)?),
            "free-trees" => InstanceSpec::FreeTrees(num(1)?),
            "random-tree" => InstanceSpec::RandomTree {
                n: num(1)?,
                seed: seed(2)?,
            },
            "random-graph" => {
                let p = parts
                    .get(2)
                    .map_or(Ok(0.3), |x| x.parse::<f64>().map_err(|_| bad()))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad());
                }
                InstanceSpec::RandomGraph {
                    n: num(1)?,
                    p,
                    seed: seed(3)?,
                }
            }
            "minedge" => InstanceSpec::Minedge(num(1)?),
            "file" => InstanceSpec::File(parts[1..].join(":")),
            _ => return Err(bad()),
        };
        let arity_ok = match &spec {
            InstanceSpec::RandomTree { .. } => parts.len() <= 3,
            InstanceSpec::RandomGraph { .. } => parts.len() <= 4,
            InstanceSpec::File(p) => !p.is_empty(),
            _ => parts.len() == 2,
        };
        if !arity_ok {
            return Err(bad());
        }
        Ok(spec)
    }
}
