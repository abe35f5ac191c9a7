//! Exact game values on graphs by memoized minimax.
//!
//! A position is stored as a restricted-growth labeling of the vertices by
//! component plus the weight of every component. Which side of a component is
//! which color never matters for the value, so it is not part of the key.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::state::{Answer, QueryState};
use crate::strategy::{Adversary, Querier};
use crate::weighted::WeightedSolver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KeyMode {
    Generic,
    /// Also identifies a position with its mirror image under `i -> n-1-i`.
    Path,
}

pub const DEFAULT_TABLE_CAP: usize = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Key {
    Packed(u128),
    Wide(Box<[u8]>),
}

#[derive(Debug, Clone, Copy)]
struct Window {
    lb: u8,
    ub: u8,
}

#[derive(Debug, Clone)]
struct Node {
    label: Vec<u8>,
    weight: Vec<u8>,
}

impl Node {
    fn from_state(s: &QueryState) -> Node {
        Node {
            label: s.labels().into_iter().map(|c| c as u8).collect(),
            weight: s.weights().into_iter().map(|w| w as u8).collect(),
        }
    }

    fn terminal(&self) -> bool {
        let total: u32 = self.weight.iter().map(|&w| w as u32).sum();
        let max = self.weight.iter().copied().max().unwrap_or(0) as u32;
        total == 0 || 2 * max > total
    }

    /// Merges component `b` into `a` (`a < b`), keeping the labeling canonical.
    fn merged(&self, a: u8, b: u8, answer: Answer) -> Node {
        let (wa, wb) = (self.weight[a as usize], self.weight[b as usize]);
        let mut weight = self.weight.clone();
        weight[a as usize] = match answer {
            Answer::Same => wa + wb,
            Answer::Diff => wa.abs_diff(wb),
        };
        weight.remove(b as usize);
        let label = self
            .label
            .iter()
            .map(|&l| match l.cmp(&b) {
                std::cmp::Ordering::Less => l,
                std::cmp::Ordering::Equal => a,
                std::cmp::Ordering::Greater => l - 1,
            })
            .collect();
        Node { label, weight }
    }

    fn key_of(label: &[u8], weight: &[u8]) -> Key {
        if label.len() <= 16 {
            let mut k = 0u128;
            for &l in label {
                k = k << 4 | l as u128;
            }
            for &w in weight {
                k = k << 4 | (w / 2) as u128;
            }
            // distinguishes lengths that would otherwise pack alike
            k = k << 4 | (16 - weight.len()) as u128 & 0xf;
            Key::Packed(k)
        } else {
            Key::Wide(label.iter().chain(weight).copied().collect())
        }
    }

    fn key(&self, mode: KeyMode) -> Key {
        let direct = Node::key_of(&self.label, &self.weight);
        if mode == KeyMode::Generic {
            return direct;
        }
        let mut map = vec![u8::MAX; self.weight.len()];
        let mut next = 0u8;
        let mut label = Vec::with_capacity(self.label.len());
        let mut weight = vec![0u8; self.weight.len()];
        for &l in self.label.iter().rev() {
            if map[l as usize] == u8::MAX {
                map[l as usize] = next;
                weight[next as usize] = self.weight[l as usize];
                next += 1;
            }
            label.push(map[l as usize]);
        }
        direct.min(Node::key_of(&label, &weight))
    }
}

/// Memoized exact solver for one graph.
#[derive(Debug, Clone)]
pub struct GraphSolver {
    graph: Graph,
    mode: KeyMode,
    table: HashMap<Key, Window>,
    table_cap: usize,
    weighted: WeightedSolver,
    graph_components: usize,
    nodes_expanded: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub n: usize,
    pub m: usize,
    pub value: u32,
    pub nodes_expanded: u64,
    pub runtime_ms: u128,
    pub canonical: KeyMode,
}

impl GraphSolver {
    /// Solver with the path keying used automatically for mirror-symmetric graphs.
    pub fn new(graph: &Graph) -> Result<Self> {
        let mode = if graph.is_reversal_symmetric() {
            KeyMode::Path
        } else {
            KeyMode::Generic
        };
        GraphSolver::with_mode(graph, mode)
    }

    pub fn with_mode(graph: &Graph, mode: KeyMode) -> Result<Self> {
        graph.check_solvable()?;
        if graph.n() > 255 {
            return Err(Error::TooLarge(format!("{} vertices", graph.n())));
        }
        if mode == KeyMode::Path && !graph.is_reversal_symmetric() {
            return Err(Error::InvalidArgument(
                "path keying needs a graph invariant under i -> n-1-i".into(),
            ));
        }
        Ok(GraphSolver {
            graph: graph.clone(),
            mode,
            table: HashMap::new(),
            table_cap: DEFAULT_TABLE_CAP,
            weighted: WeightedSolver::new(),
            graph_components: graph.component_count(),
            nodes_expanded: 0,
        })
    }

    pub fn set_table_cap(&mut self, cap: usize) {
        self.table_cap = cap;
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn mode(&self) -> KeyMode {
        self.mode
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.nodes_expanded
    }

    pub fn table_len(&self) -> usize {
        self.table.len()
    }

    /// Value of the game from the start.
    pub fn solve(&mut self) -> u32 {
        self.value_of(&QueryState::new(self.graph.n()))
    }

    pub fn report(&mut self) -> SolveReport {
        let start = Instant::now();
        let value = self.solve();
        SolveReport {
            n: self.graph.n(),
            m: self.graph.edge_count(),
            value,
            nodes_expanded: self.nodes_expanded,
            runtime_ms: start.elapsed().as_millis(),
            canonical: self.mode,
        }
    }

    /// Value of the game from an arbitrary reachable position.
    pub fn value_of(&mut self, state: &QueryState) -> u32 {
        let node = Node::from_state(state);
        self.value(&node)
    }

    fn value(&mut self, node: &Node) -> u32 {
        if node.terminal() {
            return 0;
        }
        let mut d = self.lower_bound(node);
        while !self.wins(node, d) {
            d += 1;
        }
        d as u32
    }

    fn lower_bound(&mut self, node: &Node) -> u8 {
        self.weighted.value(&crate::weighted::WeightVector::new(
            node.weight.iter().map(|&w| w as u64),
        )) as u8
    }

    fn upper_bound(&self, node: &Node) -> u8 {
        (node.weight.len() - self.graph_components) as u8
    }

    /// Component pairs joined by at least one edge, heaviest pairs first.
    fn moves(&self, node: &Node) -> Vec<(u8, u8)> {
        let mut pairs: Vec<(u8, u8)> = self
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (node.label[u], node.label[v]);
                (a.min(b), a.max(b))
            })
            .filter(|&(a, b)| a != b)
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs.sort_by_key(|&(a, b)| {
            let (wa, wb) = (node.weight[a as usize], node.weight[b as usize]);
            std::cmp::Reverse((wa.max(wb), wa.min(wb)))
        });
        pairs
    }

    /// Whether the querier can force a determined result within `d` more queries.
    fn wins(&mut self, node: &Node, d: u8) -> bool {
        if node.terminal() {
            return true;
        }
        if d == 0 {
            return false;
        }
        let key = node.key(self.mode);
        let mut window = match self.table.get(&key) {
            Some(&w) => w,
            None => Window {
                lb: self.lower_bound(node),
                ub: self.upper_bound(node),
            },
        };
        if d >= window.ub {
            return true;
        }
        if d < window.lb {
            return false;
        }
        self.nodes_expanded += 1;
        let mut found = false;
        for (a, b) in self.moves(node) {
            let diff = node.merged(a, b, Answer::Diff);
            if !self.wins(&diff, d - 1) {
                continue;
            }
            let same = node.merged(a, b, Answer::Same);
            if self.wins(&same, d - 1) {
                found = true;
                break;
            }
        }
        if found {
            window.ub = d;
        } else {
            window.lb = d + 1;
        }
        if self.table.len() < self.table_cap || self.table.contains_key(&key) {
            self.table.insert(key, window);
        }
        found
    }

    /// Smallest legal edge (in edge order) whose both answers keep the value optimal.
    pub fn optimal_move(&mut self, state: &QueryState) -> Option<Edge> {
        let node = Node::from_state(state);
        if node.terminal() {
            return None;
        }
        let v = self.value(&node) as u8;
        let edges: Vec<Edge> = state.legal_queries(&self.graph).collect();
        edges.into_iter().find(|&(x, y)| {
            let (a, b) = (node.label[x], node.label[y]);
            let (a, b) = (a.min(b), a.max(b));
            self.wins(&node.merged(a, b, Answer::Same), v - 1)
                && self.wins(&node.merged(a, b, Answer::Diff), v - 1)
        })
    }
}

/// `m(G)`, with the mirror keying when the graph allows it.
pub fn solve_graph(graph: &Graph) -> Result<u32> {
    Ok(GraphSolver::new(graph)?.solve())
}

/// Plays the solver's optimal moves; clones share one table.
#[derive(Debug, Clone)]
pub struct OptimalQuerier {
    solver: Rc<RefCell<GraphSolver>>,
}

impl OptimalQuerier {
    pub fn new(graph: &Graph) -> Result<Self> {
        Ok(OptimalQuerier {
            solver: Rc::new(RefCell::new(GraphSolver::new(graph)?)),
        })
    }

    pub fn from_solver(solver: GraphSolver) -> Self {
        OptimalQuerier {
            solver: Rc::new(RefCell::new(solver)),
        }
    }
}

impl Querier for OptimalQuerier {
    fn next_query(&mut self, state: &QueryState) -> Result<Edge> {
        self.solver
            .borrow_mut()
            .optimal_move(state)
            .ok_or_else(|| Error::Strategy("no move from a terminal state".into()))
    }

    fn clone_box(&self) -> Box<dyn Querier> {
        Box::new(self.clone())
    }
}

pub fn optimal_querier(graph: &Graph) -> Result<OptimalQuerier> {
    OptimalQuerier::new(graph)
}

/// Answers so that the remaining game is as long as possible; ties go to DIFF.
#[derive(Debug, Clone)]
pub struct OptimalAdversary {
    solver: Rc<RefCell<GraphSolver>>,
}

impl OptimalAdversary {
    pub fn new(graph: &Graph) -> Result<Self> {
        Ok(OptimalAdversary {
            solver: Rc::new(RefCell::new(GraphSolver::new(graph)?)),
        })
    }

    /// Shares the querier's table.
    pub fn sharing(q: &OptimalQuerier) -> Self {
        OptimalAdversary {
            solver: Rc::clone(&q.solver),
        }
    }
}

impl Adversary for OptimalAdversary {
    fn answer(&mut self, state: &QueryState, e: Edge) -> Result<Answer> {
        let mut s = self.solver.borrow_mut();
        let graph = s.graph().clone();
        let mut best = (Answer::Diff, 0);
        for a in [Answer::Diff, Answer::Same] {
            let next = state.apply_query(&graph, e, a)?;
            let v = if next.is_terminal() {
                0
            } else {
                1 + s.value_of(&next)
            };
            if v > best.1 || (a == Answer::Diff && v == best.1) {
                best = (a, v);
            }
        }
        Ok(best.0)
    }

    fn clone_box(&self) -> Box<dyn Adversary> {
        Box::new(self.clone())
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ForcedReport {
    pub value: u32,
    pub positions: usize,
    pub violations: Vec<String>,
}

/// Fewest queries any querier needs against the fixed adversary `adversary`.
pub fn forced_queries(graph: &Graph, adversary: &dyn Adversary) -> Result<u32> {
    Ok(forced_search(graph, adversary)?.value)
}

/// As [`forced_queries`], also collecting every invariant violation the
/// adversary reports anywhere in the search tree.
pub fn forced_search(graph: &Graph, adversary: &dyn Adversary) -> Result<ForcedReport> {
    graph.check_solvable()?;
    let mut memo = HashMap::new();
    let mut violations = Vec::new();
    let root = QueryState::new(graph.n());
    let value = forced_dfs(
        graph,
        &root,
        adversary.clone_box(),
        &mut memo,
        &mut violations,
    )?;
    violations.sort();
    violations.dedup();
    Ok(ForcedReport {
        value,
        positions: memo.len(),
        violations,
    })
}

fn forced_dfs(
    graph: &Graph,
    state: &QueryState,
    adversary: Box<dyn Adversary>,
    memo: &mut HashMap<(Vec<u32>, u64), u32>,
    violations: &mut Vec<String>,
) -> Result<u32> {
    if state.is_terminal() {
        return Ok(0);
    }
    let key = (state.canonical_key(), adversary.digest());
    if let Some(&v) = memo.get(&key) {
        return Ok(v);
    }
    let mut best = u32::MAX;
    let legal: Vec<Edge> = state.legal_queries(graph).collect();
    for e in legal {
        let mut a = adversary.clone_box();
        let answer = a.answer(state, e)?;
        violations.extend(a.violations().iter().cloned());
        let child = state.apply_query(graph, edge(e.0, e.1), answer)?;
        let v = 1 + forced_dfs(graph, &child, a, memo, violations)?;
        best = best.min(v);
        if best == 1 {
            break;
        }
    }
    memo.insert(key, best);
    Ok(best)
}
