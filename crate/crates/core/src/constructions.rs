//! Sparse graphs on which `n - b(n)` queries suffice, with their querier and
//! an exhaustive strategy checker.

use serde::Serialize;

use crate::bounds::b;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::state::{Answer, QueryState};
use crate::strategy::Querier;

/// Path `v_1..v_k` with a pendant leaf `u_i` at every `v_i`.
///
/// Labels: `v_i -> i-1`, `u_i -> k+i-1`.
pub fn build_f(k: usize) -> Graph {
    let mut edges: Vec<Edge> = (1..k).map(|i| (i - 1, i)).collect();
    edges.extend((0..k).map(|i| (i, k + i)));
    Graph::new(2 * k, edges).expect("F_k is simple")
}

#[derive(Debug, Clone, Serialize)]
pub struct LabeledConstruction {
    pub n: usize,
    pub graph: Graph,
    /// `v_1..v_k`.
    pub path: Vec<usize>,
    /// `u_1..u_k`, `leaves[i]` hangs on `path[i]`.
    pub leaves: Vec<usize>,
    /// `v_{k-b(n)+1}..v_k`, joined to every other vertex.
    pub hubs: Vec<usize>,
    /// The extra vertex when `n` is odd.
    pub leftover: Option<usize>,
}

impl LabeledConstruction {
    pub fn k(&self) -> usize {
        self.path.len()
    }

    pub fn is_hub(&self, v: usize) -> bool {
        self.hubs.contains(&v)
    }

    /// Leaf attached to path vertex `v`.
    pub fn leaf_of(&self, v: usize) -> usize {
        self.leaves[v]
    }
}

/// `F_{n/2}`, the extra vertex for odd `n`, and every edge at the last `b(n)` path vertices.
pub fn build_minedge_graph(n: usize) -> Result<LabeledConstruction> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} must be at least 2"
        )));
    }
    let k = n / 2;
    let hub_count = (b(n as u64) as usize).min(k);
    let hubs: Vec<usize> = (k - hub_count..k).collect();
    let mut edges: Vec<Edge> = build_f(k).edges().to_vec();
    for &h in &hubs {
        for v in 0..n {
            if v != h {
                edges.push(edge(h, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(LabeledConstruction {
        n,
        graph: Graph::new(n, edges)?,
        path: (0..k).collect(),
        leaves: (k..2 * k).collect(),
        hubs,
        leftover: (n % 2 == 1).then_some(2 * k),
    })
}

/// Query order of the doubling algorithm on a copy of `F_l` given as
/// `(path vertex, leaf)` pairs, assuming every answer is SAME.
///
/// One query per pair for `l = 1`; for `2l`, both halves and then the edge
/// joining the last path vertex of the first half to the first of the second.
pub fn algorithm_a(copy: &[(usize, usize)]) -> Result<Vec<Edge>> {
    let l = copy.len();
    if !l.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "copy size {l} is not a power of two"
        )));
    }
    let mut out = Vec::with_capacity(2 * l - 1);
    fn go(copy: &[(usize, usize)], out: &mut Vec<Edge>) {
        if copy.len() == 1 {
            out.push(edge(copy[0].0, copy[0].1));
            return;
        }
        let h = copy.len() / 2;
        go(&copy[..h], out);
        go(&copy[h..], out);
        out.push(edge(copy[h - 1].0, copy[h].0));
    }
    go(copy, &mut out);
    Ok(out)
}

/// Checks that `copy` is laid out as `F_l` inside `graph`.
pub fn check_copy(graph: &Graph, copy: &[(usize, usize)]) -> Result<()> {
    for (i, &(p, q)) in copy.iter().enumerate() {
        if !graph.has_edge(p, q) {
            return Err(Error::InvalidArgument(format!("pair {i} is not an edge")));
        }
        if i > 0 && !graph.has_edge(copy[i - 1].0, p) {
            return Err(Error::InvalidArgument(format!(
                "path break before pair {i}"
            )));
        }
    }
    Ok(())
}

/// Querier for [`build_minedge_graph`].
///
/// Keeps a stack of monochromatic blocks with strictly decreasing sizes.
/// Leaf pairs `(v_i, u_i)` are pushed in path order, and the top two blocks
/// are compared whenever their sizes agree, so every component size stays a
/// power of two. When a DIFF leaves the next path vertex without an edge to
/// the top block, the next push is a hub pair instead. Should that happen
/// with no hub left, the remaining unbalanced parts are joined through the
/// fewest balanced ones.
#[derive(Debug, Clone)]
pub struct MinedgeQuerier {
    c: LabeledConstruction,
    stack: Vec<usize>,
    next_path: usize,
    hubs_left: Vec<usize>,
    pending: Option<Pending>,
    bridging: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pending {
    Push(usize),
    Merge,
}

impl MinedgeQuerier {
    pub fn new(c: &LabeledConstruction) -> Self {
        MinedgeQuerier {
            c: c.clone(),
            stack: Vec::new(),
            next_path: 0,
            hubs_left: c.hubs.iter().rev().copied().collect(),
            pending: None,
            bridging: false,
        }
    }

    /// Rejects graphs other than the construction it was built for.
    pub fn for_graph(graph: &Graph) -> Result<Self> {
        let c = build_minedge_graph(graph.n())?;
        if &c.graph != graph {
            return Err(Error::InvalidArgument("not the sparse construction".into()));
        }
        Ok(MinedgeQuerier::new(&c))
    }

    fn plain_len(&self) -> usize {
        self.c.k() - self.c.hubs.len()
    }

    fn edge_between(&self, state: &QueryState, x: usize, y: usize) -> Option<Edge> {
        self.c.graph.edges().iter().copied().find(|&(u, v)| {
            (state.same_component(u, x) && state.same_component(v, y))
                || (state.same_component(u, y) && state.same_component(v, x))
        })
    }

    fn size(state: &QueryState, v: usize) -> usize {
        (0..state.n())
            .filter(|&x| state.same_component(x, v))
            .count()
    }

    fn stack_step(&mut self, state: &QueryState) -> Option<Edge> {
        let len = self.stack.len();
        if len >= 2 {
            let (x, y) = (self.stack[len - 2], self.stack[len - 1]);
            if Self::size(state, x) == Self::size(state, y) {
                let e = self.edge_between(state, x, y)?;
                self.pending = Some(Pending::Merge);
                return Some(e);
            }
        }
        let top = self.stack.last().copied();
        if self.next_path < self.plain_len() {
            let v = self.c.path[self.next_path];
            let joined = top.is_none_or(|t| self.edge_between(state, t, v).is_some());
            if joined {
                self.next_path += 1;
                self.pending = Some(Pending::Push(v));
                return Some(edge(v, self.c.leaf_of(v)));
            }
        }
        let h = self.hubs_left.pop()?;
        self.pending = Some(Pending::Push(h));
        Some(edge(h, self.c.leaf_of(h)))
    }

    fn bridge(&self, state: &QueryState) -> Option<Edge> {
        let legal: Vec<Edge> = state.legal_queries(&self.c.graph).collect();
        let live = |v: usize| state.weight_of(v) > 0;
        if let Some(&e) = legal.iter().find(|&&(x, y)| live(x) && live(y)) {
            return Some(e);
        }
        // absorb the balanced part touching the most unbalanced ones
        let mut best: Option<(usize, Edge)> = None;
        for &(x, y) in &legal {
            let (z, w) = match (live(x), live(y)) {
                (true, false) => (y, x),
                (false, true) => (x, y),
                _ => continue,
            };
            let mut reps: Vec<usize> = legal
                .iter()
                .filter_map(|&(p, q)| {
                    if state.same_component(p, z) && live(q) {
                        Some(state.component_of(q))
                    } else if state.same_component(q, z) && live(p) {
                        Some(state.component_of(p))
                    } else {
                        None
                    }
                })
                .collect();
            reps.sort_unstable();
            reps.dedup();
            if best.is_none_or(|(n, _)| reps.len() > n) {
                best = Some((reps.len(), edge(z, w)));
            }
        }
        best.map(|(_, e)| e).or_else(|| legal.first().copied())
    }
}

impl Querier for MinedgeQuerier {
    fn next_query(&mut self, state: &QueryState) -> Result<Edge> {
        self.pending = None;
        if !self.bridging {
            if let Some(e) = self.stack_step(state) {
                return Ok(e);
            }
            self.bridging = true;
        }
        self.bridge(state)
            .ok_or_else(|| Error::Strategy("no legal query left".into()))
    }

    fn observe(&mut self, _e: Edge, answer: Answer) {
        match (self.pending.take(), answer) {
            (Some(Pending::Push(v)), Answer::Same) => self.stack.push(v),
            (Some(Pending::Merge), Answer::Same) => {
                self.stack.pop();
            }
            (Some(Pending::Merge), Answer::Diff) => {
                self.stack.pop();
                self.stack.pop();
            }
            _ => {}
        }
    }

    fn clone_box(&self) -> Box<dyn Querier> {
        Box::new(self.clone())
    }
}

pub fn minedge_querier(n: usize) -> Result<MinedgeQuerier> {
    Ok(MinedgeQuerier::new(&build_minedge_graph(n)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub max_queries: usize,
    pub budget: usize,
    pub pass: bool,
    pub leaves_checked: u64,
    /// Answers along the first failing path, if any.
    pub failure: Option<String>,
}

/// Walks every answer sequence, checking the query budget and that each final
/// outcome is right for every coloring consistent with the answers.
pub fn verify_querier(graph: &Graph, querier: &dyn Querier, budget: usize) -> Result<VerifyReport> {
    graph.check_solvable()?;
    let mut report = VerifyReport {
        max_queries: 0,
        budget,
        pass: true,
        leaves_checked: 0,
        failure: None,
    };
    let mut path = Vec::new();
    walk(
        graph,
        &QueryState::new(graph.n()),
        querier.clone_box(),
        &mut path,
        &mut report,
    )?;
    report.pass = report.failure.is_none() && report.max_queries <= budget;
    if report.failure.is_none() && report.max_queries > budget {
        report.failure = Some(format!(
            "{} queries exceed the budget {budget}",
            report.max_queries
        ));
    }
    Ok(report)
}

fn describe(path: &[(Edge, Answer)]) -> String {
    path.iter()
        .map(|((u, v), a)| format!("{u}-{v}:{a}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn walk(
    graph: &Graph,
    state: &QueryState,
    querier: Box<dyn Querier>,
    path: &mut Vec<(Edge, Answer)>,
    report: &mut VerifyReport,
) -> Result<()> {
    if report.failure.is_some() {
        return Ok(());
    }
    if let Some(outcome) = state.terminal_outcome() {
        report.leaves_checked += 1;
        report.max_queries = report.max_queries.max(path.len());
        if let Some(bad) = state
            .consistent_colorings()
            .find(|c| !outcome.is_correct_for(c))
        {
            report.failure = Some(format!(
                "{} ends with {outcome}, wrong for {bad}",
                describe(path)
            ));
        }
        return Ok(());
    }
    if path.len() > report.budget.max(graph.n()) {
        report.failure = Some(format!("{} is still undecided", describe(path)));
        return Ok(());
    }
    let mut probe = querier.clone_box();
    let e = match probe.next_query(state) {
        Ok(e) => edge(e.0, e.1),
        Err(err) => {
            report.failure = Some(format!("{}: {err}", describe(path)));
            return Ok(());
        }
    };
    for a in Answer::BOTH {
        let next = match state.apply_query(graph, e, a) {
            Ok(s) => s,
            Err(err) => {
                report.failure = Some(format!("{}: {err}", describe(path)));
                return Ok(());
            }
        };
        let mut q = probe.clone_box();
        q.observe(e, a);
        path.push((e, a));
        walk(graph, &next, q, path, report)?;
        path.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::{play, ConstantAdversary, OrderQuerier};

    #[test]
    fn f_graphs() {
        assert_eq!(build_f(1).edges(), &[(0, 1)]);
        let f2 = build_f(2);
        assert_eq!(f2.edge_count(), 3);
        assert!(f2.is_tree());
        assert_eq!(f2.degree_sequence().iter().filter(|&&d| d == 1).count(), 2);
        let f4 = build_f(4);
        assert_eq!(f4.edge_count(), 7);
        let by_label: Vec<usize> = (0..8).map(|v| f4.degree(v)).collect();
        assert_eq!(by_label, vec![2, 3, 3, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn edge_budgets() {
        for n in 2..=64 {
            let c = build_minedge_graph(n).unwrap();
            assert!(
                c.graph.edge_count() <= n * (1 + b(n as u64) as usize),
                "n={n}"
            );
            assert!(c.graph.is_connected());
            for &h in &c.hubs {
                assert_eq!(c.graph.degree(h), n - 1);
            }
        }
        assert!(build_minedge_graph(4).unwrap().graph.edge_count() <= 8);
        assert!(build_minedge_graph(6).unwrap().graph.edge_count() <= 18);
        assert!(build_minedge_graph(8).unwrap().graph.edge_count() <= 16);
    }

    #[test]
    fn doubling_algorithm_orders() {
        assert_eq!(algorithm_a(&[(0, 1)]).unwrap(), vec![(0, 1)]);
        assert!(algorithm_a(&[(0, 1), (2, 3), (4, 5)]).is_err());
        let f4 = build_f(4);
        let copy: Vec<(usize, usize)> = (0..4).map(|i| (i, 4 + i)).collect();
        check_copy(&f4, &copy).unwrap();
        let q = algorithm_a(&copy).unwrap();
        assert_eq!(q.len(), 7);
        // every all-SAME run ends monochromatic on all eight vertices
        let t = play(
            &f4,
            &mut OrderQuerier::new(q),
            &mut ConstantAdversary(Answer::Same),
        );
        assert!(t.is_ok());
    }

    #[test]
    fn doubling_on_f2_ends_balanced_or_monochromatic() {
        let f2 = build_f(2);
        let q = algorithm_a(&[(0, 2), (1, 3)]).unwrap();
        for mask in 0..8u32 {
            let mut s = QueryState::new(4);
            let mut stopped = false;
            for (i, &e) in q.iter().enumerate() {
                let a = if mask >> i & 1 == 1 {
                    Answer::Diff
                } else {
                    Answer::Same
                };
                let (wx, wy) = (s.weight_of(e.0), s.weight_of(e.1));
                s = s.apply_query(&f2, e, a).unwrap();
                if a == Answer::Diff {
                    assert_eq!(wx, wy, "DIFF joins equal monochromatic parts");
                    assert_eq!(s.weight_of(e.0), 0);
                    stopped = true;
                    break;
                }
            }
            if !stopped {
                assert_eq!(s.component_count(), 1);
                assert_eq!(s.weight_of(0), 4);
            }
        }
    }

    #[test]
    fn verify_examples() {
        let p4 = Graph::path(4);
        let r = verify_querier(&p4, &OrderQuerier::spanning(&p4), 3).unwrap();
        assert!(r.pass);
        let c = build_minedge_graph(8).unwrap();
        let q = MinedgeQuerier::new(&c);
        let r = verify_querier(&c.graph, &q, 7).unwrap();
        assert!(r.pass, "{:?}", r.failure);
        assert_eq!(r.max_queries, 7);
        let r = verify_querier(&c.graph, &q, 6).unwrap();
        assert!(!r.pass);
        let r = verify_querier(
            &build_minedge_graph(4).unwrap().graph,
            &minedge_querier(4).unwrap(),
            3,
        )
        .unwrap();
        assert!(r.pass);
        assert!(MinedgeQuerier::for_graph(&Graph::path(8)).is_err());
    }

    #[test]
    fn all_same_finishes_monochromatic() {
        let c = build_minedge_graph(8).unwrap();
        let t = play(
            &c.graph,
            &mut MinedgeQuerier::new(&c),
            &mut ConstantAdversary(Answer::Same),
        )
        .unwrap();
        assert!(t.len() <= 7);
        assert!(matches!(
            t.outcome,
            crate::state::Outcome::MajorityVertex(_)
        ));
    }

    #[test]
    fn querier_meets_budget_up_to_sixteen() {
        for n in 2..=16 {
            let c = build_minedge_graph(n).unwrap();
            let r = verify_querier(&c.graph, &MinedgeQuerier::new(&c), n - b(n as u64) as usize)
                .unwrap();
            assert!(r.pass, "n={n}: {:?} max {}", r.failure, r.max_queries);
        }
    }
}
