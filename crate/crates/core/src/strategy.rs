//! Querier and adversary strategies, game playback and transcripts.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{edge, Coloring, Edge, Graph};
use crate::state::{Answer, Outcome, QueryState};

/// Chooses the next comparison.
pub trait Querier {
    fn next_query(&mut self, state: &QueryState) -> Result<Edge>;

    /// Called with the answer to the query just asked.
    fn observe(&mut self, _e: Edge, _answer: Answer) {}

    fn clone_box(&self) -> Box<dyn Querier>;
}

/// Answers comparisons; must be deterministic given its internal state.
pub trait Adversary {
    fn answer(&mut self, state: &QueryState, e: Edge) -> Result<Answer>;

    fn clone_box(&self) -> Box<dyn Adversary>;

    /// Hash of the internal state; equal digests promise equal future behaviour.
    fn digest(&self) -> u64 {
        0
    }

    /// Invariant violations noticed so far.
    fn violations(&self) -> &[String] {
        &[]
    }
}

impl Clone for Box<dyn Querier> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

impl Clone for Box<dyn Adversary> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub steps: Vec<(Edge, Answer)>,
    pub outcome: Outcome,
}

impl Transcript {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the queries on `graph` and checks the recorded outcome.
    pub fn replay(&self, graph: &Graph) -> Result<QueryState> {
        let mut s = QueryState::new(graph.n());
        for &(e, a) in &self.steps {
            if s.is_terminal() {
                return Err(Error::Parse("query after a terminal state".into()));
            }
            s = s.apply_query(graph, e, a)?;
        }
        match s.terminal_outcome() {
            Some(o) if o == self.outcome => Ok(s),
            Some(o) => Err(Error::Parse(format!(
                "recorded {}, replay gives {o}",
                self.outcome
            ))),
            None => Err(Error::Parse(
                "transcript ends in a non-terminal state".into(),
            )),
        }
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((u, v), a) in &self.steps {
            writeln!(f, "QUERY {u} {v} -> {a}")?;
        }
        writeln!(f, "OUTCOME {}", self.outcome)
    }
}

impl FromStr for Transcript {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |line: &str| Error::Parse(format!("bad transcript line: {line:?}"));
        let mut steps = Vec::new();
        let mut outcome = None;
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if outcome.is_some() {
                return Err(Error::Parse("data after OUTCOME".into()));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["QUERY", u, v, "->", a] => {
                    let u = u.parse().map_err(|_| bad(line))?;
                    let v = v.parse().map_err(|_| bad(line))?;
                    let a = match *a {
                        "SAME" => Answer::Same,
                        "DIFF" => Answer::Diff,
                        _ => return Err(bad(line)),
                    };
                    steps.push((edge(u, v), a));
                }
                ["OUTCOME", "NONE"] => outcome = Some(Outcome::NoMajority),
                ["OUTCOME", "MAJORITY", v] => {
                    outcome = Some(Outcome::MajorityVertex(v.parse().map_err(|_| bad(line))?))
                }
                _ => return Err(bad(line)),
            }
        }
        let outcome = outcome.ok_or_else(|| Error::Parse("missing OUTCOME line".into()))?;
        Ok(Transcript { steps, outcome })
    }
}

/// Plays `querier` against `adversary` on `graph` until the result is determined.
pub fn play(
    graph: &Graph,
    querier: &mut dyn Querier,
    adversary: &mut dyn Adversary,
) -> Result<Transcript> {
    graph.check_solvable()?;
    let mut state = QueryState::new(graph.n());
    let mut steps = Vec::new();
    loop {
        if let Some(outcome) = state.terminal_outcome() {
            return Ok(Transcript { steps, outcome });
        }
        let e = querier.next_query(&state)?;
        let e = edge(e.0, e.1);
        if !graph.has_edge(e.0, e.1) {
            return Err(Error::NotAnEdge(e));
        }
        if state.same_component(e.0, e.1) {
            return Err(Error::IntraComponent(e));
        }
        let a = adversary.answer(&state, e)?;
        state = state.apply_query(graph, e, a)?;
        querier.observe(e, a);
        steps.push((e, a));
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExploreReport {
    pub states: usize,
    pub violations: Vec<String>,
}

/// Visits every non-terminal and terminal state reachable when `adversary`
/// answers and any legal query may be asked.
pub fn explore(
    graph: &Graph,
    adversary: &dyn Adversary,
    visit: &mut dyn FnMut(&QueryState),
) -> Result<ExploreReport> {
    graph.check_solvable()?;
    let mut seen = std::collections::HashSet::new();
    let mut violations = Vec::new();
    let mut stack = vec![(QueryState::new(graph.n()), adversary.clone_box())];
    while let Some((state, adv)) = stack.pop() {
        if !seen.insert((state.canonical_key(), adv.digest())) {
            continue;
        }
        visit(&state);
        if state.is_terminal() {
            continue;
        }
        for e in state.legal_queries(graph).collect::<Vec<_>>() {
            let mut a = adv.clone_box();
            let answer = a.answer(&state, e)?;
            violations.extend(a.violations().iter().cloned());
            stack.push((state.apply_query(graph, e, answer)?, a));
        }
    }
    violations.sort();
    violations.dedup();
    Ok(ExploreReport {
        states: seen.len(),
        violations,
    })
}

/// Answers every query according to a fixed coloring.
#[derive(Debug, Clone)]
pub struct ColoringAdversary {
    pub coloring: Coloring,
}

impl ColoringAdversary {
    pub fn new(coloring: Coloring) -> Self {
        ColoringAdversary { coloring }
    }
}

impl Adversary for ColoringAdversary {
    fn answer(&mut self, _state: &QueryState, e: Edge) -> Result<Answer> {
        if e.0.max(e.1) >= self.coloring.len() {
            return Err(Error::VertexOutOfRange {
                vertex: e.0.max(e.1),
                n: self.coloring.len(),
            });
        }
        Ok(QueryState::answer_for(&self.coloring, e))
    }

    fn clone_box(&self) -> Box<dyn Adversary> {
        Box::new(self.clone())
    }
}

/// Gives the same answer to every query.
#[derive(Debug, Clone, Copy)]
pub struct ConstantAdversary(pub Answer);

impl Adversary for ConstantAdversary {
    fn answer(&mut self, _state: &QueryState, _e: Edge) -> Result<Answer> {
        Ok(self.0)
    }

    fn clone_box(&self) -> Box<dyn Adversary> {
        Box::new(*self)
    }
}

/// Uniformly random answers from a seeded stream.
#[derive(Debug, Clone)]
pub struct RandomAdversary {
    rng: ChaCha8Rng,
    seed: u64,
    answered: u64,
}

impl RandomAdversary {
    pub fn new(seed: u64) -> Self {
        RandomAdversary {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
            answered: 0,
        }
    }
}

impl Adversary for RandomAdversary {
    fn answer(&mut self, _state: &QueryState, _e: Edge) -> Result<Answer> {
        self.answered += 1;
        Ok(if self.rng.gen::<bool>() {
            Answer::Same
        } else {
            Answer::Diff
        })
    }

    fn clone_box(&self) -> Box<dyn Adversary> {
        Box::new(self.clone())
    }

    fn digest(&self) -> u64 {
        self.seed.rotate_left(32) ^ self.answered
    }
}

/// Asks the edges of a fixed list in order, skipping those already implied.
#[derive(Debug, Clone)]
pub struct OrderQuerier {
    order: Vec<Edge>,
}

impl OrderQuerier {
    pub fn new(order: Vec<Edge>) -> Self {
        OrderQuerier { order }
    }

    /// Spanning forest first, then every other edge of the graph.
    pub fn spanning(graph: &Graph) -> Self {
        let mut order = graph.spanning_forest();
        let rest: Vec<Edge> = graph
            .edges()
            .iter()
            .copied()
            .filter(|e| !order.contains(e))
            .collect();
        order.extend(rest);
        OrderQuerier { order }
    }
}

impl Querier for OrderQuerier {
    fn next_query(&mut self, state: &QueryState) -> Result<Edge> {
        self.order
            .iter()
            .copied()
            .find(|&(u, v)| !state.same_component(u, v))
            .ok_or_else(|| Error::Strategy("no cross-component edge left in the order".into()))
    }

    fn clone_box(&self) -> Box<dyn Querier> {
        Box::new(self.clone())
    }
}

/// Picks a uniformly random legal query.
#[derive(Debug, Clone)]
pub struct RandomQuerier {
    graph: Graph,
    rng: ChaCha8Rng,
}

impl RandomQuerier {
    pub fn new(graph: &Graph, seed: u64) -> Self {
        RandomQuerier {
            graph: graph.clone(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Querier for RandomQuerier {
    fn next_query(&mut self, state: &QueryState) -> Result<Edge> {
        let legal: Vec<Edge> = state.legal_queries(&self.graph).collect();
        legal
            .choose(&mut self.rng)
            .copied()
            .ok_or_else(|| Error::Strategy("no legal query".into()))
    }

    fn clone_box(&self) -> Box<dyn Querier> {
        Box::new(self.clone())
    }
}
