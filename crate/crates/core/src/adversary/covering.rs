use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::state::{Answer, QueryState};
use crate::strategy::Adversary;

use super::{answer_giving, floor_log2, merge_options, sum_answer, Endgame, Phase};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoveringKind {
    /// Every edge meets `U`; a fresh outside vertex pulls a heavy `U`-component down by one.
    VertexCover,
    /// Odd path with `U` every `stride` vertices; weights stay in a band.
    OddPath { stride: usize },
}

/// Adversary built around a small vertex set `U` whose components are kept
/// unbalanced until the total weight falls to a power of two (plus one), after
/// which the residual weighted game is played exactly.
#[derive(Debug, Clone)]
pub struct CoveringAdversary {
    kind: CoveringKind,
    graph: Graph,
    in_u: Vec<bool>,
    threshold: usize,
    endgame: Endgame,
    violations: Vec<String>,
}

impl CoveringAdversary {
    pub fn lefogo1(graph: &Graph, u: &[usize]) -> Result<Self> {
        let n = graph.n();
        let mut in_u = vec![false; n];
        for &x in u {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
            in_u[x] = true;
        }
        if let Some(&e) = graph.edges().iter().find(|&&(a, b)| !in_u[a] && !in_u[b]) {
            return Err(Error::InvalidArgument(format!(
                "edge {e:?} avoids the cover set"
            )));
        }
        let k = floor_log2(n.max(1));
        let allowed = if k >= 2 { 1usize << (k - 2) } else { 0 };
        let size = in_u.iter().filter(|&&b| b).count();
        if size > allowed {
            return Err(Error::InvalidArgument(format!(
                "cover set has {size} vertices, at most {allowed} allowed for n = {n}"
            )));
        }
        Ok(CoveringAdversary {
            kind: CoveringKind::VertexCover,
            graph: graph.clone(),
            in_u,
            threshold: (1 << k) + 1,
            endgame: Endgame::default(),
            violations: Vec::new(),
        })
    }

    pub fn oddpath(n: usize, stride: usize) -> Result<Self> {
        if n % 2 == 0 || n < 3 {
            return Err(Error::InvalidArgument(format!(
                "path order {n} must be odd and at least 3"
            )));
        }
        if stride != 8 && stride != 9 {
            return Err(Error::InvalidArgument(format!(
                "stride {stride} must be 8 or 9"
            )));
        }
        let mut in_u = vec![false; n];
        let mut v = 1;
        while v < n - 1 {
            in_u[v] = true;
            v += stride;
        }
        in_u[n - 2] = true;
        Ok(CoveringAdversary {
            kind: CoveringKind::OddPath { stride },
            graph: Graph::path(n),
            in_u,
            threshold: (1 << floor_log2(n)) + 1,
            endgame: Endgame::default(),
            violations: Vec::new(),
        })
    }

    pub fn kind(&self) -> CoveringKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cover_set(&self) -> Vec<usize> {
        (0..self.in_u.len()).filter(|&v| self.in_u[v]).collect()
    }

    /// Total weight at or below which the endgame starts.
    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn phase(&self, state: &QueryState) -> Phase {
        if state.total_weight() <= self.threshold {
            Phase::Endgame
        } else {
            Phase::Discipline
        }
    }

    fn u_count(&self, state: &QueryState, e: Edge) -> usize {
        (0..self.in_u.len())
            .filter(|&v| {
                self.in_u[v] && (state.same_component(v, e.0) || state.same_component(v, e.1))
            })
            .count()
    }

    fn discipline(&self, state: &QueryState, e: Edge) -> Option<Answer> {
        match self.kind {
            CoveringKind::VertexCover => {
                for (fresh, other) in [(e.0, e.1), (e.1, e.0)] {
                    let alone =
                        (0..state.n()).all(|x| x == fresh || !state.same_component(x, fresh));
                    let p = state.weight_of(other);
                    if !self.in_u[fresh] && self.in_u[other] && alone && p >= 2 {
                        return answer_giving(state, e, p - 1);
                    }
                }
                Some(sum_answer(state, e))
            }
            CoveringKind::OddPath { .. } => {
                let on_u = self.u_count(state, e);
                let ok = |w: usize| {
                    if on_u == 0 {
                        w <= 1
                    } else {
                        w >= 1 && w <= 2 * on_u
                    }
                };
                merge_options(state, e)
                    .into_iter()
                    .filter(|&(_, w)| ok(w))
                    .max_by_key(|&(_, w)| w)
                    .map(|(a, _)| a)
            }
        }
    }

    fn check(&mut self, before: &QueryState, after: &QueryState) {
        let drop = before.total_weight() as i64 - after.total_weight() as i64;
        if !(0..=2).contains(&drop) {
            self.violations
                .push(format!("total weight changed by {}", -drop));
        }
        for c in after.components() {
            let touches_u = c.first.iter().chain(&c.second).any(|&v| self.in_u[v]);
            if touches_u && c.weight() == 0 {
                self.violations.push(format!(
                    "component of vertex {} meets the cover set with weight 0",
                    c.min_vertex()
                ));
            }
        }
    }
}

impl Adversary for CoveringAdversary {
    fn answer(&mut self, state: &QueryState, e: Edge) -> Result<Answer> {
        if self.phase(state) == Phase::Endgame {
            return Ok(self.endgame.answer(state, e));
        }
        let a = match self.discipline(state, e) {
            Some(a) => a,
            None => {
                self.violations
                    .push(format!("no disciplined answer to {e:?}"));
                sum_answer(state, e)
            }
        };
        let after = state.merge(e, a)?;
        self.check(state, &after);
        Ok(a)
    }

    fn clone_box(&self) -> Box<dyn Adversary> {
        Box::new(self.clone())
    }

    fn violations(&self) -> &[String] {
        &self.violations
    }
}
