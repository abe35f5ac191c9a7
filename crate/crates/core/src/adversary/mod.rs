//! Adversary strategies for lower bounds on graphs.

mod centroid;
mod covering;
mod eventrees;
mod lefogo2;
mod treelemma;

use std::cell::RefCell;
use std::rc::Rc;

pub use centroid::centroid_decomposition;
pub use covering::{CoveringAdversary, CoveringKind};
pub use eventrees::{cut_balanced_edges, eventrees_coloring};
pub use lefogo2::{HangingPart, Lefogo2Adversary, TreeSplit, LEFOGO2_P};
pub use treelemma::{treelemma_target, TreeLemmaAdversary};

use crate::graph::Edge;
use crate::state::{Answer, QueryState};
use crate::weighted::{WeightVector, WeightedSolver};

/// Which rule set an adversary is currently following.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Discipline,
    Endgame,
}

/// Weights of the two components joined by `e`, then the two possible merged weights.
pub(crate) fn merge_options(state: &QueryState, e: Edge) -> [(Answer, usize); 2] {
    Answer::BOTH.map(|a| {
        let next = state.merge(e, a).expect("cross-component query");
        (a, next.weight_of(e.0))
    })
}

/// Answer producing merged weight `target`, if either does.
pub(crate) fn answer_giving(state: &QueryState, e: Edge, target: usize) -> Option<Answer> {
    merge_options(state, e)
        .into_iter()
        .find(|&(_, w)| w == target)
        .map(|(a, _)| a)
}

/// Answer that adds the two weights.
pub(crate) fn sum_answer(state: &QueryState, e: Edge) -> Answer {
    let [a, b] = merge_options(state, e);
    if a.1 >= b.1 {
        a.0
    } else {
        b.0
    }
}

/// Largest `k` with `2^k <= n`.
pub(crate) fn floor_log2(n: usize) -> u32 {
    usize::BITS - 1 - n.leading_zeros()
}

/// Plays the residual weighted game exactly: picks the answer whose merged
/// weight vector has the larger value, preferring the sum on ties.
#[derive(Debug, Clone, Default)]
pub struct Endgame {
    solver: Rc<RefCell<WeightedSolver>>,
}

impl Endgame {
    pub fn answer(&self, state: &QueryState, e: Edge) -> Answer {
        let mut best: Option<(u32, usize, Answer)> = None;
        for (a, w) in merge_options(state, e) {
            let next = state.merge(e, a).expect("cross-component query");
            let v = self.solver.borrow_mut().value(&next.component_weights());
            if best.is_none_or(|(bv, bw, _)| (v, w) > (bv, bw)) {
                best = Some((v, w, a));
            }
        }
        best.expect("two options").2
    }

    pub fn value(&self, w: &WeightVector) -> u32 {
        self.solver.borrow_mut().value(w)
    }
}
