use crate::error::Result;
use crate::graph::{Edge, Graph};
use crate::state::{Answer, QueryState};
use crate::strategy::Adversary;

use super::{answer_giving, sum_answer};

/// Weight the merged set `z` must get, or `None` when `z` is everything.
///
/// Odd sets get weight 1; even proper sets get twice the parity of the
/// number of edges leaving them.
pub fn treelemma_target(graph: &Graph, z: &[bool]) -> Option<usize> {
    let size = z.iter().filter(|&&b| b).count();
    if size % 2 == 1 {
        Some(1)
    } else if size == graph.n() {
        None
    } else {
        Some(2 * graph.boundary_parity(z) as usize)
    }
}

/// Keeps every proper component at weight 1 (odd size) or `2 * parity of its
/// boundary` (even size).
#[derive(Debug, Clone)]
pub struct TreeLemmaAdversary {
    graph: Graph,
    violations: Vec<String>,
}

impl TreeLemmaAdversary {
    pub fn new(graph: &Graph) -> Self {
        TreeLemmaAdversary {
            graph: graph.clone(),
            violations: Vec::new(),
        }
    }

    /// Checks the weight conditions on every proper component of `state`.
    pub fn conditions_hold(graph: &Graph, state: &QueryState) -> bool {
        state.components().iter().all(|c| {
            let mut z = vec![false; graph.n()];
            for &v in c.first.iter().chain(&c.second) {
                z[v] = true;
            }
            match treelemma_target(graph, &z) {
                Some(t) => c.weight() == t,
                None => true,
            }
        })
    }
}

impl Adversary for TreeLemmaAdversary {
    fn answer(&mut self, state: &QueryState, e: Edge) -> Result<Answer> {
        let z: Vec<bool> = (0..self.graph.n())
            .map(|v| state.same_component(v, e.0) || state.same_component(v, e.1))
            .collect();
        let Some(target) = treelemma_target(&self.graph, &z) else {
            return Ok(sum_answer(state, e));
        };
        Ok(answer_giving(state, e, target).unwrap_or_else(|| {
            self.violations
                .push(format!("no answer to {e:?} gives weight {target}"));
            sum_answer(state, e)
        }))
    }

    fn clone_box(&self) -> Box<dyn Adversary> {
        Box::new(self.clone())
    }

    fn violations(&self) -> &[String] {
        &self.violations
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::free_trees;
    use crate::solver::forced_search;
    use crate::strategy::{play, RandomQuerier};

    #[test]
    fn first_query_on_p4() {
        let g = Graph::path(4);
        let s = QueryState::new(4);
        // an end pair has one boundary edge: weight 2
        let a = TreeLemmaAdversary::new(&g).answer(&s, (0, 1)).unwrap();
        assert_eq!(a, Answer::Same);
        // the middle pair has two: weight 0
        let a = TreeLemmaAdversary::new(&g).answer(&s, (1, 2)).unwrap();
        assert_eq!(a, Answer::Diff);
    }

    #[test]
    fn even_trees_force_all_edges() {
        for n in [2, 4, 6, 8] {
            for t in free_trees(n) {
                let r = forced_search(&t, &TreeLemmaAdversary::new(&t)).unwrap();
                assert_eq!(r.value as usize, n - 1, "{t}");
                assert!(r.violations.is_empty(), "{:?}", r.violations);
            }
        }
    }

    #[test]
    fn conditions_hold_on_random_plays() {
        for n in 2..=14 {
            for seed in 0..20u64 {
                let t = crate::generate::random_tree(n, seed);
                let mut adv = TreeLemmaAdversary::new(&t);
                let tr = play(&t, &mut RandomQuerier::new(&t, seed), &mut adv).unwrap();
                let mut s = QueryState::new(n);
                for &(e, a) in &tr.steps {
                    s = s.apply_query(&t, e, a).unwrap();
                    assert!(TreeLemmaAdversary::conditions_hold(&t, &s));
                }
                assert!(adv.violations().is_empty());
                if n % 2 == 0 {
                    assert_eq!(tr.len(), n - 1);
                    assert_eq!(s.component_count(), 1);
                    assert!(s.total_weight() > 0);
                }
            }
        }
    }
}
