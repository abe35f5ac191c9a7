use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::state::{Answer, QueryState};
use crate::strategy::Adversary;

use super::{
    answer_giving, centroid_decomposition, floor_log2, merge_options, sum_answer, treelemma_target,
    Endgame, Phase,
};

/// A subtree hanging off the connecting vertices, with its local tree.
#[derive(Debug, Clone)]
pub struct HangingPart {
    pub vertices: Vec<usize>,
    /// The vertex attaching the part to the rest of the tree, if any.
    pub root: Option<usize>,
    /// Whether `local` carries an extra leaf hung on the root (even parts).
    pub virtual_leaf: bool,
    /// The part as a graph on local indices; the extra leaf, if present, is the last index.
    pub local: Graph,
}

/// Decomposition of a tree around a cut set `U`.
#[derive(Debug, Clone)]
pub struct TreeSplit {
    pub cut: Vec<usize>,
    pub in_cut: Vec<bool>,
    /// Vertices outside `U` lying between two vertices of `U`.
    pub connecting: Vec<bool>,
    pub parts: Vec<HangingPart>,
    pub part_of: Vec<Option<usize>>,
    pub local_index: Vec<usize>,
}

impl TreeSplit {
    pub fn new(tree: &Graph, p: usize) -> Result<Self> {
        let cut = centroid_decomposition(tree, p)?;
        let n = tree.n();
        let mut in_cut = vec![false; n];
        for &u in &cut {
            in_cut[u] = true;
        }
        let connecting = connecting_vertices(tree, &in_cut);
        let mut part_of = vec![None; n];
        let mut local_index = vec![usize::MAX; n];
        let mut parts = Vec::new();
        for s in 0..n {
            if in_cut[s] || connecting[s] || part_of[s].is_some() {
                continue;
            }
            let id = parts.len();
            let mut vertices = vec![s];
            part_of[s] = Some(id);
            let mut i = 0;
            while i < vertices.len() {
                let x = vertices[i];
                for &y in tree.neighbors(x) {
                    if !in_cut[y] && !connecting[y] && part_of[y].is_none() {
                        part_of[y] = Some(id);
                        vertices.push(y);
                    }
                }
                i += 1;
            }
            vertices.sort_unstable();
            for (j, &v) in vertices.iter().enumerate() {
                local_index[v] = j;
            }
            let root = vertices
                .iter()
                .copied()
                .find(|&v| tree.neighbors(v).iter().any(|&y| part_of[y] != Some(id)));
            let virtual_leaf = root.is_some() && vertices.len() % 2 == 0;
            let mut edges: Vec<Edge> = tree
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| part_of[a] == Some(id) && part_of[b] == Some(id))
                .map(|(a, b)| (local_index[a], local_index[b]))
                .collect();
            let size = vertices.len() + virtual_leaf as usize;
            if virtual_leaf {
                edges.push((local_index[root.expect("rooted")], vertices.len()));
            }
            let local = Graph::new(size, edges)?;
            parts.push(HangingPart {
                vertices,
                root,
                virtual_leaf,
                local,
            });
        }
        Ok(TreeSplit {
            cut,
            in_cut,
            connecting,
            parts,
            part_of,
            local_index,
        })
    }
}

/// Non-`U` vertices with at least two neighbouring branches containing `U`.
fn connecting_vertices(tree: &Graph, in_cut: &[bool]) -> Vec<bool> {
    let n = tree.n();
    let total: usize = in_cut.iter().filter(|&&b| b).count();
    // rooted at 0: below[v] = cut vertices in v's subtree
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &c in tree.neighbors(v) {
            if !seen[c] {
                seen[c] = true;
                parent[c] = v;
                order.push(c);
            }
        }
        i += 1;
    }
    let mut below = vec![0usize; n];
    for &v in order.iter().rev() {
        below[v] += in_cut[v] as usize;
        if parent[v] != usize::MAX {
            below[parent[v]] += below[v];
        }
    }
    (0..n)
        .map(|v| {
            if in_cut[v] {
                return false;
            }
            let mut branches = tree
                .neighbors(v)
                .iter()
                .filter(|&&c| parent[c] == v && below[c] > 0)
                .count();
            if parent[v] != usize::MAX && total > below[v] {
                branches += 1;
            }
            branches >= 2
        })
        .collect()
}

/// Odd-tree adversary: a cut set from centroid decomposition, weight-lemma
/// answers inside hanging parts, capped weights elsewhere and exact play of the
/// residual weighted game once the total is small.
#[derive(Debug, Clone)]
pub struct Lefogo2Adversary {
    graph: Graph,
    split: TreeSplit,
    threshold: usize,
    endgame: Endgame,
    violations: Vec<String>,
}

pub const LEFOGO2_P: usize = 32;

impl Lefogo2Adversary {
    pub fn new(tree: &Graph) -> Result<Self> {
        Lefogo2Adversary::with_p(tree, LEFOGO2_P)
    }

    pub fn with_p(tree: &Graph, p: usize) -> Result<Self> {
        if !tree.is_tree() {
            return Err(Error::InvalidArgument("not a tree".into()));
        }
        let n = tree.n();
        if n % 2 == 0 {
            return Err(Error::InvalidArgument(format!("even order {n}")));
        }
        Ok(Lefogo2Adversary {
            graph: tree.clone(),
            split: TreeSplit::new(tree, p)?,
            threshold: (1 << floor_log2(n)) + 3,
            endgame: Endgame::default(),
            violations: Vec::new(),
        })
    }

    pub fn split(&self) -> &TreeSplit {
        &self.split
    }

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

    fn members(&self, state: &QueryState, v: usize) -> Vec<usize> {
        (0..self.graph.n())
            .filter(|&x| state.same_component(x, v))
            .collect()
    }

    fn discipline(&self, state: &QueryState, e: Edge) -> Option<Answer> {
        let sp = &self.split;
        let x = self.members(state, e.0);
        let y = self.members(state, e.1);
        let part = sp.part_of[e.0];
        let inside = |c: &[usize]| part.is_some() && c.iter().all(|&v| sp.part_of[v] == part);
        if inside(&x) && inside(&y) {
            let hp = &sp.parts[part.expect("inside a part")];
            let mut z = vec![false; hp.local.n()];
            for &v in x.iter().chain(&y) {
                z[sp.local_index[v]] = true;
            }
            return match treelemma_target(&hp.local, &z) {
                Some(t) => answer_giving(state, e, t),
                None => Some(sum_answer(state, e)),
            };
        }
        let meets_u = |c: &[usize]| c.iter().any(|&v| sp.in_cut[v]);
        let (wx, wy) = (state.weight_of(e.0), state.weight_of(e.1));
        match (meets_u(&x), meets_u(&y)) {
            (true, false) if wx >= 3 => answer_giving(state, e, wx - wy),
            (false, true) if wy >= 3 => answer_giving(state, e, wy - wx),
            (false, false) => merge_options(state, e)
                .into_iter()
                .filter(|&(_, w)| w <= 2)
                .max_by_key(|&(_, w)| w)
                .map(|(a, _)| a),
            _ => Some(sum_answer(state, e)),
        }
    }

    fn check(&mut self, before: &QueryState, after: &QueryState) {
        let drop = before.total_weight() as i64 - after.total_weight() as i64;
        if !(0..=4).contains(&drop) {
            self.violations
                .push(format!("total weight changed by {}", -drop));
        }
        for c in after.components() {
            let cut_count = c
                .first
                .iter()
                .chain(&c.second)
                .filter(|&&v| self.split.in_cut[v])
                .count();
            let w = c.weight();
            let v = c.min_vertex();
            if cut_count == 0 && w > 2 {
                self.violations
                    .push(format!("component of {v} avoids U with weight {w}"));
            }
            if cut_count >= 1 && w == 0 {
                self.violations
                    .push(format!("component of {v} meets U with weight 0"));
            }
            if cut_count == 1 && w > 4 {
                self.violations
                    .push(format!("component of {v} meets U once with weight {w}"));
            }
        }
    }
}

impl Adversary for Lefogo2Adversary {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_tree;
    use crate::strategy::{play, OrderQuerier, RandomQuerier};

    #[test]
    fn split_of_a_path() {
        let t = Graph::path(13);
        let s = TreeSplit::new(&t, 4).unwrap();
        assert!(!s.cut.is_empty());
        for v in 0..13 {
            let kinds = s.in_cut[v] as u8 + s.connecting[v] as u8 + s.part_of[v].is_some() as u8;
            assert_eq!(kinds, 1, "vertex {v}");
        }
        for hp in &s.parts {
            assert_eq!(
                hp.virtual_leaf,
                hp.vertices.len() % 2 == 0 && hp.root.is_some()
            );
            assert!(hp.local.is_tree());
        }
    }

    #[test]
    fn small_trees_have_no_cut_set() {
        let t = random_tree(31, 5);
        let adv = Lefogo2Adversary::new(&t).unwrap();
        assert!(adv.split().cut.is_empty());
        assert_eq!(adv.split().parts.len(), 1);
        assert!(Lefogo2Adversary::new(&random_tree(8, 1)).is_err());
    }

    #[test]
    fn random_plays_keep_invariants() {
        for seed in 0..40u64 {
            let n = 2 * (seed as usize % 30) + 3;
            let t = random_tree(n, seed);
            for p in [4, 8, LEFOGO2_P] {
                let mut adv = Lefogo2Adversary::with_p(&t, p).unwrap();
                let mut q = RandomQuerier::new(&t, seed ^ 0xabc);
                let tr = play(&t, &mut q, &mut adv).unwrap();
                assert!(
                    adv.violations().is_empty(),
                    "n={n} p={p}: {:?}",
                    adv.violations()
                );
                assert!(tr.len() >= n.saturating_sub(2 * p + 1) || n <= 65);
                let mut adv = Lefogo2Adversary::with_p(&t, p).unwrap();
                play(&t, &mut OrderQuerier::spanning(&t), &mut adv).unwrap();
                assert!(adv.violations().is_empty(), "{:?}", adv.violations());
            }
        }
    }
}
