use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cut vertices `U` such that every component of `tree - U`, together with its
/// edges into `U`, has at most `p` edges; `|U| <= (n-1)/p`.
///
/// Greedy post-order from vertex 0, children in index order: a vertex is cut
/// as soon as the edges pending below it could not also carry its parent edge.
pub fn centroid_decomposition(tree: &Graph, p: usize) -> Result<Vec<usize>> {
    if !tree.is_tree() {
        return Err(Error::InvalidArgument("not a tree".into()));
    }
    if p == 0 {
        return Err(Error::InvalidArgument(
            "edge budget must be positive".into(),
        ));
    }
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &c in tree.neighbors(v).iter().rev() {
            if !seen[c] {
                seen[c] = true;
                parent[c] = v;
                stack.push(c);
            }
        }
    }
    let mut pending = vec![0usize; n];
    let mut cut = vec![false; n];
    for &v in order.iter().rev() {
        for &c in tree.neighbors(v) {
            if parent[c] == v {
                pending[v] += if cut[c] { 1 } else { pending[c] + 1 };
            }
        }
        let budget_needed = if v == 0 { pending[v] } else { pending[v] + 1 };
        if budget_needed > p {
            cut[v] = true;
        }
    }
    Ok((0..n).filter(|&v| cut[v]).collect())
}
