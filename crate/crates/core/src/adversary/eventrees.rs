use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Edge, Graph};

/// Vertices on `u`'s side once the tree edge `(u, v)` is removed.
fn side_of(tree: &Graph, u: usize, v: usize) -> Vec<bool> {
    let mut seen = vec![false; tree.n()];
    seen[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &y in tree.neighbors(x) {
            if !seen[y] && !(x == u && y == v) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

fn balanced_on(coloring: &Coloring, part: &[bool]) -> bool {
    let blue = (0..part.len())
        .filter(|&i| part[i] && coloring[i] == Color::Blue)
        .count();
    let size = part.iter().filter(|&&b| b).count();
    2 * blue == size
}

/// Tree edges whose removal leaves two color-balanced parts.
pub fn cut_balanced_edges(tree: &Graph, coloring: &Coloring) -> Vec<Edge> {
    tree.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| balanced_on(coloring, &side_of(tree, u, v)))
        .collect()
}

/// Balanced coloring of an even tree in which every edge cuts off an
/// unbalanced part. The adversary can commit to it in advance.
pub fn eventrees_coloring(tree: &Graph) -> Result<Coloring> {
    let n = tree.n();
    if !tree.is_tree() {
        return Err(Error::InvalidArgument("not a tree".into()));
    }
    if n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("odd order {n}")));
    }
    let mut c = Coloring(
        (0..n)
            .map(|i| if i < n / 2 { Color::Red } else { Color::Blue })
            .collect(),
    );
    while let Some(&(u, v)) = cut_balanced_edges(tree, &c).first() {
        if c[u] == c[v] {
            let side = side_of(tree, u, v);
            for (x, inside) in side.into_iter().enumerate() {
                if inside {
                    c.0[x] = c.0[x].flip();
                }
            }
        }
        c.0.swap(u, v);
    }
    Ok(c)
}
