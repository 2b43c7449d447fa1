//! Constructions: the lower-bound family `G(s, N)`, `K*_{s,t}`,
//! subdivisions, tree closures and the dominant-vertex graph `H(ell, k)`.
//!
//! Numbering is deterministic. Roots and dominant vertices come first,
//! recursive blocks follow in order.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex count of `G(s, N)`: `v(2) = N + 2`, `v(s) = (N + 1) v(s - 1) + 1`.
pub fn gsn_vertex_count(s: usize, n: usize) -> Option<usize> {
    if s < 2 {
        return None;
    }
    let mut v = n.checked_add(2)?;
    for _ in 2..s {
        v = v.checked_mul(n.checked_add(1)?)?.checked_add(1)?;
    }
    Some(v)
}

/// `G(s, N)`: the star `K_{1,N+1}` for `s = 2`, otherwise `N + 1` copies of
/// `G(s - 1, N)` under a new dominant vertex. The root is vertex 0.
pub fn gen_gsn(s: usize, n: usize, cap: usize) -> Result<Graph> {
    if s < 2 || n < 1 {
        return Err(Error::InvalidInput("G(s, N) needs s >= 2 and N >= 1".into()));
    }
    let size = gsn_vertex_count(s, n).unwrap_or(usize::MAX);
    if size > cap {
        return Err(Error::CapExceeded {
            what: "G(s, N) vertices",
            size,
            cap,
        });
    }
    let mut edges = Vec::new();
    build_gsn(s, n, 0, &mut edges);
    Graph::from_edges(size, edges)
}

/// Writes `G(s, N)` rooted at `base`; returns the number of vertices used.
fn build_gsn(s: usize, n: usize, base: usize, edges: &mut Vec<(usize, usize)>) -> usize {
    if s == 2 {
        for leaf in 1..=n + 1 {
            edges.push((base, base + leaf));
        }
        return n + 2;
    }
    let mut next = base + 1;
    for _ in 0..=n {
        let start = next;
        let used = build_gsn(s - 1, n, start, edges);
        for v in start..start + used {
            edges.push((base, v));
        }
        next += used;
    }
    next - base
}

/// `K*_{s,t}`: the side `A = 0..s`, the side `T = s..s+t`, then one vertex
/// per pair of `A` in lexicographic pair order.
pub fn gen_kst_star(s: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..s {
        for b in s..s + t {
            edges.push((a, b));
        }
    }
    let mut next = s + t;
    for i in 0..s {
        for j in i + 1..s {
            edges.push((i, next));
            edges.push((j, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges).expect("valid")
}

/// Subdivides every edge once. Division vertices follow the original ones
/// in edge order.
pub fn exact_one_subdivision(g: &Graph) -> Graph {
    let lengths = vec![1; g.edge_count()];
    le_k_subdivision(g, &lengths).expect("lengths match")
}

/// Subdivides the `i`-th edge (in `g.edges()` order) `lengths[i]` times.
pub fn le_k_subdivision(g: &Graph, lengths: &[usize]) -> Result<Graph> {
    if lengths.len() != g.edge_count() {
        return Err(Error::InvalidInput(format!(
            "{} subdivision lengths for {} edges",
            lengths.len(),
            g.edge_count()
        )));
    }
    let mut next = g.vertex_count();
    let mut edges = Vec::new();
    for ((u, v), &len) in g.edges().zip(lengths) {
        let mut prev = u;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edges(next, edges)
}

/// `ell` disjoint copies of `K_{1,k}` plus a dominant vertex 0. Copy `i`
/// has centre `1 + i (k + 1)` followed by its `k` leaves.
pub fn gen_kell_h(ell: usize, k: usize) -> Result<Graph> {
    if ell < 2 || k < 1 {
        return Err(Error::InvalidInput("H(ell, k) needs ell >= 2 and k >= 1".into()));
    }
    let n = 1 + ell * (k + 1);
    let mut edges = Vec::new();
    for i in 0..ell {
        let centre = 1 + i * (k + 1);
        for leaf in centre + 1..=centre + k {
            edges.push((centre, leaf));
        }
    }
    edges.extend((1..n).map(|v| (0, v)));
    Graph::from_edges(n, edges)
}

/// Complete `arity`-ary tree with `levels` levels, numbered in BFS order.
pub fn complete_ary_tree(arity: usize, levels: usize) -> Graph {
    if levels == 0 {
        return Graph::empty(0);
    }
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut next = 1;
    for _ in 1..levels {
        let mut below = Vec::new();
        for &parent in &level {
            for _ in 0..arity {
                edges.push((parent, next));
                below.push(next);
                next += 1;
            }
        }
        level = below;
    }
    Graph::from_edges(next, edges).expect("valid")
}

/// Complete binary tree of radius `r` (root 0, leaves at depth `r`).
pub fn complete_binary_tree(r: usize) -> Graph {
    complete_ary_tree(2, r + 1)
}

/// Adds an edge between every ancestor and descendant of a rooted tree.
pub fn tree_closure(tree: &Graph, root: usize) -> Result<Graph> {
    if !tree.is_tree() {
        return Err(Error::InvalidInput("closure needs a tree".into()));
    }
    tree.check_vertex(root)?;
    let n = tree.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut edges = Vec::new();
    while let Some(v) = queue.pop_front() {
        let mut up = parent[v];
        while up != usize::MAX {
            edges.push((up, v));
            up = parent[up];
        }
        for &w in tree.neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Declarative gadget description, as accepted by the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetSpec {
    Gsn { s: usize, n: usize },
    KstStar { s: usize, t: usize },
    ExactOneSubdivision(Graph),
    LeKSubdivision { base: Graph, lengths: Vec<usize> },
    KellH { ell: usize, k: usize },
    TreeClosure { tree: Graph, root: usize },
    CompleteBinaryTree { radius: usize },
}

impl GadgetSpec {
    pub fn build(&self, vertex_cap: usize) -> Result<Graph> {
        let g = match self {
            GadgetSpec::Gsn { s, n } => return gen_gsn(*s, *n, vertex_cap),
            GadgetSpec::KstStar { s, t } => {
                if *s < 1 || *t < 1 {
                    return Err(Error::InvalidInput("K*_{s,t} needs s, t >= 1".into()));
                }
                gen_kst_star(*s, *t)
            }
            GadgetSpec::ExactOneSubdivision(base) => exact_one_subdivision(base),
            GadgetSpec::LeKSubdivision { base, lengths } => le_k_subdivision(base, lengths)?,
            GadgetSpec::KellH { ell, k } => gen_kell_h(*ell, *k)?,
            GadgetSpec::TreeClosure { tree, root } => tree_closure(tree, *root)?,
            GadgetSpec::CompleteBinaryTree { radius } => {
                if *radius >= 20 {
                    return Err(Error::CapExceeded {
                        what: "binary tree radius",
                        size: *radius,
                        cap: 19,
                    });
                }
                complete_binary_tree(*radius)
            }
        };
        if g.vertex_count() > vertex_cap {
            return Err(Error::CapExceeded {
                what: "gadget vertices",
                size: g.vertex_count(),
                cap: vertex_cap,
            });
        }
        Ok(g)
    }
}
