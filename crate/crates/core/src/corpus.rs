//! Seeded random instance generators.
//!
//! All generators draw from a caller-supplied [`ChaCha8Rng`], so a fixed
//! seed reproduces the same graphs on every platform.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::error::Result;
use crate::gadgets;
use crate::graph::Graph;
use crate::structure;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn erdos_renyi(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid")
}

/// Uniform random recursive tree: vertex `v` attaches to a random earlier one.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, edges).expect("valid")
}

/// Stacked triangulation: start from a triangle and repeatedly put a new
/// vertex inside a random face. Planar, and of minimum degree 3 once
/// `n >= 4`.
pub fn stacked_triangulation(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n < 3 {
        return Graph::complete(n);
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    // Both sides of the starting triangle are faces.
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    Graph::from_edges(n, edges).expect("valid")
}

/// Length of a shortest cycle, if any.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in g.vertices() {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        let mut parent = vec![usize::MAX; g.vertex_count()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbours(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y && parent[y] != x {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Whether `u` and `v` are joined by a path of length 3 in `adj`.
fn has_path3(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    adj[u].iter().any(|&a| a != v && adj[v].iter().any(|&b| b != u && b != a && adj[a].contains(&b)))
}

fn bfs_within(adj: &[Vec<usize>], u: usize, v: usize, limit: usize) -> bool {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            return true;
        }
        if dist[x] == limit {
            continue;
        }
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    false
}

/// Edges of `host` in random order, kept when `accept` allows them.
fn greedy_subgraph(host: &Graph, rng: &mut ChaCha8Rng, accept: impl Fn(&[Vec<usize>], usize, usize) -> bool) -> Graph {
    let mut order: Vec<(usize, usize)> = host.edges().collect();
    order.shuffle(rng);
    let mut adj = vec![Vec::new(); host.vertex_count()];
    let mut kept = Vec::new();
    for (u, v) in order {
        if accept(&adj, u, v) {
            adj[u].push(v);
            adj[v].push(u);
            kept.push((u, v));
        }
    }
    Graph::from_edges(host.vertex_count(), kept).expect("valid")
}

/// Planar graph of girth at least `min_girth`: a greedy edge-maximal
/// subgraph of a stacked triangulation.
pub fn planar_with_girth(n: usize, min_girth: usize, rng: &mut ChaCha8Rng) -> Graph {
    let host = stacked_triangulation(n, rng);
    let limit = min_girth.saturating_sub(2);
    greedy_subgraph(&host, rng, |adj, u, v| !bfs_within(adj, u, v, limit))
}

/// Planar graph with no 4-cycle, greedily grown inside a stacked
/// triangulation.
pub fn planar_no_c4(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let host = stacked_triangulation(n, rng);
    greedy_subgraph(&host, rng, |adj, u, v| !has_path3(adj, u, v))
}

pub fn has_c4(g: &Graph) -> bool {
    g.vertices().any(|u| {
        (u + 1..g.vertex_count()).any(|v| {
            g.neighbours(u).iter().filter(|&&w| g.has_edge(v, w)).count() >= 2
        })
    })
}

/// Random graph with at most `max_degree` on each vertex: random pairs are
/// tried `attempts` times.
pub fn bounded_degree(n: usize, max_degree: usize, attempts: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    if n < 2 {
        return Graph::empty(n);
    }
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || adj[u].contains(&v) || adj[u].len() >= max_degree || adj[v].len() >= max_degree {
            continue;
        }
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).expect("valid")
}

/// Sparse graph with no `H(ell, k)` minor: a random tree plus `extra`
/// random edges, resampled until the exhaustive minor test clears it.
/// `n` must respect the minor-test host cap.
pub fn kell_minor_free(n: usize, extra: usize, ell: usize, k: usize, rng: &mut ChaCha8Rng, caps: &Caps) -> Result<Graph> {
    let h = gadgets::gen_kell_h(ell, k)?;
    let mut extra = extra;
    loop {
        for _ in 0..20 {
            let tree = random_tree(n, rng);
            let mut edges: Vec<(usize, usize)> = tree.edges().collect();
            for _ in 0..extra {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v && !edges.contains(&(u.min(v), u.max(v))) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            let g = Graph::from_edges(n, edges)?;
            if structure::minor_test_bruteforce(&g, &h, caps)?.is_none() {
                return Ok(g);
            }
        }
        extra = extra.saturating_sub(1);
    }
}

/// Mixed pool of small graphs: sparse and dense `G(n, p)`, trees, bounded
/// degree graphs and planar graphs, with `n` in `min_n..=max_n`.
pub fn mixed(count: usize, min_n: usize, max_n: usize, rng: &mut ChaCha8Rng) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n..=max_n);
            match i % 5 {
                0 => erdos_renyi(n, 0.2, rng),
                1 => erdos_renyi(n, rng.gen_range(0.3..0.7), rng),
                2 => random_tree(n, rng),
                3 => bounded_degree(n, rng.gen_range(2..5), 3 * n, rng),
                _ => stacked_triangulation(n, rng),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_reproduce() {
        let a = erdos_renyi(12, 0.3, &mut rng(7));
        let b = erdos_renyi(12, 0.3, &mut rng(7));
        assert_eq!(a, b);
        assert_eq!(mixed(10, 3, 9, &mut rng(1)), mixed(10, 3, 9, &mut rng(1)));
    }

    #[test]
    fn triangulations_are_maximal_planar() {
        let mut r = rng(3);
        for n in 4..30 {
            let g = stacked_triangulation(n, &mut r);
            assert_eq!(g.edge_count(), 3 * n - 6);
            assert!(g.min_degree() >= 3);
        }
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&Graph::petersen()), Some(5));
        assert_eq!(girth(&Graph::cycle(7)), Some(7));
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        assert_eq!(girth(&Graph::path(5)), None);
    }

    #[test]
    fn filtered_generators() {
        let mut r = rng(11);
        for n in 5..25 {
            let g = planar_with_girth(n, 5, &mut r);
            assert!(girth(&g).is_none_or(|x| x >= 5));
            let g = planar_no_c4(n, &mut r);
            assert!(!has_c4(&g));
            let g = bounded_degree(n, 3, 40, &mut r);
            assert!(g.max_degree() <= 3);
        }
        assert!(has_c4(&Graph::cycle(4)));
        assert!(!has_c4(&Graph::petersen()));
    }

    #[test]
    fn kell_free_instances() {
        let mut r = rng(5);
        let h = gadgets::gen_kell_h(2, 1).unwrap();
        for n in 8..=12 {
            let g = kell_minor_free(n, 2, 2, 1, &mut r, &Caps::default()).unwrap();
            assert!(structure::minor_test_bruteforce(&g, &h, &Caps::default()).unwrap().is_none());
        }
    }
}
