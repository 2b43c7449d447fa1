//! Undirected simple graphs with dense vertex ids.
//!
//! A [`Graph`] is immutable once built: every operation that changes the
//! vertex or edge set returns a new value. Adjacency lists are kept sorted,
//! which makes `has_edge` a binary search and edge iteration lexicographic.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds a graph on `n` vertices. Parallel edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::Loop {
                    vertex: u,
                    line: None,
                });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates raw symmetric adjacency lists.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph {
            adj,
            edge_count: twice / 2,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    /// Subgraph induced by `vertices`. Returns the subgraph and the table
    /// mapping each new id to its host id (sorted ascending).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            self.check_vertex(old)?;
            index[old] = new;
        }
        let adj = keep
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Ok((Self::from_raw_adjacency(adj), keep))
    }

    /// Quotient by a partition of the vertex set: one vertex per part, an
    /// edge between two parts iff some host edge crosses them. Loops and
    /// parallel edges vanish. Returns the quotient and the projection
    /// `host vertex -> part index`.
    pub fn contract(&self, partition: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
        let n = self.vertex_count();
        let mut projection = vec![usize::MAX; n];
        for (part_id, part) in partition.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidInput(format!("part {part_id} is empty")));
            }
            for &v in part {
                self.check_vertex(v)?;
                if projection[v] != usize::MAX {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v} appears in parts {} and {part_id}",
                        projection[v]
                    )));
                }
                projection[v] = part_id;
            }
        }
        if let Some(v) = projection.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidInput(format!("vertex {v} is not covered by the partition")));
        }
        let mut adj = vec![Vec::new(); partition.len()];
        for (u, v) in self.edges() {
            let (pu, pv) = (projection[u], projection[v]);
            if pu != pv {
                adj[pu].push(pv);
                adj[pv].push(pu);
            }
        }
        Ok((Self::from_raw_adjacency(adj), projection))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let edges = self.edges().filter(|&e| e != (u.min(v), u.max(v)));
        Graph::from_edges(self.vertex_count(), edges).expect("subgraph of a valid graph")
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::from_edges(self.vertex_count(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Deletes `v` and relabels the remaining vertices in order.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = self.vertices().filter(|&w| w != v).collect();
        self.induced_subgraph(&keep).expect("valid ids").0
    }

    /// Contracts the edge `uv`; the merged vertex takes the smaller id and
    /// everything above the larger id shifts down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidInput(format!("{u}{v} is not an edge")));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let mut partition: Vec<Vec<usize>> = Vec::with_capacity(self.vertex_count() - 1);
        for w in self.vertices() {
            if w == hi {
                continue;
            }
            if w == lo {
                partition.push(vec![lo, hi]);
            } else {
                partition.push(vec![w]);
            }
        }
        Ok(self.contract(&partition)?.0)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + shift).collect()),
        );
        Self::from_raw_adjacency(adj)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected, acyclic and nonempty.
    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.edge_count + 1 == self.vertex_count() && self.is_connected()
    }

    /// BFS distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Bitmask adjacency, for search routines on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.vertex_count() > 64 {
            return Err(Error::CapExceeded {
                what: "bitmask adjacency",
                size: self.vertex_count(),
                cap: 64,
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect())
    }

    // Named families.

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid")
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("valid")
    }

    /// Wheel with hub 0 and rim `1..=rim`.
    pub fn wheel(rim: usize) -> Graph {
        let spokes = (1..=rim).map(|v| (0, v));
        let rim_edges = (1..=rim).map(|v| (v, v % rim + 1));
        Graph::from_edges(rim + 1, spokes.chain(rim_edges)).expect("valid")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid")
    }
}

/// Finds an isomorphism `g -> h` as a vertex map, by backtracking with
/// degree filtering. Intended for small graphs.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    // Map g's vertices in BFS order so each new vertex has mapped neighbours.
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut seen = vec![false; g.vertex_count()];
    for comp in g.components() {
        let root = *comp.iter().max_by_key(|&&v| (g.degree(v), usize::MAX - v)).unwrap();
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; g.vertex_count()];
    let mut used = vec![false; h.vertex_count()];
    fn extend(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for cand in h.vertices() {
            if used[cand] || h.degree(cand) != g.degree(v) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], cand));
            if !consistent {
                continue;
            }
            map[v] = cand;
            used[cand] = true;
            if extend(g, h, order, depth + 1, map, used) {
                return true;
            }
            used[cand] = false;
            map[v] = usize::MAX;
        }
        false
    }
    extend(g, h, &order, 0, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_consecutive_cycle_vertices_is_path() {
        let (sub, map) = Graph::cycle(5).induced_subgraph(&[1, 2, 3]).unwrap();
        assert!(is_isomorphic(&sub, &Graph::path(3)));
        assert_eq!(map, vec![1, 2, 3]);
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let g = Graph::petersen();
        let all: Vec<usize> = g.vertices().collect();
        assert_eq!(g.induced_subgraph(&all).unwrap().0, g);
    }

    #[test]
    fn induced_k4_three_vertices() {
        let (sub, _) = Graph::complete(4).induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(sub, Graph::complete(3));
    }

    #[test]
    fn induced_rejects_bad_id() {
        assert!(matches!(
            Graph::path(3).induced_subgraph(&[0, 7]),
            Err(Error::InvalidVertex { vertex: 7, .. })
        ));
    }

    #[test]
    fn contract_singletons_is_identity() {
        let g = Graph::wheel(5);
        let parts: Vec<Vec<usize>> = g.vertices().map(|v| vec![v]).collect();
        let (q, proj) = g.contract(&parts).unwrap();
        assert_eq!(q, g);
        assert_eq!(proj, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn contract_c4_halves_gives_an_edge() {
        let (q, proj) = Graph::cycle(4).contract(&[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(q, Graph::path(2));
        assert_eq!(proj, vec![0, 0, 1, 1]);
    }

    #[test]
    fn contract_k4_pair_gives_triangle() {
        let (q, _) = Graph::complete(4).contract(&[vec![0, 1], vec![2], vec![3]]).unwrap();
        assert_eq!(q, Graph::complete(3));
    }

    #[test]
    fn contract_rejects_overlap_and_gaps() {
        let g = Graph::path(3);
        assert!(g.contract(&[vec![0, 1], vec![1, 2]]).is_err());
        assert!(g.contract(&[vec![0, 1]]).is_err());
        assert!(g.contract(&[vec![0, 1, 2], vec![]]).is_err());
    }

    #[test]
    fn from_edges_rejects_loops_and_dedups() {
        assert!(matches!(Graph::from_edges(2, [(1, 1)]), Err(Error::Loop { vertex: 1, .. })));
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn named_families_have_expected_sizes() {
        assert_eq!(Graph::petersen().edge_count(), 15);
        assert!(Graph::petersen().vertices().all(|v| Graph::petersen().degree(v) == 3));
        assert_eq!(Graph::wheel(5).edge_count(), 10);
        assert_eq!(Graph::complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(Graph::star(4).max_degree(), 4);
    }

    #[test]
    fn isomorphism_detects_relabelled_cycle() {
        let relabelled = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        let map = isomorphism(&relabelled, &Graph::cycle(5)).unwrap();
        for (u, v) in relabelled.edges() {
            assert!(Graph::cycle(5).has_edge(map[u], map[v]));
        }
        assert!(!is_isomorphic(&Graph::cycle(6), &Graph::complete_bipartite(3, 3)));
        assert!(!is_isomorphic(&Graph::path(4), &Graph::star(3)));
    }

    #[test]
    fn contract_edge_merges_endpoints() {
        let g = Graph::cycle(4).contract_edge(1, 2).unwrap();
        assert_eq!(g, Graph::cycle(3));
    }
}
