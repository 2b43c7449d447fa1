//! Density parameters: maximum average degree, degeneracy and the density
//! of depth-1/2 topological minors.
//!
//! `mad_exact` runs a parametric max-flow (Goldberg's densest-subgraph
//! network inside a Dinkelbach iteration), so it is polynomial and exact.
//! `mad_bruteforce` and `top_grad_bruteforce` enumerate and exist only as
//! oracles for small graphs.
//!
//! The top-grad routine computes the depth-1/2 quantity: the maximum of
//! `|E(H)| / |V(H)|` over graphs `H` whose `(<=1)`-subdivision is a
//! subgraph. This is the rank used when bounding graphs whose exact
//! 1-subdivision sits inside the host, and it is the only rank searched
//! exactly here.

use std::collections::{BTreeSet, HashMap};

use num::Zero;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityMethod {
    FlowExact,
    BruteForce,
    HeuristicLowerBound,
}

/// A `(<= max)`-subdivision of `base` sitting inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionWitness {
    pub base: Graph,
    /// `branch_map[x]` is the host vertex playing base vertex `x`.
    pub branch_map: Vec<usize>,
    /// One host path per base edge, in `base.edges()` order, running from
    /// `branch_map[u]` to `branch_map[v]` for the edge `(u, v)`.
    pub paths: Vec<Vec<usize>>,
}

impl SubdivisionWitness {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "base": crate::io::to_json_value(&self.base),
            "branch_map": self.branch_map,
            "paths": self.paths,
        })
    }
}

/// Checks that `w` describes a subgraph of `host` in which every base edge
/// is a path with at most `max_subdivisions` internal vertices, internally
/// disjoint from each other and from the branch vertices.
pub fn validate_subdivision(host: &Graph, w: &SubdivisionWitness, max_subdivisions: usize) -> Result<()> {
    let bad = |msg: String| Err(Error::Verification(msg));
    if w.branch_map.len() != w.base.vertex_count() {
        return bad("branch map size mismatch".into());
    }
    let mut used = vec![false; host.vertex_count()];
    for &b in &w.branch_map {
        host.check_vertex(b)?;
        if std::mem::replace(&mut used[b], true) {
            return bad(format!("branch vertex {b} used twice"));
        }
    }
    let edges: Vec<(usize, usize)> = w.base.edges().collect();
    if edges.len() != w.paths.len() {
        return bad("one path per base edge expected".into());
    }
    for ((u, v), path) in edges.iter().zip(&w.paths) {
        if path.len() < 2 || path.len() > max_subdivisions + 2 {
            return bad(format!("path for {u}{v} has length {}", path.len()));
        }
        if path[0] != w.branch_map[*u] || path[path.len() - 1] != w.branch_map[*v] {
            return bad(format!("path for {u}{v} has wrong endpoints"));
        }
        for pair in path.windows(2) {
            if !host.has_edge(pair[0], pair[1]) {
                return bad(format!("{}{} is not a host edge", pair[0], pair[1]));
            }
        }
        for &inner in &path[1..path.len() - 1] {
            host.check_vertex(inner)?;
            if std::mem::replace(&mut used[inner], true) {
                return bad(format!("internal vertex {inner} reused"));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct TopGrad {
    pub value: Rational,
    pub witness: SubdivisionWitness,
    pub method: DensityMethod,
}

#[derive(Clone, Debug)]
pub struct DensityReport {
    pub mad: Rational,
    pub mad_witness: Vec<usize>,
    pub degeneracy: usize,
    pub degeneracy_order: Vec<usize>,
    pub top_grad_half: Rational,
    pub method: DensityMethod,
    pub witness: SubdivisionWitness,
}

impl DensityReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "mad": rational::format(&self.mad),
            "mad_witness": self.mad_witness,
            "degeneracy": self.degeneracy,
            "degeneracy_order": self.degeneracy_order,
            "top_grad_half": rational::format(&self.top_grad_half),
            "method": self.method,
            "witness": self.witness.to_json(),
        })
    }
}

/// mad, degeneracy and depth-1/2 top-grad in one pass.
pub fn analyze(g: &Graph, top_grad_cap: usize) -> Result<DensityReport> {
    let (mad, mad_witness) = mad_exact(g)?;
    let (degeneracy, degeneracy_order) = degeneracy(g);
    let tg = top_grad_half(g, top_grad_cap)?;
    Ok(DensityReport {
        mad,
        mad_witness,
        degeneracy,
        degeneracy_order,
        top_grad_half: tg.value,
        method: tg.method,
        witness: tg.witness,
    })
}

// ---------------------------------------------------------------------------
// Max-flow (Dinic) on integer capacities.

struct FlowNetwork {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i64>,
    next: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![NONE; nodes],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, forward: i64, backward: i64) {
        for (a, b, c) in [(u, v, forward), (v, u, backward)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn levels(&self, source: usize) -> Vec<usize> {
        let mut level = vec![NONE; self.head.len()];
        level[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let mut e = self.head[u];
            while e != NONE {
                if self.cap[e] > 0 && level[self.to[e]] == NONE {
                    level[self.to[e]] = level[u] + 1;
                    queue.push_back(self.to[e]);
                }
                e = self.next[e];
            }
        }
        level
    }

    fn push(&mut self, u: usize, sink: usize, limit: i64, level: &[usize], iter: &mut [usize]) -> i64 {
        if u == sink {
            return limit;
        }
        while iter[u] != NONE {
            let e = iter[u];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let pushed = self.push(v, sink, limit.min(self.cap[e]), level, iter);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            iter[u] = self.next[e];
        }
        0
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.levels(source);
            if level[sink] == NONE {
                return total;
            }
            let mut iter = self.head.clone();
            loop {
                let pushed = self.push(source, sink, i64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }
}

fn induced_edge_count(g: &Graph, set: &[usize]) -> usize {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    set.iter()
        .map(|&v| g.neighbours(v).iter().filter(|&&w| inside[w]).count())
        .sum::<usize>()
        / 2
}

/// Exact maximum average degree with a densest-subgraph witness.
pub fn mad_exact(g: &Graph) -> Result<(Rational, Vec<usize>)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok((Rational::zero(), vec![0]));
    }
    // Current density p/q = e(S)/|S|.
    let mut witness: Vec<usize> = g.vertices().collect();
    let (mut p, mut q) = (m as i64, n as i64);
    let big = m as i64;
    loop {
        let (source, sink) = (n, n + 1);
        let mut net = FlowNetwork::new(n + 2);
        for v in 0..n {
            net.add_edge(source, v, big * q, 0);
            net.add_edge(v, sink, big * q + 2 * p - g.degree(v) as i64 * q, 0);
        }
        for (u, v) in g.edges() {
            net.add_edge(u, v, q, q);
        }
        net.max_flow(source, sink);
        let level = net.levels(source);
        let side: Vec<usize> = (0..n).filter(|&v| level[v] != NONE).collect();
        if side.is_empty() {
            break;
        }
        let e = induced_edge_count(g, &side) as i64;
        if e * q > p * side.len() as i64 {
            p = e;
            q = side.len() as i64;
            witness = side;
        } else {
            break;
        }
    }
    Ok((rational::rat(2 * p, q), witness))
}

/// Exhaustive maximum average degree over all vertex subsets.
pub fn mad_bruteforce(g: &Graph, cap: usize) -> Result<(Rational, Vec<usize>)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap || n > 30 {
        return Err(Error::CapExceeded {
            what: "mad brute force",
            size: n,
            cap: cap.min(30),
        });
    }
    let masks = g.adjacency_masks()?;
    let (mut best_e, mut best_v, mut best_mask) = (0u64, 1u64, 1u64);
    for mask in 1u64..(1u64 << n) {
        let mut twice = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice += (masks[v] & mask).count_ones() as u64;
        }
        let (e, size) = (twice / 2, mask.count_ones() as u64);
        if e * best_v > best_e * size {
            best_e = e;
            best_v = size;
            best_mask = mask;
        }
    }
    let witness = (0..n).filter(|&v| best_mask >> v & 1 == 1).collect();
    Ok((rational::rat(2 * best_e as i64, best_v as i64), witness))
}

/// Degeneracy and a smallest-last elimination order (ties to the smaller id).
pub fn degeneracy(g: &Graph) -> (usize, Vec<usize>) {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut k = 0;
    while let Some((d, v)) = queue.pop_first() {
        k = k.max(d);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbours(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    (k, order)
}

// ---------------------------------------------------------------------------
// Depth-1/2 topological minors.

/// Best `(<=1)`-subdivision preimage with branch set exactly `branch`:
/// all host edges inside `branch`, plus a maximum matching of non-adjacent
/// branch pairs to private outside vertices adjacent to both.
pub fn subdivision_with_branch_set(g: &Graph, branch: &[usize]) -> SubdivisionWitness {
    let mut branch: Vec<usize> = branch.to_vec();
    branch.sort_unstable();
    branch.dedup();
    let mut index = vec![NONE; g.vertex_count()];
    for (i, &b) in branch.iter().enumerate() {
        index[b] = i;
    }
    // Candidate pairs per outside vertex.
    let outside: Vec<usize> = g.vertices().filter(|&w| index[w] == NONE).collect();
    let pair_lists: Vec<Vec<(usize, usize)>> = outside
        .iter()
        .map(|&w| {
            let inner: Vec<usize> = g.neighbours(w).iter().copied().filter(|&x| index[x] != NONE).collect();
            let mut pairs = Vec::new();
            for (i, &a) in inner.iter().enumerate() {
                for &b in &inner[i + 1..] {
                    if !g.has_edge(a, b) {
                        pairs.push((a, b));
                    }
                }
            }
            pairs
        })
        .collect();
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    fn augment(
        w: usize,
        pair_lists: &[Vec<(usize, usize)>],
        owner: &mut HashMap<(usize, usize), usize>,
        seen: &mut BTreeSet<(usize, usize)>,
    ) -> bool {
        for &p in &pair_lists[w] {
            if !seen.insert(p) {
                continue;
            }
            let free = match owner.get(&p) {
                None => true,
                Some(&other) => augment(other, pair_lists, owner, seen),
            };
            if free {
                owner.insert(p, w);
                return true;
            }
        }
        false
    }
    for w in 0..outside.len() {
        let mut seen = BTreeSet::new();
        augment(w, &pair_lists, &mut owner, &mut seen);
    }
    let mut edge_paths: Vec<((usize, usize), Vec<usize>)> = Vec::new();
    for (i, &a) in branch.iter().enumerate() {
        for &b in &branch[i + 1..] {
            if g.has_edge(a, b) {
                edge_paths.push(((index[a], index[b]), vec![a, b]));
            } else if let Some(&w) = owner.get(&(a, b)) {
                edge_paths.push(((index[a], index[b]), vec![a, outside[w], b]));
            }
        }
    }
    edge_paths.sort();
    let base = Graph::from_edges(branch.len(), edge_paths.iter().map(|(e, _)| *e)).expect("distinct branch ids");
    SubdivisionWitness {
        base,
        branch_map: branch,
        paths: edge_paths.into_iter().map(|(_, p)| p).collect(),
    }
}

struct TopGradSearch<'a> {
    adj: &'a [u64],
    order: Vec<usize>,
    deg: Vec<u64>,
    best_edges: u64,
    best_size: u64,
    best_mask: u64,
    stamp: Vec<u32>,
    epoch: u32,
    pair_owner: Vec<usize>,
}

impl TopGradSearch<'_> {
    /// Matching size of non-adjacent pairs in `mask` to outside vertices.
    fn matching(&mut self, mask: u64, limit: u64) -> u64 {
        let n = self.adj.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let outside = all & !mask;
        self.pair_owner.iter_mut().for_each(|o| *o = NONE);
        let mut size = 0;
        let mut rest = outside;
        while rest != 0 && size < limit {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.adj[w] & mask).count_ones() < 2 {
                continue;
            }
            self.epoch += 1;
            if self.augment(w, mask) {
                size += 1;
            }
        }
        size
    }

    fn augment(&mut self, w: usize, mask: u64) -> bool {
        let n = self.adj.len();
        let inner = self.adj[w] & mask;
        let mut a_bits = inner;
        while a_bits != 0 {
            let a = a_bits.trailing_zeros() as usize;
            a_bits &= a_bits - 1;
            let mut b_bits = a_bits & !self.adj[a];
            while b_bits != 0 {
                let b = b_bits.trailing_zeros() as usize;
                b_bits &= b_bits - 1;
                let p = a * n + b;
                if self.stamp[p] == self.epoch {
                    continue;
                }
                self.stamp[p] = self.epoch;
                let holder = self.pair_owner[p];
                if holder == NONE || self.augment(holder, mask) {
                    self.pair_owner[p] = w;
                    return true;
                }
            }
        }
        false
    }

    fn consider(&mut self, mask: u64, size: u64, inner_edges: u64) {
        // edges(H) <= inner + min(outside vertices, non-adjacent pairs)
        let n = self.adj.len() as u64;
        let pairs = size * (size - 1) / 2 - inner_edges;
        let optimistic = inner_edges + pairs.min(n - size);
        if optimistic * self.best_size <= self.best_edges * size {
            return;
        }
        // Smallest matching that would beat the incumbent.
        let extra = self.matching(mask, pairs.min(n - size));
        let total = inner_edges + extra;
        if total * self.best_size > self.best_edges * size {
            self.best_edges = total;
            self.best_size = size;
            self.best_mask = mask;
        }
    }

    fn can_improve(&self, size: u64, degree_sum: u64, from: usize) -> bool {
        // 2|E(H)| <= sum of host degrees over the branch set and |E(H)| <= C(|B|, 2).
        let (be, bs) = (self.best_edges, self.best_size);
        let mut sum = degree_sum;
        let mut count = size;
        for &v in std::iter::once(&usize::MAX).chain(&self.order[from..]) {
            if v != usize::MAX {
                sum += self.deg[v];
                count += 1;
            }
            if count < 2 {
                continue;
            }
            let clique_ok = count * (count - 1) * bs > 2 * be * count;
            let degree_ok = sum * bs > 2 * be * count;
            if clique_ok && degree_ok {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, from: usize, mask: u64, size: u64, degree_sum: u64, inner_edges: u64) {
        if size >= 2 {
            self.consider(mask, size, inner_edges);
        }
        if from >= self.order.len() || !self.can_improve(size, degree_sum, from) {
            return;
        }
        for idx in from..self.order.len() {
            let v = self.order[idx];
            let added = (self.adj[v] & mask).count_ones() as u64;
            self.dfs(idx + 1, mask | 1 << v, size + 1, degree_sum + self.deg[v], inner_edges + added);
        }
    }
}

/// Depth-1/2 top-grad. Exact branch-and-bound when `|V(g)| <= cap`;
/// otherwise the value of the densest-subgraph branch set, reported as a
/// lower bound.
pub fn top_grad_half(g: &Graph, cap: usize) -> Result<TopGrad> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        let witness = subdivision_with_branch_set(g, &[]);
        return Ok(TopGrad {
            value: Rational::zero(),
            witness,
            method: DensityMethod::BruteForce,
        });
    }
    let (_, densest) = mad_exact(g)?;
    let seed = subdivision_with_branch_set(g, &densest);
    if n > cap || n > 64 {
        return Ok(TopGrad {
            value: rational::rat(seed.base.edge_count() as i64, seed.base.vertex_count() as i64),
            witness: seed,
            method: DensityMethod::HeuristicLowerBound,
        });
    }
    let adj = g.adjacency_masks()?;
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let seed_mask = seed.branch_map.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut search = TopGradSearch {
        adj: &adj,
        order,
        deg: g.vertices().map(|v| g.degree(v) as u64).collect(),
        best_edges: seed.base.edge_count() as u64,
        best_size: seed.base.vertex_count() as u64,
        best_mask: seed_mask,
        stamp: vec![0; n * n],
        epoch: 0,
        pair_owner: vec![NONE; n * n],
    };
    search.dfs(0, 0, 0, 0, 0);
    let branch: Vec<usize> = (0..n).filter(|&v| search.best_mask >> v & 1 == 1).collect();
    let witness = subdivision_with_branch_set(g, &branch);
    let value = rational::rat(witness.base.edge_count() as i64, witness.base.vertex_count() as i64);
    debug_assert_eq!(
        witness.base.edge_count() as u64 * search.best_size,
        search.best_edges * witness.base.vertex_count() as u64
    );
    Ok(TopGrad {
        value,
        witness,
        method: DensityMethod::BruteForce,
    })
}

/// Exhaustive top-grad over `(<= max_subdivisions)`-subdivisions, by
/// backtracking over explicit paths. Oracle for tiny graphs only.
pub fn top_grad_bruteforce(g: &Graph, max_subdivisions: usize, cap: usize) -> Result<Rational> {
    let n = g.vertex_count();
    if n > cap || n > 20 {
        return Err(Error::CapExceeded {
            what: "top-grad brute force",
            size: n,
            cap: cap.min(20),
        });
    }
    let mut best = Rational::zero();
    for mask in 1u32..(1u32 << n) {
        let branch: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let size = branch.len();
        if size < 2 {
            continue;
        }
        let ceiling = rational::rat((size * (size - 1) / 2) as i64, size as i64);
        if ceiling <= best {
            continue;
        }
        let mut direct = 0;
        let mut far_pairs = Vec::new();
        for (i, &a) in branch.iter().enumerate() {
            for &b in &branch[i + 1..] {
                if g.has_edge(a, b) {
                    direct += 1;
                } else {
                    far_pairs.push((a, b));
                }
            }
        }
        let mut used: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let mut local_best = 0;
        routed_pairs(g, &far_pairs, 0, 0, &mut used, max_subdivisions, &mut local_best);
        let value = rational::rat((direct + local_best) as i64, size as i64);
        if value > best {
            best = value;
        }
    }
    Ok(best)
}

fn routed_pairs(
    g: &Graph,
    pairs: &[(usize, usize)],
    at: usize,
    routed: usize,
    used: &mut [bool],
    max_internal: usize,
    best: &mut usize,
) {
    if routed + (pairs.len() - at) <= *best {
        return;
    }
    if at == pairs.len() {
        *best = routed;
        return;
    }
    let (a, b) = pairs[at];
    let mut paths = Vec::new();
    let mut current = vec![a];
    collect_paths(g, b, max_internal, used, &mut current, &mut paths);
    for path in paths {
        for &x in &path {
            used[x] = true;
        }
        routed_pairs(g, pairs, at + 1, routed + 1, used, max_internal, best);
        for &x in &path {
            used[x] = false;
        }
    }
    routed_pairs(g, pairs, at + 1, routed, used, max_internal, best);
}

/// Internal vertex sequences of `a`-`target` paths through unused vertices.
fn collect_paths(
    g: &Graph,
    target: usize,
    max_internal: usize,
    used: &mut [bool],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let tail = *current.last().unwrap();
    let internal = current.len() - 1;
    if internal >= 1 && g.has_edge(tail, target) {
        out.push(current[1..].to_vec());
    }
    if internal == max_internal {
        return;
    }
    for &w in g.neighbours(tail) {
        if !used[w] && !current.contains(&w) {
            current.push(w);
            collect_paths(g, target, max_internal, used, current, out);
            current.pop();
        }
    }
}

/// `|E(H)| / |V(H)|` for the base graph of a witness.
pub fn witness_ratio(w: &SubdivisionWitness) -> Rational {
    if w.base.vertex_count() == 0 {
        return Rational::zero();
    }
    rational::rat(w.base.edge_count() as i64, w.base.vertex_count() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn mad_of_small_families() {
        assert_eq!(mad_exact(&Graph::cycle(7)).unwrap().0, int(2));
        assert_eq!(mad_exact(&Graph::complete(4)).unwrap().0, int(3));
        assert_eq!(mad_exact(&Graph::star(3)).unwrap().0, rat(3, 2));
        assert!(matches!(mad_exact(&Graph::empty(0)), Err(Error::EmptyGraph)));
        assert_eq!(mad_exact(&Graph::empty(3)).unwrap().0, int(0));
    }

    #[test]
    fn mad_witness_attains_value() {
        // K_4 with a pendant path: the densest part is the K_4.
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let (mad, witness) = mad_exact(&g).unwrap();
        assert_eq!(mad, int(3));
        assert_eq!(witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn bruteforce_oracle_values() {
        assert_eq!(mad_bruteforce(&Graph::petersen(), 16).unwrap().0, int(3));
        assert_eq!(mad_bruteforce(&Graph::path(4), 16).unwrap().0, rat(3, 2));
        assert_eq!(mad_bruteforce(&Graph::complete_bipartite(3, 3), 16).unwrap().0, int(3));
        assert!(matches!(
            mad_bruteforce(&Graph::path(17), 16),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn degeneracy_of_families() {
        assert_eq!(degeneracy(&Graph::path(6)).0, 1);
        assert_eq!(degeneracy(&Graph::star(5)).0, 1);
        assert_eq!(degeneracy(&Graph::complete(5)).0, 4);
        assert_eq!(degeneracy(&Graph::cycle(6)).0, 2);
        let (_, order) = degeneracy(&Graph::star(3));
        assert_eq!(order, vec![1, 2, 0, 3]);
    }

    #[test]
    fn top_grad_of_four_cycle_is_one() {
        // C_4 is a (<=1)-subdivision of K_3.
        let tg = top_grad_half(&Graph::cycle(4), 20).unwrap();
        assert_eq!(tg.value, int(1));
        validate_subdivision(&Graph::cycle(4), &tg.witness, 1).unwrap();
        assert_eq!(top_grad_bruteforce(&Graph::cycle(4), 1, 8).unwrap(), int(1));
    }

    #[test]
    fn top_grad_of_subdivided_k5() {
        let g = crate::gadgets::exact_one_subdivision(&Graph::complete(5));
        let tg = top_grad_half(&g, 20).unwrap();
        assert!(tg.value >= int(2));
        validate_subdivision(&g, &tg.witness, 1).unwrap();
    }

    #[test]
    fn top_grad_edgeless_is_zero() {
        assert_eq!(top_grad_half(&Graph::empty(4), 20).unwrap().value, int(0));
    }

    #[test]
    fn top_grad_over_cap_is_a_lower_bound() {
        let g = Graph::cycle(30);
        let tg = top_grad_half(&g, 20).unwrap();
        assert_eq!(tg.method, DensityMethod::HeuristicLowerBound);
        assert_eq!(tg.value, int(1));
    }

    #[test]
    fn subdivision_validation_catches_reuse() {
        let g = Graph::cycle(4);
        let mut w = top_grad_half(&g, 20).unwrap().witness;
        w.branch_map.swap(0, 1);
        assert!(validate_subdivision(&g, &w, 1).is_err());
    }
}
