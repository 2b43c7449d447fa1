//! Structural detection: light edges, `K*_{s,t}` subgraphs, the
//! low-degree / light-edge / `K*_{s,t}` dichotomy, small minors, tree-depth
//! and vertex cover.
//!
//! Searches are deterministic: the first object in lexicographic order
//! wins. Every object returned here has a matching `validate_*` function
//! that re-checks it against the host by direct edge lookups.

use std::collections::HashMap;

use num::ToPrimitive;
use serde::Serialize;

use crate::bounds;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

const NONE: usize = usize::MAX;

/// Lexicographically least edge with both endpoint degrees at most `ell`.
pub fn find_light_edge(g: &Graph, ell: usize) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| g.degree(u) <= ell && g.degree(v) <= ell)
}

// ---------------------------------------------------------------------------
// K*_{s,t}

/// An embedding of `K*_{s,t}`: the `s`-side, the `t`-side, and one private
/// vertex per pair `{a[i], a[j]}` (`i < j`, lexicographic order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KstEmbedding {
    pub a: Vec<usize>,
    pub t: Vec<usize>,
    pub pair_vertices: Vec<usize>,
}

impl KstEmbedding {
    /// Image of `gen_kst_star(s, t)` vertex `x` under this embedding.
    pub fn as_vertex_map(&self) -> Vec<usize> {
        self.a.iter().chain(&self.t).chain(&self.pair_vertices).copied().collect()
    }
}

pub fn validate_kst_star(g: &Graph, s: usize, t: usize, e: &KstEmbedding) -> Result<()> {
    let bad = |m: String| Err(Error::Verification(m));
    if e.a.len() != s || e.t.len() != t || e.pair_vertices.len() != s * s.saturating_sub(1) / 2 {
        return bad("K*_{s,t} embedding has wrong part sizes".into());
    }
    let mut all = e.as_vertex_map();
    for &v in &all {
        g.check_vertex(v)?;
    }
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return bad("K*_{s,t} embedding reuses a vertex".into());
    }
    for &a in &e.a {
        for &b in &e.t {
            if !g.has_edge(a, b) {
                return bad(format!("missing edge {a}{b}"));
            }
        }
    }
    let mut idx = 0;
    for i in 0..s {
        for j in i + 1..s {
            let p = e.pair_vertices[idx];
            idx += 1;
            if !g.has_edge(e.a[i], p) || !g.has_edge(e.a[j], p) {
                return bad(format!("pair vertex {p} not joined to {} and {}", e.a[i], e.a[j]));
            }
        }
    }
    Ok(())
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Distinct representatives for `slots`: a greedy pass, then augmenting
/// paths for the slots left over.
fn assign_slots(slots: &[Vec<usize>], n: usize) -> Option<Vec<usize>> {
    fn augment(i: usize, slots: &[Vec<usize>], owner: &mut [usize], pick: &mut [usize], seen: &mut [bool]) -> bool {
        for &c in &slots[i] {
            if seen[c] {
                continue;
            }
            seen[c] = true;
            if owner[c] == NONE || augment(owner[c], slots, owner, pick, seen) {
                owner[c] = i;
                pick[i] = c;
                return true;
            }
        }
        false
    }
    let mut owner = vec![NONE; n];
    let mut pick = vec![NONE; slots.len()];
    for (i, cands) in slots.iter().enumerate() {
        if let Some(&c) = cands.iter().find(|&&c| owner[c] == NONE) {
            owner[c] = i;
            pick[i] = c;
        }
    }
    for i in 0..slots.len() {
        if pick[i] == NONE {
            let mut seen = vec![false; n];
            if !augment(i, slots, &mut owner, &mut pick, &mut seen) {
                return None;
            }
        }
    }
    Some(pick)
}

/// Searches for a `K*_{s,t}` subgraph. The `s`-side is enumerated in
/// lexicographic order; the `t`-side and pair vertices are then chosen
/// together by bipartite matching over common neighbours.
pub fn find_kst_star(g: &Graph, s: usize, t: usize) -> Option<KstEmbedding> {
    if s == 0 || t == 0 {
        return None;
    }
    let need = t + s - 1;
    let eligible: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= need).collect();
    let mut chosen = Vec::with_capacity(s);
    let all: Vec<usize> = g.vertices().collect();
    kst_extend(g, s, t, &eligible, 0, &mut chosen, &all)
}

fn kst_extend(
    g: &Graph,
    s: usize,
    t: usize,
    eligible: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    common: &[usize],
) -> Option<KstEmbedding> {
    if chosen.len() == s {
        return kst_complete(g, t, chosen, common);
    }
    let missing = s - chosen.len();
    for idx in from..eligible.len() {
        if eligible.len() - idx < missing {
            break;
        }
        let v = eligible[idx];
        let next_common: Vec<usize> = intersect(common, g.neighbours(v));
        // Vertices of A still to be chosen may sit in the common pool, so
        // only the final A is subtracted in `kst_complete`.
        if next_common.len() < t {
            continue;
        }
        chosen.push(v);
        if let Some(found) = kst_extend(g, s, t, eligible, idx + 1, chosen, &next_common) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

fn kst_complete(g: &Graph, t: usize, a: &[usize], common: &[usize]) -> Option<KstEmbedding> {
    let outside = |v: &usize| !a.contains(v);
    let t_cands: Vec<usize> = common.iter().copied().filter(outside).collect();
    if t_cands.len() < t {
        return None;
    }
    let mut slots: Vec<Vec<usize>> = vec![t_cands; t];
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let c: Vec<usize> = intersect(g.neighbours(a[i]), g.neighbours(a[j]))
                .into_iter()
                .filter(outside)
                .collect();
            if c.is_empty() {
                return None;
            }
            slots.push(c);
        }
    }
    let pick = assign_slots(&slots, g.vertex_count())?;
    Some(KstEmbedding {
        a: a.to_vec(),
        t: pick[..t].to_vec(),
        pair_vertices: pick[t..].to_vec(),
    })
}

/// Largest `t` such that `K*_{2,t}` is a subgraph (0 if there is none).
/// For `s = 2` the pair vertex is just one more common neighbour.
pub fn max_k2t_star(g: &Graph) -> usize {
    let mut best = 0;
    for u in g.vertices() {
        for v in u + 1..g.vertex_count() {
            let c = intersect(g.neighbours(u), g.neighbours(v)).len();
            best = best.max(c.saturating_sub(1));
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Dichotomy

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DichotomyCertificate {
    LowDegreeVertex { vertex: usize, degree: usize },
    LightEdge { u: usize, v: usize, degree_u: usize, degree_v: usize },
    KstStarSubgraph { embedding: KstEmbedding },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dichotomy {
    pub s: usize,
    pub t: usize,
    pub light_bound: i64,
    pub certificate: DichotomyCertificate,
}

/// One of: a vertex of degree at most `s - 1`, an `ell`-light edge with
/// `ell = floor(N_1(s, t, delta, delta1))`, or a `K*_{s,t}` subgraph.
/// When none exists the density bounds cannot hold for `g`, and the graph
/// is returned inside [`Error::PreconditionRefuted`].
pub fn structural_dichotomy(g: &Graph, s: usize, t: usize, delta: &Rational, delta1: &Rational) -> Result<Dichotomy> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if s == 0 || t == 0 {
        return Err(Error::InvalidInput("s and t must be positive".into()));
    }
    let light_bound = bounds::light_threshold(s as u64, t as u64, delta, delta1)
        .to_i64()
        .unwrap_or(i64::MAX);
    let wrap = |certificate| Dichotomy {
        s,
        t,
        light_bound,
        certificate,
    };
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < s) {
        return Ok(wrap(DichotomyCertificate::LowDegreeVertex {
            vertex: v,
            degree: g.degree(v),
        }));
    }
    if light_bound >= 0 {
        let ell = usize::try_from(light_bound).unwrap_or(usize::MAX);
        if let Some((u, v)) = find_light_edge(g, ell) {
            return Ok(wrap(DichotomyCertificate::LightEdge {
                u,
                v,
                degree_u: g.degree(u),
                degree_v: g.degree(v),
            }));
        }
    }
    if let Some(embedding) = find_kst_star(g, s, t) {
        return Ok(wrap(DichotomyCertificate::KstStarSubgraph { embedding }));
    }
    Err(Error::PreconditionRefuted {
        graph: g.clone(),
        s,
        t,
        light_bound,
    })
}

pub fn validate_dichotomy(g: &Graph, d: &Dichotomy) -> Result<()> {
    match &d.certificate {
        DichotomyCertificate::LowDegreeVertex { vertex, degree } => {
            g.check_vertex(*vertex)?;
            if g.degree(*vertex) != *degree || *degree + 1 > d.s {
                return Err(Error::Verification(format!("vertex {vertex} is not of degree below {}", d.s)));
            }
        }
        DichotomyCertificate::LightEdge { u, v, .. } => {
            g.check_vertex(*u)?;
            g.check_vertex(*v)?;
            let bound = d.light_bound;
            if !g.has_edge(*u, *v) || g.degree(*u) as i64 > bound || g.degree(*v) as i64 > bound {
                return Err(Error::Verification(format!("{u}{v} is not a {bound}-light edge")));
            }
        }
        DichotomyCertificate::KstStarSubgraph { embedding } => validate_kst_star(g, d.s, d.t, embedding)?,
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Minors

/// Branch sets of a minor model, indexed by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
}

pub fn validate_minor_model(g: &Graph, h: &Graph, model: &MinorModel) -> Result<()> {
    let bad = |m: String| Err(Error::Verification(m));
    if model.branch_sets.len() != h.vertex_count() {
        return bad("one branch set per pattern vertex expected".into());
    }
    let mut owner = vec![NONE; g.vertex_count()];
    for (x, set) in model.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return bad(format!("branch set {x} is empty"));
        }
        for &v in set {
            g.check_vertex(v)?;
            if owner[v] != NONE {
                return bad(format!("vertex {v} in two branch sets"));
            }
            owner[v] = x;
        }
        let (sub, _) = g.induced_subgraph(set)?;
        if !sub.is_connected() {
            return bad(format!("branch set {x} is not connected"));
        }
    }
    for (x, y) in h.edges() {
        let touches = model.branch_sets[x]
            .iter()
            .any(|&v| g.neighbours(v).iter().any(|&w| owner[w] == y));
        if !touches {
            return bad(format!("branch sets {x} and {y} are not adjacent"));
        }
    }
    Ok(())
}

/// Exhaustive minor test over connected branch sets.
///
/// Before searching, the host is reduced in ways that preserve the answer:
/// isolated vertices go when `h` has none, degree-1 vertices go when
/// `min deg(h) >= 2`, and degree-2 vertices are suppressed when
/// `min deg(h) >= 3`. Each reduced vertex remembers the host vertices it
/// stands for, so models map back to `g`.
pub fn minor_test_bruteforce(g: &Graph, h: &Graph, caps: &Caps) -> Result<Option<MinorModel>> {
    if g.vertex_count() > caps.minor_host {
        return Err(Error::CapExceeded {
            what: "minor test host",
            size: g.vertex_count(),
            cap: caps.minor_host,
        });
    }
    if h.vertex_count() > caps.minor_pattern {
        return Err(Error::CapExceeded {
            what: "minor test pattern",
            size: h.vertex_count(),
            cap: caps.minor_pattern,
        });
    }
    if h.is_empty() {
        return Ok(Some(MinorModel { branch_sets: Vec::new() }));
    }
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let (reduced, supers) = reduce_for_minor(g, h.min_degree());
    let rn = reduced.vertex_count();
    if h.vertex_count() > rn || h.edge_count() > reduced.edge_count() {
        return Ok(None);
    }
    if rn > 24 {
        return Err(Error::CapExceeded {
            what: "reduced minor host",
            size: rn,
            cap: 24,
        });
    }
    let found = MinorSearch::new(&reduced, h).run();
    Ok(found.map(|sets| {
        let branch_sets = sets
            .into_iter()
            .map(|mask| {
                let mut set: Vec<usize> = (0..rn)
                    .filter(|&v| mask >> v & 1 == 1)
                    .flat_map(|v| supers[v].iter().copied())
                    .collect();
                set.sort_unstable();
                set
            })
            .collect();
        let model = MinorModel { branch_sets };
        debug_assert!(validate_minor_model(g, h, &model).is_ok());
        model
    }))
}

fn reduce_for_minor(g: &Graph, h_min_degree: usize) -> (Graph, Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbours(v).to_vec()).collect();
    let mut alive = vec![true; n];
    let mut supers: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let remove = |adj: &mut Vec<Vec<usize>>, alive: &mut Vec<bool>, v: usize| {
        alive[v] = false;
        for w in std::mem::take(&mut adj[v]) {
            adj[w].retain(|&x| x != v);
        }
    };
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let d = adj[v].len();
            if (d == 0 && h_min_degree >= 1) || (d == 1 && h_min_degree >= 2) {
                remove(&mut adj, &mut alive, v);
                changed = true;
            } else if d == 2 && h_min_degree >= 3 {
                let (a, b) = (adj[v][0], adj[v][1]);
                let moved = std::mem::take(&mut supers[v]);
                supers[a].extend(moved);
                remove(&mut adj, &mut alive, v);
                if !adj[a].contains(&b) {
                    adj[a].push(b);
                    adj[b].push(a);
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut index = vec![NONE; n];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let edges = keep
        .iter()
        .flat_map(|&v| adj[v].iter().map(move |&w| (v, w)))
        .map(|(v, w)| (index[v], index[w]));
    let reduced = Graph::from_edges(keep.len(), edges).expect("reduced graph is simple");
    let supers = keep.iter().map(|&v| std::mem::take(&mut supers[v])).collect();
    (reduced, supers)
}

struct MinorSearch {
    /// Connected vertex sets of the host with their outer neighbourhoods,
    /// by increasing size.
    subsets: Vec<(u64, u64)>,
    host_n: usize,
    order: Vec<usize>,
    /// Pattern neighbours of `order[i]` among `order[..i]`, as positions.
    placed_nbrs: Vec<Vec<usize>>,
    later_degree: Vec<usize>,
    isolated: usize,
}

impl MinorSearch {
    fn new(host: &Graph, h: &Graph) -> Self {
        let n = host.vertex_count();
        let masks = host.adjacency_masks().expect("at most 24 vertices");
        let mut subsets = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let start = mask.trailing_zeros() as usize;
            let mut reach = 1u64 << start;
            loop {
                let mut grow = reach;
                let mut rest = reach;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    grow |= masks[v] & mask;
                }
                if grow == reach {
                    break;
                }
                reach = grow;
            }
            if reach == mask {
                let mut nb = 0u64;
                let mut rest = mask;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    nb |= masks[v];
                }
                subsets.push((mask, nb & !mask));
            }
        }
        subsets.sort_by_key(|&(m, _)| (m.count_ones(), m));

        let non_isolated: Vec<usize> = h.vertices().filter(|&x| h.degree(x) > 0).collect();
        let mut order = Vec::new();
        let mut in_order = vec![false; h.vertex_count()];
        while order.len() < non_isolated.len() {
            let next = non_isolated
                .iter()
                .copied()
                .filter(|&x| !in_order[x])
                .max_by_key(|&x| {
                    let placed = h.neighbours(x).iter().filter(|&&y| in_order[y]).count();
                    (placed, h.degree(x), std::cmp::Reverse(x))
                })
                .expect("unplaced vertex");
            in_order[next] = true;
            order.push(next);
        }
        let position: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let placed_nbrs = order
            .iter()
            .enumerate()
            .map(|(i, &x)| h.neighbours(x).iter().map(|y| position[y]).filter(|&p| p < i).collect())
            .collect();
        let later_degree = order
            .iter()
            .enumerate()
            .map(|(i, &x)| h.neighbours(x).iter().filter(|y| position[y] > i).count())
            .collect();
        let mut full_order = order.clone();
        full_order.extend(h.vertices().filter(|&x| h.degree(x) == 0));
        MinorSearch {
            subsets,
            host_n: n,
            order: full_order,
            placed_nbrs,
            later_degree,
            isolated: h.vertices().filter(|&x| h.degree(x) == 0).count(),
        }
    }

    /// Branch-set masks indexed by pattern vertex.
    fn run(&self) -> Option<Vec<u64>> {
        let searched = self.order.len() - self.isolated;
        let mut chosen = vec![(0u64, 0u64); searched];
        if !self.place(0, 0, &mut chosen) {
            return None;
        }
        let mut used = chosen.iter().fold(0u64, |m, &(s, _)| m | s);
        let mut result = vec![0u64; self.order.len()];
        for (i, &(mask, _)) in chosen.iter().enumerate() {
            result[self.order[i]] = mask;
        }
        for &x in &self.order[searched..] {
            let v = (!used).trailing_zeros() as usize;
            used |= 1 << v;
            result[x] = 1 << v;
        }
        Some(result)
    }

    fn place(&self, idx: usize, used: u64, chosen: &mut [(u64, u64)]) -> bool {
        let searched = chosen.len();
        if idx == searched {
            return true;
        }
        let free = self.host_n - used.count_ones() as usize;
        let still_needed = searched - idx - 1 + self.isolated;
        if free < still_needed + 1 {
            return false;
        }
        let max_size = free - still_needed;
        for &(mask, nb) in &self.subsets {
            let size = mask.count_ones() as usize;
            if size > max_size {
                break;
            }
            if mask & used != 0 {
                continue;
            }
            if (nb & !used).count_ones() < self.later_degree[idx] as u32 {
                continue;
            }
            if self.placed_nbrs[idx].iter().any(|&p| chosen[p].1 & mask == 0) {
                continue;
            }
            chosen[idx] = (mask, nb);
            if self.place(idx + 1, used | mask, chosen) {
                return true;
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Tree-depth and vertex cover

fn mask_components(masks: &[u64], set: u64) -> Vec<u64> {
    let mut comps = Vec::new();
    let mut rest = set;
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = masks[v] & set & !comp;
            comp |= new;
            frontier |= new;
        }
        comps.push(comp);
        rest &= !comp;
    }
    comps
}

/// Exact tree-depth by recursive vertex removal with memoisation on
/// connected vertex sets. A vertex adjacent to everything else in its
/// component is always removed first.
pub fn tree_depth(h: &Graph, cap: usize) -> Result<usize> {
    let n = h.vertex_count();
    if n > cap || n > 64 {
        return Err(Error::CapExceeded {
            what: "tree-depth",
            size: n,
            cap: cap.min(64),
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let masks = h.adjacency_masks()?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(td_set(&masks, all, &mut memo))
}

fn td_set(masks: &[u64], set: u64, memo: &mut HashMap<u64, usize>) -> usize {
    mask_components(masks, set)
        .into_iter()
        .map(|c| td_connected(masks, c, memo))
        .max()
        .unwrap_or(0)
}

fn td_connected(masks: &[u64], comp: u64, memo: &mut HashMap<u64, usize>) -> usize {
    let size = comp.count_ones() as usize;
    if size <= 2 {
        return size;
    }
    if let Some(&v) = memo.get(&comp) {
        return v;
    }
    let mut rest = comp;
    let mut universal = None;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (masks[v] & comp).count_ones() as usize == size - 1 {
            universal = Some(v);
            break;
        }
    }
    let best = if let Some(v) = universal {
        1 + td_set(masks, comp & !(1 << v), memo)
    } else {
        let mut best = size;
        let mut rest = comp;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let value = 1 + td_set(masks, comp & !(1 << v), memo);
            best = best.min(value);
            // A path on `size` vertices already needs ceil(log2(size + 1)).
            if best <= 2 {
                break;
            }
        }
        best
    };
    memo.insert(comp, best);
    best
}

/// Exact vertex cover number by branching on a maximum-degree vertex: it
/// is either in the cover, or all of its neighbours are.
pub fn vertex_cover_number(h: &Graph, cap: usize) -> Result<usize> {
    let n = h.vertex_count();
    if n > cap || n > 64 {
        return Err(Error::CapExceeded {
            what: "vertex cover",
            size: n,
            cap: cap.min(64),
        });
    }
    let masks = h.adjacency_masks()?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n).wrapping_sub(1) };
    let mut best = n;
    cover_branch(&masks, all, 0, &mut best);
    Ok(best)
}

fn cover_branch(masks: &[u64], alive: u64, taken: usize, best: &mut usize) {
    if taken >= *best {
        return;
    }
    let mut pick = None;
    let mut pick_deg = 0;
    let mut rest = alive;
    let mut edges_twice = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (masks[v] & alive).count_ones() as usize;
        edges_twice += d;
        if d > pick_deg {
            pick_deg = d;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        *best = taken;
        return;
    };
    // Each cover vertex covers at most `pick_deg` edges.
    if taken + (edges_twice / 2).div_ceil(pick_deg) >= *best {
        return;
    }
    cover_branch(masks, alive & !(1 << v), taken + 1, best);
    let nbrs = masks[v] & alive;
    cover_branch(masks, alive & !nbrs & !(1 << v), taken + nbrs.count_ones() as usize, best);
}

/// `(k, isolated)` when `h` is `K_{1,k}` plus `isolated` isolated
/// vertices. An edgeless `h` counts as `K_{1,0}` plus the rest.
pub fn is_star_plus_isolated(h: &Graph) -> Option<(usize, usize)> {
    let n = h.vertex_count();
    if n == 0 {
        return None;
    }
    let m = h.edge_count();
    if m == 0 {
        return Some((0, n - 1));
    }
    h.vertices().find(|&v| h.degree(v) == m)?;
    Some((m, n - 1 - m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets;
    use crate::rational::int;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn light_edges() {
        assert_eq!(find_light_edge(&Graph::cycle(4), 2), Some((0, 1)));
        assert_eq!(find_light_edge(&Graph::star(5), 3), None);
        assert_eq!(find_light_edge(&Graph::complete(4), 3), Some((0, 1)));
    }

    #[test]
    fn kst_star_detection() {
        let e = find_kst_star(&Graph::cycle(4), 2, 1).unwrap();
        validate_kst_star(&Graph::cycle(4), 2, 1, &e).unwrap();
        assert!(find_kst_star(&Graph::petersen(), 2, 1).is_none());
        let g = gadgets::gen_kst_star(3, 4);
        let e = find_kst_star(&g, 3, 4).unwrap();
        assert_eq!(e.as_vertex_map(), (0..g.vertex_count()).collect::<Vec<_>>());
        for s in 1..=4 {
            for t in 1..=3 {
                let g = gadgets::gen_kst_star(s, t);
                let e = find_kst_star(&g, s, t).unwrap();
                assert_eq!(e.as_vertex_map(), (0..g.vertex_count()).collect::<Vec<_>>(), "s={s} t={t}");
                assert!(find_kst_star(&g, s, t + 1).is_none());
            }
        }
    }

    #[test]
    fn k2t_star_count() {
        assert_eq!(max_k2t_star(&Graph::complete_bipartite(2, 5)), 4);
        assert_eq!(max_k2t_star(&Graph::petersen()), 0);
    }

    #[test]
    fn dichotomy_examples() {
        let d = structural_dichotomy(&Graph::empty(1), 2, 1, &int(1), &int(1)).unwrap();
        assert_eq!(d.certificate, DichotomyCertificate::LowDegreeVertex { vertex: 0, degree: 0 });

        let c4 = Graph::cycle(4);
        let d = structural_dichotomy(&c4, 2, 1, &int(2), &int(2)).unwrap();
        validate_dichotomy(&c4, &d).unwrap();

        let star = Graph::star(9);
        let d = structural_dichotomy(&star, 1, 5, &int(2), &int(2)).unwrap();
        assert_eq!(d.light_bound, 4);
        match &d.certificate {
            DichotomyCertificate::KstStarSubgraph { embedding } => {
                assert_eq!(embedding.a, vec![0]);
                assert_eq!(embedding.t.len(), 5);
                assert!(embedding.pair_vertices.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
        validate_dichotomy(&star, &d).unwrap();
    }

    #[test]
    fn dichotomy_refutes_wrong_bounds() {
        // K_5 has no vertex of degree below 2, no 1-light edge, no K*_{2,5}.
        let err = structural_dichotomy(&Graph::complete(5), 2, 5, &int(1), &int(1)).unwrap_err();
        assert!(matches!(err, Error::PreconditionRefuted { .. }));
        assert!(matches!(
            structural_dichotomy(&Graph::empty(0), 1, 1, &int(1), &int(1)),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn minors() {
        let w5 = Graph::wheel(5);
        let m = minor_test_bruteforce(&w5, &Graph::complete(4), &caps()).unwrap().unwrap();
        validate_minor_model(&w5, &Graph::complete(4), &m).unwrap();

        let g22 = gadgets::gen_gsn(2, 2, 100).unwrap();
        assert!(minor_test_bruteforce(&g22, &Graph::complete_bipartite(2, 2), &caps())
            .unwrap()
            .is_none());

        let p = Graph::petersen();
        let m = minor_test_bruteforce(&p, &Graph::complete(5), &caps()).unwrap().unwrap();
        validate_minor_model(&p, &Graph::complete(5), &m).unwrap();
    }

    #[test]
    fn minor_with_isolated_pattern_vertices() {
        let h = Graph::star(2).disjoint_union(&Graph::empty(2));
        let g = Graph::path(5);
        let m = minor_test_bruteforce(&g, &h, &caps()).unwrap().unwrap();
        validate_minor_model(&g, &h, &m).unwrap();
        assert!(minor_test_bruteforce(&Graph::path(4), &h, &caps()).unwrap().is_none());
    }

    #[test]
    fn minor_suppression_maps_back() {
        // A subdivided K_4 still has a K_4 minor.
        let g = gadgets::exact_one_subdivision(&Graph::complete(4));
        let m = minor_test_bruteforce(&g, &Graph::complete(4), &caps()).unwrap().unwrap();
        validate_minor_model(&g, &Graph::complete(4), &m).unwrap();
        assert!(minor_test_bruteforce(&Graph::cycle(8), &Graph::complete(4), &caps())
            .unwrap()
            .is_none());
    }

    #[test]
    fn minor_caps() {
        assert!(matches!(
            minor_test_bruteforce(&Graph::path(15), &Graph::path(2), &caps()),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            minor_test_bruteforce(&Graph::path(5), &Graph::path(9), &caps()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn vertex_covers() {
        for s in 1..5 {
            for t in 1..5 {
                assert_eq!(vertex_cover_number(&Graph::complete_bipartite(s, t), 16).unwrap(), s.min(t));
            }
        }
        assert_eq!(vertex_cover_number(&Graph::path(7), 16).unwrap(), 3);
        assert_eq!(vertex_cover_number(&Graph::petersen(), 16).unwrap(), 6);
        assert_eq!(vertex_cover_number(&Graph::empty(3), 16).unwrap(), 0);
    }

    #[test]
    fn tree_depths() {
        assert_eq!(tree_depth(&Graph::path(7), 12).unwrap(), 3);
        assert_eq!(tree_depth(&Graph::path(8), 12).unwrap(), 4);
        for n in 1..8 {
            assert_eq!(tree_depth(&Graph::complete(n), 12).unwrap(), n);
        }
        assert_eq!(tree_depth(&Graph::star(6), 12).unwrap(), 2);
        assert_eq!(tree_depth(&Graph::empty(0), 12).unwrap(), 0);
        assert!(tree_depth(&Graph::path(13), 12).is_err());
    }

    #[test]
    fn tree_depth_of_gadgets() {
        for s in 2..=4 {
            for n in 1..=2 {
                let g = gadgets::gen_gsn(s, n, 100).unwrap();
                assert_eq!(tree_depth(&g, 64).unwrap(), s, "s={s} N={n}");
            }
        }
        for r in 1..=3 {
            assert_eq!(tree_depth(&gadgets::complete_binary_tree(r), 64).unwrap(), r + 1);
        }
    }

    #[test]
    fn stars_plus_isolated() {
        let h = Graph::star(3).disjoint_union(&Graph::empty(2));
        assert_eq!(is_star_plus_isolated(&h), Some((3, 2)));
        assert_eq!(is_star_plus_isolated(&Graph::path(4)), None);
        assert_eq!(is_star_plus_isolated(&Graph::path(2)), Some((1, 0)));
        assert_eq!(is_star_plus_isolated(&Graph::complete(3)), None);
        assert_eq!(is_star_plus_isolated(&Graph::empty(3)), Some((0, 2)));
    }
}
