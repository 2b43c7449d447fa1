//! Defective colourings: the peel-and-replay list colouring, exhaustive
//! oracles, the layered colouring of tree-free graphs, the forest plus
//! bounded-degree edge partition, and the two-colouring of graphs without
//! a dominant-vertex-over-stars minor.
//!
//! Every colouring returned here has been run through [`verify_defective`].

use std::collections::BTreeSet;

use num::BigInt;
use serde::Serialize;

use crate::bounds;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gadgets;
use crate::graph::Graph;
use crate::structure::{self, MinorModel};

const NONE: usize = usize::MAX;

// ---------------------------------------------------------------------------
// Verification

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub colour: usize,
    pub same_coloured: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectReport {
    pub ok: bool,
    /// Largest number of same-coloured neighbours over all vertices.
    pub max_defect: usize,
    pub violations: Vec<Violation>,
}

/// Number of neighbours of each vertex sharing its colour.
pub fn same_colour_degrees(g: &Graph, colours: &[usize]) -> Vec<usize> {
    g.vertices()
        .map(|v| g.neighbours(v).iter().filter(|&&w| colours[w] == colours[v]).count())
        .collect()
}

pub fn verify_defective(g: &Graph, colours: &[usize], d: usize) -> Result<DefectReport> {
    if colours.len() != g.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "{} colours given for {} vertices",
            colours.len(),
            g.vertex_count()
        )));
    }
    let same = same_colour_degrees(g, colours);
    let violations: Vec<Violation> = g
        .vertices()
        .filter(|&v| same[v] > d)
        .map(|v| Violation {
            vertex: v,
            colour: colours[v],
            same_coloured: same[v],
        })
        .collect();
    Ok(DefectReport {
        ok: violations.is_empty(),
        max_defect: same.into_iter().max().unwrap_or(0),
        violations,
    })
}

fn ensure_defective(g: &Graph, colours: &[usize], d: usize, what: &str) -> Result<()> {
    let report = verify_defective(g, colours, d)?;
    if report.ok {
        Ok(())
    } else {
        Err(Error::Verification(format!(
            "{what}: defect {} exceeds {d} at vertex {}",
            report.max_defect, report.violations[0].vertex
        )))
    }
}

/// `{"vertex": colour}` object.
pub fn colouring_to_json(colours: &[usize]) -> serde_json::Value {
    let map = colours
        .iter()
        .enumerate()
        .map(|(v, &c)| (v.to_string(), serde_json::Value::from(c)))
        .collect();
    serde_json::Value::Object(map)
}

/// Reads a colouring given as a `{"vertex": colour}` object or a plain
/// array. Every vertex of a graph on `n` vertices must be coloured.
pub fn colouring_from_json(value: &serde_json::Value, n: usize) -> Result<Vec<usize>> {
    let as_colour = |x: &serde_json::Value| {
        x.as_u64()
            .map(|c| c as usize)
            .ok_or_else(|| Error::InvalidInput(format!("colour {x} is not a non-negative integer")))
    };
    let mut colours = vec![NONE; n];
    match value {
        serde_json::Value::Array(items) => {
            if items.len() != n {
                return Err(Error::InvalidInput(format!("{} colours given for {n} vertices", items.len())));
            }
            for (v, x) in items.iter().enumerate() {
                colours[v] = as_colour(x)?;
            }
        }
        serde_json::Value::Object(map) => {
            for (key, x) in map {
                let v: usize = key
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("vertex key {key:?} is not an integer")))?;
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
                colours[v] = as_colour(x)?;
            }
        }
        _ => return Err(Error::InvalidInput("colouring must be an object or array".into())),
    }
    if let Some(v) = colours.iter().position(|&c| c == NONE) {
        return Err(Error::InvalidInput(format!("vertex {v} is uncoloured")));
    }
    Ok(colours)
}

// ---------------------------------------------------------------------------
// Peel and replay

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListAssignment {
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    /// Every vertex gets `{0, .., size - 1}`.
    pub fn uniform(n: usize, size: usize) -> Self {
        ListAssignment {
            lists: vec![(0..size).collect(); n],
        }
    }

    pub fn check(&self, g: &Graph, size: usize) -> Result<()> {
        if self.lists.len() != g.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "{} lists for {} vertices",
                self.lists.len(),
                g.vertex_count()
            )));
        }
        for (v, list) in self.lists.iter().enumerate() {
            let distinct: BTreeSet<_> = list.iter().collect();
            if distinct.len() != list.len() || list.len() != size {
                return Err(Error::InvalidInput(format!(
                    "list of vertex {v} must hold exactly {size} distinct colours"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum PeelStep {
    /// The vertex and its neighbours at removal time.
    RemoveVertex { vertex: usize, neighbours: Vec<usize> },
    RemoveEdge { u: usize, v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelTrace {
    /// A vertex may be removed when its degree is at most `vertex_bound`.
    pub vertex_bound: usize,
    /// An edge may be removed when it is `edge_bound`-light.
    pub edge_bound: usize,
    pub steps: Vec<PeelStep>,
}

/// Repeatedly deletes the least vertex of degree at most `vertex_bound`,
/// otherwise the lexicographically least `edge_bound`-light edge. Fails
/// with [`Error::Stuck`] carrying the residual graph when neither exists.
pub fn peel(g: &Graph, vertex_bound: usize, edge_bound: usize) -> Result<PeelTrace> {
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = g.vertices().map(|v| g.neighbours(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut low: BTreeSet<usize> = g.vertices().filter(|&v| adj[v].len() <= vertex_bound).collect();
    let mut light: BTreeSet<usize> = g.vertices().filter(|&v| adj[v].len() <= edge_bound).collect();
    let mut steps = Vec::with_capacity(n + g.edge_count());
    let mut remaining = n;
    let refresh = |w: usize, deg: usize, low: &mut BTreeSet<usize>, light: &mut BTreeSet<usize>| {
        if deg <= vertex_bound {
            low.insert(w);
        }
        if deg <= edge_bound {
            light.insert(w);
        }
    };
    while remaining > 0 {
        if let Some(v) = low.pop_first() {
            let neighbours: Vec<usize> = std::mem::take(&mut adj[v]).into_iter().collect();
            for &w in &neighbours {
                adj[w].remove(&v);
                refresh(w, adj[w].len(), &mut low, &mut light);
            }
            alive[v] = false;
            light.remove(&v);
            remaining -= 1;
            steps.push(PeelStep::RemoveVertex { vertex: v, neighbours });
            continue;
        }
        let edge = light
            .iter()
            .find_map(|&u| adj[u].range(u + 1..).find(|&&v| light.contains(&v)).map(|&v| (u, v)));
        match edge {
            Some((u, v)) => {
                adj[u].remove(&v);
                adj[v].remove(&u);
                refresh(u, adj[u].len(), &mut low, &mut light);
                refresh(v, adj[v].len(), &mut low, &mut light);
                steps.push(PeelStep::RemoveEdge { u, v });
            }
            None => {
                let vertices: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
                let mut index = vec![NONE; n];
                for (i, &v) in vertices.iter().enumerate() {
                    index[v] = i;
                }
                let edges = vertices
                    .iter()
                    .flat_map(|&v| adj[v].iter().filter(move |&&w| v < w).map(move |&w| (v, w)))
                    .map(|(v, w)| (index[v], index[w]));
                let witness = Graph::from_edges(vertices.len(), edges)?;
                return Err(Error::Stuck { witness, vertices });
            }
        }
    }
    Ok(PeelTrace {
        vertex_bound,
        edge_bound,
        steps,
    })
}

/// Replays `trace` forwards on `g`, checking every step was allowed and
/// that the graph ends empty.
pub fn validate_trace(g: &Graph, trace: &PeelTrace) -> Result<()> {
    let bad = |m: String| Err(Error::Verification(m));
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = g.vertices().map(|v| g.neighbours(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    for step in &trace.steps {
        match step {
            PeelStep::RemoveVertex { vertex, neighbours } => {
                let v = *vertex;
                if v >= n || !alive[v] {
                    return bad(format!("vertex {v} removed twice or out of range"));
                }
                let current: Vec<usize> = adj[v].iter().copied().collect();
                if &current != neighbours || current.len() > trace.vertex_bound {
                    return bad(format!("vertex {v} was not removable"));
                }
                for w in current {
                    adj[w].remove(&v);
                }
                adj[v].clear();
                alive[v] = false;
            }
            PeelStep::RemoveEdge { u, v } => {
                let (u, v) = (*u, *v);
                if u >= n || v >= n || !adj[u].contains(&v) {
                    return bad(format!("edge {u}{v} is absent"));
                }
                if adj[u].len() > trace.edge_bound || adj[v].len() > trace.edge_bound {
                    return bad(format!("edge {u}{v} was not light"));
                }
                adj[u].remove(&v);
                adj[v].remove(&u);
            }
        }
    }
    if alive.iter().any(|&a| a) {
        return bad("trace leaves vertices behind".into());
    }
    Ok(())
}

/// Colours `g` from `k + 1` lists with defect `ell - k`.
pub fn defective_list_colour(g: &Graph, lists: &ListAssignment, k: usize, ell: usize) -> Result<Vec<usize>> {
    defective_list_colour_traced(g, lists, k, ell).map(|(c, _)| c)
}

/// As [`defective_list_colour`], also returning the reduction trace.
///
/// Vertices are reinserted with the least list colour missing from their
/// neighbourhood. When a reinserted edge joins two equal colours and an
/// endpoint now has more than `ell - k` same-coloured neighbours, the
/// smaller such endpoint is recoloured with the least list colour unused
/// around it.
pub fn defective_list_colour_traced(
    g: &Graph,
    lists: &ListAssignment,
    k: usize,
    ell: usize,
) -> Result<(Vec<usize>, PeelTrace)> {
    if k < 1 || ell < k {
        return Err(Error::InvalidInput(format!("need ell >= k >= 1, got k={k} ell={ell}")));
    }
    lists.check(g, k + 1)?;
    let trace = peel(g, k, ell)?;
    let defect = ell - k;
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut colour = vec![NONE; n];

    let free_colour = |v: usize, adj: &[Vec<usize>], colour: &[usize]| -> Option<usize> {
        lists.lists[v]
            .iter()
            .copied()
            .filter(|&c| adj[v].iter().all(|&w| colour[w] != c))
            .min()
    };
    let same = |v: usize, adj: &[Vec<usize>], colour: &[usize]| adj[v].iter().filter(|&&w| colour[w] == colour[v]).count();

    for step in trace.steps.iter().rev() {
        match step {
            PeelStep::RemoveVertex { vertex, neighbours } => {
                let v = *vertex;
                for &w in neighbours {
                    adj[w].push(v);
                }
                adj[v] = neighbours.clone();
                colour[v] = free_colour(v, &adj, &colour)
                    .ok_or_else(|| Error::Verification(format!("no free colour for vertex {v}")))?;
            }
            PeelStep::RemoveEdge { u, v } => {
                let (u, v) = (*u, *v);
                adj[u].push(v);
                adj[v].push(u);
                if colour[u] != colour[v] {
                    continue;
                }
                for x in [u.min(v), u.max(v)] {
                    if same(x, &adj, &colour) > defect {
                        colour[x] = free_colour(x, &adj, &colour)
                            .ok_or_else(|| Error::Verification(format!("no free colour to recolour {x}")))?;
                        break;
                    }
                }
            }
        }
    }
    ensure_defective(g, &colour, defect, "list colouring")?;
    for v in g.vertices() {
        if !lists.lists[v].contains(&colour[v]) {
            return Err(Error::Verification(format!("vertex {v} coloured outside its list")));
        }
    }
    Ok((colour, trace))
}

// ---------------------------------------------------------------------------
// Exhaustive oracles

fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut placed = vec![false; g.vertex_count()];
    while order.len() < g.vertex_count() {
        let next = g
            .vertices()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = g.neighbours(v).iter().filter(|&&w| placed[w]).count();
                (back, g.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct DefectSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    d: usize,
    colour: Vec<usize>,
    same: Vec<usize>,
}

impl<'a> DefectSearch<'a> {
    fn new(g: &'a Graph, d: usize) -> Self {
        DefectSearch {
            g,
            order: search_order(g),
            d,
            colour: vec![NONE; g.vertex_count()],
            same: vec![0; g.vertex_count()],
        }
    }

    fn try_colour(&mut self, v: usize, c: usize) -> bool {
        let g = self.g;
        let mut count = 0;
        for &w in g.neighbours(v) {
            if self.colour[w] == c {
                count += 1;
                if self.same[w] + 1 > self.d {
                    return false;
                }
            }
        }
        if count > self.d {
            return false;
        }
        for &w in g.neighbours(v) {
            if self.colour[w] == c {
                self.same[w] += 1;
            }
        }
        self.same[v] = count;
        self.colour[v] = c;
        true
    }

    fn undo(&mut self, v: usize) {
        let c = self.colour[v];
        for &w in self.g.neighbours(v) {
            if self.colour[w] == c {
                self.same[w] -= 1;
            }
        }
        self.same[v] = 0;
        self.colour[v] = NONE;
    }

    /// Colours from `0..k`, using a new colour only after all smaller ones.
    fn palette(&mut self, idx: usize, k: usize, used: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        for c in 0..k.min(used + 1) {
            if self.try_colour(v, c) {
                if self.palette(idx + 1, k, used.max(c + 1)) {
                    return true;
                }
                self.undo(v);
            }
        }
        false
    }

    fn lists(&mut self, idx: usize, lists: &[Vec<usize>]) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        for &c in &lists[v] {
            if self.try_colour(v, c) {
                if self.lists(idx + 1, lists) {
                    return true;
                }
                self.undo(v);
            }
        }
        false
    }
}

/// Exhaustive `(k, d)`-colourability test; returns a witness colouring.
pub fn is_kd_colourable_bruteforce(g: &Graph, k: usize, d: usize, caps: &Caps) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let cap = match k {
        1 => usize::MAX,
        2 => caps.colour_k2,
        _ => caps.colour_k3,
    };
    if n > cap {
        return Err(Error::CapExceeded {
            what: "(k, d)-colouring search",
            size: n,
            cap,
        });
    }
    let mut search = DefectSearch::new(g, d);
    if !search.palette(0, k, 0) {
        return Ok(None);
    }
    let colours = search.colour;
    ensure_defective(g, &colours, d, "exhaustive colouring")?;
    Ok(Some(colours))
}

/// Exhaustive list-colouring test for one list assignment.
pub fn list_colour_bruteforce(g: &Graph, lists: &ListAssignment, d: usize) -> Option<Vec<usize>> {
    let mut search = DefectSearch::new(g, d);
    search.lists(0, &lists.lists).then_some(search.colour)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChoosabilityCheck {
    pub choosable: bool,
    pub assignments_checked: u64,
    /// A list assignment admitting no `d`-defective colouring.
    pub counterexample: Option<ListAssignment>,
}

/// Checks every `k`-list assignment drawn from `{0, .., palette - 1}`.
/// A `false` answer is a genuine refutation; `true` only covers lists
/// within this palette.
pub fn choosability_check_bounded_palette(
    g: &Graph,
    k: usize,
    d: usize,
    palette: usize,
    caps: &Caps,
) -> Result<ChoosabilityCheck> {
    let n = g.vertex_count();
    if k == 0 || palette < k {
        return Err(Error::InvalidInput(format!("palette {palette} cannot hold lists of size {k}")));
    }
    if n > caps.choosability {
        return Err(Error::CapExceeded {
            what: "choosability vertices",
            size: n,
            cap: caps.choosability,
        });
    }
    if palette > 2 * k {
        return Err(Error::CapExceeded {
            what: "choosability palette",
            size: palette,
            cap: 2 * k,
        });
    }
    let subsets = k_subsets(palette, k);
    if n == 0 {
        return Ok(ChoosabilityCheck {
            choosable: true,
            assignments_checked: 0,
            counterexample: None,
        });
    }
    // Renaming colours maps any assignment to one whose first list is
    // {0, .., k - 1}.
    let mut pick = vec![0usize; n];
    let mut checked = 0u64;
    loop {
        let lists = ListAssignment {
            lists: pick.iter().map(|&i| subsets[i].clone()).collect(),
        };
        checked += 1;
        if list_colour_bruteforce(g, &lists, d).is_none() {
            return Ok(ChoosabilityCheck {
                choosable: false,
                assignments_checked: checked,
                counterexample: Some(lists),
            });
        }
        let mut pos = n - 1;
        loop {
            if pos == 0 {
                return Ok(ChoosabilityCheck {
                    choosable: true,
                    assignments_checked: checked,
                    counterexample: None,
                });
            }
            pick[pos] += 1;
            if pick[pos] < subsets.len() {
                break;
            }
            pick[pos] = 0;
            pos -= 1;
        }
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Tree-free graphs

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum TreeFreeOutcome {
    /// Colour `i` is layer `i + 1`; defect at most `|V(T)| - 2`.
    Colouring { colours: Vec<usize>, colour_count: usize, defect: usize },
    /// `embedding[x]` is the host vertex carrying tree vertex `x`.
    Embedding { embedding: Vec<usize> },
}

/// Radius and least-numbered centre of a tree.
pub fn tree_centre(tree: &Graph) -> (usize, usize) {
    tree.vertices()
        .map(|v| {
            let ecc = tree.distances_from(v).into_iter().max().unwrap_or(0);
            (ecc, v)
        })
        .min()
        .unwrap_or((0, 0))
}

/// Layered colouring with `radius(T)` colours and defect `|V(T)| - 2`, or
/// a copy of `T` in `g` found greedily outward from the centre.
pub fn colour_tree_free(g: &Graph, tree: &Graph) -> Result<TreeFreeOutcome> {
    let n = tree.vertex_count();
    if n < 2 || !tree.is_tree() {
        return Err(Error::InvalidInput("pattern must be a tree on at least 2 vertices".into()));
    }
    let (r, centre) = tree_centre(tree);
    let cap = n - 2;
    let size = g.vertex_count();

    // layer[v] in 1..=r.
    let mut layer = vec![r; size];
    let mut in_residue = vec![true; size];
    let mut residue_deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    for i in 1..r {
        let peeled: Vec<usize> = g.vertices().filter(|&v| in_residue[v] && residue_deg[v] <= cap).collect();
        for &v in &peeled {
            layer[v] = i;
            in_residue[v] = false;
        }
        for &v in &peeled {
            for &w in g.neighbours(v) {
                residue_deg[w] -= 1;
            }
        }
    }
    let top = g.vertices().find(|&v| in_residue[v] && residue_deg[v] > cap);
    let Some(root) = top else {
        let colours: Vec<usize> = layer.iter().map(|&l| l - 1).collect();
        ensure_defective(g, &colours, cap, "layered colouring")?;
        return Ok(TreeFreeOutcome::Colouring {
            colours,
            colour_count: r,
            defect: cap,
        });
    };

    let depth = tree.distances_from(centre);
    let mut embedding = vec![NONE; n];
    let mut used = vec![false; size];
    embedding[centre] = root;
    used[root] = true;
    let mut queue = std::collections::VecDeque::from([centre]);
    while let Some(x) = queue.pop_front() {
        let host = embedding[x];
        // Children at depth i + 1 go to layers >= r - i.
        let min_layer = r.saturating_sub(depth[x]).max(1);
        for &child in tree.neighbours(x) {
            if depth[child] != depth[x] + 1 {
                continue;
            }
            let target = g
                .neighbours(host)
                .iter()
                .copied()
                .find(|&w| !used[w] && layer[w] >= min_layer)
                .ok_or_else(|| Error::Verification(format!("greedy embedding stalled at tree vertex {x}")))?;
            embedding[child] = target;
            used[target] = true;
            queue.push_back(child);
        }
    }
    validate_embedding(g, tree, &embedding)?;
    Ok(TreeFreeOutcome::Embedding { embedding })
}

/// Checks that `embedding` is injective and maps edges of `pattern` to
/// edges of `g`.
pub fn validate_embedding(g: &Graph, pattern: &Graph, embedding: &[usize]) -> Result<()> {
    if embedding.len() != pattern.vertex_count() {
        return Err(Error::Verification("embedding has wrong length".into()));
    }
    let mut seen = BTreeSet::new();
    for &v in embedding {
        g.check_vertex(v)?;
        if !seen.insert(v) {
            return Err(Error::Verification(format!("embedding uses {v} twice")));
        }
    }
    for (x, y) in pattern.edges() {
        if !g.has_edge(embedding[x], embedding[y]) {
            return Err(Error::Verification(format!("pattern edge {x}{y} not mapped to an edge")));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Forest plus bounded degree

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    pub forest: Vec<(usize, usize)>,
    pub bounded: Vec<(usize, usize)>,
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            let next = self.0[x];
            self.0[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

pub fn validate_edge_partition(g: &Graph, p: &EdgePartition, n_bound: usize) -> Result<()> {
    let bad = |m: String| Err(Error::Verification(m));
    let mut all: Vec<(usize, usize)> = p
        .forest
        .iter()
        .chain(&p.bounded)
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    all.sort_unstable();
    let expected: Vec<(usize, usize)> = g.edges().collect();
    if all != expected {
        return bad("parts do not partition the edge set".into());
    }
    let mut sets = DisjointSets::new(g.vertex_count());
    for &(u, v) in &p.forest {
        if !sets.union(u, v) {
            return bad(format!("forest part has a cycle through {u}{v}"));
        }
    }
    let mut deg = vec![0usize; g.vertex_count()];
    for &(u, v) in &p.bounded {
        deg[u] += 1;
        deg[v] += 1;
    }
    if let Some(v) = deg.iter().position(|&d| d + 1 > n_bound) {
        return bad(format!("vertex {v} has degree {} in the bounded part", deg[v]));
    }
    Ok(())
}

/// Splits `E(g)` into a forest and a graph of maximum degree at most
/// `n_bound - 1`, assuming every subgraph has a vertex of degree at most 1
/// or an `n_bound`-light edge.
///
/// Edges are reinserted in reverse peel order. A reinserted edge joins the
/// forest when that keeps it acyclic; otherwise it joins the bounded part,
/// and an endpoint pushed over the degree limit hands one of its bounded
/// edges to the forest.
pub fn edge_partition_forest_bounded(g: &Graph, n_bound: usize) -> Result<EdgePartition> {
    if n_bound < 1 {
        return Err(Error::InvalidInput("bound must be at least 1".into()));
    }
    let trace = peel(g, 1, n_bound)?;
    let n = g.vertex_count();
    let mut forest_adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut bounded_adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for step in trace.steps.iter().rev() {
        match step {
            PeelStep::RemoveVertex { vertex, neighbours } => {
                for &w in neighbours {
                    forest_adj[*vertex].insert(w);
                    forest_adj[w].insert(*vertex);
                }
            }
            PeelStep::RemoveEdge { u, v } => {
                let (u, v) = (*u, *v);
                if !forest_connected(&forest_adj, u, v) {
                    forest_adj[u].insert(v);
                    forest_adj[v].insert(u);
                    continue;
                }
                bounded_adj[u].insert(v);
                bounded_adj[v].insert(u);
                for x in [u, v] {
                    if bounded_adj[x].len() < n_bound {
                        continue;
                    }
                    let movable = bounded_adj[x].iter().copied().find(|&w| !forest_connected(&forest_adj, x, w));
                    if let Some(w) = movable {
                        bounded_adj[x].remove(&w);
                        bounded_adj[w].remove(&x);
                        forest_adj[x].insert(w);
                        forest_adj[w].insert(x);
                    }
                }
            }
        }
    }
    let collect = |adj: &[BTreeSet<usize>]| {
        (0..n)
            .flat_map(|u| adj[u].range(u + 1..).map(move |&v| (u, v)))
            .collect::<Vec<_>>()
    };
    let partition = EdgePartition {
        forest: collect(&forest_adj),
        bounded: collect(&bounded_adj),
    };
    match validate_edge_partition(g, &partition, n_bound) {
        Ok(()) => Ok(partition),
        Err(err) if g.edge_count() <= 20 => exhaustive_edge_partition(g, n_bound).ok_or(err),
        Err(err) => Err(err),
    }
}

fn forest_connected(adj: &[BTreeSet<usize>], from: usize, to: usize) -> bool {
    let mut seen = BTreeSet::from([from]);
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        if x == to {
            return true;
        }
        for &y in &adj[x] {
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    false
}

fn exhaustive_edge_partition(g: &Graph, n_bound: usize) -> Option<EdgePartition> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for mask in 0u32..(1u32 << edges.len()) {
        let (forest, bounded): (Vec<_>, Vec<_>) = edges
            .iter()
            .enumerate()
            .partition(|&(i, _)| mask >> i & 1 == 1);
        let p = EdgePartition {
            forest: forest.into_iter().map(|(_, &e)| e).collect(),
            bounded: bounded.into_iter().map(|(_, &e)| e).collect(),
        };
        if validate_edge_partition(g, &p, n_bound).is_ok() {
            return Some(p);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Excluding a dominant vertex over stars

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KellColouring {
    pub colours: Vec<usize>,
    /// Defect guaranteed and verified for `colours`.
    pub defect_bound: usize,
    /// Defect of the colouring of the contracted graph.
    pub contracted_defect: usize,
    /// Worst-case contracted defect for `H(ell, k)`-minor-free graphs.
    #[serde(serialize_with = "serialize_bigint")]
    pub contracted_defect_formula: BigInt,
    pub common_neighbour_threshold: u64,
    /// Vertices lying in a nontrivial component of the auxiliary graph.
    pub x_vertices: Vec<usize>,
    pub contracted_vertices: usize,
}

fn serialize_bigint<S: serde::Serializer>(value: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum KellOutcome {
    Colouring(KellColouring),
    Minor { model: MinorModel },
}

/// Two-colours a graph with no `H(ell, k)` minor, where `H(ell, k)` is a
/// dominant vertex over `ell` disjoint copies of `K_{1,k}`.
///
/// Pairs of vertices with at least `r` common neighbours form the
/// auxiliary graph `Q`; each component of `Q` is contracted, the result is
/// coloured by peeling with one-colour-plus-one lists at the smallest
/// workable light-edge threshold, and colours are pulled back.
///
/// When `Q` has a vertex of degree `ell`, or the host is small enough for
/// the exhaustive minor test, an `H(ell, k)` model is returned instead.
pub fn colour_kell(g: &Graph, ell: usize, k: usize, caps: &Caps) -> Result<KellOutcome> {
    if ell < 2 || k < 1 {
        return Err(Error::InvalidInput("need ell >= 2 and k >= 1".into()));
    }
    let h = gadgets::gen_kell_h(ell, k)?;
    if g.vertex_count() <= caps.minor_host && h.vertex_count() <= caps.minor_pattern {
        if let Some(model) = structure::minor_test_bruteforce(g, &h, caps)? {
            return Ok(KellOutcome::Minor { model });
        }
    }
    let r = bounds::kell_r(ell as u64, k as u64);
    let n = g.vertex_count();
    let mut q_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in g.vertices() {
        for v in u + 1..n {
            if common_neighbours(g, u, v).len() as u64 >= r {
                q_adj[u].push(v);
                q_adj[v].push(u);
            }
        }
    }
    if let Some(v) = g.vertices().find(|&v| q_adj[v].len() >= ell) {
        let model = star_minor_from_q(g, v, &q_adj[v][..ell], k)?;
        structure::validate_minor_model(g, &h, &model)?;
        return Ok(KellOutcome::Minor { model });
    }
    let in_x: Vec<bool> = q_adj.iter().map(|a| !a.is_empty()).collect();
    let x_limit = ell * ell;
    if let Some(v) = g.vertices().find(|&v| g.neighbours(v).iter().filter(|&&w| in_x[w]).count() >= x_limit) {
        return Err(Error::KellDiagnostic(format!(
            "vertex {v} has at least {x_limit} neighbours in X; a minor of H({ell},{k}) exists but is not extracted"
        )));
    }
    let q = Graph::from_edges(n, q_adj.iter().enumerate().flat_map(|(u, a)| a.iter().map(move |&v| (u, v))).filter(|&(u, v)| u < v))?;
    let components = q.components();
    let (contracted, projection) = g.contract(&components)?;

    let mut outcome = None;
    for light in 1..=contracted.max_degree().max(1) {
        let lists = ListAssignment::uniform(contracted.vertex_count(), 2);
        match defective_list_colour(&contracted, &lists, 1, light) {
            Ok(c) => {
                outcome = Some((c, light - 1));
                break;
            }
            Err(Error::Stuck { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    let (contracted_colours, contracted_defect) =
        outcome.ok_or_else(|| Error::KellDiagnostic("contracted graph could not be peeled".into()))?;
    let (formula, _) = bounds::kell_formula_defect(ell as u64, k as u64);
    let colours: Vec<usize> = g.vertices().map(|v| contracted_colours[projection[v]]).collect();
    let defect_bound = contracted_defect + x_limit - 1;
    ensure_defective(g, &colours, defect_bound, "two-colouring")?;
    Ok(KellOutcome::Colouring(KellColouring {
        colours,
        defect_bound,
        contracted_defect,
        contracted_defect_formula: formula,
        common_neighbour_threshold: r,
        x_vertices: g.vertices().filter(|&v| in_x[v]).collect(),
        contracted_vertices: contracted.vertex_count(),
    }))
}

fn common_neighbours(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    g.neighbours(u).iter().copied().filter(|&w| g.has_edge(v, w)).collect()
}

/// Branch sets of `H(ell, k)` from a vertex `v` and `ell` partners that
/// each share many common neighbours with it: `{v}` is the dominant
/// vertex, partner `i` plus one shared neighbour is centre `i`, and `k`
/// further shared neighbours are its leaves.
fn star_minor_from_q(g: &Graph, v: usize, partners: &[usize], k: usize) -> Result<MinorModel> {
    let mut taken: BTreeSet<usize> = partners.iter().copied().collect();
    taken.insert(v);
    let mut branch_sets = vec![vec![v]];
    for &p in partners {
        let fresh: Vec<usize> = common_neighbours(g, v, p)
            .into_iter()
            .filter(|w| !taken.contains(w))
            .take(k + 1)
            .collect();
        if fresh.len() < k + 1 {
            return Err(Error::KellDiagnostic(format!("too few fresh common neighbours of {v} and {p}")));
        }
        taken.extend(&fresh);
        let mut centre = vec![p, fresh[0]];
        centre.sort_unstable();
        branch_sets.push(centre);
        branch_sets.extend(fresh[1..].iter().map(|&w| vec![w]));
    }
    Ok(MinorModel { branch_sets })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn verify_examples() {
        let c5 = Graph::cycle(5);
        assert!(verify_defective(&c5, &[1, 2, 1, 2, 1], 1).unwrap().ok);
        let r = verify_defective(&Graph::complete(4), &[0; 4], 2).unwrap();
        assert!(!r.ok);
        assert_eq!(r.violations.len(), 4);
        assert_eq!(r.max_defect, 3);
        assert!(verify_defective(&Graph::empty(3), &[0, 0, 0], 0).unwrap().ok);
        assert!(verify_defective(&c5, &[0, 0], 0).is_err());
    }

    #[test]
    fn json_colourings() {
        let v = colouring_to_json(&[1, 0, 1]);
        assert_eq!(colouring_from_json(&v, 3).unwrap(), vec![1, 0, 1]);
        assert!(colouring_from_json(&v, 4).is_err());
        assert!(colouring_from_json(&serde_json::json!({"0": 1, "5": 0}), 2).is_err());
        assert_eq!(colouring_from_json(&serde_json::json!([2, 2]), 2).unwrap(), vec![2, 2]);
    }

    #[test]
    fn trees_colour_properly() {
        for n in 1..12 {
            let g = Graph::path(n);
            let c = defective_list_colour(&g, &ListAssignment::uniform(n, 2), 1, 1).unwrap();
            assert_eq!(verify_defective(&g, &c, 0).unwrap().max_defect, 0);
        }
        let g = Graph::star(6);
        let c = defective_list_colour(&g, &ListAssignment::uniform(7, 2), 1, 1).unwrap();
        assert!(verify_defective(&g, &c, 0).unwrap().ok);
    }

    #[test]
    fn odd_cycle_needs_defect() {
        let g = Graph::cycle(5);
        let (c, trace) = defective_list_colour_traced(&g, &ListAssignment::uniform(5, 2), 1, 2).unwrap();
        assert!(verify_defective(&g, &c, 1).unwrap().ok);
        validate_trace(&g, &trace).unwrap();
        assert!(is_kd_colourable_bruteforce(&g, 2, 1, &caps()).unwrap().is_some());
        assert!(matches!(
            defective_list_colour(&g, &ListAssignment::uniform(5, 2), 1, 1),
            Err(Error::Stuck { .. })
        ));
    }

    #[test]
    fn distinct_lists_are_respected() {
        let g = Graph::cycle(6);
        let lists = ListAssignment {
            lists: (0..6).map(|v| vec![v, v + 1]).collect(),
        };
        let c = defective_list_colour(&g, &lists, 1, 2).unwrap();
        for v in 0..6 {
            assert!(lists.lists[v].contains(&c[v]));
        }
        let short = ListAssignment::uniform(6, 3);
        assert!(defective_list_colour(&g, &short, 1, 2).is_err());
    }

    #[test]
    fn stuck_witness_is_residue() {
        let err = defective_list_colour(&Graph::complete(5), &ListAssignment::uniform(5, 2), 1, 3).unwrap_err();
        match err {
            Error::Stuck { witness, vertices } => {
                assert_eq!(witness, Graph::complete(5));
                assert_eq!(vertices, vec![0, 1, 2, 3, 4]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bruteforce_examples() {
        assert!(is_kd_colourable_bruteforce(&Graph::cycle(5), 2, 0, &caps()).unwrap().is_none());
        for n in 1..4 {
            let star = Graph::star(n + 1);
            assert!(is_kd_colourable_bruteforce(&star, 1, n, &caps()).unwrap().is_none());
            assert!(is_kd_colourable_bruteforce(&star, 1, n + 1, &caps()).unwrap().is_some());
        }
        assert!(is_kd_colourable_bruteforce(&Graph::complete(4), 1, 3, &caps()).unwrap().is_some());
        assert!(matches!(
            is_kd_colourable_bruteforce(&Graph::path(19), 2, 0, &caps()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn choosability_examples() {
        let c = caps();
        assert!(choosability_check_bounded_palette(&Graph::complete_bipartite(2, 2), 2, 0, 4, &c).unwrap().choosable);
        let k13 = Graph::star(3);
        assert!(choosability_check_bounded_palette(&k13, 1, 3, 2, &c).unwrap().choosable);
        let refuted = choosability_check_bounded_palette(&k13, 1, 2, 2, &c).unwrap();
        assert!(!refuted.choosable);
        assert!(list_colour_bruteforce(&k13, refuted.counterexample.as_ref().unwrap(), 2).is_none());
        assert!(!choosability_check_bounded_palette(&k13, 1, 1, 2, &c).unwrap().choosable);
        for p in 1..=2 {
            assert!(choosability_check_bounded_palette(&Graph::empty(1), 1, 0, p, &c).unwrap().choosable);
        }
        // K_{3,3} is not 2-choosable.
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(!choosability_check_bounded_palette(&k33, 2, 0, 4, &c).unwrap().choosable);
    }

    #[test]
    fn tree_free_examples() {
        let matching = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        match colour_tree_free(&matching, &Graph::path(3)).unwrap() {
            TreeFreeOutcome::Colouring { colour_count, defect, .. } => assert_eq!((colour_count, defect), (1, 1)),
            other => panic!("unexpected {other:?}"),
        }
        match colour_tree_free(&Graph::cycle(5), &Graph::star(3)).unwrap() {
            TreeFreeOutcome::Colouring { colour_count, defect, .. } => assert_eq!((colour_count, defect), (1, 2)),
            other => panic!("unexpected {other:?}"),
        }
        let t = gadgets::complete_binary_tree(2);
        let g = gadgets::gen_gsn(2, 4, 100).unwrap();
        match colour_tree_free(&g, &t).unwrap() {
            TreeFreeOutcome::Colouring { colours, colour_count, defect } => {
                assert_eq!((colour_count, defect), (2, 5));
                assert!(verify_defective(&g, &colours, 5).unwrap().ok);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(colour_tree_free(&g, &Graph::cycle(4)).is_err());
    }

    #[test]
    fn tree_free_finds_embeddings() {
        let t = gadgets::complete_binary_tree(2);
        let host = gadgets::complete_binary_tree(3);
        match colour_tree_free(&host, &t).unwrap() {
            TreeFreeOutcome::Embedding { embedding } => validate_embedding(&host, &t, &embedding).unwrap(),
            TreeFreeOutcome::Colouring { colours, .. } => {
                assert!(verify_defective(&host, &colours, 5).unwrap().ok)
            }
        }
        match colour_tree_free(&Graph::complete(5), &Graph::star(3)).unwrap() {
            TreeFreeOutcome::Embedding { embedding } => {
                validate_embedding(&Graph::complete(5), &Graph::star(3), &embedding).unwrap()
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn edge_partitions() {
        let tree = gadgets::complete_binary_tree(3);
        let p = edge_partition_forest_bounded(&tree, 2).unwrap();
        assert!(p.bounded.is_empty());
        assert_eq!(p.forest.len(), tree.edge_count());
        for n in 3..10 {
            let c = Graph::cycle(n);
            let p = edge_partition_forest_bounded(&c, 2).unwrap();
            assert_eq!((p.forest.len(), p.bounded.len()), (n - 1, 1));
            validate_edge_partition(&c, &p, 2).unwrap();
        }
        assert!(matches!(
            edge_partition_forest_bounded(&Graph::complete(5), 3),
            Err(Error::Stuck { .. })
        ));
    }

    #[test]
    fn kell_on_cycles() {
        for n in 6..=12 {
            let g = Graph::cycle(n);
            match colour_kell(&g, 2, 1, &caps()).unwrap() {
                KellOutcome::Colouring(c) => {
                    assert!(verify_defective(&g, &c.colours, c.defect_bound).unwrap().ok);
                    assert_eq!(c.contracted_vertices, n);
                    assert!(c.x_vertices.is_empty());
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn kell_finds_h_in_itself() {
        let h = gadgets::gen_kell_h(2, 1).unwrap();
        match colour_kell(&h, 2, 1, &caps()).unwrap() {
            KellOutcome::Minor { model } => structure::validate_minor_model(&h, &h, &model).unwrap(),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kell_q_claim_extracts_minor() {
        // Vertex 0 shares r = 12 common neighbours with each of 1 and 2.
        let r = bounds::kell_r(2, 1) as usize;
        let mut edges = Vec::new();
        for w in 3..3 + 2 * r {
            edges.push((0, w));
            edges.push((if w < 3 + r { 1 } else { 2 }, w));
        }
        let g = Graph::from_edges(3 + 2 * r, edges).unwrap();
        let h = gadgets::gen_kell_h(2, 1).unwrap();
        match colour_kell(&g, 2, 1, &caps()).unwrap() {
            KellOutcome::Minor { model } => structure::validate_minor_model(&g, &h, &model).unwrap(),
            other => panic!("unexpected {other:?}"),
        }
    }
}
