//! Finite paths, cycles up to rotation, exits, and the connectivity
//! relations `w ≥ v`, `v → A` and "connects to a cycle".

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{EdgeId, Ultragraph, VertexId, VertexSet};

/// Default bound on the number of paths [`enumerate_paths`] may return.
pub const DEFAULT_PATH_CAP: usize = 100_000;

/// A finite path: a lattice element of length zero, or a chain of edges
/// with `s(α_{i+1}) ∈ r(α_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    Trivial(VertexSet),
    Edges(Vec<EdgeId>),
}

impl Path {
    pub fn vertex(v: VertexId) -> Self {
        Path::Trivial(VertexSet::singleton(v))
    }

    /// Builds an edge path, checking the chaining condition. An empty edge
    /// list is rejected; use [`Path::Trivial`] for length zero.
    pub fn from_edges(ug: &Ultragraph, edges: Vec<EdgeId>) -> Option<Self> {
        let p = Path::Edges(edges);
        p.is_valid(ug).then_some(p)
    }

    pub fn len(&self) -> usize {
        match self {
            Path::Trivial(_) => 0,
            Path::Edges(es) => es.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The edge sequence; empty for a trivial path.
    pub fn edges(&self) -> &[EdgeId] {
        match self {
            Path::Trivial(_) => &[],
            Path::Edges(es) => es,
        }
    }

    /// `s(α)` as a vertex set: `{s(α_1)}` for edge paths, `A` for `A`.
    pub fn source(&self, ug: &Ultragraph) -> VertexSet {
        match self {
            Path::Trivial(a) => *a,
            Path::Edges(es) => VertexSet::singleton(ug.source(es[0])),
        }
    }

    /// `r(α)`: the range of the last edge, or `A` for `A`.
    pub fn range(&self, ug: &Ultragraph) -> VertexSet {
        match self {
            Path::Trivial(a) => *a,
            Path::Edges(es) => ug.range(*es.last().expect("edge path is nonempty")),
        }
    }

    pub fn is_valid(&self, ug: &Ultragraph) -> bool {
        match self {
            Path::Trivial(a) => a.is_subset(ug.all_vertices()),
            Path::Edges(es) => {
                !es.is_empty()
                    && es.iter().all(|e| e.0 < ug.edge_count())
                    && es.windows(2).all(|w| ug.range(w[0]).contains(ug.source(w[1])))
            }
        }
    }

    pub fn display(&self, ug: &Ultragraph) -> String {
        match self {
            Path::Trivial(a) => ug.format_set(*a),
            Path::Edges(es) => es.iter().map(|&e| ug.edge_name(e)).collect::<Vec<_>>().join(" "),
        }
    }

    /// Display form used in JSON output: vertex names for trivial paths,
    /// edge names otherwise.
    pub fn to_json(&self, ug: &Ultragraph) -> serde_json::Value {
        match self {
            Path::Trivial(a) => serde_json::json!({ "vertices": ug.set_names(*a) }),
            Path::Edges(es) => serde_json::json!({
                "edges": es.iter().map(|&e| ug.edge_name(e)).collect::<Vec<_>>()
            }),
        }
    }
}

impl Ord for Path {
    /// Length first, then lexicographic on edge indices; trivial paths are
    /// ordered by their vertex sets.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| match (self, other) {
            (Path::Trivial(a), Path::Trivial(b)) => a.bits().cmp(&b.bits()),
            _ => self.edges().cmp(other.edges()),
        })
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every trivial singleton path and every edge path of length at most
/// `max_len`, ordered by length then edge indices.
pub fn enumerate_paths(ug: &Ultragraph, max_len: usize, cap: usize) -> Result<Vec<Path>> {
    let mut out: Vec<Path> = ug.vertices().map(Path::vertex).collect();
    if out.len() > cap {
        return Err(Error::CapExceeded { what: "paths", cap });
    }
    let mut level: Vec<Vec<EdgeId>> = Vec::new();
    for len in 1..=max_len {
        let next: Vec<Vec<EdgeId>> = if len == 1 {
            ug.edges().map(|e| vec![e]).collect()
        } else {
            let mut next = Vec::new();
            for p in &level {
                let r = ug.range(*p.last().unwrap());
                for f in ug.edges().filter(|&f| r.contains(ug.source(f))) {
                    let mut q = p.clone();
                    q.push(f);
                    next.push(q);
                }
            }
            next
        };
        if next.is_empty() {
            break;
        }
        if out.len() + next.len() > cap {
            return Err(Error::CapExceeded { what: "paths", cap });
        }
        out.extend(next.iter().cloned().map(Path::Edges));
        level = next;
    }
    Ok(out)
}

/// A cycle up to rotation: a simple closed path (pairwise distinct edge
/// sources, `s(e_1) ∈ r(e_n)`), stored as its lexicographically least
/// rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleClass {
    edges: Vec<EdgeId>,
    sources: VertexSet,
}

impl CycleClass {
    /// Normalizes `edges` to its least rotation. Returns `None` unless the
    /// sequence is a simple closed path of `ug`.
    pub fn new(ug: &Ultragraph, edges: Vec<EdgeId>) -> Option<Self> {
        if edges.is_empty() || !Path::Edges(edges.clone()).is_valid(ug) {
            return None;
        }
        let n = edges.len();
        if !ug.range(edges[n - 1]).contains(ug.source(edges[0])) {
            return None;
        }
        let sources: VertexSet = edges.iter().map(|&e| ug.source(e)).collect();
        if sources.len() != n {
            return None;
        }
        let start = (0..n).min_by_key(|&i| edges[i]).unwrap();
        let mut rep = edges[start..].to_vec();
        rep.extend_from_slice(&edges[..start]);
        Some(CycleClass { edges: rep, sources })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `{s(e_i)}`.
    pub fn sources(&self) -> VertexSet {
        self.sources
    }

    /// `s(c)` of the representative.
    pub fn base(&self, ug: &Ultragraph) -> VertexId {
        ug.source(self.edges[0])
    }

    /// Membership in `c⁰`, the collection of all subsets of the cycle's
    /// source vertices.
    pub fn c0_contains(&self, set: VertexSet) -> bool {
        set.is_subset(self.sources)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn rotations(&self) -> impl Iterator<Item = Vec<EdgeId>> + '_ {
        let n = self.edges.len();
        (0..n).map(move |k| {
            let mut r = self.edges[k..].to_vec();
            r.extend_from_slice(&self.edges[..k]);
            r
        })
    }

    pub fn as_path(&self) -> Path {
        Path::Edges(self.edges.clone())
    }

    pub fn display(&self, ug: &Ultragraph) -> String {
        self.as_path().display(ug)
    }
}

/// All cycle classes, ordered by length then representative.
pub fn enumerate_cycles(ug: &Ultragraph) -> Vec<CycleClass> {
    fn extend(
        ug: &Ultragraph,
        stack: &mut Vec<EdgeId>,
        used: VertexSet,
        out: &mut Vec<CycleClass>,
    ) {
        let first = stack[0];
        let last = *stack.last().unwrap();
        let r = ug.range(last);
        if r.contains(ug.source(first)) {
            out.push(CycleClass { edges: stack.clone(), sources: used });
        }
        for v in r.iter().filter(|&v| !used.contains(v)) {
            for &f in ug.emitted(v) {
                // least edge first, so each rotation class is found once
                if f > first {
                    stack.push(f);
                    let mut u = used;
                    u.insert(v);
                    extend(ug, stack, u, out);
                    stack.pop();
                }
            }
        }
    }

    let mut out = Vec::new();
    for e in ug.edges() {
        let mut stack = vec![e];
        extend(ug, &mut stack, VertexSet::singleton(ug.source(e)), &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges.cmp(&b.edges)));
    out
}

/// An exit of a cycle at position `at_index` (0-based into the
/// representative).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Exit {
    /// `s(edge) ∈ r(α_i)` and `edge ≠ α_{i+1}`.
    Edge { edge: EdgeId, at_index: usize },
    /// `vertex` is a sink in `r(α_i)`.
    Sink { vertex: VertexId, at_index: usize },
}

impl Exit {
    /// Re-checks the defining condition against `c`.
    pub fn is_valid_for(&self, ug: &Ultragraph, c: &CycleClass) -> bool {
        let n = c.len();
        match *self {
            Exit::Edge { edge, at_index } => {
                at_index < n
                    && ug.range(c.edges[at_index]).contains(ug.source(edge))
                    && edge != c.edges[(at_index + 1) % n]
            }
            Exit::Sink { vertex, at_index } => {
                at_index < n && ug.is_sink(vertex) && ug.range(c.edges[at_index]).contains(vertex)
            }
        }
    }

    pub fn display(&self, ug: &Ultragraph) -> String {
        match *self {
            Exit::Edge { edge, at_index } => {
                format!("edge {} after position {}", ug.edge_name(edge), at_index)
            }
            Exit::Sink { vertex, at_index } => {
                format!("sink {} in range of position {}", ug.vertex_name(vertex), at_index)
            }
        }
    }
}

/// Some exit of `c`, edge exits first, or `None` if `c` has no exit.
pub fn has_exit(ug: &Ultragraph, c: &CycleClass) -> Option<Exit> {
    let n = c.len();
    for (i, &e) in c.edges.iter().enumerate() {
        let next = c.edges[(i + 1) % n];
        for v in ug.range(e).iter() {
            if let Some(&f) = ug.emitted(v).iter().find(|&&f| f != next) {
                return Some(Exit::Edge { edge: f, at_index: i });
            }
        }
    }
    for (i, &e) in c.edges.iter().enumerate() {
        if let Some(w) = ug.range(e).iter().find(|&w| ug.is_sink(w)) {
            return Some(Exit::Sink { vertex: w, at_index: i });
        }
    }
    None
}

/// Vertices lying in `r(α)` for some edge path `α` with `s(α) = w`.
pub fn edge_reachable(ug: &Ultragraph, w: VertexId) -> VertexSet {
    let mut seen = VertexSet::EMPTY;
    let mut expanded = VertexSet::EMPTY;
    let mut stack = vec![w];
    while let Some(x) = stack.pop() {
        if expanded.contains(x) {
            continue;
        }
        expanded.insert(x);
        for &e in ug.emitted(x) {
            for y in ug.range(e).iter() {
                seen.insert(y);
                if !expanded.contains(y) {
                    stack.push(y);
                }
            }
        }
    }
    seen
}

/// `{v} ∪ edge_reachable(v)`: everything some path from `v` ends in.
pub fn forward_closure(ug: &Ultragraph, v: VertexId) -> VertexSet {
    let mut s = edge_reachable(ug, v);
    s.insert(v);
    s
}

/// `w ≥ v`. Reflexive through the length-zero path `{w}`.
pub fn reaches(ug: &Ultragraph, w: VertexId, v: VertexId) -> bool {
    w == v || edge_reachable(ug, w).contains(v)
}

/// A shortest path `α` with `s(α) = w` and `v ∈ r(α)`.
pub fn path_between(ug: &Ultragraph, w: VertexId, v: VertexId) -> Option<Path> {
    path_into(ug, w, VertexSet::singleton(v)).map(|(p, _)| p)
}

/// A shortest path from `w` whose range meets `targets`, together with a
/// target vertex it reaches.
pub fn path_into(ug: &Ultragraph, w: VertexId, targets: VertexSet) -> Option<(Path, VertexId)> {
    if targets.contains(w) {
        return Some((Path::vertex(w), w));
    }
    let mut parent: Vec<Option<Option<EdgeId>>> = vec![None; ug.edge_count()];
    let mut queue = VecDeque::new();
    for &e in ug.emitted(w) {
        parent[e.0] = Some(None);
        queue.push_back(e);
    }
    while let Some(e) = queue.pop_front() {
        let r = ug.range(e);
        if let Some(t) = r.intersection(targets).first() {
            let mut edges = vec![e];
            let mut cur = e;
            while let Some(Some(p)) = parent[cur.0] {
                edges.push(p);
                cur = p;
            }
            edges.reverse();
            return Some((Path::Edges(edges), t));
        }
        for x in r.iter() {
            for &f in ug.emitted(x) {
                if parent[f.0].is_none() {
                    parent[f.0] = Some(Some(e));
                    queue.push_back(f);
                }
            }
        }
    }
    None
}

/// `v → A`: finitely many paths from `v` whose ranges cover `A`.
pub fn covers(ug: &Ultragraph, v: VertexId, a: VertexSet) -> bool {
    a.is_subset(forward_closure(ug, v))
}

/// Witness paths for [`covers`], one per member of `A`, deduplicated.
pub fn cover_paths(ug: &Ultragraph, v: VertexId, a: VertexSet) -> Option<Vec<Path>> {
    let mut out: Vec<Path> = Vec::new();
    for w in a.iter() {
        let p = path_between(ug, v, w)?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out.sort();
    Some(out)
}

/// `v` connects to some cycle of `ug`.
pub fn connects_to_cycle(ug: &Ultragraph, v: VertexId) -> bool {
    let sources = enumerate_cycles(ug)
        .iter()
        .fold(VertexSet::EMPTY, |acc, c| acc.union(c.sources()));
    forward_closure(ug, v).intersects(sources)
}

/// A path `β` from `v` with `s(e_i) ∈ r(β)` for an edge of `c`.
pub fn connection_to(ug: &Ultragraph, v: VertexId, c: &CycleClass) -> Option<Path> {
    path_into(ug, v, c.sources()).map(|(p, _)| p)
}
