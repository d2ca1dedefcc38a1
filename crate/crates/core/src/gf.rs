//! The finite graph `G_F` attached to a finite set `F` of edges and
//! singular vertices, acyclicity, and the matricial block structure of
//! acyclic ultragraphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{EdgeId, Ultragraph, VertexId, VertexSet};
use crate::paths::enumerate_cycles;

/// Default bound on the number of `F` sets examined by exhaustive checks.
pub const DEFAULT_F_CAP: usize = 1 << 12;

/// A range signature `ω ∈ {0,1}ⁿ \ {0ⁿ}` over `F¹ = {e_1..e_n}`, with
/// `r(ω) = ⋂_{ω_i=1} r(e_i) \ ⋃_{ω_j=0} r(e_j)` and `R(ω) = r(ω) \ F⁰`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaSignature {
    pub bits: Vec<bool>,
    pub r_omega: VertexSet,
    pub big_r_omega: VertexSet,
}

impl OmegaSignature {
    pub fn label(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GNode {
    Vertex(VertexId),
    Edge(EdgeId),
    Signature(OmegaSignature),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGraph {
    pub nodes: Vec<GNode>,
    /// `(source node, target node, label)` as node indices.
    pub arcs: Vec<(usize, usize, String)>,
}

impl FiniteGraph {
    pub fn node_index(&self, node: &GNode) -> Option<usize> {
        self.nodes.iter().position(|n| n == node)
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.nodes.len()];
        for &(s, t, _) in &self.arcs {
            succ[s].push(t);
        }
        succ
    }

    pub fn node_label(&self, ug: &Ultragraph, i: usize) -> String {
        match &self.nodes[i] {
            GNode::Vertex(v) => ug.vertex_name(*v).to_string(),
            GNode::Edge(e) => ug.edge_name(*e).to_string(),
            GNode::Signature(w) => format!("ω{}", w.label()),
        }
    }

    /// Graphviz rendering for debugging.
    pub fn to_dot(&self, ug: &Ultragraph) -> String {
        let mut out = String::from("digraph G_F {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let shape = match node {
                GNode::Vertex(_) => "doublecircle",
                GNode::Edge(_) => "circle",
                GNode::Signature(_) => "box",
            };
            let _ = writeln!(out, "  n{i} [label=\"{}\", shape={shape}];", self.node_label(ug, i));
        }
        for (s, t, label) in &self.arcs {
            let _ = writeln!(out, "  n{s} -> n{t} [label=\"{label}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Elements of `F`: edges and singular vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FMember {
    Edge(EdgeId),
    Vertex(VertexId),
}

/// Resolves a list of edge and vertex names into `F`. Edge names take
/// precedence when a name is both.
pub fn resolve_f<S: AsRef<str>>(ug: &Ultragraph, names: &[S]) -> Result<Vec<FMember>> {
    names
        .iter()
        .map(|n| {
            let n = n.as_ref();
            ug.edge_by_name(n)
                .map(FMember::Edge)
                .or_else(|| ug.vertex_by_name(n).map(FMember::Vertex))
                .ok_or_else(|| Error::InvalidF(format!("unknown name `{n}`")))
        })
        .collect()
}

/// The maximal `F`: every edge and every sink.
pub fn maximal_f(ug: &Ultragraph) -> Vec<FMember> {
    ug.edges()
        .map(FMember::Edge)
        .chain(ug.taxonomy().sinks.iter().map(FMember::Vertex))
        .collect()
}

/// Builds `G_F`. Signatures are obtained by grouping the vertices of
/// `⋃ r(e_i)` by the set of `e_i` whose range contains them, so only
/// realized signatures are visited. Signatures with `R(ω) = ∅` produce no
/// node.
pub fn build_gf(ug: &Ultragraph, f: &[FMember]) -> Result<FiniteGraph> {
    let mut f1: Vec<EdgeId> = Vec::new();
    let mut f0 = VertexSet::EMPTY;
    for &m in f {
        match m {
            FMember::Edge(e) => {
                if e.0 >= ug.edge_count() {
                    return Err(Error::InvalidF(format!("edge index {} out of range", e.0)));
                }
                if !f1.contains(&e) {
                    f1.push(e);
                }
            }
            FMember::Vertex(v) => {
                if v.0 >= ug.vertex_count() {
                    return Err(Error::InvalidF(format!("vertex index {} out of range", v.0)));
                }
                if !ug.is_sink(v) {
                    return Err(Error::InvalidF(format!(
                        "vertex `{}` is not singular",
                        ug.vertex_name(v)
                    )));
                }
                f0.insert(v);
            }
        }
    }
    f1.sort();

    let mut groups: BTreeMap<Vec<bool>, VertexSet> = BTreeMap::new();
    let covered = f1.iter().fold(VertexSet::EMPTY, |acc, &e| acc.union(ug.range(e)));
    for v in covered.iter() {
        let bits: Vec<bool> = f1.iter().map(|&e| ug.range(e).contains(v)).collect();
        groups.entry(bits).or_default().insert(v);
    }

    let in_f1 = |e: &EdgeId| f1.binary_search(e).is_ok();
    let mut gamma_f: Vec<OmegaSignature> = Vec::new();
    for (bits, r_omega) in groups {
        let big_r = r_omega.difference(f0);
        if big_r.is_empty() {
            continue;
        }
        let in_gamma0 = big_r
            .iter()
            .all(|v| !ug.emitted(v).is_empty() && ug.emitted(v).iter().all(in_f1));
        if !in_gamma0 {
            gamma_f.push(OmegaSignature { bits, r_omega, big_r_omega: big_r });
        }
    }

    let mut nodes: Vec<GNode> = Vec::new();
    nodes.extend(f0.iter().map(GNode::Vertex));
    nodes.extend(f1.iter().copied().map(GNode::Edge));
    nodes.extend(gamma_f.iter().cloned().map(GNode::Signature));
    let idx = |n: &GNode| nodes.iter().position(|m| m == n).unwrap();

    let mut arcs = Vec::new();
    for (i, &e) in f1.iter().enumerate() {
        let src = idx(&GNode::Edge(e));
        for &g in &f1 {
            if ug.range(e).contains(ug.source(g)) {
                arcs.push((src, idx(&GNode::Edge(g)), format!("({},{})", ug.edge_name(e), ug.edge_name(g))));
            }
        }
        for v in f0.intersection(ug.range(e)).iter() {
            arcs.push((src, idx(&GNode::Vertex(v)), format!("({},{})", ug.edge_name(e), ug.vertex_name(v))));
        }
        for w in gamma_f.iter().filter(|w| w.bits[i]) {
            arcs.push((
                src,
                idx(&GNode::Signature(w.clone())),
                format!("({},ω{})", ug.edge_name(e), w.label()),
            ));
        }
    }
    Ok(FiniteGraph { nodes, arcs })
}

/// All realized signatures over `F¹` (including those with `R(ω) = ∅`).
pub fn realized_signatures(ug: &Ultragraph, f1: &[EdgeId]) -> Vec<(Vec<bool>, VertexSet)> {
    let mut groups: BTreeMap<Vec<bool>, VertexSet> = BTreeMap::new();
    for v in ug.vertices() {
        let bits: Vec<bool> = f1.iter().map(|&e| ug.range(e).contains(v)).collect();
        if bits.iter().any(|&b| b) {
            groups.entry(bits).or_default().insert(v);
        }
    }
    groups.into_iter().collect()
}

/// Depth-first search for a directed cycle.
pub fn graph_is_acyclic(g: &FiniteGraph) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let succ = g.successors();
    let mut mark = vec![Mark::New; g.nodes.len()];
    for root in 0..g.nodes.len() {
        if mark[root] != Mark::New {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Active;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if let Some(&t) = succ[node].get(*next) {
                *next += 1;
                match mark[t] {
                    Mark::Active => return false,
                    Mark::New => {
                        mark[t] = Mark::Active;
                        stack.push((t, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                mark[node] = Mark::Done;
                stack.pop();
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcyclicityStrategy {
    Direct,
    ViaGF,
}

/// `Direct`: no cycle classes. `ViaGF`: `G_F` is acyclic for the maximal
/// `F`, whose graph contains the graph of every smaller `F` up to the
/// extra signature sinks.
pub fn ultragraph_is_acyclic(ug: &Ultragraph, strategy: AcyclicityStrategy) -> Result<bool> {
    match strategy {
        AcyclicityStrategy::Direct => Ok(enumerate_cycles(ug).is_empty()),
        AcyclicityStrategy::ViaGF => {
            if ug.edge_count() == 0 && ug.vertex_count() == 0 {
                return Ok(true);
            }
            Ok(graph_is_acyclic(&build_gf(ug, &maximal_f(ug))?))
        }
    }
}

/// Checks `G_F` over every nonempty `F ⊆ 𝒢¹ ∪ Sing(𝒢)`, up to `cap` sets.
pub fn all_gf_acyclic(ug: &Ultragraph, cap: usize) -> Result<bool> {
    let universe = maximal_f(ug);
    let n = universe.len();
    if n >= usize::BITS as usize || (1usize << n) > cap {
        return Err(Error::CapExceeded { what: "F subsets", cap });
    }
    for mask in 1usize..(1 << n) {
        let f: Vec<FMember> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| universe[i]).collect();
        if !graph_is_acyclic(&build_gf(ug, &f)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatricialMethod {
    DirectSinkCount,
    ViaGF,
}

/// Block sizes `n_i` of `L_K(𝒢) ≅ ⊕ M_{n_i}(K)` for an acyclic ultragraph,
/// one block per sink, sorted ascending.
pub fn matricial_structure(ug: &Ultragraph, method: MatricialMethod) -> Result<Vec<usize>> {
    if !enumerate_cycles(ug).is_empty() {
        return Err(Error::NotAcyclic);
    }
    let mut blocks = match method {
        MatricialMethod::DirectSinkCount => {
            // the trivial path plus every edge path α with w ∈ r(α)
            let sinks = ug.taxonomy().sinks;
            sinks.iter().map(|w| 1 + count_edge_paths_into(ug, w)).collect::<Vec<_>>()
        }
        MatricialMethod::ViaGF => {
            let g = build_gf(ug, &maximal_f(ug))?;
            let succ = g.successors();
            let n = g.nodes.len();
            let mut pred = vec![Vec::new(); n];
            for (s, ts) in succ.iter().enumerate() {
                for &t in ts {
                    pred[t].push(s);
                }
            }
            // paths ending at node i = 1 + Σ over predecessors
            let mut memo: Vec<Option<usize>> = vec![None; n];
            fn count(i: usize, pred: &[Vec<usize>], memo: &mut Vec<Option<usize>>) -> usize {
                if let Some(c) = memo[i] {
                    return c;
                }
                let c = 1 + pred[i].iter().map(|&p| count(p, pred, memo)).sum::<usize>();
                memo[i] = Some(c);
                c
            }
            (0..n)
                .filter(|&i| succ[i].is_empty())
                .map(|i| count(i, &pred, &mut memo))
                .collect()
        }
    };
    blocks.sort_unstable();
    Ok(blocks)
}

fn count_edge_paths_into(ug: &Ultragraph, target: VertexId) -> usize {
    // memo[e]: edge paths starting with e whose range contains target
    fn from(ug: &Ultragraph, e: EdgeId, target: VertexId, memo: &mut [Option<usize>]) -> usize {
        if let Some(n) = memo[e.0] {
            return n;
        }
        let r = ug.range(e);
        let mut n = usize::from(r.contains(target));
        for x in r.iter() {
            for &f in ug.emitted(x) {
                n += from(ug, f, target, memo);
            }
        }
        memo[e.0] = Some(n);
        n
    }
    let mut memo = vec![None; ug.edge_count()];
    ug.edges().map(|e| from(ug, e, target, &mut memo)).sum()
}

/// `Σ n_i²`.
pub fn matricial_dimension(blocks: &[usize]) -> usize {
    blocks.iter().map(|n| n * n).sum()
}
