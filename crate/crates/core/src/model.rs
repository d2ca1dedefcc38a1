//! Finite ultragraphs: vertices, edges, the source map and the set-valued
//! range map, together with the vertex-set lattice they generate.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

/// Default bound on the number of lattice elements produced by
/// [`Ultragraph::generate_lattice`].
pub const DEFAULT_LATTICE_CAP: usize = 4096;

/// Dense index of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

/// Dense index of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A subset of the vertices of an ultragraph, stored as a bitmask.
///
/// Equality is by value, so two lattice elements built along different
/// routes compare equal exactly when they contain the same vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: VertexId) -> Self {
        debug_assert!(v.0 < MAX_VERTICES);
        VertexSet(1u64 << v.0)
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: VertexId) -> bool {
        v.0 < MAX_VERTICES && self.0 & (1u64 << v.0) != 0
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1u64 << v.0;
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1u64 << v.0);
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<VertexId> {
        (self.0 != 0).then(|| VertexId(self.0.trailing_zeros() as usize))
    }

    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(VertexId(i))
            }
        })
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

/// One `edge NAME : SOURCE -> { RANGE.. }` declaration, by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDecl {
    pub name: String,
    pub source: String,
    pub range: Vec<String>,
}

/// Unresolved, name-based description of an ultragraph. This is what the
/// text format parses into and what [`validate`] inspects.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UltragraphDoc {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    EmptyRange { edge: String },
    UnknownVertex { edge: String, vertex: String },
    DuplicateVertex { name: String },
    DuplicateEdge { name: String },
    TooManyVertices { count: usize },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::EmptyRange { edge } => write!(f, "edge `{edge}` has an empty range"),
            Finding::UnknownVertex { edge, vertex } => {
                write!(f, "edge `{edge}` refers to unknown vertex `{vertex}`")
            }
            Finding::DuplicateVertex { name } => write!(f, "duplicate vertex name `{name}`"),
            Finding::DuplicateEdge { name } => write!(f, "duplicate edge name `{name}`"),
            Finding::TooManyVertices { count } => {
                write!(f, "{count} vertices declared, at most {MAX_VERTICES} supported")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.findings.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.findings.is_empty() {
            return write!(f, "valid");
        }
        for (i, finding) in self.findings.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{finding}")?;
        }
        Ok(())
    }
}

/// Checks a declaration for empty ranges, dangling vertex references and
/// duplicate names.
pub fn validate(doc: &UltragraphDoc) -> ValidationReport {
    let mut findings = Vec::new();
    if doc.vertices.len() > MAX_VERTICES {
        findings.push(Finding::TooManyVertices { count: doc.vertices.len() });
    }
    let mut seen = HashSet::new();
    for v in &doc.vertices {
        if !seen.insert(v.as_str()) {
            findings.push(Finding::DuplicateVertex { name: v.clone() });
        }
    }
    let mut seen_edges = HashSet::new();
    for e in &doc.edges {
        if !seen_edges.insert(e.name.as_str()) {
            findings.push(Finding::DuplicateEdge { name: e.name.clone() });
        }
        if !seen.contains(e.source.as_str()) {
            findings.push(Finding::UnknownVertex { edge: e.name.clone(), vertex: e.source.clone() });
        }
        if e.range.is_empty() {
            findings.push(Finding::EmptyRange { edge: e.name.clone() });
        }
        for w in &e.range {
            if !seen.contains(w.as_str()) {
                findings.push(Finding::UnknownVertex { edge: e.name.clone(), vertex: w.clone() });
            }
        }
    }
    ValidationReport { findings }
}

/// Sinks and regular vertices. Infinite emitters cannot occur in a finite
/// ultragraph, so that set is always empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexTaxonomy {
    pub sinks: VertexSet,
    pub regular: VertexSet,
    pub infinite_emitters: VertexSet,
}

impl VertexTaxonomy {
    /// Sinks and infinite emitters.
    pub fn singular(&self) -> VertexSet {
        self.sinks.union(self.infinite_emitters)
    }
}

/// A validated finite ultragraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ultragraph {
    name: String,
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    source: Vec<VertexId>,
    range: Vec<VertexSet>,
    // s^-1(v), edges in index order
    emitted: Vec<Vec<EdgeId>>,
}

impl Ultragraph {
    pub fn from_doc(doc: &UltragraphDoc) -> Result<Self> {
        let report = validate(doc);
        if !report.is_valid() {
            return Err(Error::Validation(report));
        }
        let index: HashMap<&str, VertexId> =
            doc.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), VertexId(i))).collect();
        let mut source = Vec::with_capacity(doc.edges.len());
        let mut range = Vec::with_capacity(doc.edges.len());
        let mut emitted = vec![Vec::new(); doc.vertices.len()];
        for (i, e) in doc.edges.iter().enumerate() {
            let s = index[e.source.as_str()];
            source.push(s);
            range.push(e.range.iter().map(|w| index[w.as_str()]).collect());
            emitted[s.0].push(EdgeId(i));
        }
        Ok(Ultragraph {
            name: doc.name.clone(),
            vertex_names: doc.vertices.clone(),
            edge_names: doc.edges.iter().map(|e| e.name.clone()).collect(),
            source,
            range,
            emitted,
        })
    }

    /// Starts a programmatic description; see [`UltragraphBuilder`].
    pub fn builder(name: &str) -> UltragraphBuilder {
        UltragraphBuilder { doc: UltragraphDoc { name: name.to_string(), ..Default::default() } }
    }

    pub fn to_doc(&self) -> UltragraphDoc {
        UltragraphDoc {
            name: self.name.clone(),
            vertices: self.vertex_names.clone(),
            edges: self
                .edges()
                .map(|e| EdgeDecl {
                    name: self.edge_name(e).to_string(),
                    source: self.vertex_name(self.source(e)).to_string(),
                    range: self.range(e).iter().map(|w| self.vertex_name(w).to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edge_count()).map(EdgeId)
    }

    /// G⁰ as a vertex set.
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.source[e.0]
    }

    pub fn range(&self, e: EdgeId) -> VertexSet {
        self.range[e.0]
    }

    /// `s⁻¹(v)` in edge-index order.
    pub fn emitted(&self, v: VertexId) -> &[EdgeId] {
        &self.emitted[v.0]
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.emitted[v.0].is_empty()
    }

    pub fn is_regular(&self, v: VertexId) -> bool {
        !self.is_sink(v)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.iter().position(|n| n == name).map(VertexId)
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edge_names.iter().position(|n| n == name).map(EdgeId)
    }

    /// Resolves a list of vertex names to a set.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .map(|n| {
                self.vertex_by_name(n.as_ref())
                    .ok_or_else(|| Error::UnknownName { name: n.as_ref().to_string() })
            })
            .collect()
    }

    /// Renders a vertex set as `{a, b}` using vertex names.
    pub fn format_set(&self, set: VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|v| self.vertex_name(v)).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn set_names(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.vertex_name(v).to_string()).collect()
    }

    pub fn taxonomy(&self) -> VertexTaxonomy {
        let sinks: VertexSet = self.vertices().filter(|&v| self.is_sink(v)).collect();
        VertexTaxonomy {
            sinks,
            regular: self.all_vertices().difference(sinks),
            infinite_emitters: VertexSet::EMPTY,
        }
    }

    /// The generators of 𝒢⁰: every singleton and every range, deduplicated.
    pub fn lattice_generators(&self) -> BTreeSet<VertexSet> {
        self.vertices()
            .map(VertexSet::singleton)
            .chain(self.range.iter().copied())
            .collect()
    }

    /// Closes the singletons and ranges under pairwise union and
    /// intersection. Fails with [`Error::CapExceeded`] once more than `cap`
    /// distinct sets have been produced.
    pub fn generate_lattice(&self, cap: usize) -> Result<BTreeSet<VertexSet>> {
        let mut closed: Vec<VertexSet> = Vec::new();
        let mut members: HashSet<VertexSet> = HashSet::new();
        let mut pending: Vec<VertexSet> = self.lattice_generators().into_iter().collect();
        while let Some(x) = pending.pop() {
            if !members.insert(x) {
                continue;
            }
            if members.len() > cap {
                return Err(Error::CapExceeded { what: "lattice", cap });
            }
            for &y in &closed {
                for z in [x.union(y), x.intersection(y)] {
                    if !members.contains(&z) {
                        pending.push(z);
                    }
                }
            }
            closed.push(x);
        }
        Ok(closed.into_iter().collect())
    }

    /// `L_K(𝒢)` is unital iff G⁰ belongs to 𝒢⁰. The top of the generated
    /// lattice is the union of all generators, which for a finite
    /// ultragraph always includes every singleton.
    pub fn is_unital(&self) -> bool {
        let top = self
            .lattice_generators()
            .into_iter()
            .fold(VertexSet::EMPTY, VertexSet::union);
        top == self.all_vertices()
    }
}

/// Convenience builder used by fixtures and tests.
#[derive(Clone, Debug)]
pub struct UltragraphBuilder {
    doc: UltragraphDoc,
}

impl UltragraphBuilder {
    pub fn vertices<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.doc.vertices.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn edge<I, S>(mut self, name: &str, source: &str, range: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.doc.edges.push(EdgeDecl {
            name: name.to_string(),
            source: source.to_string(),
            range: range.into_iter().map(Into::into).collect(),
        });
        self
    }

    pub fn doc(self) -> UltragraphDoc {
        self.doc
    }

    pub fn build(self) -> Result<Ultragraph> {
        Ultragraph::from_doc(&self.doc)
    }
}
