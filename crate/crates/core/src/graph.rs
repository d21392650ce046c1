//! Labeled rooted trees in expanded and condensed form.
//!
//! An [`ExpandedGraph`] has one vertex per graph vertex. A [`CondensedGraph`]
//! collapses sibling subtrees that are isomorphic into a single node whose
//! `mult` says how many copies hang off each represented parent; a node then
//! stands for the product of the multipliers on its root path.
//!
//! Labels strictly increase along every edge, so depth is bounded by the
//! largest label and a path of length `l` from label `v` can only reach
//! labels `>= v + l`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bigjson;
use crate::error::{Error, Result};

pub type Label = u32;
pub type VertexId = usize;
pub type NodeId = usize;

/// Default cap on the number of vertices [`CondensedGraph::expand`] will materialize.
pub const DEFAULT_EXPAND_LIMIT: u64 = 1_000_000;

/// Represented vertex count per label.
pub type LabelCensus = BTreeMap<Label, BigUint>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedGraph {
    labels: Vec<Label>,
    parent: Vec<Option<VertexId>>,
    children: Vec<Vec<VertexId>>,
    root: VertexId,
}

impl ExpandedGraph {
    pub fn single(label: Label) -> Self {
        ExpandedGraph {
            labels: vec![label],
            parent: vec![None],
            children: vec![Vec::new()],
            root: 0,
        }
    }

    /// Builds a tree from vertex labels and parent→child edges.
    pub fn from_edges(
        labels: Vec<Label>,
        edges: &[(VertexId, VertexId)],
        root: VertexId,
    ) -> Result<Self> {
        let n = labels.len();
        if root >= n {
            return Err(Error::MalformedGraph(format!("root {root} out of range")));
        }
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        for &(p, c) in edges {
            if p >= n || c >= n {
                return Err(Error::MalformedGraph(format!(
                    "edge ({p},{c}) out of range"
                )));
            }
            if c == root || parent[c].is_some() {
                return Err(Error::MalformedGraph(format!("vertex {c} has two parents")));
            }
            if labels[c] <= labels[p] {
                return Err(Error::MalformedGraph(format!(
                    "edge ({p},{c}) does not increase the label"
                )));
            }
            parent[c] = Some(p);
            children[p].push(c);
        }
        let graph = ExpandedGraph {
            labels,
            parent,
            children,
            root,
        };
        // Strictly increasing labels rule out cycles; reachability rules out forests.
        if graph.pre_order().len() != n {
            return Err(Error::MalformedGraph(
                "not every vertex hangs off the root".into(),
            ));
        }
        Ok(graph)
    }

    /// Appends a new vertex below `parent`.
    pub fn add_child(&mut self, parent: VertexId, label: Label) -> Result<VertexId> {
        if parent >= self.len() {
            return Err(Error::UnknownVertex(parent));
        }
        if label <= self.labels[parent] {
            return Err(Error::MalformedGraph(format!(
                "child label {label} must exceed parent label {}",
                self.labels[parent]
            )));
        }
        let id = self.labels.len();
        self.labels.push(label);
        self.parent.push(Some(parent));
        self.children.push(Vec::new());
        self.children[parent].push(id);
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v]
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.pre_order()
            .into_iter()
            .flat_map(|p| self.children[p].iter().map(move |&c| (p, c)))
            .collect()
    }

    /// Vertices reachable from the root, parents before children.
    pub fn pre_order(&self) -> Vec<VertexId> {
        let mut order = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().rev());
        }
        order
    }

    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for v in self.pre_order() {
            for &c in &self.children[v] {
                depth[c] = depth[v] + 1;
            }
        }
        depth
    }

    pub fn census(&self) -> LabelCensus {
        let mut census = LabelCensus::new();
        for v in self.pre_order() {
            *census.entry(self.labels[v]).or_default() += 1u32;
        }
        census
    }

    pub fn leaves_all_labeled(&self, n: Label) -> bool {
        self.pre_order()
            .into_iter()
            .all(|v| !self.children[v].is_empty() || self.labels[v] == n)
    }

    /// The subtree made of `v` and its descendants, labels unchanged.
    pub fn subtree_at(&self, v: VertexId) -> Result<ExpandedGraph> {
        if v >= self.len() {
            return Err(Error::UnknownVertex(v));
        }
        let mut out = ExpandedGraph::single(self.labels[v]);
        let mut stack = vec![(v, 0)];
        while let Some((old, new)) = stack.pop() {
            for &c in &self.children[old] {
                let id = out.add_child(new, self.labels[c])?;
                stack.push((c, id));
            }
        }
        Ok(out)
    }

    /// Shift-normalized canonical code of every subtree.
    ///
    /// Each child is written as its label offset from the parent followed by
    /// its own code; children are sorted by `(offset, code)`. Two subtrees
    /// are isomorphic up to a constant label shift iff their codes match.
    pub fn shape_codes(&self) -> Vec<String> {
        let mut codes = vec![String::new(); self.len()];
        for v in self.pre_order().into_iter().rev() {
            let base = self.labels[v];
            let mut parts: Vec<(Label, &str)> = self.children[v]
                .iter()
                .map(|&c| (self.labels[c] - base, codes[c].as_str()))
                .collect();
            parts.sort_unstable();
            let mut code = String::from("(");
            for (offset, child) in parts {
                write!(code, "{offset}").unwrap();
                code.push_str(child);
            }
            code.push(')');
            codes[v] = code;
        }
        codes
    }

    pub fn shape_code(&self) -> String {
        self.shape_codes().swap_remove(self.root)
    }

    /// Whether `self` and `other` are isomorphic as rooted trees with
    /// `label(self vertex) = label(other vertex) + shift`.
    pub fn iso_shifted(&self, other: &ExpandedGraph, shift: i64) -> bool {
        i64::from(self.labels[self.root]) == i64::from(other.labels[other.root]) + shift
            && self.len() == other.len()
            && self.shape_code() == other.shape_code()
    }

    /// Collapses isomorphic sibling subtrees.
    pub fn condense(&self) -> CondensedGraph {
        let codes = self.shape_codes();
        let mut out = CondensedGraph::single(self.labels[self.root]);
        let mut stack = vec![(self.root, out.root())];
        while let Some((v, node)) = stack.pop() {
            let mut classes: BTreeMap<(Label, &str), (VertexId, u64)> = BTreeMap::new();
            for &c in &self.children[v] {
                classes
                    .entry((self.labels[c], codes[c].as_str()))
                    .or_insert((c, 0))
                    .1 += 1;
            }
            for ((label, _), (representative, count)) in classes {
                let child = out
                    .add_child(node, label, BigUint::from(count))
                    .expect("expanded labels increase along edges");
                stack.push((representative, child));
            }
        }
        out.canonicalize()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensedNode {
    pub label: Label,
    /// Copies of this node per represented parent vertex; 1 for the root.
    pub mult: BigUint,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensedGraph {
    nodes: Vec<CondensedNode>,
    root: NodeId,
}

impl CondensedGraph {
    pub fn single(label: Label) -> Self {
        CondensedGraph {
            nodes: vec![CondensedNode {
                label,
                mult: BigUint::one(),
                parent: None,
                children: Vec::new(),
            }],
            root: 0,
        }
    }

    /// Builds a condensed tree from `(label, mult)` pairs and parent→child edges.
    pub fn from_parts(
        nodes: Vec<(Label, BigUint)>,
        edges: &[(NodeId, NodeId)],
        root: NodeId,
    ) -> Result<Self> {
        let n = nodes.len();
        if root >= n {
            return Err(Error::MalformedGraph(format!("root {root} out of range")));
        }
        let mut out: Vec<CondensedNode> = nodes
            .into_iter()
            .map(|(label, mult)| CondensedNode {
                label,
                mult,
                parent: None,
                children: Vec::new(),
            })
            .collect();
        if !out[root].mult.is_one() {
            return Err(Error::MalformedGraph("root multiplier must be 1".into()));
        }
        for &(p, c) in edges {
            if p >= n || c >= n {
                return Err(Error::MalformedGraph(format!(
                    "edge ({p},{c}) out of range"
                )));
            }
            if c == root || out[c].parent.is_some() {
                return Err(Error::MalformedGraph(format!("node {c} has two parents")));
            }
            if out[c].label <= out[p].label {
                return Err(Error::MalformedGraph(format!(
                    "edge ({p},{c}) does not increase the label"
                )));
            }
            if out[c].mult.is_zero() {
                return Err(Error::MalformedGraph(format!("node {c} has multiplier 0")));
            }
            out[c].parent = Some(p);
            out[p].children.push(c);
        }
        let graph = CondensedGraph { nodes: out, root };
        if graph.pre_order().len() != n {
            return Err(Error::MalformedGraph(
                "not every node hangs off the root".into(),
            ));
        }
        Ok(graph)
    }

    /// Appends a node below `parent` standing for `mult` copies per parent vertex.
    pub fn add_child(&mut self, parent: NodeId, label: Label, mult: BigUint) -> Result<NodeId> {
        if parent >= self.nodes.len() {
            return Err(Error::UnknownVertex(parent));
        }
        if label <= self.nodes[parent].label {
            return Err(Error::MalformedGraph(format!(
                "child label {label} must exceed parent label {}",
                self.nodes[parent].label
            )));
        }
        if mult.is_zero() {
            return Err(Error::MalformedGraph(
                "multiplier must be at least 1".into(),
            ));
        }
        let id = self.nodes.len();
        self.nodes.push(CondensedNode {
            label,
            mult,
            parent: Some(parent),
            children: Vec::new(),
        });
        self.nodes[parent].children.push(id);
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &CondensedNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[CondensedNode] {
        &self.nodes
    }

    pub fn max_label(&self) -> Label {
        self.nodes.iter().map(|n| n.label).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        self.pre_order()
            .into_iter()
            .flat_map(|p| self.nodes[p].children.iter().map(move |&c| (p, c)))
            .collect()
    }

    pub fn pre_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.nodes[v].children.iter().rev());
        }
        order
    }

    /// Number of expanded vertices each node stands for.
    pub fn represented_counts(&self) -> Vec<BigUint> {
        let mut counts = vec![BigUint::zero(); self.len()];
        for v in self.pre_order() {
            counts[v] = match self.nodes[v].parent {
                Some(p) => &counts[p] * &self.nodes[v].mult,
                None => self.nodes[v].mult.clone(),
            };
        }
        counts
    }

    pub fn total_represented(&self) -> BigUint {
        self.represented_counts().into_iter().sum()
    }

    pub fn census(&self) -> LabelCensus {
        let mut census = LabelCensus::new();
        for (node, count) in self.nodes.iter().zip(self.represented_counts()) {
            *census.entry(node.label).or_default() += count;
        }
        census
    }

    /// Represented vertices carrying `label`.
    pub fn label_count(&self, label: Label) -> BigUint {
        self.nodes
            .iter()
            .zip(self.represented_counts())
            .filter(|(node, _)| node.label == label)
            .map(|(_, count)| count)
            .sum()
    }

    pub fn leaves_all_labeled(&self, n: Label) -> bool {
        self.nodes
            .iter()
            .all(|node| !node.children.is_empty() || node.label == n)
    }

    /// Per-vertex path counts to `target`: entry `[u][l]` is the number of
    /// directed paths of length `l` from one vertex represented by `u` to
    /// vertices labeled `target`.
    pub fn paths_to_label(&self, target: Label) -> Vec<Vec<BigUint>> {
        let mut table: Vec<Vec<BigUint>> = vec![Vec::new(); self.len()];
        for u in self.pre_order().into_iter().rev() {
            let label = self.nodes[u].label;
            if label > target {
                continue;
            }
            let mut row = vec![BigUint::zero(); (target - label) as usize + 1];
            if label == target {
                row[0] = BigUint::one();
            }
            for &c in &self.nodes[u].children {
                let mult = &self.nodes[c].mult;
                for (l, count) in table[c].iter().enumerate() {
                    if !count.is_zero() {
                        row[l + 1] += mult * count;
                    }
                }
            }
            table[u] = row;
        }
        table
    }

    /// Aggregated path counts `K[l][v]`: paths of length `l` from any vertex
    /// labeled `v` to a vertex labeled `target`, for `0 <= l, v <= target`.
    pub fn path_table(&self, target: Label) -> Vec<Vec<BigUint>> {
        let size = target as usize + 1;
        let mut table = vec![vec![BigUint::zero(); size]; size];
        let per_vertex = self.paths_to_label(target);
        let counts = self.represented_counts();
        for (u, row) in per_vertex.iter().enumerate() {
            let v = self.nodes[u].label as usize;
            for (l, paths) in row.iter().enumerate() {
                if !paths.is_zero() {
                    table[l][v] += paths * &counts[u];
                }
            }
        }
        table
    }

    /// Directed paths of exactly `length` edges from any vertex labeled
    /// `from_label` to any vertex labeled `to_label`, counted in the expanded graph.
    pub fn count_paths(&self, from_label: Label, to_label: Label, length: u32) -> BigUint {
        if from_label > to_label || length > to_label - from_label {
            return BigUint::zero();
        }
        self.path_table(to_label)[length as usize][from_label as usize].clone()
    }

    /// Materializes the expanded tree, refusing past `limit` vertices.
    pub fn expand_with_limit(&self, limit: u64) -> Result<ExpandedGraph> {
        let required = self.total_represented();
        if required > BigUint::from(limit) {
            return Err(Error::ExpansionLimit { required, limit });
        }
        let mut out = ExpandedGraph::single(self.nodes[self.root].label);
        let mut stack = vec![(self.root, out.root())];
        while let Some((node, vertex)) = stack.pop() {
            for &c in &self.nodes[node].children {
                let copies = self.nodes[c]
                    .mult
                    .to_u64()
                    .expect("bounded by the expansion limit");
                for _ in 0..copies {
                    let child = out.add_child(vertex, self.nodes[c].label)?;
                    stack.push((c, child));
                }
            }
        }
        Ok(out)
    }

    pub fn expand(&self) -> Result<ExpandedGraph> {
        self.expand_with_limit(DEFAULT_EXPAND_LIMIT)
    }

    /// Per-node canonical codes; the code of a node covers its descendants
    /// and their multipliers but not its own multiplier.
    fn node_codes(&self) -> Vec<String> {
        let mut codes = vec![String::new(); self.len()];
        for v in self.pre_order().into_iter().rev() {
            let base = self.nodes[v].label;
            let mut parts: Vec<(Label, &str, &BigUint)> = self.nodes[v]
                .children
                .iter()
                .map(|&c| {
                    let node = &self.nodes[c];
                    (node.label - base, codes[c].as_str(), &node.mult)
                })
                .collect();
            parts.sort_unstable();
            let mut code = String::from("(");
            for (offset, child, mult) in parts {
                write!(code, "{offset}x{mult}{child}").unwrap();
            }
            code.push(')');
            codes[v] = code;
        }
        codes
    }

    /// Canonical string for the whole graph including the root label; equal
    /// strings mean equal expanded trees.
    pub fn canonical_code(&self) -> String {
        let canonical = self.canonicalize();
        let code = canonical.node_codes().swap_remove(canonical.root);
        format!("{}{}", canonical.nodes[canonical.root].label, code)
    }

    /// Merges isomorphic sibling classes and renumbers nodes in canonical
    /// pre-order, children sorted by `(label, code)`.
    pub fn canonicalize(&self) -> CondensedGraph {
        // Bottom-up: merge sibling classes with equal (label, code), then
        // recompute codes so ancestors see merged children.
        let mut merged: Vec<Vec<(NodeId, BigUint)>> = vec![Vec::new(); self.len()];
        let mut codes = vec![String::new(); self.len()];
        for v in self.pre_order().into_iter().rev() {
            let base = self.nodes[v].label;
            let mut classes: BTreeMap<(Label, String), (NodeId, BigUint)> = BTreeMap::new();
            for &c in &self.nodes[v].children {
                let key = (self.nodes[c].label, codes[c].clone());
                classes.entry(key).or_insert_with(|| (c, BigUint::zero())).1 += &self.nodes[c].mult;
            }
            let mut code = String::from("(");
            let mut kept = Vec::with_capacity(classes.len());
            for ((label, child_code), (representative, mult)) in classes {
                write!(code, "{}x{}{}", label - base, mult, child_code).unwrap();
                kept.push((representative, mult));
            }
            code.push(')');
            codes[v] = code;
            merged[v] = kept;
        }

        let mut out = CondensedGraph::single(self.nodes[self.root].label);
        let mut stack = vec![(self.root, out.root)];
        while let Some((old, new)) = stack.pop() {
            for (child, mult) in &merged[old] {
                let id = out
                    .add_child(new, self.nodes[*child].label, mult.clone())
                    .expect("labels increase along edges");
                stack.push((*child, id));
            }
        }
        out.renumber_pre_order()
    }

    fn renumber_pre_order(&self) -> CondensedGraph {
        let order = self.pre_order();
        let mut new_id = vec![0; self.len()];
        for (i, &old) in order.iter().enumerate() {
            new_id[old] = i;
        }
        let nodes = order
            .iter()
            .map(|&old| {
                let node = &self.nodes[old];
                CondensedNode {
                    label: node.label,
                    mult: node.mult.clone(),
                    parent: node.parent.map(|p| new_id[p]),
                    children: node.children.iter().map(|&c| new_id[c]).collect(),
                }
            })
            .collect();
        CondensedGraph { nodes, root: 0 }
    }

    /// Whether the expanded forms are isomorphic with labels offset by `shift`.
    pub fn iso_shifted(&self, other: &CondensedGraph, shift: i64) -> bool {
        let (a, b) = (self.canonicalize(), other.canonicalize());
        i64::from(a.nodes[a.root].label) == i64::from(b.nodes[b.root].label) + shift
            && a.node_codes()[a.root] == b.node_codes()[b.root]
    }
}

/// On-disk graph document shared by both forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub form: GraphForm,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<[usize; 2]>,
    pub root: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphForm {
    Expanded,
    Condensed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub id: usize,
    pub label: Label,
    #[serde(with = "bigjson::uint")]
    pub mult: BigUint,
}

/// A graph read back from a [`GraphDocument`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Expanded(ExpandedGraph),
    Condensed(CondensedGraph),
}

impl GraphDocument {
    fn dense_ids(&self) -> Result<BTreeMap<usize, usize>> {
        let mut ids = BTreeMap::new();
        for (i, node) in self.nodes.iter().enumerate() {
            if ids.insert(node.id, i).is_some() {
                return Err(Error::MalformedGraph(format!(
                    "duplicate node id {}",
                    node.id
                )));
            }
        }
        Ok(ids)
    }

    pub fn into_graph(self) -> Result<AnyGraph> {
        let ids = self.dense_ids()?;
        let lookup = |id: usize| {
            ids.get(&id)
                .copied()
                .ok_or_else(|| Error::MalformedGraph(format!("unknown node id {id}")))
        };
        let edges = self
            .edges
            .iter()
            .map(|[p, c]| Ok((lookup(*p)?, lookup(*c)?)))
            .collect::<Result<Vec<_>>>()?;
        let root = lookup(self.root)?;
        match self.form {
            GraphForm::Expanded => {
                if let Some(node) = self.nodes.iter().find(|n| !n.mult.is_one()) {
                    return Err(Error::MalformedGraph(format!(
                        "expanded node {} has multiplier {}",
                        node.id, node.mult
                    )));
                }
                let labels = self.nodes.iter().map(|n| n.label).collect();
                ExpandedGraph::from_edges(labels, &edges, root).map(AnyGraph::Expanded)
            }
            GraphForm::Condensed => {
                let nodes = self.nodes.into_iter().map(|n| (n.label, n.mult)).collect();
                CondensedGraph::from_parts(nodes, &edges, root).map(AnyGraph::Condensed)
            }
        }
    }

    pub fn from_json(text: &str) -> Result<AnyGraph> {
        serde_json::from_str::<GraphDocument>(text)?.into_graph()
    }
}

impl From<&ExpandedGraph> for GraphDocument {
    fn from(g: &ExpandedGraph) -> Self {
        GraphDocument {
            form: GraphForm::Expanded,
            nodes: (0..g.len())
                .map(|id| NodeRecord {
                    id,
                    label: g.labels[id],
                    mult: BigUint::one(),
                })
                .collect(),
            edges: g.edges().into_iter().map(|(p, c)| [p, c]).collect(),
            root: g.root,
        }
    }
}

impl From<&CondensedGraph> for GraphDocument {
    fn from(g: &CondensedGraph) -> Self {
        GraphDocument {
            form: GraphForm::Condensed,
            nodes: g
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| NodeRecord {
                    id,
                    label: n.label,
                    mult: n.mult.clone(),
                })
                .collect(),
            edges: g.edges().into_iter().map(|(p, c)| [p, c]).collect(),
            root: g.root,
        }
    }
}

impl ExpandedGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphDocument::from(self)).expect("serializable")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n    rankdir=BT;\n");
        for v in self.pre_order() {
            writeln!(out, "    n{v} [label=\"{}\"];", self.labels[v]).unwrap();
        }
        for (p, c) in self.edges() {
            writeln!(out, "    n{p} -> n{c};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl CondensedGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphDocument::from(self)).expect("serializable")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n    rankdir=BT;\n");
        for v in self.pre_order() {
            writeln!(out, "    n{v} [label=\"{}\"];", self.nodes[v].label).unwrap();
        }
        for (p, c) in self.edges() {
            writeln!(out, "    n{p} -> n{c} [label=\"×{}\"];", self.nodes[c].mult).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn census(pairs: &[(Label, u64)]) -> LabelCensus {
        pairs.iter().map(|&(l, c)| (l, big(c))).collect()
    }

    /// root → 1 (×2) → 2 (×2), root → 2 (×2).
    fn doubled_condensed() -> CondensedGraph {
        let mut g = CondensedGraph::single(0);
        let one = g.add_child(0, 1, big(2)).unwrap();
        g.add_child(one, 2, big(2)).unwrap();
        g.add_child(0, 2, big(2)).unwrap();
        g
    }

    fn doubled_expanded() -> ExpandedGraph {
        let mut g = ExpandedGraph::single(0);
        let a = g.add_child(0, 1).unwrap();
        let b = g.add_child(0, 1).unwrap();
        for p in [a, a, b, b, 0, 0] {
            g.add_child(p, 2).unwrap();
        }
        g
    }

    /// Classic A_2: root → 1 → 2 and root → 2.
    fn a2() -> ExpandedGraph {
        let mut g = ExpandedGraph::single(0);
        let one = g.add_child(0, 1).unwrap();
        g.add_child(one, 2).unwrap();
        g.add_child(0, 2).unwrap();
        g
    }

    #[test]
    fn expand_doubled() {
        let g = doubled_condensed().expand().unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.census(), census(&[(0, 1), (1, 2), (2, 6)]));
        let under_ones: usize = g
            .children(g.root())
            .iter()
            .filter(|&&c| g.label(c) == 1)
            .map(|&c| g.children(c).len())
            .sum();
        assert_eq!(under_ones, 4);
        let under_root = g
            .children(g.root())
            .iter()
            .filter(|&&c| g.label(c) == 2)
            .count();
        assert_eq!(under_root, 2);
        assert!(g.iso_shifted(&doubled_expanded(), 0));
    }

    #[test]
    fn condense_doubled() {
        let condensed = doubled_expanded().condense();
        assert_eq!(condensed, doubled_condensed().canonicalize());
        assert_eq!(condensed.len(), 4);
    }

    #[test]
    fn condense_a2_keeps_label2_classes_apart() {
        let c = a2().condense();
        assert_eq!(c.len(), 4);
        assert!(c.nodes().iter().all(|n| n.mult.is_one()));
        let root_labels: Vec<Label> = c
            .node(c.root())
            .children
            .iter()
            .map(|&x| c.node(x).label)
            .collect();
        assert_eq!(root_labels, vec![1, 2]);
    }

    #[test]
    fn single_vertex_round_trips() {
        let e = ExpandedGraph::single(0);
        let c = e.condense();
        assert_eq!(c, CondensedGraph::single(0));
        assert_eq!(c.expand().unwrap(), e);
        assert_eq!(c.census(), census(&[(0, 1)]));
    }

    #[test]
    fn expansion_limit() {
        let g = doubled_condensed();
        assert_eq!(
            g.expand_with_limit(6),
            Err(Error::ExpansionLimit {
                required: big(9),
                limit: 6
            })
        );
        assert!(g.expand_with_limit(8).is_err());
        assert!(g.expand_with_limit(9).is_ok());
    }

    #[test]
    fn trivial_paths_count_label_population() {
        let g = doubled_condensed();
        for label in 0..=2 {
            assert_eq!(g.count_paths(label, label, 0), g.label_count(label));
        }
        // 2 ones each with 2 children labeled 2, plus 2 children of the root.
        assert_eq!(g.count_paths(1, 2, 1), big(4));
        assert_eq!(g.count_paths(0, 2, 1), big(2));
        assert_eq!(g.count_paths(0, 2, 2), big(4));
        assert_eq!(g.count_paths(2, 1, 0), BigUint::zero());
        assert_eq!(g.count_paths(0, 2, 3), BigUint::zero());
    }

    #[test]
    fn subtree_extraction() {
        let g = a2();
        let whole = g.subtree_at(g.root()).unwrap();
        assert_eq!(whole.len(), g.len());
        assert!(whole.iso_shifted(&g, 0));
        let leaf = g.subtree_at(3).unwrap();
        assert_eq!(leaf, ExpandedGraph::single(2));
        assert_eq!(g.subtree_at(9), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn shifted_isomorphism() {
        let g0 = ExpandedGraph::single(0);
        assert!(g0.iso_shifted(&g0, 0));
        assert!(!g0.iso_shifted(&g0, 1));

        let mut a1 = ExpandedGraph::single(0);
        a1.add_child(0, 1).unwrap();
        let sub = a2().subtree_at(1).unwrap();
        assert!(sub.iso_shifted(&a1, 1));
        assert!(a1.iso_shifted(&sub, -1));

        // Both label-2 leaves under the 1.
        let mut moved = ExpandedGraph::single(0);
        let one = moved.add_child(0, 1).unwrap();
        moved.add_child(one, 2).unwrap();
        moved.add_child(one, 2).unwrap();
        assert!(!a2().iso_shifted(&moved, 0));
    }

    #[test]
    fn leaves_check() {
        let g = a2();
        assert!(g.leaves_all_labeled(2));
        assert!(!g.leaves_all_labeled(1));
        assert!(ExpandedGraph::single(0).leaves_all_labeled(0));
        assert!(g.condense().leaves_all_labeled(2));
        assert!(!g.condense().leaves_all_labeled(3));
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(ExpandedGraph::from_edges(vec![0, 1], &[(1, 0)], 0).is_err());
        assert!(ExpandedGraph::from_edges(vec![0, 0], &[(0, 1)], 0).is_err());
        assert!(ExpandedGraph::from_edges(vec![0, 1, 2], &[(0, 1)], 0).is_err());
        assert!(ExpandedGraph::from_edges(vec![0, 1, 2], &[(0, 2), (1, 2)], 0).is_err());
        assert!(CondensedGraph::from_parts(vec![(0, big(2))], &[], 0).is_err());
        assert!(CondensedGraph::from_parts(vec![(0, big(1)), (1, big(0))], &[(0, 1)], 0).is_err());
        let mut g = CondensedGraph::single(0);
        assert!(g.add_child(0, 0, big(1)).is_err());
        assert!(g.add_child(0, 1, BigUint::zero()).is_err());
    }

    #[test]
    fn canonicalize_merges_split_classes() {
        // Two separate ×1 leaf classes under the root equal one ×2 class.
        let mut split = CondensedGraph::single(0);
        split.add_child(0, 1, big(1)).unwrap();
        split.add_child(0, 1, big(1)).unwrap();
        let mut whole = CondensedGraph::single(0);
        whole.add_child(0, 1, big(2)).unwrap();
        assert_eq!(split.canonicalize(), whole);
        assert_eq!(split.canonical_code(), whole.canonical_code());
        assert!(split.iso_shifted(&whole, 0));
    }

    #[test]
    fn json_round_trip() {
        let c = doubled_condensed();
        let back = GraphDocument::from_json(&c.to_json()).unwrap();
        assert_eq!(back, AnyGraph::Condensed(c.clone()));
        let e = c.expand().unwrap();
        let back = GraphDocument::from_json(&e.to_json()).unwrap();
        assert_eq!(back, AnyGraph::Expanded(e));
    }

    #[test]
    fn json_shape() {
        let text = doubled_condensed().to_json();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["form"], "condensed");
        assert_eq!(value["nodes"][1]["mult"], 2);
        assert_eq!(value["edges"][0], serde_json::json!([0, 1]));
        assert_eq!(value["root"], 0);
        let big_mult = r#"{"form":"condensed","nodes":[{"id":0,"label":0,"mult":1},
            {"id":7,"label":3,"mult":123456789012345678901234567890}],"edges":[[0,7]],"root":0}"#;
        let AnyGraph::Condensed(g) = GraphDocument::from_json(big_mult).unwrap() else {
            panic!("expected condensed");
        };
        assert_eq!(
            g.node(1).mult,
            "123456789012345678901234567890".parse().unwrap()
        );
        assert!(g.to_json().contains("123456789012345678901234567890"));
    }

    #[test]
    fn dot_annotates_multipliers() {
        let dot = doubled_condensed().to_dot();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("×2").count(), 3);
        assert!(dot.contains("n0 [label=\"0\"]"));
    }
}
