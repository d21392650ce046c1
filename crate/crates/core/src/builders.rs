//! Inductive graph families driven by path-length rules.
//!
//! Step `n` looks at every vertex `v` of the previous graph and, for each
//! length `l`, counts the paths of length `l` from `v` to vertices labeled
//! `n - 1`. The vertex gains `sum_l paths(v, l) * r(l)` new leaves labeled
//! `n`. Classic action graphs use `r(l) = 1`, the Fuss-Catalan graphs
//! `r(l) = binom(l + k - 1, l)` and the super Catalan graphs `r(l) = 2 / 2^l`.
//!
//! Growth runs on condensed classes: all vertices a node stands for have
//! isomorphic subtrees, hence the same path counts, so each node gains a
//! single child node whose multiplier is the per-vertex child count.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigjson;
use crate::error::{Error, Result};
use crate::graph::{CondensedGraph, GraphDocument, Label};
use crate::sequences::{binomial, sequence_values, SequenceSpec};

/// Per-length growth coefficients `r(0), r(1), ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathRules(#[serde(with = "bigjson::ratio_vec")] Vec<BigRational>);

impl PathRules {
    pub fn new(rules: Vec<BigRational>) -> Result<Self> {
        if let Some((l, r)) = rules.iter().enumerate().find(|(_, r)| r.is_negative()) {
            return Err(Error::InvalidParameter(format!(
                "rule r({l}) = {r} is negative"
            )));
        }
        Ok(PathRules(rules))
    }

    /// `r(l) = 1` for `l < len`.
    pub fn classic(len: usize) -> Self {
        PathRules(vec![BigRational::one(); len])
    }

    /// `r(l) = binom(l + k - 1, l)` for `l < len`.
    pub fn fuss(k: u64, len: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("fuss rules need k >= 1".into()));
        }
        Ok(PathRules(
            (0..len as u64)
                .map(|l| BigRational::from_integer(BigInt::from(binomial(l + k - 1, l))))
                .collect(),
        ))
    }

    /// `r(l) = 2 / 2^l` for `l < len`.
    pub fn super_catalan(len: usize) -> Self {
        PathRules(
            (0..len)
                .map(|l| BigRational::new(BigInt::from(2u32), BigInt::from(BigUint::one() << l)))
                .collect(),
        )
    }

    pub fn get(&self, length: usize) -> Option<&BigRational> {
        self.0.get(length)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.0
    }

    pub(crate) fn push(&mut self, rule: BigRational) {
        debug_assert!(!rule.is_negative());
        self.0.push(rule);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    Classic,
    Fuss { k: u64 },
    Super,
    ByRules { rules: PathRules },
}

/// `graphs[n]` is the graph after step `n`; each extends the one before.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFamily {
    pub kind: FamilyKind,
    pub graphs: Vec<CondensedGraph>,
}

impl GraphFamily {
    pub fn n_max(&self) -> u32 {
        self.graphs.len() as u32 - 1
    }

    pub fn graph(&self, n: u32) -> Result<&CondensedGraph> {
        self.graphs.get(n as usize).ok_or(Error::OutOfRange {
            requested: n,
            built: self.n_max(),
        })
    }

    /// Vertices added at each step; entry 0 is the size of `G_0`.
    pub fn new_counts(&self) -> Vec<BigUint> {
        self.graphs
            .iter()
            .enumerate()
            .map(|(n, g)| g.label_count(n as Label))
            .collect()
    }

    /// JSON envelope `{kind, params, graphs}` around the graph documents.
    pub fn to_json(&self) -> String {
        let (kind, params) = match &self.kind {
            FamilyKind::Classic => ("classic", serde_json::json!({})),
            FamilyKind::Fuss { k } => ("fuss", serde_json::json!({ "k": k })),
            FamilyKind::Super => ("super", serde_json::json!({})),
            FamilyKind::ByRules { rules } => (
                "by_rules",
                serde_json::json!({ "rules": serde_json::to_value(rules).expect("serializable") }),
            ),
        };
        let mut params = params;
        params["n_max"] = self.n_max().into();
        let graphs: Vec<GraphDocument> = self.graphs.iter().map(GraphDocument::from).collect();
        let envelope = serde_json::json!({
            "kind": kind,
            "params": params,
            "graphs": graphs,
        });
        serde_json::to_string_pretty(&envelope).expect("serializable")
    }
}

/// Children per represented vertex for every node of `graph` at `step`.
///
/// Returns one entry per node (in id order); nodes gaining nothing get zero.
fn growth_per_node(graph: &CondensedGraph, step: u32, rules: &PathRules) -> Result<Vec<BigUint>> {
    let target = step - 1;
    let per_vertex = graph.paths_to_label(target);
    let counts = graph.represented_counts();
    let mut missing: Option<u32> = None;
    let mut known_demand = BigRational::zero();
    let mut out = Vec::with_capacity(graph.len());
    for (node, paths) in per_vertex.iter().enumerate() {
        let mut children = BigRational::zero();
        for (length, p) in paths.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            match rules.get(length) {
                Some(r) => children += BigRational::from_integer(BigInt::from(p.clone())) * r,
                None => {
                    missing.get_or_insert(length as u32);
                }
            }
        }
        known_demand += &children * BigRational::from_integer(BigInt::from(counts[node].clone()));
        if missing.is_none() {
            if !children.is_integer() {
                return Err(Error::NonIntegralGrowth {
                    step,
                    node,
                    label: graph.node(node).label,
                    value: children,
                });
            }
            out.push(
                children
                    .to_integer()
                    .to_biguint()
                    .expect("rules are non-negative"),
            );
        }
    }
    if let Some(length) = missing {
        return Err(Error::RuleMissing {
            step,
            length,
            known_demand,
        });
    }
    Ok(out)
}

/// Builds `G_step` from `G_{step-1}`; returns it with the number of added vertices.
pub(crate) fn grow(
    graph: &CondensedGraph,
    step: u32,
    rules: &PathRules,
) -> Result<(CondensedGraph, BigUint)> {
    debug_assert!(step >= 1);
    let growth = growth_per_node(graph, step, rules)?;
    let counts = graph.represented_counts();
    let mut next = graph.clone();
    let mut added = BigUint::zero();
    for (node, per_vertex) in growth.into_iter().enumerate() {
        if per_vertex.is_zero() {
            continue;
        }
        added += &counts[node] * &per_vertex;
        next.add_child(node, step, per_vertex)?;
    }
    Ok((next, added))
}

/// Most condensed nodes a built graph may hold. The named families double
/// their node count every step, so this stops them after step 16.
pub const NODE_LIMIT: usize = 1 << 16;

fn build_family(kind: FamilyKind, rules: &PathRules, n_max: u32) -> Result<GraphFamily> {
    let mut graphs = vec![CondensedGraph::single(0)];
    for step in 1..=n_max {
        let (next, _) = grow(graphs.last().expect("non-empty"), step, rules)?;
        if next.len() > NODE_LIMIT {
            return Err(Error::NodeLimit {
                step,
                nodes: next.len(),
                limit: NODE_LIMIT,
            });
        }
        graphs.push(next);
    }
    Ok(GraphFamily { kind, graphs })
}

/// Action graphs `A_0..=A_{n_max}`: one new child per path to a newest vertex.
pub fn build_classic(n_max: u32) -> Result<GraphFamily> {
    build_family(
        FamilyKind::Classic,
        &PathRules::classic(n_max as usize),
        n_max,
    )
}

/// Generalized action graphs `T_{0,k}..=T_{n_max,k}` for the Fuss-Catalan numbers.
pub fn build_fuss(n_max: u32, k: u64) -> Result<GraphFamily> {
    let rules = PathRules::fuss(k, n_max as usize)?;
    build_family(FamilyKind::Fuss { k }, &rules, n_max)
}

/// The conjectured super Catalan graphs `G_0..=G_{n_max}`.
///
/// Fails with [`Error::NonIntegralGrowth`] if some class would need a
/// fractional number of children.
pub fn build_super(n_max: u32) -> Result<GraphFamily> {
    build_family(
        FamilyKind::Super,
        &PathRules::super_catalan(n_max as usize),
        n_max,
    )
}

/// A family built from explicit rules together with the sequence it targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleBuild {
    pub family: GraphFamily,
    /// `s_0..=s_{n_max}`.
    pub expected: Vec<BigUint>,
}

impl RuleBuild {
    pub fn built(&self) -> Vec<BigUint> {
        self.family.new_counts()
    }

    /// Steps whose added-vertex count differs from the sequence, as
    /// `(step, built, expected)`.
    pub fn mismatches(&self) -> Vec<(u32, BigUint, BigUint)> {
        self.built()
            .into_iter()
            .zip(&self.expected)
            .enumerate()
            .filter(|(_, (b, e))| b != *e)
            .map(|(n, (b, e))| (n as u32, b, e.clone()))
            .collect()
    }
}

/// Builds with arbitrary rules and pairs the result with `s` for comparison.
pub fn build_by_rules(rules: &PathRules, s: &SequenceSpec, n_max: u32) -> Result<RuleBuild> {
    let expected = sequence_values(s, n_max as usize + 1)?;
    let family = build_family(
        FamilyKind::ByRules {
            rules: rules.clone(),
        },
        rules,
        n_max,
    )?;
    Ok(RuleBuild { family, expected })
}
