//! Checks of the three generalized action graph axioms and the cheap
//! necessary-condition gate on sequences.
//!
//! * Axiom 1: step `n` adds exactly `s_n` vertices, all labeled `n`.
//! * Axiom 2: every subtree of `G_n` is a label-shifted copy of some `G_k`, `k <= n`.
//! * Axiom 3: every leaf of `G_n` is labeled `n`.
//!
//! The gate applies the two consequences that need only three terms:
//! `s_0 = 1`, and `s_2 >= s_1^2`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bigjson;
use crate::builders::GraphFamily;
use crate::error::{Error, Result};
use crate::graph::{Label, NodeId, VertexId};
use crate::sequences::{sequence_values, SequenceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCount {
    pub step: u32,
    #[serde(with = "bigjson::uint")]
    pub expected: BigUint,
    #[serde(with = "bigjson::uint")]
    pub actual: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axiom1Report {
    pub steps: Vec<StepCount>,
}

impl Axiom1Report {
    pub fn first_failure(&self) -> Option<&StepCount> {
        self.steps.iter().find(|s| s.expected != s.actual)
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }
}

/// Compares the vertices added at each step with `s_n`.
pub fn check_axiom1(fam: &GraphFamily, s: &SequenceSpec) -> Result<Axiom1Report> {
    let expected = sequence_values(s, fam.graphs.len())?;
    let steps = fam
        .new_counts()
        .into_iter()
        .zip(expected)
        .enumerate()
        .map(|(n, (actual, expected))| StepCount {
            step: n as u32,
            expected,
            actual,
        })
        .collect();
    Ok(Axiom1Report { steps })
}

/// A subtree of `G_n` matched against the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubtreeMatch {
    pub vertex: VertexId,
    pub label: Label,
    pub depth: usize,
    pub matched_k: u32,
    pub shift: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Axiom2Report {
    Checked {
        n: u32,
        matches: Vec<SubtreeMatch>,
        /// First vertex whose subtree matches no earlier graph.
        counterexample: Option<(VertexId, Label)>,
        /// Matches with `k != n - label`; flagged, not failures.
        unexpected: Vec<SubtreeMatch>,
    },
    NotChecked {
        n: u32,
        #[serde(with = "bigjson::uint")]
        required: BigUint,
        limit: u64,
    },
}

impl Axiom2Report {
    /// `Some(pass)` when checked, `None` when skipped for size.
    pub fn passed(&self) -> Option<bool> {
        match self {
            Axiom2Report::Checked { counterexample, .. } => Some(counterexample.is_none()),
            Axiom2Report::NotChecked { .. } => None,
        }
    }

    /// Number of matched vertices per `(depth, k)`.
    pub fn match_counts(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        if let Axiom2Report::Checked { matches, .. } = self {
            for m in matches {
                *out.entry((m.depth, m.matched_k)).or_insert(0) += 1;
            }
        }
        out
    }
}

/// Checks Axiom 2 on the expanded form of `G_n`.
///
/// Every graph `G_0..=G_n` is expanded; if any exceeds `limit` the check is
/// reported as not done rather than passed.
pub fn check_axiom2(fam: &GraphFamily, n: u32, limit: u64) -> Result<Axiom2Report> {
    let target = fam.graph(n)?;
    let mut expanded = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        match fam.graphs[k as usize].expand_with_limit(limit) {
            Ok(g) => expanded.push(g),
            Err(Error::ExpansionLimit { required, limit }) => {
                return Ok(Axiom2Report::NotChecked { n, required, limit })
            }
            Err(e) => return Err(e),
        }
    }
    debug_assert_eq!(
        target.total_represented(),
        BigUint::from(expanded[n as usize].len())
    );

    let mut by_code: HashMap<String, u32> = HashMap::new();
    for (k, g) in expanded.iter().enumerate().take(n as usize) {
        by_code.entry(g.shape_code()).or_insert(k as u32);
    }
    let graph = &expanded[n as usize];
    let codes = graph.shape_codes();
    by_code.entry(codes[graph.root()].clone()).or_insert(n);
    let base = graph.label(graph.root());
    let depths = graph.depths();

    let mut matches = Vec::with_capacity(graph.len());
    let mut unexpected = Vec::new();
    let mut counterexample = None;
    for v in graph.pre_order() {
        let label = graph.label(v);
        match by_code.get(&codes[v]) {
            Some(&k) => {
                let m = SubtreeMatch {
                    vertex: v,
                    label,
                    depth: depths[v],
                    matched_k: k,
                    shift: label - base,
                };
                if k + label != n + base {
                    unexpected.push(m.clone());
                }
                matches.push(m);
            }
            None => {
                counterexample.get_or_insert((v, label));
            }
        }
    }
    Ok(Axiom2Report::Checked {
        n,
        matches,
        counterexample,
        unexpected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axiom3Report {
    pub n: u32,
    /// Condensed leaf nodes with a label other than `n`.
    pub offending: Vec<(NodeId, Label)>,
}

impl Axiom3Report {
    pub fn passed(&self) -> bool {
        self.offending.is_empty()
    }
}

pub fn check_axiom3(fam: &GraphFamily, n: u32) -> Result<Axiom3Report> {
    let g = fam.graph(n)?;
    let offending = g
        .nodes()
        .iter()
        .enumerate()
        .filter(|(_, node)| node.children.is_empty() && node.label != n)
        .map(|(id, node)| (id, node.label))
        .collect::<Vec<_>>();
    debug_assert_eq!(g.leaves_all_labeled(n), offending.is_empty());
    Ok(Axiom3Report { n, offending })
}

/// All three axioms over every step of the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom1: Axiom1Report,
    pub axiom2: Vec<Axiom2Report>,
    pub axiom3: Vec<Axiom3Report>,
}

impl AxiomReport {
    /// Whether nothing failed; skipped Axiom 2 checks do not count as failures.
    pub fn passed(&self) -> bool {
        self.axiom1.passed()
            && self.axiom2.iter().all(|r| r.passed() != Some(false))
            && self.axiom3.iter().all(Axiom3Report::passed)
    }

    pub fn fully_checked(&self) -> bool {
        self.axiom2.iter().all(|r| r.passed().is_some())
    }
}

pub fn check_axioms(fam: &GraphFamily, s: &SequenceSpec, limit: u64) -> Result<AxiomReport> {
    let axiom1 = check_axiom1(fam, s)?;
    let axiom2 = (0..=fam.n_max())
        .map(|n| check_axiom2(fam, n, limit))
        .collect::<Result<_>>()?;
    let axiom3 = (0..=fam.n_max())
        .map(|n| check_axiom3(fam, n))
        .collect::<Result<_>>()?;
    Ok(AxiomReport {
        axiom1,
        axiom2,
        axiom3,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    FeasibleSoFar,
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// `s_0` must be 1.
    LemmaS0,
    /// `s_2` must be at least `s_1^2`.
    LemmaSquare,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateReport {
    pub verdict: Verdict,
    pub violated: Option<Lemma>,
    /// The terms the gate looked at, `s_0, s_1, s_2, ...`.
    #[serde(with = "bigjson::uint_vec")]
    pub terms: Vec<BigUint>,
}

impl GateReport {
    pub fn feasible(&self) -> bool {
        self.verdict == Verdict::FeasibleSoFar
    }

    /// One-line human summary of the witness.
    pub fn witness(&self) -> String {
        match self.violated {
            None => format!(
                "s_0 = 1, s_1^2 = {} <= s_2 = {}",
                &self.terms[1] * &self.terms[1],
                self.terms[2]
            ),
            Some(Lemma::LemmaS0) => format!("s_0 = {} != 1", self.terms[0]),
            Some(Lemma::LemmaSquare) => format!(
                "s_1^2 = {} > s_2 = {}",
                &self.terms[1] * &self.terms[1],
                self.terms[2]
            ),
        }
    }
}

/// Necessary-condition gate over the first `terms` values of `s` (at least 3).
///
/// Finite sequences shorter than `terms` are gated on what they have.
pub fn gate(s: &SequenceSpec, terms: usize) -> Result<GateReport> {
    if terms < 3 {
        return Err(Error::InvalidParameter(
            "the gate needs at least 3 terms".into(),
        ));
    }
    let count = s.len_limit().map_or(terms, |limit| limit.min(terms));
    let values = sequence_values(s, count.max(3))?;
    let violated = if !values[0].is_one() {
        Some(Lemma::LemmaS0)
    } else if values[2] < &values[1] * &values[1] {
        Some(Lemma::LemmaSquare)
    } else {
        None
    };
    Ok(GateReport {
        verdict: if violated.is_some() {
            Verdict::Infeasible
        } else {
            Verdict::FeasibleSoFar
        },
        violated,
        terms: values,
    })
}
