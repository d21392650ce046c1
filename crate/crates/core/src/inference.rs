//! Path-length rule inference.
//!
//! Assume step `n` gives every vertex `r(l)` new children per path of length
//! `l` to a vertex labeled `n - 1`. The rules `r(0)..r(n-2)` are already
//! pinned by earlier steps, and the only paths of length `n - 1` are the
//! chains hanging from the root. So step `n` fixes exactly one new unknown:
//!
//! ```text
//! forced  = sum_{l < n-1} K[l] * r(l)
//! r(n-1)  = (s_n - forced) / K[n-1]
//! ```
//!
//! where `K[l]` counts all length-`l` paths ending at label `n - 1`. A step
//! with `forced > s_n` is a contradiction: no choice of the new rule can
//! bring the count back down.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::axioms::{gate, GateReport, Lemma};
use crate::bigjson;
use crate::builders::{grow, PathRules, NODE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{CondensedGraph, Label};
use crate::sequences::{sequence_values, SequenceSpec};

/// Vertices forced at a step by paths of one length from one label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contribution {
    pub length: u32,
    pub from_label: Label,
    #[serde(with = "bigjson::uint")]
    pub paths: BigUint,
    #[serde(with = "bigjson::ratio")]
    pub rule: BigRational,
    #[serde(with = "bigjson::ratio")]
    pub added: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InferenceStep {
    pub step: u32,
    /// Vertices already demanded by known rules.
    #[serde(with = "bigjson::ratio")]
    pub forced: BigRational,
    /// `s_step`.
    #[serde(with = "bigjson::uint")]
    pub available: BigUint,
    pub contributions: Vec<Contribution>,
    /// Paths of length `step - 1` (the ones the new rule applies to).
    #[serde(with = "bigjson::uint")]
    pub open_paths: BigUint,
    /// Rule fixed at this step; `None` when undetermined or failed.
    pub new_rule: Option<NewRule>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewRule {
    pub length: u32,
    #[serde(with = "bigjson::ratio")]
    pub value: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    ConsistentUpTo {
        n: u32,
    },
    /// `s_0 != 1`; nothing to infer.
    InvalidStart {
        #[serde(with = "bigjson::uint")]
        s0: BigUint,
    },
    Contradiction {
        step: u32,
        #[serde(with = "bigjson::ratio")]
        forced: BigRational,
        #[serde(with = "bigjson::uint")]
        available: BigUint,
    },
    /// The new per-path rule is not a non-negative integer (integral mode only).
    NonIntegralRule {
        step: u32,
        length: u32,
        #[serde(with = "bigjson::ratio")]
        value: BigRational,
    },
    /// A condensed class would need a fractional number of children.
    NonIntegralGrowth {
        step: u32,
        label: Label,
        #[serde(with = "bigjson::ratio")]
        value: BigRational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InferenceReport {
    pub sequence: String,
    pub integral_rules: bool,
    pub inferred: PathRules,
    pub trace: Vec<InferenceStep>,
    pub outcome: Outcome,
}

impl InferenceReport {
    pub fn consistent(&self) -> bool {
        matches!(self.outcome, Outcome::ConsistentUpTo { .. })
    }
}

fn rational(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Infers rules step by step for `s_1..=s_{n_max}`.
///
/// Finite sequences stop at their last term.
pub fn infer_rules(s: &SequenceSpec, n_max: u32, integral_rules: bool) -> Result<InferenceReport> {
    let count = s
        .len_limit()
        .map_or(n_max as usize + 1, |limit| limit.min(n_max as usize + 1));
    let values = sequence_values(s, count)?;
    let mut report = InferenceReport {
        sequence: s.to_string(),
        integral_rules,
        inferred: PathRules::classic(0),
        trace: Vec::new(),
        outcome: Outcome::ConsistentUpTo { n: 0 },
    };
    if !values[0].is_one() {
        report.outcome = Outcome::InvalidStart {
            s0: values[0].clone(),
        };
        return Ok(report);
    }

    let mut graph = CondensedGraph::single(0);
    for step in 1..values.len() as u32 {
        let available = values[step as usize].clone();
        let target = step - 1;
        let table = graph.path_table(target);
        let open_length = step - 1;

        let mut contributions = Vec::new();
        let mut forced = BigRational::zero();
        for (length, rule) in report.inferred.as_slice().iter().enumerate() {
            for (from_label, paths) in table[length].iter().enumerate() {
                if paths.is_zero() {
                    continue;
                }
                let added = rational(paths) * rule;
                forced += &added;
                contributions.push(Contribution {
                    length: length as u32,
                    from_label: from_label as Label,
                    paths: paths.clone(),
                    rule: rule.clone(),
                    added,
                });
            }
        }

        let open = &table[open_length as usize];
        // Paths of maximal length can only start at the root.
        if open.iter().skip(1).any(|p| !p.is_zero()) {
            return Err(Error::MalformedGraph(format!(
                "step {step}: length-{open_length} paths start away from the root"
            )));
        }
        let open_paths = open[0].clone();
        let remainder = rational(&available) - &forced;

        let mut entry = InferenceStep {
            step,
            forced: forced.clone(),
            available: available.clone(),
            contributions,
            open_paths: open_paths.clone(),
            new_rule: None,
        };

        if remainder.is_negative() || (open_paths.is_zero() && !remainder.is_zero()) {
            report.trace.push(entry);
            report.outcome = Outcome::Contradiction {
                step,
                forced,
                available,
            };
            return Ok(report);
        }
        let rule = if open_paths.is_zero() {
            BigRational::zero()
        } else {
            let rule = remainder / rational(&open_paths);
            if integral_rules && !rule.is_integer() {
                report.trace.push(entry);
                report.outcome = Outcome::NonIntegralRule {
                    step,
                    length: open_length,
                    value: rule,
                };
                return Ok(report);
            }
            entry.new_rule = Some(NewRule {
                length: open_length,
                value: rule.clone(),
            });
            rule
        };
        report.inferred.push(rule);
        report.trace.push(entry);

        match grow(&graph, step, &report.inferred) {
            Ok((next, added)) => {
                debug_assert_eq!(added, available);
                if next.len() > NODE_LIMIT {
                    return Err(Error::NodeLimit {
                        step,
                        nodes: next.len(),
                        limit: NODE_LIMIT,
                    });
                }
                graph = next;
            }
            Err(Error::NonIntegralGrowth { label, value, .. }) => {
                report.outcome = Outcome::NonIntegralGrowth { step, label, value };
                return Ok(report);
            }
            Err(e) => return Err(e),
        }
        report.outcome = Outcome::ConsistentUpTo { n: step };
    }
    Ok(report)
}

/// The cheapest decisive answer for a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "certificate", rename_all = "snake_case")]
pub enum Certificate {
    Gate(GateReport),
    Inference(InferenceReport),
}

impl Certificate {
    /// Whether the certificate proves infeasibility (within the rule model
    /// for inference certificates).
    pub fn infeasible(&self) -> bool {
        match self {
            Certificate::Gate(g) => !g.feasible(),
            Certificate::Inference(r) => !r.consistent(),
        }
    }
}

/// Runs the gate and, if it passes, rule inference up to `n_max`.
pub fn certify_infeasible(
    s: &SequenceSpec,
    n_max: u32,
    integral_rules: bool,
) -> Result<Certificate> {
    let available = s.len_limit().unwrap_or(usize::MAX);
    if available >= 3 {
        let report = gate(s, 3)?;
        if !report.feasible() {
            return Ok(Certificate::Gate(report));
        }
    } else {
        let values = sequence_values(s, available)?;
        if !values[0].is_one() {
            return Ok(Certificate::Gate(GateReport {
                verdict: crate::axioms::Verdict::Infeasible,
                violated: Some(Lemma::LemmaS0),
                terms: values,
            }));
        }
    }
    infer_rules(s, n_max, integral_rules).map(Certificate::Inference)
}
