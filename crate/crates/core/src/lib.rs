//! Exact-arithmetic toolkit for action graphs and their generalizations.
//!
//! The crate builds inductively generated labeled rooted trees whose step
//! sizes follow Catalan-type sequences, checks the generalized action graph
//! axioms on them, tests arbitrary sequences against necessary feasibility
//! conditions, infers path-length growth rules, and verifies the n-table
//! recurrences for the super Catalan family.
//!
//! All arithmetic is exact: values are [`BigUint`] and rule coefficients are
//! [`BigRational`].

pub mod axioms;
pub mod builders;
pub mod error;
pub mod graph;
pub mod inference;
pub mod ntables;
pub mod sequences;

mod bigjson;

pub use num_bigint::BigUint;
pub use num_rational::BigRational;

pub use axioms::{
    check_axiom1, check_axiom2, check_axiom3, check_axioms, gate, Axiom1Report, Axiom2Report,
    Axiom3Report, AxiomReport, GateReport, Lemma, Verdict,
};
pub use builders::{
    build_by_rules, build_classic, build_fuss, build_super, FamilyKind, GraphFamily, PathRules,
    RuleBuild, NODE_LIMIT,
};
pub use error::{Error, Result};
pub use graph::{
    CondensedGraph, ExpandedGraph, Label, LabelCensus, NodeId, VertexId, DEFAULT_EXPAND_LIMIT,
};
pub use inference::{certify_infeasible, infer_rules, Certificate, InferenceReport, Outcome};
pub use ntables::{
    compute_ntable, predict_next_super, predict_ntable, verify_conjectures, NTable,
    VerificationReport,
};
pub use sequences::{
    catalan, catalan_triangle, fuss_catalan, internal_triangles, sequence_values, strict_cat,
    super_catalan, weak_cat, SequenceSpec,
};
