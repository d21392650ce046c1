//! Human-readable text for every report. Output depends only on the input,
//! so identical invocations print identical bytes.

use std::fmt::Write as _;

use actiongraphs::axioms::SubtreeMatch;
use actiongraphs::inference::Contribution;
use actiongraphs::sequences::ab_fraction;
use actiongraphs::{
    catalan_triangle, Axiom2Report, AxiomReport, Certificate, GateReport, GraphFamily,
    InferenceReport, NTable, Outcome, SequenceSpec, Verdict, VerificationReport,
};

use crate::commands::CliResult;

/// Right-aligned columns separated by two spaces.
fn grid(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn header(corner: &str, count: u64) -> Vec<String> {
    std::iter::once(corner.to_string())
        .chain((0..count).map(|i| i.to_string()))
        .collect()
}

/// Rows `n = 0..rows` of Catalan's triangle.
pub fn triangle_table(rows: u64) -> CliResult<String> {
    let mut table = vec![header("n\\k", rows)];
    for n in 0..rows {
        let mut row = vec![n.to_string()];
        for k in 0..=n {
            row.push(catalan_triangle(n, k)?.to_string());
        }
        table.push(row);
    }
    Ok(grid(&table))
}

/// `cat(a,b)` as the unreduced fraction `C(a-1,b)/(a-b)` for `a = 1..=rows`.
pub fn fraction_table(rows: u64) -> CliResult<String> {
    let mut table = vec![header("a\\b", rows)];
    for a in 1..=rows {
        let mut row = vec![a.to_string()];
        for b in 0..a {
            let (num, den) = ab_fraction(a, b)?;
            row.push(format!("{num}/{den}"));
        }
        table.push(row);
    }
    Ok(grid(&table))
}

pub fn family_summary(fam: &GraphFamily) -> String {
    let mut table = vec![vec![
        "step".to_string(),
        "new".to_string(),
        "nodes".to_string(),
        "vertices".to_string(),
    ]];
    for (n, (g, new)) in fam.graphs.iter().zip(fam.new_counts()).enumerate() {
        table.push(vec![
            n.to_string(),
            new.to_string(),
            g.len().to_string(),
            g.total_represented().to_string(),
        ]);
    }
    format!("family: {}\n{}", kind_name(fam), grid(&table))
}

fn kind_name(fam: &GraphFamily) -> String {
    match &fam.kind {
        actiongraphs::FamilyKind::Classic => "classic".into(),
        actiongraphs::FamilyKind::Fuss { k } => format!("fuss k={k}"),
        actiongraphs::FamilyKind::Super => "super".into(),
        actiongraphs::FamilyKind::ByRules { .. } => "by rules".into(),
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn axiom_report(report: &AxiomReport, spec: &SequenceSpec) -> String {
    let mut out = format!("sequence: {spec}\n");
    let a1 = &report.axiom1;
    match a1.first_failure() {
        None => writeln!(out, "axiom 1: pass for steps 0..={}", a1.steps.len() - 1),
        Some(s) => writeln!(
            out,
            "axiom 1: FAIL at step {}: expected {}, added {}",
            s.step, s.expected, s.actual
        ),
    }
    .unwrap();

    out.push_str("axiom 2:\n");
    for r in &report.axiom2 {
        match r {
            Axiom2Report::Checked {
                n,
                matches,
                counterexample,
                unexpected,
            } => {
                match counterexample {
                    None => write!(out, "  G_{n}: pass, {} subtrees matched", matches.len()),
                    Some((v, label)) => write!(
                        out,
                        "  G_{n}: FAIL, the subtree at vertex {v} (label {label}) matches no earlier graph"
                    ),
                }
                .unwrap();
                if !unexpected.is_empty() {
                    write!(out, "; {} with k != n - label", unexpected.len()).unwrap();
                }
                out.push('\n');
                if *n > 0 && counterexample.is_none() {
                    writeln!(out, "    depth 1: {}", depth_one(matches)).unwrap();
                }
            }
            Axiom2Report::NotChecked { n, required, limit } => writeln!(
                out,
                "  G_{n}: not checked, expansion needs {required} vertices (limit {limit})"
            )
            .unwrap(),
        }
    }

    let bad: Vec<_> = report.axiom3.iter().filter(|r| !r.passed()).collect();
    if bad.is_empty() {
        writeln!(out, "axiom 3: pass for G_0..=G_{}", report.axiom3.len() - 1).unwrap();
    } else {
        for r in bad {
            let labels: Vec<String> = r.offending.iter().map(|(_, l)| l.to_string()).collect();
            writeln!(
                out,
                "axiom 3: FAIL in G_{}: leaves labeled {}",
                r.n,
                labels.join(", ")
            )
            .unwrap();
        }
    }
    writeln!(out, "result: {}", pass(report.passed())).unwrap();
    out
}

/// Subtrees hanging off the root, grouped by the graph they copy.
fn depth_one(matches: &[SubtreeMatch]) -> String {
    let mut counts = std::collections::BTreeMap::new();
    for m in matches.iter().filter(|m| m.depth == 1) {
        *counts
            .entry(std::cmp::Reverse(m.matched_k))
            .or_insert(0usize) += 1;
    }
    let parts: Vec<String> = counts
        .into_iter()
        .map(|(std::cmp::Reverse(k), c)| format!("{c} x G_{k}"))
        .collect();
    parts.join(", ")
}

fn joined<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn gate_report(report: &GateReport, spec: &SequenceSpec) -> String {
    let verdict = match report.verdict {
        Verdict::FeasibleSoFar => "feasible so far".to_string(),
        Verdict::Infeasible => {
            let lemma = serde_json::to_value(report.violated).expect("serializable");
            format!("infeasible, {}", lemma.as_str().unwrap_or("unknown"))
        }
    };
    format!(
        "sequence: {spec}\nterms: {}\nverdict: {verdict}\nwitness: {}\n",
        joined(&report.terms),
        report.witness()
    )
}

fn contribution(c: &Contribution) -> String {
    format!(
        "{} (length {} from label {})",
        c.added, c.length, c.from_label
    )
}

pub fn inference_report(report: &InferenceReport) -> String {
    let mut out = format!("sequence: {}\n", report.sequence);
    if report.integral_rules {
        out.push_str("rules: non-negative integers only\n");
    }
    let mut table = vec![vec![
        "step".to_string(),
        "forced".to_string(),
        "available".to_string(),
        "open paths".to_string(),
        "new rule".to_string(),
    ]];
    for s in &report.trace {
        table.push(vec![
            s.step.to_string(),
            s.forced.to_string(),
            s.available.to_string(),
            s.open_paths.to_string(),
            s.new_rule.as_ref().map_or("-".to_string(), |r| {
                format!("r({}) = {}", r.length, r.value)
            }),
        ]);
    }
    if !report.trace.is_empty() {
        out.push_str(&grid(&table));
    }
    match &report.outcome {
        Outcome::ConsistentUpTo { n } => {
            writeln!(out, "outcome: consistent up to n = {n}").unwrap();
        }
        Outcome::InvalidStart { s0 } => {
            writeln!(out, "outcome: invalid start, s_0 = {s0} but must be 1").unwrap();
        }
        Outcome::Contradiction {
            step,
            forced,
            available,
        } => {
            writeln!(
                out,
                "outcome: contradiction at step {step}: forced={forced} available={available}"
            )
            .unwrap();
            if let Some(last) = report.trace.last() {
                let parts: Vec<String> = last.contributions.iter().map(contribution).collect();
                writeln!(out, "forced {forced} = {}", parts.join(" + ")).unwrap();
            }
        }
        Outcome::NonIntegralRule {
            step,
            length,
            value,
        } => {
            writeln!(
                out,
                "outcome: non-integral rule at step {step}: r({length}) = {value}"
            )
            .unwrap();
        }
        Outcome::NonIntegralGrowth { step, label, value } => {
            writeln!(
                out,
                "outcome: non-integral growth at step {step}: a label-{label} class needs {value} children per vertex"
            )
            .unwrap();
        }
    }
    if !report.inferred.is_empty() {
        let rules: Vec<String> = report
            .inferred
            .as_slice()
            .iter()
            .enumerate()
            .map(|(l, r)| format!("r({l}) = {r}"))
            .collect();
        writeln!(out, "inferred: {}", rules.join(", ")).unwrap();
    }
    out
}

pub fn certificate(cert: &Certificate, spec: &SequenceSpec) -> String {
    match cert {
        Certificate::Gate(g) => format!("certificate: gate\n{}", gate_report(g, spec)),
        Certificate::Inference(r) => {
            format!("certificate: inference\n{}", inference_report(r))
        }
    }
}

pub fn ntable(table: &NTable) -> String {
    let mut rows = vec![header("l\\v", u64::from(table.n) + 1)];
    for (l, entries) in table.entries.iter().enumerate() {
        let mut row = vec![l.to_string()];
        row.extend(entries.iter().map(ToString::to_string));
        rows.push(row);
    }
    format!("n = {}\n{}", table.n, grid(&rows))
}

fn ok(flag: bool) -> String {
    if flag { "ok" } else { "FAIL" }.to_string()
}

pub fn verification(report: &VerificationReport) -> String {
    let mut rows = vec![vec![
        "n".to_string(),
        "table".to_string(),
        "next super".to_string(),
        "predicted".to_string(),
        "actual".to_string(),
    ]];
    for t in &report.transitions {
        rows.push(vec![
            format!("{} -> {}", t.n, t.n + 1),
            ok(t.table_recurrence),
            ok(t.next_super),
            t.predicted_super.to_string(),
            t.actual_super.to_string(),
        ]);
    }
    let mut out = grid(&rows);
    match &report.first_discrepancy {
        None => writeln!(
            out,
            "result: both recurrences hold for every table up to n = {}",
            report.n_max
        ),
        Some(d) => {
            let which = serde_json::to_value(&d.conjecture).expect("serializable");
            writeln!(
                out,
                "result: FAIL, {} at n = {}, l = {}, v = {}: predicted {}, actual {}",
                which.as_str().unwrap_or("unknown"),
                d.n + 1,
                d.length,
                d.label,
                d.predicted,
                d.actual
            )
        }
    }
    .unwrap();
    out
}

/// One digraph per step, `G0`, `G1`, ...
pub fn family_dot(fam: &GraphFamily) -> String {
    fam.graphs
        .iter()
        .enumerate()
        .map(|(n, g)| {
            g.to_dot()
                .replacen("digraph G {", &format!("digraph G{n} {{"), 1)
        })
        .collect::<Vec<_>>()
        .join("\n")
}
