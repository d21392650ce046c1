use std::error::Error as StdError;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use actiongraphs::graph::{AnyGraph, GraphDocument};
use actiongraphs::{
    build_classic, build_fuss, build_super, certify_infeasible, check_axioms, compute_ntable, gate,
    infer_rules, sequence_values, verify_conjectures, BigUint, GraphFamily, SequenceSpec,
};

use crate::render;
use crate::{Command, ExportFormat, Family, FamilyParams, Form, GraphFormat, SeqInput};

pub type CliResult<T> = Result<T, Box<dyn StdError>>;

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(text: &str) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        // A closed pipe (`| head`) is not worth an error.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn json<T: serde::Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn family(kind: Family, n: u32, params: &FamilyParams) -> CliResult<GraphFamily> {
    if params.k.is_some() && !matches!(kind, Family::Fuss) {
        return Err("--k only applies to the fuss family".into());
    }
    Ok(match kind {
        Family::Classic => build_classic(n)?,
        Family::Fuss => {
            let k = params.k.ok_or("the fuss family needs --k")?;
            build_fuss(n, k)?
        }
        Family::Super => build_super(n)?,
    })
}

fn family_sequence(kind: Family, params: &FamilyParams) -> SequenceSpec {
    match kind {
        Family::Classic => SequenceSpec::Catalan,
        Family::Fuss => SequenceSpec::Fuss(params.k.unwrap_or(1)),
        Family::Super => SequenceSpec::SuperCatalanRow(0),
    }
}

/// One integer per line; blank lines and `#` comments are skipped.
fn read_sequence_file(path: &Path) -> CliResult<SequenceSpec> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let value: BigUint = line.parse().map_err(|_| {
            format!(
                "{}:{}: not a non-negative integer: {line:?}",
                path.display(),
                i + 1
            )
        })?;
        values.push(value);
    }
    Ok(SequenceSpec::explicit(values)?)
}

fn sequence(input: &SeqInput) -> CliResult<SequenceSpec> {
    match (&input.seq, &input.seq_file) {
        (Some(s), None) => Ok(s.parse()?),
        (None, Some(path)) => read_sequence_file(path),
        _ => Err("give exactly one of --seq and --seq-file".into()),
    }
}

pub fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Seq {
            sequence,
            count,
            json: as_json,
        } => {
            let spec: SequenceSpec = sequence.parse()?;
            let values = sequence_values(&spec, count)?;
            if as_json {
                let numbers: Vec<serde_json::Value> = values
                    .iter()
                    .map(|v| serde_json::Value::Number(v.to_string().parse().expect("decimal")))
                    .collect();
                emit(&json(&numbers)?)?;
            } else {
                let lines: String = values.iter().map(|v| format!("{v}\n")).collect();
                emit(&lines)?;
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Triangle { rows, ab } => {
            let text = if ab {
                render::fraction_table(rows)?
            } else {
                render::triangle_table(rows)?
            };
            emit(&text)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Build {
            family: kind,
            n,
            params,
            format,
            expand,
            limit,
        } => {
            let fam = family(kind, n, &params)?;
            let g = fam.graph(n)?;
            let text = match (format, expand) {
                (GraphFormat::Summary, _) => {
                    if expand {
                        // Fail early with a size error rather than print a summary.
                        g.expand_with_limit(limit)?;
                    }
                    render::family_summary(&fam)
                }
                (GraphFormat::Json, false) => g.to_json() + "\n",
                (GraphFormat::Dot, false) => g.to_dot(),
                (GraphFormat::Json, true) => g.expand_with_limit(limit)?.to_json() + "\n",
                (GraphFormat::Dot, true) => g.expand_with_limit(limit)?.to_dot(),
            };
            emit(&text)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::CheckAxioms {
            family: kind,
            n,
            params,
            seq,
            limit,
            json: as_json,
        } => {
            let fam = family(kind, n, &params)?;
            let spec = match seq {
                Some(s) => s.parse()?,
                None => family_sequence(kind, &params),
            };
            let report = check_axioms(&fam, &spec, limit)?;
            if as_json {
                emit(&json(&report)?)?;
            } else {
                emit(&render::axiom_report(&report, &spec))?;
            }
            if !report.passed() {
                Ok(ExitCode::from(1))
            } else if !report.fully_checked() {
                eprintln!("some subtree checks were skipped: graphs exceed --limit {limit}");
                Ok(ExitCode::from(2))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }

        Command::Gate {
            input,
            terms,
            json: as_json,
        } => {
            let spec = sequence(&input)?;
            let report = gate(&spec, terms)?;
            if as_json {
                emit(&json(&report)?)?;
            } else {
                emit(&render::gate_report(&report, &spec))?;
            }
            Ok(verdict(report.feasible()))
        }

        Command::Infer {
            input,
            n_max,
            integral,
            json: as_json,
        } => {
            let spec = sequence(&input)?;
            let report = infer_rules(&spec, n_max, integral)?;
            if as_json {
                emit(&json(&report)?)?;
            } else {
                emit(&render::inference_report(&report))?;
            }
            Ok(verdict(report.consistent()))
        }

        Command::Certify {
            input,
            n_max,
            integral,
            json: as_json,
        } => {
            let spec = sequence(&input)?;
            let cert = certify_infeasible(&spec, n_max, integral)?;
            if as_json {
                emit(&json(&cert)?)?;
            } else {
                emit(&render::certificate(&cert, &spec))?;
            }
            Ok(verdict(!cert.infeasible()))
        }

        Command::Ntable {
            n,
            csv,
            json: as_json,
        } => {
            let fam = build_super(n)?;
            let table = compute_ntable(&fam, n)?;
            let text = if csv {
                table.to_csv()
            } else if as_json {
                json(&table)?
            } else {
                render::ntable(&table)
            };
            emit(&text)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            n_max,
            json: as_json,
        } => {
            let report = verify_conjectures(n_max)?;
            if as_json {
                emit(&json(&report)?)?;
            } else {
                emit(&render::verification(&report))?;
            }
            Ok(verdict(report.passed()))
        }

        Command::Export {
            family: kind,
            n,
            params,
            format,
            out,
        } => {
            let fam = family(kind, n, &params)?;
            let text = match format {
                ExportFormat::Json => fam.to_json() + "\n",
                ExportFormat::Dot => render::family_dot(&fam),
            };
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => emit(&text)?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Convert {
            input,
            to,
            format,
            limit,
        } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let graph = GraphDocument::from_json(&text)?;
            let graph = match (graph, to) {
                (AnyGraph::Expanded(g), Some(Form::Condensed)) => AnyGraph::Condensed(g.condense()),
                (AnyGraph::Condensed(g), Some(Form::Expanded)) => {
                    AnyGraph::Expanded(g.expand_with_limit(limit)?)
                }
                (graph, _) => graph,
            };
            let text = match (&graph, format) {
                (AnyGraph::Expanded(g), ExportFormat::Json) => g.to_json() + "\n",
                (AnyGraph::Expanded(g), ExportFormat::Dot) => g.to_dot(),
                (AnyGraph::Condensed(g), ExportFormat::Json) => g.to_json() + "\n",
                (AnyGraph::Condensed(g), ExportFormat::Dot) => g.to_dot(),
            };
            emit(&text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
