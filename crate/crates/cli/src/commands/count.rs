use permchan_core::counting::{count_group_bounded, count_named, CountReport, QuantumStrategy};
use permchan_core::rep_theory::{ambient_multiplicities, character_table_bounded};
use serde_json::{json, Value};

use crate::args::{CountArgs, Format};
use crate::error::CliResult;
use crate::group::{Context, GroupSpec};
use crate::output;

struct OracleCounts {
    quantum: String,
    ancilla: String,
}

pub fn run(args: &CountArgs) -> CliResult<()> {
    let ctx = Context::new(&args.common)?;
    let report = match &ctx.spec {
        GroupSpec::Named { kind, n } => count_named(*kind, *n, ctx.d)?,
        GroupSpec::File { .. } => {
            let group = ctx.spec.build(ctx.bounds)?;
            let strategy = if args.oracle {
                QuantumStrategy::OracleFallback
            } else {
                QuantumStrategy::CertifiedOnly
            };
            count_group_bounded(&group, ctx.d, strategy, ctx.bounds.group_order)?
        }
    };
    let oracle = if args.oracle {
        let group = ctx.spec.build(ctx.bounds)?;
        let table = character_table_bounded(&group, ctx.bounds.group_order)?;
        let m = ambient_multiplicities(&group, &table, ctx.d)?;
        Some(OracleCounts {
            quantum: m.total().to_string(),
            ancilla: m.sum_of_squares().to_string(),
        })
    } else {
        None
    };

    let mode = args.mode;
    let mut rows: Vec<Vec<String>> = Vec::new();
    if mode.classical() {
        rows.push(row("N_c", &report.classical.value, report.classical.method));
    }
    if mode.quantum() {
        match &report.quantum {
            Some(q) => rows.push(row("N_q", &q.value, q.method)),
            None => rows.push(vec![
                "N_q".into(),
                "undefined".into(),
                report.quantum_note.clone().unwrap_or_default(),
            ]),
        }
    }
    if mode.ancilla() {
        rows.push(row("N_a", &report.ancilla.value, report.ancilla.method));
    }
    if let Some(o) = &oracle {
        if mode.quantum() {
            rows.push(vec!["N_q".into(), o.quantum.clone(), "oracle".into()]);
        }
        if mode.ancilla() {
            rows.push(vec!["N_a".into(), o.ancilla.clone(), "oracle".into()]);
        }
    }

    let text = match args.common.format {
        Format::Table => {
            let mut lines = vec![
                vec!["group".to_string(), ctx.spec.to_string()],
                vec!["d".to_string(), ctx.d.to_string()],
            ];
            lines.extend(rows);
            output::table(&lines)
        }
        Format::Csv => output::csv(&["quantity", "value", "method"], &rows)?,
        Format::Json => output::json(&to_json(&ctx, &report, oracle.as_ref(), args)),
    };
    output::emit(&text, args.common.out.as_deref())
}

fn row(name: &str, value: &impl ToString, method: impl ToString) -> Vec<String> {
    vec![name.to_string(), value.to_string(), method.to_string()]
}

fn to_json(
    ctx: &Context,
    report: &CountReport,
    oracle: Option<&OracleCounts>,
    args: &CountArgs,
) -> Value {
    let mut map = ctx.json_header();
    let full = serde_json::to_value(report).expect("reports serialize");
    let mode = args.mode;
    for (key, keep) in [
        ("N_c", mode.classical()),
        ("N_q", mode.quantum()),
        ("N_a", mode.ancilla()),
    ] {
        if keep {
            map.insert(key.into(), full[key].clone());
        }
    }
    if mode.quantum() {
        if let Some(note) = &report.quantum_note {
            map.insert("quantum_note".into(), note.clone().into());
        }
    }
    if let Some(o) = oracle {
        map.insert(
            "oracle".into(),
            json!({ "sum_m": o.quantum, "sum_m_squared": o.ancilla }),
        );
    }
    if let GroupSpec::File { path, .. } = &ctx.spec {
        map.insert("group_file".into(), path.display().to_string().into());
    }
    Value::Object(map)
}
