use num_rational::BigRational;
use num_traits::ToPrimitive;
use permchan_core::counting::{asymptotic_estimate, exact_count, AsymptoticLaw};
use permchan_core::perm_core::GroupKind;
use serde_json::{json, Value};

use crate::args::{Format, KindArg, Mode, ScalingArgs};
use crate::error::{CliError, CliResult};
use crate::output;

const DEFAULT_N_LIMIT: usize = 1000;

fn law_for(kind: KindArg, mode: Mode) -> CliResult<AsymptoticLaw> {
    let law = match (GroupKind::from(kind), mode) {
        (GroupKind::Cyclic, Mode::Classical) => AsymptoticLaw::CyclicNc,
        (GroupKind::Cyclic, Mode::Ancilla) => AsymptoticLaw::CyclicNa,
        (GroupKind::Cyclic, Mode::Quantum) => {
            return Err(CliError::Usage(
                "cyclic N_q equals d^n exactly; there is no asymptotic law to compare".into(),
            ))
        }
        (GroupKind::Dihedral, Mode::Classical) => AsymptoticLaw::DihedralNc,
        (GroupKind::Dihedral, Mode::Quantum) => AsymptoticLaw::DihedralNq,
        (GroupKind::Dihedral, Mode::Ancilla) => AsymptoticLaw::DihedralNa,
        (GroupKind::Symmetric, Mode::Classical) => AsymptoticLaw::SymmetricNc,
        (GroupKind::Symmetric, Mode::Quantum) => AsymptoticLaw::SymmetricNq,
        (GroupKind::Symmetric, Mode::Ancilla) => AsymptoticLaw::SymmetricNa,
        (_, Mode::All) => {
            return Err(CliError::Usage(
                "scaling needs one of --mode classical, quantum or ancilla".into(),
            ))
        }
        (GroupKind::Custom, _) => unreachable!("custom groups are not selectable here"),
    };
    Ok(law)
}

pub fn run(args: &ScalingArgs) -> CliResult<()> {
    let law = law_for(args.group, args.mode)?;
    if args.d == 0 || args.n_min == 0 || args.n_min > args.n_max {
        return Err(CliError::Usage(
            "need --d >= 1 and 1 <= --n-min <= --n-max".into(),
        ));
    }
    if !args.unsafe_bounds && args.n_max > DEFAULT_N_LIMIT {
        return Err(CliError::Bound(format!(
            "--n-max {} exceeds the default limit {DEFAULT_N_LIMIT}; pass --unsafe-bounds to override",
            args.n_max
        )));
    }
    let mut points = Vec::new();
    for n in args.n_min..=args.n_max {
        let exact = exact_count(law, n, args.d)?;
        let estimate = asymptotic_estimate(law, n, args.d)?;
        let ratio = BigRational::from_integer(exact.clone().into()) / &estimate.leading_value;
        points.push((
            n,
            exact.to_string(),
            estimate.to_f64(),
            ratio.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let rows: Vec<Vec<String>> = points
        .iter()
        .map(|(n, exact, asymptotic, ratio)| {
            vec![
                n.to_string(),
                exact.clone(),
                format!("{asymptotic:.12e}"),
                format!("{ratio:.12}"),
            ]
        })
        .collect();
    let header = ["n", "exact", "asymptotic", "ratio"];
    let text = match args.format {
        Format::Csv => output::csv(&header, &rows)?,
        Format::Table => {
            let mut all = vec![header.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
            all.extend(rows);
            output::table(&all)
        }
        Format::Json => {
            let data: Vec<Value> = points
                .iter()
                .map(|(n, exact, asymptotic, ratio)| {
                    json!({ "n": n, "exact": exact, "asymptotic": asymptotic, "ratio": ratio })
                })
                .collect();
            output::json(&json!({ "law": law.name(), "d": args.d, "rows": data }))
        }
    };
    output::emit(&text, args.out.as_deref())
}
