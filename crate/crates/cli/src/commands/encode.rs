use permchan_core::encoding::{message_basis_cyclic_bounded, MessageBasis, StateVector};

use crate::args::{CommonArgs, Format};
use crate::error::CliResult;
use crate::group::Context;
use crate::output;

pub fn run(args: &CommonArgs) -> CliResult<()> {
    let ctx = Context::new(args)?;
    let n = ctx.spec.require_cyclic("encode")?;
    let basis = message_basis_cyclic_bounded(n, ctx.d, ctx.bounds.states)?;
    let export = serde_json::to_value(basis.export()).expect("basis export serializes");

    if let Some(path) = &args.out {
        output::emit(&output::json(&export), Some(path))?;
        return output::emit(&summary(&basis), None);
    }
    let text = match args.format {
        Format::Json => output::json(&export),
        Format::Table => summary(&basis) + &listing(&basis),
        Format::Csv => {
            let rows: Vec<Vec<String>> = basis
                .entries()
                .iter()
                .map(|e| {
                    vec![
                        e.mu.to_string(),
                        e.alpha.to_string(),
                        basis.orbits()[e.orbit_index].representative.to_string(),
                        ket_sum(&e.state),
                    ]
                })
                .collect();
            output::csv(&["mu", "alpha", "representative", "state"], &rows)?
        }
    };
    output::emit(&text, None)
}

fn summary(basis: &MessageBasis) -> String {
    format!(
        "states: {}\nm: {}\ngram residual: {:.1e}\n",
        basis.len(),
        output::list(basis.multiplicities()),
        basis.gram_residual()
    )
}

fn listing(basis: &MessageBasis) -> String {
    let mut rows = vec![vec![
        "mu".to_string(),
        "alpha".to_string(),
        "orbit".to_string(),
        "state".to_string(),
    ]];
    for e in basis.entries() {
        rows.push(vec![
            e.mu.to_string(),
            e.alpha.to_string(),
            basis.orbits()[e.orbit_index].representative.to_string(),
            ket_sum(&e.state),
        ]);
    }
    output::table(&rows)
}

/// `(0.5)|0001⟩ + (-0.5i)|1000⟩ + …` in basis-string order.
fn ket_sum(state: &StateVector) -> String {
    state
        .export()
        .iter()
        .map(|a| {
            let z = num_complex::Complex64::new(a.re, a.im);
            format!("({})|{}⟩", output::complex(z), a.basis_string)
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
