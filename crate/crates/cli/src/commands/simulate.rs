use permchan_core::channel_sim::{
    apply_channel_classical, dense_coding_exhaustive, verify_zero_error, ChannelSpec,
    ClassicalDecoder, DenseCodingSummary, ElementSelection, ZeroErrorReport,
};
use permchan_core::encoding::{message_basis_cyclic_bounded, MessageBasis};
use permchan_core::perm_core::{GroupKind, PermutationGroup};
use serde_json::{json, Value};

use crate::args::{Format, Mode, SimulateArgs};
use crate::error::{CliError, CliResult};
use crate::group::{Bounds, Context};
use crate::output;

/// Cap on `Σ_μ m_μ⁴ · d^n · |G|`, the dense-coding workload.
const DENSE_CODING_WORK_LIMIT: u128 = 1 << 32;

#[derive(Debug, Clone, Default)]
pub struct ClassicalReport {
    pub strings: usize,
    pub elements: usize,
    pub orbits: usize,
    pub failures: Vec<(String, String)>,
}

impl ClassicalReport {
    fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|(x, sigma)| json!({ "string": x, "sigma": sigma }))
            .collect();
        json!({
            "strings": self.strings,
            "elements": self.elements,
            "orbits": self.orbits,
            "failures": failures,
        })
    }
}

/// Sends every string through the channel and checks that its orbit survives.
pub fn simulate_classical(
    group: &PermutationGroup,
    d: usize,
    selection: ElementSelection,
    bounds: Bounds,
) -> CliResult<ClassicalReport> {
    let decoder = ClassicalDecoder::bounded(group, d, bounds.states)?;
    let mut spec = ChannelSpec::new(group.clone(), selection)?;
    let mut report = ClassicalReport {
        orbits: decoder.orbits().len(),
        ..ClassicalReport::default()
    };
    for orbit in decoder.orbits() {
        for x in &orbit.members {
            let sent = decoder.decode(x)?;
            let outputs = apply_channel_classical(&mut spec, x)?;
            report.elements = report.elements.max(outputs.len());
            report.strings += 1;
            for (y, sigma) in outputs {
                if decoder.decode(&y)? != sent {
                    report.failures.push((x.to_string(), sigma.to_string()));
                }
            }
        }
    }
    Ok(report)
}

pub fn dense_coding_work(basis: &MessageBasis) -> u128 {
    let dim = basis.d().pow(basis.n() as u32) as u128;
    let order = basis.group().order() as u128;
    basis
        .multiplicities()
        .iter()
        .map(|&m| (m as u128).pow(4) * dim * order)
        .sum()
}

pub fn check_dense_coding_work(basis: &MessageBasis, bounds: Bounds) -> CliResult<()> {
    let work = dense_coding_work(basis);
    if bounds.states != u64::MAX && work > DENSE_CODING_WORK_LIMIT {
        return Err(CliError::Bound(format!(
            "dense-coding simulation needs about {work} operations (limit {DENSE_CODING_WORK_LIMIT}); \
             pass --unsafe-bounds to override"
        )));
    }
    Ok(())
}

fn selection(seed: Option<u64>) -> ElementSelection {
    seed.map_or(
        ElementSelection::Exhaustive,
        ElementSelection::UniformRandom,
    )
}

pub fn run(args: &SimulateArgs) -> CliResult<()> {
    let ctx = Context::new(&args.common)?;
    let group = ctx.spec.build(ctx.bounds)?;
    let cyclic = ctx.spec.kind() == GroupKind::Cyclic;
    let mode = args.mode;
    if !cyclic && matches!(mode, Mode::Quantum | Mode::Ancilla) {
        ctx.spec.require_cyclic("quantum and ancilla simulation")?;
    }

    let classical = if mode.classical() {
        Some(simulate_classical(
            &group,
            ctx.d,
            selection(args.seed),
            ctx.bounds,
        )?)
    } else {
        None
    };
    let basis = if cyclic && (mode.quantum() || mode.ancilla()) {
        Some(message_basis_cyclic_bounded(
            ctx.spec.n(),
            ctx.d,
            ctx.bounds.states,
        )?)
    } else {
        None
    };
    let quantum: Option<ZeroErrorReport> = match (&basis, mode.quantum()) {
        (Some(basis), true) => {
            let mut spec = ChannelSpec::new(group.clone(), selection(args.seed))?;
            Some(verify_zero_error(&mut spec, basis)?)
        }
        _ => None,
    };
    let ancilla: Option<DenseCodingSummary> = match (&basis, mode.ancilla()) {
        (Some(basis), true) => {
            check_dense_coding_work(basis, ctx.bounds)?;
            Some(dense_coding_exhaustive(basis)?)
        }
        _ => None,
    };

    let mut failures = 0;
    failures += classical.as_ref().map_or(0, |c| c.failures.len());
    failures += quantum.as_ref().map_or(0, |q| q.failures.len());
    failures += ancilla.as_ref().map_or(0, |a| a.triples - a.round_tripped);

    let selection_name = if args.seed.is_some() {
        "random"
    } else {
        "exhaustive"
    };
    let text = match args.common.format {
        Format::Json => {
            let mut map = ctx.json_header();
            map.insert("selection".into(), selection_name.into());
            if let Some(seed) = args.seed {
                map.insert("seed".into(), seed.into());
            }
            if let Some(c) = &classical {
                map.insert("classical".into(), c.to_json());
            }
            if let Some(q) = &quantum {
                map.insert(
                    "quantum".into(),
                    serde_json::to_value(q).expect("serializes"),
                );
            }
            if let Some(a) = &ancilla {
                map.insert(
                    "ancilla".into(),
                    serde_json::to_value(a).expect("serializes"),
                );
            }
            output::json(&Value::Object(map))
        }
        Format::Table | Format::Csv => {
            let mut rows = Vec::new();
            if let Some(c) = &classical {
                rows.push(vec![
                    "classical".to_string(),
                    (c.strings * c.elements).to_string(),
                    c.failures.len().to_string(),
                    format!(
                        "{} strings x {} elements, {} orbits",
                        c.strings, c.elements, c.orbits
                    ),
                ]);
            }
            if let Some(q) = &quantum {
                rows.push(vec![
                    "quantum".to_string(),
                    q.trials().to_string(),
                    q.failures.len().to_string(),
                    format!(
                        "{} messages x {} elements, max off-diagonal overlap {:.1e}",
                        q.messages_tested, q.group_elements_tested, q.max_offdiag_overlap
                    ),
                ]);
            }
            if let Some(a) = &ancilla {
                rows.push(vec![
                    "ancilla".to_string(),
                    a.triples.to_string(),
                    (a.triples - a.round_tripped).to_string(),
                    format!(
                        "{}/{} triples round-tripped, min probability {:.12}",
                        a.round_tripped, a.triples, a.min_probability
                    ),
                ]);
            }
            if !cyclic && (mode.quantum() || mode.ancilla()) {
                rows.push(vec![
                    "quantum".to_string(),
                    "0".into(),
                    "0".into(),
                    "skipped: message bases are built for cyclic groups only".into(),
                ]);
            }
            if args.common.format == Format::Csv {
                output::csv(&["check", "trials", "failures", "detail"], &rows)?
            } else {
                let mut all = vec![
                    vec!["group".to_string(), ctx.spec.to_string()],
                    vec!["d".to_string(), ctx.d.to_string()],
                    vec!["selection".to_string(), selection_name.to_string()],
                ];
                all.extend(
                    rows.into_iter()
                        .map(|r| vec![r[0].clone(), format!("{} failures; {}", r[2], r[3])]),
                );
                output::table(&all)
            }
        }
    };
    output::emit(&text, args.common.out.as_deref())?;
    if failures > 0 {
        return Err(CliError::Verification(format!(
            "{failures} simulation failures"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use permchan_core::perm_core::make_named_group;

    #[test]
    fn classical_orbits_survive() {
        let g = make_named_group(GroupKind::Dihedral, 4).unwrap();
        let report =
            simulate_classical(&g, 2, ElementSelection::Exhaustive, Bounds::new(false)).unwrap();
        assert_eq!((report.strings, report.elements, report.orbits), (16, 8, 6));
        assert!(report.failures.is_empty());
    }
}
