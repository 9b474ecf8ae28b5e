use num_bigint::BigUint;
use num_complex::Complex64;
use permchan_core::channel_sim::{
    dense_coding_exhaustive, sector_phase_residual, verify_zero_error, ChannelSpec,
    ElementSelection,
};
use permchan_core::counting::{
    count_ancilla_polya, count_classical_burnside, count_named, count_quantum_totally_orthogonal,
};
use permchan_core::encoding::{message_basis_cyclic_bounded, root_of_unity};
use permchan_core::perm_core::{orbits_bounded, GroupKind, Permutation, PermutationGroup};
use permchan_core::rep_theory::{
    ambient_multiplicities, character_table_bounded, frobenius_schur_indicators, CharacterTable,
    FsIndicators,
};
use serde_json::{json, Value};

use crate::args::{CommonArgs, Format};
use crate::commands::simulate::{check_dense_coding_work, simulate_classical};
use crate::error::{CliError, CliResult};
use crate::group::{Bounds, Context, GroupSpec};
use crate::output;

const TOLERANCE: f64 = 1e-9;
/// Cap on `d^n · |G|` for checks that touch every (string, element) pair.
const PAIR_LIMIT: u128 = 1 << 26;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn equal<T: PartialEq + ToString>(name: &str, left: T, right: T) -> Self {
        let detail = format!("{} == {}", left.to_string(), right.to_string());
        Check::new(name, left == right, detail)
    }

    fn skipped(name: &str, why: &str) -> Self {
        Check::new(name, true, format!("skipped: {why}"))
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("{status} {}: {}", self.name, self.detail)
    }
}

fn pair_count(group: &PermutationGroup, d: usize) -> u128 {
    (d as u128).saturating_pow(group.degree() as u32) * group.order() as u128
}

fn structural_checks(group: &PermutationGroup, d: usize, bounds: Bounds) -> CliResult<Vec<Check>> {
    let mut checks = Vec::new();
    let orbits = orbits_bounded(group, d, bounds.states)?;
    let bad = orbits
        .iter()
        .filter(|o| o.size * o.stabilizer_order != group.order())
        .count();
    checks.push(Check::new(
        "orbit-stabilizer",
        bad == 0,
        format!(
            "{} orbits, |O|·|Stab| = {} on {} of them",
            orbits.len(),
            group.order(),
            orbits.len() - bad
        ),
    ));
    let burnside = count_classical_burnside(group, d)?;
    checks.push(Check::equal(
        "Burnside N_c == orbit count",
        burnside,
        BigUint::from(orbits.len()),
    ));

    if pair_count(group, d) <= PAIR_LIMIT {
        let states = (d as u64).pow(group.degree() as u32);
        let mut mismatches = 0;
        for sigma in group.elements() {
            let fixed = (0..states)
                .map(|i| permchan_core::perm_core::ColoredString::from_index(i, group.degree(), d))
                .filter(|x| x.permuted(sigma).map(|y| &y == x).unwrap_or(false))
                .count() as u64;
            if fixed != (d as u64).pow(sigma.cycle_count() as u32) {
                mismatches += 1;
            }
        }
        checks.push(Check::new(
            "fixed points == d^c(σ)",
            mismatches == 0,
            format!(
                "{} of {} elements agree",
                group.order() - mismatches,
                group.order()
            ),
        ));
        let report = simulate_classical(group, d, ElementSelection::Exhaustive, bounds)?;
        checks.push(Check::new(
            "classical zero-error",
            report.failures.is_empty(),
            format!(
                "{} strings x {} elements, {} failures",
                report.strings,
                report.elements,
                report.failures.len()
            ),
        ));
    } else {
        checks.push(Check::skipped(
            "fixed points == d^c(σ)",
            "d^n·|G| too large",
        ));
        checks.push(Check::skipped("classical zero-error", "d^n·|G| too large"));
    }
    Ok(checks)
}

fn closed_form_checks(
    spec: &GroupSpec,
    group: &PermutationGroup,
    d: usize,
) -> CliResult<Vec<Check>> {
    let GroupSpec::Named { kind, n } = spec else {
        return Ok(Vec::new());
    };
    let report = count_named(*kind, *n, d)?;
    let mut checks = vec![
        Check::equal(
            "closed-form N_c == Burnside",
            report.classical.value.clone(),
            count_classical_burnside(group, d)?,
        ),
        Check::equal(
            "closed-form N_a == Pólya",
            report.ancilla.value.clone(),
            count_ancilla_polya(group, d)?,
        ),
    ];
    if *kind == GroupKind::Symmetric {
        let bad = group
            .conjugacy_classes()
            .iter()
            .filter(|c| BigUint::from(c.size) != c.partition.symmetric_class_size())
            .count();
        checks.push(Check::new(
            "class sizes == n!/z_λ",
            bad == 0,
            format!(
                "{} classes, {bad} mismatches",
                group.conjugacy_classes().len()
            ),
        ));
    }
    Ok(checks)
}

fn square_root_checks(
    group: &PermutationGroup,
    table: &CharacterTable,
    fs: &FsIndicators,
) -> Vec<Check> {
    let roots = group.square_root_counts();
    let sums = table.character_sums();
    let mut weighted_residual: f64 = 0.0;
    let mut counterexample: Option<(Permutation, Complex64, usize)> = None;
    for (k, class) in table.classes().iter().enumerate() {
        let n_sigma = roots[class.member_indices[0]];
        let weighted: Complex64 = table
            .irreps()
            .iter()
            .zip(&fs.values)
            .map(|(irrep, &nu)| irrep.characters[k] * nu as f64)
            .sum();
        weighted_residual = weighted_residual.max((weighted - n_sigma as f64).norm());
        if (sums[k] - n_sigma as f64).norm() > TOLERANCE && counterexample.is_none() {
            counterexample = Some((class.representative.clone(), sums[k], n_sigma));
        }
    }
    let real = fs.all_real();
    let plain = match (&counterexample, real) {
        (None, true) => Check::new(
            "Σ_μ χ_μ(σ) == n(σ)",
            true,
            format!("holds on all {} classes", table.classes().len()),
        ),
        (Some((sigma, sum, n_sigma)), false) => Check::new(
            "Σ_μ χ_μ(σ) == n(σ)",
            true,
            format!(
                "fails as expected for a group with complex irreps: σ = {sigma}, Σχ = {}, n(σ) = {n_sigma}",
                output::complex(*sum)
            ),
        ),
        (None, false) => Check::new(
            "Σ_μ χ_μ(σ) == n(σ)",
            false,
            "holds although some indicator is not +1",
        ),
        (Some((sigma, sum, n_sigma)), true) => Check::new(
            "Σ_μ χ_μ(σ) == n(σ)",
            false,
            format!("σ = {sigma}: Σχ = {}, n(σ) = {n_sigma}", output::complex(*sum)),
        ),
    };
    vec![
        Check::new(
            "Σ_μ ν_μ χ_μ(σ) == n(σ)",
            weighted_residual < TOLERANCE,
            format!("max residual {weighted_residual:.1e}"),
        ),
        plain,
    ]
}

fn representation_checks(
    spec: &GroupSpec,
    group: &PermutationGroup,
    d: usize,
    bounds: Bounds,
) -> CliResult<(Vec<Check>, Option<Vec<u64>>)> {
    let table = character_table_bounded(group, bounds.group_order)?;
    let fs = frobenius_schur_indicators(group, &table)?;
    let m = ambient_multiplicities(group, &table, d)?;
    let sum_m = m.total();
    let dn = BigUint::from(d).pow(group.degree() as u32);
    let residual = table.row_orthogonality_residual();
    let mut checks = vec![
        Check::new(
            "character orthogonality",
            residual < TOLERANCE,
            format!("{} irreps, residual {residual:.1e}", table.irreps().len()),
        ),
        Check::new(
            "Frobenius-Schur indicators",
            true,
            format!("FS = {}", output::list(&fs.values)),
        ),
        Check::equal("Σ m_μ dim_μ == d^n", m.weighted_dimension(), dn),
        Check::equal(
            "Pólya N_a == Σm_μ²",
            count_ancilla_polya(group, d)?,
            m.sum_of_squares(),
        ),
    ];
    let formula = count_quantum_totally_orthogonal(group, d, false)?;
    if fs.all_real() {
        checks.push(Check::equal(
            "real-irrep N_q == Σm_μ",
            formula,
            sum_m.clone(),
        ));
    } else {
        checks.push(Check::new(
            "real-irrep N_q inapplicable",
            true,
            format!(
                "FS = {}; formula gives {formula}, Σm_μ = {sum_m}",
                output::list(&fs.values)
            ),
        ));
    }
    if let GroupSpec::Named { kind, n } = spec {
        if let Some(q) = count_named(*kind, *n, d)?.quantum {
            checks.push(Check::equal(
                "closed-form N_q == Σm_μ",
                q.value,
                sum_m.clone(),
            ));
        }
    }
    let classical = count_classical_burnside(group, d)?;
    let ancilla = count_ancilla_polya(group, d)?;
    checks.push(Check::new(
        "N_c <= N_q <= N_a",
        classical <= sum_m && sum_m <= ancilla,
        format!("{classical} <= {sum_m} <= {ancilla}"),
    ));
    checks.extend(square_root_checks(group, &table, &fs));

    // multiplicities keyed by μ where χ(r) = ω_n^μ, for comparison with the cyclic basis
    let by_mu = if spec.kind() == GroupKind::Cyclic {
        let n = group.degree();
        let r = group
            .index_of(&Permutation::rotation(n))
            .expect("cyclic groups contain the rotation");
        let mut by_mu = vec![0u64; n];
        for (irrep, &mult) in m.multiplicities.iter().enumerate() {
            let chi = table.character(irrep, r);
            let mu = (0..n)
                .find(|&mu| (chi - root_of_unity(n, mu as i64)).norm() < 1e-6)
                .expect("cyclic characters are roots of unity");
            by_mu[mu] += mult;
        }
        Some(by_mu)
    } else {
        None
    };
    Ok((checks, by_mu))
}

fn cyclic_checks(
    group: &PermutationGroup,
    d: usize,
    bounds: Bounds,
    table_multiplicities: &[u64],
) -> CliResult<Vec<Check>> {
    let n = group.degree();
    let basis = message_basis_cyclic_bounded(n, d, bounds.states)?;
    let mut checks = Vec::new();
    let gram = basis.gram_residual();
    checks.push(Check::new(
        "message basis orthonormal",
        gram < TOLERANCE,
        format!("{} states, Gram residual {gram:.1e}", basis.len()),
    ));
    let built: Vec<u64> = basis.multiplicities().iter().map(|&m| m as u64).collect();
    checks.push(Check::new(
        "basis m_μ == character-table m_μ",
        built == table_multiplicities,
        format!(
            "{} == {}",
            output::list(&built),
            output::list(table_multiplicities)
        ),
    ));
    let mut phase: f64 = 0.0;
    for mu in 0..n {
        for k in 0..n {
            phase = phase.max(sector_phase_residual(&basis, mu, k)?);
        }
    }
    checks.push(Check::new(
        "sector phase invariance",
        phase < 1e-12,
        format!("max residual {phase:.1e}"),
    ));
    let mut spec = ChannelSpec::exhaustive(group.clone());
    let report = verify_zero_error(&mut spec, &basis)?;
    checks.push(Check::new(
        "quantum zero-error",
        report.certified(),
        format!(
            "{} messages x {} elements, {} failures, max off-diagonal overlap {:.1e}",
            report.messages_tested,
            report.group_elements_tested,
            report.failures.len(),
            report.max_offdiag_overlap
        ),
    ));
    match check_dense_coding_work(&basis, bounds) {
        Ok(()) => {
            let summary = dense_coding_exhaustive(&basis)?;
            let sum_sq: usize = basis.multiplicities().iter().map(|m| m * m).sum();
            checks.push(Check::new(
                "dense coding round trips == Σm_μ²",
                summary.round_tripped == sum_sq && summary.triples == sum_sq,
                format!("{} == {sum_sq}", summary.round_tripped),
            ));
        }
        Err(CliError::Bound(_)) => {
            checks.push(Check::skipped(
                "dense coding round trips == Σm_μ²",
                "workload too large",
            ));
        }
        Err(e) => return Err(e),
    }
    Ok(checks)
}

pub fn run_suite(spec: &GroupSpec, d: usize, bounds: Bounds) -> CliResult<Vec<Check>> {
    let group = spec.build(bounds)?;
    let mut checks = structural_checks(&group, d, bounds)?;
    checks.extend(closed_form_checks(spec, &group, d)?);
    let (rep_checks, by_mu) = representation_checks(spec, &group, d, bounds)?;
    checks.extend(rep_checks);
    if let Some(by_mu) = by_mu {
        checks.extend(cyclic_checks(&group, d, bounds, &by_mu)?);
    }
    Ok(checks)
}

pub fn run(args: &CommonArgs) -> CliResult<()> {
    let ctx = Context::new(args)?;
    let checks = run_suite(&ctx.spec, ctx.d, ctx.bounds)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let text = match args.format {
        Format::Table => {
            let mut text = format!("verify {} d={}\n", ctx.spec, ctx.d);
            for check in &checks {
                text += &check.line();
                text.push('\n');
            }
            text += &format!("{} checks, {failed} failed\n", checks.len());
            text
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    vec![status.to_string(), c.name.clone(), c.detail.clone()]
                })
                .collect();
            output::csv(&["status", "check", "detail"], &rows)?
        }
        Format::Json => {
            let mut map = ctx.json_header();
            let list: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            map.insert("checks".into(), list.into());
            map.insert("passed".into(), (failed == 0).into());
            output::json(&Value::Object(map))
        }
    };
    output::emit(&text, args.out.as_deref())?;
    if failed > 0 {
        return Err(CliError::Verification(format!("{failed} checks failed")));
    }
    Ok(())
}
