//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod common;

use std::error::Error as StdError;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use permchan_core::channel_sim::{dense_coding_exhaustive, verify_zero_error, ChannelSpec};
use permchan_core::counting::{
    alternating_substitution, count_ancilla_polya, count_classical_burnside, count_cyclic,
    count_named, count_quantum_totally_orthogonal, cycle_index_of_group, cycle_index_symmetric,
    exact_to_asymptotic_ratio, series_coefficient_nq, AsymptoticLaw,
};
use permchan_core::encoding::{fkm_representatives, message_basis_cyclic};
use permchan_core::perm_core::{
    make_named_group, orbits, partitions, ColoredString, GroupKind, PermutationGroup,
};
use permchan_core::rep_theory::{
    ambient_multiplicities, character_table, frobenius_schur_indicators, is_totally_orthogonal,
};
use permchan_core::Error;

type Outcome = Result<String, Box<dyn StdError>>;
type Criterion = (&'static str, fn() -> Outcome);

const OVERLAP_TOLERANCE: f64 = 1e-9;
const CHARACTER_TOLERANCE: f64 = 1e-9;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+).into());
        }
    };
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), Box<dyn StdError>> {
    ensure!(elapsed < limit, "{what} took {elapsed:?}, limit {limit:?}");
    Ok(())
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn group(kind: GroupKind, n: usize) -> Result<PermutationGroup, Error> {
    make_named_group(kind, n)
}

/// `Σ m_μ` and `Σ m_μ²` from the character table.
fn oracle_sums(g: &PermutationGroup, d: usize) -> Result<(BigUint, BigUint), Error> {
    let table = character_table(g)?;
    let m = ambient_multiplicities(g, &table, d)?;
    Ok((m.total(), m.sum_of_squares()))
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let report = count_cyclic(4, 2)?;
    let quantum = report.quantum.as_ref().map(|q| q.value.clone());
    ensure!(
        (
            report.classical.value.clone(),
            quantum.clone(),
            report.ancilla.value.clone()
        ) == (big(6), Some(big(16)), big(70)),
        "counts {} {:?} {}",
        report.classical.value,
        quantum,
        report.ancilla.value
    );

    let expected: Vec<ColoredString> = ["0000", "0001", "0011", "0101", "0111", "1111"]
        .iter()
        .map(|s| ColoredString::parse(s, 2))
        .collect::<Result<_, _>>()?;
    let g = group(GroupKind::Cyclic, 4)?;
    let from_orbits: Vec<ColoredString> = orbits(&g, 2)?
        .into_iter()
        .map(|o| o.representative)
        .collect();
    ensure!(
        from_orbits == expected,
        "orbit representatives {from_orbits:?}"
    );
    ensure!(
        fkm_representatives(4, 2)? == expected,
        "FKM representatives differ"
    );

    let basis = message_basis_cyclic(4, 2)?;
    ensure!(
        basis.multiplicities() == [6, 3, 4, 3],
        "multiplicities {:?}",
        basis.multiplicities()
    );
    ensure!(
        basis.len() == common::GOLDEN_C4.len(),
        "{} states",
        basis.len()
    );
    for (entry, (mu, alpha, text)) in basis.entries().iter().zip(common::GOLDEN_C4) {
        ensure!(
            (entry.mu, entry.alpha) == (mu, alpha),
            "ordering at μ={mu} α={alpha}"
        );
        let diff = entry.state.max_abs_diff(&common::parse_ket_sum(text));
        ensure!(diff < 1e-12, "state μ={mu} α={alpha} off by {diff:e}");
    }
    within(start.elapsed(), Duration::from_secs(1), "worked example")?;
    Ok(format!(
        "C_4 d=2: 6/16/70, m = (6,3,4,3), 16 states match ({:?})",
        start.elapsed()
    ))
}

fn zero_error_certification() -> Outcome {
    let start = Instant::now();
    let cases: Vec<(usize, usize)> = (2..=8)
        .map(|n| (n, 2))
        .chain((2..=5).map(|n| (n, 3)))
        .collect();
    let mut trials = 0;
    let mut worst: f64 = 0.0;
    for &(n, d) in &cases {
        let basis = message_basis_cyclic(n, d)?;
        let mut spec = ChannelSpec::exhaustive(basis.group().clone());
        let report = verify_zero_error(&mut spec, &basis)?;
        ensure!(
            report.failures.is_empty(),
            "n={n} d={d}: {} failures",
            report.failures.len()
        );
        ensure!(
            report.max_offdiag_overlap <= OVERLAP_TOLERANCE,
            "n={n} d={d}: overlap {:e}",
            report.max_offdiag_overlap
        );
        ensure!(
            report.trials() == d.pow(n as u32) * n,
            "n={n} d={d}: incomplete sweep"
        );
        trials += report.trials();
        worst = worst.max(report.max_offdiag_overlap);
    }
    within(start.elapsed(), Duration::from_secs(30), "certification")?;
    Ok(format!(
        "{} cyclic cases, {trials} (message, σ) pairs, 0 failures, max overlap {worst:.1e} ({:?})",
        cases.len(),
        start.elapsed()
    ))
}

fn formula_oracle_agreement() -> Outcome {
    let mut checked = 0;
    let real_groups = (3..=6)
        .map(|n| (GroupKind::Dihedral, n))
        .chain((3..=5).map(|n| (GroupKind::Symmetric, n)));
    let all_groups = real_groups
        .clone()
        .chain((2..=8).map(|n| (GroupKind::Cyclic, n)));
    for d in [2, 3] {
        for (kind, n) in real_groups.clone() {
            let g = group(kind, n)?;
            let formula = count_quantum_totally_orthogonal(&g, d, true)?;
            let (total, _) = oracle_sums(&g, d)?;
            ensure!(
                formula == total,
                "{kind} n={n} d={d}: N_q {formula} vs Σm {total}"
            );
            checked += 1;
        }
        for (kind, n) in all_groups.clone() {
            let g = group(kind, n)?;
            let polya = count_ancilla_polya(&g, d)?;
            let (_, squares) = oracle_sums(&g, d)?;
            ensure!(
                polya == squares,
                "{kind} n={n} d={d}: N_a {polya} vs Σm² {squares}"
            );
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} exact comparisons of N_q with Σm and N_a with Σm²"
    ))
}

fn negative_control() -> Outcome {
    let mut details = Vec::new();
    for n in 3..=6 {
        let g = group(GroupKind::Cyclic, n)?;
        ensure!(
            !is_totally_orthogonal(&g)?,
            "C_{n} reported totally orthogonal"
        );
        let rejected = matches!(
            count_quantum_totally_orthogonal(&g, 2, true),
            Err(Error::NotTotallyOrthogonal { .. })
        );
        ensure!(rejected, "C_{n}: certified formula was not rejected");
        for d in [2, 3] {
            let formula = count_quantum_totally_orthogonal(&g, d, false)?;
            let (total, _) = oracle_sums(&g, d)?;
            ensure!(
                formula != total,
                "C_{n} d={d}: formula agrees with Σm ({total})"
            );
            if d == 2 {
                details.push(format!("C_{n}: {formula} ≠ {total}"));
            }
        }
    }
    let g = group(GroupKind::Cyclic, 4)?;
    let formula = count_quantum_totally_orthogonal(&g, 2, false)?;
    let (total, _) = oracle_sums(&g, 2)?;
    ensure!(
        (formula.clone(), total.clone()) == (big(10), big(16)),
        "C_4: {formula} vs {total}"
    );
    Ok(format!(
        "not totally orthogonal; d=2 {}",
        details.join(", ")
    ))
}

fn symmetric_identities() -> Outcome {
    for n in 0..=30 {
        for d in 1..=4 {
            let series = BigRational::from_integer(BigInt::from(series_coefficient_nq(n, d)?));
            let index = cycle_index_symmetric(n, &alternating_substitution(n, d))?;
            ensure!(
                series == index,
                "n={n} d={d}: series {series} vs cycle index {index}"
            );
        }
    }
    for n in 1..=7 {
        let g = group(GroupKind::Symmetric, n)?;
        for d in 1..=4 {
            let constant = vec![BigRational::from_integer(BigInt::from(d)); n];
            for a in [constant, alternating_substitution(n, d)] {
                let brute = cycle_index_of_group(&g, &a)?;
                let by_partition = cycle_index_symmetric(n, &a)?;
                ensure!(
                    brute == by_partition,
                    "S_{n} d={d}: {brute} vs {by_partition}"
                );
            }
            let burnside = BigRational::from_integer(count_classical_burnside(&g, d)?.into());
            let by_partition =
                cycle_index_symmetric(n, &vec![BigRational::from_integer(BigInt::from(d)); n])?;
            ensure!(burnside == by_partition, "S_{n} d={d}: Burnside differs");
        }
    }
    Ok("series = Z_{S_n} for n ≤ 30, d ≤ 4; element sums = partition sums for n ≤ 7".into())
}

fn hierarchy_and_asymptotics() -> Outcome {
    let mut tested = 0;
    for kind in [GroupKind::Cyclic, GroupKind::Dihedral, GroupKind::Symmetric] {
        for n in 2..=16 {
            for d in 2..=4 {
                let r = count_named(kind, n, d)?;
                ensure!(
                    r.strictly_ordered() && r.satisfies_hierarchy(),
                    "{kind} n={n} d={d}: N_c={} N_a={}",
                    r.classical.value,
                    r.ancilla.value
                );
                tested += 1;
            }
        }
    }
    let ratio = exact_to_asymptotic_ratio(AsymptoticLaw::CyclicNc, 30, 2)?
        .to_f64()
        .unwrap_or(f64::NAN);
    ensure!((ratio - 1.0).abs() < 0.01, "cyclic n=30 ratio {ratio}");
    for n in 1..=200usize {
        let ratio = exact_to_asymptotic_ratio(AsymptoticLaw::SymmetricNc, n, 2)?;
        let expected = BigRational::new(BigInt::from(n + 1), BigInt::from(n));
        ensure!(ratio == expected, "symmetric n={n} ratio {ratio}");
    }
    Ok(format!(
        "N_c < N_q < N_a on {tested} cases; cyclic n=30 ratio {ratio:.6}; symmetric ratio (n+1)/n for n ≤ 200"
    ))
}

fn dense_coding() -> Outcome {
    let start = Instant::now();
    let mut totals = Vec::new();
    for (n, expected) in [(2usize, 10usize), (3, 24), (4, 70)] {
        let basis = message_basis_cyclic(n, 2)?;
        let summary = dense_coding_exhaustive(&basis)?;
        let na = count_cyclic(n, 2)?.ancilla.value;
        let squares: usize = basis.multiplicities().iter().map(|m| m * m).sum();
        ensure!(
            summary.round_tripped == summary.triples,
            "n={n}: {} of {} triples round-tripped",
            summary.round_tripped,
            summary.triples
        );
        ensure!(
            summary.min_probability >= 1.0 - OVERLAP_TOLERANCE,
            "n={n}: probability {}",
            summary.min_probability
        );
        ensure!(
            summary.round_tripped == expected && squares == expected && na == big(expected as u64),
            "n={n}: {} triples, Σm² = {squares}, N_a = {na}",
            summary.round_tripped
        );
        totals.push(expected.to_string());
    }
    within(start.elapsed(), Duration::from_secs(10), "dense coding")?;
    Ok(format!(
        "C_2, C_3, C_4 round-trip {} triples with probability 1 ({:?})",
        totals.join("/"),
        start.elapsed()
    ))
}

fn lemma_suite() -> Outcome {
    let mut named = Vec::new();
    for n in 1..=6 {
        named.push((GroupKind::Cyclic, n));
        named.push((GroupKind::Dihedral, n));
        named.push((GroupKind::Symmetric, n));
    }
    for &(kind, n) in &named {
        let g = group(kind, n)?;
        for d in 1..=3 {
            let orbit_list = orbits(&g, d)?;
            for orbit in &orbit_list {
                ensure!(
                    orbit.size * g.stabilizer(&orbit.representative)?.order() == g.order(),
                    "{kind} n={n} d={d}: orbit-stabilizer fails at {}",
                    orbit.representative
                );
            }
            ensure!(
                count_classical_burnside(&g, d)? == big(orbit_list.len() as u64),
                "{kind} n={n} d={d}: Burnside vs orbit enumeration"
            );
            if n <= 4 {
                let states = (d as u64).pow(n as u32);
                for sigma in g.elements() {
                    let fixed = (0..states)
                        .map(|i| ColoredString::from_index(i, n, d))
                        .filter(|x| x.permuted(sigma).is_ok_and(|y| &y == x))
                        .count();
                    ensure!(
                        fixed == d.pow(sigma.cycle_count() as u32),
                        "{kind} n={n} d={d}: fixed points of {sigma:?}"
                    );
                }
            }
        }
        let roots = g.square_root_counts();
        let table = character_table(&g)?;
        let fs = frobenius_schur_indicators(&g, &table)?;
        for (k, class) in table.classes().iter().enumerate() {
            let first = roots[class.member_indices[0]];
            ensure!(
                class.member_indices.iter().all(|&i| roots[i] == first),
                "{kind} n={n}: square-root count not constant on a class"
            );
            let weighted: Complex64 = table
                .irreps()
                .iter()
                .zip(&fs.values)
                .map(|(irrep, &nu)| irrep.characters[k] * nu as f64)
                .sum();
            ensure!(
                (weighted - first as f64).norm() < CHARACTER_TOLERANCE,
                "{kind} n={n}: Σ ν χ = {weighted} vs {first}"
            );
        }
    }

    for n in 1..=6 {
        let g = group(GroupKind::Symmetric, n)?;
        let classes = g.conjugacy_classes();
        ensure!(classes.len() == partitions(n).len(), "S_{n}: class count");
        for class in classes {
            ensure!(
                big(class.size as u64) == class.partition.symmetric_class_size(),
                "S_{n}: |C_{}| = {}",
                class.partition,
                class.size
            );
        }
    }

    for (kind, n, holds) in [
        (GroupKind::Symmetric, 3, true),
        (GroupKind::Symmetric, 4, true),
        (GroupKind::Dihedral, 4, true),
        (GroupKind::Cyclic, 4, false),
    ] {
        let g = group(kind, n)?;
        let table = character_table(&g)?;
        let roots = g.square_root_counts();
        let agrees = table
            .character_sums()
            .iter()
            .zip(table.classes())
            .all(|(s, c)| (s - roots[c.member_indices[0]] as f64).norm() < CHARACTER_TOLERANCE);
        ensure!(
            agrees == holds,
            "{kind} n={n}: Σχ = n(σ) is {agrees}, expected {holds}"
        );
    }
    Ok(format!(
        "{} named groups; |C_λ| for S_n n ≤ 6; Σχ = n(σ) on S_3, S_4, D_4, fails on C_4",
        named.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("worked example", worked_example),
        ("zero-error certification", zero_error_certification),
        ("formula and oracle agreement", formula_oracle_agreement),
        ("negative control", negative_control),
        ("symmetric-group identities", symmetric_identities),
        ("hierarchy and asymptotics", hierarchy_and_asymptotics),
        ("dense coding", dense_coding),
        ("lemma suite", lemma_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {e}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
