use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::counting::cycle_index::{binomial, series_coefficient_nq};
use crate::counting::{Count, CountReport, Method};
use crate::error::{Error, Result};
use crate::perm_core::{make_named_group, GroupKind, PermutationGroup};
use crate::rep_theory::{
    ambient_multiplicities, character_table, character_table_bounded, frobenius_schur_indicators,
    CharacterTable, DEFAULT_CHARACTER_TABLE_LIMIT,
};

fn check_alphabet(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter("alphabet size must be >= 1".into()));
    }
    Ok(())
}

/// `(1/|G|) Σ_σ base^{exponent(σ)}`, tallied by exponent and divided exactly.
fn polya_average(
    group: &PermutationGroup,
    base: &BigUint,
    exponent: impl Fn(usize) -> usize,
) -> Result<BigUint> {
    let mut tally: BTreeMap<usize, usize> = BTreeMap::new();
    for sigma in group.elements() {
        *tally.entry(exponent(sigma.cycle_count())).or_insert(0) += 1;
    }
    let numerator: BigUint = tally
        .into_iter()
        .map(|(e, count)| base.pow(e as u32) * count)
        .sum();
    exact_div(numerator, group.order())
}

fn exact_div(numerator: BigUint, order: usize) -> Result<BigUint> {
    let (q, r) = numerator.div_rem(&BigUint::from(order));
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            numerator: numerator.to_string(),
            order,
        });
    }
    Ok(q)
}

/// `N_c = (1/|G|) Σ_σ d^{c(σ)}`: the number of orbits on strings.
pub fn count_classical_burnside(group: &PermutationGroup, d: usize) -> Result<BigUint> {
    check_alphabet(d)?;
    polya_average(group, &BigUint::from(d), |c| c)
}

/// `N_a = (1/|G|) Σ_σ d^{2c(σ)}`.
pub fn count_ancilla_polya(group: &PermutationGroup, d: usize) -> Result<BigUint> {
    check_alphabet(d)?;
    polya_average(group, &BigUint::from(d), |c| 2 * c)
}

/// `N_q = (1/|G|) Σ_σ d^{c(σ²)}`, valid when every irrep of `G` is real.
///
/// With `certify`, the Frobenius–Schur indicators are computed first and a group
/// with any indicator other than `+1` is rejected.
pub fn count_quantum_totally_orthogonal(
    group: &PermutationGroup,
    d: usize,
    certify: bool,
) -> Result<BigUint> {
    check_alphabet(d)?;
    if certify {
        let table = character_table(group)?;
        let indicators = frobenius_schur_indicators(group, &table)?;
        if !indicators.all_real() {
            return Err(Error::NotTotallyOrthogonal {
                indicators: indicators.values,
            });
        }
    }
    let base = BigUint::from(d);
    let mut numerator = BigUint::zero();
    for sigma in group.elements() {
        numerator += base.pow(sigma.square().cycle_count() as u32);
    }
    exact_div(numerator, group.order())
}

/// `Σ_{k=0}^{n-1} base^{gcd(step·k, n)}`.
fn rotation_sum(n: usize, base: &BigUint, step: usize) -> BigUint {
    (0..n).map(|k| base.pow((step * k).gcd(&n) as u32)).sum()
}

fn check_size(n: usize, d: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    check_alphabet(d)
}

/// Necklace counts for `C_n`: `N_c`, `N_q = d^n`, `N_a` from `c(r^k) = gcd(k, n)`.
pub fn count_cyclic(n: usize, d: usize) -> Result<CountReport> {
    check_size(n, d)?;
    let base = BigUint::from(d);
    let square = &base * &base;
    let method = Method::CyclicClosedForm;
    Ok(CountReport {
        n,
        d,
        classical: Count::new(exact_div(rotation_sum(n, &base, 1), n)?, method),
        quantum: Some(Count::new(base.pow(n as u32), method)),
        ancilla: Count::new(exact_div(rotation_sum(n, &square, 1), n)?, method),
        quantum_note: None,
    })
}

/// `(1/2n)[Σ_k base^{gcd(k,n)} + f(n)]` with the reflection term `f(n)`.
fn bracelets(n: usize, base: &BigUint) -> Result<BigUint> {
    let reflections = if n.is_multiple_of(2) {
        base.pow((n / 2) as u32) * (base + 1u32) * (n / 2)
    } else {
        base.pow(n.div_ceil(2) as u32) * n
    };
    exact_div(rotation_sum(n, base, 1) + reflections, 2 * n)
}

/// Bracelet counts for `D_n`. For `n < 3` the dihedral generators act through a
/// smaller image group, and the generic sums over that group are used.
pub fn count_dihedral(n: usize, d: usize) -> Result<CountReport> {
    check_size(n, d)?;
    if n < 3 {
        let group = make_named_group(GroupKind::Dihedral, n)?;
        return Ok(CountReport {
            n,
            d,
            classical: Count::new(count_classical_burnside(&group, d)?, Method::Burnside),
            quantum: Some(Count::new(
                count_quantum_totally_orthogonal(&group, d, true)?,
                Method::TotallyOrthogonal,
            )),
            ancilla: Count::new(count_ancilla_polya(&group, d)?, Method::PolyaAncilla),
            quantum_note: None,
        });
    }
    let base = BigUint::from(d);
    let square = &base * &base;
    let step = if n.is_multiple_of(2) { 2 } else { 1 };
    // d^n/2 + (1/2n) Σ_k d^{gcd(b_n k, n)}, combined over 2n for exact division
    let quantum = exact_div(base.pow(n as u32) * n + rotation_sum(n, &base, step), 2 * n)?;
    let method = Method::DihedralClosedForm;
    Ok(CountReport {
        n,
        d,
        classical: Count::new(bracelets(n, &base)?, method),
        quantum: Some(Count::new(quantum, method)),
        ancilla: Count::new(bracelets(n, &square)?, method),
        quantum_note: None,
    })
}

/// Stars-and-bars `N_c`, `N_a`, and `N_q` by series-coefficient extraction.
pub fn count_symmetric(n: usize, d: usize) -> Result<CountReport> {
    check_size(n, d)?;
    let method = Method::SymmetricClosedForm;
    Ok(CountReport {
        n,
        d,
        classical: Count::new(binomial(n + d - 1, n), method),
        quantum: Some(Count::new(series_coefficient_nq(n, d)?, method)),
        ancilla: Count::new(binomial(n + d * d - 1, n), method),
        quantum_note: None,
    })
}

/// How `N_q` is obtained for a group with no closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantumStrategy {
    /// Use the real-irrep formula if certification succeeds; otherwise leave undefined.
    CertifiedOnly,
    /// As above, but fall back to the character-table multiplicity sum.
    OracleFallback,
}

/// Generic report for an explicit group: Burnside and Pólya sums, with `N_q` per
/// `strategy`.
pub fn count_group(
    group: &PermutationGroup,
    d: usize,
    strategy: QuantumStrategy,
) -> Result<CountReport> {
    count_group_bounded(group, d, strategy, DEFAULT_CHARACTER_TABLE_LIMIT)
}

/// As [`count_group`], with an explicit cap on `|G|` for the character table.
/// Past the cap `N_q` is reported as undefined rather than failing.
pub fn count_group_bounded(
    group: &PermutationGroup,
    d: usize,
    strategy: QuantumStrategy,
    table_limit: usize,
) -> Result<CountReport> {
    check_alphabet(d)?;
    let classical = Count::new(count_classical_burnside(group, d)?, Method::Burnside);
    let ancilla = Count::new(count_ancilla_polya(group, d)?, Method::PolyaAncilla);
    let (quantum, quantum_note) = match character_table_bounded(group, table_limit) {
        Ok(table) => quantum_from_table(group, &table, d, strategy)?,
        Err(e) if e.is_resource_bound() => {
            (None, Some(format!("character table unavailable: {e}")))
        }
        Err(e) => return Err(e),
    };
    Ok(CountReport {
        n: group.degree(),
        d,
        classical,
        quantum,
        ancilla,
        quantum_note,
    })
}

fn quantum_from_table(
    group: &PermutationGroup,
    table: &CharacterTable,
    d: usize,
    strategy: QuantumStrategy,
) -> Result<(Option<Count>, Option<String>)> {
    let indicators = frobenius_schur_indicators(group, table)?;
    if indicators.all_real() {
        let value = count_quantum_totally_orthogonal(group, d, false)?;
        return Ok((Some(Count::new(value, Method::TotallyOrthogonal)), None));
    }
    if strategy == QuantumStrategy::OracleFallback {
        let m = ambient_multiplicities(group, table, d)?;
        return Ok((Some(Count::new(m.total(), Method::Oracle)), None));
    }
    let note = format!(
        "group is not totally orthogonal (Frobenius-Schur indicators {:?}); \
         rerun with the character-table oracle",
        indicators.values
    );
    Ok((None, Some(note)))
}

/// Dispatches named kinds to their closed forms.
pub fn count_named(kind: GroupKind, n: usize, d: usize) -> Result<CountReport> {
    match kind {
        GroupKind::Cyclic => count_cyclic(n, d),
        GroupKind::Dihedral => count_dihedral(n, d),
        GroupKind::Symmetric => count_symmetric(n, d),
        GroupKind::Custom => Err(Error::InvalidParameter(
            "custom groups have no closed form; use count_group".into(),
        )),
    }
}
