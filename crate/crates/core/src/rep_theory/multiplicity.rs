use num_bigint::BigUint;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::perm_core::{checked_state_count, orbits_bounded, PermutationGroup};
use crate::rep_theory::character_table::{character_table, CharacterTable};

/// Multiplicity residuals above this are a hard error.
pub const MULTIPLICITY_TOLERANCE: f64 = 1e-6;

// d^n must stay exactly representable in f64
const EXACT_FLOAT_LIMIT: u64 = 1 << 52;

/// Multiplicities `m_μ` of each irrep in the permutation representation on
/// `(C^d)^{⊗n}`, in character-table order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    pub multiplicities: Vec<u64>,
    pub dimensions: Vec<usize>,
    /// `by_orbit[j][μ] = m_{j,μ}`, orbits in representative order.
    pub by_orbit: Option<Vec<Vec<u64>>>,
}

impl MultiplicityVector {
    /// `Σ_μ m_μ`.
    pub fn total(&self) -> BigUint {
        self.multiplicities.iter().map(|&m| BigUint::from(m)).sum()
    }

    /// `Σ_μ m_μ²`.
    pub fn sum_of_squares(&self) -> BigUint {
        self.multiplicities
            .iter()
            .map(|&m| BigUint::from(m) * m)
            .sum()
    }

    /// `Σ_μ m_μ dim_μ`, which must equal `d^n`.
    pub fn weighted_dimension(&self) -> BigUint {
        self.multiplicities
            .iter()
            .zip(&self.dimensions)
            .map(|(&m, &dim)| BigUint::from(m) * dim)
            .sum()
    }
}

fn round_multiplicity(value: Complex64) -> Result<u64> {
    let rounded = value.re.round();
    let residual = (value - Complex64::new(rounded, 0.0)).norm();
    if residual > MULTIPLICITY_TOLERANCE || rounded < 0.0 {
        return Err(Error::Residual {
            what: "irrep multiplicity",
            residual,
            tolerance: MULTIPLICITY_TOLERANCE,
        });
    }
    Ok(rounded as u64)
}

/// `m_μ = (1/|G|) Σ_σ d^{c(σ)} conj(χ_μ(σ))`.
pub fn ambient_multiplicities(
    group: &PermutationGroup,
    table: &CharacterTable,
    d: usize,
) -> Result<MultiplicityVector> {
    checked_state_count(group.degree(), d, EXACT_FLOAT_LIMIT)?;
    let order = group.order() as f64;
    let mut multiplicities = Vec::with_capacity(table.irreps().len());
    for mu in 0..table.irreps().len() {
        let sum: Complex64 = table
            .classes()
            .iter()
            .map(|class| {
                let fixed = (d as f64).powi(class.representative.cycle_count() as i32);
                let chi = table.character(mu, class.member_indices[0]);
                chi.conj() * fixed * class.size as f64
            })
            .sum();
        multiplicities.push(round_multiplicity(sum / order)?);
    }
    let dimensions = table.irreps().iter().map(|i| i.dimension).collect();
    Ok(MultiplicityVector {
        multiplicities,
        dimensions,
        by_orbit: None,
    })
}

/// As [`ambient_multiplicities`], with the per-orbit breakdown
/// `m_{j,μ} = (1/|G|) Σ_σ |Fix_{O_j}(σ)| conj(χ_μ(σ))` filled in.
pub fn ambient_multiplicities_by_orbit(
    group: &PermutationGroup,
    table: &CharacterTable,
    d: usize,
    state_limit: u64,
) -> Result<MultiplicityVector> {
    let mut vector = ambient_multiplicities(group, table, d)?;
    let orbits = orbits_bounded(group, d, state_limit)?;
    let order = group.order() as f64;
    let mut by_orbit = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let fixed: Vec<f64> = group
            .elements()
            .iter()
            .map(|sigma| {
                orbit
                    .members
                    .iter()
                    .filter(|x| x.permuted(sigma).map(|y| &y == *x).unwrap_or(false))
                    .count() as f64
            })
            .collect();
        let row = (0..table.irreps().len())
            .map(|mu| {
                let sum: Complex64 = fixed
                    .iter()
                    .enumerate()
                    .map(|(e, &f)| table.character(mu, e).conj() * f)
                    .sum();
                round_multiplicity(sum / order)
            })
            .collect::<Result<Vec<_>>>()?;
        by_orbit.push(row);
    }
    vector.by_orbit = Some(by_orbit);
    Ok(vector)
}

/// `Σ_μ m_μ`, computed from the character table.
pub fn nq_oracle(group: &PermutationGroup, d: usize) -> Result<BigUint> {
    let table = character_table(group)?;
    Ok(ambient_multiplicities(group, &table, d)?.total())
}

/// `Σ_μ m_μ²`, computed from the character table.
pub fn na_oracle(group: &PermutationGroup, d: usize) -> Result<BigUint> {
    let table = character_table(group)?;
    Ok(ambient_multiplicities(group, &table, d)?.sum_of_squares())
}
