use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::perm_core::PermutationGroup;
use crate::rep_theory::character_table::{character_table, CharacterTable, TABLE_TOLERANCE};

/// Frobenius–Schur indicators `ν_μ = (1/|G|) Σ_σ χ_μ(σ²)`, rounded to `{+1, 0, −1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FsIndicators {
    pub values: Vec<i32>,
    pub raw: Vec<Complex64>,
}

impl FsIndicators {
    pub fn all_real(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }
}

pub fn frobenius_schur_indicators(
    group: &PermutationGroup,
    table: &CharacterTable,
) -> Result<FsIndicators> {
    let squares = group.square_indices();
    let order = group.order() as f64;
    let mut values = Vec::with_capacity(table.irreps().len());
    let mut raw = Vec::with_capacity(table.irreps().len());
    for mu in 0..table.irreps().len() {
        let sum: Complex64 = squares.iter().map(|&sq| table.character(mu, sq)).sum();
        let nu = sum / order;
        let rounded = nu.re.round();
        let residual = (nu - Complex64::new(rounded, 0.0)).norm();
        if residual > TABLE_TOLERANCE || !(-1.0..=1.0).contains(&rounded) {
            return Err(Error::Residual {
                what: "Frobenius-Schur indicator",
                residual,
                tolerance: TABLE_TOLERANCE,
            });
        }
        values.push(rounded as i32);
        raw.push(nu);
    }
    Ok(FsIndicators { values, raw })
}

/// True when every irrep of `G` is realizable over the reals.
pub fn is_totally_orthogonal(group: &PermutationGroup) -> Result<bool> {
    let table = character_table(group)?;
    Ok(frobenius_schur_indicators(group, &table)?.all_real())
}
