use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::perm_core::{checked_state_count, permute_index, PermutationGroup};
use crate::rep_theory::character_table::CharacterTable;

/// Default cap on `d^n` for projector construction.
pub const DEFAULT_PROJECTOR_LIMIT: u64 = 4096;

const PRUNE: f64 = 1e-14;

/// Square complex matrix stored as sorted sparse rows.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    dim: usize,
    rows: Vec<Vec<(usize, Complex64)>>,
}

impl SparseMatrix {
    fn from_maps(dim: usize, maps: Vec<BTreeMap<usize, Complex64>>) -> Self {
        let rows = maps
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| v.norm() > PRUNE).collect())
            .collect();
        SparseMatrix { dim, rows }
    }

    pub fn identity(dim: usize) -> Self {
        SparseMatrix {
            dim,
            rows: (0..dim)
                .map(|i| vec![(i, Complex64::new(1.0, 0.0))])
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.rows[row]
            .binary_search_by_key(&col, |&(c, _)| c)
            .map_or(Complex64::new(0.0, 0.0), |pos| self.rows[row][pos].1)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut maps = vec![BTreeMap::new(); self.dim];
        for (i, row) in self.rows.iter().enumerate() {
            for &(k, a) in row {
                for &(j, b) in &other.rows[k] {
                    *maps[i].entry(j).or_insert(Complex64::new(0.0, 0.0)) += a * b;
                }
            }
        }
        SparseMatrix::from_maps(self.dim, maps)
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut maps: Vec<BTreeMap<usize, Complex64>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().collect())
            .collect();
        for (i, row) in other.rows.iter().enumerate() {
            for &(j, v) in row {
                *maps[i].entry(j).or_insert(Complex64::new(0.0, 0.0)) += v;
            }
        }
        SparseMatrix::from_maps(self.dim, maps)
    }

    pub fn adjoint(&self) -> SparseMatrix {
        let mut maps = vec![BTreeMap::new(); self.dim];
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, v) in row {
                maps[j].insert(i, v.conj());
            }
        }
        SparseMatrix::from_maps(self.dim, maps)
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &SparseMatrix) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            let mut cols: Vec<usize> = self.rows[i].iter().map(|e| e.0).collect();
            cols.extend(other.rows[i].iter().map(|e| e.0));
            for j in cols {
                worst = worst.max((self.get(i, j) - other.get(i, j)).norm());
            }
        }
        worst
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&(j, a)| a * v[j]).sum())
            .collect()
    }
}

/// `P_μ = (dim_μ/|G|) Σ_σ conj(χ_μ(σ)) U(σ)`, the projector onto the isotypic
/// component of irrep `μ` in `(C^d)^{⊗n}`.
pub fn isotypic_projector(
    group: &PermutationGroup,
    table: &CharacterTable,
    d: usize,
    irrep: usize,
) -> Result<SparseMatrix> {
    isotypic_projector_bounded(group, table, d, irrep, DEFAULT_PROJECTOR_LIMIT)
}

pub fn isotypic_projector_bounded(
    group: &PermutationGroup,
    table: &CharacterTable,
    d: usize,
    irrep: usize,
    limit: u64,
) -> Result<SparseMatrix> {
    let n = group.degree();
    let dim = checked_state_count(n, d, limit)? as usize;
    let count = table.irreps().len();
    if irrep >= count {
        return Err(Error::IndexOutOfRange {
            index: irrep,
            len: count,
        });
    }
    let scale = table.irreps()[irrep].dimension as f64 / group.order() as f64;
    let mut maps = vec![BTreeMap::new(); dim];
    for (e, sigma) in group.elements().iter().enumerate() {
        let weight = table.character(irrep, e).conj() * scale;
        // U(σ)|y⟩ = |σy⟩, so column y has its entry in row σ·y
        for y in 0..dim {
            let x = permute_index(sigma, y as u64, n, d as u64) as usize;
            *maps[x].entry(y).or_insert(Complex64::new(0.0, 0.0)) += weight;
        }
    }
    Ok(SparseMatrix::from_maps(dim, maps))
}
