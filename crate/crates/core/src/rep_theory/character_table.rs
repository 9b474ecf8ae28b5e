use std::cmp::Ordering;
use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::perm_core::{ConjugacyClass, PermutationGroup};
use crate::rep_theory::abelian::abelian_character_turns;

/// Default cap on `|G|` for character-table construction.
pub const DEFAULT_CHARACTER_TABLE_LIMIT: usize = 5040;

pub(crate) const TABLE_TOLERANCE: f64 = 1e-9;
const MAX_ATTEMPTS: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct Irrep {
    pub label: String,
    pub dimension: usize,
    /// `χ_μ` evaluated on each conjugacy class, in table class order.
    pub characters: Vec<Complex64>,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    classes: Vec<ConjugacyClass>,
    irreps: Vec<Irrep>,
    group_order: usize,
    class_of: Vec<usize>,
}

impl CharacterTable {
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Class position of the group element with index `element`.
    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// `χ_μ(σ)` for the group element with index `element`.
    pub fn character(&self, irrep: usize, element: usize) -> Complex64 {
        self.irreps[irrep].characters[self.class_of[element]]
    }

    /// `Σ_μ χ_μ(C)` for each class.
    pub fn character_sums(&self) -> Vec<Complex64> {
        (0..self.classes.len())
            .map(|k| self.irreps.iter().map(|irr| irr.characters[k]).sum())
            .collect()
    }

    /// Largest deviation of the class-weighted character inner products from `δ_{μν}`.
    pub fn row_orthogonality_residual(&self) -> f64 {
        let g = self.group_order as f64;
        let mut worst: f64 = 0.0;
        for (a, mu) in self.irreps.iter().enumerate() {
            for (b, nu) in self.irreps.iter().enumerate() {
                let inner: Complex64 = self
                    .classes
                    .iter()
                    .zip(mu.characters.iter().zip(&nu.characters))
                    .map(|(class, (x, y))| x * y.conj() * class.size as f64)
                    .sum::<Complex64>()
                    / g;
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((inner - target).norm());
            }
        }
        worst
    }

    fn validate(&self) -> Result<()> {
        if self.irreps.len() != self.classes.len() {
            return Err(Error::Residual {
                what: "irrep count vs class count",
                residual: (self.irreps.len() as f64 - self.classes.len() as f64).abs(),
                tolerance: 0.0,
            });
        }
        let dim_sq: usize = self.irreps.iter().map(|i| i.dimension * i.dimension).sum();
        if dim_sq != self.group_order {
            return Err(Error::Residual {
                what: "sum of squared dimensions",
                residual: (dim_sq as f64 - self.group_order as f64).abs(),
                tolerance: 0.0,
            });
        }
        let residual = self.row_orthogonality_residual();
        if residual > TABLE_TOLERANCE {
            return Err(Error::Residual {
                what: "character row orthogonality",
                residual,
                tolerance: TABLE_TOLERANCE,
            });
        }
        Ok(())
    }
}

pub fn character_table(group: &PermutationGroup) -> Result<CharacterTable> {
    character_table_bounded(group, DEFAULT_CHARACTER_TABLE_LIMIT)
}

pub fn character_table_bounded(group: &PermutationGroup, limit: usize) -> Result<CharacterTable> {
    if group.order() > limit {
        return Err(Error::GroupTooLarge { limit });
    }
    let classes = group.conjugacy_classes();
    let mut class_of = vec![0; group.order()];
    for (k, class) in classes.iter().enumerate() {
        for &i in &class.member_indices {
            class_of[i] = k;
        }
    }
    let irreps = if group.is_abelian() {
        abelian_irreps(group, &class_of)
    } else {
        class_algebra_irreps(group, &classes, &class_of)?
    };
    let table = CharacterTable {
        classes,
        irreps,
        group_order: group.order(),
        class_of,
    };
    table.validate()?;
    Ok(table)
}

fn abelian_irreps(group: &PermutationGroup, class_of: &[usize]) -> Vec<Irrep> {
    let turns = abelian_character_turns(group);
    turns
        .into_iter()
        .enumerate()
        .map(|(j, row)| {
            let mut characters = vec![Complex64::new(0.0, 0.0); row.len()];
            for (element, turn) in row.into_iter().enumerate() {
                let angle = TAU * (*turn.numer() as f64) / (*turn.denom() as f64);
                characters[class_of[element]] = Complex64::from_polar(1.0, angle);
            }
            Irrep {
                label: format!("χ{j}"),
                dimension: 1,
                characters,
            }
        })
        .collect()
}

/// Central characters are the common eigenvectors of the class-multiplication
/// matrices `(M_i)_{jk} = a_{ijk}`, where `K_i K_j = Σ_k a_{ijk} K_k`. A random real
/// combination of the `M_i` has simple spectrum with probability one; each
/// eigenvector `w` (scaled so `w_e = 1`) gives `χ(C_k) = dim·w_k/|C_k|` with
/// `dim² = |G| / Σ_k |w_k|²/|C_k|`.
fn class_algebra_irreps(
    group: &PermutationGroup,
    classes: &[ConjugacyClass],
    class_of: &[usize],
) -> Result<Vec<Irrep>> {
    let r = classes.len();
    let mut structure = vec![vec![vec![0.0f64; r]; r]; r];
    for (k, target) in classes.iter().enumerate() {
        let z = &target.representative;
        for (i, class) in classes.iter().enumerate() {
            for x in &class.members {
                let y = x.inverse().compose(z);
                let j = class_of[group.index_of(&y).expect("group is closed")];
                structure[i][j][k] += 1.0;
            }
        }
    }
    let class_matrices: Vec<DMatrix<Complex64>> = structure
        .iter()
        .map(|a_i| DMatrix::from_fn(r, r, |j, k| Complex64::new(a_i[j][k], 0.0)))
        .collect();

    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = StdRng::seed_from_u64(0x00c1_a55e_5eed + attempt as u64);
        let coefficients: Vec<f64> = (0..r).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if let Some(irreps) = split_once(group, classes, &class_matrices, &coefficients) {
            return Ok(irreps);
        }
    }
    Err(Error::NumericalDegeneracy {
        attempts: MAX_ATTEMPTS,
    })
}

fn split_once(
    group: &PermutationGroup,
    classes: &[ConjugacyClass],
    class_matrices: &[DMatrix<Complex64>],
    coefficients: &[f64],
) -> Option<Vec<Irrep>> {
    let r = classes.len();
    let mut combined = DMatrix::<Complex64>::zeros(r, r);
    for (m, &c) in class_matrices.iter().zip(coefficients) {
        combined += m * Complex64::new(c, 0.0);
    }
    let eigenvalues = combined.clone().schur().eigenvalues()?;
    let scale = eigenvalues.iter().map(|l| l.norm()).fold(1.0, f64::max);
    for a in 0..r {
        for b in a + 1..r {
            if (eigenvalues[a] - eigenvalues[b]).norm() < 1e-6 * scale {
                return None;
            }
        }
    }

    let order = group.order() as f64;
    let mut irreps = Vec::with_capacity(r);
    for lambda in eigenvalues.iter() {
        let shifted = &combined - DMatrix::<Complex64>::identity(r, r) * *lambda;
        let svd = shifted.svd(false, true);
        let v_t = svd.v_t?;
        let (null_row, _) = svd
            .singular_values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(Ordering::Equal))?;
        let v: Vec<Complex64> = v_t.row(null_row).iter().map(|z| z.conj()).collect();
        if v[0].norm() < 1e-12 {
            return None;
        }
        let w: Vec<Complex64> = v.iter().map(|z| z / v[0]).collect();

        // w must be a common eigenvector of every class matrix with eigenvalue w_i
        let w_vec = nalgebra::DVector::from_vec(w.clone());
        for (i, m) in class_matrices.iter().enumerate() {
            let residual = (m * &w_vec - &w_vec * w[i]).camax();
            let tol = 1e-8 * (1.0 + classes[i].size as f64);
            if residual > tol {
                return None;
            }
        }

        let norm: f64 = w
            .iter()
            .zip(classes)
            .map(|(wk, c)| wk.norm_sqr() / c.size as f64)
            .sum();
        let dim_f = (order / norm).sqrt();
        let dimension = dim_f.round();
        if (dim_f - dimension).abs() > 1e-6 || dimension < 1.0 {
            return None;
        }
        let characters = w
            .iter()
            .zip(classes)
            .map(|(wk, c)| wk * dimension / c.size as f64)
            .collect();
        irreps.push(Irrep {
            label: String::new(),
            dimension: dimension as usize,
            characters,
        });
    }
    irreps.sort_by(compare_irreps);
    for (j, irrep) in irreps.iter_mut().enumerate() {
        irrep.label = format!("χ{j}");
    }
    Some(irreps)
}

/// Orders by dimension, then by character values with larger real (then imaginary)
/// parts first, so the trivial character leads.
fn compare_irreps(a: &Irrep, b: &Irrep) -> Ordering {
    let quantize = |x: f64| (x * 1e6).round() as i64;
    a.dimension.cmp(&b.dimension).then_with(|| {
        for (x, y) in a.characters.iter().zip(&b.characters) {
            let ord = quantize(y.re)
                .cmp(&quantize(x.re))
                .then(quantize(y.im).cmp(&quantize(x.im)));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    })
}
