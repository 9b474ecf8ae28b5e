use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm_core::{permute_index, ColoredString, Permutation};

/// Sparse state on `(C^d)^{⊗n}`, keyed by base-`d` string index.
///
/// Keys iterate in lexicographic order of basis strings.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    d: usize,
    amplitudes: BTreeMap<u64, Complex64>,
}

/// One amplitude of an exported state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmplitudeRecord {
    pub basis_string: String,
    pub re: f64,
    pub im: f64,
}

impl StateVector {
    pub fn zero(n: usize, d: usize) -> Self {
        StateVector {
            n,
            d,
            amplitudes: BTreeMap::new(),
        }
    }

    pub fn basis(x: &ColoredString) -> Self {
        let mut state = StateVector::zero(x.len(), x.alphabet());
        state.amplitudes.insert(x.index(), Complex64::new(1.0, 0.0));
        state
    }

    pub fn from_amplitudes(
        n: usize,
        d: usize,
        amplitudes: impl IntoIterator<Item = (u64, Complex64)>,
    ) -> Self {
        let mut state = StateVector::zero(n, d);
        for (index, amp) in amplitudes {
            *state
                .amplitudes
                .entry(index)
                .or_insert(Complex64::new(0.0, 0.0)) += amp;
        }
        state
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn amplitude(&self, index: u64) -> Complex64 {
        self.amplitudes
            .get(&index)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn amplitudes(&self) -> impl Iterator<Item = (u64, Complex64)> + '_ {
        self.amplitudes.iter().map(|(&i, &a)| (i, a))
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.amplitudes.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(Complex64::norm_sqr).sum()
    }

    pub fn normalized(&self) -> Result<StateVector> {
        let norm = self.norm_sqr().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidParameter(
                "cannot normalize the zero vector".into(),
            ));
        }
        Ok(self.scaled(Complex64::new(1.0 / norm, 0.0)))
    }

    pub fn scaled(&self, factor: Complex64) -> StateVector {
        StateVector {
            n: self.n,
            d: self.d,
            amplitudes: self
                .amplitudes
                .iter()
                .map(|(&i, &a)| (i, a * factor))
                .collect(),
        }
    }

    fn check_same_space(&self, other: &StateVector) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        self.check_same_space(other)?;
        let (small, large, conj_small) = if self.amplitudes.len() <= other.amplitudes.len() {
            (self, other, true)
        } else {
            (other, self, false)
        };
        let mut sum = Complex64::new(0.0, 0.0);
        for (i, &a) in &small.amplitudes {
            if let Some(&b) = large.amplitudes.get(i) {
                sum += if conj_small {
                    a.conj() * b
                } else {
                    b.conj() * a
                };
            }
        }
        Ok(sum)
    }

    /// `U(σ)|ψ⟩` with `U(σ)|x⟩ = |σx⟩`. Amplitudes move; none are recomputed.
    pub fn permuted(&self, sigma: &Permutation) -> Result<StateVector> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: sigma.degree(),
            });
        }
        let d = self.d as u64;
        Ok(StateVector {
            n: self.n,
            d: self.d,
            amplitudes: self
                .amplitudes
                .iter()
                .map(|(&i, &a)| (permute_index(sigma, i, self.n, d), a))
                .collect(),
        })
    }

    /// Largest `|a_i − b_i|` over the union of supports.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.amplitudes
            .keys()
            .chain(other.amplitudes.keys())
            .map(|&i| (self.amplitude(i) - other.amplitude(i)).norm())
            .fold(0.0, f64::max)
    }

    /// Amplitudes in lexicographic basis-string order, zeros omitted.
    pub fn export(&self) -> Vec<AmplitudeRecord> {
        self.amplitudes
            .iter()
            .filter(|(_, a)| a.norm() > 0.0)
            .map(|(&i, a)| AmplitudeRecord {
                basis_string: ColoredString::from_index(i, self.n, self.d).to_string(),
                re: a.re,
                im: a.im,
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Complex64> {
        let dim = (self.d as u64).pow(self.n as u32) as usize;
        let mut out = vec![Complex64::new(0.0, 0.0); dim];
        for (&i, &a) in &self.amplitudes {
            out[i as usize] = a;
        }
        out
    }
}
