use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::channel_sim::decode::ZERO_ERROR_TOLERANCE;
use crate::encoding::{message_basis_cyclic, root_of_unity, MessageBasis};
use crate::error::{Error, Result};
use crate::perm_core::{permute_index, Permutation};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// The clock–shift unitary `W_ab = X^a Z^b` on `C^m`, with `X|j⟩ = |j+1⟩` and
/// `Z|j⟩ = ω_m^j |j⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylOperator {
    pub a: usize,
    pub b: usize,
    pub matrix: DMatrix<Complex64>,
}

/// All `m²` Weyl operators, ordered by `a` and then `b`.
pub fn weyl_operators(m: usize) -> Vec<WeylOperator> {
    let mut out = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let mut matrix = DMatrix::from_element(m, m, ZERO);
            for j in 0..m {
                matrix[((j + a) % m, j)] = root_of_unity(m, (b * j) as i64);
            }
            out.push(WeylOperator { a, b, matrix });
        }
    }
    out
}

/// The `m_μ²` entangled codewords `(W_ab ⊗ I)|Φ_μ⟩` for one sector of a cyclic
/// message basis, where `|Φ_μ⟩ = m^{−1/2} Σ_α |u^μ_α⟩|α⟩`.
///
/// Vectors are dense over message ⊗ ancilla, with component `x·m + α` holding
/// the coefficient of `|x⟩|α⟩`.
#[derive(Debug, Clone)]
pub struct DenseCodingInstance {
    n: usize,
    d: usize,
    mu: usize,
    m: usize,
    entangled_states: Vec<DVector<Complex64>>,
    weyl_index: Vec<(usize, usize)>,
}

impl DenseCodingInstance {
    pub fn new(basis: &MessageBasis, mu: usize) -> Result<Self> {
        let n = basis.n();
        if mu >= n {
            return Err(Error::IndexOutOfRange { index: mu, len: n });
        }
        let m = basis.multiplicities()[mu];
        if m == 0 {
            return Err(Error::InvalidParameter(format!("sector {mu} is empty")));
        }
        let sector: Vec<Vec<Complex64>> = basis.sector(mu).map(|e| e.state.to_dense()).collect();
        let dim = sector[0].len();
        let scale = 1.0 / (m as f64).sqrt();
        let mut entangled_states = Vec::with_capacity(m * m);
        let mut weyl_index = Vec::with_capacity(m * m);
        for w in weyl_operators(m) {
            // component (x, α) = m^{−1/2} Σ_β W_βα u_β(x)
            let mut v = DVector::from_element(dim * m, ZERO);
            for (beta, u) in sector.iter().enumerate() {
                for alpha in 0..m {
                    let coeff = w.matrix[(beta, alpha)];
                    if coeff == ZERO {
                        continue;
                    }
                    for (x, &amp) in u.iter().enumerate() {
                        if amp != ZERO {
                            v[x * m + alpha] += coeff * amp * scale;
                        }
                    }
                }
            }
            entangled_states.push(v);
            weyl_index.push((w.a, w.b));
        }
        Ok(DenseCodingInstance {
            n,
            d: basis.d(),
            mu,
            m,
            entangled_states,
            weyl_index,
        })
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn multiplicity(&self) -> usize {
        self.m
    }

    pub fn entangled_states(&self) -> &[DVector<Complex64>] {
        &self.entangled_states
    }

    pub fn weyl_index(&self) -> &[(usize, usize)] {
        &self.weyl_index
    }

    /// Largest deviation of the codeword Gram matrix from the identity.
    pub fn gram_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, u) in self.entangled_states.iter().enumerate() {
            for (j, v) in self.entangled_states.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((u.dotc(v) - target).norm());
            }
        }
        worst
    }

    /// `(U(σ) ⊗ I)` applied to a dense message ⊗ ancilla vector.
    fn transmit(&self, v: &DVector<Complex64>, sigma: &Permutation) -> DVector<Complex64> {
        let mut out = DVector::from_element(v.len(), ZERO);
        let d = self.d as u64;
        for (i, &amp) in v.iter().enumerate() {
            if amp != ZERO {
                let (x, alpha) = (i / self.m, i % self.m);
                let y = permute_index(sigma, x as u64, self.n, d) as usize;
                out[y * self.m + alpha] = amp;
            }
        }
        out
    }

    /// Encodes `(a, b)`, sends it through `σ`, and measures in the codeword basis.
    pub fn roundtrip(&self, a: usize, b: usize, sigma: &Permutation) -> Result<DenseDecode> {
        for value in [a, b] {
            if value >= self.m {
                return Err(Error::IndexOutOfRange {
                    index: value,
                    len: self.m,
                });
            }
        }
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: sigma.degree(),
            });
        }
        let sent = &self.entangled_states[a * self.m + b];
        let received = self.transmit(sent, sigma);
        let (best, probability) = self
            .entangled_states
            .iter()
            .map(|c| c.dotc(&received).norm_sqr())
            .enumerate()
            .fold(
                (0, f64::NEG_INFINITY),
                |acc, (k, p)| if p > acc.1 { (k, p) } else { acc },
            );
        let (a, b) = self.weyl_index[best];
        Ok(DenseDecode { a, b, probability })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DenseDecode {
    pub a: usize,
    pub b: usize,
    pub probability: f64,
}

impl DenseDecode {
    pub fn is_certain(&self) -> bool {
        self.probability >= 1.0 - ZERO_ERROR_TOLERANCE
    }
}

/// Dense coding on `C_n` acting on `n` qudits: encodes `(a, b)` in sector `μ`,
/// applies `σ`, and decodes.
pub fn dense_coding_roundtrip(
    n: usize,
    d: usize,
    mu: usize,
    a: usize,
    b: usize,
    sigma: &Permutation,
) -> Result<DenseDecode> {
    let basis = message_basis_cyclic(n, d)?;
    if !basis.group().contains(sigma) {
        return Err(Error::NotInGroup);
    }
    DenseCodingInstance::new(&basis, mu)?.roundtrip(a, b, sigma)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DenseCodingSummary {
    pub n: usize,
    pub d: usize,
    /// `(μ, m_μ)` for every non-empty sector.
    pub sectors: Vec<(usize, usize)>,
    /// Triples `(μ, a, b)` decoded with certainty under every group element.
    pub round_tripped: usize,
    pub triples: usize,
    pub min_probability: f64,
    pub max_gram_residual: f64,
}

/// Runs every `(μ, a, b)` through every element of `C_n`.
pub fn dense_coding_exhaustive(basis: &MessageBasis) -> Result<DenseCodingSummary> {
    let mut summary = DenseCodingSummary {
        n: basis.n(),
        d: basis.d(),
        sectors: Vec::new(),
        round_tripped: 0,
        triples: 0,
        min_probability: 1.0,
        max_gram_residual: 0.0,
    };
    for (mu, &m) in basis.multiplicities().iter().enumerate() {
        if m == 0 {
            continue;
        }
        summary.sectors.push((mu, m));
        let instance = DenseCodingInstance::new(basis, mu)?;
        summary.max_gram_residual = summary.max_gram_residual.max(instance.gram_residual());
        for a in 0..m {
            for b in 0..m {
                summary.triples += 1;
                let mut ok = true;
                for sigma in basis.group().elements() {
                    let out = instance.roundtrip(a, b, sigma)?;
                    summary.min_probability = summary.min_probability.min(out.probability);
                    ok &= (out.a, out.b) == (a, b) && out.is_certain();
                }
                summary.round_tripped += usize::from(ok);
            }
        }
    }
    Ok(summary)
}

/// Largest `‖U(r^k)|u^μ_α⟩ − ω_n^{μk}|u^μ_α⟩‖_∞` over the sector. Zero means
/// `U(r^k)` restricted to the sector is the scalar `ω_n^{μk}`.
pub fn sector_phase_residual(basis: &MessageBasis, mu: usize, k: usize) -> Result<f64> {
    let n = basis.n();
    if mu >= n {
        return Err(Error::IndexOutOfRange { index: mu, len: n });
    }
    let sigma = Permutation::rotation(n).pow(k % n);
    let phase = root_of_unity(n, (mu * k) as i64);
    let mut worst: f64 = 0.0;
    for entry in basis.sector(mu) {
        let moved = entry.state.permuted(&sigma)?;
        worst = worst.max(moved.max_abs_diff(&entry.state.scaled(phase)));
    }
    Ok(worst)
}
