use std::collections::BTreeSet;

use serde::Serialize;

use crate::channel_sim::channel::ChannelSpec;
use crate::encoding::{MessageBasis, StateVector};
use crate::error::{Error, Result};

/// Squared overlaps closer than this are treated as a tie.
pub const DECODE_TIE_TOLERANCE: f64 = 1e-6;
/// A zero-error decode must reach probability `1 − ZERO_ERROR_TOLERANCE`.
pub const ZERO_ERROR_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumDecode {
    pub mu: usize,
    pub alpha: usize,
    /// Position of the decoded entry in canonical order.
    pub message: usize,
    pub probability: f64,
}

/// Squared overlaps `|⟨u_m|ψ⟩|²` for every entry whose support meets `ψ`,
/// as `(message, probability)` pairs in message order.
pub fn overlaps(basis: &MessageBasis, psi: &StateVector) -> Result<Vec<(usize, f64)>> {
    if psi.n() != basis.n() || psi.d() != basis.d() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            found: psi.n(),
        });
    }
    let candidates: BTreeSet<usize> = psi
        .support()
        .flat_map(|i| basis.entries_touching(i).iter().copied())
        .collect();
    candidates
        .into_iter()
        .map(|m| Ok((m, basis.entries()[m].state.inner(psi)?.norm_sqr())))
        .collect()
}

/// Projective measurement in the message basis, reporting the most likely outcome.
///
/// Global phases do not affect the result. Two outcomes within
/// [`DECODE_TIE_TOLERANCE`] of each other mean `ψ` was not a channel output of a
/// basis state, and are reported as [`Error::AmbiguousDecode`].
pub fn decode_quantum(basis: &MessageBasis, psi: &StateVector) -> Result<QuantumDecode> {
    let norm = psi.norm_sqr();
    if (norm - 1.0).abs() > ZERO_ERROR_TOLERANCE {
        return Err(Error::InvalidParameter(format!(
            "state must be normalized, squared norm is {norm}"
        )));
    }
    let mut ranked = overlaps(basis, psi)?;
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    let (message, probability) = ranked[0];
    if let Some(&(_, second)) = ranked.get(1) {
        if probability - second < DECODE_TIE_TOLERANCE {
            return Err(Error::AmbiguousDecode {
                best: probability,
                second,
            });
        }
    }
    let entry = &basis.entries()[message];
    Ok(QuantumDecode {
        mu: entry.mu,
        alpha: entry.alpha,
        message,
        probability,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecodeFailure {
    pub message: usize,
    /// The channel permutation in cycle notation.
    pub sigma: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroErrorReport {
    #[serde(rename = "messages")]
    pub messages_tested: usize,
    #[serde(rename = "elements")]
    pub group_elements_tested: usize,
    pub failures: Vec<DecodeFailure>,
    /// Largest `|⟨u_m'|U(σ)u_m⟩|²` over `m' ≠ m`.
    pub max_offdiag_overlap: f64,
}

impl ZeroErrorReport {
    pub fn certified(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn trials(&self) -> usize {
        self.messages_tested * self.group_elements_tested
    }
}

/// Sends every basis state through the channel and decodes it. A trial fails
/// unless it decodes to the sent message with probability `1 − 1e−9` or better.
pub fn verify_zero_error(spec: &mut ChannelSpec, basis: &MessageBasis) -> Result<ZeroErrorReport> {
    if spec.group().degree() != basis.n() {
        return Err(Error::DegreeMismatch {
            expected: basis.n(),
            found: spec.group().degree(),
        });
    }
    let mut failures = Vec::new();
    let mut max_offdiag: f64 = 0.0;
    let mut elements = 0;
    for (message, entry) in basis.entries().iter().enumerate() {
        let sigmas = spec.draw();
        elements = elements.max(sigmas.len());
        for sigma in sigmas {
            let received = entry.state.permuted(&sigma)?;
            for (other, p) in overlaps(basis, &received)? {
                if other != message {
                    max_offdiag = max_offdiag.max(p);
                }
            }
            let reason = match decode_quantum(basis, &received) {
                Ok(out) if out.message != message => {
                    Some(format!("decoded as message {}", out.message))
                }
                Ok(out) if out.probability < 1.0 - ZERO_ERROR_TOLERANCE => {
                    Some(format!("success probability {}", out.probability))
                }
                Ok(_) => None,
                Err(e) => Some(e.to_string()),
            };
            if let Some(reason) = reason {
                failures.push(DecodeFailure {
                    message,
                    sigma: sigma.to_string(),
                    reason,
                });
            }
        }
    }
    Ok(ZeroErrorReport {
        messages_tested: basis.len(),
        group_elements_tested: elements,
        failures,
        max_offdiag_overlap: max_offdiag,
    })
}
