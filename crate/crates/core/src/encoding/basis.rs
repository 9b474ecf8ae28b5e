use std::collections::HashMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::encoding::state::{AmplitudeRecord, StateVector};
use crate::error::{Error, Result};
use crate::perm_core::{
    checked_state_count, make_named_group, orbits_bounded, GroupKind, Orbit, Permutation,
    PermutationGroup, DEFAULT_STATE_LIMIT,
};

/// `ω_m^t = exp(2πi t/m)`, with `t` reduced mod `m` first.
pub fn root_of_unity(m: usize, t: i64) -> Complex64 {
    let t = t.rem_euclid(m as i64);
    // exact values at the quarter turns keep table comparisons clean
    match (4 * t).checked_rem(m as i64) {
        Some(0) => match 4 * t / m as i64 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        },
        _ => Complex64::from_polar(1.0, TAU * t as f64 / m as f64),
    }
}

/// A Fourier state on one cyclic orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierState {
    pub state: StateVector,
    pub orbit_index: usize,
    pub fourier_index: usize,
    /// `μ = p_j k mod n`; `U(r)` multiplies the state by `ω_n^μ`.
    pub irrep_label: usize,
}

/// `μ = (n/n_j)·k mod n` for Fourier index `k` on `orbit`.
pub fn irrep_label(orbit: &Orbit, k: usize) -> Result<usize> {
    let period = orbit.period_factor.ok_or(Error::NotCyclic)?;
    if k >= orbit.size {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: orbit.size,
        });
    }
    let n = orbit.representative.len();
    Ok((period * k) % n)
}

/// `|ũ^k_j⟩ = (1/√n_j) Σ_l ω_{n_j}^{−kl} U(r^l)|x_j⟩` for `k = 0..n_j`.
///
/// The `−kl` sign makes `U(r)|ũ^k_j⟩ = ω_{n_j}^{+k}|ũ^k_j⟩ = ω_n^{p_j k}|ũ^k_j⟩`.
pub fn orbit_fourier_basis(orbit: &Orbit, orbit_index: usize) -> Result<Vec<FourierState>> {
    orbit.period_factor.ok_or(Error::NotCyclic)?;
    let rep = &orbit.representative;
    let (n, d) = (rep.len(), rep.alphabet());
    let size = orbit.size;
    let r = Permutation::rotation(n);
    let mut shifted = Vec::with_capacity(size);
    let mut current = rep.clone();
    for _ in 0..size {
        let next = current.permuted(&r)?;
        shifted.push(std::mem::replace(&mut current, next).index());
    }
    let scale = 1.0 / (size as f64).sqrt();
    (0..size)
        .map(|k| {
            let amplitudes = shifted.iter().enumerate().map(|(l, &idx)| {
                let phase = root_of_unity(size, -((k * l) as i64));
                (idx, phase * scale)
            });
            Ok(FourierState {
                state: StateVector::from_amplitudes(n, d, amplitudes),
                orbit_index,
                fourier_index: k,
                irrep_label: irrep_label(orbit, k)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasisEntry {
    pub mu: usize,
    pub alpha: usize,
    pub orbit_index: usize,
    pub fourier_index: usize,
    pub state: StateVector,
}

/// The zero-error message basis `{|u^μ_α⟩}` for `C_n` acting on `n` qudits,
/// ordered by `μ` and then by orbit representative.
#[derive(Debug, Clone)]
pub struct MessageBasis {
    group: PermutationGroup,
    d: usize,
    orbits: Vec<Orbit>,
    entries: Vec<BasisEntry>,
    multiplicities: Vec<usize>,
    orbit_of: HashMap<u64, usize>,
    entries_by_orbit: Vec<Vec<usize>>,
}

impl MessageBasis {
    pub fn n(&self) -> usize {
        self.group.degree()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `m_μ` for `μ = 0..n`.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Entries of sector `μ`, in `α` order.
    pub fn sector(&self, mu: usize) -> impl Iterator<Item = &BasisEntry> {
        self.entries.iter().filter(move |e| e.mu == mu)
    }

    /// Position of the entry `(μ, α)` in canonical order.
    pub fn position(&self, mu: usize, alpha: usize) -> Option<usize> {
        self.entries
            .iter()
            .position(|e| e.mu == mu && e.alpha == alpha)
    }

    /// Entries whose support meets the basis string with index `index`.
    pub fn entries_touching(&self, index: u64) -> &[usize] {
        self.orbit_of
            .get(&index)
            .map_or(&[], |&j| self.entries_by_orbit[j].as_slice())
    }

    /// Largest deviation of the Gram matrix from the identity. Entries on
    /// different orbits have disjoint support, so only same-orbit pairs are formed.
    pub fn gram_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for ids in &self.entries_by_orbit {
            for &a in ids {
                for &b in ids {
                    let overlap = self.entries[a]
                        .state
                        .inner(&self.entries[b].state)
                        .expect("entries share a space");
                    let target = if a == b { 1.0 } else { 0.0 };
                    worst = worst.max((overlap - target).norm());
                }
            }
        }
        worst
    }

    pub fn export(&self) -> BasisExport {
        BasisExport {
            n: self.n(),
            d: self.d,
            multiplicities: self.multiplicities.clone(),
            entries: self
                .entries
                .iter()
                .map(|e| EntryExport {
                    mu: e.mu,
                    alpha: e.alpha,
                    orbit: e.orbit_index,
                    representative: self.orbits[e.orbit_index].representative.to_string(),
                    amplitudes: e.state.export(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisExport {
    pub n: usize,
    pub d: usize,
    pub multiplicities: Vec<usize>,
    pub entries: Vec<EntryExport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryExport {
    pub mu: usize,
    pub alpha: usize,
    pub orbit: usize,
    pub representative: String,
    pub amplitudes: Vec<AmplitudeRecord>,
}

pub fn message_basis_cyclic(n: usize, d: usize) -> Result<MessageBasis> {
    message_basis_cyclic_bounded(n, d, DEFAULT_STATE_LIMIT)
}

pub fn message_basis_cyclic_bounded(n: usize, d: usize, limit: u64) -> Result<MessageBasis> {
    checked_state_count(n, d, limit)?;
    let group = make_named_group(GroupKind::Cyclic, n)?;
    let orbits = orbits_bounded(&group, d, limit)?;
    let mut fourier = Vec::new();
    for (j, orbit) in orbits.iter().enumerate() {
        fourier.extend(orbit_fourier_basis(orbit, j)?);
    }
    fourier.sort_by_key(|f| (f.irrep_label, f.orbit_index));

    let mut multiplicities = vec![0usize; n];
    let mut entries = Vec::with_capacity(fourier.len());
    let mut entries_by_orbit = vec![Vec::new(); orbits.len()];
    for f in fourier {
        let alpha = multiplicities[f.irrep_label];
        multiplicities[f.irrep_label] += 1;
        entries_by_orbit[f.orbit_index].push(entries.len());
        entries.push(BasisEntry {
            mu: f.irrep_label,
            alpha,
            orbit_index: f.orbit_index,
            fourier_index: f.fourier_index,
            state: f.state,
        });
    }
    let orbit_of = orbits
        .iter()
        .enumerate()
        .flat_map(|(j, o)| o.member_indices().map(move |i| (i, j)))
        .collect();
    Ok(MessageBasis {
        group,
        d,
        orbits,
        entries,
        multiplicities,
        orbit_of,
        entries_by_orbit,
    })
}

/// The basis entry for `message_index` in canonical order.
pub fn encode_message(basis: &MessageBasis, message_index: usize) -> Result<StateVector> {
    basis
        .entries
        .get(message_index)
        .map(|e| e.state.clone())
        .ok_or(Error::IndexOutOfRange {
            index: message_index,
            len: basis.len(),
        })
}
