use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::encoding::StateVector;
use crate::error::{Error, Result};
use crate::perm_core::{
    orbits_bounded, ColoredString, Orbit, OrbitIndex, Permutation, PermutationGroup,
    DEFAULT_STATE_LIMIT,
};

/// How the channel picks the permutation applied to each transmission.
#[derive(Debug, Clone, PartialEq)]
pub enum ElementSelection {
    /// Every group element, in group order.
    Exhaustive,
    /// One element drawn uniformly per transmission from a seeded generator.
    UniformRandom(u64),
    Fixed(Permutation),
}

/// A permutation channel: a group together with an element selection policy.
#[derive(Debug, Clone)]
pub struct ChannelSpec {
    group: PermutationGroup,
    selection: ElementSelection,
    rng: Option<StdRng>,
}

impl ChannelSpec {
    pub fn new(group: PermutationGroup, selection: ElementSelection) -> Result<Self> {
        let rng = match &selection {
            ElementSelection::Fixed(sigma) if !group.contains(sigma) => {
                return Err(Error::NotInGroup)
            }
            ElementSelection::UniformRandom(seed) => Some(StdRng::seed_from_u64(*seed)),
            _ => None,
        };
        Ok(ChannelSpec {
            group,
            selection,
            rng,
        })
    }

    pub fn exhaustive(group: PermutationGroup) -> Self {
        ChannelSpec {
            group,
            selection: ElementSelection::Exhaustive,
            rng: None,
        }
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn selection(&self) -> &ElementSelection {
        &self.selection
    }

    /// The permutations used for the next transmission. Random selection
    /// advances the generator.
    pub fn draw(&mut self) -> Vec<Permutation> {
        match &self.selection {
            ElementSelection::Exhaustive => self.group.elements().to_vec(),
            ElementSelection::Fixed(sigma) => vec![sigma.clone()],
            ElementSelection::UniformRandom(_) => {
                let rng = self
                    .rng
                    .as_mut()
                    .expect("random selection carries a generator");
                let k = rng.gen_range(0..self.group.order());
                vec![self.group.elements()[k].clone()]
            }
        }
    }

    fn check_degree(&self, found: usize) -> Result<()> {
        if found != self.group.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.group.degree(),
                found,
            });
        }
        Ok(())
    }
}

/// Sends `x` through the channel: one output per selected element, paired with
/// the permutation that produced it.
pub fn apply_channel_classical(
    spec: &mut ChannelSpec,
    x: &ColoredString,
) -> Result<Vec<(ColoredString, Permutation)>> {
    spec.check_degree(x.len())?;
    spec.draw()
        .into_iter()
        .map(|sigma| Ok((x.permuted(&sigma)?, sigma)))
        .collect()
}

/// Applies `U(σ)` to `psi` for each selected element. Amplitudes are moved,
/// never recomputed, so the norm is preserved exactly.
pub fn apply_channel_quantum(
    spec: &mut ChannelSpec,
    psi: &StateVector,
) -> Result<Vec<(StateVector, Permutation)>> {
    spec.check_degree(psi.n())?;
    spec.draw()
        .into_iter()
        .map(|sigma| Ok((psi.permuted(&sigma)?, sigma)))
        .collect()
}

/// Decodes received strings to the index of their orbit.
#[derive(Debug, Clone)]
pub struct ClassicalDecoder {
    degree: usize,
    d: usize,
    orbits: Vec<Orbit>,
    index: OrbitIndex,
}

impl ClassicalDecoder {
    pub fn new(group: &PermutationGroup, d: usize) -> Result<Self> {
        ClassicalDecoder::bounded(group, d, DEFAULT_STATE_LIMIT)
    }

    pub fn bounded(group: &PermutationGroup, d: usize, state_limit: u64) -> Result<Self> {
        let orbits = orbits_bounded(group, d, state_limit)?;
        let index = OrbitIndex::new(&orbits);
        Ok(ClassicalDecoder {
            degree: group.degree(),
            d,
            orbits,
            index,
        })
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn decode(&self, y: &ColoredString) -> Result<usize> {
        if y.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: y.len(),
            });
        }
        if y.alphabet() != self.d {
            return Err(Error::InvalidParameter(format!(
                "decoder built for d = {}, got a string over d = {}",
                self.d,
                y.alphabet()
            )));
        }
        self.index.orbit_of(y)
    }
}

/// One-shot orbit lookup. Build a [`ClassicalDecoder`] to decode many strings.
pub fn decode_classical(group: &PermutationGroup, y: &ColoredString) -> Result<usize> {
    ClassicalDecoder::new(group, y.alphabet())?.decode(y)
}
