//! Permutations in one-line image notation.
//!
//! Composition follows the left-action convention: `tau.compose(&sigma)` is the
//! permutation `i -> tau(sigma(i))`, i.e. `sigma` is applied first.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image array, rejecting anything that is not
    /// a bijection of `0..n`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::InvalidPermutation(format!("image {img} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of degree `n` from disjoint cycles, e.g. `[[0, 1, 2, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (pos, &from) in cycle.iter().enumerate() {
                if from >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {from} out of range for degree {n}"
                    )));
                }
                if std::mem::replace(&mut touched[from], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {from} appears in more than one cycle"
                    )));
                }
                images[from] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    /// The one-step shift `r = (0, 1, ..., n-1)`.
    pub fn rotation(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// The reflection `i -> -i mod n`.
    pub fn reflection(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (n - i) % n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn square(&self) -> Permutation {
        self.compose(self)
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut out = Permutation::identity(self.degree());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    /// `pi ∘ self ∘ pi⁻¹`.
    pub fn conjugate_by(&self, pi: &Permutation) -> Permutation {
        pi.compose(self).compose(&pi.inverse())
    }

    pub fn order(&self) -> usize {
        self.cycle_decomposition()
            .cycles
            .iter()
            .map(Vec::len)
            .fold(1, num_integer::lcm)
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            cycles.push(cycle);
        }
        let mut cycle_counts = BTreeMap::new();
        for c in &cycles {
            *cycle_counts.entry(c.len()).or_insert(0) += 1;
        }
        CycleDecomposition {
            total_cycles: cycles.len(),
            cycles,
            cycle_counts,
        }
    }

    /// `c(σ)`, the number of cycles including fixed points.
    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        count
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

/// Cycle notation; fixed points are omitted and the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let decomposition = self.cycle_decomposition();
        let mut wrote = false;
        for cycle in decomposition.cycles.iter().filter(|c| c.len() > 1) {
            let parts: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(","))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// Disjoint cycles, each starting at its smallest point; fixed points are 1-cycles.
    pub cycles: Vec<Vec<usize>>,
    /// Cycle length `k` to number of `k`-cycles.
    pub cycle_counts: BTreeMap<usize, usize>,
    pub total_cycles: usize,
}

impl CycleDecomposition {
    pub fn count_of_length(&self, k: usize) -> usize {
        self.cycle_counts.get(&k).copied().unwrap_or(0)
    }
}
