use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::perm_core::Permutation;

/// An integer partition `λ ⊢ n` stored as `(part length, multiplicity)` pairs with
/// strictly decreasing lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<(usize, usize)>,
}

impl Partition {
    /// Accepts pairs in any order; zero multiplicities are dropped and repeated
    /// lengths merged.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for (len, mult) in pairs {
            if len == 0 || mult == 0 {
                continue;
            }
            match parts.iter_mut().find(|(l, _)| *l == len) {
                Some(entry) => entry.1 += mult,
                None => parts.push((len, mult)),
            }
        }
        parts.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
        Partition { parts }
    }

    pub fn cycle_type(sigma: &Permutation) -> Self {
        Partition::from_pairs(sigma.cycle_decomposition().cycle_counts)
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|(l, m)| l * m).sum()
    }

    pub fn multiplicity(&self, len: usize) -> usize {
        self.parts
            .iter()
            .find(|(l, _)| *l == len)
            .map_or(0, |&(_, m)| m)
    }

    pub fn num_parts(&self) -> usize {
        self.parts.iter().map(|(_, m)| m).sum()
    }

    /// `z_λ = Π_k m_k! · k^{m_k}`, the centralizer order of a permutation of
    /// cycle type `λ` in `S_n`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for &(len, mult) in &self.parts {
            for i in 1..=mult {
                z *= i;
            }
            z *= BigUint::from(len).pow(mult as u32);
        }
        z
    }

    /// `|C_λ| = n! / z_λ`.
    pub fn symmetric_class_size(&self) -> BigUint {
        let mut factorial = BigUint::one();
        for i in 2..=self.n() {
            factorial *= i;
        }
        factorial / self.centralizer_order()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|&(l, m)| {
                if m == 1 {
                    l.to_string()
                } else {
                    format!("{l}^{m}")
                }
            })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All partitions of `n`, by decreasing-part recursion. `n = 0` yields the empty
/// partition once.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn recurse(rest: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_pairs(current.iter().map(|&p| (p, 1))));
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            current.push(part);
            recurse(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    recurse(n, n, &mut Vec::new(), &mut out);
    out
}
