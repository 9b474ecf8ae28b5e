use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm_core::string::{checked_state_count, permute_index};
use crate::perm_core::{ColoredString, GroupKind, PermutationGroup};

/// Default cap on `d^n` for routines that enumerate the full string space.
pub const DEFAULT_STATE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographic minimum of `members`.
    pub representative: ColoredString,
    /// Members in lexicographic order.
    pub members: Vec<ColoredString>,
    pub size: usize,
    pub stabilizer_order: usize,
    /// `p_j = |G| / n_j`, present only for cyclic groups.
    pub period_factor: Option<usize>,
}

impl Orbit {
    pub fn member_indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().map(ColoredString::index)
    }
}

/// Orbits of `G` on all length-`n` strings over `d` symbols, ordered by
/// representative.
pub fn orbits(group: &PermutationGroup, d: usize) -> Result<Vec<Orbit>> {
    orbits_bounded(group, d, DEFAULT_STATE_LIMIT)
}

pub fn orbits_bounded(group: &PermutationGroup, d: usize, limit: u64) -> Result<Vec<Orbit>> {
    if d == 0 {
        return Err(Error::InvalidParameter("alphabet size must be >= 1".into()));
    }
    let n = group.degree();
    let total = checked_state_count(n, d, limit)?;
    let mut visited = vec![false; total as usize];
    let mut out = Vec::new();
    for start in 0..total {
        if visited[start as usize] {
            continue;
        }
        let mut images = Vec::with_capacity(group.order());
        let mut stabilizer_order = 0;
        for sigma in group.elements() {
            let image = permute_index(sigma, start, n, d as u64);
            if image == start {
                stabilizer_order += 1;
            }
            images.push(image);
        }
        images.sort_unstable();
        images.dedup();
        for &i in &images {
            visited[i as usize] = true;
        }
        let members: Vec<ColoredString> = images
            .iter()
            .map(|&i| ColoredString::from_index(i, n, d))
            .collect();
        let size = members.len();
        out.push(Orbit {
            representative: members[0].clone(),
            members,
            size,
            stabilizer_order,
            period_factor: (group.kind() == GroupKind::Cyclic).then(|| group.order() / size),
        });
    }
    Ok(out)
}

/// Lookup from string index to the position of its orbit.
#[derive(Debug, Clone)]
pub struct OrbitIndex {
    n: usize,
    d: usize,
    orbit_of: HashMap<u64, usize>,
}

impl OrbitIndex {
    pub fn new(orbits: &[Orbit]) -> Self {
        let (n, d) = orbits.first().map_or((0, 1), |o| {
            (o.representative.len(), o.representative.alphabet())
        });
        let orbit_of = orbits
            .iter()
            .enumerate()
            .flat_map(|(j, o)| o.member_indices().map(move |i| (i, j)))
            .collect();
        OrbitIndex { n, d, orbit_of }
    }

    pub fn orbit_of(&self, x: &ColoredString) -> Result<usize> {
        if x.len() != self.n || x.alphabet() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        self.orbit_of_index(x.index())
    }

    pub fn orbit_of_index(&self, index: u64) -> Result<usize> {
        self.orbit_of
            .get(&index)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index: index as usize,
                len: self.orbit_of.len(),
            })
    }
}
