//! Permutations, permutation groups, and their action on strings by moving positions.

mod group;
mod orbit;
mod partition;
mod permutation;
mod string;

pub use group::{
    generate_group, generate_group_bounded, make_named_group, make_named_group_bounded,
    parse_group_file, ConjugacyClass, GroupKind, PermutationGroup, DEFAULT_GROUP_ORDER_LIMIT,
};
pub use orbit::{orbits, orbits_bounded, Orbit, OrbitIndex, DEFAULT_STATE_LIMIT};
pub use partition::{partitions, Partition};
pub use permutation::{CycleDecomposition, Permutation};
pub use string::ColoredString;

pub(crate) use string::{checked_state_count, permute_index};
