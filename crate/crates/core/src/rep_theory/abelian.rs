//! Linear characters of abelian permutation groups, built without an eigensolver.
//!
//! Characters are extended one generator at a time: if `t` is the least positive
//! power with `g^t ∈ H`, each character of `H` has exactly `t` extensions to
//! `⟨H, g⟩`, one per `t`-th root of `χ(g^t)`. Values are tracked exactly as
//! fractions of a full turn.

use num_rational::Ratio;

use crate::perm_core::{Permutation, PermutationGroup};

type Turn = Ratio<i64>;

fn normalize(t: Turn) -> Turn {
    let fract = t - t.floor();
    if fract < Turn::from_integer(0) {
        fract + 1
    } else {
        fract
    }
}

/// Characters as turn fractions (`χ(σ) = exp(2πi·turn)`), one row per character,
/// columns indexed like `group.elements()`. The first row is trivial.
pub(crate) fn abelian_character_turns(group: &PermutationGroup) -> Vec<Vec<Turn>> {
    let order = group.order();
    let generators: Vec<Permutation> = if group.generators().is_empty() {
        group.elements().to_vec()
    } else {
        group.generators().to_vec()
    };
    // subgroup elements found so far, as group indices
    let mut subgroup: Vec<usize> = vec![0];
    let mut in_subgroup = vec![false; order];
    in_subgroup[0] = true;
    // characters restricted to the subgroup; None outside it
    let mut chars: Vec<Vec<Option<Turn>>> = vec![{
        let mut row = vec![None; order];
        row[0] = Some(Turn::from_integer(0));
        row
    }];

    for g in &generators {
        let g_idx = group
            .index_of(g)
            .expect("generator must belong to its group");
        if in_subgroup[g_idx] {
            continue;
        }
        // powers g^0..g^{t-1}, and g^t back inside the subgroup
        let mut powers = vec![Permutation::identity(group.degree())];
        let mut current = g.clone();
        let mut current_idx = g_idx;
        while !in_subgroup[current_idx] {
            powers.push(current.clone());
            current = g.compose(&current);
            current_idx = group.index_of(&current).expect("group is closed");
        }
        let t = powers.len() as i64;
        let gt_idx = current_idx;

        // new elements h·g^i in a fixed order, with their (h, i) decomposition
        let mut decomposition = Vec::with_capacity(subgroup.len() * powers.len());
        for (i, gi) in powers.iter().enumerate() {
            for &h in &subgroup {
                let elem = group.elements()[h].compose(gi);
                let idx = group.index_of(&elem).expect("group is closed");
                decomposition.push((idx, h, i as i64));
            }
        }

        let mut extended = Vec::with_capacity(chars.len() * t as usize);
        for chi in &chars {
            let base = chi[gt_idx].expect("g^t lies in the subgroup");
            for s in 0..t {
                // ζ = exp(2πi (base + s) / t)
                let zeta = (base + Turn::from_integer(s)) / t;
                let mut row = vec![None; order];
                for &(idx, h, i) in &decomposition {
                    let value = chi[h].expect("h lies in the subgroup") + zeta * i;
                    row[idx] = Some(normalize(value));
                }
                extended.push(row);
            }
        }
        chars = extended;
        subgroup = decomposition.iter().map(|&(idx, _, _)| idx).collect();
        for &idx in &subgroup {
            in_subgroup[idx] = true;
        }
        if subgroup.len() == order {
            break;
        }
    }
    debug_assert_eq!(subgroup.len(), order, "generators must generate the group");
    debug_assert!(chars.len() == order);
    chars
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.expect("full coverage")).collect())
        .collect()
}
