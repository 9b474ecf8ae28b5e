use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm_core::{ColoredString, Partition, Permutation};

/// Default cap on the number of elements produced by group closure.
pub const DEFAULT_GROUP_ORDER_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Cyclic,
    Dihedral,
    Symmetric,
    Custom,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GroupKind::Cyclic => "cyclic",
            GroupKind::Dihedral => "dihedral",
            GroupKind::Symmetric => "symmetric",
            GroupKind::Custom => "custom",
        };
        f.write_str(name)
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(GroupKind::Cyclic),
            "dihedral" => Ok(GroupKind::Dihedral),
            "symmetric" => Ok(GroupKind::Symmetric),
            "custom" => Ok(GroupKind::Custom),
            other => Err(Error::Unknown {
                what: "group kind",
                name: other.to_string(),
            }),
        }
    }
}

/// A finite permutation group stored element by element.
///
/// The identity is always `elements()[0]`.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
    kind: GroupKind,
    index: HashMap<Permutation, usize>,
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("kind", &self.kind)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermutationGroup {
    fn from_closed_elements(
        degree: usize,
        elements: Vec<Permutation>,
        generators: Vec<Permutation>,
        kind: GroupKind,
    ) -> Self {
        debug_assert!(elements[0].is_identity());
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PermutationGroup {
            degree,
            elements,
            generators,
            kind,
            index,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup::from_closed_elements(
            degree,
            vec![Permutation::identity(degree)],
            Vec::new(),
            GroupKind::Custom,
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: GroupKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn is_abelian(&self) -> bool {
        let gens: &[Permutation] = if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        };
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// For every element, the index of its square.
    pub fn square_indices(&self) -> Vec<usize> {
        self.elements
            .iter()
            .map(|p| self.index[&p.square()])
            .collect()
    }

    /// `G_x`: the elements fixing `x`.
    pub fn stabilizer(&self, x: &ColoredString) -> Result<PermutationGroup> {
        if x.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: x.len(),
            });
        }
        let mut elements = Vec::new();
        for p in &self.elements {
            if &x.permuted(p)? == x {
                elements.push(p.clone());
            }
        }
        let generators = elements.iter().skip(1).cloned().collect();
        Ok(PermutationGroup::from_closed_elements(
            self.degree,
            elements,
            generators,
            GroupKind::Custom,
        ))
    }

    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        // Conjugating by generators suffices to saturate a class.
        let conjugators: Vec<&Permutation> = if self.generators.is_empty() {
            self.elements.iter().collect()
        } else {
            self.generators.iter().collect()
        };
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let class_id = classes.len();
            class_of[start] = class_id;
            let mut member_ids = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for pi in &conjugators {
                    let j = self.index[&self.elements[i].conjugate_by(pi)];
                    if class_of[j] == usize::MAX {
                        class_of[j] = class_id;
                        member_ids.push(j);
                        queue.push_back(j);
                    }
                }
            }
            member_ids.sort_unstable();
            let representative = self.elements[start].clone();
            let partition = Partition::cycle_type(&representative);
            classes.push(ConjugacyClass {
                size: member_ids.len(),
                members: member_ids
                    .iter()
                    .map(|&i| self.elements[i].clone())
                    .collect(),
                member_indices: member_ids,
                representative,
                partition,
            });
        }
        classes
    }

    /// `|{τ ∈ G : τ² = σ}|`.
    pub fn square_root_count(&self, sigma: &Permutation) -> Result<usize> {
        if !self.contains(sigma) {
            return Err(Error::NotInGroup);
        }
        Ok(self
            .elements
            .iter()
            .filter(|t| &t.square() == sigma)
            .count())
    }

    /// Square-root counts for every element at once, indexed like `elements()`.
    pub fn square_root_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.order()];
        for j in self.square_indices() {
            counts[j] += 1;
        }
        counts
    }
}

/// Smallest group containing `generators`, by breadth-first saturation.
pub fn generate_group(degree: usize, generators: &[Permutation]) -> Result<PermutationGroup> {
    generate_group_bounded(degree, generators, DEFAULT_GROUP_ORDER_LIMIT)
}

pub fn generate_group_bounded(
    degree: usize,
    generators: &[Permutation],
    limit: usize,
) -> Result<PermutationGroup> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let identity = Permutation::identity(degree);
    let mut index = HashMap::from([(identity.clone(), 0usize)]);
    let mut elements = vec![identity];
    let mut cursor = 0;
    while cursor < elements.len() {
        for g in generators {
            let next = g.compose(&elements[cursor]);
            if !index.contains_key(&next) {
                if elements.len() >= limit {
                    return Err(Error::GroupTooLarge { limit });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        cursor += 1;
    }
    Ok(PermutationGroup {
        degree,
        elements,
        generators: generators.to_vec(),
        kind: GroupKind::Custom,
        index,
    })
}

pub fn make_named_group(kind: GroupKind, n: usize) -> Result<PermutationGroup> {
    make_named_group_bounded(kind, n, DEFAULT_GROUP_ORDER_LIMIT)
}

/// Cyclic `C_n = ⟨r⟩`, dihedral `D_n = ⟨r, s⟩` or symmetric `S_n` acting on `n` points.
///
/// For `n < 3` the dihedral generators do not act faithfully, so the result is
/// the generated permutation group (order 1 for `n = 1`, 2 for `n = 2`).
pub fn make_named_group_bounded(
    kind: GroupKind,
    n: usize,
    limit: usize,
) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("group degree must be >= 1".into()));
    }
    let r = Permutation::rotation(n);
    let group = match kind {
        GroupKind::Cyclic => {
            if n > limit {
                return Err(Error::GroupTooLarge { limit });
            }
            let mut elements = Vec::with_capacity(n);
            let mut current = Permutation::identity(n);
            for _ in 0..n {
                let next = r.compose(&current);
                elements.push(std::mem::replace(&mut current, next));
            }
            PermutationGroup::from_closed_elements(n, elements, vec![r], kind)
        }
        GroupKind::Dihedral if n >= 3 => {
            if 2 * n > limit {
                return Err(Error::GroupTooLarge { limit });
            }
            let s = Permutation::reflection(n);
            let rotations: Vec<Permutation> = (0..n).map(|k| r.pow(k)).collect();
            let reflections: Vec<Permutation> = rotations.iter().map(|rk| s.compose(rk)).collect();
            let elements = rotations.into_iter().chain(reflections).collect();
            PermutationGroup::from_closed_elements(n, elements, vec![r, s], kind)
        }
        GroupKind::Dihedral => {
            generate_group_bounded(n, &[r, Permutation::reflection(n)], limit)?.with_kind(kind)
        }
        GroupKind::Symmetric => {
            let mut gens = vec![r];
            if n >= 2 {
                gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
            }
            generate_group_bounded(n, &gens, limit)?.with_kind(kind)
        }
        GroupKind::Custom => {
            return Err(Error::InvalidParameter(
                "custom groups are built from generators".into(),
            ))
        }
    };
    Ok(group)
}

/// Reads generators in one-line image notation, one permutation per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_group_file(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree = None;
    let mut generators = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line_no = lineno + 1;
        let images = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let p = Permutation::new(images).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        match degree {
            None => degree = Some(p.degree()),
            Some(n) if n != p.degree() => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("degree {} differs from earlier degree {n}", p.degree()),
                })
            }
            Some(_) => {}
        }
        generators.push(p);
    }
    let degree = degree.ok_or(Error::Parse {
        line: 0,
        message: "no permutations found".into(),
    })?;
    Ok((degree, generators))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub members: Vec<Permutation>,
    /// Positions of `members` in the parent group's element list.
    pub member_indices: Vec<usize>,
    pub partition: Partition,
    pub size: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_generator_closure() {
        let g = generate_group(4, &[Permutation::rotation(4)]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
    }

    #[test]
    fn square_symmetries() {
        let g = generate_group(4, &[Permutation::rotation(4), Permutation::reflection(4)]).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = generate_group(5, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.elements()[0].is_identity());
    }

    #[test]
    fn closure_rejects_mixed_degrees() {
        let err = generate_group(4, &[Permutation::rotation(3)]).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }

    #[test]
    fn closure_respects_limit() {
        let err = make_named_group_bounded(GroupKind::Symmetric, 6, 100).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { limit: 100 });
    }

    #[test]
    fn named_group_orders() {
        let c4 = make_named_group(GroupKind::Cyclic, 4).unwrap();
        assert_eq!(c4.order(), 4);
        let r = Permutation::rotation(4);
        for (k, p) in c4.elements().iter().enumerate() {
            assert_eq!(p, &r.pow(k));
        }
        assert_eq!(make_named_group(GroupKind::Dihedral, 4).unwrap().order(), 8);
        assert_eq!(
            make_named_group(GroupKind::Symmetric, 3).unwrap().order(),
            6
        );
        assert_eq!(
            make_named_group(GroupKind::Symmetric, 5).unwrap().order(),
            120
        );
    }

    #[test]
    fn dihedral_presentation() {
        for n in 3..9 {
            let g = make_named_group(GroupKind::Dihedral, n).unwrap();
            let (r, s) = (&g.generators()[0], &g.generators()[1]);
            assert!(r.pow(n).is_identity());
            assert!(s.square().is_identity());
            assert_eq!(s.compose(r).compose(s), r.inverse());
            for a in g.elements() {
                for b in g.elements() {
                    assert!(g.contains(&a.compose(b)));
                }
            }
        }
    }

    #[test]
    fn degenerate_dihedral_is_generated_image() {
        assert_eq!(make_named_group(GroupKind::Dihedral, 1).unwrap().order(), 1);
        assert_eq!(make_named_group(GroupKind::Dihedral, 2).unwrap().order(), 2);
    }

    #[test]
    fn stabilizers_in_c4() {
        let c4 = make_named_group(GroupKind::Cyclic, 4).unwrap();
        let st = c4
            .stabilizer(&ColoredString::parse("0101", 2).unwrap())
            .unwrap();
        assert_eq!(st.order(), 2);
        assert!(st.contains(&Permutation::rotation(4).square()));
        let st = c4
            .stabilizer(&ColoredString::parse("0001", 2).unwrap())
            .unwrap();
        assert_eq!(st.order(), 1);
        let st = c4
            .stabilizer(&ColoredString::parse("2222", 3).unwrap())
            .unwrap();
        assert_eq!(st.order(), 4);
        assert!(c4
            .stabilizer(&ColoredString::parse("01", 2).unwrap())
            .is_err());
    }

    #[test]
    fn conjugacy_classes_of_s3_and_c4() {
        let s3 = make_named_group(GroupKind::Symmetric, 3).unwrap();
        let classes = s3.conjugacy_classes();
        let mut sizes: Vec<(String, usize)> = classes
            .iter()
            .map(|c| (c.partition.to_string(), c.size))
            .collect();
        sizes.sort();
        assert_eq!(
            sizes,
            vec![
                ("[1^3]".to_string(), 1),
                ("[2,1]".to_string(), 3),
                ("[3]".to_string(), 2)
            ]
        );
        assert!(classes[0].representative.is_identity());

        let c4 = make_named_group(GroupKind::Cyclic, 4).unwrap();
        assert!(c4.conjugacy_classes().iter().all(|c| c.size == 1));
    }

    #[test]
    fn s4_double_transposition_class() {
        let s4 = make_named_group(GroupKind::Symmetric, 4).unwrap();
        let class = s4
            .conjugacy_classes()
            .into_iter()
            .find(|c| c.partition.to_string() == "[2^2]")
            .unwrap();
        assert_eq!(class.size, 3);
        // closure under conjugation by every element
        for p in &class.members {
            for pi in s4.elements() {
                assert!(class.members.contains(&p.conjugate_by(pi)));
            }
        }
    }

    #[test]
    fn square_roots() {
        let s3 = make_named_group(GroupKind::Symmetric, 3).unwrap();
        assert_eq!(s3.square_root_count(&Permutation::identity(3)).unwrap(), 4);
        let c4 = make_named_group(GroupKind::Cyclic, 4).unwrap();
        assert_eq!(c4.square_root_count(&Permutation::identity(4)).unwrap(), 2);
        let t = PermutationGroup::trivial(3);
        assert_eq!(t.square_root_count(&Permutation::identity(3)).unwrap(), 1);
        assert_eq!(
            c4.square_root_count(&Permutation::reflection(4)),
            Err(Error::NotInGroup)
        );
        let counts = s3.square_root_counts();
        for (p, &c) in s3.elements().iter().zip(&counts) {
            assert_eq!(s3.square_root_count(p).unwrap(), c);
        }
    }

    #[test]
    fn group_file_parsing() {
        let text = "# ring shift\n1 2 3 0\n\n  # reflection\n0 3 2 1\n";
        let (n, gens) = parse_group_file(text).unwrap();
        assert_eq!(n, 4);
        assert_eq!(
            gens,
            vec![Permutation::rotation(4), Permutation::reflection(4)]
        );
        assert!(parse_group_file("0 1\n0 1 2\n").is_err());
        assert!(parse_group_file("0 0\n").is_err());
        assert!(parse_group_file("# nothing\n").is_err());
        assert!(parse_group_file("0 x\n").is_err());
    }

    #[test]
    fn kind_round_trip() {
        for kind in [
            GroupKind::Cyclic,
            GroupKind::Dihedral,
            GroupKind::Symmetric,
            GroupKind::Custom,
        ] {
            assert_eq!(kind.to_string().parse::<GroupKind>().unwrap(), kind);
        }
        assert!("alternating".parse::<GroupKind>().is_err());
    }
}
