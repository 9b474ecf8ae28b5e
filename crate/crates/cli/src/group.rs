use std::fmt;
use std::path::PathBuf;

use permchan_core::perm_core::{
    generate_group_bounded, make_named_group_bounded, parse_group_file, GroupKind, Permutation,
    PermutationGroup, DEFAULT_STATE_LIMIT,
};
use permchan_core::rep_theory::DEFAULT_CHARACTER_TABLE_LIMIT;

use crate::args::{CommonArgs, GroupArgs};
use crate::error::{CliError, CliResult};

/// Size limits applied to enumeration and group-based commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub states: u64,
    pub group_order: usize,
}

impl Bounds {
    pub fn new(unsafe_bounds: bool) -> Self {
        if unsafe_bounds {
            Bounds {
                states: u64::MAX,
                group_order: usize::MAX,
            }
        } else {
            Bounds {
                states: DEFAULT_STATE_LIMIT,
                group_order: DEFAULT_CHARACTER_TABLE_LIMIT,
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum GroupSpec {
    Named {
        kind: GroupKind,
        n: usize,
    },
    File {
        path: PathBuf,
        degree: usize,
        generators: Vec<Permutation>,
    },
}

impl GroupSpec {
    pub fn resolve(args: &GroupArgs) -> CliResult<Self> {
        match (&args.group, &args.group_file) {
            (Some(kind), None) => {
                let n = args
                    .n
                    .ok_or_else(|| CliError::Usage("--group requires --n".into()))?;
                if n == 0 {
                    return Err(CliError::Usage("--n must be at least 1".into()));
                }
                Ok(GroupSpec::Named {
                    kind: (*kind).into(),
                    n,
                })
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                let (degree, generators) = parse_group_file(&text)?;
                if let Some(n) = args.n.filter(|&n| n != degree) {
                    return Err(CliError::Usage(format!(
                        "--n {n} disagrees with degree {degree} in {}",
                        path.display()
                    )));
                }
                Ok(GroupSpec::File {
                    path: path.clone(),
                    degree,
                    generators,
                })
            }
            _ => Err(CliError::Usage(
                "give exactly one of --group or --group-file".into(),
            )),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            GroupSpec::Named { n, .. } => *n,
            GroupSpec::File { degree, .. } => *degree,
        }
    }

    pub fn kind(&self) -> GroupKind {
        match self {
            GroupSpec::Named { kind, .. } => *kind,
            GroupSpec::File { .. } => GroupKind::Custom,
        }
    }

    pub fn build(&self, bounds: Bounds) -> CliResult<PermutationGroup> {
        let group = match self {
            GroupSpec::Named { kind, n } => {
                make_named_group_bounded(*kind, *n, bounds.group_order)?
            }
            GroupSpec::File {
                degree, generators, ..
            } => generate_group_bounded(*degree, generators, bounds.group_order)?,
        };
        Ok(group)
    }

    /// Fails with a usage error unless this is a named cyclic group.
    pub fn require_cyclic(&self, command: &str) -> CliResult<usize> {
        match self {
            GroupSpec::Named {
                kind: GroupKind::Cyclic,
                n,
            } => Ok(*n),
            _ => Err(CliError::Usage(format!(
                "{command} supports only --group cyclic"
            ))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named { kind, n } => write!(f, "{kind} n={n}"),
            GroupSpec::File { path, degree, .. } => {
                write!(f, "custom ({}) n={degree}", path.display())
            }
        }
    }
}

/// Resolved group spec, alphabet size and bounds shared by most commands.
pub struct Context {
    pub spec: GroupSpec,
    pub d: usize,
    pub bounds: Bounds,
}

impl Context {
    pub fn new(args: &CommonArgs) -> CliResult<Self> {
        if args.d == 0 {
            return Err(CliError::Usage("--d must be at least 1".into()));
        }
        Ok(Context {
            spec: GroupSpec::resolve(&args.group)?,
            d: args.d,
            bounds: Bounds::new(args.unsafe_bounds),
        })
    }

    pub fn json_header(&self) -> serde_json::Map<String, serde_json::Value> {
        let mut map = serde_json::Map::new();
        map.insert("group".into(), self.spec.kind().to_string().into());
        map.insert("n".into(), self.spec.n().into());
        map.insert("d".into(), self.d.into());
        map
    }
}
