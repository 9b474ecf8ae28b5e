use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permchan_core::perm_core::GroupKind;

#[derive(Debug, Parser)]
#[command(
    name = "permchan",
    version,
    about = "Zero-error message counting and simulation for permutation channels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print N_c, N_q and N_a for a group and alphabet size
    Count(CountArgs),
    /// List necklace representatives in lexicographic order (cyclic groups)
    Representatives(CommonArgs),
    /// Build the quantum message basis and export it as JSON (cyclic groups)
    Encode(CommonArgs),
    /// Send messages through the channel and decode them
    Simulate(SimulateArgs),
    /// Run the cross-check suite for a group and alphabet size
    Verify(CommonArgs),
    /// Print the character table and Frobenius-Schur indicators
    Chartable(CommonArgs),
    /// Tabulate exact counts against their leading asymptotics over a range of n
    Scaling(ScalingArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Cyclic,
    Dihedral,
    Symmetric,
}

impl From<KindArg> for GroupKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Cyclic => GroupKind::Cyclic,
            KindArg::Dihedral => GroupKind::Dihedral,
            KindArg::Symmetric => GroupKind::Symmetric,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Classical,
    Quantum,
    Ancilla,
    All,
}

impl Mode {
    pub fn classical(self) -> bool {
        matches!(self, Mode::Classical | Mode::All)
    }

    pub fn quantum(self) -> bool {
        matches!(self, Mode::Quantum | Mode::All)
    }

    pub fn ancilla(self) -> bool {
        matches!(self, Mode::Ancilla | Mode::All)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// Named group acting on n positions
    #[arg(
        long,
        value_enum,
        required_unless_present = "group_file",
        conflicts_with = "group_file"
    )]
    pub group: Option<KindArg>,
    /// File of generators, one permutation per line in image notation
    #[arg(long, value_name = "PATH")]
    pub group_file: Option<PathBuf>,
    /// Number of positions
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Alphabet size
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Write output here instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Lift the default limits d^n <= 2^20 and |G| <= 5040
    #[arg(long)]
    pub unsafe_bounds: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub mode: Mode,
    /// Also compute N_q and N_a from character-table multiplicities
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub mode: Mode,
    /// Draw one random group element per transmission instead of trying all
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct ScalingArgs {
    #[arg(long, value_enum)]
    pub group: KindArg,
    #[arg(long, value_enum, default_value = "classical")]
    pub mode: Mode,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long, default_value_t = 30)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Lift the default limit n <= 1000
    #[arg(long)]
    pub unsafe_bounds: bool,
}
