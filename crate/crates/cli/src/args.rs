//! Command-line surface of the `nambu3` binary.
//!
//! Three verbs: `verify` runs a named identity suite and emits a report,
//! `gen` writes reproducible input files (random matrices, matrix-unit
//! algebras), and `show` prints one derived quantity of an input file.

use clap::{Args, Parser, Subcommand, ValueEnum};
use nambu3_core::{Direction, Sampling};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "nambu3",
    version,
    about = "Verifier for bracket identities of cubic matrices, cubic supermatrices, \
             and cochain-induced n-ary brackets",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a named verification suite and emit a pass/fail report.
    Verify(VerifyArgs),
    /// Generate input files: seeded random matrices or matrix-unit algebras.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Print a derived quantity of an input file.
    Show {
        #[command(subcommand)]
        what: ShowCommand,
    },
}

/// The named suites. Each one verifies a family of identities and reports
/// the maximal residual seen per identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Ternary Filippov-Jacobi identity for the quantum Nambu bracket of
    /// cubic matrices, plus the alternating-sum equivalence of the bracket.
    CubicFi,
    /// The four triple-product laws (lr-associativity, adjoint reversal,
    /// middle reversal, outer swap) for cubic matrices.
    CubicProp1,
    /// lr-associativity of the triple product, with the first- and
    /// second-kind regroupings recorded as measured non-identities.
    CubicAssoc,
    /// Graded Filippov-Jacobi identity for the quantum super Nambu bracket
    /// over every degree pattern, plus the graded alternating-sum
    /// equivalence.
    SuperGfi,
    /// The three graded triple-product laws over every degree pattern.
    SuperProp2,
    /// Trace and supertrace laws: vanishing on (super)commutators, odd
    /// supertrace, and adjoint conjugation.
    TraceLaws,
    /// Wedge-condition report for the cochain-induced n-ary bracket on an
    /// ungraded structure-constant algebra.
    CochainFi,
    /// Hypothesis-and-identity report for the cochain-induced graded
    /// ternary bracket on a structure-constant superalgebra.
    CochainGfi,
    /// Entrywise comparison of the induced brackets on matrix-unit
    /// algebras against a direct dense-matrix evaluation.
    GlCrosscheck,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::CubicFi => "cubic-fi",
            Suite::CubicProp1 => "cubic-prop1",
            Suite::CubicAssoc => "cubic-assoc",
            Suite::SuperGfi => "super-gfi",
            Suite::SuperProp2 => "super-prop2",
            Suite::TraceLaws => "trace-laws",
            Suite::CochainFi => "cochain-fi",
            Suite::CochainGfi => "cochain-gfi",
            Suite::GlCrosscheck => "gl-crosscheck",
        }
    }
}

/// Scalar regime for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Gaussian integers; residuals must be literally zero.
    Exact,
    /// Complex doubles; residuals judged against --tol.
    Float,
}

impl ModeArg {
    pub fn name(self) -> &'static str {
        match self {
            ModeArg::Exact => "exact",
            ModeArg::Float => "float",
        }
    }
}

/// Basis-tuple sampling policy for the cochain suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleArg {
    /// Exhaustive when the tuple space is small enough, random otherwise.
    Auto,
    /// Sweep every basis tuple.
    Exhaustive,
    /// Seeded random tuples.
    Random,
}

impl From<SampleArg> for Sampling {
    fn from(s: SampleArg) -> Sampling {
        match s {
            SampleArg::Auto => Sampling::Auto,
            SampleArg::Exhaustive => Sampling::Exhaustive,
            SampleArg::Random => Sampling::Random,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportArg {
    /// One PASS/FAIL line per check.
    Text,
    /// Canonical JSON: sorted keys, fixed float formatting.
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirArg {
    I,
    J,
    K,
}

impl From<DirArg> for Direction {
    fn from(d: DirArg) -> Direction {
        match d {
            DirArg::I => Direction::I,
            DirArg::J => Direction::J,
            DirArg::K => Direction::K,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Which suite to run.
    #[arg(value_enum)]
    pub suite: Suite,

    /// Matrix order for the cubic suites; matrix-unit algebra order for
    /// cochain-fi when no --algebra file is given.
    #[arg(long, default_value_t = 3)]
    pub order: usize,

    /// Number of even labels for the super suites.
    #[arg(long, default_value_t = 1)]
    pub r: usize,

    /// Number of odd labels for the super suites.
    #[arg(long, default_value_t = 1)]
    pub s: usize,

    /// Even block size of the matrix-unit superalgebra for cochain-gfi
    /// when no --algebra file is given.
    #[arg(long, default_value_t = 1)]
    pub m: usize,

    /// Odd block size of the matrix-unit superalgebra for cochain-gfi
    /// when no --algebra file is given.
    #[arg(long, default_value_t = 1)]
    pub n: usize,

    /// Expected bracket arity for the cochain suites; cross-checked
    /// against the cochain degree (arity = degree + 2).
    #[arg(long)]
    pub arity: Option<usize>,

    /// Random trials (per degree pattern for the super suites).
    #[arg(long, default_value_t = 200)]
    pub trials: u64,

    /// Seed for the deterministic random stream.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Scalar arithmetic regime.
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,

    /// Residual tolerance. Exact mode forces 0; float mode requires a
    /// positive value (default 1e-9).
    #[arg(long)]
    pub tol: Option<f64>,

    /// Integer entries are drawn uniformly from [-R, R] in exact mode.
    #[arg(long, default_value_t = 3)]
    pub range: i64,

    /// Basis-tuple sampling policy for the cochain suites.
    #[arg(long, value_enum, default_value_t = SampleArg::Auto)]
    pub sample: SampleArg,

    /// Structure-constant algebra file for the cochain suites
    /// (requires --cochain).
    #[arg(long)]
    pub algebra: Option<PathBuf>,

    /// Cochain file for the cochain suites (requires --algebra).
    #[arg(long)]
    pub cochain: Option<PathBuf>,

    /// Cubic matrix file pinned as the first argument of every trial
    /// tuple (cubic-fi, cubic-prop1, cubic-assoc only).
    #[arg(long)]
    pub matrix: Option<PathBuf>,

    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportArg::Text)]
    pub report: ReportArg,

    /// Write the report to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parity selection for generated supermatrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    /// Keep the full draw (generically inhomogeneous).
    Mixed,
    /// Zero the odd cells.
    Even,
    /// Zero the even cells.
    Odd,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Seeded random cubic matrix of a given order.
    RandomCubic {
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        /// Integer entries are drawn uniformly from [-R, R] in exact mode.
        #[arg(long, default_value_t = 3)]
        range: i64,
        /// Output file (standard output when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random cubic supermatrix with r even and s odd labels.
    RandomSuper {
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        #[arg(long, default_value_t = 3)]
        range: i64,
        /// Homogeneity of the generated matrix.
        #[arg(long, value_enum, default_value_t = ParityArg::Mixed)]
        parity: ParityArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Matrix-unit basis algebra of n-by-n matrices with its trace cochain.
    Gl {
        #[arg(long, default_value_t = 2)]
        order: usize,
        /// Algebra output file (standard output when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the trace cochain here.
        #[arg(long)]
        cochain_out: Option<PathBuf>,
    },
    /// Matrix-unit basis superalgebra with m even and n odd block labels,
    /// with its supertrace cochain.
    GlSuper {
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the supertrace cochain here.
        #[arg(long)]
        cochain_out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ShowCommand {
    /// Direction-relative trace of a cubic matrix file.
    Trace {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = DirArg::J)]
        direction: DirArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
    },
    /// Supertrace of a cubic supermatrix file.
    Supertrace {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
    },
    /// One section of a cubic matrix file, printed as a rectangular matrix.
    Section {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum)]
        direction: DirArg,
        /// 1-based section label.
        #[arg(long)]
        label: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
    },
}
