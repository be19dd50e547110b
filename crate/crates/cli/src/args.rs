//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Construct and verify perfect-base certificates over finite fields.
#[derive(Debug, Parser)]
#[command(name = "perfbase", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a base and emit its certificate.
    Construct(ConstructArgs),
    /// Re-check every claim of a certificate file.
    Verify { file: PathBuf },
    /// Exact tensor rank of a small slice space by exhaustive search.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub variant: Variant,
    /// Write the certificate here instead of printing it.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// Ground field `F_{p^degree}`.
#[derive(Clone, Copy, Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub degree: u32,
}

#[derive(Debug, Subcommand)]
pub enum Variant {
    /// (m²−s)-base of ⟨I, M, …, M^{s−1}⟩^⊥; with --left, of its B⁻¹ variant.
    DualPowers {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        /// Bottom row a_1,…,a_m of the companion matrix.
        #[arg(long, allow_hyphen_values = true)]
        bottom: String,
        /// Distinct nonzero γ_1,…,γ_s (default: the smallest s).
        #[arg(long)]
        gammas: Option<String>,
        /// Invertible B as rows "b11,b12;b21,b22".
        #[arg(long)]
        left: Option<String>,
    },
    /// (nm−s)-base of ⟨Y_n, Y_nM, …, Y_nM^{s−1}⟩^⊥.
    DualPowersRect {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, allow_hyphen_values = true)]
        bottom: String,
        #[arg(long)]
        gammas: Option<String>,
    },
    /// Base of ⟨I, M, M⁻¹, M^{e_1}, …⟩.
    InverseFamily {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        bottom: String,
        /// Extra exponents e_1,e_2,… (may be negative).
        #[arg(long, allow_hyphen_values = true)]
        extra: Option<String>,
    },
    /// Base of ⟨L·Y_n·M^j·R : −1 ≤ j ≤ m−2⟩ for n ∈ {2, 3}.
    RectSmallN {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        bottom: String,
        /// Invertible n×n L (default identity).
        #[arg(long)]
        left: Option<String>,
        /// Invertible m×m R (default identity).
        #[arg(long)]
        right: Option<String>,
    },
    /// (m²−s)-base of ⟨I, M, …, M^{s−1}⟩^⊥ for possibly singular M.
    Singular {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, allow_hyphen_values = true)]
        bottom: String,
    },
    /// Base of the Atkinson–Lloyd primitive space of n×n matrices.
    Atkinson {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
    },
    /// MTR base of the dual of a 1-dimensional Gabidulin code in F_q^{n×m}.
    GabidulinDualMtr {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// [n×m, k, d] MTR code over F_q with its (k+d−1)-witness.
    BuildMtr {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Take the target space from this certificate.
    #[arg(long, conflicts_with_all = ["p", "bottom"])]
    pub cert: Option<PathBuf>,
    #[arg(long, required_unless_present = "cert")]
    pub p: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub degree: u32,
    /// Companion bottom row a_1,…,a_m.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "cert")]
    pub bottom: Option<String>,
    /// Exponents j of the slices Y_n·M^j.
    #[arg(long, allow_hyphen_values = true, default_value = "0,1")]
    pub powers: String,
    /// Row truncation n (default m).
    #[arg(long)]
    pub rows: Option<usize>,
    /// Use the trace dual of the slice space.
    #[arg(long)]
    pub dual: bool,
    /// Write the minimal base found as a certificate.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
