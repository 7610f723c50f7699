use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "qg",
    version,
    about = "Quasigroup and Latin-square cryptography toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a Latin square, an n-ary quasigroup table or a row-Latin square
    Validate(ValidateArgs),
    /// Random quasigroup (isotope of Z_n)
    Gen(GenArgs),
    /// Parastrophe of a binary or n-ary quasigroup
    Parastrophe(ParastropheArgs),
    /// Direct product of two quasigroups
    Product(PairArgs),
    /// Hamming distance between two tables of the same order
    Dist(PairArgs),
    /// Shapelessness report
    Shapeless(QgArgs),
    /// Check whether a permutation is an orthomorphism of a group
    Orthomorphism(OrthomorphismArgs),
    /// Leader-chained stream encryption
    Encrypt(StreamArgs),
    /// Inverse of `encrypt`
    Decrypt(StreamArgs),
    /// Ternary stream encryption
    Encrypt3(TernaryArgs),
    /// Inverse of `encrypt3`
    Decrypt3(TernaryArgs),
    /// Composite transform R_1
    R1(R1Args),
    /// Check orthogonality of an operation system
    OsysVerify(OsysArgs),
    /// Block encryption with an orthogonal system
    OsysEncrypt(OsysMessageArgs),
    /// Inverse of `osys-encrypt`
    OsysDecrypt(OsysMessageArgs),
    /// Quasigroup hash (one or several lanes)
    Hash(HashArgs),
    /// Key transport over a CI-quasigroup
    CiTransport(CiTransportArgs),
    /// Key transport over an (r,s,t)-inverse quasigroup
    RstTransport(RstTransportArgs),
    /// Public/private key transport with J(u) as private key
    Ex8(Ex8Args),
    /// Power of a row-Latin square
    RlsPower(RlsPowerArgs),
    /// Multiplicative period of a row-Latin square
    RlsPeriod(RlsArgs),
    /// Key agreement with powers of a row-Latin square
    RlsAgree(RlsAgreeArgs),
    /// Zero-knowledge isotopy proof simulation
    Zkp(ZkpArgs),
    /// PN sequence, its quasigroup folds and linear complexities
    Nlpn(NlpnArgs),
    /// ANF degrees and MQQ type of a quasigroup of order 2^d
    MqqClassify(QgArgs),
    /// Generate a multivariate quadratic quasigroup
    MqqGen(MqqGenArgs),
    /// Count completions of a partial Latin square
    CsCount(CsCountArgs),
    /// Unique completion of a partial Latin square
    CsUnique(PartialArgs),
    /// Check whether a partial square is a critical set of a square
    CsCritical(CsCriticalArgs),
    /// Greedy critical-set search
    CsGreedy(SeededQgArgs),
    /// Smallest critical set by exhaustive search (order <= 4)
    CsSmallest(QgArgs),
    /// Split a critical set into shares
    CsDeal(CsDealArgs),
    /// Recover a square from shares
    CsReconstruct(CsReconstructArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ValidateArgs {
    /// Quasigroup grid file
    #[arg(long)]
    pub qg: Option<PathBuf>,
    /// N-ary table file (`n k` header)
    #[arg(long)]
    pub nary: Option<PathBuf>,
    /// Row-Latin square grid file
    #[arg(long)]
    pub rows: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub order: usize,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ParastropheArgs {
    #[arg(
        long,
        conflicts_with = "nary",
        required_unless_present = "nary",
        requires = "sigma"
    )]
    pub qg: Option<PathBuf>,
    /// Element of S3 such as `(23)` or `(132)`
    #[arg(long)]
    pub sigma: Option<String>,
    #[arg(long, requires = "perm")]
    pub nary: Option<PathBuf>,
    /// Permutation of the k+1 places, 0-based images
    #[arg(long)]
    pub perm: Option<String>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub qg: PathBuf,
    #[arg(long)]
    pub with: PathBuf,
}

#[derive(Debug, Args)]
pub struct QgArgs {
    #[arg(long)]
    pub qg: PathBuf,
}

#[derive(Debug, Args)]
pub struct SeededQgArgs {
    #[arg(long)]
    pub qg: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct OrthomorphismArgs {
    /// Group table
    #[arg(long)]
    pub qg: PathBuf,
    /// Permutation images
    #[arg(long)]
    pub perm: String,
}

#[derive(Debug, Args)]
pub struct MessageArgs {
    /// Message; read from stdin when absent
    #[arg(long = "in")]
    pub input: Option<String>,
}

#[derive(Debug, Args)]
pub struct StreamArgs {
    /// Key file: grid, optionally followed by a leader line
    #[arg(long)]
    pub qg: PathBuf,
    /// Leader; overrides the key file's leader line
    #[arg(long)]
    pub leader: Option<usize>,
    #[command(flatten)]
    pub message: MessageArgs,
    /// Byte mode (order 256): raw bytes for plaintext, hex for ciphertext
    #[arg(long)]
    pub bytes: bool,
}

#[derive(Debug, Args)]
pub struct TernaryArgs {
    /// Ternary quasigroup table
    #[arg(long)]
    pub nary: PathBuf,
    /// Four leaders `l1 l2 l3 l4`
    #[arg(long)]
    pub leaders: String,
    /// Plaintext slot: 14, 24 or 34
    #[arg(long, default_value = "14")]
    pub variant: String,
    #[command(flatten)]
    pub message: MessageArgs,
}

#[derive(Debug, Args)]
pub struct R1Args {
    #[arg(long)]
    pub qg: PathBuf,
    #[command(flatten)]
    pub message: MessageArgs,
}

#[derive(Debug, Args)]
pub struct OsysArgs {
    /// Operation table files, one per operation
    #[arg(long, required_unless_present = "p")]
    pub nary: Vec<PathBuf>,
    /// Prime modulus of a linear system
    #[arg(long, requires = "matrix", conflicts_with = "nary")]
    pub p: Option<u64>,
    /// Coefficient matrix of a linear system, rows separated by `;`
    #[arg(long, requires = "p")]
    pub matrix: Option<String>,
}

#[derive(Debug, Args)]
pub struct OsysMessageArgs {
    #[command(flatten)]
    pub system: OsysArgs,
    #[command(flatten)]
    pub message: MessageArgs,
}

#[derive(Debug, Args)]
pub struct HashArgs {
    #[arg(long)]
    pub qg: PathBuf,
    #[arg(long)]
    pub leader: Option<usize>,
    /// Leaders of the digest lanes, e.g. `"0 1 2"`
    #[arg(long)]
    pub lanes: Option<String>,
    #[command(flatten)]
    pub message: MessageArgs,
    /// Byte mode (order 256): raw bytes in, hex digest out
    #[arg(long)]
    pub bytes: bool,
}

/// Either `--modulus/--multiplier` for the linear family or `--qg/--j`.
#[derive(Debug, Args)]
pub struct CiSource {
    #[arg(long, requires = "multiplier", conflicts_with_all = ["qg", "j"])]
    pub modulus: Option<u64>,
    #[arg(long, requires = "modulus")]
    pub multiplier: Option<u64>,
    #[arg(long, requires = "j", required_unless_present = "modulus")]
    pub qg: Option<PathBuf>,
    /// Permutation J, 0-based images
    #[arg(long, requires = "qg")]
    pub j: Option<String>,
}

#[derive(Debug, Args)]
pub struct CiTransportArgs {
    #[command(flatten)]
    pub source: CiSource,
    /// Public element c
    #[arg(long)]
    pub element: usize,
    #[arg(long)]
    pub message: usize,
}

#[derive(Debug, Args)]
pub struct RstTransportArgs {
    #[command(flatten)]
    pub source: CiSource,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub r: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub s: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub t: i64,
    /// Exponent k of the public element J^k(u)
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long)]
    pub u: usize,
    #[arg(long)]
    pub message: usize,
}

#[derive(Debug, Args)]
pub struct Ex8Args {
    #[command(flatten)]
    pub source: CiSource,
    /// Public key u
    #[arg(long)]
    pub public: usize,
    #[arg(long)]
    pub message: usize,
}

#[derive(Debug, Args)]
pub struct RlsArgs {
    /// Row-Latin square grid file
    #[arg(long)]
    pub rows: PathBuf,
}

#[derive(Debug, Args)]
pub struct RlsPowerArgs {
    #[arg(long)]
    pub rows: PathBuf,
    #[arg(long)]
    pub exp: u64,
}

#[derive(Debug, Args)]
pub struct RlsAgreeArgs {
    #[arg(long)]
    pub rows: PathBuf,
    #[arg(long)]
    pub x: u64,
    #[arg(long)]
    pub y: u64,
}

#[derive(Debug, Args)]
pub struct ZkpArgs {
    /// The public square L
    #[arg(long)]
    pub qg: PathBuf,
    /// Secret isotopy file (rows, columns, symbols); random when absent
    #[arg(long)]
    pub isotopy: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    pub rounds: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Run a prover that does not know the isotopy
    #[arg(long)]
    pub cheat: bool,
}

#[derive(Debug, Args)]
pub struct NlpnArgs {
    /// Prime field size
    #[arg(long)]
    pub p: u64,
    /// LFSR degree
    #[arg(long)]
    pub m: usize,
    /// Feedback coefficients `c1,...,cm`; a built-in primitive polynomial when absent
    #[arg(long)]
    pub poly: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub shift: usize,
    /// Quasigroup of order p used for the fold
    #[arg(long)]
    pub qg: PathBuf,
}

#[derive(Debug, Args)]
pub struct MqqGenArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 10_000)]
    pub max_attempts: u64,
}

#[derive(Debug, Args)]
pub struct PartialArgs {
    /// Partial square file (`n`, then `r c s` lines)
    #[arg(long)]
    pub partial: PathBuf,
}

#[derive(Debug, Args)]
pub struct CsCountArgs {
    #[arg(long)]
    pub partial: PathBuf,
    #[arg(long, default_value_t = 1_000_000)]
    pub limit: u64,
}

#[derive(Debug, Args)]
pub struct CsCriticalArgs {
    #[arg(long)]
    pub partial: PathBuf,
    #[arg(long)]
    pub qg: PathBuf,
}

#[derive(Debug, Args)]
pub struct CsDealArgs {
    /// The secret square
    #[arg(long)]
    pub qg: PathBuf,
    /// Critical set file
    #[arg(long)]
    pub critical: PathBuf,
    #[arg(long)]
    pub participants: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write share-<i>.txt files here instead of printing
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CsReconstructArgs {
    #[arg(long)]
    pub order: usize,
    /// Share file; repeat for each share
    #[arg(long)]
    pub share: Vec<PathBuf>,
}
