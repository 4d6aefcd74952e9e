//! Command-line front end.
//!
//! ```text
//! ckindex [--format text|json] ord   eval|add|mul|cmp|pow-omega|omega-pow ...
//! ckindex [--format text|json] cb    derive|power|height ...
//! ckindex [--format text|json] index sz|dz|dz-height|sz-l2|iso-class|iso-equiv|report ...
//! ckindex [--format text|json] lab   derive|tree|shift|obstacle ...
//! ```
//!
//! `ord`, `cb` and `index` print plain text unless `--format json` is given;
//! `lab` prints JSON unless `--format text` is given. Structured output is
//! one JSON object per invocation, described by the `*Output` types below.

use std::cmp::Ordering;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::engine::{self, DerivationTrace, NormTag, PointSet, Rank, Rational};
use crate::index::{self, IndexReport, SpaceDescriptor};
use crate::ordinal::Ordinal;
use crate::scattered::{CompactOrdinalSpace, Derived};
use crate::Error;

#[derive(Debug, Parser)]
#[command(
    name = "ckindex",
    version,
    about = "Ordinal indices of C(K) spaces and a finite slice-derivation lab"
)]
pub struct Cli {
    /// Output mode; defaults to text for ord/cb/index and json for lab.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputMode>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ordinal arithmetic in Cantor normal form
    #[command(subcommand)]
    Ord(OrdCommand),
    /// Cantor-Bendixson calculus on [0, alpha]
    #[command(subcommand)]
    Cb(CbCommand),
    /// Szlenk and dentability indices
    #[command(subcommand)]
    Index(IndexCommand),
    /// Finite slice-derivation experiments
    #[command(subcommand)]
    Lab(LabCommand),
}

#[derive(Debug, Subcommand)]
pub enum OrdCommand {
    /// Parse and print in normal form
    Eval {
        a: String,
    },
    Add {
        a: String,
        b: String,
    },
    Mul {
        a: String,
        b: String,
    },
    Cmp {
        a: String,
        b: String,
    },
    /// a^w
    PowOmega {
        a: String,
    },
    /// w^a
    OmegaPow {
        a: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CbCommand {
    /// First derived set of [0, alpha]
    Derive { alpha: String },
    /// b-th derived set of [0, alpha]
    Power { alpha: String, b: String },
    /// Cantor-Bendixson height of [0, alpha]
    Height { alpha: String },
}

#[derive(Debug, Subcommand)]
pub enum IndexCommand {
    /// Sz(C([0, alpha]))
    Sz { alpha: String },
    /// Dz(C([0, alpha]))
    Dz { alpha: String },
    /// Dz(C(K)) for a scattered compact K of height eta
    DzHeight { eta: String },
    /// Sz(L2(C([0, alpha])))
    SzL2 { alpha: String },
    /// gamma with C([0, alpha]) isomorphic to C([0, w^(w^gamma)])
    IsoClass { alpha: String },
    /// Whether C([0, alpha]) and C([0, beta]) are isomorphic
    IsoEquiv { alpha: String, beta: String },
    /// All indices of a space, with consistency checks
    Report {
        value: String,
        #[arg(long, value_enum, default_value = "interval")]
        family: Family,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// C([0, value])
    Interval,
    /// C(K) with K of height value
    Height,
    /// L2(C([0, value]))
    L2,
}

#[derive(Debug, Subcommand)]
pub enum LabCommand {
    /// Iterate the slice derivation on a point set file
    Derive {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        eps: String,
        #[arg(long, value_enum)]
        norm: Option<NormArg>,
    },
    /// Build the dyadic tree of the given depth and derive it
    Tree {
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        eps: String,
    },
    /// Apply the shift operator to a point set file
    Shift {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        by: usize,
    },
    /// Test whether the given indices form an obstacle for a point
    Obstacle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        obstacle_indices: Vec<usize>,
        #[arg(long)]
        point: usize,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        stages: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    L1,
    L2,
    Linf,
}

impl From<NormArg> for NormTag {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::L1 => NormTag::L1,
            NormArg::L2 => NormTag::L2,
            NormArg::Linf => NormTag::Linf,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderWord {
    Lt,
    Eq,
    Gt,
}

impl From<Ordering> for OrderWord {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => OrderWord::Lt,
            Ordering::Equal => OrderWord::Eq,
            Ordering::Greater => OrderWord::Gt,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrdinalOutput {
    pub command: String,
    pub inputs: Vec<Ordinal>,
    pub result: Ordinal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareOutput {
    pub command: String,
    pub inputs: Vec<Ordinal>,
    pub result: OrderWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoolOutput {
    pub command: String,
    pub inputs: Vec<Ordinal>,
    pub result: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedOutput {
    pub command: String,
    pub inputs: Vec<Ordinal>,
    pub result: Derived,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOutput {
    pub command: String,
    pub report: IndexReport,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeriveOutput {
    pub command: String,
    pub input: PointSet,
    pub trace: DerivationTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeOutput {
    pub command: String,
    pub depth: usize,
    pub root: usize,
    pub set: PointSet,
    pub trace: DerivationTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftOutput {
    pub command: String,
    pub by: usize,
    pub result: PointSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstacleOutput {
    pub command: String,
    pub point: usize,
    pub obstacle: Vec<usize>,
    #[serde(with = "crate::engine::io_rational")]
    pub epsilon: Rational,
    pub stages: usize,
    pub is_obstacle: bool,
    pub rank: Rank,
}

/// What a command produced: a JSON payload plus its text rendering.
struct Rendered {
    json: String,
    text: String,
    default_mode: OutputMode,
    exit: i32,
}

impl Rendered {
    fn new<T: Serialize>(value: &T, text: String, default_mode: OutputMode) -> Self {
        Rendered {
            json: serde_json::to_string(value).expect("outputs always serialize"),
            text,
            default_mode,
            exit: 0,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(r) => {
            let mode = cli.format.unwrap_or(r.default_mode);
            let body = match mode {
                OutputMode::Json => &r.json,
                OutputMode::Text => &r.text,
            };
            let _ = writeln!(out, "{body}");
            r.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn ord(s: &str) -> Result<Ordinal, Error> {
    Ok(s.parse::<Ordinal>()?)
}

fn rational(s: &str) -> Result<Rational, Error> {
    Ok(engine::parse_rational(s)?)
}

fn read_point_set(path: &PathBuf) -> Result<PointSet, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(PointSet::from_json(&text)?)
}

fn execute(command: &Command) -> Result<Rendered, Error> {
    match command {
        Command::Ord(c) => execute_ord(c),
        Command::Cb(c) => execute_cb(c),
        Command::Index(c) => execute_index(c),
        Command::Lab(c) => execute_lab(c),
    }
}

fn ordinal_result(command: &str, inputs: Vec<Ordinal>, result: Ordinal) -> Rendered {
    let text = result.to_string();
    let out = OrdinalOutput {
        command: command.to_string(),
        inputs,
        result,
    };
    Rendered::new(&out, text, OutputMode::Text)
}

fn execute_ord(c: &OrdCommand) -> Result<Rendered, Error> {
    Ok(match c {
        OrdCommand::Eval { a } => {
            let a = ord(a)?;
            ordinal_result("ord eval", vec![a.clone()], a)
        }
        OrdCommand::Add { a, b } => {
            let (a, b) = (ord(a)?, ord(b)?);
            let r = a.try_add(&b)?;
            ordinal_result("ord add", vec![a, b], r)
        }
        OrdCommand::Mul { a, b } => {
            let (a, b) = (ord(a)?, ord(b)?);
            let r = a.try_mul(&b)?;
            ordinal_result("ord mul", vec![a, b], r)
        }
        OrdCommand::Cmp { a, b } => {
            let (a, b) = (ord(a)?, ord(b)?);
            let word = OrderWord::from(a.cmp(&b));
            let text = serde_json::to_value(word)
                .unwrap()
                .as_str()
                .unwrap()
                .to_string();
            let out = CompareOutput {
                command: "ord cmp".into(),
                inputs: vec![a, b],
                result: word,
            };
            Rendered::new(&out, text, OutputMode::Text)
        }
        OrdCommand::PowOmega { a } => {
            let a = ord(a)?;
            let r = a.pow_omega()?;
            ordinal_result("ord pow-omega", vec![a], r)
        }
        OrdCommand::OmegaPow { a } => {
            let a = ord(a)?;
            let r = Ordinal::omega_pow(a.clone());
            ordinal_result("ord omega-pow", vec![a], r)
        }
    })
}

fn derived_result(command: &str, inputs: Vec<Ordinal>, result: Derived) -> Rendered {
    let text = result.to_string();
    let out = DerivedOutput {
        command: command.to_string(),
        inputs,
        result,
    };
    Rendered::new(&out, text, OutputMode::Text)
}

fn execute_cb(c: &CbCommand) -> Result<Rendered, Error> {
    Ok(match c {
        CbCommand::Derive { alpha } => {
            let a = ord(alpha)?;
            let r = CompactOrdinalSpace::new(a.clone()).cb_derivative();
            derived_result("cb derive", vec![a], r)
        }
        CbCommand::Power { alpha, b } => {
            let (a, b) = (ord(alpha)?, ord(b)?);
            let r = CompactOrdinalSpace::new(a.clone()).cb_power(&b);
            derived_result("cb power", vec![a, b], r)
        }
        CbCommand::Height { alpha } => {
            let a = ord(alpha)?;
            let r = CompactOrdinalSpace::new(a.clone()).cb_height();
            ordinal_result("cb height", vec![a], r)
        }
    })
}

fn report_text(r: &IndexReport) -> String {
    let na = |o: &Option<Ordinal>| o.as_ref().map_or("n/a".to_string(), Ordinal::to_string);
    let mut s = String::new();
    let _ = writeln!(s, "iso_gamma: {}", na(&r.iso_gamma));
    let _ = writeln!(s, "szlenk: {}", r.szlenk);
    let _ = writeln!(s, "dentability: {}", na(&r.dentability));
    let _ = write!(s, "cb_height: {}", na(&r.cb_height));
    for c in &r.checks {
        let _ = write!(
            s,
            "\ncheck {}: {}",
            c.name,
            if c.pass { "pass" } else { "FAIL" }
        );
    }
    s
}

fn execute_index(c: &IndexCommand) -> Result<Rendered, Error> {
    Ok(match c {
        IndexCommand::Sz { alpha } => {
            let a = ord(alpha)?;
            let r = index::szlenk_c(&a)?;
            ordinal_result("index sz", vec![a], r)
        }
        IndexCommand::Dz { alpha } => {
            let a = ord(alpha)?;
            let r = index::dentability_c(&a)?;
            ordinal_result("index dz", vec![a], r)
        }
        IndexCommand::DzHeight { eta } => {
            let e = ord(eta)?;
            let r = index::dentability_ck_from_height(&e)?;
            ordinal_result("index dz-height", vec![e], r)
        }
        IndexCommand::SzL2 { alpha } => {
            let a = ord(alpha)?;
            let r = index::szlenk_l2_c(&a)?;
            ordinal_result("index sz-l2", vec![a], r)
        }
        IndexCommand::IsoClass { alpha } => {
            let a = ord(alpha)?;
            let r = index::iso_class_gamma(&a)?;
            ordinal_result("index iso-class", vec![a], r)
        }
        IndexCommand::IsoEquiv { alpha, beta } => {
            let (a, b) = (ord(alpha)?, ord(beta)?);
            let r = index::iso_equivalent(&a, &b)?;
            let out = BoolOutput {
                command: "index iso-equiv".into(),
                inputs: vec![a, b],
                result: r,
            };
            Rendered::new(&out, r.to_string(), OutputMode::Text)
        }
        IndexCommand::Report { value, family } => {
            let v = ord(value)?;
            let descriptor = match family {
                Family::Interval => SpaceDescriptor::CInterval { alpha: v },
                Family::Height => SpaceDescriptor::CCompactHeight { eta: v },
                Family::L2 => SpaceDescriptor::L2CInterval { alpha: v },
            };
            let report = index::full_report(&descriptor)?;
            let pass = report.all_pass();
            let text = report_text(&report);
            let out = ReportOutput {
                command: "index report".into(),
                report,
                pass,
            };
            let mut r = Rendered::new(&out, text, OutputMode::Text);
            if !pass {
                r.exit = 1;
            }
            r
        }
    })
}

fn rank_text(r: Rank) -> String {
    match r {
        Rank::Finite(k) => k.to_string(),
        Rank::Stable => "stable".into(),
    }
}

fn trace_text(t: &DerivationTrace) -> String {
    let mut s = format!("epsilon: {}", t.epsilon);
    for (k, stage) in t.stages.iter().enumerate() {
        let _ = write!(s, "\nstage {k}: {stage:?}");
    }
    let ranks: Vec<String> = t.ranks.iter().map(|&r| rank_text(r)).collect();
    let _ = write!(
        s,
        "\nranks: [{}]\nstabilized: {}",
        ranks.join(", "),
        t.stabilized
    );
    s
}

fn execute_lab(c: &LabCommand) -> Result<Rendered, Error> {
    Ok(match c {
        LabCommand::Derive { input, eps, norm } => {
            let eps = rational(eps)?;
            let mut set = read_point_set(input)?;
            if let Some(n) = norm {
                set = set.with_norm((*n).into());
            }
            let trace = engine::derive(&set, &eps)?;
            let text = trace_text(&trace);
            let out = DeriveOutput {
                command: "lab derive".into(),
                input: set,
                trace,
            };
            Rendered::new(&out, text, OutputMode::Json)
        }
        LabCommand::Tree { depth, eps } => {
            let eps = rational(eps)?;
            let tree = engine::make_dyadic_tree(*depth)?;
            let trace = engine::derive(tree.set(), &eps)?;
            let text = format!(
                "root rank: {}\n{}",
                rank_text(trace.rank(tree.root())),
                trace_text(&trace)
            );
            let out = TreeOutput {
                command: "lab tree".into(),
                depth: *depth,
                root: tree.root(),
                set: tree.set().clone(),
                trace,
            };
            Rendered::new(&out, text, OutputMode::Json)
        }
        LabCommand::Shift { input, by } => {
            let set = read_point_set(input)?;
            let shifted = engine::shift(&set, *by)?;
            let text = shifted.to_json();
            let out = ShiftOutput {
                command: "lab shift".into(),
                by: *by,
                result: shifted,
            };
            Rendered::new(&out, text, OutputMode::Json)
        }
        LabCommand::Obstacle {
            input,
            obstacle_indices,
            point,
            eps,
            stages,
        } => {
            let eps = rational(eps)?;
            let set = read_point_set(input)?;
            let is_obstacle =
                engine::check_obstacle(&set, obstacle_indices, *point, &eps, *stages)?;
            let rank = engine::derive(&set, &eps)?.rank(*point);
            let text = format!("obstacle: {is_obstacle}\nrank: {}", rank_text(rank));
            let out = ObstacleOutput {
                command: "lab obstacle".into(),
                point: *point,
                obstacle: obstacle_indices.clone(),
                epsilon: eps,
                stages: *stages,
                is_obstacle,
                rank,
            };
            Rendered::new(&out, text, OutputMode::Json)
        }
    })
}
