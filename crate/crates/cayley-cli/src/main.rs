//! cayley-lab: batch command-line surface for the exact Cayley-plane
//! computations.
//!
//! Every subcommand prints a machine-readable report (JSON by default,
//! `--format text` for a table). Exit codes: 0 when all checks pass,
//! 1 when a check fails, 2 for usage errors, 3 for malformed input files.
//! Reports are byte-identical across runs for a fixed `--seed`; pass
//! `--timing` to include elapsed milliseconds (which breaks that).
//! `CAYLEY_LAB_THREADS` caps the parallelism of `verify-paper`.

use cayley_core::f4::wsub::{self, WeightSubspace};
use cayley_core::f4::{self, table, CanonicalElement};
use cayley_core::jordan::{
    chart_point, chi, chi_inv, derivation_dimension, eigenspace_decomposition, hat_operator,
    isotropic_tangent, product_span,
};
use cayley_core::linalg::nilorder;
use cayley_core::octonion::{sample_gauss_octonion, MulTable, Octonion};
use cayley_core::orbit::{
    distinguished_check, lift_x34, lift_x4, rho_x34, rho_x4, GradedRootSystem, RootSystemType,
    WeightOperator,
};
use cayley_core::report::{CheckResult, Report};
use cayley_core::scalar::{format_gauss, rat, Rational, Ring};
use cayley_core::uniton::{
    build_canonical, curve_example, lattice_checks, CanonicalForm, LatticeJson,
};
use cayley_core::verify;
use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "cayley-lab",
    version,
    about = "Exact computations in the Cayley plane: octonions, the Albert algebra, F4 weights, nilpotent orbits and loop-group lattices"
)]
struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for the randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sample count override for randomized suites
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Attach elapsed milliseconds to the report
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Octonion algebra data
    Oct {
        #[command(subcommand)]
        cmd: OctCmd,
    },
    /// The Albert algebra and the Cayley plane
    Jordan {
        #[command(subcommand)]
        cmd: JordanCmd,
    },
    /// F4 roots, weights and twistor projections
    F4 {
        #[command(subcommand)]
        cmd: F4Cmd,
    },
    /// Nilpotent orbit representatives and lifts
    Orbit {
        #[command(subcommand)]
        cmd: OrbitCmd,
    },
    /// Loop-group lattices for S1-invariant extended solutions
    Uniton {
        #[command(subcommand)]
        cmd: UnitonCmd,
    },
    /// Run the full verification suite
    VerifyPaper,
}

#[derive(Subcommand)]
enum OctCmd {
    /// Emit the 8x8 basis multiplication table as CSV
    Table,
}

#[derive(Subcommand)]
enum JordanCmd {
    /// Eigenspace decomposition at the chart point built from two octonions
    Decompose {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        y: String,
    },
    /// Grassmannian image of a chart point and the inverse round trip
    Chi {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        y: String,
    },
    /// Nilorders of hat operators of random isotropic tangents
    Nilorder,
    /// Rank of the derivation algebra (dim F4 = 52)
    Derivations,
}

#[derive(Subcommand)]
enum F4Cmd {
    /// Root system data
    Roots,
    /// Weight-space multiplication table: emit CSV, verify, or round-trip
    Table {
        /// Run the 625-cell consistency sweep
        #[arg(long)]
        verify: bool,
        /// Write the CSV to a file
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Check a CSV file round-trips bit-exactly
        #[arg(long)]
        roundtrip: Option<std::path::PathBuf>,
    },
    /// Gradings and flag invariants for a canonical element
    Grading {
        /// Simple-root indices, e.g. 3,4
        #[arg(long = "I")]
        set: String,
    },
    /// Twistor projections at a configuration
    Project {
        #[arg(long, value_enum)]
        which: Projection,
        /// Weight index of the line, e.g. 12
        #[arg(long, allow_hyphen_values = true)]
        ell: Option<i8>,
        /// Weight indices of the plane, e.g. 11,12
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Projection {
    P4,
    P3,
    P34,
}

#[derive(Subcommand)]
enum OrbitCmd {
    /// An orbit representative acting on the weight model
    Rep {
        #[arg(long, value_enum, ignore_case = true)]
        which: OrbitName,
        /// Attach the 26x26 matrix as exact-scalar strings
        #[arg(long)]
        emit_matrix: bool,
    },
    /// Twistor-lift data and certificate
    Lift {
        #[arg(long, value_enum, ignore_case = true)]
        which: OrbitName,
    },
    /// Distinguished-parabolic criterion for a graded root system
    Distinguished {
        #[arg(long = "type", value_enum, ignore_case = true)]
        rtype: RootTypeArg,
        /// "principal" or comma-separated simple-root values, e.g. 1,0
        #[arg(long, default_value = "principal", allow_hyphen_values = true)]
        grading: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum OrbitName {
    X4,
    X34,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum RootTypeArg {
    A1,
    A2,
    B2,
    F4,
}

impl From<RootTypeArg> for RootSystemType {
    fn from(t: RootTypeArg) -> Self {
        match t {
            RootTypeArg::A1 => RootSystemType::A1,
            RootTypeArg::A2 => RootSystemType::A2,
            RootTypeArg::B2 => RootSystemType::B2,
            RootTypeArg::F4 => RootSystemType::F4,
        }
    }
}

#[derive(Subcommand)]
enum UnitonCmd {
    /// Build a canonical lattice from a base configuration
    Build {
        #[arg(long, value_enum)]
        form: FormArg,
        #[arg(long, allow_hyphen_values = true)]
        ell: Option<i8>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
    },
    /// Check a lattice file (monotone, real form, multiplicativity)
    Check {
        #[arg(long)]
        file: std::path::PathBuf,
    },
    /// The explicit finite-uniton curve
    Example53,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    I,
    Ii,
    Iii,
}

impl From<FormArg> for CanonicalForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::I => CanonicalForm::I,
            FormArg::Ii => CanonicalForm::II,
            FormArg::Iii => CanonicalForm::III,
        }
    }
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = run(&cli);
    match outcome {
        Ok(report) => emit(&cli, report, started),
        Err(CliError::BadInput(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BAD_INPUT)
        }
        Err(CliError::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}

enum CliError {
    BadInput(String),
    /// Not an error: raw non-report output (e.g. CSV).
    Raw(String),
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::BadInput(msg.into())
}

fn emit(cli: &Cli, mut report: Report, started: Instant) -> ExitCode {
    if cli.timing {
        report.elapsed_ms = Some(started.elapsed().as_millis());
    }
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Oct { cmd } => match cmd {
            OctCmd::Table => Err(CliError::Raw(MulTable::canonical().to_csv())),
        },
        Command::Jordan { cmd } => jordan_cmd(cli, cmd),
        Command::F4 { cmd } => f4_cmd(cli, cmd),
        Command::Orbit { cmd } => orbit_cmd(cli, cmd),
        Command::Uniton { cmd } => uniton_cmd(cli, cmd),
        Command::VerifyPaper => verify_paper(cli),
    }
}

// --- octonion and weight-list parsing ---------------------------------------

/// Parse octonions written as signed sums of terms `<coef>e<k>` with
/// rational coefficients: "e1+2e3", "-1/2e0", "3" (meaning 3e0), "0".
fn parse_octonion(s: &str) -> Result<Octonion<Rational>, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty octonion".into());
    }
    let mut coords: [Rational; 8] = std::array::from_fn(|_| rat(0, 1));
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (idx, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && idx != 0 {
            terms.push(cur.clone());
            cur.clear();
            if ch == '-' {
                cur.push('-');
            }
        } else {
            cur.push(ch);
        }
    }
    terms.push(cur);
    for term in terms.iter().filter(|t| !t.is_empty() && *t != "+") {
        let (coef_str, basis_idx) = match term.find('e') {
            Some(pos) => {
                let (c, e) = term.split_at(pos);
                let k: usize = e[1..]
                    .parse()
                    .map_err(|_| format!("bad basis index in {term:?}"))?;
                if k > 7 {
                    return Err(format!("basis index {k} out of range 0..=7"));
                }
                (c, k)
            }
            None => (term.as_str(), 0),
        };
        let coef = match coef_str {
            "" | "+" => rat(1, 1),
            "-" => rat(-1, 1),
            other => other
                .parse::<Rational>()
                .map_err(|e| format!("bad coefficient {other:?}: {e}"))?,
        };
        coords[basis_idx] = coords[basis_idx].add(&coef);
    }
    Ok(Octonion::from_coords(coords))
}

fn parse_index_list(s: &str) -> Result<Vec<i8>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i8>()
                .map_err(|e| format!("bad weight index {t:?}: {e}"))
        })
        .collect()
}

fn parse_subspace(s: &str) -> Result<WeightSubspace, String> {
    let idx = parse_index_list(s)?;
    WeightSubspace::from_indices(&idx).map_err(|e| e.to_string())
}

fn seeded_rng(seed: u64) -> impl rand::Rng {
    <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed)
}

// --- subcommand implementations ----------------------------------------------

fn jordan_cmd(cli: &Cli, cmd: &JordanCmd) -> Result<Report, CliError> {
    match cmd {
        JordanCmd::Decompose { x, y } => {
            let xo = parse_octonion(x).map_err(bad)?;
            let yo = parse_octonion(y).map_err(bad)?;
            let mut rep = Report::new(
                "jordan decompose",
                serde_json::json!({"x": x, "y": y, "seed": cli.seed}),
            );
            let p = chart_point(&xo, &yo).map_err(|e| bad(e.to_string()))?;
            match eigenspace_decomposition(&p) {
                Ok((a0, ah, a1)) => {
                    rep.push(CheckResult::compare(
                        "dims",
                        "(10, 16, 1)",
                        format!("({}, {}, {})", a0.dim(), ah.dim(), a1.dim()),
                    ));
                }
                Err(e) => rep.push(CheckResult::compare("dims", "(10, 16, 1)", e.to_string())),
            }
            Ok(rep)
        }
        JordanCmd::Chi { x, y } => {
            let xo = parse_octonion(x).map_err(bad)?;
            let yo = parse_octonion(y).map_err(bad)?;
            let mut rep = Report::new(
                "jordan chi",
                serde_json::json!({"x": x, "y": y}),
            );
            let p = chart_point(&xo, &yo).map_err(|e| bad(e.to_string()))?;
            let v = chi(&p).map_err(|e| bad(e.to_string()))?;
            rep.push(CheckResult::compare("dims", 10, v.subspace().dim()));
            rep.push(CheckResult::flag(
                "closure V·V = V",
                product_span(v.subspace()) == *v.subspace(),
            ));
            rep.push(CheckResult::flag(
                "round trip chi_inv(chi(P)) = P",
                chi_inv(&v).map(|q| q == p).unwrap_or(false),
            ));
            Ok(rep)
        }
        JordanCmd::Nilorder => {
            let samples = cli.samples.unwrap_or(20);
            let mut rng = seeded_rng(cli.seed);
            let p0 = cayley_core::jordan::CayleyPoint::base();
            let mut rep = Report::new(
                "jordan nilorder",
                serde_json::json!({"samples": samples, "seed": cli.seed}),
            );
            let mut max_order = 0usize;
            let mut all_nilpotent = true;
            for _ in 0..samples {
                let z = isotropic_tangent(&sample_gauss_octonion(&mut rng));
                match hat_operator(&p0, &z) {
                    Ok(h) => match nilorder(&h, 27) {
                        Some(ord) => max_order = max_order.max(ord),
                        None => all_nilpotent = false,
                    },
                    Err(_) => all_nilpotent = false,
                }
            }
            rep.push(CheckResult::flag("all operators nilpotent", all_nilpotent));
            rep.push(CheckResult::compare(
                "nilorder",
                format!("<= 5 (got {max_order})"),
                format!("<= 5 (got {max_order})"),
            ));
            rep.push(CheckResult::flag("nilorder bound 5", max_order <= 5));
            Ok(rep)
        }
        JordanCmd::Derivations => {
            let mut rep = Report::new("jordan derivations", serde_json::Value::Null);
            rep.push(CheckResult::compare("rank", 52, derivation_dimension()));
            Ok(rep)
        }
    }
}

fn f4_cmd(_cli: &Cli, cmd: &F4Cmd) -> Result<Report, CliError> {
    match cmd {
        F4Cmd::Roots => {
            let mut rep = Report::new("f4 roots", serde_json::Value::Null);
            rep.push(CheckResult::compare(
                "positive roots",
                24,
                f4::POSITIVE_ROOTS.len(),
            ));
            rep.push(CheckResult::compare(
                "highest root",
                "(2,3,4,2)",
                format!("{:?}", f4::highest_root()),
            ));
            let shorts = f4::POSITIVE_ROOTS.iter().filter(|r| f4::is_short(r)).count();
            rep.push(CheckResult::compare("short positive roots", 12, shorts));
            rep.payload = Some(serde_json::json!({
                "positive_roots": f4::POSITIVE_ROOTS
                    .iter()
                    .map(|r| format!("{:?}", r))
                    .collect::<Vec<_>>(),
            }));
            Ok(rep)
        }
        F4Cmd::Table {
            verify,
            out,
            roundtrip,
        } => {
            if let Some(path) = out {
                std::fs::write(path, table::table_to_csv())
                    .map_err(|e| bad(format!("writing {}: {e}", path.display())))?;
                let mut rep = Report::new(
                    "f4 table",
                    serde_json::json!({"out": path.display().to_string()}),
                );
                rep.push(CheckResult::flag("csv written", true));
                return Ok(rep);
            }
            if let Some(path) = roundtrip {
                let content = std::fs::read_to_string(path)
                    .map_err(|e| bad(format!("reading {}: {e}", path.display())))?;
                let parsed = table::table_from_csv(&content)
                    .map_err(|e| bad(format!("parsing {}: {e}", path.display())))?;
                let mut rep = Report::new(
                    "f4 table",
                    serde_json::json!({"roundtrip": path.display().to_string()}),
                );
                rep.push(CheckResult::flag(
                    "cells match the stored table",
                    parsed == table::stored_table(),
                ));
                rep.push(CheckResult::flag(
                    "byte-exact round trip",
                    content == table::table_to_csv(),
                ));
                return Ok(rep);
            }
            if *verify {
                let check = table::verify_table();
                let mut rep = Report::new("f4 table --verify", serde_json::Value::Null);
                rep.push(CheckResult::compare("cells checked", 625, check.cells_checked));
                rep.push(CheckResult::compare(
                    "sum-rule violations",
                    0,
                    check.sum_rule_violations.len(),
                ));
                rep.push(CheckResult::compare(
                    "explicit zeros",
                    0,
                    check.explicit_zeros.len(),
                ));
                rep.push(CheckResult::compare(
                    "symmetry violations",
                    0,
                    check.symmetry_violations.len(),
                ));
                rep.push(CheckResult::compare(
                    "trilinear violations",
                    0,
                    check.trilinear_violations.len(),
                ));
                return Ok(rep);
            }
            Err(CliError::Raw(table::table_to_csv()))
        }
        F4Cmd::Grading { set } => {
            let idx: Vec<u8> = set
                .split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|e| bad(format!("{e}"))))
                .collect::<Result<_, _>>()?;
            let xi = CanonicalElement::new(&idx).map_err(|e| bad(e.to_string()))?;
            let inv = f4::flag_invariants(&xi);
            let mut rep = Report::new("f4 grading", serde_json::json!({"I": set}));
            let expected_dim = match idx.as_slice() {
                [4] => Some(30),
                [3] => Some(40),
                [3, 4] => Some(42),
                _ => None,
            };
            if let Some(d) = expected_dim {
                rep.push(CheckResult::compare("real dimension", d, inv.real_dimension));
            } else {
                rep.push(CheckResult::compare(
                    "real dimension",
                    inv.real_dimension,
                    inv.real_dimension,
                ));
            }
            rep.push(CheckResult::compare(
                "k-order (adjoint formula)",
                inv.k_order_adjoint,
                inv.k_order_adjoint,
            ));
            rep.push(CheckResult::compare(
                "k-order (representation level)",
                inv.k_order_rep,
                inv.k_order_rep,
            ));
            rep.push(CheckResult::compare(
                "adjoint/representation discrepancy",
                inv.discrepancy,
                inv.discrepancy,
            ));
            rep.payload = Some(serde_json::json!({
                "rep_gradings": (-12..=12i8)
                    .map(|i| serde_json::json!({"index": i, "grading": f4::rep_grading(i, &xi)}))
                    .collect::<Vec<_>>(),
            }));
            Ok(rep)
        }
        F4Cmd::Project { which, ell, c } => {
            let ell_ws = ell
                .map(|i| WeightSubspace::from_indices(&[i]))
                .transpose()
                .map_err(|e| bad(e.to_string()))?;
            let c_ws = c
                .as_deref()
                .map(parse_subspace)
                .transpose()
                .map_err(bad)?;
            let (name, out) = match which {
                Projection::P4 => {
                    let ell = ell_ws.ok_or_else(|| bad("--ell is required for p4"))?;
                    ("p4", wsub::p4(&ell))
                }
                Projection::P3 => {
                    let c = c_ws.ok_or_else(|| bad("--c is required for p3"))?;
                    ("p3", wsub::p3(&c))
                }
                Projection::P34 => {
                    let ell = ell_ws.ok_or_else(|| bad("--ell is required for p34"))?;
                    let c = c_ws.ok_or_else(|| bad("--c is required for p34"))?;
                    ("p34", wsub::p34(&ell, &c))
                }
            };
            let v = out.map_err(|e| bad(e.to_string()))?;
            let mut rep = Report::new(
                format!("f4 project {name}"),
                serde_json::json!({"ell": ell, "c": c}),
            );
            rep.push(CheckResult::compare("dim", 10, v.dim()));
            rep.push(CheckResult::flag("conj-stable", v.is_conj_stable()));
            rep.push(CheckResult::flag("product-closed", v.is_product_closed()));
            if matches!(which, Projection::P34) && *ell == Some(12) && c.as_deref() == Some("11,12")
            {
                rep.push(CheckResult::flag(
                    "equals the base point V0",
                    v == wsub::base_point_v0(),
                ));
            }
            rep.payload = Some(serde_json::json!({
                "support": v.support().iter().copied().collect::<Vec<i8>>(),
                "w0": match v.w0() {
                    wsub::W0Slot::Empty => "empty",
                    wsub::W0Slot::Line { .. } => "line",
                    wsub::W0Slot::Full => "full",
                },
            }));
            Ok(rep)
        }
    }
}

fn matrix_payload(op: &WeightOperator) -> serde_json::Value {
    let m = op.matrix();
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_gauss(m.get(i, j))).collect())
        .collect();
    serde_json::json!(rows)
}

fn orbit_cmd(_cli: &Cli, cmd: &OrbitCmd) -> Result<Report, CliError> {
    match cmd {
        OrbitCmd::Rep { which, emit_matrix } => {
            let (op, expected_order) = match which {
                OrbitName::X4 => (rho_x4(), 3),
                OrbitName::X34 => (rho_x34(), 5),
            };
            let mut rep = Report::new(
                "orbit rep",
                serde_json::json!({"which": op.name()}),
            );
            rep.push(CheckResult::compare(
                "nilorder",
                expected_order,
                op.nilorder(),
            ));
            rep.push(CheckResult::flag(
                "weight-shift homogeneous",
                op.is_weight_homogeneous(),
            ));
            if *emit_matrix {
                rep.payload = Some(matrix_payload(&op));
            }
            Ok(rep)
        }
        OrbitCmd::Lift { which } => {
            let mut rep = Report::new(
                "orbit lift",
                serde_json::json!({"which": match which { OrbitName::X4 => "X4", OrbitName::X34 => "X3+X4" }}),
            );
            match which {
                OrbitName::X4 => {
                    let (v, d, cert) = lift_x4().map_err(|e| bad(e.to_string()))?;
                    let expected =
                        WeightSubspace::from_indices(&[-11, 7, 6, 5]).expect("valid indices");
                    rep.push(CheckResult::flag(
                        "V ∩ conj(V)^perp = W-11 + W7 + W6 + W5",
                        d == expected,
                    ));
                    rep.push(CheckResult::flag("square zero", cert.square_zero));
                    rep.push(CheckResult::flag("inside ker rho(X4)", cert.in_kernel));
                    rep.push(CheckResult::flag("inside V0", cert.inside_phi));
                    rep.payload = Some(serde_json::json!({
                        "V_support": v.support().iter().copied().collect::<Vec<i8>>(),
                        "isotropic_piece": d.support().iter().copied().collect::<Vec<i8>>(),
                    }));
                }
                OrbitName::X34 => {
                    let (line, cert) = lift_x34().map_err(|e| bad(e.to_string()))?;
                    let expected = WeightSubspace::from_indices(&[5]).expect("valid indices");
                    rep.push(CheckResult::flag("im X^3 on phi^perp = W5", line == expected));
                    rep.push(CheckResult::flag("square zero", cert.square_zero));
                    rep.push(CheckResult::flag("inside ker rho(X3+X4)", cert.in_kernel));
                    rep.push(CheckResult::flag("inside V0", cert.inside_phi));
                    rep.payload = Some(serde_json::json!({
                        "line_support": line.support().iter().copied().collect::<Vec<i8>>(),
                    }));
                }
            }
            Ok(rep)
        }
        OrbitCmd::Distinguished { rtype, grading } => {
            let t: RootSystemType = (*rtype).into();
            let rs = if grading == "principal" {
                GradedRootSystem::principal(t)
            } else {
                let vals: Vec<i32> = grading
                    .split(',')
                    .map(|s| s.trim().parse::<i32>().map_err(|e| bad(format!("{e}"))))
                    .collect::<Result<_, _>>()?;
                GradedRootSystem::new(t, &vals).map_err(|e| bad(e.to_string()))?
            };
            let check = distinguished_check(&rs);
            let mut rep = Report::new(
                "orbit distinguished",
                serde_json::json!({"type": format!("{t:?}"), "grading": grading}),
            );
            rep.push(CheckResult::compare("dim l", check.dim_l, check.dim_l));
            rep.push(CheckResult::compare("dim u", check.dim_u, check.dim_u));
            rep.push(CheckResult::compare(
                "dim u/[u,u]",
                check.dim_u_ab,
                check.dim_u_ab,
            ));
            rep.push(CheckResult::compare(
                "distinguished",
                check.is_distinguished,
                check.is_distinguished,
            ));
            Ok(rep)
        }
    }
}

fn uniton_cmd(_cli: &Cli, cmd: &UnitonCmd) -> Result<Report, CliError> {
    match cmd {
        UnitonCmd::Build { form, ell, c } => {
            let ell_ws = ell
                .map(|i| WeightSubspace::from_indices(&[i]))
                .transpose()
                .map_err(|e| bad(e.to_string()))?;
            let c_ws = c
                .as_deref()
                .map(parse_subspace)
                .transpose()
                .map_err(bad)?;
            let lattice = build_canonical((*form).into(), ell_ws.as_ref(), c_ws.as_ref())
                .map_err(|e| bad(e.to_string()))?;
            let checks = lattice_checks(&lattice).map_err(|e| bad(e.to_string()))?;
            let mut rep = Report::new(
                "uniton build",
                serde_json::json!({"form": match form { FormArg::I => "i", FormArg::Ii => "ii", FormArg::Iii => "iii" }, "ell": ell, "c": c}),
            );
            rep.push(CheckResult::flag("monotone", checks.monotone));
            rep.push(CheckResult::flag("real form", checks.real_form));
            rep.push(CheckResult::flag("multiplicative", checks.multiplicative));
            let json = LatticeJson::from_lattice(&lattice).map_err(|e| bad(e.to_string()))?;
            rep.payload = Some(serde_json::to_value(&json).expect("lattice serializes"));
            Ok(rep)
        }
        UnitonCmd::Check { file } => {
            let content = std::fs::read_to_string(file)
                .map_err(|e| bad(format!("reading {}: {e}", file.display())))?;
            let parsed: LatticeJson = serde_json::from_str(&content)
                .map_err(|e| bad(format!("parsing {}: {e}", file.display())))?;
            let lattice = parsed
                .to_lattice()
                .map_err(|e| bad(format!("lattice data: {e}")))?;
            let checks = lattice_checks(&lattice).map_err(|e| bad(e.to_string()))?;
            let mut rep = Report::new(
                "uniton check",
                serde_json::json!({"file": file.display().to_string()}),
            );
            rep.push(CheckResult::flag("monotone", checks.monotone));
            rep.push(CheckResult::flag("real form", checks.real_form));
            rep.push(CheckResult::flag("multiplicative", checks.multiplicative));
            if let Some(w) = checks.witness {
                rep.push(CheckResult::compare("multiplicativity witness", "", w));
            }
            if let Some(sh) = parsed
                .superhorizontal()
                .map_err(|e| bad(format!("generators: {e}")))?
            {
                rep.push(CheckResult::flag("superhorizontal", sh));
            }
            Ok(rep)
        }
        UnitonCmd::Example53 => {
            let ex = curve_example();
            let mut rep = Report::new("uniton example53", serde_json::Value::Null);
            rep.push(CheckResult::flag("bracket constraint", ex.constraint_ok));
            rep.push(CheckResult::flag("rho(C)^2 kills w_-12", ex.rho_c_squared_zero));
            rep.push(CheckResult::flag("curve in T4 for all z", ex.in_t4));
            rep.push(CheckResult::flag("superhorizontal", ex.superhorizontal));
            // one generator in the lattice-file gens shape:
            // [generator][coordinate][coefficient]
            let coeffs: Vec<Vec<Vec<String>>> = vec![ex
                .line
                .iter()
                .map(|p| p.coeffs().iter().map(format_gauss).collect())
                .collect()];
            rep.payload = Some(serde_json::json!({
                "gens": coeffs,
                "generator": ex.line.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            }));
            Ok(rep)
        }
    }
}

fn verify_paper(cli: &Cli) -> Result<Report, CliError> {
    let threads = std::env::var("CAYLEY_LAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        });
    let results = verify::run_all_threaded(cli.seed, threads);
    let mut rep = Report::new(
        "verify-paper",
        serde_json::json!({"seed": cli.seed, "criteria": verify::CRITERIA_COUNT}),
    );
    for r in &results {
        rep.push(CheckResult::flag(
            format!("criterion {:>2}: {}", r.id, r.name),
            r.pass,
        ));
    }
    rep.payload = Some(serde_json::to_value(&results).expect("criteria serialize"));
    Ok(rep)
}
