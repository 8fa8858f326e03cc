//! `nearmds` command-line front end.
//!
//! Every command prints α-power notation and one-based column or pool
//! positions. With `--json` the output is a single JSON document carrying
//! `"schema": 1`.

mod report;

use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use nearmds::codes::{
    classify_matrix, is_mds_matrix, is_nmds_matrix, is_nmds_matrix_parity, matrix_verdict, Caps, LinearCode,
};
use nearmds::construct::{
    build_quotient, construct_involutory, construct_mds, construct_nmds, validate, BuildOptions, Direction, Disc,
    Target, XYSpec,
};
use nearmds::recursive::{
    construct_theta_ib, construct_theta_ic, construct_theta_new_mds, scan_exponents, Eligibility, MonicPoly,
    ThetaConstruction,
};
use nearmds::vandermonde::{det_gvand_formula, gvand, GVandSpec};
use nearmds::{Elem, Error, Field, FieldMatrix, Notation};

use report::Out;

#[derive(Debug, Parser)]
#[command(name = "nearmds", version)]
#[command(about = "Construct and verify MDS and near-MDS matrices over finite fields")]
struct Cli {
    /// Field as GF(p^r;poly): hex bit-packed polynomial for p = 2, otherwise
    /// comma-separated coefficients, constant term first.
    #[arg(long, global = true, default_value = "GF(2^4;0x13)")]
    field: String,

    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Element notation for matrices and points.
    #[arg(long, global = true, value_enum, default_value_t = NotationArg::Power)]
    notation: NotationArg,

    /// Largest matrix order accepted by the classifiers.
    #[arg(long, global = true)]
    max_order: Option<usize>,

    /// Largest number of codewords enumerated for the distance cross-check.
    #[arg(long, global = true)]
    max_codewords: Option<u64>,

    /// Largest code length for column-subset searches.
    #[arg(long, global = true)]
    max_length: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NotationArg {
    Power,
    Packed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    ThetaIb,
    ThetaIc,
    NewMds,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a matrix from two generalized Vandermonde factors
    #[command(subcommand)]
    Construct(ConstructKind),

    /// Print a generalized Vandermonde matrix and its determinant
    Gvand {
        /// `x=[e1,...]; I={l1,...}`
        spec: String,
    },

    /// Check a matrix file against a target; exit 2 when it fails
    Verify {
        /// Matrix file (text rows, JSON array, or a construct JSON report); `-` for stdin.
        file: String,
        #[arg(long)]
        target: Target,
    },

    /// Report d1, d2 and the MDS / NMDS / AMDS verdict of [I | A]
    Classify {
        file: String,
        /// Treat the file as a generator matrix instead of A.
        #[arg(long)]
        generator: bool,
    },

    /// Generalized Hamming weights of a code
    Ghw {
        file: String,
        /// Single r; the whole profile when omitted.
        #[arg(long)]
        r: Option<usize>,
        /// Treat the file as a generator matrix instead of A.
        #[arg(long)]
        generator: bool,
    },

    /// θ-family companion constructions over a range of exponents
    Recursive {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        theta: String,
        #[arg(long)]
        n: usize,
        /// `a..b` (inclusive) or a single exponent.
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<u64>,
        /// Confirm each verdict on the companion power.
        #[arg(long)]
        verify: bool,
    },

    /// Try every θ in F_q* (discrete-log order) for a family
    Search {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u64,
        /// Seed for picking the spot-checked survivors.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of survivors verified on the companion power.
        #[arg(long, default_value_t = 5)]
        spot_check: usize,
    },

    /// Verdict of C_g^m for each m in a range
    Scan {
        /// a_1,...,a_n of g = a_1 + a_2 x + ... + a_n x^(n-1) + x^n.
        #[arg(long, conflicts_with = "roots", required_unless_present = "roots")]
        coeffs: Option<String>,
        /// Roots of g instead of its coefficients.
        #[arg(long)]
        roots: Option<String>,
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<u64>,
    },
}

#[derive(Debug, Subcommand)]
enum ConstructKind {
    /// V1^-1 V2 from x, y and a discontinuity set
    Gvand {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// n-1, 1 or 1,n
        #[arg(long)]
        disc: Disc,
        #[arg(long)]
        target: Target,
        #[arg(long, value_enum, default_value_t = DirectionArg::Forward)]
        direction: DirectionArg,
    },
    /// Involutory V1^-1 V2 with y = l + x (characteristic 2, even order)
    Involutory {
        #[arg(long)]
        x: String,
        #[arg(long)]
        l: String,
        #[arg(long)]
        target: Target,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad exponent {t:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
        None => num(s).map(|a| a..=a),
    }
}

/// Why a command failed, and the exit code it maps to.
enum Failure {
    Lib(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Lib(e) => match e {
                Error::ConditionViolated { .. } | Error::SingularFactor(_) => 2,
                Error::SelfCheckFailed(_) => 3,
                Error::TooLarge(_) | Error::OrderTooLarge { .. } => 4,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) => m.clone(),
            Failure::Lib(Error::ConditionViolated { reason, witness: Some(w) }) => {
                format!("construction condition violated: {reason}; witness pool positions {}", report::set(w))
            }
            Failure::Lib(e) => e.to_string(),
        }
    }
}

type Run = Result<Out, Failure>;

struct Ctx {
    field: Field,
    notation: Notation,
    caps: Caps,
}

impl Ctx {
    fn elems(&self, text: &str) -> Result<Vec<Elem>, Failure> {
        Ok(self.field.parse_elements(text)?)
    }

    fn elem(&self, text: &str) -> Result<Elem, Failure> {
        Ok(self.field.parse_element(text)?)
    }

    fn fmt(&self, a: Elem) -> String {
        self.field.format(a, self.notation)
    }

    fn doc(&self, command: &str) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        m.insert("schema".into(), json!(1));
        m.insert("command".into(), json!(command));
        m.insert("field".into(), json!(self.field.to_string()));
        m
    }

    /// Matrix from a file in any accepted form; construct reports are
    /// checked against the active field.
    fn read_matrix(&self, path: &str) -> Result<FieldMatrix, Failure> {
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?
        };
        if text.trim_start().starts_with('{') {
            let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
            if let Some(f) = v.get("field").and_then(Value::as_str) {
                if f != self.field.to_string() {
                    return Err(Failure::Input(format!("{path} was written for {f}, not {}", self.field)));
                }
            }
            let m = v.get("matrix").ok_or_else(|| Failure::Input(format!("{path}: no \"matrix\" key")))?;
            return Ok(FieldMatrix::from_json(&self.field, m)?);
        }
        Ok(FieldMatrix::parse(&self.field, &text)?)
    }

    fn code(&self, m: FieldMatrix, generator: bool) -> Result<LinearCode, Failure> {
        Ok(if generator { LinearCode::new(m)? } else { LinearCode::standard_generator(&m)? })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            let body =
                if json { serde_json::to_string_pretty(&out.json).expect("serializable") + "\n" } else { out.text };
            // a closed pipe (e.g. `| head`) is not an error worth a panic
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            match out.failure {
                Some((code, msg)) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(code)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: Cli) -> Run {
    let field: Field = cli.field.parse()?;
    let mut caps = Caps::default();
    if let Some(v) = cli.max_order {
        eprintln!("note: matrix order cap set to {v}");
        caps.matrix_order = v;
    }
    if let Some(v) = cli.max_codewords {
        eprintln!("note: codeword enumeration cap set to {v}");
        caps.codewords = v;
    }
    if let Some(v) = cli.max_length {
        eprintln!("note: code length cap set to {v}");
        caps.length = v;
    }
    let notation = match cli.notation {
        NotationArg::Power => Notation::Power,
        NotationArg::Packed => Notation::Packed,
    };
    let ctx = Ctx { field, notation, caps };
    match cli.command {
        Command::Construct(kind) => construct(&ctx, kind),
        Command::Gvand { spec } => gvand_cmd(&ctx, &spec),
        Command::Verify { file, target } => verify(&ctx, &file, target),
        Command::Classify { file, generator } => classify(&ctx, &file, generator),
        Command::Ghw { file, r, generator } => ghw(&ctx, &file, r, generator),
        Command::Recursive { family, theta, n, m, verify } => recursive(&ctx, family, &theta, n, m, verify),
        Command::Search { family, n, m, seed, spot_check } => search(&ctx, family, n, m, seed, spot_check),
        Command::Scan { coeffs, roots, m } => scan(&ctx, coeffs, roots, m),
    }
}

fn construct(ctx: &Ctx, kind: ConstructKind) -> Run {
    let f = &ctx.field;
    let opts = BuildOptions { caps: ctx.caps, ..BuildOptions::default() };
    let mut doc = ctx.doc("construct");
    let mut out = Out::default();
    let (a, target) = match kind {
        ConstructKind::Gvand { x, y, disc, target, direction } => {
            let spec = XYSpec::new(f, ctx.elems(&x)?, ctx.elems(&y)?, disc)?;
            let direction = match direction {
                DirectionArg::Forward => Direction::Forward,
                DirectionArg::Backward => Direction::Backward,
            };
            let opts = BuildOptions { direction, ..opts };
            let condition = validate(f, &spec, target)?;
            let a = match target {
                Target::Mds => construct_mds(f, &spec, &opts)?,
                Target::Nmds => construct_nmds(f, &spec, &opts)?,
            };
            debug_assert_eq!(a, build_quotient(f, &spec, direction)?);
            out.line(format!("construction: I = {{{}}}, {}", disc_text(disc), report::direction(direction)));
            out.text.push_str(&report::condition_text(&condition));
            doc.insert("condition".into(), serde_json::to_value(&condition).expect("serializable"));
            (a, target)
        }
        ConstructKind::Involutory { x, l, target } => {
            let a = construct_involutory(f, &ctx.elems(&x)?, ctx.elem(&l)?, target, &opts)?;
            out.line("construction: involutory, A*A = I confirmed".into());
            doc.insert("involutory".into(), json!(true));
            (a, target)
        }
    };
    let rep = classify_matrix(&a, &ctx.caps)?;
    out.line(format!("target: {}", report::target(target)));
    out.text.push_str(&report::matrix_text(&a, ctx.notation));
    out.text.push_str(&report::code_text(&rep));
    doc.insert("target".into(), serde_json::to_value(target).expect("serializable"));
    doc.insert("matrix".into(), a.to_json(ctx.notation));
    doc.insert("report".into(), serde_json::to_value(&rep).expect("serializable"));
    out.json = Value::Object(doc);
    Ok(out)
}

fn disc_text(d: Disc) -> &'static str {
    match d {
        Disc::LastButOne => "n-1",
        Disc::One => "1",
        Disc::OneAndN => "1,n",
    }
}

fn gvand_cmd(ctx: &Ctx, text: &str) -> Run {
    let f = &ctx.field;
    let spec = GVandSpec::parse(f, text)?;
    let v = gvand(f, &spec);
    let det = v.det()?;
    let formula = match det_gvand_formula(f, &spec) {
        Ok(d) => Some(d),
        Err(Error::DivisionByZero) => None,
        Err(e) => return Err(e.into()),
    };
    if formula.is_some_and(|d| d != det) {
        return Err(Error::SelfCheckFailed("determinant formula disagrees with elimination".into()).into());
    }
    let verdict = matrix_verdict(&v, &ctx.caps)?;
    let mut out = Out::default();
    out.line(format!("spec: {}", spec.format(f, ctx.notation)));
    out.line(format!("exponents: {}", report::list(spec.exponents())));
    out.text.push_str(&report::matrix_text(&v, ctx.notation));
    out.line(format!("det: {}", ctx.fmt(det)));
    out.line(format!("det by formula: {}", formula.map_or("undefined (zero point)".to_string(), |d| ctx.fmt(d))));
    out.line(format!("verdict: {}", report::matrix_verdict(verdict)));
    let mut doc = ctx.doc("gvand");
    doc.insert("spec".into(), json!(spec.format(f, ctx.notation)));
    doc.insert("exponents".into(), json!(spec.exponents()));
    doc.insert("matrix".into(), v.to_json(ctx.notation));
    doc.insert("det".into(), json!(ctx.fmt(det)));
    doc.insert("det_formula".into(), json!(formula.map(|d| ctx.fmt(d))));
    doc.insert("verdict".into(), serde_json::to_value(verdict).expect("serializable"));
    out.json = Value::Object(doc);
    Ok(out)
}

fn verify(ctx: &Ctx, file: &str, target: Target) -> Run {
    let a = ctx.read_matrix(file)?;
    let rep = classify_matrix(&a, &ctx.caps)?;
    let mut doc = ctx.doc("verify");
    let mut out = Out::default();
    let holds = match target {
        Target::Mds => {
            let check = is_mds_matrix(&a, &ctx.caps)?;
            if let Some(cols) = &check.dependent_columns {
                out.line(format!("dependent columns of [I | A]: {}", report::set(cols)));
            }
            doc.insert("mds".into(), serde_json::to_value(&check).expect("serializable"));
            check.holds
        }
        Target::Nmds => {
            let g = is_nmds_matrix(&a, &ctx.caps)?;
            let h = is_nmds_matrix_parity(&a, &ctx.caps)?;
            if g.holds != h.holds {
                return Err(Error::SelfCheckFailed("generator-side and parity-side NMDS checks disagree".into()).into());
            }
            out.text.push_str(&report::clauses_text(&g));
            doc.insert("clauses".into(), serde_json::to_value(&g).expect("serializable"));
            g.holds
        }
    };
    out.text.push_str(&report::code_text(&rep));
    out.line(format!("{}: {}", report::target(target), if holds { "holds" } else { "fails" }));
    doc.insert("target".into(), serde_json::to_value(target).expect("serializable"));
    doc.insert("holds".into(), json!(holds));
    doc.insert("report".into(), serde_json::to_value(&rep).expect("serializable"));
    if !holds {
        out.failure = Some((2, format!("matrix is not {}", report::target(target))));
    }
    out.json = Value::Object(doc);
    Ok(out)
}

fn classify(ctx: &Ctx, file: &str, generator: bool) -> Run {
    let m = ctx.read_matrix(file)?;
    let rep = if generator { ctx.code(m.clone(), true)?.classify(&ctx.caps)? } else { classify_matrix(&m, &ctx.caps)? };
    let mut out = Out::default();
    out.text.push_str(&report::code_text(&rep));
    let mut doc = ctx.doc("classify");
    doc.insert("matrix".into(), m.to_json(ctx.notation));
    doc.insert("report".into(), serde_json::to_value(&rep).expect("serializable"));
    out.json = Value::Object(doc);
    Ok(out)
}

fn ghw(ctx: &Ctx, file: &str, r: Option<usize>, generator: bool) -> Run {
    let code = ctx.code(ctx.read_matrix(file)?, generator)?;
    let rs: Vec<usize> = match r {
        Some(r) => vec![r],
        None => (1..=code.k()).collect(),
    };
    let weights = rs.iter().map(|&r| code.ghw(r, &ctx.caps)).collect::<Result<Vec<_>, _>>()?;
    let mut out = Out::default();
    out.line(format!("[{}, {}] code", code.n(), code.k()));
    for w in &weights {
        out.line(format!("d_{} = {}  columns {}", w.r, w.d, report::set(&w.columns)));
    }
    let mut doc = ctx.doc("ghw");
    doc.insert("n".into(), json!(code.n()));
    doc.insert("k".into(), json!(code.k()));
    doc.insert("weights".into(), serde_json::to_value(&weights).expect("serializable"));
    out.json = Value::Object(doc);
    Ok(out)
}

fn build(ctx: &Ctx, family: Family, theta: Elem, n: usize, m: u64, verify: bool) -> nearmds::Result<ThetaConstruction> {
    let f = &ctx.field;
    match family {
        Family::ThetaIb => construct_theta_ib(f, theta, n, m, verify),
        Family::ThetaIc => construct_theta_ic(f, theta, n, m, verify),
        Family::NewMds => construct_theta_new_mds(f, theta, n, m, verify),
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::ThetaIb => "theta-ib",
        Family::ThetaIc => "theta-ic",
        Family::NewMds => "new-mds",
    }
}

fn recursive(ctx: &Ctx, family: Family, theta: &str, n: usize, m: RangeInclusive<u64>, verify: bool) -> Run {
    let theta = ctx.elem(theta)?;
    if m.end() - m.start() >= nearmds::recursive::SCAN_CAP {
        return Err(Error::TooLarge(format!("{} exponents exceed the cap", m.end() - m.start() + 1)).into());
    }
    let mut out = Out::default();
    out.line(format!("family {}, theta = {}, n = {n}", family_name(family), ctx.fmt(theta)));
    let mut rows = Vec::new();
    let mut verdicts = serde_json::Map::new();
    for m in m {
        match build(ctx, family, theta, n, m, verify) {
            Ok(c) => {
                let row = report::theta_json(&c, ctx.notation);
                let shown = match c.verified {
                    Some(v) => report::matrix_verdict(v).to_string(),
                    None => report::eligibility(c.eligibility).to_string(),
                };
                out.line(format!("m = {m:<4} {shown:<14} g = {}", c.poly.format(ctx.notation)));
                if let Some(z) = &c.zero_exponents {
                    out.line(format!("         zero subset of exponents {}", report::list(z)));
                }
                verdicts.insert(m.to_string(), json!(shown));
                rows.push(row);
            }
            Err(Error::ExponentCollision(i, j, ord)) => {
                let msg = format!("theta^{i} = theta^{j} (ord {ord})");
                out.line(format!("m = {m:<4} collision: {msg}"));
                verdicts.insert(m.to_string(), json!("collision"));
                rows.push(json!({ "m": m, "collision": msg }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let mut doc = ctx.doc("recursive");
    doc.insert("family".into(), json!(family_name(family)));
    doc.insert("theta".into(), json!(ctx.fmt(theta)));
    doc.insert("n".into(), json!(n));
    doc.insert("verified".into(), json!(verify));
    doc.insert("verdicts".into(), Value::Object(verdicts));
    doc.insert("details".into(), Value::Array(rows));
    out.json = Value::Object(doc);
    Ok(out)
}

/// Upper bound on |F_q*| for `search`.
const SEARCH_CAP: u64 = 1 << 16;

fn search(ctx: &Ctx, family: Family, n: usize, m: u64, seed: u64, spot: usize) -> Run {
    let f = &ctx.field;
    if f.order() - 1 > SEARCH_CAP {
        return Err(Error::TooLarge(format!("{} candidates exceed the search cap {SEARCH_CAP}", f.order() - 1)).into());
    }
    let mut survivors = Vec::new();
    for k in 0..f.order() - 1 {
        let theta = f.alpha_pow(k as i64);
        match build(ctx, family, theta, n, m, false) {
            Ok(c) if c.eligibility != Eligibility::Ineligible => survivors.push((theta, c)),
            Ok(_) | Err(Error::ExponentCollision(..)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<usize> = sample(&mut rng, survivors.len(), spot.min(survivors.len())).into_vec();
    picked.sort_unstable();
    let mut checked = Vec::new();
    for &i in &picked {
        let theta = survivors[i].0;
        let v = build(ctx, family, theta, n, m, true)?.verified.expect("verification ran");
        checked.push((theta, v));
    }
    let mut out = Out::default();
    out.line(format!("family {}, n = {n}, m = {m}: {} candidates", family_name(family), survivors.len()));
    for (theta, c) in &survivors {
        let zero = c.zero_exponents.as_ref().map_or(String::new(), |z| format!("  zero subset {}", report::list(z)));
        out.line(format!("theta = {:<6} {}{zero}", ctx.fmt(*theta), report::eligibility(c.eligibility)));
    }
    out.line(format!("spot-check (seed {seed}): {} verified", checked.len()));
    for (theta, v) in &checked {
        out.line(format!("  theta = {:<6} C_g^{m} is {}", ctx.fmt(*theta), report::matrix_verdict(*v)));
    }
    let mut doc = ctx.doc("search");
    doc.insert("family".into(), json!(family_name(family)));
    doc.insert("n".into(), json!(n));
    doc.insert("m".into(), json!(m));
    doc.insert(
        "candidates".into(),
        Value::Array(
            survivors
                .iter()
                .map(|(t, c)| {
                    json!({
                        "theta": ctx.fmt(*t),
                        "eligibility": c.eligibility,
                        "zero_exponents": c.zero_exponents,
                    })
                })
                .collect(),
        ),
    );
    doc.insert(
        "spot_check".into(),
        json!({
            "seed": seed,
            "checked": checked.iter().map(|(t, v)| json!({ "theta": ctx.fmt(*t), "verdict": v })).collect::<Vec<_>>(),
        }),
    );
    out.json = Value::Object(doc);
    Ok(out)
}

fn scan(ctx: &Ctx, coeffs: Option<String>, roots: Option<String>, m: RangeInclusive<u64>) -> Run {
    let f = &ctx.field;
    let g = match (coeffs, roots) {
        (Some(c), _) => MonicPoly::new(f, ctx.elems(&c)?)?,
        (None, Some(r)) => MonicPoly::from_roots(f, &ctx.elems(&r)?)?,
        (None, None) => return Err(Failure::Input("give --coeffs or --roots".into())),
    };
    let table = scan_exponents(&g, m, &ctx.caps)?;
    let mut out = Out::default();
    out.line(format!("g = {}", g.format(ctx.notation)));
    let mut verdicts = serde_json::Map::new();
    for (m, v) in &table {
        out.line(format!("m = {m:<4} {}", report::matrix_verdict(*v)));
        verdicts.insert(m.to_string(), serde_json::to_value(v).expect("serializable"));
    }
    let mut doc = ctx.doc("scan");
    doc.insert("poly".into(), json!(g.format(ctx.notation)));
    doc.insert("verdicts".into(), Value::Object(verdicts));
    out.json = Value::Object(doc);
    Ok(out)
}
