//! The `mg` command line. All logic lives here so it can be driven from tests.
//!
//! Exit codes: 0 all verdicts as expected, 1 a mismatch, 2 usage or parse
//! error, 3 assignment cap exceeded.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bridge::{
    check_definition, check_scene, check_ta4_ta4prime, summarize, BridgeOptions, Definition, SceneUniverse,
};
use crate::checker::{
    check_protothetic_extensionality, check_validity, run_registry, CheckError, CheckOptions, Reading, Registry,
    Verdict, DEFAULT_MAX_ASSIGNMENTS,
};
use crate::formula::{parse_call, parse_formula, parse_model, print_formula_with, Notation};
use crate::geometry::{
    ball_mereo, concentric, diam_tangency, equidistant, interior_point, interior_point_1d_exact, parse_scene, point_of,
    tangency, DiamKind, MereoKind, Scene, TangencyKind,
};
use crate::model::{make_powerset_model, FiniteModel, Mereology, ModelError, MAX_ATOMS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BLOWUP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mg", version, about = "Finite mereology checker and exact ball geometry")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Quantifier reading for `:singular` annotations.
    #[arg(long, global = true, value_enum, default_value_t = ReadingArg::Annotated)]
    reading: ReadingArg,
    /// Machine-readable tab-separated output.
    #[arg(long, global = true)]
    tsv: bool,
    /// Print formulas with logical symbols.
    #[arg(long, global = true)]
    unicode: bool,
    /// Cap on the estimated number of variable assignments.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ASSIGNMENTS)]
    max_assignments: u64,
    /// Report zero elapsed time so output is reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReadingArg {
    Full,
    Annotated,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExpectArg {
    Valid,
    Refuted,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one formula on one model.
    Check {
        /// `.mmod` model file.
        #[arg(long, conflicts_with = "atoms")]
        model: Option<PathBuf>,
        /// Powerset model with this many atoms instead of a model file.
        #[arg(long)]
        atoms: Option<usize>,
        /// `.mgf` formula file.
        #[arg(long)]
        formula: PathBuf,
        #[arg(long, value_enum, default_value_t = ExpectArg::Valid)]
        expect: ExpectArg,
    },
    /// Run a registry over generated powerset models.
    Suite {
        #[arg(long)]
        registry: PathBuf,
        /// Atom counts, `A..B` or `N`.
        #[arg(long, default_value = "1..2")]
        atoms: String,
    },
    /// Evaluate geometric predicates on a scene.
    Geo {
        #[arg(long)]
        scene: PathBuf,
        /// e.g. `et(A,B)`; repeatable.
        #[arg(long, required = true)]
        query: Vec<String>,
    },
    /// Compare analytic predicates with candidate-restricted definitions.
    Bridge {
        #[arg(long)]
        scene: PathBuf,
        /// One definition (ET, IT, EDT, IDT, CON, EQUID, IPOINT, TarskiD8);
        /// all of them on every tuple when omitted.
        #[arg(long, requires = "args")]
        definition: Option<String>,
        /// Comma-separated labels.
        #[arg(long)]
        args: Option<String>,
        /// Skip witness injection.
        #[arg(long)]
        no_witnesses: bool,
    },
    /// Propositional extensionality by truth table.
    Proto,
}

/// One powerset model per atom count, with `empty` and `u` (everything).
pub fn generate_models(atoms: RangeInclusive<usize>) -> Result<Vec<FiniteModel>, ModelError> {
    if *atoms.start() == 0 || *atoms.end() > MAX_ATOMS || atoms.is_empty() {
        let bad = if *atoms.start() == 0 { 0 } else { *atoms.end() };
        return Err(ModelError::AtomCountOutOfRange(bad));
    }
    atoms
        .map(|n| {
            let m = make_powerset_model(n, &BTreeMap::new())?;
            let all = m.universal();
            Ok(m.with_constant("u", all))
        })
        .collect()
}

/// `A..B`, `A..=B` or a single count.
pub fn parse_atom_range(s: &str) -> Option<RangeInclusive<usize>> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        Some(a.trim().parse().ok()?..=b.trim().parse().ok()?)
    } else {
        let n = s.parse().ok()?;
        Some(n..=n)
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

// Output failures (closed pipes) are not worth a distinct exit code.
macro_rules! say {
    ($w:expr, $($arg:tt)*) => {{ let _ = writeln!($w, $($arg)*); }};
}

fn read(path: &Path, io: &mut Io) -> Option<String> {
    match fs::read_to_string(path) {
        Ok(t) => Some(t),
        Err(e) => {
            say!(io.err, "{}: {e}", path.display());
            None
        }
    }
}

fn exit_for_error(e: &CheckError) -> i32 {
    match e {
        CheckError::QuantifierBlowup { .. } => EXIT_BLOWUP,
        _ => EXIT_USAGE,
    }
}

/// Runs `mg` with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let mut io = Io { out, err };
    let options = CheckOptions {
        reading: match cli.reading {
            ReadingArg::Full => Reading::Full,
            ReadingArg::Annotated => Reading::Annotated,
        },
        max_assignments: cli.max_assignments,
    };
    match &cli.command {
        Command::Check { model, atoms, formula, expect } => {
            let expect = match expect {
                ExpectArg::Valid => Verdict::Valid,
                ExpectArg::Refuted => Verdict::Refuted,
            };
            cmd_check(&cli, &mut io, model.as_deref(), *atoms, formula, expect, &options)
        }
        Command::Suite { registry, atoms } => cmd_suite(&cli, &mut io, registry, atoms, &options),
        Command::Geo { scene, query } => cmd_geo(&mut io, scene, query),
        Command::Bridge { scene, definition, args, no_witnesses } => {
            cmd_bridge(&cli, &mut io, scene, definition.as_deref(), args.as_deref(), *no_witnesses)
        }
        Command::Proto => cmd_proto(&cli, &mut io),
    }
}

fn cmd_check(
    cli: &Cli,
    io: &mut Io,
    model_path: Option<&Path>,
    atoms: Option<usize>,
    formula_path: &Path,
    expect: Verdict,
    options: &CheckOptions,
) -> i32 {
    let model = match (model_path, atoms) {
        (Some(path), _) => {
            let Some(text) = read(path, io) else {
                return EXIT_USAGE;
            };
            let id = path.file_stem().map_or("model".into(), |s| s.to_string_lossy().into_owned());
            match parse_model(&text)
                .map_err(|e| e.to_string())
                .and_then(|spec| FiniteModel::from_spec(id, &spec).map_err(|e| e.to_string()))
            {
                Ok(m) => m,
                Err(e) => {
                    say!(io.err, "{}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
        }
        (None, atoms) => match generate_models(atoms.unwrap_or(2)..=atoms.unwrap_or(2)) {
            Ok(mut ms) => ms.remove(0),
            Err(e) => {
                say!(io.err, "{e}");
                return EXIT_USAGE;
            }
        },
    };
    let Some(text) = read(formula_path, io) else {
        return EXIT_USAGE;
    };
    let constants: BTreeSet<String> = model.constant_names().into_iter().collect();
    let f = match parse_formula(&text, &constants) {
        Ok(f) => f,
        Err(e) => {
            say!(io.err, "{}:{}", formula_path.display(), e.diagnostic(&text));
            return EXIT_USAGE;
        }
    };
    let id = formula_path.file_stem().map_or("formula".into(), |s| s.to_string_lossy().into_owned());
    let notation = if cli.unicode { Notation::Unicode } else { Notation::Ascii };
    match check_validity(&model, model.id(), &id, &f, options) {
        Ok(report) => {
            if cli.tsv {
                let millis = if cli.no_timing { 0 } else { report.elapsed.as_millis() };
                say!(io.out, "{id}@{}\t{}\t{}\t{millis}", model.id(), report.verdict, report.assignments);
            } else {
                say!(io.out, "{}", print_formula_with(&f, notation));
                say!(io.out, "{report}");
            }
            if report.verdict == expect {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            say!(io.err, "{id}: {e}");
            exit_for_error(&e)
        }
    }
}

fn cmd_suite(cli: &Cli, io: &mut Io, registry: &Path, atoms: &str, options: &CheckOptions) -> i32 {
    let Some(range) = parse_atom_range(atoms) else {
        say!(io.err, "bad atom range `{atoms}`, expected A..B");
        return EXIT_USAGE;
    };
    let models = match generate_models(range) {
        Ok(m) => m,
        Err(e) => {
            say!(io.err, "{e}");
            return EXIT_USAGE;
        }
    };
    let reg = match Registry::load(registry) {
        Ok(r) => r,
        Err(e) => {
            say!(io.err, "{}: {e}", registry.display());
            return EXIT_USAGE;
        }
    };
    let report = run_registry(&models, &reg, options);
    let text = if cli.tsv { report.to_tsv(!cli.no_timing) } else { report.to_text(!cli.no_timing) };
    let _ = write!(io.out, "{text}");
    let mut code = EXIT_OK;
    for (row, e) in report.errors() {
        say!(io.err, "{}@{}: {e}", row.id, row.model_id);
        code = code.max(exit_for_error(e));
    }
    if code == EXIT_BLOWUP && report.errors().any(|(_, e)| exit_for_error(e) == EXIT_USAGE) {
        code = EXIT_USAGE;
    }
    if code == EXIT_OK && !report.all_passed() {
        code = EXIT_MISMATCH;
    }
    code
}

fn load_scene(io: &mut Io, path: &Path) -> Option<Scene> {
    let text = read(path, io)?;
    match parse_scene(&text) {
        Ok(s) => Some(s),
        Err(e) => {
            say!(io.err, "{}: {e}", path.display());
            None
        }
    }
}

fn geo_query(scene: &Scene, query: &str) -> Result<String, String> {
    let (head, args) = parse_call(query).map_err(|e| e.diagnostic(query))?;
    let want = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(format!("`{head}` takes {n} argument(s), got {}", args.len()))
        }
    };
    let ball = |i: usize| scene.ball(&args[i]).map_err(|e| e.to_string());
    let shown = format!("{head}({})", args.join(","));
    let value = match head.as_str() {
        "et" | "it" | "con" | "partof" | "pp" | "eq" | "ext" | "ov" => {
            want(2)?;
            let (a, b) = (ball(0)?, ball(1)?);
            let r = match head.as_str() {
                "et" => tangency(TangencyKind::Et, a, b),
                "it" => tangency(TangencyKind::It, a, b),
                "con" => concentric(a, b),
                "partof" => ball_mereo(MereoKind::PartOf, a, b),
                "pp" => ball_mereo(MereoKind::ProperPart, a, b),
                "eq" => ball_mereo(MereoKind::Equal, a, b),
                "ext" => ball_mereo(MereoKind::Ext, a, b),
                _ => ball_mereo(MereoKind::Overlap, a, b),
            };
            r.map_err(|e| e.to_string())?.to_string()
        }
        "edt" | "idt" => {
            want(3)?;
            let kind = if head == "edt" { DiamKind::Edt } else { DiamKind::Idt };
            diam_tangency(kind, ball(0)?, ball(1)?, ball(2)?).map_err(|e| e.to_string())?.to_string()
        }
        "equid" => {
            want(3)?;
            let (p, q, c) = (point_of(ball(0)?), point_of(ball(1)?), point_of(ball(2)?));
            equidistant(&p, &q, &c).map_err(|e| e.to_string())?.to_string()
        }
        "ipoint" | "ipoint1d" => {
            want(2)?;
            let p = point_of(ball(0)?);
            let s = scene.solid(&args[1]).map_err(|e| e.to_string())?;
            if head == "ipoint" {
                interior_point(&p, &s).map_err(|e| e.to_string())?.to_string()
            } else {
                interior_point_1d_exact(&p, &s).map_err(|e| e.to_string())?.to_string()
            }
        }
        _ => return Err(format!("unknown predicate `{head}`")),
    };
    Ok(format!("{shown} = {value}"))
}

fn cmd_geo(io: &mut Io, path: &Path, queries: &[String]) -> i32 {
    let Some(scene) = load_scene(io, path) else {
        return EXIT_USAGE;
    };
    for q in queries {
        match geo_query(&scene, q) {
            Ok(line) => say!(io.out, "{line}"),
            Err(e) => {
                say!(io.err, "{q}: {e}");
                return EXIT_USAGE;
            }
        }
    }
    EXIT_OK
}

fn cmd_bridge(
    cli: &Cli,
    io: &mut Io,
    path: &Path,
    definition: Option<&str>,
    args: Option<&str>,
    no_witnesses: bool,
) -> i32 {
    let Some(scene) = load_scene(io, path) else {
        return EXIT_USAGE;
    };
    let universe = match SceneUniverse::from_scene(&scene) {
        Ok(u) => u,
        Err(e) => {
            say!(io.err, "{}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let options = BridgeOptions { inject_witnesses: !no_witnesses };
    let reports = match definition {
        Some(name) => {
            let Some(def) = Definition::parse(name) else {
                say!(io.err, "unknown definition `{name}`");
                return EXIT_USAGE;
            };
            let labels: Vec<&str> = args.unwrap_or("").split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            check_definition(&universe, def, &labels, &options).map(|r| vec![r])
        }
        None => check_scene(&universe, &options),
    };
    let reports = match reports {
        Ok(r) => r,
        Err(e) => {
            say!(io.err, "{e}");
            return EXIT_USAGE;
        }
    };
    for r in &reports {
        if cli.tsv {
            say!(io.out, "{}", r.tsv_line());
        } else {
            say!(io.out, "{r}");
        }
    }
    let mut code = if reports.iter().any(|r| r.is_hard()) { EXIT_MISMATCH } else { EXIT_OK };
    if definition.is_none() {
        let model_id = path.file_stem().map_or("scene".into(), |s| s.to_string_lossy().into_owned());
        let ta4 = check_ta4_ta4prime(&universe, &model_id);
        let text = if cli.tsv { ta4.to_tsv(!cli.no_timing) } else { ta4.to_text(!cli.no_timing) };
        let _ = write!(io.out, "{text}");
        if !cli.tsv {
            let _ = write!(io.out, "{}", summarize(&reports));
        }
        if !ta4.all_passed() {
            code = EXIT_MISMATCH;
        }
    }
    code
}

fn cmd_proto(cli: &Cli, io: &mut Io) -> i32 {
    let report = check_protothetic_extensionality();
    for r in [&report.r1, &report.r2] {
        if cli.tsv {
            let millis = if cli.no_timing { 0 } else { r.elapsed.as_millis() };
            say!(io.out, "{}@{}\t{}\t{}\t{millis}", r.formula_id, r.model_id, r.verdict, r.assignments);
        } else {
            say!(io.out, "{r}");
        }
    }
    if report.r1.verdict == Verdict::Refuted && report.r2.verdict == Verdict::Valid {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}
