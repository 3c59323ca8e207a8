//! The `tomtri` command line: JSON file formats, one subcommand per operation, human-readable
//! reports by default and JSON reports with `--json`.
//!
//! Exit codes: 0 success, 1 a negative verdict or a failed operation, 2 non-generic weights,
//! 3 no strong path, 64 malformed input or usage.

pub mod formats;
pub mod svg;

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::axioms::{check_tom_with, SurroundingMode, TomVerdict, Violation};
use crate::error::Error;
use crate::generators::{prism_triangulation, staircase};
use crate::geometry::{
    facet_matrix, interval_column_order, is_totally_unimodular, parse_rational, point_type, regular_subdivision, Sense,
};
use crate::paths::{eliminate_via_path, q_alpha, q_alpha_connected, strong_path};
use crate::subdivision::{unit_simplex_locations, validate_subdivision, CellCollection, TypeSystem, ValidationReport};
use crate::types::{RankVector, TropicalType};
use formats::{FormatError, SubdivisionFile, TypeSource, TypesFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_NON_GENERIC: i32 = 2;
pub const EXIT_NO_PATH: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Violations listed per axiom in human-readable reports.
const SHOWN_VIOLATIONS: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "tomtri",
    version,
    about = "Fine mixed subdivisions and tropical oriented matroids"
)]
struct Cli {
    /// Emit reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a subdivision file.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check the three conditions for a fine mixed subdivision.
    Validate { file: String },
    /// Print the face system of a subdivision as a types file.
    Faces { file: String },
    /// Check the four tropical oriented matroid axioms on a subdivision or types file.
    CheckTom {
        file: String,
        /// Surrounding check; defaults to subset when every type is acyclic.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Degree vectors and unit simplex of one cell (1-based).
    Degree {
        file: String,
        #[arg(long)]
        cell: usize,
    },
    /// Transpose every cell.
    Dual { file: String },
    /// Rank vector of two types given as JSON lists.
    Rank(PairArgs),
    /// Distance between two types given as JSON lists.
    Delta(PairArgs),
    /// A strong path from A to B inside a face system.
    StrongPath {
        file: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// The elimination witness of A and B at coordinate J (1-based).
    Eliminate {
        file: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        j: usize,
    },
    /// Types whose i-th coordinate has more than a_i elements.
    Qalpha {
        file: String,
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<i64>,
        /// Report connectivity instead of listing the types.
        #[arg(long)]
        check_connected: bool,
    },
    /// Facet matrix of a cell and its unimodularity verdicts.
    Tu {
        file: String,
        #[arg(long)]
        cell: usize,
    },
    /// Type of a point in a tropical hyperplane arrangement.
    PointType {
        #[arg(long)]
        weights: String,
        /// Comma-separated coordinates, integers or p/q.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Draw a subdivision of nΔ_2 as SVG.
    Plot {
        file: String,
        #[arg(long)]
        out: String,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// The staircase triangulation of Δ_{n-1} × Δ_{d-1}.
    Staircase {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// The triangulation of Δ_{n-1} × Δ_1 given by a permutation of [n].
    Prism {
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
    },
    /// The regular subdivision induced by a weight file.
    Regular {
        #[arg(long)]
        weights: String,
    },
}

#[derive(Debug, clap::Args)]
struct PairArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    /// Ground set size; defaults to the largest element mentioned.
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Partition,
    Subset,
}

impl From<ModeArg> for SurroundingMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Partition => SurroundingMode::Partition,
            ModeArg::Subset => SurroundingMode::Subset,
        }
    }
}

/// A failed command: exit code plus a message for standard error.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn fail(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_FAIL,
            message: message.into(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::usage(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonGenericWeights { .. } => EXIT_NON_GENERIC,
            Error::NoStrongPath(..) => EXIT_NO_PATH,
            _ => EXIT_FAIL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    json: bool,
}

impl Io<'_> {
    /// Reads `path`, or standard input for `-`.
    fn read(&mut self, path: &str) -> Result<(String, String), Failure> {
        let mut text = String::new();
        if path == "-" {
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::usage(format!("<stdin>: {e}")))?;
            Ok(("<stdin>".to_string(), text))
        } else {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
            Ok((path.to_string(), text))
        }
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::fail(format!("write failed: {e}")))
    }

    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::fail(e.to_string()))?;
        text.push('\n');
        self.emit(&text)
    }

    fn load_cells(&mut self, path: &str) -> Result<CellCollection, Failure> {
        let (source, text) = self.read(path)?;
        Ok(formats::parse_subdivision(&source, &text)?.to_collection(&source)?)
    }

    /// A type system from a types file, or the face closure of a subdivision file's cells.
    fn load_system(&mut self, path: &str) -> Result<TypeSystem, Failure> {
        let (source, text) = self.read(path)?;
        match formats::parse_type_source(&source, &text)? {
            TypeSource::Subdivision(f) => Ok(TypeSystem::face_closure(&f.to_collection(&source)?)),
            TypeSource::Types(f) => Ok(f.to_system(&source)?),
        }
    }

    fn load_weights(&mut self, path: &str) -> Result<crate::geometry::WeightMatrix, Failure> {
        let (source, text) = self.read(path)?;
        Ok(formats::parse_weights(&source, &text)?.to_matrix(&source)?)
    }
}

/// Parses a type given on the command line as a JSON list of lists.
fn parse_type_arg(flag: &str, text: &str, n: Option<usize>, d: usize) -> Result<TropicalType, Failure> {
    let raw: formats::RawType = serde_json::from_str(text)
        .map_err(|e| Failure::usage(format!("--{flag}: line {}, column {}: {e}", e.line(), e.column())))?;
    if let Some(n) = n {
        if raw.len() != n {
            return Err(Failure::usage(format!(
                "--{flag}: expected {n} coordinates, got {}",
                raw.len()
            )));
        }
    }
    Ok(formats::raw_to_type(d, &raw, &format!("--{flag}"))?)
}

fn cell_index(cells: &CellCollection, k: usize) -> Result<usize, Failure> {
    if k == 0 || k > cells.len() {
        return Err(Failure::usage(format!(
            "--cell {k}: expected a value in 1..={}",
            cells.len()
        )));
    }
    Ok(k - 1)
}

/// Runs the command line on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        json: cli.json,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "tomtri: {}", f.message);
            f.code
        }
    }
}

/// `run` over the process arguments and standard streams.
pub fn main_with_std() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32, Failure> {
    match command {
        Command::Gen(gen) => {
            let cells = match gen {
                GenCommand::Staircase { n, d } => staircase(n, d)?,
                GenCommand::Prism { perm } => prism_triangulation(&perm)?,
                GenCommand::Regular { weights } => regular_subdivision(&io.load_weights(&weights)?)?,
            };
            io.emit_json(&SubdivisionFile::from_collection(&cells))?;
            Ok(EXIT_OK)
        }
        Command::Validate { file } => {
            let cells = io.load_cells(&file)?;
            let report = validate_subdivision(&cells);
            if io.json {
                let mut value = serde_json::to_value(&report).map_err(|e| Failure::fail(e.to_string()))?;
                value["valid"] = json!(report.is_valid());
                io.emit_json(&value)?;
            } else {
                io.emit(&validation_text(&cells, &report))?;
            }
            Ok(if report.is_valid() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Faces { file } => {
            let system = io.load_system(&file)?;
            io.emit_json(&TypesFile::from_system(&system))?;
            Ok(EXIT_OK)
        }
        Command::CheckTom { file, mode } => {
            let system = io.load_system(&file)?;
            let mode = mode.map_or_else(|| SurroundingMode::default_for(&system), SurroundingMode::from);
            let verdict = check_tom_with(&system, mode)?;
            if io.json {
                let mut value = serde_json::to_value(&verdict).map_err(|e| Failure::fail(e.to_string()))?;
                value["types"] = json!(system.len());
                value["is_tom"] = json!(verdict.is_tom());
                io.emit_json(&value)?;
            } else {
                io.emit(&tom_text(&system, &verdict))?;
            }
            Ok(if verdict.is_tom() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Degree { file, cell } => {
            let cells = io.load_cells(&file)?;
            let k = cell_index(&cells, cell)?;
            let t = &cells.cells()[k];
            let ldv = t.left_degree_vector().entries;
            let rdv = t.right_degree_vector().entries;
            let locations = unit_simplex_locations(t);
            if io.json {
                io.emit_json(&json!({
                    "cell": cell,
                    "type": t,
                    "ldv": ldv,
                    "rdv": rdv,
                    "unit_simplex": locations,
                }))?;
            } else {
                let mut s = format!("cell {cell}: {t}\nldv: {ldv:?}\nrdv: {rdv:?}\n");
                match locations.as_slice() {
                    [] => s.push_str("unit simplex: none\n"),
                    [a] => {
                        let _ = writeln!(s, "unit simplex: {a:?}");
                    }
                    many => {
                        let _ = writeln!(s, "unit simplices: {many:?}");
                    }
                }
                io.emit(&s)?;
            }
            Ok(EXIT_OK)
        }
        Command::Dual { file } => {
            let cells = io.load_cells(&file)?;
            io.emit_json(&SubdivisionFile::from_collection(&cells.transpose()?))?;
            Ok(EXIT_OK)
        }
        Command::Rank(args) => {
            let (a, b) = pair_args(&args)?;
            let r = a.rank(&b)?;
            if io.json {
                io.emit_json(&json!({ "rank": r }))?;
            } else {
                io.emit(&format!("{:?}\n", r.entries()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Delta(args) => {
            let (a, b) = pair_args(&args)?;
            let delta = a.delta(&b)?;
            if io.json {
                io.emit_json(&json!({ "delta": delta }))?;
            } else {
                io.emit(&format!("{delta}\n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::StrongPath { file, a, b } => {
            let system = io.load_system(&file)?;
            let a = parse_type_arg("a", &a, Some(system.n()), system.d())?;
            let b = parse_type_arg("b", &b, Some(system.n()), system.d())?;
            let path = strong_path(&system, &a, &b)?;
            io.emit_json(&TypesFile::from_types(system.n(), system.d(), path.members()))?;
            Ok(EXIT_OK)
        }
        Command::Eliminate { file, a, b, j } => {
            let system = io.load_system(&file)?;
            let a = parse_type_arg("a", &a, Some(system.n()), system.d())?;
            let b = parse_type_arg("b", &b, Some(system.n()), system.d())?;
            if j == 0 || j > system.n() {
                return Err(Failure::usage(format!(
                    "--j {j}: expected a value in 1..={}",
                    system.n()
                )));
            }
            let c = eliminate_via_path(&system, &a, &b, j - 1)?;
            if io.json {
                io.emit_json(&json!({ "a": a, "b": b, "j": j, "witness": c }))?;
            } else {
                io.emit(&format!("{c}\n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Qalpha {
            file,
            alpha,
            check_connected,
        } => {
            let system = io.load_system(&file)?;
            if alpha.len() != system.n() {
                return Err(Failure::usage(format!(
                    "--alpha: expected {} entries, got {}",
                    system.n(),
                    alpha.len()
                )));
            }
            let alpha = RankVector(alpha);
            if !check_connected {
                io.emit_json(&TypesFile::from_system(&q_alpha(&system, &alpha)))?;
                return Ok(EXIT_OK);
            }
            let report = q_alpha_connected(&system, &alpha);
            if io.json {
                let mut value = serde_json::to_value(&report).map_err(|e| Failure::fail(e.to_string()))?;
                value["connected"] = json!(report.is_connected());
                io.emit_json(&value)?;
            } else {
                let verdict = if report.is_connected() {
                    "connected"
                } else {
                    "disconnected"
                };
                io.emit(&format!(
                    "Q_alpha for alpha {:?}: {} types, {} component(s) {:?}: {verdict}\n",
                    report.alpha.entries(),
                    report.size,
                    report.component_sizes.len(),
                    report.component_sizes
                ))?;
            }
            Ok(if report.is_connected() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Tu { file, cell } => {
            let cells = io.load_cells(&file)?;
            let k = cell_index(&cells, cell)?;
            let t = &cells.cells()[k];
            let facets = facet_matrix(t)?;
            let matrix = facets.to_int_matrix();
            let tu = is_totally_unimodular(&matrix)?;
            let order = interval_column_order(&matrix)?;
            if io.json {
                io.emit_json(&json!({
                    "cell": cell,
                    "type": t,
                    "facets": facets,
                    "matrix": matrix.rows(),
                    "totally_unimodular": tu,
                    "interval_reorderable": order.is_some(),
                    "column_order": order.as_ref().map(|o| o.iter().map(|c| c + 1).collect::<Vec<_>>()),
                }))?;
            } else {
                let mut s = format!("cell {cell}: {t}\nfacets over x_1..x_{}:\n", t.d() - 1);
                for row in &facets.rows {
                    let terms: Vec<String> = row.support.iter().map(|j| format!("x_{j}")).collect();
                    let op = match row.sense {
                        Sense::AtLeast => ">=",
                        Sense::AtMost => "<=",
                    };
                    let _ = writeln!(
                        s,
                        "  edge ({},{}): {} {op} {}",
                        row.edge.0 + 1,
                        row.edge.1,
                        terms.join(" + "),
                        row.rhs
                    );
                }
                let _ = writeln!(s, "totally unimodular: {}", yes_no(tu));
                match &order {
                    Some(o) => {
                        let cols: Vec<String> = o.iter().map(|c| (c + 1).to_string()).collect();
                        let _ = writeln!(s, "interval reorderable: yes (column order {})", cols.join(","));
                    }
                    None => s.push_str("interval reorderable: no\n"),
                }
                io.emit(&s)?;
            }
            Ok(if tu && order.is_some() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::PointType { weights, x } => {
            let w = io.load_weights(&weights)?;
            let x = x
                .split(',')
                .map(|s| parse_rational(s.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::usage(format!("--x: {e}")))?;
            if x.len() != w.d() {
                return Err(Failure::usage(format!(
                    "--x: expected {} coordinates, got {}",
                    w.d(),
                    x.len()
                )));
            }
            let t = point_type(&w, &x)?;
            if io.json {
                io.emit_json(&json!({ "type": t }))?;
            } else {
                io.emit(&format!("{t}\n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Plot { file, out } => {
            let cells = io.load_cells(&file)?;
            let picture = svg::render(&cells)?;
            if out == "-" {
                io.emit(&picture)?;
            } else {
                std::fs::write(&out, picture).map_err(|e| Failure::fail(format!("{out}: {e}")))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn pair_args(args: &PairArgs) -> Result<(TropicalType, TropicalType), Failure> {
    let d = match args.d {
        Some(d) => d,
        None => {
            let mut d = 0;
            for (flag, text) in [("a", &args.a), ("b", &args.b)] {
                let raw: formats::RawType = serde_json::from_str(text)
                    .map_err(|e| Failure::usage(format!("--{flag}: line {}, column {}: {e}", e.line(), e.column())))?;
                d = raw.iter().flatten().fold(d, |m, &j| m.max(j));
            }
            d.max(1)
        }
    };
    let a = parse_type_arg("a", &args.a, None, d)?;
    let b = parse_type_arg("b", &args.b, Some(a.n()), d)?;
    Ok((a, b))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ok_fail(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn validation_text(cells: &CellCollection, report: &ValidationReport) -> String {
    let mut s = format!("n = {}, d = {}, {} cells\n", report.n, report.d, report.cell_count);
    let _ = writeln!(s, "spanning trees: {}", ok_fail(report.spanning_trees_ok()));
    for bad in &report.non_trees {
        let what = match &bad.reason {
            crate::subdivision::NonTreeReason::WrongEdgeCount { edges, expected } => {
                format!("{edges} edges, expected {expected}")
            }
            crate::subdivision::NonTreeReason::Uncovered { elements } => format!("uncovered elements {elements:?}"),
            crate::subdivision::NonTreeReason::Disconnected => "disconnected".to_string(),
        };
        let _ = writeln!(s, "  cell {} {}: {what}", bad.cell + 1, cells.cells()[bad.cell]);
    }
    let _ = writeln!(s, "interior facets shared: {}", ok_fail(report.facets_ok()));
    for f in &report.dangling_facets {
        let _ = writeln!(
            s,
            "  cell {} {}: facet {} (edge ({},{})) lies in no other cell",
            f.cell + 1,
            cells.cells()[f.cell],
            f.facet,
            f.edge.0 + 1,
            f.edge.1
        );
    }
    let _ = writeln!(s, "no overlapping cells: {}", ok_fail(report.acyclic_ok()));
    for c in &report.overlap_cycles {
        let walk: Vec<String> = c.cycle.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            "  cells {} and {}: cycle {}",
            c.cells.0 + 1,
            c.cells.1 + 1,
            walk.join(" -> ")
        );
    }
    s.push_str(if report.is_valid() { "valid\n" } else { "invalid\n" });
    s
}

fn violation_text(v: &Violation) -> String {
    match v {
        Violation::MissingBoundary { element } => format!("boundary type for element {element} is missing"),
        Violation::MissingRefinement {
            source,
            partition,
            refinement,
        } => format!("{source} refined by {partition:?} gives {refinement}, which is missing"),
        Violation::MissingDeletion {
            source,
            coord,
            element,
            result,
        } => format!(
            "deleting {element} from coordinate {} of {source} gives {result}, which is missing",
            coord + 1
        ),
        Violation::ComparabilityCycle { a, b, cycle } => {
            let walk: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            format!("{a} and {b}: directed cycle {}", walk.join(" -> "))
        }
        Violation::EliminationFailure { a, b, coord } => {
            format!("{a} and {b}: no elimination witness at coordinate {}", coord + 1)
        }
    }
}

fn tom_text(system: &TypeSystem, verdict: &TomVerdict) -> String {
    let mut s = format!("{} types, n = {}, d = {}\n", system.len(), system.n(), system.d());
    for report in verdict.reports() {
        let name = serde_json::to_value(report.axiom)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        let mode = report
            .mode
            .map(|m| {
                if m == SurroundingMode::Subset {
                    " (subset)"
                } else {
                    " (partition)"
                }
            })
            .unwrap_or("");
        let _ = writeln!(
            s,
            "{name}{mode}: {} ({} checks, {} violations)",
            if report.passed() { "pass" } else { "FAIL" },
            report.checked,
            report.violations.len()
        );
        for v in report.violations.iter().take(SHOWN_VIOLATIONS) {
            let _ = writeln!(s, "  {}", violation_text(v));
        }
        if report.violations.len() > SHOWN_VIOLATIONS {
            let _ = writeln!(s, "  ... and {} more", report.violations.len() - SHOWN_VIOLATIONS);
        }
    }
    s.push_str(if verdict.is_tom() {
        "tropical oriented matroid\n"
    } else {
        "not a tropical oriented matroid\n"
    });
    s
}
