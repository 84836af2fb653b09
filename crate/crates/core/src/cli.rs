//! Command-line front end. Exit codes: 0 success, 1 violation or missing
//! guarantee, 2 usage or input error.

use std::io::{Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use crate::charge::{apply_rule_set, discharge_report, format_rational, initial_charges, RuleSet, Scheme};
use crate::construct::{fixture, glue, GlueSpec};
use crate::diagram::{parse, serialize, smooth, validate, Diagram};
use crate::embedding::{face_report, trace_faces};
use crate::patterns::{catalog_pattern, check_guarantees, find_report, find_typed, parse_pattern, GuaranteeError};

#[derive(Parser, Debug)]
#[command(name = "onepl", version, about = "Checks 1-planar diagrams: faces, charges, discharging and light subgraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a diagram for structural violations.
    Validate { file: String },
    /// List the faces of the associated plane graph.
    Faces { file: String },
    /// Print the edges of the graph obtained by smoothing all crossings.
    Smooth { file: String },
    /// Print the initial charge of every element.
    Charge {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        file: String,
    },
    /// Run a discharging rule set and report the negative elements.
    Discharge {
        #[arg(long, value_enum)]
        rules: RulesArg,
        /// Also print every transfer.
        #[arg(long)]
        log: bool,
        file: String,
    },
    /// Search the smoothed graph for a degree-typed pattern.
    Find {
        #[arg(long, conflicts_with = "pattern_file", required_unless_present = "pattern_file")]
        pattern: Option<String>,
        #[arg(long)]
        pattern_file: Option<String>,
        file: String,
    },
    /// Glue copies of a diagram along two vertices of one face.
    Glue {
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        #[arg(long)]
        face: usize,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        file: String,
    },
    /// Check every guarantee that holds for minimum degree 7.
    CheckTheorems { file: String },
    /// Print a built-in diagram (tetrahedron, c4, k5, k6).
    Fixture { name: String },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "UPPER")]
enum SchemeArg {
    A,
    B,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "UPPER")]
enum RulesArg {
    A,
    B,
    C,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_text(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
    }

    fn read_diagram(&mut self, path: &str) -> Result<Diagram, Failure> {
        let text = self.read_text(path)?;
        parse(&text).map_err(|e| usage(format!("{path}: {e}")))
    }

    /// Reads and rejects diagrams with violations (exit 1).
    fn read_valid(&mut self, path: &str) -> Result<Diagram, Failure> {
        let d = self.read_diagram(path)?;
        let report = validate(&d);
        if !report.ok() {
            return Err(Failure { code: 1, message: format!("{path}: invalid diagram\n{report}") });
        }
        Ok(d)
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("cannot write output: {e}")))
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message.trim_end());
            f.code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32, Failure> {
    match command {
        Command::Validate { file } => {
            let d = io.read_diagram(&file)?;
            let report = validate(&d);
            io.emit(&report.to_string())?;
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::Faces { file } => {
            let d = io.read_valid(&file)?;
            io.emit(&face_report(&d, &trace_faces(&d)))?;
            Ok(0)
        }
        Command::Smooth { file } => {
            let d = io.read_valid(&file)?;
            let g = smooth(&d).map_err(|e| Failure { code: 1, message: e.to_string() })?;
            let mut out = String::new();
            for (a, b) in g.edges() {
                out.push_str(&format!("edge {} {}\n", g.name(a), g.name(b)));
            }
            io.emit(&out)?;
            Ok(0)
        }
        Command::Charge { scheme, file } => {
            let d = io.read_valid(&file)?;
            let scheme = match scheme {
                SchemeArg::A => Scheme::A,
                SchemeArg::B => Scheme::B,
            };
            let cs = initial_charges(&d, &trace_faces(&d), scheme);
            let mut out = String::new();
            for (e, r) in cs.iter() {
                out.push_str(&format!("charge {} {}\n", e.label(&d), format_rational(r)));
            }
            out.push_str(&format!("total={}\n", format_rational(&cs.total())));
            io.emit(&out)?;
            Ok(0)
        }
        Command::Discharge { rules, log, file } => {
            let d = io.read_valid(&file)?;
            let rules = match rules {
                RulesArg::A => RuleSet::A,
                RulesArg::B => RuleSet::B,
                RulesArg::C => RuleSet::C,
            };
            let fs = trace_faces(&d);
            let initial = initial_charges(&d, &fs, rules.scheme());
            let (final_state, transfers) =
                apply_rule_set(&d, &fs, &initial, rules).map_err(|e| Failure { code: 1, message: e.to_string() })?;
            io.emit(&discharge_report(&d, &initial, &final_state, log.then_some(transfers.as_slice())))?;
            Ok(0)
        }
        Command::Find { pattern, pattern_file, file } => {
            let p = match (pattern, pattern_file) {
                (Some(name), _) => catalog_pattern(&name).ok_or_else(|| usage(format!("unknown pattern `{name}`")))?,
                (None, Some(path)) => {
                    let text = io.read_text(&path)?;
                    let name = Path::new(&path)
                        .file_stem()
                        .and_then(|s| s.to_str())
                        .unwrap_or("pattern")
                        .to_string();
                    parse_pattern(&name, &text).map_err(|e| usage(format!("{path}: {e}")))?
                }
                (None, None) => return Err(usage("one of --pattern or --pattern-file is required")),
            };
            let d = io.read_valid(&file)?;
            let g = smooth(&d).map_err(|e| Failure { code: 1, message: e.to_string() })?;
            let matches = find_typed(&g, &p, None);
            io.emit(&find_report(&g, &p, &matches))?;
            Ok(0)
        }
        Command::Glue { w1, w2, face, n, file } => {
            let d = io.read_diagram(&file)?;
            let glued = glue(&d, &GlueSpec { w1, w2, face, n }).map_err(|e| usage(e.to_string()))?;
            let text = serialize(&glued).map_err(|e| usage(e.to_string()))?;
            io.emit(&text)?;
            Ok(0)
        }
        Command::CheckTheorems { file } => {
            let d = io.read_diagram(&file)?;
            match check_guarantees(&d) {
                Ok(report) => {
                    io.emit(&report.to_string())?;
                    Ok(if report.all_pass() { 0 } else { 1 })
                }
                Err(GuaranteeError::InvalidDiagram(report)) => {
                    io.emit(&report.to_string())?;
                    Ok(1)
                }
                Err(e @ GuaranteeError::PreconditionMinDegree { .. }) => Err(usage(e.to_string())),
                Err(e) => Err(Failure { code: 1, message: e.to_string() }),
            }
        }
        Command::Fixture { name } => {
            let d = fixture(&name).map_err(|e| usage(e.to_string()))?;
            io.emit(&serialize(&d).map_err(|e| usage(e.to_string()))?)?;
            Ok(0)
        }
    }
}
