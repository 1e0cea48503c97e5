//! The `polyrecon` command line.
//!
//! Every subcommand builds a JSON payload; `--format text` prints a human
//! rendering instead. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | verification answered "no" |
//! | 2 | usage error |
//! | 3 | input error (unreadable or invalid files, bad ids) |
//! | 4 | capacity limit exceeded |
//! | 5 | unsupported class (three or more non-simple vertices) |
//! | 6 | reconstruction failed |

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::census::{self, CatalogEntry};
use crate::error::{Error, Result};
use crate::face_lattice::{FaceLattice, LatticeFile, TruncationRecord};
use crate::fixtures;
use crate::graphs::Graph;
use crate::orientations::{minimizers, FValue, OrientationFile};
use crate::reconstruct::{reconstruct, ReconstructionSummary};
use crate::vset::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;
pub const EXIT_UNSUPPORTED: i32 = 5;
pub const EXIT_FAILED: i32 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    /// JSON report; empty when the command failed before producing one.
    pub payload: String,
    /// What the binary writes to standard output.
    pub output: String,
    /// Lines for standard error.
    pub diagnostics: Vec<String>,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "polyrecon", version, about = "Reconstruct polytope face lattices from graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for standard output.
    #[arg(long, value_enum, default_value_t, global = true)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reconstruct the face lattice of a graph with at most two non-simple vertices.
    Reconstruct {
        #[arg(long)]
        graph: PathBuf,
        /// Dimension of the polytope; defaults to the minimum degree.
        #[arg(long)]
        dim: Option<usize>,
        /// Write the lattice file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum of f^O over acyclic orientations, optionally with a forced sink.
    FoMin {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        sink: Option<usize>,
        /// Write every minimizing orientation here, as a JSON array of orientation files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cut a face off a polytope.
    Truncate {
        #[arg(long)]
        lattice: PathBuf,
        /// Vertex ids of the face, separated by commas or spaces.
        #[arg(long)]
        face: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the truncation record (with the faces to restore) here.
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Undo a truncation using its record.
    Untruncate {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        record: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Group catalog entries by graph isomorphism class.
    Census {
        /// Catalog file, or `fixtures` for the bundled catalog.
        #[arg(long)]
        catalog: String,
        #[arg(long)]
        dim: Option<usize>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that two entries have isomorphic graphs but distinct lattices.
    VerifyExample {
        #[arg(long)]
        catalog: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Print the bundled catalog.
    Fixtures {
        #[arg(long)]
        id: Option<String>,
    },
}

/// Record file: the truncation record plus the faces of the cut face.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecordFile {
    #[serde(flatten)]
    pub record: TruncationRecord,
    pub restored: Vec<Vec<usize>>,
}

struct Report {
    code: i32,
    payload: String,
    text: String,
    diagnostics: Vec<String>,
}

impl Report {
    fn new(payload: &impl Serialize, text: String) -> Self {
        let mut payload = serde_json::to_string(payload).expect("report serializes");
        payload.push('\n');
        Report {
            code: EXIT_OK,
            payload,
            text,
            diagnostics: Vec::new(),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Unsupported { .. } => EXIT_UNSUPPORTED,
        Error::ReconstructionFailed { .. } => EXIT_FAILED,
        Error::Input(_) | Error::Catalog { .. } | Error::NotPolytopal { .. } | Error::Degenerate(..) => EXIT_INPUT,
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return CommandResult {
                exit_code: code,
                payload: String::new(),
                output: if code == EXIT_OK { text.clone() } else { String::new() },
                diagnostics: if code == EXIT_OK { Vec::new() } else { vec![text.trim_end().to_string()] },
            };
        }
    };
    match execute(cli.command) {
        Ok(report) => CommandResult {
            exit_code: report.code,
            output: match cli.format {
                Format::Json => report.payload.clone(),
                Format::Text => report.text,
            },
            payload: report.payload,
            diagnostics: report.diagnostics,
        },
        Err(e) => CommandResult {
            exit_code: exit_code(&e),
            payload: String::new(),
            output: String::new(),
            diagnostics: vec![format!("error: {e}")],
        },
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn load_catalog(source: &str) -> Result<Vec<CatalogEntry>> {
    if source == "fixtures" {
        Ok(fixtures::catalog())
    } else {
        census::parse_catalog(&read(Path::new(source))?)
    }
}

fn parse_face(text: &str) -> Result<VertexSet> {
    let ids = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::input(format!("bad vertex id {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if let Some(&v) = ids.iter().find(|&&v| v >= crate::vset::MAX_VERTICES) {
        return Err(Error::input(format!("vertex id {v} out of range")));
    }
    Ok(ids.into_iter().collect())
}

fn facet_lines(lattice: &FaceLattice) -> String {
    let mut out = String::new();
    for f in lattice.sorted_facets() {
        let _ = writeln!(out, "  {f:?}");
    }
    out
}

fn execute(command: Command) -> Result<Report> {
    match command {
        Command::Reconstruct { graph, dim, out } => {
            let g = Graph::from_json(&read(&graph)?)?;
            let r = reconstruct(&g, dim)?;
            if let Some(out) = out {
                write(&out, &r.lattice.to_json())?;
            }
            #[derive(Serialize)]
            struct Payload {
                #[serde(flatten)]
                summary: ReconstructionSummary,
                lattice: LatticeFile,
            }
            let summary = r.summary();
            let text = format!(
                "{}-polytope, {}-nearly simple, f-vector {:?}\nfacets:\n{}",
                r.dimension,
                r.nearly_simple_index,
                summary.f_vector,
                facet_lines(&r.lattice)
            );
            let mut report = Report::new(
                &Payload {
                    summary,
                    lattice: r.lattice.to_file(),
                },
                text,
            );
            if r.dimension_assumed {
                report
                    .diagnostics
                    .push(format!("note: dimension assumed to be the minimum degree, {}", r.dimension));
            }
            Ok(report)
        }
        Command::FoMin { graph, sink, out } => {
            let g = Graph::from_json(&read(&graph)?)?;
            let stream = minimizers(&g, sink)?;
            let minimum = stream.value;
            let witnesses: Vec<OrientationFile> = stream.map(|o| o.to_file()).collect();
            if let Some(out) = out {
                let mut s = serde_json::to_string(&witnesses).expect("orientations serialize");
                s.push('\n');
                write(&out, &s)?;
            }
            #[derive(Serialize)]
            struct Payload {
                sink: Option<usize>,
                minimum: FValue,
                witnesses: usize,
            }
            let text = match sink {
                Some(y) => format!("minimum f^O with sink {y}: {minimum} ({} orientations)\n", witnesses.len()),
                None => format!("minimum f^O: {minimum} ({} orientations)\n", witnesses.len()),
            };
            Ok(Report::new(
                &Payload {
                    sink,
                    minimum,
                    witnesses: witnesses.len(),
                },
                text,
            ))
        }
        Command::Truncate { lattice, face, out, record } => {
            let original = FaceLattice::from_json(&read(&lattice)?)?;
            let face = parse_face(&face)?;
            let (cut, rec) = original.truncate(face)?;
            let file = RecordFile {
                record: rec,
                restored: original.interval_below(face).iter().map(|f| f.to_vec()).collect(),
            };
            if let Some(out) = out {
                write(&out, &cut.to_json())?;
            }
            if let Some(path) = record {
                let mut s = serde_json::to_string(&file).expect("record serializes");
                s.push('\n');
                write(&path, &s)?;
            }
            #[derive(Serialize)]
            struct Payload<'a> {
                f_vector: Vec<usize>,
                lattice: LatticeFile,
                record: &'a RecordFile,
            }
            let text = format!(
                "truncated {:?}: f-vector {:?}, new facet {:?}\nfacets:\n{}",
                face.to_vec(),
                cut.f_vector(),
                file.record.new_facet_vertices().to_vec(),
                facet_lines(&cut)
            );
            Ok(Report::new(
                &Payload {
                    f_vector: cut.f_vector(),
                    lattice: cut.to_file(),
                    record: &file,
                },
                text,
            ))
        }
        Command::Untruncate { lattice, record, out } => {
            let cut = FaceLattice::from_json(&read(&lattice)?)?;
            let file: RecordFile = serde_json::from_str(&read(&record)?)
                .map_err(|e| Error::input(format!("record file: {e}")))?;
            let restored: Vec<VertexSet> = file
                .restored
                .iter()
                .map(|f| {
                    if f.iter().any(|&v| v >= file.record.original_vertex_count) {
                        Err(Error::input(format!("restored face {f:?} out of range")))
                    } else {
                        Ok(f.iter().copied().collect())
                    }
                })
                .collect::<Result<_>>()?;
            let original = cut.untruncate(&file.record, &restored)?;
            if let Some(out) = out {
                write(&out, &original.to_json())?;
            }
            #[derive(Serialize)]
            struct Payload {
                f_vector: Vec<usize>,
                lattice: LatticeFile,
            }
            let text = format!(
                "restored f-vector {:?}\nfacets:\n{}",
                original.f_vector(),
                facet_lines(&original)
            );
            Ok(Report::new(
                &Payload {
                    f_vector: original.f_vector(),
                    lattice: original.to_file(),
                },
                text,
            ))
        }
        Command::Census { catalog, dim, out } => {
            let entries = load_catalog(&catalog)?;
            let report = census::census_report(&entries, dim);
            let r = Report::new(&report, report.to_text());
            if let Some(out) = out {
                write(&out, &r.payload)?;
            }
            Ok(r)
        }
        Command::VerifyExample { catalog, a, b } => {
            let entries = load_catalog(&catalog)?;
            let find = |id: &str| {
                entries
                    .iter()
                    .find(|e| e.id == id)
                    .ok_or_else(|| Error::input(format!("no catalog entry {id:?}")))
            };
            let (ea, eb) = (find(&a)?, find(&b)?);
            let graphs_isomorphic = ea.graph_certificate == eb.graph_certificate;
            let lattices_isomorphic = ea.lattice.is_isomorphic(&eb.lattice)?;
            let counterexample = census::verify_counterexample(ea, eb)?;
            #[derive(Serialize)]
            struct Payload<'a> {
                a: &'a str,
                b: &'a str,
                graphs_isomorphic: bool,
                lattices_isomorphic: bool,
                counterexample: bool,
            }
            let text = format!(
                "{a} vs {b}: graphs isomorphic: {}, lattices isomorphic: {}\n{}\n",
                yes_no(graphs_isomorphic),
                yes_no(lattices_isomorphic),
                if counterexample {
                    "distinct polytopes with isomorphic graphs"
                } else {
                    "not a counterexample"
                }
            );
            let mut report = Report::new(
                &Payload {
                    a: &a,
                    b: &b,
                    graphs_isomorphic,
                    lattices_isomorphic,
                    counterexample,
                },
                text,
            );
            if !counterexample {
                report.code = EXIT_NO;
            }
            Ok(report)
        }
        Command::Fixtures { id } => {
            let entries = fixtures::catalog();
            let selected: Vec<CatalogEntry> = match id {
                Some(id) => vec![entries
                    .into_iter()
                    .find(|e| e.id == id)
                    .ok_or_else(|| Error::input(format!("no bundled fixture {id:?}")))?],
                None => entries,
            };
            let text = if selected.len() == 1 {
                format!("{}\n", fixtures::facet_list(&selected[0]))
            } else {
                selected
                    .iter()
                    .map(|e| format!("{} (d={}): {}\n", e.id, e.dimension, fixtures::facet_list(e)))
                    .collect()
            };
            let mut report = Report::new(&(), text);
            report.payload = census::catalog_to_json(&selected);
            Ok(report)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
