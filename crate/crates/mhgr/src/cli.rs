//! The `mhgr` command line.
//!
//! Exit codes: 0 witness found (or matrix is an HGR/PGSR, or certificate
//! reverified), 1 error, 2 `synthesize` asked for `m = 2`, 3 nonexistence (or
//! a matrix that is neither), 4 capacity exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use mhgr_core::aut::{automorphisms_with, brute_force_aut_order, verify_matrix_with, AutOptions, DEFAULT_VERTEX_CAP};
use mhgr_core::catalog::{CatalogEntry, GroupClass, ENTRIES};
use mhgr_core::construct::{synthesize_with, SynthesisOptions, SynthesisOutcome};
use mhgr_core::search::SearchMode;
use mhgr_core::Group;
use serde::Serialize;

use crate::error::{read_to_string, Error, Result};
use crate::formats::{self, entries_of, Entry, GroupRef, MatrixJson};
use crate::groupspec::GroupSpec;
use crate::parallel::{run_search, SearchRequest};
use crate::report::{self, emit, emit_search, search_evidence, Certificate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_M2: i32 = 2;
pub const EXIT_NONEXISTENCE: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

/// Environment variable overriding the automorphism engine's vertex cap.
pub const VERTEX_CAP_ENV: &str = "MHGR_VERTEX_CAP";

const GROUP_HELP: &str = "Group expression: Cn | Cp^k | Dn | Q8 | A4 | X27 | @table.json, joined by 'x' \
for direct products. Dn is the dihedral group of ORDER n: D6 has 6 elements (not 12), D8 is the symmetry \
group of the square. Example: --group C2^4xC3";

#[derive(Debug, Parser)]
#[command(
    name = "mhgr",
    version,
    about = "Constructs, verifies and searches for m-Haar graphical representations of finite groups",
    after_help = "Exit codes: 0 witness / verified, 1 error, 2 m = 2 given to synthesize, 3 nonexistence, \
4 capacity exceeded.\nEnvironment: MHGR_VERTEX_CAP overrides the automorphism engine's vertex cap (default 1024)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Normalized,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether GROUP has an m-HGR and print a certificate.
    Synthesize {
        #[arg(long, help = GROUP_HELP)]
        group: String,
        #[arg(short = 'm')]
        m: usize,
        /// Check the witness with the automorphism engine (always done for JSON certificates).
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// `json` prints the certificate; `edgelist`/`graph6` print the witness graph.
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        /// Seed for the randomized large-m routes.
        #[arg(long, default_value_t = mhgr_core::catalog::DEFAULT_SEED)]
        seed: u64,
    },
    /// Classify a connection matrix, or reverify a certificate.
    Verify {
        file: PathBuf,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all regular m-Haar connection matrices of GROUP.
    Search {
        #[arg(long, help = GROUP_HELP)]
        group: String,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        /// Stop at the first witness.
        #[arg(long)]
        first_witness: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Largest candidate space accepted.
        #[arg(long, default_value_t = mhgr_core::search::DEFAULT_BUDGET as u64)]
        budget: u64,
        /// Also write a certificate of the outcome.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// The built-in table of small-group constructions.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Automorphism-group order by brute force (at most 9 vertices).
    OracleAut {
        /// Edge list ("p n e" header) or graph6 file.
        file: PathBuf,
        /// Also report the refinement engine's answer, as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List entries with their index, key, origin and source.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print the matrix JSON of entry INDEX.
    Export {
        index: usize,
        /// Group to instantiate on; defaults to the entry's first member.
        #[arg(long, help = GROUP_HELP)]
        group: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Output streams of one invocation.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Runs the CLI and returns the exit code.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { io.err.write_all(text.as_bytes()) } else { io.out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            if e.is_capacity() {
                let _ = writeln!(io.err, "hint: raise {VERTEX_CAP_ENV} or use a smaller instance");
                EXIT_CAPACITY
            } else {
                EXIT_ERROR
            }
        }
    }
}

pub fn vertex_cap() -> Result<usize> {
    match std::env::var(VERTEX_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Format(format!("{VERTEX_CAP_ENV}={v:?} is not a vertex count"))),
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
    }
}

fn aut_options() -> Result<AutOptions> {
    Ok(AutOptions { vertex_cap: vertex_cap()?, colors: None })
}

fn write_output(io: &mut Io<'_>, out: Option<&Path>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => io.out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e)),
    }
}

fn dispatch(cmd: Command, io: &mut Io<'_>) -> Result<i32> {
    match cmd {
        Command::Synthesize { group, m, verify, out, format, seed } => {
            cmd_synthesize(io, &group, m, verify, out.as_deref(), format, seed)
        }
        Command::Verify { file, json } => cmd_verify(io, &file, json),
        Command::Search { group, m, mode, first_witness, workers, budget, certificate } => {
            let mode = match mode {
                ModeArg::Exhaustive => SearchMode::Exhaustive,
                ModeArg::Normalized => SearchMode::Normalized,
            };
            cmd_search(io, &group, m, mode, first_witness, workers, budget, certificate.as_deref())
        }
        Command::Catalog { action: CatalogAction::List { json } } => cmd_catalog_list(io, json),
        Command::Catalog { action: CatalogAction::Export { index, group, out } } => {
            cmd_catalog_export(io, index, group.as_deref(), out.as_deref())
        }
        Command::OracleAut { file, json } => cmd_oracle(io, &file, json),
    }
}

fn cmd_synthesize(
    io: &mut Io<'_>,
    spec: &str,
    m: usize,
    verify: bool,
    out: Option<&Path>,
    format: OutputFormat,
    seed: u64,
) -> Result<i32> {
    let group = Arc::new(GroupSpec::parse(spec)?.build()?);
    if m == 2 {
        let _ = writeln!(
            io.err,
            "m = 2 is outside the classification handled by synthesize; decide it with \
             `mhgr search --group {spec} -m 2`"
        );
        return Ok(EXIT_M2);
    }
    if m < 2 {
        return Err(Error::Format(format!("m must be at least 3, got {m}")));
    }
    let opts = SynthesisOptions { verify: verify || format == OutputFormat::Json, seed, vertex_cap: vertex_cap()? };
    let outcome = synthesize_with(&group, m, &opts)?;
    match &outcome {
        SynthesisOutcome::Nonexistence { clause } => {
            let _ = writeln!(io.err, "no {m}-HGR of {}: exception clause {}", group.descriptor(), clause.tag());
            write_output(io, out, &emit(&group, m, &outcome)?.to_json())?;
            Ok(EXIT_NONEXISTENCE)
        }
        SynthesisOutcome::Witness { matrix, route, verdict } => {
            match verdict {
                Some(v) => {
                    let _ = writeln!(io.err, "{m}-HGR of {} via {route}: |Aut| = {}", group.descriptor(), v.aut_order);
                }
                None => {
                    let _ = writeln!(io.err, "{m}-HGR candidate of {} via {route} (unverified)", group.descriptor());
                }
            }
            let text = match format {
                OutputFormat::Json => emit(&group, m, &outcome)?.to_json(),
                OutputFormat::Edgelist => formats::to_edgelist(&matrix.build_graph().graph),
                OutputFormat::Graph6 => formats::to_graph6(&matrix.build_graph().graph),
            };
            write_output(io, out, &text)?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct NeitherJson {
    kind: &'static str,
    group: GroupRef,
    m: usize,
    reason: String,
    evidence: report::VerificationEvidence,
}

fn cmd_verify(io: &mut Io<'_>, file: &Path, json: bool) -> Result<i32> {
    let text = read_to_string(file)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let opts = aut_options()?;
    if value.get("schema").is_some() {
        let cert = Certificate::from_json(&text)?;
        let r = report::reverify_in(&cert, &opts, file.parent())?;
        if json {
            let mismatches: Vec<_> = r
                .mismatches
                .iter()
                .map(|m| serde_json::json!({"field": m.field, "claimed": m.claimed, "actual": m.actual}))
                .collect();
            let doc = serde_json::json!({"reverified": r.ok(), "kind": cert.kind.to_string(), "mismatches": mismatches});
            write_output(io, None, &serde_json::to_string_pretty(&doc)?)?;
        } else if r.ok() {
            write_output(io, None, &format!("certificate reverified: {} for m = {}", cert.kind, cert.m))?;
        } else {
            for mm in &r.mismatches {
                let _ = writeln!(io.out, "evidence mismatch in {mm}");
            }
        }
        return Ok(if r.ok() { EXIT_OK } else { EXIT_ERROR });
    }
    let doc: MatrixJson = serde_json::from_value(value)?;
    let cm = doc.build_in(file.parent())?;
    let v = verify_matrix_with(&cm, &opts)?;
    let (m, n) = (cm.m(), cm.group().order());
    let label = if v.is_hgr() {
        Some(format!("{m}-HGR of group of order {n}"))
    } else if v.is_pgsr() {
        Some(format!("{m}-PGSR of group of order {n}"))
    } else {
        None
    };
    if json {
        let text = match &label {
            Some(_) => report::emit_verified(&cm, &v, None)?.to_json(),
            None => serde_json::to_string_pretty(&NeitherJson {
                kind: "neither",
                group: doc.group.clone(),
                m,
                reason: v.justification(),
                evidence: report::VerificationEvidence::of(&v),
            })?,
        };
        write_output(io, None, &text)?;
    } else {
        let head = label.clone().unwrap_or_else(|| format!("neither an HGR nor a PGSR (m = {m}, order {n})"));
        let body = format!(
            "{head}\n  aut_order: {}\n  group_order: {n}\n  regular: {}{}\n  diagonal_empty: {}\n  orbits_are_parts: {}\n  {}",
            v.aut_order,
            v.regular,
            v.valency.map(|k| format!(" (valency {k})")).unwrap_or_default(),
            v.diagonal_empty,
            v.orbits_are_parts,
            v.justification()
        );
        write_output(io, None, &body)?;
    }
    Ok(if label.is_some() { EXIT_OK } else { EXIT_NONEXISTENCE })
}

#[derive(Serialize)]
struct SearchJson {
    group: GroupRef,
    group_order: usize,
    m: usize,
    method: String,
    mode: String,
    first_witness: bool,
    workers: usize,
    verdict: &'static str,
    candidates_examined: u64,
    regular_candidates: u64,
    witnesses: Vec<Vec<Entry>>,
    wall_time_ms: Option<u64>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    io: &mut Io<'_>,
    spec: &str,
    m: usize,
    mode: SearchMode,
    first_witness: bool,
    workers: usize,
    budget: u64,
    certificate: Option<&Path>,
) -> Result<i32> {
    let group = Arc::new(GroupSpec::parse(spec)?.build()?);
    let cap = vertex_cap()?;
    let req = SearchRequest { mode, first_witness, workers, budget: budget as u128, vertex_cap: cap };
    let report = run_search(group.clone(), m, &req)?;
    let ev = search_evidence(&report);
    let verdict = if report.found() { "witness" } else { "no witness" };
    let doc = SearchJson {
        group: GroupRef::of(&group),
        group_order: group.order(),
        m,
        method: ev.method,
        mode: ev.mode,
        first_witness,
        workers,
        verdict,
        candidates_examined: ev.candidates_examined,
        regular_candidates: ev.regular_candidates,
        witnesses: report.witnesses.iter().map(entries_of).collect(),
        wall_time_ms: report.wall_time_ms,
    };
    let _ = writeln!(
        io.err,
        "{verdict} for {} at m = {m} ({} candidates examined of {} regular)",
        group.descriptor(),
        doc.candidates_examined,
        doc.regular_candidates
    );
    write_output(io, None, &serde_json::to_string_pretty(&doc)?)?;
    if let Some(path) = certificate {
        if !report.found() && first_witness {
            return Err(Error::Format("a nonexistence certificate needs a full search (drop --first-witness)".into()));
        }
        let cert = emit_search(&group, &report, &AutOptions { vertex_cap: cap, colors: None })?;
        write_output(io, Some(path), &cert.to_json())?;
    }
    Ok(if report.found() { EXIT_OK } else { EXIT_NONEXISTENCE })
}

#[derive(Serialize)]
struct BlockJson {
    i: usize,
    j: usize,
    words: Vec<&'static str>,
}

#[derive(Serialize)]
struct EntryJson {
    index: usize,
    key: String,
    groups: String,
    m: usize,
    kind: String,
    origin: String,
    citation: &'static str,
    blocks: Vec<BlockJson>,
}

fn cmd_catalog_list(io: &mut Io<'_>, json: bool) -> Result<i32> {
    if json {
        let list: Vec<EntryJson> = ENTRIES
            .iter()
            .enumerate()
            .map(|(index, e)| EntryJson {
                index,
                key: e.key(),
                groups: e.class.to_string(),
                m: e.m,
                kind: e.kind.to_string(),
                origin: e.origin.to_string(),
                citation: e.citation,
                blocks: e.blocks.iter().map(|&(i, j, w)| BlockJson { i, j, words: w.to_vec() }).collect(),
            })
            .collect();
        write_output(io, None, &serde_json::to_string_pretty(&list)?)?;
    } else {
        let mut text = String::new();
        for (index, e) in ENTRIES.iter().enumerate() {
            text.push_str(&format!("{index:>3}  {:<28} {:<15} {}\n", e.key(), e.origin, e.citation));
        }
        write_output(io, None, &text)?;
    }
    Ok(EXIT_OK)
}

fn default_group(e: &CatalogEntry) -> Result<Group> {
    match e.class {
        GroupClass::Members(list) => Ok(list[0].build()),
        _ => Err(Error::Format(format!("entry {} applies to a group class; pass --group", e.key()))),
    }
}

fn cmd_catalog_export(io: &mut Io<'_>, index: usize, group: Option<&str>, out: Option<&Path>) -> Result<i32> {
    let e = ENTRIES
        .get(index)
        .ok_or_else(|| Error::Format(format!("no catalog entry {index}; there are {}", ENTRIES.len())))?;
    let g = Arc::new(match group {
        Some(s) => GroupSpec::parse(s)?.build()?,
        None => default_group(e)?,
    });
    let cm = e.matrix(&g)?;
    write_output(io, out, &MatrixJson::of(&cm).to_json())?;
    Ok(EXIT_OK)
}

fn cmd_oracle(io: &mut Io<'_>, file: &Path, json: bool) -> Result<i32> {
    let graph = formats::load_graph(file)?;
    let brute = brute_force_aut_order(&graph)?;
    if json {
        let engine = automorphisms_with(&graph, &aut_options()?)?.order.to_string();
        let doc = serde_json::json!({
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "brute_force": brute,
            "engine": report::AutOrder::from_decimal(engine),
        });
        write_output(io, None, &serde_json::to_string_pretty(&doc)?)?;
    } else {
        write_output(io, None, &brute.to_string())?;
    }
    Ok(EXIT_OK)
}
