//! Batch interface: verify matrices, emit constructions, reproduce the
//! bound tables, run searches, and compute Davenport constants.
//!
//! Exit codes: 0 success; 2 a requested verification returned false (the
//! report carries a witness); 3 a computation hit its budget; 4 malformed
//! input file; 64 invalid command line.

mod matrix_file;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use cohyper::bounds;
use cohyper::catalogue::{catalogue, catalogue_entry};
use cohyper::checks;
use cohyper::code::LinearCode;
use cohyper::construct::{concatenate, rs_arc_code, sparse_tetrahedron};
use cohyper::davenport::{asymptotic_tables, d2_exhaustive, d2_weighted, GroupSpec, ValueOrInterval};
use cohyper::error::Error as CoreError;
use cohyper::graph::{alpha_optimizer, alpha_table, integrity, spectral_integrity_lower_bound, spectrum, Graph};
use cohyper::search::{build_itable, determine_cell, exhaustive_exists, ITable};
use matrix_file::{parse_matrix_file, render_matrix_file};
use report::{Format, Table};

/// Version tag embedded in every JSON report.
const SCHEMA_VERSION: &str = "cohyper/v1";

#[derive(Parser)]
#[command(name = "cohyper", version, about = "Intersecting codes over finite fields: verification, construction, bounds, search, and Davenport constants")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Seed for randomized operations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Candidate budget for exhaustive scans.
    #[arg(long, global = true, default_value_t = 1 << 26)]
    budget: u64,
    /// Worker threads for parallel scans (0 = automatic).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a matrix file: intersecting (both routes), minimal, distance.
    Verify {
        file: String,
        /// Which predicate decides the exit code.
        #[arg(long, value_enum, default_value_t = CheckKind::Intersecting)]
        check: CheckKind,
    },
    /// Emit a construction as a matrix file.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Bound report for one (k, q) cell.
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
    },
    /// Determine i(k, q) as tightly as the budget allows, or test one
    /// specific length with --n.
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        /// Run a single exhaustive existence scan at this length.
        #[arg(long)]
        n: Option<usize>,
    },
    /// 2-wise scalar-weighted Davenport constant of GF(p^h)^r.
    Davenport {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        h: u32,
        #[arg(long)]
        r: u32,
        /// Cross-check against the exhaustive sequence oracle
        /// (only feasible for group order <= 16).
        #[arg(long, default_value_t = false)]
        oracle_check: bool,
    },
    /// Graph diagnostics: spectrum, integrity, spectral bound; or the
    /// degree optimization for a square field order.
    Expander {
        /// Edge-list file: one `u v` pair per line, 0-indexed.
        #[arg(long, conflicts_with = "alpha_q")]
        graph: Option<String>,
        /// Optimize the expander degree for this square field order.
        #[arg(long)]
        alpha_q: Option<u64>,
    },
    /// Reproduce a bound table row-for-row with per-cell provenance.
    Tables {
        #[arg(long)]
        which: TableId,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Intersecting,
    Minimal,
    Distance,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableId {
    /// Asymptotic length ratios per field order.
    #[value(name = "1")]
    AsymptoticLength,
    /// Exact values and intervals of i(k, q) for small k, q.
    #[value(name = "2")]
    SmallValues,
    /// Constructive vs probabilistic asymptotic upper bounds.
    #[value(name = "3")]
    Constructive,
    /// Upper bounds on the asymptotic 2-wise weighted Davenport constant.
    #[value(name = "4")]
    DavenportUpper,
    /// Constructive lower-bound lengths in the exceptional cases.
    #[value(name = "5")]
    DavenportLower,
    /// Optimal expander degree and size factor per square field order.
    Expander,
}

enum CliError {
    Verification,
    Budget(String),
    BadFile(String),
    Other(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        match e {
            CoreError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Other(e.to_string()),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if cli.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let code = match run(&cli) {
        Ok(()) => 0,
        Err(CliError::Verification) => 2,
        Err(CliError::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            3
        }
        Err(CliError::BadFile(msg)) => {
            eprintln!("malformed file: {msg}");
            4
        }
        Err(CliError::Other(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let fmt = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Csv => Format::Csv,
        OutputFormat::Table => Format::Table,
    };
    match &cli.command {
        Command::Verify { file, check } => cmd_verify(file, *check, fmt),
        Command::Construct { what } => cmd_construct(what, cli.seed),
        Command::Bounds { k, q } => cmd_bounds(*k, *q, cli.budget, fmt),
        Command::Search { k, q, n } => cmd_search(*k, *q, *n, cli.budget, fmt),
        Command::Davenport { p, h, r, oracle_check } => {
            cmd_davenport(*p, *h, *r, *oracle_check, cli.budget, fmt)
        }
        Command::Expander { graph, alpha_q } => cmd_expander(graph.as_deref(), *alpha_q, fmt),
        Command::Tables { which } => cmd_tables(*which, cli.budget, fmt),
    }
}

fn witness_json(w: &checks::CheckWitness) -> serde_json::Value {
    match w {
        checks::CheckWitness::Codewords(a, b) => serde_json::json!({
            "codewords": [
                a.entries().iter().map(|e| e.0).collect::<Vec<_>>(),
                b.entries().iter().map(|e| e.0).collect::<Vec<_>>(),
            ]
        }),
        checks::CheckWitness::Hyperplanes(a, b) => serde_json::json!({
            "hyperplanes": [
                a.normal().coords().iter().map(|e| e.0).collect::<Vec<_>>(),
                b.normal().coords().iter().map(|e| e.0).collect::<Vec<_>>(),
            ]
        }),
    }
}

fn check_json(r: &checks::CheckReport) -> serde_json::Value {
    serde_json::json!({
        "verdict": r.verdict,
        "method": serde_json::to_value(r.method).unwrap(),
        "work": r.work,
        "witness": r.witness.as_ref().map(witness_json),
    })
}

fn cmd_verify(file: &str, check: CheckKind, fmt: Format) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::BadFile(format!("{file}: {e}")))?;
    let (q, matrix) = parse_matrix_file(&text).map_err(|e| CliError::BadFile(e.0))?;
    let code = LinearCode::new(matrix).map_err(|e| CliError::BadFile(e.to_string()))?;

    let supports = checks::is_intersecting_supports(&code)?;
    let geometric = if code.is_nondegenerate() {
        Some(checks::is_intersecting_geometric(&code)?)
    } else {
        None
    };
    if let Some(g) = &geometric {
        if g.verdict != supports.verdict {
            return Err(CliError::Other(
                "internal: the two intersecting checkers disagree".into(),
            ));
        }
    }
    let minimal = checks::is_minimal_code(&code)?;
    let distance = code.min_distance()?;

    let report = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "file": file,
        "q": q,
        "n": code.n(),
        "k": code.k(),
        "nondegenerate": code.is_nondegenerate(),
        "distance": distance,
        "intersecting": check_json(&supports),
        "intersecting_geometric": geometric.as_ref().map(check_json),
        "minimal": check_json(&minimal),
    });
    let mut t = Table::new(vec!["property", "value"]);
    t.row(vec!["file".into(), file.into()]);
    t.row(vec!["parameters".into(), format!("[{}, {}, {}]_{}", code.n(), code.k(), distance, q)]);
    t.row(vec!["nondegenerate".into(), code.is_nondegenerate().to_string()]);
    t.row(vec!["intersecting".into(), supports.verdict.to_string()]);
    if let Some(g) = &geometric {
        t.row(vec!["intersecting (geometric)".into(), g.verdict.to_string()]);
    }
    t.row(vec!["minimal".into(), minimal.verdict.to_string()]);
    t.emit(fmt, &report);

    let pass = match check {
        CheckKind::Intersecting | CheckKind::All => supports.verdict,
        CheckKind::Minimal => minimal.verdict,
        CheckKind::Distance => distance >= code.k(),
    };
    if pass {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Arc code [2k-1, k, k] from the rational normal curve.
    Rs {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
    },
    /// Sparse tetrahedron [k(k+1)/2, k, k].
    Tetra {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        /// Interior point choice on every edge (index below q-1).
        #[arg(long, default_value_t = 0)]
        edge_choice: usize,
    },
    /// Concatenate an outer matrix file over GF(q^k) with an inner one.
    Concat {
        #[arg(long)]
        inner: String,
        #[arg(long)]
        outer: String,
    },
    /// Emit catalogue entries.
    Catalogue {
        /// Single entry label, e.g. q3k3; all entries when omitted.
        #[arg(long)]
        label: Option<String>,
        /// Write <label>.mat files into this directory instead of stdout.
        #[arg(long)]
        out_dir: Option<String>,
    },
}

fn cmd_construct(what: &ConstructCmd, _seed: u64) -> Result<(), CliError> {
    match what {
        ConstructCmd::Rs { k, q } => {
            let code = rs_arc_code(*k, *q)?;
            print!("{}", render_matrix_file(*q, &code, Some(&format!("arc [{}, {k}]_{q}", code.n()))));
        }
        ConstructCmd::Tetra { k, q, edge_choice } => {
            let code = sparse_tetrahedron(*k, *q, |_, _| *edge_choice)?;
            print!(
                "{}",
                render_matrix_file(*q, &code, Some(&format!("sparse tetrahedron [{}, {k}]_{q}", code.n())))
            );
        }
        ConstructCmd::Concat { inner, outer } => {
            let parse = |path: &str| -> Result<(u64, LinearCode), CliError> {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::BadFile(format!("{path}: {e}")))?;
                let (q, m) = parse_matrix_file(&text).map_err(|e| CliError::BadFile(e.0))?;
                Ok((q, LinearCode::new(m).map_err(|e| CliError::BadFile(e.to_string()))?))
            };
            let (qi, inner) = parse(inner)?;
            let (_, outer) = parse(outer)?;
            let code = concatenate(&inner, &outer)?;
            print!(
                "{}",
                render_matrix_file(
                    qi,
                    &code,
                    Some(&format!("concatenation [{}, {}]_{qi}", code.n(), code.k()))
                )
            );
        }
        ConstructCmd::Catalogue { label, out_dir } => {
            let entries = match label {
                Some(l) => vec![catalogue_entry(l)
                    .ok_or_else(|| CliError::Other(format!("no catalogue entry {l}")))?],
                None => catalogue(),
            };
            for e in entries {
                let code = e.code()?;
                let text = render_matrix_file(
                    e.q,
                    &code,
                    Some(&format!("{} [{}, {}, {}]_{} ({:?})", e.label, e.n, e.k, e.d, e.q, e.claim)),
                );
                match out_dir {
                    Some(dir) => {
                        std::fs::create_dir_all(dir)
                            .map_err(|err| CliError::Other(err.to_string()))?;
                        let path = format!("{dir}/{}.mat", e.label);
                        std::fs::write(&path, text)
                            .map_err(|err| CliError::Other(err.to_string()))?;
                        eprintln!("wrote {path}");
                    }
                    None => print!("{text}"),
                }
            }
        }
    }
    Ok(())
}

/// Witness lengths the search machinery can certify for the bound report.
fn witness_lengths(k: usize, q: u64) -> Vec<(u64, String)> {
    let (n, src) = cohyper::search::constructive_upper(k, q);
    vec![(n as u64, src)]
}

fn cmd_bounds(k: usize, q: u64, _budget: u64, fmt: Format) -> Result<(), CliError> {
    let report = bounds::bound_report(k, q, &witness_lengths(k, q))?;
    let json = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "report": serde_json::to_value(&report).unwrap(),
    });
    let mut t = Table::new(vec!["bound", "value"]);
    for term in &report.lower_terms {
        t.row(vec![format!("lower:{}", term.name), term.value.to_string()]);
    }
    for term in &report.upper_terms {
        t.row(vec![format!("upper:{}", term.name), term.value.to_string()]);
    }
    t.row(vec!["lower".into(), report.lower.to_string()]);
    t.row(vec!["upper".into(), report.upper.to_string()]);
    t.row(vec!["plotkin-ratio".into(), format!("{:.4}", report.plotkin_ratio)]);
    if let Some(m) = report.mrrw_ratio {
        t.row(vec!["lp-ratio".into(), format!("{m:.4}")]);
    }
    t.row(vec!["probabilistic-ratio".into(), format!("{:.4}", report.prob_ratio)]);
    if let Some(a) = report.ag_ratio {
        t.row(vec!["constructive-ratio".into(), format!("{a:.4}")]);
    }
    t.emit(fmt, &json);
    Ok(())
}

fn cmd_search(k: usize, q: u64, n: Option<usize>, budget: u64, fmt: Format) -> Result<(), CliError> {
    match n {
        Some(n) => {
            let (exists, cert) = exhaustive_exists(n, k, q, budget)?;
            let json = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "exists": exists,
                "certificate": serde_json::to_value(&cert).unwrap(),
            });
            let mut t = Table::new(vec!["field", "value"]);
            t.row(vec!["question".into(), format!("intersecting [{n}, {k}]_{q} exists?")]);
            t.row(vec!["answer".into(), exists.to_string()]);
            t.row(vec!["search-space".into(), cert.search_space.to_string()]);
            t.row(vec!["nodes-visited".into(), cert.nodes_visited.to_string()]);
            t.row(vec!["wall-ms".into(), cert.wall_ms.to_string()]);
            t.emit(fmt, &json);
        }
        None => {
            let entry = determine_cell(k, q, budget)?;
            let json = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "entry": serde_json::to_value(&entry).unwrap(),
            });
            let mut t = Table::new(vec!["field", "value"]);
            let value = match entry.exact() {
                Some(v) => v.to_string(),
                None => format!("[{}, {}]", entry.lo, entry.hi),
            };
            t.row(vec![format!("i({k}, {q})"), value]);
            for p in &entry.provenance {
                t.row(vec!["provenance".into(), p.clone()]);
            }
            t.emit(fmt, &json);
        }
    }
    Ok(())
}

fn cmd_davenport(
    p: u64,
    h: u32,
    r: u32,
    oracle_check: bool,
    budget: u64,
    fmt: Format,
) -> Result<(), CliError> {
    let spec = GroupSpec::new(p, h, r)?;
    let q = spec.q();
    let table = build_itable(r as usize + 2, &[q], budget)?;
    let mut result = d2_weighted(&spec, &table)?;
    if oracle_check {
        let upper = match result.value {
            ValueOrInterval::Exact(v) => v,
            ValueOrInterval::Interval(_, hi) => hi,
        };
        let (value, _) = d2_exhaustive(&spec, upper + 1)?;
        if result.value != ValueOrInterval::Exact(value) {
            return Err(CliError::Other(format!(
                "reduction ({:?}) and sequence oracle ({value}) disagree",
                result.value
            )));
        }
        result.oracle_checked = true;
    }
    let json = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "result": serde_json::to_value(&result).unwrap(),
    });
    let mut t = Table::new(vec!["field", "value"]);
    t.row(vec!["group".into(), format!("GF({q})^{r} (order {})", spec.order())]);
    let value = match result.value {
        ValueOrInterval::Exact(v) => v.to_string(),
        ValueOrInterval::Interval(lo, hi) => format!("[{lo}, {hi}]"),
    };
    t.row(vec!["D2".into(), value]);
    t.row(vec!["oracle-checked".into(), result.oracle_checked.to_string()]);
    for (k, lo, hi, prov) in &result.consumed {
        t.row(vec![format!("i({k}, {q})"), format!("[{lo}, {hi}] via {prov}")]);
    }
    t.emit(fmt, &json);
    Ok(())
}

fn cmd_expander(graph: Option<&str>, alpha_q: Option<u64>, fmt: Format) -> Result<(), CliError> {
    if let Some(q) = alpha_q {
        let opt = alpha_optimizer(q)?;
        let json = serde_json::json!({
            "schema": SCHEMA_VERSION,
            "optimum": serde_json::to_value(opt).unwrap(),
        });
        let mut t = Table::new(vec!["field", "value"]);
        t.row(vec!["q".into(), opt.q.to_string()]);
        t.row(vec!["t".into(), opt.t.to_string()]);
        t.row(vec!["alpha".into(), format!("{:.4}", opt.alpha)]);
        t.emit(fmt, &json);
        return Ok(());
    }
    let Some(path) = graph else {
        return Err(CliError::Other("expander needs --graph FILE or --alpha-q Q".into()));
    };
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::BadFile(format!("{path}: {e}")))?;
    let g = Graph::parse_edge_list(&text, None).map_err(|e| CliError::BadFile(e.to_string()))?;
    let s = spectrum(&g)?;
    let regular = g.regularity();
    let spectral_bound = regular.map(|_| spectral_integrity_lower_bound(&g)).transpose()?;
    let exact = if g.n() <= cohyper::graph::INTEGRITY_BUDGET {
        Some(integrity(&g)?)
    } else {
        None
    };
    let json = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "file": path,
        "n": g.n(),
        "edges": g.edge_count(),
        "regular": regular,
        "eigenvalues": s.eigenvalues,
        "lambda": s.lambda,
        "ramanujan": regular.map(|t| s.is_ramanujan(t)),
        "integrity": exact.as_ref().map(|(v, set)| serde_json::json!({"value": v, "set": set})),
        "spectral_lower_bound": spectral_bound,
    });
    let mut t = Table::new(vec!["field", "value"]);
    t.row(vec!["vertices".into(), g.n().to_string()]);
    t.row(vec!["edges".into(), g.edge_count().to_string()]);
    t.row(vec![
        "regular".into(),
        regular.map_or("no".into(), |d| format!("yes, degree {d}")),
    ]);
    t.row(vec!["lambda1".into(), format!("{:.6}", s.eigenvalues[0])]);
    t.row(vec!["lambda".into(), format!("{:.6}", s.lambda)]);
    if let Some(tdeg) = regular {
        t.row(vec!["ramanujan".into(), s.is_ramanujan(tdeg).to_string()]);
    }
    if let Some((v, set)) = &exact {
        t.row(vec!["integrity".into(), v.to_string()]);
        t.row(vec!["integrity-set".into(), format!("{set:?}")]);
    }
    if let Some(b) = spectral_bound {
        t.row(vec!["spectral-lower-bound".into(), format!("{b:.4}")]);
    }
    t.emit(fmt, &json);
    Ok(())
}

fn table2_cell(table: &ITable, k: usize, q: u64) -> (String, String) {
    match table.get(k, q) {
        Some(e) => match e.exact() {
            Some(v) => (v.to_string(), e.provenance.join(";")),
            None => (format!("[{},{}]", e.lo, e.hi), e.provenance.join(";")),
        },
        None => ("-".into(), String::new()),
    }
}

fn cmd_tables(which: TableId, budget: u64, fmt: Format) -> Result<(), CliError> {
    match which {
        TableId::AsymptoticLength => {
            let rows = bounds::asymptotic_length_table();
            let json = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "table": "asymptotic-length",
                "rows": rows.iter().map(|(q, r)| serde_json::json!({
                    "q": q, "ratio": r, "provenance": "lp-crossing",
                })).collect::<Vec<_>>(),
            });
            let mut t = Table::new(vec!["q", "liminf i(k,q)/k", "provenance"]);
            for (q, r) in rows {
                t.row(vec![q.to_string(), format!("{r:.4}"), "lp-crossing".into()]);
            }
            t.emit(fmt, &json);
        }
        TableId::SmallValues => {
            let qs = [2u64, 3, 4, 5, 7, 8, 9];
            let kmax = 9usize;
            let table = build_itable(kmax, &qs, budget)?;
            let json = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "table": "small-values",
                "entries": table.entries().map(|e| serde_json::to_value(e).unwrap()).collect::<Vec<_>>(),
            });
            let mut header = vec!["q \\ k".to_string()];
            header.extend((2..=kmax).map(|k| k.to_string()));
            let mut t = Table::new(header.iter().map(|s| s.as_str()).collect());
            for q in qs {
                let mut row = vec![q.to_string()];
                for k in 2..=kmax {
                    row.push(table2_cell(&table, k, q).0);
                }
                t.row(row);
            }
            t.emit(fmt, &json);
        }
        TableId::Constructive => {
            let mut rows = Vec::new();
            for &(q, n_in, k_in) in bounds::AG_EXCEPTIONAL_INNER {
                let ag = bounds::ag_ratio(q)?;
                rows.push(serde_json::json!({
                    "q": q,
                    "inner": [n_in, k_in],
                    "constructive": ag.ratio,
                    "recipe": ag.recipe,
                    "probabilistic": bounds::prob_ratio(q),
                }));
            }
            let json = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "table": "constructive-asymptotic",
                "rows": rows,
            });
            let mut t = Table::new(vec!["q", "inner code", "constructive", "probabilistic"]);
            for &(q, n_in, k_in) in bounds::AG_EXCEPTIONAL_INNER {
                let ag = bounds::ag_ratio(q)?;
                t.row(vec![
                    q.to_string(),
                    format!("[{n_in}, {k_in}]"),
                    format!("{:.4}", ag.ratio),
                    format!("{:.4}", bounds::prob_ratio(q)),
                ]);
            }
            t.emit(fmt, &json);
        }
        TableId::DavenportUpper => {
            let specs: [(u64, u32); 11] = [
                (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1), (11, 1),
                (13, 1), (17, 1),
            ];
            let rows = asymptotic_tables(&specs)?;
            let json = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "table": "davenport-upper",
                "rows": rows.iter().map(|r| serde_json::to_value(r).unwrap()).collect::<Vec<_>>(),
            });
            let mut t = Table::new(vec!["p", "h", "limsup D2/r"]);
            for r in rows {
                t.row(vec![r.p.to_string(), r.h.to_string(), format!("{:.4}", r.upper)]);
            }
            t.emit(fmt, &json);
        }
        TableId::DavenportLower => {
            let specs: [(u64, u32); 9] =
                [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (3, 3)];
            let rows = asymptotic_tables(&specs)?;
            let json = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "table": "davenport-lower",
                "rows": rows.iter().map(|r| serde_json::to_value(r).unwrap()).collect::<Vec<_>>(),
            });
            let mut t = Table::new(vec!["p", "h", "l (constructive)", "l (probabilistic)"]);
            for r in rows {
                t.row(vec![
                    r.p.to_string(),
                    r.h.to_string(),
                    r.lower_constructive.map_or("-".into(), |v| format!("{v:.4}")),
                    format!("{:.4}", r.lower_probabilistic),
                ]);
            }
            t.emit(fmt, &json);
        }
        TableId::Expander => {
            let rows = alpha_table()?;
            let json = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "table": "expander-alpha",
                "rows": rows.iter().map(|r| serde_json::to_value(r).unwrap()).collect::<Vec<_>>(),
            });
            let mut t = Table::new(vec!["q", "t", "alpha"]);
            for r in rows {
                t.row(vec![r.q.to_string(), r.t.to_string(), format!("{:.4}", r.alpha)]);
            }
            t.emit(fmt, &json);
        }
    }
    Ok(())
}
