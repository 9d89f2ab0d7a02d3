//! `oramsey` — oriented Ramsey numbers from the command line.
//!
//! Exit codes: 0 success / property verified; 1 a checked property fails
//! (a certificate was found); 2 usage or parse errors; 3 a resource guard
//! aborted the run (partial results are still printed). Progress goes to
//! standard error, data to standard output.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use oramsey::bounds::BoundTable;
use oramsey::cayley::CayleyGroup;
use oramsey::circulant::{build_circulant, witness, CirculantSpec, WitnessName};
use oramsey::detect::{independence_number, is_free};
use oramsey::io::{read_arc_list_file, write_arc_list};
use oramsey::lemma::{check_l3_degree_bound, check_neighborhood_lemma};
use oramsey::search::{
    cayley_scan, extremal_search_with, verify_ramsey_value, SearchConfig, SearchError, SearchMode,
};

#[derive(Parser)]
#[command(
    name = "oramsey",
    version,
    about = "Oriented Ramsey numbers r(I_m, L_n): verify witnesses, check graphs, evaluate bounds, run exhaustive searches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write data output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for the search (default: available parallelism;
    /// 1 forces the sequential path).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a named witness graph (w8, w14, w22) or `all`.
    Verify {
        /// Witness name: w8, w14, w22, or all.
        witness: String,
    },
    /// Check a graph file for (I_m, L_n)-freeness.
    Check {
        /// Path to an arc-list file (`n <order>` header, `<u> <v>` lines).
        file: PathBuf,
        /// Independent-set size to exclude.
        #[arg(long)]
        m: usize,
        /// Transitive-tournament size to exclude.
        #[arg(long)]
        n: usize,
    },
    /// Build a circulant graph and print its arc list.
    Construct {
        /// Named witness to build.
        #[arg(long, conflicts_with = "spec")]
        witness: Option<String>,
        /// Circulant spec, e.g. `k=14; all=+1,-2; even=+4; odd=-6`.
        #[arg(long)]
        spec: Option<String>,
    },
    /// Print the best-known bound table for 2 <= m <= m-max, 2 <= n <= n-max.
    Bounds {
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Exhaustive isomorph-reduced search for (I_m, L_n)-free graphs.
    Search {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Largest order to search (at most 10).
        #[arg(long)]
        max_order: usize,
        /// count-classes (exhaustive), find-any, or prove-empty.
        #[arg(long, default_value = "count-classes")]
        mode: String,
        /// Disable the degree-cap pruning (sound only for n = 3 anyway).
        #[arg(long)]
        no_degree_cap: bool,
        /// Memory guard: abort a level exceeding this many classes.
        #[arg(long)]
        class_cap: Option<usize>,
    },
    /// Scan all Cayley digraphs of a small group for freeness.
    Cayley {
        /// Group family: cyclic or dihedral.
        #[arg(long)]
        group: String,
        /// Group order (at most 24; even for dihedral).
        #[arg(long)]
        order: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Verify a claimed exact Ramsey value (witness side computed, upper
    /// side from the bound formulas).
    VerifyValue {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        claimed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { ref witness } => cmd_verify(&cli, witness),
        Command::Check { ref file, m, n } => cmd_check(&cli, file, m, n),
        Command::Construct {
            ref witness,
            ref spec,
        } => cmd_construct(&cli, witness.as_deref(), spec.as_deref()),
        Command::Bounds { m_max, n_max } => cmd_bounds(&cli, m_max, n_max),
        Command::Search {
            m,
            n,
            max_order,
            ref mode,
            no_degree_cap,
            class_cap,
        } => cmd_search(&cli, m, n, max_order, mode, no_degree_cap, class_cap),
        Command::Cayley {
            ref group,
            order,
            m,
            n,
        } => cmd_cayley(&cli, group, order, m, n),
        Command::VerifyValue { m, n, claimed } => cmd_verify_value(&cli, m, n, claimed),
    }
}

fn emit(cli: &Cli, content: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => fs::write(path, content).map_err(|e| format!("writing {path:?}: {e}")),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| format!("writing stdout: {e}"))
        }
    }
}

fn reject_csv(cli: &Cli, command: &str) -> Result<(), String> {
    if cli.format == Format::Csv {
        return Err(format!("csv output is not available for `{command}`"));
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, which: &str) -> Result<ExitCode, String> {
    reject_csv(cli, "verify")?;
    let names: Vec<WitnessName> = if which.eq_ignore_ascii_case("all") {
        WitnessName::ALL.to_vec()
    } else {
        vec![WitnessName::parse(which)
            .ok_or_else(|| format!("unknown witness `{which}` (expected w8, w14, w22, or all)"))?]
    };

    let mut all_pass = true;
    let mut sections = Vec::new();
    let mut rows = Vec::new();
    for name in names {
        let g = witness(name);
        let (m, n) = name.claims();
        let free = is_free(&g, m, n).is_free();
        let alpha = independence_number(&g);
        let neighborhood = check_neighborhood_lemma(&g, m, n).passed();
        let degrees = check_l3_degree_bound(&g, m).passed();
        let out_degrees: Vec<usize> = (0..g.order()).map(|v| g.out_degree(v)).collect();
        let in_degrees: Vec<usize> = (0..g.order()).map(|v| g.in_degree(v)).collect();
        let passed = free && neighborhood && degrees && alpha == m - 1;
        all_pass &= passed;

        sections.push(format!(
            "== {name}: {} ==\n\
             order: {}\n\
             arcs: {}\n\
             out-degrees: {}\n\
             in-degrees: {}\n\
             independence number: {alpha}\n\
             ({m}, {n})-free: {}\n\
             neighborhood decomposition: {}\n\
             degree caps d+/d- <= {}: {}\n\
             verdict: {}\n",
            name.spec(),
            g.order(),
            g.arc_count(),
            summarize(&out_degrees),
            summarize(&in_degrees),
            yes_no(free),
            pass_fail(neighborhood),
            m - 1,
            pass_fail(degrees),
            if passed { "PASS" } else { "FAIL" },
        ));
        rows.push(json!({
            "name": name.to_string(),
            "spec": name.spec().to_string(),
            "order": g.order(),
            "arc_count": g.arc_count(),
            "out_degrees": out_degrees,
            "in_degrees": in_degrees,
            "independence_number": alpha,
            "m": m,
            "n": n,
            "free": free,
            "neighborhood_lemma": neighborhood,
            "degree_bound": degrees,
            "passed": passed,
        }));
    }

    match cli.format {
        Format::Text => emit(cli, &sections.join("\n"))?,
        Format::Json => emit(cli, &pretty(&serde_json::Value::Array(rows))?)?,
        Format::Csv => unreachable!(),
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn summarize(degrees: &[usize]) -> String {
    let first = degrees[0];
    if degrees.iter().all(|&d| d == first) {
        format!("{} x {first}", degrees.len())
    } else {
        format!("{degrees:?}")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn pretty(value: &serde_json::Value) -> Result<String, String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| e.to_string())
}

fn cmd_check(cli: &Cli, file: &PathBuf, m: usize, n: usize) -> Result<ExitCode, String> {
    reject_csv(cli, "check")?;
    let g = match read_arc_list_file(file) {
        Ok(g) => g,
        Err(e) => return Err(format!("{}: {e}", file.display())),
    };
    let verdict = is_free(&g, m, n);
    match cli.format {
        Format::Text => match verdict.certificate() {
            None => emit(cli, "free\n")?,
            Some(c) => emit(
                cli,
                &format!(
                    "not free: {} {:?}\n",
                    match c.kind {
                        oramsey::detect::CertificateKind::IndependentSet => "independent set",
                        oramsey::detect::CertificateKind::TransitiveTournament =>
                            "transitive tournament",
                    },
                    c.vertices
                ),
            )?,
        },
        Format::Json => {
            let value = serde_json::to_value(&verdict).map_err(|e| e.to_string())?;
            emit(cli, &pretty(&value)?)?;
        }
        Format::Csv => unreachable!(),
    }
    Ok(if verdict.is_free() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_construct(
    cli: &Cli,
    witness_name: Option<&str>,
    spec_text: Option<&str>,
) -> Result<ExitCode, String> {
    if cli.format != Format::Text {
        return Err("construct emits the arc-list interchange format; use --format text".into());
    }
    let graph = match (witness_name, spec_text) {
        (Some(name), None) => {
            let name = WitnessName::parse(name)
                .ok_or_else(|| format!("unknown witness `{name}` (expected w8, w14, w22)"))?;
            witness(name)
        }
        (None, Some(text)) => {
            let spec = CirculantSpec::parse(text).map_err(|e| e.to_string())?;
            build_circulant(&spec).map_err(|e| e.to_string())?
        }
        _ => return Err("pass exactly one of --witness or --spec".into()),
    };
    emit(cli, &write_arc_list(&graph))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(cli: &Cli, m_max: usize, n_max: usize) -> Result<ExitCode, String> {
    let table = BoundTable::new(m_max, n_max).map_err(|e| e.to_string())?;
    let content = match cli.format {
        Format::Csv => table.to_csv(),
        Format::Json => pretty(&table.to_json())?,
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "{:>3} {:>3} {:>8} {:>8} {:>6}  {:<30} {}\n",
                "m", "n", "lower", "upper", "exact", "lower source", "upper source"
            ));
            for e in table.entries() {
                s.push_str(&format!(
                    "{:>3} {:>3} {:>8} {:>8} {:>6}  {:<30} {}\n",
                    e.m,
                    e.n,
                    e.lower,
                    e.upper,
                    e.exact,
                    e.lower_src(),
                    e.upper_src()
                ));
            }
            s
        }
    };
    emit(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(
    cli: &Cli,
    m: usize,
    n: usize,
    max_order: usize,
    mode: &str,
    no_degree_cap: bool,
    class_cap: Option<usize>,
) -> Result<ExitCode, String> {
    reject_csv(cli, "search")?;
    let mode = SearchMode::parse(mode)
        .ok_or_else(|| format!("unknown mode `{mode}` (count-classes, find-any, prove-empty)"))?;
    let mut cfg = SearchConfig::new(m, n, max_order);
    cfg.mode = mode;
    cfg.degree_cap_enabled = !no_degree_cap;
    cfg.worker_count = cli.threads.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    });
    if let Some(cap) = class_cap {
        cfg.class_cap = cap;
    }

    let result = extremal_search_with(&cfg, |level| {
        eprintln!("order {}: {} classes", level.order, level.classes);
    });
    match result {
        Ok(report) => {
            emit_search_report(cli, &report)?;
            Ok(ExitCode::SUCCESS)
        }
        Err(SearchError::ClassCapExceeded {
            cap,
            order,
            partial,
        }) => {
            eprintln!("class cap {cap} exceeded at order {order}; reporting completed levels");
            emit_search_report(cli, &partial)?;
            Ok(ExitCode::from(3))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn emit_search_report(cli: &Cli, report: &oramsey::search::SearchReport) -> Result<(), String> {
    match cli.format {
        Format::Json => {
            let value = serde_json::to_value(report).map_err(|e| e.to_string())?;
            emit(cli, &pretty(&value)?)
        }
        Format::Text => {
            let mut s = format!("(I_{}, L_{})-free search\n", report.m, report.n);
            for level in &report.per_order {
                s.push_str(&format!(
                    "  order {:>2}: {} classes\n",
                    level.order, level.classes
                ));
            }
            s.push_str(&format!("extremal order: {}\n", report.extremal_order));
            let complete = report
                .per_order
                .last()
                .map(|l| l.classes == 0)
                .unwrap_or(false);
            if complete {
                s.push_str(&format!(
                    "search complete: r(I_{}, L_{}) = {}\n",
                    report.m,
                    report.n,
                    report.extremal_order + 1
                ));
            }
            s.push_str(&format!(
                "stats: {} nodes, pruned {} independence / {} tournament / {} degree-cap / {} canonical\n",
                report.stats.nodes_expanded,
                report.stats.pruned_independence,
                report.stats.pruned_tournament,
                report.stats.pruned_degree_cap,
                report.stats.pruned_canonical
            ));
            for rep in &report.representatives {
                s.push_str("representative:\n");
                for line in rep.lines() {
                    s.push_str(&format!("  {line}\n"));
                }
            }
            emit(cli, &s)
        }
        Format::Csv => unreachable!(),
    }
}

fn cmd_cayley(
    cli: &Cli,
    group: &str,
    order: usize,
    m: usize,
    n: usize,
) -> Result<ExitCode, String> {
    reject_csv(cli, "cayley")?;
    let group = CayleyGroup::parse(group)
        .ok_or_else(|| format!("unknown group `{group}` (cyclic or dihedral)"))?;
    let report = cayley_scan(group, order, m, n).map_err(|e| e.to_string())?;
    match cli.format {
        Format::Json => {
            let value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
            emit(cli, &pretty(&value)?)?;
        }
        Format::Text => {
            let mut s = format!(
                "{} group of order {}: {} graphs scanned, {} ({}, {})-free\n",
                report.group, report.order, report.scanned, report.free_count, m, n
            );
            for set in &report.free_connection_sets {
                s.push_str(&format!("  free: {set}\n"));
            }
            emit(cli, &s)?;
        }
        Format::Csv => unreachable!(),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_value(cli: &Cli, m: usize, n: usize, claimed: u64) -> Result<ExitCode, String> {
    reject_csv(cli, "verify-value")?;
    let verdict = verify_ramsey_value(m, n, claimed).map_err(|e| e.to_string())?;
    match cli.format {
        Format::Json => {
            let value = serde_json::to_value(&verdict).map_err(|e| e.to_string())?;
            emit(cli, &pretty(&value)?)?;
        }
        Format::Text => {
            emit(
                cli,
                &format!(
                    "r(I_{m}, L_{n}) = {claimed}: {}\n  lower side: {:?}\n  upper side: {} via {}\n",
                    if verdict.exact { "EXACT" } else { "NOT CONFIRMED" },
                    verdict.lower_evidence,
                    verdict.upper,
                    verdict.upper_src
                ),
            )?;
        }
        Format::Csv => unreachable!(),
    }
    Ok(if verdict.exact {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
