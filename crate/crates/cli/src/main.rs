mod spec;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use randic_core::catalog::{build_catalog_with, PRINTED_VALUE_TOL};
use randic_core::census::enumerate_cubic_with_charpolys;
use randic_core::families::density_probe;
use randic_core::spectral::round_sig;
use randic_core::verify::{verify_census, verify_classes, verify_windmill};
use randic_core::{
    charpoly_adjacency, closed_form_re, equivalence_classes, graph6_encode, permanent_of_graph,
    randic_charpoly_cycle, randic_charpoly_regular, randic_charpoly_windmill, verify_closed_forms,
    verify_tables, Catalog, EnergyKey, EnergyReport, Error, FamilySpec, PaperTables, RatPolynomial,
    Report,
};

use crate::spec::{catalog_graph, GraphSpec};

#[derive(Debug, Parser)]
#[command(name = "randic", version, about = "Graph energy, Randić energy and exact spectral identities")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// cycle:M | windmill:M,N | kmn-e:M,N | petersen | catalog:G_i | g6:STRING | file:PATH
    #[arg(long, value_parser = parse_graph)]
    graph: GraphSpec,
}

fn parse_graph(s: &str) -> Result<GraphSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact characteristic polynomial det(λI − A).
    Charpoly(GraphArg),
    /// Exact Randić characteristic polynomial (cycles, windmills, regular graphs).
    RandicCharpoly(GraphArg),
    /// Energy and Randić energy.
    Energy {
        #[command(flatten)]
        graph: GraphArg,
        /// Always diagonalise the Randić matrix, even for regular graphs.
        #[arg(long)]
        no_shortcut: bool,
    },
    /// Permanent of the adjacency matrix (Ryser).
    Perm {
        #[arg(long, value_parser = parse_graph, conflicts_with = "catalog", required_unless_present = "catalog")]
        graph: Option<GraphSpec>,
        /// Catalog entry name, e.g. G_7.
        #[arg(long)]
        catalog: Option<String>,
    },
    /// Cubic graphs of order N, one per characteristic polynomial.
    Census {
        #[arg(long)]
        n: usize,
        /// Write the named order-10 catalog as graph6 lines to this path.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Energy equivalence classes of the order-10 cubic catalog.
    Classes {
        #[arg(long, default_value = "energy", value_parser = parse_key)]
        key: EnergyKey,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Closed-form Randić energies and the density probe.
    Families {
        /// Search the families for Randić energies in [LO, HI].
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        probe: Option<Vec<f64>>,
        /// Closed form for one family member, e.g. windmill4:3 or kmn-e:3,4.
        #[arg(long, value_parser = parse_family)]
        spec: Option<FamilySpec>,
        /// Print at most this many probe witnesses.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Reproduce the reference tables and identities.
    Verify(VerifyArgs),
}

fn parse_key(s: &str) -> Result<EnergyKey, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilySpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    tables: bool,
    #[arg(long)]
    closed_forms: bool,
    #[arg(long)]
    census: bool,
    #[arg(long)]
    classes: bool,
    #[arg(long)]
    windmill: bool,
    #[arg(long)]
    all: bool,
    /// Tolerance override for every selected check.
    #[arg(long)]
    tol: Option<f64>,
    /// Reference tables JSON (defaults to the embedded copy).
    #[arg(long)]
    tables_file: Option<PathBuf>,
}

enum Outcome {
    Ok(String),
    VerificationFailed(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::VerificationFailed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidParameter(_) | Error::Parse(_) | Error::Io(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn json_text(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json values serialize"))
}

fn run(cli: &Cli) -> randic_core::Result<Outcome> {
    let json = cli.json;
    let out = match &cli.command {
        Command::Charpoly(g) => {
            let graph = g.graph.build()?;
            let p = charpoly_adjacency(&graph)?;
            if json {
                json_text(&json!({ "graph": g.graph.label(), "coefficients": p.to_strings() }))
            } else {
                format!("{}\n", p)
            }
        }
        Command::RandicCharpoly(g) => {
            let p = randic_charpoly(&g.graph)?;
            if json {
                json_text(&json!({ "graph": g.graph.label(), "coefficients": p.to_strings() }))
            } else {
                format!("{}\n", p)
            }
        }
        Command::Energy { graph, no_shortcut } => {
            let g = graph.graph.build()?;
            let report = EnergyReport::compute(graph.graph.label(), &g, !no_shortcut)?;
            if json {
                json_text(&report.to_json())
            } else {
                format!(
                    "E  {:.12}\nRE {:.12}\nmethod {}\n",
                    report.energy,
                    report.randic_energy,
                    serde_json::to_value(report.method).expect("enum serializes").as_str().unwrap_or("")
                )
            }
        }
        Command::Perm { graph, catalog } => {
            let (label, g) = match (graph, catalog) {
                (Some(spec), _) => (spec.label(), spec.build()?),
                (None, Some(name)) => (name.clone(), catalog_graph(name)?),
                (None, None) => unreachable!("clap requires one of --graph/--catalog"),
            };
            let per = permanent_of_graph(&g)?;
            if json {
                json_text(&json!({ "graph": label, "permanent": per.to_string() }))
            } else {
                format!("{per}\n")
            }
        }
        Command::Census { n, write } => census(*n, write.as_ref(), json)?,
        Command::Classes { key, tol } => {
            let catalog = Catalog::embedded()?;
            let classes = equivalence_classes(&catalog.entries, *key, *tol)?;
            if json {
                json_text(&serde_json::to_value(&classes).expect("classes serialize"))
            } else {
                classes.to_string()
            }
        }
        Command::Families { probe, spec, limit } => families(probe.as_deref(), spec.as_ref(), *limit, json)?,
        Command::Verify(args) => return verify(args, json),
    };
    Ok(Outcome::Ok(out))
}

fn randic_charpoly(spec: &GraphSpec) -> randic_core::Result<RatPolynomial> {
    match spec {
        GraphSpec::Cycle(m) => randic_charpoly_cycle(*m),
        GraphSpec::Windmill { m, n } => randic_charpoly_windmill(*m, *n),
        other => {
            let g = other.build()?;
            match g.regularity() {
                Some(k) if k >= 1 => randic_charpoly_regular(&g, k),
                _ => Err(Error::InvalidParameter(
                    "exact Randić polynomials are available for cycles, windmills and regular graphs".into(),
                )),
            }
        }
    }
}

fn census(n: usize, write: Option<&PathBuf>, json: bool) -> randic_core::Result<String> {
    if let Some(path) = write {
        if n != 10 {
            return Err(Error::InvalidParameter("--write stores the named order-10 catalog; use --n 10".into()));
        }
        let catalog = build_catalog_with(&PaperTables::embedded())?;
        std::fs::write(path, catalog.to_g6())?;
    }
    let reps = enumerate_cubic_with_charpolys(n)?;
    let rows: Vec<(String, bool, String)> = reps
        .iter()
        .map(|r| Ok((graph6_encode(&r.graph)?, r.graph.is_connected(), r.charpoly.to_string())))
        .collect::<randic_core::Result<_>>()?;
    let disconnected = rows.iter().filter(|r| !r.1).count();
    Ok(if json {
        json_text(&json!({
            "n": n,
            "count": rows.len(),
            "disconnected": disconnected,
            "graphs": rows.iter().map(|(g6, c, p)| json!({"graph6": g6, "connected": c, "charpoly": p})).collect::<Vec<_>>(),
        }))
    } else {
        let mut s = String::new();
        for (g6, connected, p) in &rows {
            let tag = if *connected { "connected" } else { "disconnected" };
            writeln!(s, "{g6}\t{tag}\t{p}").expect("write to string");
        }
        writeln!(s, "{} graphs, {} disconnected", rows.len(), disconnected).expect("write to string");
        s
    })
}

fn families(
    probe: Option<&[f64]>,
    spec: Option<&FamilySpec>,
    limit: Option<usize>,
    json: bool,
) -> randic_core::Result<String> {
    let mut s = String::new();
    let mut doc = serde_json::Map::new();
    if let Some(spec) = spec {
        let exact = closed_form_re(spec)?;
        if json {
            doc.insert(
                "closed_form".into(),
                json!({"family": spec.tag(), "params": spec.params(), "re_exact": exact.to_string(), "re_float": round_sig(exact.to_f64())}),
            );
        } else {
            writeln!(s, "{spec}\tRE = {exact} = {:.12}", exact.to_f64()).expect("write to string");
        }
    }
    if let Some(&[lo, hi]) = probe {
        let mut witnesses = density_probe(lo, hi)?;
        let total = witnesses.len();
        if let Some(l) = limit {
            witnesses.truncate(l);
        }
        if json {
            doc.insert(
                "witnesses".into(),
                Value::Array(
                    witnesses
                        .iter()
                        .map(|w| {
                            json!({"family": w.spec.tag(), "params": w.spec.params(), "re_exact": w.re_exact.to_string(), "re_float": round_sig(w.re_float)})
                        })
                        .collect(),
                ),
            );
            doc.insert("total".into(), json!(total));
        } else {
            for w in &witnesses {
                writeln!(s, "{}\t{}\t{:.12}", w.spec, w.re_exact, w.re_float).expect("write to string");
            }
            writeln!(s, "{total} witnesses in [{lo}, {hi}]").expect("write to string");
        }
    }
    if spec.is_none() && probe.is_none() {
        return Err(Error::InvalidParameter("families needs --probe LO HI and/or --spec FAMILY".into()));
    }
    Ok(if json { json_text(&Value::Object(doc)) } else { s })
}

fn verify(args: &VerifyArgs, json: bool) -> randic_core::Result<Outcome> {
    let any = args.tables || args.closed_forms || args.census || args.classes || args.windmill;
    if !any && !args.all {
        return Err(Error::InvalidParameter(
            "choose at least one of --tables --closed-forms --census --classes --windmill --all".into(),
        ));
    }
    let pick = |flag: bool| flag || args.all;
    let tables = match &args.tables_file {
        Some(path) => PaperTables::parse(&std::fs::read_to_string(path)?)?,
        None => PaperTables::embedded(),
    };
    let mut report = Report::new();
    if pick(args.census) {
        report.extend(verify_census()?);
    }
    let needs_catalog = pick(args.tables) || pick(args.classes);
    let catalog = if needs_catalog { Some(build_catalog_with(&tables)?) } else { None };
    if pick(args.tables) {
        let catalog = catalog.as_ref().expect("built above");
        report.extend(verify_tables(catalog, &tables, args.tol.unwrap_or(PRINTED_VALUE_TOL))?);
    }
    if pick(args.classes) {
        let catalog = catalog.as_ref().expect("built above");
        report.extend(verify_classes(catalog, args.tol.unwrap_or(1e-6))?);
    }
    if pick(args.closed_forms) {
        report.extend(verify_closed_forms(8, args.tol.unwrap_or(1e-8))?);
    }
    if pick(args.windmill) {
        report.extend(verify_windmill(&[3, 4, 5, 6], &[1, 2, 3], args.tol.unwrap_or(1e-8))?);
    }
    let text = if json {
        json_text(&json!({ "passed": report.passed(), "checks": report.checks }))
    } else {
        format!("{report}\n")
    };
    Ok(if report.passed() { Outcome::Ok(text) } else { Outcome::VerificationFailed(text) })
}
