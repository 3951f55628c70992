//! `amoeba`: classify graphs as local/global amoebas, inspect their
//! replacement groups, and cross-check the decisions by brute force.
//!
//! Exit codes: 0 success, 1 other failure, 2 unparseable input, 3 a size
//! cap or budget was exceeded, 4 classifier/oracle mismatch or internal
//! inconsistency.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use amoeba::input::{self, InputError, Named};
use amoeba::report::{BoundsJson, GroupJson, OracleJson, ReplacementJson, ReportJson, SweepLine};
use amoeba::{edgelist, expr, graph6};
use amoeba_core::canon::{self, is_isomorphic};
use amoeba_core::classifier::{self, Limits};
use amoeba_core::constructions::{fib_tree, h_graph};
use amoeba_core::oracle::{self, DEFAULT_BUDGET};
use amoeba_core::replacement::feasible_replacements;
use amoeba_core::{Error, Graph};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "amoeba", version, about = "Local and global amoeba graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct CapArgs {
    /// Largest permutation degree for which a group is built.
    #[arg(long, env = "AMOEBA_MAX_N", default_value_t = classifier::DEFAULT_MAX_N)]
    max_n: usize,
}

impl CapArgs {
    fn limits(self) -> Limits {
        Limits::with_max_n(self.max_n)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide local/global status and report the evidence.
    Classify {
        /// graph6 strings, edge-list files or construction expressions;
        /// graph6 lines are read from stdin when omitted.
        inputs: Vec<String>,
        #[command(flatten)]
        cap: CapArgs,
        #[arg(long)]
        json: bool,
        /// Include degree-decrement witnesses.
        #[arg(long)]
        witnesses: bool,
    },
    /// Evaluate a construction expression.
    Construct {
        expression: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// List the feasible edge-replacements.
    Replacements {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Show the replacement group (or the automorphism group).
    Group {
        input: String,
        #[command(flatten)]
        cap: CapArgs,
        /// Use G ∪ K1 (the group deciding globality).
        #[arg(long)]
        global: bool,
        /// List every automorphism (refused for large groups).
        #[arg(long)]
        automorphisms: bool,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force copy reachability inside K_N.
    Oracle {
        input: String,
        /// Host order N; both n and n + 1 when omitted.
        #[arg(long)]
        host_order: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[command(flatten)]
        cap: CapArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compare classifier and oracle on every graph of order n.
    Sweep {
        n: usize,
        /// Allow n = 6.
        #[arg(long)]
        large: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the extremal bounds for global amoebas with δ = 1.
    Bounds {
        input: String,
        #[command(flatten)]
        cap: CapArgs,
        #[arg(long)]
        json: bool,
    },
    /// Census probe of the extremal-graph conjecture and of Fibonacci trees.
    ProbeConjecture {
        /// Largest census order.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Largest Fibonacci tree index to test for locality.
        #[arg(long, default_value_t = 6)]
        fib_max: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Cap(String),
    Mismatch(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Other(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Cap(m) | Failure::Mismatch(m) | Failure::Other(m) => m,
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Eval {
                source: Error::CapExceeded { .. },
                ..
            } => Failure::Cap(e.to_string()),
            _ => Failure::Parse(e.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. } | Error::TooManyElements(_) => {
                Failure::Cap(e.to_string())
            }
            Error::Inconsistent(_) => Failure::Mismatch(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn json_line(value: &impl serde::Serialize) -> String {
    serde_json::to_string(value).expect("serialisable")
}

fn one(input: &str) -> Result<Named, Failure> {
    let named = input::resolve(input)?;
    for w in &named.warnings {
        eprintln!("warning: {w}");
    }
    Ok(named)
}

fn classify(inputs: &[String], cap: CapArgs, json: bool, witnesses: bool) -> Outcome {
    let graphs = input::resolve_all(inputs)?;
    for g in &graphs {
        for w in &g.warnings {
            eprintln!("warning: {w}");
        }
    }
    let limits = cap.limits();
    let results: Vec<Result<ReportJson, Error>> = graphs
        .par_iter()
        .map(|named| {
            let start = Instant::now();
            let report = classifier::classify(&named.graph, &limits)?;
            Ok(ReportJson::new(&named.graph, &report, start.elapsed(), witnesses))
        })
        .collect();
    let mut out = std::io::stdout().lock();
    for (named, result) in graphs.iter().zip(results) {
        let r = result?;
        if json {
            writeln!(out, "{}", json_line(&r)).ok();
        } else {
            writeln!(
                out,
                "{}  n={} m={}  local={} global={}  |S_G|={}  replacements={}+{}  ({} ms)",
                named.source,
                r.n,
                r.m,
                r.is_local,
                r.is_global,
                r.group_order,
                r.replacements.trivial,
                r.replacements.nontrivial,
                r.elapsed_ms
            )
            .ok();
            if let Some(w) = &r.witnesses {
                for (x, y) in w {
                    match y {
                        Some(y) => writeln!(out, "  {x} -> {y}").ok(),
                        None => writeln!(out, "  {x} -> none").ok(),
                    };
                }
            }
        }
    }
    Ok(())
}

fn construct(expression: &str, format: Format) -> Outcome {
    let spec = expr::parse(expression).map_err(|e| Failure::Parse(format!("`{expression}`: {e}")))?;
    for w in spec.warnings() {
        eprintln!("warning: {w}");
    }
    let g = spec.eval().map_err(|e| Failure::Parse(format!("`{expression}`: {e}")))?;
    match format {
        Format::Graph6 => println!("{}", graph6::encode(&g)),
        Format::Edgelist => print!("{}", edgelist::write(&g)),
        Format::Json => {
            let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(i, j)| [i + 1, j + 1]).collect();
            println!(
                "{}",
                serde_json::json!({
                    "expression": spec.to_string(),
                    "graph6": graph6::encode(&g),
                    "n": g.order(),
                    "m": g.size(),
                    "edges": edges,
                })
            );
        }
    }
    Ok(())
}

fn replacements(input: &str, json: bool) -> Outcome {
    let g = one(input)?.graph;
    let reps = feasible_replacements(&g);
    if json {
        let rows: Vec<ReplacementJson> = reps.iter().map(Into::into).collect();
        println!("{}", json_line(&rows));
    } else {
        for r in &reps {
            println!(
                "{r}  {}{}",
                r.representative,
                if r.trivial { "  (trivial)" } else { "" }
            );
        }
        let trivial = reps.iter().filter(|r| r.trivial).count();
        println!("{} replacements ({} trivial, {} nontrivial)", reps.len(), trivial, reps.len() - trivial);
    }
    Ok(())
}

fn group(input: &str, cap: CapArgs, global: bool, automorphisms: bool, json: bool) -> Outcome {
    let mut g = one(input)?.graph;
    if global {
        g = g.with_isolates(1);
    }
    let limits = cap.limits();
    let grp = classifier::amoeba_group_capped(&g, &limits)?;
    let mut report = GroupJson::new(&g, &grp);
    if automorphisms {
        let auts = canon::automorphisms(&g, limits.element_cap)?;
        report.automorphisms = Some(auts.iter().map(|p| p.to_string()).collect());
    }
    if json {
        println!("{}", json_line(&report));
    } else {
        println!("degree {}  order {}  symmetric {}", report.degree, report.order, report.is_symmetric);
        println!("generators: {}", report.generators.join(" "));
        println!("base: {:?}", report.base);
        println!("orbits: {:?}", report.orbits);
        if let Some(a) = &report.automorphisms {
            println!("automorphisms ({}): {}", a.len(), a.join(" "));
        }
    }
    Ok(())
}

fn run_oracle(input: &str, host: Option<usize>, budget: usize, cap: CapArgs, json: bool) -> Outcome {
    let g = one(input)?.graph;
    let n = g.order();
    let hosts = match host {
        Some(h) => vec![h],
        None => vec![n, n + 1],
    };
    let limits = cap.limits();
    let mut mismatch = false;
    for h in hosts {
        let reach = oracle::replacement_reachability(&g, h, budget)?;
        let verdict = if h == n {
            Some(classifier::is_local_amoeba(&g, &limits)?)
        } else if h == n + 1 {
            Some(classifier::is_global_amoeba(&g, &limits)?)
        } else {
            None
        };
        let matches = verdict.map(|v| v == reach.connected());
        mismatch |= matches == Some(false);
        let row = OracleJson {
            graph6: graph6::encode(&g),
            host_order: h,
            copies: reach.copies.len(),
            expected_copies: oracle::expected_copy_count(&g, h)?.to_string(),
            components: reach.components(),
            component_sizes: reach.component_sizes.clone(),
            connected: reach.connected(),
            classifier: verdict,
            matches,
        };
        if json {
            println!("{}", json_line(&row));
        } else {
            let kind = match h {
                _ if h == n => " (local)",
                _ if h == n + 1 => " (global)",
                _ => "",
            };
            println!(
                "K_{h}{kind}: {} copies in {} component(s){}",
                row.copies,
                row.components,
                match matches {
                    Some(true) => ", agrees with classifier",
                    Some(false) => ", DISAGREES with classifier",
                    None => "",
                }
            );
        }
    }
    if mismatch {
        return Err(Failure::Mismatch("oracle and classifier disagree".into()));
    }
    Ok(())
}

fn sweep(n: usize, large: bool, budget: usize, json: bool) -> Outcome {
    if n > 6 || (n == 6 && !large) {
        return Err(Failure::Cap(format!(
            "sweep order {n} not allowed (at most 5, or 6 with --large)"
        )));
    }
    let limits = Limits::with_max_n(n + 1);
    let classes = oracle::graph_classes(n)?;
    let entries: Vec<Result<_, Error>> = classes
        .par_iter()
        .map(|g| oracle::compare(g, &limits, budget))
        .collect();
    let mut mismatches = 0;
    let mut out = std::io::stdout().lock();
    for e in entries {
        let e = e?;
        if !e.matches() {
            mismatches += 1;
        }
        if json {
            writeln!(out, "{}", json_line(&SweepLine::from(&e))).ok();
        }
    }
    let summary = format!("{} classes, {} mismatches", classes.len(), mismatches);
    if json {
        eprintln!("{summary}");
    } else {
        writeln!(out, "{summary}").ok();
    }
    if mismatches > 0 {
        return Err(Failure::Mismatch(summary));
    }
    Ok(())
}

fn bounds(input: &str, cap: CapArgs, json: bool) -> Outcome {
    let g = one(input)?.graph;
    let report = classifier::verify_extremal_bounds(&g, &cap.limits())?;
    let b = BoundsJson::from(&report);
    if json {
        println!("{}", json_line(&b));
        return Ok(());
    }
    let flag = |ok: bool, tight: bool| match (ok, tight) {
        (false, _) => "VIOLATED",
        (true, true) => "tight",
        (true, false) => "holds",
    };
    println!(
        "applicable: {}{}",
        b.applicable,
        if b.applicable { "" } else { " (not a global amoeba with minimum degree 1)" }
    );
    println!("e = {} <= {}  {}", b.edges.value, b.edges.bound, flag(b.edges.satisfied, b.edges.tight));
    match &b.colouring {
        Some(c) => println!(
            "ω = {} <= χ = {} <= {}  {}",
            c.clique_number,
            c.chromatic_number,
            c.bound,
            flag(c.satisfied, c.tight)
        ),
        None => println!("ω, χ: order above the exact solver cap"),
    }
    match &b.max_degree {
        Some(d) => println!("Δ = {} <= {}  {}", d.value, d.bound, flag(d.satisfied, d.tight)),
        None => println!("Δ bound: 1 - 8n + 16m is negative"),
    }
    println!("Welsh–Powell χ bound: {}", b.welsh_powell);
    Ok(())
}

fn probe(max_n: usize, fib_max: usize, json: bool) -> Outcome {
    if max_n > 7 {
        return Err(Failure::Cap(format!("census order {max_n} exceeds 7")));
    }
    let limits = Limits::with_max_n(max_n + 1);
    let mut lines = Vec::new();
    let mut counterexamples = 0;
    for n in 1..=max_n {
        let classes = oracle::graph_classes(n)?;
        let extremal: Vec<Result<Option<Graph>, Error>> = classes
            .par_iter()
            .filter(|g| g.size() == n * n / 4 && g.min_degree() == 1)
            .map(|g| Ok(classifier::is_global_amoeba(g, &limits)?.then(|| g.clone())))
            .collect();
        let h = if n >= 2 { Some(h_graph(n)?) } else { None };
        for g in extremal {
            let Some(g) = g? else { continue };
            let iso = h.as_ref().is_some_and(|h| is_isomorphic(&g, h));
            counterexamples += usize::from(!iso);
            lines.push(serde_json::json!({
                "probe": "extremal",
                "n": n,
                "graph6": graph6::encode(&g),
                "isomorphic_to_h": iso,
            }));
        }
    }
    let mut fib = Vec::new();
    for i in 1..=fib_max {
        let t = fib_tree(i)?.graph;
        let lim = Limits::with_max_n(t.order() + 1);
        let local = classifier::is_local_amoeba(&t, &lim)?;
        let global = classifier::is_global_amoeba(&t, &lim)?;
        fib.push((i, t.order(), local, global));
        lines.push(serde_json::json!({
            "probe": "fibonacci",
            "i": i,
            "n": t.order(),
            "local": local,
            "global": global,
        }));
    }
    if json {
        for l in &lines {
            println!("{l}");
        }
        return Ok(());
    }
    let found = lines.iter().filter(|l| l["probe"] == "extremal").count();
    println!(
        "n <= {max_n}: {found} global amoebas with δ = 1 and e = ⌊n²/4⌋; {} not isomorphic to H_n",
        counterexamples
    );
    for (i, n, local, global) in fib {
        println!("T_{i} (n = {n}): local {local}, global {global}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Classify {
            inputs,
            cap,
            json,
            witnesses,
        } => classify(inputs, *cap, *json, *witnesses),
        Command::Construct { expression, format } => construct(expression, *format),
        Command::Replacements { input, json } => replacements(input, *json),
        Command::Group {
            input,
            cap,
            global,
            automorphisms,
            json,
        } => group(input, *cap, *global, *automorphisms, *json),
        Command::Oracle {
            input,
            host_order,
            budget,
            cap,
            json,
        } => run_oracle(input, *host_order, *budget, *cap, *json),
        Command::Sweep { n, large, budget, json } => sweep(*n, *large, *budget, *json),
        Command::Bounds { input, cap, json } => bounds(input, *cap, *json),
        Command::ProbeConjecture { max_n, fib_max, json } => probe(*max_n, *fib_max, *json),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
