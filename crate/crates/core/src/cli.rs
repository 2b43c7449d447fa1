//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a structural precondition fails (the
//! report then carries a witness that `verify` can re-check), 2 on usage or
//! input errors.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds;
use crate::caps::Caps;
use crate::colouring::{self, KellOutcome, ListAssignment, TreeFreeOutcome};
use crate::density;
use crate::error::{Error, Result};
use crate::experiment::{self, ExperimentConfig};
use crate::gadgets::{self, GadgetSpec};
use crate::graph::Graph;
use crate::io::{self, Format};
use crate::rational;
use crate::structure::{self, KstEmbedding, MinorModel};

#[derive(Debug, Parser)]
#[command(name = "defekt", version, about = "Defective colouring toolkit for sparse graphs")]
pub struct Cli {
    /// Seed for random instance generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Oracle cap overrides, e.g. `minor=16,td=14` (applied after DEFEKT_CAPS).
    #[arg(long, global = true)]
    pub caps: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
    EdgeList,
    Dimacs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ColourMode {
    List,
    Kell,
    Treefree,
    Partition,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// mad, degeneracy and depth-1/2 top-grad of a graph.
    Analyze {
        /// Graph file (edge list, DIMACS or JSON); `-` reads standard input.
        graph: PathBuf,
    },
    /// Search for structural certificates.
    Detect {
        graph: PathBuf,
        #[arg(long, num_args = 2, value_names = ["S", "T"])]
        kst_star: Option<Vec<usize>>,
        #[arg(long, value_name = "L")]
        light_edge: Option<usize>,
        /// Pattern graph file for the exhaustive minor test.
        #[arg(long, value_name = "H")]
        minor: Option<PathBuf>,
        #[arg(long)]
        tau: bool,
        #[arg(long)]
        treedepth: bool,
        /// Low-degree vertex, light edge or K*_{s,t}, with mad and top-grad
        /// measured on the graph.
        #[arg(long, num_args = 2, value_names = ["S", "T"])]
        dichotomy: Option<Vec<usize>>,
    },
    /// Compute a defective colouring.
    Colour {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "list")]
        mode: ColourMode,
        /// List mode: lists have k+1 colours. Kell mode: leaves per star.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// List mode: light-edge threshold (least workable one if absent).
        /// Kell mode: number of stars (default 2).
        #[arg(long)]
        ell: Option<usize>,
        /// JSON array of lists; defaults to {0..k} everywhere.
        #[arg(long)]
        lists: Option<PathBuf>,
        /// Tree file for treefree mode.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Degree bound N for partition mode.
        #[arg(long)]
        n_bound: Option<usize>,
        /// Include the peel trace (list mode).
        #[arg(long)]
        trace: bool,
    },
    /// Re-check a colouring or certificate against a graph.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        defect: Option<usize>,
        /// Minor model JSON (`{"branch_sets": [...]}`), checked against --pattern.
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long)]
        pattern: Option<PathBuf>,
        /// K*_{s,t} embedding JSON (`{"a":..,"t":..,"pair_vertices":..}`).
        #[arg(long)]
        embedding: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["S", "T"])]
        kst_star: Option<Vec<usize>>,
        /// Checks that the graph is a stuck witness: minimum degree above K
        /// and no L-light edge.
        #[arg(long, num_args = 2, value_names = ["K", "L"])]
        stuck: Option<Vec<usize>>,
    },
    /// Evaluate a named bound formula.
    Bounds {
        /// Formula name; `list` prints the available names.
        name: Option<String>,
        /// JSON object of parameters, or `@file`.
        #[arg(long)]
        params: Option<String>,
        /// Named table (`earth-moon`).
        #[arg(long)]
        table: Option<String>,
        /// Pattern graph for `hfree`.
        #[arg(long)]
        pattern: Option<PathBuf>,
    },
    /// Generate a construction.
    Gadget {
        #[command(subcommand)]
        kind: GadgetCommand,
    },
    /// Run a registered experiment and emit a JSON-lines report.
    Experiment {
        name: String,
        /// Number of random instances (experiment default if absent).
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GadgetCommand {
    /// G(s, N).
    Gsn { s: usize, n: usize },
    /// K*_{s,t}.
    KstStar { s: usize, t: usize },
    /// Subdivide each edge once, or by comma-separated `--lengths`.
    Subdivide {
        graph: PathBuf,
        #[arg(long)]
        lengths: Option<String>,
    },
    /// Dominant vertex over ell copies of K_{1,k}.
    KellH { ell: usize, k: usize },
    /// Complete binary tree of the given radius.
    BinaryTree { radius: usize },
    /// Closure of a rooted tree.
    Closure {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
}

/// Parses `argv` (including the program name), runs, and returns the exit
/// code. Reports go to standard output or `--out`.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, code)) => match emit(&cli, &report) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Err(e) if e.is_structural() => {
            let report = serde_json::to_string_pretty(&failure_report(&e)).expect("plain data") + "\n";
            eprintln!("error: {e}");
            match emit(&cli, &report) {
                Ok(()) => 1,
                Err(_) => 2,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(cli: &Cli, report: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, report)?,
        None => print!("{report}"),
    }
    Ok(())
}

/// JSON description of a structural failure, with its witness.
pub fn failure_report(e: &Error) -> Value {
    let witness = match e {
        Error::Stuck { witness, vertices } => json!({ "graph": io::to_json_value(witness), "vertices": vertices }),
        Error::PreconditionRefuted { graph, s, t, light_bound } => {
            json!({ "graph": io::to_json_value(graph), "s": s, "t": t, "light_bound": light_bound })
        }
        _ => Value::Null,
    };
    json!({ "error": e.to_string(), "witness": witness })
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    io::parse_auto(&read_text(path)?)
}

fn read_json(path: &Path) -> Result<Value> {
    Ok(serde_json::from_str(&read_text(path)?)?)
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("plain data") + "\n"
}

fn caps(cli: &Cli) -> Result<Caps> {
    let caps = Caps::from_env()?;
    match &cli.caps {
        Some(spec) => caps.apply(spec),
        None => Ok(caps),
    }
}

fn usage(message: impl Into<String>) -> Error {
    Error::InvalidInput(message.into())
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let caps = caps(cli)?;
    match &cli.command {
        Command::Analyze { graph } => {
            let g = read_graph(graph)?;
            let report = density::analyze(&g, caps.top_grad)?;
            Ok((pretty(&report.to_json()), 0))
        }
        Command::Detect {
            graph,
            kst_star,
            light_edge,
            minor,
            tau,
            treedepth,
            dichotomy,
        } => detect(&read_graph(graph)?, kst_star, *light_edge, minor, *tau, *treedepth, dichotomy, &caps),
        Command::Colour {
            graph,
            mode,
            k,
            ell,
            lists,
            tree,
            n_bound,
            trace,
        } => {
            let g = read_graph(graph)?;
            colour(&g, *mode, *k, *ell, lists.as_deref(), tree.as_deref(), *n_bound, *trace, &caps)
        }
        Command::Verify {
            graph,
            colouring,
            defect,
            model,
            pattern,
            embedding,
            kst_star,
            stuck,
        } => verify(
            &read_graph(graph)?,
            colouring.as_deref(),
            *defect,
            model.as_deref(),
            pattern.as_deref(),
            embedding.as_deref(),
            kst_star,
            stuck,
        ),
        Command::Bounds {
            name,
            params,
            table,
            pattern,
        } => bounds_command(cli, name.as_deref(), params.as_deref(), table.as_deref(), pattern.as_deref(), &caps),
        Command::Gadget { kind } => {
            let spec = match kind {
                GadgetCommand::Gsn { s, n } => GadgetSpec::Gsn { s: *s, n: *n },
                GadgetCommand::KstStar { s, t } => GadgetSpec::KstStar { s: *s, t: *t },
                GadgetCommand::Subdivide { graph, lengths } => {
                    let base = read_graph(graph)?;
                    match lengths {
                        None => GadgetSpec::ExactOneSubdivision(base),
                        Some(text) => {
                            let lengths = text
                                .split(',')
                                .map(|x| x.trim().parse().map_err(|_| usage(format!("bad length {x:?}"))))
                                .collect::<Result<Vec<usize>>>()?;
                            GadgetSpec::LeKSubdivision { base, lengths }
                        }
                    }
                }
                GadgetCommand::KellH { ell, k } => GadgetSpec::KellH { ell: *ell, k: *k },
                GadgetCommand::BinaryTree { radius } => GadgetSpec::CompleteBinaryTree { radius: *radius },
                GadgetCommand::Closure { graph, root } => GadgetSpec::TreeClosure {
                    tree: read_graph(graph)?,
                    root: *root,
                },
            };
            let g = spec.build(caps.gadget_vertices)?;
            let text = match cli.format.unwrap_or(OutputFormat::EdgeList) {
                OutputFormat::EdgeList | OutputFormat::Text => io::write(&g, Format::EdgeList),
                OutputFormat::Dimacs => io::write(&g, Format::Dimacs),
                OutputFormat::Json => io::write(&g, Format::Json) + "\n",
                OutputFormat::Csv => return Err(usage("gadgets are written as edge-list, dimacs or json")),
            };
            Ok((text, 0))
        }
        Command::Experiment { name, count } => {
            let config = ExperimentConfig {
                seed: cli.seed,
                count: *count,
                caps,
            };
            let rows = experiment::run(name, &config)?;
            let (passed, total) = experiment::tally(&rows);
            let text = match cli.format.unwrap_or(OutputFormat::Json) {
                OutputFormat::Json => experiment::to_json_lines(&rows),
                OutputFormat::Csv => {
                    let mut out = String::from("check_id,paper_ref,pass\n");
                    for r in &rows {
                        out += &format!("{},{},{}\n", r.check_id, r.paper_ref, r.pass);
                    }
                    out
                }
                OutputFormat::Text => {
                    let mut out = String::new();
                    for r in &rows {
                        out += &format!("{} {}\n", if r.pass { "PASS" } else { "FAIL" }, r.check_id);
                    }
                    out + &format!("{passed}/{total} passed\n")
                }
                _ => return Err(usage("experiment reports are json, csv or text")),
            };
            Ok((text, if passed == total { 0 } else { 1 }))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn detect(
    g: &Graph,
    kst_star: &Option<Vec<usize>>,
    light_edge: Option<usize>,
    minor: &Option<PathBuf>,
    tau: bool,
    treedepth: bool,
    dichotomy: &Option<Vec<usize>>,
    caps: &Caps,
) -> Result<(String, i32)> {
    let mut out = serde_json::Map::new();
    if let Some(st) = kst_star {
        let found = structure::find_kst_star(g, st[0], st[1]);
        out.insert("kst_star".into(), json!(found));
    }
    if let Some(l) = light_edge {
        out.insert("light_edge".into(), json!(structure::find_light_edge(g, l)));
    }
    if let Some(path) = minor {
        let h = read_graph(path)?;
        let model = structure::minor_test_bruteforce(g, &h, caps)?;
        out.insert("minor".into(), json!(model));
    }
    if tau {
        out.insert("tau".into(), json!(structure::vertex_cover_number(g, caps.vertex_cover)?));
    }
    if treedepth {
        out.insert("treedepth".into(), json!(structure::tree_depth(g, caps.tree_depth)?));
    }
    if let Some(st) = dichotomy {
        let (mad, _) = density::mad_exact(g)?;
        let tg = density::top_grad_half(g, caps.top_grad)?;
        if tg.method == density::DensityMethod::HeuristicLowerBound {
            return Err(Error::CapExceeded {
                what: "exact top-grad for the dichotomy",
                size: g.vertex_count(),
                cap: caps.top_grad,
            });
        }
        let delta1 = rational::int(2) * &tg.value;
        let d = structure::structural_dichotomy(g, st[0], st[1], &mad, &delta1)?;
        out.insert(
            "dichotomy".into(),
            json!({ "result": d, "mad": rational::format(&mad), "delta1": rational::format(&delta1) }),
        );
    }
    if out.is_empty() {
        return Err(usage("nothing to detect; pass --kst-star, --light-edge, --minor, --tau, --treedepth or --dichotomy"));
    }
    Ok((pretty(&Value::Object(out)), 0))
}

#[allow(clippy::too_many_arguments)]
fn colour(
    g: &Graph,
    mode: ColourMode,
    k: usize,
    ell: Option<usize>,
    lists: Option<&Path>,
    tree: Option<&Path>,
    n_bound: Option<usize>,
    trace: bool,
    caps: &Caps,
) -> Result<(String, i32)> {
    let report = match mode {
        ColourMode::List => {
            let ell = ell.unwrap_or_else(|| experiment::least_peel_threshold(g, k.max(1)));
            let lists = match lists {
                Some(path) => ListAssignment {
                    lists: serde_json::from_value(read_json(path)?)?,
                },
                None => ListAssignment::uniform(g.vertex_count(), k + 1),
            };
            let (colours, peel) = colouring::defective_list_colour_traced(g, &lists, k, ell)?;
            let mut report = json!({
                "mode": "list",
                "k": k,
                "ell": ell,
                "defect": ell - k,
                "colouring": colouring::colouring_to_json(&colours),
            });
            if trace {
                report["trace"] = serde_json::to_value(&peel)?;
            }
            report
        }
        ColourMode::Kell => {
            let ell = ell.unwrap_or(2);
            match colouring::colour_kell(g, ell, k, caps)? {
                KellOutcome::Colouring(c) => json!({
                    "mode": "kell",
                    "outcome": "colouring",
                    "defect": c.defect_bound,
                    "contracted_defect": c.contracted_defect,
                    "contracted_defect_formula": c.contracted_defect_formula.to_string(),
                    "common_neighbour_threshold": c.common_neighbour_threshold,
                    "x_vertices": c.x_vertices,
                    "colouring": colouring::colouring_to_json(&c.colours),
                }),
                KellOutcome::Minor { model } => json!({
                    "mode": "kell",
                    "outcome": "minor",
                    "pattern": io::to_json_value(&gadgets::gen_kell_h(ell, k)?),
                    "model": model,
                }),
            }
        }
        ColourMode::Treefree => {
            let path = tree.ok_or_else(|| usage("treefree mode needs --tree"))?;
            let t = read_graph(path)?;
            match colouring::colour_tree_free(g, &t)? {
                TreeFreeOutcome::Colouring {
                    colours,
                    colour_count,
                    defect,
                } => json!({
                    "mode": "treefree",
                    "outcome": "colouring",
                    "colour_count": colour_count,
                    "defect": defect,
                    "colouring": colouring::colouring_to_json(&colours),
                }),
                TreeFreeOutcome::Embedding { embedding } => json!({
                    "mode": "treefree",
                    "outcome": "embedding",
                    "embedding": embedding,
                }),
            }
        }
        ColourMode::Partition => {
            let n = n_bound.ok_or_else(|| usage("partition mode needs --n-bound"))?;
            let p = colouring::edge_partition_forest_bounded(g, n)?;
            json!({ "mode": "partition", "n_bound": n, "forest": p.forest, "bounded": p.bounded })
        }
    };
    Ok((pretty(&report), 0))
}

#[allow(clippy::too_many_arguments)]
fn verify(
    g: &Graph,
    colouring_path: Option<&Path>,
    defect: Option<usize>,
    model: Option<&Path>,
    pattern: Option<&Path>,
    embedding: Option<&Path>,
    kst_star: &Option<Vec<usize>>,
    stuck: &Option<Vec<usize>>,
) -> Result<(String, i32)> {
    let mut out = serde_json::Map::new();
    let mut ok = true;
    if let Some(path) = colouring_path {
        let d = defect.ok_or_else(|| usage("--colouring needs --defect"))?;
        let value = read_json(path)?;
        // Accept either a bare colouring or a `colour` report.
        let value = value.get("colouring").cloned().unwrap_or(value);
        let colours = colouring::colouring_from_json(&value, g.vertex_count())?;
        let report = colouring::verify_defective(g, &colours, d)?;
        ok &= report.ok;
        out.insert("colouring".into(), serde_json::to_value(&report)?);
    }
    if let Some(path) = model {
        let h = read_graph(pattern.ok_or_else(|| usage("--model needs --pattern"))?)?;
        let value = read_json(path)?;
        let value = value.get("model").cloned().unwrap_or(value);
        let sets: Vec<Vec<usize>> = serde_json::from_value(value["branch_sets"].clone())?;
        let result = structure::validate_minor_model(g, &h, &MinorModel { branch_sets: sets });
        ok &= result.is_ok();
        out.insert("minor_model".into(), json!({ "ok": result.is_ok(), "error": result.err().map(|e| e.to_string()) }));
    }
    if let Some(path) = embedding {
        let st = kst_star.as_ref().ok_or_else(|| usage("--embedding needs --kst-star S T"))?;
        let value = read_json(path)?;
        let field = |name: &str| -> Result<Vec<usize>> { Ok(serde_json::from_value(value[name].clone())?) };
        let e = KstEmbedding {
            a: field("a")?,
            t: field("t")?,
            pair_vertices: field("pair_vertices")?,
        };
        let result = structure::validate_kst_star(g, st[0], st[1], &e);
        ok &= result.is_ok();
        out.insert("kst_star".into(), json!({ "ok": result.is_ok(), "error": result.err().map(|e| e.to_string()) }));
    }
    if let Some(kl) = stuck {
        let (k, l) = (kl[0], kl[1]);
        let is_stuck = !g.is_empty() && g.min_degree() > k && structure::find_light_edge(g, l).is_none();
        ok &= is_stuck;
        out.insert("stuck".into(), json!({ "ok": is_stuck, "k": k, "ell": l }));
    }
    if out.is_empty() {
        return Err(usage("nothing to verify; pass --colouring, --model, --embedding or --stuck"));
    }
    out.insert("ok".into(), json!(ok));
    Ok((pretty(&Value::Object(out)), if ok { 0 } else { 1 }))
}

fn bounds_command(
    cli: &Cli,
    name: Option<&str>,
    params: Option<&str>,
    table: Option<&str>,
    pattern: Option<&Path>,
    caps: &Caps,
) -> Result<(String, i32)> {
    let name = table.or(name).ok_or_else(|| usage("bounds needs a formula name or --table"))?;
    if name == "list" {
        let mut names: Vec<&str> = bounds::FORMULAS.to_vec();
        names.push("hfree");
        return Ok((names.join("\n") + "\n", 0));
    }
    if name == "earth-moon" && cli.format == Some(OutputFormat::Text) {
        let text: String = bounds::thickness_table(2, 0)
            .into_iter()
            .map(|(c, d)| format!("({c},{d})\n"))
            .collect();
        return Ok((text, 0));
    }
    if name == "hfree" {
        let h = read_graph(pattern.ok_or_else(|| usage("hfree needs --pattern"))?)?;
        let (lower, upper) = bounds::hfree_bounds(&h, caps)?;
        let report = json!({ "formula_id": "hfree", "inputs": { "pattern": io::to_json_value(&h) },
                             "value": { "lower": lower, "upper": upper } });
        return Ok((pretty(&report), 0));
    }
    let params: Value = match params {
        None => json!({}),
        Some(text) => match text.strip_prefix('@') {
            Some(path) => read_json(Path::new(path))?,
            None => serde_json::from_str(text)?,
        },
    };
    let result = bounds::evaluate(name, &params)?;
    Ok((pretty(&serde_json::to_value(&result)?), 0))
}
