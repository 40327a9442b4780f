//! Command-line front end. The binary is a thin wrapper around [`run`], so
//! every command can also be driven in-process.
//!
//! Exit codes: 0 success (or PH / found), 1 negative verdict or a failed
//! extension, 2 budget or cap exhausted before a verdict, 3 invalid input.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Budget, Caps, OutputFormat, RunConfig};
use crate::extension::{extend, figure_highlights, ExtendError, MemoizedBaseOracle, TraceSummary};
use crate::graph::dot::{export_dot, EdgeStyle, Highlight};
use crate::graph::generators::{self, Family};
use crate::graph::graph6::{decode_graph6, encode_graph6};
use crate::graph::products::{cartesian_product_with_cap, strong_product_with_cap};
use crate::graph::{prism_power_with_cap, Graph, PrismTower};
use crate::matching::{
    enumerate_pairings, hamiltonian_cycle, is_hamiltonian_extension, verify_ph, Pairing, PerfectMatching,
    VerifyError,
};
use crate::tree::{
    lemma1_reduce, min_leaf_number_with_cap, ph_power_exact, LeafTree, PhPowerOutcome, TreeError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Largest pairing count `extend --all` will enumerate.
const ALL_CAP: u64 = 3_000_000;

#[derive(Parser, Debug)]
#[command(name = "pairing-prism", version, about = "Pairing-Hamiltonian experiments on prisms and small graphs")]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Worker threads for exhaustive and batch commands.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Stop verification after this many pairings.
    #[arg(long, global = true)]
    max_pairings: Option<u64>,
    /// Backtracking node limit for a single search.
    #[arg(long, global = true)]
    max_nodes: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true)]
    product_cap: Option<usize>,
    #[arg(long, global = true)]
    tower_cap: Option<usize>,
    #[arg(long, global = true)]
    ml_cap: Option<usize>,
    #[arg(long, global = true)]
    verify_cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProductOp {
    Cartesian,
    Strong,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a standard graph as graph6. Families: complete N, cycle N,
    /// path N, star M (K_{1,M}) or star 1 M, bipartite A B, hypercube D,
    /// spider LEGS LEN, product A B.
    Gen {
        family: String,
        /// Numeric parameters (space or comma separated), or two graphs for `product`.
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "cartesian")]
        op: ProductOp,
    },
    /// Extend pairings of the k-th prism power of a base graph.
    Extend {
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// A pairing as {"n":..,"pairs":[[u,v],..]} or as a bare pair list.
        #[arg(long, conflicts_with_all = ["random", "all"])]
        pairing: Option<String>,
        /// Number of seeded random pairings.
        #[arg(long, conflicts_with = "all")]
        random: Option<u64>,
        /// Every pairing of the tower top.
        #[arg(long)]
        all: bool,
        /// Only print counts, not individual results.
        #[arg(long)]
        summary_only: bool,
    },
    /// Exhaustively check the Pairing-Hamiltonian property.
    VerifyPh { graph: Option<String> },
    /// Minimum leaf number with a witness spanning tree.
    Ml { graph: Option<String> },
    /// Build a spanning tree of the prism with fewer leaves.
    ReduceTree {
        graph: Option<String>,
        /// Starting tree as a JSON edge list; defaults to a minimum leaf tree.
        #[arg(long)]
        tree: Option<String>,
    },
    /// Prism power guaranteed to be PH: ml + 3.
    PBound { graph: Option<String> },
    /// Smallest prism power verified to be PH.
    PExact {
        graph: Option<String>,
        #[arg(long, default_value_t = 2)]
        max_k: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<(Output, i32), Failure>;

enum Output {
    Json(Value),
    Text(String),
}

struct Ctx<'a> {
    cfg: RunConfig,
    format: Option<Format>,
    stdin: &'a mut dyn BufRead,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut caps = Caps::default();
    let r = &cli.run;
    caps.product_vertices = r.product_cap.unwrap_or(caps.product_vertices);
    caps.tower_vertices = r.tower_cap.unwrap_or(caps.tower_vertices);
    caps.ml_vertices = r.ml_cap.unwrap_or(caps.ml_vertices);
    caps.verify_vertices = r.verify_cap.unwrap_or(caps.verify_vertices);
    let cfg = RunConfig {
        caps,
        budget: Budget {
            max_pairings: r.max_pairings,
            max_nodes: r.max_nodes,
        },
        workers: r.workers.max(1),
        seed: r.seed,
        format: match r.format {
            Some(Format::Dot) => OutputFormat::Dot,
            Some(Format::Table) => OutputFormat::Table,
            _ => OutputFormat::Json,
        },
    };
    let mut ctx = Ctx {
        cfg,
        format: r.format,
        stdin,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok((output, code)) => {
            let text = match output {
                Output::Text(t) => t,
                Output::Json(v) if matches!(ctx.format, Some(Format::Table)) => table(&v),
                Output::Json(v) => serde_json::to_string(&v).expect("json value") + "\n",
            };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Outcome {
    match command {
        Command::Gen { family, params, op } => cmd_gen(ctx, &family, &params, op),
        Command::Extend {
            base,
            k,
            pairing,
            random,
            all,
            summary_only,
        } => {
            let base = parse_graph(&base).map_err(Failure::input)?;
            let selection = match (pairing, random, all) {
                (Some(p), _, _) => Selection::One(p),
                (_, Some(count), _) => Selection::Random(count),
                (_, _, true) => Selection::All,
                _ => return Err(Failure::input("extend needs one of --pairing, --random or --all")),
            };
            cmd_extend(ctx, &base, k, selection, summary_only)
        }
        Command::VerifyPh { graph } => {
            let g = read_graph(ctx, graph)?;
            cmd_verify_ph(ctx, &g)
        }
        Command::Ml { graph } => {
            let g = read_graph(ctx, graph)?;
            cmd_ml(ctx, &g)
        }
        Command::ReduceTree { graph, tree } => {
            let g = read_graph(ctx, graph)?;
            cmd_reduce_tree(ctx, &g, tree.as_deref())
        }
        Command::PBound { graph } => {
            let g = read_graph(ctx, graph)?;
            cmd_p_bound(ctx, &g)
        }
        Command::PExact { graph, max_k } => {
            let g = read_graph(ctx, graph)?;
            cmd_p_exact(ctx, &g, max_k)
        }
    }
}

/// Accepts a short name (`K4`, `C6`, `Q3`, `K3,3`, ...), graph6, or the JSON
/// graph schema.
pub fn parse_graph(text: &str) -> Result<Graph, String> {
    let text = text.trim();
    if text.starts_with('{') {
        return Graph::from_json(text).map_err(|e| format!("invalid graph JSON: {e}"));
    }
    if let Ok(g) = generators::named(text) {
        return Ok(g);
    }
    decode_graph6(text).map_err(|e| format!("cannot read graph {text:?}: {e}"))
}

fn read_graph(ctx: &mut Ctx, arg: Option<String>) -> Result<Graph, Failure> {
    let text = match arg {
        Some(a) if a != "-" => a,
        _ => {
            let mut line = String::new();
            loop {
                line.clear();
                let read = ctx.stdin.read_line(&mut line).map_err(Failure::input)?;
                if read == 0 {
                    return Err(Failure::input("no graph given on the command line or stdin"));
                }
                let t = line.trim();
                if !t.is_empty() && !t.starts_with('#') {
                    break t.to_string();
                }
            }
        }
    };
    parse_graph(&text).map_err(Failure::input)
}

fn numbers(params: &[String]) -> Result<Vec<usize>, Failure> {
    params
        .iter()
        .flat_map(|p| p.split(','))
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| Failure::input(format!("{s:?} is not a number"))))
        .collect()
}

fn emit_graph(ctx: &Ctx, g: &Graph) -> Outcome {
    let out = match ctx.format {
        Some(Format::Json) => Output::Json(serde_json::to_value(g).expect("graph json")),
        Some(Format::Dot) => Output::Text(export_dot(g, &[])),
        Some(Format::Table) => Output::Text(format!("n\t{}\nedges\t{:?}\n", g.order(), g.edges())),
        None => Output::Text(encode_graph6(g) + "\n"),
    };
    Ok((out, EXIT_OK))
}

fn cmd_gen(ctx: &mut Ctx, family: &str, params: &[String], op: ProductOp) -> Outcome {
    let cap = ctx.cfg.caps.product_vertices;
    let g = if family == "product" {
        let [a, b] = params else {
            return Err(Failure::input("product needs exactly two graphs"));
        };
        let (a, b) = (parse_graph(a).map_err(Failure::input)?, parse_graph(b).map_err(Failure::input)?);
        match op {
            ProductOp::Cartesian => cartesian_product_with_cap(&a, &b, cap),
            ProductOp::Strong => strong_product_with_cap(&a, &b, cap),
        }
        .map_err(Failure::input)?
    } else {
        let nums = numbers(params)?;
        let fam = Family::parse(family).ok_or_else(|| Failure::input(format!("unknown family {family:?}")))?;
        // `star M` and `star 1 M` both mean K_{1,M}.
        let g = match (fam, nums.as_slice()) {
            (Family::Star, [1, m]) | (Family::Star, [m]) => generators::complete_bipartite(1, *m),
            (Family::Star, _) => return Err(Failure::input("star takes M or 1 M")),
            _ => generators::standard(fam, &nums),
        };
        g.map_err(Failure::input)?
    };
    emit_graph(ctx, &g)
}

enum Selection {
    One(String),
    Random(u64),
    All,
}

fn parse_pairing(text: &str, n: usize) -> Result<Pairing, Failure> {
    if let Ok(p) = Pairing::from_json(text) {
        if p.n() != n {
            return Err(Failure::input(format!("pairing has {} vertices, the tower top has {n}", p.n())));
        }
        return Ok(p);
    }
    let pairs: Vec<[usize; 2]> = serde_json::from_str(text).map_err(|e| Failure::input(format!("invalid pairing: {e}")))?;
    Pairing::new(n, pairs.into_iter().map(|[u, v]| (u, v))).map_err(Failure::input)
}

fn pairs_json(pairs: &[(usize, usize)]) -> Value {
    json!(pairs.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

#[derive(Serialize)]
struct Totals {
    total: u64,
    ok: u64,
    failed: u64,
}

/// Extends one pairing and re-checks the answer independently of the engine.
fn extend_one(tower: &PrismTower, oracle: &MemoizedBaseOracle, p: &Pairing) -> (bool, Value, Option<PerfectMatching>) {
    match extend(p, tower, oracle) {
        Ok(ext) => {
            let valid = PerfectMatching::new(tower.top(), ext.matching.as_pairing().clone()).is_ok()
                && is_hamiltonian_extension(p, &ext.matching);
            if !valid {
                let v = json!({"ok": false, "pairing": pairs_json(p.pairs()), "error": "invalid_output",
                    "message": "the returned matching failed re-validation"});
                return (false, v, None);
            }
            let cycle = hamiltonian_cycle(p, &ext.matching).expect("validated above");
            let TraceSummary { case1, case2, base_calls } = ext.trace.summary();
            let v = json!({
                "ok": true,
                "pairing": pairs_json(p.pairs()),
                "matching": pairs_json(ext.matching.pairs()),
                "cycle": cycle,
                "trace": {"case1": case1, "case2": case2, "base_calls": base_calls},
            });
            (true, v, Some(ext.matching))
        }
        Err(ExtendError::BaseNotExtendable { pairing }) => {
            let v = json!({"ok": false, "pairing": pairs_json(p.pairs()), "error": "base_not_extendable",
                "stuck_pairing": pairs_json(pairing.pairs())});
            (false, v, None)
        }
        Err(e) => {
            let v = json!({"ok": false, "pairing": pairs_json(p.pairs()), "error": "extend_failed",
                "message": e.to_string()});
            (false, v, None)
        }
    }
}

fn cmd_extend(ctx: &mut Ctx, base: &Graph, k: usize, selection: Selection, summary_only: bool) -> Outcome {
    let caps = ctx.cfg.caps;
    let tower = prism_power_with_cap(base, k, caps.tower_vertices).map_err(Failure::input)?;
    let oracle = MemoizedBaseOracle::with_node_budget(base.clone(), ctx.cfg.budget.max_nodes).map_err(Failure::input)?;
    let n = tower.top().order();
    if let Selection::One(text) = &selection {
        let p = parse_pairing(text, n)?;
        let (ok, v, matching) = extend_one(&tower, &oracle, &p);
        let code = if ok { EXIT_OK } else { EXIT_NEGATIVE };
        if matches!(ctx.format, Some(Format::Dot)) {
            let highlights = match (&matching, k) {
                (Some(_), 0) | (None, _) => {
                    let mut h = vec![Highlight::new("pairing", p.pairs().iter().copied(), EdgeStyle::Bold)];
                    if let Some(m) = &matching {
                        h.push(Highlight::new("matching", m.pairs().iter().copied(), EdgeStyle::Dashed));
                    }
                    h
                }
                (Some(_), _) => {
                    let ext = extend(&p, &tower, &oracle).expect("succeeded above");
                    figure_highlights(&p, &ext, tower.structure(k))
                }
            };
            return Ok((Output::Text(export_dot(tower.top(), &highlights)), code));
        }
        return Ok((Output::Json(v), code));
    }
    if matches!(ctx.format, Some(Format::Dot)) {
        return Err(Failure::input("--format dot needs a single --pairing"));
    }
    let pairings: Vec<Pairing> = match selection {
        Selection::Random(count) => (0..count)
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.cfg.stream_seed(i));
                Pairing::random(n, &mut rng).map_err(Failure::input)
            })
            .collect::<Result<_, _>>()?,
        Selection::All => {
            let total = Pairing::count(n).unwrap_or(u64::MAX);
            if total > ALL_CAP {
                return Err(Failure::input(format!("--all would enumerate {total} pairings, above {ALL_CAP}")));
            }
            enumerate_pairings(n).map_err(Failure::input)?.collect()
        }
        Selection::One(_) => unreachable!(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(ctx.cfg.workers)
        .build()
        .map_err(Failure::input)?;
    let results: Vec<(bool, Value)> = pool.install(|| {
        pairings
            .par_iter()
            .map(|p| {
                let (ok, v, _) = extend_one(&tower, &oracle, p);
                (ok, v)
            })
            .collect()
    });
    let ok = results.iter().filter(|r| r.0).count() as u64;
    let totals = Totals {
        total: results.len() as u64,
        ok,
        failed: results.len() as u64 - ok,
    };
    let mut doc = json!({"base": encode_graph6(base), "k": k, "n": n, "seed": ctx.cfg.seed});
    let obj = doc.as_object_mut().expect("object");
    for (key, val) in serde_json::to_value(&totals).expect("totals").as_object().expect("object") {
        obj.insert(key.clone(), val.clone());
    }
    let failures: Vec<Value> = results.iter().filter(|r| !r.0).map(|r| r.1.clone()).collect();
    if summary_only {
        obj.insert("failures".into(), json!(failures));
    } else {
        obj.insert("results".into(), json!(results.into_iter().map(|r| r.1).collect::<Vec<_>>()));
    }
    let code = if totals.failed == 0 { EXIT_OK } else { EXIT_NEGATIVE };
    Ok((Output::Json(doc), code))
}

fn cmd_verify_ph(ctx: &mut Ctx, g: &Graph) -> Outcome {
    match verify_ph(g, &ctx.cfg.budget, ctx.cfg.workers) {
        Ok(v) => {
            let code = if v.is_ph { EXIT_OK } else { EXIT_NEGATIVE };
            Ok((Output::Json(serde_json::to_value(&v).expect("verdict json")), code))
        }
        Err(VerifyError::BudgetExceeded { stats, reason }) => Ok((
            Output::Json(json!({"is_ph": null, "budget_exhausted": true, "reason": reason, "stats": stats})),
            EXIT_BUDGET,
        )),
        Err(e) => Err(Failure::input(e)),
    }
}

fn tree_failure(e: TreeError) -> Failure {
    match e {
        TreeError::Inexact { .. } | TreeError::Cap { .. } => Failure {
            code: EXIT_BUDGET,
            message: e.to_string(),
        },
        _ => Failure::input(e),
    }
}

fn cmd_ml(ctx: &mut Ctx, g: &Graph) -> Outcome {
    let r = min_leaf_number_with_cap(g, &ctx.cfg.budget, ctx.cfg.caps.ml_vertices).map_err(tree_failure)?;
    let v: Value = serde_json::from_str(&r.to_json()).expect("ml json");
    Ok((Output::Json(v), if r.exact { EXIT_OK } else { EXIT_BUDGET }))
}

fn cmd_reduce_tree(ctx: &mut Ctx, g: &Graph, tree: Option<&str>) -> Outcome {
    let r = match tree {
        Some(text) => {
            let edges: Vec<[usize; 2]> =
                serde_json::from_str(text).map_err(|e| Failure::input(format!("invalid tree: {e}")))?;
            LeafTree::new(g, edges.into_iter().map(|[u, v]| (u, v))).map_err(Failure::input)?
        }
        None => {
            min_leaf_number_with_cap(g, &ctx.cfg.budget, ctx.cfg.caps.ml_vertices)
                .map_err(tree_failure)?
                .witness
        }
    };
    let red = lemma1_reduce(g, &r).map_err(Failure::input)?;
    Ok((
        Output::Json(json!({
            "t": r.leaf_count(),
            "leaf_count": red.tree.leaf_count(),
            "history": red.history,
            "fallbacks": red.fallbacks,
            "edges": pairs_json(red.tree.edges()),
        })),
        EXIT_OK,
    ))
}

fn exact_ml(ctx: &Ctx, g: &Graph) -> Result<usize, Failure> {
    let r = min_leaf_number_with_cap(g, &ctx.cfg.budget, ctx.cfg.caps.ml_vertices).map_err(tree_failure)?;
    if !r.exact {
        return Err(tree_failure(TreeError::Inexact { best: r.value }));
    }
    Ok(r.value)
}

fn cmd_p_bound(ctx: &mut Ctx, g: &Graph) -> Outcome {
    let ml = exact_ml(ctx, g)?;
    Ok((
        Output::Json(json!({"ml": ml, "traceable_threshold": ml - 2, "bound": ml + 3})),
        EXIT_OK,
    ))
}

fn cmd_p_exact(ctx: &mut Ctx, g: &Graph, max_k: usize) -> Outcome {
    let probe = ph_power_exact(g, max_k, &ctx.cfg.budget, &ctx.cfg.caps, ctx.cfg.workers).map_err(tree_failure)?;
    let code = match probe.outcome {
        PhPowerOutcome::Found { .. } => EXIT_OK,
        PhPowerOutcome::NotFound { .. } => EXIT_NEGATIVE,
        PhPowerOutcome::Exhausted { .. } => EXIT_BUDGET,
    };
    let mut v = serde_json::to_value(&probe).expect("probe json");
    v.as_object_mut().expect("object").insert("p".into(), json!(probe.value()));
    Ok((Output::Json(v), code))
}

/// One `key<TAB>value` line per top-level field.
fn table(v: &Value) -> String {
    match v.as_object() {
        Some(map) => map
            .iter()
            .map(|(k, v)| format!("{k}\t{}\n", v))
            .collect(),
        None => format!("{v}\n"),
    }
}
