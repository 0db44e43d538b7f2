use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use facecover::classify::classify_tree;
use facecover::decomposition::{block_cut_tree, spr_tree_rooted, SprTree};
use facecover::harness::{gen_planar, Connectivity, GenParams};
use facecover::kernelize::{kernelize, KernelError};
use facecover::oracle::{decide, fcn_exact, OracleError};
use facecover::{Instance, MultiGraph};
use facecover_cli::config::RunConfig;
use facecover_cli::dot::spr_dot;
use facecover_cli::format::{parse_instance, write_instance};
use facecover_cli::report::trace;
use facecover_cli::suites::{self, SuiteReport, SUITES};

#[derive(Parser)]
#[command(name = "facecover", version, about = "Face cover kernelization for planar graphs")]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct RunArgs {
    /// Rotation systems the exact oracle may enumerate.
    #[arg(long, global = true)]
    rotation_budget: Option<u128>,
    /// SPR embedding choices the exact oracle may enumerate.
    #[arg(long, global = true)]
    spr_budget: Option<u128>,
    /// Smallness constant the kernel is reported against.
    #[arg(long, global = true)]
    c: Option<f64>,
    /// Base seed for suites.
    #[arg(long = "run-seed", global = true)]
    run_seed: Option<u64>,
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        let d = RunConfig::default();
        RunConfig {
            rotation_budget: self.rotation_budget.unwrap_or(d.rotation_budget),
            spr_budget: self.spr_budget.unwrap_or(d.spr_budget),
            c: self.c.unwrap_or(d.c),
            seed: self.run_seed.unwrap_or(d.seed),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Kernelize an instance.
    Kernelize {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the JSON trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Solve an instance with the exact oracle.
    Solve {
        #[arg(long, required = true)]
        exact: bool,
        input: PathBuf,
    },
    /// Print the class of every SPR node.
    Classify { input: PathBuf },
    /// Print the block and SPR structure.
    Decompose {
        input: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check that a kernel has the answer of its source instance.
    Verify { original: PathBuf, kernel: PathBuf },
    /// Generate a seeded planar instance.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value_t = 0.6)]
        density: f64,
        #[arg(long, default_value_t = 0.4)]
        terminals: f64,
        #[arg(long)]
        biconnected: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a validation suite, or `all`.
    Suite {
        name: String,
        /// Directory for counterexamples.
        #[arg(long, default_value = "counterexamples")]
        out: PathBuf,
    },
}

enum Fail {
    Input(String),
    Budget(String),
    Check(String),
}

impl From<OracleError> for Fail {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => Fail::Budget(e.to_string()),
            _ => Fail::Input(e.to_string()),
        }
    }
}

impl From<KernelError> for Fail {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::Budget(o) => o.into(),
            KernelError::NonPlanar => Fail::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<Instance, Fail> {
    let text = fs::read_to_string(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Fail> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Fail::Check(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// SPR-trees of the blocks with at least two edges, each rooted at its
/// smallest edge.
fn block_trees(g: &MultiGraph) -> Result<Vec<SprTree>, Fail> {
    let bct = block_cut_tree(g).map_err(|e| Fail::Input(e.to_string()))?;
    let mut out = Vec::new();
    for b in bct.blocks.iter().filter(|b| b.edges.len() >= 2) {
        let h = g.edge_subgraph(&b.edges);
        out.push(spr_tree_rooted(&h, b.edges[0]).map_err(|e| Fail::Input(e.to_string()))?);
    }
    Ok(out)
}

fn components(g: &MultiGraph) -> Vec<MultiGraph> {
    g.connected_components().iter().map(|c| g.induced_subgraph(c)).collect()
}

fn persist(dir: &Path, r: &SuiteReport) -> Result<(), Fail> {
    let dir = dir.join(&r.name);
    fs::create_dir_all(&dir).map_err(|e| Fail::Check(format!("{}: {e}", dir.display())))?;
    for (i, f) in r.failures.iter().enumerate() {
        let mut text = format!("c {}\nc {}\n", f.case, f.detail.replace('\n', " "));
        if let Some(inst) = &f.instance {
            text.push_str(inst);
        }
        let p = dir.join(format!("{i:04}.txt"));
        fs::write(&p, text).map_err(|e| Fail::Check(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Fail> {
    let cfg = cli.run.config();
    match cli.cmd {
        Cmd::Kernelize { input, output, trace: trace_path } => {
            let inst = read(&input)?;
            let out = kernelize(&inst, &cfg.kernel())?;
            write(output.as_deref(), &write_instance(&out.instance))?;
            if let Some(p) = trace_path {
                let mut t = serde_json::to_value(trace(&out, &cfg.oracle())).unwrap();
                let g = &out.instance.graph;
                let internal = (g.edge_count() as f64 - g.vertex_count() as f64).max(0.0);
                let ratio = internal / (g.vertex_count().max(1) as f64).cbrt();
                t["smallness_ratio"] = serde_json::json!(ratio);
                t["smallness_c"] = serde_json::json!(cfg.c);
                let text = serde_json::to_string_pretty(&t).unwrap();
                fs::write(&p, text + "\n").map_err(|e| Fail::Check(format!("{}: {e}", p.display())))?;
            }
            eprintln!("decision hint: {}", out.verdict.hint());
        }
        Cmd::Solve { exact: _, input } => {
            let inst = read(&input)?;
            println!("fcn = {}", fcn_exact(&inst.graph, &cfg.oracle())?);
        }
        Cmd::Classify { input } => {
            let inst = read(&input)?;
            let mut id = 0;
            for comp in components(&inst.graph) {
                for tree in block_trees(&comp)? {
                    let cl = classify_tree(&tree);
                    for t in 0..tree.len() {
                        let kind = tree.node(t).kind.letter();
                        let class = if t == tree.root() { "root" } else { cl.class(t).name() };
                        println!("{id} {kind} {class} {}", tree.inner_terminals(t).len());
                        id += 1;
                    }
                }
            }
        }
        Cmd::Decompose { input, dot } => {
            let inst = read(&input)?;
            let mut trees = Vec::new();
            for comp in components(&inst.graph) {
                for tree in block_trees(&comp)? {
                    let cl = classify_tree(&tree);
                    trees.push((tree, cl));
                }
            }
            for (b, (tree, _)) in trees.iter().enumerate() {
                println!("block {b}");
                for (t, node) in tree.nodes.iter().enumerate() {
                    let c = tree.corners(t);
                    let parent = node.parent.map_or("-".to_string(), |p| p.to_string());
                    println!(
                        "  node {t} {} parent {parent} corners {} {} skeleton {} vertices {} edges",
                        node.kind.letter(),
                        c.c1 + 1,
                        c.c2 + 1,
                        node.skeleton.vertex_count(),
                        node.skeleton.edge_count()
                    );
                }
            }
            if let Some(p) = dot {
                fs::write(&p, spr_dot(&trees)).map_err(|e| Fail::Check(format!("{}: {e}", p.display())))?;
            }
        }
        Cmd::Verify { original, kernel } => {
            let a = read(&original)?;
            let b = read(&kernel)?;
            let oc = cfg.oracle();
            let x = decide(&a.graph, a.k, &oc)?;
            let y = decide(&b.graph, b.k, &oc)?;
            println!("original fcn <= {}: {x}", a.k);
            println!("kernel fcn <= {}: {y}", b.k);
            if x != y {
                return Err(Fail::Check("fail: answers differ".into()));
            }
            println!("pass");
        }
        Cmd::Gen { seed, n, k, density, terminals, biconnected, output } => {
            let mut p = GenParams::new(seed, n);
            p.k = k;
            p.density = density;
            p.terminal_fraction = terminals;
            if biconnected {
                p.connectivity = Connectivity::Biconnected;
            }
            write(output.as_deref(), &write_instance(&gen_planar(&p)))?;
        }
        Cmd::Suite { name, out } => {
            let names: Vec<&str> = if name == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&name.as_str()) {
                vec![name.as_str()]
            } else {
                return Err(Fail::Input(format!("unknown suite {name:?}; known: all, {}", SUITES.join(", "))));
            };
            let mut ok = true;
            for n in names {
                let r = suites::run(n, &cfg).unwrap();
                println!("{}", serde_json::to_string(&r).unwrap());
                if !r.passed {
                    ok = false;
                    persist(&out, &r)?;
                }
            }
            if !ok {
                return Err(Fail::Check(format!("suite failures written to {}", out.display())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Check(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Fail::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Budget(m)) => {
            eprintln!("refused: {m}");
            ExitCode::from(3)
        }
    }
}
