//! Command-line front end. Three core commands wrap the library:
//!
//! - `compute`: one parameter of one graph (interval, hull, iteration times,
//!   general position, dissociation, tree formula);
//! - `reduce`: write a hardness gadget or transform to an edge-list file;
//! - `verify`: run a named verification suite.
//!
//! `generate` and `kernel` round out the front end for family generation and
//! kernelization. Exit codes: 0 ok, 1 usage error, 2 parse error,
//! 3 infeasible (a solver cap was exceeded). The `CONVEXITY_CAP` environment
//! variable overrides every solver cap; `--cap` does the same per call.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use crate::engine::{ConvexityKind, Engine};
use crate::error::{Error, Result};
use crate::graph::{
    generate, parse_edge_list, simplicial_closure, to_edge_list, GraphFamily,
};
use crate::kernels::{nd_kernel, vc_kernel, KernelOutcome};
use crate::params::{
    dissociation_number, gp_decision_xp, gp_number, iteration_time_graph, tree_iteration_time_p3,
    Caps,
};
use crate::reductions::{
    build_clique_gp_gadget, build_mcis_gp_gadget, build_sat_iteration_gadget, CnfFormula,
    MulticoloredInstance,
};
use crate::set::VertexSet;
use crate::suites;

/// Machine-readable record of one `compute` run.
#[derive(Clone, Debug)]
pub struct RunResult {
    pub command: String,
    pub param: String,
    pub convexity: String,
    pub value: usize,
    pub witness: Vec<usize>,
    pub elapsed_ms: u128,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Infeasible,
    Error,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Infeasible => "infeasible",
            Status::Error => "error",
        }
    }
}

impl RunResult {
    pub fn to_json(&self) -> String {
        let witness = self
            .witness
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{{\"command\":\"{}\",\"param\":\"{}\",\"convexity\":\"{}\",\"value\":{},\"witness\":[{}],\"elapsed_ms\":{},\"status\":\"{}\"}}",
            escape(&self.command),
            escape(&self.param),
            escape(&self.convexity),
            self.value,
            witness,
            self.elapsed_ms,
            self.status.name()
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command    {}", self.command);
        let _ = writeln!(out, "param      {}", self.param);
        let _ = writeln!(out, "convexity  {}", self.convexity);
        let _ = writeln!(out, "value      {}", self.value);
        let _ = writeln!(
            out,
            "witness    {}",
            self.witness
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        let _ = writeln!(out, "elapsed    {} ms", self.elapsed_ms);
        let _ = write!(out, "status     {}", self.status.name());
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => 1,
        Error::Parse { .. } => 2,
        Error::Infeasible { .. } => 3,
    }
}

/// Flag map over `--name value` pairs; `--set` may be last or directly
/// followed by another flag to mean the empty set.
struct Flags {
    pairs: Vec<(String, String)>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Flags> {
        let mut pairs = Vec::new();
        let mut i = 0;
        while i < args.len() {
            let arg = &args[i];
            let Some(name) = arg.strip_prefix("--") else {
                return Err(Error::usage(format!("unexpected argument `{arg}`")));
            };
            let value = match args.get(i + 1) {
                Some(v) if !v.starts_with("--") => {
                    i += 1;
                    v.clone()
                }
                _ if name == "set" || name == "json" => String::new(),
                _ => {
                    return Err(Error::usage(format!("flag --{name} needs a value")));
                }
            };
            pairs.push((name.to_string(), value));
            i += 1;
        }
        Ok(Flags { pairs })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    fn require(&self, name: &str) -> Result<&str> {
        self.get(name)
            .ok_or_else(|| Error::usage(format!("missing required flag --{name}")))
    }

    fn has(&self, name: &str) -> bool {
        self.pairs.iter().any(|(n, _)| n == name)
    }

    fn parsed<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>> {
        match self.get(name) {
            None => Ok(None),
            Some(v) => v
                .parse::<T>()
                .map(Some)
                .map_err(|_| Error::usage(format!("flag --{name}: cannot parse `{v}`"))),
        }
    }

    fn reject_unknown(&self, known: &[&str]) -> Result<()> {
        for (name, _) in &self.pairs {
            if !known.contains(&name.as_str()) {
                return Err(Error::usage(format!("unknown flag --{name}")));
            }
        }
        Ok(())
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::usage(format!("cannot read {path}: {e}")))
}

fn write_file(path: &str, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::usage(format!("cannot write {path}: {e}")))
}

fn parse_set(csv: &str, n: usize) -> Result<VertexSet> {
    let mut s = VertexSet::empty(n);
    for tok in csv.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::usage(format!("flag --set: cannot parse vertex `{tok}`")))?;
        if v >= n {
            return Err(Error::usage(format!(
                "flag --set names vertex {v}, but the graph has {n} vertices"
            )));
        }
        s.insert(v);
    }
    Ok(s)
}

fn caps_from(flags: &Flags) -> Result<Caps> {
    if let Some(cap) = flags.parsed::<usize>("cap")? {
        return Ok(Caps::uniform(cap));
    }
    if let Ok(env) = std::env::var("CONVEXITY_CAP") {
        let cap: usize = env
            .parse()
            .map_err(|_| Error::usage(format!("CONVEXITY_CAP: cannot parse `{env}`")))?;
        return Ok(Caps::uniform(cap));
    }
    Ok(Caps::default())
}

/// Entry point; returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    let Some(command) = args.first() else {
        eprintln!("{USAGE}");
        return 1;
    };
    let rest = &args[1..];
    let outcome = match command.as_str() {
        "compute" => cmd_compute(rest),
        "reduce" => cmd_reduce(rest),
        "verify" => cmd_verify(rest),
        "generate" => cmd_generate(rest),
        "kernel" => cmd_kernel(rest),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(0)
        }
        other => Err(Error::usage(format!("unknown command `{other}`\n{USAGE}"))),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

const USAGE: &str = "usage:
  convexity compute  --param {interval|hull|ti-set|ti-graph|gp|gp-decide|diss|tree-ti}
                     [--convexity {geodesic|monophonic|p3|p3star}] --graph FILE
                     [--set CSV] [--k INT] [--cap INT] [--json]
  convexity reduce   {sat-ti|clique-gp|mcis-gp|simplicial} --input FILE --output FILE
                     [--colors FILE] [--x INT --y INT]
  convexity verify   --suite {axioms|lemmas|lift|mono1|mono2|mcis|sat|kernels|xp|all}
                     [--trials INT] [--seed INT]
  convexity generate --family NAME --n INT [--p FLOAT] [--seed INT] --output FILE
  convexity kernel   {nd|vc} --graph FILE --k INT [--output FILE]

exit codes: 0 ok, 1 usage error, 2 parse error, 3 infeasible.
CONVEXITY_CAP overrides the default solver caps.";

fn cmd_compute(args: &[String]) -> Result<i32> {
    let flags = Flags::parse(args)?;
    flags.reject_unknown(&["param", "convexity", "graph", "set", "k", "cap", "json"])?;
    let param = flags.require("param")?.to_string();
    let kind = match flags.get("convexity") {
        Some(s) => ConvexityKind::from_str(s)?,
        None => ConvexityKind::P3,
    };
    let graph_text = read_file(flags.require("graph")?)?;
    let g = parse_edge_list(&graph_text)?;
    let caps = caps_from(&flags)?;
    let json = flags.has("json");

    let need_set = || -> Result<VertexSet> {
        let csv = flags
            .get("set")
            .ok_or_else(|| Error::usage(format!("--param {param} needs --set")))?;
        parse_set(csv, g.n())
    };

    let start = Instant::now();
    let computed: Result<(usize, Vec<usize>)> = (|| {
        match param.as_str() {
            "interval" => {
                let s = need_set()?;
                let iv = Engine::new(kind, &g).interval(&s)?;
                Ok((iv.len(), iv.to_vec()))
            }
            "hull" => {
                let s = need_set()?;
                let h = Engine::new(kind, &g).hull(&s)?;
                Ok((h.len(), h.to_vec()))
            }
            "ti-set" => {
                let s = need_set()?;
                let trace = Engine::new(kind, &g).iteration_trace(&s)?;
                Ok((trace.steps, trace.hull.to_vec()))
            }
            "ti-graph" => {
                let r = iteration_time_graph(kind, &g, &caps)?;
                Ok((r.value, r.witness.to_vec()))
            }
            "gp" => {
                let r = gp_number(kind, &g, &caps)?;
                Ok((r.value, r.witness.to_vec()))
            }
            "gp-decide" => {
                let k = flags
                    .parsed::<usize>("k")?
                    .ok_or_else(|| Error::usage("--param gp-decide needs --k"))?;
                match gp_decision_xp(kind, &g, k)? {
                    Some(w) => Ok((1, w.to_vec())),
                    None => Ok((0, Vec::new())),
                }
            }
            "diss" => {
                let r = dissociation_number(&g, &caps)?;
                Ok((r.value, r.witness.to_vec()))
            }
            "tree-ti" => Ok((tree_iteration_time_p3(&g)?, Vec::new())),
            other => Err(Error::usage(format!("flag --param: unknown parameter `{other}`"))),
        }
    })();

    let elapsed_ms = start.elapsed().as_millis();
    let convexity = match param.as_str() {
        "diss" | "tree-ti" => "p3".to_string(),
        _ => kind.to_string(),
    };
    match computed {
        Ok((value, witness)) => {
            let result = RunResult {
                command: "compute".into(),
                param,
                convexity,
                value,
                witness,
                elapsed_ms,
                status: Status::Ok,
            };
            println!("{}", if json { result.to_json() } else { result.to_text() });
            Ok(0)
        }
        Err(e @ Error::Infeasible { .. }) => {
            let result = RunResult {
                command: "compute".into(),
                param,
                convexity,
                value: 0,
                witness: Vec::new(),
                elapsed_ms,
                status: Status::Infeasible,
            };
            println!("{}", if json { result.to_json() } else { result.to_text() });
            eprintln!("error: {e}");
            Ok(3)
        }
        Err(e) => Err(e),
    }
}

fn cmd_reduce(args: &[String]) -> Result<i32> {
    let Some(which) = args.first() else {
        return Err(Error::usage(
            "reduce needs a gadget name: sat-ti, clique-gp, mcis-gp or simplicial",
        ));
    };
    let flags = Flags::parse(&args[1..])?;
    flags.reject_unknown(&["input", "output", "colors", "x", "y"])?;
    let input = read_file(flags.require("input")?)?;
    let output_path = flags.require("output")?;

    match which.as_str() {
        "sat-ti" => {
            let formula = CnfFormula::parse_dimacs(&input)?;
            let gadget = build_sat_iteration_gadget(&formula);
            write_file(output_path, &to_edge_list(&gadget.out.graph))?;
            println!(
                "wrote {output_path}: {} vertices, {} edges",
                gadget.out.graph.n(),
                gadget.out.graph.edge_count()
            );
            println!("target {} (satisfiable iff P3 iteration time >= target)", gadget.out.target);
        }
        "clique-gp" => {
            let h = parse_edge_list(&input)?;
            let gadget = build_clique_gp_gadget(&h)?;
            write_file(output_path, &to_edge_list(&gadget.graph))?;
            println!(
                "wrote {output_path}: {} vertices, {} edges",
                gadget.graph.n(),
                gadget.graph.edge_count()
            );
            println!(
                "target offset {} (clique of size k iff monophonic general-position set of size k+{})",
                gadget.target, gadget.target
            );
        }
        "mcis-gp" => {
            let colors_text = read_file(flags.require("colors")?)?;
            let h = parse_edge_list(&input)?;
            let inst = MulticoloredInstance::parse_colors(h, &colors_text)?;
            let gadget = build_mcis_gp_gadget(&inst);
            write_file(output_path, &to_edge_list(&gadget.graph))?;
            println!(
                "wrote {output_path}: {} vertices, {} edges",
                gadget.graph.n(),
                gadget.graph.edge_count()
            );
            println!(
                "target {} (multicolored independent set iff P3 general position number >= target)",
                gadget.target
            );
        }
        "simplicial" => {
            let h = parse_edge_list(&input)?;
            let x = flags
                .parsed::<usize>("x")?
                .ok_or_else(|| Error::usage("simplicial needs --x"))?;
            let y = flags
                .parsed::<usize>("y")?
                .ok_or_else(|| Error::usage("simplicial needs --y"))?;
            let g = simplicial_closure(&h, x, y)?;
            write_file(output_path, &to_edge_list(&g))?;
            println!(
                "wrote {output_path}: {} vertices, {} edges ({} edges added)",
                g.n(),
                g.edge_count(),
                g.edge_count() - h.edge_count()
            );
        }
        other => {
            return Err(Error::usage(format!("unknown gadget `{other}`")));
        }
    }
    Ok(0)
}

fn cmd_verify(args: &[String]) -> Result<i32> {
    let flags = Flags::parse(args)?;
    flags.reject_unknown(&["suite", "trials", "seed"])?;
    let suite = flags.require("suite")?;
    let trials = flags.parsed::<usize>("trials")?;
    let seed = flags.parsed::<u64>("seed")?.unwrap_or(suites::DEFAULT_SEED);

    let Some(reports) = suites::run_suite(suite, trials, seed) else {
        return Err(Error::usage(format!(
            "unknown suite `{suite}` (expected one of {}, or all)",
            suites::SUITE_NAMES.join(", ")
        )));
    };
    let mut all_pass = true;
    for report in &reports {
        println!("{}", report.summary());
        for failure in report.failures() {
            println!("  FAIL {}: {}", failure.label, failure.detail);
        }
        all_pass &= report.all_pass();
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_generate(args: &[String]) -> Result<i32> {
    let flags = Flags::parse(args)?;
    flags.reject_unknown(&["family", "n", "p", "seed", "output"])?;
    let tag = flags.require("family")?;
    let n = flags
        .parsed::<usize>("n")?
        .ok_or_else(|| Error::usage("generate needs --n"))?;
    let p = flags.parsed::<f64>("p")?.unwrap_or(0.5);
    let seed = flags.parsed::<u64>("seed")?.unwrap_or(0);
    let family = match tag {
        "complete" => GraphFamily::Complete { n },
        "cycle" => GraphFamily::Cycle { n },
        "path" => GraphFamily::Path { n },
        "wheel" => GraphFamily::Wheel { n },
        "star" => GraphFamily::Star { n },
        "random-tree" => GraphFamily::RandomTree { n, seed },
        "gnp" => GraphFamily::Gnp { n, p, seed },
        "random-triangle-free" => GraphFamily::RandomTriangleFree { n, p, seed },
        other => return Err(Error::usage(format!("unknown family `{other}`"))),
    };
    let g = generate(&family)?;
    let path = flags.require("output")?;
    write_file(path, &to_edge_list(&g))?;
    println!("wrote {path}: {} vertices, {} edges", g.n(), g.edge_count());
    Ok(0)
}

fn cmd_kernel(args: &[String]) -> Result<i32> {
    let Some(which) = args.first() else {
        return Err(Error::usage("kernel needs a rule name: nd or vc"));
    };
    let flags = Flags::parse(&args[1..])?;
    flags.reject_unknown(&["graph", "k", "output"])?;
    let g = parse_edge_list(&read_file(flags.require("graph")?)?)?;
    let k = flags
        .parsed::<usize>("k")?
        .ok_or_else(|| Error::usage("kernel needs --k"))?;
    let outcome = match which.as_str() {
        "nd" => nd_kernel(&g, k),
        "vc" => vc_kernel(&g, k),
        other => return Err(Error::usage(format!("unknown kernel `{other}`"))),
    };
    match outcome {
        KernelOutcome::Decided { answer, reason } => {
            println!("decided {}: {reason}", if answer { "YES" } else { "NO" });
        }
        KernelOutcome::Reduced { graph, origin, k } => {
            println!(
                "reduced to {} vertices, {} edges (k = {k})",
                graph.n(),
                graph.edge_count()
            );
            println!(
                "origin map: {}",
                origin
                    .iter()
                    .enumerate()
                    .map(|(new, old)| format!("{new}->{old}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            if let Some(path) = flags.get("output") {
                write_file(path, &to_edge_list(&graph))?;
                println!("wrote {path}");
            }
        }
    }
    Ok(0)
}
