//! `minorham`: graph properties, K2,t minors, Hamiltonicity certificates,
//! C-reductions, named families, enumeration and the verification matrix.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use input::{parse_list, read_graphs, read_one};
use minorham_core::certificate::minor_certificate;
use minorham_core::enumerate::{generate_triangulations, sweep_3c_planar, HamiltonScope, SweepOptions};
use minorham_core::families::{mask_from_bits, named_graph, FamilySpec};
use minorham_core::hamilton::{find_tough_cut, hamilton_cycle, longest_cycle, Cycle, HamiltonResult};
use minorham_core::minors::{enumerate_k2t_models, find_k2t_model, find_rooted_k22, k2t_search};
use minorham_core::reductions::{lift_cycle, normalize_claim3, ReductionTrace};
use minorham_core::topology::{
    is_block, outerplanar_embedding, planar_embedding, vertex_connectivity, xy_outerplanar_embedding, Planarity,
};
use minorham_core::verify::{run_verification, Level, VerifyOptions};
use minorham_core::{Certificate, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "minorham", version, about = "K2,t minors, Hamiltonicity and 3-connected planar graphs")]
struct Cli {
    /// Machine-readable JSON output (one object per line).
    #[arg(long, global = true)]
    json: bool,
    /// Emit checkable certificates for every answer.
    #[arg(long, global = true)]
    certificate: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// graph6/sparse6 file, one graph per line ("-" or absent: stdin).
    file: Option<PathBuf>,
    /// Graph given inline as graph6 or sparse6.
    #[arg(short = 'g', long = "graph")]
    graph: Option<String>,
}

impl GraphInput {
    fn path(&self) -> Option<&std::path::Path> {
        self.file.as_deref()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Basic properties: connectivity, planarity, Hamiltonicity, K2,5-freeness.
    Props {
        #[command(flatten)]
        input: GraphInput,
    },
    /// K2,t minor search, or rooted K2,2 search with --rooted.
    Minor {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 5)]
        t: usize,
        /// List every standard model (at most 20 vertices).
        #[arg(long)]
        all: bool,
        /// Rooted K2,2 search at roots X,Y (and xy-outerplanarity).
        #[arg(long, value_name = "X,Y")]
        rooted: Option<String>,
    },
    /// Hamilton cycle or a certified negative answer.
    Ham {
        #[command(flatten)]
        input: GraphInput,
        /// Also report a longest cycle.
        #[arg(long)]
        longest: bool,
        /// Largest toughness cut searched for non-Hamiltonian graphs.
        #[arg(long, default_value_t = 6)]
        tough_max: usize,
    },
    /// Normalize a graph around a cycle by C-reductions.
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        /// Cycle C as a vertex list.
        #[arg(long, value_name = "V,V,...")]
        cycle: Option<String>,
        /// Vertex of the component kept as d (default: lowest vertex off C).
        #[arg(long)]
        keep: Option<usize>,
        /// Lift every cycle of the result and check lengths.
        #[arg(long)]
        lift_all: bool,
        /// Re-validate a stored trace (JSON) instead of reducing.
        #[arg(long, value_name = "FILE", conflicts_with = "cycle")]
        check: Option<PathBuf>,
    },
    /// Print a named graph as graph6.
    Family {
        #[arg(value_enum)]
        name: FamilyName,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Chord mask bits for prism-chords (bit i = face i).
        #[arg(long, default_value_t = 0)]
        mask: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Print vertex labels alongside.
        #[arg(long)]
        labels: bool,
    },
    /// Enumerate 3-connected planar graphs (or triangulations) of one order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Filter::None)]
        filter: Filter,
        #[arg(long, value_enum, default_value_t = Class::ThreeConnectedPlanar)]
        class: Class,
        /// Print counts only.
        #[arg(long)]
        count_only: bool,
        /// Check Hamiltonicity of every graph passing the filter.
        #[arg(long)]
        hamilton: bool,
        /// Directory for resumable checkpoints (env MINORHAM_CHECKPOINT_DIR wins).
        #[arg(long)]
        checkpoint_dir: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Replay the verification matrix.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
        /// Herschel fixture (graph6) replacing the built-in graph.
        #[arg(long, value_name = "FILE")]
        herschel: Option<PathBuf>,
        /// Run only these items.
        #[arg(long, value_name = "ID")]
        only: Vec<String>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        workers: Option<usize>,
        /// Append per-item wall-clock times.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Herschel,
    GoldnerHarary,
    Gk,
    PrismChords,
    Petersen,
    Wheel,
    CompleteBipartite,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Filter {
    None,
    K25Free,
    K26Free,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Class {
    #[value(name = "3c-planar")]
    ThreeConnectedPlanar,
    Triangulations,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
    Extended,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("JSON values serialize"));
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Props { input } => {
            for g in read_graphs(input.graph.as_deref(), input.path())? {
                props(cli, &g.text, &g.graph)?;
            }
        }
        Command::Minor { input, t, all, rooted } => {
            for g in read_graphs(input.graph.as_deref(), input.path())? {
                match rooted {
                    Some(r) => rooted_minor(cli, &g.graph, r)?,
                    None => minor(cli, &g.text, &g.graph, *t, *all)?,
                }
            }
        }
        Command::Ham { input, longest, tough_max } => {
            for g in read_graphs(input.graph.as_deref(), input.path())? {
                ham(cli, &g.text, &g.graph, *longest, *tough_max)?;
            }
        }
        Command::Reduce {
            input,
            cycle,
            keep,
            lift_all,
            check,
        } => reduce(cli, input, cycle.as_deref(), *keep, *lift_all, check.as_deref())?,
        Command::Family {
            name,
            k,
            m,
            mask,
            n,
            s,
            t,
            labels,
        } => family(cli, *name, *k, *m, *mask, *n, *s, *t, *labels)?,
        Command::Enumerate {
            n,
            filter,
            class,
            count_only,
            hamilton,
            checkpoint_dir,
            workers,
        } => enumerate(cli, *n, *filter, *class, *count_only, *hamilton, checkpoint_dir.clone(), *workers)?,
        Command::VerifyPaper {
            level,
            herschel,
            only,
            seed,
            workers,
            timing,
        } => return verify_paper(cli, *level, herschel.as_deref(), only, *seed, *workers, *timing),
    }
    Ok(ExitCode::SUCCESS)
}

fn props(cli: &Cli, text: &str, g: &Graph) -> Result<()> {
    let connected = g.is_connected();
    let connectivity = vertex_connectivity(g)?;
    let planarity = if connected && g.n() > 0 { Some(planar_embedding(g)?) } else { None };
    let planar = match &planarity {
        Some(p) => p.is_planar(),
        None => minorham_core::topology::is_planar(g),
    };
    let faces = planarity.as_ref().and_then(|p| p.embedding()).map(|e| e.faces().len());
    let ham = if g.n() >= 3 { Some(hamilton_cycle(g)?) } else { None };
    let hamiltonian = ham.as_ref().is_some_and(HamiltonResult::is_hamiltonian);
    let k25 = k2t_search(g, 5)?;
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let outerplanar = outerplanar_embedding(g)?.is_some();
    let mut v = json!({
        "schema": 1,
        "graph6": text,
        "n": g.n(),
        "m": g.m(),
        "degrees": degrees,
        "connected": connected,
        "connectivity": connectivity,
        "block": is_block(g),
        "planar": planar,
        "faces": faces,
        "outerplanar": outerplanar,
        "bipartite": g.bipartition().is_some(),
        "girth": g.girth(),
        "hamiltonian": hamiltonian,
        "k25_free": k25.model.is_none(),
        "canonical": g.canonical_code().as_str(),
    });
    if cli.certificate {
        let planarity_cert = match &planarity {
            Some(Planarity::Planar(e)) => json!({"kind": "embedding", "rotation": e.rotation()}),
            Some(Planarity::Nonplanar(w)) => serde_json::to_value(w)?,
            None => Value::Null,
        };
        let ham_cert: Option<Certificate> = ham.map(|h| match h {
            HamiltonResult::Cycle(c) => c.into(),
            HamiltonResult::Exhausted(p) => p.into(),
        });
        v["certificates"] = json!({
            "planarity": planarity_cert,
            "hamiltonian": ham_cert,
            "k25": minor_certificate(g, 5)?,
        });
    }
    if cli.json {
        print_json(&v);
    } else {
        let obj = v.as_object().expect("object");
        for key in [
            "graph6", "n", "m", "degrees", "connected", "connectivity", "block", "planar", "faces", "outerplanar",
            "bipartite", "girth", "hamiltonian", "k25_free", "canonical",
        ] {
            println!("{key}={}", plain(&obj[key]));
        }
        if let Some(c) = obj.get("certificates") {
            println!("certificates={}", serde_json::to_string(c)?);
        }
        println!();
    }
    Ok(())
}

/// Scalars without quotes, lists space-separated.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(a) => a.iter().map(plain).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn set_text(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn minor(cli: &Cli, text: &str, g: &Graph, t: usize, all: bool) -> Result<()> {
    if all {
        let models = enumerate_k2t_models(g, t)?;
        if cli.json {
            print_json(&json!({"schema": 1, "graph6": text, "t": t, "models": models}));
        } else {
            println!("{} models", models.len());
            for m in &models {
                println!("R1={} R2={} S={}", set_text(&m.r1), set_text(&m.r2), set_text(&m.s));
            }
        }
        return Ok(());
    }
    let model = find_k2t_model(g, t)?;
    let cert = if cli.certificate { Some(minor_certificate(g, t)?) } else { None };
    if cli.json {
        let mut v = json!({"schema": 1, "graph6": text, "t": t, "present": model.is_some(), "model": model});
        if let Some(c) = cert {
            v["certificate"] = serde_json::to_value(c)?;
        }
        print_json(&v);
    } else {
        match &model {
            Some(m) => println!("present R1={} R2={} S={}", set_text(&m.r1), set_text(&m.r2), set_text(&m.s)),
            None => println!("absent"),
        }
        if let Some(c) = cert {
            println!("certificate={}", serde_json::to_string(&c)?);
        }
    }
    Ok(())
}

fn rooted_minor(cli: &Cli, g: &Graph, roots: &str) -> Result<()> {
    let r = parse_list(roots)?;
    let [x, y] = r[..] else { bail!("--rooted takes two vertices") };
    let model = find_rooted_k22(g, x, y)?;
    let emb = xy_outerplanar_embedding(g, x, y)?;
    let outer_path = emb.as_ref().and_then(|e| e.outer_path.clone());
    if cli.json {
        print_json(&json!({
            "schema": 1, "x": x, "y": y,
            "rooted_k22": model, "xy_outerplanar": emb.is_some(), "outer_path": outer_path,
        }));
    } else {
        match &model {
            Some(m) => println!(
                "rooted-k22 present R1={} R2={} S={}",
                set_text(&m.model.r1),
                set_text(&m.model.r2),
                set_text(&m.model.s)
            ),
            None => println!("rooted-k22 absent"),
        }
        match outer_path {
            Some(p) => println!("xy-outerplanar outer-path={}", join(&p)),
            None => println!("not xy-outerplanar"),
        }
    }
    Ok(())
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn ham(cli: &Cli, text: &str, g: &Graph, longest: bool, tough_max: usize) -> Result<()> {
    let result = hamilton_cycle(g)?;
    let tough = match &result {
        HamiltonResult::Exhausted(_) => find_tough_cut(g, tough_max.min(g.n()))?,
        HamiltonResult::Cycle(_) => None,
    };
    let long = if longest { Some(longest_cycle(g)?) } else { None };
    if cli.json {
        let mut v = json!({
            "schema": 1,
            "graph6": text,
            "hamiltonian": result.is_hamiltonian(),
            "cycle": result.cycle(),
            "tough_cut": tough,
        });
        if let Some(c) = &long {
            v["longest_cycle"] = json!(c);
        }
        if cli.certificate {
            let cert: Certificate = match &result {
                HamiltonResult::Cycle(c) => c.clone().into(),
                HamiltonResult::Exhausted(p) => p.clone().into(),
            };
            v["certificate"] = serde_json::to_value(cert)?;
        }
        print_json(&v);
        return Ok(());
    }
    match &result {
        HamiltonResult::Cycle(c) => println!("hamiltonian cycle={}", join(&c.vertices)),
        HamiltonResult::Exhausted(p) => {
            println!("non-hamiltonian");
            if cli.certificate {
                println!("exhaustion nodes={} transcript-sha256={}", p.nodes, p.transcript_sha256);
            }
        }
    }
    if let Some(cut) = &tough {
        println!("tough-cut={} components={}", set_text(&cut.cut), cut.component_count);
    }
    if let Some(c) = &long {
        println!("longest-cycle length={} cycle={}", c.len(), join(&c.vertices));
    }
    Ok(())
}

fn reduce(
    cli: &Cli,
    input: &GraphInput,
    cycle: Option<&str>,
    keep: Option<usize>,
    lift_all: bool,
    check: Option<&std::path::Path>,
) -> Result<()> {
    let trace = match check {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            // Either a bare trace or the object printed by `reduce --json`.
            let mut v: Value = serde_json::from_str(&text).context("parsing trace")?;
            if let Some(inner) = v.get_mut("trace") {
                v = inner.take();
            }
            let trace: ReductionTrace = serde_json::from_value(v).context("parsing trace")?;
            trace.validate()?;
            trace
        }
        None => {
            let g = read_one(input.graph.as_deref(), input.path())?.graph;
            let c = Cycle::new(parse_list(cycle.context("--cycle is required")?)?);
            let on_c = c.vertex_set();
            let comps = g.connected_components(&on_c);
            let d = match keep {
                Some(v) => comps.into_iter().find(|s| s.contains(v)).context("--keep is not off the cycle")?,
                None => comps.into_iter().next().context("every vertex lies on the cycle")?,
            };
            let trace = normalize_claim3(&g, &c, &d)?;
            trace.validate()?;
            trace
        }
    };
    let mut lifted = None;
    if lift_all {
        let mut count = 0;
        for z in minorham_core::hamilton::all_cycles(&trace.result)? {
            let l = lift_cycle(&trace, &z)?;
            if !l.verify(&trace.original) || l.len() < z.len() {
                bail!("lift of {:?} is shorter or invalid", z.vertices);
            }
            count += 1;
        }
        lifted = Some(count);
    }
    if cli.json {
        let mut v = json!({"schema": 1, "trace": trace, "result_graph6": trace.result.to_graph6()});
        if let Some(c) = lifted {
            v["lifted_cycles"] = json!(c);
        }
        print_json(&v);
    } else {
        println!("valid steps={}", trace.steps.len());
        for s in &trace.steps {
            println!("step {}", serde_json::to_string(s)?);
        }
        println!("result={}", trace.result.to_graph6());
        println!("cycle={}", join(&trace.cycle_in_result().vertices));
        if let Some(c) = lifted {
            println!("lifted {c} cycles without loss");
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn family(
    cli: &Cli,
    name: FamilyName,
    k: Option<usize>,
    m: Option<usize>,
    mask: u64,
    n: Option<usize>,
    s: Option<usize>,
    t: Option<usize>,
    labels: bool,
) -> Result<()> {
    let spec = match name {
        FamilyName::Herschel => FamilySpec::Herschel,
        FamilyName::GoldnerHarary => FamilySpec::GoldnerHarary,
        FamilyName::Gk => FamilySpec::Gk { k: k.context("gk needs --k")? },
        FamilyName::PrismChords => {
            let m = m.context("prism-chords needs --m")?;
            if m < 64 && mask >> m != 0 {
                bail!("--mask has bits beyond face {}", m - 1);
            }
            FamilySpec::PrismChords {
                m,
                mask: mask_from_bits(m, mask),
            }
        }
        FamilyName::Petersen => FamilySpec::Petersen,
        FamilyName::Wheel => FamilySpec::Wheel { n: n.context("wheel needs --n (rim size)")? },
        FamilyName::CompleteBipartite => FamilySpec::CompleteBipartite {
            s: s.context("complete-bipartite needs --s")?,
            t: t.context("complete-bipartite needs --t")?,
        },
    };
    let g = named_graph(&spec)?;
    let vertex_labels: Vec<String> = (0..g.n()).map(|v| g.label(v)).collect();
    if cli.json {
        print_json(&json!({"schema": 1, "family": spec, "graph6": g.to_graph6(), "labels": vertex_labels}));
    } else {
        println!("{}", g.to_graph6());
        if labels {
            for (v, l) in vertex_labels.iter().enumerate() {
                eprintln!("{v} {l}");
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    cli: &Cli,
    n: usize,
    filter: Filter,
    class: Class,
    count_only: bool,
    hamilton: bool,
    checkpoint_dir: Option<PathBuf>,
    workers: Option<usize>,
) -> Result<()> {
    let filter_name = match filter {
        Filter::None => "none",
        Filter::K25Free => "k25-free",
        Filter::K26Free => "k26-free",
    };
    if class == Class::Triangulations {
        if filter != Filter::None || hamilton {
            bail!("--class triangulations supports neither filters nor --hamilton");
        }
        let codes: Vec<String> = generate_triangulations(n)?.iter().map(|g| g.canonical_code().to_string()).collect();
        if cli.json {
            let mut v = json!({"schema": 1, "n": n, "class": "triangulations", "total": codes.len()});
            if !count_only {
                v["graphs"] = json!(codes);
            }
            print_json(&v);
        } else if count_only {
            println!("n={n} triangulations={}", codes.len());
        } else {
            codes.iter().for_each(|c| println!("{c}"));
        }
        return Ok(());
    }
    let env_dir = std::env::var_os("MINORHAM_CHECKPOINT_DIR").map(PathBuf::from);
    let opts = SweepOptions {
        minor_free_t: match filter {
            Filter::None => None,
            Filter::K25Free => Some(5),
            Filter::K26Free => Some(6),
        },
        hamilton: if hamilton { HamiltonScope::Filtered } else { HamiltonScope::None },
        workers,
        checkpoint_dir: env_dir.or(checkpoint_dir),
        collect: !count_only,
        ..SweepOptions::default()
    };
    let r = sweep_3c_planar(n, &opts)?;
    let c = &r.counters;
    if cli.json {
        let mut v = json!({
            "schema": 1, "n": n, "class": "3c-planar", "filter": filter_name,
            "total_3c_planar": c.total, "passing": c.passing,
        });
        if hamilton {
            v["passing_hamiltonian"] = json!(c.passing_hamiltonian);
            v["non_hamiltonian"] = json!(c.non_hamiltonian);
        }
        if !count_only {
            v["graphs"] = json!(r.codes);
        }
        print_json(&v);
    } else if count_only {
        print!("n={n} total_3c_planar={} filter={filter_name} passing={}", c.total, c.passing);
        if hamilton {
            print!(" passing_hamiltonian={}", c.passing_hamiltonian);
        }
        println!();
        for code in &c.non_hamiltonian {
            println!("non-hamiltonian {code}");
        }
    } else {
        for code in &r.codes {
            println!("{code}");
        }
    }
    Ok(())
}

fn verify_paper(
    cli: &Cli,
    level: LevelArg,
    herschel: Option<&std::path::Path>,
    only: &[String],
    seed: u64,
    workers: Option<usize>,
    timing: bool,
) -> Result<ExitCode> {
    let mut opts = VerifyOptions::new(match level {
        LevelArg::Quick => Level::Quick,
        LevelArg::Full => Level::Full,
        LevelArg::Extended => Level::Extended,
    });
    if let Some(path) = herschel {
        opts.herschel = Some(read_one(None, Some(path))?.graph);
    }
    for id in only {
        if !minorham_core::verify::ITEM_IDS.contains(&id.as_str()) {
            bail!("unknown item {id:?}; known: {}", minorham_core::verify::ITEM_IDS.join(", "));
        }
    }
    opts.only = only.to_vec();
    opts.seed = seed;
    opts.workers = workers;
    let matrix = run_verification(&opts)?;
    if cli.json {
        let mut v = serde_json::to_value(&matrix)?;
        if timing {
            for (item, m) in v["items"].as_array_mut().unwrap().iter_mut().zip(&matrix.items) {
                item["elapsed_secs"] = json!(m.elapsed_secs);
            }
        }
        print_json(&v);
    } else {
        print!("{}", matrix.to_text(timing));
        let failed = matrix.items.iter().filter(|i| i.status == minorham_core::verify::Status::Fail).count();
        println!("{} items, {failed} failed", matrix.items.len());
    }
    Ok(if matrix.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
