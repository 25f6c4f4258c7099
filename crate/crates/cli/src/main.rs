//! `excount`: build forbidden-cycle constructions, search extremal values,
//! run verification suites, and drive tester experiments, with every run
//! recorded in a replayable manifest.

mod manifest;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use excount::constructions::ConstructionSpec;
use excount::counting::{cycle_copies, path_copies, triangle_count};
use excount::detect::{is_l_free, shortest_odd_cycle};
use excount::extremal::{brute_force_ex, hill_climb_ex, ExtremalRecord};
use excount::graph::Graph;
use excount::graph6;
use excount::pattern::Pattern;
use excount::rng::trial_rng;
use excount::suites::run_suite;
use excount::testing::{separation_experiment, SeparationReport, TesterConfig};
use manifest::{finish, to_json_bytes, write_output, RunManifest};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "excount", version, about = "Cycle-counting constructions, exact extremal search, inequality verification, and sampling-tester experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction; writes graph6 plus a verified JSON sidecar
    Construct {
        /// polarity | cycle-blowup | path-blowup | general-blowup |
        /// triangle-booster | hard-l-free
        family: String,
        /// Prime modulus (polarity)
        #[arg(long)]
        p: Option<u64>,
        /// Pattern length k (cycle/path blow-ups)
        #[arg(long)]
        k: Option<usize>,
        /// Forbidden cycle length (blow-ups, booster)
        #[arg(long)]
        l: Option<usize>,
        /// Scale of the blown classes
        #[arg(long)]
        m: Option<usize>,
        /// Target pattern, e.g. C3 or P2 (general-blowup)
        #[arg(long)]
        target: Option<String>,
        /// Forbidden cycle length (general-blowup)
        #[arg(long)]
        forbid: Option<usize>,
        /// Vertex count (general-blowup, hard-l-free)
        #[arg(long)]
        n: Option<usize>,
        /// Smallest forbidden odd length (hard-l-free)
        #[arg(long)]
        l1: Option<usize>,
        /// Matching size for the booster input
        #[arg(long)]
        matching: Option<usize>,
        /// Reserve one isolated vertex (hard-l-free)
        #[arg(long, default_value_t = false)]
        with_isolated: bool,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Exact or hill-climbing extremal values over a range of n
    ExSearch {
        /// Target pattern, e.g. C3 or P2
        #[arg(long)]
        target: String,
        /// Forbidden cycle lengths, comma separated
        #[arg(long)]
        forbid: String,
        /// Range of n, e.g. 4..8 (inclusive) or a single value
        #[arg(long)]
        n: String,
        /// exact | hill
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Vertex cap for exact mode
        #[arg(long, default_value_t = 8)]
        limit: usize,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Run one named verification suite; exit code 0 means zero failures
    Verify {
        /// partition-identity | consecutive-odd | cycle-partition |
        /// lambda-path | forbidden-cycles | p2 | triangle | erdos-gallai |
        /// zarankiewicz | trimming | komlos
        suite: String,
        /// Instance count, or "all" for the suite's exhaustive default
        #[arg(long, default_value = "all")]
        trials: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Also write the suite report as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tester experiments
    Experiment {
        /// Only "separation" is defined
        kind: String,
        /// Comma-separated odd second forbidden lengths
        #[arg(long)]
        l2: String,
        #[arg(long, default_value_t = 0.02)]
        eps: f64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Re-run a recorded manifest
    Replay {
        manifest: PathBuf,
        /// Redirect outputs to a different directory
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match dispatch(args) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn default_seed(explicit: Option<u64>) -> u64 {
    explicit
        .or_else(|| std::env::var("EXCOUNT_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(1)
}

fn dispatch(args: Vec<String>) -> Result<ExitCode> {
    let cli = match Cli::try_parse_from(std::iter::once("excount".into()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles help/version/usage exits itself
            e.exit();
        }
    };
    match cli.command {
        Command::Construct { .. } => cmd_construct(cli.command, args),
        Command::ExSearch { .. } => cmd_ex_search(cli.command, args),
        Command::Verify { .. } => cmd_verify(cli.command),
        Command::Experiment { .. } => cmd_experiment(cli.command, args),
        Command::Replay { manifest, out } => cmd_replay(&manifest, out),
    }
}

#[derive(Serialize)]
struct Sidecar {
    spec: ConstructionSpec,
    version: String,
    n: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    c4_free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    forbidden_absent: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    loops_discarded: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pattern: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    copies_exact: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    copies_at_least: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_girth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    triangles: Option<u64>,
}

impl Sidecar {
    fn new(spec: ConstructionSpec, g: &Graph) -> Self {
        Sidecar {
            spec,
            version: env!("CARGO_PKG_VERSION").into(),
            n: g.n(),
            edges: g.edge_count(),
            c4_free: None,
            forbidden_absent: None,
            min_degree: None,
            max_degree: None,
            loops_discarded: None,
            pattern: None,
            copies_exact: None,
            copies_at_least: None,
            odd_girth: None,
            triangles: None,
        }
    }
}

fn build_spec(command: &Command) -> Result<ConstructionSpec> {
    let Command::Construct {
        family,
        p,
        k,
        l,
        m,
        target,
        forbid,
        n,
        l1,
        matching,
        with_isolated,
        ..
    } = command
    else {
        unreachable!()
    };
    let need = |opt: Option<u64>, name: &str| {
        opt.ok_or_else(|| anyhow!("family {family} requires --{name}"))
    };
    let needu = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| anyhow!("family {family} requires --{name}"))
    };
    Ok(match family.as_str() {
        "polarity" => ConstructionSpec::Polarity { p: need(*p, "p")? },
        "cycle-blowup" => ConstructionSpec::CycleBlowup {
            k: needu(*k, "k")?,
            l: needu(*l, "l")?,
            m: needu(*m, "m")?,
        },
        "path-blowup" => ConstructionSpec::PathBlowup {
            k: needu(*k, "k")?,
            l: needu(*l, "l")?,
            m: needu(*m, "m")?,
        },
        "general-blowup" => ConstructionSpec::GeneralBlowup {
            target: target
                .as_deref()
                .ok_or_else(|| anyhow!("general-blowup requires --target"))?
                .parse()
                .map_err(|e| anyhow!("{e}"))?,
            forbidden: needu(*forbid, "forbid")?,
            n: needu(*n, "n")?,
        },
        "triangle-booster" => ConstructionSpec::TriangleBooster {
            l: needu(*l, "l")?,
            matching: needu(*matching, "matching")?,
        },
        "hard-l-free" => ConstructionSpec::HardLFree {
            l1: needu(*l1, "l1")?,
            n: needu(*n, "n")?,
            with_isolated: *with_isolated,
        },
        other => bail!("unknown construction family {other:?}"),
    })
}

fn countable(g: &Graph, len: usize) -> bool {
    g.n() <= 40 && len <= 7
}

fn cmd_construct(command: Command, raw_args: Vec<String>) -> Result<ExitCode> {
    let spec = build_spec(&command)?;
    let Command::Construct { out, .. } = &command else { unreachable!() };
    let g = spec.build().map_err(|e| anyhow!("{e}"))?;
    let mut side = Sidecar::new(spec.clone(), &g);
    let stem = match &spec {
        ConstructionSpec::Polarity { p } => {
            let (_, loops) = excount::constructions::polarity_graph(*p).unwrap();
            side.c4_free = Some(is_l_free(&g, &[4]));
            side.loops_discarded = Some(loops);
            side.min_degree = (0..g.n()).map(|v| g.degree(v)).min();
            side.max_degree = (0..g.n()).map(|v| g.degree(v)).max();
            format!("polarity_p{p}")
        }
        ConstructionSpec::CycleBlowup { k, l, m } => {
            side.forbidden_absent = is_l_free(&g, &[*l]).then(|| vec![*l]);
            side.pattern = Some(format!("C{k}"));
            if countable(&g, *k) {
                side.copies_exact = Some(cycle_copies(&g, *k));
            } else {
                side.copies_at_least = Some((*m as u64).pow((*k / 2) as u32));
            }
            format!("cycle_blowup_k{k}_l{l}_m{m}")
        }
        ConstructionSpec::PathBlowup { k, l, m } => {
            side.forbidden_absent = is_l_free(&g, &[*l]).then(|| vec![*l]);
            side.pattern = Some(format!("P{k}"));
            if countable(&g, *k) {
                side.copies_exact = Some(path_copies(&g, *k));
            } else {
                side.copies_at_least = Some((*m as u64).pow(((*k + 2) / 2) as u32));
            }
            format!("path_blowup_k{k}_l{l}_m{m}")
        }
        ConstructionSpec::GeneralBlowup { target, forbidden, n } => {
            side.forbidden_absent = is_l_free(&g, &[*forbidden]).then(|| vec![*forbidden]);
            side.pattern = Some(target.to_string());
            if countable(&g, target.vertex_count()) {
                side.copies_exact = Some(target.count_in(&g));
            }
            format!("general_blowup_{target}_f{forbidden}_n{n}")
        }
        ConstructionSpec::TriangleBooster { l, matching } => {
            let evens: Vec<usize> = (2..=*l).map(|i| 2 * i).collect();
            side.forbidden_absent = is_l_free(&g, &evens).then_some(evens);
            side.triangles = Some(triangle_count(&g));
            format!("triangle_booster_l{l}_m{matching}")
        }
        ConstructionSpec::HardLFree { l1, n, with_isolated } => {
            side.forbidden_absent = is_l_free(&g, &[3]).then(|| vec![3]);
            side.odd_girth = shortest_odd_cycle(&g);
            let iso = if *with_isolated { "_iso" } else { "" };
            format!("hard_l_free_l{l1}_n{n}{iso}")
        }
    };
    if side.forbidden_absent.is_none() && !matches!(spec, ConstructionSpec::Polarity { .. }) {
        bail!("construction failed its own freeness verification");
    }
    let g6 = format!("{}\n", graph6::encode(&g));
    let g6_name = format!("{stem}.g6");
    let json_name = format!("{stem}.json");
    write_output(out, &g6_name, g6.as_bytes())?;
    write_output(out, &json_name, &to_json_bytes(&side)?)?;
    finish(out, RunManifest::new("construct", raw_args, None), vec![g6_name.clone(), json_name])?;
    println!("wrote {} ({} vertices, {} edges)", out.join(g6_name).display(), g.n(), g.edge_count());
    Ok(ExitCode::SUCCESS)
}

fn parse_range(text: &str) -> Result<Vec<usize>> {
    if let Some((a, b)) = text.split_once("..") {
        let a: usize = a.trim().parse().context("range start")?;
        let b: usize = b.trim().trim_start_matches('=').parse().context("range end")?;
        if a > b {
            return Ok(Vec::new());
        }
        Ok((a..=b).collect())
    } else {
        Ok(vec![text.trim().parse().context("single n")?])
    }
}

fn parse_lengths(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().context("forbidden length"))
        .collect()
}

fn cmd_ex_search(command: Command, raw_args: Vec<String>) -> Result<ExitCode> {
    let Command::ExSearch {
        target,
        forbid,
        n,
        mode,
        steps,
        restarts,
        seed,
        limit,
        out,
    } = command
    else {
        unreachable!()
    };
    let target: Pattern = target.parse().map_err(|e| anyhow!("{e}"))?;
    let forbidden = parse_lengths(&forbid)?;
    let ns = parse_range(&n)?;
    let seed = default_seed(seed);
    let mut csv = String::from("n,target,forbidden,value,exact,method,witness_file\n");
    let mut outputs = Vec::new();
    for &n in &ns {
        let record: ExtremalRecord = match mode.as_str() {
            "exact" => brute_force_ex(n, target, &forbidden, limit).map_err(|e| anyhow!("{e}"))?,
            "hill" => {
                let mut rng = trial_rng(seed, n as u64);
                hill_climb_ex(n, target, &forbidden, steps, restarts, &mut rng)
                    .map_err(|e| anyhow!("{e}"))?
            }
            other => bail!("unknown mode {other:?} (expected exact or hill)"),
        };
        assert!(record.verify(), "search record failed re-verification");
        let witness_name = format!("witness_n{n}.g6");
        write_output(&out, &witness_name, format!("{}\n", graph6::encode(&record.witness)).as_bytes())?;
        let flist = record
            .forbidden
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("+");
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            n, record.target, flist, record.value, record.exact, record.method, witness_name
        ));
        outputs.push(witness_name);
        eprintln!(
            "n={n}: {} = {} ({:.2?})",
            record.method, record.value, record.compute_time
        );
    }
    write_output(&out, "records.csv", csv.as_bytes())?;
    outputs.push("records.csv".into());
    finish(&out, RunManifest::new("ex-search", raw_args, Some(seed)), outputs)?;
    print!("{csv}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(command: Command) -> Result<ExitCode> {
    let Command::Verify { suite, trials, seed, out } = command else {
        unreachable!()
    };
    let trials = match trials.as_str() {
        "all" => 10_000,
        text => text.parse().context("--trials expects a number or 'all'")?,
    };
    let seed = default_seed(seed);
    let report = run_suite(&suite, trials, seed).map_err(|e| anyhow!("{e}"))?;
    for failure in &report.failures {
        println!(
            "FAIL {} [{}] lhs={} rhs={} counterexample={}",
            failure.check,
            failure.instance,
            failure.lhs,
            failure.rhs,
            failure.counterexample.as_deref().unwrap_or("-")
        );
    }
    println!(
        "suite {}: {} passed, {} failed, {} not applicable (seed {seed})",
        report.suite, report.passed, report.failed, report.not_applicable
    );
    if let Some(path) = out {
        let dir = path.parent().map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
        let name = path
            .file_name()
            .ok_or_else(|| anyhow!("--out needs a file name"))?
            .to_string_lossy()
            .to_string();
        write_output(&dir, &name, &to_json_bytes(&report)?)?;
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn curves_csv(report: &SeparationReport) -> String {
    let mut csv = String::from("l2,n,tester,q,trials,rejections,rate,ci_low,ci_high\n");
    for e in &report.entries {
        for p in &e.one_sided_below_floor {
            csv.push_str(&format!(
                "{},{},one-sided,{},{},{},{:.6},{:.6},{:.6}\n",
                e.l2, e.n, p.q, p.trials, p.rejections, p.rate, p.ci_low, p.ci_high
            ));
        }
        for p in &e.two_sided.points {
            csv.push_str(&format!(
                "{},{},two-sided,{},{},{},{:.6},{:.6},{:.6}\n",
                e.l2, e.n, p.q, p.trials, p.rejections, p.rate, p.ci_low, p.ci_high
            ));
        }
    }
    csv
}

fn cmd_experiment(command: Command, raw_args: Vec<String>) -> Result<ExitCode> {
    let Command::Experiment { kind, l2, eps, trials, seed, out } = command else {
        unreachable!()
    };
    if kind != "separation" {
        bail!("unknown experiment {kind:?} (expected separation)");
    }
    let l2_values = parse_lengths(&l2)?;
    for &v in &l2_values {
        if v % 2 == 0 {
            bail!("forbidden lengths must be odd integers, got {v}");
        }
    }
    let seed = default_seed(seed);
    let cfg = TesterConfig {
        epsilon: eps,
        trials,
        master_seed: seed,
        ..TesterConfig::default()
    };
    let report = separation_experiment(&l2_values, &cfg).map_err(|e| anyhow!("{e}"))?;
    write_output(&out, "report.json", &to_json_bytes(&report)?)?;
    write_output(&out, "curves.csv", curves_csv(&report).as_bytes())?;
    finish(
        &out,
        RunManifest::new("experiment", raw_args, Some(seed)),
        vec!["report.json".into(), "curves.csv".into()],
    )?;
    for e in &report.entries {
        println!(
            "l2={}: one-sided zero below floor: {}; two-sided min q: {:?} bracket {:?}",
            e.l2, e.one_sided_all_zero, e.two_sided.min_q, e.two_sided.min_q_interval
        );
    }
    println!("two-sided brackets overlap: {}", report.two_sided_brackets_overlap);
    Ok(ExitCode::SUCCESS)
}

fn cmd_replay(manifest_path: &PathBuf, out_override: Option<PathBuf>) -> Result<ExitCode> {
    let manifest = RunManifest::load(manifest_path)?;
    let mut args = manifest.args.clone();
    if let Some(new_out) = out_override {
        let mut replaced = false;
        for i in 0..args.len() {
            if args[i] == "--out" && i + 1 < args.len() {
                args[i + 1] = new_out.to_string_lossy().into_owned();
                replaced = true;
            }
        }
        if !replaced {
            args.push("--out".into());
            args.push(new_out.to_string_lossy().into_owned());
        }
    }
    dispatch(args)
}
