//! Command-line front end for the coalition solver.
//!
//! Exit codes: 0 success/valid, 1 invalid input or failed verification,
//! 2 exact-search capacity exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use coalitions::{
    build_scg, coalition_partner_count, construct_from_domatic, count_all_sds, degree_stats,
    domatic, export_dot, family_f_member, generate, parse_edge_list, sc_oracle, solve_with,
    validate_partition, DominationStyle, Family, Graph, GraphSampler, Partition, SolveConfig,
    SolveResult, DEFAULT_EXACT_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "coalitions",
    version,
    about = "Exact maximum coalition partitions of small graphs, with certified witnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the maximum coalition partition of one graph
    Solve(SolveArgs),
    /// Tabulate solver values for a family against its closed form
    Table(TableArgs),
    /// Check a partition file against the coalition-partition conditions
    Verify(VerifyArgs),
    /// Build the coalition graph of a valid partition and write DOT
    Scg(ScgArgs),
    /// Evaluate bound inequalities on given or sampled graphs
    CheckBounds(CheckBoundsArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum StyleArg {
    Plain,
    Strong,
}

impl From<StyleArg> for DominationStyle {
    fn from(s: StyleArg) -> DominationStyle {
        match s {
            StyleArg::Plain => DominationStyle::Plain,
            StyleArg::Strong => DominationStyle::Strong,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum TableFamily {
    Paths,
    Cycles,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
}

/// Where the graph comes from: a one-token generator spec or an edge-list file.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Generator spec like `path:9`, `complete_bipartite:4,3`, `family_g:1,1,2`
    #[arg(long, value_name = "FAMILY:PARAMS")]
    gen: Option<String>,
    /// Edge-list file: "n m" header, then one "u v" line per edge, 1-based ids
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl SourceArgs {
    fn load(&self) -> Result<(String, Graph)> {
        match (&self.gen, &self.file) {
            (Some(spec), None) => {
                let family: Family = spec.parse()?;
                let g = generate(&family)?;
                Ok((family.to_string(), g))
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let g = parse_edge_list(&text)?;
                Ok((path.display().to_string(), g))
            }
            _ => unreachable!("clap enforces exactly one source"),
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = StyleArg::Strong)]
    style: StyleArg,
    /// Emit one machine-readable JSON record instead of the human report
    #[arg(long)]
    json: bool,
    /// Search worker threads; the value is worker-count independent
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Largest graph order accepted by exact search
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    limit: usize,
    /// Write the witness partition here, one block per line, 1-based ids
    #[arg(long, value_name = "PATH")]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    family: TableFamily,
    /// Smallest parameter (paths default 1, cycles default 3)
    #[arg(long)]
    min: Option<usize>,
    /// Largest parameter (paths, cycles)
    #[arg(long)]
    max: Option<usize>,
    /// Largest first-part size; rows cover all r >= s >= 1 (complete_bipartite)
    #[arg(long)]
    rmax: Option<usize>,
    /// Largest graph order accepted by exact search
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    limit: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Partition file: one block per line, 1-based vertex ids separated by spaces
    #[arg(long, value_name = "PATH")]
    partition: PathBuf,
    #[arg(long, value_enum, default_value_t = StyleArg::Strong)]
    style: StyleArg,
}

#[derive(Args)]
struct ScgArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Partition file: one block per line, 1-based vertex ids separated by spaces
    #[arg(long, value_name = "PATH")]
    partition: PathBuf,
    /// Where to write the DOT text
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = StyleArg::Strong)]
    style: StyleArg,
}

#[derive(Args)]
struct CheckBoundsArgs {
    /// Generator spec like `cycle:6` or `star:5`
    #[arg(long, value_name = "FAMILY:PARAMS")]
    gen: Option<String>,
    /// Edge-list file
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Sample this many random connected graphs with no universal vertex
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    /// Order of each sampled graph (at least 4)
    #[arg(long)]
    n: Option<usize>,
    /// RNG seed; required with --random so runs are reproducible
    #[arg(long)]
    seed: Option<u64>,
    /// Edge probability for sampling
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Emit one JSON record per graph on stdout; summary goes to stderr
    #[arg(long)]
    json: bool,
    /// Largest graph order accepted by exact search
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    limit: usize,
}

/// Schema-stable machine record, one per solved graph.
#[derive(Serialize)]
struct SolveRecord {
    graph: String,
    style: String,
    value: usize,
    witness: Option<Vec<Vec<usize>>>,
    certified: bool,
    nodes_explored: u64,
    elapsed_ms: u64,
}

impl SolveRecord {
    fn new(graph: &str, style: DominationStyle, result: &SolveResult) -> SolveRecord {
        SolveRecord {
            graph: graph.to_string(),
            style: style.as_str().to_string(),
            value: result.value,
            witness: result.witness.as_ref().map(witness_lists),
            certified: result.certified,
            nodes_explored: result.nodes_explored,
            elapsed_ms: result.wall_time.as_millis() as u64,
        }
    }
}

fn witness_lists(p: &Partition) -> Vec<Vec<usize>> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|v| v + 1).collect())
        .collect()
}

fn block_text(p: &Partition, index: usize) -> String {
    let ids: Vec<String> = p.blocks()[index]
        .iter()
        .map(|v| (v + 1).to_string())
        .collect();
    format!("{{{}}}", ids.join(","))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let capacity = err.chain().any(|cause| {
                matches!(
                    cause.downcast_ref::<coalitions::Error>(),
                    Some(coalitions::Error::CapacityExceeded { .. })
                )
            });
            ExitCode::from(if capacity { 2 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Scg(a) => cmd_scg(a),
        Command::CheckBounds(a) => cmd_check_bounds(a),
    }
}

fn cmd_solve(a: SolveArgs) -> Result<ExitCode> {
    let (name, g) = a.source.load()?;
    let style: DominationStyle = a.style.into();
    let config = SolveConfig {
        exact_limit: a.limit,
        workers: a.workers,
    };
    let result = solve_with(&g, style, &config)?;

    if let Some(path) = &a.witness_out {
        match &result.witness {
            Some(w) => fs::write(path, w.to_block_lines())
                .with_context(|| format!("writing {}", path.display()))?,
            None => bail!("no witness to write: the maximum is 0"),
        }
    }

    if a.json {
        println!(
            "{}",
            serde_json::to_string(&SolveRecord::new(&name, style, &result))?
        );
    } else {
        println!(
            "graph: {name} ({} vertices, {} edges)",
            g.n(),
            g.edge_count()
        );
        println!("style: {style}");
        println!("value: {}", result.value);
        println!("certified: {}", result.certified);
        println!("nodes explored: {}", result.nodes_explored);
        println!("elapsed: {} ms", result.wall_time.as_millis());
        match &result.witness {
            Some(w) => {
                println!("witness blocks, one per line, 1-based:");
                print!("{}", w.to_block_lines());
            }
            None => println!("witness: none (no valid partition exists)"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(a: TableArgs) -> Result<ExitCode> {
    let mut rows: Vec<(String, Family)> = Vec::new();
    match a.family {
        TableFamily::Paths | TableFamily::Cycles => {
            let floor = if matches!(a.family, TableFamily::Paths) {
                1
            } else {
                3
            };
            let min = a.min.unwrap_or(floor);
            let max = a.max.context("--max is required for paths and cycles")?;
            if min < floor || min > max {
                bail!("range {min}..={max} is empty or starts below {floor}");
            }
            if max > a.limit {
                return Err(coalitions::Error::CapacityExceeded {
                    order: max,
                    limit: a.limit,
                }
                .into());
            }
            for n in min..=max {
                let fam = match a.family {
                    TableFamily::Paths => Family::Path(n),
                    _ => Family::Cycle(n),
                };
                rows.push((n.to_string(), fam));
            }
        }
        TableFamily::CompleteBipartite => {
            let rmax = a
                .rmax
                .context("--rmax is required for complete_bipartite")?;
            if rmax < 1 {
                bail!("--rmax must be at least 1");
            }
            if 2 * rmax > a.limit {
                return Err(coalitions::Error::CapacityExceeded {
                    order: 2 * rmax,
                    limit: a.limit,
                }
                .into());
            }
            for r in 1..=rmax {
                for s in 1..=r {
                    rows.push((format!("{r},{s}"), Family::CompleteBipartite(r, s)));
                }
            }
        }
    }

    let config = SolveConfig {
        exact_limit: a.limit,
        workers: 1,
    };
    println!("{:>6}  {:>5}  {:>6}  match", "param", "value", "oracle");
    let mut mismatches = 0usize;
    for (label, fam) in &rows {
        let g = generate(fam)?;
        let value = solve_with(&g, DominationStyle::Strong, &config)?.value;
        let (oracle_text, marker) = match sc_oracle(fam).value() {
            Some(o) if o == value => (o.to_string(), "yes"),
            Some(o) => {
                mismatches += 1;
                (o.to_string(), "NO")
            }
            None => ("-".to_string(), "-"),
        };
        println!("{label:>6}  {value:>5}  {oracle_text:>6}  {marker}");
    }
    if mismatches > 0 {
        eprintln!("{mismatches} row(s) disagree with the closed form");
        return Ok(ExitCode::from(1));
    }
    println!("all rows match");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let (name, g) = a.source.load()?;
    let text = fs::read_to_string(&a.partition)
        .with_context(|| format!("reading {}", a.partition.display()))?;
    let partition = Partition::parse(&text, g.n())?;
    let style: DominationStyle = a.style.into();
    let review = validate_partition(&g, &partition, style)?;

    println!(
        "graph: {name} ({} vertices, {} edges)",
        g.n(),
        g.edge_count()
    );
    println!("style: {style}");
    for v in &review.verdicts {
        let partners = if v.partners.is_empty() {
            "none".to_string()
        } else {
            v.partners
                .iter()
                .map(|i| format!("V{}", i + 1))
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!(
            "block V{} = {}: {}, partners: {partners}",
            v.block_index + 1,
            block_text(&partition, v.block_index),
            v.status.as_str()
        );
    }
    println!("valid: {}", if review.valid { "yes" } else { "no" });
    Ok(if review.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_scg(a: ScgArgs) -> Result<ExitCode> {
    let (name, g) = a.source.load()?;
    let text = fs::read_to_string(&a.partition)
        .with_context(|| format!("reading {}", a.partition.display()))?;
    let partition = Partition::parse(&text, g.n())?;
    let cg = build_scg(&g, &partition, a.style.into())?;
    let dot = export_dot(&cg);
    fs::write(&a.out, &dot).with_context(|| format!("writing {}", a.out.display()))?;
    println!(
        "graph: {name} ({} vertices, {} edges)",
        g.n(),
        g.edge_count()
    );
    println!("blocks: {}", cg.vertex_count());
    println!("edges: {}", cg.edges().len());
    println!("wrote {}", a.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_check_bounds(a: CheckBoundsArgs) -> Result<ExitCode> {
    let picked = [a.gen.is_some(), a.file.is_some(), a.random.is_some()]
        .iter()
        .filter(|b| **b)
        .count();
    if picked != 1 {
        bail!("pass exactly one of --gen, --file, --random");
    }

    let mut graphs: Vec<(String, Graph)> = Vec::new();
    if let Some(count) = a.random {
        let n = a.n.context("--random needs --n")?;
        let seed = a
            .seed
            .context("--random needs --seed so runs are reproducible")?;
        if n < 4 {
            bail!(
                "--n must be at least 4: smaller connected graphs always have a universal vertex"
            );
        }
        if n > a.limit {
            return Err(coalitions::Error::CapacityExceeded {
                order: n,
                limit: a.limit,
            }
            .into());
        }
        if !(0.0..=1.0).contains(&a.p) {
            bail!("--p must lie in [0, 1]");
        }
        let mut sampler = GraphSampler::new(seed);
        for i in 0..count {
            let g = sampler.connected_no_universal(n, a.p);
            graphs.push((format!("random:{n}:p={}:seed={seed}:{i}", a.p), g));
        }
    } else {
        let source = SourceArgs {
            gen: a.gen.clone(),
            file: a.file.clone(),
        };
        graphs.push(source.load()?);
    }

    let config = SolveConfig {
        exact_limit: a.limit,
        workers: 1,
    };
    let mut violations = 0usize;
    for (name, g) in &graphs {
        violations += check_bounds_on(name, g, &config, a.json)?;
    }
    if a.json {
        eprintln!("violations: {violations}");
    } else {
        println!("violations: {violations}");
    }
    Ok(if violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Runs every applicable bound check against the solved value, printing one
/// line per check. Returns the number of violated non-informational checks.
fn check_bounds_on(name: &str, g: &Graph, config: &SolveConfig, json: bool) -> Result<usize> {
    let style = DominationStyle::Strong;
    let stats = degree_stats(g);
    let result = solve_with(g, style, config)?;

    if json {
        println!(
            "{}",
            serde_json::to_string(&SolveRecord::new(name, style, &result))?
        );
    } else {
        println!(
            "graph: {name} ({} vertices, {} edges)",
            g.n(),
            g.edge_count()
        );
        println!(
            "  value = {}, certified: {}",
            result.value, result.certified
        );
    }

    let mut violations = 0usize;
    let mut check = |ok: bool, text: String| {
        if !ok {
            violations += 1;
        }
        if !json {
            println!("  [{}] {text}", if ok { "ok" } else { "VIOLATION" });
        }
    };

    if family_f_member(g) {
        check(
            result.value == 0,
            format!(
                "universal-vertex exclusion: value {} must be 0",
                result.value
            ),
        );
    }

    if stats.universal_vertices.is_empty() {
        let d = domatic(g, style).value;
        let refined = construct_from_domatic(g)?;
        let review = validate_partition(g, &refined, style)?;
        check(
            result.value >= 2 * d && review.valid && refined.len() >= 2 * d,
            format!(
                "domatic refinement lower bound: {} >= 2*{}, constructed {} blocks, valid: {}",
                result.value,
                d,
                refined.len(),
                review.valid
            ),
        );
        check(
            result.value >= 2,
            format!("two-block minimum: {} >= 2", result.value),
        );
    }

    if let Some(w) = &result.witness {
        let mut max_partners = 0usize;
        for i in 0..w.len() {
            max_partners = max_partners.max(coalition_partner_count(g, w, i, style)?);
        }
        check(
            max_partners <= stats.max_degree + 1,
            format!(
                "partner cap: max partners {max_partners} <= max degree + 1 = {}",
                stats.max_degree + 1
            ),
        );
    }

    if stats.min_degree == 1 {
        check(
            result.value <= 2 + 2 * stats.max_degree,
            format!(
                "leaf upper bound: {} <= 2 + 2*{}",
                result.value, stats.max_degree
            ),
        );
    }

    // Informational only: value <= (number of dominating sets) + 1 when the
    // maximum degree is unique and below n - 1. Never counts as a violation.
    let max_count = (0..g.n())
        .filter(|&v| g.degree(v) == stats.max_degree)
        .count();
    if max_count == 1 && stats.max_degree + 2 <= g.n() && g.n() <= DEFAULT_EXACT_LIMIT {
        let r = count_all_sds(g, style)?;
        let bound = r + 1;
        let note = if (result.value as u64) <= bound {
            ""
        } else {
            ", exceeded (informational)"
        };
        if !json {
            println!(
                "  [info] dominating-set count bound: {} <= {bound} ({r} sets + 1){note}",
                result.value
            );
        }
    }

    Ok(violations)
}
