//! Command-line driver. Exit status: 0 ok, 1 a violation or failed check,
//! 2 a usage or input error.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use obstruction_lab::detect::{
    find_c4, find_even_wheel, find_hole, find_prism, find_theta, has_biclique, has_clique, in_class_e, in_class_et,
    Certificate, CertificateReport, Parity, Verdict,
};
use obstruction_lab::harness::{
    init_threads, pipeline_grow, run_suite, sweep_obs51, GrowParams, Source, Suite, SweepReport,
};
use obstruction_lab::ktree::{cone, embed_in_ktree, gen_tdr, random_graph, random_ktree, KTree};
use obstruction_lab::minor::triangle_minor;
use obstruction_lab::predicates::{find_strong_block, verify_witness, BlockSearch, Outcome, Witness, WitnessFile};
use obstruction_lab::{parse_edgelist, parse_graph6, write_graph6, SimpleGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "obstruction-lab",
    version,
    about = "Tools for (C4, theta, prism, even wheel)-free graphs"
)]
struct Cli {
    /// Worker threads for sweeps (falls back to OBSTRUCTION_LAB_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Input file, or "-" for stdin.
    #[arg(default_value = "-")]
    input: PathBuf,
    /// graph6 reads one graph per line; edgelist reads one graph.
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership, optionally also K_t-free, with a certificate on failure.
    Check {
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Searches for one named structure.
    Find {
        #[arg(value_enum)]
        structure: Structure,
        /// Size for clique, biclique and strong-block.
        #[arg(long, default_value_t = 3)]
        size: usize,
        /// Node budget for strong-block.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[command(flatten)]
        input: Input,
    },
    /// The triangle minor: contract z1 z2, keep edges to common neighbors.
    Minor {
        #[arg(long)]
        z1: usize,
        #[arg(long)]
        z2: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Embeds a chordal K_(k+2)-free graph in a k-tree.
    Embed {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Checks a witness or certificate JSON file.
    Verify {
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Runs a named suite and reports JSON.
    Sweep {
        #[arg(value_enum)]
        suite: SuiteName,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// k for the embedding suite.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Run over graph6 lines from this file ("-" for stdin) instead of
        /// enumerating.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Write the JSON report here and print a summary instead.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generates graphs.
    Gen {
        #[command(subcommand)]
        generator: Generator,
    },
    /// Tries to grow an induced copy of a 2-tree.
    Grow {
        /// The target 2-tree: a graph6 line, then k and the elimination order.
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        w: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Structure {
    Hole,
    OddHole,
    EvenHole,
    C4,
    Theta,
    Prism,
    EvenWheel,
    Clique,
    Biclique,
    StrongBlock,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Thm31,
    Thm32,
    EvenHole,
    Embed,
    Obs51,
    C4Necessity,
}

#[derive(Subcommand)]
enum Generator {
    /// F plus a vertex adjacent to everything.
    Cone {
        #[command(flatten)]
        input: Input,
    },
    Tdr {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
    },
    /// Prints the graph6 line, then k and the elimination order.
    KtreeRandom {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        h: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    RandomGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn read_text(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graphs(input: &Input) -> Result<Vec<SimpleGraph>> {
    let text = read_text(&input.input)?;
    match input.format {
        Format::Edgelist => Ok(vec![parse_edgelist(&text)?]),
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .enumerate()
            .map(|(i, l)| parse_graph6(l).with_context(|| format!("line {}", i + 1)))
            .collect(),
    }
}

fn read_one(input: &Input) -> Result<SimpleGraph> {
    let mut gs = read_graphs(input)?;
    if gs.len() != 1 {
        bail!("expected one graph, got {}", gs.len());
    }
    Ok(gs.remove(0))
}

/// Whether any checked graph violated what was asked.
type Violated = bool;

fn run(cli: Cli, out: &mut impl Write) -> Result<Violated> {
    init_threads(cli.threads)?;
    match cli.command {
        Command::Check { t, input } => {
            let class = t.map_or("E".to_string(), |t| format!("E_{t}"));
            let mut violated = false;
            for g in read_graphs(&input)? {
                let verdict = match t {
                    Some(0) => bail!("--t must be at least 1"),
                    Some(t) => in_class_et(&g, t),
                    None => in_class_e(&g),
                };
                match verdict {
                    Verdict::Member => writeln!(out, "{}: member of {class}", write_graph6(&g))?,
                    Verdict::Violation { certificate } => {
                        violated = true;
                        writeln!(
                            out,
                            "{}: not in {class}: {} {}",
                            write_graph6(&g),
                            certificate.kind(),
                            serde_json::to_string(&certificate)?
                        )?;
                    }
                }
            }
            Ok(violated)
        }
        Command::Find {
            structure,
            size,
            budget,
            input,
        } => {
            for g in read_graphs(&input)? {
                find_one(&g, structure, size, budget, out)?;
            }
            Ok(false)
        }
        Command::Minor { z1, z2, input } => {
            for g in read_graphs(&input)? {
                writeln!(out, "{}", write_graph6(&triangle_minor(&g, z1, z2)?.graph))?;
            }
            Ok(false)
        }
        Command::Embed { k, input } => {
            for g in read_graphs(&input)? {
                let (tree, embedding) = embed_in_ktree(&g, k)?;
                writeln!(
                    out,
                    "{}",
                    json!({ "host": write_graph6(&g), "tree": tree, "embedding": embedding })
                )?;
            }
            Ok(false)
        }
        Command::Verify { file } => verify(&read_text(&file)?, out),
        Command::Sweep {
            suite,
            max_n,
            k,
            trials,
            seed,
            input,
            out: path,
        } => {
            let report = sweep(suite, max_n, k, trials, seed, input)?;
            match path {
                Some(p) => {
                    std::fs::write(&p, report.to_json() + "\n").with_context(|| format!("writing {}", p.display()))?;
                    writeln!(
                        out,
                        "{}: {} graphs, {} instances, {} violations, {:.1?}; report in {}",
                        report.name,
                        report.graphs_examined,
                        report.instances_checked,
                        report.violations.len(),
                        report.wall_time,
                        p.display()
                    )?;
                }
                None => writeln!(out, "{}", report.to_json())?,
            }
            Ok(!report.passed())
        }
        Command::Gen { generator } => {
            match generator {
                Generator::Cone { input } => {
                    for g in read_graphs(&input)? {
                        writeln!(out, "{}", write_graph6(&cone(&g)))?;
                    }
                }
                Generator::Tdr { d, r } => writeln!(out, "{}", write_graph6(&gen_tdr(d, r)))?,
                Generator::KtreeRandom { k, h, seed } => {
                    if k == 0 || h < k {
                        bail!("need 1 <= k <= h");
                    }
                    write!(
                        out,
                        "{}",
                        random_ktree(k, h, &mut ChaCha8Rng::seed_from_u64(seed)).to_text()
                    )?;
                }
                Generator::RandomGraph { n, p, seed } => {
                    if !(0.0..=1.0).contains(&p) {
                        bail!("--p must be in [0, 1]");
                    }
                    writeln!(
                        out,
                        "{}",
                        write_graph6(&random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
                    )?;
                }
            }
            Ok(false)
        }
        Command::Grow {
            target,
            t,
            w,
            budget,
            input,
        } => {
            let target = KTree::from_text(&read_text(&target)?)?;
            let g = read_one(&input)?;
            let trace = pipeline_grow(&g, &target, GrowParams { t, w, budget })?;
            writeln!(out, "{}", serde_json::to_string_pretty(&trace)?)?;
            Ok(!trace.succeeded())
        }
    }
}

fn find_one(g: &SimpleGraph, structure: Structure, size: usize, budget: u64, out: &mut impl Write) -> Result<()> {
    let found: Option<Certificate> = match structure {
        Structure::Hole => find_hole(g, Parity::Any, 4),
        Structure::OddHole => find_hole(g, Parity::Odd, 5),
        Structure::EvenHole => find_hole(g, Parity::Even, 4),
        Structure::C4 => find_c4(g),
        Structure::Theta => find_theta(g),
        Structure::Prism => find_prism(g),
        Structure::EvenWheel => find_even_wheel(g),
        Structure::Clique => has_clique(g, size),
        Structure::Biclique => has_biclique(g, size),
        Structure::StrongBlock => {
            match find_strong_block(g, size, budget)? {
                BlockSearch::Found { witness } => {
                    let file = WitnessFile::new(
                        g.clone(),
                        Witness::StrongBlock {
                            k: size,
                            block: witness,
                        },
                    );
                    writeln!(out, "{}", serde_json::to_string(&file)?)?;
                }
                BlockSearch::Absent => writeln!(out, "{}: none", write_graph6(g))?,
                BlockSearch::Inconclusive { expanded } => {
                    writeln!(out, "{}: inconclusive after {expanded} nodes", write_graph6(g))?
                }
            }
            return Ok(());
        }
    };
    match found {
        Some(c) => writeln!(out, "{}", CertificateReport::new(g, c).to_json())?,
        None => writeln!(out, "{}: none", write_graph6(g))?,
    }
    Ok(())
}

fn verify(text: &str, out: &mut impl Write) -> Result<Violated> {
    let value: serde_json::Value = serde_json::from_str(text).context("not JSON")?;
    if value.get("certificate").is_some() {
        let report = CertificateReport::from_json(text)?;
        return Ok(match report.revalidate() {
            Ok(()) => {
                writeln!(out, "ok: {} in {}", report.certificate.kind(), report.host)?;
                false
            }
            Err(e) => {
                writeln!(out, "invalid: {e}")?;
                true
            }
        });
    }
    let file = WitnessFile::from_json(text)?;
    Ok(match verify_witness(&file)? {
        Outcome::Ok => {
            writeln!(out, "ok: {} in {}", file.witness.predicate(), write_graph6(&file.graph))?;
            false
        }
        Outcome::Violated(clause) => {
            writeln!(out, "violated: {} fails {clause:?}", file.witness.predicate())?;
            true
        }
    })
}

fn sweep(
    suite: SuiteName,
    max_n: usize,
    k: usize,
    trials: u64,
    seed: u64,
    input: Option<PathBuf>,
) -> Result<SweepReport> {
    let suite = match suite {
        SuiteName::Obs51 => {
            if input.is_some() {
                bail!("obs51 generates its own hosts; --input does not apply");
            }
            return Ok(sweep_obs51(trials, seed)?);
        }
        SuiteName::Thm31 => Suite::Thm31,
        SuiteName::Thm32 => Suite::Thm32,
        SuiteName::EvenHole => Suite::EvenHoleSubsetE,
        SuiteName::Embed => Suite::Embed(k),
        SuiteName::C4Necessity => Suite::C4Necessity,
    };
    Ok(match input {
        Some(path) => {
            let graphs = read_graphs(&Input {
                input: path,
                format: Format::Graph6,
            })?;
            run_suite(suite, Source::Graphs(&graphs))?
        }
        None => run_suite(suite, Source::Exhaustive(max_n))?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
