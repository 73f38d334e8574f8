use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use dh_cct::cct::{build_cct, find_cct_oracle, is_cct, is_two_one, minimize_witness};
use dh_cct::dh::{enumerate_dh, hhdg_witness, pruning_sequence};
use dh_cct::graph6::{self, Line};
use dh_cct::miner::{
    classify_family, mine_obstructions, verify_catalog, ObstructionFamily, DEFAULT_SEARCH_BOUND,
    EXPECTED_FAMILY_SIZE,
};
use dh_cct::patterns::{contains_induced, NamedPattern};
use dh_cct::{Graph, VertexSet};

#[derive(Parser)]
#[command(
    name = "dh-cct",
    version,
    about = "Clique cycle-transversals in distance-hereditary graphs"
)]
struct Cli {
    /// Worker threads for batch work (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide distance-heredity; print a pruning sequence or a forbidden subgraph.
    Recognize {
        /// graph6 file, or `-` for standard input.
        input: String,
    },
    /// Find a clique cycle-transversal.
    Cct {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Greedily drop witness vertices while the witness stays valid.
        #[arg(long)]
        minimize: bool,
        /// Print the builder's rule trace.
        #[arg(long)]
        trace: bool,
    },
    /// Find a clique meeting every odd cycle.
    TwoOne { input: String },
    /// List distance-hereditary graphs up to isomorphism.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mine the minimal distance-hereditary graphs without a cct.
    Mine {
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the characterization and the builder over all graphs up to `max_n`.
    Verify {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// Family file written by `mine`; mined on the fly when absent.
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Count cograph and non-(2,1) members of a family.
    Classify {
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Print a named pattern (house, gem, domino, C5, P4, K3, 2K3, ...) as graph6.
    Patterns { name: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Builder,
    Both,
}

/// Failure with its exit code: 1 for usage and input errors (message to
/// stderr), 2 for mismatches (report to stdout).
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(1, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let (code, out, err) = match run(cli.command) {
        Ok(out) => (0, out, None),
        Err(Failure(2, report)) => (2, report, None),
        Err(Failure(code, msg)) => (code, String::new(), Some(msg)),
    };
    let mut stdout = io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(1);
    }
    if let Some(msg) = err {
        eprintln!("error: {msg}");
    }
    ExitCode::from(code)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Recognize { input } => per_graph(&input, recognize),
        Command::Cct {
            input,
            method,
            minimize,
            trace,
        } => {
            let mut disagreements = 0;
            let out = per_graph_counted(
                &input,
                |g| cct(g, method, minimize, trace),
                &mut disagreements,
            )?;
            if disagreements > 0 {
                return Err(Failure(
                    2,
                    format!("{out}# {disagreements} disagreements between oracle and builder\n"),
                ));
            }
            Ok(out)
        }
        Command::TwoOne { input } => per_graph(&input, two_one),
        Command::Enumerate { max_n, out } => {
            let catalog = enumerate_dh(max_n)?;
            let mut text = String::new();
            for c in catalog.iter() {
                writeln!(text, "{}", c.canonical).unwrap();
            }
            let counts: Vec<String> = (1..=max_n)
                .map(|n| catalog.order(n).len().to_string())
                .collect();
            eprintln!("classes per order: {}", counts.join(" "));
            emit(text, out)
        }
        Command::Mine { max_n, out } => {
            let family = mine_obstructions(max_n)?;
            let text = family.to_graph6_file();
            let printed = emit(text.clone(), out)?;
            if max_n >= DEFAULT_SEARCH_BOUND && family.len() != EXPECTED_FAMILY_SIZE {
                return Err(Failure(
                    2,
                    format!(
                        "{text}# mined {} obstructions, expected {EXPECTED_FAMILY_SIZE}\n",
                        family.len()
                    ),
                ));
            }
            Ok(printed)
        }
        Command::Verify { max_n, family } => {
            let family = load_family(family, max_n.max(DEFAULT_SEARCH_BOUND))?;
            let catalog = enumerate_dh(max_n)?;
            let summary = verify_catalog(&catalog, max_n, &family)?;
            let out = format!("{summary}\n");
            if summary.mismatches() > 0 {
                return Err(Failure(2, out));
            }
            Ok(out)
        }
        Command::Classify { family } => {
            let family = load_family(family, DEFAULT_SEARCH_BOUND)?;
            let catalog = enumerate_dh(family.search_bound)?;
            let report = classify_family(&family, &catalog)?;
            let out = format!("{}\n", report.summary());
            if !report.cograph_crosscheck {
                return Err(Failure(2, out));
            }
            Ok(out)
        }
        Command::Patterns { name } => {
            let pattern: NamedPattern = name.parse()?;
            Ok(format!("{}\n", graph6::emit_string(&pattern.graph())))
        }
    }
}

fn load_family(path: Option<PathBuf>, bound: usize) -> Result<ObstructionFamily, Failure> {
    match path {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure(1, format!("{}: {e}", path.display())))?;
            ObstructionFamily::from_graph6_file(&text)
                .map_err(|(line, e)| Failure(1, format!("{}: line {line}: {e}", path.display())))
        }
        None => Ok(mine_obstructions(bound)?),
    }
}

fn emit(text: String, out: Option<PathBuf>) -> Outcome {
    match out {
        Some(path) => {
            std::fs::write(&path, text)
                .map_err(|e| Failure(1, format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn read_input(input: &str) -> Result<Vec<(usize, Line)>, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure(1, format!("{input}: {e}")))?
    };
    graph6::parse_lines(&text).map_err(|(line, e)| Failure(1, format!("{input}: line {line}: {e}")))
}

/// Per-graph result: output text and whether it counts as a disagreement.
type GraphResult = Result<(String, bool), Failure>;

fn per_graph(input: &str, f: impl Fn(&Graph) -> GraphResult + Sync) -> Outcome {
    let mut ignored = 0;
    per_graph_counted(input, f, &mut ignored)
}

/// Runs `f` on every graph in parallel, keeping comment lines in place.
fn per_graph_counted(
    input: &str,
    f: impl Fn(&Graph) -> GraphResult + Sync,
    flagged: &mut usize,
) -> Outcome {
    let lines = read_input(input)?;
    let results: Vec<Result<(String, bool), Failure>> = lines
        .par_iter()
        .map(|(lineno, line)| match line {
            Line::Comment(c) => Ok((format!("{c}\n"), false)),
            Line::Graph(g) => f(g).map_err(|Failure(code, msg)| {
                Failure(code, format!("{input}: line {lineno}: {msg}"))
            }),
        })
        .collect();
    let mut out = String::new();
    for r in results {
        let (text, flag) = r?;
        out.push_str(&text);
        *flagged += flag as usize;
    }
    Ok(out)
}

fn recognize(g: &Graph) -> GraphResult {
    if g.n() == 0 {
        return Ok(("DH: yes\n".into(), false));
    }
    if let Some(sequence) = pruning_sequence(g)? {
        if sequence.reconstruct() != *g {
            return Err(Failure(
                2,
                "pruning sequence does not rebuild the input".into(),
            ));
        }
        return Ok((format!("DH: yes\n{sequence}\n"), false));
    }
    let witness = hhdg_witness(g)
        .ok_or_else(|| Failure(2, "no pruning sequence and no forbidden subgraph".into()))?;
    let image: VertexSet = witness.embedding.iter().collect();
    let pattern = match witness.kind {
        dh_cct::dh::HhdgKind::Hole(k) => dh_cct::patterns::cycle(k),
        _ => witness.kind.to_string().parse::<NamedPattern>()?.graph(),
    };
    let sub = g.induced_subgraph(image);
    if contains_induced(&sub.graph, &pattern).is_none() || image.len() != pattern.n() {
        return Err(Failure(2, format!("witness {witness} does not verify")));
    }
    Ok((format!("DH: no\n{witness}\n"), false))
}

fn cct(g: &Graph, method: Method, minimize: bool, trace: bool) -> GraphResult {
    let finish = |t: VertexSet| if minimize { minimize_witness(g, t) } else { t };
    let mut out = String::new();
    let oracle = match method {
        Method::Builder => None,
        _ => Some(find_cct_oracle(g).map(finish)),
    };
    let builder = match method {
        Method::Oracle => None,
        _ => {
            let report = build_cct(g)?;
            if trace {
                for entry in report.trace() {
                    writeln!(out, "rule {entry}").unwrap();
                }
            }
            Some(report.witness.map(finish))
        }
    };
    let answer = builder.or(oracle).expect("some method ran");
    if let Some(t) = answer {
        if !is_cct(g, t) {
            return Err(Failure(2, format!("witness {{{t}}} does not verify")));
        }
    }
    let disagree = matches!((oracle, builder), (Some(a), Some(b)) if a.is_some() != b.is_some());
    match answer {
        _ if disagree => writeln!(
            out,
            "DISAGREE oracle={} builder={}",
            show(oracle.flatten()),
            show(builder.flatten())
        ),
        Some(t) => writeln!(out, "{}", labelled("CCT", t)),
        None => writeln!(out, "NONE"),
    }
    .unwrap();
    Ok((out, disagree))
}

fn labelled(label: &str, t: VertexSet) -> String {
    if t.is_empty() {
        label.to_string()
    } else {
        format!("{label} {t}")
    }
}

fn show(t: Option<VertexSet>) -> String {
    t.map_or("NONE".into(), |t| format!("{{{t}}}"))
}

fn two_one(g: &Graph) -> GraphResult {
    Ok(match is_two_one(g) {
        Some(t) => {
            if !g.is_clique(t) || !g.is_bipartite(g.vertices() - t) {
                return Err(Failure(2, format!("witness {{{t}}} does not verify")));
            }
            (format!("{}\n", labelled("TWO-ONE", t)), false)
        }
        None => ("NONE\n".into(), false),
    })
}
