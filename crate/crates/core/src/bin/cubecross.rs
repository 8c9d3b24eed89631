//! Command line front end. Exit status: 0 ok, 1 negative answer, 2 error.

use clap::{Args, Parser, Subcommand};
use cubecross::cube::{generate, CubeSpec, Family};
use cubecross::geometry::export_svg;
use cubecross::graph::{is_isomorphic, Graph};
use cubecross::io::{self, DrawingFile, ResultRecord};
use cubecross::lemmas::{check, LemmaId};
use cubecross::solver::{
    cr_upper_bound_seeded, crossing_number_with, Budget, CrOptions, CrResult, DEFAULT_SEED,
};
use cubecross::{Error, Result};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cubecross",
    version,
    about = "Hypercube variants and their crossing numbers"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a cube graph in the text graph format.
    Gen {
        family: Family,
        order: usize,
        #[arg(long, default_value_t = 0)]
        variant: u8,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Test two graph files for isomorphism.
    Iso { a: PathBuf, b: PathBuf },
    /// Run the exhaustive lemma checkers.
    Lemmas {
        family: Option<Family>,
        order: Option<usize>,
        #[arg(long, default_value_t = 0)]
        variant: u8,
        #[arg(long, conflicts_with_all = ["family", "order"])]
        file: Option<PathBuf>,
        /// Lemma tags such as 2.4 or obs4.4; all applicable ones by default.
        #[arg(long = "lemma")]
        lemmas: Vec<String>,
    },
    /// Bound or compute the crossing number of a graph file.
    Cr(CrArgs),
    /// Check a drawing file or a result record.
    Verify {
        file: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CrArgs {
    file: PathBuf,
    /// Fail unless the value is certified exactly.
    #[arg(long, group = "mode")]
    exact: bool,
    /// Heuristic upper bound only.
    #[arg(long, group = "mode")]
    upper: bool,
    /// Certified bracket within the budget (default).
    #[arg(long, group = "mode")]
    bounds: bool,
    /// Wall-clock budget such as 60s or 2h; defaults to $CUBECROSS_BUDGET.
    #[arg(long)]
    budget: Option<String>,
    #[arg(long)]
    nodes: Option<u64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Heuristic restarts.
    #[arg(long, default_value_t = 32)]
    effort: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Result record path; printed to stdout otherwise.
    #[arg(short, long)]
    out: Option<PathBuf>,
    #[arg(long)]
    drawing: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Gen {
            family,
            order,
            variant,
            out,
        } => {
            let g = generate(CubeSpec::new(family, order, variant)?)?;
            match out {
                Some(p) => io::write_graph_file(p, &g)?,
                None => print!("{}", io::graph_to_string(&g)),
            }
            Ok(true)
        }
        Cmd::Iso { a, b } => {
            let (ga, gb) = (io::read_graph_file(a)?, io::read_graph_file(b)?);
            match is_isomorphic(&ga, &gb) {
                Some(map) => {
                    let mut out = String::from("isomorphic\n");
                    for (v, w) in map.as_slice().iter().enumerate() {
                        out.push_str(&format!("{v} -> {w}\n"));
                    }
                    // A closed pipe (`| head`) is not an error.
                    let _ = std::io::stdout().write_all(out.as_bytes());
                    Ok(true)
                }
                None => {
                    println!("not isomorphic");
                    Ok(false)
                }
            }
        }
        Cmd::Lemmas {
            family,
            order,
            variant,
            file,
            lemmas,
        } => {
            let (g, name) = match (file, family, order) {
                (Some(f), _, _) => (io::read_graph_file(&f)?, f.display().to_string()),
                (None, Some(fam), Some(n)) => {
                    let spec = CubeSpec::new(fam, n, variant)?;
                    (generate(spec)?, spec.to_string())
                }
                _ => {
                    return Err(Error::Precondition(
                        "give a family and order, or --file".into(),
                    ))
                }
            };
            run_lemmas(&g, &name, &lemmas)
        }
        Cmd::Cr(args) => run_cr(args),
        Cmd::Verify { file, graph } => {
            let text = std::fs::read_to_string(&file)?;
            let g = graph.map(io::read_graph_file).transpose()?;
            let outcome = if text.contains("\"certificate\"") {
                ResultRecord::from_json(&text)?
                    .verify(g.as_ref())
                    .map(|()| "certificate verified".to_string())
            } else {
                DrawingFile::from_json(&text)?
                    .verify(g.as_ref())
                    .map(|c| format!("good drawing, {c} crossings"))
            };
            match outcome {
                Ok(msg) => {
                    println!("{msg}");
                    Ok(true)
                }
                Err(e) => {
                    println!("invalid: {e}");
                    Ok(false)
                }
            }
        }
    }
}

fn run_lemmas(g: &Graph, name: &str, tags: &[String]) -> Result<bool> {
    let explicit = !tags.is_empty();
    let ids: Vec<LemmaId> = if explicit {
        tags.iter()
            .map(|t| {
                LemmaId::from_tag(t)
                    .ok_or_else(|| Error::Precondition(format!("unknown lemma {t:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        LemmaId::ALL.to_vec()
    };
    let mut all_pass = true;
    for id in ids {
        match check(id, g) {
            Ok(mut r) => {
                r.target = name.to_string();
                println!("{r}");
                all_pass &= r.pass;
            }
            Err(e) if explicit => return Err(e),
            Err(e) => println!("{:<7} skipped: {e}", id.tag()),
        }
    }
    Ok(all_pass)
}

fn run_cr(a: CrArgs) -> Result<bool> {
    let g = io::read_graph_file(&a.file)?;
    let spec = a
        .file
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let time = match a.budget.or_else(|| std::env::var(io::BUDGET_ENV).ok()) {
        Some(s) => Some(io::parse_duration(&s)?),
        None => None,
    };
    let budget = Budget {
        time,
        nodes: a.nodes,
        ..Budget::default()
    }
    .threads(a.threads);
    let (record, drawing) = if a.upper {
        let r = CrResult::upper_only(&g, cr_upper_bound_seeded(&g, a.effort, a.seed)?);
        (ResultRecord::from_result(&spec, &g, &r), r.drawing)
    } else {
        let r = crossing_number_with(
            &g,
            &budget,
            CrOptions {
                effort: a.effort,
                seed: a.seed,
            },
        );
        (ResultRecord::from_result(&spec, &g, &r), r.drawing)
    };
    eprintln!(
        "{spec}: {} <= cr <= {} ({}, lower bound {}, {} nodes, {} ms)",
        record.lower,
        record.upper,
        if record.exact { "exact" } else { "bracket" },
        record.lower_provenance,
        record.nodes,
        record.elapsed_ms
    );
    match &a.out {
        Some(p) => std::fs::write(p, record.to_json())?,
        None => println!("{}", record.to_json()),
    }
    if let Some(d) = &drawing {
        if let Some(p) = &a.drawing {
            std::fs::write(
                p,
                DrawingFile::from_drawing(d, Some(record.upper)).to_json(),
            )?;
        }
        if let Some(p) = &a.svg {
            export_svg(d, p, true)?;
        }
    }
    Ok(!a.exact || record.exact)
}
