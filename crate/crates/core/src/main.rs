use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gbpkit::io::dot::{gbp_dot, quiver_dot};
use gbpkit::io::dsl::{algebra_source, parse_document, Document};
use gbpkit::io::report::{expand_json, expand_summary, gbp_document, search_json, search_summary};
use gbpkit::simplify::{
    build_simplification, enumerate_labellings, is_coherent, search_simplifications, ClosureMode, SearchOptions,
};
use gbpkit::{Admissibility, BoundPathAlgebra, Error, Limits, VertexPartition};

const USAGE: u8 = 1;

/// Bound path algebras, generalized bound path algebras and their simplifications.
#[derive(Parser)]
#[command(name = "gbpkit", version)]
struct Cli {
    #[command(flatten)]
    limits: LimitArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest nilpotency index tried for cyclic quivers.
    #[arg(long, global = true, default_value_t = 32)]
    nmax: usize,
    /// Largest number of paths held in a truncated path space.
    #[arg(long, global = true, default_value_t = 200_000)]
    path_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every block and report admissibility.
    Check { file: PathBuf },
    /// Expand a gbp block into a bound quiver presentation.
    Expand {
        file: PathBuf,
        #[arg(long)]
        gbp: String,
        #[arg(long)]
        json: bool,
    },
    /// Build the simplification of an algebra over one partition.
    Simplify {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
        /// Blocks separated by `|`, members by `,`; e.g. "1,2|3|4,5,6".
        /// Without it the first non-trivial simplification found is shown.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        dot: bool,
    },
    /// Try every partition of the vertex set.
    Search {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        json: bool,
        /// Read compatibility clause 3 as membership in the generating set.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        sequential: bool,
        /// Try one labelling per orbit of parallel-arrow permutations.
        #[arg(long)]
        orbits: bool,
        #[arg(long, default_value_t = 1024)]
        labelling_cap: usize,
        #[arg(long)]
        partition_cap: Option<usize>,
    },
    /// Dimension of an algebra block.
    Dim {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
    },
    /// Graphviz output for an algebra's quiver or a gbp.
    Dot {
        file: PathBuf,
        #[arg(long)]
        target: String,
        /// Draw the quotient of the reduced quiver instead.
        #[arg(long)]
        partition: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(String, u8), Failure>;

fn load(file: &PathBuf) -> Result<Document, Failure> {
    let src = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    Ok(parse_document(&src)?)
}

fn algebra<'a>(doc: &'a Document, name: &str) -> Result<&'a BoundPathAlgebra, Failure> {
    doc.algebra(name).ok_or_else(|| Failure::Usage(format!("no algebra block named {name}")))
}

fn partition(spec: &str, a: &BoundPathAlgebra) -> Result<VertexPartition, Failure> {
    let p = VertexPartition::parse(spec).map_err(|e| Failure::Usage(e.to_string()))?;
    p.check_covers(a.quiver()).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(p)
}

fn check(doc: &Document, limits: &Limits) -> Outcome {
    let mut out = String::new();
    let mut code = 0;
    for (name, a) in doc.algebras() {
        let line = match a.check_admissible(limits) {
            Ok(Admissibility::Admissible(n)) => format!("admissible, nilpotency witness n = {n}"),
            Ok(Admissibility::NotAdmissible(why)) => {
                code = code.max(3);
                format!("not admissible: {why}")
            }
            Ok(Admissibility::Inconclusive) => {
                code = code.max(4);
                format!("inconclusive up to n = {}", limits.nmax)
            }
            Err(e) => {
                code = code.max(e.exit_code() as u8);
                e.to_string()
            }
        };
        out.push_str(&format!("algebra {name}: {line}\n"));
    }
    for (name, g) in doc.gbps() {
        let diags = g.algebra.validate(limits);
        if diags.is_empty() {
            out.push_str(&format!("gbp {name}: valid\n"));
        } else {
            let inconclusive = diags.iter().all(|d| d.contains("inconclusive"));
            code = code.max(if inconclusive { 4 } else { 3 });
            out.push_str(&format!("gbp {name}: {}\n", diags.join("; ")));
        }
    }
    Ok((out, code))
}

fn simplify(a: &BoundPathAlgebra, name: &str, spec: Option<&str>, dot: bool, limits: &Limits) -> Outcome {
    let g = match spec {
        Some(spec) => {
            let p = partition(spec, a)?;
            if let Err(v) = is_coherent(a.quiver(), &p)? {
                return Err(Error::Incoherent(v.to_string()).into());
            }
            let (labellings, _) = enumerate_labellings(a.quiver(), &p, 1024)?;
            let mut first_err = None;
            let mut found = None;
            for z in &labellings {
                match build_simplification(a, &p, z, limits) {
                    Ok(g) => {
                        found = Some(g);
                        break;
                    }
                    Err(e @ Error::Incompatible(_)) => {
                        first_err.get_or_insert(e);
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            match (found, first_err) {
                (Some(g), _) => g,
                (None, Some(e)) => return Err(e.into()),
                (None, None) => return Err(Error::Internal("no labelling produced".into()).into()),
            }
        }
        None => {
            let opts = SearchOptions { limits: limits.clone(), ..SearchOptions::default() };
            let report = search_simplifications(a, &opts)?;
            match report.results.into_iter().find(|r| !r.trivial) {
                Some(r) => r.gbp,
                None => return Ok((format!("{name}: no non-trivial simplification\n"), 0)),
            }
        }
    };
    let out_name = format!("{name}_simplified");
    let text = if dot { gbp_dot(&out_name, &g) } else { gbp_document(&out_name, &g).to_source() };
    Ok((text, 0))
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits { nmax: cli.limits.nmax, path_cap: cli.limits.path_cap, ..Limits::default() };
    match cli.command {
        Command::Check { file } => check(&load(&file)?, &limits),
        Command::Expand { file, gbp, json } => {
            let doc = load(&file)?;
            let g = doc.gbp(&gbp).ok_or_else(|| Failure::Usage(format!("no gbp block named {gbp}")))?;
            g.algebra.check_valid(&limits)?;
            let e = g.algebra.expand(&limits)?;
            let text = if json {
                expand_json(&gbp, &e)
            } else {
                format!("{}\n{}", expand_summary(&gbp, &e), algebra_source(&format!("{gbp}_expanded"), &e.algebra))
            };
            Ok((text, 0))
        }
        Command::Simplify { file, algebra: name, partition, dot } => {
            let doc = load(&file)?;
            simplify(algebra(&doc, &name)?, &name, partition.as_deref(), dot, &limits)
        }
        Command::Search { file, algebra: name, json, strict, sequential, orbits, labelling_cap, partition_cap } => {
            let doc = load(&file)?;
            let a = algebra(&doc, &name)?;
            let opts = SearchOptions {
                limits,
                labelling_cap,
                partition_cap,
                mode: if strict { ClosureMode::StrictSet } else { ClosureMode::Ideal },
                parallel: !sequential,
                labelling_orbits: orbits,
            };
            let report = search_simplifications(a, &opts)?;
            let text = if json { search_json(&name, &report) } else { search_summary(&name, &report) };
            Ok((text, if report.complete { 0 } else { 4 }))
        }
        Command::Dim { file, algebra: name } => {
            let doc = load(&file)?;
            Ok((format!("{}\n", algebra(&doc, &name)?.dimension(&limits)?), 0))
        }
        Command::Dot { file, target, partition: spec } => {
            let doc = load(&file)?;
            if let Some(a) = doc.algebra(&target) {
                let text = match spec {
                    Some(spec) => {
                        let p = partition(&spec, a)?;
                        let quotient = a.quiver().reduced_quiver(&p)?.quotient_quiver(&p)?;
                        quiver_dot(&target, &quotient)
                    }
                    None => quiver_dot(&target, a.quiver()),
                };
                Ok((text, 0))
            } else if let Some(g) = doc.gbp(&target) {
                Ok((gbp_dot(&target, &g.algebra), 0))
            } else {
                Err(Failure::Usage(format!("no block named {target}")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
