//! `bottfano`: command-line front end for generalized Bott manifold computations.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use bottfano::fan::{is_fano, primitive_relation};
use bottfano::{
    classification_emit, decide_c1_iso, decide_ring_iso, decide_variety_iso, default_bound,
    enumerate_fano, verify_rigidity, Answer, BoundPolicy, CohomologyRing, Error,
    GeneralizedBottMatrix, IntPolynomial, IsoVerdict, OutputFormat, TwoStageSpec,
};
use clap::{Parser, Subcommand};

const EXIT_USAGE: u8 = 2;
const EXIT_NO: u8 = 3;
const EXIT_UNKNOWN: u8 = 4;

#[derive(Parser)]
#[command(name = "bottfano", version, about = "Fans, Fano tests, cohomology rings and isomorphism checks for generalized Bott manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Primitive relations, their degrees and the Fano verdict.
    Fano {
        spec: String,
        /// Print nothing; exit 0 if Fano, 3 if not.
        #[arg(long)]
        quiet: bool,
    },
    /// Primitive relations only.
    Relations {
        spec: String,
        /// Only the relation of collection J (1-based).
        #[arg(long)]
        j: Option<usize>,
    },
    /// Cohomology ring: relations, additive basis, first Chern class.
    Coh {
        spec: String,
        /// Basis of H^D (D even).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        c1: bool,
        /// Normal form of a polynomial in x1..xm.
        #[arg(long, value_name = "POLY")]
        reduce: Option<String>,
    },
    /// Total Chern class in normal form.
    Chern { spec: String },
    /// Decide isomorphism of two two-stage specs (ring isomorphism by default).
    Iso {
        source: String,
        target: String,
        /// Require the substitution to carry c1 to c1 (inputs must be Fano).
        #[arg(long, conflicts_with = "variety")]
        c1: bool,
        /// Compare canonical forms instead of searching ring isomorphisms.
        #[arg(long)]
        variety: bool,
        /// Entry bound for the substitution search.
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long)]
        json: bool,
        /// Print nothing; exit 0 for yes, 3 for no, 4 for unknown.
        #[arg(long)]
        quiet: bool,
    },
    /// List two-stage Fano towers of one dimension up to isomorphism.
    Enumerate {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
    /// Check c1 rigidity over all enumerated pairs up to a dimension.
    VerifyRigidity {
        #[arg(long)]
        max_dim: usize,
        #[arg(long, default_value = "auto")]
        bound_policy: BoundPolicy,
        #[arg(long)]
        json: bool,
        /// Include wall-clock time per dimension in text output.
        #[arg(long)]
        timing: bool,
    },
}

enum Outcome {
    Text(String),
    Exit(u8),
}

/// Spec arguments are `B(n1;a1,...)`, inline JSON, or a path to a file holding either.
fn load(arg: &str) -> Result<String, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| {
            Error::Parse(bottfano::ParseError {
                line: 1,
                column: 1,
                message: format!("cannot read {}: {e}", path.display()),
            })
        });
    }
    Ok(arg.to_string())
}

fn parse_matrix(arg: &str) -> Result<GeneralizedBottMatrix, Error> {
    let text = load(arg)?;
    if text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(&text)?)
    } else {
        Ok(text.trim().parse::<TwoStageSpec>()?.to_matrix())
    }
}

fn parse_two_stage(arg: &str) -> Result<TwoStageSpec, Error> {
    let text = load(arg)?;
    if text.trim_start().starts_with('{') {
        let gbm: GeneralizedBottMatrix = serde_json::from_str(&text)?;
        TwoStageSpec::try_from(&gbm)
    } else {
        Ok(text.trim().parse()?)
    }
}

fn fano(spec: &str, quiet: bool) -> Result<Outcome, Error> {
    let gbm = parse_matrix(spec)?;
    let report = is_fano(&gbm);
    if quiet {
        return Ok(Outcome::Exit(if report.fano { 0 } else { EXIT_NO }));
    }
    let mut out = String::new();
    for r in &report.relations {
        writeln!(out, "{r}").unwrap();
    }
    writeln!(out, "degrees: {:?}", report.degrees()).unwrap();
    writeln!(out, "fano: {}", if report.fano { "yes" } else { "no" }).unwrap();
    Ok(Outcome::Text(out))
}

fn relations(spec: &str, j: Option<usize>) -> Result<Outcome, Error> {
    let gbm = parse_matrix(spec)?;
    let m = gbm.height();
    let stages: Vec<usize> = match j {
        Some(j) if j == 0 || j > m => return Err(Error::StageIndex { j, m }),
        Some(j) => vec![j - 1],
        None => (0..m).collect(),
    };
    let mut out = String::new();
    for s in stages {
        writeln!(out, "{}", primitive_relation(&gbm, s)?).unwrap();
    }
    Ok(Outcome::Text(out))
}

fn coh(spec: &str, degree: Option<usize>, c1: bool, reduce: Option<&str>) -> Result<Outcome, Error> {
    let gbm = parse_matrix(spec)?;
    let ring = CohomologyRing::new(&gbm);
    let mut out = String::new();
    let everything = degree.is_none() && !c1 && reduce.is_none();
    if everything {
        for (i, r) in ring.relations().iter().enumerate() {
            writeln!(out, "r{} = {r}", i + 1).unwrap();
        }
        writeln!(out, "rank: {}", ring.full_basis().len()).unwrap();
    }
    if let Some(d) = degree {
        let basis = ring.additive_basis(d)?;
        let names: Vec<String> = basis.iter().map(|m| m.to_string()).collect();
        writeln!(out, "H^{d} basis ({}): {}", names.len(), names.join(", ")).unwrap();
    }
    if c1 || everything {
        writeln!(out, "c1 = {}", ring.c1()).unwrap();
    }
    if let Some(p) = reduce {
        let p = IntPolynomial::parse(p, ring.nvars())?;
        writeln!(out, "{}", ring.normal_form(&p)).unwrap();
    }
    Ok(Outcome::Text(out))
}

fn chern(spec: &str) -> Result<Outcome, Error> {
    let gbm = parse_matrix(spec)?;
    Ok(Outcome::Text(format!("{}\n", CohomologyRing::new(&gbm).total_chern())))
}

fn render_verdict(verdict: &IsoVerdict, json: bool) -> Result<String, Error> {
    if json {
        return Ok(serde_json::to_string(verdict)? + "\n");
    }
    let mut out = format!("answer: {}\n", verdict.answer);
    if let Some(w) = &verdict.witness {
        writeln!(out, "witness: {w}").unwrap();
        if verdict.answer == Answer::Yes {
            // Ring isomorphisms between these towers lift to diffeomorphisms.
            writeln!(out, "diffeomorphic: yes (from the ring isomorphism)").unwrap();
        }
    }
    writeln!(out, "certificate: {}", verdict.certificate).unwrap();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn iso(
    source: &str,
    target: &str,
    c1: bool,
    variety: bool,
    bound: Option<i64>,
    json: bool,
    quiet: bool,
) -> Result<Outcome, Error> {
    let (s, t) = (parse_two_stage(source)?, parse_two_stage(target)?);
    let verdict = if c1 {
        decide_c1_iso(&s, &t)?
    } else if variety {
        decide_variety_iso(&s, &t)
    } else {
        decide_ring_iso(&s, &t, bound.unwrap_or_else(|| default_bound(&s, &t)))
    };
    if quiet {
        return Ok(Outcome::Exit(match verdict.answer {
            Answer::Yes => 0,
            Answer::No => EXIT_NO,
            Answer::Unknown => EXIT_UNKNOWN,
        }));
    }
    Ok(Outcome::Text(render_verdict(&verdict, json)?))
}

fn rigidity(max_dim: usize, policy: BoundPolicy, json: bool, timing: bool) -> Result<Outcome, Error> {
    let reports = verify_rigidity(max_dim, policy)?;
    if json {
        return Ok(Outcome::Text(serde_json::to_string_pretty(&reports)? + "\n"));
    }
    let mut out = String::new();
    for r in &reports {
        write!(
            out,
            "d={}: {} pairs, {} agreements, {} counterexamples, max bound {}",
            r.dimension,
            r.pairs_checked,
            r.agreements,
            r.counterexamples.len(),
            r.oracle_bound_used
        )
        .unwrap();
        if timing {
            write!(out, ", {:.3?}", r.elapsed).unwrap();
        }
        out.push('\n');
        for c in &r.counterexamples {
            let witness = c.witness.map_or("none".to_string(), |w| w.to_string());
            writeln!(
                out,
                "  counterexample: {} vs {} (canonical forms {}, witness {witness}, bound {})",
                c.source,
                c.target,
                if c.canonical_equal { "equal" } else { "differ" },
                c.bound
            )
            .unwrap();
        }
    }
    let clean = reports.iter().all(|r| r.counterexamples.is_empty());
    writeln!(out, "rigidity: {}", if clean { "confirmed" } else { "counterexamples found" }).unwrap();
    Ok(Outcome::Text(out))
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Fano { spec, quiet } => fano(&spec, quiet),
        Command::Relations { spec, j } => relations(&spec, j),
        Command::Coh { spec, degree, c1, reduce } => coh(&spec, degree, c1, reduce.as_deref()),
        Command::Chern { spec } => chern(&spec),
        Command::Iso { source, target, c1, variety, bound, json, quiet } => {
            iso(&source, &target, c1, variety, bound, json, quiet)
        }
        Command::Enumerate { dim, format } => {
            Ok(Outcome::Text(classification_emit(&enumerate_fano(dim)?, format)?))
        }
        Command::VerifyRigidity { max_dim, bound_policy, json, timing } => {
            rigidity(max_dim, bound_policy, json, timing)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Exit(code)) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
