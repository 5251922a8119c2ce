use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stablepd::corpus::{self, CorpusReport};
use stablepd::decomposition::Decomposition;
use stablepd::expr::{parse_ideal, parse_prime, parse_prime_list};
use stablepd::polymatroidal::{
    component_graph, transversal_ideal, transversal_pd, transversal_stability, veronese, veronese_pd,
};
use stablepd::{betti_table, localize, Error, MonomialIdeal, Mode, Ring, StabilityChecker, TransversalSpec, VeroneseParams};

#[derive(Parser)]
#[command(name = "stablepd", version, about = "Homological invariants and stable projective dimension of monomial ideals")]
struct Cli {
    /// Ring declaration, e.g. `x,y,z,u` or `x1..x4`.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Examine every prime instead of stopping at the first witness.
    #[arg(long, global = true)]
    exhaustive: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Ideal expression; `-` reads standard input. May start with a `ring ...;` header.
    expr: Option<String>,
    /// Read the expression from a file instead.
    #[arg(long, short, conflicts_with = "expr")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// pd S/I.
    Pd(Input),
    /// depth S/I.
    Depth(Input),
    /// dim S/I.
    Dim(Input),
    /// Betti table of S/I.
    Betti(Input),
    /// Irreducible components, one per line.
    Decompose(Input),
    /// Associated primes.
    Ass(Input),
    /// Minimal primes.
    Min(Input),
    /// Monomial localization I(p) in S(p).
    Localize {
        #[command(flatten)]
        input: Input,
        /// Variables of the prime, e.g. `x1,x2,x3`.
        #[arg(long)]
        at: String,
    },
    /// Stable projective dimension test.
    Stable(Input),
    /// Full report: stability over every prime plus the Cohen-Macaulay predicates.
    Classify(Input),
    /// Veronese-type ideal I_(d; a_1..a_n).
    Veronese {
        #[arg(long)]
        d: u32,
        /// Comma separated bounds a_1,...,a_n.
        #[arg(long, value_delimiter = ',', required = true)]
        bounds: Vec<u32>,
        #[arg(value_enum, default_value_t = Op::Show)]
        op: Op,
    },
    /// Transversal ideal p_1 ⋯ p_r.
    Transversal {
        /// Primes separated by `|`, e.g. `x1,x2,x3|x1,x4`.
        #[arg(long)]
        primes: String,
        #[arg(value_enum, default_value_t = Op::Show)]
        op: Op,
    },
    /// Run fixture files (JSON lines); the bundled corpus when none are given.
    Corpus { files: Vec<PathBuf> },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Show,
    Pd,
    Depth,
    Dim,
    Betti,
    Decompose,
    Ass,
    Min,
    Stable,
    Classify,
}

enum Failure {
    Usage(String),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion(msg)) => {
            eprintln!("stablepd: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("stablepd: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let mode = if cli.exhaustive { Mode::Exhaustive } else { Mode::ShortCircuit };
    match &cli.command {
        Command::Pd(i) => apply(cli, Op::Pd, &read_ideal(cli, i)?, mode),
        Command::Depth(i) => apply(cli, Op::Depth, &read_ideal(cli, i)?, mode),
        Command::Dim(i) => apply(cli, Op::Dim, &read_ideal(cli, i)?, mode),
        Command::Betti(i) => apply(cli, Op::Betti, &read_ideal(cli, i)?, mode),
        Command::Decompose(i) => apply(cli, Op::Decompose, &read_ideal(cli, i)?, mode),
        Command::Ass(i) => apply(cli, Op::Ass, &read_ideal(cli, i)?, mode),
        Command::Min(i) => apply(cli, Op::Min, &read_ideal(cli, i)?, mode),
        Command::Stable(i) => apply(cli, Op::Stable, &read_ideal(cli, i)?, mode),
        Command::Classify(i) => apply(cli, Op::Classify, &read_ideal(cli, i)?, Mode::Exhaustive),
        Command::Localize { input, at } => {
            let ideal = read_ideal(cli, input)?;
            let prime = parse_prime(at, ideal.ring())?;
            let local = localize(&ideal, &prime)?;
            if cli.json {
                emit(json!({
                    "prime": prime.to_string(),
                    "ring": local.ring().names(),
                    "ideal": local.ideal().to_string(),
                }));
            } else {
                println!("ring: {}", local.ring());
                println!("ideal: {}", local.ideal());
            }
            Ok(())
        }
        Command::Veronese { d, bounds, op } => run_veronese(cli, *d, bounds.clone(), *op, mode),
        Command::Transversal { primes, op } => run_transversal(cli, primes, *op, mode),
        Command::Corpus { files } => run_corpus(cli, files),
    }
}

/// Splits an optional leading `ring ...;` header from the expression.
fn split_header(text: &str) -> (Option<&str>, &str) {
    let t = text.trim_start();
    if let Some(rest) = t.strip_prefix("ring") {
        if rest.starts_with(char::is_whitespace) {
            if let Some(end) = t.find(';') {
                return (Some(&t[..=end]), &t[end + 1..]);
            }
        }
    }
    (None, text)
}

fn resolve_ring(flag: Option<&str>, header: Option<&str>) -> Result<Ring, Failure> {
    let flag = flag.map(Ring::parse_decl).transpose()?;
    let header = header.map(Ring::parse_decl).transpose()?;
    match (flag, header) {
        (Some(a), Some(b)) if a != b => Err(Failure::Usage(format!("--ring {a} disagrees with header {b}"))),
        (Some(r), _) | (None, Some(r)) => Ok(r),
        (None, None) => Err(Failure::Usage(
            "no ring declared; pass --ring or start the input with `ring ...;`".into(),
        )),
    }
}

fn read_ideal(cli: &Cli, input: &Input) -> Result<MonomialIdeal, Failure> {
    let text = match (&input.expr, &input.file) {
        (_, Some(path)) => {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        (Some(s), None) if s == "-" => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            buf
        }
        (Some(s), None) => s.clone(),
        (None, None) => return Err(Failure::Usage("missing ideal expression".into())),
    };
    let (header, body) = split_header(&text);
    let ring = resolve_ring(cli.ring.as_deref(), header)?;
    Ok(parse_ideal(body, &ring)?)
}

fn emit(v: Value) {
    println!("{}", serde_json::to_string(&v).expect("JSON values serialize"));
}

fn lines<T: ToString>(items: &[T]) {
    for it in items {
        println!("{}", it.to_string());
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn apply(cli: &Cli, op: Op, ideal: &MonomialIdeal, mode: Mode) -> Outcome {
    match op {
        Op::Show => {
            if cli.json {
                emit(json!({ "ring": ideal.ring().names(), "ideal": ideal.to_string() }));
            } else {
                println!("{ideal}");
            }
        }
        Op::Pd | Op::Depth | Op::Dim | Op::Betti => {
            let t = betti_table(ideal)?;
            let (key, value) = match op {
                Op::Pd => ("pd", t.pd_quotient()),
                Op::Depth => ("depth", t.depth_quotient()),
                Op::Dim => ("dim", t.dim_quotient()),
                _ => {
                    if cli.json {
                        emit(serde_json::to_value(&t).expect("table serializes"));
                    } else {
                        println!("{}", t.render());
                    }
                    return Ok(());
                }
            };
            if cli.json {
                emit(json!({ key: value }));
            } else {
                println!("{value}");
            }
        }
        Op::Decompose | Op::Ass | Op::Min => {
            let dec = Decomposition::of(ideal)?;
            let (key, items) = match op {
                Op::Decompose => ("components", strings(dec.components())),
                Op::Ass => ("associated", strings(dec.associated_primes())),
                _ => ("minimal", strings(dec.minimal_primes())),
            };
            if cli.json {
                emit(json!({ key: items }));
            } else {
                lines(&items);
            }
        }
        Op::Stable | Op::Classify => {
            let checker = StabilityChecker::new(ideal)?;
            let mode = if op == Op::Classify { Mode::Exhaustive } else { mode };
            let report = checker.report(mode)?;
            if cli.json {
                let mut v = serde_json::to_value(&report).expect("report serializes");
                if op == Op::Classify {
                    v["equidimensional"] = json!(checker.decomposition().is_equidimensional());
                }
                emit(v);
            } else {
                println!("pd: {}", report.pd);
                println!("depth: {}", report.depth);
                println!("dim: {}", report.dim);
                println!("stable: {}", report.stable);
                match &report.witness {
                    Some(w) => {
                        let pd = report.examined.iter().find(|e| &e.prime == w).map_or(0, |e| e.pd);
                        println!("witness: {w} (localized pd {pd})");
                    }
                    None => println!("witness: none"),
                }
                if mode == Mode::Exhaustive {
                    for e in &report.examined {
                        println!("  {} pd {}", e.prime, e.pd);
                    }
                }
                if op == Op::Classify {
                    println!("cm: {}", report.cm);
                    println!("gcm: {}", report.gcm);
                    println!("unmixed: {}", report.unmixed);
                    println!("equidimensional: {}", checker.decomposition().is_equidimensional());
                    println!("ass_eq_min: {}", report.ass_eq_min);
                }
            }
        }
    }
    Ok(())
}

fn run_veronese(cli: &Cli, d: u32, bounds: Vec<u32>, op: Op, mode: Mode) -> Outcome {
    let n = bounds.len();
    let params = VeroneseParams::new(d, bounds)?;
    let ring = match &cli.ring {
        Some(decl) => Ring::parse_decl(decl)?,
        None => Ring::standard(n)?,
    };
    let ideal = veronese(&params, &ring)?;
    let formula = veronese_pd(&params)?;
    match op {
        Op::Show => {
            if cli.json {
                emit(json!({
                    "params": params.to_string(),
                    "ideal": ideal.to_string(),
                    "pd_formula": formula,
                }));
            } else {
                println!("{ideal}");
                println!("pd formula: {formula}");
            }
            Ok(())
        }
        Op::Pd => {
            apply(cli, op, &ideal, mode)?;
            check_pd(&ideal, formula)
        }
        _ => apply(cli, op, &ideal, mode),
    }
}

fn check_pd(ideal: &MonomialIdeal, formula: usize) -> Outcome {
    let computed = betti_table(ideal)?.pd_quotient();
    if computed == formula {
        Ok(())
    } else {
        Err(Failure::Assertion(format!("closed form gives pd {formula}, homology gives {computed}")))
    }
}

fn run_transversal(cli: &Cli, primes: &str, op: Op, mode: Mode) -> Outcome {
    let decl = cli
        .ring
        .as_deref()
        .ok_or_else(|| Failure::Usage("transversal needs --ring".into()))?;
    let ring = Ring::parse_decl(decl)?;
    let spec = TransversalSpec::new(parse_prime_list(primes, &ring)?)?;
    let ideal = transversal_ideal(&spec)?;
    let verdict = transversal_stability(&spec);
    let formula = transversal_pd(&spec) + 1;
    match op {
        Op::Show => {
            let graph = component_graph(&spec);
            let components: Vec<Vec<usize>> = graph
                .components
                .iter()
                .map(|c| c.iter().map(|v| v + 1).collect())
                .collect();
            if cli.json {
                emit(json!({
                    "ideal": ideal.to_string(),
                    "components": components,
                    "pd_formula": formula,
                    "stable": verdict.stable,
                    "clause": verdict.clause.map(|c| c.tag().to_string()),
                }));
            } else {
                println!("{ideal}");
                println!("factor graph components: {components:?}");
                println!("pd formula: {formula}");
                match verdict.clause {
                    Some(c) => println!("stable: true (clause {})", c.tag()),
                    None => println!("stable: false"),
                }
            }
            Ok(())
        }
        Op::Pd => {
            apply(cli, op, &ideal, mode)?;
            check_pd(&ideal, formula)
        }
        Op::Stable => {
            apply(cli, op, &ideal, mode)?;
            let computed = StabilityChecker::new(&ideal)?.report(Mode::ShortCircuit)?.stable;
            if computed == verdict.stable {
                Ok(())
            } else {
                Err(Failure::Assertion(format!(
                    "closed form says stable = {}, localization says {computed}",
                    verdict.stable
                )))
            }
        }
        _ => apply(cli, op, &ideal, mode),
    }
}

fn run_corpus(cli: &Cli, files: &[PathBuf]) -> Outcome {
    let fixtures = if files.is_empty() {
        corpus::builtin_corpus()
    } else {
        let mut all = Vec::new();
        for f in files {
            all.extend(corpus::load_corpus_file(f)?);
        }
        all
    };
    let report: CorpusReport = corpus::run_fixtures(&fixtures);
    if cli.json {
        emit(serde_json::to_value(&report).expect("report serializes"));
    } else {
        println!("{report}");
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Assertion(format!("{} corpus checks failed", report.failed())))
    }
}
