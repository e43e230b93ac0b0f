//! `mdlab`: multidegrees, Schubert and binomial edge ideals, generic initial
//! ideals and multigraded closures from the command line.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or input error,
//! 3 desk-scale limits exceeded.

mod json;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use mdlab::binedge::{binomial_edge_ideal, predicted_gin, random_alpha, verify_gb, Graph};
use mdlab::closure::{
    homogenize_ideal, verify_equality_hf, zstar_linear, HomogenizationContext, DEFAULT_DEGREE_CAP,
};
use mdlab::determinantal::{det_multidegree, DetSpec, Route};
use mdlab::groebner::{buchberger, gin, is_borel_fixed, parse_ideal_file, IdealFile, IdealPresentation};
use mdlab::schubert::{
    cdg_diagonal_gb_predicted, cdg_groebner_check, essential_set, is_cs_schubert, is_vexillary, rothe_diagram,
    schubert_polynomial, Permutation,
};
use mdlab::symfunc::{
    enumerate_ssyt, expand_in_monomial_basis, format_monomial_basis, is_symmetric, kostka, schur, Partition,
};
use mdlab::verify::{criterion, run_all, CRITERIA};
use mdlab::{Error, Polynomial, TermOrder};
use serde_json::{json, Map, Value};

#[derive(Parser, Debug)]
#[command(name = "mdlab", version, about = "Exact multigraded invariants of determinantal-type ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timings in JSON output (breaks byte-identical runs).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multidegree of S/I_t(X) for a generic m x n matrix.
    Multidegree {
        #[arg(long)]
        m: u16,
        #[arg(long)]
        n: u16,
        #[arg(long)]
        t: u16,
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
    },
    /// Schur polynomial s_lambda(Z(1..n)).
    Schur {
        /// Partition, e.g. 3,3 or 331.
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Kostka number K_{lambda,mu} and its tableaux.
    Kostka { lambda: String, mu: String },
    /// Schubert determinantal ideals.
    Schubert {
        #[arg(value_enum)]
        action: SchubertAction,
        permutation: String,
    },
    /// Checks the F-set Groebner basis of a binomial edge ideal.
    Binedge {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        trials: usize,
    },
    /// Multigraded generic initial ideal of an ideal file.
    Gin {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        trials: usize,
    },
    /// Multigraded homogenization I^hom of an ideal file.
    Homogenize {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Largest multigraded subideal J* of a linear ideal.
    Zstar {
        #[arg(long)]
        ideal: PathBuf,
        /// Another ideal file to compare J* with.
        #[arg(long)]
        compare: Option<PathBuf>,
        /// Bound on |a| for the Hilbert function comparison.
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        trials: usize,
    },
    /// Runs the acceptance suites: `all` or a criterion number.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Closed,
    Schur,
    Paths,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SchubertAction {
    /// Diagram, essential set, pattern verdicts and Schubert polynomial.
    Analyze,
    /// Whether the CDG generators form a Groebner basis.
    Groebner,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Degrevlex,
}

/// What a command produced: its JSON report, text rendering and whether
/// every verification it ran succeeded.
struct Outcome {
    inputs: Value,
    seed: Option<u64>,
    results: Value,
    text: String,
    ok: bool,
}

enum Failure {
    Library(Error),
    Input { path: PathBuf, error: Error },
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Library(Error::DeskScaleExceeded(_)) | Failure::Input { error: Error::DeskScaleExceeded(_), .. } => 3,
            Failure::Library(Error::NonGeneric) => 1,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Library(e) => format!("error: {e}"),
            Failure::Input {
                path,
                error: Error::Parse { line, column, message },
            } => format!("{}:{line}:{column}: {message}", path.display()),
            Failure::Input { path, error } => format!("{}: {error}", path.display()),
            Failure::Io(path, e) => format!("{}: {e}", path.display()),
        }
    }
}

type Run = Result<Outcome, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load_ideal(path: &Path) -> Result<IdealFile, Failure> {
    parse_ideal_file(&read(path)?).map_err(|error| Failure::Input {
        path: path.to_path_buf(),
        error,
    })
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    read(path)?.parse().map_err(|error| Failure::Input {
        path: path.to_path_buf(),
        error,
    })
}

fn order_of(arg: Option<OrderArg>, file: &IdealFile) -> TermOrder {
    match arg {
        Some(OrderArg::Lex) => TermOrder::lex(),
        Some(OrderArg::Degrevlex) => TermOrder::degrevlex(),
        None => file.order.clone(),
    }
}

fn lines(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| format!("  {p}\n")).collect()
}

fn symmetric_text(p: &Polynomial, n: usize) -> String {
    if is_symmetric(p, n) {
        if let Ok(e) = expand_in_monomial_basis(p, n) {
            return format_monomial_basis(&e);
        }
    }
    p.to_string()
}

fn multidegree(m: u16, n: u16, t: u16, route: RouteArg) -> Run {
    let spec = DetSpec::new(m, n, t)?;
    let routes: Vec<Route> = match route {
        RouteArg::Closed => vec![Route::Closed],
        RouteArg::Schur => vec![Route::Schur],
        RouteArg::Paths => vec![Route::Paths],
        RouteArg::All => Route::ALL.to_vec(),
    };
    let mut results = Map::new();
    let mut text = String::new();
    let mut polys = Vec::new();
    for r in routes {
        let d = det_multidegree(&spec, r)?;
        text += &format!("{:>6}: {}\n", r.name(), d.degree_poly);
        results.insert(r.name().into(), json::polynomial(&d.degree_poly));
        polys.push(d.degree_poly);
    }
    let agree = polys.windows(2).all(|w| w[0] == w[1]);
    let expansion = symmetric_text(&polys[0], n as usize);
    text += &format!("monomial basis: {expansion}\n");
    if !agree {
        text += "routes DISAGREE\n";
    }
    results.insert("monomial_basis".into(), json!(expansion));
    results.insert("routes_agree".into(), json!(agree));
    Ok(Outcome {
        inputs: json!({"m": m, "n": n, "t": t, "route": format!("{route:?}").to_lowercase()}),
        seed: None,
        results: Value::Object(results),
        text,
        ok: agree,
    })
}

fn schur_cmd(lambda: &str, n: usize) -> Run {
    let lambda: Partition = lambda.parse()?;
    let s = schur(&lambda, n);
    let expansion = symmetric_text(&s, n);
    Ok(Outcome {
        inputs: json!({"lambda": lambda.to_string(), "n": n}),
        seed: None,
        text: format!("s_({lambda}) = {s}\n       = {expansion}\n"),
        results: json!({"polynomial": json::polynomial(&s), "monomial_basis": expansion}),
        ok: true,
    })
}

fn kostka_cmd(lambda: &str, mu: &str) -> Run {
    let lambda: Partition = lambda.parse()?;
    let content: Vec<u32> = if mu.contains(',') {
        mu.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()
    } else {
        mu.chars().map(|c| c.to_string().parse()).collect::<Result<_, _>>()
    }
    .map_err(|_| Error::InvalidInput(format!("'{mu}' is not a composition")))?;
    let k = kostka(&lambda, &content)?;
    let tableaux = enumerate_ssyt(&lambda, &content, content.len() as u32)?;
    let mut text = format!("K_({lambda}),({mu}) = {k}\n");
    for t in &tableaux {
        text += &format!("{t}\n\n");
    }
    Ok(Outcome {
        inputs: json!({"lambda": lambda.to_string(), "mu": content}),
        seed: None,
        results: json!({"kostka": k, "tableaux": tableaux.iter().map(|t| t.rows.clone()).collect::<Vec<_>>()}),
        text,
        ok: true,
    })
}

fn cells(c: &std::collections::BTreeSet<(u16, u16)>) -> Value {
    json!(c.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>())
}

fn schubert_cmd(action: SchubertAction, word: &str) -> Run {
    let w: Permutation = word.parse()?;
    let inputs = json!({"permutation": w.to_string()});
    match action {
        SchubertAction::Analyze => {
            let diagram = rothe_diagram(&w);
            let ess = essential_set(&w);
            let s = schubert_polynomial(&w);
            let (vex, cs, cdg) = (is_vexillary(&w), is_cs_schubert(&w), cdg_diagonal_gb_predicted(&w));
            Ok(Outcome {
                inputs,
                seed: None,
                text: format!(
                    "diagram: {diagram:?}\nessential set: {ess:?}\nvexillary: {vex}\ncs: {cs}\ncdg_predicted: {cdg}\nschubert polynomial: {s}\n"
                ),
                results: json!({
                    "diagram": cells(&diagram),
                    "essential_set": cells(&ess),
                    "vexillary": vex,
                    "cs": cs,
                    "cdg_predicted": cdg,
                    "schubert_polynomial": json::polynomial(&s),
                }),
                ok: true,
            })
        }
        SchubertAction::Groebner => {
            let v = cdg_groebner_check(&w)?;
            let predicted = cdg_diagonal_gb_predicted(&w);
            let agrees = v.is_groebner_basis() == predicted;
            Ok(Outcome {
                inputs,
                seed: None,
                text: format!(
                    "CDG generators generate I_w: {}\nleading terms generate in(I_w): {}\nin(I_w) squarefree: {}\nGroebner basis: {} (predicted {predicted})\n",
                    v.generate,
                    v.leading_terms_match,
                    v.initial_squarefree,
                    v.is_groebner_basis()
                ),
                results: json!({
                    "generate": v.generate,
                    "leading_terms_match": v.leading_terms_match,
                    "initial_squarefree": v.initial_squarefree,
                    "groebner_basis": v.is_groebner_basis(),
                    "predicted": predicted,
                }),
                ok: agrees,
            })
        }
    }
}

fn binedge_cmd(path: &Path, seed: u64, trials: usize) -> Run {
    let g = load_graph(path)?;
    let alpha = random_alpha(g.n(), seed);
    let report = verify_gb(&g, &alpha, &TermOrder::lex())?;
    let predicted = predicted_gin(&g);
    let computed = gin(&binomial_edge_ideal(&g), &TermOrder::lex(), trials, seed)?;
    let gin_ok = computed == predicted;
    let ok = report.passed() && gin_ok && predicted.is_squarefree();
    Ok(Outcome {
        inputs: json!({"graph": g.to_string(), "trials": trials}),
        seed: Some(seed),
        text: format!(
            "predicted gin: {predicted}\ncomputed gin: {computed}\nF-set: S-pairs reduce {}, initial ideal matches {}, contained {}\n{}\n",
            report.s_pairs_reduce,
            report.initial_matches,
            report.contained,
            if ok { "verified" } else { "FAILED" }
        ),
        results: json!({
            "predicted_gin": json::monomial_ideal(&predicted),
            "computed_gin": json::monomial_ideal(&computed),
            "s_pairs_reduce": report.s_pairs_reduce,
            "initial_matches": report.initial_matches,
            "contained": report.contained,
            "verified": ok,
        }),
        ok,
    })
}

/// The ideal of a file, homogenized when the file asks for it.
fn effective_ideal(file: &IdealFile) -> Result<IdealPresentation, Failure> {
    if file.homogenize {
        let ctx = HomogenizationContext::new(file.ideal.grading.clone())?;
        Ok(homogenize_ideal(&file.ideal, &ctx)?)
    } else {
        Ok(file.ideal.clone())
    }
}

fn gin_cmd(path: &Path, order: Option<OrderArg>, seed: u64, trials: usize) -> Run {
    let file = load_ideal(path)?;
    let order = order_of(order, &file);
    let ideal = effective_ideal(&file)?;
    let g = gin(&ideal, &order, trials, seed)?;
    let borel = is_borel_fixed(&g, &ideal.grading, &order);
    Ok(Outcome {
        inputs: json!({"ideal": path.display().to_string(), "order": order.to_string(), "trials": trials}),
        seed: Some(seed),
        text: format!("gin: {g}\nsquarefree (Cartwright-Sturmfels): {}\nBorel-fixed: {borel}\n", g.is_squarefree()),
        results: json!({"gin": json::monomial_ideal(&g), "squarefree": g.is_squarefree(), "borel_fixed": borel}),
        ok: borel,
    })
}

fn homogenize_cmd(path: &Path) -> Run {
    let file = load_ideal(path)?;
    let ctx = HomogenizationContext::new(file.ideal.grading.clone())?;
    let hom = homogenize_ideal(&file.ideal, &ctx)?;
    Ok(Outcome {
        inputs: json!({"ideal": path.display().to_string()}),
        seed: None,
        text: format!("I^hom generators:\n{}", lines(&hom.generators)),
        results: json!({"generators": json::polynomials(&hom.generators)}),
        ok: true,
    })
}

fn zstar_cmd(path: &Path, compare: Option<&Path>, cap: u32, seed: u64, trials: usize) -> Run {
    let file = load_ideal(path)?;
    let ctx = HomogenizationContext::new(file.ideal.grading.clone())?;
    let star = zstar_linear(&file.ideal, &ctx)?;
    let contained = buchberger(&file.ideal, &TermOrder::degrevlex())?.contains_all(&star.generators)?;
    let g = gin(&star, &TermOrder::lex(), trials, seed)?;
    let mut text = format!(
        "J* generators:\n{}contained in J: {contained}\ngin(J*): {g}\nsquarefree: {}\n",
        lines(&star.generators),
        g.is_squarefree()
    );
    let mut results = json!({
        "generators": json::polynomials(&star.generators),
        "contained": contained,
        "gin": json::monomial_ideal(&g),
        "squarefree": g.is_squarefree(),
    });
    let mut ok = contained;
    if let Some(other) = compare {
        let b = load_ideal(other)?.ideal;
        let inside = buchberger(&star, &TermOrder::degrevlex())?.contains_all(&b.generators)?;
        let equal_hf = verify_equality_hf(&b, &star, cap)?;
        text += &format!(
            "{} contained in J*: {inside}\nHilbert functions agree for |a| <= {cap}: {equal_hf}\n",
            other.display()
        );
        results["comparison"] = json!({"contained": inside, "hf_equal": equal_hf, "cap": cap});
        ok &= inside && equal_hf;
    }
    Ok(Outcome {
        inputs: json!({
            "ideal": path.display().to_string(),
            "compare": compare.map(|p| p.display().to_string()),
            "cap": cap,
            "trials": trials,
        }),
        seed: Some(seed),
        text,
        results,
        ok,
    })
}

fn verify_cmd(suite: &str, seed: u64) -> Run {
    let reports = if suite == "all" {
        run_all(seed)
    } else {
        let id: u8 = suite
            .parse()
            .ok()
            .filter(|id| criterion(*id).is_some())
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite '{suite}' (all or 1..={})", CRITERIA.len())))?;
        vec![criterion(id).expect("checked above").run(seed)]
    };
    let ok = reports.iter().all(|r| r.passed);
    let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    let results: Vec<Value> = reports
        .iter()
        .map(|r| json!({"id": r.id, "title": r.title, "passed": r.passed, "checks": r.checks, "detail": r.detail}))
        .collect();
    Ok(Outcome {
        inputs: json!({"suite": suite}),
        seed: Some(seed),
        results: Value::Array(results),
        text,
        ok,
    })
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Multidegree { m, n, t, route } => multidegree(*m, *n, *t, *route),
        Command::Schur { lambda, n } => schur_cmd(lambda, *n),
        Command::Kostka { lambda, mu } => kostka_cmd(lambda, mu),
        Command::Schubert { action, permutation } => schubert_cmd(*action, permutation),
        Command::Binedge { graph, seed, trials } => binedge_cmd(graph, *seed, *trials),
        Command::Gin { ideal, order, seed, trials } => gin_cmd(ideal, *order, *seed, *trials),
        Command::Homogenize { ideal } => homogenize_cmd(ideal),
        Command::Zstar {
            ideal,
            compare,
            cap,
            seed,
            trials,
        } => zstar_cmd(ideal, compare.as_deref(), *cap, *seed, *trials),
        Command::Verify { suite, seed } => verify_cmd(suite, *seed),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Multidegree { .. } => "multidegree",
        Command::Schur { .. } => "schur",
        Command::Kostka { .. } => "kostka",
        Command::Schubert { .. } => "schubert",
        Command::Binedge { .. } => "binedge",
        Command::Gin { .. } => "gin",
        Command::Homogenize { .. } => "homogenize",
        Command::Zstar { .. } => "zstar",
        Command::Verify { .. } => "verify",
    }
}

/// Writes to stdout; a closed pipe (`mdlab ... | head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let mut timings = Map::new();
                if cli.timings {
                    timings.insert("total_ms".into(), json!(start.elapsed().as_millis() as u64));
                }
                let report = json::report(command_name(&cli.command), out.inputs, out.seed, out.results, timings);
                emit(&format!("{}\n", serde_json::to_string_pretty(&report).expect("JSON values serialize")));
            } else {
                let seed = out.seed.map(|s| format!("seed: {s}\n")).unwrap_or_default();
                emit(&format!("{seed}{}", out.text));
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("{}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
