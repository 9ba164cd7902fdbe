//! The `curvereg` command line: curve-spec documents in, invariants, Betti
//! tables, secant degrees and verification reports out.

pub mod report;
pub mod spec;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use curvereg::curves::{random_connected_curve, Budget, ComponentKind, Curve};
use curvereg::geometry::{is_extremal_secant, secant_degree, LinearSubspace};
use curvereg::hilbert::{hilbert_polynomial, hilbert_series};
use curvereg::resolution::{min_free_resolution, minimal_generators, regularity, ModuleKind};
use curvereg::verify::{check_main_theorem, check_mincur, error_report, mix_seed, run_job, suite_jobs, CheckReport};
use curvereg::{Field, PrimeField, Rationals};
use rayon::prelude::*;
use serde_json::json;

use spec::{parse_spec, CurveSpecDocument, FieldSpec};

#[derive(Parser, Debug)]
#[command(name = "curvereg", version, about = "Regularity, spans and Betti tables of projective curves")]
pub struct Cli {
    /// Coefficient field: a prime below 2^31 or `rational`. Overrides the
    /// field of a spec document.
    #[arg(long, global = true)]
    pub field: Option<FieldSpec>,
    /// Seed for seeded suites and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Table)]
    pub emit: Emit,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Table,
    Jsonl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Module {
    Quotient,
    Ideal,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the curve and list its components and ideal.
    Build { spec: PathBuf },
    /// Degree, span, Ξ, regularity and Hilbert data.
    Invariants { spec: PathBuf },
    /// Graded Betti table of S/I_C or of I_C.
    Betti {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Module::Quotient)]
        module: Module,
    },
    /// reg(I_C) against Ξ(C).
    Reg { spec: PathBuf },
    /// Secant degree of a line or linear subspace, and whether it is extremal.
    Secant {
        spec: PathBuf,
        /// Two points, each `eK` or colon-separated coordinates, e.g. `e0,1:0:2:0:0`.
        #[arg(long, conflicts_with = "forms", required_unless_present = "forms")]
        line: Option<String>,
        /// Semicolon-separated linear forms cutting out the subspace.
        #[arg(long)]
        forms: Option<String>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Regularity bound on seeded random connected curves.
    Fuzz {
        /// Bound on the total degree of each curve.
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_components: usize,
        #[arg(long, default_value_t = 6)]
        max_ambient: usize,
    },
}

/// Runs the command line and returns the exit status: 0 when every check
/// passed or was inapplicable, 1 when a check failed, 2 on usage, input or
/// computation errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

type Outcome = Result<(String, i32), String>;

fn read_spec(path: &PathBuf) -> Result<CurveSpecDocument, String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    parse_spec(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Runs `$body` with `$f` bound to the field named by `$spec`.
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            FieldSpec::Prime(p) => {
                let $f = PrimeField::new(p.get()).map_err(|e| e.to_string())?;
                $body
            }
            FieldSpec::Rational => {
                let $f = Rationals;
                $body
            }
        }
    };
}

fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Verify { suite } => {
            let fs = cli.field.unwrap_or_default();
            with_field!(fs, f => verify(&f, suite, cli.seed, cli.emit))
        }
        Command::Fuzz { max_degree, count, max_components, max_ambient } => {
            let fs = cli.field.unwrap_or_default();
            let budget = Budget { max_components: *max_components, max_degree: *max_degree, max_ambient: *max_ambient };
            with_field!(fs, f => fuzz(&f, budget, *count, cli.seed, cli.emit))
        }
        Command::Build { spec } | Command::Invariants { spec } | Command::Betti { spec, .. } | Command::Reg { spec } | Command::Secant { spec, .. } => {
            let doc = read_spec(spec)?;
            let fs = cli.field.unwrap_or(doc.field);
            with_field!(fs, f => {
                let curve = doc.build(f).map_err(|e| format!("{}: {e}", spec.display()))?;
                on_curve(cli, &curve)
            })
        }
    }
}

fn on_curve<F: Field>(cli: &Cli, c: &Curve<F>) -> Outcome {
    let e = |x: curvereg::Error| x.to_string();
    let jsonl = cli.emit == Emit::Jsonl;
    let text = match &cli.command {
        Command::Build { .. } => build_text(c, jsonl).map_err(e)?,
        Command::Invariants { .. } => invariants_text(c, jsonl).map_err(e)?,
        Command::Betti { module, .. } => {
            let kind = if *module == Module::Ideal { ModuleKind::Ideal } else { ModuleKind::Quotient };
            let table = min_free_resolution(c.ideal(), kind).map_err(e)?.betti_table();
            if jsonl {
                let entries: Vec<[i64; 3]> = table.entries().map(|(i, j, b)| [i as i64, j, b as i64]).collect();
                line(json!({"betti": entries, "regularity": table.regularity()}))
            } else {
                table.render()
            }
        }
        Command::Reg { .. } => {
            let reg = regularity(c.ideal()).map_err(e)?;
            let xi = c.xi().map_err(e)?.xi;
            if jsonl {
                line(json!({"reg": reg, "xi": xi, "maximal": reg == xi}))
            } else {
                format!("reg(I_C) = {reg}, Ξ = {xi}, maximal: {}\n", yes(reg == xi))
            }
        }
        Command::Secant { line: pts, forms, .. } => {
            let lambda = match (pts, forms) {
                (Some(p), _) => parse_line(c, p)?,
                (None, Some(fs)) => {
                    let forms: Vec<_> = fs.split(';').map(|s| c.ring().parse(s.trim())).collect::<Result<_, _>>().map_err(e)?;
                    LinearSubspace::from_forms(c.ring(), &forms).map_err(e)?
                }
                (None, None) => return Err("give --line or --forms".into()),
            };
            secant_text(c, &lambda, jsonl).map_err(e)?
        }
        Command::Verify { .. } | Command::Fuzz { .. } => unreachable!("handled without a spec"),
    };
    Ok((text, 0))
}

fn line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn kind_name(k: ComponentKind) -> &'static str {
    match k {
        ComponentKind::Line => "line",
        ComponentKind::RationalNormal { .. } => "rational normal curve",
        ComponentKind::PlaneCurve { .. } => "plane curve",
    }
}

fn build_text<F: Field>(c: &Curve<F>, jsonl: bool) -> curvereg::Result<String> {
    let gens: Vec<String> = c.ideal().gens().iter().map(|g| g.render()).collect();
    let n = c.ring().nvars() - 1;
    let field = c.ring().field().name();
    if jsonl {
        let comps: Vec<_> = c
            .components()
            .iter()
            .map(|k| json!({"label": k.label(), "kind": k.kind(), "degree": k.degree(), "span_dim": k.span().dim()}))
            .collect();
        return Ok(line(json!({"ambient": n, "field": field, "components": comps, "edges": c.edges(), "connected": c.is_connected(), "ideal": gens})));
    }
    let mut s = format!("P^{n} over {field}, {} components, connected: {}\n", c.components().len(), yes(c.is_connected()));
    for (i, k) in c.components().iter().enumerate() {
        s += &format!("  [{i}] {}: {}, degree {}, span dim {}\n", k.label(), kind_name(k.kind()), k.degree(), k.span().dim());
    }
    let edges: Vec<String> = c.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    s += &format!("meeting pairs: {}\n", if edges.is_empty() { "none".into() } else { edges.join(" ") });
    s += &format!("ideal ({} generators):\n", gens.len());
    for g in gens {
        s += &format!("  {g}\n");
    }
    Ok(s)
}

fn invariants_text<F: Field>(c: &Curve<F>, jsonl: bool) -> curvereg::Result<String> {
    let xi = c.xi()?;
    let reg = regularity(c.ideal())?;
    let hp = hilbert_polynomial(c.ideal())?.render();
    let hs = hilbert_series(c.ideal())?.render_reduced();
    let mut gen_degrees: Vec<u32> = minimal_generators(c.ideal())?.iter().filter_map(|g| g.degree()).collect();
    gen_degrees.sort_unstable();
    if jsonl {
        return Ok(line(json!({
            "degree": xi.degree, "span_dim": xi.span_dim, "xi": xi.xi, "reg": reg, "maximal": reg == xi.xi,
            "connected": c.is_connected(), "tree": c.is_tree(), "components": c.components().len(),
            "hilbert_polynomial": hp, "hilbert_series": hs, "generator_degrees": gen_degrees,
        })));
    }
    let degs: Vec<String> = gen_degrees.iter().map(|d| d.to_string()).collect();
    Ok(format!(
        "degree: {}\nspan dim: {}\nΞ: {}\nreg(I_C): {reg}\nmaximal: {}\nconnected: {}\ntree: {}\ncomponents: {}\nhilbert polynomial: {hp}\nhilbert series: {hs}\ngenerator degrees: {}\n",
        xi.degree,
        xi.span_dim,
        xi.xi,
        yes(reg == xi.xi),
        yes(c.is_connected()),
        yes(c.is_tree()),
        c.components().len(),
        degs.join(" ")
    ))
}

fn parse_point<F: Field>(c: &Curve<F>, tok: &str) -> Result<Vec<F::Elem>, String> {
    let f = c.ring().field();
    let n = c.ring().nvars();
    let tok = tok.trim();
    if let Some(k) = tok.strip_prefix('e') {
        let k: usize = k.parse().map_err(|_| format!("bad point {tok:?}"))?;
        if k >= n {
            return Err(format!("point {tok} is out of range for P^{}", n - 1));
        }
        return Ok((0..n).map(|i| if i == k { f.one() } else { f.zero() }).collect());
    }
    let xs: Vec<i64> = tok.split(':').map(|x| x.trim().parse().map_err(|_| format!("bad coordinate in {tok:?}"))).collect::<Result<_, _>>()?;
    if xs.len() != n {
        return Err(format!("point {tok} has {} coordinates, expected {n}", xs.len()));
    }
    Ok(xs.into_iter().map(|x| f.from_i64(x)).collect())
}

fn parse_line<F: Field>(c: &Curve<F>, text: &str) -> Result<LinearSubspace<F>, String> {
    let toks: Vec<&str> = text.split(',').collect();
    if toks.len() != 2 {
        return Err(format!("--line takes two points, got {text:?}"));
    }
    let p = parse_point(c, toks[0])?;
    let q = parse_point(c, toks[1])?;
    LinearSubspace::line(c.ring(), &p, &q).map_err(|e| e.to_string())
}

fn secant_text<F: Field>(c: &Curve<F>, lambda: &LinearSubspace<F>, jsonl: bool) -> curvereg::Result<String> {
    let check = is_extremal_secant(c, lambda)?;
    let degree = match check.secant_degree {
        Some(d) => Some(d),
        None => secant_degree(c, lambda).ok(),
    };
    if jsonl {
        return Ok(line(json!({
            "subspace": lambda.render(), "degree": degree, "extremal": check.extremal, "xi": check.xi,
            "section_regularity": check.section_regularity, "diagnostic": check.diagnostic,
        })));
    }
    Ok(match degree {
        Some(d) => format!("degree {d}, extremal: {}\n", yes(check.extremal)),
        None => format!("not finite ({}), extremal: no\n", check.diagnostic.unwrap_or_default()),
    })
}

fn finish(title: String, per_job: Vec<Vec<CheckReport>>, start: Instant, emit: Emit) -> Outcome {
    let reports: Vec<CheckReport> = per_job.into_iter().flatten().collect();
    let code = if report::any_failed(&reports) { 1 } else { 0 };
    let text = match emit {
        Emit::Jsonl => report::jsonl(&reports),
        Emit::Table => report::summary_table(&title, &reports, start.elapsed(), rayon::current_num_threads()),
    };
    Ok((text, code))
}

fn verify<F: Field>(field: &F, suite: &str, seed: u64, emit: Emit) -> Outcome {
    let jobs = suite_jobs(suite, seed).map_err(|e| e.to_string())?;
    let start = Instant::now();
    // collect() keeps job order, so output does not depend on scheduling
    let per_job: Vec<Vec<CheckReport>> = jobs.par_iter().map(|j| run_job(field, j)).collect();
    let title = format!("suite {suite}, seed {seed}, {}: {} jobs", field.name(), jobs.len());
    finish(title, per_job, start, emit)
}

fn fuzz<F: Field>(field: &F, budget: Budget, count: usize, seed: u64, emit: Emit) -> Outcome {
    let start = Instant::now();
    let per_job: Vec<Vec<CheckReport>> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let s = mix_seed(seed, i);
            let label = format!("random curve seed={s}");
            random_connected_curve(field.clone(), s, budget)
                .and_then(|rc| Ok(vec![check_main_theorem(&label, &rc.curve)?, check_mincur(&label, &rc.curve)?]))
                .map(|mut v| {
                    for r in &mut v {
                        r.seed = Some(s);
                    }
                    v
                })
                .unwrap_or_else(|e| vec![error_report("main_theorem", &label, Some(s), &e)])
        })
        .collect();
    let title = format!(
        "fuzz seed {seed}, {}: {count} curves, at most {} components, degree {}, ambient {}",
        field.name(),
        budget.max_components,
        budget.max_degree,
        budget.max_ambient
    );
    finish(title, per_job, start, emit)
}
