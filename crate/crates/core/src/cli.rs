//! Command-line front end. Every command returns an [`Outcome`] so it can be
//! driven from tests without spawning a process.
//!
//! Exit codes: 0 success, 1 a mathematical property failed, 2 bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{debug, info};
use serde_json::{json, Value};

use crate::algebra::AlgebraCtx;
use crate::amodule::AModule;
use crate::error::{Error, Result};
use crate::factorization::{
    mapping_cone, rank_one_scan, standard_triangle, BMatrix, FactMorphism, Factorization,
};
use crate::field::{ExtScalar, FieldSpec, Scalar};
use crate::io;
use crate::random;
use crate::reduction::{
    check_acyclic, image_module, reduce_factorization, reduce_morphism, schulz_complex_check,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "qcimf",
    version,
    about = "Twisted matrix factorizations and modules over a quantum complete intersection"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Ground field for commands that build objects: Q, Fp (with --p) or F<p>.
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Characteristic when --field Fp.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// The parameter q (nonzero).
    #[arg(long, global = true, default_value = "2", allow_hyphen_values = true)]
    pub q: String,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 20240531)]
    pub seed: u64,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the main artifact (object, module or report) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the factorization identities of a file.
    Validate { file: PathBuf },
    /// Build a standard object.
    Construct {
        #[arg(long, value_enum)]
        kind: ConstructKind,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        /// Rank for --kind free.
        #[arg(long, default_value_t = 1)]
        rank: usize,
    },
    /// Reduce modulo w, certify exactness and classify the image module.
    Reduce { file: PathBuf },
    /// Classify a module file.
    Classify { file: PathBuf },
    /// Minimal resolution of a module file.
    Resolve {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long)]
        max_period: Option<usize>,
    },
    /// Run the classification pipeline on canonical objects plus controls.
    TheoremCheck {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// Comma-separated parameters; 0 and inf act as negative controls.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<String>,
        /// Random unit-free objects checked against the rank invariant.
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// The morphism (0, w) on (x + y, x − qy).
    ExampleNonfaithful {
        /// Replace w by 0, turning the example into the zero morphism.
        #[arg(long)]
        zero_control: bool,
    },
    /// Which α admit a rank-one object fixed by x ↦ αx, y ↦ α⁻¹y.
    ScanAlpha {
        /// Values to test over Q (comma-separated); ignored over F_p.
        #[arg(long = "alpha", value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Vec<String>,
    },
    /// The complex of right multiplications by x + (−q)^(n+1) y.
    Schulz {
        #[arg(long, default_value_t = 7)]
        window: usize,
    },
    /// Suspension of a factorization file.
    Suspend { file: PathBuf },
    /// Mapping cone and standard triangle of a morphism file.
    Cone { file: PathBuf },
    /// Decide whether a morphism file is nullhomotopic.
    Homotopy { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ConstructKind {
    /// (x + y, x − qy)
    Basic,
    /// (1, w)
    Trivial,
    /// the object with C = xI + y q⁻¹Jₙ(λ)
    Canonical,
    /// the module C_n(λ)
    Module,
    /// the free module A^rank
    Free,
    /// the simple module k
    Simple,
}

/// Result of a command: exit code, machine report and human text.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
    pub text: String,
}

impl Outcome {
    fn new(ok: bool, report: Value, text: String) -> Self {
        Outcome {
            code: if ok { EXIT_OK } else { EXIT_VIOLATION },
            report,
            text,
        }
    }

    fn from_error(e: &Error) -> Self {
        let code = if e.is_axiom_failure() {
            EXIT_VIOLATION
        } else {
            EXIT_INPUT
        };
        Outcome {
            code,
            report: json!({"ok": false, "error": e.to_string()}),
            text: format!("error: {e}\n"),
        }
    }

    /// What the binary prints.
    pub fn rendered(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.report).expect("report is JSON");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

/// Parse arguments (including the program name) and run.
pub fn run_from<I, T>(args: I) -> (Outcome, bool)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => {
            let json = cli.global.json;
            (run(&cli), json)
        }
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            (
                Outcome {
                    code,
                    report: json!({"ok": code == EXIT_OK, "error": e.to_string()}),
                    text: e.to_string(),
                },
                false,
            )
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Construct {
            kind,
            n,
            lambda,
            rank,
        } => context(g).and_then(|ctx| cmd_construct(&ctx, *kind, *n, lambda, *rank)),
        Command::Reduce { file } => cmd_reduce(file),
        Command::Classify { file } => cmd_classify(file),
        Command::Resolve {
            file,
            steps,
            max_period,
        } => cmd_resolve(file, *steps, *max_period),
        Command::TheoremCheck {
            n_max,
            lambda,
            samples,
        } => context(g).and_then(|ctx| cmd_theorem_check(&ctx, *n_max, lambda, *samples, g.seed)),
        Command::ExampleNonfaithful { zero_control } => {
            context(g).map(|ctx| cmd_example_nonfaithful(&ctx, *zero_control))
        }
        Command::ScanAlpha { alpha } => context(g).and_then(|ctx| cmd_scan_alpha(&ctx, alpha)),
        Command::Schulz { window } => context(g).and_then(|ctx| cmd_schulz(&ctx, *window)),
        Command::Suspend { file } => cmd_suspend(file),
        Command::Cone { file } => cmd_cone(file),
        Command::Homotopy { file } => cmd_homotopy(file),
    };
    let result = result.and_then(|(outcome, artifact)| {
        if let Some(path) = &g.out {
            io::write_json(path, artifact.as_ref().unwrap_or(&outcome.report))?;
            info!("wrote {}", path.display());
        }
        Ok(outcome)
    });
    result.unwrap_or_else(|e| Outcome::from_error(&e))
}

/// An outcome plus an optional artifact for `--out`.
type CmdResult = Result<(Outcome, Option<Value>)>;

pub fn parse_field(name: &str, p: Option<u64>) -> Result<FieldSpec> {
    match name {
        "Q" | "q" | "QQ" | "rationals" => Ok(FieldSpec::Rationals),
        "Fp" | "fp" | "F_p" => {
            let p = p.ok_or_else(|| Error::InvalidParameter("--field Fp needs --p".into()))?;
            FieldSpec::prime(p)
        }
        other => {
            let digits = other
                .strip_prefix("F_")
                .or_else(|| other.strip_prefix('F'))
                .ok_or_else(|| Error::InvalidParameter(format!("unknown field {other:?}")))?;
            let p: u64 = digits
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("unknown field {other:?}")))?;
            FieldSpec::prime(p)
        }
    }
}

fn context(g: &GlobalArgs) -> Result<AlgebraCtx> {
    let field = parse_field(&g.field, g.p)?;
    AlgebraCtx::parse(field, &g.q)
}

fn ctx_json(ctx: &AlgebraCtx) -> Value {
    json!({"field": ctx.field().name(), "q": ctx.q().to_string()})
}

fn cmd_validate(file: &Path) -> CmdResult {
    let raw = io::raw_factorization_from_json(&io::read_json(file)?)?;
    let rank = raw.c.rows();
    let outcome = match raw.validate() {
        Ok(f) => Outcome::new(
            true,
            json!({"ok": true, "rank": rank, "unit_free": f.is_unit_free()}),
            format!("valid factorization of rank {rank}\n"),
        ),
        Err(e) => match &e {
            Error::Axiom {
                identity,
                row,
                col,
                found,
                expected,
            } => Outcome::new(
                false,
                json!({"ok": false, "identity": identity, "row": row, "col": col,
                       "found": found, "expected": expected}),
                format!("invalid: {e}\n"),
            ),
            _ => return Err(e),
        },
    };
    Ok((outcome, None))
}

fn cmd_construct(
    ctx: &AlgebraCtx,
    kind: ConstructKind,
    n: usize,
    lambda: &str,
    rank: usize,
) -> CmdResult {
    let field = ctx.field();
    let artifact = match kind {
        ConstructKind::Basic => io::factorization_to_json(&Factorization::basic(ctx)),
        ConstructKind::Trivial => io::factorization_to_json(&Factorization::trivial(ctx)),
        ConstructKind::Canonical => {
            let l = field.parse(lambda)?;
            io::factorization_to_json(&Factorization::canonical(n, &l, ctx)?)
        }
        ConstructKind::Module => {
            let l = ExtScalar::parse(lambda, field)?;
            io::module_to_json(&AModule::family(n, &l, ctx)?)
        }
        ConstructKind::Free => io::module_to_json(&AModule::free(rank, ctx)),
        ConstructKind::Simple => io::module_to_json(&AModule::simple(ctx)),
    };
    let text = serde_json::to_string_pretty(&artifact)? + "\n";
    Ok((Outcome::new(true, artifact.clone(), text), Some(artifact)))
}

fn class_json(m: &AModule) -> (Value, String) {
    match m.classify() {
        Ok(r) => (r.to_json(), r.to_string()),
        Err(e) => (
            json!({"outside_family": e.to_string(), "free_rank": e.free_rank}),
            e.to_string(),
        ),
    }
}

fn cmd_reduce(file: &Path) -> CmdResult {
    let f = io::read_factorization(file)?;
    let red = reduce_factorization(&f);
    let acyc = check_acyclic(&f);
    let img = image_module(&f);
    let (class, class_text) = class_json(&img);
    let report = json!({
        "ok": acyc.is_acyclic(),
        "rank": f.rank(),
        "C_reduced": red.c.to_string(),
        "D_reduced": red.d.to_string(),
        "composites_zero": acyc.composites_zero,
        "exact_after_C": acyc.exact_after_c,
        "exact_after_D": acyc.exact_after_d,
        "image_dim": img.dim(),
        "image_x_rank": img.x().rank(),
        "image_y_rank": img.y().rank(),
        "image_class": class,
    });
    let text = format!(
        "reduced C:\n{}reduced D:\n{}acyclic: {}\nimage module: dimension {}, {}\n",
        red.c,
        red.d,
        acyc.is_acyclic(),
        img.dim(),
        class_text
    );
    Ok((
        Outcome::new(acyc.is_acyclic(), report, text),
        Some(io::module_to_json(&img)),
    ))
}

fn cmd_classify(file: &Path) -> CmdResult {
    let m = io::read_module(file)?;
    let (class, text) = class_json(&m);
    Ok((
        Outcome::new(
            true,
            json!({"ok": true, "dim": m.dim(), "class": class}),
            text + "\n",
        ),
        None,
    ))
}

fn cmd_resolve(file: &Path, steps: usize, max_period: Option<usize>) -> CmdResult {
    if steps == 0 {
        return Err(Error::InvalidParameter("--steps must be at least 1".into()));
    }
    let m = io::read_module(file)?;
    let b = m.betti_sequence(steps);
    let period = max_period.map(|p| m.periodicity(p));
    let mut text = format!("betti: {:?}\ncomplexity: {}\n", b.betti, b.complexity);
    if let Some(p) = period {
        match p {
            Some(p) => writeln!(text, "period: {p}").unwrap(),
            None => writeln!(text, "no period up to {}", max_period.unwrap()).unwrap(),
        }
    }
    let report = json!({
        "ok": true,
        "betti": b.betti,
        "complexity": b.complexity.value(),
        "period": period.flatten(),
    });
    Ok((Outcome::new(true, report, text), None))
}

fn default_lambdas(ctx: &AlgebraCtx) -> Vec<Scalar> {
    let f = ctx.field();
    match f.elements() {
        Some(all) => all.into_iter().filter(|s| !s.is_zero()).collect(),
        None => vec![
            f.one(),
            f.from_i64(2),
            f.from_i64(-1),
            f.ratio(5, 3).expect("nonzero denominator"),
        ],
    }
}

/// Canonical objects → validation → acyclicity → image → classification,
/// plus the rank invariant that separates images from `C_n(0)` and `C_n(∞)`.
fn cmd_theorem_check(
    ctx: &AlgebraCtx,
    n_max: usize,
    lambdas: &[String],
    samples: usize,
    seed: u64,
) -> CmdResult {
    if n_max == 0 {
        return Err(Error::InvalidParameter("--n-max must be at least 1".into()));
    }
    let field = ctx.field();
    let params: Vec<ExtScalar> = if lambdas.is_empty() {
        default_lambdas(ctx)
            .into_iter()
            .map(ExtScalar::Finite)
            .collect()
    } else {
        lambdas
            .iter()
            .map(|s| ExtScalar::parse(s, field))
            .collect::<Result<_>>()?
    };
    let mut all_ok = true;
    let mut cases = Vec::new();
    let mut text = String::new();
    for n in 1..=n_max {
        for lambda in &params {
            let finite = lambda.finite().filter(|l| !l.is_zero());
            let case = match finite {
                Some(l) => {
                    let f = Factorization::canonical(n, l, ctx)?;
                    let acyclic = check_acyclic(&f).is_acyclic();
                    let img = image_module(&f);
                    let class = img.classify();
                    let ranks_ok = img.x().rank() == n && img.y().rank() == n;
                    let matches = class.as_ref().is_ok_and(|r| r.is_single(n, lambda));
                    let pass = acyclic && ranks_ok && matches;
                    let shown = match &class {
                        Ok(r) => r.to_string(),
                        Err(e) => e.to_string(),
                    };
                    writeln!(text, "n={n} lambda={lambda}: {} ({shown})", verdict(pass)).unwrap();
                    json!({"n": n, "lambda": lambda.to_string(), "acyclic": acyclic,
                           "ranks_ok": ranks_ok, "class": shown, "pass": pass})
                }
                None => {
                    // C_n(0) has rank-(n−1) x-action, C_n(∞) rank-(n−1) y-action.
                    let m = AModule::family(n, lambda, ctx)?;
                    let action = if lambda.is_infinite() { m.y() } else { m.x() };
                    let pass = action.rank() == n - 1;
                    writeln!(
                        text,
                        "n={n} lambda={lambda}: {} (excluded by rank invariant: rank {} < {n})",
                        verdict(pass),
                        action.rank()
                    )
                    .unwrap();
                    json!({"n": n, "lambda": lambda.to_string(), "control": true,
                           "excluded_by_rank_invariant": pass, "pass": pass})
                }
            };
            all_ok &= case["pass"] == json!(true);
            cases.push(case);
        }
    }

    let mut rng = random::rng(seed);
    let mut corpus_ok = true;
    for i in 0..samples {
        let rank = 1 + i % n_max;
        let f = random::unit_free_factorization(ctx, &mut rng, rank)?;
        let img = image_module(&f);
        let ok = check_acyclic(&f).is_acyclic() && img.x().rank() == rank && img.y().rank() == rank;
        debug!("random object {i} of rank {rank}: {ok}");
        corpus_ok &= ok;
    }
    writeln!(
        text,
        "random unit-free objects: {samples} checked, rank invariant {}",
        verdict(corpus_ok)
    )
    .unwrap();
    all_ok &= corpus_ok;
    let report = json!({"ok": all_ok, "ctx": ctx_json(ctx), "cases": cases,
                        "random_samples": samples, "random_ok": corpus_ok});
    Ok((Outcome::new(all_ok, report, text), None))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn cmd_example_nonfaithful(ctx: &AlgebraCtx, zero_control: bool) -> (Outcome, Option<Value>) {
    let f = Factorization::basic(ctx);
    let field = ctx.field();
    let q_entry = if zero_control {
        BMatrix::zeros(field, 1, 1)
    } else {
        BMatrix::single(ctx.w())
    };
    let theta = FactMorphism::new(&f, &f, BMatrix::zeros(field, 1, 1), q_entry)
        .expect("(0, w) is a morphism");
    let not_null = !theta.is_nullhomotopic();
    let (p, q) = reduce_morphism(&theta);
    let reduces_to_zero = p.is_zero() && q.is_zero();
    let ok = not_null && reduces_to_zero;
    let text = format!(
        "morphism (0, {}) on (x + y, x - qy), q = {}\nnot nullhomotopic: {not_null}\nreduces to zero: {reduces_to_zero}\n{}\n",
        if zero_control { "0".to_string() } else { ctx.w().to_string() },
        ctx.q(),
        verdict(ok)
    );
    let report = json!({"ok": ok, "ctx": ctx_json(ctx), "not_nullhomotopic": not_null,
                        "reduces_to_zero": reduces_to_zero, "zero_control": zero_control});
    (
        Outcome::new(ok, report, text),
        Some(io::morphism_to_json(&theta)),
    )
}

fn cmd_scan_alpha(ctx: &AlgebraCtx, alphas: &[String]) -> CmdResult {
    let field = ctx.field();
    let expected = -ctx.q_inv();
    let candidates: Vec<Scalar> = match field.elements() {
        Some(all) => all.into_iter().filter(|a| !a.is_zero()).collect(),
        None if alphas.is_empty() => vec![
            expected.clone(),
            field.one(),
            field.from_i64(-1),
            ctx.q().clone(),
            -ctx.q(),
            ctx.q_inv().clone(),
        ],
        None => alphas
            .iter()
            .map(|s| field.parse(s))
            .collect::<Result<_>>()?,
    };
    let mut ok = true;
    let mut rows = Vec::new();
    let mut text = String::new();
    for a in &candidates {
        if a.is_zero() {
            return Err(Error::InvalidParameter("alpha must be nonzero".into()));
        }
        let witness = rank_one_scan(a, ctx);
        let solvable = witness.is_some();
        ok &= solvable == (*a == expected);
        writeln!(
            text,
            "alpha = {a}: {}",
            if solvable { "solvable" } else { "no solution" }
        )
        .unwrap();
        rows.push(match witness {
            Some(w) => json!({"alpha": a.to_string(), "solvable": true,
                "witness": [w.beta1.to_string(), w.beta2.to_string(), w.gamma1.to_string(), w.gamma2.to_string()]}),
            None => json!({"alpha": a.to_string(), "solvable": false}),
        });
    }
    writeln!(
        text,
        "expected unique solution at alpha = {expected}: {}",
        verdict(ok)
    )
    .unwrap();
    let report = json!({"ok": ok, "ctx": ctx_json(ctx), "expected": expected.to_string(),
                        "exhaustive": field.order().is_some(), "table": rows});
    Ok((Outcome::new(ok, report, text), None))
}

fn cmd_schulz(ctx: &AlgebraCtx, window: usize) -> CmdResult {
    let rep = schulz_complex_check(ctx, window)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for p in &rep.positions {
        let class = match &p.class {
            Ok(r) => r.to_string(),
            Err(e) => e.to_string(),
        };
        let exact = p.exact.map_or("edge".to_string(), |e| e.to_string());
        writeln!(
            text,
            "n={:>3}  map x + ({})y  exact: {exact}  cokernel: {class}",
            p.n, p.coefficient
        )
        .unwrap();
        rows.push(json!({"n": p.n, "coefficient": p.coefficient.to_string(),
                         "composite_zero": p.composite_zero, "exact": p.exact, "cokernel": class}));
    }
    let exact = rep.all_exact();
    let distinct = rep.cokernels_pairwise_distinct();
    let period = rep.cokernel_period();
    writeln!(
        text,
        "exact at interior positions: {exact}\ncokernels pairwise distinct: {distinct}\ncokernel period in window: {}",
        period.map_or("none".to_string(), |p| p.to_string())
    )
    .unwrap();
    let report = json!({"ok": exact, "ctx": ctx_json(ctx), "window": window, "positions": rows,
                        "all_exact": exact, "pairwise_distinct": distinct, "period": period});
    Ok((Outcome::new(exact, report, text), None))
}

fn cmd_suspend(file: &Path) -> CmdResult {
    let f = io::read_factorization(file)?;
    let s = f.suspension();
    let artifact = io::factorization_to_json(&s);
    let text = format!("C = \n{}D = \n{}", s.c(), s.d());
    Ok((Outcome::new(true, artifact.clone(), text), Some(artifact)))
}

fn cmd_cone(file: &Path) -> CmdResult {
    let theta = io::read_morphism(file)?;
    let cone = mapping_cone(&theta)?;
    let tri = standard_triangle(&theta)?;
    let composite_zero = tri.inclusion.then(&tri.projection)?.is_zero();
    let artifact = io::factorization_to_json(&cone);
    let report = json!({"ok": composite_zero, "rank": cone.rank(),
                        "projection_after_inclusion_zero": composite_zero, "cone": artifact});
    let text = format!(
        "cone of rank {}\nC = \n{}D = \n{}pi after i is zero: {composite_zero}\n",
        cone.rank(),
        cone.c(),
        cone.d()
    );
    Ok((Outcome::new(composite_zero, report, text), Some(artifact)))
}

fn cmd_homotopy(file: &Path) -> CmdResult {
    let theta = io::read_morphism(file)?;
    let report = match theta.nullhomotopy() {
        Some(h) => {
            let text = format!("nullhomotopic\nS = \n{}T = \n{}", h.s, h.t);
            let report = json!({"ok": true, "nullhomotopic": true,
                                "S": h.s.to_string(), "T": h.t.to_string()});
            Outcome::new(true, report, text)
        }
        None => Outcome::new(
            true,
            json!({"ok": true, "nullhomotopic": false}),
            "not nullhomotopic\n".to_string(),
        ),
    };
    Ok((report, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut full = vec!["qcimf"];
        full.extend_from_slice(args);
        run_from(full).0
    }

    #[test]
    fn field_names() {
        assert_eq!(parse_field("Q", None).unwrap(), FieldSpec::Rationals);
        assert_eq!(
            parse_field("Fp", Some(7)).unwrap(),
            FieldSpec::prime(7).unwrap()
        );
        assert_eq!(
            parse_field("F11", None).unwrap(),
            FieldSpec::prime(11).unwrap()
        );
        assert!(parse_field("Fp", None).is_err());
        assert!(parse_field("F8", None).is_err());
    }

    #[test]
    fn small_commands() {
        assert_eq!(run_args(&["example-nonfaithful"]).code, EXIT_OK);
        assert_eq!(
            run_args(&["example-nonfaithful", "--zero-control"]).code,
            EXIT_VIOLATION
        );
        assert_eq!(run_args(&["scan-alpha", "--field", "F7"]).code, EXIT_OK);
        assert_eq!(run_args(&["schulz", "--q", "0"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["no-such-command"]).code, EXIT_INPUT);
    }
}
