//! The ten acceptance criteria, each at exact (zero) tolerance. Prints one
//! pass/fail line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use pinosp::oracle::{random_element, random_homogeneous, rng};
use pinosp::special::rho;
use pinosp::{Algebra, Centralizer, Covector, Element, ExplicitForm, Parallelism};
use pinosp_cli::{parse, Evaluator};
use pinosp_suites::crosscheck::run_oracle_crosscheck;
use pinosp_suites::env::subsets;
use pinosp_suites::{run_suite, Config, RunOptions, Status};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

const CONFIGS: &[&str] = &["A1@2", "A2@3", "B2@2", "A1@5", "A1@6"];

fn numeric_kappas(group: &str) -> [&'static str; 2] {
    if group.starts_with("B2") {
        ["1,-1/2", "2/3,3"]
    } else {
        ["1/2", "-3"]
    }
}

fn symbolic(group: &str) -> Result<Config, String> {
    Config::symbolic(group).map_err(|e| format!("{group}: {e}"))
}

fn options() -> RunOptions {
    RunOptions {
        par: Parallelism::Rayon,
        ..RunOptions::default()
    }
}

/// Run suites and require no failure; every id in `required` must pass
/// rather than be skipped.
fn suites(names: &[&str], config: &Config, required: &[&str]) -> Result<usize, String> {
    let mut passed = 0;
    let mut seen = Vec::new();
    for name in names {
        for r in run_suite(name, config, &options()).map_err(|e| e.to_string())? {
            match r.status {
                Status::Fail => {
                    return Err(format!(
                        "{} in {} (kappa {}): {} residual terms, leading {}",
                        r.id,
                        r.group,
                        r.kappa,
                        r.residual_terms,
                        r.witness.or(r.note).unwrap_or_default()
                    ))
                }
                Status::Pass => {
                    passed += 1;
                    seen.push(r.id);
                }
                Status::Skipped => {}
            }
        }
    }
    if let Some(missing) = required.iter().find(|id| !seen.iter().any(|s| s == *id)) {
        return Err(format!("{missing} did not run in {}", config.group));
    }
    Ok(passed)
}

fn zero(e: &Element, what: impl FnOnce() -> String) -> Result<(), String> {
    if e.is_zero() {
        Ok(())
    } else {
        Err(format!(
            "{}: {} terms, leading {:?}",
            what(),
            e.len(),
            e.leading().map(|(m, _)| format!("{m:?}"))
        ))
    }
}

fn all(results: Vec<Result<(), String>>) -> Result<(), String> {
    results.into_iter().collect()
}

fn x(ctx: &Arc<Algebra>, j: usize) -> Covector {
    ctx.space().x(j)
}

/// Ascending orthonormal basis tuples of length at most `max_n`.
fn basis_tuples(ctx: &Arc<Algebra>, max_n: usize) -> Vec<Vec<Covector>> {
    (1..=max_n)
        .flat_map(|n| subsets(ctx.dim(), n))
        .map(|s| s.iter().map(|&j| x(ctx, j)).collect())
        .collect()
}

fn non_orthogonal_tuples(ctx: &Arc<Algebra>) -> Vec<Vec<Covector>> {
    let mut out = vec![vec![x(ctx, 0), &x(ctx, 0) + &x(ctx, 1)]];
    if ctx.dim() >= 3 {
        out.push(vec![x(ctx, 0), x(ctx, 1), &x(ctx, 0) + &x(ctx, 2)]);
    }
    out
}

fn label(us: &[Covector]) -> String {
    format!("{us:?}")
}

const MEMBERSHIP: &[(&str, usize)] = &[("A2@3", 3), ("B2@2", 2), ("A1@5", 4)];

fn c1_osp_realization() -> Outcome {
    let mut n = 0;
    for g in ["A1@2", "A2@3", "B2@2"] {
        let config = symbolic(g)?;
        let osp = pinosp::Osp::unchecked(&config.ctx);
        for (name, residuals) in osp.relation_residuals() {
            for r in &residuals {
                zero(r, || format!("{g}: {name}"))?;
            }
        }
        n += suites(&["osp-relations"], &config, &[])?;
    }
    Ok(format!("{n} reports"))
}

fn c2_membership() -> Outcome {
    let mut n = 0;
    for &(g, max_n) in MEMBERSHIP {
        let config = symbolic(g)?;
        let cent = Centralizer::new(&config.ctx).map_err(|e| e.to_string())?;
        let tuples = basis_tuples(&config.ctx, max_n);
        let osp = cent.osp();
        let results = Parallelism::Rayon.map(&tuples, |t| {
            let o = cent.o(t);
            zero(&osp.x.supercommutator(&o), || {
                format!("{g}: [X, O{}]", label(t))
            })?;
            zero(&osp.d.supercommutator(&o), || {
                format!("{g}: [D, O{}]", label(t))
            })
        });
        all(results)?;
        n += tuples.len();
    }
    Ok(format!("{n} tuples"))
}

fn c3_routes() -> Outcome {
    let mut n = 0;
    for &(g, max_n) in MEMBERSHIP {
        let config = symbolic(g)?;
        let cent = Centralizer::new(&config.ctx).map_err(|e| e.to_string())?;
        let mut tuples = basis_tuples(&config.ctx, max_n);
        tuples.extend(non_orthogonal_tuples(&config.ctx));
        let results = Parallelism::Rayon.map(&tuples, |t| {
            let base = cent.o_proj(t);
            for form in [ExplicitForm::First, ExplicitForm::Second] {
                zero(&(&cent.o_explicit(t, form) - &base), || {
                    format!("{g}: {form:?} route for {}", label(t))
                })?;
            }
            Ok(())
        });
        all(results)?;
        n += tuples.len();
        suites(&["route-agreement"], &config, &[])?;
    }
    Ok(format!("{n} tuples"))
}

fn c4_recursion() -> Outcome {
    let recursion = ["structure.recursion.n3", "structure.recursion.n4"];
    let a14 = suites(
        &["centralizer-structure"],
        &symbolic("A1@4")?,
        &[recursion[0], recursion[1], "structure.closed-form.n4"],
    )?;
    let a15 = suites(
        &["centralizer-structure"],
        &symbolic("A1@5")?,
        &[recursion[0], recursion[1], "structure.closed-form.n5"],
    )?;
    Ok(format!("{} reports", a14 + a15))
}

fn c5_relations() -> Outcome {
    let names = ["relations", "squares", "orthonormal-basis", "pairings"];
    let mut n = 0;
    for g in CONFIGS {
        let config = symbolic(g)?;
        let required: &[&str] = match *g {
            "A1@6" => &[
                "relations.triple-triple-anticommutator",
                "basis.triple-disjoint",
                "basis.pair-quadruple-disjoint",
            ],
            "A1@5" => &[
                "relations.single-vs-rest.n5",
                "relations.pair-vs-rest.n5",
                "squares.subset.n4",
            ],
            _ => &[],
        };
        n += suites(&names, &config, required)?;
        for kappa in numeric_kappas(g) {
            let numeric = Config::parse(g, kappa).map_err(|e| e.to_string())?;
            n += suites(&names, &numeric, required)?;
        }
    }
    Ok(format!("{n} reports"))
}

fn c6_centrality() -> Outcome {
    let mut n = 0;
    for g in ["A1@2", "A2@3"] {
        let config = symbolic(g)?;
        let ctx = &config.ctx;
        let cent = Centralizer::new(ctx).map_err(|e| e.to_string())?;
        let omega = cent.central_omega();
        let mut targets: Vec<(String, Element)> = Vec::new();
        for k in 1..=3.min(ctx.dim()) {
            for s in subsets(ctx.dim(), k) {
                targets.push((
                    format!("O{s:?}"),
                    cent.o_subset(&s).map_err(|e| e.to_string())?,
                ));
            }
        }
        for r in ctx.group().reflections() {
            targets.push((
                format!("rho(s{})", r.element),
                rho(ctx, r.element).map_err(|e| e.to_string())?,
            ));
        }
        let results = Parallelism::Rayon.map(&targets, |(name, t)| {
            zero(&omega.supercommutator(t), || {
                format!("{g}: [Omega, {name}]")
            })
        });
        all(results)?;
        n += targets.len();
        n += suites(
            &["center"],
            &config,
            &[
                "center.top-signs",
                "center.omega-central",
                "center.top-formula",
            ],
        )?;
    }
    Ok(format!("{n} checks"))
}

fn c7_projectors() -> Outcome {
    let mut n = 0;
    for g in ["A1@2", "A2@3", "B2@2"] {
        n += suites(&["projectors", "osp-structure"], &symbolic(g)?, &[])?;
    }
    Ok(format!("{n} reports"))
}

fn c8_symmetry() -> Outcome {
    let mut n = 0;
    for g in ["A1@2", "A2@3"] {
        let config = symbolic(g)?;
        let ctx = &config.ctx;
        let osp = pinosp::Osp::new(ctx).map_err(|e| e.to_string())?;
        for u in [x(ctx, 0), x(ctx, 1), &x(ctx, 0) + &x(ctx, 1)] {
            zero(&osp.symmetry_residual(&osp.r(&u), &u), || {
                format!("{g}: D R_u + (R_u + gamma_u) D for {u:?}")
            })?;
            n += 1;
        }
        n += suites(&["generalized-symmetry"], &config, &[])?;
    }
    Ok(format!("{n} checks"))
}

fn c9_oracle() -> Outcome {
    let mut residuals = 0;
    for g in CONFIGS {
        let config = symbolic(g)?;
        let r = run_oracle_crosscheck(&config, 2024, 100, 3).map_err(|e| e.to_string())?;
        if !r.failures.is_empty() {
            return Err(format!("{g}: diverged on {}", r.failures.join(", ")));
        }
        if !r.mutation_detected {
            return Err(format!("{g}: perturbed residual was not detected"));
        }
        if !r.pass || r.vectors < 100 || r.products < 50 {
            return Err(format!(
                "{g}: incomplete run ({} vectors, {} products)",
                r.vectors, r.products
            ));
        }
        residuals += r.residuals;
    }
    Ok(format!(
        "{residuals} residuals over {} configs",
        CONFIGS.len()
    ))
}

fn c10_engine_health() -> Outcome {
    for g in ["A1@2", "A2@3", "B2@2"] {
        let ctx = symbolic(g)?.ctx;
        let mut r = rng(31);
        let triples: Vec<[Element; 3]> = (0..200)
            .map(|_| [0, 1, 2].map(|_| random_element(&ctx, &mut r, 2, 3)))
            .collect();
        let results = Parallelism::Rayon.map(&triples, |[a, b, c]| {
            let ab = a * b;
            zero(&(&(&ab * c) - &(a * &(b * c))), || {
                format!("{g}: associativity")
            })?;
            if ab.renormalize() != ab {
                return Err(format!("{g}: normalization is not idempotent"));
            }
            Ok(())
        });
        all(results)?;

        let homogeneous: Vec<_> = (0..100usize)
            .map(|k| {
                let ps = [k % 2 == 1, k % 3 == 1, k % 5 < 2];
                (ps, ps.map(|p| random_homogeneous(&ctx, &mut r, 2, 2, p)))
            })
            .collect();
        let results = Parallelism::Rayon.map(&homogeneous, |([pa, pb, pc], [a, b, c])| {
            let sgn = |p: bool, q: bool| pinosp::Rational::from(if p && q { -1 } else { 1 });
            let t1 = a
                .supercommutator(&b.supercommutator(c))
                .scale_rational(sgn(*pa, *pc));
            let t2 = b
                .supercommutator(&c.supercommutator(a))
                .scale_rational(sgn(*pb, *pa));
            let t3 = c
                .supercommutator(&a.supercommutator(b))
                .scale_rational(sgn(*pc, *pb));
            zero(&(&(&t1 + &t2) + &t3), || format!("{g}: super Jacobi"))
        });
        all(results)?;

        let ev = Evaluator::new(&ctx).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let a = random_element(&ctx, &mut r, 3, 4);
            let text = a.to_string();
            let ast = parse(&text).map_err(|e| format!("{g}: `{text}`: {e}"))?;
            if ast.to_string()
                != parse(&ast.to_string())
                    .map_err(|e| e.to_string())?
                    .to_string()
            {
                return Err(format!("{g}: printer is not stable on `{text}`"));
            }
            let back = ev.eval(&ast).map_err(|e| format!("{g}: `{text}`: {e}"))?;
            zero(&(&back - &a), || format!("{g}: round trip of `{text}`"))?;
        }
    }
    Ok("200 triples, 100 Jacobi triples, 100 round trips per config".into())
}

const CRITERIA: &[Criterion] = &[
    ("osp(1|2) realization", 5, c1_osp_realization),
    ("supercentralizer membership", 60, c2_membership),
    ("route agreement", 60, c3_routes),
    ("recursion and closed forms", 120, c4_recursion),
    ("relation catalog", 600, c5_relations),
    ("centrality", 60, c6_centrality),
    ("projector laws", 60, c7_projectors),
    ("generalized symmetry", 10, c8_symmetry),
    ("oracle concordance", 120, c9_oracle),
    ("engine health", 120, c10_engine_health),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (k, (name, budget, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > Duration::from_secs(*budget) => {
                Err(format!("{detail}; over the {budget} s budget"))
            }
            other => other,
        };
        let secs = took.as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} pass  {name} ({detail}, {secs:.1} s)",
                k + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1} s)", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
