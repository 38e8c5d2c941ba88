use pinosp::{BaseNumber, Parallelism, Rational};
use pinosp_suites::catalog::catalog;
use pinosp_suites::{run_suite, Config, Env, RunOptions, Status};

#[test]
fn whole_catalog_passes() {
    for group in ["A1@2", "A2@3", "B2@2"] {
        let config = Config::symbolic(group).unwrap();
        let reports = run_suite("all", &config, &RunOptions::default()).unwrap();
        assert_eq!(reports.len(), catalog().len());
        let failed: Vec<_> = reports
            .iter()
            .filter(|r| r.status == Status::Fail)
            .map(|r| r.id.as_str())
            .collect();
        assert!(failed.is_empty(), "{group}: {failed:?}");
    }
}

#[test]
fn symbolic_pass_implies_numeric_pass() {
    let config = Config::symbolic("B2@2").unwrap();
    let env = Env::new(&config.ctx, Parallelism::Rayon).unwrap();
    let values = [
        vec![
            BaseNumber::from_rational(Rational::new(1, 3)),
            BaseNumber::from_rational(Rational::from(-2)),
        ],
        vec![
            BaseNumber::from_rational(Rational::from(5)),
            BaseNumber::from_rational(Rational::new(-7, 4)),
        ],
    ];
    for vals in &values {
        let numeric = config.with_kappa(vals.clone()).unwrap();
        let nenv = Env::new(&numeric.ctx, Parallelism::Rayon).unwrap();
        for case in catalog()
            .iter()
            .filter(|c| c.suite == "relations" || c.suite == "center")
        {
            let (Ok(sym), Ok(num)) = ((case.build)(&env), (case.build)(&nenv)) else {
                continue;
            };
            for (s, n) in sym.iter().zip(&num) {
                assert!(env.eval(s).is_zero(), "{}", case.id);
                assert!(nenv.eval(n).is_zero(), "{} at {vals:?}", case.id);
            }
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let config = Config::symbolic("A2@3").unwrap();
    let seq = RunOptions {
        par: Parallelism::Sequential,
        ..RunOptions::default()
    };
    let a =
        serde_json::to_string(&run_suite("relations", &config, &RunOptions::default()).unwrap())
            .unwrap();
    let b = serde_json::to_string(&run_suite("relations", &config, &seq).unwrap()).unwrap();
    assert_eq!(a, b);
}
