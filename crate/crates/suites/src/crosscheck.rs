//! Agreement between the normal-form engine and the polynomial-spinor
//! module: catalog residuals must annihilate random vectors, products must
//! act as compositions, and a perturbed residual must be caught.

use pinosp::oracle::{random_element, random_vector, rng, sectors, PolySpinor};
use pinosp::Element;
use serde::Serialize;

use crate::catalog::case;
use crate::config::Config;
use crate::env::Env;
use crate::expr::Expr;
use crate::CaseError;

/// Catalog cases whose residuals are sent through the module action.
pub const CROSSCHECK_CASES: [&str; 20] = [
    "osp.odd-odd-mixed",
    "osp.cartan-odd",
    "osp.odd-squares",
    "osp.even-raise-lower",
    "osp.cartan-even",
    "osp.odd-even",
    "osp.casimir-central",
    "osp.scasimir-square",
    "algebra.cherednik-relation",
    "algebra.crossed-product",
    "algebra.clifford-relation",
    "algebra.o-frak-reflections",
    "algebra.o-frak-anticommutator",
    "algebra.group-center",
    "pairing.values",
    "sl2.centralizer-generators",
    "centralizer.membership.n1",
    "centralizer.membership.n2",
    "routes.n2",
    "symmetry.r-generalized",
];

pub const PRODUCT_CHECKS: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub group: String,
    pub kappa: String,
    pub seed: u64,
    pub vectors: usize,
    pub residuals: usize,
    pub products: usize,
    pub failures: Vec<String>,
    pub mutation_detected: bool,
    pub pass: bool,
}

/// `samples` random vectors of degree at most `max_degree`, spread over the
/// sectors that make the module faithful.
pub fn sample_vectors(
    config: &Config,
    seed: u64,
    samples: usize,
    max_degree: u32,
) -> Result<Vec<PolySpinor>, CaseError> {
    let secs = sectors(&config.ctx);
    (0..samples)
        .map(|k| {
            Ok(random_vector(
                &config.ctx,
                secs[k % secs.len()],
                seed.wrapping_add(k as u64),
                max_degree,
            )?)
        })
        .collect()
}

fn annihilates(r: &Expr, vs: &[PolySpinor]) -> Result<Option<usize>, CaseError> {
    for (k, v) in vs.iter().enumerate() {
        if !r.act(v)?.is_zero() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub fn run_oracle_crosscheck(
    config: &Config,
    seed: u64,
    samples: usize,
    max_degree: u32,
) -> Result<CrosscheckReport, CaseError> {
    let ctx = &config.ctx;
    let env = Env::new(ctx, pinosp::Parallelism::default())?;
    let vs = sample_vectors(config, seed, samples, max_degree)?;
    let mut failures = Vec::new();
    let mut residuals = 0;
    let mut first = None;
    for id in CROSSCHECK_CASES {
        let c = case(id).ok_or_else(|| CaseError::Unsupported(format!("missing case {id}")))?;
        if c.needs.min_dim > config.dim() {
            continue;
        }
        let rs = (c.build)(&env)?;
        for (j, r) in rs.iter().take(2).enumerate() {
            residuals += 1;
            first.get_or_insert_with(|| r.clone());
            if let Some(k) = annihilates(r, &vs)? {
                failures.push(format!("{id}[{j}] on vector {k}"));
            }
        }
    }

    let mut g = rng(seed ^ 0x5eed);
    let few = &vs[..vs.len().min(10)];
    for n in 0..PRODUCT_CHECKS {
        let a = random_element(ctx, &mut g, 2, 3);
        let b = random_element(ctx, &mut g, 2, 3);
        let ab: Element = &a * &b;
        for (k, v) in few.iter().enumerate() {
            if ab.act_on(v)? != a.act_on(&b.act_on(v)?)? {
                failures.push(format!("product {n} on vector {k}"));
                break;
            }
        }
    }

    let mutated = &first.unwrap_or_else(Expr::zero) + &Expr::int(1);
    let mutation_detected = annihilates(&mutated, &vs)?.is_some();
    let pass = failures.is_empty() && mutation_detected;
    Ok(CrosscheckReport {
        group: config.group.clone(),
        kappa: config.kappa_label(),
        seed,
        vectors: vs.len(),
        residuals,
        products: PRODUCT_CHECKS,
        failures,
        mutation_detected,
        pass,
    })
}

trait ActOn {
    fn act_on(&self, v: &PolySpinor) -> Result<PolySpinor, CaseError>;
}

impl ActOn for Element {
    fn act_on(&self, v: &PolySpinor) -> Result<PolySpinor, CaseError> {
        Ok(v.act(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_exist() {
        for id in CROSSCHECK_CASES {
            assert!(case(id).is_some(), "{id}");
        }
    }

    #[test]
    fn small_run_passes() {
        let c = Config::symbolic("A1@2").unwrap();
        let r = run_oracle_crosscheck(&c, 3, 4, 2).unwrap();
        assert!(r.pass, "{:?}", r.failures);
        assert!(r.mutation_detected);
    }
}
