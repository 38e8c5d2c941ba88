//! Evaluation of parsed expressions to normal-form elements.

use std::sync::Arc;

use pinosp::scalars::ScalarError;
use pinosp::special::{antisym_gamma, omega_kappa, rho};
use pinosp::{
    Algebra, AlgebraError, BaseNumber, Centralizer, CentralizerError, Covector, Element, OspError,
    Rational, Scalar,
};
use thiserror::Error;

use crate::parse::{Ast, BinOp, Kind, Pos};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("{0}: unknown identifier `{1}`")]
    Unknown(Pos, String),
    #[error("{0}: {1}")]
    Invalid(Pos, String),
    #[error("{0}: `{1}` takes {2} argument(s)")]
    Arity(Pos, String, String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Osp(#[from] OspError),
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Evaluates expressions in one algebra; the osp(1|2) generators and the
/// centralizer cache are built once.
pub struct Evaluator {
    cent: Centralizer,
}

fn indexed(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) || rest.starts_with('0') {
        return None;
    }
    rest.parse().ok()
}

impl Evaluator {
    pub fn new(ctx: &Arc<Algebra>) -> Result<Self, EvalError> {
        Ok(Evaluator {
            cent: Centralizer::new(ctx)?,
        })
    }

    pub fn ctx(&self) -> &Arc<Algebra> {
        self.cent.ctx()
    }

    pub fn cent(&self) -> &Centralizer {
        &self.cent
    }

    fn scalar(&self, s: Scalar) -> Element {
        Element::scalar(self.ctx(), s)
    }

    fn coordinate(&self, pos: Pos, name: &str, k: usize) -> Result<usize, EvalError> {
        if k == 0 || k > self.ctx().dim() {
            return Err(EvalError::Invalid(
                pos,
                format!(
                    "`{name}` is out of range for dimension {}",
                    self.ctx().dim()
                ),
            ));
        }
        Ok(k - 1)
    }

    /// Covector literal names: `x<j>`, `zp<j>`, `zm<j>`, `z0`, `alpha<g>`.
    fn covector_ident(&self, pos: Pos, name: &str) -> Result<Option<Covector>, EvalError> {
        let space = self.ctx().space();
        if let Some(j) = indexed(name, "x") {
            return Ok(Some(space.x(self.coordinate(pos, name, j)?)));
        }
        let witt = |pos: Pos| {
            space
                .witt_basis(1)
                .map_err(|e| EvalError::Invalid(pos, format!("`{name}`: {e}")))
        };
        if let Some(j) = indexed(name, "zp").or_else(|| indexed(name, "zm")) {
            let w = witt(pos)?;
            let list = if name.starts_with("zp") {
                &w.plus
            } else {
                &w.minus
            };
            return list.get(j - 1).cloned().map(Some).ok_or_else(|| {
                EvalError::Invalid(
                    pos,
                    format!("`{name}` exceeds the Witt rank {}", list.len()),
                )
            });
        }
        if name == "z0" {
            let w = witt(pos)?;
            return w
                .zero
                .map(Some)
                .ok_or_else(|| EvalError::Invalid(pos, "`z0` needs odd dimension".into()));
        }
        if let Some(g) = indexed(name, "alpha") {
            let r =
                self.ctx().group().reflection(g).ok_or_else(|| {
                    EvalError::Invalid(pos, format!("`s{g}` is not a reflection"))
                })?;
            return Ok(Some(r.root_covector()));
        }
        Ok(None)
    }

    /// A linear combination of covector literals.
    pub fn covector(&self, e: &Ast) -> Result<Covector, EvalError> {
        let not_cov = || EvalError::Invalid(e.pos, format!("`{e}` is not a covector"));
        match &e.kind {
            Kind::Ident(name) => self.covector_ident(e.pos, name)?.ok_or_else(not_cov),
            Kind::Neg(a) => Ok(self.covector(a)?.scale_rational(Rational::from(-1))),
            Kind::Bin(BinOp::Add, a, b) => Ok(&self.covector(a)? + &self.covector(b)?),
            Kind::Bin(BinOp::Sub, a, b) => Ok(&self.covector(a)? - &self.covector(b)?),
            Kind::Bin(BinOp::Mul, a, b) => match (self.constant(a), self.constant(b)) {
                (Some(c), _) => Ok(self.covector(b)?.scale(&c)),
                (_, Some(c)) => Ok(self.covector(a)?.scale(&c)),
                _ => Err(not_cov()),
            },
            Kind::Bin(BinOp::Div, a, b) => {
                let c = self.constant(b).ok_or_else(not_cov)?;
                let inv = c
                    .inv()
                    .map_err(|_| EvalError::Invalid(b.pos, "division by zero".into()))?;
                Ok(self.covector(a)?.scale(&inv))
            }
            _ => Err(not_cov()),
        }
    }

    /// Constant coefficients built from integers, `i` and `sqrt2`.
    fn constant(&self, e: &Ast) -> Option<BaseNumber> {
        match &e.kind {
            Kind::Num(n) => Some(BaseNumber::from_int(*n)),
            Kind::Ident(s) if s == "i" => Some(BaseNumber::i()),
            Kind::Ident(s) if s == "sqrt2" => Some(BaseNumber::sqrt2()),
            Kind::Neg(a) => Some(self.constant(a)?.scale(&Rational::from(-1))),
            Kind::Bin(op, a, b) => {
                let (x, y) = (self.constant(a)?, self.constant(b)?);
                match op {
                    BinOp::Add => Some(&x + &y),
                    BinOp::Sub => Some(&x - &y),
                    BinOp::Mul => Some(&x * &y),
                    BinOp::Div => Some(&x * &y.inv().ok()?),
                }
            }
            _ => None,
        }
    }

    pub fn eval(&self, e: &Ast) -> Result<Element, EvalError> {
        let ctx = self.ctx();
        Ok(match &e.kind {
            Kind::Num(n) => Element::rational(ctx, Rational::from(*n)),
            Kind::Ident(name) => self.ident(e.pos, name)?,
            Kind::Call(name, args) => self.call(e.pos, name, args)?,
            Kind::Neg(a) => self.eval(a)?.scale_rational(Rational::from(-1)),
            Kind::Bin(op, a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                match op {
                    BinOp::Add => &x + &y,
                    BinOp::Sub => &x - &y,
                    BinOp::Mul => &x * &y,
                    BinOp::Div => {
                        let c = constant_of(&y).ok_or_else(|| {
                            EvalError::Invalid(b.pos, "divisor must be a scalar".into())
                        })?;
                        x.scale(&c.inv()?)
                    }
                }
            }
            Kind::Pow(a, n) => self.eval(a)?.pow(*n),
            Kind::Bracket(a, b) => self.eval(a)?.supercommutator(&self.eval(b)?),
            Kind::Anti(a, b) => self.eval(a)?.anticommutator(&self.eval(b)?),
        })
    }

    fn ident(&self, pos: Pos, name: &str) -> Result<Element, EvalError> {
        let ctx = self.ctx();
        let osp = self.cent.osp();
        let half_sqrt2 = || Scalar::from_base(BaseNumber::inv_sqrt2());
        Ok(match name {
            "i" => self.scalar(Scalar::i()),
            "sqrt2" => self.scalar(Scalar::sqrt2()),
            "X" => osp.x.clone(),
            "D" => osp.d.clone(),
            "H" => osp.h.clone(),
            "Ep" => osp.e_plus.clone(),
            "Em" => osp.e_minus.clone(),
            "Fp" => osp.x.scale(&half_sqrt2()),
            "Fm" => osp.d.scale(&half_sqrt2()),
            "Casimir" => osp.casimir(),
            "Scasimir" => osp.scasimir(),
            "OmegaKappa" => omega_kappa(ctx),
            "Omega" => self.cent.central_omega(),
            "Otop" => self.cent.o_top(),
            _ => {
                if let Some(p) = indexed(name, "y") {
                    return Ok(Element::y(ctx, self.coordinate(pos, name, p)?));
                }
                if let Some(p) = indexed(name, "e") {
                    return Ok(Element::e(ctx, self.coordinate(pos, name, p)?));
                }
                if let Some(c) = indexed(name, "k") {
                    if c > ctx.group().param_count() {
                        return Err(EvalError::Invalid(
                            pos,
                            format!(
                                "`{name}`: the group has {} parameter(s)",
                                ctx.group().param_count()
                            ),
                        ));
                    }
                    return Ok(self.scalar(ctx.kappa(c - 1).clone()));
                }
                if let Some(g) = indexed(name, "s") {
                    if ctx.group().reflection(g).is_none() {
                        return Err(EvalError::Invalid(
                            pos,
                            format!("`{name}` is not a reflection"),
                        ));
                    }
                    return Ok(Element::try_group(ctx, g)?);
                }
                if let Some(g) = indexed(name, "g") {
                    return Ok(Element::try_group(ctx, g)?);
                }
                match self.covector_ident(pos, name)? {
                    Some(u) => Element::covector(ctx, &u),
                    None => return Err(EvalError::Unknown(pos, name.to_string())),
                }
            }
        })
    }

    fn covectors(&self, args: &[Ast]) -> Result<Vec<Covector>, EvalError> {
        args.iter().map(|a| self.covector(a)).collect()
    }

    fn call(&self, pos: Pos, name: &str, args: &[Ast]) -> Result<Element, EvalError> {
        let ctx = self.ctx();
        let osp = self.cent.osp();
        let arity = |want: &str, ok: bool| {
            if ok {
                Ok(())
            } else {
                Err(EvalError::Arity(pos, name.to_string(), want.to_string()))
            }
        };
        let one = |f: &dyn Fn(&Element) -> Element| -> Result<Element, EvalError> {
            arity("1", args.len() == 1)?;
            Ok(f(&self.eval(&args[0])?))
        };
        match name {
            "O" => {
                arity("at least 1", !args.is_empty())?;
                Ok(self.cent.o(&self.covectors(args)?))
            }
            "A" => {
                arity("at least 1", !args.is_empty())?;
                Ok(antisym_gamma(ctx, &self.covectors(args)?))
            }
            "M" => {
                arity("2", args.len() == 2)?;
                Ok(self
                    .cent
                    .m(&self.covector(&args[0])?, &self.covector(&args[1])?))
            }
            "gamma" | "beta" => {
                arity("1", args.len() == 1)?;
                let u = self.covector(&args[0])?;
                Ok(if name == "gamma" {
                    Element::gamma(ctx, &u)
                } else {
                    Element::beta(ctx, &u)
                })
            }
            "R" => {
                arity("1", args.len() == 1)?;
                Ok(osp.r(&self.covector(&args[0])?))
            }
            "rho" => {
                arity("1", args.len() == 1)?;
                let g = match &args[0].kind {
                    Kind::Num(n) if *n > 0 => *n as usize,
                    Kind::Ident(s) => indexed(s, "s").ok_or_else(|| {
                        EvalError::Invalid(args[0].pos, "expected a reflection `s<k>`".into())
                    })?,
                    _ => {
                        return Err(EvalError::Invalid(
                            args[0].pos,
                            "expected a reflection `s<k>`".into(),
                        ))
                    }
                };
                if ctx.group().reflection(g).is_none() {
                    return Err(EvalError::Invalid(
                        args[0].pos,
                        format!("`s{g}` is not a reflection"),
                    ));
                }
                Ok(rho(ctx, g)?)
            }
            "Pp" => one(&|a| osp.p_plus(a)),
            "Pm" => one(&|a| osp.p_minus(a)),
            "Qp" => one(&|a| osp.q_plus(a)),
            "Qm" => one(&|a| osp.q_minus(a)),
            "Palpha" => {
                arity("1", args.len() == 1)?;
                Ok(osp.p_alpha(&self.eval(&args[0])?)?)
            }
            _ => Err(EvalError::Unknown(pos, name.to_string())),
        }
    }
}

/// The coefficient of a scalar element.
fn constant_of(e: &Element) -> Option<Scalar> {
    match e.terms() {
        [] => Some(Scalar::zero()),
        [(m, c)] if *m == pinosp::Monomial::ONE => Some(c.clone()),
        _ => None,
    }
}
