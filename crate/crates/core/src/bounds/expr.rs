//! Tiny exact arithmetic expressions over the invariant vocabulary.

use alloc::boxed::Box;
use core::fmt;
use core::ops;

use thiserror::Error;

use crate::metrics::{InvariantReport, Rational};

/// Named invariants an expression may refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    /// `n`
    Order,
    /// `δ`
    MinDegree,
    /// `π`
    Proximity,
    /// `ρ`
    Remoteness,
    /// `diam` (written `d` in the proximity lower bounds)
    Diameter,
    /// `rad` (written `r` in the proximity lower bounds)
    Radius,
    /// `min_v |N_{≤2}(v)|`
    MinBall2,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Order => "n",
            Var::MinDegree => "δ",
            Var::Proximity => "π",
            Var::Remoteness => "ρ",
            Var::Diameter => "diam",
            Var::Radius => "rad",
            Var::MinBall2 => "min|N≤2(v)|",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(Rational),
    Var(Var),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Floor(Box<Expr>),
    Ceil(Box<Expr>),
    /// Chooses a branch by the parity of `n`.
    ByParity { odd: Box<Expr>, even: Box<Expr> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable {} has no value", .0.symbol())]
    Unbound(Var),
}

/// Values for the variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Env {
    pub order: i128,
    pub min_degree: i128,
    pub proximity: Rational,
    pub remoteness: Rational,
    pub diameter: i128,
    pub radius: i128,
    pub min_ball2: Option<i128>,
}

impl Env {
    pub fn from_report(report: &InvariantReport) -> Self {
        Self {
            order: report.order as i128,
            min_degree: report.min_degree as i128,
            proximity: report.proximity,
            remoteness: report.remoteness,
            diameter: i128::from(report.diameter),
            radius: i128::from(report.radius),
            min_ball2: report.classes.map(|c| c.min_ball2 as i128),
        }
    }

    fn get(&self, var: Var) -> Result<Rational, EvalError> {
        Ok(match var {
            Var::Order => self.order.into(),
            Var::MinDegree => self.min_degree.into(),
            Var::Proximity => self.proximity,
            Var::Remoteness => self.remoteness,
            Var::Diameter => self.diameter.into(),
            Var::Radius => self.radius.into(),
            Var::MinBall2 => self.min_ball2.ok_or(EvalError::Unbound(var))?.into(),
        })
    }
}

impl Expr {
    pub fn int(v: i128) -> Self {
        Expr::Const(Rational::from(v))
    }

    pub fn frac(num: i128, den: i128) -> Self {
        Expr::Const(Rational::new(num, den))
    }

    pub fn var(v: Var) -> Self {
        Expr::Var(v)
    }

    pub fn floor(self) -> Self {
        Expr::Floor(Box::new(self))
    }

    pub fn ceil(self) -> Self {
        Expr::Ceil(Box::new(self))
    }

    pub fn by_parity(odd: Expr, even: Expr) -> Self {
        Expr::ByParity { odd: Box::new(odd), even: Box::new(even) }
    }

    pub fn eval(&self, env: &Env) -> Result<Rational, EvalError> {
        Ok(match self {
            Expr::Const(c) => *c,
            Expr::Var(v) => env.get(*v)?,
            Expr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Expr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Expr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            Expr::Div(a, b) => {
                let d = b.eval(env)?;
                if d == Rational::from(0) {
                    return Err(EvalError::DivisionByZero);
                }
                a.eval(env)? / d
            }
            Expr::Floor(a) => a.eval(env)?.floor(),
            Expr::Ceil(a) => a.eval(env)?.ceil(),
            Expr::ByParity { odd, even } => {
                if env.order % 2 == 1 {
                    odd.eval(env)?
                } else {
                    even.eval(env)?
                }
            }
        })
    }

    /// True if the expression refers to `var` anywhere.
    pub fn mentions(&self, var: Var) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Var(v) => *v == var,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.mentions(var) || b.mentions(var),
            Expr::Floor(a) | Expr::Ceil(a) => a.mentions(var),
            Expr::ByParity { odd, even } => odd.mentions(var) || even.mentions(var),
        }
    }

    fn is_atom(&self) -> bool {
        matches!(self, Expr::Var(_) | Expr::Floor(_) | Expr::Ceil(_) | Expr::ByParity { .. })
            || matches!(self, Expr::Const(c) if c.is_integer() && *c >= Rational::from(0))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $variant:ident) => {
        impl ops::$tr for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}
binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr| {
            if e.is_atom() {
                write!(f, "{e}")
            } else {
                write!(f, "({e})")
            }
        };
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var(v) => f.write_str(v.symbol()),
            Expr::Add(a, b) => {
                write!(f, "{a} + ")?;
                wrap(f, b)
            }
            Expr::Sub(a, b) => {
                write!(f, "{a} − ")?;
                wrap(f, b)
            }
            Expr::Mul(a, b) => {
                wrap(f, a)?;
                f.write_str("·")?;
                wrap(f, b)
            }
            Expr::Div(a, b) => {
                wrap(f, a)?;
                f.write_str("/")?;
                wrap(f, b)
            }
            Expr::Floor(a) => write!(f, "⌊{a}⌋"),
            Expr::Ceil(a) => write!(f, "⌈{a}⌉"),
            Expr::ByParity { odd, even } => write!(f, "{{{odd} if n odd; {even} if n even}}"),
        }
    }
}
