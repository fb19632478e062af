//! Exact rational functions over named parameters.
//!
//! A [`Scalar`] is `num / den` with `num, den` in `Q[p1, ..., pm]`, kept in
//! canonical form: the two are coprime and `den` is monic under graded-lex
//! order, so two scalars are equal exactly when their fields are equal.

mod gcd;
mod monomial;
mod poly;
mod var;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

pub use gcd::gcd;
pub use monomial::Monomial;
pub use poly::{Polynomial, Rational};
pub use var::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under the given bindings")]
    SpecializedDenominatorZero,
    #[error("parameter `{0}` is not bound")]
    UnboundParameter(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field operation dispatch; only `Div` can fail.
pub fn arith(op: ArithOp, x: &Scalar, y: &Scalar) -> Result<Scalar, ScalarError> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_polynomial(Polynomial::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_polynomial(Polynomial::from_int(n))
    }

    pub fn from_rational(q: Rational) -> Scalar {
        Scalar::from_polynomial(Polynomial::constant(q))
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        Scalar::from_rational(Rational::new(n.into(), d.into()))
    }

    pub fn var(v: Var) -> Scalar {
        Scalar::from_polynomial(Polynomial::var(v))
    }

    /// The parameter with this name, registering it if new.
    pub fn param(name: &str) -> Scalar {
        Scalar::var(Var::named(name))
    }

    pub fn from_polynomial(p: Polynomial) -> Scalar {
        Scalar {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// Canonical form of `num / den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Scalar::normalize(num, den))
    }

    fn normalize(num: Polynomial, den: Polynomial) -> Scalar {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = den.as_constant() {
            if c.is_one() {
                return Scalar { num, den };
            }
            return Scalar::from_polynomial(num.scale(&c.recip()));
        }
        let (num, den) = if den.is_monomial() {
            let (m, _) = den.leading().expect("nonzero");
            let g = gcd::monomial_gcd_with(&num, m);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_monomial(&g).expect("gcd divides"),
                    den.div_monomial(&g).expect("gcd divides"),
                )
            }
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.leading_coefficient();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            if den.is_constant() {
                return Scalar::from_polynomial(num.scale(&inv));
            }
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self * &rhs.inv_unchecked())
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.inv_unchecked())
    }

    fn inv_unchecked(&self) -> Scalar {
        // swapping keeps numerator and denominator coprime; only the
        // leading coefficient needs fixing
        Scalar::normalize_sign(self.den.clone(), self.num.clone())
    }

    fn normalize_sign(num: Polynomial, den: Polynomial) -> Scalar {
        let lc = den.leading_coefficient();
        if lc.is_one() && !den.is_constant() {
            return Scalar { num, den };
        }
        let inv = lc.recip();
        if den.is_constant() {
            return Scalar::from_polynomial(num.scale(&inv));
        }
        Scalar {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        // powers of coprime polynomials stay coprime
        Scalar {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Evaluates at rational values for every parameter occurring.
    pub fn specialize(
        &self,
        bindings: &BTreeMap<String, Rational>,
    ) -> Result<Rational, ScalarError> {
        self.specialize_with(|v| bindings.get(&*v.name()).cloned())
    }

    pub fn specialize_with(
        &self,
        value: impl Fn(Var) -> Option<Rational> + Copy,
    ) -> Result<Rational, ScalarError> {
        let unbound = |v: Var| ScalarError::UnboundParameter(v.name().to_string());
        let d = self.den.eval(value).map_err(unbound)?;
        let n = self.num.eval(value).map_err(unbound)?;
        if d.is_zero() {
            return Err(ScalarError::SpecializedDenominatorZero);
        }
        Ok(n / d)
    }

    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Polynomial> for Scalar {
    fn from(p: Polynomial) -> Self {
        Scalar::from_polynomial(p)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Scalar::from_polynomial(&self.num + &rhs.num);
            }
            return Scalar::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let (l, r) = if g.is_one() {
            (rhs.den.clone(), self.den.clone())
        } else {
            (
                rhs.den.div_exact(&g).expect("gcd divides"),
                self.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &l) + &(&rhs.num * &r);
        let den = &self.den * &l;
        Scalar::normalize(num, den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_polynomial(&self.num - &rhs.num);
        }
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_polynomial(&self.num * &rhs.num);
        }
        // cross-cancel so the product is already reduced
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let div = |p: &Polynomial, g: &Polynomial| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        Scalar::normalize_sign(num, den)
    }
}

/// Panics on a zero divisor; use [`Scalar::checked_div`] for a fallible
/// version.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &Scalar) -> Scalar {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| &a + &b)
    }
}

fn needs_parens_as_factor(p: &Polynomial) -> bool {
    match p.terms() {
        [] => false,
        [(m, c)] => {
            if m.is_one() {
                !c.is_integer() || c < &Rational::zero()
            } else {
                !c.is_one() || m.pairs().len() > 1 || c < &Rational::zero()
            }
        }
        _ => true,
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens_as_factor(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}
