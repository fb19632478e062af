use std::collections::HashMap;

use crate::algebra::{AlgebraSpec, LinMap, Vector};
use crate::scalar::{Scalar, Var};

use super::ast::{Expr, IdentityAST, Sign};
use super::IdentityError;

/// Coordinates of the generic element for variable `v` are named `v[label]`.
/// Brackets never occur in parameter identifiers, so the names stay disjoint.
pub fn generic_coordinate_name(var: &str, label: &str) -> String {
    format!("{var}[{label}]")
}

pub fn is_generic_coordinate(v: Var) -> bool {
    v.name().contains('[')
}

/// Renders a residual grouped by generic-coordinate monomials, e.g.
/// `(a^2 - a)*x[u]^2*y[e1]`.
pub fn render_residual(s: &Scalar) -> String {
    let num = s.num().display_grouped(is_generic_coordinate);
    if s.den().is_one() {
        num
    } else if s.num().len() > 1 {
        format!("({num})/({})", s.den())
    } else {
        format!("{num}/({})", s.den())
    }
}

/// `Σ_i x[b_i] b_i` with fresh indeterminates.
pub fn generic_element(a: &AlgebraSpec, var: &str) -> Vector {
    Vector::from_coords(
        a.basis()
            .iter()
            .map(|label| Scalar::param(&generic_coordinate_name(var, label)))
            .collect(),
    )
}

/// Evaluates expressions over one algebra, caching powers of `α`.
pub struct Evaluator<'a> {
    algebra: &'a AlgebraSpec,
    // powers[k - 1] = α^k
    powers: Vec<LinMap>,
}

impl<'a> Evaluator<'a> {
    /// Prepares `α^1 … α^max_power`; errors when the algebra has no `α`
    /// and a power is needed.
    pub fn new(algebra: &'a AlgebraSpec, max_power: u32) -> Result<Evaluator<'a>, IdentityError> {
        let mut powers = Vec::new();
        if max_power > 0 {
            let alpha = algebra.alpha().ok_or(IdentityError::MissingTwistMap)?;
            powers.push(alpha.clone());
            for _ in 1..max_power {
                let next = alpha.compose(powers.last().expect("nonempty"))?;
                powers.push(next);
            }
        }
        Ok(Evaluator { algebra, powers })
    }

    pub fn for_identity(
        algebra: &'a AlgebraSpec,
        ast: &IdentityAST,
    ) -> Result<Evaluator<'a>, IdentityError> {
        Evaluator::new(algebra, ast.body.max_alpha_power())
    }

    fn alpha_power(&self, k: u32) -> Result<&LinMap, IdentityError> {
        self.powers
            .get(k as usize - 1)
            .ok_or(IdentityError::MissingTwistMap)
    }

    pub fn eval(
        &self,
        e: &Expr,
        bindings: &HashMap<&str, &Vector>,
    ) -> Result<Vector, IdentityError> {
        match e {
            Expr::Var(v) => bindings
                .get(v.as_str())
                .map(|x| (*x).clone())
                .ok_or_else(|| IdentityError::UnboundVariable(v.clone())),
            Expr::Alpha(k, inner) => {
                let x = self.eval(inner, bindings)?;
                Ok(self.alpha_power(*k)?.apply(&x)?)
            }
            Expr::Mu(l, r) => {
                let x = self.eval(l, bindings)?;
                if x.is_zero() {
                    return Ok(x);
                }
                let y = self.eval(r, bindings)?;
                Ok(self.algebra.mul(&x, &y)?)
            }
            Expr::Scale(c, inner) => Ok(self.eval(inner, bindings)?.scale(c)),
            Expr::Sum(items) => {
                let mut acc = Vector::zeros(self.algebra.dim());
                for (sign, item) in items {
                    let v = self.eval(item, bindings)?;
                    acc = match sign {
                        Sign::Plus => &acc + &v,
                        Sign::Minus => &acc - &v,
                    };
                }
                Ok(acc)
            }
        }
    }
}

/// Evaluates `ast.body` with the variables bound to vectors.
pub fn evaluate(
    a: &AlgebraSpec,
    ast: &IdentityAST,
    bindings: &HashMap<&str, &Vector>,
) -> Result<Vector, IdentityError> {
    Evaluator::for_identity(a, ast)?.eval(&ast.body, bindings)
}

/// `μ(α x, μ(y, z)) − μ(μ(x, y), α z)`.
pub fn hom_associator(
    a: &AlgebraSpec,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, IdentityError> {
    let alpha = a.alpha().ok_or(IdentityError::MissingTwistMap)?;
    let left = a.mul(&alpha.apply(x)?, &a.mul(y, z)?)?;
    let right = a.mul(&a.mul(x, y)?, &alpha.apply(z)?)?;
    Ok(&left - &right)
}
