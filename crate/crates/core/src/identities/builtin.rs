use std::collections::HashMap;

use crate::algebra::{AlgebraSpec, CheckReport, Vector};

use super::ast::{Expr, IdentityAST};
use super::check::{check, check_bound, Strategy};
use super::IdentityError;

/// A named identity from the builtin catalog.
///
/// Most entries are a single equation. `noncommutative_hom_jordan` is the
/// conjunction of two, so entries hold a list of clauses that must all hold.
#[derive(Clone, PartialEq, Debug)]
pub struct BuiltinIdentity {
    pub name: &'static str,
    pub clauses: Vec<IdentityAST>,
    /// Surface syntax of each clause, accepted by the identity parser.
    pub surface: Vec<&'static str>,
    /// Only meaningful on commutative products.
    pub requires_commutative: bool,
    /// False for identities that only hold on anticommuting `x`, `y`.
    pub universal: bool,
    pub description: &'static str,
}

impl BuiltinIdentity {
    pub fn ast(&self) -> &IdentityAST {
        &self.clauses[0]
    }

    pub fn is_multilinear(&self) -> bool {
        self.clauses.iter().all(IdentityAST::is_multilinear)
    }

    /// Checks every clause; the first failing clause supplies the witness.
    pub fn check(&self, a: &AlgebraSpec, strategy: Strategy) -> Result<CheckReport, IdentityError> {
        let mut report: Option<CheckReport> = None;
        for clause in &self.clauses {
            let r = check(a, clause, strategy)?;
            report = Some(match report {
                None => r,
                Some(prev) => prev.and(r),
            });
        }
        Ok(report.expect("at least one clause"))
    }

    /// Checks with `x`, `y` bound to a pair satisfying `μ(x, y) = −μ(y, x)`.
    pub fn check_anticommuting(
        &self,
        a: &AlgebraSpec,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckReport, IdentityError> {
        let s = &a.mul(x, y)? + &a.mul(y, x)?;
        if !s.is_zero() {
            return Err(IdentityError::NotAnticommuting);
        }
        let fixed = HashMap::from([("x", x), ("y", y)]);
        let mut report: Option<CheckReport> = None;
        for clause in &self.clauses {
            let r = check_bound(a, clause, &fixed, Strategy::Generic)?;
            report = Some(match report {
                None => r,
                Some(prev) => prev.and(r),
            });
        }
        Ok(report.expect("at least one clause"))
    }
}

fn v(name: &str) -> Expr {
    Expr::var(name)
}

fn mu(l: Expr, r: Expr) -> Expr {
    Expr::mu(l, r)
}

fn al(e: Expr) -> Expr {
    Expr::al(e)
}

/// `μ(α a, μ(b, c))`
fn left_part(a: Expr, b: Expr, c: Expr) -> Expr {
    mu(al(a), mu(b, c))
}

/// `μ(μ(a, b), α c)`
fn right_part(a: Expr, b: Expr, c: Expr) -> Expr {
    mu(mu(a, b), al(c))
}

fn hom_assoc_equation(a: &str, b: &str, c: &str) -> IdentityAST {
    IdentityAST::equation(left_part(v(a), v(b), v(c)), right_part(v(a), v(b), v(c)))
}

/// `as(p) = −as(q)`, written as `L(p) − R(p) = R(q) − L(q)`.
fn alternating(p: [&str; 3], q: [&str; 3]) -> IdentityAST {
    IdentityAST::equation(
        Expr::diff(
            left_part(v(p[0]), v(p[1]), v(p[2])),
            right_part(v(p[0]), v(p[1]), v(p[2])),
        ),
        Expr::diff(
            right_part(v(q[0]), v(q[1]), v(q[2])),
            left_part(v(q[0]), v(q[1]), v(q[2])),
        ),
    )
}

fn xx() -> Expr {
    mu(v("x"), v("x"))
}

pub const BUILTIN_NAMES: [&str; 16] = [
    "hom_associative",
    "left_hom_alternative",
    "right_hom_alternative",
    "left_hom_alternative_linearized",
    "right_hom_alternative_linearized",
    "hom_flexible",
    "associator_alternating_12",
    "associator_alternating_23",
    "associator_alternating_13",
    "commutative",
    "hom_jordan",
    "hom_jordan_variant_a",
    "hom_jordan_variant_b",
    "anticommute_left_consequence",
    "anticommute_right_consequence",
    "noncommutative_hom_jordan",
];

/// Names in catalog order.
pub fn builtin_names() -> &'static [&'static str] {
    &BUILTIN_NAMES
}

pub fn builtin(name: &str) -> Result<BuiltinIdentity, IdentityError> {
    let single = |name: &'static str, ast: IdentityAST, surface: &'static str, description| {
        BuiltinIdentity {
            name,
            clauses: vec![ast],
            surface: vec![surface],
            requires_commutative: false,
            universal: true,
            description,
        }
    };
    let b = match name {
        "hom_associative" => single(
            "hom_associative",
            hom_assoc_equation("x", "y", "z"),
            "mu(al(x), mu(y,z)) = mu(mu(x,y), al(z))",
            "the Hom-associator vanishes",
        ),
        "left_hom_alternative" => single(
            "left_hom_alternative",
            hom_assoc_equation("x", "x", "y"),
            "mu(al(x), mu(x,y)) = mu(mu(x,x), al(y))",
            "as(x, x, y) = 0",
        ),
        "right_hom_alternative" => single(
            "right_hom_alternative",
            hom_assoc_equation("x", "y", "y"),
            "mu(al(x), mu(y,y)) = mu(mu(x,y), al(y))",
            "as(x, y, y) = 0",
        ),
        "left_hom_alternative_linearized" => single(
            "left_hom_alternative_linearized",
            IdentityAST::equation(
                Expr::plus(
                    left_part(v("x"), v("y"), v("z")),
                    left_part(v("y"), v("x"), v("z")),
                ),
                Expr::plus(
                    right_part(v("x"), v("y"), v("z")),
                    right_part(v("y"), v("x"), v("z")),
                ),
            ),
            "mu(al(x),mu(y,z)) + mu(al(y),mu(x,z)) = mu(mu(x,y),al(z)) + mu(mu(y,x),al(z))",
            "as(x, y, z) + as(y, x, z) = 0",
        ),
        "right_hom_alternative_linearized" => single(
            "right_hom_alternative_linearized",
            IdentityAST::equation(
                Expr::plus(
                    left_part(v("x"), v("y"), v("z")),
                    left_part(v("x"), v("z"), v("y")),
                ),
                Expr::plus(
                    right_part(v("x"), v("y"), v("z")),
                    right_part(v("x"), v("z"), v("y")),
                ),
            ),
            "mu(al(x),mu(y,z)) + mu(al(x),mu(z,y)) = mu(mu(x,y),al(z)) + mu(mu(x,z),al(y))",
            "as(x, y, z) + as(x, z, y) = 0",
        ),
        "hom_flexible" => single(
            "hom_flexible",
            hom_assoc_equation("x", "y", "x"),
            "mu(al(x), mu(y,x)) = mu(mu(x,y), al(x))",
            "as(x, y, x) = 0",
        ),
        "associator_alternating_12" => single(
            "associator_alternating_12",
            alternating(["x", "y", "z"], ["y", "x", "z"]),
            "mu(al(x),mu(y,z)) - mu(mu(x,y),al(z)) = mu(mu(y,x),al(z)) - mu(al(y),mu(x,z))",
            "as(x, y, z) = -as(y, x, z)",
        ),
        "associator_alternating_23" => single(
            "associator_alternating_23",
            alternating(["x", "y", "z"], ["x", "z", "y"]),
            "mu(al(x),mu(y,z)) - mu(mu(x,y),al(z)) = mu(mu(x,z),al(y)) - mu(al(x),mu(z,y))",
            "as(x, y, z) = -as(x, z, y)",
        ),
        "associator_alternating_13" => single(
            "associator_alternating_13",
            alternating(["x", "y", "z"], ["z", "y", "x"]),
            "mu(al(x),mu(y,z)) - mu(mu(x,y),al(z)) = mu(mu(z,y),al(x)) - mu(al(z),mu(y,x))",
            "as(x, y, z) = -as(z, y, x)",
        ),
        "commutative" => single(
            "commutative",
            IdentityAST::equation(mu(v("x"), v("y")), mu(v("y"), v("x"))),
            "mu(x,y) = mu(y,x)",
            "mu(x, y) = mu(y, x)",
        ),
        "hom_jordan" => BuiltinIdentity {
            requires_commutative: true,
            ..single(
                "hom_jordan",
                IdentityAST::equation(
                    mu(Expr::alpha_pow(2, v("x")), mu(v("y"), xx())),
                    mu(mu(al(v("x")), v("y")), al(xx())),
                ),
                "mu(al^2(x), mu(y, mu(x,x))) = mu(mu(al(x), y), al(mu(x,x)))",
                "Hom-Jordan identity",
            )
        },
        "hom_jordan_variant_a" => BuiltinIdentity {
            requires_commutative: true,
            ..single(
                "hom_jordan_variant_a",
                IdentityAST::equation(
                    mu(al(v("x")), mu(v("y"), xx())),
                    mu(mu(v("x"), v("y")), al(xx())),
                ),
                "mu(al(x), mu(y, mu(x,x))) = mu(mu(x,y), al(mu(x,x)))",
                "Jordan-type identity with a single alpha on each side",
            )
        },
        "hom_jordan_variant_b" => BuiltinIdentity {
            requires_commutative: true,
            ..single(
                "hom_jordan_variant_b",
                IdentityAST::equation(
                    mu(al(v("x")), mu(v("y"), xx())),
                    mu(mu(v("x"), v("y")), mu(v("x"), al(v("x")))),
                ),
                "mu(al(x), mu(y, mu(x,x))) = mu(mu(x,y), mu(x, al(x)))",
                "Jordan-type identity twisting inside the square",
            )
        },
        "anticommute_left_consequence" => BuiltinIdentity {
            universal: false,
            ..single(
                "anticommute_left_consequence",
                IdentityAST::equation(
                    left_part(v("x"), v("y"), v("z")),
                    Expr::negated(left_part(v("y"), v("x"), v("z"))),
                ),
                "mu(al(x),mu(y,z)) = -mu(al(y),mu(x,z))",
                "for anticommuting x, y in a Hom-alternative algebra",
            )
        },
        "anticommute_right_consequence" => BuiltinIdentity {
            universal: false,
            ..single(
                "anticommute_right_consequence",
                IdentityAST::equation(
                    mu(mu(v("z"), v("x")), al(v("y"))),
                    Expr::negated(mu(mu(v("z"), v("y")), al(v("x")))),
                ),
                "mu(mu(z,x),al(y)) = -mu(mu(z,y),al(x))",
                "for anticommuting x, y in a Hom-alternative algebra",
            )
        },
        "noncommutative_hom_jordan" => {
            let flex = builtin("hom_flexible")?;
            let jordan = builtin("hom_jordan")?;
            BuiltinIdentity {
                name: "noncommutative_hom_jordan",
                clauses: vec![flex.clauses[0].clone(), jordan.clauses[0].clone()],
                surface: vec![flex.surface[0], jordan.surface[0]],
                requires_commutative: false,
                universal: true,
                description: "Hom-flexible and Hom-Jordan, without commutativity",
            }
        }
        other => return Err(IdentityError::UnknownIdentity(other.to_string())),
    };
    Ok(b)
}

/// Every builtin in catalog order.
pub fn all_builtins() -> Vec<BuiltinIdentity> {
    builtin_names()
        .iter()
        .map(|n| builtin(n).expect("catalog names resolve"))
        .collect()
}
