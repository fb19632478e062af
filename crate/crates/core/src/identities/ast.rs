use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Expression over variables, `μ`, powers of `α`, and scalar coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Expr {
    Var(String),
    /// `α^k(e)` with `k ≥ 1`.
    Alpha(u32, Box<Expr>),
    Mu(Box<Expr>, Box<Expr>),
    Scale(Scalar, Box<Expr>),
    /// Signed sum; the empty sum is zero.
    Sum(Vec<(Sign, Expr)>),
}

impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn mu(left: Expr, right: Expr) -> Expr {
        Expr::Mu(Box::new(left), Box::new(right))
    }

    pub fn al(e: Expr) -> Expr {
        Expr::alpha_pow(1, e)
    }

    pub fn alpha_pow(k: u32, e: Expr) -> Expr {
        assert!(k >= 1, "alpha power must be at least one");
        Expr::Alpha(k, Box::new(e))
    }

    pub fn scale(c: Scalar, e: Expr) -> Expr {
        Expr::Scale(c, Box::new(e))
    }

    pub fn zero() -> Expr {
        Expr::Sum(Vec::new())
    }

    pub fn negated(e: Expr) -> Expr {
        Expr::Sum(vec![(Sign::Minus, e)])
    }

    /// `a - b`.
    pub fn diff(a: Expr, b: Expr) -> Expr {
        Expr::Sum(vec![(Sign::Plus, a), (Sign::Minus, b)])
    }

    /// `a + b`.
    pub fn plus(a: Expr, b: Expr) -> Expr {
        Expr::Sum(vec![(Sign::Plus, a), (Sign::Plus, b)])
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Alpha(_, e) | Expr::Scale(_, e) => e.collect_vars(out),
            Expr::Mu(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Expr::Sum(items) => items.iter().for_each(|(_, e)| e.collect_vars(out)),
        }
    }

    /// Variable-occurrence profiles of the distributed terms, deduplicated.
    fn profiles(&self, vars: &[String]) -> Vec<Vec<u32>> {
        match self {
            Expr::Var(v) => {
                let mut p = vec![0; vars.len()];
                if let Some(i) = vars.iter().position(|x| x == v) {
                    p[i] = 1;
                }
                vec![p]
            }
            Expr::Alpha(_, e) | Expr::Scale(_, e) => e.profiles(vars),
            Expr::Mu(l, r) => {
                let (lp, rp) = (l.profiles(vars), r.profiles(vars));
                let mut out = Vec::new();
                for a in &lp {
                    for b in &rp {
                        let p: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        if !out.contains(&p) {
                            out.push(p);
                        }
                    }
                }
                out
            }
            Expr::Sum(items) => {
                let mut out: Vec<Vec<u32>> = Vec::new();
                for (_, e) in items {
                    for p in e.profiles(vars) {
                        if !out.contains(&p) {
                            out.push(p);
                        }
                    }
                }
                out
            }
        }
    }

    /// Largest power of `α` appearing, counting nesting.
    pub fn max_alpha_power(&self) -> u32 {
        match self {
            Expr::Var(_) => 0,
            Expr::Alpha(k, e) => k + e.max_alpha_power(),
            Expr::Scale(_, e) => e.max_alpha_power(),
            Expr::Mu(l, r) => l.max_alpha_power().max(r.max_alpha_power()),
            Expr::Sum(items) => items
                .iter()
                .map(|(_, e)| e.max_alpha_power())
                .max()
                .unwrap_or(0),
        }
    }

    pub fn uses_alpha(&self) -> bool {
        match self {
            Expr::Var(_) => false,
            Expr::Alpha(..) => true,
            Expr::Scale(_, e) => e.uses_alpha(),
            Expr::Mu(l, r) => l.uses_alpha() || r.uses_alpha(),
            Expr::Sum(items) => items.iter().any(|(_, e)| e.uses_alpha()),
        }
    }

    /// Renames variables; unmapped names are kept.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Expr {
        match self {
            Expr::Var(v) => Expr::Var(map.get(v).cloned().unwrap_or_else(|| v.clone())),
            Expr::Alpha(k, e) => Expr::Alpha(*k, Box::new(e.rename(map))),
            Expr::Scale(c, e) => Expr::Scale(c.clone(), Box::new(e.rename(map))),
            Expr::Mu(l, r) => Expr::mu(l.rename(map), r.rename(map)),
            Expr::Sum(items) => Expr::Sum(items.iter().map(|(s, e)| (*s, e.rename(map))).collect()),
        }
    }
}

/// An identity `body = 0` quantified over `vars`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct IdentityAST {
    pub vars: Vec<String>,
    pub body: Expr,
}

impl IdentityAST {
    /// `lhs = rhs`, stored as `lhs − rhs`; variables in first-use order.
    pub fn equation(lhs: Expr, rhs: Expr) -> IdentityAST {
        IdentityAST::from_body(Expr::diff(lhs, rhs))
    }

    pub fn from_body(body: Expr) -> IdentityAST {
        let mut vars = Vec::new();
        body.collect_vars(&mut vars);
        IdentityAST { vars, body }
    }

    /// True iff every distributed term uses each variable exactly once.
    pub fn is_multilinear(&self) -> bool {
        self.body
            .profiles(&self.vars)
            .iter()
            .all(|p| p.iter().all(|&c| c == 1))
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &Scalar) -> fmt::Result {
    match c.as_rational() {
        Some(q) => write!(f, "{q}"),
        None => write!(f, "({c})"),
    }
}

/// Writes `e` so it parses back as a factor.
fn write_factor(f: &mut fmt::Formatter<'_>, e: &Expr) -> fmt::Result {
    match e {
        Expr::Sum(items) if !items.is_empty() => write!(f, "({e})"),
        Expr::Scale(..) => write!(f, "({e})"),
        _ => write!(f, "{e}"),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(v) => f.write_str(v),
            Expr::Alpha(1, e) => write!(f, "al({e})"),
            Expr::Alpha(k, e) => write!(f, "al^{k}({e})"),
            Expr::Mu(l, r) => write!(f, "mu({l}, {r})"),
            Expr::Scale(c, e) => {
                write_coefficient(f, c)?;
                f.write_str("*")?;
                write_factor(f, e)
            }
            Expr::Sum(items) if items.is_empty() => f.write_str("0"),
            Expr::Sum(items) => {
                for (i, (sign, e)) in items.iter().enumerate() {
                    match (i, sign) {
                        (0, Sign::Plus) => {}
                        (0, Sign::Minus) => f.write_str("-")?,
                        (_, Sign::Plus) => f.write_str(" + ")?,
                        (_, Sign::Minus) => f.write_str(" - ")?,
                    }
                    match e {
                        Expr::Sum(inner) if !inner.is_empty() => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for IdentityAST {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Expr::Sum(items)
                if items.len() == 2 && items[0].0 == Sign::Plus && items[1].0 == Sign::Minus =>
            {
                write!(f, "{} = ", items[0].1)?;
                // a bare sum on the right needs no parentheses
                write!(f, "{}", items[1].1)
            }
            body => write!(f, "{body} = 0"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Expr {
        Expr::var("x")
    }
    fn y() -> Expr {
        Expr::var("y")
    }
    fn z() -> Expr {
        Expr::var("z")
    }

    #[test]
    fn multilinearity() {
        // left alternative: x repeated
        let left = IdentityAST::equation(
            Expr::mu(Expr::al(x()), Expr::mu(x(), y())),
            Expr::mu(Expr::mu(x(), x()), Expr::al(y())),
        );
        assert!(!left.is_multilinear());
        let assoc = IdentityAST::equation(
            Expr::mu(Expr::al(x()), Expr::mu(y(), z())),
            Expr::mu(Expr::mu(x(), y()), Expr::al(z())),
        );
        assert!(assoc.is_multilinear());
        assert_eq!(assoc.vars, vec!["x", "y", "z"]);
        assert!(IdentityAST::from_body(x()).is_multilinear());
        // a term missing a variable is not multilinear
        let missing = IdentityAST::equation(Expr::mu(x(), y()), x());
        assert!(!missing.is_multilinear());
    }

    #[test]
    fn printing() {
        let e = IdentityAST::equation(
            Expr::mu(Expr::alpha_pow(2, x()), Expr::mu(y(), Expr::mu(x(), x()))),
            Expr::negated(Expr::scale(Scalar::ratio(1, 2), Expr::plus(x(), y()))),
        );
        assert_eq!(e.to_string(), "mu(al^2(x), mu(y, mu(x, x))) = -1/2*(x + y)");
        assert_eq!(e.body.max_alpha_power(), 2);
        assert_eq!(IdentityAST::from_body(x()).to_string(), "x = 0");
    }
}
