use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{witness_from, AlgebraSpec, CheckReport, Vector, Witness};
use crate::par;
use crate::scalar::{Rational, Scalar, Var};

use super::ast::IdentityAST;
use super::eval::{generic_element, Evaluator};
use super::IdentityError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Strategy {
    /// Bind every variable to a generic element.
    Generic,
    /// Evaluate on all basis tuples; multilinear identities only.
    Basis,
    /// Basis when multilinear, generic otherwise.
    Auto,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Generic => "generic",
            Strategy::Basis => "basis",
            Strategy::Auto => "auto",
        }
    }

    /// The strategy actually used for `ast`.
    pub fn resolve(self, ast: &IdentityAST) -> Strategy {
        match self {
            Strategy::Auto if ast.is_multilinear() => Strategy::Basis,
            Strategy::Auto => Strategy::Generic,
            s => s,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "generic" => Ok(Strategy::Generic),
            "basis" => Ok(Strategy::Basis),
            "auto" => Ok(Strategy::Auto),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

/// Checks `ast.body = 0` for all values of its variables.
pub fn check(
    a: &AlgebraSpec,
    ast: &IdentityAST,
    strategy: Strategy,
) -> Result<CheckReport, IdentityError> {
    check_bound(a, ast, &HashMap::new(), strategy)
}

/// Like [`check`], with some variables fixed to given vectors. Only the
/// remaining variables are quantified.
pub fn check_bound(
    a: &AlgebraSpec,
    ast: &IdentityAST,
    fixed: &HashMap<&str, &Vector>,
    strategy: Strategy,
) -> Result<CheckReport, IdentityError> {
    let evaluator = Evaluator::for_identity(a, ast)?;
    let free: Vec<&str> = ast
        .vars
        .iter()
        .map(String::as_str)
        .filter(|v| !fixed.contains_key(v))
        .collect();
    let witness = match strategy.resolve(ast) {
        Strategy::Basis => {
            if !ast.is_multilinear() {
                return Err(IdentityError::NotMultilinear(ast.to_string()));
            }
            basis_witness(a, ast, &evaluator, fixed, &free)?
        }
        _ => generic_witness(a, ast, &evaluator, fixed, &free)?,
    };
    let mut assumptions = a.assumptions();
    for v in fixed.values() {
        for c in v.coords() {
            assumptions.note_denominator(c);
        }
    }
    Ok(CheckReport::from_outcome(witness, assumptions))
}

fn generic_witness(
    a: &AlgebraSpec,
    ast: &IdentityAST,
    evaluator: &Evaluator<'_>,
    fixed: &HashMap<&str, &Vector>,
    free: &[&str],
) -> Result<Option<Witness>, IdentityError> {
    let generics: Vec<Vector> = free.iter().map(|v| generic_element(a, v)).collect();
    let mut bindings = fixed.clone();
    for (v, g) in free.iter().zip(&generics) {
        bindings.insert(v, g);
    }
    let residual = evaluator.eval(&ast.body, &bindings)?;
    Ok(witness_from(Vec::new(), residual).map(|mut w| {
        w.counterexample = find_counterexample(a, &w.residual);
        w
    }))
}

fn basis_witness(
    a: &AlgebraSpec,
    ast: &IdentityAST,
    evaluator: &Evaluator<'_>,
    fixed: &HashMap<&str, &Vector>,
    free: &[&str],
) -> Result<Option<Witness>, IdentityError> {
    let n = a.dim();
    let m = free.len();
    let count = n
        .checked_pow(m as u32)
        .ok_or(IdentityError::TooManyTuples)?;
    let basis: Vec<Vector> = (0..n).map(|i| a.basis_vector(i)).collect();
    let tuples: Vec<usize> = (0..count).collect();
    let found = par::find_first(&tuples, |&t| {
        // row-major: the first variable varies slowest
        let mut tuple = vec![0; m];
        let mut rest = t;
        for slot in tuple.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        let mut bindings = fixed.clone();
        for (v, &i) in free.iter().zip(&tuple) {
            bindings.insert(v, &basis[i]);
        }
        match evaluator.eval(&ast.body, &bindings) {
            Ok(r) => witness_from(tuple, r).map(Ok),
            Err(e) => Some(Err(e)),
        }
    });
    Ok(found.transpose()?.map(|mut w| {
        if !w.residual.is_constant() {
            w.counterexample = find_counterexample(a, &w.residual);
        }
        w
    }))
}

/// Searches small integer points where `residual` is defined and nonzero.
/// Parameters declared nonzero, and every recorded assumption, are kept
/// nonzero.
pub fn find_counterexample(a: &AlgebraSpec, residual: &Scalar) -> Option<Vec<(String, Rational)>> {
    let mut vars: Vec<Var> = residual.vars().into_iter().collect();
    let declared: Vec<(Var, bool)> = a
        .params()
        .iter()
        .map(|p| (Var::named(&p.name), p.nonzero))
        .collect();
    for &(v, _) in &declared {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    let assumptions = a.assumptions();
    const ATTEMPTS: u64 = 512;
    for attempt in 0..ATTEMPTS {
        let point: Vec<(Var, Rational)> = vars
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                (
                    v,
                    Rational::from_integer(small_value(attempt, i as u64).into()),
                )
            })
            .collect();
        let value = |v: Var| point.iter().find(|(w, _)| *w == v).map(|(_, q)| q.clone());
        if declared
            .iter()
            .any(|&(v, nz)| nz && value(v).is_some_and(|q| q == Rational::from_integer(0.into())))
        {
            continue;
        }
        if assumptions.iter().any(|p| {
            p.eval(value)
                .map(|q| q == Rational::from_integer(0.into()))
                .unwrap_or(true)
        }) {
            continue;
        }
        match residual.specialize_with(value) {
            Ok(q) if q != Rational::from_integer(0.into()) => {
                let mut out: Vec<(String, Rational)> = point
                    .into_iter()
                    .filter(|(v, _)| residual.vars().contains(v))
                    .map(|(v, q)| (v.name().to_string(), q))
                    .collect();
                out.sort_by(|x, y| x.0.cmp(&y.0));
                return Some(out);
            }
            _ => continue,
        }
    }
    None
}

// Deterministic values in -3..=3; the first attempt is all ones.
fn small_value(attempt: u64, index: u64) -> i64 {
    if attempt == 0 {
        return 1;
    }
    let mut h = attempt
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(index.wrapping_mul(0xBF58_476D_1CE4_E5B9));
    h ^= h >> 31;
    h = h.wrapping_mul(0x94D0_49BB_1331_11EB);
    h ^= h >> 29;
    (h % 7) as i64 - 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{LinMap, Param, Verdict};
    use crate::identities::ast::Expr;

    // commutative but not associative: e0 e0 = e1, e1 e0 = e0 e1 = e0
    fn sample() -> AlgebraSpec {
        AlgebraSpec::new(
            "sample",
            vec!["e0".into(), "e1".into()],
            vec![],
            vec![
                (0, 0, 1, Scalar::one()),
                (0, 1, 0, Scalar::one()),
                (1, 0, 0, Scalar::one()),
            ],
        )
        .unwrap()
        .with_alpha(Some(LinMap::identity(2)))
        .unwrap()
    }

    fn associative() -> IdentityAST {
        let (x, y, z) = (Expr::var("x"), Expr::var("y"), Expr::var("z"));
        IdentityAST::equation(
            Expr::mu(Expr::al(x.clone()), Expr::mu(y.clone(), z.clone())),
            Expr::mu(Expr::mu(x, y), Expr::al(z)),
        )
    }

    #[test]
    fn strategies_agree() {
        let a = sample();
        let g = check(&a, &associative(), Strategy::Generic).unwrap();
        let b = check(&a, &associative(), Strategy::Basis).unwrap();
        assert_eq!(g.verdict, Verdict::Fails);
        assert_eq!(b.verdict, Verdict::Fails);
        let w = b.witness.unwrap();
        // (e0 e0) e0 - e0 (e0 e0) = e1 e0 - e0 e1 = 0; (e0, e0, e1) is first
        assert_eq!(w.tuple, vec![0, 0, 1]);
        let gw = g.witness.unwrap();
        assert!(gw.tuple.is_empty());
        assert!(gw.counterexample.is_some());
    }

    #[test]
    fn basis_rejects_nonlinear() {
        let x = Expr::var("x");
        let sq = IdentityAST::from_body(Expr::mu(x.clone(), x));
        let err = check(&sample(), &sq, Strategy::Basis).unwrap_err();
        assert!(matches!(err, IdentityError::NotMultilinear(_)));
        assert_eq!(Strategy::Auto.resolve(&sq), Strategy::Generic);
    }

    #[test]
    fn fixed_bindings() {
        let a = sample();
        let e1 = a.basis_vector(1);
        let fixed = HashMap::from([("x", &e1)]);
        // e1 is central here, and (e1 y) z = y z only at ... just evaluate
        let r = check_bound(&a, &associative(), &fixed, Strategy::Generic).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
    }

    #[test]
    fn counterexample_respects_nonzero_params() {
        let a = AlgebraSpec::new(
            "p",
            vec!["e".into()],
            vec![Param::new("s", true)],
            vec![(0, 0, 0, Scalar::param("s"))],
        )
        .unwrap();
        let r = &Scalar::param("s") - &Scalar::one();
        let ce = find_counterexample(&a, &r).unwrap();
        assert_eq!(ce[0].0, "s");
        assert_ne!(ce[0].1, Rational::from_integer(0.into()));
        assert_ne!(ce[0].1, Rational::from_integer(1.into()));
    }
}
