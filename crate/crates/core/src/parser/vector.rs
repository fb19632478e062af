use crate::algebra::Vector;
use crate::scalar::{Scalar, Var};

use super::lexer::position;
use super::{parse_scalar_expr, ParseError};

/// Parses a linear combination of basis labels such as
/// `e0 + a1*e1 - a4*a3/a2*e3`, with coefficients over the parameters.
pub fn parse_vector<S: AsRef<str>, L: AsRef<str>>(
    text: &str,
    params: &[S],
    labels: &[L],
) -> Result<Vector, ParseError> {
    let mut names: Vec<&str> = params.iter().map(AsRef::as_ref).collect();
    names.extend(labels.iter().map(AsRef::as_ref));
    let s = parse_scalar_expr(text, &names)?;
    let label_vars: Vec<Var> = labels.iter().map(|l| Var::named(l.as_ref())).collect();
    let is_label = |v: Var| label_vars.contains(&v);
    let not_linear = || ParseError::Unexpected {
        position: position(text, 0),
        expected: "a linear combination of basis labels".into(),
        found: format!("`{}`", text.trim()),
    };
    if s.den().vars().into_iter().any(is_label) {
        return Err(not_linear());
    }
    let mut coords = vec![Scalar::zero(); labels.len()];
    for (m, coeff) in s.num().split_by(is_label) {
        let [(v, 1)] = m.pairs() else {
            return Err(not_linear());
        };
        let k = label_vars.iter().position(|l| l == v).expect("label var");
        coords[k] = Scalar::new(coeff, s.den().clone()).expect("nonzero denominator");
    }
    Ok(Vector::from_coords(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations() {
        let labels = ["e0", "e1", "e2", "e3"];
        let params = ["a2", "a3", "a5", "a6"];
        let v = parse_vector("a5*e1 + a6*e2 + (a6*a3 - a5)/a2*e3", &params, &labels).unwrap();
        assert!(v.get(0).is_zero());
        assert_eq!(v.get(1), &Scalar::param("a5"));
        let expected = &(&(&Scalar::param("a6") * &Scalar::param("a3")) - &Scalar::param("a5"))
            / &Scalar::param("a2");
        assert_eq!(v.get(3), &expected);
        assert!(parse_vector("0", &params, &labels).unwrap().is_zero());
        assert_eq!(
            parse_vector("-e1", &params, &labels).unwrap().get(1),
            &Scalar::from_int(-1)
        );
        assert!(parse_vector("e1*e2", &params, &labels).is_err());
        assert!(parse_vector("a2", &params, &labels).is_err());
        assert!(parse_vector("1/e1", &params, &labels).is_err());
    }
}
