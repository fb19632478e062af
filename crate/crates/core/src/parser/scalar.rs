use crate::scalar::{Rational, Scalar};

use super::lexer::{Cursor, Tok};
use super::{ParseError, MAX_EXPONENT};

/// Parses `text` as a rational function of the declared parameters.
pub fn parse_scalar_expr<S: AsRef<str>>(text: &str, params: &[S]) -> Result<Scalar, ParseError> {
    let mut cur = Cursor::new(text)?;
    let s = expr(&mut cur, params)?;
    cur.expect_eof()?;
    Ok(s)
}

fn expr<S: AsRef<str>>(cur: &mut Cursor<'_>, params: &[S]) -> Result<Scalar, ParseError> {
    let mut acc = term(cur, params)?;
    loop {
        match cur.peek() {
            Tok::Plus => {
                cur.bump();
                acc = &acc + &term(cur, params)?;
            }
            Tok::Minus => {
                cur.bump();
                acc = &acc - &term(cur, params)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn term<S: AsRef<str>>(cur: &mut Cursor<'_>, params: &[S]) -> Result<Scalar, ParseError> {
    let mut acc = unary(cur, params)?;
    loop {
        match cur.peek() {
            Tok::Star => {
                cur.bump();
                acc = &acc * &unary(cur, params)?;
            }
            Tok::Slash => {
                let position = cur.position();
                cur.bump();
                let d = unary(cur, params)?;
                acc = acc
                    .checked_div(&d)
                    .map_err(|_| ParseError::DivisionByZero { position })?;
            }
            _ => return Ok(acc),
        }
    }
}

fn unary<S: AsRef<str>>(cur: &mut Cursor<'_>, params: &[S]) -> Result<Scalar, ParseError> {
    if cur.eat(&Tok::Minus) {
        return Ok(-unary(cur, params)?);
    }
    factor(cur, params)
}

fn factor<S: AsRef<str>>(cur: &mut Cursor<'_>, params: &[S]) -> Result<Scalar, ParseError> {
    let b = base(cur, params)?;
    if cur.eat(&Tok::Caret) {
        let e = exponent(cur)?;
        return Ok(b.pow(e));
    }
    Ok(b)
}

pub(super) fn exponent(cur: &mut Cursor<'_>) -> Result<u32, ParseError> {
    let position = cur.position();
    match cur.peek().clone() {
        Tok::Int(n) => {
            cur.bump();
            u32::try_from(n)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or(ParseError::ExponentTooLarge { position })
        }
        _ => Err(cur.unexpected("an unsigned integer exponent")),
    }
}

fn base<S: AsRef<str>>(cur: &mut Cursor<'_>, params: &[S]) -> Result<Scalar, ParseError> {
    let position = cur.position();
    match cur.peek().clone() {
        Tok::Int(n) => {
            cur.bump();
            Ok(Scalar::from_rational(Rational::from_integer(n)))
        }
        Tok::Ident(name) => {
            cur.bump();
            if params.iter().any(|p| p.as_ref() == name) {
                Ok(Scalar::param(&name))
            } else {
                Err(ParseError::UndeclaredParameter { position, name })
            }
        }
        Tok::LParen => {
            cur.bump();
            let e = expr(cur, params)?;
            cur.expect(&Tok::RParen)?;
            Ok(e)
        }
        _ => Err(cur.unexpected("a number, parameter or `(`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: [&str; 6] = ["a", "a2", "a3", "a4", "b", "c"];

    fn parse(s: &str) -> Result<Scalar, ParseError> {
        parse_scalar_expr(s, &P)
    }

    #[test]
    fn coefficients() {
        let s = parse("a4*a3/a2").unwrap();
        let expected = &(&Scalar::param("a4") * &Scalar::param("a3")) / &Scalar::param("a2");
        assert_eq!(s, expected);
        assert!(s.num().total_degree() == 2 && s.den().total_degree() == 1);
        assert_eq!(parse("1/2").unwrap(), Scalar::ratio(1, 2));
        assert_eq!(parse("a^2 - a").unwrap().to_string(), "a^2 - a");
        assert_eq!(parse("-a^2").unwrap(), -Scalar::param("a").pow(2));
        assert_eq!(
            parse("(a + b)*(a - b)").unwrap(),
            parse("a^2 - b^2").unwrap()
        );
        assert_eq!(parse("--3").unwrap(), Scalar::from_int(3));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse("a + q"),
            Err(ParseError::UndeclaredParameter { ref name, .. }) if name == "q"
        ));
        let e = parse("1/(a - a)").unwrap_err();
        assert!(matches!(e, ParseError::DivisionByZero { .. }));
        assert_eq!(e.position().offset, 1);
        let e = parse("a *").unwrap_err();
        assert_eq!(e.position().offset, 3);
        assert!(matches!(
            parse("a^99999"),
            Err(ParseError::ExponentTooLarge { .. })
        ));
        assert!(parse("a b").is_err());
    }
}
