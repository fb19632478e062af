use crate::identities::{Expr, IdentityAST, Sign};
use crate::scalar::{Rational, Scalar};

use super::lexer::{Cursor, Tok};
use super::scalar::exponent;
use super::ParseError;

/// Parses `lhs = rhs` into an identity with body `lhs − rhs`.
pub fn parse_identity(text: &str) -> Result<IdentityAST, ParseError> {
    let mut cur = Cursor::new(text)?;
    let lhs = iexpr(&mut cur)?;
    cur.expect(&Tok::Eq)?;
    let rhs = iexpr(&mut cur)?;
    cur.expect_eof()?;
    Ok(IdentityAST::equation(lhs, rhs))
}

/// Parses a single identity expression (no `=`).
pub fn parse_identity_expr(text: &str) -> Result<Expr, ParseError> {
    let mut cur = Cursor::new(text)?;
    let e = iexpr(&mut cur)?;
    cur.expect_eof()?;
    Ok(e)
}

fn iexpr(cur: &mut Cursor<'_>) -> Result<Expr, ParseError> {
    let mut items = Vec::new();
    let first = if cur.eat(&Tok::Minus) {
        Sign::Minus
    } else {
        Sign::Plus
    };
    items.push((first, iterm(cur)?));
    loop {
        let sign = match cur.peek() {
            Tok::Plus => Sign::Plus,
            Tok::Minus => Sign::Minus,
            _ => break,
        };
        cur.bump();
        items.push((sign, iterm(cur)?));
    }
    if items.len() == 1 && items[0].0 == Sign::Plus {
        return Ok(items.pop().expect("one item").1);
    }
    Ok(Expr::Sum(items))
}

fn iterm(cur: &mut Cursor<'_>) -> Result<Expr, ParseError> {
    // a number followed by `*` or `/` is a coefficient; a lone `0` is zero
    if let Tok::Int(n) = cur.peek().clone() {
        match cur.peek_at(1) {
            Tok::Star | Tok::Slash => {
                cur.bump();
                let c = coefficient(cur, n)?;
                cur.expect(&Tok::Star)?;
                return Ok(Expr::scale(c, ifactor(cur)?));
            }
            _ => {}
        }
    }
    ifactor(cur)
}

fn coefficient(cur: &mut Cursor<'_>, num: num_bigint::BigInt) -> Result<Scalar, ParseError> {
    if !cur.eat(&Tok::Slash) {
        return Ok(Scalar::from_rational(Rational::from_integer(num)));
    }
    let position = cur.position();
    match cur.peek().clone() {
        Tok::Int(d) => {
            cur.bump();
            if d == 0.into() {
                return Err(ParseError::DivisionByZero { position });
            }
            Ok(Scalar::from_rational(Rational::new(num, d)))
        }
        _ => Err(cur.unexpected("an integer denominator")),
    }
}

fn ifactor(cur: &mut Cursor<'_>) -> Result<Expr, ParseError> {
    let position = cur.position();
    match cur.peek().clone() {
        Tok::Int(n) if n == 0.into() => {
            cur.bump();
            Ok(Expr::zero())
        }
        Tok::Ident(name) if name == "al" => {
            cur.bump();
            let k = if cur.eat(&Tok::Caret) {
                let p = cur.position();
                let k = exponent(cur)?;
                if k == 0 {
                    return Err(ParseError::Unexpected {
                        position: p,
                        expected: "a positive power".into(),
                        found: "`0`".into(),
                    });
                }
                k
            } else {
                1
            };
            let mut args = call_args(cur)?;
            check_arity("al", 1, args.len(), position)?;
            Ok(Expr::alpha_pow(k, args.pop().expect("one arg")))
        }
        Tok::Ident(name) if name == "mu" => {
            cur.bump();
            let mut args = call_args(cur)?;
            check_arity("mu", 2, args.len(), position)?;
            let r = args.pop().expect("two args");
            let l = args.pop().expect("two args");
            Ok(Expr::mu(l, r))
        }
        Tok::Ident(name) => {
            cur.bump();
            Ok(Expr::Var(name))
        }
        Tok::LParen => {
            cur.bump();
            let e = iexpr(cur)?;
            cur.expect(&Tok::RParen)?;
            Ok(e)
        }
        _ => Err(cur.unexpected("a variable, `al`, `mu`, `0` or `(`")),
    }
}

fn call_args(cur: &mut Cursor<'_>) -> Result<Vec<Expr>, ParseError> {
    cur.expect(&Tok::LParen)?;
    let mut args = vec![iexpr(cur)?];
    loop {
        match cur.peek() {
            Tok::Comma => {
                cur.bump();
                args.push(iexpr(cur)?);
            }
            Tok::RParen => {
                cur.bump();
                return Ok(args);
            }
            _ => return Err(cur.unexpected("`,` or `)`")),
        }
    }
}

fn check_arity(
    name: &str,
    expected: usize,
    found: usize,
    position: super::Position,
) -> Result<(), ParseError> {
    if expected == found {
        Ok(())
    } else {
        Err(ParseError::Arity {
            position,
            name: name.to_string(),
            expected,
            found,
        })
    }
}
