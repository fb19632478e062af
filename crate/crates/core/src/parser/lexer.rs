use num_bigint::BigInt;

use super::{ParseError, Position};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eq,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub offset: usize,
}

pub fn position(text: &str, offset: usize) -> Position {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rfind('\n')
        .map_or(before.chars().count(), |i| before[i + 1..].chars().count())
        + 1;
    Position {
        offset,
        line,
        column,
    }
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            let n: BigInt = text[i..end].parse().expect("digits");
            out.push(Token {
                tok: Tok::Int(n),
                offset: i,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            out.push(Token {
                tok: Tok::Ident(text[i..end].to_string()),
                offset: i,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '=' => Tok::Eq,
            other => {
                return Err(ParseError::Unexpected {
                    position: position(text, i),
                    expected: "a token".into(),
                    found: format!("`{other}`"),
                })
            }
        };
        chars.next();
        out.push(Token { tok, offset: i });
    }
    out.push(Token {
        tok: Tok::Eof,
        offset: text.len(),
    });
    Ok(out)
}

/// Cursor over a token list.
pub struct Cursor<'t> {
    pub text: &'t str,
    tokens: Vec<Token>,
    index: usize,
}

impl<'t> Cursor<'t> {
    pub fn new(text: &'t str) -> Result<Cursor<'t>, ParseError> {
        Ok(Cursor {
            text,
            tokens: tokenize(text)?,
            index: 0,
        })
    }

    pub fn peek(&self) -> &Tok {
        &self.tokens[self.index].tok
    }

    pub fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.index + ahead).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    pub fn offset(&self) -> usize {
        self.tokens[self.index].offset
    }

    pub fn position(&self) -> Position {
        position(self.text, self.offset())
    }

    pub fn bump(&mut self) -> Tok {
        let t = self.tokens[self.index].tok.clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        t
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn unexpected(&self, expected: &str) -> ParseError {
        ParseError::Unexpected {
            position: self.position(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        }
    }

    pub fn expect(&mut self, tok: &Tok) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    pub fn expect_eof(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            _ => Err(self.unexpected("end of input")),
        }
    }
}
