//! Expression grammar: `kind(args)` where args are comma-separated integers,
//! optionally followed by `; point` or `| second list`.

use std::fmt;
use std::str::FromStr;

use mzvlab::{Error, Index, Rational, Result, SignedIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Zeta,
    ZetaStar,
    AZeta,
    AZetaStar,
    Li,
    Ky,
    ZbStar,
    Hz,
    Dual,
    Stuffle,
    StarExpand,
}

impl Kind {
    const ALL: [(&'static str, Kind); 11] = [
        ("zeta", Kind::Zeta),
        ("zetastar", Kind::ZetaStar),
        ("azeta", Kind::AZeta),
        ("azetastar", Kind::AZetaStar),
        ("li", Kind::Li),
        ("ky", Kind::Ky),
        ("zbstar", Kind::ZbStar),
        ("hz", Kind::Hz),
        ("dual", Kind::Dual),
        ("stuffle", Kind::Stuffle),
        ("starexpand", Kind::StarExpand),
    ];

    fn name(self) -> &'static str {
        Kind::ALL.iter().find(|(_, k)| *k == self).map(|(n, _)| *n).expect("listed")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expression {
    Zeta(Index),
    ZetaStar(Index),
    AZeta(SignedIndex),
    AZetaStar(SignedIndex),
    Li(Index, Rational),
    Ky(Index, Index),
    ZbStar(Index),
    Hz(Index, Rational),
    Dual(Index),
    Stuffle(Index, Index),
    StarExpand(Index),
}

impl Expression {
    pub fn kind(&self) -> Kind {
        match self {
            Expression::Zeta(_) => Kind::Zeta,
            Expression::ZetaStar(_) => Kind::ZetaStar,
            Expression::AZeta(_) => Kind::AZeta,
            Expression::AZetaStar(_) => Kind::AZetaStar,
            Expression::Li(..) => Kind::Li,
            Expression::Ky(..) => Kind::Ky,
            Expression::ZbStar(_) => Kind::ZbStar,
            Expression::Hz(..) => Kind::Hz,
            Expression::Dual(_) => Kind::Dual,
            Expression::Stuffle(..) => Kind::Stuffle,
            Expression::StarExpand(_) => Kind::StarExpand,
        }
    }
}

fn rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.kind().name();
        match self {
            Expression::Zeta(k)
            | Expression::ZetaStar(k)
            | Expression::ZbStar(k)
            | Expression::Dual(k)
            | Expression::StarExpand(k) => write!(f, "{name}({k})"),
            Expression::AZeta(s) | Expression::AZetaStar(s) => write!(f, "{name}({s})"),
            Expression::Li(k, x) => write!(f, "{name}({k}; {})", rational(x)),
            Expression::Hz(k, a) => write!(f, "{name}({k}; a={})", rational(a)),
            Expression::Ky(a, b) | Expression::Stuffle(a, b) => write!(f, "{name}({a} | {b})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Word,
    Int(i64),
    Sym(char),
    End,
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    /// Next token with its byte offset and source text.
    fn next(&mut self) -> Result<(Tok, usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::End, start, ""));
        };
        let span = |n: usize| &rest[..n];
        if c.is_ascii_alphabetic() {
            let n = rest.find(|ch: char| !ch.is_ascii_alphanumeric()).unwrap_or(rest.len());
            self.pos += n;
            return Ok((Tok::Word, start, span(n)));
        }
        if c.is_ascii_digit() || (c == '-' && rest[1..].starts_with(|ch: char| ch.is_ascii_digit())) {
            let n = 1 + rest[1..].find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len() - 1);
            self.pos += n;
            let v =
                span(n).parse().map_err(|_| syntax(start, format!("integer '{}' is too large", span(n))))?;
            return Ok((Tok::Int(v), start, span(n)));
        }
        if "(),;|/=".contains(c) {
            self.pos += 1;
            return Ok((Tok::Sym(c), start, span(1)));
        }
        Err(syntax(start, format!("unexpected character '{c}'")))
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax { offset, message: message.into() }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    peeked: Option<(Tok, usize, &'a str)>,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Result<(Tok, usize, &'a str)> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex.next()?);
        }
        Ok(self.peeked.expect("just filled"))
    }

    fn bump(&mut self) -> Result<(Tok, usize, &'a str)> {
        let t = self.peek()?;
        self.peeked = None;
        Ok(t)
    }

    fn expect(&mut self, c: char) -> Result<usize> {
        match self.bump()? {
            (Tok::Sym(s), at, _) if s == c => Ok(at),
            (_, at, text) => Err(syntax(at, format!("expected '{c}', found {}", describe(text)))),
        }
    }

    /// `int (, int)*` with each entry checked by `ok`.
    fn ints(&mut self, what: &str, ok: impl Fn(i64) -> bool) -> Result<Vec<i64>> {
        let mut out = Vec::new();
        loop {
            match self.bump()? {
                (Tok::Int(v), at, _) => {
                    if !ok(v) {
                        return Err(syntax(at, format!("{v} is not a valid {what}")));
                    }
                    out.push(v);
                }
                (_, at, text) => {
                    return Err(syntax(at, format!("expected {what}, found {}", describe(text))))
                }
            }
            match self.peek()? {
                (Tok::Sym(','), ..) => {
                    self.bump()?;
                }
                _ => return Ok(out),
            }
        }
    }

    fn index(&mut self) -> Result<Index> {
        let v = self.ints("positive integer", |v| v >= 1 && v <= u32::MAX as i64)?;
        Index::new(v.into_iter().map(|x| x as u32).collect())
    }

    fn signed(&mut self) -> Result<SignedIndex> {
        let v = self.ints("nonzero integer", |v| v != 0 && v.abs() <= i32::MAX as i64)?;
        SignedIndex::new(v.into_iter().map(|x| x as i32).collect())
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = match self.bump()? {
            (Tok::Int(v), ..) => v,
            (_, at, text) => return Err(syntax(at, format!("expected a number, found {}", describe(text)))),
        };
        let den = match self.peek()? {
            (Tok::Sym('/'), ..) => {
                self.bump()?;
                match self.bump()? {
                    (Tok::Int(d), _, _) if d > 0 => d,
                    (_, at, text) => {
                        return Err(syntax(
                            at,
                            format!("expected a positive denominator, found {}", describe(text)),
                        ))
                    }
                }
            }
            _ => 1,
        };
        Ok(Rational::new(num.into(), den.into()))
    }

    fn expression(&mut self) -> Result<Expression> {
        let (tok, at, name) = self.bump()?;
        if tok != Tok::Word {
            return Err(syntax(at, format!("expected a function name, found {}", describe(name))));
        }
        let kind = Kind::ALL
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, k)| *k)
            .ok_or_else(|| syntax(at, format!("unknown function '{name}'")))?;
        self.expect('(')?;
        let e = match kind {
            Kind::Zeta => Expression::Zeta(self.index()?),
            Kind::ZetaStar => Expression::ZetaStar(self.index()?),
            Kind::AZeta => Expression::AZeta(self.signed()?),
            Kind::AZetaStar => Expression::AZetaStar(self.signed()?),
            Kind::ZbStar => Expression::ZbStar(self.index()?),
            Kind::Dual => Expression::Dual(self.index()?),
            Kind::StarExpand => Expression::StarExpand(self.index()?),
            Kind::Li => {
                let k = self.index()?;
                self.expect(';')?;
                Expression::Li(k, self.rational()?)
            }
            Kind::Hz => {
                let k = self.index()?;
                self.expect(';')?;
                match self.bump()? {
                    (Tok::Word, _, "a") => {}
                    (_, at, text) => {
                        return Err(syntax(at, format!("expected 'a', found {}", describe(text))))
                    }
                }
                self.expect('=')?;
                Expression::Hz(k, self.rational()?)
            }
            Kind::Ky | Kind::Stuffle => {
                let a = self.index()?;
                self.expect('|')?;
                let b = self.index()?;
                if kind == Kind::Ky {
                    Expression::Ky(a, b)
                } else {
                    Expression::Stuffle(a, b)
                }
            }
        };
        self.expect(')')?;
        match self.bump()? {
            (Tok::End, ..) => Ok(e),
            (_, at, text) => Err(syntax(at, format!("unexpected trailing {}", describe(text)))),
        }
    }
}

fn describe(text: &str) -> String {
    if text.is_empty() {
        "end of input".into()
    } else {
        format!("'{text}'")
    }
}

/// Parses one expression. Syntax errors carry the byte offset of the
/// offending token.
pub fn parse_expression(text: &str) -> Result<Expression> {
    Parser { lex: Lexer { text, pos: 0 }, peeked: None }.expression()
}

impl FromStr for Expression {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_expression(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn offset(text: &str) -> usize {
        match parse_expression(text) {
            Err(Error::Syntax { offset, .. }) => offset,
            other => panic!("{text}: {other:?}"),
        }
    }

    #[test]
    fn grammar_examples_round_trip() {
        for text in [
            "zeta(2,1)",
            "zetastar(2,1,1)",
            "azeta(-2,3)",
            "azetastar(-1,2)",
            "li(2,1; 1/2)",
            "ky(2,1 | 1,2)",
            "zbstar(2,2,1)",
            "hz(3,2; a=1/4)",
            "dual(1,1,2,1)",
            "stuffle(2,1 | 1)",
            "starexpand(2,1,1)",
        ] {
            let e = parse_expression(text).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse_expression(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn parses_signed_and_points() {
        assert_eq!(
            parse_expression("azeta(-2,3)").unwrap(),
            Expression::AZeta(SignedIndex::new(vec![-2, 3]).unwrap())
        );
        assert_eq!(
            parse_expression(" li( 1 ; -1 ) ").unwrap(),
            Expression::Li(Index::from([1]), Rational::from_integer((-1).into()))
        );
        assert_eq!(parse_expression("li(2; 2/4)").unwrap().to_string(), "li(2; 1/2)");
    }

    #[test]
    fn syntax_errors_report_offsets() {
        assert_eq!(offset("zeta(2,,1)"), 7);
        assert_eq!(offset("zeta(0)"), 5);
        assert_eq!(offset("zeta(2"), 6);
        assert_eq!(offset("nope(2)"), 0);
        assert_eq!(offset("zeta(2) x"), 8);
        assert_eq!(offset("azeta(0)"), 6);
        assert_eq!(offset("li(2; 1/0)"), 8);
        assert_eq!(offset("hz(2; b=1)"), 6);
        assert_eq!(offset("ky(2 1)"), 5);
        assert_eq!(offset("zeta(2#)"), 6);
    }
}
