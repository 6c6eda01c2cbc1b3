//! Text form of Weyl elements and commutative polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ['-'] (rational | var ['^' nat] | '(' expr ')' ['^' nat])
//! ```
//!
//! Weyl variables are `x1..xn`, `d1..dn` (`x`, `d` when `n = 1`); polynomial
//! variables are `X1..Xn`, `Y1..Yn` (`X`, `Y` when `n = 1`). Products are
//! evaluated with the ring's own multiplication, so `d*x` parses to `x*d + 1`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Algebra, TermMap};
use crate::error::{Error, Result};
use crate::order::ExpPair;
use crate::poly::Poly;
use crate::weyl::WeylElement;
use crate::Rational;

/// Variable spellings: `(first-half names, second-half names)`.
pub type Names = (Vec<String>, Vec<String>);

fn names(n: usize, a: &str, b: &str) -> Names {
    if n == 1 {
        (vec![a.to_string()], vec![b.to_string()])
    } else {
        (
            (1..=n).map(|i| format!("{a}{i}")).collect(),
            (1..=n).map(|i| format!("{b}{i}")).collect(),
        )
    }
}

pub fn weyl_names(n: usize) -> Names {
    names(n, "x", "d")
}

pub fn poly_names(n: usize) -> Names {
    names(n, "X", "Y")
}

pub fn parse_weyl(text: &str, n: usize) -> Result<WeylElement> {
    parse_with(text, n, ('x', 'd'))
}

pub fn parse_poly(text: &str, n: usize) -> Result<Poly> {
    parse_with(text, n, ('X', 'Y'))
}

fn parse_with<A: Algebra>(text: &str, n: usize, letters: (char, char)) -> Result<A> {
    if n == 0 {
        return Err(Error::usage("arity n must be at least 1"));
    }
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        n,
        letters,
    };
    let value = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(p.error_at(t, format!("unexpected {}", t.kind.describe())));
    }
    Ok(value)
}

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    Num(BigInt, Option<BigInt>),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Kind {
    fn describe(&self) -> String {
        match self {
            Kind::Num(a, None) => format!("number {a}"),
            Kind::Num(a, Some(b)) => format!("number {a}/{b}"),
            Kind::Ident(s) => format!("identifier {s:?}"),
            Kind::Plus => "'+'".into(),
            Kind::Minus => "'-'".into(),
            Kind::Star => "'*'".into(),
            Kind::Caret => "'^'".into(),
            Kind::LParen => "'('".into(),
            Kind::RParen => "')'".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: Kind,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, column, message: String| Error::Parse {
        line,
        column,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let single = match c {
            '+' => Some(Kind::Plus),
            '-' => Some(Kind::Minus),
            '*' => Some(Kind::Star),
            '^' => Some(Kind::Caret),
            '(' => Some(Kind::LParen),
            ')' => Some(Kind::RParen),
            _ => None,
        };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if let Some(kind) = single {
            out.push(Token {
                kind,
                line: tl,
                column: tc,
            });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: String = chars[start..i].iter().collect();
            let mut den = None;
            if i < chars.len() && chars[i] == '/' {
                let dstart = i + 1;
                let mut j = dstart;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == dstart {
                    return Err(err(line, col + (i - start) + 1, "expected denominator after '/'".into()));
                }
                let d: String = chars[dstart..j].iter().collect();
                let d: BigInt = d.parse().expect("digits");
                if d.is_zero() {
                    return Err(err(line, col + (dstart - start), "zero denominator".into()));
                }
                den = Some(d);
                i = j;
            }
            col += i - start;
            out.push(Token {
                kind: Kind::Num(num.parse().expect("digits"), den),
                line: tl,
                column: tc,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                kind: Kind::Ident(chars[start..i].iter().collect()),
                line: tl,
                column: tc,
            });
            continue;
        }
        return Err(err(line, col, format!("unexpected character {c:?}")));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    n: usize,
    letters: (char, char),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn error_at(&self, t: &Token, message: String) -> Error {
        Error::Parse {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn error_at_end(&self, message: String) -> Error {
        let (line, column) = self
            .tokens
            .last()
            .map(|t| (t.line, t.column + 1))
            .unwrap_or((1, 1));
        Error::Parse {
            line,
            column,
            message,
        }
    }

    fn eat(&mut self, kind: &Kind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<A: Algebra>(&mut self) -> Result<A> {
        let mut acc: A = self.term()?;
        loop {
            if self.eat(&Kind::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Kind::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<A: Algebra>(&mut self) -> Result<A> {
        let mut acc: A = self.factor()?;
        while self.eat(&Kind::Star) {
            let rhs = self.factor()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Option<u32>> {
        if !self.eat(&Kind::Caret) {
            return Ok(None);
        }
        match self.peek().cloned() {
            Some(Token {
                kind: Kind::Num(k, None),
                ..
            }) => {
                self.pos += 1;
                let t = self.tokens[self.pos - 1].clone();
                u32::try_from(k)
                    .map(Some)
                    .map_err(|_| self.error_at(&t, "exponent too large".into()))
            }
            Some(t) => Err(self.error_at(&t, format!("expected exponent, found {}", t.kind.describe()))),
            None => Err(self.error_at_end("expected exponent".into())),
        }
    }

    fn factor<A: Algebra>(&mut self) -> Result<A> {
        let n = self.n;
        let negate = self.eat(&Kind::Minus);
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error_at_end("unexpected end of input".into()));
        };
        self.pos += 1;
        let value: A = match &tok.kind {
            Kind::Num(a, den) => {
                let q = match den {
                    None => Rational::from_integer(a.clone()),
                    Some(d) => Rational::new(a.clone(), d.clone()),
                };
                A::monomial(ExpPair::zero(n), q)
            }
            Kind::Ident(name) => {
                let var = self.resolve(name, &tok)?;
                let k = self.exponent()?.unwrap_or(1);
                let mut exps = vec![0; 2 * n];
                exps[var] = k;
                A::monomial(ExpPair::from_flat(exps), Rational::one())
            }
            Kind::LParen => {
                let inner: A = self.expr()?;
                if !self.eat(&Kind::RParen) {
                    return match self.peek().cloned() {
                        Some(t) => Err(self.error_at(&t, format!("expected ')', found {}", t.kind.describe()))),
                        None => Err(self.error_at_end("expected ')'".into())),
                    };
                }
                match self.exponent()? {
                    None => inner,
                    Some(k) => {
                        let mut acc = A::one(n);
                        for _ in 0..k {
                            acc = acc.mul(&inner);
                        }
                        acc
                    }
                }
            }
            other => {
                return Err(self.error_at(&tok, format!("unexpected {}", other.describe())));
            }
        };
        Ok(if negate { value.neg() } else { value })
    }

    /// Flat variable index of `name`.
    fn resolve(&self, name: &str, tok: &Token) -> Result<usize> {
        let n = self.n;
        let (a, b) = self.letters;
        let mut chars = name.chars();
        let head = chars.next().expect("nonempty identifier");
        let rest: &str = chars.as_str();
        let half = if head == a {
            0
        } else if head == b {
            n
        } else {
            return Err(self.error_at(tok, format!("unknown variable {name:?}")));
        };
        if rest.is_empty() {
            if n == 1 {
                return Ok(half);
            }
            return Err(self.error_at(
                tok,
                format!("variable {name:?} needs an index 1..{n} when n = {n}"),
            ));
        }
        let idx: usize = rest
            .parse()
            .map_err(|_| self.error_at(tok, format!("unknown variable {name:?}")))?;
        if idx == 0 || idx > n {
            return Err(self.error_at(
                tok,
                format!("variable {name:?} conflicts with arity n = {n}"),
            ));
        }
        Ok(half + idx - 1)
    }
}

fn format_monomial(e: &ExpPair, names: &Names) -> String {
    let n = e.arity();
    let mut parts = Vec::new();
    for (i, &k) in e.as_slice().iter().enumerate() {
        if k == 0 {
            continue;
        }
        let name = if i < n { &names.0[i] } else { &names.1[i - n] };
        if k == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{k}"));
        }
    }
    parts.join("*")
}

/// Deterministic text form: terms by descending total degree, then
/// descending exponent-lex.
pub fn format_terms(terms: &TermMap, names: &Names) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut sorted: Vec<_> = terms.iter().collect();
    sorted.sort_by(|(a, _), (b, _)| match b.total_degree().cmp(&a.total_degree()) {
        Ordering::Equal => b.cmp(a),
        o => o,
    });
    let mut out = String::new();
    for (i, (e, c)) in sorted.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = format_monomial(e, names);
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reorders_noncommuting_product() {
        let dx = parse_weyl("d*x", 1).unwrap();
        assert_eq!(dx.to_string(), "x*d + 1");
    }

    #[test]
    fn already_normal_terms() {
        let w = parse_weyl("x^2*d - d^2 + 1/2", 1).unwrap();
        assert_eq!(w.terms().len(), 3);
        assert_eq!(w.to_string(), "x^2*d - d^2 + 1/2");
    }

    #[test]
    fn indexed_variables() {
        let w = parse_weyl("d1*x2", 2).unwrap();
        assert_eq!(w.to_string(), "x2*d1");
        assert_eq!(parse_weyl("x1", 1).unwrap(), parse_weyl("x", 1).unwrap());
    }

    #[test]
    fn powers_and_parentheses() {
        let a = parse_weyl("(d+x)^2", 1).unwrap();
        let b = parse_weyl("d^2 + 2*x*d + x^2 + 1", 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_weyl("-(x - 2)", 1).unwrap(), parse_weyl("2 - x", 1).unwrap());
        assert_eq!(parse_weyl("-x^2", 1).unwrap().to_string(), "-x^2");
    }

    #[test]
    fn poly_parsing_commutes() {
        let p = parse_poly("Y*X - X*Y", 1).unwrap();
        assert!(p.is_zero());
        assert_eq!(parse_poly("Y1*X2", 2).unwrap().to_string(), "X2*Y1");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_weyl("x +\n  * d", 1) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_weyl("y", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_weyl("x3", 2), Err(Error::Parse { message, .. }) if message.contains("arity")));
        assert!(matches!(parse_weyl("x", 2), Err(Error::Parse { .. })));
        assert!(parse_weyl("x d", 1).is_err());
        assert!(parse_weyl("", 1).is_err());
        assert!(parse_weyl("(x", 1).is_err());
        assert!(parse_weyl("1/0", 1).is_err());
        assert!(parse_weyl("x^", 1).is_err());
        assert!(parse_weyl("X", 1).is_err());
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(parse_weyl("x - x", 1).unwrap().to_string(), "0");
    }
}
