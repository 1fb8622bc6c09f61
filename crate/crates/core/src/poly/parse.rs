//! Text form of polynomials.
//!
//! ```text
//! sum     := product (("+" | "-") product)*
//! product := unary ("*" unary)*
//! unary   := ("+" | "-") unary | power
//! power   := primary ("^" INT)?
//! primary := INT | INT "/" INT | VARIABLE | "(" sum ")"
//! ```
//!
//! `VARIABLE` is a base name optionally followed by `_` and a jet index
//! (`x`, `x_1`, `y_3`). Implicit multiplication is rejected and whitespace is
//! ignored. Exponents are positive integers.

use super::polynomial::Polynomial;
use super::ring::PolynomialRing;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(s) => format!("number `{s}`"),
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::End => "end of input".to_string(),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Caret => "`^`".into(),
            Token::Slash => "`/`".into(),
            Token::Comma => "`,`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::LBracket => "`[`".into(),
            Token::RBracket => "`]`".into(),
        }
    }
}

/// Token stream with 1-based character columns.
pub(crate) struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
}

impl Parser {
    pub(crate) fn new(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let single = match c {
                '+' => Some(Token::Plus),
                '-' | '−' => Some(Token::Minus),
                '*' | '·' => Some(Token::Star),
                '^' => Some(Token::Caret),
                '/' => Some(Token::Slash),
                ',' => Some(Token::Comma),
                '(' => Some(Token::LParen),
                ')' => Some(Token::RParen),
                '[' => Some(Token::LBracket),
                ']' => Some(Token::RBracket),
                _ => None,
            };
            if let Some(tok) = single {
                tokens.push((tok, column));
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push((Token::Int(chars[start..i].iter().collect()), column));
            } else if c.is_alphabetic() {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((Token::Ident(chars[start..i].iter().collect()), column));
            } else {
                return Err(Error::Syntax { position: column, message: format!("unexpected character `{c}`") });
            }
        }
        tokens.push((Token::End, chars.len() + 1));
        Ok(Self { tokens, cursor: 0 })
    }

    pub(crate) fn peek(&self) -> &Token {
        &self.tokens[self.cursor].0
    }

    pub(crate) fn column(&self) -> usize {
        self.tokens[self.cursor].1
    }

    pub(crate) fn advance(&mut self) -> Token {
        let tok = self.tokens[self.cursor].0.clone();
        if self.cursor + 1 < self.tokens.len() {
            self.cursor += 1;
        }
        tok
    }

    pub(crate) fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.column(), message: message.into() })
    }

    pub(crate) fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    pub(crate) fn expect(&mut self, tok: Token) -> Result<()> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            self.unexpected(&tok.describe())
        }
    }

    pub(crate) fn expect_end(&self) -> Result<()> {
        match self.peek() {
            Token::End => Ok(()),
            Token::Ident(_) | Token::Int(_) | Token::LParen => {
                self.error("implicit multiplication is not allowed; use `*`")
            }
            _ => self.unexpected("end of input"),
        }
    }

    pub(crate) fn positive_int(&mut self) -> Result<u32> {
        match self.peek().clone() {
            Token::Int(s) => {
                let n = s.parse::<u32>().ok().filter(|&n| n > 0);
                match n {
                    Some(n) => {
                        self.advance();
                        Ok(n)
                    }
                    None => self.error(format!("`{s}` is not a positive 32-bit integer")),
                }
            }
            _ => self.unexpected("a positive integer"),
        }
    }

    pub(crate) fn sum<C: Field>(&mut self, ring: &PolynomialRing) -> Result<Polynomial<C>> {
        let mut acc = self.product(ring)?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.advance();
                    acc = acc + self.product(ring)?;
                }
                Token::Minus => {
                    self.advance();
                    acc = acc - self.product(ring)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product<C: Field>(&mut self, ring: &PolynomialRing) -> Result<Polynomial<C>> {
        let mut acc = self.unary(ring)?;
        while *self.peek() == Token::Star {
            self.advance();
            acc = acc * self.unary(ring)?;
        }
        Ok(acc)
    }

    fn unary<C: Field>(&mut self, ring: &PolynomialRing) -> Result<Polynomial<C>> {
        match self.peek() {
            Token::Minus => {
                self.advance();
                Ok(-self.unary(ring)?)
            }
            Token::Plus => {
                self.advance();
                self.unary(ring)
            }
            _ => self.power(ring),
        }
    }

    fn power<C: Field>(&mut self, ring: &PolynomialRing) -> Result<Polynomial<C>> {
        let base = self.primary(ring)?;
        if *self.peek() == Token::Caret {
            self.advance();
            let k = self.positive_int()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn primary<C: Field>(&mut self, ring: &PolynomialRing) -> Result<Polynomial<C>> {
        let column = self.column();
        match self.peek().clone() {
            Token::Int(num) => {
                self.advance();
                let text = if *self.peek() == Token::Slash {
                    self.advance();
                    match self.advance() {
                        Token::Int(den) => format!("{num}/{den}"),
                        _ => return Err(Error::Syntax { position: column, message: "malformed rational".into() }),
                    }
                } else {
                    num
                };
                let c: C = text.parse().map_err(|_| Error::Syntax {
                    position: column,
                    message: format!("invalid coefficient `{text}`"),
                })?;
                Ok(Polynomial::constant(ring, c))
            }
            Token::Ident(name) => {
                self.advance();
                let v = ring.lookup(&name)?;
                Ok(Polynomial::variable(ring, v))
            }
            Token::LParen => {
                self.advance();
                let inner = self.sum(ring)?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            _ => self.unexpected("a number, variable or `(`"),
        }
    }
}

impl<C: Field> Polynomial<C> {
    /// Parses the text form; see the module docs for the grammar.
    pub fn parse(text: &str, ring: &PolynomialRing) -> Result<Self> {
        let mut parser = Parser::new(text)?;
        if *parser.peek() == Token::End {
            return parser.error("empty polynomial");
        }
        let f = parser.sum(ring)?;
        parser.expect_end()?;
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomial::Monomial;
    use crate::poly::ring::MonomialOrder;
    use num_rational::BigRational;
    use num_traits::One;

    type P = Polynomial<BigRational>;

    fn ring() -> PolynomialRing {
        PolynomialRing::new(["x", "y"], 1, MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn parses_examples() {
        let r = ring();
        let f = P::parse("x*y_1 - y*x_1", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert!(P::parse("0", &r).unwrap().is_zero());
        let g = P::parse("3/2*x^2", &r).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.terms()[0].coeff, BigRational::new(3.into(), 2.into()));
        assert_eq!(g.terms()[0].monomial, Monomial::variable(0, 2));
    }

    #[test]
    fn whitespace_and_nesting() {
        let r = ring();
        let a = P::parse("  ( x + y ) ^ 2 - - x_1 ", &r).unwrap();
        let b = P::parse("x^2+2*x*y+y^2+x_1", &r).unwrap();
        assert_eq!(a, b);
        assert!(P::parse("-(1)", &r).unwrap() + P::one(&r) == P::zero(&r));
        assert!(P::parse("x_0", &r).unwrap() == P::parse("x", &r).unwrap());
        assert!(P::parse("1", &r).unwrap().terms()[0].coeff.is_one());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let r = ring();
        match P::parse("x y", &r) {
            Err(Error::Syntax { position, message }) => {
                assert_eq!(position, 3);
                assert!(message.contains("implicit"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(P::parse("x +", &r), Err(Error::Syntax { position: 4, .. })));
        assert!(matches!(P::parse("x^0", &r), Err(Error::Syntax { .. })));
        assert!(matches!(P::parse("x $ y", &r), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(P::parse("1/0", &r), Err(Error::Syntax { .. })));
        assert!(matches!(P::parse("(x", &r), Err(Error::Syntax { .. })));
        assert!(matches!(P::parse("", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unknown_variables() {
        let r = ring();
        assert_eq!(P::parse("z + 1", &r), Err(Error::UnknownVariable("z".into())));
        assert_eq!(P::parse("x_2", &r), Err(Error::UnknownVariable("x_2".into())));
    }
}
