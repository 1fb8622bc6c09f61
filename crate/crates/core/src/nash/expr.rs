//! Ideal presentations such as `a0*a1 + (y_2*x^2 - y*x_2*x, x_2*y^2)`.
//!
//! ```text
//! sum     := product ("+" product)*
//! product := power ("*" power)*
//! power   := primary ("^" INT)?
//! primary := ATOM | "(" [poly ("," poly)*] ")" | "[" sum "]"
//! ```
//!
//! Atoms name previously computed ideals. `a_3`, `𝔞_3` and `a3` all denote
//! the atom `a3`. Parentheses always hold a generator list; use brackets to
//! group ideal expressions.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::poly::{Parser, Polynomial, PolynomialRing, Token};

/// Name under which the ideal of jet order `n` is bound.
pub fn atom_name(n: u32) -> String {
    format!("a{n}")
}

fn normalize_atom(raw: &str) -> String {
    raw.chars().filter(|&c| c != '_').map(|c| if c == '𝔞' { 'a' } else { c }).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub enum IdealExpr<C> {
    Atom(String),
    Generators(Vec<Polynomial<C>>),
    Sum(Vec<IdealExpr<C>>),
    Product(Vec<IdealExpr<C>>),
    Power(Box<IdealExpr<C>>, u32),
}

impl<C: Field> IdealExpr<C> {
    /// Parses an expression whose generator lists live in `ring`.
    pub fn parse(text: &str, ring: &PolynomialRing) -> Result<Self> {
        let mut parser = Parser::new(text)?;
        let expr = sum(&mut parser, ring)?;
        match parser.peek() {
            Token::End => Ok(expr),
            _ => parser.unexpected("`+`, `*` or end of input"),
        }
    }

    /// Names of all atoms referenced.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            IdealExpr::Atom(a) => {
                out.insert(a.clone());
            }
            IdealExpr::Generators(_) => {}
            IdealExpr::Sum(xs) | IdealExpr::Product(xs) => xs.iter().for_each(|x| x.collect_atoms(out)),
            IdealExpr::Power(x, _) => x.collect_atoms(out),
        }
    }

    /// Evaluates in `ring`; atoms are looked up in `env` and moved into
    /// `ring` (so lower jet orders embed into higher ones).
    pub fn evaluate(&self, ring: &PolynomialRing, env: &HashMap<String, Ideal<C>>) -> Result<Ideal<C>> {
        match self {
            IdealExpr::Atom(a) => env.get(a).ok_or_else(|| Error::UndefinedAtom(a.clone()))?.map_into(ring),
            IdealExpr::Generators(gens) => {
                let gens = gens.iter().map(|g| g.map_into(ring)).collect::<Result<Vec<_>>>()?;
                Ideal::new(ring, gens)
            }
            IdealExpr::Sum(xs) => {
                let mut acc = Ideal::zero(ring);
                for x in xs {
                    acc = acc.sum(&x.evaluate(ring, env)?)?;
                }
                Ok(acc)
            }
            IdealExpr::Product(xs) => {
                let mut acc = Ideal::unit(ring);
                for x in xs {
                    acc = acc.product(&x.evaluate(ring, env)?)?;
                }
                Ok(acc)
            }
            IdealExpr::Power(x, k) => x.evaluate(ring, env)?.power(*k),
        }
    }
}

fn sum<C: Field>(p: &mut Parser, ring: &PolynomialRing) -> Result<IdealExpr<C>> {
    let mut terms = vec![product(p, ring)?];
    while *p.peek() == Token::Plus {
        p.advance();
        terms.push(product(p, ring)?);
    }
    Ok(if terms.len() == 1 { terms.pop().unwrap() } else { IdealExpr::Sum(terms) })
}

fn product<C: Field>(p: &mut Parser, ring: &PolynomialRing) -> Result<IdealExpr<C>> {
    let mut factors = vec![power(p, ring)?];
    while *p.peek() == Token::Star {
        p.advance();
        factors.push(power(p, ring)?);
    }
    Ok(if factors.len() == 1 { factors.pop().unwrap() } else { IdealExpr::Product(factors) })
}

fn power<C: Field>(p: &mut Parser, ring: &PolynomialRing) -> Result<IdealExpr<C>> {
    let base = primary(p, ring)?;
    if *p.peek() == Token::Caret {
        p.advance();
        let k = p.positive_int()?;
        return Ok(IdealExpr::Power(Box::new(base), k));
    }
    Ok(base)
}

fn primary<C: Field>(p: &mut Parser, ring: &PolynomialRing) -> Result<IdealExpr<C>> {
    match p.peek().clone() {
        Token::Ident(name) => {
            p.advance();
            Ok(IdealExpr::Atom(normalize_atom(&name)))
        }
        Token::LParen => {
            p.advance();
            let mut gens = Vec::new();
            if *p.peek() != Token::RParen {
                gens.push(p.sum(ring)?);
                while *p.peek() == Token::Comma {
                    p.advance();
                    gens.push(p.sum(ring)?);
                }
            }
            p.expect(Token::RParen)?;
            Ok(IdealExpr::Generators(gens))
        }
        Token::LBracket => {
            p.advance();
            let inner = sum(p, ring)?;
            p.expect(Token::RBracket)?;
            Ok(inner)
        }
        _ => p.unexpected("an ideal name, `(` or `[`"),
    }
}

impl<C: Field> fmt::Display for IdealExpr<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn joined<C: Field>(f: &mut fmt::Formatter<'_>, xs: &[IdealExpr<C>], sep: &str) -> fmt::Result {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                match x {
                    IdealExpr::Sum(_) => write!(f, "[{x}]")?,
                    _ => write!(f, "{x}")?,
                }
            }
            Ok(())
        }
        match self {
            IdealExpr::Atom(a) => f.write_str(a),
            IdealExpr::Generators(gens) => {
                f.write_str("(")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(")")
            }
            IdealExpr::Sum(xs) => joined(f, xs, " + "),
            IdealExpr::Product(xs) => joined(f, xs, "*"),
            IdealExpr::Power(x, k) => match **x {
                IdealExpr::Atom(_) | IdealExpr::Generators(_) => write!(f, "{x}^{k}"),
                _ => write!(f, "[{x}]^{k}"),
            },
        }
    }
}

impl<C: Field> fmt::Debug for IdealExpr<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealExpr({self})")
    }
}

/// Outcome of comparing a computed ideal with an expected presentation.
#[derive(Clone, PartialEq, Eq)]
pub struct VerificationReport<C> {
    pub equal: bool,
    pub computed_in_expected: bool,
    pub expected_in_computed: bool,
    /// A generator of the computed ideal outside the expected one.
    pub computed_witness: Option<Polynomial<C>>,
    /// A generator of the expected ideal outside the computed one.
    pub expected_witness: Option<Polynomial<C>>,
}

impl<C: Field> fmt::Display for VerificationReport<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equal {
            return f.write_str("computed = expected");
        }
        let mut lines = Vec::new();
        if let Some(w) = &self.computed_witness {
            lines.push(format!("computed ⊄ expected: witness {w}"));
        }
        if let Some(w) = &self.expected_witness {
            lines.push(format!("expected ⊄ computed: witness {w}"));
        }
        f.write_str(&lines.join("; "))
    }
}

impl<C: Field> fmt::Debug for VerificationReport<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VerificationReport")
            .field("equal", &self.equal)
            .field("computed_witness", &self.computed_witness)
            .field("expected_witness", &self.expected_witness)
            .finish()
    }
}

/// Evaluates `expected` in the ring of `computed` and certifies equality by
/// mutual containment, reporting a witness for each failing direction.
pub fn verify_presentation<C: Field>(
    computed: &Ideal<C>,
    expected: &IdealExpr<C>,
    env: &HashMap<String, Ideal<C>>,
) -> Result<VerificationReport<C>> {
    let ring = computed.ring();
    let expected = expected.evaluate(ring, env)?.with_groebner_basis()?;
    let computed = if computed.cached_basis().is_some() { computed.clone() } else { computed.clone().with_groebner_basis()? };
    let computed_witness = expected.containment_witness(&computed)?;
    let expected_witness = computed.containment_witness(&expected)?;
    let computed_in_expected = computed_witness.is_none();
    let expected_in_computed = expected_witness.is_none();
    Ok(VerificationReport {
        equal: computed_in_expected && expected_in_computed,
        computed_in_expected,
        expected_in_computed,
        computed_witness,
        expected_witness,
    })
}
