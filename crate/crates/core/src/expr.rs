//! Surface syntax for elements: a recursive-descent parser and the canonical
//! pretty-printer.
//!
//! ```text
//! element := term (('+' | '-') term)*  |  '0'
//! term    := scalar? '*'? factor ('*' factor)*
//! factor  := 's(' int ',' int ')' ['^*'] | 'I(' int ')' | '(' element ')' ['^*']
//! scalar  := '[' rational [('+' | '-') rational 'i'] ']'
//! ```

use std::fmt::Write as _;

use crate::algebra::{reduce_word, AlgebraElement, CuntzMonomial, Index, RawWord};
use crate::bialgebra::Tensor;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    Generator { n: Index, i: Index, starred: bool },
    Unit(Index),
    Sum(Vec<(bool, Expr)>),
    /// Optional scalar followed by at least one factor.
    Product(Option<Scalar>, Vec<Expr>),
    Adjoint(Box<Expr>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn int(&mut self) -> Result<Index> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].chars().take_while(char::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected an integer");
        }
        self.pos += len;
        match self.src[start..self.pos].parse() {
            Ok(v) => Ok(v),
            Err(_) => Err(Error::Syntax { pos: start, msg: "integer out of range".into() }),
        }
    }

    fn element(&mut self) -> Result<Expr> {
        let start = self.pos;
        if self.eat("0") {
            // a bare `0`, not the start of a longer token
            match self.peek() {
                None | Some(')') => return Ok(Expr::Zero),
                _ => self.pos = start,
            }
        }
        let mut terms = vec![(false, self.term()?)];
        loop {
            if self.eat("+") {
                terms.push((false, self.term()?));
            } else if self.eat("-") {
                terms.push((true, self.term()?));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().unwrap().1 } else { Expr::Sum(terms) })
    }

    fn scalar(&mut self) -> Result<Scalar> {
        let open = self.pos;
        self.expect("[")?;
        let close = match self.src[self.pos..].find(']') {
            Some(off) => self.pos + off,
            None => return self.err("unterminated scalar"),
        };
        let body = &self.src[self.pos..close];
        let value = body.parse::<Scalar>().map_err(|_| Error::Syntax {
            pos: open,
            msg: format!("invalid scalar `[{body}]`"),
        })?;
        self.pos = close + 1;
        Ok(value)
    }

    fn term(&mut self) -> Result<Expr> {
        let scalar = if self.peek() == Some('[') {
            let c = self.scalar()?;
            self.eat("*");
            Some(c)
        } else {
            None
        };
        let mut factors = vec![self.factor()?];
        while self.eat("*") {
            factors.push(self.factor()?);
        }
        Ok(if scalar.is_none() && factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(scalar, factors) })
    }

    fn star(&mut self) -> bool {
        self.eat("^*")
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat("s(") {
            let n = self.int()?;
            self.expect(",")?;
            let i = self.int()?;
            self.expect(")")?;
            let starred = self.star();
            Ok(Expr::Generator { n, i, starred })
        } else if self.eat("I(") {
            let n = self.int()?;
            self.expect(")")?;
            Ok(Expr::Unit(n))
        } else if self.eat("(") {
            let inner = self.element()?;
            self.expect(")")?;
            Ok(if self.star() { Expr::Adjoint(Box::new(inner)) } else { inner })
        } else {
            self.err("expected `s(`, `I(` or `(`")
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.element()?;
    p.skip_ws();
    if p.pos != text.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

fn generator_word(n: Index, i: Index, starred: bool) -> Result<RawWord> {
    if n == 0 {
        return Err(Error::ZeroComponent);
    }
    if i == 0 || i > n {
        return Err(Error::LetterOutOfRange { n, index: i });
    }
    Ok(RawWord::new(n, vec![(i, starred)]))
}

/// Evaluates an expression tree. Consecutive generator factors of one
/// component are reduced together as a single word.
pub fn eval(e: &Expr) -> Result<AlgebraElement> {
    match e {
        Expr::Zero => Ok(AlgebraElement::zero()),
        Expr::Generator { n, i, starred } => reduce_word(&generator_word(*n, *i, *starred)?),
        Expr::Unit(n) => AlgebraElement::unit(*n),
        Expr::Adjoint(inner) => Ok(eval(inner)?.adjoint()),
        Expr::Sum(terms) => {
            let mut acc = AlgebraElement::zero();
            for (negated, t) in terms {
                let v = eval(t)?;
                acc = if *negated { &acc - &v } else { &acc + &v };
            }
            Ok(acc)
        }
        Expr::Product(scalar, factors) => {
            let mut acc: Option<AlgebraElement> = None;
            let mut run: Option<RawWord> = None;
            let flush = |acc: &mut Option<AlgebraElement>, run: &mut Option<RawWord>| -> Result<()> {
                if let Some(w) = run.take() {
                    let v = reduce_word(&w)?;
                    *acc = Some(match acc.take() {
                        Some(a) => a.mul(&v),
                        None => v,
                    });
                }
                Ok(())
            };
            for f in factors {
                match f {
                    Expr::Generator { n, i, starred } => {
                        let w = generator_word(*n, *i, *starred)?;
                        match &mut run {
                            Some(r) if r.n == *n => r.letters.extend(w.letters),
                            _ => {
                                flush(&mut acc, &mut run)?;
                                run = Some(w);
                            }
                        }
                    }
                    other => {
                        flush(&mut acc, &mut run)?;
                        let v = eval(other)?;
                        acc = Some(match acc.take() {
                            Some(a) => a.mul(&v),
                            None => v,
                        });
                    }
                }
            }
            flush(&mut acc, &mut run)?;
            let v = acc.unwrap_or_default();
            Ok(match scalar {
                Some(c) => v.scale(c),
                None => v,
            })
        }
    }
}

pub fn parse_element(text: &str) -> Result<AlgebraElement> {
    eval(&parse_expr(text)?)
}

fn render_monomial(m: &CuntzMonomial, out: &mut String) {
    if m.is_unit() {
        let _ = write!(out, "I({})", m.n());
        return;
    }
    let mut factors: Vec<String> = m.mu().iter().map(|i| format!("s({},{i})", m.n())).collect();
    factors.extend(m.nu().iter().rev().map(|i| format!("s({},{i})^*", m.n())));
    out.push_str(&factors.join(" * "));
}

fn render_coefficient(c: &Scalar, out: &mut String) {
    if !c.is_one() {
        let _ = write!(out, "[{c}] * ");
    }
}

/// Canonical text of an element: compact form, terms in monomial order.
pub fn render_element(x: &AlgebraElement) -> String {
    let x = x.canonical_form();
    if x.is_structurally_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::with_capacity(x.len());
    for (m, c) in x.terms() {
        let mut s = String::new();
        render_coefficient(c, &mut s);
        render_monomial(m, &mut s);
        parts.push(s);
    }
    parts.join(" + ")
}

/// Canonical text of a tensor, each simple tensor as `(x)⊗(y)`.
pub fn render_tensor<const R: usize>(u: &Tensor<R>) -> String {
    let u = u.canonical_form();
    if u.is_structurally_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::with_capacity(u.len());
    for (legs, c) in u.terms() {
        let mut s = String::new();
        render_coefficient(c, &mut s);
        let rendered: Vec<String> = legs
            .iter()
            .map(|m| {
                let mut leg = String::from("(");
                render_monomial(m, &mut leg);
                leg.push(')');
                leg
            })
            .collect();
        s.push_str(&rendered.join("⊗"));
        parts.push(s);
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::delta;

    #[test]
    fn parses_generators() {
        assert!(parse_element("s(4,1)").unwrap().structurally_eq(&AlgebraElement::generator(4, 1).unwrap()));
        assert!(parse_element("s(1,1)").unwrap().structurally_eq(&AlgebraElement::unit(1).unwrap()));
    }

    #[test]
    fn relation_through_parser() {
        assert!(parse_element("s(2,1)^* * s(2,2)").unwrap().is_structurally_zero());
        assert!(parse_element("s(2,1)^* * s(2,1)").unwrap().structurally_eq(&AlgebraElement::unit(2).unwrap()));
    }

    #[test]
    fn scaled_sum_collapses() {
        let x = parse_element("[1/2] * I(2) + [1/2] * (s(2,1)*s(2,1)^* + s(2,2)*s(2,2)^*)").unwrap();
        assert_eq!(x, AlgebraElement::unit(2).unwrap());
        assert_eq!(render_element(&x), "I(2)");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_element("s(2,3)"), Err(Error::LetterOutOfRange { n: 2, index: 3 }));
        assert_eq!(parse_element("s(1,2)"), Err(Error::LetterOutOfRange { n: 1, index: 2 }));
        match parse_element("s(2,1) + ") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_element("s(2,1))"), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse_element("[1/0] * I(2)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn complex_scalars_and_adjoints() {
        let x = parse_element("[1/2-3i] * (s(3,1)*s(3,2)^*)^*").unwrap();
        let want = AlgebraElement::monomial(CuntzMonomial::new(3, vec![2], vec![1]).unwrap())
            .scale(&"1/2-3i".parse().unwrap());
        assert!(x.structurally_eq(&want));
        assert_eq!(render_element(&x), "[1/2-3i] * s(3,2) * s(3,1)^*");
    }

    #[test]
    fn renders() {
        assert_eq!(render_element(&AlgebraElement::zero()), "0");
        assert_eq!(parse_element("0").unwrap(), AlgebraElement::zero());
        let x = parse_element("s(3,1)*s(3,2)*s(3,3)^**s(3,1)^* - I(1)").unwrap();
        assert_eq!(render_element(&x), "[-1] * I(1) + s(3,1) * s(3,2) * s(3,3)^* * s(3,1)^*");
        assert_eq!(render_element(&parse_element(&render_element(&x)).unwrap()), render_element(&x));
        let d = delta(&parse_element("s(4,1)").unwrap());
        assert_eq!(render_tensor(&d), "(I(1))⊗(s(4,1)) + (s(2,1))⊗(s(2,1)) + (s(4,1))⊗(I(1))");
    }
}
