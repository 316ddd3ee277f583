//! Line-oriented serialization.
//!
//! One term per line, `n | mu | nu | re_num/re_den | im_num/im_den`, words as
//! comma-separated letters and `-` for the empty word. A tensor term writes
//! one `n | mu | nu` block per leg, joined by `⊗`, followed by the
//! coefficient fields. Terms appear in canonical form and monomial order.

use std::fmt::Write as _;

use num_rational::BigRational;

use crate::algebra::{AlgebraElement, CuntzMonomial, Index};
use crate::bialgebra::Tensor;
use crate::error::{Error, Result};
use crate::scalar::{parse_ratio, Scalar};

fn word(w: &[Index]) -> String {
    if w.is_empty() {
        "-".to_string()
    } else {
        w.iter().map(Index::to_string).collect::<Vec<_>>().join(",")
    }
}

fn ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn block(m: &CuntzMonomial) -> String {
    format!("{} | {} | {}", m.n(), word(m.mu()), word(m.nu()))
}

pub fn scalar_fields(c: &Scalar) -> String {
    format!("{} | {}", ratio(c.re()), ratio(c.im()))
}

pub fn serialize_element(x: &AlgebraElement) -> String {
    let mut out = String::new();
    for (m, c) in x.canonical_form().terms() {
        let _ = writeln!(out, "{} | {}", block(m), scalar_fields(c));
    }
    out
}

pub fn serialize_tensor<const R: usize>(u: &Tensor<R>) -> String {
    let mut out = String::new();
    for (legs, c) in u.canonical_form().terms() {
        let blocks: Vec<String> = legs.iter().map(block).collect();
        let _ = writeln!(out, "{} | {}", blocks.join(" ⊗ "), scalar_fields(c));
    }
    out
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Serial { line, msg: msg.into() }
}

fn parse_word(line: usize, text: &str) -> Result<Vec<Index>> {
    let text = text.trim();
    if text == "-" {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| t.trim().parse().map_err(|_| bad(line, format!("bad letter `{t}`")))).collect()
}

fn parse_block(line: usize, fields: &[&str]) -> Result<CuntzMonomial> {
    let n: Index = fields[0].trim().parse().map_err(|_| bad(line, "bad component"))?;
    CuntzMonomial::new(n, parse_word(line, fields[1])?, parse_word(line, fields[2])?)
}

fn parse_scalar(line: usize, re: &str, im: &str) -> Result<Scalar> {
    let re = parse_ratio(re).ok_or_else(|| bad(line, "bad real part"))?;
    let im = parse_ratio(im).ok_or_else(|| bad(line, "bad imaginary part"))?;
    Ok(Scalar::new(re, im))
}

fn parse_line<const R: usize>(line: usize, text: &str) -> Result<([CuntzMonomial; R], Scalar)> {
    let parts: Vec<&str> = text.split('⊗').collect();
    if parts.len() != R {
        return Err(bad(line, format!("expected {R} blocks")));
    }
    let mut legs = Vec::with_capacity(R);
    let mut coefficient = None;
    for (k, part) in parts.iter().enumerate() {
        let fields: Vec<&str> = part.split('|').collect();
        let want = if k + 1 == R { 5 } else { 3 };
        if fields.len() != want {
            return Err(bad(line, format!("expected {want} fields, found {}", fields.len())));
        }
        legs.push(parse_block(line, &fields)?);
        if k + 1 == R {
            coefficient = Some(parse_scalar(line, fields[3], fields[4])?);
        }
    }
    let legs: [CuntzMonomial; R] = legs.try_into().map_err(|_| bad(line, "leg count"))?;
    Ok((legs, coefficient.expect("last block parsed")))
}

pub fn deserialize_element(text: &str) -> Result<AlgebraElement> {
    let mut terms = Vec::new();
    for (i, l) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let ([m], c) = parse_line::<1>(i + 1, l)?;
        terms.push((m, c));
    }
    Ok(AlgebraElement::from_terms(terms))
}

pub fn deserialize_tensor<const R: usize>(text: &str) -> Result<Tensor<R>> {
    let mut terms = Vec::new();
    for (i, l) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        terms.push(parse_line::<R>(i + 1, l)?);
    }
    Ok(Tensor::from_terms(terms))
}
