use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::graded::{self, Terms};
use super::monomial::{CuntzMonomial, Index};
use super::word::{reduce_word, RawWord};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finitely supported element of the dense *-subalgebra of `O_* = ⊕ O_n`.
///
/// The stored term map never holds a zero coefficient. Two elements with
/// different term maps may still be equal (`I_2 = s_1 s_1^* + s_2 s_2^*`);
/// `==` decides equality in the algebra, while
/// [`AlgebraElement::structurally_eq`] compares representations.
#[derive(Clone, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<CuntzMonomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: CuntzMonomial) -> Self {
        Self::term(m, Scalar::one())
    }

    pub fn term(m: CuntzMonomial, c: Scalar) -> Self {
        let mut x = Self::zero();
        x.add_term(m, &c);
        x
    }

    pub fn unit(n: Index) -> Result<Self> {
        Ok(Self::monomial(CuntzMonomial::unit(n)?))
    }

    /// The canonical generator `s_i^{(n)}`.
    pub fn generator(n: Index, i: Index) -> Result<Self> {
        Ok(Self::monomial(CuntzMonomial::generator(n, i)?))
    }

    pub fn from_word(w: &RawWord) -> Result<Self> {
        reduce_word(w)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (CuntzMonomial, Scalar)>) -> Self {
        let mut x = Self::zero();
        for (m, c) in terms {
            x.add_term(m, &c);
        }
        x
    }

    pub(crate) fn add_term(&mut self, m: CuntzMonomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&CuntzMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when the term map is empty. Every representation of zero becomes
    /// empty after [`AlgebraElement::canonical_form`]; use `==` otherwise.
    pub fn is_structurally_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        graded::is_zero(&self.as_terms())
    }

    pub fn structurally_eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }

    /// Components `n` carrying at least one term.
    pub fn components(&self) -> BTreeSet<Index> {
        self.terms.keys().map(|m| m.n()).collect()
    }

    /// Keeps the terms whose component satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(Index) -> bool) -> Self {
        AlgebraElement {
            terms: self.terms.iter().filter(|(m, _)| keep(m.n())).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn adjoint(&self) -> Self {
        AlgebraElement { terms: self.terms.iter().map(|(m, c)| (m.adjoint(), c.conj())).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                if let Some(p) = a.mul(b) {
                    out.add_term(p, &(c * d));
                }
            }
        }
        out
    }

    /// Rewrites every monomial of component `n` as the sum of its refinements
    /// at nu-level `level`.
    pub fn expand_to_level(&self, n: Index, level: usize) -> Result<Self> {
        if n == 1 {
            return Ok(self.clone());
        }
        if let Some(m) = self.terms.keys().find(|m| m.n() == n && m.level() > level) {
            return Err(Error::LevelTooLow { n, level, existing: m.level() });
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.n() == n {
                for r in m.refinements(level - m.level()) {
                    out.add_term(r, c);
                }
            } else {
                out.add_term(m.clone(), c);
            }
        }
        Ok(out)
    }

    /// Coordinates of `self` in a linearly independent family of monomials,
    /// obtained by refining only where a deeper monomial of the same class
    /// requires it.
    pub fn expanded(&self) -> Self {
        Self::from_graded(graded::expand(&self.as_terms()))
    }

    /// Unique compact representative of the equality class of `self`.
    pub fn canonical_form(&self) -> Self {
        Self::from_graded(graded::canonical(&self.as_terms()))
    }

    pub fn equals(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }

    /// The coefficient of `s_mu s_nu^*` in `self`, read off as the
    /// `I_n`-coefficient of `s_mu^* · self · s_nu` after reduction.
    ///
    /// When `|nu|` is at least the nu-length of every monomial in the degree
    /// class `|mu| - |nu|` of component `n`, this equals the coefficient of
    /// `(mu, nu)` in the level-`|nu|` expansion of that class.
    pub fn coefficient_extract(&self, n: Index, mu: &[Index], nu: &[Index]) -> Result<Scalar> {
        let mut left: Vec<(Index, bool)> = mu.iter().rev().map(|&i| (i, true)).collect();
        let left = if left.is_empty() {
            AlgebraElement::unit(n)?
        } else {
            reduce_word(&RawWord::new(n, std::mem::take(&mut left)))?
        };
        let right = reduce_word(&RawWord::new(n, nu.iter().map(|&i| (i, false)).collect()))?;
        let sandwich = left.mul(self).mul(&right);
        let unit = CuntzMonomial::unit(n)?;
        Ok(sandwich.terms.get(&unit).cloned().unwrap_or_default())
    }

    /// The scalar identified with the `O_1` component.
    pub fn component_one_coefficient(&self) -> Scalar {
        self.terms.iter().filter(|(m, _)| m.n() == 1).fold(Scalar::zero(), |acc, (_, c)| &acc + c)
    }

    fn as_terms(&self) -> Terms<1> {
        self.terms.iter().map(|(m, c)| ([m.clone()], c.clone())).collect()
    }

    fn from_graded(t: Terms<1>) -> Self {
        AlgebraElement { terms: t.into_iter().map(|([m], c)| (m, c)).collect() }
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for AlgebraElement {}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::mul(self, rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&Scalar::from_int(-1))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::render_element(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: Index, mu: &[Index], nu: &[Index]) -> AlgebraElement {
        AlgebraElement::monomial(CuntzMonomial::new(n, mu.to_vec(), nu.to_vec()).unwrap())
    }

    fn c(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn linear_structure() {
        let x = m(2, &[1], &[]);
        assert!((&x + &AlgebraElement::zero()).structurally_eq(&x));
        assert!((&x + &x.scale(&c(-1))).is_structurally_zero());
        assert_eq!((&x + &m(3, &[1], &[])).components(), [2, 3].into_iter().collect());
    }

    #[test]
    fn products() {
        assert!((&m(2, &[1], &[2]) * &m(2, &[2], &[1])).structurally_eq(&m(2, &[1], &[1])));
        assert!((&m(2, &[1], &[1]) * &m(2, &[2], &[2])).is_structurally_zero());
        assert!((&m(2, &[1], &[]) * &m(3, &[1], &[])).is_structurally_zero());
    }

    #[test]
    fn adjoint_conjugates() {
        assert!(m(2, &[1], &[]).adjoint().structurally_eq(&m(2, &[], &[1])));
        let x = m(2, &[], &[]).scale(&Scalar::i());
        assert!(x.adjoint().structurally_eq(&m(2, &[], &[]).scale(&-Scalar::i())));
    }

    #[test]
    fn level_expansion() {
        let sum = &m(2, &[1], &[1]) + &m(2, &[2], &[2]);
        assert!(m(2, &[], &[]).expand_to_level(2, 1).unwrap().structurally_eq(&sum));
        let s1 = m(2, &[1], &[]);
        let expected = &m(2, &[1, 1], &[1]) + &m(2, &[1, 2], &[2]);
        assert!(s1.expand_to_level(2, 1).unwrap().structurally_eq(&expected));
        // oracle: s_1 times the level-1 expansion of I, read by coefficient_extract
        let product = s1.mul(&sum);
        for (mu, nu) in [(vec![1, 1], vec![1]), (vec![1, 2], vec![2]), (vec![2, 1], vec![1])] {
            let want = if mu[0] == 1 && mu[1] == nu[0] { c(1) } else { c(0) };
            assert_eq!(product.coefficient_extract(2, &mu, &nu).unwrap(), want);
        }
        let o1 = m(1, &[], &[]).scale(&c(5));
        assert!(o1.expand_to_level(1, 7).unwrap().structurally_eq(&o1));
        assert_eq!(
            m(2, &[1], &[1, 2]).expand_to_level(2, 1).unwrap_err(),
            Error::LevelTooLow { n: 2, level: 1, existing: 2 }
        );
    }

    #[test]
    fn equality() {
        let sum = &m(2, &[1], &[1]) + &m(2, &[2], &[2]);
        assert!(m(2, &[], &[]).equals(&sum));
        assert!(!m(2, &[1], &[1]).equals(&m(2, &[], &[])));
        // the failing coefficient: (2),(2) is 0 on the left and 1 on the right
        let diff = &m(2, &[1], &[1]) - &m(2, &[], &[]);
        assert_eq!(diff.coefficient_extract(2, &[2], &[2]).unwrap(), c(-1));
        assert_eq!(m(2, &[1], &[1]).coefficient_extract(2, &[2], &[2]).unwrap(), c(0));
        // deeper cancellation across three levels
        let deep = &(&m(3, &[], &[]) - &m(3, &[1], &[1])) - &m(3, &[2], &[2]);
        let rest = (1..=3).fold(AlgebraElement::zero(), |acc, i| &acc + &m(3, &[3, i], &[3, i]));
        assert!(deep.equals(&rest));
        assert!(!deep.equals(&m(3, &[3], &[3, 1])));
    }

    #[test]
    fn canonical_collapse() {
        let sum = &m(2, &[1], &[1]) + &m(2, &[2], &[2]);
        assert!(sum.canonical_form().structurally_eq(&m(2, &[], &[])));
        let blocked = &m(2, &[1], &[1]) + &m(2, &[2], &[2]).scale(&c(2));
        assert!(blocked.canonical_form().structurally_eq(&blocked));
        assert!(blocked.equals(&blocked.canonical_form()));
        // x = I_2 - s_1 s_1^* is s_2 s_2^* in compact form
        let x = &m(2, &[], &[]) - &m(2, &[1], &[1]);
        assert!(x.canonical_form().structurally_eq(&m(2, &[2], &[2])));
    }

    #[test]
    fn coefficient_reads() {
        assert_eq!(m(2, &[], &[]).coefficient_extract(2, &[1], &[1]).unwrap(), c(1));
        assert_eq!(m(2, &[1], &[]).scale(&c(3)).coefficient_extract(2, &[1], &[]).unwrap(), c(3));
        assert_eq!(m(1, &[], &[]).scale(&c(4)).coefficient_extract(1, &[], &[]).unwrap(), c(4));
        assert!(m(2, &[], &[]).coefficient_extract(2, &[3], &[]).is_err());
    }
}
