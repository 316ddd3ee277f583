use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::algebra::graded::{self, add_term, Terms};
use crate::algebra::{AlgebraElement, CuntzMonomial};
use crate::scalar::Scalar;

/// A finite linear combination of `R`-fold simple tensors of Cuntz monomials,
/// an element of the `R`-fold algebraic tensor power of `O_*`.
///
/// Like [`AlgebraElement`], `==` is equality in the algebra; the term map is
/// only one representative.
#[derive(Clone)]
pub struct Tensor<const R: usize> {
    terms: Terms<R>,
}

/// `R = 2`: elements of `O_* ⊗ O_*`.
pub type TensorElement = Tensor<2>;
/// `R = 3`: elements of `O_* ⊗ O_* ⊗ O_*`.
pub type TripleTensorElement = Tensor<3>;
pub type TensorMonomial = [CuntzMonomial; 2];

impl<const R: usize> Default for Tensor<R> {
    fn default() -> Self {
        Tensor { terms: Terms::new() }
    }
}

impl<const R: usize> Tensor<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([CuntzMonomial; R], Scalar)>) -> Self {
        let mut t = Self::zero();
        for (k, c) in terms {
            t.add_term(k, &c);
        }
        t
    }

    pub fn add_term(&mut self, key: [CuntzMonomial; R], c: &Scalar) {
        add_term(&mut self.terms, key, c);
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&[CuntzMonomial; R], &Scalar)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_structurally_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn structurally_eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Legwise product; a term vanishes when any pair of legs does.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            'pairs: for (b, d) in &rhs.terms {
                let mut legs = a.clone();
                for (leg, other) in legs.iter_mut().zip(b) {
                    match leg.mul(other) {
                        Some(p) => *leg = p,
                        None => continue 'pairs,
                    }
                }
                out.add_term(legs, &(c * d));
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.clone().map(|m| m.adjoint()), c.conj())))
    }

    pub fn is_zero(&self) -> bool {
        graded::is_zero(&self.terms)
    }

    /// Equality by per-leg graded level expansion, grouped by the components
    /// and gauge degrees of all legs.
    pub fn equals(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }

    pub fn canonical_form(&self) -> Self {
        Tensor { terms: graded::canonical(&self.terms) }
    }
}

impl TensorElement {
    /// The simple tensor `x ⊗ y`, expanded bilinearly.
    pub fn simple(x: &AlgebraElement, y: &AlgebraElement) -> Self {
        let mut out = Self::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                out.add_term([a.clone(), b.clone()], &(c * d));
            }
        }
        out
    }

    /// The flip `x ⊗ y -> y ⊗ x`.
    pub fn swap_legs(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|([a, b], c)| ([b.clone(), a.clone()], c.clone())))
    }
}

impl<const R: usize> PartialEq for Tensor<R> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<const R: usize> Add for &Tensor<R> {
    type Output = Tensor<R>;
    fn add(self, rhs: &Tensor<R>) -> Tensor<R> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl<const R: usize> Sub for &Tensor<R> {
    type Output = Tensor<R>;
    fn sub(self, rhs: &Tensor<R>) -> Tensor<R> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), &-c);
        }
        out
    }
}

impl<const R: usize> Mul for &Tensor<R> {
    type Output = Tensor<R>;
    fn mul(self, rhs: &Tensor<R>) -> Tensor<R> {
        Tensor::mul(self, rhs)
    }
}

impl<const R: usize> fmt::Debug for Tensor<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<const R: usize> fmt::Display for Tensor<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::render_tensor(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Index;

    fn m(n: Index, mu: &[Index], nu: &[Index]) -> CuntzMonomial {
        CuntzMonomial::new(n, mu.to_vec(), nu.to_vec()).unwrap()
    }

    fn t(a: CuntzMonomial, b: CuntzMonomial) -> TensorElement {
        TensorElement::from_terms([([a, b], Scalar::one())])
    }

    #[test]
    fn unit_legs_act_trivially() {
        let u = t(m(2, &[], &[]), m(3, &[], &[]));
        let v = t(m(2, &[1], &[]), m(3, &[], &[]));
        assert!((&u * &v).structurally_eq(&v));
    }

    #[test]
    fn cross_component_legs_annihilate() {
        let u = t(m(2, &[1], &[]), m(1, &[], &[]));
        let v = t(m(1, &[], &[]), m(2, &[1], &[]));
        assert!((&u * &v).is_structurally_zero());
    }

    #[test]
    fn legwise_level_equality() {
        // I_2 ⊗ s_1 = s_1 s_1^* ⊗ s_1 + s_2 s_2^* ⊗ s_{11} s_1^* + s_2 s_2^* ⊗ s_{12} s_2^*
        let lhs = t(m(2, &[], &[]), m(2, &[1], &[]));
        let rhs = &(&t(m(2, &[1], &[1]), m(2, &[1], &[])) + &t(m(2, &[2], &[2]), m(2, &[1, 1], &[1])))
            + &t(m(2, &[2], &[2]), m(2, &[1, 2], &[2]));
        assert!(lhs.equals(&rhs));
        assert!(rhs.canonical_form().structurally_eq(&lhs));
        assert!(!lhs.equals(&t(m(2, &[], &[]), m(2, &[2], &[]))));
    }

    #[test]
    fn adjoint_is_legwise() {
        let u = t(m(2, &[1], &[]), m(3, &[2], &[1])).scale(&Scalar::i());
        let want = t(m(2, &[], &[1]), m(3, &[1], &[2])).scale(&-Scalar::i());
        assert!(u.adjoint().structurally_eq(&want));
    }
}
