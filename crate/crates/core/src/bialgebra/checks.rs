//! Mechanical verification of the bialgebra and weak-coproduct-system axioms
//! on concrete elements. The `_with` variants take the coproduct as a
//! parameter so that alternative or deliberately broken coproducts can be run
//! through the same checks.

use super::coproduct::{
    counit, counit_contract_left, counit_contract_right, delta, delta_h, lift_left, lift_right, phi,
};
use super::tensor::{TensorElement, TripleTensorElement};
use crate::algebra::{AlgebraElement, Index};
use crate::error::Result;
use crate::monoid::ComponentSet;

/// Both sides `(Δ ⊗ id)Δ(x)` and `(id ⊗ Δ)Δ(x)`.
pub fn coassociativity_sides_with(
    x: &AlgebraElement,
    f: &dyn Fn(&AlgebraElement) -> Result<TensorElement>,
) -> Result<(TripleTensorElement, TripleTensorElement)> {
    let d = f(x)?;
    Ok((lift_left(&d, f)?, lift_right(&d, f)?))
}

pub fn check_coassociativity_with(
    x: &AlgebraElement,
    f: &dyn Fn(&AlgebraElement) -> Result<TensorElement>,
) -> Result<bool> {
    let (l, r) = coassociativity_sides_with(x, f)?;
    Ok(l.equals(&r))
}

pub fn check_coassociativity(x: &AlgebraElement) -> bool {
    check_coassociativity_with(x, &|y| Ok(delta(y))).expect("delta is total")
}

/// Coassociativity of `Δ_H`; `x` must be supported in `H`.
pub fn check_coassociativity_h<H: ComponentSet>(h: &H, x: &AlgebraElement) -> Result<bool> {
    check_coassociativity_with(x, &|y| delta_h(h, y))
}

pub fn check_counit_laws_with(
    x: &AlgebraElement,
    f: &dyn Fn(&AlgebraElement) -> Result<TensorElement>,
) -> Result<bool> {
    let d = f(x)?;
    Ok(counit_contract_left(&d).equals(x) && counit_contract_right(&d).equals(x))
}

pub fn check_counit_laws(x: &AlgebraElement) -> bool {
    check_counit_laws_with(x, &|y| Ok(delta(y))).expect("delta is total")
}

pub fn check_hom_property_with(
    x: &AlgebraElement,
    y: &AlgebraElement,
    f: &dyn Fn(&AlgebraElement) -> Result<TensorElement>,
) -> Result<bool> {
    let xy = x.mul(y);
    let multiplicative = f(&xy)?.equals(&f(x)?.mul(&f(y)?));
    let star = f(&x.adjoint())?.equals(&f(x)?.adjoint());
    let counit_mult = counit(&xy) == &counit(x) * &counit(y);
    Ok(multiplicative && star && counit_mult)
}

/// `Δ(xy) = Δ(x)Δ(y)`, `Δ(x^*) = Δ(x)^*`, and `ε(xy) = ε(x)ε(y)`.
pub fn check_hom_property(x: &AlgebraElement, y: &AlgebraElement) -> bool {
    check_hom_property_with(x, y, &|z| Ok(delta(z))).expect("delta is total")
}

/// Both composites `(id_a ⊗ φ_{b,c}) ∘ φ_{a,bc}` and `(φ_{a,b} ⊗ id_c) ∘ φ_{ab,c}`.
pub fn wcs_sides(a: Index, b: Index, c: Index, x: &AlgebraElement) -> Result<(TripleTensorElement, TripleTensorElement)> {
    let first = phi(a, b * c, x)?;
    let lhs = lift_right(&first, |y| phi(b, c, y))?;
    let second = phi(a * b, c, x)?;
    let rhs = lift_left(&second, |y| phi(a, b, y))?;
    Ok((lhs, rhs))
}

pub fn check_wcs_axiom(a: Index, b: Index, c: Index, x: &AlgebraElement) -> Result<bool> {
    let (l, r) = wcs_sides(a, b, c, x)?;
    Ok(l.equals(&r))
}
