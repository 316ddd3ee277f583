use super::tensor::{TensorElement, TripleTensorElement};
use crate::algebra::{AlgebraElement, CuntzMonomial, Index};
use crate::error::{Error, Result};
use crate::monoid::{divisor_pairs, ComponentSet};
use crate::scalar::Scalar;

/// Splits a letter `a ∈ 1..=n·m` into `(i, j)` with `a - 1 = m(i - 1) + (j - 1)`.
pub fn split_letter(m: Index, a: Index) -> (Index, Index) {
    ((a - 1) / m + 1, (a - 1) % m + 1)
}

fn split_word(m: Index, word: &[Index]) -> (Vec<Index>, Vec<Index>) {
    word.iter().map(|&a| split_letter(m, a)).unzip()
}

/// `φ_{n,m}` on a single monomial of `O_{nm}`: letterwise split of both words.
pub fn phi_monomial(n: Index, m: Index, x: &CuntzMonomial) -> [CuntzMonomial; 2] {
    debug_assert_eq!(x.n(), n * m);
    let (mu_l, mu_r) = split_word(m, x.mu());
    let (nu_l, nu_r) = split_word(m, x.nu());
    [CuntzMonomial::new_unchecked(n, mu_l, nu_l), CuntzMonomial::new_unchecked(m, mu_r, nu_r)]
}

fn check_support(x: &AlgebraElement, component: u64) -> Result<()> {
    match x.components().into_iter().find(|&c| u64::from(c) != component) {
        Some(found) => Err(Error::WrongComponent { expected: component, found: found.into() }),
        None => Ok(()),
    }
}

/// The embedding `φ_{n,m}: O_{nm} -> O_n ⊗ O_m`, `s_{m(i-1)+j} ↦ s_i ⊗ s_j`.
pub fn phi(n: Index, m: Index, x: &AlgebraElement) -> Result<TensorElement> {
    if n == 0 || m == 0 {
        return Err(Error::ZeroComponent);
    }
    check_support(x, u64::from(n) * u64::from(m))?;
    Ok(TensorElement::from_terms(x.terms().map(|(mono, c)| (phi_monomial(n, m, mono), c.clone()))))
}

fn delta_filtered(x: &AlgebraElement, keep: impl Fn(u64, u64) -> bool) -> TensorElement {
    let mut out = TensorElement::zero();
    for (mono, c) in x.terms() {
        let n = mono.n();
        for (a, b) in divisor_pairs(n.into()) {
            if keep(a, b) {
                out.add_term(phi_monomial(a as Index, b as Index, mono), c);
            }
        }
    }
    out
}

/// The comultiplication `Δ(x) = Σ_{ml = n} φ_{m,l}(x)` on each component,
/// summed over ordered divisor pairs.
pub fn delta(x: &AlgebraElement) -> TensorElement {
    delta_filtered(x, |_, _| true)
}

/// `Δ_H`: the same sum restricted to pairs with both factors in `H`.
pub fn delta_h<H: ComponentSet + ?Sized>(h: &H, x: &AlgebraElement) -> Result<TensorElement> {
    if let Some(n) = x.components().into_iter().map(u64::from).find(|&n| !h.contains(n)) {
        return Err(Error::OutsideSubmonoid { n });
    }
    Ok(delta_filtered(x, |a, b| h.contains(a) && h.contains(b)))
}

/// The counit: identity on `O_1 = C`, zero on every `O_n` with `n >= 2`.
pub fn counit(x: &AlgebraElement) -> Scalar {
    x.component_one_coefficient()
}

fn counit_monomial(m: &CuntzMonomial) -> Option<Scalar> {
    (m.n() == 1).then(Scalar::one)
}

/// Applies `f` to the left leg of every term: `(f ⊗ id)(u)`.
pub fn lift_left(
    u: &TensorElement,
    f: impl Fn(&AlgebraElement) -> Result<TensorElement>,
) -> Result<TripleTensorElement> {
    let mut out = TripleTensorElement::zero();
    for ([a, b], c) in u.terms() {
        for ([p, q], d) in f(&AlgebraElement::monomial(a.clone()))?.terms() {
            out.add_term([p.clone(), q.clone(), b.clone()], &(c * d));
        }
    }
    Ok(out)
}

/// Applies `f` to the right leg of every term: `(id ⊗ f)(u)`.
pub fn lift_right(
    u: &TensorElement,
    f: impl Fn(&AlgebraElement) -> Result<TensorElement>,
) -> Result<TripleTensorElement> {
    let mut out = TripleTensorElement::zero();
    for ([a, b], c) in u.terms() {
        for ([p, q], d) in f(&AlgebraElement::monomial(b.clone()))?.terms() {
            out.add_term([a.clone(), p.clone(), q.clone()], &(c * d));
        }
    }
    Ok(out)
}

/// `(ε ⊗ id)(u)` under `C ⊗ A ≅ A`: the left leg is absorbed into the coefficient.
pub fn counit_contract_left(u: &TensorElement) -> AlgebraElement {
    AlgebraElement::from_terms(
        u.terms().filter_map(|([a, b], c)| counit_monomial(a).map(|e| (b.clone(), &e * c))),
    )
}

/// `(id ⊗ ε)(u)` under `A ⊗ C ≅ A`.
pub fn counit_contract_right(u: &TensorElement) -> AlgebraElement {
    AlgebraElement::from_terms(
        u.terms().filter_map(|([a, b], c)| counit_monomial(b).map(|e| (a.clone(), &e * c))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{PrimeSet, SubmonoidView};

    fn m(n: Index, mu: &[Index], nu: &[Index]) -> CuntzMonomial {
        CuntzMonomial::new(n, mu.to_vec(), nu.to_vec()).unwrap()
    }

    fn e(n: Index, mu: &[Index], nu: &[Index]) -> AlgebraElement {
        AlgebraElement::monomial(m(n, mu, nu))
    }

    fn t(pairs: &[(CuntzMonomial, CuntzMonomial)]) -> TensorElement {
        TensorElement::from_terms(pairs.iter().map(|(a, b)| ([a.clone(), b.clone()], Scalar::one())))
    }

    #[test]
    fn letter_split_is_mixed_radix() {
        assert_eq!(split_letter(2, 3), (2, 1));
        assert_eq!(split_letter(3, 6), (2, 3));
        assert_eq!(split_letter(3, 1), (1, 1));
    }

    #[test]
    fn phi_on_generators() {
        let got = phi(2, 2, &e(4, &[3], &[])).unwrap();
        assert!(got.structurally_eq(&t(&[(m(2, &[2], &[]), m(2, &[1], &[]))])));
        let got = phi(2, 2, &e(4, &[], &[3])).unwrap();
        assert!(got.structurally_eq(&t(&[(m(2, &[], &[2]), m(2, &[], &[1]))])));
        let x = e(5, &[4, 2], &[5]);
        let got = phi(1, 5, &x).unwrap();
        assert!(got.structurally_eq(&t(&[(m(1, &[], &[]), m(5, &[4, 2], &[5]))])));
        assert_eq!(phi(2, 3, &x).unwrap_err(), Error::WrongComponent { expected: 6, found: 5 });
    }

    #[test]
    fn delta_of_s1_in_o4() {
        let want = t(&[
            (m(1, &[], &[]), m(4, &[1], &[])),
            (m(2, &[1], &[]), m(2, &[1], &[])),
            (m(4, &[1], &[]), m(1, &[], &[])),
        ]);
        assert!(delta(&e(4, &[1], &[])).structurally_eq(&want));
    }

    #[test]
    fn delta_of_unit_in_o6() {
        let want = t(&[
            (m(1, &[], &[]), m(6, &[], &[])),
            (m(2, &[], &[]), m(3, &[], &[])),
            (m(3, &[], &[]), m(2, &[], &[])),
            (m(6, &[], &[]), m(1, &[], &[])),
        ]);
        assert!(delta(&e(6, &[], &[])).structurally_eq(&want));
        assert!(delta(&AlgebraElement::zero()).is_structurally_zero());
        let d2 = delta(&e(2, &[], &[]));
        assert!(d2.equals(&t(&[(m(1, &[], &[]), m(2, &[], &[])), (m(2, &[], &[]), m(1, &[], &[]))])));
    }

    #[test]
    fn restricted_coproducts() {
        let fours = SubmonoidView::PowersOf(4);
        let want = t(&[(m(1, &[], &[]), m(4, &[1], &[])), (m(4, &[1], &[]), m(1, &[], &[]))]);
        assert!(delta_h(&fours, &e(4, &[1], &[])).unwrap().structurally_eq(&want));

        let twos = SubmonoidView::generated(PrimeSet::finite([2]).unwrap());
        let d = delta_h(&twos, &e(8, &[1], &[])).unwrap();
        let lefts: Vec<Index> = d.terms().map(|([a, _], _)| a.n()).collect();
        assert_eq!(lefts, vec![1, 2, 4, 8]);

        let all = SubmonoidView::everything();
        let x = &e(6, &[5], &[2]) + &e(12, &[7, 1], &[]);
        assert!(delta_h(&all, &x).unwrap().structurally_eq(&delta(&x)));
        assert_eq!(delta_h(&fours, &e(2, &[1], &[])).unwrap_err(), Error::OutsideSubmonoid { n: 2 });
    }

    #[test]
    fn counit_values() {
        assert!(counit(&e(2, &[1], &[])).is_zero());
        let lam = Scalar::from_ratio(3, 7).unwrap();
        assert_eq!(counit(&e(1, &[], &[]).scale(&lam)), lam);
        let x = &e(1, &[], &[]) + &e(3, &[1], &[]);
        let y = e(1, &[], &[]).scale(&Scalar::i());
        assert_eq!(counit(&(&x + &y)), &counit(&x) + &counit(&y));
    }

    #[test]
    fn contractions_and_lifts() {
        let s = e(4, &[1], &[]);
        assert!(counit_contract_left(&delta(&s)).structurally_eq(&s));
        assert!(counit_contract_right(&delta(&s)).structurally_eq(&s));
        let unit = t(&[(m(1, &[], &[]), m(1, &[], &[]))]);
        let lifted = lift_left(&unit, |x| Ok(delta(x))).unwrap();
        let i1 = m(1, &[], &[]);
        assert!(lifted.structurally_eq(&TripleTensorElement::from_terms([([i1.clone(), i1.clone(), i1], Scalar::one())])));
    }
}
