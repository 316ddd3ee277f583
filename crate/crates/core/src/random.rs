//! Seeded samplers for elements and prime sets, shared by the property suite
//! and the tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{AlgebraElement, CuntzMonomial, Index};
use crate::monoid::PrimeSet;
use crate::scalar::Scalar;

/// A small nonzero Gaussian rational; purely real half the time.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let re = Scalar::from_ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3)).expect("nonzero denominator");
        let c = if rng.gen_bool(0.5) {
            re
        } else {
            let im = Scalar::from_ratio(rng.gen_range(-2..=2), rng.gen_range(1..=2)).expect("nonzero denominator");
            &re + &(&im * &Scalar::i())
        };
        if !c.is_zero() {
            return c;
        }
    }
}

fn word<R: Rng + ?Sized>(rng: &mut R, n: Index, max_len: usize) -> Vec<Index> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(1..=n)).collect()
}

pub fn monomial<R: Rng + ?Sized>(rng: &mut R, n: Index, max_len: usize) -> CuntzMonomial {
    CuntzMonomial::new(n, word(rng, n, max_len), word(rng, n, max_len)).expect("letters drawn in range")
}

/// A single monomial `s_mu s_nu^*` with coefficient 1 in a random component.
pub fn word_element<R: Rng + ?Sized>(rng: &mut R, max_component: Index, max_len: usize) -> AlgebraElement {
    let n = rng.gen_range(1..=max_component);
    AlgebraElement::monomial(monomial(rng, n, max_len))
}

/// Up to `max_terms` terms with components drawn from `components`.
pub fn element_in<R: Rng + ?Sized>(
    rng: &mut R,
    components: &[Index],
    max_len: usize,
    max_terms: usize,
) -> AlgebraElement {
    let count = rng.gen_range(1..=max_terms);
    let mut x = AlgebraElement::zero();
    for _ in 0..count {
        let n = *components.choose(rng).expect("nonempty component list");
        x = &x + &AlgebraElement::term(monomial(rng, n, max_len), scalar(rng));
    }
    x
}

pub fn element<R: Rng + ?Sized>(rng: &mut R, max_component: Index, max_len: usize, max_terms: usize) -> AlgebraElement {
    let components: Vec<Index> = (1..=max_component).collect();
    element_in(rng, &components, max_len, max_terms)
}

/// A random finite subset of `primes`, or with probability 1/4 the cofinite
/// set excluding such a subset.
pub fn prime_set<R: Rng + ?Sized>(rng: &mut R, primes: &[u64]) -> PrimeSet {
    let chosen: Vec<u64> = primes.iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
    if rng.gen_bool(0.25) {
        PrimeSet::cofinite(chosen).expect("sampled from primes")
    } else {
        PrimeSet::finite(chosen).expect("sampled from primes")
    }
}
