//! Finite-window verification of semigroup-theoretic predicates.
//!
//! A window is a finite universe `U` of monoid elements that contains every
//! factor pair of each of its elements (`{1..bound}` in `(N, ·)`, words of
//! bounded length in a free monoid). Quantifiers range over `U`, and a
//! product is only inspected when it lands in `U`. Because `U` is closed
//! under taking factors, the complement identities between the predicates
//! hold exactly inside the window.

use std::collections::BTreeSet;
use std::fmt::Debug;

use crate::error::{Error, Result};

/// A monoid whose elements have finitely many factorizations `bc = a`.
pub trait MonoidSpec {
    type Elem: Clone + Ord + Debug;

    fn unit(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// All ordered pairs `(b, c)` with `bc = a`.
    fn factor_pairs(&self, a: &Self::Elem) -> Vec<(Self::Elem, Self::Elem)>;

    /// Pairs `(b, ab)` with `ab` inside `universe`.
    fn right_products_in(&self, a: &Self::Elem, universe: &BTreeSet<Self::Elem>) -> Vec<(Self::Elem, Self::Elem)> {
        universe.iter().map(|b| (b.clone(), self.op(a, b))).filter(|(_, p)| universe.contains(p)).collect()
    }

    /// Pairs `(b, ba)` with `ba` inside `universe`.
    fn left_products_in(&self, a: &Self::Elem, universe: &BTreeSet<Self::Elem>) -> Vec<(Self::Elem, Self::Elem)> {
        universe.iter().map(|b| (b.clone(), self.op(b, a))).filter(|(_, p)| universe.contains(p)).collect()
    }
}

/// `(N, ·)` with unit 1.
#[derive(Clone, Copy, Debug, Default)]
pub struct NaturalMul;

impl MonoidSpec for NaturalMul {
    type Elem = u64;

    fn unit(&self) -> u64 {
        1
    }

    fn op(&self, a: &u64, b: &u64) -> u64 {
        a * b
    }

    fn factor_pairs(&self, a: &u64) -> Vec<(u64, u64)> {
        super::arith::divisor_pairs(*a)
    }

    fn right_products_in(&self, a: &u64, universe: &BTreeSet<u64>) -> Vec<(u64, u64)> {
        let top = universe.iter().next_back().copied().unwrap_or(0);
        (1..=top / a).map(|b| (b, a * b)).filter(|(_, p)| universe.contains(p)).collect()
    }

    fn left_products_in(&self, a: &u64, universe: &BTreeSet<u64>) -> Vec<(u64, u64)> {
        self.right_products_in(a, universe)
    }
}

/// The free monoid on a finite alphabet; the unit is the empty word.
/// Not commutative once the alphabet has two letters.
#[derive(Clone, Debug)]
pub struct FreeMonoid {
    pub alphabet: Vec<char>,
}

impl FreeMonoid {
    pub fn new(alphabet: impl IntoIterator<Item = char>) -> Self {
        FreeMonoid { alphabet: alphabet.into_iter().collect() }
    }

    /// Every word of length at most `max_len`.
    pub fn words_up_to(&self, max_len: usize) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut layer = vec![String::new()];
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for w in &layer {
                out.insert(w.clone());
                for &c in &self.alphabet {
                    let mut v = w.clone();
                    v.push(c);
                    next.push(v);
                }
            }
            layer = next;
        }
        out
    }
}

impl MonoidSpec for FreeMonoid {
    type Elem = String;

    fn unit(&self) -> String {
        String::new()
    }

    fn op(&self, a: &String, b: &String) -> String {
        format!("{a}{b}")
    }

    fn factor_pairs(&self, a: &String) -> Vec<(String, String)> {
        a.char_indices()
            .map(|(i, _)| i)
            .chain(std::iter::once(a.len()))
            .map(|i| (a[..i].to_string(), a[i..].to_string()))
            .collect()
    }
}

/// `factor_pairs`: the set `N_a = {(b, c) : bc = a}`.
pub fn factor_pairs<M: MonoidSpec>(monoid: &M, a: &M::Elem) -> Vec<(M::Elem, M::Elem)> {
    monoid.factor_pairs(a)
}

/// A subset `S` of a finite, factor-closed universe of a monoid.
#[derive(Clone, Debug)]
pub struct MonoidWindow<M: MonoidSpec> {
    pub monoid: M,
    pub universe: BTreeSet<M::Elem>,
    pub members: BTreeSet<M::Elem>,
}

/// A subset of `{1..bound}` in `(N, ·)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetWindow {
    bound: u64,
    members: BTreeSet<u64>,
}

impl SubsetWindow {
    pub fn new(bound: u64, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        let members: BTreeSet<u64> = members.into_iter().collect();
        if members.contains(&0) {
            return Err(Error::ZeroNatural);
        }
        if let Some(&m) = members.iter().find(|&&m| m > bound) {
            return Err(Error::SetSpec(format!("{m} exceeds the window bound {bound}")));
        }
        Ok(SubsetWindow { bound, members })
    }

    pub fn from_predicate(bound: u64, keep: impl Fn(u64) -> bool) -> Self {
        SubsetWindow { bound, members: (1..=bound).filter(|&n| keep(n)).collect() }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn members(&self) -> &BTreeSet<u64> {
        &self.members
    }

    pub fn contains(&self, n: u64) -> bool {
        self.members.contains(&n)
    }

    pub fn complement(&self) -> Self {
        SubsetWindow::from_predicate(self.bound, |n| !self.members.contains(&n))
    }

    pub fn to_monoid_window(&self) -> MonoidWindow<NaturalMul> {
        MonoidWindow {
            monoid: NaturalMul,
            universe: (1..=self.bound).collect(),
            members: self.members.clone(),
        }
    }
}

/// Why a predicate failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<E> {
    /// The predicate needs a nonempty set.
    Empty,
    /// The set is the whole window, so it is not proper.
    NotProper,
    /// The unit is missing.
    MissingUnit,
    /// `a · b = product` with the listed operands in `S` but `product` outside.
    ProductEscapes { a: E, b: E, product: E },
    /// `a · b = product` in `S` with `a` or `b` outside `S`.
    FactorEscapes { product: E, a: E, b: E },
    /// `a · b = product` in `S` with neither `a` nor `b` in `S`.
    NeitherFactor { product: E, a: E, b: E },
}

pub type Check<E> = std::result::Result<(), Witness<E>>;

impl<M: MonoidSpec> MonoidWindow<M> {
    pub fn new(monoid: M, universe: BTreeSet<M::Elem>, members: BTreeSet<M::Elem>) -> Self {
        MonoidWindow { monoid, universe, members }
    }

    pub fn contains(&self, a: &M::Elem) -> bool {
        self.members.contains(a)
    }

    pub fn complement(&self) -> Self
    where
        M: Clone,
    {
        MonoidWindow {
            monoid: self.monoid.clone(),
            universe: self.universe.clone(),
            members: self.universe.difference(&self.members).cloned().collect(),
        }
    }

    fn nonempty(&self) -> Check<M::Elem> {
        if self.members.is_empty() {
            Err(Witness::Empty)
        } else {
            Ok(())
        }
    }

    fn proper(&self) -> Check<M::Elem> {
        if self.members.len() == self.universe.len() {
            Err(Witness::NotProper)
        } else {
            Ok(())
        }
    }

    pub fn is_subsemigroup(&self) -> Check<M::Elem> {
        self.nonempty()?;
        for a in &self.members {
            for (b, p) in self.monoid.right_products_in(a, &self.universe) {
                if self.members.contains(&b) && !self.members.contains(&p) {
                    return Err(Witness::ProductEscapes { a: a.clone(), b, product: p });
                }
            }
        }
        Ok(())
    }

    pub fn is_submonoid(&self) -> Check<M::Elem> {
        self.is_subsemigroup()?;
        if self.members.contains(&self.monoid.unit()) {
            Ok(())
        } else {
            Err(Witness::MissingUnit)
        }
    }

    /// `aS ⊂ S` and `Sa ⊂ S` for every `a` in the window.
    pub fn is_ideal(&self) -> Check<M::Elem> {
        self.nonempty()?;
        for s in &self.members {
            for (a, p) in self.monoid.left_products_in(s, &self.universe) {
                if !self.members.contains(&p) {
                    return Err(Witness::ProductEscapes { a, b: s.clone(), product: p });
                }
            }
            for (a, p) in self.monoid.right_products_in(s, &self.universe) {
                if !self.members.contains(&p) {
                    return Err(Witness::ProductEscapes { a: s.clone(), b: a, product: p });
                }
            }
        }
        Ok(())
    }

    /// `S ≠ M` and `ab ∈ S` implies `a, b ∈ S`.
    pub fn is_factorial(&self) -> Check<M::Elem> {
        self.nonempty()?;
        self.proper()?;
        for p in &self.members {
            for (a, b) in self.monoid.factor_pairs(p) {
                if !self.members.contains(&a) || !self.members.contains(&b) {
                    return Err(Witness::FactorEscapes { product: p.clone(), a, b });
                }
            }
        }
        Ok(())
    }

    /// `S ≠ M` and `ab ∈ S` implies `a ∈ S` or `b ∈ S`.
    pub fn is_prime_subset(&self) -> Check<M::Elem> {
        self.nonempty()?;
        self.proper()?;
        for p in &self.members {
            for (a, b) in self.monoid.factor_pairs(p) {
                if !self.members.contains(&a) && !self.members.contains(&b) {
                    return Err(Witness::NeitherFactor { product: p.clone(), a, b });
                }
            }
        }
        Ok(())
    }

    pub fn is_proper_subsemigroup(&self) -> Check<M::Elem> {
        self.is_subsemigroup()?;
        self.proper()
    }

    pub fn is_proper_ideal(&self) -> Check<M::Elem> {
        self.is_ideal()?;
        self.proper()
    }

    pub fn is_prime_ideal(&self) -> Check<M::Elem> {
        self.is_proper_ideal()?;
        self.is_prime_subset()
    }

    pub fn is_factorial_submonoid(&self) -> Check<M::Elem> {
        self.is_submonoid()?;
        self.is_factorial()
    }
}

/// One equivalence `P(S) ⇔ Q(S^c)` evaluated on a window.
#[derive(Clone, Debug)]
pub struct DualityEntry<E> {
    pub statement: &'static str,
    pub left: Check<E>,
    pub right: Check<E>,
}

impl<E> DualityEntry<E> {
    pub fn holds(&self) -> bool {
        self.left.is_ok() == self.right.is_ok()
    }
}

#[derive(Clone, Debug)]
pub struct DualityReport<E> {
    pub entries: Vec<DualityEntry<E>>,
}

impl<E> DualityReport<E> {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(DualityEntry::holds)
    }
}

/// Evaluates both sides of the four complement equivalences on `S` and `S^c`.
pub fn complement_duality_check<M: MonoidSpec + Clone>(s: &MonoidWindow<M>) -> DualityReport<M::Elem> {
    let c = s.complement();
    DualityReport {
        entries: vec![
            DualityEntry {
                statement: "S proper subsemigroup <=> S^c prime",
                left: s.is_proper_subsemigroup(),
                right: c.is_prime_subset(),
            },
            DualityEntry {
                statement: "S proper ideal <=> S^c factorial",
                left: s.is_proper_ideal(),
                right: c.is_factorial(),
            },
            DualityEntry {
                statement: "S factorial submonoid <=> S^c prime ideal",
                left: s.is_factorial_submonoid(),
                right: c.is_prime_ideal(),
            },
            DualityEntry {
                statement: "S prime ideal <=> S^c factorial submonoid",
                left: s.is_prime_ideal(),
                right: c.is_factorial_submonoid(),
            },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(bound: u64, keep: impl Fn(u64) -> bool) -> MonoidWindow<NaturalMul> {
        SubsetWindow::from_predicate(bound, keep).to_monoid_window()
    }

    #[test]
    fn evens_form_a_prime_ideal() {
        let w = nat(100, |n| n % 2 == 0);
        assert_eq!(w.is_prime_subset(), Ok(()));
        assert_eq!(w.is_ideal(), Ok(()));
    }

    #[test]
    fn powers_of_four_are_not_factorial() {
        let w = nat(256, |n| [1, 4, 16, 64, 256].contains(&n));
        assert_eq!(w.is_factorial(), Err(Witness::FactorEscapes { product: 4, a: 2, b: 2 }));
        assert_eq!(w.is_submonoid(), Ok(()));
    }

    #[test]
    fn whole_window_is_not_factorial() {
        assert_eq!(nat(50, |_| true).is_factorial(), Err(Witness::NotProper));
    }

    #[test]
    fn free_monoid_factor_pairs() {
        let m = FreeMonoid::new(['a', 'b']);
        let pairs = factor_pairs(&m, &"ab".to_string());
        let want: Vec<(String, String)> =
            vec![("".into(), "ab".into()), ("a".into(), "b".into()), ("ab".into(), "".into())];
        assert_eq!(pairs, want);
        assert_eq!(m.words_up_to(2).len(), 7);
    }

    #[test]
    fn duality_examples() {
        let gen2 = nat(200, |n| n.is_power_of_two());
        let r = complement_duality_check(&gen2);
        assert!(r.all_hold());
        assert!(gen2.complement().is_prime_ideal().is_ok());

        let evens = nat(200, |n| n % 2 == 0);
        assert!(complement_duality_check(&evens).all_hold());
        assert!(evens.complement().is_factorial_submonoid().is_ok());

        let fours = nat(200, |n| [1, 4, 16, 64].contains(&n));
        let r = complement_duality_check(&fours);
        assert!(r.all_hold());
        assert!(r.entries[2].left.is_err() && r.entries[2].right.is_err());
    }

    #[test]
    fn free_monoid_duality() {
        let m = FreeMonoid::new(['a', 'b']);
        let universe = m.words_up_to(4);
        let with_a: BTreeSet<String> = universe.iter().filter(|w| w.contains('a')).cloned().collect();
        let w = MonoidWindow::new(m, universe, with_a);
        assert!(w.is_prime_ideal().is_ok());
        assert!(w.complement().is_factorial_submonoid().is_ok());
        assert!(complement_duality_check(&w).all_hold());
    }
}
