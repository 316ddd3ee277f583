//! Classification of component sets `S ⊂ N` by what the summand
//! `O_*(S) = ⊕_{n ∈ S} O_n` is for the comultiplication: a subbialgebra, a
//! closed biideal, merely an ideal, zero, or none of these. Subbialgebras are
//! exactly the factorial submonoids (or all of `N`); nonzero biideals are
//! exactly the prime ideals.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{AlgebraElement, Index};
use crate::bialgebra::{counit, delta, delta_h, TensorElement};
use crate::error::{Error, Result};
use crate::monoid::{divisor_pairs, ComponentSet, PrimeSet, SubmonoidView, SubsetWindow};

/// Which components of `O_*` a summand is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentPredicate {
    /// `[F]`, giving the subbialgebra `A(F)`.
    Generated(PrimeSet),
    /// `[F]^c`, giving the biideal `I(F)`.
    Complement(PrimeSet),
    /// An explicit finite set; membership is false above the window bound.
    Window(SubsetWindow),
}

impl ComponentSet for ComponentPredicate {
    fn contains(&self, n: u64) -> bool {
        match self {
            ComponentPredicate::Generated(f) => f.generates(n),
            ComponentPredicate::Complement(f) => !f.generates(n),
            ComponentPredicate::Window(w) => w.contains(n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Subbialgebra,
    Biideal,
    /// A proper monoid ideal that is not prime.
    IdealOnly,
    Zero,
    None,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Subbialgebra => "subbialgebra",
            Verdict::Biideal => "biideal",
            Verdict::IdealOnly => "ideal_only",
            Verdict::Zero => "zero",
            Verdict::None => "none",
        })
    }
}

/// A counterexample `n = m · l` to the closure property that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassWitness {
    /// `n ∈ S` but `m ∉ S` or `l ∉ S`: `Δ(O_n)` leaves `O_*(S) ⊗ O_*(S)`.
    MissingDivisor { n: u64, m: u64, l: u64 },
    /// `m ∈ S` (or both factors, when `1 ∈ S`) but `n ∉ S`.
    MissingProduct { n: u64, m: u64, l: u64 },
    /// `n ∈ S` with `m ∉ S` and `l ∉ S`: the `(m, l)` term of `Δ(O_n)` escapes.
    PrimeFailure { n: u64, m: u64, l: u64 },
}

impl ClassWitness {
    pub fn triple(&self) -> (u64, u64, u64) {
        match *self {
            ClassWitness::MissingDivisor { n, m, l }
            | ClassWitness::MissingProduct { n, m, l }
            | ClassWitness::PrimeFailure { n, m, l } => (n, m, l),
        }
    }
}

impl fmt::Display for ClassWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, m, l) = self.triple();
        let kind = match self {
            ClassWitness::MissingDivisor { .. } => "missing divisor",
            ClassWitness::MissingProduct { .. } => "missing product",
            ClassWitness::PrimeFailure { .. } => "prime failure",
        };
        write!(f, "({n},{m},{l}) {kind}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub witness: Option<ClassWitness>,
    /// True when the verdict was decided on a finite window only.
    pub window_relative: bool,
}

impl Classification {
    fn global(verdict: Verdict) -> Self {
        Classification { verdict, witness: None, window_relative: false }
    }
}

fn divisor_closed(s: &BTreeSet<u64>) -> Option<ClassWitness> {
    for &n in s {
        for (m, l) in divisor_pairs(n) {
            if !s.contains(&m) || !s.contains(&l) {
                return Some(ClassWitness::MissingDivisor { n, m, l });
            }
        }
    }
    None
}

fn product_closed(s: &BTreeSet<u64>, bound: u64) -> Option<ClassWitness> {
    for &m in s {
        for &l in s.range(..=bound / m) {
            if !s.contains(&(m * l)) {
                return Some(ClassWitness::MissingProduct { n: m * l, m, l });
            }
        }
    }
    None
}

fn absorbing(s: &BTreeSet<u64>, bound: u64) -> Option<ClassWitness> {
    for &m in s {
        for l in 1..=bound / m {
            if !s.contains(&(m * l)) {
                return Some(ClassWitness::MissingProduct { n: m * l, m, l });
            }
        }
    }
    None
}

fn prime_split(s: &BTreeSet<u64>) -> Option<ClassWitness> {
    for &n in s {
        for (m, l) in divisor_pairs(n) {
            if !s.contains(&m) && !s.contains(&l) {
                return Some(ClassWitness::PrimeFailure { n, m, l });
            }
        }
    }
    None
}

/// Classifies `O_*(S)` for an explicit set inside `{1..bound}`.
pub fn classify_component_set(s: &SubsetWindow) -> Classification {
    let members = s.members();
    let bound = s.bound();
    let decided = |verdict, witness| Classification { verdict, witness, window_relative: true };
    if members.is_empty() {
        return decided(Verdict::Zero, None);
    }
    if members.contains(&1) {
        return match divisor_closed(members).or_else(|| product_closed(members, bound)) {
            Some(w) => decided(Verdict::None, Some(w)),
            None => decided(Verdict::Subbialgebra, None),
        };
    }
    if let Some(w) = absorbing(members, bound) {
        return decided(Verdict::None, Some(w));
    }
    match prime_split(members) {
        Some(_) => decided(Verdict::IdealOnly, None),
        None => decided(Verdict::Biideal, None),
    }
}

/// Classifies a predicate; sets derived from a [`PrimeSet`] get global verdicts.
pub fn classify_predicate(p: &ComponentPredicate) -> Classification {
    match p {
        ComponentPredicate::Generated(_) => Classification::global(Verdict::Subbialgebra),
        ComponentPredicate::Complement(f) if f.is_all() => Classification::global(Verdict::Zero),
        ComponentPredicate::Complement(_) => Classification::global(Verdict::Biideal),
        ComponentPredicate::Window(w) => classify_component_set(w),
    }
}

/// Generators `s_1, …, s_n` and the unit of `O_n`.
pub fn component_generators(n: Index) -> Result<Vec<AlgebraElement>> {
    let mut out = vec![AlgebraElement::unit(n)?];
    if n > 1 {
        for i in 1..=n {
            out.push(AlgebraElement::generator(n, i)?);
        }
    }
    Ok(out)
}

/// Checks `Δ(x) ∈ I ⊗ A + A ⊗ I` and `ε(x) = 0` for `I = I(F)` on the
/// generators of `O_n`. Each term of `Δ(x)` sits in a single block
/// `O_m ⊗ O_l`, so membership reduces to `m ∉ [F]` or `l ∉ [F]`.
pub fn check_biideal_on_generators(f: &PrimeSet, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroNatural);
    }
    if f.generates(n) {
        return Err(Error::InsideSubmonoid { n });
    }
    let outside = |c: Index| !f.generates(c.into());
    for x in component_generators(n as Index)? {
        let d = delta(&x);
        if !d.terms().all(|([a, b], _)| outside(a.n()) || outside(b.n())) {
            return Ok(false);
        }
        if !counit(&x).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every term of `Δ(x)` has both legs in components of `S`.
pub fn coproduct_stays_inside<S: ComponentSet>(s: &S, x: &AlgebraElement) -> bool {
    delta(x).terms().all(|([a, b], _)| s.contains(a.n().into()) && s.contains(b.n().into()))
}

/// `x = b + i` with `b ∈ A(F)` and `i ∈ I(F)`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub subbialgebra_part: AlgebraElement,
    pub biideal_part: AlgebraElement,
}

pub fn decompose(x: &AlgebraElement, f: &PrimeSet) -> Decomposition {
    let b = x.restrict(|n| f.generates(n.into()));
    let i = x.restrict(|n| !f.generates(n.into()));
    assert!((&b + &i).structurally_eq(x), "parts must sum to the input");
    assert!(b.components().is_disjoint(&i.components()), "parts must have disjoint supports");
    debug_assert!(b.mul(&i).is_structurally_zero() && i.mul(&b).is_structurally_zero());
    Decomposition { subbialgebra_part: b, biideal_part: i }
}

/// The projection `O_* -> A(F)` killing the components of `[F]^c`.
pub fn project(f: &PrimeSet, x: &AlgebraElement) -> AlgebraElement {
    x.restrict(|n| f.generates(n.into()))
}

fn project_tensor(f: &PrimeSet, u: &TensorElement) -> TensorElement {
    TensorElement::from_terms(
        u.terms()
            .filter(|([a, b], _)| f.generates(a.n().into()) && f.generates(b.n().into()))
            .map(|(k, c)| (k.clone(), c.clone())),
    )
}

/// Checks that the projection `π` onto `A(F)` is a *-bialgebra morphism onto
/// `(A(F), Δ_{[F]}, ε)` on the samples `x`, `y`.
pub fn quotient_morphism_check(f: &PrimeSet, x: &AlgebraElement, y: &AlgebraElement) -> bool {
    let h = SubmonoidView::generated(f.clone());
    let (px, py) = (project(f, x), project(f, y));
    let multiplicative = project(f, &x.mul(y)).equals(&px.mul(&py));
    let star = project(f, &x.adjoint()).equals(&px.adjoint());
    let coproduct = match delta_h(&h, &px) {
        Ok(d) => project_tensor(f, &delta(x)).equals(&d),
        Err(_) => false,
    };
    let counit_ok = counit(&px) == counit(x);
    multiplicative && star && coproduct && counit_ok
}

/// Result of comparing the lattice operations on `[F]`, `[G]` with the set
/// operations on `F`, `G` over components `n <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    pub bound: u64,
    /// `[F] ∩ [G] = [F ∩ G]`.
    pub meet_ok: bool,
    /// The submonoid generated by `[F] ∪ [G]` is `[F ∪ G]`.
    pub join_ok: bool,
    /// `F ⊂ G ⇒ A(F) ⊂ A(G)` and `I(G) ⊂ I(F)`, in both directions.
    pub order_ok: bool,
    /// A component in exactly one of `[F]`, `[G]`; `None` when `F = G`.
    pub separation_witness: Option<u64>,
    pub separation_ok: bool,
    pub failures: Vec<String>,
}

impl LatticeReport {
    pub fn passed(&self) -> bool {
        self.meet_ok && self.join_ok && self.order_ok && self.separation_ok
    }
}

fn window_closure(bound: u64, seed: impl Iterator<Item = u64>) -> BTreeSet<u64> {
    let mut set: BTreeSet<u64> = seed.collect();
    set.insert(1);
    loop {
        let mut added = Vec::new();
        for &a in &set {
            for &b in set.range(..=bound / a) {
                if !set.contains(&(a * b)) {
                    added.push(a * b);
                }
            }
        }
        if added.is_empty() {
            return set;
        }
        set.extend(added);
    }
}

pub fn lattice_iso_check(f: &PrimeSet, g: &PrimeSet, bound: u64) -> LatticeReport {
    let mut failures = Vec::new();
    let meet = f.meet(g);
    let join = f.join(g);

    let meet_ok = match (1..=bound).find(|&n| (f.generates(n) && g.generates(n)) != meet.generates(n)) {
        Some(n) => {
            failures.push(format!("meet differs at component {n}"));
            false
        }
        None => true,
    };

    let generated = window_closure(bound, (1..=bound).filter(|&n| f.generates(n) || g.generates(n)));
    let join_ok = match (1..=bound).find(|&n| generated.contains(&n) != join.generates(n)) {
        Some(n) => {
            failures.push(format!("join differs at component {n}"));
            false
        }
        None => true,
    };

    let mut order_ok = true;
    for (small, big, label) in [(f, g, "F ⊂ G"), (g, f, "G ⊂ F")] {
        if small.is_subset(big) {
            if let Some(n) = (1..=bound).find(|&n| small.generates(n) && !big.generates(n)) {
                failures.push(format!("{label} but A-inclusion fails at {n}"));
                order_ok = false;
            }
            if let Some(n) = (1..=bound).find(|&n| !big.generates(n) && small.generates(n)) {
                failures.push(format!("{label} but I-inclusion fails at {n}"));
                order_ok = false;
            }
        }
    }

    let separation_witness = f.separating_prime(g);
    let separation_ok = match separation_witness {
        Some(p) => {
            let ok = f.generates(p) != g.generates(p);
            if !ok {
                failures.push(format!("prime {p} does not separate [F] and [G]"));
            }
            ok
        }
        None => {
            let ok = f == g;
            if !ok {
                failures.push("distinct sets without a separating prime".to_string());
            }
            ok
        }
    };

    LatticeReport { bound, meet_ok, join_ok, order_ok, separation_witness, separation_ok, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn window(bound: u64, members: &[u64]) -> SubsetWindow {
        SubsetWindow::new(bound, members.iter().copied()).unwrap()
    }

    fn fin(p: &[u64]) -> PrimeSet {
        PrimeSet::finite(p.iter().copied()).unwrap()
    }

    #[test]
    fn paper_style_examples() {
        let evens = SubsetWindow::from_predicate(100, |n| n % 2 == 0);
        assert_eq!(classify_component_set(&evens).verdict, Verdict::Biideal);
        let twos = window(100, &[1, 2, 4, 8, 16, 32, 64]);
        assert_eq!(classify_component_set(&twos).verdict, Verdict::Subbialgebra);
        let fours = classify_component_set(&window(100, &[1, 4, 16, 64]));
        assert_eq!(fours.verdict, Verdict::None);
        assert_eq!(fours.witness.unwrap().triple(), (4, 2, 2));
    }

    #[test]
    fn remaining_verdicts() {
        assert_eq!(classify_component_set(&window(10, &[])).verdict, Verdict::Zero);
        // multiples of 6 form a non-prime ideal
        let sixes = SubsetWindow::from_predicate(60, |n| n % 6 == 0);
        let c = classify_component_set(&sixes);
        assert_eq!((c.verdict, c.witness), (Verdict::IdealOnly, None));
        let c = classify_component_set(&window(10, &[2]));
        assert_eq!(c.witness, Some(ClassWitness::MissingProduct { n: 4, m: 2, l: 2 }));
        assert_eq!(c.verdict, Verdict::None);
        assert_eq!(classify_predicate(&ComponentPredicate::Complement(PrimeSet::all())).verdict, Verdict::Zero);
        assert!(!classify_predicate(&ComponentPredicate::Generated(fin(&[2]))).window_relative);
    }

    #[test]
    fn biideal_generators() {
        assert!(check_biideal_on_generators(&fin(&[3]), 2).unwrap());
        assert!(check_biideal_on_generators(&PrimeSet::empty(), 5).unwrap());
        assert!(check_biideal_on_generators(&fin(&[2]), 6).unwrap());
        assert_eq!(check_biideal_on_generators(&fin(&[2]), 8), Err(Error::InsideSubmonoid { n: 8 }));
    }

    #[test]
    fn decomposition_examples() {
        let x = &AlgebraElement::generator(2, 1).unwrap() + &AlgebraElement::generator(3, 1).unwrap();
        let d = decompose(&x, &fin(&[2]));
        assert!(d.subbialgebra_part.structurally_eq(&AlgebraElement::generator(2, 1).unwrap()));
        assert!(d.biideal_part.structurally_eq(&AlgebraElement::generator(3, 1).unwrap()));
        let one = AlgebraElement::unit(1).unwrap().scale(&Scalar::from_int(7));
        assert!(decompose(&one, &PrimeSet::empty()).biideal_part.is_structurally_zero());
        let z = decompose(&AlgebraElement::zero(), &fin(&[2]));
        assert!(z.subbialgebra_part.is_structurally_zero() && z.biideal_part.is_structurally_zero());
    }

    #[test]
    fn quotient_examples() {
        let s = AlgebraElement::generator(4, 1).unwrap();
        assert!(quotient_morphism_check(&fin(&[2]), &s, &s.adjoint()));
        let h = SubmonoidView::generated(fin(&[2]));
        assert_eq!(delta_h(&h, &s).unwrap().len(), 3);
        let x = &AlgebraElement::unit(1).unwrap() + &AlgebraElement::generator(6, 5).unwrap();
        assert!(quotient_morphism_check(&PrimeSet::empty(), &x, &x));
        let z = AlgebraElement::zero();
        assert!(quotient_morphism_check(&fin(&[2, 3]), &z, &z));
    }

    #[test]
    fn lattice_examples() {
        let r = lattice_iso_check(&fin(&[2]), &fin(&[3]), 100);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.separation_witness, Some(2));
        let r = lattice_iso_check(&fin(&[2]), &fin(&[2]), 100);
        assert!(r.passed() && r.separation_witness.is_none());
        let r = lattice_iso_check(&fin(&[2]), &fin(&[2, 5]), 100);
        assert!(r.passed());
        assert_eq!(r.separation_witness, Some(5));
    }
}
