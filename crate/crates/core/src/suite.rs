//! Reproducible property-suite runner.
//!
//! Every suite draws its samples from a ChaCha stream seeded by the run seed
//! and the suite name, so a report depends only on the configuration. The
//! operations under test are routed through a [`Model`], which can carry a
//! deliberate [`Mutation`] to confirm that the suites detect broken
//! implementations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, CuntzMonomial, Index};
use crate::bialgebra::{
    check_coassociativity_with, check_counit_laws_with, check_hom_property_with, check_wcs_axiom, counit, delta,
    delta_h, phi_monomial, TensorElement,
};
use crate::classifier::{
    check_biideal_on_generators, classify_component_set, component_generators, coproduct_stays_inside, decompose,
    lattice_iso_check, quotient_morphism_check, Verdict,
};
use crate::error::{Error, Result};
use crate::expr::{parse_element, render_element, render_tensor};
use crate::monoid::{
    complement_duality_check, divisor_pairs, is_prime, prime_factorize, primes_up_to, ComponentSet, FreeMonoid,
    MonoidWindow, PrimeSet, SubmonoidView, SubsetWindow,
};
use crate::random;
use crate::scalar::Scalar;
use crate::serial::{deserialize_element, serialize_element};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Window bound for predicates on `(N, ·)`.
    pub bound: u64,
    /// Largest component for generator sweeps.
    pub max_component: Index,
    pub max_word_len: usize,
    pub sample_count: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, bound: 1000, max_component: 24, max_word_len: 3, sample_count: 200 }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bound == 0 || self.max_component == 0 || self.max_word_len == 0 || self.sample_count == 0 {
            return Err(Error::SetSpec("suite parameters must be positive".into()));
        }
        Ok(())
    }
}

/// A deliberate defect injected into the operations under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// The coproduct skips the divisor pair `(2, 2)`.
    DropDivisorPair,
    /// Products treat `s_i^* s_j` as `I` even when `i ≠ j`.
    SkipDeltaReduction,
    /// Prime enumeration includes 1.
    OneIsPrime,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [Mutation::DropDivisorPair, Mutation::SkipDeltaReduction, Mutation::OneIsPrime];
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mutation::DropDivisorPair => "drop-divisor-pair",
            Mutation::SkipDeltaReduction => "skip-delta-reduction",
            Mutation::OneIsPrime => "one-is-prime",
        })
    }
}

impl FromStr for Mutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::SetSpec(format!("unknown mutation `{s}`")))
    }
}

/// The operations exercised by the suites, optionally mutated.
#[derive(Clone, Copy, Debug, Default)]
pub struct Model {
    pub mutation: Option<Mutation>,
}

fn lax_monomial_mul(a: &CuntzMonomial, b: &CuntzMonomial) -> Option<CuntzMonomial> {
    if a.n() != b.n() {
        return None;
    }
    let (nu, alpha) = (a.nu(), b.mu());
    let (mu, nu) = if alpha.len() >= nu.len() {
        ([a.mu(), &alpha[nu.len()..]].concat(), b.nu().to_vec())
    } else {
        (a.mu().to_vec(), [b.nu(), &nu[alpha.len()..]].concat())
    };
    CuntzMonomial::new(a.n(), mu, nu).ok()
}

impl Model {
    pub fn new(mutation: Option<Mutation>) -> Self {
        Model { mutation }
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        if self.mutation != Some(Mutation::SkipDeltaReduction) {
            return x.mul(y);
        }
        let mut terms = Vec::new();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                if let Some(p) = lax_monomial_mul(a, b) {
                    terms.push((p, c * d));
                }
            }
        }
        AlgebraElement::from_terms(terms)
    }

    pub fn delta(&self, x: &AlgebraElement) -> TensorElement {
        if self.mutation != Some(Mutation::DropDivisorPair) {
            return delta(x);
        }
        let mut out = TensorElement::zero();
        for (m, c) in x.terms() {
            for (a, b) in divisor_pairs(m.n().into()).into_iter().filter(|&p| p != (2, 2)) {
                out.add_term(phi_monomial(a as Index, b as Index, m), c);
            }
        }
        out
    }

    pub fn primes_up_to(&self, limit: u64) -> Vec<u64> {
        let mut p = primes_up_to(limit);
        if self.mutation == Some(Mutation::OneIsPrime) {
            p.insert(0, 1);
        }
        p
    }
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// The first failing case.
    pub witness: Option<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub results: Vec<SuiteResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(SuiteResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&SuiteResult> {
        self.results.iter().find(|r| r.name == name)
    }

    /// Deterministic per-suite verdicts; timing is kept out of this text.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {:<22} cases={} failures={}", r.name, r.cases, r.failures));
            if let Some(w) = &r.witness {
                out.push_str(&format!(" witness: {w}"));
            }
            out.push('\n');
        }
        let failed = self.results.iter().filter(|r| !r.passed()).count();
        out.push_str(&format!("suites: {} passed, {} failed\n", self.results.len() - failed, failed));
        out
    }

    pub fn render_machine(&self) -> String {
        self.results
            .iter()
            .map(|r| {
                format!(
                    "{} | {} | {} | {} | {}\n",
                    r.name,
                    if r.passed() { "pass" } else { "fail" },
                    r.cases,
                    r.failures,
                    r.witness.as_deref().unwrap_or("-")
                )
            })
            .collect()
    }

    pub fn render_timings(&self) -> String {
        self.results.iter().map(|r| format!("{:<22} {:>9.3} ms\n", r.name, r.elapsed.as_secs_f64() * 1e3)).collect()
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    witness: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }
}

fn rng_for(seed: u64, name: &str) -> ChaCha8Rng {
    // FNV-1a over the suite name
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h = (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn gen(n: Index, i: Index) -> AlgebraElement {
    AlgebraElement::generator(n, i).expect("index in range")
}

fn unit(n: Index) -> AlgebraElement {
    AlgebraElement::unit(n).expect("positive component")
}

fn relations(model: &Model, _: &SuiteConfig, _: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for n in 1..=6 {
        for i in 1..=n {
            for j in 1..=n {
                let lhs = model.mul(&gen(n, i).adjoint(), &gen(n, j));
                let rhs = if i == j { unit(n) } else { AlgebraElement::zero() };
                t.check(lhs.equals(&rhs), || format!("s({n},{i})^* * s({n},{j}) = {lhs}"));
            }
        }
        let sum = (1..=n).fold(AlgebraElement::zero(), |acc, i| &acc + &model.mul(&gen(n, i), &gen(n, i).adjoint()));
        t.check(sum.equals(&unit(n)), || format!("sum of s({n},i)s({n},i)^* = {sum}"));
    }
    t
}

fn star_algebra(model: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for k in 0..cfg.sample_count {
        let sample = |rng: &mut ChaCha8Rng| {
            if k % 2 == 0 {
                random::element_in(rng, &[1, 2, 3], 2, 3)
            } else {
                random::element(rng, 6, 2, 3)
            }
        };
        let (x, y, z) = (sample(rng), sample(rng), sample(rng));
        let show = || format!("x = {x}, y = {y}, z = {z}");
        let m = |a: &AlgebraElement, b: &AlgebraElement| model.mul(a, b);
        t.check(m(&m(&x, &y), &z).equals(&m(&x, &m(&y, &z))), || format!("associativity: {}", show()));
        t.check(m(&x, &(&y + &z)).equals(&(&m(&x, &y) + &m(&x, &z))), || format!("left distributivity: {}", show()));
        t.check(m(&(&x + &y), &z).equals(&(&m(&x, &z) + &m(&y, &z))), || format!("right distributivity: {}", show()));
        t.check(m(&x, &y).adjoint().equals(&m(&y.adjoint(), &x.adjoint())), || format!("(xy)^* = y^*x^*: {}", show()));
        t.check(x.adjoint().adjoint().structurally_eq(&x), || format!("involution: {}", show()));
        for n in x.components() {
            let part = x.restrict(|c| c == n);
            t.check(m(&unit(n), &x).equals(&part) && m(&x, &unit(n)).equals(&part), || {
                format!("I({n}) is not a unit for component {n} of {x}")
            });
            for other in y.components().into_iter().filter(|&c| c != n) {
                let q = y.restrict(|c| c == other);
                t.check(m(&part, &q).is_structurally_zero(), || format!("components {n} and {other} do not annihilate"));
            }
        }
    }
    t
}

/// Expands every component of `x` to its largest nu-length.
fn full_expansion(x: &AlgebraElement) -> AlgebraElement {
    let mut out = x.clone();
    for n in x.components() {
        let level = x.terms().filter(|(m, _)| m.n() == n).map(|(m, _)| m.level()).max().unwrap_or(0);
        out = out.expand_to_level(n, level).expect("level is the maximum");
    }
    out
}

fn equality_oracle(_: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for _ in 0..cfg.sample_count {
        let x = random::element(rng, 6, 3, 3);
        let y = if rng.gen_bool(0.5) {
            random::element(rng, 6, 3, 3)
        } else {
            // add a disguised zero c·(I_n - Σ s_i s_i^*)·m
            let n = rng.gen_range(2..=6);
            let sum = (1..=n).fold(AlgebraElement::zero(), |acc, i| &acc + &(&gen(n, i) * &gen(n, i).adjoint()));
            let zero = &(&unit(n) - &sum) * &AlgebraElement::monomial(random::monomial(rng, n, 2));
            &x + &zero.scale(&random::scalar(rng))
        };
        let diff = &x - &y;
        let expanded = full_expansion(&diff);
        let verdict = x.equals(&y);
        t.check(verdict == expanded.is_structurally_zero(), || format!("equals({x}, {y}) = {verdict}"));
        for (m, c) in expanded.terms() {
            let read = diff.coefficient_extract(m.n(), m.mu(), m.nu()).expect("letters in range");
            t.check(&read == c, || format!("coefficient of {m:?} in {diff}: extracted {read}, expanded {c}"));
        }
        for (m, c) in diff.expanded().terms() {
            let read = diff.coefficient_extract(m.n(), m.mu(), m.nu()).expect("letters in range");
            t.check(&read == c, || format!("pruned coefficient of {m:?} in {diff}: extracted {read}, expanded {c}"));
        }
        let cf = x.canonical_form();
        t.check(cf.canonical_form().structurally_eq(&cf), || format!("canonical form not idempotent on {x}"));
        t.check(cf.equals(&x), || format!("canonical form changed the value of {x}"));
        let deeper = x.components().into_iter().try_fold(x.clone(), |acc, n| {
            let level = acc.terms().filter(|(m, _)| m.n() == n).map(|(m, _)| m.level()).max().unwrap_or(0);
            acc.expand_to_level(n, level + 1)
        });
        let deeper = deeper.expect("expanding past the maximum level");
        t.check(deeper.canonical_form().structurally_eq(&cf), || format!("canonical form depends on representation of {x}"));
    }
    t
}

fn generator_sweep(cfg: &SuiteConfig) -> Vec<(String, AlgebraElement)> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_component {
        for k in 1..=n {
            out.push((format!("s({n},{k})"), gen(n, k)));
        }
    }
    out
}

fn random_words(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<(String, AlgebraElement)> {
    (0..cfg.sample_count)
        .map(|_| {
            let x = random::word_element(rng, cfg.max_component.min(12), cfg.max_word_len);
            (x.to_string(), x)
        })
        .collect()
}

fn coassociativity(model: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let f = |y: &AlgebraElement| Ok(model.delta(y));
    for (label, x) in generator_sweep(cfg).into_iter().chain(random_words(cfg, rng)) {
        let ok = check_coassociativity_with(&x, &f).unwrap_or(false);
        t.check(ok, || label);
    }
    t
}

fn counit_laws(model: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let f = |y: &AlgebraElement| Ok(model.delta(y));
    for (label, x) in generator_sweep(cfg).into_iter().chain(random_words(cfg, rng)) {
        let ok = check_counit_laws_with(&x, &f).unwrap_or(false);
        t.check(ok, || label);
    }
    t
}

fn unit_coproduct(n: Index) -> TensorElement {
    let mut want = TensorElement::zero();
    for (a, b) in divisor_pairs(n.into()) {
        let key = [CuntzMonomial::unit(a as Index).expect("positive"), CuntzMonomial::unit(b as Index).expect("positive")];
        want.add_term(key, &Scalar::one());
    }
    want
}

fn homomorphism(model: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for n in 1..=cfg.max_component {
        let d = model.delta(&unit(n));
        t.check(d.equals(&unit_coproduct(n)), || format!("Δ(I({n})) = {d}"));
    }
    for _ in 0..cfg.sample_count {
        let n = rng.gen_range(1..=cfg.max_component.min(12));
        let m = rng.gen_range(1..=cfg.max_component.min(12));
        let x = random::element_in(rng, &[n], cfg.max_word_len, 2);
        let y = random::element_in(rng, &[n, n, m], cfg.max_word_len, 2);
        let xy = model.mul(&x, &y);
        let multiplicative = model.delta(&xy).equals(&model.delta(&x).mul(&model.delta(&y)));
        let star = model.delta(&x.adjoint()).equals(&model.delta(&x).adjoint());
        let eps = counit(&xy) == &counit(&x) * &counit(&y);
        t.check(multiplicative && star && eps, || format!("x = {x}, y = {y}"));
    }
    t
}

fn wcs(_: &Model, cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let top = cfg.max_component;
    for a in 1..=top {
        for b in 1..=top / a {
            for c in 1..=top / (a * b) {
                let n = a * b * c;
                let mut samples = component_generators(n).expect("positive component");
                if n > 1 {
                    samples.extend((1..=n).map(|i| gen(n, i).adjoint()));
                }
                for x in samples {
                    let ok = check_wcs_axiom(a, b, c, &x).unwrap_or(false);
                    t.check(ok, || format!("(a,b,c) = ({a},{b},{c}), x = {x}"));
                }
            }
        }
    }
    t
}

const EQ13: &str = "(I(1))⊗(s(4,1)) + (s(2,1))⊗(s(2,1)) + (s(4,1))⊗(I(1))";
const EQ12: &str = "(I(1))⊗(s(4,1)) + (s(4,1))⊗(I(1))";

fn theorem_witnesses(model: &Model, _: &SuiteConfig, _: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let s41 = gen(4, 1);
    let full = model.delta(&s41);
    t.check(render_tensor(&full) == EQ13, || format!("Δ(s(4,1)) = {full}"));
    let fours = SubmonoidView::PowersOf(4);
    let restricted = delta_h(&fours, &s41).expect("4 is a power of 4");
    t.check(render_tensor(&restricted) == EQ12, || format!("Δ_H(s(4,1)) = {restricted}"));
    let middle = TensorElement::simple(&gen(2, 1), &gen(2, 1));
    t.check((&full - &restricted).equals(&middle) && !full.equals(&restricted), || {
        "Δ and Δ_H differ by something other than s(2,1)⊗s(2,1)".into()
    });
    let d = model.delta(&gen(6, 2));
    t.check(!d.swap_legs().equals(&d), || format!("Δ(s(6,2)) is swap-invariant: {d}"));
    t
}

fn restricted_coproducts(_: &Model, cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let views = [
        SubmonoidView::generated(PrimeSet::finite([2]).expect("prime")),
        SubmonoidView::generated(PrimeSet::finite([2, 3]).expect("primes")),
        SubmonoidView::generated(PrimeSet::cofinite([2]).expect("prime")),
        SubmonoidView::PowersOf(4),
        SubmonoidView::PowersOf(6),
    ];
    for h in &views {
        let f = |y: &AlgebraElement| delta_h(h, y);
        for n in (1..=cfg.max_component).filter(|&n| h.contains(n.into())) {
            let gens = component_generators(n).expect("positive component");
            for x in &gens {
                let ok = check_coassociativity_with(x, &f).unwrap_or(false)
                    && check_counit_laws_with(x, &f).unwrap_or(false);
                t.check(ok, || format!("H = {h:?}, x = {x}"));
            }
            for x in gens.iter().take(3) {
                for y in gens.iter().rev().take(3) {
                    let ok = check_hom_property_with(x, &y.adjoint(), &f).unwrap_or(false);
                    t.check(ok, || format!("H = {h:?}, hom at x = {x}, y = {y}^*"));
                }
            }
        }
    }
    t
}

/// The verdict read off the windowed monoid predicates.
fn brute_verdict(w: &SubsetWindow) -> Verdict {
    let mw = w.to_monoid_window();
    if w.members().is_empty() {
        Verdict::Zero
    } else if mw.is_factorial_submonoid().is_ok() || w.members().len() as u64 == w.bound() {
        Verdict::Subbialgebra
    } else if mw.is_prime_ideal().is_ok() {
        Verdict::Biideal
    } else if mw.is_proper_ideal().is_ok() {
        Verdict::IdealOnly
    } else {
        Verdict::None
    }
}

fn classification(model: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let mut windows: Vec<SubsetWindow> = (0u32..1 << 12)
        .map(|mask| SubsetWindow::from_predicate(12, |n| mask & (1 << (n - 1)) != 0))
        .collect();
    let _ = model;
    let hint_bound = cfg.bound.min(200);
    for _ in 0..cfg.sample_count / 4 {
        let f = random::prime_set(rng, &primes_up_to(31));
        windows.push(SubsetWindow::from_predicate(hint_bound, |n| f.generates(n)));
        windows.push(SubsetWindow::from_predicate(hint_bound, |n| !f.generates(n)));
    }
    for w in &windows {
        let c = classify_component_set(w);
        let want = brute_verdict(w);
        t.check(c.verdict == want && (c.verdict == Verdict::None) == c.witness.is_some(), || {
            format!("S = {:?} (bound {}): classifier {} vs brute force {}", w.members(), w.bound(), c.verdict, want)
        });
    }
    let fours = SubsetWindow::new(100, [1, 4, 16, 64]).expect("within window");
    let c = classify_component_set(&fours);
    t.check(c.verdict == Verdict::None && c.witness.map(|w| w.triple()) == Some((4, 2, 2)), || {
        format!("{{4^k}} classified {} with {:?}", c.verdict, c.witness)
    });
    // soundness against the coproduct itself
    for f in [PrimeSet::empty(), PrimeSet::finite([2]).expect("prime"), PrimeSet::finite([3, 5]).expect("primes")] {
        let inside = SubsetWindow::from_predicate(24, |n| f.generates(n));
        t.check(classify_component_set(&inside).verdict == Verdict::Subbialgebra, || format!("[{f}] not a subbialgebra"));
        for n in inside.members().iter().copied() {
            for x in component_generators(n as Index).expect("positive") {
                t.check(coproduct_stays_inside(&|c: u64| f.generates(c), &x), || format!("Δ({x}) leaves A({f})"));
            }
        }
        let outside = inside.complement();
        t.check(classify_component_set(&outside).verdict == Verdict::Biideal, || format!("[{f}]^c not a biideal"));
        for n in outside.members().iter().copied() {
            t.check(check_biideal_on_generators(&f, n).unwrap_or(false), || format!("I({f}) fails at component {n}"));
        }
    }
    t
}

fn nat_window(bound: u64, keep: impl Fn(u64) -> bool) -> MonoidWindow<crate::monoid::NaturalMul> {
    SubsetWindow::from_predicate(bound, keep).to_monoid_window()
}

fn duality(_: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let bound = cfg.bound;
    let primes = primes_up_to(31);
    for k in 0..100 {
        let (label, w) = match k % 6 {
            0 => {
                let f = random::prime_set(rng, &primes);
                (format!("[{f}]"), nat_window(bound, |n| f.generates(n)))
            }
            1 => {
                let f = random::prime_set(rng, &primes);
                (format!("[{f}]^c"), nat_window(bound, |n| !f.generates(n)))
            }
            2 => {
                let base = rng.gen_range(2..=9u64);
                (format!("powers of {base}"), nat_window(bound, |n| SubmonoidView::PowersOf(base).contains(n)))
            }
            3 => {
                let m = rng.gen_range(2..=12u64);
                (format!("multiples of {m}"), nat_window(bound, |n| n % m == 0))
            }
            4 => {
                let keep: BTreeSet<u64> = (1..=bound).filter(|_| rng.gen_bool(0.5)).collect();
                ("random subset".to_string(), nat_window(bound, |n| keep.contains(&n)))
            }
            _ => {
                let f = random::prime_set(rng, &primes);
                let extra: Vec<u64> = (0..3).map(|_| rng.gen_range(1..=bound)).collect();
                ("[F] with stray points".to_string(), nat_window(bound, |n| f.generates(n) || extra.contains(&n)))
            }
        };
        let report = complement_duality_check(&w);
        let bad = report.entries.iter().find(|e| !e.holds());
        t.check(bad.is_none(), || format!("{label}: {:?}", bad.map(|e| e.statement)));
    }
    let free = FreeMonoid::new(['a', 'b']);
    let universe = free.words_up_to(6);
    let mut sets: Vec<(String, BTreeSet<String>)> = vec![
        ("contains a".into(), universe.iter().filter(|w| w.contains('a')).cloned().collect()),
        ("avoids a".into(), universe.iter().filter(|w| !w.contains('a')).cloned().collect()),
        ("contains ab".into(), universe.iter().filter(|w| w.contains("ab")).cloned().collect()),
        ("even length".into(), universe.iter().filter(|w| w.len() % 2 == 0).cloned().collect()),
        ("starts with a".into(), universe.iter().filter(|w| w.starts_with('a')).cloned().collect()),
        ("empty".into(), BTreeSet::new()),
        ("everything".into(), universe.clone()),
    ];
    for k in 0..20 {
        let keep = universe.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        sets.push((format!("random word set {k}"), keep));
    }
    for (label, members) in sets {
        let w = MonoidWindow::new(free.clone(), universe.clone(), members);
        let report = complement_duality_check(&w);
        let bad = report.entries.iter().find(|e| !e.holds());
        t.check(bad.is_none(), || format!("free monoid, {label}: {:?}", bad.map(|e| e.statement)));
    }
    t
}

fn decomposition_sets() -> Vec<PrimeSet> {
    vec![
        PrimeSet::empty(),
        PrimeSet::finite([2]).expect("prime"),
        PrimeSet::finite([2, 3]).expect("primes"),
        PrimeSet::cofinite([2]).expect("prime"),
    ]
}

fn decomposition(model: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for f in decomposition_sets() {
        for _ in 0..cfg.sample_count {
            let x = random::element(rng, cfg.max_component, cfg.max_word_len, 4);
            let d = decompose(&x, &f);
            let (b, i) = (&d.subbialgebra_part, &d.biideal_part);
            let ok = (b + i).structurally_eq(&x)
                && b.components().is_disjoint(&i.components())
                && b.components().iter().all(|&n| f.generates(n.into()))
                && i.components().iter().all(|&n| !f.generates(n.into()))
                && model.mul(b, i).is_zero()
                && model.mul(i, b).is_zero();
            t.check(ok, || format!("F = {f}, x = {x}"));
        }
    }
    t
}

fn quotient(_: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for f in decomposition_sets() {
        for _ in 0..(cfg.sample_count / 4).max(1) {
            let x = random::element(rng, 12, 2, 3);
            let y = random::element(rng, 12, 2, 3);
            t.check(quotient_morphism_check(&f, &x, &y), || format!("F = {f}, x = {x}, y = {y}"));
        }
    }
    t
}

fn lattice(_: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let primes = primes_up_to(31);
    for k in 0..50 {
        let f = random::prime_set(rng, &primes);
        let g = if k % 5 == 0 { f.join(&random::prime_set(rng, &primes)) } else { random::prime_set(rng, &primes) };
        let r = lattice_iso_check(&f, &g, cfg.bound);
        t.check(r.passed(), || format!("F = {f}, G = {g}: {:?}", r.failures));
    }
    t
}

fn prime_ideals(model: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let bound = cfg.bound;
    let maximal = nat_window(bound, |n| n != 1);
    t.check(maximal.is_prime_ideal().is_ok(), || "N \\ {1} is not a prime ideal".into());
    let candidates = model.primes_up_to(31);
    for &p in &candidates {
        let w = nat_window(bound, |n| n % p == 0);
        let r = w.is_prime_ideal();
        t.check(r.is_ok(), || format!("p = {p}: pN is not a prime ideal ({r:?})"));
        // nothing properly inside pN is a prime ideal: dropping p breaks primality
        let without_p = nat_window(bound, |n| n % p == 0 && n != p);
        t.check(without_p.is_prime_ideal().is_err(), || format!("p = {p}: pN minus {{p}} is still prime"));
    }
    let all = primes_up_to(31);
    for _ in 0..20 {
        let f = PrimeSet::finite(all.iter().copied().filter(|_| rng.gen_bool(0.4))).expect("primes");
        let w = nat_window(bound, |n| f.generates(n));
        t.check(w.is_factorial_submonoid().is_ok(), || format!("[{f}] is not a factorial submonoid"));
        // every prime ideal [F]^c lies inside the maximal one and contains pN for p outside F
        let c = w.complement();
        t.check(c.members.is_subset(&maximal.members), || format!("[{f}]^c contains 1"));
        if let Some(&p) = all.iter().find(|&&p| !f.contains(p)) {
            t.check((1..=bound / p).all(|k| c.members.contains(&(k * p))), || format!("{p}N not inside [{f}]^c"));
        }
    }
    t
}

fn factorization(_: &Model, _: &SuiteConfig, _: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for n in 1..=10_000u64 {
        let f = prime_factorize(n).expect("positive");
        t.check(f.iter().product::<u64>() == n && f.iter().all(|&p| is_prime(p)), || format!("{n} -> {f:?}"));
    }
    t
}

fn round_trip(_: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for _ in 0..cfg.sample_count * 5 {
        let x = random::element(rng, 8, 3, 4);
        let text = render_element(&x);
        match parse_element(&text) {
            Ok(back) => {
                t.check(back.equals(&x) && render_element(&back) == text, || format!("`{text}` re-renders differently"))
            }
            Err(e) => t.check(false, || format!("`{text}` does not parse: {e}")),
        }
        let lines = serialize_element(&x);
        let ok = deserialize_element(&lines).map(|b| b.equals(&x)).unwrap_or(false);
        t.check(ok, || format!("serialization of {text} does not round-trip"));
    }
    t
}

type SuiteFn = fn(&Model, &SuiteConfig, &mut ChaCha8Rng) -> Tally;

pub const SUITE_NAMES: [&str; 17] = [
    "relations",
    "star_algebra",
    "equality_oracle",
    "coassociativity",
    "counit_laws",
    "homomorphism",
    "wcs",
    "theorem_witnesses",
    "restricted_coproducts",
    "classification",
    "duality",
    "decomposition",
    "quotient",
    "lattice",
    "prime_ideals",
    "factorization",
    "round_trip",
];

const SUITES: [SuiteFn; 17] = [
    relations,
    star_algebra,
    equality_oracle,
    coassociativity,
    counit_laws,
    homomorphism,
    wcs,
    theorem_witnesses,
    restricted_coproducts,
    classification,
    duality,
    decomposition,
    quotient,
    lattice,
    prime_ideals,
    factorization,
    round_trip,
];

/// Runs the named suites (all when `only` is empty) against `model`.
pub fn run_suites(cfg: &SuiteConfig, model: &Model, only: &[&str]) -> Result<SuiteReport> {
    cfg.validate()?;
    if let Some(bad) = only.iter().find(|n| !SUITE_NAMES.contains(n)) {
        return Err(Error::SetSpec(format!("unknown suite `{bad}`")));
    }
    let mut report = SuiteReport::default();
    for (name, suite) in SUITE_NAMES.iter().zip(SUITES) {
        if !only.is_empty() && !only.contains(name) {
            continue;
        }
        let mut rng = rng_for(cfg.seed, name);
        let start = Instant::now();
        let tally = suite(model, cfg, &mut rng);
        report.results.push(SuiteResult {
            name,
            cases: tally.cases,
            failures: tally.failures,
            witness: tally.witness,
            elapsed: start.elapsed(),
        });
    }
    Ok(report)
}

pub fn run_property_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    run_suites(cfg, &Model::default(), &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suites_pass_with_small_config() {
        let cfg = SuiteConfig { bound: 200, max_component: 12, sample_count: 20, ..SuiteConfig::default() };
        let report = run_property_suite(&cfg).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }
}
