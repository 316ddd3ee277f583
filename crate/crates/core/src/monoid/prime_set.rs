use std::collections::BTreeSet;
use std::fmt;

use super::arith::{is_prime, prime_factorize};
use crate::error::{Error, Result};

/// A finite or cofinite set `F` of prime numbers.
///
/// `Finite(∅)` is the empty set and `Cofinite(∅)` is the set of all primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PrimeSet {
    Finite(BTreeSet<u64>),
    /// All primes except the listed ones.
    Cofinite(BTreeSet<u64>),
}

fn checked(primes: impl IntoIterator<Item = u64>) -> Result<BTreeSet<u64>> {
    primes
        .into_iter()
        .map(|p| if is_prime(p) { Ok(p) } else { Err(Error::NotPrime(p)) })
        .collect()
}

impl PrimeSet {
    pub fn finite(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        Ok(PrimeSet::Finite(checked(primes)?))
    }

    pub fn cofinite(excluded: impl IntoIterator<Item = u64>) -> Result<Self> {
        Ok(PrimeSet::Cofinite(checked(excluded)?))
    }

    pub fn empty() -> Self {
        PrimeSet::Finite(BTreeSet::new())
    }

    pub fn all() -> Self {
        PrimeSet::Cofinite(BTreeSet::new())
    }

    pub fn is_all(&self) -> bool {
        matches!(self, PrimeSet::Cofinite(x) if x.is_empty())
    }

    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::Finite(s) => s.contains(&p),
            PrimeSet::Cofinite(x) => is_prime(p) && !x.contains(&p),
        }
    }

    pub fn join(&self, other: &Self) -> Self {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a | b),
            (Cofinite(a), Cofinite(b)) => Cofinite(a & b),
            (Finite(f), Cofinite(x)) | (Cofinite(x), Finite(f)) => Cofinite(x - f),
        }
    }

    pub fn meet(&self, other: &Self) -> Self {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a & b),
            (Cofinite(a), Cofinite(b)) => Cofinite(a | b),
            (Finite(f), Cofinite(x)) | (Cofinite(x), Finite(f)) => Finite(f - x),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.is_subset(b),
            (Cofinite(a), Cofinite(b)) => b.is_subset(a),
            (Finite(f), Cofinite(x)) => f.is_disjoint(x),
            (Cofinite(_), Finite(_)) => false,
        }
    }

    /// The least prime in exactly one of the two sets, if the sets differ.
    pub fn separating_prime(&self, other: &Self) -> Option<u64> {
        use PrimeSet::*;
        if self == other {
            return None;
        }
        let listed: BTreeSet<u64> = match (self, other) {
            (Finite(a), Finite(b)) | (Cofinite(a), Cofinite(b)) => a ^ b,
            (Finite(f), Cofinite(x)) | (Cofinite(x), Finite(f)) => {
                // every prime outside f ∪ x separates; look below the first gap too
                let mut p = 2;
                loop {
                    if is_prime(p) && (f.contains(&p) == x.contains(&p)) {
                        return Some(p);
                    }
                    p += 1;
                }
            }
        };
        listed.into_iter().next()
    }

    /// Membership in the generated submonoid `[F]`: every prime factor of `n`
    /// lies in `F`. Always true for `n = 1`.
    pub fn generates(&self, n: u64) -> bool {
        match prime_factorize(n) {
            Ok(f) => f.into_iter().all(|p| self.contains(p)),
            Err(_) => false,
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<u64>| s.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            PrimeSet::Finite(s) => write!(f, "primes:{}", list(s)),
            PrimeSet::Cofinite(x) => write!(f, "coprimes:{}", list(x)),
        }
    }
}

/// A set of components of `O_*` with decidable membership.
pub trait ComponentSet {
    fn contains(&self, n: u64) -> bool;
}

impl<F: Fn(u64) -> bool> ComponentSet for F {
    fn contains(&self, n: u64) -> bool {
        self(n)
    }
}

/// A submonoid `H` of `(N, ·)` with global membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmonoidView {
    /// `[F]`, the submonoid generated by a set of primes.
    Generated(PrimeSet),
    /// `{k^l : l >= 0}`, generated by a single natural number `k`.
    PowersOf(u64),
}

impl SubmonoidView {
    pub fn generated(f: PrimeSet) -> Self {
        SubmonoidView::Generated(f)
    }

    pub fn everything() -> Self {
        SubmonoidView::Generated(PrimeSet::all())
    }
}

impl ComponentSet for SubmonoidView {
    fn contains(&self, n: u64) -> bool {
        match self {
            SubmonoidView::Generated(f) => f.generates(n),
            SubmonoidView::PowersOf(k) => {
                if n == 1 {
                    return true;
                }
                if *k <= 1 {
                    return false;
                }
                let mut rest = n;
                while rest % k == 0 {
                    rest /= k;
                }
                rest == 1
            }
        }
    }
}

/// `submonoid_member`: whether `n` lies in `H`.
pub fn submonoid_member(h: &SubmonoidView, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroNatural);
    }
    Ok(h.contains(n))
}
