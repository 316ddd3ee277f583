use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Index type for components `O_n` and generator letters.
pub type Index = u32;

/// The monomial `s_mu s_nu^*` in the component `O_n`.
///
/// Letters are 1-based. In `O_1` the only generator is the unit, so every
/// word over `{1}` is normalized to the empty word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CuntzMonomial {
    n: Index,
    mu: Vec<Index>,
    nu: Vec<Index>,
}

fn check_word(n: Index, word: &[Index]) -> Result<()> {
    match word.iter().find(|&&a| a == 0 || a > n) {
        Some(&index) => Err(Error::LetterOutOfRange { n, index }),
        None => Ok(()),
    }
}

impl CuntzMonomial {
    pub fn new(n: Index, mu: Vec<Index>, nu: Vec<Index>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroComponent);
        }
        check_word(n, &mu)?;
        check_word(n, &nu)?;
        Ok(Self::new_unchecked(n, mu, nu))
    }

    /// Builds a monomial from letters already known to lie in `1..=n`.
    pub(crate) fn new_unchecked(n: Index, mu: Vec<Index>, nu: Vec<Index>) -> Self {
        debug_assert!(n > 0);
        if n == 1 {
            CuntzMonomial { n, mu: Vec::new(), nu: Vec::new() }
        } else {
            CuntzMonomial { n, mu, nu }
        }
    }

    pub fn unit(n: Index) -> Result<Self> {
        Self::new(n, Vec::new(), Vec::new())
    }

    pub fn generator(n: Index, i: Index) -> Result<Self> {
        Self::new(n, vec![i], Vec::new())
    }

    pub fn n(&self) -> Index {
        self.n
    }

    pub fn mu(&self) -> &[Index] {
        &self.mu
    }

    pub fn nu(&self) -> &[Index] {
        &self.nu
    }

    pub fn is_unit(&self) -> bool {
        self.mu.is_empty() && self.nu.is_empty()
    }

    /// Gauge degree `|mu| - |nu|`.
    pub fn degree(&self) -> i64 {
        self.mu.len() as i64 - self.nu.len() as i64
    }

    /// The nu-length, which is the expansion level of the monomial.
    pub fn level(&self) -> usize {
        self.nu.len()
    }

    pub fn adjoint(&self) -> Self {
        CuntzMonomial { n: self.n, mu: self.nu.clone(), nu: self.mu.clone() }
    }

    /// `(s_mu s_nu^*)(s_alpha s_beta^*)`, or `None` when the product vanishes.
    pub fn mul(&self, rhs: &Self) -> Option<Self> {
        if self.n != rhs.n {
            return None;
        }
        let (nu, alpha) = (&self.nu, &rhs.mu);
        if let Some(gamma) = alpha.strip_prefix(nu.as_slice()) {
            let mut mu = self.mu.clone();
            mu.extend_from_slice(gamma);
            Some(CuntzMonomial { n: self.n, mu, nu: rhs.nu.clone() })
        } else if let Some(delta) = nu.strip_prefix(alpha.as_slice()) {
            let mut nu = rhs.nu.clone();
            nu.extend_from_slice(delta);
            Some(CuntzMonomial { n: self.n, mu: self.mu.clone(), nu })
        } else {
            None
        }
    }

    /// `s_{mu i} s_{nu i}^*` for `i = 1..=n`; these sum to `self`.
    pub fn children(&self) -> impl Iterator<Item = CuntzMonomial> + '_ {
        (1..=self.n).filter(|_| self.n > 1).map(move |i| {
            let mut mu = self.mu.clone();
            let mut nu = self.nu.clone();
            mu.push(i);
            nu.push(i);
            CuntzMonomial { n: self.n, mu, nu }
        })
    }

    /// All refinements `s_{mu gamma} s_{nu gamma}^*` with `|gamma| = depth`.
    pub fn refinements(&self, depth: usize) -> Vec<CuntzMonomial> {
        let mut out = vec![self.clone()];
        if self.n == 1 {
            return out;
        }
        for _ in 0..depth {
            out = out.iter().flat_map(|m| m.children().collect::<Vec<_>>()).collect();
        }
        out
    }

    /// The monomial one level up when `self` is a child of it.
    pub(crate) fn parent(&self) -> Option<CuntzMonomial> {
        let (&a, mu) = self.mu.split_last()?;
        let (&b, nu) = self.nu.split_last()?;
        (a == b).then(|| CuntzMonomial { n: self.n, mu: mu.to_vec(), nu: nu.to_vec() })
    }

    /// True when `self` is a strict refinement `s_{mu gamma} s_{nu gamma}^*` of `node`.
    pub(crate) fn strictly_refines(&self, node: &CuntzMonomial) -> bool {
        if self.n != node.n || self.level() <= node.level() || self.degree() != node.degree() {
            return false;
        }
        match (self.mu.strip_prefix(node.mu.as_slice()), self.nu.strip_prefix(node.nu.as_slice())) {
            (Some(g1), Some(g2)) => g1 == g2,
            _ => false,
        }
    }
}

impl Ord for CuntzMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.degree().cmp(&other.degree()))
            .then(self.level().cmp(&other.level()))
            .then_with(|| self.nu.cmp(&other.nu))
            .then_with(|| self.mu.cmp(&other.mu))
    }
}

impl PartialOrd for CuntzMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CuntzMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?}, {:?})", self.n, self.mu, self.nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: Index, mu: &[Index], nu: &[Index]) -> CuntzMonomial {
        CuntzMonomial::new(n, mu.to_vec(), nu.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(CuntzMonomial::new(0, vec![], vec![]), Err(Error::ZeroComponent));
        assert_eq!(
            CuntzMonomial::new(2, vec![3], vec![]),
            Err(Error::LetterOutOfRange { n: 2, index: 3 })
        );
        assert!(CuntzMonomial::new(2, vec![0], vec![]).is_err());
        // s_1^(1) is the unit of O_1
        assert_eq!(m(1, &[1, 1], &[1]), CuntzMonomial::unit(1).unwrap());
        assert!(CuntzMonomial::new(1, vec![2], vec![]).is_err());
    }

    #[test]
    fn products() {
        assert_eq!(m(2, &[1], &[2]).mul(&m(2, &[2], &[1])), Some(m(2, &[1], &[1])));
        assert_eq!(m(2, &[1], &[1]).mul(&m(2, &[2], &[2])), None);
        assert_eq!(m(2, &[1], &[]).mul(&m(3, &[1], &[])), None);
        // alpha = nu gamma
        assert_eq!(m(3, &[2], &[1]).mul(&m(3, &[1, 3], &[2])), Some(m(3, &[2, 3], &[2])));
        // nu = alpha delta
        assert_eq!(m(3, &[2], &[1, 3]).mul(&m(3, &[1], &[2])), Some(m(3, &[2], &[2, 3])));
    }

    #[test]
    fn ordering_groups_by_component_then_degree() {
        let mut v = vec![m(3, &[], &[]), m(2, &[1], &[1]), m(2, &[], &[1]), m(2, &[1], &[])];
        v.sort();
        assert_eq!(v, vec![m(2, &[], &[1]), m(2, &[1], &[1]), m(2, &[1], &[]), m(3, &[], &[])]);
    }

    #[test]
    fn refinement_relation() {
        let node = m(2, &[1], &[]);
        assert!(m(2, &[1, 2], &[2]).strictly_refines(&node));
        assert!(!m(2, &[1, 2], &[1]).strictly_refines(&node));
        assert!(!node.strictly_refines(&node));
        assert_eq!(node.refinements(2).len(), 4);
        assert_eq!(m(2, &[1, 2], &[2]).parent(), Some(node));
    }
}
