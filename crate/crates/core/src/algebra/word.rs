use super::element::AlgebraElement;
use super::monomial::{CuntzMonomial, Index};
use crate::error::{Error, Result};

/// An unreduced product of generators and adjoints of generators in `O_n`.
/// An empty letter list denotes the unit `I_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawWord {
    pub n: Index,
    /// `(i, starred)`: `s_i` or `s_i^*`.
    pub letters: Vec<(Index, bool)>,
}

impl RawWord {
    pub fn new(n: Index, letters: Vec<(Index, bool)>) -> Self {
        RawWord { n, letters }
    }

    pub fn unit(n: Index) -> Self {
        RawWord { n, letters: Vec::new() }
    }
}

/// Rewrites `s_i^* s_j -> delta_ij I` until the word has the shape
/// `s_mu s_nu^*`. Each rewrite removes two letters, so at most `len / 2`
/// rewrites happen. Returns zero as soon as a mismatch occurs.
pub fn reduce_word(w: &RawWord) -> Result<AlgebraElement> {
    if w.n == 0 {
        return Err(Error::ZeroComponent);
    }
    if let Some(&(index, _)) = w.letters.iter().find(|&&(i, _)| i == 0 || i > w.n) {
        return Err(Error::LetterOutOfRange { n: w.n, index });
    }
    // invariant: stack = unstarred letters followed by starred letters
    let mut stack: Vec<(Index, bool)> = Vec::with_capacity(w.letters.len());
    for &(i, starred) in &w.letters {
        match stack.last() {
            Some(&(j, true)) if !starred => {
                if i != j {
                    return Ok(AlgebraElement::zero());
                }
                stack.pop();
            }
            _ => stack.push((i, starred)),
        }
    }
    let split = stack.iter().position(|&(_, s)| s).unwrap_or(stack.len());
    let mu = stack[..split].iter().map(|&(i, _)| i).collect();
    // s_{a1}^* ... s_{ak}^* = (s_{ak} ... s_{a1})^*
    let nu = stack[split..].iter().rev().map(|&(i, _)| i).collect();
    Ok(AlgebraElement::monomial(CuntzMonomial::new_unchecked(w.n, mu, nu)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: Index, mu: &[Index], nu: &[Index]) -> AlgebraElement {
        AlgebraElement::monomial(CuntzMonomial::new(n, mu.to_vec(), nu.to_vec()).unwrap())
    }

    #[test]
    fn cuntz_relations() {
        let w = RawWord::new(2, vec![(1, true), (1, false)]);
        assert_eq!(reduce_word(&w).unwrap().terms().collect::<Vec<_>>().len(), 1);
        assert!(reduce_word(&w).unwrap().structurally_eq(&m(2, &[], &[])));
        let w = RawWord::new(2, vec![(1, true), (2, false)]);
        assert!(reduce_word(&w).unwrap().is_structurally_zero());
    }

    #[test]
    fn single_interior_rewrite() {
        let w = RawWord::new(3, vec![(2, false), (1, true), (1, false), (3, true)]);
        assert!(reduce_word(&w).unwrap().structurally_eq(&m(3, &[2], &[3])));
    }

    #[test]
    fn starred_block_reverses() {
        let w = RawWord::new(3, vec![(1, false), (2, true), (3, true)]);
        assert!(reduce_word(&w).unwrap().structurally_eq(&m(3, &[1], &[3, 2])));
    }

    #[test]
    fn o1_words_are_the_unit() {
        let w = RawWord::new(1, vec![(1, true), (1, false), (1, false)]);
        assert!(reduce_word(&w).unwrap().structurally_eq(&m(1, &[], &[])));
        assert!(reduce_word(&RawWord::unit(4)).unwrap().structurally_eq(&m(4, &[], &[])));
    }

    #[test]
    fn malformed_letters() {
        assert_eq!(
            reduce_word(&RawWord::new(2, vec![(3, false)])),
            Err(Error::LetterOutOfRange { n: 2, index: 3 })
        );
        assert_eq!(reduce_word(&RawWord::unit(0)), Err(Error::ZeroComponent));
    }

    #[test]
    fn terminates_on_all_short_words() {
        // every word of length <= 12 over s_1, s_2, s_1^*, s_2^* in O_2
        let alphabet = [(1, false), (2, false), (1, true), (2, true)];
        let mut words: Vec<Vec<(Index, bool)>> = vec![vec![]];
        let mut checked = 0usize;
        for _ in 0..12 {
            let mut next = Vec::new();
            for w in &words {
                for &a in &alphabet {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            // sample every 97th word of the longer lengths to keep runtime down
            words = if next.len() > 100_000 { next.into_iter().step_by(97).collect() } else { next };
            for w in &words {
                let r = reduce_word(&RawWord::new(2, w.clone())).unwrap();
                for (mono, c) in r.terms() {
                    assert!(c.is_one());
                    assert!(mono.mu().len() + mono.nu().len() <= w.len());
                }
                checked += 1;
            }
        }
        assert!(checked > 100_000);
    }
}
