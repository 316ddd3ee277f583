//! Gauge-graded level expansion and sibling collapse for linear combinations
//! of `R`-fold tensor products of Cuntz monomials.
//!
//! Within one component and one gauge degree, the monomials of a fixed
//! nu-length are linearly independent, and a monomial equals the sum of its
//! `n` children. Expanding a node only along branches that some deeper
//! monomial of the same class actually refines yields an antichain of the
//! refinement tree; distinct antichain nodes have disjoint full expansions, so
//! the result is zero iff every coefficient is zero. Expanding leg by leg,
//! grouping by the exact earlier legs, extends this to tensor products.

use std::collections::{BTreeMap, BTreeSet};

use super::monomial::{CuntzMonomial, Index};
use crate::scalar::Scalar;

pub(crate) type Terms<const R: usize> = BTreeMap<[CuntzMonomial; R], Scalar>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Part {
    Exact(CuntzMonomial),
    Class(Index, i64),
}

fn class(m: &CuntzMonomial) -> Part {
    Part::Class(m.n(), m.degree())
}

pub(crate) fn add_term<const R: usize>(terms: &mut Terms<R>, key: [CuntzMonomial; R], c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

/// Splits `terms` into groups sharing the same key outside leg `r`.
/// Legs listed in `exact` are matched exactly, the others by (component, degree).
fn groups<const R: usize>(
    terms: Terms<R>,
    r: usize,
    exact: impl Fn(usize) -> bool,
) -> Vec<Terms<R>> {
    let mut out: BTreeMap<Vec<Part>, Terms<R>> = BTreeMap::new();
    for (key, c) in terms {
        let gk: Vec<Part> = key
            .iter()
            .enumerate()
            .map(|(i, m)| if i != r && exact(i) { Part::Exact(m.clone()) } else { class(m) })
            .collect();
        out.entry(gk).or_default().insert(key, c);
    }
    out.into_values().collect()
}

fn with_leg<const R: usize>(key: &[CuntzMonomial; R], r: usize, m: CuntzMonomial) -> [CuntzMonomial; R] {
    let mut k = key.clone();
    k[r] = m;
    k
}

fn expand_leg_in_group<const R: usize>(mut group: Terms<R>, r: usize, out: &mut Terms<R>) {
    let originals: BTreeSet<CuntzMonomial> = group.keys().map(|k| k[r].clone()).collect();
    let (lo, hi) = match (
        originals.iter().map(|m| m.level()).min(),
        originals.iter().map(|m| m.level()).max(),
    ) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return,
    };
    for level in lo..hi {
        let at_level: Vec<[CuntzMonomial; R]> =
            group.keys().filter(|k| k[r].level() == level).cloned().collect();
        for key in at_level {
            let node = &key[r];
            if !originals.iter().any(|d| d.strictly_refines(node)) {
                continue;
            }
            let c = group.remove(&key).expect("key taken from map");
            for child in node.children() {
                add_term(&mut group, with_leg(&key, r, child), &c);
            }
        }
    }
    for (k, c) in group {
        add_term(out, k, &c);
    }
}

/// Pruned level expansion of every leg. The keys of the result form an
/// antichain in each leg's refinement tree, so the result is a coordinate
/// vector in a linearly independent family.
pub(crate) fn expand<const R: usize>(terms: &Terms<R>) -> Terms<R> {
    let mut cur: Terms<R> = terms.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.clone())).collect();
    for r in 0..R {
        let mut next = Terms::new();
        for group in groups(cur, r, |i| i < r) {
            expand_leg_in_group(group, r, &mut next);
        }
        cur = next;
    }
    cur
}

pub(crate) fn is_zero<const R: usize>(terms: &Terms<R>) -> bool {
    expand(terms).is_empty()
}

fn collapse_leg_in_group<const R: usize>(mut group: Terms<R>, r: usize, out: &mut Terms<R>) {
    let hi = group.keys().map(|k| k[r].level()).max().unwrap_or(0);
    for level in (1..=hi).rev() {
        let mut families: BTreeMap<[CuntzMonomial; R], Vec<[CuntzMonomial; R]>> = BTreeMap::new();
        for key in group.keys().filter(|k| k[r].level() == level) {
            if let Some(parent) = key[r].parent() {
                families.entry(with_leg(key, r, parent)).or_default().push(key.clone());
            }
        }
        for (parent, children) in families {
            let n = parent[r].n() as usize;
            if n < 2 || children.len() != n {
                continue;
            }
            let c = group[&children[0]].clone();
            if children.iter().all(|k| group[k] == c) {
                for k in &children {
                    group.remove(k);
                }
                add_term(&mut group, parent, &c);
            }
        }
    }
    for (k, c) in group {
        add_term(out, k, &c);
    }
}

fn collapse_leg<const R: usize>(terms: Terms<R>, r: usize) -> Terms<R> {
    let mut out = Terms::new();
    for group in groups(terms, r, |_| true) {
        collapse_leg_in_group(group, r, &mut out);
    }
    out
}

/// Expand, then collapse complete sibling families with equal coefficients,
/// deepest level first, last leg first, until nothing changes.
pub(crate) fn canonical<const R: usize>(terms: &Terms<R>) -> Terms<R> {
    let mut cur = expand(terms);
    loop {
        let mut next = cur.clone();
        for r in (0..R).rev() {
            next = collapse_leg(next, r);
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}
