//! Realizability of sequence pairs as the signed degree sequences of a
//! signed bipartite graph, and the unsigned Gale-Ryser test.
//!
//! Sequences are treated as multisets: every entry point sorts its input
//! non-increasing first.

use std::collections::HashMap;

use crate::error::{Error, Result};

fn sorted_desc(xs: &[i64]) -> Vec<i64> {
    let mut v = xs.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn negated(xs: &[i64]) -> Vec<i64> {
    xs.iter().rev().map(|x| -x).collect()
}

/// Standard-form clauses with `alpha` as the leading side. Both inputs
/// must be sorted non-increasing.
fn alpha_side_holds(alpha: &[i64], beta: &[i64]) -> bool {
    let (p, q) = (alpha.len() as u64, beta.len() as u64);
    let Some((&first, &last)) = alpha.first().zip(alpha.last()) else {
        return false;
    };
    first > 0
        && first >= last.abs()
        && alpha.iter().sum::<i64>() == beta.iter().sum::<i64>()
        && alpha.iter().all(|d| d.unsigned_abs() <= q)
        && beta.iter().all(|e| e.unsigned_abs() <= p)
        && beta
            .iter()
            .all(|e| e.unsigned_abs() <= first.unsigned_abs())
}

/// A pair in standard form together with the transforms that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardPair {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    /// Both sequences were negated.
    pub negated: bool,
    /// The roles of alpha and beta were exchanged.
    pub swapped: bool,
}

/// Brings `(alpha, beta)` into standard form by trying, in order: as given,
/// both negated, roles swapped, roles swapped and negated.
pub fn canonicalize(alpha: &[i64], beta: &[i64]) -> Option<StandardPair> {
    let a = sorted_desc(alpha);
    let b = sorted_desc(beta);
    for swapped in [false, true] {
        let (x, y) = if swapped { (&b, &a) } else { (&a, &b) };
        for negate in [false, true] {
            let (x, y) = if negate {
                (negated(x), negated(y))
            } else {
                (x.clone(), y.clone())
            };
            if alpha_side_holds(&x, &y) {
                return Some(StandardPair {
                    alpha: x,
                    beta: y,
                    negated: negate,
                    swapped,
                });
            }
        }
    }
    None
}

pub fn is_standard_pair(alpha: &[i64], beta: &[i64]) -> bool {
    canonicalize(alpha, beta).is_some()
}

/// Deletes the leading entry of `alpha`, lowers the `r` greatest entries of
/// `beta` by one and raises its `s` least entries by one. Inputs are sorted
/// first; `beta'` is returned in the sorted positions of `beta`.
pub fn reduce_pair(
    alpha: &[i64],
    beta: &[i64],
    r: usize,
    s: usize,
) -> Result<(Vec<i64>, Vec<i64>)> {
    let alpha = sorted_desc(alpha);
    let mut beta = sorted_desc(beta);
    let Some(&d1) = alpha.first() else {
        return Err(Error::InvalidReduction("alpha is empty".into()));
    };
    let q = beta.len() as i64;
    let (r_i, s_i) = (r as i64, s as i64);
    if r_i - s_i != d1 {
        return Err(Error::InvalidReduction(format!(
            "r - s = {} but d1 = {d1}",
            r_i - s_i
        )));
    }
    if q < d1 || 2 * s_i > q - d1 {
        return Err(Error::InvalidReduction(format!(
            "s = {s} exceeds (q - d1) / 2 with q = {q}, d1 = {d1}"
        )));
    }
    if r + s > beta.len() {
        return Err(Error::InvalidReduction(format!(
            "r + s = {} exceeds q = {q}",
            r + s
        )));
    }
    let len = beta.len();
    for e in &mut beta[..r] {
        *e -= 1;
    }
    for e in &mut beta[len - s..] {
        *e += 1;
    }
    Ok((alpha[1..].to_vec(), beta))
}

/// Recursive decider with memoization on standard forms.
#[derive(Debug, Default)]
pub struct PairDecider {
    memo: HashMap<(Vec<i64>, Vec<i64>), bool>,
}

impl PairDecider {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn decide(&mut self, alpha: &[i64], beta: &[i64]) -> bool {
        if alpha.iter().chain(beta).all(|&x| x == 0) {
            return true;
        }
        let Some(pair) = canonicalize(alpha, beta) else {
            return false;
        };
        let key = (pair.alpha, pair.beta);
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let (a, b) = &key;
        let d1 = a[0] as usize;
        let q = b.len();
        let answer = (0..=(q - d1) / 2).any(|s| {
            let (a2, b2) = reduce_pair(a, b, d1 + s, s).expect("parameters are admissible");
            self.decide(&a2, &b2)
        });
        self.memo.insert(key, answer);
        answer
    }
}

/// Whether `alpha` and `beta` are the signed degree sequences of the two
/// parts of some signed bipartite graph.
pub fn is_bipartite_s_graphical(alpha: &[i64], beta: &[i64]) -> bool {
    PairDecider::new().decide(alpha, beta)
}

/// Gale-Ryser test for unsigned bipartite degree sequences.
pub fn gale_ryser(d: &[i64], e: &[i64]) -> Result<bool> {
    if let Some(&x) = d.iter().chain(e).find(|&&x| x < 0) {
        return Err(Error::NegativeEntry(x));
    }
    let d = sorted_desc(d);
    if d.iter().sum::<i64>() != e.iter().sum::<i64>() {
        return Ok(false);
    }
    let mut prefix = 0;
    for (k, &dk) in d.iter().enumerate() {
        prefix += dk;
        let k = k as i64 + 1;
        let bound: i64 = e.iter().map(|&ej| ej.min(k)).sum();
        if prefix > bound {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_pairs() {
        assert!(is_standard_pair(&[1], &[1]));
        assert!(is_standard_pair(&[1, -1], &[0]));
        assert!(!is_standard_pair(&[3], &[1]));
        assert!(!is_standard_pair(&[0, 0], &[0]));
        // beta carries the largest magnitude, so roles swap
        let pair = canonicalize(&[1, 1], &[2]).unwrap();
        assert!(pair.swapped && !pair.negated);
        assert_eq!((pair.alpha, pair.beta), (vec![2], vec![1, 1]));
        let pair = canonicalize(&[-1, -1], &[-2]).unwrap();
        assert!(pair.swapped && pair.negated);
    }

    #[test]
    fn reductions() {
        assert_eq!(reduce_pair(&[1], &[1], 1, 0).unwrap(), (vec![], vec![0]));
        assert_eq!(
            reduce_pair(&[2, 0], &[1, 1], 2, 0).unwrap(),
            (vec![0], vec![0, 0])
        );
        assert_eq!(
            reduce_pair(&[1, 0], &[1, 0, -1], 2, 1).unwrap(),
            (vec![0], vec![0, -1, 0])
        );
        assert!(reduce_pair(&[1], &[1], 2, 0).is_err());
        assert!(reduce_pair(&[1], &[1, 0], 2, 1).is_err());
        assert!(reduce_pair(&[], &[1], 0, 0).is_err());
    }

    #[test]
    fn decisions() {
        assert!(is_bipartite_s_graphical(&[0, 0], &[0]));
        assert!(is_bipartite_s_graphical(&[1, -1], &[0]));
        assert!(is_bipartite_s_graphical(&[1], &[1]));
        assert!(!is_bipartite_s_graphical(&[2], &[1]));
        assert!(!is_bipartite_s_graphical(&[1], &[0]));
        assert!(is_bipartite_s_graphical(&[], &[]));
        assert!(!is_bipartite_s_graphical(&[], &[1]));
    }

    #[test]
    fn gale_ryser_small() {
        assert_eq!(gale_ryser(&[2, 1], &[2, 1]), Ok(true));
        assert_eq!(gale_ryser(&[0], &[0]), Ok(true));
        assert_eq!(gale_ryser(&[2], &[1, 1]), Ok(true));
        assert_eq!(gale_ryser(&[2], &[2]), Ok(false));
        assert_eq!(gale_ryser(&[1], &[2]), Ok(false));
        assert_eq!(gale_ryser(&[1], &[-1]), Err(Error::NegativeEntry(-1)));
    }
}
