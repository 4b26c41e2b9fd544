//! Deciding whether an integer sequence is the signed degree sequence of
//! some signed graph.
//!
//! Both deciders work on standard sequences: non-increasing, even sum,
//! positive leading entry, every `|d_i| < n` and `|d_1| >= |d_n|`. A
//! reduction removes `d_1`, lowers the next `d_1 + s` entries by one and
//! raises the last `s` entries by one. The branching decider tries every
//! admissible `s`; the deterministic one picks a single `m`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A sequence already in standard form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedSequence(Vec<i64>);

impl SignedSequence {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn leading(&self) -> usize {
        self.0[0] as usize
    }

    /// Largest admissible reduction parameter, `floor((n - 1 - d1) / 2)`.
    pub fn max_shift(&self) -> usize {
        (self.len() - 1 - self.leading()) / 2
    }
}

/// Which standard-form clause a sequence violates. Sign and ordering can
/// always be fixed by sorting and negating, so only these two remain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    OddSum,
    DegreeTooLarge { value: i64, n: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OddSum => write!(f, "sum of entries is odd"),
            Violation::DegreeTooLarge { value, n } => {
                write!(f, "|{value}| is not less than n = {n}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    Standard { seq: SignedSequence, negated: bool },
    AllZero,
    NotStandard(Violation),
}

/// Sorts non-increasing and negates when needed so that `d1 > 0` and
/// `|d1| >= |dn|`, then checks the remaining standard-form clauses.
pub fn normalize_standard(seq: &[i64]) -> Normalized {
    if seq.iter().all(|&d| d == 0) {
        return Normalized::AllZero;
    }
    let mut values = seq.to_vec();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let n = values.len();
    let negated = values[0] <= 0 || values[0] < -values[n - 1];
    if negated {
        values = values.iter().rev().map(|d| -d).collect();
    }
    if values.iter().sum::<i64>() % 2 != 0 {
        return Normalized::NotStandard(Violation::OddSum);
    }
    if let Some(&value) = values.iter().find(|d| d.unsigned_abs() as usize >= n) {
        return Normalized::NotStandard(Violation::DegreeTooLarge { value, n });
    }
    Normalized::Standard {
        seq: SignedSequence(values),
        negated,
    }
}

/// One reduction step with parameter `s`. The result has length `n - 1` and
/// is not necessarily sorted.
pub fn reduce_hakimi(seq: &SignedSequence, s: usize) -> Result<Vec<i64>> {
    if s > seq.max_shift() {
        return Err(Error::InvalidReduction(format!(
            "s = {s} exceeds floor((n - 1 - d1) / 2) = {}",
            seq.max_shift()
        )));
    }
    let values = seq.values();
    let n = values.len();
    let lowered = seq.leading() + s;
    let mut out = values[1..].to_vec();
    for d in &mut out[..lowered] {
        *d -= 1;
    }
    for d in &mut out[n - 1 - s..] {
        *d += 1;
    }
    Ok(out)
}

/// The reduction parameter used by the deterministic decider: the largest
/// admissible `m >= 1` with `d[d1 + m + 1] > d[n - m + 1]` (1-based), or 0.
pub fn choose_m(seq: &SignedSequence) -> usize {
    let d = seq.values();
    let n = d.len();
    let d1 = seq.leading();
    (1..=seq.max_shift())
        .rev()
        .find(|&m| d[d1 + m] > d[n - m])
        .unwrap_or(0)
}

/// Branching decider with a memo table keyed on normalized sequences.
#[derive(Debug, Default)]
pub struct BranchingDecider {
    memo: HashMap<Vec<i64>, bool>,
}

impl BranchingDecider {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn decide(&mut self, seq: &[i64]) -> bool {
        let seq = match normalize_standard(seq) {
            Normalized::AllZero => return true,
            Normalized::NotStandard(_) => return false,
            Normalized::Standard { seq, .. } => seq,
        };
        if let Some(&known) = self.memo.get(seq.values()) {
            return known;
        }
        let answer = (0..=seq.max_shift()).any(|s| {
            let reduced = reduce_hakimi(&seq, s).expect("s is admissible");
            self.decide(&reduced)
        });
        self.memo.insert(seq.0, answer);
        answer
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

/// Whether `seq` (in any order) is the signed degree sequence of some
/// signed graph, trying every reduction parameter.
pub fn is_s_graphical_branching(seq: &[i64]) -> bool {
    BranchingDecider::new().decide(seq)
}

/// Whether `seq` is s-graphical, using the single reduction chosen by
/// [`choose_m`] at each step.
pub fn is_s_graphical_deterministic(seq: &[i64]) -> bool {
    let mut current = seq.to_vec();
    loop {
        match normalize_standard(&current) {
            Normalized::AllZero => return true,
            Normalized::NotStandard(_) => return false,
            Normalized::Standard { seq, .. } => {
                current = reduce_hakimi(&seq, choose_m(&seq)).expect("m is admissible");
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn standard(xs: &[i64]) -> SignedSequence {
        match normalize_standard(xs) {
            Normalized::Standard { seq, .. } => seq,
            other => panic!("{xs:?} not standard: {other:?}"),
        }
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_standard(&[0, 0, 0]), Normalized::AllZero);
        assert_eq!(
            normalize_standard(&[1, 1]),
            Normalized::Standard {
                seq: SignedSequence(vec![1, 1]),
                negated: false
            }
        );
        assert_eq!(
            normalize_standard(&[2, -2]),
            Normalized::NotStandard(Violation::DegreeTooLarge { value: 2, n: 2 })
        );
        assert_eq!(
            normalize_standard(&[1, 1, 1]),
            Normalized::NotStandard(Violation::OddSum)
        );
        assert_eq!(
            normalize_standard(&[-1, -1, 0]),
            Normalized::Standard {
                seq: SignedSequence(vec![1, 1, 0]),
                negated: true
            }
        );
        // |d1| < |dn| forces negation even though d1 > 0
        assert_eq!(
            normalize_standard(&[1, 1, 0, -2]),
            Normalized::Standard {
                seq: SignedSequence(vec![2, 0, -1, -1]),
                negated: true
            }
        );
    }

    #[test]
    fn reductions() {
        assert_eq!(reduce_hakimi(&standard(&[1, 1]), 0).unwrap(), vec![0]);
        assert_eq!(reduce_hakimi(&standard(&[2, 1, 1]), 0).unwrap(), vec![0, 0]);
        // d2-1, d3-1, d4, d5+1
        assert_eq!(
            reduce_hakimi(&standard(&[1, 1, 0, -1, -1]), 1).unwrap(),
            vec![0, -1, -1, 0]
        );
        assert!(matches!(
            reduce_hakimi(&standard(&[1, 1]), 1),
            Err(Error::InvalidReduction(_))
        ));
    }

    #[test]
    fn choose_m_small() {
        assert_eq!(choose_m(&standard(&[1, 1])), 0);
        assert_eq!(choose_m(&standard(&[2, 1, 1])), 0);
        assert_eq!(choose_m(&standard(&[1, 1, 0, -1, -1])), 1);
        assert_eq!(choose_m(&standard(&[1, 1, 0, 0])), 0);
    }

    #[test]
    fn small_decisions() {
        for decide in [is_s_graphical_branching, is_s_graphical_deterministic] {
            assert!(decide(&[0]));
            assert!(decide(&[0, 0]));
            assert!(decide(&[1, 1]));
            assert!(decide(&[-1, -1]));
            assert!(!decide(&[1, -1]));
            assert!(!decide(&[1, 1, 1]));
            assert!(decide(&[2, 2, 2]));
            assert!(decide(&[]));
        }
    }

    #[test]
    fn memo_is_reused() {
        let mut d = BranchingDecider::new();
        assert!(d.decide(&[2, 2, 2, 2, 2]) == d.decide(&[2, 2, 2, 2, 2]));
        assert!(d.memo_len() > 0);
    }
}
