//! Exhaustive enumeration of Dyck words and the Catalan numbers that count
//! them.

use num_bigint::BigUint;
use thiserror::Error;

use crate::{DyckWord, Step};

/// Largest semilength [`enumerate`] accepts. `catalan(16)` is 35,357,670.
pub const MAX_ENUMERATION_SEMILENGTH: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("semilength {n} exceeds the enumeration bound {MAX_ENUMERATION_SEMILENGTH}")]
pub struct BoundExceeded {
    pub n: usize,
}

/// Position in the lexicographic (Up < Down) walk over all `n`-words.
///
/// `steps` always holds a complete word; advancing rewrites the suffix
/// after the rightmost Up that can legally become a Down.
#[derive(Clone, Debug)]
pub struct EnumerationCursor {
    n: usize,
    steps: Vec<Step>,
    started: bool,
    done: bool,
}

impl EnumerationCursor {
    pub fn new(n: usize) -> Result<Self, BoundExceeded> {
        if n > MAX_ENUMERATION_SEMILENGTH {
            return Err(BoundExceeded { n });
        }
        // smallest word: as many Ups as possible up front
        Ok(EnumerationCursor {
            n,
            steps: DyckWord::pyramid(n).into_steps(),
            started: false,
            done: false,
        })
    }

    pub fn semilength(&self) -> usize {
        self.n
    }

    fn advance(&mut self) -> bool {
        let mut level: i64 = self.steps.iter().map(|s| s.delta()).sum();
        let mut ups = self.n;
        // walk back from the end; `level` is the level before step i
        for i in (0..self.steps.len()).rev() {
            level -= self.steps[i].delta();
            if self.steps[i] == Step::Up {
                ups -= 1;
                if level >= 1 {
                    self.steps[i] = Step::Down;
                    let remaining_ups = self.n - ups;
                    let tail = &mut self.steps[i + 1..];
                    let (up_part, down_part) = tail.split_at_mut(remaining_ups);
                    up_part.fill(Step::Up);
                    down_part.fill(Step::Down);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for EnumerationCursor {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(DyckWord::from_steps_unchecked(self.steps.clone()))
    }
}

/// Every Dyck word of semilength `n`, each once, in lexicographic order
/// with Up before Down.
pub fn enumerate(n: usize) -> Result<EnumerationCursor, BoundExceeded> {
    EnumerationCursor::new(n)
}

/// `C(n) = binom(2n, n) / (n + 1)`, exact.
pub fn catalan(n: u32) -> BigUint {
    let n = n as u64;
    // binom(2n, k + 1) = binom(2n, k) * (2n - k) / (k + 1); each quotient is exact
    let mut binom = BigUint::from(1u32);
    for k in 0..n {
        binom = binom * (2 * n - k) / (k + 1);
    }
    binom / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(n: usize) -> Vec<String> {
        enumerate(n).unwrap().map(|w| w.to_string()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(words(0), [""]);
        assert_eq!(words(1), ["ud"]);
        assert_eq!(words(2), ["uudd", "udud"]);
    }

    #[test]
    fn three() {
        let ws = words(3);
        assert_eq!(ws.len(), 5);
        assert_eq!(ws, ["uuuddd", "uududd", "uuddud", "uduudd", "ududud"]);
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(6), BigUint::from(132u32));
        assert_eq!(catalan(10), BigUint::from(16796u32));
        assert_eq!(catalan(16), BigUint::from(35_357_670u32));
        // C(100), well past u64
        assert_eq!(
            catalan(100).to_string(),
            "896519947090131496687170070074100632420837521538745909320"
        );
    }

    #[test]
    fn bound() {
        assert!(enumerate(MAX_ENUMERATION_SEMILENGTH).is_ok());
        assert_eq!(enumerate(17).unwrap_err(), BoundExceeded { n: 17 });
    }

    #[test]
    fn exhausted_cursor_stays_exhausted() {
        let mut c = enumerate(1).unwrap();
        assert!(c.next().is_some());
        assert!(c.next().is_none());
        assert!(c.next().is_none());
    }
}
