//! Factorization of a Dyck path into prime fragments.
//!
//! A prime fragment is a peak together with the whole ascent leading into
//! it and the whole descent leaving it: `Up^a Down^b` with `a, b >= 1`.
//! Cutting a path immediately after each interior valley splits it into one
//! fragment per peak, and gluing the fragments back together gives the path
//! again. Fragments need not be Dyck words themselves (`uuudd` is not).

use std::fmt;

use thiserror::Error;

use crate::{DyckWord, LatticePoint, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFragment {
    ascent_len: usize,
    descent_len: usize,
    peak: LatticePoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("fragment needs a non-empty ascent and descent, got u^{ascent_len} d^{descent_len}")]
    EmptyRun {
        ascent_len: usize,
        descent_len: usize,
    },
    #[error("fragment {index} takes the path below level 0")]
    NotAPath { index: usize },
    #[error("fragments end at level {final_level}, not 0")]
    Unterminated { final_level: i64 },
    #[error("fragment {index} claims peak {claimed}, but sits at {actual}")]
    PeakMismatch {
        index: usize,
        claimed: LatticePoint,
        actual: LatticePoint,
    },
}

impl PrimeFragment {
    /// `peak` is where the fragment's peak lies in the enclosing path.
    pub fn new(
        ascent_len: usize,
        descent_len: usize,
        peak: LatticePoint,
    ) -> Result<Self, FactorError> {
        if ascent_len == 0 || descent_len == 0 {
            return Err(FactorError::EmptyRun {
                ascent_len,
                descent_len,
            });
        }
        Ok(PrimeFragment {
            ascent_len,
            descent_len,
            peak,
        })
    }

    pub fn ascent_len(&self) -> usize {
        self.ascent_len
    }

    pub fn descent_len(&self) -> usize {
        self.descent_len
    }

    pub fn peak(&self) -> LatticePoint {
        self.peak
    }

    pub fn len(&self) -> usize {
        self.ascent_len + self.descent_len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> {
        std::iter::repeat_n(Step::Up, self.ascent_len)
            .chain(std::iter::repeat_n(Step::Down, self.descent_len))
    }
}

impl fmt::Display for PrimeFragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.ascent_len {
            f.write_str("u")?;
        }
        for _ in 0..self.descent_len {
            f.write_str("d")?;
        }
        Ok(())
    }
}

/// Splits `word` into its prime fragments, in path order.
pub fn factorize(word: &DyckWord) -> Vec<PrimeFragment> {
    let steps = word.steps();
    let mut out = Vec::new();
    let mut i = 0;
    let mut y: i64 = 0;
    while i < steps.len() {
        let start = i;
        while i < steps.len() && steps[i] == Step::Up {
            i += 1;
        }
        let ascent_len = i - start;
        y += ascent_len as i64;
        let peak = LatticePoint::new(i as i64, y);
        while i < steps.len() && steps[i] == Step::Down {
            i += 1;
        }
        let descent_len = i - start - ascent_len;
        y -= descent_len as i64;
        // a Dyck word starts with Up and ends with Down, so every run pair is
        // non-empty
        debug_assert!(ascent_len > 0 && descent_len > 0);
        out.push(PrimeFragment {
            ascent_len,
            descent_len,
            peak,
        });
    }
    out
}

/// Glues fragments back into a word. Each fragment's recorded peak must
/// match where it lands, so the result factorizes back to `fragments`.
pub fn concat_fragments(fragments: &[PrimeFragment]) -> Result<DyckWord, FactorError> {
    let mut x: i64 = 0;
    let mut y: i64 = 0;
    let mut steps = Vec::with_capacity(fragments.iter().map(PrimeFragment::len).sum());
    for (index, frag) in fragments.iter().enumerate() {
        x += frag.ascent_len as i64;
        y += frag.ascent_len as i64;
        let actual = LatticePoint::new(x, y);
        if actual != frag.peak {
            return Err(FactorError::PeakMismatch {
                index,
                claimed: frag.peak,
                actual,
            });
        }
        x += frag.descent_len as i64;
        y -= frag.descent_len as i64;
        if y < 0 {
            return Err(FactorError::NotAPath { index });
        }
        steps.extend(frag.steps());
    }
    if y != 0 {
        return Err(FactorError::Unterminated { final_level: y });
    }
    Ok(DyckWord::from_steps_unchecked(steps))
}
