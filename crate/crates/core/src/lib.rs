//! Dyck words and Dyck paths.
//!
//! A Dyck word of semilength `n` is a sequence of `n` up steps and `n` down
//! steps in which no prefix contains more downs than ups. Drawn on the
//! lattice it is a path from `(0, 0)` to `(2n, 0)` that never dips below the
//! x-axis.
//!
//! The crate covers:
//!
//! - parsing and validating words ([`DyckWord::parse`], [`parse_word`]),
//! - peaks, valleys and the level profile of a path,
//! - factorization into prime (single-peak) fragments ([`factor`]),
//! - rebuilding a path from its peaks alone or its valleys alone
//!   ([`reconstruct`]),
//! - the condensed grid `x' = (x - y) / 2` and Cantor pairing ([`grid`]),
//! - exhaustive enumeration and Catalan numbers ([`enumerate`]).
//!
//! ```
//! use dyck::{DyckWord, LatticePoint};
//!
//! let w = DyckWord::parse("uduuudduuddd").unwrap();
//! assert_eq!(w.semilength(), 6);
//! assert_eq!(
//!     w.peaks(),
//!     vec![LatticePoint::new(1, 1), LatticePoint::new(5, 3), LatticePoint::new(9, 3)]
//! );
//! let rebuilt = dyck::reconstruct::word_from_peaks(&w.peaks()).unwrap();
//! assert_eq!(rebuilt, w);
//! ```

pub mod enumerate;
pub mod factor;
pub mod grid;
mod point;
pub mod reconstruct;
mod word;

pub use factor::{concat_fragments, FactorError, PrimeFragment};
pub use point::LatticePoint;
pub use word::{parse_word, Alphabet, AlphabetError, DyckWord, EmptyWord, ParseError, Step};

/// Largest number of steps a word may have (`2n <= 2^62`).
pub const MAX_STEPS: u64 = 1 << 62;
