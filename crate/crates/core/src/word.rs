use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::factor::{self, PrimeFragment};
use crate::{LatticePoint, MAX_STEPS};

/// A single unit step of a lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `<1, 1>`, a rise.
    Up,
    /// `<1, -1>`, a fall.
    Down,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }
}

/// Two distinct characters standing for [`Step::Up`] and [`Step::Down`].
///
/// The default is `u`/`d`. Parentheses are available through
/// [`Alphabet::PARENS`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    up: char,
    down: char,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("alphabet symbols must be distinct, got {0:?} twice")]
    SameSymbol(char),
    #[error("alphabet must be exactly two characters (up then down), got {0:?}")]
    BadLength(String),
}

impl Alphabet {
    pub const UD: Alphabet = Alphabet { up: 'u', down: 'd' };
    pub const PARENS: Alphabet = Alphabet { up: '(', down: ')' };

    pub fn new(up: char, down: char) -> Result<Self, AlphabetError> {
        if up == down {
            return Err(AlphabetError::SameSymbol(up));
        }
        Ok(Alphabet { up, down })
    }

    pub fn up(&self) -> char {
        self.up
    }

    pub fn down(&self) -> char {
        self.down
    }

    pub fn step(&self, c: char) -> Option<Step> {
        if c == self.up {
            Some(Step::Up)
        } else if c == self.down {
            Some(Step::Down)
        } else {
            None
        }
    }

    pub fn symbol(&self, step: Step) -> char {
        match step {
            Step::Up => self.up,
            Step::Down => self.down,
        }
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::UD
    }
}

impl FromStr for Alphabet {
    type Err = AlphabetError;

    /// Parses a two-character string such as `"ud"` or `"()"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next(), chars.next()) {
            (Some(up), Some(down), None) => Alphabet::new(up, down),
            _ => Err(AlphabetError::BadLength(s.to_string())),
        }
    }
}

/// Why a string is not a Dyck word. Positions are character offsets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid symbol {symbol:?} at position {position}")]
    InvalidSymbol { position: usize, symbol: char },
    #[error("prefix drops below level 0 at position {position}")]
    PrefixUnderflow { position: usize },
    #[error("unbalanced word: final level is {final_level}, expected 0")]
    Unbalanced { final_level: i64 },
    #[error("word has {len} steps, more than the supported 2^62")]
    TooLong { len: u64 },
}

/// `is_prime` is undefined on the empty word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the empty word has no peak")]
pub struct EmptyWord;

/// A validated Dyck word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord {
    steps: Vec<Step>,
}

/// Parses `text` under `alphabet`, stopping at the earliest offending
/// position.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<DyckWord, ParseError> {
    let mut steps = Vec::with_capacity(text.len());
    let mut level: i64 = 0;
    for (position, c) in text.chars().enumerate() {
        let step = alphabet.step(c).ok_or(ParseError::InvalidSymbol {
            position,
            symbol: c,
        })?;
        level += step.delta();
        if level < 0 {
            return Err(ParseError::PrefixUnderflow { position });
        }
        steps.push(step);
    }
    if steps.len() as u64 > MAX_STEPS {
        return Err(ParseError::TooLong {
            len: steps.len() as u64,
        });
    }
    if level != 0 {
        return Err(ParseError::Unbalanced { final_level: level });
    }
    Ok(DyckWord { steps })
}

impl DyckWord {
    /// Parses with the default `u`/`d` alphabet.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_word(text, &Alphabet::UD)
    }

    pub fn empty() -> Self {
        DyckWord { steps: Vec::new() }
    }

    /// `Up^n Down^n`, the unique prime word of semilength `n`.
    pub fn pyramid(n: usize) -> Self {
        let mut steps = vec![Step::Up; n];
        steps.resize(2 * n, Step::Down);
        DyckWord { steps }
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self, ParseError> {
        let mut level: i64 = 0;
        for (position, step) in steps.iter().enumerate() {
            level += step.delta();
            if level < 0 {
                return Err(ParseError::PrefixUnderflow { position });
            }
        }
        if level != 0 {
            return Err(ParseError::Unbalanced { final_level: level });
        }
        Ok(DyckWord { steps })
    }

    /// Wraps steps already known to form a Dyck word.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckWord::from_steps(steps.clone()).is_ok());
        DyckWord { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Levels `y_0, ..., y_2n` visited by the path.
    pub fn level_profile(&self) -> Vec<i64> {
        let mut levels = Vec::with_capacity(self.steps.len() + 1);
        let mut y = 0;
        levels.push(y);
        for step in &self.steps {
            y += step.delta();
            levels.push(y);
        }
        levels
    }

    /// Inner points of every `ud` subword, in path order.
    pub fn peaks(&self) -> Vec<LatticePoint> {
        self.turning_points(Step::Up, Step::Down)
    }

    /// Inner points of every `du` subword, in path order. With
    /// `include_terminal` the end point `(2n, 0)` is appended for non-empty
    /// words. The origin is never reported.
    pub fn valleys(&self, include_terminal: bool) -> Vec<LatticePoint> {
        let mut out = self.turning_points(Step::Down, Step::Up);
        if include_terminal && !self.is_empty() {
            out.push(LatticePoint::new(self.steps.len() as i64, 0));
        }
        out
    }

    fn turning_points(&self, before: Step, after: Step) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        let mut y = 0;
        for (i, pair) in self.steps.windows(2).enumerate() {
            y += pair[0].delta();
            if pair[0] == before && pair[1] == after {
                out.push(LatticePoint::new(i as i64 + 1, y));
            }
        }
        out
    }

    pub fn factorize(&self) -> Vec<PrimeFragment> {
        factor::factorize(self)
    }

    /// True iff the word is `Up^n Down^n`, i.e. has exactly one peak.
    pub fn is_prime(&self) -> Result<bool, EmptyWord> {
        if self.is_empty() {
            return Err(EmptyWord);
        }
        let n = self.semilength();
        let (ascent, descent) = self.steps.split_at(n);
        Ok(ascent.iter().all(|&s| s == Step::Up) && descent.iter().all(|&s| s == Step::Down))
    }

    pub fn to_string_with(&self, alphabet: &Alphabet) -> String {
        self.steps.iter().map(|&s| alphabet.symbol(s)).collect()
    }
}

impl FromStr for DyckWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DyckWord::parse(s)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&Alphabet::UD))
    }
}
