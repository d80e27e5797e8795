//! Rebuilding a Dyck path from its peaks alone or its valleys alone.
//!
//! Every peak sits on two diagonals: the ascending one through the foot of
//! its ascent (`x - y` is constant along it) and the descending one through
//! the foot of its descent (`x + y` constant). A valley is therefore the
//! crossing of the descending diagonal of the peak on its left with the
//! ascending diagonal of the peak on its right:
//!
//! ```text
//! a = x_l + y_l,  b = x_r - y_r   =>   valley = ((a + b) / 2, (a - b) / 2)
//! ```
//!
//! and symmetrically a peak is the crossing of the ascending diagonal of the
//! valley on its left with the descending diagonal of the valley on its right:
//!
//! ```text
//! s = x_l - y_l,  t = x_r + y_r   =>   peak = ((s + t) / 2, (t - s) / 2)
//! ```
//!
//! Peak sets start at the first peak, which lies on the main diagonal.
//! Valley sets are in canonical form: the origin is implicit and the end
//! point `(2n, 0)` is always the last entry. The empty set stands for the
//! empty word in both cases.
//!
//! A whole set is validated before any step is produced, so a failure never
//! yields a partial word.

use std::fmt;

use thiserror::Error;

use crate::{DyckWord, LatticePoint, Step, MAX_STEPS};

/// Which kind of point set a [`ValidationReport`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Peaks,
    Valleys,
}

impl SetKind {
    fn noun(self) -> &'static str {
        match self {
            SetKind::Peaks => "peak",
            SetKind::Valleys => "valley",
        }
    }
}

/// One broken invariant of a peak or valley set.
///
/// Pair indices name the right-hand point of an adjacent pair: pair `i`
/// joins points `i - 1` and `i`. For valley sets pair `0` joins the implicit
/// origin and point `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A coordinate exceeds `2^62` in magnitude.
    OutOfRange { index: usize, point: LatticePoint },
    /// `x` and `y` have different parity; no path reaches the node.
    Parity { index: usize, point: LatticePoint },
    /// A peak at level 0 or below.
    PeakTooLow { index: usize, point: LatticePoint },
    /// A valley below the x-axis.
    NegativeLevel { index: usize, point: LatticePoint },
    /// The first peak must satisfy `x = y`.
    FirstPeakOffDiagonal { point: LatticePoint },
    /// The last valley must be the end point `(2n, 0)`.
    LastValleyOffAxis { index: usize, point: LatticePoint },
    /// Points are not strictly increasing in `x`.
    NotIncreasing { pair: usize },
    /// `a < b`: the valley between two peaks would lie below the x-axis.
    ValleyBelowAxis { pair: usize, a: i128, b: i128 },
    /// The derived valley is not strictly below the left peak.
    ValleyNotBelowLeft { pair: usize },
    /// The derived valley is not strictly below the right peak.
    ValleyNotBelowRight { pair: usize },
    /// The derived peak is not strictly above the left valley.
    PeakNotAboveLeft { pair: usize },
    /// The derived peak is not strictly above the right valley.
    PeakNotAboveRight { pair: usize },
    /// The path would have more than `2^62` steps.
    TooLong { steps: i128 },
}

impl Violation {
    /// Index of the point or pair at fault, if there is one.
    pub fn index(&self) -> Option<usize> {
        use Violation::*;
        match *self {
            OutOfRange { index, .. }
            | Parity { index, .. }
            | PeakTooLow { index, .. }
            | NegativeLevel { index, .. }
            | LastValleyOffAxis { index, .. } => Some(index),
            FirstPeakOffDiagonal { .. } => Some(0),
            NotIncreasing { pair }
            | ValleyBelowAxis { pair, .. }
            | ValleyNotBelowLeft { pair }
            | ValleyNotBelowRight { pair }
            | PeakNotAboveLeft { pair }
            | PeakNotAboveRight { pair } => Some(pair),
            TooLong { .. } => None,
        }
    }

    fn describe(&self, kind: SetKind, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        let noun = kind.noun();
        let pair = |f: &mut fmt::Formatter<'_>, pair: usize| {
            if pair == 0 {
                write!(f, "origin and {noun} 0")
            } else {
                write!(f, "{noun}s {} and {pair}", pair - 1)
            }
        };
        match *self {
            OutOfRange { index, point } => {
                write!(f, "{noun} {index} {point}: coordinate exceeds 2^62")
            }
            Parity { index, point } => write!(
                f,
                "{noun} {index} {point}: parity, {} and {} differ mod 2",
                point.x, point.y
            ),
            PeakTooLow { index, point } => {
                write!(f, "{noun} {index} {point}: level must be at least 1")
            }
            NegativeLevel { index, point } => {
                write!(f, "{noun} {index} {point}: level is negative")
            }
            FirstPeakOffDiagonal { point } => {
                write!(f, "{noun} 0 {point}: first peak must satisfy x = y")
            }
            LastValleyOffAxis { index, point } => {
                write!(f, "{noun} {index} {point}: last valley must have y = 0")
            }
            NotIncreasing { pair: p } => {
                pair(f, p)?;
                f.write_str(": x not strictly increasing")
            }
            ValleyBelowAxis { pair: p, a, b } => {
                pair(f, p)?;
                write!(f, ": a = {a} < b = {b}, valley below axis (need a >= b)")
            }
            ValleyNotBelowLeft { pair: p } => {
                pair(f, p)?;
                f.write_str(
                    ": valley not strictly below the left peak (need x_r - y_r > x_l - y_l)",
                )
            }
            ValleyNotBelowRight { pair: p } => {
                pair(f, p)?;
                f.write_str(
                    ": valley not strictly below the right peak (need x_r + y_r > x_l + y_l)",
                )
            }
            PeakNotAboveLeft { pair: p } => {
                pair(f, p)?;
                f.write_str(
                    ": peak not strictly above the left valley (need x_r + y_r > x_l + y_l)",
                )
            }
            PeakNotAboveRight { pair: p } => {
                pair(f, p)?;
                f.write_str(
                    ": peak not strictly above the right valley (need x_r - y_r > x_l - y_l)",
                )
            }
            TooLong { steps } => write!(f, "path would have {steps} steps, more than 2^62"),
        }
    }
}

/// Outcome of checking a candidate peak or valley set: empty when valid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    kind: SetKind,
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid {} set", self.kind.noun());
        }
        write!(f, "invalid {} set:", self.kind.noun())?;
        for v in &self.violations {
            f.write_str("\n  - ")?;
            v.describe(self.kind, f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("{}", AdjacencyDisplay(.0, .1))]
    InvalidAdjacency(SetKind, Vec<Violation>),
    #[error("{0}")]
    InvalidPeakSet(ValidationReport),
    #[error("{0}")]
    InvalidValleySet(ValidationReport),
    #[error("cannot allocate a word of {steps} steps")]
    Allocation { steps: u64 },
}

struct AdjacencyDisplay<'a>(&'a SetKind, &'a Vec<Violation>);

impl fmt::Display for AdjacencyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let report = ValidationReport {
            kind: *self.0,
            violations: self.1.clone(),
        };
        write!(f, "{report}")
    }
}

const LIMIT: i128 = MAX_STEPS as i128;

fn check_point(kind: SetKind, index: usize, p: LatticePoint, out: &mut Vec<Violation>) {
    if (p.x as i128).abs() > LIMIT || (p.y as i128).abs() > LIMIT {
        out.push(Violation::OutOfRange { index, point: p });
    }
    if !p.has_even_parity() {
        out.push(Violation::Parity { index, point: p });
    }
    match kind {
        SetKind::Peaks if p.y < 1 => out.push(Violation::PeakTooLow { index, point: p }),
        SetKind::Valleys if p.y < 0 => out.push(Violation::NegativeLevel { index, point: p }),
        _ => {}
    }
}

fn check_peak_pair(pair: usize, l: LatticePoint, r: LatticePoint, out: &mut Vec<Violation>) {
    let a = l.sum();
    let b = r.diff();
    if r.x <= l.x {
        out.push(Violation::NotIncreasing { pair });
    }
    if a < b {
        out.push(Violation::ValleyBelowAxis { pair, a, b });
    }
    if b <= l.diff() {
        out.push(Violation::ValleyNotBelowLeft { pair });
    }
    if a >= r.sum() {
        out.push(Violation::ValleyNotBelowRight { pair });
    }
}

fn check_valley_pair(pair: usize, l: LatticePoint, r: LatticePoint, out: &mut Vec<Violation>) {
    if r.x <= l.x {
        out.push(Violation::NotIncreasing { pair });
    }
    if r.sum() <= l.sum() {
        out.push(Violation::PeakNotAboveLeft { pair });
    }
    if l.diff() >= r.diff() {
        out.push(Violation::PeakNotAboveRight { pair });
    }
}

/// Checks every peak-set invariant and lists all failures.
pub fn validate_peak_set(points: &[LatticePoint]) -> ValidationReport {
    let mut violations = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        check_point(SetKind::Peaks, i, p, &mut violations);
    }
    if let Some(&first) = points.first() {
        if first.x != first.y {
            violations.push(Violation::FirstPeakOffDiagonal { point: first });
        }
    }
    for (i, pair) in points.windows(2).enumerate() {
        check_peak_pair(i + 1, pair[0], pair[1], &mut violations);
    }
    if let Some(&last) = points.last() {
        if last.sum() > LIMIT {
            violations.push(Violation::TooLong { steps: last.sum() });
        }
    }
    ValidationReport {
        kind: SetKind::Peaks,
        violations,
    }
}

/// Checks every canonical valley-set invariant and lists all failures.
pub fn validate_valley_set(points: &[LatticePoint]) -> ValidationReport {
    let mut violations = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        check_point(SetKind::Valleys, i, p, &mut violations);
    }
    if let Some(&last) = points.last() {
        if last.y != 0 {
            violations.push(Violation::LastValleyOffAxis {
                index: points.len() - 1,
                point: last,
            });
        }
        if last.x as i128 > LIMIT {
            violations.push(Violation::TooLong {
                steps: last.x as i128,
            });
        }
    }
    let mut left = LatticePoint::ORIGIN;
    for (i, &right) in points.iter().enumerate() {
        check_valley_pair(i, left, right, &mut violations);
        left = right;
    }
    ValidationReport {
        kind: SetKind::Valleys,
        violations,
    }
}

fn half_exact(v: i128) -> i64 {
    assert!(
        v % 2 == 0,
        "internal error: odd intercept sum {v} despite parity checks"
    );
    i64::try_from(v / 2).expect("internal error: coordinate left i64 despite range checks")
}

fn valley_unchecked(l: LatticePoint, r: LatticePoint) -> LatticePoint {
    let a = l.sum();
    let b = r.diff();
    LatticePoint::new(half_exact(a + b), half_exact(a - b))
}

fn peak_unchecked(l: LatticePoint, r: LatticePoint) -> LatticePoint {
    let s = l.diff();
    let t = r.sum();
    LatticePoint::new(half_exact(s + t), half_exact(t - s))
}

/// The valley between two adjacent peaks.
pub fn valley_between(
    left: LatticePoint,
    right: LatticePoint,
) -> Result<LatticePoint, ReconstructError> {
    let mut violations = Vec::new();
    check_point(SetKind::Peaks, 0, left, &mut violations);
    check_point(SetKind::Peaks, 1, right, &mut violations);
    check_peak_pair(1, left, right, &mut violations);
    if !violations.is_empty() {
        return Err(ReconstructError::InvalidAdjacency(
            SetKind::Peaks,
            violations,
        ));
    }
    Ok(valley_unchecked(left, right))
}

/// The peak between two adjacent valleys. Either valley may be the origin.
pub fn peak_between(
    left: LatticePoint,
    right: LatticePoint,
) -> Result<LatticePoint, ReconstructError> {
    let mut violations = Vec::new();
    check_point(SetKind::Valleys, 0, left, &mut violations);
    check_point(SetKind::Valleys, 1, right, &mut violations);
    check_valley_pair(1, left, right, &mut violations);
    if !violations.is_empty() {
        return Err(ReconstructError::InvalidAdjacency(
            SetKind::Valleys,
            violations,
        ));
    }
    Ok(peak_unchecked(left, right))
}

/// A validated peak set, in path order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PeakSet(Vec<LatticePoint>);

/// A validated canonical valley set: origin implicit, end point included.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ValleySet(Vec<LatticePoint>);

impl PeakSet {
    pub fn new(points: Vec<LatticePoint>) -> Result<Self, ReconstructError> {
        let report = validate_peak_set(&points);
        if !report.is_valid() {
            return Err(ReconstructError::InvalidPeakSet(report));
        }
        Ok(PeakSet(points))
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.0
    }

    pub fn into_points(self) -> Vec<LatticePoint> {
        self.0
    }

    /// Derived valleys followed by the end point `(x + y, 0)` of the last
    /// peak.
    pub fn valleys(&self) -> ValleySet {
        let mut out: Vec<LatticePoint> = self
            .0
            .windows(2)
            .map(|p| valley_unchecked(p[0], p[1]))
            .collect();
        if let Some(&last) = self.0.last() {
            out.push(LatticePoint::new(last.x + last.y, 0));
        }
        ValleySet(out)
    }

    /// The unique word whose peaks are exactly this set.
    pub fn to_word(&self) -> Result<DyckWord, ReconstructError> {
        let valleys = self.valleys();
        build_word(&self.0, &valleys.0)
    }
}

impl ValleySet {
    pub fn new(points: Vec<LatticePoint>) -> Result<Self, ReconstructError> {
        let report = validate_valley_set(&points);
        if !report.is_valid() {
            return Err(ReconstructError::InvalidValleySet(report));
        }
        Ok(ValleySet(points))
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.0
    }

    pub fn into_points(self) -> Vec<LatticePoint> {
        self.0
    }

    /// One peak per valley: the peak to the left of each.
    pub fn peaks(&self) -> PeakSet {
        let mut left = LatticePoint::ORIGIN;
        let peaks = self
            .0
            .iter()
            .map(|&right| {
                let p = peak_unchecked(left, right);
                left = right;
                p
            })
            .collect();
        PeakSet(peaks)
    }

    /// The unique word whose canonical valley set is exactly this set.
    pub fn to_word(&self) -> Result<DyckWord, ReconstructError> {
        self.peaks().to_word()
    }
}

/// Emits, for each peak, the ascent from the low point before it and the
/// descent to the low point after it. `lows` excludes the origin.
fn build_word(peaks: &[LatticePoint], lows: &[LatticePoint]) -> Result<DyckWord, ReconstructError> {
    debug_assert_eq!(peaks.len(), lows.len());
    let total = lows.last().map_or(0, |p| p.x as u64);
    let mut steps: Vec<Step> = Vec::new();
    usize::try_from(total)
        .ok()
        .and_then(|n| steps.try_reserve_exact(n).ok())
        .ok_or(ReconstructError::Allocation { steps: total })?;
    let mut level = 0;
    for (peak, low) in peaks.iter().zip(lows) {
        steps.extend(std::iter::repeat_n(Step::Up, (peak.y - level) as usize));
        steps.extend(std::iter::repeat_n(Step::Down, (peak.y - low.y) as usize));
        level = low.y;
    }
    debug_assert_eq!(steps.len() as u64, total);
    Ok(DyckWord::from_steps_unchecked(steps))
}

pub fn valleys_from_peaks(peaks: &[LatticePoint]) -> Result<ValleySet, ReconstructError> {
    Ok(PeakSet::new(peaks.to_vec())?.valleys())
}

pub fn peaks_from_valleys(valleys: &[LatticePoint]) -> Result<PeakSet, ReconstructError> {
    Ok(ValleySet::new(valleys.to_vec())?.peaks())
}

pub fn word_from_peaks(peaks: &[LatticePoint]) -> Result<DyckWord, ReconstructError> {
    PeakSet::new(peaks.to_vec())?.to_word()
}

pub fn word_from_valleys(valleys: &[LatticePoint]) -> Result<DyckWord, ReconstructError> {
    ValleySet::new(valleys.to_vec())?.to_word()
}
