//! The condensed grid and integer pairing.
//!
//! Only nodes with `y <= x` and `x ≡ y (mod 2)` are reachable in the
//! standard lattice. Collapsing each ascending diagonal to a single column,
//! `xm = (x - y) / 2`, makes every node of the first quadrant reachable; an
//! `n`-path then stays inside the triangle `(0, 0), (0, n), (n, 0)`.
//!
//! Points of the condensed grid are folded into single integers with the
//! Cantor pairing function `(k1 + k2)(k1 + k2 + 1) / 2 + k2`.

use thiserror::Error;

use crate::{DyckWord, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("{0} is not reachable: x and y differ in parity")]
    ParityViolation(LatticePoint),
    #[error("{0} is not reachable: it lies above the main diagonal or below the axis")]
    OutsideTriangle(LatticePoint),
    #[error("condensed point ({xm}, {y}) does not fit the standard grid")]
    Overflow { xm: u64, y: u64 },
    #[error("cantor_pair({0}, {1}) overflows u64")]
    PairOverflow(u64, u64),
}

/// A node `(xm, y)` of the condensed grid.
///
/// Always maps back to a standard point with `x = 2 xm + y <= i64::MAX`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModifiedPoint {
    xm: u64,
    y: u64,
}

impl ModifiedPoint {
    pub fn new(xm: u64, y: u64) -> Result<Self, GridError> {
        xm.checked_mul(2)
            .and_then(|v| v.checked_add(y))
            .filter(|&x| x <= i64::MAX as u64)
            .map(|_| ModifiedPoint { xm, y })
            .ok_or(GridError::Overflow { xm, y })
    }

    pub fn xm(&self) -> u64 {
        self.xm
    }

    pub fn y(&self) -> u64 {
        self.y
    }
}

pub fn to_modified(p: LatticePoint) -> Result<ModifiedPoint, GridError> {
    if p.y < 0 || p.y > p.x {
        return Err(GridError::OutsideTriangle(p));
    }
    if !p.has_even_parity() {
        return Err(GridError::ParityViolation(p));
    }
    Ok(ModifiedPoint {
        xm: ((p.x - p.y) / 2) as u64,
        y: p.y as u64,
    })
}

pub fn from_modified(m: ModifiedPoint) -> LatticePoint {
    LatticePoint::new((2 * m.xm + m.y) as i64, m.y as i64)
}

fn condense(points: Vec<LatticePoint>) -> Vec<ModifiedPoint> {
    points
        .into_iter()
        .map(|p| to_modified(p).expect("points on a Dyck path are reachable"))
        .collect()
}

/// Peaks of `word` in condensed coordinates, in path order.
pub fn peaks_modified(word: &DyckWord) -> Vec<ModifiedPoint> {
    condense(word.peaks())
}

/// Valleys of `word` in condensed coordinates, in path order.
pub fn valleys_modified(word: &DyckWord, include_terminal: bool) -> Vec<ModifiedPoint> {
    condense(word.valleys(include_terminal))
}

pub fn cantor_pair(k1: u64, k2: u64) -> Result<u64, GridError> {
    let s = k1 as u128 + k2 as u128;
    s.checked_mul(s + 1)
        .map(|v| v / 2 + k2 as u128)
        .and_then(|z| u64::try_from(z).ok())
        .ok_or(GridError::PairOverflow(k1, k2))
}

/// Inverse of [`cantor_pair`]; total on `u64`.
pub fn cantor_unpair(z: u64) -> (u64, u64) {
    let z = z as u128;
    // largest w with w(w+1)/2 <= z
    let w = ((8 * z + 1).isqrt() - 1) / 2;
    let t = w * (w + 1) / 2;
    let k2 = z - t;
    let k1 = w - k2;
    (k1 as u64, k2 as u64)
}

/// Cantor codes of the condensed peaks of `word`, in path order.
pub fn encode_peak_set(word: &DyckWord) -> Result<Vec<u64>, GridError> {
    peaks_modified(word)
        .into_iter()
        .map(|m| cantor_pair(m.xm, m.y))
        .collect()
}
