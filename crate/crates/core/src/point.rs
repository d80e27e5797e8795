use std::fmt;

/// A node `(x, y)` of the standard lattice: `x` counts steps taken, `y` is
/// the level reached.
///
/// Coordinates are signed so that arbitrary user input can be represented
/// and then rejected by validation. Points lying on a Dyck path always have
/// `0 <= y <= x` and `x ≡ y (mod 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// `x + y`: the ascending-diagonal intercept, shared by a peak and the
    /// foot of its descent.
    pub fn sum(self) -> i128 {
        self.x as i128 + self.y as i128
    }

    /// `x - y`: the descending-diagonal intercept, shared by a peak and the
    /// foot of its ascent.
    pub fn diff(self) -> i128 {
        self.x as i128 - self.y as i128
    }

    pub fn has_even_parity(self) -> bool {
        (self.x - self.y).rem_euclid(2) == 0
    }

    /// Whether some Dyck path can pass through this node.
    pub fn is_reachable(self) -> bool {
        self.y >= 0 && self.y <= self.x && self.has_even_parity()
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint { x, y }
    }
}

impl From<LatticePoint> for (i64, i64) {
    fn from(p: LatticePoint) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reachability() {
        assert!(LatticePoint::ORIGIN.is_reachable());
        assert!(LatticePoint::new(7, 1).is_reachable());
        assert!(!LatticePoint::new(2, 1).is_reachable());
        assert!(!LatticePoint::new(1, 3).is_reachable());
        assert!(!LatticePoint::new(-2, 0).is_reachable());
        assert!(!LatticePoint::new(3, -1).is_reachable());
    }

    #[test]
    fn intercepts_do_not_overflow() {
        let p = LatticePoint::new(i64::MAX, i64::MAX);
        assert_eq!(p.sum(), 2 * i64::MAX as i128);
        assert_eq!(
            LatticePoint::new(i64::MIN, i64::MAX).diff(),
            i64::MIN as i128 - i64::MAX as i128
        );
    }
}
