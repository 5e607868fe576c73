//! Admissible oriented arcs in the infinite strip and in the annulus.
//!
//! The strip is the universal cover of the annulus with `n` marked points
//! on its outer boundary; the covering map reduces the x-coordinate mod
//! `n` and the deck transformation shifts it by `n`.

use std::fmt;

use crate::error::{Error, Result};

/// An admissible oriented arc `[start, end]` in the strip, running between
/// the marked points `(start, 0)` and `(end, 0)` with `end > start + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StripArc {
    start: i64,
    end: i64,
}

/// A power of the deck transformation; exponent `m` shifts x-coordinates
/// by `m * n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftPower(pub i64);

impl ShiftPower {
    /// Composition of deck transformations adds exponents.
    pub fn compose(self, other: ShiftPower) -> ShiftPower {
        ShiftPower(self.0 + other.0)
    }
}

impl StripArc {
    pub fn new(start: i64, end: i64) -> Result<StripArc> {
        if end > start + 1 {
            Ok(StripArc { start, end })
        } else {
            Err(Error::NotAdmissible { start, end })
        }
    }

    pub fn start(self) -> i64 {
        self.start
    }

    pub fn end(self) -> i64 {
        self.end
    }

    /// Combinatorial length `end - start`; always at least 2.
    pub fn length(self) -> i64 {
        self.end - self.start
    }

    /// Image under the deck transformation power `p` for the rank-`n`
    /// annulus: both endpoints move by `p.0 * n`.
    pub fn shift(self, p: ShiftPower, n: i64) -> StripArc {
        debug_assert!(n >= 1);
        StripArc {
            start: self.start + p.0 * n,
            end: self.end + p.0 * n,
        }
    }

    /// Projects to the annulus with `n` marked points.
    pub fn project(self, n: i64) -> Result<AnnulusArc> {
        AnnulusArc::new(n, self.start, self.length())
    }
}

impl fmt::Display for StripArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// An admissible oriented arc in the annulus with `n` marked points,
/// stored as the start of its canonical lift (`0 <= start < n`) together
/// with the combinatorial length shared by all lifts.
///
/// Structural equality coincides with equality of homotopy classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnnulusArc {
    n: i64,
    start: i64,
    len: i64,
}

impl AnnulusArc {
    /// Builds the arc with canonical-lift start `start mod n` and length
    /// `len`. The start may be any integer; it is reduced.
    pub fn new(n: i64, start: i64, len: i64) -> Result<AnnulusArc> {
        if n < 1 {
            return Err(Error::InvalidRank { n });
        }
        if len < 2 {
            return Err(Error::NotAdmissible {
                start,
                end: start + len,
            });
        }
        Ok(AnnulusArc {
            n,
            start: start.rem_euclid(n),
            len,
        })
    }

    /// Projection of a strip arc, written `pi_n([a,b])`.
    pub fn from_lift(n: i64, lift: StripArc) -> Result<AnnulusArc> {
        AnnulusArc::new(n, lift.start(), lift.length())
    }

    pub fn n(self) -> i64 {
        self.n
    }

    pub fn start(self) -> i64 {
        self.start
    }

    /// Combinatorial length shared by all lifts; at least 2, so there is
    /// no empty case.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> i64 {
        self.len
    }

    /// The unique lift starting in `[0, n)`.
    pub fn canonical_lift(self) -> StripArc {
        StripArc {
            start: self.start,
            end: self.start + self.len,
        }
    }

    /// How many times the arc wraps around the inner boundary.
    pub fn winding_number(self) -> i64 {
        self.len.div_euclid(self.n)
    }

    /// The translate of the arc under the map sending marked point `i` to
    /// `i - 1`; this is the arrow-theoretic translation on arc quivers.
    pub fn tau(self) -> AnnulusArc {
        AnnulusArc {
            n: self.n,
            start: (self.start - 1).rem_euclid(self.n),
            len: self.len,
        }
    }

    /// Inverse of [`AnnulusArc::tau`].
    pub fn tau_inv(self) -> AnnulusArc {
        AnnulusArc {
            n: self.n,
            start: (self.start + 1).rem_euclid(self.n),
            len: self.len,
        }
    }
}

impl fmt::Display for AnnulusArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi_{}[{},{}]", self.n, self.start, self.start + self.len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility() {
        assert!(StripArc::new(2, 24).is_ok());
        assert!(StripArc::new(0, 2).is_ok());
        assert_eq!(
            StripArc::new(0, 1),
            Err(Error::NotAdmissible { start: 0, end: 1 })
        );
        assert!(StripArc::new(3, 3).is_err());
        assert!(StripArc::new(5, 2).is_err());
    }

    #[test]
    fn shifts() {
        let arc = StripArc::new(2, 24).unwrap();
        assert_eq!(arc.shift(ShiftPower(1), 8), StripArc::new(10, 32).unwrap());
        assert_eq!(arc.shift(ShiftPower(0), 8), arc);
        let arc = StripArc::new(0, 5).unwrap();
        assert_eq!(arc.shift(ShiftPower(-1), 5), StripArc::new(-5, 0).unwrap());
    }

    #[test]
    fn projection() {
        let a = StripArc::new(10, 32).unwrap().project(8).unwrap();
        assert_eq!((a.n(), a.start(), a.len()), (8, 2, 22));
        let b = StripArc::new(2, 24).unwrap().project(8).unwrap();
        assert_eq!(a, b);
        let c = StripArc::new(-5, 0).unwrap().project(5).unwrap();
        assert_eq!((c.n(), c.start(), c.len()), (5, 0, 5));
    }

    #[test]
    fn canonical_lifts() {
        let arc = AnnulusArc::new(8, 2, 22).unwrap();
        assert_eq!(arc.canonical_lift(), StripArc::new(2, 24).unwrap());
        assert_eq!(
            AnnulusArc::new(5, 0, 2).unwrap().canonical_lift(),
            StripArc::new(0, 2).unwrap()
        );
        assert_eq!(
            AnnulusArc::new(4, 3, 14).unwrap().canonical_lift(),
            StripArc::new(3, 17).unwrap()
        );
    }

    #[test]
    fn winding_numbers() {
        assert_eq!(AnnulusArc::new(8, 2, 22).unwrap().winding_number(), 2);
        assert_eq!(AnnulusArc::new(5, 0, 2).unwrap().winding_number(), 0);
        assert_eq!(AnnulusArc::new(4, 0, 26).unwrap().winding_number(), 6);
    }

    #[test]
    fn translation() {
        let arc = AnnulusArc::new(5, 0, 5).unwrap();
        assert_eq!(arc.tau(), AnnulusArc::new(5, 4, 5).unwrap());
        let arc = AnnulusArc::new(5, 3, 4).unwrap();
        assert_eq!(arc.tau(), AnnulusArc::new(5, 2, 4).unwrap());
        // applying tau n times is the identity
        let mut x = AnnulusArc::new(5, 3, 4).unwrap();
        for _ in 0..5 {
            x = x.tau();
        }
        assert_eq!(x, AnnulusArc::new(5, 3, 4).unwrap());
        assert_eq!(arc.tau().tau_inv(), arc);
    }

    #[test]
    fn rank_one_is_supported() {
        let arc = AnnulusArc::new(1, 7, 3).unwrap();
        assert_eq!(arc.start(), 0);
        assert_eq!(arc.tau(), arc);
    }

    #[test]
    fn invalid_rank() {
        assert_eq!(AnnulusArc::new(0, 0, 2), Err(Error::InvalidRank { n: 0 }));
    }
}
