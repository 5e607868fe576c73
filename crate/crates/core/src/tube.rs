//! Indecomposable objects of tube categories and their Hom and Ext^1
//! dimensions.
//!
//! A rank-`n` tube is uniserial: the object `M[a,b]` has the composition
//! series `S_{a+1}, ..., S_{b-1}` (indices mod `n`) read from the socle
//! upwards, and `M[a,b] = M[a+n,b+n]`. The infinite-rank case uses the
//! same labels without reduction.

use std::fmt;

use crate::arcs::{AnnulusArc, StripArc};
use crate::error::{common_rank, Error, Rank, Result};
use crate::intersect::{neg_crossings, strip_neg_crossing, strip_pos_crossing};

/// The indecomposable `M[a,b]` of the rank-`n` tube, or `X[a,b]` over the
/// infinite line. Finite-rank labels are normalized to `0 <= a < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndecModule {
    rank: Rank,
    a: i64,
    b: i64,
}

/// Label of a simple object; reduced mod `n` at finite rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleLabel(pub i64);

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}", self.0)
    }
}

impl IndecModule {
    pub fn new(rank: Rank, a: i64, b: i64) -> Result<IndecModule> {
        if b <= a + 1 {
            return Err(Error::NotAdmissible { start: a, end: b });
        }
        match rank {
            Rank::Finite(n) if n < 1 => Err(Error::InvalidRank { n }),
            Rank::Finite(n) => {
                let shift = a - a.rem_euclid(n);
                Ok(IndecModule {
                    rank,
                    a: a - shift,
                    b: b - shift,
                })
            }
            Rank::Infinite => Ok(IndecModule { rank, a, b }),
        }
    }

    /// The simple object with socle and top `S_i` in the rank-`n` tube.
    pub fn simple(n: i64, i: i64) -> Result<IndecModule> {
        IndecModule::new(Rank::Finite(n), i - 1, i + 1)
    }

    pub fn rank(self) -> Rank {
        self.rank
    }

    pub fn a(self) -> i64 {
        self.a
    }

    pub fn b(self) -> i64 {
        self.b
    }

    /// Number of composition factors, `b - a - 1`.
    pub fn module_length(self) -> i64 {
        self.b - self.a - 1
    }

    /// Composition factors from the socle upwards.
    pub fn composition_series(self) -> Vec<SimpleLabel> {
        (self.a + 1..self.b)
            .map(|i| match self.rank {
                Rank::Finite(n) => SimpleLabel(i.rem_euclid(n)),
                Rank::Infinite => SimpleLabel(i),
            })
            .collect()
    }

    /// The translate `M[a-1, b-1]`, normalized at finite rank.
    pub fn tau(self) -> IndecModule {
        IndecModule::new(self.rank, self.a - 1, self.b - 1).expect("translate stays admissible")
    }

    /// Dimension vector over the vertices `0..n` (finite rank only).
    pub fn dimension_vector(self) -> Result<Vec<usize>> {
        let n = self.rank.finite().ok_or(Error::ExpectedFiniteRank)?;
        let mut dims = vec![0usize; n as usize];
        for i in self.a + 1..self.b {
            dims[i.rem_euclid(n) as usize] += 1;
        }
        Ok(dims)
    }

    fn strip_arc(self) -> StripArc {
        StripArc::new(self.a, self.b).expect("module labels are admissible")
    }
}

impl fmt::Display for IndecModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank {
            Rank::Finite(_) => write!(f, "M[{},{}]", self.a, self.b),
            Rank::Infinite => write!(f, "X[{},{}]", self.a, self.b),
        }
    }
}

/// The bijection from admissible arcs to indecomposables: label data is
/// carried over unchanged.
pub fn module_of_arc(arc: AnnulusArc) -> IndecModule {
    IndecModule {
        rank: Rank::Finite(arc.n()),
        a: arc.start(),
        b: arc.start() + arc.len(),
    }
}

/// Inverse of [`module_of_arc`]; fails at infinite rank.
pub fn arc_of_module(m: IndecModule) -> Result<AnnulusArc> {
    let n = m.rank.finite().ok_or(Error::ExpectedFiniteRank)?;
    AnnulusArc::new(n, m.a, m.b - m.a)
}

/// Counts integers `t` in the half-open range `(lo, hi]` congruent to `r`
/// mod `n`.
fn count_congruent(lo: i64, hi: i64, r: i64, n: i64) -> usize {
    if hi <= lo {
        return 0;
    }
    let count = (hi - r).div_euclid(n) - (lo - r).div_euclid(n);
    count.max(0) as usize
}

/// Dimension of the homomorphism space between two indecomposables.
///
/// A nonzero map sends a quotient of the source onto a submodule of the
/// target; submodules of the target are cut off at some `t` with
/// `x + 1 < t <= y`, the image's top forces `t = d` (mod `n` at finite
/// rank), and the image cannot be longer than the source, `t - x <= d - c`.
/// The dimension is the number of admissible `t`.
pub fn hom_dim(m1: IndecModule, m2: IndecModule) -> Result<usize> {
    let rank = common_rank(m1.rank, m2.rank)?;
    let (c, d) = (m1.a, m1.b);
    let (x, y) = (m2.a, m2.b);
    match rank {
        Rank::Finite(n) => {
            let hi = y.min(x + (d - c));
            Ok(count_congruent(x + 1, hi, d, n))
        }
        Rank::Infinite => {
            let ok = x + 1 < d && d <= y && c <= x;
            Ok(usize::from(ok))
        }
    }
}

/// Dimension of `Ext^1` between two finite-rank tube modules: the number
/// of negative crossings of the corresponding arcs.
pub fn ext_dim_tube(m1: IndecModule, m2: IndecModule) -> Result<usize> {
    common_rank(m1.rank, m2.rank)?;
    neg_crossings(arc_of_module(m1)?, arc_of_module(m2)?)
}

/// Dimension of `Ext^1` in the cluster tube: the symmetrized sum of the
/// two tube extension spaces, which equals the total crossing number of
/// the corresponding arcs.
pub fn ext_dim_cluster(m1: IndecModule, m2: IndecModule) -> Result<usize> {
    Ok(ext_dim_tube(m1, m2)? + ext_dim_tube(m2, m1)?)
}

/// Dimension of `Ext^1` between modules over the infinite line; with
/// `cluster` set, the symmetrized cluster-category dimension.
pub fn ext_dim_infinity(m1: IndecModule, m2: IndecModule, cluster: bool) -> Result<usize> {
    if m1.rank.is_finite() || m2.rank.is_finite() {
        return Err(Error::ExpectedInfiniteRank);
    }
    let a1 = m1.strip_arc();
    let a2 = m2.strip_arc();
    let neg = strip_neg_crossing(a1, a2);
    if cluster {
        Ok(neg + strip_pos_crossing(a1, a2))
    } else {
        Ok(neg)
    }
}
