//! Minimal signed crossing numbers of admissible arcs in the annulus.
//!
//! Three routes are provided and cross-validated: a closed form counting
//! deck-translate endpoints between the feet of a lift, a geometric count
//! of transversal crossings of piecewise-linear representatives in the
//! cover, and single-crossing predicates for arcs in the strip itself.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::arcs::{AnnulusArc, StripArc};
use crate::error::{Error, Result};
use crate::geom::{proper_crossing, rat, ratio, PlArc, Point, Rat};

/// Positive count, negative count and total of a crossing computation,
/// with optional exact crossing coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingReport {
    pub pos: usize,
    pub neg: usize,
    pub total: usize,
    pub points: Option<Vec<CrossingPoint>>,
}

impl CrossingReport {
    fn bare(pos: usize, neg: usize) -> CrossingReport {
        CrossingReport {
            pos,
            neg,
            total: pos + neg,
            points: None,
        }
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        (self.pos, self.neg, self.total)
    }
}

/// One transversal crossing in the cover: exact coordinates, sign relative
/// to the argument order of the computation, and the index of the
/// deck translate of the longer arc's representative involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingPoint {
    pub x: Rat,
    pub y: Rat,
    pub sign: i8,
    pub shift_m: i64,
}

/// The two arcs of the preimage of an arc under the double cover of the
/// annulus by the annulus with twice as many marked points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubledArcPair {
    pub first: AnnulusArc,
    pub second: AnnulusArc,
}

fn check_same_rank(alpha: AnnulusArc, beta: AnnulusArc) -> Result<i64> {
    if alpha.n() == beta.n() {
        Ok(alpha.n())
    } else {
        Err(Error::RankMismatch {
            left: crate::Rank::Finite(alpha.n()),
            right: crate::Rank::Finite(beta.n()),
        })
    }
}

/// Number of multiples of `n` strictly between `lo` and `hi`.
fn multiples_strictly_between(lo: i64, hi: i64, n: i64) -> usize {
    if hi <= lo {
        return 0;
    }
    let count = (hi - 1).div_euclid(n) - (lo + n).div_euclid(n) + 1;
    count.max(0) as usize
}

/// Minimal number of positive crossings of `alpha` and `beta`.
///
/// With lifts `[a,b]` of `alpha` and `[c,d]` of `beta` and `beta` at least
/// as long, this is the number of deck translates of `c` strictly between
/// `a` and `b`. The shorter-first case is defined by the swap rule: a
/// positive crossing of `(alpha, beta)` is a negative crossing of
/// `(beta, alpha)`.
pub fn pos_crossings(alpha: AnnulusArc, beta: AnnulusArc) -> Result<usize> {
    let n = check_same_rank(alpha, beta)?;
    if beta.len() >= alpha.len() {
        let (a, b) = (alpha.start(), alpha.start() + alpha.len());
        let c = beta.start();
        Ok(multiples_strictly_between(a - c, b - c, n))
    } else {
        neg_crossings(beta, alpha)
    }
}

/// Minimal number of negative crossings of `alpha` and `beta`; the
/// counterpart of [`pos_crossings`] with the end point of the longer lift
/// in place of its start point.
pub fn neg_crossings(alpha: AnnulusArc, beta: AnnulusArc) -> Result<usize> {
    let n = check_same_rank(alpha, beta)?;
    if beta.len() >= alpha.len() {
        let (a, b) = (alpha.start(), alpha.start() + alpha.len());
        let d = beta.start() + beta.len();
        Ok(multiples_strictly_between(a - d, b - d, n))
    } else {
        pos_crossings(beta, alpha)
    }
}

/// Positive, negative and total crossing numbers by the closed form.
pub fn crossing_numbers(alpha: AnnulusArc, beta: AnnulusArc) -> Result<CrossingReport> {
    Ok(CrossingReport::bare(
        pos_crossings(alpha, beta)?,
        neg_crossings(alpha, beta)?,
    ))
}

/// Two-segment realization of a strip arc: up from the start to the
/// midpoint raised to height `h`, then down to the end.
pub fn tent(lift: StripArc, h: &Rat) -> PlArc {
    let apex_x = ratio(lift.start() + lift.end(), 2);
    PlArc::new(vec![
        Point::from_ints(lift.start(), 0),
        Point::new(apex_x, h.clone()),
        Point::from_ints(lift.end(), 0),
    ])
}

fn line_intersection(p: &Point, p2: &Point, q: &Point, q2: &Point) -> Point {
    let rx = &p2.x - &p.x;
    let ry = &p2.y - &p.y;
    let sx = &q2.x - &q.x;
    let sy = &q2.y - &q.y;
    let denom = &rx * &sy - &ry * &sx;
    assert!(!denom.is_zero(), "parallel guide segments");
    let wx = &q.x - &p.x;
    let wy = &q.y - &p.y;
    let t = (&wx * &sy - &wy * &sx) / denom;
    Point {
        x: &p.x + &rx * &t,
        y: &p.y + &ry * &t,
    }
}

/// Piecewise-linear representatives of two arcs in minimal position in the
/// cover. `beta` must be at least as long as `alpha`.
///
/// The longer arc becomes a tent of height `h`; the shorter one is
/// realized over a lift translated to start within one period of the
/// tent's start, with its apex at the intersection of the two guide
/// segments aimed at the midpoints between consecutive tent tops.
pub fn pl_realization(alpha: AnnulusArc, beta: AnnulusArc, h: &Rat) -> (PlArc, PlArc) {
    assert_eq!(alpha.n(), beta.n(), "arcs must share the rank");
    assert!(beta.len() >= alpha.len(), "beta must be the longer arc");
    assert!(
        h.is_positive() && *h < rat(1),
        "height must lie strictly inside the strip"
    );
    let n = alpha.n();
    let (c, d) = {
        let lift = beta.canonical_lift();
        (lift.start(), lift.end())
    };
    let delta = tent(beta.canonical_lift(), h);

    // Translate alpha's lift so its start lies in [c, c + n).
    let a = c + (alpha.start() - c).rem_euclid(n);
    let b = a + alpha.len();

    // Guide from the start towards the midpoint between the tops of the
    // tent and its next translate.
    let top1 = Point::new(ratio(c + d + n, 2), h.clone());
    let from_start = Point::from_ints(a, 0);
    // Guide from the end towards the midpoint between the tops of the last
    // translate ending before b and its successor.
    let k = (b - d - 1).div_euclid(n);
    let y_end = d + k * n;
    let top2 = Point::new(rat(y_end) + ratio(c - d + n, 2), h.clone());
    let from_end = Point::from_ints(b, 0);

    let apex = line_intersection(&from_start, &top1, &from_end, &top2);
    assert!(apex.y.is_positive() && apex.y <= *h);
    let gamma = PlArc::new(vec![from_start, apex, from_end]);
    (gamma, delta)
}

/// Everything the geometric route produces for one pair of arcs: the two
/// representatives, which input the first one realizes, the translate
/// indices examined, and the signed crossings in input order.
#[derive(Debug, Clone)]
pub struct CoverScene {
    pub gamma: PlArc,
    pub delta: PlArc,
    pub gamma_is_alpha: bool,
    pub shifts: Vec<i64>,
    pub report: CrossingReport,
}

/// Counts transversal crossings of the representative of the shorter arc
/// against all relevantly placed deck translates of the longer one.
///
/// The sign of a crossing follows the orientation of the ordered tangent
/// pair; reported counts are attributed to the `(alpha, beta)` argument
/// order, so they agree with [`crossing_numbers`] on every pair.
pub fn cover_scene(alpha: AnnulusArc, beta: AnnulusArc) -> Result<CoverScene> {
    let n = check_same_rank(alpha, beta)?;
    let swapped = (beta.len(), beta.start()) < (alpha.len(), alpha.start());
    let (first, second) = if swapped {
        (beta, alpha)
    } else {
        (alpha, beta)
    };
    let h = ratio(1, 2);
    let (gamma, delta) = pl_realization(first, second, &h);

    let gamma_min = gamma.min_x().clone();
    let gamma_max = gamma.max_x().clone();
    let n_rat = rat(n);
    let m_lo = ((&gamma_min - delta.max_x()) / &n_rat)
        .floor()
        .to_integer()
        .to_i64()
        .expect("translate range fits in i64");
    let m_hi = ((&gamma_max - delta.min_x()) / &n_rat)
        .ceil()
        .to_integer()
        .to_i64()
        .expect("translate range fits in i64");

    let mut points = Vec::new();
    let mut shifts = Vec::new();
    for m in m_lo..=m_hi {
        let translate = delta.translated(m * n);
        if *translate.min_x() >= gamma_max || *translate.max_x() <= gamma_min {
            continue;
        }
        shifts.push(m);
        for (g1, g2) in gamma.segments() {
            for (d1, d2) in translate.segments() {
                if let Some((point, sign)) = proper_crossing(g1, g2, d1, d2) {
                    let sign = if swapped { -sign } else { sign };
                    points.push(CrossingPoint {
                        x: point.x,
                        y: point.y,
                        sign,
                        shift_m: m,
                    });
                }
            }
        }
    }
    points.sort_by(|p, q| (p.shift_m, &p.x, &p.y, p.sign).cmp(&(q.shift_m, &q.x, &q.y, q.sign)));
    let pos = points.iter().filter(|p| p.sign > 0).count();
    let neg = points.len() - pos;
    let report = CrossingReport {
        pos,
        neg,
        total: pos + neg,
        points: Some(points),
    };
    Ok(CoverScene {
        gamma,
        delta,
        gamma_is_alpha: !swapped,
        shifts,
        report,
    })
}

/// Crossing numbers via the geometric route, optionally keeping the exact
/// crossing coordinates.
pub fn cover_crossings(
    alpha: AnnulusArc,
    beta: AnnulusArc,
    with_points: bool,
) -> Result<CrossingReport> {
    let mut report = cover_scene(alpha, beta)?.report;
    if !with_points {
        report.points = None;
    }
    Ok(report)
}

/// Positive crossing count of two arcs in the strip; zero or one.
pub fn strip_pos_crossing(alpha: StripArc, beta: StripArc) -> usize {
    if beta.length() >= alpha.length() {
        usize::from(alpha.start() < beta.start() && beta.start() < alpha.end())
    } else {
        strip_neg_crossing(beta, alpha)
    }
}

/// Negative crossing count of two arcs in the strip; zero or one.
pub fn strip_neg_crossing(alpha: StripArc, beta: StripArc) -> usize {
    if beta.length() >= alpha.length() {
        usize::from(alpha.start() < beta.end() && beta.end() < alpha.end())
    } else {
        strip_pos_crossing(beta, alpha)
    }
}

/// The preimage of an arc under the squaring map identifying the annulus
/// with `2n` marked points as a double cover of the one with `n`.
pub fn double_arc(arc: AnnulusArc) -> DoubledArcPair {
    let lift = arc.canonical_lift();
    let n = arc.n();
    let first = AnnulusArc::new(2 * n, lift.start(), arc.len()).expect("valid arc");
    let second = AnnulusArc::new(2 * n, lift.start() + n, arc.len()).expect("valid arc");
    DoubledArcPair { first, second }
}

/// Crossing numbers of the doubled arcs in the double-cover annulus: the
/// sum over the four pairings of preimage components. Componentwise this
/// is twice the crossing numbers of the original pair.
pub fn doubled_crossing_numbers(alpha: AnnulusArc, beta: AnnulusArc) -> Result<CrossingReport> {
    check_same_rank(alpha, beta)?;
    let da = double_arc(alpha);
    let db = double_arc(beta);
    let mut pos = 0;
    let mut neg = 0;
    for a in [da.first, da.second] {
        for b in [db.first, db.second] {
            let report = crossing_numbers(a, b)?;
            pos += report.pos;
            neg += report.neg;
        }
    }
    Ok(CrossingReport::bare(pos, neg))
}
