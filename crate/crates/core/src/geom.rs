//! Exact rational plane geometry for piecewise-linear arcs in the strip
//! `0 <= y <= 1`. Crossing counts never touch floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational `num / den`.
pub fn ratio(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Conversion for rendering only; counting logic never touches floats.
pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("rational out of f64 range")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Point {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point {
            x: rat(x),
            y: rat(y),
        }
    }

    fn translated_x(&self, dx: i64) -> Point {
        Point {
            x: &self.x + rat(dx),
            y: self.y.clone(),
        }
    }
}

/// A piecewise-linear oriented arc: boundary endpoints at `y = 0` with
/// integer x, interior vertices strictly inside the strip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlArc {
    vertices: Vec<Point>,
}

impl PlArc {
    pub fn new(vertices: Vec<Point>) -> PlArc {
        assert!(vertices.len() >= 2, "an arc needs at least two vertices");
        let first = &vertices[0];
        let last = &vertices[vertices.len() - 1];
        assert!(first.y.is_zero() && last.y.is_zero());
        for pair in vertices.windows(2) {
            assert!(pair[0] != pair[1], "degenerate segment");
        }
        PlArc { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Directed segments in path order.
    pub fn segments(&self) -> impl Iterator<Item = (&Point, &Point)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// Copy of the arc translated by `dx` in the x-direction.
    pub fn translated(&self, dx: i64) -> PlArc {
        PlArc {
            vertices: self.vertices.iter().map(|p| p.translated_x(dx)).collect(),
        }
    }

    pub fn min_x(&self) -> &Rat {
        self.vertices.iter().map(|p| &p.x).min().unwrap()
    }

    pub fn max_x(&self) -> &Rat {
        self.vertices.iter().map(|p| &p.x).max().unwrap()
    }
}

fn cross(ax: &Rat, ay: &Rat, bx: &Rat, by: &Rat) -> Rat {
    ax * by - ay * bx
}

/// Transversal crossing of two directed segments strictly inside both,
/// with the sign of the orientation determinant of the ordered direction
/// pair (first segment, second segment).
///
/// Contacts at segment endpoints on the boundary `y = 0` are shared marked
/// points and are not crossings. Endpoint contacts strictly inside the
/// strip would make the crossing count of the piecewise-linear
/// representatives ill-defined, so they are rejected loudly.
pub fn proper_crossing(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> Option<(Point, i8)> {
    let rx = &p2.x - &p1.x;
    let ry = &p2.y - &p1.y;
    let sx = &q2.x - &q1.x;
    let sy = &q2.y - &q1.y;
    let denom = cross(&rx, &ry, &sx, &sy);
    let wx = &q1.x - &p1.x;
    let wy = &q1.y - &p1.y;
    if denom.is_zero() {
        // Parallel. Collinear overlap would be a non-transversal contact.
        let disjoint_x = q1.x.clone().max(q2.x.clone()) <= p1.x.clone().min(p2.x.clone())
            || p1.x.clone().max(p2.x.clone()) <= q1.x.clone().min(q2.x.clone());
        assert!(
            !cross(&wx, &wy, &rx, &ry).is_zero() || disjoint_x,
            "collinear overlapping segments"
        );
        return None;
    }
    let t = cross(&wx, &wy, &sx, &sy) / &denom;
    let u = cross(&wx, &wy, &rx, &ry) / &denom;
    let zero = Rat::zero();
    let one = rat(1);
    let t_interior = t > zero && t < one;
    let u_interior = u > zero && u < one;
    if t_interior && u_interior {
        let point = Point {
            x: &p1.x + &rx * &t,
            y: &p1.y + &ry * &t,
        };
        return Some((point, if denom.is_positive() { 1 } else { -1 }));
    }
    // A contact involving a segment endpoint is only tolerated on the
    // boundary, where arcs may share marked points.
    let t_in = t >= zero && t <= one;
    let u_in = u >= zero && u <= one;
    if t_in && u_in {
        let y_at = &p1.y + &ry * &t;
        assert!(
            y_at.is_zero(),
            "unexpected interior endpoint contact between segments"
        );
    }
    None
}
