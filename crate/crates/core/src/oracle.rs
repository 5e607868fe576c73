//! Ground-truth side: nilpotent representations of the cyclic quiver (and
//! finite-support representations of the line quiver), Hom dimensions by
//! exact linear algebra, and Ext^1 via the translate duality and via the
//! Euler form. Everything here is independent of the crossing-number
//! formulas it validates.
//!
//! Dimensions of these combinatorially defined modules are ranks of
//! integer matrices, hence field-independent; the oracle works over the
//! rationals.

use num_traits::Zero;

use crate::error::{common_rank, Error, Rank, Result};
use crate::linalg::RatMatrix;
use crate::tube::IndecModule;

/// A representation of the cyclic quiver with arrows `v -> v-1` (mod `n`),
/// or of the line quiver with arrows `v+1 -> v` on a finite window.
///
/// For `M[a,b]` the basis is `e_{a+1}, ..., e_{b-1}` with `e_j` placed at
/// vertex `j` (mod `n` at finite rank) and the arrow action `e_j -> e_{j-1}`
/// (zero on `e_{a+1}`), so the socle sits at `S_{a+1}` and the top at
/// `S_{b-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentRep {
    rank: Rank,
    /// First vertex of the window; 0 at finite rank.
    lo: i64,
    dims: Vec<usize>,
    /// Finite rank: `maps[v]` is the arrow `v -> v-1` (mod `n`), of shape
    /// `dims[v-1] x dims[v]`. Infinite rank: `maps[i]` is the arrow
    /// `lo+i+1 -> lo+i`, of shape `dims[i] x dims[i+1]`.
    maps: Vec<RatMatrix>,
}

impl NilpotentRep {
    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[RatMatrix] {
        &self.maps
    }

    /// Inclusive vertex window `(lo, hi)`; `(0, n-1)` at finite rank.
    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.lo + self.dims.len() as i64 - 1)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Whether the composite of the arrow maps around the full cycle is
    /// nilpotent. Trivially true on the line.
    pub fn cycle_nilpotent(&self) -> bool {
        let n = match self.rank {
            Rank::Finite(n) => n as usize,
            Rank::Infinite => return true,
        };
        for start in 0..n {
            let d = self.dims[start];
            if d == 0 {
                continue;
            }
            // Composite V_start -> V_start going around the cycle once.
            let mut composite = {
                let mut id = RatMatrix::zeros(d, d);
                for i in 0..d {
                    id.set_one(i, i);
                }
                id
            };
            let mut vertex = start;
            for _ in 0..n {
                composite = self.maps[vertex].mul_mat(&composite);
                vertex = (vertex + n - 1) % n;
            }
            let mut power = composite.clone();
            let mut steps = 1;
            while !power.is_zero() {
                if steps > d {
                    return false;
                }
                power = composite.mul_mat(&power);
                steps += 1;
            }
        }
        true
    }

    /// Extension of a line representation by zero vertices to a larger
    /// window.
    fn padded_to(&self, lo: i64, hi: i64) -> NilpotentRep {
        assert_eq!(self.rank, Rank::Infinite);
        let (old_lo, old_hi) = self.window();
        assert!(lo <= old_lo && old_hi <= hi);
        let width = (hi - lo + 1) as usize;
        let offset = (old_lo - lo) as usize;
        let mut dims = vec![0usize; width];
        dims[offset..offset + self.dims.len()].clone_from_slice(&self.dims);
        let mut maps = Vec::with_capacity(width - 1);
        for i in 0..width - 1 {
            let inside = i >= offset && i + 1 < offset + self.dims.len();
            if inside {
                maps.push(self.maps[i - offset].clone());
            } else {
                maps.push(RatMatrix::zeros(dims[i], dims[i + 1]));
            }
        }
        NilpotentRep {
            rank: Rank::Infinite,
            lo,
            dims,
            maps,
        }
    }
}

/// Builds the nilpotent cyclic-quiver representation of a finite-rank
/// indecomposable.
pub fn build_rep(m: IndecModule) -> Result<NilpotentRep> {
    let n = m.rank().finite().ok_or(Error::ExpectedFiniteRank)?;
    let (a, b) = (m.a(), m.b());
    let nu = n as usize;
    let mut dims = vec![0usize; nu];
    for j in a + 1..b {
        dims[j.rem_euclid(n) as usize] += 1;
    }
    // Basis index of e_j within its vertex: positions ordered by j.
    let index_of = |j: i64| -> usize {
        let v = j.rem_euclid(n);
        // First basis label at this vertex is the smallest j' >= a+1 with
        // j' = v (mod n).
        let first = a + 1 + (v - (a + 1)).rem_euclid(n);
        ((j - first) / n) as usize
    };
    let mut maps: Vec<RatMatrix> = (0..nu)
        .map(|v| RatMatrix::zeros(dims[(v + nu - 1) % nu], dims[v]))
        .collect();
    for j in a + 2..b {
        let v = j.rem_euclid(n) as usize;
        let row = index_of(j - 1);
        let col = index_of(j);
        maps[v].set_one(row, col);
    }
    let rep = NilpotentRep {
        rank: Rank::Finite(n),
        lo: 0,
        dims,
        maps,
    };
    assert!(rep.cycle_nilpotent(), "cycle composite must be nilpotent");
    Ok(rep)
}

/// Builds the line-quiver representation of an infinite-rank
/// indecomposable on its support window.
pub fn build_rep_line(m: IndecModule) -> Result<NilpotentRep> {
    if m.rank().is_finite() {
        return Err(Error::ExpectedInfiniteRank);
    }
    Ok(line_rep_on_window(m, m.a(), m.b()))
}

fn line_rep_on_window(m: IndecModule, lo: i64, hi: i64) -> NilpotentRep {
    debug_assert!(lo <= m.a() && m.b() <= hi);
    let (a, b) = (m.a(), m.b());
    let width = (hi - lo + 1) as usize;
    let dims: Vec<usize> = (lo..=hi).map(|j| usize::from(a < j && j < b)).collect();
    let mut maps = Vec::with_capacity(width - 1);
    for i in 0..width - 1 {
        let mut map = RatMatrix::zeros(dims[i], dims[i + 1]);
        if dims[i] == 1 && dims[i + 1] == 1 {
            map.set_one(0, 0);
        }
        maps.push(map);
    }
    NilpotentRep {
        rank: Rank::Infinite,
        lo,
        dims,
        maps,
    }
}

/// Dimension of the space of intertwiners from `r1` to `r2`: the nullity
/// of the stacked linear system `f_t x_arrow = y_arrow f_s` over all
/// arrows, solved by exact rational elimination.
pub fn hom_dim_linalg(r1: &NilpotentRep, r2: &NilpotentRep) -> Result<usize> {
    common_rank(r1.rank, r2.rank)?;
    match r1.rank {
        Rank::Finite(n) => {
            let nu = n as usize;
            let arrows: Vec<(usize, usize)> = (0..nu).map(|v| (v, (v + nu - 1) % nu)).collect();
            let maps1: Vec<&RatMatrix> = r1.maps.iter().collect();
            let maps2: Vec<&RatMatrix> = r2.maps.iter().collect();
            Ok(intertwiner_nullity(
                &r1.dims, &r2.dims, &arrows, &maps1, &maps2,
            ))
        }
        Rank::Infinite => {
            let lo = r1.lo.min(r2.lo);
            let hi = r1.window().1.max(r2.window().1);
            let p1 = r1.padded_to(lo, hi);
            let p2 = r2.padded_to(lo, hi);
            let width = p1.dims.len();
            let arrows: Vec<(usize, usize)> = (0..width - 1).map(|i| (i + 1, i)).collect();
            let maps1: Vec<&RatMatrix> = p1.maps.iter().collect();
            let maps2: Vec<&RatMatrix> = p2.maps.iter().collect();
            Ok(intertwiner_nullity(
                &p1.dims, &p2.dims, &arrows, &maps1, &maps2,
            ))
        }
    }
}

fn intertwiner_nullity(
    d1: &[usize],
    d2: &[usize],
    arrows: &[(usize, usize)],
    maps1: &[&RatMatrix],
    maps2: &[&RatMatrix],
) -> usize {
    let verts = d1.len();
    let mut offsets = vec![0usize; verts + 1];
    for v in 0..verts {
        offsets[v + 1] = offsets[v] + d2[v] * d1[v];
    }
    let unknowns = offsets[verts];
    if unknowns == 0 {
        return 0;
    }
    // Unknown f_v is a d2[v] x d1[v] block stored row-major at offsets[v].
    let cell = |v: usize, i: usize, k: usize| offsets[v] + i * d1[v] + k;

    let rows: usize = arrows.iter().map(|&(s, t)| d2[t] * d1[s]).sum();
    let mut system = RatMatrix::zeros(rows, unknowns);
    let mut row = 0;
    for (idx, &(s, t)) in arrows.iter().enumerate() {
        let x = maps1[idx]; // d1[t] x d1[s]
        let y = maps2[idx]; // d2[t] x d2[s]
        for i in 0..d2[t] {
            for j in 0..d1[s] {
                for k in 0..d1[t] {
                    if !x.at(k, j).is_zero() {
                        system.set(row, cell(t, i, k), *x.at(k, j));
                    }
                }
                for k in 0..d2[s] {
                    if !y.at(i, k).is_zero() {
                        system.set(row, cell(s, k, j), -*y.at(i, k));
                    }
                }
                row += 1;
            }
        }
    }
    system.nullity()
}

/// Ext^1 dimension by the translate duality: the Hom dimension from the
/// second module to the translate of the first.
pub fn ext_dim_ar(m1: IndecModule, m2: IndecModule) -> Result<usize> {
    common_rank(m1.rank(), m2.rank())?;
    hom_dim_linalg(&build_rep(m2)?, &build_rep(m1.tau())?)
}

/// The Euler pairing of the hereditary cyclic-quiver path algebra:
/// `<d, e> = sum_v d_v e_v - sum_{arrows s->t} d_s e_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerForm {
    n: i64,
}

impl EulerForm {
    pub fn new(n: i64) -> Result<EulerForm> {
        if n < 1 {
            return Err(Error::InvalidRank { n });
        }
        Ok(EulerForm { n })
    }

    pub fn pairing(&self, d: &[usize], e: &[usize]) -> i64 {
        let nu = self.n as usize;
        assert_eq!(d.len(), nu);
        assert_eq!(e.len(), nu);
        let mut value = 0i64;
        for v in 0..nu {
            value += d[v] as i64 * e[v] as i64;
            value -= d[v] as i64 * e[(v + nu - 1) % nu] as i64;
        }
        value
    }
}

/// Ext^1 dimension from the Euler form of a hereditary category:
/// `dim Hom - <dim m1, dim m2>`.
pub fn ext_dim_euler(m1: IndecModule, m2: IndecModule) -> Result<usize> {
    let rank = common_rank(m1.rank(), m2.rank())?;
    let n = rank.finite().ok_or(Error::ExpectedFiniteRank)?;
    let hom = hom_dim_linalg(&build_rep(m1)?, &build_rep(m2)?)?;
    let pairing = EulerForm::new(n)?.pairing(&m1.dimension_vector()?, &m2.dimension_vector()?);
    let ext = hom as i64 - pairing;
    if ext < 0 {
        return Err(Error::NegativeExt {
            hom,
            euler: pairing,
        });
    }
    Ok(ext as usize)
}

/// Hom dimension between line-quiver modules by the intertwiner system on
/// the union of the supports.
pub fn hom_dim_line(m1: IndecModule, m2: IndecModule) -> Result<usize> {
    if m1.rank().is_finite() || m2.rank().is_finite() {
        return Err(Error::ExpectedInfiniteRank);
    }
    let lo = m1.a().min(m2.a());
    let hi = m1.b().max(m2.b());
    let r1 = line_rep_on_window(m1, lo, hi);
    let r2 = line_rep_on_window(m2, lo, hi);
    hom_dim_linalg(&r1, &r2)
}

/// Ext^1 dimension between line-quiver modules by the translate duality.
pub fn ext_dim_line(m1: IndecModule, m2: IndecModule) -> Result<usize> {
    if m1.rank().is_finite() || m2.rank().is_finite() {
        return Err(Error::ExpectedInfiniteRank);
    }
    hom_dim_line(m2, m1.tau())
}
