//! Exhaustive desk-scale verification sweeps.
//!
//! Every sweep compares independent routes to the same quantity (closed
//! form vs. geometric counting, counting formulas vs. exact linear
//! algebra) or checks a structural invariant on every pair in range.
//! Failures are reported as sorted human-readable counterexamples, so
//! results do not depend on evaluation order.

use crate::arcs::{AnnulusArc, ShiftPower};
use crate::error::Rank;
use crate::intersect::{
    cover_crossings, crossing_numbers, doubled_crossing_numbers, neg_crossings, pos_crossings,
    strip_neg_crossing, strip_pos_crossing,
};
use crate::oracle::{build_rep, ext_dim_line, hom_dim_linalg, hom_dim_line, EulerForm};
use crate::quiver::{infinity_window, window};
use crate::tube::{ext_dim_cluster, ext_dim_infinity, ext_dim_tube, hom_dim, IndecModule};

/// Result of one verification sweep.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

const FAILURE_CAP: usize = 100;

impl CheckOutcome {
    fn new(name: &'static str) -> CheckOutcome {
        CheckOutcome {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < FAILURE_CAP {
            self.failures.push(describe());
        }
    }

    fn finish(mut self) -> CheckOutcome {
        self.failures.sort();
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All arcs of the rank-`n` annulus with length at most `len_max`.
pub fn arcs_of_rank(n: i64, len_max: i64) -> Vec<AnnulusArc> {
    let mut arcs = Vec::new();
    for len in 2..=len_max {
        for a in 0..n {
            arcs.push(AnnulusArc::new(n, a, len).expect("valid sweep arc"));
        }
    }
    arcs
}

/// Per-rank length bounds for a sweep: each rank `n` up to `n_max` is
/// swept to length `min(len_max, 4n)`.
pub fn rank_plan(n_max: i64, len_max: i64) -> Vec<(i64, i64)> {
    (1..=n_max).map(|n| (n, len_max.min(4 * n))).collect()
}

/// Totals decompose as positive plus negative counts on every pair.
pub fn check_sign_additivity(plan: &[(i64, i64)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("sign_additivity");
    for &(n, len_max) in plan {
        let arcs = arcs_of_rank(n, len_max);
        for &alpha in &arcs {
            for &beta in &arcs {
                let report = crossing_numbers(alpha, beta).unwrap();
                let ok = report.total == report.pos + report.neg
                    && report.pos == pos_crossings(alpha, beta).unwrap()
                    && report.neg == neg_crossings(alpha, beta).unwrap();
                out.record(ok, || format!("additivity fails on {alpha}, {beta}"));
            }
        }
    }
    out.finish()
}

/// Positive crossings of one order are the negative crossings of the
/// other, and totals are symmetric.
pub fn check_swap_antisymmetry(plan: &[(i64, i64)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("swap_antisymmetry");
    for &(n, len_max) in plan {
        let arcs = arcs_of_rank(n, len_max);
        for &alpha in &arcs {
            for &beta in &arcs {
                let ab = crossing_numbers(alpha, beta).unwrap();
                let ba = crossing_numbers(beta, alpha).unwrap();
                let ok = ab.pos == ba.neg && ab.neg == ba.pos && ab.total == ba.total;
                out.record(ok, || {
                    format!(
                        "swap fails on {alpha}, {beta}: {:?} vs {:?}",
                        ab.counts(),
                        ba.counts()
                    )
                });
            }
        }
    }
    out.finish()
}

/// Rotating the annulus (the translate on arcs) preserves signed counts,
/// and the translate preserves extension dimensions.
pub fn check_rotation_invariance(plan: &[(i64, i64)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("rotation_invariance");
    for &(n, len_max) in plan {
        let arcs = arcs_of_rank(n, len_max);
        for &alpha in &arcs {
            for &beta in &arcs {
                let plain = crossing_numbers(alpha, beta).unwrap();
                let rotated = crossing_numbers(alpha.tau(), beta.tau()).unwrap();
                let m1 = crate::tube::module_of_arc(alpha);
                let m2 = crate::tube::module_of_arc(beta);
                let ok = plain == rotated
                    && ext_dim_tube(m1, m2).unwrap() == ext_dim_tube(m1.tau(), m2.tau()).unwrap();
                out.record(ok, || format!("rotation changes counts on {alpha}, {beta}"));
            }
        }
    }
    out.finish()
}

/// Shifting both label entries by the rank changes nothing: lifts of the
/// same arc project equally and module labels normalize to the same
/// object with the same dimensions.
pub fn check_shift_invariance(plan: &[(i64, i64)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("shift_invariance");
    for &(n, len_max) in plan {
        let arcs = arcs_of_rank(n, len_max);
        for &alpha in &arcs {
            for m in -2..=2 {
                let lift = alpha.canonical_lift().shift(ShiftPower(m), n);
                let ok = lift.project(n).unwrap() == alpha;
                out.record(ok, || {
                    format!("lift shifted by {m} projects differently: {alpha}")
                });
            }
        }
        for &alpha in &arcs {
            for &beta in &arcs {
                let m1 = crate::tube::module_of_arc(alpha);
                let m2 = crate::tube::module_of_arc(beta);
                let m1s = IndecModule::new(Rank::Finite(n), m1.a() + n, m1.b() + n).unwrap();
                let m2s =
                    IndecModule::new(Rank::Finite(n), m2.a() + 3 * n, m2.b() + 3 * n).unwrap();
                let ok = m1s == m1
                    && m2s == m2
                    && hom_dim(m1s, m2s).unwrap() == hom_dim(m1, m2).unwrap()
                    && ext_dim_tube(m1s, m2s).unwrap() == ext_dim_tube(m1, m2).unwrap();
                out.record(ok, || {
                    format!("label shift changes dimensions on {m1}, {m2}")
                });
            }
        }
    }
    out.finish()
}

/// The geometric count of transversal crossings of the piecewise-linear
/// representatives agrees with the closed form on every pair.
pub fn check_route_agreement(plan: &[(i64, i64)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("route_agreement");
    for &(n, len_max) in plan {
        let arcs = arcs_of_rank(n, len_max);
        for &alpha in &arcs {
            for &beta in &arcs {
                let closed = crossing_numbers(alpha, beta).unwrap();
                let cover = cover_crossings(alpha, beta, true).unwrap();
                let points = cover.points.as_ref().unwrap();
                let ok = closed.counts() == cover.counts()
                    && points.iter().filter(|p| p.sign > 0).count() == cover.pos
                    && points.iter().filter(|p| p.sign < 0).count() == cover.neg;
                out.record(ok, || {
                    format!(
                        "routes disagree on {alpha}, {beta}: closed {:?}, cover {:?}",
                        closed.counts(),
                        cover.counts()
                    )
                });
            }
        }
    }
    out.finish()
}

/// Crossing numbers of doubled arcs in the double cover are exactly twice
/// the originals, componentwise.
pub fn check_doubling(plan: &[(i64, i64)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("doubling");
    for &(n, len_max) in plan {
        let arcs = arcs_of_rank(n, len_max);
        for &alpha in &arcs {
            for &beta in &arcs {
                let single = crossing_numbers(alpha, beta).unwrap();
                let doubled = doubled_crossing_numbers(alpha, beta).unwrap();
                let ok = doubled.pos == 2 * single.pos
                    && doubled.neg == 2 * single.neg
                    && doubled.total == 2 * single.total;
                out.record(ok, || {
                    format!(
                        "doubling fails on {alpha}, {beta}: {:?} vs 2x{:?}",
                        doubled.counts(),
                        single.counts()
                    )
                });
            }
        }
    }
    out.finish()
}

/// Crossing numbers of powers of a generator of the fundamental group:
/// the arcs `pi_n[0, rn]` satisfy
/// `(pos, neg, total) = (min(r,s)-1, min(r,s)-1, 2 min(r,s)-2)`.
pub fn check_loop_powers(n_max: i64) -> CheckOutcome {
    let mut out = CheckOutcome::new("loop_powers");
    for n in 1..=n_max {
        for r in 1..=6i64 {
            for s in 1..=6i64 {
                // At n = 1 the single loop [0,1] is the boundary arc and
                // not admissible; that cell of the table is vacuous.
                let (Ok(alpha), Ok(beta)) =
                    (AnnulusArc::new(n, 0, r * n), AnnulusArc::new(n, 0, s * n))
                else {
                    continue;
                };
                let report = crossing_numbers(alpha, beta).unwrap();
                let expect = (r.min(s) - 1) as usize;
                let ok = report.counts() == (expect, expect, 2 * expect);
                out.record(ok, || {
                    format!(
                        "loop powers fail at n={n}, r={r}, s={s}: {:?}",
                        report.counts()
                    )
                });
            }
        }
    }
    out.finish()
}

/// The geometric extension dimension agrees with both oracle routes
/// (translate duality and Euler form), and the counting formula for Hom
/// agrees with the intertwiner solver, on every ordered pair.
pub fn check_oracle_agreement(plan: &[(i64, i64)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("oracle_agreement");
    for &(n, len_max) in plan {
        let arcs = arcs_of_rank(n, len_max);
        let modules: Vec<IndecModule> = arcs
            .iter()
            .map(|&a| crate::tube::module_of_arc(a))
            .collect();
        let reps: Vec<_> = modules.iter().map(|&m| build_rep(m).unwrap()).collect();
        let dims: Vec<Vec<usize>> = modules
            .iter()
            .map(|m| m.dimension_vector().unwrap())
            .collect();
        let euler = EulerForm::new(n).unwrap();
        // Index of a module in the sweep by its label data.
        let index = |m: IndecModule| -> usize { ((m.b() - m.a() - 2) * n + m.a()) as usize };
        let hom_table: Vec<Vec<usize>> = reps
            .iter()
            .map(|r1| {
                reps.iter()
                    .map(|r2| hom_dim_linalg(r1, r2).unwrap())
                    .collect()
            })
            .collect();
        for (i, &m1) in modules.iter().enumerate() {
            for (j, &m2) in modules.iter().enumerate() {
                let geo = ext_dim_tube(m1, m2).unwrap();
                let geo_swap = pos_crossings(arcs[j], arcs[i]).unwrap();
                let ar = hom_table[j][index(m1.tau())];
                let pairing = euler.pairing(&dims[i], &dims[j]);
                let euler_ext = hom_table[i][j] as i64 - pairing;
                let hom_formula = hom_dim(m1, m2).unwrap();
                let cluster = ext_dim_cluster(m1, m2).unwrap();
                let total = crossing_numbers(arcs[i], arcs[j]).unwrap().total;
                let ok = geo == ar
                    && euler_ext >= 0
                    && geo == euler_ext as usize
                    && geo == geo_swap
                    && hom_formula == hom_table[i][j]
                    && cluster == total;
                out.record(ok, || {
                    format!(
                        "oracle disagreement on {m1}, {m2} (n={n}): geometric {geo}, \
                         duality {ar}, euler {euler_ext}, hom {hom_formula} vs {}",
                        hom_table[i][j]
                    )
                });
            }
        }
    }
    out.finish()
}

/// Windows of the arc quiver satisfy the vertex-count formula, the
/// out-degree pattern, and the stable translation condition on interior
/// vertices.
pub fn check_mesh_symmetry(n_max: i64, max_len: i64) -> CheckOutcome {
    let mut out = CheckOutcome::new("mesh_symmetry");
    for n in 1..=n_max {
        let q = window(n, max_len).unwrap();
        out.record(q.vertices.len() as i64 == n * (max_len - 1), || {
            format!("vertex count off for n={n}, max_len={max_len}")
        });
        let defects = q.mesh_defects(|v| v.len() < max_len);
        out.record(defects.is_empty(), || {
            format!(
                "mesh condition fails for n={n} at {}",
                q.vertices[defects[0]]
            )
        });
        for (i, &v) in q.vertices.iter().enumerate() {
            let expected = if v.len() == 2 && v.len() == max_len {
                0
            } else if v.len() == 2 || v.len() == max_len {
                1
            } else {
                2
            };
            out.record(q.successors(i).len() == expected, || {
                format!("out-degree of {v} is not {expected}")
            });
            let t = q.tau[i].unwrap();
            out.record(q.vertices[t] == v.tau(), || {
                format!("translate mismatch at {v}")
            });
        }
    }
    let q = infinity_window(-(max_len.min(6)), max_len.min(6), max_len).unwrap();
    let bound = max_len.min(6);
    let defects =
        q.mesh_defects(|v| v.length() < max_len && v.start() > -bound && v.start() < bound);
    out.record(defects.is_empty(), || {
        format!("strip mesh condition fails at {}", q.vertices[defects[0]])
    });
    out.finish()
}

/// Summing the single-crossing strip counts over deck translates of the
/// second lift reproduces the annulus counts.
pub fn check_strip_sum(plan: &[(i64, i64)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("strip_sum");
    for &(n, len_max) in plan {
        let arcs = arcs_of_rank(n, len_max);
        for &alpha in &arcs {
            for &beta in &arcs {
                let la = alpha.canonical_lift();
                let lb = beta.canonical_lift();
                let reach = (alpha.len() + beta.len()) / n + 2;
                let mut pos = 0;
                let mut neg = 0;
                for m in -reach..=reach {
                    let shifted = lb.shift(ShiftPower(m), n);
                    pos += strip_pos_crossing(la, shifted);
                    neg += strip_neg_crossing(la, shifted);
                }
                let ok = pos == pos_crossings(alpha, beta).unwrap()
                    && neg == neg_crossings(alpha, beta).unwrap();
                out.record(ok, || {
                    format!("strip sums disagree on {alpha}, {beta}: ({pos}, {neg})")
                });
            }
        }
    }
    out.finish()
}

/// The strip crossing predicates match the line-quiver oracle for the
/// infinite case, with the documented value ranges.
pub fn check_line_case(lo: i64, hi: i64) -> CheckOutcome {
    let mut out = CheckOutcome::new("line_case");
    let mut modules = Vec::new();
    for a in lo..=hi {
        for b in a + 2..=hi {
            modules.push(IndecModule::new(Rank::Infinite, a, b).unwrap());
        }
    }
    for &m1 in &modules {
        for &m2 in &modules {
            let tube_side = ext_dim_infinity(m1, m2, false).unwrap();
            let cluster_side = ext_dim_infinity(m1, m2, true).unwrap();
            let oracle = ext_dim_line(m1, m2).unwrap();
            let oracle_rev = ext_dim_line(m2, m1).unwrap();
            let hom_formula = hom_dim(m1, m2).unwrap();
            let hom_oracle = hom_dim_line(m1, m2).unwrap();
            let ok = tube_side == oracle
                && cluster_side == oracle + oracle_rev
                && tube_side <= 1
                && cluster_side <= 2
                && hom_formula == hom_oracle;
            out.record(ok, || {
                format!(
                    "line case fails on {m1}, {m2}: strip {tube_side}/{cluster_side}, \
                     oracle {oracle}/{}, hom {hom_formula} vs {hom_oracle}",
                    oracle + oracle_rev
                )
            });
        }
    }
    out.finish()
}

/// Runs every sweep with bounds derived from `(n_max, len_max)`.
pub fn run_all(n_max: i64, len_max: i64) -> Vec<CheckOutcome> {
    let plan = rank_plan(n_max, len_max);
    let line_half = (len_max / 2).clamp(2, 8);
    vec![
        check_sign_additivity(&plan),
        check_swap_antisymmetry(&plan),
        check_rotation_invariance(&plan),
        check_shift_invariance(&plan),
        check_loop_powers(n_max.min(4)),
        check_route_agreement(&plan),
        check_strip_sum(&plan),
        check_doubling(&plan),
        check_oracle_agreement(&plan),
        check_mesh_symmetry(n_max, len_max.clamp(2, 8)),
        check_line_case(-line_half, line_half),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        for outcome in run_all(3, 6) {
            assert!(
                outcome.passed(),
                "{} failed: {:?}",
                outcome.name,
                outcome.failures.first()
            );
            assert!(outcome.cases > 0);
        }
    }

    #[test]
    fn rank_plan_caps_lengths() {
        assert_eq!(rank_plan(3, 18), vec![(1, 4), (2, 8), (3, 12)]);
        assert_eq!(rank_plan(2, 5), vec![(1, 4), (2, 5)]);
    }
}
