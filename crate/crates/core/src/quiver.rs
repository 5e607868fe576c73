//! Finite windows of translation quivers of arcs: the quiver of annulus
//! arcs (vertices are arcs of bounded length) and the strip-arc quiver of
//! the infinite line case, with arrows, the translate, and DOT export.
//!
//! There is an arrow from an arc with lift `[a,b]` to one with lift
//! `[c,d]` exactly when `(c,d)` is `(a+1,b)` or `(a,b+1)`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::arcs::{AnnulusArc, StripArc};
use crate::error::{Error, Result};

/// Vertex of a generated quiver window.
pub trait QuiverVertex: Copy + Eq + std::hash::Hash {
    fn dot_label(&self) -> String;
    /// Sort key `(length, start)` for deterministic output.
    fn sort_key(&self) -> (i64, i64);
}

impl QuiverVertex for AnnulusArc {
    fn dot_label(&self) -> String {
        self.to_string()
    }

    fn sort_key(&self) -> (i64, i64) {
        (self.len(), self.start())
    }
}

impl QuiverVertex for StripArc {
    fn dot_label(&self) -> String {
        self.to_string()
    }

    fn sort_key(&self) -> (i64, i64) {
        (self.length(), self.start())
    }
}

/// A finite window of a stable translation quiver. Vertices are sorted by
/// `(length, start)`; arrows and the translate refer to vertex indices.
#[derive(Debug, Clone)]
pub struct TranslationQuiver<V> {
    pub vertices: Vec<V>,
    pub arrows: Vec<(usize, usize)>,
    pub tau: Vec<Option<usize>>,
    pub max_len: i64,
}

pub type AnnulusQuiver = TranslationQuiver<AnnulusArc>;
pub type StripQuiver = TranslationQuiver<StripArc>;

impl<V: QuiverVertex> TranslationQuiver<V> {
    fn build(
        vertices: Vec<V>,
        neighbor_rule: impl Fn(V) -> Vec<V>,
        tau_rule: impl Fn(V) -> Option<V>,
        max_len: i64,
    ) -> TranslationQuiver<V> {
        let mut vertices = vertices;
        vertices.sort_by_key(|v| v.sort_key());
        let index: HashMap<V, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut arrows = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for succ in neighbor_rule(v) {
                if let Some(&j) = index.get(&succ) {
                    arrows.push((i, j));
                }
            }
        }
        arrows.sort_unstable();
        let duplicates = arrows.windows(2).any(|w| w[0] == w[1]);
        assert!(!duplicates, "the arc quiver has no multiple arrows");
        let tau = vertices
            .iter()
            .map(|&v| tau_rule(v).and_then(|t| index.get(&t).copied()))
            .collect();
        TranslationQuiver {
            vertices,
            arrows,
            tau,
            max_len,
        }
    }

    pub fn successors(&self, i: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|&&(s, _)| s == i)
            .map(|&(_, t)| t)
            .collect()
    }

    pub fn predecessors(&self, i: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|&&(_, t)| t == i)
            .map(|&(s, _)| s)
            .collect()
    }

    pub fn vertex_index(&self, v: V) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// Indices of vertices violating the stable translation condition
    /// "predecessors of x are the translates of its successors", checked
    /// only where every rule neighbor lies inside the window.
    pub fn mesh_defects(&self, interior: impl Fn(V) -> bool) -> Vec<usize> {
        let mut defects = Vec::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            if !interior(v) {
                continue;
            }
            let mut expected: Vec<usize> = self
                .successors(i)
                .into_iter()
                .filter_map(|j| self.tau[j])
                .collect();
            expected.sort_unstable();
            let mut preds = self.predecessors(i);
            preds.sort_unstable();
            if preds != expected {
                defects.push(i);
            }
        }
        defects
    }

    /// Deterministic DOT rendering: vertices sorted by `(length, start)`,
    /// solid edges for arrows, dashed edges from each vertex to its
    /// translate.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph arc_quiver {\n  rankdir=BT;\n  node [shape=box];\n");
        for v in &self.vertices {
            writeln!(out, "  \"{}\";", v.dot_label()).unwrap();
        }
        for &(s, t) in &self.arrows {
            writeln!(
                out,
                "  \"{}\" -> \"{}\";",
                self.vertices[s].dot_label(),
                self.vertices[t].dot_label()
            )
            .unwrap();
        }
        for (i, tau) in self.tau.iter().enumerate() {
            if let Some(t) = tau {
                writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [style=dashed, constraint=false];",
                    self.vertices[i].dot_label(),
                    self.vertices[*t].dot_label()
                )
                .unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Window of the annulus-arc quiver: all arcs of length at most `max_len`.
pub fn window(n: i64, max_len: i64) -> Result<AnnulusQuiver> {
    if n < 1 {
        return Err(Error::InvalidRank { n });
    }
    if max_len < 2 {
        return Err(Error::InvalidWindow(format!(
            "max_len must be at least 2, got {max_len}"
        )));
    }
    let mut vertices = Vec::new();
    for len in 2..=max_len {
        for a in 0..n {
            vertices.push(AnnulusArc::new(n, a, len).expect("valid window arc"));
        }
    }
    Ok(TranslationQuiver::build(
        vertices,
        |v| {
            let mut out = Vec::new();
            if let Ok(up) = AnnulusArc::new(v.n(), v.start(), v.len() + 1) {
                out.push(up);
            }
            if let Ok(side) = AnnulusArc::new(v.n(), v.start() + 1, v.len() - 1) {
                out.push(side);
            }
            out
        },
        |v| Some(v.tau()),
        max_len,
    ))
}

/// Window of the strip-arc quiver: arcs `[a,b]` with `a` in the given
/// range and length at most `max_len`.
pub fn infinity_window(a_min: i64, a_max: i64, max_len: i64) -> Result<StripQuiver> {
    if a_min > a_max {
        return Err(Error::InvalidWindow(format!(
            "empty start range {a_min}..={a_max}"
        )));
    }
    if max_len < 2 {
        return Err(Error::InvalidWindow(format!(
            "max_len must be at least 2, got {max_len}"
        )));
    }
    let mut vertices = Vec::new();
    for len in 2..=max_len {
        for a in a_min..=a_max {
            vertices.push(StripArc::new(a, a + len).expect("valid window arc"));
        }
    }
    Ok(TranslationQuiver::build(
        vertices,
        |v| {
            let mut out = Vec::new();
            if let Ok(up) = StripArc::new(v.start(), v.end() + 1) {
                out.push(up);
            }
            if let Ok(side) = StripArc::new(v.start() + 1, v.end()) {
                out.push(side);
            }
            out
        },
        |v| StripArc::new(v.start() - 1, v.end() - 1).ok(),
        max_len,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ann(n: i64, a: i64, b: i64) -> AnnulusArc {
        AnnulusArc::new(n, a, b - a).unwrap()
    }

    #[test]
    fn window_vertex_and_arrow_counts() {
        let q = window(5, 5).unwrap();
        assert_eq!(q.vertices.len(), 20);
        // Direct enumeration of the arrow rule inside the window: arcs of
        // length 2..=4 have an up-arrow, arcs of length 3..=5 a side-arrow.
        assert_eq!(q.arrows.len(), 30);
        let q = window(1, 4).unwrap();
        assert_eq!(q.vertices.len(), 3);
    }

    #[test]
    fn window_counts_formula() {
        for n in 1..=6 {
            for max_len in 2..=8 {
                let q = window(n, max_len).unwrap();
                assert_eq!(q.vertices.len() as i64, n * (max_len - 1));
            }
        }
    }

    #[test]
    fn successor_rule_examples() {
        let q = window(5, 5).unwrap();
        let v = q.vertex_index(ann(5, 0, 3)).unwrap();
        let succ: Vec<AnnulusArc> = q.successors(v).into_iter().map(|i| q.vertices[i]).collect();
        assert_eq!(succ.len(), 2);
        assert!(succ.contains(&ann(5, 0, 4)));
        assert!(succ.contains(&ann(5, 1, 3)));

        let v = q.vertex_index(ann(5, 0, 2)).unwrap();
        let succ: Vec<AnnulusArc> = q.successors(v).into_iter().map(|i| q.vertices[i]).collect();
        assert_eq!(succ, vec![ann(5, 0, 3)]);

        // Bottom row is exactly the length-2 arcs.
        for a in 0..5 {
            let v = q.vertex_index(ann(5, a, a + 2)).unwrap();
            assert_eq!(q.successors(v).len(), 1);
        }
    }

    #[test]
    fn translate_is_cyclic_on_rows() {
        let q = window(5, 5).unwrap();
        for (i, &v) in q.vertices.iter().enumerate() {
            let t = q.tau[i].unwrap();
            assert_eq!(q.vertices[t], v.tau());
            assert_eq!(q.vertices[t].len(), v.len());
        }
    }

    #[test]
    fn mesh_condition_holds_in_the_interior() {
        let q = window(5, 6).unwrap();
        let defects = q.mesh_defects(|v| v.len() < 6);
        assert!(defects.is_empty());
        let q = window(1, 8).unwrap();
        let defects = q.mesh_defects(|v| v.len() < 8);
        assert!(defects.is_empty());
    }

    #[test]
    fn infinity_window_rules() {
        let q = infinity_window(-3, 3, 5).unwrap();
        let v = q.vertex_index(StripArc::new(0, 2).unwrap()).unwrap();
        let succ: Vec<StripArc> = q.successors(v).into_iter().map(|i| q.vertices[i]).collect();
        assert_eq!(succ, vec![StripArc::new(0, 3).unwrap()]);

        let v = q.vertex_index(StripArc::new(0, 4).unwrap()).unwrap();
        let succ: Vec<StripArc> = q.successors(v).into_iter().map(|i| q.vertices[i]).collect();
        assert_eq!(succ.len(), 2);
        assert!(succ.contains(&StripArc::new(0, 5).unwrap()));
        assert!(succ.contains(&StripArc::new(1, 4).unwrap()));

        let v = q.vertex_index(StripArc::new(1, 4).unwrap()).unwrap();
        let t = q.tau[v].unwrap();
        assert_eq!(q.vertices[t], StripArc::new(0, 3).unwrap());

        // Interior mesh condition away from the window boundary.
        let defects = q.mesh_defects(|v| v.length() < 5 && v.start() > -3 && v.start() < 3);
        assert!(defects.is_empty());
    }

    #[test]
    fn dot_output_is_deterministic_and_sorted() {
        let q = window(5, 5).unwrap();
        let first = q.to_dot();
        let second = window(5, 5).unwrap().to_dot();
        assert_eq!(first, second);
        assert!(first.starts_with("digraph arc_quiver {"));
        assert!(first.contains("\"pi_5[0,2]\" -> \"pi_5[0,3]\";"));
        assert!(first.contains("\"pi_5[0,2]\" -> \"pi_5[4,6]\" [style=dashed, constraint=false];"));
        // 20 vertex lines, 30 solid arrows, 20 dashed translate edges.
        assert_eq!(first.matches(" -> ").count(), 50);
        assert_eq!(first.matches("style=dashed").count(), 20);

        let tiny = window(1, 2).unwrap();
        assert_eq!(tiny.vertices.len(), 1);
        assert_eq!(tiny.arrows.len(), 0);
    }

    #[test]
    fn invalid_windows_are_rejected() {
        assert!(matches!(window(5, 1), Err(Error::InvalidWindow(_))));
        assert!(matches!(window(0, 4), Err(Error::InvalidRank { .. })));
        assert!(matches!(
            infinity_window(3, -3, 5),
            Err(Error::InvalidWindow(_))
        ));
    }
}
