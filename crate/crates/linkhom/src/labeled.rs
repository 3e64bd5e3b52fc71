//! Labeled path tuples and their generating function.
//!
//! Labels go on north-step cells; whenever cells c and c+M both carry north
//! steps the labels must strictly increase. The generating function weights
//! each labeled tuple by t^(ldinv - pdinv) q^area times a monomial recording
//! label multiplicities.

use crate::laurent::{rat_int, Mono, Var};
use crate::paths::{enumerate_tuples, PathTuple, VWPair};
use crate::ratfun::RationalFunction;
use crate::xpoly::XPoly;

/// A path tuple with a labeling of its north-step cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledPathTuple<'a> {
    tuple: &'a PathTuple,
    labels: Vec<u32>, // parallel to tuple.north_cells()
}

impl<'a> LabeledPathTuple<'a> {
    pub fn new(tuple: &'a PathTuple, labels: Vec<u32>) -> Option<Self> {
        assert_eq!(labels.len(), tuple.north_cells().len());
        let m = tuple.m() as i64;
        let cells = tuple.north_cells();
        for (i, &c) in cells.iter().enumerate() {
            if let Ok(j) = cells.binary_search(&(c + m)) {
                if labels[i] >= labels[j] {
                    return None;
                }
            }
        }
        Some(LabeledPathTuple { tuple, labels })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Pairs of north cells c < d < c + M with strictly increasing labels;
    /// the cells may lie in different sheets.
    pub fn ldinv(&self) -> u64 {
        ldinv_count(self.tuple, &self.labels)
    }
}

/// Raw labeled-inversion count for an arbitrary labeling of the north cells
/// (no admissibility requirement).
pub fn ldinv_count(tuple: &PathTuple, labels: &[u32]) -> u64 {
    let m = tuple.m() as i64;
    let cells = tuple.north_cells();
    assert_eq!(labels.len(), cells.len());
    let mut count = 0;
    for i in 0..cells.len() {
        for j in (i + 1)..cells.len() {
            if cells[j] < cells[i] + m && labels[i] < labels[j] {
                count += 1;
            }
        }
    }
    count
}

/// All admissible labelings with labels in 1..=r.
pub fn labelings(tuple: &PathTuple, r: u32) -> Vec<Vec<u32>> {
    let cells = tuple.north_cells();
    let m = tuple.m() as i64;
    // Position of the forced-smaller partner (c - M), if it is a north cell.
    let lower: Vec<Option<usize>> = cells
        .iter()
        .map(|&c| cells.binary_search(&(c - m)).ok())
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(cells.len());
    fn rec(
        idx: usize,
        r: u32,
        lower: &[Option<usize>],
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == lower.len() {
            out.push(current.clone());
            return;
        }
        let min = match lower[idx] {
            Some(j) => current[j] + 1,
            None => 1,
        };
        for label in min..=r {
            current.push(label);
            rec(idx + 1, r, lower, current, out);
            current.pop();
        }
    }
    rec(0, r, &lower, &mut current, &mut out);
    out
}

/// The labeled generating function over tuples for (0^M, 0^N) with area at
/// most `q_trunc`, as a polynomial in x_1..x_r.
pub fn labeled_gf(m: usize, n: usize, r: u32, q_trunc: u64) -> XPoly {
    assert!(r >= 1);
    let vw = VWPair::zeros(m, n);
    let mut out = XPoly::zero(r as usize);
    for tuple in enumerate_tuples(&vw, q_trunc) {
        let pdinv = tuple.pdinv() as i64;
        let area = tuple.area() as i64;
        for labels in labelings(&tuple, r) {
            let lt = LabeledPathTuple::new(&tuple, labels).expect("labelings are admissible");
            let tpow = lt.ldinv() as i64 - pdinv;
            let coeff = RationalFunction::from_mono(
                Mono::from_pairs(&[(Var::T, tpow), (Var::Q, area)]),
                rat_int(1),
            );
            let mut exps = vec![0u32; r as usize];
            for &label in lt.labels() {
                exps[(label - 1) as usize] += 1;
            }
            out.add_term(exps, coeff);
        }
    }
    out
}
