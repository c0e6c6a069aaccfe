//! Leaf labels (complete invariants) and SE(2)-equivalence.
//!
//! Overlapping charts of each stratum glue together with identity transition
//! maps, so one invariant vector labels a whole orbit.

use alloc::vec::Vec;

use num_traits::Signed;

use crate::algebra;
use crate::params::KTParams;
use crate::scalar::{self, Rational};
use crate::stratify::{stratum, Stratum, StratumLabel};

#[derive(Debug, Clone, PartialEq)]
pub struct LeafLabel {
    pub stratum: StratumLabel,
    /// `(α1)` on E0, `(I1, I2)` on E1, E2 and E3P, `(I1, I2, I3)` on E3EH.
    pub invariants: Vec<f64>,
    pub exact: Option<Vec<Rational>>,
    /// Set on E1 when `I2 > −I1²/4` fails, which only rounding can cause.
    pub off_leaf: bool,
}

impl LeafLabel {
    pub fn kind(&self) -> Stratum {
        self.stratum.stratum
    }
}

fn invariants<T: algebra::Field>(s: Stratum, a: &[T; 6]) -> Vec<T> {
    match s {
        Stratum::E0 => alloc::vec![a[0].clone()],
        Stratum::E1 => algebra::leaf_e1(a).to_vec(),
        Stratum::E2 => algebra::leaf_e2(a).to_vec(),
        Stratum::E3P => algebra::leaf_e3p(a).to_vec(),
        Stratum::E3EH => algebra::leaf_e3eh(a).to_vec(),
    }
}

pub fn leaf_label(p: &KTParams) -> LeafLabel {
    let label = stratum(p);
    let s = label.stratum;
    let exact = p.exact().map(|a| invariants(s, a));
    let values: Vec<f64> = match &exact {
        Some(e) => e.iter().map(scalar::to_f64).collect(),
        None => invariants(s, p.values()),
    };
    let off_leaf = s == Stratum::E1
        && match &exact {
            Some(e) => {
                let four = Rational::from_integer(4.into());
                !(&e[1] * &four + &e[0] * &e[0]).is_positive()
            }
            None => 4.0 * values[1] + values[0] * values[0] <= 0.0,
        };
    LeafLabel {
        stratum: label,
        invariants: values,
        exact,
        off_leaf,
    }
}

/// Whether `p` and `q` lie on the same SE(2)-orbit.
///
/// Labels are compared exactly when both sides are exact, otherwise
/// componentwise with `|x − y| ≤ tol · max(1, |x|, |y|)`.
pub fn equivalent(p: &KTParams, q: &KTParams, tol: f64) -> bool {
    let lp = leaf_label(p);
    let lq = leaf_label(q);
    if lp.kind() != lq.kind() {
        return false;
    }
    if let (Some(ep), Some(eq)) = (&lp.exact, &lq.exact) {
        return ep == eq;
    }
    lp.invariants
        .iter()
        .zip(&lq.invariants)
        .all(|(x, y)| (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn kt(r: [(i64, i64); 6]) -> KTParams {
        KTParams::from_ratios(r).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| int(n)).collect()
    }

    #[test]
    fn cartesian_leaves() {
        let p1 = kt([(1, 1), (-6, 1), (2, 1), (0, 1), (0, 1), (0, 1)]);
        let p2 = kt([(-4, 1), (9, 1), (1, 1), (0, 1), (0, 1), (0, 1)]);
        assert_eq!(leaf_label(&p1).exact.unwrap(), ints(&[-5, 10]));
        assert_eq!(leaf_label(&p2).exact.unwrap(), ints(&[5, 37]));
        assert!(!equivalent(&p1, &p2, 1e-9));
        assert!(!leaf_label(&p1).off_leaf);
    }

    #[test]
    fn polar_leaves() {
        let p1 = kt([(2, 1), (1, 1), (2, 3), (1, 1), (2, 1), (-3, 1)]);
        let p2 = kt([(1, 1), (-3, 1), (8, 3), (2, 1), (4, 1), (-3, 1)]);
        assert_eq!(leaf_label(&p1).exact.unwrap(), ints(&[-7, -3]));
        assert_eq!(leaf_label(&p2).exact.unwrap(), ints(&[-7, -3]));
        assert!(equivalent(&p1, &p2, 0.0));
        assert!(equivalent(&p1.to_float(), &p2.to_float(), 1e-9));
    }

    #[test]
    fn parabolic_leaves() {
        let p1 = kt([(1, 1), (-3, 1), (5, 1), (1, 1), (2, 1), (0, 1)]);
        let p2 = kt([(-2, 1), (5, 1), (7, 1), (0, 1), (-1, 1), (0, 1)]);
        assert_eq!(leaf_label(&p1).exact.unwrap(), ints(&[5, 21]));
        assert_eq!(leaf_label(&p2).exact.unwrap(), ints(&[1, -2]));
        assert!(!equivalent(&p1, &p2, 1e-9));
    }

    #[test]
    fn elliptic_hyperbolic_leaves() {
        let p1 = kt([(2, 1), (1, 1), (0, 1), (1, 1), (1, 1), (4, 1)]);
        let p2 = kt([(2, 1), (1, 1), (0, 1), (1, 1), (1, 1), (-4, 1)]);
        assert_eq!(leaf_label(&p1).exact.unwrap(), ints(&[4, 10, -5]));
        assert_eq!(leaf_label(&p2).exact.unwrap(), ints(&[-4, -14, 11]));
        assert!(!equivalent(&p1, &p2, 1e-9));
    }

    #[test]
    fn different_strata_never_equivalent() {
        let metric = kt([(2, 1), (2, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        let cartesian = kt([(2, 1), (3, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        assert!(!equivalent(&metric, &cartesian, 1e6));
        assert!(equivalent(&metric, &metric, 0.0));
    }
}
