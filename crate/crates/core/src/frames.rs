//! Right moving frames: the group element carrying a tensor onto the
//! cross-section of its stratum, and the resulting canonical parameters.
//!
//! Cross-sections:
//!
//! * E1: `α3 = α4 = α5 = α6 = 0`, `α1 < α2` (Cartesian web aligned with the axes)
//! * E2: `α1 = α2`, `α3 = α4 = α5 = 0`, `α6 ≠ 0` (polar web centred at the origin)
//! * E3P: `α1 = α2`, `α3 = α4 = α6 = 0`, `α5 > 0` (parabolic web, focus at the origin)
//! * E3EH: `α3 = α4 = α5 = 0`, `α6(α1 − α2) > 0` (foci on the x¹-axis, symmetric)
//!
//! Each stratum is covered by one or more charts; within a chart the frame is
//! a closed-form expression in the parameters. Where charts overlap the one
//! with the best-conditioned defining function is used.

use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};
use core::fmt;

use num_traits::{Signed, Zero};

use crate::action::induced_action_exact;
use crate::algebra;
use crate::error::{Error, Result};
use crate::group::{ExactMotion, GroupElement};
use crate::math;
use crate::params::KTParams;
use crate::scalar::{self, Rational};
use crate::stratify::{stratum_with, Stratum, StratumLabel, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chart {
    /// E0: every group element fixes the point.
    Fixed,
    E1U1,
    E1U2,
    E2U,
    E3PU1,
    E3PU2,
    E3EHU1,
    E3EHU2,
    E3EHU3,
    E3EHU4,
}

impl Chart {
    pub fn as_str(&self) -> &'static str {
        match self {
            Chart::Fixed => "fixed-point",
            Chart::E1U1 => "E1:U1",
            Chart::E1U2 => "E1:U2",
            Chart::E2U => "E2:U",
            Chart::E3PU1 => "E3P:U1",
            Chart::E3PU2 => "E3P:U2",
            Chart::E3EHU1 => "E3EH:U1",
            Chart::E3EHU2 => "E3EH:U2",
            Chart::E3EHU3 => "E3EH:U3",
            Chart::E3EHU4 => "E3EH:U4",
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrameResult {
    pub chart: Chart,
    pub frame: GroupElement,
    /// The frame as an exact motion, when the input is exact and the frame
    /// rotates by a multiple of π/2.
    pub exact_frame: Option<ExactMotion>,
    /// Closed-form canonical parameters; `induced_action(frame, p)` agrees
    /// with them.
    pub canonical: KTParams,
    pub label: StratumLabel,
}

pub fn moving_frame(p: &KTParams) -> Result<FrameResult> {
    moving_frame_with(p, &Tolerances::DEFAULT)
}

pub fn moving_frame_with(p: &KTParams, tol: &Tolerances) -> Result<FrameResult> {
    let label = classify(p, tol)?;
    let (chart, frame) = match label.stratum {
        Stratum::E0 => (Chart::Fixed, GroupElement::IDENTITY),
        Stratum::E1 => frame_e1(p),
        Stratum::E2 => frame_e2(p),
        Stratum::E3P => frame_e3p(p),
        Stratum::E3EH => frame_e3eh(p),
    };
    let exact_frame = p
        .exact()
        .and_then(|a| snap_exact_frame(label.stratum, a, &frame));
    let frame = match &exact_frame {
        Some(m) => m.to_group_element(),
        None => frame,
    };
    let canonical = closed_form(label.stratum, p);
    Ok(FrameResult {
        chart,
        frame,
        exact_frame,
        canonical,
        label,
    })
}

/// Canonical parameters of `p` from its invariants.
///
/// * E1: `(λ_min, λ_max, 0, 0, 0, 0)`
/// * E2: `(I1/I2, I1/I2, 0, 0, 0, I2)`
/// * E3P: `(I2/I1, I2/I1, 0, 0, √I1, 0)`
/// * E3EH: `P⁺` when `I1 > 0`, `P⁻` when `I1 < 0`
///
/// The result is exact whenever the input is exact and the square roots
/// involved are rational.
pub fn canonical_form(p: &KTParams) -> Result<KTParams> {
    canonical_form_with(p, &Tolerances::DEFAULT)
}

pub fn canonical_form_with(p: &KTParams, tol: &Tolerances) -> Result<KTParams> {
    let label = classify(p, tol)?;
    Ok(closed_form(label.stratum, p))
}

fn classify(p: &KTParams, tol: &Tolerances) -> Result<StratumLabel> {
    let label = stratum_with(p, tol);
    if !label.is_exact() && label.margin < tol.degenerate {
        return Err(Error::DegenerateInput {
            margin: label.margin,
        });
    }
    Ok(label)
}

fn frame_e1(p: &KTParams) -> (Chart, GroupElement) {
    let [a1, a2, a3, ..] = *p.values();
    let root = math::hypot(a1 - a2, 2.0 * a3);
    if a3 != 0.0 && (2.0 * a3).abs() >= (a1 - a2).abs() {
        let theta = math::atan((a1 - a2 + root) / (2.0 * a3));
        (Chart::E1U1, GroupElement::new(theta, 0.0, 0.0))
    } else {
        let theta = math::atan((2.0 * a3 + root) / (a2 - a1)) - FRAC_PI_4;
        (Chart::E1U2, GroupElement::new(theta, 0.0, 0.0))
    }
}

fn frame_e2(p: &KTParams) -> (Chart, GroupElement) {
    let [_, _, _, a4, a5, a6] = *p.values();
    (Chart::E2U, GroupElement::new(0.0, a5 / a6, a4 / a6))
}

fn frame_e3p(p: &KTParams) -> (Chart, GroupElement) {
    let [a1, a2, a3, a4, a5, _] = *p.values();
    let i1 = a4 * a4 + a5 * a5;
    let x = (a1 - a2) * (a4 * a4 - a5 * a5) - 4.0 * a3 * a4 * a5;
    let y = a1 * a4 * a5 - a2 * a4 * a5 - a3 * a5 * a5 + a3 * a4 * a4;
    if a5 == 0.0 {
        // Boundary between the two charts: the limit of the first.
        let theta = -a4.signum() * FRAC_PI_2;
        let root = math::sqrt(i1);
        let g = GroupElement::new(theta, root * x / (2.0 * i1 * i1), root * y / (i1 * i1));
        return (Chart::E3PU1, g);
    }
    // α5 · sqrt((α4² + α5²) / α5²), written without the overflow-prone ratio.
    let factor = a5.signum() * math::sqrt(i1);
    let theta = -math::atan(a4 / a5);
    let a = factor * x / (2.0 * i1 * i1);
    let b = factor * y / (i1 * i1);
    if a5 > 0.0 {
        (Chart::E3PU1, GroupElement::new(theta, a, b))
    } else {
        let shifted = if theta <= 0.0 { theta + PI } else { theta - PI };
        (Chart::E3PU2, GroupElement::new(shifted, -a, -b))
    }
}

fn iotas_f64(p: &KTParams) -> (f64, f64) {
    match p.exact() {
        Some(a) => {
            let (i1, i2) = algebra::iotas(a);
            (scalar::to_f64(&i1), scalar::to_f64(&i2))
        }
        None => algebra::iotas(p.values()),
    }
}

fn frame_e3eh(p: &KTParams) -> (Chart, GroupElement) {
    let [_, _, _, a4, a5, a6] = *p.values();
    let (iota1, iota2) = iotas_f64(p);
    let translation = |theta: f64| {
        let (s, c) = (math::sin(theta), math::cos(theta));
        ((a5 * c - a4 * s) / a6, (a4 * c + a5 * s) / a6)
    };
    if iota1.abs() >= iota2.abs() {
        let theta1 = -0.5 * math::atan(2.0 * iota2 / iota1);
        let (a1, b1) = translation(theta1);
        if iota1 > 0.0 {
            (Chart::E3EHU1, GroupElement::new(theta1, a1, b1))
        } else if theta1 > 0.0 {
            (Chart::E3EHU2, GroupElement::new(theta1 - FRAC_PI_2, b1, -a1))
        } else {
            (Chart::E3EHU2, GroupElement::new(theta1 + FRAC_PI_2, -b1, a1))
        }
    } else {
        let theta2 = 0.5 * math::atan(iota1 / (2.0 * iota2));
        let (a2, b2) = translation(theta2);
        let r = FRAC_1_SQRT_2;
        if iota2 > 0.0 {
            let g = GroupElement::new(theta2 - FRAC_PI_4, r * (a2 + b2), r * (b2 - a2));
            (Chart::E3EHU3, g)
        } else {
            let g = GroupElement::new(theta2 + FRAC_PI_4, r * (a2 - b2), r * (a2 + b2));
            (Chart::E3EHU4, g)
        }
    }
}

/// Replaces a numerically computed frame by an exact motion when its angle is
/// a multiple of π/2 and the exact motion lands on the cross-section.
fn snap_exact_frame(s: Stratum, a: &[Rational; 6], frame: &GroupElement) -> Option<ExactMotion> {
    let turns = frame.theta() / FRAC_PI_2;
    let k = libm::round(turns);
    if (turns - k).abs() > 1e-9 {
        return None;
    }
    let k = (k as i64).rem_euclid(4) as u8;
    let (c, s_) = ExactMotion::new(k, Rational::zero(), Rational::zero()).cos_sin();
    let [_, _, _, a4, a5, a6] = a.clone();
    let (ta, tb) = match s {
        Stratum::E0 | Stratum::E1 => (Rational::zero(), Rational::zero()),
        Stratum::E2 => (&a5 / &a6, &a4 / &a6),
        Stratum::E3P => {
            let r = &a5 * &c - &a4 * &s_;
            if !r.is_positive() {
                return None;
            }
            let zero = Rational::zero();
            let rotated = algebra::induced(a, &c, &s_, &zero, &zero);
            let ta = (&rotated[1] - &rotated[0]) / (Rational::from_integer(2.into()) * &r);
            let tb = -(&rotated[2] / &r);
            (ta, tb)
        }
        Stratum::E3EH => (
            (&a5 * &c - &a4 * &s_) / &a6,
            (&a4 * &c + &a5 * &s_) / &a6,
        ),
    };
    let m = ExactMotion::new(k, ta, tb);
    let image = induced_action_exact(&m, a);
    on_cross_section_exact(s, &image).then_some(m)
}

fn closed_form(s: Stratum, p: &KTParams) -> KTParams {
    if let Some(a) = p.exact() {
        if let Some(exact) = closed_form_exact(s, a) {
            return KTParams::from_rationals(exact).expect("finite");
        }
    }
    let values = match p.exact() {
        // Evaluate invariants exactly, then round once.
        Some(a) => closed_form_from_exact_invariants(s, a),
        None => closed_form_f64(s, p.values()),
    };
    KTParams::new(values).expect("canonical parameters are finite off the boundaries")
}

fn closed_form_f64(s: Stratum, a: &[f64; 6]) -> [f64; 6] {
    match s {
        Stratum::E0 => *a,
        Stratum::E1 => {
            let [a1, a2, a3, ..] = *a;
            let mean = 0.5 * (a1 + a2);
            let radius = 0.5 * math::hypot(a1 - a2, 2.0 * a3);
            [mean - radius, mean + radius, 0.0, 0.0, 0.0, 0.0]
        }
        Stratum::E2 => {
            let [i1, i2] = algebra::leaf_e2(a);
            [i1 / i2, i1 / i2, 0.0, 0.0, 0.0, i2]
        }
        Stratum::E3P => {
            let [i1, i2] = algebra::leaf_e3p(a);
            [i2 / i1, i2 / i1, 0.0, 0.0, math::sqrt(i1), 0.0]
        }
        Stratum::E3EH => {
            let [i1, i2, _] = algebra::leaf_e3eh(a);
            let delta1 = algebra::deltas(a)[0];
            elliptic_point(i1, i2, delta1)
        }
    }
}

fn closed_form_from_exact_invariants(s: Stratum, a: &[Rational; 6]) -> [f64; 6] {
    let f = scalar::to_f64;
    match s {
        Stratum::E0 => a.clone().map(|q| f(&q)),
        Stratum::E1 => {
            let [i1, _] = algebra::leaf_e1(a);
            let root = math::sqrt(f(&algebra::deltas(a)[2]));
            let mean = 0.5 * f(&i1);
            [mean - 0.5 * root, mean + 0.5 * root, 0.0, 0.0, 0.0, 0.0]
        }
        Stratum::E2 => {
            let [i1, i2] = algebra::leaf_e2(a);
            let ratio = f(&(i1 / &i2));
            [ratio, ratio, 0.0, 0.0, 0.0, f(&i2)]
        }
        Stratum::E3P => {
            let [i1, i2] = algebra::leaf_e3p(a);
            let ratio = f(&(&i2 / &i1));
            [ratio, ratio, 0.0, 0.0, math::sqrt(f(&i1)), 0.0]
        }
        Stratum::E3EH => {
            let [i1, i2, _] = algebra::leaf_e3eh(a);
            let delta1 = algebra::deltas(a)[0].clone();
            let mid = f(&(&i2 / (Rational::from_integer(2.into()) * &i1)));
            let root = math::sqrt(f(&delta1)) / (2.0 * f(&i1).abs());
            ordered_pair(f(&i1), mid, root)
        }
    }
}

/// `P±` with the half-gap written as `√Δ1 / (2|I1|)`, which equals
/// `sqrt(I3/I1 + (I2/(2 I1))²)` on E3EH but avoids its cancellation.
fn elliptic_point(i1: f64, i2: f64, delta1: f64) -> [f64; 6] {
    let mid = i2 / (2.0 * i1);
    let root = math::sqrt(delta1) / (2.0 * i1.abs());
    ordered_pair(i1, mid, root)
}

fn ordered_pair(i1: f64, mid: f64, root: f64) -> [f64; 6] {
    if i1 > 0.0 {
        [mid + root, mid - root, 0.0, 0.0, 0.0, i1]
    } else {
        [mid - root, mid + root, 0.0, 0.0, 0.0, i1]
    }
}

fn closed_form_exact(s: Stratum, a: &[Rational; 6]) -> Option<[Rational; 6]> {
    let zero = Rational::zero();
    let two = Rational::from_integer(2.into());
    match s {
        Stratum::E0 => Some(a.clone()),
        Stratum::E1 => {
            let [i1, _] = algebra::leaf_e1(a);
            let root = scalar::exact_sqrt(&algebra::deltas(a)[2])?;
            Some([
                (&i1 - &root) / &two,
                (&i1 + &root) / &two,
                zero.clone(),
                zero.clone(),
                zero.clone(),
                zero,
            ])
        }
        Stratum::E2 => {
            let [i1, i2] = algebra::leaf_e2(a);
            let ratio = &i1 / &i2;
            Some([ratio.clone(), ratio, zero.clone(), zero.clone(), zero, i2])
        }
        Stratum::E3P => {
            let [i1, i2] = algebra::leaf_e3p(a);
            let root = scalar::exact_sqrt(&i1)?;
            let ratio = &i2 / &i1;
            Some([ratio.clone(), ratio, zero.clone(), zero.clone(), root, zero])
        }
        Stratum::E3EH => {
            let [i1, i2, i3] = algebra::leaf_e3eh(a);
            let mid = &i2 / (&two * &i1);
            let root = scalar::exact_sqrt(&(&i3 / &i1 + &mid * &mid))?;
            let (first, second) = if i1.is_positive() {
                (&mid + &root, &mid - &root)
            } else {
                (&mid - &root, &mid + &root)
            };
            Some([first, second, zero.clone(), zero.clone(), zero, i1])
        }
    }
}

fn on_cross_section_exact(s: Stratum, c: &[Rational; 6]) -> bool {
    let z = |i: usize| c[i].is_zero();
    match s {
        Stratum::E0 => c[0] == c[1] && (2..6).all(z),
        Stratum::E1 => (2..6).all(z) && c[0] < c[1],
        Stratum::E2 => c[0] == c[1] && (2..5).all(z) && !z(5),
        Stratum::E3P => c[0] == c[1] && z(2) && z(3) && z(5) && c[4].is_positive(),
        Stratum::E3EH => (2..5).all(z) && (&c[5] * (&c[0] - &c[1])).is_positive(),
    }
}

/// Whether `c` satisfies the defining equalities and inequalities of the
/// cross-section of stratum `s`: exactly for exact parameters, otherwise with
/// equalities relaxed to `|x| ≤ tol · max(1, max |αi|)`.
pub fn on_cross_section(s: Stratum, c: &KTParams, tol: f64) -> bool {
    if let Some(e) = c.exact() {
        return on_cross_section_exact(s, e);
    }
    let v = c.values();
    let eps = tol * c.max_abs().max(1.0);
    let z = |i: usize| v[i].abs() <= eps;
    let eq = |i: usize, j: usize| (v[i] - v[j]).abs() <= eps;
    match s {
        Stratum::E0 => eq(0, 1) && (2..6).all(z),
        Stratum::E1 => (2..6).all(z) && v[0] < v[1],
        Stratum::E2 => eq(0, 1) && (2..5).all(z) && !z(5),
        Stratum::E3P => eq(0, 1) && z(2) && z(3) && z(5) && v[4] > 0.0,
        Stratum::E3EH => (2..5).all(z) && v[5] * (v[0] - v[1]) > 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::induced_action;
    use crate::scalar::{int, rat};

    fn kt(r: [(i64, i64); 6]) -> KTParams {
        KTParams::from_ratios(r).unwrap()
    }

    fn close(x: f64, y: f64) -> bool {
        (x - y).abs() <= 1e-12 * x.abs().max(y.abs()).max(1.0)
    }

    #[test]
    fn quartic_frame_is_a_shift() {
        let f = moving_frame(&kt([(3, 4), (0, 1), (0, 1), (0, 1), (-1, 2), (1, 1)])).unwrap();
        assert_eq!(f.chart, Chart::E3EHU1);
        assert_eq!(f.frame, GroupElement::new(0.0, -0.5, 0.0));
        assert_eq!(f.exact_frame, Some(ExactMotion::new(0, rat(-1, 2), int(0))));
        let expected = [(3, 4), (-1, 4), (0, 1), (0, 1), (0, 1), (1, 1)].map(|(n, d)| rat(n, d));
        assert_eq!(f.canonical.exact().unwrap(), &expected);
    }

    #[test]
    fn parabolic_frames() {
        let f = moving_frame(&kt([(1, 1), (-3, 1), (5, 1), (1, 1), (2, 1), (0, 1)])).unwrap();
        assert_eq!(f.chart, Chart::E3PU1);
        let s5 = 5f64.sqrt();
        assert!(close(f.frame.theta(), -(0.5f64).atan()));
        assert!(close(f.frame.a, -26.0 * s5 / 25.0));
        assert!(close(f.frame.b, -7.0 * s5 / 25.0));
        assert!(f.exact_frame.is_none());
        let c = f.canonical.values();
        assert!(close(c[0], 21.0 / 5.0) && close(c[1], 21.0 / 5.0) && close(c[4], s5));

        let f = moving_frame(&kt([(-2, 1), (5, 1), (7, 1), (0, 1), (-1, 1), (0, 1)])).unwrap();
        assert_eq!(f.chart, Chart::E3PU2);
        assert_eq!(f.frame, GroupElement::new(PI, 3.5, -7.0));
        assert_eq!(f.exact_frame, Some(ExactMotion::new(2, rat(7, 2), int(-7))));
        let expected = [(-2, 1), (-2, 1), (0, 1), (0, 1), (1, 1), (0, 1)].map(|(n, d)| rat(n, d));
        assert_eq!(f.canonical.exact().unwrap(), &expected);
    }

    #[test]
    fn polar_frames_are_translations() {
        let f = moving_frame(&kt([(2, 1), (1, 1), (2, 3), (1, 1), (2, 1), (-3, 1)])).unwrap();
        assert_eq!(f.chart, Chart::E2U);
        assert_eq!(f.exact_frame, Some(ExactMotion::new(0, rat(-2, 3), rat(-1, 3))));
        let expected = [(7, 3), (7, 3), (0, 1), (0, 1), (0, 1), (-3, 1)].map(|(n, d)| rat(n, d));
        assert_eq!(f.canonical.exact().unwrap(), &expected);
    }

    #[test]
    fn elliptic_frames() {
        let f = moving_frame(&kt([(2, 1), (1, 1), (0, 1), (1, 1), (1, 1), (4, 1)])).unwrap();
        assert_eq!(f.chart, Chart::E3EHU1);
        let t = 0.5 * (0.5f64).atan();
        assert!(close(f.frame.theta(), -t));
        assert!(close(f.frame.a, 0.25 * t.cos() + 0.25 * t.sin()));
        assert!(close(f.frame.b, 0.25 * t.cos() - 0.25 * t.sin()));

        // Both U2 and U3 apply here; U2 wins on |ι1| = 4 > |ι2| = 1 and
        // produces the same element as the U3 entry.
        let f = moving_frame(&kt([(2, 1), (1, 1), (0, 1), (1, 1), (1, 1), (-4, 1)])).unwrap();
        assert_eq!(f.chart, Chart::E3EHU2);
        let t = 0.5 * 2f64.atan();
        assert!(close(f.frame.theta(), -t - FRAC_PI_4));
        assert!(close(f.frame.a, -(2f64.sqrt() / 4.0) * t.cos()));
        assert!(close(f.frame.b, (2f64.sqrt() / 4.0) * t.sin()));
    }

    #[test]
    fn cartesian_frames_diagonalize() {
        for p in [
            kt([(1, 1), (-6, 1), (2, 1), (0, 1), (0, 1), (0, 1)]),
            kt([(-4, 1), (9, 1), (1, 1), (0, 1), (0, 1), (0, 1)]),
            kt([(3, 1), (1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]),
            kt([(1, 1), (3, 1), (0, 1), (0, 1), (0, 1), (0, 1)]),
            kt([(2, 1), (2, 1), (-1, 1), (0, 1), (0, 1), (0, 1)]),
        ] {
            let f = moving_frame(&p).unwrap();
            let image = induced_action(&f.frame, &p.to_float());
            assert!(on_cross_section(Stratum::E1, &image, 1e-12), "{p:?} -> {image:?}");
            let c = f.canonical.values();
            assert!(close(image.alpha(1), c[0]) && close(image.alpha(2), c[1]));
        }
        let f = moving_frame(&kt([(3, 1), (1, 1), (0, 1), (0, 1), (0, 1), (0, 1)])).unwrap();
        assert_eq!(f.chart, Chart::E1U2);
        assert_eq!(f.exact_frame.map(|m| m.quarter_turns), Some(3));
    }

    #[test]
    fn degenerate_float_input_is_refused() {
        // Relative Δ1 = α5⁴ = 1e-8: classified E3 but too close to E2.
        let p = KTParams::new([1.0, 1.0, 0.0, 0.0, 1e-2, 1.0]).unwrap();
        match moving_frame(&p) {
            Err(Error::DegenerateInput { margin }) => assert!(margin < 1e-7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn metric_multiple_uses_identity() {
        let f = moving_frame(&kt([(4, 1), (4, 1), (0, 1), (0, 1), (0, 1), (0, 1)])).unwrap();
        assert_eq!(f.chart, Chart::Fixed);
        assert_eq!(f.frame, GroupElement::IDENTITY);
    }
}
