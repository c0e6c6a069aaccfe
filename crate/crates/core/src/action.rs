//! The SE(2) action induced on the parameter space.

use crate::algebra;
use crate::group::{ExactMotion, GroupElement};
use crate::params::{kt_components, KTParams, Point2, SymMat2};
use crate::scalar::Rational;

/// Parameters of the tensor pushed forward by `g`.
///
/// Exact input stays exact when `g` is a quarter-turn rotation with a
/// (necessarily dyadic) translation; otherwise the result is `f64` only.
pub fn induced_action(g: &GroupElement, p: &KTParams) -> KTParams {
    if let (Some(exact), Some(m)) = (p.exact(), ExactMotion::from_group_element(g)) {
        return KTParams::from_rationals(induced_action_exact(&m, exact))
            .expect("rational parameters are finite");
    }
    let (c, s) = g.cos_sin();
    let values = algebra::induced(p.values(), &c, &s, &g.a, &g.b);
    KTParams::new(values).expect("finite group element acting on finite parameters")
}

pub fn induced_action_exact(m: &ExactMotion, a: &[Rational; 6]) -> [Rational; 6] {
    let (c, s) = m.cos_sin();
    algebra::induced(a, &c, &s, &m.a, &m.b)
}

/// `J · K(x) · Jᵀ` for the Jacobian `J` of `g` (a rotation).
fn pushed_components(g: &GroupElement, p: &KTParams, x: Point2) -> SymMat2 {
    kt_components(p, x).rotated(g.theta())
}

/// Checks `transformed` against the definitional pushforward of `p` by `g` at
/// every sample point: `K̄(g·x) = J K(x) Jᵀ` within `tol`, relative to the
/// size of the entries (absolute below unit size).
pub fn pushforward_check_params(
    g: &GroupElement,
    p: &KTParams,
    transformed: &KTParams,
    samples: &[Point2],
    tol: f64,
) -> bool {
    samples.iter().all(|&x| {
        let direct = pushed_components(g, p, x);
        let via_params = kt_components(transformed, g.apply(x));
        let scale = direct.max_abs().max(via_params.max_abs()).max(1.0);
        (direct.k11 - via_params.k11).abs() <= tol * scale
            && (direct.k12 - via_params.k12).abs() <= tol * scale
            && (direct.k22 - via_params.k22).abs() <= tol * scale
    })
}

/// Pushforward consistency of [`induced_action`] at the sample points.
pub fn pushforward_check(g: &GroupElement, p: &KTParams, samples: &[Point2], tol: f64) -> bool {
    pushforward_check_params(g, p, &induced_action(g, p), samples, tol)
}
