//! Orthogonal separability of natural Hamiltonians `H = ½|p|² + V` with
//! polynomial potentials.
//!
//! A Killing tensor `K` is compatible with `V` when the one-form `K̂ dV`,
//! with components
//!
//! ```text
//! ω1 = K11 ∂1V + K12 ∂2V,    ω2 = K12 ∂1V + K22 ∂2V,
//! ```
//!
//! is closed. Its potential `U` (`dU = K̂ dV`, `U(0, 0) = 0`) completes the
//! quadratic first integral `F = ½ K^{ij} p_i p_j + U`.

use crate::error::{Error, Result};
use crate::frames::{moving_frame_with, Chart};
use crate::group::{ExactMotion, GroupElement};
use crate::params::KTParams;
use crate::poly::Poly2;
use crate::scalar::{self, Rational};
use crate::stratify::{Stratum, Tolerances, WebType};

/// Coefficients whose magnitude falls below this fraction of the largest one
/// are dropped from floating-point compositions.
pub const COEFFICIENT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SeparationReport {
    pub web: WebType,
    pub chart: Chart,
    pub frame: GroupElement,
    pub exact_frame: Option<ExactMotion>,
    pub canonical_kt: KTParams,
    /// `V(g⁻¹ · x̄)` for the frame `g`.
    pub transformed_potential: Poly2,
    /// Set when the frame rotation is not a multiple of π/2, so the
    /// transformed potential carries rounded coefficients.
    pub approximate: bool,
    pub first_integral_potential: Option<Poly2>,
}

/// `(K11, K12, K22)` as polynomials in `(x¹, x²)`.
pub fn kt_polynomials(p: &KTParams) -> [Poly2; 3] {
    let [a1, a2, a3, a4, a5, a6] = p.to_rationals();
    let two = Rational::from_integer(2.into());
    let build = |terms: [(u32, u32, Rational); 3]| Poly2::from_terms(terms).expect("degree 2");
    [
        build([(0, 0, a1), (0, 1, &two * &a4), (0, 2, a6.clone())]),
        Poly2::from_terms([(0, 0, a3), (1, 0, -a4), (0, 1, -a5.clone()), (1, 1, -a6.clone())])
            .expect("degree 2"),
        build([(0, 0, a2), (1, 0, &two * &a5), (2, 0, a6)]),
    ]
}

/// `(ω1, ω2) = K̂ dV`.
pub fn kt_one_form(p: &KTParams, v: &Poly2) -> Result<[Poly2; 2]> {
    let [k11, k12, k22] = kt_polynomials(p);
    let (v1, v2) = (v.diff(1), v.diff(2));
    let w1 = &k11.checked_mul(&v1)? + &k12.checked_mul(&v2)?;
    let w2 = &k12.checked_mul(&v1)? + &k22.checked_mul(&v2)?;
    Ok([w1, w2])
}

/// Whether `d(K̂ dV) = 0`, decided exactly. Floating-point parameters are
/// read as the exact binary rationals they denote.
pub fn compatible(p: &KTParams, v: &Poly2) -> Result<bool> {
    let [w1, w2] = kt_one_form(p, v)?;
    Ok((&w2.diff(1) - &w1.diff(2)).is_zero())
}

/// `U` with `dU = K̂ dV` and `U(0, 0) = 0`.
pub fn first_integral_potential(p: &KTParams, v: &Poly2) -> Result<Poly2> {
    let [w1, w2] = kt_one_form(p, v)?;
    if !(&w2.diff(1) - &w1.diff(2)).is_zero() {
        return Err(Error::Incompatible);
    }
    // ∫₀^{x¹} ω1(t, 0) dt + ∫₀^{x²} ω2(x¹, t) dt
    Ok(&w1.restrict_x2_zero().integrate(1)? + &w2.integrate(2)?)
}

/// `V ∘ g⁻¹`, exactly when `g` rotates by a multiple of π/2.
///
/// Returns the polynomial and whether its coefficients were rounded.
pub fn transform_potential(v: &Poly2, g: &GroupElement, exact: Option<&ExactMotion>) -> Result<(Poly2, bool)> {
    let owned;
    let motion = match exact {
        Some(m) => Some(m),
        None => {
            owned = ExactMotion::from_group_element(g);
            owned.as_ref()
        }
    };
    if let Some(m) = motion {
        return Ok((compose_inverse(v, &m.cos_sin(), &m.a, &m.b)?, false));
    }
    let (c, s) = g.cos_sin();
    let q = |x: f64| scalar::from_f64(x).ok_or(Error::NonFinite { index: 0 });
    let composed = compose_inverse(v, &(q(c)?, q(s)?), &q(g.a)?, &q(g.b)?)?;
    Ok((composed.rounded(COEFFICIENT_TOLERANCE), true))
}

fn compose_inverse(v: &Poly2, cs: &(Rational, Rational), a: &Rational, b: &Rational) -> Result<Poly2> {
    let (c, s) = cs;
    // x¹ = c(x̄¹ − a) + s(x̄² − b),  x² = −s(x̄¹ − a) + c(x̄² − b)
    let forms = [
        [c.clone(), s.clone(), -(c * a + s * b)],
        [-s.clone(), c.clone(), s * a - c * b],
    ];
    v.compose_affine(&forms)
}

pub fn separate(p: &KTParams, v: &Poly2) -> Result<SeparationReport> {
    separate_with(p, v, &Tolerances::DEFAULT)
}

pub fn separate_with(p: &KTParams, v: &Poly2, tol: &Tolerances) -> Result<SeparationReport> {
    let first_integral = first_integral_potential(p, v)?;
    let frame = moving_frame_with(p, tol)?;
    if frame.label.stratum == Stratum::E0 {
        return Err(Error::MetricMultiple);
    }
    let (transformed, approximate) = transform_potential(v, &frame.frame, frame.exact_frame.as_ref())?;
    Ok(SeparationReport {
        web: frame.label.web_type(),
        chart: frame.chart,
        frame: frame.frame,
        exact_frame: frame.exact_frame,
        canonical_kt: frame.canonical,
        transformed_potential: transformed,
        approximate,
        first_integral_potential: Some(first_integral),
    })
}
