//! Killing tensor parameters, points of the plane and pointwise components.

use alloc::boxed::Box;

use crate::algebra;
use crate::error::{Error, Result};
use crate::math;
use crate::scalar::{self, Rational};

/// A point `(x¹, x²)` of the Euclidean plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x1: f64,
    pub x2: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x1: 0.0, x2: 0.0 };

    pub const fn new(x1: f64, x2: f64) -> Self {
        Self { x1, x2 }
    }

    pub fn distance(&self, other: &Point2) -> f64 {
        math::hypot(self.x1 - other.x1, self.x2 - other.x2)
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite()
    }
}

/// Symmetric 2×2 matrix `[[k11, k12], [k12, k22]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymMat2 {
    pub k11: f64,
    pub k12: f64,
    pub k22: f64,
}

impl SymMat2 {
    pub const fn new(k11: f64, k12: f64, k22: f64) -> Self {
        Self { k11, k12, k22 }
    }

    pub fn trace(&self) -> f64 {
        self.k11 + self.k22
    }

    pub fn det(&self) -> f64 {
        self.k11 * self.k22 - self.k12 * self.k12
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mean = 0.5 * (self.k11 + self.k22);
        let radius = math::hypot(0.5 * (self.k11 - self.k22), self.k12);
        (mean - radius, mean + radius)
    }

    /// Unit eigenvectors `(for λ_min, for λ_max)`.
    pub fn eigenvectors(&self) -> ([f64; 2], [f64; 2]) {
        let phi = 0.5 * math::atan2(2.0 * self.k12, self.k11 - self.k22);
        let (s, c) = (math::sin(phi), math::cos(phi));
        ([-s, c], [c, s])
    }

    pub fn mul_vec(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.k11 * v[0] + self.k12 * v[1],
            self.k12 * v[0] + self.k22 * v[1],
        ]
    }

    /// `R · self · Rᵀ` for the rotation by `theta`.
    pub fn rotated(&self, theta: f64) -> SymMat2 {
        let (s, c) = (math::sin(theta), math::cos(theta));
        // R M = [[c k11 - s k12, c k12 - s k22], [s k11 + c k12, s k12 + c k22]]
        let m11 = c * self.k11 - s * self.k12;
        let m12 = c * self.k12 - s * self.k22;
        let m21 = s * self.k11 + c * self.k12;
        let m22 = s * self.k12 + c * self.k22;
        SymMat2 {
            k11: m11 * c - m12 * s,
            k12: m11 * s + m12 * c,
            k22: m21 * s + m22 * c,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.k11.abs().max(self.k12.abs()).max(self.k22.abs())
    }
}

/// The six parameters `α1..α6` of a Killing two-tensor on E².
///
/// The `f64` values are always present. When the tensor was built from
/// rationals the exact values are kept alongside and the `f64` values are
/// their nearest roundings.
#[derive(Debug, Clone, PartialEq)]
pub struct KTParams {
    values: [f64; 6],
    exact: Option<Box<[Rational; 6]>>,
}

impl KTParams {
    pub fn new(values: [f64; 6]) -> Result<Self> {
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self {
            values,
            exact: None,
        })
    }

    pub fn from_rationals(exact: [Rational; 6]) -> Result<Self> {
        let values = [0, 1, 2, 3, 4, 5].map(|i| scalar::to_f64(&exact[i]));
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self {
            values,
            exact: Some(Box::new(exact)),
        })
    }

    /// Shorthand for integer or `n/d` parameters.
    pub fn from_ratios(ratios: [(i64, i64); 6]) -> Result<Self> {
        Self::from_rationals(ratios.map(|(n, d)| scalar::rat(n, d)))
    }

    pub fn values(&self) -> &[f64; 6] {
        &self.values
    }

    pub fn exact(&self) -> Option<&[Rational; 6]> {
        self.exact.as_deref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// `α_i` for `i` in `1..=6`.
    pub fn alpha(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// Exact rational values, converting the `f64` values bit-exactly when no
    /// exact representation was supplied.
    pub fn to_rationals(&self) -> [Rational; 6] {
        match &self.exact {
            Some(e) => (**e).clone(),
            None => self
                .values
                .map(|v| scalar::from_f64(v).expect("finite by construction")),
        }
    }

    /// Drops the exact representation.
    pub fn to_float(&self) -> KTParams {
        KTParams {
            values: self.values,
            exact: None,
        }
    }

    pub(crate) fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

/// Components `K^{ij}` of the tensor at `x`.
pub fn kt_components(p: &KTParams, x: Point2) -> SymMat2 {
    let [k11, k12, k22] = algebra::components(p.values(), &x.x1, &x.x2);
    SymMat2 { k11, k12, k22 }
}

/// Eigenvalues of `K^{ij}(x)`, ascending.
pub fn kt_eigenvalues(p: &KTParams, x: Point2) -> (f64, f64) {
    kt_components(p, x).eigenvalues()
}
