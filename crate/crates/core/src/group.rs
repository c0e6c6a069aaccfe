//! Elements of SE(2) acting on the plane.

use core::f64::consts::{FRAC_PI_2, PI, TAU};

use num_traits::{One, Signed, Zero};

use crate::math;
use crate::params::Point2;
use crate::scalar::{self, Rational};

/// Reduces an angle to `(−π, π]`.
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta % TAU;
    if t <= -PI {
        t += TAU;
    } else if t > PI {
        t -= TAU;
    }
    t
}

/// Rotation by `theta` followed by translation by `(a, b)`:
/// `x̄¹ = x¹cosθ − x²sinθ + a`, `x̄² = x¹sinθ + x²cosθ + b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    theta: f64,
    pub a: f64,
    pub b: f64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        theta: 0.0,
        a: 0.0,
        b: 0.0,
    };

    pub fn new(theta: f64, a: f64, b: f64) -> Self {
        Self {
            theta: normalize_angle(theta),
            a,
            b,
        }
    }

    pub fn translation(a: f64, b: f64) -> Self {
        Self::new(0.0, a, b)
    }

    /// Angle in `(−π, π]`.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn is_finite(&self) -> bool {
        self.theta.is_finite() && self.a.is_finite() && self.b.is_finite()
    }

    pub fn cos_sin(&self) -> (f64, f64) {
        match ExactMotion::quarter_turns_of(self.theta) {
            Some(k) => {
                let (c, s) = quarter_cos_sin(k);
                (c as f64, s as f64)
            }
            None => (math::cos(self.theta), math::sin(self.theta)),
        }
    }

    pub fn apply(&self, x: Point2) -> Point2 {
        let (c, s) = self.cos_sin();
        Point2 {
            x1: x.x1 * c - x.x2 * s + self.a,
            x2: x.x1 * s + x.x2 * c + self.b,
        }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &GroupElement) -> GroupElement {
        let (c, s) = self.cos_sin();
        GroupElement::new(
            self.theta + first.theta,
            c * first.a - s * first.b + self.a,
            s * first.a + c * first.b + self.b,
        )
    }

    pub fn inverse(&self) -> GroupElement {
        let (c, s) = self.cos_sin();
        GroupElement::new(
            -self.theta,
            -(c * self.a + s * self.b),
            s * self.a - c * self.b,
        )
    }

    pub fn approx_eq(&self, other: &GroupElement, tol: f64) -> bool {
        let dtheta = normalize_angle(self.theta - other.theta).abs();
        dtheta <= tol && (self.a - other.a).abs() <= tol && (self.b - other.b).abs() <= tol
    }
}

impl Default for GroupElement {
    fn default() -> Self {
        Self::IDENTITY
    }
}

pub fn group_apply_point(g: &GroupElement, x: Point2) -> Point2 {
    g.apply(x)
}

/// `g2 ∘ g1`.
pub fn group_compose(g2: &GroupElement, g1: &GroupElement) -> GroupElement {
    g2.compose(g1)
}

pub fn group_inverse(g: &GroupElement) -> GroupElement {
    g.inverse()
}

fn quarter_cos_sin(k: u8) -> (i8, i8) {
    match k % 4 {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    }
}

/// A rigid motion whose rotation is a multiple of π/2 and whose translation
/// is rational, so it acts exactly on rational data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMotion {
    /// Rotation by `quarter_turns · π/2`, in `0..4`.
    pub quarter_turns: u8,
    pub a: Rational,
    pub b: Rational,
}

impl ExactMotion {
    pub fn new(quarter_turns: u8, a: Rational, b: Rational) -> Self {
        Self {
            quarter_turns: quarter_turns % 4,
            a,
            b,
        }
    }

    pub fn identity() -> Self {
        Self::new(0, Rational::zero(), Rational::zero())
    }

    /// Quarter-turn count when `theta` is bit-for-bit one of `0, ±π/2, π`.
    pub fn quarter_turns_of(theta: f64) -> Option<u8> {
        let t = normalize_angle(theta);
        if t == 0.0 {
            Some(0)
        } else if t == FRAC_PI_2 {
            Some(1)
        } else if t == PI {
            Some(2)
        } else if t == -FRAC_PI_2 {
            Some(3)
        } else {
            None
        }
    }

    /// Exact reading of `g` when its angle is a quarter-turn constant.
    pub fn from_group_element(g: &GroupElement) -> Option<Self> {
        let k = Self::quarter_turns_of(g.theta)?;
        Some(Self::new(k, scalar::from_f64(g.a)?, scalar::from_f64(g.b)?))
    }

    /// `(cos θ, sin θ)` as rationals.
    pub fn cos_sin(&self) -> (Rational, Rational) {
        let (c, s) = quarter_cos_sin(self.quarter_turns);
        (Rational::from_integer(c.into()), Rational::from_integer(s.into()))
    }

    pub fn theta(&self) -> f64 {
        match self.quarter_turns % 4 {
            0 => 0.0,
            1 => FRAC_PI_2,
            2 => PI,
            _ => -FRAC_PI_2,
        }
    }

    pub fn to_group_element(&self) -> GroupElement {
        GroupElement::new(self.theta(), scalar::to_f64(&self.a), scalar::to_f64(&self.b))
    }

    pub fn apply(&self, x: &[Rational; 2]) -> [Rational; 2] {
        let (c, s) = self.cos_sin();
        [
            &x[0] * &c - &x[1] * &s + &self.a,
            &x[0] * &s + &x[1] * &c + &self.b,
        ]
    }

    pub fn inverse(&self) -> ExactMotion {
        let (c, s) = self.cos_sin();
        ExactMotion::new(
            (4 - self.quarter_turns) % 4,
            -(&c * &self.a + &s * &self.b),
            &s * &self.a - &c * &self.b,
        )
    }

    pub fn is_identity(&self) -> bool {
        self.quarter_turns == 0 && self.a.is_zero() && self.b.is_zero()
    }

    /// True when the rotation part is trivial or a half turn, i.e.
    /// `cos θ = ±1`.
    pub fn is_translation_like(&self) -> bool {
        self.cos_sin().0.abs().is_one()
    }
}
