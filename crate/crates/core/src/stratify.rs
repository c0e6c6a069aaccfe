//! Orbit-dimension strata of the parameter space and the web type of each.
//!
//! | stratum | condition                     | orbit dim | web                 |
//! |---------|-------------------------------|-----------|---------------------|
//! | `E0`    | Δ1 = Δ2 = Δ3 = 0              | 0         | metric multiple     |
//! | `E1`    | Δ1 = Δ2 = 0, Δ3 ≠ 0           | 1         | Cartesian           |
//! | `E2`    | Δ1 = 0, Δ2 ≠ 0                | 2         | polar               |
//! | `E3P`   | Δ1 ≠ 0, α6 = 0                | 3         | parabolic           |
//! | `E3EH`  | Δ1 ≠ 0, α6 ≠ 0                | 3         | elliptic-hyperbolic |

use core::fmt;

use num_traits::Zero;

use crate::algebra;
use crate::params::KTParams;
use crate::scalar::{self, Rational};

/// Thresholds for the floating-point backend. The exact backend ignores them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// A delta counts as zero when `|Δ| ≤ zero · s^deg`, `s = max |αi|`.
    pub zero: f64,
    /// Moving frames are refused when a delta required to be non-zero has
    /// relative size below this.
    pub degenerate: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        zero: 1e-9,
        degenerate: 1e-7,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stratum {
    E0,
    E1,
    E2,
    E3P,
    E3EH,
}

impl Stratum {
    pub fn as_str(&self) -> &'static str {
        match self {
            Stratum::E0 => "E0",
            Stratum::E1 => "E1",
            Stratum::E2 => "E2",
            Stratum::E3P => "E3P",
            Stratum::E3EH => "E3EH",
        }
    }

    pub fn orbit_dimension(&self) -> usize {
        match self {
            Stratum::E0 => 0,
            Stratum::E1 => 1,
            Stratum::E2 => 2,
            Stratum::E3P | Stratum::E3EH => 3,
        }
    }

    pub fn web_type(&self) -> WebType {
        match self {
            Stratum::E0 => WebType::MetricMultiple,
            Stratum::E1 => WebType::Cartesian,
            Stratum::E2 => WebType::Polar,
            Stratum::E3P => WebType::Parabolic,
            Stratum::E3EH => WebType::EllipticHyperbolic,
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WebType {
    MetricMultiple,
    Cartesian,
    Polar,
    Parabolic,
    EllipticHyperbolic,
}

impl WebType {
    pub fn as_str(&self) -> &'static str {
        match self {
            WebType::MetricMultiple => "MetricMultiple",
            WebType::Cartesian => "Cartesian",
            WebType::Polar => "Polar",
            WebType::Parabolic => "Parabolic",
            WebType::EllipticHyperbolic => "EllipticHyperbolic",
        }
    }

    /// Number of singular points of the web (foci or centre).
    pub fn singular_point_count(&self) -> usize {
        match self {
            WebType::MetricMultiple | WebType::Cartesian => 0,
            WebType::Polar | WebType::Parabolic => 1,
            WebType::EllipticHyperbolic => 2,
        }
    }
}

impl fmt::Display for WebType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(Δ1, Δ2, Δ3)`, exact when the parameters are.
#[derive(Debug, Clone, PartialEq)]
pub struct Deltas {
    pub values: [f64; 3],
    pub exact: Option<[Rational; 3]>,
}

const DEGREES: [i32; 3] = [4, 1, 2];

pub fn deltas(p: &KTParams) -> Deltas {
    match p.exact() {
        Some(a) => {
            let exact = algebra::deltas(a);
            Deltas {
                values: [0, 1, 2].map(|i| scalar::to_f64(&exact[i])),
                exact: Some(exact),
            }
        }
        None => Deltas {
            values: algebra::deltas(p.values()),
            exact: None,
        },
    }
}

/// Stratum of a point together with the data that decided it.
#[derive(Debug, Clone, PartialEq)]
pub struct StratumLabel {
    pub stratum: Stratum,
    pub deltas: Deltas,
    /// Smallest relative size `|Δ| / s^deg` among the deltas the stratum
    /// requires to be non-zero; `+∞` for `E0`. Small values flag
    /// ill-conditioned floating-point classification.
    pub margin: f64,
}

impl StratumLabel {
    pub fn web_type(&self) -> WebType {
        self.stratum.web_type()
    }

    pub fn is_exact(&self) -> bool {
        self.deltas.exact.is_some()
    }
}

pub fn stratum(p: &KTParams) -> StratumLabel {
    stratum_with(p, &Tolerances::DEFAULT)
}

pub fn stratum_with(p: &KTParams, tol: &Tolerances) -> StratumLabel {
    let deltas = deltas(p);
    let s = p.max_abs();
    let relative = |i: usize| {
        let scale = libm::pow(s, DEGREES[i] as f64);
        if scale > 0.0 {
            deltas.values[i].abs() / scale
        } else {
            0.0
        }
    };
    let nonzero: [bool; 3] = match &deltas.exact {
        Some(e) => [!e[0].is_zero(), !e[1].is_zero(), !e[2].is_zero()],
        None => [0, 1, 2].map(|i| relative(i) > tol.zero),
    };
    let (stratum, required): (Stratum, &[usize]) = match nonzero {
        [true, false, _] => (Stratum::E3P, &[0]),
        [true, true, _] => (Stratum::E3EH, &[0, 1]),
        [false, true, _] => (Stratum::E2, &[1]),
        [false, false, true] => (Stratum::E1, &[2]),
        [false, false, false] => (Stratum::E0, &[]),
    };
    let margin = required
        .iter()
        .map(|&i| relative(i))
        .fold(f64::INFINITY, f64::min);
    StratumLabel {
        stratum,
        deltas,
        margin,
    }
}

pub fn web_type(p: &KTParams) -> WebType {
    stratum(p).web_type()
}
