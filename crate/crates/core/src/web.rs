//! Coordinate-web curves of a Killing tensor.
//!
//! Curves are built from the separable coordinates `(u, v)` of the canonical
//! tensor and carried back into the original plane by the inverse frame:
//!
//! * Cartesian: `x̄ = (u, v)`
//! * Polar: `x̄ = (u cos v, u sin v)`
//! * Parabolic: `x̄ = ((u² − v²)/2, u v)`, `u ≥ 0`
//! * Elliptic-hyperbolic: `x̄ = (k cosh u cos v, k sinh u sin v)`,
//!   `k² = (ᾱ1 − ᾱ2)/ᾱ6`
//!
//! Family 0 holds the level curves of `u`, family 1 those of `v`.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::frames::moving_frame;
use crate::group::GroupElement;
use crate::math;
use crate::params::{KTParams, Point2};
use crate::stratify::WebType;

const GRID: usize = 97;

/// Closed axis-aligned rectangle `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Region {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        let finite = [x0, y0, x1, y1].iter().all(|v| v.is_finite());
        if !finite || x0 >= x1 || y0 >= y1 {
            return Err(Error::InvalidArgument("region must be a finite, non-empty rectangle"));
        }
        Ok(Self { x0, y0, x1, y1 })
    }

    pub fn contains(&self, p: Point2) -> bool {
        p.x1 >= self.x0 && p.x1 <= self.x1 && p.x2 >= self.y0 && p.x2 <= self.y1
    }

    fn grid(&self) -> impl Iterator<Item = Point2> + '_ {
        let step = |lo: f64, hi: f64, k: usize| lo + (hi - lo) * k as f64 / (GRID - 1) as f64;
        (0..GRID).flat_map(move |i| {
            (0..GRID).map(move |j| Point2::new(step(self.x0, self.x1, i), step(self.y0, self.y1, j)))
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WebPlot {
    pub web: WebType,
    /// Polylines of the two orthogonal foliations, in original coordinates.
    pub families: [Vec<Vec<Point2>>; 2],
    /// Centre (polar), focus (parabolic) or foci (elliptic-hyperbolic).
    pub singular_points: Vec<Point2>,
}

impl WebPlot {
    pub fn polyline_count(&self) -> usize {
        self.families[0].len() + self.families[1].len()
    }
}

#[derive(Debug, Clone, Copy)]
enum Coords {
    Cartesian,
    Polar,
    Parabolic,
    Elliptic { k: f64 },
}

impl Coords {
    fn point_at(self, u: f64, v: f64) -> Point2 {
        match self {
            Coords::Cartesian => Point2::new(u, v),
            Coords::Polar => Point2::new(u * math::cos(v), u * math::sin(v)),
            Coords::Parabolic => Point2::new(0.5 * (u * u - v * v), u * v),
            Coords::Elliptic { k } => Point2::new(
                k * math::cosh(u) * math::cos(v),
                k * math::sinh(u) * math::sin(v),
            ),
        }
    }

    fn coordinates_of(self, x: Point2) -> (f64, f64) {
        match self {
            Coords::Cartesian => (x.x1, x.x2),
            Coords::Polar => (math::hypot(x.x1, x.x2), math::atan2(x.x2, x.x1)),
            Coords::Parabolic => {
                let r = math::hypot(x.x1, x.x2);
                let u = math::sqrt((r + x.x1).max(0.0));
                let v = if u > 0.0 {
                    x.x2 / u
                } else {
                    math::sqrt((r - x.x1).max(0.0))
                };
                (u, v)
            }
            Coords::Elliptic { k } => {
                let plus = math::hypot(x.x1 - k, x.x2);
                let minus = math::hypot(x.x1 + k, x.x2);
                let u = math::acosh(((plus + minus) / (2.0 * k)).max(1.0));
                let cos_v = ((minus - plus) / (2.0 * k)).clamp(-1.0, 1.0);
                let v = libm::acos(cos_v);
                (u, if x.x2 < 0.0 { -v } else { v })
            }
        }
    }

    fn v_is_angle(self) -> bool {
        matches!(self, Coords::Polar | Coords::Elliptic { .. })
    }

    fn singular_points(self) -> Vec<Point2> {
        match self {
            Coords::Cartesian => Vec::new(),
            Coords::Polar | Coords::Parabolic => alloc::vec![Point2::ORIGIN],
            Coords::Elliptic { k } => alloc::vec![Point2::new(-k, 0.0), Point2::new(k, 0.0)],
        }
    }
}

/// Smallest arc `[lo, hi]` (with `hi − lo ≤ 2π`) covering all the angles.
fn angular_range(mut angles: Vec<f64>) -> (f64, f64) {
    angles.sort_by(f64::total_cmp);
    let n = angles.len();
    let mut best_gap = angles[0] + TAU - angles[n - 1];
    let mut start = 0;
    for i in 1..n {
        let gap = angles[i] - angles[i - 1];
        if gap > best_gap {
            best_gap = gap;
            start = i;
        }
    }
    if best_gap < 1e-3 {
        return (-PI, PI);
    }
    let lo = angles[start];
    let hi = if start == 0 { angles[n - 1] } else { angles[start - 1] + TAU };
    (lo, hi)
}

fn linear_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

fn levels(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (i as f64 + 0.5) * (hi - lo) / n as f64)
}

/// Keeps the in-region runs of a sampled curve.
fn clip(points: impl Iterator<Item = Point2>, region: &Region, out: &mut Vec<Vec<Point2>>) {
    let mut run: Vec<Point2> = Vec::new();
    for p in points {
        if p.is_finite() && region.contains(p) {
            run.push(p);
        } else if !run.is_empty() {
            let done = core::mem::take(&mut run);
            if done.len() >= 2 {
                out.push(done);
            }
        }
    }
    if run.len() >= 2 {
        out.push(run);
    }
}

/// Web curves of `p` clipped to `region`, `n_per_family` level curves per
/// foliation, each sampled at `samples_per_curve` parameter values.
pub fn web_curves(
    p: &KTParams,
    region: &Region,
    n_per_family: usize,
    samples_per_curve: usize,
) -> Result<WebPlot> {
    if n_per_family < 1 {
        return Err(Error::InvalidArgument("at least one curve per family is required"));
    }
    if samples_per_curve < 2 {
        return Err(Error::InvalidArgument("at least two samples per curve are required"));
    }
    let frame = moving_frame(p)?;
    let web = frame.label.web_type();
    let c = frame.canonical.values();
    let coords = match web {
        WebType::MetricMultiple => return Err(Error::MetricMultiple),
        WebType::Cartesian => Coords::Cartesian,
        WebType::Polar => Coords::Polar,
        WebType::Parabolic => Coords::Parabolic,
        WebType::EllipticHyperbolic => Coords::Elliptic {
            k: math::sqrt((c[0] - c[1]) / c[5]),
        },
    };
    let g: GroupElement = frame.frame;
    let back = g.inverse();

    let samples: Vec<(f64, f64)> = region.grid().map(|x| coords.coordinates_of(g.apply(x))).collect();
    let u_range = linear_range(samples.iter().map(|s| s.0));
    let v_range = if coords.v_is_angle() {
        angular_range(samples.iter().map(|s| s.1).collect())
    } else {
        linear_range(samples.iter().map(|s| s.1))
    };

    let sweep = |(lo, hi): (f64, f64)| {
        let n = samples_per_curve;
        (0..n).map(move |k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
    };

    let mut families: [Vec<Vec<Point2>>; 2] = [Vec::new(), Vec::new()];
    for u in levels(u_range.0, u_range.1, n_per_family) {
        let points = sweep(v_range).map(|v| back.apply(coords.point_at(u, v)));
        clip(points, region, &mut families[0]);
    }
    for v in levels(v_range.0, v_range.1, n_per_family) {
        let points = sweep(u_range).map(|u| back.apply(coords.point_at(u, v)));
        clip(points, region, &mut families[1]);
    }
    let singular_points = coords
        .singular_points()
        .into_iter()
        .map(|x| back.apply(x))
        .collect();
    Ok(WebPlot {
        web,
        families,
        singular_points,
    })
}
