//! Serializable reports. Field order is output order.

use ktweb_core::scalar::format_rational;
use ktweb_core::{
    ExactMotion, FrameResult, GroupElement, KTParams, LeafLabel, Point2, Poly2, SeparationReport, StratumLabel,
    WebPlot,
};
use serde::Serialize;

fn exact_strings(p: &KTParams) -> Option<Vec<String>> {
    p.exact().map(|e| e.iter().map(format_rational).collect())
}

fn frame_triple(g: &GroupElement) -> [f64; 3] {
    [g.theta(), g.a, g.b]
}

/// `[quarter_turns, a, b]` with `θ = quarter_turns · π/2`.
#[derive(Debug, Serialize)]
pub struct ExactFrame {
    pub quarter_turns: u8,
    pub a: String,
    pub b: String,
}

impl From<&ExactMotion> for ExactFrame {
    fn from(m: &ExactMotion) -> Self {
        Self {
            quarter_turns: m.quarter_turns,
            a: format_rational(&m.a),
            b: format_rational(&m.b),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Classification {
    pub stratum: &'static str,
    pub web: &'static str,
    pub leaf: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaf_exact: Option<Vec<String>>,
    pub deltas: [f64; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deltas_exact: Option<Vec<String>>,
    pub orbit_dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
}

impl Classification {
    pub fn new(label: &LeafLabel) -> Self {
        let s: &StratumLabel = &label.stratum;
        Self {
            stratum: s.stratum.as_str(),
            web: s.web_type().as_str(),
            leaf: label.invariants.clone(),
            leaf_exact: label.exact.as_ref().map(|e| e.iter().map(format_rational).collect()),
            deltas: s.deltas.values,
            deltas_exact: s.deltas.exact.as_ref().map(|e| e.iter().map(format_rational).collect()),
            orbit_dimension: s.stratum.orbit_dimension(),
            margin: (!s.is_exact() && s.margin.is_finite()).then_some(s.margin),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Equivalence {
    pub equivalent: bool,
    pub labels: [Classification; 2],
}

#[derive(Debug, Serialize)]
pub struct Frame {
    pub stratum: &'static str,
    pub chart: &'static str,
    pub frame: [f64; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frame_exact: Option<ExactFrame>,
    pub canonical: [f64; 6],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_exact: Option<Vec<String>>,
}

impl Frame {
    pub fn new(f: &FrameResult) -> Self {
        Self {
            stratum: f.label.stratum.as_str(),
            chart: f.chart.as_str(),
            frame: frame_triple(&f.frame),
            frame_exact: f.exact_frame.as_ref().map(ExactFrame::from),
            canonical: *f.canonical.values(),
            canonical_exact: exact_strings(&f.canonical),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Canonical {
    pub stratum: &'static str,
    pub canonical: [f64; 6],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_exact: Option<Vec<String>>,
}

/// `[[i, j, "p/q"], ...]` in increasing exponent order.
pub fn poly_terms(p: &Poly2) -> Vec<(u32, u32, String)> {
    p.terms().map(|(i, j, c)| (i, j, format_rational(c))).collect()
}

#[derive(Debug, Serialize)]
pub struct Separation {
    pub web: &'static str,
    pub chart: &'static str,
    pub frame: [f64; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frame_exact: Option<ExactFrame>,
    pub canonical: [f64; 6],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_exact: Option<Vec<String>>,
    pub approximate: bool,
    pub transformed_potential: Vec<(u32, u32, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_integral_potential: Option<Vec<(u32, u32, String)>>,
}

impl Separation {
    pub fn new(r: &SeparationReport) -> Self {
        Self {
            web: r.web.as_str(),
            chart: r.chart.as_str(),
            frame: frame_triple(&r.frame),
            frame_exact: r.exact_frame.as_ref().map(ExactFrame::from),
            canonical: *r.canonical_kt.values(),
            canonical_exact: exact_strings(&r.canonical_kt),
            approximate: r.approximate,
            transformed_potential: poly_terms(&r.transformed_potential),
            first_integral_potential: r.first_integral_potential.as_ref().map(poly_terms),
        }
    }
}

fn xy(p: &Point2) -> [f64; 2] {
    [p.x1, p.x2]
}

#[derive(Debug, Serialize)]
pub struct Plot {
    pub web: &'static str,
    pub families: [Vec<Vec<[f64; 2]>>; 2],
    pub singular_points: Vec<[f64; 2]>,
}

impl Plot {
    pub fn new(plot: &WebPlot) -> Self {
        let family = |f: &Vec<Vec<Point2>>| f.iter().map(|c| c.iter().map(xy).collect()).collect();
        Self {
            web: plot.web.as_str(),
            families: [family(&plot.families[0]), family(&plot.families[1])],
            singular_points: plot.singular_points.iter().map(xy).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}
