#![allow(dead_code)]

use ktweb_core::scalar::{int, rat};
use ktweb_core::separability::{kt_one_form, transform_potential};
use ktweb_core::{ExactMotion, GroupElement, KTParams, Poly2, Rational, Stratum};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const STRATA: [Stratum; 4] = [Stratum::E1, Stratum::E2, Stratum::E3P, Stratum::E3EH];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(r: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    r.random_range(lo..hi)
}

/// Magnitude in `[lo, hi)` with a random sign.
pub fn signed(r: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    let m = uniform(r, lo, hi);
    if r.random_bool(0.5) {
        m
    } else {
        -m
    }
}

pub fn group_element(r: &mut impl Rng) -> GroupElement {
    GroupElement::new(
        uniform(r, -std::f64::consts::PI, std::f64::consts::PI),
        uniform(r, -3.0, 3.0),
        uniform(r, -3.0, 3.0),
    )
}

pub fn params(r: &mut impl Rng) -> KTParams {
    KTParams::new(std::array::from_fn(|_| uniform(r, -3.0, 3.0))).unwrap()
}

/// A random point on the cross-section of `s`, well away from its boundary.
pub fn canonical_point(r: &mut impl Rng, s: Stratum) -> [f64; 6] {
    let c = uniform(r, -2.0, 2.0);
    match s {
        Stratum::E0 => [c, c, 0.0, 0.0, 0.0, 0.0],
        Stratum::E1 => {
            let gap = uniform(r, 0.5, 3.0);
            [c, c + gap, 0.0, 0.0, 0.0, 0.0]
        }
        Stratum::E2 => [c, c, 0.0, 0.0, 0.0, signed(r, 0.5, 2.0)],
        Stratum::E3P => [c, c, 0.0, 0.0, uniform(r, 0.5, 2.0), 0.0],
        Stratum::E3EH => {
            let a6 = signed(r, 0.5, 2.0);
            let gap = uniform(r, 0.5, 2.0) * a6.signum();
            [c + gap, c, 0.0, 0.0, 0.0, a6]
        }
    }
}

/// A random point of stratum `s`: a canonical point moved by a random motion.
pub fn stratum_point(r: &mut impl Rng, s: Stratum) -> KTParams {
    let canonical = KTParams::new(canonical_point(r, s)).unwrap();
    let g = GroupElement::new(
        uniform(r, -std::f64::consts::PI, std::f64::consts::PI),
        uniform(r, -1.5, 1.5),
        uniform(r, -1.5, 1.5),
    );
    ktweb_core::induced_action(&g, &canonical)
}

pub fn small_rational(r: &mut impl Rng, bound: i64) -> Rational {
    rat(r.random_range(-bound..=bound), r.random_range(1..=4))
}

pub fn exact_motion(r: &mut impl Rng) -> ExactMotion {
    ExactMotion::new(r.random_range(0..4), small_rational(r, 6), small_rational(r, 6))
}

/// A rational point on the cross-section of `s`.
pub fn exact_canonical_point(r: &mut impl Rng, s: Stratum) -> [Rational; 6] {
    let z = Rational::zero;
    let c = small_rational(r, 6);
    let pos = |r: &mut _| rat(r_pos(r), r_den(r));
    match s {
        Stratum::E0 => [c.clone(), c, z(), z(), z(), z()],
        Stratum::E1 => [c.clone(), &c + pos(r), z(), z(), z(), z()],
        Stratum::E2 => {
            let a6 = if r.random_bool(0.5) { pos(r) } else { -pos(r) };
            [c.clone(), c, z(), z(), z(), a6]
        }
        Stratum::E3P => [c.clone(), c, z(), z(), pos(r), z()],
        Stratum::E3EH => {
            let a6 = if r.random_bool(0.5) { pos(r) } else { -pos(r) };
            let gap = if a6 > z() { pos(r) } else { -pos(r) };
            [&c + gap, c, z(), z(), z(), a6]
        }
    }
}

fn r_pos(r: &mut impl Rng) -> i64 {
    r.random_range(1..=6)
}

fn r_den(r: &mut impl Rng) -> i64 {
    r.random_range(1..=3)
}

/// Curl of `K̂ dV` as a polynomial.
pub fn curl(p: &KTParams, v: &Poly2) -> Poly2 {
    let [w1, w2] = kt_one_form(p, v).unwrap();
    &w2.diff(1) - &w1.diff(2)
}

/// Exponents of all monomials of total degree at most `d`.
pub fn monomials(d: u32) -> Vec<(u32, u32)> {
    (0..=d).flat_map(|n| (0..=n).map(move |i| (i, n - i))).collect()
}

/// Basis of the potentials of degree at most `d` compatible with `p`, from
/// the kernel of the (linear) compatibility map over the rationals.
pub fn compatible_basis(p: &KTParams, d: u32) -> Vec<Poly2> {
    let basis = monomials(d);
    let columns: Vec<Poly2> = basis
        .iter()
        .map(|&(i, j)| curl(p, &Poly2::monomial(i, j, int(1)).unwrap()))
        .collect();
    let rows: Vec<(u32, u32)> = {
        let mut keys: Vec<(u32, u32)> = columns
            .iter()
            .flat_map(|c| c.terms().map(|(i, j, _)| (i, j)).collect::<Vec<_>>())
            .collect();
        keys.sort();
        keys.dedup();
        keys
    };
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&(i, j)| columns.iter().map(|c| c.coeff(i, j)).collect())
        .collect();
    let pivots = row_reduce(&mut m, basis.len());
    let free: Vec<usize> = (0..basis.len()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut coeffs = vec![Rational::zero(); basis.len()];
            coeffs[f] = int(1);
            for (row, &pc) in pivots.iter().enumerate() {
                coeffs[pc] = -m[row][f].clone();
            }
            Poly2::from_terms(basis.iter().zip(coeffs).map(|(&(i, j), c)| (i, j, c))).unwrap()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot column of each row.
fn row_reduce(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(found) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, found);
        let inv = int(1) / m[row][col].clone();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[row].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &factor * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// A random compatible pair `(p, V)` built in canonical coordinates and
/// moved by a random exact motion.
pub fn compatible_pair(r: &mut impl Rng, s: Stratum, d: u32) -> (KTParams, Poly2) {
    let canonical = KTParams::from_rationals(exact_canonical_point(r, s)).unwrap();
    let basis = compatible_basis(&canonical, d);
    let v_bar = loop {
        let v = basis.iter().fold(Poly2::zero(), |acc, b| {
            &acc + &b.scale(&int(r.random_range(-3..=3)))
        });
        if v.degree().unwrap_or(0) >= 2 {
            break v;
        }
    };
    // g moves the canonical tensor to p; the potential follows as V̄ ∘ g⁻¹.
    let g = exact_motion(r);
    let p = KTParams::from_rationals(ktweb_core::induced_action_exact(&g, canonical.exact().unwrap())).unwrap();
    let (v, approximate) = transform_potential(&v_bar, &g.to_group_element(), Some(&g)).unwrap();
    assert!(!approximate);
    (p, v)
}

pub fn rel_close(x: f64, y: f64, tol: f64, scale: f64) -> bool {
    (x - y).abs() <= tol * scale.max(x.abs()).max(y.abs()).max(1.0)
}
