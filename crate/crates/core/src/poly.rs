//! Sparse bivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::params::Point2;
use crate::scalar::{self, Rational};

pub const DEFAULT_MAX_DEGREE: u32 = 32;

/// `Σ c_ij (x¹)^i (x²)^j`. Zero coefficients are never stored and every
/// monomial has total degree at most `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
    max_degree: u32,
}

impl Default for Poly2 {
    fn default() -> Self {
        Self::zero()
    }
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::zero_with_max_degree(DEFAULT_MAX_DEGREE)
    }

    pub fn zero_with_max_degree(max_degree: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            max_degree,
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.insert_unchecked((0, 0), c);
        p
    }

    pub fn x1() -> Self {
        Self::monomial(1, 0, Rational::one()).expect("degree 1")
    }

    pub fn x2() -> Self {
        Self::monomial(0, 1, Rational::one()).expect("degree 1")
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Result<Self> {
        Self::from_terms([(i, j, c)])
    }

    /// Sums the given monomials; repeated exponents accumulate.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        Self::from_terms_with_max_degree(terms, DEFAULT_MAX_DEGREE)
    }

    pub fn from_terms_with_max_degree<I>(terms: I, max_degree: u32) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        let mut p = Self::zero_with_max_degree(max_degree);
        for (i, j, c) in terms {
            p.check_degree(i, j)?;
            p.insert_unchecked((i, j), c);
        }
        Ok(p)
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn check_degree(&self, i: u32, j: u32) -> Result<()> {
        let degree = i.saturating_add(j);
        if degree > self.max_degree {
            return Err(Error::DegreeOverflow {
                degree,
                max: self.max_degree,
            });
        }
        Ok(())
    }

    fn insert_unchecked(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// `(i, j, c)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero_with_max_degree(self.max_degree);
        if c.is_zero() {
            return out;
        }
        for (&k, v) in &self.terms {
            out.terms.insert(k, v * c);
        }
        out
    }

    pub fn checked_mul(&self, other: &Poly2) -> Result<Poly2> {
        let max_degree = self.max_degree.min(other.max_degree);
        let mut out = Self::zero_with_max_degree(max_degree);
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                let (i, j) = (i1 + i2, j1 + j2);
                out.check_degree(i, j)?;
                out.insert_unchecked((i, j), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Poly2> {
        let mut out = Self::constant(Rational::one());
        out.max_degree = self.max_degree;
        for _ in 0..n {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Partial derivative with respect to `x¹` (`var = 1`) or `x²` (`var = 2`).
    pub fn diff(&self, var: u8) -> Poly2 {
        let mut out = Self::zero_with_max_degree(self.max_degree);
        for (&(i, j), c) in &self.terms {
            let (k, key) = match var {
                1 => (i, (i.wrapping_sub(1), j)),
                _ => (j, (i, j.wrapping_sub(1))),
            };
            if k > 0 {
                out.insert_unchecked(key, c * Rational::from_integer(k.into()));
            }
        }
        out
    }

    /// Antiderivative in `x¹` or `x²` vanishing on that variable's zero set.
    pub fn integrate(&self, var: u8) -> Result<Poly2> {
        let mut out = Self::zero_with_max_degree(self.max_degree);
        for (&(i, j), c) in &self.terms {
            let (k, key) = match var {
                1 => (i + 1, (i + 1, j)),
                _ => (j + 1, (i, j + 1)),
            };
            out.check_degree(key.0, key.1)?;
            out.insert_unchecked(key, c / Rational::from_integer(k.into()));
        }
        Ok(out)
    }

    /// The terms free of `x²`, i.e. `P(x¹, 0)`.
    pub fn restrict_x2_zero(&self) -> Poly2 {
        let mut out = Self::zero_with_max_degree(self.max_degree);
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                out.terms.insert((i, j), c.clone());
            }
        }
        out
    }

    pub fn eval(&self, x: Point2) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| scalar::to_f64(c) * libm::pow(x.x1, i as f64) * libm::pow(x.x2, j as f64))
            .sum()
    }

    pub fn eval_exact(&self, x: &[Rational; 2]) -> Rational {
        let mut total = Rational::zero();
        for (&(i, j), c) in &self.terms {
            total += c * num_traits::pow(x[0].clone(), i as usize) * num_traits::pow(x[1].clone(), j as usize);
        }
        total
    }

    /// `P(ℓ1(x), ℓ2(x))` for affine forms `ℓk(x) = l[k][0] x¹ + l[k][1] x² + l[k][2]`.
    pub fn compose_affine(&self, l: &[[Rational; 3]; 2]) -> Result<Poly2> {
        let linear = |row: &[Rational; 3]| {
            Poly2::from_terms_with_max_degree(
                [
                    (1, 0, row[0].clone()),
                    (0, 1, row[1].clone()),
                    (0, 0, row[2].clone()),
                ],
                self.max_degree,
            )
        };
        let (u, v) = (linear(&l[0])?, linear(&l[1])?);
        let top = self.degree().unwrap_or(0);
        let mut u_pows: Vec<Poly2> = Vec::with_capacity(top as usize + 1);
        let mut v_pows: Vec<Poly2> = Vec::with_capacity(top as usize + 1);
        let mut one = Poly2::constant(Rational::one());
        one.max_degree = self.max_degree;
        u_pows.push(one.clone());
        v_pows.push(one);
        for k in 1..=top as usize {
            u_pows.push(u_pows[k - 1].checked_mul(&u)?);
            v_pows.push(v_pows[k - 1].checked_mul(&v)?);
        }
        let mut out = Self::zero_with_max_degree(self.max_degree);
        for (&(i, j), c) in &self.terms {
            let term = u_pows[i as usize].checked_mul(&v_pows[j as usize])?.scale(c);
            out = &out + &term;
        }
        Ok(out)
    }

    /// Rounds every coefficient to `f64` and drops those below
    /// `rel · max |c|`, keeping the exact binary value of the rest.
    pub fn rounded(&self, rel: f64) -> Poly2 {
        let rounded: Vec<((u32, u32), f64)> = self
            .terms
            .iter()
            .map(|(&k, c)| (k, scalar::to_f64(c)))
            .collect();
        let largest = rounded.iter().fold(0.0f64, |m, (_, c)| m.max(c.abs()));
        let mut out = Self::zero_with_max_degree(self.max_degree);
        for (k, c) in rounded {
            if c.abs() >= rel * largest {
                if let Some(q) = scalar::from_f64(c) {
                    out.insert_unchecked(k, q);
                }
            }
        }
        out
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out.max_degree = self.max_degree.max(other.max_degree);
        for (&k, c) in &other.terms {
            out.insert_unchecked(k, c.clone());
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, other: &Poly2) -> Poly2 {
        self + &(-other)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})", scalar::format_rational(c))?;
            match i {
                0 => {}
                1 => f.write_str("*x1")?,
                _ => write!(f, "*x1^{i}")?,
            }
            match j {
                0 => {}
                1 => f.write_str("*x2")?,
                _ => write!(f, "*x2^{j}")?,
            }
        }
        Ok(())
    }
}
