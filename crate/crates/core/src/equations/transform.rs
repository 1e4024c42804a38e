//! The two-point transform: the cover `z^d = (x - a_i)(x - a_j)^{d-1}`
//! rewritten as a cyclic curve in a new coordinate `t`.
//!
//! With `z = t (x - a_j)` one gets `t^d = (x - a_i)/(x - a_j)`, hence
//! `x = (a_i - a_j t^d)/(1 - t^d)`, and substituting into the base equation
//! gives, up to a d-th power,
//!
//! ```text
//! w^d = prod_{k != i,j} (t^d - c_k)^{alpha_k},   c_k = (a_k - a_i)/(a_k - a_j).
//! ```
//!
//! Radicals are never taken. [`verify_two_point_identity`] checks the identity
//! after clearing them:
//!
//! ```text
//! prod_k (x(t) - a_k)^{alpha_k} (1 - t^d)^s
//!   = t^{d alpha_i} (a_i - a_j)^{alpha_i + alpha_j} prod_{k != i,j} (a_k - a_j)^{alpha_k}
//!     prod_{k != i,j} (t^d - c_k)^{alpha_k}
//! ```
//!
//! where `s = sum_k alpha_k`.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::poly::{Polynomial, RationalFunction};
use crate::curves::{genus_from_profile, ramification_profile, CyclicCurve};
use crate::error::{Error, Result};
use crate::ff_linear::{ExponentVector, PrimeDegree};
use crate::rational::format_rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPointTransform {
    d: PrimeDegree,
    i: usize,
    j: usize,
    a_i: BigRational,
    a_j: BigRational,
    alpha_i: u32,
    alpha_j: u32,
    /// `(k, c_k)` for `k != i, j`, in position order.
    c_values: Vec<(usize, BigRational)>,
    /// `alpha_k` for the same positions.
    new_exponents: Vec<u32>,
    exponent_sum: u64,
    /// `(a_k - a_j, alpha_k)` for the same positions.
    scale_factors: Vec<(BigRational, u32)>,
}

/// Pairs `(i, j)` for which the transform is listed: ordered pairs, or
/// unordered (`i < j`) when `d = 2`.
pub fn admissible_pairs(curve: &CyclicCurve) -> Vec<(usize, usize)> {
    let r = curve.r();
    let unordered = curve.degree().get() == 2;
    (0..r)
        .flat_map(|i| (0..r).map(move |j| (i, j)))
        .filter(|&(i, j)| if unordered { i < j } else { i != j })
        .collect()
}

pub fn two_point_transform(curve: &CyclicCurve, i: usize, j: usize) -> Result<TwoPointTransform> {
    let r = curve.r();
    for pos in [i, j] {
        if pos >= r {
            return Err(Error::PositionOutOfRange(pos, r));
        }
    }
    if i == j {
        return Err(Error::SamePosition);
    }
    let points = curve.branch_points();
    let alpha = curve.alpha().entries();
    let (a_i, a_j) = (points[i].clone(), points[j].clone());
    let others: Vec<usize> = (0..r).filter(|&k| k != i && k != j).collect();
    let c_values = others
        .iter()
        .map(|&k| (k, (&points[k] - &a_i) / (&points[k] - &a_j)))
        .collect();
    let scale_factors = others
        .iter()
        .map(|&k| (&points[k] - &a_j, alpha[k]))
        .collect();
    Ok(TwoPointTransform {
        d: curve.degree(),
        i,
        j,
        a_i,
        a_j,
        alpha_i: alpha[i],
        alpha_j: alpha[j],
        c_values,
        new_exponents: others.iter().map(|&k| alpha[k]).collect(),
        exponent_sum: alpha.iter().map(|&e| u64::from(e)).sum(),
        scale_factors,
    })
}

impl TwoPointTransform {
    pub fn positions(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn c_values(&self) -> &[(usize, BigRational)] {
        &self.c_values
    }

    pub fn new_exponents(&self) -> &[u32] {
        &self.new_exponents
    }

    pub fn exponent_sum(&self) -> u64 {
        self.exponent_sum
    }

    /// Replaces one `c_k`; used to check that the verifier notices.
    pub fn with_c_value(mut self, index: usize, c: BigRational) -> Self {
        self.c_values[index].1 = c;
        self
    }

    /// `x(t) = (a_i - a_j t^d) / (1 - t^d)`.
    pub fn x_of_t(&self) -> RationalFunction {
        let d = self.d.get() as usize;
        let num =
            &Polynomial::constant(self.a_i.clone()) - &Polynomial::monomial(self.a_j.clone(), d);
        let den = &Polynomial::one() - &Polynomial::monomial(BigRational::one(), d);
        RationalFunction::new(num, den).expect("1 - t^d is nonzero")
    }

    /// `prod_{k != i,j} (t^d - c_k)^{alpha_k}` expanded.
    pub fn transformed_rhs(&self) -> Polynomial {
        let d = self.d.get() as usize;
        self.c_values
            .iter()
            .zip(&self.new_exponents)
            .fold(Polynomial::one(), |acc, ((_, c), &e)| {
                &acc * &Polynomial::linear_factor(c).inflate(d).pow(e)
            })
    }

    /// The constant `(a_i - a_j)^{alpha_i + alpha_j} prod (a_k - a_j)^{alpha_k}`.
    pub fn scale_constant(&self) -> BigRational {
        let base = pow_q(&(&self.a_i - &self.a_j), self.alpha_i + self.alpha_j);
        self.scale_factors
            .iter()
            .fold(base, |acc, (f, e)| acc * pow_q(f, *e))
    }

    /// The new curve as cyclic-cover data in `t`: each `c_k` contributes the
    /// `d` roots of `t^d = c_k`, all with exponent `alpha_k`.
    pub fn transformed_exponents(&self) -> ExponentVector {
        let d = self.d.get() as usize;
        let raw: Vec<i64> = self
            .new_exponents
            .iter()
            .flat_map(|&e| std::iter::repeat_n(i64::from(e), d))
            .collect();
        ExponentVector::reduce(&raw, self.d)
    }

    /// Riemann-Hurwitz genus of `w^d = prod (t^d - c_k)^{alpha_k}`.
    pub fn transformed_genus(&self) -> Result<u64> {
        genus_from_profile(&ramification_profile(&self.transformed_exponents())?)
    }

    pub fn to_text(&self) -> String {
        let d = self.d;
        let mut s = format!(
            "z^{d} = (x - {})^1 * (x - {})^{}\n",
            format_rational(&self.a_i),
            format_rational(&self.a_j),
            d.get() - 1
        );
        write!(
            s,
            "x = ({} - {}*t^{d}) / (1 - t^{d})\nw^{d} = ",
            format_rational(&self.a_i),
            format_rational(&self.a_j)
        )
        .unwrap();
        let factors: Vec<String> = self
            .c_values
            .iter()
            .zip(&self.new_exponents)
            .map(|((_, c), e)| format!("(t^{d} - {})^{e}", format_rational(c)))
            .collect();
        s.push_str(&factors.join(" * "));
        s
    }

    pub fn to_json_value(&self) -> TransformJson {
        TransformJson {
            d: self.d.get(),
            i: self.i,
            j: self.j,
            x_numerator: coeff_strings(self.x_of_t().numerator()),
            x_denominator: coeff_strings(self.x_of_t().denominator()),
            c_values: self
                .c_values
                .iter()
                .zip(&self.new_exponents)
                .map(|((k, c), &exp)| CValueJson {
                    k: *k,
                    c: format_rational(c),
                    exp,
                })
                .collect(),
            exponent_sum: self.exponent_sum,
            ai_minus_aj: format_rational(&(&self.a_i - &self.a_j)),
            scale_factors: self
                .scale_factors
                .iter()
                .map(|(f, e)| ScaleJson {
                    ak_minus_aj: format_rational(f),
                    exp: *e,
                })
                .collect(),
        }
    }
}

fn coeff_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

fn pow_q(q: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * q)
}

#[derive(Debug, Clone, Serialize)]
pub struct TransformJson {
    pub d: u32,
    pub i: usize,
    pub j: usize,
    pub x_numerator: Vec<String>,
    pub x_denominator: Vec<String>,
    pub c_values: Vec<CValueJson>,
    pub exponent_sum: u64,
    pub ai_minus_aj: String,
    pub scale_factors: Vec<ScaleJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CValueJson {
    pub k: usize,
    pub c: String,
    pub exp: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScaleJson {
    pub ak_minus_aj: String,
    pub exp: u32,
}

/// Checks the d-th power identity exactly, by expanding both sides as
/// polynomials in `t`. The left side is built from the curve itself by
/// substituting `x(t)` into each linear factor.
pub fn verify_two_point_identity(curve: &CyclicCurve, transform: &TwoPointTransform) -> bool {
    let (i, j) = transform.positions();
    let r = curve.r();
    if i >= r || j >= r || i == j || curve.degree() != transform.d {
        return false;
    }
    let d = curve.degree().get() as usize;
    let x = transform.x_of_t();
    let alpha = curve.alpha().entries();

    let mut product = RationalFunction::from(Polynomial::one());
    for (k, a_k) in curve.branch_points().iter().enumerate() {
        let factor = Polynomial::linear_factor(a_k).compose_rational(&x);
        product = &product * &factor.pow(alpha[k]);
    }
    let s: u32 = alpha.iter().sum();
    let clear = &Polynomial::one() - &Polynomial::monomial(BigRational::one(), d);
    let cleared = &product * &RationalFunction::from(clear.pow(s));
    let Ok(lhs) = cleared.to_polynomial() else {
        return false;
    };

    let rhs = &Polynomial::monomial(transform.scale_constant(), d * alpha[i] as usize)
        * &transform.transformed_rhs();
    !rhs.is_zero() && lhs == rhs
}
