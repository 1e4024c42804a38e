//! Dense univariate polynomials and rational functions over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::format_rational;

/// Coefficients lowest degree first; empty for the zero polynomial, otherwise
/// the last coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x - root`.
    pub fn linear_factor(root: &BigRational) -> Self {
        Self::from_coeffs(vec![-root.clone(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn evaluate(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Substitutes `x -> x^k`.
    pub fn inflate(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Polynomial::zero(), self.clone()));
        };
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&(BigRational::one() / lc)),
            None => Polynomial::zero(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// `self(f(t))` for a rational function `f`, as a rational function in `t`.
    pub fn compose_rational(&self, f: &RationalFunction) -> RationalFunction {
        // Horner: acc = acc * f + c
        let mut acc = RationalFunction::from(Polynomial::zero());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * f) + &RationalFunction::from(Polynomial::constant(c.clone()));
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    /// `(c0 + c1*x^1 + ...)`, lowest degree first, zero terms skipped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in(f, "x")
    }
}

impl Polynomial {
    pub fn fmt_in(&self, f: &mut impl fmt::Write, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", format_rational(c))?;
            } else {
                write!(f, "{}*{var}^{i}", format_rational(c))?;
            }
        }
        write!(f, ")")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

/// `num / den` with `den` nonzero. Not kept in lowest terms; equality is
/// decided by cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn pow(&self, exp: u32) -> Self {
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    pub fn evaluate(&self, at: &BigRational) -> Result<BigRational> {
        let den = self.den.evaluate(at);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.evaluate(at) / den)
    }

    /// The polynomial equal to this function, if the denominator divides.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        self.num.exact_div(&self.den)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let neg = RationalFunction {
            num: -&rhs.num,
            den: rhs.den.clone(),
        };
        self + &neg
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn basic_arithmetic() {
        let a = Polynomial::from_i64(&[-1, 1]);
        let b = Polynomial::from_i64(&[1, 1]);
        let prod = &a * &b;
        assert_eq!(prod, Polynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(prod.evaluate(&q(3, 2)), q(5, 4));
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(&prod - &prod, Polynomial::zero());
        assert_eq!(prod.to_string(), "(-1 + 1*x^2)");
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn expansion_of_shifted_squares() {
        let mut acc = Polynomial::one();
        for c in [q(2, 1), q(3, 2), q(4, 3), q(5, 4)] {
            acc = &acc * &(&Polynomial::monomial(q(1, 1), 2) - &Polynomial::constant(c));
        }
        assert_eq!(acc.degree(), Some(8));
        assert_eq!(acc.leading_coeff(), Some(&q(1, 1)));
        // constant term is the product of the shifts
        assert_eq!(acc.coeff(0), q(2 * 3 * 4 * 5, 2 * 3 * 4));
        assert!(acc.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero));
    }

    #[test]
    fn division_errors() {
        let a = Polynomial::from_i64(&[1, 0, 1]);
        assert_eq!(a.div_rem(&Polynomial::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            a.exact_div(&Polynomial::from_i64(&[-1, 1])),
            Err(Error::InexactDivision)
        );
        let (qt, r) = Polynomial::from_i64(&[1]).div_rem(&a).unwrap();
        assert!(qt.is_zero());
        assert_eq!(r, Polynomial::from_i64(&[1]));
    }

    #[test]
    fn gcd_and_squarefree() {
        let x1 = Polynomial::from_i64(&[-1, 1]);
        let x2 = Polynomial::from_i64(&[-2, 1]);
        let a = &(&x1 * &x1) * &x2;
        assert!(!a.is_squarefree());
        assert_eq!(a.gcd(&a.derivative()), x1);
        assert!((&x1 * &x2).is_squarefree());
        assert!(Polynomial::from_i64(&[-1, 0, 0, 1]).is_squarefree());
        assert!(!Polynomial::zero().is_squarefree());
    }

    #[test]
    fn composition_with_rational_function() {
        // (x^2 - 1) at x = t / (1 - t)
        let f = RationalFunction::new(Polynomial::x(), Polynomial::from_i64(&[1, -1])).unwrap();
        let g = Polynomial::from_i64(&[-1, 0, 1]).compose_rational(&f);
        // = (2t - 1) / (1 - t)^2
        let want = RationalFunction::new(
            Polynomial::from_i64(&[-1, 2]),
            Polynomial::from_i64(&[1, -2, 1]),
        )
        .unwrap();
        assert_eq!(g, want);
        assert_eq!(g.evaluate(&q(1, 3)).unwrap(), q(-3, 4));
        assert_eq!(f.evaluate(&q(1, 1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn inflate_substitutes_power() {
        let p = Polynomial::from_i64(&[3, 2, 1]);
        assert_eq!(p.inflate(3), Polynomial::from_i64(&[3, 0, 0, 2, 0, 0, 1]));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-6i64..6, 1i64..4), 0..6)
            .prop_map(|cs| Polynomial::from_coeffs(cs.into_iter().map(|(n, d)| q(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn product_divides_back(p in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            prop_assert_eq!((&p * &d).exact_div(&d).unwrap(), p);
        }

        #[test]
        fn div_rem_reconstructs(p in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            let (qt, r) = p.div_rem(&d).unwrap();
            prop_assert_eq!(&(&qt * &d) + &r, p);
            prop_assert!(r.degree() < d.degree() || r.is_zero());
        }

        #[test]
        fn evaluation_is_a_ring_map(a in small_poly(), b in small_poly(), n in -5i64..5) {
            let at = q(n, 3);
            prop_assert_eq!((&a * &b).evaluate(&at), a.evaluate(&at) * b.evaluate(&at));
            prop_assert_eq!((&a + &b).evaluate(&at), a.evaluate(&at) + b.evaluate(&at));
        }
    }
}
