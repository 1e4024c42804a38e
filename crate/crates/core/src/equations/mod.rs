//! Defining equations for cyclic curves and their strongly cyclic covers.
//!
//! Equations are relations `var^d = rhs` in the single affine coordinate `x`.
//! The right-hand side is either a factored product `scalar * prod (x - root)^exp`
//! or a product of polynomials given by coefficients (used when the roots are
//! not rational).
//!
//! Text grammar, one relation per line:
//!
//! ```text
//! y^3 = (x - 0)^1 * (x - 1)^1 * (x - -1)^2 * (x - 5/2)^2
//! z^3 = (-1 + 1*x^3)
//! ```
//!
//! A scalar other than 1 is printed as a leading `c * ` term.

mod poly;
mod transform;

use std::collections::HashSet;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use poly::{Polynomial, RationalFunction};
pub use transform::{
    admissible_pairs, two_point_transform, verify_two_point_identity, TransformJson,
    TwoPointTransform,
};

use crate::covers::{isomorphic_as_covers, CoverSpec};
use crate::curves::CyclicCurve;
use crate::error::{Error, Result};
use crate::ff_linear::{ExponentVector, PrimeDegree};
use crate::rational::{format_rational, parse_rational};

/// `scalar * prod (x - root)^exp` with distinct roots and positive exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredForm {
    scalar: BigRational,
    factors: Vec<(BigRational, u32)>,
}

impl FactoredForm {
    pub fn new(scalar: BigRational, factors: Vec<(BigRational, u32)>) -> Result<Self> {
        if scalar.is_zero() {
            return Err(Error::Format("scalar must be nonzero".into()));
        }
        let mut roots = HashSet::new();
        for (root, exp) in &factors {
            if *exp == 0 {
                return Err(Error::Format("factor exponents must be positive".into()));
            }
            if !roots.insert(root) {
                return Err(Error::Format(format!(
                    "root {} appears twice",
                    format_rational(root)
                )));
            }
        }
        Ok(FactoredForm { scalar, factors })
    }

    /// `prod (x - points[k])^exponents[k]` over the nonzero exponents.
    pub fn from_exponents(points: &[BigRational], exponents: &ExponentVector) -> Self {
        let factors = points
            .iter()
            .zip(exponents.entries())
            .filter(|(_, &e)| e != 0)
            .map(|(p, &e)| (p.clone(), e))
            .collect();
        FactoredForm {
            scalar: BigRational::one(),
            factors,
        }
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn factors(&self) -> &[(BigRational, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        self.factors.iter().fold(
            Polynomial::constant(self.scalar.clone()),
            |acc, (root, e)| &acc * &Polynomial::linear_factor(root).pow(*e),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationRhs {
    Factored(FactoredForm),
    /// Product of polynomials, each kept in coefficient form.
    Product(Vec<Polynomial>),
}

impl RelationRhs {
    pub fn degree(&self) -> u64 {
        match self {
            RelationRhs::Factored(f) => f.degree(),
            RelationRhs::Product(ps) => {
                ps.iter().filter_map(Polynomial::degree).sum::<usize>() as u64
            }
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        match self {
            RelationRhs::Factored(f) => f.to_polynomial(),
            RelationRhs::Product(ps) => ps.iter().fold(Polynomial::one(), |acc, p| &acc * p),
        }
    }
}

/// `var^d = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub var: String,
    pub rhs: RelationRhs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSystem {
    d: PrimeDegree,
    relations: Vec<Relation>,
}

impl EquationSystem {
    /// Variables must be distinct and every right-hand side must have degree
    /// divisible by `d` (no ramification over infinity).
    pub fn new(d: PrimeDegree, relations: Vec<Relation>) -> Result<Self> {
        let mut names = HashSet::new();
        for rel in &relations {
            if rel.var.is_empty()
                || !rel
                    .var
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::Format(format!("bad variable name {:?}", rel.var)));
            }
            if rel.var == "x" || !names.insert(rel.var.as_str()) {
                return Err(Error::Format(format!("variable {} is not unique", rel.var)));
            }
            let residue = (rel.rhs.degree() % u64::from(d.get())) as u32;
            if residue != 0 {
                return Err(Error::NotInHyperplane(residue));
            }
        }
        Ok(EquationSystem { d, relations })
    }

    pub fn degree(&self) -> PrimeDegree {
        self.d
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, rel) in self.relations.iter().enumerate() {
            if n > 0 {
                out.push('\n');
            }
            write!(out, "{}^{} = ", rel.var, self.d).unwrap();
            let mut terms: Vec<String> = Vec::new();
            match &rel.rhs {
                RelationRhs::Factored(f) => {
                    if !f.scalar.is_one() || f.factors.is_empty() {
                        terms.push(format_rational(&f.scalar));
                    }
                    for (root, e) in &f.factors {
                        terms.push(format!("(x - {})^{e}", format_rational(root)));
                    }
                }
                RelationRhs::Product(ps) => {
                    terms.extend(ps.iter().map(Polynomial::to_string));
                }
            }
            out.push_str(&terms.join(" * "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut d = None;
        let mut relations = Vec::new();
        for line in text.lines() {
            let (lhs, rhs) = line
                .split_once(" = ")
                .ok_or_else(|| Error::Format(format!("missing ' = ' in {line:?}")))?;
            let (var, deg) = lhs
                .split_once('^')
                .ok_or_else(|| Error::Format(format!("bad left-hand side {lhs:?}")))?;
            let deg: u64 = deg
                .parse()
                .map_err(|_| Error::Format(format!("bad degree in {lhs:?}")))?;
            let deg = PrimeDegree::new(deg)?;
            if d.is_some_and(|d| d != deg) {
                return Err(Error::Format("relations use different degrees".into()));
            }
            d = Some(deg);
            relations.push(Relation {
                var: var.to_string(),
                rhs: parse_rhs(rhs)?,
            });
        }
        let d = d.ok_or_else(|| Error::Format("empty equation text".into()))?;
        Self::new(d, relations)
    }

    /// Text with unicode superscripts, for documentation only.
    pub fn to_display(&self) -> String {
        const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
        let text = self.to_text().replace(" * ", "·");
        let mut out = String::with_capacity(text.len());
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            if c != '^' {
                out.push(c);
                continue;
            }
            let mut digits = String::new();
            while let Some(&n) = chars.peek().filter(|n| n.is_ascii_digit()) {
                digits.push(n);
                chars.next();
            }
            if digits != "1" {
                out.extend(
                    digits
                        .chars()
                        .map(|n| SUP[n.to_digit(10).unwrap() as usize]),
                );
            }
        }
        out
    }

    pub fn to_json_value(&self) -> SystemJson {
        SystemJson {
            d: u64::from(self.d.get()),
            relations: self
                .relations
                .iter()
                .map(|rel| {
                    let mut r = RelationJson {
                        var: rel.var.clone(),
                        d: u64::from(self.d.get()),
                        scalar: None,
                        factors: None,
                        polynomials: None,
                    };
                    match &rel.rhs {
                        RelationRhs::Factored(f) => {
                            r.scalar = Some(format_rational(&f.scalar));
                            r.factors = Some(
                                f.factors
                                    .iter()
                                    .map(|(root, exp)| FactorJson {
                                        root: format_rational(root),
                                        exp: *exp,
                                    })
                                    .collect(),
                            );
                        }
                        RelationRhs::Product(ps) => {
                            r.polynomials = Some(
                                ps.iter()
                                    .map(|p| p.coeffs().iter().map(format_rational).collect())
                                    .collect(),
                            );
                        }
                    }
                    r
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("system serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let sys: SystemJson =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let d = PrimeDegree::new(sys.d)?;
        let mut relations = Vec::new();
        for r in sys.relations {
            if r.d != sys.d {
                return Err(Error::Format(
                    "relation degree differs from system degree".into(),
                ));
            }
            let rhs = match (r.scalar, r.factors, r.polynomials) {
                (Some(scalar), Some(factors), None) => {
                    let factors = factors
                        .into_iter()
                        .map(|f| Ok((parse_rational(&f.root)?, f.exp)))
                        .collect::<Result<Vec<_>>>()?;
                    RelationRhs::Factored(FactoredForm::new(parse_rational(&scalar)?, factors)?)
                }
                (None, None, Some(polys)) => RelationRhs::Product(
                    polys
                        .into_iter()
                        .map(|cs| {
                            let coeffs = cs
                                .iter()
                                .map(|c| parse_rational(c))
                                .collect::<Result<Vec<_>>>()?;
                            let p = Polynomial::from_coeffs(coeffs.clone());
                            if p.coeffs().len() != coeffs.len() {
                                return Err(Error::Format("trailing zero coefficient".into()));
                            }
                            Ok(p)
                        })
                        .collect::<Result<Vec<_>>>()?,
                ),
                _ => {
                    return Err(Error::Format(
                        "relation needs either scalar+factors or polynomials".into(),
                    ))
                }
            };
            relations.push(Relation { var: r.var, rhs });
        }
        Self::new(d, relations)
    }
}

fn parse_rhs(rhs: &str) -> Result<RelationRhs> {
    let bad = |t: &str| Error::Format(format!("cannot parse term {t:?}"));
    let terms: Vec<&str> = rhs.split(" * ").collect();
    if terms
        .first()
        .is_some_and(|t| t.starts_with('(') && !t.starts_with("(x - "))
    {
        let polys = terms
            .iter()
            .map(|t| parse_polynomial(t).ok_or_else(|| bad(t)))
            .collect::<Result<Vec<_>>>()?;
        return Ok(RelationRhs::Product(polys));
    }
    let mut scalar = BigRational::one();
    let mut factors = Vec::new();
    for (n, t) in terms.iter().enumerate() {
        if let Some(rest) = t.strip_prefix("(x - ") {
            let (root, exp) = rest.split_once(")^").ok_or_else(|| bad(t))?;
            let exp: u32 = exp
                .parse()
                .ok()
                .filter(|e: &u32| e.to_string() == exp)
                .ok_or_else(|| bad(t))?;
            factors.push((parse_rational(root)?, exp));
        } else if n == 0 {
            scalar = parse_rational(t)?;
            // "1" is only printed when there are no factors.
            if scalar.is_one() && terms.len() > 1 {
                return Err(bad(t));
            }
        } else {
            return Err(bad(t));
        }
    }
    Ok(RelationRhs::Factored(FactoredForm::new(scalar, factors)?))
}

fn parse_polynomial(t: &str) -> Option<Polynomial> {
    let inner = t.strip_prefix('(')?.strip_suffix(')')?;
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut last: Option<usize> = None;
    for term in inner.split(" + ") {
        let (c, deg) = match term.split_once("*x^") {
            Some((c, deg)) => (c, deg.parse::<usize>().ok().filter(|&d| d > 0)?),
            None => (term, 0),
        };
        let c = parse_rational(c).ok()?;
        if c.is_zero() || last.is_some_and(|l| deg <= l) {
            return None;
        }
        last = Some(deg);
        coeffs.resize(deg + 1, BigRational::zero());
        coeffs[deg] = c;
    }
    Some(Polynomial::from_coeffs(coeffs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemJson {
    pub d: u64,
    pub relations: Vec<RelationJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub var: String,
    pub d: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scalar: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factors: Option<Vec<FactorJson>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polynomials: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub root: String,
    pub exp: u32,
}

/// `y^d = prod (x - b_i)^{alpha_i}`.
pub fn base_equation(curve: &CyclicCurve) -> EquationSystem {
    EquationSystem {
        d: curve.degree(),
        relations: vec![Relation {
            var: "y".into(),
            rhs: RelationRhs::Factored(FactoredForm::from_exponents(
                curve.branch_points(),
                curve.alpha(),
            )),
        }],
    }
}

/// The fiber product equations `y^d = prod (x - b_i)^{alpha_i}`,
/// `z^d = prod (x - b_i)^{beta_i}`.
pub fn cover_equations(cover: &CoverSpec) -> EquationSystem {
    let curve = cover.base();
    let mut sys = base_equation(curve);
    sys.relations.push(Relation {
        var: "z".into(),
        rhs: RelationRhs::Factored(FactoredForm::from_exponents(
            curve.branch_points(),
            cover.beta(),
        )),
    });
    sys
}

/// The isomorphism `z' = zeta_d * prod (x - b_k)^{-e_k} * y^j / z` between
/// the covers of `beta1` and `beta2 = j alpha - beta1 (mod d)`.
///
/// `extraction_exponents` are the integers `e_k` with
/// `d e_k + beta2_k = j alpha_k - beta1_k`. The root of unity is left
/// symbolic; only its order `d` is recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateChange {
    pub d: u32,
    pub j: u32,
    pub extraction_exponents: Vec<i64>,
}

impl CoordinateChange {
    pub fn root_of_unity_order(&self) -> u32 {
        self.d
    }

    /// Checks `d e + beta2 = j alpha - beta1` entrywise over the integers.
    pub fn satisfies_identity(
        &self,
        alpha: &ExponentVector,
        beta1: &ExponentVector,
        beta2: &ExponentVector,
    ) -> bool {
        let n = self.extraction_exponents.len();
        if [alpha.len(), beta1.len(), beta2.len()]
            .iter()
            .any(|&l| l != n)
        {
            return false;
        }
        let d = i64::from(self.d);
        let j = i64::from(self.j);
        (0..n).all(|k| {
            d * self.extraction_exponents[k] + i64::from(beta2.entries()[k])
                == j * i64::from(alpha.entries()[k]) - i64::from(beta1.entries()[k])
        })
    }

    /// Checks the change of coordinates at the level of functions of `x`:
    /// `(prod (x - b_k)^{-e_k} y^j / z)^d` equals the `z'^d` relation, with
    /// every product expanded over Q.
    pub fn verify_by_expansion(
        &self,
        curve: &CyclicCurve,
        beta1: &ExponentVector,
        beta2: &ExponentVector,
    ) -> bool {
        let d = i64::from(self.d);
        let (mut num, mut den) = (Polynomial::one(), Polynomial::one());
        let mut push = |root: &BigRational, exp: i64| {
            let f = Polynomial::linear_factor(root).pow(exp.unsigned_abs() as u32);
            if exp >= 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        };
        for (k, root) in curve.branch_points().iter().enumerate() {
            let Some(&e) = self.extraction_exponents.get(k) else {
                return false;
            };
            push(root, -d * e);
            push(
                root,
                i64::from(self.j) * i64::from(curve.alpha().entries()[k]),
            );
            push(root, -i64::from(beta1.entries()[k]));
        }
        let lhs = RationalFunction::new(num, den).expect("product of monic factors");
        let rhs = RationalFunction::from(
            FactoredForm::from_exponents(curve.branch_points(), beta2).to_polynomial(),
        );
        lhs == rhs
    }

    /// e.g. `z' = zeta_3 * (x - 1)^1 * y^1 / z`.
    pub fn to_text(&self, points: &[BigRational]) -> String {
        let mut s = format!("z' = zeta_{}", self.d);
        for (root, &e) in points.iter().zip(&self.extraction_exponents) {
            if e != 0 {
                write!(s, " * (x - {})^{}", format_rational(root), -e).unwrap();
            }
        }
        write!(s, " * y^{} / z", self.j).unwrap();
        s
    }
}

/// Finds `j` with `beta2 = j alpha - beta1 (mod d)` and the integer
/// exponents absorbed into the new coordinate.
pub fn coordinate_change(
    alpha: &ExponentVector,
    beta1: &ExponentVector,
    beta2: &ExponentVector,
) -> Result<CoordinateChange> {
    if !isomorphic_as_covers(beta1, beta2, alpha)? {
        return Err(Error::NotIsomorphic);
    }
    let d = alpha.modulus();
    let dd = i64::from(d.get());
    for j in 0..dd {
        if ExponentVector::linear_combine(j, alpha, -1, beta1)? != *beta2 {
            continue;
        }
        let extraction_exponents = (0..alpha.len())
            .map(|k| {
                let diff = j * i64::from(alpha.entries()[k])
                    - i64::from(beta1.entries()[k])
                    - i64::from(beta2.entries()[k]);
                debug_assert_eq!(diff.rem_euclid(dd), 0);
                diff.div_euclid(dd)
            })
            .collect();
        return Ok(CoordinateChange {
            d: d.get(),
            j: j as u32,
            extraction_exponents,
        });
    }
    Err(Error::OrientationMismatch)
}

/// `y^d = f1 f2`, `z^d = f1` for a factorization over Q into two factors of
/// degree divisible by `d` with squarefree product.
pub fn rational_cover_from_factors(
    d: PrimeDegree,
    f1: &Polynomial,
    f2: &Polynomial,
) -> Result<EquationSystem> {
    for f in [f1, f2] {
        if f.is_constant() {
            return Err(Error::ConstantFactor);
        }
    }
    for f in [f1, f2] {
        let deg = f.degree().expect("nonconstant");
        if deg % d.get() as usize != 0 {
            return Err(Error::DegreeNotDivisible(deg, d.get()));
        }
    }
    if !(f1 * f2).is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    EquationSystem::new(
        d,
        vec![
            Relation {
                var: "y".into(),
                rhs: RelationRhs::Product(vec![f1.clone(), f2.clone()]),
            },
            Relation {
                var: "z".into(),
                rhs: RelationRhs::Product(vec![f1.clone()]),
            },
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::validate_curve;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn anchor3() -> CyclicCurve {
        validate_curve(3, vec![q(0, 1), q(1, 1), q(-1, 1), q(5, 2)], &[1, 1, 2, 2]).unwrap()
    }

    fn hyper6() -> CyclicCurve {
        validate_curve(2, (0..6).map(|i| q(i, 1)).collect(), &[1; 6]).unwrap()
    }

    fn v(c: &CyclicCurve, e: &[u32]) -> ExponentVector {
        ExponentVector::from_residues(e.to_vec(), c.degree()).unwrap()
    }

    #[test]
    fn base_equation_text() {
        let sys = base_equation(&anchor3());
        assert_eq!(
            sys.to_text(),
            "y^3 = (x - 0)^1 * (x - 1)^1 * (x - -1)^2 * (x - 5/2)^2"
        );
        assert_eq!(EquationSystem::from_text(&sys.to_text()).unwrap(), sys);

        let c = validate_curve(2, (0..4).map(|i| q(i, 1)).collect(), &[1; 4]).unwrap();
        assert_eq!(
            base_equation(&c).to_text(),
            "y^2 = (x - 0)^1 * (x - 1)^1 * (x - 2)^1 * (x - 3)^1"
        );
        let poly = base_equation(&c).relations()[0].rhs.to_polynomial();
        assert_eq!(poly, Polynomial::from_i64(&[0, -6, 11, -6, 1]));
    }

    #[test]
    fn cover_equation_text() {
        let c = anchor3();
        let cover = CoverSpec::new(&c, v(&c, &[1, 2, 0, 0])).unwrap();
        let sys = cover_equations(&cover);
        assert_eq!(
            sys.to_text(),
            "y^3 = (x - 0)^1 * (x - 1)^1 * (x - -1)^2 * (x - 5/2)^2\nz^3 = (x - 0)^1 * (x - 1)^2"
        );
        assert_eq!(EquationSystem::from_text(&sys.to_text()).unwrap(), sys);
        assert_eq!(EquationSystem::from_json(&sys.to_json()).unwrap(), sys);

        let c = hyper6();
        let cover = CoverSpec::new(&c, v(&c, &[1, 1, 0, 0, 0, 0])).unwrap();
        let text = cover_equations(&cover).to_text();
        assert!(text.ends_with("\nz^2 = (x - 0)^1 * (x - 1)^1"), "{text}");
    }

    #[test]
    fn json_shape() {
        let sys = base_equation(&anchor3());
        assert_eq!(
            sys.to_json(),
            r#"{"d":3,"relations":[{"var":"y","d":3,"scalar":"1","factors":[{"root":"0","exp":1},{"root":"1","exp":1},{"root":"-1","exp":2},{"root":"5/2","exp":2}]}]}"#
        );
    }

    #[test]
    fn display_rendering() {
        let sys = base_equation(&anchor3());
        assert_eq!(
            sys.to_display(),
            "y³ = (x - 0)·(x - 1)·(x - -1)²·(x - 5/2)²"
        );
    }

    #[test]
    fn text_parser_rejects_noncanonical() {
        for bad in [
            "y^4 = (x - 0)^2 * (x - 1)^2",
            "y^3 = (x - 0)^1 * (x - 0)^2",
            "y^3 = (x - 0)^1 * (x - 1)^1",
            "y^3 = 1 * (x - 0)^1 * (x - 1)^2",
            "y^3 = (x - 0)^01 * (x - 1)^2",
            "y^3 (x - 0)^1",
            "y^3 = (x - 0)^1 * (x - 1)^2\nz^2 = (x - 0)^1 * (x - 1)^1",
            "y^3 = (x - 0)^1 * (x - 1)^2\ny^3 = (x - 0)^1 * (x - 1)^2",
            "y^3 = (0 + 1*x^3)",
            "",
        ] {
            assert!(EquationSystem::from_text(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn scalar_roundtrip() {
        let f = FactoredForm::new(q(-2, 3), vec![(q(1, 1), 1), (q(2, 1), 2)]).unwrap();
        let sys = EquationSystem::new(
            PrimeDegree::new(3).unwrap(),
            vec![Relation {
                var: "y".into(),
                rhs: RelationRhs::Factored(f),
            }],
        )
        .unwrap();
        assert_eq!(sys.to_text(), "y^3 = -2/3 * (x - 1)^1 * (x - 2)^2");
        assert_eq!(EquationSystem::from_text(&sys.to_text()).unwrap(), sys);
        assert_eq!(EquationSystem::from_json(&sys.to_json()).unwrap(), sys);
    }

    #[test]
    fn coordinate_change_examples() {
        let c = anchor3();
        let (b1, b2) = (v(&c, &[1, 2, 0, 0]), v(&c, &[0, 2, 2, 2]));
        let cc = coordinate_change(c.alpha(), &b1, &b2).unwrap();
        assert_eq!(cc.j, 1);
        assert_eq!(cc.extraction_exponents, vec![0, -1, 0, 0]);
        assert_eq!(cc.root_of_unity_order(), 3);
        assert!(cc.satisfies_identity(c.alpha(), &b1, &b2));
        assert!(cc.verify_by_expansion(&c, &b1, &b2));
        assert_eq!(
            cc.to_text(c.branch_points()),
            "z' = zeta_3 * (x - 1)^1 * y^1 / z"
        );

        let h = hyper6();
        let (b1, b2) = (v(&h, &[1, 1, 0, 0, 0, 0]), v(&h, &[0, 0, 1, 1, 1, 1]));
        let cc = coordinate_change(h.alpha(), &b1, &b2).unwrap();
        assert_eq!(cc.j, 1);
        assert_eq!(cc.extraction_exponents, vec![0; 6]);
        assert!(cc.verify_by_expansion(&h, &b1, &b2));
    }

    #[test]
    fn coordinate_change_errors() {
        let c = anchor3();
        let b1 = v(&c, &[1, 2, 0, 0]);
        // b1 + 2 alpha: isomorphic, but only through the +alpha orientation
        assert_eq!(
            coordinate_change(c.alpha(), &b1, &v(&c, &[0, 1, 1, 1])),
            Err(Error::OrientationMismatch)
        );
        assert_eq!(
            coordinate_change(c.alpha(), &b1, &b1),
            Err(Error::OrientationMismatch)
        );
        assert_eq!(
            coordinate_change(c.alpha(), &b1, &v(&c, &[1, 0, 2, 0])),
            Err(Error::NotIsomorphic)
        );
        // d = 2: every vector is its own negative, so j = 0 works
        let h = hyper6();
        let b = v(&h, &[1, 1, 0, 0, 0, 0]);
        let cc = coordinate_change(h.alpha(), &b, &b).unwrap();
        assert_eq!(cc.j, 0);
        assert_eq!(cc.extraction_exponents, vec![-1, -1, 0, 0, 0, 0]);
    }

    #[test]
    fn wrong_coordinate_change_fails_expansion() {
        let c = anchor3();
        let (b1, b2) = (v(&c, &[1, 2, 0, 0]), v(&c, &[0, 2, 2, 2]));
        let mut cc = coordinate_change(c.alpha(), &b1, &b2).unwrap();
        cc.extraction_exponents[1] = 0;
        assert!(!cc.satisfies_identity(c.alpha(), &b1, &b2));
        assert!(!cc.verify_by_expansion(&c, &b1, &b2));
    }

    #[test]
    fn rational_cover_examples() {
        let p3 = PrimeDegree::new(3).unwrap();
        let f1 = Polynomial::from_i64(&[-1, 0, 0, 1]);
        let f2 = Polynomial::from_i64(&[-2, 0, 0, 1]);
        let sys = rational_cover_from_factors(p3, &f1, &f2).unwrap();
        assert_eq!(
            sys.to_text(),
            "y^3 = (-1 + 1*x^3) * (-2 + 1*x^3)\nz^3 = (-1 + 1*x^3)"
        );
        assert_eq!(EquationSystem::from_text(&sys.to_text()).unwrap(), sys);
        assert_eq!(EquationSystem::from_json(&sys.to_json()).unwrap(), sys);

        let p2 = PrimeDegree::new(2).unwrap();
        let sys = rational_cover_from_factors(
            p2,
            &Polynomial::from_i64(&[-1, 0, 1]),
            &Polynomial::from_i64(&[-4, 0, 1]),
        )
        .unwrap();
        assert_eq!(
            sys.to_text(),
            "y^2 = (-1 + 1*x^2) * (-4 + 1*x^2)\nz^2 = (-1 + 1*x^2)"
        );

        assert_eq!(
            rational_cover_from_factors(
                p3,
                &Polynomial::from_i64(&[-1, 0, 1]),
                &Polynomial::from_i64(&[-2, 0, 0, 0, 1])
            ),
            Err(Error::DegreeNotDivisible(2, 3))
        );
        assert_eq!(
            rational_cover_from_factors(p3, &f1, &Polynomial::from_i64(&[5])),
            Err(Error::ConstantFactor)
        );
        assert_eq!(
            rational_cover_from_factors(p3, &f1, &f1),
            Err(Error::NotSquarefree)
        );
    }
}
