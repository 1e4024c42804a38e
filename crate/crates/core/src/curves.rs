//! Cyclic curves `y^d = prod (x - b_i)^{alpha_i}` and their ramification.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff_linear::{ExponentVector, PrimeDegree};
use crate::rational::{format_rational, parse_rational};

/// A prime-degree cyclic cover of the line, unramified over infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCurve {
    d: PrimeDegree,
    branch_points: Vec<BigRational>,
    alpha: ExponentVector,
}

impl CyclicCurve {
    pub fn degree(&self) -> PrimeDegree {
        self.d
    }

    pub fn branch_points(&self) -> &[BigRational] {
        &self.branch_points
    }

    pub fn alpha(&self) -> &ExponentVector {
        &self.alpha
    }

    /// Number of branch points `r`.
    pub fn r(&self) -> usize {
        self.branch_points.len()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CurveFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        file.into_curve()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CurveFile::from(self)).expect("curve serializes")
    }
}

/// On-disk curve document, e.g.
/// `{"d": 3, "branch_points": ["0", "1", "-1", "5/2"], "exponents": [1, 1, 2, 2]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub d: u64,
    pub branch_points: Vec<String>,
    pub exponents: Vec<i64>,
}

impl CurveFile {
    pub fn into_curve(self) -> Result<CyclicCurve> {
        let points = self
            .branch_points
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        let d = PrimeDegree::new(self.d)?;
        // A literal 0 is left to validation so it reports ZeroExponent.
        if let Some(&e) = self
            .exponents
            .iter()
            .find(|&&e| e < 0 || e >= i64::from(d.get()))
        {
            return Err(Error::Format(format!("exponent {e} is outside [1, {d})")));
        }
        validate_curve(self.d, points, &self.exponents)
    }
}

impl From<&CyclicCurve> for CurveFile {
    fn from(c: &CyclicCurve) -> Self {
        CurveFile {
            d: u64::from(c.d.get()),
            branch_points: c.branch_points.iter().map(format_rational).collect(),
            exponents: c.alpha.as_integers(),
        }
    }
}

/// Checks every curve invariant. Errors are reported in a fixed order:
/// degree, point count, lengths, duplicates, zero exponents, ramification at
/// infinity.
pub fn validate_curve(
    d: u64,
    branch_points: Vec<BigRational>,
    alpha_raw: &[i64],
) -> Result<CyclicCurve> {
    let d = PrimeDegree::new(d)?;
    let r = branch_points.len();
    if r < 3 {
        return Err(Error::TooFewBranchPoints(r));
    }
    if alpha_raw.len() != r {
        return Err(Error::LengthMismatch(r, alpha_raw.len()));
    }
    for i in 0..r {
        for j in i + 1..r {
            if branch_points[i] == branch_points[j] {
                return Err(Error::DuplicateBranchPoints(i, j));
            }
        }
    }
    let alpha = ExponentVector::reduce(alpha_raw, d);
    if let Some(pos) = alpha.entries().iter().position(|&e| e == 0) {
        return Err(Error::ZeroExponent(pos));
    }
    if !alpha.in_hyperplane() {
        return Err(Error::RamifiedAtInfinity(alpha.degree_sum_residue()));
    }
    Ok(CyclicCurve {
        d,
        branch_points,
        alpha,
    })
}

/// Preimage structure over one point of the line: `count` points each with
/// ramification index `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub count: u32,
    pub index: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationProfile {
    pub degree: u32,
    /// One entry per branch position, in position order.
    pub finite: Vec<Vec<Fiber>>,
    pub infinity: Vec<Fiber>,
}

impl RamificationProfile {
    fn fibers(&self) -> impl Iterator<Item = &Vec<Fiber>> {
        self.finite.iter().chain(std::iter::once(&self.infinity))
    }
}

/// Ramification of `y^d = prod (x - b_i)^{e_i}` over the line. For prime `d`
/// a nonzero exponent is coprime to `d`, so the fiber is a single point of
/// index `d`; a zero exponent gives `d` unramified points.
pub fn ramification_profile(exponents: &ExponentVector) -> Result<RamificationProfile> {
    if !exponents.in_hyperplane() {
        return Err(Error::NotInHyperplane(exponents.degree_sum_residue()));
    }
    let d = exponents.modulus().get();
    let unramified = vec![Fiber { count: d, index: 1 }];
    let finite = exponents
        .entries()
        .iter()
        .map(|&e| {
            if e == 0 {
                unramified.clone()
            } else {
                vec![Fiber { count: 1, index: d }]
            }
        })
        .collect();
    Ok(RamificationProfile {
        degree: d,
        finite,
        infinity: unramified,
    })
}

/// Riemann-Hurwitz over the line: `2g - 2 = -2 deg + sum (index - 1)`.
pub fn genus_from_profile(profile: &RamificationProfile) -> Result<u64> {
    let mut total: i64 = -2 * i64::from(profile.degree);
    for fiber in profile.fibers() {
        let mut covered = 0i64;
        for f in fiber {
            if f.count == 0 || f.index == 0 {
                return Err(Error::InvalidProfile(
                    "counts and indices must be positive".into(),
                ));
            }
            covered += i64::from(f.count) * i64::from(f.index);
            total += i64::from(f.count) * (i64::from(f.index) - 1);
        }
        if covered != i64::from(profile.degree) {
            return Err(Error::InvalidProfile(format!(
                "fiber has total multiplicity {covered}, expected {}",
                profile.degree
            )));
        }
    }
    // total = 2g - 2
    if total < -2 || total % 2 != 0 {
        return Err(Error::InvalidProfile(format!(
            "2g - 2 = {total} gives no valid genus"
        )));
    }
    Ok(((total + 2) / 2) as u64)
}

/// `(r - 2)(d - 1) / 2`, the genus of a prime-degree cyclic curve with `r`
/// branch points.
pub fn base_genus_closed_form(d: PrimeDegree, r: usize) -> u64 {
    (r as u64 - 2) * (u64::from(d.get()) - 1) / 2
}

/// Genus of the curve, computed by the closed form and checked against
/// Riemann-Hurwitz on its ramification profile.
pub fn base_genus(curve: &CyclicCurve) -> u64 {
    let closed = base_genus_closed_form(curve.d, curve.r());
    let profile = ramification_profile(&curve.alpha).expect("valid curve lies in hyperplane");
    let rh = genus_from_profile(&profile).expect("profiles built here are valid");
    assert_eq!(
        closed, rh,
        "genus closed form disagrees with Riemann-Hurwitz"
    );
    closed
}

/// Number of branch points a cyclic curve of genus `g` and degree `d` has.
pub fn expected_branch_count(g: u64, d: PrimeDegree) -> Result<u64> {
    let dm1 = u64::from(d.get()) - 1;
    if (2 * g) % dm1 != 0 {
        return Err(Error::NotDivisible(2 * g, dm1));
    }
    Ok(2 * g / dm1 + 2)
}
