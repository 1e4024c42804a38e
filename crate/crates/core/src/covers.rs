//! Strongly cyclic covers of a cyclic curve.
//!
//! A cover is named by an exponent vector `beta` in the degree-zero
//! hyperplane that is not a multiple of the curve's `alpha`. Two views are
//! kept apart: [`all_covers`] lists one vector per torsion point (a coset of
//! `<alpha>`), while the counting and classification functions work on the
//! full set of vectors.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::curves::{base_genus, genus_from_profile, ramification_profile, CyclicCurve};
use crate::error::{Error, Result};
use crate::ff_linear::{enumerate_degree_zero, ExponentVector, PrimeDegree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpec {
    base: CyclicCurve,
    beta: ExponentVector,
}

impl CoverSpec {
    pub fn new(base: &CyclicCurve, beta: ExponentVector) -> Result<Self> {
        let alpha = base.alpha();
        if beta.modulus() != alpha.modulus() {
            return Err(Error::ModulusMismatch(
                beta.modulus().get(),
                alpha.modulus().get(),
            ));
        }
        if beta.len() != alpha.len() {
            return Err(Error::LengthMismatch(alpha.len(), beta.len()));
        }
        if !beta.in_hyperplane() {
            return Err(Error::NotInHyperplane(beta.degree_sum_residue()));
        }
        if beta.span_membership(alpha)?.is_some() {
            return Err(Error::TrivialCover);
        }
        Ok(CoverSpec {
            base: base.clone(),
            beta,
        })
    }

    pub fn base(&self) -> &CyclicCurve {
        &self.base
    }

    pub fn beta(&self) -> &ExponentVector {
        &self.beta
    }
}

/// Whether `beta` names a nontrivial cover of a curve with exponents `alpha`.
pub fn is_cover_vector(beta: &ExponentVector, alpha: &ExponentVector) -> bool {
    beta.in_hyperplane() && matches!(beta.span_membership(alpha), Ok(None))
}

/// All nontrivial cover vectors of the curve, in lexicographic order.
pub fn cover_vectors(curve: &CyclicCurve) -> impl Iterator<Item = ExponentVector> + '_ {
    enumerate_degree_zero(curve.degree(), curve.r())
        .filter(move |v| is_cover_vector(v, curve.alpha()))
}

/// One cover per nonzero d-torsion point, represented by the lexicographically
/// smallest vector of its coset.
pub fn all_covers(curve: &CyclicCurve) -> Vec<CoverSpec> {
    let alpha = curve.alpha();
    cover_vectors(curve)
        .filter(|v| v.coset_canonical(alpha).expect("hyperplane vectors") == *v)
        .map(|beta| CoverSpec {
            base: curve.clone(),
            beta,
        })
        .collect()
}

/// `(d - 1)(rd - 2d - 2) / 2`.
pub fn cover_genus_closed_form(d: PrimeDegree, r: usize) -> u64 {
    let d = u64::from(d.get());
    let r = r as u64;
    (d - 1) * (r * d - 2 * d - 2) / 2
}

/// Genus of the total space of the cover; the closed form is checked against
/// `d (g - 1) + 1` for an unramified degree-d cover of a genus-g curve.
pub fn cover_genus(cover: &CoverSpec) -> u64 {
    let d = cover.base.degree();
    let closed = cover_genus_closed_form(d, cover.base.r());
    let g = base_genus(&cover.base);
    let unramified = u64::from(d.get()) * (g - 1) + 1;
    assert_eq!(
        closed, unramified,
        "cover genus closed form disagrees with d(g-1)+1"
    );
    closed
}

/// `(d - 1)(k - 2) / 2` for a quotient branched at `k` points.
pub fn support_genus(d: PrimeDegree, support_size: usize) -> u64 {
    (u64::from(d.get()) - 1) * (support_size as u64).saturating_sub(2) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quotient {
    pub exponents: ExponentVector,
    pub genus: u64,
}

/// The `d` curves the cover maps onto: `C_beta` first, then
/// `C_{m alpha - beta}` for `m = 1..d-1`. Genera come from the support size
/// and are checked against Riemann-Hurwitz.
pub fn intermediate_quotients(cover: &CoverSpec) -> Vec<Quotient> {
    let d = cover.base.degree();
    let alpha = cover.base.alpha();
    (0..i64::from(d.get()))
        .map(|m| {
            let exponents = if m == 0 {
                cover.beta.clone()
            } else {
                ExponentVector::linear_combine(m, alpha, -1, &cover.beta)
                    .expect("compatible vectors")
            };
            let genus = support_genus(d, exponents.support_size());
            let profile = ramification_profile(&exponents).expect("hyperplane vector");
            let rh = genus_from_profile(&profile).expect("valid profile");
            assert_eq!(genus, rh, "quotient genus disagrees with Riemann-Hurwitz");
            Quotient { exponents, genus }
        })
        .collect()
}

/// The literal relation: `beta1 == beta2` or `beta1 + beta2` is a nonzero
/// multiple of `alpha`. Not transitive in general.
pub fn paper_iso_related(
    beta1: &ExponentVector,
    beta2: &ExponentVector,
    alpha: &ExponentVector,
) -> Result<bool> {
    if beta1 == beta2 {
        return Ok(true);
    }
    let sum = ExponentVector::linear_combine(1, beta1, 1, beta2)?;
    Ok(matches!(sum.span_membership(alpha)?, Some(m) if m != 0))
}

/// `beta2` lies in `±beta1 + <alpha>`: the equivalence closure of
/// [`paper_iso_related`].
pub fn isomorphic_as_covers(
    beta1: &ExponentVector,
    beta2: &ExponentVector,
    alpha: &ExponentVector,
) -> Result<bool> {
    let plus = ExponentVector::linear_combine(1, beta2, -1, beta1)?;
    let minus = ExponentVector::linear_combine(1, beta2, 1, beta1)?;
    Ok(plus.span_membership(alpha)?.is_some() || minus.span_membership(alpha)?.is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoClass {
    pub canonical: ExponentVector,
    /// Sorted, lexicographic.
    pub members: Vec<ExponentVector>,
    /// Sorted multiset of intermediate quotient genera.
    pub quotient_genera: Vec<u64>,
}

/// `{m alpha + beta} ∪ {m alpha - beta}`, sorted and deduplicated.
pub fn class_members(beta: &ExponentVector, alpha: &ExponentVector) -> Result<Vec<ExponentVector>> {
    let d = i64::from(alpha.modulus().get());
    let mut members = Vec::with_capacity(2 * d as usize);
    for m in 0..d {
        members.push(ExponentVector::linear_combine(m, alpha, 1, beta)?);
        members.push(ExponentVector::linear_combine(m, alpha, -1, beta)?);
    }
    members.sort();
    members.dedup();
    Ok(members)
}

/// Partition of all nontrivial cover vectors into isomorphism classes,
/// ordered by canonical (smallest) member.
pub fn iso_classes(curve: &CyclicCurve) -> Vec<IsoClass> {
    let alpha = curve.alpha();
    let mut seen: HashSet<ExponentVector> = HashSet::new();
    let mut classes = Vec::new();
    for beta in cover_vectors(curve) {
        if seen.contains(&beta) {
            continue;
        }
        // Lexicographic scan: the first unseen member is the class minimum.
        let members = class_members(&beta, alpha).expect("compatible vectors");
        debug_assert_eq!(members[0], beta);
        seen.extend(members.iter().cloned());
        let cover = CoverSpec {
            base: curve.clone(),
            beta: beta.clone(),
        };
        let mut quotient_genera: Vec<u64> = intermediate_quotients(&cover)
            .into_iter()
            .map(|q| q.genus)
            .collect();
        quotient_genera.sort_unstable();
        classes.push(IsoClass {
            canonical: beta,
            members,
            quotient_genera,
        });
    }
    classes
}

/// Exhaustive count of hyperplane vectors with exactly `k` nonzero entries.
pub fn count_by_support_oracle(curve: &CyclicCurve, k: usize, include_trivial: bool) -> u64 {
    let alpha = curve.alpha();
    enumerate_degree_zero(curve.degree(), curve.r())
        .filter(|v| v.support_size() == k)
        .filter(|v| include_trivial || matches!(v.span_membership(alpha), Ok(None)))
        .count() as u64
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// `C(r, k) ((d-1)^k + (-1)^k (d-1)) / d`: hyperplane vectors of support size
/// `k`, multiples of `alpha` included.
pub fn count_formula_corrected(d: PrimeDegree, r: usize, k: usize) -> BigInt {
    let dm1 = BigInt::from(d.get() - 1);
    let sign = if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let inner = Pow::pow(&dm1, k as u32) + sign * &dm1;
    let per_support = inner / BigInt::from(d.get());
    binomial(r, k) * per_support
}

/// `C(r, k) ((1 - 1/d)^k d^(k-1) - (-1)^k / d)` evaluated exactly. Kept for
/// comparison with [`count_formula_corrected`]; it disagrees for most
/// `(d, r, k)`.
pub fn count_formula_paper(d: PrimeDegree, r: usize, k: usize) -> BigRational {
    let dq = BigRational::from_integer(BigInt::from(d.get()));
    let one = BigRational::one();
    let base = Pow::pow(&(&one - &one / &dq), k as u32);
    let dpow = if k == 0 {
        &one / &dq
    } else {
        Pow::pow(&dq, (k - 1) as u32)
    };
    let sign = if k % 2 == 0 {
        one.clone()
    } else {
        -one.clone()
    };
    BigRational::from_integer(binomial(r, k)) * (base * dpow - sign / dq)
}

/// Nontrivial cover vectors whose quotient `C_beta` has genus `g0`, i.e.
/// whose support has size `k = 2 g0 / (d - 1) + 2`.
pub fn covers_by_quotient_genus(curve: &CyclicCurve, g0: u64) -> Result<Vec<ExponentVector>> {
    let k = support_size_for_genus(curve.degree(), curve.r(), g0)?;
    Ok(cover_vectors(curve)
        .filter(|v| v.support_size() == k)
        .collect())
}

/// The support size `k` for which a quotient has genus `g0`, if one exists
/// with `2 <= k <= r`.
pub fn support_size_for_genus(d: PrimeDegree, r: usize, g0: u64) -> Result<usize> {
    let dm1 = u64::from(d.get()) - 1;
    let none = Error::NoSuchQuotientGenus { g0, d: d.get(), r };
    if (2 * g0) % dm1 != 0 {
        return Err(none);
    }
    let k = 2 * g0 / dm1 + 2;
    if k > r as u64 {
        return Err(none);
    }
    Ok(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::validate_curve;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn curve(d: u64, alpha: &[i64]) -> CyclicCurve {
        let pts = (0..alpha.len() as i64).map(q).collect();
        validate_curve(d, pts, alpha).unwrap()
    }

    fn v(c: &CyclicCurve, e: &[u32]) -> ExponentVector {
        ExponentVector::from_residues(e.to_vec(), c.degree()).unwrap()
    }

    fn c34() -> CyclicCurve {
        curve(3, &[1, 1, 2, 2])
    }

    #[test]
    fn cover_spec_rejects_trivial_and_off_hyperplane() {
        let c = c34();
        assert_eq!(CoverSpec::new(&c, v(&c, &[0; 4])), Err(Error::TrivialCover));
        assert_eq!(
            CoverSpec::new(&c, v(&c, &[2, 2, 1, 1])),
            Err(Error::TrivialCover)
        );
        assert_eq!(
            CoverSpec::new(&c, v(&c, &[1, 0, 0, 0])),
            Err(Error::NotInHyperplane(1))
        );
        assert!(CoverSpec::new(&c, v(&c, &[1, 2, 0, 0])).is_ok());
    }

    #[test]
    fn all_covers_counts() {
        assert_eq!(all_covers(&c34()).len(), 8);
        assert_eq!(all_covers(&curve(2, &[1; 6])).len(), 15);
        assert_eq!(all_covers(&curve(2, &[1; 4])).len(), 3);
        let covers = all_covers(&c34());
        assert!(covers.windows(2).all(|w| w[0].beta < w[1].beta));
    }

    #[test]
    fn cover_genus_examples() {
        let c = curve(2, &[1; 6]);
        assert_eq!(cover_genus(&all_covers(&c)[0]), 3);
        assert_eq!(cover_genus(&all_covers(&c34())[0]), 4);
        // (d - 1)(rd - 2d - 2)/2 = 1 * 2 / 2
        assert_eq!(cover_genus(&all_covers(&curve(2, &[1; 4]))[0]), 1);
    }

    #[test]
    fn support_examples() {
        let c = c34();
        assert_eq!(v(&c, &[1, 2, 0, 0]).support(), vec![0, 1]);
        assert_eq!(v(&c, &[0, 0, 0, 0]).support(), Vec::<usize>::new());
        assert_eq!(v(&c, &[0, 2, 2, 2]).support(), vec![1, 2, 3]);
    }

    #[test]
    fn intermediate_quotient_examples() {
        let c = c34();
        let cover = CoverSpec::new(&c, v(&c, &[1, 2, 0, 0])).unwrap();
        let got: Vec<_> = intermediate_quotients(&cover)
            .into_iter()
            .map(|q| (q.exponents.entries().to_vec(), q.genus))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![1, 2, 0, 0], 0),
                (vec![0, 2, 2, 2], 1),
                (vec![1, 0, 1, 1], 1)
            ]
        );

        let c = curve(2, &[1; 6]);
        let cover = CoverSpec::new(&c, v(&c, &[1, 1, 0, 0, 0, 0])).unwrap();
        let got: Vec<_> = intermediate_quotients(&cover)
            .into_iter()
            .map(|q| (q.exponents.entries().to_vec(), q.genus))
            .collect();
        assert_eq!(
            got,
            vec![(vec![1, 1, 0, 0, 0, 0], 0), (vec![0, 0, 1, 1, 1, 1], 1)]
        );
    }

    #[test]
    fn relation_examples() {
        let c = c34();
        let a = c.alpha();
        let b1 = v(&c, &[1, 2, 0, 0]);
        assert!(paper_iso_related(&b1, &v(&c, &[0, 2, 2, 2]), a).unwrap());
        assert!(paper_iso_related(&b1, &b1, a).unwrap());
        assert!(!paper_iso_related(&b1, &v(&c, &[2, 0, 1, 0]), a).unwrap());

        assert!(isomorphic_as_covers(&b1, &v(&c, &[0, 1, 1, 1]), a).unwrap());
        assert!(isomorphic_as_covers(&b1, &v(&c, &[2, 1, 0, 0]), a).unwrap());
        assert!(!isomorphic_as_covers(&b1, &v(&c, &[1, 0, 2, 0]), a).unwrap());
        // (0,1,1,1) = b1 + 2 alpha is isomorphic but not literally related
        assert!(!paper_iso_related(&b1, &v(&c, &[0, 1, 1, 1]), a).unwrap());
    }

    #[test]
    fn iso_class_examples() {
        let classes = iso_classes(&c34());
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.members.len() == 6));

        let classes = iso_classes(&curve(2, &[1; 6]));
        assert_eq!(classes.len(), 15);
        assert!(classes.iter().all(|c| c.members.len() == 2));
        let classes = iso_classes(&curve(2, &[1; 4]));
        assert_eq!(classes.len(), 3);
    }

    #[test]
    fn oracle_examples() {
        let c = c34();
        assert_eq!(count_by_support_oracle(&c, 2, true), 12);
        assert_eq!(count_by_support_oracle(&c, 4, true), 6);
        assert_eq!(count_by_support_oracle(&c, 4, false), 4);
        let c = curve(2, &[1; 6]);
        assert_eq!(count_by_support_oracle(&c, 3, true), 0);
        assert_eq!(count_by_support_oracle(&c, 3, false), 0);
    }

    #[test]
    fn formula_examples() {
        let p = |d| PrimeDegree::new(d).unwrap();
        assert_eq!(count_formula_corrected(p(3), 4, 3), BigInt::from(8));
        assert_eq!(count_formula_corrected(p(2), 6, 2), BigInt::from(15));
        for d in [2, 3, 5, 7] {
            assert_eq!(count_formula_corrected(p(d), 5, 0), BigInt::one());
        }
        assert_eq!(count_formula_paper(p(3), 4, 2), q(6));
        assert_eq!(count_formula_paper(p(3), 4, 4), q(5));
        assert_eq!(count_formula_paper(p(2), 6, 2), q(0));
        assert_eq!(count_formula_paper(p(3), 4, 3), q(12));
    }

    /// The printed expression equals the true count minus C(r, k) (-1)^k.
    #[test]
    fn paper_formula_offset() {
        for d in [2u64, 3, 5, 7] {
            let pd = PrimeDegree::new(d).unwrap();
            for r in 3..9 {
                for k in 1..=r {
                    let offset = binomial(r, k) * if k % 2 == 0 { 1 } else { -1 };
                    let want = count_formula_corrected(pd, r, k) - offset;
                    assert_eq!(
                        count_formula_paper(pd, r, k),
                        BigRational::from_integer(want)
                    );
                }
            }
        }
    }

    #[test]
    fn quotient_genus_examples() {
        let c = c34();
        assert_eq!(covers_by_quotient_genus(&c, 0).unwrap().len(), 12);
        let full = covers_by_quotient_genus(&c, 2).unwrap();
        assert_eq!(full.len(), 4);
        assert!(!full.contains(c.alpha()));
        assert_eq!(
            covers_by_quotient_genus(&curve(2, &[1; 6]), 1)
                .unwrap()
                .len(),
            15
        );
        assert!(matches!(
            covers_by_quotient_genus(&c, 3),
            Err(Error::NoSuchQuotientGenus { .. })
        ));
        assert!(matches!(
            covers_by_quotient_genus(&curve(5, &[1, 1, 1, 2]), 1),
            Err(Error::NoSuchQuotientGenus { .. })
        ));
    }

    fn grid() -> Vec<CyclicCurve> {
        vec![
            curve(2, &[1; 4]),
            curve(2, &[1; 6]),
            curve(2, &[1; 8]),
            c34(),
            curve(3, &[1; 6]),
            curve(5, &[1, 1, 1, 2]),
            curve(7, &[1, 2, 4]),
        ]
    }

    #[test]
    fn counting_invariants_on_grid() {
        for c in grid() {
            let (d, r) = (c.degree(), c.r());
            let total: u64 = (0..=r).map(|k| count_by_support_oracle(&c, k, true)).sum();
            assert_eq!(total, u64::from(d.get()).pow(r as u32 - 1));
            for k in 0..=r {
                assert_eq!(
                    count_formula_corrected(d, r, k),
                    BigInt::from(count_by_support_oracle(&c, k, true)),
                    "d={d} r={r} k={k}"
                );
            }
        }
    }

    #[test]
    fn classes_partition_and_match_relation() {
        for c in grid() {
            let alpha = c.alpha();
            let d = c.degree().get() as usize;
            let classes = iso_classes(&c);
            let vectors: Vec<_> = cover_vectors(&c).collect();
            assert_eq!(vectors.len(), d.pow(c.r() as u32 - 1) - d);
            let size = if d == 2 { 2 } else { 2 * d };
            assert!(classes.iter().all(|k| k.members.len() == size));
            let mut seen = HashSet::new();
            for k in &classes {
                for m in &k.members {
                    assert!(seen.insert(m.clone()));
                    let cover = CoverSpec::new(&c, m.clone()).unwrap();
                    let mut gs: Vec<_> = intermediate_quotients(&cover)
                        .iter()
                        .map(|q| q.genus)
                        .collect();
                    gs.sort_unstable();
                    assert_eq!(gs, k.quotient_genera);
                }
            }
            assert_eq!(seen.len(), vectors.len());

            let class_of =
                |x: &ExponentVector| classes.iter().position(|k| k.members.contains(x)).unwrap();
            for x in &vectors {
                for y in &vectors {
                    let iso = isomorphic_as_covers(x, y, alpha).unwrap();
                    assert_eq!(iso, class_of(x) == class_of(y));
                    if paper_iso_related(x, y, alpha).unwrap() {
                        assert!(iso);
                    }
                }
            }
        }
    }

    #[test]
    fn hyperelliptic_complement_pairs() {
        for c in [curve(2, &[1; 4]), curve(2, &[1; 6]), curve(2, &[1; 8])] {
            let g = base_genus(&c);
            for k in iso_classes(&c) {
                let [b, other] = &k.members[..] else { panic!() };
                let comp = ExponentVector::linear_combine(1, c.alpha(), -1, b).unwrap();
                assert_eq!(&comp, other);
                assert_eq!(b.support_size() + comp.support_size(), c.r());
                assert_eq!(k.quotient_genera.iter().sum::<u64>(), g - 1);
            }
        }
    }
}
