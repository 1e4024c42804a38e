//! Full consistency sweep over one curve: every closed form is recomputed by
//! an independent route and every construction is checked exactly.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::covers::{
    all_covers, count_by_support_oracle, count_formula_corrected, count_formula_paper,
    cover_genus_closed_form, cover_vectors, covers_by_quotient_genus, iso_classes,
    isomorphic_as_covers, paper_iso_related, support_genus,
};
use crate::curves::{
    base_genus_closed_form, expected_branch_count, genus_from_profile, ramification_profile,
    CyclicCurve,
};
use crate::equations::{
    admissible_pairs, base_equation, coordinate_change, cover_equations, two_point_transform,
    verify_two_point_identity, EquationSystem,
};
use crate::ff_linear::{enumerate_degree_zero, ExponentVector};
use crate::rational::format_rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Oracle count against both closed forms for one support size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountAudit {
    pub k: usize,
    pub oracle: u64,
    pub formula_corrected: String,
    pub formula_paper: String,
    pub paper_matches_oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub count_audit: Vec<CountAudit>,
    pub all_pass: bool,
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        pass,
        detail: detail.into(),
    }
}

fn rh_genus(v: &ExponentVector) -> Option<u64> {
    genus_from_profile(&ramification_profile(v).ok()?).ok()
}

pub fn verify_curve(curve: &CyclicCurve) -> VerifyReport {
    let d = curve.degree();
    let dd = d.get() as usize;
    let r = curve.r();
    let alpha = curve.alpha();
    let mut checks = Vec::new();

    let g = base_genus_closed_form(d, r);
    let g_rh = rh_genus(alpha);
    checks.push(check(
        "base genus closed form equals Riemann-Hurwitz",
        g_rh == Some(g),
        format!("closed form {g}, profile {g_rh:?}"),
    ));
    let r_back = expected_branch_count(g, d).ok();
    checks.push(check(
        "branch count recovered from genus",
        r_back == Some(r as u64),
        format!("{r_back:?} vs r = {r}"),
    ));

    let canon: HashSet<ExponentVector> = enumerate_degree_zero(d, r)
        .filter_map(|v| v.coset_canonical(alpha).ok())
        .collect();
    let expected_points = dd.pow(r as u32 - 2);
    checks.push(check(
        "coset representatives number d^(r-2)",
        canon.len() == expected_points,
        format!("{} vs {expected_points}", canon.len()),
    ));
    let covers = all_covers(curve);
    checks.push(check(
        "all_covers yields d^(r-2) - 1 covers",
        covers.len() == expected_points - 1,
        format!("{} covers", covers.len()),
    ));

    let g_cover = cover_genus_closed_form(d, r);
    let g_unram = dd as u64 * (g - 1) + 1;
    checks.push(check(
        "cover genus closed form equals d(g-1)+1",
        g_cover == g_unram,
        format!("{g_cover} vs {g_unram}"),
    ));

    let mut count_audit = Vec::new();
    let mut formula_ok = true;
    let mut total = 0u64;
    for k in 0..=r {
        let oracle = count_by_support_oracle(curve, k, true);
        total += oracle;
        let corrected = count_formula_corrected(d, r, k);
        let paper = count_formula_paper(d, r, k);
        if k >= 1 {
            formula_ok &= corrected == BigInt::from(oracle);
            count_audit.push(CountAudit {
                k,
                oracle,
                formula_corrected: corrected.to_string(),
                formula_paper: format_rational(&paper),
                paper_matches_oracle: paper == BigRational::from_integer(oracle.into()),
            });
        }
    }
    checks.push(check(
        "corrected support-count formula equals exhaustive oracle for k = 1..r",
        formula_ok,
        "",
    ));
    let hyperplane = dd.pow(r as u32 - 1) as u64;
    checks.push(check(
        "support counts sum to d^(r-1)",
        total == hyperplane,
        format!("{total} vs {hyperplane}"),
    ));

    let mut by_genus_ok = true;
    for k in 2..=r {
        if (k - 2) * (dd - 1) % 2 != 0 {
            continue;
        }
        let g0 = support_genus(d, k);
        let listed = covers_by_quotient_genus(curve, g0).map(|v| v.len() as u64);
        by_genus_ok &= listed == Ok(count_by_support_oracle(curve, k, false));
    }
    checks.push(check(
        "covers by quotient genus match the nontrivial oracle",
        by_genus_ok,
        "",
    ));

    let vectors: Vec<ExponentVector> = cover_vectors(curve).collect();
    let classes = iso_classes(curve);
    let mut seen = HashSet::new();
    let mut disjoint = true;
    for class in &classes {
        for m in &class.members {
            disjoint &= seen.insert(m.clone());
        }
    }
    let all_vectors: HashSet<_> = vectors.iter().cloned().collect();
    checks.push(check(
        "iso classes partition all d^(r-1) - d cover vectors",
        disjoint && seen == all_vectors && vectors.len() == hyperplane as usize - dd,
        format!("{} classes over {} vectors", classes.len(), vectors.len()),
    ));
    let size = if dd == 2 { 2 } else { 2 * dd };
    let expected_classes = if dd == 2 {
        expected_points - 1
    } else {
        (expected_points - 1) / 2
    };
    checks.push(check(
        "iso class sizes and count",
        classes.iter().all(|c| c.members.len() == size) && classes.len() == expected_classes,
        format!("{} classes of size {size}", classes.len()),
    ));

    let class_of = |v: &ExponentVector| classes.iter().position(|c| c.members.contains(v));
    let class_index: Vec<_> = vectors.iter().map(class_of).collect();
    let mut relation_ok = true;
    for (a, x) in vectors.iter().enumerate() {
        for (b, y) in vectors.iter().enumerate() {
            let iso = isomorphic_as_covers(x, y, alpha).unwrap_or(false);
            relation_ok &= iso == (class_index[a] == class_index[b]);
            if paper_iso_related(x, y, alpha).unwrap_or(true) {
                relation_ok &= iso;
            }
        }
    }
    checks.push(check(
        "isomorphism is an equivalence containing the literal relation",
        relation_ok,
        "",
    ));

    let quotient_genera = |beta: &ExponentVector| -> Option<Vec<u64>> {
        let mut out = Vec::with_capacity(dd);
        for m in 0..dd as i64 {
            let v = ExponentVector::linear_combine(m, alpha, -1, beta).ok()?;
            let v = if m == 0 { beta.clone() } else { v };
            let formula = support_genus(d, v.support_size());
            if rh_genus(&v) != Some(formula) {
                return None;
            }
            out.push(formula);
        }
        Some(out)
    };
    let mut quotients_ok = true;
    let mut class_invariant_ok = true;
    for class in &classes {
        for m in &class.members {
            match quotient_genera(m) {
                Some(mut gs) => {
                    gs.sort_unstable();
                    class_invariant_ok &= gs == class.quotient_genera;
                }
                None => quotients_ok = false,
            }
        }
    }
    checks.push(check(
        "quotient genera: support formula equals Riemann-Hurwitz",
        quotients_ok,
        "",
    ));
    checks.push(check(
        "quotient genera are constant on iso classes",
        class_invariant_ok,
        "",
    ));
    if dd == 2 {
        let ok = classes.iter().all(|c| {
            c.quotient_genera.iter().sum::<u64>() == g - 1
                && c.members.iter().map(|m| m.support_size()).sum::<usize>() == r
        });
        checks.push(check("complementary pairs: g0 + g1 = g - 1", ok, ""));
    }

    let mut cc_ok = true;
    let mut cc_count = 0;
    for b1 in &vectors {
        for j in 0..dd as i64 {
            let Ok(b2) = ExponentVector::linear_combine(j, alpha, -1, b1) else {
                cc_ok = false;
                continue;
            };
            cc_count += 1;
            cc_ok &= match coordinate_change(alpha, b1, &b2) {
                Ok(cc) => {
                    cc.satisfies_identity(alpha, b1, &b2) && cc.verify_by_expansion(curve, b1, &b2)
                }
                Err(_) => false,
            };
        }
    }
    checks.push(check(
        "coordinate changes satisfy d*e + beta2 = j*alpha - beta1",
        cc_ok,
        format!("{cc_count} oriented pairs"),
    ));

    let pairs = admissible_pairs(curve);
    let mut identity_ok = true;
    let mut perturb_ok = true;
    let mut genus_ok = true;
    for &(i, j) in &pairs {
        let Ok(t) = two_point_transform(curve, i, j) else {
            identity_ok = false;
            continue;
        };
        identity_ok &= verify_two_point_identity(curve, &t);
        genus_ok &= t.transformed_genus().ok() == Some(g_cover);
        for n in 0..t.c_values().len() {
            let bumped = &t.c_values()[n].1 + BigRational::new(1.into(), 7.into());
            perturb_ok &= !verify_two_point_identity(curve, &t.clone().with_c_value(n, bumped));
        }
    }
    checks.push(check(
        "two-point identity holds for all admissible pairs",
        identity_ok,
        format!("{} pairs", pairs.len()),
    ));
    checks.push(check(
        "two-point identity fails when a c_k is perturbed",
        perturb_ok,
        "",
    ));
    checks.push(check(
        "transformed curve genus equals cover genus",
        genus_ok,
        "",
    ));

    let mut roundtrip_ok = true;
    let mut systems = vec![base_equation(curve)];
    systems.extend(covers.iter().map(cover_equations));
    for sys in &systems {
        let text = sys.to_text();
        let json = sys.to_json();
        roundtrip_ok &= EquationSystem::from_text(&text).as_ref() == Ok(sys)
            && EquationSystem::from_json(&json).as_ref() == Ok(sys)
            && EquationSystem::from_text(&text)
                .map(|s| s.to_text())
                .as_deref()
                == Ok(text.as_str())
            && EquationSystem::from_json(&json)
                .map(|s| s.to_json())
                .as_deref()
                == Ok(json.as_str());
    }
    checks.push(check(
        "equations round-trip through text and JSON",
        roundtrip_ok,
        format!("{} systems", systems.len()),
    ));

    let all_pass = checks.iter().all(|c| c.pass);
    VerifyReport {
        checks,
        count_audit,
        all_pass,
    }
}
