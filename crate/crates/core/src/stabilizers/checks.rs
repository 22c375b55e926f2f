use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::catalog::{catalog, Claim};
use super::embeddings::{
    embed_gl2pair, embed_sl2pair, embed_so3_33, embed_so4, gl2_generator, sl2_generator, so3_generator,
    so4_generator, Identification,
};
use super::sampling::{
    random_antisymmetric3, random_gl2, random_imaginary_quaternion, random_sl2_generator, random_sl2_pm, random_so3,
    random_unit_quaternion,
};
use crate::algebras::{table, AlgebraElement, AlgebraKind, INTERLEAVED_BASIS, OCTONION_BASIS};
use crate::exterior::{pullback, wedge, KForm, LinearMap, Matrix};
use crate::forms7::canonical::{beta123, canonical, omega, omega2_prime, preferred, Variant};
use crate::forms7::{classify, compact_dim, in_stabilizer_algebra, Classification};
use crate::Result;

/// `g* ω = ω`.
pub fn verify_membership(g: &LinearMap, w: &KForm) -> bool {
    pullback(g, w) == *w
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn push(&mut self, anchor: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.checks).expect("serializable")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            write!(f, "{tag:4}  {}", c.anchor)?;
            if !c.detail.is_empty() {
                write!(f, "  ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        write!(f, "{passed}/{} checks passed", self.checks.len())
    }
}

fn wedge3(i: usize, j: usize, k: usize) -> KForm {
    wedge(&wedge(&KForm::alpha(i), &KForm::alpha(j)), &KForm::alpha(k))
}

/// `ω₆ − α₃∧(α₄∧α₇ − α₅∧α₆)`.
pub fn omega6_minus_correction() -> Result<KForm> {
    let a47 = wedge(&KForm::alpha(4), &KForm::alpha(7));
    let a56 = wedge(&KForm::alpha(5), &KForm::alpha(6));
    let corr = wedge(&KForm::alpha(3), &(&a47 - &a56));
    omega(6)?.try_sub(&corr)
}

/// The form `⟨xy, z⟩` on `Im Õ` for `Õ = H ⊕ H` with the signed product, in
/// the basis `i, j, k, e, ie, je, ke`.
pub fn split_form_from_quaternion_pairs() -> Result<KForm> {
    let t = table(AlgebraKind::Osplit);
    t.triple_form(&t.product_basis()?)
}

/// The form `⟨xy, z⟩` on `Im Õ` for `Õ = CD(H̃)` in the basis
/// `i, j, k, e, ei, ej, ek`.
pub fn split_form_from_split_quaternions() -> Result<KForm> {
    let t = table(AlgebraKind::OsplitFromHsplit);
    let e = t.basis(4);
    let mut basis: Vec<AlgebraElement> = (1..4).map(|i| t.basis(i)).collect();
    basis.push(e.clone());
    for i in 1..4 {
        basis.push(t.multiply(&e, &t.basis(i))?);
    }
    t.triple_form(&basis)
}

/// Diagonal sign changes `d` with `d* from = to`, as ±1 patterns.
pub fn sign_changes(from: &KForm, to: &KForm) -> Vec<[i64; 7]> {
    (0u32..128)
        .filter_map(|mask| {
            let signs: [i64; 7] = std::array::from_fn(|i| if mask & (1 << i) != 0 { -1 } else { 1 });
            let d = LinearMap::signed_permutation(std::array::from_fn(|i| (i + 1, signs[i]))).ok()?;
            (pullback(&d, from) == *to).then_some(signs)
        })
        .collect()
}

fn is_orbit(w: &KForm, i: u8) -> Result<bool> {
    Ok(classify(w)? == Classification::Orbit(i))
}

/// Exact identities between the representatives and the algebra-built forms.
pub fn identity_checks() -> Result<Report> {
    let mut r = Report::default();

    let w7 = omega(7)?;
    let w8 = omega(8)?;
    r.push("eq-from-8-to-7", w8 == &w7 + &wedge3(1, 2, 3), "omega8 = omega7 + a1^a2^a3");

    let w5p = &omega2_prime() + &beta123();
    r.push("eq-omega2-prime-plus-beta123", is_orbit(&w5p, 5)?, "classifies as orbit 5");
    let from_algebra = split_form_from_split_quaternions()?;
    let signs = sign_changes(&from_algebra, &w5p);
    r.push(
        "eq-omega5-prime-from-algebra",
        is_orbit(&from_algebra, 5)? && !signs.is_empty(),
        format!("orbit 5; equal to omega2' + b123 after {} diagonal sign change(s)", signs.len()),
    );

    let tilde5 = split_form_from_quaternion_pairs()?;
    let lhs = omega6_minus_correction()?;
    r.push(
        "eq-omega6-minus-correction",
        lhs == tilde5 && is_orbit(&lhs, 5)?,
        "omega6 - a3^(a4^a7 - a5^a6) equals the H+H split form and classifies as orbit 5",
    );

    for (i, anchor) in [(6u8, "bv-relation-omega6"), (7, "bv-relation-omega7")] {
        let p = canonical(i, Variant::Prime)?;
        r.push(anchor, is_orbit(&p.form, i)?, format!("(g^-1)* omega{i} classifies as orbit {i}"));
    }

    let o = table(AlgebraKind::O);
    r.push(
        "eq-3-form-8-from-algebra",
        o.triple_form(&o.basis_from_indices(&OCTONION_BASIS))? == w8,
        "O with basis i, j, k, e, ie, je, ke",
    );
    let s = table(AlgebraKind::OsplitFromHsplit);
    r.push(
        "eq-3-form-5-from-algebra",
        s.triple_form(&s.basis_from_indices(&INTERLEAVED_BASIS))? == omega(5)?,
        "CD(H~) with the interleaved basis",
    );
    Ok(r)
}

/// Each catalog entry verified exactly.
pub fn catalog_checks() -> Result<Report> {
    let mut r = Report::default();
    for t in catalog() {
        let detail = match (t.claim, t.note) {
            (Claim::Stabilizes, Some(n)) => format!("stabilizes; {n}"),
            (Claim::Stabilizes, None) => "stabilizes".to_string(),
            (Claim::CarriesTo(_), Some(n)) => format!("carries to the primed form; {n}"),
            (Claim::CarriesTo(_), None) => "carries to the primed form".to_string(),
        };
        r.push(t.name, t.verify()?, detail);
    }
    Ok(r)
}

/// The compact intersections at the preferred representatives.
pub const EXPECTED_COMPACT_DIMS: [usize; 8] = [2, 2, 9, 3, 6, 4, 6, 14];

pub fn compact_checks() -> Result<Report> {
    let mut r = Report::default();
    for i in 1..=8u8 {
        let got = compact_dim(&preferred(i)?.form)?;
        let want = EXPECTED_COMPACT_DIMS[i as usize - 1];
        r.push(format!("compact-dim-K{i}"), got == want, format!("got {got}, expected {want}"));
    }
    Ok(r)
}

/// `draws` random parameters per embedding, plus one infinitesimal generator
/// per draw checked against the stabilizer algebra.
pub fn embedding_checks(draws: usize, seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w1 = omega(1)?;
    let w2p = omega2_prime();
    let w4 = omega(4)?;
    let w5 = omega(5)?;
    let w5p = canonical(5, Variant::Prime)?.form;
    let w7 = omega(7)?;
    let w8 = omega(8)?;
    let o = table(AlgebraKind::O);

    let mut ok = [true; 6];
    let mut gens_ok = [true; 4];
    for _ in 0..draws {
        let (a, b) = (random_unit_quaternion(&mut rng), random_unit_quaternion(&mut rng));
        let g = embed_so4(&a, &b, Identification::Octonion)?;
        let mut full = Matrix::identity(8);
        for (r7, &ri) in OCTONION_BASIS.iter().enumerate() {
            for (c7, &ci) in OCTONION_BASIS.iter().enumerate() {
                full[(ri, ci)] = g.entry(r7, c7).clone();
            }
        }
        ok[0] &= verify_membership(&g, &w8) && verify_membership(&g, &w7) && o.is_automorphism(&full);
        ok[1] &= verify_membership(&embed_so4(&a, &b, Identification::Split)?, &w5);

        let det = if rand::Rng::random_bool(&mut rng, 0.5) { 1 } else { -1 };
        let (sa, sb) = (random_sl2_pm(&mut rng, det), random_sl2_pm(&mut rng, det));
        let h = embed_sl2pair(&sa, &sb)?;
        ok[2] &= verify_membership(&h, &w2p) && verify_membership(&h, &w5p);

        ok[3] &= verify_membership(&embed_so3_33(&random_so3(&mut rng))?, &w4);
        ok[4] &= verify_membership(&embed_gl2pair(&random_gl2(&mut rng), &random_gl2(&mut rng))?, &w1);

        let (x, y) = (random_imaginary_quaternion(&mut rng), random_imaginary_quaternion(&mut rng));
        gens_ok[0] &= in_stabilizer_algebra(&so4_generator(&x, &y, Identification::Octonion)?, &w8)?
            && in_stabilizer_algebra(&so4_generator(&x, &y, Identification::Split)?, &w5)?;
        let (gx, gy) = (random_sl2_generator(&mut rng), random_sl2_generator(&mut rng));
        gens_ok[1] &= in_stabilizer_algebra(&sl2_generator(&gx, &gy)?, &w2p)?;
        gens_ok[2] &= in_stabilizer_algebra(&so3_generator(&random_antisymmetric3(&mut rng))?, &w4)?;
        let (ux, uy) = (random_gl2(&mut rng), random_gl2(&mut rng));
        gens_ok[3] &= in_stabilizer_algebra(&gl2_generator(&ux, &uy)?, &w1)?;
    }
    ok[5] = gens_ok.iter().all(|&b| b);

    let mut r = Report::default();
    let n = format!("{draws} draws");
    r.push("eq-1-subgroup-of-g2", ok[0], format!("{n}; fixes omega8, omega7; automorphism of O"));
    r.push("eq-1-subgroup-of-g2-split", ok[1], format!("{n}; fixes omega5"));
    r.push("eq-2-subgroup-of-tilde-g2", ok[2], format!("{n}; fixes omega2' and omega5'"));
    r.push("eq-compact-subgroup-of-O4", ok[3], format!("{n}; fixes omega4"));
    r.push("eq-split-of-O1", ok[4], format!("{n}; fixes omega1"));
    r.push("embedding-generators", ok[5], format!("{n}; derivatives lie in the stabilizer algebras"));
    Ok(r)
}

/// Everything `verify-paper` runs.
pub fn verify_paper(draws: usize) -> Result<Report> {
    let mut r = catalog_checks()?;
    r.extend(identity_checks()?);
    r.extend(compact_checks()?);
    r.extend(embedding_checks(draws, 0x5eed)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_pass() {
        let r = identity_checks().unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn membership_rejects_shear() {
        let mut m = Matrix::identity(7);
        m[(6, 0)] = crate::exterior::int(1);
        let g = LinearMap::from_matrix(m).unwrap();
        assert!(!verify_membership(&g, &omega(8).unwrap()));
        assert!(verify_membership(&LinearMap::identity(), &omega(8).unwrap()));
    }

    #[test]
    fn split_form_of_quaternion_pairs() {
        let want = KForm::from_int_terms(
            3,
            &[
                (&[1, 2, 3], 1),
                (&[1, 4, 5], -1),
                (&[1, 6, 7], 1),
                (&[2, 4, 6], -1),
                (&[2, 5, 7], -1),
                (&[3, 4, 7], -1),
                (&[3, 5, 6], 1),
            ],
        )
        .unwrap();
        assert_eq!(split_form_from_quaternion_pairs().unwrap(), want);
    }

    #[test]
    fn embeddings_small_run() {
        let r = embedding_checks(3, 1).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn json_report_shape() {
        let mut r = Report::default();
        r.push("eq-from-8-to-7", true, "");
        assert_eq!(
            serde_json::to_string(&r.checks).unwrap(),
            r#"[{"anchor":"eq-from-8-to-7","status":"pass"}]"#
        );
    }
}
