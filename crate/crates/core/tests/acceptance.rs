//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::HashSet;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use msf7::algebras::{table, AlgebraElement, AlgebraKind, INTERLEAVED_BASIS, OCTONION_BASIS};
use msf7::exterior::{pullback, wedge, KForm};
use msf7::forms7::{
    b_form, canonical::beta123, canonical::omega2_prime, classify, compact_dim, invariant_keys, is_multisymplectic,
    ms_rank, omega, preferred, random_invertible, stab_dim, Classification,
};
use msf7::stabilizers::{catalog, embedding_checks};
use msf7::topology::{bundled, bundled_names, check_type_default, verify_witness, VerdictStatus};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn form(terms: &[(&[usize], i64)]) -> KForm {
    KForm::from_int_terms(3, terms).expect("valid terms")
}

fn alpha(i: usize) -> KForm {
    KForm::alpha(i)
}

/// ω₈ as printed.
fn printed_omega8() -> KForm {
    form(&[
        (&[1, 2, 3], 1),
        (&[1, 4, 5], 1),
        (&[1, 6, 7], -1),
        (&[2, 4, 6], 1),
        (&[2, 5, 7], 1),
        (&[3, 4, 7], 1),
        (&[3, 5, 6], -1),
    ])
}

/// ω₅ as printed.
fn printed_omega5() -> KForm {
    form(&[
        (&[1, 2, 3], 1),
        (&[1, 4, 5], -1),
        (&[1, 6, 7], 1),
        (&[2, 4, 6], 1),
        (&[2, 5, 7], 1),
        (&[3, 4, 7], 1),
        (&[3, 5, 6], -1),
    ])
}

fn err(e: msf7::Error) -> String {
    e.to_string()
}

fn c1_multisymplectic() -> Outcome {
    for i in 1..=8 {
        ensure(is_multisymplectic(&omega(i).map_err(err)?).map_err(err)?, format!("omega{i} degenerate"))?;
    }
    // Oracle for degeneracy: some nonzero v with i_v ω = 0, found from the
    // 7x21 matrix of values ω(e_a, e_b, e_c).
    let w8 = printed_omega8();
    let mut degenerate = 0;
    for (drop, _) in w8.terms() {
        let reduced: KForm = KForm::from_terms(
            3,
            w8.terms().filter(|(m, _)| *m != drop).map(|(m, c)| (m.indices(), c.clone())),
        )
        .map_err(err)?;
        let rows: Vec<Vec<msf7::exterior::Scalar>> = (1..=7)
            .map(|a| {
                let mut row = Vec::new();
                for b in 1..=7 {
                    for c in (b + 1)..=7 {
                        let args = [
                            msf7::exterior::Vector::basis(a),
                            msf7::exterior::Vector::basis(b),
                            msf7::exterior::Vector::basis(c),
                        ];
                        row.push(reduced.evaluate(&args).unwrap());
                    }
                }
                row
            })
            .collect();
        let oracle_degenerate = msf7::exterior::Matrix::from_rows(rows).map_err(err)?.rank() < 7;
        let got = is_multisymplectic(&reduced).map_err(err)?;
        ensure(got != oracle_degenerate, format!("dropping {drop:?}: is_multisymplectic disagrees with oracle"))?;
        if oracle_degenerate {
            degenerate += 1;
        }
    }
    let mut kills = 0;
    for a in 1..=7 {
        for b in (a + 1)..=7 {
            for c in (b + 1)..=7 {
                let w = KForm::from_int_terms(3, &[(&[a, b, c], 1)]).map_err(err)?;
                kills += usize::from(!is_multisymplectic(&w).map_err(err)?);
            }
        }
    }
    ensure(kills == 35, "a decomposable 3-form passed")?;
    Ok(format!("8/8 canonical forms nondegenerate; {degenerate}/7 single-term drops of omega8 degenerate, all agree with oracle"))
}

fn c2_stabilizer_dims() -> Outcome {
    let d8 = stab_dim(&printed_omega8()).map_err(err)?;
    let d5 = stab_dim(&printed_omega5()).map_err(err)?;
    ensure(d8 == 14, format!("dim stab(omega8) = {d8}"))?;
    ensure(d5 == 14, format!("dim stab(omega5) = {d5}"))?;
    let mut dims = Vec::new();
    for i in 1..=8u8 {
        let w = omega(i).map_err(err)?;
        let d = stab_dim(&w).map_err(err)?;
        ensure(d >= 14, format!("dim stab(omega{i}) = {d} < 14"))?;
        let mut rng = ChaCha8Rng::seed_from_u64(200 + u64::from(i));
        for k in 0..20 {
            let g = random_invertible(&mut rng).map_err(err)?;
            let dk = stab_dim(&pullback(&g, &w)).map_err(err)?;
            ensure(dk == d, format!("omega{i}, draw {k}: {dk} != {d}"))?;
        }
        dims.push(d);
    }
    Ok(format!("stab dims {dims:?}, constant under 20 pullbacks each"))
}

fn c3_compact_dims() -> Outcome {
    let expected = [2, 2, 9, 3, 6, 4, 6, 14];
    let got: Vec<usize> = (1..=8)
        .map(|i| compact_dim(&preferred(i)?.form))
        .collect::<msf7::Result<_>>()
        .map_err(err)?;
    ensure(got == expected, format!("got {got:?}, expected {expected:?}"))?;
    Ok(format!("{got:?}"))
}

fn c4_signatures() -> Outcome {
    let s8 = b_form(&printed_omega8()).map_err(err)?.signature().normalized();
    let s5 = b_form(&printed_omega5()).map_err(err)?.signature().normalized();
    ensure(s8 == (7, 0), format!("omega8 signature {s8:?}"))?;
    ensure(s5 == (4, 3), format!("omega5 signature {s5:?}"))?;
    Ok(format!("omega8 {s8:?}, omega5 {s5:?}"))
}

fn c5_algebra_round_trip() -> Outcome {
    let o = table(AlgebraKind::O);
    let w8 = o.triple_form(&o.basis_from_indices(&OCTONION_BASIS)).map_err(err)?;
    ensure(w8 == printed_omega8(), format!("O gives {w8}"))?;
    let s = table(AlgebraKind::OsplitFromHsplit);
    let w5 = s.triple_form(&s.basis_from_indices(&INTERLEAVED_BASIS)).map_err(err)?;
    ensure(w5 == printed_omega5(), format!("split octonions give {w5}"))?;
    Ok("omega8 and omega5 reproduced term for term".into())
}

fn c6_identities() -> Outcome {
    let a123 = wedge(&wedge(&alpha(1), &alpha(2)), &alpha(3));
    ensure(printed_omega8() == &omega(7).map_err(err)? + &a123, "omega8 != omega7 + a123")?;
    let w5p = &omega2_prime() + &beta123();
    let c = classify(&w5p).map_err(err)?;
    ensure(c == Classification::Orbit(5), format!("omega2' + beta123 classifies as {c}"))?;
    let corr = wedge(
        &alpha(3),
        &(&wedge(&alpha(4), &alpha(7)) - &wedge(&alpha(5), &alpha(6))),
    );
    let w = &omega(6).map_err(err)? - &corr;
    let c = classify(&w).map_err(err)?;
    ensure(c == Classification::Orbit(5), format!("omega6 - correction classifies as {c}"))?;
    Ok("3/3 identities".into())
}

fn c7_transformations() -> Outcome {
    let entries = catalog();
    for t in &entries {
        ensure(t.verify().map_err(err)?, format!("{} fails", t.name))?;
    }
    let report = embedding_checks(50, 0xacce).map_err(err)?;
    if !report.all_passed() {
        let names: Vec<&str> = report.failures().map(|c| c.anchor.as_str()).collect();
        return Err(format!("embedding checks failed: {names:?}"));
    }
    Ok(format!("{} catalog entries; embeddings 50 draws each", entries.len()))
}

fn c8_classifier_fuzz() -> Outcome {
    let keys = invariant_keys().map_err(err)?;
    let distinct: HashSet<_> = keys.iter().collect();
    ensure(distinct.len() == 8, "invariant keys collide")?;
    let per_orbit = msf7::cli::fuzz_iters(100).max(100);
    for i in 1..=8u8 {
        let w = omega(i).map_err(err)?;
        let mut rng = ChaCha8Rng::seed_from_u64(800 + u64::from(i));
        for k in 0..per_orbit {
            let g = random_invertible(&mut rng).map_err(err)?;
            let gw = pullback(&g, &w);
            let c = classify(&gw).map_err(err)?;
            ensure(c == Classification::Orbit(i), format!("orbit {i}, draw {k}: classified as {c}"))?;
            ensure(ms_rank(&gw).map_err(err)? == 7, "rank dropped")?;
        }
    }
    Ok(format!("{} cases, 8 distinct keys", 8 * per_orbit))
}

fn random_element(rng: &mut ChaCha8Rng, dim: usize) -> AlgebraElement {
    let xs: Vec<i64> = (0..dim).map(|_| rng.random_range(-5..=5)).collect();
    AlgebraElement::from_ints(&xs)
}

fn c9_composition_algebras() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for kind in AlgebraKind::ALL {
        let t = table(kind);
        for _ in 0..200 {
            let x = random_element(&mut rng, t.dim());
            let y = random_element(&mut rng, t.dim());
            let xy = t.multiply(&x, &y).map_err(err)?;
            ensure(t.norm(&xy) == t.norm(&x) * t.norm(&y), format!("{} norm not multiplicative", kind.name()))?;
        }
    }
    let o = table(AlgebraKind::O);
    let mut non_assoc = false;
    for _ in 0..200 {
        let x = random_element(&mut rng, 8);
        let y = random_element(&mut rng, 8);
        let z = random_element(&mut rng, 8);
        let m = |a: &AlgebraElement, b: &AlgebraElement| o.multiply(a, b).expect("same dimension");
        ensure(m(&m(&x, &x), &y) == m(&x, &m(&x, &y)), "left alternativity fails")?;
        ensure(m(&m(&y, &x), &x) == m(&y, &m(&x, &x)), "right alternativity fails")?;
        non_assoc |= m(&m(&x, &y), &z) != m(&x, &m(&y, &z));
    }
    ensure(non_assoc, "octonions looked associative")?;
    Ok("norm multiplicative on 200 pairs per algebra; O alternative, not associative".into())
}

fn c10_topology() -> Outcome {
    let admits = |name: &str, t: u8| -> Result<(), String> {
        let m = bundled(name).map_err(err)?;
        let v = check_type_default(&m, t).map_err(err)?;
        ensure(v.status == VerdictStatus::Admits, format!("{name} type {t}: {}", v.status))
    };
    for t in 1..=8 {
        admits("s7", t)?;
    }
    let cp3 = bundled("cp3xs1").map_err(err)?;
    let v4 = check_type_default(&cp3, 4).map_err(err)?;
    ensure(v4.status == VerdictStatus::No, format!("cp3xs1 type 4: {}", v4.status))?;
    for t in [3, 5, 6, 7, 8] {
        admits("cp3xs1", t)?;
    }
    for t in [1, 2, 4] {
        admits("s5xs2", t)?;
    }
    let mut witnesses = 0;
    for name in bundled_names() {
        let m = bundled(name).map_err(err)?;
        let v5 = check_type_default(&m, 5).map_err(err)?.status;
        for t in 6..=8 {
            let vt = check_type_default(&m, t).map_err(err)?.status;
            ensure(vt == v5, format!("{name}: type {t} {vt} but type 5 {v5}"))?;
        }
        for t in 1..=8 {
            let Ok(v) = check_type_default(&m, t) else { continue };
            if v.status == VerdictStatus::Admits {
                let w = v.witness.ok_or(format!("{name} type {t}: ADMITS without witness"))?;
                ensure(verify_witness(&m, t, &w).map_err(err)?, format!("{name} type {t}: witness fails"))?;
                witnesses += 1;
            }
        }
    }
    Ok(format!("all verdicts as expected; {witnesses} witnesses re-verified"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("multisymplecticity", c1_multisymplectic),
        ("stabilizer dimensions", c2_stabilizer_dims),
        ("compact dimensions", c3_compact_dims),
        ("B-form signatures", c4_signatures),
        ("algebra to form round trip", c5_algebra_round_trip),
        ("identity suite", c6_identities),
        ("transformation catalog", c7_transformations),
        ("classifier fuzz", c8_classifier_fuzz),
        ("composition algebras", c9_composition_algebras),
        ("topology checker", c10_topology),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{}/10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
