use msf7::cli::fuzz_iters;
use msf7::exterior::{pullback, KForm};
use msf7::forms7::{
    b_form, canonical, classify, in_stabilizer_algebra, invariant_key, is_closed_under_bracket, ms_rank, omega,
    random_invertible, sample_orbit, stabilizer_algebra, Classification, Variant,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn invariants_are_covariant(orbit in 1u8..=8, seed in any::<u64>()) {
        let w = omega(orbit).unwrap();
        let (gw, g) = sample_orbit(orbit, seed).unwrap();
        prop_assert_eq!(&gw, &pullback(&g, &w));
        prop_assert_eq!(invariant_key(&gw).unwrap(), invariant_key(&w).unwrap());
        prop_assert_eq!(
            b_form(&gw).unwrap().signature().normalized(),
            b_form(&w).unwrap().signature().normalized()
        );
    }

    #[test]
    fn stabilizer_algebra_is_conjugated(orbit in 1u8..=8, seed in any::<u64>()) {
        let w = omega(orbit).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_invertible(&mut rng).unwrap();
        let gw = pullback(&g, &w);
        let ginv = g.inverse().unwrap();
        for a in stabilizer_algebra(&w).unwrap().iter().take(4) {
            let moved = ginv.compose(a).compose(&g);
            prop_assert!(in_stabilizer_algebra(&moved, &gw).unwrap());
        }
    }
}

#[test]
fn seeded_samples_classify_to_their_orbit() {
    let n = fuzz_iters(10) as u64;
    for orbit in 1..=8 {
        for seed in 0..n {
            let (w, _) = sample_orbit(orbit, seed).unwrap();
            assert_eq!(classify(&w).unwrap(), Classification::Orbit(orbit), "orbit {orbit} seed {seed}");
        }
    }
}

#[test]
fn sampling_is_deterministic() {
    assert_eq!(sample_orbit(6, 42).unwrap(), sample_orbit(6, 42).unwrap());
    assert_ne!(sample_orbit(6, 42).unwrap().1, sample_orbit(6, 43).unwrap().1);
}

#[test]
fn prime_variants_stay_in_orbit() {
    for orbit in [2, 5, 6, 7] {
        let c = canonical(orbit, Variant::Prime).unwrap();
        assert_eq!(classify(&c.form).unwrap(), Classification::Orbit(orbit));
        if let Some(g) = &c.change {
            assert_eq!(pullback(g, &omega(orbit).unwrap()), c.form);
        }
    }
    assert!(canonical(1, Variant::Prime).is_err());
}

#[test]
fn stabilizer_algebras_are_lie_algebras() {
    for orbit in 1..=8 {
        let basis = stabilizer_algebra(&omega(orbit).unwrap()).unwrap();
        assert!(is_closed_under_bracket(&basis), "orbit {orbit}");
    }
}

#[test]
fn degenerate_forms_are_rejected() {
    let w = KForm::from_int_terms(3, &[(&[1, 2, 3], 1), (&[4, 5, 6], 1)]).unwrap();
    assert!(ms_rank(&w).unwrap() < 7);
    assert_eq!(classify(&w).unwrap(), Classification::NonMultisymplectic);
    assert!(classify(&KForm::alpha(1)).is_err());
}
