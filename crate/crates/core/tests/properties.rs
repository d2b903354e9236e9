// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use common::*;
use cyclide::blending::cone_fourth_residual;
use cyclide::conditions::quartic_dupin_conditions;
use cyclide::invariants::j0_villarceau_gap_form;
use cyclide::io::{read_vector_json, sample_circle, write_vector_json};
use cyclide::scalar::{int, square};
use cyclide::*;
use num_traits::Zero;
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;

fn seeded() -> impl Strategy<Value = ChaCha8Rng> {
    any::<u64>().prop_map(rng)
}

fn scale() -> impl Strategy<Value = Scalar> {
    (1i64..=40, 1i64..=17, any::<bool>()).prop_map(|(n, d, neg)| q(if neg { -n } else { n }, d))
}

fn radius() -> impl Strategy<Value = Scalar> {
    (1i64..=12, 1i64..=7).prop_map(|(n, d)| q(n, d))
}

fn any_member(rng: &mut ChaCha8Rng, r: &Scalar) -> CircleFamilyVector {
    use rand::Rng;
    match rng.gen_range(0..4) {
        0 => villarceau_member(rng, r, false),
        1 => horn_member(rng, r, false),
        2 => principal_member(rng, r),
        _ => arbitrary_vector(rng, r),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalize_is_canonical(mut g in seeded(), r in radius(), s in scale()) {
        let v = arbitrary_vector(&mut g, &r);
        let n = v.normalize();
        prop_assert_eq!(n.normalize(), n.clone());
        prop_assert_eq!(v.scaled(&s).unwrap().normalize(), n.clone());
        prop_assert!(v.projectively_equal(&n));
        prop_assert!(n.coordinates().all(|c| c.is_integer()));
    }

    #[test]
    fn json_round_trip(mut g in seeded(), r in radius()) {
        let v = arbitrary_vector(&mut g, &r).normalize();
        let text = v.to_json();
        prop_assert_eq!(CircleFamilyVector::from_json(&text).unwrap(), v.clone());
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("v.json");
        write_vector_json(&path, &v).unwrap();
        prop_assert_eq!(read_vector_json(&path).unwrap(), v.clone());
        let first = std::fs::read(&path).unwrap();
        write_vector_json(&path, &read_vector_json(&path).unwrap()).unwrap();
        prop_assert_eq!(std::fs::read(&path).unwrap(), first);
    }

    #[test]
    fn every_vector_contains_the_circle(mut g in seeded(), r in radius()) {
        let v = arbitrary_vector(&mut g, &r);
        prop_assert!(contains_circle(&expand(&v), &r));
        let poly = v.polynomial();
        for p in sample_circle(&r, 3, true).unwrap() {
            prop_assert!(poly.evaluate(&p.point).is_zero());
        }
    }

    #[test]
    fn intermediate_form_is_a_translate(mut g in seeded(), r in radius()) {
        let v = arbitrary_vector(&mut g, &r);
        prop_assume!(!v.u()[0].is_zero());
        let closed = to_intermediate(&v).unwrap();
        prop_assert_eq!(&closed, &expand(&v).to_intermediate().unwrap());
        let u0 = v.u()[0].clone();
        let axes = [TrivariatePolynomial::x(), TrivariatePolynomial::y(), TrivariatePolynomial::z()];
        let shifted: [TrivariatePolynomial; 3] = std::array::from_fn(|i| {
            let h = &v.u()[i + 1] / (int(2) * &u0);
            &axes[i] - &TrivariatePolynomial::constant(h)
        });
        let moved = v.polynomial().substitute(&shifted).scale(&u0.recip());
        prop_assert_eq!(closed.polynomial(), moved);
    }

    #[test]
    fn representative_tori_are_dupin(a in radius(), b in radius()) {
        prop_assume!(a != b);
        let (minor, major) = if a < b { (a, b) } else { (b, a) };
        let v = representative_principal_torus(&minor, &major).unwrap();
        prop_assert!(quartic_dupin_conditions(&to_intermediate(&v).unwrap()).all_vanish);
    }

    #[test]
    fn classification_is_projective(mut g in seeded(), r in radius(), s in scale()) {
        let v = any_member(&mut g, &r);
        let w = v.scaled(&s).unwrap();
        let (cv, cw) = (classify(&v), classify(&w));
        prop_assert_eq!(cv.verdict, cw.verdict);
        prop_assert_eq!(cv.degenerate.rank_l, cw.degenerate.rank_l);
        prop_assert_eq!(cv.principal.is_member(), cw.principal.is_member());
    }

    #[test]
    fn classification_is_rotation_invariant(mut g in seeded(), r in radius()) {
        let v = any_member(&mut g, &r);
        let w = rotate(&v, &unit(&mut g));
        let (cv, cw) = (classify(&v), classify(&w));
        prop_assert_eq!(cv.verdict, cw.verdict);
        prop_assert_eq!(cv.degenerate.rank_l, cw.degenerate.rank_l);
        prop_assert_eq!(cv.villarceau.gap, cw.villarceau.gap);
    }

    #[test]
    fn villarceau_members_are_not_principal(mut g in seeded(), r in radius()) {
        let v = villarceau_member(&mut g, &r, false);
        prop_assert!(villarceau_test(&v).is_member());
        prop_assert!(!principal_test(&v).is_member());
    }

    #[test]
    fn horn_vectors_are_principal(mut g in seeded(), r in radius(), cubic in any::<bool>()) {
        let v = horn_member(&mut g, &r, cubic);
        let c = classify(&v);
        prop_assert!(c.villarceau.is_horn_boundary());
        prop_assert!(c.principal.is_member());
        if c.verdict == Verdict::HornBoundary {
            prop_assert_eq!(j0(&v).unwrap().smoothness, Smoothness::Horn);
        }
    }

    #[test]
    fn blend_check_is_reflexive_symmetric_projective(
        mut g in seeded(), r in radius(), s in scale(), t in scale()
    ) {
        let a = any_member(&mut g, &r);
        let b = any_member(&mut g, &r);
        prop_assume!(TangencyFunction::of(&a).is_some() && TangencyFunction::of(&b).is_some());
        prop_assert!(blend_check(&a, &a).unwrap());
        let ab = blend_check(&a, &b).unwrap();
        prop_assert_eq!(ab, blend_check(&b, &a).unwrap());
        prop_assert_eq!(ab, blend_check(&a.scaled(&s).unwrap(), &b.scaled(&t).unwrap()).unwrap());
    }

    #[test]
    fn cone_family_blends(mut g in seeded(), r in radius(), lambda in scale()) {
        let a = cone_member(&mut g, &r, &lambda);
        let b = cone_member(&mut g, &r, &lambda);
        prop_assert!(cone_fourth_residual(&a, &lambda).is_zero());
        prop_assume!(TangencyFunction::of(&a).is_some() && TangencyFunction::of(&b).is_some());
        prop_assert!(blend_check(&a, &b).unwrap());
        let turned = rotate(&a, &unit(&mut g));
        prop_assert!(principal_test(&turned).is_member());
        prop_assert_eq!(tangency_constant(&turned), ConeParameter::Finite(lambda.clone()));
        prop_assert!(blend_check(&turned, &b).unwrap());
    }

    #[test]
    fn pencil_composes(mut g in seeded(), r in radius(), s in scale(), t in scale()) {
        let v = villarceau_member(&mut g, &r, false);
        prop_assume!(classify(&v).verdict == Verdict::VillarceauDupin);
        let vs = villarceau_pencil(&v, &s).unwrap();
        prop_assume!(classify(&vs).verdict == Verdict::VillarceauDupin);
        prop_assert_eq!(villarceau_pencil(&vs, &t).unwrap(), villarceau_pencil(&v, &(&s + &t)).unwrap());
        prop_assert!(blend_check(&v, &vs).unwrap());
    }

    #[test]
    fn j0_is_projective(mut g in seeded(), r in radius(), s in scale()) {
        let v = any_member(&mut g, &r);
        match j0(&v) {
            Ok(value) => prop_assert_eq!(j0(&v.scaled(&s).unwrap()).unwrap(), value),
            Err(e) => prop_assert_eq!(j0(&v.scaled(&s).unwrap()).unwrap_err().kind(), e.kind()),
        }
    }

    #[test]
    fn villarceau_invariant_forms_agree(mut g in seeded(), r in radius()) {
        let v = villarceau_member(&mut g, &r, false);
        prop_assume!(classify(&v).verdict == Verdict::VillarceauDupin);
        let value = j0(&v).unwrap();
        prop_assert_eq!(value.smoothness, Smoothness::Smooth);
        prop_assert!(value.value <= q(1, 4));
        prop_assert_eq!(j0_villarceau_gap_form(&v).unwrap(), value.value);
    }

    #[test]
    fn solvers_stay_on_the_principal_component(mut g in seeded(), r in radius()) {
        let v = principal_member(&mut g, &r);
        prop_assert!(principal_test(&v).is_member());
        let env = envelope(&v);
        prop_assert!(env.implicit().is_some());
    }
}

#[test]
fn circle_samples_are_exact_up_to_ten_thousand() {
    let r = q(17, 5);
    for n in [1, 7, 10_000] {
        let pts = sample_circle(&r, n, true).unwrap();
        assert_eq!(pts.len(), 2 * n as usize + 2);
        for p in &pts {
            let [x, y, z] = &p.point;
            assert!(x.is_zero());
            assert_eq!(square(y) + square(z), square(&r));
        }
    }
}
