//! Structural properties of the mountain ranges, checked on random knots.

use lensknot::legendrian::{
    are_contactomorphic, mountain_range, stabilize, LegendrianClass, MountainRange, RotationMode, Sign,
    SlopeCase, UtStructure,
};
use lensknot::topology::{seifert_data, LensSpace, TorusKnot};
use lensknot::{Int, Rational};
use num_traits::Signed;
use proptest::prelude::*;

fn lens_and_knot() -> impl Strategy<Value = (LensSpace, TorusKnot)> {
    (2i64..40, 1i64..40, -25i64..=25, -25i64..=25).prop_filter_map("coprime", |(p, q, a, b)| {
        let lens = LensSpace::new(p, q % p).ok()?;
        let knot = TorusKnot::new(a, b).ok()?;
        Some((lens, knot))
    })
}

fn range(lens: &LensSpace, knot: &TorusKnot, sign: Sign) -> Option<MountainRange> {
    let xi = UtStructure::new(lens.clone(), sign).ok()?;
    mountain_range(&xi, knot, RotationMode::ProofEnum).ok()
}

fn one() -> Rational {
    Rational::from(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn lattice_integrality((lens, knot) in lens_and_knot()) {
        let Some(mr) = range(&lens, &knot, Sign::Plus) else { return Ok(()) };
        let r = mr.frame.order().clone();
        prop_assert!(mr.max_tb.scale(&r).is_integer());
        for pk in &mr.peaks {
            prop_assert!(pk.rot.scale(&r).is_integer());
        }
        for (tb, rot) in mr.lattice(3) {
            prop_assert!(tb.scale(&r).is_integer() && rot.scale(&r).is_integer());
        }
    }

    #[test]
    fn branch_steps_are_multiples_of_two_over_r((lens, knot) in lens_and_knot()) {
        let Some(mr) = range(&lens, &knot, Sign::Plus) else { return Ok(()) };
        let r = mr.frame.order().clone();
        let two = Int::from(2);
        for w in mr.peaks.windows(2) {
            if w[0].certificate.branch != w[1].certificate.branch {
                continue;
            }
            let step = (&w[1].rot - &w[0].rot).scale(&r).to_integer().unwrap();
            prop_assert!(num_integer::Integer::is_multiple_of(&step, &two));
        }
    }

    #[test]
    fn two_branch_sets_are_symmetric((lens, knot) in lens_and_knot()) {
        let Some(mr) = range(&lens, &knot, Sign::Plus) else { return Ok(()) };
        if mr.case().is_two_branch() {
            let rots = mr.peak_rots();
            let mut neg: Vec<Rational> = rots.iter().map(|r| -r).collect();
            neg.sort();
            prop_assert_eq!(neg, rots);
        }
    }

    #[test]
    fn mirror_structure_negates_rot((lens, knot) in lens_and_knot()) {
        let (Some(plus), Some(minus)) = (range(&lens, &knot, Sign::Plus), range(&lens, &knot, Sign::Minus)) else {
            return Ok(());
        };
        prop_assert_eq!(&plus.max_tb, &minus.max_tb);
        let mut neg: Vec<Rational> = plus.peak_rots().iter().map(|r| -r).collect();
        neg.sort();
        prop_assert_eq!(neg, minus.peak_rots());
    }

    #[test]
    fn stabilization_closure_and_destabilization((lens, knot) in lens_and_knot()) {
        let Some(mr) = range(&lens, &knot, Sign::Plus) else { return Ok(()) };
        for (tb, rot) in mr.lattice(3) {
            prop_assert!(mr.is_realizable(&(&tb - &one()), &(&rot + &one())));
            prop_assert!(mr.is_realizable(&(&tb - &one()), &(&rot - &one())));
            if tb != mr.max_tb {
                let up = &tb + &one();
                prop_assert!(mr.is_realizable(&up, &(&rot + &one())) || mr.is_realizable(&up, &(&rot - &one())));
            }
        }
        prop_assert!(!mr.is_realizable(&(&mr.max_tb + &one()), &mr.peaks[0].rot));
    }

    #[test]
    fn negative_stabilization_preserves_sl((lens, knot) in lens_and_knot()) {
        let Some(mr) = range(&lens, &knot, Sign::Plus) else { return Ok(()) };
        let xi = UtStructure::new(lens, Sign::Plus).unwrap();
        let t = mr.transverse();
        for pk in &mr.peaks {
            let c = LegendrianClass::new(xi.clone(), knot.clone(), mr.max_tb.clone(), pk.rot.clone()).unwrap();
            let s = stabilize(&c, Sign::Minus);
            prop_assert_eq!(c.tb() - c.rot(), s.tb() - s.rot());
            prop_assert!(t.is_realizable(&(s.tb() - s.rot())));
            prop_assert!(t.sl_max >= c.tb() - c.rot());
        }
    }

    #[test]
    fn bennequin_type_bound((lens, knot) in lens_and_knot()) {
        let Some(mr) = range(&lens, &knot, Sign::Plus) else { return Ok(()) };
        let sd = seifert_data(&lens, &knot);
        let bound = (-sd.chi).checked_div(&Rational::from_int(sd.order)).unwrap();
        for rot in mr.peak_rots() {
            prop_assert!(&mr.max_tb + &rot.abs() <= bound);
        }
    }

    #[test]
    fn closed_form_contains_proof_enum((lens, knot) in lens_and_knot()) {
        let xi = UtStructure::new(lens, Sign::Plus).unwrap();
        let Ok(pe) = mountain_range(&xi, &knot, RotationMode::ProofEnum) else { return Ok(()) };
        if !pe.case().is_two_branch() {
            return Ok(());
        }
        let cf = mountain_range(&xi, &knot, RotationMode::ClosedForm).unwrap();
        let count = pe.frame.branch_count(xi.lens()).unwrap();
        for rot in pe.peak_rots() {
            prop_assert!(cf.peak_rots().contains(&rot));
        }
        for pk in &cf.peaks {
            if !pe.peak_rots().contains(&pk.rot) {
                let f = pk.certificate.f_tn_mu1p.clone().unwrap();
                prop_assert_eq!(f.abs(), &count + 1);
            }
        }
    }

    #[test]
    fn contactomorphism_is_an_equivalence(
        (lens, knot) in lens_and_knot(),
        picks in proptest::collection::vec((0usize..64, 0u32..3), 3),
    ) {
        let Some(mr) = range(&lens, &knot, Sign::Plus) else { return Ok(()) };
        let xi = UtStructure::new(lens.clone(), Sign::Plus).unwrap();
        let lat = mr.lattice(2);
        let classes: Vec<LegendrianClass> = picks
            .iter()
            .map(|&(i, _)| {
                let (tb, rot) = lat[i % lat.len()].clone();
                LegendrianClass::new(xi.clone(), knot.clone(), tb, rot).unwrap()
            })
            .collect();
        let (x, y, z) = (&classes[0], &classes[1], &classes[2]);
        prop_assert!(are_contactomorphic(x, x));
        prop_assert_eq!(are_contactomorphic(x, y), are_contactomorphic(y, x));
        if are_contactomorphic(x, y) && are_contactomorphic(y, z) {
            prop_assert!(are_contactomorphic(x, z));
        }
    }
}

#[test]
fn divide_ii_has_a_single_peak() {
    let xi = UtStructure::new(LensSpace::new(11, 3).unwrap(), Sign::Plus).unwrap();
    let mut seen = 0;
    for a in 1i64..30 {
        for b in -60i64..0 {
            let Ok(knot) = TorusKnot::new(a, b) else { continue };
            let mr = match mountain_range(&xi, &knot, RotationMode::ProofEnum) {
                Ok(mr) if mr.case() == SlopeCase::DivideII => mr,
                _ => continue,
            };
            seen += 1;
            assert_eq!(mr.peaks.len(), 1, "{knot}");
        }
    }
    assert!(seen > 10);
}
