use vcubic::cremona::MarkedGram;
use vcubic::lattice::{isometry_exists, BinaryForm, GramLattice};
use vcubic::matrix::{int, IntMatrix};
use vcubic::moduli::discs::admissible_up_to;
use vcubic::moduli::{
    admissible, bigger_disc_report, c20_c14_survey, component_gram, disc_nonempty, identify_components, labelling_form,
    represented_discs, reproduce_new_rationals, tau_bound, tau_range, veronese_frame, WitnessSearch,
};
use vcubic::Error;

fn gram(rows: &[[i64; 3]; 3]) -> IntMatrix {
    IntMatrix::from_arrays(rows)
}

#[test]
fn discriminant_predicates() {
    assert!(disc_nonempty(8) && disc_nonempty(20) && !disc_nonempty(7) && !disc_nonempty(4));
    assert!(admissible(14) && !admissible(20) && !admissible(18));
    assert_eq!(
        admissible_up_to(14, 200),
        vec![14, 26, 38, 42, 62, 74, 78, 86, 98, 114, 122, 134, 146, 158, 182, 186, 194]
    );
}

#[test]
fn tau_bound_against_squares() {
    for (d1, d2, n) in [(20, 26, 5), (14, 20, 3), (20, 146, 16)] {
        assert_eq!(tau_bound(d1, d2).unwrap(), n);
    }
    // N is the largest integer with N² < 4·n₁·(n₂ − 1) when both are 2 mod 6
    for d1 in (14..=80).step_by(6) {
        for d2 in (d1 + 6..=200).step_by(6) {
            let (n1, n2) = (d1 / 6, d2 / 6);
            let oracle = (0..).take_while(|n: &i64| n * n < 4 * n1 * (n2 - 1)).last().unwrap();
            assert_eq!(tau_bound(d1, d2).unwrap(), oracle, "({d1}, {d2})");
        }
    }
}

#[test]
fn listed_components() {
    for (d, tau, g, det) in [
        (26, 0, [[3, 1, 1], [1, 7, 0], [1, 0, 9]], 173),
        (38, -2, [[3, 1, 1], [1, 7, -2], [1, -2, 13]], 237),
        (42, 1, [[3, 1, 0], [1, 7, 1], [0, 1, 14]], 277),
    ] {
        let c = component_gram(20, d, tau).unwrap();
        assert_eq!(c.gram, gram(&g));
        assert_eq!((c.disc, c.closed_form_disc), (det, det));
        assert!(c.norm2_free() && c.all_saturated());
    }
}

#[test]
fn closed_form_determinant_over_sweeps() {
    for (d1, d2) in [(20, 26), (20, 38), (20, 42), (14, 20), (14, 26), (12, 18)] {
        for tau in tau_range(d1, d2).unwrap() {
            let c = component_gram(d1, d2, tau).unwrap();
            assert_eq!(c.disc, c.closed_form_disc, "({d1}, {d2}, {tau})");
        }
    }
}

#[test]
fn component_errors() {
    assert!(matches!(component_gram(20, 26, 6), Err(Error::OutOfRange(_))));
    assert!(matches!(component_gram(20, 21, 0), Err(Error::InvalidDiscriminant(_))));
}

#[test]
fn reframing() {
    for (src, dst) in [
        ([[3, 1, 1], [1, 7, 0], [1, 0, 9]], [[3, 4, 1], [4, 12, 1], [1, 1, 9]]),
        (
            [[3, 1, 1], [1, 7, -2], [1, -2, 13]],
            [[3, 4, 1], [4, 12, -1], [1, -1, 13]],
        ),
        ([[3, 1, 0], [1, 7, 1], [0, 1, 14]], [[3, 4, 0], [4, 12, 1], [0, 1, 14]]),
    ] {
        let lat = GramLattice::new(gram(&src)).unwrap();
        let f = veronese_frame(&lat).unwrap();
        assert_eq!(f.gram(), &gram(&dst));
        assert!(isometry_exists(&lat, &f.lattice().unwrap()).unwrap().is_some());
    }
    // (3 0 0; 0 3 0; 0 0 3) has h² but no Veronese class
    let no = GramLattice::new(gram(&[[3, 0, 0], [0, 3, 0], [0, 0, 3]])).unwrap();
    assert_eq!(veronese_frame(&no).unwrap_err(), Error::NoVeroneseFrame);
}

#[test]
fn labelling_forms() {
    assert_eq!(
        labelling_form(&gram(&[[3, 1, 1], [1, 7, -16], [1, -16, 49]])).unwrap(),
        BinaryForm::new(20, -98, 146)
    );
    for n in 2..12 {
        let img = MarkedGram::from_abc(3, 1, 2 * n + 5);
        assert_eq!(labelling_form(img.gram()).unwrap(), BinaryForm::new(20, -18, 6 * n + 6));
        let img = MarkedGram::from_abc(-1, 1, 2 * n + 1);
        assert_eq!(labelling_form(img.gram()).unwrap(), BinaryForm::new(20, 14, 6 * n + 2));
    }
}

#[test]
fn represented_set_for_146_image() {
    let f = BinaryForm::new(20, -98, 146);
    let reps = represented_discs(&f, 42).unwrap();
    let ds: Vec<i64> = reps.iter().map(|r| r.d).collect();
    assert!(ds.contains(&20));
    for d in [2, 6, 8, 14, 18, 26, 38, 42] {
        assert!(!ds.contains(&d));
    }
    let twenty = reps.iter().find(|r| r.d == 20).unwrap();
    assert_eq!(twenty.witness, (int(1), int(0)));
}

#[test]
fn new_rationals() {
    let r = reproduce_new_rationals().unwrap();
    let images = [
        [[3, 4, 3], [4, 12, 1], [3, 1, 13]],
        [[3, 4, 5], [4, 12, -1], [5, -1, 29]],
        [[3, 4, -1], [4, 12, 1], [-1, 1, 15]],
    ];
    let equivalents = [
        None,
        Some([[3, 1, 1], [1, 7, 8], [1, 8, 21]]),
        Some([[3, 1, 1], [1, 7, 18], [1, 18, 61]]),
    ];
    for ((rep, img), eq) in r.iter().zip(images).zip(equivalents) {
        assert_eq!(rep.data.image.gram(), &gram(&img));
        assert!(rep.excluded_list_clear);
        if let Some(eq) = eq {
            let a = GramLattice::new(gram(&eq)).unwrap();
            assert!(isometry_exists(&a, &rep.data.image.lattice().unwrap())
                .unwrap()
                .is_some());
        }
    }
    assert_eq!(r.iter().map(|x| x.target_disc).collect::<Vec<_>>(), vec![146, 62, 182]);
}

#[test]
fn bigger_discriminants() {
    for d in admissible_up_to(14, 80) {
        let r = bigger_disc_report(d, 500).unwrap();
        assert!(r.clause1 && r.only_multiples_of_20, "d = {d}");
    }
    let r14 = bigger_disc_report(14, 500).unwrap();
    assert_eq!(r14.expected_form, BinaryForm::new(20, -18, 18));
    assert!(matches!(r14.clause2, WitnessSearch::WitnessFound { .. }));
    let r26 = bigger_disc_report(26, 500).unwrap();
    assert_eq!(r26.expected_form, BinaryForm::new(20, -18, 30));
    assert!(matches!(r26.clause2, WitnessSearch::WitnessFound { .. }));
    assert!(matches!(
        bigger_disc_report(26, 30).unwrap().clause2,
        WitnessSearch::InconclusiveBelowBound { bound: 30 }
    ));
    assert!(matches!(
        bigger_disc_report(20, 500),
        Err(Error::InvalidDiscriminant(_))
    ));
}

#[test]
fn survey() {
    let rows = c20_c14_survey().unwrap();
    assert_eq!(rows.len(), 9);
    for r in &rows {
        assert_eq!(r.det, (280 - (1 - 3 * r.tau).pow(2)) / 3);
        assert!(r.norm2_free && r.saturated);
        assert_eq!(r.guaranteed, r.tau.abs() <= 3);
        assert_eq!(r.conditional, r.tau.abs() == 4);
    }
    let row0 = rows.iter().find(|r| r.tau == 0).unwrap();
    assert_eq!(row0.gram, gram(&[[3, 1, 1], [1, 7, 0], [1, 0, 5]]));
    let ids: Vec<(i64, i64)> = row0.image_components.iter().map(|c| (c.d2, c.tau)).collect();
    assert!(ids.contains(&(62, -10)) && ids.contains(&(18, 3)));
}

#[test]
fn identification_of_the_146_image() {
    let img = MarkedGram::from_abc(3, 1, 13);
    let ids = identify_components(img.gram(), 20, 150).unwrap();
    assert!(ids.iter().any(|c| (c.d2, c.tau) == (146, -16)));
}
