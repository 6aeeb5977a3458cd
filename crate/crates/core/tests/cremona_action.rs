use vcubic::cremona::{
    cofactor_quadrics, cremona_gram_image, cremona_image_via_blowup, gram_image_involutive, involution_check,
    standard_matrix, MarkedGram, SparsePoly,
};
use vcubic::matrix::{int, IntMatrix};
use vcubic::Error;

#[test]
fn standard_quadrics() {
    let q = cofactor_quadrics(&standard_matrix()).unwrap();
    assert_eq!(q[0].to_string(), "X2*X4 - X3^2");
    assert_eq!(q[2].to_string(), "X0*X4 - X5^2");
    assert!(q.iter().all(|p| p.is_homogeneous_of(2)));
}

#[test]
fn diagonal_cofactors() {
    let x = SparsePoly::var;
    let z = SparsePoly::zero;
    let m = [[x(0), z(), z()], [z(), x(2), z()], [z(), z(), x(4)]];
    let q = cofactor_quadrics(&m).unwrap();
    assert_eq!(q[0], &x(2) * &x(4));
    assert_eq!(q[2], &x(0) * &x(4));
    assert_eq!(q[4], &x(0) * &x(2));
    assert!(q[1].is_zero() && q[3].is_zero() && q[5].is_zero());
    let bad = [[x(0), x(1), z()], [z(), x(2), z()], [z(), z(), x(4)]];
    assert!(matches!(cofactor_quadrics(&bad), Err(Error::Dimension(_))));
}

#[test]
fn symbolic_involution() {
    let r = involution_check().unwrap();
    assert!(r.holds && r.quartics_homogeneous);
    assert_eq!(r.quartics.len(), 6);
}

#[test]
fn gram_images() {
    for ((a, b, c), (a2, b2, c2)) in [
        ((1, 1, 9), (3, 1, 13)),
        ((1, -1, 13), (5, -1, 29)),
        ((0, 1, 14), (-1, 1, 15)),
    ] {
        let g = MarkedGram::from_abc(a, b, c);
        let img = cremona_gram_image(&g);
        assert_eq!(img.abc(), (int(a2), int(b2), int(c2)));
        assert_eq!(img.labels(), &["h2'".to_string(), "v'".into(), "s'".into()]);
        assert_eq!(cremona_image_via_blowup(&g), img);
    }
    let fixed = MarkedGram::from_abc(1, 3, 7);
    assert_eq!(cremona_gram_image(&fixed).c(), &int(7));
}

#[test]
fn involution_on_lattices() {
    let c = gram_image_involutive(&MarkedGram::from_abc(1, 1, 9)).unwrap();
    assert!(c.holds());
    assert_eq!(c.image.det(), int(173));
}

#[test]
fn frame_violation() {
    let err = MarkedGram::new(IntMatrix::from_arrays(&[[3, 1, 1], [1, 7, 0], [1, 0, 9]])).unwrap_err();
    assert_eq!(err.to_string(), "not in Veronese frame");
    let parsed = MarkedGram::parse(r#"{"gram":[[3,4,1],[4,12,1],[1,1,9]],"labels":["h2","v","s"]}"#).unwrap();
    assert_eq!(parsed, MarkedGram::from_abc(1, 1, 9));
    assert_eq!(MarkedGram::parse("3,4,1;4,12,1;1,1,9").unwrap(), parsed);
}
