mod common;

use nlspec_core::census::canonical_form;
use nlspec_core::families::{
    canonical_partition, closed_form_spectrum, make_family, FamilyId, FamilyParams, FamilySpec,
};
use nlspec_core::graph::{diameter, is_connected};
use nlspec_core::partitions::{is_equitable, quotient_matrix, verify_quotient_embedding};
use nlspec_core::poly::{int, multiplicity_at, rat, Polynomial};
use nlspec_core::spectral::{classify, random_walk_laplacian, rho_second_smallest_is_one, spectral_summary};

fn g1_members(n: usize) -> impl Iterator<Item = FamilySpec> {
    (0..=n - 4).map(move |a| FamilySpec::G1 { a, b: n - 4 - a })
}

#[test]
fn extremal_char_polys_match_formula() {
    for n in 5..=12usize {
        let k = n as i64;
        let g1 = common::closed_form_by_formula(k, int(1));
        for spec in g1_members(n) {
            let p = random_walk_laplacian(&make_family(&spec).unwrap()).unwrap().char_poly();
            assert_eq!(p, g1, "{spec}");
        }
        let g2 = common::closed_form_by_formula(k, rat(k * k - 3 * k + 4, k * k - 3 * k + 2));
        let p = random_walk_laplacian(&make_family(&FamilySpec::G2 { n }).unwrap()).unwrap().char_poly();
        assert_eq!(p, g2, "g2 n={n}");
    }
}

#[test]
fn quadratic_roots_follow_sum_and_product_formulas() {
    // roots (2n - 3 +- sqrt(4n - 7)) / (2n - 4): sum (2n-3)/(n-2) and
    // product ((2n-3)^2 - (4n-7)) / (2n-4)^2
    for n in 5..=20i64 {
        let f = closed_form_spectrum(FamilyId::G1, n as usize).unwrap();
        let sum = rat(2 * n - 3, n - 2);
        let product = rat((2 * n - 3) * (2 * n - 3) - (4 * n - 7), (2 * n - 4) * (2 * n - 4));
        assert_eq!(f.quadratic.coeff(1), -sum.clone());
        assert_eq!(f.quadratic.coeff(0), product);
        assert_eq!(f.quadratic.coeff(0), int(1));
        assert_eq!(f.trace(), int(n));
        let g2 = closed_form_spectrum(FamilyId::G2, n as usize).unwrap();
        assert_eq!(g2.quadratic.coeff(1), -sum);
        assert_eq!(g2.trace(), int(n));
    }
}

#[test]
fn closed_form_examples() {
    let g1 = closed_form_spectrum(FamilyId::G1, 6).unwrap();
    assert_eq!(g1.theta, rat(5, 4));
    assert_eq!(g1.theta_multiplicity, 3);
    let g2 = closed_form_spectrum(FamilyId::G2, 5).unwrap();
    // (28 +- sqrt(112)) / 24 has sum 7/3 and product (784 - 112) / 576 = 7/6
    assert_eq!(g2.quadratic, "x^2 - 7/3*x + 7/6".parse::<Polynomial>().unwrap());
    let s = spectral_summary(&make_family(&FamilySpec::G1 { a: 1, b: 1 }).unwrap()).unwrap();
    assert_eq!(s.component_at(3), Some(&"x - 5/4".parse().unwrap()));
    assert_eq!(s.component_at(1), Some(&"x^3 - 9/4*x^2 + x".parse().unwrap()));
}

#[test]
fn g1_is_symmetric_in_its_parameters() {
    for n in 5..=12 {
        for a in 0..=n - 4 {
            let b = n - 4 - a;
            let x = canonical_form(&make_family(&FamilySpec::G1 { a, b }).unwrap());
            let y = canonical_form(&make_family(&FamilySpec::G1 { a: b, b: a }).unwrap());
            assert_eq!(x, y, "G1({a},{b})");
        }
    }
}

#[test]
fn extremal_families_classify_as_expected() {
    for n in 5..=10 {
        for spec in g1_members(n) {
            let r = classify(&make_family(&spec).unwrap()).unwrap();
            assert!(r.in_g1, "{spec}");
            assert_eq!(r.diam, 3, "{spec}");
        }
        let r = classify(&make_family(&FamilySpec::G2 { n }).unwrap()).unwrap();
        assert!(r.in_g1 && r.cograph && r.diam == 2 && r.nu == 2, "g2 n={n}");
    }
    assert!(!rho_second_smallest_is_one(&make_family(&FamilySpec::G2 { n: 5 }).unwrap()).unwrap());
}

#[test]
fn canonical_partitions_are_equitable_and_embed() {
    let mut specs: Vec<FamilySpec> = Vec::new();
    for n in 5..=10 {
        specs.extend(g1_members(n));
        specs.push(FamilySpec::G2 { n });
        specs.push(FamilySpec::Complete { n });
        specs.push(FamilySpec::CompleteMinusEdge { n });
    }
    for a in 1..=3 {
        for b in 1..=3 {
            specs.push(FamilySpec::H5 { a, b });
            specs.push(FamilySpec::H4 { a, c: b });
            for c in 1..=2 {
                specs.push(FamilySpec::H3 { a, b, c });
            }
        }
    }
    for spec in specs {
        let g = make_family(&spec).unwrap();
        assert!(is_connected(&g), "{spec}");
        let p = canonical_partition(&spec).unwrap();
        assert!(is_equitable(&g, &p), "{spec}: {p}");
        assert!(verify_quotient_embedding(&g, &p).unwrap(), "{spec}");
    }
}

#[test]
fn h5_quotient_spectrum() {
    for n in (5..=15usize).step_by(2) {
        let k = (n - 3) / 2;
        let spec = FamilySpec::H5 { a: k, b: k };
        let q = quotient_matrix(&make_family(&spec).unwrap(), &canonical_partition(&spec).unwrap()).unwrap();
        let m = n as i64;
        let expected = Polynomial::x() * Polynomial::linear(&rat(2, m - 1)) * Polynomial::linear(&rat(m + 1, m - 1));
        assert_eq!(q.char_poly(), expected, "n={n}");
    }
}

// One side a single-edge clique: nonzero quotient eigenvalues have sum
// (3n-7)/(2(n-3)) and product ((3n-7)^2 - (n^3+13n^2-125n+239)/(n-1)) / (16(n-3)^2).
#[test]
fn h5_lopsided_quotient_spectrum() {
    for n in 6..=14usize {
        let spec = FamilySpec::H5 { a: 1, b: n - 4 };
        let q = quotient_matrix(&make_family(&spec).unwrap(), &canonical_partition(&spec).unwrap()).unwrap();
        let m = n as i64;
        let sum = rat(3 * m - 7, 2 * (m - 3));
        let product = (int((3 * m - 7) * (3 * m - 7)) - rat(m * m * m + 13 * m * m - 125 * m + 239, m - 1))
            / int(16 * (m - 3) * (m - 3));
        let quadratic = Polynomial::new(vec![product, -sum, int(1)]);
        assert_eq!(q.char_poly(), Polynomial::x() * quadratic, "n={n}");
    }
}

// Single-edge clique on the far side: nonzero quotient eigenvalues are
// (2n^2-5n+4 ± sqrt(4n^3-27n^2+56n-32)) / (2(n^2-3n+2)).
#[test]
fn h4_single_edge_quotient_spectrum() {
    for n in 6..=14usize {
        let spec = FamilySpec::H4 { a: n - 4, c: 1 };
        let q = quotient_matrix(&make_family(&spec).unwrap(), &canonical_partition(&spec).unwrap()).unwrap();
        let m = n as i64;
        let s = 2 * m * m - 5 * m + 4;
        let den = m * m - 3 * m + 2;
        let product = rat(s * s - (4 * m * m * m - 27 * m * m + 56 * m - 32), 4 * den * den);
        let quadratic = Polynomial::new(vec![product, -rat(s, den), int(1)]);
        assert_eq!(q.char_poly(), Polynomial::x() * quadratic, "n={n}");
    }
}

#[test]
fn h5_and_h3_negative_cases() {
    for n in (5..=13usize).step_by(2) {
        let k = (n - 3) / 2;
        let g = make_family(&FamilySpec::H5 { a: k, b: k }).unwrap();
        let p = random_walk_laplacian(&g).unwrap().char_poly();
        assert_eq!(multiplicity_at(&p, &rat(n as i64 + 1, n as i64 - 1)), n - 2);
    }
    for n in (6..=14usize).step_by(2) {
        let k = (n - 4) / 2;
        let g = make_family(&FamilySpec::H3 { a: k, b: k, c: 1 }).unwrap();
        let s = spectral_summary(&g).unwrap();
        let m = n as i64;
        assert!(s.decomposition.distinct_roots() >= 5);
        assert!(multiplicity_at(&s.charpoly, &rat(4, m)) >= 1);
        assert!(multiplicity_at(&s.charpoly, &rat(m * m + 2 * m - 4, m * m - m)) >= 1);
    }
}

#[test]
fn complete_minus_edge_second_eigenvalue_is_one() {
    for n in 5..=12 {
        assert!(rho_second_smallest_is_one(&make_family(&FamilySpec::CompleteMinusEdge { n }).unwrap()).unwrap());
    }
}

#[test]
fn g1_diametrical_path() {
    let g = make_family(&FamilySpec::G1 { a: 1, b: 1 }).unwrap();
    let (d, w) = diameter(&g).unwrap();
    assert_eq!(d, 3);
    assert_eq!(w.vertices(), &[0, 1, 3, 5]);
}

#[test]
fn params_reject_mismatches() {
    let p = FamilyParams { a: Some(2), b: Some(2), c: None, n: Some(8) };
    assert_eq!(FamilySpec::from_params(FamilyId::G1, p).unwrap(), FamilySpec::G1 { a: 2, b: 2 });
    assert!(FamilySpec::from_params(FamilyId::G1, FamilyParams { n: Some(9), ..p }).is_err());
}
