use fano_k3::polytope::{reference_labeling, ClearedEquation, Polytope};
use std::collections::BTreeMap;

#[test]
fn all_eighteen_are_fano_and_reflexive() {
    for k in 1..=18 {
        let p = Polytope::fano(k).unwrap();
        assert!(p.is_fano(), "P_{k}");
        assert!(p.is_reflexive(), "P_{k}");
    }
}

#[test]
fn polar_is_an_involution() {
    for k in 1..=18 {
        let p = Polytope::fano(k).unwrap();
        let dd = p.polar_dual().unwrap().polar_dual().unwrap();
        assert!(dd.same_vertices(&p.to_rational()), "P_{k}");
    }
}

#[test]
fn simplex_facets() {
    let p = Polytope::fano(1).unwrap();
    let fs = p.facets();
    assert_eq!(fs.len(), 4);
    assert!(fs.iter().all(|f| f.vertices.len() == 3));
    // The polar of the standard Fano simplex has vertices with coordinates
    // in {-1, 3}.
    let d = p.polar_dual().unwrap().to_lattice().unwrap();
    assert_eq!(d.len(), 4);
    assert!(!d.is_fano());
    assert!(d.is_reflexive());
}

#[test]
fn non_fano_reflexive_cube() {
    let mut v = Vec::new();
    for x in [-1, 1] {
        for y in [-1, 1] {
            for z in [-1, 1] {
                v.push([x, y, z]);
            }
        }
    }
    let cube = Polytope::new(v).unwrap();
    assert!(cube.is_reflexive());
    assert!(!cube.is_fano());
}

#[test]
fn rejects_degenerate_input() {
    assert!(Polytope::new(vec![[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]).is_err());
    assert!(Polytope::new(vec![[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).is_err());
    assert!(Polytope::fano(19).is_err());
    assert!(Polytope::fano(0).is_err());
}

#[test]
fn gale_columns() {
    let g1 = Polytope::fano(1).unwrap().gale_transform().unwrap();
    assert_eq!(g1.columns, vec![vec![-4, 1, 1, 1, 1]]);
    let g6 = Polytope::fano(6).unwrap().gale_transform().unwrap();
    assert_eq!(g6.columns[0], vec![-2, 0, 0, 1, 1, 0, 0]);
    for k in 1..=18 {
        let p = Polytope::fano(k).unwrap();
        let g = p.gale_transform().unwrap();
        assert_eq!(g.columns.len(), p.len() - 3);
        assert!(g.annihilates(&p));
    }
}

#[test]
fn equations_match_reference_table() {
    for k in 6..=16 {
        let (eq, perm) = reference_labeling(k).unwrap();
        assert!(perm.iter().all(|(a, b)| a == b), "k = {k}");
        assert_eq!(eq, ClearedEquation::reference(k).unwrap());
    }
    for k in [17, 18] {
        let (_, perm) = reference_labeling(k).unwrap();
        let expected: BTreeMap<usize, usize> = [(1, 1), (2, 3), (3, 2), (4, 4), (5, 5)].into_iter().collect();
        assert_eq!(perm, expected);
    }
}

#[test]
fn equation_text() {
    let (eq, _) = reference_labeling(11).unwrap();
    assert_eq!(eq.to_string(), "x y z (x+y+z+1)+λ1 x y+λ2 x y²+λ3 = 0");
    let (eq, _) = reference_labeling(18).unwrap();
    assert_eq!(eq.to_string(), "x y z (x+y+z+1)+λ1 x²+λ2 y z+λ3 x z+λ4 x² z+λ5 y² z = 0");
}
