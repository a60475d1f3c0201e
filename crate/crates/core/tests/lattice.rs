use fano_k3::exactmath::{int, rat, rat_mod, IntMatrix, Rat};
use fano_k3::lattice::{
    e8_negative, fano_lattice, forms_isomorphic, hyperbolic_plane, k3_lattice, negate_form, smith_normal_form,
    unique_by_invariant, FiniteQuadraticForm, GramLattice, Isometry, DEFAULT_SEARCH_BOUND,
};
use fano_k3::reference;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn ell(k: u8) -> usize {
    fano_lattice(k).unwrap().rank() + 3
}

/// Random unimodular matrix as a product of elementary operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        let mut e = IntMatrix::identity(n);
        e.set(i, j, BigInt::from(c));
        m = m.mul(&e).unwrap();
    }
    m
}

fn congruent(l: &GramLattice, p: &IntMatrix) -> GramLattice {
    GramLattice::new(p.transpose().mul(l.gram()).unwrap().mul(p).unwrap()).unwrap()
}

#[test]
fn standard_lattices() {
    let u = hyperbolic_plane();
    assert_eq!(u.signature().unwrap(), (1, 1));
    assert_eq!(u.determinant(), BigInt::from(-1));
    let e8 = e8_negative();
    assert_eq!(e8.signature().unwrap(), (0, 8));
    assert_eq!(e8.determinant(), BigInt::one());
    assert!(e8.is_even());
    let k3 = k3_lattice();
    assert_eq!(k3.rank(), 22);
    assert_eq!(k3.signature().unwrap(), (3, 19));
    assert_eq!(k3.determinant(), BigInt::from(-1));
    assert_eq!(k3.discriminant_form().unwrap().form.order(), 1);
}

#[test]
fn signature_needs_hyperbolic_split() {
    // Every diagonal entry vanishes.
    let l = fano_lattice(6).unwrap();
    assert_eq!(l.signature().unwrap(), (1, 2));
    let degenerate = GramLattice::from_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
    assert!(degenerate.signature().is_err());
}

#[test]
fn fano_lattice_invariants() {
    let dets = [4, -9, 0, 3, -9, 16, 12, 20, 16, 14, 12, 18, -28, -23, -31, -20, 48, 44];
    for k in 1..=18u8 {
        let l = fano_lattice(k).unwrap();
        assert!(l.is_even(), "L_{k}");
        let d = l.determinant();
        if k == 3 {
            // L_3 is degenerate, which rules it out of the mirror checks.
            assert!(d.is_zero());
            continue;
        }
        assert_eq!(d.abs(), BigInt::from(dets[k as usize - 1]).abs(), "L_{k}");
        if k >= 6 {
            assert_eq!(l.signature().unwrap(), (1, ell(k) - 4), "L_{k}");
        }
    }
}

#[test]
fn l6_discriminant_form() {
    let l = fano_lattice(6).unwrap();
    let d = l.discriminant_form().unwrap();
    assert_eq!(d.form.invariant_factors(), vec![4, 2, 2]);
    assert_eq!(d.form.group_string(), "Z/4+Z/2+Z/2");
    let alpha = vec![rat(3, 4), rat(1, 4), rat(1, 4)];
    assert_eq!(l.q_dual(&alpha).unwrap(), rat(7, 4));
    let c = d.coordinates(&l, &alpha).unwrap();
    assert_eq!(d.form.q_of(&c), rat(7, 4));
    assert_eq!(d.form.element_order(&c), 4);
    assert!(l.q_dual(&[rat(1, 3), int(0), int(0)]).is_err());
}

#[test]
fn uniqueness_criterion() {
    let u = hyperbolic_plane();
    for k in 6..=18u8 {
        let t = u.direct_sum(&fano_lattice(k).unwrap());
        assert!(unique_by_invariant(&t).unwrap(), "U + L_{k}");
    }
    // Definite lattices never qualify.
    assert!(!unique_by_invariant(&e8_negative()).unwrap());
    // l(A) = 3 > rank - 2 = 1.
    assert!(!unique_by_invariant(&fano_lattice(6).unwrap()).unwrap());
}

#[test]
fn smith_form_of_l6() {
    let l = fano_lattice(6).unwrap();
    let s = smith_normal_form(l.gram());
    let diag: Vec<BigInt> = s.invariant_factors();
    assert_eq!(diag, vec![2.into(), 2.into(), 4.into()]);
}

#[test]
fn isometry_search_small_cases() {
    let a = FiniteQuadraticForm::cyclic(2, rat(1, 2)).unwrap();
    let b = FiniteQuadraticForm::cyclic(2, rat(3, 2)).unwrap();
    assert!(forms_isomorphic(&a, &a, 100).unwrap().is_some());
    assert!(forms_isomorphic(&a, &b, 100).unwrap().is_none());
    assert_eq!(negate_form(&a), b);
    // Z/12 = Z/4 + Z/3 presented two ways.
    let c12 = FiniteQuadraticForm::cyclic(12, rat(1, 12)).unwrap();
    let split = FiniteQuadraticForm::cyclic(4, rat(3, 4))
        .unwrap()
        .direct_sum(&FiniteQuadraticForm::cyclic(3, rat(4, 3)).unwrap());
    let iso = forms_isomorphic(&c12, &split, 100).unwrap().expect("isometric");
    assert!(iso.verify(&c12, &split));
    let big = FiniteQuadraticForm::cyclic(20_000, rat(1, 20_000)).unwrap();
    assert!(forms_isomorphic(&big, &big, DEFAULT_SEARCH_BOUND).is_err());
}

fn even_gram() -> impl Strategy<Value = GramLattice> {
    (prop::collection::vec(-3i64..=3, 3), prop::collection::vec(-2i64..=2, 3)).prop_filter_map(
        "nondegenerate, small discriminant",
        |(off, diag)| {
            let g = vec![
                vec![2 * diag[0], off[0], off[1]],
                vec![off[0], 2 * diag[1], off[2]],
                vec![off[1], off[2], 2 * diag[2]],
            ];
            let l = GramLattice::from_rows(&g).ok()?;
            let d = l.determinant().abs();
            (!d.is_zero() && d <= BigInt::from(300)).then_some(l)
        },
    )
}

fn ops() -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 0..6)
}

proptest! {
    #[test]
    fn smith_normal_form_contract(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 3)) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        prop_assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        prop_assert_eq!(f.len(), m.rank());
    }

    #[test]
    fn signature_and_form_are_basis_invariant(l in even_gram(), o in ops()) {
        let p = unimodular(3, &o);
        let l2 = congruent(&l, &p);
        prop_assert_eq!(l.signature().unwrap(), l2.signature().unwrap());
        prop_assert_eq!(l.determinant(), l2.determinant());
        let f = l.discriminant_form().unwrap().form;
        let g = l2.discriminant_form().unwrap().form;
        let iso = forms_isomorphic(&f, &g, DEFAULT_SEARCH_BOUND).unwrap();
        prop_assert!(iso.is_some());
        prop_assert!(iso.unwrap().verify(&f, &g));
    }

    #[test]
    fn isometry_is_an_equivalence(l in even_gram(), o1 in ops(), o2 in ops()) {
        let f = l.discriminant_form().unwrap().form;
        let g = congruent(&l, &unimodular(3, &o1)).discriminant_form().unwrap().form;
        let h = congruent(&l, &unimodular(3, &o2)).discriminant_form().unwrap().form;
        prop_assert!(Isometry::identity(&f).verify(&f, &f));
        let fg = forms_isomorphic(&f, &g, DEFAULT_SEARCH_BOUND).unwrap().unwrap();
        let gf = fg.inverse(&f, &g).unwrap();
        prop_assert!(gf.verify(&g, &f));
        let gh = forms_isomorphic(&g, &h, DEFAULT_SEARCH_BOUND).unwrap().unwrap();
        prop_assert!(fg.then(&gh, &h).verify(&f, &h));
    }

    #[test]
    fn direct_sum_adds_invariants(a in even_gram(), b in even_gram()) {
        let s = a.direct_sum(&b);
        let (s1, t1) = a.signature().unwrap();
        let (s2, t2) = b.signature().unwrap();
        prop_assert_eq!(s.signature().unwrap(), (s1 + s2, t1 + t2));
        prop_assert_eq!(s.determinant(), a.determinant() * b.determinant());
        let fa = a.discriminant_form().unwrap().form;
        let fb = b.discriminant_form().unwrap().form;
        let fs = s.discriminant_form().unwrap().form;
        let bound = 1_000_000;
        prop_assume!(fs.order() <= 2000);
        prop_assert!(forms_isomorphic(&fa.direct_sum(&fb), &fs, bound).unwrap().is_some());
    }

    #[test]
    fn negation_is_an_involution(l in even_gram()) {
        let f = l.discriminant_form().unwrap().form;
        prop_assert_eq!(negate_form(&negate_form(&f)), f.clone());
        let g = l.scaled(-1).discriminant_form().unwrap().form;
        prop_assert!(forms_isomorphic(&negate_form(&f), &g, DEFAULT_SEARCH_BOUND).unwrap().is_some());
    }
}

fn alpha(k: u8, i: usize) -> Vec<Rat> {
    reference::alpha_summands(k).unwrap()[i].coefficients.iter().map(|&(n, d)| rat(n, d)).collect()
}

#[test]
fn alpha_values_match_listed_ones() {
    let two = int(2);
    for k in 6..=18u8 {
        let l = fano_lattice(k).unwrap();
        let df = l.discriminant_form().unwrap();
        let rows = reference::alpha_summands(k).unwrap();
        for (i, row) in rows.iter().enumerate() {
            let a = alpha(k, i);
            let q = l.q_dual(&a).unwrap();
            assert_eq!(rat_mod(&q, &two), rat_mod(&rat(row.q.0, row.q.1), &two), "k = {k}, α{i}");
            let c = df.coordinates(&l, &a).unwrap();
            assert_eq!(df.form.element_order(&c), row.order, "k = {k}, α{i}");
        }
        // The listed α generate the whole group.
        let listed: u64 = rows.iter().map(|r| r.order).product();
        assert_eq!(listed, df.form.order(), "k = {k}");
    }
}

#[test]
fn alpha_spot_values() {
    let l = fano_lattice(6).unwrap();
    let q: Vec<Rat> = (0..3).map(|i| l.q_dual(&alpha(6, i)).unwrap()).collect();
    assert_eq!(q, vec![rat(7, 4), int(0), int(1)]);
    let l = fano_lattice(18).unwrap();
    assert_eq!(l.q_dual(&alpha(18, 0)).unwrap(), rat(57, 44));
}

proptest! {
    #[test]
    fn q_is_well_defined_mod_translation(k in 6u8..=18, shift in prop::collection::vec(-4i64..=4, 5), i in 0usize..3) {
        let l = fano_lattice(k).unwrap();
        let rows = reference::alpha_summands(k).unwrap();
        let a = alpha(k, i % rows.len());
        let moved: Vec<Rat> = a.iter().zip(&shift).map(|(x, &s)| x + int(s)).collect();
        let two = int(2);
        prop_assert_eq!(
            rat_mod(&l.q_dual(&a).unwrap(), &two),
            rat_mod(&l.q_dual(&moved).unwrap(), &two)
        );
        let df = l.discriminant_form().unwrap();
        prop_assert_eq!(df.coordinates(&l, &a).unwrap(), df.coordinates(&l, &moved).unwrap());
    }
}
