use fano_k3::exactmath::{cubic_discriminant, fmt_rat, gcd, int, parse_rat, rat, resultant, IntMatrix, Rat, UniPoly};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn from_roots(roots: &[Rat]) -> UniPoly {
    roots.iter().fold(UniPoly::one(), |acc, r| &acc * &UniPoly::linear_root(r))
}

/// Plain Euclid over Q, used as an independent gcd oracle.
fn euclid(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).unwrap();
        a = b;
        b = r;
    }
    a.monic()
}

fn small_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 0..7).prop_map(|c| UniPoly::from_ints(&c))
}

#[test]
fn rational_text_round_trip() {
    assert_eq!(fmt_rat(&rat(-6, 4)), "-3/2");
    assert_eq!(fmt_rat(&int(5)), "5/1");
    assert_eq!(parse_rat("-3/2").unwrap(), rat(-3, 2));
    assert_eq!(parse_rat("7").unwrap(), int(7));
    assert!(parse_rat("1/0").is_err());
    assert!(parse_rat("x").is_err());
}

#[test]
fn degree_sentinel() {
    assert_eq!(UniPoly::zero().degree(), None);
    assert_eq!(UniPoly::one().degree(), Some(0));
    assert_eq!(UniPoly::from_ints(&[1, 2, 0, 0]).degree(), Some(1));
}

#[test]
fn gcd_known_case() {
    let r: Vec<Rat> = [1, 2, 3].iter().map(|&v| int(v)).collect();
    let f = from_roots(&r);
    let g = from_roots(&[int(2), int(3), rat(1, 2)]);
    assert_eq!(gcd(&f, &g), from_roots(&[int(2), int(3)]));
    assert_eq!(gcd(&f, &UniPoly::zero()), f.monic());
    assert!(gcd(&UniPoly::zero(), &UniPoly::zero()).is_zero());
}

#[test]
fn squarefree_known_case() {
    let f = &(&from_roots(&[int(0)]).pow(3) * &from_roots(&[int(1), int(-2)])) * &from_roots(&[rat(1, 3)]).pow(2);
    let f = f.scale(&int(6));
    let d = f.squarefree_decomposition().unwrap();
    assert_eq!(d.expand(), f);
    let mults: Vec<usize> = d.factors.iter().map(|(_, m)| *m).collect();
    assert_eq!(mults, vec![1, 2, 3]);
    assert_eq!(d.factors[2].0, UniPoly::x());
    assert_eq!(d.unit, int(6));
}

#[test]
fn rational_roots_known_case() {
    let roots = vec![int(-7), rat(-2, 9), int(0), rat(5, 3), int(40)];
    let f = (&from_roots(&roots) * &UniPoly::from_ints(&[3, 0, 1])).scale(&rat(7, 11));
    assert_eq!(f.rational_roots(), roots);
    assert!(UniPoly::from_ints(&[-2, 0, 1]).rational_roots().is_empty());
}

#[test]
fn cubic_discriminant_matches_resultant_oracle() {
    // disc(f) = -Res(f, f') / a for a cubic.
    let f = UniPoly::from_ints(&[5, -3, 2, 4]);
    let c = |i: usize| UniPoly::constant(f.coeff(i));
    let disc = cubic_discriminant(&c(3), &c(2), &c(1), &c(0)).unwrap();
    let res = resultant(&f, &f.derivative()).unwrap();
    assert_eq!(disc, UniPoly::constant(-res / int(4)));
    assert!(cubic_discriminant(&UniPoly::zero(), &c(2), &c(1), &c(0)).is_err());
}

#[test]
fn bareiss_determinant() {
    let m = IntMatrix::from_rows(&[vec![0, 2, 2], vec![2, 0, 2], vec![2, 2, 0]]).unwrap();
    assert_eq!(m.determinant().unwrap(), 16.into());
    let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
    assert!(m.determinant().unwrap().is_zero());
}

proptest! {
    #[test]
    fn gcd_agrees_with_euclid(a in small_poly(), b in small_poly()) {
        prop_assert_eq!(gcd(&a, &b), euclid(&a, &b));
    }

    #[test]
    fn gcd_divides_both(a in small_poly(), b in small_poly(), c in small_poly()) {
        let fa = &a * &c;
        let fb = &b * &c;
        let g = gcd(&fa, &fb);
        if !g.is_zero() {
            prop_assert!(fa.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(fb.div_rem(&g).unwrap().1.is_zero());
            if !c.is_zero() {
                prop_assert!(g.div_rem(&c.monic()).unwrap().1.is_zero());
            }
        }
    }

    #[test]
    fn squarefree_reassembles(a in small_poly(), b in small_poly()) {
        let f = &(&a * &b) * &b;
        prop_assume!(!f.is_zero());
        let d = f.squarefree_decomposition().unwrap();
        prop_assert_eq!(d.expand(), f);
        for (i, (p, _)) in d.factors.iter().enumerate() {
            prop_assert!(gcd(p, &p.derivative()).is_constant());
            for (q, _) in &d.factors[i + 1..] {
                prop_assert!(gcd(p, q).is_constant());
            }
        }
    }

    #[test]
    fn resultant_is_product_over_roots(
        r in prop::collection::vec(-9i64..=9, 1..4),
        s in prop::collection::vec(-9i64..=9, 1..4),
    ) {
        let rr: Vec<Rat> = r.iter().map(|&v| int(v)).collect();
        let ss: Vec<Rat> = s.iter().map(|&v| int(v)).collect();
        let want = rr.iter().fold(Rat::one(), |acc, a| {
            ss.iter().fold(acc, |acc, b| acc * (a - b))
        });
        prop_assert_eq!(resultant(&from_roots(&rr), &from_roots(&ss)).unwrap(), want);
    }

    #[test]
    fn rational_roots_are_found(
        nums in prop::collection::vec(-30i64..=30, 1..5),
        dens in prop::collection::vec(1i64..=12, 5),
        extra in small_poly(),
    ) {
        let mut roots: Vec<Rat> = nums.iter().zip(&dens).map(|(&n, &d)| rat(n, d)).collect();
        let f = &from_roots(&roots) * &extra;
        prop_assume!(!extra.is_zero());
        let found = f.rational_roots();
        roots.extend(extra.rational_roots());
        roots.sort();
        roots.dedup();
        prop_assert_eq!(found, roots);
    }

    #[test]
    fn shift_and_reverse(a in small_poly(), c in -5i64..=5) {
        let x0 = int(c);
        let sh = a.shift(&x0);
        prop_assert_eq!(sh.eval(&int(2)), a.eval(&int(c + 2)));
        let n = a.degree().unwrap_or(0) + 2;
        let rv = a.reverse(n).unwrap();
        prop_assert_eq!(rv.reverse(n).unwrap(), a);
    }
}

#[test]
fn expression_precedence() {
    use fano_k3::exactmath::eval_expr;
    let vars = |v: &str| (v == "x").then(|| rat(3, 1));
    let ev = |s: &str| eval_expr::<fano_k3::exactmath::Rat>(s, &vars).unwrap();
    assert_eq!(ev("-x^2"), rat(-9, 1));
    assert_eq!(ev("2*x^2-1"), rat(17, 1));
    assert_eq!(ev("(1+x)^2/4"), rat(4, 1));
    assert_eq!(ev("-(x-1)*-2"), rat(4, 1));
    assert!(eval_expr::<fano_k3::exactmath::Rat>("y+1", &vars).is_err());
    assert!(eval_expr::<fano_k3::exactmath::Rat>("x/(x-3)", &vars).is_err());
}
