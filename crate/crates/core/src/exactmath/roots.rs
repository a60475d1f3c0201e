//! Rational roots by root finding modulo a prime, Hensel lifting and
//! rational reconstruction. No integer factorization is needed.

use super::{Rat, UniPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn modp(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// gcd degree over F_p of two polynomials given lowest degree first.
fn gcd_degree_mod_p(a: &[u64], b: &[u64], p: u64) -> usize {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        // a mod b
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() && !a.is_empty() {
            let c = a.last().unwrap() * inv % p;
            let shift = a.len() - b.len();
            for (j, bc) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - c * bc % p) % p;
            }
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn eval_big(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Smallest `a/b` with `a ≡ b r (mod m)`, `|a| <= n_bound`, `0 < b <= d_bound`.
fn reconstruct(r: &BigInt, m: &BigInt, n_bound: &BigInt, d_bound: &BigInt) -> Option<Rat> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while &r1 > n_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    let (mut a, mut b) = (r1, s1);
    if b.is_negative() {
        a = -a;
        b = -b;
    }
    (!b.is_zero() && &b <= d_bound).then(|| Rat::new(a, b))
}

pub(super) fn rational_roots(f: &UniPoly) -> Vec<Rat> {
    let Some(deg) = f.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let v = f.low_order().unwrap();
    let mut g = f.clone();
    if v > 0 {
        roots.push(Rat::zero());
        g = UniPoly::from_coeffs(f.coeffs()[v..].to_vec());
    }
    if g.is_constant() {
        return roots;
    }
    // The squarefree part has the same roots and makes Hensel lifting valid.
    let sqf = match g.squarefree_decomposition() {
        Ok(d) => d.factors.iter().fold(UniPoly::one(), |acc, (h, _)| &acc * h),
        Err(_) => return roots,
    };
    let (_, h) = sqf.primitive_part();
    let hd: Vec<BigInt> = h.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let a0 = h[0].abs();
    let lc = h.last().unwrap().abs();
    let bound = BigInt::from(2) * &a0 * &lc;

    let p = (3u64..)
        .filter(|&p| is_prime(p))
        .find(|&p| {
            if modp(&lc, p) == 0 {
                return false;
            }
            let hp: Vec<u64> = h.iter().map(|c| modp(c, p)).collect();
            let dp: Vec<u64> = hd.iter().map(|c| modp(c, p)).collect();
            gcd_degree_mod_p(&hp, &dp, p) == 0
        })
        .unwrap();
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut lifted: Vec<BigInt> =
        (0..p).map(BigInt::from).filter(|x| eval_big(&h, x).mod_floor(&pb).is_zero()).collect();
    while modulus <= bound {
        let next = &modulus * &modulus;
        for r in lifted.iter_mut() {
            let fr = eval_big(&h, r);
            let dr = eval_big(&hd, r);
            let inv = mod_inverse(&dr, &next).expect("derivative is a unit modulo p");
            *r = (&*r - fr * inv).mod_floor(&next);
        }
        modulus = next;
    }
    for r in lifted {
        if let Some(q) = reconstruct(&r, &modulus, &a0, &lc) {
            if sqf.eval(&q).is_zero() {
                roots.push(q);
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}
