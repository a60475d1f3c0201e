//! Named lattices: the Fano-side lattices `L_k`, `U`, `E8(-1)` and the K3 lattice.

use super::GramLattice;
use crate::error::{Error, Result};

/// Gram matrices of `L_k`, `k = 1..=18`, as rows.
const L_GRAMS: [&[&[i64]]; 18] = [
    &[&[4]],
    &[&[0, 3], &[3, 2]],
    &[&[-2, 2], &[2, -2]],
    &[&[-2, 1], &[1, -2]],
    &[&[0, 3], &[3, -2]],
    &[&[0, 2, 2], &[2, 0, 2], &[2, 2, 0]],
    &[&[-2, 1, 1], &[1, 0, 2], &[1, 2, 0]],
    &[&[-2, 1, 3], &[1, 0, 2], &[3, 2, 0]],
    &[&[0, 1, 2], &[1, -2, 2], &[2, 2, 0]],
    &[&[-2, 1, 1], &[1, -2, 2], &[1, 2, 0]],
    &[&[-2, 1, 1], &[1, -2, 1], &[1, 1, 2]],
    &[&[-2, 2, 2], &[2, -2, 1], &[2, 1, 2]],
    &[&[0, 1, 1, 1], &[1, -2, 0, 2], &[1, 0, -2, 2], &[1, 2, 2, -2]],
    &[&[0, 1, 1, 1], &[1, -2, 0, 2], &[1, 0, -2, 1], &[1, 2, 1, -2]],
    &[&[0, 1, 1, 1], &[1, -2, 0, 2], &[1, 0, -2, 3], &[1, 2, 3, -2]],
    &[&[0, 1, 1, 1], &[1, -2, 0, 1], &[1, 0, -2, 1], &[1, 1, 1, -2]],
    &[&[0, 1, 1, 1, 1], &[1, -2, 2, 2, 0], &[1, 2, -2, 0, 2], &[1, 2, 0, -2, 0], &[1, 0, 2, 0, -2]],
    &[&[0, 1, 1, 1, 1], &[1, -2, 2, 1, 0], &[1, 2, -2, 0, 3], &[1, 1, 0, -2, 0], &[1, 0, 3, 0, -2]],
];

fn rows(r: &[&[i64]]) -> Vec<Vec<i64>> {
    r.iter().map(|x| x.to_vec()).collect()
}

/// `L_k = Pic(X_k)` with the intersection form of the blown-up toric 3-fold,
/// `k = 1..=18`.
pub fn fano_lattice(k: u8) -> Result<GramLattice> {
    if !(1..=18).contains(&k) {
        return Err(Error::UnknownIndex(k, "1..=18"));
    }
    GramLattice::from_rows(&rows(L_GRAMS[k as usize - 1]))
}

pub fn hyperbolic_plane() -> GramLattice {
    GramLattice::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
}

/// Negative definite `E8`, Bourbaki numbering.
pub fn e8_negative() -> GramLattice {
    let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
    let mut g = vec![vec![0i64; 8]; 8];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (a, b) in edges {
        g[a][b] = 1;
        g[b][a] = 1;
    }
    GramLattice::from_rows(&g).unwrap()
}

/// `U^3 + E8(-1)^2`, the second cohomology lattice of a K3 surface.
pub fn k3_lattice() -> GramLattice {
    let u = hyperbolic_plane();
    let e = e8_negative();
    u.direct_sum(&u).direct_sum(&u).direct_sum(&e).direct_sum(&e)
}
