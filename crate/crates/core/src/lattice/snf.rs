//! Smith normal form over Z with the unimodular transforms.

use crate::exactmath::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `u * m * v = d`, with `d` diagonal, nonnegative and `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (s, d) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in a.iter_mut() {
        let t = q * &row[src];
        row[dst] -= t;
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut u = IntMatrix::identity(r).to_rows();
    let mut v = IntMatrix::identity(c).to_rows();
    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..r {
                let q = a[i][t].div_floor(&p);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..c {
                let q = a[t][j].div_floor(&p);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    SmithForm {
        u: IntMatrix::from_big_rows(u).unwrap(),
        d: IntMatrix::from_big_rows(a).unwrap(),
        v: IntMatrix::from_big_rows(v).unwrap(),
    }
}
