//! Integral lattices given by Gram matrices: signature, determinant, Smith
//! normal form, discriminant forms and Nikulin's uniqueness criterion.

mod data;
mod form;
mod snf;

pub use data::{e8_negative, fano_lattice, hyperbolic_plane, k3_lattice};
pub use form::{forms_isomorphic, group_string, Element, FiniteQuadraticForm, Isometry, DEFAULT_SEARCH_BOUND};
pub use snf::{smith_normal_form, SmithForm};

use crate::error::{Error, Result};
use crate::exactmath::{is_integer, IntMatrix, Rat, RatMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Lattice `Z^n` with the bilinear form given by a symmetric integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramLattice {
    gram: IntMatrix,
}

impl GramLattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::InvalidInput("Gram matrix must be square and symmetric".into()));
        }
        Ok(GramLattice { gram })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        self.gram.get(i, j)
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.get(i, i).is_even())
    }

    pub fn determinant(&self) -> BigInt {
        self.gram.determinant().expect("Gram matrices are square")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// `(s, t)`: numbers of positive and negative eigenvalues.
    ///
    /// Symmetric Gaussian elimination over Q; a zero diagonal with a nonzero
    /// off-diagonal entry is split off as a hyperbolic 2x2 block.
    pub fn signature(&self) -> Result<(usize, usize)> {
        let mut a = self.gram.to_rat();
        let mut n = a.rows();
        let (mut s, mut t) = (0, 0);
        while n > 0 {
            if let Some(i) = (0..n).find(|&i| !a.get(i, i).is_zero()) {
                let p = a.get(i, i).clone();
                if p.is_positive() {
                    s += 1;
                } else {
                    t += 1;
                }
                a = schur_1(&a, i, &p);
                n -= 1;
                continue;
            }
            let pair = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a.get(i, j).is_zero());
            match pair {
                Some((i, j)) => {
                    s += 1;
                    t += 1;
                    a = schur_hyperbolic(&a, i, j);
                    n -= 2;
                }
                None => return Err(Error::Degenerate(format!("form has a radical of rank {n}"))),
            }
        }
        Ok((s, t))
    }

    pub fn direct_sum(&self, o: &GramLattice) -> GramLattice {
        let (r, s) = (self.rank(), o.rank());
        let mut m = IntMatrix::zeros(r + s, r + s);
        for i in 0..r {
            for j in 0..r {
                m.set(i, j, self.gram.get(i, j).clone());
            }
        }
        for i in 0..s {
            for j in 0..s {
                m.set(r + i, r + j, o.gram.get(i, j).clone());
            }
        }
        GramLattice { gram: m }
    }

    /// The same group with the form multiplied by `c`.
    pub fn scaled(&self, c: i64) -> GramLattice {
        let n = self.rank();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.gram.get(i, j) * BigInt::from(c));
            }
        }
        GramLattice { gram: m }
    }

    pub fn inner(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let n = self.rank();
        let mut s = Rat::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !y[j].is_zero() {
                    s += &x[i] * Rat::from_integer(self.gram.get(i, j).clone()) * &y[j];
                }
            }
        }
        s
    }

    /// `G x`.
    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).fold(Rat::zero(), |acc, j| acc + Rat::from_integer(self.gram.get(i, j).clone()) * &x[j]))
            .collect()
    }

    /// Is `x`, in lattice coordinates over Q, an element of the dual lattice?
    pub fn in_dual(&self, x: &[Rat]) -> bool {
        x.len() == self.rank() && self.apply(x).iter().all(is_integer)
    }

    /// `q(x) = x^T G x mod 2` for `x` in the dual lattice.
    pub fn q_dual(&self, x: &[Rat]) -> Result<Rat> {
        if !self.in_dual(x) {
            return Err(Error::InvalidInput("vector is not in the dual lattice".into()));
        }
        Ok(crate::exactmath::rat_mod(&self.inner(x, x), &Rat::from_integer(2.into())))
    }

    /// Discriminant group `L^v / L` with its quadratic form, for even
    /// nondegenerate lattices.
    pub fn discriminant_form(&self) -> Result<DiscriminantForm> {
        if !self.is_even() {
            return Err(Error::InvalidInput("discriminant form needs an even lattice".into()));
        }
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate("discriminant form of a degenerate lattice".into()));
        }
        let n = self.rank();
        let snf = smith_normal_form(&self.gram);
        let mut orders = Vec::new();
        let mut gens: Vec<Vec<Rat>> = Vec::new();
        let mut rows = Vec::new();
        for i in 0..n {
            let d = snf.d.get(i, i).clone();
            if d.is_one() {
                continue;
            }
            let o = d
                .to_u64()
                .ok_or_else(|| Error::BoundExceeded(format!("invariant factor {d} does not fit in 64 bits")))?;
            orders.push(o);
            let dr = Rat::from_integer(d);
            gens.push((0..n).map(|k| Rat::from_integer(snf.v.get(k, i).clone()) / &dr).collect());
            rows.push(i);
        }
        let r = gens.len();
        let q: Vec<Rat> = gens.iter().map(|g| self.inner(g, g)).collect();
        let b: Vec<Vec<Rat>> = (0..r).map(|i| (0..r).map(|j| self.inner(&gens[i], &gens[j])).collect()).collect();
        let form = FiniteQuadraticForm::new(orders, q, b)?;
        Ok(DiscriminantForm { form, generators: gens, u_rows: rows, snf_u: snf.u })
    }
}

fn schur_1(a: &RatMatrix, i: usize, p: &Rat) -> RatMatrix {
    let n = a.rows();
    let idx: Vec<usize> = (0..n).filter(|&k| k != i).collect();
    let mut m = RatMatrix::zeros(n - 1, n - 1);
    for (x, &r) in idx.iter().enumerate() {
        for (y, &c) in idx.iter().enumerate() {
            m.set(x, y, a.get(r, c) - a.get(r, i) * a.get(i, c) / p);
        }
    }
    m
}

/// Removes the block on `{i, j}` where `a_ii = a_jj = 0 != a_ij`.
fn schur_hyperbolic(a: &RatMatrix, i: usize, j: usize) -> RatMatrix {
    let n = a.rows();
    let h = a.get(i, j).clone();
    let idx: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
    let mut m = RatMatrix::zeros(n - 2, n - 2);
    // Inverse of [[0, h], [h, 0]] is [[0, 1/h], [1/h, 0]].
    for (x, &r) in idx.iter().enumerate() {
        for (y, &c) in idx.iter().enumerate() {
            let corr = (a.get(r, i) * a.get(j, c) + a.get(r, j) * a.get(i, c)) / &h;
            m.set(x, y, a.get(r, c) - corr);
        }
    }
    m
}

/// Discriminant form of a lattice, together with the generators `g_i` as
/// vectors of `L ⊗ Q` in lattice coordinates.
#[derive(Clone, Debug)]
pub struct DiscriminantForm {
    pub form: FiniteQuadraticForm,
    pub generators: Vec<Vec<Rat>>,
    u_rows: Vec<usize>,
    snf_u: IntMatrix,
}

impl DiscriminantForm {
    /// Coordinates on the generators of the class of a dual-lattice vector.
    pub fn coordinates(&self, lattice: &GramLattice, x: &[Rat]) -> Result<Element> {
        if !lattice.in_dual(x) {
            return Err(Error::InvalidInput("vector is not in the dual lattice".into()));
        }
        let y: Vec<BigInt> = lattice.apply(x).into_iter().map(|v| v.to_integer()).collect();
        let orders = self.form.generator_orders();
        Ok(self
            .u_rows
            .iter()
            .zip(orders)
            .map(|(&i, &d)| {
                let s = (0..y.len()).fold(BigInt::zero(), |acc, k| acc + self.snf_u.get(i, k) * &y[k]);
                s.mod_floor(&BigInt::from(d)).to_u64().unwrap()
            })
            .collect())
    }
}

/// Nikulin's sufficient condition for the genus of an even indefinite
/// lattice to contain one class: `s > 0`, `t > 0` and `l(A_L) <= rank - 2`.
pub fn unique_by_invariant(l: &GramLattice) -> Result<bool> {
    let (s, t) = l.signature()?;
    if s == 0 || t == 0 || !l.is_even() {
        return Ok(false);
    }
    let len = l.discriminant_form()?.form.length();
    Ok(len + 2 <= l.rank())
}

/// Negated form `-q`.
pub fn negate_form(f: &FiniteQuadraticForm) -> FiniteQuadraticForm {
    f.negate()
}
