//! Small dense matrices over Z and Q.

use super::Rat;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Fails on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.iter().flatten().map(|&v| BigInt::from(v)).collect() })
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != o.rows {
            return Err(Error::InvalidInput("matrix shapes do not match".into()));
        }
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = m.get(i, j) + a * o.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| Rat::from_integer(v.clone())).collect(),
        }
    }

    /// Rank over Q.
    pub fn rank(&self) -> usize {
        self.to_rat().rank()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// Row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    /// Row echelon form in place; returns the pivot columns and the sign
    /// picked up from row swaps.
    fn echelon(&mut self) -> (Vec<usize>, bool) {
        let mut pivots = Vec::new();
        let mut flipped = false;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
                flipped = !flipped;
            }
            let piv = self.get(r, c).clone();
            for i in r + 1..self.rows {
                let f = self.get(i, c) / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = self.get(i, j) - &f * self.get(r, j);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, flipped)
    }

    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let (piv, flipped) = m.echelon();
        if piv.len() < self.rows {
            return Rat::zero();
        }
        let d = (0..self.rows).fold(Rat::one(), |acc, i| acc * m.get(i, i));
        if flipped {
            -d
        } else {
            d
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().0.len()
    }

    /// Solves `self * x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[Rat]) -> Result<Vec<Rat>> {
        let n = self.rows;
        if self.cols != n || b.len() != n {
            return Err(Error::InvalidInput("solve needs a square system".into()));
        }
        let mut aug = RatMatrix::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, b[i].clone());
        }
        let (piv, _) = aug.echelon();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::Degenerate("singular linear system".into()));
        }
        let mut x = vec![Rat::zero(); n];
        for i in (0..n).rev() {
            let mut s = aug.get(i, n).clone();
            for j in i + 1..n {
                s -= aug.get(i, j) * &x[j];
            }
            x[i] = s / aug.get(i, i);
        }
        Ok(x)
    }

    /// Basis of the right kernel over Q.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let (piv, _) = m.echelon();
        // Back-substitute to reduced form.
        for (r, &c) in piv.iter().enumerate().rev() {
            let p = m.get(r, c).clone();
            for j in 0..m.cols {
                let v = m.get(r, j) / &p;
                m.set(r, j, v);
            }
            for i in 0..r {
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
        }
        let free: Vec<usize> = (0..m.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); m.cols];
                v[f] = Rat::one();
                for (r, &c) in piv.iter().enumerate() {
                    v[c] = -m.get(r, f).clone();
                }
                v
            })
            .collect()
    }
}
