//! Dense arbitrary-precision integer matrices and their Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A transform together with its inverse.
type Pair = (IntMatrix, IntMatrix);

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !v[j].is_zero())
                    .map(|j| self.get(i, j) * &v[j])
                    .sum()
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    /// Inverse of a matrix with determinant ±1, via its Smith form.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let snf = smith_normal_form(self);
        if snf.rank != self.rows || snf.diagonal.iter().any(|d| !d.is_one()) {
            return None;
        }
        // U A V = I  =>  A^{-1} = V U
        Some(snf.v.mul(&snf.u))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, src: usize, dst: usize, q: &BigInt) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let delta = s * q;
                self.data[dst * self.cols + j] += delta;
            }
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, src: usize, dst: usize, q: &BigInt) {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let delta = s * q;
                self.data[i * self.cols + dst] += delta;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[r * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let x = &mut self.data[i * self.cols + c];
            *x = -std::mem::take(x);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `U · M · V = D` with `D` diagonal, `d₁ | d₂ | … | d_r` positive.
#[derive(Clone, Debug)]
pub struct SnfResult {
    /// Nonzero invariant factors, in divisibility order.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    /// The full `rows × cols` diagonal matrix `D`.
    pub fn d_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, x) in self.diagonal.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }
}

struct Reducer {
    a: IntMatrix,
    // (U, U⁻¹) and (V, V⁻¹), when tracked.
    left: Option<(IntMatrix, IntMatrix)>,
    right: Option<(IntMatrix, IntMatrix)>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some((u, ui)) = &mut self.left {
            u.swap_rows(i, j);
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some((v, vi)) = &mut self.right {
            v.swap_cols(i, j);
            vi.swap_rows(i, j);
        }
    }

    fn add_row(&mut self, src: usize, dst: usize, q: &BigInt) {
        self.a.add_row(src, dst, q);
        if let Some((u, ui)) = &mut self.left {
            u.add_row(src, dst, q);
            ui.add_col(dst, src, &-q);
        }
    }

    fn add_col(&mut self, src: usize, dst: usize, q: &BigInt) {
        self.a.add_col(src, dst, q);
        if let Some((v, vi)) = &mut self.right {
            v.add_col(src, dst, q);
            vi.add_row(dst, src, &-q);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        if let Some((u, ui)) = &mut self.left {
            u.negate_row(r);
            ui.negate_col(r);
        }
    }

    /// Smallest nonzero entry of the trailing submatrix starting at `(t, t)`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let mag = x.abs();
                if best.as_ref().is_none_or(|(_, b)| &mag < b) {
                    let done = mag.is_one();
                    best = Some(((i, j), mag));
                    if done {
                        return best.map(|(p, _)| p);
                    }
                }
            }
        }
        best.map(|(p, _)| p)
    }

    fn run(mut self) -> (IntMatrix, Option<Pair>, Option<Pair>) {
        let limit = self.a.rows.min(self.a.cols);
        for t in 0..limit {
            let Some((pi, pj)) = self.min_entry(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let pivot = self.a.get(t, t).clone();
                let mut smallest: Option<(bool, usize, BigInt)> = None;
                for i in t + 1..self.a.rows {
                    if self.a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = self.a.get(i, t) / &pivot;
                    self.add_row(t, i, &-q);
                    let rem = self.a.get(i, t).abs();
                    if !rem.is_zero() && smallest.as_ref().is_none_or(|(_, _, m)| &rem < m) {
                        smallest = Some((true, i, rem));
                    }
                }
                for j in t + 1..self.a.cols {
                    if self.a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = self.a.get(t, j) / &pivot;
                    self.add_col(t, j, &-q);
                    let rem = self.a.get(t, j).abs();
                    if !rem.is_zero() && smallest.as_ref().is_none_or(|(_, _, m)| &rem < m) {
                        smallest = Some((false, j, rem));
                    }
                }
                if let Some((is_row, idx, _)) = smallest {
                    // A remainder smaller than the pivot: make it the pivot.
                    if is_row {
                        self.swap_rows(t, idx);
                    } else {
                        self.swap_cols(t, idx);
                    }
                    continue;
                }
                let offender = (t + 1..self.a.rows).find(|&i| {
                    (t + 1..self.a.cols).any(|j| !self.a.get(i, j).is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.add_row(i, t, &BigInt::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
        (self.a, self.left, self.right)
    }
}

fn diagonal_of(a: &IntMatrix) -> Vec<BigInt> {
    (0..a.rows.min(a.cols))
        .map(|i| a.get(i, i).clone())
        .take_while(|x| !x.is_zero())
        .collect()
}

/// Smith normal form with unimodular transforms and their inverses.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let reducer = Reducer {
        a: m.clone(),
        left: Some((IntMatrix::identity(m.rows), IntMatrix::identity(m.rows))),
        right: Some((IntMatrix::identity(m.cols), IntMatrix::identity(m.cols))),
    };
    let (d, left, right) = reducer.run();
    let diagonal = diagonal_of(&d);
    let (u, u_inv) = left.unwrap();
    let (v, v_inv) = right.unwrap();
    SnfResult {
        rank: diagonal.len(),
        diagonal,
        u,
        u_inv,
        v,
        v_inv,
    }
}

/// Invariant factors only; skips the transform bookkeeping.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let reducer = Reducer {
        a: m.clone(),
        left: None,
        right: None,
    };
    diagonal_of(&reducer.run().0)
}
