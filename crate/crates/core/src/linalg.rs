//! Dense exact matrices.
//!
//! Linear maps act on column vectors, so a map `V → W` is a `dim W × dim V`
//! matrix. Tensor products use the lexicographic basis: `e_i ⊗ e_j` sits at
//! index `i * dim W + j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `a ⊗ b` in the lexicographic basis.
pub fn vec_kron(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = zero_vec(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    elems: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, elems: zero_vec(rows * cols) }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.elems[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, elems: Vec<Scalar>) -> Result<Matrix> {
        if elems.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                elems.len()
            )));
        }
        Ok(Matrix { rows, cols, elems })
    }

    pub fn from_i64(rows: usize, cols: usize, elems: &[i64]) -> Matrix {
        Matrix::from_vec(rows, cols, elems.iter().map(|&x| Scalar::from(x)).collect())
            .expect("entry count")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut elems = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                elems.push(f(r, c));
            }
        }
        Matrix { rows, cols, elems }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Matrix {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn column_vector(v: Vector) -> Matrix {
        Matrix { rows: v.len(), cols: 1, elems: v }
    }

    pub fn row_vector(v: Vector) -> Matrix {
        Matrix { rows: 1, cols: v.len(), elems: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn elems(&self) -> &[Scalar] {
        &self.elems
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.elems[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.elems[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        self.elems[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.elems[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.elems)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, elems: self.elems.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Matrix> {
        let elems = self.elems.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, elems })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.map(|x| x * s)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            elems: vec_add(&self.elems, &other.elems),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            elems: vec_sub(&self.elems, &other.elems),
        })
    }

    /// `self += s * other`, skipping zero entries.
    pub fn add_scaled(&mut self, other: &Matrix, s: &Scalar) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (x, y) in self.elems.iter_mut().zip(&other.elems) {
            if !y.is_zero() {
                *x += &(y * s);
            }
        }
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.elems[r * other.cols + c] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of a chain, applied right to left: `ms[0] · ms[1] · …`.
    pub fn chain(ms: &[&Matrix]) -> Result<Matrix> {
        let (last, rest) = ms.split_last().expect("empty chain");
        let mut acc = (*last).clone();
        for m in rest.iter().rev() {
            acc = m.mul(&acc)?;
        }
        Ok(acc)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(Error::shape(format!(
                "{}x{} matrix applied to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = zero_vec(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.rows * r2, self.cols * c2);
        let oc = self.cols * c2;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.elems[(i * r2 + k) * oc + j * c2 + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// The flip `V ⊗ W → W ⊗ V` with `dim V = d1`, `dim W = d2`.
    pub fn flip(d1: usize, d2: usize) -> Matrix {
        let mut m = Matrix::zeros(d1 * d2, d1 * d2);
        for i in 0..d1 {
            for j in 0..d2 {
                m.set(j * d1 + i, i * d2 + j, Scalar::one());
            }
        }
        m
    }

    /// Reduced row echelon form, returning pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for c in 0..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let f = self.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let sub = self.get(row, c);
                    if sub.is_zero() {
                        continue;
                    }
                    let v = self.get(r, c) - &(&f * sub);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.elems.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::shape(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| aug.get(r, n + c).clone()))
    }

    /// Basis of the kernel, as column vectors.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vec(self.cols);
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.clone().rref()
    }

    /// Solves `self · x = b` for one particular solution.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vector> {
        if b.len() != self.rows {
            return Err(Error::shape("right-hand side length"));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Singular);
        }
        let mut x = zero_vec(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Ok(x)
    }
}

/// Structure constants `t[i][j][k]`, flattened with `k` fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    elems: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(a: usize, b: usize, c: usize) -> Tensor3 {
        Tensor3 { dims: (a, b, c), elems: zero_vec(a * b * c) }
    }

    pub fn from_vec(a: usize, b: usize, c: usize, elems: Vec<Scalar>) -> Result<Tensor3> {
        if elems.len() != a * b * c {
            return Err(Error::shape(format!("{} entries for a {a}x{b}x{c} tensor", elems.len())));
        }
        Ok(Tensor3 { dims: (a, b, c), elems })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn elems(&self) -> &[Scalar] {
        &self.elems
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let (_, b, c) = self.dims;
        &self.elems[(i * b + j) * c + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let (_, b, c) = self.dims;
        self.elems[(i * b + j) * c + k] = v;
    }

    /// The fibre `t[i][j][..]`.
    pub fn fibre(&self, i: usize, j: usize) -> &[Scalar] {
        let (_, b, c) = self.dims;
        let start = (i * b + j) * c;
        &self.elems[start..start + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_unipotent() {
        let a = Matrix::from_i64(2, 2, &[1, 1, 0, 1]);
        assert_eq!(a.inverse().unwrap(), Matrix::from_i64(2, 2, &[1, -1, 0, 1]));
    }

    #[test]
    fn singular() {
        let a = Matrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(matches!(a.inverse(), Err(Error::Singular)));
        assert_eq!(a.rank(), 1);
        let k = a.nullspace();
        assert_eq!(k.len(), 1);
        assert!(vec_is_zero(&a.apply(&k[0]).unwrap()));
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(Error::ShapeMismatch(_))));
        assert!(matches!(a.inverse(), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn flip_swaps_factors() {
        let v = vec![Scalar::from(1), Scalar::from(2)];
        let w = vec![Scalar::from(3), Scalar::from(5), Scalar::from(7)];
        let f = Matrix::flip(2, 3);
        assert_eq!(f.apply(&vec_kron(&v, &w)).unwrap(), vec_kron(&w, &v));
    }

    #[test]
    fn solve_particular() {
        let a = Matrix::from_i64(2, 3, &[1, 0, 1, 0, 1, 1]);
        let b = vec![Scalar::from(2), Scalar::from(3)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x).unwrap(), b);
    }
}
