//! Finite-dimensional unital algebras by structure constants, and products in
//! tensor products of them.

use crate::error::{Error, Result};
use crate::linalg::{unit_vec, zero_vec, Matrix, Tensor3, Vector};
use crate::scalar::Scalar;

/// One component `H_α`: `e_i e_j = Σ_k mul[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct Component {
    dim: usize,
    mul: Tensor3,
    unit: Vector,
    sparse: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for Component {
    fn eq(&self, other: &Component) -> bool {
        self.dim == other.dim && self.mul == other.mul && self.unit == other.unit
    }
}

impl Component {
    pub fn new(mul: Tensor3, unit: Vector) -> Result<Component> {
        let (a, b, c) = mul.dims();
        if a == 0 {
            return Err(Error::Invalid("zero-dimensional component".into()));
        }
        if a != b || b != c || unit.len() != a {
            return Err(Error::shape(format!(
                "component structure constants {a}x{b}x{c} with unit of length {}",
                unit.len()
            )));
        }
        let sparse = (0..a * a)
            .map(|ij| {
                mul.fibre(ij / a, ij % a)
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(k, s)| (k, s.clone()))
                    .collect()
            })
            .collect();
        Ok(Component { dim: a, mul, unit, sparse })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn scalars() -> Component {
        Component::new(Tensor3::from_vec(1, 1, 1, vec![Scalar::one()]).unwrap(), vec![Scalar::one()])
            .unwrap()
    }

    /// Builds a component from a product rule on basis indices.
    pub fn from_rule(dim: usize, unit: Vector, rule: impl Fn(usize, usize) -> Vector) -> Result<Component> {
        let mut t = Tensor3::zeros(dim, dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = rule(i, j);
                for (k, s) in v.into_iter().enumerate() {
                    t.set(i, j, k, s);
                }
            }
        }
        Component::new(t, unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// Nonzero terms of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(self.dim, i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        tensor_mul(&[self], x, y)
    }

    /// The multiplication map `H ⊗ H → H`.
    pub fn mul_matrix(&self) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(d, d * d);
        for i in 0..d {
            for j in 0..d {
                for (k, s) in self.basis_product(i, j) {
                    m.set(*k, i * d + j, s.clone());
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(d, d);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, s) in self.basis_product(i, j) {
                    m.add_at(*k, j, &(a * s));
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(d, d);
        for (j, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for i in 0..d {
                for (k, s) in self.basis_product(i, j) {
                    m.add_at(*k, i, &(a * s));
                }
            }
        }
        m
    }

    /// Two-sided inverse of `x`, or `Singular`.
    pub fn inverse(&self, x: &[Scalar]) -> Result<Vector> {
        let y = self.left_mul(x).solve(&self.unit)?;
        if self.mul(&y, x) != self.unit {
            return Err(Error::Singular);
        }
        Ok(y)
    }

    pub fn map_scalars(&self, f: &impl Fn(&Scalar) -> Scalar) -> Component {
        let (a, b, c) = self.mul.dims();
        let t = Tensor3::from_vec(a, b, c, self.mul.elems().iter().map(f).collect()).unwrap();
        Component::new(t, self.unit.iter().map(f).collect()).unwrap()
    }
}

/// Product in `comps[0] ⊗ … ⊗ comps[n-1]`, elements in lexicographic coordinates.
pub fn tensor_mul(comps: &[&Component], x: &[Scalar], y: &[Scalar]) -> Vector {
    let dims: Vec<usize> = comps.iter().map(|c| c.dim()).collect();
    let total: usize = dims.iter().product();
    assert_eq!(x.len(), total, "left factor has wrong length");
    assert_eq!(y.len(), total, "right factor has wrong length");
    let nz = |v: &[Scalar]| -> Vec<(Vec<usize>, Scalar)> {
        v.iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| (digits(i, &dims), s.clone()))
            .collect()
    };
    let (xs, ys) = (nz(x), nz(y));
    let mut out = zero_vec(total);
    let mut partial: Vec<(usize, Scalar)> = Vec::new();
    let mut next: Vec<(usize, Scalar)> = Vec::new();
    for (dx, a) in &xs {
        for (dy, b) in &ys {
            partial.clear();
            partial.push((0, a * b));
            for f in 0..comps.len() {
                let prods = comps[f].basis_product(dx[f], dy[f]);
                next.clear();
                for (idx, c) in &partial {
                    for (k, s) in prods {
                        next.push((idx * dims[f] + k, c * s));
                    }
                }
                std::mem::swap(&mut partial, &mut next);
                if partial.is_empty() {
                    break;
                }
            }
            for (idx, c) in &partial {
                out[*idx] += c;
            }
        }
    }
    out
}

/// Unit of a tensor product of components.
pub fn tensor_unit(comps: &[&Component]) -> Vector {
    let mut acc = vec![Scalar::one()];
    for c in comps {
        acc = crate::linalg::vec_kron(&acc, c.unit());
    }
    acc
}

/// Mixed-radix digits of a lexicographic index.
pub fn digits(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for f in (0..dims.len()).rev() {
        out[f] = idx % dims[f];
        idx /= dims[f];
    }
    out
}

pub fn undigits(ds: &[usize], dims: &[usize]) -> usize {
    ds.iter().zip(dims).fold(0, |acc, (d, n)| acc * n + d)
}

/// Applies `m` to factor `pos` of a tensor with the given factor dimensions.
/// Returns the matrix `I ⊗ … ⊗ m ⊗ … ⊗ I`.
pub fn on_factor(dims: &[usize], pos: usize, m: &Matrix) -> Matrix {
    let left: usize = dims[..pos].iter().product();
    let right: usize = dims[pos + 1..].iter().product();
    Matrix::identity(left).kron(m).kron(&Matrix::identity(right))
}

/// Matrix permuting tensor factors: output factor `k` is input factor `perm[k]`.
pub fn permute_factors(dims: &[usize], perm: &[usize]) -> Matrix {
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = Matrix::zeros(total, total);
    for i in 0..total {
        let d = digits(i, dims);
        let od: Vec<usize> = perm.iter().map(|&p| d[p]).collect();
        m.set(undigits(&od, &out_dims), i, Scalar::one());
    }
    m
}

/// Permutes the factors of a tensor: output factor `k` is input factor `perm[k]`.
pub fn permute_vec(v: &[Scalar], dims: &[usize], perm: &[usize]) -> Vector {
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut out = zero_vec(v.len());
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let d = digits(i, dims);
        let od: Vec<usize> = perm.iter().map(|&p| d[p]).collect();
        out[undigits(&od, &out_dims)] = x.clone();
    }
    out
}

/// Applies `m` to factor `pos` of the tensor `v` without forming `I ⊗ m ⊗ I`.
pub fn apply_on_factor(v: &[Scalar], dims: &[usize], pos: usize, m: &Matrix) -> Vector {
    assert_eq!(m.cols(), dims[pos], "map does not fit factor {pos}");
    let mut out_dims = dims.to_vec();
    out_dims[pos] = m.rows();
    let mut out = zero_vec(out_dims.iter().product());
    let cols: Vec<Vec<(usize, Scalar)>> = (0..m.cols())
        .map(|c| {
            (0..m.rows())
                .filter(|&r| !m.get(r, c).is_zero())
                .map(|r| (r, m.get(r, c).clone()))
                .collect()
        })
        .collect();
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let mut d = digits(i, dims);
        let c = d[pos];
        for (r, s) in &cols[c] {
            d[pos] = *r;
            out[undigits(&d, &out_dims)] += &(x * s);
        }
    }
    out
}

/// Inserts the vector `u` as a new tensor factor at position `pos`.
pub fn insert_factor(v: &[Scalar], dims: &[usize], pos: usize, u: &[Scalar]) -> Vector {
    let k = crate::linalg::vec_kron(v, u);
    let mut kd = dims.to_vec();
    kd.push(u.len());
    let n = dims.len();
    let perm: Vec<usize> = (0..pos).chain(std::iter::once(n)).chain(pos..n).collect();
    permute_vec(&k, &kd, &perm)
}
