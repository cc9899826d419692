use crate::algebra::Component;
use crate::error::{Error, Result};
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::quasi::{drinfeld_elements, ovid3_rhs, ribbon_square, RMatrix};
use crate::coalgebra::TCoalg;

/// Block matrix `[[a, 0], [0, b]]`.
fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            m.set(r, c, a.get(r, c).clone());
        }
    }
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            m.set(a.rows() + r, a.cols() + c, b.get(r, c).clone());
        }
    }
    m
}

/// The ribbon extension `RT(H)`: `RT_α = H_α ⊕ H_α v_α` with `v_α² = w_α`,
/// `v_α h = φ_α(h) v_α`, and `Δ(v)` built from the inverse R-matrix. The
/// twist attached to the result is `θ_α = v_α⁻¹`.
pub fn ribbon_extension(h: &TCoalg) -> Result<TCoalg> {
    if h.rmatrix.is_none() {
        return Err(Error::Invalid("ribbon extension needs an R-matrix".into()));
    }
    let g = &h.group;
    let n = g.order();
    let u = drinfeld_elements(h);
    let w: Vec<Vector> = g.elements().map(|a| ribbon_square(h, &u, a)).collect();

    let mut components = Vec::with_capacity(n);
    for a in g.elements() {
        let d = h.dim(a);
        let c = h.comp(a);
        let phi = h.phi(a, a);
        let rule = |i: usize, j: usize| -> Vector {
            let mut out = zero_vec(2 * d);
            let (hi, vi) = (i % d, i >= d);
            let (hj, vj) = (j % d, j >= d);
            let left = c.basis(hi);
            let right = if vi { phi.column(hj) } else { c.basis(hj) };
            let mut p = c.mul(&left, &right);
            let offset = match (vi, vj) {
                (true, true) => {
                    p = c.mul(&p, &w[a]);
                    0
                }
                (false, false) => 0,
                _ => d,
            };
            for (k, s) in p.into_iter().enumerate() {
                out[offset + k] = s;
            }
            out
        };
        let mut unit = zero_vec(2 * d);
        for (k, s) in h.unit(a).iter().enumerate() {
            unit[k] = s.clone();
        }
        components.push(Component::from_rule(2 * d, unit, rule)?);
    }

    let mut comul = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            let (da, db, dab) = (h.dim(a), h.dim(b), h.dim(ab));
            let delta = h.delta(a, b);
            let x = ovid3_rhs(h, a, b, h.unit(a), h.unit(b));
            let mut m = Matrix::zeros(4 * da * db, 2 * dab);
            for k in 0..dab {
                let dk = delta.column(k);
                let vk = h.tmul(&[a, b], &dk, &x);
                for p in 0..da {
                    for q in 0..db {
                        let s = &dk[p * db + q];
                        if !s.is_zero() {
                            m.set(p * 2 * db + q, k, s.clone());
                        }
                        let s = &vk[p * db + q];
                        if !s.is_zero() {
                            m.set((da + p) * 2 * db + db + q, dab + k, s.clone());
                        }
                    }
                }
            }
            comul.push(m);
        }
    }

    let mut counit = h.counit.clone();
    counit.extend(h.counit.iter().cloned());

    let antipode = g
        .elements()
        .map(|a| Ok(block_diag(h.s(a), &h.s(a).mul(h.phi(g.inv(a), a))?)))
        .collect::<Result<Vec<_>>>()?;
    let mut conj = Vec::with_capacity(n * n);
    for b in g.elements() {
        for a in g.elements() {
            conj.push(block_diag(h.phi(b, a), h.phi(b, a)));
        }
    }
    let mut out = TCoalg::new(g.clone(), components, comul, counit, antipode, conj)?;
    out.field = h.field;

    let r = h.r();
    let embed = |m: &Matrix| {
        let mut e = Matrix::zeros(2 * m.rows(), 2 * m.cols());
        for p in 0..m.rows() {
            for q in 0..m.cols() {
                e.set(p, q, m.get(p, q).clone());
            }
        }
        e
    };
    let mut fam = Vec::with_capacity(n * n);
    let mut inv = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            fam.push(embed(r.get(a, b)));
            inv.push(embed(r.inv(a, b).ok_or(Error::Singular)?));
        }
    }
    out = out.with_rmatrix(RMatrix::with_inverse(fam, inv))?;

    let theta = g
        .elements()
        .map(|a| {
            let d = h.dim(a);
            let wi = h.comp(a).inverse(&w[a])?;
            let mut t = zero_vec(2 * d);
            for (k, s) in wi.into_iter().enumerate() {
                t[d + k] = s;
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    out = out.with_twist(theta);
    out.basis_names = h.basis_names.as_ref().map(|names| {
        names
            .iter()
            .map(|ns| ns.iter().cloned().chain(ns.iter().map(|s| format!("{s}*v"))).collect())
            .collect()
    });
    Ok(out)
}

/// `v_α` itself as an element of `RT_α`, for comparing twist candidates.
pub fn extension_generator(h: &TCoalg, a: usize) -> Vector {
    let d = h.dim(a) / 2;
    let mut v = zero_vec(2 * d);
    v[d..].clone_from_slice(&h.unit(a)[..d]);
    v
}
