use crate::algebra::Component;
use crate::error::Result;
use crate::group::GroupElement;
use crate::linalg::{vec_kron, zero_vec, Matrix, Tensor3, Vector};
use crate::quasi::RMatrix;
use crate::scalar::Scalar;
use crate::coalgebra::TCoalg;

use super::dual_coop::{dual_algebra, dual_antipode, dual_comul, dual_conj, dual_counit, DualBasis};

/// Indexing of `D̄_α = H_α ⊗ ⊕_γ H*_γ`: basis `e_a ⊛ e^{γ.j}` at
/// `a · N + index(γ, j)`.
#[derive(Clone, Debug)]
pub struct DoubleBasis {
    pub dual: DualBasis,
}

impl DoubleBasis {
    pub fn new(h: &TCoalg) -> DoubleBasis {
        DoubleBasis { dual: DualBasis::new(h) }
    }

    pub fn index(&self, a: usize, g: GroupElement, j: usize) -> usize {
        a * self.dual.total() + self.dual.index(g, j)
    }

    /// `(h-index, γ, dual index)` of a basis position.
    pub fn split(&self, idx: usize) -> (usize, GroupElement, usize) {
        let n = self.dual.total();
        let (g, j) = self.dual.split(idx % n);
        (idx / n, g, j)
    }
}

/// `(e_a ⊛ ε)(1 ⊛ e^{δ.q}) = Σ coef · e_y ⊛ e^{δ.r}`, with
/// `⟨f', x⟩ = ⟨e^{δ.q}, s_δ⁻¹(h''') x φ_{α⁻¹}(h')⟩` over `Δ_{αδα⁻¹,α,δ⁻¹}(e_a)`.
/// Returned as `(y, r, coef)` triples.
pub(crate) fn commute_terms(
    h: &TCoalg,
    a_grade: GroupElement,
    a: usize,
    d: GroupElement,
    q: usize,
) -> Result<Vec<(usize, usize, Scalar)>> {
    let g = &h.group;
    let di = g.inv(d);
    let c = g.conj(d, a_grade);
    let it = h.iterated_comul(&[c, a_grade, di]);
    let (da, ddi) = (h.dim(a_grade), h.dim(di));
    let sinv = h.antipode_inverse(d)?;
    let phi = h.phi(g.inv(a_grade), c);
    let comp = h.comp(d);
    let mut out: Vec<(usize, usize, Scalar)> = Vec::new();
    for row in 0..it.rows() {
        let coef = it.get(row, a);
        if coef.is_zero() {
            continue;
        }
        let (x, y, z) = (row / (da * ddi), (row / ddi) % da, row % ddi);
        let left = sinv.column(z);
        let right = phi.column(x);
        for r in 0..comp.dim() {
            let v = h.mul_all(d, &[&left, &comp.basis(r), &right]);
            if !v[q].is_zero() {
                out.push((y, r, coef * &v[q]));
            }
        }
    }
    Ok(out)
}

fn double_component(h: &TCoalg, db: &DoubleBasis, m: &Component, a: GroupElement) -> Result<Component> {
    let g = &h.group;
    let n = db.dual.total();
    let da = h.dim(a);
    let dim = da * n;
    // comm[x][(δ,q)] = terms of (e_x ⊛ ε)(1 ⊛ e^{δ.q})
    let mut comm: Vec<Vec<Vec<(usize, usize, Scalar)>>> = Vec::with_capacity(da);
    for x in 0..da {
        let mut row = Vec::with_capacity(n);
        for d in g.elements() {
            for q in 0..h.dim(d) {
                let terms = commute_terms(h, a, x, d, q)?;
                row.push(
                    terms.into_iter().map(|(y, r, c)| (y, db.dual.index(d, r), c)).collect(),
                );
            }
        }
        comm.push(row);
    }
    let hc = h.comp(a);
    let mut t = Tensor3::zeros(dim, dim, dim);
    for x in 0..da {
        for p in 0..n {
            for b in 0..da {
                for q in 0..n {
                    // (e_x ⊛ f_p)(e_b ⊛ f_q) = Σ (e_y e_b) ⊛ (f_p f_r)
                    let mut acc = zero_vec(dim);
                    for (y, r, c) in &comm[x][q] {
                        for (k, s) in hc.basis_product(*y, b) {
                            let cs = c * s;
                            for (l, u) in m.basis_product(p, *r) {
                                acc[k * n + l] += &(&cs * u);
                            }
                        }
                    }
                    for (k, v) in acc.into_iter().enumerate() {
                        if !v.is_zero() {
                            t.set(x * n + p, b * n + q, k, v);
                        }
                    }
                }
            }
        }
    }
    Component::new(t, vec_kron(h.unit(a), m.unit()))
}

/// The double `D̄(H)` with its canonical R-matrix
/// `R̄_{α,β} = Σ_i (1_α ⊛ e^{β⁻¹.i}) ⊗ (s_{β⁻¹}(e_{β⁻¹.i}) ⊛ ε)`.
pub fn double(h: &TCoalg) -> Result<TCoalg> {
    let g = &h.group;
    let n = g.order();
    let db = DoubleBasis::new(h);
    let nd = db.dual.total();
    let m = dual_algebra(h, &db.dual);
    let components = g
        .elements()
        .map(|a| double_component(h, &db, &m, a))
        .collect::<Result<Vec<_>>>()?;

    let mut comul = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            let dh = h.delta(a, b);
            let dm = dual_comul(h, &db.dual, b);
            let (da, dbb) = (h.dim(a), h.dim(b));
            let mut mat = Matrix::zeros(da * nd * dbb * nd, h.dim(ab) * nd);
            for k in 0..h.dim(ab) {
                for f in 0..nd {
                    let col = k * nd + f;
                    for xy in 0..da * dbb {
                        let c1 = dh.get(xy, k);
                        if c1.is_zero() {
                            continue;
                        }
                        let (x, y) = (xy / dbb, xy % dbb);
                        for rs in 0..nd * nd {
                            let c2 = dm.get(rs, f);
                            if c2.is_zero() {
                                continue;
                            }
                            let (r, s) = (rs / nd, rs % nd);
                            let row = (x * nd + r) * (dbb * nd) + y * nd + s;
                            mat.set(row, col, c1 * c2);
                        }
                    }
                }
            }
            comul.push(mat);
        }
    }

    let meps = dual_counit(h, &db.dual);
    let counit = vec_kron(&h.counit, &meps);

    let mut antipode = Vec::with_capacity(n);
    for a in g.elements() {
        let ai = g.inv(a);
        let sm = dual_antipode(h, &db.dual, a)?;
        let target = &components[ai];
        let dim = h.dim(a) * nd;
        let mut mat = Matrix::zeros(h.dim(ai) * nd, dim);
        for idx in 0..dim {
            let (x, f) = (idx / nd, idx % nd);
            let left = vec_kron(&h.s(a).column(x), m.unit());
            let right = vec_kron(h.unit(ai), &sm.column(f));
            let v = target.mul(&left, &right);
            for (row, s) in v.into_iter().enumerate() {
                if !s.is_zero() {
                    mat.set(row, idx, s);
                }
            }
        }
        antipode.push(mat);
    }

    let mut conj = Vec::with_capacity(n * n);
    for b in g.elements() {
        let cm = dual_conj(h, &db.dual, b);
        for a in g.elements() {
            conj.push(h.phi(b, a).kron(&cm));
        }
    }

    let mut out = TCoalg::new(g.clone(), components, comul, counit, antipode, conj)?;
    out.field = h.field;

    let mut r = Vec::with_capacity(n * n);
    let mut rinv = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            let bi = g.inv(b);
            let (ra, rb) = (h.dim(a) * nd, h.dim(b) * nd);
            let mut fwd = Matrix::zeros(ra, rb);
            let mut back = Matrix::zeros(ra, rb);
            for i in 0..h.dim(bi) {
                let left = vec_kron(h.unit(a), &crate::linalg::unit_vec(nd, db.dual.index(bi, i)));
                let right = vec_kron(&h.s(bi).column(i), m.unit());
                add_outer(&mut fwd, &left, &right);
            }
            for i in 0..h.dim(b) {
                let left = vec_kron(h.unit(a), &crate::linalg::unit_vec(nd, db.dual.index(b, i)));
                let right = vec_kron(&h.basis(b, i), m.unit());
                add_outer(&mut back, &left, &right);
            }
            r.push(fwd);
            rinv.push(back);
        }
    }
    out = out.with_rmatrix(RMatrix::with_inverse(r, rinv))?;
    out.basis_names = Some(
        g.elements()
            .map(|a| {
                (0..h.dim(a) * nd)
                    .map(|idx| {
                        let (x, c, j) = db.split(idx);
                        let hn = h
                            .basis_names
                            .as_ref()
                            .map(|bn| bn[a][x].clone())
                            .unwrap_or_else(|| format!("e{x}"));
                        format!("{hn}*e^{c}.{j}")
                    })
                    .collect()
            })
            .collect(),
    );
    Ok(out)
}

fn add_outer(m: &mut Matrix, left: &Vector, right: &Vector) {
    for (p, x) in left.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (q, y) in right.iter().enumerate() {
            if !y.is_zero() {
                m.add_at(p, q, &(x * y));
            }
        }
    }
}
