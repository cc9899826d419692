//! R-matrices, Drinfeld elements and ribbon twists.

use crate::algebra::{apply_on_factor, insert_factor, permute_vec};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::{vec_kron, Matrix, Vector};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::coalgebra::{show, TCoalg};

/// `R_{α,β} ∈ H_α ⊗ H_β`, stored as `d_α × d_β` coefficient matrices
/// (`R = Σ r[p][q] e_p ⊗ e_q`), with cached inverses.
#[derive(Clone, Debug)]
pub struct RMatrix {
    r: Vec<Matrix>,
    inv: Vec<Option<Matrix>>,
}

impl RMatrix {
    /// Wraps a family and computes inverses where they exist.
    pub fn new(r: Vec<Matrix>, h: &TCoalg) -> RMatrix {
        let g = &h.group;
        let mut inv = Vec::with_capacity(r.len());
        for a in g.elements() {
            for b in g.elements() {
                let m = &r[a * g.order() + b];
                inv.push(tensor_inverse(h, &[a, b], m.elems()).ok().map(|v| {
                    Matrix::from_vec(m.rows(), m.cols(), v).expect("inverse shape")
                }));
            }
        }
        RMatrix { r, inv }
    }

    /// Wraps a family whose inverse is already known. The pairing is
    /// checked by `validate_rmatrix`.
    pub fn with_inverse(r: Vec<Matrix>, inv: Vec<Matrix>) -> RMatrix {
        RMatrix { r, inv: inv.into_iter().map(Some).collect() }
    }

    pub fn all(&self) -> &[Matrix] {
        &self.r
    }

    /// Cached inverses, `None` where `R_{α,β}` is not invertible.
    pub fn inverses(&self) -> &[Option<Matrix>] {
        &self.inv
    }

    pub(crate) fn check_shapes(&self, h: &TCoalg) -> Result<()> {
        let g = &h.group;
        if self.r.len() != g.order() * g.order() {
            return Err(Error::shape("R family has the wrong length"));
        }
        for a in g.elements() {
            for b in g.elements() {
                let m = &self.r[a * g.order() + b];
                if m.rows() != h.dim(a) || m.cols() != h.dim(b) {
                    return Err(Error::shape(format!(
                        "R at ({a},{b}) is {}x{}, expected {}x{}",
                        m.rows(),
                        m.cols(),
                        h.dim(a),
                        h.dim(b)
                    )));
                }
            }
        }
        Ok(())
    }

    fn idx(&self, a: GroupElement, b: GroupElement) -> usize {
        let n = (self.r.len() as f64).sqrt() as usize;
        a * n + b
    }

    /// `R_{α,β}` as a coefficient matrix.
    pub fn get(&self, a: GroupElement, b: GroupElement) -> &Matrix {
        &self.r[self.idx(a, b)]
    }

    /// `R̃_{α,β} = R_{α,β}⁻¹`.
    pub fn inv(&self, a: GroupElement, b: GroupElement) -> Option<&Matrix> {
        self.inv[self.idx(a, b)].as_ref()
    }

    fn inv_or_panic(&self, a: GroupElement, b: GroupElement) -> &Matrix {
        self.inv(a, b).unwrap_or_else(|| panic!("R_({a},{b}) is not invertible"))
    }
}

/// Inverse of an element of `H_{g0} ⊗ … ⊗ H_{gk}`.
pub fn tensor_inverse(h: &TCoalg, grades: &[GroupElement], x: &[Scalar]) -> Result<Vector> {
    let total: usize = h.dims(grades).iter().product();
    let cols: Vec<Vector> = (0..total)
        .map(|k| h.tmul(grades, x, &crate::linalg::unit_vec(total, k)))
        .collect();
    let left = Matrix::from_columns(total, &cols);
    let one = h.tunit(grades);
    let y = left.solve(&one)?;
    if h.tmul(grades, &y, x) != one {
        return Err(Error::Singular);
    }
    Ok(y)
}

/// `Σ m[p][q] f(e_p) · g(e_q)` in `H_target`, for a coefficient matrix `m`.
pub fn contract(
    h: &TCoalg,
    target: GroupElement,
    m: &Matrix,
    f: impl Fn(usize) -> Vector,
    g: impl Fn(usize) -> Vector,
) -> Vector {
    let mut acc = crate::linalg::zero_vec(h.dim(target));
    for p in 0..m.rows() {
        for q in 0..m.cols() {
            let c = m.get(p, q);
            if c.is_zero() {
                continue;
            }
            let term = h.mul(target, &f(p), &g(q));
            for (a, t) in acc.iter_mut().zip(&term) {
                if !t.is_zero() {
                    *a += &(t * c);
                }
            }
        }
    }
    acc
}

/// Drinfeld elements `u_α = (s_{α⁻¹} ∘ φ_α)(ζ_{(α⁻¹).i}) ξ_{(α).i}`.
pub fn drinfeld_elements(h: &TCoalg) -> Vec<Vector> {
    h.group.elements().map(|a| drinfeld_u(h, a)).collect()
}

fn drinfeld_u(h: &TCoalg, a: GroupElement) -> Vector {
    let ai = h.group.inv(a);
    let sphi = h.s(ai).mul(h.phi(a, ai)).unwrap();
    // u = Σ r[p][q] (s∘φ)(e_q) e_p
    contract(h, a, &h.r().get(a, ai).transpose(), |q| sphi.column(q), |p| h.basis(a, p))
}

/// `w_α = u_α s_{α⁻¹}(u_{α⁻¹})`, the element whose square root a ribbon
/// extension adjoins.
pub fn ribbon_square(h: &TCoalg, u: &[Vector], a: GroupElement) -> Vector {
    let ai = h.group.inv(a);
    let su = h.s(ai).apply(&u[ai]).unwrap();
    h.mul(a, &u[a], &su)
}

/// `σ((φ_γ ⊗ id)(m))` for `m ∈ H_x ⊗ H_y`, as an element of `H_y ⊗ H_{γxγ⁻¹}`.
fn flip_phi_first(h: &TCoalg, m: &Matrix, x: GroupElement, y: GroupElement, c: GroupElement) -> Vector {
    let v = apply_on_factor(m.elems(), &[h.dim(x), h.dim(y)], 0, h.phi(c, x));
    permute_vec(&v, &[h.dim(h.group.conj(x, c)), h.dim(y)], &[1, 0])
}

/// Exhaustive check of the quasitriangular axioms for the attached R.
pub fn validate_rmatrix(h: &TCoalg) -> Report {
    let mut rep = Report::new();
    let g = &h.group;
    let Some(r) = &h.rmatrix else {
        rep.fail("rmatrix-present", &[], "no R-matrix attached");
        return rep;
    };
    let mut invertible = true;
    for a in g.elements() {
        for b in g.elements() {
            let ok = match r.inv(a, b) {
                Some(ri) => {
                    let one = h.tunit(&[a, b]);
                    h.tmul(&[a, b], r.get(a, b).elems(), ri.elems()) == one
                        && h.tmul(&[a, b], ri.elems(), r.get(a, b).elems()) == one
                }
                None => false,
            };
            invertible &= ok;
            rep.record("R-invertible", &[a, b], ok, || "R has no two-sided inverse".into());
        }
    }

    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            let ai = g.inv(a);
            let c = g.conj(b, a);
            let twisted = Matrix::chain(&[
                &Matrix::flip(h.dim(b), h.dim(a)),
                &h.phi(ai, c).kron(&Matrix::identity(h.dim(a))),
                h.delta(c, a),
            ])
            .unwrap();
            let mut ok = true;
            for k in 0..h.dim(ab) {
                let lhs = h.tmul(&[a, b], r.get(a, b).elems(), &h.delta(a, b).column(k));
                let rhs = h.tmul(&[a, b], &twisted.column(k), r.get(a, b).elems());
                if lhs != rhs {
                    ok = false;
                    rep.fail("R-a", &[a, b, k], format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
                }
            }
            if ok {
                rep.pass("R-a", &[a, b]);
            }
        }
    }

    for a in g.elements() {
        for b in g.elements() {
            for c in g.elements() {
                let dims = h.dims(&[a, b, c]);
                // R-b: (H_α ⊗ Δ_{β,γ})(R_{α,βγ}) = (R_{α,γ})_{1β3} (R_{α,β})_{12γ}
                let bc = g.mul(b, c);
                let lhs = apply_on_factor(r.get(a, bc).elems(), &h.dims(&[a, bc]), 1, h.delta(b, c));
                let r13 = insert_factor(r.get(a, c).elems(), &h.dims(&[a, c]), 1, h.unit(b));
                let r12 = vec_kron(r.get(a, b).elems(), h.unit(c));
                let rhs = h.tmul(&[a, b, c], &r13, &r12);
                rep.record("R-b", &[a, b, c], lhs == rhs, || format!("lhs {} rhs {}", show(&lhs), show(&rhs)));

                // R-c: (Δ_{α,β} ⊗ H_γ)(R_{αβ,γ})
                //      = ((φ_β ⊗ H_γ)(R_{β⁻¹αβ,γ}))_{1β3} (R_{β,γ})_{α23}
                let ab = g.mul(a, b);
                let lhs = apply_on_factor(r.get(ab, c).elems(), &h.dims(&[ab, c]), 0, h.delta(a, b));
                let x = g.conj(a, g.inv(b));
                let phr = apply_on_factor(r.get(x, c).elems(), &h.dims(&[x, c]), 0, h.phi(b, x));
                let p13 = insert_factor(&phr, &h.dims(&[a, c]), 1, h.unit(b));
                let r23 = vec_kron(h.unit(a), r.get(b, c).elems());
                let rhs = h.tmul(&[a, b, c], &p13, &r23);
                rep.record("R-c", &[a, b, c], lhs == rhs, || format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
                let _ = &dims;

                // R-d: (φ_α ⊗ φ_α)(R_{β,γ}) = R_{αβα⁻¹,αγα⁻¹}
                let lhs = h.phi(a, b).mul(r.get(b, c)).unwrap().mul(&h.phi(a, c).transpose()).unwrap();
                let rhs = r.get(g.conj(b, a), g.conj(c, a));
                rep.record("R-d", &[a, b, c], &lhs == rhs, || format!("lhs {} rhs {}", show(lhs.elems()), show(rhs.elems())));
            }
        }
    }
    let _ = invertible;
    rep.canonicalize();
    rep
}

/// Checks the eight standard properties of the Drinfeld elements.
pub fn check_drinfeld_props(h: &TCoalg) -> Report {
    let mut rep = Report::new();
    let g = &h.group;
    let r = h.r();
    let u: Vec<Vector> = g.elements().map(|a| drinfeld_u(h, a)).collect();

    // 1: u_1 = s_1(ζ_i) ξ_i
    let u1 = contract(h, 0, &r.get(0, 0).transpose(), |q| h.s(0).column(q), |p| h.basis(0, p));
    rep.record("ovid-1", &[], u1 == u[0], || format!("{} vs {}", show(&u1), show(&u[0])));

    let mut uinv = Vec::new();
    for a in g.elements() {
        let ai = g.inv(a);
        let inv = h.comp(a).inverse(&u[a]);
        rep.record("ovid-2-invertible", &[a], inv.is_ok(), || "u_α is not invertible".into());
        let Ok(inv) = inv else {
            uinv.push(h.unit(a).clone());
            continue;
        };
        // u_α⁻¹ = s_α⁻¹(ζ̃_{(α⁻¹).i}) ξ̃_{(α).i}
        let sinv = h.antipode_inverse(a).unwrap();
        let cand =
            contract(h, a, &r.inv_or_panic(a, ai).transpose(), |q| sinv.column(q), |p| h.basis(a, p));
        rep.record("ovid-2a", &[a], cand == inv, || format!("{} vs {}", show(&cand), show(&inv)));
        // u_α⁻¹ = ζ_{(α).i} (s_{α⁻¹} s_α)(ξ_{(α).i})
        let ss = h.s(ai).mul(h.s(a)).unwrap();
        let cand = contract(h, a, &r.get(a, a).transpose(), |q| h.basis(a, q), |p| ss.column(p));
        rep.record("ovid-2b", &[a], cand == inv, || format!("{} vs {}", show(&cand), show(&inv)));
        uinv.push(inv);
    }

    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            let lhs = h.delta(a, b).apply(&u[ab]).unwrap();
            let rhs = ovid3_rhs(h, a, b, &u[a], &u[b]);
            rep.record("ovid-3", &[a, b], lhs == rhs, || format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
        }
    }

    let eps_u = crate::linalg::dot(&h.counit, &u[0]);
    rep.record("ovid-4", &[], eps_u.is_one(), || format!("ε(u_1) = {eps_u}"));

    for a in g.elements() {
        let ai = g.inv(a);
        let su = h.s(ai).apply(&u[ai]).unwrap();
        let l = h.mul(a, &su, &u[a]);
        let rr = h.mul(a, &u[a], &su);
        rep.record("ovid-5", &[a], l == rr, || format!("{} vs {}", show(&l), show(&rr)));
    }

    for b in g.elements() {
        for a in g.elements() {
            let lhs = h.phi(b, a).apply(&u[a]).unwrap();
            let t = g.conj(a, b);
            rep.record("ovid-6", &[b, a], lhs == u[t], || format!("{} vs {}", show(&lhs), show(&u[t])));
        }
    }

    for a in g.elements() {
        let ai = g.inv(a);
        let m = Matrix::chain(&[h.s(ai), h.s(a), h.phi(a, a)]).unwrap();
        let mut ok = true;
        for k in 0..h.dim(a) {
            let lhs = m.column(k);
            let rhs = h.mul_all(a, &[&u[a], &h.basis(a, k), &uinv[a]]);
            if lhs != rhs {
                ok = false;
                rep.fail("ovid-7", &[a, k], format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
            }
        }
        if ok {
            rep.pass("ovid-7", &[a]);
        }

        let w = ribbon_square(h, &u, a);
        let a2 = g.mul(a, a);
        let mut ok = true;
        for k in 0..h.dim(a) {
            let e = h.basis(a, k);
            let lhs = h.mul(a, &w, &e);
            let rhs = h.mul(a, &h.phi(a2, a).column(k), &w);
            if lhs != rhs {
                ok = false;
                rep.fail("ovid-8", &[a, k], format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
            }
        }
        if ok {
            rep.pass("ovid-8", &[a]);
        }
    }
    rep.canonicalize();
    rep
}

/// `Σ_{i,j} ξ̃_i ζ̃_j x ⊗ ζ̃_i φ_{α⁻¹}(ξ̃_j) y`, with `i` from `R̃_{α,β}` and
/// `j` from `R̃_{αβα⁻¹,α}`.
pub(crate) fn ovid3_rhs(h: &TCoalg, a: GroupElement, b: GroupElement, x: &[Scalar], y: &[Scalar]) -> Vector {
    let g = &h.group;
    let r = h.r();
    let c = g.conj(b, a);
    let first = r.inv_or_panic(a, b).elems().to_vec();
    let second = flip_phi_first(h, r.inv_or_panic(c, a), c, a, g.inv(a));
    let xy = vec_kron(x, y);
    h.tmul(&[a, b], &h.tmul(&[a, b], &first, &second), &xy)
}

/// Exhaustive check of the four ribbon conditions for the attached twist.
pub fn validate_ribbon(h: &TCoalg) -> Report {
    let mut rep = Report::new();
    let g = &h.group;
    if h.twist.is_none() || h.rmatrix.is_none() {
        rep.fail("ribbon-present", &[], "twist or R-matrix missing");
        return rep;
    }
    let r = h.r();
    for a in g.elements() {
        let th = h.theta(a);
        let Ok(thi) = h.comp(a).inverse(th) else {
            rep.fail("ribbon-1", &[a], "θ_α is not invertible");
            continue;
        };
        let mut ok = true;
        for k in 0..h.dim(a) {
            let lhs = h.phi(a, a).column(k);
            let rhs = h.mul_all(a, &[&thi, &h.basis(a, k), th]);
            if lhs != rhs {
                ok = false;
                rep.fail("ribbon-1", &[a, k], format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
            }
        }
        if ok {
            rep.pass("ribbon-1", &[a]);
        }
    }
    for a in g.elements() {
        let lhs = h.s(a).apply(h.theta(a)).unwrap();
        let rhs = h.theta(g.inv(a));
        rep.record("ribbon-2", &[a], &lhs == rhs, || format!("{} vs {}", show(&lhs), show(rhs)));
    }
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            let lhs = h.delta(a, b).apply(h.theta(ab)).unwrap();
            // θ_α ζ_i ξ_j ⊗ θ_β φ_{α⁻¹}(ξ_i) ζ_j
            let c = g.conj(b, a);
            let p = flip_phi_first(h, r.get(c, a), c, a, g.inv(a));
            let tt = vec_kron(h.theta(a), h.theta(b));
            let rhs = h.tmul(&[a, b], &h.tmul(&[a, b], &tt, &p), r.get(a, b).elems());
            rep.record("ribbon-3", &[a, b], lhs == rhs, || format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
        }
    }
    for b in g.elements() {
        for a in g.elements() {
            let lhs = h.phi(b, a).apply(h.theta(a)).unwrap();
            let rhs = h.theta(g.conj(a, b));
            rep.record("ribbon-4", &[b, a], &lhs == rhs, || format!("{} vs {}", show(&lhs), show(rhs)));
        }
    }
    rep.canonicalize();
    rep
}

/// R-matrix of the mirror: `R̄_{α,β} = (σ(R_{β⁻¹,α⁻¹}))⁻¹ ∈ H_{α⁻¹} ⊗ H_{β⁻¹}`.
pub fn mirror_rmatrix(h: &TCoalg) -> Result<RMatrix> {
    let g = &h.group;
    let r = h.rmatrix.as_ref().ok_or_else(|| Error::Invalid("no R-matrix attached".into()))?;
    let mut fam = Vec::new();
    let mut inv = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            let (ai, bi) = (g.inv(a), g.inv(b));
            let ri = r.inv(bi, ai).ok_or(Error::Singular)?;
            fam.push(ri.transpose());
            inv.push(r.get(bi, ai).transpose());
        }
    }
    Ok(RMatrix::with_inverse(fam, inv))
}
