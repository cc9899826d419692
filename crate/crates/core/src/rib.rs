//! Twist-paired modules `(M, t)` and their identification with modules over
//! the ribbon extension.
//!
//! `t: M → ^MM` is stored as a `dim × dim` matrix; `^MM` has the same
//! underlying space as `M`.

use crate::coalgebra::{show, TCoalg};
use crate::constructions::extension_generator;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quasi::{contract, drinfeld_elements, ribbon_square};
use crate::rep::{braiding_map, crossing, dual_module, omega, tensor_modules, HModule, OmegaVariant};
use crate::report::Report;
use crate::yd::{validate_yd, yd_to_ddouble, YDModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibObject {
    pub module: HModule,
    pub t: Matrix,
}

/// `t ρ(h) = ρ(φ_{α⁻¹}(h)) t` for every basis element.
fn crossed_linear(h: &TCoalg, m: &HModule, t: &Matrix) -> bool {
    let target = crossing(h, m.grade, m);
    m.action.iter().zip(&target.action).all(|(x, y)| t.mul(x).unwrap() == y.mul(t).unwrap())
}

/// Checks linearity of `t` and `t⁻²(^{α²}m) = u_α s_{α⁻¹}(u_{α⁻¹}) m`.
pub fn validate_rib(h: &TCoalg, o: &RibObject) -> Report {
    let mut rep = Report::new();
    let m = &o.module;
    let a = m.grade;
    if o.t.rows() != m.dim || o.t.cols() != m.dim {
        rep.fail("rib-shape", &[a], format!("t is {}x{}, module has dim {}", o.t.rows(), o.t.cols(), m.dim));
        return rep;
    }
    rep.extend(crate::rep::validate_module(h, m));
    rep.record("rib-linear", &[a], crossed_linear(h, m, &o.t), || "t is not H-linear".into());
    let u = drinfeld_elements(h);
    let w = m.act(&ribbon_square(h, &u, a));
    let sq = Matrix::chain(&[&o.t, &o.t, &w]).unwrap();
    rep.record("rib-square", &[a], sq.is_identity(), || format!("t² w = {}", show(sq.elems())));
    rep.canonicalize();
    rep
}

/// `t_2 f = (^αf) t_1`.
pub fn is_rib_morphism(f: &Matrix, o1: &RibObject, o2: &RibObject) -> bool {
    crate::rep::is_module_map(f, &o1.module, &o2.module) && o2.t.mul(f).unwrap() == f.mul(&o1.t).unwrap()
}

/// `(M ⊗ M', (^{^MM'}t ⊗ ^Mt') ∘ c_{^MM', M} ∘ c_{M,M'})`.
pub fn rib_tensor(h: &TCoalg, o1: &RibObject, o2: &RibObject) -> RibObject {
    let (m1, m2) = (&o1.module, &o2.module);
    let cm2 = crossing(h, m1.grade, m2);
    let t = Matrix::chain(&[&o1.t.kron(&o2.t), &braiding_map(h, &cm2, m1), &braiding_map(h, m1, m2)]).unwrap();
    RibObject { module: tensor_modules(h, m1, m2), t }
}

/// `(M*, ^{M*}t*)`.
pub fn rib_dual(h: &TCoalg, o: &RibObject) -> RibObject {
    RibObject { module: dual_module(h, &o.module), t: o.t.transpose() }
}

/// `(h + k v_α) n = h n + k t⁻¹(^α n)`, as a module over `RT_α`.
pub fn rt_module_from_rib(o: &RibObject) -> Result<HModule> {
    let ti = o.t.inverse()?;
    let m = &o.module;
    let mut action = m.action.clone();
    for x in &m.action {
        action.push(x.mul(&ti)?);
    }
    Ok(HModule::new(m.grade, m.dim, action))
}

/// Restricts an `RT_α`-module to `H_α` and sets `t = ρ(v_α)⁻¹`.
pub fn rib_from_rt_module(rt: &TCoalg, n: &HModule) -> Result<RibObject> {
    let d = rt.dim(n.grade) / 2;
    if n.action.len() != 2 * d {
        return Err(Error::shape(format!("expected {} action matrices, got {}", 2 * d, n.action.len())));
    }
    let v = n.act(&extension_generator(rt, n.grade));
    let t = v.inverse()?;
    Ok(RibObject { module: HModule::new(n.grade, n.dim, n.action[..d].to_vec()), t })
}

/// `θ_{M₁⊗M₂}` expanded elementwise:
/// `θ_α ζ_{(α).i} ξ_{(α).j} m₁ ⊗ θ_β φ_{α⁻¹}(ξ_{(αβα⁻¹).i}) ζ_{(β).j} m₂`,
/// for modules over a ribbon T-coalgebra.
pub fn tensor_twist_formula(h: &TCoalg, m1: &HModule, m2: &HModule) -> Matrix {
    let g = &h.group;
    let (a, b) = (m1.grade, m2.grade);
    let c = g.conj(b, a);
    let r1 = h.r().get(c, a);
    let r2 = h.r().get(a, b);
    let phi = h.phi(g.inv(a), c);
    let (ta, tb) = (m1.act(h.theta(a)), m2.act(h.theta(b)));
    let mut out = Matrix::zeros(m1.dim * m2.dim, m1.dim * m2.dim);
    for p in 0..r1.rows() {
        for q in 0..r1.cols() {
            let c1 = r1.get(p, q);
            if c1.is_zero() {
                continue;
            }
            let left_i = m1.action[q].clone();
            let right_i = m2.act(&phi.column(p));
            for p2 in 0..r2.rows() {
                for q2 in 0..r2.cols() {
                    let c2 = r2.get(p2, q2);
                    if c2.is_zero() {
                        continue;
                    }
                    let left = Matrix::chain(&[&ta, &left_i, &m1.action[p2]]).unwrap();
                    let right = Matrix::chain(&[&tb, &right_i, &m2.action[q2]]).unwrap();
                    out.add_scaled(&left.kron(&right), &(c1 * c2));
                }
            }
        }
    }
    out
}

/// Element identities relating the Drinfeld elements to `R`, for every `α`:
/// `s_{α⁻¹}(u_{α⁻¹}) = ξ_{(α).i} s_{α⁻¹}(ζ_{(α⁻¹).i})` and
/// `s_{α⁻¹}(u_{α⁻¹}) h = (s_α⁻¹ ∘ s_{α⁻¹}⁻¹ ∘ φ_α)(h) s_{α⁻¹}(u_{α⁻¹})`.
pub fn check_lemma_identities(h: &TCoalg) -> Result<Report> {
    let mut rep = Report::new();
    let g = &h.group;
    let u = drinfeld_elements(h);
    for a in g.elements() {
        let ai = g.inv(a);
        let su = h.s(ai).apply(&u[ai])?;
        let s = h.s(ai);
        let rhs = contract(h, a, h.r().get(a, ai), |p| h.basis(a, p), |q| s.column(q));
        rep.record("su-expansion", &[a], su == rhs, || format!("{} vs {}", show(&su), show(&rhs)));
        let conj = Matrix::chain(&[&h.antipode_inverse(a)?, &h.antipode_inverse(ai)?, h.phi(a, a)])?;
        for k in 0..h.dim(a) {
            let lhs = h.mul(a, &su, &h.basis(a, k));
            let rhs = h.mul(a, &conj.column(k), &su);
            rep.record("su-commutation", &[a, k], lhs == rhs, || format!("{} vs {}", show(&lhs), show(&rhs)));
        }
    }
    rep.canonicalize();
    Ok(rep)
}

/// An object of the categorical double of `Rep(H)`: a YD module with a
/// crossed self-map `t` such that `(^Vt ∘ t)⁻¹ = ω_V`, the braiding being
/// that of `YD(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleObject {
    pub yd: YDModule,
    pub t: Matrix,
}

/// Validates a double object; `d` must be `double(h)`. The `ω` of `V` is
/// computed through the `D̄(H)`-module carried by the YD data.
pub fn validate_double_object(h: &TCoalg, d: &TCoalg, o: &DoubleObject) -> Result<Report> {
    let mut rep = validate_yd(h, &o.yd);
    let m = yd_to_ddouble(h, &o.yd);
    let a = m.grade;
    rep.record("double-linear", &[a], crossed_linear(d, &m, &o.t), || "t is not YD-linear".into());
    let om = omega(d, &m, OmegaVariant::InverseBraiding)?;
    let ok = Matrix::chain(&[&om, &o.t, &o.t])?.is_identity();
    rep.record("double-omega", &[a], ok, || "(t t)⁻¹ ≠ ω".into());
    rep.canonicalize();
    Ok(rep)
}

/// The same data read as an object of `Rib(D̄(H))`.
pub fn double_object_to_rib(h: &TCoalg, o: &DoubleObject) -> RibObject {
    RibObject { module: yd_to_ddouble(h, &o.yd), t: o.t.clone() }
}
