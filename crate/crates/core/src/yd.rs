//! Yetter-Drinfeld modules, half-braidings over `Rep(H)`, and the passage
//! to and from modules over the double `D̄(H)`.
//!
//! A coaction `Δ_{V,λ}: V → V ⊗ H_λ` is stored as a `(d_V·d_λ) × d_V`
//! matrix. Writing `Δ_{V,λ}(v) = Σ_x A_x v ⊗ e_x`, the matrices `A_x` are
//! returned by [`YDModule::legs`].

use std::sync::Arc;

use crate::coalgebra::TCoalg;
use crate::constructions::{commute_terms, DoubleBasis};
use crate::error::Result;
use crate::group::GroupElement;
use crate::linalg::Matrix;
use crate::rep::{crossing, hom_space, is_module_map, regular_module, tensor_modules, HModule};
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    pub module: HModule,
    /// Indexed by `λ`.
    pub coaction: Vec<Matrix>,
}

impl YDModule {
    pub fn grade(&self) -> GroupElement {
        self.module.grade
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// `A_x` with `Δ_{V,λ} = Σ_x A_x ⊗ e_x`.
    pub fn legs(&self, lambda: GroupElement) -> Vec<Matrix> {
        let d = self.dim();
        let c = &self.coaction[lambda];
        let dl = c.rows() / d;
        (0..dl).map(|x| Matrix::from_fn(d, d, |r, col| c.get(r * dl + x, col).clone())).collect()
    }
}

/// Assembles `Δ = Σ_x A_x ⊗ e_x` from its legs.
fn from_legs(legs: &[Matrix], d: usize) -> Matrix {
    let dl = legs.len();
    Matrix::from_fn(d * dl, d, |r, c| legs[r % dl].get(r / dl, c).clone())
}

/// `Δ_{V,λ}(v) = v ⊗ 1_λ` for every `λ`.
pub fn trivial_coaction(h: &TCoalg, m: &HModule) -> YDModule {
    let coaction = h
        .group
        .elements()
        .map(|l| Matrix::identity(m.dim).kron(&Matrix::column_vector(h.unit(l).clone())))
        .collect();
    YDModule { module: m.clone(), coaction }
}

/// The tensor unit `(k, v ↦ v ⊗ 1_λ)`.
pub fn yd_unit(h: &TCoalg) -> YDModule {
    trivial_coaction(h, &crate::rep::trivial_module(h))
}

/// Left multiplication by `x` on `H_λ`, or right multiplication.
fn mult_matrix(h: &TCoalg, l: GroupElement, x: &[Scalar], left: bool) -> Matrix {
    let c = h.comp(l);
    if left {
        c.left_mul(x)
    } else {
        c.right_mul(x)
    }
}

/// Coassociativity, counit and the crossed compatibility with the action.
pub fn validate_yd(h: &TCoalg, v: &YDModule) -> Report {
    let mut rep = Report::new();
    let g = &h.group;
    let a = v.grade();
    let d = v.dim();
    if v.coaction.len() != g.order()
        || g.elements().any(|l| v.coaction[l].rows() != d * h.dim(l) || v.coaction[l].cols() != d)
    {
        rep.fail("yd-shape", &[a], "coaction family has the wrong shape");
        return rep;
    }
    rep.extend(crate::rep::validate_module(h, &v.module));
    let id = Matrix::identity(d);
    for l1 in g.elements() {
        for l2 in g.elements() {
            let l12 = g.mul(l1, l2);
            let lhs = id.kron(h.delta(l1, l2)).mul(&v.coaction[l12]).unwrap();
            let rhs = v.coaction[l1].kron(&Matrix::identity(h.dim(l2))).mul(&v.coaction[l2]).unwrap();
            rep.record("yd-coassoc", &[l1, l2], lhs == rhs, || "coaction is not coassociative".into());
        }
    }
    let eps = id.kron(&Matrix::row_vector(h.counit.clone())).mul(&v.coaction[0]).unwrap();
    rep.record("yd-counit", &[], eps.is_identity(), || "(V ⊗ ε)Δ_{V,1} ≠ id".into());
    for l in g.elements() {
        let al = g.mul(a, l);
        let c = g.conj(l, a);
        let dl = h.dim(l);
        let dal = h.delta(a, l);
        let dca = h.delta(c, a);
        let phi = h.phi(g.inv(a), c);
        let coact = &v.coaction[l];
        let mut ok = true;
        for k in 0..h.dim(al) {
            let mut lhs = Matrix::zeros(d * dl, d * dl);
            for pq in 0..dal.rows() {
                let s = dal.get(pq, k);
                if !s.is_zero() {
                    let (p, q) = (pq / dl, pq % dl);
                    lhs.add_scaled(&v.module.action[p].kron(&mult_matrix(h, l, &h.basis(l, q), true)), s);
                }
            }
            let lhs = lhs.mul(coact).unwrap();
            let mut rhs = Matrix::zeros(d * dl, d);
            for pq in 0..dca.rows() {
                let s = dca.get(pq, k);
                if !s.is_zero() {
                    let (p, q) = (pq / h.dim(a), pq % h.dim(a));
                    let r = mult_matrix(h, l, &phi.column(p), false);
                    let term = Matrix::chain(&[&id.kron(&r), coact, &v.module.action[q]]).unwrap();
                    rhs.add_scaled(&term, s);
                }
            }
            if lhs != rhs {
                ok = false;
                rep.fail("yd-crossing", &[l, k], "crossed compatibility fails on this basis element");
            }
        }
        if ok {
            rep.pass("yd-crossing", &[l]);
        }
    }
    rep.canonicalize();
    rep
}

/// `f: V → W` is H-linear and intertwines the coactions.
pub fn is_yd_morphism(f: &Matrix, v: &YDModule, w: &YDModule) -> bool {
    is_module_map(f, &v.module, &w.module)
        && v.coaction.iter().zip(&w.coaction).all(|(cv, cw)| {
            let dl = cv.rows() / v.dim();
            cw.mul(f).unwrap() == f.kron(&Matrix::identity(dl)).mul(cv).unwrap()
        })
}

/// `Δ_{V⊗W,λ}(v ⊗ w) = v_(V) ⊗ w_(W) ⊗ w_(λ) φ_{β⁻¹}(v_(βλβ⁻¹))`.
pub fn yd_tensor(h: &TCoalg, v: &YDModule, w: &YDModule) -> YDModule {
    let g = &h.group;
    let b = w.grade();
    let bi = g.inv(b);
    let module = tensor_modules(h, &v.module, &w.module);
    let (dv, dw) = (v.dim(), w.dim());
    let coaction = g
        .elements()
        .map(|l| {
            let c = g.conj(l, b);
            let lv = v.legs(c);
            let lw = w.legs(l);
            let phi = h.phi(bi, c);
            let comp = h.comp(l);
            let mut legs = vec![Matrix::zeros(dv * dw, dv * dw); h.dim(l)];
            for (x, ax) in lv.iter().enumerate() {
                if ax.is_zero() {
                    continue;
                }
                let px = phi.column(x);
                for (y, by) in lw.iter().enumerate() {
                    if by.is_zero() {
                        continue;
                    }
                    let prod = comp.mul(&comp.basis(y), &px);
                    let ab = ax.kron(by);
                    for (z, s) in prod.iter().enumerate() {
                        if !s.is_zero() {
                            legs[z].add_scaled(&ab, s);
                        }
                    }
                }
            }
            from_legs(&legs, dv * dw)
        })
        .collect();
    YDModule { module, coaction }
}

/// `^βV`, with coaction `(^β ⊗ φ_β) ∘ Δ_{V,β⁻¹λβ}`.
pub fn yd_crossing(h: &TCoalg, b: GroupElement, v: &YDModule) -> YDModule {
    let g = &h.group;
    let bi = g.inv(b);
    let module = crossing(h, b, &v.module);
    let id = Matrix::identity(v.dim());
    let coaction = g
        .elements()
        .map(|l| {
            let c = g.conj(l, bi);
            id.kron(h.phi(b, c)).mul(&v.coaction[c]).unwrap()
        })
        .collect();
    YDModule { module, coaction }
}

/// `σ_X: V ⊗ X → ^αX ⊗ V`, `v ⊗ x ↦ ^α(s_{λ⁻¹}(v_(λ⁻¹)) x) ⊗ v_(V)`, and
/// its inverse `y ⊗ v ↦ v_(V) ⊗ v_(λ) y`.
pub fn halfbraiding_eval(h: &TCoalg, v: &YDModule, x: &HModule) -> (Matrix, Matrix) {
    let g = &h.group;
    let l = x.grade;
    let li = g.inv(l);
    let s = h.s(li);
    let (dv, dx) = (v.dim(), x.dim);
    let mut fwd = Matrix::zeros(dx * dv, dx * dv);
    for (i, a) in v.legs(li).iter().enumerate() {
        if !a.is_zero() {
            fwd = fwd.add(&x.act(&s.column(i)).kron(a)).unwrap();
        }
    }
    let fwd = fwd.mul(&Matrix::flip(dv, dx)).unwrap();
    let mut back = Matrix::zeros(dv * dx, dv * dx);
    for (i, a) in v.legs(l).iter().enumerate() {
        if !a.is_zero() {
            back = back.add(&a.kron(&x.action[i])).unwrap();
        }
    }
    let back = back.mul(&Matrix::flip(dx, dv)).unwrap();
    (fwd, back)
}

/// `c_{V,W}` in `YD(H)`: the half-braiding of `V` evaluated at `W`.
pub fn yd_braiding(h: &TCoalg, v: &YDModule, w: &YDModule) -> Matrix {
    halfbraiding_eval(h, v, &w.module).0
}

type Evaluator = dyn Fn(&HModule) -> (Matrix, Matrix) + Send + Sync;

/// An object of the center of `Rep(H)`: a module together with a rule
/// producing `(σ_X, σ_X⁻¹)` for any module `X`.
#[derive(Clone)]
pub struct HalfBraiding {
    pub module: HModule,
    eval: Arc<Evaluator>,
}

impl HalfBraiding {
    pub fn new(module: HModule, eval: impl Fn(&HModule) -> (Matrix, Matrix) + Send + Sync + 'static) -> Self {
        HalfBraiding { module, eval: Arc::new(eval) }
    }

    pub fn eval(&self, x: &HModule) -> (Matrix, Matrix) {
        (self.eval)(x)
    }
}

impl std::fmt::Debug for HalfBraiding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HalfBraiding").field("module", &self.module).finish_non_exhaustive()
    }
}

/// The half-braiding defined by a YD module.
pub fn halfbraiding_from_yd(h: &TCoalg, v: &YDModule) -> HalfBraiding {
    let (h, v) = (h.clone(), v.clone());
    let module = v.module.clone();
    HalfBraiding::new(module, move |x| halfbraiding_eval(&h, &v, x))
}

/// `Δ_{V,λ}(v) = σ⁻¹_{H_λ}(^α1_λ ⊗ v)`.
pub fn yd_from_halfbraiding(h: &TCoalg, sigma: &HalfBraiding) -> YDModule {
    let d = sigma.module.dim;
    let coaction = h
        .group
        .elements()
        .map(|l| {
            let (_, inv) = sigma.eval(&regular_module(h, l));
            inv.mul(&Matrix::column_vector(h.unit(l).clone()).kron(&Matrix::identity(d))).unwrap()
        })
        .collect();
    YDModule { module: sigma.module.clone(), coaction }
}

/// Checks, over the sample, that each `σ_X` is an H-linear isomorphism with
/// the given inverse, natural in `X`, and splits on tensor products.
pub fn check_halfbraiding(h: &TCoalg, sigma: &HalfBraiding, samples: &[HModule]) -> Report {
    let mut rep = Report::new();
    let u = &sigma.module;
    let d = u.dim;
    for (i, x) in samples.iter().enumerate() {
        let (s, si) = sigma.eval(x);
        let inv_ok = s.mul(&si).unwrap().is_identity() && si.mul(&s).unwrap().is_identity();
        rep.record("halfbraiding-inverse", &[i], inv_ok, || "σ_X σ_X⁻¹ ≠ id".into());
        let src = tensor_modules(h, u, x);
        let tgt = tensor_modules(h, &crossing(h, u.grade, x), u);
        rep.record("halfbraiding-linear", &[i], is_module_map(&s, &src, &tgt), || "σ_X is not H-linear".into());
        for (k, x2) in samples.iter().enumerate() {
            for f in hom_space(x, x2) {
                let (s2, _) = sigma.eval(x2);
                let lhs = f.kron(&Matrix::identity(d)).mul(&s).unwrap();
                let rhs = s2.mul(&Matrix::identity(d).kron(&f)).unwrap();
                rep.record("halfbraiding-natural", &[i, k], lhs == rhs, || "σ is not natural".into());
            }
            let (s2, _) = sigma.eval(x2);
            let (sxy, _) = sigma.eval(&tensor_modules(h, x, x2));
            let rhs = Matrix::chain(&[
                &Matrix::identity(x.dim).kron(&s2),
                &s.kron(&Matrix::identity(x2.dim)),
            ])
            .unwrap();
            rep.record("halfbraiding-tensor", &[i, k], sxy == rhs, || "σ_{X⊗Y} does not split".into());
        }
    }
    rep.canonicalize();
    rep
}

/// The `D̄_α(H)`-module attached to a YD module: `h ⊛ f` acts as
/// `v ↦ ⟨f, (hv)_(γ)⟩ (hv)_(V)`.
pub fn yd_to_ddouble(h: &TCoalg, v: &YDModule) -> HModule {
    let db = DoubleBasis::new(h);
    let nd = db.dual.total();
    let a = v.grade();
    let legs: Vec<Vec<Matrix>> = h.group.elements().map(|l| v.legs(l)).collect();
    let mut action = Vec::with_capacity(h.dim(a) * nd);
    for x in 0..h.dim(a) {
        for idx in 0..nd {
            let (c, p) = db.dual.split(idx);
            action.push(legs[c][p].mul(&v.module.action[x]).unwrap());
        }
    }
    HModule::new(a, v.dim(), action)
}

/// `(ρ(h ⊛ ε), ρ(1 ⊛ e^{λ.i}))` of a `D̄_α(H)`-module.
fn split_double_action(h: &TCoalg, m: &HModule) -> (Vec<Matrix>, Vec<Vec<Matrix>>) {
    let db = DoubleBasis::new(h);
    let a = m.grade;
    let nd = db.dual.total();
    let eps = crate::linalg::Matrix::from_fn(1, nd, |_, c| {
        let (g, j) = db.dual.split(c);
        if g == 0 {
            h.counit[j].clone()
        } else {
            Scalar::zero()
        }
    });
    let eps = eps.row(0);
    let hpart = (0..h.dim(a))
        .map(|x| {
            let coords: Vec<Scalar> =
                (0..h.dim(a) * nd).map(|i| if i / nd == x { eps[i % nd].clone() } else { Scalar::zero() }).collect();
            m.act(&coords)
        })
        .collect();
    let unit = h.unit(a);
    let fpart = h
        .group
        .elements()
        .map(|l| {
            (0..h.dim(l))
                .map(|i| {
                    let j = db.dual.index(l, i);
                    let coords: Vec<Scalar> = (0..h.dim(a) * nd)
                        .map(|k| if k % nd == j { unit[k / nd].clone() } else { Scalar::zero() })
                        .collect();
                    m.act(&coords)
                })
                .collect()
        })
        .collect();
    (hpart, fpart)
}

/// The YD module of a `D̄_α(H)`-module: `Δ_{V,λ}(v) = Σ_i (1 ⊛ e^{λ.i})v ⊗ e_{λ.i}`.
pub fn ddouble_to_yd(h: &TCoalg, m: &HModule) -> YDModule {
    let (hpart, fpart) = split_double_action(h, m);
    let coaction = fpart.iter().map(|legs| from_legs(legs, m.dim)).collect();
    YDModule { module: HModule::new(m.grade, m.dim, hpart), coaction }
}

/// The half-braiding carried by a `D̄_α(H)`-module through its braiding with
/// modules pulled back from `H`:
/// `σ_X(v ⊗ x) = ^α(s_{λ⁻¹}(e_i) x) ⊗ (1 ⊛ e^{λ⁻¹.i}) v`.
pub fn halfbraiding_from_ddouble(h: &TCoalg, m: &HModule) -> HalfBraiding {
    let (hpart, fpart) = split_double_action(h, m);
    let module = HModule::new(m.grade, m.dim, hpart);
    let h = h.clone();
    let d = m.dim;
    HalfBraiding::new(module, move |x| {
        let l = x.grade;
        let li = h.group.inv(l);
        let s = h.s(li);
        let mut fwd = Matrix::zeros(x.dim * d, x.dim * d);
        for (i, f) in fpart[li].iter().enumerate() {
            fwd = fwd.add(&x.act(&s.column(i)).kron(f)).unwrap();
        }
        let fwd = fwd.mul(&Matrix::flip(d, x.dim)).unwrap();
        let back = fwd.inverse().expect("half-braiding is invertible");
        (fwd, back)
    })
}

/// The compatibility between an `H_α`-action and a `⊕H*`-action that makes
/// them a `D̄_α(H)`-action:
/// `h(f ⊳ v) = ⟨f, s⁻¹(h''') _ φ_{α⁻¹}(h')⟩ ⊳ (h'' v)`.
pub fn check_compatibility(
    h: &TCoalg,
    a: GroupElement,
    haction: &[Matrix],
    faction: &[Vec<Matrix>],
) -> Result<Report> {
    let mut rep = Report::new();
    for k in 0..h.dim(a) {
        for c in h.group.elements() {
            for p in 0..h.dim(c) {
                let lhs = haction[k].mul(&faction[c][p])?;
                let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                for (y, r, coef) in commute_terms(h, a, k, c, p)? {
                    rhs.add_scaled(&faction[c][r].mul(&haction[y])?, &coef);
                }
                rep.record("compatibility", &[k, c, p], lhs == rhs, || "h(f⊳v) differs".into());
            }
        }
    }
    rep.canonicalize();
    Ok(rep)
}

/// [`check_compatibility`] on the split action of a YD module.
pub fn yd_compatibility(h: &TCoalg, v: &YDModule) -> Result<Report> {
    let legs: Vec<Vec<Matrix>> = h.group.elements().map(|l| v.legs(l)).collect();
    check_compatibility(h, v.grade(), &v.module.action, &legs)
}
