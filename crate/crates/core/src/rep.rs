//! Finite-dimensional modules over the components of a T-coalgebra, and the
//! braided, twisted structure they inherit from `R` and `θ`.
//!
//! A module of grade `α` is a vector space with an action of `H_α`. Crossed
//! objects `^βU` share the underlying space of `U`, so morphisms and their
//! crossings have the same matrices.

use crate::algebra::permute_factors;
use crate::coalgebra::{show, TCoalg};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    pub grade: GroupElement,
    pub dim: usize,
    /// `action[i]` is the matrix of the basis element `e_i` of `H_grade`.
    pub action: Vec<Matrix>,
}

impl HModule {
    pub fn new(grade: GroupElement, dim: usize, action: Vec<Matrix>) -> HModule {
        HModule { grade, dim, action }
    }

    /// Matrix of an arbitrary element `x ∈ H_grade`.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            m.add_scaled(&self.action[i], c);
        }
        m
    }
}

/// Checks shapes, unitality and multiplicativity of the action.
pub fn validate_module(h: &TCoalg, m: &HModule) -> Report {
    let mut rep = Report::new();
    let a = m.grade;
    if a >= h.order() || m.action.len() != h.dim(a) {
        rep.fail("module-shape", &[a], "action list does not match dim H_α");
        return rep;
    }
    if m.action.iter().any(|x| x.rows() != m.dim || x.cols() != m.dim) {
        rep.fail("module-shape", &[a], "action matrix of the wrong size");
        return rep;
    }
    rep.pass("module-shape", &[a]);
    let one = m.act(h.unit(a));
    rep.record("module-unit", &[a], one.is_identity(), || "1 does not act as the identity".into());
    let mut ok = true;
    for i in 0..h.dim(a) {
        for j in 0..h.dim(a) {
            let lhs = m.act(&h.mul(a, &h.basis(a, i), &h.basis(a, j)));
            let rhs = m.action[i].mul(&m.action[j]).unwrap();
            if lhs != rhs {
                ok = false;
                rep.fail("module-mult", &[a, i, j], "ρ(e_i e_j) ≠ ρ(e_i)ρ(e_j)");
            }
        }
    }
    if ok {
        rep.pass("module-mult", &[a]);
    }
    rep
}

/// The unit object: `k` with `H_1` acting through `ε`.
pub fn trivial_module(h: &TCoalg) -> HModule {
    let action = h.counit.iter().map(|c| Matrix::from_vec(1, 1, vec![c.clone()]).unwrap()).collect();
    HModule::new(0, 1, action)
}

/// `H_α` acting on itself by left multiplication.
pub fn regular_module(h: &TCoalg, a: GroupElement) -> HModule {
    let c = h.comp(a);
    let action = (0..c.dim()).map(|i| c.left_mul(&c.basis(i))).collect();
    HModule::new(a, c.dim(), action)
}

/// A module given by an algebra map `χ: H_α → k`, listed on the basis.
pub fn character_module(a: GroupElement, values: &[Scalar]) -> HModule {
    let action = values.iter().map(|v| Matrix::from_vec(1, 1, vec![v.clone()]).unwrap()).collect();
    HModule::new(a, 1, action)
}

pub fn direct_sum(u: &HModule, v: &HModule) -> Result<HModule> {
    if u.grade != v.grade {
        return Err(Error::GradeMismatch(format!("{} vs {}", u.grade, v.grade)));
    }
    let d = u.dim + v.dim;
    let action = u
        .action
        .iter()
        .zip(&v.action)
        .map(|(x, y)| {
            Matrix::from_fn(d, d, |r, c| match (r < u.dim, c < u.dim) {
                (true, true) => x.get(r, c).clone(),
                (false, false) => y.get(r - u.dim, c - u.dim).clone(),
                _ => Scalar::zero(),
            })
        })
        .collect();
    Ok(HModule::new(u.grade, d, action))
}

/// `U ⊗ V` with `H_{αβ}` acting through `Δ_{α,β}`.
pub fn tensor_modules(h: &TCoalg, u: &HModule, v: &HModule) -> HModule {
    let (a, b) = (u.grade, v.grade);
    let ab = h.group.mul(a, b);
    let delta = h.delta(a, b);
    let dv = h.dim(b);
    let action = (0..h.dim(ab))
        .map(|k| {
            let mut m = Matrix::zeros(u.dim * v.dim, u.dim * v.dim);
            for pq in 0..delta.rows() {
                let c = delta.get(pq, k);
                if !c.is_zero() {
                    m.add_scaled(&u.action[pq / dv].kron(&v.action[pq % dv]), c);
                }
            }
            m
        })
        .collect();
    HModule::new(ab, u.dim * v.dim, action)
}

/// `^βU`: grade `βαβ⁻¹`, with `h` acting as `φ_{β⁻¹}(h)` on `U`.
pub fn crossing(h: &TCoalg, b: GroupElement, u: &HModule) -> HModule {
    let g = &h.group;
    let t = g.conj(u.grade, b);
    let phi = h.phi(g.inv(b), t);
    let action = (0..h.dim(t)).map(|k| u.act(&phi.column(k))).collect();
    HModule::new(t, u.dim, action)
}

/// `U*` of grade `α⁻¹`: `ρ*(h) = ρ(s_{α⁻¹}(h))ᵀ`.
pub fn dual_module(h: &TCoalg, u: &HModule) -> HModule {
    let ai = h.group.inv(u.grade);
    let s = h.s(ai);
    let action = (0..h.dim(ai)).map(|k| u.act(&s.column(k)).transpose()).collect();
    HModule::new(ai, u.dim, action)
}

/// `b_U: k → U ⊗ U*`, the vector `Σ e_i ⊗ e^i`, as a `d² × 1` matrix.
pub fn coevaluation(u: &HModule) -> Matrix {
    let d = u.dim;
    let mut m = Matrix::zeros(d * d, 1);
    for i in 0..d {
        m.set(i * d + i, 0, Scalar::one());
    }
    m
}

/// `d_U: U* ⊗ U → k`, as a `1 × d²` matrix.
pub fn evaluation(u: &HModule) -> Matrix {
    coevaluation(u).transpose()
}

/// `c_{U,V}(u ⊗ v) = ^α(ζ_{(β).i} v) ⊗ ξ_{(α).i} u`, a map `U ⊗ V → V ⊗ U`
/// in coordinates.
pub fn braiding_map(h: &TCoalg, u: &HModule, v: &HModule) -> Matrix {
    let r = h.r().get(u.grade, v.grade);
    let mut m = Matrix::zeros(u.dim * v.dim, u.dim * v.dim);
    for p in 0..r.rows() {
        for q in 0..r.cols() {
            let c = r.get(p, q);
            if !c.is_zero() {
                m.add_scaled(&v.action[q].kron(&u.action[p]), c);
            }
        }
    }
    m.mul(&Matrix::flip(u.dim, v.dim)).unwrap()
}

/// `θ_U(u) = ^α(θ_α u)`.
pub fn twist_map(h: &TCoalg, u: &HModule) -> Matrix {
    u.act(h.theta(u.grade))
}

/// Basis of `Hom_H(U, V)` for modules of the same grade.
pub fn hom_space(u: &HModule, v: &HModule) -> Vec<Matrix> {
    if u.grade != v.grade {
        return Vec::new();
    }
    let (du, dv) = (u.dim, v.dim);
    let unknowns = du * dv;
    // f ρ_U(e_i) - ρ_V(e_i) f = 0, with f indexed row-major
    let mut rows: Vec<Vector> = Vec::new();
    for (ru, rv) in u.action.iter().zip(&v.action) {
        for r in 0..dv {
            for c in 0..du {
                let mut eq = zero_vec(unknowns);
                for k in 0..du {
                    let x = ru.get(k, c);
                    if !x.is_zero() {
                        eq[r * du + k] += x;
                    }
                }
                for k in 0..dv {
                    let x = rv.get(r, k);
                    if !x.is_zero() {
                        eq[k * du + c] += &(-x);
                    }
                }
                if eq.iter().any(|s| !s.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    let sys = Matrix::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone());
    let kernel = if rows.is_empty() {
        (0..unknowns).map(|i| crate::linalg::unit_vec(unknowns, i)).collect()
    } else {
        sys.nullspace()
    };
    kernel.into_iter().map(|k| Matrix::from_vec(dv, du, k).unwrap()).collect()
}

pub fn is_module_map(f: &Matrix, u: &HModule, v: &HModule) -> bool {
    u.grade == v.grade
        && u.action
            .iter()
            .zip(&v.action)
            .all(|(ru, rv)| f.mul(ru).unwrap() == rv.mul(f).unwrap())
}

/// The submodule generated by `v`, with its inclusion into `U`.
pub fn cyclic_submodule(u: &HModule, v: &[Scalar]) -> (HModule, Matrix) {
    let mut span: Vec<Vector> = vec![v.to_vec()];
    loop {
        let mut cand = span.clone();
        for x in &span {
            for a in &u.action {
                cand.push(a.apply(x).unwrap());
            }
        }
        let m = Matrix::from_columns(u.dim, &cand);
        let keep: Vec<Vector> = m.independent_columns().into_iter().map(|c| cand[c].clone()).collect();
        if keep.len() == span.len() {
            span = keep;
            break;
        }
        span = keep;
    }
    let inc = Matrix::from_columns(u.dim, &span);
    let action = u
        .action
        .iter()
        .map(|a| {
            let cols: Vec<Vector> = span
                .iter()
                .map(|x| inc.solve(&a.apply(x).unwrap()).expect("span is invariant"))
                .collect();
            Matrix::from_columns(span.len(), &cols)
        })
        .collect();
    (HModule::new(u.grade, span.len(), action), inc)
}

/// Checks the braiding axioms on every pair and triple of `samples`:
/// naturality on a basis of each Hom space, the two hexagons and
/// conjugation equivariance.
pub fn check_braiding_axioms(h: &TCoalg, samples: &[HModule]) -> Report {
    let mut rep = Report::new();
    let g = &h.group;
    let n = samples.len();
    for i in 0..n {
        for j in 0..n {
            let (u, v) = (&samples[i], &samples[j]);
            let c = braiding_map(h, u, v);
            // a: naturality in each variable
            for (k, u2) in samples.iter().enumerate() {
                for f in hom_space(u, u2) {
                    let c2 = braiding_map(h, u2, v);
                    let lhs = Matrix::identity(v.dim).kron(&f).mul(&c).unwrap();
                    let rhs = c2.mul(&f.kron(&Matrix::identity(v.dim))).unwrap();
                    rep.record("braiding-a", &[i, j, k], lhs == rhs, || "naturality in U fails".into());
                }
            }
            for (k, v2) in samples.iter().enumerate() {
                for f in hom_space(v, v2) {
                    let c2 = braiding_map(h, u, v2);
                    let lhs = f.kron(&Matrix::identity(u.dim)).mul(&c).unwrap();
                    let rhs = c2.mul(&Matrix::identity(u.dim).kron(&f)).unwrap();
                    rep.record("braiding-a", &[i, j, n + k], lhs == rhs, || "naturality in V fails".into());
                }
            }
            // d: φ_β(c_{U,V}) = c_{^βU,^βV}
            for b in g.elements() {
                let cb = braiding_map(h, &crossing(h, b, u), &crossing(h, b, v));
                rep.record("braiding-d", &[i, j, b], cb == c, || "crossed braiding differs".into());
            }
            for k in 0..n {
                let w = &samples[k];
                let (du, dv, dw) = (u.dim, v.dim, w.dim);
                // b: c_{U⊗V,W} = (c_{U,^VW} ⊗ V)(U ⊗ c_{V,W})
                let uv = tensor_modules(h, u, v);
                let lhs = braiding_map(h, &uv, w);
                let vw = crossing(h, v.grade, w);
                let rhs = Matrix::chain(&[
                    &braiding_map(h, u, &vw).kron(&Matrix::identity(dv)),
                    &Matrix::identity(du).kron(&braiding_map(h, v, w)),
                ])
                .unwrap();
                rep.record("braiding-b", &[i, j, k], lhs == rhs, || "first hexagon fails".into());
                // c: c_{U,V⊗W} = (^UV ⊗ c_{U,W})(c_{U,V} ⊗ W)
                let lhs = braiding_map(h, u, &tensor_modules(h, v, w));
                let rhs = Matrix::chain(&[
                    &Matrix::identity(dv).kron(&braiding_map(h, u, w)),
                    &braiding_map(h, u, v).kron(&Matrix::identity(dw)),
                ])
                .unwrap();
                rep.record("braiding-c", &[i, j, k], lhs == rhs, || "second hexagon fails".into());
            }
        }
    }
    rep.canonicalize();
    rep
}

/// Yang-Baxter equation on a triple of grade-1 modules.
pub fn yang_baxter(h: &TCoalg, u: &HModule, v: &HModule, w: &HModule) -> bool {
    let (du, dv, dw) = (u.dim, v.dim, w.dim);
    let id = Matrix::identity;
    let lhs = Matrix::chain(&[
        &braiding_map(h, v, w).kron(&id(du)),
        &id(dv).kron(&braiding_map(h, u, w)),
        &braiding_map(h, u, v).kron(&id(dw)),
    ])
    .unwrap();
    let rhs = Matrix::chain(&[
        &id(dw).kron(&braiding_map(h, u, v)),
        &braiding_map(h, u, w).kron(&id(dv)),
        &id(du).kron(&braiding_map(h, v, w)),
    ])
    .unwrap();
    lhs == rhs
}

/// `t1 ⊠ t2 = c_{^{U⊗U'}U', ^UU} ∘ c_{^UU, ^{U'}U'} ∘ (t1 ⊗ t2)`.
pub fn twistator(h: &TCoalg, u: &HModule, t1: &Matrix, v: &HModule, t2: &Matrix) -> Matrix {
    let g = &h.group;
    let uu = crossing(h, u.grade, u);
    let vv = crossing(h, v.grade, v);
    let uvv = crossing(h, g.mul(u.grade, v.grade), v);
    Matrix::chain(&[&braiding_map(h, &uvv, &uu), &braiding_map(h, &uu, &vv), &t1.kron(t2)]).unwrap()
}

/// Twist naturality, `θ_{U⊗V} = θ_U ⊠ θ_V`, crossing invariance and
/// tortility, over all samples and pairs.
pub fn check_twist_axioms(h: &TCoalg, samples: &[HModule]) -> Report {
    let mut rep = Report::new();
    let g = &h.group;
    for (i, u) in samples.iter().enumerate() {
        let tu = twist_map(h, u);
        for (k, u2) in samples.iter().enumerate() {
            for f in hom_space(u, u2) {
                let ok = twist_map(h, u2).mul(&f).unwrap() == f.mul(&tu).unwrap();
                rep.record("twist-natural", &[i, k], ok, || "θ is not natural".into());
            }
        }
        for b in g.elements() {
            let ok = twist_map(h, &crossing(h, b, u)) == tu;
            rep.record("twist-ultra", &[i, b], ok, || "φ_β(θ_U) ≠ θ_{φ_β(U)}".into());
        }
        let lhs = tortility_lhs(h, u);
        let rhs = tu.kron(&Matrix::identity(u.dim)).mul(&coevaluation(u)).unwrap();
        rep.record("tortility", &[i], lhs == rhs, || {
            format!("lhs {} rhs {}", show(lhs.elems()), show(rhs.elems()))
        });
        for (j, v) in samples.iter().enumerate() {
            let lhs = twist_map(h, &tensor_modules(h, u, v));
            let rhs = twistator(h, u, &tu, v, &twist_map(h, v));
            rep.record("twist-main", &[i, j], lhs == rhs, || "θ_{U⊗V} ≠ θ_U ⊠ θ_V".into());
        }
    }
    rep.canonicalize();
    rep
}

/// `((^UU) ⊗ θ_{^UU*}) ∘ b_{^UU}`.
fn tortility_lhs(h: &TCoalg, u: &HModule) -> Matrix {
    let ud = crossing(h, u.grade, &dual_module(h, u));
    Matrix::identity(u.dim).kron(&twist_map(h, &ud)).mul(&coevaluation(u)).unwrap()
}

/// Choice of the map `c̃` in the composite defining `ω_U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaVariant {
    /// `c̃ = c⁻¹_{^{U⊗U}U, U}`, the only choice whose source and target
    /// match the composite.
    InverseBraiding,
    /// `c̃ = c_{^UU, ^{U⊗U}U}` read coordinate-wise.
    PlainBraiding,
}

/// `ω_U = (d ⊗ U) ∘ (^{U⊗U}U* ⊗ c̃) ∘ ((c_{^UU,^UU*} ∘ b_{^UU}) ⊗ ^{U⊗U}U)`,
/// a map `^{U⊗U}U → U`.
pub fn omega(h: &TCoalg, u: &HModule, variant: OmegaVariant) -> Result<Matrix> {
    let g = &h.group;
    let a = u.grade;
    let d = u.dim;
    let uu = crossing(h, a, u);
    let uud = crossing(h, a, &dual_module(h, u));
    let uuu = crossing(h, g.mul(a, a), u);
    let w = braiding_map(h, &uu, &uud).mul(&coevaluation(u))?;
    let ct = match variant {
        OmegaVariant::InverseBraiding => braiding_map(h, &uuu, u).inverse()?,
        OmegaVariant::PlainBraiding => braiding_map(h, &uu, &uuu),
    };
    let id = Matrix::identity(d);
    Matrix::chain(&[&evaluation(u).kron(&id), &id.kron(&ct), &w.kron(&id)])
}

/// Outcome of the dual-related predicates for one object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPredicates {
    /// `θ_U⁻² = ω_U`.
    pub reflexive: bool,
    /// `θ_{U*} = ^{U*}(θ_U)*`.
    pub good: bool,
    /// The tortility identity.
    pub tortile: bool,
    /// Both triangle identities for the twisted duality `b′`, `d′`.
    pub twisted_triangles: bool,
}

impl DualPredicates {
    pub fn all(&self) -> bool {
        self.reflexive && self.good && self.tortile && self.twisted_triangles
    }
}

/// `b′_U: k → U* ⊗ U` and `d′_U: U ⊗ U* → k` built from `c` and `θ`.
pub fn twisted_duality(h: &TCoalg, u: &HModule) -> (Matrix, Matrix) {
    let ud = dual_module(h, u);
    let tu = twist_map(h, u);
    let id = Matrix::identity(u.dim);
    let b2 = Matrix::chain(&[&id.kron(&tu), &braiding_map(h, u, &ud), &coevaluation(u)]).unwrap();
    let uu = crossing(h, u.grade, u);
    let d2 = Matrix::chain(&[&evaluation(u), &braiding_map(h, &uu, &ud), &tu.kron(&id)]).unwrap();
    (b2, d2)
}

pub fn good_dual_predicates(h: &TCoalg, u: &HModule) -> Result<DualPredicates> {
    let tu = twist_map(h, u);
    let t2 = tu.mul(&tu)?;
    let om = omega(h, u, OmegaVariant::InverseBraiding)?;
    let reflexive = om.mul(&t2)?.is_identity();
    let good = twist_map(h, &dual_module(h, u)) == tu.transpose();
    let tortile = tortility_lhs(h, u) == tu.kron(&Matrix::identity(u.dim)).mul(&coevaluation(u))?;
    let (b2, d2) = twisted_duality(h, u);
    let id = Matrix::identity(u.dim);
    let tri1 = d2.kron(&id).mul(&id.kron(&b2))?.is_identity();
    let tri2 = id.kron(&d2).mul(&b2.kron(&id))?.is_identity();
    Ok(DualPredicates { reflexive, good, tortile, twisted_triangles: tri1 && tri2 })
}

/// Swaps the factors of a map `X ⊗ Y → Z` into `Y ⊗ X → Z`.
pub fn swap_source(m: &Matrix, dx: usize, dy: usize) -> Matrix {
    m.mul(&permute_factors(&[dy, dx], &[1, 0])).unwrap()
}

/// All algebra maps `H_α → k` with values in `{-1, 0, 1}` on the basis.
/// Brute force, intended for components of dimension at most 8.
pub fn small_characters(h: &TCoalg, a: GroupElement) -> Vec<HModule> {
    let d = h.dim(a);
    let vals = [Scalar::zero(), Scalar::one(), Scalar::from(-1)];
    let mut out = Vec::new();
    let total = 3usize.pow(d as u32);
    for code in 0..total {
        let mut c = code;
        let chi: Vec<Scalar> = (0..d)
            .map(|_| {
                let v = vals[c % 3].clone();
                c /= 3;
                v
            })
            .collect();
        let m = character_module(a, &chi);
        if validate_module(h, &m).is_clean() {
            out.push(m);
        }
    }
    out
}

/// Cyclic submodules of the regular module generated by basis vectors and
/// by sums of two basis vectors, one per distinct action.
pub fn regular_submodules(h: &TCoalg, a: GroupElement) -> Vec<HModule> {
    let reg = regular_module(h, a);
    let d = h.dim(a);
    let mut gens: Vec<Vector> = (0..d).map(|i| crate::linalg::unit_vec(d, i)).collect();
    for i in 0..d {
        for j in i + 1..d {
            gens.push(crate::linalg::vec_add(&gens[i], &gens[j]));
        }
    }
    let mut out: Vec<HModule> = Vec::new();
    for g in gens {
        let (m, _) = cyclic_submodule(&reg, &g);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// `U` viewed as an object of the mirror: same action, grade `α⁻¹`.
pub fn mirror_module(h: &TCoalg, u: &HModule) -> HModule {
    HModule::new(h.group.inv(u.grade), u.dim, u.action.clone())
}
