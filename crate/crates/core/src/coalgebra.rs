//! Crossed Hopf π-coalgebras stored as exact structure constants.
//!
//! For a finite group π, a T-coalgebra is a family of algebras `H_α`
//! (`α ∈ π`) with comultiplications `Δ_{α,β}: H_{αβ} → H_α ⊗ H_β`, a counit
//! on `H_1`, antipodes `s_α: H_α → H_{α⁻¹}` and a conjugation action
//! `φ_β: H_α → H_{βαβ⁻¹}`.

use crate::algebra::{on_factor, tensor_mul, tensor_unit, Component};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};
use crate::linalg::{unit_vec, vec_kron, Matrix, Vector};
use crate::quasi::RMatrix;
use crate::report::Report;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug)]
pub struct TCoalg {
    pub field: Field,
    pub group: FiniteGroup,
    pub components: Vec<Component>,
    /// `comul[α·n + β] = Δ_{α,β}`, a `(d_α d_β) × d_{αβ}` matrix.
    pub comul: Vec<Matrix>,
    /// Counit on `H_1`, as a row of length `d_1`.
    pub counit: Vector,
    /// `antipode[α] = s_α: H_α → H_{α⁻¹}`.
    pub antipode: Vec<Matrix>,
    /// `conj[β·n + α] = φ_β: H_α → H_{βαβ⁻¹}`.
    pub conj: Vec<Matrix>,
    pub rmatrix: Option<RMatrix>,
    /// Ribbon elements `θ_α ∈ H_α`.
    pub twist: Option<Vec<Vector>>,
    pub basis_names: Option<Vec<Vec<String>>>,
}

impl TCoalg {
    /// Assembles a T-coalgebra, checking that every map has the right shape.
    pub fn new(
        group: FiniteGroup,
        components: Vec<Component>,
        comul: Vec<Matrix>,
        counit: Vector,
        antipode: Vec<Matrix>,
        conj: Vec<Matrix>,
    ) -> Result<TCoalg> {
        let h = TCoalg {
            field: Field::Rational,
            group,
            components,
            comul,
            counit,
            antipode,
            conj,
            rmatrix: None,
            twist: None,
            basis_names: None,
        };
        h.check_shapes()?;
        Ok(h)
    }

    pub fn check_shapes(&self) -> Result<()> {
        let g = &self.group;
        let n = g.order();
        let want = |what: &str, idx: String, m: &Matrix, r: usize, c: usize| -> Result<()> {
            if m.rows() != r || m.cols() != c {
                return Err(Error::shape(format!(
                    "{what} at {idx} is {}x{}, expected {r}x{c}",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok(())
        };
        if self.components.len() != n {
            return Err(Error::shape(format!("{} components for a group of order {n}", self.components.len())));
        }
        if self.comul.len() != n * n || self.antipode.len() != n || self.conj.len() != n * n {
            return Err(Error::shape("structure map families have the wrong length"));
        }
        for a in g.elements() {
            for b in g.elements() {
                want(
                    "comul",
                    format!("({a},{b})"),
                    self.delta(a, b),
                    self.dim(a) * self.dim(b),
                    self.dim(g.mul(a, b)),
                )?;
                want("conj", format!("({b},{a})"), self.phi(b, a), self.dim(g.conj(a, b)), self.dim(a))?;
            }
            want("antipode", format!("({a})"), self.s(a), self.dim(g.inv(a)), self.dim(a))?;
        }
        if self.counit.len() != self.dim(0) {
            return Err(Error::shape("counit length differs from dim H_1"));
        }
        if let Some(r) = &self.rmatrix {
            r.check_shapes(self)?;
        }
        if let Some(t) = &self.twist {
            if t.len() != n || g.elements().any(|a| t[a].len() != self.dim(a)) {
                return Err(Error::shape("twist family has the wrong shape"));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn dim(&self, a: GroupElement) -> usize {
        self.components[a].dim()
    }

    pub fn comp(&self, a: GroupElement) -> &Component {
        &self.components[a]
    }

    pub fn delta(&self, a: GroupElement, b: GroupElement) -> &Matrix {
        &self.comul[a * self.order() + b]
    }

    pub fn s(&self, a: GroupElement) -> &Matrix {
        &self.antipode[a]
    }

    pub fn phi(&self, b: GroupElement, a: GroupElement) -> &Matrix {
        &self.conj[b * self.order() + a]
    }

    pub fn unit(&self, a: GroupElement) -> &Vector {
        self.comp(a).unit()
    }

    pub fn basis(&self, a: GroupElement, i: usize) -> Vector {
        unit_vec(self.dim(a), i)
    }

    pub fn mul(&self, a: GroupElement, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.comp(a).mul(x, y)
    }

    /// Product of several elements of `H_a`, left to right.
    pub fn mul_all(&self, a: GroupElement, xs: &[&Vector]) -> Vector {
        let mut acc = self.unit(a).clone();
        for x in xs {
            acc = self.mul(a, &acc, x);
        }
        acc
    }

    /// Product in `H_{g0} ⊗ … ⊗ H_{gk}`.
    pub fn tmul(&self, grades: &[GroupElement], x: &[Scalar], y: &[Scalar]) -> Vector {
        let comps: Vec<&Component> = grades.iter().map(|&g| self.comp(g)).collect();
        tensor_mul(&comps, x, y)
    }

    pub fn tunit(&self, grades: &[GroupElement]) -> Vector {
        let comps: Vec<&Component> = grades.iter().map(|&g| self.comp(g)).collect();
        tensor_unit(&comps)
    }

    pub fn dims(&self, grades: &[GroupElement]) -> Vec<usize> {
        grades.iter().map(|&g| self.dim(g)).collect()
    }

    /// Product of grades, `α1 α2 … αn`.
    pub fn grade_product(&self, grades: &[GroupElement]) -> GroupElement {
        grades.iter().fold(0, |acc, &g| self.group.mul(acc, g))
    }

    /// `Δ_{α1,…,αn}: H_{α1⋯αn} → H_{α1} ⊗ … ⊗ H_{αn}`, nested as
    /// `Δ_{α1, α2⋯αn}` followed by `id ⊗ Δ_{α2, α3⋯αn}` and so on.
    pub fn iterated_comul(&self, grades: &[GroupElement]) -> Matrix {
        let total = self.grade_product(grades);
        if grades.len() == 1 {
            return Matrix::identity(self.dim(total));
        }
        let mut acc = Matrix::identity(self.dim(total));
        let mut done: Vec<usize> = Vec::new();
        for k in 0..grades.len() - 1 {
            let rest = self.grade_product(&grades[k + 1..]);
            let step = self.delta(grades[k], rest);
            let mut dims = done.clone();
            dims.push(self.dim(self.grade_product(&grades[k..])));
            acc = on_factor(&dims, k, step).mul(&acc).expect("iterated comul shapes");
            done.push(self.dim(grades[k]));
        }
        acc
    }

    /// Inverse of `s_α`, a map `H_{α⁻¹} → H_α`.
    pub fn antipode_inverse(&self, a: GroupElement) -> Result<Matrix> {
        self.s(a).inverse()
    }

    /// Product of two graded elements; grades must agree.
    pub fn elem_mul(&self, x: &GradedElement, y: &GradedElement) -> Result<GradedElement> {
        if x.grade != y.grade {
            return Err(Error::GradeMismatch(format!("{} vs {}", x.grade, y.grade)));
        }
        Ok(GradedElement { grade: x.grade, coords: self.mul(x.grade, &x.coords, &y.coords) })
    }

    pub fn with_rmatrix(mut self, r: RMatrix) -> Result<TCoalg> {
        r.check_shapes(&self)?;
        self.rmatrix = Some(r);
        Ok(self)
    }

    pub fn with_twist(mut self, theta: Vec<Vector>) -> TCoalg {
        self.twist = Some(theta);
        self
    }

    pub fn r(&self) -> &RMatrix {
        self.rmatrix.as_ref().expect("structure has no R-matrix")
    }

    pub fn theta(&self, a: GroupElement) -> &Vector {
        &self.twist.as_ref().expect("structure has no twist")[a]
    }

    /// Moves all structure constants into another field.
    pub fn to_field(&self, field: Field) -> Result<TCoalg> {
        let coerce = |s: &Scalar| field.coerce(s);
        let f = |s: &Scalar| coerce(s).expect("coercible");
        for c in &self.components {
            for s in c.structure().elems() {
                coerce(s)?;
            }
        }
        let mats = |ms: &[Matrix]| -> Result<Vec<Matrix>> { ms.iter().map(|m| m.try_map(coerce)).collect() };
        let mut out = TCoalg {
            field,
            group: self.group.clone(),
            components: self.components.iter().map(|c| c.map_scalars(&f)).collect(),
            comul: mats(&self.comul)?,
            counit: self.counit.iter().map(coerce).collect::<Result<_>>()?,
            antipode: mats(&self.antipode)?,
            conj: mats(&self.conj)?,
            rmatrix: None,
            twist: match &self.twist {
                Some(t) => Some(
                    t.iter()
                        .map(|v| v.iter().map(coerce).collect::<Result<_>>())
                        .collect::<Result<_>>()?,
                ),
                None => None,
            },
            basis_names: self.basis_names.clone(),
        };
        if let Some(r) = &self.rmatrix {
            out.rmatrix = Some(RMatrix::new(mats(r.all())?, &out));
        }
        Ok(out)
    }
}

/// An element of a single component `H_grade`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    pub grade: GroupElement,
    pub coords: Vector,
}

/// Compact rendering of the nonzero coordinates of a vector.
pub fn show(v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| format!("{i}:{s}"))
        .collect();
    format!("{{{}}}", terms.join(" "))
}

fn first_bad_column(a: &Matrix, b: &Matrix) -> Option<usize> {
    (0..a.cols()).find(|&c| a.column(c) != b.column(c))
}

fn compare_maps(rep: &mut Report, check: &str, idx: &[usize], lhs: &Matrix, rhs: &Matrix) {
    rep.record(check, idx, lhs == rhs, || match first_bad_column(lhs, rhs) {
        Some(c) => format!("basis {c}: lhs {} rhs {}", show(&lhs.column(c)), show(&rhs.column(c))),
        None => "shape mismatch".to_string(),
    });
}

/// Exhaustive check of every T-coalgebra axiom; never stops at the first failure.
pub fn validate_tcoalg(h: &TCoalg) -> Report {
    let mut rep = Report::new();
    let g = &h.group;
    let n = g.order();

    for a in g.elements() {
        check_algebra(h, a, &mut rep);
    }

    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            let d = h.delta(a, b);
            let mut ok = true;
            let cols: Vec<Vector> = (0..h.dim(ab)).map(|i| d.column(i)).collect();
            for i in 0..h.dim(ab) {
                for j in 0..h.dim(ab) {
                    let lhs = d.apply(&h.mul(ab, &h.basis(ab, i), &h.basis(ab, j))).unwrap();
                    let rhs = h.tmul(&[a, b], &cols[i], &cols[j]);
                    if lhs != rhs {
                        ok = false;
                        rep.fail("comul-mult", &[a, b, i, j], format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
                    }
                }
            }
            if ok {
                rep.pass("comul-mult", &[a, b]);
            }
            let du = d.apply(h.unit(ab)).unwrap();
            let uu = h.tunit(&[a, b]);
            rep.record("comul-unit", &[a, b], du == uu, || format!("Δ(1) = {}", show(&du)));
        }
    }

    for a in g.elements() {
        for b in g.elements() {
            for c in g.elements() {
                let lhs = Matrix::identity(h.dim(a))
                    .kron(h.delta(b, c))
                    .mul(h.delta(a, g.mul(b, c)))
                    .unwrap();
                let rhs = h.delta(a, b).kron(&Matrix::identity(h.dim(c))).mul(h.delta(g.mul(a, b), c)).unwrap();
                compare_maps(&mut rep, "coassoc", &[a, b, c], &lhs, &rhs);
            }
        }
    }

    let eps = Matrix::row_vector(h.counit.clone());
    for a in g.elements() {
        let id = Matrix::identity(h.dim(a));
        let left = eps.kron(&id).mul(h.delta(0, a)).unwrap();
        compare_maps(&mut rep, "counit-left", &[a], &left, &id);
        let right = id.kron(&eps).mul(h.delta(a, 0)).unwrap();
        compare_maps(&mut rep, "counit-right", &[a], &right, &id);
    }
    {
        let c1 = h.comp(0);
        let mut ok = eps.apply(c1.unit()).unwrap()[0].is_one();
        for i in 0..c1.dim() {
            for j in 0..c1.dim() {
                let lhs = eps.apply(&c1.mul(&c1.basis(i), &c1.basis(j))).unwrap()[0].clone();
                let rhs = &h.counit[i] * &h.counit[j];
                if lhs != rhs {
                    ok = false;
                    rep.fail("counit-mult", &[i, j], format!("ε(e_i e_j) = {lhs}, ε(e_i)ε(e_j) = {rhs}"));
                }
            }
        }
        if ok {
            rep.pass("counit-mult", &[]);
        }
    }

    let unit_eps = |a: GroupElement| Matrix::column_vector(h.unit(a).clone()).mul(&eps).unwrap();
    for a in g.elements() {
        let ai = g.inv(a);
        let mu = h.comp(a).mul_matrix();
        let left = Matrix::chain(&[
            &mu,
            &Matrix::identity(h.dim(a)).kron(h.s(ai)),
            h.delta(a, ai),
        ])
        .unwrap();
        compare_maps(&mut rep, "antipode-left", &[a], &left, &unit_eps(a));
        let right = Matrix::chain(&[
            &mu,
            &h.s(ai).kron(&Matrix::identity(h.dim(a))),
            h.delta(ai, a),
        ])
        .unwrap();
        compare_maps(&mut rep, "antipode-right", &[a], &right, &unit_eps(a));
    }

    for b in g.elements() {
        for c in g.elements() {
            for a in g.elements() {
                let lhs = h.phi(b, g.conj(a, c)).mul(h.phi(c, a)).unwrap();
                compare_maps(&mut rep, "conj-compose", &[b, c, a], &lhs, h.phi(g.mul(b, c), a));
            }
        }
    }
    for a in g.elements() {
        compare_maps(&mut rep, "conj-identity", &[a], h.phi(0, a), &Matrix::identity(h.dim(a)));
    }
    for c in g.elements() {
        for a in g.elements() {
            for b in g.elements() {
                let lhs = h.phi(c, a).kron(h.phi(c, b)).mul(h.delta(a, b)).unwrap();
                let rhs = h.delta(g.conj(a, c), g.conj(b, c)).mul(h.phi(c, g.mul(a, b))).unwrap();
                compare_maps(&mut rep, "conj-comul", &[c, a, b], &lhs, &rhs);
            }
        }
        let lhs = eps.mul(h.phi(c, 0)).unwrap();
        compare_maps(&mut rep, "conj-counit", &[c], &lhs, &eps);
    }
    for b in g.elements() {
        for a in g.elements() {
            let p = h.phi(b, a);
            let t = g.conj(a, b);
            let mut ok = p.apply(h.unit(a)).unwrap() == *h.unit(t);
            for i in 0..h.dim(a) {
                for j in 0..h.dim(a) {
                    let lhs = p.apply(&h.mul(a, &h.basis(a, i), &h.basis(a, j))).unwrap();
                    let rhs = h.mul(t, &p.column(i), &p.column(j));
                    if lhs != rhs {
                        ok = false;
                        rep.fail("conj-mult", &[b, a, i, j], format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
                    }
                }
            }
            if ok {
                rep.pass("conj-mult", &[b, a]);
            }
            let inv = p.is_square() && p.rank() == p.rows();
            rep.record("conj-invertible", &[b, a], inv, || "φ is not bijective".to_string());
        }
    }
    for a in g.elements() {
        let s = h.s(a);
        let inv = s.is_square() && s.rank() == s.rows();
        rep.record("antipode-invertible", &[a], inv, || "s is not bijective".to_string());
    }
    let _ = n;
    rep.canonicalize();
    rep
}

fn check_algebra(h: &TCoalg, a: GroupElement, rep: &mut Report) {
    let c = h.comp(a);
    let d = c.dim();
    let mut ok = true;
    let prods: Vec<Vector> = (0..d * d).map(|ij| c.mul(&c.basis(ij / d), &c.basis(ij % d))).collect();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let lhs = c.mul(&prods[i * d + j], &c.basis(k));
                let rhs = c.mul(&c.basis(i), &prods[j * d + k]);
                if lhs != rhs {
                    ok = false;
                    rep.fail("assoc", &[a, i, j, k], format!("lhs {} rhs {}", show(&lhs), show(&rhs)));
                }
            }
        }
    }
    if ok {
        rep.pass("assoc", &[a]);
    }
    let mut ok = true;
    for i in 0..d {
        let e = c.basis(i);
        if c.mul(c.unit(), &e) != e || c.mul(&e, c.unit()) != e {
            ok = false;
            rep.fail("unit", &[a, i], "1·e_i or e_i·1 differs from e_i");
        }
    }
    if ok {
        rep.pass("unit", &[a]);
    }
}

/// The coopposite: `H^cop_α = H_{α⁻¹}`, `Δ^cop_{α,β} = σ ∘ Δ_{β⁻¹,α⁻¹}`,
/// `s^cop_α = (s_{α⁻¹})⁻¹`, same counit and conjugation.
pub fn coopposite(h: &TCoalg) -> Result<TCoalg> {
    let g = &h.group;
    let n = g.order();
    let inv = |a| g.inv(a);
    let components = g.elements().map(|a| h.comp(inv(a)).clone()).collect();
    let mut comul = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            let d = h.delta(inv(b), inv(a));
            comul.push(Matrix::flip(h.dim(inv(b)), h.dim(inv(a))).mul(d)?);
        }
    }
    let antipode = g.elements().map(|a| h.antipode_inverse(inv(a))).collect::<Result<Vec<_>>>()?;
    let mut conj = Vec::with_capacity(n * n);
    for b in g.elements() {
        for a in g.elements() {
            conj.push(h.phi(b, inv(a)).clone());
        }
    }
    let mut out = TCoalg::new(g.clone(), components, comul, h.counit.clone(), antipode, conj)?;
    out.field = h.field;
    Ok(out)
}

/// Bit-exact equality of all structure constants, including any attached
/// R-matrix and twist.
pub fn tcoalg_equal(a: &TCoalg, b: &TCoalg) -> bool {
    a.group == b.group
        && a.components == b.components
        && a.comul == b.comul
        && a.counit == b.counit
        && a.antipode == b.antipode
        && a.conj == b.conj
        && match (&a.rmatrix, &b.rmatrix) {
            (Some(x), Some(y)) => x.all() == y.all(),
            (None, None) => true,
            _ => false,
        }
        && a.twist == b.twist
}

/// `x ⊗ y` for elements of two components.
pub fn pure_tensor(x: &[Scalar], y: &[Scalar]) -> Vector {
    vec_kron(x, y)
}
