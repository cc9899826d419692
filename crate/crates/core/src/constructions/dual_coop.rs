use crate::algebra::Component;
use crate::error::Result;
use crate::group::GroupElement;
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::coalgebra::TCoalg;

/// Indexing of `⊕_γ H*_γ`: dual basis vectors `e^{γ.i}` ordered by group
/// index, then by `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    offsets: Vec<usize>,
    dims: Vec<usize>,
}

impl DualBasis {
    pub fn new(h: &TCoalg) -> DualBasis {
        let dims: Vec<usize> = h.group.elements().map(|a| h.dim(a)).collect();
        let mut offsets = Vec::with_capacity(dims.len());
        let mut acc = 0;
        for d in &dims {
            offsets.push(acc);
            acc += d;
        }
        DualBasis { offsets, dims }
    }

    pub fn total(&self) -> usize {
        self.offsets.last().unwrap() + self.dims.last().unwrap()
    }

    /// Position of `e^{γ.i}`.
    pub fn index(&self, g: GroupElement, i: usize) -> usize {
        self.offsets[g] + i
    }

    /// Inverse of [`DualBasis::index`].
    pub fn split(&self, idx: usize) -> (GroupElement, usize) {
        let g = self.offsets.iter().rposition(|&o| o <= idx).unwrap();
        (g, idx - self.offsets[g])
    }

    pub fn dim(&self, g: GroupElement) -> usize {
        self.dims[g]
    }
}

/// The algebra `⊕_γ H*_γ` with `⟨fg, x⟩ = ⟨f, x'_{(γ)}⟩⟨g, x''_{(δ)}⟩`.
pub(crate) fn dual_algebra(h: &TCoalg, db: &DualBasis) -> Component {
    let g = &h.group;
    let n = db.total();
    let mut t = Tensor3::zeros(n, n, n);
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            let d = h.delta(a, b);
            for i in 0..h.dim(a) {
                for j in 0..h.dim(b) {
                    for k in 0..h.dim(ab) {
                        let c = d.get(i * h.dim(b) + j, k);
                        if !c.is_zero() {
                            t.set(db.index(a, i), db.index(b, j), db.index(ab, k), c.clone());
                        }
                    }
                }
            }
        }
    }
    let mut unit = crate::linalg::zero_vec(n);
    for i in 0..h.dim(0) {
        unit[db.index(0, i)] = h.counit[i].clone();
    }
    Component::new(t, unit).expect("dual algebra")
}

/// `Δ_β` on `⊕ H*`: for `f ∈ H*_γ`, `⟨Δ_β(f), x ⊗ y⟩ = ⟨f, y φ_{β⁻¹}(x)⟩`
/// with `x ∈ H_{βγβ⁻¹}` and `y ∈ H_γ`.
pub(crate) fn dual_comul(h: &TCoalg, db: &DualBasis, b: GroupElement) -> Matrix {
    let g = &h.group;
    let n = db.total();
    let bi = g.inv(b);
    let mut m = Matrix::zeros(n * n, n);
    for c in g.elements() {
        let x = g.conj(c, b);
        let phi = h.phi(bi, x);
        let comp = h.comp(c);
        for i in 0..h.dim(x) {
            for mm in 0..h.dim(c) {
                let p = phi.get(mm, i);
                if p.is_zero() {
                    continue;
                }
                for j in 0..h.dim(c) {
                    // e_j · e_mm
                    for (k, s) in comp.basis_product(j, mm) {
                        let row = db.index(x, i) * n + db.index(c, j);
                        m.add_at(row, db.index(c, *k), &(p * s));
                    }
                }
            }
        }
    }
    m
}

/// `s_α(f) = f ∘ φ_{α⁻¹} ∘ s_{αγα⁻¹}⁻¹ ∈ H*_{αγ⁻¹α⁻¹}` for `f ∈ H*_γ`.
pub(crate) fn dual_antipode(h: &TCoalg, db: &DualBasis, a: GroupElement) -> Result<Matrix> {
    let g = &h.group;
    let n = db.total();
    let ai = g.inv(a);
    let mut m = Matrix::zeros(n, n);
    for c in g.elements() {
        let x = g.conj(c, a);
        let t = g.inv(x);
        let p = h.phi(ai, x).mul(&h.antipode_inverse(x)?)?;
        for k in 0..h.dim(c) {
            for i in 0..h.dim(t) {
                let v = p.get(k, i);
                if !v.is_zero() {
                    m.set(db.index(t, i), db.index(c, k), v.clone());
                }
            }
        }
    }
    Ok(m)
}

/// `φ_β = φ*_{β⁻¹}`: `f ∈ H*_γ ↦ f ∘ φ_{β⁻¹} ∈ H*_{βγβ⁻¹}`.
pub(crate) fn dual_conj(h: &TCoalg, db: &DualBasis, b: GroupElement) -> Matrix {
    let g = &h.group;
    let n = db.total();
    let bi = g.inv(b);
    let mut m = Matrix::zeros(n, n);
    for c in g.elements() {
        let x = g.conj(c, b);
        let p = h.phi(bi, x);
        for k in 0..h.dim(c) {
            for i in 0..h.dim(x) {
                let v = p.get(k, i);
                if !v.is_zero() {
                    m.set(db.index(x, i), db.index(c, k), v.clone());
                }
            }
        }
    }
    m
}

/// `⟨f, 1_γ⟩` for `f ∈ H*_γ`.
pub(crate) fn dual_counit(h: &TCoalg, db: &DualBasis) -> Vector {
    let mut v = crate::linalg::zero_vec(db.total());
    for c in h.group.elements() {
        for (k, s) in h.unit(c).iter().enumerate() {
            v[db.index(c, k)] = s.clone();
        }
    }
    v
}

/// The mirror of the dual coopposite, `H^{*cop}‾`. Every component is
/// `⊕_γ H*_γ`; the comultiplication `Δ_{α,β}` depends only on `β`.
pub fn dual_coop(h: &TCoalg) -> Result<TCoalg> {
    let g = &h.group;
    let n = g.order();
    let db = DualBasis::new(h);
    let alg = dual_algebra(h, &db);
    let comuls: Vec<Matrix> = g.elements().map(|b| dual_comul(h, &db, b)).collect();
    let mut comul = Vec::with_capacity(n * n);
    for _ in g.elements() {
        for b in g.elements() {
            comul.push(comuls[b].clone());
        }
    }
    let antipode = g.elements().map(|a| dual_antipode(h, &db, a)).collect::<Result<Vec<_>>>()?;
    let conjs: Vec<Matrix> = g.elements().map(|b| dual_conj(h, &db, b)).collect();
    let mut conj = Vec::with_capacity(n * n);
    for b in g.elements() {
        for _ in g.elements() {
            conj.push(conjs[b].clone());
        }
    }
    let mut out = TCoalg::new(g.clone(), vec![alg; n], comul, dual_counit(h, &db), antipode, conj)?;
    out.field = h.field;
    let names: Vec<String> = (0..db.total())
        .map(|idx| {
            let (c, i) = db.split(idx);
            format!("e^{c}.{i}")
        })
        .collect();
    out.basis_names = Some(vec![names; n]);
    Ok(out)
}
