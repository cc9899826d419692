use crate::error::Result;
use crate::linalg::Matrix;
use crate::quasi::mirror_rmatrix;
use crate::coalgebra::TCoalg;

/// The mirror: `H̄_α = H_{α⁻¹}`,
/// `Δ̄_{α,β}(h) = φ_β(h'_{(β⁻¹α⁻¹β)}) ⊗ h''_{(β⁻¹)}`, `s̄_α = φ_α ∘ s_{α⁻¹}`,
/// same counit and conjugation. An attached R becomes the mirror R-matrix and
/// a twist `θ` becomes `θ̄_α = θ_{α⁻¹}⁻¹`.
pub fn mirror(h: &TCoalg) -> Result<TCoalg> {
    let g = &h.group;
    let n = g.order();
    let inv = |a| g.inv(a);
    let components = g.elements().map(|a| h.comp(inv(a)).clone()).collect();
    let mut comul = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            let bi = inv(b);
            let x = g.mul3(bi, inv(a), b);
            let m = h.phi(b, x).kron(&Matrix::identity(h.dim(bi))).mul(h.delta(x, bi))?;
            comul.push(m);
        }
    }
    let antipode = g
        .elements()
        .map(|a| h.phi(a, a).mul(h.s(inv(a))))
        .collect::<Result<Vec<_>>>()?;
    let mut conj = Vec::with_capacity(n * n);
    for b in g.elements() {
        for a in g.elements() {
            conj.push(h.phi(b, inv(a)).clone());
        }
    }
    let mut out = TCoalg::new(g.clone(), components, comul, h.counit.clone(), antipode, conj)?;
    out.field = h.field;
    if h.rmatrix.is_some() {
        out = out.with_rmatrix(mirror_rmatrix(h)?)?;
    }
    if let Some(t) = &h.twist {
        let theta = g
            .elements()
            .map(|a| h.comp(inv(a)).inverse(&t[inv(a)]))
            .collect::<Result<Vec<_>>>()?;
        out = out.with_twist(theta);
    }
    out.basis_names = h
        .basis_names
        .as_ref()
        .map(|names| g.elements().map(|a| names[inv(a)].clone()).collect());
    Ok(out)
}
