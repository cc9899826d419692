//! Built-in fixtures, addressable from files as `demo:NAME`.

use crate::algebra::Component;
use crate::constructions::{double, ribbon_extension};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};
use crate::linalg::{unit_vec, zero_vec, Matrix, Vector};
use crate::quasi::RMatrix;
use crate::scalar::Scalar;
use crate::coalgebra::TCoalg;

pub const DEMO_NAMES: &[&str] = &[
    "trivial",
    "group_algebra2",
    "group_algebra3",
    "sweedler",
    "constant",
    "double_kz2",
    "rt_double_kz2",
];

/// Resolves a demo name such as `group_algebra3` or `trivial`.
pub fn demo(name: &str) -> Result<TCoalg> {
    match name {
        "trivial" => Ok(trivial(&FiniteGroup::cyclic(2))),
        "sweedler" => Ok(sweedler()),
        "constant" => Ok(constant_kz3_z2()),
        "double_kz2" => double(&group_algebra(2)),
        "rt_double_kz2" => ribbon_extension(&double(&group_algebra(2))?),
        _ => {
            if let Some(n) = name.strip_prefix("group_algebra").and_then(|n| n.parse::<usize>().ok()) {
                if n >= 1 {
                    return Ok(group_algebra(n));
                }
            }
            if let Some(n) = name.strip_prefix("trivial").and_then(|n| n.parse::<usize>().ok()) {
                if n >= 1 {
                    return Ok(trivial(&FiniteGroup::cyclic(n)));
                }
            }
            Err(Error::UnknownDemo(name.to_string()))
        }
    }
}

/// Every `H_α = k`, all structure maps the identity, `R = 1 ⊗ 1`, `θ = 1`.
pub fn trivial(group: &FiniteGroup) -> TCoalg {
    let n = group.order();
    let one = || Matrix::identity(1);
    let h = TCoalg::new(
        group.clone(),
        vec![Component::scalars(); n],
        vec![one(); n * n],
        vec![Scalar::one()],
        vec![one(); n],
        vec![one(); n * n],
    )
    .expect("trivial T-coalgebra");
    let r = RMatrix::with_inverse(vec![one(); n * n], vec![one(); n * n]);
    h.with_rmatrix(r).unwrap().with_twist(vec![vec![Scalar::one()]; n])
}

/// The group algebra `k[G]` of a finite group, placed at every grade of `π`,
/// with `π` acting on `G` by automorphisms `act(β, g)`.
pub fn constant_group_algebra(
    g: &FiniteGroup,
    pi: &FiniteGroup,
    act: impl Fn(GroupElement, GroupElement) -> GroupElement,
) -> TCoalg {
    let d = g.order();
    let comp = Component::from_rule(d, unit_vec(d, 0), |i, j| unit_vec(d, g.mul(i, j))).unwrap();
    let n = pi.order();
    let mut delta = Matrix::zeros(d * d, d);
    for x in 0..d {
        delta.set(x * d + x, x, Scalar::one());
    }
    let anti = Matrix::from_fn(d, d, |r, c| if r == g.inv(c) { Scalar::one() } else { Scalar::zero() });
    let mut conj = Vec::with_capacity(n * n);
    for b in pi.elements() {
        let m = Matrix::from_fn(d, d, |r, c| if r == act(b, c) { Scalar::one() } else { Scalar::zero() });
        for _ in pi.elements() {
            conj.push(m.clone());
        }
    }
    TCoalg::new(
        pi.clone(),
        vec![comp; n],
        vec![delta; n * n],
        vec![Scalar::one(); d],
        vec![anti; n],
        conj,
    )
    .expect("constant T-coalgebra")
}

/// `k[Z/n]` as a T-coalgebra over the trivial group, with `R = 1 ⊗ 1`.
pub fn group_algebra(n: usize) -> TCoalg {
    let h = constant_group_algebra(&FiniteGroup::cyclic(n), &FiniteGroup::trivial(), |_, g| g);
    let one = Matrix::from_fn(n, n, |r, c| if r == 0 && c == 0 { Scalar::one() } else { Scalar::zero() });
    let r = RMatrix::with_inverse(vec![one.clone()], vec![one]);
    let mut h = h.with_rmatrix(r).unwrap().with_twist(vec![unit_vec(n, 0)]);
    h.basis_names = Some(vec![(0..n).map(|i| format!("g{i}")).collect()]);
    h
}

/// `k[Z/3]` at both grades of `Z/2`, the nontrivial element acting by inversion.
pub fn constant_kz3_z2() -> TCoalg {
    let z3 = FiniteGroup::cyclic(3);
    let act = |b: GroupElement, x: GroupElement| if b == 0 { x } else { z3.inv(x) };
    constant_group_algebra(&z3, &FiniteGroup::cyclic(2), act)
}

/// Sweedler's four-dimensional Hopf algebra, basis `1, g, x, gx`, with
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δx = x ⊗ 1 + g ⊗ x`, and the R-matrix
/// `½(1⊗1 + 1⊗g + g⊗1 - g⊗g)`.
pub fn sweedler() -> TCoalg {
    // (sign, index) of the product of basis monomials g^a x^b
    let prod = |i: usize, j: usize| -> Vector {
        let (ga, xa) = (i & 1, i >> 1);
        let (gb, xb) = (j & 1, j >> 1);
        let mut v = zero_vec(4);
        if xa == 1 && xb == 1 {
            return v;
        }
        // g^ga x^xa g^gb x^xb = (-1)^{xa·gb} g^{ga+gb} x^{xa+xb}
        let sign = if xa == 1 && gb == 1 { -1 } else { 1 };
        let g = (ga + gb) % 2;
        let x = xa + xb;
        v[g | (x << 1)] = Scalar::from(sign);
        v
    };
    let comp = Component::from_rule(4, unit_vec(4, 0), prod).unwrap();
    let mut delta = Matrix::zeros(16, 4);
    let mut put = |col: usize, l: usize, r: usize, s: i64| delta.set(l * 4 + r, col, Scalar::from(s));
    put(0, 0, 0, 1);
    put(1, 1, 1, 1);
    // Δx = x ⊗ 1 + g ⊗ x
    put(2, 2, 0, 1);
    put(2, 1, 2, 1);
    // Δ(gx) = gx ⊗ g + 1 ⊗ gx
    put(3, 3, 1, 1);
    put(3, 0, 3, 1);
    let counit = vec![Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()];
    // s(1)=1, s(g)=g, s(x)=-gx, s(gx)=x
    let anti = Matrix::from_i64(4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]);
    let h = TCoalg::new(
        FiniteGroup::trivial(),
        vec![comp],
        vec![delta],
        counit,
        vec![anti],
        vec![Matrix::identity(4)],
    )
    .expect("Sweedler algebra");
    let half = Scalar::ratio(1, 2);
    let mut r = Matrix::zeros(4, 4);
    r.set(0, 0, half.clone());
    r.set(0, 1, half.clone());
    r.set(1, 0, half.clone());
    r.set(1, 1, -&half);
    let r = RMatrix::new(vec![r], &h);
    let mut h = h.with_rmatrix(r).unwrap();
    h.basis_names = Some(vec![vec!["1".into(), "g".into(), "x".into(), "gx".into()]]);
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_relations() {
        let h = sweedler();
        let (g, x) = (h.basis(0, 1), h.basis(0, 2));
        assert_eq!(h.mul(0, &x, &x), zero_vec(4));
        assert_eq!(h.mul(0, &g, &g), h.basis(0, 0));
        assert_eq!(h.mul(0, &x, &g), crate::linalg::vec_scale(&h.basis(0, 3), &Scalar::from(-1)));
    }

    #[test]
    fn unknown_demo() {
        assert!(matches!(demo("nope"), Err(Error::UnknownDemo(_))));
        assert_eq!(demo("group_algebra5").unwrap().dim(0), 5);
    }
}
