//! The intersection pairing `ρ_G` and the framed quasi-derivation `q^f`.

use std::collections::BTreeMap;

use gt_algebra::{rat, TensorElement};
use gt_fox::{FoxPairing, QuasiDerivation};

use crate::error::Result;
use crate::surface::{Framing, SurfaceContext};

/// `ρ_G(x_i, y_i) = 1`, `ρ_G(y_i, x_i) = -1`, `ρ_G(z_j, z_j) = -z_j`, all
/// other generator pairs zero.
pub fn make_rho_g(sc: &SurfaceContext) -> FoxPairing {
    let ctx = sc.ctx();
    let mut t = BTreeMap::new();
    for i in 1..=sc.genus() {
        t.insert((sc.x(i), sc.y(i)), TensorElement::one(ctx));
        t.insert((sc.y(i), sc.x(i)), -&TensorElement::one(ctx));
    }
    for j in 1..=sc.boundaries() {
        let z = sc.z(j);
        t.insert((z, z), -&TensorElement::generator(ctx, z));
    }
    FoxPairing::from_table(ctx, t).expect("table built in the surface context")
}

/// `q^f ∈ Qder(-ρ_G)`, zero on handle letters and the scalar
/// `rot(γ_j) + 1` on `z_j`.
pub fn make_q_framing(sc: &SurfaceContext, framing: &Framing) -> Result<QuasiDerivation> {
    let r = framing.r_values(sc.boundaries())?;
    let ctx = sc.ctx();
    Ok(QuasiDerivation::from_fn(make_rho_g(sc).neg(), |l| match sc.boundary_index(l) {
        Some(j) => TensorElement::scalar(ctx, rat(r[j - 1])),
        None => TensorElement::zero(ctx),
    }))
}
