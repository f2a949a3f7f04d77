//! The double bracket `κ_gr` of `ρ_G` on generators, and an independent
//! evaluation of `(|·| ⊗ id) d_{q^f}` straight from that table.

use std::collections::BTreeMap;

use gt_algebra::{rat, Letter, TensorElement, TensorSquareElement, Word};
use gt_brackets::double_bracket;
use num_traits::{One, Zero};

use crate::error::{Result, SurfaceError};
use crate::presets::make_rho_g;
use crate::surface::{Framing, SurfaceContext};

pub type KappaTable = BTreeMap<(Letter, Letter), TensorSquareElement>;

/// `{{a, b}}` of `ρ_G` for every generator pair, keeping nonzero values.
pub fn kappa_table(sc: &SurfaceContext) -> Result<KappaTable> {
    let ctx = sc.ctx();
    let rho = make_rho_g(sc);
    let mut out = BTreeMap::new();
    for a in ctx.alphabet().letters() {
        for b in ctx.alphabet().letters() {
            let v = double_bracket(&rho, &TensorElement::generator(ctx, a), &TensorElement::generator(ctx, b))?;
            if !v.is_zero() {
                out.insert((a, b), v);
            }
        }
    }
    Ok(out)
}

/// The expected table, written down directly:
/// `κ(x_i, y_i) = 1 ⊗ 1`, `κ(y_i, x_i) = -1 ⊗ 1`,
/// `κ(z_j, z_j) = z_j ⊗ 1 - 1 ⊗ z_j`.
pub fn kappa_reference(sc: &SurfaceContext) -> KappaTable {
    let ctx = sc.ctx();
    let alphabet = ctx.alphabet();
    let e = Word::empty;
    let mut out = BTreeMap::new();
    for i in 1..=sc.genus() {
        out.insert((sc.x(i), sc.y(i)), TensorSquareElement::from_terms(ctx, [((e(), e()), rat(1))]));
        out.insert((sc.y(i), sc.x(i)), TensorSquareElement::from_terms(ctx, [((e(), e()), rat(-1))]));
    }
    for j in 1..=sc.boundaries() {
        let z = Word::letter(sc.z(j), alphabet);
        let terms = [((z.clone(), e()), rat(1)), ((e(), z), rat(-1))];
        out.insert((sc.z(j), sc.z(j)), TensorSquareElement::from_terms(ctx, terms));
    }
    out
}

/// Replaces every left leg by its least rotation, giving an element of
/// `|A| ⊗ A` in a canonical form.
pub fn cyclic_left(t: &TensorSquareElement) -> TensorSquareElement {
    TensorSquareElement::from_terms(t.ctx(), t.iter().map(|((u, v), c)| ((u.min_rotation(), v.clone()), c.clone())))
}

/// For `a = a_1 ⋯ a_m` in the generators,
///
/// ```text
/// Σ_i r(a_i) |1| ⊗ a_1 ⋯ â_i ⋯ a_m + Σ_k (|·| ⊗ id)(κ(a_1 ⋯ a_{k-1}, a_k)(1 ⊗ a_{k+1} ⋯ a_m))
/// ```
///
/// where `κ` on a word in its first slot is expanded by
/// `κ(u, g) = Σ_i κ'(u_i, g) u_{>i} ⊗ u_{<i} κ''(u_i, g)`.
/// Only [`kappa_reference`] and the rotation numbers are consulted.
pub fn mu_r_oracle(sc: &SurfaceContext, framing: &Framing, a: &TensorElement) -> Result<TensorSquareElement> {
    let ctx = sc.ctx();
    ctx.check_same(a.ctx())?;
    let word = match a.iter().collect::<Vec<_>>().as_slice() {
        [(w, c)] if c.is_one() => (*w).clone(),
        _ => return Err(SurfaceError::NonGeneratorWord(a.display().to_string())),
    };
    let alphabet = ctx.alphabet();
    let r = framing.r_values(sc.boundaries())?;
    let kappa = kappa_reference(sc);
    let letters = word.letters();
    let m = letters.len();
    let sub = |lo: usize, hi: usize| Word::new(letters[lo..hi].to_vec(), alphabet);
    let mut out = TensorSquareElement::zero(ctx);

    for (i, &l) in letters.iter().enumerate() {
        let ri = sc.boundary_index(l).map_or(0, |j| r[j - 1]);
        if ri != 0 {
            out.add_term(Word::empty(), sub(0, i).concat(&sub(i + 1, m)), rat(ri));
        }
    }
    for k in 0..m {
        for i in 0..k {
            let Some(val) = kappa.get(&(letters[i], letters[k])) else { continue };
            for ((p, q), c) in val.iter() {
                if c.is_zero() {
                    continue;
                }
                let left = p.concat(&sub(i + 1, k)).min_rotation();
                let right = sub(0, i).concat(q).concat(&sub(k + 1, m));
                out.add_term(left, right, c.clone());
            }
        }
    }
    Ok(out)
}
