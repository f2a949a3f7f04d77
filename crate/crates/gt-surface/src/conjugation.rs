//! How conjugation by a group-like element moves a Fox pairing.
//!
//! For `h(a) = x^{-1} a x` and any Fox pairing `ρ`,
//! `ρ(h a, h b) = h(ρ(a, b) + ρ_h(a, b))` with
//! `ρ_h(a, b) = D(a) ρ(x, x^{-1}) D(b) + D(a) ρ(x, b) + ρ(a, x^{-1}) D(b)`,
//! an inner pairing plus `τ` of the derivatives `ρ(-, x^{-1})` and
//! `ρ(x, -)`.

use gt_algebra::{Rational, TensorElement, TensorSquareElement, Word};
use gt_fox::{make_exact_pairing, make_inner_pairing, FoxDerivative, FoxPairing};
use num_traits::One;

use crate::error::{Result, SurfaceError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationDefect {
    pub rho_h: FoxPairing,
    /// `a ↦ ρ(a, x^{-1})`
    pub left: FoxDerivative,
    /// `b ↦ ρ(x, b)`
    pub right: FoxDerivative,
    /// `ρ(x, x^{-1})`
    pub inner: TensorElement,
    pub x_inverse: TensorElement,
    pub commutes: bool,
    pub degree: u32,
    pub witness: Option<String>,
}

/// Checks `Δ(x) = x ⊗ x` and `ε(x) = 1` in the truncation of `x`.
pub fn check_group_like(x: &TensorElement) -> Result<()> {
    if !x.counit().is_one() {
        return Err(SurfaceError::NotGroupLike(format!("counit is {}", x.counit())));
    }
    if x.coproduct() != TensorSquareElement::tensor(x, x)? {
        return Err(SurfaceError::NotGroupLike("Δ(x) differs from x ⊗ x".into()));
    }
    Ok(())
}

fn low_part(a: &TensorElement, d: u32) -> TensorElement {
    TensorElement::from_terms(a.ctx(), a.iter().filter(|(w, _)| w.degree() <= d).map(|(w, c)| (w.clone(), c.clone())))
}

/// Builds `ρ_h` and compares `ρ(h a, h b)` with `h(ρ(a, b) + ρ_h(a, b))` on
/// all word pairs with `deg a + deg b ≤ d_max`, in components of degree at
/// most `d_max`. The work happens at truncation `d_max` plus the degree drop
/// of `ρ` (or the truncation of `ρ`, if larger); `x` is read as the
/// polynomial it stores.
pub fn conjugation_defect(x: &TensorElement, rho: &FoxPairing, d_max: u32) -> Result<ConjugationDefect> {
    if !rho.ctx().same_alphabet(x.ctx()) {
        return Err(gt_algebra::AlgebraError::ContextMismatch("x and ρ use different alphabets".into()).into());
    }
    check_group_like(x)?;
    let n = rho.ctx().max_degree().max(d_max + rho.degree_drop());
    let rho = rho.retruncate(n);
    let ctx = rho.ctx().clone();
    let x = x.retruncate(n);
    let x_inverse = x.inverse()?;
    let inner = rho.eval(&x, &x_inverse)?;
    let left = rho.left_slot(&x_inverse)?;
    let right = rho.right_slot(&x)?;
    let rho_h = make_exact_pairing(&left, &right)?.try_add(&make_inner_pairing(&inner))?;

    let alphabet = ctx.alphabet();
    let h = |a: &TensorElement| &(&x_inverse * a) * &x;
    let words: Vec<Word> = alphabet.words_up_to(d_max).into_iter().filter(|w| !w.is_empty()).collect();
    let lifted: Vec<(TensorElement, TensorElement)> = words
        .iter()
        .map(|w| {
            let a = TensorElement::from_word(&ctx, w.clone(), Rational::one());
            let ha = h(&a);
            (a, ha)
        })
        .collect();
    let mut witness = None;
    'outer: for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if u.degree() + v.degree() > d_max {
                continue;
            }
            let (a, ha) = &lifted[i];
            let (b, hb) = &lifted[j];
            let lhs = rho.eval(ha, hb)?;
            let rhs = h(&(&rho.eval(a, b)? + &rho_h.eval(a, b)?));
            let diff = low_part(&(&lhs - &rhs), d_max);
            if !diff.is_zero() {
                witness = Some(format!("({}, {}): {}", u.display(alphabet), v.display(alphabet), diff.display()));
                break 'outer;
            }
        }
    }
    Ok(ConjugationDefect {
        rho_h,
        left,
        right,
        inner,
        x_inverse,
        commutes: witness.is_none(),
        degree: d_max,
        witness,
    })
}
