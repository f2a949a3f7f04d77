//! The exactness constructors `τ` and `μ`, inner pairings, and the linear
//! system singling out `D` among two-sided derivatives.

use std::collections::HashMap;

use gt_algebra::{Alphabet, Context, EchelonBasis, Letter, Rational, SparseVec, TensorElement, Word};
use num_traits::One;

use crate::derivative::{FoxDerivative, Side};
use crate::error::{FoxError, Result};
use crate::pairing::{FoxPairing, Provenance};
use crate::qder::QuasiDerivation;

fn check_sides(l: &FoxDerivative, r: &FoxDerivative) -> Result<()> {
    if l.side() != Side::Left {
        return Err(FoxError::WrongSide { expected: "left" });
    }
    if r.side() != Side::Right {
        return Err(FoxError::WrongSide { expected: "right" });
    }
    l.ctx().check_same(r.ctx())?;
    Ok(())
}

/// `τ(∂L, ∂R)(a, b) = ∂L(a) D(b) + D(a) ∂R(b)`; on generators the table
/// is `∂L(g) h + g ∂R(h)`.
pub fn make_exact_pairing(l: &FoxDerivative, r: &FoxDerivative) -> Result<FoxPairing> {
    check_sides(l, r)?;
    let ctx = l.ctx().clone();
    let p = FoxPairing::from_fn(&ctx, |a, b| {
        let ga = TensorElement::generator(&ctx, a);
        let gb = TensorElement::generator(&ctx, b);
        &(l.value(a) * &gb) + &(&ga * r.value(b))
    });
    Ok(p.with_provenance(Provenance::Exact { left: l.clone(), right: r.clone() }))
}

/// `μ(∂L, ∂R) = ∂L + ∂R`.
///
/// Its Leibniz defect is `q(a)b + a q(b) - q(ab) = ∂L(a) D(b) + D(a) ∂R(b)`,
/// so the attached pairing is `+τ(∂L, ∂R)` under the convention
/// `q(ab) = q(a)b + a q(b) - σ(a, b)`.
pub fn make_exact_qder(l: &FoxDerivative, r: &FoxDerivative) -> Result<QuasiDerivation> {
    let sigma = make_exact_pairing(l, r)?;
    let q = QuasiDerivation::from_fn(sigma, |g| l.value(g) + r.value(g));
    Ok(q.with_exact(l.clone(), r.clone()))
}

/// `(a, b) ↦ D(a) e D(b)`.
pub fn make_inner_pairing(e: &TensorElement) -> FoxPairing {
    let ctx = e.ctx().clone();
    let p = FoxPairing::from_fn(&ctx, |a, b| {
        &(&TensorElement::generator(&ctx, a) * e) * &TensorElement::generator(&ctx, b)
    });
    p.with_provenance(Provenance::Inner { e: e.clone() })
}

/// The decomposition `D(a) e D(b) = τ(½ D(·) e, ½ e D(·))`.
pub fn inner_as_exact(e: &TensorElement) -> Result<FoxPairing> {
    let ctx = e.ctx().clone();
    let half = Rational::new(1.into(), 2.into());
    let l = FoxDerivative::from_fn(&ctx, Side::Left, |g| (&TensorElement::generator(&ctx, g) * e).scale(&half));
    let r = FoxDerivative::from_fn(&ctx, Side::Right, |g| (e * &TensorElement::generator(&ctx, g)).scale(&half));
    make_exact_pairing(&l, &r)
}

/// Generator tables of all maps that obey both the left and the right Fox
/// rule on every word of weighted degree at most `n`.
///
/// Unknowns are the coefficients of each generator value on words of degree
/// at most `n`. Each word `w` of length at least two contributes the
/// polynomial identity `w_{<k} ∂(w_k) = ∂(w_1) w_{>1}`, evaluated without
/// truncation so that no constraint is lost to the cutoff. Returns one table
/// per basis vector of the solution space.
pub fn solve_two_sided_derivatives(alphabet: &std::sync::Arc<Alphabet>, n: u32) -> Vec<Vec<TensorElement>> {
    let values: Vec<Word> = alphabet.words_up_to(n);
    let nv = values.len();
    let unknown = |g: Letter, vi: usize| g as usize * nv + vi;
    let mut system = EchelonBasis::new();
    for w in alphabet.words_up_to(n).into_iter().filter(|w| w.len() >= 2) {
        let letters = w.letters();
        let k = letters.len() - 1;
        let prefix = Word::new(letters[..k].to_vec(), alphabet);
        let suffix = Word::new(letters[1..].to_vec(), alphabet);
        let mut rows: HashMap<Word, SparseVec> = HashMap::new();
        for (vi, v) in values.iter().enumerate() {
            let lhs = prefix.concat(v);
            *rows.entry(lhs).or_default().entry(unknown(letters[k], vi)).or_default() += Rational::one();
            let rhs = v.concat(&suffix);
            *rows.entry(rhs).or_default().entry(unknown(letters[0], vi)).or_default() -= Rational::one();
        }
        let mut keys: Vec<_> = rows.into_iter().collect();
        keys.sort_by(|a, b| a.0.cmp(&b.0));
        for (_, mut row) in keys {
            row.retain(|_, c| *c != Rational::default());
            if !row.is_empty() {
                system.insert(&row);
            }
        }
    }
    let ctx = Context::new(alphabet.clone(), n);
    system
        .nullspace(alphabet.len() * nv)
        .into_iter()
        .map(|sol| {
            alphabet
                .letters()
                .map(|g| {
                    TensorElement::from_terms(
                        &ctx,
                        values.iter().enumerate().filter_map(|(vi, v)| {
                            sol.get(&unknown(g, vi)).map(|c| (v.clone(), c.clone()))
                        }),
                    )
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use gt_algebra::rat;

    #[test]
    fn inner_with_unit() {
        let ctx = Context::new(Alphabet::new([("x1", 1), ("y1", 1)]).unwrap(), 4);
        let rho = make_inner_pairing(&TensorElement::one(&ctx));
        let x = TensorElement::generator(&ctx, 0);
        let y = TensorElement::generator(&ctx, 1);
        assert_eq!(rho.eval(&x, &y).unwrap(), &x * &y);
        assert!(rho.is_exact());
        assert!(make_inner_pairing(&TensorElement::zero(&ctx)).eval(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn zero_exact_objects() {
        let ctx = Context::new(Alphabet::new([("x1", 1), ("y1", 1)]).unwrap(), 4);
        let l = FoxDerivative::zero(&ctx, Side::Left);
        let r = FoxDerivative::zero(&ctx, Side::Right);
        let p = make_exact_pairing(&l, &r).unwrap();
        assert!(p.entries().next().is_none());
        let q = make_exact_qder(&l, &r).unwrap();
        assert!(q.table().iter().all(TensorElement::is_zero));
        assert!(make_exact_pairing(&r, &l).is_err());
        let _ = rat(0);
    }
}
