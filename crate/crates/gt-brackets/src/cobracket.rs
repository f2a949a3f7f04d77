//! The map `d_q(a) = a' S(q(a'')') ⊗ q(a'')''` and the cobracket
//! `δ_q = d_q + P d_{q^t}` on cyclic words.
//!
//! Writing `Q` for the generator table of `q` and `Σ` for its pairing, a
//! quasi-derivation on a word unrolls to
//! `q(a) = Σ_i a_{<i} Q(a_i) a_{>i} - Σ_i a_{<i} Σ(a_i, a_{i+1}) a_{>i+1}`.
//! Feeding this into `d_q` and cancelling with the antipode axiom gives,
//! after projecting both legs to cyclic words,
//!
//! ```text
//! Σ_i       |S(Q(a_i)')|                ⊗ |a_{<i} Q(a_i)'' a_{>i}|
//! - Σ_{i<j} |a_{i+1..j-1} S(Σ(a_i,a_j)')| ⊗ |a_{<i} Σ(a_i,a_j)'' a_{>j}|
//! ```
//!
//! which is what [`cobracket_cyclic`] evaluates.

use std::collections::HashMap;

use gt_algebra::{CyclicElement, Rational, TensorElement, TensorSquareElement, Word};
use gt_fox::QuasiDerivation;

use crate::cyclic_square::CyclicTensorSquare;
use crate::error::Result;
use crate::words::{antipode_splits, antipode_word, coproduct_table, sweedler, Splits};

/// `d_q(a)` by literal Sweedler expansion.
pub fn dq_map(q: &QuasiDerivation, a: &TensorElement) -> Result<TensorSquareElement> {
    let ctx = q.ctx();
    ctx.check_same(a.ctx())?;
    let mut acc: HashMap<(Word, Word), Rational> = HashMap::new();
    for (u, x) in a.iter() {
        for (a1, a2) in sweedler(u, ctx.alphabet()) {
            if a2.is_empty() {
                continue;
            }
            for ((r1, r2), c) in q.eval_word(&a2).coproduct().iter() {
                let (sign, s) = antipode_word(r1);
                *acc.entry((a1.concat(&s), r2.clone())).or_default() += x * c * sign;
            }
        }
    }
    Ok(TensorSquareElement::from_terms(ctx, acc))
}

/// `(|·| ⊗ |·|)(d_q(a) + P d_{q^t}(a))` from the Sweedler route.
pub fn cobracket_sweedler(q: &QuasiDerivation, a: &TensorElement) -> Result<CyclicTensorSquare> {
    let direct = CyclicTensorSquare::project(&dq_map(q, a)?);
    let transposed = CyclicTensorSquare::project(&dq_map(&q.transpose(), a)?);
    direct.try_add(&transposed.swap())
}

/// `δ_q(|a|)` from the stored representative of `a`.
pub fn cobracket_cyclic(q: &QuasiDerivation, a: &CyclicElement) -> Result<CyclicTensorSquare> {
    cobracket_of_lift(q, &a.lift())
}

/// `δ_q` evaluated on an arbitrary lift; the result depends only on `|a|`.
pub fn cobracket_of_lift(q: &QuasiDerivation, a: &TensorElement) -> Result<CyclicTensorSquare> {
    q.ctx().check_same(a.ctx())?;
    let direct = projected_dq(q, a);
    let transposed = projected_dq(&q.transpose(), a);
    direct.try_add(&transposed.swap())
}

/// The letterwise closed form of `(|·| ⊗ |·|) d_q(a)`.
pub fn projected_dq(q: &QuasiDerivation, a: &TensorElement) -> CyclicTensorSquare {
    let ctx = q.ctx();
    let alphabet = ctx.alphabet();
    let singles: Vec<Splits> = q.table().iter().map(antipode_splits).collect();
    let pairs = coproduct_table(q.sigma());
    let mut acc: HashMap<(Word, Word), Rational> = HashMap::new();
    let n = ctx.max_degree();
    let mut emit = |left: Word, right: Word, c: Rational| {
        if left.degree() + right.degree() <= n {
            *acc.entry((left.min_rotation(), right.min_rotation())).or_default() += c;
        }
    };
    for (u, x) in a.iter() {
        let l = u.letters();
        let k = l.len();
        for i in 0..k {
            let before = u.slice(0..i, alphabet);
            let after = u.slice(i + 1..k, alphabet);
            for (s1, s2, c) in &singles[l[i] as usize] {
                emit(s1.clone(), before.concat(s2).concat(&after), x * c);
            }
            for j in i + 1..k {
                let middle = u.slice(i + 1..j, alphabet);
                let tail = u.slice(j + 1..k, alphabet);
                for (s1, s2, c) in &pairs[l[i] as usize][l[j] as usize] {
                    emit(middle.concat(s1), before.concat(s2).concat(&tail), -(x * c));
                }
            }
        }
    }
    let mut out = CyclicTensorSquare::zero(ctx);
    for ((u, v), c) in acc {
        out.add_term(&u, &v, c);
    }
    out
}
