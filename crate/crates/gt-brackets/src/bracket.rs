//! The double bracket of a Fox pairing and the bracket it induces on cyclic
//! words.
//!
//! The Sweedler form is
//! `{{a, b}} = b' S(ρ(a'', b'')') a' ⊗ ρ(a'', b'')''`.
//! On words `a = a_1…a_m`, `b = b_1…b_n` the coproduct splittings collapse
//! through the antipode axiom and only single letters of `a` and `b` reach
//! the pairing:
//! `{{a, b}} = Σ_{i,j} b_{<j} S(T') a_{>i} ⊗ a_{<i} T'' b_{>j}` with
//! `T = ρ(a_i, b_j)`. Both forms are implemented; the cyclic bracket uses the
//! second.

use std::collections::HashMap;

use gt_algebra::{CyclicElement, Rational, TensorElement, TensorSquareElement, Word};
use gt_fox::FoxPairing;

use crate::error::Result;
use crate::words::{antipode_word, coproduct_table, sweedler, Splits};

/// `{{a, b}}^ρ` by literal Sweedler expansion of both arguments and of the
/// pairing values.
pub fn double_bracket(rho: &FoxPairing, a: &TensorElement, b: &TensorElement) -> Result<TensorSquareElement> {
    let ctx = rho.ctx();
    ctx.check_same(a.ctx())?;
    ctx.check_same(b.ctx())?;
    let mut acc: HashMap<(Word, Word), Rational> = HashMap::new();
    for (u, x) in a.iter() {
        for (v, y) in b.iter() {
            let xy = x * y;
            for (a1, a2) in sweedler(u, ctx.alphabet()) {
                if a2.is_empty() {
                    continue;
                }
                for (b1, b2) in sweedler(v, ctx.alphabet()) {
                    if b2.is_empty() {
                        continue;
                    }
                    let r = rho.eval_words(&a2, &b2);
                    for ((r1, r2), c) in r.coproduct().iter() {
                        let (sign, s) = antipode_word(r1);
                        let left = b1.concat(&s).concat(&a1);
                        let coeff = &xy * c * sign;
                        *acc.entry((left, r2.clone())).or_default() += coeff;
                    }
                }
            }
        }
    }
    Ok(TensorSquareElement::from_terms(ctx, acc))
}

/// `{{a, b}}^ρ` by the letterwise closed form.
pub fn double_bracket_letters(rho: &FoxPairing, a: &TensorElement, b: &TensorElement) -> Result<TensorSquareElement> {
    let ctx = rho.ctx();
    ctx.check_same(a.ctx())?;
    ctx.check_same(b.ctx())?;
    let table = coproduct_table(rho);
    let mut acc: HashMap<(Word, Word), Rational> = HashMap::new();
    for (u, x) in a.iter() {
        for (v, y) in b.iter() {
            let xy = x * y;
            letter_terms(&table, u, v, ctx.alphabet(), |left, right, c| {
                *acc.entry((left, right)).or_default() += &xy * c;
            });
        }
    }
    Ok(TensorSquareElement::from_terms(ctx, acc))
}

fn letter_terms(
    table: &[Vec<Splits>],
    u: &Word,
    v: &Word,
    alphabet: &gt_algebra::Alphabet,
    mut emit: impl FnMut(Word, Word, &Rational),
) {
    let (ul, vl) = (u.letters(), v.letters());
    for i in 0..ul.len() {
        let a_before = u.slice(0..i, alphabet);
        let a_after = u.slice(i + 1..ul.len(), alphabet);
        for j in 0..vl.len() {
            let splits = &table[ul[i] as usize][vl[j] as usize];
            if splits.is_empty() {
                continue;
            }
            let b_before = v.slice(0..j, alphabet);
            let b_after = v.slice(j + 1..vl.len(), alphabet);
            for (s1, s2, c) in splits {
                let left = b_before.concat(s1).concat(&a_after);
                let right = a_before.concat(s2).concat(&b_after);
                emit(left, right, c);
            }
        }
    }
}

/// `[|a|, |b|]^ρ = |b' S(ρ(a'', b'')') a' ρ(a'', b'')''|`, computed from the
/// stored representatives of `a` and `b`.
pub fn bracket_cyclic(rho: &FoxPairing, a: &CyclicElement, b: &CyclicElement) -> Result<CyclicElement> {
    bracket_of_lifts(rho, &a.lift(), &b.lift())
}

/// The bracket evaluated on arbitrary lifts in `A`; the result only depends
/// on their cyclic classes.
pub fn bracket_of_lifts(rho: &FoxPairing, a: &TensorElement, b: &TensorElement) -> Result<CyclicElement> {
    let ctx = rho.ctx();
    ctx.check_same(a.ctx())?;
    ctx.check_same(b.ctx())?;
    let table = coproduct_table(rho);
    let mut acc: HashMap<Word, Rational> = HashMap::new();
    for (u, x) in a.iter() {
        for (v, y) in b.iter() {
            let xy = x * y;
            letter_terms(&table, u, v, ctx.alphabet(), |left, right, c| {
                if left.degree() + right.degree() <= ctx.max_degree() {
                    *acc.entry(left.concat(&right).min_rotation()).or_default() += &xy * c;
                }
            });
        }
    }
    let mut out = CyclicElement::zero(ctx);
    for (w, c) in acc {
        out.add_term(&w, c);
    }
    Ok(out)
}

/// `|μ({{a, b}})|` from the Sweedler double bracket, kept as an independent
/// route to the cyclic bracket.
pub fn bracket_sweedler(rho: &FoxPairing, a: &TensorElement, b: &TensorElement) -> Result<CyclicElement> {
    let d = double_bracket(rho, a, b)?;
    let mut out = CyclicElement::zero(rho.ctx());
    for ((u, v), c) in d.iter() {
        out.add_term(&u.concat(v), c.clone());
    }
    Ok(out)
}
