//! Word-level helpers shared by the bracket and cobracket formulas.

use gt_algebra::{Alphabet, Rational, TensorElement, Word};
use gt_fox::FoxPairing;
use num_traits::One;

/// `(S(t') as a word, t'', coefficient with the antipode sign folded in)`.
pub(crate) type Splits = Vec<(Word, Word, Rational)>;

/// All `2^k` order-preserving splittings of a word into `(w', w'')`.
pub(crate) fn sweedler(w: &Word, alphabet: &Alphabet) -> Vec<(Word, Word)> {
    let letters = w.letters();
    let k = letters.len();
    (0u64..1 << k)
        .map(|mask| {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, &l) in letters.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    right.push(l);
                } else {
                    left.push(l);
                }
            }
            (Word::new(left, alphabet), Word::new(right, alphabet))
        })
        .collect()
}

/// `S(w) = sign · reversed(w)`.
pub(crate) fn antipode_word(w: &Word) -> (Rational, Word) {
    let sign = if w.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
    (sign, w.reversed())
}

/// `Σ S(v') ⊗ v''` for an element `v`.
pub(crate) fn antipode_splits(v: &TensorElement) -> Splits {
    v.coproduct()
        .iter()
        .map(|((p, q), c)| {
            let (sign, s) = antipode_word(p);
            (s, q.clone(), c * sign)
        })
        .collect()
}

pub(crate) fn coproduct_table(rho: &FoxPairing) -> Vec<Vec<Splits>> {
    let letters: Vec<_> = rho.ctx().alphabet().letters().collect();
    letters
        .iter()
        .map(|&a| letters.iter().map(|&b| antipode_splits(rho.value(a, b))).collect())
        .collect()
}
