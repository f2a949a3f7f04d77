//! The Lie algebra `L ⊕ L`, with `L` the free Lie algebra inside the tensor
//! algebra, and its action on the tensor algebra.

use std::collections::BTreeMap;
use std::fmt;

use gt_algebra::{lyndon_basis, lyndon_coordinates, Context, LieElement, Rational, TensorElement, Word};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    Left,
    Right,
}

/// A basis vector of `L ⊕ L`: a Lyndon basis element placed in one summand.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SumKey {
    pub word: Word,
    pub summand: Summand,
}

impl SumKey {
    pub fn degree(&self) -> u32 {
        self.word.degree()
    }
}

/// `v = v_1 ⊕ v_2` with both components primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiePair {
    left: LieElement,
    right: LieElement,
}

impl LiePair {
    pub fn new(left: LieElement, right: LieElement) -> Result<Self> {
        left.tensor().ctx().check_same(right.tensor().ctx())?;
        Ok(LiePair { left, right })
    }

    pub fn zero(ctx: &Context) -> Self {
        LiePair { left: LieElement::zero(ctx), right: LieElement::zero(ctx) }
    }

    pub fn left_only(x: LieElement) -> Self {
        let ctx = x.tensor().ctx().clone();
        LiePair { left: x, right: LieElement::zero(&ctx) }
    }

    pub fn right_only(x: LieElement) -> Self {
        let ctx = x.tensor().ctx().clone();
        LiePair { left: LieElement::zero(&ctx), right: x }
    }

    /// The image of `x` under the diagonal `Δ: L → L ⊕ L`.
    pub fn diagonal(x: LieElement) -> Self {
        LiePair { left: x.clone(), right: x }
    }

    /// The basis vector named by `key`, using the standard bracketing of its
    /// Lyndon word.
    pub fn basis(ctx: &Context, key: &SumKey) -> Self {
        let expr = gt_algebra::standard_bracketing(key.word.letters());
        let x = LieElement::from_expr(ctx, &expr);
        match key.summand {
            Summand::Left => Self::left_only(x),
            Summand::Right => Self::right_only(x),
        }
    }

    pub fn ctx(&self) -> &Context {
        self.left.tensor().ctx()
    }

    pub fn left(&self) -> &TensorElement {
        self.left.tensor()
    }

    pub fn right(&self) -> &TensorElement {
        self.right.tensor()
    }

    pub fn is_zero(&self) -> bool {
        self.left().is_zero() && self.right().is_zero()
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        Ok(LiePair {
            left: gt_algebra::lie_bracket(&self.left, &other.left)?,
            right: gt_algebra::lie_bracket(&self.right, &other.right)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LiePair { left: self.left.scale(c), right: self.right.scale(c) }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(LiePair { left: self.left.try_add(&other.left)?, right: self.right.try_add(&other.right)? })
    }

    /// `(x ⊕ y)·a = xa - ay`.
    pub fn act(&self, a: &TensorElement) -> Result<TensorElement> {
        let xa = self.left().product(a)?;
        let ay = a.product(self.right())?;
        Ok(&xa - &ay)
    }

    /// Coordinates in the Lyndon basis of each summand.
    pub fn coordinates(&self) -> Result<BTreeMap<SumKey, Rational>> {
        let alphabet = self.ctx().alphabet().clone();
        let mut out = BTreeMap::new();
        for (summand, part) in [(Summand::Left, self.left()), (Summand::Right, self.right())] {
            for (letters, c) in lyndon_coordinates(part)? {
                out.insert(SumKey { word: Word::new(letters, &alphabet), summand }, c);
            }
        }
        Ok(out)
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        PairDisplay(self)
    }
}

struct PairDisplay<'a>(&'a LiePair);

impl fmt::Display for PairDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ⊕ ({})", self.0.left().display(), self.0.right().display())
    }
}

/// Basis keys of `L ⊕ L` of degree at most `d`, in increasing order.
pub fn sum_basis(ctx: &Context, d: u32) -> Vec<SumKey> {
    let mut out = Vec::new();
    for deg in 1..=d {
        for e in lyndon_basis(ctx, deg) {
            for summand in [Summand::Left, Summand::Right] {
                out.push(SumKey { word: e.word.clone(), summand });
            }
        }
    }
    out.sort();
    out
}
