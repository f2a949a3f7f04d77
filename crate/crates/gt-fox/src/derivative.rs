//! One-sided Fox derivatives.

use std::collections::BTreeMap;

use gt_algebra::{Context, Letter, TensorElement, Word};
use num_traits::One;

use crate::error::{FoxError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `∂(ab) = ∂(a)ε(b) + a∂(b)`
    Left,
    /// `∂(ab) = ∂(a)b + ε(a)∂(b)`
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// A Fox derivative, stored as its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoxDerivative {
    ctx: Context,
    side: Side,
    table: Vec<TensorElement>,
}

pub(crate) fn full_table(ctx: &Context, mut table: BTreeMap<Letter, TensorElement>) -> Result<Vec<TensorElement>> {
    let alphabet = ctx.alphabet();
    let mut out = Vec::with_capacity(alphabet.len());
    for l in alphabet.letters() {
        let v = table.remove(&l).ok_or_else(|| FoxError::IncompleteTable(alphabet.name(l).to_string()))?;
        ctx.check_same(v.ctx())?;
        out.push(v);
    }
    Ok(out)
}

impl FoxDerivative {
    /// Builds a derivative from a table that must cover every generator.
    pub fn new(ctx: &Context, side: Side, table: BTreeMap<Letter, TensorElement>) -> Result<Self> {
        Ok(FoxDerivative { ctx: ctx.clone(), side, table: full_table(ctx, table)? })
    }

    pub fn from_fn(ctx: &Context, side: Side, mut f: impl FnMut(Letter) -> TensorElement) -> Self {
        let table = ctx.alphabet().letters().map(&mut f).collect();
        FoxDerivative { ctx: ctx.clone(), side, table }
    }

    pub fn zero(ctx: &Context, side: Side) -> Self {
        Self::from_fn(ctx, side, |_| TensorElement::zero(ctx))
    }

    /// `∂_i` with `∂_i(g_j) = δ_ij`.
    pub fn basis(ctx: &Context, side: Side, i: Letter) -> Self {
        Self::from_fn(ctx, side, |l| if l == i { TensorElement::one(ctx) } else { TensorElement::zero(ctx) })
    }

    /// `D(a) = a - ε(a)`, which satisfies both Leibniz rules.
    pub fn distinguished(ctx: &Context, side: Side) -> Self {
        Self::from_fn(ctx, side, |l| TensorElement::generator(ctx, l))
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn value(&self, l: Letter) -> &TensorElement {
        &self.table[l as usize]
    }

    pub fn table(&self) -> &[TensorElement] {
        &self.table
    }

    /// Value on a single word by the closed form of the side's Leibniz rule.
    pub fn eval_word(&self, w: &Word) -> TensorElement {
        let alphabet = self.ctx.alphabet();
        let letters = w.letters();
        if letters.is_empty() {
            return TensorElement::zero(&self.ctx);
        }
        match self.side {
            Side::Left => {
                let k = letters.len() - 1;
                let prefix = TensorElement::from_word(&self.ctx, Word::new(letters[..k].to_vec(), alphabet), One::one());
                &prefix * &self.table[letters[k] as usize]
            }
            Side::Right => {
                let suffix = TensorElement::from_word(&self.ctx, Word::new(letters[1..].to_vec(), alphabet), One::one());
                &self.table[letters[0] as usize] * &suffix
            }
        }
    }

    pub fn eval(&self, a: &TensorElement) -> Result<TensorElement> {
        self.ctx.check_same(a.ctx())?;
        Ok(a.map_words(&self.ctx, |w| self.eval_word(w)))
    }

    /// `∂^t = S ∘ ∂ ∘ S`, a derivative of the opposite side with
    /// `∂^t(g) = -S(∂(g))`.
    pub fn transpose(&self) -> Self {
        FoxDerivative {
            ctx: self.ctx.clone(),
            side: self.side.flip(),
            table: self.table.iter().map(|v| -&v.antipode()).collect(),
        }
    }

    /// Post-composition with a linear map, applied to the table values.
    pub fn map_values(&self, mut f: impl FnMut(&TensorElement) -> TensorElement) -> Self {
        let table: Vec<TensorElement> = self.table.iter().map(&mut f).collect();
        let ctx = table.first().map(|t| t.ctx().clone()).unwrap_or_else(|| self.ctx.clone());
        FoxDerivative { ctx, side: self.side, table }
    }

    pub fn scale(&self, c: &gt_algebra::Rational) -> Self {
        self.map_values(|v| v.scale(c))
    }

    /// Sum of two derivatives of the same side.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        if self.side != other.side {
            return Err(FoxError::WrongSide { expected: self.side.name() });
        }
        let table = self.table.iter().zip(&other.table).map(|(a, b)| a + b).collect();
        Ok(FoxDerivative { ctx: self.ctx.clone(), side: self.side, table })
    }
}

/// `fox_eval` in operation form.
pub fn fox_eval(d: &FoxDerivative, a: &TensorElement) -> Result<TensorElement> {
    d.eval(a)
}
