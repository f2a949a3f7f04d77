//! The extension `(L ⊕ L) ×_c A` of `L ⊕ L` by the module `A` along a
//! two-cochain `c`.

use gt_algebra::TensorElement;

use crate::cocycle::RelativeCocycle;
use crate::error::Result;
use crate::lie_sum::LiePair;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionElement {
    pub pair: LiePair,
    pub tail: TensorElement,
}

impl ExtensionElement {
    pub fn new(pair: LiePair, tail: TensorElement) -> Result<Self> {
        pair.ctx().check_same(tail.ctx())?;
        Ok(ExtensionElement { pair, tail })
    }

    pub fn from_pair(pair: LiePair) -> Self {
        let tail = TensorElement::zero(pair.ctx());
        ExtensionElement { pair, tail }
    }

    pub fn from_tail(tail: TensorElement) -> Self {
        ExtensionElement { pair: LiePair::zero(tail.ctx()), tail }
    }

    pub fn is_zero(&self) -> bool {
        self.pair.is_zero() && self.tail.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(ExtensionElement { pair: self.pair.try_add(&other.pair)?, tail: self.tail.try_add(&other.tail)? })
    }
}

/// `[(x_1, v_1), (x_2, v_2)] = ([x_1, x_2], x_1·v_2 - x_2·v_1 + c(x_1, x_2))`.
///
/// This ordering of the action terms is the one for which Jacobi is
/// equivalent to `dc = 0` when `L ⊕ L` acts on the left.
pub fn extension_bracket(z: &RelativeCocycle, u: &ExtensionElement, v: &ExtensionElement) -> Result<ExtensionElement> {
    z.ctx().check_same(u.tail.ctx())?;
    z.ctx().check_same(v.tail.ctx())?;
    let pair = u.pair.bracket(&v.pair)?;
    let action = &u.pair.act(&v.tail)? - &v.pair.act(&u.tail)?;
    let tail = &action + &z.c(&u.pair, &v.pair)?;
    Ok(ExtensionElement { pair, tail })
}
