//! The cyclic quotient `|A| = A / [A, A]`, with words stored as their least
//! rotation.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::alphabet::{Context, Word};
use crate::error::Result;
use crate::rational::Rational;
use crate::tensor::{add_into, write_terms, TensorElement};

#[derive(Clone, Debug)]
pub struct CyclicElement {
    ctx: Context,
    terms: BTreeMap<Word, Rational>,
}

impl PartialEq for CyclicElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for CyclicElement {}

/// `|a|`: every word replaced by its canonical rotation.
pub fn cyclic_project(a: &TensorElement) -> CyclicElement {
    let mut out = CyclicElement::zero(a.ctx());
    for (w, c) in a.iter() {
        out.add_term(w, c.clone());
    }
    out
}

impl CyclicElement {
    pub fn zero(ctx: &Context) -> Self {
        CyclicElement { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    /// `|w|` for a single word (canonicalised here).
    pub fn from_word(ctx: &Context, w: &Word) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(w, Rational::one());
        out
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(&w.min_rotation()).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c·|w|`; `w` need not be canonical.
    pub fn add_term(&mut self, w: &Word, c: Rational) {
        if w.degree() <= self.ctx.max_degree() {
            add_into(&mut self.terms, w.min_rotation(), c);
        }
    }

    pub fn add_scaled(&mut self, other: &CyclicElement, c: &Rational) {
        debug_assert!(self.ctx == other.ctx);
        for (w, x) in &other.terms {
            add_into(&mut self.terms, w.clone(), x * c);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(&self.ctx);
        out.add_scaled(self, c);
        out
    }

    /// The canonical representative, read as a tensor element.
    pub fn lift(&self) -> TensorElement {
        TensorElement::from_terms(&self.ctx, self.terms.iter().map(|(w, c)| (w.clone(), c.clone())))
    }

    pub fn display(&self) -> CyclicDisplay<'_> {
        CyclicDisplay { e: self }
    }
}

pub struct CyclicDisplay<'a> {
    e: &'a CyclicElement,
}

impl fmt::Display for CyclicDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = self.e.ctx.alphabet().clone();
        write_terms(f, self.e.terms.iter(), |f, w, c| {
            if c.is_one() {
                write!(f, "|{}|", w.display(&alphabet))
            } else {
                write!(f, "{c}*|{}|", w.display(&alphabet))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    #[test]
    fn commutators_vanish() {
        let ctx = Context::new(Alphabet::new([("x1", 1), ("y1", 1), ("z1", 2)]).unwrap(), 4);
        let x = TensorElement::named(&ctx, "x1").unwrap();
        let y = TensorElement::named(&ctx, "y1").unwrap();
        let z = TensorElement::named(&ctx, "z1").unwrap();
        assert!(cyclic_project(&(&(&x * &y) - &(&y * &x))).is_zero());
        assert_eq!(cyclic_project(&(&(&x * &y) * &z)), cyclic_project(&(&(&z * &x) * &y)));
        assert_eq!(cyclic_project(&TensorElement::one(&ctx)).display().to_string(), "|1|");
    }
}
