//! Elements of the truncated tensor square `A ⊗ A`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::alphabet::{Context, Word};
use crate::error::Result;
use crate::rational::Rational;
use crate::tensor::{accumulate, add_into, write_terms, TensorElement};

/// Combination of word pairs whose total weighted degree is at most the
/// truncation bound.
#[derive(Clone, Debug)]
pub struct TensorSquareElement {
    ctx: Context,
    terms: BTreeMap<(Word, Word), Rational>,
}

impl PartialEq for TensorSquareElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for TensorSquareElement {}

impl TensorSquareElement {
    pub fn zero(ctx: &Context) -> Self {
        TensorSquareElement { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn from_terms(ctx: &Context, terms: impl IntoIterator<Item = ((Word, Word), Rational)>) -> Self {
        let mut out = Self::zero(ctx);
        for ((u, v), c) in terms {
            out.add_term(u, v, c);
        }
        out
    }

    pub(crate) fn from_hash(ctx: &Context, map: HashMap<(Word, Word), Rational>) -> Self {
        let n = ctx.max_degree();
        let terms = map
            .into_iter()
            .filter(|((u, v), c)| !c.is_zero() && u.degree() + v.degree() <= n)
            .collect();
        TensorSquareElement { ctx: ctx.clone(), terms }
    }

    /// `a ⊗ b` expanded bilinearly.
    pub fn tensor(a: &TensorElement, b: &TensorElement) -> Result<Self> {
        a.ctx().check_same(b.ctx())?;
        let mut acc = HashMap::new();
        for (u, x) in a.iter() {
            for (v, y) in b.iter() {
                accumulate(&mut acc, (u.clone(), v.clone()), x * y);
            }
        }
        Ok(Self::from_hash(a.ctx(), acc))
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), Rational> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Word, Word), &Rational)> {
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

    pub fn coeff(&self, u: &Word, v: &Word) -> Rational {
        self.terms.get(&(u.clone(), v.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: Rational) {
        if u.degree() + v.degree() <= self.ctx.max_degree() {
            add_into(&mut self.terms, (u, v), c);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorSquareElement, c: &Rational) {
        debug_assert!(self.ctx == other.ctx);
        for ((u, v), x) in &other.terms {
            add_into(&mut self.terms, (u.clone(), v.clone()), x * c);
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

    /// The flip `u ⊗ v ↦ v ⊗ u`.
    pub fn swap(&self) -> Self {
        let terms = self.terms.iter().map(|((u, v), c)| ((v.clone(), u.clone()), c.clone())).collect();
        TensorSquareElement { ctx: self.ctx.clone(), terms }
    }

    /// Componentwise product `(u ⊗ v)(u' ⊗ v') = uu' ⊗ vv'`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut acc = HashMap::new();
        let n = self.ctx.max_degree();
        for ((u, v), x) in &self.terms {
            for ((p, q), y) in &other.terms {
                if u.degree() + v.degree() + p.degree() + q.degree() <= n {
                    accumulate(&mut acc, (u.concat(p), v.concat(q)), x * y);
                }
            }
        }
        Ok(Self::from_hash(&self.ctx, acc))
    }

    /// Applies linear maps to each leg: `Σ f(u) ⊗ g(v)`.
    pub fn map_legs(
        &self,
        mut f: impl FnMut(&Word) -> TensorElement,
        mut g: impl FnMut(&Word) -> TensorElement,
    ) -> Self {
        let mut acc = HashMap::new();
        for ((u, v), c) in &self.terms {
            let fu = f(u);
            let gv = g(v);
            for (a, x) in fu.iter() {
                for (b, y) in gv.iter() {
                    accumulate(&mut acc, (a.clone(), b.clone()), c * x * y);
                }
            }
        }
        Self::from_hash(&self.ctx, acc)
    }

    /// `μ(u ⊗ v) = uv`.
    pub fn multiply(&self) -> TensorElement {
        TensorElement::from_terms(&self.ctx, self.terms.iter().map(|((u, v), c)| (u.concat(v), c.clone())))
    }

    /// `(ε ⊗ id)`: keeps terms whose left leg is empty.
    pub fn counit_left(&self) -> TensorElement {
        TensorElement::from_terms(
            &self.ctx,
            self.terms.iter().filter(|((u, _), _)| u.is_empty()).map(|((_, v), c)| (v.clone(), c.clone())),
        )
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> TensorElement {
        TensorElement::from_terms(
            &self.ctx,
            self.terms.iter().filter(|((_, v), _)| v.is_empty()).map(|((u, _), c)| (u.clone(), c.clone())),
        )
    }

    pub fn display(&self) -> SquareDisplay<'_> {
        SquareDisplay { e: self }
    }
}

pub struct SquareDisplay<'a> {
    e: &'a TensorSquareElement,
}

impl fmt::Display for SquareDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = self.e.ctx.alphabet().clone();
        write_terms(f, self.e.terms.iter(), |f, (u, v), c| {
            if c.is_one() {
                write!(f, "{} ⊗ {}", u.display(&alphabet), v.display(&alphabet))
            } else {
                write!(f, "{c}*({} ⊗ {})", u.display(&alphabet), v.display(&alphabet))
            }
        })
    }
}
