//! The target `|A| ⊗ |A|` of cobrackets.

use std::collections::BTreeMap;
use std::fmt;

use gt_algebra::codec::{word_names, SquareJson, SquareTermJson};
use gt_algebra::{Context, Rational, TensorSquareElement, Word};
use num_traits::{One, Signed, Zero};

use crate::error::Result;

/// Combination of pairs of cyclic words, both legs stored as least rotations.
#[derive(Clone, Debug)]
pub struct CyclicTensorSquare {
    ctx: Context,
    terms: BTreeMap<(Word, Word), Rational>,
}

impl PartialEq for CyclicTensorSquare {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for CyclicTensorSquare {}

impl CyclicTensorSquare {
    pub fn zero(ctx: &Context) -> Self {
        CyclicTensorSquare { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    /// `(|·| ⊗ |·|)` applied to an element of `A ⊗ A`.
    pub fn project(t: &TensorSquareElement) -> Self {
        let mut out = Self::zero(t.ctx());
        for ((u, v), c) in t.iter() {
            out.add_term(u, v, c.clone());
        }
        out
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
        self.terms.get(&(u.min_rotation(), v.min_rotation())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c·|u| ⊗ |v|`, dropping it when `deg u + deg v` exceeds the bound.
    pub fn add_term(&mut self, u: &Word, v: &Word, c: Rational) {
        if c.is_zero() || u.degree() + v.degree() > self.ctx.max_degree() {
            return;
        }
        let key = (u.min_rotation(), v.min_rotation());
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = (u.min_rotation(), v.min_rotation());
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        debug_assert!(self.ctx == other.ctx);
        for ((u, v), x) in &other.terms {
            self.add_term(u, v, x * c);
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

    /// `P(|u| ⊗ |v|) = |v| ⊗ |u|`.
    pub fn swap(&self) -> Self {
        let terms = self.terms.iter().map(|((u, v), c)| ((v.clone(), u.clone()), c.clone())).collect();
        CyclicTensorSquare { ctx: self.ctx.clone(), terms }
    }

    pub fn to_json(&self) -> SquareJson {
        let alphabet = self.ctx.alphabet();
        SquareJson {
            max_degree: self.ctx.max_degree(),
            terms: self
                .terms
                .iter()
                .map(|((u, v), c)| SquareTermJson {
                    left: word_names(u, alphabet),
                    right: word_names(v, alphabet),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn display(&self) -> CyclicSquareDisplay<'_> {
        CyclicSquareDisplay { e: self }
    }
}

pub struct CyclicSquareDisplay<'a> {
    e: &'a CyclicTensorSquare,
}

impl fmt::Display for CyclicSquareDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.terms.is_empty() {
            return f.write_str("0");
        }
        let alphabet = self.e.ctx.alphabet();
        for (i, ((u, v), c)) in self.e.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            let body = format!("|{}| ⊗ |{}|", u.display(alphabet), v.display(alphabet));
            if abs.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{abs}*({body})")?;
            }
        }
        Ok(())
    }
}
