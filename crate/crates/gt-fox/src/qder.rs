//! Quasi-derivations: linear maps `q` whose Leibniz defect
//! `q(a)b + a q(b) - q(ab)` is a prescribed Fox pairing `σ`.

use std::collections::BTreeMap;

use gt_algebra::{Context, Letter, Rational, TensorElement, Word};
use num_traits::One;

use crate::derivative::FoxDerivative;
use crate::derivative::full_table;
use crate::error::Result;
use crate::pairing::FoxPairing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiDerivation {
    ctx: Context,
    table: Vec<TensorElement>,
    sigma: FoxPairing,
    exact: Option<(FoxDerivative, FoxDerivative)>,
}

impl QuasiDerivation {
    /// `q ∈ Qder(σ)`, i.e. `q(ab) = q(a)b + a q(b) - σ(a, b)`.
    pub fn new(ctx: &Context, table: BTreeMap<Letter, TensorElement>, sigma: FoxPairing) -> Result<Self> {
        ctx.check_same(sigma.ctx())?;
        Ok(QuasiDerivation { ctx: ctx.clone(), table: full_table(ctx, table)?, sigma, exact: None })
    }

    pub fn from_fn(sigma: FoxPairing, f: impl FnMut(Letter) -> TensorElement) -> Self {
        let ctx = sigma.ctx().clone();
        let table = ctx.alphabet().letters().map(f).collect();
        QuasiDerivation { ctx, table, sigma, exact: None }
    }

    pub(crate) fn with_exact(mut self, l: FoxDerivative, r: FoxDerivative) -> Self {
        self.exact = Some((l, r));
        self
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn value(&self, l: Letter) -> &TensorElement {
        &self.table[l as usize]
    }

    pub fn table(&self) -> &[TensorElement] {
        &self.table
    }

    pub fn sigma(&self) -> &FoxPairing {
        &self.sigma
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// The `(∂L, ∂R)` pair when built by `μ`.
    pub fn exact_parts(&self) -> Option<&(FoxDerivative, FoxDerivative)> {
        self.exact.as_ref()
    }

    /// Largest degree drop of `q` or of `σ`.
    pub fn degree_drop(&self) -> u32 {
        let alphabet = self.ctx.alphabet();
        let own = alphabet
            .letters()
            .filter_map(|l| Some(alphabet.degree(l).saturating_sub(self.value(l).min_degree()?)))
            .max()
            .unwrap_or(0);
        own.max(self.sigma.degree_drop())
    }

    /// Splits off the first letter repeatedly:
    /// `q(g w) = q(g) w + g q(w) - σ(g, w)`.
    pub fn eval_word(&self, w: &Word) -> TensorElement {
        let alphabet = self.ctx.alphabet();
        let letters = w.letters();
        let word = |s: &[Letter]| TensorElement::from_word(&self.ctx, Word::new(s.to_vec(), alphabet), One::one());
        let mut acc = TensorElement::zero(&self.ctx);
        for i in (0..letters.len()).rev() {
            let g = word(&letters[i..=i]);
            let rest = &letters[i + 1..];
            let rest_w = word(rest);
            let mut next = &(&self.table[letters[i] as usize] * &rest_w) + &(&g * &acc);
            if !rest.is_empty() {
                let s = self.sigma.eval_words(&Word::new(letters[i..=i].to_vec(), alphabet), &Word::new(rest.to_vec(), alphabet));
                next = &next - &s;
            }
            acc = next;
        }
        acc
    }

    pub fn eval(&self, a: &TensorElement) -> Result<TensorElement> {
        self.ctx.check_same(a.ctx())?;
        Ok(a.map_words(&self.ctx, |w| self.eval_word(w)))
    }

    /// `q^t = S ∘ q ∘ S`, which lies in `Qder(σ^t)`.
    pub fn transpose(&self) -> Self {
        QuasiDerivation {
            ctx: self.ctx.clone(),
            table: self.table.iter().map(|v| -&v.antipode()).collect(),
            sigma: self.sigma.transpose(),
            exact: None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuasiDerivation {
            ctx: self.ctx.clone(),
            table: self.table.iter().map(|v| v.scale(c)).collect(),
            sigma: self.sigma.scale(c),
            exact: None,
        }
    }

    /// Replaces the generator values, keeping `σ`.
    pub fn with_table(&self, f: impl FnMut(Letter) -> TensorElement) -> Self {
        Self::from_fn(self.sigma.clone(), f)
    }

    pub fn retruncate(&self, max_degree: u32) -> Self {
        QuasiDerivation {
            ctx: self.ctx.with_max_degree(max_degree),
            table: self.table.iter().map(|v| v.retruncate(max_degree)).collect(),
            sigma: self.sigma.retruncate(max_degree),
            exact: None,
        }
    }
}

pub fn qder_eval(q: &QuasiDerivation, a: &TensorElement) -> Result<TensorElement> {
    q.eval(a)
}

pub fn transpose_qder(q: &QuasiDerivation) -> QuasiDerivation {
    q.transpose()
}

pub fn transpose_fox(d: &FoxDerivative) -> FoxDerivative {
    d.transpose()
}
