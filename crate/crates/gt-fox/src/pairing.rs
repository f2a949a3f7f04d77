//! Fox pairings: bilinear maps that are left Fox derivatives in the first
//! slot and right Fox derivatives in the second.

use std::collections::BTreeMap;

use gt_algebra::{Context, Letter, Rational, TensorElement, Word};
use num_traits::One;

use crate::derivative::{FoxDerivative, Side};
use crate::error::Result;

/// How a pairing was built. Only the constructive routes certify exactness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Table,
    /// `τ(∂L, ∂R)`
    Exact { left: FoxDerivative, right: FoxDerivative },
    /// `D(a) e D(b)`
    Inner { e: TensorElement },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoxPairing {
    ctx: Context,
    table: Vec<Vec<TensorElement>>,
    provenance: Provenance,
}

impl FoxPairing {
    /// Entries missing from `table` are zero.
    pub fn from_table(ctx: &Context, table: BTreeMap<(Letter, Letter), TensorElement>) -> Result<Self> {
        for v in table.values() {
            ctx.check_same(v.ctx())?;
        }
        Ok(Self::from_fn(ctx, |a, b| table.get(&(a, b)).cloned().unwrap_or_else(|| TensorElement::zero(ctx))))
    }

    pub fn from_fn(ctx: &Context, mut f: impl FnMut(Letter, Letter) -> TensorElement) -> Self {
        let letters: Vec<Letter> = ctx.alphabet().letters().collect();
        let table = letters.iter().map(|&a| letters.iter().map(|&b| f(a, b)).collect()).collect();
        FoxPairing { ctx: ctx.clone(), table, provenance: Provenance::Table }
    }

    pub fn zero(ctx: &Context) -> Self {
        Self::from_fn(ctx, |_, _| TensorElement::zero(ctx))
    }

    pub(crate) fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn value(&self, a: Letter, b: Letter) -> &TensorElement {
        &self.table[a as usize][b as usize]
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// True when built by `τ` or as an inner pairing.
    pub fn is_exact(&self) -> bool {
        !matches!(self.provenance, Provenance::Table)
    }

    /// Nonzero table entries in generator order.
    pub fn entries(&self) -> impl Iterator<Item = (Letter, Letter, &TensorElement)> {
        self.table.iter().enumerate().flat_map(|(a, row)| {
            row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(b, v)| (a as Letter, b as Letter, v))
        })
    }

    /// The largest amount by which the pairing can lower weighted degree:
    /// `max(deg a + deg b - deg(value))` over table terms, at least 0.
    pub fn degree_drop(&self) -> u32 {
        let alphabet = self.ctx.alphabet();
        self.entries()
            .filter_map(|(a, b, v)| {
                let low = v.min_degree()?;
                Some((alphabet.degree(a) + alphabet.degree(b)).saturating_sub(low))
            })
            .max()
            .unwrap_or(0)
    }

    /// `ρ(u, v) = u_{<m} · table(u_m, v_1) · v_{>1}` for nonempty words.
    pub fn eval_words(&self, u: &Word, v: &Word) -> TensorElement {
        if u.is_empty() || v.is_empty() {
            return TensorElement::zero(&self.ctx);
        }
        let alphabet = self.ctx.alphabet();
        let m = u.len() - 1;
        let prefix = TensorElement::from_word(&self.ctx, Word::new(u.letters()[..m].to_vec(), alphabet), One::one());
        let suffix = TensorElement::from_word(&self.ctx, Word::new(v.letters()[1..].to_vec(), alphabet), One::one());
        let t = &self.table[u.letters()[m] as usize][v.letters()[0] as usize];
        &(&prefix * t) * &suffix
    }

    pub fn eval(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        self.ctx.check_same(a.ctx())?;
        self.ctx.check_same(b.ctx())?;
        let mut out = TensorElement::zero(&self.ctx);
        for (u, x) in a.iter() {
            for (v, y) in b.iter() {
                out.add_scaled(&self.eval_words(u, v), &(x * y));
            }
        }
        Ok(out)
    }

    /// `ρ^t(a, b) = S ρ(S b, S a)`; on generators `ρ^t(g, h) = S ρ(h, g)`.
    pub fn transpose(&self) -> Self {
        let t = &self.table;
        FoxPairing::from_fn(&self.ctx, |a, b| t[b as usize][a as usize].antipode())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let t = &self.table;
        FoxPairing::from_fn(&self.ctx, |a, b| t[a as usize][b as usize].scale(c))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let (s, o) = (&self.table, &other.table);
        Ok(FoxPairing::from_fn(&self.ctx, |a, b| &s[a as usize][b as usize] + &o[a as usize][b as usize]))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Moves the table into another truncation of the same alphabet.
    pub fn retruncate(&self, max_degree: u32) -> Self {
        let ctx = self.ctx.with_max_degree(max_degree);
        let t = &self.table;
        FoxPairing::from_fn(&ctx, |a, b| t[a as usize][b as usize].retruncate(max_degree))
    }

    /// Slot-one derivative `ρ(-, b)` for a fixed `b`, as a left Fox derivative.
    pub fn left_slot(&self, b: &TensorElement) -> Result<FoxDerivative> {
        self.ctx.check_same(b.ctx())?;
        let ctx = self.ctx.clone();
        let g = |l: Letter| self.eval(&TensorElement::generator(&ctx, l), b).expect("same context");
        Ok(FoxDerivative::from_fn(&self.ctx, Side::Left, g))
    }

    /// Slot-two derivative `ρ(a, -)` for a fixed `a`, as a right Fox derivative.
    pub fn right_slot(&self, a: &TensorElement) -> Result<FoxDerivative> {
        self.ctx.check_same(a.ctx())?;
        let ctx = self.ctx.clone();
        let g = |l: Letter| self.eval(a, &TensorElement::generator(&ctx, l)).expect("same context");
        Ok(FoxDerivative::from_fn(&self.ctx, Side::Right, g))
    }
}

/// `pairing_eval` in operation form.
pub fn pairing_eval(rho: &FoxPairing, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
    rho.eval(a, b)
}

pub fn transpose_pairing(rho: &FoxPairing) -> FoxPairing {
    rho.transpose()
}
