//! Relative two-cochains `ω ⊕ c` for the diagonal `Δ: L → L ⊕ L` with
//! coefficients in the tensor algebra, and the translation from Fox data.

use std::collections::BTreeMap;

use gt_algebra::{lyndon_basis, lyndon_coordinates, Context, LieElement, Rational, TensorElement, Word};
use gt_fox::{FoxPairing, QuasiDerivation};

use crate::error::{CocycleError, Result};
use crate::lie_sum::{sum_basis, LiePair, SumKey};

/// `ω: L → A` stored on the Lyndon basis and an alternating
/// `c: Λ²(L ⊕ L) → A` stored on ordered basis pairs, both up to the
/// truncation degree of the context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeCocycle {
    ctx: Context,
    omega: BTreeMap<Word, TensorElement>,
    c: BTreeMap<(SumKey, SumKey), TensorElement>,
}

impl RelativeCocycle {
    pub fn zero(ctx: &Context) -> Self {
        RelativeCocycle { ctx: ctx.clone(), omega: BTreeMap::new(), c: BTreeMap::new() }
    }

    /// Tabulates `omega` on the Lyndon basis and `c` on pairs `a < b` of the
    /// basis of `L ⊕ L`. `c` is assumed alternating and only read for `a < b`.
    pub fn from_fns(
        ctx: &Context,
        mut omega: impl FnMut(&LieElement) -> TensorElement,
        mut c: impl FnMut(&LiePair, &LiePair) -> TensorElement,
    ) -> Self {
        let n = ctx.max_degree();
        let mut omega_table = BTreeMap::new();
        for d in 1..=n {
            for e in lyndon_basis(ctx, d) {
                let v = omega(&e.element);
                if !v.is_zero() {
                    omega_table.insert(e.word, v);
                }
            }
        }
        let keys = sum_basis(ctx, n);
        let vectors: Vec<LiePair> = keys.iter().map(|k| LiePair::basis(ctx, k)).collect();
        let mut c_table = BTreeMap::new();
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                let v = c(&vectors[i], &vectors[j]);
                if !v.is_zero() {
                    c_table.insert((keys[i].clone(), keys[j].clone()), v);
                }
            }
        }
        RelativeCocycle { ctx: ctx.clone(), omega: omega_table, c: c_table }
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn omega_table(&self) -> &BTreeMap<Word, TensorElement> {
        &self.omega
    }

    pub fn c_table(&self) -> &BTreeMap<(SumKey, SumKey), TensorElement> {
        &self.c
    }

    pub fn omega(&self, x: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero(&self.ctx);
        for (letters, k) in lyndon_coordinates(x)? {
            let w = Word::new(letters, self.ctx.alphabet());
            if let Some(v) = self.omega.get(&w) {
                out.add_scaled(v, &k);
            }
        }
        Ok(out)
    }

    fn c_basis(&self, a: &SumKey, b: &SumKey) -> Option<(bool, &TensorElement)> {
        match a.cmp(b) {
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Less => self.c.get(&(a.clone(), b.clone())).map(|v| (false, v)),
            std::cmp::Ordering::Greater => self.c.get(&(b.clone(), a.clone())).map(|v| (true, v)),
        }
    }

    pub fn c(&self, v: &LiePair, w: &LiePair) -> Result<TensorElement> {
        let cv = v.coordinates()?;
        let cw = w.coordinates()?;
        let mut out = TensorElement::zero(&self.ctx);
        for (a, x) in &cv {
            for (b, y) in &cw {
                if let Some((flip, val)) = self.c_basis(a, b) {
                    let k: Rational = x * y;
                    out.add_scaled(val, &if flip { -k } else { k });
                }
            }
        }
        Ok(out)
    }
}

/// `c_ρ(v, w) = ρ(v_1, w_2) - ρ(w_1, v_2)`.
pub fn c_rho(rho: &FoxPairing, v: &LiePair, w: &LiePair) -> Result<TensorElement> {
    let a = rho.eval(v.left(), w.right())?;
    let b = rho.eval(w.left(), v.right())?;
    Ok(&a - &b)
}

/// Checks `q(ab) = q(a)b + a q(b) + ρ(a, b)` on every pair of words of total
/// degree at most `min(N, 4)`.
pub fn check_qder_of_negated(q: &QuasiDerivation, rho: &FoxPairing) -> Result<()> {
    let ctx = q.ctx();
    ctx.check_same(rho.ctx())?;
    let words = ctx.alphabet().words_up_to(ctx.max_degree().min(4));
    for u in words.iter().filter(|w| !w.is_empty()) {
        for v in words.iter().filter(|w| !w.is_empty() && u.degree() + w.degree() <= ctx.max_degree().min(4)) {
            let a = TensorElement::from_word(ctx, u.clone(), Rational::from_integer(1.into()));
            let b = TensorElement::from_word(ctx, v.clone(), Rational::from_integer(1.into()));
            let lhs = q.eval(&(&a * &b))?;
            let rhs = &(&(&q.eval(&a)? * &b) + &(&a * &q.eval(&b)?)) + &rho.eval(&a, &b)?;
            if lhs != rhs {
                return Err(CocycleError::IncompatiblePair(format!(
                    "q(ab) differs from q(a)b + aq(b) + ρ(a, b) at a = {}, b = {}",
                    u.display(ctx.alphabet()),
                    v.display(ctx.alphabet())
                )));
            }
        }
    }
    Ok(())
}

/// `(q, ρ) ↦ ω_q ⊕ c_ρ` with `ω_q(x) = q(x)`, for `q` associated to `-ρ`.
pub fn e_functor(q: &QuasiDerivation, rho: &FoxPairing) -> Result<RelativeCocycle> {
    check_qder_of_negated(q, rho)?;
    let ctx = q.ctx().clone();
    Ok(RelativeCocycle::from_fns(
        &ctx,
        |x| q.eval(x.tensor()).expect("same context"),
        |v, w| c_rho(rho, v, w).expect("same context"),
    ))
}

/// Outcome of a closedness check; the witness names the first failing input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedReport {
    pub closed: bool,
    pub degree: u32,
    pub witness: Option<String>,
}

/// Checks `dc = 0` on basis triples of `L ⊕ L` and `dω + Δ*c = 0` on basis
/// pairs of `L`, for inputs of total degree at most the truncation degree.
///
/// With the action `(x ⊕ y)·a = xa - ay`,
/// `dω(x, y) = x·ω(y) - y·ω(x) - ω([x, y])` where `L` acts through `Δ`.
pub fn check_relative_closed(z: &RelativeCocycle) -> Result<ClosedReport> {
    check_relative_closed_to(z, z.ctx.max_degree())
}

pub fn check_relative_closed_to(z: &RelativeCocycle, d: u32) -> Result<ClosedReport> {
    let ctx = &z.ctx;
    let alphabet = ctx.alphabet();
    let fail = |witness: String| Ok(ClosedReport { closed: false, degree: d, witness: Some(witness) });

    let mut lie: Vec<(Word, LieElement)> = Vec::new();
    for deg in 1..=d {
        lie.extend(lyndon_basis(ctx, deg).into_iter().map(|e| (e.word, e.element)));
    }
    for i in 0..lie.len() {
        for j in i + 1..lie.len() {
            if lie[i].0.degree() + lie[j].0.degree() > d {
                continue;
            }
            let (x, y) = (&lie[i].1, &lie[j].1);
            let (dx, dy) = (LiePair::diagonal(x.clone()), LiePair::diagonal(y.clone()));
            let xy = gt_algebra::lie_bracket(x, y)?;
            let d_omega = &(&dx.act(&z.omega(y.tensor())?)? - &dy.act(&z.omega(x.tensor())?)?) - &z.omega(xy.tensor())?;
            let total = &d_omega + &z.c(&dx, &dy)?;
            if !total.is_zero() {
                return fail(format!(
                    "dω + Δ*c is nonzero on ([{}], [{}]): {}",
                    lie[i].0.display(alphabet),
                    lie[j].0.display(alphabet),
                    total.display()
                ));
            }
        }
    }

    let keys = sum_basis(ctx, d);
    let vecs: Vec<LiePair> = keys.iter().map(|k| LiePair::basis(ctx, k)).collect();
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            for k in j + 1..keys.len() {
                if keys[i].degree() + keys[j].degree() + keys[k].degree() > d {
                    continue;
                }
                let (u, v, w) = (&vecs[i], &vecs[j], &vecs[k]);
                let mut total = TensorElement::zero(ctx);
                total = &total + &u.act(&z.c(v, w)?)?;
                total = &total - &v.act(&z.c(u, w)?)?;
                total = &total + &w.act(&z.c(u, v)?)?;
                total = &total - &z.c(&u.bracket(v)?, w)?;
                total = &total + &z.c(&u.bracket(w)?, v)?;
                total = &total - &z.c(&v.bracket(w)?, u)?;
                if !total.is_zero() {
                    return fail(format!("dc is nonzero on ({}, {}, {})", u.display(), v.display(), w.display()));
                }
            }
        }
    }
    Ok(ClosedReport { closed: true, degree: d, witness: None })
}
