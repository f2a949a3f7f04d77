//! Algebra maps between truncated tensor algebras, Fox derivatives mediated
//! by them, and the constraint that makes `(f, ∂_L ⊕ ∂_R)` a morphism of Fox
//! data.

use gt_algebra::{Context, Letter, Rational, TensorElement, Word};
use gt_fox::{FoxPairing, QuasiDerivation, Side};

use crate::error::Result;

/// The algebra map sending generator `l` of the source to `images[l]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    source: Context,
    target: Context,
    images: Vec<TensorElement>,
}

impl AlgebraMap {
    pub fn new(source: &Context, images: Vec<TensorElement>) -> Result<Self> {
        let target = images.first().map(|e| e.ctx().clone()).unwrap_or_else(|| source.clone());
        if images.len() != source.alphabet().len() {
            return Err(gt_algebra::AlgebraError::ContextMismatch("image table size differs from alphabet".into()).into());
        }
        for im in &images {
            target.check_same(im.ctx())?;
        }
        Ok(AlgebraMap { source: source.clone(), target, images })
    }

    pub fn identity(ctx: &Context) -> Self {
        let images = ctx.alphabet().letters().map(|l| TensorElement::generator(ctx, l)).collect();
        AlgebraMap { source: ctx.clone(), target: ctx.clone(), images }
    }

    pub fn source(&self) -> &Context {
        &self.source
    }

    pub fn target(&self) -> &Context {
        &self.target
    }

    pub fn image(&self, l: Letter) -> &TensorElement {
        &self.images[l as usize]
    }

    pub fn apply(&self, a: &TensorElement) -> Result<TensorElement> {
        self.source.check_same(a.ctx())?;
        Ok(a.substitute(&self.images)?)
    }

    pub fn apply_word(&self, w: &Word) -> TensorElement {
        let mut out = TensorElement::one(&self.target);
        for &l in w.letters() {
            out = &out * &self.images[l as usize];
        }
        out
    }
}

/// A Fox derivative along `f`: `∂(ab) = ∂(a)ε(b) + f(a)∂(b)` on the left,
/// `∂(ab) = ∂(a)f(b) + ε(a)∂(b)` on the right, stored on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MediatedFox {
    map: AlgebraMap,
    side: Side,
    table: Vec<TensorElement>,
}

impl MediatedFox {
    pub fn from_fn(map: &AlgebraMap, side: Side, f: impl FnMut(Letter) -> TensorElement) -> Self {
        let table = map.source.alphabet().letters().map(f).collect();
        MediatedFox { map: map.clone(), side, table }
    }

    pub fn zero(map: &AlgebraMap, side: Side) -> Self {
        let target = map.target.clone();
        Self::from_fn(map, side, |_| TensorElement::zero(&target))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn value(&self, l: Letter) -> &TensorElement {
        &self.table[l as usize]
    }

    pub fn eval_word(&self, w: &Word) -> TensorElement {
        let letters = w.letters();
        let alphabet = self.map.source.alphabet();
        if letters.is_empty() {
            return TensorElement::zero(&self.map.target);
        }
        match self.side {
            Side::Left => {
                let k = letters.len() - 1;
                &self.map.apply_word(&Word::new(letters[..k].to_vec(), alphabet)) * &self.table[letters[k] as usize]
            }
            Side::Right => {
                &self.table[letters[0] as usize] * &self.map.apply_word(&Word::new(letters[1..].to_vec(), alphabet))
            }
        }
    }

    pub fn eval(&self, a: &TensorElement) -> Result<TensorElement> {
        self.map.source.check_same(a.ctx())?;
        Ok(a.map_words(&self.map.target, |w| self.eval_word(w)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub holds: bool,
    pub degree: u32,
    pub witness: Option<String>,
}

fn low_part(a: &TensorElement, d: u32) -> TensorElement {
    TensorElement::from_terms(a.ctx(), a.iter().filter(|(w, _)| w.degree() <= d).map(|(w, c)| (w.clone(), c.clone())))
}

/// Checks, on all source words `a`, `b` with `deg a + deg b ≤ d`,
///
/// * `q'(f(a)) - f(q(a)) = ∂_L(a) + ∂_R(a)`
/// * `ρ'(f(a), f(b)) - f(ρ(a, b)) = -(∂_L(a) D(f b) + D(f a) ∂_R(b))`
///
/// comparing components of degree at most `d`. The second identity is the
/// Leibniz defect of the first: with `q(ab) = q(a)b + a q(b) + ρ(a, b)` the
/// defect of `∂_L + ∂_R` is `-τ`. Contexts should be truncated at least
/// `d` plus the largest degree drop of the maps involved, so that every
/// compared component is computed exactly.
pub fn check_fox_morphism(
    f: &AlgebraMap,
    dl: &MediatedFox,
    dr: &MediatedFox,
    source: (&QuasiDerivation, &FoxPairing),
    target: (&QuasiDerivation, &FoxPairing),
    d: u32,
) -> Result<MorphismReport> {
    let (q, rho) = source;
    let (q2, rho2) = target;
    f.source.check_same(q.ctx())?;
    f.target.check_same(q2.ctx())?;
    let alphabet = f.source.alphabet();
    let one = Rational::from_integer(1.into());
    let words: Vec<Word> = alphabet.words_up_to(d).into_iter().filter(|w| !w.is_empty()).collect();
    let fail = |witness: String| Ok(MorphismReport { holds: false, degree: d, witness: Some(witness) });

    let aug = |x: &TensorElement| x - &TensorElement::scalar(x.ctx(), x.counit());
    let mut images = Vec::with_capacity(words.len());
    for u in &words {
        let a = TensorElement::from_word(&f.source, u.clone(), one.clone());
        let fa = f.apply(&a)?;
        let lhs = &q2.eval(&fa)? - &f.apply(&q.eval(&a)?)?;
        let rhs = &dl.eval(&a)? + &dr.eval(&a)?;
        let diff = low_part(&(&lhs - &rhs), d);
        if !diff.is_zero() {
            return fail(format!("q' f - f q differs from ∂_L + ∂_R at {}: {}", u.display(alphabet), diff.display()));
        }
        images.push((a, fa));
    }
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if u.degree() + v.degree() > d {
                continue;
            }
            let (a, fa) = &images[i];
            let (b, fb) = &images[j];
            let lhs = &rho2.eval(fa, fb)? - &f.apply(&rho.eval(a, b)?)?;
            let tau = &(&dl.eval(a)? * &aug(fb)) + &(&aug(fa) * &dr.eval(b)?);
            let diff = low_part(&(&lhs + &tau), d);
            if !diff.is_zero() {
                return fail(format!(
                    "ρ'(f ⊗ f) - fρ differs from -τ at ({}, {}): {}",
                    u.display(alphabet),
                    v.display(alphabet),
                    diff.display()
                ));
            }
        }
    }
    Ok(MorphismReport { holds: true, degree: d, witness: None })
}
