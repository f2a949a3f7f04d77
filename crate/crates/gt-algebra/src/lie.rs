//! The free Lie algebra inside the tensor algebra: formal bracket
//! expressions, certified primitive elements, and the Lyndon basis.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Context, Letter, Word};
use crate::error::{AlgebraError, Result};
use crate::rational::Rational;
use crate::tensor::TensorElement;

/// A formal Lie expression over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieExpr {
    Gen(Letter),
    Bracket(Box<LieExpr>, Box<LieExpr>),
    /// A linear combination; the empty sum is zero.
    Sum(Vec<(Rational, LieExpr)>),
}

impl LieExpr {
    pub fn gen(l: Letter) -> Self {
        LieExpr::Gen(l)
    }

    pub fn bracket(a: LieExpr, b: LieExpr) -> Self {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn zero() -> Self {
        LieExpr::Sum(Vec::new())
    }

    pub fn sum(terms: Vec<(Rational, LieExpr)>) -> Self {
        LieExpr::Sum(terms)
    }

    /// Weighted degree if every summand has the same one; `None` for an
    /// inhomogeneous or empty expression.
    pub fn degree(&self, alphabet: &Alphabet) -> Option<u32> {
        match self {
            LieExpr::Gen(l) => Some(alphabet.degree(*l)),
            LieExpr::Bracket(a, b) => Some(a.degree(alphabet)? + b.degree(alphabet)?),
            LieExpr::Sum(ts) => {
                let mut d = None;
                for (_, t) in ts {
                    let e = t.degree(alphabet)?;
                    match d {
                        None => d = Some(e),
                        Some(x) if x != e => return None,
                        _ => {}
                    }
                }
                d
            }
        }
    }

    /// Expands into the tensor algebra (`[a, b] = ab - ba`).
    pub fn to_tensor(&self, ctx: &Context) -> TensorElement {
        match self {
            LieExpr::Gen(l) => TensorElement::generator(ctx, *l),
            LieExpr::Bracket(a, b) => {
                let a = a.to_tensor(ctx);
                let b = b.to_tensor(ctx);
                &(&a * &b) - &(&b * &a)
            }
            LieExpr::Sum(ts) => {
                let mut out = TensorElement::zero(ctx);
                for (c, t) in ts {
                    out.add_scaled(&t.to_tensor(ctx), c);
                }
                out
            }
        }
    }

    /// Generic evaluation in any Lie algebra given generator images, a
    /// bracket, and linear operations.
    pub fn evaluate<T: Clone>(
        &self,
        gen: &mut impl FnMut(Letter) -> T,
        bracket: &mut impl FnMut(&T, &T) -> T,
        lin: &mut impl FnMut(Vec<(Rational, T)>) -> T,
    ) -> T {
        match self {
            LieExpr::Gen(l) => gen(*l),
            LieExpr::Bracket(a, b) => {
                let a = a.evaluate(gen, bracket, lin);
                let b = b.evaluate(gen, bracket, lin);
                bracket(&a, &b)
            }
            LieExpr::Sum(ts) => {
                let parts = ts.iter().map(|(c, t)| (c.clone(), t.evaluate(gen, bracket, lin))).collect();
                lin(parts)
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> LieExprDisplay<'a> {
        LieExprDisplay { e: self, alphabet }
    }
}

pub struct LieExprDisplay<'a> {
    e: &'a LieExpr,
    alphabet: &'a Alphabet,
}

impl fmt::Display for LieExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.e {
            LieExpr::Gen(l) => f.write_str(self.alphabet.name(*l)),
            LieExpr::Bracket(a, b) => {
                write!(f, "[{}, {}]", a.display(self.alphabet), b.display(self.alphabet))
            }
            LieExpr::Sum(ts) => {
                if ts.is_empty() {
                    return f.write_str("0");
                }
                for (i, (c, t)) in ts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    if c.is_one() {
                        write!(f, "{}", t.display(self.alphabet))?;
                    } else {
                        write!(f, "({c})*{}", t.display(self.alphabet))?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// A tensor element known to be primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    tensor: TensorElement,
}

impl LieElement {
    /// Certifies `t` by checking `Δt = t ⊗ 1 + 1 ⊗ t` within the truncation.
    pub fn from_primitive(t: TensorElement) -> Result<Self> {
        if is_primitive(&t) {
            Ok(LieElement { tensor: t })
        } else {
            Err(AlgebraError::NotPrimitive)
        }
    }

    pub fn from_expr(ctx: &Context, e: &LieExpr) -> Self {
        LieElement { tensor: e.to_tensor(ctx) }
    }

    pub fn generator(ctx: &Context, l: Letter) -> Self {
        LieElement { tensor: TensorElement::generator(ctx, l) }
    }

    pub fn zero(ctx: &Context) -> Self {
        LieElement { tensor: TensorElement::zero(ctx) }
    }

    pub fn tensor(&self) -> &TensorElement {
        &self.tensor
    }

    pub fn into_tensor(self) -> TensorElement {
        self.tensor
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LieElement { tensor: self.tensor.scale(c) }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(LieElement { tensor: self.tensor.try_add(&other.tensor)? })
    }
}

/// `[a, b] = ab - ba`.
pub fn lie_bracket(a: &LieElement, b: &LieElement) -> Result<LieElement> {
    let ab = a.tensor.product(&b.tensor)?;
    let ba = b.tensor.product(&a.tensor)?;
    Ok(LieElement { tensor: ab.try_sub(&ba)? })
}

/// Commutator of arbitrary tensor elements.
pub fn commutator(a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
    a.product(b)?.try_sub(&b.product(a)?)
}

pub fn is_primitive(t: &TensorElement) -> bool {
    let ctx = t.ctx();
    let one = TensorElement::one(ctx);
    let expected = crate::square::TensorSquareElement::tensor(t, &one)
        .and_then(|a| a.try_add(&crate::square::TensorSquareElement::tensor(&one, t).expect("same ctx")))
        .expect("same ctx");
    t.coproduct() == expected
}

/// Lyndon test: strictly smaller than each proper suffix (pure lexicographic
/// order on letter indices).
pub fn is_lyndon(w: &[Letter]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|i| w < &w[i..])
}

/// All Lyndon words of weighted degree `d`, in lexicographic order.
pub fn lyndon_words(alphabet: &Alphabet, d: u32) -> Vec<Word> {
    let mut out: Vec<Word> = alphabet.words_of_degree(d).into_iter().filter(|w| is_lyndon(w.letters())).collect();
    out.sort_by(|a, b| a.letters().cmp(b.letters()));
    out
}

/// Standard bracketing: `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_bracketing(w: &[Letter]) -> LieExpr {
    if w.len() == 1 {
        return LieExpr::Gen(w[0]);
    }
    let split = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("Lyndon words of length >= 2 split");
    LieExpr::bracket(standard_bracketing(&w[..split]), standard_bracketing(&w[split..]))
}

/// One Lyndon basis element: the word and its bracketing.
#[derive(Clone, Debug)]
pub struct LyndonElement {
    pub word: Word,
    pub expr: LieExpr,
    pub element: LieElement,
}

/// The standard-bracketing Lyndon basis of the weighted degree-`d` part of
/// the free Lie algebra, in lexicographic order of the Lyndon words.
pub fn lyndon_basis(ctx: &Context, d: u32) -> Vec<LyndonElement> {
    lyndon_words(ctx.alphabet(), d)
        .into_iter()
        .map(|w| {
            let expr = standard_bracketing(w.letters());
            let element = LieElement::from_expr(ctx, &expr);
            LyndonElement { word: w, expr, element }
        })
        .collect()
}

/// Coordinates of a homogeneous Lie polynomial in the Lyndon basis, keyed by
/// Lyndon word. Uses triangularity: the least word of the standard bracketing
/// of a Lyndon word `w` is `w` itself, with coefficient 1.
pub fn lyndon_coordinates(t: &TensorElement) -> Result<BTreeMap<Vec<Letter>, Rational>> {
    let ctx = t.ctx();
    let mut rest = t.clone();
    let mut out = BTreeMap::new();
    while let Some((w, c)) = rest.iter().min_by(|a, b| a.0.letters().cmp(b.0.letters())).map(|(w, c)| (w.clone(), c.clone())) {
        if !is_lyndon(w.letters()) {
            return Err(AlgebraError::NotPrimitive);
        }
        let p = standard_bracketing(w.letters()).to_tensor(ctx);
        debug_assert!(p.coeff(&w).is_one());
        rest.add_scaled(&p, &-c.clone());
        if !c.is_zero() {
            out.insert(w.letters().to_vec(), c);
        }
    }
    Ok(out)
}

/// Dimension of the weighted degree-`d` part of the free Lie algebra via the
/// necklace (Witt) formula for weighted alphabets.
pub fn free_lie_dimension(alphabet: &Alphabet, d: u32) -> u64 {
    let d = d as usize;
    // words[n] = number of words of weighted degree n
    let mut words = vec![0i128; d + 1];
    words[0] = 1;
    for n in 1..=d {
        for l in alphabet.letters() {
            let k = alphabet.degree(l) as usize;
            if k <= n {
                words[n] += words[n - k];
            }
        }
    }
    // n * c_n = sum_i i * p_i * words[n - i], with p_i = #generators of weight i
    let mut p = vec![0i128; d + 1];
    for l in alphabet.letters() {
        let k = alphabet.degree(l) as usize;
        if k <= d {
            p[k] += 1;
        }
    }
    let nc: Vec<i128> = (0..=d).map(|n| (1..=n).map(|i| i as i128 * p[i] * words[n - i]).sum()).collect();
    if d == 0 {
        return 0;
    }
    let total: i128 = nc.iter().enumerate().skip(1).filter(|(k, _)| d % k == 0).map(|(k, c)| mobius(d / k) * c).sum();
    (total / d as i128) as u64
}

fn mobius(mut n: usize) -> i128 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}
