//! Truncated elements of the free tensor algebra and its cocommutative Hopf
//! structure (concatenation product, shuffle-type coproduct on primitive
//! generators, antipode, counit).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::alphabet::{Context, Letter, Word};
use crate::error::{AlgebraError, Result};
use crate::rational::{rat, Rational};
use crate::square::TensorSquareElement;

/// A finite exact-rational combination of words of weighted degree at most
/// `max_degree`. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct TensorElement {
    ctx: Context,
    terms: BTreeMap<Word, Rational>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

pub(crate) fn accumulate<K: Eq + std::hash::Hash>(map: &mut HashMap<K, Rational>, k: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

pub(crate) fn add_into<K: Ord>(map: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

impl TensorElement {
    pub fn zero(ctx: &Context) -> Self {
        TensorElement { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Context) -> Self {
        Self::scalar(ctx, Rational::one())
    }

    pub fn scalar(ctx: &Context, c: Rational) -> Self {
        Self::from_word(ctx, Word::empty(), c)
    }

    pub fn generator(ctx: &Context, l: Letter) -> Self {
        Self::from_word(ctx, Word::letter(l, ctx.alphabet()), Rational::one())
    }

    /// Looks a generator up by name.
    pub fn named(ctx: &Context, name: &str) -> Result<Self> {
        Ok(Self::generator(ctx, ctx.letter(name)?))
    }

    /// A single term; dropped if the word exceeds the truncation bound.
    pub fn from_word(ctx: &Context, w: Word, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if w.degree() <= ctx.max_degree() && !c.is_zero() {
            terms.insert(w, c);
        }
        TensorElement { ctx: ctx.clone(), terms }
    }

    /// Sums the given terms, merging repeated words and truncating.
    pub fn from_terms(ctx: &Context, terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            if w.degree() <= ctx.max_degree() {
                add_into(&mut map, w, c);
            }
        }
        TensorElement { ctx: ctx.clone(), terms: map }
    }

    pub(crate) fn from_hash(ctx: &Context, map: HashMap<Word, Rational>) -> Self {
        let terms = map
            .into_iter()
            .filter(|(w, c)| !c.is_zero() && w.degree() <= ctx.max_degree())
            .collect();
        TensorElement { ctx: ctx.clone(), terms }
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn max_degree(&self) -> u32 {
        self.ctx.max_degree()
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
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Word::degree).min()
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(w, _)| w.degree() == d).map(|(w, c)| (w.clone(), c.clone())).collect();
        TensorElement { ctx: self.ctx.clone(), terms }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Word::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Moves the element into another truncation of the same alphabet,
    /// dropping terms above the new bound.
    pub fn retruncate(&self, max_degree: u32) -> Self {
        let ctx = self.ctx.with_max_degree(max_degree);
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.degree() <= max_degree)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        TensorElement { ctx, terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        TensorElement { ctx: self.ctx.clone(), terms }
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if w.degree() <= self.ctx.max_degree() {
            add_into(&mut self.terms, w, c);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Rational) {
        debug_assert!(self.ctx == other.ctx);
        for (w, x) in &other.terms {
            add_into(&mut self.terms, w.clone(), x * c);
        }
    }

    pub fn try_add(&self, other: &TensorElement) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_into(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &TensorElement) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_into(&mut out.terms, w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Concatenation product; terms above the truncation bound are dropped.
    pub fn product(&self, other: &TensorElement) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &TensorElement) -> Self {
        let n = self.ctx.max_degree();
        let mut acc: HashMap<Word, Rational> = HashMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.degree() + v.degree() <= n {
                    accumulate(&mut acc, u.concat(v), a * b);
                }
            }
        }
        Self::from_hash(&self.ctx, acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.ctx);
        for _ in 0..k {
            out = out.mul_unchecked(self);
        }
        out
    }

    /// Coefficient of the empty word.
    pub fn counit(&self) -> Rational {
        self.coeff(&Word::empty())
    }

    /// `D(a) = a - ε(a)`.
    pub fn augmentation_part(&self) -> Self {
        let mut out = self.clone();
        out.terms.remove(&Word::empty());
        out
    }

    /// `S(w_1…w_k) = (-1)^k w_k…w_1`.
    pub fn antipode(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let c = if w.len() % 2 == 1 { -c.clone() } else { c.clone() };
                (w.reversed(), c)
            })
            .collect();
        TensorElement { ctx: self.ctx.clone(), terms }
    }

    /// The coproduct in which every generator is primitive: a word splits
    /// into each (subsequence, complementary subsequence) pair.
    pub fn coproduct(&self) -> TensorSquareElement {
        let alphabet = self.ctx.alphabet().clone();
        let mut acc: HashMap<(Word, Word), Rational> = HashMap::new();
        for (w, c) in &self.terms {
            let k = w.len();
            assert!(k < 31, "word too long for coproduct expansion");
            for mask in 0u32..(1u32 << k) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                let mut dl = 0;
                for (i, &l) in w.letters().iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        left.push(l);
                        dl += alphabet.degree(l);
                    } else {
                        right.push(l);
                    }
                }
                let lw = Word::from_parts(left, dl);
                let rw = Word::from_parts(right, w.degree() - dl);
                accumulate(&mut acc, (lw, rw), c.clone());
            }
        }
        TensorSquareElement::from_hash(&self.ctx, acc)
    }

    /// Truncated exponential series; needs zero counit.
    pub fn exp_truncated(&self) -> Result<Self> {
        let e = self.counit();
        if !e.is_zero() {
            return Err(AlgebraError::NonAugmentedInput(e.to_string()));
        }
        let mut out = Self::one(&self.ctx);
        let mut power = Self::one(&self.ctx);
        let mut k = 1i64;
        loop {
            power = power.mul_unchecked(self).scale(&Rational::new(1.into(), k.into()));
            if power.is_zero() {
                break;
            }
            out = &out + &power;
            k += 1;
        }
        Ok(out)
    }

    /// Inverse via the geometric series: writing `a = c(1 + u)` with
    /// `ε(u) = 0`, `a^{-1} = c^{-1} Σ (-u)^k`.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.counit();
        if c.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let cinv = c.recip();
        let minus_u = (&Self::one(&self.ctx) - &self.scale(&cinv)).clone();
        let mut out = Self::one(&self.ctx);
        let mut power = Self::one(&self.ctx);
        loop {
            power = power.mul_unchecked(&minus_u);
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out.scale(&cinv))
    }

    /// Applies a linear map given on words.
    pub fn map_words(&self, ctx: &Context, mut f: impl FnMut(&Word) -> TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(ctx);
        for (w, c) in &self.terms {
            let img = f(w);
            out.add_scaled(&img, c);
        }
        out
    }

    /// The algebra homomorphism sending generator `l` to `images[l]`.
    pub fn substitute(&self, images: &[TensorElement]) -> Result<TensorElement> {
        let target = images
            .first()
            .map(|e| e.ctx.clone())
            .ok_or_else(|| AlgebraError::ContextMismatch("empty image table".into()))?;
        if images.len() != self.ctx.alphabet().len() {
            return Err(AlgebraError::ContextMismatch("image table size differs from alphabet".into()));
        }
        for im in images {
            target.check_same(&im.ctx)?;
        }
        let mut cache: HashMap<Vec<Letter>, TensorElement> = HashMap::new();
        let mut out = TensorElement::zero(&target);
        for (w, c) in &self.terms {
            let img = substitute_word(w.letters(), images, &target, &mut cache);
            out.add_scaled(&img, c);
        }
        Ok(out)
    }

    pub fn display(&self) -> ElementDisplay<'_> {
        ElementDisplay { e: self }
    }
}

fn substitute_word(
    letters: &[Letter],
    images: &[TensorElement],
    target: &Context,
    cache: &mut HashMap<Vec<Letter>, TensorElement>,
) -> TensorElement {
    if letters.is_empty() {
        return TensorElement::one(target);
    }
    if let Some(v) = cache.get(letters) {
        return v.clone();
    }
    let (last, init) = letters.split_last().expect("nonempty");
    let head = substitute_word(init, images, target, cache);
    let v = head.mul_unchecked(&images[*last as usize]);
    cache.insert(letters.to_vec(), v.clone());
    v
}

impl Add for &TensorElement {
    type Output = TensorElement;
    /// Panics on a context mismatch; use [`TensorElement::try_add`] to recover.
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.product(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&rat(-1))
    }
}

/// Canonical text form, e.g. `3/2*x1.y1 - z1`.
pub struct ElementDisplay<'a> {
    e: &'a TensorElement,
}

pub(crate) fn write_terms<'t, K: 't>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'t K, &'t Rational)>,
    mut body: impl FnMut(&mut fmt::Formatter<'_>, &K, &Rational) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let neg = c.is_negative();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        body(f, k, &c.abs())?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = self.e.ctx.alphabet().clone();
        write_terms(f, self.e.terms.iter(), |f, w, c| {
            if w.is_empty() {
                write!(f, "{c}")
            } else if c.is_one() {
                write!(f, "{}", w.display(&alphabet))
            } else {
                write!(f, "{c}*{}", w.display(&alphabet))
            }
        })
    }
}
