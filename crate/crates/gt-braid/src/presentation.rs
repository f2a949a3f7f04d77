//! Graded Lie algebras given by generators, homogeneous relations and a list
//! of central generators.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use gt_algebra::{Alphabet, Letter, LieExpr, Rational};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{BraidError, Result};

/// `[a, b]` as an expression.
pub fn br(a: LieExpr, b: LieExpr) -> LieExpr {
    LieExpr::bracket(a, b)
}

/// `Σ c·g` over generators, dropping zero coefficients.
pub fn linear(terms: impl IntoIterator<Item = (Rational, Letter)>) -> LieExpr {
    LieExpr::Sum(terms.into_iter().filter(|(c, _)| !c.is_zero()).map(|(c, l)| (c, LieExpr::Gen(l))).collect())
}

/// `Σ g` over generators.
pub fn sum_of(letters: impl IntoIterator<Item = Letter>) -> LieExpr {
    linear(letters.into_iter().map(|l| (Rational::one(), l)))
}

/// Letters occurring in an expression, including those with zero
/// coefficient.
pub fn letters_of(e: &LieExpr) -> BTreeSet<Letter> {
    fn walk(e: &LieExpr, out: &mut BTreeSet<Letter>) {
        match e {
            LieExpr::Gen(l) => {
                out.insert(*l);
            }
            LieExpr::Bracket(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            LieExpr::Sum(ts) => ts.iter().for_each(|(_, t)| walk(t, out)),
        }
    }
    let mut out = BTreeSet::new();
    walk(e, &mut out);
    out
}

/// Substitutes generators, with `None` standing for zero. Brackets with a
/// zero side and empty sums collapse, so the result is `None` exactly when
/// the expression became syntactically zero.
pub fn substitute(e: &LieExpr, f: &mut impl FnMut(Letter) -> Option<LieExpr>) -> Option<LieExpr> {
    match e {
        LieExpr::Gen(l) => f(*l),
        LieExpr::Bracket(a, b) => {
            let a = substitute(a, f)?;
            let b = substitute(b, f)?;
            Some(LieExpr::bracket(a, b))
        }
        LieExpr::Sum(ts) => {
            let terms: Vec<(Rational, LieExpr)> = ts
                .iter()
                .filter(|(c, _)| !c.is_zero())
                .filter_map(|(c, t)| substitute(t, f).map(|t| (c.clone(), t)))
                .collect();
            (!terms.is_empty()).then_some(LieExpr::Sum(terms))
        }
    }
}

/// True when the expression is syntactically zero (every branch ends in an
/// empty sum or a zero coefficient).
pub fn is_trivially_zero(e: &LieExpr) -> bool {
    substitute(e, &mut |l| Some(LieExpr::Gen(l))).is_none()
}

#[derive(Clone, Debug)]
pub struct GradedPresentation {
    alphabet: Arc<Alphabet>,
    relations: Vec<LieExpr>,
    central: Vec<Letter>,
}

impl GradedPresentation {
    /// Relations that are syntactically zero are dropped; the others must be
    /// homogeneous.
    pub fn new(alphabet: Arc<Alphabet>, relations: Vec<LieExpr>, central: Vec<Letter>) -> Result<Self> {
        let n = alphabet.len();
        let mut kept = Vec::with_capacity(relations.len());
        for r in relations {
            if let Some(&l) = letters_of(&r).iter().find(|&&l| l as usize >= n) {
                return Err(BraidError::InvalidPresentation(format!("letter {l} is not in the alphabet")));
            }
            if is_trivially_zero(&r) {
                continue;
            }
            if r.degree(&alphabet).is_none() {
                return Err(BraidError::InhomogeneousInput(r.display(&alphabet).to_string()));
            }
            kept.push(r);
        }
        if let Some(&l) = central.iter().find(|&&l| l as usize >= n) {
            return Err(BraidError::InvalidPresentation(format!("central letter {l} is not in the alphabet")));
        }
        let mut seen = BTreeSet::new();
        let central = central.into_iter().filter(|l| seen.insert(*l)).collect();
        Ok(GradedPresentation { alphabet, relations: kept, central })
    }

    /// The free Lie algebra on the alphabet.
    pub fn free(alphabet: Arc<Alphabet>) -> Self {
        GradedPresentation { alphabet, relations: Vec::new(), central: Vec::new() }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn relations(&self) -> &[LieExpr] {
        &self.relations
    }

    pub fn central(&self) -> &[Letter] {
        &self.central
    }

    pub fn generator(&self, name: &str) -> Result<Letter> {
        self.alphabet.letter(name).ok_or_else(|| gt_algebra::AlgebraError::UnknownGenerator(name.to_string()).into())
    }

    /// The relations followed by `[c, h]` for every central `c` (in list
    /// order) and every other generator `h` (in alphabet order).
    pub fn expanded_relations(&self) -> Vec<LieExpr> {
        let mut out = self.relations.clone();
        for &c in &self.central {
            for h in self.alphabet.letters().filter(|&h| h != c) {
                out.push(br(LieExpr::Gen(c), LieExpr::Gen(h)));
            }
        }
        out
    }

    pub fn with_relations(&self, extra: impl IntoIterator<Item = LieExpr>) -> Result<Self> {
        let mut relations = self.relations.clone();
        relations.extend(extra);
        GradedPresentation::new(self.alphabet.clone(), relations, self.central.clone())
    }

    /// The presentation on the generators `keep` (in the given order) with
    /// every relation whose letters lie in `keep ∪ killed`, after setting the
    /// `killed` generators to zero. Returns the map from old to new letters.
    pub fn restrict(&self, keep: &[Letter], killed: &[Letter]) -> Result<(GradedPresentation, BTreeMap<Letter, Letter>)> {
        let map: BTreeMap<Letter, Letter> = keep.iter().enumerate().map(|(i, &l)| (l, i as Letter)).collect();
        if map.len() != keep.len() || keep.iter().any(|l| killed.contains(l)) {
            return Err(BraidError::InvalidPresentation("repeated generator in restriction".into()));
        }
        let alphabet =
            Alphabet::new(keep.iter().map(|&l| (self.alphabet.name(l).to_string(), self.alphabet.degree(l))))?;
        let allowed = |l: &Letter| map.contains_key(l) || killed.contains(l);
        let mut relations = Vec::new();
        for r in self.expanded_relations() {
            if !letters_of(&r).iter().all(allowed) {
                continue;
            }
            if let Some(r) = substitute(&r, &mut |l| map.get(&l).map(|&m| LieExpr::Gen(m))) {
                relations.push(r);
            }
        }
        Ok((GradedPresentation::new(alphabet, relations, Vec::new())?, map))
    }

    /// Declarative form: generator names and degrees, relations as bracket
    /// expressions, and the central list.
    pub fn schema(&self) -> PresentationSchema {
        let a = &self.alphabet;
        PresentationSchema {
            generators: a.letters().map(|l| GeneratorSchema { name: a.name(l).to_string(), degree: a.degree(l) }).collect(),
            relations: self.relations.iter().map(|r| r.display(a).to_string()).collect(),
            central: self.central.iter().map(|&l| a.name(l).to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSchema {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSchema {
    pub generators: Vec<GeneratorSchema>,
    pub relations: Vec<String>,
    pub central: Vec<String>,
}
