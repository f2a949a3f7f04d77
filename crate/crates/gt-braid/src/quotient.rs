//! Degreewise quotients of free graded Lie algebras.
//!
//! Degree `d` is built from the degrees below it. Every element of degree
//! `d` is a combination of *tails*: the generators of degree `d` and formal
//! brackets `[g, b]`, where `g` is a generator that survived as a basis
//! element and `b` is a basis element of degree `d - deg g`. A product of two
//! basis elements landing in degree `d` is expanded into tails through the
//! Jacobi identity, using that every non-generator basis element is itself a
//! tail `[g, b']`. The tails are then cut down by antisymmetry and Jacobi on
//! basis pairs and triples and by the relations of degree `d`; the tails that
//! carry no pivot form the basis of the component.
//!
//! Only the quotient is ever stored, so the cost follows the dimensions of
//! the quotient rather than those of the free Lie algebra.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use gt_algebra::{lyndon_coordinates, standard_bracketing, Alphabet, EchelonBasis, Letter, LieElement, LieExpr, Rational, SparseVec};
use num_traits::{One, Zero};

use crate::error::{BraidError, Result};
use crate::presentation::GradedPresentation;

/// A basis element: `(degree, index)`.
pub type Key = (u32, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Tail {
    Gen(Letter),
    Br(Letter, usize),
}

/// How a basis element arises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definition {
    Generator(Letter),
    /// `[generator, b]` with `b` the basis element `with` of degree
    /// `d - deg generator`.
    Bracket { generator: Letter, with: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub definition: Definition,
    /// A representative in the free Lie algebra.
    pub expr: LieExpr,
}

/// One graded piece of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComponent {
    pub degree: u32,
    /// Number of candidate tails before reduction.
    pub tails: usize,
    /// Rank of the linear conditions imposed on the tails.
    pub relation_rank: usize,
    pub basis: Vec<BasisElement>,
}

impl DegreeComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// A homogeneous element of the quotient in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientElement {
    Zero,
    Homogeneous { degree: u32, coords: SparseVec },
}

fn add_scaled(acc: &mut SparseVec, v: &SparseVec, c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

fn unit(k: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(k, Rational::one());
    v
}

fn neg(v: SparseVec) -> SparseVec {
    v.into_iter().map(|(k, x)| (k, -x)).collect()
}

impl QuotientElement {
    pub fn new(degree: u32, mut coords: SparseVec) -> Self {
        coords.retain(|_, c| !c.is_zero());
        if coords.is_empty() {
            QuotientElement::Zero
        } else {
            QuotientElement::Homogeneous { degree, coords }
        }
    }

    pub fn basis(key: Key) -> Self {
        QuotientElement::Homogeneous { degree: key.0, coords: unit(key.1) }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, QuotientElement::Zero)
    }

    pub fn degree(&self) -> Option<u32> {
        match self {
            QuotientElement::Zero => None,
            QuotientElement::Homogeneous { degree, .. } => Some(*degree),
        }
    }

    /// Coordinates; empty for zero.
    pub fn coords(&self) -> SparseVec {
        match self {
            QuotientElement::Zero => SparseVec::new(),
            QuotientElement::Homogeneous { coords, .. } => coords.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        match self {
            QuotientElement::Homogeneous { degree, coords } if !c.is_zero() => {
                QuotientElement::Homogeneous { degree: *degree, coords: coords.iter().map(|(k, x)| (*k, x * c)).collect() }
            }
            _ => QuotientElement::Zero,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (QuotientElement::Zero, x) | (x, QuotientElement::Zero) => Ok(x.clone()),
            (QuotientElement::Homogeneous { degree: d1, coords: a }, QuotientElement::Homogeneous { degree: d2, coords: b }) => {
                if d1 != d2 {
                    return Err(BraidError::InhomogeneousInput(format!("sum of degrees {d1} and {d2}")));
                }
                let mut out = a.clone();
                add_scaled(&mut out, b, &Rational::one());
                Ok(QuotientElement::new(*d1, out))
            }
        }
    }
}

struct State {
    alphabet: Arc<Alphabet>,
    relations: BTreeMap<u32, Vec<LieExpr>>,
    comps: Vec<Arc<DegreeComponent>>,
    gen_class: Vec<Option<QuotientElement>>,
    /// Generators that are basis elements, with their index.
    essential: BTreeMap<Letter, usize>,
    products: HashMap<(Key, Key), SparseVec>,
}

struct StepOutput {
    component: DegreeComponent,
    products: Vec<((Key, Key), SparseVec)>,
    gen_class: Vec<(Letter, QuotientElement)>,
    essential: Vec<(Letter, usize)>,
}

struct Step<'a> {
    d: u32,
    state: &'a State,
    tails: Vec<Tail>,
    tail_index: HashMap<Tail, usize>,
    memo: HashMap<(Key, Key), SparseVec>,
}

impl Step<'_> {
    fn dim(&self, e: u32) -> usize {
        self.state.comps[e as usize - 1].dim()
    }

    fn definition(&self, k: Key) -> &Definition {
        &self.state.comps[k.0 as usize - 1].basis[k.1].definition
    }

    fn low(&self, b: Key, c: Key) -> &SparseVec {
        &self.state.products[&(b, c)]
    }

    /// `[g, v]` for an essential generator `g` and `v` in degree `d - deg g`.
    fn gen_bracket(&self, g: Letter, v: &SparseVec) -> SparseVec {
        v.iter().map(|(k, x)| (self.tail_index[&Tail::Br(g, *k)], x.clone())).collect()
    }

    /// `[b, c]` in tail coordinates, for basis elements with degrees adding
    /// up to `d`.
    fn prod(&mut self, b: Key, c: Key) -> SparseVec {
        if let Some(v) = self.memo.get(&(b, c)) {
            return v.clone();
        }
        let v = match (self.definition(b).clone(), self.definition(c).clone()) {
            (Definition::Generator(g), _) => unit(self.tail_index[&Tail::Br(g, c.1)]),
            (_, Definition::Generator(h)) => neg(unit(self.tail_index[&Tail::Br(h, b.1)])),
            (Definition::Bracket { generator: g, with }, _) if b.0 <= c.0 => {
                // [[g, b'], c] = [g, [b', c]] + [[g, c], b']
                let eg = self.state.alphabet.degree(g);
                let bp = (b.0 - eg, with);
                let gk = (eg, self.state.essential[&g]);
                let mut out = self.gen_bracket(g, &self.low(bp, c).clone());
                let w = self.low(gk, c).clone();
                for (k, x) in &w {
                    let p = self.prod((eg + c.0, *k), bp);
                    add_scaled(&mut out, &p, x);
                }
                out
            }
            _ => neg(self.prod(c, b)),
        };
        self.memo.insert((b, c), v.clone());
        v
    }

    /// `[a, v]` for `v` given in basis coordinates of degree `d - deg a`.
    fn act(&mut self, a: Key, v: &SparseVec) -> SparseVec {
        let e = self.d - a.0;
        let mut out = SparseVec::new();
        for (k, x) in v {
            let p = self.prod(a, (e, *k));
            add_scaled(&mut out, &p, x);
        }
        out
    }

    /// A relation of degree `d` in tail coordinates.
    fn eval_top(&mut self, e: &LieExpr) -> SparseVec {
        match e {
            LieExpr::Gen(l) => unit(self.tail_index[&Tail::Gen(*l)]),
            LieExpr::Sum(ts) => {
                let mut out = SparseVec::new();
                for (c, t) in ts {
                    let v = self.eval_top(t);
                    add_scaled(&mut out, &v, c);
                }
                out
            }
            LieExpr::Bracket(a, b) => {
                let (a, b) = (self.state.eval_low(a), self.state.eval_low(b));
                let (QuotientElement::Homogeneous { degree: da, coords: ca }, QuotientElement::Homogeneous { degree: db, coords: cb }) =
                    (a, b)
                else {
                    return SparseVec::new();
                };
                let mut out = SparseVec::new();
                for (i, x) in &ca {
                    for (j, y) in &cb {
                        let p = self.prod((da, *i), (db, *j));
                        add_scaled(&mut out, &p, &(x * y));
                    }
                }
                out
            }
        }
    }

    fn run(mut self) -> StepOutput {
        let d = self.d;
        let alphabet = self.state.alphabet.clone();
        for &g in self.state.essential.keys() {
            let eg = alphabet.degree(g);
            if eg < d {
                for k in 0..self.dim(d - eg) {
                    self.tails.push(Tail::Br(g, k));
                }
            }
        }
        for l in alphabet.letters().filter(|&l| alphabet.degree(l) == d) {
            self.tails.push(Tail::Gen(l));
        }
        self.tail_index = self.tails.iter().enumerate().map(|(i, t)| (*t, i)).collect();

        let keys: Vec<Key> = (1..d).flat_map(|e| (0..self.dim(e)).map(move |i| (e, i))).collect();
        let mut conditions = EchelonBasis::new();

        for (ia, &a) in keys.iter().enumerate() {
            for &b in &keys[ia..] {
                if a.0 + b.0 == d {
                    let s = {
                        let mut s = self.prod(a, b);
                        add_scaled(&mut s, &self.prod(b, a), &Rational::one());
                        s
                    };
                    conditions.insert(&s);
                }
            }
        }
        for (ia, &a) in keys.iter().enumerate() {
            for (ib, &b) in keys.iter().enumerate().skip(ia) {
                for &c in &keys[ib..] {
                    if a.0 + b.0 + c.0 != d {
                        continue;
                    }
                    let bc = self.low(b, c).clone();
                    let ca = self.low(c, a).clone();
                    let ab = self.low(a, b).clone();
                    let mut s = self.act(a, &bc);
                    add_scaled(&mut s, &self.act(b, &ca), &Rational::one());
                    add_scaled(&mut s, &self.act(c, &ab), &Rational::one());
                    conditions.insert(&s);
                }
            }
        }
        let relations = self.state.relations.get(&d).cloned().unwrap_or_default();
        for r in &relations {
            let v = self.eval_top(r);
            conditions.insert(&v);
        }

        let mut to_basis = HashMap::new();
        let mut basis = Vec::new();
        for (t, tail) in self.tails.iter().enumerate() {
            if conditions.is_pivot(t) {
                continue;
            }
            to_basis.insert(t, basis.len());
            let (definition, expr) = match *tail {
                Tail::Gen(l) => (Definition::Generator(l), LieExpr::Gen(l)),
                Tail::Br(g, k) => {
                    let inner = self.state.comps[(d - alphabet.degree(g)) as usize - 1].basis[k].expr.clone();
                    (Definition::Bracket { generator: g, with: k }, LieExpr::bracket(LieExpr::Gen(g), inner))
                }
            };
            basis.push(BasisElement { definition, expr });
        }
        let nf = |v: &SparseVec| -> SparseVec { conditions.reduce(v).into_iter().map(|(t, x)| (to_basis[&t], x)).collect() };

        let mut products = Vec::new();
        for &a in &keys {
            for &b in &keys {
                if a.0 + b.0 == d {
                    let p = self.prod(a, b);
                    products.push(((a, b), nf(&p)));
                }
            }
        }
        let mut gen_class = Vec::new();
        let mut essential = Vec::new();
        for l in alphabet.letters().filter(|&l| alphabet.degree(l) == d) {
            let t = self.tail_index[&Tail::Gen(l)];
            if let Some(&i) = to_basis.get(&t) {
                essential.push((l, i));
            }
            gen_class.push((l, QuotientElement::new(d, nf(&unit(t)))));
        }
        StepOutput {
            component: DegreeComponent { degree: d, tails: self.tails.len(), relation_rank: conditions.rank(), basis },
            products,
            gen_class,
            essential,
        }
    }
}

impl State {
    fn computed(&self) -> u32 {
        self.comps.len() as u32
    }

    fn ensure(&mut self, d: u32) {
        while self.computed() < d {
            let step = Step { d: self.computed() + 1, state: self, tails: Vec::new(), tail_index: HashMap::new(), memo: HashMap::new() };
            let out = step.run();
            self.products.extend(out.products);
            for (l, c) in out.gen_class {
                self.gen_class[l as usize] = Some(c);
            }
            self.essential.extend(out.essential);
            self.comps.push(Arc::new(out.component));
        }
    }

    /// Evaluation of an expression whose degree is already computed.
    fn eval_low(&self, e: &LieExpr) -> QuotientElement {
        match e {
            LieExpr::Gen(l) => self.gen_class[*l as usize].clone().expect("generator degree computed"),
            LieExpr::Bracket(a, b) => self.bracket_low(&self.eval_low(a), &self.eval_low(b)),
            LieExpr::Sum(ts) => {
                let mut out = QuotientElement::Zero;
                for (c, t) in ts {
                    out = out.try_add(&self.eval_low(t).scale(c)).expect("relations are homogeneous");
                }
                out
            }
        }
    }

    fn bracket_low(&self, a: &QuotientElement, b: &QuotientElement) -> QuotientElement {
        let (QuotientElement::Homogeneous { degree: da, coords: ca }, QuotientElement::Homogeneous { degree: db, coords: cb }) = (a, b)
        else {
            return QuotientElement::Zero;
        };
        let mut out = SparseVec::new();
        for (i, x) in ca {
            for (j, y) in cb {
                add_scaled(&mut out, &self.products[&((*da, *i), (*db, *j))], &(x * y));
            }
        }
        QuotientElement::new(da + db, out)
    }

    fn bracket(&mut self, a: &QuotientElement, b: &QuotientElement) -> QuotientElement {
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            self.ensure(da + db);
        }
        self.bracket_low(a, b)
    }

    fn eval_with(&mut self, e: &LieExpr, images: &mut impl FnMut(&mut State, Letter) -> QuotientElement) -> Result<QuotientElement> {
        match e {
            LieExpr::Gen(l) => Ok(images(self, *l)),
            LieExpr::Bracket(a, b) => {
                let a = self.eval_with(a, images)?;
                let b = self.eval_with(b, images)?;
                Ok(self.bracket(&a, &b))
            }
            LieExpr::Sum(ts) => {
                let mut out = QuotientElement::Zero;
                for (c, t) in ts {
                    out = out.try_add(&self.eval_with(t, images)?.scale(c))?;
                }
                Ok(out)
            }
        }
    }
}

/// A presentation together with its lazily computed graded pieces. The
/// cache sits behind a lock, so shared use from several threads sees the
/// same components as an eager computation would.
pub struct LieQuotient {
    presentation: GradedPresentation,
    state: Mutex<State>,
}

impl LieQuotient {
    pub fn new(presentation: GradedPresentation) -> Self {
        let alphabet = presentation.alphabet().clone();
        let mut relations: BTreeMap<u32, Vec<LieExpr>> = BTreeMap::new();
        for r in presentation.expanded_relations() {
            let d = r.degree(&alphabet).expect("presentations hold homogeneous relations");
            relations.entry(d).or_default().push(r);
        }
        let state = State {
            gen_class: vec![None; alphabet.len()],
            alphabet,
            relations,
            comps: Vec::new(),
            essential: BTreeMap::new(),
            products: HashMap::new(),
        };
        LieQuotient { presentation, state: Mutex::new(state) }
    }

    pub fn presentation(&self) -> &GradedPresentation {
        &self.presentation
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.presentation.alphabet()
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, State> {
        self.state.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// The degree-`d` piece; degree 0 is the zero space.
    pub fn component(&self, d: u32) -> Arc<DegreeComponent> {
        if d == 0 {
            return Arc::new(DegreeComponent { degree: 0, tails: 0, relation_rank: 0, basis: Vec::new() });
        }
        let mut s = self.lock();
        s.ensure(d);
        s.comps[d as usize - 1].clone()
    }

    pub fn dim(&self, d: u32) -> usize {
        self.component(d).dim()
    }

    /// Dimensions in degrees `1..=d_max`.
    pub fn dims(&self, d_max: u32) -> Vec<usize> {
        (1..=d_max).map(|d| self.dim(d)).collect()
    }

    pub fn generator(&self, l: Letter) -> QuotientElement {
        let mut s = self.lock();
        let d = s.alphabet.degree(l);
        s.ensure(d);
        s.gen_class[l as usize].clone().expect("computed")
    }

    /// Normal form of a Lie expression over the presentation's alphabet.
    pub fn normal_form(&self, e: &LieExpr) -> Result<QuotientElement> {
        let mut s = self.lock();
        s.eval_with(e, &mut |s: &mut State, l| {
            let d = s.alphabet.degree(l);
            s.ensure(d);
            s.gen_class[l as usize].clone().expect("computed")
        })
    }

    /// Normal form of a primitive tensor, read through its Lyndon
    /// coordinates.
    pub fn normal_form_element(&self, a: &LieElement) -> Result<QuotientElement> {
        let ctx = a.tensor().ctx();
        if **ctx.alphabet() != **self.alphabet() {
            return Err(gt_algebra::AlgebraError::ContextMismatch("element and presentation use different alphabets".into()).into());
        }
        let coords = lyndon_coordinates(a.tensor())?;
        let expr = LieExpr::Sum(coords.into_iter().map(|(w, c)| (c, standard_bracketing(&w))).collect());
        self.normal_form(&expr)
    }

    /// Normal form of `expr` with generator `l` replaced by `images[l]`,
    /// already expressed in this quotient.
    pub fn evaluate_with(&self, expr: &LieExpr, images: &[QuotientElement]) -> Result<QuotientElement> {
        let mut s = self.lock();
        s.eval_with(expr, &mut |_, l| images[l as usize].clone())
    }

    pub fn bracket(&self, a: &QuotientElement, b: &QuotientElement) -> QuotientElement {
        self.lock().bracket(a, b)
    }

    /// `[a, b]` for two basis elements.
    pub fn basis_bracket(&self, a: Key, b: Key) -> QuotientElement {
        self.bracket(&QuotientElement::basis(a), &QuotientElement::basis(b))
    }

    /// A free Lie representative `Σ c_i b_i` of a quotient element.
    pub fn to_expr(&self, q: &QuotientElement) -> LieExpr {
        match q {
            QuotientElement::Zero => LieExpr::zero(),
            QuotientElement::Homogeneous { degree, coords } => {
                let comp = self.component(*degree);
                LieExpr::Sum(coords.iter().map(|(i, c)| (c.clone(), comp.basis[*i].expr.clone())).collect())
            }
        }
    }

    /// `Σ c·b` written with the basis representatives.
    pub fn display(&self, q: &QuotientElement) -> String {
        self.to_expr(q).display(self.alphabet()).to_string()
    }
}

/// The degree-`d` piece of a presentation.
pub fn component(p: &GradedPresentation, d: u32) -> Arc<DegreeComponent> {
    LieQuotient::new(p.clone()).component(d)
}

/// Normal form of a homogeneous expression of degree `d`.
pub fn normal_form(p: &GradedPresentation, a: &LieExpr, d: u32) -> Result<QuotientElement> {
    match a.degree(p.alphabet()) {
        Some(e) if e == d => LieQuotient::new(p.clone()).normal_form(a),
        _ if crate::presentation::is_trivially_zero(a) => Ok(QuotientElement::Zero),
        _ => Err(BraidError::InhomogeneousInput(format!("{} is not homogeneous of degree {d}", a.display(p.alphabet())))),
    }
}
