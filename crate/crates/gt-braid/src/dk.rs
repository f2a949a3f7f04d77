//! Drinfeld–Kohno algebras: unframed `t_n`, framed `t_n^f` and the genus `g`
//! algebras `t_{g,n}^f`, with partial compositions, string splitting and
//! deletion, and the presentations of the kernels of deletion.
//!
//! Every `t_ij` has degree 2 and `x_i^a, y_i^a` have degree 1. The symmetry
//! `t_ij = t_ji` is built in by keeping one generator per unordered pair.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use gt_algebra::{rat, Alphabet, EchelonBasis, Letter, LieExpr, Rational};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::hom::LieHomomorphism;
use crate::presentation::{br, linear, sum_of, GradedPresentation};
use crate::quotient::{LieQuotient, QuotientElement};

/// Degree of every `t_ij`.
pub const T_DEGREE: u32 = 2;

/// Coefficient `c` of `t_ii` in `Σ_a [x_i^a, y_i^a] + Σ_{j≠i} t_ij + c t_ii = 0`.
///
/// This is `2(1 - g)`. With the opposite sign the splitting maps `d_k` fail
/// to respect the relation once `g ≠ 1`, whatever reading is taken for the
/// diagonal composition; `t_ii ↦ -t_ii` exchanges the two conventions, so
/// dimensions do not depend on the choice.
pub fn framing_coefficient(g: usize) -> Rational {
    rat(2 * (1 - g as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DkFamily {
    /// `t_n`: generators `t_ij`, `i < j`.
    Unframed,
    /// `t_n^f`: generators `t_ij`, `i ≤ j`.
    Framed,
    /// `t_{g,n}^f`, including `g = 0`, where only the relation tying
    /// `t_ii` to the other `t_ij` remains of the surface relations.
    Genus(usize),
}

impl DkFamily {
    /// The family of the operad that acts on this one by composition.
    pub fn operad(self) -> DkFamily {
        match self {
            DkFamily::Unframed => DkFamily::Unframed,
            _ => DkFamily::Framed,
        }
    }

    fn genus(self) -> usize {
        match self {
            DkFamily::Genus(g) => g,
            _ => 0,
        }
    }
}

impl fmt::Display for DkFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DkFamily::Unframed => write!(f, "unframed"),
            DkFamily::Framed => write!(f, "framed"),
            DkFamily::Genus(g) => write!(f, "genus:{g}"),
        }
    }
}

impl FromStr for DkFamily {
    type Err = BraidError;

    /// `unframed`, `framed` or `genus:g`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "unframed" => Ok(DkFamily::Unframed),
            "framed" => Ok(DkFamily::Framed),
            other => other
                .strip_prefix("genus:")
                .and_then(|g| g.trim().parse().ok())
                .map(DkFamily::Genus)
                .ok_or_else(|| BraidError::InvalidPresentation(format!("unknown family `{other}`"))),
        }
    }
}

/// One algebra of a family on `n` strands, with generator lookup.
#[derive(Clone, Debug)]
pub struct DkAlgebra {
    family: DkFamily,
    strands: usize,
    presentation: GradedPresentation,
    t: BTreeMap<(usize, usize), Letter>,
    xy: BTreeMap<(char, usize, usize), Letter>,
}

fn t_name(i: usize, j: usize, n: usize) -> String {
    if n <= 9 {
        format!("t{i}{j}")
    } else {
        format!("t{i}_{j}")
    }
}

fn xy_name(c: char, i: usize, a: usize, g: usize) -> String {
    if g == 1 {
        format!("{c}{i}")
    } else {
        format!("{c}{i}_{a}")
    }
}

impl DkAlgebra {
    pub fn new(family: DkFamily, n: usize) -> Result<Self> {
        let g = family.genus();
        let mut symbols: Vec<(String, u32)> = Vec::new();
        let mut xy = BTreeMap::new();
        for c in ['x', 'y'] {
            for i in 1..=n {
                for a in 1..=g {
                    xy.insert((c, i, a), symbols.len() as Letter);
                    symbols.push((xy_name(c, i, a, g), 1));
                }
            }
        }
        let mut t = BTreeMap::new();
        for i in 1..=n {
            let start = if family == DkFamily::Unframed { i + 1 } else { i };
            for j in start..=n {
                t.insert((i, j), symbols.len() as Letter);
                symbols.push((t_name(i, j, n), T_DEGREE));
            }
        }
        let alphabet = Alphabet::new(symbols)?;
        let mut alg = DkAlgebra { family, strands: n, presentation: GradedPresentation::free(alphabet.clone()), t, xy };
        let relations = alg.relations();
        alg.presentation = GradedPresentation::new(alphabet, relations, Vec::new())?;
        Ok(alg)
    }

    pub fn family(&self) -> DkFamily {
        self.family
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn genus(&self) -> usize {
        self.family.genus()
    }

    pub fn presentation(&self) -> &GradedPresentation {
        &self.presentation
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.presentation.alphabet()
    }

    /// `t_ij = t_ji`; `None` when the pair is out of range or diagonal in the
    /// unframed family.
    pub fn t(&self, i: usize, j: usize) -> Option<Letter> {
        self.t.get(&(i.min(j), i.max(j))).copied()
    }

    pub fn x(&self, i: usize, a: usize) -> Option<Letter> {
        self.xy.get(&('x', i, a)).copied()
    }

    pub fn y(&self, i: usize, a: usize) -> Option<Letter> {
        self.xy.get(&('y', i, a)).copied()
    }

    fn tt(&self, i: usize, j: usize) -> LieExpr {
        LieExpr::Gen(self.t(i, j).expect("index in range"))
    }

    fn relations(&self) -> Vec<LieExpr> {
        let n = self.strands;
        let g = self.genus();
        let pairs: Vec<(usize, usize)> = self.t.keys().copied().collect();
        let disjoint = |(i, j): (usize, usize), (k, l): (usize, usize)| i != k && i != l && j != k && j != l;
        let mut out = Vec::new();
        // FL
        for (p, &a) in pairs.iter().enumerate() {
            for &b in &pairs[p + 1..] {
                if disjoint(a, b) {
                    out.push(br(self.tt(a.0, a.1), self.tt(b.0, b.1)));
                }
            }
        }
        // F4T
        for &(i, j) in &pairs {
            for k in (1..=n).filter(|&k| k != i && k != j) {
                out.push(br(self.tt(i, j), sum_of([self.t(i, k).unwrap(), self.t(j, k).unwrap()])));
            }
        }
        let DkFamily::Genus(_) = self.family else { return out };
        let one = Rational::one();
        // S_g
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                for a in 1..=g {
                    for b in 1..=g {
                        let lhs = br(LieExpr::Gen(self.x(i, a).unwrap()), LieExpr::Gen(self.y(j, b).unwrap()));
                        if a == b {
                            out.push(LieExpr::Sum(vec![(one.clone(), lhs), (-one.clone(), self.tt(i, j))]));
                        } else {
                            out.push(lhs);
                        }
                    }
                }
            }
        }
        // N_g
        for i in 1..=n {
            for j in i + 1..=n {
                for a in 1..=g {
                    for b in 1..=g {
                        out.push(br(LieExpr::Gen(self.x(i, a).unwrap()), LieExpr::Gen(self.x(j, b).unwrap())));
                        out.push(br(LieExpr::Gen(self.y(i, a).unwrap()), LieExpr::Gen(self.y(j, b).unwrap())));
                    }
                }
            }
        }
        // FT_g: Σ_a [x_i^a, y_i^a] + Σ_{j≠i} t_ij + 2(1-g) t_ii = 0
        for i in 1..=n {
            let mut terms: Vec<(Rational, LieExpr)> = (1..=g)
                .map(|a| (one.clone(), br(LieExpr::Gen(self.x(i, a).unwrap()), LieExpr::Gen(self.y(i, a).unwrap()))))
                .collect();
            terms.extend((1..=n).filter(|&j| j != i).map(|j| (one.clone(), self.tt(i, j))));
            let c = framing_coefficient(g);
            if !c.is_zero() {
                terms.push((c, self.tt(i, i)));
            }
            out.push(LieExpr::Sum(terms));
        }
        // FL_g
        for k in 1..=n {
            for &(i, j) in pairs.iter().filter(|&&(i, j)| i != k && j != k) {
                for a in 1..=g {
                    out.push(br(LieExpr::Gen(self.x(k, a).unwrap()), self.tt(i, j)));
                    out.push(br(LieExpr::Gen(self.y(k, a).unwrap()), self.tt(i, j)));
                }
            }
        }
        // F4T_g
        for &(i, j) in &pairs {
            for a in 1..=g {
                let xs = linear([(one.clone(), self.x(i, a).unwrap()), (one.clone(), self.x(j, a).unwrap())]);
                let ys = linear([(one.clone(), self.y(i, a).unwrap()), (one.clone(), self.y(j, a).unwrap())]);
                out.push(br(xs, self.tt(i, j)));
                out.push(br(ys, self.tt(i, j)));
            }
        }
        out
    }
}

/// `t_n` (`g = 0`, unframed), `t_n^f` (`g = 0`, framed) or `t_{g,n}^f`
/// (`g ≥ 1`, framed). The genus-zero surface algebra `t_{0,n}^f` is
/// `DkAlgebra::new(DkFamily::Genus(0), n)`.
pub fn dk_algebra(g: usize, n: usize, framed: bool) -> Result<GradedPresentation> {
    let family = match (g, framed) {
        (0, false) => DkFamily::Unframed,
        (0, true) => DkFamily::Framed,
        (g, true) => DkFamily::Genus(g),
        (_, false) => return Err(BraidError::InvalidPresentation("positive genus algebras are framed".into())),
    };
    Ok(DkAlgebra::new(family, n)?.presentation)
}

/// `∘_k: t_{g,I} ⊕ t_J → t_{g, J ⊔ (I - {k})}` as its two components.
#[derive(Clone, Debug)]
pub struct Composition {
    /// `a ↦ ∘_k(a, 0)`.
    pub left: LieHomomorphism,
    /// `b ↦ ∘_k(0, b)`.
    pub right: LieHomomorphism,
    /// Target strand labels in order: `I` with `k` replaced by `J`.
    pub labels: Vec<usize>,
    pub target: DkAlgebra,
}

fn check_distinct(labels: &[usize], what: &str) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    match labels.iter().find(|l| !seen.insert(**l)) {
        Some(l) => Err(BraidError::InvalidLabels(format!("label {l} repeated in {what}"))),
        None => Ok(()),
    }
}

/// Partial composition on labelled strands. The strands of the first
/// factor are `i_labels` in order, those of the second `j_labels`; the
/// target strands are `i_labels` with `k` replaced by `j_labels` in place.
pub fn dk_compose(family: DkFamily, i_labels: &[usize], k: usize, j_labels: &[usize]) -> Result<Composition> {
    check_distinct(i_labels, "I")?;
    check_distinct(j_labels, "J")?;
    let kpos = i_labels.iter().position(|&l| l == k).ok_or_else(|| BraidError::InvalidLabels(format!("{k} is not a label of I")))?;
    let mut labels: Vec<usize> = i_labels[..kpos].to_vec();
    labels.extend_from_slice(j_labels);
    labels.extend_from_slice(&i_labels[kpos + 1..]);
    check_distinct(&labels, "J ⊔ (I - {k})")?;
    let pos: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(p, &l)| (l, p + 1)).collect();
    let jpos: Vec<usize> = j_labels.iter().map(|l| pos[l]).collect();

    let left_src = DkAlgebra::new(family, i_labels.len())?;
    let right_src = DkAlgebra::new(family.operad(), j_labels.len())?;
    let target = DkAlgebra::new(family, labels.len())?;
    let tgt = |i: usize, j: usize| target.t(i, j).map(LieExpr::Gen);
    let nonzero = |e: LieExpr| (!crate::presentation::is_trivially_zero(&e)).then_some(e);

    let mut left_images = vec![None; left_src.alphabet().len()];
    for (&(i, j), &l) in &left_src.t {
        let (li, lj) = (i_labels[i - 1], i_labels[j - 1]);
        let img = match (li == k, lj == k) {
            (false, false) => tgt(pos[&li], pos[&lj]),
            (true, false) => nonzero(sum_of(jpos.iter().map(|&p| target.t(p, pos[&lj]).unwrap()))),
            (false, true) => nonzero(sum_of(jpos.iter().map(|&p| target.t(pos[&li], p).unwrap()))),
            (true, true) => {
                // multiset pairs {p, q} ⊂ J, the diagonal included
                let mut letters = Vec::new();
                for (a, &p) in jpos.iter().enumerate() {
                    for &q in &jpos[a..] {
                        letters.push(target.t(p, q).ok_or_else(|| {
                            BraidError::InvalidPresentation("diagonal composition needs a framed family".into())
                        })?);
                    }
                }
                nonzero(sum_of(letters))
            }
        };
        left_images[l as usize] = img;
    }
    for (&(c, i, a), &l) in &left_src.xy {
        let li = i_labels[i - 1];
        let pick = |p: usize| target.xy[&(c, p, a)];
        left_images[l as usize] =
            if li == k { nonzero(sum_of(jpos.iter().map(|&p| pick(p)))) } else { Some(LieExpr::Gen(pick(pos[&li]))) };
    }
    let mut right_images = vec![None; right_src.alphabet().len()];
    for (&(a, b), &l) in &right_src.t {
        right_images[l as usize] = tgt(jpos[a - 1], jpos[b - 1]);
    }
    let left = LieHomomorphism::new(left_src.presentation.clone(), target.presentation.clone(), left_images)?;
    let right = LieHomomorphism::new(right_src.presentation.clone(), target.presentation.clone(), right_images)?;
    Ok(Composition { left, right, labels, target })
}

/// Relabelling `t_ij ↦ t_{f(i) f(j)}`, `x_i ↦ x_{f(i)}` into `m` strands.
fn relabel(family: DkFamily, n: usize, m: usize, f: impl Fn(usize) -> usize) -> Result<LieHomomorphism> {
    let src = DkAlgebra::new(family, n)?;
    let tgt = DkAlgebra::new(family, m)?;
    let mut images = vec![None; src.alphabet().len()];
    for (&(i, j), &l) in &src.t {
        images[l as usize] = Some(LieExpr::Gen(tgt.t(f(i), f(j)).expect("strand in range")));
    }
    for (&(c, i, a), &l) in &src.xy {
        images[l as usize] = Some(LieExpr::Gen(tgt.xy[&(c, f(i), a)]));
    }
    LieHomomorphism::new(src.presentation, tgt.presentation, images)
}

/// `d_k: t_{g,n} → t_{g,n+1}`. For `1 ≤ k ≤ n` this is `∘_k(·, 0)` with
/// `J = {k, k+1}`; `k = 0` and `k = n + 1` add an untouched strand in front
/// and at the end. The outer two exist only for the operads: in a genus
/// family the relation `FT_g` involves every strand, so adding a bare strand
/// breaks it.
pub fn string_split(family: DkFamily, n: usize, k: usize) -> Result<LieHomomorphism> {
    let max = if matches!(family, DkFamily::Genus(_)) { n } else { n + 1 };
    if k > max || (k == 0 && max == n) {
        return Err(BraidError::IndexOutOfRange { index: k, max });
    }
    if k == 0 {
        return relabel(family, n, n + 1, |i| i + 1);
    }
    if k == n + 1 {
        return relabel(family, n, n + 1, |i| i);
    }
    let i_labels: Vec<usize> = (1..=n).collect();
    Ok(dk_compose(family, &i_labels, k, &[k, n + 1])?.left)
}

/// `s_k: t_{g,n} → t_{g,n-1}`, composition with the empty strand set.
pub fn string_delete(family: DkFamily, n: usize, k: usize) -> Result<LieHomomorphism> {
    if k == 0 || k > n {
        return Err(BraidError::IndexOutOfRange { index: k, max: n });
    }
    let i_labels: Vec<usize> = (1..=n).collect();
    Ok(dk_compose(family, &i_labels, k, &[])?.left)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelDegree {
    pub degree: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
}

/// Degreewise kernel dimensions of a surjection `s`, computed as the
/// nullity of `s` on a basis of each source component.
pub fn kernel_dims(source: &LieQuotient, target: &LieQuotient, s: &LieHomomorphism, d_max: u32) -> Result<Vec<KernelDegree>> {
    let images = s.image_classes(target)?;
    let mut out = Vec::new();
    for d in 1..=d_max {
        let comp = source.component(d);
        let mut span = EchelonBasis::new();
        for b in &comp.basis {
            let v = target.evaluate_with(&b.expr, &images)?;
            span.insert(&v.coords());
        }
        let (source_dim, target_dim, rank) = (comp.dim(), target.dim(d), span.rank());
        if rank < target_dim {
            return Err(BraidError::NotSurjective { degree: d, rank, target_dim });
        }
        out.push(KernelDegree { degree: d, source_dim, target_dim, rank, kernel_dim: source_dim - rank });
    }
    Ok(out)
}

/// `𝔨_{g,n}`: free on `x_n^a, y_n^a, t_1n, …, t_nn` modulo
/// `Σ_a [x_n^a, y_n^a] = -Σ_{j≠n} t_nj + 2(g-1) t_nn` with `t_nn` central.
pub fn k_presentation(g: usize, n: usize) -> Result<GradedPresentation> {
    if n == 0 {
        return Err(BraidError::IndexOutOfRange { index: 0, max: 0 });
    }
    let full = DkAlgebra::new(DkFamily::Genus(g), n)?;
    let mut keep: Vec<Letter> = (1..=g).map(|a| full.x(n, a).unwrap()).collect();
    keep.extend((1..=g).map(|a| full.y(n, a).unwrap()));
    keep.extend((1..=n).map(|j| full.t(j, n).unwrap()));
    let alphabet = Alphabet::new(keep.iter().map(|&l| (full.alphabet().name(l).to_string(), full.alphabet().degree(l))))?;
    let new = |l: Letter| LieExpr::Gen(keep.iter().position(|&m| m == l).unwrap() as Letter);
    let one = Rational::one();
    let mut terms: Vec<(Rational, LieExpr)> =
        (1..=g).map(|a| (one.clone(), br(new(full.x(n, a).unwrap()), new(full.y(n, a).unwrap())))).collect();
    terms.extend((1..n).map(|j| (one.clone(), new(full.t(j, n).unwrap()))));
    let c = framing_coefficient(g);
    if !c.is_zero() {
        terms.push((c, new(full.t(n, n).unwrap())));
    }
    let central = (keep.len() - 1) as Letter;
    GradedPresentation::new(alphabet, vec![LieExpr::Sum(terms)], vec![central])
}

fn h_letters(alg: &DkAlgebra) -> Result<Vec<Letter>> {
    let n = alg.strands;
    if n < 2 {
        return Err(BraidError::IndexOutOfRange { index: n, max: 2 });
    }
    let g = alg.genus();
    let mut keep = Vec::new();
    for c in ['x', 'y'] {
        for i in [n - 1, n] {
            keep.extend((1..=g).map(|a| alg.xy[&(c, i, a)]));
        }
    }
    keep.extend((1..=n).filter_map(|j| alg.t(j, n - 1)));
    keep.extend((1..=n - 2).filter_map(|j| alg.t(j, n)));
    keep.extend(alg.t(n, n));
    Ok(keep)
}

/// `𝔥` on the last two strands of `alg`: generators
/// `x_{n-1}, y_{n-1}, x_n, y_n, t_{j(n-1)}` (`1 ≤ j ≤ n`), `t_{jn}`
/// (`j ≤ n - 2`), `t_nn`, with every relation of `alg` written in them.
pub fn h_presentation(alg: &DkAlgebra) -> Result<GradedPresentation> {
    Ok(alg.presentation.restrict(&h_letters(alg)?, &[])?.0)
}

/// `𝔥̄`: `𝔥` with the central `t_{(n-1)(n-1)}` and `t_nn` set to zero.
/// Also returns the letter map from `alg`.
pub fn h_bar_presentation(alg: &DkAlgebra) -> Result<(GradedPresentation, BTreeMap<Letter, Letter>)> {
    let n = alg.strands;
    let killed: Vec<Letter> = [alg.t(n - 1, n - 1), alg.t(n, n)].into_iter().flatten().collect();
    let keep: Vec<Letter> = h_letters(alg)?.into_iter().filter(|l| !killed.contains(l)).collect();
    alg.presentation.restrict(&keep, &killed)
}

/// The derived quotient `P / [J, J]` for the ideal `J` generated by `seed`,
/// valid through degree `d_max`: the brackets of basis elements of the
/// components of `J` are added as relations, pairs taken in order of
/// (degree, index).
pub fn derived_quotient(p: &GradedPresentation, seed: Letter, d_max: u32) -> Result<GradedPresentation> {
    let q = LieQuotient::new(p.clone());
    let alphabet = p.alphabet().clone();
    let mut ideal: Vec<Vec<QuotientElement>> = vec![Vec::new(); d_max as usize + 1];
    for d in 1..=d_max {
        let mut span = EchelonBasis::new();
        let push = |v: &QuotientElement, span: &mut EchelonBasis| {
            if !v.is_zero() {
                span.insert(&v.coords());
            }
        };
        if alphabet.degree(seed) == d {
            push(&q.generator(seed), &mut span);
        }
        for g in alphabet.letters() {
            let eg = alphabet.degree(g);
            if eg < d {
                let gc = q.generator(g);
                for v in &ideal[(d - eg) as usize] {
                    push(&q.bracket(&gc, v), &mut span);
                }
            }
        }
        ideal[d as usize] = span.rref().into_iter().map(|(_, row)| QuotientElement::new(d, row)).collect();
    }
    let mut extra = Vec::new();
    for e1 in 1..=d_max {
        for e2 in e1..=d_max - e1 {
            for (i, u) in ideal[e1 as usize].iter().enumerate() {
                let start = if e1 == e2 { i + 1 } else { 0 };
                for v in &ideal[e2 as usize][start..] {
                    extra.push(br(q.to_expr(u), q.to_expr(v)));
                }
            }
        }
    }
    p.with_relations(extra)
}

/// Dimension table as CSV with header `degree,dim`.
pub fn dims_csv(dims: &[usize]) -> String {
    let mut out = String::from("degree,dim\n");
    for (d, n) in dims.iter().enumerate() {
        out.push_str(&format!("{},{n}\n", d + 1));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimRow {
    pub degree: u32,
    pub dim: usize,
}

pub fn dims_table(dims: &[usize]) -> Vec<DimRow> {
    dims.iter().enumerate().map(|(d, &dim)| DimRow { degree: d as u32 + 1, dim }).collect()
}
