//! The comparison map `φ` from a quotient of `𝔥̄` onto the extension
//! `(L ⊕ L) ×_G UL` of the doubled loop Lie algebra.
//!
//! `L` is free on `x^a, y^a` (degree 1) and `z_1..z_m` (degree 2), with
//! `G(v, w) = ρ(v_1, w_2) - ρ(w_1, v_2)` for the pairing
//! `ρ(x^a, y^a) = 1`, `ρ(y^a, x^a) = -1`, `ρ(z_j, z_j) = -z_j`. The
//! module part `UL` is placed two degrees up, so that `(0, 1)` sits in
//! degree 2 next to the `t` generators.

use std::collections::BTreeMap;

use gt_algebra::{free_lie_dimension, lie_bracket, Alphabet, Context, EchelonBasis, Letter, LieElement, LieExpr, Rational, SparseVec, TensorElement, Word};
use gt_cocycles::{c_rho, ExtensionElement, LiePair, SumKey};
use gt_fox::FoxPairing;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::dk::{derived_quotient, h_bar_presentation, DkAlgebra, DkFamily};
use crate::error::Result;
use crate::presentation::GradedPresentation;
use crate::quotient::LieQuotient;

/// Bracket evaluator and graded bookkeeping for `(L ⊕ L) ×_G UL`.
#[derive(Clone, Debug)]
pub struct GoldmanExtension {
    genus: usize,
    boundaries: usize,
    ctx: Context,
    rho: FoxPairing,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Coordinate {
    Pair(SumKey),
    Tail(Word),
}

impl GoldmanExtension {
    /// `L` on `g` handle pairs and `m` degree-2 letters, truncated so that
    /// elements of total degree up to `d_max` are exact.
    pub fn new(g: usize, m: usize, d_max: u32) -> Result<Self> {
        let mut symbols: Vec<(String, u32)> = Vec::new();
        symbols.extend((1..=g).map(|a| (format!("x{a}"), 1)));
        symbols.extend((1..=g).map(|a| (format!("y{a}"), 1)));
        symbols.extend((1..=m).map(|j| (format!("z{j}"), 2)));
        let ctx = Context::new(Alphabet::new(symbols)?, d_max);
        let rho = FoxPairing::from_fn(&ctx, |a, b| {
            let (a, b) = (a as usize, b as usize);
            if a < g && b == a + g {
                TensorElement::one(&ctx)
            } else if b < g && a == b + g {
                -&TensorElement::one(&ctx)
            } else if a >= 2 * g && a == b {
                -&TensorElement::generator(&ctx, a as Letter)
            } else {
                TensorElement::zero(&ctx)
            }
        });
        Ok(GoldmanExtension { genus: g, boundaries: m, ctx, rho })
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn rho(&self) -> &FoxPairing {
        &self.rho
    }

    pub fn x(&self, a: usize) -> LieElement {
        LieElement::generator(&self.ctx, (a - 1) as Letter)
    }

    pub fn y(&self, a: usize) -> LieElement {
        LieElement::generator(&self.ctx, (self.genus + a - 1) as Letter)
    }

    pub fn z(&self, j: usize) -> LieElement {
        assert!((1..=self.boundaries).contains(&j));
        LieElement::generator(&self.ctx, (2 * self.genus + j - 1) as Letter)
    }

    /// `Σ_a [x^a, y^a]`.
    pub fn omega_handles(&self) -> Result<LieElement> {
        let mut out = LieElement::zero(&self.ctx);
        for a in 1..=self.genus {
            out = out.try_add(&lie_bracket(&self.x(a), &self.y(a))?)?;
        }
        Ok(out)
    }

    pub fn left(&self, v: LieElement) -> ExtensionElement {
        ExtensionElement::from_pair(LiePair::left_only(v))
    }

    pub fn right(&self, v: LieElement) -> ExtensionElement {
        ExtensionElement::from_pair(LiePair::right_only(v))
    }

    /// `(0, c)`.
    pub fn unit(&self, c: Rational) -> ExtensionElement {
        ExtensionElement::from_tail(TensorElement::scalar(&self.ctx, c))
    }

    /// `[(v, a), (w, b)] = ([v, w], v·b - w·a + G(v, w))`.
    pub fn bracket(&self, u: &ExtensionElement, v: &ExtensionElement) -> Result<ExtensionElement> {
        let pair = u.pair.bracket(&v.pair)?;
        let action = &u.pair.act(&v.tail)? - &v.pair.act(&u.tail)?;
        let tail = &action + &c_rho(&self.rho, &u.pair, &v.pair)?;
        Ok(ExtensionElement::new(pair, tail)?)
    }

    pub fn scale(&self, u: &ExtensionElement, c: &Rational) -> ExtensionElement {
        ExtensionElement { pair: u.pair.scale(c), tail: u.tail.scale(c) }
    }

    /// `2 dim L_d + dim UL_{d-2}`.
    pub fn dim(&self, d: u32) -> usize {
        let a = self.ctx.alphabet();
        let pair = 2 * free_lie_dimension(a, d) as usize;
        let tail = if d >= 2 { a.words_of_degree(d - 2).len() } else { 0 };
        pair + tail
    }

    fn coordinates(&self, u: &ExtensionElement) -> Result<BTreeMap<Coordinate, Rational>> {
        let mut out: BTreeMap<Coordinate, Rational> =
            u.pair.coordinates()?.into_iter().map(|(k, c)| (Coordinate::Pair(k), c)).collect();
        for (w, c) in u.tail.iter() {
            if !c.is_zero() {
                out.insert(Coordinate::Tail(w.clone()), c.clone());
            }
        }
        Ok(out)
    }

    /// Evaluates a Lie expression from generator images.
    pub fn evaluate(&self, e: &LieExpr, images: &[ExtensionElement]) -> Result<ExtensionElement> {
        Ok(match e {
            LieExpr::Gen(l) => images[*l as usize].clone(),
            LieExpr::Bracket(a, b) => self.bracket(&self.evaluate(a, images)?, &self.evaluate(b, images)?)?,
            LieExpr::Sum(ts) => {
                let mut out = ExtensionElement::from_tail(TensorElement::zero(&self.ctx));
                for (c, t) in ts {
                    out = out.try_add(&self.scale(&self.evaluate(t, images)?, c))?;
                }
                out
            }
        })
    }

    pub fn display(&self, u: &ExtensionElement) -> String {
        format!("({}, {})", u.pair.display(), u.tail.display())
    }
}

/// `(L ⊕ L) ×_G UL` for the surface of genus `g` with `m` extra degree-2
/// letters.
pub fn goldman_extension_algebra(g: usize, m: usize, d_max: u32) -> Result<GoldmanExtension> {
    GoldmanExtension::new(g, m, d_max)
}

/// Source presentation, target and generator images of `φ`.
#[derive(Clone, Debug)]
pub struct PhiSetup {
    pub source: GradedPresentation,
    pub target: GoldmanExtension,
    pub images: Vec<ExtensionElement>,
}

impl PhiSetup {
    pub fn generator(&self, name: &str) -> Result<Letter> {
        self.source.generator(name)
    }
}

/// For `g = 0` the source is `edk_{n,2}`, realized as `𝔥̄` of `t_{n+2}^f`
/// modulo `[J, J]` for `J = ⟨t_{(n+1)(n+2)}⟩`, with
/// `t_{j(n+1)} ↦ (z_j ⊕ 0, 0)`, `t_{j(n+2)} ↦ (0 ⊕ z_j, 0)`,
/// `t_{(n+1)(n+2)} ↦ (0, 1)`.
///
/// For `g ≥ 1` the source is `𝔥̄_{g,n+3}` modulo `[J, J]` for
/// `J = ⟨t_{(n+2)(n+3)}⟩`, with `L = L^{n+2}` and `t_{j(n+2)}` renamed
/// `z_{j-1}`. Writing `p = n + 2`, `q = n + 3`:
/// `x_p ↦ (x ⊕ 0, 0)`, `x_q ↦ (0 ⊕ x, 0)` (and the same for `y`),
/// `t_{jp} ↦ (z_{j-1} ⊕ 0, 0)` and `t_{jq} ↦ (0 ⊕ z_{j-1}, 0)` for
/// `1 < j < p`, `t_{pq} ↦ (0, 1)`, and
/// `t_{1p} ↦ -(Σ[x, y] ⊕ 0, 0) - Σ_j (z_{j-1} ⊕ 0, 0) - (0, 1)`, with the
/// mirror image for `t_{1q}`.
pub fn phi_setup(g: usize, n: usize, d_max: u32) -> Result<PhiSetup> {
    let one = Rational::one();
    if g == 0 {
        let alg = DkAlgebra::new(DkFamily::Framed, n + 2)?;
        let (hbar, map) = h_bar_presentation(&alg)?;
        let seed = map[&alg.t(n + 1, n + 2).unwrap()];
        let source = derived_quotient(&hbar, seed, d_max)?;
        let target = GoldmanExtension::new(0, n, d_max)?;
        let mut images = vec![target.unit(Rational::zero()); source.alphabet().len()];
        for j in 1..=n {
            images[map[&alg.t(j, n + 1).unwrap()] as usize] = target.left(target.z(j));
            images[map[&alg.t(j, n + 2).unwrap()] as usize] = target.right(target.z(j));
        }
        images[seed as usize] = target.unit(one);
        return Ok(PhiSetup { source, target, images });
    }
    let (p, q) = (n + 2, n + 3);
    let alg = DkAlgebra::new(DkFamily::Genus(g), q)?;
    let (hbar, map) = h_bar_presentation(&alg)?;
    let seed = map[&alg.t(p, q).unwrap()];
    let source = derived_quotient(&hbar, seed, d_max)?;
    let target = GoldmanExtension::new(g, n, d_max)?;
    let mut images = vec![target.unit(Rational::zero()); source.alphabet().len()];
    let at = |l: Option<Letter>| map[&l.expect("generator exists")] as usize;
    for a in 1..=g {
        images[at(alg.x(p, a))] = target.left(target.x(a));
        images[at(alg.y(p, a))] = target.left(target.y(a));
        images[at(alg.x(q, a))] = target.right(target.x(a));
        images[at(alg.y(q, a))] = target.right(target.y(a));
    }
    let mut rest = target.omega_handles()?;
    for j in 2..p {
        images[at(alg.t(j, p))] = target.left(target.z(j - 1));
        images[at(alg.t(j, q))] = target.right(target.z(j - 1));
        rest = rest.try_add(&target.z(j - 1))?;
    }
    let minus = -one.clone();
    images[at(alg.t(1, p))] = target.left(rest.clone()).try_add(&target.unit(one.clone()))?;
    images[at(alg.t(1, p))] = target.scale(&images[at(alg.t(1, p))], &minus);
    images[at(alg.t(1, q))] = target.scale(&target.right(rest).try_add(&target.unit(one.clone()))?, &minus);
    images[seed as usize] = target.unit(one);
    Ok(PhiSetup { source, target, images })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiDegree {
    pub degree: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    /// Relations map to zero and every degree is a bijection.
    pub holds: bool,
    pub relations_hold: bool,
    pub degrees: Vec<PhiDegree>,
    pub witness: Option<String>,
}

/// Checks that every relation of the source of degree at most `d_max`
/// maps to zero, and that `φ` has full rank onto a target of the same
/// dimension in each degree.
pub fn verify_phi_with(setup: &PhiSetup, d_max: u32) -> Result<PhiReport> {
    let sa = setup.source.alphabet();
    let t = &setup.target;
    let mut witness = None;
    for r in setup.source.expanded_relations() {
        if r.degree(sa).is_some_and(|d| d > d_max) {
            continue;
        }
        let v = t.evaluate(&r, &setup.images)?;
        if !v.is_zero() {
            witness = Some(format!("{} ↦ {}", r.display(sa), t.display(&v)));
            break;
        }
    }
    let relations_hold = witness.is_none();
    let quotient = LieQuotient::new(setup.source.clone());
    let mut degrees = Vec::new();
    for d in 1..=d_max {
        let comp = quotient.component(d);
        let mut index: BTreeMap<Coordinate, usize> = BTreeMap::new();
        let mut span = EchelonBasis::new();
        for b in &comp.basis {
            let v = t.coordinates(&t.evaluate(&b.expr, &setup.images)?)?;
            let mut row = SparseVec::new();
            for (k, c) in v {
                let n = index.len();
                row.insert(*index.entry(k).or_insert(n), c);
            }
            span.insert(&row);
        }
        let row = PhiDegree { degree: d, source_dim: comp.dim(), target_dim: t.dim(d), rank: span.rank() };
        if witness.is_none() && !(row.rank == row.source_dim && row.rank == row.target_dim) {
            witness = Some(format!(
                "degree {d}: source {} target {} rank {}",
                row.source_dim, row.target_dim, row.rank
            ));
        }
        degrees.push(row);
    }
    Ok(PhiReport { holds: witness.is_none(), relations_hold, degrees, witness })
}

pub fn verify_phi(g: usize, n: usize, d_max: u32) -> Result<PhiReport> {
    verify_phi_with(&phi_setup(g, n, d_max)?, d_max)
}
