//! Exhaustive checks of the Lie bialgebra axioms on cyclic words.
//!
//! The spanning set is every nonempty cyclic word of weighted degree at most
//! `D`, one representative per rotation class. A check on a pair or triple
//! runs when the degrees add up to at most `D`. Bracket and cobracket both
//! lower degree, so a working truncation of `D` already makes every value
//! exact.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use gt_algebra::{CyclicElement, Rational, TensorElement, Word};
use gt_brackets::{bracket_of_lifts, cobracket_of_lift, CyclicTensorSquare};
use gt_fox::{FoxPairing, QuasiDerivation};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::presets::{make_q_framing, make_rho_g};
use crate::surface::{Framing, SurfaceContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One axiom, checked up to `degree`. Serializes as
/// `{"check": "jacobi", "status": "pass", "degree": 4, "witness": null}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub degree: u32,
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{:<16} {status} (degree ≤ {})", self.check, self.degree)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BialgebraReport {
    pub checks: Vec<CheckReport>,
}

impl BialgebraReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn get(&self, check: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.check == check)
    }
}

/// Bracket from `ρ_G` and cobracket from `q^f` for the given framing.
pub fn verify_bialgebra(sc: &SurfaceContext, framing: &Framing, d_max: u32) -> Result<BialgebraReport> {
    let sc = sc.with_max_degree(d_max);
    let rho = make_rho_g(&sc);
    let q = make_q_framing(&sc, framing)?;
    verify_bialgebra_with(&rho, &q, d_max)
}

type Triple = (Word, Word, Word);

struct Ops<'a> {
    rho: &'a FoxPairing,
    q: &'a QuasiDerivation,
    brackets: HashMap<(Word, Word), CyclicElement>,
    cobrackets: HashMap<Word, CyclicTensorSquare>,
}

impl Ops<'_> {
    fn lift(&self, w: &Word) -> TensorElement {
        TensorElement::from_word(self.rho.ctx(), w.clone(), Rational::one())
    }

    fn bracket_words(&mut self, u: &Word, v: &Word) -> Result<CyclicElement> {
        if let Some(b) = self.brackets.get(&(u.clone(), v.clone())) {
            return Ok(b.clone());
        }
        let b = bracket_of_lifts(self.rho, &self.lift(u), &self.lift(v))?;
        self.brackets.insert((u.clone(), v.clone()), b.clone());
        Ok(b)
    }

    fn bracket(&mut self, a: &CyclicElement, b: &CyclicElement) -> Result<CyclicElement> {
        let mut out = CyclicElement::zero(a.ctx());
        for (u, x) in a.iter() {
            for (v, y) in b.iter() {
                out.add_scaled(&self.bracket_words(u, v)?, &(x * y));
            }
        }
        Ok(out)
    }

    fn cobracket_word(&mut self, u: &Word) -> Result<CyclicTensorSquare> {
        if let Some(d) = self.cobrackets.get(u) {
            return Ok(d.clone());
        }
        let d = cobracket_of_lift(self.q, &self.lift(u))?;
        self.cobrackets.insert(u.clone(), d.clone());
        Ok(d)
    }

    fn cobracket(&mut self, a: &CyclicElement) -> Result<CyclicTensorSquare> {
        let mut out = CyclicTensorSquare::zero(a.ctx());
        for (u, x) in a.iter() {
            out.add_scaled(&self.cobracket_word(u)?, x);
        }
        Ok(out)
    }

    /// `a · (p ⊗ q) = [a, p] ⊗ q + p ⊗ [a, q]`.
    fn act(&mut self, a: &CyclicElement, t: &CyclicTensorSquare) -> Result<CyclicTensorSquare> {
        let ctx = a.ctx();
        let mut out = CyclicTensorSquare::zero(ctx);
        for ((p, q), c) in t.iter() {
            let bp = self.bracket(a, &CyclicElement::from_word(ctx, p))?;
            for (w, x) in bp.iter() {
                out.add_term(w, q, c * x);
            }
            let bq = self.bracket(a, &CyclicElement::from_word(ctx, q))?;
            for (w, x) in bq.iter() {
                out.add_term(p, w, c * x);
            }
        }
        Ok(out)
    }
}

fn fail(check: &str, degree: u32, witness: String) -> CheckReport {
    CheckReport { check: check.into(), status: Status::Fail, degree, witness: Some(witness) }
}

fn pass(check: &str, degree: u32) -> CheckReport {
    CheckReport { check: check.into(), status: Status::Pass, degree, witness: None }
}

fn show_triples(t: &BTreeMap<Triple, Rational>, ctx: &gt_algebra::Context) -> String {
    let alphabet = ctx.alphabet();
    let shown: Vec<String> = t
        .iter()
        .take(4)
        .map(|((a, b, c), x)| {
            format!("{x}*(|{}| ⊗ |{}| ⊗ |{}|)", a.display(alphabet), b.display(alphabet), c.display(alphabet))
        })
        .collect();
    let more = if t.len() > 4 { " + ..." } else { "" };
    format!("{}{more}", shown.join(" + "))
}

/// The five axioms for an arbitrary pairing and quasi-derivation on a
/// shared context, whose truncation should be at least `d_max`.
pub fn verify_bialgebra_with(rho: &FoxPairing, q: &QuasiDerivation, d_max: u32) -> Result<BialgebraReport> {
    let ctx = rho.ctx().clone();
    ctx.check_same(q.ctx())?;
    let alphabet = ctx.alphabet().clone();
    let words: Vec<Word> = alphabet
        .words_up_to(d_max)
        .into_iter()
        .filter(|w| !w.is_empty())
        .map(|w| w.min_rotation())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cyc = |w: &Word| CyclicElement::from_word(&ctx, w);
    let show = |w: &Word| format!("|{}|", w.display(&alphabet));
    let mut ops = Ops { rho, q, brackets: HashMap::new(), cobrackets: HashMap::new() };
    let mut checks = Vec::new();

    let pairs: Vec<(usize, usize)> = (0..words.len())
        .flat_map(|i| (0..words.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| words[i].degree() + words[j].degree() <= d_max)
        .collect();

    let mut report = pass("antisymmetry", d_max);
    for &(i, j) in pairs.iter().filter(|(i, j)| i <= j) {
        let (u, v) = (&words[i], &words[j]);
        let s = ops.bracket_words(u, v)?.try_add(&ops.bracket_words(v, u)?)?;
        if !s.is_zero() {
            report = fail("antisymmetry", d_max, format!("[{}, {}] + [{}, {}] = {}", show(u), show(v), show(v), show(u), s.display()));
            break;
        }
    }
    checks.push(report);

    let mut report = pass("jacobi", d_max);
    'jacobi: for i in 0..words.len() {
        for j in i..words.len() {
            for k in j..words.len() {
                let (u, v, w) = (&words[i], &words[j], &words[k]);
                if u.degree() + v.degree() + w.degree() > d_max {
                    continue;
                }
                let (a, b, c) = (cyc(u), cyc(v), cyc(w));
                let i1 = ops.bracket(&b, &c)?;
                let t1 = ops.bracket(&a, &i1)?;
                let i2 = ops.bracket(&c, &a)?;
                let t2 = ops.bracket(&b, &i2)?;
                let i3 = ops.bracket(&a, &b)?;
                let t3 = ops.bracket(&c, &i3)?;
                let s = t1.try_add(&t2)?.try_add(&t3)?;
                if !s.is_zero() {
                    report = fail("jacobi", d_max, format!("({}, {}, {}): {}", show(u), show(v), show(w), s.display()));
                    break 'jacobi;
                }
            }
        }
    }
    checks.push(report);

    let mut report = pass("co-antisymmetry", d_max);
    for u in &words {
        let d = ops.cobracket_word(u)?;
        let s = d.try_add(&d.swap())?;
        if !s.is_zero() {
            report = fail("co-antisymmetry", d_max, format!("δ({}) + Pδ({}) = {}", show(u), show(u), s.display()));
            break;
        }
    }
    checks.push(report);

    let mut report = pass("co-jacobi", d_max);
    for u in &words {
        let mut acc: BTreeMap<Triple, Rational> = BTreeMap::new();
        for ((p, r), c) in ops.cobracket_word(u)?.iter() {
            for ((p1, p2), c2) in ops.cobracket_word(p)?.iter() {
                let x = c * c2;
                for key in [(p1.clone(), p2.clone(), r.clone()), (p2.clone(), r.clone(), p1.clone()), (r.clone(), p1.clone(), p2.clone())] {
                    *acc.entry(key).or_insert_with(Rational::zero) += &x;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        if !acc.is_empty() {
            report = fail("co-jacobi", d_max, format!("at {}: {}", show(u), show_triples(&acc, &ctx)));
            break;
        }
    }
    checks.push(report);

    let mut report = pass("compatibility", d_max);
    for &(i, j) in pairs.iter().filter(|(i, j)| i <= j) {
        let (u, v) = (&words[i], &words[j]);
        let (a, b) = (cyc(u), cyc(v));
        let ab = ops.bracket(&a, &b)?;
        let lhs = ops.cobracket(&ab)?;
        let da = ops.cobracket(&a)?;
        let db = ops.cobracket(&b)?;
        let rhs = ops.act(&a, &db)?.try_sub(&ops.act(&b, &da)?)?;
        let s = lhs.try_sub(&rhs)?;
        if !s.is_zero() {
            report = fail(
                "compatibility",
                d_max,
                format!("δ[{}, {}] - ({} · δ{} - {} · δ{}) = {}", show(u), show(v), show(u), show(v), show(v), show(u), s.display()),
            );
            break;
        }
    }
    checks.push(report);

    Ok(BialgebraReport { checks })
}
