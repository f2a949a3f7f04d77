//! One line per acceptance criterion, `criterion k: pass` or
//! `criterion k: FAIL (...)`. The process exits nonzero if any fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use gt_algebra::codec::ElementJson;
use gt_algebra::{cyclic_project, frac, rat, Alphabet, Context, CyclicElement, LieExpr, Rational, TensorElement, TensorSquareElement, Word};
use gt_braid::{
    check_homomorphism, dk_compose, h_presentation, k_presentation, kernel_dims, string_delete, string_split, verify_phi, DkAlgebra,
    DkFamily, LieHomomorphism, LieQuotient,
};
use gt_brackets::{bracket_cyclic, bracket_of_lifts, cobracket_cyclic, cobracket_of_lift, dq_map};
use gt_cli::{parse_element, print_element};
use gt_cocycles::{check_relative_closed, e_functor, extension_bracket, sum_basis, ExtensionElement, LiePair, RelativeCocycle};
use gt_fox::{make_exact_pairing, make_exact_qder, solve_two_sided_derivatives, FoxDerivative, Side};
use gt_surface::{
    bernoulli_phi, conjugation_defect, cyclic_left, kappa_table, make_q_framing, make_rho_g, mu_r_oracle, phi_coefficients,
    verify_bialgebra, Framing, SurfaceContext,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Least rotations of the nonempty words of degree at most `d`.
fn cyclic_words(ctx: &Context, d: u32) -> Vec<Word> {
    let mut ws: Vec<Word> = ctx.alphabet().words_up_to(d).into_iter().filter(|w| !w.is_empty()).map(|w| w.min_rotation()).collect();
    ws.sort();
    ws.dedup();
    ws
}

fn word_element(ctx: &Context, w: &Word) -> TensorElement {
    TensorElement::from_word(ctx, w.clone(), rat(1))
}

fn grid() -> [(usize, usize, Framing); 3] {
    [(0, 2, Framing::Adapted), (1, 1, Framing::Adapted), (1, 1, Framing::Rotations(vec![2]))]
}

/// The generator table written out by hand: `κ(x_i, y_i) = 1 ⊗ 1`,
/// `κ(y_i, x_i) = -1 ⊗ 1` and `κ(z_j, z_j) = z_j ⊗ 1 - 1 ⊗ z_j`.
fn kappa() -> Check {
    for (g, n) in [(0, 2), (1, 1), (2, 1)] {
        let sc = SurfaceContext::new(g, n, 4).map_err(|e| e.to_string())?;
        let ctx = sc.ctx();
        let unit = |c: i64| TensorSquareElement::from_terms(ctx, [((Word::empty(), Word::empty()), rat(c))]);
        let mut expected = BTreeMap::new();
        for i in 1..=g {
            expected.insert((sc.x(i), sc.y(i)), unit(1));
            expected.insert((sc.y(i), sc.x(i)), unit(-1));
        }
        for j in 1..=n {
            let z = ctx.word(vec![sc.z(j)]);
            expected.insert((sc.z(j), sc.z(j)), TensorSquareElement::from_terms(ctx, [((z.clone(), Word::empty()), rat(1)), ((Word::empty(), z), rat(-1))]));
        }
        let table = kappa_table(&sc).map_err(|e| e.to_string())?;
        ensure(table == expected, || format!("table differs for (g, n) = ({g}, {n})"))?;
    }
    Ok(())
}

fn random_element(rng: &mut ChaCha8Rng, ctx: &Context) -> TensorElement {
    let mut e = TensorElement::zero(ctx);
    for _ in 0..rng.gen_range(0..=3) {
        let len = rng.gen_range(0..=2);
        let letters = (0..len).map(|_| rng.gen_range(0..3u16)).collect();
        e.add_term(ctx.word(letters), rat(rng.gen_range(-3..=3)));
    }
    e
}

fn exactness() -> Check {
    let alphabet = Alphabet::new([("a", 1), ("b", 1), ("c", 1)]).map_err(|e| e.to_string())?;
    let ctx = Context::new(alphabet, 5);
    let words = cyclic_words(&ctx, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..50 {
        let left: Vec<TensorElement> = (0..3).map(|_| random_element(&mut rng, &ctx)).collect();
        let right: Vec<TensorElement> = (0..3).map(|_| random_element(&mut rng, &ctx)).collect();
        let l = FoxDerivative::from_fn(&ctx, Side::Left, |g| left[g as usize].clone());
        let r = FoxDerivative::from_fn(&ctx, Side::Right, |g| right[g as usize].clone());
        let tau = make_exact_pairing(&l, &r).map_err(|e| e.to_string())?;
        let mu = make_exact_qder(&l, &r).map_err(|e| e.to_string())?;
        for u in &words {
            let cu = CyclicElement::from_word(&ctx, u);
            let d = cobracket_cyclic(&mu, &cu).map_err(|e| e.to_string())?;
            ensure(d.is_zero(), || format!("trial {trial}: cobracket of |{}| is {}", u.display(ctx.alphabet()), d.display()))?;
            for v in words.iter().filter(|v| u.degree() + v.degree() <= 5) {
                let b = bracket_cyclic(&tau, &cu, &CyclicElement::from_word(&ctx, v)).map_err(|e| e.to_string())?;
                ensure(b.is_zero(), || format!("trial {trial}: bracket is {}", b.display()))?;
            }
        }
    }
    Ok(())
}

/// `|ab - ba|` is zero, so lifting it must give zero in every slot.
fn well_defined() -> Check {
    let sc = SurfaceContext::new(1, 1, 5).map_err(|e| e.to_string())?;
    let ctx = sc.ctx();
    let rho = make_rho_g(&sc);
    let q = make_q_framing(&sc, &Framing::Rotations(vec![2])).map_err(|e| e.to_string())?;
    let words: Vec<Word> = ctx.alphabet().words_up_to(5).into_iter().filter(|w| !w.is_empty()).collect();
    for a in &words {
        for b in words.iter().filter(|b| a.degree() + b.degree() <= 5) {
            let (ea, eb) = (word_element(ctx, a), word_element(ctx, b));
            let comm = &(&ea * &eb) - &(&eb * &ea);
            ensure(cyclic_project(&comm).is_zero(), || "commutator is not cyclically zero".into())?;
            let d = cobracket_of_lift(&q, &comm).map_err(|e| e.to_string())?;
            ensure(d.is_zero(), || format!("cobracket of a commutator is {}", d.display()))?;
            for c in words.iter().filter(|c| a.degree() + b.degree() + c.degree() <= 5) {
                let ec = word_element(ctx, c);
                let left = bracket_of_lifts(&rho, &comm, &ec).map_err(|e| e.to_string())?;
                let right = bracket_of_lifts(&rho, &ec, &comm).map_err(|e| e.to_string())?;
                ensure(left.is_zero() && right.is_zero(), || "bracket with a commutator is nonzero".into())?;
                let direct = bracket_cyclic(&rho, &cyclic_project(&(&ea * &eb)), &cyclic_project(&ec)).map_err(|e| e.to_string())?;
                let swapped = bracket_cyclic(&rho, &cyclic_project(&(&eb * &ea)), &cyclic_project(&ec)).map_err(|e| e.to_string())?;
                ensure(direct == swapped, || "bracket depends on the rotation".into())?;
            }
        }
    }
    Ok(())
}

fn mu_oracle() -> Check {
    for framing in [Framing::Adapted, Framing::Rotations(vec![1, -2])] {
        for g in [0, 1] {
            let sc = SurfaceContext::new(g, 2, 5).map_err(|e| e.to_string())?;
            let q = make_q_framing(&sc, &framing).map_err(|e| e.to_string())?;
            for w in sc.ctx().alphabet().words_up_to(5) {
                let a = word_element(sc.ctx(), &w);
                let direct = cyclic_left(&dq_map(&q, &a).map_err(|e| e.to_string())?);
                let oracle = mu_r_oracle(&sc, &framing, &a).map_err(|e| e.to_string())?;
                ensure(direct == oracle, || format!("g = {g}, {framing}: word {}", w.display(sc.ctx().alphabet())))?;
            }
        }
    }
    Ok(())
}

fn bialgebra() -> Check {
    for (g, n, framing) in grid() {
        let sc = SurfaceContext::new(g, n, 4).map_err(|e| e.to_string())?;
        let report = verify_bialgebra(&sc, &framing, 4).map_err(|e| e.to_string())?;
        ensure(report.checks.len() == 5, || format!("({g}, {n}, {framing}): {} checks ran", report.checks.len()))?;
        for c in &report.checks {
            ensure(c.passed(), || format!("({g}, {n}, {framing}): {c}"))?;
        }
    }
    Ok(())
}

fn same_map(f: &LieHomomorphism, g: &LieHomomorphism) -> bool {
    let q = LieQuotient::new(f.target().clone());
    f.image_classes(&q).unwrap() == g.image_classes(&q).unwrap()
}

fn identity(family: DkFamily, n: usize) -> LieHomomorphism {
    let p = DkAlgebra::new(family, n).unwrap().presentation().clone();
    let images = p.alphabet().letters().map(|l| Some(LieExpr::Gen(l))).collect();
    LieHomomorphism::new(p.clone(), p, images).unwrap()
}

fn dk_identities() -> Check {
    for family in [DkFamily::Unframed, DkFamily::Framed, DkFamily::Genus(0), DkFamily::Genus(1)] {
        for n in 1..=3 {
            let d = string_split(family, n, n).map_err(|e| e.to_string())?;
            for k in [n, n + 1] {
                let s = string_delete(family, n + 1, k).map_err(|e| e.to_string())?;
                let back = d.then(&s).map_err(|e| e.to_string())?;
                ensure(same_map(&back, &identity(family, n)), || format!("s_{k} d_{n} on {family} {n}"))?;
                ensure(check_homomorphism(&s, 4).map_err(|e| e.to_string())?.holds, || format!("s_{k} on {family}"))?;
            }
        }
    }
    let t1 = DkAlgebra::new(DkFamily::Framed, 1).map_err(|e| e.to_string())?;
    let t2 = DkAlgebra::new(DkFamily::Framed, 2).map_err(|e| e.to_string())?;
    let q = LieQuotient::new(t2.presentation().clone());
    let t11 = LieExpr::Gen(t1.t(1, 1).unwrap());
    let image = |k: usize| string_split(DkFamily::Framed, 1, k).unwrap().apply(&t11).unwrap();
    let combo = LieExpr::Sum(vec![(rat(1), image(1)), (rat(-1), image(0)), (rat(-1), image(2))]);
    ensure(q.normal_form(&combo).map_err(|e| e.to_string())? == q.generator(t2.t(1, 2).unwrap()), || "d_1 T - d_0 T - d_2 T is not t_12".into())?;
    let c = dk_compose(DkFamily::Framed, &[1], 1, &[]).map_err(|e| e.to_string())?;
    ensure(c.left.image(t1.t(1, 1).unwrap()).is_none(), || "t_11 survives composition with no strands".into())
}

fn kernel_of(family: DkFamily, n: usize, s: &LieHomomorphism, d: u32) -> std::result::Result<Vec<usize>, String> {
    let src = LieQuotient::new(DkAlgebra::new(family, n).map_err(|e| e.to_string())?.presentation().clone());
    let tgt = LieQuotient::new(s.target().clone());
    Ok(kernel_dims(&src, &tgt, s, d).map_err(|e| e.to_string())?.into_iter().map(|k| k.kernel_dim).collect())
}

fn kernels() -> Check {
    for (g, n) in [(0, 3), (1, 2)] {
        let family = DkFamily::Genus(g);
        let s_n = string_delete(family, n, n).map_err(|e| e.to_string())?;
        let presented = LieQuotient::new(k_presentation(g, n).map_err(|e| e.to_string())?).dims(6);
        let kernel = kernel_of(family, n, &s_n, 6)?;
        ensure(kernel == presented, || format!("𝔨 for ({g}, {n}): kernel {kernel:?}, presented {presented:?}"))?;

        let s = s_n.then(&string_delete(family, n - 1, n - 1).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let alg = DkAlgebra::new(family, n).map_err(|e| e.to_string())?;
        let presented = LieQuotient::new(h_presentation(&alg).map_err(|e| e.to_string())?).dims(6);
        let kernel = kernel_of(family, n, &s, 6)?;
        ensure(kernel == presented, || format!("𝔥 for ({g}, {n}): kernel {kernel:?}, presented {presented:?}"))?;
    }
    Ok(())
}

fn phi() -> Check {
    for (g, n) in [(0, 2), (1, 0)] {
        let report = verify_phi(g, n, 4).map_err(|e| e.to_string())?;
        ensure(report.holds && report.relations_hold, || format!("({g}, {n}): {:?}", report.witness))?;
        ensure(report.degrees.len() == 4, || format!("({g}, {n}): {} degrees checked", report.degrees.len()))?;
        for r in &report.degrees {
            ensure(r.rank == r.source_dim && r.rank == r.target_dim, || format!("({g}, {n}) degree {}: not a bijection", r.degree))?;
        }
    }
    Ok(())
}

/// Each value is `c` times its own generator, with one `c` for all.
fn is_multiple_of_d(table: &[TensorElement], alphabet: &Arc<Alphabet>) -> bool {
    let mut scale: Option<Rational> = None;
    for (g, v) in alphabet.letters().zip(table) {
        let ctx = v.ctx();
        let c = v.coeff(&ctx.word(vec![g]));
        if *v != TensorElement::generator(ctx, g).scale(&c) || scale.as_ref().is_some_and(|s| *s != c) {
            return false;
        }
        scale = Some(c);
    }
    scale.is_some_and(|s| s != rat(0))
}

fn rigidity() -> Check {
    for names in [vec!["x1", "y1"], vec!["x1", "y1", "x2"]] {
        let a = Alphabet::new(names.iter().map(|n| (*n, 1))).map_err(|e| e.to_string())?;
        let sols = solve_two_sided_derivatives(&a, 4);
        ensure(sols.len() == 1, || format!("{names:?}: dimension {}", sols.len()))?;
        ensure(is_multiple_of_d(&sols[0], &a), || format!("{names:?}: not spanned by D"))?;
    }
    Ok(())
}

fn extension_basis(ctx: &Context, d: u32) -> Vec<(u32, ExtensionElement)> {
    let mut out: Vec<(u32, ExtensionElement)> =
        sum_basis(ctx, d).iter().map(|k| (k.degree(), ExtensionElement::from_pair(LiePair::basis(ctx, k)))).collect();
    for w in ctx.alphabet().words_up_to(d) {
        if w.degree() + 2 <= d {
            out.push((w.degree() + 2, ExtensionElement::from_tail(TensorElement::from_word(ctx, w, rat(1)))));
        }
    }
    out
}

fn jacobi(z: &RelativeCocycle, d: u32) -> Check {
    let basis = extension_basis(z.ctx(), d);
    let br = |a: &ExtensionElement, b: &ExtensionElement| extension_bracket(z, a, b).map_err(|e| e.to_string());
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            for k in j + 1..basis.len() {
                if basis[i].0 + basis[j].0 + basis[k].0 > d {
                    continue;
                }
                let (a, b, c) = (&basis[i].1, &basis[j].1, &basis[k].1);
                let sum = br(&br(a, b)?, c)?.try_add(&br(&br(b, c)?, a)?).map_err(|e| e.to_string())?;
                let sum = sum.try_add(&br(&br(c, a)?, b)?).map_err(|e| e.to_string())?;
                ensure(sum.is_zero(), || format!("Jacobi fails on basis triple ({i}, {j}, {k})"))?;
            }
        }
    }
    Ok(())
}

fn cocycles() -> Check {
    for (g, n, framing) in grid() {
        let sc = SurfaceContext::new(g, n, 4).map_err(|e| e.to_string())?;
        let q = make_q_framing(&sc, &framing).map_err(|e| e.to_string())?;
        let z = e_functor(&q, &make_rho_g(&sc)).map_err(|e| e.to_string())?;
        let report = check_relative_closed(&z).map_err(|e| e.to_string())?;
        ensure(report.closed, || format!("({g}, {n}, {framing}): {:?}", report.witness))?;
        jacobi(&z, 4).map_err(|e| format!("({g}, {n}, {framing}): {e}"))?;
    }
    Ok(())
}

fn bracket_vanishes(rho: &gt_fox::FoxPairing, d: u32) -> Check {
    let ctx = rho.ctx();
    let words = cyclic_words(ctx, d);
    for u in &words {
        for v in words.iter().filter(|v| u.degree() + v.degree() <= d) {
            let b = bracket_cyclic(rho, &CyclicElement::from_word(ctx, u), &CyclicElement::from_word(ctx, v)).map_err(|e| e.to_string())?;
            ensure(b.is_zero(), || format!("bracket is {}", b.display()))?;
        }
    }
    Ok(())
}

fn conjugation() -> Check {
    let sc = SurfaceContext::new(1, 1, 4).map_err(|e| e.to_string())?;
    let x = TensorElement::generator(sc.ctx(), sc.x(1)).exp_truncated().map_err(|e| e.to_string())?;
    let d = conjugation_defect(&x, &make_rho_g(&sc), 4).map_err(|e| e.to_string())?;
    ensure(d.commutes, || format!("{:?}", d.witness))?;
    bracket_vanishes(&d.rho_h, 4)
}

/// `B_0 = 1` and `Σ_{k ≤ m} C(m + 1, k) B_k = 0`; the coefficient of `ω^j`
/// is `B_{j+1} / (j+1)!`.
fn bernoulli_by_recurrence(count: usize) -> Vec<Rational> {
    let mut b = vec![rat(1)];
    for m in 1..=count {
        let mut binom = rat(1);
        let mut s = rat(0);
        for (k, bk) in b.iter().enumerate() {
            s += &binom * bk;
            binom = binom * rat((m + 1 - k) as i64) / rat(k as i64 + 1);
        }
        b.push(-s / rat(m as i64 + 1));
    }
    let mut fact = rat(1);
    let mut out = Vec::new();
    for (j, bj) in b.iter().enumerate().skip(1) {
        fact *= rat(j as i64);
        out.push(bj / &fact);
    }
    out
}

fn bernoulli() -> Check {
    let expected = bernoulli_by_recurrence(7);
    let got = phi_coefficients(6);
    ensure(got == expected, || format!("coefficients {got:?}, recurrence {expected:?}"))?;
    ensure(got[3] == frac(-1, 720), || "ω³ coefficient".into())?;
    let sc = SurfaceContext::new(1, 1, 4).map_err(|e| e.to_string())?;
    let phi = bernoulli_phi(&sc, 4);
    bracket_vanishes(&phi.pairing, 4)
}

fn cli() -> Check {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let runs: [(&[&str], &str); 3] = [
        (&["bracket", "-g", "1", "-n", "1", "-N", "4", "x1", "y1"], "bracket_x1_y1.txt"),
        (&["verify", "bialgebra", "-g", "0", "-n", "2", "-N", "5", "--framing", "adapted"], "verify_bialgebra_g0_n2.txt"),
        (&["verify", "phi", "-g", "0", "-n", "2", "-D", "4"], "verify_phi_g0_n2.txt"),
    ];
    for (args, file) in runs {
        let out = Command::new(env!("CARGO_BIN_EXE_gt")).args(args).output().map_err(|e| e.to_string())?;
        let expected = std::fs::read_to_string(golden.join(file)).map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || format!("gt {} exited with {:?}", args.join(" "), out.status.code()))?;
        ensure(String::from_utf8_lossy(&out.stdout) == expected, || format!("gt {} differs from {file}", args.join(" ")))?;
    }

    let sc = SurfaceContext::new(1, 2, 4).map_err(|e| e.to_string())?;
    let ctx = sc.ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let mut e = TensorElement::zero(ctx);
        for _ in 0..rng.gen_range(0..6) {
            let mut letters = Vec::new();
            let mut degree = 0;
            while rng.gen_bool(0.7) {
                let l = rng.gen_range(0..4u16);
                if degree + ctx.alphabet().degree(l) > 4 {
                    break;
                }
                degree += ctx.alphabet().degree(l);
                letters.push(l);
            }
            e.add_term(ctx.word(letters), frac(rng.gen_range(-9..=9), rng.gen_range(1..=6)));
        }
        let text = print_element(&e);
        ensure(parse_element(&text, ctx).map_err(|err| err.to_string())? == e, || format!("`{text}` does not parse back"))?;
        let json = serde_json::to_string(&e.to_json()).map_err(|err| err.to_string())?;
        let back: ElementJson = serde_json::from_str(&json).map_err(|err| err.to_string())?;
        ensure(TensorElement::from_json(ctx.alphabet(), &back).map_err(|err| err.to_string())? == e, || format!("JSON of `{text}`"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("generator table of the double bracket", kappa),
        ("exact data have zero bracket and cobracket", exactness),
        ("brackets are well defined on cyclic words", well_defined),
        ("cobracket agrees with the direct formula", mu_oracle),
        ("involutive bialgebra axioms", bialgebra),
        ("cosimplicial identities and the framing term", dk_identities),
        ("kernel presentations", kernels),
        ("isomorphism onto the Goldman extension", phi),
        ("two-sided derivatives are multiples of D", rigidity),
        ("surface cocycles are closed", cocycles),
        ("conjugation defect", conjugation),
        ("Bernoulli element", bernoulli),
        ("command line", cli),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2}: pass  {name} ({secs:.2} s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2} s): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
