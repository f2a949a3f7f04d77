use gt_algebra::*;
use gt_brackets::{bracket_cyclic, dq_map};
use gt_cocycles::{check_fox_morphism, AlgebraMap, MediatedFox};
use gt_fox::*;
use gt_surface::*;

fn word_elem(ctx: &Context, names: &[&str]) -> TensorElement {
    TensorElement::from_word(ctx, ctx.word_from_names(names).unwrap(), rat(1))
}

fn cyclic_words(ctx: &Context, d: u32) -> Vec<Word> {
    let mut ws: Vec<Word> = ctx.alphabet().words_up_to(d).into_iter().filter(|w| !w.is_empty()).map(|w| w.min_rotation()).collect();
    ws.sort();
    ws.dedup();
    ws
}

#[test]
fn rho_g_tables() {
    let sc = SurfaceContext::new(1, 1, 4).unwrap();
    let rho = make_rho_g(&sc);
    let ctx = sc.ctx();
    let entries: Vec<(Letter, Letter, TensorElement)> = rho.entries().map(|(a, b, v)| (a, b, v.clone())).collect();
    assert_eq!(
        entries,
        vec![
            (sc.x(1), sc.y(1), TensorElement::one(ctx)),
            (sc.y(1), sc.x(1), -&TensorElement::one(ctx)),
            (sc.z(1), sc.z(1), -&TensorElement::generator(ctx, sc.z(1))),
        ]
    );
    let sc = SurfaceContext::new(0, 2, 4).unwrap();
    let rho = make_rho_g(&sc);
    assert_eq!(rho.entries().count(), 2);
    assert_eq!(rho.value(sc.z(2), sc.z(2)), &-&TensorElement::generator(sc.ctx(), sc.z(2)));
    assert!(rho.value(sc.z(1), sc.z(2)).is_zero());
    for (g, n) in [(1, 1), (2, 2), (0, 2)] {
        let sc = SurfaceContext::new(g, n, 4).unwrap();
        let rho = make_rho_g(&sc);
        assert_eq!(rho.transpose(), rho.neg());
    }
}

#[test]
fn framed_quasi_derivations() {
    let sc = SurfaceContext::new(1, 2, 4).unwrap();
    let ctx = sc.ctx();
    let q = make_q_framing(&sc, &Framing::Adapted).unwrap();
    assert!(q.table().iter().all(TensorElement::is_zero));
    let q = make_q_framing(&sc, &Framing::Rotations(vec![2, -3])).unwrap();
    assert_eq!(q.value(sc.z(1)), &TensorElement::scalar(ctx, rat(3)));
    assert_eq!(q.value(sc.z(2)), &TensorElement::scalar(ctx, rat(-2)));
    assert!(q.value(sc.x(1)).is_zero());
    assert_eq!(q.sigma(), &make_rho_g(&sc).neg());
    let qt = q.transpose();
    for l in ctx.alphabet().letters() {
        assert_eq!(qt.value(l), &-q.value(l));
    }
    // q(ab) = q(a) b + a q(b) + ρ_G(a, b)
    let (a, b) = (word_elem(ctx, &["z1", "x1"]), word_elem(ctx, &["y1"]));
    let lhs = q.eval(&(&a * &b)).unwrap();
    let rhs = &(&(&q.eval(&a).unwrap() * &b) + &(&a * &q.eval(&b).unwrap())) + &make_rho_g(&sc).eval(&a, &b).unwrap();
    assert_eq!(lhs, rhs);
    assert!(make_q_framing(&sc, &Framing::Rotations(vec![1])).is_err());
}

#[test]
fn kappa_reproduces_generator_table() {
    for g in 0..=2 {
        for n in 1..=2 {
            let sc = SurfaceContext::new(g, n, 4).unwrap();
            assert_eq!(kappa_table(&sc).unwrap(), kappa_reference(&sc), "g = {g}, n = {n}");
        }
    }
    let sc = SurfaceContext::new(1, 1, 4).unwrap();
    let table = kappa_table(&sc).unwrap();
    assert_eq!(table[&(sc.x(1), sc.y(1))].display().to_string(), "1 ⊗ 1");
    assert_eq!(table[&(sc.z(1), sc.z(1))].display().to_string(), "-1 ⊗ z1 + z1 ⊗ 1");
    assert!(!table.contains_key(&(sc.x(1), sc.x(1))));
}

fn check_mu_oracle(g: usize, n: usize, framing: &Framing, d: u32) {
    let sc = SurfaceContext::new(g, n, d).unwrap();
    let ctx = sc.ctx();
    let q = make_q_framing(&sc, framing).unwrap();
    let mut count = 0;
    for w in ctx.alphabet().words_up_to(d) {
        let a = TensorElement::from_word(ctx, w.clone(), rat(1));
        let oracle = mu_r_oracle(&sc, framing, &a).unwrap();
        let direct = cyclic_left(&dq_map(&q, &a).unwrap());
        assert_eq!(direct, oracle, "g = {g}, n = {n}, {framing}, word {}", w.display(ctx.alphabet()));
        count += 1;
    }
    assert!(count >= 7);
}

#[test]
fn mu_oracle_matches_dq_map() {
    for framing in [Framing::Adapted, Framing::Rotations(vec![1, -2])] {
        check_mu_oracle(0, 2, &framing, 5);
        check_mu_oracle(1, 2, &framing, 5);
    }
    check_mu_oracle(1, 1, &Framing::Rotations(vec![2]), 5);
}

#[test]
fn mu_oracle_examples() {
    let sc = SurfaceContext::new(1, 1, 4).unwrap();
    let ctx = sc.ctx();
    let fr = Framing::Rotations(vec![2]);
    let z1 = mu_r_oracle(&sc, &fr, &word_elem(ctx, &["z1"])).unwrap();
    assert_eq!(z1, TensorSquareElement::from_terms(ctx, [((Word::empty(), Word::empty()), rat(3))]));
    // only κ(x1, y1) = 1 ⊗ 1 contributes, with nothing around it
    let xy = mu_r_oracle(&sc, &fr, &word_elem(ctx, &["x1", "y1"])).unwrap();
    assert_eq!(xy, TensorSquareElement::from_terms(ctx, [((Word::empty(), Word::empty()), rat(1))]));
    let err = mu_r_oracle(&sc, &fr, &(&word_elem(ctx, &["x1"]) + &word_elem(ctx, &["y1"])));
    assert!(matches!(err, Err(SurfaceError::NonGeneratorWord(_))));
}

#[test]
fn bialgebra_acceptance_grid() {
    for (g, n, framing) in [(0, 2, Framing::Adapted), (1, 1, Framing::Adapted), (1, 1, Framing::Rotations(vec![2]))] {
        let sc = SurfaceContext::new(g, n, 4).unwrap();
        let report = verify_bialgebra(&sc, &framing, 4).unwrap();
        let names: Vec<&str> = report.checks.iter().map(|c| c.check.as_str()).collect();
        assert_eq!(names, ["antisymmetry", "jacobi", "co-antisymmetry", "co-jacobi", "compatibility"]);
        for c in &report.checks {
            assert!(c.passed(), "g = {g}, n = {n}, {framing}: {c}");
        }
    }
}

#[test]
fn bialgebra_genus_zero_degree_five() {
    let sc = SurfaceContext::new(0, 2, 5).unwrap();
    let report = verify_bialgebra(&sc, &Framing::Adapted, 5).unwrap();
    assert!(report.passed(), "{:?}", report);
}

#[test]
fn perturbed_cobracket_fails_with_witness() {
    let sc = SurfaceContext::new(1, 1, 4).unwrap();
    let ctx = sc.ctx();
    let rho = make_rho_g(&sc);
    let q = make_q_framing(&sc, &Framing::Adapted).unwrap();
    let x1 = sc.x(1);
    let bad = q.with_table(|l| if l == x1 { TensorElement::generator(ctx, x1).pow(3) } else { q.value(l).clone() });
    let report = verify_bialgebra_with(&rho, &bad, 4).unwrap();
    assert!(!report.passed());
    let failed = report.checks.iter().find(|c| !c.passed()).unwrap();
    assert!(failed.witness.as_deref().is_some_and(|w| !w.is_empty()));
}

#[test]
fn report_json_layout() {
    let sc = SurfaceContext::new(0, 1, 3).unwrap();
    let report = verify_bialgebra(&sc, &Framing::Adapted, 3).unwrap();
    let json = serde_json::to_string(&report.checks[1]).unwrap();
    assert_eq!(json, r#"{"check":"jacobi","status":"pass","degree":3,"witness":null}"#);
    let all: serde_json::Value = serde_json::to_value(&report).unwrap();
    assert_eq!(all.as_array().unwrap().len(), 5);
}

/// Taylor coefficients of `t / (e^t - 1)` by inverting `(e^t - 1) / t`,
/// giving `B_k / k!`; the coefficient of `ω^j` in `φ` is then the entry
/// `j + 1`.
fn phi_by_series_inversion(k: usize) -> Vec<Rational> {
    let mut f = vec![rat(1); k + 2];
    let mut fact = rat(1);
    for (i, c) in f.iter_mut().enumerate() {
        fact *= rat(i as i64 + 1);
        *c = rat(1) / fact.clone();
    }
    let mut inv = vec![rat(0); k + 2];
    inv[0] = rat(1);
    for m in 1..k + 2 {
        let mut s = rat(0);
        for i in 1..=m {
            s += &f[i] * &inv[m - i];
        }
        inv[m] = -s;
    }
    inv[1..].to_vec()
}

#[test]
fn bernoulli_coefficients_match_oracle() {
    let oracle = phi_by_series_inversion(6);
    assert_eq!(phi_coefficients(6), oracle);
    assert_eq!(
        phi_coefficients(6),
        vec![frac(-1, 2), frac(1, 12), rat(0), frac(-1, 720), rat(0), frac(1, 30240), rat(0)]
    );
    let b = bernoulli_numbers(12);
    assert_eq!(b[12], frac(-691, 2730));
}

#[test]
fn bernoulli_element_and_pairing() {
    let sc = SurfaceContext::new(1, 1, 8).unwrap();
    let ctx = sc.ctx();
    let phi = bernoulli_phi(&sc, 8);
    assert_eq!(phi.coefficients.len(), 5);
    let omega = sc.omega();
    let expected = &(&(&TensorElement::scalar(ctx, frac(-1, 2)) + &omega.scale(&frac(1, 12))) + &omega.pow(3).scale(&frac(-1, 720)))
        + &TensorElement::zero(ctx);
    assert_eq!(phi.phi, expected);
    let sc = SurfaceContext::new(1, 1, 4).unwrap();
    let phi = bernoulli_phi(&sc, 4);
    assert!(phi.pairing.is_exact());
    let words = cyclic_words(sc.ctx(), 4);
    for u in &words {
        for v in &words {
            if u.degree() + v.degree() > 4 {
                continue;
            }
            let b = bracket_cyclic(&phi.pairing, &CyclicElement::from_word(sc.ctx(), u), &CyclicElement::from_word(sc.ctx(), v)).unwrap();
            assert!(b.is_zero());
        }
    }
}

#[test]
fn conjugation_by_one_is_trivial() {
    let sc = SurfaceContext::new(1, 1, 4).unwrap();
    let d = conjugation_defect(&TensorElement::one(sc.ctx()), &make_rho_g(&sc), 4).unwrap();
    assert!(d.commutes);
    assert_eq!(d.rho_h.entries().count(), 0);
}

fn assert_bracket_vanishes(rho: &FoxPairing, d: u32) {
    let ctx = rho.ctx();
    let words = cyclic_words(ctx, d);
    for u in &words {
        for v in &words {
            if u.degree() + v.degree() <= d {
                let b = bracket_cyclic(rho, &CyclicElement::from_word(ctx, u), &CyclicElement::from_word(ctx, v)).unwrap();
                assert!(b.is_zero(), "{}", b.display());
            }
        }
    }
}

#[test]
fn conjugation_defect_of_exponentials() {
    let sc = SurfaceContext::new(1, 1, 4).unwrap();
    let ctx = sc.ctx();
    let x1 = TensorElement::generator(ctx, sc.x(1));
    let y1 = TensorElement::generator(ctx, sc.y(1));
    let z1 = TensorElement::generator(ctx, sc.z(1));
    let rho = make_rho_g(&sc);
    for x in [x1.exp_truncated().unwrap(), x1.scale(&frac(1, 3)).exp_truncated().unwrap(), (&(&x1 + &y1.scale(&frac(-1, 2))) + &z1).exp_truncated().unwrap()] {
        let d = conjugation_defect(&x, &rho, 4).unwrap();
        assert!(d.commutes, "{:?}", d.witness);
        assert!(d.rho_h.entries().count() > 0);
        assert_bracket_vanishes(&d.rho_h, 4);
    }
    // the identity holds for any pairing, not only ρ_G
    let other = FoxPairing::from_fn(ctx, |a, b| if a == b { &TensorElement::one(ctx) + &x1 } else { TensorElement::zero(ctx) });
    let d = conjugation_defect(&y1.exp_truncated().unwrap(), &other, 4).unwrap();
    assert!(d.commutes, "{:?}", d.witness);
}

#[test]
fn conjugation_rejects_non_group_like() {
    let sc = SurfaceContext::new(1, 1, 4).unwrap();
    let x1 = TensorElement::generator(sc.ctx(), sc.x(1));
    let x = &TensorElement::one(sc.ctx()) + &x1;
    assert!(matches!(conjugation_defect(&x, &make_rho_g(&sc), 4), Err(SurfaceError::NotGroupLike(_))));
    assert!(matches!(check_group_like(&x1), Err(SurfaceError::NotGroupLike(_))));
}

/// Conjugation as a morphism of Fox data: with the defect derivatives
/// `∂_L(a) = -h(ρ(a, x^{-1}))` and `∂_R(b) = -(h(ρ(x, x^{-1})) D(h b) + h(ρ(x, b)))`
/// along `h`, and the source quasi-derivation `h^{-1}(q h - ∂_L - ∂_R)` on
/// generators, the pair passes the Fox-morphism check into `(q^f, ρ_G)`.
#[test]
fn conjugation_is_a_fox_morphism() {
    let d = 4;
    let sc = SurfaceContext::new(1, 1, d + 2).unwrap();
    let ctx = sc.ctx();
    let rho = make_rho_g(&sc);
    let q = make_q_framing(&sc, &Framing::Rotations(vec![2])).unwrap();
    let x = TensorElement::generator(ctx, sc.x(1)).exp_truncated().unwrap();
    let xi = x.inverse().unwrap();
    let h = |a: &TensorElement| &(&xi * a) * &x;
    let h_inv = |a: &TensorElement| &(&x * a) * &xi;
    let gen = |l: Letter| TensorElement::generator(ctx, l);
    let f = AlgebraMap::new(ctx, ctx.alphabet().letters().map(|l| h(&gen(l))).collect()).unwrap();
    let he = h(&rho.eval(&x, &xi).unwrap());
    let dl_val = |l: Letter| -&h(&rho.eval(&gen(l), &xi).unwrap());
    let dr_val = |l: Letter| -&(&(&he * &h(&gen(l))) + &h(&rho.eval(&x, &gen(l)).unwrap()));
    let dl = MediatedFox::from_fn(&f, Side::Left, dl_val);
    let dr = MediatedFox::from_fn(&f, Side::Right, dr_val);
    let qs = QuasiDerivation::from_fn(rho.neg(), |l| h_inv(&(&(&q.eval(&h(&gen(l))).unwrap() - &dl_val(l)) - &dr_val(l))));
    let report = check_fox_morphism(&f, &dl, &dr, (&qs, &rho), (&q, &rho), d).unwrap();
    assert!(report.holds, "{:?}", report.witness);

    let dr_bad = MediatedFox::from_fn(&f, Side::Right, |l| h(&rho.eval(&x, &gen(l)).unwrap()));
    let report = check_fox_morphism(&f, &dl, &dr_bad, (&qs, &rho), (&q, &rho), d).unwrap();
    assert!(!report.holds);
}

mod sampled {
    use super::*;
    use gt_brackets::cobracket_cyclic;
    use proptest::prelude::*;

    fn element(ctx: &Context, raw: &[(Vec<u16>, i64)]) -> CyclicElement {
        let n = ctx.alphabet().len() as u16;
        let mut t = TensorElement::zero(ctx);
        for (letters, c) in raw {
            t.add_term(ctx.word(letters.iter().map(|l| l % n).collect()), rat(*c));
        }
        cyclic_project(&t)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        /// `δ = -P δ` and `[a, b] = -[b, a]` for random framings and elements.
        #[test]
        fn skew_transfer(rot in -3i64..4, raw_a in prop::collection::vec((prop::collection::vec(0u16..3, 1..4), -3i64..4), 1..4),
                         raw_b in prop::collection::vec((prop::collection::vec(0u16..3, 1..3), -3i64..4), 1..3)) {
            let sc = SurfaceContext::new(1, 1, 6).unwrap();
            let ctx = sc.ctx();
            let q = make_q_framing(&sc, &Framing::Rotations(vec![rot])).unwrap();
            let rho = make_rho_g(&sc);
            let a = element(ctx, &raw_a);
            let b = element(ctx, &raw_b);
            let d = cobracket_cyclic(&q, &a).unwrap();
            prop_assert!(d.try_add(&d.swap()).unwrap().is_zero());
            let ab = bracket_cyclic(&rho, &a, &b).unwrap();
            let ba = bracket_cyclic(&rho, &b, &a).unwrap();
            prop_assert!(ab.try_add(&ba).unwrap().is_zero());
        }
    }
}
