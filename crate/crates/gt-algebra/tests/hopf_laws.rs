use std::sync::Arc;

use gt_algebra::*;
use proptest::prelude::*;

fn alphabet() -> Arc<Alphabet> {
    Alphabet::new([("x1", 1), ("y1", 1), ("z1", 2)]).unwrap()
}

fn element(ctx: &Context, raw: &[(Vec<u16>, i64, i64)]) -> TensorElement {
    let mut e = TensorElement::zero(ctx);
    for (letters, n, d) in raw {
        let letters: Vec<u16> = letters.iter().map(|l| l % 3).collect();
        e.add_term(ctx.word(letters), frac(*n, *d));
    }
    e
}

fn raw_terms() -> impl Strategy<Value = Vec<(Vec<u16>, i64, i64)>> {
    prop::collection::vec((prop::collection::vec(0u16..3, 0..4), -5i64..6, 1i64..4), 0..5)
}

fn flatten3(t: &TensorSquareElement, left_first: bool) -> Vec<((Word, Word, Word), Rational)> {
    // (Δ ⊗ id)Δ or (id ⊗ Δ)Δ written as triples
    let ctx = t.ctx().clone();
    let mut out = std::collections::BTreeMap::new();
    for ((u, v), c) in t.iter() {
        let split = if left_first { u } else { v };
        let other = if left_first { v } else { u };
        let d = TensorElement::from_word(&ctx, split.clone(), Rational::from_integer(1.into())).coproduct();
        for ((p, q), e) in d.iter() {
            let key = if left_first { (p.clone(), q.clone(), other.clone()) } else { (other.clone(), p.clone(), q.clone()) };
            *out.entry(key).or_insert_with(|| rat(0)) += c * e;
        }
    }
    out.into_iter().filter(|(_, c)| *c != rat(0)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coassociative(raw in raw_terms()) {
        let ctx = Context::new(alphabet(), 5);
        let a = element(&ctx, &raw);
        let d = a.coproduct();
        prop_assert_eq!(flatten3(&d, true), flatten3(&d, false));
    }

    #[test]
    fn counit_laws(raw in raw_terms()) {
        let ctx = Context::new(alphabet(), 5);
        let a = element(&ctx, &raw);
        let d = a.coproduct();
        prop_assert_eq!(d.counit_left(), a.clone());
        prop_assert_eq!(d.counit_right(), a);
    }

    #[test]
    fn antipode_axiom_and_involution(raw in raw_terms()) {
        let ctx = Context::new(alphabet(), 5);
        let a = element(&ctx, &raw);
        let d = a.coproduct();
        let lhs = d.map_legs(|u| TensorElement::from_word(&ctx, u.clone(), rat(1)).antipode(), |v| TensorElement::from_word(&ctx, v.clone(), rat(1))).multiply();
        prop_assert_eq!(lhs, TensorElement::scalar(&ctx, a.counit()));
        prop_assert_eq!(a.antipode().antipode(), a);
    }

    #[test]
    fn cocommutative(raw in raw_terms()) {
        let ctx = Context::new(alphabet(), 5);
        let a = element(&ctx, &raw);
        prop_assert_eq!(a.coproduct().swap(), a.coproduct());
    }

    #[test]
    fn coproduct_is_multiplicative(ra in raw_terms(), rb in raw_terms()) {
        let ctx = Context::new(alphabet(), 5);
        let a = element(&ctx, &ra);
        let b = element(&ctx, &rb);
        prop_assert_eq!((&a * &b).coproduct(), a.coproduct().product(&b.coproduct()).unwrap());
    }

    #[test]
    fn cyclic_rotation_invariance(u in prop::collection::vec(0u16..3, 0..4), v in prop::collection::vec(0u16..3, 0..4)) {
        let ctx = Context::new(alphabet(), 10);
        let a = TensorElement::from_word(&ctx, ctx.word(u), rat(1));
        let b = TensorElement::from_word(&ctx, ctx.word(v), rat(1));
        prop_assert_eq!(cyclic_project(&(&a * &b)), cyclic_project(&(&b * &a)));
    }

    #[test]
    fn brackets_are_primitive(ra in raw_terms(), rb in raw_terms()) {
        let ctx = Context::new(alphabet(), 5);
        // only the degree-one part of random data is primitive; bracket it
        let a = element(&ctx, &ra).homogeneous_part(1);
        let b = element(&ctx, &rb).homogeneous_part(2);
        let la = LieElement::from_primitive(a).unwrap();
        let lb = LieElement::from_primitive(b.clone()).or_else(|_| LieElement::from_primitive(TensorElement::zero(&ctx))).unwrap();
        let br = lie_bracket(&la, &lb).unwrap();
        prop_assert!(is_primitive(br.tensor()));
    }
}

#[test]
fn coproduct_of_exponential_is_grouplike() {
    for n in 1..=4 {
        let ctx = Context::new(alphabet(), n);
        let x = TensorElement::named(&ctx, "x1").unwrap();
        let z = TensorElement::named(&ctx, "z1").unwrap();
        let e = (&x + &z.scale(&frac(1, 3))).exp_truncated().unwrap();
        let expected = TensorSquareElement::tensor(&e, &e).unwrap();
        assert_eq!(e.coproduct(), expected, "N = {n}");
    }
}

#[test]
fn coproduct_of_two_letters() {
    let a = Alphabet::new([("x1", 1), ("x2", 1)]).unwrap();
    let ctx = Context::new(a, 4);
    let w = &TensorElement::named(&ctx, "x1").unwrap() * &TensorElement::named(&ctx, "x2").unwrap();
    let text = w.coproduct().display().to_string();
    for piece in ["x1.x2 ⊗ 1", "x1 ⊗ x2", "x2 ⊗ x1", "1 ⊗ x1.x2"] {
        assert!(text.contains(piece), "{text}");
    }
    assert_eq!(w.coproduct().len(), 4);
}

/// Dimension oracle: solve prod_d (1 - t^d)^(-l_d) = 1 / (1 - p(t)) for l_d
/// degree by degree (PBW), independently of the necklace formula.
fn pbw_dims(alphabet: &Alphabet, dmax: usize) -> Vec<i128> {
    let mut words = vec![0i128; dmax + 1];
    words[0] = 1;
    for n in 1..=dmax {
        for l in alphabet.letters() {
            let k = alphabet.degree(l) as usize;
            if k <= n {
                words[n] += words[n - k];
            }
        }
    }
    let mut dims = vec![0i128; dmax + 1];
    for d in 1..=dmax {
        // series of prod_{e<d} (1 - t^e)^(-l_e), coefficient of t^d
        let mut series = vec![0i128; dmax + 1];
        series[0] = 1;
        for e in 1..d {
            for _ in 0..dims[e] {
                for n in e..=dmax {
                    series[n] += series[n - e];
                }
            }
        }
        dims[d] = words[d] - series[d];
    }
    dims
}

#[test]
fn lyndon_counts_match_pbw_oracle() {
    let alphabets = vec![
        Alphabet::new([("a", 1), ("b", 1)]).unwrap(),
        Alphabet::new([("a", 1), ("b", 1), ("c", 1)]).unwrap(),
        Alphabet::new([("x1", 1), ("y1", 1), ("z1", 2)]).unwrap(),
        Alphabet::new([("z1", 2), ("z2", 2)]).unwrap(),
        Alphabet::new([("t", 2), ("x", 1), ("y", 1), ("u", 2)]).unwrap(),
    ];
    for a in alphabets {
        let oracle = pbw_dims(&a, 7);
        let ctx = Context::new(a.clone(), 7);
        for d in 1..=7u32 {
            let basis = lyndon_basis(&ctx, d);
            assert_eq!(basis.len() as i128, oracle[d as usize], "degree {d}");
            assert_eq!(free_lie_dimension(&a, d) as i128, oracle[d as usize]);
            for e in &basis {
                assert!(is_primitive(e.element.tensor()));
            }
        }
    }
}

#[test]
fn exp_examples() {
    let ctx = Context::new(alphabet(), 2);
    let x = TensorElement::named(&ctx, "x1").unwrap();
    assert_eq!(x.exp_truncated().unwrap().display().to_string(), "1 + x1 + 1/2*x1.x1");
    assert!(matches!(TensorElement::one(&ctx).exp_truncated(), Err(AlgebraError::NonAugmentedInput(_))));
}
