//! The degreewise quotient against a direct computation of the ideal inside
//! the free Lie algebra: `I_d = span(relations of degree d) + Σ_g [g, I_{d - deg g}]`
//! in Lyndon coordinates, quotient dimension `dim L_d - rank I_d`.

use std::collections::BTreeMap;

use gt_algebra::{commutator, lyndon_basis, lyndon_coordinates, rat, Alphabet, Context, EchelonBasis, Letter, LieExpr, SparseVec, TensorElement};
use gt_braid::{br, DkAlgebra, DkFamily, GradedPresentation, LieQuotient, QuotientElement};
use proptest::prelude::*;

fn fixpoint_dims(p: &GradedPresentation, d_max: u32) -> Vec<usize> {
    let ctx = Context::new(p.alphabet().clone(), d_max);
    let alphabet = p.alphabet().clone();
    let relations = p.expanded_relations();
    let mut ideal: Vec<Vec<TensorElement>> = vec![Vec::new(); d_max as usize + 1];
    let mut dims = Vec::new();
    for d in 1..=d_max {
        let index: BTreeMap<Vec<Letter>, usize> =
            lyndon_basis(&ctx, d).into_iter().enumerate().map(|(i, e)| (e.word.letters().to_vec(), i)).collect();
        let mut candidates: Vec<TensorElement> =
            relations.iter().filter(|r| r.degree(&alphabet) == Some(d)).map(|r| r.to_tensor(&ctx)).collect();
        for g in alphabet.letters() {
            let eg = alphabet.degree(g);
            if eg < d {
                let gt = TensorElement::generator(&ctx, g);
                for v in &ideal[(d - eg) as usize] {
                    candidates.push(commutator(&gt, v).unwrap());
                }
            }
        }
        let mut span = EchelonBasis::new();
        for c in candidates {
            let coords: SparseVec = lyndon_coordinates(&c).unwrap().into_iter().map(|(w, x)| (index[&w], x)).collect();
            if span.insert(&coords) {
                ideal[d as usize].push(c);
            }
        }
        dims.push(index.len() - span.rank());
    }
    dims
}

fn engine_dims(p: &GradedPresentation, d_max: u32) -> Vec<usize> {
    LieQuotient::new(p.clone()).dims(d_max)
}

#[test]
fn drinfeld_kohno_dimensions_agree() {
    let cases = [
        (DkFamily::Unframed, 3, 6),
        (DkFamily::Unframed, 4, 6),
        (DkFamily::Framed, 1, 6),
        (DkFamily::Framed, 3, 6),
        (DkFamily::Genus(0), 3, 6),
        (DkFamily::Genus(1), 1, 6),
        (DkFamily::Genus(1), 2, 5),
    ];
    for (family, n, d) in cases {
        let p = DkAlgebra::new(family, n).unwrap().presentation().clone();
        assert_eq!(engine_dims(&p, d), fixpoint_dims(&p, d), "{family} on {n} strands");
    }
}

#[test]
fn documented_dimensions() {
    // t_3 is the centre plus a free Lie algebra on two generators
    let t3 = DkAlgebra::new(DkFamily::Unframed, 3).unwrap();
    assert_eq!(engine_dims(t3.presentation(), 6), vec![0, 3, 0, 1, 0, 2]);
    let t1f = DkAlgebra::new(DkFamily::Framed, 1).unwrap();
    assert_eq!(engine_dims(t1f.presentation(), 6), vec![0, 1, 0, 0, 0, 0]);
    // t_4 = F_3 ⋊ t_3
    let t4 = DkAlgebra::new(DkFamily::Unframed, 4).unwrap();
    assert_eq!(engine_dims(t4.presentation(), 6), vec![0, 6, 0, 4, 0, 10]);
}

#[test]
fn free_algebra_matches_witt_formula() {
    let a = Alphabet::new([("a", 1), ("b", 1), ("c", 2)]).unwrap();
    let p = GradedPresentation::free(a.clone());
    let expected: Vec<usize> = (1..=7).map(|d| gt_algebra::free_lie_dimension(&a, d) as usize).collect();
    assert_eq!(engine_dims(&p, 7), expected);
}

#[test]
fn normal_form_examples() {
    let t2 = DkAlgebra::new(DkFamily::Framed, 2).unwrap();
    let q = LieQuotient::new(t2.presentation().clone());
    let (t11, t12) = (t2.t(1, 1).unwrap(), t2.t(1, 2).unwrap());
    assert_eq!(t2.t(2, 1), Some(t12));
    let sym = LieExpr::Sum(vec![(rat(1), LieExpr::Gen(t12)), (rat(-1), LieExpr::Gen(t2.t(2, 1).unwrap()))]);
    assert!(q.normal_form(&sym).unwrap().is_zero());
    assert!(q.normal_form(&br(LieExpr::Gen(t11), LieExpr::Gen(t12))).unwrap().is_zero());

    // nothing touches [x2, [x2, y2]] in 𝔨_{1,2}
    let k = LieQuotient::new(gt_braid::k_presentation(1, 2).unwrap());
    let a = k.alphabet().clone();
    let (x, y) = (a.letter("x2").unwrap(), a.letter("y2").unwrap());
    let e = br(LieExpr::Gen(x), br(LieExpr::Gen(x), LieExpr::Gen(y)));
    let nf = k.normal_form(&e).unwrap();
    assert_eq!(nf.coords().len(), 1);
    assert_eq!(k.normal_form(&k.to_expr(&nf)).unwrap(), nf);

    let inhom = LieExpr::Sum(vec![(rat(1), LieExpr::Gen(x)), (rat(1), br(LieExpr::Gen(x), LieExpr::Gen(y)))]);
    assert!(matches!(k.normal_form(&inhom), Err(gt_braid::BraidError::InhomogeneousInput(_))));
    assert!(gt_braid::normal_form(k.presentation(), &e, 4).is_err());
    assert_eq!(gt_braid::normal_form(k.presentation(), &e, 3).unwrap(), nf);
}

#[test]
fn central_generators_commute_with_every_basis_element() {
    let alg = DkAlgebra::new(DkFamily::Genus(1), 2).unwrap();
    let q = LieQuotient::new(alg.presentation().clone());
    for c in [alg.t(1, 1).unwrap(), alg.t(2, 2).unwrap()] {
        let cc = q.generator(c);
        for d in 1..=4 {
            for i in 0..q.dim(d) {
                assert!(q.bracket(&cc, &QuotientElement::basis((d, i))).is_zero());
            }
        }
    }
    let k = LieQuotient::new(gt_braid::k_presentation(2, 2).unwrap());
    let t22 = k.generator(k.presentation().generator("t22").unwrap());
    for d in 1..=4 {
        for i in 0..k.dim(d) {
            assert!(k.bracket(&t22, &QuotientElement::basis((d, i))).is_zero());
        }
    }
}

#[test]
fn relation_rank_accounts_for_the_tails() {
    let p = DkAlgebra::new(DkFamily::Genus(1), 2).unwrap().presentation().clone();
    let q = LieQuotient::new(p);
    for d in 1..=5 {
        let c = q.component(d);
        assert_eq!(c.tails - c.relation_rank, c.dim());
        assert_eq!(c.degree, d);
    }
    assert_eq!(q.component(0).dim(), 0);
}

fn expr_strategy() -> impl Strategy<Value = Vec<(i64, usize)>> {
    // coefficients on the Lyndon basis of degree 2 or 3 over {a, b} ∪ {c}
    prop::collection::vec((-2i64..=2, 0usize..8), 1..4)
}

fn relation_from(ctx: &Context, d: u32, terms: &[(i64, usize)]) -> LieExpr {
    let basis = lyndon_basis(ctx, d);
    LieExpr::Sum(terms.iter().map(|&(c, i)| (rat(c), basis[i % basis.len()].expr.clone())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_presentations_agree(r2 in expr_strategy(), r3 in expr_strategy(), central in prop::option::of(0u16..3)) {
        let a = Alphabet::new([("a", 1), ("b", 1), ("c", 2)]).unwrap();
        let ctx = Context::new(a.clone(), 5);
        let rels = vec![relation_from(&ctx, 2, &r2), relation_from(&ctx, 3, &r3)];
        let p = GradedPresentation::new(a, rels, central.into_iter().collect()).unwrap();
        prop_assert_eq!(engine_dims(&p, 5), fixpoint_dims(&p, 5));
    }

    #[test]
    fn normal_form_is_linear_and_idempotent(u in expr_strategy(), v in expr_strategy(), c in -3i64..=3) {
        let alg = DkAlgebra::new(DkFamily::Genus(1), 2).unwrap();
        let q = LieQuotient::new(alg.presentation().clone());
        let ctx = Context::new(alg.alphabet().clone(), 4);
        let (eu, ev) = (relation_from(&ctx, 3, &u), relation_from(&ctx, 3, &v));
        let (nu, nv) = (q.normal_form(&eu).unwrap(), q.normal_form(&ev).unwrap());
        let sum = LieExpr::Sum(vec![(rat(1), eu), (rat(c), ev)]);
        prop_assert_eq!(q.normal_form(&sum).unwrap(), nu.try_add(&nv.scale(&rat(c))).unwrap());
        prop_assert_eq!(q.normal_form(&q.to_expr(&nu)).unwrap(), nu);
    }
}
