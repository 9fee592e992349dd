use std::sync::Arc;

use num_traits::Zero;
use proptest::prelude::*;

use wolfform::algebra::presentation::monomials_of_degree;
use wolfform::algebra::rational::{int, ratio};
use wolfform::algebra::{Echelon, Generator, GradedPolynomial, Rational};
use wolfform::classifier::{decide, xi_classes};
use wolfform::massey::{massey_with_primitives, triple_massey, MasseyOutcome};
use wolfform::model::BundleModel;
use wolfform::rings::{
    divides_linear_bruteforce, divides_linear_criterion, presentation, sigma, sigma_closed, EulerClassSpec,
    SigmaVariant, SpaceId,
};

fn small_spaces() -> Vec<SpaceId> {
    let mut v: Vec<SpaceId> = (1..=5).map(SpaceId::ComplexGrassmannian).collect();
    v.extend((3..=10).map(|n| SpaceId::real_grassmannian(n).unwrap()));
    v.extend([SpaceId::GI, SpaceId::FI, SpaceId::EII]);
    v
}

fn space() -> impl Strategy<Value = SpaceId> {
    prop::sample::select(small_spaces())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn spec_for(space: SpaceId) -> impl Strategy<Value = EulerClassSpec> {
    (rational(), rational(), rational()).prop_map(move |(a, b, c)| match space {
        SpaceId::RealGrassmannianR8 => EulerClassSpec::abc(a, b, c),
        s if s.is_exceptional() => EulerClassSpec::scalar(a),
        _ => EulerClassSpec::ab(a, b),
    })
}

fn space_and_spec() -> impl Strategy<Value = (SpaceId, EulerClassSpec)> {
    space().prop_flat_map(|s| (Just(s), spec_for(s)))
}

fn graded_gens() -> Arc<[Generator]> {
    vec![
        Generator::new("l", 2),
        Generator::new("u", 3),
        Generator::new("x", 4),
        Generator::new("v", 5),
    ]
    .into()
}

/// A random homogeneous polynomial of degree `k` over [`graded_gens`].
fn homogeneous(k: u32) -> impl Strategy<Value = GradedPolynomial> {
    let gens = graded_gens();
    let monomials = monomials_of_degree(&gens, k);
    let n = monomials.len();
    prop::collection::vec(rational(), n)
        .prop_map(move |coeffs| GradedPolynomial::from_terms(&gens, monomials.iter().cloned().zip(coeffs)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graded_commutativity((p, q, dp, dq) in (1u32..=9, 1u32..=9).prop_flat_map(|(a, b)| (homogeneous(a), homogeneous(b), Just(a), Just(b)))) {
        let pq = p.mul(&q).unwrap();
        let qp = q.mul(&p).unwrap();
        if dp % 2 == 1 && dq % 2 == 1 {
            prop_assert_eq!(pq, qp.neg());
        } else {
            prop_assert_eq!(pq, qp);
        }
    }

    #[test]
    fn odd_elements_square_to_zero(p in homogeneous(7)) {
        prop_assert!(p.mul(&p).unwrap().is_zero());
    }

    #[test]
    fn display_parse_round_trip(p in homogeneous(8)) {
        let back = GradedPolynomial::parse(p.generators(), &p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn reduction_is_idempotent_on_basis((s, k) in space().prop_flat_map(|s| (Just(s), 0..=s.formal_dimension().unwrap()))) {
        let ring = presentation(s).unwrap();
        let basis = ring.degree_basis(k).basis_polynomials(ring.generators());
        for (i, b) in basis.iter().enumerate() {
            let v = ring.normal_form(b).unwrap();
            for (j, c) in v.iter().enumerate() {
                prop_assert_eq!(c.clone(), if i == j { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn relation_multiples_vanish((s, pick, k) in (space(), any::<prop::sample::Index>(), 0u32..=60)) {
        let ring = presentation(s).unwrap();
        let r = pick.get(ring.relations());
        let d = r.degree().unwrap();
        let top = ring.formal_dimension();
        prop_assume!(d + k <= top);
        for m in monomials_of_degree(ring.generators(), k) {
            let mono = GradedPolynomial::from_terms(ring.generators(), [(m, int(1))]);
            let v = ring.normal_form(&mono.mul(r).unwrap()).unwrap();
            prop_assert!(v.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn sigma_forms_agree(r in 0i64..=40, real in any::<bool>()) {
        let variant = if real { SigmaVariant::Real } else { SigmaVariant::Complex };
        prop_assert_eq!(sigma(r, variant).unwrap(), sigma_closed(r, variant).unwrap());
    }

    #[test]
    fn divisibility_routes_agree(a in rational(), b in rational(), r in 0i64..=24) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        prop_assert_eq!(
            divides_linear_bruteforce(&a, &b, r).unwrap(),
            divides_linear_criterion(&a, &b, r).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn poincare_duality((s, e) in space_and_spec()) {
        let betti = BundleModel::build(s, &e).unwrap().betti();
        let rev: Vec<usize> = betti.iter().rev().copied().collect();
        prop_assert_eq!(betti, rev);
    }

    #[test]
    fn betti_scaling_invariance(((s, e), lambda) in (space_and_spec(), nonzero_rational())) {
        let b1 = BundleModel::build(s, &e).unwrap().betti();
        let b2 = BundleModel::build(s, &e.scaled(&lambda)).unwrap().betti();
        prop_assert_eq!(b1, b2);
    }

    #[test]
    fn verdict_scaling_invariance(((s, e), lambda) in (space_and_spec(), nonzero_rational())) {
        let d1 = decide(s, &e).unwrap();
        let d2 = decide(s, &e.scaled(&lambda)).unwrap();
        prop_assert_eq!(d1.formal, d2.formal);
        prop_assert_eq!(d1.justification, d2.justification);
    }

    #[test]
    fn verdict_sign_flip_of_x((s, e) in space_and_spec()) {
        prop_assume!(s.real_family_n().is_some());
        let flipped = EulerClassSpec::new(e.a.clone(), e.b.as_ref().map(|b| -b), e.c.clone());
        prop_assert_eq!(decide(s, &e).unwrap().formal, decide(s, &flipped).unwrap().formal);
    }

    #[test]
    fn zero_euler_is_kunneth(s in space()) {
        let ring = presentation(s).unwrap();
        let base = ring.betti();
        let zero = ring.parse("0").unwrap();
        let betti = BundleModel::new(ring, zero).unwrap().betti();
        for (k, b) in betti.iter().enumerate() {
            let shifted = k.checked_sub(3).and_then(|j| base.get(j)).copied().unwrap_or(0);
            prop_assert_eq!(*b, base.get(k).copied().unwrap_or(0) + shifted);
        }
    }
}

/// Witnesses with nonzero indeterminacy or several primitives to vary.
fn witness_cases() -> Vec<(SpaceId, EulerClassSpec, [String; 3])> {
    // e = 0: l·(l² − 2x) = 0 in the base, and l·u spans H⁵, so the
    // indeterminacy is ⟨l²u⟩.
    let mut out = vec![(
        SpaceId::ComplexGrassmannian(2),
        EulerClassSpec::ab(int(0), int(0)),
        ["l".to_string(), "l^2 - 2*x".to_string(), "l".to_string()],
    )];
    for (n, p) in [(2, "x"), (4, "x^2")] {
        out.push((
            SpaceId::ComplexGrassmannian(n),
            EulerClassSpec::ab(int(1), int(0)),
            ["l".into(), "l".into(), p.into()],
        ));
    }
    for (m, a, b) in [(3, 1, 0), (5, 1, 1), (5, 2, -2), (4, 1, 1)] {
        out.push((
            SpaceId::RealGrassmannianEven(m),
            EulerClassSpec::ab(int(a), int(b)),
            ["x".into(), "z".into(), "z".into()],
        ));
    }
    for (a, b, c) in [(1, 1, 0), (1, 0, 1), (2, 1, 2), (1, 0, 0)] {
        let spec = EulerClassSpec::abc(int(a), int(b), int(c));
        let [xi1, xi2] = xi_classes(&spec);
        out.push((
            SpaceId::RealGrassmannianR8,
            spec.clone(),
            [xi1.clone(), xi1.clone(), xi2.clone()],
        ));
        out.push((SpaceId::RealGrassmannianR8, spec, [xi2.clone(), xi2, xi1]));
    }
    out
}

/// A random cocycle of degree `k`: a combination of cohomology
/// representatives plus a coboundary.
fn random_cocycle(model: &BundleModel, k: u32, coeffs: &[Rational]) -> wolfform::model::ModelClass {
    let mut c = model.zero(k);
    let mut it = coeffs.iter().cycle();
    for h in model.cohomology_basis(k) {
        c = c.add(&h.scale(it.next().unwrap())).unwrap();
    }
    if k >= 1 {
        // d(q·u) for q a combination of base basis monomials in degree k − 4
        if let Some(j) = k.checked_sub(4) {
            let ring = model.base();
            let gens = model.generators();
            let u = GradedPolynomial::var(gens, gens.len() - 1);
            for b in ring.degree_basis(j).basis_polynomials(ring.generators()) {
                let lifted = GradedPolynomial::from_terms(
                    gens,
                    b.terms().map(|(m, v)| {
                        let mut e = m.exponents().to_vec();
                        e.push(0);
                        (wolfform::algebra::Monomial::new(e), v.clone())
                    }),
                );
                let w = model.class_from_polynomial_in(&lifted.mul(&u).unwrap(), k - 1).unwrap();
                c = c.add(&model.differential(&w).scale(it.next().unwrap())).unwrap();
            }
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn primitive_independence(
        pick in any::<prop::sample::Index>(),
        left in prop::collection::vec(rational(), 1..6),
        right in prop::collection::vec(rational(), 1..6),
    ) {
        let cases = witness_cases();
        let (s, e, classes) = pick.get(&cases);
        let model = BundleModel::build(*s, e).unwrap();
        let a: Vec<_> = classes.iter().map(|c| model.parse_class(c).unwrap()).collect();
        let outcome = triple_massey(&model, &a[0], &a[1], &a[2]).unwrap();
        let MasseyOutcome::Defined(base) = outcome else { return Ok(()); };
        let [a12, a23] = base.primitives().clone();
        let a12 = a12.add(&random_cocycle(&model, a12.degree(), &left)).unwrap();
        let a23 = a23.add(&random_cocycle(&model, a23.degree(), &right)).unwrap();
        let shifted = massey_with_primitives(&model, [&a[0], &a[1], &a[2]], &a12, &a23).unwrap();
        prop_assert!(model.is_cocycle(shifted.representative()));
        prop_assert_eq!(shifted.trivial(), base.trivial());
        let diff: Vec<Rational> = shifted.coordinates().iter().zip(base.coordinates()).map(|(x, y)| x - y).collect();
        let ind = Echelon::new(diff.len(), base.indeterminacy_basis().to_vec());
        prop_assert!(ind.contains(&diff));
    }
}

#[test]
fn product_model_case_has_indeterminacy() {
    let (s, e, c) = witness_cases().remove(0);
    let model = BundleModel::build(s, &e).unwrap();
    let a: Vec<_> = c.iter().map(|t| model.parse_class(t).unwrap()).collect();
    let r = triple_massey(&model, &a[0], &a[1], &a[2]).unwrap();
    let r = r.defined().unwrap();
    assert_eq!(r.indeterminacy_dim(), 1);
    assert!(r.representative().is_zero());
    assert!(r.trivial());
}

#[test]
fn sign_convention_for_even_first_degree() {
    // With p₁ even the representative is a₁·a₂₃ − a₁₂·a₃.
    let base = presentation(SpaceId::ComplexGrassmannian(2)).unwrap();
    let model = BundleModel::new(Arc::clone(&base), base.parse("l^2").unwrap()).unwrap();
    let l = model.parse_class("l").unwrap();
    let x = model.parse_class("x").unwrap();
    let r = triple_massey(&model, &l, &l, &x).unwrap();
    let r = r.defined().unwrap();
    let [a12, a23] = r.primitives();
    let expected = model
        .cochain_product(&l, a23)
        .unwrap()
        .add(&model.cochain_product(a12, &x).unwrap().scale(&int(-1)))
        .unwrap();
    assert_eq!(r.representative(), &expected);
}
