//! Algebraic invariants as property tests.

mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sumrank::codes::{self, CodeSpec, LinearizedRsCode};
use sumrank::field::{Centralizer, Field, FpPoly, GaloisField, RatFn, RationalFunctionField};
use sumrank::geometry;
use sumrank::linalg;
use sumrank::metrics::{self, BlockVector, Metric, SearchOptions};
use sumrank::skew::{from_zero_derivation, to_zero_derivation};
use sumrank::{SkewPoly, SkewRing};

const CASES: u32 = 500;

fn finite_fields() -> Vec<GaloisField> {
    let with_y = |f: GaloisField| {
        let y = f.y();
        f.with_gamma(y)
    };
    vec![
        gf(3, 2, 1),
        with_y(gf(3, 2, 1)),
        gf(5, 2, 1),
        with_y(gf(5, 2, 1)),
        gf(2, 3, 1),
        gf(2, 4, 2),
        gf(3, 3, 2),
        gf(5, 1, 0),
    ]
}

fn field_at(i: usize) -> GaloisField {
    let all = finite_fields();
    all[i % all.len()].clone()
}

fn elem(f: &GaloisField, seed: u64) -> <GaloisField as Field>::Elem {
    f.from_index(seed % f.order())
}

fn f3z() -> RationalFunctionField {
    RationalFunctionField::new(3).unwrap()
}

fn rat_strategy() -> impl Strategy<Value = RatFn> {
    (
        prop::collection::vec(0..3u32, 0..=5),
        prop::collection::vec(0..3u32, 1..=5),
    )
        .prop_map(|(n, d)| {
            let f = f3z();
            let den = FpPoly::from_coeffs(d, 3);
            let den = if den.is_zero() { FpPoly::one() } else { den };
            f.fraction(FpPoly::from_coeffs(n, 3), den).unwrap()
        })
}

fn finite_poly(f: &GaloisField, seeds: &[u64]) -> SkewPoly<<GaloisField as Field>::Elem> {
    SkewRing::new(f).poly(seeds.iter().map(|&s| elem(f, s)).collect())
}

/// An element of `K_a`, chosen by `seed` among all of them.
fn centralizer_elem(f: &GaloisField, a: &<GaloisField as Field>::Elem, seed: u64) -> <GaloisField as Field>::Elem {
    let k: Vec<_> = f
        .elements()
        .unwrap()
        .into_iter()
        .filter(|l| geometry::in_centralizer(f, a, l))
        .collect();
    k[(seed % k.len() as u64) as usize].clone()
}

fn check_axioms<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Result<(), TestCaseError> {
    prop_assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
    prop_assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
    prop_assert_eq!(f.add(a, b), f.add(b, a));
    prop_assert_eq!(f.mul(a, b), f.mul(b, a));
    prop_assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
    prop_assert!(f.is_zero(&f.add(a, &f.neg(a))));
    prop_assert_eq!(f.mul(a, &f.one()), a.clone());
    if !f.is_zero(a) {
        prop_assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
    }
    Ok(())
}

fn check_sigma_delta<F: Field>(f: &F, a: &F::Elem, b: &F::Elem) -> Result<(), TestCaseError> {
    prop_assert_eq!(f.sigma(&f.add(a, b)), f.add(&f.sigma(a), &f.sigma(b)));
    prop_assert_eq!(f.sigma(&f.mul(a, b)), f.mul(&f.sigma(a), &f.sigma(b)));
    prop_assert_eq!(f.sigma(&f.one()), f.one());
    prop_assert_eq!(f.delta(&f.add(a, b)), f.add(&f.delta(a), &f.delta(b)));
    let leibniz = f.add(&f.mul(&f.sigma(a), &f.delta(b)), &f.mul(&f.delta(a), b));
    prop_assert_eq!(f.delta(&f.mul(a, b)), leibniz);
    prop_assert!(f.is_zero(&f.delta(&f.one())));
    Ok(())
}

fn check_coordinates<F: Field>(f: &F, k: Centralizer, a: &F::Elem) -> Result<(), TestCaseError> {
    let coords = f.subfield_coordinates(k, a);
    let basis = f.centralizer_basis(k);
    prop_assert_eq!(coords.len(), f.centralizer_degree(k));
    let back = basis
        .iter()
        .zip(&coords)
        .fold(f.zero(), |acc, (e, c)| f.add(&acc, &f.mul(e, c)));
    prop_assert_eq!(&back, a);
    if k == Centralizer::Fixed {
        for c in &coords {
            prop_assert_eq!(&f.sigma(c), c);
            prop_assert!(f.is_zero(&f.delta(c)));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn finite_field_axioms(fi in 0usize..8, s in prop::array::uniform3(any::<u64>())) {
        let f = field_at(fi);
        let [a, b, c] = s.map(|x| elem(&f, x));
        check_axioms(&f, &a, &b, &c)?;
        check_sigma_delta(&f, &a, &b)?;
    }

    #[test]
    fn rational_field_axioms(a in rat_strategy(), b in rat_strategy(), c in rat_strategy()) {
        let f = f3z();
        check_axioms(&f, &a, &b, &c)?;
        check_sigma_delta(&f, &a, &b)?;
    }

    #[test]
    fn finite_derivation_is_inner(fi in 0usize..8, s in any::<u64>()) {
        let f = field_at(fi);
        let a = elem(&f, s);
        let expected = match f.gamma() {
            Some(g) => f.mul(g, &f.sub(&a, &f.sigma(&a))),
            None => f.zero(),
        };
        prop_assert_eq!(f.delta(&a), expected);
    }

    #[test]
    fn coordinates_round_trip(fi in 0usize..8, s in any::<u64>(), r in rat_strategy()) {
        let f = field_at(fi);
        let a = elem(&f, s);
        check_coordinates(&f, Centralizer::Fixed, &a)?;
        check_coordinates(&f, Centralizer::Whole, &a)?;
        check_coordinates(&f3z(), Centralizer::Fixed, &r)?;
    }

    #[test]
    fn rational_constants_are_coordinate_zero(r in rat_strategy(), cube in prop::bool::ANY) {
        let f = f3z();
        // bias half the samples toward F_3(z^3) by inflating
        let b = if cube {
            f.fraction(r.num().inflate(3), r.den().inflate(3)).unwrap()
        } else {
            r
        };
        let coords = f.subfield_coordinates(Centralizer::Fixed, &b);
        let concentrated = coords[1..].iter().all(|c| f.is_zero(c));
        prop_assert_eq!(f.is_zero(&f.delta(&b)), concentrated);
        prop_assert_eq!(geometry::in_centralizer(&f, &f.z(), &b), concentrated);
    }

    #[test]
    fn degree_additivity(fi in 0usize..8, a in prop::collection::vec(any::<u64>(), 1..5), b in prop::collection::vec(any::<u64>(), 1..5)) {
        let f = field_at(fi);
        let ring = SkewRing::new(&f);
        let (fa, fb) = (finite_poly(&f, &a), finite_poly(&f, &b));
        prop_assume!(!fa.is_zero() && !fb.is_zero());
        let prod = ring.mul(&fa, &fb);
        prop_assert_eq!(prod.degree(), Some(fa.degree().unwrap() + fb.degree().unwrap()));
    }

    #[test]
    fn multiplication_is_associative_and_distributive(fi in 0usize..8, s in prop::array::uniform3(prop::collection::vec(any::<u64>(), 0..4))) {
        let f = field_at(fi);
        let ring = SkewRing::new(&f);
        let [a, b, c] = s.map(|v| finite_poly(&f, &v));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        prop_assert_eq!(ring.mul(&a, &ring.add(&b, &c)), ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)));
    }

    #[test]
    fn right_division(fi in 0usize..8, a in prop::collection::vec(any::<u64>(), 0..6), b in prop::collection::vec(any::<u64>(), 1..4)) {
        let f = field_at(fi);
        let ring = SkewRing::new(&f);
        let (fa, fb) = (finite_poly(&f, &a), finite_poly(&f, &b));
        prop_assume!(!fb.is_zero());
        let (q, r) = ring.right_divmod(&fa, &fb).unwrap();
        prop_assert!(r.degree() < fb.degree());
        prop_assert_eq!(ring.add(&ring.mul(&q, &fb), &r), fa);
    }

    #[test]
    fn remainder_theorem_rational(c in prop::collection::vec(rat_strategy(), 0..4), a in rat_strategy()) {
        let f = f3z();
        let ring = SkewRing::new(&f);
        let poly = ring.poly(c);
        prop_assert_eq!(ring.evaluate(&poly, &a), ring.evaluate_by_division(&poly, &a));
    }

    #[test]
    fn evaluation_is_left_linear(fi in 0usize..8, a in prop::collection::vec(any::<u64>(), 0..5), b in prop::collection::vec(any::<u64>(), 0..5), c in any::<u64>(), x in any::<u64>()) {
        let f = field_at(fi);
        let ring = SkewRing::new(&f);
        let (fa, fb, c, x) = (finite_poly(&f, &a), finite_poly(&f, &b), elem(&f, c), elem(&f, x));
        let lhs = ring.evaluate(&ring.add(&ring.scale_left(&c, &fa), &fb), &x);
        let rhs = f.add(&f.mul(&c, &ring.evaluate(&fa, &x)), &ring.evaluate(&fb, &x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn operator_lemma(fi in 0usize..8, c in prop::collection::vec(any::<u64>(), 0..5), a in any::<u64>(), b in any::<u64>()) {
        let f = field_at(fi);
        let ring = SkewRing::new(&f);
        let (poly, a, b) = (finite_poly(&f, &c), elem(&f, a), elem(&f, b));
        prop_assume!(!f.is_zero(&b));
        let binv = f.inv(&b).unwrap();
        let point = geometry::conjugate_of(&f, &a, &b).unwrap();
        prop_assert_eq!(ring.evaluate(&poly, &point), f.mul(&ring.operator_eval(&a, &poly, &b), &binv));
        for i in 0..4 {
            prop_assert_eq!(ring.truncated_norm(&point, i), f.mul(&ring.op_power(&a, &b, i), &binv));
        }
    }

    #[test]
    fn operator_lemma_rational(c in prop::collection::vec(rat_strategy(), 0..3), a in rat_strategy(), b in rat_strategy()) {
        let f = f3z();
        let ring = SkewRing::new(&f);
        prop_assume!(!f.is_zero(&b));
        let poly = ring.poly(c);
        let point = geometry::conjugate_of(&f, &a, &b).unwrap();
        let rhs = f.mul(&ring.operator_eval(&a, &poly, &b), &f.inv(&b).unwrap());
        prop_assert_eq!(ring.evaluate(&poly, &point), rhs);
    }

    #[test]
    fn right_centralizer_linearity(fi in 0usize..8, c in prop::collection::vec(any::<u64>(), 0..5), a in any::<u64>(), b in any::<u64>(), l in any::<u64>()) {
        let f = field_at(fi);
        let ring = SkewRing::new(&f);
        let (poly, a, b) = (finite_poly(&f, &c), elem(&f, a), elem(&f, b));
        let lambda = centralizer_elem(&f, &a, l);
        let lhs = ring.operator_eval(&a, &poly, &f.mul(&b, &lambda));
        prop_assert_eq!(lhs, f.mul(&ring.operator_eval(&a, &poly, &b), &lambda));
    }

    #[test]
    fn right_centralizer_linearity_rational(c in prop::collection::vec(rat_strategy(), 0..3), a in rat_strategy(), b in rat_strategy(), l in rat_strategy()) {
        let f = f3z();
        let ring = SkewRing::new(&f);
        let poly = ring.poly(c);
        let lambda = f.fraction(l.num().inflate(3), l.den().inflate(3)).unwrap();
        let lhs = ring.operator_eval(&a, &poly, &f.mul(&b, &lambda));
        prop_assert_eq!(lhs, f.mul(&ring.operator_eval(&a, &poly, &b), &lambda));
    }

    #[test]
    fn operator_powers_without_derivation(fi in 0usize..8, a in any::<u64>(), b in any::<u64>()) {
        let f = field_at(fi);
        prop_assume!(f.gamma().is_none());
        let ring = SkewRing::new(&f);
        let (a, b) = (elem(&f, a), elem(&f, b));
        for i in 0..5 {
            prop_assert_eq!(ring.op_power(&a, &b, i), f.mul(&f.sigma_pow(&b, i), &ring.truncated_norm(&a, i)));
        }
    }

    #[test]
    fn zero_derivation_isomorphism(fi in prop::sample::select(vec![1usize, 3]), a in prop::collection::vec(any::<u64>(), 0..4), b in prop::collection::vec(any::<u64>(), 0..4)) {
        let f = field_at(fi);
        prop_assume!(f.gamma().is_some() && !f.sigma_is_identity());
        let ring = SkewRing::new(&f);
        let (fa, fb) = (finite_poly(&f, &a), finite_poly(&f, &b));
        let (plain, ta) = to_zero_derivation(&f, &fa).unwrap();
        let (_, tb) = to_zero_derivation(&f, &fb).unwrap();
        let (_, tab) = to_zero_derivation(&f, &ring.mul(&fa, &fb)).unwrap();
        let (_, tsum) = to_zero_derivation(&f, &ring.add(&fa, &fb)).unwrap();
        let plain_ring = SkewRing::new(&plain);
        prop_assert_eq!(tab, plain_ring.mul(&ta, &tb));
        prop_assert_eq!(tsum, plain_ring.add(&ta, &tb));
        prop_assert_eq!(ta.degree(), fa.degree());
        prop_assert_eq!(from_zero_derivation(&f, &ta).unwrap(), fa);
    }

    #[test]
    fn minpoly_matches_vandermonde_oracle(fi in 0usize..4, pts in prop::collection::vec(any::<u64>(), 0..6)) {
        let f = field_at(fi);
        let points: Vec<_> = pts.iter().map(|&s| elem(&f, s)).collect();
        let closed = geometry::minimal_skew_poly(&f, &points);
        prop_assert_eq!(closed.min_poly(), &vandermonde_minpoly(&f, &points));
        let ring = SkewRing::new(&f);
        for p in &points {
            prop_assert!(f.is_zero(&ring.evaluate(closed.min_poly(), p)));
        }
    }

    #[test]
    fn independence_iff_vandermonde_invertible(fi in 0usize..8, pts in prop::collection::vec(any::<u64>(), 1..5)) {
        let f = field_at(fi);
        let points: Vec<_> = pts.iter().map(|&s| elem(&f, s)).collect();
        let v = geometry::skew_vandermonde(&f, &points, points.len());
        prop_assert_eq!(geometry::is_p_independent(&f, &points), linalg::inverse(&f, &v).is_ok());
    }

    #[test]
    fn modular_rank_law(fi in 0usize..4, a in prop::collection::vec(any::<u64>(), 0..4), b in prop::collection::vec(any::<u64>(), 0..4)) {
        let f = field_at(fi);
        let pa: Vec<_> = a.iter().map(|&s| elem(&f, s)).collect();
        let pb: Vec<_> = b.iter().map(|&s| elem(&f, s)).collect();
        let ca = geometry::closure_enumerate(&f, &pa).unwrap();
        let cb = geometry::closure_enumerate(&f, &pb).unwrap();
        let union: Vec<_> = ca.iter().chain(&cb).cloned().collect();
        let inter: Vec<_> = ca.iter().filter(|x| cb.contains(x)).cloned().collect();
        let rk = |s: &[_]| geometry::p_rank(&f, s);
        prop_assert_eq!(rk(&union) + rk(&inter), rk(&ca) + rk(&cb));
        // the intersection of closed sets is closed
        prop_assert_eq!(geometry::closure_enumerate(&f, &inter).unwrap(), inter);
    }

    #[test]
    fn rank_partition_across_classes(fi in 0usize..4, pts in prop::collection::vec(any::<u64>(), 0..7)) {
        let f = field_at(fi);
        let points: Vec<_> = pts.iter().map(|&s| elem(&f, s)).collect();
        let classes = geometry::conjugacy_classes(&f).unwrap();
        let total: usize = classes
            .iter()
            .map(|c| {
                let members = c.members.as_ref().unwrap();
                let part: Vec<_> = points.iter().filter(|p| members.contains(p)).cloned().collect();
                geometry::p_rank(&f, &part)
            })
            .sum();
        prop_assert_eq!(geometry::p_rank(&f, &points), total);
    }

    #[test]
    fn one_class_linearization(fi in 0usize..8, a in any::<u64>(), alphas in prop::collection::vec(any::<u64>(), 1..5)) {
        let f = field_at(fi);
        let a = elem(&f, a);
        let alphas: Vec<_> = alphas.iter().map(|&s| elem(&f, s)).filter(|x| !f.is_zero(x)).collect();
        let points: Vec<_> = alphas.iter().map(|b| geometry::conjugate_of(&f, &a, b).unwrap()).collect();
        let k = f.centralizer_of(&a);
        prop_assert_eq!(geometry::p_rank(&f, &points), metrics::rank_weight(&f, k, &alphas));
        prop_assert_eq!(metrics::rank_weight(&f, k, &alphas), rank_by_counting(&f, k, &alphas));
    }

    #[test]
    fn witness_change_keeps_closure(fi in 0usize..4, a in any::<u64>(), seed in any::<u64>()) {
        let f = field_at(fi);
        let a = elem(&f, a);
        let k = f.centralizer_of(&a);
        let n = f.centralizer_degree(k).min(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alphas: Vec<_> = f.centralizer_basis(k)[..n].to_vec();
        let mat = random_invertible(&f, &a, n, &mut rng);
        let betas: Vec<_> = (0..n)
            .map(|j| (0..n).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&alphas[i], &mat[i][j]))))
            .collect();
        let conj = |v: &[_]| v.iter().map(|b| geometry::conjugate_of(&f, &a, b).unwrap()).collect::<Vec<_>>();
        let ma = geometry::minimal_skew_poly(&f, &conj(&alphas));
        let mb = geometry::minimal_skew_poly(&f, &conj(&betas));
        prop_assert_eq!(ma.min_poly(), mb.min_poly());
        prop_assert_eq!(mb.rank(), n);
    }

    #[test]
    fn rational_projective_bijection(b in rat_strategy(), c in rat_strategy(), l in rat_strategy(), related in prop::bool::ANY) {
        let f = f3z();
        prop_assume!(!f.is_zero(&b) && !f.is_zero(&c) && !f.is_zero(&l));
        let c = if related {
            let lambda = f.fraction(l.num().inflate(3), l.den().inflate(3)).unwrap();
            f.mul(&b, &lambda)
        } else {
            c
        };
        let logd = |x: &RatFn| f.mul(&f.delta(x), &f.inv(x).unwrap());
        let ratio = f.mul(&b, &f.inv(&c).unwrap());
        prop_assert_eq!(logd(&b) == logd(&c), f.in_fixed_subfield(&ratio));
    }

    #[test]
    fn skew_weight_axioms(seed in any::<u64>()) {
        let f = gf(3, 2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = geometry::extract_p_basis(&f, &random_elems(&f, 4, &mut rng));
        let closure = geometry::closure_enumerate(&f, &basis).unwrap();
        let n = basis.len();
        let ring = SkewRing::new(&f);
        let rand_poly = |rng: &mut ChaCha8Rng| ring.poly(random_elems(&f, n, rng));
        let (fa, fb) = (rand_poly(&mut rng), rand_poly(&mut rng));
        let w = |p: &SkewPoly<_>| geometry::skew_weight_on_closure(&f, n, &closure, p).unwrap();
        prop_assert_eq!(w(&fa) == 0, fa.is_zero());
        prop_assert!(w(&ring.add(&fa, &fb)) <= w(&fa) + w(&fb));
        let c = random_nonzero(&f, &mut rng);
        prop_assert_eq!(w(&ring.scale_left(&c, &fa)), w(&fa));
    }

    #[test]
    fn sum_rank_weight_axioms(seed in any::<u64>(), fi in 0usize..4) {
        let f = field_at(fi);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lengths = [2usize, 1, 2];
        let kt = vec![Centralizer::Fixed; 3];
        let vec_of = |rng: &mut ChaCha8Rng| BlockVector::from_flat(random_elems(&f, 5, rng), &lengths, kt.clone());
        let (u, v) = (vec_of(&mut rng), vec_of(&mut rng));
        let w = |x: &BlockVector<_>| metrics::sum_rank_weight(&f, x);
        prop_assert_eq!(w(&u) == 0, u.flat().iter().all(|x| f.is_zero(x)));
        let sum = BlockVector::from_flat(
            u.flat().iter().zip(v.flat()).map(|(a, b)| f.add(a, &b)).collect(),
            &lengths,
            kt.clone(),
        );
        prop_assert!(w(&sum) <= w(&u) + w(&v));
        prop_assert!(w(&u) <= metrics::hamming_weight(&f, &u.flat()));
        // per-block right multiplication by invertible F_q matrices
        let one = f.one();
        let moved = BlockVector {
            blocks: u
                .blocks
                .iter()
                .map(|b| {
                    let a = random_invertible(&f, &one, b.len(), &mut rng);
                    (0..b.len())
                        .map(|j| (0..b.len()).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&b[i], &a[i][j]))))
                        .collect()
                })
                .collect(),
            centralizers: kt.clone(),
        };
        prop_assert_eq!(w(&moved), w(&u));
        for (b, k) in u.blocks.iter().zip(&kt) {
            prop_assert_eq!(metrics::rank_weight(&f, *k, b), rank_by_counting(&f, *k, b));
        }
    }
}

fn random_elems(f: &GaloisField, n: usize, rng: &mut ChaCha8Rng) -> Vec<<GaloisField as Field>::Elem> {
    (0..n).map(|_| f.random_elem(rng, 0)).collect()
}

fn random_nonzero(f: &GaloisField, rng: &mut ChaCha8Rng) -> <GaloisField as Field>::Elem {
    loop {
        let x = f.random_elem(rng, 0);
        if !f.is_zero(&x) {
            return x;
        }
    }
}

/// A random invertible `n × n` matrix with entries in `K_a`.
fn random_invertible(
    f: &GaloisField,
    a: &<GaloisField as Field>::Elem,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<<GaloisField as Field>::Elem>> {
    loop {
        let m: Vec<Vec<_>> = (0..n)
            .map(|_| (0..n).map(|_| centralizer_elem(f, a, rng.gen())).collect())
            .collect();
        if linalg::rank(f, &m) == n {
            return m;
        }
    }
}

fn gf9_instance(k: usize) -> LinearizedRsCode<GaloisField> {
    let f = gf(3, 2, 1);
    let reps = els(&f, &["1", "1:1"]);
    let betas = vec![els(&f, &["1", "0:1"]), els(&f, &["1", "0:1"])];
    LinearizedRsCode::new(CodeSpec::new(f, reps, betas, k).unwrap())
}

#[test]
fn fixed_fields_have_q_elements() {
    for f in finite_fields() {
        let fixed = f
            .elements()
            .unwrap()
            .into_iter()
            .filter(|a| f.sigma(a) == *a)
            .count() as u64;
        assert_eq!(fixed, f.q(), "{f:?}");
    }
}

#[test]
fn codes_are_nested_and_full_rank() {
    let f = gf(3, 2, 1);
    for k in 0..4 {
        let small = gf9_instance(k).generator;
        let big = gf9_instance(k + 1).generator;
        assert_eq!(small.rows[..], big.rows[..k]);
        assert_eq!(linalg::rank(&f, &big.rows), k + 1);
    }
}

#[test]
fn phi_image_equals_code() {
    let code = gf9_instance(2);
    let f = code.field().clone();
    let all = f.elements().unwrap();
    let mut encoded = std::collections::HashSet::new();
    let mut phi = std::collections::HashSet::new();
    for a in &all {
        for b in &all {
            let m = [a.clone(), b.clone()];
            encoded.insert(code.encode(&m).unwrap().flat());
            phi.insert(codes::phi_map(&code.spec, &codes::message_poly(&f, &m)).unwrap().flat());
        }
    }
    assert_eq!(encoded.len(), 81);
    assert_eq!(encoded, phi);
}

#[test]
fn skew_rs_maps_to_skew_rs_under_change_of_basis() {
    let f = gf(3, 2, 1);
    let from = els(&f, &["1", "0:1", "1:1"]);
    let closure = geometry::closure_enumerate(&f, &from).unwrap();
    let bases = all_p_bases(&f, &closure, 3);
    let to = bases.last().unwrap().clone();
    assert_ne!(to, from);
    for k in 0..=3 {
        let gb = codes::build_skew_rs(&f, &from, k).unwrap();
        let ga = codes::build_skew_rs(&f, &to, k).unwrap();
        let moved: Vec<_> = gb
            .rows
            .iter()
            .map(|r| codes::pi_change_basis(&f, &from, &to, r).unwrap())
            .collect();
        let stacked: Vec<_> = ga.rows.iter().chain(&moved).cloned().collect();
        assert_eq!(linalg::rank(&f, &moved), k);
        assert_eq!(linalg::rank(&f, &stacked), k);
    }
}

#[test]
fn hamming_minimum_characterization() {
    let f = gf(3, 2, 1);
    let ring = SkewRing::new(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let all = f.elements().unwrap();
    let mut checked = 0;
    for a in &all {
        for b in &all {
            let basis = geometry::extract_p_basis(&f, &[a.clone(), b.clone()]);
            if basis.len() != 2 {
                continue;
            }
            let closure = geometry::closure_enumerate(&f, &basis).unwrap();
            let bases = all_p_bases(&f, &closure, 2);
            for _ in 0..3 {
                let poly = ring.poly(random_elems(&f, 2, &mut rng));
                let w = geometry::skew_weight_on_closure(&f, 2, &closure, &poly).unwrap();
                let min_h = bases
                    .iter()
                    .map(|bs| bs.iter().filter(|x| !f.is_zero(&ring.evaluate(&poly, x))).count())
                    .min()
                    .unwrap();
                assert_eq!(w, min_h);
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn singleton_bound_on_random_specs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for f in [gf(3, 2, 1), gf(2, 3, 1), gf(5, 2, 1), gf(3, 2, 1).with_gamma(gf(3, 2, 1).y())] {
        let classes = geometry::conjugacy_classes(&f).unwrap();
        for _ in 0..6 {
            let mut reps = Vec::new();
            let mut betas = Vec::new();
            for c in &classes {
                if rng.gen_bool(0.4) {
                    continue;
                }
                let a = c.members.as_ref().unwrap()[rng.gen_range(0..c.len().unwrap())].clone();
                let max = f.centralizer_degree(f.centralizer_of(&a));
                let len = rng.gen_range(1..=max);
                let block = loop {
                    let cand: Vec<_> = (0..len).map(|_| random_nonzero(&f, &mut rng)).collect();
                    if metrics::rank_weight(&f, f.centralizer_of(&a), &cand) == len {
                        break cand;
                    }
                };
                reps.push(a);
                betas.push(block);
            }
            if reps.is_empty() {
                continue;
            }
            let n: usize = betas.iter().map(Vec::len).sum();
            let k = rng.gen_range(1..=n.min(3));
            let code = LinearizedRsCode::new(CodeSpec::new(f.clone(), reps, betas, k).unwrap());
            let opts = SearchOptions::default();
            for metric in [Metric::SumRank, Metric::Hamming, Metric::Skew] {
                let r = metrics::min_distance(&code, metric, opts).unwrap();
                assert!(r.minimum.unwrap() <= r.bound);
                assert_eq!(r.minimum, Some(r.bound), "{metric} on {:?}", code.spec);
            }
        }
    }
}

#[test]
fn maximum_lengths() {
    // blocks over F_q: at most q - 1 classes of length m each
    for (p, s, nl) in [(3u32, 2usize, 4usize), (5, 2, 8)] {
        let f = gf(p, s, 1);
        let classes = geometry::conjugacy_classes(&f).unwrap();
        let nontrivial: Vec<_> = classes.iter().filter(|c| c.len() > Some(1)).collect();
        let basis = f.centralizer_basis(Centralizer::Fixed);
        let reps: Vec<_> = nontrivial.iter().map(|c| c.rep.clone()).collect();
        let betas = vec![basis.clone(); reps.len()];
        let spec = CodeSpec::new(f.clone(), reps.clone(), betas, 1).unwrap();
        assert_eq!(spec.n(), nl);

        let mut long = basis.clone();
        long.push(f.one());
        assert!(CodeSpec::new(f.clone(), vec![reps[0].clone()], vec![long], 1).is_err());
        let mut extra = reps.clone();
        extra.push(classes[1].members.as_ref().unwrap()[1].clone());
        assert!(CodeSpec::new(f.clone(), extra, vec![basis.clone(); reps.len() + 1], 1).is_err());

        // the singleton class of 0 adds one Hamming-like block over K = F
        let mut with_zero = reps.clone();
        with_zero.push(f.zero());
        let mut betas = vec![basis.clone(); reps.len()];
        betas.push(vec![f.one()]);
        let spec = CodeSpec::new(f.clone(), with_zero, betas, 2).unwrap();
        assert_eq!(spec.n(), nl + 1);
        if p == 3 {
            let r = metrics::verify_optimal(&LinearizedRsCode::new(spec), SearchOptions::default()).unwrap();
            assert!(r.msrd && r.mds && r.msd);
        }
    }
}

#[test]
fn gf9_skew_and_sum_rank_weights_agree() {
    let code = gf9_instance(2);
    let f = code.field().clone();
    let closure = geometry::closure_enumerate(&f, &code.skew_points).unwrap();
    let ring = SkewRing::new(&f);
    let all = f.elements().unwrap();
    for a in &all {
        for b in &all {
            let poly = ring.poly(vec![a.clone(), b.clone()]);
            let skew = geometry::skew_weight_on_closure(&f, 4, &closure, &poly).unwrap();
            let image = codes::phi_map(&code.spec, &poly).unwrap();
            assert_eq!(skew, metrics::sum_rank_weight(&f, &image));
        }
    }
}
