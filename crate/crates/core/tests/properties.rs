use arrlik_core::groebner::{
    codim, codim_of_monomials, ideal_contained, ideal_equal, initial_ideal, quotient, saturate,
    Budget, Ideal,
};
use arrlik_core::likelihood::{
    euler_generator, is_gentle, pre_likelihood_ideal, presentation, Arrangement, GentleStatus,
    LikelihoodOptions,
};
use arrlik_core::multidegree::multidegree_with_order;
use arrlik_core::poly::Coeff;
use arrlik_core::syzygy::module_member;
use arrlik_core::{parse_poly, Monomial, Polynomial, Ring, RingRef, TermOrder};
use num_bigint::BigInt;
use proptest::prelude::*;

const B: Budget = Budget {
    max_pairs: Some(200_000),
    max_degree: None,
};

fn xyz() -> RingRef {
    Ring::with_x(&["x", "y", "z"]).unwrap()
}

fn bigraded() -> RingRef {
    Ring::new(&["x1", "x2", "x3"], &["s1", "s2", "s3"]).unwrap()
}

fn coeff(n: i64, d: i64) -> Coeff {
    Coeff::new(BigInt::from(n), BigInt::from(d))
}

/// Terms as (exponents, numerator, denominator).
fn terms(
    nvars: usize,
    max_exp: u16,
    max_terms: usize,
) -> impl Strategy<Value = Vec<(Vec<u16>, i64, i64)>> {
    prop::collection::vec(
        (
            prop::collection::vec(0..=max_exp, nvars),
            -9i64..=9,
            1i64..=4,
        ),
        0..=max_terms,
    )
}

fn build(ring: &RingRef, t: &[(Vec<u16>, i64, i64)]) -> Polynomial {
    let t = t
        .iter()
        .map(|(e, n, d)| (Monomial::from_exponents(e), coeff(*n, *d)))
        .collect();
    Polynomial::from_terms(ring, t).unwrap()
}

fn poly(ring: RingRef) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    terms(n, 3, 5).prop_map(move |t| build(&ring, &t))
}

/// Degree-`d` part of an x-polynomial with integer coefficients.
fn homogeneous(ring: RingRef, d: u32) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    terms(n, d as u16, 6).prop_map(move |t| {
        let t: Vec<_> = t
            .into_iter()
            .filter(|(e, _, _)| e.iter().map(|&v| v as u32).sum::<u32>() == d)
            .map(|(e, c, _)| (e, c, 1))
            .collect();
        build(&ring, &t)
    })
}

fn linear_form(ring: &RingRef, vars: &[usize], coeffs: &[i64]) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for (&v, &c) in vars.iter().zip(coeffs) {
        acc = &acc + &Polynomial::var_at(ring, v).scale(&coeff(c, 1));
    }
    acc
}

/// A product of `dx` linear forms in x and `ds` linear forms in s.
fn bihomogeneous(dx: usize, ds: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 3), dx + ds).prop_map(move |cs| {
        let r = bigraded();
        let mut p = Polynomial::one(&r);
        for (k, c) in cs.iter().enumerate() {
            let vars: &[usize] = if k < dx { &[0, 1, 2] } else { &[3, 4, 5] };
            p = &p * &linear_form(&r, vars, c);
        }
        p
    })
}

fn orders() -> Vec<TermOrder> {
    vec![
        TermOrder::Lex,
        TermOrder::Grevlex,
        TermOrder::Bigraded,
        TermOrder::WeightedGrevlex(vec![3, 1, 2, 1, 1, 2]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(bigraded()), b in poly(bigraded()), c in poly(bigraded())) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&bigraded()), a.clone());
    }

    #[test]
    fn parse_inverts_print(a in poly(bigraded())) {
        let r = a.ring().clone();
        prop_assert_eq!(parse_poly(&a.to_string(), &r).unwrap(), a);
    }

    #[test]
    fn leading_terms_multiply(a in poly(bigraded()), b in poly(bigraded())) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = &a * &b;
        for o in orders() {
            let (ma, ca) = a.leading_term(&o).unwrap();
            let (mb, cb) = b.leading_term(&o).unwrap();
            let (m, c) = ab.leading_term(&o).unwrap();
            prop_assert_eq!(m, &ma.checked_mul(mb).unwrap());
            prop_assert_eq!(c, &(ca * cb));
        }
    }

    #[test]
    fn bidegree_is_additive(f in bihomogeneous(2, 1), g in bihomogeneous(1, 2)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (bf, bg) = (f.bidegree().unwrap(), g.bidegree().unwrap());
        let b = (&f * &g).bidegree().unwrap();
        prop_assert_eq!((b.dx, b.ds), (bf.dx + bg.dx, bf.ds + bg.ds));
    }

    #[test]
    fn euler_identity(f in homogeneous(xyz(), 3)) {
        let r = f.ring().clone();
        let mut lhs = Polynomial::zero(&r);
        for j in 0..r.nvars() {
            lhs = &lhs + &(&Polynomial::var_at(&r, j) * &f.partial_derivative_at(j));
        }
        let d = f.total_degree().unwrap_or(0) as i64;
        prop_assert_eq!(lhs, f.scale(&coeff(d, 1)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduced_bases_ignore_generator_order(
        gens in prop::collection::vec(homogeneous(xyz(), 2), 1..4),
        seed in any::<u64>(),
    ) {
        let r = xyz();
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let mut shuffled = gens;
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k);
        if seed & 1 == 1 {
            shuffled.reverse();
        }
        let j = Ideal::new(&r, shuffled).unwrap();
        for o in [TermOrder::Grevlex, TermOrder::Lex] {
            let a = i.groebner(&o, B).unwrap();
            let b = j.groebner(&o, B).unwrap();
            prop_assert_eq!(a.polys(), b.polys());
            a.verify().unwrap();
            for g in i.gens() {
                prop_assert!(a.reduce(g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn colon_chain_and_idempotent_saturation(
        gens in prop::collection::vec(homogeneous(xyz(), 2), 1..3),
        c in prop::collection::vec(-2i64..=2, 3),
    ) {
        let r = xyz();
        let f = linear_form(&r, &[0, 1, 2], &c);
        prop_assume!(!f.is_zero());
        let i = Ideal::new(&r, gens).unwrap();
        let q = quotient(&i, &f, B).unwrap();
        let s = saturate(&i, &f, B).unwrap();
        prop_assert!(ideal_contained(&i, &q, B).unwrap());
        prop_assert!(ideal_contained(&q, &s, B).unwrap());
        let s2 = saturate(&s, &f, B).unwrap();
        prop_assert!(ideal_equal(&s, &s2, B).unwrap());
    }

    #[test]
    fn codim_matches_initial_ideal(gens in prop::collection::vec(homogeneous(xyz(), 2), 1..4)) {
        let r = xyz();
        let i = Ideal::new(&r, gens).unwrap();
        prop_assume!(!i.default_groebner(B).unwrap().is_unit());
        let c = codim(&i, B).unwrap();
        for o in [TermOrder::Grevlex, TermOrder::Lex] {
            let lead = initial_ideal(&i, &o, B).unwrap();
            prop_assert_eq!(codim_of_monomials(&lead, r.nvars()).unwrap(), c);
        }
    }

    #[test]
    fn multidegree_ignores_term_order(
        a in bihomogeneous(1, 1),
        b in bihomogeneous(2, 1),
        c in bihomogeneous(0, 1),
    ) {
        let r = bigraded();
        let i = Ideal::new(&r, vec![a, b, c]).unwrap();
        prop_assume!(!i.gens().is_empty() && !i.default_groebner(B).unwrap().is_unit());
        let reference = multidegree_with_order(&i, &TermOrder::Bigraded, B).unwrap();
        for o in [TermOrder::Grevlex, TermOrder::Lex] {
            prop_assert_eq!(&multidegree_with_order(&i, &o, B).unwrap(), &reference);
        }
    }

    #[test]
    fn euler_vector_lies_in_the_kernel(
        polys in prop::collection::vec((1u32..=2).prop_flat_map(|d| homogeneous(xyz(), d)), 2..5),
    ) {
        prop_assume!(polys.iter().all(|p| !p.is_zero() && p.is_homogeneous()));
        let r = xyz();
        let Ok(arr) = Arrangement::new(&r, polys) else {
            return Err(TestCaseError::reject("shared factor"));
        };
        let pres = presentation(&arr, B).unwrap();
        prop_assert!(pres.q.multiply(&pres.a.stack(&pres.b).unwrap()).unwrap().is_zero());
        let cols: Vec<Vec<Polynomial>> = (0..pres.l)
            .map(|j| pres.a.column(j).into_iter().chain(pres.b.column(j)).collect())
            .collect();
        prop_assert!(module_member(&r, &arr.euler_vector(), &cols, B).unwrap());
        let pre = pre_likelihood_ideal(&arr, &pres).unwrap();
        prop_assert!(pre.gens().iter().all(|g| g.bidegree().is_some_and(|b| b.ds == 1)));
        prop_assert!(pre.default_groebner(B).unwrap().contains(&euler_generator(&arr)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn line_arrangements_in_the_plane_are_gentle(
        lines in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 3..=6),
    ) {
        let r = xyz();
        let polys: Vec<Polynomial> = lines.iter().map(|c| linear_form(&r, &[0, 1, 2], c)).collect();
        prop_assume!(polys.iter().all(|p| !p.is_zero()));
        let Ok(arr) = Arrangement::new(&r, polys) else {
            return Err(TestCaseError::reject("repeated line"));
        };
        let v = is_gentle(&arr, &LikelihoodOptions::default()).unwrap();
        prop_assert_eq!(v.status, GentleStatus::Gentle);
    }
}
