use std::collections::BTreeSet;

use proptest::prelude::*;

use schurq::expansion::{bilinear_expansion, dedupe_symmetric, evaluate_expansion, is_swap_symmetric};
use schurq::fock::state::basis_states;
use schurq::fock::{apply_phi, apply_psi, apply_psi_dag, FockVector, GaussianPoly};
use schurq::partitions::{frobenius_from_partition, partition_from_frobenius};
use schurq::polarization::{enumerate_polarizations, s_and_t};
use schurq::polyring::rat;
use schurq::symfunc::{determinant, pfaffian, q_matrix_entry, schur, schur_q, PolyMatrix};
use schurq::{GradedPoly, Monomial, Partition, Rational, Sign, StrictPartition};

const CUTOFF: u32 = 6;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=2, 0..=4).prop_map(Monomial::from_exponents)
}

fn poly_with(cutoff: Option<u32>) -> impl Strategy<Value = GradedPoly> {
    prop::collection::vec((monomial(), rational()), 0..6)
        .prop_map(move |terms| GradedPoly::from_terms(terms, cutoff))
}

fn poly() -> impl Strategy<Value = GradedPoly> {
    poly_with(Some(CUTOFF))
}

fn partition(max_weight: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max_weight, 0..=max_weight as usize).prop_filter_map(
        "weight bound",
        move |parts| {
            let p = Partition::new(parts);
            (p.weight() <= max_weight).then_some(p)
        },
    )
}

fn strict(max_part: u32, max_len: usize) -> impl Strategy<Value = StrictPartition> {
    prop::collection::btree_set(1u32..=max_part, 0..=max_len)
        .prop_map(|set| StrictPartition::from_set(&set))
}

fn skew(n: usize) -> impl Strategy<Value = PolyMatrix<Rational>> {
    prop::collection::vec(rational(), n * n.saturating_sub(1) / 2)
        .prop_map(move |upper| PolyMatrix::skew_from_upper(n, &upper))
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|a| (a + 1..perm.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| perm[a] > perm[b])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn fock_vector() -> impl Strategy<Value = FockVector> {
    let states = basis_states(0, 4);
    let n = states.len();
    prop::collection::vec((0..n, rational(), rational()), 1..5).prop_map(move |picks| {
        FockVector::from_terms(
            picks.into_iter().map(|(k, re, im)| {
                (states[k].clone(), GaussianPoly::new(GradedPoly::constant(re), GradedPoly::constant(im)))
            }),
            0,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &GradedPoly::one(), a.clone());
    }

    #[test]
    fn truncation_is_a_ring_map(a in poly_with(None), b in poly_with(None), k in 0u32..=8) {
        prop_assert_eq!((&a * &b).truncate(k), (&a.truncate(k) * &b.truncate(k)).truncate(k));
        prop_assert_eq!((&a + &b).truncate(k), &a.truncate(k) + &b.truncate(k));
    }

    #[test]
    fn exponential_inverts(a in poly()) {
        let a = &a - &GradedPoly::constant(a.constant_term());
        let e = a.exp_truncated().unwrap();
        let f = (-&a).exp_truncated().unwrap();
        prop_assert_eq!(&e * &f, GradedPoly::one());
    }

    #[test]
    fn evaluation_is_multiplicative(
        a in poly_with(None),
        b in poly_with(None),
        x in prop::collection::vec(rational(), 1..=3),
    ) {
        let lhs = (&a * &b).eval_power_sums(&x);
        prop_assert_eq!(lhs, a.eval_power_sums(&x) * b.eval_power_sums(&x));
        prop_assert_eq!((&a + &b).eval_power_sums(&x), a.eval_power_sums(&x) + b.eval_power_sums(&x));
    }

    #[test]
    fn text_round_trip(a in poly_with(None)) {
        let back: GradedPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn pfaffian_squares_to_determinant(m in (0usize..=4).prop_flat_map(|h| skew(2 * h))) {
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(&pf * &pf, determinant(&m));
    }

    #[test]
    fn pfaffian_permutation_covariance(
        m in skew(6),
        perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let pf = pfaffian(&m).unwrap();
        let permuted = pfaffian(&m.permuted(&perm)).unwrap();
        prop_assert_eq!(permuted, pf * Rational::from_integer(permutation_sign(&perm).into()));
    }

    #[test]
    fn frobenius_round_trip(p in partition(12)) {
        let f = frobenius_from_partition(&p);
        prop_assert_eq!(partition_from_frobenius(&f), p.clone());
        prop_assert_eq!(f.weight(), p.weight());
        prop_assert_eq!(f.rank(), p.frobenius_rank());
        let g = frobenius_from_partition(&p.conjugate());
        prop_assert_eq!((g.alpha, g.beta), (f.beta, f.alpha));
    }

    #[test]
    fn partition_text_round_trip(p in partition(12)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn expansion_swap_symmetry(p in partition(8)) {
        prop_assume!(p.weight() > 0);
        let f = frobenius_from_partition(&p);
        let terms = bilinear_expansion(&f);
        prop_assert!(is_swap_symmetric(&terms));
        let deduped = dedupe_symmetric(&terms).unwrap();
        let w = p.weight();
        prop_assert_eq!(evaluate_expansion(&deduped, w), evaluate_expansion(&terms, w));
    }

    #[test]
    fn polarization_set_laws(p in partition(10)) {
        prop_assume!(p.weight() > 0);
        let f = frobenius_from_partition(&p);
        let (s, t) = s_and_t(&f);
        let mut seen = BTreeSet::new();
        for pol in enumerate_polarizations(&f) {
            prop_assert_eq!(pol.mu_plus.intersection(&pol.mu_minus), s.clone());
            prop_assert_eq!(pol.mu_plus.union(&pol.mu_minus), t.clone());
            prop_assert_eq!(pol.m_plus + pol.m_minus, 2 * f.rank());
            prop_assert_eq!(pol.m_plus % 2, pol.m_minus % 2);
            prop_assert_eq!(pol.hat_m_minus % 2, 0);
            prop_assert_eq!(pol.hat_mu_plus.len() % 2, 0);
            prop_assert_eq!(pol.hat_mu_minus.len() % 2, 0);
            prop_assert!(pol.sgn == 1 || pol.sgn == -1);
            prop_assert!(seen.insert((pol.mu_plus.clone(), pol.mu_minus.clone())));
        }
    }

    #[test]
    fn q_matrix_is_skew(i in 0i64..=6, j in 0i64..=6) {
        let a = q_matrix_entry(i, j, CUTOFF + 6).unwrap();
        let b = q_matrix_entry(j, i, CUTOFF + 6).unwrap();
        prop_assert_eq!(a, -b);
    }

    #[test]
    fn schur_q_is_odd_and_homogeneous(alpha in strict(5, 3)) {
        let w = alpha.weight();
        let q = schur_q(&alpha, w);
        prop_assert!(!q.uses_even_variables());
        prop_assert!(q.is_homogeneous(w));
        prop_assert!(!q.is_zero());
    }

    #[test]
    fn schur_is_homogeneous(p in partition(8)) {
        let w = p.weight();
        prop_assert!(schur(&p, w + 2).is_homogeneous(w));
    }

    #[test]
    fn charged_anticommutator(v in fock_vector(), j in -4i64..=4, k in -4i64..=4) {
        let ac = apply_psi(j, &apply_psi_dag(k, &v)).try_add(&apply_psi_dag(k, &apply_psi(j, &v))).unwrap();
        let want = if j == k { v.clone() } else { FockVector::zero() };
        prop_assert_eq!(ac, want);
        let pp = apply_psi(j, &apply_psi(k, &v)).try_add(&apply_psi(k, &apply_psi(j, &v))).unwrap();
        prop_assert!(pp.is_zero());
    }

    #[test]
    fn neutral_anticommutator(v in fock_vector(), j in -3i64..=3, k in -3i64..=3, plus in any::<bool>(), same in any::<bool>()) {
        let s = if plus { Sign::Plus } else { Sign::Minus };
        let t = if same { s } else { s.flip() };
        let ac = apply_phi(s, j, &apply_phi(t, k, &v)).try_add(&apply_phi(t, k, &apply_phi(s, j, &v))).unwrap();
        let want = if same && j + k == 0 {
            v.scale(&GaussianPoly::rational(rat(if j % 2 == 0 { 1 } else { -1 }, 1)))
        } else {
            FockVector::zero()
        };
        prop_assert_eq!(ac, want);
    }
}
