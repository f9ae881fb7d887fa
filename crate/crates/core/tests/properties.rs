//! Structural invariants over randomised inputs.

use exop::classical::{derivative_rule_check, monic_sequence, recurrence, Family};
use exop::darboux::{potential_value, PotentialSpec};
use exop::eop::eop_wronskian;
use exop::kernel::det::{det_bareiss, det_cofactor, wronskian};
use exop::kernel::rational::{int, q};
use exop::kernel::sturm::{sturm_root_count, Interval};
use exop::partitions::{
    double_partition, indices_to_partition, is_adler, partition_to_indices, reduced_form, Partition, SpectralIndices,
};
use exop::schur::{alternant, generalized_schur, symmetric_ratio};
use exop::{BigFloat, F32Poly, F64Poly, QMultiPoly, QPoly, Rational, Real};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| q(n, d))
}

fn qpoly(max_degree: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(rational(), 1..=max_degree + 1).prop_map(QPoly::new)
}

fn monic(degree: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(rational(), degree).prop_map(|mut c| {
        c.push(int(1));
        QPoly::new(c)
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rational(), n), n)
}

fn parameter() -> impl Strategy<Value = Rational> {
    (1i64..=6, 0i64..=30).prop_map(|(d, k)| q(-d + 1 + k, d))
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::hermite()),
        parameter().prop_map(|a| Family::laguerre(a).unwrap()),
        (parameter(), parameter()).prop_map(|(a, b)| Family::jacobi(a, b).unwrap()),
    ]
}

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn determinant_routes_agree_and_alternate(n in 1usize..=5, seed in matrix(5)) {
        let m: Vec<Vec<Rational>> = seed.iter().take(n).map(|r| r[..n].to_vec()).collect();
        let d = det_bareiss(&m).unwrap();
        prop_assert_eq!(det_cofactor(&m).unwrap(), d.clone());
        if n >= 2 {
            let mut swapped = m.clone();
            swapped.swap(0, n - 1);
            prop_assert_eq!(det_bareiss(&swapped).unwrap(), -d);
        }
    }

    #[test]
    fn wronskian_degree(mut degrees in prop::collection::btree_set(0usize..=6, 1..=4), seed in 0u64..1000) {
        let ds: Vec<usize> = std::mem::take(&mut degrees).into_iter().collect();
        let fns: Vec<QPoly> = ds
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut c: Vec<Rational> = (0..d).map(|k| q(((seed as i64 + 3 * k as i64 + i as i64) % 11) - 5, 1)).collect();
                c.push(int(1));
                QPoly::new(c)
            })
            .collect();
        let m = ds.len();
        let expected = ds.iter().sum::<usize>() - m * (m - 1) / 2;
        prop_assert_eq!(wronskian(&fns).unwrap().degree(), Some(expected));
    }

    #[test]
    fn univariate_exact_division(a in qpoly(5), b in qpoly(4)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn multivariate_exact_division(a in qpoly(3), b in qpoly(3), c in qpoly(2)) {
        let x = QMultiPoly::from_univariate(2, 0, &a);
        let y = &QMultiPoly::from_univariate(2, 1, &b) + &QMultiPoly::from_univariate(2, 0, &c);
        prop_assume!(!y.is_zero());
        prop_assert_eq!((&x * &y).exact_divide(&y).unwrap(), x);
    }

    #[test]
    fn sturm_counts_planted_roots(roots in prop::collection::btree_set(-12i64..=12, 0..=6), lo in -14i64..=0, hi in 1i64..=14) {
        let p = roots.iter().fold(QPoly::one(), |acc, &r| &acc * &QPoly::new(vec![q(-r, 2), int(1)]));
        let (a, b) = (q(lo, 2), q(hi, 2));
        let count = sturm_root_count(&p, &Interval::finite(a, b)).unwrap();
        let inside = roots.iter().filter(|&&r| lo < r && r < hi).count();
        prop_assert_eq!(count.interior, inside);
        prop_assert_eq!(count.lower_is_root, roots.contains(&lo));
        prop_assert_eq!(count.upper_is_root, roots.contains(&hi));
        let all = sturm_root_count(&p, &Interval::real_line()).unwrap();
        prop_assert_eq!(all.interior, roots.len());
    }

    #[test]
    fn monic_recurrence_and_derivative_rule(f in family(), n in 1usize..=30) {
        let seq = monic_sequence(&f, n).unwrap();
        prop_assert!(seq.iter().enumerate().all(|(k, p)| p.is_monic() && p.degree() == Some(k)));
        let rc = recurrence(&f, n - 1).unwrap();
        let z = QPoly::variable();
        let mut rhs = seq[n].clone();
        rhs += &seq[n - 1].scale(&rc.p);
        if n >= 2 {
            rhs += &seq[n - 2].scale(&rc.q);
        }
        prop_assert_eq!(&z * &seq[n - 1], rhs);
        prop_assert!(derivative_rule_check(&f, n).unwrap());
    }

    #[test]
    fn hermite_parity(n in 0usize..=30) {
        let p = &monic_sequence(&Family::hermite(), n).unwrap()[n];
        let reflected = p.scale_variable(&int(-1));
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(reflected, p.scale(&sign));
    }

    #[test]
    fn index_partition_bijection(set in prop::collection::btree_set(0usize..=12, 0..=6)) {
        let n = SpectralIndices::new(set.into_iter().collect()).unwrap();
        let lambda = indices_to_partition(&n);
        let m = n.len();
        prop_assert_eq!(lambda.weight() + m * m.saturating_sub(1) / 2, n.as_slice().iter().sum::<usize>());
        prop_assert_eq!(partition_to_indices(&lambda), n);
    }

    #[test]
    fn doubled_partitions_are_adler(lambda in partition(4, 6)) {
        prop_assert!(is_adler(&double_partition(&lambda)));
        prop_assert_eq!(is_adler(&lambda), is_adler(&reduced_form(&lambda)));
    }

    #[test]
    fn alternant_antisymmetry(fns in prop::collection::vec(qpoly(3), 3)) {
        let a = alternant(&fns, 3).unwrap();
        prop_assert_eq!(a.swap_variables(0, 2), -a.clone());
        let mut rows = fns.clone();
        rows.swap(0, 1);
        prop_assert_eq!(alternant(&rows, 3).unwrap(), -a);
    }

    #[test]
    fn ratios_are_symmetric(a in monic(3), b in monic(1), c in qpoly(4)) {
        prop_assert!(symmetric_ratio(&[a, b, c], 3).unwrap().is_symmetric());
    }

    #[test]
    fn hermite_eops_have_weight_degree(lambda in partition(3, 4)) {
        let w = eop_wronskian(&Family::hermite(), &lambda).unwrap().polynomial;
        prop_assert_eq!(w.degree(), Some(lambda.weight()));
    }

    #[test]
    fn precision_tiers_agree(x in 1i64..=150) {
        let spec = PotentialSpec::trigonometric(q(3, 4), q(7, 3)).unwrap();
        let xq = q(x, 100);
        let big: BigFloat = potential_value(&spec, &BigFloat::from_rational(&xq)).unwrap();
        let double: f64 = potential_value(&spec, &f64::from_rational(&xq)).unwrap();
        let single: f32 = potential_value(&spec, &f32::from_rational(&xq)).unwrap();
        let b = big.to_f64();
        prop_assert!((double - b).abs() <= 1e-10 * (1.0 + b.abs()));
        prop_assert!((single as f64 - b).abs() <= 1e-3 * (1.0 + b.abs()));
    }
}

#[test]
fn generalized_schur_is_symmetric() {
    let f = Family::jacobi(q(3, 4), q(5, 2)).unwrap();
    for parts in [vec![2, 1], vec![1, 1, 0], vec![3, 1, 1]] {
        let lambda = Partition::new(parts).unwrap();
        assert!(generalized_schur(&f, &lambda, lambda.len()).unwrap().is_symmetric());
    }
}

#[test]
fn float_polynomials_share_the_algebra() {
    let p = F64Poly::new(vec![1.0, -3.0, 2.0]);
    let r = F32Poly::new(vec![0.5, 1.0]);
    assert_eq!((&p * &p).exact_div(&p).unwrap(), p);
    assert_eq!(r.derivative(), F32Poly::constant(1.0));
    let w = wronskian(&[F64Poly::variable(), p.clone()]).unwrap();
    assert_eq!(w, F64Poly::new(vec![-1.0, 0.0, 2.0]));
}
