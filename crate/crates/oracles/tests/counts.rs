use motivic_dt_oracles::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn nilpotent_totals_are_q_to_d2_minus_d() {
    for (d, q) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3), (2, 4), (2, 5)] {
        let c = count_nilpotent_types(d, q).unwrap();
        assert_eq!(c.total, (q as u64).pow((d * d - d) as u32), "d={d} q={q}");
        assert_eq!(c.by_type.values().sum::<u64>(), c.total);
    }
}

#[test]
fn gl_order_matches_product_formula() {
    for (d, q) in [(1u32, 2u64), (2, 2), (3, 2), (2, 3)] {
        let expect: u64 = (0..d).map(|i| q.pow(d) - q.pow(i)).product();
        assert_eq!(count_nilpotent_types(d as usize, q as u32).unwrap().gl_order, expect);
    }
}

#[test]
fn hall_numbers_are_symmetric() {
    for q in [2, 3] {
        for n in 1..=3 {
            for lambda in partitions(n, n) {
                for k in 0..=n {
                    for mu in partitions(k, k) {
                        for nu in partitions(n - k, n - k) {
                            let a = hall_numbers_bruteforce(&lambda, &mu, &nu, q).unwrap();
                            let b = hall_numbers_bruteforce(&lambda, &nu, &mu, q).unwrap();
                            assert_eq!(a, b, "{lambda:?} {mu:?} {nu:?} q={q}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn hall_trivial_submodule() {
    for lambda in partitions(3, 3) {
        assert_eq!(hall_numbers_bruteforce(&lambda, &lambda, &[], 2).unwrap(), 1);
        assert_eq!(hall_numbers_bruteforce(&lambda, &[], &lambda, 2).unwrap(), 1);
    }
    assert_eq!(hall_numbers_bruteforce(&[2], &[1], &[2], 2).unwrap(), 0);
}

#[test]
fn hilbert_counts_grow_with_n() {
    assert_eq!(hilb_a2_bruteforce(1, 2).unwrap(), 4);
    assert_eq!(hilb_a2_bruteforce(1, 3).unwrap(), 9);
    assert_eq!(hilb_a2_bruteforce(2, 2).unwrap(), 24);
}

#[test]
fn bun_p1_partial_sums_increase() {
    let a = bun_p1_weighted_count(0, 2, 6).unwrap();
    let b = bun_p1_weighted_count(0, 2, 12).unwrap();
    assert!(b.partial_sum >= a.partial_sum);
    assert!(b.tail_bound <= a.tail_bound);
    let third = BigRational::new(BigInt::from(1), BigInt::from(3));
    assert!((b.partial_sum - third).abs() <= b.tail_bound);
}

#[test]
fn field_axioms() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let f = match Gf::new(q) {
            Ok(f) => f,
            Err(_) => continue,
        };
        for a in 0..q as u8 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q as u8 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(f.add(a, b), b), a);
            }
        }
    }
}

#[test]
fn size_limits_are_reported() {
    assert!(matches!(count_nilpotent_types(6, 3), Err(OracleError::SizeLimit(_))));
}
