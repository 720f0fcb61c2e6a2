use num_bigint::BigInt;
use proptest::prelude::*;

use icomb::asm::{enumerate_asms, lambda_det, lambda_det_expansion};
use icomb::cluster::{Quiver, Seed};
use icomb::exact::laurent::{Monomial, MultiLaurent};
use icomb::exact::matrix::ExactMatrix;
use icomb::exact::rational::{format_rational, parse_rational, Rational};
use icomb::exact::ring::Ring;
use icomb::sixvertex::{asm_to_6v, six_vertex_to_asm};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn laurent() -> impl Strategy<Value = MultiLaurent> {
    prop::collection::vec((prop::collection::vec(-2i32..=3, 3), -5i64..=5), 0..5).prop_map(|terms| {
        MultiLaurent::from_terms(terms.into_iter().map(|(e, c)| (Monomial::new(e), Rational::from_integer(c.into()))))
    })
}

fn matrix(n: usize) -> impl Strategy<Value = ExactMatrix<Rational>> {
    prop::collection::vec(rational(), n * n).prop_map(move |v| {
        ExactMatrix::from_rows(v.chunks(n).map(<[Rational]>::to_vec).collect()).unwrap()
    })
}

fn skew_matrix(n: usize) -> impl Strategy<Value = Quiver> {
    prop::collection::vec(-2i64..=2, n * (n - 1) / 2).prop_map(move |upper| {
        let mut b = vec![vec![0; n]; n];
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = it.next().unwrap();
                b[i][j] = v;
                b[j][i] = -v;
            }
        }
        Quiver::new(b).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, MultiLaurent::from_i64(0));
        prop_assert_eq!(&a * &MultiLaurent::from_i64(1), a.clone());
    }

    #[test]
    fn exact_division_undoes_multiplication(p in laurent(), q in laurent()) {
        prop_assume!(!num_traits::Zero::is_zero(&q));
        prop_assert_eq!((&p * &q).div_exact(&q).unwrap(), p);
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3), b in matrix(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        prop_assert_eq!(a.det().unwrap(), a.det_cofactor().unwrap());
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn lambda_det_matches_expansion(a in matrix(3), lambda in rational()) {
        if let Ok(v) = lambda_det(&a, &lambda) {
            prop_assert_eq!(v, lambda_det_expansion(&a, &lambda).unwrap());
        }
    }

    #[test]
    fn rational_text_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn quiver_mutation_is_an_involution(q in skew_matrix(5), k in 0usize..5) {
        let once = q.mutate(k).unwrap();
        prop_assert_eq!(&once.mutate(k).unwrap(), &q);
        prop_assert_eq!(once.b(k, (k + 1) % 5), -q.b(k, (k + 1) % 5));
    }

    #[test]
    fn seed_mutation_is_an_involution(q in skew_matrix(4), seq in prop::collection::vec(0usize..4, 1..5)) {
        let (mut seed, _) = Seed::initial(q);
        for &k in &seq {
            let next = seed.mutate(k).unwrap();
            prop_assert_eq!(&next.mutate(k).unwrap(), &seed);
            seed = next;
        }
    }

    #[test]
    fn six_vertex_bijection(idx in 0usize..429) {
        let asms = enumerate_asms(5).unwrap();
        let b = &asms[idx];
        prop_assert_eq!(&six_vertex_to_asm(&asm_to_6v(b)).unwrap(), b);
    }
}
