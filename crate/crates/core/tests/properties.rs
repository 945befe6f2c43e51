mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use common::*;
use properclass::group::{close_generators, Perm};
use properclass::homology::{invariant_factors, smith_normal_form, Coefficients, IntMatrix};
use properclass::pi1::{free_reduce, inverse_word, Presentation};
use properclass::simplicial::{product, SimplicialComplex};
use properclass::Limits;

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-12i64..=12, c), r))
}

fn complex(max_vertices: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2..=max_vertices)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::btree_set(0..n, 1..=n.min(4)), 1..6)))
        .prop_map(|(n, facets)| {
            let facets: Vec<Vec<usize>> = facets.into_iter().map(|s| s.into_iter().collect()).collect();
            SimplicialComplex::from_facets(n, &facets).unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_form_matches_naive_elimination(rows in matrix(5)) {
        let want: Vec<BigInt> = naive_invariant_factors(&rows).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(invariant_factors(&IntMatrix::from_rows(&rows)), want);
    }

    #[test]
    fn smith_form_is_a_unimodular_factorization(rows in matrix(5)) {
        let a = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.d.is_diagonal());
        prop_assert!(s.u.determinant().abs().is_one() && s.v.determinant().abs().is_one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn homology_obeys_rank_nullity(x in complex(7)) {
        let h = x.homology(Coefficients::Integers).unwrap();
        let chains = simplicial_chains(&x);
        prop_assert_eq!(&h.betti, &chains.betti_mod_p(LARGE_PRIME, x.dim() + 1));
        let chi: i64 = h.betti.iter().enumerate().map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(chi, x.euler_characteristic());
        prop_assert!(chains.boundary_squares_to_zero());
    }

    #[test]
    fn field_coefficients_match_the_oracle(x in complex(7), p in prop::sample::select(vec![2u64, 3, 5])) {
        let h = x.homology(Coefficients::Prime(p)).unwrap();
        prop_assert_eq!(h.betti, betti_mod_p(&x, p));
    }

    #[test]
    fn subdivision_preserves_homology(x in complex(5)) {
        let a = x.homology(Coefficients::Integers).unwrap();
        let b = x.barycentric_subdivision().homology(Coefficients::Integers).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn kunneth_for_betti_numbers(x in complex(4), y in complex(4)) {
        let bx = betti_mod_p(&x, LARGE_PRIME);
        let by = betti_mod_p(&y, LARGE_PRIME);
        let mut want = vec![0; bx.len() + by.len() - 1];
        for (i, a) in bx.iter().enumerate() {
            for (j, b) in by.iter().enumerate() {
                want[i + j] += a * b;
            }
        }
        let got = product(&x, &y).homology(Coefficients::Prime(LARGE_PRIME)).unwrap().betti;
        prop_assert_eq!(got, want);
    }

    #[test]
    fn edge_path_abelianization_is_h1(x in complex(6)) {
        prop_assume!(x.is_connected());
        let ab = properclass::pi1::edge_path_presentation(&x, 0).unwrap().abelianization();
        let h = x.homology(Coefficients::Integers).unwrap();
        prop_assert_eq!(ab.free_rank, h.betti.get(1).copied().unwrap_or(0));
        prop_assert_eq!(ab.torsion, h.torsion.get(1).cloned().unwrap_or_default());
    }

    #[test]
    fn closure_is_a_group(a in permutation(5), b in permutation(5)) {
        let g = close_generators(5, &[a, b], &Limits::default()).unwrap();
        prop_assert_eq!(120 % g.order(), 0);
        for x in 0..g.order() {
            prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
        }
    }

    #[test]
    fn free_reduction_cancels_inverses(w in prop::collection::vec(prop_oneof![-3i32..=-1, 1i32..=3], 0..20)) {
        let mut ww = w.clone();
        ww.extend(inverse_word(&w));
        prop_assert!(free_reduce(&ww).is_empty());
        let r = free_reduce(&w);
        prop_assert!(r.windows(2).all(|p| p[0] != -p[1]));
    }

    #[test]
    fn cyclic_group_orders(n in 1usize..40) {
        let p = Presentation::parse(&format!("gens: a; rel: a^{n}")).unwrap();
        prop_assert_eq!(properclass::pi1::group_order(&p, 1000), Some(n));
    }
}
