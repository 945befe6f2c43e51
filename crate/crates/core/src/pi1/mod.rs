//! Fundamental groups: edge-path presentations, Tietze moves and coset enumeration.

mod compare;
mod edge_path;
mod presentation;
mod tietze;
mod todd_coxeter;

pub use compare::{
    category_presentation, compare_presentations, pi1_matches_torsion_quotient,
    pi1_matches_torsion_quotient_for_category, Pi1Comparison, Pi1Verdict,
};
pub use edge_path::{edge_path, edge_path_presentation, EdgePath};
pub use presentation::{cyclic_reduce, free_reduce, inverse_word, Abelianization, Presentation, Word};
pub use tietze::{tietze_simplify, tietze_with_images, TietzeResult};
pub use todd_coxeter::{todd_coxeter, CosetStatus, CosetTable};

/// Order of the presented group if enumeration over the trivial subgroup completes.
pub fn group_order(p: &Presentation, max_cosets: usize) -> Option<usize> {
    todd_coxeter(p, &[], max_cosets).index()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::Coefficients;
    use crate::simplicial::fixtures::*;

    fn pres(text: &str) -> Presentation {
        Presentation::parse(text).unwrap()
    }

    #[test]
    fn grammar_round_trip() {
        let p = pres("gens: a b; rel: aBab, a^3, b*b");
        assert_eq!(p.relators, vec![vec![1, -2, 1, 2], vec![1, 1, 1], vec![2, 2]]);
        assert_eq!(p.to_string(), "gens: a b; rel: aBab, aaa, bb");
        assert_eq!(pres(&p.to_string()), p);
        let q = pres("gens: t1 t2 p; rel: t1 T2 P, p^-2");
        assert_eq!(q.relators, vec![vec![1, -2, -3], vec![-3, -3]]);
        assert_eq!(pres(&q.to_string()), q);
        assert!(Presentation::parse("gens: A; rel:").is_err());
        assert!(Presentation::parse("gens: a; rel: c").is_err());
        assert!(Presentation::parse("rel: a").is_err());
        // free reduction on construction
        assert_eq!(pres("gens: a b; rel: abBA, aAb").relators, vec![vec![2]]);
    }

    #[test]
    fn todd_coxeter_small_groups() {
        assert_eq!(group_order(&pres("gens: a; rel: a^3"), 100), Some(3));
        assert_eq!(group_order(&pres("gens: a b; rel: a^2, b^3, abab"), 100), Some(6));
        assert_eq!(group_order(&pres("gens: a b; rel: a^4, b^2, abab"), 100), Some(8));
        // the (2,3,5) triangle group is A5
        assert_eq!(group_order(&pres("gens: a b; rel: a^2, b^3, ababababab"), 1000), Some(60));
        let comm = pres("gens: a b; rel: abAB");
        let t = todd_coxeter(&comm, &[vec![1], vec![2]], 100);
        assert_eq!(t.index(), Some(1));
        assert!(t.check(&comm, &[vec![1], vec![2]]));
        // Z is infinite: enumeration must report overflow, not an index
        let z = todd_coxeter(&pres("gens: a; rel:"), &[], 50);
        assert_eq!(z.status, CosetStatus::Overflowed);
        assert_eq!(z.index(), None);
    }

    #[test]
    fn coincidences_collapse() {
        // a^5 = a^3 = 1 forces a = 1
        let p = pres("gens: a; rel: a^5, a^3");
        let t = todd_coxeter(&p, &[], 100);
        assert_eq!(t.index(), Some(1));
        assert!(t.check(&p, &[]));
        // the quaternion group
        let q = pres("gens: a b; rel: a^4, a^2 B^2, b A b a");
        let t = todd_coxeter(&q, &[], 100);
        assert_eq!(t.index(), Some(8));
        assert!(t.check(&q, &[]));
    }

    #[test]
    fn lookahead_recovers_space() {
        let p = pres("gens: a b; rel: a^2, b^3, ababababab");
        let roomy = todd_coxeter(&p, &[], 10_000);
        assert_eq!(roomy.index(), Some(60));
        assert!(roomy.peak > 60);
        // capped below the unrestricted peak, lookahead and compaction still finish
        let tight = todd_coxeter(&p, &[], 62);
        assert_eq!(tight.index(), Some(60));
        assert!(tight.check(&p, &[]));
        assert_eq!(todd_coxeter(&p, &[], 30).status, CosetStatus::Overflowed);
    }

    #[test]
    fn multiplication_table_is_a_group() {
        let p = pres("gens: a b; rel: a^2, b^3, abab");
        let t = todd_coxeter(&p, &[], 100);
        let m = t.multiplication_table();
        let n = m.len();
        assert_eq!(n, 6);
        for a in 0..n {
            assert_eq!(m[0][a] as usize, a);
            assert_eq!(m[a][0] as usize, a);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(m[m[a][b] as usize][c], m[a][m[b][c] as usize]);
                }
            }
        }
        // not abelian
        assert!((0..n).any(|a| (0..n).any(|b| m[a][b] != m[b][a])));
    }

    #[test]
    fn tietze_examples() {
        let p = pres("gens: a b; rel: b");
        let s = tietze_simplify(&p, 100);
        assert_eq!(s.to_string(), "gens: a; rel: ");
        let p = pres("gens: a b; rel: ab, a^3");
        let r = tietze_with_images(&p, 100);
        assert_eq!(r.presentation.num_generators(), 1);
        assert_eq!(r.presentation.relators.len(), 1);
        assert_eq!(r.presentation.relators[0].len(), 3);
        assert_eq!(group_order(&r.presentation, 10), Some(3));
        assert_eq!(r.presentation.abelianization(), p.abelianization());
        let minimal = pres("gens: a; rel: a^3");
        assert_eq!(tietze_simplify(&minimal, 100), minimal);
        assert_eq!(tietze_with_images(&p, 0).presentation, p);
    }

    #[test]
    fn tietze_images_express_original_generators() {
        let p = pres("gens: a b c; rel: a^2, b^3, abab, cAB");
        let r = tietze_with_images(&p, 100);
        let t = todd_coxeter(&r.presentation, &[], 100);
        assert_eq!(t.index(), Some(6));
        // every original relator holds after substituting the images
        for rel in &p.relators {
            let w: Word = rel
                .iter()
                .flat_map(|&x| {
                    let img = &r.images[(x.unsigned_abs() - 1) as usize];
                    if x > 0 {
                        img.clone()
                    } else {
                        inverse_word(img)
                    }
                })
                .collect();
            assert_eq!(t.trace(0, &w), 0);
        }
    }

    #[test]
    fn edge_path_groups_of_fixtures() {
        let s = edge_path_presentation(&sphere(), 0).unwrap();
        assert_eq!(group_order(&s, 100), Some(1));
        let c = edge_path_presentation(&circle(), 0).unwrap();
        assert_eq!((c.num_generators(), c.relators.len()), (1, 0));
        let r = edge_path_presentation(&rp2(), 0).unwrap();
        assert_eq!(r.abelianization().to_string(), "Z/2");
        assert_eq!(group_order(&r, 100), Some(2));
        let z3 = edge_path_presentation(&z3_presentation_complex(), 0).unwrap();
        assert_eq!(group_order(&z3, 100), Some(3));
        let disconnected = crate::simplicial::SimplicialComplex::from_facets(2, &[]).unwrap();
        assert!(matches!(edge_path_presentation(&disconnected, 0), Err(crate::Error::DisconnectedComplex)));
    }

    #[test]
    fn abelianized_edge_path_is_first_homology() {
        for name in FIXTURE_NAMES {
            let x = fixture(name).unwrap();
            let p = edge_path_presentation(&x, 0).unwrap();
            let h = x.homology(Coefficients::Integers).unwrap();
            let ab = p.abelianization();
            assert_eq!(ab.free_rank, h.betti.get(1).copied().unwrap_or(0), "{name}");
            assert_eq!(ab.torsion, h.torsion.get(1).cloned().unwrap_or_default(), "{name}");
            let simplified = tietze_simplify(&p, 1000);
            assert_eq!(simplified.abelianization(), ab, "{name}");
        }
    }
}
