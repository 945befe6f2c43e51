//! Simplicial complexes, nerves of finite categories, quotients and colimits.

mod colimit;
mod complex;
pub mod fixtures;
mod format;
mod nerve;
mod poset;
mod quotient;

pub use colimit::{product, pushout, telescope, wedge, SimplicialMap};
pub use complex::{Simplex, SimplicialComplex};
pub use format::{complex_to_json, complex_to_text, parse_complex, parse_complex_json, parse_complex_text};
pub use nerve::{homology_of_nerve, nerve_truncated, Face, TruncatedSimplicialSet};
pub use poset::simplex_category;
pub use quotient::{check_vertex_action, quotient_complex, subdivide_action, vertex_orbits};

pub(crate) use poset::is_face;

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::homology::Coefficients;

    fn betti(x: &SimplicialComplex) -> Vec<usize> {
        x.homology(Coefficients::Integers).unwrap().betti
    }

    #[test]
    fn closure_and_counts() {
        let s = sphere();
        assert_eq!((s.count(0), s.count(1), s.count(2)), (4, 6, 4));
        assert_eq!(s.euler_characteristic(), 2);
        let r = rp2();
        assert_eq!((r.count(0), r.count(1), r.count(2)), (6, 15, 10));
        let t = torus(3);
        assert_eq!((t.count(0), t.count(1), t.count(2)), (9, 27, 18));
        let z = z3_presentation_complex();
        assert_eq!(z.euler_characteristic(), 1);
        assert_eq!(s.facets().len(), 4);
    }

    #[test]
    fn rejects_bad_simplices() {
        assert!(SimplicialComplex::from_facets(2, &[vec![0, 0]]).is_err());
        assert!(SimplicialComplex::from_facets(2, &[vec![0, 2]]).is_err());
        assert!(SimplicialComplex::from_facets(0, &[]).is_err());
    }

    #[test]
    fn fixture_homology() {
        assert_eq!(betti(&point()), vec![1]);
        assert_eq!(betti(&circle()), vec![1, 1]);
        assert_eq!(betti(&sphere()), vec![1, 0, 1]);
        assert_eq!(betti(&torus(3)), vec![1, 2, 1]);
        let r = rp2().homology(Coefficients::Integers).unwrap();
        assert_eq!(r.betti, vec![1, 0, 0]);
        assert_eq!(r.torsion[1], vec![2.into()]);
        assert_eq!(rp2().homology(Coefficients::Prime(2)).unwrap().betti, vec![1, 1, 1]);
        let z = z3_presentation_complex().homology(Coefficients::Integers).unwrap();
        assert_eq!(z.betti, vec![1, 0, 0]);
        assert_eq!(z.torsion[1], vec![3.into()]);
    }

    #[test]
    fn subdivision_preserves_homology() {
        for name in FIXTURE_NAMES {
            let x = fixture(name).unwrap();
            let sd = x.barycentric_subdivision();
            assert_eq!(sd.num_vertices(), x.total_count());
            assert_eq!(
                sd.homology(Coefficients::Integers).unwrap(),
                x.homology(Coefficients::Integers).unwrap(),
                "{name}"
            );
        }
        // a 2-simplex subdivides into 6 triangles
        assert_eq!(simplex(2).barycentric_subdivision().count(2), 6);
    }

    #[test]
    fn interval_reflection_quotient() {
        let x = interval();
        let swap = vec![1, 0];
        assert!(matches!(
            quotient_complex(&x, &[vec![0, 1], swap.clone()]),
            Err(crate::Error::NonRegularAction(_))
        ));
        let sd = x.barycentric_subdivision();
        let g = subdivide_action(&x, &swap);
        let (q, _) = quotient_complex(&sd, &[(0..3).collect(), g]).unwrap();
        assert_eq!(q.num_vertices(), 2);
        assert_eq!(q.count(1), 1);
    }

    #[test]
    fn trivial_quotient_is_isomorphic() {
        let x = rp2();
        let (q, orbit) = quotient_complex(&x, &[(0..6).collect()]).unwrap();
        assert_eq!(q, x);
        assert_eq!(orbit, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn square_rotation_quotient_is_a_circle() {
        let x = square_boundary();
        let rot = vec![2, 3, 0, 1];
        let sd = x.barycentric_subdivision();
        let g1 = subdivide_action(&x, &rot);
        let sd2 = sd.barycentric_subdivision();
        let g2 = subdivide_action(&sd, &g1);
        let id: Vec<usize> = (0..sd2.num_vertices()).collect();
        let (q, _) = quotient_complex(&sd2, &[id, g2]).unwrap();
        assert_eq!(betti(&q), vec![1, 1]);
    }

    #[test]
    fn colimits() {
        assert_eq!(betti(&product(&interval(), &interval())), vec![1, 0, 0]);
        let s2s2 = product(&sphere(), &sphere());
        assert_eq!(betti(&s2s2), vec![1, 0, 2, 0, 1]);
        assert_eq!(s2s2.euler_characteristic(), 4);
        assert_eq!(betti(&product(&circle(), &circle())), vec![1, 2, 1]);
        assert_eq!(betti(&wedge(&sphere(), 0, &point(), 0).unwrap()), vec![1, 0, 1]);
        assert_eq!(betti(&wedge(&circle(), 2, &circle(), 1).unwrap()), vec![1, 2]);

        let two = SimplicialComplex::from_facets(2, &[]).unwrap();
        let ends = SimplicialMap::new(vec![0, 1]);
        let p = pushout(&two, &interval(), &ends, &interval(), &ends).unwrap();
        assert_eq!(betti(&p), vec![1, 1]);

        let id = SimplicialMap::identity(3);
        let t = telescope(&[circle(), circle(), circle()], &[id.clone(), id]).unwrap();
        assert_eq!(betti(&t), vec![1, 1, 0]);
    }

    #[test]
    fn colimit_errors() {
        let two = SimplicialComplex::from_facets(2, &[]).unwrap();
        let collapse = SimplicialMap::new(vec![0, 0]);
        let ends = SimplicialMap::new(vec![0, 1]);
        assert!(matches!(
            pushout(&two, &interval(), &collapse, &interval(), &ends),
            Err(crate::Error::NonInjectiveMap(_))
        ));
        let bad = SimplicialMap::new(vec![0, 1, 3]);
        assert!(matches!(
            telescope(&[circle(), square_boundary()], &[bad]),
            Err(crate::Error::NonSimplicialMap(_))
        ));
    }

    #[test]
    fn text_and_json_round_trip() {
        for name in FIXTURE_NAMES {
            let x = fixture(name).unwrap();
            let text = complex_to_text(&x);
            let back = parse_complex(&text).unwrap();
            assert_eq!(back.homology(Coefficients::Integers).unwrap(), x.homology(Coefficients::Integers).unwrap());
            let json = complex_to_json(&x).to_string();
            assert_eq!(parse_complex(&json).unwrap(), x);
        }
        assert!(parse_complex_text("t 0 1").is_err());
        assert!(parse_complex_text("# nothing").is_err());
    }

    fn integer_nerve(c: &crate::category::FiniteCategory, d: usize) -> crate::homology::HomologyResult {
        homology_of_nerve(c, d, Coefficients::Integers, &crate::Limits::default()).unwrap()
    }

    #[test]
    fn nerve_small_categories() {
        use crate::category::FiniteCategory;
        let limits = crate::Limits::default();
        let point = FiniteCategory::discrete(vec!["*".into()]);
        let n = nerve_truncated(&point, 3, &limits).unwrap();
        assert_eq!(n.counts(), vec![1, 0, 0, 0]);

        let z2 = FiniteCategory::one_object(2, |a, b| a ^ b).unwrap();
        let n = nerve_truncated(&z2, 4, &limits).unwrap();
        assert_eq!(n.counts(), vec![1, 1, 1, 1, 1]);
        n.check_simplicial_identities(&z2).unwrap();
        // d_1 of the 2-cell (g, g) collapses to s_0 of the 0-cell
        assert_eq!(n.faces(2, 0)[1], Face::Degenerate { cell: 0, j: 0 });

        let interval = FiniteCategory::from_preorder(vec!["0".into(), "1".into()], |a, b| a <= b, 10).unwrap();
        let n = nerve_truncated(&interval, 2, &limits).unwrap();
        assert_eq!(n.counts(), vec![2, 1, 0]);
        assert_eq!(n.faces(1, 0), vec![Face::Cell(1), Face::Cell(0)]);
    }

    #[test]
    fn nerve_of_bz2() {
        let z2 = crate::category::FiniteCategory::one_object(2, |a, b| a ^ b).unwrap();
        let h = integer_nerve(&z2, 5);
        assert_eq!(h.betti, vec![1, 0, 0, 0, 0]);
        let t = h.torsion.clone();
        assert_eq!(t[1], vec![2.into()]);
        assert!(t[2].is_empty());
        assert_eq!(t[3], vec![2.into()]);
        assert!(t[4].is_empty());
        let h2 = homology_of_nerve(&z2, 5, Coefficients::Prime(2), &crate::Limits::default()).unwrap();
        assert_eq!(h2.betti, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn nerve_of_z3_satisfies_identities() {
        let z3 = crate::category::FiniteCategory::one_object(3, |a, b| (a + b) % 3).unwrap();
        let n = nerve_truncated(&z3, 4, &crate::Limits::default()).unwrap();
        assert_eq!(n.counts(), vec![1, 2, 4, 8, 16]);
        n.check_simplicial_identities(&z3).unwrap();
        let h = integer_nerve(&z3, 4);
        assert_eq!(h.torsion[1], vec![3.into()]);
    }

    #[test]
    fn discrete_and_coned_categories() {
        use crate::category::FiniteCategory;
        let two = FiniteCategory::discrete(vec!["a".into(), "b".into()]);
        assert_eq!(integer_nerve(&two, 2).betti, vec![2, 0]);
        // a poset with a top element is a cone
        let cone = FiniteCategory::from_preorder((0..4).map(|i| i.to_string()).collect(), |a, b| b == 3 || a == b, 100)
            .unwrap();
        assert!(integer_nerve(&cone, 3).is_reduced_acyclic());
    }

    #[test]
    fn simplex_category_shapes() {
        let limits = crate::Limits::default();
        let c = simplex_category(&interval(), 100).unwrap();
        assert_eq!(c.num_objects(), 3);
        assert_eq!(c.num_morphisms() - c.num_objects(), 2);
        assert_eq!(simplex_category(&circle(), 100).unwrap().num_objects(), 6);
        let s = simplex_category(&sphere(), 1000).unwrap();
        let n = nerve_truncated(&s, 3, &limits).unwrap();
        n.check_simplicial_identities(&s).unwrap();
        let sd = sphere().barycentric_subdivision();
        assert_eq!(n.count(2), sd.count(2));
        assert_eq!(n.count(3), 0);
        let h = homology_of_nerve(&s, 3, Coefficients::Integers, &limits).unwrap();
        assert_eq!(h, sphere().homology(Coefficients::Integers).unwrap());
    }
}
