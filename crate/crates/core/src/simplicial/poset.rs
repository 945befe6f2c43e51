use super::complex::SimplicialComplex;
use crate::category::FiniteCategory;
use crate::error::Result;

/// Is `a` a face of `b`? Both sorted.
pub(crate) fn is_face(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// The poset of simplices of `x` under inclusion, with morphisms pointing from a
/// face to each coface. Object `i` is the `i`-th simplex in the global order, so
/// the nerve of this category is the barycentric subdivision of `x`.
pub fn simplex_category(x: &SimplicialComplex, max_morphisms: usize) -> Result<FiniteCategory> {
    let simplices: Vec<&Vec<usize>> = x.all_simplices().collect();
    let labels = simplices
        .iter()
        .map(|s| {
            let v: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            format!("[{}]", v.join(" "))
        })
        .collect();
    FiniteCategory::from_preorder(labels, |a, b| is_face(simplices[a], simplices[b]), max_morphisms)
}
