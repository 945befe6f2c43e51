use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Groups at most this large cache a full multiplication table.
const TABLE_ORDER: usize = 1024;

/// A finite permutation group with its materialized element list.
///
/// Elements are sorted lexicographically by image list, so element `0` is the
/// identity. Elements are referred to by their index in that list.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverses: Vec<usize>,
    table: Vec<u32>,
}

/// Closes a generating set under composition.
pub fn close_generators(degree: usize, generators: &[Perm], limits: &Limits) -> Result<PermGroup> {
    if degree == 0 {
        return Err(Error::InvalidInput("permutation degree must be positive".into()));
    }
    if degree > limits.max_degree {
        return Err(Error::DegreeBoundExceeded {
            degree,
            bound: limits.max_degree,
        });
    }
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::InvalidInput(format!(
            "generator {g} acts on {} points, expected {degree}",
            g.degree()
        )));
    }
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                if seen.len() > limits.max_order {
                    return Err(Error::OrderBoundExceeded {
                        bound: limits.max_order,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort();
    Ok(PermGroup::from_sorted_elements(degree, generators.to_vec(), elements))
}

impl PermGroup {
    fn from_sorted_elements(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let index: HashMap<Perm, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let n = elements.len();
        let table = if n <= TABLE_ORDER {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.compose(b)] as u32);
                }
            }
            t
        } else {
            Vec::new()
        };
        PermGroup {
            degree,
            generators,
            elements,
            index,
            inverses,
            table,
        }
    }

    /// The trivial group acting on one point.
    pub fn trivial() -> Self {
        close_generators(1, &[], &Limits::default()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of the identity, always `0`.
    pub fn identity(&self) -> usize {
        0
    }

    /// Indices of the generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    /// Product `a * b` (apply `b` first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if self.table.is_empty() {
            self.index[&self.elements[a].compose(&self.elements[b])]
        } else {
            self.table[a * self.elements.len() + b] as usize
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g * x * g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by the given elements.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut members = vec![0usize];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { elements: members }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.order()).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    /// Checks that `elements` is closed under products and inverses and contains the identity.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in elements {
            member[x] = true;
        }
        member[0]
            && elements.iter().all(|&a| member[self.inv(a)])
            && elements
                .iter()
                .all(|&a| elements.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// Left coset `a H` as a sorted element list.
    pub fn left_coset(&self, a: usize, h: &Subgroup) -> Vec<usize> {
        let mut c: Vec<usize> = h.elements.iter().map(|&x| self.mul(a, x)).collect();
        c.sort_unstable();
        c
    }

    /// Canonical representative of `a H`: its least element.
    pub fn coset_rep(&self, a: usize, h: &Subgroup) -> usize {
        h.elements
            .iter()
            .map(|&x| self.mul(a, x))
            .min()
            .expect("subgroups are nonempty")
    }

    /// Canonical representatives of all left cosets of `h`, in increasing order.
    pub fn coset_reps(&self, h: &Subgroup) -> Vec<usize> {
        let mut reps: Vec<usize> = (0..self.order()).map(|a| self.coset_rep(a, h)).collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }

    /// `g H g^-1`.
    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        let mut e: Vec<usize> = h.elements.iter().map(|&x| self.conjugate(g, x)).collect();
        e.sort_unstable();
        Subgroup { elements: e }
    }

    pub fn describe_element(&self, a: usize) -> String {
        self.elements[a].to_string()
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// A subgroup as the sorted list of its element indices in the parent group.
///
/// Two subgroups of the same parent are equal exactly when their element lists are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Wraps a sorted element list after checking closure in `group`.
    pub fn from_elements(group: &PermGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&x| x >= group.order()) || !group.is_subgroup(&elements) {
            return Err(Error::InvalidInput("element set is not a subgroup".into()));
        }
        Ok(Subgroup { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// Cycle-notation listing such as `{(), (1 2)}`.
    pub fn describe(&self, group: &PermGroup) -> String {
        let parts: Vec<String> = self.elements.iter().map(|&x| group.describe_element(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Every subgroup of `g`, sorted by `(order, element list)`.
///
/// Subgroups are found by closing the set of cyclic subgroups under joins.
pub fn all_subgroups(g: &PermGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    if g.order() > limits.max_order {
        return Err(Error::OrderBoundExceeded {
            bound: limits.max_order,
        });
    }
    let mut cyclic: Vec<(usize, Subgroup)> = Vec::new();
    let mut seen: HashSet<Subgroup> = HashSet::new();
    for a in 0..g.order() {
        let c = g.generate(&[a]);
        if seen.insert(c.clone()) {
            cyclic.push((a, c));
        }
    }
    let mut found: Vec<Subgroup> = cyclic.iter().map(|(_, c)| c.clone()).collect();
    let mut queue: VecDeque<Subgroup> = found.iter().cloned().collect();
    while let Some(h) = queue.pop_front() {
        for (a, c) in &cyclic {
            if c.is_subset_of(&h) {
                continue;
            }
            let mut gens = h.elements.clone();
            gens.push(*a);
            let j = g.generate(&gens);
            if seen.insert(j.clone()) {
                found.push(j.clone());
                queue.push_back(j);
            }
        }
    }
    found.sort_by(|x, y| (x.order(), &x.elements).cmp(&(y.order(), &y.elements)));
    Ok(found)
}

/// A family of subgroups closed under conjugation and passage to subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    members: Vec<Subgroup>,
}

impl FamilySpec {
    /// Validates closure under conjugation and subgroups; members are sorted canonically.
    pub fn new(group: &PermGroup, mut members: Vec<Subgroup>, limits: &Limits) -> Result<Self> {
        members.sort_by(|x, y| (x.order(), &x.elements).cmp(&(y.order(), &y.elements)));
        members.dedup();
        let set: HashSet<&Subgroup> = members.iter().collect();
        for h in &members {
            if !group.is_subgroup(h.elements()) {
                return Err(Error::InvalidFamily(format!("{} is not a subgroup", h.describe(group))));
            }
            for g in 0..group.order() {
                if !set.contains(&group.conjugate_subgroup(g, h)) {
                    return Err(Error::InvalidFamily(format!(
                        "not closed under conjugation: {} by {}",
                        h.describe(group),
                        group.describe_element(g)
                    )));
                }
            }
        }
        let everything = all_subgroups(group, limits)?;
        for k in &everything {
            if !set.contains(k) && members.iter().any(|h| k.is_subset_of(h)) {
                return Err(Error::InvalidFamily(format!(
                    "not closed under subgroups: missing {}",
                    k.describe(group)
                )));
            }
        }
        Ok(FamilySpec { members })
    }

    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.members.iter().position(|m| m == h)
    }
}

/// The family of finite subgroups, which for a finite group is every subgroup.
pub fn finite_family(g: &PermGroup, limits: &Limits) -> Result<FamilySpec> {
    let members = all_subgroups(g, limits)?;
    FamilySpec::new(g, members, limits)
}
