use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::group::cayley_presentation;
use crate::pi1::{Presentation, Word};

/// Square integer matrix, row-major, acting on lattice coordinates.
pub type IntMat = Vec<Vec<i64>>;

/// Names accepted by [`catalogue_group`]. `ZxZp` takes a prime, as in `ZxZp(5)`.
pub const CATALOGUE_NAMES: &[&str] = &["Z", "Dinf", "ZxZp(p)", "p1", "pmm", "p3", "p3m1", "H_even"];

/// Shape of the translation lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    Line,
    Square,
    /// Basis vectors of equal length at 60 degrees.
    Hexagonal,
}

/// A crystallographic group `L ⋊ P` (times a finite kernel acting trivially),
/// described in lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclideanGroupSpec {
    pub name: String,
    pub dimension: usize,
    pub lattice: Lattice,
    /// Gram matrix of the lattice basis.
    pub gram: IntMat,
    /// Generators of the point group.
    pub point_generators: Vec<IntMat>,
    /// Every point-group element, identity first, closed under products.
    pub point_group: Vec<IntMat>,
    /// Translation part of each point-group element, as numerators over
    /// `affine_denominator`. All zero for symmorphic groups.
    pub affine_parts: Vec<Vec<i64>>,
    pub affine_denominator: i64,
    /// Order of a cyclic kernel acting trivially on the plane (1 if none).
    pub kernel_order: usize,
    /// Homotopy type the quotient is expected to have.
    pub expected_quotient: &'static str,
}

pub fn identity(d: usize) -> IntMat {
    (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let d = a.len();
    (0..d)
        .map(|i| (0..d).map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn mat_vec(a: &IntMat, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

fn transpose(a: &IntMat) -> IntMat {
    let d = a.len();
    (0..d).map(|i| (0..d).map(|j| a[j][i]).collect()).collect()
}

/// Closure of `gens` under multiplication, identity first, then in breadth-first order.
fn close(d: usize, gens: &[IntMat]) -> Result<Vec<IntMat>> {
    let mut elements = vec![identity(d)];
    let mut seen: HashMap<IntMat, usize> = HashMap::from([(identity(d), 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let y = mat_mul(&elements[i], g);
            if !seen.contains_key(&y) {
                if elements.len() >= 48 {
                    return Err(Error::InvalidInput("point group is not finite".into()));
                }
                seen.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    Ok(elements)
}

fn parse_prime(name: &str) -> Option<usize> {
    let p: usize = name.strip_prefix("ZxZp(")?.strip_suffix(')')?.trim().parse().ok()?;
    (p >= 2 && (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0)).then_some(p)
}

/// Looks up a group in the built-in catalogue.
pub fn catalogue_group(name: &str) -> Result<EuclideanGroupSpec> {
    let square = vec![vec![1, 0], vec![0, 1]];
    let hexagonal = vec![vec![2, 1], vec![1, 2]];
    let rot3 = vec![vec![-1, -1], vec![1, 0]];
    let (dimension, lattice, gram, gens, kernel, expected): (usize, Lattice, IntMat, Vec<IntMat>, usize, &'static str) =
        match name {
            "Z" => (1, Lattice::Line, vec![vec![1]], vec![], 1, "S1"),
            "Dinf" => (1, Lattice::Line, vec![vec![1]], vec![vec![vec![-1]]], 1, "point"),
            "p1" => (2, Lattice::Square, square, vec![], 1, "T2"),
            "pmm" => (
                2,
                Lattice::Square,
                square,
                vec![vec![vec![-1, 0], vec![0, 1]], vec![vec![1, 0], vec![0, -1]]],
                1,
                "point",
            ),
            "p3" => (2, Lattice::Hexagonal, hexagonal, vec![rot3], 1, "S2"),
            // the swap fixes the bisector of the two basis vectors
            "p3m1" => (
                2,
                Lattice::Hexagonal,
                hexagonal,
                vec![rot3, vec![vec![0, 1], vec![1, 0]]],
                1,
                "point",
            ),
            // even words in the four generating reflections of pmm: translations and half-turns
            "H_even" => (2, Lattice::Square, square, vec![vec![vec![-1, 0], vec![0, -1]]], 1, "S2"),
            _ => match parse_prime(name) {
                Some(p) => (1, Lattice::Line, vec![vec![1]], vec![], p, "S1"),
                None => return Err(Error::UnknownGroup(name.to_string())),
            },
        };
    let spec = EuclideanGroupSpec::new(name, dimension, lattice, gram, gens, kernel, expected)?;
    Ok(spec)
}

impl EuclideanGroupSpec {
    /// Symmorphic group from point-group generators; validates the result.
    pub fn new(
        name: &str,
        dimension: usize,
        lattice: Lattice,
        gram: IntMat,
        point_generators: Vec<IntMat>,
        kernel_order: usize,
        expected_quotient: &'static str,
    ) -> Result<Self> {
        if !(1..=2).contains(&dimension) {
            return Err(Error::InvalidInput(format!("dimension {dimension} is not 1 or 2")));
        }
        let point_group = close(dimension, &point_generators)?;
        let spec = EuclideanGroupSpec {
            name: name.to_string(),
            dimension,
            lattice,
            gram,
            affine_parts: vec![vec![0; dimension]; point_group.len()],
            affine_denominator: 1,
            point_generators,
            point_group,
            kernel_order: kernel_order.max(1),
            expected_quotient,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks shapes, closure, that every element preserves the Gram matrix,
    /// and the cocycle condition on affine parts.
    pub fn validate(&self) -> Result<()> {
        let d = self.dimension;
        let square = |m: &IntMat| m.len() == d && m.iter().all(|r| r.len() == d);
        if !square(&self.gram) || !self.point_group.iter().chain(&self.point_generators).all(square) {
            return Err(Error::InvalidInput("matrix of the wrong size".into()));
        }
        if self.point_group.first() != Some(&identity(d)) {
            return Err(Error::InvalidInput("point group must list the identity first".into()));
        }
        for a in &self.point_group {
            if mat_mul(&mat_mul(&transpose(a), &self.gram), a) != self.gram {
                return Err(Error::InvalidInput(format!("{a:?} is not an isometry of the lattice")));
            }
            for b in &self.point_group {
                if self.element_index(&mat_mul(a, b)).is_none() {
                    return Err(Error::InvalidInput("point group not closed".into()));
                }
            }
        }
        if self.affine_parts.len() != self.point_group.len() || self.affine_denominator <= 0 {
            return Err(Error::InvalidInput("one affine part per point-group element".into()));
        }
        // a(AB) = a(A) + A a(B) modulo the lattice
        let q = self.affine_denominator;
        for (i, a) in self.point_group.iter().enumerate() {
            for (j, b) in self.point_group.iter().enumerate() {
                let k = self.element_index(&mat_mul(a, b)).expect("closed");
                let lhs = &self.affine_parts[k];
                let rhs: Vec<i64> = self.affine_parts[i]
                    .iter()
                    .zip(mat_vec(a, &self.affine_parts[j]))
                    .map(|(x, y)| x + y)
                    .collect();
                if lhs.iter().zip(&rhs).any(|(x, y)| (x - y).rem_euclid(q) != 0) {
                    return Err(Error::InvalidInput("affine parts violate the cocycle condition".into()));
                }
            }
        }
        Ok(())
    }

    pub fn is_symmorphic(&self) -> bool {
        self.affine_parts.iter().flatten().all(|&x| x == 0)
    }

    pub fn element_index(&self, m: &IntMat) -> Option<usize> {
        self.point_group.iter().position(|x| x == m)
    }

    /// Primes dividing the order of some torsion element.
    pub fn torsion_primes(&self) -> Vec<usize> {
        let n = self.point_group.len() * self.kernel_order;
        (2..=n).filter(|&p| n % p == 0 && (2..p).all(|q| p % q != 0)).collect()
    }

    fn translation_names(&self) -> Vec<String> {
        ["x", "y"][..self.dimension].iter().map(|s| s.to_string()).collect()
    }

    /// Generators: translations `x, y`, point generators `z, w`, kernel `c`.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names = self.translation_names();
        names.extend(["z", "w", "v", "u"][..self.point_generators.len()].iter().map(|s| s.to_string()));
        if self.kernel_order > 1 {
            names.push("c".into());
        }
        names
    }

    fn point_letter(&self, j: usize) -> i32 {
        (self.dimension + j + 1) as i32
    }

    fn kernel_letter(&self) -> Option<i32> {
        (self.kernel_order > 1).then(|| (self.dimension + self.point_generators.len() + 1) as i32)
    }

    /// Word for the translation by `t`.
    pub fn translation_word(&self, t: &[i64]) -> Word {
        let mut w = Vec::new();
        for (i, &c) in t.iter().enumerate() {
            let letter = (i + 1) as i32 * c.signum() as i32;
            w.extend(std::iter::repeat(letter).take(c.unsigned_abs() as usize));
        }
        w
    }

    /// Breadth-first words in the point generators for every point-group element.
    pub fn point_words(&self) -> Vec<Word> {
        let mut words: Vec<Option<Word>> = vec![None; self.point_group.len()];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (j, g) in self.point_generators.iter().enumerate() {
                let k = self.element_index(&mat_mul(&self.point_group[i], g)).expect("closed");
                if words[k].is_none() {
                    let mut w = words[i].clone().expect("visited");
                    w.push(self.point_letter(j));
                    words[k] = Some(w);
                    queue.push_back(k);
                }
            }
        }
        words.into_iter().map(|w| w.expect("generators generate")).collect()
    }

    /// Word for the element `(t, A)`, the translation by `t` after the point element `a`.
    pub fn element_word(&self, t: &[i64], a: usize) -> Word {
        let mut w = self.translation_word(t);
        w.extend(&self.point_words()[a]);
        w
    }

    /// A presentation of the group. Symmorphic groups only.
    pub fn presentation(&self) -> Result<Presentation> {
        if !self.is_symmorphic() {
            return Err(Error::UnsupportedGroupClass(format!("{} is not symmorphic", self.name)));
        }
        let d = self.dimension;
        let mut rels: Vec<Word> = Vec::new();
        if d == 2 {
            rels.push(vec![1, 2, -1, -2]);
        }
        let point = cayley_presentation(
            self.point_group.len(),
            &(0..self.point_generators.len())
                .map(|j| self.element_index(&self.point_generators[j]).expect("closed"))
                .collect::<Vec<_>>(),
            |a, b| self.element_index(&mat_mul(&self.point_group[a], &self.point_group[b])).expect("closed"),
        );
        let shift = d as i32;
        rels.extend(
            point
                .into_iter()
                .map(|r| r.into_iter().map(|x| x.signum() * (x.abs() + shift)).collect::<Word>()),
        );
        for (j, g) in self.point_generators.iter().enumerate() {
            let z = self.point_letter(j);
            for i in 0..d {
                let mut e = vec![0; d];
                e[i] = 1;
                // z t_i z^-1 = t^(A e_i)
                let mut r = vec![z, (i + 1) as i32, -z];
                r.extend(crate::pi1::inverse_word(&self.translation_word(&mat_vec(g, &e))));
                rels.push(r);
            }
        }
        if let Some(c) = self.kernel_letter() {
            rels.push(vec![c; self.kernel_order]);
            for x in 1..c {
                rels.push(vec![c, x, -c, -x]);
            }
        }
        Presentation::new(self.generator_names(), rels)
    }

    /// One torsion element `(t, A)` for every conjugacy class under translations,
    /// as pairs of translation vector and point-group index, followed by the
    /// kernel generator if there is one.
    pub fn torsion_representatives(&self) -> Vec<(Vec<i64>, usize)> {
        let d = self.dimension;
        let mut reps = Vec::new();
        let box_points: Vec<Vec<i64>> = if d == 1 {
            (-2..=2).map(|a| vec![a]).collect()
        } else {
            (-2..=2).flat_map(|a| (-2..=2).map(move |b| vec![a, b])).collect()
        };
        for (ai, a) in self.point_group.iter().enumerate().skip(1) {
            // (t, A) has finite order exactly when (1 + A + ... + A^(n-1)) t = 0
            let mut norm = identity(d);
            let mut power = a.clone();
            while power != identity(d) {
                for i in 0..d {
                    for j in 0..d {
                        norm[i][j] += power[i][j];
                    }
                }
                power = mat_mul(&power, a);
            }
            let i_minus_a: IntMat = (0..d)
                .map(|i| (0..d).map(|j| i64::from(i == j) - a[i][j]).collect())
                .collect();
            let mut chosen: Vec<Vec<i64>> = Vec::new();
            for t in &box_points {
                if mat_vec(&norm, t).iter().any(|&x| x != 0) {
                    continue;
                }
                let conjugate = chosen.iter().any(|s| {
                    let diff: Vec<i64> = t.iter().zip(s).map(|(x, y)| x - y).collect();
                    in_image(&i_minus_a, &diff)
                });
                if !conjugate {
                    chosen.push(t.clone());
                }
            }
            reps.extend(chosen.into_iter().map(|t| (t, ai)));
        }
        reps
    }

    /// Words generating the normal closure of the torsion elements.
    pub fn torsion_words(&self) -> Vec<Word> {
        let mut words: Vec<Word> = self
            .torsion_representatives()
            .iter()
            .map(|(t, a)| self.element_word(t, *a))
            .collect();
        if let Some(c) = self.kernel_letter() {
            words.push(vec![c]);
        }
        words
    }
}

/// Whether `v` lies in `m Z^d`, searching small preimages. Enough for the
/// catalogue, where `m` has entries in `{-2, ..., 2}`.
fn in_image(m: &IntMat, v: &[i64]) -> bool {
    let d = m.len();
    let range = -6i64..=6;
    if d == 1 {
        return range.clone().any(|s| m[0][0] * s == v[0]);
    }
    range
        .clone()
        .any(|a| range.clone().any(|b| mat_vec(m, &[a, b]) == v))
}
