use std::collections::VecDeque;

use super::perm_group::PermGroup;
use crate::error::{Error, Result};
use crate::euclidean::EuclideanGroupSpec;
use crate::pi1::{free_reduce, inverse_word, Presentation, Word};

/// Relators presenting a finite group on the given generators.
///
/// Elements are indices `0..order` with `0` the identity. Every element gets a
/// breadth-first word `w_g`; each Cayley-graph edge `g -> g s` contributes
/// `w_g s w_{gs}^-1`. Letters are one-based generator positions.
pub fn cayley_presentation(order: usize, gens: &[usize], mul: impl Fn(usize, usize) -> usize) -> Vec<Word> {
    let mut words: Vec<Option<Word>> = vec![None; order];
    words[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0usize]);
    while let Some(g) = queue.pop_front() {
        for (j, &s) in gens.iter().enumerate() {
            let h = mul(g, s);
            if words[h].is_none() {
                let mut w = words[g].clone().expect("visited");
                w.push(j as i32 + 1);
                words[h] = Some(w);
                queue.push_back(h);
            }
        }
    }
    let mut rels = Vec::new();
    for g in 0..order {
        let Some(wg) = &words[g] else { continue };
        for (j, &s) in gens.iter().enumerate() {
            let wh = words[mul(g, s)].as_ref().expect("closed under generators");
            let mut r = wg.clone();
            r.push(j as i32 + 1);
            r.extend(inverse_word(wh));
            let r = free_reduce(&r);
            if !r.is_empty() && !rels.contains(&r) {
                rels.push(r);
            }
        }
    }
    rels
}

/// A group whose torsion subgroup can be computed.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Finite(PermGroup),
    Euclidean(EuclideanGroupSpec),
    Presented(Presentation),
}

impl GroupSpec {
    pub fn name(&self) -> String {
        match self {
            GroupSpec::Finite(g) => format!("finite group of order {}", g.order()),
            GroupSpec::Euclidean(s) => s.name.clone(),
            GroupSpec::Presented(p) => p.to_string(),
        }
    }
}

/// The normal closure `T` of the torsion elements, given by generating words,
/// and the quotient `G/T` presented by adjoining them as relators.
#[derive(Clone, Debug)]
pub struct TorsionQuotient {
    pub group: Presentation,
    pub torsion_generators: Vec<Word>,
    pub quotient: Presentation,
}

/// Presentation of a permutation group on its stored generators, named `a`, `b`, ...
pub fn perm_group_presentation(g: &PermGroup) -> Result<Presentation> {
    let gens = g.generator_indices();
    let names: Vec<String> = (0..gens.len())
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("g{i}")
            }
        })
        .collect();
    Presentation::new(names, cayley_presentation(g.order(), &gens, |a, b| g.mul(a, b)))
}

/// Torsion-generated normal subgroup and the corresponding quotient.
pub fn torsion_generated_subgroup(g: &GroupSpec) -> Result<TorsionQuotient> {
    let (group, torsion_generators) = match g {
        GroupSpec::Finite(pg) => {
            let p = perm_group_presentation(pg)?;
            let words = (1..=p.num_generators() as i32).map(|x| vec![x]).collect();
            (p, words)
        }
        GroupSpec::Euclidean(spec) => (spec.presentation()?, spec.torsion_words()),
        GroupSpec::Presented(p) => {
            return Err(Error::UnsupportedGroupClass(format!(
                "torsion elements of the presented group `{p}` are not decidable here"
            )))
        }
    };
    let quotient = group.with_relators(&torsion_generators)?;
    Ok(TorsionQuotient {
        group,
        torsion_generators,
        quotient,
    })
}
