//! Tietze simplification by generator elimination.

use super::presentation::{cyclic_reduce, free_reduce, inverse_word, Presentation, Word};

/// A simplified presentation and, for every original generator, a word in the
/// surviving generators equal to it.
#[derive(Clone, Debug)]
pub struct TietzeResult {
    pub presentation: Presentation,
    pub images: Vec<Word>,
    pub moves: usize,
}

/// Repeatedly removes a generator that occurs exactly once in some relator,
/// substituting its solution into every other relator. The cheapest available
/// elimination is taken first; at most `budget` eliminations are made.
/// Duplicate and trivial relators are dropped along the way.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    tietze_with_images(p, budget).presentation
}

pub fn tietze_with_images(p: &Presentation, budget: usize) -> TietzeResult {
    let n = p.num_generators();
    // words over original indices; eliminated generators get a substitution
    let mut subst: Vec<Option<Word>> = vec![None; n];
    let mut rels: Vec<Word> = p.relators.iter().map(|r| cyclic_reduce(r)).filter(|r| !r.is_empty()).collect();
    dedup_relators(&mut rels);
    let mut moves = 0;
    while moves < budget {
        let mut occurrences = vec![0usize; n];
        for r in &rels {
            for &x in r {
                occurrences[(x.unsigned_abs() - 1) as usize] += 1;
            }
        }
        // (cost, relator, position)
        let mut best: Option<(usize, usize, usize)> = None;
        for (ri, r) in rels.iter().enumerate() {
            let mut letters: Vec<u32> = r.iter().map(|x| x.unsigned_abs()).collect();
            letters.sort_unstable();
            let once = |a: u32| {
                let lo = letters.partition_point(|&y| y < a);
                letters.get(lo + 1) != Some(&a)
            };
            for (pos, &x) in r.iter().enumerate() {
                let g = (x.unsigned_abs() - 1) as usize;
                if once(x.unsigned_abs()) {
                    let cost = (r.len() - 1) * (occurrences[g] - 1);
                    if best.map_or(true, |(c, _, _)| cost < c) {
                        best = Some((cost, ri, pos));
                    }
                }
            }
        }
        let Some((_, ri, pos)) = best else { break };
        let r = rels.swap_remove(ri);
        let x = r[pos];
        let g = (x.unsigned_abs() - 1) as usize;
        // r = u x v = 1  =>  x = u^-1 v^-1, so g = (u^-1 v^-1)^sign
        let u = &r[..pos];
        let v = &r[pos + 1..];
        let mut sol = inverse_word(u);
        sol.extend(inverse_word(v));
        let sol = if x > 0 { free_reduce(&sol) } else { inverse_word(&free_reduce(&sol)) };
        for rel in rels.iter_mut() {
            *rel = cyclic_reduce(&substitute(rel, g, &sol));
        }
        for s in subst.iter_mut().flatten() {
            *s = free_reduce(&substitute(s, g, &sol));
        }
        subst[g] = Some(sol);
        rels.retain(|r| !r.is_empty());
        dedup_relators(&mut rels);
        moves += 1;
    }
    let survivors: Vec<usize> = (0..n).filter(|&g| subst[g].is_none()).collect();
    let mut new_index = vec![0i32; n];
    for (k, &g) in survivors.iter().enumerate() {
        new_index[g] = k as i32 + 1;
    }
    let rename = |w: &[i32]| -> Word {
        w.iter()
            .map(|&x| {
                let k = new_index[(x.unsigned_abs() - 1) as usize];
                debug_assert!(k != 0, "eliminated generator left in a word");
                k * x.signum()
            })
            .collect()
    };
    let images = (0..n)
        .map(|g| match &subst[g] {
            Some(w) => rename(w),
            None => vec![new_index[g]],
        })
        .collect();
    let presentation = Presentation {
        generators: survivors.iter().map(|&g| p.generators[g].clone()).collect(),
        relators: rels.iter().map(|r| rename(r)).collect(),
    };
    TietzeResult {
        presentation,
        images,
        moves,
    }
}

fn substitute(w: &[i32], g: usize, sol: &[i32]) -> Word {
    let inv = inverse_word(sol);
    let mut out = Vec::with_capacity(w.len());
    for &x in w {
        if (x.unsigned_abs() - 1) as usize == g {
            out.extend_from_slice(if x > 0 { sol } else { &inv });
        } else {
            out.push(x);
        }
    }
    out
}

/// Drops relators equal, up to cyclic rotation and inversion, to an earlier one.
fn dedup_relators(rels: &mut Vec<Word>) {
    let mut seen = std::collections::HashSet::new();
    rels.retain(|r| seen.insert(canonical(r)));
}

fn canonical(r: &[i32]) -> Word {
    let inv = inverse_word(r);
    let mut best: Word = r.to_vec();
    for w in [r, inv.as_slice()] {
        for k in 0..w.len() {
            let rot: Word = w[k..].iter().chain(&w[..k]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}
