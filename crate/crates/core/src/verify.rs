//! The verification battery: one item per reproduced claim, each a pure computation.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{
    coset_grothendieck, fixed_subcategory, orbit_category, quotient_category, quotient_to_orbit_category,
    standard_action,
};
use crate::comma::{check_contractible_overcategory, localize_simplex_category, overcategory, transport};
use crate::error::{Error, Result};
use crate::euclidean::{bbar_model, catalogue_group, nullification_report};
use crate::group::{finite_family, finite_group};
use crate::homology::{invariant_factors, Coefficients, HomologyResult, IntMatrix};
use crate::limits::Limits;
use crate::pi1::{edge_path_presentation, Pi1Verdict};
use crate::simplicial::fixtures::{circle, interval, point, rp2, simplex, sphere, torus, z3_presentation_complex};
use crate::simplicial::{
    homology_of_nerve, nerve_truncated, product, pushout, simplex_category, telescope, wedge, SimplicialComplex,
    SimplicialMap,
};

/// Finite groups covered by the orbit-category items.
pub const SUITE_FINITE_GROUPS: &[&str] = &["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Outcome of one item of the battery.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub claim: String,
    pub values: Value,
    pub verdict: Verdict,
    pub detail: Option<String>,
    pub wall_ms: u128,
    pub limit_ms: u128,
}

/// Parameters shared by every item.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Nerve truncation for the orbit-category items.
    pub nerve_dim: usize,
    pub refinement: usize,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            nerve_dim: 5,
            refinement: 3,
            limits: Limits::from_env(),
        }
    }
}

struct Item {
    id: &'static str,
    claim: &'static str,
    limit_secs: u64,
    run: fn(&SuiteConfig) -> Result<(Value, bool)>,
}

const ITEMS: &[Item] = &[
    Item {
        id: "A1",
        claim: "pmm: quotient of the plane is contractible (reduced homology 0, trivial pi1)",
        limit_secs: 30,
        run: a1,
    },
    Item { id: "A2", claim: "p3: quotient has the homotopy type of S2", limit_secs: 60, run: a2 },
    Item { id: "A3", claim: "p3m1: quotient is contractible", limit_secs: 60, run: a3 },
    Item { id: "A4", claim: "even subgroup of pmm: quotient is S2", limit_secs: 60, run: a4 },
    Item {
        id: "A5",
        claim: "finite groups: N(O_F) and N(Gr(R)) acyclic, O_F has a terminal object",
        limit_secs: 60,
        run: a5,
    },
    Item {
        id: "A6",
        claim: "fixed subcategories of Gr(R) have initial objects",
        limit_secs: 10,
        run: a6,
    },
    Item { id: "A7", claim: "Gr(R)/G is isomorphic to O_F", limit_secs: 10, run: a7 },
    Item {
        id: "A8",
        claim: "nerve of the simplex category has the homology of the complex",
        limit_secs: 30,
        run: a8,
    },
    Item {
        id: "A9",
        claim: "line groups: Z and ZxZ/p give circles, Dinf an interval; pi1 matches G/T",
        limit_secs: 10,
        run: a9,
    },
    Item { id: "A10", claim: "products, wedges, pushouts and telescopes", limit_secs: 20, run: a10 },
    Item { id: "A11", claim: "pmm model has the homology of Dinf x Dinf", limit_secs: 30, run: a11 },
    Item {
        id: "A12",
        claim: "every overcategory L/sigma is acyclic, independently of sigma",
        limit_secs: 120,
        run: a12,
    },
    Item {
        id: "A13",
        claim: "Smith forms, random chain complexes and edge-path abelianizations",
        limit_secs: 60,
        run: a13,
    },
];

/// Identifiers of the battery, in order.
pub fn suite_ids() -> Vec<&'static str> {
    ITEMS.iter().map(|i| i.id).collect()
}

/// Runs one item; errors become `inconclusive` (resource bounds) or `fail`.
pub fn run_item(id: &str, cfg: &SuiteConfig) -> Result<VerificationReport> {
    let item = ITEMS
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::InvalidInput(format!("no suite item `{id}`")))?;
    let start = Instant::now();
    let outcome = (item.run)(cfg);
    let wall_ms = start.elapsed().as_millis();
    let limit_ms = u128::from(item.limit_secs) * 1000;
    let (values, verdict, detail) = match outcome {
        Ok((values, true)) if wall_ms <= limit_ms => (values, Verdict::Pass, None),
        Ok((values, true)) => (values, Verdict::Fail, Some(format!("took {wall_ms} ms, limit {limit_ms} ms"))),
        Ok((values, false)) => (values, Verdict::Fail, None),
        Err(e) if e.is_resource_bound() || matches!(e, Error::Inconclusive(_)) => {
            (Value::Null, Verdict::Inconclusive, Some(e.to_string()))
        }
        Err(e) => (Value::Null, Verdict::Fail, Some(e.to_string())),
    };
    Ok(VerificationReport {
        id: item.id.to_string(),
        claim: item.claim.to_string(),
        values,
        verdict,
        detail,
        wall_ms,
        limit_ms,
    })
}

/// Runs the whole battery on up to `jobs` threads, reports in suite order.
pub fn run_suite(cfg: &SuiteConfig, jobs: usize) -> Result<Vec<VerificationReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    pool.install(|| suite_ids().par_iter().map(|id| run_item(id, cfg)).collect())
}

fn homology(x: &SimplicialComplex) -> Result<HomologyResult> {
    x.homology(Coefficients::Integers)
}

fn betti_through(h: &HomologyResult, top: usize) -> Vec<usize> {
    (0..=top).map(|n| h.betti.get(n).copied().unwrap_or(0)).collect()
}

fn torsion_free(h: &HomologyResult) -> bool {
    h.torsion.iter().all(Vec::is_empty)
}

fn wallpaper_item(name: &str, cfg: &SuiteConfig, betti: [usize; 3]) -> Result<(Value, bool)> {
    let spec = catalogue_group(name)?;
    let r = nullification_report(&spec, cfg.refinement, 2, &cfg.limits)?;
    let pi1_trivial = r.pi1.as_ref().is_some_and(|p| p.model_order == Some(1) && p.verdict == Pi1Verdict::Match);
    let got = betti_through(&r.homology, 2);
    let ok = got == betti && torsion_free(&r.homology) && pi1_trivial;
    Ok((
        json!({
            "group": name,
            "betti": got,
            "pi1_model_order": r.pi1.as_ref().and_then(|p| p.model_order),
            "pi1_quotient_order": r.pi1.as_ref().and_then(|p| p.quotient_order),
            "verdict": r.verdict,
        }),
        ok,
    ))
}

fn a1(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    wallpaper_item("pmm", cfg, [1, 0, 0])
}

fn a2(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    wallpaper_item("p3", cfg, [1, 0, 1])
}

fn a3(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    wallpaper_item("p3m1", cfg, [1, 0, 0])
}

fn a4(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    wallpaper_item("H_even", cfg, [1, 0, 1])
}

fn a5(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    let limits = &cfg.limits;
    let d = cfg.nerve_dim;
    let mut ok = true;
    let mut rows = Vec::new();
    for name in SUITE_FINITE_GROUPS {
        let g = finite_group(name)?;
        let f = finite_family(&g, limits)?;
        let oc = orbit_category(&g, &f, limits)?;
        let gr = coset_grothendieck(&g, &oc, limits)?;
        let ho = homology_of_nerve(&oc.category, d, Coefficients::Integers, limits)?;
        let hg = homology_of_nerve(&gr.category, d, Coefficients::Integers, limits)?;
        let terminal = oc.category.has_terminal_object();
        let good = ho.is_reduced_acyclic_through(d - 1) && hg.is_reduced_acyclic_through(d - 1) && terminal.is_some();
        ok &= good;
        rows.push(json!({
            "group": name,
            "orbit_category": ho.to_json(),
            "grothendieck": hg.to_json(),
            "terminal_object": terminal.map(|t| oc.category.object_label(t).to_string()),
        }));
    }
    Ok((json!({ "truncation": d, "groups": rows }), ok))
}

fn a6(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    let limits = &cfg.limits;
    let mut ok = true;
    let mut rows = Vec::new();
    for name in SUITE_FINITE_GROUPS {
        let g = finite_group(name)?;
        let f = finite_family(&g, limits)?;
        let oc = orbit_category(&g, &f, limits)?;
        let gr = coset_grothendieck(&g, &oc, limits)?;
        let action = standard_action(&g, &oc, &gr);
        let mut with_initial = 0;
        for k in &oc.subgroups {
            let (fixed, _) = fixed_subcategory(&gr.category, &action, k);
            if fixed.has_initial_object().is_some() {
                with_initial += 1;
            }
        }
        ok &= with_initial == oc.subgroups.len();
        rows.push(json!({ "group": name, "subgroups": oc.subgroups.len(), "with_initial_object": with_initial }));
    }
    Ok((json!(rows), ok))
}

fn a7(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    let limits = &cfg.limits;
    let mut ok = true;
    let mut rows = Vec::new();
    for name in SUITE_FINITE_GROUPS {
        let g = finite_group(name)?;
        let f = finite_family(&g, limits)?;
        let oc = orbit_category(&g, &f, limits)?;
        let gr = coset_grothendieck(&g, &oc, limits)?;
        let action = standard_action(&g, &oc, &gr);
        let q = quotient_category(&gr.category, &action)?;
        let iso = quotient_to_orbit_category(&oc, &gr, &q).is_ok();
        ok &= iso;
        rows.push(json!({
            "group": name,
            "quotient": [q.category.num_objects(), q.category.num_morphisms()],
            "orbit_category": [oc.category.num_objects(), oc.category.num_morphisms()],
            "isomorphic": iso,
        }));
    }
    Ok((json!(rows), ok))
}

fn a8(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    let mut ok = true;
    let mut rows = Vec::new();
    for (name, x) in [
        ("interval", interval()),
        ("circle", circle()),
        ("sphere", sphere()),
        ("rp2", rp2()),
        ("torus", torus(3)),
    ] {
        let c = simplex_category(&x, cfg.limits.max_morphisms)?;
        let hn = homology_of_nerve(&c, 3, Coefficients::Integers, &cfg.limits)?;
        let hx = homology(&x)?;
        let (a, b) = (pad(&hn, 2), pad(&hx, 2));
        ok &= a == b;
        rows.push(json!({ "complex": name, "nerve": a.to_json(), "complex_homology": b.to_json() }));
    }
    Ok((json!(rows), ok))
}

fn pad(h: &HomologyResult, top: usize) -> HomologyResult {
    let mut h = h.clone();
    while h.betti.len() <= top {
        h.betti.push(0);
        h.torsion.push(Vec::new());
    }
    h.truncated(top)
}

fn a9(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    let mut ok = true;
    let mut rows = Vec::new();
    for (name, betti) in [("Z", [1, 1]), ("Dinf", [1, 0]), ("ZxZp(3)", [1, 1]), ("ZxZp(5)", [1, 1])] {
        let spec = catalogue_group(name)?;
        let r = nullification_report(&spec, cfg.refinement, 1, &cfg.limits)?;
        let got = betti_through(&r.homology, 1);
        let pi1_ok = r.pi1.as_ref().is_some_and(|p| p.verdict == Pi1Verdict::Match && p.certified);
        ok &= got == betti && torsion_free(&r.homology) && pi1_ok && r.consistent;
        rows.push(json!({ "group": name, "betti": got, "pi1_certified": pi1_ok, "verdict": r.verdict }));
    }
    Ok((json!(rows), ok))
}

fn a10(_cfg: &SuiteConfig) -> Result<(Value, bool)> {
    let two_points = SimplicialComplex::from_facets(2, &[vec![0], vec![1]])?;
    let ends = SimplicialMap::new(vec![0, 1]);
    let cases: Vec<(&str, SimplicialComplex, Vec<usize>, usize)> = vec![
        ("interval x interval", product(&interval(), &interval()), vec![1, 0, 0], 2),
        ("S2 x S2", product(&sphere(), &sphere()), vec![1, 0, 2, 0, 1], 4),
        ("S2 v point", wedge(&sphere(), 0, &point(), 0)?, vec![1, 0, 1], 2),
        ("interval +_{2 points} interval", pushout(&two_points, &interval(), &ends, &interval(), &ends)?, vec![1, 1], 1),
        (
            "telescope of S1",
            telescope(
                &[circle(), circle(), circle()],
                &[SimplicialMap::identity(3), SimplicialMap::identity(3)],
            )?,
            vec![1, 1],
            1,
        ),
    ];
    let mut ok = true;
    let mut rows = Vec::new();
    for (name, x, expected, top) in cases {
        let h = pad(&homology(&x)?, top);
        ok &= h.betti == expected && torsion_free(&h);
        rows.push(json!({ "case": name, "homology": h.to_json() }));
    }
    Ok((json!(rows), ok))
}

fn a11(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    let d = bbar_model(&catalogue_group("Dinf")?, cfg.refinement)?.complex;
    let pmm = bbar_model(&catalogue_group("pmm")?, cfg.refinement)?.complex;
    let a = pad(&homology(&product(&d, &d))?, 2);
    let b = pad(&homology(&pmm)?, 2);
    Ok((json!({ "product": a.to_json(), "pmm": b.to_json() }), a == b))
}

/// Acyclicity of every overcategory, plus equal cell counts and homology across
/// base simplices and a round trip through the transport functors.
pub fn overcategory_battery(x: &SimplicialComplex, d: usize, limits: &Limits) -> Result<(Value, bool, bool)> {
    let mut acyclic = true;
    let mut first: Option<(Vec<usize>, HomologyResult)> = None;
    let mut independent = true;
    let mut failures = Vec::new();
    for sigma in 0..x.total_count() {
        let r = check_contractible_overcategory(x, sigma, d, limits)?;
        if !(r.connected && r.acyclic) {
            acyclic = false;
            if failures.len() < 3 {
                failures.push(json!({ "sigma": r.sigma_label, "homology": r.homology.to_json() }));
            }
        }
        match &first {
            None => first = Some((r.cell_counts.clone(), r.homology.clone())),
            Some((c, h)) => independent &= *c == r.cell_counts && *h == r.homology,
        }
    }
    let l = localize_simplex_category(x, limits.max_order, limits)?;
    let last = x.total_count() - 1;
    let a = overcategory(&l, 0, limits)?;
    let b = overcategory(&l, last, limits)?;
    for g in l.hom(0, last) {
        let f = transport(&l, &a, &b, &g)?;
        f.check(&a.category, &b.category)?;
        let back = transport(&l, &b, &a, &l.inverse(&g))?;
        let round = f.then(&back);
        independent &= round.objects.iter().enumerate().all(|(i, &o)| i == o)
            && round.morphisms.iter().enumerate().all(|(i, &m)| i == m);
    }
    let (counts, h) = first.expect("nonempty complex");
    let sample = nerve_truncated(&a.category, d, limits)?.counts();
    independent &= sample == counts;
    Ok((
        json!({
            "simplices": x.total_count(),
            "pi1_order": l.order(),
            "cell_counts": counts,
            "homology": h.to_json(),
            "failures": failures,
        }),
        acyclic,
        independent,
    ))
}

fn a12(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    let mut ok = true;
    let mut rows = Vec::new();
    for (name, x) in [("2-simplex", simplex(2)), ("rp2", rp2()), ("z3", z3_presentation_complex())] {
        let (values, acyclic, independent) = overcategory_battery(&x, 4, &cfg.limits)?;
        ok &= acyclic && independent;
        rows.push(json!({ "complex": name, "acyclic": acyclic, "sigma_independent": independent, "data": values }));
    }
    let l = localize_simplex_category(&rp2(), cfg.limits.max_order, &cfg.limits)?;
    l.check_associativity(200, cfg.seed)?;
    Ok((json!(rows), ok))
}

/// Invariant factors from gcds of minors, for small matrices.
pub fn determinantal_invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let (r, c) = (m.rows(), m.cols());
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let mut sub = IntMatrix::zeros(k, k);
                for (i, &ri) in rows.iter().enumerate() {
                    for (j, &cj) in cols.iter().enumerate() {
                        sub.set(i, j, m.get(ri, cj).clone());
                    }
                }
                g = g.gcd(&sub.determinant());
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| (&w[1] / &w[0]).abs()).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// A random complex on `n` vertices: the downward closure of a few random facets.
pub fn random_complex(rng: &mut impl Rng, n: usize) -> Result<SimplicialComplex> {
    let count = rng.gen_range(1..=6);
    let facets: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            let mut s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.45)).collect();
            if s.is_empty() {
                s.push(rng.gen_range(0..n));
            }
            s
        })
        .collect();
    SimplicialComplex::from_facets(n, &facets)
}

fn a13(cfg: &SuiteConfig) -> Result<(Value, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut snf_ok = 0;
    for _ in 0..500 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
        let m = IntMatrix::from_rows(&rows);
        if invariant_factors(&m) == determinantal_invariant_factors(&m) {
            snf_ok += 1;
        }
    }
    let mut complexes_ok = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=7);
        let x = random_complex(&mut rng, n)?;
        let cc = x.chain_complex();
        let h = homology(&x)?;
        let h2 = x.homology(Coefficients::Prime(2))?;
        let chi: i64 = h.betti.iter().enumerate().map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        let mod2_bound = h.betti.iter().zip(&h2.betti).all(|(z, f)| f >= z);
        if cc.check_boundary_condition().is_ok() && chi == x.euler_characteristic() && mod2_bound {
            complexes_ok += 1;
        }
    }
    let mut fixtures_ok = 0;
    let fixtures = [interval(), circle(), sphere(), rp2(), torus(3), z3_presentation_complex()];
    for x in &fixtures {
        let ab = edge_path_presentation(x, 0)?.abelianization();
        let h = homology(x)?;
        if h.betti.get(1).copied().unwrap_or(0) == ab.free_rank && h.torsion.get(1).cloned().unwrap_or_default() == ab.torsion {
            fixtures_ok += 1;
        }
    }
    let ok = snf_ok == 500 && complexes_ok == 200 && fixtures_ok == fixtures.len();
    Ok((
        json!({
            "seed": cfg.seed,
            "snf_agree": snf_ok,
            "chain_complexes_ok": complexes_ok,
            "fixtures_ok": fixtures_ok,
        }),
        ok,
    ))
}
