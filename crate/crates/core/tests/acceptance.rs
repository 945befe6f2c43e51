//! Acceptance criteria A1–A13. Runs without the libtest harness so every
//! criterion prints one PASS/FAIL line; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use properclass::category::{
    coset_grothendieck, fixed_subcategory, orbit_category, quotient_category, quotient_to_orbit_category,
    standard_action, CosetGrothendieck, OrbitCategory,
};
use properclass::comma::{check_contractible_overcategory, localize_simplex_category};
use properclass::euclidean::{bbar_model, catalogue_group};
use properclass::group::{finite_family, finite_group, torsion_generated_subgroup, GroupSpec, PermGroup};
use properclass::homology::{invariant_factors, Coefficients, HomologyResult, IntMatrix};
use properclass::pi1::{edge_path_presentation, pi1_matches_torsion_quotient, Pi1Verdict};
use properclass::simplicial::fixtures::*;
use properclass::simplicial::{homology_of_nerve, product, pushout, simplex_category, telescope, wedge};
use properclass::simplicial::{SimplicialComplex, SimplicialMap};
use properclass::Limits;

const REFINEMENT: usize = 3;
const NERVE_DIM: usize = 5;
const A5_GROUPS: [&str; 6] = ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4"];
const PRIMES: [u64; 3] = [2, 3, LARGE_PRIME];

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn lib<T>(r: properclass::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn z_homology(x: &SimplicialComplex) -> Result<HomologyResult, String> {
    lib(x.homology(Coefficients::Integers))
}

/// Library Z-homology agrees with the mod-p oracle and with the expected free
/// Betti numbers and torsion-free groups in every degree.
fn expect_homology(label: &str, x: &SimplicialComplex, betti: &[usize]) -> Result<(), String> {
    let h = z_homology(x)?;
    let mut got = h.betti.clone();
    got.resize(betti.len().max(got.len()), 0);
    let mut want = betti.to_vec();
    want.resize(got.len(), 0);
    ensure(got == want, format!("{label}: library betti {:?}, expected {betti:?}", h.betti))?;
    ensure(h.torsion.iter().all(Vec::is_empty), format!("{label}: unexpected torsion {h}"))?;
    for p in PRIMES {
        let mut o = betti_mod_p(x, p);
        o.resize(want.len(), 0);
        ensure(o == want, format!("{label}: oracle betti mod {p} {o:?}, expected {betti:?}"))?;
    }
    Ok(())
}

fn model(name: &str) -> Result<SimplicialComplex, String> {
    let spec = lib(catalogue_group(name))?;
    Ok(lib(bbar_model(&spec, REFINEMENT))?.complex)
}

fn wallpaper(name: &str, betti: &[usize]) -> Result<String, String> {
    let x = model(name)?;
    expect_homology(name, &x, betti)?;
    let r = reduce_pi1(&x);
    ensure(r.is_trivial(), format!("{name}: pi1 not certified trivial ({} generators left)", r.generators))?;
    let spec = lib(catalogue_group(name))?;
    let cmp = lib(pi1_matches_torsion_quotient(&GroupSpec::Euclidean(spec), &x, &Limits::default()))?;
    ensure(cmp.model_order == Some(1), format!("{name}: Todd–Coxeter order {:?}", cmp.model_order))?;
    Ok(format!("{} simplices, betti {betti:?}, pi1 = 1", x.total_count()))
}

fn a1() -> Result<String, String> {
    wallpaper("pmm", &[1, 0, 0])
}

fn a2() -> Result<String, String> {
    wallpaper("p3", &[1, 0, 1])
}

fn a3() -> Result<String, String> {
    wallpaper("p3m1", &[1, 0, 0])
}

fn a4() -> Result<String, String> {
    let x = model("H_even")?;
    expect_homology("H_even", &x, &[1, 0, 1])?;
    Ok(format!("{} simplices, H1 = 0, H2 = Z", x.total_count()))
}

fn setup(name: &str) -> Result<(PermGroup, OrbitCategory, CosetGrothendieck), String> {
    let limits = Limits::default();
    let g = lib(finite_group(name))?;
    let f = lib(finite_family(&g, &limits))?;
    let oc = lib(orbit_category(&g, &f, &limits))?;
    let gr = lib(coset_grothendieck(&g, &oc, &limits))?;
    Ok((g, oc, gr))
}

/// Every subgroup, by closing all subsets (fine up to order 8). `O_F` has one
/// object per subgroup, not per conjugacy class.
fn brute_subgroups(g: &PermGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|els| els.iter().all(|&a| els.iter().all(|&b| els.contains(&g.mul(a, b)))))
        .collect()
}

fn conj(g: &PermGroup, x: usize, h: &[usize]) -> Vec<usize> {
    let mut c: Vec<usize> = h.iter().map(|&y| g.mul(g.mul(g.inv(x), y), x)).collect();
    c.sort_unstable();
    c
}

/// `|{x : x^-1 K x ⊆ H}|`.
fn subconjugators(g: &PermGroup, k: &[usize], h: &[usize]) -> usize {
    (0..g.order()).filter(|&x| conj(g, x, k).iter().all(|y| h.contains(y))).count()
}

fn a5() -> Result<String, String> {
    let limits = Limits::default();
    let mut summary = Vec::new();
    for name in A5_GROUPS {
        let (g, oc, gr) = setup(name)?;
        let subs = brute_subgroups(&g);
        ensure(oc.category.num_objects() == subs.len(), format!("{name}: O_F objects"))?;
        let homs: usize = subs.iter().flat_map(|k| subs.iter().map(move |h| (k, h))).map(|(k, h)| subconjugators(&g, k, h) / h.len()).sum();
        ensure(oc.category.num_morphisms() == homs, format!("{name}: O_F has {} morphisms, oracle {homs}", oc.category.num_morphisms()))?;
        for (label, c) in [("O_F", &oc.category), ("Gr(R)", &gr.category)] {
            let t = (0..c.num_objects())
                .find(|&t| (0..c.num_objects()).all(|o| c.hom(o, t).len() == 1))
                .ok_or_else(|| format!("{name}: {label} has no terminal object"))?;
            if label == "O_F" {
                ensure(oc.category.has_terminal_object().is_some(), format!("{name}: library misses the terminal object"))?;
            }
            let h = lib(homology_of_nerve(c, NERVE_DIM, Coefficients::Integers, &limits))?;
            ensure(h.is_reduced_acyclic_through(NERVE_DIM - 1), format!("{name}: {label} nerve homology {h}"))?;
            ensure(cone_contraction_holds(c, t, NERVE_DIM - 1), format!("{name}: {label} cone contraction fails"))?;
        }
        let cells = lib(properclass::simplicial::nerve_truncated(&gr.category, 3, &limits))?.counts();
        let oracle: Vec<usize> = nerve_cells(&gr.category, 3).iter().map(Vec::len).collect();
        ensure(cells == oracle, format!("{name}: nerve cells {cells:?}, oracle {oracle:?}"))?;
        summary.push(format!("{name}:{}", oc.category.num_objects()));
    }
    Ok(format!("acyclic through degree {} with terminal objects ({})", NERVE_DIM - 1, summary.join(" ")))
}

fn a6() -> Result<String, String> {
    let mut checked = 0;
    for name in A5_GROUPS {
        let (g, oc, gr) = setup(name)?;
        let action = standard_action(&g, &oc, &gr);
        let subs = brute_subgroups(&g);
        for k in brute_subgroups(&g) {
            let sub = properclass::group::Subgroup::from_elements(&g, k.clone()).map_err(|e| e.to_string())?;
            let (fixed, _) = fixed_subcategory(&gr.category, &action, &sub);
            let expected: usize = subs.iter().map(|h| subconjugators(&g, &k, h) / h.len()).sum();
            ensure(fixed.num_objects() == expected, format!("{name}: {} fixed objects, oracle {expected}", fixed.num_objects()))?;
            let initial = (0..fixed.num_objects()).any(|i| (0..fixed.num_objects()).all(|o| fixed.hom(i, o).len() == 1));
            ensure(initial, format!("{name}: fixed points of {k:?} have no initial object"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} subgroups, all with initial objects"))
}

fn a7() -> Result<String, String> {
    for name in A5_GROUPS {
        let (g, oc, gr) = setup(name)?;
        let action = standard_action(&g, &oc, &gr);
        let q = lib(quotient_category(&gr.category, &action))?;
        let phi = lib(quotient_to_orbit_category(&oc, &gr, &q))?;
        let (qc, o) = (&q.category, &oc.category);
        let bij = |v: &[usize], n: usize| {
            let mut s = v.to_vec();
            s.sort_unstable();
            s == (0..n).collect::<Vec<_>>()
        };
        ensure(bij(&phi.objects, o.num_objects()) && bij(&phi.morphisms, o.num_morphisms()), format!("{name}: not bijective"))?;
        for f in 0..qc.num_morphisms() {
            let pf = phi.morphisms[f];
            ensure(o.source(pf) == phi.objects[qc.source(f)] && o.target(pf) == phi.objects[qc.target(f)], format!("{name}: endpoints"))?;
            for &h in qc.out_of(qc.target(f)) {
                let comp = qc.then(f, h).expect("composable");
                ensure(o.then(pf, phi.morphisms[h]) == Some(phi.morphisms[comp]), format!("{name}: composition"))?;
            }
        }
        ensure(qc.num_objects() == brute_subgroups(&g).len(), format!("{name}: orbit count"))?;
    }
    Ok("Gr(R)/G ≅ O_F for all six groups".into())
}

fn a8() -> Result<String, String> {
    let limits = Limits::default();
    for (name, x) in [("interval", interval()), ("circle", circle()), ("S2", sphere()), ("RP2", rp2()), ("torus", torus(3))] {
        let gamma = lib(simplex_category(&x, limits.max_morphisms))?;
        let hn = lib(homology_of_nerve(&gamma, 3, Coefficients::Integers, &limits))?;
        let hx = z_homology(&x)?;
        for d in 0..=2 {
            let get = |h: &HomologyResult| (h.betti.get(d).copied().unwrap_or(0), h.torsion.get(d).cloned().unwrap_or_default());
            ensure(get(&hn) == get(&hx), format!("{name}: degree {d} nerve {hn} vs complex {hx}"))?;
        }
        for p in PRIMES {
            let mut a = nerve_chains(&gamma, 3).betti_mod_p(p, 3);
            let mut b = betti_mod_p(&x, p);
            a.resize(3, 0);
            b.resize(3, 0);
            ensure(a == b, format!("{name}: mod {p} oracle {a:?} vs {b:?}"))?;
        }
    }
    Ok("five fixtures agree in degrees 0–2".into())
}

fn a9() -> Result<String, String> {
    let limits = Limits::default();
    expect_homology("Z", &model("Z")?, &[1, 1])?;
    let dinf = model("Dinf")?;
    expect_homology("Dinf", &dinf, &[1, 0])?;
    ensure(reduce_pi1(&dinf).is_trivial(), "Dinf: pi1 not trivial")?;
    for p in [3, 5] {
        let name = format!("ZxZp({p})");
        let x = model(&name)?;
        expect_homology(&name, &x, &[1, 1])?;
        ensure(reduce_pi1(&x).is_free_of_rank(1), format!("{name}: pi1 not free of rank one"))?;
        let spec = lib(catalogue_group(&name))?;
        let tq = lib(torsion_generated_subgroup(&GroupSpec::Euclidean(spec.clone())))?;
        let ab = tq.quotient.abelianization();
        ensure(ab.free_rank == 1 && ab.torsion.is_empty(), format!("{name}: G/T abelianizes to {ab}"))?;
        let cmp = lib(pi1_matches_torsion_quotient(&GroupSpec::Euclidean(spec), &x, &limits))?;
        ensure(cmp.verdict == Pi1Verdict::Match && cmp.certified, format!("{name}: comparison {:?}", cmp.verdict))?;
    }
    Ok("Z, Dinf, ZxZ/3, ZxZ/5 as predicted".into())
}

fn a10() -> Result<String, String> {
    expect_homology("I x I", &product(&interval(), &interval()), &[1])?;
    expect_homology("S2 x S2", &product(&sphere(), &sphere()), &[1, 0, 2, 0, 1])?;
    expect_homology("S2 v pt", &lib(wedge(&sphere(), 0, &point(), 0))?, &[1, 0, 1])?;
    let ends = lib(SimplicialComplex::from_facets(2, &[vec![0], vec![1]]))?;
    let both = SimplicialMap::new(vec![0, 1]);
    expect_homology("I u I", &lib(pushout(&ends, &interval(), &both, &interval(), &both))?, &[1, 1])?;
    let x = circle();
    let maps = vec![SimplicialMap::identity(x.num_vertices()); 2];
    expect_homology("tel S1", &lib(telescope(&[x.clone(), x.clone(), x], &maps))?, &[1, 1])?;
    Ok("product, wedge, pushout and telescope".into())
}

fn a11() -> Result<String, String> {
    let pmm = model("pmm")?;
    let dd = product(&model("Dinf")?, &model("Dinf")?);
    let (a, b) = (z_homology(&pmm)?, z_homology(&dd)?);
    let trim = |h: &HomologyResult| {
        let mut v: Vec<(usize, Vec<BigInt>)> = h.betti.iter().cloned().zip(h.torsion.iter().cloned()).collect();
        while v.last().is_some_and(|(b, t)| *b == 0 && t.is_empty()) {
            v.pop();
        }
        v
    };
    ensure(trim(&a) == trim(&b), format!("pmm {a} vs Dinf x Dinf {b}"))?;
    for p in PRIMES {
        let mut x = betti_mod_p(&pmm, p);
        let mut y = betti_mod_p(&dd, p);
        let n = x.len().max(y.len());
        x.resize(n, 0);
        y.resize(n, 0);
        ensure(x == y, format!("mod {p}: {x:?} vs {y:?}"))?;
    }
    Ok(format!("both {a}"))
}

fn a12() -> Result<String, String> {
    let limits = Limits::default();
    let mut failures = Vec::new();
    for (name, x) in [("2-simplex", simplex(2)), ("RP2", rp2()), ("Z/3 complex", z3_presentation_complex())] {
        let l = lib(localize_simplex_category(&x, limits.max_order, &limits))?;
        let mut reference: Option<(Vec<usize>, Vec<usize>)> = None;
        for sigma in 0..x.total_count() {
            let r = lib(check_contractible_overcategory(&x, sigma, 4, &limits))?;
            let o = lib(properclass::comma::overcategory(&l, sigma, &limits))?;
            let chains = nerve_chains(&o.category, 4);
            let oracle: Vec<Vec<usize>> = PRIMES.iter().map(|&p| chains.betti_mod_p(p, 4)).collect();
            let counts = chains.dims.clone();
            ensure(counts == r.cell_counts, format!("{name}: cells {:?} vs oracle {counts:?}", r.cell_counts))?;
            let acyclic = oracle.iter().all(|b| b == &[1, 0, 0, 0]) && r.acyclic;
            if !acyclic {
                failures.push(format!("{name} σ={} betti {:?} (library {})", r.sigma_label, oracle[2], r.homology));
                break;
            }
            match &reference {
                None => reference = Some((counts, oracle[2].clone())),
                Some(rf) => ensure(rf == &(counts, oracle[2].clone()), format!("{name}: depends on σ"))?,
            }
        }
    }
    ensure(failures.is_empty(), failures.join("; "))?;
    Ok("all overcategories acyclic".into())
}

fn a13() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let got: Vec<BigInt> = invariant_factors(&IntMatrix::from_rows(&rows));
        let want: Vec<BigInt> = naive_invariant_factors(&rows).into_iter().map(BigInt::from).collect();
        ensure(got == want, format!("SNF of {rows:?}: {got:?} vs {want:?}"))?;
    }
    for _ in 0..200 {
        let n = rng.gen_range(2..=7);
        let facets: Vec<Vec<usize>> = (0..rng.gen_range(1..=6))
            .map(|_| {
                let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.45)).collect();
                if s.is_empty() { vec![rng.gen_range(0..n)] } else { s }
            })
            .collect();
        let x = lib(SimplicialComplex::from_facets(n, &facets))?;
        let chains = simplicial_chains(&x);
        ensure(chains.boundary_squares_to_zero(), "∂∂ ≠ 0 on the oracle chains")?;
        ensure(lib(x.chain_complex().check_boundary_condition()).is_ok(), "library ∂∂ ≠ 0")?;
        let h = z_homology(&x)?;
        // rank-nullity over Q: b_n = c_n - rk ∂_n - rk ∂_{n+1}
        let mut q = chains.betti_mod_p(LARGE_PRIME, x.dim() + 1);
        let mut b = h.betti.clone();
        q.resize(b.len().max(q.len()), 0);
        b.resize(q.len(), 0);
        ensure(b == q, format!("betti {b:?} vs rank-nullity {q:?} on {facets:?}"))?;
        let f2 = lib(x.homology(Coefficients::Prime(2)))?;
        ensure(f2.betti[..] == chains.betti_mod_p(2, x.dim() + 1)[..], "mod 2 betti")?;
    }
    for (name, x) in [("interval", interval()), ("circle", circle()), ("S2", sphere()), ("RP2", rp2()), ("torus", torus(3)), ("Z/3", z3_presentation_complex())] {
        let ab = lib(edge_path_presentation(&x, 0))?.abelianization();
        let h = z_homology(&x)?;
        let h1 = (h.betti.get(1).copied().unwrap_or(0), h.torsion.get(1).cloned().unwrap_or_default());
        ensure((ab.free_rank, ab.torsion.clone()) == h1, format!("{name}: pi1^ab {ab} vs H1 {h}"))?;
    }
    Ok("500 SNF, 200 chain complexes, 6 fixtures".into())
}

const CRITERIA: [(&str, u64, Check); 13] = [
    ("A1", 30, a1),
    ("A2", 60, a2),
    ("A3", 60, a3),
    ("A4", 60, a4),
    ("A5", 60, a5),
    ("A6", 10, a6),
    ("A7", 10, a7),
    ("A8", 30, a8),
    ("A9", 10, a9),
    ("A10", 20, a10),
    ("A11", 30, a11),
    ("A12", 120, a12),
    ("A13", 60, a13),
];

fn main() {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (id, limit, check) in CRITERIA {
        if !filter.is_empty() && !filter.iter().any(|f| f == id) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > Duration::from_secs(limit) => Err(format!("{msg}; over the time limit")),
            other => other,
        };
        let (tag, msg) = match outcome {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!("{tag} {id:<3} [{:>7.2}s / {limit:>3}s] {msg}", took.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
