//! Command-line front end. Every command builds one JSON value; `--format text`
//! renders that same value line by line.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::category::{
    coset_grothendieck, fixed_subcategory, orbit_category, quotient_category, quotient_to_orbit_category,
    standard_action,
};
use crate::comma::{check_contractible_overcategory, ContractibilityReport};
use crate::error::{Error, Result};
use crate::euclidean::{bbar_model, catalogue_group, catalogue_examples, nullification_report};
use crate::group::{
    all_subgroups, finite_family, finite_group, parse_group_text, torsion_generated_subgroup, GroupSpec, PermGroup,
    FINITE_GROUP_NAMES,
};
use crate::homology::Coefficients;
use crate::limits::Limits;
use crate::pi1::pi1_matches_torsion_quotient_for_category;
use crate::simplicial::fixtures::{fixture, FIXTURE_NAMES};
use crate::simplicial::{
    complex_to_json, homology_of_nerve, parse_complex, product, pushout, telescope, wedge, SimplicialComplex,
    SimplicialMap,
};
use crate::verify::{run_item, run_suite, suite_ids, SuiteConfig, Verdict};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "properclass", version, about = "Finite models of classifying spaces for proper actions")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
    /// Overrides the nerve cell bound (also read from PROPERCLASS_MAX_CELLS).
    #[arg(long, global = true)]
    max_cells: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the catalogue, or describe one group and its subgroups.
    Group {
        name: Option<String>,
        /// Generators in the `perm: (1 2)` text format.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        subgroups: bool,
    },
    /// Orbit category O_F, the Grothendieck construction Gr(R) and fixed points.
    Orbitcat {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
        /// Include a category in the report: `of`, `gr`, `quotient` or `fixed`.
        #[arg(long)]
        emit_category: Option<String>,
        /// Subgroup index for `--emit-category fixed`.
        #[arg(long, default_value_t = 0)]
        subgroup: usize,
    },
    /// Quotient model of a line or wallpaper group, with homology and pi1.
    Bbar {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 3)]
        refine: usize,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long)]
        emit_complex: bool,
    },
    /// Products, wedges, pushouts and telescopes of complexes.
    Colimit {
        #[arg(long, value_parser = ["product", "wedge", "pushout", "telescope"])]
        op: String,
        /// Fixture name or complex file.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: Option<String>,
        /// Pushout gluing `a0:b0,a1:b1,...` over a discrete set of points.
        #[arg(long)]
        glue: Option<String>,
        #[arg(long, default_value_t = 3)]
        stages: usize,
        #[arg(long)]
        emit_complex: bool,
    },
    /// Overcategories of the localized simplex category.
    Comma {
        /// Fixture name or complex file.
        #[arg(long)]
        complex: String,
        /// Simplex index in global order; every simplex when omitted.
        #[arg(long)]
        sigma: Option<usize>,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
    },
    /// Run the verification battery.
    Verify {
        #[arg(long, default_value = "paper", value_parser = ["paper"])]
        suite: String,
        /// Comma-separated item ids; all items when omitted.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 3)]
        refine: usize,
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
    },
}

/// Exit status for an error: 2 for resource bounds, 1 for failed or
/// inconclusive verification, 3 for bad input.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_resource_bound() {
        2
    } else if matches!(e, Error::Inconclusive(_)) {
        1
    } else {
        3
    }
}

/// Runs the command line and returns the process exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut limits = Limits::from_env();
    if let Some(m) = cli.max_cells {
        limits.max_cells = m;
    }
    match run(&cli, &limits) {
        Ok((body, code)) => match emit(&cli, &body) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                3
            }
        },
        Err(e) => {
            let body = json!({ "schema": SCHEMA_VERSION, "error": e.to_string(), "exit_code": exit_code(&e) });
            let _ = emit(&cli, &body);
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(cli: &Cli, body: &Value) -> Result<()> {
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(body).expect("serializable") + "\n",
        Format::Text => render_text(body),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `path = value` lines; arrays of scalars stay on one line.
pub fn render_text(v: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Object(_) => None,
            Value::Array(a) => a.iter().map(scalar).collect::<Option<Vec<_>>>().map(|s| format!("[{}]", s.join(", "))),
            Value::String(s) => Some(s.clone()),
            other => Some(other.to_string()),
        }
    }
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        if let Some(s) = scalar(v) {
            out.push_str(&format!("{prefix} = {s}\n"));
            return;
        }
        let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(m) => m.iter().for_each(|(k, x)| walk(&join(k), x, out)),
            Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| walk(&join(&i.to_string()), x, out)),
            _ => unreachable!(),
        }
    }
    let mut out = String::new();
    walk("", v, &mut out);
    out
}

fn load_complex(src: &str) -> Result<SimplicialComplex> {
    if let Some(x) = fixture(src) {
        return Ok(x);
    }
    let text = std::fs::read_to_string(src).map_err(|e| {
        Error::InvalidInput(format!("`{src}` is neither a fixture ({}) nor a readable file: {e}", FIXTURE_NAMES.join(", ")))
    })?;
    parse_complex(&text)
}

fn load_group(name: Option<&str>, file: Option<&PathBuf>, limits: &Limits) -> Result<PermGroup> {
    match (name, file) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            parse_group_text(&text, limits)
        }
        (Some(n), None) => finite_group(n),
        (None, None) => Err(Error::InvalidInput("give a group name or --file".into())),
    }
}

fn with_schema(command: &str, mut body: Value) -> Value {
    let map = body.as_object_mut().expect("reports are objects");
    map.insert("schema".into(), json!(SCHEMA_VERSION));
    map.insert("command".into(), json!(command));
    body
}

fn run(cli: &Cli, limits: &Limits) -> Result<(Value, i32)> {
    match &cli.command {
        Command::Group { name, file, subgroups } => group_cmd(name.as_deref(), file.as_ref(), *subgroups, limits),
        Command::Orbitcat {
            group,
            file,
            max_dim,
            emit_category,
            subgroup,
        } => orbitcat_cmd(group.as_deref(), file.as_ref(), *max_dim, emit_category.as_deref(), *subgroup, limits),
        Command::Bbar {
            group,
            refine,
            max_dim,
            emit_complex,
        } => bbar_cmd(group, *refine, *max_dim, *emit_complex, limits),
        Command::Colimit {
            op,
            a,
            b,
            glue,
            stages,
            emit_complex,
        } => colimit_cmd(op, a, b.as_deref(), glue.as_deref(), *stages, *emit_complex),
        Command::Comma { complex, sigma, max_dim } => comma_cmd(complex, *sigma, *max_dim, cli.jobs, limits),
        Command::Verify {
            suite: _,
            only,
            refine,
            max_dim,
        } => verify_cmd(only.as_deref(), cli.seed, cli.jobs, *refine, *max_dim, limits),
    }
}

fn group_cmd(name: Option<&str>, file: Option<&PathBuf>, subgroups: bool, limits: &Limits) -> Result<(Value, i32)> {
    if name.is_none() && file.is_none() {
        let body = json!({
            "finite": FINITE_GROUP_NAMES,
            "euclidean": catalogue_examples(),
        });
        return Ok((with_schema("group", body), 0));
    }
    if let (Some(n), None) = (name, file) {
        if finite_group(n).is_err() {
            let spec = catalogue_group(n)?;
            let tq = torsion_generated_subgroup(&GroupSpec::Euclidean(spec.clone()))?;
            let body = json!({
                "group": n,
                "dimension": spec.dimension,
                "point_group_order": spec.point_group.len(),
                "kernel_order": spec.kernel_order,
                "presentation": tq.group.to_string(),
                "torsion_generators": tq.torsion_generators.iter().map(|w| tq.group.format_word(w)).collect::<Vec<_>>(),
                "torsion_quotient_abelianization": tq.quotient.abelianization().to_string(),
            });
            return Ok((with_schema("group", body), 0));
        }
    }
    let g = load_group(name, file, limits)?;
    let mut body = json!({
        "order": g.order(),
        "degree": g.degree(),
        "generators": g.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    });
    if subgroups {
        let subs = all_subgroups(&g, limits)?;
        body["subgroups"] = json!(subs.iter().map(|h| json!({ "order": h.order(), "elements": h.describe(&g) })).collect::<Vec<_>>());
    }
    Ok((with_schema("group", body), 0))
}

fn orbitcat_cmd(
    name: Option<&str>,
    file: Option<&PathBuf>,
    d: usize,
    emit: Option<&str>,
    subgroup: usize,
    limits: &Limits,
) -> Result<(Value, i32)> {
    if d == 0 {
        return Err(Error::InvalidInput("--max-dim must be positive".into()));
    }
    let g = load_group(name, file, limits)?;
    let f = finite_family(&g, limits)?;
    let oc = orbit_category(&g, &f, limits)?;
    let gr = coset_grothendieck(&g, &oc, limits)?;
    let ho = homology_of_nerve(&oc.category, d, Coefficients::Integers, limits)?;
    let hg = homology_of_nerve(&gr.category, d, Coefficients::Integers, limits)?;
    let pi1 = pi1_matches_torsion_quotient_for_category(&GroupSpec::Finite(g.clone()), &oc.category, limits)?;
    let terminal = oc.category.has_terminal_object();
    let acyclic = ho.is_reduced_acyclic_through(d - 1) && hg.is_reduced_acyclic_through(d - 1);
    let mut body = json!({
        "group_order": g.order(),
        "truncation": d,
        "orbit_category": {
            "objects": oc.category.num_objects(),
            "morphisms": oc.category.num_morphisms(),
            "terminal_object": terminal.map(|t| oc.category.object_label(t).to_string()),
            "homology": ho.to_json(),
        },
        "grothendieck": {
            "objects": gr.category.num_objects(),
            "morphisms": gr.category.num_morphisms(),
            "homology": hg.to_json(),
        },
        "pi1": pi1,
        "acyclic": acyclic,
    });
    if let Some(which) = emit {
        let cat = match which {
            "of" => oc.category.to_json(),
            "gr" => gr.category.to_json(),
            "quotient" => {
                let action = standard_action(&g, &oc, &gr);
                let q = quotient_category(&gr.category, &action)?;
                quotient_to_orbit_category(&oc, &gr, &q)?;
                q.category.to_json()
            }
            "fixed" => {
                let k = oc
                    .subgroups
                    .get(subgroup)
                    .ok_or_else(|| Error::InvalidInput(format!("no subgroup with index {subgroup}")))?;
                let action = standard_action(&g, &oc, &gr);
                let (fixed, _) = fixed_subcategory(&gr.category, &action, k);
                json!({
                    "subgroup": k.describe(&g),
                    "initial_object": fixed.has_initial_object().map(|o| fixed.object_label(o).to_string()),
                    "category": fixed.to_json(),
                })
            }
            other => return Err(Error::InvalidInput(format!("unknown category `{other}`"))),
        };
        body["category"] = cat;
    }
    let code = if acyclic && terminal.is_some() { 0 } else { 1 };
    Ok((with_schema("orbitcat", body), code))
}

fn bbar_cmd(name: &str, k: usize, d: usize, emit_complex: bool, limits: &Limits) -> Result<(Value, i32)> {
    let spec = catalogue_group(name)?;
    let r = nullification_report(&spec, k, d, limits)?;
    let mut body = json!({
        "group": r.group,
        "refinement": r.refinement,
        "vertices": r.vertices,
        "simplices": r.simplices,
        "betti": r.homology.betti,
        "homology": r.homology.to_json(),
        "pi1": r.pi1,
        "pi1_error": r.pi1_error,
        "prediction": r.prediction,
        "shape": r.shape,
        "expected": r.expected,
        "consistent": r.consistent,
        "verdict": r.verdict,
    });
    if emit_complex {
        body["complex"] = complex_to_json(&bbar_model(&spec, k)?.complex);
    }
    let code = if r.consistent { 0 } else { 1 };
    Ok((with_schema("bbar", body), code))
}

fn parse_glue(text: &str) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for pair in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (a, b) = pair
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `a:b` in `{pair}`")))?;
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex `{s}`")));
        left.push(parse(a)?);
        right.push(parse(b)?);
    }
    Ok((left, right))
}

fn colimit_cmd(
    op: &str,
    a: &str,
    b: Option<&str>,
    glue: Option<&str>,
    stages: usize,
    emit_complex: bool,
) -> Result<(Value, i32)> {
    let x = load_complex(a)?;
    let second = || -> Result<SimplicialComplex> {
        load_complex(b.ok_or_else(|| Error::InvalidInput(format!("`{op}` needs --b")))?)
    };
    let result = match op {
        "product" => product(&x, &second()?),
        "wedge" => wedge(&x, 0, &second()?, 0)?,
        "pushout" => {
            let y = second()?;
            let (l, r) = parse_glue(glue.unwrap_or("0:0"))?;
            let points: Vec<Vec<usize>> = (0..l.len()).map(|i| vec![i]).collect();
            let base = SimplicialComplex::from_facets(l.len(), &points)?;
            pushout(&base, &x, &SimplicialMap::new(l), &y, &SimplicialMap::new(r))?
        }
        "telescope" => {
            if stages == 0 {
                return Err(Error::InvalidInput("--stages must be positive".into()));
            }
            let copies = vec![x.clone(); stages];
            let maps = vec![SimplicialMap::identity(x.num_vertices()); stages - 1];
            telescope(&copies, &maps)?
        }
        other => return Err(Error::InvalidInput(format!("unknown operation `{other}`"))),
    };
    let h = result.homology(Coefficients::Integers)?;
    let mut body = json!({
        "op": op,
        "vertices": result.num_vertices(),
        "simplices": result.total_count(),
        "euler_characteristic": result.euler_characteristic(),
        "betti": h.betti,
        "homology": h.to_json(),
    });
    if emit_complex {
        body["complex"] = complex_to_json(&result);
    }
    Ok((with_schema("colimit", body), 0))
}

fn comma_cmd(src: &str, sigma: Option<usize>, d: usize, jobs: usize, limits: &Limits) -> Result<(Value, i32)> {
    use rayon::prelude::*;
    let x = load_complex(src)?;
    let sigmas: Vec<usize> = match sigma {
        Some(s) => vec![s],
        None => (0..x.total_count()).collect(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    let reports: Vec<ContractibilityReport> = pool.install(|| {
        sigmas
            .par_iter()
            .map(|&s| check_contractible_overcategory(&x, s, d, limits))
            .collect::<Result<_>>()
    })?;
    let all_acyclic = reports.iter().all(|r| r.acyclic);
    let independent = reports
        .windows(2)
        .all(|w| w[0].cell_counts == w[1].cell_counts && w[0].homology == w[1].homology);
    let body = json!({
        "truncation": d,
        "degrees_checked": format!("0..{}", d.saturating_sub(1)),
        "reports": reports.iter().map(|r| json!({
            "sigma": r.sigma,
            "simplex": r.sigma_label,
            "pi1_order": r.pi1_order,
            "objects": r.objects,
            "morphisms": r.morphisms,
            "cell_counts": r.cell_counts,
            "betti": r.homology.betti,
            "homology": r.homology.to_json(),
            "connected": r.connected,
            "acyclic": r.acyclic,
        })).collect::<Vec<_>>(),
        "all_acyclic": all_acyclic,
        "sigma_independent": independent,
    });
    let code = if all_acyclic && independent { 0 } else { 1 };
    Ok((with_schema("comma", body), code))
}

fn verify_cmd(only: Option<&str>, seed: u64, jobs: usize, refine: usize, d: usize, limits: &Limits) -> Result<(Value, i32)> {
    let cfg = SuiteConfig {
        seed,
        nerve_dim: d.max(1),
        refinement: refine,
        limits: limits.clone(),
    };
    let reports = match only {
        None => run_suite(&cfg, jobs)?,
        Some(list) => {
            let ids: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            for id in &ids {
                if !suite_ids().contains(id) {
                    return Err(Error::InvalidInput(format!("no suite item `{id}`")));
                }
            }
            ids.iter().map(|id| run_item(id, &cfg)).collect::<Result<Vec<_>>>()?
        }
    };
    let passed = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let code = if passed == reports.len() { 0 } else { 1 };
    let body = json!({
        "suite": "paper",
        "seed": seed,
        "passed": passed,
        "total": reports.len(),
        "items": reports,
    });
    Ok((with_schema("verify", body), code))
}
