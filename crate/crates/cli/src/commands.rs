use std::path::{Path, PathBuf};

use gemkit::boundary::sphericity_heuristic;
use gemkit::invariants::{
    check_bound_on_gem, check_dehn_sommerville, check_omega_pairing,
    check_regularization_identities, check_semisimple, gem_complexity_relation, rho_table,
};
use gemkit::io::{
    catalog_add, catalog_scan, digest, export_dot, read_gem_file, write_gem_file, AddOutcome,
    Filter, GemFile,
};
use gemkit::moves::full_contraction_checked;
use gemkit::pi1::{rank_bounds, Letter};
use gemkit::{
    abelianization, boundary_graph, cancel_1_dipole, euler_characteristic, f_vector,
    find_1_dipoles, gurau_degree, insert_1_dipole, presentation, regular_genus, regularize,
    tietze_simplify, Color, ColoredGraph, Genus, GroupPresentation, InvariantReport, MoveError,
};
use serde_json::{json, Value};

use crate::output::{Failure, Report, Text};

pub type Outcome = Result<Report, Failure>;

fn load(path: &Path) -> Result<(GemFile, ColoredGraph), Failure> {
    let file = read_gem_file(path)?;
    let graph = file.to_graph()?;
    Ok((file, graph))
}

fn save(graph: &ColoredGraph, name: Option<String>, out: &Path) -> Result<(), Failure> {
    Ok(write_gem_file(&GemFile::from_graph(graph, name), out)?)
}

fn formula(graph: &ColoredGraph) -> &'static str {
    if graph.is_regular() {
        "closed"
    } else {
        "boundary"
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn validate(path: &Path) -> Outcome {
    let (_, graph) = load(path)?;
    let cls = graph.classify_vertices();
    let json = json!({
        "valid": true,
        "dimension": graph.dimension(),
        "vertices": graph.num_vertices(),
        "regular": graph.is_regular(),
        "bipartite": graph.is_bipartite(),
        "p_dot": cls.p_dot,
        "p_bar": cls.p_bar,
    });
    let text = Text::default()
        .line("valid", true)
        .line("dimension", graph.dimension())
        .line("vertices", graph.num_vertices())
        .line("regular", graph.is_regular())
        .line("bipartite", graph.is_bipartite())
        .finish();
    Ok(Report::new(json, text))
}

pub fn info(path: &Path) -> Outcome {
    let (file, graph) = load(path)?;
    let report = InvariantReport::compute(&graph)?;
    let boundary_vertices: Vec<usize> = (0..graph.num_vertices())
        .filter(|&v| graph.is_boundary_vertex(v))
        .collect();
    let mut t = Text::default();
    if let Some(name) = &file.name {
        t.line("name", name);
    }
    t.line("digest", digest(&file))
        .line("dimension", report.dimension)
        .line("vertices", graph.num_vertices())
        .line(
            "internal vertices",
            format!(
                "{} (p_dot = {})",
                graph.num_vertices() - boundary_vertices.len(),
                report.p_dot
            ),
        )
        .line(
            "boundary vertices",
            format!("{} (p_bar = {})", boundary_vertices.len(), report.p_bar),
        )
        .line("boundary components", report.h)
        .line("regular", report.regular)
        .line("bipartite", report.bipartite)
        .raw("g-table (colors: g, g_dot):");
    for e in &report.g_table {
        t.raw(format!("  {}: {} {}", e.colors, e.g, e.g_dot));
    }
    let json = json!({
        "name": file.name,
        "digest": digest(&file),
        "dimension": report.dimension,
        "vertices": graph.num_vertices(),
        "p_dot": report.p_dot,
        "p_bar": report.p_bar,
        "boundary_vertices": boundary_vertices,
        "h": report.h,
        "regular": report.regular,
        "bipartite": report.bipartite,
        "g_table": report.g_table,
    });
    Ok(Report::new(json, t.finish()))
}

/// `out.gem` becomes `out.K.gem`.
fn component_path(out: &Path, k: usize) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match out.extension() {
        Some(ext) => format!("{stem}.{k}.{}", ext.to_string_lossy()),
        None => format!("{stem}.{k}"),
    };
    out.with_file_name(name)
}

pub fn boundary(path: &Path, out: &Path) -> Outcome {
    let (_, graph) = load(path)?;
    let bgraph = boundary_graph(&graph).map_err(|e| Failure::Validation(e.to_string()))?;
    let h = bgraph.component_count();
    let mut t = Text::default();
    t.line("boundary components", h)
        .line("boundary vertices", bgraph.graph.num_vertices());
    let mut components = Vec::with_capacity(h);
    for k in 0..h {
        let component = bgraph.component(k).expect("component index in range");
        let target = if h == 1 {
            out.to_path_buf()
        } else {
            component_path(out, k)
        };
        save(&component, None, &target)?;
        let sphericity =
            sphericity_heuristic(&component).map_err(|e| Failure::Validation(e.to_string()))?;
        let parents: Vec<usize> = bgraph
            .parent_vertex_map
            .iter()
            .zip(&bgraph.component_map)
            .filter(|&(_, &c)| c == k)
            .map(|(&v, _)| v)
            .collect();
        t.raw(format!(
            "  component {k}: {} vertices, {:?}, written to {}",
            component.num_vertices(),
            sphericity,
            target.display()
        ));
        components.push(json!({
            "index": k,
            "vertices": component.num_vertices(),
            "parent_vertices": parents,
            "sphericity": sphericity,
            "path": target.display().to_string(),
        }));
    }
    let json = json!({
        "h": h,
        "vertices": bgraph.graph.num_vertices(),
        "dimension": bgraph.graph.dimension(),
        "components": components,
    });
    Ok(Report::new(json, t.finish()))
}

pub fn regularize_cmd(path: &Path, singular: Color, out: &Path) -> Outcome {
    let (file, graph) = load(path)?;
    let (result, record) = regularize(&graph, singular)?;
    save(&result, file.name.clone(), out)?;
    let chi_before = euler_characteristic(&graph);
    let chi_after = euler_characteristic(&result);
    let edges: Vec<String> = record
        .added_edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect();
    let text = Text::default()
        .line("singular color", singular)
        .line("added edges", edges.join(" "))
        .line(
            "color swap",
            format!("{singular} <-> {}", graph.dimension()),
        )
        .line("chi", format!("{chi_before} -> {chi_after}"))
        .line("written", out.display())
        .finish();
    let json = json!({
        "record": record,
        "chi_before": chi_before,
        "chi_after": chi_after,
        "vertices": result.num_vertices(),
        "path": out.display().to_string(),
    });
    Ok(Report::new(json, text))
}

pub fn dipoles(path: &Path, cancel: Option<usize>, out: Option<&Path>) -> Outcome {
    let (file, graph) = load(path)?;
    let sites = find_1_dipoles(&graph);
    let mut t = Text::default();
    t.line("dipoles", sites.len());
    for (k, s) in sites.iter().enumerate() {
        t.raw(format!(
            "  [{k}] color {} between {} and {}",
            s.color, s.vertices.0, s.vertices.1
        ));
    }
    let mut json = json!({ "dipoles": sites });
    if let Some(index) = cancel {
        let site = *sites.get(index).ok_or_else(|| {
            Failure::Usage(format!(
                "dipole index {index} out of range ({} dipoles)",
                sites.len()
            ))
        })?;
        let result = cancel_1_dipole(&graph, site)?;
        let out = out.ok_or_else(|| Failure::Usage("--cancel needs -o OUT".into()))?;
        save(&result, file.name.clone(), out)?;
        t.line("cancelled", index)
            .line(
                "vertices",
                format!("{} -> {}", graph.num_vertices(), result.num_vertices()),
            )
            .line("written", out.display());
        json["cancelled"] = json!({
            "index": index,
            "site": site,
            "vertices": result.num_vertices(),
            "path": out.display().to_string(),
        });
    }
    Ok(Report::new(json, t.finish()))
}

pub fn contract(path: &Path, out: &Path) -> Outcome {
    let (file, graph) = load(path)?;
    let result = match full_contraction_checked(&graph) {
        Ok(r) => r,
        Err(MoveError::InvariantBroken(what)) => {
            let text = format!("contraction changed the {what}\n");
            return Ok(Report::new(json!({ "invariant_broken": what }), text).checked(false));
        }
        Err(e) => return Err(e.into()),
    };
    save(&result, file.name.clone(), out)?;
    let text = Text::default()
        .line(
            "vertices",
            format!("{} -> {}", graph.num_vertices(), result.num_vertices()),
        )
        .line(
            "dipoles cancelled",
            (graph.num_vertices() - result.num_vertices()) / 2,
        )
        .line("written", out.display())
        .finish();
    let json = json!({
        "vertices_before": graph.num_vertices(),
        "vertices_after": result.num_vertices(),
        "dipoles_cancelled": (graph.num_vertices() - result.num_vertices()) / 2,
        "path": out.display().to_string(),
    });
    Ok(Report::new(json, text))
}

pub fn genus(path: &Path, all_perms: bool) -> Outcome {
    let (_, graph) = load(path)?;
    let rg = regular_genus::<Genus>(&graph)?;
    let mut t = Text::default();
    t.line("formula", formula(&graph));
    let mut json = json!({
        "formula": formula(&graph),
        "rho_min": rg.value.to_string(),
        "argmin": rg.argmin,
    });
    if all_perms {
        let table = rho_table::<Genus>(&graph)?;
        for (eps, rho) in &table {
            t.raw(format!("  {eps}  {rho}"));
        }
        json["table"] = table
            .iter()
            .map(|(eps, rho)| json!({ "permutation": eps, "rho": rho.to_string() }))
            .collect();
    }
    t.line("rho_min", rg.value).line("argmin", join(&rg.argmin));
    Ok(Report::new(json, t.finish()))
}

pub fn gdegree(path: &Path) -> Outcome {
    let (_, graph) = load(path)?;
    let omega = gurau_degree::<Genus>(&graph)?;
    let text = Text::default().line("omega_g", omega).finish();
    Ok(Report::new(json!({ "omega_g": omega.to_string() }), text))
}

pub fn fvector(path: &Path) -> Outcome {
    let (_, graph) = load(path)?;
    let f = f_vector(&graph);
    let text = Text::default().line("f", join(&f)).finish();
    Ok(Report::new(json!({ "f_vector": f }), text))
}

pub fn euler(path: &Path) -> Outcome {
    let (_, graph) = load(path)?;
    let chi = euler_characteristic(&graph);
    let text = Text::default().line("chi", chi).finish();
    Ok(Report::new(json!({ "chi": chi }), text))
}

fn words(relators: &[Vec<Letter>]) -> Vec<Vec<i64>> {
    relators
        .iter()
        .map(|w| w.iter().map(|l| l.signed_index()).collect())
        .collect()
}

fn presentation_json(pres: &GroupPresentation) -> Value {
    json!({
        "generators": pres.generator_count,
        "cycle_relators": words(&pres.cycle_relators),
        "tree_relators": words(&pres.tree_relators),
        "text": pres.to_string(),
    })
}

pub fn pi1(path: &Path, pair: (Color, Color), simplify: bool) -> Outcome {
    let (_, graph) = load(path)?;
    let pres = presentation(&graph, pair.0, pair.1).map_err(|e| Failure::Usage(e.to_string()))?;
    let ab = abelianization(&pres);
    let (lower, upper) = rank_bounds(&pres);
    let mut t = Text::default();
    t.line("presentation", &pres);
    let mut json = json!({
        "pair": [pair.0, pair.1],
        "presentation": presentation_json(&pres),
        "abelianization": ab,
        "rank_bounds": [lower, upper],
    });
    if simplify {
        let simple = tietze_simplify(&pres);
        t.line("simplified", &simple);
        json["simplified"] = presentation_json(&simple);
    }
    let mut group: Vec<String> = Vec::new();
    if ab.free_rank > 0 {
        group.push(if ab.free_rank == 1 {
            "Z".into()
        } else {
            format!("Z^{}", ab.free_rank)
        });
    }
    group.extend(ab.divisors.iter().map(|d| format!("Z/{d}")));
    let group = if group.is_empty() {
        "0".to_string()
    } else {
        group.join(" + ")
    };
    t.line("abelianization", group)
        .line("rank bounds", format!("{lower}..{upper}"));
    Ok(Report::new(json, t.finish()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lemma,
    Corollary,
    Omega,
    Dipole,
    Dehn,
}

pub fn check(path: &Path, suite: Suite) -> Outcome {
    let (_, graph) = load(path)?;
    match suite {
        Suite::Lemma | Suite::Corollary => check_regularization(&graph, suite),
        Suite::Omega => {
            let r = check_omega_pairing(&graph)?;
            let text = Text::default()
                .line("omega_g", r.omega_g)
                .line("pairs", r.pairs.len())
                .line("sum constant", r.sum_constant)
                .line("omega_g = 6(rho_e + rho_e')", r.holds)
                .finish();
            let holds = r.holds;
            Ok(Report::new(r, text).checked(holds))
        }
        Suite::Dipole => check_dipoles(&graph),
        Suite::Dehn => {
            let r = check_dehn_sommerville(&graph)?;
            let text = Text::default()
                .line("dipoles cancelled", r.dipoles_cancelled)
                .line("p", r.p)
                .line("chi", r.chi)
                .line("2p", r.lhs)
                .line("6chi + 2sum g_ijk - 30", r.rhs)
                .line("3-residues planar", r.three_residues_planar)
                .line("holds", r.holds)
                .finish();
            let holds = r.holds;
            Ok(Report::new(r, text).checked(holds))
        }
    }
}

fn check_regularization(graph: &ColoredGraph, suite: Suite) -> Outcome {
    let reports = (0..graph.dimension())
        .map(|c| check_regularization_identities(graph, c))
        .collect::<Result<Vec<_>, _>>()?;
    let mut t = Text::default();
    let mut holds = true;
    let mut entries = Vec::with_capacity(reports.len());
    for r in &reports {
        let c = r.singular_color;
        if suite == Suite::Lemma {
            for l in &r.lemma {
                t.raw(format!(
                    "c={c} {}: {} = {} {}",
                    l.name,
                    l.lhs,
                    l.rhs,
                    verdict(l.holds)
                ));
            }
            holds &= r.lemma_holds;
            entries.push(json!({ "singular_color": c, "lemma": r.lemma, "holds": r.lemma_holds }));
        } else {
            let asserted = r.transfer.iter().filter(|x| x.asserted).count();
            let exact = r.chi_shift_exact;
            t.raw(format!(
                "c={c} transfer: {} ({asserted}/{} asserted)",
                verdict(r.transfer_holds),
                r.transfer.len()
            ));
            t.raw(format!(
                "c={c} chi shift {} (h = {}, boundary chi = {}, embeds = {}) {}",
                r.chi_shift,
                r.h,
                r.boundary_chi,
                r.boundary_embeds,
                verdict(exact)
            ));
            holds &= r.transfer_holds && exact;
            entries.push(json!({
                "singular_color": c,
                "transfer": r.transfer,
                "transfer_holds": r.transfer_holds,
                "h": r.h,
                "chi_shift": r.chi_shift,
                "boundary_chi": r.boundary_chi,
                "boundary_embeds": r.boundary_embeds,
                "chi_shift_exact": exact,
                "chi_law_holds": r.chi_law_holds,
            }));
        }
    }
    t.line("holds", holds);
    Ok(Report::new(json!({ "checks": entries, "holds": holds }), t.finish()).checked(holds))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

/// Inserts a dipole on every edge, compares invariants, cancels it again and
/// checks that the original comes back.
fn check_dipoles(graph: &ColoredGraph) -> Outcome {
    let pair =
        |g: &ColoredGraph| abelianization(&presentation(g, 0, 1).expect("colors 0 and 1 exist"));
    let f0 = f_vector(graph);
    let chi0 = euler_characteristic(graph);
    let rho0 = rho_table::<Genus>(graph).ok();
    let ab0 = pair(graph);
    let expect_df = graph.is_regular() && graph.dimension() == 4;
    let mut failures = Vec::new();
    let edges = graph.edges();
    for &(u, v, c) in &edges {
        let (bigger, ins) = insert_1_dipole(graph, (u, v), c)?;
        let mut problems = Vec::new();
        if expect_df {
            let df: Vec<i64> = f_vector(&bigger)
                .iter()
                .zip(&f0)
                .map(|(a, b)| *a as i64 - *b as i64)
                .collect();
            if df != [1, 4, 6, 5, 2] {
                problems.push(format!("f-vector shift {df:?}"));
            }
        }
        if euler_characteristic(&bigger) != chi0 {
            problems.push("chi".to_string());
        }
        if rho_table::<Genus>(&bigger).ok() != rho0 {
            problems.push("rho".to_string());
        }
        if pair(&bigger) != ab0 {
            problems.push("abelianization".to_string());
        }
        if !ins.genuine {
            problems.push("inserted edge is not a dipole".to_string());
        }
        match cancel_1_dipole(&bigger, ins.site) {
            Ok(back) if back.is_relabeling_of(graph) => {}
            Ok(_) => problems.push("cancellation does not recover the gem".to_string()),
            Err(e) => problems.push(format!("cancellation failed: {e}")),
        }
        if !problems.is_empty() {
            failures.push(json!({ "edge": [u, v, c], "problems": problems }));
        }
    }
    let contraction = match full_contraction_checked(graph) {
        Ok(g) => Ok(g.num_vertices()),
        Err(MoveError::InvariantBroken(what)) => Err(what),
        Err(e) => return Err(e.into()),
    };
    let holds = failures.is_empty() && contraction.is_ok();
    let mut t = Text::default();
    t.line("round trips", edges.len())
        .line("failures", failures.len());
    match contraction {
        Ok(n) => t.line(
            "full contraction",
            format!("{} -> {n} vertices, invariants kept", graph.num_vertices()),
        ),
        Err(what) => t.line("full contraction", format!("changed the {what}")),
    };
    t.line("holds", holds);
    let json = json!({
        "round_trips": edges.len(),
        "failures": failures,
        "contracted_vertices": contraction.ok(),
        "holds": holds,
    });
    Ok(Report::new(json, t.finish()).checked(holds))
}

pub struct BoundArgs {
    pub chi: i64,
    pub m: i64,
    pub m_hat: i64,
    pub h: i64,
    pub semisimple: bool,
    pub minimal: bool,
}

pub fn bound(path: &Path, a: &BoundArgs) -> Outcome {
    let (_, graph) = load(path)?;
    let r = check_bound_on_gem(&graph, a.chi, a.m, a.h, a.m_hat)?;
    let complexity = gem_complexity_relation(&graph, a.chi, a.minimal)?;
    let mut t = Text::default();
    t.line("genus bound", r.bound.genus)
        .line("rho_min", r.rho_min)
        .line("genus bound met", r.genus_holds)
        .line("G-degree bound", r.bound.gdegree)
        .line("omega_g", r.omega_g)
        .line("G-degree bound met", r.gdegree_holds)
        .line("equality", r.equality)
        .line(
            "6(chi - 1 + p - 1)",
            format!(
                "{} (omega_g equal: {})",
                complexity.relation_value, complexity.equal
            ),
        );
    let mut json = json!({ "bound": r, "holds": r.holds(), "gem_complexity": complexity });
    if a.semisimple {
        let s = check_semisimple(&graph, a.m, a.m_hat, a.h)?;
        t.line("semi-simple", s.semi_simple)
            .line("weak semi-simple witnesses", s.weak_semi_simple.len());
        json["semisimple"] = serde_json::to_value(&s).expect("serializable");
    }
    let consistent = r.holds() && complexity.consistent;
    Ok(Report::new(json, t.finish()).checked(consistent))
}

pub fn catalog_add_cmd(store: &Path, path: &Path) -> Outcome {
    let file = read_gem_file(path)?;
    file.to_graph()?;
    let outcome = catalog_add(store, &file)?;
    let text = match &outcome {
        AddOutcome::Added { digest } => format!("added {digest}\n"),
        AddOutcome::Duplicate { digest, line } => format!("duplicate {digest} (line {line})\n"),
    };
    Ok(Report::new(outcome, text))
}

pub fn catalog_scan_cmd(store: &Path, file: Option<&Path>, filters: &[String]) -> Outcome {
    let mut parsed = filters
        .iter()
        .map(|f| Filter::parse(f))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(path) = file {
        let gem = read_gem_file(path)?;
        parsed.push(Filter::parse(&format!("digest={}", digest(&gem)))?);
    }
    let result = catalog_scan(store, &parsed)?;
    let mut t = Text::default();
    t.line("matches", result.records.len());
    for r in &result.records {
        let name = r.get("name").and_then(Value::as_str).unwrap_or("-");
        let digest = r.get("digest").and_then(Value::as_str).unwrap_or("-");
        let rho_min = r.get("rho_min").and_then(Value::as_str).unwrap_or("-");
        t.raw(format!(
            "  {name} {digest} rho_min={rho_min} chi={}",
            r["chi"]
        ));
    }
    for p in &result.corrupt {
        t.raw(format!("  corrupt line {}: {}", p.line, p.message));
        eprintln!("warning: store line {} is corrupt: {}", p.line, p.message);
    }
    Ok(Report::new(result, t.finish()))
}

pub fn export_dot_cmd(path: &Path, out: &Path) -> Outcome {
    let (_, graph) = load(path)?;
    export_dot(&graph, out)?;
    let text = Text::default().line("written", out.display()).finish();
    let json = json!({
        "path": out.display().to_string(),
        "vertices": graph.num_vertices(),
        "edges": graph.edges().len(),
    });
    Ok(Report::new(json, text))
}
