//! `complete`: cohomology and spectral sequence pages of a cosimplicial
//! additive object.

use std::path::PathBuf;

use homres::adjres::finvect::FreeForget;
use homres::completion::{amitsur, derived_completion_report, ss_pages, tot_truncated, Algebra, CosimplicialChainComplex, Ring};
use serde_json::{json, Value};

use crate::report::{read_json, Failure, Report, EXIT_CHECK, EXIT_OK};

pub struct CompleteConfig {
    pub instance: String,
    pub x: usize,
    pub p: u64,
    pub k: usize,
    pub algebra: Option<PathBuf>,
    pub module: String,
    pub levels: usize,
}

fn strings(v: &Value) -> Option<Vec<String>> {
    v.as_array()?.iter().map(|s| s.as_str().map(str::to_string)).collect()
}

fn ints(v: &Value) -> Option<Vec<i64>> {
    v.as_array()?.iter().map(Value::as_i64).collect()
}

/// `{"p": .., "labels": [..], "unit": [..], "mult": [[[..]]]}`, `mult[i][j]`
/// being the coordinates of the product of basis vectors `i` and `j`.
fn read_algebra(path: &PathBuf) -> Result<Algebra, Failure> {
    let v = read_json(path)?;
    let bad = |what: &str| Failure::parse(format!("{}: bad or missing `{what}`", path.display()));
    let p = v["p"].as_u64().ok_or_else(|| bad("p"))?;
    let labels = strings(&v["labels"]).ok_or_else(|| bad("labels"))?;
    let unit = ints(&v["unit"]).ok_or_else(|| bad("unit"))?;
    let mult = v["mult"]
        .as_array()
        .and_then(|rows| rows.iter().map(|r| r.as_array()?.iter().map(ints).collect::<Option<Vec<_>>>()).collect::<Option<Vec<_>>>())
        .ok_or_else(|| bad("mult"))?;
    Ok(Algebra::new(Ring::fp(p)?, labels, unit, mult)?)
}

fn free_forget(cfg: &CompleteConfig) -> Result<Report, Failure> {
    let rep = derived_completion_report(&FreeForget::new(), cfg.x, cfg.levels)?;
    let mut text = rep.to_text();
    for h in &rep.cohomology {
        text.push_str(&format!("H^{} = {}\n", h.degree, h.to_json()));
    }
    text.push_str(&format!("collapses to edge: {}\n", rep.collapses_to_edge()));
    let code = if rep.identity_failures.is_empty() { EXIT_OK } else { EXIT_CHECK };
    Ok(Report { json: rep.to_json(), text, code })
}

fn amitsur_pages(cfg: &CompleteConfig) -> Result<Report, Failure> {
    let alg = match &cfg.algebra {
        Some(path) => read_algebra(path)?,
        None => Algebra::truncated_polynomial(cfg.p, cfg.k)?,
    };
    let v_dim = match cfg.module.as_str() {
        "residue" => 1,
        "free" => alg.dim(),
        other => return Err(Failure::parse(format!("unknown module `{other}`; expected residue or free"))),
    };
    let m = amitsur(&alg, v_dim, cfg.levels)?;
    let failures = m.identity_failures()?;
    let cohomology = m.moore_cochain()?.cohomology();
    let cc = CosimplicialChainComplex { rows: vec![m.clone()], vertical: Vec::new() };
    let (_, total) = tot_truncated(&cc, cfg.levels)?;
    let ss = ss_pages(&total, cfg.levels)?;
    let Ring::Fp(p) = alg.ring else { unreachable!("algebras are over a prime field") };
    let mut text = format!("Amitsur complex over F_{p}, basis {:?}, module {}, levels 0..={}\n", alg.labels, cfg.module, cfg.levels);
    text.push_str(&format!("level dims {:?}\n", m.dims));
    for page in &ss.pages {
        text.push_str(&page.to_text());
    }
    for h in &cohomology {
        text.push_str(&format!("H^{} = {}\n", h.degree, h.to_json()));
    }
    // Column N has no outgoing differential in the truncation, so it is left out.
    let edge = ss.pages.get(1).map(|e2| e2.dims.iter().all(|(&(s, _), &d)| s == 0 || s >= cfg.levels || d == 0));
    if let Some(edge) = edge {
        text.push_str(&format!("E_2 concentrated in s=0 below the truncated column s={}: {edge}\n", cfg.levels));
    }
    text.push_str(&format!("certified: {}\n", ss.certified()));
    let json = json!({
        "instance": "amitsur",
        "p": p,
        "labels": alg.labels,
        "module": cfg.module,
        "levels": cfg.levels,
        "level_dims": m.dims,
        "identity_failures": failures,
        "cohomology": cohomology.iter().map(|h| h.to_json()).collect::<Vec<_>>(),
        "spectral_sequence": ss.to_json(),
        "truncated_column": cfg.levels,
        "e2_edge_concentrated": edge,
    });
    let code = if failures.is_empty() && ss.certified() { EXIT_OK } else { EXIT_CHECK };
    Ok(Report { json, text, code })
}

pub fn complete(cfg: &CompleteConfig) -> Result<Report, Failure> {
    if cfg.levels == 0 {
        return Err(Failure::parse("--levels must be positive"));
    }
    match cfg.instance.as_str() {
        "a" => free_forget(cfg),
        "amitsur" => amitsur_pages(cfg),
        other => Err(Failure::parse(format!("unknown instance `{other}`; expected a or amitsur"))),
    }
}
