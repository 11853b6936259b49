//! `factor`, `fibrant` and `cofibrant`.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use homres::scomplex::{SimplicialMap, SimplicialSet};
use homres::soa::{garner_iterate, exhaustive_lift_check, FactorizationState, GeneratorSet, Replacer, Side, Status};
use serde_json::json;

use crate::report::{read_json, Failure, Report, EXIT_BUDGET, EXIT_CHECK, EXIT_OK};

#[derive(Clone, Debug)]
pub struct SoaConfig {
    pub generators: String,
    pub max_stages: usize,
    pub dim_bound: usize,
    pub budget: u64,
}

pub fn generators(spec: &str, dim_bound: usize) -> Result<GeneratorSet, Failure> {
    let gens = match spec {
        "boundary" => GeneratorSet::boundaries(dim_bound, dim_bound)?,
        "horn" => GeneratorSet::horns(dim_bound, dim_bound, false)?,
        "inner-horn" => GeneratorSet::horns(dim_bound, dim_bound, true)?,
        other => match other.strip_prefix("custom:") {
            Some(file) => GeneratorSet::from_json(&read_json(Path::new(file))?, dim_bound)?,
            None => return Err(Failure::parse(format!("unknown generator family `{other}`"))),
        },
    };
    Ok(gens)
}

fn check_bound(found: usize, expected: usize, what: &str) -> Result<(), Failure> {
    if found != expected {
        return Err(Failure::parse(format!("{what} has dim_bound {found}, but --dim-bound is {expected}")));
    }
    Ok(())
}

pub fn read_set(path: &PathBuf, dim_bound: usize) -> Result<Arc<SimplicialSet>, Failure> {
    let x = SimplicialSet::from_json(&read_json(path)?)?;
    check_bound(x.dim_bound(), dim_bound, "the object")?;
    Ok(Arc::new(x))
}

/// Certify a finished run: convergence, diagonal fillers for every square,
/// commuting provenance and an exhaustive lift search.
fn certify(state: &FactorizationState, budget: u64) -> Result<Report, Failure> {
    let mut json = json!({ "state": state.to_json() });
    let mut lines = vec![format!(
        "generators {}, stage {}, status {}, cells {:?}",
        state.generators.kind.as_str(),
        state.stage,
        state.status.as_str(),
        state.object.counts()
    )];
    let composite_ok = state.right.after(&state.left)? == state.input;
    lines.push(format!("right after left equals input: {composite_ok}"));
    json["factors_input"] = json!(composite_ok);
    if !state.converged() {
        lines.push("not converged; lifting is not certified".into());
        let code = if state.status == Status::StageLimit || state.status == Status::BudgetExceeded { EXIT_BUDGET } else { EXIT_CHECK };
        return Ok(Report { json, text: lines.join("\n") + "\n", code });
    }
    let chosen = state.verify_chosen_lifts(budget)?;
    let provenance = state.verify_provenance()?;
    let exhaustive = exhaustive_lift_check(&state.generators, &state.right, budget)?;
    let pass = composite_ok && chosen.all_lift() && provenance.is_empty() && exhaustive.all_lift();
    lines.push(format!("chosen lifts: {}/{} squares", chosen.lifted, chosen.squares));
    lines.push(format!("exhaustive lifts: {}/{} squares", exhaustive.lifted, exhaustive.squares));
    lines.push(format!("provenance failures: {}", provenance.len()));
    json["checks"] = json!({
        "chosen_lifts": {"squares": chosen.squares, "lifted": chosen.lifted, "failures": chosen.failures},
        "exhaustive_lifts": {"squares": exhaustive.squares, "lifted": exhaustive.lifted, "failures": exhaustive.failures},
        "provenance_failures": provenance,
        "pass": pass,
    });
    Ok(Report { json, text: lines.join("\n") + "\n", code: if pass { EXIT_OK } else { EXIT_CHECK } })
}

pub fn factor(map: &PathBuf, cfg: &SoaConfig) -> Result<Report, Failure> {
    let f = SimplicialMap::from_json(&read_json(map)?)?;
    check_bound(f.source().dim_bound(), cfg.dim_bound, "the map")?;
    let gens = generators(&cfg.generators, cfg.dim_bound)?.shared();
    let state = garner_iterate(gens, &f, cfg.max_stages, cfg.budget)?;
    certify(&state, cfg.budget)
}

pub fn replace(object: &PathBuf, side: Side, cfg: &SoaConfig) -> Result<Report, Failure> {
    let x = read_set(object, cfg.dim_bound)?;
    let gens = generators(&cfg.generators, cfg.dim_bound)?.shared();
    let replacer = Replacer::new(gens, side, cfg.max_stages, cfg.budget);
    let state = replacer.state(&x)?;
    let mut report = certify(&state, cfg.budget)?;
    if report.code != EXIT_OK {
        return Ok(report);
    }
    let structure = replacer.structure_map(&x)?;
    let extra = match side {
        // r : X -> RX should be levelwise injective.
        Side::Fibrant => ("r_injective", structure.is_monomorphism()),
        // q : QX -> X should have the right lifting property against boundaries.
        Side::Cofibrant => {
            let lifts = exhaustive_lift_check(&GeneratorSet::boundaries(cfg.dim_bound, cfg.dim_bound)?, &structure, cfg.budget)?;
            ("q_lifts_against_boundaries", lifts.all_lift())
        }
    };
    report.json["replacement"] = json!({ "object": replacer.object(&x)?.to_json(), "structure_map": structure.to_json(), extra.0: extra.1 });
    report.text.push_str(&format!("{}: {}\n", extra.0, extra.1));
    if !extra.1 {
        report.code = EXIT_CHECK;
    }
    Ok(report)
}
