use std::path::Path;

use flagrep_core::designs::{verify_2design, DesignError, IncidenceStructure};
use flagrep_core::permgroup::{Permutation, PermutationGroup};
use serde_json::{json, Value};

use super::{group_json, params_json};
use crate::report::{CliError, Report, Status};

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Group files hold `{"degree": N, "generators": [...]}` or a bare generator
/// list. A generator is a 1-based cycle string or a 0-based image array.
pub fn parse_group(text: &str, default_degree: usize) -> Result<PermutationGroup, CliError> {
    let bad = |why: String| CliError::Io(format!("group file: {why}"));
    let value: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let (degree, gens) = match &value {
        Value::Array(g) => (default_degree, g.clone()),
        Value::Object(m) => {
            let degree = match m.get("degree") {
                None => default_degree,
                Some(d) => d.as_u64().ok_or_else(|| bad("degree must be a non-negative integer".into()))? as usize,
            };
            let gens = m
                .get("generators")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing generators array".into()))?;
            (degree, gens.clone())
        }
        _ => return Err(bad("expected an object or an array".into())),
    };
    let perms = gens
        .iter()
        .map(|g| match g {
            Value::String(s) => Permutation::from_cycles(s, degree).map_err(|e| bad(e.to_string())),
            Value::Array(_) => {
                let images: Vec<usize> = serde_json::from_value(g.clone()).map_err(|e| bad(e.to_string()))?;
                Permutation::from_images(images).map_err(|e| bad(e.to_string()))
            }
            other => Err(bad(format!("cannot read generator {other}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    PermutationGroup::new(degree, perms).map_err(|e| bad(e.to_string()))
}

pub fn check(input: &Path, group: Option<&Path>) -> Result<Report, CliError> {
    let structure = IncidenceStructure::from_json(&read(input)?).map_err(|e| match e {
        DesignError::NotADesign(m) => CliError::Math(format!("not a 2-design: {m}")),
        other => CliError::Io(format!("{}: {other}", input.display())),
    })?;
    let verdict = verify_2design(&structure).map_err(|e| match e {
        DesignError::NotADesign(m) => CliError::Math(format!("not a 2-design: {m}")),
        other => CliError::Math(other.to_string()),
    })?;
    let mut results = params_json(&verdict);
    results["multiset"] = json!(structure.is_multiset() && !structure.is_simple());
    results["group"] = match group {
        Some(path) => {
            let g = parse_group(&read(path)?, structure.num_points())?;
            if g.degree() != structure.num_points() {
                return Err(CliError::Io(format!(
                    "group degree {} differs from the {} points of the design",
                    g.degree(),
                    structure.num_points()
                )));
            }
            group_json(&g, &structure, verdict.raw().r)?
        }
        None => Value::Null,
    };
    let inputs = json!({
        "in": input.display().to_string(),
        "group": group.map(|p| p.display().to_string()),
    });
    Ok(Report::new("check", inputs, results, Status::Ok))
}
