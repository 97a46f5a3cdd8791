use std::path::Path;

use flagrep_core::designs::catalog::{table1_catalog, verify_table1_entry};
use flagrep_core::designs::{verify_2design, DesignError, IncidenceStructure};
use flagrep_core::geometry::{wbs_space, GeometryError, ProjectiveSpace};
use flagrep_core::permgroup::PermutationGroup;
use serde_json::{json, Map, Value};

use super::{group_json, params_json, MAX_FLAGS_FOR_GROUP_CHECK};
use crate::report::{CliError, Report, Status};

enum Selector {
    Pg { flat_dim: u32 },
    Wbs,
    Table1(u8),
}

fn parse_selector(design: &str) -> Result<Selector, CliError> {
    match design {
        "pg" => Ok(Selector::Pg { flat_dim: 1 }),
        "pg-planes" => Ok(Selector::Pg { flat_dim: 2 }),
        "wbs" => Ok(Selector::Wbs),
        other => other
            .strip_prefix("table1:")
            .and_then(|n| n.parse::<u8>().ok())
            .map(Selector::Table1)
            .ok_or_else(|| CliError::Usage(format!("unknown design {other:?}; expected pg, pg-planes, wbs or table1:<line>"))),
    }
}

fn geometry_err(e: GeometryError) -> CliError {
    CliError::Usage(e.to_string())
}

fn design_err(e: DesignError) -> CliError {
    match e {
        DesignError::Geometry(g) => geometry_err(g),
        other => CliError::Math(other.to_string()),
    }
}

struct Built {
    structure: IncidenceStructure,
    group: Option<PermutationGroup>,
    extra: Map<String, Value>,
}

fn build(selector: &Selector, q: Option<u64>, dim: Option<u32>) -> Result<Built, CliError> {
    let need_q = || q.ok_or_else(|| CliError::Usage("--q is required for this design".into()));
    match *selector {
        Selector::Pg { flat_dim } => {
            let dim = dim.unwrap_or(flat_dim + 1);
            let space = ProjectiveSpace::new(dim, need_q()?).map_err(geometry_err)?;
            let blocks = space.flats(flat_dim).map_err(geometry_err)?;
            let structure = IncidenceStructure::new(space.points().len(), blocks).map_err(design_err)?;
            let group = space.induced_action(&space.gl_generators(), space.points()).map_err(geometry_err)?;
            let mut extra = Map::new();
            extra.insert("dim".into(), json!(dim));
            extra.insert("flat_dim".into(), json!(flat_dim));
            Ok(Built { structure, group: Some(group), extra })
        }
        Selector::Wbs => {
            let w = wbs_space(need_q()?).map_err(geometry_err)?;
            let mut extra = Map::new();
            extra.insert("hyperoval_size".into(), json!(w.plane.points().len() - w.off_points.len()));
            Ok(Built { structure: w.design, group: None, extra })
        }
        Selector::Table1(line) => {
            let entry = table1_catalog()
                .map_err(design_err)?
                .into_iter()
                .find(|e| e.line == line)
                .ok_or_else(|| CliError::Usage(format!("table 1 has lines 1 to 8, not {line}")))?;
            let check = verify_table1_entry(&entry).map_err(design_err)?;
            let mut extra = Map::new();
            extra.insert("line".into(), json!(line));
            extra.insert("socle".into(), json!(entry.socle));
            extra.insert("stabilizer".into(), json!(entry.stabilizer));
            extra.insert("action".into(), json!(entry.action));
            extra.insert("expected".into(), json!(entry.expected));
            extra.insert("matches_expected".into(), json!(check.matches_expected));
            extra.insert("base_block".into(), json!(check.base_block));
            Ok(Built { structure: check.design, group: Some(entry.group), extra })
        }
    }
}

pub fn construct(design: &str, q: Option<u64>, dim: Option<u32>, out: Option<&Path>) -> Result<Report, CliError> {
    let selector = parse_selector(design)?;
    let built = build(&selector, q, dim)?;
    let verdict = verify_2design(&built.structure).map_err(design_err)?;
    let raw = verdict.raw();

    let mut results = params_json(&verdict);
    let mut warnings = Vec::new();
    if !flagrep_core::arith::is_prime(raw.r) {
        warnings.push(format!("r = {} is not prime", raw.r));
    }
    if verdict.verified().is_none() {
        warnings.push(format!("k = {} makes the structure trivial", raw.k));
    }
    let flags = raw.b.saturating_mul(raw.k);
    results["group"] = match &built.group {
        Some(g) if flags <= MAX_FLAGS_FOR_GROUP_CHECK => group_json(g, &built.structure, raw.r)?,
        Some(_) => {
            warnings.push(format!("{flags} flags: group checks skipped"));
            Value::Null
        }
        None => Value::Null,
    };
    results["design"] = built.structure.to_json();
    results["label"] = json!(format!("2-({},{},{})", raw.v, raw.k, raw.lambda));
    results["warnings"] = json!(warnings);
    for (k, v) in built.extra {
        results[k] = v;
    }
    if let Some(path) = out {
        let text = serde_json::to_string(&built.structure.to_json()).expect("design serializes");
        std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }

    let mut inputs = json!({ "design": design, "q": q, "dim": dim });
    if let Some(p) = out {
        inputs["out"] = json!(p.display().to_string());
    }
    Ok(Report::new("construct", inputs, results, Status::Ok))
}
