mod check;
mod construct;
mod feasible;
mod tables;

use flagrep_core::designs::{DesignVerdict, IncidenceStructure};
use flagrep_core::permgroup::PermutationGroup;
use serde_json::{json, Value};

use crate::report::CliError;

pub use check::check;
pub use construct::construct;
pub use feasible::feasible;
pub use tables::{table2_rows, verify_tables, Table2Row};

pub const THREADS_ENV: &str = "FLAGREP_THREADS";

/// A pool sized by `FLAGREP_THREADS`, or rayon's default when unset.
pub fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        match raw.trim().parse::<usize>() {
            Ok(n) if n >= 1 => builder = builder.num_threads(n),
            _ => return Err(CliError::Usage(format!("{THREADS_ENV} must be an integer >= 1, got {raw:?}"))),
        }
    }
    builder.build().map_err(|e| CliError::Usage(format!("cannot start thread pool: {e}")))
}

/// Flag-count cap for group checks run on constructed designs.
pub const MAX_FLAGS_FOR_GROUP_CHECK: u64 = 200_000;

/// Parameters and simplicity of a structure, whether or not it is a proper design.
pub(crate) fn params_json(verdict: &DesignVerdict) -> Value {
    let raw = verdict.raw();
    let r_prime = flagrep_core::arith::is_prime(raw.r);
    json!({
        "params": raw,
        "trivial": matches!(verdict, DesignVerdict::Trivial(_)),
        "r_prime": r_prime,
        "simple": verdict.verified().map(|d| d.simple),
    })
}

/// Transitivity, primitivity, flag-transitivity and subdegree divisibility.
pub(crate) fn group_json(g: &PermutationGroup, s: &IncidenceStructure, r: u64) -> Result<Value, CliError> {
    let math = |e: &dyn std::fmt::Display| CliError::Math(e.to_string());
    if !flagrep_core::designs::is_automorphism_group(g, s) {
        return Err(CliError::Math("the group does not permute the blocks".into()));
    }
    let order = g.order().map_err(|e| math(&e))?;
    let transitive = g.is_transitive();
    let mut out = json!({
        "degree": g.degree(),
        "order": order.to_string(),
        "transitive": transitive,
        "flag_orbits": flagrep_core::designs::flag_orbits(g, s).map_err(|e| math(&e))?,
        "flag_transitive": flagrep_core::designs::is_flag_transitive(g, s).map_err(|e| math(&e))?,
    });
    if transitive {
        let subdegrees = g.subdegrees(0).map_err(|e| math(&e))?;
        let nontrivial: Vec<Value> = subdegrees
            .iter()
            .filter(|&&d| d > 1)
            .map(|&d| json!({ "subdegree": d, "r_divides": r > 0 && d as u64 % r == 0 }))
            .collect();
        let all = subdegrees.iter().filter(|&&d| d > 1).all(|&d| r > 0 && d as u64 % r == 0);
        out["primitive"] = json!(g.is_primitive().map_err(|e| math(&e))?);
        out["subdegrees"] = json!(subdegrees);
        out["r_divides_subdegrees"] = json!({ "all": all, "detail": nontrivial });
    } else {
        out["primitive"] = json!(false);
        out["subdegrees"] = Value::Null;
        out["r_divides_subdegrees"] = Value::Null;
    }
    Ok(out)
}
