use flagrep_core::feasibility::enumerate_feasible;
use serde_json::json;

use crate::report::{CliError, Report, Status};

pub const CSV_HEADER: &str = "v,b,r,k,lambda";

pub fn feasible(max_v: u64, max_lambda: u64, csv: bool) -> Result<(Report, Option<String>), CliError> {
    if max_lambda < 1 {
        return Err(CliError::Usage("--max-lambda must be at least 1".into()));
    }
    let rows = enumerate_feasible(max_v, max_lambda);
    let text = csv.then(|| {
        let mut out = format!("{CSV_HEADER}\n");
        for p in &rows {
            out.push_str(&format!("{},{},{},{},{}\n", p.v, p.b, p.r, p.k, p.lambda));
        }
        out
    });
    let report = Report::new(
        "feasible",
        json!({ "max_v": max_v, "max_lambda": max_lambda }),
        json!({ "count": rows.len(), "rows": rows }),
        Status::Ok,
    );
    Ok((report, text))
}
