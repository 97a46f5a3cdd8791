//! The eight small flag-transitive designs with prime replication number,
//! each rebuilt from a bundled group action.
//!
//! Lines 1, 2, 3 and 8 use groups induced by matrices on projective points.
//! Lines 4, 5, 6 and 7 ship literal generators produced by
//! `scripts/derive_generators.py` (automorphism groups of the Paley biplane and
//! its 12-point extension, and Alt7 on 15 of the Fano structures on 7 letters).

use serde::Serialize;

use super::{find_base_block, is_flag_transitive, orbit_design, verify_2design, DesignError, DesignVerdict, IncidenceStructure};
use crate::feasibility::DesignParams;
use crate::geometry::{Matrix, ProjectiveSpace};
use crate::permgroup::PermutationGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockSource {
    /// Least base block found by `find_base_block`.
    Search,
    /// Flats of the given projective dimension in the point space.
    Flats(u32),
}

#[derive(Debug, Clone)]
pub struct Table1Entry {
    pub line: u8,
    pub socle: &'static str,
    pub stabilizer: &'static str,
    pub action: &'static str,
    pub group: PermutationGroup,
    pub k: usize,
    pub lambda: u64,
    pub expected: DesignParams,
    pub source: BlockSource,
    /// Projective space the points come from, for `Flats`.
    space: Option<(u32, u64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Check {
    pub line: u8,
    pub params: DesignParams,
    pub matches_expected: bool,
    pub base_block: Option<Vec<usize>>,
    #[serde(skip)]
    pub design: IncidenceStructure,
    pub group_order: String,
    pub transitive: bool,
    pub primitive: bool,
    pub flag_transitive: bool,
    pub subdegrees: Vec<usize>,
    pub r_divides_subdegrees: bool,
}

fn sl2_generators(p: u32) -> Vec<Matrix> {
    vec![vec![vec![1, 1], vec![0, 1]], vec![vec![0, 1], vec![p - 1, 0]]]
}

fn projective_group(dim: u32, q: u64, matrices: Option<Vec<Matrix>>) -> Result<PermutationGroup, DesignError> {
    let space = ProjectiveSpace::new(dim, q)?;
    let gens = matrices.unwrap_or_else(|| space.gl_generators());
    Ok(space.induced_action(&gens, space.points())?)
}

const PSL2_11: [&str; 2] = ["(3 6)(5 8)(7 9)(10 11)", "(1 2 3 4 5 6 7 8 9 10 11)"];
const M11_12: [&str; 2] = ["(5 10)(6 12)(7 8)(9 11)", "(1 2 3 4 5 6 7 8 9 10 11)"];
const ALT7_15: [&str; 2] = ["(1 15 2 11 8 7 14)(3 9 6 5 12 4 13)", "(1 3 2)(4 9 13)(5 11 7)(6 15 10)(8 12 14)"];

pub fn table1_catalog() -> Result<Vec<Table1Entry>, DesignError> {
    let params = |v, b, r, k, l| DesignParams::new(v, b, r, k, l);
    let alt7 = PermutationGroup::from_cycle_strings(15, &ALT7_15)?;
    Ok(vec![
        Table1Entry {
            line: 1,
            socle: "Alt5",
            stabilizer: "D10",
            action: "PSL(2,5) on PG(1,5)",
            group: projective_group(1, 5, Some(sl2_generators(5)))?,
            k: 3,
            lambda: 2,
            expected: params(6, 10, 5, 3, 2)?,
            source: BlockSource::Search,
            space: None,
        },
        Table1Entry {
            line: 2,
            socle: "PSL(2,7)",
            stabilizer: "S4",
            action: "GL(3,2) on PG(2,2)",
            group: projective_group(2, 2, None)?,
            k: 3,
            lambda: 1,
            expected: params(7, 7, 3, 3, 1)?,
            source: BlockSource::Flats(1),
            space: Some((2, 2)),
        },
        Table1Entry {
            line: 3,
            socle: "PSL(2,7)",
            stabilizer: "7:3",
            action: "PSL(2,7) on PG(1,7)",
            group: projective_group(1, 7, Some(sl2_generators(7)))?,
            k: 4,
            lambda: 3,
            expected: params(8, 14, 7, 4, 3)?,
            source: BlockSource::Search,
            space: None,
        },
        Table1Entry {
            line: 4,
            socle: "PSL(2,11)",
            stabilizer: "Alt5",
            action: "PSL(2,11) on 11 points",
            group: PermutationGroup::from_cycle_strings(11, &PSL2_11)?,
            k: 5,
            lambda: 2,
            expected: params(11, 11, 5, 5, 2)?,
            source: BlockSource::Search,
            space: None,
        },
        Table1Entry {
            line: 5,
            socle: "M11",
            stabilizer: "PSL(2,11)",
            action: "M11 on 12 points",
            group: PermutationGroup::from_cycle_strings(12, &M11_12)?,
            k: 6,
            lambda: 5,
            expected: params(12, 22, 11, 6, 5)?,
            source: BlockSource::Search,
            space: None,
        },
        Table1Entry {
            line: 6,
            socle: "Alt7",
            stabilizer: "PSL(2,7)",
            action: "Alt7 on 15 points",
            group: alt7.clone(),
            k: 7,
            lambda: 3,
            expected: params(15, 15, 7, 7, 3)?,
            source: BlockSource::Search,
            space: None,
        },
        Table1Entry {
            line: 7,
            socle: "Alt7",
            stabilizer: "PSL(2,7)",
            action: "Alt7 on 15 points",
            group: alt7,
            k: 3,
            lambda: 1,
            expected: params(15, 35, 7, 3, 1)?,
            source: BlockSource::Search,
            space: None,
        },
        Table1Entry {
            line: 8,
            socle: "Alt8",
            stabilizer: "2^3:PSL(3,2)",
            action: "GL(4,2) on PG(3,2)",
            group: projective_group(3, 2, None)?,
            k: 3,
            lambda: 1,
            expected: params(15, 35, 7, 3, 1)?,
            source: BlockSource::Flats(1),
            space: Some((3, 2)),
        },
    ])
}

/// Rebuilds the design of one line and checks every claim about its group.
pub fn verify_table1_entry(e: &Table1Entry) -> Result<Table1Check, DesignError> {
    let (design, base_block) = match (e.source, e.space) {
        (BlockSource::Flats(dim), Some((d, q))) => {
            (IncidenceStructure::new(e.group.degree(), ProjectiveSpace::new(d, q)?.flats(dim)?)?, None)
        }
        _ => {
            let block = find_base_block(&e.group, e.k, e.lambda)?.ok_or_else(|| {
                DesignError::NotADesign(format!("no base block with k = {}, lambda = {}", e.k, e.lambda))
            })?;
            (orbit_design(&e.group, &block)?, Some(block))
        }
    };
    let params = match verify_2design(&design)? {
        DesignVerdict::Verified(d) => d.params,
        DesignVerdict::Trivial(p) => {
            return Err(DesignError::NotADesign(format!("line {} rebuilt as a trivial structure {p:?}", e.line)))
        }
    };
    let transitive = e.group.is_transitive();
    let subdegrees = e.group.subdegrees(0)?;
    let r = params.r as usize;
    Ok(Table1Check {
        line: e.line,
        params,
        matches_expected: params == e.expected,
        base_block,
        group_order: e.group.order()?.to_string(),
        transitive,
        primitive: e.group.is_primitive()?,
        flag_transitive: is_flag_transitive(&e.group, &design)?,
        r_divides_subdegrees: subdegrees.iter().filter(|&&d| d > 1).all(|&d| d % r == 0),
        subdegrees,
        design,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_line_reproduces() {
        for e in table1_catalog().unwrap() {
            let c = verify_table1_entry(&e).unwrap();
            println!("line {} {} order {} block {:?} sub {:?}", c.line, c.params, c.group_order, c.base_block, c.subdegrees);
            assert!(c.matches_expected, "line {}: {}", e.line, c.params);
            assert!(c.transitive && c.primitive && c.flag_transitive, "line {}: {c:?}", e.line);
            assert!(c.r_divides_subdegrees, "line {}", e.line);
        }
    }
}
