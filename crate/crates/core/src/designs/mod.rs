//! Incidence structures, 2-design verification, orbit designs, base-block
//! search and flag-transitivity.

pub mod catalog;

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::feasibility::{DesignParams, FeasibilityError};
use crate::geometry::GeometryError;
use crate::permgroup::{PermError, Permutation, PermutationGroup};

pub use catalog::{table1_catalog, verify_table1_entry, Table1Check, Table1Entry};

/// Base-block search packs blocks into a `u128`.
pub const MAX_SEARCH_DEGREE: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DesignError {
    #[error("not a 2-design: {0}")]
    NotADesign(String),
    #[error("invalid incidence structure: {0}")]
    InvalidStructure(String),
    #[error("group is not transitive on points")]
    NotTransitive,
    #[error("not an automorphism group: {0}")]
    NotAnAutomorphismGroup(String),
    #[error("degree {0} too large for base-block search")]
    DegreeTooLarge(usize),
    #[error("cannot parse design: {0}")]
    Parse(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Feasibility(#[from] FeasibilityError),
}

/// Points `0..num_points`; blocks sorted, and the block list sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceStructure {
    num_points: usize,
    blocks: Vec<Vec<usize>>,
    multiset: bool,
}

/// Serialized form: `{"v": N, "blocks": [[...], ...]}` with 0-based points.
#[derive(Debug, Serialize, Deserialize)]
struct DesignJson {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    /// Rejects repeated blocks.
    pub fn new(num_points: usize, blocks: Vec<Vec<usize>>) -> Result<Self, DesignError> {
        Self::build(num_points, blocks, false)
    }

    /// Allows repeated blocks.
    pub fn new_multiset(num_points: usize, blocks: Vec<Vec<usize>>) -> Result<Self, DesignError> {
        Self::build(num_points, blocks, true)
    }

    fn build(num_points: usize, blocks: Vec<Vec<usize>>, multiset: bool) -> Result<Self, DesignError> {
        let mut canon = Vec::with_capacity(blocks.len());
        for (i, mut b) in blocks.into_iter().enumerate() {
            if b.is_empty() {
                return Err(DesignError::InvalidStructure(format!("block {i} is empty")));
            }
            b.sort_unstable();
            if let Some(&x) = b.iter().find(|&&x| x >= num_points) {
                return Err(DesignError::InvalidStructure(format!("block {i} has point {x} >= v = {num_points}")));
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(DesignError::InvalidStructure(format!("block {i} repeats a point")));
            }
            canon.push(b);
        }
        canon.sort();
        if !multiset {
            if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
                return Err(DesignError::InvalidStructure(format!("repeated block {:?}", w[0])));
            }
        }
        Ok(Self { num_points, blocks: canon, multiset })
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_multiset(&self) -> bool {
        self.multiset
    }

    pub fn is_simple(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0] != w[1])
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DesignJson { v: self.num_points, blocks: self.blocks.clone() })
            .expect("plain data serializes")
    }

    /// Accepts the `to_json` format; repeated blocks are allowed.
    pub fn from_json(text: &str) -> Result<Self, DesignError> {
        let d: DesignJson = serde_json::from_str(text).map_err(|e| DesignError::Parse(e.to_string()))?;
        Self::new_multiset(d.v, d.blocks)
    }

    /// 0/1 rows for points, columns for blocks.
    pub fn incidence_matrix(&self) -> String {
        let mut out = String::with_capacity(self.num_points * (self.blocks.len() + 1));
        for x in 0..self.num_points {
            for b in &self.blocks {
                out.push(if b.binary_search(&x).is_ok() { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_incidence_matrix(text: &str) -> Result<Self, DesignError> {
        let rows: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let b = rows.first().map_or(0, |r| r.len());
        let mut blocks = vec![Vec::new(); b];
        for (x, row) in rows.iter().enumerate() {
            if row.len() != b {
                return Err(DesignError::Parse(format!("row {x} has {} entries, expected {b}", row.len())));
            }
            for (j, c) in row.chars().enumerate() {
                match c {
                    '1' => blocks[j].push(x),
                    '0' => {}
                    _ => return Err(DesignError::Parse(format!("unexpected {c:?} in row {x}"))),
                }
            }
        }
        Self::new_multiset(rows.len(), blocks)
    }
}

/// Parameters read off an incidence structure without the nontriviality checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RawParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedDesign {
    pub structure: IncidenceStructure,
    pub params: DesignParams,
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignVerdict {
    Verified(VerifiedDesign),
    /// `k <= 2`, `k >= v - 1` or `v < 4`; parameters as far as they are constant.
    Trivial(RawParams),
}

impl DesignVerdict {
    pub fn verified(&self) -> Option<&VerifiedDesign> {
        match self {
            DesignVerdict::Verified(d) => Some(d),
            DesignVerdict::Trivial(_) => None,
        }
    }

    pub fn raw(&self) -> RawParams {
        match self {
            DesignVerdict::Verified(d) => {
                let p = d.params;
                RawParams { v: p.v, b: p.b, r: p.r, k: p.k, lambda: p.lambda }
            }
            DesignVerdict::Trivial(p) => *p,
        }
    }
}

/// Checks constant block size, pair count and replication, all recomputed from
/// the incidences. Pairs are checked before points, so a broken design is
/// reported by the first unbalanced pair.
pub fn verify_2design(s: &IncidenceStructure) -> Result<DesignVerdict, DesignError> {
    let v = s.num_points;
    let blocks = &s.blocks;
    let mut replication = vec![0u64; v];
    let mut pairs = vec![0u64; v * v];
    for b in blocks {
        for (i, &x) in b.iter().enumerate() {
            replication[x] += 1;
            for &y in &b[i + 1..] {
                pairs[x * v + y] += 1;
            }
        }
    }
    let k = blocks.first().map_or(0, Vec::len) as u64;
    let r = replication.first().copied().unwrap_or(0);
    let lambda = if v >= 2 { pairs[1] } else { 0 };
    let raw = RawParams { v: v as u64, b: blocks.len() as u64, r, k, lambda };
    if v < 4 {
        return Ok(DesignVerdict::Trivial(raw));
    }
    if blocks.is_empty() {
        return Err(DesignError::NotADesign("no blocks".into()));
    }
    if let Some((i, b)) = blocks.iter().enumerate().find(|(_, b)| b.len() as u64 != k) {
        return Err(DesignError::NotADesign(format!("block {i} has size {} but block 0 has size {k}", b.len())));
    }
    for x in 0..v {
        for y in x + 1..v {
            if pairs[x * v + y] != lambda {
                return Err(DesignError::NotADesign(format!(
                    "pair {{{x},{y}}} lies in {} blocks but {{0,1}} lies in {lambda}",
                    pairs[x * v + y]
                )));
            }
        }
    }
    // implied by the pair check when k >= 2; singleton blocks still need it
    if let Some(x) = (0..v).find(|&x| replication[x] != r) {
        return Err(DesignError::NotADesign(format!(
            "point {x} lies on {} blocks but point 0 lies on {r}",
            replication[x]
        )));
    }
    if k <= 2 || k + 1 >= v as u64 {
        return Ok(DesignVerdict::Trivial(raw));
    }
    let params = DesignParams::new(raw.v, raw.b, r, k, lambda)?;
    Ok(DesignVerdict::Verified(VerifiedDesign { structure: s.clone(), params, simple: s.is_simple() }))
}

fn image_of_block(g: &Permutation, block: &[usize]) -> Vec<usize> {
    let mut img: Vec<usize> = block.iter().map(|&x| g.image(x)).collect();
    img.sort_unstable();
    img
}

/// The blocks of the orbit of `base_block` under `g`.
pub fn orbit_design(g: &PermutationGroup, base_block: &[usize]) -> Result<IncidenceStructure, DesignError> {
    let v = g.degree();
    if !g.is_transitive() {
        return Err(DesignError::NotTransitive);
    }
    let base: BTreeSet<usize> = base_block.iter().copied().collect();
    if base.is_empty() || base.len() >= v || base.len() != base_block.len() || base.iter().any(|&x| x >= v) {
        return Err(DesignError::InvalidStructure(format!(
            "base block {base_block:?} is not a nonempty proper subset of 0..{v}"
        )));
    }
    let base: Vec<usize> = base.into_iter().collect();
    let mut seen = BTreeSet::from([base.clone()]);
    let mut queue = VecDeque::from([base]);
    while let Some(b) = queue.pop_front() {
        for s in g.generators() {
            let img = image_of_block(s, &b);
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    IncidenceStructure::new(v, seen.into_iter().collect())
}

fn mask_image(g: &Permutation, mut mask: u128) -> u128 {
    let mut out = 0u128;
    while mask != 0 {
        let x = mask.trailing_zeros() as usize;
        out |= 1u128 << g.image(x);
        mask &= mask - 1;
    }
    out
}

/// Orbit of `mask`, or `None` once it exceeds `limit` blocks.
fn mask_orbit(gens: &[Permutation], mask: u128, limit: usize) -> Option<Vec<u128>> {
    let mut seen = BTreeSet::from([mask]);
    let mut queue = VecDeque::from([mask]);
    while let Some(m) = queue.pop_front() {
        for s in gens {
            let img = mask_image(s, m);
            if seen.insert(img) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(img);
            }
        }
    }
    Some(seen.into_iter().collect())
}

fn pairs_balanced(v: usize, blocks: &[u128], lambda: u64) -> bool {
    let mut count = vec![0u64; v * v];
    for &m in blocks {
        let pts: Vec<usize> = (0..v).filter(|&x| m >> x & 1 == 1).collect();
        for (i, &x) in pts.iter().enumerate() {
            for &y in &pts[i + 1..] {
                count[x * v + y] += 1;
            }
        }
    }
    (0..v).all(|x| (x + 1..v).all(|y| count[x * v + y] == lambda))
}

/// The lexicographically least `k`-subset containing `0` whose orbit is a
/// 2-design with the given `lambda`, if any.
pub fn find_base_block(g: &PermutationGroup, k: usize, lambda: u64) -> Result<Option<Vec<usize>>, DesignError> {
    let v = g.degree();
    if v > MAX_SEARCH_DEGREE {
        return Err(DesignError::DegreeTooLarge(v));
    }
    if !g.is_transitive() {
        return Err(DesignError::NotTransitive);
    }
    if k <= 2 || k + 1 >= v {
        return Err(DesignError::InvalidStructure(format!("k = {k} is trivial for v = {v}")));
    }
    // a 2-(v,k,lambda) design has exactly b = lambda v (v-1) / (k (k-1)) blocks
    let num = lambda * v as u64 * (v as u64 - 1);
    let den = (k * (k - 1)) as u64;
    if num % den != 0 {
        return Ok(None);
    }
    let b = (num / den) as usize;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mask = subset.iter().fold(0u128, |m, &x| m | 1 << x);
        if let Some(orbit) = mask_orbit(g.generators(), mask, b) {
            if orbit.len() == b && pairs_balanced(v, &orbit, lambda) {
                return Ok(Some(subset));
            }
        }
        // next k-subset of 1..v in lex order, keeping 0 first
        let mut i = k - 1;
        while i > 0 && subset[i] == v - k + i {
            i -= 1;
        }
        if i == 0 {
            return Ok(None);
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Checks that every generator maps blocks to blocks; returns the block index.
fn block_index(g: &PermutationGroup, s: &IncidenceStructure) -> Result<HashMap<Vec<usize>, usize>, DesignError> {
    if g.degree() != s.num_points {
        return Err(DesignError::NotAnAutomorphismGroup(format!(
            "group degree {} but design has {} points",
            g.degree(),
            s.num_points
        )));
    }
    let index: HashMap<Vec<usize>, usize> = s.blocks.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
    for (gi, gen) in g.generators().iter().enumerate() {
        for b in &s.blocks {
            let img = image_of_block(gen, b);
            if !index.contains_key(&img) {
                return Err(DesignError::NotAnAutomorphismGroup(format!(
                    "generator {gi} maps block {b:?} to {img:?}, not a block"
                )));
            }
        }
    }
    Ok(index)
}

pub fn is_automorphism_group(g: &PermutationGroup, s: &IncidenceStructure) -> bool {
    block_index(g, s).is_ok()
}

/// Orbit count of `g` on the flags `(x, B)` with `x` in `B`.
pub fn flag_orbits(g: &PermutationGroup, s: &IncidenceStructure) -> Result<usize, DesignError> {
    let index = block_index(g, s)?;
    let flags: Vec<(usize, usize)> =
        s.blocks.iter().enumerate().flat_map(|(i, b)| b.iter().map(move |&x| (x, i))).collect();
    let sizes = g.orbit_sizes_on(&flags, |gen, &(x, bi)| (gen.image(x), index[&image_of_block(gen, &s.blocks[bi])]));
    Ok(sizes.len())
}

pub fn is_flag_transitive(g: &PermutationGroup, s: &IncidenceStructure) -> Result<bool, DesignError> {
    let flags: usize = s.blocks.iter().map(Vec::len).sum();
    if let Ok(DesignVerdict::Verified(d)) = verify_2design(s) {
        let p = d.params;
        debug_assert_eq!(flags as u64, p.v * p.r);
        debug_assert_eq!(flags as u64, p.b * p.k);
    }
    Ok(flags > 0 && flag_orbits(g, s)? == 1)
}
