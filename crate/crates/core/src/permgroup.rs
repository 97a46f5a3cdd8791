//! Permutation groups at desk scale: orbits, a deterministic Schreier-Sims
//! stabilizer chain, point stabilizers, subdegrees and primitivity.
//!
//! Points are `0..degree`. Composition follows the left-to-right convention:
//! `(a * b)(x) = b(a(x))`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::FactoredInteger;

pub const MAX_DEGREE: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group is not transitive")]
    NotTransitive,
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("generator of degree {found} in a group of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("cannot parse cycle notation: {0}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;
    fn try_from(images: Vec<usize>) -> Result<Self, PermError> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotAPermutation(format!("{images:?}")));
            }
        }
        Ok(Self { images })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    /// Commas may separate entries.
    pub fn from_cycles(s: &str, degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| PermError::Parse(s.to_string()))?;
            let cycle = body
                .0
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(x) if (1..=degree).contains(&x) => Ok(x - 1),
                    Ok(x) => Err(PermError::PointOutOfRange { point: x, degree }),
                    Err(_) => Err(PermError::Parse(s.to_string())),
                })
                .collect::<Result<Vec<_>, _>>()?;
            for (i, &x) in cycle.iter().enumerate() {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(PermError::NotAPermutation(format!("point {} repeated in {s}", x + 1)));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
            rest = body.1.trim_start();
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &x)| i != x)
    }

    /// Disjoint cycles of length at least 2, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if done[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            done[start] = true;
            let mut x = self.images[start];
            while x != start {
                done[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    /// `transversal[x]` maps `base` to `x`, for `x` in the basic orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct StabilizerChain {
    levels: Vec<Level>,
    strong_gens: Vec<Permutation>,
}

impl StabilizerChain {
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_gens
    }

    pub fn order(&self) -> FactoredInteger {
        self.levels.iter().fold(FactoredInteger::one(), |acc, l| {
            acc.multiply(&FactoredInteger::from_u64(l.orbit.len() as u64).expect("orbit is nonempty"))
        })
    }

    /// Strong generators fixing every base point before `level`.
    fn gens_at(&self, level: usize) -> Vec<&Permutation> {
        let prefix: Vec<usize> = self.levels[..level].iter().map(|l| l.base).collect();
        self.strong_gens.iter().filter(|g| prefix.iter().all(|&b| g.image(b) == b)).collect()
    }

    /// Strips `g` through the levels from `from` on. Returns the residue and the
    /// level where stripping stopped (`levels.len()` when it went all the way).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let x = g.image(level.base);
            match &level.transversal[x] {
                Some(t) => g = g.then(&t.inverse()),
                None => return (g, i),
            }
        }
        let depth = self.levels.len();
        (g, depth)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, depth) = self.sift(g.clone(), 0);
        depth == self.levels.len() && h.is_identity()
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let gens: Vec<Permutation> = self.gens_at(i).into_iter().cloned().collect();
        let level = &mut self.levels[i];
        let mut queue: VecDeque<usize> = level.orbit.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = s.image(x);
                if level.transversal[y].is_none() {
                    let t = level.transversal[x].as_ref().expect("orbit point has a transversal").then(s);
                    level.transversal[y] = Some(t);
                    level.orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
    }

    /// Adds `g` (which fixes the first `i` base points) to the strong generators
    /// and restores completeness of the chain from level `i` down.
    fn add_generator(&mut self, i: usize, g: Permutation, base_prefix: &[usize]) {
        let degree = g.degree();
        if i == self.levels.len() {
            let base = base_prefix
                .get(i)
                .copied()
                .or_else(|| g.smallest_moved_point())
                .expect("nontrivial generator");
            let mut transversal = vec![None; degree];
            transversal[base] = Some(Permutation::identity(degree));
            self.levels.push(Level { base, transversal, orbit: vec![base] });
        }
        self.strong_gens.push(g);
        self.rebuild_orbit(i);
        loop {
            let mut grew = false;
            let orbit = self.levels[i].orbit.clone();
            let gens: Vec<Permutation> = self.gens_at(i).into_iter().cloned().collect();
            'scan: for &u in &orbit {
                for s in &gens {
                    let tu = self.levels[i].transversal[u].as_ref().expect("orbit point");
                    let us = s.image(u);
                    let tus = self.levels[i].transversal[us].as_ref().expect("orbit closed");
                    let schreier = tu.then(s).then(&tus.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, _) = self.sift(schreier, i + 1);
                    if !h.is_identity() {
                        self.add_generator(i + 1, h, base_prefix);
                        grew = true;
                        break 'scan;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }

    fn build(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> Self {
        let mut chain = StabilizerChain::default();
        // levels for an explicit base prefix exist even if every generator fixes them
        for &b in base_prefix {
            let mut transversal = vec![None; degree];
            transversal[b] = Some(Permutation::identity(degree));
            chain.levels.push(Level { base: b, transversal, orbit: vec![b] });
        }
        for g in gens {
            if g.is_identity() {
                continue;
            }
            let (h, _) = chain.sift(g.clone(), 0);
            if !h.is_identity() {
                // added at the top; the Schreier scan pushes it down as needed
                chain.add_generator(0, h, base_prefix);
            }
        }
        chain
    }
}

#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        Self { degree: self.degree, generators: self.generators.clone(), chain: self.chain.clone() }
    }
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch { expected: degree, found: g.degree() });
        }
        Ok(Self { degree, generators, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        Self { degree, generators: Vec::new(), chain: OnceLock::new() }
    }

    /// Generators in 1-based cycle notation.
    pub fn from_cycle_strings<S: AsRef<str>>(degree: usize, gens: &[S]) -> Result<Self, PermError> {
        let gens = gens.iter().map(|s| Permutation::from_cycles(s.as_ref(), degree)).collect::<Result<_, _>>()?;
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn check_point(&self, point: usize) -> Result<(), PermError> {
        if point < self.degree {
            Ok(())
        } else {
            Err(PermError::PointOutOfRange { point, degree: self.degree })
        }
    }

    /// The stabilizer chain, built on first use with the smallest-moved-point base.
    pub fn chain(&self) -> Result<&StabilizerChain, PermError> {
        if self.degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(self.degree));
        }
        Ok(self.chain.get_or_init(|| StabilizerChain::build(self.degree, &self.generators, &[])))
    }

    pub fn order(&self) -> Result<FactoredInteger, PermError> {
        Ok(self.chain()?.order())
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool, PermError> {
        Ok(g.degree() == self.degree && self.chain()?.contains(g))
    }

    pub fn orbit(&self, point: usize) -> Result<BTreeSet<usize>, PermError> {
        self.check_point(point)?;
        let mut seen = BTreeSet::from([point]);
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.image(x);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Ok(seen)
    }

    /// All orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if done[x] {
                continue;
            }
            let orbit = self.orbit(x).expect("point in range");
            for &y in &orbit {
                done[y] = true;
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    pub fn point_stabilizer(&self, point: usize) -> Result<PermutationGroup, PermError> {
        self.check_point(point)?;
        if self.degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(self.degree));
        }
        let chain = StabilizerChain::build(self.degree, &self.generators, &[point]);
        let mut gens: Vec<Permutation> =
            chain.strong_gens.iter().filter(|g| g.image(point) == point).cloned().collect();
        gens.sort();
        gens.dedup();
        let stab = PermutationGroup::new(self.degree, gens)?;
        // the chain below the first level is already a chain for the stabilizer
        let sub = StabilizerChain {
            levels: chain.levels[1..].to_vec(),
            strong_gens: stab.generators.clone(),
        };
        let _ = stab.chain.set(sub);
        Ok(stab)
    }

    /// Orbit lengths of the stabilizer of `point`, sorted ascending (the trivial
    /// orbit counts as 1).
    pub fn subdegrees(&self, point: usize) -> Result<Vec<usize>, PermError> {
        self.check_point(point)?;
        if !self.is_transitive() {
            return Err(PermError::NotTransitive);
        }
        let stab = self.point_stabilizer(point)?;
        let mut sizes: Vec<usize> = stab.orbits().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        Ok(sizes)
    }

    /// Smallest block containing `0` and `beta`, as a union-find partition.
    fn minimal_block_partition(&self, beta: usize) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue = VecDeque::from([(0usize, beta)]);
        let (r0, rb) = (find(&mut parent, 0), find(&mut parent, beta));
        parent[rb.max(r0)] = rb.min(r0);
        while let Some((a, b)) = queue.pop_front() {
            for g in &self.generators {
                let (x, y) = (g.image(a), g.image(b));
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                    queue.push_back((x, y));
                }
            }
        }
        (0..self.degree).map(|x| find(&mut parent, x)).collect()
    }

    /// The block of `0` in the finest block system joining `0` and `beta`.
    pub fn minimal_block(&self, beta: usize) -> Result<Vec<usize>, PermError> {
        self.check_point(beta)?;
        let roots = self.minimal_block_partition(beta);
        Ok((0..self.degree).filter(|&x| roots[x] == roots[0]).collect())
    }

    pub fn is_primitive(&self) -> Result<bool, PermError> {
        if !self.is_transitive() {
            return Err(PermError::NotTransitive);
        }
        for beta in 1..self.degree {
            let roots = self.minimal_block_partition(beta);
            if roots.iter().any(|&r| r != roots[0]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sizes of the orbits on an arbitrary finite set on which the generators act
    /// through `act`, keyed by orbit representative (least element).
    pub fn orbit_sizes_on<T, F>(&self, items: &[T], act: F) -> BTreeMap<usize, usize>
    where
        T: Ord + Clone,
        F: Fn(&Permutation, &T) -> T,
    {
        let index: BTreeMap<&T, usize> = items.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut done = vec![false; items.len()];
        let mut sizes = BTreeMap::new();
        for start in 0..items.len() {
            if done[start] {
                continue;
            }
            done[start] = true;
            let mut count = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for g in &self.generators {
                    let img = act(g, &items[i]);
                    if let Some(&j) = index.get(&img) {
                        if !done[j] {
                            done[j] = true;
                            count += 1;
                            queue.push_back(j);
                        }
                    }
                }
            }
            sizes.insert(start, count);
        }
        sizes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycle_strings(degree, gens).unwrap()
    }

    #[test]
    fn cycle_parse_and_display() {
        let p = Permutation::from_cycles("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3, 5]);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::from_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::from_cycles("(1 9)", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn composition_order() {
        let a = Permutation::from_cycles("(1 2)", 3).unwrap();
        let b = Permutation::from_cycles("(2 3)", 3).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).image(0), 2);
    }

    #[test]
    fn orbits() {
        assert_eq!(group(5, &["(1 2 3 4 5)"]).orbit(0).unwrap().len(), 5);
        assert_eq!(PermutationGroup::trivial(5).orbit(3).unwrap(), BTreeSet::from([3]));
        assert_eq!(group(4, &["(1 2)(3 4)"]).orbit(0).unwrap(), BTreeSet::from([0, 1]));
        assert!(matches!(group(4, &[]).orbit(4), Err(PermError::PointOutOfRange { .. })));
    }

    #[test]
    fn orders() {
        assert_eq!(group(5, &["(1 2 3 4 5)", "(1 2 3)"]).order().unwrap().to_u64(), Some(60));
        let m11 = group(11, &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"]);
        assert_eq!(m11.order().unwrap().to_u64(), Some(7920));
        assert_eq!(PermutationGroup::trivial(4).order().unwrap().to_u64(), Some(1));
    }

    #[test]
    fn stabilizers_and_subdegrees() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        assert_eq!(a5.point_stabilizer(0).unwrap().order().unwrap().to_u64(), Some(12));
        assert_eq!(a5.subdegrees(0).unwrap(), vec![1, 4]);
        let c5 = group(5, &["(1 2 3 4 5)"]);
        assert_eq!(c5.subdegrees(2).unwrap(), vec![1; 5]);
        assert_eq!(group(4, &["(1 2)"]).subdegrees(0), Err(PermError::NotTransitive));
    }

    #[test]
    fn primitivity() {
        assert!(!group(4, &["(1 2 3 4)"]).is_primitive().unwrap());
        assert_eq!(group(4, &["(1 2 3 4)"]).minimal_block(2).unwrap(), vec![0, 2]);
        assert!(group(3, &["(1 2 3)", "(1 2)"]).is_primitive().unwrap());
    }
}
