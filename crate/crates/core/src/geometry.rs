//! Finite fields GF(p^a), projective spaces PG(d, q), the regular hyperoval and
//! the Witt-Bose-Shrikhande space, and permutation actions induced by matrices.
//!
//! A field element is a `u32` whose base-`p` digits are its coefficients in the
//! polynomial basis `1, x, ..., x^(a-1)`, so `0` and `1` are the field's zero and
//! one and GF(p) is plain residues. The defining polynomial is the Conway
//! polynomial where one is embedded, else the least primitive polynomial in
//! coefficient order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::arith::{is_prime, prime_power_decomposition};
use crate::designs::IncidenceStructure;
use crate::permgroup::{PermError, Permutation, PermutationGroup};

pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds 2^16")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("q = {0} is not a power of 2 at least 4")]
    NotCharacteristicTwo(u64),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("point set not closed under the action: {0}")]
    NotClosed(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Conway polynomials, coefficients from the constant term up (monic term omitted).
const CONWAY: &[(u64, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (5, 2, &[2, 4]),
    (5, 3, &[3, 3, 0]),
    (7, 2, &[3, 6]),
    (11, 2, &[2, 7]),
    (13, 2, &[2, 12]),
];

#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    a: u32,
    q: u32,
    /// Monic defining polynomial, constant term first, length `a + 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Field {
    pub fn new(p: u64, a: u32) -> Result<Self, GeometryError> {
        if !is_prime(p) {
            return Err(GeometryError::NotPrime(p));
        }
        if a == 0 {
            return Err(GeometryError::BadDimension("field degree 0".into()));
        }
        let q = p.checked_pow(a).filter(|&q| q <= MAX_FIELD_ORDER).ok_or(GeometryError::FieldTooLarge(
            p.saturating_pow(a),
        ))?;
        let (p, q) = (p as u32, q as u32);
        if a == 1 {
            let g = (2..p.max(3)).find(|&g| mult_order_mod(g, p) == p - 1).unwrap_or(1);
            let mut f = Field { p, a, q, modulus: vec![p - g, 1], exp: Vec::new(), log: Vec::new() };
            f.fill_tables();
            return Ok(f);
        }
        let conway = CONWAY.iter().find(|&&(cp, ca, _)| cp == p as u64 && ca == a).map(|&(_, _, low)| low.to_vec());
        let candidates = conway.into_iter().chain((0..q).map(|n| digits(n, p, a)));
        for low in candidates {
            let mut modulus = low;
            modulus.push(1);
            let mut f = Field { p, a, q, modulus, exp: Vec::new(), log: Vec::new() };
            if f.modulus[0] != 0 && f.fill_tables() {
                return Ok(f);
            }
        }
        unreachable!("a primitive polynomial of every degree exists")
    }

    pub fn of_order(q: u64) -> Result<Self, GeometryError> {
        if q > MAX_FIELD_ORDER {
            return Err(GeometryError::FieldTooLarge(q));
        }
        let (p, a) = prime_power_decomposition(q).ok_or(GeometryError::NotPrimePower(q))?;
        Self::new(p, a)
    }

    /// Powers of the generator (`x`, or a primitive root when `a = 1`); false if
    /// it is not primitive.
    fn fill_tables(&mut self) -> bool {
        let n = (self.q - 1) as usize;
        let gen = if self.a == 1 { self.p - self.modulus[0] } else { self.p };
        self.exp = Vec::with_capacity(2 * n);
        self.log = vec![0; self.q as usize];
        let mut seen = vec![false; self.q as usize];
        let mut x = 1u32;
        for i in 0..n {
            if seen[x as usize] {
                return false;
            }
            seen[x as usize] = true;
            self.exp.push(x);
            self.log[x as usize] = i as u32;
            x = self.poly_mul(x, gen);
        }
        if x != 1 {
            return false;
        }
        let head: Vec<u32> = self.exp.clone();
        self.exp.extend(head);
        true
    }

    /// Schoolbook product reduced by the modulus; only used to build tables.
    fn poly_mul(&self, x: u32, y: u32) -> u32 {
        let (p, a) = (self.p, self.a as usize);
        let (dx, dy) = (digits(x, p, a as u32), digits(y, p, a as u32));
        let mut prod = vec![0u32; 2 * a];
        for (i, &u) in dx.iter().enumerate() {
            for (j, &w) in dy.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * w) % p;
            }
        }
        for deg in (a..2 * a).rev() {
            let c = prod[deg];
            if c != 0 {
                for (k, &m) in self.modulus.iter().enumerate().take(a) {
                    let idx = deg - a + k;
                    prod[idx] = (prod[idx] + (p - c) * m % p) % p;
                }
                prod[deg] = 0;
            }
        }
        undigits(&prod[..a], p)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.a
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    /// Defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn primitive_element(&self) -> u32 {
        self.exp[1.min(self.exp.len() - 1)]
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        if self.p == 2 {
            return x ^ y;
        }
        if self.a == 1 {
            return (x + y) % self.p;
        }
        let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
        while x > 0 || y > 0 {
            out += (x % self.p + y % self.p) % self.p * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, x: u32) -> u32 {
        if self.p == 2 {
            return x;
        }
        let (mut x, mut out, mut place) = (x, 0, 1);
        while x > 0 {
            out += (self.p - x % self.p) % self.p * place;
            x /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        self.exp[(self.log[x as usize] + self.log[y as usize]) as usize]
    }

    pub fn inv(&self, x: u32) -> Result<u32, GeometryError> {
        if x == 0 {
            return Err(GeometryError::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(self.exp[((n - self.log[x as usize]) % n) as usize])
    }

    pub fn div(&self, x: u32, y: u32) -> Result<u32, GeometryError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[x as usize] as u64 * (e % n)) % n) as usize]
    }
}

fn digits(mut n: u32, p: u32, a: u32) -> Vec<u32> {
    (0..a)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn mult_order_mod(g: u32, p: u32) -> u32 {
    let mut x = g % p;
    let mut k = 1;
    while x != 1 {
        if x == 0 || k > p {
            return 0;
        }
        x = x * g % p;
        k += 1;
    }
    k
}

/// Homogeneous coordinates, first nonzero entry equal to 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(pub Vec<u32>);

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", cs.join(":"))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type Matrix = Vec<Vec<u32>>;

/// PG(d, q): the field, its points in lexicographic order and an index.
#[derive(Debug, Clone)]
pub struct ProjectiveSpace {
    field: Field,
    dim: u32,
    points: Vec<ProjectivePoint>,
    index: HashMap<Vec<u32>, usize>,
}

impl ProjectiveSpace {
    pub fn new(dim: u32, q: u64) -> Result<Self, GeometryError> {
        Self::over(dim, Field::of_order(q)?)
    }

    pub fn over(dim: u32, field: Field) -> Result<Self, GeometryError> {
        if dim == 0 {
            return Err(GeometryError::BadDimension("projective dimension 0".into()));
        }
        let q = field.order();
        let n = dim as usize + 1;
        let count = q
            .checked_pow(dim + 1)
            .map(|qn| (qn - 1) / (q - 1))
            .filter(|&c| c <= 1 << 22)
            .ok_or_else(|| GeometryError::BadDimension(format!("PG({dim},{q}) has too many points")))?;
        let mut points = Vec::with_capacity(count as usize);
        // leading 1 at `lead`; lexicographic order puts later leads first
        for lead in (0..n).rev() {
            let free = n - lead - 1;
            for tail in 0..q.pow(free as u32) {
                let mut coords = vec![0u32; n];
                coords[lead] = 1;
                let mut t = tail;
                for c in (lead + 1..n).rev() {
                    coords[c] = (t % q) as u32;
                    t /= q;
                }
                points.push(ProjectivePoint(coords));
            }
        }
        let index = points.iter().enumerate().map(|(i, p)| (p.0.clone(), i)).collect();
        Ok(Self { field, dim, points, index })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// Scales a nonzero vector so its first nonzero entry is 1.
    pub fn normalize(&self, coords: &[u32]) -> Option<ProjectivePoint> {
        let lead = *coords.iter().find(|&&c| c != 0)?;
        let inv = self.field.inv(lead).ok()?;
        Some(ProjectivePoint(coords.iter().map(|&c| self.field.mul(c, inv)).collect()))
    }

    pub fn index_of(&self, coords: &[u32]) -> Option<usize> {
        let p = self.normalize(coords)?;
        self.index.get(&p.0).copied()
    }

    /// All flats of projective dimension `flat_dim`, as sorted point-index sets,
    /// sorted lexicographically. Each flat is enumerated once from its reduced
    /// row echelon basis.
    pub fn flats(&self, flat_dim: u32) -> Result<Vec<Vec<usize>>, GeometryError> {
        if flat_dim < 1 || flat_dim >= self.dim {
            return Err(GeometryError::BadDimension(format!(
                "flat dimension {flat_dim} not in 1..{}",
                self.dim
            )));
        }
        let n = self.dim as usize + 1;
        let m = flat_dim as usize + 1;
        let q = self.field.order();
        let mut out = Vec::new();
        for pivots in combinations(n, m) {
            let free: Vec<(usize, usize)> = (0..m)
                .flat_map(|i| {
                    let piv = &pivots;
                    (piv[i] + 1..n).filter(move |j| !piv.contains(j)).map(move |j| (i, j))
                })
                .collect();
            let total = q.pow(free.len() as u32);
            for assignment in 0..total {
                let mut basis = vec![vec![0u32; n]; m];
                for (i, &pv) in pivots.iter().enumerate() {
                    basis[i][pv] = 1;
                }
                let mut t = assignment;
                for &(i, j) in free.iter().rev() {
                    basis[i][j] = (t % q) as u32;
                    t /= q;
                }
                out.push(self.span(&basis));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Point indices of the projective span of the given rows.
    pub fn span(&self, basis: &[Vec<u32>]) -> Vec<usize> {
        let q = self.field.order();
        let n = self.dim as usize + 1;
        let m = basis.len();
        let mut pts = BTreeSet::new();
        for combo in 1..q.pow(m as u32) {
            let mut v = vec![0u32; n];
            let mut t = combo;
            for row in basis.iter().rev() {
                let c = (t % q) as u32;
                t /= q;
                for (x, &b) in v.iter_mut().zip(row) {
                    *x = self.field.add(*x, self.field.mul(c, b));
                }
            }
            if let Some(i) = self.index_of(&v) {
                pts.insert(i);
            }
        }
        pts.into_iter().collect()
    }

    /// `x M` for a row vector `x`.
    pub fn apply(&self, x: &[u32], m: &Matrix) -> Vec<u32> {
        let n = x.len();
        (0..n)
            .map(|j| (0..n).fold(0, |acc, i| self.field.add(acc, self.field.mul(x[i], m[i][j]))))
            .collect()
    }

    pub fn determinant(&self, m: &Matrix) -> u32 {
        determinant(&self.field, m)
    }

    /// Generators of GL(d+1, q): transvections `I + c E_{01}` for `c` in an
    /// additive basis, the cyclic coordinate shift, and `diag(w, 1, ..., 1)`.
    pub fn gl_generators(&self) -> Vec<Matrix> {
        let n = self.dim as usize + 1;
        let f = &self.field;
        let ident = |n: usize| -> Matrix { (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect() };
        let mut gens = Vec::new();
        let w = f.primitive_element();
        for e in 0..f.degree() {
            let mut t = ident(n);
            t[0][1] = f.pow(w, e as u64);
            gens.push(t);
        }
        let mut shift = vec![vec![0u32; n]; n];
        for (i, row) in shift.iter_mut().enumerate() {
            row[(i + 1) % n] = 1;
        }
        gens.push(shift);
        if f.order() > 2 {
            let mut d = ident(n);
            d[0][0] = w;
            gens.push(d);
        }
        gens
    }

    /// The permutation group induced by `matrices` on `points` (indices into that
    /// list). Every matrix must be invertible and preserve the point list.
    pub fn induced_action(
        &self,
        matrices: &[Matrix],
        points: &[ProjectivePoint],
    ) -> Result<PermutationGroup, GeometryError> {
        let n = self.dim as usize + 1;
        let local: HashMap<&[u32], usize> = points.iter().enumerate().map(|(i, p)| (p.0.as_slice(), i)).collect();
        let mut gens = Vec::new();
        for m in matrices {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(GeometryError::BadDimension(format!("matrix is not {n}x{n}")));
            }
            if self.determinant(m) == 0 {
                return Err(GeometryError::SingularMatrix);
            }
            let images = points
                .iter()
                .map(|p| {
                    let img = self.normalize(&self.apply(&p.0, m)).expect("invertible image is nonzero");
                    local.get(img.0.as_slice()).copied().ok_or_else(|| GeometryError::NotClosed(format!("{p} maps to {img}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            gens.push(Permutation::from_images(images)?);
        }
        Ok(PermutationGroup::new(points.len(), gens)?)
    }
}

fn combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    rec(0, n, m, &mut cur, &mut out);
    out
}

pub fn determinant(f: &Field, m: &Matrix) -> u32 {
    let n = m.len();
    let mut a = m.clone();
    let mut det = 1u32;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = f.neg(det);
        }
        det = f.mul(det, a[col][col]);
        let inv = f.inv(a[col][col]).expect("pivot is nonzero");
        for r in col + 1..n {
            let factor = f.mul(a[r][col], inv);
            if factor != 0 {
                for c in col..n {
                    let sub = f.mul(factor, a[col][c]);
                    a[r][c] = f.sub(a[r][c], sub);
                }
            }
        }
    }
    det
}

pub fn pg_points(d: u32, q: u64) -> Result<Vec<ProjectivePoint>, GeometryError> {
    Ok(ProjectiveSpace::new(d, q)?.points)
}

pub fn pg_flats(d: u32, q: u64, flat_dim: u32) -> Result<Vec<Vec<usize>>, GeometryError> {
    ProjectiveSpace::new(d, q)?.flats(flat_dim)
}

fn check_even(q: u64) -> Result<(), GeometryError> {
    match prime_power_decomposition(q) {
        Some((2, a)) if a >= 2 => Ok(()),
        _ => Err(GeometryError::NotCharacteristicTwo(q)),
    }
}

/// The regular hyperoval of PG(2, q): the conic `{(1 : t : t^2)}` with `(0:1:0)`
/// and `(0:0:1)`, sorted.
pub fn hyperoval(q: u64) -> Result<Vec<ProjectivePoint>, GeometryError> {
    check_even(q)?;
    let f = Field::of_order(q)?;
    let mut pts: Vec<ProjectivePoint> = f.elements().map(|t| ProjectivePoint(vec![1, t, f.mul(t, t)])).collect();
    pts.push(ProjectivePoint(vec![0, 1, 0]));
    pts.push(ProjectivePoint(vec![0, 0, 1]));
    pts.sort();
    Ok(pts)
}

/// W(q) with its geometry: points are the external lines of the hyperoval
/// (indices into `lines`), blocks are indexed by the points off the hyperoval.
#[derive(Debug, Clone)]
pub struct WbsSpace {
    pub plane: ProjectiveSpace,
    pub lines: Vec<Vec<usize>>,
    pub external_lines: Vec<usize>,
    pub off_points: Vec<usize>,
    pub design: IncidenceStructure,
}

pub fn wbs_space(q: u64) -> Result<WbsSpace, GeometryError> {
    check_even(q)?;
    let plane = ProjectiveSpace::new(2, q)?;
    let oval: BTreeSet<usize> = hyperoval(q)?.iter().map(|p| plane.index_of(&p.0).expect("oval point")).collect();
    let lines = plane.flats(1)?;
    let external_lines: Vec<usize> =
        (0..lines.len()).filter(|&l| lines[l].iter().all(|x| !oval.contains(x))).collect();
    let off_points: Vec<usize> = (0..plane.points().len()).filter(|x| !oval.contains(x)).collect();
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); plane.points().len()];
    for (i, &l) in external_lines.iter().enumerate() {
        for &x in &lines[l] {
            through[x].push(i);
        }
    }
    let blocks: Vec<Vec<usize>> = off_points.iter().map(|&x| through[x].clone()).collect();
    let design = IncidenceStructure::new(external_lines.len(), blocks)
        .map_err(|e| GeometryError::NotClosed(e.to_string()))?;
    Ok(WbsSpace { plane, lines, external_lines, off_points, design })
}

pub fn wbs_design(q: u64) -> Result<IncidenceStructure, GeometryError> {
    Ok(wbs_space(q)?.design)
}

pub fn points_json(points: &[ProjectivePoint]) -> Value {
    Value::Array(points.iter().map(|p| Value::String(p.to_string())).collect())
}

pub fn flats_json(points: &[ProjectivePoint], flats: &[Vec<usize>]) -> Value {
    json!(flats.iter().map(|f| f.iter().map(|&i| points[i].to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}
