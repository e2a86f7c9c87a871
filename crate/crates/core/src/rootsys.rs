//! Construction of the simple root systems in orthonormal ambient
//! coordinates, with exact integer arithmetic throughout.
//!
//! Every ambient coordinate is stored doubled (`stored = 2 * true`), so the
//! half-integer roots of E6/E7/E8/F4 are plain integer vectors and no
//! rational type is needed anywhere. Inner products consequently come back
//! scaled by four; see [`scaled_inner`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stored coordinates are this multiple of the true orthonormal ones.
pub const COORD_SCALE: i64 = 2;

// ---------------------------------------------------------------------------
// CoordVector
// ---------------------------------------------------------------------------

/// An exact ambient-space vector in doubled-integer coordinates.
///
/// Ordering is lexicographic on the stored coordinates; this is the canonical
/// order used for positive roots and everything derived from them.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoordVector {
    coords: Vec<i64>,
}

impl CoordVector {
    pub fn new(coords: Vec<i64>) -> Self {
        CoordVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        CoordVector {
            coords: vec![0; dim],
        }
    }

    /// The stored form of the basis vector `e_i` (1-based), i.e. with a 2 in
    /// slot `i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= dim);
        let mut coords = vec![0; dim];
        coords[i - 1] = COORD_SCALE;
        CoordVector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn negated(&self) -> Self {
        CoordVector {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }

    /// Componentwise sum. Panics on dimension mismatch; public entry points
    /// validate dimensions before arithmetic ever happens.
    pub fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        CoordVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        CoordVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub(crate) fn add_assign(&mut self, rhs: &Self) {
        debug_assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
    }

    pub(crate) fn add_signed(&mut self, sign: i64, rhs: &Self) {
        debug_assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += sign * b;
        }
    }

    pub(crate) fn sub_assign(&mut self, rhs: &Self) {
        self.add_signed(-1, rhs);
    }
}

impl fmt::Debug for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CoordVector {
    /// Renders true (unscaled) coordinates, using `k/2` for half-integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (pos, c) in self.coords.iter().enumerate() {
            if pos > 0 {
                write!(f, ", ")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        write!(f, ")")
    }
}

/// `4 <a,b>` exactly (each side carries one factor of the coordinate scale).
pub fn scaled_inner(a: &CoordVector, b: &CoordVector) -> Result<i64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(a.coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| x * y)
        .sum())
}

/// The support of a vector: 1-based indices of its nonzero coordinates.
pub fn support(v: &CoordVector) -> BTreeSet<usize> {
    v.coords
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i + 1)
        .collect()
}

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn as_char(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::SpecParse {
                reason: format!("unknown family {other:?}"),
            }),
        }
    }
}

/// A Dynkin type together with its rank, validated on construction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct DynkinLabel {
    family: Family,
    rank: usize,
}

impl DynkinLabel {
    /// Admissible ranks: A n>=1, B n>=2, C n>=2, D n>=4, E in {6,7,8},
    /// F n=4, G n=2.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinLabel { family, rank })
        } else {
            Err(Error::InadmissibleRank { family, rank })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of positive roots, by the closed forms.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// All admissible classical labels with rank at most `max_rank`, in
    /// canonical (family, rank) order.
    pub fn classical_up_to(max_rank: usize) -> Vec<DynkinLabel> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D] {
            let min = match family {
                Family::A => 1,
                Family::B | Family::C => 2,
                _ => 4,
            };
            for rank in min..=max_rank {
                out.push(DynkinLabel { family, rank });
            }
        }
        out
    }

    pub fn exceptional() -> Vec<DynkinLabel> {
        vec![
            DynkinLabel {
                family: Family::E,
                rank: 6,
            },
            DynkinLabel {
                family: Family::E,
                rank: 7,
            },
            DynkinLabel {
                family: Family::E,
                rank: 8,
            },
            DynkinLabel {
                family: Family::F,
                rank: 4,
            },
            DynkinLabel {
                family: Family::G,
                rank: 2,
            },
        ]
    }
}

impl fmt::Display for DynkinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::SpecParse {
                reason: "empty label".into(),
            });
        }
        let family: Family = s[..1].parse()?;
        let rank = s[1..].parse::<usize>().map_err(|_| Error::SpecParse {
            reason: format!("bad rank in label {s:?}"),
        })?;
        DynkinLabel::new(family, rank)
    }
}

// ---------------------------------------------------------------------------
// Signs and root references
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_value(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::Deserialize {
                reason: format!("sign must be 1 or -1, got {other}"),
            }),
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Sign::from_value(v).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// A signed reference to a positive root: `sign * positive_roots[index]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RootRef {
    pub index: usize,
    pub sign: Sign,
}

// ---------------------------------------------------------------------------
// RootSystem
// ---------------------------------------------------------------------------

/// A simple root system: its positive roots in canonical (lexicographic)
/// order, a constant-time membership index over `R+ u -R+`, and the simple
/// roots. Immutable after construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: DynkinLabel,
    ambient_dim: usize,
    positive_roots: Vec<CoordVector>,
    membership: HashMap<Vec<i64>, RootRef>,
    simple_roots: Vec<usize>,
}

impl RootSystem {
    /// Builds the positive roots of `label` exactly as tabulated, sorted
    /// lexicographically on stored coordinates. Deterministic.
    pub fn build(label: DynkinLabel) -> Result<Self> {
        let n = label.rank();
        let (dim, mut roots, simples) = match label.family() {
            Family::A => build_a(n),
            Family::B => build_b(n),
            Family::C => build_c(n),
            Family::D => build_d(n),
            Family::E => build_e(n),
            Family::F => build_f(),
            Family::G => build_g(),
        };
        roots.sort();

        let mut membership = HashMap::with_capacity(2 * roots.len());
        for (index, root) in roots.iter().enumerate() {
            debug_assert!(!root.is_zero());
            let prev = membership.insert(
                root.coords().to_vec(),
                RootRef {
                    index,
                    sign: Sign::Plus,
                },
            );
            debug_assert!(prev.is_none(), "duplicate positive root {root}");
            let prev = membership.insert(
                root.negated().coords().to_vec(),
                RootRef {
                    index,
                    sign: Sign::Minus,
                },
            );
            // A root and its negative both positive would break R+ n -R+ = {}.
            debug_assert!(prev.is_none(), "root {root} and its negative both listed");
        }

        let simple_roots = simples
            .iter()
            .map(|v| {
                let r = membership
                    .get(v.coords())
                    .ok_or_else(|| Error::internal(format!("simple root {v} not in R+")))?;
                if r.sign != Sign::Plus {
                    return Err(Error::internal(format!("simple root {v} stored negated")));
                }
                Ok(r.index)
            })
            .collect::<Result<Vec<_>>>()?;

        debug_assert_eq!(roots.len(), label.positive_root_count());
        Ok(RootSystem {
            label,
            ambient_dim: dim,
            positive_roots: roots,
            membership,
            simple_roots,
        })
    }

    pub fn label(&self) -> DynkinLabel {
        self.label
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn positive_roots(&self) -> &[CoordVector] {
        &self.positive_roots
    }

    pub fn count(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root(&self, index: usize) -> Result<&CoordVector> {
        self.positive_roots.get(index).ok_or(Error::IndexOutOfRange {
            index,
            count: self.count(),
        })
    }

    pub fn simple_root_indices(&self) -> &[usize] {
        &self.simple_roots
    }

    /// Constant-time signed lookup: `Some(RootRef)` iff `v` is in `R+ u -R+`.
    pub fn root_ref(&self, v: &CoordVector) -> Result<Option<RootRef>> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: v.dim(),
                right: self.ambient_dim,
            });
        }
        Ok(self.membership.get(v.coords()).copied())
    }

    pub fn is_root(&self, v: &CoordVector) -> Result<bool> {
        Ok(self.root_ref(v)?.is_some())
    }

    /// The sum of all positive roots, i.e. `2 rho`, in stored coordinates.
    pub fn positive_sum(&self) -> CoordVector {
        let mut acc = CoordVector::zero(self.ambient_dim);
        for root in &self.positive_roots {
            acc.add_assign(root);
        }
        acc
    }

    pub fn validate_index(&self, index: usize) -> Result<()> {
        if index < self.count() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                count: self.count(),
            })
        }
    }

    // -- canonical JSON ------------------------------------------------------

    pub fn to_canonical_json(&self) -> String {
        let doc = RootSystemDoc {
            family: self.label.family(),
            rank: self.label.rank(),
            ambient_dim: self.ambient_dim,
            scale: COORD_SCALE,
            positive_roots: self
                .positive_roots
                .iter()
                .map(|r| r.coords().to_vec())
                .collect(),
        };
        serde_json::to_string(&doc).expect("root system document serializes")
    }

    /// Parses a canonical document and cross-checks it against a fresh build
    /// of the same label; any discrepancy is rejected.
    pub fn from_canonical_json(text: &str) -> Result<Self> {
        let doc: RootSystemDoc = serde_json::from_str(text).map_err(|e| Error::Deserialize {
            reason: e.to_string(),
        })?;
        if doc.scale != COORD_SCALE {
            return Err(Error::Deserialize {
                reason: format!("unsupported scale {}", doc.scale),
            });
        }
        let label = DynkinLabel::new(doc.family, doc.rank)?;
        let built = RootSystem::build(label)?;
        let listed: Vec<CoordVector> = doc.positive_roots.into_iter().map(CoordVector::new).collect();
        if built.ambient_dim != doc.ambient_dim || built.positive_roots != listed {
            return Err(Error::Deserialize {
                reason: format!("document for {label} does not match canonical construction"),
            });
        }
        Ok(built)
    }
}

#[derive(Serialize, Deserialize)]
struct RootSystemDoc {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    scale: i64,
    positive_roots: Vec<Vec<i64>>,
}

// ---------------------------------------------------------------------------
// Per-family constructions (stored coordinates, i.e. doubled)
// ---------------------------------------------------------------------------

fn e_minus_e(dim: usize, i: usize, j: usize) -> CoordVector {
    let mut c = vec![0; dim];
    c[i - 1] = COORD_SCALE;
    c[j - 1] = -COORD_SCALE;
    CoordVector::new(c)
}

fn e_plus_e(dim: usize, i: usize, j: usize) -> CoordVector {
    let mut c = vec![0; dim];
    c[i - 1] = COORD_SCALE;
    c[j - 1] = COORD_SCALE;
    CoordVector::new(c)
}

fn build_a(n: usize) -> (usize, Vec<CoordVector>, Vec<CoordVector>) {
    let dim = n + 1;
    let mut roots = Vec::new();
    for i in 1..=dim {
        for j in (i + 1)..=dim {
            roots.push(e_minus_e(dim, i, j));
        }
    }
    let simples = (1..=n).map(|i| e_minus_e(dim, i, i + 1)).collect();
    (dim, roots, simples)
}

fn build_b(n: usize) -> (usize, Vec<CoordVector>, Vec<CoordVector>) {
    let dim = n;
    let mut roots = Vec::new();
    for i in 1..=n {
        roots.push(CoordVector::unit(dim, i));
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            roots.push(e_minus_e(dim, i, j));
            roots.push(e_plus_e(dim, i, j));
        }
    }
    let mut simples: Vec<CoordVector> = (1..n).map(|i| e_minus_e(dim, i, i + 1)).collect();
    simples.push(CoordVector::unit(dim, n));
    (dim, roots, simples)
}

fn build_c(n: usize) -> (usize, Vec<CoordVector>, Vec<CoordVector>) {
    let dim = n;
    let mut roots = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            roots.push(e_minus_e(dim, i, j));
            roots.push(e_plus_e(dim, i, j));
        }
    }
    for i in 1..=n {
        let mut c = vec![0; dim];
        c[i - 1] = 2 * COORD_SCALE;
        roots.push(CoordVector::new(c));
    }
    let mut simples: Vec<CoordVector> = (1..n).map(|i| e_minus_e(dim, i, i + 1)).collect();
    let mut long = vec![0; dim];
    long[n - 1] = 2 * COORD_SCALE;
    simples.push(CoordVector::new(long));
    (dim, roots, simples)
}

fn build_d(n: usize) -> (usize, Vec<CoordVector>, Vec<CoordVector>) {
    let dim = n;
    let mut roots = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            roots.push(e_minus_e(dim, i, j));
            roots.push(e_plus_e(dim, i, j));
        }
    }
    let mut simples: Vec<CoordVector> = (1..n).map(|i| e_minus_e(dim, i, i + 1)).collect();
    simples.push(e_plus_e(dim, n - 1, n));
    (dim, roots, simples)
}

/// Half-spin root, stored: entry `k` of `spin` is the sign of `e_k / 2`.
fn half_spin(spin: &[i64]) -> CoordVector {
    CoordVector::new(spin.to_vec())
}

/// All sign words of length `k` over {+1,-1} whose number of -1 entries has
/// the given parity, in lexicographic order with +1 first.
fn sign_words(k: usize, minus_parity_even: bool) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let minus_count = mask.count_ones();
        if (minus_count % 2 == 0) == minus_parity_even {
            out.push(
                (0..k)
                    .map(|b| if mask & (1 << b) != 0 { -1 } else { 1 })
                    .collect(),
            );
        }
    }
    out
}

fn build_e(n: usize) -> (usize, Vec<CoordVector>, Vec<CoordVector>) {
    let dim = 8;
    let mut roots = Vec::new();
    match n {
        6 => {
            for i in 1..=5usize {
                for j in (i + 1)..=5 {
                    roots.push(e_minus_e(dim, j, i)); // -e_i + e_j as printed
                    roots.push(e_plus_e(dim, i, j));
                }
            }
            // (e8 - e7 - e6 + sum (-1)^nu(i) e_i)/2, even # of -1 among 1..5
            for word in sign_words(5, true) {
                let mut spin = vec![0i64; 8];
                spin[..5].copy_from_slice(&word);
                spin[5] = -1;
                spin[6] = -1;
                spin[7] = 1;
                roots.push(half_spin(&spin));
            }
        }
        7 => {
            for i in 1..=6usize {
                for j in (i + 1)..=6 {
                    roots.push(e_minus_e(dim, j, i));
                    roots.push(e_plus_e(dim, i, j));
                }
            }
            roots.push(e_minus_e(dim, 8, 7)); // -e_7 + e_8
            // (e8 - e7 + sum (-1)^nu(i) e_i)/2, odd # of -1 among 1..6
            for word in sign_words(6, false) {
                let mut spin = vec![0i64; 8];
                spin[..6].copy_from_slice(&word);
                spin[6] = -1;
                spin[7] = 1;
                roots.push(half_spin(&spin));
            }
        }
        _ => {
            for i in 1..=8usize {
                for j in (i + 1)..=8 {
                    roots.push(e_minus_e(dim, j, i));
                    roots.push(e_plus_e(dim, i, j));
                }
            }
            // (e8 + sum (-1)^nu(i) e_i)/2, even # of -1 among 1..7
            for word in sign_words(7, true) {
                let mut spin = vec![0i64; 8];
                spin[..7].copy_from_slice(&word);
                spin[7] = 1;
                roots.push(half_spin(&spin));
            }
        }
    }

    // Bourbaki simple roots; the leading one is the half-spin
    // (e1 + e8 - e2 - e3 - e4 - e5 - e6 - e7)/2.
    let alpha1 = half_spin(&[1, -1, -1, -1, -1, -1, -1, 1]);
    let mut simples = vec![alpha1, e_plus_e(dim, 1, 2)];
    for i in 1..=(n - 2) {
        simples.push(e_minus_e(dim, i + 1, i));
    }
    (dim, roots, simples)
}

fn build_f() -> (usize, Vec<CoordVector>, Vec<CoordVector>) {
    let dim = 4;
    let mut roots = Vec::new();
    for i in 1..=4usize {
        roots.push(CoordVector::unit(dim, i));
    }
    for i in 1..=4usize {
        for j in (i + 1)..=4 {
            roots.push(e_minus_e(dim, i, j));
            roots.push(e_plus_e(dim, i, j));
        }
    }
    // (e1 +- e2 +- e3 +- e4)/2
    for mask in 0u32..8 {
        let mut spin = vec![1i64; 4];
        for b in 0..3 {
            if mask & (1 << b) != 0 {
                spin[b + 1] = -1;
            }
        }
        roots.push(half_spin(&spin));
    }
    let simples = vec![
        e_minus_e(dim, 2, 3),
        e_minus_e(dim, 3, 4),
        CoordVector::unit(dim, 4),
        half_spin(&[1, -1, -1, -1]),
    ];
    (dim, roots, simples)
}

fn build_g() -> (usize, Vec<CoordVector>, Vec<CoordVector>) {
    // Bourbaki embedding in R^3: a1 = e1 - e2, a2 = -2 e1 + e2 + e3.
    let dim = 3;
    let a1 = CoordVector::new(vec![2, -2, 0]);
    let a2 = CoordVector::new(vec![-4, 2, 2]);
    let mut roots = Vec::new();
    for (c1, c2) in [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)] {
        let mut v = CoordVector::zero(dim);
        v.add_signed(c1, &a1);
        v.add_signed(c2, &a2);
        roots.push(v);
    }
    (dim, roots, vec![a1, a2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(DynkinLabel::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(DynkinLabel::new(Family::A, 1).is_ok());
        assert!(DynkinLabel::new(Family::A, 0).is_err());
        assert!(DynkinLabel::new(Family::B, 1).is_err());
        assert!(DynkinLabel::new(Family::C, 2).is_ok());
        assert!(DynkinLabel::new(Family::D, 3).is_err());
        assert!(DynkinLabel::new(Family::D, 4).is_ok());
        assert!(DynkinLabel::new(Family::E, 5).is_err());
        assert!(DynkinLabel::new(Family::E, 9).is_err());
        assert!(DynkinLabel::new(Family::F, 4).is_ok());
        assert!(DynkinLabel::new(Family::F, 5).is_err());
        assert!(DynkinLabel::new(Family::G, 2).is_ok());
    }

    #[test]
    fn root_counts_match_closed_forms_up_to_rank_12() {
        for label in DynkinLabel::classical_up_to(12)
            .into_iter()
            .chain(DynkinLabel::exceptional())
        {
            let system = RootSystem::build(label).unwrap();
            assert_eq!(system.count(), label.positive_root_count(), "{label}");
        }
    }

    #[test]
    fn a2_positive_roots() {
        let system = rs(Family::A, 2);
        assert_eq!(system.count(), 3);
        let expected = [
            CoordVector::new(vec![2, -2, 0]),
            CoordVector::new(vec![2, 0, -2]),
            CoordVector::new(vec![0, 2, -2]),
        ];
        for v in &expected {
            assert!(system.is_root(v).unwrap());
        }
    }

    #[test]
    fn g2_has_six_positive_roots() {
        assert_eq!(rs(Family::G, 2).count(), 6);
    }

    #[test]
    fn e8_split_of_root_shapes() {
        let system = rs(Family::E, 8);
        assert_eq!(system.count(), 120);
        let mut diff = 0;
        let mut sum = 0;
        let mut spin = 0;
        for root in system.positive_roots() {
            let odd = root.coords().iter().filter(|c| *c % 2 != 0).count();
            if odd == 8 {
                spin += 1;
            } else if root.coords().iter().sum::<i64>() == 0 {
                diff += 1;
            } else {
                sum += 1;
            }
        }
        assert_eq!((diff, sum, spin), (28, 28, 64));
    }

    #[test]
    fn entry_parity_per_root() {
        // E-series half-spin roots have all-odd stored entries; every other
        // root everywhere has all-even stored entries.
        for label in DynkinLabel::classical_up_to(6)
            .into_iter()
            .chain(DynkinLabel::exceptional())
        {
            let system = RootSystem::build(label).unwrap();
            for root in system.positive_roots() {
                let odd = root.coords().iter().filter(|c| *c % 2 != 0).count();
                assert!(
                    odd == 0 || odd == root.dim(),
                    "{label}: mixed parity in {root}"
                );
            }
        }
    }

    #[test]
    fn scaled_inner_examples() {
        let a = CoordVector::new(vec![2, -2]);
        let b = CoordVector::new(vec![2, 2]);
        assert_eq!(scaled_inner(&a, &b).unwrap(), 0);
        assert_eq!(scaled_inner(&a, &a).unwrap(), 8);
        // E8 half-spin roots have squared length 2 as well.
        let h = CoordVector::new(vec![1, 1, 1, 1, 1, 1, -1, 1]);
        assert_eq!(scaled_inner(&h, &h).unwrap(), 8);
        let short = CoordVector::new(vec![2]);
        assert!(matches!(
            scaled_inner(&a, &short),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn is_root_examples() {
        let a3 = rs(Family::A, 3);
        assert!(a3.is_root(&CoordVector::new(vec![2, 0, -2, 0])).unwrap());
        assert!(!a3.is_root(&CoordVector::new(vec![2, 2, 0, 0])).unwrap());
        let c3 = rs(Family::C, 3);
        assert!(c3.is_root(&CoordVector::new(vec![4, 0, 0])).unwrap());
        // Signed lookup reports the sign.
        let r = c3
            .root_ref(&CoordVector::new(vec![-4, 0, 0]))
            .unwrap()
            .unwrap();
        assert_eq!(r.sign, Sign::Minus);
    }

    #[test]
    fn support_examples() {
        let v = CoordVector::new(vec![2, 0, -2, 0]);
        assert_eq!(support(&v), BTreeSet::from([1, 3]));
        assert!(support(&CoordVector::zero(4)).is_empty());
        let h = CoordVector::new(vec![1, 1, 1, 1, 1, 1, -1, 1]);
        assert_eq!(support(&h).len(), 8);
    }

    #[test]
    fn positive_sum_examples() {
        // E7: 2 rho = (0,2,4,6,8,10,-17,17) in true coordinates.
        let e7 = rs(Family::E, 7);
        assert_eq!(
            e7.positive_sum().coords(),
            &[0, 4, 8, 12, 16, 20, -34, 34]
        );
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.positive_sum().coords(), &[2, -2]);
        let b2 = rs(Family::B, 2);
        assert_eq!(b2.positive_sum().coords(), &[6, 2]); // 3 e1 + e2
    }

    #[test]
    fn simple_roots_pair_with_positive_sum() {
        // <beta, 2 rho> = |beta|^2 for every simple root beta; in scaled
        // arithmetic both sides carry the same factor of four.
        for label in DynkinLabel::classical_up_to(8)
            .into_iter()
            .chain(DynkinLabel::exceptional())
        {
            let system = RootSystem::build(label).unwrap();
            let two_rho = system.positive_sum();
            for &i in system.simple_root_indices() {
                let beta = system.root(i).unwrap();
                assert_eq!(
                    scaled_inner(beta, &two_rho).unwrap(),
                    scaled_inner(beta, beta).unwrap(),
                    "{label}, simple root {beta}"
                );
            }
        }
    }

    #[test]
    fn build_is_deterministic() {
        let x = rs(Family::E, 6);
        let y = rs(Family::E, 6);
        assert_eq!(x.positive_roots(), y.positive_roots());
    }

    #[test]
    fn canonical_order_is_sorted() {
        for label in DynkinLabel::classical_up_to(5)
            .into_iter()
            .chain(DynkinLabel::exceptional())
        {
            let system = RootSystem::build(label).unwrap();
            let mut sorted = system.positive_roots().to_vec();
            sorted.sort();
            assert_eq!(system.positive_roots(), &sorted[..]);
        }
    }

    #[test]
    fn canonical_json_round_trip() {
        for label in [
            DynkinLabel::new(Family::A, 3).unwrap(),
            DynkinLabel::new(Family::G, 2).unwrap(),
            DynkinLabel::new(Family::E, 6).unwrap(),
        ] {
            let system = RootSystem::build(label).unwrap();
            let doc = system.to_canonical_json();
            let parsed = RootSystem::from_canonical_json(&doc).unwrap();
            assert_eq!(parsed.to_canonical_json(), doc);
        }
    }

    #[test]
    fn display_uses_true_coordinates() {
        assert_eq!(CoordVector::new(vec![2, -2, 0]).to_string(), "(1, -1, 0)");
        assert_eq!(
            CoordVector::new(vec![1, -1]).to_string(),
            "(1/2, -1/2)"
        );
    }
}
