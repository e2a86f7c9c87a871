//! The three predicates on subsets of positive roots (balanced, strongly
//! orthogonal, well-balanced), exact feasibility search for vanishing signed
//! combinations, the constructive augmentation step, and enumeration of
//! strongly orthogonal subsets.
//!
//! A subset is *balanced* when its roots admit signs summing to the zero
//! vector. Feasibility is decided by meet-in-the-middle over signed half
//! sums, with the global sign flip quotiented out by pinning the first sign
//! to `+`. The solver is deterministic: it returns the lexicographically
//! least witness under canonical root order, with `+` ordered before `-`.
//!
//! The empty set is balanced (empty sum); it is well-balanced exactly when
//! all of `R+` is strongly orthogonal, which happens only in rank one.

use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{BudgetBreach, Error, Result};
use crate::lattice;
use crate::rootsys::{CoordVector, DynkinLabel, RootRef, RootSystem, Sign};
use crate::witnesses::{Certificate, CertificateBody, LatticeObstructionCertificate};

// ---------------------------------------------------------------------------
// Selections, combinations, budgets
// ---------------------------------------------------------------------------

/// A subset of the positive roots of a named system, as sorted, deduplicated
/// indices into the canonical root order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SubsetSelection {
    system: DynkinLabel,
    indices: Vec<usize>,
}

impl SubsetSelection {
    pub fn new(rs: &RootSystem, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        for &i in &indices {
            rs.validate_index(i)?;
        }
        Ok(SubsetSelection {
            system: rs.label(),
            indices,
        })
    }

    pub fn full(rs: &RootSystem) -> Self {
        SubsetSelection {
            system: rs.label(),
            indices: (0..rs.count()).collect(),
        }
    }

    pub fn empty(rs: &RootSystem) -> Self {
        SubsetSelection {
            system: rs.label(),
            indices: Vec::new(),
        }
    }

    pub fn complement_of(rs: &RootSystem, excluded: &[usize]) -> Result<Self> {
        for &i in excluded {
            rs.validate_index(i)?;
        }
        let indices = (0..rs.count()).filter(|i| !excluded.contains(i)).collect();
        Ok(SubsetSelection {
            system: rs.label(),
            indices,
        })
    }

    /// Parses a subset spec: `full`, `indices:i,j,...`, or
    /// `complement:i,j,...`.
    pub fn parse_spec(rs: &RootSystem, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "full" {
            return Ok(SubsetSelection::full(rs));
        }
        let parse_list = |list: &str| -> Result<Vec<usize>> {
            if list.trim().is_empty() {
                return Ok(Vec::new());
            }
            list.split(',')
                .map(|tok| {
                    tok.trim().parse::<usize>().map_err(|_| Error::SpecParse {
                        reason: format!("bad index {tok:?}"),
                    })
                })
                .collect()
        };
        if let Some(rest) = text.strip_prefix("indices:") {
            return SubsetSelection::new(rs, parse_list(rest)?);
        }
        if let Some(rest) = text.strip_prefix("complement:") {
            return SubsetSelection::complement_of(rs, &parse_list(rest)?);
        }
        Err(Error::SpecParse {
            reason: format!("expected `full`, `indices:...` or `complement:...`, got {text:?}"),
        })
    }

    pub fn system(&self) -> DynkinLabel {
        self.system
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    pub fn complement_indices(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.count()).filter(|i| !self.contains(*i)).collect()
    }

    pub fn cocardinality(&self, rs: &RootSystem) -> usize {
        rs.count() - self.len()
    }

    pub(crate) fn check_system(&self, rs: &RootSystem) -> Result<()> {
        if self.system != rs.label() {
            return Err(Error::LabelMismatch {
                expected: rs.label().to_string(),
                got: self.system.to_string(),
            });
        }
        Ok(())
    }
}

/// A sign assignment on a subset of positive roots. A *witness* additionally
/// re-sums to the exact zero vector.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SignedCombination {
    system: DynkinLabel,
    terms: Vec<(usize, Sign)>,
}

impl SignedCombination {
    pub fn new(rs: &RootSystem, mut terms: Vec<(usize, Sign)>) -> Result<Self> {
        terms.sort_unstable_by_key(|&(i, _)| i);
        for window in terms.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(Error::IdenticalRoots { index: window[0].0 });
            }
        }
        for &(i, _) in &terms {
            rs.validate_index(i)?;
        }
        Ok(SignedCombination {
            system: rs.label(),
            terms,
        })
    }

    pub fn system(&self) -> DynkinLabel {
        self.system
    }

    pub fn terms(&self) -> &[(usize, Sign)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.terms.iter().map(|&(i, _)| i).collect()
    }

    pub fn sign_of(&self, index: usize) -> Option<Sign> {
        self.terms
            .binary_search_by_key(&index, |&(i, _)| i)
            .ok()
            .map(|pos| self.terms[pos].1)
    }

    pub fn flipped(&self) -> Self {
        SignedCombination {
            system: self.system,
            terms: self.terms.iter().map(|&(i, s)| (i, s.flipped())).collect(),
        }
    }

    /// Exact re-summation of the signed terms.
    pub fn sum(&self, rs: &RootSystem) -> Result<CoordVector> {
        self.check_system(rs)?;
        let mut acc = CoordVector::zero(rs.ambient_dim());
        for &(i, sign) in &self.terms {
            acc.add_signed(sign.value(), rs.root(i)?);
        }
        Ok(acc)
    }

    pub fn is_zero_witness(&self, rs: &RootSystem) -> Result<bool> {
        Ok(self.sum(rs)?.is_zero())
    }

    pub(crate) fn check_system(&self, rs: &RootSystem) -> Result<()> {
        if self.system != rs.label() {
            return Err(Error::LabelMismatch {
                expected: rs.label().to_string(),
                got: self.system.to_string(),
            });
        }
        Ok(())
    }
}

/// Resource limits for the exact searches. Exceeding a budget is an error,
/// never a silent `false`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolverBudget {
    /// Largest subset the signing search will accept.
    pub max_subset_size: usize,
    /// Cap on meet-in-the-middle table entries per half.
    pub max_table_entries: usize,
    /// Optional wall-clock cap for long enumerations.
    #[serde(skip)]
    pub wall_clock: Option<std::time::Duration>,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_subset_size: 36,
            max_table_entries: 1 << 20,
            wall_clock: None,
        }
    }
}

impl SolverBudget {
    fn deadline(&self) -> Option<Instant> {
        self.wall_clock.map(|d| Instant::now() + d)
    }
}

// ---------------------------------------------------------------------------
// Strong orthogonality
// ---------------------------------------------------------------------------

/// Two positive roots are strongly orthogonal when neither their sum nor
/// their difference is a root.
pub fn strongly_orthogonal_pair(rs: &RootSystem, a: RootRef, b: RootRef) -> Result<bool> {
    if a.index == b.index {
        return Err(Error::IdenticalRoots { index: a.index });
    }
    let va = rs.root(a.index)?;
    let vb = rs.root(b.index)?;
    let mut sum = CoordVector::zero(rs.ambient_dim());
    sum.add_signed(a.sign.value(), va);
    sum.add_signed(b.sign.value(), vb);
    let mut diff = CoordVector::zero(rs.ambient_dim());
    diff.add_signed(a.sign.value(), va);
    diff.add_signed(-b.sign.value(), vb);
    Ok(!rs.is_root(&sum)? && !rs.is_root(&diff)?)
}

pub(crate) fn so_pair_by_index(rs: &RootSystem, i: usize, j: usize) -> bool {
    debug_assert_ne!(i, j);
    let vi = rs.positive_roots()[i].clone();
    let vj = &rs.positive_roots()[j];
    let sum = vi.plus(vj);
    let diff = vi.minus(vj);
    !rs.is_root(&sum).unwrap() && !rs.is_root(&diff).unwrap()
}

/// True iff all unordered pairs of the selection are strongly orthogonal;
/// the empty set and singletons are vacuously strongly orthogonal.
pub fn strongly_orthogonal_set(rs: &RootSystem, sel: &SubsetSelection) -> Result<bool> {
    sel.check_system(rs)?;
    Ok(so_indices(rs, sel.indices()))
}

pub(crate) fn so_indices(rs: &RootSystem, indices: &[usize]) -> bool {
    for (pos, &i) in indices.iter().enumerate() {
        for &j in &indices[pos + 1..] {
            if !so_pair_by_index(rs, i, j) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Zero-signing search (meet in the middle)
// ---------------------------------------------------------------------------

/// Finds a vanishing signed combination of the selected roots if one exists.
///
/// The sign of the first (canonical-order) element is pinned to `+`; the
/// remaining patterns are explored lexicographically, so the returned
/// witness is the lexicographically least one. Infeasibility within budget
/// is `Ok(None)`; blowing the budget is an error.
pub fn find_zero_signing(
    rs: &RootSystem,
    sel: &SubsetSelection,
    budget: &SolverBudget,
) -> Result<Option<SignedCombination>> {
    sel.check_system(rs)?;
    let k = sel.len();
    if k == 0 {
        return Ok(Some(SignedCombination::new(rs, Vec::new())?));
    }
    if k > budget.max_subset_size {
        return Err(Error::BudgetExceeded(BudgetBreach::SubsetSize {
            size: k,
            max: budget.max_subset_size,
        }));
    }
    if k == 1 {
        return Ok(None); // a root is nonzero
    }

    let vectors: Vec<&CoordVector> = sel
        .indices()
        .iter()
        .map(|&i| &rs.positive_roots()[i])
        .collect();
    let right_len = k / 2;
    let left_len = k - right_len;
    let (left, right) = vectors.split_at(left_len);

    let table_size = 1usize << right_len;
    if table_size > budget.max_table_entries {
        return Err(Error::BudgetExceeded(BudgetBreach::TableEntries {
            needed: table_size,
            max: budget.max_table_entries,
        }));
    }
    let deadline = budget.deadline();

    // Right half: signed sum -> lexicographically least sign pattern.
    let mut table: HashMap<Vec<i64>, u64> = HashMap::with_capacity(table_size);
    let mut acc = CoordVector::zero(rs.ambient_dim());
    build_table(right, 0, 0, &mut acc, &mut table, &deadline)?;

    // Left half: lexicographic scan with the first sign pinned to +.
    let mut acc = CoordVector::zero(rs.ambient_dim());
    acc.add_assign(left[0]);
    let hit = scan_left(&left[1..], 0, 0, &mut acc, &table, &deadline)?;

    let Some((left_mask, right_mask)) = hit else {
        return Ok(None);
    };
    let mut terms = Vec::with_capacity(k);
    for (pos, &i) in sel.indices().iter().enumerate() {
        let minus = if pos == 0 {
            false
        } else if pos < left_len {
            left_mask & (1 << (pos - 1)) != 0
        } else {
            right_mask & (1 << (pos - left_len)) != 0
        };
        terms.push((i, if minus { Sign::Minus } else { Sign::Plus }));
    }
    let combo = SignedCombination::new(rs, terms)?;
    debug_assert!(combo.is_zero_witness(rs)?);
    Ok(Some(combo))
}

fn check_deadline(deadline: &Option<Instant>) -> Result<()> {
    if let Some(d) = deadline {
        if Instant::now() > *d {
            return Err(Error::BudgetExceeded(BudgetBreach::WallClock));
        }
    }
    Ok(())
}

/// Depth-first over sign patterns (`+` branch first, so first insertion per
/// sum is the lexicographically least pattern).
fn build_table(
    vs: &[&CoordVector],
    depth: usize,
    mask: u64,
    acc: &mut CoordVector,
    table: &mut HashMap<Vec<i64>, u64>,
    deadline: &Option<Instant>,
) -> Result<()> {
    if depth == vs.len() {
        table.entry(acc.coords().to_vec()).or_insert(mask);
        return Ok(());
    }
    if depth <= 3 {
        check_deadline(deadline)?;
    }
    acc.add_assign(vs[depth]);
    build_table(vs, depth + 1, mask, acc, table, deadline)?;
    acc.sub_assign(vs[depth]);
    acc.sub_assign(vs[depth]);
    build_table(vs, depth + 1, mask | (1 << depth), acc, table, deadline)?;
    acc.add_assign(vs[depth]);
    Ok(())
}

fn scan_left(
    vs: &[&CoordVector],
    depth: usize,
    mask: u64,
    acc: &mut CoordVector,
    table: &HashMap<Vec<i64>, u64>,
    deadline: &Option<Instant>,
) -> Result<Option<(u64, u64)>> {
    if depth == vs.len() {
        let need = acc.negated();
        if let Some(&right_mask) = table.get(need.coords()) {
            return Ok(Some((mask, right_mask)));
        }
        return Ok(None);
    }
    if depth <= 3 {
        check_deadline(deadline)?;
    }
    acc.add_assign(vs[depth]);
    if let Some(hit) = scan_left(vs, depth + 1, mask, acc, table, deadline)? {
        acc.sub_assign(vs[depth]);
        return Ok(Some(hit));
    }
    acc.sub_assign(vs[depth]);
    acc.sub_assign(vs[depth]);
    let hit = scan_left(vs, depth + 1, mask | (1 << depth), acc, table, deadline)?;
    acc.add_assign(vs[depth]);
    Ok(hit)
}

/// Cheap necessary conditions for balancedness, used to prune searches.
/// Signs cannot change parities, so for each stored coordinate the subset
/// sum must be even, and (for systems whose true coordinates are integers)
/// the true-coordinate subset sum must be even as well.
pub(crate) fn parity_feasible(rs: &RootSystem, indices: &[usize]) -> bool {
    let dim = rs.ambient_dim();
    let mut stored = vec![0i64; dim];
    for &i in indices {
        for (s, c) in stored.iter_mut().zip(rs.positive_roots()[i].coords()) {
            *s += c;
        }
    }
    if stored.iter().any(|s| s % 2 != 0) {
        return false;
    }
    if rs.label().family().is_classical() && stored.iter().any(|s| (s / 2) % 2 != 0) {
        return false;
    }
    true
}

/// Thin wrapper over [`find_zero_signing`]; the empty set is balanced.
pub fn is_balanced(rs: &RootSystem, sel: &SubsetSelection, budget: &SolverBudget) -> Result<bool> {
    sel.check_system(rs)?;
    // The subset-size precondition is part of the contract regardless of
    // the answer; past it, a parity failure is an exact disproof.
    if sel.len() > budget.max_subset_size {
        return Err(Error::BudgetExceeded(BudgetBreach::SubsetSize {
            size: sel.len(),
            max: budget.max_subset_size,
        }));
    }
    if !parity_feasible(rs, sel.indices()) {
        return Ok(false);
    }
    Ok(find_zero_signing(rs, sel, budget)?.is_some())
}

/// Balanced with strongly orthogonal complement.
pub fn is_well_balanced(
    rs: &RootSystem,
    sel: &SubsetSelection,
    budget: &SolverBudget,
) -> Result<bool> {
    sel.check_system(rs)?;
    if !so_indices(rs, &sel.complement_indices(rs)) {
        return Ok(false);
    }
    is_balanced(rs, sel, budget)
}

// ---------------------------------------------------------------------------
// Augmentation (the constructive step behind maximal-cardinality balance)
// ---------------------------------------------------------------------------

/// Grows a balanced-but-not-well-balanced subset into a strictly larger
/// balanced subset, extending the witness.
///
/// The lexicographically first non-strongly-orthogonal pair `(b1, b2)` of
/// the complement is selected; `g` is their sum if that is a root, else
/// their (positively oriented) difference. If `g` is outside the subset it
/// is adjoined along with `b1, b2`; if it is inside, it is traded for them.
/// Sign rules follow the construction exactly, so the output witness
/// re-sums to zero.
pub fn augment_balanced(
    rs: &RootSystem,
    sel: &SubsetSelection,
    signs: &SignedCombination,
) -> Result<(SubsetSelection, SignedCombination)> {
    sel.check_system(rs)?;
    signs.check_system(rs)?;
    if signs.indices() != sel.indices() {
        return Err(Error::invalid_witness(
            "sign assignment does not cover exactly the subset",
        ));
    }
    if !signs.is_zero_witness(rs)? {
        return Err(Error::invalid_witness("signed combination does not vanish"));
    }

    let complement = sel.complement_indices(rs);
    let mut violating: Option<(usize, usize)> = None;
    'outer: for (pos, &i) in complement.iter().enumerate() {
        for &j in &complement[pos + 1..] {
            if !so_pair_by_index(rs, i, j) {
                violating = Some((i, j));
                break 'outer;
            }
        }
    }
    let Some((i, j)) = violating else {
        return Err(Error::AlreadyWellBalanced);
    };

    let vi = rs.positive_roots()[i].clone();
    let vj = rs.positive_roots()[j].clone();
    let sum = vi.plus(&vj);

    // (b1, b2) ordered so that g = b1 + b2 or g = b1 - b2 with g positive.
    let (b1, b2, gamma_ref, is_sum) = if let Some(r) = rs.root_ref(&sum)? {
        debug_assert_eq!(r.sign, Sign::Plus, "sum of positive roots is positive");
        (i, j, r, true)
    } else {
        let diff = vi.minus(&vj);
        let r = rs
            .root_ref(&diff)?
            .ok_or_else(|| Error::internal("violating pair with no root sum or difference"))?;
        match r.sign {
            Sign::Plus => (i, j, RootRef { index: r.index, sign: Sign::Plus }, false),
            Sign::Minus => (j, i, RootRef { index: r.index, sign: Sign::Plus }, false),
        }
    };
    let g = gamma_ref.index;

    let mut terms = signs.terms().to_vec();
    let mut indices = sel.indices().to_vec();
    if let Some(s_g) = signs.sign_of(g) {
        // Trade g for b1, b2.
        terms.retain(|&(idx, _)| idx != g);
        indices.retain(|&idx| idx != g);
        if is_sum {
            terms.push((b1, s_g));
            terms.push((b2, s_g));
        } else {
            terms.push((b1, s_g));
            terms.push((b2, s_g.flipped()));
        }
        indices.push(b1);
        indices.push(b2);
    } else if is_sum {
        terms.push((b1, Sign::Plus));
        terms.push((b2, Sign::Plus));
        terms.push((g, Sign::Minus));
        indices.extend([b1, b2, g]);
    } else {
        terms.push((b1, Sign::Plus));
        terms.push((b2, Sign::Minus));
        terms.push((g, Sign::Minus));
        indices.extend([b1, b2, g]);
    }

    let grown = SubsetSelection::new(rs, indices)?;
    let witness = SignedCombination::new(rs, terms)?;
    if !witness.is_zero_witness(rs)? {
        return Err(Error::internal("augmented witness does not re-sum to zero"));
    }
    debug_assert!(grown.len() > sel.len());
    Ok((grown, witness))
}

// ---------------------------------------------------------------------------
// Strongly orthogonal subset enumeration
// ---------------------------------------------------------------------------

/// Backtracking enumeration of strongly orthogonal subsets in canonical
/// index order (depth-first, so subsets come out in lexicographic order of
/// their index sequences). Each subset is emitted exactly once.
pub fn enumerate_strongly_orthogonal(
    rs: &RootSystem,
    min_size: usize,
    max_size: usize,
) -> SoSubsets<'_> {
    SoSubsets::new(rs, min_size, max_size)
}

pub struct SoSubsets<'a> {
    rs: &'a RootSystem,
    compatible: Vec<Vec<bool>>,
    min_size: usize,
    max_size: usize,
    current: Vec<usize>,
    next_candidate: Vec<usize>,
    emit_current: bool,
    done: bool,
}

#[allow(clippy::needless_range_loop)] // symmetric fill over index pairs
fn so_adjacency(rs: &RootSystem) -> Vec<Vec<bool>> {
    let n = rs.count();
    let mut compatible = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let so = so_pair_by_index(rs, i, j);
            compatible[i][j] = so;
            compatible[j][i] = so;
        }
    }
    compatible
}

impl<'a> SoSubsets<'a> {
    fn new(rs: &'a RootSystem, min_size: usize, max_size: usize) -> Self {
        let compatible = so_adjacency(rs);
        SoSubsets {
            rs,
            compatible,
            min_size,
            max_size,
            current: Vec::new(),
            next_candidate: vec![0],
            emit_current: true,
            done: max_size < min_size,
        }
    }

    fn extend_once(&mut self) -> bool {
        let depth = self.current.len();
        if depth >= self.max_size {
            return false;
        }
        while self.next_candidate[depth] < self.rs.count() {
            let i = self.next_candidate[depth];
            self.next_candidate[depth] += 1;
            let ok = self
                .current
                .iter()
                .all(|&j| self.compatible[j][i]);
            if ok {
                self.current.push(i);
                self.next_candidate.push(i + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for SoSubsets<'_> {
    type Item = SubsetSelection;

    fn next(&mut self) -> Option<SubsetSelection> {
        loop {
            if self.done {
                return None;
            }
            if self.emit_current {
                self.emit_current = false;
                if self.current.len() >= self.min_size && self.current.len() <= self.max_size {
                    return Some(
                        SubsetSelection::new(self.rs, self.current.clone())
                            .expect("enumerated indices are valid"),
                    );
                }
            }
            if self.extend_once() {
                self.emit_current = true;
                continue;
            }
            if self.current.is_empty() {
                self.done = true;
                return None;
            }
            self.current.pop();
            self.next_candidate.pop();
        }
    }
}

/// Maximum-size strongly orthogonal subset by branch and bound, together
/// with a lexicographically canonical attaining set.
pub fn max_strongly_orthogonal(rs: &RootSystem) -> (usize, SubsetSelection) {
    let n = rs.count();
    let compatible = so_adjacency(rs);
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let candidates: Vec<usize> = (0..n).collect();
    branch_max_so(&compatible, &mut current, &candidates, &mut best);
    let sel = SubsetSelection::new(rs, best.clone()).expect("attaining indices valid");
    (best.len(), sel)
}

fn branch_max_so(
    compatible: &[Vec<bool>],
    current: &mut Vec<usize>,
    candidates: &[usize],
    best: &mut Vec<usize>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    for (pos, &i) in candidates.iter().enumerate() {
        if current.len() + (candidates.len() - pos) <= best.len() {
            return; // even taking everything left cannot beat the best
        }
        let rest: Vec<usize> = candidates[pos + 1..]
            .iter()
            .copied()
            .filter(|&j| compatible[i][j])
            .collect();
        current.push(i);
        branch_max_so(compatible, current, &rest, best);
        current.pop();
    }
}

// ---------------------------------------------------------------------------
// Lattice membership obstruction
// ---------------------------------------------------------------------------

/// A generic necessary condition for balancedness: a vanishing signed
/// combination forces the plain subset sum into twice the lattice spanned
/// by the subset. When that fails, the certifying functional proves the
/// subset is not balanced; absence of an obstruction proves nothing.
pub fn lattice_membership_obstruction(
    rs: &RootSystem,
    sel: &SubsetSelection,
) -> Result<Option<Certificate>> {
    sel.check_system(rs)?;
    let generators: Vec<Vec<i64>> = sel
        .indices()
        .iter()
        .map(|&i| {
            rs.positive_roots()[i]
                .coords()
                .iter()
                .map(|&c| 2 * c)
                .collect()
        })
        .collect();
    let mut target = CoordVector::zero(rs.ambient_dim());
    for &i in sel.indices() {
        target.add_assign(&rs.positive_roots()[i]);
    }

    let Some(functional) = lattice::non_membership_functional(&generators, target.coords())
    else {
        return Ok(None);
    };
    Ok(Some(Certificate::unverified(
        CertificateBody::LatticeObstruction(LatticeObstructionCertificate {
            system: rs.label(),
            subset: sel.clone(),
            subset_sum: target,
            functional: functional.u,
            modulus: functional.modulus,
        }),
    )))
}
