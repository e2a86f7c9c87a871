//! Certificate objects: feasibility witnesses and the obstruction /
//! upper-bound arguments used where exhaustive search is out of reach.
//!
//! Every certificate is independently re-checkable from the root system and
//! the balance predicates alone (see `verify`). The `verified` flag is set
//! only by the verifier, never by a producer.

use serde::{Deserialize, Serialize};

use crate::balance::{SignedCombination, SubsetSelection};
use crate::rootsys::{CoordVector, DynkinLabel};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub body: CertificateBody,
    pub verified: bool,
}

impl Certificate {
    pub fn unverified(body: CertificateBody) -> Self {
        Certificate {
            body,
            verified: false,
        }
    }

    pub fn kind(&self) -> &'static str {
        match &self.body {
            CertificateBody::Witness(_) => "witness",
            CertificateBody::CoordinateParity(_) => "coordinate_parity",
            CertificateBody::PairCountParity(_) => "pair_count_parity",
            CertificateBody::E7PairScan(_) => "e7_pair_scan",
            CertificateBody::SoSizeBound(_) => "so_size_bound",
            CertificateBody::LatticeObstruction(_) => "lattice_obstruction",
            CertificateBody::TrivialBound(_) => "trivial_bound",
        }
    }

    /// The cocardinality bound this certificate asserts, when it asserts one.
    /// Witness certificates bound the minimum from above (by exhibiting a
    /// balanced subset); the obstruction kinds bound it from below;
    /// `SoSizeBound` bounds the well-balanced maximum from above.
    pub fn stated_value(&self) -> Option<usize> {
        match &self.body {
            CertificateBody::Witness(w) => Some(w.cocardinality),
            CertificateBody::CoordinateParity(c) => Some(c.bound),
            CertificateBody::PairCountParity(c) => Some(c.bound),
            CertificateBody::E7PairScan(c) => Some(c.bound),
            CertificateBody::SoSizeBound(c) => Some(c.bound),
            CertificateBody::TrivialBound(c) => Some(c.bound),
            CertificateBody::LatticeObstruction(_) => None,
        }
    }

    pub fn system(&self) -> DynkinLabel {
        match &self.body {
            CertificateBody::Witness(c) => c.system,
            CertificateBody::CoordinateParity(c) => c.system,
            CertificateBody::PairCountParity(c) => c.system,
            CertificateBody::E7PairScan(c) => c.system,
            CertificateBody::SoSizeBound(c) => c.system,
            CertificateBody::LatticeObstruction(c) => c.system,
            CertificateBody::TrivialBound(c) => c.system,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateBody {
    Witness(WitnessCertificate),
    CoordinateParity(CoordinateParityCertificate),
    PairCountParity(PairCountParityCertificate),
    E7PairScan(E7PairScanCertificate),
    SoSizeBound(SoSizeBoundCertificate),
    LatticeObstruction(LatticeObstructionCertificate),
    TrivialBound(TrivialBoundCertificate),
}

/// A balanced subset exhibited by an explicit vanishing signed combination.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub system: DynkinLabel,
    pub combo: SignedCombination,
    pub cocardinality: usize,
}

/// Per-coordinate parity obstruction: coordinates covered by an odd number
/// of odd-inner-product roots each force an exclusion, and each excluded
/// root accounts for at most `max_support` such coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoordinateParityCertificate {
    pub system: DynkinLabel,
    pub bound: usize,
    /// For each ambient coordinate, the number of positive roots whose true
    /// inner product with that basis vector is odd.
    pub odd_counts: Vec<usize>,
    /// 1-based coordinates with an odd count.
    pub odd_coordinates: Vec<usize>,
    pub max_support: usize,
}

/// Sign-pair counting obstruction: grouping `e_i - e_j` with `e_i + e_j`
/// turns any signed combination of the full positive system into a sum of
/// `sign_pair_terms` terms of the form `+-2 e_k`, which cannot vanish when
/// that count is odd. For D the even-per-coordinate constraint upgrades the
/// bound from one to two.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairCountParityCertificate {
    pub system: DynkinLabel,
    pub bound: usize,
    pub sign_pair_terms: usize,
    pub uses_coordinate_evenness: bool,
}

/// The three-step rank-seven argument: the full system fails a test-vector
/// parity check, no single-root removal can fix it, and a full scan shows
/// every unordered pair of roots admits a beta violating the removal
/// congruence. Hence cocardinality at least three.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct E7PairScanCertificate {
    pub system: DynkinLabel,
    pub bound: usize,
    /// Half the all-ones vector, stored form.
    pub test_vector: CoordVector,
    pub two_rho: CoordVector,
    /// True inner product of the test vector with the positive-root sum.
    pub v_dot_two_rho: i64,
    /// For each root index a1, a beta index with `<beta, a1>` odd.
    pub single_root_violations: Vec<(usize, usize)>,
    /// For each unordered pair (a1, a2), a beta index with
    /// `<beta,a1> != <beta,a2> (mod 2)`.
    pub pair_violations: Vec<(usize, usize, usize)>,
}

/// Upper bound on the cocardinality of a well-balanced subset. The
/// complement of a well-balanced subset is strongly orthogonal, so a bound
/// on strongly orthogonal subsets (possibly sharpened by a parity argument)
/// bounds the cocardinality. `attaining` is a strongly orthogonal subset of
/// exactly the bound size.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SoSizeBoundCertificate {
    pub system: DynkinLabel,
    pub bound: usize,
    pub attaining: SubsetSelection,
    pub argument: SoBoundArgument,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum SoBoundArgument {
    /// Strongly orthogonal roots have pairwise disjoint supports, each of
    /// size at least `min_support`, inside `ambient_coords` coordinates.
    DisjointSupports {
        ambient_coords: usize,
        min_support: usize,
    },
    /// Strongly orthogonal roots have equal or disjoint supports, all of
    /// size two, with at most two roots per support.
    EqualOrDisjointSupports { ambient_coords: usize },
    /// Strongly orthogonal roots are pairwise orthogonal, hence linearly
    /// independent, hence at most the rank of the root span.
    SpanRank { rank: usize },
    /// Branch-and-bound maximum over all strongly orthogonal subsets.
    ExhaustiveSearch,
    /// Coordinate cover counting: the per-coordinate parity of odd roots
    /// forces the exact cover shape of a well-balanced complement.
    ParityCover { odd_counts: Vec<usize> },
    /// A size-n strongly orthogonal complement would have to be the long
    /// roots, leaving the sign-pair subsystem balanced, which its odd term
    /// count forbids.
    LongRootExclusion { sign_pair_terms: usize },
}

/// The subset sum fails to lie in twice the lattice spanned by the subset;
/// the functional certifies this with plain dot products.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeObstructionCertificate {
    pub system: DynkinLabel,
    pub subset: SubsetSelection,
    pub subset_sum: CoordVector,
    pub functional: Vec<i64>,
    pub modulus: i64,
}

/// The vacuous lower bound: cocardinality is at least zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrivialBoundCertificate {
    pub system: DynkinLabel,
    pub bound: usize,
}

/// The full record for an explicitly constructed (well-)balanced subset.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WellBalancedCertificate {
    pub system: DynkinLabel,
    pub subset: SubsetSelection,
    pub witness: SignedCombination,
    pub complement: Vec<usize>,
    pub complement_strongly_orthogonal: bool,
    pub cocardinality: usize,
}
