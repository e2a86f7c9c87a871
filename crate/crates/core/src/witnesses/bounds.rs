//! Lower bounds on the cocardinality of balanced subsets and upper bounds on
//! the cocardinality of well-balanced subsets, as re-checkable certificates.

use crate::balance::{max_strongly_orthogonal, SubsetSelection};
use crate::error::{Error, Result};
use crate::lattice;
use crate::rootsys::{scaled_inner, support, CoordVector, Family, RootSystem};
use crate::witnesses::certificate::{
    Certificate, CertificateBody, CoordinateParityCertificate, E7PairScanCertificate,
    PairCountParityCertificate, SoBoundArgument, SoSizeBoundCertificate, TrivialBoundCertificate,
};

/// Per-coordinate tally of roots whose true inner product with `e_i` is odd.
/// Stored entries are doubled, so odd means `stored % 4 != 0` (on systems
/// whose true coordinates are integers).
pub(crate) fn odd_inner_counts(rs: &RootSystem) -> Vec<usize> {
    let dim = rs.ambient_dim();
    let mut counts = vec![0usize; dim];
    for root in rs.positive_roots() {
        for (i, &c) in root.coords().iter().enumerate() {
            debug_assert!(c % 2 == 0, "odd-count tally needs integer true coordinates");
            if (c / 2) % 2 != 0 {
                counts[i] += 1;
            }
        }
    }
    counts
}

fn max_support_size(rs: &RootSystem) -> usize {
    rs.positive_roots()
        .iter()
        .map(|r| support(r).len())
        .max()
        .unwrap_or(0)
}

/// Coordinate parity lower bound for the A, B, D families: every coordinate
/// with an odd tally forces an excluded root, and an excluded root covers at
/// most `max_support` coordinates.
pub fn coordinate_parity_bound(rs: &RootSystem) -> Result<(usize, Certificate)> {
    let family = rs.label().family();
    if !matches!(family, Family::A | Family::B | Family::D) {
        return Err(Error::NotApplicable {
            family,
            reason: "coordinate parity argument is stated for A, B, D".into(),
        });
    }
    let odd_counts = odd_inner_counts(rs);
    let odd_coordinates: Vec<usize> = odd_counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c % 2 != 0)
        .map(|(i, _)| i + 1)
        .collect();
    let max_support = max_support_size(rs);
    let bound = if odd_coordinates.is_empty() {
        0
    } else {
        odd_coordinates.len().div_ceil(max_support)
    };
    let cert = Certificate::unverified(CertificateBody::CoordinateParity(
        CoordinateParityCertificate {
            system: rs.label(),
            bound,
            odd_counts,
            odd_coordinates,
            max_support,
        },
    ));
    Ok((bound, cert))
}

/// Number of `+-2 e_k` terms any full signed combination collapses to:
/// same-support pairs `e_i +- e_j` contribute one term each, support-one
/// roots one term each.
pub(crate) fn sign_pair_term_count(rs: &RootSystem) -> usize {
    let support_two = rs
        .positive_roots()
        .iter()
        .filter(|r| support(r).len() == 2)
        .count();
    let support_one = rs.count() - support_two;
    support_two / 2 + support_one
}

/// Sign-pair counting lower bound for the C and D families.
pub fn pair_count_parity_bound(rs: &RootSystem) -> Result<(usize, Certificate)> {
    let family = rs.label().family();
    if !matches!(family, Family::C | Family::D) {
        return Err(Error::NotApplicable {
            family,
            reason: "sign-pair counting is stated for C and D".into(),
        });
    }
    let sign_pair_terms = sign_pair_term_count(rs);
    let odd = !sign_pair_terms.is_multiple_of(2);
    let (bound, uses_coordinate_evenness) = match family {
        Family::C => (usize::from(odd), false),
        _ => (if odd { 2 } else { 0 }, odd),
    };
    let cert = Certificate::unverified(CertificateBody::PairCountParity(
        PairCountParityCertificate {
            system: rs.label(),
            bound,
            sign_pair_terms,
            uses_coordinate_evenness,
        },
    ));
    Ok((bound, cert))
}

fn true_inner(a: &CoordVector, b: &CoordVector) -> i64 {
    let scaled = scaled_inner(a, b).expect("equal dimensions");
    debug_assert_eq!(scaled % 4, 0, "true inner product must be an integer here");
    scaled / 4
}

/// The three-step cocardinality bound for the 63-root rank-seven system:
/// (a) the half-sum of coordinates pairs oddly with the positive-root sum,
/// (b) every single root has a parity-violating partner, and (c) every
/// unordered pair admits a beta breaking the removal congruence. Together:
/// any balanced subset misses at least three roots.
pub fn e7_cocardinality_bound(rs: &RootSystem) -> Result<(usize, Certificate)> {
    let label = rs.label();
    if label.family() != Family::E || label.rank() != 7 {
        return Err(Error::NotApplicable {
            family: label.family(),
            reason: "the pair-scan argument is specific to rank seven of E".into(),
        });
    }
    let test_vector = CoordVector::new(vec![1; 8]); // (1/2, ..., 1/2)
    let two_rho = rs.positive_sum();
    let v_dot_two_rho = true_inner(&test_vector, &two_rho);
    if v_dot_two_rho % 2 == 0 {
        return Err(Error::internal("test vector pairing unexpectedly even"));
    }

    let roots = rs.positive_roots();
    let n = roots.len();
    let mut single_root_violations = Vec::with_capacity(n);
    for (a1, alpha) in roots.iter().enumerate() {
        let beta = (0..n)
            .find(|&b| true_inner(&roots[b], alpha) % 2 != 0)
            .ok_or_else(|| Error::internal("a root orthogonal to all of R+"))?;
        single_root_violations.push((a1, beta));
    }

    let mut pair_violations = Vec::with_capacity(n * (n - 1) / 2);
    for a1 in 0..n {
        for a2 in (a1 + 1)..n {
            let beta = (0..n)
                .find(|&b| {
                    let p1 = true_inner(&roots[b], &roots[a1]).rem_euclid(2);
                    let p2 = true_inner(&roots[b], &roots[a2]).rem_euclid(2);
                    p1 != p2
                })
                .ok_or_else(|| Error::internal("a pair satisfying the removal congruence"))?;
            pair_violations.push((a1, a2, beta));
        }
    }

    let cert = Certificate::unverified(CertificateBody::E7PairScan(E7PairScanCertificate {
        system: label,
        bound: 3,
        test_vector,
        two_rho,
        v_dot_two_rho,
        single_root_violations,
        pair_violations,
    }));
    Ok((3, cert))
}

/// The best applicable lower bound on the cocardinality of a balanced
/// subset, with its certificate. Families without a stated obstruction get
/// the vacuous bound zero.
pub fn best_balanced_lower_bound(rs: &RootSystem) -> Result<(usize, Certificate)> {
    let label = rs.label();
    let mut best: Option<(usize, Certificate)> = None;
    let mut consider = |candidate: (usize, Certificate)| {
        if best.as_ref().is_none_or(|(b, _)| candidate.0 > *b) {
            best = Some(candidate);
        }
    };
    match label.family() {
        Family::A | Family::B => consider(coordinate_parity_bound(rs)?),
        Family::C => consider(pair_count_parity_bound(rs)?),
        Family::D => {
            consider(coordinate_parity_bound(rs)?);
            consider(pair_count_parity_bound(rs)?);
        }
        Family::E if label.rank() == 7 => consider(e7_cocardinality_bound(rs)?),
        _ => {}
    }
    Ok(best.unwrap_or_else(|| {
        (
            0,
            Certificate::unverified(CertificateBody::TrivialBound(TrivialBoundCertificate {
                system: label,
                bound: 0,
            })),
        )
    }))
}

// ---------------------------------------------------------------------------
// Upper bounds for the well-balanced maximum
// ---------------------------------------------------------------------------

fn stored_pair(dim: usize, i: usize, j: usize, sign_j: i64) -> CoordVector {
    let mut c = vec![0i64; dim];
    c[i - 1] = 2;
    c[j - 1] = 2 * sign_j;
    CoordVector::new(c)
}

fn index_of(rs: &RootSystem, v: &CoordVector) -> Result<usize> {
    let r = rs
        .root_ref(v)?
        .ok_or_else(|| Error::internal(format!("{v} not a root of {}", rs.label())))?;
    Ok(r.index)
}

/// A strongly orthogonal set hitting the claimed bound, built per family.
fn attaining_set(rs: &RootSystem, bound: usize) -> Result<SubsetSelection> {
    let label = rs.label();
    let n = label.rank();
    let dim = rs.ambient_dim();
    let mut indices = Vec::new();
    match label.family() {
        Family::A => {
            // e_1 - e_2, e_3 - e_4, ... (empty when the bound is zero)
            for k in 1..=bound {
                indices.push(index_of(rs, &stored_pair(dim, 2 * k - 1, 2 * k, -1))?);
            }
        }
        Family::B => {
            for k in 1..=(n / 2) {
                indices.push(index_of(rs, &stored_pair(dim, 2 * k - 1, 2 * k, -1))?);
            }
            if n % 2 == 1 {
                indices.push(index_of(rs, &CoordVector::unit(dim, n))?);
            }
        }
        Family::C => {
            for i in 1..=bound {
                let mut c = vec![0i64; dim];
                c[i - 1] = 4;
                indices.push(index_of(rs, &CoordVector::new(c))?);
            }
        }
        Family::D => {
            for k in 1..=(n / 2) {
                indices.push(index_of(rs, &stored_pair(dim, 2 * k - 1, 2 * k, 1))?);
                indices.push(index_of(rs, &stored_pair(dim, 2 * k - 1, 2 * k, -1))?);
            }
        }
        Family::E => {
            // Same-support blocks e_{2k-1} +- e_{2k}; lookup is sign-blind,
            // so the stored orientation of the difference roots is immaterial.
            let pairs = if n == 6 { 2 } else { n / 2 };
            for k in 1..=pairs {
                indices.push(index_of(rs, &stored_pair(dim, 2 * k - 1, 2 * k, 1))?);
                indices.push(index_of(rs, &stored_pair(dim, 2 * k - 1, 2 * k, -1))?);
            }
            if n == 7 {
                let mut c = vec![0i64; dim];
                c[6] = -2;
                c[7] = 2;
                indices.push(index_of(rs, &CoordVector::new(c))?);
            }
        }
        Family::F => {
            for k in 1..=2usize {
                indices.push(index_of(rs, &stored_pair(dim, 2 * k - 1, 2 * k, 1))?);
                indices.push(index_of(rs, &stored_pair(dim, 2 * k - 1, 2 * k, -1))?);
            }
        }
        Family::G => {
            // a2 and 2 a1 + a2
            indices.push(index_of(rs, &CoordVector::new(vec![-4, 2, 2]))?);
            indices.push(index_of(rs, &CoordVector::new(vec![0, -2, 2]))?);
        }
    }
    SubsetSelection::new(rs, indices)
}

/// Per-family upper bound on the cocardinality of a well-balanced subset,
/// with a machine-checkable argument and an attaining strongly orthogonal
/// set.
pub fn wellbalanced_upper_bound(rs: &RootSystem) -> Result<(usize, Certificate)> {
    let label = rs.label();
    let n = label.rank();
    let (bound, argument) = match label.family() {
        Family::A => {
            if n.is_multiple_of(2) {
                (
                    0,
                    SoBoundArgument::ParityCover {
                        odd_counts: odd_inner_counts(rs),
                    },
                )
            } else {
                (
                    n.div_ceil(2),
                    SoBoundArgument::DisjointSupports {
                        ambient_coords: rs.ambient_dim(),
                        min_support: 2,
                    },
                )
            }
        }
        Family::B => (
            n.div_ceil(2),
            SoBoundArgument::ParityCover {
                odd_counts: odd_inner_counts(rs),
            },
        ),
        Family::C => {
            if n.is_multiple_of(4) || n % 4 == 1 {
                (
                    n,
                    SoBoundArgument::DisjointSupports {
                        ambient_coords: rs.ambient_dim(),
                        min_support: 1,
                    },
                )
            } else {
                (
                    n - 1,
                    SoBoundArgument::LongRootExclusion {
                        sign_pair_terms: n * (n - 1) / 2,
                    },
                )
            }
        }
        Family::D => (
            2 * (n / 2),
            SoBoundArgument::EqualOrDisjointSupports {
                ambient_coords: rs.ambient_dim(),
            },
        ),
        Family::E if n == 6 => {
            let (size, _) = max_strongly_orthogonal(rs);
            (size, SoBoundArgument::ExhaustiveSearch)
        }
        Family::E => {
            let rank = lattice::integer_rank(
                &rs.positive_roots()
                    .iter()
                    .map(|r| r.coords().to_vec())
                    .collect::<Vec<_>>(),
            )
            .ok_or_else(|| Error::internal("rank computation overflowed"))?;
            (rank, SoBoundArgument::SpanRank { rank })
        }
        Family::F | Family::G => {
            let (size, _) = max_strongly_orthogonal(rs);
            (size, SoBoundArgument::ExhaustiveSearch)
        }
    };
    let attaining = attaining_set(rs, bound)?;
    if attaining.len() != bound {
        return Err(Error::internal(format!(
            "attaining set for {label} has size {} against bound {bound}",
            attaining.len()
        )));
    }
    let cert = Certificate::unverified(CertificateBody::SoSizeBound(SoSizeBoundCertificate {
        system: label,
        bound,
        attaining,
        argument,
    }));
    Ok((bound, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DynkinLabel;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(DynkinLabel::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn coordinate_parity_examples() {
        assert_eq!(coordinate_parity_bound(&rs(Family::A, 3)).unwrap().0, 2);
        assert_eq!(coordinate_parity_bound(&rs(Family::B, 3)).unwrap().0, 2);
        assert_eq!(coordinate_parity_bound(&rs(Family::A, 2)).unwrap().0, 0);
        assert!(matches!(
            coordinate_parity_bound(&rs(Family::C, 3)),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn pair_count_examples() {
        assert_eq!(pair_count_parity_bound(&rs(Family::C, 5)).unwrap().0, 1);
        assert_eq!(pair_count_parity_bound(&rs(Family::D, 6)).unwrap().0, 2);
        assert_eq!(pair_count_parity_bound(&rs(Family::C, 4)).unwrap().0, 0);
        assert!(matches!(
            pair_count_parity_bound(&rs(Family::B, 4)),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn e7_bound_and_transcript() {
        let e7 = rs(Family::E, 7);
        let (bound, cert) = e7_cocardinality_bound(&e7).unwrap();
        assert_eq!(bound, 3);
        let CertificateBody::E7PairScan(scan) = &cert.body else {
            panic!("wrong certificate kind");
        };
        assert_eq!(scan.v_dot_two_rho, 15);
        assert_eq!(scan.single_root_violations.len(), 63);
        assert_eq!(scan.pair_violations.len(), 63 * 62 / 2);
        assert!(matches!(
            e7_cocardinality_bound(&rs(Family::E, 8)),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(wellbalanced_upper_bound(&rs(Family::A, 4)).unwrap().0, 0);
        assert_eq!(wellbalanced_upper_bound(&rs(Family::B, 5)).unwrap().0, 3);
        assert_eq!(wellbalanced_upper_bound(&rs(Family::C, 6)).unwrap().0, 5);
        assert_eq!(wellbalanced_upper_bound(&rs(Family::D, 5)).unwrap().0, 4);
        assert_eq!(wellbalanced_upper_bound(&rs(Family::E, 6)).unwrap().0, 4);
        assert_eq!(wellbalanced_upper_bound(&rs(Family::E, 7)).unwrap().0, 7);
        assert_eq!(wellbalanced_upper_bound(&rs(Family::E, 8)).unwrap().0, 8);
        assert_eq!(wellbalanced_upper_bound(&rs(Family::F, 4)).unwrap().0, 4);
        assert_eq!(wellbalanced_upper_bound(&rs(Family::G, 2)).unwrap().0, 2);
    }
}
