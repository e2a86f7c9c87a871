//! Independent certificate verification.
//!
//! Every check here is rebuilt from the root system and the balance
//! predicates; nothing is trusted from the producer beyond the claim being
//! checked. `verify_certificate` returns a copy with the `verified` flag
//! set, which is the only place in the crate that sets it.

use std::collections::HashMap;

use crate::balance::{max_strongly_orthogonal, so_indices, so_pair_by_index};
use crate::error::{Error, Result};
use crate::lattice;
use crate::rootsys::{scaled_inner, support, Family, RootSystem};
use crate::witnesses::bounds::{odd_inner_counts, sign_pair_term_count};
use crate::witnesses::certificate::{
    Certificate, CertificateBody, CoordinateParityCertificate, E7PairScanCertificate,
    LatticeObstructionCertificate, PairCountParityCertificate, SoBoundArgument,
    SoSizeBoundCertificate, TrivialBoundCertificate, WellBalancedCertificate, WitnessCertificate,
};

pub fn verify_certificate(rs: &RootSystem, cert: &Certificate) -> Result<Certificate> {
    if cert.system() != rs.label() {
        return Err(Error::cert(format!(
            "certificate is for {}, root system is {}",
            cert.system(),
            rs.label()
        )));
    }
    match &cert.body {
        CertificateBody::Witness(c) => verify_witness(rs, c)?,
        CertificateBody::CoordinateParity(c) => verify_coordinate_parity(rs, c)?,
        CertificateBody::PairCountParity(c) => verify_pair_count(rs, c)?,
        CertificateBody::E7PairScan(c) => verify_e7_scan(rs, c)?,
        CertificateBody::SoSizeBound(c) => verify_so_bound(rs, c)?,
        CertificateBody::LatticeObstruction(c) => verify_lattice_obstruction(rs, c)?,
        CertificateBody::TrivialBound(c) => verify_trivial(c)?,
    }
    Ok(Certificate {
        body: cert.body.clone(),
        verified: true,
    })
}

/// Checks the full record of an explicitly constructed subset: the witness
/// covers exactly the subset and re-sums to zero, the complement listing is
/// right, and the strong-orthogonality flag is honest.
pub fn verify_well_balanced(rs: &RootSystem, cert: &WellBalancedCertificate) -> Result<()> {
    if cert.system != rs.label() {
        return Err(Error::cert("well-balanced certificate for wrong system"));
    }
    if cert.witness.indices() != cert.subset.indices() {
        return Err(Error::cert("witness does not cover exactly the subset"));
    }
    if !cert.witness.is_zero_witness(rs)? {
        return Err(Error::cert("witness does not re-sum to zero"));
    }
    let complement = cert.subset.complement_indices(rs);
    if complement != cert.complement {
        return Err(Error::cert("complement listing is wrong"));
    }
    if cert.cocardinality != complement.len() {
        return Err(Error::cert("cocardinality does not match the complement"));
    }
    if cert.complement_strongly_orthogonal != so_indices(rs, &complement) {
        return Err(Error::cert("strong-orthogonality flag is wrong"));
    }
    Ok(())
}

fn verify_witness(rs: &RootSystem, c: &WitnessCertificate) -> Result<()> {
    if !c.combo.is_zero_witness(rs)? {
        return Err(Error::cert("witness combination does not vanish"));
    }
    if c.cocardinality != rs.count() - c.combo.len() {
        return Err(Error::cert("witness cocardinality mismatch"));
    }
    Ok(())
}

fn check_integer_coordinates(rs: &RootSystem) -> Result<()> {
    for root in rs.positive_roots() {
        if root.coords().iter().any(|c| c % 2 != 0) {
            return Err(Error::cert(
                "parity arguments need integer true coordinates",
            ));
        }
    }
    Ok(())
}

fn verify_coordinate_parity(rs: &RootSystem, c: &CoordinateParityCertificate) -> Result<()> {
    if !matches!(rs.label().family(), Family::A | Family::B | Family::D) {
        return Err(Error::cert("coordinate parity certificate outside A/B/D"));
    }
    check_integer_coordinates(rs)?;
    let counts = odd_inner_counts(rs);
    if counts != c.odd_counts {
        return Err(Error::cert("odd-count tally mismatch"));
    }
    let odd: Vec<usize> = counts
        .iter()
        .enumerate()
        .filter(|(_, &k)| k % 2 != 0)
        .map(|(i, _)| i + 1)
        .collect();
    if odd != c.odd_coordinates {
        return Err(Error::cert("odd-coordinate listing mismatch"));
    }
    let max_support = rs
        .positive_roots()
        .iter()
        .map(|r| support(r).len())
        .max()
        .unwrap_or(0);
    if max_support != c.max_support {
        return Err(Error::cert("max support mismatch"));
    }
    let expected = if odd.is_empty() {
        0
    } else {
        odd.len().div_ceil(max_support)
    };
    if expected != c.bound {
        return Err(Error::cert("coordinate parity bound mismatch"));
    }
    Ok(())
}

/// Checks that the support-two roots pair up as `e_i +- e_j` partners (the
/// grouping step of the sign-pair argument) and that support-one roots have
/// even true coordinates, then recounts the `+-2 e_k` terms.
fn check_sign_pair_inventory(rs: &RootSystem) -> Result<usize> {
    let mut support_one = 0usize;
    for (i, root) in rs.positive_roots().iter().enumerate() {
        let supp = support(root);
        match supp.len() {
            1 => {
                if root.coords().iter().any(|&c| c % 4 != 0) {
                    return Err(Error::cert("support-one root with odd true coordinate"));
                }
                support_one += 1;
            }
            2 => {
                let mut partner = root.clone();
                let &j = supp.iter().next_back().expect("support has two entries");
                let mut coords = partner.coords().to_vec();
                coords[j - 1] = -coords[j - 1];
                partner = crate::rootsys::CoordVector::new(coords);
                let found = rs.root_ref(&partner)?.ok_or_else(|| {
                    Error::cert(format!("pair root {} has no sign partner", rs.positive_roots()[i]))
                })?;
                let _ = found;
            }
            _ => return Err(Error::cert("sign-pair argument needs supports of size <= 2")),
        }
    }
    let support_two = rs.count() - support_one;
    Ok(support_two / 2 + support_one)
}

fn verify_pair_count(rs: &RootSystem, c: &PairCountParityCertificate) -> Result<()> {
    let family = rs.label().family();
    if !matches!(family, Family::C | Family::D) {
        return Err(Error::cert("sign-pair certificate outside C/D"));
    }
    check_integer_coordinates(rs)?;
    let terms = check_sign_pair_inventory(rs)?;
    if terms != c.sign_pair_terms || terms != sign_pair_term_count(rs) {
        return Err(Error::cert("sign-pair term count mismatch"));
    }
    let odd = terms % 2 != 0;
    let expected = match family {
        Family::C => usize::from(odd),
        _ => {
            if odd {
                // The upgrade from one to two needs every per-coordinate odd
                // tally even and every support of size exactly two: a single
                // excluded root would leave an odd tally on its support.
                if !c.uses_coordinate_evenness {
                    return Err(Error::cert("D-family bound two requires the evenness step"));
                }
                if odd_inner_counts(rs).iter().any(|k| k % 2 != 0) {
                    return Err(Error::cert("evenness step fails: odd coordinate tally"));
                }
                if rs.positive_roots().iter().any(|r| support(r).len() != 2) {
                    return Err(Error::cert("evenness step fails: support size"));
                }
                2
            } else {
                0
            }
        }
    };
    if expected != c.bound {
        return Err(Error::cert("sign-pair bound mismatch"));
    }
    Ok(())
}

fn true_inner(rs: &RootSystem, a: usize, b: usize) -> i64 {
    let scaled = scaled_inner(&rs.positive_roots()[a], &rs.positive_roots()[b])
        .expect("roots share the ambient dimension");
    debug_assert_eq!(scaled % 4, 0);
    scaled / 4
}

fn verify_e7_scan(rs: &RootSystem, c: &E7PairScanCertificate) -> Result<()> {
    let label = rs.label();
    if label.family() != Family::E || label.rank() != 7 {
        return Err(Error::cert("pair-scan certificate outside rank seven of E"));
    }
    let n = rs.count();
    if c.two_rho != rs.positive_sum() {
        return Err(Error::cert("positive-root sum mismatch"));
    }
    // Step (a): the test vector pairs integrally with every root, and oddly
    // with the full positive sum, so no signing of all of R+ can vanish.
    for root in rs.positive_roots() {
        let scaled = scaled_inner(&c.test_vector, root)?;
        if scaled % 4 != 0 || (scaled / 4).abs() > 1 {
            return Err(Error::cert("test vector pairs outside {0, +-1} with a root"));
        }
    }
    let scaled = scaled_inner(&c.test_vector, &c.two_rho)?;
    if scaled % 4 != 0 || scaled / 4 != c.v_dot_two_rho {
        return Err(Error::cert("test vector pairing value mismatch"));
    }
    if c.v_dot_two_rho % 2 == 0 {
        return Err(Error::cert("test vector pairing must be odd"));
    }
    // Shared premise of steps (b) and (c): <beta, 2 rho> is even for every
    // positive root.
    for b in 0..n {
        let scaled = scaled_inner(&rs.positive_roots()[b], &c.two_rho)?;
        if scaled % 8 != 0 {
            return Err(Error::cert("<beta, 2 rho> is not even"));
        }
    }
    // Step (b): each single root has a beta pairing oddly with it.
    if c.single_root_violations.len() != n {
        return Err(Error::cert("single-root scan is not complete"));
    }
    for (pos, &(a1, beta)) in c.single_root_violations.iter().enumerate() {
        if a1 != pos || beta >= n {
            return Err(Error::cert("single-root scan indices malformed"));
        }
        if true_inner(rs, beta, a1) % 2 == 0 {
            return Err(Error::cert("single-root violation is not odd"));
        }
    }
    // Step (c): every unordered pair admits a beta with different parities.
    if c.pair_violations.len() != n * (n - 1) / 2 {
        return Err(Error::cert("pair scan is not complete"));
    }
    let mut cursor = 0usize;
    for a1 in 0..n {
        for a2 in (a1 + 1)..n {
            let (x, y, beta) = c.pair_violations[cursor];
            cursor += 1;
            if (x, y) != (a1, a2) || beta >= n {
                return Err(Error::cert("pair scan indices malformed"));
            }
            let p1 = true_inner(rs, beta, a1).rem_euclid(2);
            let p2 = true_inner(rs, beta, a2).rem_euclid(2);
            if p1 == p2 {
                return Err(Error::cert("pair violation does not violate"));
            }
        }
    }
    if c.bound != 3 {
        return Err(Error::cert("pair-scan bound must be three"));
    }
    Ok(())
}

/// Root indices covering each 1-based ambient coordinate.
fn coordinate_buckets(rs: &RootSystem) -> Vec<Vec<usize>> {
    let mut buckets = vec![Vec::new(); rs.ambient_dim()];
    for (i, root) in rs.positive_roots().iter().enumerate() {
        for c in support(root) {
            buckets[c - 1].push(i);
        }
    }
    buckets
}

/// Scans every pair of roots with overlapping supports and demands it is
/// not strongly orthogonal, except (optionally) pairs with identical
/// supports. This is the computational content of "strongly orthogonal
/// implies disjoint (or equal) supports".
fn check_overlap_not_so(rs: &RootSystem, allow_equal_supports: bool) -> Result<()> {
    for bucket in coordinate_buckets(rs) {
        for (pos, &i) in bucket.iter().enumerate() {
            for &j in &bucket[pos + 1..] {
                if allow_equal_supports
                    && support(&rs.positive_roots()[i]) == support(&rs.positive_roots()[j])
                {
                    continue;
                }
                if so_pair_by_index(rs, i, j) {
                    return Err(Error::cert(format!(
                        "overlapping roots {} and {} are strongly orthogonal",
                        rs.positive_roots()[i],
                        rs.positive_roots()[j]
                    )));
                }
            }
        }
    }
    Ok(())
}

fn support_multiplicities(rs: &RootSystem) -> HashMap<Vec<usize>, usize> {
    let mut mult: HashMap<Vec<usize>, usize> = HashMap::new();
    for root in rs.positive_roots() {
        let key: Vec<usize> = support(root).into_iter().collect();
        *mult.entry(key).or_insert(0) += 1;
    }
    mult
}

fn verify_so_bound(rs: &RootSystem, c: &SoSizeBoundCertificate) -> Result<()> {
    // The attaining side: a strongly orthogonal set of exactly the bound size.
    if c.attaining.system() != rs.label() {
        return Err(Error::cert("attaining set for wrong system"));
    }
    if c.attaining.len() != c.bound {
        return Err(Error::cert("attaining set does not match the bound"));
    }
    if !so_indices(rs, c.attaining.indices()) {
        return Err(Error::cert("attaining set is not strongly orthogonal"));
    }

    let ambient = rs.ambient_dim();
    match &c.argument {
        SoBoundArgument::DisjointSupports {
            ambient_coords,
            min_support,
        } => {
            if *ambient_coords != ambient {
                return Err(Error::cert("ambient coordinate count mismatch"));
            }
            let actual_min = rs
                .positive_roots()
                .iter()
                .map(|r| support(r).len())
                .min()
                .unwrap_or(0);
            if actual_min < *min_support || *min_support == 0 {
                return Err(Error::cert("support lower bound is wrong"));
            }
            check_overlap_not_so(rs, false)?;
            // Disjoint supports of size >= min_support in `ambient` slots.
            if c.bound != ambient / min_support {
                return Err(Error::cert("disjoint-support bound mismatch"));
            }
        }
        SoBoundArgument::EqualOrDisjointSupports { ambient_coords } => {
            if *ambient_coords != ambient {
                return Err(Error::cert("ambient coordinate count mismatch"));
            }
            if rs.positive_roots().iter().any(|r| support(r).len() != 2) {
                return Err(Error::cert("argument needs all supports of size two"));
            }
            check_overlap_not_so(rs, true)?;
            if support_multiplicities(rs).values().any(|&m| m > 2) {
                return Err(Error::cert("more than two roots share a support"));
            }
            // Disjoint two-element blocks, at most two roots per block.
            if c.bound != 2 * (ambient / 2) {
                return Err(Error::cert("equal-or-disjoint bound mismatch"));
            }
        }
        SoBoundArgument::SpanRank { rank } => {
            let vectors: Vec<Vec<i64>> = rs
                .positive_roots()
                .iter()
                .map(|r| r.coords().to_vec())
                .collect();
            let actual = lattice::integer_rank(&vectors)
                .ok_or_else(|| Error::cert("rank computation overflowed"))?;
            if actual != *rank || c.bound != *rank {
                return Err(Error::cert("span rank mismatch"));
            }
            // Strongly orthogonal pairs must be orthogonal; orthogonal
            // nonzero vectors are independent, so a strongly orthogonal set
            // has at most `rank` elements.
            for i in 0..rs.count() {
                for j in (i + 1)..rs.count() {
                    if so_pair_by_index(rs, i, j) && true_inner(rs, i, j) != 0 {
                        return Err(Error::cert(
                            "strongly orthogonal pair fails orthogonality",
                        ));
                    }
                }
            }
        }
        SoBoundArgument::ExhaustiveSearch => {
            let (size, _) = max_strongly_orthogonal(rs);
            if size != c.bound {
                return Err(Error::cert("exhaustive maximum mismatch"));
            }
        }
        SoBoundArgument::ParityCover { odd_counts } => {
            check_integer_coordinates(rs)?;
            let counts = odd_inner_counts(rs);
            if &counts != odd_counts {
                return Err(Error::cert("parity cover tallies mismatch"));
            }
            if rs.positive_roots().iter().any(|r| support(r).len() > 2) {
                return Err(Error::cert("parity cover needs supports of size <= 2"));
            }
            if counts.iter().all(|k| k % 2 == 0) {
                // Every coordinate needs an even number of excluded roots;
                // a strongly orthogonal complement covers each coordinate at
                // most once (overlap scan), so it covers none: bound zero.
                check_overlap_not_so(rs, false)?;
                if c.bound != 0 {
                    return Err(Error::cert("even-tally parity cover forces bound zero"));
                }
            } else if counts.iter().all(|k| k % 2 != 0) {
                // Each coordinate is covered exactly once (odd and at most
                // twice, a same-support double covering being even), the
                // supports are pairwise disjoint, and at most one excluded
                // root is short: the cover size is exactly ceil(n/2).
                check_overlap_not_so(rs, true)?;
                if support_multiplicities(rs).values().any(|&m| m > 2) {
                    return Err(Error::cert("more than two roots share a support"));
                }
                let shorts: Vec<usize> = (0..rs.count())
                    .filter(|&i| support(&rs.positive_roots()[i]).len() == 1)
                    .collect();
                for (pos, &i) in shorts.iter().enumerate() {
                    for &j in &shorts[pos + 1..] {
                        if so_pair_by_index(rs, i, j) {
                            return Err(Error::cert(
                                "two short roots are strongly orthogonal",
                            ));
                        }
                    }
                }
                if c.bound != ambient.div_ceil(2) {
                    return Err(Error::cert("odd-tally parity cover bound mismatch"));
                }
            } else {
                return Err(Error::cert("parity cover tallies must be uniform"));
            }
        }
        SoBoundArgument::LongRootExclusion { sign_pair_terms } => {
            if rs.label().family() != Family::C {
                return Err(Error::cert("long-root exclusion outside family C"));
            }
            check_integer_coordinates(rs)?;
            check_overlap_not_so(rs, false)?;
            // Inventory: exactly one long root per coordinate, and the
            // support-two roots pair up.
            let terms = check_sign_pair_inventory(rs)?;
            let longs: Vec<usize> = (0..rs.count())
                .filter(|&i| support(&rs.positive_roots()[i]).len() == 1)
                .collect();
            if longs.len() != ambient {
                return Err(Error::cert("long-root count mismatch"));
            }
            let mut covered = vec![false; ambient];
            for &i in &longs {
                for coord in support(&rs.positive_roots()[i]) {
                    covered[coord - 1] = true;
                }
            }
            if covered.iter().any(|&c2| !c2) {
                return Err(Error::cert("long roots do not cover all coordinates"));
            }
            let pair_terms = terms - longs.len();
            if pair_terms != *sign_pair_terms || pair_terms.is_multiple_of(2) {
                return Err(Error::cert(
                    "long-root exclusion needs an odd sign-pair subsystem",
                ));
            }
            // A size-n strongly orthogonal set would have n disjoint
            // nonempty supports inside n coordinates, hence be the long
            // roots; its complement is the sign-pair subsystem, whose odd
            // term count forbids balance. So the bound drops to n - 1.
            if c.bound != ambient - 1 {
                return Err(Error::cert("long-root exclusion bound mismatch"));
            }
        }
    }
    Ok(())
}

fn verify_lattice_obstruction(rs: &RootSystem, c: &LatticeObstructionCertificate) -> Result<()> {
    if c.subset.system() != rs.label() {
        return Err(Error::cert("obstructed subset names the wrong system"));
    }
    let mut sum = crate::rootsys::CoordVector::zero(rs.ambient_dim());
    for &i in c.subset.indices() {
        rs.validate_index(i)?;
        sum.add_assign(&rs.positive_roots()[i]);
    }
    if sum != c.subset_sum {
        return Err(Error::cert("subset sum mismatch"));
    }
    if c.functional.len() != rs.ambient_dim() {
        return Err(Error::cert("functional has the wrong dimension"));
    }
    let dot = |v: &[i64]| -> i128 {
        c.functional
            .iter()
            .zip(v)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    };
    let m = c.modulus as i128;
    for &i in c.subset.indices() {
        let doubled: Vec<i64> = rs.positive_roots()[i]
            .coords()
            .iter()
            .map(|&x| 2 * x)
            .collect();
        let d = dot(&doubled);
        let ok = if m == 0 { d == 0 } else { d.rem_euclid(m) == 0 };
        if !ok {
            return Err(Error::cert("functional does not kill the doubled lattice"));
        }
    }
    let d = dot(sum.coords());
    let obstructs = if m == 0 { d != 0 } else { d.rem_euclid(m) != 0 };
    if !obstructs {
        return Err(Error::cert("functional does not obstruct the subset sum"));
    }
    Ok(())
}

fn verify_trivial(c: &TrivialBoundCertificate) -> Result<()> {
    if c.bound != 0 {
        return Err(Error::cert("the vacuous bound is zero"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::{lattice_membership_obstruction, SubsetSelection};
    use crate::rootsys::DynkinLabel;
    use crate::witnesses::bounds::{
        best_balanced_lower_bound, coordinate_parity_bound, e7_cocardinality_bound,
        pair_count_parity_bound, wellbalanced_upper_bound,
    };

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(DynkinLabel::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn produced_certificates_verify() {
        for system in [
            rs(Family::A, 3),
            rs(Family::A, 4),
            rs(Family::B, 5),
            rs(Family::D, 6),
        ] {
            let (_, cert) = coordinate_parity_bound(&system).unwrap();
            let verified = verify_certificate(&system, &cert).unwrap();
            assert!(verified.verified);
        }
        for system in [rs(Family::C, 5), rs(Family::C, 4), rs(Family::D, 6)] {
            let (_, cert) = pair_count_parity_bound(&system).unwrap();
            assert!(verify_certificate(&system, &cert).unwrap().verified);
        }
        let e7 = rs(Family::E, 7);
        let (_, cert) = e7_cocardinality_bound(&e7).unwrap();
        assert!(verify_certificate(&e7, &cert).unwrap().verified);
    }

    #[test]
    fn upper_bounds_verify_everywhere_small() {
        for label in DynkinLabel::classical_up_to(8)
            .into_iter()
            .chain(DynkinLabel::exceptional())
        {
            let system = RootSystem::build(label).unwrap();
            let (_, cert) = wellbalanced_upper_bound(&system).unwrap();
            verify_certificate(&system, &cert)
                .unwrap_or_else(|e| panic!("{label}: {e}"));
        }
    }

    #[test]
    fn lower_bounds_verify_everywhere_small() {
        for label in DynkinLabel::classical_up_to(8)
            .into_iter()
            .chain(DynkinLabel::exceptional())
        {
            let system = RootSystem::build(label).unwrap();
            let (_, cert) = best_balanced_lower_bound(&system).unwrap();
            verify_certificate(&system, &cert)
                .unwrap_or_else(|e| panic!("{label}: {e}"));
        }
    }

    #[test]
    fn lattice_obstruction_verifies() {
        let a3 = rs(Family::A, 3);
        let cert = lattice_membership_obstruction(&a3, &SubsetSelection::full(&a3))
            .unwrap()
            .unwrap();
        assert!(verify_certificate(&a3, &cert).unwrap().verified);
    }

    #[test]
    fn tampered_certificates_fail() {
        let a3 = rs(Family::A, 3);
        let (_, cert) = coordinate_parity_bound(&a3).unwrap();
        let mut bad = cert.clone();
        if let CertificateBody::CoordinateParity(ref mut c) = bad.body {
            c.bound += 1;
        }
        assert!(verify_certificate(&a3, &bad).is_err());

        let c5 = rs(Family::C, 5);
        let (_, cert) = pair_count_parity_bound(&c5).unwrap();
        let mut bad = cert.clone();
        if let CertificateBody::PairCountParity(ref mut c) = bad.body {
            c.sign_pair_terms += 1;
        }
        assert!(verify_certificate(&c5, &bad).is_err());

        // Wrong-system rejection.
        let a4 = rs(Family::A, 4);
        let (_, cert) = coordinate_parity_bound(&a3).unwrap();
        assert!(verify_certificate(&a4, &cert).is_err());
    }
}
