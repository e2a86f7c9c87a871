//! Properties of the balance solver checked against independent oracles:
//! naive sign enumeration, the half-sum-subset formulation, and exhaustive
//! scans of every small system.

mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{all_balanced_subsets, half_sum_subset_exists, naive_zero_signing};
use rootbalance::balance::{
    augment_balanced, find_zero_signing, is_well_balanced, strongly_orthogonal_set,
    SignedCombination, SolverBudget, SubsetSelection,
};
use rootbalance::{DynkinLabel, Error, Family, RootSystem, Sign};

fn build(family: Family, rank: usize) -> RootSystem {
    RootSystem::build(DynkinLabel::new(family, rank).unwrap()).unwrap()
}

fn random_suite() -> Vec<(RootSystem, Vec<Vec<usize>>)> {
    // 200 subsets of size <= 12, fifty per system, with a fixed seed.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let systems = [
        build(Family::A, 4),
        build(Family::B, 3),
        build(Family::C, 3),
        build(Family::D, 4),
    ];
    systems
        .into_iter()
        .map(|rs| {
            let subsets: Vec<Vec<usize>> = (0..50)
                .map(|_| {
                    let size = rng.gen_range(0..=12.min(rs.count()));
                    let mut all: Vec<usize> = (0..rs.count()).collect();
                    all.shuffle(&mut rng);
                    let mut chosen: Vec<usize> = all.into_iter().take(size).collect();
                    chosen.sort_unstable();
                    chosen
                })
                .collect();
            (rs, subsets)
        })
        .collect()
}

#[test]
fn solver_agrees_with_naive_enumeration_on_200_random_subsets() {
    let budget = SolverBudget::default();
    let mut checked = 0;
    for (rs, subsets) in random_suite() {
        for indices in subsets {
            let sel = SubsetSelection::new(&rs, indices.clone()).unwrap();
            let solver = find_zero_signing(&rs, &sel, &budget).unwrap();
            let oracle = naive_zero_signing(&rs, &indices);
            assert_eq!(
                solver.is_some(),
                oracle.is_some(),
                "feasibility disagreement on {} {:?}",
                rs.label(),
                indices
            );
            if let (Some(witness), Some(oracle_signs)) = (&solver, &oracle) {
                assert!(witness.is_zero_witness(&rs).unwrap());
                // Both routes produce the lexicographically least witness
                // with leading sign +, so they coincide exactly.
                let solver_signs: Vec<Sign> =
                    witness.terms().iter().map(|&(_, s)| s).collect();
                assert_eq!(&solver_signs, oracle_signs);
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 200);
}

#[test]
fn balanced_iff_half_sum_subset() {
    let budget = SolverBudget::default();
    for (rs, subsets) in random_suite() {
        for indices in subsets {
            let sel = SubsetSelection::new(&rs, indices.clone()).unwrap();
            let balanced = find_zero_signing(&rs, &sel, &budget).unwrap().is_some();
            assert_eq!(
                balanced,
                half_sum_subset_exists(&rs, &indices),
                "{} {:?}",
                rs.label(),
                indices
            );
        }
    }
}

#[test]
fn witness_sign_flip_is_also_a_witness() {
    let budget = SolverBudget::default();
    for (rs, subsets) in random_suite() {
        for indices in subsets {
            let sel = SubsetSelection::new(&rs, indices).unwrap();
            if let Some(witness) = find_zero_signing(&rs, &sel, &budget).unwrap() {
                assert!(witness.flipped().is_zero_witness(&rs).unwrap());
                if let Some(&(_, first)) = witness.terms().first() {
                    assert_eq!(first, Sign::Plus, "canonical witness pins the first sign");
                }
            }
        }
    }
}

/// Every system with at most nine positive roots.
fn tiny_systems() -> Vec<RootSystem> {
    vec![
        build(Family::A, 1),
        build(Family::A, 2),
        build(Family::A, 3),
        build(Family::B, 2),
        build(Family::C, 2),
        build(Family::G, 2),
    ]
}

#[test]
fn maximum_balanced_subsets_are_well_balanced_on_tiny_systems() {
    let budget = SolverBudget::default();
    for rs in tiny_systems() {
        let balanced = all_balanced_subsets(&rs);
        let max_size = balanced.iter().map(|s| s.len()).max().unwrap();
        for sel in balanced.iter().filter(|s| s.len() == max_size) {
            assert!(
                is_well_balanced(&rs, sel, &budget).unwrap(),
                "{}: maximum balanced subset {:?} is not well-balanced",
                rs.label(),
                sel.indices()
            );
        }
    }
}

#[test]
fn augmentation_reaches_well_balanced_within_root_count_steps() {
    let budget = SolverBudget::default();
    for rs in tiny_systems() {
        for seed in all_balanced_subsets(&rs) {
            let signs = naive_zero_signing(&rs, seed.indices()).unwrap();
            let mut witness = SignedCombination::new(
                &rs,
                seed.indices().iter().copied().zip(signs).collect(),
            )
            .unwrap();
            let mut current = seed;
            let mut steps = 0;
            loop {
                match augment_balanced(&rs, &current, &witness) {
                    Ok((grown, extended)) => {
                        assert!(grown.len() > current.len());
                        assert!(extended.is_zero_witness(&rs).unwrap());
                        current = grown;
                        witness = extended;
                        steps += 1;
                        assert!(
                            steps <= rs.count(),
                            "{}: augmentation did not terminate",
                            rs.label()
                        );
                    }
                    Err(Error::AlreadyWellBalanced) => break,
                    Err(e) => panic!("{}: {e}", rs.label()),
                }
            }
            assert!(is_well_balanced(&rs, &current, &budget).unwrap());
        }
    }
}

#[test]
fn augmentation_trades_gamma_when_it_sits_inside_the_subset() {
    // Scan B3 for a balanced, not well-balanced subset whose first
    // violating complement pair sums (or differences) into the subset
    // itself; the trade step must grow the subset by exactly one.
    let rs = build(Family::B, 3);
    let budget = SolverBudget::default();
    let mut exercised = 0;
    for seed in all_balanced_subsets(&rs) {
        if is_well_balanced(&rs, &seed, &budget).unwrap() {
            continue;
        }
        let complement = seed.complement_indices(&rs);
        let mut violating = None;
        'scan: for (pos, &i) in complement.iter().enumerate() {
            for &j in &complement[pos + 1..] {
                let a = rootbalance::RootRef { index: i, sign: Sign::Plus };
                let b = rootbalance::RootRef { index: j, sign: Sign::Plus };
                if !rootbalance::balance::strongly_orthogonal_pair(&rs, a, b).unwrap() {
                    violating = Some((i, j));
                    break 'scan;
                }
            }
        }
        let (i, j) = violating.expect("not well-balanced, so a violating pair exists");
        let vi = rs.positive_roots()[i].clone();
        let vj = rs.positive_roots()[j].clone();
        let gamma = if rs.is_root(&vi.plus(&vj)).unwrap() {
            rs.root_ref(&vi.plus(&vj)).unwrap().unwrap().index
        } else {
            rs.root_ref(&vi.minus(&vj)).unwrap().unwrap().index
        };
        if !seed.contains(gamma) {
            continue;
        }
        let signs = naive_zero_signing(&rs, seed.indices()).unwrap();
        let witness = SignedCombination::new(
            &rs,
            seed.indices().iter().copied().zip(signs).collect(),
        )
        .unwrap();
        let (grown, extended) = augment_balanced(&rs, &seed, &witness).unwrap();
        assert_eq!(grown.len(), seed.len() + 1, "trade step adds exactly one");
        assert!(extended.is_zero_witness(&rs).unwrap());
        exercised += 1;
    }
    assert!(exercised > 0, "B3 must contain a gamma-inside case");
}

#[test]
fn enumerated_so_subsets_are_pairwise_orthogonal() {
    use rootbalance::rootsys::scaled_inner;
    for rs in [
        build(Family::D, 4),
        build(Family::B, 3),
        build(Family::G, 2),
        build(Family::F, 4),
        build(Family::E, 6),
    ] {
        for sel in rootbalance::balance::enumerate_strongly_orthogonal(&rs, 2, 2) {
            assert!(strongly_orthogonal_set(&rs, &sel).unwrap());
            let idx = sel.indices();
            for (pos, &i) in idx.iter().enumerate() {
                for &j in &idx[pos + 1..] {
                    assert_eq!(
                        scaled_inner(&rs.positive_roots()[i], &rs.positive_roots()[j]).unwrap(),
                        0,
                        "{}: strongly orthogonal pair with nonzero inner product",
                        rs.label()
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Any witness returned on a random subset of A4 re-sums to zero and
    /// covers exactly the subset.
    #[test]
    fn returned_witnesses_close_the_loop(raw in proptest::collection::vec(0usize..10, 0..8)) {
        let rs = build(Family::A, 4);
        let sel = SubsetSelection::new(&rs, raw).unwrap();
        let budget = SolverBudget::default();
        if let Some(witness) = find_zero_signing(&rs, &sel, &budget).unwrap() {
            prop_assert!(witness.is_zero_witness(&rs).unwrap());
            let covered = witness.indices();
            prop_assert_eq!(covered.as_slice(), sel.indices());
        }
    }

    /// Lattice obstruction certificates, when produced, always verify, and
    /// never appear on subsets the oracle says are balanced.
    #[test]
    fn lattice_obstructions_are_sound(raw in proptest::collection::vec(0usize..9, 0..9)) {
        let rs = build(Family::B, 3);
        let sel = SubsetSelection::new(&rs, raw).unwrap();
        if let Some(cert) = rootbalance::balance::lattice_membership_obstruction(&rs, &sel).unwrap() {
            rootbalance::witnesses::verify_certificate(&rs, &cert).unwrap();
            prop_assert!(naive_zero_signing(&rs, sel.indices()).is_none());
        }
    }
}
