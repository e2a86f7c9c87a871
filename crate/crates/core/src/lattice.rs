//! Integer lattice membership with certifying functionals.
//!
//! Decides whether a target vector lies in the integer span of a set of
//! generators. On a negative answer it produces a functional `u` and a
//! modulus `m` with `<u, g> = 0 (mod m)` for every generator `g` while
//! `<u, target> != 0 (mod m)` (`m = 0` encodes exact-zero functionals on the
//! rational span). Such a pair is re-checkable with plain dot products.
//!
//! The reduction is a two-sided diagonalization tracking row operations
//! only, done in checked `i128`; on the (absurd for root-system input)
//! event of an overflow we simply decline to certify, which is sound for
//! every caller: absence of an obstruction proves nothing.

/// A certifying non-membership functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Functional {
    pub u: Vec<i64>,
    pub modulus: i64,
}

/// `Some(f)` iff `target` is provably not in the integer span of
/// `generators`; `None` means membership (or, on arithmetic overflow, that
/// no certificate was produced).
pub(crate) fn non_membership_functional(
    generators: &[Vec<i64>],
    target: &[i64],
) -> Option<Functional> {
    let dim = target.len();
    debug_assert!(generators.iter().all(|g| g.len() == dim));
    let cols = generators.len();

    // b: dim x cols, columns are the generators. u tracks row ops.
    let mut b: Vec<Vec<i128>> = (0..dim)
        .map(|r| (0..cols).map(|c| generators[c][r] as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..dim)
        .map(|r| (0..dim).map(|c| i128::from(r == c)).collect())
        .collect();

    diagonalize(&mut b, &mut u)?;

    // c = U * target
    let mut c = vec![0i128; dim];
    for r in 0..dim {
        for (x, t) in u[r].iter().zip(target) {
            c[r] = c[r].checked_add(x.checked_mul(*t as i128)?)?;
        }
    }

    for r in 0..dim {
        let d = if r < cols { b[r][r] } else { 0 };
        let obstructed = if d != 0 { c[r] % d != 0 } else { c[r] != 0 };
        if obstructed {
            return functional_from_row(&u[r], d);
        }
    }
    None
}

/// Reduce the functional into small representatives before narrowing.
fn functional_from_row(row: &[i128], modulus: i128) -> Option<Functional> {
    let m = modulus.checked_abs()?;
    let u: Option<Vec<i64>> = row
        .iter()
        .map(|&x| {
            let red = if m != 0 { x.rem_euclid(m) } else { x };
            i64::try_from(red).ok()
        })
        .collect();
    Some(Functional {
        u: u?,
        modulus: i64::try_from(m).ok()?,
    })
}

/// Two-sided diagonalization. Row swaps/combinations are mirrored into `u`;
/// column operations are not tracked (the membership test never needs the
/// right transform). Returns `None` on overflow.
#[allow(clippy::needless_range_loop)] // mutating one row while reading another
fn diagonalize(b: &mut [Vec<i128>], u: &mut [Vec<i128>]) -> Option<()> {
    let dim = b.len();
    if dim == 0 {
        return Some(());
    }
    let cols = b[0].len();
    let steps = dim.min(cols);

    for p in 0..steps {
        loop {
            // Smallest nonzero entry in the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for r in p..dim {
                for c in p..cols {
                    if b[r][c] != 0
                        && best.is_none_or(|(br, bc)| b[r][c].abs() < b[br][bc].abs())
                    {
                        best = Some((r, c));
                    }
                }
            }
            let Some((r, c)) = best else {
                return Some(()); // trailing block all zero
            };
            if r != p {
                b.swap(r, p);
                u.swap(r, p);
            }
            if c != p {
                for row in b.iter_mut() {
                    row.swap(c, p);
                }
            }

            let pivot = b[p][p];
            let mut clean = true;
            for r in (p + 1)..dim {
                if b[r][p] != 0 {
                    let q = b[r][p] / pivot; // truncated: |remainder| < |pivot|
                    for c2 in 0..cols {
                        let s = q.checked_mul(b[p][c2])?;
                        b[r][c2] = b[r][c2].checked_sub(s)?;
                    }
                    for c2 in 0..dim {
                        let s = q.checked_mul(u[p][c2])?;
                        u[r][c2] = u[r][c2].checked_sub(s)?;
                    }
                    if b[r][p] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue; // a smaller remainder exists; re-pick the pivot
            }
            for c2 in (p + 1)..cols {
                if b[p][c2] != 0 {
                    let q = b[p][c2] / pivot;
                    for row in b.iter_mut() {
                        let s = q.checked_mul(row[p])?;
                        row[c2] = row[c2].checked_sub(s)?;
                    }
                    if b[p][c2] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
    }
    Some(())
}

/// Rank over the rationals of the row span of `vectors`, by fraction-free
/// elimination in checked `i128`.
#[allow(clippy::needless_range_loop)] // cross-row elimination
pub(crate) fn integer_rank(vectors: &[Vec<i64>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = m.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        for r in (rank + 1)..rows {
            if m[r][c] != 0 {
                let (a, b_) = (m[rank][c], m[r][c]);
                for c2 in c..cols {
                    let lhs = a.checked_mul(m[r][c2])?;
                    let rhs = b_.checked_mul(m[rank][c2])?;
                    m[r][c2] = lhs.checked_sub(rhs)?;
                }
                // Keep entries small; the gcd never vanishes on a nonzero row.
                let g = m[r][c..].iter().fold(0i128, |acc, &x| gcd(acc, x));
                if g > 1 {
                    for x in &mut m[r][c..] {
                        *x /= g;
                    }
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_functional(gens: &[Vec<i64>], target: &[i64], f: &Functional) {
        let dot = |u: &[i64], v: &[i64]| -> i64 { u.iter().zip(v).map(|(a, b)| a * b).sum() };
        for g in gens {
            let d = dot(&f.u, g);
            if f.modulus == 0 {
                assert_eq!(d, 0);
            } else {
                assert_eq!(d.rem_euclid(f.modulus), 0);
            }
        }
        let d = dot(&f.u, target);
        if f.modulus == 0 {
            assert_ne!(d, 0);
        } else {
            assert_ne!(d.rem_euclid(f.modulus), 0);
        }
    }

    #[test]
    fn singleton_double() {
        // e1 is not in the lattice spanned by 2 e1.
        let gens = vec![vec![2, 0]];
        let target = vec![1, 0];
        let f = non_membership_functional(&gens, &target).unwrap();
        check_functional(&gens, &target, &f);
    }

    #[test]
    fn member_is_not_obstructed() {
        let gens = vec![vec![2, 0], vec![0, 3]];
        assert!(non_membership_functional(&gens, &[4, -3]).is_none());
        assert!(non_membership_functional(&gens, &[0, 0]).is_none());
    }

    #[test]
    fn off_span_target() {
        let gens = vec![vec![1, 0, 0], vec![0, 1, 0]];
        let target = vec![0, 0, 5];
        let f = non_membership_functional(&gens, &target).unwrap();
        assert_eq!(f.modulus, 0);
        check_functional(&gens, &target, &f);
    }

    #[test]
    fn mixing_needed() {
        // Lattice spanned by (2,2) and (2,-2): contains (4,0) but not (2,0).
        let gens = vec![vec![2, 2], vec![2, -2]];
        assert!(non_membership_functional(&gens, &[4, 0]).is_none());
        let t = vec![2, 0];
        let f = non_membership_functional(&gens, &t).unwrap();
        check_functional(&gens, &t, &f);
    }

    #[test]
    fn empty_generators() {
        assert!(non_membership_functional(&[], &[0, 0]).is_none());
        let f = non_membership_functional(&[], &[1, 0]).unwrap();
        check_functional(&[], &[1, 0], &f);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(integer_rank(&[]), Some(0));
        assert_eq!(integer_rank(&[vec![1, 2], vec![2, 4]]), Some(1));
        assert_eq!(
            integer_rank(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]),
            Some(2)
        );
    }
}
