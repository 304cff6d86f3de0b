use super::scalar::Scalar;

/// Outcome of a failed elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveError {
    /// Matrix is singular (no unique solution).
    Singular,
    /// Singular and the right-hand side is outside the column space.
    Inconsistent,
}

/// Gaussian elimination with partial pivoting on a dense square system.
///
/// Exact scalars take the first nonzero pivot; floats take the largest.
pub fn solve<S: Scalar>(mut a: Vec<Vec<S>>, mut rhs: Vec<S>) -> Result<Vec<S>, SolveError> {
    let n = rhs.len();
    debug_assert!(a.len() == n && a.iter().all(|r| r.len() == n));
    for col in 0..n {
        let pivot = pick_pivot(&a, col, col).ok_or(SolveError::Singular)?;
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        eliminate(&mut a, &mut rhs, col, col);
    }
    let mut x = vec![S::zero(); n];
    for i in (0..n).rev() {
        let mut acc = rhs[i].clone();
        for j in i + 1..n {
            acc = acc - a[i][j].clone() * &x[j];
        }
        x[i] = acc / &a[i][i];
    }
    Ok(x)
}

/// Solves a possibly singular square system, pinning free variables to zero.
///
/// Fails with [`SolveError::Inconsistent`] if no solution exists. Only
/// meaningful for exact scalars; with floats rank decisions are exact-zero tests.
pub fn solve_pinned<S: Scalar>(mut a: Vec<Vec<S>>, mut rhs: Vec<S>) -> Result<Vec<S>, SolveError> {
    let rows = rhs.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = pick_pivot(&a, row, col) else {
            continue;
        };
        a.swap(row, p);
        rhs.swap(row, p);
        eliminate(&mut a, &mut rhs, row, col);
        pivots.push((row, col));
        row += 1;
    }
    if rhs[row..].iter().any(|r| !r.is_zero()) {
        return Err(SolveError::Inconsistent);
    }
    let mut x = vec![S::zero(); cols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = rhs[r].clone();
        for j in c + 1..cols {
            acc = acc - a[r][j].clone() * &x[j];
        }
        x[c] = acc / &a[r][c];
    }
    Ok(x)
}

fn pick_pivot<S: Scalar>(a: &[Vec<S>], from_row: usize, col: usize) -> Option<usize> {
    let candidates = (from_row..a.len()).filter(|&r| !a[r][col].is_zero());
    if S::EXACT {
        candidates.into_iter().next()
    } else {
        candidates.max_by(|&x, &y| a[x][col].magnitude().total_cmp(&a[y][col].magnitude()))
    }
}

fn eliminate<S: Scalar>(a: &mut [Vec<S>], rhs: &mut [S], prow: usize, col: usize) {
    let (head, tail) = a.split_at_mut(prow + 1);
    let pr = &head[prow];
    for (off, r) in tail.iter_mut().enumerate() {
        if r[col].is_zero() {
            continue;
        }
        let f = r[col].clone() / &pr[col];
        for j in col..pr.len() {
            r[j] = r[j].clone() - f.clone() * &pr[j];
        }
        let i = prow + 1 + off;
        rhs[i] = rhs[i].clone() - f * &rhs[prow];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn solves_regular_system() {
        let a = m(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        let x = solve(a, vec![q(7), q(3), q(6)]).unwrap();
        assert_eq!(x, vec![q(1), q(2), q(3)]);
    }

    #[test]
    fn detects_singular() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve(a, vec![q(1), q(2)]), Err(SolveError::Singular));
    }

    #[test]
    fn pinned_solution_for_consistent_singular_system() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let x = solve_pinned(a.clone(), vec![q(3), q(6)]).unwrap();
        assert_eq!(x, vec![q(3), q(0)]);
        assert_eq!(solve_pinned(a, vec![q(3), q(7)]), Err(SolveError::Inconsistent));
    }

    #[test]
    fn float_pivoting() {
        let a = vec![vec![1e-20, 1.0], vec![1.0, 1.0]];
        let x = solve(a, vec![1.0, 2.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }
}
