use super::FieldElem;

/// Solves `a * x = rhs` for an `m x n` system by Gaussian elimination.
/// Returns one solution (free variables set to zero), or `None` when the
/// system is inconsistent.
pub fn solve_linear<E: FieldElem>(a: &[Vec<E>], rhs: &[E]) -> Option<Vec<E>> {
    let m = a.len();
    assert_eq!(m, rhs.len(), "row count mismatch");
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    let zero = rhs[0].zero_like();
    let mut rows: Vec<Vec<E>> = a
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = rows[row][col].inv()?;
        for c in col..=n {
            rows[row][c] = rows[row][c].mul(&inv);
        }
        for r in 0..m {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=n {
                    let t = f.mul(&rows[row][c]);
                    rows[r][c] = rows[r][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m {
            break;
        }
    }
    if rows[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut x = vec![zero; n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Scalar, Q};

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn consistent_and_inconsistent() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)], vec![q(0), q(1)]];
        let x = solve_linear(&a, &[q(5), q(10), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(2)]);
        assert!(solve_linear(&a, &[q(5), q(11), q(2)]).is_none());
    }
}
