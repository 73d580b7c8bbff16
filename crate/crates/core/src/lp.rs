//! Exact feasibility of small systems of linear inequalities over the rationals
//! (phase one of the simplex method with Bland's rule).

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Find `x` (free variables) with `A x >= b`, or `None` if there is none.
pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![BigRational::zero(); n]);
    }
    // Columns: u (n), v (n), surplus (m), artificial (m), then the right-hand side.
    let cols = 2 * n + 2 * m;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row = vec![BigRational::zero(); cols + 1];
        let sign = if b[i].is_negative() { -BigRational::one() } else { BigRational::one() };
        for j in 0..n {
            row[j] = &sign * &a[i][j];
            row[n + j] = -&row[j];
        }
        row[2 * n + i] = -&sign;
        row[2 * n + m + i] = BigRational::one();
        row[cols] = &sign * &b[i];
        t.push(row);
    }
    let mut basis: Vec<usize> = (0..m).map(|i| 2 * n + m + i).collect();
    // Objective: minimize the sum of artificials, stored as reduced costs.
    let mut obj = vec![BigRational::zero(); cols + 1];
    for row in &t {
        for j in 0..=cols {
            if j < 2 * n + m || j == cols {
                obj[j] -= &row[j];
            }
        }
    }

    while let Some(enter) = (0..cols).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][cols] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so some row always limits the step.
        let (r, _) = leave?;
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        basis[r] = enter;
    }

    if !obj[cols].is_zero() {
        return None;
    }
    let mut value = vec![BigRational::zero(); cols];
    for (i, &bv) in basis.iter().enumerate() {
        value[bv] = t[i][cols].clone();
    }
    Some((0..n).map(|j| &value[j] - &value[n + j]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn simple_systems() {
        // x >= 1, -x >= -3
        let a = vec![vec![q(1)], vec![q(-1)]];
        assert!(feasible(&a, &[q(1), q(-3)]).is_some());
        // x >= 2, -x >= -1
        assert!(feasible(&a, &[q(2), q(-1)]).is_none());
        // x - y >= 0, y - x >= 0, x + y >= 1
        let a = vec![vec![q(1), q(-1)], vec![q(-1), q(1)], vec![q(1), q(1)]];
        let x = feasible(&a, &[q(0), q(0), q(1)]).unwrap();
        assert!(&x[0] + &x[1] >= q(1));
    }

    proptest! {
        #[test]
        fn solutions_satisfy_constraints(entries in prop::collection::vec(-3i64..4, 12), rhs in prop::collection::vec(-3i64..4, 4)) {
            let a: Vec<Vec<BigRational>> = entries.chunks(3).map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let b: Vec<BigRational> = rhs.iter().map(|&x| q(x)).collect();
            if let Some(x) = feasible(&a, &b) {
                for (row, bi) in a.iter().zip(&b) {
                    let lhs: BigRational = row.iter().zip(&x).map(|(p, v)| p * v).sum();
                    prop_assert!(lhs >= *bi);
                }
            }
        }

        #[test]
        fn integer_points_are_found(entries in prop::collection::vec(-3i64..4, 8), point in prop::collection::vec(-2i64..3, 2)) {
            // Constraints built to hold at `point`, so the system must be feasible.
            let a: Vec<Vec<BigRational>> = entries.chunks(2).map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let b: Vec<BigRational> = entries.chunks(2).map(|r| q(r[0] * point[0] + r[1] * point[1])).collect();
            prop_assert!(feasible(&a, &b).is_some());
        }
    }
}
