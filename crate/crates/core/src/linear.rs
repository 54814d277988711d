//! Small dense linear solves used by the incidence solver and the
//! coefficient extractors.

use std::collections::BTreeSet;

use crate::blade::Blade;
use crate::error::Error;
use crate::multivector::Multivector;

/// Relative pivot threshold below which a system counts as singular.
const PIVOT_GUARD: f64 = 1e-12;

/// Solve `a x = b` by Gaussian elimination with partial pivoting.
///
/// `a` is a square row-major matrix. A pivot smaller than `1e-12` times the
/// infinity norm of its row reports [`Error::NoUniqueIncidence`].
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>, Error> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    for col in 0..n {
        let mut pivot_row = col;
        for row in col + 1..n {
            if a[row][col].abs() > a[pivot_row][col].abs() {
                pivot_row = row;
            }
        }
        if pivot_row != col {
            a.swap(col, pivot_row);
            b.swap(col, pivot_row);
        }
        let row_norm = a[col].iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if a[col][col].abs() <= PIVOT_GUARD * row_norm || a[col][col] == 0.0 {
            return Err(Error::NoUniqueIncidence);
        }
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            let (top, bottom) = a.split_at_mut(row);
            let pivot_row = &top[col];
            for (dst, src) in bottom[0].iter_mut().zip(pivot_row).skip(col) {
                *dst -= factor * src;
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Ok(x)
}

/// Least-squares projection of `target` onto the span of `basis`.
///
/// Returns the coefficients and the largest absolute residual coefficient
/// of `target - sum_i c_i basis_i`. The basis must be linearly independent.
pub fn project_span(basis: &[Multivector], target: &Multivector) -> Result<(Vec<f64>, f64), Error> {
    let mut blades: BTreeSet<Blade> = target.terms().map(|(b, _)| b).collect();
    for member in basis {
        blades.extend(member.terms().map(|(b, _)| b));
    }
    let blades: Vec<Blade> = blades.into_iter().collect();
    let rows: Vec<Vec<f64>> = blades
        .iter()
        .map(|&blade| basis.iter().map(|m| m.coeff(blade)).collect())
        .collect();
    let y: Vec<f64> = blades.iter().map(|&blade| target.coeff(blade)).collect();

    let n = basis.len();
    let mut gram = vec![vec![0.0; n]; n];
    let mut rhs = vec![0.0; n];
    for (row, &yi) in rows.iter().zip(&y) {
        for i in 0..n {
            for j in 0..n {
                gram[i][j] += row[i] * row[j];
            }
            rhs[i] += row[i] * yi;
        }
    }
    let coeffs = solve(gram, rhs)?;
    let mut residual = 0.0f64;
    for (row, &yi) in rows.iter().zip(&y) {
        let fit: f64 = row.iter().zip(&coeffs).map(|(a, c)| a * c).sum();
        residual = residual.max((fit - yi).abs());
    }
    Ok((coeffs, residual))
}
