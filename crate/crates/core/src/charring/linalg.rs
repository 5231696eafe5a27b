//! Dense Gaussian elimination over ℚ: linear solves and the inertia of
//! symmetric forms.

#![allow(clippy::needless_range_loop)]

use crate::exactq::Rational;

pub type Matrix = Vec<Vec<Rational>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    Unique(Vec<Rational>),
    NoSolution,
    NonUnique,
}

/// Solves `mat · x = rhs` where `mat` has `rhs.len()` rows and `cols` columns.
pub fn solve(mat: &Matrix, rhs: &[Rational], cols: usize) -> Solve {
    let rows = rhs.len();
    let mut aug: Matrix = (0..rows)
        .map(|i| {
            let mut row = mat[i].clone();
            row.push(rhs[i].clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip().expect("pivot is nonzero");
        for v in aug[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in c..=cols {
                    let d = &f * &aug[r][j];
                    aug[i][j] = &aug[i][j] - &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }

    if aug[r..].iter().any(|row| !row[cols].is_zero()) {
        return Solve::NoSolution;
    }
    if pivots.len() < cols {
        return Solve::NonUnique;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Solve::Unique(x)
}

pub fn determinant(mat: &Matrix) -> Rational {
    let n = mat.len();
    let mut a = mat.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].recip().expect("pivot is nonzero");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let d = &f * &a[c][j];
                a[i][j] = &a[i][j] - &d;
            }
        }
    }
    det
}

/// Counts of positive, negative and zero entries after diagonalizing the
/// symmetric matrix by congruence.
pub fn inertia(sym: &Matrix) -> (usize, usize, usize) {
    let mut a = sym.clone();
    let mut n = a.len();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    while n > 0 {
        // Bring a nonzero diagonal entry to the corner, or manufacture one
        // from an off-diagonal entry via e_i ← e_i + e_j.
        let k = n - 1;
        if let Some(i) = (0..n).find(|&i| !a[i][i].is_zero()) {
            swap_sym(&mut a, i, k);
        } else if let Some((i, j)) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && !a[i][j].is_zero())
        {
            add_sym(&mut a, i, j);
            swap_sym(&mut a, i, k);
        } else {
            zero += n;
            break;
        }
        let pivot = a[k][k].clone();
        if pivot.is_negative() {
            neg += 1;
        } else {
            pos += 1;
        }
        let inv = pivot.recip().expect("pivot is nonzero");
        for i in 0..k {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in 0..k {
                let d = &f * &a[k][j];
                a[i][j] = &a[i][j] - &d;
            }
        }
        for row in a.iter_mut() {
            row.truncate(k);
        }
        a.truncate(k);
        n = k;
    }
    (pos, neg, zero)
}

pub fn signature(sym: &Matrix) -> i32 {
    let (p, q, _) = inertia(sym);
    p as i32 - q as i32
}

fn swap_sym(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

// row_i += row_j, then col_i += col_j
fn add_sym(a: &mut Matrix, i: usize, j: usize) {
    let n = a.len();
    for c in 0..n {
        let v = a[j][c].clone();
        a[i][c] = &a[i][c] + &v;
    }
    for r in 0..n {
        let v = a[r][j].clone();
        a[r][i] = &a[r][i] + &v;
    }
}
