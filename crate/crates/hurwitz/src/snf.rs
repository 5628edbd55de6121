//! Smith normal form over the integers.
//!
//! Small dense matrices only; entries stay comfortably inside `i128` for
//! every relation matrix this crate builds (periods and group orders are
//! tiny), so no overflow handling beyond debug assertions is attempted.

/// Diagonal of the Smith normal form of `mat`, nonnegative, with each
/// entry dividing the next. The length is `min(rows, cols)`; trailing
/// zeros correspond to free rank.
pub(crate) fn smith_diagonal(mut mat: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);

    for k in 0..n {
        loop {
            // move the smallest nonzero entry of the trailing block to (k,k)
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if mat[i][j] != 0
                        && pivot.is_none_or(|(pi, pj)| {
                            mat[i][j].abs() < mat[pi][pj].abs()
                        })
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            mat.swap(k, pi);
            for row in mat.iter_mut() {
                row.swap(k, pj);
            }
            if mat[k][k] < 0 {
                for j in k..cols {
                    mat[k][j] = -mat[k][j];
                }
            }

            // clear the pivot row and column by euclidean steps
            let mut dirty = false;
            for i in k + 1..rows {
                let q = mat[i][k].div_euclid(mat[k][k]);
                if q != 0 {
                    for j in k..cols {
                        mat[i][j] -= q * mat[k][j];
                    }
                }
                if mat[i][k] != 0 {
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                let q = mat[k][j].div_euclid(mat[k][k]);
                if q != 0 {
                    for i in k..rows {
                        mat[i][j] -= q * mat[i][k];
                    }
                }
                if mat[k][j] != 0 {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }

            // divisibility fix-up: fold any offending entry into the pivot
            // row and restart the reduction of this block
            let mut offender = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if mat[i][j] % mat[k][k] != 0 {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    for j in k..cols {
                        mat[k][j] += mat[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(mat[k][k]);
    }
    diag
}
