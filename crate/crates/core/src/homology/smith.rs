//! Smith normal form of small integer matrices.
//!
//! Only the invariant factors are kept; the unimodular transforms are not
//! needed for Betti numbers. All arithmetic is checked.

use super::HomologyError;

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive) of a dense matrix.
pub fn invariant_factors(mut m: Vec<Vec<i64>>) -> Result<Vec<i64>, HomologyError> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pr, pc)) = smallest_entry(&m, t) else { break };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if m[r][t] != 0 {
                    let q = m[r][t].div_euclid(m[t][t]);
                    row_axpy(&mut m, r, t, q)?;
                    if m[r][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for c in t + 1..cols {
                if m[t][c] != 0 {
                    let q = m[t][c].div_euclid(m[t][t]);
                    col_axpy(&mut m, c, t, q)?;
                    if m[t][c] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                let (pr, pc) = smallest_in_cross(&m, t);
                m.swap(t, pr);
                for row in m.iter_mut() {
                    row.swap(t, pc);
                }
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| m[r][c] % m[t][t] != 0));
            match bad {
                Some(r) => {
                    // fold the offending row into the pivot row and retry
                    for c in t..cols {
                        m[t][c] = m[t][c].checked_add(m[r][c]).ok_or(HomologyError::IntegerOverflow)?;
                    }
                }
                None => break,
            }
        }
        factors.push(m[t][t].checked_abs().ok_or(HomologyError::IntegerOverflow)?);
        t += 1;
    }
    Ok(factors)
}

fn smallest_entry(m: &[Vec<i64>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, u64)> = None;
    for (r, row) in m.iter().enumerate().skip(t) {
        for (c, &v) in row.iter().enumerate().skip(t) {
            if v != 0 && best.is_none_or(|b| v.unsigned_abs() < b.2) {
                best = Some((r, c, v.unsigned_abs()));
                if v.unsigned_abs() == 1 {
                    return Some((r, c));
                }
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

/// Smallest nonzero entry in row `t` or column `t` of the trailing block.
fn smallest_in_cross(m: &[Vec<i64>], t: usize) -> (usize, usize) {
    let mut best = (t, t, m[t][t].unsigned_abs());
    for (r, row) in m.iter().enumerate().skip(t + 1) {
        let v = row[t].unsigned_abs();
        if v != 0 && v < best.2 {
            best = (r, t, v);
        }
    }
    for (c, &v) in m[t].iter().enumerate().skip(t + 1) {
        if v != 0 && v.unsigned_abs() < best.2 {
            best = (t, c, v.unsigned_abs());
        }
    }
    (best.0, best.1)
}

/// `row[r] -= q * row[src]`
fn row_axpy(m: &mut [Vec<i64>], r: usize, src: usize, q: i64) -> Result<(), HomologyError> {
    let (a, b) = if r < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[r], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(r);
        (&mut hi[0], &lo[src])
    };
    for (x, &y) in a.iter_mut().zip(b.iter()) {
        if y != 0 {
            *x = q.checked_mul(y).and_then(|p| x.checked_sub(p)).ok_or(HomologyError::IntegerOverflow)?;
        }
    }
    Ok(())
}

/// `col[c] -= q * col[src]`
fn col_axpy(m: &mut [Vec<i64>], c: usize, src: usize, q: i64) -> Result<(), HomologyError> {
    for row in m.iter_mut() {
        if row[src] != 0 {
            row[c] = q.checked_mul(row[src]).and_then(|p| row[c].checked_sub(p)).ok_or(HomologyError::IntegerOverflow)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_forms() {
        assert_eq!(invariant_factors(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap(), vec![2, 6, 12]);
        assert_eq!(invariant_factors(vec![vec![0, 0], vec![0, 0]]).unwrap(), Vec::<i64>::new());
        assert_eq!(invariant_factors(vec![vec![2, 0], vec![0, 3]]).unwrap(), vec![1, 6]);
        assert_eq!(invariant_factors(vec![]).unwrap(), Vec::<i64>::new());
        assert_eq!(invariant_factors(vec![vec![1, 1, 0]]).unwrap(), vec![1]);
    }

    #[test]
    fn determinant_is_preserved() {
        // |det| equals the product of the invariant factors for a full-rank square matrix
        let m = vec![vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]];
        let det: i64 = 3 * (5 * 5 - 9 * 6) - (5 - 9 * 2) + 4 * (6 - 5 * 2);
        let f = invariant_factors(m).unwrap();
        assert_eq!(f.iter().product::<i64>(), det.abs());
        assert!(f.windows(2).all(|w| w[1] % w[0] == 0));
    }
}
