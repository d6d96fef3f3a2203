//! Smith normal form over the integers, generic over the integer type.

use num_integer::Integer;
use num_traits::Signed;

fn find_pivot<T: Integer + Signed + Clone>(m: &[Vec<T>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Diagonal of the Smith normal form of `matrix` (rows of equal length):
/// non-negative, each entry dividing the next, zeros dropped.
pub fn smith_diagonal<T>(mut m: Vec<Vec<T>>) -> Vec<T>
where
    T: Integer + Signed + Clone,
{
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = find_pivot(&m, t) else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            // clear column t below the pivot
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let sub = q.clone() * m[t][j].clone();
                    m[i][j] = m[i][j].clone() - sub;
                }
                if !m[i][t].is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let sub = q.clone() * row[t].clone();
                    row[j] = row[j].clone() - sub;
                }
                if !m[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the rest of the submatrix
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
                match offender {
                    Some(i) => {
                        for j in t..cols {
                            let add = m[i][j].clone();
                            m[t][j] = m[t][j].clone() + add;
                        }
                    }
                    None => break,
                }
            }
            // move the smallest non-zero entry of row/column t onto the pivot
            let (mut bi, mut bj) = (t, t);
            for i in t..rows {
                if !m[i][t].is_zero() && (m[bi][bj].is_zero() || m[i][t].abs() < m[bi][bj].abs()) {
                    (bi, bj) = (i, t);
                }
            }
            for j in t..cols {
                if !m[t][j].is_zero() && (m[bi][bj].is_zero() || m[t][j].abs() < m[bi][bj].abs()) {
                    (bi, bj) = (t, j);
                }
            }
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
        }
        diagonal.push(m[t][t].abs());
    }
    diagonal
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_examples() {
        assert_eq!(smith_diagonal(vec![vec![2i64, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(
            smith_diagonal(vec![vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2, 6, 12]
        );
        assert_eq!(smith_diagonal::<i64>(vec![vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(smith_diagonal::<i64>(vec![]), Vec::<i64>::new());
        assert_eq!(smith_diagonal(vec![vec![1i32, -1], vec![-1, 1]]), vec![1]);
    }

    #[test]
    fn generic_over_integer_types() {
        let m = vec![vec![BigInt::from(4), BigInt::from(6)]];
        assert_eq!(smith_diagonal(m), vec![BigInt::from(2)]);
        assert_eq!(smith_diagonal(vec![vec![4i128, 6]]), vec![2]);
    }
}
