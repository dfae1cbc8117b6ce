use gradedpoly::Rational;
use num_traits::Zero;

/// Rank of a dense rational matrix by Gaussian elimination, exact.
pub fn rank_over_q(rows: &mut Vec<Vec<Rational>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        let Some(piv) = (row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, piv);
        let inv = {
            let p = &rows[row][col];
            Rational::new(p.denom().clone(), p.numer().clone())
        };
        for c in col..ncols {
            let v = &rows[row][c] * &inv;
            rows[row][c] = v;
        }
        for r in 0..nrows {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..ncols {
                    let v = &rows[r][c] - &(&f * &rows[row][c]);
                    rows[r][c] = v;
                }
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}
