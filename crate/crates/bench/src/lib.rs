//! Inputs shared by the benchmarks.

use corank::linalg::QMatrix;

/// A dense `n × n` integer matrix of rank `n − 1` with varied entries.
pub fn corank_one_matrix(n: usize) -> QMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r + 1 == n {
                        // last row is the sum of the others
                        (0..n - 1).map(|k| entry(k, c)).sum()
                    } else {
                        entry(r, c)
                    }
                })
                .collect()
        })
        .collect();
    QMatrix::from_i64_rows(&rows)
}

fn entry(r: usize, c: usize) -> i64 {
    ((r * 7 + c * 13 + r * c) % 19) as i64 - 9
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_is_one_less() {
        assert_eq!(corank::ranklab::rank_exact(&corank_one_matrix(8)), 7);
    }
}
