//! Rational homology of finite simplicial sets, in exact integer
//! arithmetic.
//!
//! Chains are taken on the nondegenerate generators (faces that resolve
//! to degenerate pointers contribute zero), so the boundary matrices
//! read off the stored presentation directly. Ranks come from
//! fraction-free elimination over arbitrary-precision integers; no
//! floating point is involved anywhere.

use crate::sset::{SimplicialSet, SsetError};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The matrix of the boundary map from n-chains to (n-1)-chains: rows
/// indexed by (n-1)-generators, columns by n-generators, entry
/// `sum of (-1)^i` over the faces `d_i` landing on the row generator
/// with an empty degeneracy word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
}

/// Ranks of the rational homology groups, dimension by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile(pub Vec<usize>);

impl BettiProfile {
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Boundary matrices in dimensions `1 ..= top`. Also checks that
/// consecutive matrices compose to zero.
pub fn boundary_matrices(k: &SimplicialSet) -> Result<Vec<BoundaryMatrix>, SsetError> {
    let counts = k.counts_by_dimension();
    let mut out = Vec::new();
    for dim in 1..counts.len() {
        let rows = counts[dim - 1];
        let cols = counts[dim];
        let mut entries = vec![vec![0i64; cols]; rows];
        for (col, g) in k.generators_of_dim(dim).enumerate() {
            for i in 0..=dim {
                let fp = k.stored_face(g, i)?;
                if fp.word.is_empty() {
                    entries[fp.target.index][col] += if i % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        out.push(BoundaryMatrix {
            dim,
            rows,
            cols,
            entries,
        });
    }
    for w in out.windows(2) {
        check_composite_zero(&w[0], &w[1])?;
    }
    Ok(out)
}

/// Sparse check that `∂_{n-1} ∘ ∂_n = 0`.
fn check_composite_zero(lower: &BoundaryMatrix, upper: &BoundaryMatrix) -> Result<(), SsetError> {
    for col in 0..upper.cols {
        let mut acc = vec![0i64; lower.rows];
        for mid in 0..upper.rows {
            let coeff = upper.entries[mid][col];
            if coeff == 0 {
                continue;
            }
            for (row, slot) in acc.iter_mut().enumerate() {
                *slot += coeff * lower.entries[row][mid];
            }
        }
        if acc.iter().any(|&x| x != 0) {
            return Err(SsetError::NotAComplex { dim: upper.dim });
        }
    }
    Ok(())
}

/// Rank of an integer matrix by Bareiss fraction-free elimination with
/// pivoting on the smallest nonzero magnitude.
pub(crate) fn integer_rank(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    if cols == 0 {
        return 0;
    }
    // Work on the transpose when it is thinner; rank is unchanged.
    let mut m: Vec<Vec<BigInt>> = if cols < rows {
        matrix
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    } else {
        (0..cols)
            .map(|c| matrix.iter().map(|row| BigInt::from(row[c])).collect())
            .collect()
    };
    let (rows, cols) = (m.len(), m[0].len());
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut r = 0usize;
    for c in 0..cols {
        let pivot = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].abs());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let num = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        rank += 1;
        r += 1;
        if r == rows {
            break;
        }
    }
    rank
}

/// Betti numbers `b_n = |K_n| - rank ∂_n - rank ∂_{n+1}` over the
/// rationals.
pub fn betti_numbers(k: &SimplicialSet) -> Result<BettiProfile, SsetError> {
    let counts = k.counts_by_dimension();
    if counts.is_empty() {
        return Ok(BettiProfile(Vec::new()));
    }
    let matrices = boundary_matrices(k)?;
    let ranks: Vec<usize> = matrices.iter().map(|m| integer_rank(&m.entries)).collect();
    let rank_at = |n: usize| -> usize {
        if n == 0 || n > ranks.len() {
            0
        } else {
            ranks[n - 1]
        }
    };
    let mut betti = Vec::with_capacity(counts.len());
    for (n, &c) in counts.iter().enumerate() {
        let drop = rank_at(n) + rank_at(n + 1);
        if drop > c {
            return Err(SsetError::NotAComplex { dim: n });
        }
        betti.push(c - drop);
    }
    Ok(BettiProfile(betti))
}

/// Euler characteristic as the alternating sum of Betti numbers; on a
/// valid set this always equals the alternating generator count.
pub fn euler_via_homology(k: &SimplicialSet) -> Result<i64, SsetError> {
    Ok(betti_numbers(k)?.euler())
}
