//! Exact permanents by Ryser's inclusion–exclusion formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`permanent_ryser`].
pub const MAX_PERMANENT_ORDER: usize = 30;

/// Square matrix of big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_PERMANENT_ORDER {
            return Err(Error::SizeLimit { n, limit: MAX_PERMANENT_ORDER });
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        Ok(IntMatrix { n, rows })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
                .collect(),
        )
    }

    pub fn of_graph(g: &Graph) -> Result<Self> {
        let a = g.adjacency_matrix();
        Self::new(
            a.rows()
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

/// `per(A) = (−1)^n Σ_{∅≠S⊆cols} (−1)^{|S|} Π_i Σ_{j∈S} a_ij`.
///
/// Column subsets are visited in Gray-code order so each step toggles one
/// column and updates the row sums in `O(n)`.
pub fn permanent_ryser(m: &IntMatrix) -> Result<BigInt> {
    let n = m.order();
    if n > MAX_PERMANENT_ORDER {
        return Err(Error::SizeLimit { n, limit: MAX_PERMANENT_ORDER });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut row_sums = vec![BigInt::zero(); n];
    let mut in_subset = vec![false; n];
    let mut subset_size = 0usize;
    let mut total = BigInt::zero();
    for step in 1u64..(1u64 << n) {
        let col = step.trailing_zeros() as usize;
        let adding = !in_subset[col];
        in_subset[col] = adding;
        if adding {
            subset_size += 1;
        } else {
            subset_size -= 1;
        }
        for (sum, row) in row_sums.iter_mut().zip(&m.rows) {
            if adding {
                *sum += &row[col];
            } else {
                *sum -= &row[col];
            }
        }
        if row_sums.iter().any(Zero::is_zero) {
            continue;
        }
        let prod = row_sums.iter().fold(BigInt::one(), |acc, s| acc * s);
        if subset_size.is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(if n.is_multiple_of(2) { total } else { -total })
}

pub fn permanent_of_graph(g: &Graph) -> Result<BigInt> {
    permanent_ryser(&IntMatrix::of_graph(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_petersen};
    use rand::{Rng, SeedableRng};

    /// Sum over all permutations, Heap's algorithm.
    fn naive_permanent(m: &IntMatrix) -> BigInt {
        let n = m.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let term = |p: &[usize]| {
            p.iter()
                .enumerate()
                .fold(BigInt::one(), |acc, (i, &j)| acc * &m.rows()[i][j])
        };
        let mut total = term(&perm);
        let mut c = vec![0; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                total += term(&perm);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        total
    }

    #[test]
    fn basic_values() {
        for n in 0..8 {
            assert_eq!(permanent_ryser(&IntMatrix::identity(n).unwrap()).unwrap(), BigInt::one());
        }
        let ones = IntMatrix::from_i64(&vec![vec![1; 3]; 3]).unwrap();
        assert_eq!(permanent_ryser(&ones).unwrap(), BigInt::from(6));
        assert_eq!(permanent_of_graph(&Graph::empty(4)).unwrap(), BigInt::zero());
        // cycle covers of C_n: two orientations, plus two perfect matchings when n is even
        assert_eq!(permanent_of_graph(&make_cycle(5).unwrap()).unwrap(), BigInt::from(2));
        assert_eq!(permanent_of_graph(&make_cycle(6).unwrap()).unwrap(), BigInt::from(4));
    }

    #[test]
    fn petersen_value() {
        assert_eq!(permanent_of_graph(&make_petersen()).unwrap(), BigInt::from(60));
    }

    #[test]
    fn size_limit() {
        assert_eq!(
            IntMatrix::identity(31).unwrap_err(),
            Error::SizeLimit { n: 31, limit: 30 }
        );
        assert!(IntMatrix::from_i64(&[vec![1, 2]]).is_err());
    }

    #[test]
    fn agrees_with_naive_oracle() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(1..=7);
            let rows: Vec<Vec<i64>> =
                (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..=1)).collect()).collect();
            let m = IntMatrix::from_i64(&rows).unwrap();
            assert_eq!(permanent_ryser(&m).unwrap(), naive_permanent(&m));
        }
        for _ in 0..20 {
            let n = rng.gen_range(1..=6);
            let rows: Vec<Vec<i64>> =
                (0..n).map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect()).collect();
            let m = IntMatrix::from_i64(&rows).unwrap();
            assert_eq!(permanent_ryser(&m).unwrap(), naive_permanent(&m));
        }
    }

    #[test]
    fn permutation_invariance() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let p = make_petersen();
        let base = permanent_of_graph(&p).unwrap();
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..10).collect();
            for i in (1..10).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            assert_eq!(permanent_of_graph(&p.permute(&perm).unwrap()).unwrap(), base);
        }
    }
}
