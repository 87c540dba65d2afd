use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rows `0..=n` of Pascal's triangle over arbitrary precision integers.
///
/// Lookups outside `0 ≤ k ≤ n` give zero, which clamps partial binomial
/// sums with negative or oversized bounds.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut table = BinomialTable {
            rows: vec![vec![BigInt::one()]],
        };
        table.extend_to(max_n);
        table
    }

    /// Largest `n` currently cached.
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn extend_to(&mut self, max_n: usize) {
        while self.rows.len() <= max_n {
            let prev = self.rows.last().expect("row 0 always present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigInt::one());
            self.rows.push(row);
        }
    }

    /// `C(n, k)`, zero when `k < 0` or `k > n`.
    ///
    /// # Panics
    /// If `n` exceeds the cached range.
    pub fn get(&self, n: i64, k: i64) -> BigInt {
        if n < 0 || k < 0 || k > n {
            return BigInt::zero();
        }
        let row = self
            .rows
            .get(n as usize)
            .unwrap_or_else(|| panic!("C({n}, ·) outside table of {} rows", self.rows.len()));
        row[k as usize].clone()
    }

    /// `C(2g, k) − C(2g, k − 2)`, the dimension of the primitive part of
    /// the k-th exterior power of a 2g-dimensional symplectic space.
    pub fn primitive_dim(&self, g: u32, k: i64) -> BigInt {
        let n = 2 * g as i64;
        self.get(n, k) - self.get(n, k - 2)
    }
}
