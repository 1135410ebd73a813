//! Stirling numbers and the barycentric-subdivision operator.
//!
//! Under one barycentric subdivision the f-vector `(f_0, ..., f_m)` of a
//! complex changes by
//!
//! ```text
//! f_j(sd) = sum_i f_i * (j+1)! * S2(i+1, j+1)
//! ```
//!
//! so `f(sd) = f B` with `b_ij = (j+1)! S2(i+1, j+1)`. `B` factors as
//! `B = S D` with `S = (S2(i+1, j+1))` and `D = diag((i+1)!)`, and
//! `S^-1 = ((-1)^(i-j) S1(i+1, j+1))` in terms of unsigned Stirling numbers
//! of the first kind.
//!
//! Conventions: f-vectors start at `f_0` (no entry for the empty face).
//! They are *rows* and are multiplied by `B` on the left ([`sd_fvector`]).
//! Series coefficients are *columns* and `B` acts on them from the left as
//! a matrix ([`apply_b`]). The two actions are transposes of each other and
//! `chi(g, sd(C)) = chi(B g, C)` ties them together.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::fps::{Coefficient, Series};
use crate::matrix::ExactMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    /// Unsigned, `[n, k]`: permutations of `n` elements with `k` cycles.
    First,
    /// `{n, k}`: partitions of an `n`-set into `k` blocks.
    Second,
}

/// Triangular table of Stirling numbers `0 <= k <= n <= bound`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind, bound: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(bound + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=bound {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let stay = if k < n {
                        prev[k].clone()
                    } else {
                        BigInt::zero()
                    };
                    let grow = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    let factor = match kind {
                        StirlingKind::First => BigInt::from(n - 1),
                        StirlingKind::Second => BigInt::from(k),
                    };
                    factor * stay + grow
                })
                .collect();
            rows.push(row);
        }
        StirlingTable { kind, rows }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn bound(&self) -> usize {
        self.rows.len() - 1
    }

    /// The entry at `(n, k)`; zero when `k > n`.
    ///
    /// # Panics
    ///
    /// Panics if `n` exceeds the table bound.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}

/// Stirling number of the second kind `{n, k}`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    StirlingTable::new(StirlingKind::Second, n).get(n, k)
}

/// Unsigned Stirling number of the first kind `[n, k]`.
pub fn stirling1(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    StirlingTable::new(StirlingKind::First, n).get(n, k)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn rat(n: BigInt) -> Coefficient {
    Coefficient::from_integer(n)
}

/// `S = ({i+1, j+1})`, window `0..=m`.
pub fn matrix_s(m: usize) -> ExactMatrix {
    let t = StirlingTable::new(StirlingKind::Second, m + 1);
    ExactMatrix::from_fn(m + 1, m + 1, |i, j| rat(t.get(i + 1, j + 1)))
}

/// `D = diag((i+1)!)`, window `0..=m`.
pub fn matrix_d(m: usize) -> ExactMatrix {
    let facts = factorials(m + 1);
    ExactMatrix::from_fn(m + 1, m + 1, |i, j| {
        if i == j {
            rat(facts[i + 1].clone())
        } else {
            Coefficient::zero()
        }
    })
}

/// `B = (b_ij)`, `b_ij = (j+1)! {i+1, j+1}`, window `0..=m`.
pub fn matrix_b(m: usize) -> ExactMatrix {
    let t = StirlingTable::new(StirlingKind::Second, m + 1);
    let facts = factorials(m + 1);
    ExactMatrix::from_fn(
        m + 1,
        m + 1,
        |i, j| rat(&facts[j + 1] * t.get(i + 1, j + 1)),
    )
}

/// `S^-1 = ((-1)^(i-j) [i+1, j+1])`, window `0..=m`.
pub fn matrix_s_inverse(m: usize) -> ExactMatrix {
    let t = StirlingTable::new(StirlingKind::First, m + 1);
    ExactMatrix::from_fn(m + 1, m + 1, |i, j| {
        let v = rat(t.get(i + 1, j + 1));
        if (i + j) % 2 == 0 {
            v
        } else {
            -v
        }
    })
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for i in 1..=n {
        let next = &out[i - 1] * i;
        out.push(next);
    }
    out
}

/// The f-vector of the barycentric subdivision of any complex with f-vector
/// `f`, i.e. the row product `f B_m` with `m = f.len() - 1`.
pub fn sd_fvector<T: Clone + Into<BigInt>>(f: &[T]) -> Vec<BigInt> {
    if f.is_empty() {
        return Vec::new();
    }
    let m = f.len() - 1;
    let t = StirlingTable::new(StirlingKind::Second, m + 1);
    let facts = factorials(m + 1);
    let f: Vec<BigInt> = f.iter().cloned().map(Into::into).collect();
    (0..=m)
        .map(|j| {
            let sum: BigInt = (j..=m).map(|i| &f[i] * t.get(i + 1, j + 1)).sum();
            sum * &facts[j + 1]
        })
        .collect()
}

/// `B` acting on a series as a column: `eta_i = sum_{j <= i} b_ij zeta_j`.
pub fn apply_b(g: &Series) -> Series {
    let b = matrix_b(g.precision() - 1);
    b.apply_to_series(g).expect("window matches precision")
}

/// `S` acting on a series as a column.
pub fn apply_s(g: &Series) -> Series {
    let s = matrix_s(g.precision() - 1);
    s.apply_to_series(g).expect("window matches precision")
}

/// `delta(x) = D(1/(1+x)) = sum (i+1)! (-x)^i`.
pub fn delta(precision: usize) -> Series {
    let facts = factorials(precision);
    Series::from_fn(precision, |i| {
        let v = rat(facts[i + 1].clone());
        if i % 2 == 0 {
            v
        } else {
            -v
        }
    })
}

/// Alternating sum `f_0 - f_1 + f_2 - ...` of an integer row.
pub fn alternating_sum<T: Clone + Into<BigInt>>(f: &[T]) -> BigInt {
    f.iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| if i % 2 == 0 { v.into() } else { -v.into() })
        .sum()
}

/// Applies `B` to `count` successive rows: `f, f B, f B^2, ...`.
pub fn sd_fvector_iterates<T: Clone + Into<BigInt>>(f: &[T], count: usize) -> Vec<Vec<BigInt>> {
    let mut out = Vec::with_capacity(count + 1);
    let mut cur: Vec<BigInt> = f.iter().cloned().map(Into::into).collect();
    for _ in 0..count {
        let next = sd_fvector(&cur);
        out.push(std::mem::replace(&mut cur, next));
    }
    out.push(cur);
    out
}
