//! The Riordan group in the `T(beta | alpha)` convention.
//!
//! For series `beta`, `alpha` with nonzero constant terms, `T(beta | alpha)`
//! is the infinite lower-triangular matrix whose `k`-th column holds the
//! coefficients of
//!
//! ```text
//! (beta / alpha) * (x / alpha)^k
//! ```
//!
//! i.e. a geometric progression with first term `beta/alpha` and ratio
//! `x/alpha`. Acting on a column of series coefficients, the matrix is the
//! linear map
//!
//! ```text
//! g  |->  (beta / alpha) * g(x / alpha)
//! ```
//!
//! Products and inverses stay inside the family:
//!
//! ```text
//! T(b1|a1) T(b2|a2) = T(b1 * b2(w) | a1 * a2(w)),      w = x / a1
//! T(b|a)^-1         = T(1 / b(w^-1) | 1 / a(w^-1)),    w = x / a
//! ```
//!
//! Note this is not the `(d(x), h(x))` convention common elsewhere; the two
//! are related by `d = beta/alpha`, `h = x/alpha`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fps::{int, Coefficient, Series};
use crate::matrix::ExactMatrix;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RiordanPair {
    beta: Series,
    alpha: Series,
    truncation: usize,
}

impl RiordanPair {
    /// Builds `T(beta | alpha)`, truncated to the smaller of the two precisions.
    pub fn new(beta: Series, alpha: Series) -> Result<Self> {
        let truncation = beta.precision().min(alpha.precision());
        if beta.coeffs()[0].is_zero() || alpha.coeffs()[0].is_zero() {
            return Err(Error::NotAdmissible);
        }
        Ok(RiordanPair {
            beta: beta.truncate(truncation),
            alpha: alpha.truncate(truncation),
            truncation,
        })
    }

    /// The group identity `T(1 | 1)`.
    pub fn identity(truncation: usize) -> Self {
        Self::new(Series::one(truncation), Series::one(truncation)).expect("1 is admissible")
    }

    /// Pascal's triangle, `T(1 | 1 - x)`.
    pub fn pascal(truncation: usize) -> Self {
        Self::new(
            Series::one(truncation),
            Series::from_polynomial(&[int(1), int(-1)], truncation),
        )
        .expect("1 - x is admissible")
    }

    /// The matrix of f-vectors of simplices, `T(1/(1-x) | 1 - x)`: row `n` is
    /// the f-vector of the `n`-simplex.
    pub fn f_matrix(truncation: usize) -> Self {
        Self::new(
            Series::geometric(&int(1), truncation),
            Series::from_polynomial(&[int(1), int(-1)], truncation),
        )
        .expect("1 - x is admissible")
    }

    pub fn beta(&self) -> &Series {
        &self.beta
    }

    pub fn alpha(&self) -> &Series {
        &self.alpha
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// `x / alpha`, the ratio of the column progression. Valuation 1.
    pub fn ratio(&self) -> Series {
        let inv = self.alpha.invert().expect("admissible alpha is invertible");
        inv.shift_up().truncate(self.truncation)
    }

    /// `beta / alpha`, the first column.
    pub fn first_column(&self) -> Series {
        self.beta
            .divide(&self.alpha)
            .expect("admissible alpha is invertible")
    }

    /// Columns `0..count` as series, built incrementally.
    pub fn columns(&self, count: usize) -> Vec<Series> {
        let ratio = self.ratio();
        let mut cols = Vec::with_capacity(count);
        let mut col = self.first_column();
        for _ in 0..count {
            let next = &col * &ratio;
            cols.push(std::mem::replace(&mut col, next));
        }
        cols
    }

    /// Matrix entry in row `n`, column `k`.
    pub fn entry(&self, n: usize, k: usize) -> Result<Coefficient> {
        let bound = n.max(k);
        if bound >= self.truncation {
            return Err(Error::IndexOutOfRange {
                index: bound,
                precision: self.truncation,
            });
        }
        if k > n {
            return Ok(Coefficient::zero());
        }
        let col = self.columns(k + 1).pop().expect("k + 1 columns");
        Ok(col.coeffs()[n].clone())
    }

    /// The `(m+1) x (m+1)` leading window of the matrix.
    pub fn to_matrix(&self, m: usize) -> Result<ExactMatrix> {
        if m >= self.truncation {
            return Err(Error::IndexOutOfRange {
                index: m,
                precision: self.truncation,
            });
        }
        let cols = self.columns(m + 1);
        Ok(ExactMatrix::from_fn(m + 1, m + 1, |i, j| {
            cols[j].coeffs()[i].clone()
        }))
    }

    /// The linear action `g |-> (beta/alpha) * g(x/alpha)`. This equals the
    /// matrix times the coefficient column of `g`.
    pub fn apply(&self, g: &Series) -> Series {
        let n = self.truncation.min(g.precision());
        let inner = self.ratio().truncate(n);
        let composed = g
            .truncate(n)
            .compose(&inner)
            .expect("x/alpha has zero constant term");
        &self.first_column().truncate(n) * &composed
    }

    /// Group product: the result's matrix is `self * other`.
    pub fn multiply(&self, other: &RiordanPair) -> RiordanPair {
        let n = self.truncation.min(other.truncation);
        let w = self.ratio().truncate(n);
        let beta =
            &self.beta.truncate(n) * &other.beta.truncate(n).compose(&w).expect("valuation 1");
        let alpha =
            &self.alpha.truncate(n) * &other.alpha.truncate(n).compose(&w).expect("valuation 1");
        RiordanPair::new(beta, alpha).expect("product of admissible pairs is admissible")
    }

    /// Group inverse.
    pub fn inverse(&self) -> RiordanPair {
        let n = self.truncation;
        if n == 1 {
            // Only the constant terms are known; the matrix is 1x1.
            let beta = Series::constant(self.beta.coeffs()[0].recip(), 1);
            let alpha = Series::constant(self.alpha.coeffs()[0].recip(), 1);
            return RiordanPair::new(beta, alpha).expect("nonzero constants");
        }
        let w_inv = self
            .ratio()
            .comp_inverse()
            .expect("x/alpha has valuation 1");
        let beta = self
            .beta
            .compose(&w_inv)
            .and_then(|s| s.invert())
            .expect("beta_0 != 0");
        let alpha = self
            .alpha
            .compose(&w_inv)
            .and_then(|s| s.invert())
            .expect("alpha_0 != 0");
        RiordanPair::new(beta, alpha).expect("inverse of an admissible pair is admissible")
    }
}

#[derive(Deserialize)]
struct RiordanRepr {
    beta: Series,
    alpha: Series,
    truncation: usize,
}

impl<'de> Deserialize<'de> for RiordanPair {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = RiordanRepr::deserialize(deserializer)?;
        let pair = RiordanPair::new(repr.beta, repr.alpha).map_err(D::Error::custom)?;
        if pair.truncation != repr.truncation {
            return Err(D::Error::custom(
                "truncation does not match the series precisions",
            ));
        }
        Ok(pair)
    }
}
