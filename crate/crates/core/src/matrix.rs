//! Dense matrices of exact rationals.

use std::fmt;
use std::ops::{Mul, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fps::{format_coefficient, parse_coefficient, Coefficient, Series};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Coefficient>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Coefficient::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Coefficient::one()
            } else {
                Coefficient::zero()
            }
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Coefficient,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Coefficient>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        let n = rows.len();
        Ok(ExactMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        assert!(
            i < self.rows && j < self.cols,
            "({i}, {j}) outside a {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Coefficient) {
        assert!(
            i < self.rows && j < self.cols,
            "({i}, {j}) outside a {}x{} matrix",
            self.rows,
            self.cols
        );
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Coefficient] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Coefficient>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    /// The window obtained by deleting the first `skip` rows and columns.
    pub fn drop_leading(&self, skip: usize) -> Self {
        let rows = self.rows.saturating_sub(skip);
        let cols = self.cols.saturating_sub(skip);
        Self::from_fn(rows, cols, |i, j| self.get(i + skip, j + skip).clone())
    }

    /// The leading `n x n` block.
    pub fn leading(&self, n: usize) -> Self {
        assert!(n <= self.rows && n <= self.cols);
        Self::from_fn(n, n, |i, j| self.get(i, j).clone())
    }

    pub fn checked_mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(
                "subtraction of differently shaped matrices".into(),
            ));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `M v` with `v` a column vector.
    pub fn mul_column(&self, v: &[Coefficient]) -> Result<Vec<Coefficient>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix times column of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `v M` with `v` a row vector.
    pub fn row_mul(&self, v: &[Coefficient]) -> Result<Vec<Coefficient>> {
        if v.len() != self.rows {
            return Err(Error::Shape(format!(
                "row of length {} times {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![Coefficient::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(i)) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Applies a square matrix to the coefficient column of a series. The
    /// series must have exactly as many coefficients as the matrix has columns.
    pub fn apply_to_series(&self, s: &Series) -> Result<Series> {
        Series::from_coeffs(self.mul_column(s.coeffs())?)
    }

    pub fn to_string_grid(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(format_coefficient).collect())
            .collect()
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    /// # Panics
    ///
    /// Panics on mismatched inner dimensions; see [`ExactMatrix::checked_mul`].
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    /// # Panics
    ///
    /// Panics on mismatched shapes; see [`ExactMatrix::checked_sub`].
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_sub(rhs).expect("matrix shapes must agree")
    }
}

impl fmt::Display for ExactMatrix {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(format_coefficient).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.to_string_grid(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = MatrixRepr::deserialize(deserializer)?;
        let rows = repr
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_coefficient(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let m = ExactMatrix::from_rows(rows).map_err(D::Error::custom)?;
        if m.rows != repr.rows || (m.rows > 0 && m.cols != repr.cols) {
            return Err(D::Error::custom("declared shape does not match entries"));
        }
        Ok(ExactMatrix {
            cols: repr.cols,
            ..m
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::int;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn product_and_identity() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(&a * &ExactMatrix::identity(2), a);
        assert_eq!(&a * &a, m(&[&[7, 10], &[15, 22]]));
        assert!(a.checked_mul(&m(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn row_and_column_actions_are_transposes() {
        let a = m(&[&[1, 0, 0], &[1, 2, 0], &[1, 6, 6]]);
        let v = vec![int(3), int(3), int(1)];
        assert_eq!(
            a.row_mul(&v).unwrap(),
            a.transpose().mul_column(&v).unwrap()
        );
        assert_eq!(a.row_mul(&v).unwrap(), vec![int(7), int(12), int(6)]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(ExactMatrix::from_rows(vec![vec![int(1)], vec![int(1), int(2)]]).is_err());
    }

    #[test]
    fn windows() {
        let a = m(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]]);
        assert_eq!(a.drop_leading(1), m(&[&[1, 0], &[2, 1]]));
        assert_eq!(a.leading(2), m(&[&[1, 0], &[1, 1]]));
        assert!(a.is_lower_triangular());
        assert!(!a.transpose().is_lower_triangular());
    }

    #[test]
    fn json_grid() {
        let a = m(&[&[1, 0], &[-1, 1]]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"{"rows":2,"cols":2,"entries":[["1","0"],["-1","1"]]}"#
        );
        let back: ExactMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
