//! Exact nullspaces and the finite-window checks of the two uniqueness
//! results: a face-count combination `chi(g, .)` that is constant on all
//! simplices, or unchanged by barycentric subdivision of all simplices, has
//! weight series `g = c/(1+x)`.
//!
//! Every check works on a finite window `0..=m`. Because all matrices in
//! play are lower triangular, coefficient `n` of every result depends only
//! on coefficients `0..=n` of the input, so each window is an honest
//! statement about the infinite object truncated there.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::fps::{int, Coefficient, Series};
use crate::matrix::ExactMatrix;
use crate::riordan::RiordanPair;
use crate::simplicial::Complex;
use crate::subdivision::{alternating_sum, apply_b, matrix_b};

/// A basis of `{v : M v = 0}` in reduced-echelon parametrization: one vector
/// per free column (in increasing column order) with a 1 in that column and
/// 0 in the other free columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullspaceBasis {
    pub basis: Vec<Vec<Coefficient>>,
}

impl NullspaceBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Reduced row echelon form by Gauss-Jordan elimination. Returns the reduced
/// matrix and the pivot column of each nonzero row.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut rows = m.to_rows();
    let ncols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let reduced = if rows.is_empty() {
        ExactMatrix::zeros(0, ncols)
    } else {
        ExactMatrix::from_rows(rows).expect("rectangular")
    };
    (reduced, pivots)
}

pub fn nullspace(m: &ExactMatrix) -> NullspaceBasis {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Coefficient::zero(); m.cols()];
            v[f] = Coefficient::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect();
    NullspaceBasis { basis }
}

/// Scales `v` so that its first nonzero entry is 1.
pub fn normalize(v: &[Coefficient]) -> Vec<Coefficient> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => {
            let inv = lead.recip();
            v.iter().map(|c| c * &inv).collect()
        }
        None => v.to_vec(),
    }
}

fn alternating(len: usize) -> Vec<Coefficient> {
    Series::geometric(&int(-1), len).into_coeffs()
}

fn format_vector<T: fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

/// The eigenspace of `B_m` for eigenvalue 1, i.e. the nullspace of `B_m - I`.
pub fn eigenspace_of_b(m: usize) -> NullspaceBasis {
    let shifted = matrix_b(m)
        .checked_sub(&ExactMatrix::identity(m + 1))
        .expect("square");
    nullspace(&shifted)
}

/// Outcome of the eigenspace check on one window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenCheck {
    pub window: usize,
    pub basis: NullspaceBasis,
    /// Dimension one, spanned by `(1, -1, 1, ...)`.
    pub pass: bool,
}

impl fmt::Display for EigenCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis: Vec<String> = self
            .basis
            .basis
            .iter()
            .map(|v| format_vector(&normalize(v)))
            .collect();
        write!(
            f,
            "m={} dim={} basis={} {}",
            self.window,
            self.basis.dimension(),
            basis.join(";"),
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

pub fn check_eigenspace(m: usize) -> EigenCheck {
    let basis = eigenspace_of_b(m);
    let pass = basis.dimension() == 1 && normalize(&basis.basis[0]) == alternating(m + 1);
    EigenCheck {
        window: m,
        basis,
        pass,
    }
}

/// The weight series forced by constancy on simplices: if `chi(g, simplex(n))
/// = k` for every `n`, then `F g = k/(1-x)` and `g = F^-1 (k/(1-x))`.
pub fn homotopy_unique(k: &Coefficient, precision: usize) -> Series {
    let f_inv = RiordanPair::f_matrix(precision).inverse();
    f_inv.apply(&Series::geometric(&int(1), precision).scale(k))
}

/// All weight vectors `(g_0, ..., g_m)` with `chi(g, simplex(n))` the same
/// for every `n <= m`: the nullspace of the differences of the rows of the
/// f-vector matrix window.
pub fn simplex_constant_weights(m: usize) -> NullspaceBasis {
    let f = RiordanPair::f_matrix(m + 1)
        .to_matrix(m)
        .expect("window fits");
    let diffs = ExactMatrix::from_fn(m, m + 1, |i, j| f.get(i + 1, j) - f.get(0, j));
    nullspace(&diffs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdInvariance {
    pub invariant: bool,
    /// First index where `B g` and `g` differ.
    pub first_difference: Option<usize>,
}

/// Whether `chi(g, .)` is unchanged by subdivision on every simplex, which
/// amounts to `B g = g` on the known coefficients.
pub fn check_sd_invariant(g: &Series) -> SdInvariance {
    let image = apply_b(g);
    let first_difference = image
        .coeffs()
        .iter()
        .zip(g.coeffs())
        .position(|(a, b)| a != b);
    SdInvariance {
        invariant: first_difference.is_none(),
        first_difference,
    }
}

/// One line of [`SdReport`]: the f-vector of `sd^k(C)` from the subdivided
/// complex and from `f B^k`, with the Euler characteristic of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdReportRow {
    pub k: usize,
    pub f_combinatorial: Vec<BigInt>,
    pub f_algebraic: Vec<BigInt>,
    pub chi_combinatorial: BigInt,
    pub chi_algebraic: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdReport {
    pub rows: Vec<SdReportRow>,
}

impl SdReport {
    /// Both pipelines agree at every `k` and the characteristic never changes.
    pub fn consistent(&self) -> bool {
        let chi0 = &self.rows[0].chi_combinatorial;
        self.rows.iter().all(|r| {
            r.f_combinatorial == r.f_algebraic
                && &r.chi_combinatorial == chi0
                && &r.chi_algebraic == chi0
        })
    }
}

impl fmt::Display for SdReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let ok = r.f_combinatorial == r.f_algebraic && r.chi_combinatorial == r.chi_algebraic;
            writeln!(
                f,
                "k={} f={} fB^k={} chi={} chi_alg={} {}",
                r.k,
                format_vector(&r.f_combinatorial),
                format_vector(&r.f_algebraic),
                r.chi_combinatorial,
                r.chi_algebraic,
                if ok { "ok" } else { "MISMATCH" }
            )?;
        }
        write!(f, "consistent={}", self.consistent())
    }
}

/// Subdivides `complex` up to `kmax` times and compares, at each step, the
/// counted f-vector with the row product `f B^k`.
pub fn chi_sd_report(complex: &Complex, kmax: usize) -> Result<SdReport> {
    let f0 = complex.f_vector();
    let b = matrix_b(f0.len() - 1);
    let mut row: Vec<Coefficient> = f0
        .iter()
        .map(|&n| Coefficient::from_integer(BigInt::from(n)))
        .collect();
    let mut current = complex.clone();
    let mut rows = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        if k > 0 {
            current = current.barycentric_subdivide()?;
            row = b.row_mul(&row)?;
        }
        let f_combinatorial: Vec<BigInt> =
            current.f_vector().into_iter().map(BigInt::from).collect();
        let f_algebraic: Vec<BigInt> = row.iter().map(|c| c.to_integer()).collect();
        rows.push(SdReportRow {
            k,
            chi_combinatorial: BigInt::from(current.chi()),
            chi_algebraic: alternating_sum(&f_algebraic),
            f_combinatorial,
            f_algebraic,
        });
    }
    Ok(SdReport { rows })
}
