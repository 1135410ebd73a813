//! Truncated formal power series over the rationals.
//!
//! A [`Series`] stores the coefficients `f_0, ..., f_{N-1}` of a power series
//! together with its precision `N`: every coefficient it reports is exact,
//! and nothing is claimed about `x^N` and beyond. Binary operations truncate
//! to the smaller of the two precisions, so a result never carries more
//! coefficients than its inputs justify.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number. Always kept in lowest terms with a positive
/// denominator.
pub type Coefficient = BigRational;

/// Shorthand for an integral [`Coefficient`].
pub fn int(n: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `num/den`.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Coefficient {
    Coefficient::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a coefficient as `p/q`, or `p` when the denominator is one.
pub fn format_coefficient(c: &Coefficient) -> String {
    c.to_string()
}

/// Parses `p/q` or `p` into a canonical coefficient.
pub fn parse_coefficient(s: &str) -> Result<Coefficient> {
    let s = s.trim();
    let c =
        Coefficient::from_str(s).map_err(|_| Error::Format(format!("not a rational: `{s}`")))?;
    Ok(c)
}

/// A formal power series known up to (but excluding) `x^precision`.
#[derive(Clone, Debug)]
pub struct Series {
    coeffs: Vec<Coefficient>,
}

impl Series {
    /// Builds a series from its first coefficients; the precision is the
    /// number of coefficients given.
    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Series { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Builds a series of the given precision from a coefficient function.
    ///
    /// # Panics
    ///
    /// Panics if `precision` is zero.
    pub fn from_fn(precision: usize, f: impl FnMut(usize) -> Coefficient) -> Self {
        assert!(precision > 0, "precision must be at least 1");
        Series {
            coeffs: (0..precision).map(f).collect(),
        }
    }

    /// Pads a polynomial with zeros (or truncates it) to the given precision.
    pub fn from_polynomial(coeffs: &[Coefficient], precision: usize) -> Self {
        Self::from_fn(precision, |i| {
            coeffs.get(i).cloned().unwrap_or_else(Coefficient::zero)
        })
    }

    pub fn zero(precision: usize) -> Self {
        Self::from_fn(precision, |_| Coefficient::zero())
    }

    pub fn constant(c: Coefficient, precision: usize) -> Self {
        Self::from_polynomial(&[c], precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Coefficient::one(), precision)
    }

    /// The identity series `x`.
    pub fn x(precision: usize) -> Self {
        Self::from_polynomial(&[Coefficient::zero(), Coefficient::one()], precision)
    }

    /// The expansion of `1/(1 - r x)`, that is `sum r^n x^n`.
    pub fn geometric(ratio: &Coefficient, precision: usize) -> Self {
        let mut term = Coefficient::one();
        Self::from_fn(precision, |_| {
            let c = term.clone();
            term = &term * ratio;
            c
        })
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coefficient> {
        self.coeffs
    }

    /// The coefficient of `x^n`.
    pub fn coeff(&self, n: usize) -> Result<&Coefficient> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            precision: self.precision(),
        })
    }

    /// Index of the first nonzero coefficient, or `None` when every known
    /// coefficient is zero (the valuation then lies beyond the precision).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops every coefficient from `x^precision` on. Raising the precision
    /// is not possible and leaves the series unchanged.
    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision > 0, "precision must be at least 1");
        Series {
            coeffs: self.coeffs[..precision.min(self.precision())].to_vec(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x`. The top coefficient becomes known, so the
    /// precision grows by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.precision() + 1);
        coeffs.push(Coefficient::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// The multiplicative inverse, computed from the convolution recurrence
    /// `g_n = -(f_1 g_{n-1} + ... + f_n g_0) / f_0`.
    pub fn invert(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = f0.recip();
        let n = self.precision();
        let mut g: Vec<Coefficient> = Vec::with_capacity(n);
        g.push(inv0.clone());
        for k in 1..n {
            let mut acc = Coefficient::zero();
            for i in 1..=k {
                let fi = &self.coeffs[i];
                if !fi.is_zero() {
                    acc += fi * &g[k - i];
                }
            }
            g.push(-acc * &inv0);
        }
        Ok(Series { coeffs: g })
    }

    /// `self / other`, defined when `other` has a nonzero constant term.
    pub fn divide(&self, other: &Series) -> Result<Self> {
        Ok(self * &other.invert()?)
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Series::one(self.precision());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The composition `self(inner(x))`.
    ///
    /// `inner` must have a zero constant term; coefficient `n` of the result
    /// then depends only on coefficients `0..=n` of both series.
    pub fn compose(&self, inner: &Series) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let n = self.precision().min(inner.precision());
        let inner = inner.truncate(n);
        // Horner: f_0 + g (f_1 + g (f_2 + ...)).
        let mut acc = Series::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// The compositional inverse `v` with `self(v(x)) = v(self(x)) = x`.
    ///
    /// Each `v_n` is solved from `[x^n] self(v) = 0`. Writing
    /// `P[k][n] = [x^n] v^k`, the only unknown in that equation is
    /// `w_1 v_n`, since `P[k][n]` for `k >= 2` involves `v_1..v_{n-1}` only.
    pub fn comp_inverse(&self) -> Result<Self> {
        let n = self.precision();
        if n < 2 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::ReversionDomain);
        }
        let w = &self.coeffs;
        let w1_inv = w[1].recip();

        let mut v = vec![Coefficient::zero(); n];
        // powers[k][m] = [x^m] v^k, for k >= 1.
        let mut powers = vec![vec![Coefficient::zero(); n]; n];
        v[1] = w1_inv.clone();
        powers[1][1] = v[1].clone();

        for m in 2..n {
            // v^k has valuation k, so [x^m] v^k needs k <= m.
            for k in 2..=m {
                let mut acc = Coefficient::zero();
                for j in 1..=(m - (k - 1)) {
                    let prev = &powers[k - 1][m - j];
                    if !prev.is_zero() && !v[j].is_zero() {
                        acc += &v[j] * prev;
                    }
                }
                powers[k][m] = acc;
            }
            let mut rest = Coefficient::zero();
            for k in 2..=m {
                if !w[k].is_zero() {
                    rest += &w[k] * &powers[k][m];
                }
            }
            v[m] = -rest * &w1_inv;
            powers[1][m] = v[m].clone();
        }
        Ok(Series { coeffs: v })
    }

    /// Renders the series as a polynomial expression that the expression
    /// parser reads back, e.g. `1 - 2*x + 1/2*x^2`.
    pub fn to_polynomial_string(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let monomial = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if monomial.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{mag}*{monomial}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Equality is coefficient-wise up to the smaller of the two precisions.
impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .all(|(a, b)| a == b)
    }
}

impl fmt::Display for Series {
    /// `[c0, c1, ...]` with each coefficient as `p/q` or `p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Cauchy product truncated to the smaller precision.
    fn mul(self, rhs: &Series) -> Series {
        let n = self.precision().min(rhs.precision());
        let mut out = vec![Coefficient::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    coeffs: Vec<String>,
    precision: usize,
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            coeffs: self.coeffs.iter().map(format_coefficient).collect(),
            precision: self.precision(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.precision {
            return Err(D::Error::custom(format!(
                "precision {} does not match {} coefficients",
                repr.precision,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_coefficient(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Series::from_coeffs(coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(cs: &[i64]) -> Series {
        Series::from_ints(cs).unwrap()
    }

    fn alternating(n: usize) -> Series {
        Series::geometric(&int(-1), n)
    }

    #[test]
    fn construction() {
        let f = s(&[1, -1]);
        assert_eq!(f.precision(), 2);
        assert_eq!(f.coeffs(), &[int(1), int(-1)]);

        let z = s(&[0]);
        assert_eq!(z.precision(), 1);
        assert!(z.is_zero());

        let h = Series::from_coeffs(vec![int(1), ratio(1, 2)]).unwrap();
        assert_eq!(h.coeff(1).unwrap(), &ratio(1, 2));

        assert_eq!(Series::from_coeffs(vec![]), Err(Error::EmptySeries));
    }

    #[test]
    fn addition() {
        assert_eq!(&s(&[1, -1]) + &s(&[0, 1]), s(&[1, 0]));
        let f = s(&[3, 0, -2]);
        assert_eq!(&f + &Series::zero(3), f);
        assert_eq!(
            &alternating(4) + &Series::geometric(&int(1), 4),
            s(&[2, 0, 2, 0])
        );
    }

    #[test]
    fn sum_takes_min_precision() {
        let sum = &s(&[1, 1, 1, 1]) + &s(&[1, 1]);
        assert_eq!(sum.precision(), 2);
    }

    #[test]
    fn multiplication() {
        let prod = &s(&[1, -1, 0, 0, 0]) * &Series::geometric(&int(1), 5);
        assert_eq!(prod.coeffs(), s(&[1, 0, 0, 0, 0]).coeffs());
        let f = s(&[2, 5, -1]);
        assert_eq!(&f * &Series::one(3), f);
        assert_eq!(
            &alternating(6) * &Series::geometric(&int(1), 6),
            s(&[1, 0, 1, 0, 1, 0])
        );
    }

    #[test]
    fn inversion() {
        assert_eq!(Series::one(4).invert().unwrap(), Series::one(4));
        assert_eq!(s(&[1, -1, 0, 0, 0]).invert().unwrap(), s(&[1, 1, 1, 1, 1]));
        let g = s(&[2, 1, 0]).invert().unwrap();
        assert_eq!(g.coeffs(), &[ratio(1, 2), ratio(-1, 4), ratio(1, 8)]);
        assert_eq!(s(&[0, 1]).invert(), Err(Error::NotInvertible));
        assert_eq!(Series::zero(3).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn composition() {
        // 1/(1+x) after x/(1-x) collapses to 1 - x.
        let x_over = s(&[0, 1, 1, 1, 1]);
        assert_eq!(
            alternating(5).compose(&x_over).unwrap(),
            s(&[1, -1, 0, 0, 0])
        );

        let f = s(&[4, 3, 2]);
        assert_eq!(f.compose(&Series::zero(3)).unwrap(), s(&[4, 0, 0]));

        let g = s(&[0, 2, -7, 1]);
        assert_eq!(Series::x(4).compose(&g).unwrap(), g);

        assert_eq!(f.compose(&s(&[1, 1, 0])), Err(Error::CompositionDomain));
    }

    #[test]
    fn reversion() {
        assert_eq!(Series::x(5).comp_inverse().unwrap(), Series::x(5));
        let w = s(&[0, 1, 1, 1, 1, 1]);
        let v = w.comp_inverse().unwrap();
        assert_eq!(v, s(&[0, 1, -1, 1, -1, 1]));
        assert_eq!(w.compose(&v).unwrap(), Series::x(6));
        assert_eq!(v.compose(&w).unwrap(), Series::x(6));
        assert_eq!(v.comp_inverse().unwrap(), w);
    }

    #[test]
    fn reversion_domain() {
        assert_eq!(s(&[1, 1, 0]).comp_inverse(), Err(Error::ReversionDomain));
        assert_eq!(s(&[0, 0, 1]).comp_inverse(), Err(Error::ReversionDomain));
        assert_eq!(Series::zero(4).comp_inverse(), Err(Error::ReversionDomain));
        assert_eq!(s(&[0]).comp_inverse(), Err(Error::ReversionDomain));
    }

    #[test]
    fn coefficient_access() {
        assert_eq!(alternating(5).coeff(3).unwrap(), &int(-1));
        assert_eq!(s(&[1, -1]).coeff(0).unwrap(), &int(1));
        assert_eq!(s(&[0, 1, 1]).coeff(0).unwrap(), &int(0));
        assert_eq!(
            s(&[1, -1]).coeff(2),
            Err(Error::IndexOutOfRange {
                index: 2,
                precision: 2
            })
        );
    }

    #[test]
    fn equality_uses_common_prefix() {
        assert_eq!(s(&[1, 2, 3]), s(&[1, 2]));
        assert_ne!(s(&[1, 2, 3]), s(&[1, 3]));
    }

    #[test]
    fn polynomial_rendering() {
        assert_eq!(s(&[1, -2, 1]).to_polynomial_string(), "1 - 2*x + x^2");
        assert_eq!(Series::zero(3).to_polynomial_string(), "0");
        let f = Series::from_coeffs(vec![int(0), int(-1), ratio(-3, 4)]).unwrap();
        assert_eq!(f.to_polynomial_string(), "-x - 3/4*x^2");
    }

    #[test]
    fn json_shape() {
        let f = Series::from_coeffs(vec![int(1), ratio(-1, 2)]).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"coeffs":["1","-1/2"],"precision":2}"#);
        let back: Series = serde_json::from_str(&json).unwrap();
        assert_eq!(back.coeffs(), f.coeffs());
        assert!(serde_json::from_str::<Series>(r#"{"coeffs":["1"],"precision":2}"#).is_err());
        assert!(serde_json::from_str::<Series>(r#"{"coeffs":["1/0"],"precision":1}"#).is_err());
    }

    #[test]
    fn canonical_coefficients() {
        let c = parse_coefficient("6/-4").unwrap();
        assert_eq!(format_coefficient(&c), "-3/2");
        assert_eq!(format_coefficient(&parse_coefficient("10/5").unwrap()), "2");
    }
}
