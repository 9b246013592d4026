use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};

/// A generating function `numerator(t) / (1 − t²)^m` with integer numerator.
#[derive(Clone, Debug, Serialize)]
pub struct PoincareSeries {
    /// `numerator[i]` is the coefficient of `t^i`.
    numerator: Vec<i64>,
    denominator_exponent: u32,
}

fn binomial(n: u64, k: u64) -> i64 {
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1 − t²)^m` as a coefficient vector.
fn one_minus_t2_pow(m: u32) -> Vec<i64> {
    (0..m).fold(vec![1], |acc, _| poly_mul(&acc, &[1, 0, -1]))
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl PoincareSeries {
    pub fn new(numerator: Vec<i64>, denominator_exponent: u32) -> Self {
        PoincareSeries {
            numerator: trim(numerator),
            denominator_exponent,
        }
    }

    pub fn polynomial(numerator: Vec<i64>) -> Self {
        Self::new(numerator, 0)
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator_exponent(&self) -> u32 {
        self.denominator_exponent
    }

    /// Signed coefficient of `t^k`.
    pub fn raw_coefficient(&self, k: u32) -> i64 {
        let m = self.denominator_exponent as u64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|&(i, _)| i as u32 <= k && (k - i as u32) % 2 == 0)
            .map(|(i, &c)| {
                let j = ((k - i as u32) / 2) as u64;
                let weight = if m == 0 {
                    i64::from(j == 0)
                } else {
                    binomial(j + m - 1, m - 1)
                };
                c * weight
            })
            .sum()
    }

    /// Coefficient of `t^k`; a negative value means the series cannot be a
    /// Poincaré series.
    pub fn coefficient(&self, k: u32) -> Result<u64> {
        let c = self.raw_coefficient(k);
        u64::try_from(c).map_err(|_| {
            Error::Internal(format!("coefficient of t^{k} is negative ({c}) in {self}"))
        })
    }

    pub fn coefficients(&self, up_to: u32) -> Result<Vec<u64>> {
        (0..=up_to).map(|k| self.coefficient(k)).collect()
    }

    /// Multiply by `1/(1 − t²)^extra`.
    pub fn divided_by_one_minus_t2(&self, extra: u32) -> Self {
        Self::new(self.numerator.clone(), self.denominator_exponent + extra)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            poly_mul(&self.numerator, &other.numerator),
            self.denominator_exponent + other.denominator_exponent,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self.denominator_exponent.max(other.denominator_exponent);
        let a = poly_mul(&self.numerator, &one_minus_t2_pow(m - self.denominator_exponent));
        let b = poly_mul(&other.numerator, &one_minus_t2_pow(m - other.denominator_exponent));
        let len = a.len().max(b.len());
        let diff = (0..len)
            .map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0))
            .collect();
        Self::new(diff, m)
    }

    /// Same generating function (cross-multiplied numerators agree).
    pub fn same_series(&self, other: &Self) -> bool {
        let m = self.denominator_exponent.max(other.denominator_exponent);
        let a = poly_mul(&self.numerator, &one_minus_t2_pow(m - self.denominator_exponent));
        let b = poly_mul(&other.numerator, &one_minus_t2_pow(m - other.denominator_exponent));
        trim(a) == trim(b)
    }
}

impl PartialEq for PoincareSeries {
    fn eq(&self, other: &Self) -> bool {
        self.same_series(other)
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        let f = &mut num;
        let mut first = true;
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{mag}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{mag}t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        match self.denominator_exponent {
            0 => out.write_str(&num),
            1 => write!(out, "({num}) / (1 - t^2)"),
            m => write!(out, "({num}) / (1 - t^2)^{m}"),
        }
    }
}

/// Coefficient of `t^k` in `P`.
pub fn series_coefficient(p: &PoincareSeries, k: u32) -> Result<u64> {
    p.coefficient(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn geometric_series() {
        let p = PoincareSeries::new(vec![1], 1);
        assert_eq!(series_coefficient(&p, 6).unwrap(), 1);
        assert_eq!(series_coefficient(&p, 5).unwrap(), 0);
    }

    #[test]
    fn hand_expansions() {
        let p = PoincareSeries::new(vec![1, 0, 1, 0, 1], 1);
        assert_eq!(series_coefficient(&p, 4).unwrap(), 3);
        let p = PoincareSeries::new(vec![1, 2, 2, 2, 1], 1);
        assert_eq!(series_coefficient(&p, 3).unwrap(), 4);
        assert_eq!(p.coefficients(4).unwrap(), vec![1, 2, 3, 4, 4]);
    }

    #[test]
    fn two_variable_denominator() {
        // 1/(1-t^2)^2 = Σ (j+1) t^{2j}
        let p = PoincareSeries::new(vec![1], 2);
        assert_eq!(p.coefficients(6).unwrap(), vec![1, 0, 2, 0, 3, 0, 4]);
    }

    #[test]
    fn negative_coefficient_is_internal_error() {
        let p = PoincareSeries::polynomial(vec![1, -1]);
        assert!(matches!(p.coefficient(1), Err(Error::Internal(_))));
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let a = PoincareSeries::new(vec![1, 0, -1], 1);
        assert_eq!(a, PoincareSeries::polynomial(vec![1]));
        let d = PoincareSeries::new(vec![3, 0, 1], 1).sub(&PoincareSeries::new(vec![1, 0, 1], 1));
        assert_eq!(d, PoincareSeries::new(vec![2], 1));
    }

    #[test]
    fn display() {
        assert_eq!(PoincareSeries::new(vec![1, 2, 2, 2, 1], 1).to_string(), "(1 + 2t + 2t^2 + 2t^3 + t^4) / (1 - t^2)");
        assert_eq!(PoincareSeries::polynomial(vec![3]).to_string(), "3");
    }

    fn arb_series() -> impl Strategy<Value = PoincareSeries> {
        (proptest::collection::vec(0i64..5, 1..6), 0u32..3).prop_map(|(n, m)| PoincareSeries::new(n, m))
    }

    proptest! {
        #[test]
        fn product_is_cauchy_convolution(p in arb_series(), q in arb_series(), k in 0u32..12) {
            let lhs = series_coefficient(&p.mul(&q), k).unwrap();
            let rhs: u64 = (0..=k)
                .map(|j| series_coefficient(&p, j).unwrap() * series_coefficient(&q, k - j).unwrap())
                .sum();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
