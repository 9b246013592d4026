//! Laurent polynomials in the equivariant variables with coefficients in ℚ or
//! in H*(Σ; ℚ).
//!
//! Exponents are integer vectors of a fixed length. Only the first variable is
//! ever inverted: in the circle case it is `u` itself, in the torus case it is
//! the designated linear form of a character after a unimodular change of
//! coordinates (see [`crate::torus`]).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::surface::{integrate_surface, Coefficient, SurfaceClass};

pub type Exponent = Vec<i32>;

#[derive(Clone, PartialEq, Eq)]
pub struct Laurent<C: Coefficient> {
    nvars: usize,
    domain: C::Domain,
    terms: BTreeMap<Exponent, C>,
}

/// Laurent polynomial with rational coefficients.
pub type LaurentQ = Laurent<Rational>;
/// Laurent polynomial with coefficients in the cohomology of a surface.
pub type LaurentSurface = Laurent<SurfaceClass>;

impl<C: Coefficient> Laurent<C> {
    pub fn zero(nvars: usize, domain: C::Domain) -> Self {
        Laurent {
            nvars,
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize, domain: C::Domain) -> Self {
        Self::constant(nvars, C::one_in(&domain))
    }

    pub fn monomial(exponent: Exponent, c: C) -> Self {
        let mut out = Self::zero(exponent.len(), c.domain());
        if !c.is_zero() {
            out.terms.insert(exponent, c);
        }
        out
    }

    /// `c · u^power` in a single variable.
    pub fn univariate(power: i32, c: C) -> Self {
        Self::monomial(vec![power], c)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn domain(&self) -> &C::Domain {
        &self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &[i32]) -> C {
        self.terms
            .get(exponent)
            .cloned()
            .unwrap_or_else(|| C::zero_in(&self.domain))
    }

    /// Accumulate `c · x^exponent` in place.
    pub fn add_term(&mut self, exponent: Exponent, c: &C) -> Result<()> {
        if exponent.len() != self.nvars {
            return Err(Error::DomainMismatch(format!(
                "exponent of length {} in a ring with {} variables",
                exponent.len(),
                self.nvars
            )));
        }
        if c.domain() != self.domain {
            return Err(Error::DomainMismatch(format!(
                "coefficient domain {:?} vs {:?}",
                c.domain(),
                self.domain
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.get(&exponent) {
            Some(v) => v.plus(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&exponent);
        } else {
            self.terms.insert(exponent, sum);
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DomainMismatch(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(format!(
                "coefficient domain {:?} vs {:?}",
                self.domain, other.domain
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let slot = out
                .terms
                .entry(e.clone())
                .or_insert_with(|| C::zero_in(&self.domain));
            *slot = slot.plus(c);
        }
        out.terms.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-Rational::one())
    }

    pub fn scaled(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.nvars, self.domain.clone());
        if r.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.scaled(r)))
            .collect();
        out
    }

    /// Exact convolution product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<Exponent, C> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let prod = c1.times(c2);
                if prod.is_zero() {
                    continue;
                }
                let slot = acc.entry(e).or_insert_with(|| C::zero_in(&self.domain));
                *slot = slot.plus(&prod);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(Laurent {
            nvars: self.nvars,
            domain: self.domain.clone(),
            terms: acc,
        })
    }

    /// True iff no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// The terms with no negative exponent.
    pub fn polynomial_part(&self) -> Self {
        self.filter(|e| e.iter().all(|&x| x >= 0))
    }

    /// The terms with a negative exponent.
    pub fn principal_part(&self) -> Self {
        self.filter(|e| e.iter().any(|&x| x < 0))
    }

    pub fn filter(&self, keep: impl Fn(&[i32]) -> bool) -> Self {
        Laurent {
            nvars: self.nvars,
            domain: self.domain.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients<D: Coefficient>(
        &self,
        domain: D::Domain,
        f: impl Fn(&C) -> D,
    ) -> Laurent<D> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Laurent {
            nvars: self.nvars,
            domain,
            terms,
        }
    }

    /// Total degree in the polynomial variables, `None` for zero.
    pub fn max_total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// View as an element of a ring with `nvars ≥ self.nvars()` variables,
    /// the existing ones coming first.
    pub fn with_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars, "cannot drop variables");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(nvars, 0);
                (e, c.clone())
            })
            .collect();
        Laurent {
            nvars,
            domain: self.domain.clone(),
            terms,
        }
    }

    /// Linear change of variables `x_i = Σ_j m[i][j] y_j`. Only defined on
    /// polynomials.
    pub fn substitute_linear(&self, m: &[Vec<i64>]) -> Result<Self> {
        if !self.is_polynomial() {
            return Err(Error::Input(
                "linear substitution of a Laurent polynomial with negative powers".into(),
            ));
        }
        if m.len() != self.nvars || m.iter().any(|row| row.len() != self.nvars) {
            return Err(Error::DomainMismatch(format!(
                "substitution matrix is not {0}x{0}",
                self.nvars
            )));
        }
        let n = self.nvars;
        let images: Vec<LaurentQ> = m
            .iter()
            .map(|row| {
                let mut form = LaurentQ::zero(n, ());
                for (j, &c) in row.iter().enumerate() {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    form.add_term(e, &Rational::from(c)).expect("same ring");
                }
                form
            })
            .collect();
        let mut out = Self::zero(n, self.domain.clone());
        for (e, c) in &self.terms {
            let mut factor = LaurentQ::one(n, ());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    factor = factor.try_mul(&images[i])?;
                }
            }
            for (fe, fc) in &factor.terms {
                out.add_term(fe.clone(), &c.scaled(fc))?;
            }
        }
        Ok(out)
    }
}

impl LaurentSurface {
    /// Apply the pushforward to a point coefficientwise.
    pub fn integrate(&self) -> LaurentQ {
        self.map_coefficients((), integrate_surface)
    }
}

impl LaurentQ {
    /// Promote rational coefficients to multiples of `1 ∈ H*(Σ)`.
    pub fn to_surface(&self, genus: u32) -> LaurentSurface {
        self.map_coefficients(genus, |c| SurfaceClass::scalar(genus, c.clone()))
    }
}

/// Product of two Laurent elements; fails on incompatible coefficient domains.
pub fn laurent_mul<C: Coefficient>(x: &Laurent<C>, y: &Laurent<C>) -> Result<Laurent<C>> {
    x.try_mul(y)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[i32]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e.len() == 1 {
            f.write_str("u")?;
        } else {
            write!(f, "u{}", i + 1)?;
        }
        if k != 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest powers first
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let constant = e.iter().all(|&k| k == 0);
            if c.is_compound() {
                write!(f, "({c})")?;
            } else {
                write!(f, "{c}")?;
            }
            if !constant {
                f.write_str(" * ")?;
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn inverse_powers_cancel() {
        let x = LaurentQ::univariate(-1, q(1));
        let y = LaurentQ::univariate(1, q(1));
        assert_eq!(laurent_mul(&x, &y).unwrap(), LaurentQ::one(1, ()));
    }

    #[test]
    fn monomial_product() {
        let x = LaurentQ::univariate(-2, q(3));
        let y = LaurentQ::univariate(3, q(2));
        assert_eq!(laurent_mul(&x, &y).unwrap(), LaurentQ::univariate(1, q(6)));
    }

    #[test]
    fn surface_euler_times_inverse_is_one() {
        // (−1⊗u + e[Σ]⊗1)(−1⊗u⁻¹ − e[Σ]⊗u⁻²) = 1⊗1 since [Σ]² = 0
        let g = 1;
        let e = q(3);
        let euler = LaurentSurface::univariate(1, SurfaceClass::scalar(g, q(-1)))
            .try_add(&LaurentSurface::univariate(0, SurfaceClass::top(g, e.clone())))
            .unwrap();
        let inverse = LaurentSurface::univariate(-1, SurfaceClass::scalar(g, q(-1)))
            .try_add(&LaurentSurface::univariate(-2, SurfaceClass::top(g, -e)))
            .unwrap();
        assert_eq!(laurent_mul(&euler, &inverse).unwrap(), LaurentSurface::one(1, g));
    }

    #[test]
    fn mismatched_domains_are_rejected() {
        let x = LaurentSurface::one(1, 1);
        let y = LaurentSurface::one(1, 2);
        assert!(matches!(laurent_mul(&x, &y), Err(Error::DomainMismatch(_))));
        let z = LaurentQ::one(2, ());
        assert!(laurent_mul(&LaurentQ::one(1, ()), &z).is_err());
    }

    #[test]
    fn polynomial_part_and_flag() {
        let x = LaurentQ::univariate(-1, q(2))
            .try_add(&LaurentQ::univariate(2, q(5)))
            .unwrap();
        assert!(!x.is_polynomial());
        assert_eq!(x.polynomial_part(), LaurentQ::univariate(2, q(5)));
        assert!(x.polynomial_part().is_polynomial());
        assert_eq!(x.to_string(), "5 * u^2 + 2 * u^-1");
    }

    #[test]
    fn linear_substitution() {
        // (u1 + u2)^2 with u1 = v1 - v2, u2 = v2  ->  v1^2
        let mut p = LaurentQ::zero(2, ());
        p.add_term(vec![2, 0], &q(1)).unwrap();
        p.add_term(vec![1, 1], &q(2)).unwrap();
        p.add_term(vec![0, 2], &q(1)).unwrap();
        let out = p.substitute_linear(&[vec![1, -1], vec![0, 1]]).unwrap();
        assert_eq!(out, LaurentQ::monomial(vec![2, 0], q(1)));
    }

    fn arb_laurent_q() -> impl Strategy<Value = LaurentQ> {
        proptest::collection::vec((-3i32..4, -4i64..5), 0..4).prop_map(|terms| {
            let mut x = LaurentQ::zero(1, ());
            for (e, c) in terms {
                x.add_term(vec![e], &q(c)).unwrap();
            }
            x
        })
    }

    fn arb_laurent_surface() -> impl Strategy<Value = LaurentSurface> {
        let coeff = (-3i64..4, -3i64..4, -3i64..4, -3i64..4).prop_map(|(a, b, c, d)| {
            SurfaceClass::new(1, q(a), vec![q(b), q(c)], q(d)).unwrap()
        });
        proptest::collection::vec((-3i32..4, coeff), 0..3).prop_map(|terms| {
            let mut x = LaurentSurface::zero(1, 1);
            for (e, c) in terms {
                x.add_term(vec![e], &c).unwrap();
            }
            x
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn rational_ring_laws(x in arb_laurent_q(), y in arb_laurent_q(), z in arb_laurent_q()) {
            let xy = x.try_mul(&y).unwrap();
            prop_assert_eq!(xy.try_mul(&z).unwrap(), x.try_mul(&y.try_mul(&z).unwrap()).unwrap());
            prop_assert_eq!(xy.clone(), y.try_mul(&x).unwrap());
            let lhs = x.try_mul(&y.try_add(&z).unwrap()).unwrap();
            prop_assert_eq!(lhs, xy.try_add(&x.try_mul(&z).unwrap()).unwrap());
        }

        #[test]
        fn surface_ring_laws(x in arb_laurent_surface(), y in arb_laurent_surface(), z in arb_laurent_surface()) {
            let xy = x.try_mul(&y).unwrap();
            prop_assert_eq!(xy.try_mul(&z).unwrap(), x.try_mul(&y.try_mul(&z).unwrap()).unwrap());
            let lhs = x.try_mul(&y.try_add(&z).unwrap()).unwrap();
            prop_assert_eq!(lhs, xy.try_add(&x.try_mul(&z).unwrap()).unwrap());
            prop_assert_eq!(x.try_add(&y).unwrap(), y.try_add(&x).unwrap());
        }

        #[test]
        fn line_bundle_inverse(b in prop_oneof![-4i64..0, 1i64..5], e in -6i64..7, g in 0u32..3) {
            // euler = −1⊗b·u + e[Σ]⊗1, inverse = −Σ_{i≤1} e^i[Σ]^i ⊗ (1/(bu))^{i+1}
            let br = q(b);
            let euler = LaurentSurface::univariate(1, SurfaceClass::scalar(g, -&br))
                .try_add(&LaurentSurface::univariate(0, SurfaceClass::top(g, q(e))))
                .unwrap();
            let binv = br.recip().unwrap();
            let inverse = LaurentSurface::univariate(-1, SurfaceClass::scalar(g, -&binv))
                .try_add(&LaurentSurface::univariate(-2, SurfaceClass::top(g, -(q(e) * binv.pow(2)))))
                .unwrap();
            prop_assert_eq!(laurent_mul(&euler, &inverse).unwrap(), LaurentSurface::one(1, g));
        }
    }
}
