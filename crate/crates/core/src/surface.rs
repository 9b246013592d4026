//! Cohomology ring of a closed oriented surface of genus g over ℚ.
//!
//! Basis: `1`, the symplectic basis `a₁…a_g, b₁…b_g` of H¹ with
//! `aᵢ ⌣ bᵢ = [Σ]`, and the fundamental class `[Σ]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceClass {
    pub genus: u32,
    /// Coefficient of `1`.
    pub c0: Rational,
    /// Coefficients of `a₁…a_g, b₁…b_g`, in that order.
    pub c1: Vec<Rational>,
    /// Coefficient of `[Σ]`.
    pub c2: Rational,
}

impl SurfaceClass {
    pub fn zero(genus: u32) -> Self {
        SurfaceClass {
            genus,
            c0: Rational::zero(),
            c1: vec![Rational::zero(); 2 * genus as usize],
            c2: Rational::zero(),
        }
    }

    pub fn one(genus: u32) -> Self {
        SurfaceClass {
            c0: Rational::one(),
            ..Self::zero(genus)
        }
    }

    pub fn scalar(genus: u32, c0: Rational) -> Self {
        SurfaceClass {
            c0,
            ..Self::zero(genus)
        }
    }

    /// `c · [Σ]`.
    pub fn top(genus: u32, c2: Rational) -> Self {
        SurfaceClass {
            c2,
            ..Self::zero(genus)
        }
    }

    /// The class `aᵢ` (1-based index).
    pub fn a(genus: u32, i: usize) -> Self {
        assert!(i >= 1 && i <= genus as usize, "a_{i} out of range for genus {genus}");
        let mut x = Self::zero(genus);
        x.c1[i - 1] = Rational::one();
        x
    }

    /// The class `bᵢ` (1-based index).
    pub fn b(genus: u32, i: usize) -> Self {
        assert!(i >= 1 && i <= genus as usize, "b_{i} out of range for genus {genus}");
        let mut x = Self::zero(genus);
        x.c1[genus as usize + i - 1] = Rational::one();
        x
    }

    pub fn new(genus: u32, c0: Rational, c1: Vec<Rational>, c2: Rational) -> Result<Self> {
        if c1.len() != 2 * genus as usize {
            return Err(Error::Input(format!(
                "H^1 part has {} coefficients, genus {genus} needs {}",
                c1.len(),
                2 * genus
            )));
        }
        Ok(SurfaceClass { genus, c0, c1, c2 })
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c2.is_zero() && self.c1.iter().all(Rational::is_zero)
    }

    pub fn h1_is_zero(&self) -> bool {
        self.c1.iter().all(Rational::is_zero)
    }

    fn check_genus(&self, other: &Self) -> Result<()> {
        if self.genus == other.genus {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!(
                "surface classes of genus {} and {}",
                self.genus, other.genus
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_genus(other)?;
        Ok(self.add_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        SurfaceClass {
            genus: self.genus,
            c0: &self.c0 + &other.c0,
            c1: self.c1.iter().zip(&other.c1).map(|(x, y)| x + y).collect(),
            c2: &self.c2 + &other.c2,
        }
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-Rational::one())
    }

    pub fn scaled(&self, r: &Rational) -> Self {
        SurfaceClass {
            genus: self.genus,
            c0: &self.c0 * r,
            c1: self.c1.iter().map(|x| x * r).collect(),
            c2: &self.c2 * r,
        }
    }

    fn cup_unchecked(&self, other: &Self) -> Self {
        let g = self.genus as usize;
        // intersection pairing on H¹: aᵢ·bᵢ = 1 = −bᵢ·aᵢ
        let pairing: Rational = (0..g)
            .map(|i| &self.c1[i] * &other.c1[g + i] - &self.c1[g + i] * &other.c1[i])
            .sum();
        SurfaceClass {
            genus: self.genus,
            c0: &self.c0 * &other.c0,
            c1: self
                .c1
                .iter()
                .zip(&other.c1)
                .map(|(x, y)| &self.c0 * y + x * &other.c0)
                .collect(),
            c2: &self.c0 * &other.c2 + &self.c2 * &other.c0 + pairing,
        }
    }

    /// Degree-k homogeneous piece (k ∈ {0, 1, 2}); other degrees give zero.
    pub fn graded_part(&self, k: u32) -> Self {
        let mut x = Self::zero(self.genus);
        match k {
            0 => x.c0 = self.c0.clone(),
            1 => x.c1 = self.c1.clone(),
            2 => x.c2 = self.c2.clone(),
            _ => {}
        }
        x
    }
}

/// Cup product on H*(Σ; ℚ).
pub fn cup_surface(x: &SurfaceClass, y: &SurfaceClass) -> Result<SurfaceClass> {
    x.check_genus(y)?;
    Ok(x.cup_unchecked(y))
}

/// Pushforward to a point: the coefficient of `[Σ]`.
pub fn integrate_surface(x: &SurfaceClass) -> Rational {
    x.c2.clone()
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.genus as usize;
        let mut parts: Vec<(Rational, String)> = Vec::new();
        if !self.c0.is_zero() {
            parts.push((self.c0.clone(), String::new()));
        }
        for (i, c) in self.c1.iter().enumerate() {
            if !c.is_zero() {
                let name = if i < g {
                    format!("a{}", i + 1)
                } else {
                    format!("b{}", i - g + 1)
                };
                parts.push((c.clone(), name));
            }
        }
        if !self.c2.is_zero() {
            parts.push((self.c2.clone(), "[S]".to_string()));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (n, (c, name)) in parts.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if n == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (name.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(name)?,
                (false, false) => write!(f, "{mag}{name}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}:{}", self.genus, self)
    }
}

/// Coefficient rings of the Laurent modules: ℚ itself, or H*(Σ; ℚ) for a
/// fixed genus.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Domain: Clone + PartialEq + Eq + fmt::Debug;

    fn domain(&self) -> Self::Domain;
    fn zero_in(domain: &Self::Domain) -> Self;
    fn one_in(domain: &Self::Domain) -> Self;
    fn is_zero(&self) -> bool;
    /// Sum; both operands must lie in the same domain.
    fn plus(&self, other: &Self) -> Self;
    /// Product; both operands must lie in the same domain.
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;
    /// Whether the printed form needs parentheses when followed by a monomial.
    fn is_compound(&self) -> bool;
}

impl Coefficient for Rational {
    type Domain = ();

    fn domain(&self) {}
    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }
    fn one_in(_: &()) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }
    fn is_compound(&self) -> bool {
        false
    }
}

impl Coefficient for SurfaceClass {
    /// The genus.
    type Domain = u32;

    fn domain(&self) -> u32 {
        self.genus
    }
    fn zero_in(genus: &u32) -> Self {
        SurfaceClass::zero(*genus)
    }
    fn one_in(genus: &u32) -> Self {
        SurfaceClass::one(*genus)
    }
    fn is_zero(&self) -> bool {
        SurfaceClass::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_unchecked(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.cup_unchecked(other)
    }
    fn scaled(&self, r: &Rational) -> Self {
        SurfaceClass::scaled(self, r)
    }
    fn is_compound(&self) -> bool {
        let terms = usize::from(!self.c0.is_zero())
            + self.c1.iter().filter(|c| !c.is_zero()).count()
            + usize::from(!self.c2.is_zero());
        terms > 1
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
    fn symplectic_basis_products() {
        let g = 1;
        assert_eq!(cup_surface(&SurfaceClass::a(g, 1), &SurfaceClass::b(g, 1)).unwrap(), SurfaceClass::top(g, q(1)));
        assert_eq!(cup_surface(&SurfaceClass::b(g, 1), &SurfaceClass::a(g, 1)).unwrap(), SurfaceClass::top(g, q(-1)));
        assert!(cup_surface(&SurfaceClass::a(g, 1), &SurfaceClass::a(g, 1)).unwrap().is_zero());
    }

    #[test]
    fn genus_two_cross_terms_cancel() {
        let g = 2;
        let x = SurfaceClass::a(g, 1).try_add(&SurfaceClass::b(g, 2)).unwrap();
        let y = SurfaceClass::b(g, 1).try_add(&SurfaceClass::a(g, 2)).unwrap();
        assert!(cup_surface(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn top_class_kills_positive_degree() {
        let top = SurfaceClass::top(2, q(1));
        assert!(cup_surface(&top, &top).unwrap().is_zero());
        assert!(cup_surface(&top, &SurfaceClass::a(2, 2)).unwrap().is_zero());
        assert_eq!(cup_surface(&SurfaceClass::one(2), &top).unwrap(), top);
    }

    #[test]
    fn genus_mismatch_is_an_error() {
        let err = cup_surface(&SurfaceClass::one(1), &SurfaceClass::one(2)).unwrap_err();
        assert!(matches!(err, Error::DomainMismatch(_)));
    }

    #[test]
    fn integration_reads_the_fundamental_class() {
        assert_eq!(integrate_surface(&SurfaceClass::top(1, q(1))), q(1));
        assert_eq!(integrate_surface(&SurfaceClass::one(3)), q(0));
        let x = SurfaceClass::top(1, q(5)).try_add(&SurfaceClass::a(1, 1).scaled(&q(3))).unwrap();
        assert_eq!(integrate_surface(&x), q(5));
    }

    #[test]
    fn display() {
        let x = SurfaceClass::new(1, q(2), vec![q(-1), q(0)], Rational::new(1, 2)).unwrap();
        assert_eq!(x.to_string(), "2 - a1 + 1/2[S]");
        assert_eq!(SurfaceClass::zero(0).to_string(), "0");
    }

    fn arb_surface(genus: u32) -> impl Strategy<Value = SurfaceClass> {
        let n = 2 * genus as usize;
        (-5i64..5, proptest::collection::vec(-5i64..5, n), -5i64..5)
            .prop_map(move |(a, b, c)| SurfaceClass::new(genus, q(a), b.into_iter().map(q).collect(), q(c)).unwrap())
    }

    fn homogeneous_parts(x: &SurfaceClass) -> [SurfaceClass; 3] {
        [x.graded_part(0), x.graded_part(1), x.graded_part(2)]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_laws(x in arb_surface(2), y in arb_surface(2), z in arb_surface(2)) {
            let xy = cup_surface(&x, &y).unwrap();
            prop_assert_eq!(cup_surface(&xy, &z).unwrap(), cup_surface(&x, &cup_surface(&y, &z).unwrap()).unwrap());
            let lhs = cup_surface(&x, &y.try_add(&z).unwrap()).unwrap();
            let rhs = xy.try_add(&cup_surface(&x, &z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(x.try_add(&y).unwrap(), y.try_add(&x).unwrap());
        }

        #[test]
        fn graded_commutativity(x in arb_surface(2), y in arb_surface(2)) {
            for (i, xi) in homogeneous_parts(&x).iter().enumerate() {
                for (j, yj) in homogeneous_parts(&y).iter().enumerate() {
                    let sign = if i * j % 2 == 1 { q(-1) } else { q(1) };
                    let lhs = cup_surface(xi, yj).unwrap();
                    let rhs = cup_surface(yj, xi).unwrap().scaled(&sign);
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
