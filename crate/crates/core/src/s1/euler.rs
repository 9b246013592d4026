use crate::class::ComponentClass;
use crate::error::{Error, Result};
use crate::graph::{ComponentRef, DecoratedGraph, Position};
use crate::laurent::{LaurentQ, LaurentSurface};
use crate::rational::Rational;
use crate::surface::SurfaceClass;

/// Equivariant Euler class of the normal bundle of one fixed component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantEuler {
    pub component: String,
    pub class: ComponentClass,
}

/// Euler class of `ℂⁿ` with circle weights `b₁…bₙ`: `(−1)ⁿ b₁⋯bₙ uⁿ`.
pub fn point_euler(weights: &[i64]) -> LaurentQ {
    let n = weights.len() as i32;
    let product: i64 = weights.iter().product();
    let sign = if n % 2 == 0 { 1 } else { -1 };
    LaurentQ::univariate(n, Rational::from(sign * product))
}

/// `(−1)ⁿ / (b₁⋯bₙ uⁿ)`; `None` if some weight is zero.
pub fn point_euler_inverse(weights: &[i64]) -> Option<LaurentQ> {
    let n = weights.len() as i32;
    let product: i64 = weights.iter().product();
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let c = Rational::from(sign * product).recip()?;
    Some(LaurentQ::univariate(-n, c))
}

/// Euler class `−1⊗b·u + e[Σ]⊗1` of a line bundle over a genus-`g` surface
/// on whose fibres the circle acts with weight `b`.
pub fn line_bundle_euler(genus: u32, b: i64, e: &Rational) -> LaurentSurface {
    let mut p = LaurentSurface::zero(1, genus);
    p.add_term(vec![1], &SurfaceClass::scalar(genus, Rational::from(-b)))
        .expect("same ring");
    p.add_term(vec![0], &SurfaceClass::top(genus, e.clone()))
        .expect("same ring");
    p
}

/// `−Σ_{i=0}^{1} e^i[Σ]^i ⊗ (1/(bu))^{i+1}`; higher powers of `[Σ]` vanish.
pub fn line_bundle_euler_inverse(genus: u32, b: i64, e: &Rational) -> Option<LaurentSurface> {
    let inv_b = Rational::from(b).recip()?;
    let mut p = LaurentSurface::zero(1, genus);
    p.add_term(vec![-1], &SurfaceClass::scalar(genus, -inv_b.clone()))
        .expect("same ring");
    p.add_term(vec![-2], &SurfaceClass::top(genus, -(e * &inv_b * &inv_b)))
        .expect("same ring");
    Some(p)
}

/// Normal weight of a fixed surface: `+1` at the minimum, `−1` at the
/// maximum.
fn surface_normal_weight(g: &DecoratedGraph, id: &str, y: &Rational) -> Result<i64> {
    match g.position(y) {
        Position::Min => Ok(1),
        Position::Max => Ok(-1),
        Position::Interior => Err(Error::Input(format!("surface `{id}` is not extremal"))),
    }
}

fn lookup<'a>(g: &'a DecoratedGraph, id: &str) -> Result<ComponentRef<'a>> {
    g.component(id)
        .ok_or_else(|| Error::Input(format!("no fixed component `{id}`")))
}

/// Point: `w u²` with `w = b₁b₂`. Surface: `∓1⊗u + e_Σ[Σ]⊗1`, minus at the
/// minimum and plus at the maximum.
pub fn euler_class(g: &DecoratedGraph, id: &str) -> Result<EquivariantEuler> {
    let class = match lookup(g, id)? {
        ComponentRef::Point(p) => ComponentClass::Point(point_euler(&p.weights)),
        ComponentRef::Surface(s) => {
            let b = surface_normal_weight(g, id, &s.y)?;
            let e = g.self_intersection(id)?;
            ComponentClass::Surface(line_bundle_euler(s.genus, b, &e))
        }
    };
    Ok(EquivariantEuler {
        component: id.to_string(),
        class,
    })
}

/// Point: `(1/w) u⁻²`. Surface: `∓1⊗u⁻¹ − e_Σ[Σ]⊗u⁻²`.
pub fn inverse_euler(g: &DecoratedGraph, id: &str) -> Result<ComponentClass> {
    match lookup(g, id)? {
        ComponentRef::Point(p) => point_euler_inverse(&p.weights)
            .map(ComponentClass::Point)
            .ok_or_else(|| Error::Input(format!("vertex `{id}` has a zero weight"))),
        ComponentRef::Surface(s) => {
            let b = surface_normal_weight(g, id, &s.y)?;
            let e = g.self_intersection(id)?;
            Ok(ComponentClass::Surface(
                line_bundle_euler_inverse(s.genus, b, &e).expect("b = ±1"),
            ))
        }
    }
}
