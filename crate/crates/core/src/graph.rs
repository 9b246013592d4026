//! Decorated graphs of Hamiltonian circle actions on four-manifolds.
//!
//! Vertices are the fixed components: isolated points carrying their momentum
//! value and signed isotropy weights, and fat vertices for fixed surfaces
//! carrying momentum, normalized area, genus and (optionally) the
//! self-intersection. Edges are the ℤ_ℓ-spheres joining isolated points.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::class::ComponentKind;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rational;
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsolatedVertex {
    pub id: String,
    pub y: Rational,
    pub weights: [i64; 2],
}

impl IsolatedVertex {
    /// Signed weight product `b₁·b₂`.
    pub fn weight_product(&self) -> i64 {
        self.weights[0] * self.weights[1]
    }

    /// `1/(m·n)` with `m, n` the absolute weights.
    pub fn inverse_weight_magnitude(&self) -> Rational {
        Rational::new(1, self.weight_product().abs())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FatVertex {
    pub id: String,
    pub y: Rational,
    pub area: Rational,
    pub genus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_intersection: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphEdge {
    pub from: String,
    pub to: String,
    pub ell: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub area: Option<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Position {
    Min,
    Interior,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphDocument", into = "GraphDocument")]
pub struct DecoratedGraph {
    pub isolated: Vec<IsolatedVertex>,
    pub surfaces: Vec<FatVertex>,
    pub edges: Vec<GraphEdge>,
    /// Integer matrix `M` with `c1(Σ_max) = M · c1(Σ_min)` on the ordered
    /// basis `a₁…a_g, b₁…b_g`. `None` is the identity.
    pub h1_identification: Option<Vec<Vec<i64>>>,
}

#[derive(Serialize, Deserialize)]
enum GraphTag {
    #[serde(rename = "graph")]
    Graph,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct GraphDocument {
    kind: GraphTag,
    #[serde(default)]
    isolated: Vec<IsolatedVertex>,
    #[serde(default)]
    surfaces: Vec<FatVertex>,
    #[serde(default)]
    edges: Vec<GraphEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h1_identification: Option<Vec<Vec<i64>>>,
}

impl TryFrom<GraphDocument> for DecoratedGraph {
    type Error = Error;

    fn try_from(doc: GraphDocument) -> Result<Self> {
        let graph = DecoratedGraph {
            isolated: doc.isolated,
            surfaces: doc.surfaces,
            edges: doc.edges,
            h1_identification: doc.h1_identification,
        };
        graph.check_structure()?;
        Ok(graph)
    }
}

impl From<DecoratedGraph> for GraphDocument {
    fn from(g: DecoratedGraph) -> Self {
        GraphDocument {
            kind: GraphTag::Graph,
            isolated: g.isolated,
            surfaces: g.surfaces,
            edges: g.edges,
            h1_identification: g.h1_identification,
        }
    }
}

/// A fixed component viewed uniformly.
#[derive(Clone, Copy, Debug)]
pub enum ComponentRef<'a> {
    Point(&'a IsolatedVertex),
    Surface(&'a FatVertex),
}

impl<'a> ComponentRef<'a> {
    pub fn id(&self) -> &'a str {
        match self {
            ComponentRef::Point(p) => &p.id,
            ComponentRef::Surface(s) => &s.id,
        }
    }

    pub fn y(&self) -> &'a Rational {
        match self {
            ComponentRef::Point(p) => &p.y,
            ComponentRef::Surface(s) => &s.y,
        }
    }

    pub fn kind(&self) -> ComponentKind {
        match self {
            ComponentRef::Point(_) => ComponentKind::Point,
            ComponentRef::Surface(s) => ComponentKind::Surface { genus: s.genus },
        }
    }
}

/// Parse a graph document. Only field-level and referential checks happen
/// here; see [`validate_graph`] for the geometric conditions.
pub fn parse_graph(text: &str) -> Result<DecoratedGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(Error::from_json)?;
    DecoratedGraph::try_from(doc)
}

impl DecoratedGraph {
    fn check_structure(&self) -> Result<()> {
        if self.isolated.is_empty() && self.surfaces.is_empty() {
            return Err(Error::Schema("no fixed components".into()));
        }
        if self.surfaces.len() > 2 {
            return Err(Error::Schema(format!(
                "{} fixed surfaces; at most two are possible",
                self.surfaces.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for c in self.components() {
            if c.id().is_empty() {
                return Err(Error::Schema("empty component id".into()));
            }
            if !seen.insert(c.id()) {
                return Err(Error::Schema(format!("duplicate id `{}`", c.id())));
            }
        }
        for p in &self.isolated {
            if p.weights.contains(&0) {
                return Err(Error::Schema(format!("vertex `{}` has a zero weight", p.id)));
            }
        }
        for s in &self.surfaces {
            if !s.area.is_positive() {
                return Err(Error::Schema(format!(
                    "surface `{}` has non-positive area {}",
                    s.id, s.area
                )));
            }
        }
        for e in &self.edges {
            for end in [&e.from, &e.to] {
                if !self.isolated.iter().any(|p| &p.id == end) {
                    return Err(Error::Schema(format!(
                        "edge {}-{} references unknown isolated vertex `{end}`",
                        e.from, e.to
                    )));
                }
            }
            if e.from == e.to {
                return Err(Error::Schema(format!("edge at `{}` is a loop", e.from)));
            }
            if e.ell == 0 {
                return Err(Error::Schema(format!(
                    "edge {}-{} has label 0; labels are positive",
                    e.from, e.to
                )));
            }
        }
        if let Some(m) = &self.h1_identification {
            if m.iter().any(|row| row.len() != m.len()) {
                return Err(Error::Schema("h1_identification is not a square matrix".into()));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn components(&self) -> impl Iterator<Item = ComponentRef<'_>> {
        self.isolated
            .iter()
            .map(ComponentRef::Point)
            .chain(self.surfaces.iter().map(ComponentRef::Surface))
    }

    pub fn component(&self, id: &str) -> Option<ComponentRef<'_>> {
        self.components().find(|c| c.id() == id)
    }

    pub fn component_count(&self) -> usize {
        self.isolated.len() + self.surfaces.len()
    }

    pub fn catalogue(&self) -> BTreeMap<String, ComponentKind> {
        self.components().map(|c| (c.id().to_string(), c.kind())).collect()
    }

    /// `(y_min, y_max)` over all fixed components.
    pub fn momentum_range(&self) -> (Rational, Rational) {
        let ys: Vec<&Rational> = self.components().map(|c| c.y()).collect();
        let lo = ys.iter().min().map(|y| (*y).clone()).unwrap_or_default();
        let hi = ys.iter().max().map(|y| (*y).clone()).unwrap_or_default();
        (lo, hi)
    }

    pub fn position(&self, y: &Rational) -> Position {
        let (lo, hi) = self.momentum_range();
        if y == &lo {
            Position::Min
        } else if y == &hi {
            Position::Max
        } else {
            Position::Interior
        }
    }

    /// Genus of the fixed surfaces (0 when there are none).
    pub fn genus(&self) -> u32 {
        self.surfaces.iter().map(|s| s.genus).max().unwrap_or(0)
    }

    pub fn surface_at(&self, position: Position) -> Option<&FatVertex> {
        self.surfaces.iter().find(|s| self.position(&s.y) == position)
    }

    pub fn interior_points(&self) -> impl Iterator<Item = &IsolatedVertex> {
        let (lo, hi) = self.momentum_range();
        self.isolated.iter().filter(move |p| p.y > lo && p.y < hi)
    }

    /// Self-intersection of a fixed surface: the supplied value, or the value
    /// forced by the extremal formulas when it was omitted.
    pub fn self_intersection(&self, surface_id: &str) -> Result<Rational> {
        let s = self
            .surfaces
            .iter()
            .find(|s| s.id == surface_id)
            .ok_or_else(|| Error::Input(format!("no surface `{surface_id}`")))?;
        if let Some(e) = &s.self_intersection {
            return Ok(e.clone());
        }
        let unresolved = || Error::UnresolvedSelfIntersection(surface_id.to_string());
        let (e_min, e_max) = extremal_self_intersections(self).map_err(|_| unresolved())?;
        match self.position(&s.y) {
            Position::Min => Ok(e_min),
            Position::Max => Ok(e_max),
            Position::Interior => Err(unresolved()),
        }
    }

    /// Copy with every omitted surface self-intersection filled in.
    pub fn resolved(&self) -> Result<DecoratedGraph> {
        let mut out = self.clone();
        for i in 0..out.surfaces.len() {
            let e = self.self_intersection(&self.surfaces[i].id)?;
            out.surfaces[i].self_intersection = Some(e);
        }
        Ok(out)
    }

    /// The H¹ identification as a rational `2g × 2g` matrix.
    pub fn identification_matrix(&self) -> Vec<Vec<Rational>> {
        let n = 2 * self.genus() as usize;
        match &self.h1_identification {
            Some(m) => m
                .iter()
                .map(|row| row.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
            None => (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Self-intersections of the extremal fixed sets from the momentum, area and
/// interior weight data:
///
/// ```text
/// e_min = (Σ y_p e_p + s_min − (Σ e_p)·y_max − s_max) / (y_max − y_min)
/// e_max = ((Σ e_p)·y_min + s_max − Σ y_p e_p − s_min) / (y_max − y_min)
/// ```
///
/// with `e_p = 1/(m_p n_p)` over interior points and `s_* = 0` when the
/// extremum is an isolated point.
pub fn extremal_self_intersections(g: &DecoratedGraph) -> Result<(Rational, Rational)> {
    let (y_min, y_max) = g.momentum_range();
    let span = &y_max - &y_min;
    if span.is_zero() {
        return Err(Error::Degenerate(
            "all fixed components have the same momentum value; the action is trivial".into(),
        ));
    }
    let area_at = |pos| g.surface_at(pos).map(|s| s.area.clone()).unwrap_or_default();
    let s_min = area_at(Position::Min);
    let s_max = area_at(Position::Max);
    let sum_e: Rational = g.interior_points().map(|p| p.inverse_weight_magnitude()).sum();
    let sum_ye: Rational = g
        .interior_points()
        .map(|p| &p.y * p.inverse_weight_magnitude())
        .sum();
    let e_min = (&sum_ye + &s_min - &sum_e * &y_max - &s_max) / &span;
    let e_max = (&sum_e * &y_min + &s_max - &sum_ye - &s_min) / &span;
    Ok((e_min, e_max))
}

/// Localization of the class `1`: `Σ_p 1/w_p − Σ_Σ e_Σ = 0`, where `w_p` is
/// the signed weight product. False when some self-intersection cannot be
/// resolved or a weight product vanishes.
pub fn abbv_zero_check(g: &DecoratedGraph) -> bool {
    abbv_zero_sum(g).is_some_and(|s| s.is_zero())
}

pub(crate) fn abbv_zero_sum(g: &DecoratedGraph) -> Option<Rational> {
    let mut total = Rational::zero();
    for p in &g.isolated {
        let w = p.weight_product();
        if w == 0 {
            return None;
        }
        total += &Rational::new(1, w);
    }
    for s in &g.surfaces {
        total -= &g.self_intersection(&s.id).ok()?;
    }
    Some(total)
}

fn gcd_all(values: impl Iterator<Item = i64>) -> i64 {
    values.fold(0i64, |acc, x| acc.gcd(&x))
}

/// Check every consistency condition of a decorated graph. An empty report
/// means the graph is valid.
pub fn validate_graph(g: &DecoratedGraph) -> ValidationReport {
    let mut report = ValidationReport::new();
    if g.component_count() == 0 {
        report.push("no-components", "no fixed components", &[]);
        return report;
    }
    let (y_min, y_max) = g.momentum_range();
    let degenerate = y_min == y_max;
    if degenerate {
        report.push(
            "degenerate-momentum",
            "all fixed components share one momentum value",
            &[],
        );
    }
    for (label, y) in [("minimum", &y_min), ("maximum", &y_max)] {
        let at: Vec<&str> = g.components().filter(|c| c.y() == y).map(|c| c.id()).collect();
        if at.len() > 1 && !degenerate {
            report.push(
                "extremum-not-unique",
                format!("the {label} {y} is attained on {} components", at.len()),
                &at,
            );
        }
    }

    // (a) sign pattern of the isotropy weights
    for p in &g.isolated {
        let [b1, b2] = p.weights;
        let (ok, expected) = match g.position(&p.y) {
            _ if degenerate => (true, ""),
            Position::Min => (b1 > 0 && b2 > 0, "minimum vertex must have positive weights"),
            Position::Max => (b1 < 0 && b2 < 0, "maximum vertex must have negative weights"),
            Position::Interior => (
                (b1 > 0) != (b2 > 0),
                "interior vertex must have opposite-sign weights",
            ),
        };
        if !ok {
            report.push(
                "weight-sign",
                format!("{expected}; `{}` has ({b1}, {b2})", p.id),
                &[&p.id],
            );
        }
    }

    // (b) edges: +ℓ at the lower endpoint, −ℓ at the upper one
    for e in &g.edges {
        let (Some(ComponentRef::Point(p)), Some(ComponentRef::Point(q))) =
            (g.component(&e.from), g.component(&e.to))
        else {
            report.push(
                "edge-endpoint",
                format!("edge {}-{} must join isolated vertices", e.from, e.to),
                &[&e.from, &e.to],
            );
            continue;
        };
        if p.y == q.y {
            report.push(
                "edge-momentum",
                format!("edge {}-{} joins vertices of equal momentum", e.from, e.to),
                &[&p.id, &q.id],
            );
            continue;
        }
        let (lower, upper) = if p.y < q.y { (p, q) } else { (q, p) };
        let ell = e.ell as i64;
        if !lower.weights.contains(&ell) || !upper.weights.contains(&-ell) {
            report.push(
                "edge-weight",
                format!(
                    "edge {}-{} with label {ell} needs weight {ell} at `{}` and {} at `{}`",
                    e.from, e.to, lower.id, -ell, upper.id
                ),
                &[&p.id, &q.id],
            );
        }
        if let Some(area) = &e.area {
            let gap = (&upper.y - &lower.y).abs();
            let expected = area * Rational::from(ell);
            if gap != expected {
                report.push(
                    "edge-area",
                    format!(
                        "edge {}-{}: momentum gap {gap} differs from label times area {expected}",
                        e.from, e.to
                    ),
                    &[&p.id, &q.id],
                );
            }
        }
    }

    // (c) surfaces only at the extrema
    for s in &g.surfaces {
        if !degenerate && g.position(&s.y) == Position::Interior {
            report.push(
                "surface-not-extremal",
                format!("surface `{}` at {} is not at an extremum of the momentum map", s.id, s.y),
                &[&s.id],
            );
        }
    }

    // (d) equal genera, and positive genus only with two surfaces
    if let [s, t] = g.surfaces.as_slice() {
        if s.genus != t.genus {
            report.push(
                "genus-mismatch",
                format!("surfaces have genus {} and {}", s.genus, t.genus),
                &[&s.id, &t.id],
            );
        }
    }
    if g.surfaces.len() == 1 && g.surfaces[0].genus > 0 {
        let s = &g.surfaces[0];
        report.push(
            "positive-genus",
            format!("a single fixed surface must have genus 0, `{}` has genus {}", s.id, s.genus),
            &[&s.id],
        );
    }
    validate_identification(g, &mut report);

    // (e) effectiveness
    let unit_normal = if g.surfaces.is_empty() { 0 } else { 1 };
    let gcd = gcd_all(
        g.isolated
            .iter()
            .flat_map(|p| p.weights.iter().map(|w| w.abs()))
            .chain(std::iter::once(unit_normal)),
    );
    if gcd > 1 {
        let ids: Vec<&str> = g.isolated.iter().map(|p| p.id.as_str()).collect();
        report.push(
            "not-effective",
            format!("all isotropy weights are divisible by {gcd}"),
            &ids,
        );
    }

    // (g) supplied self-intersections agree with the extremal formulas
    if let Ok((e_min, e_max)) = extremal_self_intersections(g) {
        for s in &g.surfaces {
            let expected = match g.position(&s.y) {
                Position::Min => &e_min,
                Position::Max => &e_max,
                Position::Interior => continue,
            };
            if let Some(e) = &s.self_intersection {
                if e != expected {
                    report.push(
                        "self-intersection",
                        format!(
                            "surface `{}` has self-intersection {e}, the extremal formula gives {expected}",
                            s.id
                        ),
                        &[&s.id],
                    );
                }
            }
        }
    }

    // (f) localization of 1 vanishes
    if !degenerate {
        match abbv_zero_sum(g) {
            Some(sum) if sum.is_zero() => {}
            Some(sum) => report.push(
                "abbv-zero",
                format!("Σ 1/w_p − Σ e_Σ = {sum}, expected 0"),
                &[],
            ),
            None => report.push(
                "abbv-zero",
                "localization of 1 is undefined (unresolved self-intersection)",
                &[],
            ),
        }
    }
    report
}

fn validate_identification(g: &DecoratedGraph, report: &mut ValidationReport) {
    let Some(m) = &g.h1_identification else {
        return;
    };
    let ids: Vec<&str> = g.surfaces.iter().map(|s| s.id.as_str()).collect();
    let n = 2 * g.genus() as usize;
    if g.surfaces.len() != 2 || n == 0 {
        if !m.is_empty() {
            report.push(
                "h1-identification",
                "an H^1 identification needs two fixed surfaces of positive genus",
                &ids,
            );
        }
        return;
    }
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        report.push(
            "h1-identification",
            format!("identification must be {n}x{n}"),
            &ids,
        );
        return;
    }
    if linalg::rank(&g.identification_matrix(), n) != n {
        report.push("h1-identification", "identification matrix is singular", &ids);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_g1_fixture() {
        let g = parse_graph(&fixtures::g1().to_json()).unwrap();
        assert_eq!(g.isolated.len(), 3);
        assert_eq!(g.surfaces.len(), 0);
        assert_eq!(g.edges.len(), 2);
        assert_eq!(g, fixtures::g1());
    }

    #[test]
    fn unknown_edge_endpoint() {
        let text = r#"{"kind":"graph","isolated":[{"id":"A","y":0,"weights":[1,1]}],
            "edges":[{"from":"A","to":"Z","ell":1}]}"#;
        let err = parse_graph(text).unwrap_err();
        assert!(matches!(err, Error::Schema(ref m) if m.contains("`Z`")), "{err}");
    }

    #[test]
    fn empty_component_lists() {
        let err = parse_graph(r#"{"kind":"graph","isolated":[],"surfaces":[]}"#).unwrap_err();
        assert!(matches!(err, Error::Schema(ref m) if m == "no fixed components"));
    }

    #[test]
    fn duplicate_ids() {
        let text = r#"{"kind":"graph","isolated":[{"id":"A","y":0,"weights":[1,1]}],
            "surfaces":[{"id":"A","y":1,"area":1,"genus":0}]}"#;
        assert!(matches!(parse_graph(text), Err(Error::Schema(m)) if m.contains("duplicate")));
    }

    #[test]
    fn missing_field_is_named() {
        let text = r#"{"kind":"graph","isolated":[{"id":"A","weights":[1,1]}]}"#;
        let err = parse_graph(text).unwrap_err();
        assert!(matches!(err, Error::Schema(ref m) if m.contains("`y`")), "{err}");
    }

    #[test]
    fn malformed_document_reports_position() {
        let err = parse_graph("{\"kind\":\"graph\",\n \"isolated\": [ }").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn unknown_fields_and_wrong_kind_rejected() {
        assert!(parse_graph(r#"{"kind":"xray","isolated":[{"id":"A","y":0,"weights":[1,1]}]}"#).is_err());
        assert!(parse_graph(r#"{"kind":"graph","extra":1,"isolated":[{"id":"A","y":0,"weights":[1,1]}]}"#).is_err());
    }

    #[test]
    fn g1_is_valid() {
        assert!(validate_graph(&fixtures::g1()).is_empty());
    }

    #[test]
    fn interior_vertex_sign_pattern() {
        let mut g = fixtures::g1();
        g.isolated[1].weights = [1, 1];
        let r = validate_graph(&g);
        assert!(r.has_code("weight-sign"));
        assert!(r.violations().iter().any(|v| v.message.contains("interior vertex must have opposite-sign weights")));
    }

    #[test]
    fn supplied_self_intersection_checked() {
        let mut g = fixtures::g2(0, Rational::from(1), Rational::from(1));
        g.surfaces[0].self_intersection = Some(Rational::from(5));
        let r = validate_graph(&g);
        assert!(r.has_code("self-intersection"), "{r}");
        assert!(r.violations().iter().any(|v| v.message.contains("gives 0")));
    }

    #[test]
    fn broken_edge_label() {
        let mut g = fixtures::g1();
        g.edges[0].ell = 3;
        let r = validate_graph(&g);
        assert!(r.has_code("edge-weight"));
    }

    #[test]
    fn edge_area_mismatch() {
        let mut g = fixtures::g1();
        g.edges[0].area = Some(Rational::from(2));
        assert!(validate_graph(&g).has_code("edge-area"));
    }

    #[test]
    fn extremal_formulas() {
        let q = Rational::from;
        let (lo, hi) = extremal_self_intersections(&fixtures::g2(1, q(3), q(3))).unwrap();
        assert_eq!((lo, hi), (q(0), q(0)));
        let (lo, hi) = extremal_self_intersections(&fixtures::g2(1, q(2), q(4))).unwrap();
        assert_eq!((lo, hi), (q(-2), q(2)));
        let (lo, hi) = extremal_self_intersections(&fixtures::g1()).unwrap();
        assert_eq!((lo, hi), (Rational::new(-1, 2), Rational::new(-1, 2)));
    }

    #[test]
    fn degenerate_momentum() {
        let mut g = fixtures::g2(0, Rational::from(1), Rational::from(1));
        g.surfaces[1].y = Rational::zero();
        assert!(matches!(extremal_self_intersections(&g), Err(Error::Degenerate(_))));
        assert!(validate_graph(&g).has_code("degenerate-momentum"));
    }

    #[test]
    fn abbv_zero_examples() {
        assert!(abbv_zero_check(&fixtures::g1()));
        assert!(abbv_zero_check(&fixtures::g3()));
        let mut g = fixtures::g1();
        g.isolated[1].weights = [-1, 2];
        assert!(!abbv_zero_check(&g));
    }

    #[test]
    fn not_effective() {
        let mut g = fixtures::g1();
        for p in &mut g.isolated {
            p.weights = [p.weights[0] * 2, p.weights[1] * 2];
        }
        g.edges.clear();
        assert!(validate_graph(&g).has_code("not-effective"));
    }

    #[test]
    fn self_intersection_fills_from_formula() {
        let g = fixtures::g2(2, Rational::from(2), Rational::from(4));
        let r = g.resolved().unwrap();
        assert_eq!(r.surfaces[0].self_intersection, Some(Rational::from(-2)));
        assert_eq!(r.surfaces[1].self_intersection, Some(Rational::from(2)));
    }

    #[test]
    fn report_is_order_independent() {
        let mut g = fixtures::g1();
        g.isolated[1].weights = [1, 1];
        g.edges[0].ell = 2;
        let r1 = validate_graph(&g);
        g.isolated.reverse();
        g.edges.reverse();
        assert_eq!(validate_graph(&g), r1);
        assert_eq!(validate_graph(&g), validate_graph(&g));
    }

    #[test]
    fn identification_shape_checked() {
        let mut g = fixtures::g2(1, Rational::from(1), Rational::from(1));
        g.h1_identification = Some(vec![vec![1, 0], vec![0, 0]]);
        assert!(validate_graph(&g).has_code("h1-identification"));
        g.h1_identification = Some(vec![vec![0, 1], vec![-1, 0]]);
        assert!(validate_graph(&g).is_empty());
    }

    #[test]
    fn every_fixture_is_valid_and_round_trips() {
        for (name, g) in fixtures::all_graphs() {
            assert!(validate_graph(&g).is_empty(), "{name}: {}", validate_graph(&g));
            assert!(abbv_zero_check(&g), "{name}");
            assert_eq!(parse_graph(&g.to_json()).unwrap(), g, "{name}");
        }
    }

    #[test]
    fn blowup_self_intersections() {
        let g = fixtures::g4(1, 2.into(), Rational::new(1, 2));
        assert_eq!(extremal_self_intersections(&g).unwrap(), (Rational::zero(), Rational::from(-1)));
    }

    #[test]
    fn extremal_sum_vanishes_with_surface_extrema() {
        for (name, g) in fixtures::all_graphs() {
            if g.surfaces.len() != 2 {
                continue;
            }
            let (lo, hi) = extremal_self_intersections(&g).unwrap();
            let interior: Rational = g.interior_points().map(|p| p.inverse_weight_magnitude()).sum();
            assert!((lo + hi + interior).is_zero(), "{name}");
        }
    }
}
