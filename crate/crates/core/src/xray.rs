//! X-rays of complexity one torus actions: fixed components with vector
//! momentum labels, and the declared pieces of the one-skeleton, each fixed
//! by a codimension-one subtorus and tagged with its character `λ`.
//!
//! A class on the fixed set extends to a global class exactly when its
//! restriction to every piece does: differences between members must be
//! divisible by `λ·u`, and on four-dimensional pieces the localization over
//! the induced circle graph must have no poles along `λ·u`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::class::{Catalogue, ComponentKind, DegreeLayout, EquivariantClass};
use crate::error::{Error, Result};
use crate::graph::{validate_graph, ComponentRef, DecoratedGraph, Position};
use crate::rational::Rational;
use crate::report::ValidationReport;
use crate::s1::{GradedBasis, MembershipDecision};
use crate::torus::{is_primitive, DefectKey, PieceConditions};

pub const DEFAULT_XRAY_MAX_DEGREE: u32 = 8;

/// A torus-fixed component. Surfaces carry `genus` and `area`; points carry
/// `rank + 1` tangent weights, surfaces `rank` normal weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusFixedComponent {
    pub id: String,
    pub y: Vec<Rational>,
    pub weights: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub area: Option<Rational>,
}

impl TorusFixedComponent {
    pub fn kind(&self) -> ComponentKind {
        match self.genus {
            Some(genus) => ComponentKind::Surface { genus },
            None => ComponentKind::Point,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkeletonPiece {
    pub id: String,
    pub lambda: Vec<i64>,
    pub dim: u32,
    pub members: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub induced_graph: Option<DecoratedGraph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "XRayDocument", into = "XRayDocument")]
pub struct XRay {
    pub rank: usize,
    pub components: Vec<TorusFixedComponent>,
    pub pieces: Vec<SkeletonPiece>,
}

#[derive(Serialize, Deserialize)]
enum XRayTag {
    #[serde(rename = "xray")]
    XRay,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct XRayDocument {
    kind: XRayTag,
    rank: usize,
    components: Vec<TorusFixedComponent>,
    #[serde(default)]
    pieces: Vec<SkeletonPiece>,
}

impl TryFrom<XRayDocument> for XRay {
    type Error = Error;

    fn try_from(doc: XRayDocument) -> Result<Self> {
        let x = XRay {
            rank: doc.rank,
            components: doc.components,
            pieces: doc.pieces,
        };
        x.check_structure()?;
        Ok(x)
    }
}

impl From<XRay> for XRayDocument {
    fn from(x: XRay) -> Self {
        XRayDocument {
            kind: XRayTag::XRay,
            rank: x.rank,
            components: x.components,
            pieces: x.pieces,
        }
    }
}

pub fn parse_xray(text: &str) -> Result<XRay> {
    let doc: XRayDocument = serde_json::from_str(text).map_err(Error::from_json)?;
    XRay::try_from(doc)
}

impl XRay {
    fn check_structure(&self) -> Result<()> {
        let schema = |m: String| Err(Error::Schema(m));
        if self.rank == 0 {
            return schema("rank must be at least 1".into());
        }
        if self.components.is_empty() {
            return schema("no fixed components".into());
        }
        let mut ids = BTreeSet::new();
        for c in &self.components {
            if c.id.is_empty() {
                return schema("empty component id".into());
            }
            if !ids.insert(c.id.as_str()) {
                return schema(format!("duplicate id `{}`", c.id));
            }
            if c.y.len() != self.rank {
                return schema(format!("`{}`: y must have {} entries", c.id, self.rank));
            }
            if let Some(w) = c.weights.iter().find(|w| w.len() != self.rank) {
                return schema(format!("`{}`: weight {w:?} must have {} entries", c.id, self.rank));
            }
            match (&c.genus, &c.area) {
                (Some(_), None) => return schema(format!("surface `{}` needs an area", c.id)),
                (None, Some(_)) => return schema(format!("`{}` has an area but no genus", c.id)),
                (Some(_), Some(a)) if !a.is_positive() => {
                    return schema(format!("surface `{}` has non-positive area {a}", c.id))
                }
                _ => {}
            }
        }
        let mut piece_ids = BTreeSet::new();
        for p in &self.pieces {
            if !piece_ids.insert(p.id.as_str()) {
                return schema(format!("duplicate piece id `{}`", p.id));
            }
            if p.lambda.len() != self.rank {
                return schema(format!("piece `{}`: lambda must have {} entries", p.id, self.rank));
            }
            if p.members.is_empty() {
                return schema(format!("piece `{}` has no members", p.id));
            }
            let mut seen = BTreeSet::new();
            for m in &p.members {
                if !ids.contains(m.as_str()) {
                    return schema(format!("piece `{}` references unknown component `{m}`", p.id));
                }
                if !seen.insert(m) {
                    return schema(format!("piece `{}` lists `{m}` twice", p.id));
                }
            }
            match p.dim {
                2 if p.ell.is_none() => return schema(format!("piece `{}`: dimension 2 needs ell", p.id)),
                2 if p.ell == Some(0) => return schema(format!("piece `{}`: ell must be positive", p.id)),
                4 if p.induced_graph.is_none() => {
                    return schema(format!("piece `{}`: dimension 4 needs induced_graph", p.id))
                }
                2 | 4 => {}
                d => return schema(format!("piece `{}`: dimension {d} is neither 2 nor 4", p.id)),
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("x-ray serializes")
    }

    pub fn catalogue(&self) -> Catalogue {
        self.components.iter().map(|c| (c.id.clone(), c.kind())).collect()
    }

    pub fn component(&self, id: &str) -> Option<&TorusFixedComponent> {
        self.components.iter().find(|c| c.id == id)
    }

    /// Membership conditions of every piece, ordered by piece id.
    pub(crate) fn piece_conditions(&self) -> Result<Vec<(String, PieceConditions)>> {
        let mut pieces: Vec<&SkeletonPiece> = self.pieces.iter().collect();
        pieces.sort_by(|a, b| a.id.cmp(&b.id));
        pieces
            .into_iter()
            .map(|p| {
                let cond = match (&p.induced_graph, p.dim) {
                    (Some(g), 4) => PieceConditions::from_graph(g, &p.lambda, p.members.clone())?,
                    _ => PieceConditions::sphere(&p.lambda, p.members.clone())?,
                };
                Ok((p.id.clone(), cond.with_context(format!("piece `{}`", p.id))))
            })
            .collect()
    }
}

/// `w = c·λ` for an integer `c`, if `w` is parallel to the primitive `λ`.
fn multiple_of(w: &[i64], lambda: &[i64]) -> Option<i64> {
    let i = lambda.iter().position(|&l| l != 0)?;
    let (c, r) = w[i].div_rem(&lambda[i]);
    (r == 0 && w.iter().zip(lambda).all(|(&a, &l)| a == c * l)).then_some(c)
}

fn scaled(lambda: &[i64], t: &Rational) -> Vec<Rational> {
    lambda.iter().map(|&l| t * Rational::from(l)).collect()
}

fn difference(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `t` with `d = t·λ`, if `d` is parallel to `λ`.
fn parameter_along(d: &[Rational], lambda: &[i64]) -> Option<Rational> {
    let i = lambda.iter().position(|&l| l != 0)?;
    let t = &d[i] / Rational::from(lambda[i]);
    (scaled(lambda, &t) == d).then_some(t)
}

/// Check every consistency condition of an x-ray, including validation of
/// each induced circle graph. An empty report means the x-ray is valid.
pub fn validate_xray(x: &XRay) -> ValidationReport {
    let mut report = ValidationReport::new();
    for c in &x.components {
        let expected = match c.kind() {
            ComponentKind::Point => x.rank + 1,
            ComponentKind::Surface { .. } => x.rank,
        };
        if c.weights.len() != expected {
            report.push(
                "weight-count",
                format!("`{}` lists {} weights, expected {expected}", c.id, c.weights.len()),
                &[&c.id],
            );
        }
        if c.weights.iter().any(|w| w.iter().all(|&a| a == 0)) {
            report.push("zero-weight", format!("`{}` has a zero weight", c.id), &[&c.id]);
        }
    }
    for p in &x.pieces {
        if !is_primitive(&p.lambda) {
            report.push(
                "character-not-primitive",
                format!("piece `{}`: character {:?} not primitive", p.id, p.lambda),
                &[&p.id],
            );
            continue;
        }
        match p.dim {
            2 => validate_sphere(x, p, &mut report),
            _ => validate_four_piece(x, p, &mut report),
        }
    }
    report
}

fn validate_sphere(x: &XRay, p: &SkeletonPiece, report: &mut ValidationReport) {
    let members: Vec<&TorusFixedComponent> = p.members.iter().filter_map(|m| x.component(m)).collect();
    let [a, b] = members.as_slice() else {
        report.push(
            "piece-shape",
            format!("piece `{}`: a two-dimensional piece joins exactly two points", p.id),
            &[&p.id],
        );
        return;
    };
    if a.kind() != ComponentKind::Point || b.kind() != ComponentKind::Point {
        report.push(
            "piece-shape",
            format!("piece `{}`: a two-dimensional piece joins isolated points", p.id),
            &[&p.id],
        );
        return;
    }
    let Some(t) = parameter_along(&difference(&b.y, &a.y), &p.lambda).filter(|t| !t.is_zero()) else {
        report.push(
            "momentum-projection",
            format!("piece `{}`: momentum images of its ends are not separated along λ", p.id),
            &[&p.id, &a.id, &b.id],
        );
        return;
    };
    let (lower, upper) = if t.is_positive() { (a, b) } else { (b, a) };
    let ell = p.ell.unwrap_or(1) as i64;
    for (c, sign) in [(lower, 1), (upper, -1)] {
        if !c.weights.iter().any(|w| multiple_of(w, &p.lambda) == Some(sign * ell)) {
            report.push(
                "weight-projection",
                format!("piece `{}`: `{}` needs the weight {}·λ", p.id, c.id, sign * ell),
                &[&p.id, &c.id],
            );
        }
    }
}

fn validate_four_piece(x: &XRay, p: &SkeletonPiece, report: &mut ValidationReport) {
    let Some(g) = &p.induced_graph else { return };
    let graph_ids: BTreeSet<&str> = g.components().map(|c| c.id()).collect();
    let member_ids: BTreeSet<&str> = p.members.iter().map(String::as_str).collect();
    if graph_ids != member_ids {
        report.push(
            "piece-members",
            format!("piece `{}`: induced graph components differ from the members", p.id),
            &[&p.id],
        );
        return;
    }
    report.extend_with_context(&validate_graph(g), &format!("piece `{}`", p.id));

    let first = &p.members[0];
    let y0 = g.component(first).expect("member").y().clone();
    let phi0 = &x.component(first).expect("member").y;
    for m in &p.members {
        let c = x.component(m).expect("member");
        let induced = g.component(m).expect("member");
        if c.kind() != induced.kind() {
            report.push(
                "piece-members",
                format!("piece `{}`: `{m}` has a different kind in the induced graph", p.id),
                &[&p.id, m],
            );
            continue;
        }
        let expected = scaled(&p.lambda, &(induced.y() - &y0));
        if difference(&c.y, phi0) != expected {
            report.push(
                "momentum-projection",
                format!("piece `{}`: momentum of `{m}` does not project to its induced label", p.id),
                &[&p.id, m],
            );
        }
        let mut along: Vec<i64> = c.weights.iter().filter_map(|w| multiple_of(w, &p.lambda)).collect();
        along.sort_unstable();
        let mut wanted: Vec<i64> = match induced {
            ComponentRef::Point(v) => v.weights.to_vec(),
            ComponentRef::Surface(s) => {
                if let Some(a) = &c.area {
                    if a != &s.area {
                        report.push(
                            "surface-area",
                            format!("piece `{}`: `{m}` has area {a} but {} in the induced graph", p.id, s.area),
                            &[&p.id, m],
                        );
                    }
                }
                match g.position(&s.y) {
                    Position::Min => vec![1],
                    Position::Max => vec![-1],
                    Position::Interior => vec![],
                }
            }
        };
        wanted.sort_unstable();
        if along != wanted {
            report.push(
                "weight-projection",
                format!(
                    "piece `{}`: weights of `{m}` along λ are {along:?}, the induced graph needs {wanted:?}",
                    p.id
                ),
                &[&p.id, m],
            );
        }
    }
}

fn check_xray_class(x: &XRay, alpha: &EquivariantClass) -> Result<()> {
    if alpha.rank() != x.rank {
        return Err(Error::DomainMismatch(format!(
            "class has {} equivariant variables, the x-ray has rank {}",
            alpha.rank(),
            x.rank
        )));
    }
    alpha.check_addressing(&x.catalogue())
}

/// Whether a class on the torus-fixed set extends to a global class:
/// every piece's conditions must hold.
pub fn check_membership_xray(x: &XRay, alpha: &EquivariantClass) -> Result<MembershipDecision> {
    check_xray_class(x, alpha)?;
    let mut violations = Vec::new();
    for (_, cond) in x.piece_conditions()? {
        violations.extend(cond.violations(alpha)?);
    }
    Ok(MembershipDecision::new(violations))
}

/// Degree-k constraint rows over the slot layout of the whole fixed set.
pub fn xray_constraints(x: &XRay, k: u32) -> Result<(DegreeLayout, Vec<Vec<Rational>>)> {
    let layout = DegreeLayout::new(&x.catalogue(), x.rank, k);
    let n = layout.len();
    let mut rows: BTreeMap<(String, DefectKey), Vec<Rational>> = BTreeMap::new();
    for (piece, cond) in x.piece_conditions()? {
        for (i, slot) in layout.slots().iter().enumerate() {
            if !cond.members().contains(&slot.component) {
                continue;
            }
            for (key, v) in cond.defects(&layout.unit(i))? {
                rows.entry((piece.clone(), key))
                    .or_insert_with(|| vec![Rational::zero(); n])[i] = v;
            }
        }
    }
    Ok((layout, rows.into_values().collect()))
}

pub fn image_basis_xray(x: &XRay, k: u32) -> Result<GradedBasis> {
    image_basis_xray_with_cutoff(x, k, DEFAULT_XRAY_MAX_DEGREE)
}

pub fn image_basis_xray_with_cutoff(x: &XRay, k: u32, max_degree: u32) -> Result<GradedBasis> {
    if k > max_degree {
        return Err(Error::CutoffExceeded {
            degree: k,
            cutoff: max_degree,
        });
    }
    let (layout, rows) = xray_constraints(x, k)?;
    Ok(GradedBasis::from_constraints(layout, &rows))
}
