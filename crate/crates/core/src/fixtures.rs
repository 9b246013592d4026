//! Small decorated graphs and x-rays used by the tests, benches and CLI
//! examples.

use crate::graph::{ComponentRef, DecoratedGraph, FatVertex, GraphEdge, IsolatedVertex};
use crate::rational::Rational;
use crate::xray::{SkeletonPiece, TorusFixedComponent, XRay};

fn point(id: &str, y: Rational, weights: [i64; 2]) -> IsolatedVertex {
    IsolatedVertex {
        id: id.into(),
        y,
        weights,
    }
}

fn surface(id: &str, y: Rational, area: Rational, genus: u32) -> FatVertex {
    FatVertex {
        id: id.into(),
        y,
        area,
        genus,
        self_intersection: None,
    }
}

fn edge(from: &str, to: &str, ell: u64, area: Option<Rational>) -> GraphEdge {
    GraphEdge {
        from: from.into(),
        to: to.into(),
        ell,
        area,
    }
}

/// `ℂP²` with three isolated fixed points at heights 0, 1, 2.
pub fn g1() -> DecoratedGraph {
    DecoratedGraph {
        isolated: vec![
            point("A", 0.into(), [1, 2]),
            point("B", 1.into(), [-1, 1]),
            point("C", 2.into(), [-2, -1]),
        ],
        surfaces: vec![],
        edges: vec![
            edge("A", "B", 1, Some(1.into())),
            edge("B", "C", 1, Some(1.into())),
        ],
        h1_identification: None,
    }
}

/// `Σ_g × S²` rotating the sphere: two genus-`g` surfaces at heights 0 and 1.
pub fn g2(genus: u32, s_min: Rational, s_max: Rational) -> DecoratedGraph {
    DecoratedGraph {
        isolated: vec![],
        surfaces: vec![
            surface("Smin", 0.into(), s_min, genus),
            surface("Smax", 1.into(), s_max, genus),
        ],
        edges: vec![],
        h1_identification: None,
    }
}

/// `ℂP²` fixing a line: an isolated minimum and a fixed sphere at the top.
pub fn g3() -> DecoratedGraph {
    let mut max = surface("L", 1.into(), 1.into(), 0);
    max.self_intersection = Some(1.into());
    DecoratedGraph {
        isolated: vec![point("p", 0.into(), [1, 1])],
        surfaces: vec![max],
        edges: vec![],
        h1_identification: None,
    }
}

/// The blowup of `Σ_g × S²` at a point of the top surface: the top surface
/// loses `ε` of area and an interior point appears at height `1 − ε`.
pub fn g4(genus: u32, s: Rational, eps: Rational) -> DecoratedGraph {
    let top = Rational::one() - &eps;
    DecoratedGraph {
        isolated: vec![point("q", top, [1, -1])],
        surfaces: vec![
            surface("Smin", 0.into(), s.clone(), genus),
            surface("Smax", 1.into(), s - eps, genus),
        ],
        edges: vec![],
        h1_identification: None,
    }
}

/// `S² × S²` with the circle acting with weights `(1, 2)`: four isolated
/// points joined by two ℤ₂-spheres.
pub fn g5() -> DecoratedGraph {
    DecoratedGraph {
        isolated: vec![
            point("P0", 0.into(), [1, 2]),
            point("P1", 1.into(), [-1, 2]),
            point("P2", 2.into(), [1, -2]),
            point("P3", 3.into(), [-1, -2]),
        ],
        surfaces: vec![],
        edges: vec![
            edge("P0", "P2", 2, Some(1.into())),
            edge("P1", "P3", 2, Some(1.into())),
        ],
        h1_identification: None,
    }
}

/// Every circle fixture, labelled.
pub fn all_graphs() -> Vec<(String, DecoratedGraph)> {
    vec![
        ("G1".into(), g1()),
        ("G2(0)".into(), g2(0, 1.into(), 1.into())),
        ("G2(1)".into(), g2(1, 1.into(), 1.into())),
        ("G2(2)".into(), g2(2, 1.into(), 1.into())),
        ("G2(1,2,4)".into(), g2(1, 2.into(), 4.into())),
        ("G3".into(), g3()),
        ("G4(0)".into(), g4(0, 2.into(), Rational::new(1, 2))),
        ("G4(1)".into(), g4(1, 2.into(), Rational::new(1, 2))),
        ("G5".into(), g5()),
    ]
}

fn renamed(g: &DecoratedGraph, suffix: &str) -> DecoratedGraph {
    let mut h = g.clone();
    let name = |id: &str| format!("{id}{suffix}");
    for p in &mut h.isolated {
        p.id = name(&p.id);
    }
    for s in &mut h.surfaces {
        s.id = name(&s.id);
    }
    for e in &mut h.edges {
        e.from = name(&e.from);
        e.to = name(&e.to);
    }
    h
}

/// `M × S²` for the manifold `M` of `g`, with the first circle acting on
/// `M` and the second rotating the sphere. Fixed components are `F_S` and
/// `F_N` at the two poles; the pieces are `M × {pole}` (character `e₁`) and
/// `F × S²` (character `e₂`).
pub fn product_xray(g: &DecoratedGraph) -> XRay {
    let (lo, hi) = g.momentum_range();
    let poles = [("_S", 0i64, 1i64), ("_N", 1, -1)];
    let mut components = Vec::new();
    for c in g.components() {
        for (suffix, height, rot) in poles {
            let y = vec![c.y().clone(), Rational::from(height)];
            let id = format!("{}{suffix}", c.id());
            components.push(match c {
                ComponentRef::Point(p) => TorusFixedComponent {
                    id,
                    y,
                    weights: vec![vec![p.weights[0], 0], vec![p.weights[1], 0], vec![0, rot]],
                    genus: None,
                    area: None,
                },
                ComponentRef::Surface(s) => {
                    let normal = if s.y == lo { 1 } else { -1 };
                    debug_assert!(s.y == lo || s.y == hi);
                    TorusFixedComponent {
                        id,
                        y,
                        weights: vec![vec![normal, 0], vec![0, rot]],
                        genus: Some(s.genus),
                        area: Some(s.area.clone()),
                    }
                }
            });
        }
    }
    let mut pieces = Vec::new();
    for (suffix, _, _) in poles {
        let induced = renamed(g, suffix);
        pieces.push(SkeletonPiece {
            id: format!("M{suffix}"),
            lambda: vec![1, 0],
            dim: 4,
            members: induced.components().map(|c| c.id().to_string()).collect(),
            induced_graph: Some(induced),
            ell: None,
        });
    }
    for c in g.components() {
        let south = format!("{}_S", c.id());
        let north = format!("{}_N", c.id());
        let piece = match c {
            ComponentRef::Point(_) => SkeletonPiece {
                id: format!("{}xS2", c.id()),
                lambda: vec![0, 1],
                dim: 2,
                members: vec![south, north],
                induced_graph: None,
                ell: Some(1),
            },
            ComponentRef::Surface(s) => {
                let mut induced = g2(s.genus, s.area.clone(), s.area.clone());
                induced.surfaces[0].id = south.clone();
                induced.surfaces[1].id = north.clone();
                SkeletonPiece {
                    id: format!("{}xS2", c.id()),
                    lambda: vec![0, 1],
                    dim: 4,
                    members: vec![south, north],
                    induced_graph: Some(induced),
                    ell: None,
                }
            }
        };
        pieces.push(piece);
    }
    XRay {
        rank: 2,
        components,
        pieces,
    }
}

/// `Σ_g × S² × S²` with the rank-two torus rotating both spheres.
pub fn x2(genus: u32) -> XRay {
    product_xray(&g2(genus, 1.into(), 1.into()))
}

/// A circle graph as a rank-one x-ray with a single piece.
pub fn embedded_xray(g: &DecoratedGraph) -> XRay {
    let (lo, _) = g.momentum_range();
    let components = g
        .components()
        .map(|c| match c {
            ComponentRef::Point(p) => TorusFixedComponent {
                id: p.id.clone(),
                y: vec![p.y.clone()],
                weights: vec![vec![p.weights[0]], vec![p.weights[1]]],
                genus: None,
                area: None,
            },
            ComponentRef::Surface(s) => TorusFixedComponent {
                id: s.id.clone(),
                y: vec![s.y.clone()],
                weights: vec![vec![if s.y == lo { 1 } else { -1 }]],
                genus: Some(s.genus),
                area: Some(s.area.clone()),
            },
        })
        .collect();
    XRay {
        rank: 1,
        components,
        pieces: vec![SkeletonPiece {
            id: "M".into(),
            lambda: vec![1],
            dim: 4,
            members: g.components().map(|c| c.id().to_string()).collect(),
            induced_graph: Some(g.clone()),
            ell: None,
        }],
    }
}
