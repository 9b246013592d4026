//! Equivariant classes on the fixed set: one class in `H*(F) ⊗ ℚ[u₁…u_r]` per
//! fixed component `F`. The circle case is `r = 1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentQ, LaurentSurface};
use crate::rational::Rational;
use crate::surface::SurfaceClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum ComponentKind {
    Point,
    Surface { genus: u32 },
}

pub type Catalogue = BTreeMap<String, ComponentKind>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentClass {
    Point(LaurentQ),
    Surface(LaurentSurface),
}

fn total(e: &[i32]) -> i32 {
    e.iter().sum()
}

impl ComponentClass {
    pub fn zero(kind: ComponentKind, rank: usize) -> Self {
        match kind {
            ComponentKind::Point => ComponentClass::Point(LaurentQ::zero(rank, ())),
            ComponentKind::Surface { genus } => {
                ComponentClass::Surface(LaurentSurface::zero(rank, genus))
            }
        }
    }

    pub fn constant(kind: ComponentKind, rank: usize, c: &Rational) -> Self {
        match kind {
            ComponentKind::Point => ComponentClass::Point(LaurentQ::constant(rank, c.clone())),
            ComponentKind::Surface { genus } => ComponentClass::Surface(LaurentSurface::constant(
                rank,
                SurfaceClass::scalar(genus, c.clone()),
            )),
        }
    }

    pub fn kind(&self) -> ComponentKind {
        match self {
            ComponentClass::Point(_) => ComponentKind::Point,
            ComponentClass::Surface(p) => ComponentKind::Surface { genus: *p.domain() },
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            ComponentClass::Point(p) => p.nvars(),
            ComponentClass::Surface(p) => p.nvars(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ComponentClass::Point(p) => p.is_zero(),
            ComponentClass::Surface(p) => p.is_zero(),
        }
    }

    /// Highest cohomological degree carrying a nonzero term.
    pub fn max_degree(&self) -> Option<u32> {
        match self {
            ComponentClass::Point(p) => p.terms().map(|(e, _)| 2 * total(e) as u32).max(),
            ComponentClass::Surface(p) => p
                .terms()
                .map(|(e, c)| {
                    let top = if !c.c2.is_zero() {
                        2
                    } else if !c.h1_is_zero() {
                        1
                    } else {
                        0
                    };
                    2 * total(e) as u32 + top
                })
                .max(),
        }
    }

    pub fn homogeneous(&self, k: u32) -> Self {
        match self {
            ComponentClass::Point(p) => {
                ComponentClass::Point(p.filter(|e| 2 * total(e) as u32 == k))
            }
            ComponentClass::Surface(p) => {
                let mut out = LaurentSurface::zero(p.nvars(), *p.domain());
                for (e, c) in p.terms() {
                    let shift = 2 * total(e) as i64;
                    let part = k as i64 - shift;
                    if (0..=2).contains(&part) {
                        out.add_term(e.clone(), &c.graded_part(part as u32))
                            .expect("same ring");
                    }
                }
                ComponentClass::Surface(out)
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (ComponentClass::Point(a), ComponentClass::Point(b)) => {
                Ok(ComponentClass::Point(a.try_add(b)?))
            }
            (ComponentClass::Surface(a), ComponentClass::Surface(b)) => {
                Ok(ComponentClass::Surface(a.try_add(b)?))
            }
            _ => Err(Error::DomainMismatch("point class vs surface class".into())),
        }
    }

    pub fn scaled(&self, r: &Rational) -> Self {
        match self {
            ComponentClass::Point(p) => ComponentClass::Point(p.scaled(r)),
            ComponentClass::Surface(p) => ComponentClass::Surface(p.scaled(r)),
        }
    }

    /// Multiply by the monomial `u^exponent`.
    pub fn times_monomial(&self, exponent: &[i32]) -> Self {
        match self {
            ComponentClass::Point(p) => ComponentClass::Point(
                p.try_mul(&LaurentQ::monomial(exponent.to_vec(), Rational::one()))
                    .expect("same ring"),
            ),
            ComponentClass::Surface(p) => ComponentClass::Surface(
                p.try_mul(&LaurentSurface::monomial(
                    exponent.to_vec(),
                    SurfaceClass::one(*p.domain()),
                ))
                .expect("same ring"),
            ),
        }
    }

    /// Linear change of equivariant variables `u_i = Σ_j m[i][j] v_j`.
    pub fn substitute_linear(&self, m: &[Vec<i64>]) -> Result<Self> {
        Ok(match self {
            ComponentClass::Point(p) => ComponentClass::Point(p.substitute_linear(m)?),
            ComponentClass::Surface(p) => ComponentClass::Surface(p.substitute_linear(m)?),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (ComponentClass::Point(a), ComponentClass::Point(b)) => {
                Ok(ComponentClass::Point(a.try_mul(b)?))
            }
            (ComponentClass::Surface(a), ComponentClass::Surface(b)) => {
                Ok(ComponentClass::Surface(a.try_mul(b)?))
            }
            _ => Err(Error::DomainMismatch("point class vs surface class".into())),
        }
    }

    pub fn with_vars(&self, nvars: usize) -> Self {
        match self {
            ComponentClass::Point(p) => ComponentClass::Point(p.with_vars(nvars)),
            ComponentClass::Surface(p) => ComponentClass::Surface(p.with_vars(nvars)),
        }
    }

    /// The `H⁰ ⊗ ℚ[u]` part as a polynomial.
    pub fn h0_part(&self) -> LaurentQ {
        match self {
            ComponentClass::Point(p) => p.clone(),
            ComponentClass::Surface(p) => p.map_coefficients((), |c| c.c0.clone()),
        }
    }

    /// The coefficient polynomials of `a₁…a_g, b₁…b_g`.
    pub fn h1_parts(&self) -> Vec<LaurentQ> {
        match self {
            ComponentClass::Point(_) => Vec::new(),
            ComponentClass::Surface(p) => (0..2 * *p.domain() as usize)
                .map(|i| p.map_coefficients((), |c| c.c1[i].clone()))
                .collect(),
        }
    }

    /// The coefficient polynomial of `[Σ]`.
    pub fn h2_part(&self) -> LaurentQ {
        match self {
            ComponentClass::Point(p) => LaurentQ::zero(p.nvars(), ()),
            ComponentClass::Surface(p) => p.map_coefficients((), |c| c.c2.clone()),
        }
    }
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentClass::Point(p) => write!(f, "{p}"),
            ComponentClass::Surface(p) => write!(f, "{p}"),
        }
    }
}

/// A tuple of classes, one per fixed component, addressed by component id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantClass {
    rank: usize,
    components: BTreeMap<String, ComponentClass>,
}

impl EquivariantClass {
    pub fn new(rank: usize, components: BTreeMap<String, ComponentClass>) -> Result<Self> {
        if let Some((id, c)) = components.iter().find(|(_, c)| c.rank() != rank) {
            return Err(Error::DomainMismatch(format!(
                "component `{id}` has {} variables, expected {rank}",
                c.rank()
            )));
        }
        Ok(EquivariantClass { rank, components })
    }

    pub fn zero(catalogue: &Catalogue, rank: usize) -> Self {
        EquivariantClass {
            rank,
            components: catalogue
                .iter()
                .map(|(id, &k)| (id.clone(), ComponentClass::zero(k, rank)))
                .collect(),
        }
    }

    /// The constant class `c` on every component.
    pub fn constant(catalogue: &Catalogue, rank: usize, c: &Rational) -> Self {
        EquivariantClass {
            rank,
            components: catalogue
                .iter()
                .map(|(id, &k)| (id.clone(), ComponentClass::constant(k, rank, c)))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &BTreeMap<String, ComponentClass> {
        &self.components
    }

    pub fn get(&self, id: &str) -> Option<&ComponentClass> {
        self.components.get(id)
    }

    pub fn set(&mut self, id: &str, class: ComponentClass) {
        self.components.insert(id.to_string(), class);
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(ComponentClass::is_zero)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.components.values().filter_map(ComponentClass::max_degree).max()
    }

    pub fn homogeneous(&self, k: u32) -> Self {
        EquivariantClass {
            rank: self.rank,
            components: self
                .components
                .iter()
                .map(|(id, c)| (id.clone(), c.homogeneous(k)))
                .collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.components.len() != other.components.len() {
            return Err(Error::Addressing("classes over different component sets".into()));
        }
        let mut out = BTreeMap::new();
        for (id, c) in &self.components {
            let d = other
                .components
                .get(id)
                .ok_or_else(|| Error::Addressing(format!("component `{id}` missing")))?;
            out.insert(id.clone(), c.try_add(d)?);
        }
        Self::new(self.rank, out)
    }

    pub fn scaled(&self, r: &Rational) -> Self {
        EquivariantClass {
            rank: self.rank,
            components: self
                .components
                .iter()
                .map(|(id, c)| (id.clone(), c.scaled(r)))
                .collect(),
        }
    }

    pub fn times_monomial(&self, exponent: &[i32]) -> Self {
        EquivariantClass {
            rank: self.rank,
            components: self
                .components
                .iter()
                .map(|(id, c)| (id.clone(), c.times_monomial(exponent)))
                .collect(),
        }
    }

    pub fn substitute_linear(&self, m: &[Vec<i64>]) -> Result<Self> {
        let components = self
            .components
            .iter()
            .map(|(id, c)| Ok((id.clone(), c.substitute_linear(m)?)))
            .collect::<Result<_>>()?;
        Ok(EquivariantClass {
            rank: self.rank,
            components,
        })
    }

    /// Check that the class addresses exactly the catalogued components with
    /// matching kinds and genera.
    pub fn check_addressing(&self, catalogue: &Catalogue) -> Result<()> {
        for id in self.components.keys() {
            if !catalogue.contains_key(id) {
                return Err(Error::Addressing(format!("unknown component `{id}`")));
            }
        }
        for (id, kind) in catalogue {
            let c = self
                .components
                .get(id)
                .ok_or_else(|| Error::Addressing(format!("component `{id}` has no class")))?;
            if c.kind() != *kind {
                return Err(Error::Addressing(format!(
                    "component `{id}` is {kind:?} but the class is {:?}",
                    c.kind()
                )));
            }
        }
        Ok(())
    }

    /// Restriction to a subset of components.
    pub fn restricted(&self, ids: &[String]) -> Result<Self> {
        let mut out = BTreeMap::new();
        for id in ids {
            let c = self
                .components
                .get(id)
                .ok_or_else(|| Error::Addressing(format!("component `{id}` has no class")))?;
            out.insert(id.clone(), c.clone());
        }
        Self::new(self.rank, out)
    }
}

impl fmt::Display for EquivariantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (id, c)) in self.components.iter().enumerate() {
            if n > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{id}: {c}")?;
        }
        Ok(())
    }
}

/// All exponent vectors of total degree `d` in `rank` variables, in
/// descending lexicographic order.
pub fn monomials(rank: usize, d: u32) -> Vec<Exponent> {
    fn go(rank: usize, d: i32, prefix: &mut Vec<i32>, out: &mut Vec<Exponent>) {
        if prefix.len() + 1 == rank {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            go(rank, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if rank == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(rank, d as i32, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Part {
    /// Coefficient at an isolated point.
    Point,
    H0,
    /// Index into `a₁…a_g, b₁…b_g`.
    H1(usize),
    H2,
}

/// One basis element of the degree-k fixed-set space: a component, a basis
/// class of `H*(F)` and a monomial in the equivariant variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Slot {
    pub component: String,
    pub part: Part,
    pub exponent: Exponent,
}

/// The ordered slot basis of `⊕_F H^k_T(F)`.
#[derive(Clone, Debug)]
pub struct DegreeLayout {
    degree: u32,
    rank: usize,
    catalogue: Catalogue,
    slots: Vec<Slot>,
}

impl DegreeLayout {
    pub fn new(catalogue: &Catalogue, rank: usize, degree: u32) -> Self {
        let mut slots = Vec::new();
        let even = degree % 2 == 0;
        for (id, kind) in catalogue {
            let push = |slots: &mut Vec<Slot>, part: Part, d: u32| {
                for e in monomials(rank, d) {
                    slots.push(Slot {
                        component: id.clone(),
                        part: part.clone(),
                        exponent: e,
                    });
                }
            };
            match kind {
                ComponentKind::Point => {
                    if even {
                        push(&mut slots, Part::Point, degree / 2);
                    }
                }
                ComponentKind::Surface { genus } => {
                    if even {
                        push(&mut slots, Part::H0, degree / 2);
                    } else {
                        for i in 0..2 * *genus as usize {
                            push(&mut slots, Part::H1(i), (degree - 1) / 2);
                        }
                    }
                    if even && degree >= 2 {
                        push(&mut slots, Part::H2, (degree - 2) / 2);
                    }
                }
            }
        }
        DegreeLayout {
            degree,
            rank,
            catalogue: catalogue.clone(),
            slots,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn index_of(&self, component: &str, part: &Part, exponent: &[i32]) -> Option<usize> {
        self.slots.iter().position(|s| {
            s.component == component && &s.part == part && s.exponent == exponent
        })
    }

    /// Coordinates of the degree-k part of `class`.
    pub fn coords(&self, class: &EquivariantClass) -> Vec<Rational> {
        let k = class.homogeneous(self.degree);
        self.slots
            .iter()
            .map(|s| match k.get(&s.component) {
                None => Rational::zero(),
                Some(ComponentClass::Point(p)) => p.coefficient(&s.exponent),
                Some(ComponentClass::Surface(p)) => {
                    let c = p.coefficient(&s.exponent);
                    match s.part {
                        Part::Point | Part::H0 => c.c0,
                        Part::H1(i) => c.c1[i].clone(),
                        Part::H2 => c.c2,
                    }
                }
            })
            .collect()
    }

    pub fn class_from(&self, coords: &[Rational]) -> EquivariantClass {
        let mut class = EquivariantClass::zero(&self.catalogue, self.rank);
        for (s, v) in self.slots.iter().zip(coords) {
            if v.is_zero() {
                continue;
            }
            match class.components.get_mut(&s.component).expect("catalogued") {
                ComponentClass::Point(p) => {
                    p.add_term(s.exponent.clone(), v).expect("same ring");
                }
                ComponentClass::Surface(p) => {
                    let genus = *p.domain();
                    let mut c = SurfaceClass::zero(genus);
                    match s.part {
                        Part::Point | Part::H0 => c.c0 = v.clone(),
                        Part::H1(i) => c.c1[i] = v.clone(),
                        Part::H2 => c.c2 = v.clone(),
                    }
                    p.add_term(s.exponent.clone(), &c).expect("same ring");
                }
            }
        }
        class
    }

    pub fn unit(&self, i: usize) -> EquivariantClass {
        let mut v = vec![Rational::zero(); self.len()];
        v[i] = Rational::one();
        self.class_from(&v)
    }

    pub fn label(&self, slot: &Slot) -> String {
        let genus = match self.catalogue.get(&slot.component) {
            Some(ComponentKind::Surface { genus }) => *genus as usize,
            _ => 0,
        };
        let part = match slot.part {
            Part::Point => String::new(),
            Part::H0 => ".1".into(),
            Part::H1(i) if i < genus => format!(".a{}", i + 1),
            Part::H1(i) => format!(".b{}", i - genus + 1),
            Part::H2 => ".[S]".into(),
        };
        let mono: String = if self.rank == 1 {
            match slot.exponent[0] {
                0 => String::new(),
                1 => "u".into(),
                k => format!("u^{k}"),
            }
        } else {
            slot.exponent
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("u{}", i + 1) } else { format!("u{}^{k}", i + 1) })
                .collect::<Vec<_>>()
                .join("*")
        };
        if mono.is_empty() {
            format!("{}{part}", slot.component)
        } else {
            format!("{}{part}*{mono}", slot.component)
        }
    }
}

// ---------------------------------------------------------------------------
// JSON documents

#[derive(Deserialize)]
enum ClassTag {
    #[serde(rename = "class")]
    Class,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDocument {
    #[allow(dead_code)]
    kind: ClassTag,
    #[serde(default)]
    graph: Option<String>,
    #[serde(default)]
    rank: Option<usize>,
    components: BTreeMap<String, BTreeMap<String, Value>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceEntry<T> {
    #[serde(default)]
    c0: Option<T>,
    #[serde(default)]
    c1: Option<Vec<T>>,
    #[serde(default)]
    c2: Option<T>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    exp: Vec<i32>,
    coeff: Rational,
}

fn schema<E: fmt::Display>(context: &str) -> impl Fn(E) -> Error + '_ {
    move |e| Error::Schema(format!("{context}: {e}"))
}

fn poly_from_terms(terms: Vec<TermDoc>, rank: usize, degree: i64, context: &str) -> Result<LaurentQ> {
    let mut p = LaurentQ::zero(rank, ());
    for t in terms {
        if t.exp.len() != rank || t.exp.iter().any(|&x| x < 0) {
            return Err(Error::Schema(format!(
                "{context}: exponent {:?} is not a nonnegative vector of length {rank}",
                t.exp
            )));
        }
        if t.coeff.is_zero() {
            continue;
        }
        if i64::from(total(&t.exp)) != degree {
            return Err(Error::Schema(format!(
                "{context}: monomial {:?} has the wrong degree for this entry",
                t.exp
            )));
        }
        p.add_term(t.exp, &t.coeff)?;
    }
    Ok(p)
}

fn terms_doc(p: &LaurentQ) -> Vec<TermDoc> {
    p.terms()
        .rev()
        .map(|(e, c)| TermDoc {
            exp: e.clone(),
            coeff: c.clone(),
        })
        .collect()
}

/// Metadata carried by a class document besides the class itself.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassHeader {
    pub graph: Option<String>,
}

impl EquivariantClass {
    /// Parse a class document against the components it must address.
    /// Documents without `"rank"` are circle classes with scalar entries.
    pub fn from_json(text: &str, catalogue: &Catalogue) -> Result<(Self, ClassHeader)> {
        let doc: ClassDocument = serde_json::from_str(text).map_err(Error::from_json)?;
        let circle_format = doc.rank.is_none();
        let rank = doc.rank.unwrap_or(1);
        if rank == 0 {
            return Err(Error::Schema("rank must be at least 1".into()));
        }
        if let Some(id) = catalogue.keys().find(|id| !doc.components.contains_key(*id)) {
            return Err(Error::Addressing(format!("component `{id}` has no class")));
        }
        let mut out = EquivariantClass::zero(catalogue, rank);
        for (id, entries) in doc.components {
            let kind = *catalogue
                .get(&id)
                .ok_or_else(|| Error::Addressing(format!("unknown component `{id}`")))?;
            let mut class = ComponentClass::zero(kind, rank);
            for (key, value) in entries {
                let k: u32 = key
                    .parse()
                    .map_err(|_| Error::Schema(format!("`{id}`: degree key `{key}` is not a nonnegative integer")))?;
                let ctx = format!("component `{id}` degree {k}");
                let piece = if circle_format {
                    parse_circle_entry(kind, k, value, &ctx)?
                } else {
                    parse_torus_entry(kind, rank, k, value, &ctx)?
                };
                class = class.try_add(&piece)?;
            }
            out.set(&id, class);
        }
        Ok((out, ClassHeader { graph: doc.graph }))
    }

    /// Serialize as a class document. Rank-1 classes use the scalar circle
    /// format; higher ranks list monomials as exponent vectors.
    pub fn to_json_value(&self, graph: Option<&str>) -> Value {
        let mut components = Map::new();
        for (id, c) in &self.components {
            let mut degrees = BTreeMap::new();
            if let Some(top) = c.max_degree() {
                for k in 0..=top {
                    let h = c.homogeneous(k);
                    if h.is_zero() {
                        continue;
                    }
                    degrees.insert(k, entry_value(&h, k, self.rank));
                }
            }
            let obj: Map<String, Value> =
                degrees.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            components.insert(id.clone(), Value::Object(obj));
        }
        let mut doc = Map::new();
        doc.insert("kind".into(), json!("class"));
        if let Some(g) = graph {
            doc.insert("graph".into(), json!(g));
        }
        if self.rank != 1 {
            doc.insert("rank".into(), json!(self.rank));
        }
        doc.insert("components".into(), Value::Object(components));
        Value::Object(doc)
    }

    pub fn to_json(&self, graph: Option<&str>) -> String {
        serde_json::to_string_pretty(&self.to_json_value(graph)).expect("class serializes")
    }
}

fn entry_value(h: &ComponentClass, k: u32, rank: usize) -> Value {
    let shift = |d: i64| -> Option<Exponent> { (d >= 0).then(|| vec![d as i32]) };
    match (h, rank) {
        (ComponentClass::Point(p), 1) => {
            let e = shift(k as i64 / 2).expect("even degree");
            json!(p.coefficient(&e))
        }
        (ComponentClass::Surface(p), 1) => {
            let pick = |d: i64, f: &dyn Fn(&SurfaceClass) -> Value, zero: Value| match shift(d) {
                Some(e) if (k as i64 - 2 * d) <= 2 => f(&p.coefficient(&e)),
                _ => zero,
            };
            let genus = *p.domain() as usize;
            let c0 = if k % 2 == 0 {
                pick(k as i64 / 2, &|c| json!(c.c0), json!(Rational::zero()))
            } else {
                json!(Rational::zero())
            };
            let c1 = if k % 2 == 1 {
                pick((k as i64 - 1) / 2, &|c| json!(c.c1), json!(vec![Rational::zero(); 2 * genus]))
            } else {
                json!(vec![Rational::zero(); 2 * genus])
            };
            let c2 = if k % 2 == 0 && k >= 2 {
                pick((k as i64 - 2) / 2, &|c| json!(c.c2), json!(Rational::zero()))
            } else {
                json!(Rational::zero())
            };
            json!({ "c0": c0, "c1": c1, "c2": c2 })
        }
        (ComponentClass::Point(p), _) => json!(terms_doc(p)),
        (ComponentClass::Surface(_), _) => {
            let c1: Vec<Value> = h.h1_parts().iter().map(|p| json!(terms_doc(p))).collect();
            json!({
                "c0": terms_doc(&h.h0_part()),
                "c1": c1,
                "c2": terms_doc(&h.h2_part()),
            })
        }
    }
}

fn parse_circle_entry(kind: ComponentKind, k: u32, value: Value, ctx: &str) -> Result<ComponentClass> {
    match kind {
        ComponentKind::Point => {
            let c: Rational = serde_json::from_value(value).map_err(schema(ctx))?;
            if c.is_zero() {
                return Ok(ComponentClass::zero(kind, 1));
            }
            if k % 2 == 1 {
                return Err(Error::Schema(format!("{ctx}: isolated points have no odd-degree classes")));
            }
            Ok(ComponentClass::Point(LaurentQ::univariate(k as i32 / 2, c)))
        }
        ComponentKind::Surface { genus } => {
            let e: SurfaceEntry<Rational> = serde_json::from_value(value).map_err(schema(ctx))?;
            let c0 = e.c0.unwrap_or_default();
            let c1 = e.c1.unwrap_or_else(|| vec![Rational::zero(); 2 * genus as usize]);
            let c2 = e.c2.unwrap_or_default();
            let s = SurfaceClass::new(genus, c0, c1, c2).map_err(schema(ctx))?;
            let even = k % 2 == 0;
            if (!even && (!s.c0.is_zero() || !s.c2.is_zero())) || (even && !s.h1_is_zero()) {
                return Err(Error::Schema(format!("{ctx}: entry does not have degree {k}")));
            }
            if k == 0 && !s.c2.is_zero() {
                return Err(Error::Schema(format!("{ctx}: [S] has degree 2")));
            }
            let mut p = LaurentSurface::zero(1, genus);
            if even {
                p.add_term(vec![k as i32 / 2], &s.graded_part(0))?;
                if k >= 2 {
                    p.add_term(vec![(k as i32 - 2) / 2], &s.graded_part(2))?;
                }
            } else {
                p.add_term(vec![(k as i32 - 1) / 2], &s.graded_part(1))?;
            }
            Ok(ComponentClass::Surface(p))
        }
    }
}

fn parse_torus_entry(
    kind: ComponentKind,
    rank: usize,
    k: u32,
    value: Value,
    ctx: &str,
) -> Result<ComponentClass> {
    let k = k as i64;
    let degree_for = |shift: i64| -> i64 {
        if (k - shift) >= 0 && (k - shift) % 2 == 0 {
            (k - shift) / 2
        } else {
            -1
        }
    };
    match kind {
        ComponentKind::Point => {
            let terms: Vec<TermDoc> = serde_json::from_value(value).map_err(schema(ctx))?;
            Ok(ComponentClass::Point(poly_from_terms(terms, rank, degree_for(0), ctx)?))
        }
        ComponentKind::Surface { genus } => {
            let e: SurfaceEntry<Vec<TermDoc>> = serde_json::from_value(value).map_err(schema(ctx))?;
            let g = genus as usize;
            let c0 = poly_from_terms(e.c0.unwrap_or_default(), rank, degree_for(0), ctx)?;
            let c1_docs = e.c1.unwrap_or_else(|| (0..2 * g).map(|_| Vec::new()).collect());
            if c1_docs.len() != 2 * g {
                return Err(Error::Schema(format!("{ctx}: c1 needs {} entries", 2 * g)));
            }
            let c1 = c1_docs
                .into_iter()
                .map(|t| poly_from_terms(t, rank, degree_for(1), ctx))
                .collect::<Result<Vec<_>>>()?;
            let c2 = poly_from_terms(e.c2.unwrap_or_default(), rank, degree_for(2), ctx)?;
            let mut p = LaurentSurface::zero(rank, genus);
            for (ex, c) in c0.terms() {
                p.add_term(ex.clone(), &SurfaceClass::scalar(genus, c.clone()))?;
            }
            for (i, poly) in c1.iter().enumerate() {
                for (ex, c) in poly.terms() {
                    let mut s = SurfaceClass::zero(genus);
                    s.c1[i] = c.clone();
                    p.add_term(ex.clone(), &s)?;
                }
            }
            for (ex, c) in c2.terms() {
                p.add_term(ex.clone(), &SurfaceClass::top(genus, c.clone()))?;
            }
            Ok(ComponentClass::Surface(p))
        }
    }
}
