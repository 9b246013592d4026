//! One function per subcommand, each mapping an input to an [`Outcome`].

use std::fs;
use std::path::Path;

use equicoh::class::DegreeLayout;
use equicoh::s1::{self, GradedBasis, MembershipDecision, SeriesKind};
use equicoh::xray::{self, XRay};
use equicoh::{
    parse_graph, parse_xray, validate_graph, validate_xray, DecoratedGraph, EquivariantClass,
    Error, LaurentQ,
};
use serde_json::{json, Value};

use crate::output::{table, Outcome, EXIT_OK, EXIT_SEMANTIC};

fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| Outcome::io(&path.display().to_string(), &e))
}

fn load_graph(path: &Path) -> Result<DecoratedGraph, Outcome> {
    let g = parse_graph(&read(path)?).map_err(Outcome::from)?;
    let report = validate_graph(&g);
    if !report.is_empty() {
        return Err(Error::Invalid(report).into());
    }
    Ok(g)
}

fn load_xray(path: &Path) -> Result<XRay, Outcome> {
    let x = parse_xray(&read(path)?).map_err(Outcome::from)?;
    let report = validate_xray(&x);
    if !report.is_empty() {
        return Err(Error::Invalid(report).into());
    }
    Ok(x)
}

fn load_class(path: &Path, catalogue: &equicoh::Catalogue) -> Result<EquivariantClass, Outcome> {
    let (class, _) = EquivariantClass::from_json(&read(path)?, catalogue).map_err(Outcome::from)?;
    Ok(class)
}

fn collapse(r: Result<Outcome, Outcome>) -> Outcome {
    r.unwrap_or_else(|e| e)
}

fn report_outcome(report: &equicoh::ValidationReport) -> Outcome {
    let code = if report.is_empty() { EXIT_OK } else { EXIT_SEMANTIC };
    Outcome::new(
        code,
        report.to_string(),
        serde_json::to_value(report).expect("json"),
    )
}

/// Validate a graph or an x-ray document, whichever it is.
pub fn validate(path: &Path) -> Outcome {
    collapse((|| {
        let text = read(path)?;
        let kind = serde_json::from_str::<Value>(&text)
            .ok()
            .and_then(|v| v.get("kind").and_then(Value::as_str).map(str::to_string));
        let report = if kind.as_deref() == Some("xray") {
            validate_xray(&parse_xray(&text).map_err(Outcome::from)?)
        } else {
            validate_graph(&parse_graph(&text).map_err(Outcome::from)?)
        };
        Ok(report_outcome(&report))
    })())
}

pub fn xray_validate(path: &Path) -> Outcome {
    collapse((|| Ok(report_outcome(&validate_xray(&parse_xray(&read(path)?).map_err(Outcome::from)?))))())
}

pub struct PoincareOptions {
    pub equivariant: bool,
    pub fixed: bool,
    pub max_degree: u32,
}

pub fn poincare(path: &Path, opts: &PoincareOptions) -> Outcome {
    collapse((|| {
        let g = load_graph(path)?;
        let which = if opts.fixed { SeriesKind::Fixed } else { SeriesKind::M };
        let series = if opts.equivariant {
            s1::equivariant_series(&g, which)
        } else {
            match which {
                SeriesKind::M => s1::poincare_m(&g),
                SeriesKind::Fixed => Ok(s1::poincare_fixed(&g)),
            }
        }
        .map_err(Outcome::from)?;
        let top = if opts.equivariant {
            opts.max_degree
        } else {
            opts.max_degree.min(series.numerator().len().saturating_sub(1) as u32)
        };
        let coefficients = series.coefficients(top).map_err(Outcome::from)?;
        let line: Vec<String> = coefficients.iter().map(u64::to_string).collect();
        let text = format!("P(t) = {series}\n{}", line.join(" "));
        let json = json!({
            "series": which,
            "equivariant": opts.equivariant,
            "numerator": series.numerator(),
            "denominator_exponent": series.denominator_exponent(),
            "coefficients": coefficients,
        });
        Ok(Outcome::new(EXIT_OK, text, json))
    })())
}

fn basis_outcome(basis: &GradedBasis, degree: u32, source: &str) -> Outcome {
    let layout: &DegreeLayout = &basis.layout;
    let header: Vec<String> = std::iter::once(String::new())
        .chain(layout.slots().iter().map(|s| layout.label(s)))
        .collect();
    let rows: Vec<Vec<String>> = basis
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            std::iter::once(format!("#{}", i + 1))
                .chain(r.iter().map(ToString::to_string))
                .collect()
        })
        .collect();
    let mut text = format!("degree {degree}: {} basis elements\n", basis.len());
    if !basis.is_empty() {
        text.push_str(&table(&header, &rows));
    }
    let json = Value::Array(
        basis
            .classes()
            .iter()
            .map(|c| c.to_json_value(Some(source)))
            .collect(),
    );
    Outcome::new(EXIT_OK, text, json)
}

pub fn basis(path: &Path, degree: u32, max_degree: u32) -> Outcome {
    collapse((|| {
        let g = load_graph(path)?;
        let b = s1::image_basis_with_cutoff(&g, degree, max_degree).map_err(Outcome::from)?;
        Ok(basis_outcome(&b, degree, &path.display().to_string()))
    })())
}

pub fn xray_basis(path: &Path, degree: u32, max_degree: u32) -> Outcome {
    collapse((|| {
        let x = load_xray(path)?;
        let b = xray::image_basis_xray_with_cutoff(&x, degree, max_degree).map_err(Outcome::from)?;
        Ok(basis_outcome(&b, degree, &path.display().to_string()))
    })())
}

fn decision_outcome(d: &MembershipDecision) -> Outcome {
    let code = if d.is_member() { EXIT_OK } else { EXIT_SEMANTIC };
    Outcome::new(code, d.to_string(), serde_json::to_value(d).expect("json"))
}

pub fn check(graph: &Path, class: &Path, lambda: Option<&[i64]>) -> Outcome {
    collapse((|| {
        let g = load_graph(graph)?;
        let alpha = load_class(class, &g.catalogue())?;
        let d = match lambda {
            Some(l) => equicoh::check_membership_t(&g, l, &alpha),
            None => s1::check_membership(&g, &alpha),
        }
        .map_err(Outcome::from)?;
        Ok(decision_outcome(&d))
    })())
}

pub fn xray_check(path: &Path, class: &Path) -> Outcome {
    collapse((|| {
        let x = load_xray(path)?;
        let alpha = load_class(class, &x.catalogue())?;
        let d = xray::check_membership_xray(&x, &alpha).map_err(Outcome::from)?;
        Ok(decision_outcome(&d))
    })())
}

fn laurent_terms(p: &LaurentQ) -> Value {
    Value::Array(
        p.terms()
            .rev()
            .map(|(e, c)| json!({"power": e[0], "coeff": c}))
            .collect(),
    )
}

/// Prints the localization; negative powers are flagged, not failed.
pub fn localize(graph: &Path, class: &Path) -> Outcome {
    collapse((|| {
        let g = load_graph(graph)?;
        let alpha = load_class(class, &g.catalogue())?;
        let loc = s1::localize(&g, &alpha).map_err(Outcome::from)?;
        let polynomial = loc.is_polynomial();
        let text = if polynomial {
            format!("{loc}\npolynomial")
        } else {
            format!("{loc}\nnegative powers: {}", loc.principal_part())
        };
        let json = json!({
            "localization": loc.to_string(),
            "terms": laurent_terms(&loc),
            "polynomial": polynomial,
        });
        Ok(Outcome::new(EXIT_OK, text, json))
    })())
}

pub fn euler(path: &Path, component: Option<&str>, inverse: bool) -> Outcome {
    collapse((|| {
        let g = load_graph(path)?;
        let ids: Vec<String> = match component {
            Some(id) => vec![id.to_string()],
            None => g.components().map(|c| c.id().to_string()).collect(),
        };
        let mut lines = Vec::new();
        let mut entries = Vec::new();
        for id in &ids {
            let e = s1::euler_class(&g, id).map_err(Outcome::from)?;
            let inv = s1::inverse_euler(&g, id).map_err(Outcome::from)?;
            let shown = if inverse { inv.to_string() } else { e.class.to_string() };
            lines.push(if component.is_some() { shown } else { format!("{id}: {shown}") });
            entries.push(json!({
                "component": id,
                "euler": e.class.to_string(),
                "inverse": inv.to_string(),
            }));
        }
        let json = if component.is_some() {
            entries.pop().expect("one entry")
        } else {
            Value::Array(entries)
        };
        Ok(Outcome::new(EXIT_OK, lines.join("\n"), json))
    })())
}
