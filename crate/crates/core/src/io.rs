//! JSON encodings. Rationals travel as strings `"p/q"` or `"p"`, negative
//! infinity as `"-inf"`. Output goes through `serde_json::Value`, whose maps
//! keep keys sorted, so equal objects serialize to equal bytes.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::enumeration::{CrossRatio, FloorDiagram, TropicalTree};
use crate::jacobian::{JacobianPoint, PeriodMatrix};
use crate::metricgraph::{Divisor, Edge, GraphPoint, Length, MetricGraph, RationalFunction};
use crate::planecurve::{CurveEdge, EdgeKind, IntersectionReport, PlaneTropicalCurve, Point};
use crate::polynomial::{Monomial, TropicalPolynomial};
use crate::rational::{format_rational, parse_rational};
use crate::{Error, Rational, Result, TropicalScalar};

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
}

fn rat(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

fn point(p: &Point) -> Value {
    json!([rat(&p[0]), rat(&p[1])])
}

fn parse_point(p: &[String; 2]) -> Result<Point> {
    Ok([parse_rational(&p[0])?, parse_rational(&p[1])?])
}

/// Serializes with sorted keys and a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn scalar_to_string(s: &TropicalScalar) -> String {
    s.to_string()
}

// polynomials

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exp: Vec<i64>,
    coeff: String,
}

pub fn polynomial_from_json(text: &str) -> Result<TropicalPolynomial> {
    let p: PolyJson = parse(text)?;
    let terms = p
        .terms
        .into_iter()
        .map(|t| Ok(Monomial::new(t.exp, parse_rational(&t.coeff)?)))
        .collect::<Result<Vec<_>>>()?;
    TropicalPolynomial::new(p.n, terms)
}

pub fn polynomial_to_json(f: &TropicalPolynomial) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .map(|t| json!({"exp": t.exponent, "coeff": rat(&t.coefficient)}))
        .collect();
    json!({"n": f.dimension(), "terms": terms})
}

// plane curves

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveJson {
    vertices: Vec<[String; 2]>,
    edges: Vec<CurveEdgeJson>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum CurveEdgeJson {
    #[serde(rename = "seg")]
    Seg { a: usize, b: usize, w: u64 },
    #[serde(rename = "ray")]
    Ray { v: usize, dir: [i64; 2], w: u64 },
}

pub fn curve_from_json(text: &str) -> Result<PlaneTropicalCurve> {
    let c: CurveJson = parse(text)?;
    let vertices = c.vertices.iter().map(parse_point).collect::<Result<Vec<_>>>()?;
    let edges = c
        .edges
        .into_iter()
        .map(|e| match e {
            CurveEdgeJson::Seg { a, b, w } => CurveEdge::segment(a, b, w),
            CurveEdgeJson::Ray { v, dir, w } => CurveEdge::ray(v, dir, w),
        })
        .collect();
    PlaneTropicalCurve::new(vertices, edges)
}

/// Encodes the canonical form of `c`.
pub fn curve_to_json(c: &PlaneTropicalCurve) -> Value {
    let c = c.canonical();
    let vertices: Vec<Value> = c.vertices().iter().map(point).collect();
    let edges: Vec<Value> = c
        .edges()
        .iter()
        .map(|e| match &e.kind {
            EdgeKind::Segment { a, b } => json!({"kind": "seg", "a": a, "b": b, "w": e.weight}),
            EdgeKind::Ray { v, dir } => json!({"kind": "ray", "v": v, "dir": dir, "w": e.weight}),
        })
        .collect();
    json!({"vertices": vertices, "edges": edges})
}

pub fn report_to_json(r: &IntersectionReport) -> Value {
    let points: Vec<Value> = r
        .points
        .iter()
        .map(|p| json!({"point": point(&p.point), "multiplicity": p.multiplicity}))
        .collect();
    json!({
        "points": points,
        "total": r.total,
        "perturbed": r.perturbed,
        "translate": point(&r.translate),
    })
}

// metric graphs

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<GraphEdgeJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphEdgeJson {
    u: String,
    v: String,
    len: String,
}

pub fn graph_from_json(text: &str) -> Result<MetricGraph> {
    let g: GraphJson = parse(text)?;
    let id = |name: &str| {
        g.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Graph(format!("unknown vertex {name:?}")))
    };
    let edges = g
        .edges
        .iter()
        .map(|e| {
            let (u, v) = (id(&e.u)?, id(&e.v)?);
            Ok(if e.len == "inf" {
                Edge::infinite(u, v)
            } else {
                Edge::finite(u, v, parse_rational(&e.len)?)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    MetricGraph::new(g.vertices.clone(), edges)
}

pub fn graph_to_json(g: &MetricGraph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| {
            let len = match &e.length {
                Length::Finite(l) => rat(l),
                Length::Infinite => Value::String("inf".into()),
            };
            json!({"u": g.name(e.u), "v": g.name(e.v), "len": len})
        })
        .collect();
    json!({"vertices": g.names(), "edges": edges})
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DivisorJson {
    entries: Vec<EntryJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryJson {
    at: AtJson,
    c: i64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AtJson {
    Vertex(String),
    Edge { edge: usize, offset: String },
}

fn graph_point(g: &MetricGraph, at: &AtJson) -> Result<GraphPoint> {
    match at {
        AtJson::Vertex(name) => g
            .vertex_id(name)
            .map(GraphPoint::Vertex)
            .ok_or_else(|| Error::Graph(format!("unknown vertex {name:?}"))),
        AtJson::Edge { edge, offset } => g.point_on_edge(*edge, parse_rational(offset)?),
    }
}

pub fn divisor_from_json(g: &MetricGraph, text: &str) -> Result<Divisor> {
    let d: DivisorJson = parse(text)?;
    let mut out = Divisor::zero();
    for e in &d.entries {
        out.add_at(graph_point(g, &e.at)?, e.c);
    }
    Ok(out)
}

pub fn divisor_to_json(g: &MetricGraph, d: &Divisor) -> Value {
    let entries: Vec<Value> = d
        .iter()
        .map(|(p, c)| {
            let at = match p {
                GraphPoint::Vertex(v) => Value::String(g.name(*v).to_string()),
                GraphPoint::OnEdge { edge, offset } => json!({"edge": edge, "offset": rat(offset)}),
            };
            json!({"at": at, "c": c})
        })
        .collect();
    json!({"entries": entries})
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionJson {
    values: std::collections::BTreeMap<String, String>,
    #[serde(default)]
    breakpoints: Vec<BreakpointJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BreakpointJson {
    edge: usize,
    offset: String,
    value: String,
}

/// `{"values": {vertex: "p/q"}, "breakpoints": [{"edge", "offset", "value"}]}`;
/// breakpoints may come in any order.
pub fn function_from_json(g: &MetricGraph, text: &str) -> Result<RationalFunction> {
    let f: FunctionJson = parse(text)?;
    let mut values = vec![None; g.vertex_count()];
    for (name, value) in &f.values {
        let v = g
            .vertex_id(name)
            .ok_or_else(|| Error::Function(format!("unknown vertex {name:?}")))?;
        values[v] = Some(parse_rational(value)?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| Error::Function(format!("no value at vertex {:?}", g.name(v)))))
        .collect::<Result<Vec<_>>>()?;
    let mut bps: Vec<Vec<(Rational, Rational)>> = vec![Vec::new(); g.edges().len()];
    for b in &f.breakpoints {
        let slot = bps
            .get_mut(b.edge)
            .ok_or_else(|| Error::Function(format!("no edge {}", b.edge)))?;
        slot.push((parse_rational(&b.offset)?, parse_rational(&b.value)?));
    }
    for slot in &mut bps {
        slot.sort();
    }
    RationalFunction::new(g, values, bps)
}

pub fn period_matrix_to_json(q: &PeriodMatrix) -> Value {
    Value::Array(
        q.entries
            .iter()
            .map(|row| Value::Array(row.iter().map(rat).collect()))
            .collect(),
    )
}

pub fn jacobian_point_to_json(p: &JacobianPoint) -> Value {
    json!({"coords": p.coords.iter().map(rat).collect::<Vec<_>>()})
}

// enumeration

pub fn floor_diagram_to_json(fd: &FloorDiagram) -> Value {
    let edges: Vec<Value> = fd
        .edges()
        .iter()
        .map(|e| json!({"from": e.from + 1, "to": e.to + 1, "w": e.weight}))
        .collect();
    json!({
        "floors": fd.degree(),
        "edges": edges,
        "markings_count": fd.markings_count().to_string(),
        "multiplicity": fd.multiplicity().to_string(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeJson {
    vertices: usize,
    #[serde(default)]
    edges: Vec<TreeEdgeJson>,
    leaves: Vec<LeafJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeEdgeJson {
    u: usize,
    v: usize,
    len: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LeafJson {
    label: u32,
    at: usize,
}

/// `{"vertices": n, "edges": [{"u", "v", "len"}], "leaves": [{"label", "at"}]}`.
pub fn tree_from_json(text: &str) -> Result<TropicalTree> {
    let t: TreeJson = parse(text)?;
    let edges = t
        .edges
        .iter()
        .map(|e| Ok((e.u, e.v, parse_rational(&e.len)?)))
        .collect::<Result<Vec<_>>>()?;
    let leaves = t.leaves.iter().map(|l| (l.label, l.at)).collect();
    TropicalTree::new(t.vertices, edges, leaves)
}

pub fn cross_ratios_to_json(crs: &[CrossRatio]) -> Value {
    Value::Array(
        crs.iter()
            .map(|c| json!({"pairs": [[c.pairs[0].0, c.pairs[0].1], [c.pairs[1].0, c.pairs[1].1]], "value": rat(&c.value)}))
            .collect(),
    )
}

/// Parses `"a,b,..."` into rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|x| parse_rational(x.trim())).collect()
}
