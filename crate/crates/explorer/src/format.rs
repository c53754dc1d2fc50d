//! JSON file formats: data, dominant weights, rigged configurations, crystal
//! nodes, graphs and check reports.
//!
//! Objects are written with keys in a fixed order and indices in datum
//! order, so an export is a canonical serialization and `import ∘ export`
//! reproduces it byte for byte.

use borcherds_rc::checks::CheckReport;
use borcherds_rc::crystal::CrystalNode;
use borcherds_rc::graph::{CrystalGraph, Edge, GraphModel, Operator};
use borcherds_rc::rigged::{RcError, RiggedPartition, Row};
use borcherds_rc::{BorcherdsCartanDatum, CartanError, DominantWeight, Index, RiggedConfiguration};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Rc(#[from] RcError),
}

fn schema(path: &str, message: impl Into<String>) -> FormatError {
    FormatError::Schema { path: path.into(), message: message.into() }
}

pub fn parse(text: &str) -> Result<Value, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>, FormatError> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn field<'v>(m: &'v Map<String, Value>, key: &str, path: &str) -> Result<&'v Value, FormatError> {
    m.get(key).ok_or_else(|| schema(path, format!("missing field {:?}", key)))
}

fn array<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn int(v: &Value, path: &str) -> Result<i64, FormatError> {
    v.as_i64().ok_or_else(|| schema(path, "expected an integer"))
}

fn uint(v: &Value, path: &str) -> Result<u64, FormatError> {
    v.as_u64().ok_or_else(|| schema(path, "expected a nonnegative integer"))
}

fn string<'v>(v: &'v Value, path: &str) -> Result<&'v str, FormatError> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

pub fn datum_to_json(d: &BorcherdsCartanDatum) -> Value {
    json!({ "indices": d.labels(), "cartan": d.matrix() })
}

pub fn datum_from_json(v: &Value) -> Result<BorcherdsCartanDatum, FormatError> {
    let m = object(v, "datum")?;
    let labels = array(field(m, "indices", "datum")?, "datum.indices")?
        .iter()
        .enumerate()
        .map(|(k, l)| string(l, &format!("datum.indices[{}]", k)).map(String::from))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = array(field(m, "cartan", "datum")?, "datum.cartan")?
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let path = format!("datum.cartan[{}]", r);
            array(row, &path)?
                .iter()
                .enumerate()
                .map(|(c, x)| int(x, &format!("{}[{}]", path, c)))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BorcherdsCartanDatum::new(&labels, &rows)?)
}

pub fn read_datum(text: &str) -> Result<BorcherdsCartanDatum, FormatError> {
    datum_from_json(&parse(text)?)
}

pub fn weight_to_json(d: &BorcherdsCartanDatum, w: &DominantWeight) -> Value {
    let pairings: Map<String, Value> = d.indices().map(|a| (d.label(a).to_string(), json!(w.pairing(a)))).collect();
    json!({ "pairings": pairings })
}

/// Absent labels pair to `0`.
pub fn weight_from_json(d: &BorcherdsCartanDatum, v: &Value) -> Result<DominantWeight, FormatError> {
    let m = object(field(object(v, "weight")?, "pairings", "weight")?, "weight.pairings")?;
    let mut pairings = vec![0; d.rank()];
    for (label, x) in m {
        let a = d.index(label)?;
        pairings[a.position()] = int(x, &format!("weight.pairings.{}", label))?;
    }
    Ok(DominantWeight::new(d, pairings)?)
}

pub fn read_weight(d: &BorcherdsCartanDatum, text: &str) -> Result<DominantWeight, FormatError> {
    weight_from_json(d, &parse(text)?)
}

pub fn rc_to_json(d: &BorcherdsCartanDatum, rc: &RiggedConfiguration) -> Value {
    let parts: Map<String, Value> = d
        .indices()
        .map(|a| {
            let rows: Vec<Value> = rc.part(a).rows().iter().map(|r| json!([r.length, r.rigging])).collect();
            (d.label(a).to_string(), Value::Array(rows))
        })
        .collect();
    json!({ "parts": parts })
}

/// Rows may be listed in any order; absent labels are empty partitions.
pub fn rc_from_json(d: &BorcherdsCartanDatum, v: &Value) -> Result<RiggedConfiguration, FormatError> {
    let m = object(field(object(v, "rc")?, "parts", "rc")?, "rc.parts")?;
    let mut parts: Vec<Vec<Row>> = vec![Vec::new(); d.rank()];
    for (label, rows) in m {
        let a = d.index(label)?;
        for (k, row) in array(rows, &format!("rc.parts.{}", label))?.iter().enumerate() {
            let path = format!("rc.parts.{}[{}]", label, k);
            match array(row, &path)?.as_slice() {
                [len, rig] => {
                    let len = u32::try_from(uint(len, &path)?).map_err(|_| schema(&path, "row too long"))?;
                    parts[a.position()].push(Row::new(len, int(rig, &path)?));
                }
                _ => return Err(schema(&path, "expected [length, rigging]")),
            }
        }
    }
    let parts = parts.into_iter().map(RiggedPartition::new).collect::<Result<Vec<_>, _>>()?;
    Ok(RiggedConfiguration::from_parts(d, parts)?)
}

pub fn read_rc(d: &BorcherdsCartanDatum, text: &str) -> Result<RiggedConfiguration, FormatError> {
    rc_from_json(d, &parse(text)?)
}

pub fn node_to_json(d: &BorcherdsCartanDatum, node: &CrystalNode) -> Value {
    match node {
        CrystalNode::Rc(rc) => json!({ "rc": rc_to_json(d, rc) }),
        CrystalNode::TLambda(l) => json!({ "t": weight_to_json(d, l) }),
        CrystalNode::C => json!("c"),
        CrystalNode::Z { index, n } => json!({ "z": { "index": d.label(*index), "n": n } }),
        CrystalNode::Tensor(l, r) => json!({ "tensor": [node_to_json(d, l), node_to_json(d, r)] }),
    }
}

pub fn node_from_json(d: &BorcherdsCartanDatum, v: &Value) -> Result<CrystalNode, FormatError> {
    if v.as_str() == Some("c") {
        return Ok(CrystalNode::C);
    }
    let m = object(v, "node")?;
    let (tag, body) = match m.iter().next() {
        Some(kv) if m.len() == 1 => kv,
        _ => return Err(schema("node", "expected exactly one of rc, t, c, z, tensor")),
    };
    Ok(match tag.as_str() {
        "rc" => CrystalNode::Rc(rc_from_json(d, body)?),
        "t" => CrystalNode::TLambda(weight_from_json(d, body)?),
        "z" => {
            let z = object(body, "node.z")?;
            let index = d.index(string(field(z, "index", "node.z")?, "node.z.index")?)?;
            CrystalNode::Z { index, n: uint(field(z, "n", "node.z")?, "node.z.n")? }
        }
        "tensor" => match array(body, "node.tensor")?.as_slice() {
            [l, r] => CrystalNode::tensor(node_from_json(d, l)?, node_from_json(d, r)?),
            _ => return Err(schema("node.tensor", "expected two factors")),
        },
        other => return Err(schema("node", format!("unknown node kind {:?}", other))),
    })
}

pub fn graph_to_json(g: &CrystalGraph) -> Value {
    let d = &g.datum;
    let mut m = Map::new();
    m.insert("datum".into(), datum_to_json(d));
    m.insert("model".into(), json!(g.model.name()));
    if let Some(l) = g.model.lambda() {
        m.insert("lambda".into(), weight_to_json(d, l));
    }
    m.insert("depth".into(), json!(g.depth));
    let nodes: Vec<Value> =
        g.nodes.iter().enumerate().map(|(k, n)| json!({ "id": k, "node": node_to_json(d, n) })).collect();
    m.insert("nodes".into(), Value::Array(nodes));
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|e| json!({ "src": e.src, "dst": e.dst, "index": d.label(e.index), "op": e.op.symbol() }))
        .collect();
    m.insert("edges".into(), Value::Array(edges));
    Value::Object(m)
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn export_json(g: &CrystalGraph) -> String {
    to_text(&graph_to_json(g))
}

pub fn import_json(text: &str) -> Result<CrystalGraph, FormatError> {
    let v = parse(text)?;
    let m = object(&v, "graph")?;
    let datum = datum_from_json(field(m, "datum", "graph")?)?;
    let lambda = || -> Result<DominantWeight, FormatError> { weight_from_json(&datum, field(m, "lambda", "graph")?) };
    let model = match string(field(m, "model", "graph")?, "graph.model")? {
        "infinity" => GraphModel::Infinity,
        "star" => GraphModel::Star,
        "lambda" => GraphModel::Lambda(lambda()?),
        "cutout" => GraphModel::Cutout(lambda()?),
        other => return Err(schema("graph.model", format!("unknown model {:?}", other))),
    };
    let depth = uint(field(m, "depth", "graph")?, "graph.depth")? as usize;

    let mut nodes = Vec::new();
    for (k, n) in array(field(m, "nodes", "graph")?, "graph.nodes")?.iter().enumerate() {
        let path = format!("graph.nodes[{}]", k);
        let nm = object(n, &path)?;
        if uint(field(nm, "id", &path)?, &path)? != k as u64 {
            return Err(schema(&path, "ids must be 0, 1, 2, ... in order"));
        }
        nodes.push(node_from_json(&datum, field(nm, "node", &path)?)?);
    }
    let mut edges = Vec::new();
    for (k, e) in array(field(m, "edges", "graph")?, "graph.edges")?.iter().enumerate() {
        let path = format!("graph.edges[{}]", k);
        let em = object(e, &path)?;
        let id = |key: &str| -> Result<usize, FormatError> {
            let x = uint(field(em, key, &path)?, &path)? as usize;
            if x < nodes.len() {
                Ok(x)
            } else {
                Err(schema(&path, format!("{} {} is not a node id", key, x)))
            }
        };
        let index: Index = datum.index(string(field(em, "index", &path)?, &path)?)?;
        let op_text = string(field(em, "op", &path)?, &path)?;
        let op = Operator::from_symbol(op_text)
            .filter(|o| matches!(o, Operator::F | Operator::FStar | Operator::FPrime))
            .ok_or_else(|| schema(&path, format!("unknown operator {:?}", op_text)))?;
        edges.push(Edge { src: id("src")?, dst: id("dst")?, index, op });
    }
    Ok(CrystalGraph { datum, model, depth, nodes, edges })
}

pub fn report_to_json(r: &CheckReport) -> Value {
    let counterexample = match &r.counterexample {
        Some(c) => json!({ "element": c.element, "indices": c.indices }),
        None => Value::Null,
    };
    json!({
        "condition": r.condition,
        "passed": r.passed(),
        "checked": r.checked,
        "failures": r.failures,
        "interior_depth": r.interior_depth,
        "counterexample": counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d2() -> BorcherdsCartanDatum {
        read_datum(r#"{"indices": ["1","2"], "cartan": [[-2,-1],[-1,-2]]}"#).unwrap()
    }

    #[test]
    fn rc_round_trip_and_any_row_order() {
        let d = d2();
        let rc = read_rc(&d, r#"{"parts": {"1": [[1,1],[1,5],[1,3]], "2": [[1,4]]}}"#).unwrap();
        assert_eq!(rc.part(d.index("1").unwrap()).riggings().collect::<Vec<_>>(), vec![5, 3, 1]);
        assert_eq!(rc_from_json(&d, &rc_to_json(&d, &rc)).unwrap(), rc);
    }

    #[test]
    fn parse_errors_carry_position() {
        match read_datum("{\n  \"indices\": [\"1\",\n}") {
            Err(FormatError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn invalid_datum_names_the_entry() {
        let e = read_datum(r#"{"indices": ["x","y"], "cartan": [[2,-1],[0,2]]}"#).unwrap_err();
        assert!(e.to_string().contains("A[x,y]"), "{}", e);
    }

    #[test]
    fn weights() {
        let d = d2();
        let w = read_weight(&d, r#"{"pairings": {"2": 3}}"#).unwrap();
        assert_eq!(w.pairings(), &[0, 3]);
        assert!(read_weight(&d, r#"{"pairings": {"3": 1}}"#).is_err());
        assert!(read_weight(&d, r#"{"pairings": {"1": -1}}"#).is_err());
    }

    #[test]
    fn nodes_round_trip() {
        let d = d2();
        let a = d.index("2").unwrap();
        let n = CrystalNode::tensor_all([
            CrystalNode::Rc(RiggedConfiguration::empty(&d).f(&d, a)),
            CrystalNode::TLambda(DominantWeight::fundamental(&d, a)),
            CrystalNode::C,
            CrystalNode::Z { index: a, n: 2 },
        ])
        .unwrap();
        assert_eq!(node_from_json(&d, &node_to_json(&d, &n)).unwrap(), n);
    }
}
