//! Text and JSON surfaces: element and word literals, network literals
//! (1-based vertex labels, matching the usual drawings), JSON forms, and DOT
//! export. Internal indices are 0-based everywhere; only the text literals
//! shift by one.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::green::{GreenContext, GreenElement, Letter};
use crate::kneser::{k_subsets, kneser_graph};
use crate::monoid::{free_monoid, MonoidHandle, Value, VarietyTag};
use crate::network::{NetworkElement, VarietalModel};

/// Parses a monoid name as used on the command line: `bool`, `nat`, `band`,
/// or `free:<alphabet>`.
pub fn parse_monoid_name(s: &str) -> Result<MonoidHandle> {
    match s {
        "bool" => Ok(crate::monoid::boolean_monoid()),
        "nat" => Ok(crate::monoid::nat_monoid()),
        "band" => Ok(crate::monoid::path_band_monoid()),
        other => {
            if let Some(alphabet) = other.strip_prefix("free:") {
                free_monoid(alphabet)
            } else {
                Err(Error::ValueNotInMonoid {
                    value: other.to_string(),
                    monoid: "one of bool, nat, band, free:<alphabet>".to_string(),
                })
            }
        }
    }
}

/// Splits on `sep` at the top level, ignoring separators inside quoted
/// words.
fn split_outside_quotes(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut in_quote = false;
    for c in s.chars() {
        match c {
            '"' => {
                in_quote = !in_quote;
                current.push(c);
            }
            c if c == sep && !in_quote => {
                out.push(current.trim().to_string());
                current = String::new();
            }
            c => current.push(c),
        }
    }
    out.push(current.trim().to_string());
    out
}

/// Parses a word literal `v<k>:<elem> * ... * v<k>:<elem>` (components are
/// 0-based); `1` is the empty word.
pub fn parse_word_literal(ctx: &Arc<GreenContext>, s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    let mut word = Vec::new();
    for part in split_outside_quotes(s, '*') {
        let bad = || Error::MismatchedContexts(format!("cannot parse letter {part:?}"));
        let rest = part.strip_prefix('v').ok_or_else(bad)?;
        let colon = rest.find(':').ok_or_else(bad)?;
        let component: usize = rest[..colon].trim().parse().map_err(|_| bad())?;
        if component >= ctx.graph().n_vertices() {
            return Err(Error::UnknownComponent {
                index: component,
                n_vertices: ctx.graph().n_vertices(),
            });
        }
        let value = ctx.component(component).parse_element(rest[colon + 1..].trim())?;
        word.push(Letter::new(component, value));
    }
    Ok(word)
}

pub fn format_word_literal(ctx: &GreenContext, word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter()
        .map(|l| {
            format!(
                "v{}:{}",
                l.component,
                ctx.component(l.component).format_element(&l.value)
            )
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Parses a network literal `e(i,j)=<elem> * ...` with 1-based vertex
/// labels; `1` is the empty network.
pub fn parse_network_literal(
    monoid: &MonoidHandle,
    n: usize,
    s: &str,
) -> Result<Vec<(usize, usize, Value)>> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    let mut letters = Vec::new();
    for part in split_outside_quotes(s, '*') {
        let bad = || Error::MismatchedContexts(format!("cannot parse edge letter {part:?}"));
        let rest = part.strip_prefix("e(").ok_or_else(bad)?;
        let close = rest.find(')').ok_or_else(bad)?;
        let mut endpoints = rest[..close].split(',');
        let u: usize = endpoints
            .next()
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let v: usize = endpoints
            .next()
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        if endpoints.next().is_some() {
            return Err(bad());
        }
        if u == 0 || v == 0 || u > n || v > n || u == v {
            return Err(Error::InvalidGraph(format!(
                "edge ({u},{v}) is not an edge of the complete graph on vertices 1..{n}"
            )));
        }
        let after = rest[close + 1..].trim();
        let elem = after.strip_prefix('=').ok_or_else(bad)?;
        let value = monoid.parse_element(elem.trim())?;
        letters.push((u - 1, v - 1, value));
    }
    Ok(letters)
}

pub fn format_network_literal(monoid: &MonoidHandle, g: &NetworkElement) -> String {
    let letters = g.edge_letters();
    if letters.is_empty() {
        return "1".to_string();
    }
    letters
        .iter()
        .map(|(u, v, value)| format!("e({},{})={}", u + 1, v + 1, monoid.format_element(value)))
        .collect::<Vec<_>>()
        .join(" * ")
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        GraphJson {
            n: g.n_vertices(),
            edges: g.edges().collect(),
        }
    }

    pub fn to_graph(&self) -> Result<SimpleGraph> {
        SimpleGraph::new(self.n, self.edges.iter().copied())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GreenLetterJson {
    pub component: usize,
    pub value: String,
}

/// JSON form of a Green element: the index graph, the variety, and the
/// canonical word. The component monoids are supplied externally.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GreenJson {
    pub graph: GraphJson,
    pub variety: String,
    pub word: Vec<GreenLetterJson>,
}

pub fn green_to_json(x: &GreenElement) -> GreenJson {
    let ctx = x.context();
    GreenJson {
        graph: GraphJson::from_graph(ctx.graph()),
        variety: ctx.variety().to_string(),
        word: x
            .word()
            .iter()
            .map(|l| GreenLetterJson {
                component: l.component,
                value: ctx.component(l.component).format_element(&l.value),
            })
            .collect(),
    }
}

pub fn green_from_json(json: &GreenJson, monoid: &MonoidHandle) -> Result<GreenElement> {
    let variety = VarietyTag::parse(&json.variety).ok_or_else(|| {
        Error::VarietyViolation(format!("unknown variety {:?}", json.variety))
    })?;
    let ctx = GreenContext::uniform(json.graph.to_graph()?, monoid, variety)?;
    let word = json
        .word
        .iter()
        .map(|l| {
            if l.component >= ctx.graph().n_vertices() {
                return Err(Error::UnknownComponent {
                    index: l.component,
                    n_vertices: ctx.graph().n_vertices(),
                });
            }
            Ok(Letter::new(
                l.component,
                ctx.component(l.component).parse_element(&l.value)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    ctx.normalize(word)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkLetterJson {
    pub u: usize,
    pub v: usize,
    pub value: String,
}

/// JSON form of a varietal network. Vertices are 0-based here.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkJson {
    pub n: usize,
    pub monoid: String,
    pub variety: String,
    pub word: Vec<NetworkLetterJson>,
}

pub fn network_to_json(model: &VarietalModel, g: &NetworkElement) -> NetworkJson {
    NetworkJson {
        n: g.n(),
        monoid: model.monoid().name(),
        variety: model.variety().to_string(),
        word: g
            .edge_letters()
            .iter()
            .map(|(u, v, value)| NetworkLetterJson {
                u: *u,
                v: *v,
                value: model.monoid().format_element(value),
            })
            .collect(),
    }
}

pub fn network_from_json(json: &NetworkJson) -> Result<(VarietalModel, NetworkElement)> {
    let monoid = parse_monoid_name(&json.monoid)?;
    let variety = VarietyTag::parse(&json.variety).ok_or_else(|| {
        Error::VarietyViolation(format!("unknown variety {:?}", json.variety))
    })?;
    let model = VarietalModel::new(monoid.clone(), variety)?;
    let letters = json
        .word
        .iter()
        .map(|l| Ok((l.u, l.v, monoid.parse_element(&l.value)?)))
        .collect::<Result<Vec<_>>>()?;
    let g = model.network(json.n, &letters)?;
    Ok((model, g))
}

/// DOT for a Kneser graph, vertices labeled by their subsets (1-based), e.g.
/// `12` for the edge {1,2}.
pub fn kneser_dot(n: usize, k: usize) -> String {
    let labels: Vec<String> = k_subsets(n, k).iter().map(|s| s.label()).collect();
    kneser_graph(n, k).to_dot(&format!("kneser_{n}_{k}"), Some(&labels))
}

/// DOT for a network: one edge statement per letter in canonical word order
/// (a multigraph for Mon and GMon), labels carrying the position and value.
pub fn network_dot(model: &VarietalModel, g: &NetworkElement) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "graph network {{");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", v + 1);
    }
    for (pos, (u, v, value)) in g.edge_letters().iter().enumerate() {
        let label = model.monoid().format_element(value).replace('"', "\\\"");
        match model.variety() {
            VarietyTag::CMon => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{label}\"];");
            }
            _ => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{}:{label}\"];", pos + 1);
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Metric-space description inside scenario files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceJson {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<f64>>>,
}

/// One positioned state of a range-limited scenario. Points are `[x]` on the
/// line, `[x, y]` in the plane, or `[i]` into a matrix space.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RangeStateJson {
    pub graph: GraphJson,
    pub points: Vec<Vec<f64>>,
}

/// One operad operation inside a scenario: a 0-based permutation mapping,
/// the input arities, and a network literal over the total vertex count.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperationJson {
    pub perm: Vec<usize>,
    pub inputs: Vec<usize>,
    pub network: String,
}

/// A scenario file: either a range-limited run (`space` and `L` present) or
/// a bounded-degree run (`k` present). Operations apply in sequence: the
/// first consumes the listed states, each later one consumes the previous
/// result.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceJson>,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub max_range: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub states: serde_json::Value,
    pub ops: Vec<OperationJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::boolean_monoid;

    #[test]
    fn network_literal_round_trip() {
        let model = VarietalModel::new(boolean_monoid(), VarietyTag::Mon).unwrap();
        let monoid = boolean_monoid();
        for s in ["e(1,2)=T * e(3,4)=T", "1", "e(2,3)=T"] {
            let letters = parse_network_literal(&monoid, 4, s).unwrap();
            let g = model.network(4, &letters).unwrap();
            let printed = format_network_literal(&monoid, &g);
            let reparsed = model
                .network(4, &parse_network_literal(&monoid, 4, &printed).unwrap())
                .unwrap();
            assert!(crate::network::NetworkModel::eq(&model, &g, &reparsed).unwrap());
        }
        assert!(parse_network_literal(&monoid, 4, "e(0,2)=T").is_err());
        assert!(parse_network_literal(&monoid, 4, "e(1,5)=T").is_err());
        assert!(parse_network_literal(&monoid, 4, "e(1,1)=T").is_err());
    }

    #[test]
    fn quoted_values_survive_splitting() {
        let monoid = free_monoid("ab*").unwrap();
        let model = VarietalModel::new(monoid.clone(), VarietyTag::Mon).unwrap();
        let s = "e(1,2)=\"a*b\" * e(1,3)=\"ba\"";
        let letters = parse_network_literal(&monoid, 3, s).unwrap();
        assert_eq!(letters.len(), 2);
        let g = model.network(3, &letters).unwrap();
        let printed = format_network_literal(&monoid, &g);
        let reparsed = parse_network_literal(&monoid, 3, &printed).unwrap();
        assert_eq!(letters, reparsed);
    }

    #[test]
    fn word_literal_round_trip() {
        let ctx = GreenContext::uniform(
            crate::graph::SimpleGraph::edgeless(3),
            &boolean_monoid(),
            VarietyTag::Mon,
        )
        .unwrap();
        let word = parse_word_literal(&ctx, "v0:T * v2:T * v0:T").unwrap();
        assert_eq!(word.len(), 3);
        let elem = ctx.normalize(word).unwrap();
        let printed = format_word_literal(&ctx, elem.word());
        let reparsed = ctx
            .normalize(parse_word_literal(&ctx, &printed).unwrap())
            .unwrap();
        assert!(elem.equal(&reparsed).unwrap());
        assert_eq!(parse_word_literal(&ctx, "1").unwrap(), vec![]);
        assert!(parse_word_literal(&ctx, "v9:T").is_err());
    }

    #[test]
    fn network_json_round_trip() {
        let model = VarietalModel::new(boolean_monoid(), VarietyTag::GMon).unwrap();
        let g = model
            .network(4, &[(0, 1, Value::Bool(true)), (0, 2, Value::Bool(true))])
            .unwrap();
        let json = network_to_json(&model, &g);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: NetworkJson = serde_json::from_str(&text).unwrap();
        let (model2, g2) = network_from_json(&parsed).unwrap();
        assert!(crate::network::NetworkModel::eq(&model2, &g, &g2).unwrap());
    }

    #[test]
    fn green_json_round_trip() {
        let ctx = GreenContext::uniform(
            crate::kneser::kneser_graph(4, 2),
            &boolean_monoid(),
            VarietyTag::Mon,
        )
        .unwrap();
        let elem = ctx
            .normalize(vec![
                Letter::new(5, Value::Bool(true)),
                Letter::new(0, Value::Bool(true)),
            ])
            .unwrap();
        let json = green_to_json(&elem);
        let back = green_from_json(&json, &boolean_monoid()).unwrap();
        assert!(elem.equal(&back).unwrap());
    }

    #[test]
    fn kneser_dot_has_subset_labels() {
        let dot = kneser_dot(4, 2);
        assert!(dot.contains("label=\"12\""));
        assert!(dot.contains("label=\"34\""));
        assert!(dot.contains("0 -- 5;"));
    }
}
