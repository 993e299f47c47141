//! Text formats.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! n m
//! u v [w_e]        (m lines, 0-based vertices)
//! #vertex-weights  (optional section)
//! w                (n lines)
//! ```
//!
//! Missing weights default to 1. When every weight token is an integer the
//! graph is loaded in exact integer mode, otherwise all weights are `f64`.
//!
//! Partition file: one class per line, space-separated edge indices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::theta::EdgePartition;
use crate::weight::{EdgeWeights, Scalar, VertexWeights};

const VERTEX_WEIGHTS_HEADER: &str = "#vertex-weights";

#[derive(Debug, Clone, PartialEq)]
pub enum Weights {
    Integer {
        vertex: VertexWeights<i128>,
        edge: EdgeWeights<i128>,
    },
    Float {
        vertex: VertexWeights<f64>,
        edge: EdgeWeights<f64>,
    },
}

impl Weights {
    pub fn is_integer(&self) -> bool {
        matches!(self, Weights::Integer { .. })
    }

    /// True when every vertex and edge weight equals one.
    pub fn is_unit(&self) -> bool {
        match self {
            Weights::Integer { vertex, edge } => {
                vertex.as_slice().iter().all(|&w| w == 1) && edge.as_slice().iter().all(|&w| w == 1)
            }
            Weights::Float { vertex, edge } => {
                vertex.as_slice().iter().all(|&w| w == 1.0)
                    && edge.as_slice().iter().all(|&w| w == 1.0)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: Weights,
}

impl WeightedGraph {
    pub fn unit(graph: Graph) -> Self {
        let weights = Weights::Integer {
            vertex: VertexWeights::unit(graph.vertex_count()),
            edge: EdgeWeights::unit(graph.edge_count()),
        };
        Self { graph, weights }
    }
}

#[derive(Debug, Clone, Copy)]
enum Token {
    Int(i128),
    Float(f64),
}

fn parse_weight(tok: &str, line: usize) -> Result<Token> {
    if let Ok(v) = tok.parse::<i128>() {
        return Ok(Token::Int(v));
    }
    tok.parse::<f64>().map(Token::Float).map_err(|_| Error::Format {
        line,
        message: format!("invalid weight {tok:?}"),
    })
}

fn parse_index(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| Error::Format {
        line,
        message: format!("invalid {what} {tok:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<WeightedGraph> {
    // (1-based line number, content) for every non-comment line, plus the
    // position where the vertex-weight section starts.
    let mut body = Vec::new();
    let mut section_at = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line == VERTEX_WEIGHTS_HEADER {
            if section_at.is_some() {
                return Err(Error::Format {
                    line: i + 1,
                    message: "duplicate #vertex-weights section".into(),
                });
            }
            section_at = Some(body.len());
            continue;
        }
        let content = match line.find('#') {
            Some(pos) => line[..pos].trim(),
            None => line,
        };
        if !content.is_empty() {
            body.push((i + 1, content));
        }
    }

    let mut lines = body.iter();
    let &(header_line, header) = lines.next().ok_or(Error::Format {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    if section_at == Some(0) {
        return Err(Error::Format {
            line: header_line,
            message: "#vertex-weights section before header".into(),
        });
    }
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::Format {
            line: header_line,
            message: "header must be `n m`".into(),
        });
    }
    let n = parse_index(head[0], header_line, "vertex count")?;
    let m = parse_index(head[1], header_line, "edge count")?;

    let edge_section_end = section_at.unwrap_or(body.len());
    if edge_section_end - 1 != m {
        return Err(Error::Format {
            line: header_line,
            message: format!("expected {m} edge lines, found {}", edge_section_end - 1),
        });
    }

    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    let mut edge_tokens = Vec::with_capacity(m);
    for &(line, content) in &body[1..edge_section_end] {
        let toks: Vec<&str> = content.split_whitespace().collect();
        if !(2..=3).contains(&toks.len()) {
            return Err(Error::Format {
                line,
                message: "edge line must be `u v [w]`".into(),
            });
        }
        let u = parse_index(toks[0], line, "vertex index")?;
        let v = parse_index(toks[1], line, "vertex index")?;
        edges.push((u, v));
        edge_tokens.push(match toks.get(2) {
            Some(t) => (parse_weight(t, line)?, line),
            None => (Token::Int(1), line),
        });
    }

    let mut vertex_tokens = Vec::with_capacity(n);
    if let Some(start) = section_at {
        let rows = &body[start..];
        if rows.len() != n {
            return Err(Error::Format {
                line: rows.last().map_or(header_line, |l| l.0),
                message: format!("expected {n} vertex weights, found {}", rows.len()),
            });
        }
        for &(line, content) in rows {
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.len() != 1 {
                return Err(Error::Format {
                    line,
                    message: "vertex weight line must hold one number".into(),
                });
            }
            vertex_tokens.push((parse_weight(toks[0], line)?, line));
        }
    } else {
        vertex_tokens.resize(n, (Token::Int(1), header_line));
    }

    let graph = Graph::new(n, edges)?;
    let all_int = edge_tokens
        .iter()
        .chain(&vertex_tokens)
        .all(|(t, _)| matches!(t, Token::Int(_)));
    let weights = if all_int {
        let ints = |toks: &[(Token, usize)]| -> Vec<i128> {
            toks.iter()
                .map(|(t, _)| match t {
                    Token::Int(v) => *v,
                    Token::Float(_) => unreachable!(),
                })
                .collect()
        };
        Weights::Integer {
            vertex: weights_or_format(VertexWeights::new(&graph, ints(&vertex_tokens)), &vertex_tokens)?,
            edge: weights_or_format(EdgeWeights::new(&graph, ints(&edge_tokens)), &edge_tokens)?,
        }
    } else {
        let floats = |toks: &[(Token, usize)]| -> Vec<f64> {
            toks.iter()
                .map(|(t, _)| match t {
                    Token::Int(v) => *v as f64,
                    Token::Float(v) => *v,
                })
                .collect()
        };
        Weights::Float {
            vertex: weights_or_format(VertexWeights::new(&graph, floats(&vertex_tokens)), &vertex_tokens)?,
            edge: weights_or_format(EdgeWeights::new(&graph, floats(&edge_tokens)), &edge_tokens)?,
        }
    };
    Ok(WeightedGraph { graph, weights })
}

fn weights_or_format<W>(res: Result<W>, tokens: &[(Token, usize)]) -> Result<W> {
    res.map_err(|e| match e {
        Error::InvalidWeight { kind, index } => Error::Format {
            line: tokens[index].1,
            message: format!("{kind} weight must be non-negative and finite"),
        },
        other => other,
    })
}

/// Writes the edge-list format. Weights are always written, so the output
/// round-trips through [`parse_edge_list`].
pub fn write_edge_list<T: Scalar>(
    graph: &Graph,
    vertex: Option<&VertexWeights<T>>,
    edge: Option<&EdgeWeights<T>>,
) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", graph.vertex_count(), graph.edge_count()).unwrap();
    for (k, &(u, v)) in graph.edges().iter().enumerate() {
        match edge {
            Some(w) => writeln!(out, "{u} {v} {}", w[k]).unwrap(),
            None => writeln!(out, "{u} {v}").unwrap(),
        }
    }
    if let Some(w) = vertex {
        writeln!(out, "{VERTEX_WEIGHTS_HEADER}").unwrap();
        for x in w.as_slice() {
            writeln!(out, "{x}").unwrap();
        }
    }
    out
}

pub fn parse_partition(text: &str, edge_count: usize) -> Result<EdgePartition> {
    let mut classes = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let class = content
            .split_whitespace()
            .map(|t| parse_index(t, i + 1, "edge index"))
            .collect::<Result<Vec<_>>>()?;
        classes.push(class);
    }
    EdgePartition::from_classes(edge_count, classes)
}

pub fn write_partition(partition: &EdgePartition) -> String {
    let mut out = String::new();
    for class in partition.classes() {
        let line: Vec<String> = class.iter().map(|e| e.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_unweighted_with_comments() {
        let g = parse_edge_list("# a path\n3 2\n0 1\n1 2 # tail\n").unwrap();
        assert_eq!(g.graph.edges(), &[(0, 1), (1, 2)]);
        assert!(g.weights.is_integer());
        assert!(g.weights.is_unit());
    }

    #[test]
    fn parses_weights_and_vertex_section() {
        let g = parse_edge_list("3 2\n0 1 4\n1 2\n#vertex-weights\n0\n2\n5\n").unwrap();
        match g.weights {
            Weights::Integer { vertex, edge } => {
                assert_eq!(edge.as_slice(), &[4, 1]);
                assert_eq!(vertex.as_slice(), &[0, 2, 5]);
            }
            _ => panic!("expected integer mode"),
        }
    }

    #[test]
    fn any_fraction_switches_to_float() {
        let g = parse_edge_list("2 1\n0 1 2.5\n").unwrap();
        match g.weights {
            Weights::Float { vertex, edge } => {
                assert_eq!(edge.as_slice(), &[2.5]);
                assert_eq!(vertex.as_slice(), &[1.0, 1.0]);
            }
            _ => panic!("expected float mode"),
        }
    }

    #[test]
    fn format_errors_carry_line_numbers() {
        assert!(matches!(
            parse_edge_list("2 1\n0 x\n"),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Format { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 1 -3\n"),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Format { .. })));
        assert!(matches!(
            parse_edge_list("2 1\n0 1\n#vertex-weights\n1\n"),
            Err(Error::Format { .. })
        ));
    }

    #[test]
    fn graph_errors_pass_through() {
        assert_eq!(
            parse_edge_list("2 1\n1 1\n"),
            Err(Error::SelfLoop { edge: 0, vertex: 1 })
        );
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::new(3, vec![(0, 1), (2, 1)]).unwrap();
        let vw = VertexWeights::<i128>::new(&g, vec![3, 0, 1]).unwrap();
        let ew = EdgeWeights::<i128>::new(&g, vec![2, 7]).unwrap();
        let text = write_edge_list(&g, Some(&vw), Some(&ew));
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.graph, g);
        assert_eq!(back.weights, Weights::Integer { vertex: vw, edge: ew });
    }

    #[test]
    fn partition_file() {
        let p = parse_partition("0 3\n# middle\n1 4\n2 5\n", 6).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.class_of(4), 1);
        assert_eq!(write_partition(&p), "0 3\n1 4\n2 5\n");
        assert!(matches!(
            parse_partition("0 1\n1 2\n", 3),
            Err(Error::NotAPartition(_))
        ));
    }
}
