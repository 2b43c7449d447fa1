//! Text formats: plain edge lists, DIMACS edge format and a small JSON form.
//!
//! Edge lists are whitespace-separated `u v` pairs (0-based), one or more
//! per line, `#` starts a comment. An optional first line `n m` is treated
//! as a header when the rest of the file holds exactly `m` pairs, all with
//! ids below `n` and `n > 0`; otherwise it is read as an edge. Without a header the
//! vertex count is one more than the largest id.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" | "edge-list" | "txt" => Ok(Format::EdgeList),
            "dimacs" | "col" => Ok(Format::Dimacs),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidInput(format!("unknown graph format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex id, found {token:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        if !tokens.len().is_multiple_of(2) {
            return Err(Error::Parse {
                line,
                message: format!("odd number of tokens ({})", tokens.len()),
            });
        }
        for pair in tokens.chunks(2) {
            pairs.push((parse_id(pair[0], line)?, parse_id(pair[1], line)?, line));
        }
    }
    let mut n_override = None;
    if let Some(&(n, m, first_line)) = pairs.first() {
        let first_line_pairs = pairs.iter().filter(|p| p.2 == first_line).count();
        let rest = &pairs[1..];
        if first_line_pairs == 1 && n > 0 && rest.len() == m && rest.iter().all(|&(u, v, _)| u < n && v < n) {
            n_override = Some(n);
            pairs.remove(0);
        }
    }
    for &(u, v, line) in &pairs {
        if u == v {
            return Err(Error::Loop {
                vertex: u,
                line: Some(line),
            });
        }
    }
    let n = n_override.unwrap_or_else(|| pairs.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, pairs.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if tokens.len() != 4 {
                    return Err(Error::Parse {
                        line,
                        message: "expected `p edge <n> <m>`".into(),
                    });
                }
                n = Some(parse_id(tokens[2], line)?);
            }
            Some("e") => {
                let n = n.ok_or_else(|| Error::Parse {
                    line,
                    message: "edge before problem line".into(),
                })?;
                if tokens.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        message: "expected `e <u> <v>`".into(),
                    });
                }
                let u = parse_id(tokens[1], line)?;
                let v = parse_id(tokens[2], line)?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(Error::Parse {
                            line,
                            message: format!("vertex {w} outside 1..={n}"),
                        });
                    }
                }
                if u == v {
                    return Err(Error::Loop {
                        vertex: u - 1,
                        line: Some(line),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown DIMACS line type {other:?}"),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing problem line".into(),
    })?;
    Graph::from_edges(n, edges)
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let parsed: GraphJson = serde_json::from_str(text)?;
    Graph::from_edges(parsed.n, parsed.edges.into_iter().map(|[u, v]| (u, v)))
}

pub fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.trim())
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with('{') {
        Format::Json
    } else if first.starts_with(['p', 'c', 'e']) {
        Format::Dimacs
    } else {
        Format::EdgeList
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
        Format::Json => parse_json(text),
    }
}

pub fn parse_auto(text: &str) -> Result<Graph> {
    parse(text, detect_format(text))
}

pub fn read_graph(path: &std::path::Path) -> Result<Graph> {
    parse_auto(&std::fs::read_to_string(path)?)
}

/// Edge list with an `n m` header line.
pub fn to_edge_list(g: &Graph) -> String {
    if g.is_empty() {
        return String::new();
    }
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn to_json_value(g: &Graph) -> serde_json::Value {
    serde_json::to_value(GraphJson {
        n: g.vertex_count(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    })
    .expect("plain data")
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson {
        n: g.vertex_count(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    })
    .expect("plain data")
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Dimacs => to_dimacs(g),
        Format::Json => to_json(g) + "\n",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_from_pairs() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn loop_is_rejected_with_line() {
        assert!(matches!(
            parse_edge_list("0 0"),
            Err(Error::Loop {
                vertex: 0,
                line: Some(1)
            })
        ));
    }

    #[test]
    fn duplicate_collapses() {
        let g = parse_edge_list("0 1\n0 1").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn header_sets_vertex_count() {
        let g = parse_edge_list("5 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 2);
        let isolated = parse_edge_list("4 0\n").unwrap();
        assert_eq!(isolated, Graph::empty(4));
    }

    #[test]
    fn malformed_token_reports_line() {
        match parse_edge_list("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn comments_are_ignored() {
        let g = parse_edge_list("# a triangle\n0 1 # first\n1 2\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert!(parse_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(matches!(parse_dimacs("p edge 2 1\ne 2 2\n"), Err(Error::Loop { .. })));
    }

    #[test]
    fn json_form() {
        let g = Graph::petersen();
        let text = to_json(&g);
        assert_eq!(parse_json(&text).unwrap(), g);
        assert!(text.starts_with("{\"n\":10,\"edges\":[[0,1]"));
    }

    #[test]
    fn detection_picks_dialect() {
        assert_eq!(detect_format("p edge 1 0"), Format::Dimacs);
        assert_eq!(detect_format("{\"n\":1,\"edges\":[]}"), Format::Json);
        assert_eq!(detect_format("# c\n0 1"), Format::EdgeList);
        assert_eq!(parse_auto(&to_dimacs(&Graph::wheel(4))).unwrap(), Graph::wheel(4));
    }
}
