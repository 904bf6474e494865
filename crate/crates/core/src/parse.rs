//! Reader for the line-oriented `.gg` graph format.
//!
//! ```text
//! # comments run to end of line
//! graph SQ4
//! vertex a
//! vertex b order=3
//! edge a b
//! ```
//!
//! Identifiers match `[A-Za-z_][A-Za-z0-9_]*`. Vertex orders default to 2.
//! [`SimplicialGraph::to_gg`] writes the canonical form back out.

use std::collections::HashMap;

use crate::error::ParseError;
use crate::graph::{SimplicialGraph, DEFAULT_ORDER};
use crate::vertex_set::MAX_VERTICES;

/// Name used when the source has no `graph` line.
pub const UNNAMED: &str = "unnamed";

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn identifier(line: usize, tok: &str) -> Result<String, ParseError> {
    if is_identifier(tok) {
        Ok(tok.to_string())
    } else {
        Err(syntax(line, format!("`{tok}` is not a valid identifier")))
    }
}

/// Parses `.gg` source into a graph.
pub fn parse_graph(source: &str) -> Result<SimplicialGraph, ParseError> {
    let mut name: Option<String> = None;
    let mut vertices: Vec<(String, u32)> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();

    for (i, raw) in source.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        match keyword {
            "graph" => {
                if name.is_some() {
                    return Err(syntax(line, "more than one `graph` line"));
                }
                let [id] = args else {
                    return Err(syntax(line, "expected `graph <name>`"));
                };
                name = Some(identifier(line, id)?);
            }
            "vertex" => {
                let (id, order) = match args {
                    [id] => (identifier(line, id)?, DEFAULT_ORDER as u64),
                    [id, attr] => {
                        let id = identifier(line, id)?;
                        let value = attr
                            .strip_prefix("order=")
                            .ok_or_else(|| syntax(line, format!("unknown attribute `{attr}`")))?;
                        let order: u64 = value
                            .parse()
                            .map_err(|_| syntax(line, format!("bad order `{value}`")))?;
                        (id, order)
                    }
                    _ => return Err(syntax(line, "expected `vertex <id> [order=<n>]`")),
                };
                if order < 2 || order > u32::MAX as u64 {
                    return Err(ParseError::InvalidOrder { line, id, order });
                }
                if index.contains_key(&id) {
                    return Err(ParseError::DuplicateVertex { line, id });
                }
                if vertices.len() == MAX_VERTICES {
                    return Err(ParseError::TooManyVertices { line });
                }
                index.insert(id.clone(), vertices.len());
                vertices.push((id, order as u32));
            }
            "edge" => {
                let [a, b] = args else {
                    return Err(syntax(line, "expected `edge <id> <id>`"));
                };
                let a = identifier(line, a)?;
                let b = identifier(line, b)?;
                if a == b {
                    return Err(ParseError::SelfLoop { line, id: a });
                }
                let lookup = |id: String| {
                    index
                        .get(&id)
                        .copied()
                        .ok_or(ParseError::UndeclaredVertex { line, id })
                };
                edges.push((lookup(a)?, lookup(b)?));
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }

    let name = name.unwrap_or_else(|| UNNAMED.to_string());
    // Every invariant `new` checks has already been enforced above.
    Ok(SimplicialGraph::new(name, vertices, &edges).expect("validated graph"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQ4: &str = "graph SQ4\nvertex a\nvertex b\nvertex c\nvertex d\n\
                       edge a b\nedge b c\nedge c d\nedge d a\n";

    #[test]
    fn four_cycle() {
        let g = parse_graph(SQ4).unwrap();
        assert_eq!(g.name(), "SQ4");
        assert_eq!(g.len(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.orders().iter().all(|&o| o == 2));
        assert!(g.adjacent(0, 3));
        assert!(!g.adjacent(0, 2));
    }

    #[test]
    fn order_attribute() {
        let g = parse_graph("vertex a order=3").unwrap();
        assert_eq!(g.order(0), 3);
        assert_eq!(g.name(), UNNAMED);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# header\n\ngraph G # trailing\nvertex a  # the a\n").unwrap();
        assert_eq!(g.name(), "G");
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn errors_carry_lines() {
        let err = parse_graph("vertex a\nedge a a\n").unwrap_err();
        assert_eq!(err, ParseError::SelfLoop { line: 2, id: "a".into() });

        let err = parse_graph("vertex a\nvertex a\n").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateVertex { line: 2, .. }));

        let err = parse_graph("vertex a\nedge a b\n").unwrap_err();
        assert!(matches!(err, ParseError::UndeclaredVertex { line: 2, ref id } if id == "b"));

        let err = parse_graph("vertex a order=1\n").unwrap_err();
        assert!(matches!(err, ParseError::InvalidOrder { line: 1, order: 1, .. }));

        let err = parse_graph("vertex 1a\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));

        let err = parse_graph("\n\nnode a\n").unwrap_err();
        assert_eq!(err.line(), 3);

        let err = parse_graph("graph A\ngraph B\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));

        let err = parse_graph("vertex a order=x\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { .. }));
    }

    #[test]
    fn canonical_round_trip() {
        let src = "edge_free_first # no graph line yet\n";
        assert!(parse_graph(src).is_err());
        let messy = "vertex b order=3\nvertex a\ngraph M\nedge a b\nedge b a\n";
        let g = parse_graph(messy).unwrap();
        let text = g.to_gg();
        assert_eq!(text, "graph M\nvertex b order=3\nvertex a\nedge b a\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn vertex_cap() {
        let src: String = (0..=MAX_VERTICES).map(|i| format!("vertex v{i}\n")).collect();
        assert!(matches!(
            parse_graph(&src),
            Err(ParseError::TooManyVertices { line }) if line == MAX_VERTICES + 1
        ));
    }
}
