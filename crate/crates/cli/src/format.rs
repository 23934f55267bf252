//! Hypergraph and demand file formats.
//!
//! JSON: `{"n": 4, "edges": [[0, 1, 2], [1, 2, 3], [2, 3]]}`.
//! Text: a header line `n m` followed by `m` lines of vertex ids.
//! Edges need not be sorted in either format; the parser sorts them and
//! leaves validation to the caller.

use hypershrink::{DirectedHypergraph, Hypergraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("JSON error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {message}")]
    Text { line: usize, message: String },
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// On-disk shape of a hypergraph; may violate the hypergraph invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for HypergraphFile {
    fn from(h: &Hypergraph) -> Self {
        HypergraphFile {
            n: h.vertex_count(),
            edges: h.edges().to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum HypergraphFormat {
    Json,
    Text,
}

/// Parses either format, chosen by whether the first non-blank character
/// is `{`. Every edge comes back sorted.
pub fn parse_hypergraph(input: &str) -> Result<HypergraphFile, FormatError> {
    let mut file = if input.trim_start().starts_with('{') {
        serde_json::from_str::<HypergraphFile>(input)?
    } else {
        parse_text(input)?
    };
    for e in &mut file.edges {
        e.sort_unstable();
    }
    Ok(file)
}

fn parse_ids(line: &str, lineno: usize) -> Result<Vec<usize>, FormatError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| FormatError::Text {
                line: lineno,
                message: format!("expected a non-negative integer, found {tok:?}"),
            })
        })
        .collect()
}

fn parse_text(input: &str) -> Result<HypergraphFile, FormatError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((hline, header)) = lines.next() else {
        return Err(FormatError::Text {
            line: 1,
            message: "missing \"n m\" header".into(),
        });
    };
    let (n, m) = match parse_ids(header, hline)?[..] {
        [n, m] => (n, m),
        _ => {
            return Err(FormatError::Text {
                line: hline,
                message: "header must be \"n m\"".into(),
            })
        }
    };
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(FormatError::Text {
                line: lineno,
                message: format!("more than the {m} declared hyperedges"),
            });
        }
        edges.push(parse_ids(line, lineno)?);
        last = lineno;
    }
    if edges.len() != m {
        return Err(FormatError::Text {
            line: last,
            message: format!("expected {m} hyperedges, found {}", edges.len()),
        });
    }
    Ok(HypergraphFile { n, edges })
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(&HypergraphFile::from(h)).expect("plain data serialises")
}

pub fn to_text(h: &Hypergraph) -> String {
    let mut s = format!("{} {}\n", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        let ids: Vec<String> = e.iter().map(usize::to_string).collect();
        s.push_str(&ids.join(" "));
        s.push('\n');
    }
    s
}

pub fn write_hypergraph(h: &Hypergraph, format: HypergraphFormat) -> String {
    match format {
        HypergraphFormat::Json => to_json(h) + "\n",
        HypergraphFormat::Text => to_text(h),
    }
}

#[derive(Serialize)]
struct DirectedFile<'a> {
    n: usize,
    edges: &'a [Vec<usize>],
    heads: &'a [usize],
}

pub fn directed_to_json(d: &DirectedHypergraph) -> String {
    let file = DirectedFile {
        n: d.base().vertex_count(),
        edges: d.base().edges(),
        heads: d.heads(),
    };
    serde_json::to_string(&file).expect("plain data serialises")
}

/// A demand list: a JSON array or whitespace-separated integers. Negative
/// entries are rejected.
pub fn parse_demands(input: &str) -> Result<Vec<usize>, FormatError> {
    let raw: Vec<i64> = if input.trim_start().starts_with('[') {
        serde_json::from_str(input)?
    } else {
        let mut out = Vec::new();
        for (i, line) in input.lines().enumerate() {
            for tok in line.split_whitespace() {
                out.push(tok.parse::<i64>().map_err(|_| FormatError::Text {
                    line: i + 1,
                    message: format!("expected an integer demand, found {tok:?}"),
                })?);
            }
        }
        out
    };
    raw.iter()
        .enumerate()
        .map(|(v, &x)| {
            usize::try_from(x).map_err(|_| FormatError::Text {
                line: 1,
                message: format!("demand of vertex {v} is negative ({x})"),
            })
        })
        .collect()
}
