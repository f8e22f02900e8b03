//! Text and JSONL formats for graphs and permutations.
//!
//! Graph text is a header `n <count>` followed by one `a b` line per edge.
//! Permutation text is a single line of comma-separated values. In both
//! formats `#` starts a comment and blank lines are skipped; parse failures
//! carry 1-based line and column positions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;
use crate::pairs::VertexPair;
use crate::perm::Permutation;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Comma-separated tokens with their 1-based starting columns, trimmed.
fn comma_tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in line.char_indices() {
        if ch == ',' {
            out.push((start, &line[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &line[start..]));
    out.into_iter()
        .map(|(pos, tok)| {
            let lead = tok.len() - tok.trim_start().len();
            (pos + lead + 1, tok.trim())
        })
        .collect()
}

pub fn parse_graph(input: &str) -> std::result::Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let toks = tokens(strip_comment(raw));
        if toks.is_empty() {
            continue;
        }
        let Some(g) = graph.as_mut() else {
            if toks[0].1 != "n" {
                return Err(ParseError::new(
                    lineno,
                    toks[0].0,
                    format!("expected header 'n <count>', found '{}'", toks[0].1),
                ));
            }
            match toks.len() {
                1 => {
                    return Err(ParseError::new(
                        lineno,
                        toks[0].0,
                        "header 'n <count>' is missing its value",
                    ))
                }
                2 => {}
                _ => {
                    return Err(ParseError::new(
                        lineno,
                        toks[2].0,
                        "header takes exactly one value",
                    ))
                }
            }
            let (col, tok) = toks[1];
            let count: usize = tok.parse().map_err(|_| {
                ParseError::new(lineno, col, format!("invalid vertex count '{tok}'"))
            })?;
            graph =
                Some(Graph::new(count).map_err(|e| ParseError::new(lineno, col, e.to_string()))?);
            continue;
        };
        if toks.len() != 2 {
            let col = if toks.len() > 2 { toks[2].0 } else { toks[0].0 };
            return Err(ParseError::new(
                lineno,
                col,
                "edge line takes exactly two endpoints",
            ));
        }
        let mut ends = [0usize; 2];
        for (slot, (col, tok)) in toks.iter().enumerate() {
            ends[slot] = tok
                .parse()
                .map_err(|_| ParseError::new(lineno, *col, format!("invalid vertex '{tok}'")))?;
        }
        let [a, b] = ends;
        let n = g.vertex_count();
        if a < 1 || a > n {
            return Err(ParseError::new(
                lineno,
                toks[0].0,
                format!("vertex {a} out of range 1..={n}"),
            ));
        }
        if b < 1 || b > n {
            return Err(ParseError::new(
                lineno,
                toks[1].0,
                format!("vertex {b} out of range 1..={n}"),
            ));
        }
        if a >= b {
            return Err(ParseError::new(
                lineno,
                toks[0].0,
                format!("edge endpoints must satisfy a < b, got {a} {b}"),
            ));
        }
        if g.has_edge(a, b) {
            return Err(ParseError::new(
                lineno,
                toks[0].0,
                format!("duplicate edge {a} {b}"),
            ));
        }
        g.insert_pair_unchecked(VertexPair::new(a, b));
    }
    graph.ok_or_else(|| ParseError::new(1, 1, "empty input: expected header 'n <count>'"))
}

pub fn parse_permutation(input: &str) -> std::result::Result<Permutation, ParseError> {
    let mut word_line: Option<(usize, &str)> = None;
    for (idx, raw) in input.lines().enumerate() {
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if word_line.is_some() {
            let col = line.len() - line.trim_start().len() + 1;
            return Err(ParseError::new(
                idx + 1,
                col,
                "unexpected extra data after the permutation word",
            ));
        }
        word_line = Some((idx + 1, line));
    }
    let (lineno, line) = word_line
        .ok_or_else(|| ParseError::new(1, 1, "empty input: expected a permutation word"))?;
    let mut word = Vec::new();
    let mut cols = Vec::new();
    for (col, tok) in comma_tokens(line) {
        if tok.is_empty() {
            return Err(ParseError::new(
                lineno,
                col,
                "empty value in permutation word",
            ));
        }
        let value: usize = tok
            .parse()
            .map_err(|_| ParseError::new(lineno, col, format!("invalid value '{tok}'")))?;
        word.push(value);
        cols.push(col);
    }
    Permutation::from_word(&word).map_err(|e| {
        let col = match e {
            Error::WordNotBijection { pos, .. } => cols[pos - 1],
            _ => cols[0],
        };
        ParseError::new(lineno, col, e.to_string())
    })
}

/// Header plus one edge per line, edges in canonical valid order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.a(), e.b()));
    }
    out
}

/// The one-line comma-separated word, without a trailing newline.
pub fn serialize_permutation(p: &Permutation) -> String {
    p.to_string()
}

/// JSONL row for a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphRecord {
    pub fn from_graph(g: &Graph) -> Self {
        GraphRecord {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|e| [e.a(), e.b()]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        Graph::from_edges(self.n, &edges)
    }
}

/// JSONL row for a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermRecord {
    pub n: usize,
    pub word: Vec<usize>,
}

impl PermRecord {
    pub fn from_permutation(p: &Permutation) -> Self {
        PermRecord {
            n: p.half_size(),
            word: p.word(),
        }
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        if self.word.len() != 2 * self.n {
            return Err(Error::RecordMismatch {
                n: self.n,
                len: self.word.len(),
            });
        }
        Permutation::from_word(&self.word)
    }
}

/// JSONL row pairing a graph with its permutation.
#[derive(Debug, Clone, Serialize)]
pub struct PairedRecord {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub word: Vec<usize>,
}

impl PairedRecord {
    pub fn new(g: &Graph, p: &Permutation) -> Self {
        debug_assert_eq!(g.vertex_count(), p.half_size());
        PairedRecord {
            n: g.vertex_count(),
            edges: GraphRecord::from_graph(g).edges,
            word: p.word(),
        }
    }
}
