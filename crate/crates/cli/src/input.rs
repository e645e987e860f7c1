//! Reading graphs from `-g`, a file, or stdin.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use minorham_core::graph::parse_graph_line;
use minorham_core::{Error, Graph};

/// A parsed input graph with its source text.
pub struct InputGraph {
    pub text: String,
    pub graph: Graph,
}

/// Parses every non-empty line of `text`. Parse errors report the byte
/// offset within the whole input.
pub fn parse_text(text: &str) -> Result<Vec<InputGraph>> {
    let mut out = Vec::new();
    let mut line_start = 0;
    for (i, raw) in text.split_inclusive('\n').enumerate() {
        let line = raw.trim_end_matches(['\n', '\r']);
        let lead = line.len() - line.trim_start().len();
        let body = line.trim();
        if !body.is_empty() {
            match parse_graph_line(body) {
                Ok(graph) => out.push(InputGraph {
                    text: body.to_string(),
                    graph,
                }),
                Err(Error::Parse { offset, message }) => {
                    bail!("parse error at byte {} (line {}): {message}", line_start + lead + offset, i + 1)
                }
                Err(e) => bail!("line {}: {e}", i + 1),
            }
        }
        line_start += raw.len();
    }
    Ok(out)
}

pub fn read_graphs(graph: Option<&str>, file: Option<&Path>) -> Result<Vec<InputGraph>> {
    let text = match (graph, file) {
        (Some(g), _) => g.to_string(),
        (None, Some(p)) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    let graphs = parse_text(&text)?;
    if graphs.is_empty() {
        bail!("no graph in input");
    }
    Ok(graphs)
}

/// Exactly one graph.
pub fn read_one(graph: Option<&str>, file: Option<&Path>) -> Result<InputGraph> {
    let mut graphs = read_graphs(graph, file)?;
    if graphs.len() != 1 {
        bail!("expected one graph, found {}", graphs.len());
    }
    Ok(graphs.pop().unwrap())
}

/// Comma- or space-separated vertex list.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("bad vertex {t:?}")))
        .collect()
}
