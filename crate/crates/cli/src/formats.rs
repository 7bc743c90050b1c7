//! Graph files: graph6 (one graph per line) and edge lists (`n m` header,
//! then `m` lines `u v`). Blank lines and lines starting with `#` are
//! ignored in both.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use proxrem_core::graph6::{from_graph6, to_graph6, Graph6Error};
use proxrem_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}:{line}: {message}", path.display())]
    Parse { path: PathBuf, line: usize, message: String },
    #[error("{}: no graphs found", path.display())]
    Empty { path: PathBuf },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Picks edge-list when the first content line is two integers.
pub fn detect_format(text: &str) -> GraphFormat {
    match content_lines(text).next() {
        Some((_, first)) => {
            let fields: Vec<&str> = first.split_whitespace().collect();
            if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
                GraphFormat::EdgeList
            } else {
                GraphFormat::Graph6
            }
        }
        None => GraphFormat::Graph6,
    }
}

/// Parses graph6 lines; the error carries the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    content_lines(text).map(|(line, l)| from_graph6(l).map_err(|e| (line, e))).collect()
}

/// Parses one edge-list graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, (usize, String)> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or((0, "missing `n m` header".to_string()))?;
    let nums = |line: usize, s: &str| -> Result<(usize, usize), (usize, String)> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        match fields[..] {
            [a, b] => match (a.parse(), b.parse()) {
                (Ok(a), Ok(b)) => Ok((a, b)),
                _ => Err((line, format!("expected two non-negative integers, got `{s}`"))),
            },
            _ => Err((line, format!("expected two fields, got `{s}`"))),
        }
    };
    let (n, m) = nums(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, l) in lines {
        let (u, v) = nums(line, l)?;
        if u >= n || v >= n {
            return Err((line, format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
        }
        edges.push((u, v));
        last = line;
    }
    if edges.len() != m {
        return Err((last, format!("header declares {m} edges but {} were listed", edges.len())));
    }
    Graph::from_edges(n, edges).map_err(|e: GraphError| (hline, e.to_string()))
}

pub fn parse_graphs(text: &str, format: Option<GraphFormat>) -> Result<Vec<Graph>, (usize, String)> {
    match format.unwrap_or_else(|| detect_format(text)) {
        GraphFormat::Graph6 => parse_graph6_lines(text).map_err(|(l, e)| (l, e.to_string())),
        GraphFormat::EdgeList => parse_edge_list(text).map(|g| vec![g]),
    }
}

pub fn read_graphs(path: &Path, format: Option<GraphFormat>) -> Result<Vec<Graph>, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.into(), source })?;
    let graphs = parse_graphs(&text, format)
        .map_err(|(line, message)| FormatError::Parse { path: path.into(), line, message })?;
    if graphs.is_empty() {
        return Err(FormatError::Empty { path: path.into() });
    }
    Ok(graphs)
}

pub fn write_edge_list(w: &mut impl Write, g: &Graph) -> io::Result<()> {
    writeln!(w, "{} {}", g.order(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

pub fn write_graph(w: &mut impl Write, g: &Graph, format: GraphFormat) -> io::Result<()> {
    match format {
        GraphFormat::Graph6 => writeln!(w, "{}", to_graph6(g)),
        GraphFormat::EdgeList => write_edge_list(w, g),
    }
}
