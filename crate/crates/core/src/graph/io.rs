//! Text formats for graphs and demand matrices.
//!
//! Edge lists are UTF-8, one edge per line as `u<TAB>v<TAB>w`, with `#`
//! starting a comment. Demand matrices are CSV with a header row and a
//! header column of vertex labels.

use std::fmt::Write as _;
use std::io::Read;

use thiserror::Error;

use super::{build_graph, Demand, GraphError, WeightedGraph};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

/// Parses an edge list. Fields may be separated by tabs or other whitespace.
pub fn parse_edge_list(text: &str) -> Result<WeightedGraph, FormatError> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(parse_err(i + 1, format!("expected 3 fields, found {}", fields.len())));
        }
        let u: u64 = fields[0].parse().map_err(|_| parse_err(i + 1, format!("bad vertex id {:?}", fields[0])))?;
        let v: u64 = fields[1].parse().map_err(|_| parse_err(i + 1, format!("bad vertex id {:?}", fields[1])))?;
        let w: f64 = fields[2].parse().map_err(|_| parse_err(i + 1, format!("bad weight {:?}", fields[2])))?;
        edges.push((u, v, w));
    }
    Ok(build_graph(&edges)?)
}

/// Writes the canonical edge list, optionally preceded by comment lines.
pub fn write_edge_list(g: &WeightedGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for (u, v, w) in g.labeled_edges() {
        let _ = writeln!(out, "{u}\t{v}\t{w}");
    }
    out
}

/// Reads a dense demand matrix whose header row and column hold vertex labels.
/// Every vertex of `g` must appear in both headers.
pub fn read_demand_csv<R: Read>(reader: R, g: &WeightedGraph) -> Result<Demand, FormatError> {
    let n = g.vertex_count();
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).comment(Some(b'#')).trim(csv::Trim::All).from_reader(reader);
    let mut records = rdr.records();
    let header = records.next().ok_or_else(|| parse_err(1, "empty demand file"))??;
    let columns = header
        .iter()
        .skip(1)
        .map(|f| label_index(g, f, 1))
        .collect::<Result<Vec<_>, _>>()?;
    if columns.len() != n {
        return Err(GraphError::DemandShapeMismatch { demand: columns.len(), graph: n }.into());
    }
    let mut entries = vec![0.0; n * n];
    let mut rows_seen = vec![false; n];
    for (i, rec) in records.enumerate() {
        let rec = rec?;
        let line = i + 2;
        let s = label_index(g, rec.get(0).unwrap_or(""), line)?;
        if rows_seen[s] {
            return Err(parse_err(line, format!("duplicate row for vertex {}", g.label(s))));
        }
        rows_seen[s] = true;
        if rec.len() != n + 1 {
            return Err(parse_err(line, format!("expected {} fields, found {}", n + 1, rec.len())));
        }
        for (j, field) in rec.iter().skip(1).enumerate() {
            let value: f64 = field.parse().map_err(|_| parse_err(line, format!("bad demand {field:?}")))?;
            entries[s * n + columns[j]] = value;
        }
    }
    if let Some(missing) = rows_seen.iter().position(|seen| !seen) {
        return Err(parse_err(0, format!("no row for vertex {}", g.label(missing))));
    }
    Ok(Demand::matrix(n, entries)?)
}

fn label_index(g: &WeightedGraph, field: &str, line: usize) -> Result<usize, FormatError> {
    let label: u64 = field.parse().map_err(|_| parse_err(line, format!("bad vertex id {field:?}")))?;
    g.index_of(label).ok_or_else(|| parse_err(line, format!("vertex {label} is not in the graph")))
}
