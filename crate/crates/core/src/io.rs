//! Interchange formats: graph6 import/export, DOT export, edge-list text.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const G6_HEADER: &str = ">>graph6<<";

/// Encodes a graph in the standard graph6 format (no header).
///
/// The upper triangle of the adjacency matrix is emitted column by column
/// (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed into 6-bit groups with
/// 63 added to each.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    if n < 63 {
        out.push((63 + n as u8) as char);
    } else {
        // long form: '~' then 18 bits of n in three 6-bit groups
        out.push(126 as char);
        out.push((63 + ((n >> 12) & 0x3f) as u8) as char);
        out.push((63 + ((n >> 6) & 0x3f) as u8) as char);
        out.push((63 + (n & 0x3f) as u8) as char);
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push((63 + acc) as char);
    }
    out
}

/// Decodes a graph6 string. The optional `>>graph6<<` header is accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s).trim_end();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "byte {} at position {i} outside the graph6 range 63..=126",
                b
            )));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("8-byte sizes are not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated long-form size".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "graph6 order {n} exceeds MAX_VERTICES={MAX_VERTICES}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos < need {
        return Err(Error::Graph6(format!(
            "need {need} data bytes for n={n}, found {}",
            bytes.len() - pos
        )));
    }
    if bytes.len() - pos > need {
        return Err(Error::Graph6("trailing bytes after graph data".into()));
    }
    let mut g = Graph::new(n);
    let mut acc: u16 = 0;
    let mut avail = 0;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                acc = (bytes[pos] - 63) as u16;
                pos += 1;
                avail = 6;
            }
            avail -= 1;
            if (acc >> avail) & 1 != 0 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// DOT export with 1-based node ids. `labels[v]`, when given, becomes the
/// node's label attribute (used to render token vertices as subsets).
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match labels {
            Some(ls) => out.push_str(&format!("  {} [label=\"{}\"];\n", v + 1, ls[v])),
            None => out.push_str(&format!("  {};\n", v + 1)),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", u + 1, v + 1));
    }
    out.push_str("}\n");
    out
}

/// Edge list, one `u v` pair per line, 1-based labels.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses an edge list (`u v` per line, 1-based). The order is the largest
/// label seen; blank lines and `#` comments are skipped.
pub fn from_edge_list(s: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max = 0usize;
    for (lineno, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let u: usize = a
                    .parse()
                    .map_err(|_| Error::Input(format!("line {}: bad label {a:?}", lineno + 1)))?;
                let v: usize = b
                    .parse()
                    .map_err(|_| Error::Input(format!("line {}: bad label {b:?}", lineno + 1)))?;
                (u, v)
            }
            _ => {
                return Err(Error::Input(format!(
                    "line {}: expected exactly two labels",
                    lineno + 1
                )))
            }
        };
        if u == 0 || v == 0 {
            return Err(Error::Input(format!("line {}: labels are 1-based", lineno + 1)));
        }
        if u == v {
            return Err(Error::Input(format!("line {}: self-loop {u}", lineno + 1)));
        }
        max = max.max(u).max(v);
        edges.push((u - 1, v - 1));
    }
    if max > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "edge list order {max} exceeds MAX_VERTICES={MAX_VERTICES}"
        )));
    }
    Ok(Graph::from_edges(max, &edges))
}
