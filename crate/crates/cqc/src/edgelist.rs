//! Whitespace separated edge lists: one `u v` pair per line, `#` comments
//! and blank lines ignored.

use std::fs;
use std::io::Write;
use std::path::Path;

use cqc_core::{Layer, LayerPair};

use crate::Error;

pub type Edge = (String, String);

pub fn parse(text: &str) -> Result<Vec<Edge>, (usize, String)> {
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match (fields.next(), fields.next(), fields.next()) {
            (Some(u), Some(v), None) => edges.push((u.to_owned(), v.to_owned())),
            _ => return Err((i + 1, format!("expected two vertex labels, got {line:?}"))),
        }
    }
    Ok(edges)
}

pub fn read(path: &Path) -> Result<Vec<Edge>, Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    parse(&text).map_err(|(line, message)| Error::Parse {
        path: path.to_owned(),
        line,
        message,
    })
}

/// Reads both layers. Vertex ids follow first appearance, layer one first,
/// so the same files always give the same ids.
pub fn read_pair(first: &Path, second: &Path) -> Result<LayerPair, Error> {
    let e1 = read(first)?;
    let e2 = read(second)?;
    Ok(LayerPair::from_labeled_edges(e1, e2).0)
}

/// One layer as text, edges in id order.
pub fn format_layer(graph: &LayerPair, layer: Layer) -> String {
    let mut out = String::new();
    for (u, v) in graph.edges(layer) {
        out.push_str(graph.label(u));
        out.push(' ');
        out.push_str(graph.label(v));
        out.push('\n');
    }
    out
}

pub fn write_layer(graph: &LayerPair, layer: Layer, path: &Path) -> Result<(), Error> {
    let io = |source| Error::Io {
        path: path.to_owned(),
        source,
    };
    let mut file = fs::File::create(path).map_err(io)?;
    file.write_all(format_layer(graph, layer).as_bytes())
        .map_err(io)
}
