//! Small hand-built layer pairs used by tests, docs and the acceptance suite.

use crate::LayerPair;

/// Five vertices `A..E`. Layer two holds a clique on `{A,B,C,D}` plus the
/// pendant edge `A-E`; layer one has a single edge inside `{A,B,C,D}`.
pub fn five_vertex_pair() -> LayerPair {
    let layer1 = [("A", "B"), ("C", "E"), ("D", "E")];
    let layer2 = [
        ("A", "B"),
        ("A", "C"),
        ("A", "D"),
        ("B", "C"),
        ("B", "D"),
        ("C", "D"),
        ("A", "E"),
    ];
    LayerPair::from_labeled_edges(layer1, layer2).0
}

/// Six vertices `A..F` with three overlapping patterns:
/// `{A,B,C,D}` (I = 2), `{A,C,D}` (I = 3) and `{B,D,E,F}` (I = 8/3).
pub fn redundancy_pair() -> LayerPair {
    let layer1 = [
        ("A", "B"),
        ("A", "C"),
        ("A", "D"),
        ("B", "C"),
        ("C", "D"),
        ("E", "F"),
    ];
    let layer2 = [
        ("A", "B"),
        ("B", "C"),
        ("B", "E"),
        ("B", "F"),
        ("D", "E"),
        ("D", "F"),
        ("E", "F"),
    ];
    LayerPair::from_labeled_edges(layer1, layer2).0
}
