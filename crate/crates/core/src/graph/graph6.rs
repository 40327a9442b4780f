//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte
//! with an offset of 63.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        push_bits(&mut out, n as u64, 18);
    } else {
        out.extend([126, 126]);
        push_bits(&mut out, n as u64, 36);
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

pub fn decode_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    let err = |offset: usize, reason| GraphError::Graph6 {
        offset: skip + offset,
        reason,
    };
    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(pos, "byte outside the printable range 63..=126"));
    }
    let six = |bytes: &[u8]| bytes.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63));
    let (n, start) = match body {
        [] => return Err(err(0, "empty input")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), 8),
        [126, 126, ..] => return Err(err(2, "truncated 36-bit vertex count")),
        [126, rest @ ..] if rest.len() >= 3 => (six(&rest[..3]), 4),
        [126, ..] => return Err(err(1, "truncated 18-bit vertex count")),
        [b, ..] => (u64::from(b - 63), 1),
    };
    let n = usize::try_from(n).map_err(|_| err(0, "vertex count does not fit in memory"))?;
    let bits = n.saturating_mul(n.saturating_sub(1)) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[start..];
    if data.len() != expected {
        let at = start + data.len().min(expected);
        return Err(err(at, "adjacency data has the wrong length"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(start + data.len() - 1, "nonzero padding bits"));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

fn push_bits(out: &mut Vec<u8>, value: u64, width: u32) {
    for shift in (0..width / 6).rev() {
        out.push(((value >> (6 * shift)) & 63) as u8 + 63);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete_graph, cycle, path};

    #[test]
    fn known_strings() {
        assert_eq!(encode_graph6(&complete_graph(4).unwrap()), "C~");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        // Example from the format description: 0-2, 0-4, 1-3, 3-4.
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(decode_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn long_size_prefix() {
        let g = path(100).unwrap();
        let s = encode_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_and_newline_are_accepted() {
        let c5 = cycle(5).unwrap();
        let s = format!(">>graph6<<{}\n", encode_graph6(&c5));
        assert_eq!(decode_graph6(&s).unwrap(), c5);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(
            decode_graph6(""),
            Err(GraphError::Graph6 { offset: 0, reason: "empty input" })
        );
        assert!(matches!(decode_graph6("C~~"), Err(GraphError::Graph6 { offset: 2, .. })));
        assert!(matches!(decode_graph6("C"), Err(GraphError::Graph6 { offset: 1, .. })));
        assert!(matches!(decode_graph6("C\x20"), Err(GraphError::Graph6 { offset: 1, .. })));
        assert!(matches!(decode_graph6("~?"), Err(GraphError::Graph6 { offset: 1, .. })));
        // K_4 uses all six bits, K_3 only three: "Bw" is K_3, "B~" sets padding.
        assert_eq!(decode_graph6("Bw").unwrap(), complete_graph(3).unwrap());
        assert!(matches!(decode_graph6("B~"), Err(GraphError::Graph6 { offset: 1, .. })));
    }
}
