//! graph6 encoding.
//!
//! Header: `chr(63 + n)` for `n <= 62`, otherwise `~` followed by three
//! bytes holding `n` in 18 bits. Body: the upper triangle read column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed big-endian into 6-bit
//! groups, each stored as `chr(63 + group)`, zero-padded at the end.

use thiserror::Error;

use super::{bit, Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("malformed header at offset {offset}")]
    Header { offset: usize },
    #[error("graph order {order} exceeds the capacity of {MAX_ORDER} vertices")]
    Capacity { order: usize },
    #[error("edge data truncated at offset {offset}: expected {expected} bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("{extra} unexpected trailing bytes starting at offset {offset}")]
    Trailing { offset: usize, extra: usize },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    Padding { offset: usize },
}

fn value_at(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&byte) => Err(Graph6Error::OutOfRange { offset, byte }),
        None => Err(Graph6Error::Header { offset }),
    }
}

/// Decodes one graph6 line. A single trailing `\n` (or `\r\n`) is accepted.
pub fn from_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut text = text;
    if let Some(rest) = text.strip_suffix(b"\n") {
        text = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    if let Some(rest) = text.strip_prefix(b">>graph6<<") {
        text = rest;
    }
    if text.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (order, body_start) = if text[0] == b'~' {
        if text.get(1) == Some(&b'~') {
            // 36-bit form; only ever needed for n >= 258048
            return Err(Graph6Error::Capacity { order: 258048 });
        }
        let mut n = 0usize;
        for offset in 1..4 {
            n = (n << 6) | value_at(text, offset)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::Header { offset: 0 });
        }
        (n, 4)
    } else {
        (value_at(text, 0)? as usize, 1)
    };
    if order > MAX_ORDER {
        return Err(Graph6Error::Capacity { order });
    }

    let bits = order * order.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &text[body_start..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: body_start + body.len(),
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing {
            offset: body_start + expected,
            extra: body.len() - expected,
        });
    }

    let mut rows = vec![0u64; order];
    let (mut i, mut j) = (0usize, 1usize);
    for (idx, _) in body.iter().enumerate() {
        let offset = body_start + idx;
        let value = value_at(text, offset)?;
        for shift in (0..6).rev() {
            let position = idx * 6 + (5 - shift);
            let set = value >> shift & 1 == 1;
            if position >= bits {
                if set {
                    return Err(Graph6Error::Padding { offset });
                }
                continue;
            }
            if set {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph::from_rows(rows).expect("graph6 decoding yields a simple graph"))
}

/// Encodes a graph as graph6 bytes, without the trailing newline.
pub fn to_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    out
}

/// [`to_graph6`] as a `String`; graph6 is always ASCII.
pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(to_graph6(g)).expect("graph6 is ASCII")
}

impl Graph {
    pub fn from_graph6(text: impl AsRef<[u8]>) -> Result<Graph, Graph6Error> {
        from_graph6(text.as_ref())
    }

    pub fn to_graph6(&self) -> String {
        to_graph6_string(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_known_encodings() {
        assert_eq!(Graph::from_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(Graph::from_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(Graph::from_graph6("@").unwrap(), Graph::complete(1).unwrap());
        assert_eq!(Graph::from_graph6("?").unwrap().order(), 0);
        assert_eq!(Graph::complete(4).unwrap().to_graph6(), "C~");
        assert_eq!(Graph::edgeless(3).unwrap().to_graph6(), "B?");
    }

    #[test]
    fn petgraph_reference_string() {
        // edges a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
    }

    #[test]
    fn long_form_header() {
        let g = Graph::complete(64).unwrap();
        let text = g.to_graph6();
        assert!(text.starts_with("~?@?"));
        assert_eq!(Graph::from_graph6(&text).unwrap(), g);
        let g = Graph::cycle(63).unwrap();
        assert_eq!(Graph::from_graph6(g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(Graph::from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            Graph::from_graph6("C"),
            Err(Graph6Error::Truncated {
                offset: 1,
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            Graph::from_graph6("C~~"),
            Err(Graph6Error::Trailing {
                offset: 2,
                extra: 1
            })
        );
        assert_eq!(
            Graph::from_graph6("C\x20"),
            Err(Graph6Error::OutOfRange {
                offset: 1,
                byte: 0x20
            })
        );
        // K_3 is "Bw"; "B~" sets the three pad bits
        assert_eq!(Graph::from_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(Graph::from_graph6("B~"), Err(Graph6Error::Padding { offset: 1 }));
        assert!(matches!(
            Graph::from_graph6("~?@@"),
            Err(Graph6Error::Capacity { order: 65 })
        ));
    }

    #[test]
    fn trailing_newline_accepted() {
        assert_eq!(Graph::from_graph6("C~\n").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(Graph::from_graph6("C~\r\n").unwrap(), Graph::complete(4).unwrap());
    }
}
