use super::{Graph, MAX_VERTICES};
use crate::error::Graph6Error;

const BIAS: u8 = 63;

impl Graph {
    /// Decodes a single graph6 line. Surrounding whitespace and an optional
    /// `>>graph6<<` header are ignored.
    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        let mut s = text.trim();
        if let Some(rest) = s.strip_prefix(">>graph6<<") {
            s = rest;
        }
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(Graph6Error::Empty);
        }
        for (pos, &b) in bytes.iter().enumerate() {
            if !(BIAS..=126).contains(&b) {
                return Err(Graph6Error::BadChar { pos, ch: b as char });
            }
        }

        let (n, body) = if bytes[0] == 126 {
            if bytes.len() < 4 || bytes[1] == 126 {
                return Err(Graph6Error::BadHeader);
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            if n <= 62 {
                return Err(Graph6Error::BadHeader);
            }
            (n, &bytes[4..])
        } else {
            ((bytes[0] - BIAS) as usize, &bytes[1..])
        };
        if n == 0 || n > MAX_VERTICES {
            return Err(Graph6Error::OutOfRange(n));
        }

        let nbits = n * (n - 1) / 2;
        let expected = nbits.div_ceil(6);
        if body.len() != expected {
            return Err(Graph6Error::Length { expected, found: body.len() });
        }
        let pad = expected * 6 - nbits;
        if pad > 0 && (body[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits);
        }

        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let bit = (body[k / 6] - BIAS) >> (5 - k % 6) & 1;
                if bit == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Ok(Graph { n, adj })
    }

    /// Encodes the graph as graph6, without a trailing newline.
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
        if n <= 62 {
            out.push(n as u8 + BIAS);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 0x3f) as u8 + BIAS);
            }
        }
        let mut acc = 0u8;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                k += 1;
                if k == 6 {
                    out.push(acc + BIAS);
                    acc = 0;
                    k = 0;
                }
            }
        }
        if k > 0 {
            out.push((acc << (6 - k)) + BIAS);
        }
        String::from_utf8(out).expect("graph6 output is ASCII")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_bw() {
        // bits x01 x02 x12 = 111, padded to 111000 = 56, + 63 = 'w'
        let g = Graph::from_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c3.to_graph6(), "Bw");
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_graph6("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(g.to_graph6(), "@");
    }

    #[test]
    fn hand_encoded_path() {
        // P4 0-1-2-3: bits x01 x02 x12 x03 x13 x23 = 1 0 1 0 0 1 = 41 -> 'h'
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.to_graph6(), "Ch");
    }

    #[test]
    fn errors() {
        assert_eq!(Graph::from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(Graph::from_graph6("?"), Err(Graph6Error::OutOfRange(0)));
        assert_eq!(Graph::from_graph6("Bx"), Err(Graph6Error::TrailingBits));
        assert!(matches!(Graph::from_graph6("Bww"), Err(Graph6Error::Length { .. })));
        assert!(matches!(Graph::from_graph6("B\u{7f}"), Err(Graph6Error::BadChar { pos: 1, .. })));
        assert!(matches!(Graph::from_graph6("B w"), Err(Graph6Error::BadChar { pos: 1, .. })));
        assert_eq!(Graph::from_graph6("~?@"), Err(Graph6Error::BadHeader));
        // extended header must not encode n <= 62
        assert_eq!(Graph::from_graph6("~???"), Err(Graph6Error::BadHeader));
        // 65 = 0b000000_000001_000001
        assert_eq!(Graph::from_graph6("~?@@"), Err(Graph6Error::OutOfRange(65)));
    }

    #[test]
    fn extended_header_for_63_and_64() {
        for n in [62, 63, 64] {
            let mut g = Graph::empty(n).unwrap();
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
            g.add_edge(0, n - 1);
            let s = g.to_graph6();
            if n > 62 {
                assert!(s.starts_with('~'));
                assert_eq!(s.as_bytes()[3], (n & 0x3f) as u8 + 63);
            }
            assert_eq!(Graph::from_graph6(&s).unwrap(), g);
        }
    }
}
