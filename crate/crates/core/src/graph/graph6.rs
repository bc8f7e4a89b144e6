//! graph6 codec (printable ASCII 63..=126).
//!
//! Only the single-byte size header is produced or accepted, which covers
//! every order up to the hard cap.

use super::{Graph, MAX_N};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(BIAS + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode_graph6(s: &[u8]) -> Result<Graph> {
    let Some((&header, body)) = s.split_first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if let Some(pos) = s.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!("byte {} at offset {pos} is not graph6 printable", s[pos])));
    }
    if header == 126 {
        return Err(Error::Graph6(format!("multi-byte size header exceeds the cap of {MAX_N}")));
    }
    let n = (header - BIAS) as usize;
    if n > MAX_N {
        return Err(Error::CapExceeded { n, cap: MAX_N });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "wrong length: n = {n} needs {expected} data bytes, got {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if (nbits..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hand_encoded_examples() {
        let k3 = make_family(&Family::Complete(3)).unwrap();
        assert_eq!(encode_graph6(&k3), "Bw");
        let p3 = make_family(&Family::Path(3)).unwrap();
        assert_eq!(encode_graph6(&p3), "Bg");
        let k1 = make_family(&Family::Complete(1)).unwrap();
        assert_eq!(encode_graph6(&k1), "@");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn matches_reference_string() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode_graph6(b"").is_err());
        assert!(decode_graph6(b"B").is_err());
        assert!(decode_graph6(b"Bww").is_err());
        assert!(decode_graph6(b"B\x7f").is_err());
        assert!(decode_graph6(b"B w").is_err());
        assert!(decode_graph6(b"~?@").is_err());
        assert!(matches!(decode_graph6(b"X"), Err(Error::CapExceeded { .. })));
        // 'x' = 111001: padding bit set
        assert!(decode_graph6(b"Bx").is_err());
    }

    #[test]
    fn random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for n in 1..=12 {
            for _ in 0..1000 {
                let mut g = Graph::empty(n).unwrap();
                for i in 0..n {
                    for j in i + 1..n {
                        if rng.gen_bool(0.5) {
                            g.add_edge(i, j);
                        }
                    }
                }
                let s = encode_graph6(&g);
                assert_eq!(decode_graph6(s.as_bytes()).unwrap(), g);
            }
        }
    }
}
