//! Named graph families and the textual descriptor grammar
//! `kite:p,q | path:n | complete:n | knm:n,m | gb:p | gc:p | g6:<graph6>`.
//!
//! Numbering is clique first in ascending order, with pendants and paths
//! hanging off the highest-numbered clique vertex.

use std::fmt;
use std::str::FromStr;

use super::{decode_graph6, encode_graph6, Graph, KiteParams, MAX_N};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Kite(KiteParams),
    Path(usize),
    Complete(usize),
    /// `K_{n-m}` with `m` pendant edges at one clique vertex.
    Knm { n: usize, m: usize },
    /// `knm(p + 2, 2)`.
    Gb(usize),
    /// `K_p` with one pendant at each of two distinct clique vertices.
    Gc(usize),
    Graph6(String),
}

/// `K_p` with a path of `q` further vertices attached at vertex `p - 1`.
pub fn make_kite(params: KiteParams) -> Result<Graph> {
    let KiteParams { p, q } = params;
    if p < 1 {
        return Err(Error::InvalidParams("kite needs p >= 1".into()));
    }
    let n = p + q;
    let mut g = Graph::empty(n)?;
    add_clique(&mut g, p);
    for v in p..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

pub fn make_family(family: &Family) -> Result<Graph> {
    match *family {
        Family::Kite(params) => make_kite(params),
        Family::Path(n) => {
            if n == 0 {
                return Graph::empty(0);
            }
            make_kite(KiteParams { p: 1, q: n - 1 })
        }
        Family::Complete(n) => {
            let mut g = Graph::empty(n)?;
            add_clique(&mut g, n);
            Ok(g)
        }
        Family::Knm { n, m } => knm(n, m),
        Family::Gb(p) => {
            if p < 1 {
                return Err(Error::InvalidParams("gb needs p >= 1".into()));
            }
            knm(p + 2, 2)
        }
        Family::Gc(p) => {
            if p < 3 {
                return Err(Error::InvalidParams(format!("gc needs p >= 3, got {p}")));
            }
            let mut g = Graph::empty(p + 2)?;
            add_clique(&mut g, p);
            g.add_edge(p - 1, p);
            g.add_edge(p - 2, p + 1);
            Ok(g)
        }
        Family::Graph6(ref s) => decode_graph6(s.as_bytes()),
    }
}

fn knm(n: usize, m: usize) -> Result<Graph> {
    if m >= n {
        return Err(Error::InvalidParams(format!("knm needs m < n, got n = {n}, m = {m}")));
    }
    let core = n - m;
    let mut g = Graph::empty(n)?;
    add_clique(&mut g, core);
    for v in core..n {
        g.add_edge(core - 1, v);
    }
    Ok(g)
}

fn add_clique(g: &mut Graph, k: usize) {
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v);
        }
    }
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        make_family(self)
    }

    /// Kite parameters when the descriptor names a kite.
    pub fn kite_params(&self) -> Option<KiteParams> {
        match *self {
            Family::Kite(params) => Some(params),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Kite(KiteParams { p, q }) => write!(f, "kite:{p},{q}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Knm { n, m } => write!(f, "knm:{n},{m}"),
            Family::Gb(p) => write!(f, "gb:{p}"),
            Family::Gc(p) => write!(f, "gc:{p}"),
            Family::Graph6(s) => write!(f, "g6:{s}"),
        }
    }
}

impl From<&Graph> for Family {
    fn from(g: &Graph) -> Self {
        Family::Graph6(encode_graph6(g))
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses a descriptor; errors carry the 0-based byte offset of the offending token.
    fn from_str(raw: &str) -> Result<Self> {
        let Some(colon) = raw.find(':') else {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected `<family>:<args>`, got {raw:?}"),
            });
        };
        let (name, args) = (&raw[..colon], &raw[colon + 1..]);
        let args_pos = colon + 1;
        let family = match name {
            "kite" => {
                let [p, q] = parse_ints::<2>(args, args_pos)?;
                if p < 1 {
                    return Err(Error::Parse { pos: args_pos, msg: "kite needs p >= 1".into() });
                }
                Family::Kite(KiteParams { p, q })
            }
            "path" => Family::Path(parse_ints::<1>(args, args_pos)?[0]),
            "complete" => Family::Complete(parse_ints::<1>(args, args_pos)?[0]),
            "knm" => {
                let [n, m] = parse_ints::<2>(args, args_pos)?;
                if m >= n {
                    let pos = args_pos + args.find(',').map_or(0, |c| c + 1);
                    return Err(Error::Parse { pos, msg: format!("knm needs m < n, got m = {m}") });
                }
                Family::Knm { n, m }
            }
            "gb" => Family::Gb(parse_ints::<1>(args, args_pos)?[0]),
            "gc" => {
                let p = parse_ints::<1>(args, args_pos)?[0];
                if p < 3 {
                    return Err(Error::Parse { pos: args_pos, msg: "gc needs p >= 3".into() });
                }
                Family::Gc(p)
            }
            "g6" => {
                decode_graph6(args.as_bytes()).map_err(|e| Error::Parse {
                    pos: args_pos,
                    msg: e.to_string(),
                })?;
                Family::Graph6(args.to_string())
            }
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!(
                        "unknown family {name:?}; expected one of kite, path, complete, knm, gb, gc, g6"
                    ),
                })
            }
        };
        // Reject descriptors whose graph would exceed the cap before anything is built.
        let order = match family {
            Family::Kite(KiteParams { p, q }) => p + q,
            Family::Path(n) | Family::Complete(n) | Family::Knm { n, .. } => n,
            Family::Gb(p) | Family::Gc(p) => p + 2,
            Family::Graph6(_) => 0,
        };
        if order > MAX_N {
            return Err(Error::Parse {
                pos: args_pos,
                msg: format!("graph order {order} exceeds the cap of {MAX_N}"),
            });
        }
        Ok(family)
    }
}

fn parse_ints<const K: usize>(args: &str, offset: usize) -> Result<[usize; K]> {
    let mut out = [0usize; K];
    let mut pos = offset;
    let mut parts = args.split(',');
    for (i, slot) in out.iter_mut().enumerate() {
        let Some(tok) = parts.next() else {
            return Err(Error::Parse { pos, msg: format!("expected {K} comma-separated integers") });
        };
        *slot = tok.trim().parse().map_err(|_| Error::Parse {
            pos,
            msg: format!("argument {} is not a non-negative integer: {tok:?}", i + 1),
        })?;
        pos += tok.len() + 1;
    }
    if parts.next().is_some() {
        return Err(Error::Parse { pos: pos - 1, msg: format!("too many arguments, expected {K}") });
    }
    Ok(out)
}
