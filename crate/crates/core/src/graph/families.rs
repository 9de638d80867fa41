use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// The four two-vertex attachments to a shortest cycle that arise when two
/// adjacent outside vertices hang off distinct cycle vertices.
///
/// Cycle vertices are `0..g` in cyclic order, then `u = g`, `v = g + 1`,
/// always with `u ~ v` and `u ~ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gadget {
    /// C6, `v` on the antipodal vertex 3.
    G1,
    /// C5, `v` on vertex 2.
    G2,
    /// C4, `v` on the neighbor 1 of `u`'s attachment.
    G3,
    /// C4, `v` on the opposite vertex 2.
    G4,
}

impl Gadget {
    pub const ALL: [Gadget; 4] = [Gadget::G1, Gadget::G2, Gadget::G3, Gadget::G4];

    /// (cycle length, cycle index that `v` attaches to)
    fn shape(self) -> (usize, usize) {
        match self {
            Gadget::G1 => (6, 3),
            Gadget::G2 => (5, 2),
            Gadget::G3 => (4, 1),
            Gadget::G4 => (4, 2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown gadget {0:?}; expected G1, G2, G3 or G4")]
pub struct ParseGadgetError(pub String);

impl FromStr for Gadget {
    type Err = ParseGadgetError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "G1" | "1" => Ok(Gadget::G1),
            "G2" | "2" => Ok(Gadget::G2),
            "G3" | "3" => Ok(Gadget::G3),
            "G4" | "4" => Ok(Gadget::G4),
            _ => Err(ParseGadgetError(s.to_string())),
        }
    }
}

impl fmt::Display for Gadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn at_least(what: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidArgument(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

impl Graph {
    pub fn cycle(n: usize) -> Result<Self> {
        at_least("cycle", n, 3)?;
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        at_least("path", n, 1)?;
        let mut g = Self::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        at_least("complete graph", n, 1)?;
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// `K_{r1,...,rt}`; parts occupy consecutive vertex ranges in the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument("parts must be a non-empty list of positive sizes".into()));
        }
        let n: usize = parts.iter().sum();
        let mut g = Self::empty(n)?;
        let mut part_of = Vec::with_capacity(n);
        for (i, &r) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, r));
        }
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// The unicyclic graph `U_t`: a `g`-cycle on `0..g` with `t` pendant
    /// vertices `g..g+t` all attached to vertex 0.
    pub fn u_t(g: usize, t: usize) -> Result<Self> {
        at_least("U_t cycle", g, 3)?;
        let mut out = Self::empty(g + t)?;
        for v in 0..g {
            out.add_edge(v, (v + 1) % g);
        }
        for p in g..g + t {
            out.add_edge(0, p);
        }
        Ok(out)
    }

    pub fn gadget(which: Gadget) -> Self {
        let (len, attach) = which.shape();
        let (u, v) = (len, len + 1);
        let mut g = Self::empty(len + 2).expect("gadget size in range");
        for i in 0..len {
            g.add_edge(i, (i + 1) % len);
        }
        g.add_edge(u, v);
        g.add_edge(u, 0);
        g.add_edge(v, attach);
        g
    }
}
