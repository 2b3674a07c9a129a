//! Textual graph descriptions.
//!
//! ```text
//! expr  := term ('+' term)*              disjoint union
//! term  := [count '*'] atom              that many disjoint copies
//! atom  := '(' expr ')'
//!        | K<n> | I<n> | C<n> | P<n>      complete, edgeless, cycle, path
//!        | T<r>(<n>)                     Turán graph
//!        | CT<r>(<m>) | CT<r>(<m>,<Δ>)   colex Turán graph, optionally degree-capped
//!        | split(<u>,<s>)                K_u ∨ I_s
//!        | L(<u>,<Δ>,<ω>)                lower bound graph
//!        | lb(<u>,<Δ>,<ω>,<p>)           qL ∪ rK_u with p cliques of size u
//!        | join(<expr>,<expr>)
//!        | rand(<n>,<percent>)           G(n, percent/100), seeded
//!        | g6:<graph6>
//! ```
//!
//! A whole input that names an existing file or ends in `.g6` is read as a
//! graph6 file (first graph); anything else that fails to parse is tried as
//! a bare graph6 string.

use std::fmt;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use turan_core::bounds::ParamTriple;
use turan_core::constructions;
use turan_core::{graph6, Graph};

use crate::corpus::random_graph;
use crate::error::{Error, Result};
use crate::io::read_g6_file;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Complete { n: usize },
    Empty { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Turan { r: usize, n: usize },
    Colex { r: usize, m: usize, max_degree: Option<usize> },
    Split { u: usize, s: usize },
    LowerBound { u: usize, delta: usize, omega: usize },
    LbFamily { u: usize, delta: usize, omega: usize, p: usize },
    Random { n: usize, percent: u32 },
    Graph6 { code: String },
    File { path: String },
    Copies { k: usize, of: Box<Family> },
    Union { parts: Vec<Family> },
    Join { left: Box<Family>, right: Box<Family> },
}

impl Family {
    /// Builds the graph; `seed` drives `rand(..)` atoms.
    pub fn build(&self, seed: u64) -> Result<Graph> {
        Ok(match self {
            Family::Complete { n } => Graph::complete(*n)?,
            Family::Empty { n } => Graph::empty(*n)?,
            Family::Cycle { n } => Graph::cycle(*n)?,
            Family::Path { n } => Graph::path(*n)?,
            Family::Turan { r, n } => constructions::turan(*r, *n)?,
            Family::Colex { r, m, max_degree: None } => constructions::colex_turan(*r, *m)?,
            Family::Colex { r, m, max_degree: Some(d) } => constructions::capped_colex_turan(*r, *m, *d)?,
            Family::Split { u, s } => constructions::complete_split(*u, *s)?,
            Family::LowerBound { u, delta, omega } => {
                constructions::lower_bound_graph(&ParamTriple::relaxed(*u, *delta, *omega)?)?
            }
            Family::LbFamily { u, delta, omega, p } => {
                constructions::lb_family(&ParamTriple::relaxed(*u, *delta, *omega)?, *p)?
            }
            Family::Random { n, percent } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                random_graph(&mut rng, *n, f64::from(*percent) / 100.0)?
            }
            Family::Graph6 { code } => graph6::decode(code)?,
            Family::File { path } => read_g6_file(Path::new(path))?
                .into_iter()
                .next()
                .ok_or_else(|| Error::Family { input: path.clone(), reason: "file holds no graphs".into() })?,
            Family::Copies { k, of } => {
                let g = of.build(seed)?;
                Graph::disjoint_union(&[(&g, *k)])?
            }
            Family::Union { parts } => {
                let graphs = parts.iter().map(|p| p.build(seed)).collect::<Result<Vec<_>>>()?;
                let refs: Vec<(&Graph, usize)> = graphs.iter().map(|g| (g, 1)).collect();
                Graph::disjoint_union(&refs)?
            }
            Family::Join { left, right } => left.build(seed)?.join(&right.build(seed)?)?,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete { n } => write!(f, "K{n}"),
            Family::Empty { n } => write!(f, "I{n}"),
            Family::Cycle { n } => write!(f, "C{n}"),
            Family::Path { n } => write!(f, "P{n}"),
            Family::Turan { r, n } => write!(f, "T{r}({n})"),
            Family::Colex { r, m, max_degree: None } => write!(f, "CT{r}({m})"),
            Family::Colex { r, m, max_degree: Some(d) } => write!(f, "CT{r}({m},{d})"),
            Family::Split { u, s } => write!(f, "split({u},{s})"),
            Family::LowerBound { u, delta, omega } => write!(f, "L({u},{delta},{omega})"),
            Family::LbFamily { u, delta, omega, p } => write!(f, "lb({u},{delta},{omega},{p})"),
            Family::Random { n, percent } => write!(f, "rand({n},{percent})"),
            Family::Graph6 { code } => write!(f, "g6:{code}"),
            Family::File { path } => write!(f, "{path}"),
            Family::Copies { k, of } => match **of {
                Family::Union { .. } => write!(f, "{k}*({of})"),
                _ => write!(f, "{k}*{of}"),
            },
            Family::Union { parts } => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Family::Join { left, right } => write!(f, "join({left},{right})"),
        }
    }
}

pub fn parse(input: &str) -> Result<Family> {
    let trimmed = input.trim();
    if trimmed.ends_with(".g6") || Path::new(trimmed).is_file() {
        return Ok(Family::File { path: trimmed.to_string() });
    }
    let mut p = Parser { s: trimmed.as_bytes(), pos: 0 };
    let parsed = p.expr().and_then(|fam| {
        if p.pos == p.s.len() {
            Ok(fam)
        } else {
            Err(format!("unexpected {:?} at offset {}", p.rest(), p.pos))
        }
    });
    match parsed {
        Ok(fam) => Ok(fam),
        Err(reason) => match graph6::decode(trimmed) {
            Ok(_) => Ok(Family::Graph6 { code: trimmed.to_string() }),
            Err(_) => Err(Error::Family { input: input.to_string(), reason }),
        },
    }
}

/// Parses and builds in one step.
pub fn build(input: &str, seed: u64) -> Result<Graph> {
    parse(input)?.build(seed)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

type PResult<T> = std::result::Result<T, String>;

impl Parser<'_> {
    fn rest(&self) -> &str {
        std::str::from_utf8(&self.s[self.pos..]).unwrap_or("")
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(format!("expected {:?} at offset {}", c as char, self.pos))
        }
    }

    fn number(&mut self) -> PResult<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(format!("expected a number at offset {start}"));
        }
        self.rest_from(start).parse().map_err(|e| format!("{e}"))
    }

    fn rest_from(&self, start: usize) -> &str {
        std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("")
    }

    fn args(&mut self, count: std::ops::RangeInclusive<usize>) -> PResult<Vec<usize>> {
        self.expect(b'(')?;
        let mut out = vec![self.number()?];
        while self.eat(b',') {
            out.push(self.number()?);
        }
        self.expect(b')')?;
        if !count.contains(&out.len()) {
            return Err(format!("wrong number of arguments before offset {}", self.pos));
        }
        Ok(out)
    }

    fn expr(&mut self) -> PResult<Family> {
        let mut parts = vec![self.term()?];
        while self.eat(b'+') {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Family::Union { parts } })
    }

    fn term(&mut self) -> PResult<Family> {
        let save = self.pos;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.number()?;
            if self.eat(b'*') {
                return Ok(Family::Copies { k, of: Box::new(self.atom()?) });
            }
            self.pos = save;
        }
        self.atom()
    }

    fn atom(&mut self) -> PResult<Family> {
        if self.eat(b'(') {
            let inner = self.expr()?;
            self.expect(b')')?;
            return Ok(inner);
        }
        if self.s[self.pos..].starts_with(b"g6:") {
            self.pos += 3;
            let start = self.pos;
            while self.peek().is_some_and(|c| (63..=126).contains(&c)) {
                self.pos += 1;
            }
            return Ok(Family::Graph6 { code: self.rest_from(start).to_string() });
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let name = self.rest_from(start).to_string();
        match name.as_str() {
            "K" | "I" | "C" | "P" => {
                let n = self.number()?;
                Ok(match name.as_str() {
                    "K" => Family::Complete { n },
                    "I" => Family::Empty { n },
                    "C" => Family::Cycle { n },
                    _ => Family::Path { n },
                })
            }
            "T" => {
                let r = self.number()?;
                let a = self.args(1..=1)?;
                Ok(Family::Turan { r, n: a[0] })
            }
            "CT" => {
                let r = self.number()?;
                let a = self.args(1..=2)?;
                Ok(Family::Colex { r, m: a[0], max_degree: a.get(1).copied() })
            }
            "split" => {
                let a = self.args(2..=2)?;
                Ok(Family::Split { u: a[0], s: a[1] })
            }
            "L" => {
                let a = self.args(3..=3)?;
                Ok(Family::LowerBound { u: a[0], delta: a[1], omega: a[2] })
            }
            "lb" => {
                let a = self.args(4..=4)?;
                Ok(Family::LbFamily { u: a[0], delta: a[1], omega: a[2], p: a[3] })
            }
            "rand" => {
                let a = self.args(2..=2)?;
                let percent = u32::try_from(a[1]).ok().filter(|&p| p <= 100);
                let percent = percent.ok_or_else(|| "edge percentage must be at most 100".to_string())?;
                Ok(Family::Random { n: a[0], percent })
            }
            "join" => {
                self.expect(b'(')?;
                let left = self.expr()?;
                self.expect(b',')?;
                let right = self.expr()?;
                self.expect(b')')?;
                Ok(Family::Join { left: Box::new(left), right: Box::new(right) })
            }
            "" => Err(format!("expected a graph at offset {start}")),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use turan_core::canon::is_isomorphic;
    use turan_core::constructions::{capped_colex_turan, turan};

    fn g(s: &str) -> Graph {
        build(s, 0).unwrap()
    }

    #[test]
    fn atoms() {
        assert_eq!(g("K4"), Graph::complete(4).unwrap());
        assert_eq!(g("T4(6)"), turan(4, 6).unwrap());
        assert_eq!(g("CT4(17,5)"), capped_colex_turan(4, 17, 5).unwrap());
        assert_eq!(g("split(2,3)").size(), 7);
        assert_eq!(g("L(1,5,4)"), turan(4, 6).unwrap());
        assert_eq!(g("lb(1,2,3,10)").order(), 10);
        assert_eq!(g("g6:C~"), Graph::complete(4).unwrap());
        assert_eq!(g("C~"), Graph::complete(4).unwrap());
    }

    #[test]
    fn compound() {
        let x = g("7*T4(6)");
        assert_eq!((x.order(), x.size()), (42, 91));
        let y = g("K3+2*K2+I1");
        assert_eq!((y.order(), y.size()), (8, 5));
        assert!(is_isomorphic(&g("join(K1,P3)"), &g("join(K2,I2)")));
        assert_eq!(g("2*(K1+K2)").order(), 6);
        assert_eq!(g("rand(10,50)"), g("rand(10,50)"));
    }

    #[test]
    fn display_round_trips() {
        for s in ["K4", "7*T4(6)+K1", "join(K1,P3)", "CT4(17,5)", "2*(K1+K2)", "lb(2,2,3,4)"] {
            assert_eq!(parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn errors() {
        assert!(parse("Q5").is_err());
        assert!(parse("T4(").is_err());
        assert!(parse("split(1)").is_err());
        assert!(parse("K3+").is_err());
        assert!(parse("rand(5,150)").is_err());
    }
}
