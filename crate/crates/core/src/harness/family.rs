//! Graph families for campaigns, with a small text syntax.

use std::fmt;
use std::str::FromStr;

use super::generators::{gnp, kneser, mycielski, split_seed};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{is_free, Recipe};

/// Edge probabilities cycled through when a random family leaves `p` open.
pub const P_GRID: [f64; 3] = [0.2, 0.5, 0.8];

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    /// `depth` Mycielski steps from K2; χ = depth + 2, ω = 2.
    Mycielski(usize),
    Path(usize),
    Cycle(usize),
    Kneser(usize, usize),
    Complete(usize),
    Empty(usize),
    Bad(Recipe),
    /// G(n, p); `None` cycles through [`P_GRID`] by sample index.
    Gnp {
        n: usize,
        p: Option<f64>,
    },
}

/// One generated graph and how it was drawn.
#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub index: usize,
    pub seed: u64,
    pub p: Option<f64>,
    /// Draws needed before the graph passed the freeness filter.
    pub attempts: u64,
    pub graph: Graph,
}

impl FamilySpec {
    pub fn is_random(&self) -> bool {
        matches!(self, FamilySpec::Gnp { .. })
    }

    /// The graph of a deterministic family.
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Mycielski(d) => mycielski(*d),
            FamilySpec::Path(n) => Graph::path(*n),
            FamilySpec::Cycle(n) => Graph::cycle(*n),
            FamilySpec::Kneser(n, k) => kneser(*n, *k),
            FamilySpec::Complete(n) => Graph::complete(*n),
            FamilySpec::Empty(n) => Graph::empty(*n),
            FamilySpec::Bad(r) => r.evaluate(),
            FamilySpec::Gnp { .. } => Err(Error::input("gnp is a random family; use sample")),
        }
    }

    /// Known (χ, ω) for families where both are analytic.
    pub fn known_invariants(&self) -> Option<(usize, usize)> {
        match *self {
            FamilySpec::Mycielski(d) => Some((d + 2, 2)),
            FamilySpec::Complete(n) => Some((n, n)),
            FamilySpec::Empty(n) => Some((n.min(1), n.min(1))),
            FamilySpec::Path(n) => Some((n.min(2), n.min(2))),
            FamilySpec::Kneser(n, k) if n >= 2 * k && k >= 1 => Some((n - 2 * k + 2, n / k)),
            _ => None,
        }
    }

    /// Sample `index` of the family. Random families draw from
    /// `split_seed(seed, index)` and its successors, rejecting graphs that
    /// contain `free_of`; `max_attempts` bounds the rejection loop.
    pub fn sample(
        &self,
        index: usize,
        seed: u64,
        free_of: Option<&crate::patterns::PatternSpec>,
        max_attempts: u64,
    ) -> Result<Sample> {
        let FamilySpec::Gnp { n, p } = *self else {
            let graph = self.build()?;
            if let Some(spec) = free_of {
                if !is_free(&graph, spec)? {
                    return Err(Error::input(format!("{self} contains {spec}")));
                }
            }
            return Ok(Sample { index, seed, p: None, attempts: 1, graph });
        };
        let p = p.unwrap_or(P_GRID[index % P_GRID.len()]);
        let base = split_seed(seed, index as u64);
        for attempt in 0..max_attempts {
            let s = split_seed(base, attempt);
            let graph = gnp(n, p, s)?;
            let ok = match free_of {
                Some(spec) => is_free(&graph, spec)?,
                None => true,
            };
            if ok {
                return Ok(Sample { index, seed: s, p: Some(p), attempts: attempt + 1, graph });
            }
        }
        Err(Error::resource(format!("no free sample after {max_attempts} draws (n = {n}, p = {p})")))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Mycielski(d) => write!(f, "mycielski({d})"),
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Kneser(n, k) => write!(f, "kneser({n},{k})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::Empty(n) => write!(f, "empty({n})"),
            FamilySpec::Bad(r) => write!(f, "bad({r})"),
            FamilySpec::Gnp { n, p: None } => write!(f, "gnp({n})"),
            FamilySpec::Gnp { n, p: Some(p) } => write!(f, "gnp({n},{p})"),
        }
    }
}

/// Parses `name(args)`. `gnp` alone is accepted by [`FamilySpec::parse_with_n`].
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilySpec::parse_with_n(s, None)
    }
}

impl FamilySpec {
    /// As `FromStr`, letting a bare size-taking family name borrow `n`.
    pub fn parse_with_n(s: &str, n: Option<usize>) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(i) => {
                if !s.ends_with(')') {
                    return Err(Error::parse(s.len(), "expected ')'"));
                }
                (&s[..i], &s[i + 1..s.len() - 1])
            }
            None => (s, ""),
        };
        let name = name.trim().to_ascii_lowercase();
        if name == "bad" {
            let r: crate::patterns::PatternSpec = args.parse()?;
            return match r {
                crate::patterns::PatternSpec::Bad(recipe) => Ok(FamilySpec::Bad(recipe)),
                other => Ok(FamilySpec::Bad(Recipe::Leaf(other.build()?.graph))),
            };
        }
        let parts: Vec<&str> =
            if args.trim().is_empty() { Vec::new() } else { args.split(',').map(str::trim).collect() };
        let int = |i: usize| -> Result<usize> {
            match parts.get(i) {
                Some(t) => t.parse().map_err(|_| Error::input(format!("bad integer {t:?} in {s}"))),
                None => n.ok_or_else(|| Error::input(format!("{s}: missing size"))),
            }
        };
        let spec = match name.as_str() {
            "mycielski" => FamilySpec::Mycielski(int(0)?),
            "path" => FamilySpec::Path(int(0)?),
            "cycle" => FamilySpec::Cycle(int(0)?),
            "complete" => FamilySpec::Complete(int(0)?),
            "empty" => FamilySpec::Empty(int(0)?),
            "kneser" => {
                let k = parts
                    .get(1)
                    .ok_or_else(|| Error::input("kneser needs (n,k)"))?
                    .parse()
                    .map_err(|_| Error::input("bad kneser k"))?;
                FamilySpec::Kneser(int(0)?, k)
            }
            "gnp" => {
                let p = match parts.get(1) {
                    Some(t) => {
                        let p: f64 = t.parse().map_err(|_| Error::input(format!("bad probability {t:?}")))?;
                        if !(0.0..=1.0).contains(&p) {
                            return Err(Error::input(format!("probability {p} outside [0, 1]")));
                        }
                        Some(p)
                    }
                    None => None,
                };
                FamilySpec::Gnp { n: int(0)?, p }
            }
            other => return Err(Error::input(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}
