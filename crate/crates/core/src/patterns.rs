//! Pattern graphs (paths, brooms, 2P4, forests, cone/union closures) and
//! induced-subgraph detection with witnesses.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{emit_g6, parse_g6, Graph, GraphBuilder, VertexSet};

/// Construction tree for a graph built from explicit leaves by cones and
/// disjoint unions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Leaf(Graph),
    Cone(Box<Recipe>),
    Union(Box<Recipe>, Box<Recipe>),
}

impl Recipe {
    pub fn evaluate(&self) -> Result<Graph> {
        match self {
            Recipe::Leaf(g) => Ok(g.clone()),
            Recipe::Cone(r) => r.evaluate()?.cone(),
            Recipe::Union(a, b) => a.evaluate()?.disjoint_union(&b.evaluate()?),
        }
    }

    /// Nesting depth of cone operations along the deepest branch.
    pub fn cone_depth(&self) -> usize {
        match self {
            Recipe::Leaf(_) => 0,
            Recipe::Cone(r) => 1 + r.cone_depth(),
            Recipe::Union(a, b) => a.cone_depth().max(b.cone_depth()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    /// Induced path on `k ≥ 1` vertices.
    Path(usize),
    /// A `k`-vertex path with `d` leaves attached to one end.
    Broom {
        k: usize,
        d: usize,
    },
    TwoP4,
    /// An explicit acyclic graph.
    Forest(Graph),
    Bad(Recipe),
}

/// A built pattern with its distinguished vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub graph: Graph,
    /// Path vertices in order for paths and brooms, starting at the broom end.
    pub path: Vec<usize>,
    /// Bristles of a broom.
    pub bristles: Vec<usize>,
}

impl Pattern {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Checks that `w` is an induced embedding of this pattern into `g`.
    pub fn verify(&self, g: &Graph, w: &PatternWitness) -> bool {
        let h = &self.graph;
        if w.map.len() != h.n() || w.map.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut used = VertexSet::empty(g.n());
        for &v in &w.map {
            if used.contains(v) {
                return false;
            }
            used.insert(v);
        }
        (0..h.n()).all(|i| (0..i).all(|j| h.adjacent(i, j) == g.adjacent(w.map[i], w.map[j])))
    }
}

/// `map[i]` is the host vertex playing pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternWitness {
    pub map: Vec<usize>,
}

impl PatternWitness {
    /// Host vertices used, as a set.
    pub fn image(&self, host_n: usize) -> VertexSet {
        let mut s = VertexSet::empty(host_n);
        for &v in &self.map {
            s.insert(v);
        }
        s
    }
}

fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

impl PatternSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            PatternSpec::Path(0) => Err(Error::input("a path needs at least one vertex")),
            PatternSpec::Broom { k: 0, .. } => Err(Error::input("a broom needs k ≥ 1")),
            PatternSpec::Forest(g) if !is_forest(g) => Err(Error::input("forest pattern contains a cycle")),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Pattern> {
        self.validate()?;
        let plain = |graph: Graph| Pattern { graph, path: Vec::new(), bristles: Vec::new() };
        match self {
            PatternSpec::Path(k) => {
                Ok(Pattern { graph: Graph::path(*k)?, path: (0..*k).collect(), bristles: Vec::new() })
            }
            PatternSpec::Broom { k, d } => {
                let mut b = GraphBuilder::new(k + d)?;
                for i in 1..*k {
                    b.add_edge(i - 1, i)?;
                }
                for j in *k..k + d {
                    b.add_edge(0, j)?;
                }
                Ok(Pattern { graph: b.build(), path: (0..*k).collect(), bristles: (*k..k + d).collect() })
            }
            PatternSpec::TwoP4 => {
                let p4 = Graph::path(4)?;
                Ok(plain(p4.disjoint_union(&p4)?))
            }
            PatternSpec::Forest(g) => Ok(plain(g.clone())),
            PatternSpec::Bad(r) => Ok(plain(r.evaluate()?)),
        }
    }
}

/// Search order over pattern vertices: the highest-degree vertex first, then
/// repeatedly the vertex with most already-placed neighbours (ties by degree,
/// then index).
fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let p = (0..n)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| (links[p], h.degree(p), std::cmp::Reverse(p)))
            .expect("an unplaced vertex remains");
        placed[p] = true;
        order.push(p);
        for q in h.nbrs(p).iter() {
            links[q] += 1;
        }
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    /// Host vertices whose degree is at least that of the pattern vertex.
    roomy: Vec<VertexSet>,
    map: Vec<usize>,
    used: VertexSet,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.roomy[depth].difference(&self.used);
        for &q in &self.order[..depth] {
            let image = self.g.nbrs(self.map[q]);
            if self.h.adjacent(p, q) {
                cand.intersect_with(&image);
            } else {
                cand.subtract(&image);
            }
            if cand.is_empty() {
                return false;
            }
        }
        for v in cand.iter() {
            self.map[p] = v;
            self.used.insert(v);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(v);
        }
        false
    }
}

/// Finds an induced copy of `spec` in `g`.
///
/// Host candidates are tried in increasing order along [`search_order`], so
/// the returned witness is the least one when its images are listed in that
/// order.
pub fn find_induced(g: &Graph, spec: &PatternSpec) -> Result<Option<PatternWitness>> {
    let pattern = spec.build()?;
    Ok(find_pattern(g, &pattern))
}

pub fn find_pattern(g: &Graph, pattern: &Pattern) -> Option<PatternWitness> {
    let h = &pattern.graph;
    if h.n() > g.n() {
        return None;
    }
    let order = search_order(h);
    let roomy = order
        .iter()
        .map(|&p| {
            let need = h.degree(p);
            let mut s = VertexSet::empty(g.n());
            for v in (0..g.n()).filter(|&v| g.degree(v) >= need) {
                s.insert(v);
            }
            s
        })
        .collect();
    let mut m = Matcher { g, h, order, roomy, map: vec![0; h.n()], used: VertexSet::empty(g.n()) };
    m.extend(0).then_some(PatternWitness { map: m.map })
}

pub fn is_free(g: &Graph, spec: &PatternSpec) -> Result<bool> {
    Ok(find_induced(g, spec)?.is_none())
}

/// Edge-by-edge check of the induced-embedding conditions.
pub fn verify_witness(g: &Graph, spec: &PatternSpec, w: &PatternWitness) -> Result<bool> {
    Ok(spec.build()?.verify(g, w))
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Leaf(g) => write!(f, "graph({})", emit_g6(g)),
            Recipe::Cone(r) => write!(f, "cone({r})"),
            Recipe::Union(a, b) => write!(f, "union({a},{b})"),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Path(k) => write!(f, "P{k}"),
            PatternSpec::Broom { k, d } => write!(f, "broom({k},{d})"),
            PatternSpec::TwoP4 => write!(f, "2P4"),
            PatternSpec::Forest(g) => write!(f, "forest({})", emit_g6(g)),
            PatternSpec::Bad(r) => write!(f, "{r}"),
        }
    }
}

/// Grammar, whitespace-insensitive:
///
/// ```text
/// spec := "P" int | "2P4" | "broom(" int "," int ")" | "forest(" g6 ")"
///       | "graph(" g6 ")" | "cone(" spec ")" | "union(" spec "," spec ")"
/// ```
///
/// `cone` and `union` produce [`PatternSpec::Bad`] recipes whose leaves are
/// the built graphs of the inner specs.
impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: Vec<(usize, u8)> = s.bytes().enumerate().filter(|(_, b)| !b.is_ascii_whitespace()).collect();
        let mut p = SpecParser { text: &compact, pos: 0, len: s.len() };
        let spec = p.spec()?;
        if p.pos < compact.len() {
            return Err(Error::parse(p.offset(), "trailing characters after pattern"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

struct SpecParser<'a> {
    text: &'a [(usize, u8)],
    pos: usize,
    len: usize,
}

impl SpecParser<'_> {
    fn offset(&self) -> usize {
        self.text.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).map(|&(_, b)| b)
    }

    fn eat(&mut self, word: &str) -> bool {
        let w = word.as_bytes();
        let ok = self.text.len() >= self.pos + w.len()
            && self.text[self.pos..self.pos + w.len()].iter().map(|&(_, b)| b).eq(w.iter().copied());
        if ok {
            self.pos += w.len();
        }
        ok
    }

    fn expect(&mut self, word: &str) -> Result<()> {
        if self.eat(word) {
            Ok(())
        } else {
            Err(Error::parse(self.offset(), format!("expected `{word}`")))
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.offset();
        let mut v: usize = 0;
        let mut any = false;
        while let Some(b) = self.peek().filter(u8::is_ascii_digit) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as usize))
                .ok_or_else(|| Error::parse(start, "integer too large"))?;
            any = true;
            self.pos += 1;
        }
        if any {
            Ok(v)
        } else {
            Err(Error::parse(start, "expected an integer"))
        }
    }

    fn g6(&mut self) -> Result<Graph> {
        let start = self.offset();
        let from = self.pos;
        while self.peek().is_some_and(|b| (63..=126).contains(&b)) {
            self.pos += 1;
        }
        let code: String = self.text[from..self.pos].iter().map(|&(_, b)| b as char).collect();
        parse_g6(&code).map_err(|e| match e {
            Error::Parse { offset, message } => Error::parse(start + offset, message),
            other => other,
        })
    }

    fn recipe(&mut self) -> Result<Recipe> {
        let start = self.offset();
        Ok(match self.spec()? {
            PatternSpec::Bad(r) => r,
            other => Recipe::Leaf(other.build().map_err(|e| Error::parse(start, e))?.graph),
        })
    }

    fn spec(&mut self) -> Result<PatternSpec> {
        if self.eat("2P4") {
            return Ok(PatternSpec::TwoP4);
        }
        if self.eat("broom(") {
            let k = self.int()?;
            self.expect(",")?;
            let d = self.int()?;
            self.expect(")")?;
            return Ok(PatternSpec::Broom { k, d });
        }
        if self.eat("forest(") {
            let g = self.g6()?;
            self.expect(")")?;
            return Ok(PatternSpec::Forest(g));
        }
        if self.eat("graph(") {
            let g = self.g6()?;
            self.expect(")")?;
            return Ok(PatternSpec::Bad(Recipe::Leaf(g)));
        }
        if self.eat("cone(") {
            let r = self.recipe()?;
            self.expect(")")?;
            return Ok(PatternSpec::Bad(Recipe::Cone(Box::new(r))));
        }
        if self.eat("union(") {
            let a = self.recipe()?;
            self.expect(",")?;
            let b = self.recipe()?;
            self.expect(")")?;
            return Ok(PatternSpec::Bad(Recipe::Union(Box::new(a), Box::new(b))));
        }
        if self.eat("P") {
            return Ok(PatternSpec::Path(self.int()?));
        }
        Err(Error::parse(self.offset(), "unknown pattern"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> PatternSpec {
        s.parse().unwrap()
    }

    #[test]
    fn brooms() {
        let star = PatternSpec::Broom { k: 1, d: 3 }.build().unwrap();
        assert_eq!(star.graph.n(), 4);
        assert_eq!(star.graph.degree(0), 3);
        assert_eq!(star.graph.edge_count(), 3);
        let p = PatternSpec::Broom { k: 5, d: 0 }.build().unwrap();
        assert_eq!(p.graph, Graph::path(5).unwrap());
        let b = PatternSpec::Broom { k: 5, d: 3 }.build().unwrap();
        assert_eq!((b.graph.n(), b.graph.edge_count()), (8, 7));
        assert_eq!(b.bristles, vec![5, 6, 7]);
    }

    #[test]
    fn two_p4_shape() {
        let t = PatternSpec::TwoP4.build().unwrap();
        assert_eq!((t.graph.n(), t.graph.edge_count()), (8, 6));
        assert_eq!(t.graph.components().len(), 2);
    }

    #[test]
    fn paths_and_two_p4() {
        let p8 = Graph::path(8).unwrap();
        let p9 = Graph::path(9).unwrap();
        assert!(is_free(&p8, &PatternSpec::TwoP4).unwrap());
        let w = find_induced(&p9, &PatternSpec::TwoP4).unwrap().unwrap();
        assert!(verify_witness(&p9, &PatternSpec::TwoP4, &w).unwrap());
        let mut img = w.map.clone();
        img.sort_unstable();
        assert_eq!(img, vec![0, 1, 2, 3, 5, 6, 7, 8]);
        let k3 = Graph::complete(3).unwrap();
        assert!(is_free(&k3, &PatternSpec::Path(4)).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_free(&c5, &PatternSpec::Path(4)).unwrap());
        assert!(is_free(&c5, &PatternSpec::TwoP4).unwrap());
    }

    #[test]
    fn witness_rejection() {
        let c5 = Graph::cycle(5).unwrap();
        let p4 = PatternSpec::Path(4);
        assert!(verify_witness(&c5, &p4, &PatternWitness { map: vec![0, 1, 2, 3] }).unwrap());
        assert!(!verify_witness(&c5, &p4, &PatternWitness { map: vec![0, 2, 1, 3] }).unwrap());
        assert!(!verify_witness(&c5, &p4, &PatternWitness { map: vec![0, 1, 1, 3] }).unwrap());
        assert!(!verify_witness(&c5, &p4, &PatternWitness { map: vec![0, 1, 2] }).unwrap());
        assert!(!verify_witness(&c5, &p4, &PatternWitness { map: vec![0, 1, 2, 9] }).unwrap());
    }

    #[test]
    fn syntax() {
        assert_eq!(spec("P4"), PatternSpec::Path(4));
        assert_eq!(spec(" 2P4 "), PatternSpec::TwoP4);
        assert_eq!(spec("broom( 5 , 3 )"), PatternSpec::Broom { k: 5, d: 3 });
        assert!(matches!(spec("forest(D?{)"), PatternSpec::Forest(_)));
        let c = spec("cone(union(P2,P2))");
        let g = c.build().unwrap().graph;
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        for s in ["P4", "2P4", "broom(5,3)", "forest(D?{)", "cone(union(graph(A_),graph(@)))"] {
            assert_eq!(spec(s).to_string(), s);
            assert_eq!(spec(&spec(s).to_string()), spec(s));
        }
        assert!("P0".parse::<PatternSpec>().is_err());
        assert!("forest(Bw)".parse::<PatternSpec>().is_err());
        assert!(matches!("broom(5".parse::<PatternSpec>(), Err(Error::Parse { offset: 7, .. })));
        assert!(matches!("Q4".parse::<PatternSpec>(), Err(Error::Parse { offset: 0, .. })));
        assert!("P4x".parse::<PatternSpec>().is_err());
    }

    #[test]
    fn recipe_depth() {
        let c = spec("cone(union(cone(P1),P3))");
        let PatternSpec::Bad(r) = c else { panic!() };
        assert_eq!(r.cone_depth(), 2);
    }
}
