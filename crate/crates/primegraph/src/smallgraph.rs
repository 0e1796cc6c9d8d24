//! Exact algorithms on small prime-labeled graphs: triangles, constrained
//! 3-colorings, rooted canonical forms, induced subgraphs, and the text and
//! DOT formats used by the command line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::arith::is_prime;
use crate::error::{Error, Result};

pub type Prime = u64;

/// A simple graph whose vertices are distinct primes. Edges are stored as
/// ascending pairs so that structural equality is set equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeGraph {
    vertices: BTreeSet<Prime>,
    edges: BTreeSet<(Prime, Prime)>,
}

fn ordered(a: Prime, b: Prime) -> (Prime, Prime) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl PrimeGraph {
    pub fn new<I: IntoIterator<Item = Prime>>(vertices: I) -> Result<Self> {
        let mut g = PrimeGraph::default();
        for v in vertices {
            g.add_vertex(v)?;
        }
        Ok(g)
    }

    pub fn from_edges<I, E>(vertices: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = Prime>,
        E: IntoIterator<Item = (Prime, Prime)>,
    {
        let mut g = Self::new(vertices)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Prime) -> Result<()> {
        if !is_prime(v) {
            return Err(Error::InvalidParameter(format!("vertex {v} is not prime")));
        }
        self.vertices.insert(v);
        Ok(())
    }

    pub fn add_edge(&mut self, a: Prime, b: Prime) -> Result<()> {
        if a == b {
            return Err(Error::InvalidParameter(format!("self-loop at {a}")));
        }
        if !self.vertices.contains(&a) || !self.vertices.contains(&b) {
            return Err(Error::InvalidParameter(format!(
                "edge {a}-{b} has an endpoint outside the vertex set"
            )));
        }
        self.edges.insert(ordered(a, b));
        Ok(())
    }

    pub fn remove_edge(&mut self, a: Prime, b: Prime) -> bool {
        self.edges.remove(&ordered(a, b))
    }

    /// Removes every edge incident to `v`, keeping the vertex.
    pub fn isolate(&mut self, v: Prime) {
        self.edges.retain(|&(a, b)| a != v && b != v);
    }

    pub fn vertices(&self) -> &BTreeSet<Prime> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Prime, Prime)> {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: Prime) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, a: Prime, b: Prime) -> bool {
        self.edges.contains(&ordered(a, b))
    }

    pub fn neighbors(&self, v: Prime) -> BTreeSet<Prime> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: Prime) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Same edges, vertices renamed through `map` (which must be injective
    /// on the vertex set).
    pub fn relabel(&self, map: &BTreeMap<Prime, Prime>) -> Result<PrimeGraph> {
        let image = |v: Prime| {
            map.get(&v)
                .copied()
                .ok_or_else(|| Error::InvalidParameter(format!("relabel map misses vertex {v}")))
        };
        let verts: Vec<Prime> = self.vertices.iter().map(|&v| image(v)).collect::<Result<_>>()?;
        if verts.iter().collect::<BTreeSet<_>>().len() != verts.len() {
            return Err(Error::InvalidParameter("relabel map is not injective".into()));
        }
        let mut g = PrimeGraph::new(verts)?;
        for &(a, b) in &self.edges {
            g.add_edge(image(a)?, image(b)?)?;
        }
        Ok(g)
    }

    /// True when both graphs have the same vertex set and every edge of
    /// `self` is an edge of `other`.
    pub fn is_spanning_subgraph_of(&self, other: &PrimeGraph) -> bool {
        self.vertices == other.vertices && self.edges.is_subset(&other.edges)
    }

    /// Disjoint union; vertex sets must not overlap.
    pub fn disjoint_union(&self, other: &PrimeGraph) -> Result<PrimeGraph> {
        if !self.vertices.is_disjoint(&other.vertices) {
            return Err(Error::InvalidParameter("vertex sets overlap".into()));
        }
        let mut g = self.clone();
        g.vertices.extend(other.vertices.iter().copied());
        g.edges.extend(other.edges.iter().copied());
        Ok(g)
    }

    pub fn is_triangle_free(&self) -> bool {
        triangles(self).is_empty()
    }
}

impl fmt::Display for PrimeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", to_text(self, None))
    }
}

/// All vertex triples inducing a triangle, lexicographic by prime.
pub fn triangles(g: &PrimeGraph) -> Vec<[Prime; 3]> {
    let vs: Vec<Prime> = g.vertices.iter().copied().collect();
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !g.has_edge(vs[i], vs[j]) {
                continue;
            }
            for k in j + 1..vs.len() {
                if g.has_edge(vs[i], vs[k]) && g.has_edge(vs[j], vs[k]) {
                    out.push([vs[i], vs[j], vs[k]]);
                }
            }
        }
    }
    out
}

/// The three colour classes of the construction: O vertices act, D vertices
/// are acted on and act, I vertices are only acted on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    O,
    D,
    I,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::O, Color::D, Color::I];

    pub fn letter(self) -> char {
        match self {
            Color::O => 'O',
            Color::D => 'D',
            Color::I => 'I',
        }
    }

    pub fn from_letter(c: &str) -> Option<Color> {
        match c {
            "O" => Some(Color::O),
            "D" => Some(Color::D),
            "I" => Some(Color::I),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub assignment: BTreeMap<Prime, Color>,
}

impl Coloring {
    pub fn get(&self, v: Prime) -> Option<Color> {
        self.assignment.get(&v).copied()
    }

    /// Every vertex coloured and no edge monochromatic.
    pub fn is_proper(&self, g: &PrimeGraph) -> bool {
        g.vertices().iter().all(|v| self.assignment.contains_key(v))
            && g.edges().iter().all(|&(a, b)| self.assignment[&a] != self.assignment[&b])
    }
}

/// Exhaustive backtracking for a proper 3-colouring in which every vertex of
/// `mono_class` gets colour I. `None` is a proof that no such colouring exists.
pub fn three_colorable(g: &PrimeGraph, mono_class: Option<&BTreeSet<Prime>>) -> Option<Coloring> {
    let empty = BTreeSet::new();
    let mono = mono_class.unwrap_or(&empty);
    // Forced vertices first, then by descending degree for early pruning.
    let mut order: Vec<Prime> = g.vertices().iter().copied().collect();
    order.sort_by_key(|&v| (!mono.contains(&v), std::cmp::Reverse(g.degree(v)), v));
    let adj: BTreeMap<Prime, BTreeSet<Prime>> =
        order.iter().map(|&v| (v, g.neighbors(v))).collect();
    let mut assignment = BTreeMap::new();

    fn go(
        idx: usize,
        order: &[Prime],
        adj: &BTreeMap<Prime, BTreeSet<Prime>>,
        mono: &BTreeSet<Prime>,
        assignment: &mut BTreeMap<Prime, Color>,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let choices: &[Color] = if mono.contains(&v) { &[Color::I] } else { &Color::ALL };
        for &c in choices {
            if adj[&v].iter().any(|u| assignment.get(u) == Some(&c)) {
                continue;
            }
            assignment.insert(v, c);
            if go(idx + 1, order, adj, mono, assignment) {
                return true;
            }
            assignment.remove(&v);
        }
        false
    }

    if go(0, &order, &adj, mono, &mut assignment) {
        Some(Coloring { assignment })
    } else {
        None
    }
}

/// Canonical form of a rooted graph: the root is index 0 and the remaining
/// vertices are relabelled to minimise the adjacency code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedShape {
    pub order: usize,
    pub canonical_edges: Vec<(usize, usize)>,
    pub root_index: usize,
}

/// Canonical form of an unrooted graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub order: usize,
    pub canonical_edges: Vec<(usize, usize)>,
}

impl RootedShape {
    pub fn root_degree(&self) -> usize {
        self.canonical_edges
            .iter()
            .filter(|&&(a, b)| a == self.root_index || b == self.root_index)
            .count()
    }

    pub fn unrooted(&self) -> Shape {
        let g = self.to_graph(&first_primes(self.order));
        canonical(&g)
    }

    /// Realise the shape on the given labels; `labels[i]` names vertex `i`,
    /// so `labels[root_index]` becomes the root.
    pub fn to_graph(&self, labels: &[Prime]) -> PrimeGraph {
        let mut g = PrimeGraph::new(labels.iter().copied()).expect("prime labels");
        for &(a, b) in &self.canonical_edges {
            g.add_edge(labels[a], labels[b]).expect("valid edge");
        }
        g
    }
}

impl Shape {
    pub fn to_graph(&self, labels: &[Prime]) -> PrimeGraph {
        let mut g = PrimeGraph::new(labels.iter().copied()).expect("prime labels");
        for &(a, b) in &self.canonical_edges {
            g.add_edge(labels[a], labels[b]).expect("valid edge");
        }
        g
    }
}

/// The first `n` primes, handy for labelling abstract shapes.
pub fn first_primes(n: usize) -> Vec<Prime> {
    let mut out = Vec::with_capacity(n);
    let mut c = 2u64;
    while out.len() < n {
        if is_prime(c) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Isomorphism-invariant vertex signature used to split the search into
/// cells: degree, then the sorted degrees of the neighbours.
fn signature(g: &PrimeGraph, v: Prime) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).into_iter().map(|u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Brute-force canonical labelling: minimise the upper-triangle adjacency
/// code over all orderings that respect the (invariant) signature cells.
fn canonical_order(g: &PrimeGraph, root: Option<Prime>) -> (Vec<Prime>, Vec<(usize, usize)>) {
    let n = g.order();
    assert!(n <= 16, "canonical forms are limited to 16 vertices");
    let mut cells: BTreeMap<(bool, (usize, Vec<usize>)), Vec<Prime>> = BTreeMap::new();
    for &v in g.vertices() {
        cells
            .entry((Some(v) != root, signature(g, v)))
            .or_default()
            .push(v);
    }
    let cells: Vec<Vec<Prime>> = cells.into_values().collect();
    let code = |ordering: &[Prime]| -> u128 {
        let mut c = 0u128;
        for i in 0..n {
            for j in i + 1..n {
                c <<= 1;
                if g.has_edge(ordering[i], ordering[j]) {
                    c |= 1;
                }
            }
        }
        c
    };
    let mut best: Option<(u128, Vec<Prime>)> = None;
    let per_cell: Vec<Vec<Vec<Prime>>> = cells
        .iter()
        .map(|cell| cell.iter().copied().permutations(cell.len()).collect())
        .collect();
    for choice in per_cell.iter().map(|v| v.iter()).multi_cartesian_product() {
        let ordering: Vec<Prime> = choice.into_iter().flatten().copied().collect();
        let c = code(&ordering);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            best = Some((c, ordering));
        }
    }
    // multi_cartesian_product yields nothing for zero cells.
    let ordering = best.map(|(_, o)| o).unwrap_or_default();
    let pos: BTreeMap<Prime, usize> = ordering.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (pos[&a], pos[&b]);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    (ordering, edges)
}

/// Canonical form of `g` rooted at `root`. Two rooted graphs get equal
/// forms exactly when a root-preserving isomorphism exists.
pub fn rooted_canonical(g: &PrimeGraph, root: Prime) -> Result<RootedShape> {
    if !g.contains(root) {
        return Err(Error::InvalidParameter(format!("root {root} is not a vertex")));
    }
    let (_, edges) = canonical_order(g, Some(root));
    Ok(RootedShape { order: g.order(), canonical_edges: edges, root_index: 0 })
}

/// Canonical form of an unrooted graph.
pub fn canonical(g: &PrimeGraph) -> Shape {
    let (_, edges) = canonical_order(g, None);
    Shape { order: g.order(), canonical_edges: edges }
}

/// Vertex ordering realising the canonical form (position i ↦ vertex).
pub fn canonical_labeling(g: &PrimeGraph, root: Option<Prime>) -> Vec<Prime> {
    canonical_order(g, root).0
}

pub fn induced(g: &PrimeGraph, keep: &BTreeSet<Prime>) -> PrimeGraph {
    PrimeGraph {
        vertices: g.vertices.intersection(keep).copied().collect(),
        edges: g
            .edges
            .iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .copied()
            .collect(),
    }
}

/// Graph with the vertices of `drop` removed.
pub fn delete_vertices(g: &PrimeGraph, drop: &BTreeSet<Prime>) -> PrimeGraph {
    let keep: BTreeSet<Prime> = g.vertices.difference(drop).copied().collect();
    induced(g, &keep)
}

/// Closed neighbourhood N(X) = X ∪ {v : v adjacent to some x ∈ X}.
pub fn neighborhood(g: &PrimeGraph, x: &BTreeSet<Prime>) -> BTreeSet<Prime> {
    let mut out = x.clone();
    for &(a, b) in &g.edges {
        if x.contains(&a) {
            out.insert(b);
        }
        if x.contains(&b) {
            out.insert(a);
        }
    }
    out
}

/// Open variant N(X) \ X.
pub fn open_neighborhood(g: &PrimeGraph, x: &BTreeSet<Prime>) -> BTreeSet<Prime> {
    neighborhood(g, x).difference(x).copied().collect()
}

pub fn complement(g: &PrimeGraph) -> PrimeGraph {
    let vs: Vec<Prime> = g.vertices.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !g.has_edge(vs[i], vs[j]) {
                edges.insert((vs[i], vs[j]));
            }
        }
    }
    PrimeGraph { vertices: g.vertices.clone(), edges }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &PrimeGraph) -> Vec<BTreeSet<Prime>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &g.vertices {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if !comp.insert(v) {
                continue;
            }
            stack.extend(g.neighbors(v).into_iter().filter(|u| !comp.contains(u)));
        }
        seen.extend(comp.iter().copied());
        out.push(comp);
    }
    out
}

/// Vertex bijections `src → dst` sending every edge of `src` to an edge of
/// `dst`. With `exact` the non-edges must also be preserved (isomorphisms).
/// `pin` lists forced images. Results come in lexicographic order of the
/// image sequence, so the first one is deterministic.
pub fn bijections(
    src: &PrimeGraph,
    dst: &PrimeGraph,
    exact: bool,
    pin: &[(Prime, Prime)],
) -> Vec<BTreeMap<Prime, Prime>> {
    if src.order() != dst.order() || (exact && src.edges().len() != dst.edges().len()) {
        return Vec::new();
    }
    let from: Vec<Prime> = src.vertices().iter().copied().collect();
    let to: Vec<Prime> = dst.vertices().iter().copied().collect();
    let mut out = Vec::new();
    for perm in to.iter().copied().permutations(to.len()) {
        let map: BTreeMap<Prime, Prime> = from.iter().copied().zip(perm).collect();
        if pin.iter().any(|(a, b)| map.get(a) != Some(b)) {
            continue;
        }
        let edges_ok = src.edges().iter().all(|&(a, b)| dst.has_edge(map[&a], map[&b]));
        if edges_ok {
            out.push(map);
        }
    }
    out
}

/// Graph text format: `vertices: p1,p2,...`, then `edge: a b` lines and an
/// optional `root: p`. `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<(PrimeGraph, Option<Prime>)> {
    let mut g: Option<PrimeGraph> = None;
    let mut root = None;
    let num = |s: &str, line: usize| -> Result<Prime> {
        s.trim()
            .parse::<Prime>()
            .map_err(|_| Error::Parse { line, msg: format!("not an integer: {s:?}") })
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse { line: line_no, msg: format!("expected `key: value`, got {line:?}") })?;
        let wrap = |e: Error| match e {
            Error::InvalidParameter(msg) => Error::Parse { line: line_no, msg },
            other => other,
        };
        match key.trim() {
            "vertices" => {
                if g.is_some() {
                    return Err(Error::Parse { line: line_no, msg: "duplicate vertices line".into() });
                }
                let vs: Vec<Prime> = rest
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| num(s, line_no))
                    .collect::<Result<_>>()?;
                g = Some(PrimeGraph::new(vs).map_err(wrap)?);
            }
            "edge" => {
                let graph = g
                    .as_mut()
                    .ok_or_else(|| Error::Parse { line: line_no, msg: "edge before vertices".into() })?;
                let ends: Vec<&str> = rest.split_whitespace().collect();
                if ends.len() != 2 {
                    return Err(Error::Parse { line: line_no, msg: "edge needs two endpoints".into() });
                }
                graph.add_edge(num(ends[0], line_no)?, num(ends[1], line_no)?).map_err(wrap)?;
            }
            "root" => root = Some(num(rest, line_no)?),
            other => {
                return Err(Error::Parse { line: line_no, msg: format!("unknown key {other:?}") })
            }
        }
    }
    let g = g.ok_or(Error::Parse { line: 0, msg: "missing vertices line".into() })?;
    if let Some(r) = root {
        if !g.contains(r) {
            return Err(Error::Parse { line: 0, msg: format!("root {r} is not a vertex") });
        }
    }
    Ok((g, root))
}

pub fn to_text(g: &PrimeGraph, root: Option<Prime>) -> String {
    let mut s = format!("vertices: {}\n", g.vertices().iter().join(","));
    for (a, b) in g.edges() {
        s.push_str(&format!("edge: {a} {b}\n"));
    }
    if let Some(r) = root {
        s.push_str(&format!("root: {r}\n"));
    }
    s
}

/// Undirected DOT with the root drawn with a doubled border.
pub fn to_dot(g: &PrimeGraph, root: Option<Prime>) -> String {
    let mut s = String::from("graph pgc {\n");
    for v in g.vertices() {
        if Some(*v) == root {
            s.push_str(&format!("  \"{v}\" [label=\"{v}\", peripheries=2];\n"));
        } else {
            s.push_str(&format!("  \"{v}\" [label=\"{v}\"];\n"));
        }
    }
    for (a, b) in g.edges() {
        s.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
    }
    s.push_str("}\n");
    s
}
