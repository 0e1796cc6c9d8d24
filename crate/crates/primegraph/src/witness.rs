//! Constructive side: turn a positive verdict into a symbolic group
//! blueprint J ⋊ (F × K) and evaluate a blueprint's prime graph complement
//! from its stated construction rules.
//!
//! The base F realizes Ξ[X]. The remaining vertices carry fresh primes and
//! are 3-coloured O/D/I: O primes act, D primes are acted on by their O
//! neighbours and act on their I neighbours, I primes are acted on. An arc
//! p → q means that elements of order p act fixed-point-freely on the
//! q-layer, so p and q never commute and p−q is an edge of the complement.
//! An I-vertex adjacent to X sits on a module for F whose ordinary
//! fixed-point row decides which primes of F act without fixed points.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::arith::{is_prime, prime_divisors};
use crate::catalog::realization_pgc;
use crate::chars::table::lookup;
use crate::classify::Certificate;
use crate::error::{Error, Result};
use crate::groupkit::{Decoration, Family, GroupSpec};
use crate::smallgraph::{Color, Prime, PrimeGraph};

/// Orientation of the outer part of the complement: p → q when p-elements
/// act fixed-point-freely on a q-group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrobeniusDigraph {
    pub vertices: BTreeSet<Prime>,
    pub arcs: BTreeSet<(Prime, Prime)>,
}

impl FrobeniusDigraph {
    /// A directed path a → b → c → d, if one exists (a solvable group has none).
    pub fn directed_three_path(&self) -> Option<[Prime; 4]> {
        for &(b, c) in &self.arcs {
            let a = self.arcs.iter().find(|&&(_, t)| t == b).map(|&(s, _)| s);
            let d = self.arcs.iter().find(|&&(s, _)| s == c).map(|&(_, t)| t);
            if let (Some(a), Some(d)) = (a, d) {
                return Some([a, b, c, d]);
            }
        }
        None
    }

    pub fn in_neighbors(&self, v: Prime) -> Vec<Prime> {
        self.arcs.iter().filter(|&&(_, t)| t == v).map(|&(s, _)| s).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterPrime {
    pub prime: Prime,
    pub class: Color,
    /// The vertex of Ξ this prime stands for.
    pub source: Prime,
}

/// Module layer over the I-prime `r`: `row` names the ordinary fixed-point
/// row of the base's simple factor, `base_fixed` the primes of F whose
/// elements fix a nonzero vector (the row, plus primes F centralises).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRow {
    pub r: Prime,
    pub row: String,
    pub base_fixed: BTreeSet<Prime>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blueprint {
    pub base: GroupSpec,
    /// Vertex of X → prime of π(F).
    pub placements: BTreeMap<Prime, Prime>,
    pub outer: Vec<OuterPrime>,
    pub digraph: FrobeniusDigraph,
    pub modules: Vec<ModuleRow>,
}

/// Least prime p ≡ 1 (mod m) outside `exclusions`, scanning p = mk + 1.
pub fn dirichlet_prime(m: u64, exclusions: &BTreeSet<Prime>) -> Result<Prime> {
    if m == 0 {
        return Err(Error::InvalidParameter("modulus must be at least 1".into()));
    }
    let budget = 10_000u128 * m as u128;
    let mut k: u128 = 1;
    while k <= budget {
        let cand = m as u128 * k + 1;
        if cand > u64::MAX as u128 {
            return Err(Error::Overflow(format!("{m}·{k} + 1")));
        }
        let cand = cand as u64;
        if is_prime(cand) && !exclusions.contains(&cand) {
            return Ok(cand);
        }
        k += 1;
    }
    Err(Error::SearchBudgetExceeded(m as u128))
}

/// Least prime outside `exclusions`.
fn fresh_prime(exclusions: &BTreeSet<Prime>) -> Prime {
    (2..).find(|&p| is_prime(p) && !exclusions.contains(&p)).expect("infinitely many primes")
}

/// The semidirect-module layer of a base, if any.
fn module_layer(base: &GroupSpec) -> Option<(Prime, &str)> {
    base.decorations.iter().find_map(|d| match d {
        Decoration::SemidirectModule { r, row } => Some((*r, row.as_str())),
        _ => None,
    })
}

/// |F| for the congruence r ≡ 1 (mod |F|·∏ B). A module layer T ⋉ P has no
/// fixed dimension in the spec, so it contributes one factor of its
/// characteristic.
pub fn base_order(base: &GroupSpec) -> Result<u64> {
    if let Some(o) = base.analytic_order() {
        return Ok(o);
    }
    let mut core = base.clone();
    core.decorations.retain(|d| !matches!(d, Decoration::SemidirectModule { .. }));
    let (r, _) = module_layer(base).expect("only module layers lack an analytic order");
    core.analytic_order()
        .and_then(|o| o.checked_mul(r))
        .ok_or_else(|| Error::Overflow(format!("|{base}|")))
}

fn base_pgc(base: &GroupSpec) -> Result<PrimeGraph> {
    if base.family == Family::Trivial && base.decorations.is_empty() {
        return PrimeGraph::new(Vec::new());
    }
    Ok(realization_pgc(base)?.0)
}

/// Primes of F that every module element fixes regardless of the row:
/// cyclic direct factors and the module's own characteristic.
fn forced_fixed(base: &GroupSpec) -> BTreeSet<Prime> {
    let mut out = BTreeSet::new();
    for d in &base.decorations {
        match d {
            Decoration::TimesCyclic(n) => out.extend(prime_divisors(*n)),
            Decoration::SemidirectModule { r, .. } => {
                out.insert(*r);
            }
            _ => {}
        }
    }
    out
}

/// Ordinary rows of the base's quasisimple factor, each with its effective
/// fixed set.
pub fn candidate_rows(base: &GroupSpec) -> Result<Vec<(String, BTreeSet<Prime>)>> {
    let core = GroupSpec { family: base.family, q: base.q, decorations: Vec::new() };
    let table = lookup(&core, 0)?;
    let forced = forced_fixed(base);
    Ok(table
        .rows
        .iter()
        .map(|row| (row.label.clone(), row.fixed().union(&forced).copied().collect()))
        .collect())
}

/// Build a blueprint realizing Ξ from a REALIZABLE certificate.
pub fn build_witness(g: &PrimeGraph, cert: &Certificate) -> Result<Blueprint> {
    let base = cert.base.clone();
    let pi_f: BTreeSet<Prime> = base_pgc(&base)?.vertices().clone();
    let placed: BTreeSet<Prime> = cert.roles.values().copied().collect();
    if !placed.is_subset(&pi_f) || cert.roles.keys().copied().collect::<BTreeSet<_>>() != cert.x {
        return Err(Error::PreconditionViolated("certificate roles do not cover X inside π(F)".into()));
    }
    let colour = |v: Prime| -> Result<Color> {
        cert.coloring
            .get(v)
            .ok_or_else(|| Error::PreconditionViolated(format!("vertex {v} is uncoloured")))
    };
    let outer_vertices: Vec<Prime> = g.vertices().iter().copied().filter(|v| !cert.x.contains(v)).collect();
    let mut classes = BTreeMap::new();
    for &v in &outer_vertices {
        classes.insert(v, colour(v)?);
    }
    let f_order = if outer_vertices.iter().any(|&v| g.neighbors(v).iter().any(|u| cert.x.contains(u))) {
        base_order(&base)?
    } else {
        1
    };
    let rows = if cert.x.is_empty() || cert.mono_class.is_empty() { Vec::new() } else { candidate_rows(&base)? };

    let mut used: BTreeSet<Prime> = pi_f.clone();
    let mut prime_of: BTreeMap<Prime, Prime> = BTreeMap::new();
    let mut outer = Vec::new();
    let mut modules = Vec::new();
    for class in Color::ALL {
        for &v in outer_vertices.iter().filter(|v| classes[v] == class) {
            // In-neighbours have strictly smaller classes, hence primes already.
            let ins: Vec<Prime> = g
                .neighbors(v)
                .into_iter()
                .filter(|u| classes.get(u).is_some_and(|&c| c < class))
                .map(|u| prime_of[&u])
                .collect();
            let mut m: u64 = 1;
            for p in &ins {
                m = m.checked_mul(*p).ok_or_else(|| Error::Overflow("Frobenius modulus".into()))?;
            }
            let x_nbrs: BTreeSet<Prime> = g.neighbors(v).into_iter().filter(|u| cert.x.contains(u)).collect();
            let needs_module = !x_nbrs.is_empty();
            if needs_module {
                if class != Color::I {
                    return Err(Error::PreconditionViolated(format!("vertex {v} next to X is not coloured I")));
                }
                m = m.checked_mul(f_order).ok_or_else(|| Error::Overflow("module modulus".into()))?;
            }
            let p = if class == Color::O && ins.is_empty() { fresh_prime(&used) } else { dirichlet_prime(m, &used)? };
            used.insert(p);
            prime_of.insert(v, p);
            outer.push(OuterPrime { prime: p, class, source: v });
            if needs_module {
                let want: BTreeSet<Prime> =
                    cert.x.iter().filter(|u| !x_nbrs.contains(u)).map(|u| cert.roles[u]).collect();
                let (label, fixed) = rows.iter().find(|(_, fixed)| *fixed == want).ok_or_else(|| {
                    Error::NoMatchingRow(format!(
                        "{base}: vertex {v} needs fixed points exactly at [{}]",
                        want.iter().join(",")
                    ))
                })?;
                modules.push(ModuleRow { r: p, row: label.clone(), base_fixed: fixed.clone() });
            }
        }
    }
    let mut digraph = FrobeniusDigraph { vertices: prime_of.values().copied().collect(), arcs: BTreeSet::new() };
    for &(a, b) in g.edges() {
        if let (Some(&ca), Some(&cb)) = (classes.get(&a), classes.get(&b)) {
            let (lo, hi) = if ca < cb { (a, b) } else { (b, a) };
            digraph.arcs.insert((prime_of[&lo], prime_of[&hi]));
        }
    }
    Ok(Blueprint { base, placements: cert.roles.clone(), outer, digraph, modules })
}

/// Symbolic prime graph complement of the blueprint's group.
pub fn blueprint_pgc(b: &Blueprint) -> Result<PrimeGraph> {
    let base = base_pgc(&b.base)?;
    let mut g = base.clone();
    for o in &b.outer {
        g.add_vertex(o.prime)?;
    }
    for &(p, q) in &b.digraph.arcs {
        g.add_edge(p, q)?;
    }
    for m in &b.modules {
        for &p in base.vertices() {
            if !m.base_fixed.contains(&p) {
                g.add_edge(p, m.r)?;
            }
        }
    }
    Ok(g)
}

/// Ξ vertex → blueprint prime, for comparing Ξ with [`blueprint_pgc`].
pub fn vertex_map(b: &Blueprint) -> BTreeMap<Prime, Prime> {
    let mut map = b.placements.clone();
    for o in &b.outer {
        map.insert(o.source, o.prime);
    }
    map
}

/// True when the blueprint's complement is Ξ under [`vertex_map`].
pub fn round_trips(g: &PrimeGraph, b: &Blueprint) -> Result<bool> {
    let image = g.relabel(&vertex_map(b))?;
    let pgc = blueprint_pgc(b)?;
    // Primes of F outside X (e.g. cyclic factors) must not appear: the
    // certificate places every prime of F.
    Ok(image == pgc)
}

/// Re-check every arithmetic and structural requirement of a blueprint.
pub fn verify_blueprint(b: &Blueprint) -> Result<()> {
    let bad = |s: String| Err(Error::PreconditionViolated(s));
    let pi_f: BTreeSet<Prime> = base_pgc(&b.base)?.vertices().clone();
    let mut seen = BTreeSet::new();
    for o in &b.outer {
        if !is_prime(o.prime) {
            return bad(format!("{} is not prime", o.prime));
        }
        if pi_f.contains(&o.prime) || !seen.insert(o.prime) {
            return bad(format!("{} is repeated or lies in π(F)", o.prime));
        }
    }
    let class: BTreeMap<Prime, Color> = b.outer.iter().map(|o| (o.prime, o.class)).collect();
    for &(p, q) in &b.digraph.arcs {
        match (class.get(&p), class.get(&q)) {
            (Some(cp), Some(cq)) if cp < cq => {}
            _ => return bad(format!("arc {p} -> {q} does not go up the O < D < I order")),
        }
    }
    if let Some(path) = b.digraph.directed_three_path() {
        return bad(format!("directed path {}", path.iter().join(" -> ")));
    }
    let module_primes: BTreeMap<Prime, &ModuleRow> = b.modules.iter().map(|m| (m.r, m)).collect();
    let rows = if b.modules.is_empty() { Vec::new() } else { candidate_rows(&b.base)? };
    for o in &b.outer {
        let mut m: u128 = b.digraph.in_neighbors(o.prime).iter().map(|&p| p as u128).product();
        if let Some(row) = module_primes.get(&o.prime) {
            if o.class != Color::I {
                return bad(format!("module prime {} is not class I", o.prime));
            }
            m *= base_order(&b.base)? as u128;
            if !rows.iter().any(|(label, fixed)| *label == row.row && *fixed == row.base_fixed) {
                return bad(format!("row {} does not give fixed set [{}]", row.row, row.base_fixed.iter().join(",")));
            }
        }
        if !(o.prime as u128 - 1).is_multiple_of(m) {
            return bad(format!("{} ≢ 1 (mod {m})", o.prime));
        }
    }
    if module_primes.len() != b.modules.len() || b.modules.iter().any(|m| !class.contains_key(&m.r)) {
        return bad("module layers must sit on distinct outer primes".into());
    }
    Ok(())
}

fn set_list(s: &BTreeSet<Prime>) -> String {
    format!("[{}]", s.iter().join(","))
}

impl fmt::Display for Blueprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "base: {}", self.base)?;
        for (v, p) in &self.placements {
            writeln!(f, "place: {v} -> {p}")?;
        }
        for o in &self.outer {
            writeln!(f, "outer: p={},class={},source={}", o.prime, o.class.letter(), o.source)?;
        }
        for (p, q) in &self.digraph.arcs {
            writeln!(f, "arc: {p} -> {q}")?;
        }
        for m in &self.modules {
            writeln!(f, "module: r={},row={},base_fixed={}", m.r, m.row, set_list(&m.base_fixed))?;
        }
        Ok(())
    }
}

fn parse_fields(line: usize, body: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    // base_fixed=[a,b] holds commas, so split on commas outside brackets.
    let mut depth = 0;
    let mut start = 0;
    let bytes: Vec<char> = body.chars().collect();
    let mut parts = Vec::new();
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(bytes[start..i].iter().collect::<String>());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(bytes[start..].iter().collect::<String>());
    for part in parts {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse { line, msg: format!("expected key=value, got {part:?}") })?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn parse_prime(line: usize, s: &str) -> Result<Prime> {
    s.trim().parse().map_err(|_| Error::Parse { line, msg: format!("bad number {s:?}") })
}

/// Parse the text form written by [`fmt::Display`].
pub fn parse_blueprint(text: &str) -> Result<Blueprint> {
    let mut base = None;
    let mut placements = BTreeMap::new();
    let mut outer = Vec::new();
    let mut arcs = BTreeSet::new();
    let mut modules = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, body) = content
            .split_once(':')
            .ok_or_else(|| Error::Parse { line, msg: format!("expected `key: value`, got {content:?}") })?;
        let body = body.trim();
        match key.trim() {
            "base" => base = Some(body.parse::<GroupSpec>().map_err(|e| Error::Parse { line, msg: e.to_string() })?),
            "place" | "arc" => {
                let (a, b) = body
                    .split_once("->")
                    .ok_or_else(|| Error::Parse { line, msg: "expected `a -> b`".into() })?;
                let (a, b) = (parse_prime(line, a)?, parse_prime(line, b)?);
                if key.trim() == "place" {
                    placements.insert(a, b);
                } else {
                    arcs.insert((a, b));
                }
            }
            "outer" => {
                let f = parse_fields(line, body)?;
                let get = |k: &str| f.get(k).ok_or_else(|| Error::Parse { line, msg: format!("missing {k}") });
                let class = Color::from_letter(get("class")?)
                    .ok_or_else(|| Error::Parse { line, msg: "class must be O, D or I".into() })?;
                outer.push(OuterPrime { prime: parse_prime(line, get("p")?)?, class, source: parse_prime(line, get("source")?)? });
            }
            "module" => {
                let f = parse_fields(line, body)?;
                let get = |k: &str| f.get(k).ok_or_else(|| Error::Parse { line, msg: format!("missing {k}") });
                let list = get("base_fixed")?;
                let inner = list
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse { line, msg: "base_fixed must be [..]".into() })?;
                let base_fixed = inner
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| parse_prime(line, s))
                    .collect::<Result<BTreeSet<_>>>()?;
                modules.push(ModuleRow { r: parse_prime(line, get("r")?)?, row: get("row")?.clone(), base_fixed });
            }
            other => return Err(Error::Parse { line, msg: format!("unknown key {other:?}") }),
        }
    }
    let base = base.ok_or(Error::Parse { line: 0, msg: "missing base".into() })?;
    let digraph = FrobeniusDigraph { vertices: outer.iter().map(|o| o.prime).collect(), arcs };
    Ok(Blueprint { base, placements, outer, digraph, modules })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirichlet_examples() {
        let none = BTreeSet::new();
        assert_eq!(dirichlet_prime(4080, &none).unwrap(), 8161);
        assert_eq!(dirichlet_prime(2, &none).unwrap(), 3);
        assert_eq!(dirichlet_prime(660, &BTreeSet::from([661])).unwrap(), 1321);
        assert!(dirichlet_prime(0, &none).is_err());
    }

    #[test]
    fn empty_blueprint_has_empty_complement() {
        let b = Blueprint {
            base: GroupSpec::trivial(),
            placements: BTreeMap::new(),
            outer: Vec::new(),
            digraph: FrobeniusDigraph::default(),
            modules: Vec::new(),
        };
        assert_eq!(blueprint_pgc(&b).unwrap().order(), 0);
        assert_eq!(parse_blueprint(&b.to_string()).unwrap(), b);
    }
}
