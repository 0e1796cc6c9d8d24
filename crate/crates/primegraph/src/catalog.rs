//! Per-target registries of small rooted and labeled graphs, each marked
//! realizable (with a concrete group), forbidden (with the reason) or open.
//!
//! Realizable entries are never asserted by name: every one is produced by
//! evaluating the prime graph complement of its realizing group, either in
//! closed form (`spectra`) or by removing the edges a module layer kills
//! (`chars`). The five-vertex catalog for PSL(2,2^f) is partitioned by a
//! rule engine encoding the structural lemmas, and the partition is checked.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::arith::prime_divisors;
use crate::chars::removal_set;
use crate::chars::table::{builtin_tables, FixedPointRow};
use crate::error::{Error, Result};
use crate::groupkit::{Decoration, Family, GroupSpec};
use crate::smallgraph::{
    bijections, canonical, induced, rooted_canonical, triangles, Prime, PrimeGraph, RootedShape, Shape,
};
use crate::spectra;

/// The five families of targets that share a classification theorem.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetFamily {
    F16,
    F27_49,
    F11_19_23,
    F25_81,
    /// PSL(2,2^f) for a prime f ≥ 5 giving a K4 group.
    F2F(u64),
}

impl TargetFamily {
    /// Families whose theorem is stated for rooted graphs.
    pub fn is_rooted(self) -> bool {
        matches!(self, TargetFamily::F16 | TargetFamily::F11_19_23 | TargetFamily::F2F(_))
    }
}

impl fmt::Display for TargetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetFamily::F16 => write!(f, "F16"),
            TargetFamily::F27_49 => write!(f, "F27_49"),
            TargetFamily::F11_19_23 => write!(f, "F11_19_23"),
            TargetFamily::F25_81 => write!(f, "F25_81"),
            TargetFamily::F2F(e) => write!(f, "F2F({e})"),
        }
    }
}

/// q, |PSL(2,q)| and |Aut(PSL(2,q))| as stated in the source.
pub const STATED_ORDERS: [(u64, u64, u64); 8] = [
    (16, 4080, 16320),
    (27, 9828, 58968),
    (49, 58800, 235200),
    (11, 660, 1320),
    (19, 3420, 6840),
    (23, 6072, 12144),
    (25, 7800, 31200),
    (81, 265680, 2125440),
];

/// Role assignment (a, c, d) per target, read off the printed figures, and
/// the Schur multiplier from the family criteria.
const ROLES: [(u64, TargetFamily, Prime, Prime, Prime, u32); 8] = [
    (16, TargetFamily::F16, 3, 5, 17, 1),
    (27, TargetFamily::F27_49, 3, 13, 7, 2),
    (49, TargetFamily::F27_49, 7, 5, 3, 2),
    (11, TargetFamily::F11_19_23, 3, 5, 11, 2),
    (19, TargetFamily::F11_19_23, 5, 3, 19, 2),
    (23, TargetFamily::F11_19_23, 3, 11, 23, 2),
    (25, TargetFamily::F25_81, 5, 3, 13, 2),
    (81, TargetFamily::F25_81, 3, 5, 41, 2),
];

/// Everything the classifiers need to know about a target T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetProfile {
    pub target: GroupSpec,
    /// Command-line name, e.g. `psl2-16` or `psl2-2f` (with `f`).
    pub name: String,
    pub family: TargetFamily,
    pub pi_t: BTreeSet<Prime>,
    /// The vertex the rooted statements pin (d, 2, or f).
    pub root_prime: Prime,
    pub schur_multiplier: u32,
    /// Named roles besides 2. For PSL(2,2^f): a = 3, c = (2^f+1)/3, d = 2^f−1.
    pub a: Prime,
    pub c: Prime,
    pub d: Prime,
    pub order: u64,
    pub aut_order: u64,
    pub pgc_t: PrimeGraph,
    pub pgc_aut: PrimeGraph,
}

impl TargetProfile {
    pub fn q(&self) -> u64 {
        self.target.q
    }

    /// The exponent f of the generic family, if any.
    pub fn f(&self) -> Option<u64> {
        match self.family {
            TargetFamily::F2F(f) => Some(f),
            _ => None,
        }
    }

    pub fn aut_spec(&self) -> GroupSpec {
        GroupSpec::aut(self.target.q).expect("validated target")
    }
}

/// `psl2-16`, `psl2-2f` (needs `f`), `psl2-2^7`, or any `PSL2 q=..` spec.
pub fn parse_target(name: &str, f: Option<u64>) -> Result<GroupSpec> {
    let lower = name.trim().to_ascii_lowercase();
    let bad = || Error::UnsupportedTarget(name.to_string());
    if let Some(rest) = lower.strip_prefix("psl2-") {
        if rest == "2f" {
            let f = f.ok_or_else(|| Error::InvalidParameter("target psl2-2f needs --f".into()))?;
            if f >= 63 {
                return Err(Error::Overflow(format!("2^{f}")));
            }
            return GroupSpec::psl2(1u64 << f);
        }
        if let Some(e) = rest.strip_prefix("2^") {
            let e: u64 = e.parse().map_err(|_| bad())?;
            if e >= 63 {
                return Err(Error::Overflow(format!("2^{e}")));
            }
            return GroupSpec::psl2(1u64 << e);
        }
        let q: u64 = rest.parse().map_err(|_| bad())?;
        return GroupSpec::psl2(q);
    }
    GroupSpec::from_str(name).map_err(|_| bad())
}

/// The nine targets with a catalog; the generic family instantiated at f.
pub fn all_targets(f: u64) -> Vec<GroupSpec> {
    let mut v: Vec<GroupSpec> =
        ROLES.iter().map(|&(q, ..)| GroupSpec::psl2(q).expect("table q")).collect();
    v.push(GroupSpec::psl2(1u64 << f).expect("K4 exponent"));
    v
}

fn generic_exponent(q: u64) -> Option<u64> {
    if q.is_power_of_two() {
        let f = q.trailing_zeros() as u64;
        if f >= 5 && spectra::k4_check(f).is_k4 {
            return Some(f);
        }
    }
    None
}

pub fn build_profile(target: &GroupSpec) -> Result<TargetProfile> {
    if target.family != Family::Psl2 || !target.decorations.is_empty() {
        return Err(Error::UnsupportedTarget(target.to_string()));
    }
    let q = target.q;
    let pgc_t = spectra::pgc(target)?;
    let aut = GroupSpec::aut(q)?;
    let pgc_aut = spectra::pgc(&aut)?;
    let order = target.analytic_order().ok_or_else(|| Error::Overflow(target.to_string()))?;
    let aut_order = aut.analytic_order().ok_or_else(|| Error::Overflow(aut.to_string()))?;
    let pi_t: BTreeSet<Prime> = prime_divisors(order).into_iter().collect();

    let (family, a, c, d, schur, root) = if let Some(&(_, fam, a, c, d, schur)) =
        ROLES.iter().find(|r| r.0 == q)
    {
        let &(_, o, ao) = STATED_ORDERS.iter().find(|r| r.0 == q).expect("same table");
        if o != order || ao != aut_order {
            return Err(Error::CrossCheckMismatch(format!(
                "{target}: computed orders {order}/{aut_order}, stated {o}/{ao}"
            )));
        }
        // The unrooted families carry d as their distinguished prime too.
        (fam, a, c, d, schur, d)
    } else if let Some(f) = generic_exponent(q) {
        let p = (q + 1) / 3;
        (TargetFamily::F2F(f), 3, p, q - 1, 1, f)
    } else {
        return Err(Error::UnsupportedTarget(target.to_string()));
    };

    // The role naming must agree with the computed graph: exactly one edge is
    // missing from K4 and it is the one the family's figure omits.
    let missing = match family {
        TargetFamily::F16 | TargetFamily::F2F(_) => (a, c),
        TargetFamily::F27_49 => (2, d),
        TargetFamily::F11_19_23 => (2, a),
        TargetFamily::F25_81 => (2, c),
    };
    let expected_vertices: BTreeSet<Prime> = [2, a, c, d].into_iter().collect();
    let mut expected = PrimeGraph::new(expected_vertices.iter().copied())?;
    for (x, y) in expected_vertices.iter().copied().tuple_combinations() {
        if (x, y) != (missing.0.min(missing.1), missing.0.max(missing.1)) {
            expected.add_edge(x, y)?;
        }
    }
    if pi_t != expected_vertices || pgc_t != expected {
        return Err(Error::CrossCheckMismatch(format!(
            "{target}: pgc does not match the role assignment a={a}, c={c}, d={d}"
        )));
    }
    let name = match family {
        TargetFamily::F2F(_) => "psl2-2f".to_string(),
        _ => format!("psl2-{q}"),
    };
    Ok(TargetProfile {
        target: target.clone(),
        name,
        family,
        pi_t,
        root_prime: root,
        schur_multiplier: schur,
        a,
        c,
        d,
        order,
        aut_order,
        pgc_t,
        pgc_aut,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Realizable,
    Forbidden,
    Open,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Realizable => "REALIZABLE",
            Status::Forbidden => "FORBIDDEN",
            Status::Open => "OPEN",
        })
    }
}

impl FromStr for Status {
    type Err = Error;
    fn from_str(s: &str) -> Result<Status> {
        match s.trim() {
            "REALIZABLE" => Ok(Status::Realizable),
            "FORBIDDEN" => Ok(Status::Forbidden),
            "OPEN" => Ok(Status::Open),
            other => Err(Error::InvalidParameter(format!("unknown status {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntryShape {
    Rooted(RootedShape),
    Unrooted(Shape),
}

/// A group together with its labeled prime graph complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub spec: GroupSpec,
    pub pgc: PrimeGraph,
    /// False when the complement rests on a recorded catalog fact rather
    /// than on a closed form or a shipped fixed-point table.
    pub derived: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub shape: EntryShape,
    /// Labeled representative: the realizing complement when realizable,
    /// otherwise an embedding into pgc(T) / pgc(Aut(T)) when one exists.
    pub graph: PrimeGraph,
    pub root: Option<Prime>,
    pub status: Status,
    pub realizations: Vec<Realization>,
    pub reference: String,
}

/// Module facts used by the catalog without a shipped table: (target, r,
/// row, primes with fixed points, primes without).
const MODULE_FACTS: [(u64, Prime, &str, &[Prime], &[Prime]); 1] = [(25, 2, "dim12", &[5], &[13])];

/// pgc of a realizing spec: closed form, or base minus the module's B_χ.
pub fn realization_pgc(spec: &GroupSpec) -> Result<(PrimeGraph, bool)> {
    let module = spec.decorations.iter().position(|d| matches!(d, Decoration::SemidirectModule { .. }));
    let Some(idx) = module else {
        return Ok((spectra::pgc(spec)?, true));
    };
    if idx + 1 != spec.decorations.len() {
        return Err(Error::UnsupportedDecoration(format!("{spec}: module layer must come last")));
    }
    let Decoration::SemidirectModule { r, row } = &spec.decorations[idx] else { unreachable!() };
    let mut base = spec.clone();
    base.decorations.truncate(idx);
    let base_pgc = spectra::pgc(&base)?;
    let (row, derived) = match crate::chars::table::lookup(&base, *r) {
        Ok(table) => {
            let found = table
                .row(row)
                .cloned()
                .ok_or_else(|| Error::NoMatchingRow(format!("{base}, r = {r}: no row {row}")))?;
            (found, true)
        }
        Err(Error::MissingTable(msg)) => {
            let fact = MODULE_FACTS
                .iter()
                .find(|(q, fr, name, ..)| *q == base.q && base.family == Family::Psl2 && fr == r && name == row)
                .ok_or(Error::MissingTable(msg))?;
            let mut has = BTreeMap::new();
            for &p in fact.3 {
                has.insert(p, true);
            }
            for &p in fact.4 {
                has.insert(p, false);
            }
            (FixedPointRow { label: row.clone(), has_fixed_points: has }, false)
        }
        Err(e) => return Err(e),
    };
    let mut g = base_pgc.clone();
    for (x, y) in removal_set(&row, *r, &base_pgc).b_chi {
        g.remove_edge(x, y);
    }
    Ok((g, derived))
}

struct ShapeDef {
    name: &'static str,
    n: usize,
    edges: &'static [(usize, usize)],
}

const K3K1: ShapeDef = ShapeDef { name: "K3+K1", n: 4, edges: &[(0, 1), (0, 2), (1, 2)] };
const PAW: ShapeDef = ShapeDef { name: "paw", n: 4, edges: &[(0, 1), (0, 2), (1, 2), (2, 3)] };
const DIAMOND: ShapeDef = ShapeDef { name: "diamond", n: 4, edges: &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)] };
const K4: ShapeDef =
    ShapeDef { name: "K4", n: 4, edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] };

const FIVE_VERTEX_NAMES: [ShapeDef; 13] = [
    ShapeDef { name: "K3+2K1", n: 5, edges: &[(0, 1), (0, 2), (1, 2)] },
    ShapeDef { name: "K3+K2", n: 5, edges: &[(0, 1), (0, 2), (1, 2), (3, 4)] },
    ShapeDef { name: "paw+K1", n: 5, edges: &[(0, 1), (0, 2), (1, 2), (2, 3)] },
    ShapeDef { name: "diamond+K1", n: 5, edges: &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)] },
    ShapeDef { name: "K4+K1", n: 5, edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] },
    ShapeDef { name: "cricket", n: 5, edges: &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)] },
    ShapeDef { name: "bull", n: 5, edges: &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)] },
    ShapeDef { name: "lollipop", n: 5, edges: &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)] },
    ShapeDef { name: "dart", n: 5, edges: &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)] },
    ShapeDef { name: "kite", n: 5, edges: &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4)] },
    ShapeDef { name: "house", n: 5, edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)] },
    ShapeDef { name: "bowtie", n: 5, edges: &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)] },
    ShapeDef { name: "gem", n: 5, edges: &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)] },
];

fn first_labels(n: usize) -> Vec<Prime> {
    crate::smallgraph::first_primes(n)
}

fn shape_graph(def: &ShapeDef, labels: &[Prime]) -> PrimeGraph {
    let mut g = PrimeGraph::new(labels[..def.n].iter().copied()).expect("prime labels");
    for &(a, b) in def.edges {
        g.add_edge(labels[a], labels[b]).expect("valid edge");
    }
    g
}

/// Standard name of a small graph, falling back to its edge list.
pub fn shape_name(g: &PrimeGraph) -> String {
    let form = canonical(g);
    let labels = first_labels(g.order().max(5));
    for def in [&K3K1, &PAW, &DIAMOND, &K4].into_iter().chain(FIVE_VERTEX_NAMES.iter()) {
        if def.n == g.order() && canonical(&shape_graph(def, &labels)) == form {
            return def.name.to_string();
        }
    }
    let edges = form.canonical_edges.iter().map(|(a, b)| format!("{a}{b}")).join("-");
    format!("G{}[{}]", g.order(), edges)
}

/// `name@deg<k>` with a `t` suffix when the root lies on a triangle.
pub fn rooted_name(g: &PrimeGraph, root: Prime) -> String {
    let on_triangle = triangles(g).iter().any(|t| t.contains(&root));
    format!("{}@deg{}{}", shape_name(g), g.degree(root), if on_triangle { "t" } else { "" })
}

/// The eight triangle-containing rooted four-vertex graphs.
const ROOTED_FOUR: [(&str, &ShapeDef, usize); 8] = [
    ("diamond@deg3", &DIAMOND, 1),
    ("diamond@deg2", &DIAMOND, 0),
    ("paw@center", &PAW, 2),
    ("paw@deg2", &PAW, 0),
    ("paw@pendant", &PAW, 3),
    ("K3+K1@triangle", &K3K1, 0),
    ("K3+K1@isolated", &K3K1, 3),
    ("K4", &K4, 0),
];

const UNROOTED_FOUR: [&ShapeDef; 4] = [&K3K1, &PAW, &DIAMOND, &K4];

/// Name of the rooted four-vertex position of `root` in `g`, if `g` has a triangle.
pub fn rooted_four_id(g: &PrimeGraph, root: Prime) -> Option<&'static str> {
    let form = rooted_canonical(g, root).ok()?;
    let labels = first_labels(4);
    ROOTED_FOUR.iter().find_map(|&(id, def, r)| {
        let h = shape_graph(def, &labels);
        (rooted_canonical(&h, labels[r]).ok()? == form).then_some(id)
    })
}

fn module_candidates(profile: &TargetProfile) -> Vec<GroupSpec> {
    let t = &profile.target;
    let mut tables: Vec<_> =
        builtin_tables().into_iter().filter(|tb| &tb.target == t && tb.characteristic > 0).collect();
    // Odd characteristic first, then ascending.
    tables.sort_by_key(|tb| (tb.characteristic == 2, tb.characteristic));
    let mut out = Vec::new();
    for tb in tables {
        for row in &tb.rows {
            if let Ok(s) = t.clone().with(Decoration::SemidirectModule { r: tb.characteristic, row: row.label.clone() }) {
                out.push(s);
            }
        }
    }
    for &(q, r, row, ..) in &MODULE_FACTS {
        if q == t.q {
            out.push(t.clone().with(Decoration::SemidirectModule { r, row: row.into() }).expect("prime r"));
        }
    }
    out
}

/// Groups tried as realizers of four-vertex shapes, in preference order.
fn four_vertex_realizers(profile: &TargetProfile) -> Vec<(GroupSpec, String)> {
    let t = profile.target.clone();
    let q = profile.q();
    let cyc = |n: u64| t.clone().with(Decoration::TimesCyclic(n)).expect("cyclic");
    let mut v: Vec<(GroupSpec, String)> = vec![(t.clone(), "T itself".into())];
    let modules = || {
        module_candidates(profile)
            .into_iter()
            .map(|s| {
                let note = match s.decorations.last() {
                    Some(Decoration::SemidirectModule { r, row }) => {
                        format!("T ⋉ P with P an elementary abelian {r}-group (module row {row})")
                    }
                    _ => unreachable!(),
                };
                (s, note)
            })
            .collect::<Vec<_>>()
    };
    match profile.family {
        TargetFamily::F16 => {
            v.push((cyc(profile.a), format!("C_{} × T", profile.a)));
            v.extend(modules());
        }
        TargetFamily::F11_19_23 => {
            v.push((cyc(profile.a), format!("C_{} × T", profile.a)));
            v.push((GroupSpec::sl2(q).expect("odd q"), "2.T = SL(2,q)".into()));
            v.extend(modules());
        }
        TargetFamily::F27_49 => {
            v.push((GroupSpec::pgl2(q).expect("q"), "PGL(2,q)".into()));
            v.push((GroupSpec::sl2(q).expect("odd q"), "2.T = SL(2,q)".into()));
            v.push((cyc(profile.d), format!("C_{} × T", profile.d)));
        }
        TargetFamily::F25_81 => {
            v.push((cyc(2), "T × C_2".into()));
            v.extend(modules());
        }
        TargetFamily::F2F(_) => {
            v.push((cyc(3), "T × C_3".into()));
        }
    }
    v
}

fn realize_all(list: Vec<(GroupSpec, String)>) -> Result<Vec<Realization>> {
    list.into_iter()
        .map(|(spec, note)| {
            let (pgc, derived) = realization_pgc(&spec)?;
            Ok(Realization { spec, pgc, derived, note })
        })
        .collect()
}

const NON_EMBEDDABLE: &str = "pgc(G)[π(T)] is a spanning subgraph of pgc(T) because T is a section of G; \
     this shape has no such labeled embedding";

pub fn four_vertex_catalog(profile: &TargetProfile) -> Result<Vec<CatalogEntry>> {
    let realizers = realize_all(four_vertex_realizers(profile))?;
    let labels = first_labels(4);
    let pgc_t = &profile.pgc_t;
    let mut out = Vec::new();
    let rooted = matches!(profile.family, TargetFamily::F16 | TargetFamily::F11_19_23);
    if rooted {
        let root = profile.root_prime;
        for &(id, def, r) in &ROOTED_FOUR {
            let g = shape_graph(def, &labels);
            let form = rooted_canonical(&g, labels[r])?;
            let embeddings = bijections(&g, pgc_t, false, &[(labels[r], root)]);
            let realizations: Vec<Realization> = realizers
                .iter()
                .filter(|rz| rz.pgc.contains(root) && rooted_canonical(&rz.pgc, root).ok().as_ref() == Some(&form))
                .cloned()
                .collect();
            let (status, reference) = if !realizations.is_empty() {
                (Status::Realizable, format!("realized by {}", realizations[0].note))
            } else if !embeddings.is_empty() && id == "paw@deg2" {
                (
                    Status::Forbidden,
                    format!(
                        "forbidden-paw lemma: no T-solvable group realizes the paw with {root} \
                         on a degree-2 triangle vertex"
                    ),
                )
            } else if !embeddings.is_empty() {
                return Err(Error::PartitionMismatch(format!("{}: {id} embeds but has no status", profile.name)));
            } else {
                (Status::Forbidden, NON_EMBEDDABLE.to_string())
            };
            let graph = match (realizations.first(), embeddings.first()) {
                (Some(rz), _) => rz.pgc.clone(),
                (None, Some(m)) => g.relabel(m)?,
                (None, None) => g.clone(),
            };
            let shown_root = if graph.contains(root) { root } else { labels[r] };
            out.push(CatalogEntry {
                id: id.to_string(),
                shape: EntryShape::Rooted(form),
                graph,
                root: Some(shown_root),
                status,
                realizations,
                reference,
            });
        }
    } else {
        for def in UNROOTED_FOUR {
            let g = shape_graph(def, &labels);
            let form = canonical(&g);
            let embeddings = bijections(&g, pgc_t, false, &[]);
            let realizations: Vec<Realization> = realizers
                .iter()
                .filter(|rz| rz.pgc.order() == 4 && canonical(&rz.pgc) == form)
                .cloned()
                .map(|mut rz| {
                    if let Some(pos) = rooted_four_id(&rz.pgc, profile.root_prime) {
                        rz.note = format!("{}; {} sits at {pos}", rz.note, profile.root_prime);
                    }
                    rz
                })
                .collect();
            let (status, reference) = if !realizations.is_empty() {
                (Status::Realizable, format!("realized by {}", realizations[0].note))
            } else if !embeddings.is_empty() {
                (
                    Status::Open,
                    "embeds in pgc(T) but needs modular fixed-point data of PSL(2,2^f) that is not available"
                        .to_string(),
                )
            } else {
                (Status::Forbidden, NON_EMBEDDABLE.to_string())
            };
            let graph = match (realizations.first(), embeddings.first()) {
                (Some(rz), _) => rz.pgc.clone(),
                (None, Some(m)) => g.relabel(m)?,
                (None, None) => g.clone(),
            };
            out.push(CatalogEntry {
                id: def.name.to_string(),
                shape: EntryShape::Unrooted(form),
                graph,
                root: None,
                status,
                realizations,
                reference,
            });
        }
    }
    Ok(out)
}

/// The structural rules for PSL(2,2^f)-solvable groups with a triangle,
/// stated on a labeled subgraph L of pgc(Aut(T)) on {2, 3, p, q, f}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// An edge at f forces S = Aut(T), q−f ∈ L and f ∤ |N|.
    AttachedRoot,
    /// With S = T the prime f must divide |N|.
    RootInRadical,
    /// Every edge of pgc(S) absent from L has an endpoint in π(N).
    EdgeRemoval,
    /// A prime a ≠ 2 of π(N) is not adjacent to 2 (elementary abelian 2-Sylows).
    TwoAdjacency,
    /// Solvable sections N.H give triangle-free induced subgraphs.
    SolvableSections,
}

impl Rule {
    pub const ALL: [Rule; 5] =
        [Rule::AttachedRoot, Rule::RootInRadical, Rule::EdgeRemoval, Rule::TwoAdjacency, Rule::SolvableSections];

    pub fn describe(self) -> &'static str {
        match self {
            Rule::AttachedRoot => "an edge at f forces S = Aut(T), q−f ∈ pgc(G) and f ∤ |N|",
            Rule::RootInRadical => "with S = T the prime f divides the solvable radical",
            Rule::EdgeRemoval => "an edge of pgc(S) disappears only if one endpoint divides |N|",
            Rule::TwoAdjacency => "a prime a ≠ 2 dividing |N| is not adjacent to 2 (elementary abelian Sylow 2-subgroups)",
            Rule::SolvableSections => "solvable sections N.D_{2(2^f+1)}, N.(2^f:(2^f−1)) and their C_f-extensions have triangle-free complements",
        }
    }
}

/// Prime roles of the generic family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericRoles {
    pub p: Prime,
    pub q: Prime,
    pub f: Prime,
}

impl GenericRoles {
    pub fn of(profile: &TargetProfile) -> Option<GenericRoles> {
        profile.f().map(|f| GenericRoles { p: profile.c, q: profile.d, f })
    }

    pub fn all(&self) -> [Prime; 5] {
        [2, 3, self.p, self.q, self.f]
    }

    fn pgc_t_edges(&self) -> Vec<(Prime, Prime)> {
        vec![(2, 3), (2, self.p), (2, self.q), (3, self.q), (self.p, self.q)]
    }

    fn pgc_aut_edges(&self) -> Vec<(Prime, Prime)> {
        let mut v = self.pgc_t_edges();
        v.extend([(self.q, self.f), (self.p, self.f)]);
        v
    }

    fn solvable_sets(&self, aut: bool) -> Vec<Vec<Prime>> {
        if aut {
            vec![vec![2, 3, self.p, self.f], vec![2, self.q, self.f], vec![2, 3, self.f]]
        } else {
            vec![vec![2, 3, self.p], vec![2, self.q]]
        }
    }
}

/// Whether some scenario (S, π(N)) satisfies every rule not in `relaxed`.
pub fn admissible(l: &PrimeGraph, roles: &GenericRoles, relaxed: &[Rule]) -> bool {
    let on = |r: Rule| !relaxed.contains(&r);
    let f = roles.f;
    let attached = l.degree(f) > 0;
    let primes = roles.all();
    for aut in [false, true] {
        for mask in 0u32..32 {
            let n: BTreeSet<Prime> = (0..5).filter(|i| mask >> i & 1 == 1).map(|i| primes[i]).collect();
            if attached && on(Rule::AttachedRoot) && (!aut || !l.has_edge(roles.q, f) || n.contains(&f)) {
                continue;
            }
            if !aut && on(Rule::RootInRadical) && !n.contains(&f) {
                continue;
            }
            let pgc_s = if aut { roles.pgc_aut_edges() } else { roles.pgc_t_edges() };
            if on(Rule::EdgeRemoval)
                && pgc_s.iter().any(|&(x, y)| !l.has_edge(x, y) && !n.contains(&x) && !n.contains(&y))
            {
                continue;
            }
            if on(Rule::TwoAdjacency) && n.iter().any(|&a| a != 2 && l.has_edge(2, a)) {
                continue;
            }
            if on(Rule::SolvableSections)
                && roles.solvable_sets(aut).iter().any(|u| {
                    let keep: BTreeSet<Prime> = n.iter().copied().chain(u.iter().copied()).collect();
                    !induced(l, &keep).is_triangle_free()
                })
            {
                continue;
            }
            return true;
        }
    }
    false
}

/// Constructions evaluated symbolically for the five-vertex catalog.
fn five_vertex_realizers(profile: &TargetProfile, roles: &GenericRoles) -> Result<Vec<Realization>> {
    let q = profile.q();
    let aut = profile.aut_spec();
    let mut list: Vec<(u64, GroupSpec, String)> = Vec::new();
    let primes = roles.all();
    for mask in 0u32..32 {
        let n: u64 = (0..5).filter(|i| mask >> i & 1 == 1).map(|i| primes[i]).product();
        let (spec, note) = if n == 1 {
            (aut.clone(), "Aut(T)".to_string())
        } else if n.is_multiple_of(roles.f) {
            (GroupSpec::psl2(q)?.with(Decoration::TimesCyclic(n))?, format!("T × C_{n}"))
        } else {
            (aut.clone().with(Decoration::TimesCyclic(n))?, format!("Aut(T) × C_{n}"))
        };
        list.push((n, spec, note));
    }
    list.sort_by_key(|(n, ..)| *n);
    let mut out: Vec<(GroupSpec, String)> = list.into_iter().map(|(_, s, note)| (s, note)).collect();
    out.push((
        aut.with(Decoration::TwistedCyclic(roles.p))?,
        format!("(T × C_{}) ⋊ C_{} with C_{} acting as field automorphisms on T and Frobeniusly on C_{}", roles.p, roles.f, roles.f, roles.p),
    ));
    realize_all(out)
}

/// The triangle-containing rooted five-vertex graphs and their statuses for
/// the generic family `PSL(2,2^f)`, rooted at f. Fails with
/// `PartitionMismatch` unless the candidate space (shapes embedding into
/// pgc(Aut(T)) with the root at f) splits into realizable / forbidden / open
/// with exactly eight open classes.
pub fn five_vertex_catalog(profile: &TargetProfile) -> Result<Vec<CatalogEntry>> {
    let roles = GenericRoles::of(profile)
        .ok_or_else(|| Error::PreconditionViolated("five-vertex catalog needs the PSL(2,2^f) family".into()))?;
    let verts = roles.all();
    let host = PrimeGraph::from_edges(verts, roles.pgc_aut_edges())?;
    if host != profile.pgc_aut {
        return Err(Error::CrossCheckMismatch("closed-form pgc(Aut(T)) differs from the generic figure".into()));
    }
    let host_edges: Vec<(Prime, Prime)> = host.edges().iter().copied().collect();

    // Labeled subgraphs of the host, grouped by rooted class.
    let mut embeddable: BTreeMap<RootedShape, Vec<PrimeGraph>> = BTreeMap::new();
    for mask in 0u32..(1 << host_edges.len()) {
        let edges = (0..host_edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| host_edges[i]);
        let l = PrimeGraph::from_edges(verts, edges)?;
        if l.is_triangle_free() {
            continue;
        }
        embeddable.entry(rooted_canonical(&l, roles.f)?).or_default().push(l);
    }

    // Every triangle-containing rooted five-vertex class.
    let labels = first_labels(5);
    let all_pairs: Vec<(usize, usize)> = (0..5).tuple_combinations().collect();
    let mut every: BTreeMap<RootedShape, PrimeGraph> = BTreeMap::new();
    for mask in 0u32..(1 << all_pairs.len()) {
        let edges = (0..all_pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (labels[all_pairs[i].0], labels[all_pairs[i].1]));
        let g = PrimeGraph::from_edges(labels.iter().copied(), edges)?;
        if g.is_triangle_free() {
            continue;
        }
        every.entry(rooted_canonical(&g, labels[0])?).or_insert(g);
    }

    let realizers = five_vertex_realizers(profile, &roles)?;
    let mut realized: BTreeMap<RootedShape, Vec<Realization>> = BTreeMap::new();
    for rz in realizers {
        if rz.pgc.is_triangle_free() || !rz.pgc.contains(roles.f) {
            continue;
        }
        realized.entry(rooted_canonical(&rz.pgc, roles.f)?).or_default().push(rz);
    }

    let mut out = Vec::new();
    for (form, rep) in &every {
        let root_degree = form.root_degree();
        let entry = if let Some(ls) = embeddable.get(form) {
            let ok = ls.iter().any(|l| admissible(l, &roles, &[]));
            let rz = realized.get(form).cloned().unwrap_or_default();
            if !rz.is_empty() && !ok {
                return Err(Error::PartitionMismatch(format!(
                    "{} is realized by {} but ruled out by the structural rules",
                    rooted_name(&rz[0].pgc, roles.f),
                    rz[0].spec
                )));
            }
            let (status, reference, graph) = if !rz.is_empty() {
                (Status::Realizable, format!("realized by {}", rz[0].note), rz[0].pgc.clone())
            } else if ok {
                (
                    Status::Open,
                    "consistent with every structural rule; deciding it needs modular representations of PSL(2,2^f)"
                        .to_string(),
                    ls[0].clone(),
                )
            } else {
                // Name the rules whose relaxation alone would admit the shape.
                let binding: Vec<&str> = Rule::ALL
                    .iter()
                    .filter(|&&r| ls.iter().any(|l| admissible(l, &roles, &[r])))
                    .map(|r| r.describe())
                    .collect();
                let reason = if binding.is_empty() {
                    "several rules fail together".to_string()
                } else {
                    binding.join("; ")
                };
                (Status::Forbidden, format!("no labeling admits a consistent scenario: {reason}"), ls[0].clone())
            };
            CatalogEntry {
                id: rooted_name(&graph, roles.f),
                shape: EntryShape::Rooted(form.clone()),
                graph,
                root: Some(roles.f),
                status,
                realizations: rz,
                reference,
            }
        } else {
            let reference = if root_degree > 2 {
                "the root has degree greater than 2, but f has degree 2 in pgc(Aut(T))".to_string()
            } else {
                "no labeled embedding into pgc(Aut(T)) with the root at f".to_string()
            };
            CatalogEntry {
                id: rooted_name(rep, labels[0]),
                shape: EntryShape::Rooted(form.clone()),
                graph: rep.clone(),
                root: Some(labels[0]),
                status: Status::Forbidden,
                realizations: Vec::new(),
                reference,
            }
        };
        out.push(entry);
    }

    // Partition check over the candidate space.
    let candidates: Vec<&CatalogEntry> =
        out.iter().filter(|e| matches!(&e.shape, EntryShape::Rooted(s) if embeddable.contains_key(s))).collect();
    if candidates.len() != embeddable.len() {
        return Err(Error::PartitionMismatch("candidate classes lost during classification".into()));
    }
    let open: Vec<&&CatalogEntry> = candidates.iter().filter(|e| e.status == Status::Open).collect();
    let distinct: BTreeSet<&EntryShape> = open.iter().map(|e| &e.shape).collect();
    if open.len() != 8 || distinct.len() != open.len() {
        return Err(Error::PartitionMismatch(format!(
            "expected 8 pairwise non-isomorphic open classes, found {} ({} distinct)",
            open.len(),
            distinct.len()
        )));
    }
    // Disambiguate ids that collide (same name and root degree).
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for e in &mut out {
        let k = seen.entry(e.id.clone()).or_insert(0);
        *k += 1;
        if *k > 1 {
            e.id = format!("{}#{}", e.id, k);
        }
    }
    out.sort_by(|x, y| {
        let cand = |e: &CatalogEntry| !matches!(&e.shape, EntryShape::Rooted(s) if embeddable.contains_key(s));
        (cand(x), x.status, &x.id).cmp(&(cand(y), y.status, &y.id))
    });
    Ok(out)
}

/// A target's profile with its catalogs, built once and read-only afterwards.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub profile: TargetProfile,
    pub four: Vec<CatalogEntry>,
    pub five: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn build(target: &GroupSpec) -> Result<Catalog> {
        let profile = build_profile(target)?;
        let four = four_vertex_catalog(&profile)?;
        let five = if profile.f().is_some() { five_vertex_catalog(&profile)? } else { Vec::new() };
        Ok(Catalog { profile, four, five })
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.four.iter().chain(self.five.iter())
    }

    pub fn rooted_entry(&self, form: &RootedShape) -> Option<&CatalogEntry> {
        self.entries().find(|e| matches!(&e.shape, EntryShape::Rooted(s) if s == form))
    }

    pub fn unrooted_entry(&self, form: &Shape) -> Option<&CatalogEntry> {
        self.entries().find(|e| matches!(&e.shape, EntryShape::Unrooted(s) if s == form))
    }

    pub fn entry(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries().find(|e| e.id == id)
    }

    /// Entries as graph-text blocks, each introduced by `entry:`, `status:`,
    /// optional `via:` lines and a `ref:` line.
    pub fn dump(&self) -> String {
        let p = &self.profile;
        let mut s = format!("# catalog {} ({}), family {}\n", p.name, p.target, p.family);
        for e in self.entries() {
            s.push('\n');
            s.push_str(&format!("entry: {}\n", e.id));
            s.push_str(&format!("status: {}\n", e.status));
            for rz in &e.realizations {
                s.push_str(&format!("via: {}\n", rz.spec));
            }
            s.push_str(&format!("ref: {}\n", e.reference.replace('\n', " ")));
            s.push_str(&crate::smallgraph::to_text(&e.graph, e.root));
        }
        s
    }
}

/// One block of a catalog dump.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DumpEntry {
    pub id: String,
    pub status: Status,
    pub via: Vec<GroupSpec>,
    pub reference: String,
    pub graph: PrimeGraph,
    pub root: Option<Prime>,
}

pub fn parse_dump(text: &str) -> Result<Vec<DumpEntry>> {
    let mut out = Vec::new();
    let mut current: Option<(usize, String, Option<Status>, Vec<GroupSpec>, String, String)> = None;
    let finish = |cur: Option<(usize, String, Option<Status>, Vec<GroupSpec>, String, String)>,
                  out: &mut Vec<DumpEntry>|
     -> Result<()> {
        if let Some((line, id, status, via, reference, body)) = cur {
            let status = status.ok_or(Error::Parse { line, msg: format!("entry {id} has no status") })?;
            let (graph, root) = crate::smallgraph::parse_graph(&body)?;
            out.push(DumpEntry { id, status, via, reference, graph, root });
        }
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        let key_val = line.split_once(':').map(|(k, v)| (k.trim(), v.trim()));
        match key_val {
            Some(("entry", id)) => {
                finish(current.take(), &mut out)?;
                current = Some((line_no, id.to_string(), None, Vec::new(), String::new(), String::new()));
            }
            Some((key @ ("status" | "via" | "ref"), val)) if !line.starts_with('#') => {
                let cur = current
                    .as_mut()
                    .ok_or(Error::Parse { line: line_no, msg: format!("{key} outside an entry") })?;
                match key {
                    "status" => cur.2 = Some(val.parse().map_err(|_| Error::Parse { line: line_no, msg: format!("bad status {val:?}") })?),
                    "via" => cur.3.push(val.parse().map_err(|e: Error| Error::Parse { line: line_no, msg: e.to_string() })?),
                    _ => cur.4 = val.to_string(),
                }
            }
            _ => {
                if let Some(cur) = current.as_mut() {
                    cur.5.push_str(raw);
                    cur.5.push('\n');
                } else if !line.is_empty() && !line.starts_with('#') {
                    return Err(Error::Parse { line: line_no, msg: "content before the first entry".into() });
                }
            }
        }
    }
    finish(current.take(), &mut out)?;
    Ok(out)
}
