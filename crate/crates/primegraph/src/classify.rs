//! Decision procedures: is a labeled (optionally rooted) graph Ξ the prime
//! graph complement of some T-solvable group?
//!
//! Each classifier first tries the solvable condition (triangle-free and
//! 3-colorable), then rejects graphs that break a condition every
//! realizable graph shares, and finally searches the subsets X of Ξ
//! exhaustively in a fixed order. The first subset that passes every clause
//! of some condition gives a [`Certificate`]; when none does, the verdict
//! lists the first failing clause of every candidate.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;

use crate::catalog::{Catalog, CatalogEntry, Status, TargetFamily, TargetProfile};
use crate::error::{Error, Result};
use crate::groupkit::{Decoration, GroupSpec};
use crate::smallgraph::{
    bijections, canonical, delete_vertices, first_primes, induced, open_neighborhood, rooted_canonical,
    three_colorable, triangles, Color, Coloring, Prime, PrimeGraph,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictStatus {
    Realizable,
    Unrealizable,
    /// Only for PSL(2,2^f): the graph hinges on an unresolved catalog case.
    Open,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictStatus::Realizable => "REALIZABLE",
            VerdictStatus::Unrealizable => "UNREALIZABLE",
            VerdictStatus::Open => "OPEN",
        })
    }
}

/// Everything needed to re-check a positive verdict and to build a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// `1` (solvable), or the family-specific condition (`2`, `2a`, `2b`,
    /// `3`, `4`, `5-vertex`, `4-vertex`).
    pub condition: String,
    pub root: Option<Prime>,
    pub x: BTreeSet<Prime>,
    /// Named vertices of X (w, x, y, z) for conditions that name them.
    pub named: Vec<(char, Prime)>,
    /// Vertex of X → prime of π(base) whose role it plays.
    pub roles: BTreeMap<Prime, Prime>,
    /// The group F with pgc(F) ≅ Ξ[X]; trivial for condition 1.
    pub base: GroupSpec,
    pub entry: Option<String>,
    pub coloring: Coloring,
    /// N(X)\X, forced to colour I.
    pub mono_class: BTreeSet<Prime>,
}

/// A subset the search examined, with the clause it failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub condition: String,
    pub root: Option<Prime>,
    pub x: BTreeSet<Prime>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Clause {
    /// Ξ has no proper 3-colouring (every condition needs one).
    ThreeColorability,
    /// The listed triangles cover more than `limit` vertices, but every
    /// condition confines all triangles to a subset of that size.
    TriangleSpread { triangles: Vec<[Prime; 3]>, limit: usize },
    /// Exhaustive search; `root` is `None` when every root was tried.
    Exhaustive { root: Option<Prime>, failures: Vec<Failure> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub target: String,
    pub certificate: Option<Certificate>,
    pub violation: Option<Violation>,
    /// For OPEN verdicts: the deciding subset and catalog entry.
    pub open: Option<Failure>,
}

fn set_text(s: &BTreeSet<Prime>) -> String {
    format!("{{{}}}", s.iter().join(","))
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if let Some(c) = &self.certificate {
            write!(f, " (condition {}", c.condition)?;
            if !c.x.is_empty() {
                write!(f, ", X={}", set_text(&c.x))?;
            }
            if let Some(r) = c.root {
                write!(f, ", root {r}")?;
            }
            if let Some(e) = &c.entry {
                write!(f, ", entry {e}")?;
            }
            write!(f, ", via {})", c.base)?;
        }
        if let Some(o) = &self.open {
            write!(f, " (X={}: {})", set_text(&o.x), o.reason)?;
        }
        if let Some(v) = &self.violation {
            write!(f, " ({})", v.detail)?;
        }
        Ok(())
    }
}

impl Verdict {
    /// Multi-line report: verdict, certificate details or violation.
    pub fn report(&self) -> String {
        let mut out = format!("verdict: {}\ntarget: {}\n", self, self.target);
        if let Some(c) = &self.certificate {
            out += &format!("condition: {}\n", c.condition);
            if let Some(r) = c.root {
                out += &format!("root: {r}\n");
            }
            out += &format!("X: {}\n", set_text(&c.x));
            for (n, v) in &c.named {
                out += &format!("named: {n} = {v}\n");
            }
            for (v, r) in &c.roles {
                out += &format!("role: {v} -> {r}\n");
            }
            out += &format!("base: {}\n", c.base);
            if let Some(e) = &c.entry {
                out += &format!("entry: {e}\n");
            }
            out += &format!(
                "coloring: {}\n",
                c.coloring.assignment.iter().map(|(v, col)| format!("{v}={}", col.letter())).join(" ")
            );
            out += &format!("mono: {}\n", set_text(&c.mono_class));
        }
        if let Some(v) = &self.violation {
            if let Clause::Exhaustive { failures, .. } = &v.clause {
                for fl in failures {
                    let root = fl.root.map(|r| format!(" root {r}")).unwrap_or_default();
                    out += &format!("failure: condition {}{root} X={}: {}\n", fl.condition, set_text(&fl.x), fl.reason);
                }
            }
        }
        out
    }
}

/// A subset to examine: the condition, the root in force, X and, for
/// conditions that name vertices, the naming.
#[derive(Clone, Debug)]
struct Candidate {
    condition: &'static str,
    root: Option<Prime>,
    x: BTreeSet<Prime>,
    named: Vec<(char, Prime)>,
}

enum Outcome {
    Realizable(Certificate),
    Open(String, String),
    Fail(String),
}

/// Per-target classifier holding the catalog.
#[derive(Debug)]
pub struct Classifier {
    pub catalog: Catalog,
}

struct View<'a> {
    g: &'a PrimeGraph,
    tri: Vec<[Prime; 3]>,
}

impl<'a> View<'a> {
    fn new(g: &'a PrimeGraph) -> Self {
        View { g, tri: triangles(g) }
    }

    /// Edges from X to the outside as (inner, outer) pairs.
    fn outside_edges(&self, x: &BTreeSet<Prime>) -> Vec<(Prime, Prime)> {
        let mut out = Vec::new();
        for &v in x {
            for u in self.g.neighbors(v) {
                if !x.contains(&u) {
                    out.push((v, u));
                }
            }
        }
        out
    }

    fn stray_triangle(&self, x: &BTreeSet<Prime>) -> Option<[Prime; 3]> {
        self.tri.iter().find(|t| t.iter().any(|v| !x.contains(v))).copied()
    }

    fn mono_coloring(&self, x: &BTreeSet<Prime>) -> (BTreeSet<Prime>, Option<Coloring>) {
        let mono = open_neighborhood(self.g, x);
        let col = three_colorable(self.g, Some(&mono));
        (mono, col)
    }
}

fn tri_text(t: &[Prime; 3]) -> String {
    format!("{{{},{},{}}}", t[0], t[1], t[2])
}

fn realization_roles(sub: &PrimeGraph, entry: &CatalogEntry, pin: &[(Prime, Prime)]) -> Option<BTreeMap<Prime, Prime>> {
    let r = entry.realizations.first()?;
    bijections(sub, &r.pgc, true, pin).into_iter().next()
}

impl Classifier {
    pub fn new(target: &GroupSpec) -> Result<Classifier> {
        Ok(Classifier { catalog: Catalog::build(target)? })
    }

    pub fn profile(&self) -> &TargetProfile {
        &self.catalog.profile
    }

    pub fn family(&self) -> TargetFamily {
        self.profile().family
    }

    fn triangle_limit(&self) -> usize {
        if matches!(self.family(), TargetFamily::F2F(_)) {
            5
        } else {
            4
        }
    }

    fn verdict(&self, status: VerdictStatus) -> Verdict {
        Verdict { status, target: self.profile().name.clone(), certificate: None, violation: None, open: None }
    }

    /// Classify Ξ. For rooted families a missing root is existential: every
    /// vertex is tried in ascending order and the certificate names the root
    /// that worked. Unrooted families ignore `root`.
    pub fn classify(&self, g: &PrimeGraph, root: Option<Prime>) -> Result<Verdict> {
        let rooted = self.family().is_rooted();
        let root = if rooted { root } else { None };
        if let Some(r) = root {
            if !g.contains(r) {
                return Err(Error::InvalidParameter(format!("root {r} is not a vertex")));
            }
        }
        let view = View::new(g);
        if let Some(col) = solvable_coloring(g) {
            let mut v = self.verdict(VerdictStatus::Realizable);
            v.certificate = Some(solvable_certificate(col, root));
            return Ok(v);
        }
        if let Some(v) = self.global_violation(&view) {
            return Ok(v);
        }
        let mut failures = Vec::new();
        let mut first_open: Option<Failure> = None;
        for cand in self.candidates(&view, root) {
            match self.check(&view, &cand) {
                Outcome::Realizable(cert) => {
                    let mut v = self.verdict(VerdictStatus::Realizable);
                    v.certificate = Some(cert);
                    return Ok(v);
                }
                Outcome::Open(entry, reason) => {
                    if first_open.is_none() {
                        first_open = Some(Failure {
                            condition: cand.condition.to_string(),
                            root: cand.root,
                            x: cand.x.clone(),
                            reason: format!("entry {entry}: {reason}"),
                        });
                    }
                }
                Outcome::Fail(reason) => failures.push(Failure {
                    condition: cand.condition.to_string(),
                    root: cand.root,
                    x: cand.x.clone(),
                    reason,
                }),
            }
        }
        if let Some(o) = first_open {
            let mut v = self.verdict(VerdictStatus::Open);
            v.open = Some(o);
            return Ok(v);
        }
        let detail = match failures.first() {
            None => format!("no subset X of the required size exists ({} vertices)", g.order()),
            Some(fl) => format!(
                "no subset satisfies any condition; first candidate X={} (condition {}): {}",
                set_text(&fl.x),
                fl.condition,
                fl.reason
            ),
        };
        let mut v = self.verdict(VerdictStatus::Unrealizable);
        v.violation = Some(Violation { clause: Clause::Exhaustive { root, failures }, detail });
        Ok(v)
    }

    fn global_violation(&self, view: &View) -> Option<Verdict> {
        let clause = if three_colorable(view.g, None).is_none() {
            Some((Clause::ThreeColorability, "Ξ is not 3-colorable".to_string()))
        } else {
            let limit = self.triangle_limit();
            let span: BTreeSet<Prime> = view.tri.iter().flatten().copied().collect();
            (span.len() > limit).then(|| {
                (
                    Clause::TriangleSpread { triangles: view.tri.clone(), limit },
                    format!("triangles cover {} vertices {}, more than {limit}", span.len(), set_text(&span)),
                )
            })
        };
        clause.map(|(clause, detail)| {
            let mut v = self.verdict(VerdictStatus::Unrealizable);
            v.violation = Some(Violation { clause, detail });
            v
        })
    }

    fn candidates(&self, view: &View, root: Option<Prime>) -> Vec<Candidate> {
        let g = view.g;
        let verts: Vec<Prime> = g.vertices().iter().copied().collect();
        let subsets = |k: usize| -> Vec<BTreeSet<Prime>> {
            verts.iter().copied().combinations(k).map(|c| c.into_iter().collect()).collect()
        };
        let roots: Vec<Prime> = match root {
            Some(r) => vec![r],
            None => verts.clone(),
        };
        let plain = |condition: &'static str, root: Option<Prime>, x: BTreeSet<Prime>| Candidate {
            condition,
            root,
            x,
            named: Vec::new(),
        };
        let mut out = Vec::new();
        match self.family() {
            TargetFamily::F16 => {
                for &z in &roots {
                    for x in subsets(4).into_iter().filter(|x| x.contains(&z)) {
                        out.push(plain("2", Some(z), x));
                    }
                }
            }
            TargetFamily::F11_19_23 => {
                for &z in &roots {
                    for x in subsets(4).into_iter().filter(|x| x.contains(&z)) {
                        out.push(plain("2a", Some(z), x));
                    }
                }
                for &z in &roots {
                    for x in subsets(4).into_iter().filter(|x| x.contains(&z)) {
                        out.push(plain("2b", Some(z), x));
                    }
                }
            }
            TargetFamily::F27_49 => {
                for x in subsets(4) {
                    out.push(plain("3", None, x));
                }
                for x in subsets(4) {
                    out.push(plain("2", None, x));
                }
            }
            TargetFamily::F25_81 => {
                for x in subsets(4) {
                    out.push(plain("2", None, x));
                }
                for cond in ["3", "4"] {
                    for x in subsets(4) {
                        // z ranges over the triangle inside X, when X holds one.
                        let inner: Vec<&[Prime; 3]> =
                            view.tri.iter().filter(|t| t.iter().all(|v| x.contains(v))).collect();
                        if inner.len() != 1 {
                            out.push(plain(cond, None, x));
                            continue;
                        }
                        let t = *inner[0];
                        let w = *x.iter().find(|v| !t.contains(v)).expect("four vertices");
                        for &z in &t {
                            let mut rest = t.iter().copied().filter(|&v| v != z);
                            let (xv, yv) = (rest.next().unwrap(), rest.next().unwrap());
                            out.push(Candidate {
                                condition: cond,
                                root: None,
                                x: x.clone(),
                                named: vec![('w', w), ('x', xv), ('y', yv), ('z', z)],
                            });
                        }
                    }
                }
            }
            TargetFamily::F2F(_) => {
                for &f in &roots {
                    for x in subsets(5).into_iter().filter(|x| x.contains(&f)) {
                        out.push(plain("5-vertex", Some(f), x));
                    }
                }
                if root.is_none() {
                    for x in subsets(4) {
                        out.push(plain("4-vertex", None, x));
                    }
                }
            }
        }
        out
    }

    fn certificate(
        &self,
        view: &View,
        cand: &Candidate,
        roles: BTreeMap<Prime, Prime>,
        base: GroupSpec,
        entry: Option<String>,
        coloring: Coloring,
        mono: BTreeSet<Prime>,
    ) -> Outcome {
        debug_assert!(coloring.is_proper(view.g));
        Outcome::Realizable(Certificate {
            condition: cand.condition.to_string(),
            root: cand.root,
            x: cand.x.clone(),
            named: cand.named.clone(),
            roles,
            base,
            entry,
            coloring,
            mono_class: mono,
        })
    }

    fn check(&self, view: &View, cand: &Candidate) -> Outcome {
        let p = self.profile();
        let g = view.g;
        let x = &cand.x;
        let sub = induced(g, x);
        let fail = |s: String| Outcome::Fail(s);
        let sl2 = || GroupSpec::sl2(p.q()).expect("odd q");
        match (self.family(), cand.condition) {
            (TargetFamily::F16, "2") | (TargetFamily::F11_19_23, "2a") => {
                let z = cand.root.expect("rooted");
                let form = rooted_canonical(&sub, z).expect("root in X");
                let entry = match self.catalog.rooted_entry(&form) {
                    Some(e) if e.status == Status::Realizable => e,
                    Some(e) => return fail(format!("Ξ[X] rooted at {z} is {}, not realizable", e.id)),
                    None => return fail(format!("Ξ[X] rooted at {z} is not a catalog shape")),
                };
                if let Some((a, b)) = view.outside_edges(x).into_iter().find(|&(a, _)| a != z) {
                    return fail(format!("edge {a}-{b} leaves X at {a}, not at the root {z}"));
                }
                if let Some(t) = view.stray_triangle(x) {
                    return fail(format!("triangle {} is not inside X", tri_text(&t)));
                }
                let (mono, col) = view.mono_coloring(x);
                let Some(col) = col else {
                    return fail(format!("no 3-coloring with N(X)\\X = {} in one class", set_text(&mono)));
                };
                let roles = realization_roles(&sub, entry, &[(z, p.root_prime)]).expect("catalog match");
                let base = entry.realizations[0].spec.clone();
                self.certificate(view, cand, roles, base, Some(entry.id.clone()), col, mono)
            }
            (TargetFamily::F11_19_23, "2b") => {
                let z = cand.root.expect("rooted");
                if crate::catalog::rooted_four_id(&sub, z) != Some("K3+K1@triangle") {
                    return fail(format!("Ξ[X] rooted at {z} is not a triangle through {z} plus an isolated vertex"));
                }
                let xv = *x.iter().find(|&&v| sub.degree(v) == 0).expect("isolated vertex");
                if let Some((a, b)) = view.outside_edges(x).into_iter().find(|&(a, _)| a != z && a != xv) {
                    return fail(format!("edge {a}-{b} leaves X at {a}, not at {z} or {xv}"));
                }
                if let Some(t) = view.stray_triangle(x) {
                    return fail(format!("triangle {} is not inside X", tri_text(&t)));
                }
                let (mono, col) = view.mono_coloring(x);
                let Some(col) = col else {
                    return fail(format!("no 3-coloring with N(X)\\X = {} in one class", set_text(&mono)));
                };
                let mut others = x.iter().copied().filter(|&v| v != z && v != xv);
                let (wv, yv) = (others.next().unwrap(), others.next().unwrap());
                let roles = BTreeMap::from([(xv, 2), (z, p.d), (wv, p.a), (yv, p.c)]);
                let mut cand = cand.clone();
                cand.named = vec![('w', wv), ('x', xv), ('y', yv), ('z', z)];
                self.certificate(view, &cand, roles, sl2(), Some("K3+K1@triangle".into()), col, mono)
            }
            (TargetFamily::F27_49, "3") | (TargetFamily::F25_81, "2") => {
                if let Some((a, b)) = view.outside_edges(x).first() {
                    return fail(format!("N(X) ≠ X: edge {a}-{b}"));
                }
                let form = canonical(&sub);
                let entry = match self.catalog.unrooted_entry(&form) {
                    Some(e) if e.status == Status::Realizable => e,
                    Some(e) => return fail(format!("Ξ[X] is {}, not realizable", e.id)),
                    None => return fail("Ξ[X] is not a catalog shape".into()),
                };
                if let Some(t) = view.stray_triangle(x) {
                    return fail(format!("triangle {} is not inside X", tri_text(&t)));
                }
                let Some(col) = three_colorable(g, None) else {
                    return fail("Ξ is not 3-colorable".into());
                };
                let roles = realization_roles(&sub, entry, &[]).expect("catalog match");
                let base = entry.realizations[0].spec.clone();
                self.certificate(view, cand, roles, base, Some(entry.id.clone()), col, BTreeSet::new())
            }
            (TargetFamily::F27_49, "2") => {
                let isolated: Vec<Prime> = x.iter().copied().filter(|&v| sub.degree(v) == 0).collect();
                let shape_ok = sub.edges().len() == 3 && isolated.len() == 1 && !sub.is_triangle_free();
                if !shape_ok {
                    return fail("Ξ[X] is not a triangle plus an isolated vertex".into());
                }
                let w = isolated[0];
                if let Some((a, b)) = view.outside_edges(x).into_iter().find(|&(a, _)| a != w) {
                    return fail(format!("edge {a}-{b} leaves X at {a}, not at {w}"));
                }
                if view.tri.len() != 1 {
                    return fail(format!("Ξ has {} triangles, not exactly one", view.tri.len()));
                }
                let (mono, col) = view.mono_coloring(x);
                let Some(col) = col else {
                    return fail(format!("no 3-coloring with N(X)\\X = {} in one class", set_text(&mono)));
                };
                let t = view.tri[0];
                let roles = BTreeMap::from([(w, 2), (t[0], p.d), (t[1], p.a), (t[2], p.c)]);
                let mut cand = cand.clone();
                cand.named = vec![('w', w), ('x', t[0]), ('y', t[1]), ('z', t[2])];
                self.certificate(view, &cand, roles, sl2(), Some("K3+K1".into()), col, mono)
            }
            (TargetFamily::F25_81, cond @ ("3" | "4")) => {
                if cand.named.is_empty() {
                    return fail("X does not contain exactly one triangle".into());
                }
                let name = |c: char| cand.named.iter().find(|(n, _)| *n == c).unwrap().1;
                let (w, xv, yv, z) = (name('w'), name('x'), name('y'), name('z'));
                if view.tri.len() != 1 {
                    return fail(format!("Ξ has {} triangles, not exactly one", view.tri.len()));
                }
                let nw = g.neighbors(w);
                let t = [xv, yv, z];
                if let Some(v) = t.iter().find(|v| nw.contains(v)) {
                    return fail(format!("w={w} is adjacent to the triangle vertex {v}"));
                }
                for (v, others) in [(xv, [yv, z]), (yv, [xv, z])] {
                    if let Some(u) = g.neighbors(v).into_iter().find(|u| !others.contains(u)) {
                        return fail(format!("edge {v}-{u} leaves the triangle at {v}"));
                    }
                }
                if cond == "3" {
                    if let Some(u) = g.neighbors(z).into_iter().find(|u| *u != xv && *u != yv && !nw.contains(u)) {
                        return fail(format!("{u} is adjacent to z={z} but not to w={w}"));
                    }
                } else if let Some(u) = nw.iter().find(|u| !x.contains(u)) {
                    return fail(format!("edge {w}-{u} leaves X at w"));
                }
                let (mono, col) = view.mono_coloring(x);
                let Some(col) = col else {
                    return fail(format!("no 3-coloring with N(X)\\X = {} in one class", set_text(&mono)));
                };
                let roles = BTreeMap::from([(w, 2), (xv, p.c), (yv, p.a), (z, p.d)]);
                let base = if cond == "3" {
                    sl2()
                } else {
                    sl2().with(Decoration::TimesCyclic(2)).expect("valid")
                };
                self.certificate(view, cand, roles, base, Some("K3+K1".into()), col, mono)
            }
            (TargetFamily::F2F(_), "5-vertex") => {
                let f = cand.root.expect("rooted");
                let deg = sub.degree(f);
                if deg > 2 {
                    return fail(format!("root {f} has degree {deg} in Ξ[X]; f has degree 2 in pgc(Aut(T))"));
                }
                if let Some(t) = view.stray_triangle(x) {
                    return fail(format!("triangle {} is not inside X", tri_text(&t)));
                }
                let form = rooted_canonical(&sub, f).expect("root in X");
                let Some(entry) = self.catalog.rooted_entry(&form) else {
                    return fail(format!("Ξ[X] rooted at {f} has no labeled embedding into pgc(Aut(T))"));
                };
                if entry.status == Status::Forbidden {
                    return fail(format!("Ξ[X] rooted at {f} is {}: {}", entry.id, entry.reference));
                }
                let outer = view.outside_edges(x);
                if let Some((a, b)) = outer.iter().find(|&&(a, _)| a != f) {
                    return fail(format!("edge {a}-{b} joins π(T) to a prime outside π(Aut(T))"));
                }
                if three_colorable(&delete_vertices(g, x), None).is_none() {
                    return fail("Ξ\\X is not 3-colorable".into());
                }
                if entry.status == Status::Open {
                    return Outcome::Open(entry.id.clone(), "unresolved catalog case".into());
                }
                if let Some((_, b)) = outer.first() {
                    return Outcome::Open(
                        entry.id.clone(),
                        format!("f={f} is adjacent to {b} outside π(Aut(T)); no construction covers this"),
                    );
                }
                let col = three_colorable(g, None).expect("globally 3-colorable");
                let roles = realization_roles(&sub, entry, &[(f, p.root_prime)]).expect("catalog match");
                let base = entry.realizations[0].spec.clone();
                self.certificate(view, cand, roles, base, Some(entry.id.clone()), col, BTreeSet::new())
            }
            (TargetFamily::F2F(_), "4-vertex") => {
                if let Some(t) = view.stray_triangle(x) {
                    return fail(format!("triangle {} is not inside X", tri_text(&t)));
                }
                let Some(entry) = self.catalog.unrooted_entry(&canonical(&sub)) else {
                    return fail("Ξ[X] is not a catalog shape".into());
                };
                if entry.status == Status::Forbidden {
                    return fail(format!("Ξ[X] is {}: {}", entry.id, entry.reference));
                }
                if let Some((a, b)) = view.outside_edges(x).first() {
                    return fail(format!(
                        "edge {a}-{b} joins π(T) to a prime outside π(Aut(T)) (f ∤ |G| for this X)"
                    ));
                }
                if three_colorable(&delete_vertices(g, x), None).is_none() {
                    return fail("Ξ\\X is not 3-colorable".into());
                }
                if entry.status == Status::Open {
                    return Outcome::Open(entry.id.clone(), "unresolved catalog case".into());
                }
                let col = three_colorable(g, None).expect("globally 3-colorable");
                let roles = realization_roles(&sub, entry, &[]).expect("catalog match");
                let base = entry.realizations[0].spec.clone();
                self.certificate(view, cand, roles, base, Some(entry.id.clone()), col, BTreeSet::new())
            }
            (fam, cond) => fail(format!("condition {cond} is not defined for {fam}")),
        }
    }

    /// Independent re-check of a verdict for the same input: certificates
    /// are re-derived clause by clause, colourings checked edge by edge,
    /// and negative verdicts re-established from their cited clause.
    pub fn verify(&self, g: &PrimeGraph, root: Option<Prime>, verdict: &Verdict) -> bool {
        let root = if self.family().is_rooted() { root } else { None };
        let view = View::new(g);
        match verdict.status {
            VerdictStatus::Realizable => {
                let Some(c) = &verdict.certificate else { return false };
                if !c.coloring.is_proper(g) || c.mono_class.iter().any(|&v| c.coloring.get(v) != Some(Color::I)) {
                    return false;
                }
                if root.is_some() && c.root.is_some() && c.root != root {
                    return false;
                }
                if c.condition == "1" {
                    return g.is_triangle_free();
                }
                if c.mono_class != open_neighborhood(g, &c.x) {
                    return false;
                }
                // The roles must carry Ξ[X] onto the base's complement.
                let Ok((base_pgc, _)) = crate::catalog::realization_pgc(&c.base) else { return false };
                match induced(g, &c.x).relabel(&c.roles) {
                    Ok(img) if img == base_pgc => {}
                    _ => return false,
                }
                let cand = Candidate {
                    condition: condition_static(&c.condition),
                    root: c.root,
                    x: c.x.clone(),
                    named: if self.family() == TargetFamily::F25_81 && matches!(c.condition.as_str(), "3" | "4") {
                        c.named.clone()
                    } else {
                        Vec::new()
                    },
                };
                match self.check(&view, &cand) {
                    Outcome::Realizable(c2) => c2.x == c.x && c2.roles == c.roles && c2.base == c.base,
                    _ => false,
                }
            }
            VerdictStatus::Open => match self.classify(g, root) {
                Ok(v) => v == *verdict,
                Err(_) => false,
            },
            VerdictStatus::Unrealizable => {
                let Some(viol) = &verdict.violation else { return false };
                if solvable_coloring(g).is_some() {
                    return false;
                }
                match &viol.clause {
                    Clause::ThreeColorability => three_colorable(g, None).is_none(),
                    Clause::TriangleSpread { triangles: ts, limit } => {
                        let span: BTreeSet<Prime> = ts.iter().flatten().copied().collect();
                        *limit == self.triangle_limit()
                            && ts.iter().all(|t| g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) && g.has_edge(t[0], t[2]))
                            && span.len() > *limit
                    }
                    Clause::Exhaustive { root: r, failures } => {
                        if *r != root {
                            return false;
                        }
                        let cands = self.candidates(&view, root);
                        cands.len() == failures.len()
                            && cands.iter().zip(failures).all(|(cand, fl)| {
                                cand.condition == fl.condition
                                    && cand.x == fl.x
                                    && cand.root == fl.root
                                    && matches!(self.check(&view, cand), Outcome::Fail(ref s) if *s == fl.reason)
                            })
                    }
                }
            }
        }
    }
}

fn condition_static(c: &str) -> &'static str {
    ["1", "2", "2a", "2b", "3", "4", "5-vertex", "4-vertex"].into_iter().find(|s| *s == c).unwrap_or("?")
}

fn solvable_coloring(g: &PrimeGraph) -> Option<Coloring> {
    if g.is_triangle_free() {
        three_colorable(g, None)
    } else {
        None
    }
}

fn solvable_certificate(coloring: Coloring, root: Option<Prime>) -> Certificate {
    Certificate {
        condition: "1".into(),
        root,
        x: BTreeSet::new(),
        named: Vec::new(),
        roles: BTreeMap::new(),
        base: GroupSpec::trivial(),
        entry: None,
        coloring,
        mono_class: BTreeSet::new(),
    }
}

/// Solvable groups: Ξ is realizable iff triangle-free and 3-colorable.
pub fn classify_solvable(g: &PrimeGraph) -> Verdict {
    let mut v =
        Verdict { status: VerdictStatus::Realizable, target: "solvable".into(), certificate: None, violation: None, open: None };
    if let Some(col) = solvable_coloring(g) {
        v.certificate = Some(solvable_certificate(col, None));
        return v;
    }
    v.status = VerdictStatus::Unrealizable;
    let tri = triangles(g);
    v.violation = Some(if let Some(t) = tri.first() {
        Violation {
            clause: Clause::TriangleSpread { triangles: vec![*t], limit: 0 },
            detail: format!("triangle {}", tri_text(t)),
        }
    } else {
        Violation { clause: Clause::ThreeColorability, detail: "Ξ is not 3-colorable".into() }
    });
    v
}

fn cached(q: u64) -> Arc<Classifier> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Classifier>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("cache lock").get(&q) {
        return c.clone();
    }
    let spec = GroupSpec::psl2(q).expect("valid q");
    let c = Arc::new(Classifier::new(&spec).expect("builtin targets build"));
    cache.lock().expect("cache lock").insert(q, c.clone());
    c
}

/// Shared classifier for PSL(2,q), built on first use.
pub fn classifier_for(target: &GroupSpec) -> Result<Arc<Classifier>> {
    if target.family != crate::groupkit::Family::Psl2 || !target.decorations.is_empty() {
        return Err(Error::UnsupportedTarget(target.to_string()));
    }
    crate::catalog::build_profile(target)?;
    Ok(cached(target.q))
}

pub fn classify_f16(g: &PrimeGraph, root: Option<Prime>) -> Result<Verdict> {
    cached(16).classify(g, root)
}

pub fn classify_f27_49(g: &PrimeGraph) -> Result<Verdict> {
    cached(27).classify(g, None)
}

pub fn classify_f11_19_23(g: &PrimeGraph, root: Option<Prime>) -> Result<Verdict> {
    cached(11).classify(g, root)
}

pub fn classify_f25_81(g: &PrimeGraph) -> Result<Verdict> {
    cached(25).classify(g, None)
}

/// PSL(2,2^f) for a prime f ≥ 5 with the K4 property.
pub fn classify_f2f(g: &PrimeGraph, root: Option<Prime>, f: u64) -> Result<Verdict> {
    if f >= 63 {
        return Err(Error::Overflow(format!("2^{f}")));
    }
    let target = GroupSpec::psl2(1u64 << f)?;
    classifier_for(&target)?.classify(g, root)
}

/// All graphs on n vertices up to isomorphism, labeled by the first n primes.
pub fn graphs_of_order(n: usize) -> Vec<PrimeGraph> {
    let labels = first_primes(n);
    let mut level: Vec<PrimeGraph> = vec![PrimeGraph::new(Vec::new()).expect("empty")];
    for k in 1..=n {
        let mut seen = BTreeMap::new();
        for g in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let mut h = g.clone();
                h.add_vertex(labels[k - 1]).expect("prime");
                for (i, &u) in labels[..k - 1].iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        h.add_edge(u, labels[k - 1]).expect("edge");
                    }
                }
                seen.entry(canonical(&h)).or_insert(h);
            }
        }
        level = seen.into_values().collect();
    }
    level
}

/// Rooted graphs on n vertices up to rooted isomorphism.
pub fn rooted_graphs_of_order(n: usize) -> Vec<(PrimeGraph, Prime)> {
    let mut out = Vec::new();
    for g in graphs_of_order(n) {
        let mut seen = BTreeSet::new();
        for &r in g.vertices() {
            if seen.insert(rooted_canonical(&g, r).expect("vertex")) {
                out.push((g.clone(), r));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Disagreement {
    pub graph: PrimeGraph,
    pub root: Option<Prime>,
    pub a: VerdictStatus,
    pub b: VerdictStatus,
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub target_a: String,
    pub target_b: String,
    pub max_vertices: usize,
    pub graphs_checked: usize,
    pub disagreements: Vec<Disagreement>,
}

/// Compare two targets' classifications on every graph with at most
/// `max_vertices` vertices (rooted when either target is rooted).
pub fn conjecture_probe(a: &GroupSpec, b: &GroupSpec, max_vertices: usize) -> Result<ProbeReport> {
    if max_vertices > 6 {
        return Err(Error::InvalidParameter(format!("max_vertices {max_vertices} exceeds 6")));
    }
    let ca = classifier_for(a)?;
    let cb = classifier_for(b)?;
    let rooted = ca.family().is_rooted() || cb.family().is_rooted();
    let mut inputs: Vec<(PrimeGraph, Option<Prime>)> = Vec::new();
    for n in 1..=max_vertices {
        if rooted {
            inputs.extend(rooted_graphs_of_order(n).into_iter().map(|(g, r)| (g, Some(r))));
        } else {
            inputs.extend(graphs_of_order(n).into_iter().map(|g| (g, None)));
        }
    }
    let mut disagreements = Vec::new();
    for (g, root) in &inputs {
        let va = ca.classify(g, *root)?.status;
        let vb = cb.classify(g, *root)?.status;
        if va != vb {
            disagreements.push(Disagreement { graph: g.clone(), root: *root, a: va, b: vb });
        }
    }
    Ok(ProbeReport {
        target_a: ca.profile().name.clone(),
        target_b: cb.profile().name.clone(),
        max_vertices,
        graphs_checked: inputs.len(),
        disagreements,
    })
}
