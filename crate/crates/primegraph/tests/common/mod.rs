//! Shared fixtures: brute-force graph oracles written independently of the
//! library, and the curated classification suites.

#![allow(dead_code)]

use std::collections::BTreeSet;

use primegraph::classify::VerdictStatus;
use primegraph::smallgraph::{Prime, PrimeGraph};

pub const LABELS: [Prime; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Targets by q; 32 stands for the generic family at f = 5.
pub const TARGETS: [u64; 9] = [16, 27, 49, 11, 19, 23, 25, 81, 32];

pub fn graph(vertices: &[Prime], edges: &[(Prime, Prime)]) -> PrimeGraph {
    PrimeGraph::from_edges(vertices.iter().copied(), edges.iter().copied()).expect("valid graph")
}

/// Adjacency as a bit matrix over the sorted vertex list.
fn adjacency(g: &PrimeGraph) -> (Vec<Prime>, Vec<u32>) {
    let vs: Vec<Prime> = g.vertices().iter().copied().collect();
    let idx = |p: Prime| vs.iter().position(|&v| v == p).unwrap();
    let mut adj = vec![0u32; vs.len()];
    for &(a, b) in g.edges() {
        adj[idx(a)] |= 1 << idx(b);
        adj[idx(b)] |= 1 << idx(a);
    }
    (vs, adj)
}

pub fn brute_triangle_free(g: &PrimeGraph) -> bool {
    let (_, adj) = adjacency(g);
    let n = adj.len();
    for i in 0..n {
        for j in i + 1..n {
            if adj[i] >> j & 1 == 1 && adj[i] & adj[j] != 0 {
                return false;
            }
        }
    }
    true
}

/// Try all 3^n colourings; `forced_i` vertices must take colour 2.
pub fn brute_three_colorable(g: &PrimeGraph, forced_i: &BTreeSet<Prime>) -> bool {
    let (vs, adj) = adjacency(g);
    let n = vs.len();
    let total = 3u64.pow(n as u32);
    'outer: for code in 0..total {
        let mut c = vec![0u8; n];
        let mut x = code;
        for slot in c.iter_mut() {
            *slot = (x % 3) as u8;
            x /= 3;
        }
        for i in 0..n {
            if forced_i.contains(&vs[i]) && c[i] != 2 {
                continue 'outer;
            }
            for j in i + 1..n {
                if adj[i] >> j & 1 == 1 && c[i] == c[j] {
                    continue 'outer;
                }
            }
        }
        return true;
    }
    false
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest upper-triangle edge code over all relabelings.
fn min_code(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    let bit = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        b * (b - 1) / 2 + a
    };
    perms
        .iter()
        .map(|p| edges.iter().map(|&(a, b)| 1u64 << bit(p[a], p[b])).sum::<u64>())
        .min()
        .unwrap_or(0)
        .min(if n == 0 { 0 } else { u64::MAX })
}

/// All graphs on n ≤ 6 vertices up to isomorphism, by brute force over
/// every labeled edge set, labeled with the first n primes.
pub fn brute_isomorphism_classes(n: usize) -> Vec<PrimeGraph> {
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        if seen.insert(min_code(n, &edges, &perms)) {
            let es: Vec<(Prime, Prime)> = edges.iter().map(|&(a, b)| (LABELS[a], LABELS[b])).collect();
            out.push(graph(&LABELS[..n], &es));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub graph: PrimeGraph,
    pub root: Option<Prime>,
    pub expect: VerdictStatus,
}

fn case(name: &str, vertices: &[Prime], edges: &[(Prime, Prime)], root: Option<Prime>, expect: VerdictStatus) -> Case {
    Case { name: name.to_string(), graph: graph(vertices, edges), root, expect }
}

/// Roles (2, a, c, d) per target as printed under each family's figures.
pub fn roles(q: u64) -> (Prime, Prime, Prime) {
    match q {
        16 => (3, 5, 17),
        27 => (3, 13, 7),
        49 => (7, 5, 3),
        11 => (3, 5, 11),
        19 => (5, 3, 19),
        23 => (3, 11, 23),
        25 => (5, 3, 13),
        81 => (3, 5, 41),
        32 => (3, 11, 31),
        _ => panic!("no roles for q = {q}"),
    }
}

fn fresh(avoid: &[Prime], k: usize) -> Vec<Prime> {
    [7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53]
        .into_iter()
        .filter(|p| !avoid.contains(p))
        .take(k)
        .collect()
}

/// Curated suite for one target: every triangle-free 3-colorable graph on
/// at most 6 vertices, graphs that are unrealizable everywhere, and the
/// family's catalog shapes with their stated verdicts.
pub fn suite(q: u64) -> Vec<Case> {
    use VerdictStatus::{Open, Realizable as R, Unrealizable as U};
    let rooted = matches!(q, 16 | 11 | 19 | 23 | 32);
    let mut out = Vec::new();

    for n in 1..=6 {
        for g in brute_isomorphism_classes(n) {
            if brute_triangle_free(&g) && brute_three_colorable(&g, &BTreeSet::new()) {
                let root = rooted.then(|| *g.vertices().iter().next().unwrap());
                out.push(Case { name: format!("triangle-free #{}", out.len()), graph: g, root, expect: R });
            }
        }
    }

    let root = |p: Prime| if rooted { Some(p) } else { None };
    let k4 = [(2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (5, 7)];
    out.push(case("K4", &[2, 3, 5, 7], &k4, root(2), U));
    out.push(case("K4 + K1", &[2, 3, 5, 7, 11], &k4, root(11), U));
    let mut k4p = k4.to_vec();
    k4p.push((7, 11));
    out.push(case("K4 with pendant", &[2, 3, 5, 7, 11], &k4p, root(11), U));
    let two_tri = [(2, 3), (3, 5), (2, 5), (7, 11), (11, 13), (7, 13)];
    out.push(case("two disjoint triangles", &[2, 3, 5, 7, 11, 13], &two_tri, root(2), U));
    let mut two_tri_e = two_tri.to_vec();
    two_tri_e.push((5, 7));
    out.push(case("two triangles joined by an edge", &[2, 3, 5, 7, 11, 13], &two_tri_e, root(5), U));
    out.push(case("two triangles plus isolated", &[2, 3, 5, 7, 11, 13, 17], &two_tri, root(17), U));
    let w5 = [(2, 3), (3, 5), (5, 7), (7, 11), (2, 11), (13, 2), (13, 3), (13, 5), (13, 7), (13, 11)];
    out.push(case("wheel W5", &[2, 3, 5, 7, 11, 13], &w5, root(13), U));

    let (a, c, d) = roles(q);
    let two = 2;
    let t = [two, a, c, d];
    match q {
        16 | 11 | 19 | 23 => {
            // pgc(T) is the diamond 2−a, 2−c, 2−d, a−d, c−d (16) or
            // 2−c, 2−d, a−c, a−d, c−d (11/19/23) shape.
            let pgc: Vec<(Prime, Prime)> = if q == 16 {
                vec![(two, a), (two, c), (two, d), (a, d), (c, d)]
            } else {
                vec![(two, c), (two, d), (a, c), (a, d), (c, d)]
            };
            // Rooted at d, which has degree 3 in pgc(T).
            out.push(case("pgc(T) rooted at d", &t, &pgc, Some(d), R));
            let u = fresh(&t, 2);
            let mut pend = pgc.clone();
            pend.push((d, u[0]));
            out.push(case("pgc(T) with pendant at d", &[two, a, c, d, u[0]], &pend, Some(d), R));
            let mut pend2 = pend.clone();
            pend2.push((d, u[1]));
            out.push(case("pgc(T) with two pendants at d", &[two, a, c, d, u[0], u[1]], &pend2, Some(d), R));
            let mut path = pend.clone();
            path.push((u[0], u[1]));
            out.push(case("pgc(T) with a path at d", &[two, a, c, d, u[0], u[1]], &path, Some(d), R));
            // Paw with its centre at the root: the triangle through d plus a pendant.
            let (x, y, p) = if q == 16 { (two, a, c) } else { (a, c, two) };
            let paw = [(d, x), (d, y), (x, y), (d, p)];
            out.push(case("paw rooted at the centre", &t, &paw, Some(d), R));
            let mut paw_p = paw.to_vec();
            paw_p.push((d, u[0]));
            out.push(case("paw at the centre with an outside neighbour", &[two, a, c, d, u[0]], &paw_p, Some(d), R));
            // Triangle through d plus an isolated vertex.
            let tri = [(d, x), (d, y), (x, y)];
            out.push(case("triangle through the root plus isolated", &t, &tri, Some(d), R));
            let mut tri_p = tri.to_vec();
            tri_p.push((d, u[0]));
            out.push(case("triangle through the root, pendant at root", &[two, a, c, d, u[0]], &tri_p, Some(d), R));
            // The forbidden paw: root on the triangle but not the centre.
            let bad_paw = [(x, d), (x, y), (d, y), (x, p)];
            out.push(case("paw rooted at a degree-2 vertex", &t, &bad_paw, Some(d), U));
            // Outside neighbour at the isolated vertex: only 2.T realizes it.
            let iso = if q == 16 { p } else { two };
            let mut tri_iso = tri.to_vec();
            tri_iso.push((iso, u[0]));
            let expect = if q == 16 { U } else { R };
            out.push(case("triangle plus isolated with an outside neighbour there", &[two, a, c, d, u[0]], &tri_iso, Some(d), expect));
            // Root off the triangle.
            out.push(case("triangle plus isolated root", &t, &[(x, y), (y, p), (x, p)], Some(d), U));
            // An outside edge away from the root.
            let mut away = pgc.clone();
            away.push((x, u[0]));
            out.push(case("pgc(T) with a pendant away from the root", &[two, a, c, d, u[0]], &away, Some(d), U));
        }
        27 | 49 | 25 | 81 => {
            let u = fresh(&t, 2);
            out.push(case("triangle plus isolated", &t, &[(a, c), (c, d), (a, d)], None, R));
            out.push(case("paw", &t, &[(a, c), (c, d), (a, d), (d, two)], None, R));
            out.push(case("diamond", &t, &[(a, c), (c, d), (a, d), (d, two), (c, two)], None, R));
            out.push(case("diamond plus a separate edge", &[two, a, c, d, u[0], u[1]], &[(a, c), (c, d), (a, d), (d, two), (c, two), (u[0], u[1])], None, R));
            // F25/F81 read this as K3+K1 with w = a pendant-carrying vertex.
            let expect = if matches!(q, 25 | 81) { R } else { U };
            out.push(case("paw with a pendant", &[two, a, c, d, u[0]], &[(a, c), (c, d), (a, d), (d, two), (two, u[0])], None, expect));
            out.push(case("diamond with a pendant", &[two, a, c, d, u[0]], &[(a, c), (c, d), (a, d), (d, two), (c, two), (two, u[0])], None, U));
            // Triangle, separate vertex w with an outside neighbour.
            let tri_w = [(a, c), (c, d), (a, d), (two, u[0])];
            out.push(case("triangle plus an edge", &[two, a, c, d, u[0]], &tri_w, None, R));
            let mut tri_w2 = tri_w.to_vec();
            tri_w2.push((u[0], u[1]));
            out.push(case("triangle plus a path", &[two, a, c, d, u[0], u[1]], &tri_w2, None, R));
            // The pendant closes X into a paw.
            let tri_z = [(a, c), (c, d), (a, d), (d, u[0])];
            out.push(case("triangle with a pendant", &[two, a, c, d, u[0]], &tri_z, None, R));
            // Outside vertex adjacent to a triangle vertex and to w.
            let shared = [(a, c), (c, d), (a, d), (d, u[0]), (two, u[0])];
            let expect = if matches!(q, 25 | 81) { R } else { U };
            out.push(case("triangle and vertex sharing a neighbour", &[two, a, c, d, u[0]], &shared, None, expect));
            out.push(case("K4 inside four primes", &t, &[(a, c), (c, d), (a, d), (two, a), (two, c), (two, d)], None, U));
        }
        32 => {
            // pgc(Aut(T)) at f = 5: 2−3, 2−p, 2−q, 3−q, p−q, f−p, f−q.
            let (p, qq, f) = (11, 31, 5);
            let aut = [(2, 3), (2, p), (2, qq), (3, qq), (p, qq), (f, p), (f, qq)];
            let v5 = [2, 3, 5, 11, 31];
            out.push(case("pgc(Aut(T)) rooted at f", &v5, &aut, Some(f), R));
            let u = fresh(&v5, 2);
            let mut aut_e = aut.to_vec();
            aut_e.push((u[0], u[1]));
            out.push(case("pgc(Aut(T)) plus a separate edge", &[2, 3, 5, 11, 31, u[0], u[1]], &aut_e, Some(f), R));
            let tri = [(2, 3), (2, qq), (3, qq)];
            out.push(case("triangle plus two isolated, root isolated", &v5, &tri, Some(f), R));
            let mut tri_e = tri.to_vec();
            tri_e.push((f, qq));
            tri_e.push((f, p));
            out.push(case("triangle with root joined to q and p", &v5, &tri_e, Some(f), R));
            out.push(case("triangle plus isolated, unrooted", &[2, 3, 5, 7], &[(2, 3), (3, 5), (2, 5)], None, R));
            out.push(case("diamond, unrooted", &[2, 3, 5, 7], &[(2, 3), (3, 5), (2, 5), (5, 7), (3, 7)], None, R));
            out.push(case("paw, unrooted", &[2, 3, 5, 7], &[(2, 3), (3, 5), (2, 5), (5, 7)], None, Open));
            out.push(case("diamond with pendant, unrooted", &[2, 3, 5, 7, 11], &[(2, 3), (3, 5), (2, 5), (5, 7), (3, 7), (7, 11)], None, U));
            let mut deg3 = aut.to_vec();
            deg3.push((f, 2));
            out.push(case("root of degree 3", &v5, &deg3, Some(f), U));
            let mut pi_t_out = aut.to_vec();
            pi_t_out.push((3, u[0]));
            out.push(case("edge from π(T) to a new prime", &[2, 3, 5, 11, 31, u[0]], &pi_t_out, Some(f), U));
        }
        _ => unreachable!(),
    }
    out
}
