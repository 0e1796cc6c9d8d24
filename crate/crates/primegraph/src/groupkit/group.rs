//! Explicit enumeration of SL/PSL/PGL(2,q), their field-automorphism
//! extensions and cyclic decorations.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use super::field::Field;
use super::spec::{Decoration, Family, GroupSpec};
use crate::arith::{gcd, pow_mod, prime_divisors};
use crate::error::{Error, Result};
use crate::smallgraph::{Prime, PrimeGraph};

/// Largest group the engine is willing to enumerate.
pub const ENUMERATION_BUDGET: u64 = 300_000;

/// At most this many cyclic factors can decorate one group.
pub const MAX_CYCLIC: usize = 4;

/// One group element: a 2×2 matrix (entries are field indices, row-major),
/// a power of the Frobenius automorphism, and residues in the cyclic factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    pub m: [u16; 4],
    pub s: u8,
    pub c: [u32; MAX_CYCLIC],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Trivial,
    Sl,
    Psl,
    Pgl,
}

/// The multiplication law of a group described by a [`GroupSpec`].
#[derive(Clone, Debug)]
struct Law {
    field: Field,
    mode: Mode,
    /// Number of Frobenius cosets and the exponent step between them.
    cosets: u32,
    step: u32,
    moduli: Vec<u32>,
    /// Unit by which the generating field automorphism acts on each
    /// cyclic factor (1 for a direct factor).
    twist: Vec<u32>,
}

impl Law {
    fn from_spec(spec: &GroupSpec) -> Result<Law> {
        let (mode, q) = match spec.family {
            Family::Trivial => (Mode::Trivial, 2),
            Family::Sl2 => (Mode::Sl, spec.q),
            Family::Psl2 | Family::Psl2Field(_) => {
                if spec.is_central2() {
                    (Mode::Sl, spec.q)
                } else {
                    (Mode::Psl, spec.q)
                }
            }
            Family::Pgl2 | Family::AutPsl2 => (Mode::Pgl, spec.q),
        };
        let field = Field::new(q)?;
        let k = field.k;
        let (cosets, step) = match spec.family {
            Family::Psl2Field(e) => (e, k / e),
            Family::AutPsl2 => (k, 1),
            _ => (1, 1),
        };
        let mut moduli = Vec::new();
        let mut twist = Vec::new();
        for d in &spec.decorations {
            match d {
                Decoration::Central2 => {}
                Decoration::TimesCyclic(n) => {
                    moduli.push(u32::try_from(*n).map_err(|_| Error::Overflow(format!("C{n}")))?);
                    twist.push(1);
                }
                Decoration::TwistedCyclic(n) => {
                    let n32 = u32::try_from(*n).map_err(|_| Error::Overflow(format!("C{n}")))?;
                    let u = (2..*n)
                        .find(|&u| multiplicative_order(u, *n) == cosets as u64)
                        .ok_or_else(|| {
                            Error::InvalidParameter(format!("C{n} has no automorphism of order {cosets}"))
                        })?;
                    moduli.push(n32);
                    twist.push(u as u32);
                }
                Decoration::SemidirectModule { .. } => {
                    return Err(Error::UnsupportedDecoration(d_name(d)));
                }
            }
        }
        if moduli.len() > MAX_CYCLIC {
            return Err(Error::UnsupportedDecoration(format!(
                "more than {MAX_CYCLIC} cyclic factors"
            )));
        }
        Ok(Law { field, mode, cosets, step, moduli, twist })
    }

    fn identity(&self) -> Elem {
        Elem { m: [1, 0, 0, 1], s: 0, c: [0; MAX_CYCLIC] }
    }

    fn normalize(&self, mut m: [u16; 4]) -> [u16; 4] {
        let f = &self.field;
        match self.mode {
            Mode::Trivial | Mode::Sl => m,
            Mode::Psl => {
                let neg = [f.neg(m[0]), f.neg(m[1]), f.neg(m[2]), f.neg(m[3])];
                m.min(neg)
            }
            Mode::Pgl => {
                let lead = if m[0] != 0 { m[0] } else { m[1] };
                let s = f.inv(lead);
                for x in m.iter_mut() {
                    *x = f.mul(*x, s);
                }
                m
            }
        }
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let f = &self.field;
        let shift = a.s as u32 * self.step;
        let bm = if shift == 0 {
            b.m
        } else {
            [
                f.frobenius(b.m[0], shift),
                f.frobenius(b.m[1], shift),
                f.frobenius(b.m[2], shift),
                f.frobenius(b.m[3], shift),
            ]
        };
        let am = a.m;
        let m = [
            f.add(f.mul(am[0], bm[0]), f.mul(am[1], bm[2])),
            f.add(f.mul(am[0], bm[1]), f.mul(am[1], bm[3])),
            f.add(f.mul(am[2], bm[0]), f.mul(am[3], bm[2])),
            f.add(f.mul(am[2], bm[1]), f.mul(am[3], bm[3])),
        ];
        let mut c = [0u32; MAX_CYCLIC];
        for (i, (&n, &u)) in self.moduli.iter().zip(&self.twist).enumerate() {
            let act = pow_mod(u as u64, a.s as u64, n as u64);
            c[i] = ((a.c[i] as u64 + act * b.c[i] as u64) % n as u64) as u32;
        }
        Elem { m: self.normalize(m), s: ((a.s as u32 + b.s as u32) % self.cosets) as u8, c }
    }

    fn order_of(&self, x: &Elem) -> u64 {
        let id = self.identity();
        let mut acc = *x;
        let mut n = 1u64;
        while acc != id {
            acc = self.mul(&acc, x);
            n += 1;
        }
        n
    }

    /// All matrices of the underlying linear group, in canonical order.
    fn matrices(&self) -> Vec<[u16; 4]> {
        let f = &self.field;
        let q = f.q as u16;
        if self.mode == Mode::Trivial {
            return vec![[1, 0, 0, 1]];
        }
        let mut out = Vec::new();
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    for d in 0..q {
                        let det = f.sub(f.mul(a, d), f.mul(b, c));
                        let m = [a, b, c, d];
                        let keep = match self.mode {
                            Mode::Sl => det == 1,
                            Mode::Psl => det == 1 && self.normalize(m) == m,
                            Mode::Pgl => det != 0 && self.normalize(m) == m,
                            Mode::Trivial => unreachable!(),
                        };
                        if keep {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }
}

fn d_name(d: &Decoration) -> String {
    match d {
        Decoration::SemidirectModule { r, row } => format!("MODULE(r={r},row={row})"),
        other => format!("{other:?}"),
    }
}

fn multiplicative_order(u: u64, n: u64) -> u64 {
    if gcd(u, n) != 1 {
        return 0;
    }
    let mut k = 1;
    let mut x = u % n;
    while x != 1 {
        x = x * u % n;
        k += 1;
    }
    k
}

/// Structure of a Sylow subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SylowClass {
    Cyclic,
    Klein4,
    ElementaryAbelian,
    Dihedral,
    GeneralizedQuaternion,
    Other,
}

impl SylowClass {
    pub fn name(self) -> &'static str {
        match self {
            SylowClass::Cyclic => "CYCLIC",
            SylowClass::Klein4 => "KLEIN4",
            SylowClass::ElementaryAbelian => "ELEMENTARY_ABELIAN",
            SylowClass::Dihedral => "DIHEDRAL",
            SylowClass::GeneralizedQuaternion => "GENERALIZED_QUATERNION",
            SylowClass::Other => "OTHER",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowReport {
    pub p: Prime,
    pub order: u64,
    pub class: SylowClass,
    /// True when the Sylow subgroup could be a Frobenius complement.
    pub frobenius_criterion: bool,
}

/// Conjugacy data for elements of prime order p with a cyclic Sylow of order p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassCount {
    pub classes: u64,
    pub per_class: u64,
}

/// A fully enumerated group. Elements are stored in a canonical order
/// (Frobenius coset, then cyclic residues, then matrix entries).
#[derive(Clone, Debug)]
pub struct ConcreteGroup {
    spec: GroupSpec,
    law: Law,
    elements: Vec<Elem>,
    index: HashMap<Elem, u32>,
    identity: usize,
    orders: Vec<u64>,
}

impl ConcreteGroup {
    pub fn build(spec: &GroupSpec) -> Result<ConcreteGroup> {
        if let Some(d) = spec.decorations.iter().find(|d| matches!(d, Decoration::SemidirectModule { .. })) {
            return Err(Error::UnsupportedDecoration(d_name(d)));
        }
        let order = spec
            .analytic_order()
            .ok_or_else(|| Error::UnsupportedDecoration(spec.to_string()))?;
        if order > ENUMERATION_BUDGET {
            return Err(Error::BudgetExceeded { order, budget: ENUMERATION_BUDGET });
        }
        let law = Law::from_spec(spec)?;
        let mats = law.matrices();
        // Cartesian product of the cyclic residues.
        let mut residues: Vec<[u32; MAX_CYCLIC]> = vec![[0; MAX_CYCLIC]];
        for (i, &n) in law.moduli.iter().enumerate() {
            residues = residues
                .into_iter()
                .flat_map(|r| {
                    (0..n).map(move |x| {
                        let mut r2 = r;
                        r2[i] = x;
                        r2
                    })
                })
                .collect();
        }
        let mut elements = Vec::with_capacity(order as usize);
        for s in 0..law.cosets {
            for c in &residues {
                for m in &mats {
                    elements.push(Elem { m: *m, s: s as u8, c: *c });
                }
            }
        }
        if elements.len() as u64 != order {
            return Err(Error::CrossCheckMismatch(format!(
                "{spec}: enumerated {} elements, analytic order {order}",
                elements.len()
            )));
        }
        let index: HashMap<Elem, u32> = elements.iter().enumerate().map(|(i, e)| (*e, i as u32)).collect();
        let identity = index[&law.identity()] as usize;
        let orders: Vec<u64> = elements.par_iter().map(|x| law.order_of(x)).collect();
        Ok(ConcreteGroup { spec: spec.clone(), law, elements, index, identity, orders })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, e: &Elem) -> Option<usize> {
        self.index.get(e).map(|&i| i as usize)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.law.mul(&self.elements[a], &self.elements[b]);
        self.index[&p] as usize
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let mut acc = self.law.identity();
        let x = self.elements[a];
        for _ in 0..e {
            acc = self.law.mul(&acc, &x);
        }
        self.index[&acc] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.pow(a, self.orders[a] - 1)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of elements of each order.
    pub fn order_statistics(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for &o in &self.orders {
            *out.entry(o).or_insert(0) += 1;
        }
        out
    }

    /// Checks identity and inverse laws on all elements and associativity
    /// on `samples` deterministic triples.
    pub fn verify_axioms(&self, samples: usize) -> bool {
        let n = self.elements.len();
        for a in 0..n {
            if self.mul(a, self.identity) != a || self.mul(self.identity, a) != a {
                return false;
            }
            if self.mul(a, self.inv(a)) != self.identity {
                return false;
            }
        }
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as usize
        };
        (0..samples).all(|_| {
            let (a, b, c) = (next(), next(), next());
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        })
    }

    /// Γ(G): prime divisors of |G|, p−q joined iff some element has order
    /// divisible by pq.
    pub fn prime_graph(&self) -> PrimeGraph {
        let primes = prime_divisors(self.order());
        let distinct: BTreeSet<u64> = self.orders.iter().copied().collect();
        let mut g = PrimeGraph::new(primes.iter().copied()).expect("prime divisors are primes");
        for (i, &p) in primes.iter().enumerate() {
            for &r in &primes[i + 1..] {
                if distinct.iter().any(|o| o % (p * r) == 0) {
                    g.add_edge(p, r).expect("both endpoints present");
                }
            }
        }
        g
    }

    /// The complement of [`Self::prime_graph`].
    pub fn pgc(&self) -> PrimeGraph {
        crate::smallgraph::complement(&self.prime_graph())
    }

    /// Subgroup generated by `gens`, as a sorted index list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen: HashSet<usize> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity);
        queue.push_back(self.identity);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let mut v: Vec<usize> = seen.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// A small generating set, picked greedily among elements of largest
    /// order first.
    pub fn generators(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = (0..self.elements.len()).collect();
        candidates.sort_by_key(|&i| (std::cmp::Reverse(self.orders[i]), i));
        let mut gens = Vec::new();
        let mut span: HashSet<usize> = [self.identity].into_iter().collect();
        for &c in &candidates {
            if span.len() == self.elements.len() {
                break;
            }
            if span.contains(&c) {
                continue;
            }
            gens.push(c);
            span = self.closure(&gens).into_iter().collect();
        }
        gens
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn center(&self) -> Vec<usize> {
        let gens = self.generators();
        (0..self.elements.len())
            .filter(|&z| gens.iter().all(|&g| self.mul(g, z) == self.mul(z, g)))
            .collect()
    }

    /// p-part of |G|.
    fn p_part(&self, p: Prime) -> u64 {
        let mut n = self.order();
        let mut pp = 1;
        while n.is_multiple_of(p) {
            n /= p;
            pp *= p;
        }
        pp
    }

    /// One Sylow p-subgroup (sorted indices) together with its generators.
    pub fn sylow_subgroup(&self, p: Prime) -> Result<(Vec<usize>, Vec<usize>)> {
        let target = self.p_part(p);
        if target == 1 {
            return Err(Error::PreconditionViolated(format!("{p} does not divide |G|")));
        }
        let is_p_power = |o: u64| {
            let mut o = o;
            while o.is_multiple_of(p) {
                o /= p;
            }
            o == 1
        };
        let mut p_elems: Vec<usize> =
            (0..self.elements.len()).filter(|&i| i != self.identity && is_p_power(self.orders[i])).collect();
        p_elems.sort_by_key(|&i| (std::cmp::Reverse(self.orders[i]), i));
        let mut gens = vec![p_elems[0]];
        let mut h: HashSet<usize> = self.closure(&gens).into_iter().collect();
        while (h.len() as u64) < target {
            let found = p_elems.iter().copied().find(|&g| {
                !h.contains(&g) && gens.iter().all(|&x| h.contains(&self.conjugate(g, x)))
            });
            match found {
                Some(g) => {
                    gens.push(g);
                    let span = self.closure(&gens);
                    if !is_p_power(span.len() as u64) {
                        return Err(Error::SylowSearchFailed { p });
                    }
                    h = span.into_iter().collect();
                }
                None => return Err(Error::SylowSearchFailed { p }),
            }
        }
        let mut v: Vec<usize> = h.into_iter().collect();
        v.sort_unstable();
        Ok((v, gens))
    }

    pub fn sylow_structure(&self, p: Prime) -> Result<SylowReport> {
        let (sub, gens) = self.sylow_subgroup(p)?;
        let order = sub.len() as u64;
        let max_order = sub.iter().map(|&i| self.orders[i]).max().unwrap_or(1);
        let abelian = gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)));
        let class = if max_order == order {
            SylowClass::Cyclic
        } else if abelian && max_order == p {
            if p == 2 && order == 4 {
                SylowClass::Klein4
            } else {
                SylowClass::ElementaryAbelian
            }
        } else if p == 2 && max_order == order / 2 && order >= 8 {
            let c = *sub.iter().find(|&&i| self.orders[i] == max_order).unwrap();
            let cyc: HashSet<usize> = self.closure(&[c]).into_iter().collect();
            let c_inv = self.inv(c);
            let outside: Vec<usize> = sub.iter().copied().filter(|i| !cyc.contains(i)).collect();
            let inverts = outside.iter().all(|&x| self.conjugate(x, c) == c_inv);
            if inverts && outside.iter().all(|&x| self.orders[x] == 2) {
                SylowClass::Dihedral
            } else if inverts && outside.iter().all(|&x| self.orders[x] == 4) {
                SylowClass::GeneralizedQuaternion
            } else {
                SylowClass::Other
            }
        } else {
            SylowClass::Other
        };
        let frobenius_criterion = matches!(
            class,
            SylowClass::Cyclic | SylowClass::Klein4 | SylowClass::Dihedral | SylowClass::GeneralizedQuaternion
        );
        Ok(SylowReport { p, order, class, frobenius_criterion })
    }

    /// Conjugacy classes of the elements of order p, which must have a
    /// cyclic Sylow p-subgroup of order p.
    pub fn class_count_of_order(&self, p: Prime) -> Result<ClassCount> {
        if self.p_part(p) != p {
            return Err(Error::PreconditionViolated(format!(
                "Sylow {p}-subgroups of {} are not cyclic of order {p}",
                self.spec
            )));
        }
        let gens = self.generators();
        let targets: Vec<usize> = (0..self.elements.len()).filter(|&i| self.orders[i] == p).collect();
        let mut class_of: HashMap<usize, usize> = HashMap::new();
        let mut classes = 0usize;
        for &t in &targets {
            if class_of.contains_key(&t) {
                continue;
            }
            let mut queue = VecDeque::from([t]);
            class_of.insert(t, classes);
            while let Some(x) = queue.pop_front() {
                for &g in &gens {
                    let y = self.conjugate(g, x);
                    if let std::collections::hash_map::Entry::Vacant(v) = class_of.entry(y) {
                        v.insert(classes);
                        queue.push_back(y);
                    }
                }
            }
            classes += 1;
        }
        let u = self.closure(&[targets[0]]);
        let mut counts = vec![0u64; classes];
        for x in u.iter().filter(|&&x| x != self.identity) {
            counts[class_of[x]] += 1;
        }
        let per_class = counts[0];
        if counts.iter().any(|&c| c != per_class) || per_class * classes as u64 != p - 1 {
            return Err(Error::CrossCheckMismatch(format!(
                "order-{p} classes meet a Sylow subgroup unevenly: {counts:?}"
            )));
        }
        Ok(ClassCount { classes: classes as u64, per_class })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> ConcreteGroup {
        ConcreteGroup::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_groups_satisfy_axioms() {
        for s in ["PSL2 q=5", "SL2 q=5", "PGL2 q=7", "AUT q=8", "PSL2 q=4 * C3", "TRIVIAL * C6"] {
            let g = build(s);
            assert!(g.verify_axioms(500), "{s}");
        }
    }

    #[test]
    fn sl2_center_has_order_two() {
        let g = build("SL2 q=11");
        assert_eq!(g.order(), 1320);
        assert_eq!(g.center().len(), 2);
        assert_eq!(build("PSL2 q=11").center().len(), 1);
    }

    #[test]
    fn orders_respect_totient_divisibility() {
        let g = build("PGL2 q=9");
        for (o, n) in g.order_statistics() {
            assert_eq!(n % crate::arith::totient(o), 0);
        }
    }

    #[test]
    fn over_budget_and_modules_are_rejected() {
        assert!(matches!(
            ConcreteGroup::build(&"PSL2 q=128".parse().unwrap()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            ConcreteGroup::build(&"PSL2 q=16 * MODULE(r=3,row=chi10)".parse().unwrap()),
            Err(Error::UnsupportedDecoration(_))
        ));
    }

    #[test]
    fn sylow_of_psl2_5_is_klein() {
        let g = build("PSL2 q=5");
        assert_eq!(g.sylow_structure(2).unwrap().class, SylowClass::Klein4);
        assert_eq!(g.sylow_structure(5).unwrap().class, SylowClass::Cyclic);
    }
}
