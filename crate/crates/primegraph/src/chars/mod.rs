//! Fixed-point arithmetic over characters, generic SL(2,2^f) characters,
//! fixed-point tables and the module-extension graphs they induce.

pub mod cyclotomic;
pub mod table;

use std::collections::{BTreeMap, BTreeSet};

pub use cyclotomic::Cyclotomic;
pub use table::{builtin_tables, lookup, FixedPointRow, FixedPointTable};

use crate::error::{Error, Result};
use crate::groupkit::GroupSpec;
use crate::smallgraph::{Prime, PrimeGraph};
use crate::spectra;

/// Values of a character on g^0, …, g^(o−1) for an element g of order o,
/// each a cyclotomic integer in Z[ζ_o].
#[derive(Clone, Debug)]
pub struct CyclicCharRestriction {
    order: u64,
    values: Vec<Cyclotomic>,
}

impl CyclicCharRestriction {
    pub fn new(order: u64, values: Vec<Cyclotomic>) -> Result<Self> {
        if order == 0 || values.len() as u64 != order {
            return Err(Error::InvalidParameter(format!(
                "need {order} values, got {}",
                values.len()
            )));
        }
        if values.iter().any(|v| v.n() != order) {
            return Err(Error::InvalidParameter("values must lie in Z[ζ_o]".into()));
        }
        if values[0].as_integer().is_none() {
            return Err(Error::InvalidParameter("the value at the identity must be the degree".into()));
        }
        for k in 1..order as usize {
            if !values[k].equals(&values[order as usize - k].conj()) {
                return Err(Error::InvalidParameter(format!(
                    "values at g^{k} and g^{} are not complex conjugates",
                    order as usize - k
                )));
            }
        }
        Ok(CyclicCharRestriction { order, values })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> i64 {
        self.values[0].as_integer().expect("checked at construction")
    }
}

/// dim of the g-fixed subspace: (1/o) Σ_k χ(g^k), which must be a
/// non-negative integer for a genuine character.
pub fn fixed_point_dim(rest: &CyclicCharRestriction) -> Result<u64> {
    let o = rest.order;
    let total = rest.values.iter().cloned().fold(Cyclotomic::zero(o), |a, b| a + b);
    let sum = total
        .as_integer()
        .ok_or_else(|| Error::NonIntegralDimension(format!("Σ χ(g^k) is irrational for o = {o}")))?;
    if sum < 0 || sum % o as i64 != 0 {
        return Err(Error::NonIntegralDimension(format!("(1/{o})·{sum} is not a non-negative integer")));
    }
    Ok((sum / o as i64) as u64)
}

/// The three element classes used in the generic SL(2,2^f) argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenericElement {
    /// Order q = 2^f − 1 (split torus).
    MersenneTorus,
    /// Order 3 (inside the non-split torus of order 2^f + 1 = 3p).
    Three,
    /// Order p = (2^f + 1)/3.
    P,
}

impl GenericElement {
    pub fn from_order(f: u64, order: u64) -> Result<Self> {
        let r = spectra::k4_check(f);
        if order == r.q_minus {
            Ok(GenericElement::MersenneTorus)
        } else if order == 3 {
            Ok(GenericElement::Three)
        } else if order == r.p_plus {
            Ok(GenericElement::P)
        } else {
            Err(Error::InvalidParameter(format!(
                "order {order} is none of {}, 3, {} for f = {f}",
                r.q_minus, r.p_plus
            )))
        }
    }
}

/// Fixed-point dimensions of the four generic character families of
/// SL(2,2^f) (degrees 1, 2^f, 2^f+1, 2^f−1) on one element class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericFixedPoints {
    pub f: u64,
    pub element: GenericElement,
    pub element_order: u64,
    /// By exact root-of-unity summation.
    pub summed: [u64; 4],
    /// By the closed forms (1/o)(…) of the vanishing-edge argument.
    pub closed_form: [u64; 4],
}

impl GenericFixedPoints {
    pub fn all_positive(&self) -> bool {
        self.summed.iter().all(|&m| m > 0)
    }
}

/// The value printed for m₄ on the order-q class, which disagrees with the
/// arithmetic of its own formula (1/q)(2^f − 1) = 1.
pub fn printed_m4_on_mersenne_class(f: u64) -> u64 {
    spectra::k4_check(f).q_minus
}

/// Restrictions of 1, the Steinberg character, a principal-series character
/// (degree 2^f+1) and a discrete-series character (degree 2^f−1) to the
/// cyclic group generated by an element of the given class.
pub fn generic_restrictions(f: u64, element: GenericElement) -> Result<[CyclicCharRestriction; 4]> {
    let r = spectra::k4_check(f);
    if !r.is_k4 {
        return Err(Error::NotK4(f));
    }
    let two_f = 1i64 << f;
    let o = match element {
        GenericElement::MersenneTorus => r.q_minus,
        GenericElement::Three => 3,
        GenericElement::P => r.p_plus,
    };
    let int = |c: i64| Cyclotomic::integer(o, c);
    let on_powers = |degree: i64, f_k: &dyn Fn(i64) -> Cyclotomic| {
        let mut v = vec![int(degree)];
        v.extend((1..o as i64).map(f_k));
        v
    };
    let (st, ps, ds): (Vec<Cyclotomic>, Vec<Cyclotomic>, Vec<Cyclotomic>) = match element {
        // Split torus a^k: St = 1, principal series ρ^k + ρ^{−k}, discrete series 0.
        GenericElement::MersenneTorus => (
            on_powers(two_f, &|_| int(1)),
            on_powers(two_f + 1, &|k| Cyclotomic::two_cos(o, k)),
            on_powers(two_f - 1, &|_| int(0)),
        ),
        // Non-split torus b^k: St = −1, principal series 0, discrete series
        // −(σ^k + σ^{−k}), where σ restricted to ⟨g⟩ is a primitive o-th root.
        GenericElement::Three | GenericElement::P => (
            on_powers(two_f, &|_| int(-1)),
            on_powers(two_f + 1, &|_| int(0)),
            on_powers(two_f - 1, &|k| -Cyclotomic::two_cos(o, k)),
        ),
    };
    Ok([
        CyclicCharRestriction::new(o, vec![int(1); o as usize])?,
        CyclicCharRestriction::new(o, st)?,
        CyclicCharRestriction::new(o, ps)?,
        CyclicCharRestriction::new(o, ds)?,
    ])
}

pub fn generic_sl2_2f_fixed_points(f: u64, element: GenericElement) -> Result<GenericFixedPoints> {
    let rest = generic_restrictions(f, element)?;
    let o = rest[0].order();
    let mut summed = [0u64; 4];
    for (slot, r) in summed.iter_mut().zip(rest.iter()) {
        *slot = fixed_point_dim(r)?;
    }
    let two_f = 1u64 << f;
    let k4 = spectra::k4_check(f);
    let (q, p) = (k4.q_minus, k4.p_plus);
    let closed_form = match element {
        GenericElement::MersenneTorus => [1, two_f.div_ceil(q), (two_f + 1 - 2) / q, (two_f - 1) / q],
        GenericElement::Three => [1, (two_f - 2) / 3, (two_f + 1) / 3, (two_f + 1) / 3],
        GenericElement::P => [1, (two_f + 1 - p) / p, (two_f + 1) / p, (two_f - 1 + 2) / p],
    };
    if summed != closed_form {
        return Err(Error::CrossCheckMismatch(format!(
            "f = {f}, order {o}: summation {summed:?} vs closed forms {closed_form:?}"
        )));
    }
    Ok(GenericFixedPoints { f, element, element_order: o, summed, closed_form })
}

/// B_χ: the complement edges r−q that a module in characteristic r with
/// fixed-point row χ removes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeRemovalSet {
    pub b_chi: BTreeSet<(Prime, Prime)>,
}

fn edge(a: Prime, b: Prime) -> (Prime, Prime) {
    (a.min(b), a.max(b))
}

pub fn removal_set(row: &FixedPointRow, r: Prime, pgc_t: &PrimeGraph) -> EdgeRemovalSet {
    let b_chi = row
        .has_fixed_points
        .iter()
        .filter(|(_, &yes)| yes)
        .map(|(&q, _)| edge(r, q))
        .filter(|&(a, b)| pgc_t.has_edge(a, b))
        .collect();
    EdgeRemovalSet { b_chi }
}

/// pgc(T) minus ∪_{χ∈Y} B_χ over every nonempty set Y of rows of the
/// characteristic-r table of T.
pub fn extension_graphs(target: &GroupSpec, r: Prime) -> Result<BTreeSet<PrimeGraph>> {
    let table = lookup(target, r)?;
    extension_graphs_from(&table)
}

pub fn extension_graphs_from(table: &FixedPointTable) -> Result<BTreeSet<PrimeGraph>> {
    let pgc_t = spectra::pgc(&table.target)?;
    let sets: Vec<EdgeRemovalSet> =
        table.rows.iter().map(|row| removal_set(row, table.characteristic, &pgc_t)).collect();
    // Distinct unions; the number of rows is small, but deduplicate first.
    let distinct: BTreeSet<BTreeSet<(Prime, Prime)>> = sets.into_iter().map(|s| s.b_chi).collect();
    let distinct: Vec<_> = distinct.into_iter().collect();
    let mut unions: BTreeSet<BTreeSet<(Prime, Prime)>> = BTreeSet::new();
    for mask in 1u64..(1u64 << distinct.len()) {
        let mut u = BTreeSet::new();
        for (i, s) in distinct.iter().enumerate() {
            if mask >> i & 1 == 1 {
                u.extend(s.iter().copied());
            }
        }
        unions.insert(u);
    }
    Ok(unions
        .into_iter()
        .map(|u| {
            let mut g = pgc_t.clone();
            for (a, b) in u {
                g.remove_edge(a, b);
            }
            g
        })
        .collect())
}

/// Rows of a table grouped by their fixed-prime sets.
pub fn fixed_sets(table: &FixedPointTable) -> BTreeMap<BTreeSet<Prime>, Vec<String>> {
    let mut out: BTreeMap<BTreeSet<Prime>, Vec<String>> = BTreeMap::new();
    for r in &table.rows {
        out.entry(r.fixed()).or_default().push(r.label.clone());
    }
    out
}
