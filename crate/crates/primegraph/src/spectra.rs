//! Closed-form orders, element-order spectra and prime graphs for the
//! PSL(2,q) families, plus the K4 arithmetic of PSL(2,2^f).

use crate::arith::{gcd, is_prime, is_prime_trial, lcm, pow_mod, prime_divisors, prime_power};
use crate::error::{Error, Result};
use crate::groupkit::{Decoration, Family, GroupSpec};
use crate::smallgraph::{complement, Prime, PrimeGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumSummary {
    pub q: u64,
    pub char_p: u64,
    pub d: u64,
    pub torus_minus: u64,
    pub torus_plus: u64,
    pub group_order: u64,
}

fn check_q(q: u64) -> Result<(u64, u32)> {
    match prime_power(q) {
        Some(pk) if q >= 4 => Ok(pk),
        _ => Err(Error::InvalidParameter(format!("q = {q} must be a prime power ≥ 4"))),
    }
}

/// Order and torus data of PSL(2,q).
pub fn summary(q: u64) -> Result<SpectrumSummary> {
    let (p, _) = check_q(q)?;
    let d = gcd(2, q - 1);
    Ok(SpectrumSummary {
        q,
        char_p: p,
        d,
        torus_minus: (q - 1) / d,
        torus_plus: (q + 1) / d,
        group_order: q * (q * q - 1) / d,
    })
}

/// Maximal element orders of PGL(2,q0): every element order divides one
/// of them.
fn pgl2_max_orders(q0: u64) -> Vec<u64> {
    let (p, _) = prime_power(q0).expect("prime power");
    vec![p, q0 - 1, q0 + 1]
}

/// Maximal orders in the cosets PGL(2,p^k)·φ^j for the listed j, by
/// Shintani descent: an element of the coset has order m·o with
/// g = gcd(j,k), m = k/g and o an element order of PGL(2,p^g).
fn frobenius_coset_orders(p: u64, k: u32, js: impl Iterator<Item = u32>) -> Vec<u64> {
    let mut out = Vec::new();
    for j in js {
        let g = gcd(j as u64, k as u64) as u32;
        let m = (k / g) as u64;
        for o in pgl2_max_orders(p.pow(g)) {
            out.push(m * o);
        }
    }
    out
}

/// A list of orders such that the element orders of the group are exactly
/// the divisors of the listed numbers.
pub fn max_orders(spec: &GroupSpec) -> Result<Vec<u64>> {
    spec.validate()?;
    let q = spec.q;
    let mut base: Vec<u64> = match spec.family {
        Family::Trivial => vec![1],
        _ => {
            let (p, k) = check_q(q)?;
            let s = summary(q)?;
            let psl = vec![p, s.torus_minus, s.torus_plus];
            match spec.family {
                Family::Psl2 if spec.is_central2() => vec![2 * p, q - 1, q + 1],
                Family::Sl2 if p != 2 => vec![2 * p, q - 1, q + 1],
                Family::Psl2 | Family::Sl2 => psl,
                Family::Pgl2 => pgl2_max_orders(q),
                Family::AutPsl2 => {
                    let mut v = pgl2_max_orders(q);
                    v.extend(frobenius_coset_orders(p, k, 1..k));
                    v
                }
                Family::Psl2Field(e) => {
                    if p != 2 {
                        return Err(Error::UnsupportedTarget(format!(
                            "analytic spectrum of {spec} (odd characteristic field extension)"
                        )));
                    }
                    let step = k / e;
                    let mut v = psl;
                    v.extend(frobenius_coset_orders(p, k, (1..e).map(|i| i * step)));
                    v
                }
                Family::Trivial => unreachable!(),
            }
        }
    };
    // Cosets of the Frobenius acting on a twisted factor keep their Aut orders;
    // only the PSL part combines with the cyclic factor.
    let twisted_core: Option<Vec<u64>> = if spec.decorations.iter().any(|d| matches!(d, Decoration::TwistedCyclic(_))) {
        let s = summary(q)?;
        Some(vec![s.char_p, s.torus_minus, s.torus_plus])
    } else {
        None
    };
    for d in &spec.decorations {
        match d {
            Decoration::Central2 => {}
            Decoration::TimesCyclic(n) => {
                base = base.iter().map(|&o| lcm(o, *n)).collect();
            }
            Decoration::TwistedCyclic(n) => {
                let core = twisted_core.as_ref().expect("computed above");
                base.extend(core.iter().map(|&o| lcm(o, *n)));
            }
            Decoration::SemidirectModule { .. } => {
                return Err(Error::UnsupportedDecoration(format!(
                    "{spec}: module layers have no closed-form spectrum"
                )));
            }
        }
    }
    base.sort_unstable();
    base.dedup();
    Ok(base)
}

/// Γ on `primes` with r−s iff rs divides one of `orders`.
pub fn graph_from_orders(primes: &[Prime], orders: &[u64]) -> PrimeGraph {
    let mut g = PrimeGraph::new(primes.iter().copied()).expect("primes");
    for (i, &r) in primes.iter().enumerate() {
        for &s in &primes[i + 1..] {
            if orders.iter().any(|o| o % (r * s) == 0) {
                g.add_edge(r, s).expect("endpoints present");
            }
        }
    }
    g
}

/// Γ(G) for any spec with a closed-form spectrum.
pub fn prime_graph(spec: &GroupSpec) -> Result<PrimeGraph> {
    let orders = max_orders(spec)?;
    let order = spec.analytic_order().ok_or_else(|| Error::UnsupportedDecoration(spec.to_string()))?;
    Ok(graph_from_orders(&prime_divisors(order), &orders))
}

/// pgc(G) for any spec with a closed-form spectrum.
pub fn pgc(spec: &GroupSpec) -> Result<PrimeGraph> {
    prime_graph(spec).map(|g| complement(&g))
}

pub fn psl2_prime_graph(q: u64) -> Result<PrimeGraph> {
    check_q(q)?;
    prime_graph(&GroupSpec::psl2(q)?)
}

pub fn pgl2_prime_graph(q: u64) -> Result<PrimeGraph> {
    check_q(q)?;
    prime_graph(&GroupSpec::pgl2(q)?)
}

pub fn sl2_prime_graph(q: u64) -> Result<PrimeGraph> {
    check_q(q)?;
    prime_graph(&GroupSpec::sl2(q)?)
}

/// Γ(Aut(PSL(2,q))) = Γ(PΓL(2,q)).
pub fn aut_psl2_prime_graph(q: u64) -> Result<PrimeGraph> {
    check_q(q)?;
    prime_graph(&GroupSpec::aut(q)?)
}

/// Γ(Aut(PSL(2,2^f))) for a K4 exponent f.
pub fn aut_psl2_2f_prime_graph(f: u64) -> Result<PrimeGraph> {
    if !k4_check(f).is_k4 {
        return Err(Error::NotK4(f));
    }
    aut_psl2_prime_graph(1u64 << f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K4Report {
    pub f: u64,
    pub q_minus: u64,
    pub p_plus: u64,
    pub is_k4: bool,
}

fn k4_with(f: u64, prime: fn(u64) -> bool) -> K4Report {
    let q_minus = if f < 64 { (1u64 << f) - 1 } else { u64::MAX };
    let p_plus = if f < 63 { ((1u64 << f) + 1) / 3 } else { 0 };
    let is_k4 = (5..63).contains(&f) && prime(f) && prime(q_minus) && prime(p_plus);
    K4Report { f, q_minus, p_plus, is_k4 }
}

/// PSL(2,2^f) is a K4 group exactly when 2^f−1 and (2^f+1)/3 are prime.
/// Exponents beyond 62 do not fit the machine word and report `false`.
pub fn k4_check(f: u64) -> K4Report {
    k4_with(f, is_prime)
}

/// Same as [`k4_check`] using trial division only (an independent back-end).
pub fn k4_check_trial(f: u64) -> K4Report {
    k4_with(f, is_prime_trial)
}

/// Reports for every prime 5 ≤ f ≤ max_f.
pub fn k4_scan(max_f: u64) -> Vec<K4Report> {
    (5..=max_f).filter(|&f| is_prime(f)).map(k4_check).collect()
}

/// True iff f does not divide 2^f(2^{2f}−1), checked via 4^f mod f.
pub fn f_coprimality(f: u64) -> bool {
    if f < 2 {
        return false;
    }
    2 % f != 0 && pow_mod(4, f, f) != 1 % f
}
