//! GF(p^k) with table-driven arithmetic. Elements are indices
//! `c_0 + c_1 p + … + c_{k-1} p^{k-1}` of their coefficient vectors.

use crate::arith::prime_power;
use crate::error::{Error, Result};

/// An element written out as its coefficient vector (low degree first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub coefficients: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct Field {
    pub p: u64,
    pub k: u32,
    pub q: usize,
    /// Monic modulus, low degree first, leading 1 included.
    pub modulus: Vec<u64>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    frob: Vec<u16>,
}

fn poly_mod(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    // m monic
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap() % p;
        if lead == 0 {
            continue;
        }
        let shift = a.len() - dm;
        for i in 0..dm {
            let t = (lead * m[i]) % p;
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
    }
    a.resize(dm, 0);
    a
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// True when the monic polynomial `f` (degree ≥ 1) has no monic factor of
/// degree 1..=deg/2.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g: Vec<u64> = (0..d).map(|i| (idx / p.pow(i as u32)) % p).collect();
            g.push(1);
            let r = poly_mod(f.to_vec(), &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree k, comparing the
/// coefficient vectors low degree first.
fn least_irreducible(p: u64, k: u32) -> Vec<u64> {
    let total = p.pow(k);
    for rank in 0..total {
        // rank's most significant base-p digit is c_0.
        let mut coeffs = vec![0u64; k as usize];
        let mut r = rank;
        for i in (0..k as usize).rev() {
            coeffs[i] = r % p;
            r /= p;
        }
        coeffs.push(1);
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl Field {
    pub fn new(q: u64) -> Result<Field> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        if q > 1 << 12 {
            return Err(Error::InvalidParameter(format!("field of size {q} is too large for tables")));
        }
        let qs = q as usize;
        let modulus = if k == 1 { vec![0, 1] } else { least_irreducible(p, k) };
        let to_vec = |x: usize| -> Vec<u64> {
            (0..k).map(|i| (x as u64 / p.pow(i)) % p).collect()
        };
        let to_idx = |v: &[u64]| -> u16 {
            v.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u16
        };
        let vecs: Vec<Vec<u64>> = (0..qs).map(to_vec).collect();
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let s: Vec<u64> = vecs[a].iter().zip(&vecs[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = to_idx(&s);
                let m = if k == 1 {
                    vec![(vecs[a][0] * vecs[b][0]) % p]
                } else {
                    poly_mod(poly_mul(&vecs[a], &vecs[b], p), &modulus, p)
                };
                mul[a * qs + b] = to_idx(&m);
            }
        }
        let mut neg = vec![0u16; qs];
        let mut inv = vec![0u16; qs];
        for a in 0..qs {
            for b in 0..qs {
                if add[a * qs + b] == 0 {
                    neg[a] = b as u16;
                }
                if mul[a * qs + b] == 1 {
                    inv[a] = b as u16;
                }
            }
        }
        let mut frob = vec![0u16; qs];
        for a in 0..qs {
            let mut acc = 1u16;
            for _ in 0..p {
                acc = mul[acc as usize * qs + a];
            }
            frob[a] = acc;
        }
        Ok(Field { p, k, q: qs, modulus, add, mul, neg, inv, frob })
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }
    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg[b as usize])
    }
    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }
    /// Multiplicative inverse; `inv(0)` is reported as 0.
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }
    /// x ↦ x^(p^times).
    #[inline]
    pub fn frobenius(&self, mut a: u16, times: u32) -> u16 {
        for _ in 0..(times % self.k) {
            a = self.frob[a as usize];
        }
        a
    }

    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn elem(&self, idx: u16) -> FieldElem {
        FieldElem {
            coefficients: (0..self.k).map(|i| (idx as u64 / self.p.pow(i)) % self.p).collect(),
        }
    }

    pub fn index_of(&self, e: &FieldElem) -> Result<u16> {
        if e.coefficients.len() != self.k as usize || e.coefficients.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidParameter("coefficients do not describe a field element".into()));
        }
        Ok(e.coefficients.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as u16)
    }
}
