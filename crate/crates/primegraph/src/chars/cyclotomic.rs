//! Exact arithmetic in Z[ζ_n], stored densely modulo x^n − 1 and reduced
//! modulo the cyclotomic polynomial Φ_n when a canonical form is needed.

use std::ops::{Add, Mul, Neg};

use crate::arith::divisors;

/// Σ_e coeffs[e] ζ_n^e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    n: u64,
    coeffs: Vec<i64>,
}

/// Φ_n as a dense integer polynomial, low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // x^n − 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Quotient of `a` by the monic `b`; the caller guarantees exactness.
fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let (q, r) = poly_divmod(a, b);
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

fn poly_divmod(a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (vec![0], r);
    }
    let mut q = vec![0i64; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        q[i - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i - db + j] -= c * bj;
        }
    }
    r.truncate(db);
    (q, r)
}

impl Cyclotomic {
    pub fn zero(n: u64) -> Self {
        Cyclotomic { n, coeffs: vec![0; n as usize] }
    }

    pub fn integer(n: u64, c: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = c;
        z
    }

    /// ζ_n^e.
    pub fn root(n: u64, e: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[e.rem_euclid(n as i64) as usize] = 1;
        z
    }

    /// ζ_n^e + ζ_n^{−e}.
    pub fn two_cos(n: u64, e: i64) -> Self {
        Self::root(n, e) + Self::root(n, -e)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn conj(&self) -> Self {
        let mut z = Self::zero(self.n);
        for (e, &c) in self.coeffs.iter().enumerate() {
            z.coeffs[(self.n as usize - e) % self.n as usize] += c;
        }
        z
    }

    /// Canonical coefficients: the remainder modulo Φ_n.
    pub fn reduced(&self) -> Vec<i64> {
        let (_, mut r) = poly_divmod(&self.coeffs, &cyclotomic_polynomial(self.n));
        while r.len() > 1 && *r.last().unwrap() == 0 {
            r.pop();
        }
        if r.is_empty() {
            r.push(0);
        }
        r
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        if r.len() == 1 {
            Some(r[0])
        } else {
            None
        }
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.n == other.n && self.reduced() == other.reduced()
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(mut self, rhs: Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, rhs.n, "mixed cyclotomic fields");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for a in self.coeffs.iter_mut() {
            *a = -*a;
        }
        self
    }
}

impl Mul<i64> for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(mut self, k: i64) -> Cyclotomic {
        for a in self.coeffs.iter_mut() {
            *a *= k;
        }
        self
    }
}
