//! Symbolic group descriptions shared by the enumeration engine, the
//! analytic spectra and the witness blueprints.

use std::fmt;

use crate::arith::{gcd, is_prime, prime_power};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// The trivial group (base of purely solvable constructions).
    Trivial,
    Sl2,
    Psl2,
    Pgl2,
    /// PSL(2,q) extended by its field automorphisms of order `e` (e | k).
    Psl2Field(u32),
    /// Aut(PSL(2,q)) = PΓL(2,q).
    AutPsl2,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    /// Direct product with a cyclic group of order n.
    TimesCyclic(u64),
    /// The perfect central extension 2.T (odd q); turns PSL2 into SL2.
    Central2,
    /// Split extension by a module in characteristic r whose fixed-point
    /// pattern is the named row of the (T, r) Brauer table.
    SemidirectModule { r: u64, row: String },
    /// (T × C_n) ⋊ C_f with the field automorphism acting Frobeniusly on
    /// C_n (only meaningful on top of Aut(PSL(2,2^f))).
    TwistedCyclic(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub family: Family,
    pub q: u64,
    pub decorations: Vec<Decoration>,
}

impl GroupSpec {
    pub fn new(family: Family, q: u64) -> Result<GroupSpec> {
        let spec = GroupSpec { family, q, decorations: Vec::new() };
        spec.validate()?;
        Ok(spec)
    }

    pub fn trivial() -> GroupSpec {
        GroupSpec { family: Family::Trivial, q: 1, decorations: Vec::new() }
    }

    pub fn psl2(q: u64) -> Result<GroupSpec> {
        Self::new(Family::Psl2, q)
    }

    pub fn sl2(q: u64) -> Result<GroupSpec> {
        Self::new(Family::Sl2, q)
    }

    pub fn pgl2(q: u64) -> Result<GroupSpec> {
        Self::new(Family::Pgl2, q)
    }

    pub fn aut(q: u64) -> Result<GroupSpec> {
        Self::new(Family::AutPsl2, q)
    }

    pub fn with(mut self, d: Decoration) -> Result<GroupSpec> {
        self.decorations.push(d);
        self.validate()?;
        Ok(self)
    }

    pub fn char_p(&self) -> u64 {
        prime_power(self.q).map(|(p, _)| p).unwrap_or(1)
    }

    pub fn field_degree(&self) -> u32 {
        prime_power(self.q).map(|(_, k)| k).unwrap_or(0)
    }

    pub fn is_central2(&self) -> bool {
        self.family == Family::Sl2
            || (self.family == Family::Psl2 && self.decorations.contains(&Decoration::Central2))
    }

    pub fn validate(&self) -> Result<()> {
        if self.family == Family::Trivial {
            if self.decorations.iter().any(|d| !matches!(d, Decoration::TimesCyclic(_))) {
                return Err(Error::InvalidParameter("the trivial group only takes cyclic factors".into()));
            }
            return Ok(());
        }
        let (p, k) = prime_power(self.q)
            .ok_or_else(|| Error::InvalidParameter(format!("q = {} is not a prime power", self.q)))?;
        if self.q < 4 {
            return Err(Error::InvalidParameter(format!("q = {} is below 4", self.q)));
        }
        if let Family::Psl2Field(e) = self.family {
            if e == 0 || k % e != 0 {
                return Err(Error::InvalidParameter(format!(
                    "field automorphism order {e} does not divide {k}"
                )));
            }
        }
        for d in &self.decorations {
            match d {
                Decoration::Central2 => {
                    if p == 2 {
                        return Err(Error::InvalidParameter("CENTRAL_2 needs odd q".into()));
                    }
                    if self.family != Family::Psl2 {
                        return Err(Error::InvalidParameter("CENTRAL_2 applies to PSL2 only".into()));
                    }
                }
                Decoration::TimesCyclic(n) | Decoration::TwistedCyclic(n) => {
                    if *n == 0 {
                        return Err(Error::InvalidParameter("cyclic factor of order 0".into()));
                    }
                }
                Decoration::SemidirectModule { r, .. } => {
                    if !is_prime(*r) {
                        return Err(Error::InvalidParameter(format!("module characteristic {r} is not prime")));
                    }
                }
            }
            if let Decoration::TwistedCyclic(n) = d {
                if self.family != Family::AutPsl2 || p != 2 || !is_prime(*n) {
                    return Err(Error::InvalidParameter(
                        "TWISTED_C needs Aut(PSL(2,2^f)) and a prime order".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Order of the analytic group, when it is determined by the spec
    /// (module layers have no fixed dimension, so they give `None`).
    pub fn analytic_order(&self) -> Option<u64> {
        let q = self.q;
        let base: u64 = match self.family {
            Family::Trivial => 1,
            Family::Sl2 => q * (q * q - 1),
            Family::Psl2 => q * (q * q - 1) / gcd(2, q - 1),
            Family::Pgl2 => q * (q * q - 1),
            Family::Psl2Field(e) => q * (q * q - 1) / gcd(2, q - 1) * e as u64,
            Family::AutPsl2 => q * (q * q - 1) * self.field_degree() as u64,
        };
        let mut order = base;
        for d in &self.decorations {
            match d {
                Decoration::TimesCyclic(n) | Decoration::TwistedCyclic(n) => order = order.checked_mul(*n)?,
                Decoration::Central2 => order = order.checked_mul(2)?,
                Decoration::SemidirectModule { .. } => return None,
            }
        }
        Some(order)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Trivial => write!(f, "TRIVIAL")?,
            Family::Sl2 => write!(f, "SL2 q={}", self.q)?,
            Family::Psl2 => write!(f, "PSL2 q={}", self.q)?,
            Family::Pgl2 => write!(f, "PGL2 q={}", self.q)?,
            Family::Psl2Field(e) => write!(f, "PSL2:C{e} q={}", self.q)?,
            Family::AutPsl2 => write!(f, "AUT q={}", self.q)?,
        }
        for d in &self.decorations {
            match d {
                Decoration::TimesCyclic(n) => write!(f, " * C{n}")?,
                Decoration::Central2 => write!(f, " * CENTRAL_2")?,
                Decoration::SemidirectModule { r, row } => write!(f, " * MODULE(r={r},row={row})")?,
                Decoration::TwistedCyclic(n) => write!(f, " * TWISTED_C{n}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    /// Accepts the [`fmt::Display`] form, e.g. `PSL2 q=16 * C3`,
    /// `AUT q=32 * TWISTED_C11`, `PSL2 q=11 * CENTRAL_2`,
    /// `PSL2 q=16 * MODULE(r=3,row=chi10)`. `2.PSL2 q=11` is an alias for
    /// the central extension and `AUT_PSL2_2F` for `AUT` with q = 2^f, f prime.
    fn from_str(s: &str) -> Result<GroupSpec> {
        let bad = |m: String| Error::Parse { line: 1, msg: m };
        let mut parts = s.split('*').map(str::trim);
        let head = parts.next().unwrap_or("");
        let mut words = head.split_whitespace();
        let fam_word = words.next().ok_or_else(|| bad("empty group spec".into()))?;
        let mut decorations = Vec::new();
        let family = match fam_word {
            "TRIVIAL" => Family::Trivial,
            "SL2" => Family::Sl2,
            "PSL2" => Family::Psl2,
            "2.PSL2" => {
                decorations.push(Decoration::Central2);
                Family::Psl2
            }
            "PGL2" => Family::Pgl2,
            "AUT" | "AUT_PSL2_2F" => Family::AutPsl2,
            w if w.starts_with("PSL2:C") => {
                let e: u32 = w[6..].parse().map_err(|_| bad(format!("bad field extension {w:?}")))?;
                Family::Psl2Field(e)
            }
            w => return Err(bad(format!("unknown family {w:?}"))),
        };
        let q = if family == Family::Trivial {
            1
        } else {
            let qw = words.next().ok_or_else(|| bad("missing q=".into()))?;
            qw.strip_prefix("q=")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| bad(format!("bad parameter {qw:?}")))?
        };
        if let Some(extra) = words.next() {
            return Err(bad(format!("unexpected token {extra:?}")));
        }
        if fam_word == "AUT_PSL2_2F" {
            match prime_power(q) {
                Some((2, f)) if is_prime(f as u64) => {}
                _ => return Err(bad(format!("AUT_PSL2_2F needs q = 2^f with f prime, got {q}"))),
            }
        }
        for part in parts {
            let d = if part == "CENTRAL_2" {
                Decoration::Central2
            } else if let Some(n) = part.strip_prefix("TWISTED_C") {
                Decoration::TwistedCyclic(n.parse().map_err(|_| bad(format!("bad decoration {part:?}")))?)
            } else if let Some(n) = part.strip_prefix('C') {
                Decoration::TimesCyclic(n.parse().map_err(|_| bad(format!("bad decoration {part:?}")))?)
            } else if let Some(body) = part.strip_prefix("MODULE(").and_then(|b| b.strip_suffix(')')) {
                let mut r = None;
                let mut row = None;
                for kv in body.split(',') {
                    match kv.trim().split_once('=') {
                        Some(("r", v)) => r = v.trim().parse().ok(),
                        Some(("row", v)) => row = Some(v.trim().to_string()),
                        _ => return Err(bad(format!("bad module field {kv:?}"))),
                    }
                }
                match (r, row) {
                    (Some(r), Some(row)) => Decoration::SemidirectModule { r, row },
                    _ => return Err(bad(format!("module needs r= and row=: {part:?}"))),
                }
            } else {
                return Err(bad(format!("unknown decoration {part:?}")));
            };
            decorations.push(d);
        }
        let spec = GroupSpec { family, q, decorations };
        spec.validate().map_err(|e| bad(e.to_string()))?;
        Ok(spec)
    }
}
