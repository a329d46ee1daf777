//! Sparse Laurent polynomials in `v` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·v^d`.
    pub fn monomial(c: i64, d: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(d, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn v_pow(d: i32) -> Self {
        Self::monomial(1, d)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, d: i32) -> i64 {
        self.coeffs.get(&d).copied().unwrap_or(0)
    }

    /// `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, c: i64, d: i32) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(d).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&d);
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&d, &x)| (d, x * c)).collect() }
    }

    /// Multiplies by `v^d`.
    pub fn shift(&self, d: i32) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&k, &x)| (k + d, x)).collect() }
    }

    /// `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&d, &x)| (-d, x)).collect() }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&d, &x)| self.coeff(-d) == x)
    }

    /// `c₀ + Σ_{d<0} c_d (v^d + v^{−d})`: the bar-symmetric polynomial that
    /// agrees with `self` in all nonpositive degrees.
    pub fn nonpositive_closure(&self) -> Self {
        let mut out = Self::zero();
        for (&d, &x) in self.coeffs.range(..=0) {
            out.add_term(x, d);
            if d < 0 {
                out.add_term(x, -d);
            }
        }
        out
    }

    /// True iff every term has strictly positive degree.
    pub fn in_v_z_v(&self) -> bool {
        self.min_degree().is_none_or(|d| d > 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn as_constant(&self) -> Option<i64> {
        match self.coeffs.len() {
            0 => Some(0),
            1 => self.coeffs.get(&0).copied(),
            _ => None,
        }
    }

    /// Exact division, returning `None` when the divisor does not divide.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (dd, dc) = divisor.terms().next_back().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let dmin = divisor.min_degree().unwrap();
        while let Some((&rd, &rc)) = rem.coeffs.iter().next_back() {
            if rc % dc != 0 || rd - dd < rem.min_degree().unwrap() - dmin {
                return None;
            }
            let q = LaurentPoly::monomial(rc / dc, rd - dd);
            rem -= &(&q * divisor);
            quot += &q;
        }
        Some(quot)
    }

    /// The quantum integer `[m] = v^{m−1} + v^{m−3} + … + v^{1−m}`.
    pub fn quantum_int(m: u32) -> Self {
        let m = m as i32;
        let mut out = Self::zero();
        for k in 0..m {
            out.add_term(1, m - 1 - 2 * k);
        }
        out
    }

    pub fn quantum_factorial(m: u32) -> Self {
        (1..=m).fold(Self::one(), |acc, k| &acc * &Self::quantum_int(k))
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending degree, e.g. `2v^2 + v - 3 + v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&d, &c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if n == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if d == 1 {
                        f.write_str("v")?;
                    } else {
                        write!(f, "v^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the [`Display`](fmt::Display) form.
impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Laurent polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = LaurentPoly::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            // the next sign not directly following '^' ends the term
            let bytes = body.as_bytes();
            let mut end = body.len();
            for k in 1..bytes.len() {
                if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^' {
                    end = k;
                    break;
                }
            }
            let term = &body[..end];
            rest = &body[end..];
            let (c, d) = match term.find('v') {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = if pos == 0 { 1 } else { term[..pos].parse::<i64>().map_err(|_| bad())? };
                    let tail = &term[pos + 1..];
                    let d = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^').ok_or_else(bad)?.parse::<i32>().map_err(|_| bad())?
                    };
                    (c, d)
                }
            };
            out.add_term(sign * c, d);
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, i64> = self.coeffs.iter().map(|(d, c)| (d.to_string(), *c)).collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, i64>::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for (k, c) in map {
            let deg = k.parse::<i32>().map_err(serde::de::Error::custom)?;
            out.add_term(c, deg);
        }
        Ok(out)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&d, &c) in &rhs.coeffs {
            self.add_term(c, d);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&d, &c) in &rhs.coeffs {
            self.add_term(-c, d);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&d1, &c1) in &self.coeffs {
            for (&d2, &c2) in &rhs.coeffs {
                out.add_term(c1 * c2, d1 + d2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}
