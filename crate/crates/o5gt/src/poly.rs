//! Sparse polynomials in minor symbols over exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::Error;
use crate::scalar::{fmt_rat, parse_rat, rat_one, Rat};
use crate::symbol::{MinorSymbol, Monomial, Prime};

/// Sparse multivariate polynomial; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MinorPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MinorPoly {
    pub fn zero() -> Self {
        MinorPoly::default()
    }

    pub fn one() -> Self {
        MinorPoly::constant(rat_one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = MinorPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut p = MinorPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn symbol(sym: MinorSymbol) -> Self {
        Self::monomial(Monomial::var(sym, 1), rat_one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Largest term in the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn pop_leading(&mut self) -> Option<(Monomial, Rat)> {
        let m = *self.terms.keys().next_back()?;
        let c = self.terms.remove(&m).unwrap();
        Some((m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> MinorPoly {
        if c.is_zero() {
            return MinorPoly::zero();
        }
        MinorPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> MinorPoly {
        if c.is_zero() {
            return MinorPoly::zero();
        }
        MinorPoly {
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MinorPoly {
        let mut acc = MinorPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to one symbol.
    pub fn derivative(&self, sym: MinorSymbol) -> MinorPoly {
        let mut out = MinorPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(sym);
            if e > 0 {
                let mut m2 = *m;
                m2.set_exp(sym, e - 1);
                out.add_term(m2, c * crate::scalar::rat_int(e as i64));
            }
        }
        out
    }

    /// Replace the primed avatars `b1'`, `b1''`, `b2'`, `b2''` by `b[1]`, `b[2]`.
    pub fn specialize_primes(&self) -> MinorPoly {
        let mut out = MinorPoly::zero();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            for prime in [Prime::B1Prime, Prime::B1DoublePrime, Prime::B2Prime, Prime::B2DoublePrime] {
                let sym = MinorSymbol::B1P(prime);
                let e = m2.exp(sym);
                if e > 0 {
                    m2.set_exp(sym, 0);
                    let base = MinorSymbol::b1(prime.base_index());
                    m2.set_exp(base, m2.exp(base) + e);
                }
            }
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Exact evaluation; every symbol occurring must have a value.
    pub fn eval(&self, values: &BTreeMap<MinorSymbol, Rat>) -> Result<Rat, Error> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for (s, e) in m.iter_nonzero() {
                let v = values
                    .get(&s)
                    .ok_or_else(|| Error::MissingSymbolValue(s.name()))?;
                for _ in 0..e {
                    prod *= v;
                }
            }
            acc += prod;
        }
        Ok(acc)
    }

    /// The common weight of all monomials, or None when inhomogeneous.
    pub fn weight(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        for m in it {
            if m.weight() != w {
                return None;
            }
        }
        Some(w)
    }

    pub fn has_a_symbols(&self) -> bool {
        self.terms.keys().any(|m| m.has_a_symbols())
    }

    pub fn has_b_symbols(&self) -> bool {
        self.terms.keys().any(|m| m.has_b_symbols())
    }

    /// `other = c * self` for one nonzero rational c.
    pub fn proportionality(&self, other: &MinorPoly) -> Option<Rat> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        let (m, c) = self.leading()?;
        let (m2, c2) = other.leading()?;
        if m != m2 {
            return None;
        }
        let ratio = c2 / c;
        if &self.scale(&ratio) == other {
            Some(ratio)
        } else {
            None
        }
    }

    /// Serialize per the wire format: a list of `{"coeff": "p/q", "monomial": {...}}`
    /// in decreasing monomial order.
    pub fn to_json(&self) -> Value {
        let mut out = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut mono = serde_json::Map::new();
            for (s, e) in m.iter_nonzero() {
                mono.insert(s.name(), json!(e));
            }
            out.push(json!({"coeff": fmt_rat(c), "monomial": Value::Object(mono)}));
        }
        Value::Array(out)
    }

    pub fn from_json(v: &Value) -> Result<MinorPoly, Error> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be a list".into()))?;
        let mut p = MinorPoly::zero();
        for term in arr {
            let c = parse_rat(
                term["coeff"]
                    .as_str()
                    .ok_or_else(|| Error::Parse("missing coeff".into()))?,
            )?;
            let mono = term["monomial"]
                .as_object()
                .ok_or_else(|| Error::Parse("missing monomial".into()))?;
            let mut m = Monomial::one();
            for (name, e) in mono {
                let sym = MinorSymbol::parse(name)?;
                let e = e
                    .as_u64()
                    .ok_or_else(|| Error::Parse("bad exponent".into()))?;
                m.set_exp(sym, e as u16);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

impl Add for &MinorPoly {
    type Output = MinorPoly;
    fn add(self, rhs: &MinorPoly) -> MinorPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl AddAssign<&MinorPoly> for MinorPoly {
    fn add_assign(&mut self, rhs: &MinorPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub for &MinorPoly {
    type Output = MinorPoly;
    fn sub(self, rhs: &MinorPoly) -> MinorPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &MinorPoly {
    type Output = MinorPoly;
    fn neg(self) -> MinorPoly {
        MinorPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &MinorPoly {
    type Output = MinorPoly;
    fn mul(self, rhs: &MinorPoly) -> MinorPoly {
        let mut out = MinorPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

fn fmt_poly(p: &MinorPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (m, c) in p.terms.iter().rev() {
        let cs = fmt_rat(c);
        if first {
            first = false;
            if m.is_one() {
                write!(f, "{cs}")?;
            } else if cs == "1" {
                write!(f, "{m}")?;
            } else if cs == "-1" {
                write!(f, "-{m}")?;
            } else {
                write!(f, "{cs}*{m}")?;
            }
        } else {
            let (sign, mag) = if cs.starts_with('-') {
                ("-", cs.trim_start_matches('-').to_string())
            } else {
                ("+", cs)
            };
            if m.is_one() {
                write!(f, " {sign} {mag}")?;
            } else if mag == "1" {
                write!(f, " {sign} {m}")?;
            } else {
                write!(f, " {sign} {mag}*{m}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for MinorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl fmt::Debug for MinorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_frac, rat_int};

    fn b(i: i8) -> MinorPoly {
        MinorPoly::symbol(MinorSymbol::b1(i))
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&b(-2) * &b(-1)) - &b(1).scale(&rat_frac(1, 2));
        assert_eq!(p.n_terms(), 2);
        assert_eq!(p.to_string(), "b[-2]*b[-1] - 1/2*b[1]");
        let q = &p - &p;
        assert!(q.is_zero());
    }

    #[test]
    fn derivative_and_specialize() {
        let bp = MinorPoly::symbol(MinorSymbol::B1P(Prime::B1Prime));
        let bpp = MinorPoly::symbol(MinorSymbol::B1P(Prime::B1DoublePrime));
        let p = &bp * &bpp;
        let s = p.specialize_primes();
        assert_eq!(s, b(1).pow(2));
        let d = s.derivative(MinorSymbol::b1(1));
        assert_eq!(d, b(1).scale(&rat_int(2)));
    }

    #[test]
    fn json_round_trip() {
        let p = &(&b(-2) * &b(2)).scale(&rat_frac(-7, 3)) + &MinorPoly::one();
        let v = p.to_json();
        let q = MinorPoly::from_json(&v).unwrap();
        assert_eq!(p, q);
    }
}
