//! The closed alphabet of minor symbols on SO5 and Sp4/GL4, and dense
//! exponent-vector monomials over it.
//!
//! Symbols come in five families:
//!   * `B1`   - order-1 minors `b[i]` on Sp4, columns i in {-2,-1,1,2}
//!   * `B1P`  - primed splittings `b1'`, `b1''`, `b2'`, `b2''` of `b[1]`, `b[2]`
//!   * `B2`   - order-2 minors `b[i,j]` (rows -2,-1), antisymmetric in i,j
//!   * `A1`   - order-1 minors on SO5; row -2 by default, row -1 also occurs
//!              under left shifts
//!   * `A2`   - order-2 minors on SO5 with row pairs (-2,-1), (-2,0), (-2,1)
//!
//! The monomial order is degree-then-lexicographic with the code order below
//! (B1, then B1P, then B2) most significant; this is the order used for
//! Pluecker normal forms.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// Column indices on the Sp4 side.
pub const B_INDICES: [i8; 4] = [-2, -1, 1, 2];
/// Column indices on the SO5 side.
pub const A_INDICES: [i8; 5] = [-2, -1, 0, 1, 2];

/// Number of distinct symbols.
pub const N_SYMBOLS: usize = 54;

/// Primed avatars of `b[1]` and `b[2]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Prime {
    B1Prime,
    B1DoublePrime,
    B2Prime,
    B2DoublePrime,
}

impl Prime {
    /// The plain column index this avatar specializes to.
    pub fn base_index(self) -> i8 {
        match self {
            Prime::B1Prime | Prime::B1DoublePrime => 1,
            Prime::B2Prime | Prime::B2DoublePrime => 2,
        }
    }
}

/// Row tag of an order-1 SO5 minor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ARow {
    M2,
    M1,
}

/// Row pair of an order-2 SO5 minor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ARows {
    M2M1,
    M2Zero,
    M2One,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MinorSymbol {
    B1(i8),
    B1P(Prime),
    B2(i8, i8),
    A1(ARow, i8),
    A2(ARows, i8, i8),
}

use MinorSymbol::*;

fn b_pos(i: i8) -> usize {
    B_INDICES.iter().position(|&x| x == i).expect("bad b index")
}

fn a_pos(i: i8) -> usize {
    A_INDICES.iter().position(|&x| x == i).expect("bad a index")
}

/// Position of the unordered pair (i,j), i<j, in the lexicographic pair list.
fn pair_pos(indices: &[i8], i: i8, j: i8) -> usize {
    let mut k = 0;
    for (x, &a) in indices.iter().enumerate() {
        for &b in &indices[x + 1..] {
            if a == i && b == j {
                return k;
            }
            k += 1;
        }
    }
    panic!("bad index pair ({i},{j})");
}

impl MinorSymbol {
    /// Plain `b[i]`; `i` must be one of -2,-1,1,2.
    pub fn b1(i: i8) -> MinorSymbol {
        let _ = b_pos(i);
        B1(i)
    }

    /// Canonical `b[i,j]` with a sign: `b2(j,i) = (b[i,j], -1)` for i<j.
    /// Returns None when i == j (the minor vanishes).
    pub fn b2(i: i8, j: i8) -> Option<(MinorSymbol, i64)> {
        let _ = (b_pos(i), b_pos(j));
        match i.cmp(&j) {
            Ordering::Less => Some((B2(i, j), 1)),
            Ordering::Greater => Some((B2(j, i), -1)),
            Ordering::Equal => None,
        }
    }

    /// Standard-row `a[i]`.
    pub fn a1(i: i8) -> MinorSymbol {
        let _ = a_pos(i);
        A1(ARow::M2, i)
    }

    /// Canonical standard-row `a[i,j]` with antisymmetry sign, as [`Self::b2`].
    pub fn a2(i: i8, j: i8) -> Option<(MinorSymbol, i64)> {
        Self::a2_rows(ARows::M2M1, i, j)
    }

    pub fn a2_rows(rows: ARows, i: i8, j: i8) -> Option<(MinorSymbol, i64)> {
        let _ = (a_pos(i), a_pos(j));
        match i.cmp(&j) {
            Ordering::Less => Some((A2(rows, i, j), 1)),
            Ordering::Greater => Some((A2(rows, j, i), -1)),
            Ordering::Equal => None,
        }
    }

    /// Dense code in 0..N_SYMBOLS; doubles as lexicographic significance.
    pub fn code(self) -> usize {
        match self {
            B1(i) => b_pos(i),
            B1P(p) => 4 + p as usize,
            B2(i, j) => 8 + pair_pos(&B_INDICES, i, j),
            A1(ARow::M2, i) => 14 + a_pos(i),
            A2(ARows::M2M1, i, j) => 19 + pair_pos(&A_INDICES, i, j),
            A1(ARow::M1, i) => 29 + a_pos(i),
            A2(ARows::M2Zero, i, j) => 34 + pair_pos(&A_INDICES, i, j),
            A2(ARows::M2One, i, j) => 44 + pair_pos(&A_INDICES, i, j),
        }
    }

    pub fn from_code(code: usize) -> MinorSymbol {
        ALL_SYMBOLS[code]
    }

    pub fn is_b_alphabet(self) -> bool {
        matches!(self, B1(_) | B1P(_) | B2(..))
    }

    pub fn is_a_alphabet(self) -> bool {
        !self.is_b_alphabet()
    }

    pub fn is_primed(self) -> bool {
        matches!(self, B1P(_))
    }

    /// (order-1 count, order-2 count) contributed by one power of this symbol.
    pub fn bidegree(self) -> (i64, i64) {
        match self {
            B1(_) | B1P(_) | A1(..) => (1, 0),
            B2(..) | A2(..) => (0, 1),
        }
    }

    /// Exact weight of the symbol under the two Cartan substitutions:
    /// `(f[-2,-2], f[-1,-1])` eigenvalues on the Sp4 side,
    /// `(F[-2,-2], F[-1,-1])` eigenvalues on the SO5 side.
    pub fn weight(self) -> (i64, i64) {
        fn eps_b(i: i8) -> (i64, i64) {
            match i {
                -2 => (1, 0),
                -1 => (0, 1),
                1 => (0, -1),
                2 => (-1, 0),
                _ => unreachable!(),
            }
        }
        fn eps_a(i: i8) -> (i64, i64) {
            match i {
                -2 => (1, 0),
                -1 => (0, 1),
                0 => (0, 0),
                1 => (0, -1),
                2 => (-1, 0),
                _ => unreachable!(),
            }
        }
        fn add(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
            (a.0 + b.0, a.1 + b.1)
        }
        match self {
            B1(i) => eps_b(i),
            B1P(p) => eps_b(p.base_index()),
            B2(i, j) => add(eps_b(i), eps_b(j)),
            A1(_, i) => eps_a(i),
            A2(_, i, j) => add(eps_a(i), eps_a(j)),
        }
    }

    /// Column index set, for substitution operators.
    pub fn columns(self) -> Vec<i8> {
        match self {
            B1(i) => vec![i],
            B1P(p) => vec![p.base_index()],
            B2(i, j) | A2(_, i, j) => vec![i, j],
            A1(_, i) => vec![i],
        }
    }

    pub fn name(self) -> String {
        match self {
            B1(i) => format!("b[{i}]"),
            B1P(Prime::B1Prime) => "b1'".into(),
            B1P(Prime::B1DoublePrime) => "b1''".into(),
            B1P(Prime::B2Prime) => "b2'".into(),
            B1P(Prime::B2DoublePrime) => "b2''".into(),
            B2(i, j) => format!("b[{i},{j}]"),
            A1(ARow::M2, i) => format!("a[{i}]"),
            A1(ARow::M1, i) => format!("a^(-1)[{i}]"),
            A2(ARows::M2M1, i, j) => format!("a[{i},{j}]"),
            A2(ARows::M2Zero, i, j) => format!("a^(-2,0)[{i},{j}]"),
            A2(ARows::M2One, i, j) => format!("a^(-2,1)[{i},{j}]"),
        }
    }

    pub fn parse(name: &str) -> Result<MinorSymbol, Error> {
        for &s in ALL_SYMBOLS.iter() {
            if s.name() == name {
                return Ok(s);
            }
        }
        Err(Error::Parse(format!("unknown symbol {name:?}")))
    }
}

impl fmt::Display for MinorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// All symbols indexed by code.
pub static ALL_SYMBOLS: [MinorSymbol; N_SYMBOLS] = build_symbol_table();

const fn build_symbol_table() -> [MinorSymbol; N_SYMBOLS] {
    let mut t = [B1(-2); N_SYMBOLS];
    let b = B_INDICES;
    let a = A_INDICES;
    let mut k = 0;
    let mut i = 0;
    while i < 4 {
        t[k] = B1(b[i]);
        k += 1;
        i += 1;
    }
    t[k] = B1P(Prime::B1Prime);
    t[k + 1] = B1P(Prime::B1DoublePrime);
    t[k + 2] = B1P(Prime::B2Prime);
    t[k + 3] = B1P(Prime::B2DoublePrime);
    k += 4;
    i = 0;
    while i < 4 {
        let mut j = i + 1;
        while j < 4 {
            t[k] = B2(b[i], b[j]);
            k += 1;
            j += 1;
        }
        i += 1;
    }
    i = 0;
    while i < 5 {
        t[k] = A1(ARow::M2, a[i]);
        k += 1;
        i += 1;
    }
    i = 0;
    while i < 5 {
        let mut j = i + 1;
        while j < 5 {
            t[k] = A2(ARows::M2M1, a[i], a[j]);
            k += 1;
            j += 1;
        }
        i += 1;
    }
    i = 0;
    while i < 5 {
        t[k] = A1(ARow::M1, a[i]);
        k += 1;
        i += 1;
    }
    i = 0;
    while i < 5 {
        let mut j = i + 1;
        while j < 5 {
            t[k] = A2(ARows::M2Zero, a[i], a[j]);
            k += 1;
            j += 1;
        }
        i += 1;
    }
    i = 0;
    while i < 5 {
        let mut j = i + 1;
        while j < 5 {
            t[k] = A2(ARows::M2One, a[i], a[j]);
            k += 1;
            j += 1;
        }
        i += 1;
    }
    t
}

/// A symbol with a sign, used for gamma-series slots like `-b1'`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedSymbol {
    pub symbol: MinorSymbol,
    pub sign: i64,
}

impl SignedSymbol {
    pub fn plus(symbol: MinorSymbol) -> Self {
        SignedSymbol { symbol, sign: 1 }
    }

    pub fn minus(symbol: MinorSymbol) -> Self {
        SignedSymbol { symbol, sign: -1 }
    }

    pub fn name(&self) -> String {
        if self.sign < 0 {
            format!("-{}", self.symbol.name())
        } else {
            self.symbol.name()
        }
    }

    pub fn parse(name: &str) -> Result<SignedSymbol, Error> {
        if let Some(rest) = name.strip_prefix('-') {
            Ok(SignedSymbol::minus(MinorSymbol::parse(rest)?))
        } else {
            Ok(SignedSymbol::plus(MinorSymbol::parse(name)?))
        }
    }
}

/// Dense exponent vector over the full symbol alphabet.
///
/// `Ord` is the graded lexicographic monomial order: total degree first,
/// then the first code where exponents differ decides (larger exponent on a
/// more significant symbol wins).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; N_SYMBOLS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; N_SYMBOLS],
        }
    }

    pub fn var(sym: MinorSymbol, e: u16) -> Self {
        let mut m = Self::one();
        m.exps[sym.code()] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, sym: MinorSymbol) -> u16 {
        self.exps[sym.code()]
    }

    pub fn set_exp(&mut self, sym: MinorSymbol, e: u16) {
        self.exps[sym.code()] = e;
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for k in 0..N_SYMBOLS {
            m.exps[k] = m.exps[k].checked_add(other.exps[k]).expect("exponent overflow");
        }
        m
    }

    /// Componentwise division; None when not divisible.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for k in 0..N_SYMBOLS {
            m.exps[k] = m.exps[k].checked_sub(other.exps[k])?;
        }
        Some(m)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..N_SYMBOLS).all(|k| self.exps[k] <= other.exps[k])
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (MinorSymbol, u16)> + '_ {
        (0..N_SYMBOLS).filter_map(move |k| {
            if self.exps[k] > 0 {
                Some((MinorSymbol::from_code(k), self.exps[k]))
            } else {
                None
            }
        })
    }

    pub fn weight(&self) -> (i64, i64) {
        let mut w = (0i64, 0i64);
        for (s, e) in self.iter_nonzero() {
            let sw = s.weight();
            w.0 += sw.0 * e as i64;
            w.1 += sw.1 * e as i64;
        }
        w
    }

    pub fn bidegree(&self) -> (i64, i64) {
        let mut d = (0i64, 0i64);
        for (s, e) in self.iter_nonzero() {
            let sd = s.bidegree();
            d.0 += sd.0 * e as i64;
            d.1 += sd.1 * e as i64;
        }
        d
    }

    pub fn has_a_symbols(&self) -> bool {
        self.iter_nonzero().any(|(s, _)| s.is_a_alphabet())
    }

    pub fn has_b_symbols(&self) -> bool {
        self.iter_nonzero().any(|(s, _)| s.is_b_alphabet())
    }

    pub fn has_primes(&self) -> bool {
        self.iter_nonzero().any(|(s, _)| s.is_primed())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for k in 0..N_SYMBOLS {
            match self.exps[k].cmp(&other.exps[k]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in self.iter_nonzero() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_a_permutation() {
        for (k, s) in ALL_SYMBOLS.iter().enumerate() {
            assert_eq!(s.code(), k, "code mismatch for {s}");
        }
    }

    #[test]
    fn canonical_pair_signs() {
        let (s, sg) = MinorSymbol::b2(2, -1).unwrap();
        assert_eq!(s, MinorSymbol::B2(-1, 2));
        assert_eq!(sg, -1);
        assert!(MinorSymbol::b2(1, 1).is_none());
        let (s, sg) = MinorSymbol::a2(0, -2).unwrap();
        assert_eq!(s, MinorSymbol::A2(ARows::M2M1, -2, 0));
        assert_eq!(sg, -1);
    }

    #[test]
    fn names_round_trip() {
        for &s in ALL_SYMBOLS.iter() {
            assert_eq!(MinorSymbol::parse(&s.name()).unwrap(), s);
        }
        assert_eq!(SignedSymbol::parse("-b1'").unwrap(), SignedSymbol::minus(MinorSymbol::B1P(Prime::B1Prime)));
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        // b[-2]*b[-1,1] > b[-1]*b[-2,1] > b[1]*b[-2,-1]: the three monomials of
        // the first flag relation in decreasing order.
        let m1 = Monomial::var(MinorSymbol::b1(-2), 1).mul(&Monomial::var(MinorSymbol::b2(-1, 1).unwrap().0, 1));
        let m2 = Monomial::var(MinorSymbol::b1(-1), 1).mul(&Monomial::var(MinorSymbol::b2(-2, 1).unwrap().0, 1));
        let m3 = Monomial::var(MinorSymbol::b1(1), 1).mul(&Monomial::var(MinorSymbol::b2(-2, -1).unwrap().0, 1));
        assert!(m1 > m2 && m2 > m3);
        // degree dominates
        let deg3 = m3.mul(&Monomial::var(MinorSymbol::b1(2), 1));
        assert!(deg3 > m1);
    }

    #[test]
    fn weights_and_bidegrees() {
        assert_eq!(MinorSymbol::b1(-2).weight(), (1, 0));
        assert_eq!(MinorSymbol::b2(-1, 2).unwrap().0.weight(), (-1, 1));
        assert_eq!(MinorSymbol::a1(0).weight(), (0, 0));
        assert_eq!(MinorSymbol::B1P(Prime::B2DoublePrime).weight(), (-1, 0));
        let m = Monomial::var(MinorSymbol::b1(-2), 2).mul(&Monomial::var(MinorSymbol::b2(-2, -1).unwrap().0, 1));
        assert_eq!(m.weight(), (3, 1));
        assert_eq!(m.bidegree(), (2, 1));
    }
}
