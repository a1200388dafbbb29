//! Dense exact linear algebra over rationals, and echelonized spans of
//! polynomials keyed by leading monomial.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MinorPoly;
use crate::scalar::{rat_one, Rat};

pub type Matrix = Vec<Vec<Rat>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, k) = (a.len(), b.len());
    let m = b[0].len();
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    let prod = &a[i][l] * &b[l][j];
                    out[i][j] += prod;
                }
            }
        }
    }
    out
}

pub fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let (n, m) = (a.len(), a[0].len());
    let mut out = vec![vec![Rat::zero(); n]; m];
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            out[j][i] = x.clone();
        }
    }
    out
}

pub fn is_zero_matrix(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

pub fn determinant(a: &Matrix) -> Rat {
    let n = a.len();
    let mut m: Matrix = a.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = rat_one() / &m[col][col];
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Solve `A x = b` for square invertible `A`.
pub fn solve(a: &Matrix, b: &[Rat]) -> Result<Vec<Rat>> {
    let n = a.len();
    let mut m: Matrix = a.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::InconsistentSystem("singular matrix".into()))?;
        m.swap(pivot, col);
        rhs.swap(pivot, col);
        let inv = rat_one() / &m[col][col];
        for c in col..n {
            m[col][c] = &m[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
                let delta = &factor * &rhs[col];
                rhs[r] -= delta;
            }
        }
    }
    Ok(rhs)
}

/// Basis of the right kernel `{x : A x = 0}`, scaled to integer entries.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Rat>> {
    if a.is_empty() {
        return Vec::new();
    }
    let rows = a.len();
    let cols = a[0].len();
    let mut m: Matrix = a.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = rat_one() / &m[r][c];
        for cc in c..cols {
            m[r][cc] = &m[r][cc] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for cc in c..cols {
                    let delta = &factor * &m[r][cc];
                    m[i][cc] -= delta;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(scale_to_integers(&v));
    }
    basis
}

/// Clear denominators and divide by the integer content.
pub fn scale_to_integers(v: &[Rat]) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut gcd = BigInt::zero();
    for n in &ints {
        gcd = gcd.gcd(n);
    }
    if gcd.is_zero() {
        gcd = BigInt::one();
    }
    ints.into_iter()
        .map(|n| Rat::from_integer(n / &gcd))
        .collect()
}

/// An echelonized span of polynomials.
///
/// Rows are append-only, each monic in its leading monomial; reduction against
/// the rows yields exact coordinates.  Rows are not inter-reduced, so indices
/// remain stable while a closure computation grows the span.
#[derive(Clone, Default)]
pub struct PolySpan {
    rows: Vec<MinorPoly>,
    lead_index: std::collections::BTreeMap<crate::symbol::Monomial, usize>,
}

impl PolySpan {
    pub fn new() -> Self {
        PolySpan::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[MinorPoly] {
        &self.rows
    }

    /// Reduce `p` against the span.  Returns the remainder and the coordinates
    /// of `p - remainder` over the rows.
    pub fn reduce(&self, p: &MinorPoly) -> (MinorPoly, Vec<Rat>) {
        let mut coords = vec![Rat::zero(); self.rows.len()];
        let mut work = p.clone();
        let mut rem = MinorPoly::zero();
        while let Some((m, c)) = work.pop_leading() {
            match self.lead_index.get(&m) {
                Some(&i) => {
                    coords[i] += &c;
                    // subtract c * row_i; the lead cancels the popped term
                    work += &self.rows[i].scale(&-c.clone());
                    work.add_term(m, c);
                }
                None => rem.add_term(m, c),
            }
        }
        (rem, coords)
    }

    /// Insert `p` if independent; returns true when the span grew.
    pub fn insert(&mut self, p: &MinorPoly) -> bool {
        let (rem, _) = self.reduce(p);
        match rem.leading() {
            None => false,
            Some((m, c)) => {
                let lead = *m;
                let monic = rem.scale(&(rat_one() / c));
                self.lead_index.insert(lead, self.rows.len());
                self.rows.push(monic);
                true
            }
        }
    }

    pub fn contains(&self, p: &MinorPoly) -> bool {
        self.reduce(p).0.is_zero()
    }

    /// Exact coordinates of `p` over the rows, or NotInSpan.
    pub fn coordinates(&self, p: &MinorPoly) -> Result<Vec<Rat>> {
        let (rem, coords) = self.reduce(p);
        if rem.is_zero() {
            Ok(coords)
        } else {
            Err(Error::NotInSpan)
        }
    }
}

/// Pretty size measure for pivot selection in reports.
pub fn rat_bit_size(x: &Rat) -> u64 {
    (x.numer().abs().bits() + x.denom().bits()) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_frac, rat_int};
    use crate::symbol::MinorSymbol;

    #[test]
    fn solve_and_det() {
        let a = vec![
            vec![rat_int(2), rat_int(1)],
            vec![rat_int(1), rat_int(3)],
        ];
        assert_eq!(determinant(&a), rat_int(5));
        let x = solve(&a, &[rat_int(3), rat_int(4)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(1)]);
    }

    #[test]
    fn kernel() {
        let a = vec![vec![rat_int(1), rat_int(2), rat_int(3)]];
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Rat = v
                .iter()
                .zip(&a[0])
                .map(|(x, y)| x * y)
                .fold(rat_int(0), |acc, t| acc + t);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn span_reduction() {
        let b = |i: i8| MinorPoly::symbol(MinorSymbol::b1(i));
        let mut span = PolySpan::new();
        assert!(span.insert(&(&b(-2) + &b(-1))));
        assert!(span.insert(&b(-1)));
        assert!(!span.insert(&(&b(-2) + &b(-1).scale(&rat_int(5)))));
        let coords = span
            .coordinates(&(&b(-2).scale(&rat_frac(1, 2)) + &b(-1)))
            .unwrap();
        assert_eq!(coords.len(), 2);
        assert!(span.coordinates(&b(2)).is_err());
    }
}
