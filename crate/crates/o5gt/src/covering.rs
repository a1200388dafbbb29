//! The covering Sp4 -> SO5, exact symplectic sampling, and randomized
//! evaluation of minor symbols.
//!
//! A symplectic matrix acts on the second exterior power of the standard
//! four-dimensional space; the five-dimensional invariant complement of the
//! invariant bivector carries the image.  The basis used here is integral,
//!
//! ```text
//! w[-2] = e[-2]^e[-1],  w[-1] = e[-2]^e[1],
//! w[0]  = e[-2]^e[2] - e[-1]^e[1],
//! w[1]  = e[2]^e[-1],  w[2]  = e[1]^e[2],
//! ```
//!
//! so image matrices are exactly rational.  The invariant symmetric form in
//! this basis is antidiagonal with entries (1, 1, -2, 1, 1); the more common
//! all-ones antidiagonal normalization of `w[0]` involves sqrt(2) and is never
//! used here.  Consequently the transfer table for order-1 minors reads
//! `a[0] -> b[1,-1] + b[-2,2]` with constant one, and the order-2 table picks
//! up factors of two exactly where the orthonormal table has sqrt(2).

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{mat_mul, transpose, Matrix};
use crate::poly::MinorPoly;
use crate::scalar::{rat_frac, rat_int, Rat};
use crate::symbol::{ARow, ARows, MinorSymbol, A_INDICES, B_INDICES};

/// Positions of the Sp4 index set (-2,-1,1,2).
fn bpos(i: i8) -> usize {
    B_INDICES.iter().position(|&x| x == i).unwrap()
}

fn apos(i: i8) -> usize {
    A_INDICES.iter().position(|&x| x == i).unwrap()
}

/// Matrix of the symplectic form `e[-2]^e[2] + e[-1]^e[1]`.
pub fn symplectic_form() -> Matrix {
    let mut j = vec![vec![Rat::zero(); 4]; 4];
    j[bpos(-2)][bpos(2)] = rat_int(1);
    j[bpos(2)][bpos(-2)] = rat_int(-1);
    j[bpos(-1)][bpos(1)] = rat_int(1);
    j[bpos(1)][bpos(-1)] = rat_int(-1);
    j
}

/// Invariant form on the image side: antidiagonal (1, 1, -2, 1, 1).
pub fn so5_form() -> Matrix {
    let mut g = vec![vec![Rat::zero(); 5]; 5];
    g[apos(-2)][apos(2)] = rat_int(1);
    g[apos(-1)][apos(1)] = rat_int(1);
    g[apos(0)][apos(0)] = rat_int(-2);
    g[apos(1)][apos(-1)] = rat_int(1);
    g[apos(2)][apos(-2)] = rat_int(1);
    g
}

pub fn is_symplectic(m: &Matrix) -> bool {
    let j = symplectic_form();
    mat_mul(&mat_mul(&transpose(m), &j), m) == j
}

/// True when `n^T G n = G` for the antidiagonal (1,1,-2,1,1) form.
pub fn is_so5_orthogonal(n: &Matrix) -> bool {
    let g = so5_form();
    mat_mul(&mat_mul(&transpose(n), &g), n) == g
}

/// The five basis bivectors, each a list of (i, j, coefficient) with i < j in
/// the column order (-2,-1,1,2).
fn bivector_basis() -> [Vec<(i8, i8, Rat)>; 5] {
    [
        vec![(-2, -1, rat_int(1))],
        vec![(-2, 1, rat_int(1))],
        vec![(-2, 2, rat_int(1)), (-1, 1, rat_int(-1))],
        vec![(2, -1, rat_int(1))],
        vec![(1, 2, rat_int(1))],
    ]
}

/// Image of an exactly symplectic matrix on the invariant five-dimensional
/// subspace of the second exterior power.
pub fn covering_map(m: &Matrix) -> Result<Matrix> {
    if !is_symplectic(m) {
        return Err(Error::NotSymplectic);
    }
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| -> Rat {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    // coordinates of g.(e_a ^ e_b) on e_x ^ e_y are the (x,y | a,b) minors
    let mut n = vec![vec![Rat::zero(); 5]; 5];
    for (col, bv) in bivector_basis().iter().enumerate() {
        // image bivector in Lambda^2 coordinates, keyed by (x, y) with x < y
        let mut image: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for (a, b, coeff) in bv {
            let (ca, cb) = (bpos(*a), bpos(*b));
            for x in 0..4 {
                for y in (x + 1)..4 {
                    let v = minor(x, y, ca, cb);
                    if !v.is_zero() {
                        *image.entry((x, y)).or_insert_with(Rat::zero) += &v * coeff;
                    }
                }
            }
        }
        let get = |image: &BTreeMap<(usize, usize), Rat>, a: i8, b: i8| -> Rat {
            let (x, y) = (bpos(a), bpos(b));
            let (key, sign) = if x < y { ((x, y), 1) } else { ((y, x), -1) };
            image.get(&key).cloned().unwrap_or_else(Rat::zero) * rat_int(sign)
        };
        // decompose over (w[-2], w[-1], w[0], w[1], w[2], invariant bivector)
        let c_m2m1 = get(&image, -2, -1);
        let c_m21 = get(&image, -2, 1);
        let c_2m1 = get(&image, 2, -1);
        let c_12 = get(&image, 1, 2);
        let x = get(&image, -2, 2);
        let y = get(&image, -1, 1);
        // x = w0 + beta, y = -w0 + beta with beta the invariant component
        let w0 = (&x - &y) * rat_frac(1, 2);
        let beta = (&x + &y) * rat_frac(1, 2);
        if !beta.is_zero() {
            return Err(Error::Construction(
                "image leaves the invariant five-dimensional subspace".into(),
            ));
        }
        n[apos(-2)][col] = c_m2m1;
        n[apos(-1)][col] = c_m21;
        n[apos(0)][col] = w0;
        n[apos(1)][col] = c_2m1;
        n[apos(2)][col] = c_12;
    }
    Ok(n)
}

/// Deterministic pseudo-random stream (splitmix64).
#[derive(Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            state: seed ^ 0x9e3779b97f4a7c15,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Deterministic exactly-symplectic sample: a product of `steps` factors
/// `exp(t f)` over nilpotent root elements `f` with small rational `t`.
/// Every such factor is `I + t f` exactly since `f^2 = 0`.
pub fn random_symplectic(seed: u64, steps: u32) -> Matrix {
    let roots: [(i8, i8); 8] = [
        (-2, -1),
        (-2, 1),
        (-2, 2),
        (-1, 1),
        (-1, -2),
        (1, -2),
        (2, -2),
        (1, -1),
    ];
    let mut rng = Rng::new(seed);
    let mut m = crate::linalg::identity(4);
    for _ in 0..steps {
        let (i, j) = roots[rng.below(8) as usize];
        let num = rng.below(7) as i64 - 3;
        let den = rng.below(3) as i64 + 1;
        if num == 0 {
            continue;
        }
        let t = rat_frac(num, den);
        let f = crate::operator::defining_matrix(i, j);
        let mut factor = crate::linalg::identity(4);
        for (r, row) in f.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    factor[r][c] += v * &t;
                }
            }
        }
        m = mat_mul(&m, &factor);
    }
    m
}

/// One exact sample of the group together with its covering image and the
/// values of every minor symbol on it.
#[derive(Clone)]
pub struct GroupSample {
    pub sp4_matrix: Matrix,
    pub so5_image: Matrix,
    pub minor_values: BTreeMap<MinorSymbol, Rat>,
}

impl GroupSample {
    pub fn from_matrix(m: Matrix) -> Result<GroupSample> {
        let n = covering_map(&m)?;
        let mut values = BTreeMap::new();
        // b[i]: row -2 entries; b[i,j]: row (-2,-1) minors of m
        for &i in &B_INDICES {
            values.insert(MinorSymbol::b1(i), m[0][bpos(i)].clone());
        }
        for &i in &B_INDICES {
            for &j in &B_INDICES {
                if i < j {
                    let det = &(&m[0][bpos(i)] * &m[1][bpos(j)]) - &(&m[0][bpos(j)] * &m[1][bpos(i)]);
                    values.insert(MinorSymbol::b2(i, j).unwrap().0, det);
                }
            }
        }
        // primed avatars evaluate as their base symbols
        for p in [
            crate::symbol::Prime::B1Prime,
            crate::symbol::Prime::B1DoublePrime,
            crate::symbol::Prime::B2Prime,
            crate::symbol::Prime::B2DoublePrime,
        ] {
            let v = values[&MinorSymbol::b1(p.base_index())].clone();
            values.insert(MinorSymbol::B1P(p), v);
        }
        // a-symbols from the image, including the row-shifted families
        let arow = |tag: ARow| -> usize {
            match tag {
                ARow::M2 => apos(-2),
                ARow::M1 => apos(-1),
            }
        };
        for &i in &A_INDICES {
            for tag in [ARow::M2, ARow::M1] {
                values.insert(MinorSymbol::A1(tag, i), n[arow(tag)][apos(i)].clone());
            }
        }
        let rows_of = |rows: ARows| -> (usize, usize) {
            match rows {
                ARows::M2M1 => (apos(-2), apos(-1)),
                ARows::M2Zero => (apos(-2), apos(0)),
                ARows::M2One => (apos(-2), apos(1)),
            }
        };
        for rows in [ARows::M2M1, ARows::M2Zero, ARows::M2One] {
            let (r1, r2) = rows_of(rows);
            for &i in &A_INDICES {
                for &j in &A_INDICES {
                    if i < j {
                        let det = &(&n[r1][apos(i)] * &n[r2][apos(j)])
                            - &(&n[r1][apos(j)] * &n[r2][apos(i)]);
                        values.insert(MinorSymbol::a2_rows(rows, i, j).unwrap().0, det);
                    }
                }
            }
        }
        Ok(GroupSample {
            sp4_matrix: m,
            so5_image: n,
            minor_values: values,
        })
    }

    pub fn generate(seed: u64, steps: u32) -> GroupSample {
        Self::from_matrix(random_symplectic(seed, steps)).expect("sampler produced a non-symplectic matrix")
    }
}

/// Exact evaluation of a polynomial on a sample.
pub fn eval_assignment(p: &MinorPoly, sample: &GroupSample) -> Result<Rat> {
    p.eval(&sample.minor_values)
}

/// The frozen minor-transfer table: each standard-row a-symbol equals the
/// paired B-polynomial as a function on Sp4 composed with the covering.
///
/// Constants follow the integral `w[0]` normalization: factor 2 in place of
/// sqrt 2, `a[0] -> b[1,-1] + b[-2,2]` with constant one, and the order-2
/// signs fixed by exact evaluation in this basis (the orthonormal table's row
/// signs differ on the entries marked below).
pub fn transfer_table() -> Vec<(MinorSymbol, MinorPoly)> {
    let b1 = |i: i8| MinorPoly::symbol(MinorSymbol::b1(i));
    let b2 = |i: i8, j: i8| {
        let (s, sg) = MinorSymbol::b2(i, j).unwrap();
        MinorPoly::symbol(s).scale(&rat_int(sg))
    };
    let two = rat_int(2);
    vec![
        // order one
        (MinorSymbol::a1(-2), b2(-2, -1)),
        (MinorSymbol::a1(-1), b2(-2, 1)),
        (MinorSymbol::a1(0), &b2(1, -1) + &b2(-2, 2)),
        (MinorSymbol::a1(1), b2(2, -1)),
        (MinorSymbol::a1(2), b2(1, 2)),
        // order two
        (MinorSymbol::a2(-2, -1).unwrap().0, b1(-2).pow(2)),
        (MinorSymbol::a2(-2, 0).unwrap().0, (&b1(-2) * &b1(-1)).scale(&-two.clone())), // sign flipped
        (MinorSymbol::a2(-1, 0).unwrap().0, (&b1(-2) * &b1(1)).scale(&-two.clone())), // sign flipped
        (
            MinorSymbol::a2(-2, 2).unwrap().0, // sign flipped
            &-&(&b1(-2) * &b1(2)) - &(&b1(-1) * &b1(1)),
        ),
        (
            MinorSymbol::a2(-1, 1).unwrap().0, // sign flipped
            &(&b1(-1) * &b1(1)) - &(&b1(-2) * &b1(2)),
        ),
        (MinorSymbol::a2(0, 1).unwrap().0, (&b1(-1) * &b1(2)).scale(&two)),
        (MinorSymbol::a2(0, 2).unwrap().0, (&b1(1) * &b1(2)).scale(&rat_int(-2))),
        (MinorSymbol::a2(-2, 1).unwrap().0, b1(-1).pow(2)),
        (MinorSymbol::a2(-1, 2).unwrap().0, b1(1).pow(2).scale(&rat_int(-1))), // sign flipped
        (MinorSymbol::a2(1, 2).unwrap().0, b1(2).pow(2).scale(&rat_int(-1))), // sign flipped
    ]
}

/// Transfer an a-alphabet polynomial to the B-alphabet through the table.
pub fn transfer_to_b(p: &MinorPoly) -> Result<MinorPoly> {
    let table: BTreeMap<MinorSymbol, MinorPoly> = transfer_table().into_iter().collect();
    let mut out = MinorPoly::zero();
    for (m, c) in p.terms() {
        let mut term = MinorPoly::constant(c.clone());
        for (s, e) in m.iter_nonzero() {
            let image = table
                .get(&s)
                .ok_or_else(|| Error::MissingSymbolValue(format!("no transfer image for {s}")))?;
            term = &term * &image.pow(e as u32);
        }
        out += &term;
    }
    Ok(out)
}
