//! Brute-force model of an irreducible representation as a space of minor
//! polynomials, used as ground truth for dimensions, branching, and basis
//! verification.
//!
//! Starting from the highest-vector polynomial
//! `b[-2,-1]^(m2-m1) b[-2]^(2 m1)` the four lowering operators are applied
//! until the span closes; all arithmetic is exact and every vector is kept in
//! Pluecker normal form.

use serde_json::{json, Value};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::normal_form;
use crate::labels::HighestWeight;
use crate::linalg::PolySpan;
use crate::operator::{apply_operator, OperatorSpec};
use crate::poly::MinorPoly;
use crate::scalar::{HalfInt, Rat};
use crate::symbol::{MinorSymbol, Monomial};

/// Weyl dimension of the irreducible with highest weight `[m2, m1]`:
/// `(m2-m1+1)(m2+m1+2)(2m2+3)(2m1+1)/6`.
pub fn weyl_dim(w: HighestWeight) -> i64 {
    let (t2, t1) = (w.m2.twice(), w.m1.twice());
    let a = (t2 - t1) / 2 + 1;
    let b = (t2 + t1) / 2 + 2;
    let c = t2 + 3;
    let d = t1 + 1;
    let prod = a * b * c * d;
    assert!(prod % 6 == 0, "Weyl dimension is not an integer");
    prod / 6
}

/// The irreducible representation realized on polynomials in normal form.
pub struct RepSpace {
    pub weight: HighestWeight,
    span: PolySpan,
    /// map from sp4 weight to the indices of basis rows with that weight
    pub weight_table: BTreeMap<(i64, i64), Vec<usize>>,
}

/// The four lowering root elements.
fn lowering_ops() -> [OperatorSpec; 4] {
    [
        OperatorSpec::f_sp4(-1, -2),
        OperatorSpec::f_sp4(1, -2),
        OperatorSpec::f_sp4(2, -2),
        OperatorSpec::f_sp4(1, -1),
    ]
}

/// Highest-vector polynomial `b[-2,-1]^(m2-m1) b[-2]^(2 m1)`.
pub fn highest_vector(w: HighestWeight) -> MinorPoly {
    let mut m = Monomial::one();
    m.set_exp(
        MinorSymbol::b2(-2, -1).unwrap().0,
        u16::try_from((w.m2.twice() - w.m1.twice()) / 2).unwrap(),
    );
    m.set_exp(MinorSymbol::b1(-2), u16::try_from(w.m1.twice()).unwrap());
    MinorPoly::monomial(m, crate::scalar::rat_one())
}

/// Build the irreducible by lowering-operator closure.
pub fn build_irrep(w: HighestWeight) -> Result<RepSpace> {
    let mut span = PolySpan::new();
    let v0 = normal_form(&highest_vector(w))?;
    span.insert(&v0);
    let cap = 4 * ((w.m2.twice() + w.m1.twice()) / 2) + 8;
    let mut frontier = vec![span.rows()[0].clone()];
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        if rounds > cap {
            return Err(Error::Construction(format!(
                "closure for {w} did not terminate within {cap} rounds"
            )));
        }
        let mut next = Vec::new();
        for p in &frontier {
            for op in lowering_ops() {
                let image = normal_form(&apply_operator(op, p)?)?;
                if image.is_zero() {
                    continue;
                }
                let before = span.dim();
                if span.insert(&image) {
                    next.push(span.rows()[before].clone());
                }
            }
        }
        frontier = next;
    }
    let mut weight_table: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (i, row) in span.rows().iter().enumerate() {
        let wrow = row
            .weight()
            .ok_or_else(|| Error::Construction("inhomogeneous basis row".into()))?;
        weight_table.entry(wrow).or_default().push(i);
    }
    Ok(RepSpace {
        weight: w,
        span,
        weight_table,
    })
}

impl RepSpace {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn basis(&self) -> &[MinorPoly] {
        self.span.rows()
    }

    /// Exact coordinates of `p` (given in normal form) over the basis.
    pub fn expand_in_basis(&self, p: &MinorPoly) -> Result<Vec<Rat>> {
        self.span.coordinates(p)
    }

    pub fn contains(&self, p: &MinorPoly) -> bool {
        self.span.contains(p)
    }

    /// Matrix of a generator in the oracle basis (columns are images).
    pub fn operator_matrix(&self, op: OperatorSpec) -> Result<Vec<Vec<Rat>>> {
        let n = self.dim();
        let mut cols = Vec::with_capacity(n);
        for row in self.basis() {
            let image = normal_form(&apply_operator(op, row)?)?;
            cols.push(self.expand_in_basis(&image)?);
        }
        let mut m = vec![vec![Rat::from_integer(0.into()); n]; n];
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[i][j] = x.clone();
            }
        }
        Ok(m)
    }

    /// Basis of the h-highest vectors of h-weight `2 s`: the kernel of the
    /// raising element `f[-2,1]` inside the eigenspace of
    /// `f[-2,-2] - f[1,1] = f[-2,-2] + f[-1,-1]` with eigenvalue `2 s`.
    pub fn h_highest_subspace(&self, s: HalfInt) -> Result<Vec<MinorPoly>> {
        let target = s.twice();
        let mut indices = Vec::new();
        for ((x, y), rows) in &self.weight_table {
            if x + y == target {
                indices.extend(rows.iter().copied());
            }
        }
        if indices.is_empty() {
            return Ok(Vec::new());
        }
        let raise = OperatorSpec::f_sp4(-2, 1);
        let mut rows_of_images = Vec::new();
        for &i in &indices {
            let image = normal_form(&apply_operator(raise, &self.basis()[i])?)?;
            rows_of_images.push(self.expand_in_basis(&image)?);
        }
        // solve sum c_i image_i = 0: kernel of the (dim x |indices|) matrix
        let n = self.dim();
        let mut a = vec![vec![Rat::from_integer(0.into()); indices.len()]; n];
        for (j, img) in rows_of_images.iter().enumerate() {
            for (i, x) in img.iter().enumerate() {
                a[i][j] = x.clone();
            }
        }
        let kernel = crate::linalg::kernel_basis(&a);
        let mut out = Vec::new();
        for coeffs in kernel {
            let mut p = MinorPoly::zero();
            for (&idx, c) in indices.iter().zip(&coeffs) {
                p += &self.basis()[idx].scale(c);
            }
            out.push(p);
        }
        Ok(out)
    }

    /// Multiplicity of each h-weight `s` (dimension of the h-highest space).
    pub fn branching(&self) -> Result<BTreeMap<HalfInt, usize>> {
        let mut out = BTreeMap::new();
        let mut s = self.weight.m2;
        while s >= HalfInt::ZERO {
            let d = self.h_highest_subspace(s)?.len();
            if d > 0 {
                out.insert(s, d);
            }
            s = s - HalfInt::from_int(1);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weight": self.weight.to_json(),
            "dim": self.dim(),
            "basis": self.basis().iter().map(|p| p.to_json()).collect::<Vec<_>>(),
        })
    }
}
