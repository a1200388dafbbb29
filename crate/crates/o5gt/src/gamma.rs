//! Finite lattice gamma-series in minor symbols.
//!
//! A series is determined by an ordered list of (signed) symbol slots, a
//! sublattice of the exponent space, and an integer shift vector; its value is
//!
//! ```text
//! prefactor * sum over lattice points v of  z^(shift+v) / (shift+v)!
//! ```
//!
//! where a negative component kills the summand.  Supports are enumerated by
//! exact Fourier-Motzkin elimination over the lattice coordinates; a nonzero
//! nonnegative combination of generators makes the support unbounded and is
//! rejected at construction.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MinorPoly;
use crate::scalar::{rat_int, MultiIndex, Rat};
use crate::symbol::{Monomial, SignedSymbol};

/// A sublattice of the slot exponent space with its slot dictionary.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub symbols: Vec<SignedSymbol>,
    pub generators: Vec<MultiIndex>,
}

impl Lattice {
    pub fn new(symbols: Vec<SignedSymbol>, generators: Vec<MultiIndex>) -> Result<Lattice> {
        let dim = symbols.len();
        for g in &generators {
            if g.len() != dim {
                return Err(Error::Construction(format!(
                    "generator length {} does not match {} slots",
                    g.len(),
                    dim
                )));
            }
        }
        let lat = Lattice {
            symbols,
            generators,
        };
        if !lat.generators_independent() {
            return Err(Error::DependentGenerators);
        }
        // every generator must be weight- and bidegree-neutral: lattice moves
        // shuffle exponents without changing the function's weight spaces
        for g in &lat.generators {
            let mut w = (0i64, 0i64);
            let mut d = (0i64, 0i64);
            for (k, slot) in lat.symbols.iter().enumerate() {
                let sw = slot.symbol.weight();
                let sd = slot.symbol.bidegree();
                w.0 += sw.0 * g.0[k];
                w.1 += sw.1 * g.0[k];
                d.0 += sd.0 * g.0[k];
                d.1 += sd.1 * g.0[k];
            }
            if w != (0, 0) || d != (0, 0) {
                return Err(Error::Construction(format!(
                    "lattice generator {g:?} is not weight/bidegree neutral"
                )));
            }
        }
        Ok(lat)
    }

    pub fn ambient_dim(&self) -> usize {
        self.symbols.len()
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    fn generators_independent(&self) -> bool {
        let rows: crate::linalg::Matrix = self
            .generators
            .iter()
            .map(|g| g.0.iter().map(|&x| rat_int(x)).collect())
            .collect();
        if rows.is_empty() {
            return true;
        }
        // a dependency is a right-kernel vector of the transposed generator matrix
        crate::linalg::kernel_basis(&crate::linalg::transpose(&rows)).is_empty()
    }

    /// Integer basis of the rational orthogonal complement of the lattice.
    pub fn orthogonal_complement(&self) -> Vec<MultiIndex> {
        if self.generators.is_empty() {
            return (0..self.ambient_dim())
                .map(|i| MultiIndex::unit(self.ambient_dim(), i))
                .collect();
        }
        let rows: crate::linalg::Matrix = self
            .generators
            .iter()
            .map(|g| g.0.iter().map(|&x| rat_int(x)).collect())
            .collect();
        crate::linalg::kernel_basis(&rows)
            .into_iter()
            .map(|v| {
                MultiIndex(
                    v.iter()
                        .map(|x| {
                            assert!(x.is_integer());
                            num_traits::ToPrimitive::to_i64(&x.to_integer()).unwrap()
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

/// One linear inequality `sum coeffs[i] c_i >= bound` over lattice coordinates.
#[derive(Clone, Debug)]
struct Inequality {
    coeffs: Vec<Rat>,
    bound: Rat,
}

/// Fourier-Motzkin elimination of the last variable.
fn eliminate_last(ineqs: &[Inequality]) -> Vec<Inequality> {
    if ineqs.is_empty() {
        return Vec::new();
    }
    let n = ineqs[0].coeffs.len();
    let mut free = Vec::new();
    let mut lower = Vec::new(); // c_n >= expr
    let mut upper = Vec::new(); // c_n <= expr
    for iq in ineqs {
        let a = &iq.coeffs[n - 1];
        if a.is_zero() {
            free.push(Inequality {
                coeffs: iq.coeffs[..n - 1].to_vec(),
                bound: iq.bound.clone(),
            });
        } else if a > &Rat::zero() {
            lower.push(iq);
        } else {
            upper.push(iq);
        }
    }
    for lo in &lower {
        for up in &upper {
            // lo: a c + L >= bl with a > 0; up: b c + U >= bu with b < 0
            // combine: (-b) * lo + a * up eliminates c
            let a = lo.coeffs[n - 1].clone();
            let b = up.coeffs[n - 1].clone();
            let mut coeffs = Vec::with_capacity(n - 1);
            for k in 0..n - 1 {
                coeffs.push(&(-b.clone()) * &lo.coeffs[k] + &a * &up.coeffs[k]);
            }
            let bound = &(-b) * &lo.bound + &a * &up.bound;
            free.push(Inequality { coeffs, bound });
        }
    }
    free
}

/// Is the rational polyhedron `{c : ineqs}` nonempty?
fn feasible(ineqs: &[Inequality]) -> bool {
    if ineqs.is_empty() {
        return true;
    }
    let n = ineqs[0].coeffs.len();
    if n == 0 {
        return ineqs.iter().all(|iq| iq.bound <= Rat::zero());
    }
    feasible(&eliminate_last(ineqs))
}

/// Does the cone `{c != 0 : G c >= 0}` contain a nonzero rational point?
fn cone_nontrivial(generators: &[MultiIndex], dim: usize) -> bool {
    if generators.is_empty() {
        return false;
    }
    let k = generators.len();
    let base: Vec<Inequality> = (0..dim)
        .map(|j| Inequality {
            coeffs: (0..k).map(|i| rat_int(generators[i].0[j])).collect(),
            bound: Rat::zero(),
        })
        .collect();
    // the cone is nontrivial iff it contains a point with some c_i = 1 or -1
    for i in 0..k {
        for sign in [1i64, -1] {
            let mut ineqs = base.clone();
            // c_i >= 1 (resp. -c_i >= 1)
            let mut coeffs = vec![Rat::zero(); k];
            coeffs[i] = rat_int(sign);
            ineqs.push(Inequality {
                coeffs,
                bound: rat_int(1),
            });
            if feasible(&ineqs) {
                return true;
            }
        }
    }
    false
}

/// Enumerate all integer points of the polyhedron by recursive elimination.
fn enumerate_integer_points(ineqs: &[Inequality], k: usize) -> Vec<Vec<i64>> {
    if k == 0 {
        return if ineqs.iter().all(|iq| iq.bound <= Rat::zero()) {
            vec![vec![]]
        } else {
            vec![]
        };
    }
    assert!(
        !ineqs.is_empty(),
        "unconstrained variables in a bounded polytope"
    );
    // bounds for c_k given the projection of the earlier variables
    let projected = eliminate_last(ineqs);
    let mut out = Vec::new();
    for prefix in enumerate_integer_points(&projected, k - 1) {
        // instantiate the prefix and read off the interval for c_k
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        let mut ok = true;
        for iq in ineqs {
            let a = &iq.coeffs[k - 1];
            let mut rest = iq.bound.clone();
            for (x, c) in prefix.iter().zip(&iq.coeffs[..k - 1]) {
                rest -= c * &rat_int(*x);
            }
            if a.is_zero() {
                if rest > Rat::zero() {
                    ok = false;
                    break;
                }
            } else if a > &Rat::zero() {
                let b = &rest / a;
                lo = Some(match lo {
                    None => b,
                    Some(old) => {
                        if b > old {
                            b
                        } else {
                            old
                        }
                    }
                });
            } else {
                let b = &rest / a;
                hi = Some(match hi {
                    None => b,
                    Some(old) => {
                        if b < old {
                            b
                        } else {
                            old
                        }
                    }
                });
            }
        }
        if !ok {
            continue;
        }
        let (lo, hi) = match (lo, hi) {
            (Some(l), Some(h)) => (l, h),
            // boundedness was established up front; missing bounds mean an
            // empty combination was already filtered by the projection
            _ => continue,
        };
        let lo_int = lo.ceil().to_integer();
        let hi_int = hi.floor().to_integer();
        let lo_i: i64 = num_traits::ToPrimitive::to_i64(&lo_int).unwrap();
        let hi_i: i64 = num_traits::ToPrimitive::to_i64(&hi_int).unwrap();
        for c in lo_i..=hi_i {
            let mut point = prefix.clone();
            point.push(c);
            out.push(point);
        }
    }
    out
}

/// All lattice points `v` with `shift + v >= 0` componentwise.
///
/// Errors with [`Error::UnboundedSupport`] when some nonzero nonnegative
/// combination of generators exists (the support would be infinite whenever
/// it is nonempty).
pub fn enumerate_support(lat: &Lattice, shift: &MultiIndex) -> Result<Vec<MultiIndex>> {
    if shift.len() != lat.ambient_dim() {
        return Err(Error::Construction("shift length mismatch".into()));
    }
    if cone_nontrivial(&lat.generators, lat.ambient_dim()) {
        return Err(Error::UnboundedSupport);
    }
    if lat.generators.is_empty() {
        return Ok(if shift.is_nonnegative() {
            vec![MultiIndex::zeros(lat.ambient_dim())]
        } else {
            vec![]
        });
    }
    let k = lat.rank();
    let ineqs: Vec<Inequality> = (0..lat.ambient_dim())
        .map(|j| Inequality {
            coeffs: (0..k).map(|i| rat_int(lat.generators[i].0[j])).collect(),
            bound: rat_int(-shift.0[j]),
        })
        .collect();
    let mut points: Vec<Vec<i64>> = enumerate_integer_points(&ineqs, k);
    points.sort();
    Ok(points
        .into_iter()
        .map(|c| {
            let mut v = MultiIndex::zeros(lat.ambient_dim());
            for (i, x) in c.iter().enumerate() {
                v += &lat.generators[i].scaled(*x);
            }
            v
        })
        .collect())
}

/// A finite gamma-series with a monomial prefactor.
#[derive(Clone, Debug)]
pub struct GammaSeries {
    pub lattice: Lattice,
    pub shift: MultiIndex,
    pub prefactor: Monomial,
}

impl GammaSeries {
    /// Construct and check the finite-support invariant.
    pub fn new(lattice: Lattice, shift: MultiIndex, prefactor: Monomial) -> Result<GammaSeries> {
        if shift.len() != lattice.ambient_dim() {
            return Err(Error::Construction("shift length mismatch".into()));
        }
        if cone_nontrivial(&lattice.generators, lattice.ambient_dim()) {
            return Err(Error::UnboundedSupport);
        }
        Ok(GammaSeries {
            lattice,
            shift,
            prefactor,
        })
    }

    pub fn bare(lattice: Lattice, shift: MultiIndex) -> Result<GammaSeries> {
        GammaSeries::new(lattice, shift, Monomial::one())
    }

    pub fn support(&self) -> Result<Vec<MultiIndex>> {
        enumerate_support(&self.lattice, &self.shift)
    }

    /// Expand into a polynomial: `prefactor * sum z^(shift+v) / (shift+v)!`,
    /// with slot signs contributing `sign^exponent` per slot.
    pub fn expand(&self) -> Result<MinorPoly> {
        let mut out = MinorPoly::zero();
        for v in self.support()? {
            let e = &self.shift + &v;
            debug_assert!(e.is_nonnegative());
            let mut coeff = e.reciprocal_factorial();
            if coeff.is_zero() {
                continue;
            }
            let mut m = self.prefactor;
            for (k, slot) in self.lattice.symbols.iter().enumerate() {
                let exp = e.0[k];
                if exp == 0 {
                    continue;
                }
                if slot.sign < 0 && exp % 2 == 1 {
                    coeff = -coeff;
                }
                let cur = m.exp(slot.symbol);
                m.set_exp(slot.symbol, cur + exp as u16);
            }
            out.add_term(m, coeff);
        }
        Ok(out)
    }

    /// Expand and specialize primed avatars to their plain symbols.
    pub fn expand_specialized(&self) -> Result<MinorPoly> {
        Ok(self.expand()?.specialize_primes())
    }

    /// Differentiate with respect to the slot variable `i` (the signed slot
    /// value, so `d/d(-b1') ` for a negative slot): the shift drops by `e_i`.
    pub fn differentiate(&self, i: usize) -> Result<GammaSeries> {
        let slot = &self.lattice.symbols[i];
        if self.prefactor.exp(slot.symbol) > 0 {
            return Err(Error::PrefactorConflict(slot.symbol.name()));
        }
        let mut shift = self.shift.clone();
        shift.0[i] -= 1;
        GammaSeries::new(self.lattice.clone(), shift, self.prefactor)
    }

    /// Weight of the expanded function (constant across the support).
    pub fn weight(&self) -> (i64, i64) {
        let mut w = (0i64, 0i64);
        for (k, slot) in self.lattice.symbols.iter().enumerate() {
            let sw = slot.symbol.weight();
            w.0 += sw.0 * self.shift.0[k];
            w.1 += sw.1 * self.shift.0[k];
        }
        for (s, e) in self.prefactor.iter_nonzero() {
            let sw = s.weight();
            w.0 += sw.0 * e as i64;
            w.1 += sw.1 * e as i64;
        }
        w
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut pre = serde_json::Map::new();
        for (s, e) in self.prefactor.iter_nonzero() {
            pre.insert(s.name(), serde_json::json!(e));
        }
        serde_json::json!({
            "symbols": self.lattice.symbols.iter().map(|s| s.name()).collect::<Vec<_>>(),
            "shift": self.shift.0,
            "lattice": self.lattice.generators.iter().map(|g| g.0.clone()).collect::<Vec<_>>(),
            "prefactor": serde_json::Value::Object(pre),
        })
    }
}

/// Report of the Gelfand-Kapranov-Zelevinsky checks for one series.
#[derive(Clone, Debug)]
pub struct GkzReport {
    /// (orthogonal vector, expected eigenvalue, holds)
    pub euler: Vec<(MultiIndex, i64, bool)>,
    /// (lattice generator, holds)
    pub boxes: Vec<(MultiIndex, bool)>,
}

impl GkzReport {
    pub fn all_pass(&self) -> bool {
        self.euler.iter().all(|(_, _, ok)| *ok) && self.boxes.iter().all(|(_, ok)| *ok)
    }

    pub fn n_equations(&self) -> usize {
        self.euler.len() + self.boxes.len()
    }
}

/// Verify the two GKZ equation families on the bare series.
///
/// Euler equations: for each basis vector `alpha` of the orthogonal complement
/// of the lattice, `sum alpha_i z_i d_i F = (alpha . shift) F`; checked term by
/// term on the support.  Box equations: for each lattice generator `v`,
/// `d^(v+) F = d^(v-) F`; checked on expanded polynomials via the shift rule.
pub fn gkz_verify(s: &GammaSeries) -> Result<GkzReport> {
    if !s.prefactor.is_one() {
        return Err(Error::Construction(
            "gkz_verify expects a bare series (no prefactor)".into(),
        ));
    }
    let support = s.support()?;
    let mut euler = Vec::new();
    for alpha in s.lattice.orthogonal_complement() {
        let expected = alpha.dot(&s.shift);
        let ok = support.iter().all(|v| {
            let e = &s.shift + v;
            alpha.dot(&e) == expected
        });
        euler.push((alpha, expected, ok));
    }
    let mut boxes = Vec::new();
    for v in &s.lattice.generators {
        let (plus, minus) = v.split_signs();
        let lhs = repeated_diff(s, &plus)?.expand()?;
        let rhs = repeated_diff(s, &minus)?.expand()?;
        boxes.push((v.clone(), lhs == rhs));
    }
    Ok(GkzReport { euler, boxes })
}

fn repeated_diff(s: &GammaSeries, exps: &MultiIndex) -> Result<GammaSeries> {
    let mut cur = s.clone();
    for (i, &e) in exps.0.iter().enumerate() {
        for _ in 0..e {
            cur = cur.differentiate(i)?;
        }
    }
    Ok(cur)
}
