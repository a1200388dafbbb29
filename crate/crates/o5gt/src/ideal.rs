//! The Pluecker ideal of the B-symbols and reduction to normal form.
//!
//! The ideal is generated by the four three-term flag relations
//! `B[i1]*B[i2,i3] - B[i2]*B[i1,i3] + B[i3]*B[i1,i2]` (i1<i2<i3) together
//! with the Grassmann relation
//! `B[-2,-1]*B[1,2] - B[-2,1]*B[-1,2] + B[-2,2]*B[-1,1]`.
//!
//! Reduction uses the graded lexicographic order of [`crate::symbol::Monomial`]
//! (B1 symbols most significant, then the primed avatars, then B2).  The five
//! generators are not confluent under this order on their own: the S-pair of
//! the Grassmann relation with the flag relation on {-1,1,2} leaves an
//! irreducible cubic.  A Buchberger completion is therefore run once and the
//! completed system is cached; normal forms are unique representatives modulo
//! the same ideal.

use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MinorPoly;
use crate::scalar::rat_one;
use crate::symbol::{MinorSymbol, Monomial, B_INDICES};

/// The five generating relations.
pub fn plucker_generators() -> Vec<MinorPoly> {
    let mut gens = Vec::new();
    // flag relations for each triple i1<i2<i3
    for x in 0..4 {
        for y in (x + 1)..4 {
            for z in (y + 1)..4 {
                let (i1, i2, i3) = (B_INDICES[x], B_INDICES[y], B_INDICES[z]);
                let mut p = MinorPoly::zero();
                for (single, pair, sgn) in [
                    (i1, (i2, i3), 1i64),
                    (i2, (i1, i3), -1),
                    (i3, (i1, i2), 1),
                ] {
                    let (s2, s) = MinorSymbol::b2(pair.0, pair.1).unwrap();
                    let m = Monomial::var(MinorSymbol::b1(single), 1).mul(&Monomial::var(s2, 1));
                    p.add_term(m, crate::scalar::rat_int(sgn * s));
                }
                gens.push(p);
            }
        }
    }
    // Grassmann relation
    let mut g = MinorPoly::zero();
    for (p1, p2, sgn) in [
        ((-2i8, -1i8), (1i8, 2i8), 1i64),
        ((-2, 1), (-1, 2), -1),
        ((-2, 2), (-1, 1), 1),
    ] {
        let (a, sa) = MinorSymbol::b2(p1.0, p1.1).unwrap();
        let (b, sb) = MinorSymbol::b2(p2.0, p2.1).unwrap();
        g.add_term(
            Monomial::var(a, 1).mul(&Monomial::var(b, 1)),
            crate::scalar::rat_int(sgn * sa * sb),
        );
    }
    gens.push(g);
    gens
}

/// A rewrite rule `lead -> tail` with the lead coefficient normalized to one,
/// so that `lead - tail` lies in the ideal.
#[derive(Clone)]
struct Rule {
    lead: Monomial,
    tail: MinorPoly,
}

fn rule_from_poly(p: &MinorPoly) -> Option<Rule> {
    let (m, c) = p.leading()?;
    let lead = *m;
    let inv = rat_one() / c;
    let mut tail = MinorPoly::zero();
    for (t, x) in p.terms() {
        if t != &lead {
            tail.add_term(*t, -(x * &inv));
        }
    }
    Some(Rule { lead, tail })
}

struct RewriteSystem {
    rules: Vec<Rule>,
}

impl RewriteSystem {
    fn reduce(&self, p: &MinorPoly) -> MinorPoly {
        let mut work = p.clone();
        let mut rem = MinorPoly::zero();
        'outer: while let Some((m, c)) = work.pop_leading() {
            for rule in &self.rules {
                if let Some(q) = m.try_div(&rule.lead) {
                    work += &rule.tail.mul_monomial(&q, &c);
                    continue 'outer;
                }
            }
            rem.add_term(m, c);
        }
        rem
    }

    /// Buchberger completion with the coprime-lead criterion.
    fn complete(generators: &[MinorPoly]) -> RewriteSystem {
        let mut sys = RewriteSystem { rules: Vec::new() };
        for g in generators {
            if let Some(r) = rule_from_poly(g) {
                sys.rules.push(r);
            }
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..sys.rules.len() {
            for j in 0..i {
                pairs.push((j, i));
            }
        }
        let mut k = 0;
        while k < pairs.len() {
            let (i, j) = pairs[k];
            k += 1;
            let (li, lj) = (sys.rules[i].lead, sys.rules[j].lead);
            let lcm = monomial_lcm(&li, &lj);
            // coprime leads: the S-polynomial reduces to zero
            if lcm.degree() == li.degree() + lj.degree() {
                continue;
            }
            let qi = lcm.try_div(&li).unwrap();
            let qj = lcm.try_div(&lj).unwrap();
            // S = tail_i * qi - tail_j * qj  (both sides represent lcm mod ideal)
            let s = &sys.rules[i].tail.mul_monomial(&qi, &rat_one())
                - &sys.rules[j].tail.mul_monomial(&qj, &rat_one());
            let red = sys.reduce(&s);
            if !red.is_zero() {
                let new = rule_from_poly(&red).unwrap();
                let idx = sys.rules.len();
                for x in 0..idx {
                    pairs.push((x, idx));
                }
                sys.rules.push(new);
            }
        }
        sys
    }
}

fn monomial_lcm(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m = *a;
    for (s, e) in b.iter_nonzero() {
        if m.exp(s) < e {
            m.set_exp(s, e);
        }
    }
    m
}

fn system() -> &'static RewriteSystem {
    static SYSTEM: OnceLock<RewriteSystem> = OnceLock::new();
    SYSTEM.get_or_init(|| RewriteSystem::complete(&plucker_generators()))
}

/// Number of rewrite rules after completion (for reports and tests).
pub fn completed_rule_count() -> usize {
    system().rules.len()
}

/// The completed rule set as `lead - tail` polynomials.
pub fn completed_basis() -> Vec<MinorPoly> {
    system()
        .rules
        .iter()
        .map(|r| &MinorPoly::monomial(r.lead, rat_one()) - &r.tail)
        .collect()
}

/// Unique reduced representative of `p` modulo the Pluecker ideal.
///
/// `p` must use B-alphabet symbols only; primed avatars are allowed and ride
/// through reduction untouched.
pub fn normal_form(p: &MinorPoly) -> Result<MinorPoly> {
    if p.has_a_symbols() {
        return Err(Error::AlphabetMismatch(
            "normal_form expects B-alphabet polynomials".into(),
        ));
    }
    Ok(system().reduce(p))
}

/// True when every S-polynomial of the completed system reduces to zero.
pub fn confluence_check() -> bool {
    let sys = system();
    for i in 0..sys.rules.len() {
        for j in 0..i {
            let (li, lj) = (sys.rules[i].lead, sys.rules[j].lead);
            let lcm = monomial_lcm(&li, &lj);
            if lcm.degree() == li.degree() + lj.degree() {
                continue;
            }
            let qi = lcm.try_div(&li).unwrap();
            let qj = lcm.try_div(&lj).unwrap();
            let s = &sys.rules[i].tail.mul_monomial(&qi, &rat_one())
                - &sys.rules[j].tail.mul_monomial(&qj, &rat_one());
            if !sys.reduce(&s).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_frac, rat_int};
    use proptest::prelude::*;

    fn b1(i: i8) -> MinorPoly {
        MinorPoly::symbol(MinorSymbol::b1(i))
    }

    fn b2(i: i8, j: i8) -> MinorPoly {
        let (s, sg) = MinorSymbol::b2(i, j).unwrap();
        MinorPoly::symbol(s).scale(&rat_int(sg))
    }

    /// Oracle: expand the 1x4 top row and 2x4 minors of a symbolic matrix with
    /// distinct prime coordinates and check a polynomial vanishes identically.
    /// Entries x[r][c] are encoded as distinct primes so products are injective
    /// on the tested degree range.
    fn vanishes_on_symbolic_matrix(p: &MinorPoly) -> bool {
        // evaluate minors at 40 pseudo-random exact rational matrices
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let mut x = [[rat_int(0), rat_int(0), rat_int(0), rat_int(0)],
                         [rat_int(0), rat_int(0), rat_int(0), rat_int(0)]];
            for row in x.iter_mut() {
                for e in row.iter_mut() {
                    let n = (next() % 19) as i64 - 9;
                    let d = (next() % 4) as i64 + 1;
                    *e = rat_frac(n, d);
                }
            }
            let col = |i: i8| -> usize {
                B_INDICES.iter().position(|&c| c == i).unwrap()
            };
            let mut values = std::collections::BTreeMap::new();
            for &i in &B_INDICES {
                values.insert(MinorSymbol::b1(i), x[0][col(i)].clone());
                for &j in &B_INDICES {
                    if i < j {
                        let det = &(&x[0][col(i)] * &x[1][col(j)]) - &(&x[0][col(j)] * &x[1][col(i)]);
                        values.insert(MinorSymbol::b2(i, j).unwrap().0, det);
                    }
                }
            }
            if !p.eval(&values).unwrap().is_zero() {
                return false;
            }
        }
        true
    }

    #[test]
    fn generators_vanish_on_symbolic_minors() {
        for g in plucker_generators() {
            assert!(vanishes_on_symbolic_matrix(&g), "{g} does not vanish");
        }
    }

    #[test]
    fn grassmann_and_flag_relations_reduce_to_zero() {
        // B[-2,-1]B[1,2] - B[-2,1]B[-1,2] + B[-2,2]B[-1,1] -> 0
        let g = &(&b2(-2, -1) * &b2(1, 2)) - &(&(&b2(-2, 1) * &b2(-1, 2)) - &(&b2(-2, 2) * &b2(-1, 1)));
        assert!(normal_form(&g).unwrap().is_zero());
        // B[-2]B[-1,1] - B[-1]B[-2,1] + B[1]B[-2,-1] -> 0
        let f = &(&b1(-2) * &b2(-1, 1)) - &(&(&b1(-1) * &b2(-2, 1)) - &(&b1(1) * &b2(-2, -1)));
        assert!(normal_form(&f).unwrap().is_zero());
        // no relation head divides b[-2]b[-1]
        let p = &b1(-2) * &b1(-1);
        assert_eq!(normal_form(&p).unwrap(), p);
    }

    #[test]
    fn completion_is_confluent_and_small() {
        assert!(confluence_check());
        let n = completed_rule_count();
        assert!((5..=12).contains(&n), "unexpected completed basis size {n}");
        // every completed element still vanishes on the group
        for g in completed_basis() {
            assert!(vanishes_on_symbolic_matrix(&g));
        }
    }

    #[test]
    fn alphabet_guard() {
        let p = MinorPoly::symbol(MinorSymbol::a1(0));
        assert!(matches!(normal_form(&p), Err(Error::AlphabetMismatch(_))));
    }

    fn random_quadratic(seed: u64) -> MinorPoly {
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut p = MinorPoly::zero();
        for _ in 0..4 {
            let s1 = crate::symbol::ALL_SYMBOLS[(next() % 14) as usize];
            let s2 = crate::symbol::ALL_SYMBOLS[(next() % 14) as usize];
            let c = rat_frac((next() % 11) as i64 - 5, 1 + (next() % 3) as i64);
            p.add_term(Monomial::var(s1, 1).mul(&Monomial::var(s2, 1)), c);
        }
        p
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        // normal_form is idempotent, linear, and multiplicative modulo reduction
        #[test]
        fn normal_form_is_idempotent_and_multiplicative(seed1 in 1u64..1 << 60, seed2 in 1u64..1 << 60) {
            let g = random_quadratic(seed1);
            let h = random_quadratic(seed2);
            let ng = normal_form(&g).unwrap();
            prop_assert_eq!(normal_form(&ng).unwrap(), ng.clone());
            let sum = normal_form(&(&g + &h)).unwrap();
            prop_assert_eq!(&sum, &(&ng + &normal_form(&h).unwrap()));
            let prod = normal_form(&(&g * &h)).unwrap();
            let prod2 = normal_form(&(&ng * &normal_form(&h).unwrap())).unwrap();
            prop_assert_eq!(prod, prod2);
        }
    }
}
