//! The core verifiers: intersecting, minimal, and outer-minimal predicates.
//!
//! `is_intersecting_supports` and `is_intersecting_geometric` are two
//! independent algorithms for the same predicate — one scans codeword
//! support pairs, the other scans hyperplane covers of the column system —
//! and must agree on every nondegenerate input. Keeping both honest is the
//! primary cross-validation invariant of the crate.

use crate::code::{Codeword, LinearCode};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::geometry::{Hyperplane, ProjectiveSystem};
use serde::Serialize;
use std::ops::ControlFlow;

/// Pair budget for support scans: `(q^k - 1)/(q - 1)` representatives.
pub const PAIR_BUDGET: u128 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMethod {
    SupportPairs,
    HyperplanePairs,
    NestedSupports,
    OuterScaling,
}

/// Refuting evidence attached to a negative verdict.
#[derive(Debug, Clone)]
pub enum CheckWitness {
    /// Two nonzero codewords with disjoint supports (intersecting checks) or
    /// with nested supports, listed as (contained, containing), for the
    /// minimality and outer-minimality checks.
    Codewords(Codeword, Codeword),
    /// Two hyperplanes whose union covers the column system.
    Hyperplanes(Hyperplane, Hyperplane),
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub verdict: bool,
    pub method: CheckMethod,
    pub witness: Option<CheckWitness>,
    /// Number of pairs examined.
    pub work: u64,
}

fn check_pair_budget(c: &LinearCode) -> Result<()> {
    let m = c.projective_word_count();
    if m > PAIR_BUDGET {
        return Err(Error::BudgetExceeded { needed: m, budget: PAIR_BUDGET });
    }
    if c.n() > 128 {
        return Err(Error::TooLong(c.n()));
    }
    Ok(())
}

/// Is every pair of nonzero codewords support-intersecting?
///
/// Scans unordered pairs of projective representatives (supports are
/// scale-invariant, so representatives suffice). A disjoint pair can only
/// occur among words of weight at most `n - d`, which the weight-sorted
/// scan exploits. Negative verdicts carry the first disjoint pair in
/// enumeration order, re-verified by direct support computation.
pub fn is_intersecting_supports(c: &LinearCode) -> Result<CheckReport> {
    check_pair_budget(c)?;
    let mut masks: Vec<(u128, u32)> = Vec::with_capacity(c.projective_word_count() as usize);
    c.scan_projective_words(|_, word| {
        let mut m = 0u128;
        for (i, e) in word.iter().enumerate() {
            if !e.is_zero() {
                m |= 1 << i;
            }
        }
        masks.push((m, 0));
        ControlFlow::<()>::Continue(())
    });
    for (i, entry) in masks.iter_mut().enumerate() {
        entry.1 = i as u32;
    }

    let n = c.n() as u32;
    let mut work = 0u64;
    // sort by weight ascending, keeping enumeration order as tie-break so
    // the reported witness is the first in canonical order among minima
    masks.sort_by_key(|&(m, idx)| (m.count_ones(), idx));
    let mut hit: Option<(u32, u32)> = None;
    'outer: for i in 0..masks.len() {
        let (mi, ii) = masks[i];
        let wi = mi.count_ones();
        for &(mj, ij) in &masks[i + 1..] {
            if wi + mj.count_ones() > n {
                break; // no later pair in this row can be disjoint
            }
            work += 1;
            if mi & mj == 0 {
                hit = Some((ii.min(ij), ii.max(ij)));
                break 'outer;
            }
        }
    }

    match hit {
        None => Ok(CheckReport {
            verdict: true,
            method: CheckMethod::SupportPairs,
            witness: None,
            work,
        }),
        Some((a, b)) => {
            let (wa, wb) = two_words_by_index(c, a as usize, b as usize);
            // independent re-verification of the witness
            assert!(
                wa.support().iter().all(|i| !wb.support().contains(i)),
                "witness failed re-verification"
            );
            assert!(!wa.is_zero() && !wb.is_zero());
            Ok(CheckReport {
                verdict: false,
                method: CheckMethod::SupportPairs,
                witness: Some(CheckWitness::Codewords(wa, wb)),
                work,
            })
        }
    }
}

fn two_words_by_index(c: &LinearCode, a: usize, b: usize) -> (Codeword, Codeword) {
    let mut i = 0usize;
    let mut wa = None;
    let mut wb = None;
    c.scan_projective_words(|_, word| {
        if i == a {
            wa = Some(Codeword::new(word.to_vec()));
        }
        if i == b {
            wb = Some(Codeword::new(word.to_vec()));
        }
        i += 1;
        if wa.is_some() && wb.is_some() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    (wa.expect("index in range"), wb.expect("index in range"))
}

/// The geometric route: the code is intersecting iff its column system is
/// not contained in the union of two hyperplanes.
///
/// Must agree with [`is_intersecting_supports`] on every nondegenerate
/// input. Degenerate codes (zero generator column) are rejected; strip the
/// zero columns first, which changes no support.
pub fn is_intersecting_geometric(c: &LinearCode) -> Result<CheckReport> {
    check_pair_budget(c)?;
    let system = ProjectiveSystem::from_generator(c.generator())?;
    let (covered, witness) = system.is_t_cohyperplanar(2)?;
    let nh = crate::geometry::hyperplane_count(c.q(), c.k()) as u64;
    Ok(CheckReport {
        verdict: !covered,
        method: CheckMethod::HyperplanePairs,
        witness: witness.map(|mut w| {
            let h2 = w.pop().expect("pair witness");
            let h1 = w.pop().expect("pair witness");
            CheckWitness::Hyperplanes(h1, h2)
        }),
        work: nh * (nh + 1) / 2,
    })
}

/// Is the code minimal: no nonzero codeword's support strictly contains
/// another's (other than scalar multiples)?
pub fn is_minimal_code(c: &LinearCode) -> Result<CheckReport> {
    check_pair_budget(c)?;
    let mut masks: Vec<u128> = Vec::with_capacity(c.projective_word_count() as usize);
    c.scan_projective_words(|_, word| {
        let mut m = 0u128;
        for (i, e) in word.iter().enumerate() {
            if !e.is_zero() {
                m |= 1 << i;
            }
        }
        masks.push(m);
        ControlFlow::<()>::Continue(())
    });
    let mut work = 0u64;
    let mut hit: Option<(usize, usize)> = None;
    'outer: for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            work += 1;
            let meet = masks[i] & masks[j];
            if meet == masks[i] {
                // support(i) inside support(j); equality included: distinct
                // representatives with equal support are still non-proportional
                hit = Some((i, j));
                break 'outer;
            }
            if meet == masks[j] {
                hit = Some((j, i));
                break 'outer;
            }
        }
    }
    match hit {
        None => Ok(CheckReport {
            verdict: true,
            method: CheckMethod::NestedSupports,
            witness: None,
            work,
        }),
        Some((inner, outer)) => {
            let (wa, wb) = two_words_by_index(c, inner.min(outer), inner.max(outer));
            let (wi, wo) = if inner < outer { (wa, wb) } else { (wb, wa) };
            let si = wi.support();
            let so = wo.support();
            assert!(si.iter().all(|i| so.contains(i)), "witness failed re-verification");
            Ok(CheckReport {
                verdict: false,
                method: CheckMethod::NestedSupports,
                witness: Some(CheckWitness::Codewords(wi, wo)),
                work,
            })
        }
    }
}

/// Outer minimality with scalars restricted to the prime subfield GF(2).
///
/// Defined for codes over fields of characteristic 2. A violating pair is a
/// nonzero codeword `c` and a codeword `c'` not in `{0, c}` with every
/// coordinate of `c'` either zero or equal to the matching coordinate of
/// `c`. Equivalent to the intersecting property.
pub fn is_outer_minimal_base2(c: &LinearCode) -> Result<CheckReport> {
    if c.ctx().p() != 2 {
        return Err(Error::NotCharTwo);
    }
    check_pair_budget(c)?;
    let total = (c.q() as u128).pow(c.k() as u32);
    if total > crate::code::ENUM_BUDGET {
        return Err(Error::BudgetExceeded { needed: total, budget: crate::code::ENUM_BUDGET });
    }
    // collect all nonzero codewords once; the outer condition is not
    // scale-invariant in c', so representatives are not enough there
    let mut all: Vec<Vec<FieldElem>> = Vec::new();
    let f = c.ctx().clone();
    c.scan_projective_words(|_, word| {
        for s in 1..c.q() {
            let s = FieldElem(s);
            all.push(word.iter().map(|&e| f.mul(s, e)).collect());
        }
        ControlFlow::<()>::Continue(())
    });
    let mut work = 0u64;
    let mut hit: Option<(usize, usize)> = None;
    'outer: for (i, base) in all.iter().enumerate() {
        for (j, other) in all.iter().enumerate() {
            if i == j {
                continue;
            }
            work += 1;
            let scaled_fit = other
                .iter()
                .zip(base)
                .all(|(&o, &b)| o.is_zero() || o == b);
            if scaled_fit {
                hit = Some((i, j));
                break 'outer;
            }
        }
    }
    Ok(match hit {
        None => CheckReport {
            verdict: true,
            method: CheckMethod::OuterScaling,
            witness: None,
            work,
        },
        Some((i, j)) => CheckReport {
            verdict: false,
            method: CheckMethod::OuterScaling,
            witness: Some(CheckWitness::Codewords(
                Codeword::new(all[j].clone()),
                Codeword::new(all[i].clone()),
            )),
            work,
        },
    })
}

/// The weight-only sufficient criterion: `2d > n` forces intersecting.
/// One-way: the converse fails (there are intersecting codes with `2d = n`).
pub fn sufficient_2d_gt_n(c: &LinearCode) -> Result<bool> {
    Ok(2 * c.min_distance()? > c.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::matrix::Matrix;

    fn code(p: u64, h: u32, rows: &[Vec<u64>]) -> LinearCode {
        let f = make_field(p, h).unwrap();
        LinearCode::new(Matrix::from_rows(f, rows).unwrap()).unwrap()
    }

    fn catalogue_g33() -> LinearCode {
        code(3, 1, &[
            vec![1, 0, 0, 1, 0, 2],
            vec![0, 1, 0, 2, 2, 1],
            vec![0, 0, 1, 1, 1, 1],
        ])
    }

    #[test]
    fn short_ternary_code_is_intersecting_both_ways() {
        let c = catalogue_g33();
        assert!(is_intersecting_supports(&c).unwrap().verdict);
        assert!(is_intersecting_geometric(&c).unwrap().verdict);
    }

    #[test]
    fn identity_is_not_intersecting_with_witness() {
        let c = code(2, 1, &[vec![1, 0], vec![0, 1]]);
        let r = is_intersecting_supports(&c).unwrap();
        assert!(!r.verdict);
        match r.witness.unwrap() {
            CheckWitness::Codewords(a, b) => {
                let (sa, sb) = (a.support(), b.support());
                assert!(sa.iter().all(|i| !sb.contains(i)));
                assert_eq!(sa.len() + sb.len(), 2);
            }
            _ => panic!("expected codeword witness"),
        }
        let g = is_intersecting_geometric(&c).unwrap();
        assert!(!g.verdict);
        assert!(matches!(g.witness, Some(CheckWitness::Hyperplanes(_, _))));
    }

    #[test]
    fn three_point_line_code_is_intersecting() {
        // 3 distinct points of PG(1,q) give an intersecting [3,2,2]_q code
        for (p, h) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
            let c = code(p, h, &[vec![1, 0, 1], vec![0, 1, 1]]);
            assert!(is_intersecting_supports(&c).unwrap().verdict);
            assert!(is_intersecting_geometric(&c).unwrap().verdict);
            assert_eq!(c.min_distance().unwrap(), 2);
        }
    }

    #[test]
    fn binary_full_line_is_minimal() {
        let c = code(2, 1, &[vec![1, 0, 1], vec![0, 1, 1]]);
        assert!(is_minimal_code(&c).unwrap().verdict);
    }

    #[test]
    fn identity_is_not_minimal() {
        let c = code(2, 1, &[vec![1, 0], vec![0, 1]]);
        let r = is_minimal_code(&c).unwrap();
        assert!(!r.verdict);
        match r.witness.unwrap() {
            CheckWitness::Codewords(inner, outer) => {
                let (si, so) = (inner.support(), outer.support());
                assert!(si.iter().all(|i| so.contains(i)));
                assert!(si.len() < so.len());
            }
            _ => panic!("expected codeword witness"),
        }
    }

    #[test]
    fn minimal_implies_intersecting_on_catalogue_entry() {
        let c = catalogue_g33();
        let min = is_minimal_code(&c).unwrap().verdict;
        let int = is_intersecting_supports(&c).unwrap().verdict;
        assert!(!min || int);
        assert!(int);
    }

    #[test]
    fn outer_minimal_tracks_intersecting_over_gf4() {
        use rand::{Rng, SeedableRng};
        let f = make_field(2, 2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut checked = 0;
        while checked < 50 {
            let rows: Vec<Vec<u64>> = (0..3)
                .map(|_| (0..6).map(|_| rng.gen_range(0..4u64)).collect())
                .collect();
            let Ok(m) = Matrix::from_rows(f.clone(), &rows) else { continue };
            let Ok(c) = LinearCode::new(m) else { continue };
            let om = is_outer_minimal_base2(&c).unwrap().verdict;
            let int = is_intersecting_supports(&c).unwrap().verdict;
            assert_eq!(om, int, "outer-minimal and intersecting disagree");
            checked += 1;
        }
    }

    #[test]
    fn outer_minimal_rejects_odd_characteristic() {
        let c = catalogue_g33();
        assert!(matches!(is_outer_minimal_base2(&c), Err(Error::NotCharTwo)));
    }

    #[test]
    fn weight_criterion_is_one_way() {
        // repetition [3,1,3]: 2d > n, intersecting
        let rep = code(2, 1, &[vec![1, 1, 1]]);
        assert!(sufficient_2d_gt_n(&rep).unwrap());
        assert!(is_intersecting_supports(&rep).unwrap().verdict);
        // the [6,3,3] catalogue code: 2d = n, still intersecting
        let c = catalogue_g33();
        assert!(!sufficient_2d_gt_n(&c).unwrap());
        assert!(is_intersecting_supports(&c).unwrap().verdict);
    }

    #[test]
    fn degenerate_code_rejected_by_geometric_route() {
        let c = code(2, 1, &[vec![1, 0, 0], vec![0, 1, 0]]);
        assert!(matches!(is_intersecting_geometric(&c), Err(Error::ZeroColumn(2))));
        // the support route still works
        assert!(!is_intersecting_supports(&c).unwrap().verdict);
    }

    #[test]
    fn intersecting_code_has_distance_at_least_k() {
        let c = catalogue_g33();
        assert!(c.min_distance().unwrap() >= c.k());
    }
}
