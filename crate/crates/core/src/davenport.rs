//! 2-wise scalar-weighted Davenport constants of elementary abelian groups.
//!
//! The group `E_{p^{hr}}` is presented additively as `GF(q)^r` with
//! `q = p^h`, and the weight set is the nonzero scalar multiplications
//! (the zero map would make every length-1 sequence a weighted zero sum and
//! degenerate the constant, and the code correspondence below forces
//! nonzero coefficients).
//!
//! The constant reduces exactly to the shortest-intersecting-code function:
//! a sequence with no two disjoint weighted zero-sum subsequences is the
//! same thing as a parity-check matrix of an intersecting code, so
//! `D = min { m >= r+1 : m < i(m-r, q) }`. An independent sequence-level
//! brute force cross-checks the reduction at small orders.

use crate::bounds::{ag_ratio, best_lower_ratio, prob_ratio};
use crate::error::{Error, Result};
use crate::field::{make_field, FieldCtx, FieldElem};
use crate::matrix::Matrix;
use crate::search::ITable;
use rayon::prelude::*;
use serde::Serialize;
use std::ops::ControlFlow;
use std::sync::Arc;

/// An elementary abelian group `E_{p^{hr}}` presented as `GF(p^h)^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    pub p: u64,
    pub h: u32,
    pub r: u32,
}

impl GroupSpec {
    pub fn new(p: u64, h: u32, r: u32) -> Result<GroupSpec> {
        if h == 0 || r == 0 {
            return Err(Error::ZeroDegree);
        }
        if !crate::field::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(GroupSpec { p, h, r })
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.h)
    }

    /// Group order `q^r`.
    pub fn order(&self) -> u64 {
        self.q().pow(self.r)
    }

    pub fn field(&self) -> Result<Arc<FieldCtx>> {
        make_field(self.p, self.h)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueOrInterval {
    Exact(usize),
    Interval(usize, usize),
}

/// The computed constant with the table values it consumed.
#[derive(Debug, Clone, Serialize)]
pub struct DavenportResult {
    pub spec: GroupSpec,
    pub value: ValueOrInterval,
    /// `(k, lo, hi, provenance)` rows consumed from the table.
    pub consumed: Vec<(usize, usize, usize, String)>,
    pub oracle_checked: bool,
}

/// `D = min { m >= r+1 : m < i(m-r, q) }`, evaluated against a value table.
///
/// Exact when every consumed `i`-value is tight enough to decide each
/// comparison; an interval otherwise. Errors when the table runs out before
/// the minimum is certain.
pub fn d2_weighted(spec: &GroupSpec, table: &ITable) -> Result<DavenportResult> {
    let q = spec.q();
    let r = spec.r as usize;
    let mut consumed = Vec::new();
    let mut first_possible: Option<usize> = None;
    let mut m = r + 1;
    loop {
        let k = m - r;
        let entry = table.get(k, q).ok_or(Error::InsufficientTable { k, q })?;
        consumed.push((
            k,
            entry.lo,
            entry.hi,
            entry.provenance.join(";"),
        ));
        if first_possible.is_none() && m < entry.hi {
            first_possible = Some(m); // m < i is possible
        }
        if m < entry.lo {
            // m < i is certain: the minimum is somewhere in
            // [first_possible, m]
            let lo = first_possible.unwrap_or(m);
            let value = if lo == m {
                ValueOrInterval::Exact(m)
            } else {
                ValueOrInterval::Interval(lo, m)
            };
            return Ok(DavenportResult { spec: *spec, value, consumed, oracle_checked: false });
        }
        m += 1;
        if m > 4 * (r + 2) {
            return Err(Error::InsufficientTable { k: m - r, q });
        }
    }
}

/// A sequence over the group, one `GF(q)^r` vector per element.
pub type GroupSequence = Vec<Vec<FieldElem>>;

fn group_order_budget(spec: &GroupSpec, n: usize) -> Result<()> {
    let order = spec.order();
    if order > 64 {
        return Err(Error::BudgetExceeded { needed: order as u128, budget: 64 });
    }
    let work = (spec.q() as u128).pow(n as u32);
    if work > 1 << 24 {
        return Err(Error::BudgetExceeded { needed: work, budget: 1 << 24 });
    }
    Ok(())
}

/// Precomputed group structure for the coefficient-enumeration route:
/// elements are mixed-radix indices, with translation and scaling tables.
/// Group order is capped at 64 so reachable sets fit in a word.
pub struct WeightedSumCtx {
    spec: GroupSpec,
    order: usize,
    /// scaled[c][x] = index of c*x for scalars c in 1..q
    scaled: Vec<Vec<u8>>,
    /// translate[t][x] = index of x + t
    translate: Vec<Vec<u8>>,
}

impl WeightedSumCtx {
    pub fn new(spec: &GroupSpec) -> Result<WeightedSumCtx> {
        let order = spec.order();
        if order > 64 {
            return Err(Error::BudgetExceeded { needed: order as u128, budget: 64 });
        }
        let order = order as usize;
        let field = spec.field()?;
        let q = spec.q() as usize;
        let r = spec.r as usize;
        let element = |mut i: usize| -> Vec<FieldElem> {
            (0..r)
                .map(|_| {
                    let d = FieldElem((i % q) as u32);
                    i /= q;
                    d
                })
                .collect()
        };
        let index = |v: &[FieldElem]| -> usize {
            v.iter().rev().fold(0usize, |acc, e| acc * q + e.0 as usize)
        };
        let elements: Vec<Vec<FieldElem>> = (0..order).map(element).collect();
        let scaled = (1..q)
            .map(|c| {
                let c = FieldElem(c as u32);
                (0..order)
                    .map(|x| {
                        let v: Vec<FieldElem> =
                            elements[x].iter().map(|&e| field.mul(c, e)).collect();
                        index(&v) as u8
                    })
                    .collect()
            })
            .collect();
        let translate = (0..order)
            .map(|t| {
                (0..order)
                    .map(|x| {
                        let v: Vec<FieldElem> = elements[x]
                            .iter()
                            .zip(&elements[t])
                            .map(|(&a, &b)| field.add(a, b))
                            .collect();
                        index(&v) as u8
                    })
                    .collect()
            })
            .collect();
        Ok(WeightedSumCtx { spec: *spec, order, scaled, translate })
    }

    pub fn index_of(&self, v: &[FieldElem]) -> Result<usize> {
        let q = self.spec.q() as usize;
        let r = self.spec.r as usize;
        if v.len() != r {
            return Err(Error::Dimension(format!(
                "element has {} coordinates, want {r}",
                v.len()
            )));
        }
        for e in v {
            if e.0 as usize >= q {
                return Err(Error::InvalidElement { value: e.0 as u64, q: q as u64 });
            }
        }
        Ok(v.iter().rev().fold(0usize, |acc, e| acc * q + e.0 as usize))
    }

    pub fn element_of(&self, mut idx: usize) -> Vec<FieldElem> {
        let q = self.spec.q() as usize;
        (0..self.spec.r)
            .map(|_| {
                let d = FieldElem((idx % q) as u32);
                idx /= q;
                d
            })
            .collect()
    }

    /// `capable[s]` is true when the index subset `s` of the sequence
    /// admits nonzero coefficients summing to zero, by a reachable-set walk.
    pub fn capable_subsets(&self, seq_idx: &[u8]) -> Vec<bool> {
        let n = seq_idx.len();
        let q = self.spec.q() as usize;
        debug_assert!(seq_idx.iter().all(|&i| (i as usize) < self.order));
        let mut reach = vec![0u64; 1 << n];
        reach[0] = 1; // the empty sum
        let mut capable = vec![false; 1 << n];
        for s in 1usize..1 << n {
            let low = s.trailing_zeros() as usize;
            let prev = reach[s & (s - 1)];
            let mut acc = 0u64;
            for c in 0..q - 1 {
                let t = self.scaled[c][seq_idx[low] as usize] as usize;
                let tr = &self.translate[t];
                let mut bits = prev;
                while bits != 0 {
                    let x = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    acc |= 1u64 << tr[x];
                }
            }
            reach[s] = acc;
            capable[s] = acc & 1 == 1; // contains the zero element
        }
        capable
    }
}

/// Subset-capability masks for a sequence of explicit vectors.
fn capable_subsets(spec: &GroupSpec, seq: &[Vec<FieldElem>]) -> Result<Vec<bool>> {
    group_order_budget(spec, seq.len())?;
    let ctx = WeightedSumCtx::new(spec)?;
    let idx: Result<Vec<u8>> = seq.iter().map(|v| ctx.index_of(v).map(|i| i as u8)).collect();
    Ok(ctx.capable_subsets(&idx?))
}

/// Is there a pair of disjoint nonempty index subsets, both marked?
fn has_disjoint_marked_pair(marked: &[bool], n: usize) -> bool {
    // any_marked_subset[s] via a subset-sum (zeta) transform
    let mut any = marked.to_vec();
    any[0] = false;
    for bit in 0..n {
        for s in 0..1usize << n {
            if s & (1 << bit) != 0 && any[s & !(1 << bit)] {
                any[s] = true;
            }
        }
    }
    let full = (1usize << n) - 1;
    (1..=full).any(|s| marked[s] && any[full & !s])
}

/// Does the sequence admit two disjoint weighted zero-sum subsequences?
///
/// Two independent routes must agree: the code route builds the kernel of
/// the column matrix and looks for disjoint codeword supports; the direct
/// route enumerates coefficient assignments per index subset.
pub fn sequence_oracle(spec: &GroupSpec, seq: &[Vec<FieldElem>]) -> Result<bool> {
    let n = seq.len();
    if n == 0 {
        return Ok(false);
    }
    group_order_budget(spec, n)?;
    if n > 24 {
        return Err(Error::TooLong(n));
    }

    // route A: the code whose parity-check columns are the sequence
    let field = spec.field()?;
    let r = spec.r as usize;
    let mut h = Matrix::zero(field.clone(), r, n);
    for (c, v) in seq.iter().enumerate() {
        if v.len() != r {
            return Err(Error::Dimension(format!("element has {} coordinates, want {r}", v.len())));
        }
        for (row, &x) in v.iter().enumerate() {
            h.set(row, c, x);
        }
    }
    let kernel = h.kernel_basis();
    let code_route = if kernel.rows() == 0 {
        false
    } else {
        let code = crate::code::LinearCode::new(kernel)?;
        let mut supports = vec![false; 1 << n];
        code.scan_projective_words(|_, word| {
            let mut mask = 0usize;
            for (i, e) in word.iter().enumerate() {
                if !e.is_zero() {
                    mask |= 1 << i;
                }
            }
            supports[mask] = true;
            ControlFlow::<()>::Continue(())
        });
        has_disjoint_marked_pair(&supports, n)
    };

    // route B: direct coefficient enumeration
    let capable = capable_subsets(spec, seq)?;
    let direct_route = has_disjoint_marked_pair(&capable, n);

    assert_eq!(
        code_route, direct_route,
        "oracle routes disagree on a length-{n} sequence over GF({})^{r}",
        spec.q()
    );
    Ok(direct_route)
}

/// Exhaustive sequence-level value: the smallest length forcing two
/// disjoint weighted zero sums in every sequence, together with an extremal
/// sequence one shorter. Enumerates multisets (the predicate is
/// permutation-invariant).
pub fn d2_exhaustive(spec: &GroupSpec, max_len: usize) -> Result<(usize, GroupSequence)> {
    let order = spec.order() as usize;
    if order > 64 {
        return Err(Error::BudgetExceeded { needed: order as u128, budget: 64 });
    }
    let mut extremal: Option<GroupSequence> = None;
    for len in 1..=max_len {
        group_order_budget(spec, len)?;
        let counterexample = find_counterexample(spec, len)?;
        match counterexample {
            Some(seq) => extremal = Some(seq),
            None => {
                let witness = extremal.ok_or_else(|| {
                    Error::Domain("no extremal sequence below the threshold".into())
                })?;
                return Ok((len, witness));
            }
        }
    }
    Err(Error::BudgetExceeded { needed: max_len as u128 + 1, budget: max_len as u128 })
}

/// First multiset of the given length (in lexicographic element-index
/// order) with no two disjoint weighted zero sums.
fn find_counterexample(spec: &GroupSpec, len: usize) -> Result<Option<GroupSequence>> {
    let ctx = WeightedSumCtx::new(spec)?;
    let order = spec.order() as usize;
    // parallel over the first element; multisets are nondecreasing index
    // tuples, so each chunk is independent and the merge keeps order
    let hits: Vec<Option<Vec<u8>>> = (0..order as u8)
        .into_par_iter()
        .map(|first| {
            let mut stack = vec![first];
            let mut found = None;
            rec_counterexample(&ctx, &mut stack, len, order as u8, &mut found);
            found
        })
        .collect();
    Ok(hits
        .into_iter()
        .flatten()
        .next()
        .map(|idx| idx.iter().map(|&i| ctx.element_of(i as usize)).collect()))
}

fn rec_counterexample(
    ctx: &WeightedSumCtx,
    stack: &mut Vec<u8>,
    len: usize,
    order: u8,
    found: &mut Option<Vec<u8>>,
) {
    if found.is_some() {
        return;
    }
    if stack.len() == len {
        let capable = ctx.capable_subsets(stack);
        if !has_disjoint_marked_pair(&capable, len) {
            *found = Some(stack.clone());
        }
        return;
    }
    let start = *stack.last().unwrap();
    for next in start..order {
        stack.push(next);
        rec_counterexample(ctx, stack, len, order, found);
        stack.pop();
        if found.is_some() {
            return;
        }
    }
}

/// One row of the asymptotic tables for `D_2/r` as `r` grows.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticRow {
    pub p: u64,
    pub h: u32,
    pub q: u64,
    /// `alpha/(alpha-1)` from the best asymptotic lower bound on `i(k,q)/k`.
    pub upper: f64,
    /// `beta/(beta-1)` from the constructive (tower) upper bound.
    pub lower_constructive: Option<f64>,
    /// `beta/(beta-1)` from the probabilistic upper bound.
    pub lower_probabilistic: f64,
}

/// Asymptotic upper and lower bounds for each `(p, h)` with `q = p^h`.
pub fn asymptotic_tables(specs: &[(u64, u32)]) -> Result<Vec<AsymptoticRow>> {
    specs
        .iter()
        .map(|&(p, h)| {
            let q = p.pow(h);
            let alpha = best_lower_ratio(q)?;
            let beta_prob = prob_ratio(q);
            let lower_constructive = ag_ratio(q).ok().map(|a| a.ratio / (a.ratio - 1.0));
            Ok(AsymptoticRow {
                p,
                h,
                q,
                upper: alpha / (alpha - 1.0),
                lower_constructive,
                lower_probabilistic: beta_prob / (beta_prob - 1.0),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::build_itable;

    fn table_for(q: u64, kmax: usize) -> ITable {
        build_itable(kmax, &[q], 1 << 22).unwrap()
    }

    fn e(_spec: &GroupSpec, coords: &[u32]) -> Vec<FieldElem> {
        coords.iter().map(|&c| FieldElem(c)).collect()
    }

    #[test]
    fn reduction_on_small_binary_groups() {
        let table = table_for(2, 6);
        for (r, want) in [(1u32, 4usize), (2, 5), (3, 7), (4, 8)] {
            let spec = GroupSpec::new(2, 1, r).unwrap();
            let res = d2_weighted(&spec, &table).unwrap();
            assert_eq!(res.value, ValueOrInterval::Exact(want), "r = {r}");
        }
    }

    #[test]
    fn reduction_on_quaternary_groups() {
        let table = table_for(4, 4);
        let spec = GroupSpec::new(2, 2, 2).unwrap();
        let res = d2_weighted(&spec, &table).unwrap();
        assert_eq!(res.value, ValueOrInterval::Exact(6));
        let spec = GroupSpec::new(2, 2, 1).unwrap();
        assert_eq!(d2_weighted(&spec, &table).unwrap().value, ValueOrInterval::Exact(4));
    }

    #[test]
    fn insufficient_table_is_an_error() {
        let table = ITable::new();
        let spec = GroupSpec::new(2, 1, 2).unwrap();
        assert!(matches!(
            d2_weighted(&spec, &table),
            Err(Error::InsufficientTable { .. })
        ));
    }

    #[test]
    fn oracle_simple_sequences() {
        let spec = GroupSpec::new(2, 1, 2).unwrap();
        // (e1, e1, e2, e2): {1,2} and {3,4} are disjoint zero sums
        let seq = vec![
            e(&spec, &[1, 0]),
            e(&spec, &[1, 0]),
            e(&spec, &[0, 1]),
            e(&spec, &[0, 1]),
        ];
        assert!(sequence_oracle(&spec, &seq).unwrap());
        // (e1, e2, e1+e2): the only zero sum uses all three
        let seq = vec![e(&spec, &[1, 0]), e(&spec, &[0, 1]), e(&spec, &[1, 1])];
        assert!(!sequence_oracle(&spec, &seq).unwrap());
    }

    #[test]
    fn oracle_counts_zero_elements() {
        let spec = GroupSpec::new(3, 1, 1).unwrap();
        // two zero elements: each is its own weighted zero sum
        let seq = vec![e(&spec, &[0]), e(&spec, &[0])];
        assert!(sequence_oracle(&spec, &seq).unwrap());
        let seq = vec![e(&spec, &[0]), e(&spec, &[1])];
        assert!(!sequence_oracle(&spec, &seq).unwrap());
    }

    #[test]
    fn exhaustive_agrees_with_reduction_small() {
        // E_4 = GF(2)^2: D = 5
        let spec = GroupSpec::new(2, 1, 2).unwrap();
        let (value, extremal) = d2_exhaustive(&spec, 6).unwrap();
        assert_eq!(value, 5);
        assert_eq!(extremal.len(), 4);
        assert!(!sequence_oracle(&spec, &extremal).unwrap());
        // E_9 = GF(3)^2: reduction gives 5
        let spec = GroupSpec::new(3, 1, 2).unwrap();
        let (value, extremal) = d2_exhaustive(&spec, 6).unwrap();
        assert_eq!(value, 5);
        assert!(!sequence_oracle(&spec, &extremal).unwrap());
    }

    #[test]
    fn asymptotic_rows_match_reference() {
        let rows = asymptotic_tables(&[(2, 1), (2, 2), (3, 1), (17, 1)]).unwrap();
        let upper: Vec<f64> = rows.iter().map(|r| r.upper).collect();
        for (got, want) in upper.iter().zip([1.3956, 1.6364, 1.5472, 1.9343]) {
            assert!((got - want).abs() < 1e-3, "{got} vs {want}");
        }
        // sandwich: upper bounds in (1, 2], lower bounds in (1, 2)
        for row in &rows {
            assert!(row.upper > 1.0 && row.upper <= 2.0);
            assert!(row.lower_probabilistic > 1.0 && row.lower_probabilistic < 2.0);
            if let Some(l) = row.lower_constructive {
                assert!(l > 1.0 && l < 2.0);
            }
        }
    }

    #[test]
    fn group_spec_validation() {
        assert!(GroupSpec::new(4, 1, 1).is_err());
        assert!(GroupSpec::new(2, 0, 1).is_err());
        assert!(GroupSpec::new(2, 1, 0).is_err());
    }
}
