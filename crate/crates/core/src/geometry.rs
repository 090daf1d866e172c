//! Projective systems of `PG(k-1, q)`: hyperplane incidence, cover tests,
//! minimality, and line sets with the avoidance property.
//!
//! Points are stored with the first nonzero coordinate normalized to 1, so
//! proportional vectors collapse to one canonical representative. Cover
//! tests work on the *support* of a system (multiplicity is ignored for
//! coverage; the distance formula is the one place multiplicity counts).

use crate::code::scan_projective_combinations;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, ZERO};
use crate::matrix::Matrix;
use std::ops::ControlFlow;
use std::sync::Arc;

/// Budget on `tuples x points` membership tests for general-`t` cover scans.
pub const COVER_BUDGET: u128 = 1_000_000_000;
/// Budget on codimension-2 subspaces for avoidance scans.
pub const AVOIDANCE_BUDGET: u128 = 1 << 26;

/// A point of `PG(k-1, q)`: nonzero coordinates, first nonzero entry 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: Vec<FieldElem>,
}

impl ProjectivePoint {
    /// Normalize a nonzero vector to its canonical representative.
    pub fn new(ctx: &FieldCtx, coords: Vec<FieldElem>) -> Result<ProjectivePoint> {
        let lead = coords.iter().position(|e| !e.is_zero()).ok_or(Error::ZeroVector)?;
        let inv = ctx.inv(coords[lead])?;
        let coords = coords.iter().map(|&c| ctx.mul(inv, c)).collect();
        Ok(ProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Standard bilinear pairing with another vector of the same length.
    pub fn dot(&self, ctx: &FieldCtx, other: &[FieldElem]) -> FieldElem {
        let mut acc = ZERO;
        for (&a, &b) in self.coords.iter().zip(other) {
            acc = ctx.add(acc, ctx.mul(a, b));
        }
        acc
    }
}

/// A hyperplane of `PG(k-1, q)`, as a canonical normal vector of the dual.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    normal: ProjectivePoint,
}

impl Hyperplane {
    pub fn new(normal: ProjectivePoint) -> Hyperplane {
        Hyperplane { normal }
    }
    pub fn normal(&self) -> &ProjectivePoint {
        &self.normal
    }
    /// Incidence: `P` lies on the hyperplane iff `<normal, P> = 0`.
    pub fn contains(&self, ctx: &FieldCtx, p: &ProjectivePoint) -> bool {
        self.normal.dot(ctx, p.coords()).is_zero()
    }
}

/// Visit every hyperplane normal of `PG(k-1, q)` in canonical
/// (digit-lexicographic) order.
pub fn scan_hyperplanes<B>(
    ctx: &FieldCtx,
    k: usize,
    mut visit: impl FnMut(&[FieldElem]) -> ControlFlow<B>,
) -> Option<B> {
    // normals are projective representatives of the dual space: reuse the
    // combination walker against the identity matrix
    let identity: Vec<Vec<FieldElem>> = (0..k)
        .map(|i| (0..k).map(|j| FieldElem(u32::from(i == j))).collect())
        .collect();
    let rows: Vec<&[FieldElem]> = identity.iter().map(|r| r.as_slice()).collect();
    scan_projective_combinations(ctx, &rows, k, &mut |_, normal| visit(normal))
}

/// Number of hyperplanes (equivalently points) of `PG(k-1, q)`.
pub fn hyperplane_count(q: u32, k: usize) -> u128 {
    ((q as u128).pow(k as u32) - 1) / (q as u128 - 1)
}

/// A multiset of points of `PG(k-1, q)`.
#[derive(Debug, Clone)]
pub struct ProjectiveSystem {
    ctx: Arc<FieldCtx>,
    dim: usize,
    /// canonical points with multiplicities, sorted
    points: Vec<(ProjectivePoint, usize)>,
    /// total multiplicity
    n: usize,
}

impl ProjectiveSystem {
    pub fn new(
        ctx: Arc<FieldCtx>,
        dim: usize,
        points: impl IntoIterator<Item = ProjectivePoint>,
    ) -> Result<ProjectiveSystem> {
        let mut sorted: Vec<ProjectivePoint> = points.into_iter().collect();
        for p in &sorted {
            if p.dim() != dim {
                return Err(Error::Dimension("point dimension mismatch".into()));
            }
        }
        sorted.sort();
        let mut points: Vec<(ProjectivePoint, usize)> = Vec::new();
        for p in sorted {
            match points.last_mut() {
                Some((last, m)) if *last == p => *m += 1,
                _ => points.push((p, 1)),
            }
        }
        let n = points.iter().map(|(_, m)| m).sum();
        Ok(ProjectiveSystem { ctx, dim, points, n })
    }

    /// The projective system of a generator matrix: equivalence classes of
    /// its columns, with multiplicity the number of proportional columns.
    pub fn from_generator(gen: &Matrix) -> Result<ProjectiveSystem> {
        let k = gen.rows();
        for c in 0..gen.cols() {
            if gen.is_zero_column(c) {
                return Err(Error::ZeroColumn(c));
            }
        }
        let rank = gen.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, k });
        }
        let ctx = gen.ctx().clone();
        let pts: Result<Vec<ProjectivePoint>> =
            (0..gen.cols()).map(|c| ProjectivePoint::new(&ctx, gen.column(c))).collect();
        ProjectiveSystem::new(ctx, k, pts?)
    }

    /// A generator matrix whose columns represent this system (one column
    /// per multiplicity unit, in canonical point order).
    pub fn representative_generator(&self) -> Result<Matrix> {
        let mut m = Matrix::zero(self.ctx.clone(), self.dim, self.n);
        let mut c = 0;
        for (p, mult) in &self.points {
            for _ in 0..*mult {
                for (r, &v) in p.coords().iter().enumerate() {
                    m.set(r, c, v);
                }
                c += 1;
            }
        }
        Ok(m)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    /// Total multiplicity.
    pub fn n(&self) -> usize {
        self.n
    }
    /// Distinct points with multiplicities, in canonical order.
    pub fn points(&self) -> &[(ProjectivePoint, usize)] {
        &self.points
    }
    pub fn support_len(&self) -> usize {
        self.points.len()
    }
    pub fn contains_point(&self, p: &ProjectivePoint) -> bool {
        self.points.binary_search_by(|(q, _)| q.cmp(p)).is_ok()
    }

    /// Whether the points span the whole space.
    pub fn spans(&self) -> bool {
        let mut m = Matrix::zero(self.ctx.clone(), self.support_len(), self.dim);
        for (r, (p, _)) in self.points.iter().enumerate() {
            for (c, &v) in p.coords().iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m.rank() == self.dim
    }

    /// Rows of the `dim x support` coordinate matrix whose columns are the
    /// distinct points. Walking projective combinations of these rows
    /// enumerates, for each hyperplane normal in canonical order, the vector
    /// of pairings `<normal, P_i>` — incrementally, O(support) per normal.
    fn point_matrix_rows(&self) -> Vec<Vec<FieldElem>> {
        (0..self.dim)
            .map(|r| self.points.iter().map(|(p, _)| p.coords()[r]).collect())
            .collect()
    }

    /// `n - max_H |H cap P|`, counting multiplicity: the minimum distance of
    /// any code whose generator columns represent this system.
    pub fn geometric_min_distance(&self) -> usize {
        let rows = self.point_matrix_rows();
        let rows: Vec<&[FieldElem]> = rows.iter().map(|r| r.as_slice()).collect();
        let mut max_cover = 0usize;
        scan_projective_combinations(&self.ctx, &rows, self.support_len(), &mut |_, dots| {
            let cover: usize = self
                .points
                .iter()
                .zip(dots)
                .filter(|(_, d)| d.is_zero())
                .map(|((_, m), _)| m)
                .sum();
            if cover > max_cover {
                max_cover = cover;
            }
            ControlFlow::<()>::Continue(())
        });
        self.n - max_cover
    }

    /// Incidence bitmasks over the distinct points for every hyperplane, in
    /// canonical hyperplane order, together with the all-points mask.
    fn incidence_masks(&self) -> (Vec<u128>, u128) {
        let s = self.support_len();
        assert!(s <= 128, "support exceeds mask width");
        let full: u128 = if s == 128 { u128::MAX } else { (1u128 << s) - 1 };
        let rows = self.point_matrix_rows();
        let rows: Vec<&[FieldElem]> = rows.iter().map(|r| r.as_slice()).collect();
        let mut masks = Vec::with_capacity(hyperplane_count(self.ctx.q(), self.dim) as usize);
        scan_projective_combinations(&self.ctx, &rows, s, &mut |_, dots| {
            let mut m = 0u128;
            for (i, d) in dots.iter().enumerate() {
                if d.is_zero() {
                    m |= 1 << i;
                }
            }
            masks.push(m);
            ControlFlow::<()>::Continue(())
        });
        (masks, full)
    }

    fn hyperplane_by_index(&self, idx: usize) -> Hyperplane {
        let mut i = 0usize;
        let normal = scan_hyperplanes(&self.ctx, self.dim, |normal| {
            if i == idx {
                return ControlFlow::Break(normal.to_vec());
            }
            i += 1;
            ControlFlow::Continue(())
        })
        .expect("hyperplane index in range");
        Hyperplane::new(ProjectivePoint { coords: normal })
    }

    /// Is the support contained in a union of `t` hyperplanes?
    ///
    /// Exhaustive over unordered `t`-multisets of hyperplanes (the diagonal
    /// is included, so 1-cohyperplanar implies 2-cohyperplanar). On a `true`
    /// verdict the lexicographically first covering tuple is returned.
    pub fn is_t_cohyperplanar(&self, t: usize) -> Result<(bool, Option<Vec<Hyperplane>>)> {
        if t == 0 || self.support_len() > 128 {
            return Err(Error::Domain(format!(
                "t = {t}, support = {}",
                self.support_len()
            )));
        }
        let nh = hyperplane_count(self.ctx.q(), self.dim);
        if t > 2 {
            // multiset count: C(nh + t - 1, t)
            let mut tuples: u128 = 1;
            for i in 0..t as u128 {
                tuples = tuples.saturating_mul(nh + t as u128 - 1 - i) / (i + 1);
            }
            let needed = tuples.saturating_mul(self.support_len() as u128);
            if needed > COVER_BUDGET {
                return Err(Error::BudgetExceeded { needed, budget: COVER_BUDGET });
            }
        }
        let (masks, full) = self.incidence_masks();
        let found = if t == 2 {
            Self::cover_pair_scan(&masks, full, self.support_len())
        } else {
            let mut chosen = vec![0usize; t];
            Self::cover_search(&masks, full, 0, 0, 0, &mut chosen).then_some(chosen)
        };
        Ok(match found {
            Some(chosen) => {
                let witness = chosen.iter().map(|&i| self.hyperplane_by_index(i)).collect();
                (true, Some(witness))
            }
            None => (false, None),
        })
    }

    /// Lexicographically first covering pair, with a coverage-count filter:
    /// a pair can only cover when its incidence counts sum to at least the
    /// support size, which prunes almost everything on typical inputs.
    fn cover_pair_scan(masks: &[u128], full: u128, support: usize) -> Option<Vec<usize>> {
        let counts: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
        let mut suffix_max = vec![0u32; masks.len() + 1];
        for i in (0..masks.len()).rev() {
            suffix_max[i] = suffix_max[i + 1].max(counts[i]);
        }
        let s = support as u32;
        for i in 0..masks.len() {
            if counts[i] + suffix_max[i] < s {
                continue;
            }
            for j in i..masks.len() {
                if counts[i] + counts[j] >= s && masks[i] | masks[j] == full {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    }

    fn cover_search(
        masks: &[u128],
        full: u128,
        level: usize,
        first: usize,
        acc: u128,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if level == chosen.len() {
            return acc == full;
        }
        for i in first..masks.len() {
            chosen[level] = i;
            if Self::cover_search(masks, full, level + 1, i, acc | masks[i], chosen) {
                return true;
            }
        }
        false
    }

    /// Is this non-2-cohyperplanar set *minimal*: does removing some single
    /// point make it 2-cohyperplanar? Errors if already 2-cohyperplanar.
    pub fn is_minimal_n2c(
        &self,
    ) -> Result<(bool, Option<(ProjectivePoint, Hyperplane, Hyperplane)>)> {
        if self.support_len() > 128 {
            return Err(Error::TooLong(self.support_len()));
        }
        let (masks, full) = self.incidence_masks();
        // one pass over pairs: an exact cover means 2-cohyperplanar (error);
        // a cover that misses exactly one point is a minimality witness.
        // Pairs whose incidence counts cannot reach support-1 are skipped.
        let counts: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
        let mut suffix_max = vec![0u32; masks.len() + 1];
        for i in (0..masks.len()).rev() {
            suffix_max[i] = suffix_max[i + 1].max(counts[i]);
        }
        let s = self.support_len() as u32;
        let mut witness: Option<(usize, usize, usize)> = None;
        for i in 0..masks.len() {
            if counts[i] + suffix_max[i] + 1 < s {
                continue;
            }
            for j in i..masks.len() {
                if counts[i] + counts[j] + 1 < s {
                    continue;
                }
                let missing = full & !(masks[i] | masks[j]);
                if missing == 0 {
                    return Err(Error::AlreadyCohyperplanar);
                }
                if missing.count_ones() == 1 && witness.is_none() {
                    witness = Some((missing.trailing_zeros() as usize, i, j));
                }
            }
        }
        Ok(match witness {
            Some((p, i, j)) => (
                true,
                Some((
                    self.points[p].0.clone(),
                    self.hyperplane_by_index(i),
                    self.hyperplane_by_index(j),
                )),
            ),
            None => (false, None),
        })
    }
}

/// A projective line, spanned by two distinct points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    a: ProjectivePoint,
    b: ProjectivePoint,
}

impl Line {
    pub fn new(a: ProjectivePoint, b: ProjectivePoint) -> Result<Line> {
        if a == b {
            return Err(Error::CoincidentPoints);
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Ok(Line { a, b })
    }

    pub fn endpoints(&self) -> (&ProjectivePoint, &ProjectivePoint) {
        (&self.a, &self.b)
    }

    /// All `q + 1` points of the line: `a`, and `b + s*a` for every scalar.
    pub fn points(&self, ctx: &FieldCtx) -> Vec<ProjectivePoint> {
        let mut out = vec![self.a.clone()];
        for s in 0..ctx.q() {
            let s = FieldElem(s);
            let coords: Vec<FieldElem> = self
                .a
                .coords()
                .iter()
                .zip(self.b.coords())
                .map(|(&x, &y)| ctx.add(y, ctx.mul(s, x)))
                .collect();
            out.push(ProjectivePoint::new(ctx, coords).expect("line points are nonzero"));
        }
        out.sort();
        out.dedup();
        out
    }

    /// Canonical key: the reduced echelon basis of the span, flattened.
    pub fn canonical_key(&self, ctx: &Arc<FieldCtx>) -> Vec<u32> {
        let mut m = Matrix::zero(ctx.clone(), 2, self.a.dim());
        for (c, &v) in self.a.coords().iter().enumerate() {
            m.set(0, c, v);
        }
        for (c, &v) in self.b.coords().iter().enumerate() {
            m.set(1, c, v);
        }
        let (_, rref) = m.rank_and_rref();
        (0..2).flat_map(|r| rref.row(r).iter().map(|e| e.0).collect::<Vec<_>>()).collect()
    }
}

/// Visit all codimension-2 subspaces of `PG(k-1, q)`, presented as the two
/// rows of a canonical reduced-echelon dual basis (the subspace is the joint
/// kernel of the two normals).
fn scan_codim2_duals<B>(
    ctx: &FieldCtx,
    k: usize,
    mut visit: impl FnMut(&[FieldElem], &[FieldElem]) -> ControlFlow<B>,
) -> Option<B> {
    // canonical 2 x k reduced echelon matrices: pivots at i < j, row 0 has
    // free entries beyond i except at column j, row 1 has free entries beyond j
    let q = ctx.q();
    let mut row0 = vec![ZERO; k];
    let mut row1 = vec![ZERO; k];
    for i in 0..k {
        for j in i + 1..k {
            let free0: Vec<usize> = (i + 1..k).filter(|&c| c != j).collect();
            let free1: Vec<usize> = (j + 1..k).collect();
            let total = (q as u64).pow((free0.len() + free1.len()) as u32);
            for combo in 0..total {
                let mut v = combo;
                for c in row0.iter_mut().chain(row1.iter_mut()) {
                    *c = ZERO;
                }
                row0[i] = FieldElem(1);
                row1[j] = FieldElem(1);
                for &c in &free0 {
                    row0[c] = FieldElem((v % q as u64) as u32);
                    v /= q as u64;
                }
                for &c in &free1 {
                    row1[c] = FieldElem((v % q as u64) as u32);
                    v /= q as u64;
                }
                if let ControlFlow::Break(b) = visit(&row0, &row1) {
                    return Some(b);
                }
            }
        }
    }
    None
}

/// Gaussian binomial `[k choose 2]_q` = number of codim-2 subspaces.
fn codim2_count(q: u32, k: usize) -> u128 {
    if k < 2 {
        return 0;
    }
    let q = q as u128;
    ((q.pow(k as u32) - 1) * (q.pow(k as u32 - 1) - 1)) / ((q * q - 1) * (q - 1))
}

/// Does the line set have the avoidance property: no codimension-2 subspace
/// meets every line?
///
/// The empty line set is rejected as `false`: the condition would hold
/// vacuously but supports no construction.
pub fn has_avoidance_property(
    ctx: &Arc<FieldCtx>,
    k: usize,
    lines: &[Line],
) -> Result<(bool, Option<(Hyperplane, Hyperplane)>)> {
    if lines.is_empty() {
        return Ok((false, None));
    }
    let count = codim2_count(ctx.q(), k);
    if count > AVOIDANCE_BUDGET {
        return Err(Error::BudgetExceeded { needed: count, budget: AVOIDANCE_BUDGET });
    }
    let line_points: Vec<Vec<ProjectivePoint>> =
        lines.iter().map(|l| l.points(ctx)).collect();
    let piercing = scan_codim2_duals(ctx, k, |n0, n1| {
        let meets_all = line_points.iter().all(|pts| {
            pts.iter().any(|p| p.dot(ctx, n0).is_zero() && p.dot(ctx, n1).is_zero())
        });
        if meets_all {
            ControlFlow::Break((n0.to_vec(), n1.to_vec()))
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(match piercing {
        Some((n0, n1)) => (
            false,
            Some((
                Hyperplane::new(ProjectivePoint::new(ctx, n0)?),
                Hyperplane::new(ProjectivePoint::new(ctx, n1)?),
            )),
        ),
        None => (true, None),
    })
}

/// Pick three points on every line (the two endpoints plus one chosen by
/// `chooser` among the remaining `q - 1`), deduplicated across lines.
///
/// When the line set has the avoidance property the result is a
/// non-2-cohyperplanar set; the construction itself is unconditional.
pub fn three_points_per_line(
    ctx: &Arc<FieldCtx>,
    k: usize,
    lines: &[Line],
    mut chooser: impl FnMut(usize, usize) -> usize,
) -> Result<ProjectiveSystem> {
    let mut pts = Vec::with_capacity(lines.len() * 3);
    for (idx, line) in lines.iter().enumerate() {
        let (a, b) = line.endpoints();
        let others: Vec<ProjectivePoint> = line
            .points(ctx)
            .into_iter()
            .filter(|p| p != a && p != b)
            .collect();
        let choice = chooser(idx, others.len());
        if choice >= others.len() {
            return Err(Error::BadChooser { index: choice, options: others.len() });
        }
        pts.push(a.clone());
        pts.push(b.clone());
        pts.push(others[choice].clone());
    }
    pts.sort();
    pts.dedup();
    ProjectiveSystem::new(ctx.clone(), k, pts)
}
