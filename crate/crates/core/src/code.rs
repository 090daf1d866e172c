//! Linear codes over `GF(q)`: codewords, duals, weights, minimum distance.
//!
//! Enumeration routines walk one representative per scalar class of nonzero
//! codewords — `(q^k - 1)/(q - 1)` words instead of `q^k - 1` — which is
//! sufficient for supports, weights and distance because all of these are
//! invariant under scaling.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, ZERO};
use crate::matrix::Matrix;
use std::ops::ControlFlow;
use std::sync::OnceLock;

/// Enumeration budget for exhaustive codeword walks: `q^k` at most `2^24`.
pub const ENUM_BUDGET: u128 = 1 << 24;

/// A codeword together with its support data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    entries: Vec<FieldElem>,
}

impl Codeword {
    pub fn new(entries: Vec<FieldElem>) -> Codeword {
        Codeword { entries }
    }
    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }
    pub fn len(&self) -> usize {
        self.entries.len()
    }
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
    /// Index set of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(i, e)| (!e.is_zero()).then_some(i))
            .collect()
    }
    /// Support as a bitmask; requires length at most 128.
    pub fn support_mask(&self) -> Result<u128> {
        if self.entries.len() > 128 {
            return Err(Error::TooLong(self.entries.len()));
        }
        let mut m = 0u128;
        for (i, e) in self.entries.iter().enumerate() {
            if !e.is_zero() {
                m |= 1 << i;
            }
        }
        Ok(m)
    }
    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

/// A linear `[n, k]` code presented by a full-row-rank generator matrix.
pub struct LinearCode {
    gen: Matrix,
    n: usize,
    k: usize,
    dist: OnceLock<usize>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let c = LinearCode { gen: self.gen.clone(), n: self.n, k: self.k, dist: OnceLock::new() };
        if let Some(&d) = self.dist.get() {
            let _ = c.dist.set(d);
        }
        c
    }
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]_{} code\n{:?}", self.n, self.k, self.gen.ctx().q(), self.gen)
    }
}

impl LinearCode {
    /// Wrap a generator matrix. Fails if the matrix is rank-deficient.
    ///
    /// Zero columns are allowed here (search routines generate degenerate
    /// candidates); nondegeneracy is a queryable predicate instead.
    pub fn new(gen: Matrix) -> Result<LinearCode> {
        let k = gen.rows();
        let n = gen.cols();
        if k == 0 || n == 0 || k > n {
            return Err(Error::Dimension(format!("invalid code shape {k}x{n}")));
        }
        let rank = gen.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, k });
        }
        Ok(LinearCode { gen, n, k, dist: OnceLock::new() })
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }
    pub fn ctx(&self) -> &std::sync::Arc<FieldCtx> {
        self.gen.ctx()
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn q(&self) -> u32 {
        self.gen.ctx().q()
    }

    /// No generator column is zero.
    pub fn is_nondegenerate(&self) -> bool {
        (0..self.n).all(|c| !self.gen.is_zero_column(c))
    }

    /// Number of projective codeword representatives `(q^k - 1)/(q - 1)`.
    pub fn projective_word_count(&self) -> u128 {
        let q = self.q() as u128;
        (q.pow(self.k as u32) - 1) / (q - 1)
    }

    fn check_enum_budget(&self) -> Result<()> {
        let total = (self.q() as u128).pow(self.k as u32);
        if total > ENUM_BUDGET {
            return Err(Error::BudgetExceeded { needed: total, budget: ENUM_BUDGET });
        }
        Ok(())
    }

    /// A parity-check matrix `H` with `G * H^T = 0` and rank `n - k`.
    pub fn parity_check(&self) -> Matrix {
        self.gen.kernel_basis()
    }

    /// The dual code; `None` when the dual is the zero code (`k = n`).
    pub fn dual(&self) -> Option<LinearCode> {
        let h = self.parity_check();
        (h.rows() > 0).then(|| LinearCode::new(h).expect("kernel basis has full row rank"))
    }

    /// Minimum nonzero codeword weight, by exhaustive projective enumeration.
    pub fn min_distance(&self) -> Result<usize> {
        if let Some(&d) = self.dist.get() {
            return Ok(d);
        }
        self.check_enum_budget()?;
        let mut d = self.n + 1;
        self.scan_projective_words(|_, word| {
            let w = word.iter().filter(|e| !e.is_zero()).count();
            if w < d {
                d = w;
            }
            ControlFlow::<()>::Continue(())
        });
        let _ = self.dist.set(d);
        Ok(d)
    }

    /// Weight distribution over all `q^k` codewords, indexed by weight.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        self.check_enum_budget()?;
        let mut dist = vec![0u64; self.n + 1];
        dist[0] = 1;
        let scale = self.q() as u64 - 1;
        self.scan_projective_words(|_, word| {
            let w = word.iter().filter(|e| !e.is_zero()).count();
            dist[w] += scale;
            ControlFlow::<()>::Continue(())
        });
        let _ = self.dist.set(
            dist.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w).unwrap_or(self.n),
        );
        Ok(dist)
    }

    /// Stream of projective codeword representatives, in message-lexicographic
    /// order. Exactly `(q^k - 1)/(q - 1)` words, pairwise non-proportional.
    pub fn projective_codewords(&self) -> Result<ProjectiveCodewords> {
        self.check_enum_budget()?;
        Ok(ProjectiveCodewords::new(self))
    }

    /// Visit `(message, codeword)` for one representative per scalar class,
    /// in message-lexicographic order. Both slices are scratch buffers owned
    /// by the walker. Returns the break payload, if any.
    pub fn scan_projective_words<B>(
        &self,
        mut visit: impl FnMut(&[FieldElem], &[FieldElem]) -> ControlFlow<B>,
    ) -> Option<B> {
        let rows: Vec<&[FieldElem]> = (0..self.k).map(|r| self.gen.row(r)).collect();
        scan_projective_combinations(self.gen.ctx(), &rows, self.n, &mut visit)
    }
}

/// DFS over projective representatives (first nonzero digit = 1) of the row
/// span, maintaining the partial linear combination incrementally so each
/// node costs O(n) field operations.
pub(crate) fn scan_projective_combinations<B>(
    ctx: &FieldCtx,
    rows: &[&[FieldElem]],
    n: usize,
    visit: &mut impl FnMut(&[FieldElem], &[FieldElem]) -> ControlFlow<B>,
) -> Option<B> {
    let k = rows.len();
    let mut msg = vec![ZERO; k];
    let mut partial = vec![ZERO; (k + 1) * n];
    rec(ctx, rows, n, 0, false, &mut msg, &mut partial, visit)
}

#[allow(clippy::too_many_arguments)]
fn rec<B>(
    ctx: &FieldCtx,
    rows: &[&[FieldElem]],
    n: usize,
    level: usize,
    leading: bool,
    msg: &mut [FieldElem],
    partial: &mut [FieldElem],
    visit: &mut impl FnMut(&[FieldElem], &[FieldElem]) -> ControlFlow<B>,
) -> Option<B> {
    let k = rows.len();
    if level == k {
        if !leading {
            return None; // the all-zero message is skipped
        }
        let word = &partial[level * n..(level + 1) * n];
        return match visit(msg, word) {
            ControlFlow::Continue(()) => None,
            ControlFlow::Break(b) => Some(b),
        };
    }
    let digits: u32 = if leading { ctx.q() } else { 2 };
    for d in 0..digits {
        let d = FieldElem(d);
        msg[level] = d;
        let (prev, next) = partial.split_at_mut((level + 1) * n);
        let prev = &prev[level * n..];
        let next = &mut next[..n];
        if d.is_zero() {
            next.copy_from_slice(prev);
        } else {
            for i in 0..n {
                next[i] = ctx.add(prev[i], ctx.mul(d, rows[level][i]));
            }
        }
        if let Some(b) =
            rec(ctx, rows, n, level + 1, leading || !d.is_zero(), msg, partial, visit)
        {
            return Some(b);
        }
    }
    msg[level] = ZERO;
    None
}

/// Iterator form of the projective codeword walk.
///
/// Materialized up front; the enumeration budget keeps this desk-scale, and
/// hot paths use [`LinearCode::scan_projective_words`] instead.
pub struct ProjectiveCodewords {
    buf: std::vec::IntoIter<Codeword>,
}

impl ProjectiveCodewords {
    fn new(code: &LinearCode) -> Self {
        let mut words = Vec::with_capacity(code.projective_word_count() as usize);
        code.scan_projective_words(|_, word| {
            words.push(Codeword::new(word.to_vec()));
            ControlFlow::<()>::Continue(())
        });
        ProjectiveCodewords { buf: words.into_iter() }
    }
}

impl Iterator for ProjectiveCodewords {
    type Item = Codeword;
    fn next(&mut self) -> Option<Codeword> {
        self.buf.next()
    }
    fn size_hint(&self) -> (usize, Option<usize>) {
        self.buf.size_hint()
    }
}

impl ExactSizeIterator for ProjectiveCodewords {}
