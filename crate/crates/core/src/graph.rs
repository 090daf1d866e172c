//! Undirected simple graphs: adjacency spectra, integrity, and the
//! line-set pipeline that turns an expander on the points of a projective
//! system into a non-2-cohyperplanar set.

use crate::error::{Error, Result};
use crate::geometry::{Line, ProjectiveSystem};
use serde::Serialize;

/// Vertex cap for the dense symmetric eigensolver.
pub const SPECTRUM_BUDGET: usize = 512;
/// Vertex cap for the exact integrity search.
pub const INTEGRITY_BUDGET: usize = 24;

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build from an edge list; loops and duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Domain(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        let before = norm.len();
        norm.dedup();
        if norm.len() != before {
            return Err(Error::Domain("duplicate edge".into()));
        }
        Ok(Graph { n, edges: norm })
    }

    /// Parse the on-disk format: one `u v` pair per line, 0-indexed;
    /// blank lines and `#` comments ignored. The vertex count is
    /// `max vertex + 1` unless a larger `n` is given.
    pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut max_v = 0usize;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let (u, v) = (it.next(), it.next());
            let (Some(u), Some(v)) = (u, v) else {
                return Err(Error::Domain(format!("malformed edge line: {line}")));
            };
            let u: usize =
                u.parse().map_err(|_| Error::Domain(format!("bad vertex: {u}")))?;
            let v: usize =
                v.parse().map_err(|_| Error::Domain(format!("bad vertex: {v}")))?;
            max_v = max_v.max(u).max(v);
            edges.push((u, v));
        }
        let n = n.unwrap_or(if edges.is_empty() { 0 } else { max_v + 1 });
        Graph::from_edges(n, edges)
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { n, edges }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges = (0..n).map(|u| (u.min((u + 1) % n), u.max((u + 1) % n))).collect();
        let mut edges: Vec<(usize, usize)> = edges;
        edges.sort_unstable();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Graph {
        let edges = (0..n.saturating_sub(1)).map(|u| (u, u + 1)).collect();
        Graph { n, edges }
    }

    /// The Petersen graph: outer 5-cycle, inner 5-star, spokes.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            edges.push((i, 5 + i)); // spokes
        }
        Graph::from_edges(10, edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// `Some(t)` when every vertex has degree `t`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    fn adjacency(&self) -> Vec<f64> {
        let mut a = vec![0.0f64; self.n * self.n];
        for &(u, v) in &self.edges {
            a[u * self.n + v] = 1.0;
            a[v * self.n + u] = 1.0;
        }
        a
    }

    fn adjacency_masks(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }
}

/// Adjacency eigenvalues, sorted descending, with
/// `lambda = max(|lambda_2|, ..., |lambda_n|)`.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    pub eigenvalues: Vec<f64>,
    pub lambda: f64,
}

impl SpectralSummary {
    /// `lambda <= 2 sqrt(t - 1)`: the Ramanujan condition for a t-regular
    /// graph. Diagnostic only.
    pub fn is_ramanujan(&self, t: usize) -> bool {
        self.lambda <= 2.0 * ((t as f64) - 1.0).sqrt() + 1e-9
    }
}

/// Eigenvalues of the adjacency matrix by cyclic Jacobi rotations, run to an
/// off-diagonal Frobenius norm below `1e-10` (at most 100 sweeps).
pub fn spectrum(g: &Graph) -> Result<SpectralSummary> {
    let n = g.n();
    if n == 0 || n > SPECTRUM_BUDGET {
        return Err(Error::BudgetExceeded {
            needed: n as u128,
            budget: SPECTRUM_BUDGET as u128,
        });
    }
    let mut a = g.adjacency();
    let mut converged = false;
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if (2.0 * off).sqrt() < 1e-10 {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let api = a[p * n + i];
                    let aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(100));
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let lambda = eigenvalues[1..]
        .iter()
        .fold(0.0f64, |acc, &v| acc.max(v.abs()));
    Ok(SpectralSummary { eigenvalues, lambda })
}

/// Exact integrity `min over S of |S| + size of the largest component of
/// G - S`, with a minimizing vertex set.
///
/// Subsets are enumerated by increasing size; once the best known value is
/// at most the subset size the remaining sizes cannot improve and the scan
/// stops. Ties break toward the smallest subset in mask order.
pub fn integrity(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n == 0 || n > INTEGRITY_BUDGET {
        return Err(Error::BudgetExceeded {
            needed: n as u128,
            budget: INTEGRITY_BUDGET as u128,
        });
    }
    let adj = g.adjacency_masks();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let kappa = |removed: u32| -> usize {
        let mut rem = full & !removed;
        let mut largest = 0usize;
        while rem != 0 {
            let start = rem.trailing_zeros() as usize;
            let mut comp = 1u32 << start;
            loop {
                let mut grown = comp;
                let mut frontier = comp;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    grown |= adj[v] & rem;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            largest = largest.max(comp.count_ones() as usize);
            rem &= !comp;
        }
        largest
    };

    let mut best = kappa(0);
    let mut best_set = 0u32;
    for size in 1..=n {
        if size >= best {
            break;
        }
        // Gosper's hack over subsets of the given size
        let mut mask: u32 = (1u32 << size) - 1;
        while mask <= full {
            let value = size + kappa(mask);
            if value < best {
                best = value;
                best_set = mask;
            }
            // next subset of the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            if r > full || c == 0 {
                break;
            }
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    let set = (0..n).filter(|&v| best_set & (1 << v) != 0).collect();
    Ok((best, set))
}

/// The eigenvalue-based lower bound `n (t - lambda) / (t + lambda)` for a
/// t-regular graph. Exact integrity always satisfies it.
pub fn spectral_integrity_lower_bound(g: &Graph) -> Result<f64> {
    let t = g.regularity().ok_or(Error::Irregular)?;
    let s = spectrum(g)?;
    if t == 0 {
        return Ok(0.0);
    }
    Ok(g.n() as f64 * (t as f64 - s.lambda) / (t as f64 + s.lambda))
}

/// The line set `{<P_i, P_j> : ij in E}` of a graph drawn on the distinct
/// points of a projective system, deduplicated by span.
///
/// When `integrity(g) >= n - d + 1` (exactly, or via the spectral bound)
/// the result has the avoidance property.
pub fn lines_from_graph(sys: &ProjectiveSystem, g: &Graph) -> Result<Vec<Line>> {
    if sys.points().iter().any(|(_, m)| *m > 1) {
        return Err(Error::Domain("system has repeated points".into()));
    }
    if sys.support_len() != g.n() {
        return Err(Error::Dimension(format!(
            "{} points vs {} vertices",
            sys.support_len(),
            g.n()
        )));
    }
    let pts: Vec<_> = sys.points().iter().map(|(p, _)| p.clone()).collect();
    let mut lines = Vec::with_capacity(g.edge_count());
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v) in g.edges() {
        let line = Line::new(pts[u].clone(), pts[v].clone())?;
        if seen.insert(line.canonical_key(sys.ctx())) {
            lines.push(line);
        }
    }
    Ok(lines)
}

/// Outcome of the degree optimization for the expander construction over a
/// square field: minimize `alpha(q, t) = (1 + t/2)/R(q, t)` with
/// `R(q, t) = (t - 2 sqrt(t-1))/(t + 2 sqrt(t-1)) - 1/(sqrt(q) - 1)` over
/// integer degrees `t >= 3` with `R > 0`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AlphaOptimum {
    pub q: u64,
    pub t: u64,
    pub alpha: f64,
}

pub fn spectral_rate_margin(q: u64, t: u64) -> f64 {
    let tf = t as f64;
    let s = 2.0 * (tf - 1.0).sqrt();
    (tf - s) / (tf + s) - 1.0 / ((q as f64).sqrt() - 1.0)
}

/// Search `t` in `[3, 10000]`, stopping after 50 consecutive increases of
/// `alpha` once feasible. Errors when `q` is not a square prime power or no
/// degree is feasible (`q = 4`: the required defect margin is impossible).
pub fn alpha_optimizer(q: u64) -> Result<AlphaOptimum> {
    let (_, h) = crate::bounds::prime_power(q)?;
    let sq = (q as f64).sqrt().round() as u64;
    if h % 2 != 0 || sq * sq != q {
        return Err(Error::NotSquare(q));
    }
    let mut best: Option<(u64, f64)> = None;
    let mut increases = 0u32;
    let mut last = f64::INFINITY;
    for t in 3..=10_000u64 {
        let r = spectral_rate_margin(q, t);
        if r <= 0.0 {
            continue;
        }
        let alpha = (1.0 + t as f64 / 2.0) / r;
        if best.map_or(true, |(_, a)| alpha < a) {
            best = Some((t, alpha));
        }
        if alpha >= last {
            increases += 1;
            if increases >= 50 {
                break;
            }
        } else {
            increases = 0;
        }
        last = alpha;
    }
    let (t, alpha) = best.ok_or(Error::NoFeasibleDegree(q))?;
    Ok(AlphaOptimum { q, t, alpha })
}

/// The first rows of the optimal `(t, alpha)` table for small square `q`.
pub fn alpha_table() -> Result<Vec<AlphaOptimum>> {
    [9u64, 16, 25, 49, 64, 81, 121, 169, 256]
        .iter()
        .map(|&q| alpha_optimizer(q))
        .collect()
}
