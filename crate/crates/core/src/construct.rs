//! Explicit constructions: evaluation (arc) codes, sparse tetrahedra, and
//! concatenation over field extensions.

use crate::error::{Error, Result};
use crate::field::{make_field, FieldCtx, FieldEmbedding, ONE};
use crate::matrix::Matrix;
use crate::code::LinearCode;
use std::sync::Arc;

/// Evaluation code of degree-`< k` polynomials at `n` distinct places of the
/// projective line, `n <= q + 1` (the place at infinity is used last).
///
/// Columns are `(1, x, ..., x^{k-1})` for the first `n` field elements in
/// canonical order, and `(0, ..., 0, 1)` when the point at infinity is
/// needed. The column set is an arc: every `k` columns are independent
/// (Vandermonde), so the code is MDS with `d = n - k + 1`.
pub fn rs_evaluation_code(ctx: &Arc<FieldCtx>, k: usize, n: usize) -> Result<LinearCode> {
    let q = ctx.q() as usize;
    if k == 0 || n < k || n > q + 1 {
        return Err(Error::Unsatisfiable(format!(
            "an [n={n}, k={k}] evaluation code over GF({q}) needs k <= n <= q+1"
        )));
    }
    let mut g = Matrix::zero(ctx.clone(), k, n);
    let finite = n.min(q);
    for (c, x) in ctx.elements().take(finite).enumerate() {
        let mut pow = ONE;
        for r in 0..k {
            g.set(r, c, pow);
            pow = ctx.mul(pow, x);
        }
    }
    if n == q + 1 {
        g.set(k - 1, n - 1, ONE);
    }
    LinearCode::new(g)
}

/// The shortest arc-based intersecting code: `2k - 1` points of an arc give
/// an intersecting `[2k-1, k, k]` MDS code. Requires `2k - 1 <= q + 1`.
pub fn rs_arc_code(k: usize, q: u64) -> Result<LinearCode> {
    let ctx = field_of_order(q)?;
    if k < 1 || 2 * k - 1 > ctx.q() as usize + 1 {
        return Err(Error::Unsatisfiable(format!(
            "a (2k-1)-point arc in PG({}, {q}) needs 2k-1 <= q+1, got k = {k}",
            k.max(1) - 1
        )));
    }
    rs_evaluation_code(&ctx, k, 2 * k - 1)
}

/// Resolve a prime power `q = p^h` to its field.
pub fn field_of_order(q: u64) -> Result<Arc<FieldCtx>> {
    let mut p = 0u64;
    for d in 2..=q {
        if q % d == 0 {
            p = d;
            break;
        }
    }
    if p == 0 {
        return Err(Error::NotPrime(q));
    }
    let mut h = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        h += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrime(q)); // not a prime power
    }
    make_field(p, h)
}

/// The sparse tetrahedron: `k` frame points plus one interior point on each
/// of the `k(k-1)/2` connecting lines — a minimal non-2-cohyperplanar set of
/// size `k(k+1)/2`, hence an intersecting `[k(k+1)/2, k, k]` code.
///
/// For each edge `(i, j)` the interior point is `e_i + lambda e_j` with
/// `lambda = alpha^{chooser(i, j)}`; over GF(2) the interior point is forced
/// and the chooser is ignored.
pub fn sparse_tetrahedron(
    k: usize,
    q: u64,
    mut edge_chooser: impl FnMut(usize, usize) -> usize,
) -> Result<LinearCode> {
    if k < 2 {
        return Err(Error::Unsatisfiable("a tetrahedron needs dimension k >= 2".into()));
    }
    let ctx = field_of_order(q)?;
    let qq = ctx.q() as usize;
    let n = k * (k + 1) / 2;
    let mut g = Matrix::zero(ctx.clone(), k, n);
    for i in 0..k {
        g.set(i, i, ONE);
    }
    let mut c = k;
    for i in 0..k {
        for j in i + 1..k {
            let lambda = if qq == 2 {
                ONE
            } else {
                let choice = edge_chooser(i, j);
                if choice >= qq - 1 {
                    return Err(Error::BadChooser { index: choice, options: qq - 1 });
                }
                ctx.alpha_pow(choice as u64)
            };
            g.set(i, c, ONE);
            g.set(j, c, lambda);
            c += 1;
        }
    }
    LinearCode::new(g)
}

/// Concatenate an outer code over `GF(q^k)` with an inner `[n, k]` code over
/// `GF(q)`: every outer symbol is expanded into `k` inner-field coordinates
/// and encoded by the inner generator. Parameters multiply: the result is a
/// `[N*n, K*k]` code with distance at least `D*d`, and it is intersecting
/// whenever both components are.
pub fn concatenate(inner: &LinearCode, outer: &LinearCode) -> Result<LinearCode> {
    let small = inner.ctx();
    let big = outer.ctx();
    let embedding = FieldEmbedding::new(big, small)?;
    if embedding.degree() != inner.k() {
        return Err(Error::IncompatibleFields {
            big: big.q() as u64,
            small: small.q() as u64,
        });
    }
    let (n, k) = (inner.n(), inner.k());
    let (nn, kk) = (outer.n(), outer.k());
    // GF(q)-basis of the outer code: alpha^j * (outer row i)
    let mut g = Matrix::zero(small.clone(), kk * k, nn * n);
    for i in 0..kk {
        for j in 0..k {
            let r = i * k + j;
            let scale = big.pow(big.alpha(), j as u64);
            for col in 0..nn {
                let symbol = big.mul(scale, outer.generator().get(i, col));
                let coords = embedding.expand(symbol)?;
                let block = inner.generator().vec_mul(&coords);
                for (t, &v) in block.iter().enumerate() {
                    g.set(r, col * n + t, v);
                }
            }
        }
    }
    LinearCode::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{is_intersecting_geometric, is_intersecting_supports};
    use crate::geometry::ProjectiveSystem;

    #[test]
    fn arc_codes_are_mds_and_intersecting() {
        for (k, q, n) in [(2usize, 2u64, 3usize), (3, 4, 5), (4, 7, 7), (5, 8, 9)] {
            let c = rs_arc_code(k, q).unwrap();
            assert_eq!((c.n(), c.k()), (n, k));
            assert_eq!(c.min_distance().unwrap(), k, "arc code distance");
            assert!(is_intersecting_supports(&c).unwrap().verdict);
            assert!(is_intersecting_geometric(&c).unwrap().verdict);
        }
    }

    #[test]
    fn arc_requires_enough_points() {
        assert!(rs_arc_code(3, 3).is_err()); // 2k-1 = 5 > q+1 = 4
        assert!(rs_arc_code(5, 7).is_err()); // 9 > 8
    }

    #[test]
    fn every_k_columns_of_arc_are_independent() {
        // exhaustive for k <= 5
        for (k, q) in [(3usize, 7u64), (4, 7), (5, 9)] {
            let c = rs_arc_code(k, q).unwrap();
            let g = c.generator();
            let n = c.n();
            let mut cols = vec![0usize; k];
            fn rec(
                g: &Matrix,
                k: usize,
                n: usize,
                start: usize,
                level: usize,
                cols: &mut Vec<usize>,
            ) {
                if level == k {
                    let mut sub = Matrix::zero(g.ctx().clone(), k, k);
                    for (c, &col) in cols.iter().enumerate() {
                        for r in 0..k {
                            sub.set(r, c, g.get(r, col));
                        }
                    }
                    assert_eq!(sub.rank(), k, "columns {cols:?} are dependent");
                    return;
                }
                for i in start..n {
                    cols[level] = i;
                    rec(g, k, n, i + 1, level + 1, cols);
                }
            }
            rec(g, k, n, 0, 0, &mut cols);
        }
    }

    #[test]
    fn tetrahedron_parameters_and_minimality() {
        let c = sparse_tetrahedron(3, 3, |_, _| 0).unwrap();
        assert_eq!((c.n(), c.k()), (6, 3));
        assert_eq!(c.min_distance().unwrap(), 3);
        assert!(is_intersecting_supports(&c).unwrap().verdict);
        let s = ProjectiveSystem::from_generator(c.generator()).unwrap();
        assert!(s.is_minimal_n2c().unwrap().0);

        let c = sparse_tetrahedron(4, 3, |_, _| 1).unwrap();
        assert_eq!((c.n(), c.k()), (10, 4));
        assert_eq!(c.min_distance().unwrap(), 4);
        assert!(is_intersecting_supports(&c).unwrap().verdict);
        assert!(is_intersecting_geometric(&c).unwrap().verdict);
        let s = ProjectiveSystem::from_generator(c.generator()).unwrap();
        assert!(s.is_minimal_n2c().unwrap().0);

        // k = 2: two vertices plus one midpoint of the unique line
        let c = sparse_tetrahedron(2, 3, |_, _| 0).unwrap();
        assert_eq!((c.n(), c.k()), (3, 2));
        assert_eq!(c.min_distance().unwrap(), 2);
    }

    #[test]
    fn tetrahedron_over_gf2_is_forced() {
        let c = sparse_tetrahedron(4, 2, |_, _| 99).unwrap(); // chooser ignored
        assert_eq!((c.n(), c.k()), (10, 4));
        assert!(is_intersecting_supports(&c).unwrap().verdict);
    }

    #[test]
    fn tetrahedron_rejects_bad_chooser() {
        assert!(matches!(
            sparse_tetrahedron(3, 3, |_, _| 5),
            Err(Error::BadChooser { index: 5, options: 2 })
        ));
    }

    #[test]
    fn concatenation_parameter_law() {
        // trivial inner [k,k] identity: parameters multiply, nothing more
        let f9 = make_field(3, 2).unwrap();
        let outer = rs_evaluation_code(&f9, 2, 3).unwrap();
        let f3 = make_field(3, 1).unwrap();
        let inner = LinearCode::new(Matrix::identity(f3, 2)).unwrap();
        let cat = concatenate(&inner, &outer).unwrap();
        assert_eq!((cat.n(), cat.k()), (6, 4));
    }

    #[test]
    fn concatenation_of_intersecting_is_intersecting() {
        // [3,2,2]_9 outer, [3,2,2]_3 inner -> intersecting [9,4,4]_3
        let f9 = make_field(3, 2).unwrap();
        let outer = rs_evaluation_code(&f9, 2, 3).unwrap();
        let inner = rs_arc_code(2, 3).unwrap();
        assert!(is_intersecting_supports(&outer).unwrap().verdict);
        assert!(is_intersecting_supports(&inner).unwrap().verdict);
        let cat = concatenate(&inner, &outer).unwrap();
        assert_eq!((cat.n(), cat.k()), (9, 4));
        assert_eq!(cat.min_distance().unwrap(), 4);
        assert!(is_intersecting_supports(&cat).unwrap().verdict);
        assert!(is_intersecting_geometric(&cat).unwrap().verdict);
    }

    #[test]
    fn concatenation_distance_bound() {
        let f4 = make_field(2, 2).unwrap();
        let outer = rs_evaluation_code(&f4, 2, 4).unwrap(); // [4,2,3]_4
        let inner = rs_arc_code(2, 2).unwrap(); // [3,2,2]_2
        let cat = concatenate(&inner, &outer).unwrap();
        assert_eq!((cat.n(), cat.k()), (12, 4));
        assert!(cat.min_distance().unwrap() >= 6);
    }

    #[test]
    fn concatenation_rejects_field_mismatch() {
        let f4 = make_field(2, 2).unwrap();
        let outer = rs_evaluation_code(&f4, 2, 3).unwrap();
        let inner = rs_arc_code(2, 3).unwrap(); // GF(3) inner vs GF(4) outer
        assert!(concatenate(&inner, &outer).is_err());
        // inner dimension must match the extension degree
        let inner3 = rs_arc_code(2, 2).unwrap(); // k = 2 over GF(2), but GF(4) = GF(2)^2: ok
        assert!(concatenate(&inner3, &outer).is_ok());
        let f16 = make_field(2, 4).unwrap();
        let outer16 = rs_evaluation_code(&f16, 2, 3).unwrap();
        assert!(concatenate(&inner3, &outer16).is_err()); // degree 4 != k = 2
    }

    #[test]
    fn prime_power_resolution() {
        assert_eq!(field_of_order(8).unwrap().q(), 8);
        assert_eq!(field_of_order(9).unwrap().q(), 9);
        assert!(field_of_order(6).is_err());
        assert!(field_of_order(12).is_err());
    }
}
