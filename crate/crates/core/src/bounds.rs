//! Lower and upper bounds on `i(k, q)`, the shortest length of an
//! intersecting code of dimension `k` over `GF(q)`, plus the asymptotic
//! machinery: entropy/linear-programming ratios, probabilistic existence
//! thresholds, and the constructive rates from algebraic-geometry towers.
//!
//! Integer-valued bounds use exact rational / big-integer arithmetic so that
//! ceilings never wobble; only the analytic ratios live in `f64`.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// `max_t ceil(k + (q^t - 1)/(q^t - q^{t-1}) * (k - t))` over `1 <= t <= k`.
///
/// The `t = 1` term is `2k - 1`, so the result is always at least that.
pub fn plotkin_like(k: usize, q: u64) -> u64 {
    let mut best = 0u64;
    let q = BigInt::from(q);
    for t in 1..=k as u32 {
        let qt = q.pow(t);
        let qt1 = q.pow(t - 1);
        let num = (&qt - 1) * BigInt::from((k - t as usize) as u64);
        let den = &qt - &qt1;
        let term = BigRational::new(num, den) + BigRational::from_integer(BigInt::from(k as u64));
        let val = term.ceil().to_integer().to_u64().expect("desk-scale bound");
        best = best.max(val);
    }
    best
}

/// The q-ary entropy function on `0 < x <= 1 - 1/q`.
pub fn entropy_q(q: u64, x: f64) -> Result<f64> {
    let qf = q as f64;
    if !(x > 0.0 && x <= 1.0 - 1.0 / qf) {
        return Err(Error::Domain(format!("entropy needs 0 < x <= 1 - 1/q, got {x}")));
    }
    let log_q = |v: f64| v.ln() / qf.ln();
    let tail = if x < 1.0 { -(1.0 - x) * log_q(1.0 - x) } else { 0.0 };
    Ok(-x * log_q(x / (qf - 1.0)) + tail)
}

/// The linear-programming upper-bounding function
/// `M_q(x) = H_q((q - 1 - (q-2)x - 2 sqrt((q-1)x(1-x))) / q)` on `(0, (q-1)/q)`.
pub fn mrrw_q(q: u64, x: f64) -> Result<f64> {
    let qf = q as f64;
    if !(x > 0.0 && x < (qf - 1.0) / qf) {
        return Err(Error::Domain(format!("M_q needs 0 < x < (q-1)/q, got {x}")));
    }
    let a = (qf - 1.0 - (qf - 2.0) * x - 2.0 * ((qf - 1.0) * x * (1.0 - x)).sqrt()) / qf;
    entropy_q(q, a)
}

/// Fixed point of `M_q` against `g(x) = x`: bisection to `1e-9`, returning
/// `(x*, 1/x*)`. The reciprocal is the asymptotic length ratio the
/// linear-programming bound forces on intersecting codes.
pub fn mrrw_crossing(q: u64) -> Result<(f64, f64)> {
    let qf = q as f64;
    let mut lo = 1e-6;
    let mut hi = 1.0 - 1.0 / qf - 1e-6;
    let f = |x: f64| -> Result<f64> { Ok(mrrw_q(q, x)? - x) };
    let (flo, fhi) = (f(lo)?, f(hi)?);
    if flo.signum() == fhi.signum() {
        return Err(Error::Domain(format!(
            "no sign change for q = {q}; use the Plotkin ratio instead"
        )));
    }
    // keep the invariant f(lo) > 0 > f(hi)
    if flo < 0.0 {
        std::mem::swap(&mut lo, &mut hi);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if (mrrw_q(q, 0.5 * (lo + hi))? - 0.5 * (lo + hi)).abs() < 1e-9 {
            break;
        }
    }
    let x = 0.5 * (lo + hi);
    Ok((x, 1.0 / x))
}

/// The Plotkin asymptotic ratio `2 + 1/(q-1)`.
pub fn plotkin_ratio(q: u64) -> f64 {
    2.0 + 1.0 / (q as f64 - 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundComparison {
    MrrwBetter,
    PlotkinBetter,
}

/// Which asymptotic bound is stronger for this `q`: compares
/// `M_q((q-1)/(2q-1))` against `(q-1)/(2q-1)` with a `1e-9` guard.
/// The answer flips exactly between `q = 17` and `q = 19`.
pub fn mrrw_vs_plotkin(q: u64) -> Result<BoundComparison> {
    let x = (q as f64 - 1.0) / (2.0 * q as f64 - 1.0);
    let m = mrrw_q(q, x)?;
    if m < x - 1e-9 {
        Ok(BoundComparison::MrrwBetter)
    } else {
        Ok(BoundComparison::PlotkinBetter)
    }
}

/// The best implemented asymptotic lower-bound ratio for `i(k, q)/k`.
pub fn best_lower_ratio(q: u64) -> Result<f64> {
    let plotkin = plotkin_ratio(q);
    Ok(match mrrw_vs_plotkin(q)? {
        BoundComparison::MrrwBetter => mrrw_crossing(q)?.1.max(plotkin),
        BoundComparison::PlotkinBetter => plotkin,
    })
}

/// Gaussian binomial `[n choose k]_q`: the number of `k`-dimensional
/// subspaces of an `n`-dimensional space over `GF(q)`.
pub fn gaussian_coefficient(n: u64, k: u64, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow(n as u32) - q.pow(i as u32);
        den *= q.pow(k as u32) - q.pow(i as u32);
    }
    &num / &den
}

/// Probabilistic existence thresholds for intersecting `[n, k]_q` codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProbThreshold {
    /// `ceil(2k / log_q(q^2 / (2q-1)))`.
    pub closed_form: u64,
    /// Smallest `n` with `(2q-1)^n (q^k - 1)(q^{k-1} - 1) <= (q^n - 1)(q^{n-1} - 1)`,
    /// the exact counting inequality behind the closed form. Never larger.
    pub exact: u64,
}

/// The probabilistic asymptotic ratio `2 / log_q(q^2 / (2q - 1))`.
pub fn prob_ratio(q: u64) -> f64 {
    let qf = q as f64;
    2.0 / ((qf * qf / (2.0 * qf - 1.0)).ln() / qf.ln())
}

pub fn prob_threshold(k: u64, q: u64) -> ProbThreshold {
    let closed_form = (2.0 * k as f64 / ((q as f64).powi(2) / (2.0 * q as f64 - 1.0)).log(q as f64))
        .ceil() as u64;
    let qb = BigUint::from(q);
    let w = BigUint::from(2 * q - 1);
    let kfac = (qb.pow(k as u32) - 1u32) * (qb.pow(k as u32 - 1) - 1u32);
    let mut n = k.max(2);
    loop {
        let lhs = w.pow(n as u32) * &kfac;
        let rhs = (qb.pow(n as u32) - 1u32) * (qb.pow(n as u32 - 1) - 1u32);
        if lhs <= rhs {
            break;
        }
        n += 1;
        assert!(n < 64 * k + 64, "threshold search runaway");
    }
    ProbThreshold { closed_form, exact: n }
}

/// Singleton defect `1 - (k + d)/(n + 1)`, exact; zero iff MDS.
pub fn singleton_defect(n: usize, k: usize, d: usize) -> Ratio<i64> {
    Ratio::from_integer(1) - Ratio::new((k + d) as i64, (n + 1) as i64)
}

/// How a constructive asymptotic ratio was obtained.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgRatio {
    pub q: u64,
    pub ratio: f64,
    pub recipe: String,
}

/// Ihara lower bound used for towers over `GF(q^e)` built relative to the
/// base field `GF(q)`: the square tower gives `q^{e/2} - 1` for even `e`,
/// and the odd-extension tower gives
/// `2 / (1/(q^m - 1) + 1/(q^{m+1} - 1))` for `e = 2m + 1`.
pub fn tower_ihara_lower(q: u64, e: u32) -> f64 {
    if e % 2 == 0 {
        (q as f64).powi(e as i32 / 2) - 1.0
    } else {
        let m = (e - 1) / 2;
        let a = (q as f64).powi(m as i32) - 1.0;
        let b = (q as f64).powi(m as i32 + 1) - 1.0;
        2.0 / (1.0 / a + 1.0 / b)
    }
}

/// Inner codes used by the concatenated constructions for the exceptional
/// fields (those too small for a direct tower argument): `(q, n, k)`, each a
/// shortest intersecting code of its dimension.
pub const AG_EXCEPTIONAL_INNER: &[(u64, usize, usize)] = &[
    (2, 15, 6),
    (3, 10, 5),
    (4, 5, 3),
    (5, 5, 3),
    (7, 7, 4),
    (8, 3, 2),
    (9, 3, 2),
    (16, 3, 2),
    (27, 3, 2),
];

/// Decompose a prime power; errors otherwise.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0).ok_or(Error::NotPrime(q))?;
    let mut h = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        h += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrime(q));
    }
    Ok((p, h))
}

/// Constructive asymptotic upper bound on `i(k, q)/k` from (possibly
/// concatenated) algebraic-geometry code families.
///
/// * squares `q >= 25`: `2 + 2/(sqrt(q) - 2)`;
/// * non-prime odd prime powers `q >= 32`: `4 / (2 - 1/(p^m - 1) - 1/(p^{m+1} - 1))`;
/// * primes `q >= 11`: `3 + 3/(q - 2)`;
/// * the nine exceptional small fields: concatenate the listed inner code
///   with a rate `1/2 - 1/(2A)` outer family over `GF(q^{k_inner})`.
pub fn ag_ratio(q: u64) -> Result<AgRatio> {
    let (p, h) = prime_power(q)?;
    let sqrt = (q as f64).sqrt();
    let is_square = h % 2 == 0;
    if is_square && q >= 25 {
        return Ok(AgRatio {
            q,
            ratio: 2.0 + 2.0 / (sqrt - 2.0),
            recipe: "square tower, rate 1/2 - 1/(2(sqrt(q)-1))".into(),
        });
    }
    if h > 1 && h % 2 == 1 && q >= 32 {
        let m = (h - 1) / 2;
        let a = (p as f64).powi(m as i32) - 1.0;
        let b = (p as f64).powi(m as i32 + 1) - 1.0;
        return Ok(AgRatio {
            q,
            ratio: 4.0 / (2.0 - 1.0 / a - 1.0 / b),
            recipe: "odd-power tower, direct".into(),
        });
    }
    if h == 1 && q >= 11 {
        return Ok(AgRatio {
            q,
            ratio: 3.0 + 3.0 / (q as f64 - 2.0),
            recipe: "prime field: [3,2,2] inner, square tower over GF(q^2)".into(),
        });
    }
    let &(_, n_in, k_in) = AG_EXCEPTIONAL_INNER
        .iter()
        .find(|&&(qq, _, _)| qq == q)
        .ok_or(Error::Domain(format!("no constructive recipe for q = {q}")))?;
    let a = tower_ihara_lower(q, k_in as u32);
    let r_outer = 0.5 - 1.0 / (2.0 * a);
    Ok(AgRatio {
        q,
        ratio: (n_in as f64 / k_in as f64) / r_outer,
        recipe: format!(
            "[{n_in},{k_in}] inner, tower over GF({q}^{k_in}) with A >= {a:.4}"
        ),
    })
}

/// One contributing bound with its provenance tag.
#[derive(Debug, Clone, Serialize)]
pub struct BoundTerm {
    pub name: String,
    pub value: u64,
}

/// Everything the implemented bounds say about a single `(k, q)` cell.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub q: u64,
    pub lower: u64,
    pub lower_terms: Vec<BoundTerm>,
    pub upper: u64,
    pub upper_terms: Vec<BoundTerm>,
    pub plotkin_ratio: f64,
    pub mrrw_ratio: Option<f64>,
    pub prob_ratio: f64,
    pub ag_ratio: Option<f64>,
}

/// Assemble the per-cell report. Witness-based upper bounds can be injected
/// by the caller (length + provenance); the formula bounds are always
/// included. Inconsistent bounds (lower > upper) signal an implementation
/// bug and abort.
pub fn bound_report(k: usize, q: u64, witnesses: &[(u64, String)]) -> Result<BoundReport> {
    let plotkin = plotkin_like(k, q);
    let lower_terms = vec![
        BoundTerm { name: "two-k-minus-one".into(), value: 2 * k as u64 - 1 },
        BoundTerm { name: "plotkin-like".into(), value: plotkin },
    ];
    let lower = lower_terms.iter().map(|t| t.value).max().unwrap();

    let mut upper_terms = vec![BoundTerm {
        name: "sparse-tetrahedron".into(),
        value: (k * (k + 1) / 2) as u64,
    }];
    let prob = prob_threshold(k as u64, q);
    upper_terms.push(BoundTerm { name: "probabilistic-exact".into(), value: prob.exact });
    if 2 * k - 1 <= q as usize + 1 {
        upper_terms.push(BoundTerm { name: "arc".into(), value: 2 * k as u64 - 1 });
    }
    for (len, name) in witnesses {
        upper_terms.push(BoundTerm { name: name.clone(), value: *len });
    }
    let upper = upper_terms.iter().map(|t| t.value).min().unwrap();

    assert!(
        lower <= upper,
        "bound inconsistency at (k={k}, q={q}): lower {lower} > upper {upper}"
    );

    Ok(BoundReport {
        k,
        q,
        lower,
        lower_terms,
        upper,
        upper_terms,
        plotkin_ratio: plotkin_ratio(q),
        mrrw_ratio: mrrw_crossing(q).ok().map(|(_, r)| r),
        prob_ratio: prob_ratio(q),
        ag_ratio: ag_ratio(q).ok().map(|a| a.ratio),
    })
}

/// The standard row set of the asymptotic-length table.
pub const TABLE_Q: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17];

/// Asymptotic length ratios per field order (the crossing of the
/// linear-programming bound with `R = delta`), for the standard small `q`.
pub fn asymptotic_length_table() -> Vec<(u64, f64)> {
    TABLE_Q
        .iter()
        .map(|&q| (q, mrrw_crossing(q).expect("crossing exists for small q").1))
        .collect()
}
