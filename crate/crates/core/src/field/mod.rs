//! Exact arithmetic in `GF(p^h)`.
//!
//! Elements are encoded as integers in `[0, q)`: the base-`p` digits of the
//! encoding are the coefficients of the polynomial residue, least-significant
//! digit first. All file formats use this encoding. Multiplicative structure
//! is table-based (discrete log/antilog against a fixed primitive element),
//! which is O(1) and ample at desk scale.

mod conway;

pub use conway::{conway_polynomial, is_prime, prime_factors, smallest_primitive_root};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Desk-scale cap on field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// An element of `GF(q)` in canonical integer encoding.
#[derive(
    Debug, Default, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElem(pub u32);

pub const ZERO: FieldElem = FieldElem(0);
pub const ONE: FieldElem = FieldElem(1);

impl FieldElem {
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A fixed finite field `GF(p^h)`.
///
/// Immutable after construction; freely shareable across threads.
#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    h: u32,
    q: u32,
    /// Monic irreducible modulus, ascending coefficients, degree `h`.
    modulus: Vec<u32>,
    /// `exp[i] = alpha^i` for `0 <= i < q-1`.
    exp: Vec<u32>,
    /// `log[exp[i]] = i`; entry 0 is unused.
    log: Vec<u32>,
    alpha: u32,
}

fn registry() -> &'static Mutex<HashMap<(u32, u32), Arc<FieldCtx>>> {
    static REG: OnceLock<Mutex<HashMap<(u32, u32), Arc<FieldCtx>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Construct (or fetch from the registry) the field `GF(p^h)`.
///
/// The modulus is the Conway polynomial for `(p, h)`, so the primitive
/// element `alpha` and therefore every table and file encoding are
/// reproducible across runs and machines.
pub fn make_field(p: u64, h: u32) -> Result<Arc<FieldCtx>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if h == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = (p as u128).checked_pow(h).ok_or(Error::OrderTooLarge(u64::MAX))?;
    if q > MAX_ORDER as u128 {
        return Err(Error::OrderTooLarge(q.min(u64::MAX as u128) as u64));
    }
    if let Some(ctx) = registry().lock().unwrap().get(&(p as u32, h)) {
        return Ok(ctx.clone());
    }
    let ctx = Arc::new(FieldCtx::build(p as u32, h));
    registry().lock().unwrap().insert((p as u32, h), ctx.clone());
    Ok(ctx)
}

impl FieldCtx {
    fn build(p: u32, h: u32) -> FieldCtx {
        let q = (p as u64).pow(h) as u32;
        let modulus = conway_polynomial(p, h);
        let alpha = if h == 1 {
            smallest_primitive_root(p as u64) as u32
        } else {
            p // the residue class of x
        };
        let mut ctx = FieldCtx {
            p,
            h,
            q,
            modulus,
            exp: Vec::new(),
            log: vec![0; q as usize],
            alpha,
        };
        let mut a = 1u32;
        ctx.exp.reserve(q as usize - 1);
        for i in 0..q - 1 {
            ctx.exp.push(a);
            debug_assert!(ctx.log[a as usize] == 0 || a == 1);
            ctx.log[a as usize] = i;
            a = ctx.mul_poly(a, alpha);
        }
        assert_eq!(a, 1, "alpha fails to generate the multiplicative group");
        ctx
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn h(&self) -> u32 {
        self.h
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// The fixed primitive element.
    pub fn alpha(&self) -> FieldElem {
        FieldElem(self.alpha)
    }
    /// `alpha^j`.
    pub fn alpha_pow(&self, j: u64) -> FieldElem {
        FieldElem(self.exp[(j % (self.q as u64 - 1)) as usize])
    }

    /// Validate an integer encoding.
    pub fn elem(&self, value: u64) -> Result<FieldElem> {
        if value < self.q as u64 {
            Ok(FieldElem(value as u32))
        } else {
            Err(Error::InvalidElement { value, q: self.q as u64 })
        }
    }

    /// All elements in canonical order `0, 1, ..., q-1`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(FieldElem)
    }

    /// Base-`p` digits of an encoding, least significant first.
    pub fn digits(&self, x: FieldElem) -> Vec<u32> {
        let mut v = x.0;
        (0..self.h)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> FieldElem {
        let mut v = 0u32;
        for &d in digits.iter().rev() {
            v = v * self.p + d % self.p;
        }
        FieldElem(v)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        if self.h == 1 {
            return FieldElem((a.0 + b.0) % self.p);
        }
        let (mut out, mut mult) = (0u32, 1u32);
        let (mut x, mut y) = (a.0, b.0);
        for _ in 0..self.h {
            out += (x % self.p + y % self.p) % self.p * mult;
            x /= self.p;
            y /= self.p;
            mult *= self.p;
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        if self.h == 1 {
            return FieldElem((self.p - a.0) % self.p);
        }
        let (mut out, mut mult) = (0u32, 1u32);
        let mut x = a.0;
        for _ in 0..self.h {
            out += (self.p - x % self.p) % self.p * mult;
            x /= self.p;
            mult *= self.p;
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return ZERO;
        }
        let i = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
        FieldElem(self.exp[(i % (self.q as u64 - 1)) as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let i = self.log[a.0 as usize];
        Ok(FieldElem(self.exp[((self.q - 1 - i) % (self.q - 1)) as usize]))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if a.0 == 0 {
            return if e == 0 { ONE } else { ZERO };
        }
        let i = self.log[a.0 as usize] as u128 * e as u128;
        FieldElem(self.exp[(i % (self.q as u128 - 1)) as usize])
    }

    /// Discrete log with respect to `alpha`; `None` for zero.
    pub fn dlog(&self, a: FieldElem) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    /// Polynomial multiplication mod the modulus, used to bootstrap the
    /// log/exp tables (and nothing else afterwards).
    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let h = self.h as usize;
        let p = self.p as u64;
        let mut da = vec![0u64; h];
        let mut db = vec![0u64; h];
        let (mut x, mut y) = (a as u64, b as u64);
        for i in 0..h {
            da[i] = x % p;
            db[i] = y % p;
            x /= p;
            y /= p;
        }
        let mut prod = vec![0u64; 2 * h];
        for i in 0..h {
            if da[i] == 0 {
                continue;
            }
            for j in 0..h {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for i in (h..2 * h).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for (j, &mc) in self.modulus.iter().enumerate() {
                    let idx = i - h + j;
                    prod[idx] = (prod[idx] + p * p - c * mc as u64 % p) % p;
                }
            }
        }
        let mut out = 0u64;
        for i in (0..h).rev() {
            out = out * p + prod[i];
        }
        out as u32
    }
}

/// The `GF(q)`-linear identification `GF(q^k) = GF(q)^k`.
///
/// The big field is viewed as a vector space over the small one with basis
/// `{1, A, A^2, ..., A^{k-1}}` where `A` is the big field's primitive
/// element. Subfield elements embed along `alpha -> A^((q^k-1)/(q-1))`,
/// which is a field homomorphism because the Conway moduli are
/// norm-compatible.
pub struct FieldEmbedding {
    big: Arc<FieldCtx>,
    small: Arc<FieldCtx>,
    k: usize,
    /// Embedding table small -> big, indexed by small encoding.
    embed: Vec<u32>,
    /// Inverse of the digit-level transition matrix, over GF(p);
    /// row-major `(hk) x (hk)`.
    inv: Vec<u32>,
}

impl FieldEmbedding {
    pub fn new(big: &Arc<FieldCtx>, small: &Arc<FieldCtx>) -> Result<FieldEmbedding> {
        if big.p() != small.p() || big.h() % small.h() != 0 || big.h() == small.h() {
            return Err(Error::IncompatibleFields {
                big: big.q() as u64,
                small: small.q() as u64,
            });
        }
        let k = (big.h() / small.h()) as usize;
        let q = small.q() as u64;
        let qk = big.q() as u64;
        let step = (qk - 1) / (q - 1);

        let mut embed = vec![0u32; q as usize];
        embed[1] = 1;
        for j in 1..q - 1 {
            embed[small.exp[j as usize] as usize] = big.alpha_pow(j * step).0;
        }

        // Digit-level transition matrix M over GF(p): column (j*h_small + t)
        // is the digit vector of embed(alpha_small^?)... columns are images
        // of the unit digit vectors of GF(q)^k.
        let p = big.p();
        let hs = small.h() as usize;
        let hb = big.h() as usize;
        let mut m = vec![0u32; hb * hb];
        for j in 0..k {
            for t in 0..hs {
                let small_unit = small.from_digits(
                    &(0..hs).map(|i| u32::from(i == t)).collect::<Vec<_>>(),
                );
                let image = big.mul(
                    FieldElem(embed[small_unit.0 as usize]),
                    big.pow(big.alpha(), j as u64),
                );
                let digits = big.digits(image);
                let col = j * hs + t;
                for (row, &d) in digits.iter().enumerate() {
                    m[row * hb + col] = d;
                }
            }
        }
        let inv = invert_mod_p(&m, hb, p).ok_or(Error::IncompatibleFields {
            big: big.q() as u64,
            small: small.q() as u64,
        })?;

        Ok(FieldEmbedding { big: big.clone(), small: small.clone(), k, embed, inv })
    }

    pub fn degree(&self) -> usize {
        self.k
    }
    pub fn big(&self) -> &Arc<FieldCtx> {
        &self.big
    }
    pub fn small(&self) -> &Arc<FieldCtx> {
        &self.small
    }

    /// Embed a small-field element into the big field.
    pub fn embed(&self, x: FieldElem) -> Result<FieldElem> {
        self.small.elem(x.0 as u64)?;
        Ok(FieldElem(self.embed[x.0 as usize]))
    }

    /// Coordinates of `x` in the basis `{1, A, ..., A^{k-1}}`, as small-field
    /// elements. Linear over the small field; inverse of [`Self::assemble`].
    pub fn expand(&self, x: FieldElem) -> Result<Vec<FieldElem>> {
        self.big.elem(x.0 as u64)?;
        let p = self.big.p();
        let hb = self.big.h() as usize;
        let hs = self.small.h() as usize;
        let digits = self.big.digits(x);
        let mut coords = vec![0u32; hb];
        for r in 0..hb {
            let mut acc = 0u64;
            for c in 0..hb {
                acc += (self.inv[r * hb + c] * digits[c]) as u64;
            }
            coords[r] = (acc % p as u64) as u32;
        }
        Ok((0..self.k)
            .map(|j| self.small.from_digits(&coords[j * hs..(j + 1) * hs]))
            .collect())
    }

    /// Rebuild a big-field element from small-field coordinates.
    pub fn assemble(&self, coords: &[FieldElem]) -> Result<FieldElem> {
        if coords.len() != self.k {
            return Err(Error::Dimension(format!(
                "expected {} coordinates, got {}",
                self.k,
                coords.len()
            )));
        }
        let mut acc = ZERO;
        for (j, &c) in coords.iter().enumerate() {
            let term = self.big.mul(self.embed(c)?, self.big.pow(self.big.alpha(), j as u64));
            acc = self.big.add(acc, term);
        }
        Ok(acc)
    }
}

fn invert_mod_p(m: &[u32], n: usize, p: u32) -> Option<Vec<u32>> {
    let mut a: Vec<u64> = m.iter().map(|&x| x as u64).collect();
    let mut inv = vec![0u64; n * n];
    for i in 0..n {
        inv[i * n + i] = 1;
    }
    let p = p as u64;
    let inv_mod = |x: u64| -> u64 {
        // p prime
        let mut acc = 1u64;
        let mut b = x % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r * n + col] % p != 0)?;
        for j in 0..n {
            a.swap(col * n + j, pivot * n + j);
            inv.swap(col * n + j, pivot * n + j);
        }
        let pi = inv_mod(a[col * n + col]);
        for j in 0..n {
            a[col * n + j] = a[col * n + j] * pi % p;
            inv[col * n + j] = inv[col * n + j] * pi % p;
        }
        for r in 0..n {
            if r != col && a[r * n + col] % p != 0 {
                let f = a[r * n + col] % p;
                for j in 0..n {
                    a[r * n + j] = (a[r * n + j] + p * p - f * a[col * n + j] % p) % p;
                    inv[r * n + j] = (inv[r * n + j] + p * p - f * inv[col * n + j] % p) % p;
                }
            }
        }
    }
    Some(inv.into_iter().map(|x| x as u32).collect())
}
