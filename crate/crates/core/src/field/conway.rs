//! Conway polynomial computation.
//!
//! The Conway polynomial `C(p, n)` is the least monic primitive polynomial of
//! degree `n` over `GF(p)` (in the standard word ordering) whose root is
//! norm-compatible with the roots of `C(p, m)` for every proper divisor
//! `m | n`. Norm compatibility is what makes the subfield embeddings
//! `alpha_small -> alpha_big^((p^n-1)/(p^m-1))` consistent, which the code
//! concatenation machinery relies on.
//!
//! Polynomials are coefficient vectors over `GF(p)`, ascending degree.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

fn cache() -> &'static Mutex<HashMap<(u32, u32), Vec<u32>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Vec<u32>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Trial-division primality, adequate for the desk-scale cap.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors of `n`, without multiplicity.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest primitive root modulo the prime `p`.
pub fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    'outer: for g in 2..p {
        for &f in &factors {
            if pow_mod(g, (p - 1) / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

// --- dense polynomial arithmetic over GF(p) ---

fn trim(v: &mut Vec<u32>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    // m is monic
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let idx = shift + i;
                let sub = (lead as u64 * mc as u64) % p as u64;
                r[idx] = ((r[idx] as u64 + p as u64 * p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
    }
    if r.is_empty() {
        r.push(0);
    }
    trim(&mut r);
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    poly_rem(&prod, m, p)
}

/// `x^e mod m` over GF(p).
fn poly_pow_x_mod(mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut base = if m.len() > 2 {
        vec![0, 1]
    } else {
        // degree-1 modulus: x is already reducible to a constant
        poly_rem(&[0, 1], m, p)
    };
    let mut acc = vec![1u32];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &base, m, p);
        }
        base = poly_mul_mod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

fn poly_eq(a: &[u32], b: &[u32]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    a == b
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        // make b monic before taking the remainder
        let lead = *b.last().unwrap();
        if lead != 1 {
            let inv = pow_mod(lead as u64, p as u64 - 2, p as u64) as u32;
            for c in b.iter_mut() {
                *c = ((*c as u64 * inv as u64) % p as u64) as u32;
            }
        }
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_sub_x(a: &[u32], p: u32) -> Vec<u32> {
    // a(x) - x
    let mut r = a.to_vec();
    if r.len() < 2 {
        r.resize(2, 0);
    }
    r[1] = (r[1] + p - 1) % p;
    trim(&mut r);
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = (f.len() - 1) as u32;
    if f[0] == 0 {
        return n == 1;
    }
    // x^{p^n} == x mod f, and gcd(x^{p^{n/l}} - x, f) = 1 for prime l | n
    let xpn = poly_pow_x_mod((p as u64).pow(n), f, p);
    if !poly_eq(&xpn, &[0, 1]) {
        return false;
    }
    for l in prime_factors(n as u64) {
        let e = (p as u64).pow(n / l as u32);
        let g = poly_pow_x_mod(e, f, p);
        let gcd = poly_gcd(&poly_sub_x(&g, p), f, p);
        if gcd.len() != 1 {
            return false;
        }
    }
    true
}

/// `x` generates the multiplicative group of `GF(p)[x]/(f)`.
fn is_primitive(f: &[u32], p: u32) -> bool {
    let n = (f.len() - 1) as u32;
    let q1 = (p as u64).pow(n) - 1;
    for r in prime_factors(q1) {
        let y = poly_pow_x_mod(q1 / r, f, p);
        if poly_eq(&y, &[1]) {
            return false;
        }
    }
    true
}

/// Evaluate `g(x^e) mod f` and test for zero.
fn norm_compatible(g: &[u32], e: u64, f: &[u32], p: u32) -> bool {
    let xe = poly_pow_x_mod(e, f, p);
    let mut acc = vec![0u32];
    // Horner over the big field
    for &c in g.iter().rev() {
        acc = poly_mul_mod(&acc, &xe, f, p);
        if c != 0 {
            if acc.is_empty() {
                acc = vec![c];
            } else {
                acc[0] = (acc[0] + c) % p;
            }
        }
        trim(&mut acc);
    }
    acc.len() == 1 && acc[0] == 0
}

/// The Conway polynomial `C(p, n)`, ascending coefficients, monic of degree `n`.
///
/// Candidates are tried in the standard order: writing
/// `f = x^n + a_{n-1} x^{n-1} + ... + a_0` with `a_i = (-1)^{n-i} c_i`, the
/// words `(c_{n-1}, ..., c_0)` are enumerated lexicographically.
pub fn conway_polynomial(p: u32, n: u32) -> Vec<u32> {
    if let Some(f) = cache().lock().unwrap().get(&(p, n)) {
        return f.clone();
    }
    let f = compute_conway(p, n);
    cache().lock().unwrap().insert((p, n), f.clone());
    f
}

fn compute_conway(p: u32, n: u32) -> Vec<u32> {
    if n == 1 {
        let r = smallest_primitive_root(p as u64) as u32;
        // x - r
        return vec![(p - r % p) % p, 1];
    }
    let divisors: Vec<u32> = (1..n).filter(|m| n % m == 0).collect();
    let sub: Vec<(Vec<u32>, u64)> = divisors
        .iter()
        .map(|&m| {
            let g = conway_polynomial(p, m);
            let e = ((p as u64).pow(n) - 1) / ((p as u64).pow(m) - 1);
            (g, e)
        })
        .collect();

    let mut word = vec![0u32; n as usize]; // (c_{n-1}, ..., c_0)
    loop {
        // assemble f from the word
        let mut f = vec![0u32; n as usize + 1];
        f[n as usize] = 1;
        for (idx, &c) in word.iter().enumerate() {
            let i = n as usize - 1 - idx; // coefficient index
            let sign_neg = (n as usize - i) % 2 == 1;
            f[i] = if sign_neg { (p - c % p) % p } else { c % p };
        }
        if f[0] != 0
            && is_irreducible(&f, p)
            && is_primitive(&f, p)
            && sub.iter().all(|(g, e)| norm_compatible(g, *e, &f, p))
        {
            return f;
        }
        // next word
        let mut i = word.len();
        loop {
            if i == 0 {
                unreachable!("primitive polynomials of every degree exist");
            }
            i -= 1;
            word[i] += 1;
            if word[i] < p {
                break;
            }
            word[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_conway_polynomials() {
        assert_eq!(conway_polynomial(2, 1), vec![1, 1]); // x + 1
        assert_eq!(conway_polynomial(2, 2), vec![1, 1, 1]); // x^2 + x + 1
        assert_eq!(conway_polynomial(2, 3), vec![1, 1, 0, 1]); // x^3 + x + 1
        assert_eq!(conway_polynomial(2, 4), vec![1, 1, 0, 0, 1]); // x^4 + x + 1
        assert_eq!(conway_polynomial(3, 1), vec![1, 1]); // x - 2 = x + 1
        assert_eq!(conway_polynomial(3, 2), vec![2, 2, 1]); // x^2 + 2x + 2
        assert_eq!(conway_polynomial(5, 2), vec![2, 4, 1]); // x^2 + 4x + 2
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(smallest_primitive_root(2), 1);
        assert_eq!(smallest_primitive_root(3), 2);
        assert_eq!(smallest_primitive_root(5), 2);
        assert_eq!(smallest_primitive_root(7), 3);
        assert_eq!(smallest_primitive_root(11), 2);
        assert_eq!(smallest_primitive_root(13), 2);
        assert_eq!(smallest_primitive_root(17), 3);
    }

    #[test]
    fn conway_is_irreducible_and_primitive() {
        for (p, n) in [(2, 5), (2, 6), (3, 3), (3, 4), (5, 3), (7, 2)] {
            let f = conway_polynomial(p, n);
            assert_eq!(f.len() as u32, n + 1);
            assert!(is_irreducible(&f, p), "C({p},{n}) reducible");
            assert!(is_primitive(&f, p), "C({p},{n}) imprimitive");
        }
    }
}
