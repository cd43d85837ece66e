//! Dense univariate polynomials over GF(p), p < 2^32, coefficients low-to-high.

use rand::Rng;

use super::arith::{inv_mod, prime_divisors};

pub type Poly = Vec<u64>;

pub fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub fn add(f: &[u64], g: &[u64], p: u64) -> Poly {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| (f.get(i).copied().unwrap_or(0) + g.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub fn sub(f: &[u64], g: &[u64], p: u64) -> Poly {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| (f.get(i).copied().unwrap_or(0) + p - g.get(i).copied().unwrap_or(0) % p) % p)
        .collect();
    trim(out)
}

pub fn scale(f: &[u64], c: u64, p: u64) -> Poly {
    trim(f.iter().map(|&a| a * c % p).collect())
}

pub fn mul(f: &[u64], g: &[u64], p: u64) -> Poly {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder; `g` must be nonzero.
pub fn divrem(f: &[u64], g: &[u64], p: u64) -> (Poly, Poly) {
    let g = trim(g.to_vec());
    let dg = degree(&g).expect("division by zero polynomial");
    let mut r = trim(f.to_vec());
    let lead_inv = inv_mod(g[dg], p).expect("leading coefficient invertible");
    if r.len() <= dg {
        return (vec![], r);
    }
    let mut q = vec![0u64; r.len() - dg];
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = r[dr] * lead_inv % p;
        q[dr - dg] = c;
        for (j, &b) in g.iter().enumerate() {
            let idx = dr - dg + j;
            r[idx] = (r[idx] + p - c * b % p) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(f: &[u64], g: &[u64], p: u64) -> Poly {
    divrem(f, g, p).1
}

pub fn monic(f: &[u64], p: u64) -> Poly {
    let f = trim(f.to_vec());
    match f.last() {
        None => f,
        Some(&lead) => {
            let inv = inv_mod(lead, p).expect("unit leading coefficient");
            scale(&f, inv, p)
        }
    }
}

pub fn gcd(f: &[u64], g: &[u64], p: u64) -> Poly {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn mulmod(f: &[u64], g: &[u64], m: &[u64], p: u64) -> Poly {
    rem(&mul(f, g, p), m, p)
}

/// f^e mod m.
pub fn powmod(f: &[u64], mut e: u128, m: &[u64], p: u64) -> Poly {
    let mut base = rem(f, m, p);
    let mut acc: Poly = rem(&[1], m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, m, p);
        }
        base = mulmod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

pub fn derivative(f: &[u64], p: u64) -> Poly {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p)
}

/// x^(p^k) mod m by repeated p-th powering.
fn x_pow_pk(k: u32, m: &[u64], p: u64) -> Poly {
    let mut cur = rem(&[0, 1], m, p);
    for _ in 0..k {
        cur = powmod(&cur, p as u128, m, p);
    }
    cur
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = monic(f, p);
    let Some(n) = degree(&f) else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    if x_pow_pk(n as u32, &f, p) != rem(&x, &f, p) {
        return false;
    }
    for q in prime_divisors(n as u64) {
        let h = sub(&x_pow_pk((n as u64 / q) as u32, &f, p), &x, p);
        if degree(&gcd(&h, &f, p)).unwrap_or(0) != 0 || h.is_empty() {
            return false;
        }
    }
    true
}

/// Distinct roots in GF(p) of a nonzero polynomial, sorted. Cantor-Zassenhaus splitting
/// with a seeded generator.
pub fn roots<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<u64> {
    let f = monic(f, p);
    if degree(&f).unwrap_or(0) == 0 {
        return vec![];
    }
    // Keep only the product of distinct linear factors: gcd(f, x^p - x).
    let xp = powmod(&[0, 1], p as u128, &f, p);
    let g = gcd(&f, &sub(&xp, &[0, 1], p), p);
    let mut out = Vec::new();
    split_linear(g, p, rng, &mut out);
    out.sort_unstable();
    out
}

fn split_linear<R: Rng>(g: Poly, p: u64, rng: &mut R, out: &mut Vec<u64>) {
    let d = degree(&g).unwrap_or(0);
    if d == 0 {
        return;
    }
    if d == 1 {
        // g = x + c, monic.
        out.push((p - g[0]) % p);
        return;
    }
    if p == 2 {
        // Only candidates 0 and 1.
        for r in 0..2 {
            if eval(&g, r, p) == 0 {
                out.push(r);
            }
        }
        return;
    }
    loop {
        let a = rng.gen_range(0..p);
        let h = powmod(&[a, 1], ((p - 1) / 2) as u128, &g, p);
        let h = sub(&h, &[1], p);
        let s = gcd(&h, &g, p);
        let ds = degree(&s).unwrap_or(0);
        if ds > 0 && ds < d {
            let (q, _) = divrem(&g, &s, p);
            split_linear(s, p, rng, out);
            split_linear(monic(&q, p), p, rng, out);
            return;
        }
    }
}

/// Encode a monic polynomial of degree n from its low coefficients' integer code.
pub fn monic_from_code(mut code: u64, n: usize, p: u64) -> Poly {
    let mut f = vec![0u64; n + 1];
    for c in f.iter_mut().take(n) {
        *c = code % p;
        code /= p;
    }
    f[n] = 1;
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&[1, 1, 1], 2)); // x^2+x+1
        assert!(!is_irreducible(&[1, 0, 1], 2)); // (x+1)^2
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2)); // x^4+x+1
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2));
        assert!(!is_irreducible(&[2, 0, 1], 3));
        assert!(is_irreducible(&[1, 0, 1], 3));
    }

    #[test]
    fn root_finding() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        // (x-1)(x-2)(x-5) over GF(101)
        let f = mul(&mul(&[100, 1], &[99, 1], 101), &[96, 1], 101);
        assert_eq!(roots(&f, 101, &mut rng), vec![1, 2, 5]);
        assert!(roots(&[1, 0, 1], 7, &mut rng).is_empty());
    }
}
