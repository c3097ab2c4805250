//! Elementary number theory: primality, u64 factorization, Möbius, totient,
//! divisor tables with Möbius values, CRT reconstruction, and the pool of
//! word-sized primes used by the modular resultant fast path.

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Primes below 100 000, sieved once.
pub fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = 100_000usize;
        let mut composite = vec![false; n];
        let mut out = Vec::with_capacity(9_600);
        for p in 2..n {
            if !composite[p] {
                out.push(p as u64);
                let mut q = p * p;
                while q < n {
                    composite[q] = true;
                    q += p;
                }
            }
        }
        out
    })
}

// ---- Word-sized primality and factorization ----

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the 12-witness set covers all u64).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho on u64; returns a nontrivial factor of composite
/// odd n. Deterministic (fixed parameter schedule).
fn rho_u64(n: u64) -> u64 {
    debug_assert!(n > 3 && n % 2 != 0 && !is_prime_u64(n));
    for c in 1..64 {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("rho_u64 exhausted parameter schedule");
}

/// Full factorization of a u64 as sorted (prime, exponent) pairs.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n <= 1 {
        return out;
    }
    for &p in small_primes().iter().take(100) {
        if p * p > n {
            break;
        }
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            match out.iter_mut().find(|(p, _)| *p == m) {
                Some((_, e)) => *e += 1,
                None => out.push((m, 1)),
            }
        } else {
            let d = rho_u64(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    out.sort_unstable();
    out
}

pub fn moebius(n: u64) -> i8 {
    debug_assert!(n >= 1);
    let f = factorize_u64(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize_u64(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize_u64(n) {
        let base = out.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            out.extend(base.iter().map(|d| d * pe));
        }
    }
    out.sort_unstable();
    out
}

// ---- Divisor table with Möbius values ----

/// All divisors m of n with μ(n/m), the totient, and the split into
/// 𝒟₊(n) = {m | n : μ(n/m) = 1} and 𝒟₋(n) = {m | n : μ(n/m) = -1}.
#[derive(Debug, Clone)]
pub struct DivisorTable {
    pub n: u64,
    /// (m, μ(n/m)) for every divisor m of n, ascending in m.
    pub entries: Vec<(u64, i8)>,
    pub phi: u64,
    /// Divisors with μ(n/m) = +1, descending (largest first).
    pub d_plus: Vec<u64>,
    /// Divisors with μ(n/m) = -1, descending.
    pub d_minus: Vec<u64>,
    /// Number of distinct prime factors of n.
    pub num_primes: u32,
}

pub fn divisor_table(n: u64) -> DivisorTable {
    debug_assert!(n >= 1);
    let entries: Vec<(u64, i8)> = divisors(n).into_iter().map(|m| (m, moebius(n / m))).collect();
    let mut d_plus: Vec<u64> = entries.iter().filter(|&&(_, mu)| mu == 1).map(|&(m, _)| m).collect();
    let mut d_minus: Vec<u64> = entries.iter().filter(|&&(_, mu)| mu == -1).map(|&(m, _)| m).collect();
    d_plus.sort_unstable_by(|a, b| b.cmp(a));
    d_minus.sort_unstable_by(|a, b| b.cmp(a));
    DivisorTable {
        n,
        entries,
        phi: euler_phi(n),
        d_plus,
        d_minus,
        num_primes: factorize_u64(n).len() as u32,
    }
}

// ---- Arbitrary-precision primality ----

/// Below this bound the 13-witness Miller-Rabin test is a proof.
fn deterministic_mr_bound() -> &'static BigUint {
    static BOUND: OnceLock<BigUint> = OnceLock::new();
    BOUND.get_or_init(|| "3317044064679887385961981".parse().unwrap())
}

fn miller_rabin_round(n: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let n1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// Primality certification: deterministic Miller-Rabin (13 prime witnesses)
/// below 3.317e24, 64 prime-base rounds above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    for &p in small_primes().iter().take(64) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap();
    let d = &n1 >> s;
    let witnesses: usize = if n < deterministic_mr_bound() { 13 } else { 64 };
    small_primes()
        .iter()
        .take(witnesses)
        .all(|&a| miller_rabin_round(n, &d, s, &BigUint::from(a)))
}

// ---- CRT reconstruction ----

/// Combine residues (r_i mod p_i) over pairwise-coprime moduli into the
/// centered representative x with |x| <= M/2, using incremental Garner steps.
pub fn crt_centered(residues: &[u64], moduli: &[u64]) -> BigInt {
    debug_assert_eq!(residues.len(), moduli.len());
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (&r, &p) in residues.iter().zip(moduli) {
        let pb = BigInt::from(p);
        // x' = x + modulus * t with t = (r - x) / modulus (mod p)
        let xr = x.mod_floor(&pb).to_u64().unwrap();
        let minv = mod_inverse_u64(
            modulus.mod_floor(&pb).to_u64().unwrap(),
            p,
        );
        let t = mulmod((r + p - xr) % p, minv, p);
        x += &modulus * BigInt::from(t);
        modulus *= &pb;
    }
    let half = &modulus >> 1;
    if x > half {
        x -= &modulus;
    }
    x
}

fn mod_inverse_u64(a: u64, p: u64) -> u64 {
    // p prime and a != 0 mod p in every call site.
    powmod(a, p - 2, p)
}

/// Pool of distinct 62-bit primes for modular algorithms, generated downward
/// from 2^62 so runs are deterministic.
pub fn modular_primes(count: usize) -> Vec<u64> {
    static POOL: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    let pool = POOL.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = pool.lock().unwrap();
    let mut candidate = guard.last().map_or((1u64 << 62) - 1, |&p| p - 2);
    while guard.len() < count {
        if is_prime_u64(candidate) {
            guard.push(candidate);
        }
        candidate -= 2;
    }
    guard[..count].to_vec()
}

// ---- BigInt odds and ends ----

/// log2 of a positive integer, accurate to f64 precision.
pub fn log2_bigint(x: &BigInt) -> f64 {
    let mag = x.magnitude();
    debug_assert!(!mag.is_zero());
    let bits = mag.bits();
    if bits <= 53 {
        return (mag.to_u64().unwrap() as f64).log2();
    }
    let top = (mag >> (bits - 53)).to_u64().unwrap();
    (top as f64).log2() + (bits - 53) as f64
}

/// Exact integer square root witness: Some(s) iff x = s² with s >= 0.
pub fn perfect_square(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let s = x.sqrt();
    if &(&s * &s) == x {
        Some(s)
    } else {
        None
    }
}

/// Floor of the n-th root of a nonnegative integer.
pub fn nth_root_floor(x: &BigUint, n: u32) -> BigUint {
    x.nth_root(n)
}

/// Sign of a BigInt as -1 / 0 / +1.
pub fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
