//! Multiplicative order of x in ℤ[x]/(m, P) and the divisibility of Δ(P_n)
//! it predicts.
//!
//! For every root α_j of P there is a ring map ℤ[x]/(m, P) → R/mR sending x
//! to α_j, so x^M ≡ 1 in the quotient forces α_j^M ≡ 1 mod mR for all j at
//! once. That makes M = ord(x) a sound surrogate for the root orders: if
//! M | n then every α_j^n - α_k^n lies in mR and m^{d(d-1)} divides Δ(P_n).
//!
//! The order is assembled prime by prime: modulo each p | m the quotient
//! splits over the irreducible factors of P mod p (P must be squarefree mod
//! p), the factor orders come from the factored group order of F_{p^deg}^×,
//! and prime powers p^e lift the order by stepping through the kernel of
//! reduction, a p-group of order p^{(e-1)d}.

use crate::error::{Error, Result};
use crate::polycore::modp::{factor_squarefree_mod_p, order_of_x_mod, reduce_mod_p};
use crate::polycore::numth::{factorize_u64, mulmod};
use crate::polycore::IntPoly;
use crate::sequences::delta::delta_seq;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// The p-part of the order computation for one prime power p^e dividing m.
#[derive(Debug, Clone)]
pub struct PrimeComponent {
    pub p: u64,
    pub e: u32,
    /// ord(x) in F_p[x]/(g) for each irreducible factor g of P mod p.
    pub factor_orders: Vec<BigUint>,
    /// ord(x) in (ℤ[x]/(p^e, P))^×: lcm of the factor orders times a power
    /// of p picked up by the lift.
    pub order: BigUint,
}

#[derive(Debug, Clone)]
pub struct QuotientOrders {
    pub m: u64,
    pub components: Vec<PrimeComponent>,
    /// ord(x) in (ℤ[x]/(m, P))^×, the lcm over the components.
    pub order: BigUint,
}

pub fn order_in_quotient(poly: &IntPoly, m: u64) -> Result<QuotientOrders> {
    poly.require_monic("order_in_quotient")?;
    if poly.deg() < 1 {
        return Err(Error::Domain("order_in_quotient needs degree >= 1".into()));
    }
    if m < 2 {
        return Err(Error::Domain("order_in_quotient needs m >= 2".into()));
    }
    let a0 = poly.coeff(0);
    let mut components = Vec::new();
    for (p, e) in factorize_u64(m) {
        if (&a0 % BigInt::from(p)).is_zero() {
            return Err(Error::Domain(format!(
                "x is not a unit modulo ({m}, P): {p} divides the constant coefficient"
            )));
        }
        let fp = reduce_mod_p(poly, p);
        if !fp.is_squarefree(p) {
            return Err(Error::Domain(format!("P is not squarefree modulo {p}")));
        }
        let mut factor_orders = Vec::new();
        let mut base = BigUint::one();
        for g in factor_squarefree_mod_p(&fp, p) {
            let o = order_of_x_mod(&g, p).ok_or_else(|| {
                Error::Resource(format!(
                    "cannot certify the order modulo {p}: the group order of F_{p}^{} resists factoring",
                    g.deg()
                ))
            })?;
            base = base.lcm(&o);
            factor_orders.push(o);
        }
        let order = lift_order(poly, p, e, &base)?;
        components.push(PrimeComponent { p, e, factor_orders, order });
    }
    let order = components.iter().fold(BigUint::one(), |acc, c| acc.lcm(&c.order));
    Ok(QuotientOrders { m, components, order })
}

/// ord(x) modulo (p^e, P) given base = ord(x) modulo (p, P): the order is
/// base·p^s where p^s is the order of x^base in the kernel of reduction.
fn lift_order(poly: &IntPoly, p: u64, e: u32, base: &BigUint) -> Result<BigUint> {
    let md = p.pow(e);
    let mdb = BigInt::from(md);
    let pc: Vec<u64> = poly
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&mdb).to_u64().expect("reduced below a u64 modulus"))
        .collect();
    let x = vec![0u64, 1 % md];
    let mut order = base.clone();
    let mut y = polypow_mod(&x, base, &pc, md);
    let smax = (e as u64 - 1) * poly.deg() as u64;
    let mut s = 0u64;
    while !is_one(&y) {
        s += 1;
        if s > smax {
            return Err(Error::Integrity(format!(
                "order lift modulo {p}^{e} escaped its p-group bound"
            )));
        }
        y = polypow_mod(&y, &BigUint::from(p), &pc, md);
        order *= p;
    }
    Ok(order)
}

// ---- u64 polynomial arithmetic modulo (md, monic P) ----

fn is_one(v: &[u64]) -> bool {
    v.len() == 1 && v[0] == 1
}

fn addmod(a: u64, b: u64, md: u64) -> u64 {
    ((a as u128 + b as u128) % md as u128) as u64
}

fn submod(a: u64, b: u64, md: u64) -> u64 {
    ((a as u128 + md as u128 - b as u128) % md as u128) as u64
}

fn reduce_by_monic(v: &mut Vec<u64>, pc: &[u64], md: u64) {
    let d = pc.len() - 1;
    while v.len() > d {
        let c = v.pop().unwrap();
        if c != 0 {
            let shift = v.len() - d;
            for i in 0..d {
                v[shift + i] = submod(v[shift + i], mulmod(c, pc[i], md), md);
            }
        }
    }
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn polymul_mod(a: &[u64], b: &[u64], pc: &[u64], md: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                out[i + j] = addmod(out[i + j], mulmod(ai, bj, md), md);
            }
        }
    }
    reduce_by_monic(&mut out, pc, md);
    out
}

fn polypow_mod(base: &[u64], e: &BigUint, pc: &[u64], md: u64) -> Vec<u64> {
    let mut acc = vec![1 % md];
    if acc[0] == 0 {
        acc.clear();
    }
    let mut b = base.to_vec();
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = polymul_mod(&acc, &b, pc, md);
        }
        if i + 1 < bits {
            b = polymul_mod(&b, &b, pc, md);
        }
    }
    acc
}

/// The divisibility of Δ(P_n) predicted by M = ord(x) mod (m, P): at n = M
/// (and any multiple), m^{d(d-1)} divides Δ(P_n).
#[derive(Debug, Clone)]
pub struct DiscDivisibilityPrediction {
    pub m: u64,
    pub order: BigUint,
    /// The index actually tested, the order itself.
    pub n: u64,
    /// d(d-1).
    pub exponent: u64,
    pub delta_n: BigInt,
    pub holds: bool,
}

pub fn predicted_disc_divisibility(poly: &IntPoly, m: u64) -> Result<DiscDivisibilityPrediction> {
    let q = order_in_quotient(poly, m)?;
    let n = q
        .order
        .to_u64()
        .filter(|&n| n <= 1 << 20)
        .ok_or_else(|| Error::Resource(format!("the order {} is too large to test", q.order)))?;
    let d = poly.deg() as u64;
    let exponent = d * (d - 1);
    let seq = delta_seq(poly, n)?;
    let delta_n = seq.delta(n).clone();
    let modulus = BigInt::from(m).pow(exponent as u32);
    let holds = (&delta_n % modulus).is_zero();
    Ok(DiscDivisibilityPrediction { m, order: q.order, n, exponent, delta_n, holds })
}
