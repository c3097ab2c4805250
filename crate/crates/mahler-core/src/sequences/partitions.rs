//! The partition factorization of U(n).
//!
//! U(n) = Res(P_𝒟₊, P_𝒟₋) is a product over all pairs of root tuples. Group
//! the 2^l tuple slots by which ones carry the same root index: each set
//! partition 𝒫 of the slots into at most d blocks collects the factors whose
//! index pattern is exactly 𝒫 (equal inside a block, distinct across
//! blocks). Every U(n, 𝒫) is a rational integer because the grouping is
//! stable under permuting the roots, and ∏_𝒫 U(n, 𝒫) = U(n) recovers the
//! resultant from its pieces.
//!
//! The factors are evaluated in certified ball arithmetic and rounded only
//! when the enclosure pins a unique integer (half-width below 1/4); the
//! rounded values must then multiply back to the exact U(n).

use crate::error::{Error, Result};
use crate::polycore::numth::divisor_table;
use crate::polycore::IntPoly;
use crate::roots_mahler::ball::{CBall, Dy};
use crate::roots_mahler::roots::find_roots;
use crate::sequences::u::u_of_n;
use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A set partition of {1, ..., k} in restricted-growth form: `rgs[i]` is the
/// block of slot i, blocks numbered by first appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    rgs: Vec<usize>,
    nblocks: usize,
}

impl Partition {
    fn from_rgs(rgs: Vec<usize>) -> Partition {
        let nblocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        Partition { rgs, nblocks }
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.nblocks
    }

    /// Blocks as sorted 0-based slot lists, ordered by first appearance.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.nblocks];
        for (slot, &b) in self.rgs.iter().enumerate() {
            out[b].push(slot);
        }
        out
    }
}

impl fmt::Display for Partition {
    /// 1-based, like "{1,3,4}{2}".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            write!(f, "{{")?;
            for (i, slot) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", slot + 1)?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// All set partitions of {1, ..., k} in lexicographic restricted-growth
/// order, so the all-in-one-block partition comes first.
pub fn set_partitions(k: usize) -> Vec<Partition> {
    assert!(k >= 1 && k <= 12, "set_partitions is for small k");
    let mut out = Vec::new();
    let mut rgs = vec![0usize; k];
    fn rec(rgs: &mut Vec<usize>, pos: usize, maxval: usize, k: usize, out: &mut Vec<Partition>) {
        if pos == k {
            out.push(Partition::from_rgs(rgs.clone()));
            return;
        }
        for v in 0..=maxval + 1 {
            rgs[pos] = v;
            rec(rgs, pos + 1, maxval.max(v), k, out);
        }
    }
    rec(&mut rgs, 1, 0, k, &mut out);
    out
}

#[derive(Debug, Clone)]
pub struct PartitionFactor {
    pub partition: Partition,
    pub value: BigInt,
}

#[derive(Debug, Clone)]
pub struct PartitionFactorization {
    pub n: u64,
    /// U(n, 𝒫) for every partition with at most d blocks, in partition
    /// order.
    pub factors: Vec<PartitionFactor>,
    /// The exact U(n) the factors multiply to.
    pub u: BigInt,
    /// Partitions with more blocks than roots: empty products, value 1.
    pub skipped: usize,
}

pub fn u_partition_factors(p: &IntPoly, n: u64, precision: f64) -> Result<PartitionFactorization> {
    p.require_monic("u_partition_factors")?;
    if p.deg() < 1 {
        return Err(Error::Domain("U(n, partition) needs degree >= 1".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::Domain("U(n, partition) needs squarefree P".into()));
    }
    if !(precision > 0.0) || !precision.is_finite() {
        return Err(Error::Domain("precision must be positive and finite".into()));
    }
    let u = u_of_n(p, n)?;
    let table = divisor_table(n);
    if table.num_primes > 2 {
        return Err(Error::Resource(format!(
            "partition factorization handles at most two prime factors; {n} has {}",
            table.num_primes
        )));
    }
    let mut exps: Vec<u64> = table.d_plus.clone();
    exps.extend_from_slice(&table.d_minus);
    let r = table.d_plus.len();
    let parts = set_partitions(exps.len());
    let d = p.deg();

    let mut bits = (-precision.log2()).ceil().clamp(32.0, 1000.0) as i32;
    for _ in 0..6 {
        if let Some(factors) = factors_at(p, &exps, r, &parts, d, bits)? {
            let mut prod = BigInt::one();
            for f in &factors {
                prod *= &f.value;
            }
            if prod != u {
                return Err(Error::Integrity(format!(
                    "partition factors of U({n}) multiply to {prod}, not {u}"
                )));
            }
            let skipped = parts.len() - factors.len();
            return Ok(PartitionFactorization { n, factors, u, skipped });
        }
        bits = (bits * 2).min(1000);
    }
    Err(Error::Resource(format!(
        "partition factors of U({n}) not pinned to integers at 1000 bits"
    )))
}

/// One precision attempt: None means an enclosure stayed too wide (or roots
/// would not isolate) and the caller should escalate.
fn factors_at(
    p: &IntPoly,
    exps: &[u64],
    r: usize,
    parts: &[Partition],
    d: usize,
    bits: i32,
) -> Result<Option<Vec<PartitionFactor>>> {
    let rs = find_roots(p, 2f64.powi(-bits))?;
    if rs.roots.iter().any(|root| root.cluster) {
        return Ok(None);
    }
    debug_assert_eq!(rs.roots.len(), d);
    let prec = bits as u64 + 64;
    let balls: Vec<CBall> = rs
        .roots
        .iter()
        .map(|root| CBall { re: root.re.clone(), im: root.im.clone(), rad: root.radius.clone() })
        .collect();
    let mut powers: BTreeMap<u64, Vec<CBall>> = BTreeMap::new();
    for &m in exps {
        powers
            .entry(m)
            .or_insert_with(|| balls.iter().map(|b| b.powi(m, prec)).collect());
    }
    let quarter = Dy::new(BigInt::one(), -2);
    let one = || CBall::exact(Dy::one(), Dy::zero());

    let mut out = Vec::new();
    for part in parts {
        let b = part.block_count();
        if b > d {
            continue;
        }
        let mut acc = one();
        let rgs = part.rgs();
        let mut used = vec![false; d];
        let mut assign = Vec::with_capacity(b);
        let mut apply = |assign: &[usize]| {
            let mut plus = one();
            let mut minus = one();
            for (s, &m) in exps.iter().enumerate() {
                let root = &powers[&m][assign[rgs[s]]];
                if s < r {
                    plus = plus.mul(root, prec);
                } else {
                    minus = minus.mul(root, prec);
                }
            }
            acc = acc.mul(&plus.sub(&minus), prec);
        };
        for_each_injective(d, b, &mut used, &mut assign, &mut apply);

        if acc.rad.cmp(&quarter) != Ordering::Less {
            return Ok(None);
        }
        if acc.im.abs().cmp(&acc.rad) == Ordering::Greater {
            return Err(Error::Integrity(format!(
                "U(n, {part}) has a nonreal certified enclosure"
            )));
        }
        let value = acc.re.nearest_int();
        if acc.re.sub(&Dy::from_bigint(&value)).abs().cmp(&acc.rad) == Ordering::Greater {
            return Err(Error::Integrity(format!(
                "the certified enclosure of U(n, {part}) contains no integer"
            )));
        }
        out.push(PartitionFactor { partition: part.clone(), value });
    }
    Ok(Some(out))
}

/// Visit every injective assignment of `b` blocks to `d` roots.
fn for_each_injective(
    d: usize,
    b: usize,
    used: &mut [bool],
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if cur.len() == b {
        f(cur);
        return;
    }
    for j in 0..d {
        if !used[j] {
            used[j] = true;
            cur.push(j);
            for_each_injective(d, b, used, cur, f);
            cur.pop();
            used[j] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn values(rep: &PartitionFactorization) -> Vec<i64> {
        rep.factors.iter().map(|f| i64::try_from(&f.value).unwrap()).collect()
    }

    #[test]
    fn partition_enumeration_is_lexicographic() {
        let two = set_partitions(2);
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].rgs(), &[0, 0]);
        assert_eq!(two[1].rgs(), &[0, 1]);
        let four = set_partitions(4);
        assert_eq!(four.len(), 15);
        assert_eq!(four[0].rgs(), &[0, 0, 0, 0]);
        assert_eq!(four[14].rgs(), &[0, 1, 2, 3]);
        assert_eq!(four[14].block_count(), 4);
        assert_eq!(set_partitions(3).len(), 5);
    }

    #[test]
    fn partition_display_is_one_based() {
        let four = set_partitions(4);
        let p = four.iter().find(|p| p.rgs() == [0, 1, 0, 0]).unwrap();
        assert_eq!(p.to_string(), "{1,3,4}{2}");
        assert_eq!(four[0].to_string(), "{1,2,3,4}");
        assert_eq!(p.blocks(), vec![vec![0, 2, 3], vec![1]]);
    }

    #[test]
    fn golden_quadratic_prime_power_factors() {
        let p = poly(&[1, -3, 1]);
        let want: &[(u64, [i64; 2])] = &[
            (2, [-1, -16]),
            (3, [-5, -45]),
            (4, [-5, -320]),
            (5, [-45, -320]),
        ];
        for &(n, vals) in want {
            let rep = u_partition_factors(&p, n, 1e-10).unwrap();
            assert_eq!(values(&rep), vals, "n = {n}");
            assert_eq!(rep.skipped, 0);
            let prod: BigInt = vals.iter().map(|&v| BigInt::from(v)).product();
            assert_eq!(rep.u, prod);
        }
    }

    #[test]
    fn golden_quadratic_two_prime_factors() {
        // Four slots, exponents (6, 1 | 3, 2); only 8 of the 15 partitions
        // fit into two roots, and the diagonal {1,3,4}{2} factor vanishes
        // because α₁α₂ = 1, making U(6) = 0.
        let p = poly(&[1, -3, 1]);
        let rep = u_partition_factors(&p, 6, 1e-10).unwrap();
        assert_eq!(rep.factors.len(), 8);
        assert_eq!(rep.skipped, 7);
        assert_eq!(
            values(&rep),
            [-5, -320, -2205, -103680, 0, -45, -320, -15125]
        );
        assert!(rep.u.is_zero());
    }

    #[test]
    fn cubic_prime_factors() {
        let rep = u_partition_factors(&poly(&[-1, -1, 0, 1]), 3, 1e-10).unwrap();
        assert_eq!(values(&rep), [1, 27]);
    }

    #[test]
    fn quartic_loses_no_partition() {
        let p = poly(&[1, 1, -1, 1, 1]);
        let rep = u_partition_factors(&p, 6, 1e-10).unwrap();
        assert_eq!(rep.factors.len(), 15);
        assert_eq!(rep.skipped, 0);
        assert_eq!(rep.u, u_of_n(&p, 6).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let err = u_partition_factors(&poly(&[1, 2, 1]), 2, 1e-10).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        // 30 = 2·3·5 has three prime factors.
        let err = u_partition_factors(&poly(&[1, -3, 1]), 30, 1e-10).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }
}
