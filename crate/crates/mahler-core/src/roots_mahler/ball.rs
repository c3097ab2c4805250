//! Arbitrary-precision dyadic arithmetic with directed rounding.
//!
//! A [`Dy`] is m·2^e with an integer mantissa; add/sub/mul are exact, and the
//! rounding, division and square-root entry points say which way they err.
//! This is the substrate for certified root radii and measure enclosures:
//! upper bounds always round up, lower bounds always round down, and the
//! comparisons are exact, so every inequality verdict downstream is a real
//! theorem about the integers involved.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Dyadic rational m·2^e, normalized so the mantissa is odd (or zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dy {
    m: BigInt,
    e: i64,
}

impl Dy {
    pub fn new(m: BigInt, e: i64) -> Dy {
        let mut d = Dy { m, e };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.m.is_zero() {
            self.e = 0;
            return;
        }
        let tz = self.m.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.m >>= tz;
            self.e += tz as i64;
        }
    }

    pub fn zero() -> Dy {
        Dy { m: BigInt::zero(), e: 0 }
    }

    pub fn one() -> Dy {
        Dy { m: BigInt::one(), e: 0 }
    }

    pub fn from_i64(v: i64) -> Dy {
        Dy::new(BigInt::from(v), 0)
    }

    pub fn from_bigint(v: &BigInt) -> Dy {
        Dy::new(v.clone(), 0)
    }

    /// 2^k.
    pub fn pow2(k: i64) -> Dy {
        Dy { m: BigInt::one(), e: k }
    }

    /// Exact conversion from a finite f64.
    pub fn from_f64(v: f64) -> Option<Dy> {
        if !v.is_finite() {
            return None;
        }
        if v == 0.0 {
            return Some(Dy::zero());
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, e) = if exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp - 1075)
        };
        Some(Dy::new(BigInt::from(sign) * BigInt::from(mant), e))
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.m.is_positive()
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.m
    }

    pub fn exponent(&self) -> i64 {
        self.e
    }

    pub fn neg(&self) -> Dy {
        Dy { m: -&self.m, e: self.e }
    }

    pub fn abs(&self) -> Dy {
        Dy { m: self.m.abs(), e: self.e }
    }

    /// Position of the leading bit: value magnitude lies in [2^{pos-1}, 2^pos).
    fn bit_pos(&self) -> i64 {
        debug_assert!(!self.m.is_zero());
        self.m.bits() as i64 + self.e
    }

    pub fn add(&self, other: &Dy) -> Dy {
        if self.m.is_zero() {
            return other.clone();
        }
        if other.m.is_zero() {
            return self.clone();
        }
        let e = self.e.min(other.e);
        let a = &self.m << (self.e - e) as u64;
        let b = &other.m << (other.e - e) as u64;
        Dy::new(a + b, e)
    }

    pub fn sub(&self, other: &Dy) -> Dy {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dy) -> Dy {
        Dy::new(&self.m * &other.m, self.e + other.e)
    }

    pub fn mul_pow2(&self, k: i64) -> Dy {
        if self.m.is_zero() {
            return Dy::zero();
        }
        Dy { m: self.m.clone(), e: self.e + k }
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Dy {
        Dy::new(&self.m * k, self.e)
    }

    /// Keep at most `prec` mantissa bits, rounding toward -∞.
    pub fn round_down(&self, prec: u64) -> Dy {
        let bits = self.m.bits();
        if bits <= prec {
            return self.clone();
        }
        let drop = (bits - prec) as i64;
        // BigInt shr is arithmetic (floor), which is exactly round toward -∞.
        Dy::new(&self.m >> drop as u64, self.e + drop)
    }

    /// Keep at most `prec` mantissa bits, rounding toward +∞.
    pub fn round_up(&self, prec: u64) -> Dy {
        let bits = self.m.bits();
        if bits <= prec {
            return self.clone();
        }
        let drop = (bits - prec) as i64;
        let q = -(&(-&self.m) >> drop as u64);
        Dy::new(q, self.e + drop)
    }

    /// Keep at most `prec` mantissa bits; returns (rounded, error_bound) with
    /// |self - rounded| <= error_bound. The rounding itself is floor; only
    /// the bound matters to callers.
    pub fn round_err(&self, prec: u64) -> (Dy, Dy) {
        let bits = self.m.bits();
        if bits <= prec {
            return (self.clone(), Dy::zero());
        }
        let drop = (bits - prec) as i64;
        let q = &self.m >> drop as u64;
        (Dy::new(q, self.e + drop), Dy::pow2(self.e + drop))
    }

    pub fn cmp(&self, other: &Dy) -> Ordering {
        let sa = sign_i8(&self.m);
        let sb = sign_i8(&other.m);
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (pa, pb) = (self.bit_pos(), other.bit_pos());
        if pa != pb {
            let mag = pa.cmp(&pb);
            return if sa > 0 { mag } else { mag.reverse() };
        }
        // Same sign and leading position: align and compare exactly. The
        // shift is bounded by the mantissa width difference.
        let e = self.e.min(other.e);
        let a = &self.m << (self.e - e) as u64;
        let b = &other.m << (other.e - e) as u64;
        a.cmp(&b)
    }

    pub fn min(&self, other: &Dy) -> Dy {
        if self.cmp(other) == Ordering::Greater {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn max(&self, other: &Dy) -> Dy {
        if self.cmp(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn cmp_bigint(&self, other: &BigInt) -> Ordering {
        self.cmp(&Dy::from_bigint(other))
    }

    /// self / other to `prec` bits, rounded toward +∞. other must be nonzero.
    pub fn div_up(&self, other: &Dy, prec: u64) -> Dy {
        div_directed(self, other, prec, true)
    }

    /// self / other to `prec` bits, rounded toward -∞.
    pub fn div_down(&self, other: &Dy, prec: u64) -> Dy {
        div_directed(self, other, prec, false)
    }

    /// self / other to about `prec` bits, direction unspecified; for plain
    /// Newton iteration, where rigor comes from the final certificate.
    pub fn div_approx(&self, other: &Dy, prec: u64) -> Dy {
        div_directed(self, other, prec, false)
    }

    /// Square root to `prec` bits, rounded toward -∞; exact when the value is
    /// an exact square of a dyadic. Negative input panics.
    pub fn sqrt_down(&self, prec: u64) -> Dy {
        assert!(!self.m.is_negative(), "sqrt of a negative dyadic");
        if self.m.is_zero() {
            return Dy::zero();
        }
        let v = self.round_down(2 * prec + 16);
        let (t, half_e) = sqrt_scaled(&v, prec);
        Dy::new(t.sqrt().into(), half_e)
    }

    /// Square root to `prec` bits, rounded toward +∞.
    pub fn sqrt_up(&self, prec: u64) -> Dy {
        assert!(!self.m.is_negative(), "sqrt of a negative dyadic");
        if self.m.is_zero() {
            return Dy::zero();
        }
        let v = self.round_up(2 * prec + 16);
        let (t, half_e) = sqrt_scaled(&v, prec);
        let r = t.sqrt();
        let r = if &r * &r == t { r } else { r + 1u32 };
        Dy::new(r.into(), half_e)
    }

    /// self^k rounded toward +∞ (self must be >= 0).
    pub fn pow_up(&self, k: u64, prec: u64) -> Dy {
        debug_assert!(!self.is_negative());
        let mut acc = Dy::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).round_up(prec);
            }
            base = base.mul(&base).round_up(prec);
            k >>= 1;
        }
        acc
    }

    /// self^k rounded toward -∞ (self must be >= 0; result clamped >= 0).
    pub fn pow_down(&self, k: u64, prec: u64) -> Dy {
        debug_assert!(!self.is_negative());
        let mut acc = Dy::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).round_down(prec);
            }
            base = base.mul(&base).round_down(prec);
            k >>= 1;
        }
        acc.max(&Dy::zero())
    }

    /// Nearest f64 (approximate; overflows saturate to ±inf).
    pub fn to_f64(&self) -> f64 {
        if self.m.is_zero() {
            return 0.0;
        }
        let bits = self.m.bits();
        let (top, shift) = if bits > 64 {
            let drop = bits - 64;
            ((&self.m >> drop).to_f64().unwrap_or(0.0), drop as i64)
        } else {
            (self.m.to_f64().unwrap_or(0.0), 0)
        };
        let e = self.e + shift;
        if e > 1_090 {
            return if self.m.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        if e < -1_140 {
            return 0.0;
        }
        top * 2f64.powi(e as i32)
    }

    /// Nearest integer (ties away from the floor side are fine for callers,
    /// which always pair this with an explicit |self - k| <= bound check).
    pub fn nearest_int(&self) -> BigInt {
        if self.e >= 0 {
            return &self.m << self.e as u64;
        }
        let shift = (-self.e) as u64;
        // Arithmetic shift floors, so adding half first rounds to nearest.
        (&self.m + (BigInt::one() << (shift - 1))) >> shift
    }

    /// Decimal string with `digits` places after the point, rounded to
    /// nearest. Deterministic; used for JSON output.
    pub fn to_decimal(&self, digits: u32) -> String {
        let neg = self.m.is_negative();
        let scale = BigInt::from(10u32).pow(digits);
        // |self| · 10^digits, rounded to nearest integer.
        let num = self.m.abs() * &scale;
        let scaled = if self.e >= 0 {
            num << self.e as u64
        } else {
            let den = BigInt::one() << (-self.e) as u64;
            (num + (&den >> 1u32)) / den
        };
        let s = scaled.to_string();
        let (ip, fp) = if s.len() > digits as usize {
            let split = s.len() - digits as usize;
            (s[..split].to_string(), s[split..].to_string())
        } else {
            ("0".to_string(), format!("{:0>width$}", s, width = digits as usize))
        };
        let sign = if neg && (ip != "0" || fp.bytes().any(|b| b != b'0')) { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{ip}")
        } else {
            format!("{sign}{ip}.{fp}")
        }
    }
}

fn sign_i8(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// Shared scaling for sqrt: returns (t, h) with v = t·2^{2h} exactly
/// scaled so t has at least 2·prec bits. The caller must have rounded `v`
/// to O(prec) bits in the right direction; huge mantissas would otherwise
/// make the integer square root quadratically slow.
fn sqrt_scaled(v: &Dy, prec: u64) -> (num_bigint::BigUint, i64) {
    let m = v.m.magnitude().clone();
    let bits = m.bits();
    let want = 2 * prec + 2;
    let mut s = bits.max(want) - bits + 8;
    // Make the final exponent even.
    if (v.e - s as i64) % 2 != 0 {
        s += 1;
    }
    let t = m << s;
    (t, (v.e - s as i64) / 2)
}

fn div_directed(a: &Dy, b: &Dy, prec: u64, up: bool) -> Dy {
    assert!(!b.m.is_zero(), "dyadic division by zero");
    if a.m.is_zero() {
        return Dy::zero();
    }
    // Round oversized inputs toward the requested direction first; otherwise
    // the integer division below is quadratic in their full bit lengths.
    // With the denominator normalized positive, the quotient moves with the
    // numerator and against the denominator (sign of the numerator decides
    // which way).
    let (a, b) = if b.is_negative() { (a.neg(), b.neg()) } else { (a.clone(), b.clone()) };
    let cap = 2 * prec + 32;
    let a = if up { a.round_up(cap) } else { a.round_down(cap) };
    let b = if up == a.is_negative() { b.round_up(cap) } else { b.round_down(cap) };
    // Scale the numerator so the quotient has ~prec significant bits.
    let shift = (b.m.bits() + prec + 2).saturating_sub(a.m.bits());
    let num = &a.m << shift;
    let (q, r) = num_integer::Integer::div_rem(&num, &b.m);
    let exact = r.is_zero();
    // div_rem truncates toward zero; fix the direction.
    let positive = (a.m.is_negative()) == (b.m.is_negative());
    let q = if exact {
        q
    } else if up && positive {
        q + 1
    } else if !up && !positive {
        q - 1
    } else {
        q
    };
    Dy::new(q, a.e - b.e - shift as i64)
}

/// Complex ball: exact dyadic center with one radius, used to evaluate a
/// polynomial at an exact point while accounting for every rounding.
#[derive(Debug, Clone)]
pub struct CBall {
    pub re: Dy,
    pub im: Dy,
    pub rad: Dy,
}

impl CBall {
    pub fn exact(re: Dy, im: Dy) -> CBall {
        CBall { re, im, rad: Dy::zero() }
    }

    /// Upper bound on |center|.
    pub fn center_mod_up(&self, prec: u64) -> Dy {
        let n2 = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        n2.sqrt_up(prec)
    }

    /// Lower bound on |center|.
    pub fn center_mod_down(&self, prec: u64) -> Dy {
        let n2 = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        n2.sqrt_down(prec)
    }

    /// Upper bound on |z| over the ball.
    pub fn mod_up(&self, prec: u64) -> Dy {
        self.center_mod_up(prec).add(&self.rad).round_up(prec)
    }

    /// Lower bound on |z| over the ball (clamped at 0).
    pub fn mod_down(&self, prec: u64) -> Dy {
        self.center_mod_down(prec).sub(&self.rad).max(&Dy::zero())
    }

    /// Ball product: the result contains z·w for all z in self, w in rhs.
    ///
    /// The center magnitudes entering the radius use the tight sqrt-based
    /// bound, not |re| + |im|; long sequential products (thousands of
    /// factors) multiply the per-step slack, so a √2 overestimate per factor
    /// would swamp the radius while the sqrt bound costs only ~2^-30 each.
    pub fn mul(&self, rhs: &CBall, prec: u64) -> CBall {
        let re = self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        let (re_r, e1) = re.round_err(prec);
        let (im_r, e2) = im.round_err(prec);
        let m1 = self.center_mod_up(32);
        let m2 = rhs.center_mod_up(32);
        let rad = m1
            .mul(&rhs.rad)
            .add(&m2.mul(&self.rad))
            .add(&self.rad.mul(&rhs.rad))
            .add(&e1)
            .add(&e2)
            .round_up(32);
        CBall { re: re_r, im: im_r, rad }
    }

    /// Ball difference; centers subtract exactly, radii add.
    pub fn sub(&self, rhs: &CBall) -> CBall {
        CBall {
            re: self.re.sub(&rhs.re),
            im: self.im.sub(&rhs.im),
            rad: self.rad.add(&rhs.rad).round_up(32),
        }
    }

    /// Ball sum; centers add exactly, radii add.
    pub fn add(&self, rhs: &CBall) -> CBall {
        CBall {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
            rad: self.rad.add(&rhs.rad).round_up(32),
        }
    }

    /// Ball quotient, or None when the divisor ball contains 0 (the caller
    /// escalates precision and retries). For z ∈ B(c1,r1), w ∈ B(c2,r2) with
    /// 0 outside the divisor ball,
    /// |z/w - c1/c2| ≤ (r1 + |c1/c2|·r2) / min|w|,
    /// and the center quotient is bracketed by directed divisions.
    pub fn div(&self, rhs: &CBall, prec: u64) -> Option<CBall> {
        let wmin = rhs.mod_down(prec);
        if !wmin.is_positive() {
            return None;
        }
        let n2 = rhs.re.mul(&rhs.re).add(&rhs.im.mul(&rhs.im));
        let re_num = self.re.mul(&rhs.re).add(&self.im.mul(&rhs.im));
        let im_num = self.im.mul(&rhs.re).sub(&self.re.mul(&rhs.im));
        let re_lo = re_num.div_down(&n2, prec);
        let re_err = re_num.div_up(&n2, prec).sub(&re_lo);
        let im_lo = im_num.div_down(&n2, prec);
        let im_err = im_num.div_up(&n2, prec).sub(&im_lo);
        let ratio = self.center_mod_up(32).div_up(&rhs.center_mod_down(prec), 32);
        let rad = self
            .rad
            .add(&ratio.mul(&rhs.rad))
            .div_up(&wmin, 32)
            .add(&re_err)
            .add(&im_err)
            .round_up(32);
        Some(CBall { re: re_lo, im: im_lo, rad })
    }

    /// Ball power by squaring.
    pub fn powi(&self, k: u64, prec: u64) -> CBall {
        let mut acc = CBall::exact(Dy::one(), Dy::zero());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, prec);
            }
            if k > 1 {
                base = base.mul(&base, prec);
            }
            k >>= 1;
        }
        acc
    }
}

/// Horner evaluation of P (integer coefficients) at the exact complex dyadic
/// point (zr, zi), with the working precision `prec`; the returned ball
/// contains the true value P(z).
pub fn eval_ball(coeffs: &[BigInt], zr: &Dy, zi: &Dy, prec: u64) -> CBall {
    // |z| upper bound via the cheap |re| + |im| over-estimate.
    let zmod = zr.abs().add(&zi.abs()).round_up(32);
    let mut acc = CBall::exact(Dy::zero(), Dy::zero());
    for c in coeffs.iter().rev() {
        // acc <- acc·z + c, exactly, then round the center.
        let re = acc.re.mul(zr).sub(&acc.im.mul(zi)).add(&Dy::from_bigint(c));
        let im = acc.re.mul(zi).add(&acc.im.mul(zr));
        let (re_r, e1) = re.round_err(prec);
        let (im_r, e2) = im.round_err(prec);
        let rad = acc
            .rad
            .mul(&zmod)
            .add(&e1)
            .add(&e2)
            .round_up(32);
        acc = CBall { re: re_r, im: im_r, rad };
    }
    acc
}

/// Plain complex Horner at rounding precision `prec`, no error tracking; for
/// Newton steps, where rigor comes from the final certificate.
pub fn eval_point(coeffs: &[BigInt], zr: &Dy, zi: &Dy, prec: u64) -> (Dy, Dy) {
    let mut re = Dy::zero();
    let mut im = Dy::zero();
    for c in coeffs.iter().rev() {
        let nre = re.mul(zr).sub(&im.mul(zi)).add(&Dy::from_bigint(c));
        let nim = re.mul(zi).add(&im.mul(zr));
        re = nre.round_err(prec).0;
        im = nim.round_err(prec).0;
    }
    (re, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_ops() {
        let a = Dy::from_i64(3).mul_pow2(-1); // 1.5
        let b = Dy::from_i64(5).mul_pow2(-2); // 1.25
        assert_eq!(a.add(&b), Dy::from_i64(11).mul_pow2(-2));
        assert_eq!(a.mul(&b), Dy::from_i64(15).mul_pow2(-3));
        assert_eq!(a.sub(&a), Dy::zero());
    }

    #[test]
    fn comparisons() {
        let vals = [-3.5f64, -1.0, -0.125, 0.0, 0.25, 1.0, 2.75, 1000.0];
        for &x in &vals {
            for &y in &vals {
                let dx = Dy::from_f64(x).unwrap();
                let dy = Dy::from_f64(y).unwrap();
                assert_eq!(dx.cmp(&dy), x.partial_cmp(&y).unwrap(), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn directed_rounding_brackets() {
        let v = Dy::new(BigInt::from(0xdead_beef_1234_5678u64 as i64), -40);
        for prec in [8u64, 16, 24] {
            let lo = v.round_down(prec);
            let hi = v.round_up(prec);
            assert!(lo.cmp(&v) != Ordering::Greater);
            assert!(hi.cmp(&v) != Ordering::Less);
            assert!(lo.mantissa().bits() <= prec);
        }
    }

    #[test]
    fn division_brackets_the_quotient() {
        let a = Dy::from_i64(1);
        let b = Dy::from_i64(3);
        let lo = a.div_down(&b, 64);
        let hi = a.div_up(&b, 64);
        assert_eq!(lo.cmp(&hi), Ordering::Less);
        // lo < 1/3 < hi: check via 3·lo < 1 < 3·hi.
        assert_eq!(lo.mul(&b).cmp(&a), Ordering::Less);
        assert_eq!(hi.mul(&b).cmp(&a), Ordering::Greater);
        // Signs: -1/3.
        let nlo = a.neg().div_down(&b, 64);
        let nhi = a.neg().div_up(&b, 64);
        assert_eq!(nlo.mul(&b).cmp(&a.neg()), Ordering::Less);
        assert_eq!(nhi.mul(&b).cmp(&a.neg()), Ordering::Greater);
    }

    #[test]
    fn sqrt_brackets() {
        let two = Dy::from_i64(2);
        let lo = two.sqrt_down(80);
        let hi = two.sqrt_up(80);
        assert!(lo.mul(&lo).cmp(&two) == Ordering::Less);
        assert!(hi.mul(&hi).cmp(&two) == Ordering::Greater);
        let gap = hi.sub(&lo);
        assert!(gap.cmp(&Dy::pow2(-70)) == Ordering::Less);
        // Perfect squares are exact.
        let nine = Dy::from_i64(9);
        assert_eq!(nine.sqrt_down(30), Dy::from_i64(3));
        assert_eq!(nine.sqrt_up(30), Dy::from_i64(3));
    }

    #[test]
    fn f64_roundtrip() {
        for &x in &[0.0f64, 1.0, -1.5, 0.1, 1e300, -3.25e-20] {
            let d = Dy::from_f64(x).unwrap();
            assert_eq!(d.to_f64(), x);
        }
        assert!(Dy::from_f64(f64::NAN).is_none());
    }

    #[test]
    fn decimal_strings() {
        assert_eq!(Dy::from_i64(3).mul_pow2(-1).to_decimal(4), "1.5000");
        assert_eq!(Dy::from_i64(-7).to_decimal(0), "-7");
        assert_eq!(Dy::from_i64(1).mul_pow2(-3).to_decimal(3), "0.125");
        assert_eq!(Dy::zero().to_decimal(2), "0.00");
    }

    #[test]
    fn ball_eval_contains_truth() {
        // P = x² - 3x + 1 at z = 1/2 + i/4 has an exactly computable value.
        let coeffs = [BigInt::from(1), BigInt::from(-3), BigInt::from(1)];
        let zr = Dy::from_f64(0.5).unwrap();
        let zi = Dy::from_f64(0.25).unwrap();
        let ball = eval_ball(&coeffs, &zr, &zi, 64);
        // Exact: z² = 3/16 + i/4; z² - 3z + 1 = 3/16 - 3/2 + 1 + i(1/4 - 3/4)
        //       = -5/16 - i/2.
        let want_re = Dy::from_f64(-0.3125).unwrap();
        let want_im = Dy::from_f64(-0.5).unwrap();
        let dr = ball.re.sub(&want_re).abs();
        let di = ball.im.sub(&want_im).abs();
        assert!(dr.add(&di).cmp(&ball.rad) != Ordering::Greater);
        let (pr, pi) = eval_point(&coeffs, &zr, &zi, 64);
        assert_eq!(pr, want_re);
        assert_eq!(pi, want_im);
    }

    #[test]
    fn nearest_int_rounds() {
        let cases: [(f64, i64); 8] = [
            (0.0, 0),
            (2.0, 2),
            (1.25, 1),
            (1.75, 2),
            (-1.25, -1),
            (-1.75, -2),
            (1000.4, 1000),
            (-3.0, -3),
        ];
        for (x, want) in cases {
            assert_eq!(Dy::from_f64(x).unwrap().nearest_int(), BigInt::from(want), "{x}");
        }
        // Halves land on one of the two nearest integers.
        for (x, ok) in [(0.5, [0i64, 1]), (-0.5, [-1, 0]), (2.5, [2, 3])] {
            let k = Dy::from_f64(x).unwrap().nearest_int();
            assert!(ok.iter().any(|&v| k == BigInt::from(v)), "{x} -> {k}");
        }
    }

    #[test]
    fn ball_mul_contains_product() {
        // (1 + 2i)·(3 - i) = 5 + 5i, with radii inflating the enclosure.
        let a = CBall {
            re: Dy::from_i64(1),
            im: Dy::from_i64(2),
            rad: Dy::pow2(-10),
        };
        let b = CBall {
            re: Dy::from_i64(3),
            im: Dy::from_i64(-1),
            rad: Dy::pow2(-12),
        };
        let p = a.mul(&b, 64);
        assert_eq!(p.re, Dy::from_i64(5));
        assert_eq!(p.im, Dy::from_i64(5));
        // rad >= |a|·rb + |b|·ra = √5/4096 + √10/1024 > 0.0036
        assert!(p.rad.cmp(&Dy::from_f64(0.0036).unwrap()) == Ordering::Greater);
        assert!(p.rad.cmp(&Dy::from_f64(0.005).unwrap()) == Ordering::Less);
    }

    #[test]
    fn ball_pow_matches_repeated_mul() {
        let z = CBall {
            re: Dy::from_f64(0.75).unwrap(),
            im: Dy::from_f64(-0.5).unwrap(),
            rad: Dy::pow2(-20),
        };
        let direct = z.mul(&z, 96).mul(&z, 96).mul(&z, 96).mul(&z, 96);
        let pow = z.powi(5, 96);
        // Same point is enclosed by both; centers agree to rounding.
        let dre = direct.re.sub(&pow.re).abs();
        let dim = direct.im.sub(&pow.im).abs();
        let tol = direct.rad.add(&pow.rad);
        assert!(dre.cmp(&tol) != Ordering::Greater);
        assert!(dim.cmp(&tol) != Ordering::Greater);
        assert_eq!(z.powi(0, 64).re, Dy::one());
        assert!(z.powi(0, 64).rad.is_zero());
    }

    #[test]
    fn ball_sub_adds_radii() {
        let a = CBall { re: Dy::from_i64(7), im: Dy::zero(), rad: Dy::pow2(-8) };
        let b = CBall { re: Dy::from_i64(3), im: Dy::one(), rad: Dy::pow2(-8) };
        let d = a.sub(&b);
        assert_eq!(d.re, Dy::from_i64(4));
        assert_eq!(d.im, Dy::from_i64(-1));
        assert_eq!(d.rad, Dy::pow2(-7));
    }

    #[test]
    fn ball_div_encloses_quotient() {
        // (3 + 4i) / 2i = 2 - 1.5i, exactly representable.
        let a = CBall::exact(Dy::from_i64(3), Dy::from_i64(4));
        let b = CBall::exact(Dy::zero(), Dy::from_i64(2));
        let q = a.div(&b, 96).unwrap();
        let dre = q.re.sub(&Dy::from_i64(2)).abs();
        let dim = q.im.sub(&Dy::from_f64(-1.5).unwrap()).abs();
        assert!(dre.cmp(&q.rad) != Ordering::Greater);
        assert!(dim.cmp(&q.rad) != Ordering::Greater);
        // A divisor ball containing 0 is rejected.
        let wide = CBall { re: Dy::pow2(-40), im: Dy::zero(), rad: Dy::one() };
        assert!(a.div(&wide, 96).is_none());
    }

    #[test]
    fn pow_brackets() {
        let x = Dy::from_i64(3).div_down(&Dy::from_i64(2), 64); // ~1.5
        let lo = x.pow_down(10, 64);
        let hi = x.pow_up(10, 64);
        let exact = Dy::from_i64(3).pow_up(10, 256).div_up(&Dy::from_i64(1 << 10), 256);
        assert!(lo.cmp(&exact) != Ordering::Greater);
        assert!(hi.cmp(&exact) != Ordering::Less || hi.cmp(&lo) != Ordering::Less);
    }
}
