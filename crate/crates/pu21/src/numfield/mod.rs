//! Exact arithmetic over K0 = Q(√2,√3,√5) and its complexification K = K0(i).
//!
//! Elements of K0 are stored on the Q-basis {√2^a √3^b √5^c : a,b,c ∈ {0,1}},
//! indexed by the bitmask a | b<<1 | c<<2.  The representation is unique, so
//! equality and the zero test are coefficientwise.  Sign determination refines
//! rational brackets of √2, √3, √5 by bisection until the enclosure of the
//! value excludes zero.

mod decimal;
mod parse;

pub use decimal::{approx, decimal_string, format_fixed, round_half_even, tol, within};
pub use parse::ParseError;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

pub type Rat = BigRational;

/// Radicand of each basis monomial, in bitmask order.
pub const RADICANDS: [u32; 8] = [1, 2, 3, 6, 5, 10, 15, 30];

/// Basis indices sorted by radicand (1, 2, 3, 5, 6, 10, 15, 30).
pub const DISPLAY_ORDER: [usize; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

const SIGN_MAX_REFINE: usize = 20_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumError {
    #[error("division by zero in K")]
    DivisionByZero,
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

fn index_of_radicand(n: u32) -> Option<usize> {
    RADICANDS.iter().position(|&r| r == n)
}

/// An element of Q(√2,√3,√5), exact.
#[derive(Clone, PartialEq, Eq)]
pub struct RealAlgebraic {
    coeffs: [Rat; 8],
}

impl RealAlgebraic {
    pub fn zero() -> Self {
        RealAlgebraic {
            coeffs: std::array::from_fn(|_| Rat::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(q: Rat) -> Self {
        let mut x = Self::zero();
        x.coeffs[0] = q;
        x
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// √n for n in {1,2,3,5,6,10,15,30}.  Panics on any other radicand.
    pub fn sqrt(n: u32) -> Self {
        Self::sqrt_scaled(n, Rat::one())
    }

    /// q·√n.
    pub fn sqrt_scaled(n: u32, q: Rat) -> Self {
        let idx = index_of_radicand(n).unwrap_or_else(|| panic!("radicand {n} not in K0"));
        let mut x = Self::zero();
        x.coeffs[idx] = q;
        x
    }

    pub fn coeff(&self, idx: usize) -> &Rat {
        &self.coeffs[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Some(q) iff the element is the rational q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, q: &Rat) -> Self {
        RealAlgebraic {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * q),
        }
    }

    /// Galois conjugate: flips the sign of √2, √3, √5 according to the
    /// low three bits of `mask`.
    pub fn galois_conj(&self, mask: u8) -> Self {
        RealAlgebraic {
            coeffs: std::array::from_fn(|i| {
                if (i as u8 & mask).count_ones() % 2 == 1 {
                    -&self.coeffs[i]
                } else {
                    self.coeffs[i].clone()
                }
            }),
        }
    }

    /// Exact multiplicative inverse, by rationalizing with the seven
    /// nontrivial Galois conjugates.
    pub fn inverse(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let mut prod = Self::one();
        for mask in 1u8..8 {
            prod = &prod * &self.galois_conj(mask);
        }
        let norm = self * &prod;
        let q = norm
            .as_rational()
            .expect("full Galois product must be rational");
        debug_assert!(!q.is_zero());
        Ok(prod.scale(&q.recip()))
    }

    /// Exact sign in {-1, 0, +1}.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut br = Brackets::initial();
        for _ in 0..SIGN_MAX_REFINE {
            let iv = self.enclosure_with(&br);
            if iv.lo.is_positive() {
                return 1;
            }
            if iv.hi.is_negative() {
                return -1;
            }
            br.refine();
        }
        unreachable!("sign refinement did not separate a nonzero value from 0")
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Interval with rational endpoints containing the value, of width at
    /// most `width`.
    pub fn enclose(&self, width: &Rat) -> Interval {
        assert!(width.is_positive(), "enclosure width must be positive");
        if self.is_zero() {
            return Interval {
                lo: Rat::zero(),
                hi: Rat::zero(),
            };
        }
        let mut br = Brackets::initial();
        for _ in 0..SIGN_MAX_REFINE {
            let iv = self.enclosure_with(&br);
            if &(&iv.hi - &iv.lo) <= width {
                return iv;
            }
            br.refine();
        }
        unreachable!("enclosure refinement stalled")
    }

    pub(crate) fn enclosure_with(&self, br: &Brackets) -> Interval {
        let mut lo = Rat::zero();
        let mut hi = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (mlo, mhi) = br.monomial(i);
            if c.is_positive() {
                lo += c * &mlo;
                hi += c * &mhi;
            } else {
                lo += c * &mhi;
                hi += c * &mlo;
            }
        }
        Interval { lo, hi }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let mut acc = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c.to_f64().unwrap_or(f64::NAN) * (RADICANDS[i] as f64).sqrt();
            }
        }
        acc
    }

    fn fold<F: FnMut(usize, &Rat)>(&self, mut f: F) {
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                f(i, c);
            }
        }
    }
}

impl std::fmt::Debug for RealAlgebraic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &RealAlgebraic {
    type Output = RealAlgebraic;
    fn add(self, rhs: &RealAlgebraic) -> RealAlgebraic {
        RealAlgebraic {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl Sub for &RealAlgebraic {
    type Output = RealAlgebraic;
    fn sub(self, rhs: &RealAlgebraic) -> RealAlgebraic {
        RealAlgebraic {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl Neg for &RealAlgebraic {
    type Output = RealAlgebraic;
    fn neg(self) -> RealAlgebraic {
        RealAlgebraic {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }
}

impl Mul for &RealAlgebraic {
    type Output = RealAlgebraic;
    fn mul(self, rhs: &RealAlgebraic) -> RealAlgebraic {
        let mut out = RealAlgebraic::zero();
        self.fold(|i, a| {
            rhs.fold(|j, b| {
                let k = i ^ j;
                let mut factor = 1i64;
                let common = (i & j) as u8;
                if common & 1 != 0 {
                    factor *= 2;
                }
                if common & 2 != 0 {
                    factor *= 3;
                }
                if common & 4 != 0 {
                    factor *= 5;
                }
                let term = a * b * rat_int(factor);
                out.coeffs[k] += term;
            });
        });
        out
    }
}

macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

forward_owned_ops!(RealAlgebraic);

/// An element of K = Q(√2,√3,√5)(i): re + i·im.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    pub re: RealAlgebraic,
    pub im: RealAlgebraic,
}

impl AlgebraicNumber {
    pub fn zero() -> Self {
        AlgebraicNumber {
            re: RealAlgebraic::zero(),
            im: RealAlgebraic::zero(),
        }
    }

    pub fn one() -> Self {
        AlgebraicNumber {
            re: RealAlgebraic::one(),
            im: RealAlgebraic::zero(),
        }
    }

    pub fn i() -> Self {
        AlgebraicNumber {
            re: RealAlgebraic::zero(),
            im: RealAlgebraic::one(),
        }
    }

    pub fn from_real(re: RealAlgebraic) -> Self {
        AlgebraicNumber {
            re,
            im: RealAlgebraic::zero(),
        }
    }

    pub fn from_rat(q: Rat) -> Self {
        Self::from_real(RealAlgebraic::from_rat(q))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(RealAlgebraic::from_int(n))
    }

    pub fn new(re: RealAlgebraic, im: RealAlgebraic) -> Self {
        AlgebraicNumber { re, im }
    }

    pub fn conj(&self) -> Self {
        AlgebraicNumber {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// |z|² = re² + im², a nonnegative element of K0.
    pub fn norm_sqr(&self) -> RealAlgebraic {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn scale(&self, q: &Rat) -> Self {
        AlgebraicNumber {
            re: self.re.scale(q),
            im: self.im.scale(q),
        }
    }

    pub fn scale_real(&self, r: &RealAlgebraic) -> Self {
        AlgebraicNumber {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    pub fn inverse(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let d = self.norm_sqr().inverse()?;
        Ok(self.conj().scale_real(&d))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl std::fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn add(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        AlgebraicNumber {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn sub(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        AlgebraicNumber {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Mul for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn mul(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        AlgebraicNumber {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

forward_owned_ops!(AlgebraicNumber);

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn point(q: Rat) -> Self {
        Interval {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, q: &Rat) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }
}

/// Shrinking rational brackets for √2, √3, √5.
pub(crate) struct Brackets {
    b: [(Rat, Rat); 3],
}

impl Brackets {
    pub fn initial() -> Self {
        Brackets {
            b: [
                (rat(1414, 1000), rat(1415, 1000)),
                (rat(1732, 1000), rat(1733, 1000)),
                (rat(2236, 1000), rat(2237, 1000)),
            ],
        }
    }

    /// One bisection step on each base bracket.
    pub fn refine(&mut self) {
        for (k, n) in [(0usize, 2i64), (1, 3), (2, 5)] {
            let (lo, hi) = &self.b[k];
            let mid = (lo + hi) / rat_int(2);
            if &mid * &mid <= rat_int(n) {
                self.b[k].0 = mid;
            } else {
                self.b[k].1 = mid;
            }
        }
    }

    /// Bracket of the basis monomial with the given index.  All brackets are
    /// positive so the product of endpoints is monotone.
    pub fn monomial(&self, idx: usize) -> (Rat, Rat) {
        let mut lo = Rat::one();
        let mut hi = Rat::one();
        for (bit, br) in self.b.iter().enumerate() {
            if idx & (1 << bit) != 0 {
                lo *= &br.0;
                hi *= &br.1;
            }
        }
        (lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn sqrt(n: u32) -> RealAlgebraic {
        RealAlgebraic::sqrt(n)
    }

    #[test]
    fn additive_inverse_cancels() {
        let x = &sqrt(2) + &(-&sqrt(2));
        assert!(x.is_zero());
        let y = &(&RealAlgebraic::one() + &sqrt(2)) + &(&RealAlgebraic::one() - &sqrt(2));
        assert_eq!(y, RealAlgebraic::from_int(2));
    }

    #[test]
    fn radical_multiplication_table() {
        assert_eq!(&sqrt(2) * &sqrt(2), RealAlgebraic::from_int(2));
        assert_eq!(
            &sqrt(6) * &sqrt(10),
            RealAlgebraic::sqrt_scaled(15, rat_int(2))
        );
        assert_eq!(
            &sqrt(15) * &sqrt(30),
            RealAlgebraic::sqrt_scaled(2, rat_int(15))
        );
    }

    #[test]
    fn gamma_entry_times_conjugate() {
        // (5/2 - i√3/2)(5/2 + i√3/2) = 25/4 + 3/4 = 7
        let z = AlgebraicNumber::new(
            RealAlgebraic::from_rat(rat(5, 2)),
            RealAlgebraic::sqrt_scaled(3, rat(-1, 2)),
        );
        let p = &z * &z.conj();
        assert_eq!(p, AlgebraicNumber::from_int(7));
    }

    #[test]
    fn inversion_examples() {
        let two = RealAlgebraic::from_int(2);
        assert_eq!(two.inverse().unwrap(), RealAlgebraic::from_rat(rat(1, 2)));

        let x = &RealAlgebraic::one() + &sqrt(2);
        let expected = &(-&RealAlgebraic::one()) + &sqrt(2);
        assert_eq!(x.inverse().unwrap(), expected);

        let i = AlgebraicNumber::i();
        assert_eq!(i.inverse().unwrap(), -&i);

        assert_eq!(
            RealAlgebraic::zero().inverse(),
            Err(NumError::DivisionByZero)
        );
    }

    #[test]
    fn sign_examples() {
        assert_eq!(RealAlgebraic::zero().sign(), 0);
        // constant term of the norm-gap expansion
        let x = &RealAlgebraic::from_int(1669) + &RealAlgebraic::sqrt_scaled(2, rat_int(414));
        assert_eq!(x.sign(), 1);
        // (√2-1)(√3-1) = √6 - √2 - √3 + 1 > 0
        let y = &(&(&sqrt(6) - &sqrt(2)) - &sqrt(3)) + &RealAlgebraic::one();
        assert_eq!(y.sign(), 1);
        assert_eq!((-&y).sign(), -1);
    }

    #[test]
    fn enclose_examples() {
        let w = rat(1, 100);
        let iv = sqrt(2).enclose(&w);
        assert!(iv.width() <= w);
        assert!(iv.contains(&rat(141421356, 100000000)) || iv.lo < rat(1414214, 1000000));
        assert!(iv.lo < rat(14143, 10000) && iv.hi > rat(14142, 10000));

        let z = RealAlgebraic::zero().enclose(&rat(1, 10));
        assert_eq!(z, Interval::point(Rat::zero()));

        // s = √6/3 for the hexagon vertex radius
        let s = RealAlgebraic::sqrt_scaled(6, rat(1, 3));
        let iv = s.enclose(&rat(1, 1_000_000));
        assert!(iv.contains(&rat(816496, 1000000)) || (iv.lo < rat(816497, 1000000) && iv.hi > rat(816496, 1000000)));
    }

    fn random_element(rng: &mut StdRng, terms: usize) -> RealAlgebraic {
        let mut x = RealAlgebraic::zero();
        for _ in 0..terms {
            let idx = rng.gen_range(0..8usize);
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=9);
            x = &x + &RealAlgebraic::sqrt_scaled(RADICANDS[idx], rat(num, den));
        }
        x
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let a = random_element(&mut rng, 3);
            let b = random_element(&mut rng, 3);
            let c = random_element(&mut rng, 2);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                assert_eq!(&a * &a.inverse().unwrap(), RealAlgebraic::one());
            }
        }
    }

    #[test]
    fn sign_is_multiplicative() {
        let mut rng = StdRng::seed_from_u64(0xabcd);
        for _ in 0..500 {
            let a = random_element(&mut rng, 2);
            let b = random_element(&mut rng, 2);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            assert_eq!(a.sign() * b.sign(), (&a * &b).sign());
        }
    }

    #[test]
    fn enclosure_contains_float_value() {
        let mut rng = StdRng::seed_from_u64(0x77);
        for _ in 0..200 {
            let a = random_element(&mut rng, 4);
            let iv = a.enclose(&rat(1, 1_000_000));
            let f = a.to_f64();
            // compare loosely through f64
            use num_traits::ToPrimitive;
            let lo = iv.lo.to_f64().unwrap();
            let hi = iv.hi.to_f64().unwrap();
            assert!(lo - 1e-9 <= f && f <= hi + 1e-9, "{f} not in [{lo},{hi}]");
        }
    }

    #[test]
    fn complex_inverse_roundtrip() {
        let mut rng = StdRng::seed_from_u64(0x99);
        for _ in 0..300 {
            let z = AlgebraicNumber::new(random_element(&mut rng, 2), random_element(&mut rng, 2));
            if z.is_zero() {
                continue;
            }
            let w = z.inverse().unwrap();
            assert_eq!(&z * &w, AlgebraicNumber::one());
        }
    }
}
