//! Univariate polynomials over K0 = Q(√2,√3,√5): Sturm sequences, real root
//! isolation and refinement, and Sylvester resultants for elimination.
//!
//! Root counting follows the signed-remainder Sturm chain.  Every remainder is
//! rescaled by a positive rational to keep coefficient growth down; positive
//! scaling does not change sign variations.

use crate::numfield::{rat_int, Interval, Rat, RealAlgebraic};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial with K0 coefficients, index = degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    c: Vec<RealAlgebraic>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(a: RealAlgebraic) -> Self {
        let mut p = Poly { c: vec![a] };
        p.trim();
        p
    }

    pub fn from_coeffs(c: Vec<RealAlgebraic>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    /// The monomial a·x^k.
    pub fn monomial(a: RealAlgebraic, k: usize) -> Self {
        let mut c = vec![RealAlgebraic::zero(); k + 1];
        c[k] = a;
        Poly::from_coeffs(c)
    }

    pub fn x() -> Self {
        Poly::monomial(RealAlgebraic::one(), 1)
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|a| a.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> RealAlgebraic {
        self.c.get(k).cloned().unwrap_or_else(RealAlgebraic::zero)
    }

    pub fn coeffs(&self) -> &[RealAlgebraic] {
        &self.c
    }

    pub fn leading(&self) -> Option<&RealAlgebraic> {
        self.c.last()
    }

    pub fn scale(&self, a: &RealAlgebraic) -> Self {
        Poly::from_coeffs(self.c.iter().map(|x| x * a).collect())
    }

    pub fn scale_rat(&self, q: &Rat) -> Self {
        Poly::from_coeffs(self.c.iter().map(|x| x.scale(q)).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, a)| a.scale(&rat_int(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn eval_rat(&self, x: &Rat) -> RealAlgebraic {
        let mut acc = RealAlgebraic::zero();
        for a in self.c.iter().rev() {
            acc = &acc.scale(x) + a;
        }
        acc
    }

    pub fn eval(&self, x: &RealAlgebraic) -> RealAlgebraic {
        let mut acc = RealAlgebraic::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// Interval evaluation by Horner, given an enclosure of the point and a
    /// width for the coefficient enclosures.
    pub fn eval_interval(&self, x: &RatInterval, coeff_width: &Rat) -> RatInterval {
        let mut acc = RatInterval::point(Rat::zero());
        for a in self.c.iter().rev() {
            let ai = a.enclose(coeff_width);
            acc = &acc.mul(x) + &RatInterval::new(ai.lo, ai.hi);
        }
        acc
    }

    /// Substitutes x -> -x.
    pub fn reflect(&self) -> Self {
        Poly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
                .collect(),
        )
    }

    /// Euclidean division, panics if divisor is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.c[dd].inverse().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = vec![RealAlgebraic::zero(); self.c.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = &rem.c[rd] * &lead_inv;
            let shift = rd - dd;
            for k in 0..=dd {
                let t = &d.c[k] * &f;
                rem.c[k + shift] = &rem.c[k + shift] - &t;
            }
            quot[shift] = f;
            rem.trim();
        }
        (Poly::from_coeffs(quot), rem)
    }

    /// Rescales by the positive rational that makes every inner rational an
    /// integer with overall gcd 1.  Signs are preserved.
    pub fn normalize_content(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for a in &self.c {
            for i in 0..8 {
                let q = a.coeff(i);
                if !q.is_zero() {
                    den_lcm = den_lcm.lcm(q.denom());
                    num_gcd = num_gcd.gcd(q.numer());
                }
            }
        }
        if num_gcd.is_zero() {
            return self.clone();
        }
        let factor = Rat::new(den_lcm, num_gcd);
        self.scale_rat(&factor)
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.normalize_content();
        }
        a.normalize_content()
    }

    /// Squarefree part p / gcd(p, p').
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) <= 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.normalize_content()
    }

    /// Signed-remainder Sturm chain.
    pub fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.normalize_content()];
        let d = self.derivative().normalize_content();
        if d.is_zero() {
            return chain;
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push((-&r).normalize_content());
        }
        chain
    }

    /// Number of distinct real roots in (a, b], from a precomputed chain.
    pub fn count_roots_between(chain: &[Poly], a: &Rat, b: &Rat) -> usize {
        let va = sign_variations_at(chain, a);
        let vb = sign_variations_at(chain, b);
        va.saturating_sub(vb)
    }

    /// Number of distinct real roots on the whole line.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let chain = self.sturm_chain();
        let v_neg = sign_variations_at_inf(&chain, false);
        let v_pos = sign_variations_at_inf(&chain, true);
        v_neg.saturating_sub(v_pos)
    }

    /// A rational B with all real roots in (-B, B).
    pub fn root_bound(&self) -> Rat {
        let d = match self.degree() {
            None | Some(0) => return Rat::one(),
            Some(d) => d,
        };
        let lead = &self.c[d];
        let lead_low = magnitude_lower_bound(lead);
        let mut sum = Rat::zero();
        let w = crate::numfield::rat(1, 1024);
        for a in &self.c[..d] {
            if a.is_zero() {
                continue;
            }
            let iv = a.enclose(&w);
            let m = if iv.lo.abs() > iv.hi.abs() {
                iv.lo.abs()
            } else {
                iv.hi.abs()
            };
            sum += m;
        }
        Rat::one() + sum / lead_low
    }

    /// Isolating intervals for all distinct real roots, each of width at most
    /// `width`, in increasing order.  Exact rational roots come out as
    /// degenerate intervals.
    pub fn isolate_roots(&self, width: &Rat) -> Vec<RootInterval> {
        let sf = self.squarefree();
        let chain = sf.sturm_chain();
        let bound = sf.root_bound();
        let total = Poly::count_roots_between(&chain, &(-&bound), &bound);
        let mut out = Vec::new();
        if total == 0 {
            return out;
        }
        let mut stack = vec![((-&bound), bound.clone(), total)];
        while let Some((lo, hi, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 && &hi - &lo <= *width {
                if sf.eval_rat(&hi).is_zero() {
                    out.push(RootInterval {
                        poly: sf.clone(),
                        lo: hi.clone(),
                        hi,
                    });
                } else {
                    out.push(RootInterval {
                        poly: sf.clone(),
                        lo,
                        hi,
                    });
                }
                continue;
            }
            let mid = (&lo + &hi) / rat_int(2);
            if sf.eval_rat(&mid).is_zero() {
                out.push(RootInterval {
                    poly: sf.clone(),
                    lo: mid.clone(),
                    hi: mid.clone(),
                });
                // shrink a window around the exact root until it contains no
                // other root and has root-free endpoints
                let mut eps = (&hi - &lo) / rat_int(4);
                loop {
                    let l2 = &mid - &eps;
                    let r2 = &mid + &eps;
                    if !sf.eval_rat(&l2).is_zero()
                        && !sf.eval_rat(&r2).is_zero()
                        && Poly::count_roots_between(&chain, &l2, &r2) == 1
                    {
                        let nl = Poly::count_roots_between(&chain, &lo, &l2);
                        let nr = Poly::count_roots_between(&chain, &r2, &hi);
                        debug_assert_eq!(nl + nr + 1, n);
                        stack.push((lo, l2, nl));
                        stack.push((r2, hi, nr));
                        break;
                    }
                    eps /= rat_int(2);
                }
                continue;
            }
            let nl = Poly::count_roots_between(&chain, &lo, &mid);
            let nr = n - nl;
            stack.push((lo, mid.clone(), nl));
            stack.push((mid, hi, nr));
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        debug_assert_eq!(out.len(), total);
        out
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "({a})")?;
            } else if i == 1 {
                write!(f, "({a})*t")?;
            } else {
                write!(f, "({a})*t^{i}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|a| -a).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![RealAlgebraic::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(c)
    }
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn sign_variations_at(chain: &[Poly], x: &Rat) -> usize {
    sign_variations(chain.iter().map(|p| p.eval_rat(x).sign()))
}

fn sign_variations_at_inf(chain: &[Poly], positive: bool) -> usize {
    sign_variations(chain.iter().map(|p| match p.degree() {
        None => 0,
        Some(d) => {
            let s = p.leading().unwrap().sign();
            if positive || d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }))
}

/// A positive rational lower bound for |x|, valid for nonzero x.
fn magnitude_lower_bound(x: &RealAlgebraic) -> Rat {
    let mut w = crate::numfield::rat(1, 16);
    loop {
        let iv = x.enclose(&w);
        if iv.lo.is_positive() {
            return iv.lo;
        }
        if iv.hi.is_negative() {
            return -iv.hi;
        }
        w /= rat_int(16);
    }
}

/// An isolated real root of a squarefree K0-polynomial.
#[derive(Clone, Debug)]
pub struct RootInterval {
    pub poly: Poly,
    pub lo: Rat,
    pub hi: Rat,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / rat_int(2)
    }

    /// Bisects until the interval width is at most `width`.
    pub fn refine(&mut self, width: &Rat) {
        if self.is_exact() {
            return;
        }
        let slo = self.poly.eval_rat(&self.lo).sign();
        if self.poly.eval_rat(&self.hi).sign() == 0 {
            // the root sits exactly on the upper endpoint
            self.lo = self.hi.clone();
            return;
        }
        debug_assert_ne!(slo, 0, "lower endpoint of an isolating interval is a root");
        while self.width() > *width {
            let mid = self.mid();
            let sm = self.poly.eval_rat(&mid).sign();
            if sm == 0 {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            if sm == slo {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
        }
    }

    pub fn to_interval(&self) -> Interval {
        Interval {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.mid().to_f64().unwrap_or(f64::NAN)
    }
}

/// A real algebraic number: either rational or an isolated polynomial root.
#[derive(Clone, Debug)]
pub enum AlgReal {
    Rat(Rat),
    Root(RootInterval),
}

impl AlgReal {
    pub fn zero() -> Self {
        AlgReal::Rat(Rat::zero())
    }

    pub fn enclosure(&self, width: &Rat) -> RatInterval {
        match self {
            AlgReal::Rat(q) => RatInterval::point(q.clone()),
            AlgReal::Root(r) => {
                let mut r = r.clone();
                r.refine(width);
                RatInterval::new(r.lo, r.hi)
            }
        }
    }

    pub fn approx(&self, digits: u32) -> Rat {
        let w = crate::numfield::tol(digits + 3);
        self.enclosure(&w).mid()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.approx(15).to_f64().unwrap_or(f64::NAN)
    }

    /// |self - q| <= tol, decided by refinement.
    pub fn within(&self, q: &Rat, tol: &Rat) -> bool {
        let iv = self.enclosure(&(tol / rat_int(64)));
        (&iv.lo - q).abs() <= *tol && (&iv.hi - q).abs() <= *tol
    }

    pub fn neg(&self) -> AlgReal {
        match self {
            AlgReal::Rat(q) => AlgReal::Rat(-q),
            AlgReal::Root(r) => AlgReal::Root(RootInterval {
                poly: r.poly.reflect(),
                lo: -&r.hi,
                hi: -&r.lo,
            }),
        }
    }
}

/// Closed rational interval arithmetic, used for certified box evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(q: Rat) -> Self {
        RatInterval {
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

    pub fn mul(&self, rhs: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn square(&self) -> RatInterval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        let (mut lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if self.lo.is_negative() && self.hi.is_positive() {
            lo = Rat::zero();
        }
        RatInterval { lo, hi }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, q: &Rat) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn disjoint(&self, rhs: &RatInterval) -> bool {
        self.hi < rhs.lo || rhs.hi < self.lo
    }

    /// Enclosure of the square root.  The input must reach into [0, ∞); a
    /// slightly negative lower endpoint clamps to zero.
    pub fn sqrt(&self, digits: u32) -> RatInterval {
        assert!(
            !self.hi.is_negative(),
            "sqrt of a negative interval: [{}, {}]",
            self.lo,
            self.hi
        );
        let lo = if self.lo.is_positive() {
            rat_sqrt_lower(&self.lo, digits)
        } else {
            Rat::zero()
        };
        let hi = rat_sqrt_upper(&self.hi, digits);
        RatInterval { lo, hi }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Add for &RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

/// A lower bound for √q (q >= 0) with `digits` decimal digits of slack.
pub fn rat_sqrt_lower(q: &Rat, digits: u32) -> Rat {
    debug_assert!(!q.is_negative());
    let scale = BigInt::from(10u32).pow(digits);
    // √(n/d) = √(n·d)/d
    let n = q.numer() * q.denom() * (&scale * &scale);
    let root = n.sqrt();
    Rat::new(root, q.denom() * scale)
}

/// An upper bound for √q.
pub fn rat_sqrt_upper(q: &Rat, digits: u32) -> Rat {
    debug_assert!(!q.is_negative());
    let scale = BigInt::from(10u32).pow(digits);
    let n = q.numer() * q.denom() * (&scale * &scale);
    let root = n.sqrt() + BigInt::one();
    Rat::new(root, q.denom() * scale)
}

/// Polynomials in a second variable whose coefficients are K0-polynomials in
/// the first; just enough for elimination by resultants.
#[derive(Clone, Debug)]
pub struct Poly2 {
    /// coefficient of y^k is a polynomial in x
    c: Vec<Poly>,
}

impl Poly2 {
    pub fn from_coeffs(c: Vec<Poly>) -> Self {
        let mut p = Poly2 { c };
        while p.c.last().is_some_and(|q| q.is_zero()) {
            p.c.pop();
        }
        p
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Poly {
        self.c.get(k).cloned().unwrap_or_else(Poly::zero)
    }

    /// Resultant with respect to the second variable: determinant of the
    /// Sylvester matrix, a polynomial in the first variable.
    pub fn resultant(&self, other: &Poly2) -> Poly {
        let m = self.degree().expect("resultant of zero polynomial");
        let n = other.degree().expect("resultant of zero polynomial");
        let size = m + n;
        if size == 0 {
            return Poly::constant(RealAlgebraic::one());
        }
        let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(size);
        for i in 0..n {
            let mut row = vec![Poly::zero(); size];
            for k in 0..=m {
                row[i + k] = self.coeff(m - k);
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![Poly::zero(); size];
            for k in 0..=n {
                row[i + k] = other.coeff(n - k);
            }
            rows.push(row);
        }
        det_poly(rows)
    }
}

/// Determinant by cofactor expansion; fine for the small matrices quadratic
/// elimination produces.
fn det_poly(rows: Vec<Vec<Poly>>) -> Poly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][j] * &det_poly(minor);
        if j % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rat;

    fn p_int(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&n| RealAlgebraic::from_int(n)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) = x^2 - 3x + 2
        let p = p_int(&[2, -3, 1]);
        let d = p_int(&[-1, 1]);
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, p_int(&[-2, 1]));
        let g = p.gcd(&p_int(&[-2, 2])); // 2(x-1)
        assert_eq!(g.degree(), Some(1));
        assert!(g.eval_rat(&rat_int(1)).is_zero());
    }

    #[test]
    fn sturm_counts_roots() {
        // (x^2-2)(x^2-3) has four real roots
        let p = &p_int(&[-2, 0, 1]) * &p_int(&[-3, 0, 1]);
        assert_eq!(p.count_real_roots(), 4);
        // x^2+1 has none
        assert_eq!(p_int(&[1, 0, 1]).count_real_roots(), 0);
        // (x-1)^2 has one distinct root
        assert_eq!(p_int(&[1, -2, 1]).count_real_roots(), 1);
    }

    #[test]
    fn isolates_and_refines() {
        let p = &p_int(&[-2, 0, 1]) * &p_int(&[-3, 0, 1]);
        let w = rat(1, 1_000_000);
        let roots = p.isolate_roots(&w);
        assert_eq!(roots.len(), 4);
        let expected = [-1.7320508, -1.4142136, 1.4142136, 1.7320508];
        for (r, e) in roots.iter().zip(expected) {
            assert!((r.to_f64() - e).abs() < 1e-5, "{} vs {e}", r.to_f64());
        }
    }

    #[test]
    fn rational_roots_detected() {
        // x(x^2-2): root at exactly 0
        let p = p_int(&[0, -2, 0, 1]);
        let roots = p.isolate_roots(&rat(1, 1024));
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().any(|r| r.is_exact() && r.lo.is_zero()));
    }

    #[test]
    fn irrational_coefficients() {
        // x^2 - √2·x: roots 0 and √2
        let p = Poly::from_coeffs(vec![
            RealAlgebraic::zero(),
            -RealAlgebraic::sqrt(2),
            RealAlgebraic::one(),
        ]);
        let roots = p.isolate_roots(&rat(1, 1_000_000));
        assert_eq!(roots.len(), 2);
        assert!((roots[1].to_f64() - 1.4142136).abs() < 1e-5);
    }

    #[test]
    fn resultant_of_common_root() {
        // f = y^2 - x, g = y - x: res vanishes exactly at x in {0, 1}
        let f = Poly2::from_coeffs(vec![
            Poly::monomial(-RealAlgebraic::one(), 1),
            Poly::zero(),
            Poly::constant(RealAlgebraic::one()),
        ]);
        let g = Poly2::from_coeffs(vec![
            Poly::monomial(-RealAlgebraic::one(), 1),
            Poly::constant(RealAlgebraic::one()),
        ]);
        let r = f.resultant(&g);
        assert!(r.eval_rat(&rat_int(0)).is_zero());
        assert!(r.eval_rat(&rat_int(1)).is_zero());
        assert!(!r.eval_rat(&rat_int(2)).is_zero());
    }

    #[test]
    fn interval_sqrt_bounds() {
        let iv = RatInterval::point(rat_int(2)).sqrt(8);
        assert!(&iv.lo * &iv.lo <= rat_int(2));
        assert!(&iv.hi * &iv.hi >= rat_int(2));
        assert!(iv.width() < rat(1, 1_000_000));
    }
}
