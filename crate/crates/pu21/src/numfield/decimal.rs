//! Decimal rendering of exact values for reports.

use super::{rat_int, Rat, RealAlgebraic};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rounds to `digits` decimal places, ties to even.
pub fn round_half_even(q: &Rat, digits: u32) -> Rat {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = q * Rat::from(scale.clone());
    let (quot, rem) = scaled.numer().div_rem(scaled.denom());
    let mut n = quot.clone();
    // compare |rem|/den with 1/2
    let twice = rem.abs() * BigInt::from(2);
    let den = scaled.denom().clone();
    let up = match twice.cmp(&den) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => quot.is_odd(),
    };
    if up && !rem.is_zero() {
        if rem.is_negative() {
            n -= 1;
        } else {
            n += 1;
        }
    }
    Rat::new(n, scale)
}

/// Fixed-point decimal string of an exact value, default report precision
/// being six digits.
pub fn decimal_string(x: &RealAlgebraic, digits: u32) -> String {
    let width = Rat::new(BigInt::from(1), BigInt::from(10u32).pow(digits + 4));
    let iv = x.enclose(&width);
    let rounded = round_half_even(&iv.mid(), digits);
    format_fixed(&rounded, digits)
}

pub fn format_fixed(q: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = q * Rat::from(scale.clone());
    debug_assert!(scaled.is_integer());
    let n = scaled.numer().clone();
    let neg = n.is_negative();
    let (int_part, frac_part) = n.abs().div_rem(&scale);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!(
        "{sign}{int_part}.{frac:0>width$}",
        frac = frac_part.to_string(),
        width = digits as usize
    )
}

/// Decimal midpoint of an enclosure as a rational, handy for tolerance checks.
pub fn approx(x: &RealAlgebraic, digits: u32) -> Rat {
    let width = Rat::new(BigInt::from(1), BigInt::from(10u32).pow(digits + 4));
    x.enclose(&width).mid()
}

/// |x - q| <= tol, decided exactly.
pub fn within(x: &RealAlgebraic, q: &Rat, tol: &Rat) -> bool {
    let d = &*x - &RealAlgebraic::from_rat(q.clone());
    let bound = RealAlgebraic::from_rat(tol.clone());
    (&(&d + &bound)).sign() >= 0 && (&(&bound - &d)).sign() >= 0
}

pub fn rat_pow10(digits: u32) -> Rat {
    Rat::from(BigInt::from(10u32).pow(digits))
}

pub fn tol(digits: u32) -> Rat {
    rat_int(1) / rat_pow10(digits)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, RealAlgebraic};
    use super::*;

    #[test]
    fn rounding_ties_to_even() {
        assert_eq!(format_fixed(&round_half_even(&rat(25, 10), 0), 0), "2");
        assert_eq!(format_fixed(&round_half_even(&rat(35, 10), 0), 0), "4");
        assert_eq!(format_fixed(&round_half_even(&rat(-25, 10), 0), 0), "-2");
        assert_eq!(
            format_fixed(&round_half_even(&rat(1234565, 1000000), 5), 5),
            "1.23456"
        );
    }

    #[test]
    fn decimal_of_radicals() {
        assert_eq!(decimal_string(&RealAlgebraic::sqrt(2), 6), "1.414214");
        let s = RealAlgebraic::sqrt_scaled(6, rat(1, 3));
        assert_eq!(decimal_string(&s, 6), "0.816497");
        assert_eq!(decimal_string(&RealAlgebraic::from_int(-3), 2), "-3.00");
    }

    #[test]
    fn within_tolerance() {
        let x = RealAlgebraic::sqrt(2);
        assert!(within(&x, &rat(1414214, 1000000), &rat(1, 1000000)));
        assert!(!within(&x, &rat(1414, 1000), &rat(1, 1000000)));
    }
}
