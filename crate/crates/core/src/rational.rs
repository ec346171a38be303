//! Exact rational scalars and small helpers around them.

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"-p"`, `"p/q"` or a finite decimal like `"0.25"`.
pub fn parse_rational(text: &str) -> Result<Rat> {
    let s = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num::pow(BigInt::from(10), frac.len());
        let value = Rat::new(num, den);
        return Ok(if negative { -value } else { value });
    }
    let num: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(num))
}

/// Exact conversion: every finite double is a dyadic rational.
pub fn from_f64(v: f64) -> Result<Rat> {
    Rat::from_float(v).ok_or(Error::NonFinite(v))
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn vec_to_f64(v: &[Rat]) -> Vec<f64> {
    v.iter().map(to_f64).collect()
}

pub fn vec_from_f64(v: &[f64]) -> Result<Vec<Rat>> {
    v.iter().map(|&x| from_f64(x)).collect()
}

pub fn vec_from_i64(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_i64(a: &[Rat], b: &[i64]) -> Rat {
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, &y)| acc + x * BigInt::from(y))
}

pub fn format_rational(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integral(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn ceil_to_i64(r: &Rat) -> Result<i64> {
    r.ceil()
        .to_integer()
        .to_i64()
        .ok_or(Error::Overflow("ceiling of a rational"))
}

pub fn bigint_to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow("integer vector entry"))
}

/// Scales a rational vector to the primitive integer vector on the same ray.
/// The zero vector maps to itself.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = scaled
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|x| x / &gcd).collect()
}

pub fn primitive_integer_i64(v: &[Rat]) -> Result<Vec<i64>> {
    primitive_integer(v).iter().map(bigint_to_i64).collect()
}

/// Exact rational square root when it exists.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
