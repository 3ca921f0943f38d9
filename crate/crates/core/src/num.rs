//! Exact rational scalars, signs and rational interval arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational. `num_rational` keeps values reduced with a
/// positive denominator, which is exactly the invariant we need.
pub type Rat = BigRational;

pub fn rat<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

pub fn ratio<P: Into<BigInt>, Q: Into<BigInt>>(p: P, q: Q) -> Rat {
    Rat::new(p.into(), q.into())
}

/// Parse `p/q` or a plain integer string.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (s, None),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational `{s}`"))?;
    match den {
        None => Ok(Rat::from_integer(p)),
        Some(q) => {
            let q: BigInt = q.parse().map_err(|_| format!("invalid rational `{s}`"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Render as `p/q`, or just `p` for integers.
pub fn fmt_rat(v: &Rat) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Sign of an exact quantity.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(v: &Rat) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn of_int(v: &BigInt) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Pos,
            _ => Sign::Neg,
        }
    }

    pub fn neg(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Neg => "-",
            Sign::Zero => "0",
            Sign::Pos => "+",
        }
    }
}

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn point(v: Rat) -> Interval {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn new(lo: Rat, hi: Rat) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign of every element, when uniform.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Pos)
        } else if self.hi.is_negative() {
            Some(Sign::Neg)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c1 = &self.lo * &o.lo;
        let c2 = &self.lo * &o.hi;
        let c3 = &self.hi * &o.lo;
        let c4 = &self.hi * &o.hi;
        let mut lo = c1.clone();
        let mut hi = c1;
        for c in [c2, c3, c4] {
            if c < lo {
                lo = c.clone();
            }
            if c > hi {
                hi = c;
            }
        }
        Interval { lo, hi }
    }

    pub fn scale(&self, k: &Rat) -> Interval {
        if k.is_negative() {
            Interval {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            Interval {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    /// Reciprocal; `None` when the interval straddles zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    /// Rational interval enclosing the square roots of the nonnegative part.
    /// Uses a few Newton steps from a crude bound; exactness is not needed,
    /// only a true enclosure.
    pub fn sqrt_enclosure(&self) -> Interval {
        let lo = if self.lo.is_negative() {
            Rat::zero()
        } else {
            sqrt_lower(&self.lo)
        };
        let hi = sqrt_upper(&self.hi.clone().max(Rat::zero()));
        Interval { lo, hi }
    }
}

/// Rational lower bound for sqrt(v), v >= 0.
pub fn sqrt_lower(v: &Rat) -> Rat {
    if v.is_zero() {
        return Rat::zero();
    }
    let u = sqrt_upper(v);
    // v / upper <= sqrt(v)
    v / u
}

/// Rational upper bound for sqrt(v), v >= 0.
pub fn sqrt_upper(v: &Rat) -> Rat {
    if v.is_zero() {
        return Rat::zero();
    }
    // Start from an integer-sqrt based guess, then Newton (which approaches
    // from above for x0 >= sqrt(v)).
    let num = v.numer().sqrt() + 1;
    let den = v.denom().sqrt();
    let mut x = Rat::new(num, den.max(BigInt::from(1)));
    if &x * &x < *v {
        x = v.clone() + Rat::from_integer(1.into());
    }
    for _ in 0..8 {
        x = (&x + v / &x) / rat(2);
    }
    // One safety step: ensure upper bound.
    if &x * &x < *v {
        x = v / x;
    }
    x
}

/// Exact square root when `v` is the square of a rational; `None` otherwise.
pub fn exact_sqrt(v: &Rat) -> Option<Rat> {
    if v.is_negative() {
        return None;
    }
    let n = v.numer().sqrt();
    let d = v.denom().sqrt();
    if &(&n * &n) == v.numer() && &(&d * &d) == v.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rat("-6/8").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rat(" 42 ").unwrap(), rat(42));
        assert!(parse_rat("1/0").is_err());
        assert_eq!(fmt_rat(&ratio(-3, 4)), "-3/4");
        assert_eq!(fmt_rat(&rat(7)), "7");
    }

    #[test]
    fn sqrt_bounds_bracket() {
        for v in [ratio(2, 1), ratio(495, 196), rat(16), ratio(1, 3)] {
            let lo = sqrt_lower(&v);
            let hi = sqrt_upper(&v);
            assert!(&lo * &lo <= v && v <= &hi * &hi);
            assert!(lo <= hi);
        }
        assert_eq!(exact_sqrt(&rat(16)).unwrap(), rat(4));
        assert_eq!(exact_sqrt(&ratio(9, 4)).unwrap(), ratio(3, 2));
        assert!(exact_sqrt(&rat(2)).is_none());
    }

    #[test]
    fn interval_mul_covers_products() {
        let a = Interval::new(ratio(-1, 2), rat(3));
        let b = Interval::new(rat(-2), rat(-1));
        let p = a.mul(&b);
        assert!(p.lo <= rat(-6) && p.hi >= rat(1));
    }
}
