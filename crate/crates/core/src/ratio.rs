//! Exact rational arithmetic for the handful of fractional thresholds the
//! lemma checkers compare against. Kept deliberately tiny: reduced i64
//! fractions with i128 cross-multiplied comparisons, no rounding anywhere.

use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// A reduced fraction with positive denominator.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: i64,
    den: i64,
}

impl Serialize for Ratio {
    /// Reports carry ratios as "p/q" strings so readers see the exact value.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

impl Ratio {
    /// Builds `num/den`, normalizing sign and reducing. Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Ratio {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Ratio {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(n: i64) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Parses "p/q" or a bare integer "p".
    pub fn parse(text: &str) -> Option<Ratio> {
        let text = text.trim();
        match text.split_once('/') {
            Some((p, q)) => {
                let num: i64 = p.trim().parse().ok()?;
                let den: i64 = q.trim().parse().ok()?;
                if den == 0 {
                    return None;
                }
                Some(Ratio::new(num, den))
            }
            None => text.parse().ok().map(Ratio::from_int),
        }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        // Denominators are positive, so cross multiplication preserves order.
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl Add for Ratio {
    type Output = Ratio;
    fn add(self, rhs: Ratio) -> Ratio {
        Ratio::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for Ratio {
    type Output = Ratio;
    fn sub(self, rhs: Ratio) -> Ratio {
        Ratio::new(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl Mul for Ratio {
    type Output = Ratio;
    fn mul(self, rhs: Ratio) -> Ratio {
        Ratio::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `lhs > r`, exactly.
pub fn int_gt(lhs: i64, r: Ratio) -> bool {
    (lhs as i128) * (r.den() as i128) > r.num() as i128
}

/// `lhs < r`, exactly.
pub fn int_lt(lhs: i64, r: Ratio) -> bool {
    (lhs as i128) * (r.den() as i128) < r.num() as i128
}

/// `lhs >= r`, exactly.
pub fn int_ge(lhs: i64, r: Ratio) -> bool {
    !int_lt(lhs, r)
}
