//! Exact arithmetic in the field Q(sqrt 2, sqrt 3).
//!
//! Every matrix entry of Young's orthogonal form and every normalization
//! `sqrt(f / N!)` for `N <= 4` lies in this field, so Young operators up to
//! four particles are represented without rounding.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i64>;

/// `a + b sqrt2 + c sqrt3 + d sqrt6` with rational `a, b, c, d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Surd {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn rational(r: Rational) -> Self {
        Self {
            a: r,
            ..Self::zero()
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(Rational::new(n, d))
    }

    pub fn zero() -> Self {
        Self {
            a: Rational::zero(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// `sqrt(r)` for a non-negative rational, if it lies in the field.
    pub fn sqrt_rational(r: Rational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Self::zero());
        }
        // sqrt(n/m) = sqrt(n m) / m ; split n m = s^2 * k with k squarefree.
        let nm = r.numer().checked_mul(*r.denom())?;
        let (s, k) = square_split(nm);
        let coeff = Rational::new(s, *r.denom());
        let z = Rational::zero();
        match k {
            1 => Some(Self::new(coeff, z, z, z)),
            2 => Some(Self::new(z, coeff, z, z)),
            3 => Some(Self::new(z, z, coeff, z)),
            6 => Some(Self::new(z, z, z, coeff)),
            _ => None,
        }
    }

    pub fn scale(&self, r: Rational) -> Self {
        Self {
            a: self.a * r,
            b: self.b * r,
            c: self.c * r,
            d: self.d * r,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: Rational| *r.numer() as f64 / *r.denom() as f64;
        f(self.a) + f(self.b) * 2f64.sqrt() + f(self.c) * 3f64.sqrt() + f(self.d) * 6f64.sqrt()
    }

    /// Rational part, if the element is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then_some(self.a)
    }
}

fn square_split(n: i64) -> (i64, i64) {
    let mut s = 1;
    let mut k = n;
    let mut p = 2;
    while p * p <= k {
        while k % (p * p) == 0 {
            k /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, k)
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        Surd::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl AddAssign for Surd {
    fn add_assign(&mut self, o: Surd) {
        *self = *self + o;
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        self + (-o)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let (e, f, g, h) = (o.a, o.b, o.c, o.d);
        let two = Rational::from_integer(2);
        let three = Rational::from_integer(3);
        let six = Rational::from_integer(6);
        // basis products: s2*s2=2, s3*s3=3, s6*s6=6, s2*s3=s6, s2*s6=2 s3, s3*s6=3 s2
        Surd::new(
            a * e + two * b * f + three * c * g + six * d * h,
            a * f + b * e + three * (c * h + d * g),
            a * g + c * e + two * (b * h + d * f),
            a * h + d * e + b * g + c * f,
        )
    }
}

impl Mul<Rational> for Surd {
    type Output = Surd;
    fn mul(self, r: Rational) -> Surd {
        self.scale(r)
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [(self.a, ""), (self.b, "√2"), (self.c, "√3"), (self.d, "√6")];
        let mut first = true;
        for (r, name) in parts {
            if r.is_zero() {
                continue;
            }
            let neg = r.is_negative();
            let mag = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if name.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{name}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
