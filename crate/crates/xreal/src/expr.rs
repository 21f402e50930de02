use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::elem;
use crate::{ConstantId, Interval, XrealError};

/// Expression tree over exact literals, named constants and a few
/// elementary functions. Children are shared, so cloning is cheap.
#[derive(Clone, Debug, PartialEq)]
pub enum RealExpr {
    Int(BigInt),
    Rat(BigRational),
    Const(ConstantId),
    Pi,
    Add(Arc<RealExpr>, Arc<RealExpr>),
    Sub(Arc<RealExpr>, Arc<RealExpr>),
    Mul(Arc<RealExpr>, Arc<RealExpr>),
    Div(Arc<RealExpr>, Arc<RealExpr>),
    Neg(Arc<RealExpr>),
    Sqrt(Arc<RealExpr>),
    /// Natural logarithm.
    Ln(Arc<RealExpr>),
    Log2(Arc<RealExpr>),
    /// Logarithm to an integer base >= 2.
    LogBase(Arc<RealExpr>, u64),
    /// `2^x`.
    Pow2(Arc<RealExpr>),
}

impl RealExpr {
    pub fn int(n: impl Into<BigInt>) -> Self {
        RealExpr::Int(n.into())
    }

    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        RealExpr::Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn constant(id: ConstantId) -> Self {
        RealExpr::Const(id)
    }

    pub fn sqrt(self) -> Self {
        RealExpr::Sqrt(Arc::new(self))
    }

    pub fn ln(self) -> Self {
        RealExpr::Ln(Arc::new(self))
    }

    pub fn log2(self) -> Self {
        RealExpr::Log2(Arc::new(self))
    }

    pub fn log_base(self, base: u64) -> Self {
        assert!(base >= 2, "logarithm base must be at least 2");
        RealExpr::LogBase(Arc::new(self), base)
    }

    pub fn pow2(self) -> Self {
        RealExpr::Pow2(Arc::new(self))
    }

    /// `self^e` for a positive base, as `2^(e * log2 self)`.
    pub fn pow(self, e: BigRational) -> Self {
        RealExpr::Rat(e).mul(self.log2()).pow2()
    }

    /// The exact rational value, when the tree only involves operations that
    /// stay rational on these operands.
    pub fn exact(&self) -> Option<BigRational> {
        self.surd().and_then(|s| s.rational())
    }

    /// The exact value as `r * sqrt(s)` with `s` a positive integer free of
    /// small square factors, when the tree stays inside that form.
    pub fn surd(&self) -> Option<Surd> {
        match self {
            RealExpr::Int(n) => Some(Surd::from_rational(BigRational::from_integer(n.clone()))),
            RealExpr::Rat(r) => Some(Surd::from_rational(r.clone())),
            RealExpr::Const(ConstantId::C) => Some(Surd::new(BigRational::new(1.into(), 2.into()), 3.into())),
            RealExpr::Const(_) | RealExpr::Pi => None,
            RealExpr::Add(a, b) => a.surd()?.add(&b.surd()?),
            RealExpr::Sub(a, b) => a.surd()?.add(&b.surd()?.neg()),
            RealExpr::Mul(a, b) => {
                // A zero factor decides the product even if the other is irrational.
                match (a.surd(), b.surd()) {
                    (Some(x), _) if x.is_zero() => Some(x),
                    (_, Some(y)) if y.is_zero() => Some(y),
                    (Some(x), Some(y)) => Some(x.mul(&y)),
                    _ => None,
                }
            }
            RealExpr::Div(a, b) => a.surd()?.div(&b.surd()?),
            RealExpr::Neg(a) => Some(a.surd()?.neg()),
            RealExpr::Sqrt(a) => a.surd()?.rational()?.pipe(|r| Surd::sqrt_of(&r)),
            RealExpr::Ln(a) => {
                let x = a.exact()?;
                x.is_one().then(|| Surd::from_rational(BigRational::zero()))
            }
            RealExpr::Log2(a) => exact_log(&a.exact()?, 2).map(Surd::from_rational),
            RealExpr::LogBase(a, p) => exact_log(&a.exact()?, *p).map(Surd::from_rational),
            RealExpr::Pow2(a) => {
                let x = a.exact()?;
                if !x.is_integer() {
                    return None;
                }
                let k = x.to_integer().to_i64()?;
                if k.unsigned_abs() > 1 << 16 {
                    return None;
                }
                let p = BigInt::one() << k.unsigned_abs();
                let v = if k >= 0 { BigRational::from_integer(p) } else { BigRational::new(BigInt::one(), p) };
                Some(Surd::from_rational(v))
            }
        }
    }

    /// Encloses the value in an interval with `prec` fractional bits.
    pub fn eval(&self, prec: u32) -> Result<Interval, XrealError> {
        if let Some(r) = self.exact() {
            return Ok(Interval::from_rational(&r, prec));
        }
        let work = prec + 16;
        Ok(self.eval_at(work)?.with_prec(prec))
    }

    fn eval_at(&self, w: u32) -> Result<Interval, XrealError> {
        if let Some(r) = self.exact_leaf() {
            return Ok(Interval::from_rational(&r, w));
        }
        Ok(match self {
            RealExpr::Int(n) => Interval::from_int(n.clone(), w),
            RealExpr::Rat(r) => Interval::from_rational(r, w),
            RealExpr::Const(id) => id.enclosure(w)?,
            RealExpr::Pi => elem::pi(w),
            RealExpr::Add(a, b) => a.eval_at(w)?.add(&b.eval_at(w)?),
            RealExpr::Sub(a, b) => a.eval_at(w)?.sub(&b.eval_at(w)?),
            RealExpr::Mul(a, b) => a.eval_at(w)?.mul(&b.eval_at(w)?),
            RealExpr::Div(a, b) => a.eval_at(w)?.div(&b.eval_at(w)?)?,
            RealExpr::Neg(a) => a.eval_at(w)?.neg(),
            RealExpr::Sqrt(a) => a.eval_at(w)?.sqrt()?,
            RealExpr::Ln(a) => elem::ln(&a.eval_at(w)?)?,
            RealExpr::Log2(a) => {
                let x = a.eval_at(w)?;
                elem::ln(&x)?.div(&elem::ln2(w))?
            }
            RealExpr::LogBase(a, p) => {
                let x = a.eval_at(w)?;
                let base = elem::ln(&Interval::from_int(*p, w))?;
                elem::ln(&x)?.div(&base)?
            }
            RealExpr::Pow2(a) => elem::exp(&a.eval_at(w)?.mul(&elem::ln2(w))),
        })
    }

    /// Exact value of nodes that are cheap to decide and benefit from
    /// exactness (logs of exact powers, roots of exact squares).
    fn exact_leaf(&self) -> Option<BigRational> {
        match self {
            RealExpr::Sqrt(a) | RealExpr::Log2(a) | RealExpr::LogBase(a, _) | RealExpr::Ln(a) | RealExpr::Pow2(a) => {
                a.exact().and_then(|_| self.exact())
            }
            _ => None,
        }
    }
}

trait Pipe: Sized {
    fn pipe<T>(self, f: impl FnOnce(Self) -> T) -> T {
        f(self)
    }
}

impl<T> Pipe for T {}

/// Exact real number `coeff * sqrt(radicand)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    coeff: BigRational,
    radicand: BigInt,
}

impl Surd {
    fn new(coeff: BigRational, radicand: BigInt) -> Self {
        let mut s = Surd { coeff, radicand };
        s.reduce();
        s
    }

    fn from_rational(r: BigRational) -> Self {
        Surd { coeff: r, radicand: BigInt::one() }
    }

    /// `sqrt(p/q) = sqrt(p q) / q`.
    fn sqrt_of(r: &BigRational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        let q = r.denom().clone();
        Some(Surd::new(BigRational::new(BigInt::one(), q.clone()), r.numer() * q))
    }

    fn reduce(&mut self) {
        if self.coeff.is_zero() {
            self.radicand = BigInt::one();
            return;
        }
        let mut d = BigInt::from(2);
        let limit = BigInt::from(1000);
        while d <= limit && &d * &d <= self.radicand {
            let sq = &d * &d;
            while (&self.radicand % &sq).is_zero() {
                self.radicand /= &sq;
                self.coeff *= BigRational::from_integer(d.clone());
            }
            d += 1;
        }
        let root = self.radicand.sqrt();
        if &root * &root == self.radicand {
            self.coeff *= BigRational::from_integer(root);
            self.radicand = BigInt::one();
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The value, if it is rational.
    pub fn rational(&self) -> Option<BigRational> {
        self.radicand.is_one().then(|| self.coeff.clone())
    }

    fn neg(&self) -> Self {
        Surd { coeff: -&self.coeff, radicand: self.radicand.clone() }
    }

    fn add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        (self.radicand == other.radicand).then(|| Surd::new(&self.coeff + &other.coeff, self.radicand.clone()))
    }

    fn mul(&self, other: &Self) -> Self {
        Surd::new(&self.coeff * &other.coeff, &self.radicand * &other.radicand)
    }

    fn div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let den = &other.coeff * BigRational::from_integer(other.radicand.clone());
        Some(Surd::new(&self.coeff / den, &self.radicand * &other.radicand))
    }

    /// `coeff^2 * radicand`, carrying the sign of the value.
    fn signed_square(&self) -> BigRational {
        let sq = &self.coeff * &self.coeff * BigRational::from_integer(self.radicand.clone());
        if self.coeff.is_negative() {
            -sq
        } else {
            sq
        }
    }

    /// Exact ordering of two surds.
    pub fn cmp_value(&self, other: &Self) -> std::cmp::Ordering {
        // t -> sign(t) t^2 is strictly increasing, so it preserves order.
        self.signed_square().cmp(&other.signed_square())
    }

    /// Exact floor.
    pub fn floor(&self) -> BigInt {
        if let Some(r) = self.rational() {
            return r.floor().to_integer();
        }
        // Irrational: value = p sqrt(s) / q with s not a perfect square.
        let p = self.coeff.numer();
        let q = self.coeff.denom();
        let x = p * p * &self.radicand;
        let down = x.sqrt().div_floor(q);
        if p.is_negative() {
            -down - 1
        } else {
            down
        }
    }
}

/// `log_base(x)` when x is an integral power (possibly negative) of `base`.
fn exact_log(x: &BigRational, base: u64) -> Option<BigRational> {
    if !x.is_positive() {
        return None;
    }
    let power_of = |n: &BigInt| -> Option<i64> {
        let mut n: BigUint = n.to_biguint()?;
        let b = BigUint::from(base);
        let mut k = 0i64;
        while !n.is_one() {
            if (&n % &b).is_zero() {
                n /= &b;
                k += 1;
            } else {
                return None;
            }
        }
        Some(k)
    };
    let k = power_of(x.numer())? - power_of(x.denom())?;
    Some(BigRational::from_integer(k.into()))
}

impl From<i64> for RealExpr {
    fn from(n: i64) -> Self {
        RealExpr::Int(n.into())
    }
}

impl From<i32> for RealExpr {
    fn from(n: i32) -> Self {
        RealExpr::Int(n.into())
    }
}

impl From<u64> for RealExpr {
    fn from(n: u64) -> Self {
        RealExpr::Int(n.into())
    }
}

impl From<BigInt> for RealExpr {
    fn from(n: BigInt) -> Self {
        RealExpr::Int(n)
    }
}

impl From<BigUint> for RealExpr {
    fn from(n: BigUint) -> Self {
        RealExpr::Int(n.into())
    }
}

impl From<BigRational> for RealExpr {
    fn from(r: BigRational) -> Self {
        RealExpr::Rat(r)
    }
}

impl From<ConstantId> for RealExpr {
    fn from(id: ConstantId) -> Self {
        RealExpr::Const(id)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $variant:ident) => {
        impl<T: Into<RealExpr>> $tr<T> for RealExpr {
            type Output = RealExpr;
            fn $method(self, rhs: T) -> RealExpr {
                RealExpr::$variant(Arc::new(self), Arc::new(rhs.into()))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for RealExpr {
    type Output = RealExpr;
    fn neg(self) -> RealExpr {
        RealExpr::Neg(Arc::new(self))
    }
}

impl fmt::Display for RealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealExpr::Int(n) => write!(f, "{n}"),
            RealExpr::Rat(r) => write!(f, "({r})"),
            RealExpr::Const(id) => write!(f, "{id}"),
            RealExpr::Pi => write!(f, "pi"),
            RealExpr::Add(a, b) => write!(f, "({a} + {b})"),
            RealExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            RealExpr::Mul(a, b) => write!(f, "{a}*{b}"),
            RealExpr::Div(a, b) => write!(f, "{a}/{b}"),
            RealExpr::Neg(a) => write!(f, "-{a}"),
            RealExpr::Sqrt(a) => write!(f, "sqrt({a})"),
            RealExpr::Ln(a) => write!(f, "ln({a})"),
            RealExpr::Log2(a) => write!(f, "log2({a})"),
            RealExpr::LogBase(a, p) => write!(f, "log_{p}({a})"),
            RealExpr::Pow2(a) => write!(f, "2^({a})"),
        }
    }
}
