use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::poly::{Monomial, Poly};
use super::rational::RationalNumber;
use super::symbol::Symbol;

/// Canonical rational function: an expanded numerator over a product of
/// primitive denominator factors.
///
/// Every denominator factor is either a single variable or a non-monomial
/// primitive polynomial with positive leading coefficient and no monomial
/// content. No factor divides the numerator. A zero numerator has an empty
/// denominator.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatFn {
    num: Poly,
    den: BTreeMap<Poly, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("division by zero")]
pub struct ZeroDivisor;

impl RatFn {
    pub fn from_poly(p: Poly) -> RatFn {
        RatFn { num: p, den: BTreeMap::new() }
    }

    pub fn constant(c: RationalNumber) -> RatFn {
        RatFn::from_poly(Poly::constant(c))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&Poly, u32)> {
        self.den.iter().map(|(f, &m)| (f, m))
    }

    pub fn denominator(&self) -> Poly {
        self.den.iter().fold(Poly::one(), |acc, (f, &m)| acc.mul(&f.pow(m)))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn constant_value(&self) -> Option<RationalNumber> {
        if self.den.is_empty() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.num.contains(sym) || self.den.keys().any(|f| f.contains(sym))
    }

    /// Builds `num / (den factors)` from raw parts and normalizes.
    fn build(mut num: Poly, factors: Vec<(Poly, u32)>) -> RatFn {
        let mut den = BTreeMap::new();
        for (f, m) in factors {
            let scale = insert_factor(&mut den, &f, m);
            num = num.scale(&scale);
        }
        let mut r = RatFn { num, den };
        r.cancel();
        r
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut out = BTreeMap::new();
        for (f, mut m) in std::mem::take(&mut self.den) {
            while m > 0 && may_divide(&f, &self.num) {
                match self.num.exact_div(&f) {
                    Some(q) => {
                        self.num = q;
                        m -= 1;
                    }
                    None => break,
                }
            }
            if m > 0 {
                out.insert(f, m);
            }
        }
        self.den = out;
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut lcm = self.den.clone();
        for (f, &m) in &other.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |r: &RatFn| {
            lcm.iter().fold(r.num.clone(), |acc, (f, &m)| {
                let have = r.den.get(f).copied().unwrap_or(0);
                if m > have {
                    acc.mul(&f.pow(m - have))
                } else {
                    acc
                }
            })
        };
        let num = lift(self).add(&lift(other));
        let mut r = RatFn { num, den: lcm };
        r.cancel();
        r
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        if self.is_zero() || other.is_zero() {
            return RatFn::default();
        }
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        let mut r = RatFn { num: self.num.mul(&other.num), den };
        r.cancel();
        r
    }

    pub fn recip(&self) -> Result<RatFn, ZeroDivisor> {
        if self.is_zero() {
            return Err(ZeroDivisor);
        }
        Ok(RatFn::build(self.denominator(), vec![(self.num.clone(), 1)]))
    }

    pub fn div(&self, other: &RatFn) -> Result<RatFn, ZeroDivisor> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, exp: i32) -> Result<RatFn, ZeroDivisor> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(RatFn {
            num: base.num.pow(e),
            den: base.den.iter().map(|(f, &m)| (f.clone(), m * e)).filter(|(_, m)| *m > 0).collect(),
        })
    }

    pub fn eval(&self, bindings: &HashMap<Symbol, RationalNumber>) -> Result<Option<RationalNumber>, Symbol> {
        let n = self.num.eval(bindings)?;
        let d = self.denominator().eval(bindings)?;
        Ok(n.checked_div(&d))
    }
}

/// Cheap necessary condition for `f | num`.
fn may_divide(f: &Poly, num: &Poly) -> bool {
    f.symbols().into_iter().all(|s| num.degree_in(s) >= f.degree_in(s))
        && num.total_degree() >= f.total_degree()
}

/// Adds `f^m` to the factored denominator and returns the scalar the
/// numerator must be multiplied by.
fn insert_factor(den: &mut BTreeMap<Poly, u32>, f: &Poly, m: u32) -> RationalNumber {
    let (content, prim) = f.primitive();
    let scale = content.pow(-(m as i32)).expect("nonzero factor");
    if m == 0 {
        return RationalNumber::one();
    }
    // Pull out the monomial gcd of all terms, one variable per factor.
    let syms = prim.symbols();
    let mut mono = Monomial::one();
    for s in syms {
        let e = prim.terms().map(|(t, _)| t.exponent(s)).min().unwrap_or(0);
        if e > 0 {
            mono = mono.mul(&Monomial::var(s, e));
        }
    }
    let rest = if mono.is_one() {
        prim
    } else {
        prim.exact_div(&Poly::term(mono.clone(), RationalNumber::one())).expect("monomial content")
    };
    for &(s, e) in mono.factors() {
        *den.entry(Poly::var(s)).or_insert(0) += e * m;
    }
    if !rest.is_constant() {
        let (c2, rest) = rest.primitive();
        debug_assert!(c2.is_one());
        *den.entry(rest).or_insert(0) += m;
    }
    scale
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (i, (p, m)) in self.den.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *m == 1 {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})^{m}")?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> RatFn {
        RatFn::from_poly(Poly::var(Symbol::new(name)))
    }

    #[test]
    fn common_factor_cancels() {
        let x = v("x");
        let y = v("y");
        let lhs = x.div(&x.mul(&y)).unwrap();
        let rhs = RatFn::constant(1.into()).div(&y).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sums_over_shared_denominators() {
        let x = v("x");
        let one = RatFn::constant(1.into());
        let a = one.div(&x.add(&one)).unwrap();
        let b = x.div(&x.add(&one)).unwrap();
        assert_eq!(a.add(&b), one);
    }

    #[test]
    fn scaled_factors_merge() {
        let y = v("y");
        let two = RatFn::constant(2.into());
        let a = RatFn::constant(1.into()).div(&two.sub(&y)).unwrap();
        let b = RatFn::constant((-2).into()).div(&y.mul(&two).sub(&two.mul(&two))).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.denominator_factors().count(), 1);
    }

    #[test]
    fn reciprocal_of_zero_fails() {
        assert!(RatFn::default().recip().is_err());
        assert!(v("x").pow(-1).is_ok());
    }
}
