use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::RationalNumber;
use super::symbol::Symbol;

/// Power product with exponents sorted by symbol; zero exponents never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(sym: Symbol, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(sym, exp)])
        }
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, sym: Symbol) -> u32 {
        self.0.iter().find(|(s, _)| *s == sym).map_or(0, |&(_, e)| e)
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when every exponent of `other` fits.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(s, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < s {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == s {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((s, e - f)),
                }
            } else {
                out.push((s, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    fn without(&self, sym: Symbol) -> Monomial {
        Monomial(self.0.iter().copied().filter(|(s, _)| *s != sym).collect())
    }
}

/// Graded lexicographic: total degree first, then the earliest symbol with
/// differing exponent decides.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(sa, ea)), Some(&(sb, eb))) => match sa.cmp(&sb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored; the last entry is the leading term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, RationalNumber>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: RationalNumber) -> Poly {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one() -> Poly {
        Poly::constant(RationalNumber::one())
    }

    pub fn var(sym: Symbol) -> Poly {
        Poly::term(Monomial::var(sym, 1), RationalNumber::one())
    }

    pub fn term(m: Monomial, c: RationalNumber) -> Poly {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &RationalNumber)> {
        self.terms.iter()
    }

    pub fn constant_value(&self) -> Option<RationalNumber> {
        match self.terms.len() {
            0 => Some(RationalNumber::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn leading(&self) -> Option<(&Monomial, &RationalNumber)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map_or(0, |(m, _)| m.degree())
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.terms.keys().any(|m| m.exponent(sym) > 0)
    }

    pub fn degree_in(&self, sym: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exponent(sym)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: RationalNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &RationalNumber) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, k: &RationalNumber) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(a, c)| (a.mul(m), c * k)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut out = Poly::zero();
        for (m, c) in &small.terms {
            for (a, b) in &large.terms {
                out.add_term(m.mul(a), c * b);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(&dm)?;
            let c = rc / &dc;
            rem = rem.sub(&d.mul_term(&m, &c));
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Splits into `content * primitive`, where the primitive part has
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn primitive(&self) -> (RationalNumber, Poly) {
        let Some((_, lc)) = self.leading() else {
            return (RationalNumber::one(), Poly::zero());
        };
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let mut content = RationalNumber::new(g, l).expect("nonzero lcm");
        if lc.is_negative() {
            content = -content;
        }
        let prim = self.scale(&content.recip().expect("nonzero content"));
        (content, prim)
    }

    /// Coefficients of `sym^0, sym^1, ...` as polynomials in the other symbols.
    pub fn coeffs_in(&self, sym: Symbol) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(sym) as usize + 1];
        for (m, c) in &self.terms {
            out[m.exponent(sym) as usize].add_term(m.without(sym), c.clone());
        }
        out
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut v: Vec<Symbol> =
            self.terms.keys().flat_map(|m| m.0.iter().map(|&(s, _)| s)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Evaluates at the bindings; `Err` names the first unbound symbol.
    pub fn eval(&self, bindings: &HashMap<Symbol, RationalNumber>) -> Result<RationalNumber, Symbol> {
        let mut acc = RationalNumber::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(s, e) in &m.0 {
                let v = bindings.get(&s).ok_or(s)?;
                t = &t * &v.pow(e as i32).expect("non-negative exponent");
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, bindings: &HashMap<Symbol, f64>) -> Result<f64, Symbol> {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64();
            for &(s, e) in &m.0 {
                t *= bindings.get(&s).ok_or(s)?.powi(e as i32);
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Poly {
        Poly::var(Symbol::new(name))
    }

    #[test]
    fn grlex_order() {
        let x = Symbol::new("x");
        let y = Symbol::new("y");
        let x2 = Monomial::var(x, 2);
        let xy = Monomial::var(x, 1).mul(&Monomial::var(y, 1));
        let y2 = Monomial::var(y, 2);
        let x3 = Monomial::var(x, 3);
        assert!(x2 > xy && xy > y2 && x3 > x2);
        assert!(Monomial::var(y, 1) > Monomial::one());
    }

    #[test]
    fn binomial_and_exact_division() {
        let x = v("x");
        let y = v("y");
        let s = x.add(&y);
        let sq = s.pow(2);
        let expected = x.mul(&x).add(&x.mul(&y).scale(&RationalNumber::from(2))).add(&y.mul(&y));
        assert_eq!(sq, expected);
        assert_eq!(sq.exact_div(&s).unwrap(), s);
        assert!(sq.add(&Poly::one()).exact_div(&s).is_none());
    }

    #[test]
    fn primitive_part_is_normalized() {
        let p = v("x").scale(&RationalNumber::frac(-4, 3)).add(&Poly::constant(RationalNumber::frac(2, 9)));
        let (c, prim) = p.primitive();
        assert_eq!(prim.scale(&c), p);
        assert!(prim.leading().unwrap().1.is_positive());
        assert_eq!(c, RationalNumber::frac(-2, 9));
    }

    #[test]
    fn coefficients_in_a_variable() {
        let r = v("rho");
        let p = Poly::one().add(&r).pow(2);
        let cs = p.coeffs_in(Symbol::new("rho"));
        let vals: Vec<_> = cs.iter().map(|c| c.constant_value().unwrap()).collect();
        assert_eq!(vals, vec![1.into(), 2.into(), 1.into()]);
    }
}
