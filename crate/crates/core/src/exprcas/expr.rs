use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use super::canon::RatFn;
use super::poly::Poly;
use super::rational::RationalNumber;
use super::symbol::Symbol;

#[derive(Debug)]
pub enum Node {
    Const(RationalNumber),
    Var(Symbol),
    Sum(Vec<RatExpr>),
    Product(Vec<RatExpr>),
    Pow(RatExpr, i32),
    Quotient(RatExpr, RatExpr),
}

struct Inner {
    node: Node,
    canon: OnceLock<Result<RatFn, CanonError>>,
}

/// Immutable expression tree with a lazily computed canonical form.
/// Cloning is cheap and subtrees are shared.
#[derive(Clone)]
pub struct RatExpr(Arc<Inner>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CanonError {
    #[error("division by zero in `{0}`")]
    DivisionByZero(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("division by zero: `{0}` evaluates to 0")]
    DivisionByZero(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("expression is not polynomial in `{0}`")]
    NotPolynomial(String),
    #[error("degree {found} in `{var}` exceeds {max}")]
    DegreeExceeded { var: String, found: u32, max: u32 },
    #[error(transparent)]
    Canon(#[from] CanonError),
}

impl RatExpr {
    fn from_node(node: Node) -> RatExpr {
        RatExpr(Arc::new(Inner { node, canon: OnceLock::new() }))
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn constant(c: RationalNumber) -> RatExpr {
        RatExpr::from_node(Node::Const(c))
    }

    pub fn int(i: i64) -> RatExpr {
        RatExpr::constant(i.into())
    }

    pub fn frac(a: i64, b: i64) -> RatExpr {
        RatExpr::constant(RationalNumber::frac(a, b))
    }

    pub fn var(name: &str) -> RatExpr {
        RatExpr::from_node(Node::Var(Symbol::new(name)))
    }

    pub fn symbol(sym: Symbol) -> RatExpr {
        RatExpr::from_node(Node::Var(sym))
    }

    pub fn sum(terms: Vec<RatExpr>) -> RatExpr {
        match terms.len() {
            0 => RatExpr::int(0),
            1 => terms.into_iter().next().expect("one term"),
            _ => RatExpr::from_node(Node::Sum(terms)),
        }
    }

    pub fn product(factors: Vec<RatExpr>) -> RatExpr {
        match factors.len() {
            0 => RatExpr::int(1),
            1 => factors.into_iter().next().expect("one factor"),
            _ => RatExpr::from_node(Node::Product(factors)),
        }
    }

    pub fn quotient(num: RatExpr, den: RatExpr) -> RatExpr {
        RatExpr::from_node(Node::Quotient(num, den))
    }

    pub fn pow(&self, exp: i32) -> RatExpr {
        RatExpr::from_node(Node::Pow(self.clone(), exp))
    }

    pub fn as_const(&self) -> Option<&RationalNumber> {
        match self.node() {
            Node::Const(c) => Some(c),
            _ => None,
        }
    }

    pub fn from_poly(p: &Poly) -> RatExpr {
        let terms = p
            .terms()
            .rev()
            .map(|(m, c)| {
                let mut fs = Vec::new();
                if !c.is_one() || m.is_one() {
                    fs.push(RatExpr::constant(c.clone()));
                }
                for &(s, e) in m.factors() {
                    let v = RatExpr::symbol(s);
                    fs.push(if e == 1 { v } else { v.pow(e as i32) });
                }
                RatExpr::product(fs)
            })
            .collect();
        RatExpr::sum(terms)
    }

    pub fn from_ratfn(r: &RatFn) -> RatExpr {
        let num = RatExpr::from_poly(r.numerator());
        if r.is_polynomial() {
            return num;
        }
        let den = RatExpr::from_poly(&r.denominator());
        RatExpr::quotient(num, den)
    }

    /// Canonical rational function, computed once per node.
    pub fn canonical(&self) -> Result<&RatFn, CanonError> {
        self.0.canon.get_or_init(|| self.compute_canon()).as_ref().map_err(Clone::clone)
    }

    fn compute_canon(&self) -> Result<RatFn, CanonError> {
        let zero = || CanonError::DivisionByZero(self.to_string());
        Ok(match self.node() {
            Node::Const(c) => RatFn::constant(c.clone()),
            Node::Var(s) => RatFn::from_poly(Poly::var(*s)),
            Node::Sum(ts) => {
                let mut acc = RatFn::default();
                for t in ts {
                    acc = acc.add(t.canonical()?);
                }
                acc
            }
            Node::Product(fs) => {
                let mut acc = RatFn::constant(RationalNumber::one());
                for f in fs {
                    acc = acc.mul(f.canonical()?);
                }
                acc
            }
            Node::Pow(b, e) => b.canonical()?.pow(*e).map_err(|_| zero())?,
            Node::Quotient(a, b) => a.canonical()?.div(b.canonical()?).map_err(|_| zero())?,
        })
    }

    /// Tree of the canonical form.
    pub fn canon(&self) -> Result<RatExpr, CanonError> {
        Ok(RatExpr::from_ratfn(self.canonical()?))
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_symbols(&self, out: &mut Vec<Symbol>) {
        match self.node() {
            Node::Const(_) => {}
            Node::Var(s) => out.push(*s),
            Node::Sum(xs) | Node::Product(xs) => xs.iter().for_each(|x| x.collect_symbols(out)),
            Node::Pow(b, _) => b.collect_symbols(out),
            Node::Quotient(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }

    fn is_negated(&self) -> Option<RatExpr> {
        match self.node() {
            Node::Const(c) if c.is_negative() => Some(RatExpr::constant(-c)),
            Node::Product(fs) => match fs[0].node() {
                Node::Const(c) if c.is_negative() => {
                    let mut rest = fs.clone();
                    if c == &RationalNumber::from(-1) {
                        rest.remove(0);
                    } else {
                        rest[0] = RatExpr::constant(-c);
                    }
                    Some(RatExpr::product(rest))
                }
                _ => None,
            },
            _ => None,
        }
    }

    /// Precedence contexts: 0 sum term, 1 product factor, 2 divisor, 3 power base.
    fn write_prec(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        match self.node() {
            Node::Const(c) => {
                let plain = c.is_integer() && !c.is_negative();
                if plain || ctx == 0 {
                    write!(f, "{c}")
                } else {
                    write!(f, "({c})")
                }
            }
            Node::Var(s) => write!(f, "{s}"),
            Node::Sum(ts) => {
                if ctx > 0 {
                    f.write_str("(")?;
                }
                for (i, t) in ts.iter().enumerate() {
                    match (i, t.is_negated()) {
                        (0, _) => t.write_prec(f, 0)?,
                        (_, Some(neg)) => {
                            f.write_str(" - ")?;
                            neg.write_prec(f, 1)?;
                        }
                        (_, None) => {
                            f.write_str(" + ")?;
                            t.write_prec(f, 0)?;
                        }
                    }
                }
                if ctx > 0 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Node::Product(fs) => {
                if ctx >= 2 {
                    f.write_str("(")?;
                }
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    x.write_prec(f, 1)?;
                }
                if ctx >= 2 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Node::Quotient(a, b) => {
                if ctx >= 2 {
                    f.write_str("(")?;
                }
                a.write_prec(f, 1)?;
                f.write_str("/")?;
                match b.node() {
                    Node::Var(_) => b.write_prec(f, 2)?,
                    Node::Const(c) if c.is_integer() && c.is_positive() => b.write_prec(f, 2)?,
                    _ => {
                        f.write_str("(")?;
                        b.write_prec(f, 0)?;
                        f.write_str(")")?;
                    }
                }
                if ctx >= 2 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Node::Pow(b, e) => {
                if ctx >= 3 {
                    f.write_str("(")?;
                }
                b.write_prec(f, 3)?;
                write!(f, "^{e}")?;
                if ctx >= 3 {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}

impl fmt::Debug for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatExpr({self})")
    }
}

/// Builds a binding map from `(name, value)` pairs.
pub fn bindings<I, S>(pairs: I) -> HashMap<Symbol, RationalNumber>
where
    I: IntoIterator<Item = (S, RationalNumber)>,
    S: AsRef<str>,
{
    pairs.into_iter().map(|(k, v)| (Symbol::new(k.as_ref()), v)).collect()
}

/// Exact value of `e`, evaluated on the tree as written.
pub fn eval_rational(
    e: &RatExpr,
    bindings: &HashMap<Symbol, RationalNumber>,
) -> Result<RationalNumber, EvalError> {
    Ok(match e.node() {
        Node::Const(c) => c.clone(),
        Node::Var(s) => bindings.get(s).cloned().ok_or_else(|| EvalError::Unbound(s.name().to_string()))?,
        Node::Sum(ts) => {
            let mut acc = RationalNumber::zero();
            for t in ts {
                acc = &acc + &eval_rational(t, bindings)?;
            }
            acc
        }
        Node::Product(fs) => {
            let mut acc = RationalNumber::one();
            for x in fs {
                acc = &acc * &eval_rational(x, bindings)?;
            }
            acc
        }
        Node::Pow(b, k) => eval_rational(b, bindings)?
            .pow(*k)
            .ok_or_else(|| EvalError::DivisionByZero(b.to_string()))?,
        Node::Quotient(a, b) => {
            let num = eval_rational(a, bindings)?;
            let den = eval_rational(b, bindings)?;
            num.checked_div(&den).ok_or_else(|| EvalError::DivisionByZero(b.to_string()))?
        }
    })
}

/// True iff `a - b` canonicalizes to zero. An expression that cannot be
/// canonicalized is equal to nothing.
pub fn expr_equal(a: &RatExpr, b: &RatExpr) -> bool {
    match (a.canonical(), b.canonical()) {
        (Ok(x), Ok(y)) => x.sub(y).is_zero(),
        _ => false,
    }
}

/// Replaces every occurrence of `var`. Untouched subtrees are shared.
pub fn substitute(e: &RatExpr, var: Symbol, replacement: &RatExpr) -> RatExpr {
    substitute_all(e, &HashMap::from([(var, replacement.clone())]))
}

/// Simultaneous substitution of several variables.
pub fn substitute_all(e: &RatExpr, map: &HashMap<Symbol, RatExpr>) -> RatExpr {
    fn go(e: &RatExpr, map: &HashMap<Symbol, RatExpr>, memo: &mut HashMap<usize, RatExpr>) -> RatExpr {
        let key = Arc::as_ptr(&e.0) as usize;
        if let Some(r) = memo.get(&key) {
            return r.clone();
        }
        let out = match e.node() {
            Node::Const(_) => e.clone(),
            Node::Var(s) => map.get(s).cloned().unwrap_or_else(|| e.clone()),
            Node::Sum(ts) => rebuild(e, ts, map, memo, RatExpr::sum),
            Node::Product(fs) => rebuild(e, fs, map, memo, RatExpr::product),
            Node::Pow(b, k) => {
                let nb = go(b, map, memo);
                if Arc::ptr_eq(&nb.0, &b.0) {
                    e.clone()
                } else {
                    nb.pow(*k)
                }
            }
            Node::Quotient(a, b) => {
                let (na, nb) = (go(a, map, memo), go(b, map, memo));
                if Arc::ptr_eq(&na.0, &a.0) && Arc::ptr_eq(&nb.0, &b.0) {
                    e.clone()
                } else {
                    RatExpr::quotient(na, nb)
                }
            }
        };
        memo.insert(key, out.clone());
        out
    }
    fn rebuild(
        e: &RatExpr,
        xs: &[RatExpr],
        map: &HashMap<Symbol, RatExpr>,
        memo: &mut HashMap<usize, RatExpr>,
        make: fn(Vec<RatExpr>) -> RatExpr,
    ) -> RatExpr {
        let new: Vec<RatExpr> = xs.iter().map(|x| go(x, map, memo)).collect();
        if new.iter().zip(xs).all(|(a, b)| Arc::ptr_eq(&a.0, &b.0)) {
            e.clone()
        } else {
            make(new)
        }
    }
    go(e, map, &mut HashMap::new())
}

/// Coefficients `c_0..=c_max_deg` of `e` viewed as a polynomial in `var`.
pub fn poly_coeffs_in(e: &RatExpr, var: Symbol, max_deg: u32) -> Result<Vec<RatExpr>, CoeffError> {
    let r = e.canonical()?;
    if r.denominator_factors().any(|(f, _)| f.contains(var)) {
        return Err(CoeffError::NotPolynomial(var.name().to_string()));
    }
    let found = r.numerator().degree_in(var);
    if found > max_deg {
        return Err(CoeffError::DegreeExceeded { var: var.name().to_string(), found, max: max_deg });
    }
    let den = RatExpr::from_ratfn(&{
        let one = RatFn::constant(RationalNumber::one());
        one.div(&RatFn::from_poly(r.denominator())).expect("nonzero denominator")
    });
    let mut cs = r.numerator().coeffs_in(var);
    cs.resize(max_deg as usize + 1, Poly::zero());
    Ok(cs
        .iter()
        .map(|c| {
            if c.is_zero() {
                RatExpr::int(0)
            } else if r.is_polynomial() {
                RatExpr::from_poly(c)
            } else {
                RatExpr::from_poly(c) * den.clone()
            }
        })
        .collect())
}

macro_rules! op {
    ($tr:ident, $m:ident, $build:expr) => {
        impl $tr for RatExpr {
            type Output = RatExpr;
            fn $m(self, rhs: RatExpr) -> RatExpr {
                ($build)(self, rhs)
            }
        }
        impl $tr<&RatExpr> for &RatExpr {
            type Output = RatExpr;
            fn $m(self, rhs: &RatExpr) -> RatExpr {
                ($build)(self.clone(), rhs.clone())
            }
        }
        impl $tr<&RatExpr> for RatExpr {
            type Output = RatExpr;
            fn $m(self, rhs: &RatExpr) -> RatExpr {
                ($build)(self, rhs.clone())
            }
        }
        impl $tr<RatExpr> for &RatExpr {
            type Output = RatExpr;
            fn $m(self, rhs: RatExpr) -> RatExpr {
                ($build)(self.clone(), rhs)
            }
        }
        impl $tr<i64> for &RatExpr {
            type Output = RatExpr;
            fn $m(self, rhs: i64) -> RatExpr {
                ($build)(self.clone(), RatExpr::int(rhs))
            }
        }
        impl $tr<&RatExpr> for i64 {
            type Output = RatExpr;
            fn $m(self, rhs: &RatExpr) -> RatExpr {
                ($build)(RatExpr::int(self), rhs.clone())
            }
        }
        impl $tr<i64> for RatExpr {
            type Output = RatExpr;
            fn $m(self, rhs: i64) -> RatExpr {
                ($build)(self, RatExpr::int(rhs))
            }
        }
        impl $tr<RatExpr> for i64 {
            type Output = RatExpr;
            fn $m(self, rhs: RatExpr) -> RatExpr {
                ($build)(RatExpr::int(self), rhs)
            }
        }
    };
}

op!(Add, add, |a: RatExpr, b: RatExpr| RatExpr::sum(vec![a, b]));
op!(Sub, sub, |a: RatExpr, b: RatExpr| RatExpr::sum(vec![a, -b]));
op!(Mul, mul, |a: RatExpr, b: RatExpr| RatExpr::product(vec![a, b]));
op!(Div, div, RatExpr::quotient);

impl Neg for RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        match self.node() {
            Node::Const(c) => RatExpr::constant(-c),
            _ => RatExpr::product(vec![RatExpr::int(-1), self]),
        }
    }
}

impl Neg for &RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        -self.clone()
    }
}

impl From<i64> for RatExpr {
    fn from(i: i64) -> RatExpr {
        RatExpr::int(i)
    }
}

impl From<RationalNumber> for RatExpr {
    fn from(c: RationalNumber) -> RatExpr {
        RatExpr::constant(c)
    }
}
