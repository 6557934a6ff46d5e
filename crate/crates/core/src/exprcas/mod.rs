//! Exact computer algebra over multivariate rational functions.
//!
//! Expressions are trees built by [`parse_expr`] or by operator overloading
//! on [`RatExpr`]. Equality, coefficient extraction and simplification all
//! go through the canonical form in [`RatFn`].

mod canon;
mod expr;
mod parse;
mod poly;
mod rational;
mod symbol;

pub use canon::{RatFn, ZeroDivisor};
pub use expr::{
    bindings, eval_rational, expr_equal, poly_coeffs_in, substitute, substitute_all, CanonError,
    CoeffError, EvalError, Node, RatExpr,
};
pub use parse::{parse_expr, ParseError, ParseErrorKind, MAX_EXPONENT};
pub use poly::{Monomial, Poly};
pub use rational::{ParseRationalError, RationalNumber};
pub use symbol::Symbol;

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RatExpr {
        parse_expr(s).unwrap()
    }

    fn r(a: i64, b: i64) -> RationalNumber {
        RationalNumber::frac(a, b)
    }

    #[test]
    fn parse_and_evaluate_a() {
        let a = p("(2/n)*(1+x)^2 - 2*x^2");
        let v = eval_rational(&a, &bindings([("n", r(2, 1)), ("x", r(0, 1))])).unwrap();
        assert_eq!(v, r(1, 1));
        let v = eval_rational(&a, &bindings([("n", r(6, 1)), ("x", r(-1, 1))])).unwrap();
        assert_eq!(v, r(-2, 1));
        let a0 = substitute(&a, Symbol::new("x"), &RatExpr::int(0));
        assert!(expr_equal(&a0, &p("2/n")));
    }

    #[test]
    fn atom_parses_to_variable() {
        assert!(matches!(p("x").node(), Node::Var(s) if &*s.name() == "x"));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let e = parse_expr("1/(2-y").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(e.offset, 6);
        let e = parse_expr("x + $").unwrap_err();
        assert_eq!(e, ParseError { kind: ParseErrorKind::UnknownChar('$'), offset: 4 });
        let e = parse_expr("x^99999999999999999999").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ExponentOverflow);
        assert!(parse_expr("x y").is_err());
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn pole_is_reported() {
        let e = p("1/(2-y)");
        let err = eval_rational(&e, &bindings([("y", r(2, 1))])).unwrap_err();
        assert!(matches!(err, EvalError::DivisionByZero(ref s) if s.contains('y')));
        let err = eval_rational(&e, &bindings::<[(&str, RationalNumber); 0], &str>([])).unwrap_err();
        assert_eq!(err, EvalError::Unbound("y".into()));
    }

    #[test]
    fn equality_examples() {
        assert!(expr_equal(&p("(1+x)^2"), &p("1+2*x+x^2")));
        assert!(expr_equal(&p("x/(x*y)"), &p("1/y")));
        assert!(!expr_equal(&p("x"), &p("y")));
        assert!(!expr_equal(&p("1/(x-x)"), &p("1")));
    }

    #[test]
    fn substitution_examples() {
        let g = Symbol::new("gamma");
        let e = substitute(&p("1+q*gamma/2"), g, &RatExpr::int(-1));
        assert!(expr_equal(&e, &p("1-q/2")));
        let e = substitute(&p("k+l"), Symbol::new("k"), &p("-(1-q/2)*beta"));
        assert!(expr_equal(&e, &p("l-(1-q/2)*beta")));
        let x = p("x");
        let same = substitute(&x, Symbol::new("x"), &x);
        assert!(expr_equal(&same, &x));
        let untouched = p("y+1");
        let s = substitute(&untouched, Symbol::new("x"), &RatExpr::int(3));
        assert_eq!(s.to_string(), untouched.to_string());
    }

    #[test]
    fn coefficient_extraction() {
        let rho = Symbol::new("rho");
        let cs = poly_coeffs_in(&p("(1+rho)^2"), rho, 2).unwrap();
        let vals: Vec<_> = cs.iter().map(|c| c.canonical().unwrap().constant_value().unwrap()).collect();
        assert_eq!(vals, vec![r(1, 1), r(2, 1), r(1, 1)]);
        assert!(matches!(poly_coeffs_in(&p("1/(1+rho)"), rho, 3), Err(CoeffError::NotPolynomial(_))));
        assert!(matches!(
            poly_coeffs_in(&p("rho^4"), rho, 3),
            Err(CoeffError::DegreeExceeded { found: 4, .. })
        ));
        let cs = poly_coeffs_in(&p("rho^2*x/(1+y)"), rho, 3).unwrap();
        assert!(expr_equal(&cs[2], &p("x/(1+y)")));
        assert!(expr_equal(&cs[3], &RatExpr::int(0)));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let e = p("(x^2-1)/(2*x-2) + 3/(4*y) - x*y/(y^2 + x*y)");
        let c1 = e.canonical().unwrap().clone();
        let c2 = e.canon().unwrap().canonical().unwrap().clone();
        assert_eq!(c1, c2);
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "-x^2 - 3/4*y + (x-1)^-2",
            "2/3^2",
            "a/(b*c) - (-2)*d",
            "1/(2/3) + (1/2)^3 - x/(y^2)",
        ] {
            let e = p(s);
            let back = p(&e.to_string());
            assert!(expr_equal(&e, &back), "{s} -> {e}");
        }
        assert_eq!(
            eval_rational(&p("2/3^2"), &Default::default()).unwrap(),
            r(4, 9)
        );
    }
}
