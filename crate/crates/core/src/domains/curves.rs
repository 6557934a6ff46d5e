use crate::exprcas::RationalNumber;

use super::DomainError;

fn need_n3(n: u32) -> Result<(), DomainError> {
    if n < 3 {
        return Err(DomainError::Precondition(format!("n = {n} must be at least 3")));
    }
    Ok(())
}

/// `l_V(n,q) = (2-q)^2 / ((1-q)(n-2))`: radial solutions exist iff `l >= l_V`.
pub fn curve_v(n: u32, q: f64) -> Result<f64, DomainError> {
    need_n3(n)?;
    if !(0.0..1.0).contains(&q) {
        return Err(DomainError::Precondition(format!("q = {q} must lie in [0, 1)")));
    }
    Ok((2.0 - q).powi(2) / ((1.0 - q) * (n as f64 - 2.0)))
}

/// Quadratic-in-`p` coefficients `(a, b, c)` of `G(p, q)`.
fn g_coeffs(n: f64, q: f64) -> (f64, f64, f64) {
    (
        (n - 1.0).powi(2) * q + n - 2.0,
        n * (n - 1.0) * q * q - (n * n + n - 1.0) * q - n - 2.0,
        -n * q * q,
    )
}

pub fn g_bgv(n: u32, p: f64, q: f64) -> Result<f64, DomainError> {
    need_n3(n)?;
    let (a, b, c) = g_coeffs(n as f64, q);
    Ok(a * p * p + b * p + c)
}

/// Exact `G(p, q)`.
pub fn g_bgv_exact(n: u32, p: &RationalNumber, q: &RationalNumber) -> Result<RationalNumber, DomainError> {
    need_n3(n)?;
    let n = RationalNumber::from(n as i64);
    let one = RationalNumber::one();
    let two = RationalNumber::from(2);
    let n1 = &n - &one;
    let a = &(&(&n1 * &n1) * q) + &(&n - &two);
    let b = &(&(&(&(&n * &n1) * q) * q) - &(&(&(&(&n * &n) + &n) - &one) * q)) - &(&n + &two);
    let c = -(&(&n * q) * q);
    Ok(&(&(&(&a * p) * p) + &(&b * p)) + &c)
}

fn h_coeffs(n: f64, q: f64) -> (f64, f64, f64) {
    let m = n - 2.0;
    (1.0, (n - 1.0) / m * q - (n * n - 3.0) / (m * m), (1.0 - (n - 1.0) * q) / (m * m))
}

pub fn h_mawu(n: u32, p: f64, q: f64) -> Result<f64, DomainError> {
    need_n3(n)?;
    let (a, b, c) = h_coeffs(n as f64, q);
    Ok(a * p * p + b * p + c)
}

/// Real roots of `a x^2 + b x + c`, ascending.
pub fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a == 0.0 {
        return if b == 0.0 { vec![] } else { vec![-c / b] };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return vec![];
    }
    // cancellation-free form
    let s = disc.sqrt();
    let t = -0.5 * (b + b.signum() * s);
    if t == 0.0 {
        return vec![0.0];
    }
    let mut r = vec![t / a, c / t];
    r.sort_by(f64::total_cmp);
    r.dedup();
    r
}

/// Roots in `p` of `G(., q) = 0`.
pub fn g_roots(n: u32, q: f64) -> Result<Vec<f64>, DomainError> {
    need_n3(n)?;
    let (a, b, c) = g_coeffs(n as f64, q);
    Ok(quadratic_roots(a, b, c))
}

/// Roots in `p` of `H(., q) = 0`.
pub fn h_roots(n: u32, q: f64) -> Result<Vec<f64>, DomainError> {
    need_n3(n)?;
    let (a, b, c) = h_coeffs(n as f64, q);
    Ok(quadratic_roots(a, b, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_v_examples() {
        assert_eq!(curve_v(3, 0.0).unwrap(), 4.0);
        assert_eq!(curve_v(6, 0.0).unwrap(), 1.0);
        assert!((curve_v(4, 0.5).unwrap() - 2.25).abs() < 1e-15);
        assert!(curve_v(3, 1.0).is_err());
        assert!(curve_v(2, 0.5).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_bgv(6, 2.0, 0.0).unwrap(), 0.0);
        assert_eq!(g_bgv(6, 1.0, 0.0).unwrap(), -4.0);
        assert_eq!(g_bgv(6, 0.0, 1.0).unwrap(), -6.0);
    }

    #[test]
    fn g_zero_slice_roots_are_exact() {
        let zero = RationalNumber::zero();
        for n in 3..=12u32 {
            let ps = RationalNumber::frac(n as i64 + 2, n as i64 - 2);
            assert!(g_bgv_exact(n, &zero, &zero).unwrap().is_zero());
            assert!(g_bgv_exact(n, &ps, &zero).unwrap().is_zero());
            // only two roots of a quadratic: a third point is nonzero
            assert!(!g_bgv_exact(n, &RationalNumber::one(), &zero).unwrap().is_zero());
            let r = g_roots(n, 0.0).unwrap();
            assert_eq!(r.len(), 2);
            assert!(r[0].abs() < 1e-14 && (r[1] - (n as f64 + 2.0) / (n as f64 - 2.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_mawu(3, 0.0, 1.0).unwrap(), -1.0);
        assert_eq!(h_mawu(3, 1.0, 0.5).unwrap(), -4.0);
        for n in 3..9u32 {
            let m = (n - 2) as f64;
            assert!((h_mawu(n, 0.0, 0.0).unwrap() - 1.0 / (m * m)).abs() < 1e-15);
        }
    }

    #[test]
    fn roots_solve_quadratic() {
        for n in [3u32, 4, 6, 9] {
            for q in [0.1, 0.7, 1.3] {
                for p in h_roots(n, q).unwrap() {
                    assert!(h_mawu(n, p, q).unwrap().abs() < 1e-10);
                }
                for p in g_roots(n, q).unwrap() {
                    assert!(g_bgv(n, p, q).unwrap().abs() < 1e-9);
                }
            }
        }
    }
}
