use crate::exprcas::{bindings, eval_rational, RationalNumber};

use super::{bundled_corpus, CoeffSystem, SystemName};

/// Parameters making all three reduced entries strictly positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub beta: RationalNumber,
    pub d: RationalNumber,
    pub sigma: RationalNumber,
    /// `S1, S2, S3` at the witness, exact.
    pub values: [RationalNumber; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("(n, p, q) lies outside the cases covered by the construction")]
    OutsideCases,
    #[error("no certified witness down to step 2^-30")]
    NotFound,
}

const MAX_HALVINGS: i32 = 30;

/// Exact `(S1, S2, S3)` of the reduced system.
pub fn reduced_values(
    n: i64,
    q: &RationalNumber,
    l: &RationalNumber,
    beta: &RationalNumber,
    d: &RationalNumber,
    sigma: &RationalNumber,
) -> [RationalNumber; 3] {
    let sys = CoeffSystem::from_corpus(bundled_corpus(), SystemName::SReduced).expect("bundled corpus is complete");
    let b = bindings([
        ("n", RationalNumber::from(n)),
        ("q", q.clone()),
        ("l", l.clone()),
        ("beta", beta.clone()),
        ("d", d.clone()),
        ("sigma", sigma.clone()),
    ]);
    let v: Vec<RationalNumber> =
        sys.entries.iter().map(|e| eval_rational(e, &b).expect("all reduced symbols bound")).collect();
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

fn certify(n: i64, q: &RationalNumber, l: &RationalNumber, beta: RationalNumber, d: RationalNumber, sigma: RationalNumber) -> Option<Witness> {
    let values = reduced_values(n, q, l, &beta, &d, &sigma);
    values.iter().all(RationalNumber::is_positive).then_some(Witness { beta, d, sigma, values })
}

/// `x0 - (x0/4) 2^-j`
fn approach(x0: &RationalNumber, j: i32) -> RationalNumber {
    let step = RationalNumber::frac(1, 4) * RationalNumber::from(2).pow(-j).expect("nonzero base");
    x0 - &(x0 * &step)
}

/// Certified search for `beta, d, sigma` with `S1, S2, S3 > 0`.
///
/// `n = 2` takes `sigma = d = 0`. For `n >= 3`, `d` is parametrised by
/// `theta = d (l - h beta)/h` with `h = 1 - q/2`, and
/// `sigma = (2 - n theta)/(2(n-1))`.
pub fn positivity_witness(n: i64, p: &RationalNumber, q: &RationalNumber) -> Result<Witness, WitnessError> {
    let zero = RationalNumber::zero();
    let one = RationalNumber::one();
    let two = RationalNumber::from(2);
    if n < 2 || q.is_negative() || q >= &two {
        return Err(WitnessError::OutsideCases);
    }
    let l = &(p + q) - &one;
    if n == 2 {
        let beta = (&(&two * &l) / &(&RationalNumber::from(3) - q)).max(zero.clone());
        return certify(n, q, &l, beta, zero.clone(), zero).ok_or(WitnessError::NotFound);
    }
    let nn = RationalNumber::from(n);
    let n1 = &nn - &one;
    let beta0 = &two / &(&nn - &two);
    let h = &one - &(q / &two);
    if l < beta0 {
        return Err(WitnessError::OutsideCases);
    }
    let sigma_of = |theta: &RationalNumber| &(&two - &(&nn * theta)) / &(&two * &n1);

    if q < &one {
        let l_v = &(&(&two - q) * &(&two - q)) / &(&(&one - q) * &(&nn - &two));
        if l >= l_v {
            return Err(WitnessError::OutsideCases);
        }
        let theta0 = &two / &(&nn - &(&n1 * q));
        for j in 0..=MAX_HALVINGS {
            let beta = approach(&beta0, j);
            let gap = &l - &(&h * &beta);
            if !gap.is_positive() {
                continue;
            }
            for i in 0..=MAX_HALVINGS {
                let theta = approach(&theta0, i);
                let d = &(&theta * &h) / &gap;
                if let Some(w) = certify(n, q, &l, beta.clone(), d, sigma_of(&theta)) {
                    return Ok(w);
                }
            }
        }
        return Err(WitnessError::NotFound);
    }

    for j in 0..=MAX_HALVINGS {
        let theta = &two - &(RationalNumber::frac(1, 2) * RationalNumber::from(2).pow(-j).expect("nonzero base"));
        let d = &(&theta * &h) / &l;
        if let Some(w) = certify(n, q, &l, zero.clone(), d, sigma_of(&theta)) {
            return Ok(w);
        }
    }
    Err(WitnessError::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> RationalNumber {
        RationalNumber::frac(a, b)
    }

    #[test]
    fn planar_case() {
        // q = 1/2, l = 2 means p = 5/2
        let w = positivity_witness(2, &r(5, 2), &r(1, 2)).unwrap();
        assert_eq!(w.beta, r(8, 5));
        assert!(w.d.is_zero() && w.sigma.is_zero());
        assert_eq!(w.values[1], r(2, 1));
        assert_eq!(w.values[2], r(1, 1));
        assert!(w.values[0].is_positive());
    }

    #[test]
    fn superlinear_gradient_case() {
        let w = positivity_witness(6, &r(6, 5), &r(6, 5)).unwrap();
        assert!(w.beta.is_zero());
    }

    #[test]
    fn sublinear_gradient_case() {
        let w = positivity_witness(6, &r(3, 2), &r(3, 10)).unwrap();
        assert!(w.values.iter().all(RationalNumber::is_positive));
        assert!(w.beta.is_positive() && w.beta < r(1, 2));
    }

    #[test]
    fn outside_cases() {
        // l = 1/5 < 2/(n-2)
        assert_eq!(positivity_witness(6, &r(7, 10), &r(1, 2)), Err(WitnessError::OutsideCases));
        // l above the critical curve
        assert_eq!(positivity_witness(3, &r(5, 1), &r(1, 2)), Err(WitnessError::OutsideCases));
    }
}
