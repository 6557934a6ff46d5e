use super::RadialError;

fn a_fn(x: f64, n: f64) -> f64 {
    2.0 / n * (1.0 + x).powi(2) - 2.0 * x * x
}

fn b_fn(x: f64, y: f64, n: f64, l: f64) -> f64 {
    4.0 / n * (1.0 + x) * (1.0 + y) - 4.0 * x * y - 2.0 * l
}

/// Explicit radial solutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialClosedForm {
    /// `u = (K + r^a)^(-b)` on the critical curve.
    GroundState { n: u32, q: f64 },
    /// `u = lambda r^(-(2-q)/l)`, a solution away from the origin.
    Singular { n: u32, p: f64, q: f64, lambda: f64 },
    Constant { n: u32, p: f64, q: f64, c: f64 },
}

/// Exponents and constant of the ground state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundState {
    pub n: u32,
    pub q: f64,
    /// `(2-q)/(1-q)`
    pub inner: f64,
    /// `(1-q)(n-2)/(2-q)`
    pub outer: f64,
    /// `(1-q)(n-2)^(q-1)/(n-(n-1)q)`
    pub k: f64,
    /// `l_V(n,q) + 1 - q`
    pub p: f64,
}

impl GroundState {
    pub fn new(n: u32, q: f64) -> Result<GroundState, RadialError> {
        if n < 3 || !(q > 0.0 && q < 1.0) {
            return Err(RadialError::Precondition(format!("ground state needs n >= 3 and 0 < q < 1, got n={n}, q={q}")));
        }
        let nf = n as f64;
        let l = (2.0 - q).powi(2) / ((1.0 - q) * (nf - 2.0));
        Ok(GroundState {
            n,
            q,
            inner: (2.0 - q) / (1.0 - q),
            outer: (1.0 - q) * (nf - 2.0) / (2.0 - q),
            k: (1.0 - q) * (nf - 2.0).powf(q - 1.0) / (nf - (nf - 1.0) * q),
            p: l + 1.0 - q,
        })
    }

    pub fn l(&self) -> f64 {
        self.p + self.q - 1.0
    }

    /// `ln u` and its first three derivatives at `r > 0`.
    fn log_jet(&self, r: f64) -> [f64; 4] {
        let (a, b, k) = (self.inner, self.outer, self.k);
        let s = k + r.powf(a);
        let s1 = a * r.powf(a - 1.0);
        let s2 = a * (a - 1.0) * r.powf(a - 2.0);
        let s3 = a * (a - 1.0) * (a - 2.0) * r.powf(a - 3.0);
        let (g1, g2, g3) = (s1 / s, s2 / s, s3 / s);
        [
            -b * s.ln(),
            -b * g1,
            -b * (g2 - g1 * g1),
            -b * (g3 - 3.0 * g2 * g1 + 2.0 * g1.powi(3)),
        ]
    }

    /// `u, u', u''` at `r >= 0`.
    pub fn jet(&self, r: f64) -> (f64, f64, f64) {
        if r == 0.0 {
            return (self.k.powf(-self.outer), 0.0, 0.0);
        }
        let [lu, w, w1, _] = self.log_jet(r);
        let u = lu.exp();
        (u, u * w, u * (w1 + w * w))
    }
}

/// Quantities along a radial profile at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedQuantities {
    pub r: f64,
    pub u: f64,
    pub du: f64,
    pub d2u: f64,
    /// `(u'/u)^2`
    pub h: f64,
    /// `|u'/u|^q u^l`
    pub l: f64,
    /// `L/H`, `None` where `H = 0`.
    pub z: Option<f64>,
    /// Auxiliary function at `beta = 2/(n-2)` and the critical `d`.
    pub f: f64,
}

/// The `d` that makes the auxiliary function constant on the ground state.
pub fn critical_d(n: u32, q: f64) -> f64 {
    let nf = n as f64;
    (1.0 - q) * (nf - 2.0) / (nf - (nf - 1.0) * q)
}

fn aux_f(gs: &GroundState, d: f64, u: f64, h: f64) -> f64 {
    let hq = 1.0 - gs.q / 2.0;
    let beta = 2.0 / (gs.n as f64 - 2.0);
    u.powf(-hq * beta) * (h.powf(hq) + d * u.powf(gs.l()))
}

pub fn ground_state_eval(n: u32, q: f64, r: f64) -> Result<DerivedQuantities, RadialError> {
    if !(r >= 0.0) {
        return Err(RadialError::Precondition(format!("r = {r} must be nonnegative")));
    }
    let gs = GroundState::new(n, q)?;
    let (u, du, d2u) = gs.jet(r);
    let w = du / u;
    let h = w * w;
    let l = w.abs().powf(q) * u.powf(gs.l());
    Ok(DerivedQuantities {
        r,
        u,
        du,
        d2u,
        h,
        l,
        z: (h > 0.0).then(|| l / h),
        f: aux_f(&gs, critical_d(n, q), u, h),
    })
}

/// `(p, u, u', u'')` of a closed form at `r`.
fn form_jet(form: &RadialClosedForm, r: f64) -> Result<(u32, f64, f64, f64, f64, f64), RadialError> {
    Ok(match *form {
        RadialClosedForm::GroundState { n, q } => {
            let gs = GroundState::new(n, q)?;
            let (u, du, d2u) = gs.jet(r);
            (n, gs.p, q, u, du, d2u)
        }
        RadialClosedForm::Singular { n, p, q, lambda } => {
            let a = (2.0 - q) / (p + q - 1.0);
            let u = lambda * r.powf(-a);
            (n, p, q, u, -a * u / r, a * (a + 1.0) * u / (r * r))
        }
        RadialClosedForm::Constant { n, p, q, c } => (n, p, q, c, 0.0, 0.0),
    })
}

/// Terms `[u'', (n-1)u'/r, |u'|^q u^p]` whose sum is the residual.
fn residual_terms(form: &RadialClosedForm, r: f64) -> Result<[f64; 3], RadialError> {
    if !(r > 0.0) {
        return Err(RadialError::Precondition(format!("r = {r} must be positive")));
    }
    let (n, p, q, u, du, d2u) = form_jet(form, r)?;
    Ok([d2u, (n as f64 - 1.0) * du / r, du.abs().powf(q) * u.powf(p)])
}

/// `u'' + (n-1)/r u' + |u'|^q u^p`.
pub fn pde_residual_radial(form: &RadialClosedForm, r: f64) -> Result<f64, RadialError> {
    Ok(residual_terms(form, r)?.iter().sum())
}

/// Residual over the sum of absolute term sizes.
pub fn pde_residual_relative(form: &RadialClosedForm, r: f64) -> Result<f64, RadialError> {
    let t = residual_terms(form, r)?;
    let scale: f64 = t.iter().map(|x| x.abs()).sum();
    let res: f64 = t.iter().sum();
    Ok(if scale == 0.0 { 0.0 } else { res.abs() / scale })
}

/// Amplitude `lambda` with `lambda^l = a^(1-q) (n-2-a)`, `a = (2-q)/l`.
pub fn singular_amplitude(n: u32, p: f64, q: f64) -> Result<f64, RadialError> {
    if n < 3 || !(0.0..2.0).contains(&q) {
        return Err(RadialError::Precondition(format!("need n >= 3 and 0 <= q < 2, got n={n}, q={q}")));
    }
    let l = p + q - 1.0;
    let nf = n as f64;
    if !(l > (2.0 - q) / (nf - 2.0)) {
        return Err(RadialError::Precondition(format!("l = {l} must exceed (2-q)/(n-2) = {}", (2.0 - q) / (nf - 2.0))));
    }
    let a = (2.0 - q) / l;
    debug_assert!(((a + 1.0) * q + a * p - (a + 2.0)).abs() < 1e-9 * (1.0 + a * p));
    Ok((a.powf(1.0 - q) * (nf - 2.0 - a)).powf(1.0 / l))
}

/// Radial entry, tangential entry and `c` of the tensor at `r`.
fn tensor_entries(gs: &GroundState, beta: f64, sigma: f64, r: f64) -> (f64, f64) {
    let (u, du, d2u) = gs.jet(r);
    let w = du / u;
    let h = w * w;
    let z = w.abs().powf(gs.q) * u.powf(gs.l()) / h;
    let c = 1.0 + beta + sigma * z;
    (d2u / u - c * h, w / r)
}

/// `|T - (tr T / n) g|^2 = ((n-1)/n)(a_r - a_t)^2`.
pub fn tensor_deviation(n: u32, q: f64, beta: f64, sigma: f64, r: f64) -> Result<f64, RadialError> {
    if !(r > 0.0) {
        return Err(RadialError::Precondition(format!("r = {r} must be positive")));
    }
    let gs = GroundState::new(n, q)?;
    let (ar, at) = tensor_entries(&gs, beta, sigma, r);
    let nf = n as f64;
    Ok((nf - 1.0) / nf * (ar - at).powi(2))
}

/// Both sides of the identity for `Delta H` on the ground state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaHSides {
    pub lhs: f64,
    pub rhs: f64,
}

impl DeltaHSides {
    pub fn residual(&self) -> f64 {
        self.lhs - self.rhs
    }

    pub fn relative(&self) -> f64 {
        self.residual().abs() / (self.lhs.abs() + self.rhs.abs() + 1.0)
    }
}

pub fn delta_h_sides(n: u32, q: f64, beta: f64, sigma: f64, r: f64) -> Result<DeltaHSides, RadialError> {
    if !(r > 0.0) {
        return Err(RadialError::Precondition(format!("r = {r} must be positive")));
    }
    let gs = GroundState::new(n, q)?;
    let nf = n as f64;
    let l = gs.l();
    let [lu, w, w1, w2] = gs.log_jet(r);
    let u = lu.exp();
    let h = w * w;
    let h1 = 2.0 * w * w1;
    let h2 = 2.0 * w1 * w1 + 2.0 * w * w2;
    let lhs = h2 + (nf - 1.0) / r * h1;

    let ll = w.abs().powf(q) * u.powf(l);
    let grad = w * h1 / h;
    let dev = tensor_deviation(n, q, beta, sigma, r)?;
    let rhs = a_fn(beta, nf) * h * h
        + a_fn(sigma, nf) * ll * ll
        + b_fn(beta, sigma, nf, l) * h * ll
        + (2.0 * (beta - 1.0) * h + (2.0 * sigma - q) * ll) * grad
        + 2.0 * dev;
    Ok(DeltaHSides { lhs, rhs })
}

/// `LHS - RHS` of the identity for `Delta H`.
pub fn delta_h_residual(n: u32, q: f64, beta: f64, sigma: f64, r: f64) -> Result<f64, RadialError> {
    Ok(delta_h_sides(n, q, beta, sigma, r)?.residual())
}

/// Auxiliary function with explicit `d`, `beta = 2/(n-2)`.
pub fn aux_f_profile_with(n: u32, q: f64, d: f64, r_samples: &[f64]) -> Result<Vec<f64>, RadialError> {
    let gs = GroundState::new(n, q)?;
    r_samples
        .iter()
        .map(|&r| {
            if !(r > 0.0) {
                return Err(RadialError::Precondition(format!("sample r = {r} must be positive")));
            }
            let (u, du, _) = gs.jet(r);
            Ok(aux_f(&gs, d, u, (du / u).powi(2)))
        })
        .collect()
}

/// Auxiliary function on the ground state at the critical `d`.
pub fn aux_f_profile(n: u32, q: f64, r_samples: &[f64]) -> Result<Vec<f64>, RadialError> {
    aux_f_profile_with(n, q, critical_d(n, q), r_samples)
}

/// `max |F - mean| / mean`.
pub fn relative_spread(values: &[f64]) -> f64 {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    values.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max) / mean.abs()
}

/// `count` log-spaced radii on `[lo, hi]`.
pub fn log_spaced(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..count).map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp()).collect()
}
