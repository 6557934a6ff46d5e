//! Second, independently typed construction of every coefficient system,
//! used to cross-check the bundled corpus.

use crate::exprcas::RatExpr;

fn v(name: &str) -> RatExpr {
    RatExpr::var(name)
}

fn half() -> RatExpr {
    RatExpr::frac(1, 2)
}

/// `(2/n)(1+x)^2 - 2x^2`
pub fn a_expr(x: &RatExpr, n: &RatExpr) -> RatExpr {
    2 / n.clone() * (1 + x.clone()).pow(2) - 2 * x.pow(2)
}

/// `(4/n)(1+x)(1+y) - 4xy - 2l`
pub fn b_expr(x: &RatExpr, y: &RatExpr, n: &RatExpr, l: &RatExpr) -> RatExpr {
    4 / n.clone() * (1 + x.clone()) * (1 + y.clone()) - 4 * x * y - 2 * l
}

/// The general six-entry system in `k, gamma, d, beta, delta, sigma, tau`.
pub fn s_full() -> Vec<RatExpr> {
    let (n, q, l) = (&v("n"), &v("q"), &v("l"));
    let (k, g, d) = (&v("k"), &v("gamma"), &v("d"));
    let (beta, delta, sigma, tau) = (&v("beta"), &v("delta"), &v("sigma"), &v("tau"));
    let hg = &(1 + q * g * half());
    let dg = &(d * q * half() * (1 + g.clone()));
    let kl = &(k + l);
    let ab = &a_expr(beta, n);
    let ad = &a_expr(delta, n);
    let asg = &a_expr(sigma, n);
    let at = &a_expr(tau, n);
    let bbs = &b_expr(beta, sigma, n, l);
    let bdt = &b_expr(delta, tau, n, l);
    let g1 = &(1 + g.clone());

    let s1 = hg.pow(3) * ab - k * (k + 1) * hg.pow(2) + q * g * k.pow(2) * half() * hg
        - 2 * k * (beta - 1) * hg.pow(2);

    let s2 = hg.pow(2) * dg * (2 * ab + ad)
        + (bbs + (1 - q.clone() + 2 * sigma) * beta) * hg.pow(3)
        + 2 * (k - 1) * beta * hg.pow(2) * dg
        - d * q * beta * g * kl * hg.pow(2)
        + 2 * beta * hg.pow(3) * (kl * d - dg * beta)
        - 2 * beta * (beta - 1) * hg.pow(2) * dg
        + d * kl * hg.pow(2) * (kl + 1 - 2 * beta)
        + hg.pow(2) * dg * (q * g1 * half() - 1) * beta.pow(2)
        + d * q * g1 * kl * hg.pow(2) * beta
        + d * q * g1 * hg.pow(2) * (delta - 1) * beta;

    let kdg_kld = &(k * dg + kl * d * hg);
    let s3 = hg * dg.pow(2) * (ab + 2 * ad)
        + hg.pow(2) * dg * (2 * bbs + bdt)
        + asg * hg.pow(3)
        + k * ((k - 1) * dg.pow(2) - 2 * hg * dg)
        + q * g * half() * hg * d.pow(2) * kl.pow(2)
        - 2 * k * kl * d * hg * dg
        - hg * (2 * (beta - 1) * d * kl * dg + (2 * sigma - q) * (kl * d * hg + k * dg))
        + d * kl * (-hg.pow(2) + 2 * (kl - 1) * hg * dg)
        + k * kl * d.pow(2) * q * g1 * (q * half() * g1 - 1)
        - kl * d * q * g1 * kdg_kld
        - dg * ((2 * tau - q) * k * hg + 2 * (delta - 1) * kdg_kld);

    let s4 = dg.pow(3) * ad
        + hg * dg.pow(2) * (bbs + 2 * bdt)
        + hg.pow(2) * dg * (2 * asg + at)
        - k * dg.pow(2)
        - (2 * sigma - q) * kl * d * hg * dg
        + d * kl * ((kl - 1) * dg.pow(2) - 2 * hg * dg)
        + dg * (q * g * half() * g1 - 1) * kl.pow(2) * d.pow(2)
        - 2 * d * kl.pow(2) * dg.pow(2)
        - dg * (2 * (delta - 1) * kl * d * dg + (2 * tau - q) * kdg_kld);

    let s5 = bdt * dg.pow(3) + (ad + 2 * at) * hg * dg.pow(2) + (q - 1 - 2 * tau) * kl * d * dg.pow(2);

    let s6 = dg.pow(3) * at;

    vec![s1, s2, s3, s4, s5, s6]
}

/// The reduced three-entry system (gamma = -1, k = -(1-q/2) beta).
pub fn s_reduced() -> Vec<RatExpr> {
    let (n, q, l, d) = (&v("n"), &v("q"), &v("l"), &v("d"));
    let (beta, sigma) = (&v("beta"), &v("sigma"));
    let h = &(1 - q * half());
    let m = &(l - h * beta);
    let s1 = (2 / n.clone() * (1 + beta.clone()) - beta) * (1 + beta.clone());
    let s2 = b_expr(beta, sigma, n, l) + (2 * sigma + 1 - q) * beta + d / h * (m + 1) * m;
    let s3 = a_expr(sigma, n) - d.pow(2) * q * half() / h.pow(2) * m.pow(2) - d / h * m * (2 * sigma + 1 - q);
    vec![s1, s2, s3]
}

/// The ten expansion coefficients; `S1, S2, S3` stay symbolic.
pub fn i_full() -> Vec<RatExpr> {
    let (n, q, l) = (&v("n"), &v("q"), &v("l"));
    let (k, d) = (&v("k"), &v("d"));
    let (beta, delta, sigma, tau) = (&v("beta"), &v("delta"), &v("sigma"), &v("tau"));
    let (r, e) = (&v("rho"), &v("epsilon"));
    let (s1, s2, s3) = (&v("S1"), &v("S2"), &v("S3"));
    let h = &(1 - q * half());
    let kl = &(k + l);
    let kl2 = &kl.pow(2);
    let ss = &(2 * sigma - q);
    let ts = &(2 * tau - q);
    let ad = &a_expr(delta, n);
    let at = &a_expr(tau, n);
    let bdt = &b_expr(delta, tau, n, l);
    let dm1 = &(delta - 1);
    let bm1 = &(beta - 1);
    let lm = &(l - k * q / (2 * h));
    let ll = &((l - 1) * l);
    let d2 = &d.pow(2);
    let d3 = &d.pow(3);
    let d4 = &d.pow(4);
    let re = &(r * e);
    let pw = |a: i32, b: i32| r.pow(a) * e.pow(b);

    let i1 = h * s1;

    let i2 = h * re * ad + k.pow(2) * q * re / (2 * h) - 2 * dm1 * k * re
        + 2 * bm1 * re * kl
        + k * l * q * re / h
        + k * q * re * kl / h
        - 2 * k * re * kl / h
        + 2 * k * re * kl
        + (1 - l.clone()) * l * re
        + 2 * h * s1 * (re + e)
        + 2 * h * s1 * e
        + h * s2;

    let i3 = h * s3 + 6 * h * s1 * e.pow(2) + 4 * h * s2 * e
        + pw(2, 2)
            * (2 * h * ad + k.pow(2) * q / h - 4 * dm1 * k + 2 * bm1 * kl + 2 * dm1 * kl + 2 * k * l * q / h
                - 2 * k * kl / h
                + 2 * kl2 / h
                - l * q * kl / h
                - q * kl2 / (2 * h)
                + 2 * k * kl
                - kl2
                - 2 * ll
                + h * s1)
        + re * (h * bdt + d * h * ad + d * k.pow(2) * q / (2 * h) - 2 * d * dm1 * k + 4 * bm1 * d * kl
            - 2 * d * dm1 * kl
            + d * k * l * q / h
            + 3 * d * k * q * kl / h
            - 4 * d * k * kl / h
            + d * q * kl2 / h
            + d * l * q * kl / h
            - 2 * d * kl2 / h
            + 4 * d * k * kl
            - d * ll
            + 2 * d * h * s1
            + kl * ss
            - k * ts
            + l
            + 2 * h * s2)
        + pw(1, 2)
            * (3 * h * ad + 3 * k.pow(2) * q / (2 * h) - 6 * dm1 * k + 6 * bm1 * kl + 3 * k * l * q / h
                + 3 * k * q * kl / h
                - 4 * k * kl / h
                + 2 * kl * lm
                + 6 * k * kl
                - kl2
                + 3 * (1 - l.clone()) * l
                + 6 * h * s1);

    let i4 = 4 * h * s1 * e.pow(3) + 6 * h * s2 * e.pow(2) + 4 * h * s3 * e
        + re * (d * h * bdt + h * at + 2 * bm1 * d2 * kl - 2 * dm1 * d2 * kl + 5 * d2 * q * kl2 / (2 * h)
            + 2 * d2 * k * q * kl / h
            + d2 * l * q * kl / h
            - 4 * d2 * kl2 / h
            - 2 * d2 * k * kl / h
            + 2 * d2 * k * kl
            + 2 * d * kl * ss
            - d * kl * ts
            - d * k * ts
            + d * l
            + 2 * d * h * s2
            + 2 * h * s3)
        + pw(1, 2)
            * (3 * h * bdt + 3 * d * h * ad + 3 * d * k.pow(2) * q / (2 * h) - 6 * d * dm1 * k
                + 12 * bm1 * d * kl
                - 6 * d * dm1 * kl
                + 3 * d * k * l * q / h
                + 9 * d * k * q * kl / h
                - 8 * d * k * kl / h
                + 4 * d * kl * lm
                + 2 * d * q * kl2 / h
                + 3 * d * l * q * kl / h
                - 4 * d * kl2 / h
                + 12 * d * k * kl
                - 3 * d * kl2
                - 3 * d * ll
                + 6 * d * h * s1
                + 3 * kl * ss
                - 3 * k * ts
                + 3 * l
                + 6 * h * s2)
        + pw(1, 3)
            * (3 * h * ad + 3 * k.pow(2) * q / (2 * h) - 6 * dm1 * k + 6 * bm1 * kl + 3 * k * l * q / h
                + 3 * k * q * kl / h
                - 2 * k * kl / h
                + 4 * kl * lm
                + 6 * k * kl
                - 2 * kl2
                + (1 - l.clone()) * l
                - 2 * ll
                + 6 * h * s1)
        + pw(2, 2)
            * (2 * h * bdt + 4 * d * h * ad + 2 * d * k.pow(2) * q / h - 8 * d * dm1 * k + 6 * bm1 * d * kl
                + 2 * d * dm1 * kl
                + 4 * d * k * l * q / h
                + 2 * d * k * q * kl / h
                - 6 * d * k * kl / h
                + 6 * d * kl2 / h
                - d * l * q * kl / h
                - 3 * d * q * kl2 / (2 * h)
                + 6 * d * k * kl
                - 3 * d * kl2
                - 4 * d * ll
                + 2 * d * h * s1
                + kl * ss
                + kl * ts
                - 2 * k * ts
                + 2 * l
                + h * s2)
        + pw(2, 3)
            * (4 * h * ad + 2 * k.pow(2) * q / h - 8 * dm1 * k + 4 * bm1 * kl + 4 * dm1 * kl + 4 * k * l * q / h
                - 2 * k * kl / h
                + 2 * kl2 / h
                + 2 * kl * lm
                - 2 * l * q * kl / h
                + 4 * k * kl
                - 2 * kl2
                + 2 * (1 - l.clone()) * l
                - 2 * ll
                + 2 * h * s1)
        + pw(3, 3)
            * (h * ad + k.pow(2) * q / (2 * h) - 2 * dm1 * k + 2 * dm1 * kl + k * l * q / h - k * q * kl / h
                + q * kl2 / (2 * h)
                - l * q * kl / h
                + (1 - l.clone()) * l);

    let i5 = h * s1 * e.pow(4) + 4 * h * s2 * e.pow(3) + 6 * h * s3 * e.pow(2)
        + re * (d * h * at + 3 * d3 * q * kl2 / (2 * h) - 2 * d3 * kl2 / h + d2 * kl * ss - d2 * kl * ts
            + 2 * d * h * s3)
        + pw(1, 2)
            * (3 * d * h * bdt + 3 * h * at + 6 * bm1 * d2 * kl - 6 * dm1 * d2 * kl + 2 * d2 * kl * lm
                + 11 * d2 * q * kl2 / (2 * h)
                + 6 * d2 * k * q * kl / h
                + 3 * d2 * l * q * kl / h
                - 8 * d2 * kl2 / h
                - 4 * d2 * k * kl / h
                - 3 * d2 * kl2
                + 6 * d2 * k * kl
                + 6 * d * kl * ss
                - 3 * d * kl * ts
                - 3 * d * k * ts
                + 3 * d * l
                + 6 * d * h * s2
                + 6 * h * s3)
        + pw(1, 3)
            * (3 * h * bdt + 3 * d * h * ad + 3 * d * k.pow(2) * q / (2 * h) - 6 * d * dm1 * k
                + 12 * bm1 * d * kl
                - 6 * d * dm1 * kl
                + 3 * d * k * l * q / h
                + 9 * d * k * q * kl / h
                - 4 * d * k * kl / h
                + 8 * d * kl * lm
                + d * q * kl2 / h
                + 3 * d * l * q * kl / h
                - 2 * d * kl2 / h
                + 12 * d * k * kl
                - 6 * d * kl2
                - 3 * d * ll
                + 6 * d * h * s1
                + 3 * kl * ss
                - 3 * k * ts
                + 3 * l
                + 6 * h * s2)
        + pw(2, 2)
            * (4 * d * h * bdt + 2 * d2 * h * ad + 2 * h * at + d2 * k.pow(2) * q / h - 4 * dm1 * d2 * k
                + 6 * bm1 * d2 * kl
                - 2 * dm1 * d2 * kl
                + 6 * d2 * kl2 / h
                + 2 * d2 * k * l * q / h
                + 4 * d2 * k * q * kl / h
                + d2 * l * q * kl / h
                - 6 * d2 * k * kl / h
                - d2 * q * kl2 / (2 * h)
                - 3 * d2 * kl2
                + 6 * d2 * k * kl
                - 2 * d2 * ll
                + d2 * h * s1
                + 3 * d * kl * ss
                + d * kl * ts
                - 4 * d * k * ts
                + 4 * d * l
                + 2 * d * h * s2
                + h * s3)
        + pw(2, 3)
            * (4 * h * bdt + 8 * d * h * ad + 4 * d * k.pow(2) * q / h - 16 * d * dm1 * k
                + 12 * bm1 * d * kl
                + 4 * d * dm1 * kl
                + 8 * d * k * l * q / h
                + 4 * d * k * q * kl / h
                - 6 * d * k * kl / h
                + 6 * d * kl2 / h
                + 6 * d * kl * lm
                - 2 * d * l * q * kl / h
                + 12 * d * k * kl
                - 6 * d * kl2
                - 8 * d * ll
                + 4 * d * h * s1
                + 2 * kl * ss
                + 2 * kl * ts
                - 4 * k * ts
                + 4 * l
                + 2 * h * s2)
        + pw(2, 4)
            * (2 * h * ad + k.pow(2) * q / h - 4 * dm1 * k + 2 * bm1 * kl + 2 * dm1 * kl + 2 * k * l * q / h
                + 2 * kl * lm
                + q * kl2 / (2 * h)
                - l * q * kl / h
                + 2 * k * kl
                - kl2
                + 2 * (1 - l.clone()) * l
                + h * s1)
        + pw(3, 3)
            * (h * bdt + 3 * d * h * ad + 3 * d * k.pow(2) * q / (2 * h) - 6 * d * dm1 * k + 6 * d * dm1 * kl
                + 3 * d * k * l * q / h
                - 3 * d * k * q * kl / h
                + 3 * d * q * kl2 / (2 * h)
                - 3 * d * l * q * kl / h
                - 3 * d * ll
                + kl * ts
                - k * ts
                + l)
        + pw(3, 4)
            * (h * ad + k.pow(2) * q / (2 * h) - 2 * dm1 * k + 2 * dm1 * kl + k * l * q / h - k * q * kl / h
                + q * kl2 / (2 * h)
                - l * q * kl / h
                + (1 - l.clone()) * l);

    let i6 = h * s2 * e.pow(4) + 4 * h * s3 * e.pow(3)
        + pw(1, 2)
            * (3 * d * h * at + 7 * d3 * q * kl2 / (2 * h) - 4 * d3 * kl2 / h - d3 * kl2 + 3 * d2 * kl * ss
                - 3 * d2 * kl * ts
                + 6 * d * h * s3)
        + pw(1, 3)
            * (3 * d * h * bdt + 3 * h * at + 6 * bm1 * d2 * kl - 6 * dm1 * d2 * kl + 4 * d2 * kl * lm
                + 7 * d2 * q * kl2 / (2 * h)
                + 6 * d2 * k * q * kl / h
                + 3 * d2 * l * q * kl / h
                - 4 * d2 * kl2 / h
                - 2 * d2 * k * kl / h
                - 6 * d2 * kl2
                + 6 * d2 * k * kl
                + 6 * d * kl * ss
                - 3 * d * kl * ts
                - 3 * d * k * ts
                + 3 * d * l
                + 6 * d * h * s2
                + 6 * h * s3)
        + pw(1, 4)
            * (h * bdt + d * h * ad + d * k.pow(2) * q / (2 * h) - 2 * d * dm1 * k + 4 * bm1 * d * kl
                - 2 * d * dm1 * kl
                + d * k * l * q / h
                + 3 * d * k * q * kl / h
                + 4 * d * kl * lm
                + d * l * q * kl / h
                + 4 * d * k * kl
                - 3 * d * kl2
                - d * ll
                + 2 * d * h * s1
                + kl * ss
                - k * ts
                + l
                + 2 * h * s2)
        + pw(2, 2)
            * (2 * d2 * h * bdt + 4 * d * h * at + 2 * bm1 * d3 * kl - 2 * dm1 * d3 * kl + 2 * d3 * kl2 / h
                + 3 * d3 * q * kl2 / (2 * h)
                + 2 * d3 * k * q * kl / h
                + d3 * l * q * kl / h
                - 2 * d3 * k * kl / h
                - d3 * kl2
                + 2 * d3 * k * kl
                + 3 * d2 * kl * ss
                - d2 * kl * ts
                - 2 * d2 * k * ts
                + 2 * d2 * l
                + d2 * h * s2
                + 2 * d * h * s3)
        + pw(2, 3)
            * (8 * d * h * bdt + 4 * d2 * h * ad + 4 * h * at + 2 * d2 * k.pow(2) * q / h - 8 * dm1 * d2 * k
                + 12 * bm1 * d2 * kl
                - 4 * dm1 * d2 * kl
                + 6 * d2 * kl2 / h
                + 6 * d2 * kl * lm
                + 2 * d2 * q * kl2 / h
                + 4 * d2 * k * l * q / h
                + 8 * d2 * k * q * kl / h
                + 2 * d2 * l * q * kl / h
                - 6 * d2 * k * kl / h
                - 6 * d2 * kl2
                + 12 * d2 * k * kl
                - 4 * d2 * ll
                + 2 * d2 * h * s1
                + 6 * d * kl * ss
                + 2 * d * kl * ts
                - 8 * d * k * ts
                + 8 * d * l
                + 4 * d * h * s2
                + 2 * h * s3)
        + pw(2, 4)
            * (2 * h * bdt + 4 * d * h * ad + 2 * d * k.pow(2) * q / h - 8 * d * dm1 * k + 6 * bm1 * d * kl
                + 2 * d * dm1 * kl
                + 4 * d * k * l * q / h
                + 2 * d * k * q * kl / h
                + 6 * d * kl * lm
                + 3 * d * q * kl2 / (2 * h)
                - d * l * q * kl / h
                + 6 * d * k * kl
                - 3 * d * kl2
                - 4 * d * ll
                + 2 * d * h * s1
                + kl * ss
                + kl * ts
                - 2 * k * ts
                + 2 * l
                + h * s2)
        + pw(3, 3)
            * (3 * d * h * bdt + 3 * d2 * h * ad + h * at + 3 * d2 * k.pow(2) * q / (2 * h) - 6 * dm1 * d2 * k
                + 6 * dm1 * d2 * kl
                + 3 * d2 * q * kl2 / (2 * h)
                + 3 * d2 * k * l * q / h
                - 3 * d2 * k * q * kl / h
                - 3 * d2 * l * q * kl / h
                - 3 * d2 * ll
                + 3 * d * kl * ts
                - 3 * d * k * ts
                + 3 * d * l)
        + pw(3, 4)
            * (h * bdt + 3 * d * h * ad + 3 * d * k.pow(2) * q / (2 * h) - 6 * d * dm1 * k + 6 * d * dm1 * kl
                + 3 * d * k * l * q / h
                - 3 * d * k * q * kl / h
                + 3 * d * q * kl2 / (2 * h)
                - 3 * d * l * q * kl / h
                - 3 * d * ll
                + kl * ts
                - k * ts
                + l);

    let i7 = h * s3 * e.pow(4)
        + pw(1, 3)
            * (3 * d * h * at + 5 * d3 * q * kl2 / (2 * h) - 2 * d3 * kl2 / h - 2 * d3 * kl2 + 3 * d2 * kl * ss
                - 3 * d2 * kl * ts
                + 6 * d * h * s3)
        + pw(1, 4)
            * (d * h * bdt + h * at + 2 * bm1 * d2 * kl - 2 * dm1 * d2 * kl + 2 * d2 * kl * lm
                + d2 * q * kl2 / (2 * h)
                + 2 * d2 * k * q * kl / h
                + d2 * l * q * kl / h
                - 3 * d2 * kl2
                + 2 * d2 * k * kl
                + 2 * d * kl * ss
                - d * kl * ts
                - d * k * ts
                + d * l
                + 2 * d * h * s2
                + 2 * h * s3)
        + pw(2, 2) * (2 * d2 * h * at + d4 * q * kl2 / h + d3 * kl * ss - d3 * kl * ts + d2 * h * s3)
        + pw(2, 3)
            * (4 * d2 * h * bdt + 8 * d * h * at + 4 * bm1 * d3 * kl - 4 * dm1 * d3 * kl + 2 * d3 * kl2 / h
                + 2 * d3 * kl * lm
                + 4 * d3 * q * kl2 / h
                + 4 * d3 * k * q * kl / h
                + 2 * d3 * l * q * kl / h
                - 2 * d3 * k * kl / h
                - 2 * d3 * kl2
                + 4 * d3 * k * kl
                + 6 * d2 * kl * ss
                - 2 * d2 * kl * ts
                - 4 * d2 * k * ts
                + 4 * d2 * l
                + 2 * d2 * h * s2
                + 4 * d * h * s3)
        + pw(2, 4)
            * (4 * d * h * bdt + 2 * d2 * h * ad + 2 * h * at + d2 * k.pow(2) * q / h - 4 * dm1 * d2 * k
                + 6 * bm1 * d2 * kl
                - 2 * dm1 * d2 * kl
                + 6 * d2 * kl * lm
                + 5 * d2 * q * kl2 / (2 * h)
                + 2 * d2 * k * l * q / h
                + 4 * d2 * k * q * kl / h
                + d2 * l * q * kl / h
                - 3 * d2 * kl2
                + 6 * d2 * k * kl
                - 2 * d2 * ll
                + d2 * h * s1
                + 3 * d * kl * ss
                + d * kl * ts
                - 4 * d * k * ts
                + 4 * d * l
                + 2 * d * h * s2
                + h * s3)
        + pw(3, 3)
            * (3 * d2 * h * bdt + d3 * h * ad + 3 * d * h * at + d3 * k.pow(2) * q / (2 * h) - 2 * dm1 * d3 * k
                + 2 * dm1 * d3 * kl
                + d3 * q * kl2 / (2 * h)
                + d3 * k * l * q / h
                - d3 * k * q * kl / h
                - d3 * l * q * kl / h
                - d3 * ll
                + 3 * d2 * kl * ts
                - 3 * d2 * k * ts
                + 3 * d2 * l)
        + pw(3, 4)
            * (3 * d * h * bdt + 3 * d2 * h * ad + h * at + 3 * d2 * k.pow(2) * q / (2 * h) - 6 * dm1 * d2 * k
                + 6 * dm1 * d2 * kl
                + 3 * d2 * q * kl2 / (2 * h)
                + 3 * d2 * k * l * q / h
                - 3 * d2 * k * q * kl / h
                - 3 * d2 * l * q * kl / h
                - 3 * d2 * ll
                + 3 * d * kl * ts
                - 3 * d * k * ts
                + 3 * d * l);

    let i8 = pw(1, 4) * (d * h * at + d3 * q * kl2 / (2 * h) - d3 * kl2 + d2 * kl * ss - d2 * kl * ts + 2 * d * h * s3)
        + pw(2, 3) * (4 * d2 * h * at + 2 * d4 * q * kl2 / h + 2 * d3 * kl * ss - 2 * d3 * kl * ts + 2 * d2 * h * s3)
        + pw(2, 4)
            * (2 * d2 * h * bdt + 4 * d * h * at + 2 * bm1 * d3 * kl - 2 * dm1 * d3 * kl + 2 * d3 * kl * lm
                + 5 * d3 * q * kl2 / (2 * h)
                + 2 * d3 * k * q * kl / h
                + d3 * l * q * kl / h
                - d3 * kl2
                + 2 * d3 * k * kl
                + 3 * d2 * kl * ss
                - d2 * kl * ts
                - 2 * d2 * k * ts
                + 2 * d2 * l
                + d2 * h * s2
                + 2 * d * h * s3)
        + pw(3, 3) * (d3 * h * bdt + 3 * d2 * h * at + d3 * kl * ts - d3 * k * ts + d3 * l)
        + pw(3, 4)
            * (3 * d2 * h * bdt + d3 * h * ad + 3 * d * h * at + d3 * k.pow(2) * q / (2 * h) - 2 * dm1 * d3 * k
                + 2 * dm1 * d3 * kl
                + d3 * q * kl2 / (2 * h)
                + d3 * k * l * q / h
                - d3 * k * q * kl / h
                - d3 * l * q * kl / h
                - d3 * ll
                + 3 * d2 * kl * ts
                - 3 * d2 * k * ts
                + 3 * d2 * l);

    let i9 = pw(2, 4) * (2 * d2 * h * at + d4 * q * kl2 / h + d3 * kl * ss - d3 * kl * ts + d2 * h * s3)
        + pw(3, 3) * d3 * h * at
        + pw(3, 4) * (d3 * h * bdt + 3 * d2 * h * at + d3 * kl * ts - d3 * k * ts + d3 * l);

    let i10 = pw(3, 4) * d3 * h * at;

    vec![i1, i2, i3, i4, i5, i6, i7, i8, i9, i10]
}
