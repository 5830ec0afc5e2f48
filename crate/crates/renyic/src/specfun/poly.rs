use crate::error::{Error, Result};

const MAX_DEGREE: usize = 60;

/// Associated Laguerre polynomial L_n^a(x) by the three-term recurrence
/// k L_k = (2k - 1 + a - x) L_{k-1} - (k - 1 + a) L_{k-2}.
pub fn assoc_laguerre(degree: usize, superscript: f64, x: f64) -> Result<f64> {
    if degree > MAX_DEGREE {
        return Err(Error::Domain(format!(
            "assoc_laguerre degree {degree} exceeds cap {MAX_DEGREE}"
        )));
    }
    if superscript.is_nan() || superscript <= -1.0 {
        return Err(Error::Domain(format!(
            "assoc_laguerre superscript must be > -1, got {superscript}"
        )));
    }
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain(format!(
            "assoc_laguerre argument must be >= 0, got {x}"
        )));
    }
    let a = superscript;
    if degree == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - x;
    for k in 2..=degree {
        let k = k as f64;
        let next = ((2.0 * k - 1.0 + a - x) * cur - (k - 1.0 + a) * prev) / k;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Gegenbauer polynomial G_n^a(t) by the recurrence
/// k G_k = 2 (k + a - 1) t G_{k-1} - (k + 2a - 2) G_{k-2}.
pub fn gegenbauer(degree: usize, superscript: f64, t: f64) -> Result<f64> {
    if degree > MAX_DEGREE {
        return Err(Error::Domain(format!(
            "gegenbauer degree {degree} exceeds cap {MAX_DEGREE}"
        )));
    }
    if superscript.is_nan() || superscript <= 0.0 {
        return Err(Error::Domain(format!(
            "gegenbauer superscript must be > 0, got {superscript}"
        )));
    }
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!(
            "gegenbauer argument must lie in [-1, 1], got {t}"
        )));
    }
    let a = superscript;
    if degree == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * a * t;
    for k in 2..=degree {
        let k = k as f64;
        let next = (2.0 * (k + a - 1.0) * t * cur - (k + 2.0 * a - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::log_gamma;

    /// Brute-force series: L_n^a(x) = Σ_k (-1)^k binom(n+a, n-k) x^k / k!.
    /// Returns (sum, Σ|term|); the cancellation mass bounds the series'
    /// own rounding error.
    fn laguerre_series(n: usize, a: f64, x: f64) -> (f64, f64) {
        let mut sum = 0.0;
        let mut mass = 0.0;
        for k in 0..=n {
            let ln_binom = log_gamma(n as f64 + a + 1.0).unwrap()
                - log_gamma(a + k as f64 + 1.0).unwrap()
                - log_gamma((n - k) as f64 + 1.0).unwrap();
            let ln_fact_k = log_gamma(k as f64 + 1.0).unwrap();
            let term = ln_binom.exp() / ln_fact_k.exp() * x.powi(k as i32);
            mass += term.abs();
            sum += if k % 2 == 0 { term } else { -term };
        }
        (sum, mass)
    }

    /// Brute-force series: G_n^a(t) = Σ_k (-1)^k Γ(a+n-k) / (Γ(a) k! (n-2k)!) (2t)^{n-2k}.
    fn gegenbauer_series(n: usize, a: f64, t: f64) -> (f64, f64) {
        let mut sum = 0.0;
        let mut mass = 0.0;
        for k in 0..=(n / 2) {
            let ln_coef = log_gamma(a + (n - k) as f64).unwrap()
                - log_gamma(a).unwrap()
                - log_gamma(k as f64 + 1.0).unwrap()
                - log_gamma((n - 2 * k) as f64 + 1.0).unwrap();
            let term = ln_coef.exp() * (2.0 * t).powi((n - 2 * k) as i32);
            mass += term.abs();
            sum += if k % 2 == 0 { term } else { -term };
        }
        (sum, mass)
    }

    #[test]
    fn laguerre_base_cases() {
        assert_eq!(assoc_laguerre(0, 3.7, 2.0).unwrap(), 1.0);
        // L_1^a(x) = 1 + a - x
        assert!((assoc_laguerre(1, 2.0, 1.0).unwrap() - 2.0).abs() < 1e-15);
        // L_n^a(0) = binom(n + a, n)
        assert!((assoc_laguerre(2, 0.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((assoc_laguerre(3, 0.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn gegenbauer_base_cases() {
        assert_eq!(gegenbauer(0, 0.5, 0.3).unwrap(), 1.0);
        // G_1^a(t) = 2 a t
        assert!((gegenbauer(1, 1.0, 0.5).unwrap() - 1.0).abs() < 1e-15);
        // G_2^a(t) = 2a(a+1)t^2 - a, at a = 1, t = 1: 4 - 1 = 3
        assert!((gegenbauer(2, 1.0, 1.0).unwrap() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn laguerre_recurrence_matches_series() {
        let supers = [0.5, 1.0, 1.0, 3.0, 5.0, 7.0, 9.0, 11.0];
        for n in 0..=12usize {
            for &a in &supers {
                for i in 0..20 {
                    let x = 0.1 + 2.0 * i as f64;
                    let rec = assoc_laguerre(n, a, x).unwrap();
                    let (ser, mass) = laguerre_series(n, a, x);
                    // The alternating series cancels heavily at large x, so
                    // its own noise scales with Σ|term|, not the result.
                    let scale = rec.abs().max(ser.abs()).max(1e-30);
                    assert!(
                        (rec - ser).abs() < 1e-10 * scale + 1e-13 * mass,
                        "n={n} a={a} x={x}: {rec} vs {ser}"
                    );
                }
            }
        }
    }

    #[test]
    fn gegenbauer_recurrence_matches_series() {
        let supers = [0.5, 1.0, 2.0, 3.0, 5.0, 6.0];
        for n in 0..=12usize {
            for &a in &supers {
                for i in 0..20 {
                    let t = -0.95 + 0.1 * i as f64;
                    let rec = gegenbauer(n, a, t).unwrap();
                    let (ser, mass) = gegenbauer_series(n, a, t);
                    let scale = rec.abs().max(ser.abs()).max(1e-30);
                    assert!(
                        (rec - ser).abs() < 1e-10 * scale + 1e-13 * mass,
                        "n={n} a={a} t={t}: {rec} vs {ser}"
                    );
                }
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(assoc_laguerre(61, 1.0, 0.0).is_err());
        assert!(assoc_laguerre(2, -1.5, 0.0).is_err());
        assert!(gegenbauer(2, 1.0, 1.5).is_err());
        assert!(gegenbauer(2, -0.5, 0.0).is_err());
    }
}
