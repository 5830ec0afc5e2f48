use crate::error::{Error, Result};
use crate::specfun::log_gamma;

/// |Y_{l,m}(θ, φ)|² for the normalized spherical harmonics.
///
/// The squared modulus is φ-independent, equal for m and -m, and positive.
/// The normalization constant (2l+1)/(4π) · (l-|m|)!/(l+|m|)! is assembled
/// in log space; the associated Legendre factor P_l^{|m|}(cos θ) comes from
/// the m-diagonal seed followed by the upward-in-l recurrence, carried with
/// a log-scale offset so the diagonal seed never underflows. Condon-Shortley
/// phases cancel in the square.
pub fn sph_harmonic_modsq(l: usize, m: i64, theta: f64) -> Result<f64> {
    let am = m.unsigned_abs() as usize;
    if am > l {
        return Err(Error::Domain(format!(
            "spherical harmonic requires |m| <= l, got l = {l}, m = {m}"
        )));
    }
    if !theta.is_finite() {
        return Err(Error::Domain(format!("non-finite theta {theta}")));
    }
    let x = theta.cos();
    let sin2 = (1.0 - x * x).max(0.0);

    // ln[(2l+1)/(4π) (l-|m|)!/(l+|m|)!]
    let ln_norm = ((2 * l + 1) as f64 / (4.0 * std::f64::consts::PI)).ln()
        + log_gamma((l - am) as f64 + 1.0)?
        - log_gamma((l + am) as f64 + 1.0)?;

    // Diagonal seed P_m^m = (2m-1)!! sin^m θ, kept as ln of the magnitude.
    if am > 0 && sin2 == 0.0 {
        return Ok(0.0);
    }
    // m = 0 must skip the sin factor: 0 · ln 0 at the poles is NaN.
    let mut log_offset = if am == 0 {
        0.0
    } else {
        0.5 * am as f64 * sin2.ln()
    };
    for k in 1..=am {
        log_offset += ((2 * k - 1) as f64).ln();
    }

    // Upward recurrence in l on the scaled values (seed normalized to 1).
    let mut p = 1.0;
    if l > am {
        let mut prev = p;
        p *= x * (2 * am + 1) as f64;
        for ll in (am + 2)..=l {
            let next = ((2 * ll - 1) as f64 * x * p - (ll + am - 1) as f64 * prev)
                / (ll - am) as f64;
            prev = p;
            p = next;
        }
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    Ok((ln_norm + 2.0 * (p.abs().ln() + log_offset)).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn monopole_is_constant() {
        for theta in [0.0, 0.3, 1.2, PI] {
            let v = sph_harmonic_modsq(0, 0, theta).unwrap();
            assert!((v - 1.0 / (4.0 * PI)).abs() < 1e-15);
        }
    }

    #[test]
    fn dipole_at_pole() {
        let v = sph_harmonic_modsq(1, 0, 0.0).unwrap();
        assert!((v - 3.0 / (4.0 * PI)).abs() < 1e-14);
        // |Y_10|² = 3 cos²θ / 4π
        let v = sph_harmonic_modsq(1, 0, 1.1).unwrap();
        assert!((v - 3.0 * 1.1f64.cos().powi(2) / (4.0 * PI)).abs() < 1e-14);
    }

    #[test]
    fn m_sign_symmetry_is_exact() {
        for l in 0..=15usize {
            for m in 0..=l as i64 {
                for theta in [0.1, 0.9, 2.0, 3.0] {
                    let a = sph_harmonic_modsq(l, m, theta).unwrap();
                    let b = sph_harmonic_modsq(l, -m, theta).unwrap();
                    assert_eq!(a.to_bits(), b.to_bits(), "l={l} m={m}");
                    assert!(a >= 0.0);
                }
            }
        }
    }

    #[test]
    fn rejects_invalid_m() {
        assert!(sph_harmonic_modsq(2, 3, 0.5).is_err());
        assert!(sph_harmonic_modsq(2, -3, 0.5).is_err());
    }
}
