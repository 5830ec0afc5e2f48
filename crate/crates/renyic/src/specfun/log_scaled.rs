/// A real number stored as a sign and the natural log of its magnitude.
///
/// Keeps products of factorial ratios, powers and exponentials well inside
/// f64 range; the value is decoded with a single `exp` at the end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScaled {
    sign: i8,
    log_magnitude: f64,
}

impl LogScaled {
    pub const ZERO: LogScaled = LogScaled {
        sign: 0,
        log_magnitude: f64::NEG_INFINITY,
    };

    pub const ONE: LogScaled = LogScaled {
        sign: 1,
        log_magnitude: 0.0,
    };

    /// A positive number given directly by its natural log.
    pub fn from_log(log_magnitude: f64) -> Self {
        LogScaled {
            sign: 1,
            log_magnitude,
        }
    }

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            LogScaled::ZERO
        } else {
            LogScaled {
                sign: if v > 0.0 { 1 } else { -1 },
                log_magnitude: v.abs().ln(),
            }
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn log_magnitude(&self) -> f64 {
        self.log_magnitude
    }

    /// Decode back to an ordinary f64.
    pub fn value(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.log_magnitude.exp()
        }
    }
}

impl std::ops::Mul for LogScaled {
    type Output = LogScaled;

    fn mul(self, other: LogScaled) -> LogScaled {
        if self.sign == 0 || other.sign == 0 {
            return LogScaled::ZERO;
        }
        LogScaled {
            sign: self.sign * other.sign,
            log_magnitude: self.log_magnitude + other.log_magnitude,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_finite_values() {
        // exp(ln v) loses about |ln v| · ε/2, up to ~2e-13 relative at the
        // extremes of f64 range.
        for &v in &[1.0, -2.5, 1e-300, 3.7e250, -9.99e-120, 0.0] {
            let back = LogScaled::from_value(v).value();
            if v == 0.0 {
                assert_eq!(back, 0.0);
            } else {
                assert!(
                    ((back - v) / v).abs() < 5e-13,
                    "round trip {v} -> {back}"
                );
            }
        }
    }

    #[test]
    fn zero_is_sentinel() {
        let z = LogScaled::from_value(0.0);
        assert_eq!(z.sign(), 0);
        assert_eq!(z.log_magnitude(), f64::NEG_INFINITY);
    }

    #[test]
    fn products_stay_in_range() {
        // (1e200)^2 * 1e-350 overflows in linear arithmetic.
        let a = LogScaled::from_value(1e200);
        let b = a * a * LogScaled::from_log(-350.0 * std::f64::consts::LN_10);
        assert!(((b.value() - 1e50) / 1e50).abs() < 1e-13);
    }
}
