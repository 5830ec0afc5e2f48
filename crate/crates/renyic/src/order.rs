use crate::error::{Error, Result};

/// Extended Rényi order: the open interval (0, ∞) with α ≠ 1, plus the
/// three limit points that get dedicated evaluation paths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrderParam {
    /// α → 0: entropy of the support measure.
    ZeroLimit,
    /// Finite positive order, bounded away from 1.
    Finite(f64),
    /// α → 1: Shannon entropy.
    ShannonLimit,
    /// α → ∞: -ln of the density supremum.
    InfinityLimit,
}

/// Orders closer to 1 than this are coerced to the Shannon limit; the
/// 1/(1-α) prefactor is catastrophically ill-conditioned there.
pub const SHANNON_COERCION_WINDOW: f64 = 1e-6;

impl OrderParam {
    /// A finite order from a raw positive value. Values within the coercion
    /// window of 1 become [`OrderParam::ShannonLimit`]; exact zero becomes
    /// [`OrderParam::ZeroLimit`].
    pub fn finite(value: f64) -> Result<OrderParam> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::Domain(format!(
                "entropy order must be a finite nonnegative real, got {value}"
            )));
        }
        if value == 0.0 {
            Ok(OrderParam::ZeroLimit)
        } else if (value - 1.0).abs() < SHANNON_COERCION_WINDOW {
            Ok(OrderParam::ShannonLimit)
        } else {
            Ok(OrderParam::Finite(value))
        }
    }

    /// Parses the CLI token forms: `inf`, or any nonnegative float
    /// (`0` and `1` map to the zero and Shannon limits).
    pub fn parse(token: &str) -> Result<OrderParam> {
        match token.trim() {
            "inf" | "infinity" | "oo" => Ok(OrderParam::InfinityLimit),
            t => t
                .parse::<f64>()
                .map_err(|_| Error::Domain(format!("cannot parse entropy order {t:?}")))
                .and_then(OrderParam::finite),
        }
    }

    pub fn label(&self) -> String {
        match self {
            OrderParam::ZeroLimit => "0".into(),
            OrderParam::Finite(v) => format!("{v}"),
            OrderParam::ShannonLimit => "1".into(),
            OrderParam::InfinityLimit => "inf".into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_tokens() {
        assert_eq!(OrderParam::parse("inf").unwrap(), OrderParam::InfinityLimit);
        assert_eq!(OrderParam::parse("0").unwrap(), OrderParam::ZeroLimit);
        assert_eq!(OrderParam::parse("1").unwrap(), OrderParam::ShannonLimit);
        assert_eq!(OrderParam::parse("2.5").unwrap(), OrderParam::Finite(2.5));
        assert!(OrderParam::parse("-1").is_err());
        assert!(OrderParam::parse("nan").is_err());
    }

    #[test]
    fn near_one_coerces_to_shannon() {
        assert_eq!(
            OrderParam::finite(1.0 + 1e-9).unwrap(),
            OrderParam::ShannonLimit
        );
        assert_eq!(
            OrderParam::finite(1.0 - 1e-9).unwrap(),
            OrderParam::ShannonLimit
        );
        assert_eq!(
            OrderParam::finite(1.0001).unwrap(),
            OrderParam::Finite(1.0001)
        );
    }
}
