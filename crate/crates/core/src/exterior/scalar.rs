use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d`, panicking on a zero denominator.
pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7"`, `"-1/2"` and the like.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| Error::ParseScalar(s.to_string()))?;
    let d: BigInt = den.parse().map_err(|_| Error::ParseScalar(s.to_string()))?;
    if d == BigInt::from(0) {
        return Err(Error::ParseScalar(s.to_string()));
    }
    Ok(BigRational::new(n, d))
}

pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("-2/4").unwrap(), ratio(-1, 2));
        assert_eq!(format_scalar(&ratio(-1, 2)), "-1/2");
        assert_eq!(format_scalar(&ratio(6, 3)), "2");
        assert_eq!(parse_scalar(" 3 ").unwrap(), int(3));
        assert_eq!(parse_scalar("4/-6").unwrap(), ratio(-2, 3));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("0.5").is_err());
        assert!(parse_scalar("").is_err());
    }
}
