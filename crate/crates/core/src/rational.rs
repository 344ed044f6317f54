//! JSON helpers for exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// Exact rational in its wire form: numerator and denominator as decimal
/// strings, denominator positive, fraction in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl TryFrom<&RationalJson> for BigRational {
    type Error = crate::Error;

    fn try_from(r: &RationalJson) -> crate::Result<Self> {
        let bad = |s: &str| crate::Error::InvalidParams(format!("not a decimal integer: {s:?}"));
        let num: BigInt = r.num.parse().map_err(|_| bad(&r.num))?;
        let den: BigInt = r.den.parse().map_err(|_| bad(&r.den))?;
        if den == BigInt::from(0) {
            return Err(crate::Error::InvalidParams("zero denominator".into()));
        }
        Ok(BigRational::new(num, den))
    }
}

pub(crate) fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub(crate) fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Serde adapter for `BigRational` fields.
pub mod serde_rational {
    use super::RationalJson;
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        RationalJson::from(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let j = RationalJson::deserialize(d)?;
        BigRational::try_from(&j).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Option<BigRational>` fields.
pub mod serde_rational_opt {
    use super::RationalJson;
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        r.as_ref().map(RationalJson::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        Option::<RationalJson>::deserialize(d)?
            .map(|j| BigRational::try_from(&j).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Serde adapter writing big naturals as decimal strings.
pub mod serde_decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<BigRational>` fields.
pub mod serde_rational_vec {
    use super::RationalJson;
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(RationalJson::from)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let v = Vec::<RationalJson>::deserialize(d)?;
        v.iter()
            .map(|j| BigRational::try_from(j).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = ratio(-10, 4);
        let j = RationalJson::from(&r);
        assert_eq!(j.num, "-5");
        assert_eq!(j.den, "2");
        assert_eq!(BigRational::try_from(&j).unwrap(), r);
    }

    #[test]
    fn rejects_zero_denominator() {
        let j = RationalJson {
            num: "1".into(),
            den: "0".into(),
        };
        assert!(BigRational::try_from(&j).is_err());
    }
}
