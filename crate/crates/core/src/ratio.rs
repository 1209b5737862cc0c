//! Exact rationals at the text boundary: `"p/q"` strings in lowest terms
//! (plain `"p"` for integers), plus serde adapters for struct fields.

use num::{BigInt, BigRational, Zero};

/// Parses `"p"` or `"p/q"` into an exact rational. Rejects zero denominators
/// instead of panicking.
pub fn parse_ratio(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let bad = || format!("cannot parse {s:?} as a rational p/q");
    let numer: BigInt = num_str.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = den_str.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Lowest-terms rendering; `Display` of `BigRational` already reduces and
/// omits a denominator of one.
pub fn format_ratio(r: &BigRational) -> String {
    r.to_string()
}

pub mod ratio_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_ratio(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_ratio(&text).map_err(serde::de::Error::custom)
    }
}

pub mod opt_ratio_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&format_ratio(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        let text: Option<String> = Option::deserialize(d)?;
        text.map(|t| parse_ratio(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}
