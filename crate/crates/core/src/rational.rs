//! Exact rationals for resurgence values, Waldschmidt constants and bounds.

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub use num_rational::Rational64 as Rational;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// `"p/q"`, or just `"p"` for integers.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            (d != 0).then(|| Rational::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    }
}

pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&format(r))
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(de)?;
    parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
}

pub mod option {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, ser: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => ser.serialize_some(&super::format(r)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
        let s: Option<String> = Option::deserialize(de)?;
        s.map(|s| super::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}"))))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        assert_eq!(format(&ratio(12, 10)), "6/5");
        assert_eq!(format(&int(2)), "2");
        assert_eq!(parse("6/5"), Some(ratio(6, 5)));
        assert_eq!(parse(" 4 "), Some(int(4)));
        assert_eq!(parse("1/0"), None);
    }
}
