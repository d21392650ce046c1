//! Serde adapters that write big integers as plain JSON numbers and
//! rationals as `"p/q"` strings.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

pub(crate) mod uint {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        let number: serde_json::Number = value
            .to_string()
            .parse()
            .map_err(serde::ser::Error::custom)?;
        number.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let number = serde_json::Number::deserialize(d)?;
        number
            .to_string()
            .parse()
            .map_err(|_| D::Error::custom(format!("expected a non-negative integer, got {number}")))
    }
}

pub(crate) mod uint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let numbers = values
            .iter()
            .map(|v| v.to_string().parse::<serde_json::Number>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        numbers.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let numbers = Vec::<serde_json::Number>::deserialize(d)?;
        numbers
            .iter()
            .map(|n| {
                n.to_string().parse().map_err(|_| {
                    D::Error::custom(format!("expected a non-negative integer, got {n}"))
                })
            })
            .collect()
    }
}

pub(crate) mod uint_matrix {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Row(#[serde(with = "uint_vec")] Vec<BigUint>);

    pub fn serialize<S: Serializer>(rows: &[Vec<BigUint>], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Row> = rows.iter().map(|r| Row(r.clone())).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigUint>>, D::Error> {
        Ok(Vec::<Row>::deserialize(d)?
            .into_iter()
            .map(|r| r.0)
            .collect())
    }
}

pub(crate) mod ratio {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| {
            D::Error::custom(format!("expected a rational like \"3/4\", got {text:?}"))
        })
    }
}

pub(crate) mod ratio_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        let texts: Vec<String> = values.iter().map(ToString::to_string).collect();
        texts.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|t| {
                t.parse()
                    .map_err(|_| D::Error::custom(format!("expected a rational, got {t:?}")))
            })
            .collect()
    }
}
