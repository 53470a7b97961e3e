//! Typed values of literals in the XSD value spaces we understand.

use std::cmp::Ordering;

use chrono::{DateTime, FixedOffset, NaiveDate, NaiveDateTime};
use thiserror::Error;

use super::term::Literal;
use super::vocab::XSD;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Integer(i128),
    Decimal(f64),
    Double(f64),
    Boolean(bool),
    Date(NaiveDate),
    DateTime(NaiveDateTime),
    String(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValueError {
    #[error("UNPARSABLE: '{lexical}' is not a valid {datatype}")]
    Unparsable { lexical: String, datatype: String },
    #[error("datatype {0} has no known value space")]
    UnknownDatatype(String),
}

/// Bounds for the derived integer types.
fn integer_bounds(local: &str) -> Option<(i128, i128)> {
    Some(match local {
        "integer" => (i128::MIN, i128::MAX),
        "nonNegativeInteger" => (0, i128::MAX),
        "positiveInteger" => (1, i128::MAX),
        "nonPositiveInteger" => (i128::MIN, 0),
        "negativeInteger" => (i128::MIN, -1),
        "long" => (i64::MIN as i128, i64::MAX as i128),
        "int" => (i32::MIN as i128, i32::MAX as i128),
        "short" => (i16::MIN as i128, i16::MAX as i128),
        "byte" => (i8::MIN as i128, i8::MAX as i128),
        "unsignedLong" => (0, u64::MAX as i128),
        "unsignedInt" => (0, u32::MAX as i128),
        "unsignedShort" => (0, u16::MAX as i128),
        "unsignedByte" => (0, u8::MAX as i128),
        _ => return None,
    })
}

pub fn is_known_datatype(datatype: &str) -> bool {
    datatype == super::vocab::RDF_LANG_STRING
        || datatype.strip_prefix(XSD).is_some_and(|local| {
            integer_bounds(local).is_some()
                || matches!(
                    local,
                    "decimal"
                        | "double"
                        | "float"
                        | "boolean"
                        | "date"
                        | "dateTime"
                        | "string"
                        | "normalizedString"
                        | "token"
                        | "anyURI"
                        | "language"
                )
        })
}

pub fn value_of(lit: &Literal) -> Result<Value, ValueError> {
    parse_value(lit.lexical(), lit.datatype())
}

/// Parses `lexical` in the value space of `datatype`.
pub fn parse_value(lexical: &str, datatype: &str) -> Result<Value, ValueError> {
    let bad = || ValueError::Unparsable {
        lexical: lexical.to_string(),
        datatype: datatype.to_string(),
    };
    if datatype == super::vocab::RDF_LANG_STRING {
        return Ok(Value::String(lexical.to_string()));
    }
    let Some(local) = datatype.strip_prefix(XSD) else {
        return Err(ValueError::UnknownDatatype(datatype.to_string()));
    };
    if let Some((lo, hi)) = integer_bounds(local) {
        let s = lexical.strip_prefix('+').unwrap_or(lexical);
        if s.is_empty()
            || !s
                .trim_start_matches('-')
                .chars()
                .all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let v: i128 = s.parse().map_err(|_| bad())?;
        return if v < lo || v > hi {
            Err(bad())
        } else {
            Ok(Value::Integer(v))
        };
    }
    match local {
        "decimal" => {
            let body = lexical.trim_start_matches(['+', '-']);
            let ok = !body.is_empty()
                && body.chars().filter(|&c| c == '.').count() <= 1
                && body.chars().all(|c| c.is_ascii_digit() || c == '.')
                && body != "."
                && lexical.len() - body.len() <= 1;
            if !ok {
                return Err(bad());
            }
            lexical.parse().map(Value::Decimal).map_err(|_| bad())
        }
        "double" | "float" => match lexical {
            "INF" | "+INF" => Ok(Value::Double(f64::INFINITY)),
            "-INF" => Ok(Value::Double(f64::NEG_INFINITY)),
            "NaN" => Ok(Value::Double(f64::NAN)),
            _ if lexical
                .chars()
                .any(|c| c.is_alphabetic() && c != 'e' && c != 'E') =>
            {
                Err(bad())
            }
            _ => lexical.parse().map(Value::Double).map_err(|_| bad()),
        },
        "boolean" => match lexical {
            "true" | "1" => Ok(Value::Boolean(true)),
            "false" | "0" => Ok(Value::Boolean(false)),
            _ => Err(bad()),
        },
        "date" => parse_date(lexical).map(Value::Date).ok_or_else(bad),
        "dateTime" => parse_date_time(lexical)
            .map(Value::DateTime)
            .ok_or_else(bad),
        "string" | "normalizedString" | "token" | "anyURI" | "language" => {
            Ok(Value::String(lexical.to_string()))
        }
        _ => Err(ValueError::UnknownDatatype(datatype.to_string())),
    }
}

fn parse_date(s: &str) -> Option<NaiveDate> {
    if s.len() < 10 {
        return None;
    }
    let (day, tz) = s.split_at(10);
    if !(tz.is_empty() || tz == "Z" || valid_offset(tz)) {
        return None;
    }
    NaiveDate::parse_from_str(day, "%Y-%m-%d").ok()
}

fn valid_offset(tz: &str) -> bool {
    let b = tz.as_bytes();
    b.len() == 6
        && (b[0] == b'+' || b[0] == b'-')
        && b[1].is_ascii_digit()
        && b[2].is_ascii_digit()
        && b[3] == b':'
        && b[4].is_ascii_digit()
        && b[5].is_ascii_digit()
}

/// Instants with an offset are normalised to UTC.
fn parse_date_time(s: &str) -> Option<NaiveDateTime> {
    if let Ok(dt) = DateTime::<FixedOffset>::parse_from_rfc3339(s) {
        return Some(dt.naive_utc());
    }
    NaiveDateTime::parse_from_str(s, "%Y-%m-%dT%H:%M:%S%.f").ok()
}

impl Value {
    fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Integer(i) => Some(*i as f64),
            Value::Decimal(d) | Value::Double(d) => Some(*d),
            _ => None,
        }
    }

    /// Value-space comparison; `None` for incomparable values.
    pub fn compare(&self, other: &Value) -> Option<Ordering> {
        use Value::*;
        match (self, other) {
            (Integer(a), Integer(b)) => Some(a.cmp(b)),
            (Boolean(a), Boolean(b)) => Some(a.cmp(b)),
            (Date(a), Date(b)) => Some(a.cmp(b)),
            (DateTime(a), DateTime(b)) => Some(a.cmp(b)),
            (String(a), String(b)) => Some(a.cmp(b)),
            _ => self.as_f64()?.partial_cmp(&other.as_f64()?),
        }
    }

    pub fn is_numeric(&self) -> bool {
        self.as_f64().is_some()
    }
}
