//! Deterministic JSON output.
//!
//! Object keys are sorted, floats are rounded to 15 significant digits and
//! non-finite floats become `null`.

use serde::Serialize;
use serde_json::{Number, Value};

pub const SIGNIFICANT_DIGITS: usize = 15;

pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x)
}

fn normalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(f64::NAN);
            Number::from_f64(round_significant(x)).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(normalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, normalize(v))).collect()),
        other => other,
    }
}

/// Serialize to a normalized [`Value`].
pub fn to_value(value: &impl Serialize) -> Value {
    normalize(serde_json::to_value(value).unwrap_or(Value::Null))
}

/// Pretty-printed canonical JSON.
pub fn to_string(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(&to_value(value)).unwrap_or_else(|_| "null".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounds_to_fifteen_digits() {
        assert_eq!(round_significant(0.1 + 0.2), 0.3);
        assert_eq!(round_significant(1.0 / 3.0), 0.333333333333333);
        assert_eq!(round_significant(-2.5e-300), -2.5e-300);
    }

    #[test]
    fn keys_sorted_and_nonfinite_null() {
        #[derive(Serialize)]
        struct S {
            zeta: f64,
            alpha: f64,
            n: u64,
        }
        let s = to_string(&S {
            zeta: f64::NAN,
            alpha: 1.0,
            n: 7,
        });
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
        assert!(s.contains("\"zeta\": null"));
        assert!(s.contains("\"n\": 7"));
    }
}
