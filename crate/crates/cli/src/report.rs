//! The report document printed by every subcommand.

use serde_json::{Map, Value};

/// Result of running one subcommand.
pub enum Outcome {
    Ok(Map<String, Value>),
    /// Bad arguments or inputs rejected by a precondition.
    InvalidInput(String),
    /// A check that must hold failed, or the library reported a bug.
    Internal(String),
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Ok(_) => 0,
            Outcome::InvalidInput(_) => 1,
            Outcome::Internal(_) => 2,
        }
    }
}

pub struct Report {
    doc: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, inputs: Map<String, Value>, outcome: Outcome) -> Report {
        let mut doc = Map::new();
        doc.insert("command".into(), command.into());
        doc.insert("inputs".into(), Value::Object(inputs));
        let (status, result, message) = match outcome {
            Outcome::Ok(r) => ("ok", Value::Object(r), None),
            Outcome::InvalidInput(m) => ("error", Value::Null, Some(m)),
            Outcome::Internal(m) => ("internal-error", Value::Null, Some(m)),
        };
        doc.insert("status".into(), status.into());
        doc.insert("result".into(), result);
        if let Some(m) = message {
            doc.insert("message".into(), m.into());
        }
        Report { doc }
    }

    /// Pretty JSON (keys sorted), or `path = value` lines in plain mode.
    pub fn render(&self, plain: bool) -> String {
        if !plain {
            return serde_json::to_string_pretty(&Value::Object(self.doc.clone())).expect("serializable");
        }
        let mut lines = Vec::new();
        flatten("", &Value::Object(self.doc.clone()), &mut lines);
        lines.join("\n")
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_array() || x.is_object()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push(format!("{prefix} = [{}]", items.join(", ")));
        }
        other => out.push(format!("{prefix} = {}", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_plain_is_flat() {
        let mut r = Map::new();
        r.insert("rank".into(), 14.into());
        r.insert("graded".into(), "1+q^2".into());
        let rep = Report::new("graded-rank", Map::new(), Outcome::Ok(r));
        let json = rep.render(false);
        assert!(json.find("\"command\"").unwrap() < json.find("\"inputs\"").unwrap());
        assert!(json.find("\"graded\"").unwrap() < json.find("\"rank\"").unwrap());
        let plain = rep.render(true);
        assert!(plain.contains("result.rank = 14"));
        assert!(plain.contains("result.graded = 1+q^2"));
        assert!(plain.contains("status = ok"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Outcome::InvalidInput("x".into()).exit_code(), 1);
        assert_eq!(Outcome::Internal("x".into()).exit_code(), 2);
    }
}
