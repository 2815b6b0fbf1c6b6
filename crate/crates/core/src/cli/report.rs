use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    Coloring,
    Intervals,
    Subtrees,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceInfo {
    /// File path, `stdin`, or the generator that produced the instance.
    pub source: String,
    pub kind: InstanceKind,
    pub seed: Option<u64>,
    pub n: usize,
    pub t: usize,
    pub k: Option<usize>,
}

/// One algorithm or property run and its output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub name: String,
    pub result: Value,
    pub wall_ms: f64,
}

/// An inequality or property tested, with both sides and the outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub inequality: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Corpus draws that produced no instance (rejection budget exhausted).
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceInfo>,
    #[serde(default)]
    pub steps: Vec<Step>,
    #[serde(default)]
    pub checks: Vec<BoundCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub runs: Vec<RunReport>,
    /// Error text, including the offending instance for theorem violations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub pass: bool,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            instance: None,
            steps: Vec::new(),
            checks: Vec::new(),
            summary: None,
            runs: Vec::new(),
            error: None,
            pass: true,
        }
    }

    /// Runs `f`, recording its serialized output and wall time.
    pub fn step<T: Serialize, E>(
        &mut self,
        name: &str,
        f: impl FnOnce() -> Result<T, E>,
    ) -> Result<T, E> {
        let start = Instant::now();
        let out = f()?;
        self.steps.push(Step {
            name: name.to_string(),
            result: serde_json::to_value(&out).unwrap_or(Value::Null),
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        });
        Ok(out)
    }

    /// Like [`RunReport::step`], recording the returned `Value` and passing
    /// the other output through.
    pub fn step_with<T, E>(
        &mut self,
        name: &str,
        f: impl FnOnce() -> Result<(T, Value), E>,
    ) -> Result<T, E> {
        let start = Instant::now();
        let (out, result) = f()?;
        self.steps.push(Step {
            name: name.to_string(),
            result,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        });
        Ok(out)
    }

    pub fn check(
        &mut self,
        name: impl Into<String>,
        inequality: impl Into<String>,
        expected: impl Serialize,
        observed: impl Serialize,
        pass: bool,
    ) -> &mut BoundCheck {
        self.pass &= pass;
        self.checks.push(BoundCheck {
            name: name.into(),
            inequality: inequality.into(),
            expected: serde_json::to_value(expected).unwrap_or(Value::Null),
            observed: serde_json::to_value(observed).unwrap_or(Value::Null),
            pass,
            witness: None,
        });
        self.checks.last_mut().expect("just pushed")
    }

    pub fn fail(&mut self, error: impl Into<String>) {
        self.pass = false;
        self.error = Some(error.into());
    }

    /// Zeroes every timing field, recursively.
    pub fn strip_timing(&mut self) {
        for s in &mut self.steps {
            s.wall_ms = 0.0;
        }
        for r in &mut self.runs {
            r.strip_timing();
        }
    }
}
