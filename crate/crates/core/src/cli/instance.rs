use super::report::{InstanceInfo, InstanceKind};
use crate::coloring::{
    coloring_from_intervals, coloring_from_subtrees, IntervalFamily, MultiColoring, SubtreeFamily,
};
use crate::error::{Error, Result};
use serde_json::{Map, Value};

/// Any of the three instance formats, told apart by their keys: `edges`
/// for a coloring, `host_edges` for a subtree family, otherwise `members`
/// for an interval family. A top-level `meta` object is ignored.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Coloring(MultiColoring),
    Intervals(IntervalFamily),
    Subtrees(SubtreeFamily),
}

impl Instance {
    pub fn kind(&self) -> InstanceKind {
        match self {
            Instance::Coloring(_) => InstanceKind::Coloring,
            Instance::Intervals(_) => InstanceKind::Intervals,
            Instance::Subtrees(_) => InstanceKind::Subtrees,
        }
    }

    pub fn coloring(&self) -> Result<MultiColoring> {
        match self {
            Instance::Coloring(c) => Ok(c.clone()),
            Instance::Intervals(f) => coloring_from_intervals(f),
            Instance::Subtrees(f) => coloring_from_subtrees(f),
        }
    }

    pub fn intervals(&self) -> Option<&IntervalFamily> {
        match self {
            Instance::Intervals(f) => Some(f),
            _ => None,
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            Instance::Coloring(c) => serde_json::to_value(c),
            Instance::Intervals(f) => serde_json::to_value(f),
            Instance::Subtrees(f) => serde_json::to_value(f),
        }
        .expect("instances serialize")
    }

    /// The instance JSON with a `meta` object in front.
    pub fn with_meta(&self, meta: Value) -> Value {
        let mut out = Map::new();
        out.insert("meta".into(), meta);
        if let Value::Object(fields) = self.to_value() {
            out.extend(fields);
        }
        Value::Object(out)
    }
}

pub fn parse_instance(text: &str) -> Result<(Instance, Option<Value>)> {
    let mut value: Value = serde_json::from_str(text)?;
    let Value::Object(map) = &mut value else {
        return Err(Error::invalid("instance must be a JSON object"));
    };
    let meta = map.remove("meta");
    let inst = if map.contains_key("edges") {
        Instance::Coloring(serde_json::from_value(value)?)
    } else if map.contains_key("host_edges") {
        Instance::Subtrees(serde_json::from_value(value)?)
    } else if map.contains_key("members") {
        Instance::Intervals(serde_json::from_value(value)?)
    } else {
        return Err(Error::invalid(
            "unrecognized instance: expected `edges`, `members` or `host_edges`",
        ));
    };
    Ok((inst, meta))
}

pub(crate) fn info(
    source: &str,
    inst: &Instance,
    col: &MultiColoring,
    meta: Option<&Value>,
    k: Option<usize>,
) -> InstanceInfo {
    let seed = meta
        .and_then(|m| m.pointer("/params/seed"))
        .and_then(Value::as_u64);
    InstanceInfo {
        source: source.to_string(),
        kind: inst.kind(),
        seed,
        n: col.n(),
        t: col.t(),
        k,
    }
}
