//! The JSON output document. Keys are emitted in sorted order and numbers
//! that can grow without bound are decimal strings, so a document parses and
//! re-serializes to the same bytes.

use bbw_ulrich::ulrich::{FactorizationPair, UlrichVerdict};
use bbw_ulrich::{rank, slope, CohomologyReport, ExactRational, GlWeight, HomogeneousBundle};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq)]
pub struct OutputDocument {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub timing_ms: u64,
}

impl OutputDocument {
    pub fn to_value(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "timing": self.timing_ms,
        })
    }

    pub fn to_json(&self) -> String {
        render(&self.to_value())
    }

    pub fn from_value(v: &Value) -> Option<Self> {
        let obj = v.as_object()?;
        if obj.get("schema_version")?.as_str()? != SCHEMA_VERSION {
            return None;
        }
        Some(OutputDocument {
            command: obj.get("command")?.as_str()?.to_string(),
            inputs: obj.get("inputs")?.clone(),
            results: obj.get("results")?.clone(),
            timing_ms: obj.get("timing")?.as_u64()?,
        })
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn big(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

pub fn signed(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn rational(x: &ExactRational) -> Value {
    json!({ "num": x.numer().to_string(), "den": x.denom().to_string() })
}

pub fn weight(w: &GlWeight) -> Value {
    json!(w.entries())
}

pub fn report(r: &CohomologyReport) -> Value {
    match r {
        CohomologyReport::Zero => json!({ "kind": "zero" }),
        CohomologyReport::Group {
            degree,
            weight: w,
            dimension,
        } => json!({
            "kind": "group",
            "degree": degree,
            "weight": weight(w),
            "dimension": big(dimension),
        }),
    }
}

pub fn bundle(b: &HomogeneousBundle) -> Value {
    json!({
        "beta": weight(b.beta()),
        "gamma": weight(b.gamma()),
        "rank": big(&rank(b)),
        "slope": rational(&slope(b)),
    })
}

pub fn bundle_with_pair(b: &HomogeneousBundle, p: &FactorizationPair) -> Value {
    let mut v = bundle(b);
    let obj = v.as_object_mut().expect("bundle is an object");
    obj.insert("ks".into(), json!(p.ks()));
    obj.insert("ns".into(), json!(p.ns()));
    v
}

pub fn verdict(v: &UlrichVerdict) -> Value {
    let witness = match &v.witness {
        None => Value::Null,
        Some(w) => json!({ "t": w.t, "degree": w.degree, "dimension": big(&w.dimension) }),
    };
    let mut m = Map::new();
    m.insert("is_ulrich".into(), json!(v.is_ulrich));
    m.insert("initialized".into(), json!(v.initialized));
    m.insert("init_shift".into(), json!(v.init_shift));
    m.insert("witness".into(), witness);
    Value::Object(m)
}
