//! JSON interchange: diagram files and the polynomial term-map form.

use std::collections::BTreeMap;

use lensalex_core::algebra::LaurentPoly;
use lensalex_core::diagram::{
    Crossing, DiskStrand, MixedDiagram, SurgeryChain, SurgeryLayer,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingJson {
    pub sign: i8,
    pub over: String,
    pub under_in: String,
    pub under_out: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrandJson {
    pub above: String,
    pub below: String,
    pub eps: i8,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurgeryJson {
    pub p: i64,
    pub q: i64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub disk_strands: Vec<StrandJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    pub surgery: Value,
    pub components: Vec<Vec<String>>,
    #[serde(default)]
    pub crossings: Vec<CrossingJson>,
    #[serde(default)]
    pub disk_strands: Vec<StrandJson>,
    /// optional: traversal order of over-passages for arcs overpassing more
    /// than one crossing
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub over_order: BTreeMap<String, Vec<usize>>,
}

/// A parsed input file: a single-surgery diagram or a chain of surgery
/// unknots (the `surgery` key holds an object or an array, respectively).
pub enum Input {
    Single(MixedDiagram),
    Chain(SurgeryChain),
}

fn crossing(c: &CrossingJson) -> Crossing {
    Crossing {
        sign: c.sign,
        over: c.over.clone(),
        under_in: c.under_in.clone(),
        under_out: c.under_out.clone(),
    }
}

fn strand(s: &StrandJson) -> DiskStrand {
    DiskStrand { above: s.above.clone(), below: s.below.clone(), eps: s.eps }
}

pub fn parse_input(text: &str) -> Result<Input, String> {
    let raw: DiagramJson =
        serde_json::from_str(text).map_err(|e| e.to_string())?;
    match &raw.surgery {
        Value::Object(_) => {
            let s: SurgeryJson =
                serde_json::from_value(raw.surgery.clone())
                    .map_err(|e| e.to_string())?;
            if !s.disk_strands.is_empty() {
                return Err(String::from(
                    "single-surgery input: put disk_strands at the top level",
                ));
            }
            Ok(Input::Single(MixedDiagram {
                p: s.p,
                q: s.q,
                components: raw.components,
                crossings: raw.crossings.iter().map(crossing).collect(),
                disk_strands: raw.disk_strands.iter().map(strand).collect(),
                over_order: raw.over_order,
            }))
        }
        Value::Array(_) => {
            let layers: Vec<SurgeryJson> =
                serde_json::from_value(raw.surgery.clone())
                    .map_err(|e| e.to_string())?;
            if !raw.disk_strands.is_empty() {
                return Err(String::from(
                    "chain input: disk_strands belong to the surgery layers",
                ));
            }
            Ok(Input::Chain(SurgeryChain {
                layers: layers
                    .iter()
                    .map(|l| SurgeryLayer {
                        p: l.p,
                        q: l.q,
                        disk_strands: l.disk_strands.iter().map(strand).collect(),
                    })
                    .collect(),
                components: raw.components,
                crossings: raw.crossings.iter().map(crossing).collect(),
            }))
        }
        _ => Err(String::from("\"surgery\" must be an object or an array")),
    }
}

/// Term-map form: variable list plus a map from comma-joined exponent
/// vectors to decimal coefficient strings.
pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let mut terms = serde_json::Map::new();
    for (e, c) in p.sorted_terms() {
        let key = e
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        terms.insert(key, Value::String(c.to_string()));
    }
    serde_json::json!({ "vars": p.vars(), "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly, String> {
    let vars: Vec<String> = serde_json::from_value(
        v.get("vars").cloned().ok_or("missing \"vars\"")?,
    )
    .map_err(|e| e.to_string())?;
    let terms = v
        .get("terms")
        .and_then(Value::as_object)
        .ok_or("missing \"terms\" object")?;
    let mut out = LaurentPoly::zero(&vars);
    for (k, cv) in terms {
        let exps: Vec<i64> = if k.is_empty() {
            Vec::new()
        } else {
            k.split(',')
                .map(|s| s.trim().parse().map_err(|_| format!("bad exponent {s:?}")))
                .collect::<Result<_, _>>()?
        };
        if exps.len() != vars.len() {
            return Err(format!("exponent vector {k:?} has wrong length"));
        }
        let c: BigInt = cv
            .as_str()
            .ok_or("coefficient must be a string")?
            .parse()
            .map_err(|_| format!("bad coefficient {cv}"))?;
        out = out
            .try_add(&LaurentPoly::monomial(&vars, &exps, c))
            .map_err(|e| format!("{e:?}"))?;
    }
    Ok(out)
}
