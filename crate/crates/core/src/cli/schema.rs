//! JSON Schema documents for every payload the CLI reads or writes.

use serde_json::{json, Value};

use crate::error::{Error, Result};

pub const KINDS: [&str; 13] = [
    "complex",
    "partition",
    "poset",
    "graph",
    "hypergraph",
    "matroid",
    "points",
    "assignment",
    "halfspace",
    "instance",
    "triangulation",
    "report",
    "verdict",
];

fn ids() -> Value {
    json!({ "type": "array", "items": { "type": "integer", "minimum": 0 } })
}

fn id_lists() -> Value {
    json!({ "type": "array", "items": ids() })
}

fn rational() -> Value {
    json!({ "type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$" })
}

fn rationals() -> Value {
    json!({ "type": "array", "items": rational() })
}

fn ext_nat() -> Value {
    json!({ "oneOf": [{ "type": "integer", "minimum": 0 }, { "const": "inf" }] })
}

fn object(props: Value, required: &[&str]) -> Value {
    json!({ "type": "object", "properties": props, "required": required, "additionalProperties": false })
}

fn complex() -> Value {
    object(json!({ "ground_set": ids(), "maximal_faces": id_lists() }), &["ground_set", "maximal_faces"])
}

fn partition() -> Value {
    object(json!({ "classes": id_lists() }), &["classes"])
}

fn poset() -> Value {
    let pair = json!({ "type": "array", "items": { "type": "integer", "minimum": 0 }, "minItems": 2, "maxItems": 2 });
    object(json!({ "elements": ids(), "covers": { "type": "array", "items": pair } }), &["elements", "covers"])
}

fn graph() -> Value {
    let pair = json!({ "type": "array", "items": { "type": "integer", "minimum": 0 }, "minItems": 2, "maxItems": 2 });
    object(json!({ "vertices": ids(), "edges": { "type": "array", "items": pair } }), &["vertices", "edges"])
}

fn hypergraph() -> Value {
    object(
        json!({ "vertices": ids(), "edges": id_lists(), "r": { "type": "integer", "minimum": 1 } }),
        &["vertices", "edges"],
    )
}

fn matroid() -> Value {
    let transform = json!({
        "type": "object",
        "required": ["op"],
        "properties": {
            "op": { "enum": ["dual", "truncate", "contract", "restrict", "direct_sum"] },
            "k": { "type": "integer", "minimum": 0 },
            "set": ids(),
            "matroid": { "$ref": "#" }
        }
    });
    json!({
        "type": "object",
        "required": ["kind"],
        "properties": {
            "kind": { "enum": ["partition", "uniform", "linear"] },
            "classes": id_lists(),
            "capacities": { "type": ["array", "null"], "items": { "type": "integer", "minimum": 0 } },
            "ground_set": ids(),
            "k": { "type": "integer", "minimum": 0 },
            "columns": { "type": "array", "items": rationals() },
            "transforms": { "type": "array", "items": transform }
        }
    })
}

fn points() -> Value {
    object(
        json!({
            "d": { "type": "integer", "minimum": 0 },
            "points": { "type": "object", "additionalProperties": rationals() }
        }),
        &["d", "points"],
    )
}

fn assignment() -> Value {
    object(
        json!({ "assignment": { "type": "object", "additionalProperties": { "type": "integer", "minimum": 1 } } }),
        &["assignment"],
    )
}

fn halfspace() -> Value {
    object(json!({ "a": rationals(), "b": rational() }), &["a", "b"])
}

fn instance() -> Value {
    let count = json!({ "type": "integer", "minimum": 0 });
    let families = json!({ "type": "array", "items": { "type": "array", "items": { "type": "array", "items": halfspace() } } });
    object(
        json!({
            "complex": complex(),
            "partition": partition(),
            "graph": graph(),
            "hypergraph": hypergraph(),
            "a_side": ids(),
            "matroid": matroid(),
            "second_matroid": matroid(),
            "points": points(),
            "point_sets": { "type": "array", "items": { "type": "array", "items": rationals() } },
            "target": rationals(),
            "families": families,
            "d": count, "m": count, "k": count, "r": count, "delta": count
        }),
        &[],
    )
}

fn triangulation() -> Value {
    let vertex = object(json!({ "bary": rationals(), "height": rational() }), &["bary", "height"]);
    object(
        json!({
            "n": { "type": "integer", "minimum": 1 },
            "vertices": { "type": "array", "items": vertex },
            "simplices": id_lists()
        }),
        &["n", "vertices", "simplices"],
    )
}

fn report() -> Value {
    let row = json!({
        "type": "object",
        "required": ["subset", "measured", "required", "ok"],
        "properties": {
            "subset": ids(),
            "measured": ext_nat(),
            "rank_term": { "type": "integer", "minimum": 0 },
            "required": { "type": "integer" },
            "ok": { "type": "boolean" }
        }
    });
    json!({
        "type": "object",
        "required": ["theorem", "holds", "table"],
        "properties": {
            "theorem": { "type": "string" },
            "holds": { "type": "boolean" },
            "failing_witness": row,
            "table": { "type": "array", "items": row }
        }
    })
}

fn verdict() -> Value {
    json!({
        "type": "object",
        "required": ["theorem", "hypothesis", "conclusion", "classification", "report", "oracle"],
        "properties": {
            "theorem": { "type": "string" },
            "hypothesis": { "type": "boolean" },
            "conclusion": { "type": "boolean" },
            "classification": { "enum": ["confirmed", "vacuous", "tight-negative", "COUNTEREXAMPLE"] },
            "report": report(),
            "oracle": {
                "type": "object",
                "required": ["conclusion", "summary"],
                "properties": { "conclusion": { "type": "boolean" }, "summary": { "type": "object" } }
            },
            "instance_dump": instance()
        }
    })
}

/// The schema for `kind`, one of [`KINDS`].
pub fn schema(kind: &str) -> Result<Value> {
    let body = match kind {
        "complex" => complex(),
        "partition" => partition(),
        "poset" => poset(),
        "graph" => graph(),
        "hypergraph" => hypergraph(),
        "matroid" => matroid(),
        "points" => points(),
        "assignment" => assignment(),
        "halfspace" => halfspace(),
        "instance" => instance(),
        "triangulation" => triangulation(),
        "report" => report(),
        "verdict" => verdict(),
        _ => return Err(Error::Lookup(format!("schema kind {kind:?}; known: {}", KINDS.join(", ")))),
    };
    let mut doc = json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": kind,
    });
    doc.as_object_mut().expect("object").extend(body.as_object().expect("object").clone());
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_kind_has_a_document() {
        for k in KINDS {
            let doc = schema(k).unwrap();
            assert_eq!(doc["title"], k);
            assert!(doc.get("type").is_some() || doc.get("oneOf").is_some());
        }
        assert!(matches!(schema("nope"), Err(Error::Lookup(_))));
    }

    #[test]
    fn points_use_rational_strings() {
        let doc = schema("points").unwrap();
        let items = &doc["properties"]["points"]["additionalProperties"]["items"];
        assert_eq!(items["type"], "string");
    }
}
