//! JSON form of [`FixedPointData`].
//!
//! ```json
//! {
//!   "half_dimension": 1,
//!   "isolated": [
//!     {"weights": [1], "det_weight": 3, "sign": 1}
//!   ],
//!   "codim2": [
//!     {"dim": 2, "normal_weight": 1, "det_weight": 1, "sign": -1, "chern_L": 3, "chern_N": 1}
//!   ]
//! }
//! ```
//!
//! `to_json` output is canonical: parsing it and serializing again gives the
//! same bytes.

use serde_json::Value;

use super::{Codim2Component, ComponentTopology, FixedPointData, IsolatedFixedPoint, Sign};
use crate::json::{self, ParseError};

fn sign(v: i64, path: &str) -> Result<Sign, ParseError> {
    Sign::from_value(v).ok_or_else(|| ParseError::schema(path, format!("sign must be 1 or -1, got {v}")))
}

fn parse_isolated(v: &Value, path: &str) -> Result<IsolatedFixedPoint, ParseError> {
    let map = json::object(v, path)?;
    json::reject_unknown(map, &["weights", "det_weight", "sign"], path)?;
    let wpath = json::join(path, "weights");
    let weights = json::array(json::required(map, "weights", path)?, &wpath)?
        .iter()
        .enumerate()
        .map(|(j, w)| json::int(w, &format!("{wpath}[{j}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let det_weight = json::required_int(map, "det_weight", path)?;
    let s = json::required_int(map, "sign", path)?;
    Ok(IsolatedFixedPoint {
        weights,
        det_weight,
        sign: sign(s, &json::join(path, "sign"))?,
    })
}

fn parse_codim2(v: &Value, path: &str) -> Result<Codim2Component, ParseError> {
    let map = json::object(v, path)?;
    json::reject_unknown(
        map,
        &["dim", "normal_weight", "det_weight", "sign", "chern_L", "chern_N"],
        path,
    )?;
    let dim = json::required_int(map, "dim", path)?;
    let normal_weight = json::required_int(map, "normal_weight", path)?;
    let det_weight = json::required_int(map, "det_weight", path)?;
    let s = sign(json::required_int(map, "sign", path)?, &json::join(path, "sign"))?;
    let chern_l = json::optional_int(map, "chern_L", path)?;
    let chern_n = json::optional_int(map, "chern_N", path)?;
    let topology = match dim {
        0 => {
            if chern_l.is_some() {
                return Err(ParseError::schema(
                    json::join(path, "chern_L"),
                    "not allowed when dim = 0",
                ));
            }
            if chern_n.is_some() {
                return Err(ParseError::schema(
                    json::join(path, "chern_N"),
                    "not allowed when dim = 0",
                ));
            }
            ComponentTopology::Point
        }
        2 => ComponentTopology::Surface {
            chern_l: chern_l.ok_or_else(|| ParseError::schema(json::join(path, "chern_L"), "required when dim = 2"))?,
            chern_n: chern_n.ok_or_else(|| ParseError::schema(json::join(path, "chern_N"), "required when dim = 2"))?,
        },
        other => {
            return Err(ParseError::schema(
                json::join(path, "dim"),
                format!("dim must be 0 or 2, got {other}"),
            ))
        }
    };
    Ok(Codim2Component {
        normal_weight,
        det_weight,
        sign: s,
        topology,
    })
}

fn list<T>(
    map: &serde_json::Map<String, Value>,
    key: &str,
    item: impl Fn(&Value, &str) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    // an absent list is an empty one
    let Some(v) = map.get(key) else {
        return Ok(Vec::new());
    };
    json::array(v, key)?
        .iter()
        .enumerate()
        .map(|(i, x)| item(x, &format!("{key}[{i}]")))
        .collect()
}

impl FixedPointData {
    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let root = json::parse_value(text)?;
        let map = json::object(&root, "")?;
        json::reject_unknown(map, &["half_dimension", "isolated", "codim2"], "")?;
        let m = json::required_int(map, "half_dimension", "")?;
        let half_dimension = u32::try_from(m)
            .map_err(|_| ParseError::schema("half_dimension", format!("must be a nonnegative integer, got {m}")))?;
        Ok(FixedPointData {
            half_dimension,
            isolated: list(map, "isolated", parse_isolated)?,
            codim2: list(map, "codim2", parse_codim2)?,
        })
    }

    pub fn to_json(&self) -> String {
        let isolated: Vec<String> = self
            .isolated
            .iter()
            .map(|p| {
                format!(
                    "{{\"weights\": {}, \"det_weight\": {}, \"sign\": {}}}",
                    json::int_list(&p.weights),
                    p.det_weight,
                    p.sign.value()
                )
            })
            .collect();
        let codim2: Vec<String> = self
            .codim2
            .iter()
            .map(|c| {
                let head = format!(
                    "{{\"dim\": {}, \"normal_weight\": {}, \"det_weight\": {}, \"sign\": {}",
                    c.topology.dim(),
                    c.normal_weight,
                    c.det_weight,
                    c.sign.value()
                );
                match c.topology {
                    ComponentTopology::Point => format!("{head}}}"),
                    ComponentTopology::Surface { chern_l, chern_n } => {
                        format!("{head}, \"chern_L\": {chern_l}, \"chern_N\": {chern_n}}}")
                    }
                }
            })
            .collect();
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"half_dimension\": {},\n", self.half_dimension));
        out.push_str(&json::block("isolated", &isolated, false));
        out.push_str(&json::block("codim2", &codim2, true));
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const P01: &str = r#"{
  "half_dimension": 1,
  "isolated": [
    {"weights": [1], "det_weight": 3, "sign": 1},
    {"weights": [1], "det_weight": 1, "sign": -1}
  ],
  "codim2": []
}
"#;

    #[test]
    fn parses_sphere_document() {
        let d = FixedPointData::from_json(P01).unwrap();
        assert_eq!(d.half_dimension, 1);
        assert_eq!(d.isolated.len(), 2);
        assert_eq!(d.isolated[0], IsolatedFixedPoint::new(vec![1], 3, Sign::Plus));
        assert_eq!(d.isolated[1], IsolatedFixedPoint::new(vec![1], 1, Sign::Minus));
    }

    #[test]
    fn canonical_text_round_trips_byte_for_byte() {
        let d = FixedPointData::from_json(P01).unwrap();
        assert_eq!(d.to_json(), P01);
    }

    #[test]
    fn missing_half_dimension() {
        let err = FixedPointData::from_json(r#"{"isolated": []}"#).unwrap_err();
        assert_eq!(
            err,
            ParseError::Schema {
                field: "half_dimension".into(),
                message: "missing required field".into()
            }
        );
    }

    #[test]
    fn syntax_error_has_position() {
        let err = FixedPointData::from_json("{\n  \"half_dimension\": 1,\n  oops\n}").unwrap_err();
        match err {
            ParseError::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn schema_errors_name_the_field() {
        let cases = [
            (
                r#"{"half_dimension": 1, "isolated": [{"weights": [1, "x"], "det_weight": 1, "sign": 1}]}"#,
                "isolated[0].weights[1]",
            ),
            (
                r#"{"half_dimension": 1, "isolated": [{"weights": [1], "det_weight": 1, "sign": 2}]}"#,
                "isolated[0].sign",
            ),
            (
                r#"{"half_dimension": 1, "codim2": [{"dim": 0, "normal_weight": 1, "det_weight": 1, "sign": 1, "chern_L": 0}]}"#,
                "codim2[0].chern_L",
            ),
            (
                r#"{"half_dimension": 2, "codim2": [{"dim": 2, "normal_weight": 1, "det_weight": 1, "sign": 1, "chern_L": 0}]}"#,
                "codim2[0].chern_N",
            ),
            (
                r#"{"half_dimension": 2, "codim2": [{"dim": 4, "normal_weight": 1, "det_weight": 1, "sign": 1}]}"#,
                "codim2[0].dim",
            ),
            (r#"{"half_dimension": 1, "extra": 0}"#, "extra"),
            (r#"{"half_dimension": -1}"#, "half_dimension"),
            (r#"[1, 2]"#, "$"),
        ];
        for (text, field) in cases {
            match FixedPointData::from_json(text) {
                Err(ParseError::Schema { field: f, .. }) => assert_eq!(f, field, "{text}"),
                other => panic!("{text}: expected schema error, got {other:?}"),
            }
        }
    }

    #[test]
    fn surface_components_round_trip() {
        let d = FixedPointData::new(2)
            .with_isolated(IsolatedFixedPoint::new(vec![1, 1], -2, Sign::Plus))
            .with_codim2(Codim2Component::surface(1, 1, Sign::Plus, 3, 1));
        let text = d.to_json();
        assert!(text.contains("\"chern_L\": 3, \"chern_N\": 1"));
        assert_eq!(FixedPointData::from_json(&text).unwrap(), d);
    }

    fn arb_data() -> impl Strategy<Value = FixedPointData> {
        let sign = prop_oneof![Just(Sign::Plus), Just(Sign::Minus)];
        let iso = (prop::collection::vec(-4i64..=4, 0..4), -9i64..=9, sign.clone())
            .prop_map(|(w, mu, s)| IsolatedFixedPoint::new(w, mu, s));
        let topo = prop_oneof![
            Just(ComponentTopology::Point),
            (-3i64..=3, -3i64..=3).prop_map(|(l, n)| ComponentTopology::Surface { chern_l: l, chern_n: n })
        ];
        let c2 = (-4i64..=4, -9i64..=9, sign, topo).prop_map(|(a, mu, s, t)| Codim2Component {
            normal_weight: a,
            det_weight: mu,
            sign: s,
            topology: t,
        });
        (
            0u32..4,
            prop::collection::vec(iso, 0..4),
            prop::collection::vec(c2, 0..4),
        )
            .prop_map(|(m, isolated, codim2)| FixedPointData {
                half_dimension: m,
                isolated,
                codim2,
            })
    }

    proptest! {
        #[test]
        fn parse_serialize_round_trip(d in arb_data()) {
            let text = d.to_json();
            let back = FixedPointData::from_json(&text).unwrap();
            prop_assert_eq!(&back, &d);
            prop_assert_eq!(back.to_json(), text);
        }
    }
}
