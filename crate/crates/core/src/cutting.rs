//! Cutting at the level of fixed-point data.
//!
//! A cut along a hypersurface `Z` with free circle action splits the fixed
//! components of `M` between the two sides and adds the components of
//! `Z/S^1` to both cut spaces. On either side a reduced component has normal
//! weight `+1` and determinant weight `+1` (after polarizing the `+` side by
//! reversing its normal complex structure); its orientation sign is `-1` on
//! the `+` side and `+1` on the `-` side, so the two copies cancel in
//! `Q(M^+_cut) ⊕ Q(M^-_cut)`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::charring::{char_sum, VirtualCharacter};
use crate::fpdata::{validate, Codim2Component, ComponentRef, FixedPointData, Sign, ValidationReport};
use crate::json::{self, ParseError};
use crate::kostant::{character_rational, Conventions, KostantError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        }
    }
}

/// A connected component of `Z/S^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReducedComponent {
    Point,
    /// `chern_lred = ∫ c1(L_red)`, `chern_nminus = ∫ c1(N^-)` where
    /// `N^- = Z ×_{S^1} C`.
    Surface {
        chern_lred: i64,
        chern_nminus: i64,
    },
}

impl ReducedComponent {
    pub fn dim(self) -> u32 {
        match self {
            ReducedComponent::Point => 0,
            ReducedComponent::Surface { .. } => 2,
        }
    }

    /// The fixed component this becomes inside a cut space. The determinant
    /// line restricts to `L_red ⊗ N^-`, so its Chern number is the sum.
    pub fn as_component(self, side: Side) -> Codim2Component {
        let sign = match side {
            Side::Plus => Sign::Minus,
            Side::Minus => Sign::Plus,
        };
        match self {
            ReducedComponent::Point => Codim2Component::point(1, 1, sign),
            ReducedComponent::Surface {
                chern_lred,
                chern_nminus,
            } => Codim2Component::surface(1, 1, sign, chern_lred + chern_nminus, chern_nminus),
        }
    }
}

/// Which side each fixed component of `M` lies on, plus the topology of `Z/S^1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CutSpecification {
    /// Keyed by the concatenated component index (isolated first).
    pub assignments: BTreeMap<usize, Side>,
    pub reduced: Vec<ReducedComponent>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dataset {
    Original,
    Plus,
    Minus,
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dataset::Original => "original",
            Dataset::Plus => "plus",
            Dataset::Minus => "minus",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("invalid fixed-point data:\n{0}")]
    InvalidData(ValidationReport),
    #[error("invalid cut specification: {0}")]
    InvalidSpec(String),
    #[error(
        "reduced component {index} has dimension {dim}, which needs half_dimension {needed}, got {half_dimension}"
    )]
    DimensionMismatch {
        index: usize,
        dim: u32,
        needed: u32,
        half_dimension: u32,
    },
    #[error("{which} dataset: {source}")]
    Engine { which: Dataset, source: KostantError },
}

/// Fixed-point data of the two cut spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutData {
    pub plus: FixedPointData,
    pub minus: FixedPointData,
}

/// Checks a spec against the data it will cut.
pub fn validate_spec(data: &FixedPointData, spec: &CutSpecification) -> Result<(), CutError> {
    let n = data.component_count();
    if let Some(bad) = spec.assignments.keys().find(|i| **i >= n) {
        return Err(CutError::InvalidSpec(format!(
            "component {bad} does not exist (data has {n} components)"
        )));
    }
    if let Some(missing) = (0..n).find(|i| !spec.assignments.contains_key(i)) {
        return Err(CutError::InvalidSpec(format!(
            "component {missing} is not assigned to a side"
        )));
    }
    for (index, r) in spec.reduced.iter().enumerate() {
        let needed = match r {
            ReducedComponent::Point => 1,
            ReducedComponent::Surface { .. } => 2,
        };
        if data.half_dimension != needed {
            return Err(CutError::DimensionMismatch {
                index,
                dim: r.dim(),
                needed,
                half_dimension: data.half_dimension,
            });
        }
        if let ReducedComponent::Surface { chern_lred, .. } = r {
            // L_red is the determinant line of a spin-c structure on a surface
            if chern_lred % 2 != 0 {
                return Err(CutError::InvalidSpec(format!(
                    "reduced component {index}: chern_Lred = {chern_lred} must be even"
                )));
            }
        }
    }
    Ok(())
}

/// Builds the fixed-point data of `M^+_cut` and `M^-_cut`.
///
/// Components keep their list order; reduced components are appended to
/// each side's codimension-2 list in spec order.
pub fn build_cut_data(data: &FixedPointData, spec: &CutSpecification) -> Result<CutData, CutError> {
    let report = validate(data);
    if !report.is_valid() {
        return Err(CutError::InvalidData(report));
    }
    validate_spec(data, spec)?;

    let mut plus = FixedPointData::new(data.half_dimension);
    let mut minus = FixedPointData::new(data.half_dimension);
    for (index, side) in &spec.assignments {
        let target = match side {
            Side::Plus => &mut plus,
            Side::Minus => &mut minus,
        };
        match data.component(*index).expect("checked by validate_spec") {
            ComponentRef::Isolated(i) => target.isolated.push(data.isolated[i].clone()),
            ComponentRef::Codim2(i) => target.codim2.push(data.codim2[i]),
        }
    }
    for r in &spec.reduced {
        plus.codim2.push(r.as_component(Side::Plus));
        minus.codim2.push(r.as_component(Side::Minus));
    }
    Ok(CutData { plus, minus })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdditivityRow {
    pub beta: i64,
    pub original: i64,
    pub plus: i64,
    pub minus: i64,
}

impl AdditivityRow {
    pub fn holds(&self) -> bool {
        self.original == self.plus + self.minus
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditivityReport {
    pub holds: bool,
    /// One row per weight in the union of the three supports, ascending.
    pub rows: Vec<AdditivityRow>,
    pub original: VirtualCharacter,
    pub plus: VirtualCharacter,
    pub minus: VirtualCharacter,
}

fn paren(v: i64) -> String {
    if v < 0 {
        format!("({v})")
    } else {
        v.to_string()
    }
}

impl fmt::Display for AdditivityReport {
    /// `β: original = plus + minus` per weight, then the verdict.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(
                f,
                "{}: {} = {} + {}{}",
                r.beta,
                r.original,
                paren(r.plus),
                paren(r.minus),
                if r.holds() { "" } else { "   <-- mismatch" }
            )?;
        }
        write!(
            f,
            "{}",
            if self.holds {
                "ADDITIVITY HOLDS"
            } else {
                "ADDITIVITY FAILS"
            }
        )
    }
}

/// Compares `Q(M)` with `Q(M^+_cut) ⊕ Q(M^-_cut)`, all three computed on the
/// rational path.
pub fn check_additivity(
    data: &FixedPointData,
    plus: &FixedPointData,
    minus: &FixedPointData,
    conv: Conventions,
) -> Result<AdditivityReport, CutError> {
    let run = |which: Dataset, d: &FixedPointData| {
        character_rational(d, conv).map_err(|source| CutError::Engine { which, source })
    };
    let original = run(Dataset::Original, data)?;
    let p = run(Dataset::Plus, plus)?;
    let m = run(Dataset::Minus, minus)?;

    let mut weights: Vec<i64> = original
        .iter()
        .chain(p.iter())
        .chain(m.iter())
        .map(|(b, _)| b)
        .collect();
    weights.sort_unstable();
    weights.dedup();
    let rows = weights
        .into_iter()
        .map(|beta| AdditivityRow {
            beta,
            original: original.multiplicity(beta),
            plus: p.multiplicity(beta),
            minus: m.multiplicity(beta),
        })
        .collect();
    Ok(AdditivityReport {
        holds: original == char_sum(&p, &m),
        rows,
        original,
        plus: p,
        minus: m,
    })
}

impl CutSpecification {
    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let root = json::parse_value(text)?;
        let map = json::object(&root, "")?;
        json::reject_unknown(map, &["assignments", "reduced"], "")?;

        let amap = json::object(json::required(map, "assignments", "")?, "assignments")?;
        let mut assignments = BTreeMap::new();
        for (key, v) in amap {
            let path = json::join("assignments", key);
            let index: usize = key
                .parse()
                .map_err(|_| ParseError::schema(&path, "key must be a component index"))?;
            let side = match v.as_str() {
                Some("plus") => Side::Plus,
                Some("minus") => Side::Minus,
                _ => return Err(ParseError::schema(&path, "side must be \"plus\" or \"minus\"")),
            };
            if assignments.insert(index, side).is_some() {
                return Err(ParseError::schema(&path, "component assigned twice"));
            }
        }

        let mut reduced = Vec::new();
        if let Some(v) = map.get("reduced") {
            for (i, item) in json::array(v, "reduced")?.iter().enumerate() {
                let path = format!("reduced[{i}]");
                let m = json::object(item, &path)?;
                json::reject_unknown(m, &["dim", "chern_Lred", "chern_Nminus"], &path)?;
                let r = match json::required_int(m, "dim", &path)? {
                    0 => {
                        for key in ["chern_Lred", "chern_Nminus"] {
                            if m.contains_key(key) {
                                return Err(ParseError::schema(json::join(&path, key), "not allowed when dim = 0"));
                            }
                        }
                        ReducedComponent::Point
                    }
                    2 => ReducedComponent::Surface {
                        chern_lred: json::required_int(m, "chern_Lred", &path)?,
                        chern_nminus: json::required_int(m, "chern_Nminus", &path)?,
                    },
                    other => {
                        return Err(ParseError::schema(
                            json::join(&path, "dim"),
                            format!("dim must be 0 or 2, got {other}"),
                        ))
                    }
                };
                reduced.push(r);
            }
        }
        Ok(Self { assignments, reduced })
    }

    pub fn to_json(&self) -> String {
        let pairs: Vec<String> = self
            .assignments
            .iter()
            .map(|(i, s)| format!("\"{i}\": \"{}\"", s.name()))
            .collect();
        let reduced: Vec<String> = self
            .reduced
            .iter()
            .map(|r| match r {
                ReducedComponent::Point => "{\"dim\": 0}".to_string(),
                ReducedComponent::Surface {
                    chern_lred,
                    chern_nminus,
                } => format!("{{\"dim\": 2, \"chern_Lred\": {chern_lred}, \"chern_Nminus\": {chern_nminus}}}"),
            })
            .collect();
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"assignments\": {{{}}},\n", pairs.join(", ")));
        out.push_str(&json::block("reduced", &reduced, true));
        out.push_str("}\n");
        out
    }
}
