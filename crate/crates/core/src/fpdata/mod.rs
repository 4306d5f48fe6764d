//! Fixed-point data of a circle action on a spin-c manifold.
//!
//! A manifold is described only through its fixed components: isolated
//! points carrying `m` isotropy weights, and codimension-2 components (points
//! when `m = 1`, surfaces when `m = 2`) carrying one normal weight and, for
//! surfaces, two Chern numbers.

mod schema;

pub use crate::json::ParseError;

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

/// Orientation sign of a fixed component: `+1` when the orientation coming
/// from the chosen complex structure agrees with the ambient one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// An isolated fixed point: isotropy weights on `T_pM`, the weight on the
/// determinant line, and the orientation sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolatedFixedPoint {
    pub weights: Vec<i64>,
    pub det_weight: i64,
    pub sign: Sign,
}

impl IsolatedFixedPoint {
    pub fn new(weights: Vec<i64>, det_weight: i64, sign: Sign) -> Self {
        Self {
            weights,
            det_weight,
            sign,
        }
    }
}

/// Topology of a codimension-2 fixed component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentTopology {
    /// A point (only in dimension 2).
    Point,
    /// A closed surface (only in dimension 4), with `chern_l = ∫_F c1(L|_F)`
    /// and `chern_n = ∫_F c1(NF)`.
    Surface { chern_l: i64, chern_n: i64 },
}

impl ComponentTopology {
    /// Real dimension of the component.
    pub fn dim(self) -> u32 {
        match self {
            ComponentTopology::Point => 0,
            ComponentTopology::Surface { .. } => 2,
        }
    }
}

/// A fixed component whose normal bundle is a complex line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Codim2Component {
    pub normal_weight: i64,
    pub det_weight: i64,
    pub sign: Sign,
    pub topology: ComponentTopology,
}

impl Codim2Component {
    pub fn point(normal_weight: i64, det_weight: i64, sign: Sign) -> Self {
        Self {
            normal_weight,
            det_weight,
            sign,
            topology: ComponentTopology::Point,
        }
    }

    pub fn surface(normal_weight: i64, det_weight: i64, sign: Sign, chern_l: i64, chern_n: i64) -> Self {
        Self {
            normal_weight,
            det_weight,
            sign,
            topology: ComponentTopology::Surface { chern_l, chern_n },
        }
    }
}

/// Everything the engine knows about a manifold of dimension `2m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedPointData {
    pub half_dimension: u32,
    pub isolated: Vec<IsolatedFixedPoint>,
    pub codim2: Vec<Codim2Component>,
}

/// A component addressed by its position in the concatenated list
/// (isolated points first, then codimension-2 components).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentRef {
    Isolated(usize),
    Codim2(usize),
}

impl FixedPointData {
    pub fn new(half_dimension: u32) -> Self {
        Self {
            half_dimension,
            isolated: Vec::new(),
            codim2: Vec::new(),
        }
    }

    pub fn with_isolated(mut self, p: IsolatedFixedPoint) -> Self {
        self.isolated.push(p);
        self
    }

    pub fn with_codim2(mut self, c: Codim2Component) -> Self {
        self.codim2.push(c);
        self
    }

    pub fn component_count(&self) -> usize {
        self.isolated.len() + self.codim2.len()
    }

    /// Maps a concatenated index to the component it names.
    pub fn component(&self, index: usize) -> Option<ComponentRef> {
        if index < self.isolated.len() {
            Some(ComponentRef::Isolated(index))
        } else if index < self.component_count() {
            Some(ComponentRef::Codim2(index - self.isolated.len()))
        } else {
            None
        }
    }

    pub fn index_of(&self, c: ComponentRef) -> usize {
        match c {
            ComponentRef::Isolated(i) => i,
            ComponentRef::Codim2(i) => self.isolated.len() + i,
        }
    }

    pub fn is_polarized(&self) -> bool {
        self.isolated.iter().all(|p| p.weights.iter().all(|a| *a > 0))
            && self.codim2.iter().all(|c| c.normal_weight > 0)
    }

    /// Largest `|μ|` over all components (0 for empty data).
    pub fn max_abs_det_weight(&self) -> i64 {
        self.isolated
            .iter()
            .map(|p| p.det_weight.abs())
            .chain(self.codim2.iter().map(|c| c.det_weight.abs()))
            .max()
            .unwrap_or(0)
    }
}

/// The rule a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `m ≥ 1`.
    HalfDimension,
    /// Every isolated point carries exactly `m` weights.
    WeightCount,
    /// Isotropy and normal weights are nonzero.
    ZeroWeight,
    /// `μ - Σα` is even, i.e. `(μ - Σα)/2` lies in the weight lattice.
    WeightLatticeParity,
    /// Codim-2 points need `m = 1`, codim-2 surfaces need `m = 2`.
    ComponentDimension,
    /// `∫c1(L|F) ≡ ∫c1(NF) (mod 2)` on surfaces.
    ChernParity,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::HalfDimension => "half-dimension",
            Rule::WeightCount => "weight-count",
            Rule::ZeroWeight => "zero-weight",
            Rule::WeightLatticeParity => "weight-lattice-parity",
            Rule::ComponentDimension => "component-dimension",
            Rule::ChernParity => "chern-parity",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// `None` for manifold-level violations.
    pub component: Option<ComponentRef>,
    pub index: Option<usize>,
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.component, self.index) {
            (Some(ComponentRef::Isolated(i)), Some(idx)) => write!(f, "component {idx} (isolated[{i}]): ")?,
            (Some(ComponentRef::Codim2(i)), Some(idx)) => write!(f, "component {idx} (codim2[{i}]): ")?,
            _ => write!(f, "manifold: ")?,
        }
        write!(f, "[{}] {}", self.rule.name(), self.detail)
    }
}

/// Outcome of [`validate`]; valid when there are no violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpError {
    #[error("invalid fixed-point data:\n{0}")]
    InvalidData(ValidationReport),
}

/// Checks every structural invariant and reports all violations.
pub fn validate(data: &FixedPointData) -> ValidationReport {
    let m = data.half_dimension;
    let mut violations = Vec::new();
    let mut push = |c: Option<ComponentRef>, rule: Rule, detail: String| {
        violations.push(Violation {
            component: c,
            index: c.map(|c| data.index_of(c)),
            rule,
            detail,
        });
    };

    if m == 0 {
        push(None, Rule::HalfDimension, "half_dimension must be positive".into());
    }

    for (i, p) in data.isolated.iter().enumerate() {
        let c = Some(ComponentRef::Isolated(i));
        if p.weights.len() != m as usize {
            push(
                c,
                Rule::WeightCount,
                format!("has {} weights, expected {m}", p.weights.len()),
            );
        }
        if let Some(j) = p.weights.iter().position(|a| *a == 0) {
            push(c, Rule::ZeroWeight, format!("weight {j} is zero"));
        }
        let sum: i64 = p.weights.iter().sum();
        if (p.det_weight - sum).rem_euclid(2) != 0 {
            push(
                c,
                Rule::WeightLatticeParity,
                format!(
                    "det_weight - sum(weights) = {} - {} is odd; (det_weight - sum(weights))/2 must be a weight",
                    p.det_weight, sum
                ),
            );
        }
    }

    for (i, f) in data.codim2.iter().enumerate() {
        let c = Some(ComponentRef::Codim2(i));
        if f.normal_weight == 0 {
            push(c, Rule::ZeroWeight, "normal_weight is zero".into());
        }
        if (f.det_weight - f.normal_weight).rem_euclid(2) != 0 {
            push(
                c,
                Rule::WeightLatticeParity,
                format!(
                    "det_weight - normal_weight = {} - {} is odd; (det_weight - normal_weight)/2 must be a weight",
                    f.det_weight, f.normal_weight
                ),
            );
        }
        let expected_m = match f.topology {
            ComponentTopology::Point => 1,
            ComponentTopology::Surface { .. } => 2,
        };
        if m != expected_m {
            push(
                c,
                Rule::ComponentDimension,
                format!(
                    "a codimension-2 component of dimension {} needs half_dimension {expected_m}, got {m}",
                    f.topology.dim()
                ),
            );
        }
        if let ComponentTopology::Surface { chern_l, chern_n } = f.topology {
            if (chern_l - chern_n).rem_euclid(2) != 0 {
                push(
                    c,
                    Rule::ChernParity,
                    format!("chern_L - chern_N = {chern_l} - {chern_n} is odd"),
                );
            }
        }
    }

    ValidationReport { violations }
}

/// Chooses complex structures making every weight positive.
///
/// Flipping the complex structure on one line negates its weight and the
/// orientation sign; the determinant weight is unchanged. For a surface,
/// conjugating the normal line also negates `∫c1(NF)`.
pub fn polarize(data: &FixedPointData) -> Result<FixedPointData, FpError> {
    let report = validate(data);
    if !report.is_valid() {
        return Err(FpError::InvalidData(report));
    }
    let isolated = data
        .isolated
        .iter()
        .map(|p| {
            let mut sign = p.sign;
            let weights = p
                .weights
                .iter()
                .map(|&a| {
                    if a < 0 {
                        sign = sign.flip();
                    }
                    a.abs()
                })
                .collect();
            IsolatedFixedPoint::new(weights, p.det_weight, sign)
        })
        .collect();
    let codim2 = data
        .codim2
        .iter()
        .map(|c| {
            if c.normal_weight > 0 {
                return *c;
            }
            let topology = match c.topology {
                ComponentTopology::Point => ComponentTopology::Point,
                ComponentTopology::Surface { chern_l, chern_n } => ComponentTopology::Surface {
                    chern_l,
                    chern_n: -chern_n,
                },
            };
            Codim2Component {
                normal_weight: -c.normal_weight,
                det_weight: c.det_weight,
                sign: c.sign.flip(),
                topology,
            }
        })
        .collect();
    Ok(FixedPointData {
        half_dimension: data.half_dimension,
        isolated,
        codim2,
    })
}
