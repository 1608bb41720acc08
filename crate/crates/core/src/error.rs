use std::fmt;

use thiserror::Error;

/// One of the two idempotent components of a bicomplex number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    /// The coefficient of `e1`, i.e. `z1 - i1 z2`.
    First,
    /// The coefficient of `e2`, i.e. `z1 + i1 z2`.
    Second,
    Both,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::First => f.write_str("xi1"),
            Component::Second => f.write_str("xi2"),
            Component::Both => f.write_str("xi1,xi2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NonFinite: coefficient {index} is not finite")]
    NonFinite { index: usize },

    #[error("NullConeDivisor: divisor lies on the null cone ({component} vanishes)")]
    NullConeDivisor { component: Component },

    #[error("NullConeArgument: hyperbolic argument undefined on the null cone ({component} vanishes)")]
    NullConeArgument { component: Component },

    #[error("NullConeRoot: fractional power undefined on the null cone ({component} vanishes)")]
    NullConeRoot { component: Component },

    #[error("GammaPole: Gamma has a pole at {re}{im:+}i")]
    GammaPole { re: f64, im: f64 },

    #[error("BCGammaPole: component {component} hits a Gamma pole (m = {m}, l = {l})")]
    BcGammaPole { component: Component, m: u64, l: u64 },

    #[error("DomainAlpha: {reason}")]
    DomainAlpha { reason: String },

    #[error("NotConverged: {terms} terms used, tail estimate {tail:e}")]
    NotConverged { terms: usize, tail: f64 },

    #[error("PrecisionLoss: estimated rounding error {estimate:e} exceeds limit {limit:e}")]
    PrecisionLoss { estimate: f64, limit: f64 },

    #[error("Overflow: result is not representable in double precision")]
    Overflow,

    #[error("PoleOnContour: |t^alpha - z| = {distance:e} on the contour")]
    PoleOnContour { distance: f64 },

    #[error("IntegralDomain: integral form needs Re > 0 in component {component}")]
    IntegralDomain { component: Component },

    #[error("OutsideDisk: N(xi) = {n_xi} exceeds the admissible radius {radius}")]
    OutsideDisk { n_xi: f64, radius: f64 },

    #[error("Divergent: term norms grew over the last {run} terms")]
    Divergent { run: usize },

    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),

    #[error("Parse: {0}")]
    Parse(String),

    #[error("{source} [component {component}]")]
    InComponent {
        component: Component,
        source: Box<Error>,
    },
}

impl Error {
    /// Short variant name, as printed by the command-line tool.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonFinite { .. } => "NonFinite",
            Error::NullConeDivisor { .. } => "NullConeDivisor",
            Error::NullConeArgument { .. } => "NullConeArgument",
            Error::NullConeRoot { .. } => "NullConeRoot",
            Error::GammaPole { .. } => "GammaPole",
            Error::BcGammaPole { .. } => "BCGammaPole",
            Error::DomainAlpha { .. } => "DomainAlpha",
            Error::NotConverged { .. } => "NotConverged",
            Error::PrecisionLoss { .. } => "PrecisionLoss",
            Error::Overflow => "Overflow",
            Error::PoleOnContour { .. } => "PoleOnContour",
            Error::IntegralDomain { .. } => "IntegralDomain",
            Error::OutsideDisk { .. } => "OutsideDisk",
            Error::Divergent { .. } => "Divergent",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Parse(_) => "Parse",
            Error::InComponent { source, .. } => source.name(),
        }
    }

    /// The underlying error with any component tag removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::InComponent { source, .. } => source.root(),
            other => other,
        }
    }

    /// True for evaluator failures that signal "outside the range this
    /// algorithm can certify" rather than a caller mistake.
    pub fn is_unevaluable(&self) -> bool {
        matches!(
            self.root(),
            Error::NotConverged { .. } | Error::PrecisionLoss { .. } | Error::Overflow
        )
    }

    pub(crate) fn in_component(self, component: Component) -> Error {
        Error::InComponent {
            component,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
