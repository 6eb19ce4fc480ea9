use serde::Serialize;

/// Version and build revision, as shown by `--version`.
pub const RELEASE: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    " (git ",
    env!("HYPSURF_GIT_REV"),
    ")"
);

/// Tool version string embedded in every report.
pub const VERSION: &str = concat!(
    "hypsurf ",
    env!("CARGO_PKG_VERSION"),
    " (git ",
    env!("HYPSURF_GIT_REV"),
    ")"
);

/// Parameters a report depends on; embedded verbatim in every report.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub surface: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refine_iters: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region: Option<[f64; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub precision: String,
}

/// Outcome of an `--assert-*` flag.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assertion {
    pub quantity: String,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<f64>,
    pub tolerance: f64,
    pub passed: bool,
}

impl Assertion {
    pub fn near(quantity: &str, value: f64, expected: f64, tolerance: f64) -> Self {
        Assertion {
            quantity: quantity.into(),
            value,
            expected: Some(expected),
            tolerance,
            passed: (value - expected).abs() <= tolerance,
        }
    }

    pub fn at_most(quantity: &str, value: f64, tolerance: f64) -> Self {
        Assertion {
            quantity: quantity.into(),
            value,
            expected: None,
            tolerance,
            passed: value.abs() <= tolerance,
        }
    }
}

#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub version: &'static str,
    pub config: &'a RunConfig,
    pub generators: Vec<String>,
    pub result: &'a T,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assertions: Vec<Assertion>,
}
