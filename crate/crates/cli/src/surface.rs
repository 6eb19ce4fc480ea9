use std::fs;

use hypsurf::fuchsian::{FuchsianGroup, GroupDocument};
use hypsurf::surfaces::{SurfaceDocument, SurfaceSpec};

use crate::CliError;

/// A surface given on the command line: a named family with parameters, or
/// a JSON file holding either a surface document or an explicit group.
#[derive(Debug, Clone)]
pub enum SurfaceInput {
    Spec(SurfaceSpec),
    Group { path: String, group: FuchsianGroup },
}

fn parse_params(kind: &str, text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|p| {
            p.trim().parse::<f64>().map_err(|e| {
                CliError::Input(format!("{kind}: parameter {p:?} is not a number ({e})"))
            })
        })
        .collect()
}

impl SurfaceInput {
    /// Accepts `sphere3`, `torus1:x,y,z`, `torus1:b` (symmetric torus with
    /// boundary length `b`), `pants:l1,l2,l3`, or a path to a JSON file.
    pub fn parse(arg: &str) -> Result<Self, CliError> {
        let named = |kind: &str, params: Vec<f64>| {
            SurfaceSpec::from_document(&SurfaceDocument {
                kind: kind.into(),
                params,
            })
            .map_err(CliError::from)
        };
        if arg == "sphere3" {
            return Ok(SurfaceInput::Spec(SurfaceSpec::sphere()));
        }
        for kind in ["torus1", "pants"] {
            if let Some(rest) = arg.strip_prefix(kind).and_then(|r| r.strip_prefix(':')) {
                return Ok(SurfaceInput::Spec(named(kind, parse_params(kind, rest)?)?));
            }
        }
        let text = fs::read_to_string(arg).map_err(|e| {
            CliError::Input(format!(
                "--surface {arg:?}: not a surface name and not a readable file ({e})"
            ))
        })?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
        if value.get("generators").is_some() {
            let doc: GroupDocument = serde_json::from_value(value)
                .map_err(|e| CliError::Input(format!("{arg}: group document: {e}")))?;
            let group = FuchsianGroup::from_document(&doc)
                .map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
            Ok(SurfaceInput::Group {
                path: arg.to_string(),
                group,
            })
        } else {
            let doc: SurfaceDocument = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("{arg}: surface document: {e}")))?;
            Ok(SurfaceInput::Spec(
                SurfaceSpec::from_document(&doc)
                    .map_err(|e| CliError::Input(format!("{arg}: {e}")))?,
            ))
        }
    }

    pub fn group(&self) -> Result<FuchsianGroup, CliError> {
        match self {
            SurfaceInput::Spec(s) => Ok(s.group()?),
            SurfaceInput::Group { group, .. } => Ok(group.clone()),
        }
    }

    pub fn tag(&self) -> String {
        match self {
            SurfaceInput::Spec(s) => s.tag(),
            SurfaceInput::Group { path, .. } => path.clone(),
        }
    }

    pub fn spec(&self) -> Option<&SurfaceSpec> {
        match self {
            SurfaceInput::Spec(s) => Some(s),
            SurfaceInput::Group { .. } => None,
        }
    }
}
