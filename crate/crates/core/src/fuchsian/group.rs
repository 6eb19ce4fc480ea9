use serde::{Deserialize, Serialize};

use super::word::Word;
use crate::error::{Error, Result};
use crate::hyperbolic::{Classification, MatrixDD, MoebiusMap};
use crate::Precision;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    pub label: String,
    pub map: MoebiusMap,
}

/// A cusp of the group: the peripheral word generating its stabilizer and,
/// once the group is normalized, the width `ω` of `z ↦ z + ω`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CuspData {
    pub peripheral: Word,
    pub omega: Option<f64>,
}

impl CuspData {
    pub fn is_normalized(&self) -> bool {
        self.omega.is_some()
    }
}

/// A finitely generated Fuchsian group, given by an `SL(2, R)` lift of each
/// generator.
#[derive(Debug, Clone, PartialEq)]
pub struct FuchsianGroup {
    pub label: String,
    pub generators: Vec<Generator>,
    pub assumed_free: bool,
    pub cusp: Option<CuspData>,
}

impl FuchsianGroup {
    pub fn new(
        label: impl Into<String>,
        generators: Vec<Generator>,
        assumed_free: bool,
    ) -> Result<Self> {
        for g in &generators {
            if g.map.is_identity(1e-12) {
                return Err(Error::InvalidMap(format!(
                    "generator {} is the identity",
                    g.label
                )));
            }
        }
        Ok(FuchsianGroup {
            label: label.into(),
            generators,
            assumed_free,
            cusp: None,
        })
    }

    pub fn from_maps(
        label: impl Into<String>,
        labels: &[&str],
        maps: &[MoebiusMap],
    ) -> Result<Self> {
        let generators = labels
            .iter()
            .zip(maps)
            .map(|(l, m)| Generator {
                label: (*l).to_string(),
                map: *m,
            })
            .collect();
        FuchsianGroup::new(label, generators, true)
    }

    pub fn with_cusp(mut self, cusp: CuspData) -> Self {
        self.cusp = Some(cusp);
        self
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.label.as_str()).collect()
    }

    pub fn word_string(&self, w: &Word) -> String {
        w.display_with(&self.labels()).to_string()
    }

    pub(crate) fn require_free(&self) -> Result<()> {
        if self.assumed_free {
            Ok(())
        } else {
            Err(Error::NotFree)
        }
    }

    fn check_letters(&self, w: &Word) -> Result<()> {
        for &l in w.letters() {
            let idx = l.unsigned_abs() as usize - 1;
            if idx >= self.rank() {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    count: self.rank(),
                });
            }
        }
        Ok(())
    }

    /// Map for a signed letter.
    #[inline]
    pub fn letter_map(&self, l: i32) -> MoebiusMap {
        let m = self.generators[l.unsigned_abs() as usize - 1].map;
        if l < 0 {
            m.inverse()
        } else {
            m
        }
    }

    pub fn evaluate(&self, w: &Word) -> Result<MoebiusMap> {
        self.evaluate_with(w, Precision::Double)
    }

    pub fn evaluate_with(&self, w: &Word, precision: Precision) -> Result<MoebiusMap> {
        self.check_letters(w)?;
        Ok(match precision {
            Precision::Double => w
                .letters()
                .iter()
                .fold(MoebiusMap::IDENTITY, |acc, &l| acc * self.letter_map(l)),
            Precision::Extended => w
                .letters()
                .iter()
                .fold(MatrixDD::IDENTITY, |acc, &l| {
                    acc * self.letter_map(l).to_dd()
                })
                .to_f64(),
        })
    }

    /// Conjugates every generator by `g`: the new group is `g Γ g⁻¹`.
    /// Cusp normalization is lost unless `g` fixes `∞` with unit scaling.
    pub fn conjugate(&self, g: &MoebiusMap) -> FuchsianGroup {
        let generators = self
            .generators
            .iter()
            .map(|gen| Generator {
                label: gen.label.clone(),
                map: gen.map.conjugate_by(g),
            })
            .collect();
        let cusp = self.cusp.as_ref().map(|c| CuspData {
            peripheral: c.peripheral.clone(),
            omega: None,
        });
        FuchsianGroup {
            label: self.label.clone(),
            generators,
            assumed_free: self.assumed_free,
            cusp,
        }
    }

    pub fn classify_word(&self, w: &Word) -> Result<Classification> {
        Ok(self.evaluate(w)?.classify())
    }

    pub fn to_document(&self) -> GroupDocument {
        GroupDocument {
            label: self.label.clone(),
            labels: Some(self.generators.iter().map(|g| g.label.clone()).collect()),
            generators: self
                .generators
                .iter()
                .map(|g| [g.map.a, g.map.b, g.map.c, g.map.d])
                .collect(),
            assumed_free: self.assumed_free,
            cusp: self.cusp.as_ref().map(|c| CuspDocument {
                omega: c.omega,
                peripheral: Some(c.peripheral.clone()),
            }),
        }
    }

    pub fn from_document(doc: &GroupDocument) -> Result<Self> {
        let labels: Vec<String> = match &doc.labels {
            Some(l) if l.len() == doc.generators.len() => l.clone(),
            Some(l) => {
                return Err(Error::Parse(format!(
                    "{} labels for {} generators",
                    l.len(),
                    doc.generators.len()
                )))
            }
            None => (1..=doc.generators.len())
                .map(|k| format!("g{k}"))
                .collect(),
        };
        let mut generators = Vec::with_capacity(labels.len());
        for (label, e) in labels.into_iter().zip(&doc.generators) {
            generators.push(Generator {
                label,
                map: MoebiusMap::from_unimodular(e[0], e[1], e[2], e[3])?,
            });
        }
        let mut g = FuchsianGroup::new(doc.label.clone(), generators, doc.assumed_free)?;
        if let Some(c) = &doc.cusp {
            let peripheral = c
                .peripheral
                .clone()
                .unwrap_or_else(|| Word::letter(0, false));
            g.check_letters(&peripheral)?;
            let mut data = CuspData {
                peripheral,
                omega: None,
            };
            if let Some(omega) = c.omega {
                let p = g.evaluate(&data.peripheral)?;
                if !p.approx_eq_projective(&MoebiusMap::translation(omega), 1e-12) {
                    return Err(Error::Parse(format!(
                        "cusp omega {omega} does not match the peripheral element {p}"
                    )));
                }
                data.omega = Some(omega);
            }
            g.cusp = Some(data);
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("group documents serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: GroupDocument =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        FuchsianGroup::from_document(&doc)
    }
}

/// On-disk form of a group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupDocument {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub generators: Vec<[f64; 4]>,
    pub assumed_free: bool,
    pub cusp: Option<CuspDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CuspDocument {
    pub omega: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub peripheral: Option<Word>,
}
