//! YAML front end for the definition document.
//!
//! Records are read loosely (every key optional) and the variant is inferred
//! afterwards from which keys are present, so that mixed or empty records
//! can be reported by name.

use serde::Deserialize;
use thiserror::Error;

use super::model::{
    DeclarativeDefinition, Kpi, KpiKind, Target, VisualizationDef, VisualizationKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    Kpi,
    Visualization,
}

impl std::fmt::Display for RecordKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RecordKind::Kpi => f.write_str("KPI"),
            RecordKind::Visualization => f.write_str("visualization"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VariantProblem {
    /// Keys of both the simple and the composed variant.
    Both,
    /// Keys of neither variant.
    Neither,
    /// Some keys of one variant, but not all required ones.
    Incomplete { missing: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{kind} '{name}': {}", describe(.problem))]
    Variant {
        kind: RecordKind,
        name: String,
        problem: VariantProblem,
    },
}

fn describe(problem: &VariantProblem) -> String {
    match problem {
        VariantProblem::Both => "has keys of both the simple and the composed variant".into(),
        VariantProblem::Neither => "has keys of neither the simple nor the composed variant".into(),
        VariantProblem::Incomplete { missing } => format!("missing required key `{missing}`"),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    kpis: Vec<RawKpi>,
    visualizations: Vec<RawVisualization>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawKpi {
    name: String,
    metric: Option<String>,
    target: Option<RawTarget>,
    source_kpis: Option<Vec<String>>,
    transformation_function: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTarget {
    id: String,
    cluster: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVisualization {
    name: String,
    kpis: Option<Vec<String>>,
    composing_visualizations: Option<Vec<String>>,
    summary_visualization: Option<String>,
}

/// Parse a definition document.
pub fn parse_definition(document_text: &str) -> Result<DeclarativeDefinition, ParseError> {
    let raw: RawDocument = serde_yaml::from_str(document_text).map_err(|e| {
        let (line, column) = e
            .location()
            .map(|l| (l.line(), l.column()))
            .unwrap_or((0, 0));
        ParseError::Syntax {
            line,
            column,
            message: e.to_string(),
        }
    })?;

    let kpis = raw
        .kpis
        .into_iter()
        .map(kpi_from_raw)
        .collect::<Result<Vec<_>, _>>()?;
    let visualizations = raw
        .visualizations
        .into_iter()
        .map(visualization_from_raw)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DeclarativeDefinition {
        kpis,
        visualizations,
    })
}

fn kpi_from_raw(raw: RawKpi) -> Result<Kpi, ParseError> {
    let simple = raw.metric.is_some() || raw.target.is_some();
    let composed = raw.source_kpis.is_some() || raw.transformation_function.is_some();
    let err = |problem| ParseError::Variant {
        kind: RecordKind::Kpi,
        name: raw.name.clone(),
        problem,
    };
    let kind = match (simple, composed) {
        (true, true) => return Err(err(VariantProblem::Both)),
        (false, false) => return Err(err(VariantProblem::Neither)),
        (true, false) => match (raw.metric, raw.target) {
            (Some(metric), Some(t)) => KpiKind::Simple {
                metric,
                target: Target {
                    id: t.id,
                    cluster: t.cluster,
                },
            },
            (None, _) => return Err(err(VariantProblem::Incomplete { missing: "metric" })),
            (_, None) => return Err(err(VariantProblem::Incomplete { missing: "target" })),
        },
        (false, true) => match (raw.source_kpis, raw.transformation_function) {
            (Some(source_kpis), Some(transformation_function)) => KpiKind::Composed {
                source_kpis,
                transformation_function,
            },
            (None, _) => {
                return Err(err(VariantProblem::Incomplete {
                    missing: "source_kpis",
                }))
            }
            (_, None) => {
                return Err(err(VariantProblem::Incomplete {
                    missing: "transformation_function",
                }))
            }
        },
    };
    Ok(Kpi {
        name: raw.name,
        kind,
    })
}

fn visualization_from_raw(raw: RawVisualization) -> Result<VisualizationDef, ParseError> {
    let composed = raw.composing_visualizations.is_some() || raw.summary_visualization.is_some();
    let err = |problem| ParseError::Variant {
        kind: RecordKind::Visualization,
        name: raw.name.clone(),
        problem,
    };
    let kind = match (raw.kpis, composed) {
        (Some(_), true) => return Err(err(VariantProblem::Both)),
        (None, false) => return Err(err(VariantProblem::Neither)),
        (Some(kpis), false) => VisualizationKind::Simple { kpis },
        (None, true) => match raw.composing_visualizations {
            // summary may be absent here; validation reports it
            Some(composing_visualizations) => VisualizationKind::Composed {
                composing_visualizations,
                summary_visualization: raw.summary_visualization,
            },
            None => {
                return Err(err(VariantProblem::Incomplete {
                    missing: "composing_visualizations",
                }))
            }
        },
    };
    Ok(VisualizationDef {
        name: raw.name,
        kind,
    })
}
