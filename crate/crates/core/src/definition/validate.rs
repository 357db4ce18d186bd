//! Referential and structural checks over a parsed definition.
//!
//! Every violation is collected; nothing short-circuits. Codes are reported
//! in catalogue order and, within a code, in document order.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use super::model::{DeclarativeDefinition, KpiKind, TransformationFunction, VisualizationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValidationCode {
    /// Duplicate KPI name.
    V1,
    /// Duplicate visualization name.
    V2,
    /// Malformed or unresolved `source_kpis`.
    V3,
    /// KPI composition cycle.
    V4,
    /// Unknown transformation function.
    V5,
    /// Unresolved KPI in a simple visualization.
    V6,
    /// Unresolved composing visualization.
    V7,
    /// Visualization composition cycle.
    V8,
    /// Visualization composed by more than one parent.
    V9,
    /// Missing, unresolved, non-simple or shared summary visualization.
    V10,
    /// Simple visualization with an empty or repeating KPI list.
    V11,
    /// Composed visualization with an empty or repeating child list.
    V12,
    /// Simple KPI with a blank metric or target.
    V13,
    /// Summary visualization also used as a composing child.
    V14,
}

impl ValidationCode {
    pub const ALL: [ValidationCode; 14] = [
        Self::V1,
        Self::V2,
        Self::V3,
        Self::V4,
        Self::V5,
        Self::V6,
        Self::V7,
        Self::V8,
        Self::V9,
        Self::V10,
        Self::V11,
        Self::V12,
        Self::V13,
        Self::V14,
    ];
}

impl fmt::Display for ValidationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationError {
    pub code: ValidationCode,
    /// Name of the offending KPI or visualization.
    pub entity: String,
    pub message: String,
}

impl ValidationError {
    fn new(code: ValidationCode, entity: &str, message: impl Into<String>) -> Self {
        Self {
            code,
            entity: entity.to_string(),
            message: message.into(),
        }
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.code, self.entity, self.message)
    }
}

/// Check a definition against the V1..V14 catalogue. Empty means valid.
pub fn validate_definition(defn: &DeclarativeDefinition) -> Vec<ValidationError> {
    use ValidationCode::*;

    let mut errors = Vec::new();

    let kpi_names: HashSet<&str> = defn.kpis.iter().map(|k| k.name.as_str()).collect();
    let vis_by_name: HashMap<&str, &VisualizationKind> = defn
        .visualizations
        .iter()
        .rev()
        .map(|v| (v.name.as_str(), &v.kind))
        .collect();

    for name in duplicates(defn.kpis.iter().map(|k| k.name.as_str())) {
        errors.push(ValidationError::new(
            V1,
            name,
            "KPI name is declared more than once",
        ));
    }
    for name in duplicates(defn.visualizations.iter().map(|v| v.name.as_str())) {
        errors.push(ValidationError::new(
            V2,
            name,
            "visualization name is declared more than once",
        ));
    }

    for kpi in &defn.kpis {
        if let KpiKind::Composed { source_kpis, .. } = &kpi.kind {
            if source_kpis.len() < 2 {
                errors.push(ValidationError::new(
                    V3,
                    &kpi.name,
                    "a composed KPI needs at least two source KPIs",
                ));
            }
            for dup in duplicates(source_kpis.iter().map(String::as_str)) {
                errors.push(ValidationError::new(
                    V3,
                    &kpi.name,
                    format!("source KPI '{dup}' is listed more than once"),
                ));
            }
            for src in source_kpis {
                if !kpi_names.contains(src.as_str()) {
                    errors.push(ValidationError::new(
                        V3,
                        &kpi.name,
                        format!("source KPI '{src}' does not resolve"),
                    ));
                }
            }
        }
    }

    let kpi_edges: HashMap<&str, Vec<&str>> = defn
        .kpis
        .iter()
        .rev()
        .map(|k| {
            let next = match &k.kind {
                KpiKind::Composed { source_kpis, .. } => {
                    source_kpis.iter().map(String::as_str).collect()
                }
                KpiKind::Simple { .. } => Vec::new(),
            };
            (k.name.as_str(), next)
        })
        .collect();
    for name in find_cycles(defn.kpis.iter().map(|k| k.name.as_str()), &kpi_edges) {
        errors.push(ValidationError::new(
            V4,
            name,
            "KPI composition forms a cycle",
        ));
    }

    for kpi in &defn.kpis {
        if let KpiKind::Composed {
            transformation_function,
            ..
        } = &kpi.kind
        {
            if TransformationFunction::from_symbol(transformation_function).is_none() {
                errors.push(ValidationError::new(
                    V5,
                    &kpi.name,
                    format!("unknown transformation function '{transformation_function}'"),
                ));
            }
        }
    }

    for vis in &defn.visualizations {
        for kpi in vis.kpis() {
            if !kpi_names.contains(kpi.as_str()) {
                errors.push(ValidationError::new(
                    V6,
                    &vis.name,
                    format!("KPI '{kpi}' does not resolve"),
                ));
            }
        }
    }

    for vis in &defn.visualizations {
        for child in vis.children() {
            if !vis_by_name.contains_key(child.as_str()) {
                errors.push(ValidationError::new(
                    V7,
                    &vis.name,
                    format!("composing visualization '{child}' does not resolve"),
                ));
            }
        }
    }

    let vis_edges: HashMap<&str, Vec<&str>> = defn
        .visualizations
        .iter()
        .rev()
        .map(|v| {
            (
                v.name.as_str(),
                v.children().iter().map(String::as_str).collect(),
            )
        })
        .collect();
    for name in find_cycles(
        defn.visualizations.iter().map(|v| v.name.as_str()),
        &vis_edges,
    ) {
        errors.push(ValidationError::new(
            V8,
            name,
            "visualization composition forms a cycle",
        ));
    }

    // child -> distinct parents, in document order of first mention
    let mut parents: Vec<(&str, Vec<&str>)> = Vec::new();
    for vis in &defn.visualizations {
        for child in vis.children() {
            match parents.iter_mut().find(|(c, _)| *c == child.as_str()) {
                Some((_, ps)) => {
                    if !ps.contains(&vis.name.as_str()) {
                        ps.push(&vis.name);
                    }
                }
                None => parents.push((child, vec![&vis.name])),
            }
        }
    }
    for (child, ps) in &parents {
        if ps.len() > 1 {
            errors.push(ValidationError::new(
                V9,
                child,
                format!("composed by more than one visualization: {}", ps.join(", ")),
            ));
        }
    }

    let mut summary_users: Vec<(&str, Vec<&str>)> = Vec::new();
    for vis in &defn.visualizations {
        let VisualizationKind::Composed {
            summary_visualization,
            ..
        } = &vis.kind
        else {
            continue;
        };
        let Some(summary) = summary_visualization else {
            errors.push(ValidationError::new(
                V10,
                &vis.name,
                "composed visualization has no summary_visualization",
            ));
            continue;
        };
        match vis_by_name.get(summary.as_str()) {
            None => errors.push(ValidationError::new(
                V10,
                &vis.name,
                format!("summary visualization '{summary}' does not resolve"),
            )),
            Some(VisualizationKind::Composed { .. }) => errors.push(ValidationError::new(
                V10,
                &vis.name,
                format!("summary visualization '{summary}' is not a simple visualization"),
            )),
            Some(VisualizationKind::Simple { .. }) => {
                match summary_users
                    .iter_mut()
                    .find(|(s, _)| *s == summary.as_str())
                {
                    Some((_, users)) => users.push(&vis.name),
                    None => summary_users.push((summary, vec![&vis.name])),
                }
            }
        }
    }
    for (summary, users) in &summary_users {
        if users.len() > 1 {
            errors.push(ValidationError::new(
                V10,
                summary,
                format!(
                    "summary of more than one visualization: {}",
                    users.join(", ")
                ),
            ));
        }
    }

    for vis in &defn.visualizations {
        if let VisualizationKind::Simple { kpis } = &vis.kind {
            if kpis.is_empty() {
                errors.push(ValidationError::new(
                    V11,
                    &vis.name,
                    "simple visualization lists no KPIs",
                ));
            }
            for dup in duplicates(kpis.iter().map(String::as_str)) {
                errors.push(ValidationError::new(
                    V11,
                    &vis.name,
                    format!("KPI '{dup}' is listed more than once"),
                ));
            }
        }
    }

    for vis in &defn.visualizations {
        if let VisualizationKind::Composed {
            composing_visualizations,
            ..
        } = &vis.kind
        {
            if composing_visualizations.is_empty() {
                errors.push(ValidationError::new(
                    V12,
                    &vis.name,
                    "composed visualization lists no composing visualizations",
                ));
            }
            for dup in duplicates(composing_visualizations.iter().map(String::as_str)) {
                errors.push(ValidationError::new(
                    V12,
                    &vis.name,
                    format!("composing visualization '{dup}' is listed more than once"),
                ));
            }
        }
    }

    for kpi in &defn.kpis {
        if let KpiKind::Simple { metric, target } = &kpi.kind {
            if metric.trim().is_empty() {
                errors.push(ValidationError::new(V13, &kpi.name, "metric is empty"));
            }
            if target.id.trim().is_empty() {
                errors.push(ValidationError::new(V13, &kpi.name, "target id is empty"));
            }
            if target
                .cluster
                .as_deref()
                .is_some_and(|c| c.trim().is_empty())
            {
                errors.push(ValidationError::new(
                    V13,
                    &kpi.name,
                    "target cluster is empty",
                ));
            }
        }
    }

    let children: HashSet<&str> = parents.iter().map(|(c, _)| *c).collect();
    for vis in &defn.visualizations {
        if let Some(summary) = vis.summary() {
            if children.contains(summary) {
                errors.push(ValidationError::new(
                    V14,
                    summary,
                    format!(
                        "summary of '{}' is also a composing visualization",
                        vis.name
                    ),
                ));
            }
        }
    }

    errors
}

/// Names occurring more than once, each reported once, in order of their
/// second occurrence.
fn duplicates<'a>(names: impl Iterator<Item = &'a str>) -> Vec<&'a str> {
    let mut seen = HashSet::new();
    let mut reported = BTreeSet::new();
    let mut out = Vec::new();
    for name in names {
        if !seen.insert(name) && reported.insert(name) {
            out.push(name);
        }
    }
    out
}

/// Depth-first search over the named graph; returns the node that closes
/// each cycle found. Edges to unknown names are ignored.
fn find_cycles<'a>(
    order: impl Iterator<Item = &'a str>,
    edges: &HashMap<&'a str, Vec<&'a str>>,
) -> Vec<&'a str> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Active,
        Done,
    }

    let mut marks: HashMap<&str, Mark> = HashMap::new();
    let mut found = Vec::new();
    for start in order {
        if marks.contains_key(start) {
            continue;
        }
        // stack of (node, index of next edge to follow)
        let mut stack = vec![(start, 0usize)];
        marks.insert(start, Mark::Active);
        while let Some((node, next)) = stack.last_mut() {
            let succ = edges.get(*node).map(Vec::as_slice).unwrap_or(&[]);
            if let Some(&child) = succ.get(*next) {
                *next += 1;
                if !edges.contains_key(child) {
                    continue;
                }
                match marks.get(child) {
                    Some(Mark::Active) => {
                        if !found.contains(&child) {
                            found.push(child);
                        }
                    }
                    Some(Mark::Done) => {}
                    None => {
                        marks.insert(child, Mark::Active);
                        stack.push((child, 0));
                    }
                }
            } else {
                marks.insert(*node, Mark::Done);
                stack.pop();
            }
        }
    }
    found
}
