//! Declarative dashboard definition types.
//!
//! A definition is two flat namespaces, KPIs and visualizations, that refer
//! to each other by name. Document order is preserved everywhere.

use std::fmt;

/// Where a simple KPI's metric is collected from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Target {
    pub id: String,
    pub cluster: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KpiKind {
    /// One metric collected from one target.
    Simple { metric: String, target: Target },
    /// A transformation applied over other KPIs.
    ///
    /// The function is kept as written so that an unknown symbol can be
    /// reported by validation instead of failing the parse.
    Composed {
        source_kpis: Vec<String>,
        transformation_function: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kpi {
    pub name: String,
    pub kind: KpiKind,
}

impl Kpi {
    pub fn is_simple(&self) -> bool {
        matches!(self.kind, KpiKind::Simple { .. })
    }
}

/// Aggregators that may derive a composed KPI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformationFunction {
    Avg,
    Sum,
    Min,
    Max,
}

impl TransformationFunction {
    pub const ALL: [TransformationFunction; 4] = [Self::Avg, Self::Sum, Self::Min, Self::Max];

    pub fn from_symbol(symbol: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.symbol() == symbol)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Self::Avg => "avg",
            Self::Sum => "sum",
            Self::Min => "min",
            Self::Max => "max",
        }
    }
}

impl fmt::Display for TransformationFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VisualizationKind {
    /// A set of KPIs drawn together.
    Simple { kpis: Vec<String> },
    /// Child visualizations plus the simple visualization that summarizes
    /// them. A missing summary parses fine and is rejected by validation.
    Composed {
        composing_visualizations: Vec<String>,
        summary_visualization: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisualizationDef {
    pub name: String,
    pub kind: VisualizationKind,
}

impl VisualizationDef {
    pub fn is_simple(&self) -> bool {
        matches!(self.kind, VisualizationKind::Simple { .. })
    }

    /// Child names of a composed visualization; empty for simple ones.
    pub fn children(&self) -> &[String] {
        match &self.kind {
            VisualizationKind::Simple { .. } => &[],
            VisualizationKind::Composed {
                composing_visualizations,
                ..
            } => composing_visualizations,
        }
    }

    pub fn summary(&self) -> Option<&str> {
        match &self.kind {
            VisualizationKind::Composed {
                summary_visualization,
                ..
            } => summary_visualization.as_deref(),
            VisualizationKind::Simple { .. } => None,
        }
    }

    /// KPI names shown by a simple visualization; empty for composed ones.
    pub fn kpis(&self) -> &[String] {
        match &self.kind {
            VisualizationKind::Simple { kpis } => kpis,
            VisualizationKind::Composed { .. } => &[],
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DeclarativeDefinition {
    pub kpis: Vec<Kpi>,
    pub visualizations: Vec<VisualizationDef>,
}

impl DeclarativeDefinition {
    /// First KPI with the given name.
    pub fn kpi(&self, name: &str) -> Option<&Kpi> {
        self.kpis.iter().find(|k| k.name == name)
    }

    /// First visualization with the given name.
    pub fn visualization(&self, name: &str) -> Option<&VisualizationDef> {
        self.visualizations.iter().find(|v| v.name == name)
    }
}
