//! The declarative definition: parsing, validation and resolution into a
//! visualization forest.

mod expr;
mod forest;
mod model;
mod parse;
mod validate;

pub use expr::{kpi_expression, UnknownKpi};
pub use forest::{build_forest, tree_depth, VisNode};
pub use model::{
    DeclarativeDefinition, Kpi, KpiKind, Target, TransformationFunction, VisualizationDef,
    VisualizationKind,
};
pub use parse::{parse_definition, ParseError, RecordKind, VariantProblem};
pub use validate::{validate_definition, ValidationCode, ValidationError};
