//! The virtual dashboard intermediate representation.

mod geometry;
mod model;
mod serial;

pub use geometry::{check_geometry, GeometryViolation};
pub use model::{
    DashboardItem, DashboardPage, GridRect, LayoutStyle, PageId, PlacedVisualization,
    VirtualDashboard,
};
pub(crate) use serial::canonical_json;
pub use serial::{parse_ir, serialize_ir, IrFormatError, IR_SCHEMA_VERSION};
