//! Canonical JSON form of the virtual dashboard (`.ir.json`).
//!
//! Objects are emitted with sorted keys, two-space indentation and a single
//! trailing newline; absent optional fields are omitted.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::model::{DashboardPage, LayoutStyle, VirtualDashboard};

pub const IR_SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum IrFormatError {
    #[error("malformed IR document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("unsupported IR schema_version {found} (expected {IR_SCHEMA_VERSION})")]
    SchemaVersion { found: String },
}

#[derive(Serialize)]
struct IrOut<'a> {
    schema_version: u64,
    layout_style: LayoutStyle,
    pages: &'a [DashboardPage],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IrIn {
    #[allow(dead_code)]
    schema_version: u64,
    layout_style: LayoutStyle,
    pages: Vec<DashboardPage>,
}

/// Serialize to the canonical textual form.
pub fn serialize_ir(vd: &VirtualDashboard) -> String {
    canonical_json(&IrOut {
        schema_version: IR_SCHEMA_VERSION,
        layout_style: vd.layout_style,
        pages: &vd.pages,
    })
}

/// Parse an IR document produced by [`serialize_ir`].
pub fn parse_ir(text: &str) -> Result<VirtualDashboard, IrFormatError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    match value.get("schema_version") {
        Some(v) if v.as_u64() == Some(IR_SCHEMA_VERSION) => {}
        other => {
            return Err(IrFormatError::SchemaVersion {
                found: other.map_or_else(|| "<missing>".to_string(), ToString::to_string),
            })
        }
    }
    let doc: IrIn = serde_json::from_value(value)?;
    Ok(VirtualDashboard {
        pages: doc.pages,
        layout_style: doc.layout_style,
    })
}

/// Sorted-key, pretty-printed JSON with a trailing newline.
///
/// Going through `serde_json::Value` sorts object keys because its map is
/// ordered by key.
pub(crate) fn canonical_json<T: Serialize + ?Sized>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("IR types always serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("JSON values always serialize");
    text.push('\n');
    text
}
