//! Backends that turn a virtual dashboard into files.

mod grafana;
mod html;

pub use grafana::{dashboard_uid, render_grafana, GrafanaOptions, GRAFANA_SCHEMA_VERSION};
pub use html::{render_html_preview, CELL_PX};

use thiserror::Error;

/// One output file, relative to the output directory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedArtifact {
    pub relative_path: String,
    pub content: Vec<u8>,
}

impl RenderedArtifact {
    pub fn new(relative_path: impl Into<String>, content: impl Into<Vec<u8>>) -> Self {
        Self {
            relative_path: relative_path.into(),
            content: content.into(),
        }
    }

    pub fn text(&self) -> &str {
        std::str::from_utf8(&self.content).expect("artifacts are UTF-8")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("visualization '{0}' does not resolve against the definition")]
    UnknownVisualization(String),
    #[error("visualization '{0}' is composed and cannot be drawn as a panel")]
    NotSimple(String),
    #[error("KPI '{kpi}' of visualization '{vis}' does not resolve against the definition")]
    UnknownKpi { vis: String, kpi: String },
    #[error("pages '{0}' and '{1}' hash to the same dashboard uid")]
    UidCollision(String, String),
    #[error("page id '{0}' is not a filesystem-safe slug")]
    UnsafePath(String),
    #[error("invalid renderer options: {0}")]
    Options(&'static str),
}

pub(crate) fn is_safe_slug(s: &str) -> bool {
    !s.is_empty()
        && s.bytes()
            .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'-')
}
