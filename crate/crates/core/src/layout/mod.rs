//! Meta-model layouts: turn a visualization forest into a virtual dashboard.
//!
//! * Pyramidal: one item per root; a node's tile spans its rectangle and
//!   its children are tiled underneath, `per_row` per row.
//! * Repeated: one band per root; a composed node's tile sits at the left
//!   and its children are stacked to its right.
//! * Nested: one page of equal cells per level, with composed nodes linking
//!   to a dedicated page for their children.
//!
//! A composed node is always drawn as its summary visualization.

mod config;
mod nested;
mod pyramidal;
mod repeated;

use thiserror::Error;

pub use config::{ConfigError, LayoutConfig};

use crate::definition::VisNode;
use crate::ir::{
    DashboardPage, GridRect, LayoutStyle, PageId, PlacedVisualization, VirtualDashboard,
};

pub(crate) const ENTRY_PAGE_TITLE: &str = "Overview";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    /// A composed node sits at a depth where its children would pass the
    /// configured cap.
    #[error("DepthExceeded node={node} depth={depth} max={max_depth}")]
    DepthExceeded {
        node: String,
        depth: usize,
        max_depth: usize,
    },
    /// The rectangle left for a composed node cannot fit both its tile and
    /// its children side by side.
    #[error("GridTooNarrow node={node} width={width}")]
    GridTooNarrow { node: String, width: u32 },
}

/// Lay out the forest with the configured meta-model.
pub fn build_layout(
    roots: &[VisNode<'_>],
    cfg: &LayoutConfig,
) -> Result<VirtualDashboard, LayoutError> {
    match cfg.style {
        LayoutStyle::Pyramidal => pyramidal::layout_pyramidal(roots, cfg),
        LayoutStyle::Repeated => repeated::layout_repeated(roots, cfg),
        LayoutStyle::Nested => Ok(nested::layout_nested(roots, cfg)),
    }
}

pub use nested::layout_nested;
pub use pyramidal::layout_pyramidal;
pub use repeated::layout_repeated;

/// First composed node, in pre-order, whose children would land deeper
/// than `max_depth`.
fn check_depth(roots: &[VisNode<'_>], max_depth: usize) -> Result<(), LayoutError> {
    let mut offender = None;
    for root in roots {
        root.walk(&mut |n| {
            if offender.is_none() && n.is_composed() && n.depth >= max_depth {
                offender = Some(LayoutError::DepthExceeded {
                    node: n.name().to_string(),
                    depth: n.depth,
                    max_depth,
                });
            }
        });
    }
    offender.map_or(Ok(()), Err)
}

fn entry_page(cfg: &LayoutConfig) -> DashboardPage {
    DashboardPage {
        page_id: PageId("overview".into()),
        title: ENTRY_PAGE_TITLE.into(),
        grid_columns: cfg.grid_columns,
        items: Vec::new(),
        parent_page: None,
    }
}

fn representative(node: &VisNode<'_>, rect: GridRect) -> PlacedVisualization {
    PlacedVisualization {
        vis_name: node.representative().name.clone(),
        rect,
        represents: node.is_composed().then(|| node.name().to_string()),
        link_to: None,
    }
}
