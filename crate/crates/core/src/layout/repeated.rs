use num_rational::Ratio;

use super::{check_depth, entry_page, representative, LayoutConfig, LayoutError};
use crate::definition::VisNode;
use crate::ir::{DashboardItem, GridRect, LayoutStyle, PlacedVisualization, VirtualDashboard};
use crate::slug::SlugAllocator;

const MIN_PARENT_WIDTH: u32 = 2;

/// Single page; each root is a full-width band with composed tiles at the
/// left and their children stacked to the right.
pub fn layout_repeated(
    roots: &[VisNode<'_>],
    cfg: &LayoutConfig,
) -> Result<VirtualDashboard, LayoutError> {
    check_depth(roots, cfg.max_depth)?;

    let mut page = entry_page(cfg);
    let mut item_ids = SlugAllocator::new();
    let mut y = 0;
    for root in roots {
        let mut placements = Vec::new();
        let h = place(root, 0, y, cfg.grid_columns, cfg, &mut placements)?;
        let bounds = GridRect::new(0, y, cfg.grid_columns, h);
        y = bounds.bottom() + cfg.item_gap;
        page.items.push(DashboardItem {
            item_id: item_ids.allocate(root.name(), "item"),
            bounds,
            placements,
        });
    }
    Ok(VirtualDashboard {
        pages: vec![page],
        layout_style: LayoutStyle::Repeated,
    })
}

fn parent_width(w: u32, ratio: Ratio<i64>) -> u32 {
    let share = (Ratio::from_integer(i64::from(w)) * ratio)
        .floor()
        .to_integer();
    // ratio is in (0, 1) so share < w
    (share as u32).max(MIN_PARENT_WIDTH)
}

/// Place a band at (x, y) with width `w`; returns its height.
fn place(
    node: &VisNode<'_>,
    x: u32,
    y: u32,
    w: u32,
    cfg: &LayoutConfig,
    out: &mut Vec<PlacedVisualization>,
) -> Result<u32, LayoutError> {
    if !node.is_composed() {
        out.push(representative(
            node,
            GridRect::new(x, y, w, cfg.base_panel_height),
        ));
        return Ok(cfg.base_panel_height);
    }

    let pw = parent_width(w, cfg.parent_ratio);
    if pw >= w {
        return Err(LayoutError::GridTooNarrow {
            node: node.name().to_string(),
            width: w,
        });
    }
    // height is known once the children are stacked
    let slot = out.len();
    out.push(representative(node, GridRect::new(x, y, pw, 0)));
    let mut child_y = y;
    for child in &node.children {
        child_y += place(child, x + pw, child_y, w - pw, cfg, out)?;
    }
    let height = child_y - y;
    out[slot].rect.h = height;
    Ok(height)
}
