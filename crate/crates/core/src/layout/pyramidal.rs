use super::{check_depth, entry_page, representative, LayoutConfig, LayoutError};
use crate::definition::VisNode;
use crate::ir::{DashboardItem, GridRect, LayoutStyle, PlacedVisualization, VirtualDashboard};
use crate::slug::SlugAllocator;

/// Single page; each root is a full-width item whose tile sits on top and
/// whose children are tiled below it.
pub fn layout_pyramidal(
    roots: &[VisNode<'_>],
    cfg: &LayoutConfig,
) -> Result<VirtualDashboard, LayoutError> {
    check_depth(roots, cfg.max_depth)?;

    let mut page = entry_page(cfg);
    let mut item_ids = SlugAllocator::new();
    let mut y = 0;
    for root in roots {
        let mut placements = Vec::new();
        let h = place(root, 0, y, cfg.grid_columns, cfg, &mut placements);
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
        layout_style: LayoutStyle::Pyramidal,
    })
}

/// Place a subtree with its top-left corner at (x, y) and width `w`;
/// returns the subtree height.
fn place(
    node: &VisNode<'_>,
    x: u32,
    y: u32,
    w: u32,
    cfg: &LayoutConfig,
    out: &mut Vec<PlacedVisualization>,
) -> u32 {
    out.push(representative(
        node,
        GridRect::new(x, y, w, cfg.base_panel_height),
    ));
    if node.children.is_empty() {
        return cfg.base_panel_height;
    }

    // narrower than per_row: fall back to one column per grid cell
    let slots = cfg.per_row.min(w);
    let column = w / slots;
    let mut row_y = y + cfg.base_panel_height;
    for row in node.children.chunks(slots as usize) {
        let mut row_height = 0;
        for (i, child) in row.iter().enumerate() {
            let h = place(child, x + i as u32 * column, row_y, column, cfg, out);
            row_height = row_height.max(h);
        }
        row_y += row_height;
    }
    row_y - y
}
