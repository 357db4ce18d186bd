use super::{entry_page, representative, LayoutConfig};
use crate::definition::VisNode;
use crate::ir::{DashboardItem, DashboardPage, GridRect, LayoutStyle, PageId, VirtualDashboard};
use crate::slug::SlugAllocator;

/// One page per level: the entry page holds the roots, and every composed
/// node gets its own page of children, linked from the node's tile.
///
/// Cells on a page all have the same size. There is no depth cap.
pub fn layout_nested(roots: &[VisNode<'_>], cfg: &LayoutConfig) -> VirtualDashboard {
    let mut page_ids = SlugAllocator::new();
    let entry = entry_page(cfg);
    page_ids.allocate(entry.page_id.as_str(), "page");

    let mut pages = Vec::new();
    build_page(entry, roots, cfg, &mut page_ids, &mut pages);
    VirtualDashboard {
        pages,
        layout_style: LayoutStyle::Nested,
    }
}

fn build_page(
    mut page: DashboardPage,
    nodes: &[VisNode<'_>],
    cfg: &LayoutConfig,
    page_ids: &mut SlugAllocator,
    pages: &mut Vec<DashboardPage>,
) {
    let cell_w = cfg.grid_columns / cfg.per_row;
    let mut item_ids = SlugAllocator::new();
    let mut subpages = Vec::new();

    for (i, node) in nodes.iter().enumerate() {
        let i = i as u32;
        let rect = GridRect::new(
            (i % cfg.per_row) * cell_w,
            (i / cfg.per_row) * cfg.base_panel_height,
            cell_w,
            cfg.base_panel_height,
        );
        let mut placement = representative(node, rect);
        if node.is_composed() {
            let id = PageId(page_ids.allocate(node.name(), "page"));
            placement.link_to = Some(id.clone());
            subpages.push((id, node));
        }
        page.items.push(DashboardItem {
            item_id: item_ids.allocate(node.name(), "item"),
            bounds: rect,
            placements: vec![placement],
        });
    }

    let parent = page.page_id.clone();
    pages.push(page);
    for (id, node) in subpages {
        let child = DashboardPage {
            page_id: id,
            title: node.name().to_string(),
            grid_columns: cfg.grid_columns,
            items: Vec::new(),
            parent_page: Some(parent.clone()),
        };
        build_page(child, &node.children, cfg, page_ids, pages);
    }
}
