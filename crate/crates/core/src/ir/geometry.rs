//! Structural and geometric checks on a virtual dashboard.

use std::collections::HashSet;
use std::fmt;

use super::model::{GridRect, PageId, VirtualDashboard};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryViolation {
    /// A rectangle with zero width or height, or extending past the grid.
    OutOfBounds {
        page: PageId,
        /// Item id, plus the visualization name for placements.
        owner: String,
        rect: GridRect,
        grid_columns: u32,
    },
    NotContained {
        page: PageId,
        item: String,
        vis_name: String,
    },
    PlacementOverlap {
        page: PageId,
        item: String,
        first: String,
        second: String,
    },
    ItemOverlap {
        page: PageId,
        first: String,
        second: String,
    },
    EmptyItem {
        page: PageId,
        item: String,
    },
    DanglingLink {
        page: PageId,
        vis_name: String,
        target: PageId,
    },
    LinkWithoutRepresentative {
        page: PageId,
        vis_name: String,
    },
    DanglingParent {
        page: PageId,
        parent: PageId,
    },
    DuplicatePageId {
        page: PageId,
    },
    PageCount {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for GeometryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeometryViolation::*;
        match self {
            OutOfBounds {
                page,
                owner,
                rect,
                grid_columns,
            } => write!(
                f,
                "{page}/{owner}: {rect} outside a {grid_columns}-column grid"
            ),
            NotContained {
                page,
                item,
                vis_name,
            } => write!(f, "{page}/{item}: '{vis_name}' not inside the item bounds"),
            PlacementOverlap {
                page,
                item,
                first,
                second,
            } => write!(f, "{page}/{item}: '{first}' overlaps '{second}'"),
            ItemOverlap {
                page,
                first,
                second,
            } => write!(f, "{page}: item '{first}' overlaps item '{second}'"),
            EmptyItem { page, item } => write!(f, "{page}/{item}: item has no placements"),
            DanglingLink {
                page,
                vis_name,
                target,
            } => write!(f, "{page}: '{vis_name}' links to missing page '{target}'"),
            LinkWithoutRepresentative { page, vis_name } => {
                write!(
                    f,
                    "{page}: '{vis_name}' links without representing a visualization"
                )
            }
            DanglingParent { page, parent } => {
                write!(f, "{page}: parent page '{parent}' does not exist")
            }
            DuplicatePageId { page } => write!(f, "page id '{page}' is used more than once"),
            PageCount { expected, found } => {
                write!(
                    f,
                    "expected {expected} page(s) for this layout style, found {found}"
                )
            }
        }
    }
}

fn in_grid(rect: &GridRect, grid_columns: u32) -> bool {
    rect.w >= 1
        && rect.h >= 1
        && rect
            .x
            .checked_add(rect.w)
            .is_some_and(|r| r <= grid_columns)
}

/// Report every geometric and linkage violation. Empty means well formed.
pub fn check_geometry(vd: &VirtualDashboard) -> Vec<GeometryViolation> {
    use GeometryViolation::*;

    let mut out = Vec::new();

    if vd.layout_style.is_single_page() && vd.pages.len() != 1 {
        out.push(PageCount {
            expected: 1,
            found: vd.pages.len(),
        });
    }

    let mut ids = HashSet::new();
    for page in &vd.pages {
        if !ids.insert(&page.page_id) {
            out.push(DuplicatePageId {
                page: page.page_id.clone(),
            });
        }
    }

    for page in &vd.pages {
        let pid = &page.page_id;
        if let Some(parent) = &page.parent_page {
            if !ids.contains(parent) {
                out.push(DanglingParent {
                    page: pid.clone(),
                    parent: parent.clone(),
                });
            }
        }

        for item in &page.items {
            if !in_grid(&item.bounds, page.grid_columns) {
                out.push(OutOfBounds {
                    page: pid.clone(),
                    owner: item.item_id.clone(),
                    rect: item.bounds,
                    grid_columns: page.grid_columns,
                });
            }
            if item.placements.is_empty() {
                out.push(EmptyItem {
                    page: pid.clone(),
                    item: item.item_id.clone(),
                });
            }
            for p in &item.placements {
                if !in_grid(&p.rect, page.grid_columns) {
                    out.push(OutOfBounds {
                        page: pid.clone(),
                        owner: format!("{}/{}", item.item_id, p.vis_name),
                        rect: p.rect,
                        grid_columns: page.grid_columns,
                    });
                }
                if !item.bounds.contains(&p.rect) {
                    out.push(NotContained {
                        page: pid.clone(),
                        item: item.item_id.clone(),
                        vis_name: p.vis_name.clone(),
                    });
                }
                if let Some(target) = &p.link_to {
                    if !ids.contains(target) {
                        out.push(DanglingLink {
                            page: pid.clone(),
                            vis_name: p.vis_name.clone(),
                            target: target.clone(),
                        });
                    }
                    if p.represents.is_none() {
                        out.push(LinkWithoutRepresentative {
                            page: pid.clone(),
                            vis_name: p.vis_name.clone(),
                        });
                    }
                }
            }
            for (i, a) in item.placements.iter().enumerate() {
                for b in &item.placements[i + 1..] {
                    if a.rect.overlaps(&b.rect) {
                        out.push(PlacementOverlap {
                            page: pid.clone(),
                            item: item.item_id.clone(),
                            first: a.vis_name.clone(),
                            second: b.vis_name.clone(),
                        });
                    }
                }
            }
        }

        for (i, a) in page.items.iter().enumerate() {
            for b in &page.items[i + 1..] {
                if a.bounds.overlaps(&b.bounds) {
                    out.push(ItemOverlap {
                        page: pid.clone(),
                        first: a.item_id.clone(),
                        second: b.item_id.clone(),
                    });
                }
            }
        }
    }

    out
}
