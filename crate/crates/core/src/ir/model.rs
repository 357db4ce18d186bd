//! Technology-agnostic virtual dashboard.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LayoutStyle {
    Pyramidal,
    Repeated,
    Nested,
}

impl LayoutStyle {
    pub const ALL: [LayoutStyle; 3] = [Self::Pyramidal, Self::Repeated, Self::Nested];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pyramidal => "pyramidal",
            Self::Repeated => "repeated",
            Self::Nested => "nested",
        }
    }

    /// Whether the style always produces exactly one page.
    pub fn is_single_page(self) -> bool {
        !matches!(self, Self::Nested)
    }
}

impl fmt::Display for LayoutStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for LayoutStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|st| st.as_str() == s)
            .ok_or_else(|| {
                format!("unknown layout style '{s}' (expected pyramidal, repeated or nested)")
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PageId(pub String);

impl PageId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Integer grid rectangle, origin top-left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridRect {
    pub x: u32,
    pub y: u32,
    pub w: u32,
    pub h: u32,
}

impl GridRect {
    pub const fn new(x: u32, y: u32, w: u32, h: u32) -> Self {
        Self { x, y, w, h }
    }

    pub fn right(&self) -> u32 {
        self.x + self.w
    }

    pub fn bottom(&self) -> u32 {
        self.y + self.h
    }

    /// Interiors intersect; sharing an edge is not an overlap.
    pub fn overlaps(&self, other: &GridRect) -> bool {
        self.x < other.right()
            && other.x < self.right()
            && self.y < other.bottom()
            && other.y < self.bottom()
    }

    pub fn contains(&self, other: &GridRect) -> bool {
        other.x >= self.x
            && other.y >= self.y
            && other.right() <= self.right()
            && other.bottom() <= self.bottom()
    }
}

impl fmt::Display for GridRect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{x:{},y:{},w:{},h:{}}}", self.x, self.y, self.w, self.h)
    }
}

/// A simple visualization drawn at a position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacedVisualization {
    pub vis_name: String,
    pub rect: GridRect,
    /// The composed visualization this tile stands for, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub represents: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link_to: Option<PageId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DashboardItem {
    pub item_id: String,
    pub bounds: GridRect,
    pub placements: Vec<PlacedVisualization>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DashboardPage {
    pub page_id: PageId,
    pub title: String,
    pub grid_columns: u32,
    pub items: Vec<DashboardItem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent_page: Option<PageId>,
}

impl DashboardPage {
    pub fn placements(&self) -> impl Iterator<Item = &PlacedVisualization> {
        self.items.iter().flat_map(|i| i.placements.iter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualDashboard {
    /// The first page is the entry page.
    pub pages: Vec<DashboardPage>,
    pub layout_style: LayoutStyle,
}

impl VirtualDashboard {
    pub fn entry_page(&self) -> Option<&DashboardPage> {
        self.pages.first()
    }

    pub fn page(&self, id: &PageId) -> Option<&DashboardPage> {
        self.pages.iter().find(|p| &p.page_id == id)
    }

    pub fn placements(&self) -> impl Iterator<Item = &PlacedVisualization> {
        self.pages.iter().flat_map(|p| p.placements())
    }
}
