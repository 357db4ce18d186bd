//! Grafana dashboard JSON model, one dashboard per page.
//!
//! Placements become `stat` panels when they stand for a composed
//! visualization and `timeseries` panels otherwise. Items holding more than
//! one placement are marked by a zero-height `row` panel on their top edge,
//! so panel positions stay exactly those of the IR.

use std::collections::HashMap;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::{is_safe_slug, RenderError, RenderedArtifact};
use crate::definition::{kpi_expression, DeclarativeDefinition};
use crate::ir::{canonical_json, DashboardPage, PageId, VirtualDashboard};

pub const GRAFANA_SCHEMA_VERSION: u32 = 39;

const DEFAULT_DATASOURCE: &str = "default";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrafanaOptions {
    /// Datasource for every query panel. `"default"` leaves the choice to
    /// Grafana's default datasource and emits no `datasource` key.
    pub datasource_name: String,
    /// Tag stamped on every generated dashboard.
    pub tag: String,
}

impl Default for GrafanaOptions {
    fn default() -> Self {
        Self {
            datasource_name: DEFAULT_DATASOURCE.into(),
            tag: "dashgen".into(),
        }
    }
}

/// First 12 hex characters of SHA-256 over `dashgen/<page_id>`.
pub fn dashboard_uid(page_id: &PageId) -> String {
    let digest = Sha256::digest(format!("dashgen/{}", page_id.as_str()).as_bytes());
    digest.iter().take(6).map(|b| format!("{b:02x}")).collect()
}

/// A, B, ..., Z, AA, AB, ...
fn ref_id(mut index: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'A' + (index % 26) as u8);
        if index < 26 {
            break;
        }
        index = index / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ASCII")
}

fn link(title: &str, uid: &str) -> Value {
    json!({ "title": title, "url": format!("/d/{uid}") })
}

/// Render each page as `<page_id>.json`, in page order.
pub fn render_grafana(
    vd: &VirtualDashboard,
    defn: &DeclarativeDefinition,
    opts: &GrafanaOptions,
) -> Result<Vec<RenderedArtifact>, RenderError> {
    if opts.datasource_name.is_empty() {
        return Err(RenderError::Options("datasource_name must not be empty"));
    }
    if opts.tag.is_empty() {
        return Err(RenderError::Options("tag must not be empty"));
    }

    let mut uids: HashMap<&PageId, String> = HashMap::new();
    let mut owners: HashMap<String, &PageId> = HashMap::new();
    for page in &vd.pages {
        if !is_safe_slug(page.page_id.as_str()) {
            return Err(RenderError::UnsafePath(page.page_id.to_string()));
        }
        let uid = dashboard_uid(&page.page_id);
        if let Some(other) = owners.insert(uid.clone(), &page.page_id) {
            return Err(RenderError::UidCollision(
                other.to_string(),
                page.page_id.to_string(),
            ));
        }
        uids.insert(&page.page_id, uid);
    }

    vd.pages
        .iter()
        .map(|page| {
            let dashboard = render_page(vd, page, &uids, defn, opts)?;
            Ok(RenderedArtifact::new(
                format!("{}.json", page.page_id),
                canonical_json(&dashboard),
            ))
        })
        .collect()
}

fn render_page(
    vd: &VirtualDashboard,
    page: &DashboardPage,
    uids: &HashMap<&PageId, String>,
    defn: &DeclarativeDefinition,
    opts: &GrafanaOptions,
) -> Result<Value, RenderError> {
    let title_of = |id: &PageId| {
        vd.page(id)
            .map_or_else(|| id.to_string(), |p| p.title.clone())
    };
    // page links were checked by the caller's geometry pass; fall back to
    // the raw id rather than panic
    let uid_of = |id: &PageId| uids.get(id).cloned().unwrap_or_else(|| dashboard_uid(id));

    let mut panels = Vec::new();
    let mut next_id = 1;
    for placement in page.placements() {
        let vis = defn
            .visualization(&placement.vis_name)
            .ok_or_else(|| RenderError::UnknownVisualization(placement.vis_name.clone()))?;
        if !vis.is_simple() {
            return Err(RenderError::NotSimple(vis.name.clone()));
        }
        let targets = vis
            .kpis()
            .iter()
            .enumerate()
            .map(|(i, kpi)| {
                let expr = kpi_expression(kpi, defn).map_err(|_| RenderError::UnknownKpi {
                    vis: vis.name.clone(),
                    kpi: kpi.clone(),
                })?;
                Ok(json!({ "refId": ref_id(i), "expr": expr }))
            })
            .collect::<Result<Vec<_>, RenderError>>()?;

        let r = placement.rect;
        let mut panel = json!({
            "id": next_id,
            "title": placement.vis_name,
            "type": if placement.represents.is_some() { "stat" } else { "timeseries" },
            "gridPos": { "h": r.h, "w": r.w, "x": r.x, "y": r.y },
            "targets": targets,
        });
        if let Some(target) = &placement.link_to {
            panel["links"] = json!([link(&title_of(target), &uid_of(target))]);
        }
        if opts.datasource_name != DEFAULT_DATASOURCE {
            panel["datasource"] = json!({ "uid": opts.datasource_name });
        }
        panels.push(panel);
        next_id += 1;
    }

    for item in page.items.iter().filter(|i| i.placements.len() > 1) {
        let b = item.bounds;
        panels.push(json!({
            "id": next_id,
            "title": item.item_id,
            "type": "row",
            "gridPos": { "h": 0, "w": b.w, "x": b.x, "y": b.y },
        }));
        next_id += 1;
    }

    let links: Vec<Value> = page
        .parent_page
        .iter()
        .map(|parent| link(&title_of(parent), &uid_of(parent)))
        .collect();

    Ok(json!({
        "uid": uid_of(&page.page_id),
        "title": page.title,
        "tags": [opts.tag],
        "schemaVersion": GRAFANA_SCHEMA_VERSION,
        "panels": panels,
        "links": links,
    }))
}
