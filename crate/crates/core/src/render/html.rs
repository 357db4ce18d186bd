//! Static HTML preview: one section per page, one absolutely positioned box
//! per placement, links as in-document anchors.

use std::fmt::Write;

use super::RenderedArtifact;
use crate::ir::{GridRect, VirtualDashboard};

/// Pixels per grid cell, both axes.
pub const CELL_PX: u32 = 40;

const STYLE: &str = "body{font-family:sans-serif;margin:16px;background:#f4f5f7}\
section{margin-bottom:48px}\
.grid{position:relative;background:#fff;border:1px solid #ccc}\
.item{position:absolute;box-sizing:border-box;border:1px dashed #999}\
.box{position:absolute;box-sizing:border-box;border:1px solid #2b6cb0;background:#ebf4ff;\
padding:4px;overflow:hidden;color:#1a202c;text-decoration:none;font-size:13px}\
a.box{background:#fefcbf;border-color:#b7791f}\
.box small{display:block;color:#555}";

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            _ => out.push(c),
        }
    }
    out
}

fn position(r: &GridRect) -> String {
    format!(
        "left:{}px;top:{}px;width:{}px;height:{}px",
        r.x * CELL_PX,
        r.y * CELL_PX,
        r.w * CELL_PX,
        r.h * CELL_PX
    )
}

/// Render the whole dashboard as a single `preview.html`.
pub fn render_html_preview(vd: &VirtualDashboard) -> RenderedArtifact {
    let mut html = String::new();
    html.push_str("<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n");
    let _ = writeln!(
        html,
        "<title>dashboard preview ({})</title>",
        vd.layout_style
    );
    let _ = writeln!(html, "<style>{STYLE}</style>\n</head>\n<body>");

    for page in &vd.pages {
        let bottom = page
            .items
            .iter()
            .map(|i| i.bounds.bottom())
            .max()
            .unwrap_or(0);
        let _ = writeln!(html, "<section id=\"{}\">", escape(page.page_id.as_str()));
        let _ = writeln!(html, "<h2>{}</h2>", escape(&page.title));
        if let Some(parent) = &page.parent_page {
            let title = vd
                .page(parent)
                .map_or(parent.as_str(), |p| p.title.as_str());
            let _ = writeln!(
                html,
                "<p><a href=\"#{}\">back to {}</a></p>",
                escape(parent.as_str()),
                escape(title)
            );
        }
        let _ = writeln!(
            html,
            "<div class=\"grid\" style=\"width:{}px;height:{}px\">",
            page.grid_columns * CELL_PX,
            bottom * CELL_PX
        );
        for item in &page.items {
            let _ = writeln!(
                html,
                "<div class=\"item\" data-item=\"{}\" style=\"{}\"></div>",
                escape(&item.item_id),
                position(&item.bounds)
            );
            for p in &item.placements {
                let caption = p
                    .represents
                    .as_ref()
                    .map(|r| format!("<small>summary of {}</small>", escape(r)))
                    .unwrap_or_default();
                match &p.link_to {
                    Some(target) => {
                        let _ = writeln!(
                            html,
                            "<a class=\"box\" href=\"#{}\" style=\"{}\">{}{}</a>",
                            escape(target.as_str()),
                            position(&p.rect),
                            escape(&p.vis_name),
                            caption
                        );
                    }
                    None => {
                        let _ = writeln!(
                            html,
                            "<div class=\"box\" style=\"{}\">{}{}</div>",
                            position(&p.rect),
                            escape(&p.vis_name),
                            caption
                        );
                    }
                }
            }
        }
        html.push_str("</div>\n</section>\n");
    }
    html.push_str("</body>\n</html>\n");
    RenderedArtifact::new("preview.html", html)
}
