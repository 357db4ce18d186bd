//! Shared helpers for integration tests: fixtures, a random generator of
//! valid definitions, and oracles computed from the definition alone.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use dashgen::definition::{DeclarativeDefinition, VisualizationKind};
use dashgen::ir::LayoutStyle;
use dashgen::layout::LayoutConfig;
use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn f1_text() -> String {
    fixture("fixtures/f1.yaml")
}

pub fn f1() -> DeclarativeDefinition {
    dashgen::definition::parse_definition(&f1_text()).expect("F1 parses")
}

pub const FUZZ_MAX_ROOTS: usize = 5;
pub const FUZZ_MAX_CHILDREN: usize = 4;
pub const FUZZ_MAX_DEPTH: usize = 5;
const FUNCTIONS: [&str; 4] = ["avg", "sum", "min", "max"];
const NAME_PREFIXES: [&str; 3] = ["Panel ", "panel-", "PANEL_"];

/// Builds one random valid definition document as JSON (which is also
/// YAML). Names are chosen so that distinct names sometimes share a slug.
struct Generator<'r, R: Rng> {
    rng: &'r mut R,
    kpis: Vec<String>,
    visualizations: Vec<Value>,
    counter: usize,
}

impl<R: Rng> Generator<'_, R> {
    fn fresh_name(&mut self) -> String {
        let prefix = NAME_PREFIXES[self.counter % NAME_PREFIXES.len()];
        let name = format!("{prefix}{}", self.counter / 2);
        self.counter += 1;
        name
    }

    fn simple(&mut self, name: String) {
        let n = self.rng.gen_range(1..=self.kpis.len().min(3));
        let kpis: Vec<String> = self.kpis.choose_multiple(self.rng, n).cloned().collect();
        self.visualizations
            .push(json!({ "name": name, "kpis": kpis }));
    }

    fn node(&mut self, depth: usize) -> String {
        let name = self.fresh_name();
        if depth < FUZZ_MAX_DEPTH && self.rng.gen_bool(0.5) {
            let k = self.rng.gen_range(1..=FUZZ_MAX_CHILDREN);
            let children: Vec<String> = (0..k).map(|_| self.node(depth + 1)).collect();
            let summary = format!("{name} summary");
            self.simple(summary.clone());
            self.visualizations.push(json!({
                "name": name,
                "composing_visualizations": children,
                "summary_visualization": summary,
            }));
        } else {
            self.simple(name.clone());
        }
        name
    }
}

pub fn random_definition_text<R: Rng>(rng: &mut R) -> String {
    let n_simple = rng.gen_range(1..=4);
    let mut kpis: Vec<Value> = (0..n_simple)
        .map(|i| {
            let mut target = json!({ "id": format!("host-{i}") });
            if rng.gen_bool(0.5) {
                target["cluster"] = json!(format!("cluster-{}", i % 2));
            }
            json!({ "name": format!("KPI {i}"), "metric": format!("metric_{i}"), "target": target })
        })
        .collect();
    let mut kpi_names: Vec<String> = (0..n_simple).map(|i| format!("KPI {i}")).collect();
    if n_simple >= 2 && rng.gen_bool(0.5) {
        let sources: Vec<String> = kpi_names.choose_multiple(rng, 2).cloned().collect();
        let function = FUNCTIONS[rng.gen_range(0..FUNCTIONS.len())];
        kpis.push(json!({
            "name": "Derived",
            "source_kpis": sources,
            "transformation_function": function,
        }));
        kpi_names.push("Derived".into());
    }

    let mut gen = Generator {
        rng,
        kpis: kpi_names,
        visualizations: Vec::new(),
        counter: 0,
    };
    let roots = gen.rng.gen_range(0..=FUZZ_MAX_ROOTS);
    for _ in 0..roots {
        gen.node(1);
    }
    let mut visualizations = gen.visualizations;
    visualizations.shuffle(gen.rng);
    serde_json::to_string_pretty(&json!({ "kpis": kpis, "visualizations": visualizations }))
        .unwrap()
}

pub fn random_config<R: Rng>(rng: &mut R, style: LayoutStyle) -> LayoutConfig {
    let mut cfg = LayoutConfig::new(style);
    cfg.grid_columns = if rng.gen_bool(0.5) { 12 } else { 24 };
    cfg.per_row = rng.gen_range(1..=6);
    cfg.max_depth = rng.gen_range(1..=FUZZ_MAX_DEPTH);
    cfg
}

/// Expected `(vis_name, represents)` multiset: every non-summary simple
/// visualization once on its own, every composed one once via its summary.
pub fn expected_placements(
    defn: &DeclarativeDefinition,
) -> BTreeMap<(String, Option<String>), usize> {
    let summaries: Vec<&str> = defn
        .visualizations
        .iter()
        .filter_map(|v| v.summary())
        .collect();
    let mut out = BTreeMap::new();
    for v in &defn.visualizations {
        let key = match &v.kind {
            VisualizationKind::Simple { .. } if summaries.contains(&v.name.as_str()) => continue,
            VisualizationKind::Simple { .. } => (v.name.clone(), None),
            VisualizationKind::Composed {
                summary_visualization,
                ..
            } => (summary_visualization.clone().unwrap(), Some(v.name.clone())),
        };
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

/// Composed parent of each visualization (`None` for roots), by scanning the
/// child lists directly.
pub fn parent_of<'a>(defn: &'a DeclarativeDefinition, name: &str) -> Option<&'a str> {
    defn.visualizations
        .iter()
        .find(|v| v.children().iter().any(|c| c == name))
        .map(|v| v.name.as_str())
}

/// Level of a visualization counting roots as 1, walking parent links.
pub fn level_of(defn: &DeclarativeDefinition, name: &str) -> usize {
    match parent_of(defn, name) {
        Some(p) => 1 + level_of(defn, p),
        None => 1,
    }
}

/// Deepest level of any non-summary visualization.
pub fn max_level(defn: &DeclarativeDefinition) -> usize {
    let summaries: Vec<&str> = defn
        .visualizations
        .iter()
        .filter_map(|v| v.summary())
        .collect();
    defn.visualizations
        .iter()
        .filter(|v| !summaries.contains(&v.name.as_str()))
        .map(|v| level_of(defn, &v.name))
        .max()
        .unwrap_or(0)
}

/// Problems with a set of emitted Grafana dashboards: JSON validity, the
/// exact key set, unique panel ids, grid bounds, overlaps and links.
pub fn grafana_problems(files: &[(String, String)]) -> Vec<String> {
    use std::collections::{BTreeSet, HashSet};

    const DASHBOARD_KEYS: [&str; 6] = ["links", "panels", "schemaVersion", "tags", "title", "uid"];
    const PANEL_KEYS: [&str; 7] = [
        "datasource",
        "gridPos",
        "id",
        "links",
        "targets",
        "title",
        "type",
    ];
    const REQUIRED_PANEL_KEYS: [&str; 4] = ["gridPos", "id", "title", "type"];

    let mut problems = Vec::new();
    let mut uids = HashSet::new();
    let mut urls = Vec::new();
    for (path, text) in files {
        let doc: Value = match serde_json::from_str(text) {
            Ok(v) => v,
            Err(e) => {
                problems.push(format!("{path}: not JSON: {e}"));
                continue;
            }
        };
        let keys: BTreeSet<&str> = doc
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        if keys != DASHBOARD_KEYS.into_iter().collect() {
            problems.push(format!("{path}: dashboard keys {keys:?}"));
        }
        uids.insert(doc["uid"].as_str().unwrap_or_default().to_string());
        for l in doc["links"].as_array().into_iter().flatten() {
            urls.push((
                path.clone(),
                l["url"].as_str().unwrap_or_default().to_string(),
            ));
        }

        let panels = doc["panels"].as_array().cloned().unwrap_or_default();
        let mut ids = HashSet::new();
        let mut rects = Vec::new();
        for p in &panels {
            let keys: BTreeSet<&str> = p.as_object().unwrap().keys().map(String::as_str).collect();
            if !REQUIRED_PANEL_KEYS.iter().all(|k| keys.contains(k))
                || !keys.iter().all(|k| PANEL_KEYS.contains(k))
            {
                problems.push(format!("{path}: panel keys {keys:?}"));
            }
            if p["type"] != "row" && !keys.contains("targets") {
                problems.push(format!("{path}: panel {} has no targets", p["id"]));
            }
            if !ids.insert(p["id"].as_u64().unwrap_or(0)) {
                problems.push(format!("{path}: duplicate panel id {}", p["id"]));
            }
            let g = &p["gridPos"];
            let (x, y, w, h) = (
                g["x"].as_u64().unwrap(),
                g["y"].as_u64().unwrap(),
                g["w"].as_u64().unwrap(),
                g["h"].as_u64().unwrap(),
            );
            if x + w > 24 {
                problems.push(format!("{path}: panel {} exceeds 24 columns", p["id"]));
            }
            rects.push((p["id"].clone(), x, y, w, h));
            for l in p["links"].as_array().into_iter().flatten() {
                urls.push((
                    path.clone(),
                    l["url"].as_str().unwrap_or_default().to_string(),
                ));
            }
        }
        for (i, a) in rects.iter().enumerate() {
            for b in &rects[i + 1..] {
                let overlap =
                    a.1 < b.1 + b.3 && b.1 < a.1 + a.3 && a.2 < b.2 + b.4 && b.2 < a.2 + a.4;
                if overlap {
                    problems.push(format!("{path}: panels {} and {} overlap", a.0, b.0));
                }
            }
        }
    }
    for (path, url) in urls {
        match url.strip_prefix("/d/") {
            Some(uid) if uids.contains(uid) => {}
            _ => problems.push(format!(
                "{path}: link {url} resolves to no emitted dashboard"
            )),
        }
    }
    problems
}
