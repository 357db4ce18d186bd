mod common;

use common::*;
use dashgen::definition::{build_forest, parse_definition, DeclarativeDefinition};
use dashgen::ir::*;
use dashgen::layout::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn layout(
    defn: &DeclarativeDefinition,
    style: LayoutStyle,
) -> Result<VirtualDashboard, LayoutError> {
    build_layout(&build_forest(defn), &LayoutConfig::new(style))
}

/// `(vis_name, represents, link_to, rect)` per placement, page by page.
fn summary(page: &DashboardPage) -> Vec<(&str, Option<&str>, Option<&str>, GridRect)> {
    page.placements()
        .map(|p| {
            (
                p.vis_name.as_str(),
                p.represents.as_deref(),
                p.link_to.as_ref().map(PageId::as_str),
                p.rect,
            )
        })
        .collect()
}

const R: fn(u32, u32, u32, u32) -> GridRect = GridRect::new;

#[test]
fn f1_pyramidal() {
    let vd = layout(&f1(), LayoutStyle::Pyramidal).unwrap();
    assert_eq!(vd.pages.len(), 1);
    assert_eq!(vd.pages[0].items.len(), 1);
    assert_eq!(
        summary(&vd.pages[0]),
        [
            ("CPU Overview", Some("CPU"), None, R(0, 0, 24, 8)),
            ("CPU System", None, None, R(0, 8, 6, 8)),
            ("CPU User", None, None, R(6, 8, 6, 8)),
        ]
    );
    assert_eq!(vd.pages[0].items[0].bounds, R(0, 0, 24, 16));
    assert_eq!(check_geometry(&vd), []);
}

#[test]
fn f1_repeated() {
    let vd = layout(&f1(), LayoutStyle::Repeated).unwrap();
    assert_eq!(vd.pages.len(), 1);
    assert_eq!(
        summary(&vd.pages[0]),
        [
            ("CPU Overview", Some("CPU"), None, R(0, 0, 8, 16)),
            ("CPU System", None, None, R(8, 0, 16, 8)),
            ("CPU User", None, None, R(8, 8, 16, 8)),
        ]
    );
    assert_eq!(check_geometry(&vd), []);
}

#[test]
fn f1_nested() {
    let vd = layout(&f1(), LayoutStyle::Nested).unwrap();
    assert_eq!(vd.pages.len(), 2);
    let (p0, p1) = (&vd.pages[0], &vd.pages[1]);
    assert_eq!(
        (
            p0.page_id.as_str(),
            p0.title.as_str(),
            p0.parent_page.as_ref()
        ),
        ("overview", "Overview", None)
    );
    assert_eq!(
        summary(p0),
        [("CPU Overview", Some("CPU"), Some("cpu"), R(0, 0, 6, 8))]
    );
    assert_eq!((p1.page_id.as_str(), p1.title.as_str()), ("cpu", "CPU"));
    assert_eq!(p1.parent_page, Some(PageId("overview".into())));
    assert_eq!(
        summary(p1),
        [
            ("CPU System", None, None, R(0, 0, 6, 8)),
            ("CPU User", None, None, R(6, 0, 6, 8))
        ]
    );
    // one item per cell
    assert_eq!(p1.items.len(), 2);
    assert_eq!(check_geometry(&vd), []);
}

#[test]
fn single_simple_root_is_the_same_in_both_single_page_styles() {
    let defn = parse_definition("kpis:\n  - {name: k, metric: m, target: {id: t}}\nvisualizations:\n  - {name: Only, kpis: [k]}\n").unwrap();
    for style in [LayoutStyle::Pyramidal, LayoutStyle::Repeated] {
        let vd = layout(&defn, style).unwrap();
        assert_eq!(
            summary(&vd.pages[0]),
            [("Only", None, None, R(0, 0, 24, 8))]
        );
    }
}

#[test]
fn two_simple_roots_nested_share_one_page() {
    let defn = parse_definition("kpis:\n  - {name: k, metric: m, target: {id: t}}\nvisualizations:\n  - {name: One, kpis: [k]}\n  - {name: Two, kpis: [k]}\n").unwrap();
    let vd = layout(&defn, LayoutStyle::Nested).unwrap();
    assert_eq!(vd.pages.len(), 1);
    assert_eq!(
        summary(&vd.pages[0]),
        [
            ("One", None, None, R(0, 0, 6, 8)),
            ("Two", None, None, R(6, 0, 6, 8))
        ]
    );
}

#[test]
fn chain_of_four_exceeds_default_depth() {
    let defn = parse_definition(&fixture("fixtures/chain4.yaml")).unwrap();
    let expected = LayoutError::DepthExceeded {
        node: "C".into(),
        depth: 3,
        max_depth: 3,
    };
    assert_eq!(layout(&defn, LayoutStyle::Pyramidal), Err(expected.clone()));
    assert_eq!(layout(&defn, LayoutStyle::Repeated), Err(expected));

    let mut cfg = LayoutConfig::new(LayoutStyle::Repeated);
    cfg.max_depth = 4;
    assert!(build_layout(&build_forest(&defn), &cfg).is_ok());
}

#[test]
fn chain_of_four_nested_is_a_linked_chain() {
    let defn = parse_definition(&fixture("fixtures/chain4.yaml")).unwrap();
    let vd = layout(&defn, LayoutStyle::Nested).unwrap();
    let ids: Vec<_> = vd.pages.iter().map(|p| p.page_id.as_str()).collect();
    assert_eq!(ids, ["overview", "a", "b", "c"]);
    for window in vd.pages.windows(2) {
        let (parent, child) = (&window[0], &window[1]);
        assert_eq!(parent.items.len(), 1);
        let link = parent.items[0].placements[0].link_to.as_ref();
        assert_eq!(link, Some(&child.page_id));
        assert_eq!(child.parent_page.as_ref(), Some(&parent.page_id));
    }
    assert_eq!(summary(&vd.pages[3]), [("D", None, None, R(0, 0, 6, 8))]);
}

#[test]
fn pyramidal_wraps_children_into_rows() {
    // five children with per_row = 2: rows of 2, 2, 1, columns 12 wide
    let mut text = String::from("kpis:\n  - {name: k, metric: m, target: {id: t}}\nvisualizations:\n  - {name: P, composing_visualizations: [c1, c2, c3, c4, c5], summary_visualization: S}\n  - {name: S, kpis: [k]}\n");
    for i in 1..=5 {
        text.push_str(&format!("  - {{name: c{i}, kpis: [k]}}\n"));
    }
    let defn = parse_definition(&text).unwrap();
    let mut cfg = LayoutConfig::new(LayoutStyle::Pyramidal);
    cfg.per_row = 2;
    let vd = build_layout(&build_forest(&defn), &cfg).unwrap();
    let rects: Vec<_> = vd.placements().map(|p| p.rect).collect();
    assert_eq!(
        rects,
        [
            R(0, 0, 24, 8),
            R(0, 8, 12, 8),
            R(12, 8, 12, 8),
            R(0, 16, 12, 8),
            R(12, 16, 12, 8),
            R(0, 24, 12, 8)
        ]
    );
}

#[test]
fn items_stack_with_a_gap() {
    let defn = parse_definition("kpis:\n  - {name: k, metric: m, target: {id: t}}\nvisualizations:\n  - {name: One, kpis: [k]}\n  - {name: Two, kpis: [k]}\n").unwrap();
    for style in [LayoutStyle::Pyramidal, LayoutStyle::Repeated] {
        let vd = layout(&defn, style).unwrap();
        let bounds: Vec<_> = vd.pages[0]
            .items
            .iter()
            .map(|i| (i.item_id.as_str(), i.bounds))
            .collect();
        assert_eq!(bounds, [("one", R(0, 0, 24, 8)), ("two", R(0, 9, 24, 8))]);
    }
}

#[test]
fn page_ids_are_deduplicated() {
    // "Overview" as a composed visualization collides with the entry page
    let text = "kpis:\n  - {name: k, metric: m, target: {id: t}}\nvisualizations:\n  - {name: Overview, composing_visualizations: [x], summary_visualization: s}\n  - {name: x, kpis: [k]}\n  - {name: s, kpis: [k]}\n";
    let vd = layout(&parse_definition(text).unwrap(), LayoutStyle::Nested).unwrap();
    let ids: Vec<_> = vd.pages.iter().map(|p| p.page_id.as_str()).collect();
    assert_eq!(ids, ["overview", "overview-2"]);
    assert_eq!(vd.pages[1].title, "Overview");
}

#[test]
fn narrow_grid_in_repeated_is_reported() {
    let defn = parse_definition(&fixture("fixtures/chain4.yaml")).unwrap();
    let mut cfg = LayoutConfig::new(LayoutStyle::Repeated);
    cfg.grid_columns = 4;
    cfg.per_row = 1;
    cfg.max_depth = 10;
    assert!(matches!(
        build_layout(&build_forest(&defn), &cfg),
        Err(LayoutError::GridTooNarrow { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn layouts_are_well_formed_and_place_everything_once(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let defn = parse_definition(&random_definition_text(&mut rng)).unwrap();
        let roots = build_forest(&defn);
        let expected = expected_placements(&defn);
        for style in LayoutStyle::ALL {
            let cfg = random_config(&mut rng, style);
            match build_layout(&roots, &cfg) {
                Ok(vd) => {
                    prop_assert_eq!(check_geometry(&vd), vec![]);
                    let mut got = std::collections::BTreeMap::new();
                    for p in vd.placements() {
                        *got.entry((p.vis_name.clone(), p.represents.clone())).or_insert(0) += 1;
                    }
                    prop_assert_eq!(&got, &expected);
                }
                Err(LayoutError::DepthExceeded { .. }) => {
                    prop_assert!(style != LayoutStyle::Nested);
                    prop_assert!(max_level(&defn) > cfg.max_depth);
                }
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }
    }

    #[test]
    fn raising_max_depth_never_breaks_a_layout(seed in any::<u64>(), extra in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let defn = parse_definition(&random_definition_text(&mut rng)).unwrap();
        let roots = build_forest(&defn);
        for style in [LayoutStyle::Pyramidal, LayoutStyle::Repeated] {
            let cfg = random_config(&mut rng, style);
            if build_layout(&roots, &cfg).is_ok() {
                let mut deeper = cfg.clone();
                deeper.max_depth += extra;
                prop_assert!(build_layout(&roots, &deeper).is_ok());
            }
        }
    }
}
