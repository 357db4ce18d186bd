use super::model::{DeclarativeDefinition, VisualizationDef};

/// A visualization resolved against its definition, with children attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisNode<'d> {
    pub def: &'d VisualizationDef,
    pub children: Vec<VisNode<'d>>,
    /// The simple visualization standing in for a composed node.
    pub summary: Option<&'d VisualizationDef>,
    /// 1 for roots.
    pub depth: usize,
}

impl<'d> VisNode<'d> {
    pub fn name(&self) -> &'d str {
        &self.def.name
    }

    pub fn is_composed(&self) -> bool {
        !self.def.is_simple()
    }

    /// The simple visualization that is drawn for this node.
    pub fn representative(&self) -> &'d VisualizationDef {
        self.summary.unwrap_or(self.def)
    }

    /// Pre-order walk over this subtree.
    pub fn walk(&self, visit: &mut impl FnMut(&VisNode<'d>)) {
        visit(self);
        for child in &self.children {
            child.walk(visit);
        }
    }
}

/// Resolve the root visualizations of a validated definition.
///
/// Roots are visualizations that are neither composed into another nor used
/// as a summary, in document order.
pub fn build_forest(defn: &DeclarativeDefinition) -> Vec<VisNode<'_>> {
    let consumed = |name: &str| {
        defn.visualizations
            .iter()
            .any(|v| v.children().iter().any(|c| c == name) || v.summary() == Some(name))
    };
    defn.visualizations
        .iter()
        .filter(|v| !consumed(&v.name))
        .map(|v| resolve(defn, v, 1))
        .collect()
}

fn resolve<'d>(
    defn: &'d DeclarativeDefinition,
    def: &'d VisualizationDef,
    depth: usize,
) -> VisNode<'d> {
    let children = def
        .children()
        .iter()
        .filter_map(|name| defn.visualization(name))
        .map(|child| resolve(defn, child, depth + 1))
        .collect();
    VisNode {
        def,
        children,
        summary: def.summary().and_then(|s| defn.visualization(s)),
        depth,
    }
}

/// Deepest level reached in the subtree, counting the root as 1.
pub fn tree_depth(root: &VisNode<'_>) -> usize {
    let mut deepest = root.depth;
    root.walk(&mut |n| deepest = deepest.max(n.depth));
    deepest - root.depth + 1
}
