use thiserror::Error;

use super::model::{DeclarativeDefinition, KpiKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown KPI '{0}'")]
pub struct UnknownKpi(pub String);

/// Render a KPI as a query expression.
///
/// Simple KPIs become `metric{target="id",cluster="c"}`; composed KPIs become
/// `fn(expr, expr, ...)` with sources expanded recursively in declaration
/// order.
pub fn kpi_expression(kpi_name: &str, defn: &DeclarativeDefinition) -> Result<String, UnknownKpi> {
    let mut out = String::new();
    write_expression(kpi_name, defn, &mut out)?;
    Ok(out)
}

fn write_expression(
    name: &str,
    defn: &DeclarativeDefinition,
    out: &mut String,
) -> Result<(), UnknownKpi> {
    let kpi = defn.kpi(name).ok_or_else(|| UnknownKpi(name.to_string()))?;
    match &kpi.kind {
        KpiKind::Simple { metric, target } => {
            out.push_str(metric);
            out.push_str("{target=");
            push_quoted(out, &target.id);
            if let Some(cluster) = &target.cluster {
                out.push_str(",cluster=");
                push_quoted(out, cluster);
            }
            out.push('}');
        }
        KpiKind::Composed {
            source_kpis,
            transformation_function,
        } => {
            out.push_str(transformation_function);
            out.push('(');
            for (i, src) in source_kpis.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expression(src, defn, out)?;
            }
            out.push(')');
        }
    }
    Ok(())
}

fn push_quoted(out: &mut String, value: &str) {
    out.push('"');
    for c in value.chars() {
        if matches!(c, '"' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
}
