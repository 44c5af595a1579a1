//! `dnagc groups`.

use std::path::PathBuf;

use dnagc::groups::{build_group, catalog_entries, coset_reps, reversible_ordering, write_group, GroupSpec};
use serde_json::{json, Value};

use crate::config::{document, emit_json, RunConfig};
use crate::error::{CliError, CliResult};

fn listing(order: Option<usize>) -> Value {
    let rows: Vec<Value> = catalog_entries()
        .iter()
        .filter(|e| order.is_none_or(|o| e.order == o))
        .map(|e| {
            let g = e.build();
            json!({
                "spec": format!("catalog:{}:{}", e.order, e.index),
                "small_group_id": e.small_group_id(),
                "description": e.description,
                "abelian": g.is_abelian(),
                "involutions": g.involutions().len(),
            })
        })
        .collect();
    Value::Array(rows)
}

pub fn run(
    mut config: RunConfig,
    order: Option<usize>,
    show: Option<GroupSpec>,
    involution: Option<usize>,
    export: Option<PathBuf>,
    out: Option<PathBuf>,
) -> CliResult<()> {
    config.n = order;
    config.output = out.clone();
    config.groups = show.iter().map(|g| g.to_string()).collect();
    config.involution = involution.map(|i| i.to_string());
    let config = config.option("export", &export);
    config.validate()?;
    let Some(spec) = show else {
        let rows = listing(order);
        eprintln!("{} catalog groups", rows.as_array().map_or(0, Vec::len));
        return emit_json(out.as_deref(), &document(&config, rows));
    };
    let g = build_group(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let involutions = g.involutions();
    let ordering = match involution.or(involutions.first().copied()) {
        Some(inv) => {
            let reps = coset_reps(&g, inv).map_err(|e| CliError::Usage(e.to_string()))?;
            let o = reversible_ordering(&g, inv, &reps)?;
            json!({ "involution": inv, "coset_reps": reps, "elements": o.elements() })
        }
        None => Value::Null,
    };
    let orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    let report = json!({
        "spec": spec.to_string(),
        "name": g.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "identity": g.identity(),
        "involutions": involutions,
        "element_orders": orders,
        "center_size": g.center_size(),
        "reversible_ordering": ordering,
    });
    if let Some(path) = &export {
        std::fs::write(path, write_group(&g)).map_err(|e| CliError::io(path, e))?;
    }
    eprintln!("{} ({}), order {}", spec, g.name(), g.order());
    emit_json(out.as_deref(), &document(&config, report))
}
