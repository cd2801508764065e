use qnatural::closed_forms::OracleId;

use crate::commands::CatalogRow;
use crate::selector::FAMILIES;

fn describe(family: &str) -> (&'static str, &'static str) {
    match family {
        "monomial" => ("n (power, > -1)", "entire; first and second type"),
        "series" => (
            "rule=unit|inverse_factorial|geometric|eq|Eq|bessel|hyper|explicit, ratio, a, mu, coeffs, max_index",
            "requires |u/v| below the rule's radius; second type needs an entire rule",
        ),
        "eexp" => ("a", "requires |a·u/v| < 1"),
        "Eexp" => ("a", "entire; first and second type"),
        "trig" => (
            "family=lower|upper, fn=sin|cos|sinh|cosh, a",
            "lower requires |a·u/v| < 1; upper is entire",
        ),
        "bessel" => ("kind=1|2|3, order (> -1), a (>= 0)", "kind 1 requires |a·u/v| < 1; kinds 2 and 3 are entire"),
        "hyper" => (
            "num, den (lists split by '/', q^t allowed), variant=phi|Phi, k, a",
            "phi requires |a·u/v| < 1; Phi with k >= 1 is entire",
        ),
        _ => unreachable!("every family is described"),
    }
}

/// One row per function family; every selector accepts `alpha` besides
/// the listed parameters.
pub fn entries() -> Vec<CatalogRow> {
    FAMILIES
        .iter()
        .map(|&family| {
            let (params, guard) = describe(family);
            let oracles: Vec<_> = OracleId::ALL
                .iter()
                .filter(|id| id.family_names().contains(&family))
                .map(|id| id.name())
                .collect();
            CatalogRow {
                family: family.to_string(),
                parameters: format!("{params}, alpha"),
                guard: guard.to_string(),
                oracles: oracles.join(" "),
            }
        })
        .collect()
}

/// Plain-text catalog, one family per line.
pub fn text(rows: &[CatalogRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "{} — {} (parameters: {}; oracles: {})\n",
                r.family, r.guard, r.parameters, r.oracles
            )
        })
        .collect()
}
