//! Genus 7: the projection of a nodal linear section of the spinor
//! variety from the node, rearranged as a quadric section of a cone over
//! G(2,5).

use std::collections::BTreeMap;

use super::certificate::{Certificate, StageTimer};
use super::support::{compare_ideals, signed_generator_match, transport_all};
use crate::geometry::{project_from_point, restrict_to_hyperplanes};
use crate::groebner::Ideal;
use crate::poly::{parse_poly, Polynomial};
use crate::polymat::PolyMatrix;
use crate::varieties::spinor_ideal;

/// Verify that projecting the spinor variety from the distinguished node
/// and slicing by the chart hyperplane yields, as an exact ideal identity,
/// the union of a rank-8 quadric cone and a cone over G(2,5).
pub fn verify_g7() -> Certificate {
    let order = crate::poly::MonomialOrder::GrevLex;
    let spec = spinor_ideal();
    let mut stages = Vec::new();
    let mut variable_orders = BTreeMap::new();
    variable_orders.insert(
        "ambient".to_string(),
        spec.context.names().to_vec(),
    );

    // stage 1: the projection from the node is the syzygy variety
    let timer = StageTimer::begin("projection-is-syzygy-variety");
    let projected = project_from_point(&spec.ideal, spec.distinguished_point())
        .expect("x_0 is a coordinate point of the spinor variety");
    let pctx = projected.context().clone();
    variable_orders.insert("projection".to_string(), pctx.names().to_vec());
    let syzygies = Ideal::new(
        &pctx,
        transport_all(&spec.ideal.generators()[5..], &pctx),
    );
    let cmp = compare_ideals(&projected, &syzygies, &order);
    stages.push(timer.record(
        cmp.relation.clone(),
        cmp.equal,
        (cmp.lhs_size, cmp.rhs_size),
        (cmp.dim_lhs, cmp.dim_rhs),
    ));

    // stage 2: the chart section x_2345 = 0 of the projection equals the
    // displayed five-rows-times-vector system plus the tangent-cone quadric
    let timer = StageTimer::begin("chart-section-matches-displayed-system");
    let chart_form = parse_poly("x_2345", &pctx).expect("projection context");
    let restricted = restrict_to_hyperplanes(&syzygies, &[chart_form])
        .expect("chart hyperplane is linear");
    let cctx = restricted.context().clone();
    variable_orders.insert("chart".to_string(), cctx.names().to_vec());
    let quadric = parse_poly("x_23*x_45 - x_24*x_35 + x_34*x_25", &cctx).expect("chart context");
    let section = restricted.adjoin([quadric.clone()]);

    let displayed = displayed_chart_system(&cctx);
    let built = Ideal::new(&cctx, displayed.iter().cloned().chain([quadric.clone()]));
    let cmp = compare_ideals(&section, &built, &order);
    // the chart rows are literally the restricted syzygies
    let rows_match =
        signed_generator_match(&displayed, restricted.generators()).is_some();
    let relation = if rows_match {
        format!("{}; displayed-rows-match-restriction", cmp.relation)
    } else {
        format!("{}; displayed-rows-differ", cmp.relation)
    };
    stages.push(timer.record(
        relation,
        cmp.equal && rows_match,
        (cmp.lhs_size, cmp.rhs_size),
        (cmp.dim_lhs, cmp.dim_rhs),
    ));

    // stage 3: rearrangement into the quadric cone plus the 4x4 Pfaffians
    // of the displayed 5x5 antisymmetric matrix
    let timer = StageTimer::begin("pfaffian-rearrangement");
    let cone_quadric = parse_poly(
        "x_12*x_1345 + x_13*x_1245 + x_14*x_1235 + x_15*x_1234",
        &cctx,
    )
    .expect("chart context");
    let pfaffians = rearranged_matrix(&cctx)
        .sub_pfaffians(4)
        .expect("antisymmetric 5x5");
    let target = Ideal::new(
        &cctx,
        std::iter::once(cone_quadric.clone()).chain(pfaffians.clone()),
    );
    let cmp = compare_ideals(&section, &target, &order);
    let contains_cone = target.generators().contains(&cone_quadric);
    let sign_match = signed_generator_match(
        section.generators(),
        target.generators(),
    );
    let relation = format!(
        "{}; generator-signed-match={}; cone-quadric-present={}",
        cmp.relation,
        sign_match.is_some(),
        contains_cone
    );
    stages.push(timer.record(
        relation,
        cmp.equal && contains_cone,
        (cmp.lhs_size, cmp.rhs_size),
        (cmp.dim_lhs, cmp.dim_rhs),
    ));

    // stage 4: both descriptions have one Krull dimension
    let timer = StageTimer::begin("dimensions-agree");
    let pass = cmp.dim_lhs == cmp.dim_rhs && cmp.dim_lhs >= 0;
    stages.push(timer.record(
        format!("affine-dimension {} = {}", cmp.dim_lhs, cmp.dim_rhs),
        pass,
        (cmp.lhs_size, cmp.rhs_size),
        (cmp.dim_lhs, cmp.dim_rhs),
    ));

    Certificate::conclude("g7", stages, variable_orders)
}

/// The five rows of the displayed matrix-times-vector system in the chart
/// x_2345 = 0.
fn displayed_chart_system(cctx: &crate::poly::Ctx) -> Vec<Polynomial> {
    [
        "x_12*x_1345 + x_13*x_1245 + x_14*x_1235 + x_15*x_1234",
        "x_23*x_1245 + x_24*x_1235 + x_25*x_1234",
        "-x_23*x_1345 + x_34*x_1235 + x_35*x_1234",
        "-x_24*x_1345 - x_34*x_1245 + x_45*x_1234",
        "-x_25*x_1345 - x_35*x_1245 - x_45*x_1235",
    ]
    .iter()
    .map(|s| parse_poly(s, cctx).expect("chart context"))
    .collect()
}

/// The displayed antisymmetric 5x5 matrix whose 4x4 Pfaffians rearrange
/// the chart system: first row of even coordinates with alternating signs,
/// then the odd coordinates.
fn rearranged_matrix(cctx: &crate::poly::Ctx) -> PolyMatrix {
    let e = |s: &str| parse_poly(s, cctx).expect("chart context");
    let upper: Vec<((usize, usize), Polynomial)> = vec![
        ((0, 1), e("x_1234")),
        ((0, 2), e("-x_1235")),
        ((0, 3), e("x_1245")),
        ((0, 4), e("-x_1345")),
        ((1, 2), e("x_23")),
        ((1, 3), e("x_24")),
        ((1, 4), e("x_34")),
        ((2, 3), e("x_25")),
        ((2, 4), e("x_35")),
        ((3, 4), e("x_45")),
    ];
    PolyMatrix::antisymmetric_from_upper(cctx, 5, |i, j| {
        upper
            .iter()
            .find(|((a, b), _)| (*a, *b) == (i, j))
            .map(|(_, p)| p.clone())
            .expect("all upper entries listed")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pipeline_passes() {
        let cert = verify_g7();
        assert!(cert.passed(), "{:?}", cert);
        assert_eq!(cert.stages.len(), 4);
    }
}
