//! The one-shot verification suite: every headline claim the crate
//! models, run end to end with exact comparisons (tolerance zero).
//!
//! Each criterion is independent; [`run_all`] executes them in order and
//! [`run_all_threaded`] distributes them over a bounded worker pool
//! (results are reassembled in criterion order, so output is identical).

use crate::f4::wsub::{base_line, base_point_v0, base_two_plane, p3, p34, p4};
use crate::f4::{flag_invariants, table, CanonicalElement};
use crate::jordan::{
    self, chi, chi_inv, eigenspace_decomposition, hat_operator, isotropic_tangent,
    sample_chart_point, JordanElement,
};
use crate::linalg::nilorder;
use crate::octonion::{identity_suite, sample_gauss_octonion, Octonion};
use crate::orbit::{
    distinguished_check, lift_x34, lift_x4, rho_x34, rho_x4, standard_triple_check, coord_of_weight,
    GradedRootSystem, RootSystemType,
};
use crate::report::CheckResult;
use crate::scalar::{rat, Ring};
use crate::uniton::{
    build_canonical, build_form_i_bilinear_control, curve_example, lattice_checks, CanonicalForm,
};
use rand::SeedableRng;
use serde::Serialize;

pub const CRITERIA_COUNT: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

fn result(id: usize, name: &'static str, checks: Vec<CheckResult>) -> CriterionResult {
    CriterionResult {
        id,
        name,
        pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

fn rng_for(seed: u64, criterion: u64) -> rand_chacha::ChaCha8Rng {
    // decouple the streams of the individual criteria
    rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(criterion))
}

/// Criterion 1: All six octonion identities on 100 random pairs over ℚ and ℚ(i).
fn c01_octonion_identities(seed: u64) -> CriterionResult {
    let mut checks = Vec::new();
    for report in identity_suite(100, seed) {
        for r in &report.results {
            checks.push(CheckResult::flag(
                format!("{} over {}", r.name, report.ring),
                r.pass,
            ));
        }
    }
    result(1, "octonion identity suite (100 pairs, Q and Q(i))", checks)
}

/// Criterion 2: Eigenspace dimensions (10, 16, 1) for 20 random chart points; the
/// decomposition is orthogonal for the trace form and the ½-eigenspace is
/// exactly the tangent space {Z : 2 P∘Z = Z}.
fn c02_eigenspace_dimensions(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 2);
    let mut checks = Vec::new();
    let mut all_orthogonal = true;
    let mut all_tangent = true;
    for k in 0..20 {
        let p = sample_chart_point(&mut rng);
        let actual = match eigenspace_decomposition(&p) {
            Ok((a0, ah, a1)) => {
                for u in a0.basis() {
                    let eu = jordan::from_vec27(u);
                    all_orthogonal &= a1
                        .basis()
                        .iter()
                        .chain(ah.basis())
                        .all(|v| eu.inner(&jordan::from_vec27(v)).is_zero());
                }
                for u in ah.basis() {
                    let eu = jordan::from_vec27(u);
                    all_orthogonal &= a1
                        .basis()
                        .iter()
                        .all(|v| eu.inner(&jordan::from_vec27(v)).is_zero());
                    all_tangent &= jordan::is_tangent(p.element(), &eu);
                }
                format!("({}, {}, {})", a0.dim(), ah.dim(), a1.dim())
            }
            Err(e) => format!("error: {e}"),
        };
        checks.push(CheckResult::compare(
            format!("chart point {k}: eigenspace dims"),
            "(10, 16, 1)",
            actual,
        ));
    }
    checks.push(CheckResult::flag(
        "eigenspaces mutually orthogonal",
        all_orthogonal,
    ));
    checks.push(CheckResult::flag(
        "half-eigenspace equals the tangent space",
        all_tangent,
    ));
    result(2, "eigenspace decompositions at 20 chart points", checks)
}

/// Criterion 3: χ round trip and product closure for 20 chart points.
fn c03_chi_round_trip(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 3);
    let mut checks = Vec::new();
    for k in 0..20 {
        let p = sample_chart_point(&mut rng);
        match chi(&p) {
            Ok(v) => {
                checks.push(CheckResult::compare(
                    format!("point {k}: dim chi(P)"),
                    10,
                    v.subspace().dim(),
                ));
                checks.push(CheckResult::flag(
                    format!("point {k}: V·V = V"),
                    jordan::product_span(v.subspace()) == *v.subspace(),
                ));
                checks.push(CheckResult::flag(
                    format!("point {k}: chi_inv(chi(P)) = P"),
                    chi_inv(&v).map(|q| q == p).unwrap_or(false),
                ));
            }
            Err(e) => checks.push(CheckResult::compare(
                format!("point {k}: chi"),
                "ok",
                format!("error: {e}"),
            )),
        }
    }
    result(3, "Grassmannian round trip at 20 chart points", checks)
}

/// Criterion 4: Ẑ⁵ = 0 for 50 random isotropic tangents; L_Z⁴ kills the unit
/// tangent element.
fn c04_isotropic_nilpotency(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 4);
    let p0 = jordan::CayleyPoint::base();
    let x0 = JordanElement::off_diagonal(2, Octonion::one());
    let mut checks = Vec::new();
    let mut all_hat = true;
    let mut all_lz = true;
    let mut max_order = 0usize;
    for _ in 0..50 {
        let z = isotropic_tangent(&sample_gauss_octonion(&mut rng));
        let hat = match hat_operator(&p0, &z) {
            Ok(h) => h,
            Err(_) => {
                all_hat = false;
                break;
            }
        };
        if !hat.pow(5).is_zero() {
            all_hat = false;
        }
        if let Some(ord) = nilorder(&hat, 27) {
            max_order = max_order.max(ord);
        } else {
            all_hat = false;
        }
        let mut acc = x0.clone();
        for _ in 0..4 {
            acc = z.circ(&acc);
        }
        if !acc.is_zero() {
            all_lz = false;
        }
    }
    checks.push(CheckResult::flag(
        "hat(Z)^5 = 0 for 50 isotropic tangents",
        all_hat,
    ));
    checks.push(CheckResult::flag(
        format!("max nilorder {} <= 5", max_order),
        max_order <= 5,
    ));
    checks.push(CheckResult::flag(
        "L_Z^4 annihilates the unit off-diagonal tangent",
        all_lz,
    ));
    result(4, "isotropic tangents are nilpotent of order <= 5", checks)
}

/// Criterion 5: The commutator span of the left multiplications has rank 52.
fn c05_derivation_dimension(_seed: u64) -> CriterionResult {
    let dim = jordan::derivation_dimension();
    result(
        5,
        "derivation algebra has dimension 52",
        vec![CheckResult::compare("rank of commutator span", 52, dim)],
    )
}

/// Criterion 6: The weight-space table is consistent across all 625 cells.
fn c06_table_consistency(_seed: u64) -> CriterionResult {
    let check = table::verify_table();
    let checks = vec![
        CheckResult::compare("cells checked", 625, check.cells_checked),
        CheckResult::compare("sum-rule violations", 0, check.sum_rule_violations.len()),
        CheckResult::compare("explicit zeros", 0, check.explicit_zeros.len()),
        CheckResult::compare("symmetry violations", 0, check.symmetry_violations.len()),
        CheckResult::compare(
            "trilinear violations",
            0,
            check.trilinear_violations.len(),
        ),
    ];
    result(6, "weight-space table full consistency", checks)
}

/// Criterion 7: Flag dimensions (30, 40, 42) and both k-order values, with the
/// adjoint/representation discrepancy documented for I = {3} and {3,4}.
fn c07_flag_data(_seed: u64) -> CriterionResult {
    let mut checks = Vec::new();
    let cases = [
        (vec![4u8], 30usize, 3usize, 3usize, false),
        (vec![3], 40, 5, 4, true),
        (vec![3, 4], 42, 7, 6, true),
    ];
    for (idx, dim, k_adj, k_rep, discrepancy) in cases {
        let xi = CanonicalElement::new(&idx).unwrap();
        let f = flag_invariants(&xi);
        checks.push(CheckResult::compare(
            format!("real dimension of T_{idx:?}"),
            dim,
            f.real_dimension,
        ));
        checks.push(CheckResult::compare(
            format!("adjoint k-order for I={idx:?}"),
            k_adj,
            f.k_order_adjoint,
        ));
        checks.push(CheckResult::compare(
            format!("representation k-order for I={idx:?}"),
            k_rep,
            f.k_order_rep,
        ));
        checks.push(CheckResult::compare(
            format!("discrepancy flagged for I={idx:?}"),
            discrepancy,
            f.discrepancy,
        ));
    }
    result(7, "twistor flag dimensions and symmetric orders", checks)
}

/// Criterion 8: The three projections at base points: dimension 10, conjugation
/// stability, product closure; the flag projection lands exactly on V₀.
fn c08_twistor_projections(_seed: u64) -> CriterionResult {
    let mut checks = Vec::new();
    let outputs = [
        ("p4", p4(&base_line())),
        ("p3", p3(&base_two_plane())),
        ("p34", p34(&base_line(), &base_two_plane())),
    ];
    for (name, out) in outputs {
        match out {
            Ok(v) => {
                checks.push(CheckResult::compare(format!("{name}: dim"), 10, v.dim()));
                checks.push(CheckResult::flag(
                    format!("{name}: conj-stable"),
                    v.is_conj_stable(),
                ));
                checks.push(CheckResult::flag(
                    format!("{name}: product-closed"),
                    v.is_product_closed(),
                ));
                if name == "p34" {
                    checks.push(CheckResult::flag("p34 equals V0", v == base_point_v0()));
                }
            }
            Err(e) => checks.push(CheckResult::compare(name, "ok", format!("error: {e}"))),
        }
    }
    result(8, "twistor projections at base configurations", checks)
}

/// Criterion 9: Orbit operators and their lift certificates.
fn c09_orbit_operators(_seed: u64) -> CriterionResult {
    let mut checks = Vec::new();
    let x4 = rho_x4();
    checks.push(CheckResult::compare("nilorder rho(X4)", 3, x4.nilorder()));
    let im2 = crate::linalg::image(&x4.matrix().pow(2));
    checks.push(CheckResult::compare("dim im rho(X4)^2", 1, im2.dim()));
    let mut w4 = vec![crate::scalar::gauss(0, 0); 26];
    w4[coord_of_weight(4)] = crate::scalar::gauss(1, 0);
    checks.push(CheckResult::flag("im rho(X4)^2 = W4", im2.contains(&w4)));
    checks.push(CheckResult::compare(
        "nilorder rho(X3+X4)",
        5,
        rho_x34().nilorder(),
    ));
    match lift_x4() {
        Ok((_v, d, cert)) => {
            let expected = crate::f4::wsub::WeightSubspace::from_indices(&[-11, 7, 6, 5]).unwrap();
            checks.push(CheckResult::flag("lift X4: V ∩ conj(V)^perp", d == expected));
            checks.push(CheckResult::flag("lift X4: certificate", cert.holds()));
        }
        Err(e) => checks.push(CheckResult::compare("lift X4", "ok", format!("error: {e}"))),
    }
    match lift_x34() {
        Ok((line, cert)) => {
            let expected = crate::f4::wsub::WeightSubspace::from_indices(&[5]).unwrap();
            checks.push(CheckResult::flag("lift X3+X4: im X^3 = W5", line == expected));
            checks.push(CheckResult::flag("lift X3+X4: certificate", cert.holds()));
        }
        Err(e) => checks.push(CheckResult::compare(
            "lift X3+X4",
            "ok",
            format!("error: {e}"),
        )),
    }
    result(9, "nilpotent orbit operators and twistor lifts", checks)
}

/// Criterion 10: Distinguished-parabolic criterion on the two orbit configurations
/// and five controls; standard-triple relations in the matrix models.
fn c10_distinguished(_seed: u64) -> CriterionResult {
    let mut checks = Vec::new();
    let a1 = distinguished_check(&GradedRootSystem::principal(RootSystemType::A1));
    checks.push(CheckResult::flag(
        format!(
            "A1 principal: dim l = {} = dim u/[u,u] = {}",
            a1.dim_l, a1.dim_u_ab
        ),
        a1.is_distinguished,
    ));
    let a2 = distinguished_check(&GradedRootSystem::principal(RootSystemType::A2));
    checks.push(CheckResult::flag(
        format!(
            "A2 principal: dim l = {} = dim u/[u,u] = {}",
            a2.dim_l, a2.dim_u_ab
        ),
        a2.is_distinguished,
    ));
    let controls = [
        (RootSystemType::A2, vec![1, 0]),
        (RootSystemType::A2, vec![0, 1]),
        (RootSystemType::B2, vec![1, 0]),
        (RootSystemType::B2, vec![0, 2]),
        (RootSystemType::B2, vec![2, 0]),
    ];
    for (t, vals) in controls {
        let c = distinguished_check(&GradedRootSystem::new(t, &vals).unwrap());
        checks.push(CheckResult::flag(
            format!("control {t:?} {vals:?} is not distinguished"),
            !c.is_distinguished,
        ));
    }
    // standard triples in the small matrix models
    let e = |n: usize, i: usize, j: usize| {
        crate::linalg::Matrix::from_fn(
            n,
            n,
            |r, c| if (r, c) == (i, j) { rat(1, 1) } else { rat(0, 1) },
        )
    };
    let h2 = crate::linalg::Matrix::from_fn(2, 2, |r, c| {
        if r != c {
            rat(0, 1)
        } else if r == 0 {
            rat(1, 1)
        } else {
            rat(-1, 1)
        }
    });
    checks.push(CheckResult::flag(
        "sl2 standard triple",
        standard_triple_check(&e(2, 0, 1), &e(2, 1, 0), &h2),
    ));
    let x = e(3, 0, 1).add(&e(3, 1, 2));
    let y = e(3, 1, 0).add(&e(3, 2, 1)).scale(&rat(2, 1));
    let h3 = crate::linalg::Matrix::from_fn(3, 3, |r, c| {
        if r != c {
            rat(0, 1)
        } else {
            rat(2 - 2 * r as i64, 1)
        }
    });
    checks.push(CheckResult::flag(
        "sl3 principal triple",
        standard_triple_check(&x, &y, &h3),
    ));
    result(10, "distinguished parabolics and standard triples", checks)
}

/// Criterion 11: The three canonical lattices pass all checks; the bilinear-perp
/// control fails multiplicativity with a recorded witness.
fn c11_canonical_lattices(_seed: u64) -> CriterionResult {
    let mut checks = Vec::new();
    let lattices = [
        ("form i", build_canonical(CanonicalForm::I, Some(&base_line()), None)),
        (
            "form ii",
            build_canonical(CanonicalForm::II, None, Some(&base_two_plane())),
        ),
        (
            "form iii",
            build_canonical(
                CanonicalForm::III,
                Some(&base_line()),
                Some(&base_two_plane()),
            ),
        ),
    ];
    for (name, l) in lattices {
        match l.and_then(|l| lattice_checks(&l)) {
            Ok(c) => {
                checks.push(CheckResult::flag(format!("{name}: monotone"), c.monotone));
                checks.push(CheckResult::flag(format!("{name}: real form"), c.real_form));
                checks.push(CheckResult::flag(
                    format!("{name}: multiplicative"),
                    c.multiplicative,
                ));
            }
            Err(e) => checks.push(CheckResult::compare(name, "ok", format!("error: {e}"))),
        }
    }
    match build_form_i_bilinear_control(&base_line()).and_then(|l| lattice_checks(&l)) {
        Ok(c) => {
            checks.push(CheckResult::flag(
                "bilinear control fails multiplicativity",
                !c.multiplicative,
            ));
            checks.push(CheckResult::flag(
                "control failure carries a witness",
                c.witness.is_some(),
            ));
        }
        Err(e) => checks.push(CheckResult::compare(
            "bilinear control",
            "ok",
            format!("error: {e}"),
        )),
    }
    result(11, "canonical lattice forms at base configurations", checks)
}

/// Criterion 12: The explicit polynomial curve: exact line, vanishing square of the
/// potential, bracket constraint, and membership in the twistor space.
fn c12_curve_example(_seed: u64) -> CriterionResult {
    let ex = curve_example();
    let mut expected = vec![<crate::scalar::Poly as crate::scalar::Ring>::zero(); 26];
    expected[coord_of_weight(-12)] = <crate::scalar::Poly as crate::scalar::Ring>::one();
    expected[coord_of_weight(-11)] = crate::scalar::Poly::monomial(crate::scalar::gauss(1, 0), 2);
    expected[coord_of_weight(-9)] = crate::scalar::Poly::monomial(crate::scalar::gauss(1, 0), 1);
    let checks = vec![
        CheckResult::flag("bracket constraint admits a vanishing c0^2", ex.constraint_ok),
        CheckResult::flag(
            "line = span{w_-12 + z^2 w_-11 + z w_-9}",
            ex.line == expected,
        ),
        CheckResult::flag("rho(C)^2 kills w_-12", ex.rho_c_squared_zero),
        CheckResult::flag("curve lies in the twistor space for all z", ex.in_t4),
        CheckResult::flag("curve is superhorizontal in its lattice", ex.superhorizontal),
    ];
    result(12, "explicit finite-uniton curve", checks)
}

type CriterionFn = fn(u64) -> CriterionResult;

const CRITERIA: [CriterionFn; CRITERIA_COUNT] = [
    c01_octonion_identities,
    c02_eigenspace_dimensions,
    c03_chi_round_trip,
    c04_isotropic_nilpotency,
    c05_derivation_dimension,
    c06_table_consistency,
    c07_flag_data,
    c08_twistor_projections,
    c09_orbit_operators,
    c10_distinguished,
    c11_canonical_lattices,
    c12_curve_example,
];

/// Run one criterion (1-based id).
pub fn run_criterion(id: usize, seed: u64) -> CriterionResult {
    CRITERIA[id - 1](seed)
}

/// Run the full suite in order.
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    (1..=CRITERIA_COUNT).map(|id| run_criterion(id, seed)).collect()
}

/// Run the full suite on up to `threads` workers; results come back in
/// criterion order, so output is independent of scheduling.
pub fn run_all_threaded(seed: u64, threads: usize) -> Vec<CriterionResult> {
    let threads = threads.clamp(1, CRITERIA_COUNT);
    if threads == 1 {
        return run_all(seed);
    }
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Mutex;
    let next = AtomicUsize::new(1);
    let results: Mutex<Vec<Option<CriterionResult>>> =
        Mutex::new(vec![None; CRITERIA_COUNT]);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let id = next.fetch_add(1, Ordering::SeqCst);
                if id > CRITERIA_COUNT {
                    break;
                }
                let r = run_criterion(id, seed);
                results.lock().unwrap()[id - 1] = Some(r);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("all criteria ran"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // the cheap criteria, as a smoke test; the full suite runs in the
    // acceptance tests
    #[test]
    fn fast_criteria_pass() {
        for id in [1, 6, 7, 8, 9, 10, 11, 12] {
            let r = run_criterion(id, 0);
            assert!(r.pass, "criterion {id} failed: {:?}", r.checks);
        }
    }

    #[test]
    fn threaded_run_matches_sequential_ids() {
        let seq: Vec<usize> = run_all_threaded(0, 4).iter().map(|r| r.id).collect();
        assert_eq!(seq, (1..=CRITERIA_COUNT).collect::<Vec<_>>());
    }
}
