use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::families::{Family, FamilyError, FamilySpec, MIN_K};
use crate::matching::has_perfect_matching;
use crate::properties::{
    is_factor_critical_within, is_half_extendable_sampled, is_half_extendable_within,
    is_k_extendable_sampled, is_k_extendable_within, Budget, PropertyError,
};

use super::report::{Counterexample, FamilyCheck, Mode, Report, ReportWitness};
use super::{VerifyError, SAMPLE_SEED};

/// Largest `k` whose extendability check enumerates every matching; above
/// it, matchings are sampled. `H^(4)` already means ~5·10^7 per-vertex
/// matchings (a couple of seconds).
pub const G_EXHAUSTIVE_MAX_K: usize = 4;
pub const H_EXHAUSTIVE_MAX_K: usize = 4;

/// Subsets the full factor-criticality decider may visit before giving up.
pub const CRITICALITY_DECIDER_BUDGET: u64 = 2_000_000;

fn check_member(spec: FamilySpec, sample_budget: u64) -> Result<FamilyCheck, VerifyError> {
    let g = spec.graph();
    let k = spec.k();
    let (exhaustive, n, property) = match spec.family() {
        Family::G => (k <= G_EXHAUSTIVE_MAX_K, 2 * k, format!("{k}-extendable")),
        Family::H => (k <= H_EXHAUSTIVE_MAX_K, 2 * k + 1, format!("{k}½-extendable")),
    };

    let (extendable, examined) = if exhaustive {
        let mut budget = Budget::unlimited();
        let v = match spec.family() {
            Family::G => is_k_extendable_within(&g, k, &mut budget)?,
            Family::H => is_half_extendable_within(&g, k, &mut budget)?,
        };
        (v.holds, budget.used())
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let v = match spec.family() {
            Family::G => is_k_extendable_sampled(&g, k, sample_budget, &mut rng)?,
            Family::H => is_half_extendable_sampled(&g, k, sample_budget, &mut rng)?,
        };
        (v.holds, sample_budget)
    };

    let witness = spec.tightness_witness();
    let rest = g.delete_vertices(witness).expect("witness lies inside the graph").graph;
    let witness_blocks = witness.len() == n && !has_perfect_matching(&rest);

    let decider_rejects =
        match is_factor_critical_within(&g, n, &mut Budget::new(CRITICALITY_DECIDER_BUDGET)) {
            Ok(v) => Some(!v.holds),
            Err(PropertyError::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        };

    Ok(FamilyCheck {
        family: spec.family().to_string(),
        k,
        order: g.order(),
        graph6: g.to_graph6(),
        property,
        mode: if exhaustive { Mode::Exhaustive } else { Mode::Sampled },
        examined,
        extendable,
        witness: witness.to_vec(),
        witness_blocks,
        decider_rejects,
        passed: extendable && witness_blocks && decider_rejects != Some(false),
    })
}

/// Checks `G^(k)` and `H^(k)` for `k = 2..=k_max`: each must have its
/// extendability property and fail the matching factor-criticality, with
/// the fixed tightness set as the certificate. Members too large for a
/// family's vertex limit are left out.
pub fn verify_family_tightness(k_max: usize, sample_budget: u64) -> Result<Report, VerifyError> {
    let started = Instant::now();
    let top = Family::G.max_k().max(Family::H.max_k());
    if !(MIN_K..=top).contains(&k_max) {
        return Err(FamilyError::ParamOutOfRange {
            family: Family::G,
            k: k_max,
            min: MIN_K,
            max: top,
        }
        .into());
    }
    let mut checks = Vec::new();
    for k in MIN_K..=k_max {
        for family in [Family::G, Family::H] {
            if let Ok(spec) = FamilySpec::new(family, k) {
                checks.push(check_member(spec, sample_budget)?);
            }
        }
    }

    let sampled = checks.iter().any(|c| c.mode == Mode::Sampled);
    let mut report = Report::new(
        "FAMILY-TIGHTNESS",
        &format!("families G,H k={MIN_K}..={k_max}"),
        if sampled { Mode::Sampled } else { Mode::Exhaustive },
    );
    report.scanned = checks.len() as u64;
    report.hypothesis_hits = checks.len() as u64;
    report.positives = checks.iter().filter(|c| c.passed).count() as u64;
    report.counterexamples = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| {
            let w = ReportWitness::new(
                "family-check",
                json!({
                    "family": c.family,
                    "extendable": c.extendable,
                    "witness_blocks": c.witness_blocks,
                    "decider_rejects": c.decider_rejects,
                }),
            );
            Counterexample::new(&c.graph6, Some(c.k), w)
        })
        .collect();
    report.failures = report.counterexamples.len() as u64;
    report.family_checks = checks;
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}
