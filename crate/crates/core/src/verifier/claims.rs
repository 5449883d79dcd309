//! The claim registry: for each claim, the parameter values it ranges over
//! at a given order and a per-graph check of hypothesis ⟹ conclusion.
//!
//! Every hypothesis includes connectivity. Decider errors (wrong parity,
//! parameter out of range) mean the hypothesis does not apply.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hasher;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHasher;
use serde_json::{json, Value};

use crate::graph::{vertex_connectivity, Graph, VertexSet};
use crate::properties::{
    is_balanced_bipartite_critical, is_factor_critical, is_half_extendable, is_k_extendable,
    is_k_extendable_sampled, is_minimal, Property, Verdict,
};

use super::report::{edge_json, set_json, Mode, ReportWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    Theorem,
    /// Open conjectures: violations are findings, never failures.
    Conjecture,
}

/// A graph with the facts every check needs, computed once.
pub(crate) struct Subject<'a> {
    pub g: &'a Graph,
    pub graph6: &'a str,
    pub connected: bool,
    pub bipartition: Option<(VertexSet, VertexSet)>,
}

impl<'a> Subject<'a> {
    pub fn new(g: &'a Graph, graph6: &'a str) -> Self {
        Subject {
            g,
            graph6,
            connected: g.is_connected().unwrap_or(false),
            bipartition: g.is_bipartite(),
        }
    }

    fn non_bipartite(&self) -> bool {
        self.bipartition.is_none()
    }
}

pub(crate) struct Ctx {
    pub sample_budget: u64,
    pub seed: u64,
}

impl Ctx {
    /// A generator seeded from the run seed, the graph and the parameter,
    /// so results do not depend on scheduling.
    fn rng(&self, graph6: &str, param: usize) -> ChaCha8Rng {
        let mut h = FxHasher::default();
        h.write(graph6.as_bytes());
        h.write_usize(param);
        ChaCha8Rng::seed_from_u64(self.seed ^ h.finish())
    }
}

pub(crate) enum Outcome {
    /// Hypothesis unmet.
    Skip,
    /// Conclusion holds; `positive` when the checked property is realized.
    Holds { positive: bool },
    Fails(ReportWitness),
    /// Conjectures: a minimal graph's minimum degree, flagged when outside
    /// the conjectured values.
    Degree { delta: usize, finding: Option<ReportWitness> },
}

type Params = fn(usize) -> Vec<usize>;
type Check = fn(&Subject<'_>, usize, &Ctx) -> Outcome;

pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    pub kind: ClaimKind,
    pub mode: Mode,
    params: Params,
    check: Check,
}

impl Claim {
    /// Parameter values the claim ranges over on graphs of order `nu`.
    pub fn params(&self, nu: usize) -> Vec<usize> {
        (self.params)(nu)
    }

    pub(crate) fn check(&self, s: &Subject<'_>, param: usize, ctx: &Ctx) -> Outcome {
        (self.check)(s, param, ctx)
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("mode", &self.mode)
            .finish()
    }
}

// ---- parameter ranges ----

fn ext_range(nu: usize) -> Vec<usize> {
    if nu < 2 || nu % 2 == 1 {
        return Vec::new();
    }
    (0..=(nu - 2) / 2).collect()
}

fn half_range(nu: usize) -> Vec<usize> {
    if nu < 3 || nu % 2 == 0 {
        return Vec::new();
    }
    (0..=(nu - 3) / 2).collect()
}

fn critical_range(nu: usize) -> Vec<usize> {
    if nu < 2 {
        return Vec::new();
    }
    (nu % 2..=nu - 2).step_by(2).collect()
}

fn keep(v: Vec<usize>, f: impl Fn(usize) -> bool) -> Vec<usize> {
    v.into_iter().filter(|&x| f(x)).collect()
}

// ---- decider shorthands: `None` when the question is ill-posed ----

fn ext(g: &Graph, k: usize) -> Option<Verdict> {
    is_k_extendable(g, k).ok()
}

fn half(g: &Graph, k: usize) -> Option<Verdict> {
    is_half_extendable(g, k).ok()
}

fn fc(g: &Graph, n: usize) -> Option<Verdict> {
    is_factor_critical(g, n).ok()
}

fn holds(v: &Option<Verdict>) -> bool {
    matches!(v, Some(v) if v.holds)
}

fn witness_of(v: &Verdict) -> ReportWitness {
    match &v.witness {
        Some(w) => w.into(),
        None => ReportWitness::new(v.reason.code(), Value::Null),
    }
}

/// The standard implication shape.
fn implies(hypothesis: bool, conclusion: impl FnOnce() -> Option<Verdict>) -> Outcome {
    if !hypothesis {
        return Outcome::Skip;
    }
    match conclusion() {
        Some(v) if v.holds => Outcome::Holds { positive: true },
        Some(v) => Outcome::Fails(witness_of(&v)),
        None => Outcome::Skip,
    }
}

/// Both sides of an equivalence; a failure names the side that holds and
/// the other side's witness.
fn equivalent(left: (&str, Option<Verdict>), right: (&str, Option<Verdict>)) -> Outcome {
    let (Some(a), Some(b)) = (left.1, right.1) else {
        return Outcome::Skip;
    };
    if a.holds == b.holds {
        return Outcome::Holds { positive: a.holds };
    }
    let (holding, failing, failed) = if a.holds {
        (left.0, right.0, &b)
    } else {
        (right.0, left.0, &a)
    };
    let w = witness_of(failed);
    Outcome::Fails(ReportWitness::new(
        "asymmetry",
        json!({ "holds": holding, "fails": failing, "witness_kind": w.kind, "witness": w.value }),
    ))
}

/// First edge whose deletion breaks `n`-factor-criticality.
fn edge_deletions_keep_fc(g: &Graph, n: usize) -> Outcome {
    for e in g.edges() {
        let h = g.delete_edge(e).expect("edge comes from the graph");
        match fc(&h, n) {
            Some(v) if v.holds => {}
            Some(v) => {
                let w = witness_of(&v);
                return Outcome::Fails(ReportWitness::new(
                    "edge-deletion",
                    json!({ "edge": edge_json(e), "witness_kind": w.kind, "witness": w.value }),
                ));
            }
            None => return Outcome::Skip,
        }
    }
    Outcome::Holds { positive: true }
}

// ---- checks ----

fn check_ob1(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    implies(s.connected && holds(&fc(s.g, 2 * k)), || ext(s.g, k))
}

fn check_p2ext(s: &Subject<'_>, _: usize, _: &Ctx) -> Outcome {
    implies(s.connected && s.non_bipartite() && holds(&ext(s.g, 2)), || fc(s.g, 2))
}

fn check_p3bic(s: &Subject<'_>, _: usize, _: &Ctx) -> Outcome {
    if !(s.connected && holds(&ext(s.g, 3)) && holds(&fc(s.g, 2))) {
        return Outcome::Skip;
    }
    edge_deletions_keep_fc(s.g, 2)
}

fn check_lmf1(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    implies(s.connected && s.non_bipartite() && holds(&ext(s.g, k)), || fc(s.g, k))
}

fn check_lmf2(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    if !(s.connected && s.non_bipartite() && holds(&ext(s.g, k + 1))) {
        return Outcome::Skip;
    }
    match fc(s.g, k) {
        Some(v) if v.holds => edge_deletions_keep_fc(s.g, k),
        Some(v) => Outcome::Fails(witness_of(&v)),
        None => Outcome::Skip,
    }
}

/// The hypothesis is sampled; a failing conclusion is only reported once
/// the hypothesis has been confirmed exhaustively.
fn check_lmfs1(s: &Subject<'_>, k: usize, ctx: &Ctx) -> Outcome {
    if !(s.connected && s.non_bipartite()) {
        return Outcome::Skip;
    }
    let mut rng = ctx.rng(s.graph6, k);
    let sampled = is_k_extendable_sampled(s.g, k, ctx.sample_budget, &mut rng);
    if !matches!(sampled, Ok(ref v) if v.holds) {
        return Outcome::Skip;
    }
    let nu = s.g.order();
    match fc(s.g, nu - 4) {
        Some(v) if v.holds => Outcome::Holds { positive: true },
        Some(v) if holds(&ext(s.g, k)) => Outcome::Fails(witness_of(&v)),
        _ => Outcome::Skip,
    }
}

fn check_lmy1(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    implies(s.connected && s.non_bipartite() && holds(&ext(s.g, k)), || fc(s.g, 2 * k))
}

fn check_lmp1(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    implies(s.connected && holds(&ext(s.g, k)), || ext(s.g, k - 1))
}

fn check_lmy4(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    implies(s.connected && holds(&half(s.g, k)), || half(s.g, k - 1))
}

fn check_lmly1(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    if !(s.connected && holds(&ext(s.g, k))) {
        return Outcome::Skip;
    }
    if !s.non_bipartite() {
        return Outcome::Holds { positive: true };
    }
    let kappa = vertex_connectivity(s.g).expect("extendable graphs have at least two vertices");
    if kappa >= 2 * k {
        Outcome::Holds { positive: true }
    } else {
        Outcome::Fails(ReportWitness::new("connectivity", json!(kappa)))
    }
}

/// Both parities: `k`-extendable ⟹ `m`-extendable, and `k½` ⟹ `m½`, for
/// every `m <= k`.
fn check_lmz1(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    let decide: fn(&Graph, usize) -> Option<Verdict> = if s.g.order() % 2 == 0 { ext } else { half };
    if !(s.connected && holds(&decide(s.g, k))) {
        return Outcome::Skip;
    }
    for m in 0..k {
        match decide(s.g, m) {
            Some(v) if v.holds => {}
            Some(v) => {
                let w = witness_of(&v);
                return Outcome::Fails(ReportWitness::new(
                    "lower-parameter",
                    json!({ "m": m, "witness_kind": w.kind, "witness": w.value }),
                ));
            }
            None => return Outcome::Skip,
        }
    }
    Outcome::Holds { positive: true }
}

fn check_th21(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    if !(s.connected && s.non_bipartite()) {
        return Outcome::Skip;
    }
    equivalent(("extendable", ext(s.g, k)), ("factor-critical", fc(s.g, 2 * k)))
}

fn check_th23(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    if !s.connected {
        return Outcome::Skip;
    }
    equivalent(("half-extendable", half(s.g, k)), ("factor-critical", fc(s.g, 2 * k + 1)))
}

fn check_lmp2(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    let Some((u, w)) = s.bipartition else {
        return Outcome::Skip;
    };
    if !s.connected || u.len() != w.len() {
        return Outcome::Skip;
    }
    equivalent(
        ("extendable", ext(s.g, k)),
        ("balanced-bipartite", is_balanced_bipartite_critical(s.g, k).ok()),
    )
}

fn check_lml1(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    let Some((u, w)) = s.bipartition else {
        return Outcome::Skip;
    };
    if !s.connected || !matches!(is_minimal(s.g, Property::Extendable(k)), Ok(v) if v.holds) {
        return Outcome::Skip;
    }
    let low = |side: VertexSet| side.iter().filter(|&v| s.g.degree(v) == k + 1).count();
    let (in_u, in_w) = (low(u), low(w));
    if in_u + in_w >= 2 * k + 2 && in_u > k && in_w > k {
        Outcome::Holds { positive: true }
    } else {
        Outcome::Fails(ReportWitness::new(
            "degree-count",
            json!({ "U": in_u, "W": in_w, "degree": k + 1 }),
        ))
    }
}

fn check_kappa(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    if !(s.connected && holds(&ext(s.g, k))) {
        return Outcome::Skip;
    }
    let kappa = vertex_connectivity(s.g).expect("extendable graphs have at least two vertices");
    if kappa > k {
        Outcome::Holds { positive: true }
    } else {
        Outcome::Fails(ReportWitness::new("connectivity", json!(kappa)))
    }
}

fn check_bipnfc(s: &Subject<'_>, n: usize, _: &Ctx) -> Outcome {
    let Some((u, w)) = s.bipartition else {
        return Outcome::Skip;
    };
    if !s.connected {
        return Outcome::Skip;
    }
    match fc(s.g, n) {
        Some(v) if v.holds => Outcome::Fails(ReportWitness::new(
            "bipartition",
            json!({ "U": set_json(u), "W": set_json(w) }),
        )),
        Some(_) => Outcome::Holds { positive: true },
        None => Outcome::Skip,
    }
}

/// Conjectured minimum degrees of minimal graphs with `property`.
pub(crate) fn conjectured_degrees(property: Property) -> BTreeSet<usize> {
    match property {
        Property::Extendable(k) => [k + 1, 2 * k, 2 * k + 1].into_iter().collect(),
        Property::FactorCritical(n) => [n + 1].into_iter().collect(),
        Property::HalfExtendable(_) => BTreeSet::new(),
    }
}

pub(crate) fn minimal_degree(s: &Subject<'_>, property: Property) -> Outcome {
    if !s.connected || !matches!(is_minimal(s.g, property), Ok(v) if v.holds) {
        return Outcome::Skip;
    }
    let delta = s.g.min_degree().expect("minimal graphs are nonempty");
    let expected = conjectured_degrees(property);
    let finding = (!expected.contains(&delta)).then(|| {
        ReportWitness::new(
            "min-degree",
            json!({ "delta": delta, "conjectured": expected.iter().collect::<Vec<_>>() }),
        )
    });
    Outcome::Degree { delta, finding }
}

fn check_conj1(s: &Subject<'_>, k: usize, _: &Ctx) -> Outcome {
    minimal_degree(s, Property::Extendable(k))
}

fn check_conj2(s: &Subject<'_>, n: usize, _: &Ctx) -> Outcome {
    minimal_degree(s, Property::FactorCritical(n))
}

macro_rules! claim {
    ($id:literal, $summary:literal, $kind:ident, $mode:ident, $params:expr, $check:expr) => {
        Claim {
            id: $id,
            summary: $summary,
            kind: ClaimKind::$kind,
            mode: Mode::$mode,
            params: $params,
            check: $check,
        }
    };
}

static REGISTRY: [Claim; 19] = [
    claim!("C-OB1", "2k-factor-critical implies k-extendable",
        Theorem, Exhaustive, ext_range, check_ob1),
    claim!("C-P2EXT", "2-extendable, non-bipartite, order >= 6 implies bicritical",
        Theorem, Exhaustive,
        |nu| if nu % 2 == 0 && nu >= 6 { vec![2] } else { Vec::new() },
        check_p2ext),
    claim!("C-P3BIC", "3-extendable and bicritical, order >= 8: every G-e is bicritical",
        Theorem, Exhaustive,
        |nu| if nu % 2 == 0 && nu >= 8 { vec![3] } else { Vec::new() },
        check_p3bic),
    claim!("C-LMF1", "even k: non-bipartite k-extendable, order > 2k, implies k-factor-critical",
        Theorem, Exhaustive,
        |nu| keep(ext_range(nu), |k| k % 2 == 0),
        check_lmf1),
    claim!("C-LMF2", "even k: non-bipartite (k+1)-extendable, order >= 2k+4, implies G and every G-e k-factor-critical",
        Theorem, Exhaustive,
        |nu| keep(ext_range(nu), |k| k % 2 == 0 && 2 * k + 4 <= nu),
        check_lmf2),
    claim!("C-LMFS1", "non-bipartite (order/2-2)-extendable, order >= 14, implies (order-4)-factor-critical",
        Theorem, Sampled,
        |nu| if nu % 2 == 0 && nu >= 14 { vec![nu / 2 - 2] } else { Vec::new() },
        check_lmfs1),
    claim!("C-LMY1", "non-bipartite k-extendable with 3k >= 2(order+1) implies 2k-factor-critical",
        Theorem, Exhaustive,
        |nu| keep(ext_range(nu), |k| 3 * k >= 2 * (nu + 1)),
        check_lmy1),
    claim!("C-LMP1", "k-extendable, k >= 1, implies (k-1)-extendable",
        Theorem, Exhaustive,
        |nu| keep(ext_range(nu), |k| k >= 1),
        check_lmp1),
    claim!("C-LMY4", "k½-extendable, k >= 1, implies (k-1)½-extendable",
        Theorem, Exhaustive,
        |nu| keep(half_range(nu), |k| k >= 1),
        check_lmy4),
    claim!("C-LMLY1", "k-extendable with 4k >= order: bipartite or connectivity >= 2k",
        Theorem, Exhaustive,
        |nu| keep(ext_range(nu), |k| 4 * k >= nu),
        check_lmly1),
    claim!("C-LMZ1", "k-extendable (k½-extendable) implies m-extendable (m½-extendable) for m <= k",
        Theorem, Exhaustive,
        |nu| if nu % 2 == 0 { ext_range(nu) } else { half_range(nu) },
        check_lmz1),
    claim!("C-TH21", "non-bipartite, 4k >= order+2: k-extendable iff 2k-factor-critical",
        Theorem, Exhaustive,
        |nu| keep(ext_range(nu), |k| 4 * k >= nu + 2),
        check_th21),
    claim!("C-TH23", "odd order, 4k+3 >= order: k½-extendable iff (2k+1)-factor-critical",
        Theorem, Exhaustive,
        |nu| keep(half_range(nu), |k| 4 * k + 3 >= nu),
        check_th23),
    claim!("C-LMP2", "balanced bipartite, 1 <= k <= order/2-1: k-extendable iff balanced removals leave a perfect matching",
        Theorem, Exhaustive,
        |nu| keep(ext_range(nu), |k| k >= 1),
        check_lmp2),
    claim!("C-LML1", "minimal k-extendable bipartite: at least k+1 vertices of degree k+1 on each side",
        Theorem, Exhaustive,
        |nu| keep(ext_range(nu), |k| k >= 1),
        check_lml1),
    claim!("C-KAPPA", "k-extendable implies connectivity >= k+1",
        Theorem, Exhaustive, ext_range, check_kappa),
    claim!("C-BIPNFC", "a bipartite graph is not n-factor-critical for n > 0",
        Theorem, Exhaustive,
        |nu| keep(critical_range(nu), |n| n >= 1),
        check_bipnfc),
    claim!("CONJ-1", "minimal k-extendable with order <= 4k has minimum degree k+1, 2k or 2k+1",
        Conjecture, Exhaustive,
        |nu| keep(ext_range(nu), |k| k >= 1 && nu <= 4 * k),
        check_conj1),
    claim!("CONJ-2", "minimal n-factor-critical has minimum degree n+1",
        Conjecture, Exhaustive,
        |nu| keep(critical_range(nu), |n| n >= 1),
        check_conj2),
];

/// Every claim the verifier must know about, each exactly once.
pub const REQUIRED_IDS: [&str; 19] = [
    "C-OB1", "C-P2EXT", "C-P3BIC", "C-LMF1", "C-LMF2", "C-LMFS1", "C-LMY1", "C-LMP1",
    "C-LMY4", "C-LMLY1", "C-LMZ1", "C-TH21", "C-TH23", "C-LMP2", "C-LML1", "C-KAPPA",
    "C-BIPNFC", "CONJ-1", "CONJ-2",
];

/// Claims whose hypothesis is unsatisfiable at every order.
const KNOWN_VACUOUS: [&str; 1] = ["C-LMY1"];

pub fn registry() -> &'static [Claim] {
    &REGISTRY
}

pub fn claim(id: &str) -> Option<&'static Claim> {
    REGISTRY.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Registry sanity: every required id exactly once, no extras, and every
/// claim except the known-vacuous ones has parameters at some order.
pub fn self_test() -> Result<(), String> {
    for id in REQUIRED_IDS {
        let n = REGISTRY.iter().filter(|c| c.id == id).count();
        if n != 1 {
            return Err(format!("claim {id} registered {n} times"));
        }
    }
    if REGISTRY.len() != REQUIRED_IDS.len() {
        return Err(format!(
            "registry has {} claims, expected {}",
            REGISTRY.len(),
            REQUIRED_IDS.len()
        ));
    }
    for c in &REGISTRY {
        let live = (0..=64).any(|nu| !c.params(nu).is_empty());
        if live == KNOWN_VACUOUS.contains(&c.id) {
            return Err(format!("claim {} has unexpected parameter coverage", c.id));
        }
    }
    Ok(())
}
