//! Verification suites: exhaustive identity checks over enumerated groups
//! and seeded random-ideal corpora. Every suite reports per-statement
//! checked/failure counts with the first counterexample serialized; the
//! process exit code stays 0 because failures are data, not errors.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use weylfcr_core::corpus::{oracle_strongly_dominant, random_ideals};
use weylfcr_core::exactlin::RatVec;
use weylfcr_core::fcr::{equivalence_bc, fcr_decide, FcrStatus};
use weylfcr_core::howe::{case_b_fcr, closure_case_a, closure_case_b, odd_k_case_b, witness_case_a};
use weylfcr_core::ideals::{canonicalize, LinearIdeal};
use weylfcr_core::rat::{rat, Rat};
use weylfcr_core::rootsys::{build, Kind, RootSystem};
use weylfcr_core::weyl::{
    enumerate_group, enumerate_reflection_subgroup, fixes_base, inversion_sum,
    is_minimal_representative, kappa_check, length, rho_difference, stabilizer_decomposition,
    stabilizes, subsystem_inversions, WeylElement,
};
use weylfcr_core::{Error, Result};

pub struct Options {
    pub rank: Option<usize>,
    pub kind: Option<String>,
    pub seed: u64,
    pub count: Option<usize>,
}

struct Statement {
    name: &'static str,
    formula: &'static str,
    checked: usize,
    failures: usize,
    first_counterexample: Option<String>,
}

impl Statement {
    fn new(name: &'static str, formula: &'static str) -> Self {
        Statement { name, formula, checked: 0, failures: 0, first_counterexample: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(witness());
            }
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "statement": self.name,
            "formula": self.formula,
            "checked": self.checked,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        })
    }
}

fn summarize(suite: &str, seed: u64, statements: Vec<Statement>) -> Value {
    let checked: usize = statements.iter().map(|s| s.checked).sum();
    let failures: usize = statements.iter().map(|s| s.failures).sum();
    json!({
        "suite": suite,
        "seed": seed,
        "statements": statements.iter().map(Statement::to_json).collect::<Vec<_>>(),
        "checked": checked,
        "failures": failures,
    })
}

fn systems_for(
    opts: &Options,
    default_kinds: &[Kind],
    default_max_rank: usize,
) -> Result<Vec<Arc<RootSystem>>> {
    let kinds: Vec<Kind> = match &opts.kind {
        Some(k) => vec![Kind::parse(k)?],
        None => default_kinds.to_vec(),
    };
    let ranks: Vec<usize> = match opts.rank {
        Some(r) => vec![r],
        None => (1..=default_max_rank).collect(),
    };
    let mut out = Vec::new();
    for &kind in &kinds {
        for &r in &ranks {
            let n = match kind {
                Kind::A | Kind::Gl => r + 1,
                _ => r,
            };
            if kind == Kind::D && r < 2 {
                continue;
            }
            out.push(build(kind, n)?);
        }
    }
    Ok(out)
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..(1u32 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

fn section2(opts: &Options) -> Result<Value> {
    let systems = systems_for(opts, &[Kind::A, Kind::B, Kind::C, Kind::D], 4)?;
    let mut inv_sum = Statement::new(
        "inversion_sum_identity",
        "rho - w^-1(rho) == sum over Q(w), for every group element",
    );
    let mut sub_inv = Statement::new(
        "subsystem_inversion_identity",
        "rho' - w^-1(rho') == sum over T(w), for members of the base subgroup",
    );
    let mut dichotomy = Statement::new(
        "stabilizer_pairing_dichotomy",
        "(rho', <Q(w)>) >= 0 with equality iff w(B1) == B1, over stabilizers",
    );
    let mut semidirect = Statement::new(
        "semidirect_factorization",
        "W0 == W1 T uniquely with l(w1 t) == l(w1) + l(t)",
    );
    let mut equivalences = Statement::new(
        "base_fixing_equivalences",
        "w(B1) == B1 iff w(B1) in R1+ iff every base reflection increases length",
    );
    let mut kappa = Statement::new(
        "kappa_involution",
        "alpha -> v(alpha) permutes Q(t), swaps the sign classes, kills the pairing",
    );
    let mut duality = Statement::new(
        "dot_action_duality",
        "(w.h)(mu) == h(w^-1 . mu) on seeded random triples",
    );

    for rs in &systems {
        let g = enumerate_group(rs)?;
        let tag = |extra: String| format!("{} rank {}: {extra}", rs.kind(), rs.semisimple_rank());
        for w in g.elements() {
            inv_sum.check(rho_difference(rs, w).is_ok(), || tag("identity fails".into()));
        }
        for subset in subsets(rs.semisimple_rank()) {
            let sub = rs.standard_subsystem(&subset)?;
            let base: Vec<RatVec> = sub.simple_roots(rs).into_iter().cloned().collect();
            for w in enumerate_reflection_subgroup(rs, &base)? {
                sub_inv.check(subsystem_inversions(rs, &sub, &w).is_ok(), || {
                    tag(format!("subset {subset:?}"))
                });
            }
            let sums: Vec<RatVec> = g.elements().iter().map(|w| inversion_sum(rs, w)).collect();
            for (wi, w) in g.elements().iter().enumerate() {
                if !stabilizes(rs, &sub, w) {
                    continue;
                }
                let pairing = sub.rho_prime().dot(&sums[wi]);
                let ok = pairing >= Rat::zero() && (pairing.is_zero() == fixes_base(&sub, w));
                dichotomy.check(ok, || tag(format!("subset {subset:?} element {wi}")));
            }
            let d = stabilizer_decomposition(rs, &g, &sub)?;
            let mut seen = BTreeSet::new();
            let mut ok = d.w0.len() == d.w1.len() * d.t.len();
            for &wi in &d.w0 {
                match d.factorize(wi) {
                    None => ok = false,
                    Some((a, b)) => {
                        if g.compose_indices(a, b) != wi
                            || length(rs, g.element(wi))
                                != length(rs, g.element(a)) + length(rs, g.element(b))
                        {
                            ok = false;
                        }
                        seen.insert((a, b));
                    }
                }
            }
            ok = ok && seen.len() == d.w0.len();
            semidirect.check(ok, || tag(format!("subset {subset:?}")));
            for &wi in &d.w0 {
                let w = g.element(wi);
                let e1 = fixes_base(&sub, w);
                let e2 = sub
                    .simple_ids()
                    .iter()
                    .all(|&t| sub.contains(w.map_root(t)) && rs.is_positive_id(w.map_root(t)));
                let e3 = sub.simple_ids().iter().all(|&t| {
                    let s = WeylElement::reflection(rs, rs.root(t)).expect("root");
                    length(rs, &w.compose(&s)) > length(rs, w)
                });
                equivalences.check(e1 == e2 && e2 == e3, || {
                    tag(format!("subset {subset:?} element {wi}"))
                });
            }
            for &ti in &d.t {
                kappa.check(
                    matches!(kappa_check(rs, &sub, g.element(ti)), Ok(true)),
                    || tag(format!("subset {subset:?} element {ti}")),
                );
            }
        }
        let n = rs.ambient_dim();
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..1000 {
            let wi = rng.gen_range(0..g.len());
            let w = g.element(wi);
            let h = RatVec::new(
                (0..n).map(|_| rat(rng.gen_range(-4..=4i64), rng.gen_range(1..=3i64))).collect(),
            );
            let mu = RatVec::new(
                (0..n).map(|_| rat(rng.gen_range(-4..=4i64), rng.gen_range(1..=3i64))).collect(),
            );
            let lhs = &w.apply(&h).dot(&mu) - &h.dot(&inversion_sum(rs, w));
            let rhs = h.dot(&w.inverse().dot_apply(rs, &mu));
            duality.check(lhs == rhs, || tag(format!("element {wi}")));
        }
    }
    Ok(summarize(
        "section2",
        opts.seed,
        vec![inv_sum, sub_inv, dichotomy, semidirect, equivalences, kappa, duality],
    ))
}

fn fuzz_systems(opts: &Options) -> Result<Vec<Arc<RootSystem>>> {
    systems_for(opts, &[Kind::A, Kind::B, Kind::C, Kind::D, Kind::Gl], 3)
}

fn section3(opts: &Options) -> Result<Value> {
    let count = opts.count.unwrap_or(200);
    let mut implication = Statement::new(
        "strong_dominance_implies_dominance",
        "density of the dominant slice forces every positive shifted constant onto R+",
    );
    let mut oracle = Statement::new(
        "density_decision_vs_bounded_oracle",
        "decision == bounded-slice oracle verdict on stabilized instances",
    );
    let mut base_in_simples = Statement::new(
        "integral_base_inside_simple_roots",
        "strongly dominant ideals have B_lambda inside the simple roots",
    );
    let mut class_total = Statement::new(
        "weight_class_trichotomy",
        "strict implies weak; strongly dominant point ideals with regular shift are strict",
    );
    for rs in fuzz_systems(opts)? {
        let simple_set: BTreeSet<RatVec> = rs.simple_roots().iter().cloned().collect();
        for (i, ideal) in random_ideals(&rs, opts.seed, count).iter().enumerate() {
            let tag = |what: &str| {
                format!("{} rank {} item {i}: {what}", rs.kind(), rs.semisimple_rank())
            };
            let sd = ideal.is_strongly_dominant();
            implication.check(!sd || ideal.is_dominant(), || tag("dominance fails"));
            if let Some(expected) = oracle_strongly_dominant(ideal, 6) {
                oracle.check(sd == expected, || tag("oracle disagrees"));
            }
            if sd {
                base_in_simples.check(
                    ideal.b_lambda_roots().iter().all(|r| simple_set.contains(r)),
                    || tag("base escapes the simple roots"),
                );
            }
            let class = ideal.lambda_plus_class();
            let strict = class == weylfcr_core::ideals::LambdaClass::Strict;
            let weakish = class != weylfcr_core::ideals::LambdaClass::Neither;
            class_total.check(!strict || weakish, || tag("trichotomy order violated"));
        }
    }
    Ok(summarize(
        "section3",
        opts.seed,
        vec![implication, oracle, base_in_simples, class_total],
    ))
}

fn section4(opts: &Options) -> Result<Value> {
    let count = opts.count.unwrap_or(120);
    let mut both_dominant = Statement::new(
        "both_translates_dominant_force_minimality",
        "ideal and w-translate strongly dominant implies w(B_lambda) in R+",
    );
    let mut fixers = Statement::new(
        "ideal_fixers_fix_base",
        "w.I == I for strongly dominant I implies w(B_lambda) == B_lambda",
    );
    let mut transport = Statement::new(
        "carried_bases_compose",
        "B of v.I equals v(B of I) for minimal v; minimal over the carried base composes",
    );
    let mut witness_consistency = Statement::new(
        "decision_witness_consistency",
        "all strongly dominant translates agree on coset membership",
    );
    let mut absorbed = Statement::new(
        "variety_points_absorbed",
        "dominant integral points of the variety have their annihilator contained",
    );
    for rs in fuzz_systems(opts)? {
        let g = enumerate_group(&rs)?;
        for (i, ideal) in random_ideals(&rs, opts.seed, count).iter().enumerate() {
            let tag = |what: &str| {
                format!("{} rank {} item {i}: {what}", rs.kind(), rs.semisimple_rank())
            };
            let sd = ideal.is_strongly_dominant();
            let b_ids = ideal.integral_root_data().b_lambda;
            let b_roots = ideal.b_lambda_roots();
            let moved: Vec<LinearIdeal> = g.elements().iter().map(|w| ideal.dot_act(w)).collect();
            for (wi, w) in g.elements().iter().enumerate() {
                if sd && moved[wi].is_strongly_dominant() {
                    both_dominant.check(is_minimal_representative(&rs, &b_roots, w), || {
                        tag(&format!("element {wi}"))
                    });
                }
                if sd && moved[wi] == *ideal {
                    let image: BTreeSet<usize> = b_ids.iter().map(|&t| w.map_root(t)).collect();
                    let original: BTreeSet<usize> = b_ids.iter().copied().collect();
                    fixers.check(image == original, || tag(&format!("element {wi}")));
                }
            }
            for (vi, v) in g.elements().iter().enumerate() {
                if !is_minimal_representative(&rs, &b_roots, v) {
                    continue;
                }
                let carried: BTreeSet<usize> = b_ids.iter().map(|&t| v.map_root(t)).collect();
                let fresh: BTreeSet<usize> =
                    moved[vi].integral_root_data().b_lambda.into_iter().collect();
                let ok = carried == fresh;
                transport.check(ok, || tag(&format!("carry mismatch at {vi}")));
                if !ok {
                    continue;
                }
                let b1_roots: Vec<RatVec> = fresh.iter().map(|&t| rs.root(t).clone()).collect();
                for u in g.elements() {
                    if is_minimal_representative(&rs, &b1_roots, u) {
                        transport.check(
                            is_minimal_representative(&rs, &b_roots, &u.compose(v)),
                            || tag(&format!("composition at {vi}")),
                        );
                    }
                }
            }
            witness_consistency.check(fcr_decide(&g, ideal).is_ok(), || tag("decision error"));
            if let Ok(Some(lattice)) = ideal.integral_dominance_lattice() {
                let base = lattice.base_point().clone();
                if rs.is_dominant_integral(&base) {
                    absorbed.check(
                        weylfcr_core::fcr::annihilator_contains(&g, ideal, &base)
                            .unwrap_or(false),
                        || tag("variety point not absorbed"),
                    );
                }
            }
        }
    }
    Ok(summarize(
        "section4",
        opts.seed,
        vec![both_dominant, fixers, transport, witness_consistency, absorbed],
    ))
}

fn howe_a(opts: &Options) -> Result<Value> {
    let mut closures = Statement::new(
        "first_case_closures",
        "closure components are the stratum hulls, stabilized; dim of every component == k",
    );
    let mut witnesses = Statement::new(
        "first_case_witnesses",
        "explicit permutations carry the top component; extremes strongly dominant; minimal",
    );
    for n in 1..=6usize {
        let gl = build(Kind::Gl, n)?;
        for p in 0..=n {
            let q = n - p;
            for k in 1..=6usize {
                match closure_case_a(&gl, p, q, k, 3) {
                    Err(e) => closures.check(false, || format!("p={p} q={q} k={k}: {e}")),
                    Ok(rep) => closures.check(
                        rep.oracle_agreement
                            && (rep.full_space || rep.dims.iter().all(|&d| d == k)),
                        || format!("p={p} q={q} k={k}"),
                    ),
                }
            }
        }
        for k in 1..n {
            for i in 0..=(n - k) {
                witnesses.check(witness_case_a(&gl, i, n, k).is_ok(), || {
                    format!("n={n} k={k} i={i}")
                });
            }
        }
    }
    Ok(summarize("howe-a", opts.seed, vec![closures, witnesses]))
}

fn howe_b(opts: &Options) -> Result<Value> {
    let mut closures = Statement::new(
        "second_case_closures",
        "closure components are the stratum hulls; dim of component i == p - i",
    );
    let mut transport = Statement::new(
        "second_case_base_transport",
        "the block rotation carries the base ideal onto the dense component; verdict FCR",
    );
    let mut odd = Statement::new(
        "odd_multiplicity_emptiness",
        "bounded weight sets empty over every component, certified by non-integral pairings",
    );
    for n in 2..=5usize {
        let c = build(Kind::C, n)?;
        let g = enumerate_group(&c)?;
        for p in 1..=2.min(n - 1) {
            match closure_case_b(&c, n, p, 3) {
                Err(e) => closures.check(false, || format!("n={n} p={p}: {e}")),
                Ok(rep) => {
                    let expect: Vec<usize> = (0..=p.min(n - p)).map(|i| p - i).collect();
                    closures.check(rep.oracle_agreement && rep.dims == expect, || {
                        format!("n={n} p={p}")
                    });
                }
            }
            match case_b_fcr(&c, &g, n, p) {
                Err(e) => transport.check(false, || format!("n={n} p={p}: {e}")),
                Ok(r) => transport.check(r.verdict.status == FcrStatus::Fcr, || {
                    format!("n={n} p={p}")
                }),
            }
        }
    }
    for n in 1..=3usize {
        let c = build(Kind::C, n)?;
        let g = enumerate_group(&c)?;
        for k in [1usize, 3] {
            if k >= 2 * n {
                continue;
            }
            match odd_k_case_b(&c, &g, n, k, 3) {
                Err(e) => odd.check(false, || format!("n={n} k={k}: {e}")),
                Ok(rep) => odd.check(
                    rep.empty
                        && rep
                            .certificates
                            .iter()
                            .all(|per_w| per_w.iter().all(|c| c.is_some())),
                    || format!("n={n} k={k}"),
                ),
            }
        }
    }
    Ok(summarize("howe-b", opts.seed, vec![closures, transport, odd]))
}

fn ideals_fuzz(opts: &Options) -> Result<Value> {
    let count = opts.count.unwrap_or(500);
    let mut canonical = Statement::new(
        "canonical_form_idempotent",
        "re-canonicalizing the canonical generators reproduces the ideal",
    );
    let mut group_law = Statement::new(
        "dot_action_group_law",
        "(uv).I == u.(v.I) on seeded random pairs",
    );
    let mut transport = Statement::new(
        "variety_transport",
        "sampled variety points land on the translated variety",
    );
    let mut identity_rep = Statement::new(
        "identity_is_minimal",
        "the identity is a minimal representative for every strongly dominant ideal",
    );
    let mut tau_identity = Statement::new(
        "tau_of_identity_empty",
        "the tau-invariant of the identity is empty",
    );
    for rs in fuzz_systems(opts)? {
        let g = enumerate_group(&rs)?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
        for (i, ideal) in random_ideals(&rs, opts.seed, count).iter().enumerate() {
            let tag = |what: &str| {
                format!("{} rank {} item {i}: {what}", rs.kind(), rs.semisimple_rank())
            };
            canonical.check(
                canonicalize(ideal.system(), ideal.functionals())
                    .map_or(false, |again| &again == ideal),
                || tag("canonical form unstable"),
            );
            let u = g.element(rng.gen_range(0..g.len()));
            let v = g.element(rng.gen_range(0..g.len()));
            group_law.check(
                ideal.dot_act(&u.compose(v)) == ideal.dot_act(v).dot_act(u),
                || tag("group law fails"),
            );
            let w = g.element(rng.gen_range(0..g.len()));
            let moved = ideal.dot_act(w);
            let coords: Vec<Rat> = (0..ideal.dim())
                .map(|_| rat(rng.gen_range(-3..=3i64), rng.gen_range(1..=2i64)))
                .collect();
            let sample = ideal.variety().point_at(&coords);
            transport.check(
                moved.variety().contains_point(&w.dot_apply(&rs, &sample)),
                || tag("variety transport fails"),
            );
            if ideal.is_strongly_dominant() {
                identity_rep.check(
                    matches!(equivalence_bc(ideal, &WeylElement::identity(&rs)), Ok(true)),
                    || tag("identity rejected"),
                );
            }
            tau_identity.check(
                ideal.tau_invariant(&WeylElement::identity(&rs)).is_empty(),
                || tag("tau of identity nonempty"),
            );
        }
    }
    Ok(summarize(
        "ideals-fuzz",
        opts.seed,
        vec![canonical, group_law, transport, identity_rep, tau_identity],
    ))
}

pub fn run_suite(name: &str, opts: Options) -> Result<Value> {
    match name {
        "section2" => section2(&opts),
        "section3" => section3(&opts),
        "section4" => section4(&opts),
        "howe-a" => howe_a(&opts),
        "howe-b" => howe_b(&opts),
        "ideals-fuzz" => ideals_fuzz(&opts),
        "all" => {
            let parts = vec![
                section2(&opts)?,
                section3(&opts)?,
                section4(&opts)?,
                howe_a(&opts)?,
                howe_b(&opts)?,
                ideals_fuzz(&opts)?,
            ];
            let checked: u64 = parts.iter().map(|p| p["checked"].as_u64().unwrap_or(0)).sum();
            let failures: u64 =
                parts.iter().map(|p| p["failures"].as_u64().unwrap_or(0)).sum();
            Ok(json!({
                "suite": "all",
                "seed": opts.seed,
                "suites": parts,
                "checked": checked,
                "failures": failures,
            }))
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown suite {other:?}; expected one of section2, section3, section4, \
             howe-a, howe-b, ideals-fuzz, all"
        ))),
    }
}
