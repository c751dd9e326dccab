//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//! Every tolerance is exact equality; stated runtime budgets are asserted.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use num_traits::Zero;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylfcr_core::corpus::{oracle_strongly_dominant, random_ideals};
use weylfcr_core::exactlin::RatVec;
use weylfcr_core::fcr::{fcr_decide, FcrStatus};
use weylfcr_core::howe::{case_b_fcr, closure_case_a, closure_case_b, odd_k_case_b, witness_case_a};
use weylfcr_core::ideals::{canonicalize, point_ideal, LinearIdeal};
use weylfcr_core::rat::{rat, rat_int, Rat};
use weylfcr_core::rootsys::{build, Kind, RootSystem};
use weylfcr_core::weyl::{
    enumerate_group, fixes_base, inversion_set, inversion_sum, is_minimal_representative,
    kappa_check, length, rho_difference, stabilizer_decomposition, stabilizes, WeylElement,
    WeylGroup,
};

fn finish(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("acceptance {criterion}: PASS");
    } else {
        println!("acceptance {criterion}: FAIL ({} failures)", failures.len());
        for f in failures.iter().take(5) {
            println!("  counterexample: {f}");
        }
    }
    assert!(failures.is_empty(), "{criterion} failed");
}

fn semisimple_systems(max_rank: usize) -> Vec<Arc<RootSystem>> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push(build(Kind::A, r + 1).unwrap());
    }
    for r in 1..=max_rank {
        out.push(build(Kind::B, r).unwrap());
        out.push(build(Kind::C, r).unwrap());
    }
    for r in 2..=max_rank {
        out.push(build(Kind::D, r).unwrap());
    }
    out
}

fn fuzz_systems() -> Vec<Arc<RootSystem>> {
    let mut out = semisimple_systems(3);
    out.push(build(Kind::Gl, 2).unwrap());
    out.push(build(Kind::Gl, 3).unwrap());
    out
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..(1u32 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

#[test]
fn criterion_01_rho_difference_identity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let cases = [
        (build(Kind::A, 4).unwrap(), 24usize),
        (build(Kind::B, 3).unwrap(), 48),
        (build(Kind::C, 3).unwrap(), 48),
        (build(Kind::D, 4).unwrap(), 192),
    ];
    for (rs, order) in &cases {
        let g = enumerate_group(rs).unwrap();
        if g.len() != *order {
            failures.push(format!("{} rank {}: |W| = {}", rs.kind(), rs.ambient_dim(), g.len()));
        }
        for w in g.elements() {
            if let Err(e) = rho_difference(rs, w) {
                failures.push(format!("{e}"));
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 1 took {elapsed:?}");
    finish("01 inversion-sum identity over four groups", failures);
}

#[test]
fn criterion_02_stabilizer_pairing_dichotomy() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for rs in semisimple_systems(4) {
        let g = enumerate_group(&rs).unwrap();
        // Precompute inversion sums once per element.
        let sums: Vec<RatVec> = g.elements().iter().map(|w| inversion_sum(&rs, w)).collect();
        for subset in subsets(rs.semisimple_rank()) {
            let sub = rs.standard_subsystem(&subset).unwrap();
            for (wi, w) in g.elements().iter().enumerate() {
                if !stabilizes(&rs, &sub, w) {
                    continue;
                }
                let pairing = sub.rho_prime().dot(&sums[wi]);
                let fixes = fixes_base(&sub, w);
                if pairing < Rat::zero() {
                    failures.push(format!(
                        "{} rank {}, subset {subset:?}: negative pairing",
                        rs.kind(),
                        rs.ambient_dim()
                    ));
                }
                if pairing.is_zero() != fixes {
                    failures.push(format!(
                        "{} rank {}, subset {subset:?}, element {wi}: zero-pairing mismatch",
                        rs.kind(),
                        rs.ambient_dim()
                    ));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "criterion 2 took {elapsed:?}");
    finish("02 stabilizer pairing nonnegativity and zero dichotomy", failures);
}

#[test]
fn criterion_03_semidirect_factorization() {
    let mut failures = Vec::new();
    for rs in semisimple_systems(4) {
        let g = enumerate_group(&rs).unwrap();
        for subset in subsets(rs.semisimple_rank()) {
            let sub = rs.standard_subsystem(&subset).unwrap();
            let d = match stabilizer_decomposition(&rs, &g, &sub) {
                Ok(d) => d,
                Err(e) => {
                    failures.push(format!("{e}"));
                    continue;
                }
            };
            if d.w0.len() != d.w1.len() * d.t.len() {
                failures.push(format!(
                    "{} subset {subset:?}: |W0| != |W1||T|",
                    rs.kind()
                ));
            }
            let mut seen = BTreeSet::new();
            for &wi in &d.w0 {
                let Some((a, b)) = d.factorize(wi) else {
                    failures.push(format!("{} subset {subset:?}: missing factorization", rs.kind()));
                    continue;
                };
                if !d.w1.contains(&a) || !d.t.contains(&b) || g.compose_indices(a, b) != wi {
                    failures.push(format!("{} subset {subset:?}: bad factorization", rs.kind()));
                }
                if length(&rs, g.element(wi))
                    != length(&rs, g.element(a)) + length(&rs, g.element(b))
                {
                    failures.push(format!("{} subset {subset:?}: length not additive", rs.kind()));
                }
                seen.insert((a, b));
            }
            if seen.len() != d.w0.len() {
                failures.push(format!("{} subset {subset:?}: factorization not injective", rs.kind()));
            }
            // Base-fixing equivalences for members of the stabilizer: the
            // base maps onto itself iff it stays positive inside the
            // subsystem iff every base reflection increases length.
            for &wi in &d.w0 {
                let w = g.element(wi);
                let e1 = fixes_base(&sub, w);
                let e2 = sub
                    .simple_ids()
                    .iter()
                    .all(|&t| sub.contains(w.map_root(t)) && rs.is_positive_id(w.map_root(t)));
                let e3 = sub.simple_ids().iter().all(|&t| {
                    let s = WeylElement::reflection(&rs, rs.root(t)).unwrap();
                    length(&rs, &w.compose(&s)) > length(&rs, w)
                });
                if e1 != e2 || e2 != e3 {
                    failures.push(format!(
                        "{} subset {subset:?}: base-fixing equivalences disagree",
                        rs.kind()
                    ));
                }
            }
        }
    }
    finish("03 semidirect factorization of the stabilizer", failures);
}

#[test]
fn criterion_04_kappa_involution() {
    let mut failures = Vec::new();
    for rs in semisimple_systems(4) {
        let g = enumerate_group(&rs).unwrap();
        for subset in subsets(rs.semisimple_rank()) {
            let sub = rs.standard_subsystem(&subset).unwrap();
            let d = stabilizer_decomposition(&rs, &g, &sub).unwrap();
            for &ti in &d.t {
                match kappa_check(&rs, &sub, g.element(ti)) {
                    Ok(true) => {}
                    Ok(false) => failures.push(format!(
                        "{} rank {} subset {subset:?} element {ti}",
                        rs.kind(),
                        rs.ambient_dim()
                    )),
                    Err(e) => failures.push(format!("{e}")),
                }
            }
        }
    }
    finish("04 kappa permutes inversions and kills the pairing", failures);
}

#[test]
fn criterion_05_dot_action_duality() {
    let mut failures = Vec::new();
    for rs in {
        let mut v = semisimple_systems(4);
        v.push(build(Kind::Gl, 4).unwrap());
        v
    } {
        let g = enumerate_group(&rs).unwrap();
        let n = rs.ambient_dim();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..1000 {
            let wi = rng.gen_range(0..g.len());
            let w = g.element(wi);
            let h = RatVec::new(
                (0..n).map(|_| rat(rng.gen_range(-4..=4i64), rng.gen_range(1..=3i64))).collect(),
            );
            let mu = RatVec::new(
                (0..n).map(|_| rat(rng.gen_range(-4..=4i64), rng.gen_range(1..=3i64))).collect(),
            );
            // (w.h)(mu) = (w h) . mu - h(<Q(w)>) must equal h(w^{ -1} . mu).
            let lhs = &w.apply(&h).dot(&mu) - &h.dot(&inversion_sum(&rs, w));
            let rhs = h.dot(&w.inverse().dot_apply(&rs, &mu));
            if lhs != rhs {
                failures.push(format!(
                    "{} rank {} element {wi}: duality mismatch",
                    rs.kind(),
                    rs.ambient_dim()
                ));
            }
        }
    }
    finish("05 dot-action duality on a thousand seeded triples", failures);
}

#[test]
fn criterion_06_strong_dominance_vs_oracle() {
    let mut failures = Vec::new();
    let mut stabilized_total = 0usize;
    let mut total = 0usize;
    for rs in fuzz_systems() {
        let corpus = random_ideals(&rs, 0, 200);
        for (i, ideal) in corpus.iter().enumerate() {
            total += 1;
            match oracle_strongly_dominant(ideal, 6) {
                None => {}
                Some(expected) => {
                    stabilized_total += 1;
                    if ideal.is_strongly_dominant() != expected {
                        failures.push(format!(
                            "{} rank {} corpus item {i}: decision {} oracle {}",
                            rs.kind(),
                            rs.ambient_dim(),
                            ideal.is_strongly_dominant(),
                            expected
                        ));
                    }
                }
            }
        }
    }
    // The oracle must actually bite: most corpus instances stabilize.
    if stabilized_total * 2 < total {
        failures.push(format!("only {stabilized_total}/{total} instances stabilized"));
    }
    println!("  (strong-dominance oracle: {stabilized_total}/{total} stabilized)");
    finish("06 density decision agrees with the bounded-hull oracle", failures);
}

#[test]
fn criterion_07_strongly_dominant_implies_dominant() {
    let mut failures = Vec::new();
    for rs in fuzz_systems() {
        for (i, ideal) in random_ideals(&rs, 0, 200).iter().enumerate() {
            if ideal.is_strongly_dominant() && !ideal.is_dominant() {
                failures.push(format!("{} rank {} corpus item {i}", rs.kind(), rs.ambient_dim()));
            }
        }
    }
    finish("07 strong dominance implies dominance on the corpus", failures);
}

fn b_lambda_ids(ideal: &LinearIdeal) -> Vec<usize> {
    ideal.integral_root_data().b_lambda
}

#[test]
fn criterion_08_translate_coherence_sweeps() {
    let mut failures = Vec::new();
    for rs in fuzz_systems() {
        let g = enumerate_group(&rs).unwrap();
        let simple_set: BTreeSet<RatVec> = rs.simple_roots().iter().cloned().collect();
        for (idx, ideal) in random_ideals(&rs, 0, 200).iter().enumerate() {
            let tag = format!("{} rank {} corpus item {idx}", rs.kind(), rs.ambient_dim());
            let sd = ideal.is_strongly_dominant();
            let b_ids = b_lambda_ids(ideal);
            let b_roots = ideal.b_lambda_roots();
            if sd {
                // Integral base inside the simple roots.
                if !b_roots.iter().all(|r| simple_set.contains(r)) {
                    failures.push(format!("{tag}: integral base escapes the simple roots"));
                }
            }
            let moved: Vec<LinearIdeal> =
                g.elements().iter().map(|w| ideal.dot_act(w)).collect();
            for (wi, w) in g.elements().iter().enumerate() {
                if sd && moved[wi].is_strongly_dominant() {
                    // Both translates strongly dominant forces a minimal
                    // representative.
                    if !is_minimal_representative(&rs, &b_roots, w) {
                        failures.push(format!("{tag}: element {wi} fails coset membership"));
                    }
                }
                if sd && moved[wi] == *ideal {
                    let image: BTreeSet<usize> = b_ids.iter().map(|&t| w.map_root(t)).collect();
                    let original: BTreeSet<usize> = b_ids.iter().copied().collect();
                    if image != original {
                        failures.push(format!("{tag}: element {wi} fixes the ideal, moves the base"));
                    }
                }
            }
            // Carried bases: v minimal => base of v.I is v(base of I), and
            // minimal representatives compose.
            for (vi, v) in g.elements().iter().enumerate() {
                if !is_minimal_representative(&rs, &b_roots, v) {
                    continue;
                }
                let carried: BTreeSet<usize> = b_ids.iter().map(|&t| v.map_root(t)).collect();
                let fresh: BTreeSet<usize> =
                    b_lambda_ids(&moved[vi]).into_iter().collect();
                if carried != fresh {
                    failures.push(format!("{tag}: carried base mismatch at element {vi}"));
                    continue;
                }
                let b1_roots: Vec<RatVec> =
                    fresh.iter().map(|&t| rs.root(t).clone()).collect();
                for (ui, u) in g.elements().iter().enumerate() {
                    if is_minimal_representative(&rs, &b1_roots, u)
                        && !is_minimal_representative(&rs, &b_roots, &u.compose(v))
                    {
                        failures.push(format!("{tag}: composition {ui}*{vi} not minimal"));
                    }
                }
            }
            // Witness consistency inside the decision procedure.
            if let Err(e) = fcr_decide(&g, ideal) {
                failures.push(format!("{tag}: {e}"));
            }
            // Dominant points of the variety are always absorbed.
            if let Some(lattice) = ideal.integral_dominance_lattice().ok().flatten() {
                let base = lattice.base_point().clone();
                if rs.is_dominant_integral(&base)
                    && !weylfcr_core::fcr::annihilator_contains(&g, ideal, &base).unwrap()
                {
                    failures.push(format!("{tag}: variety point not absorbed"));
                }
            }
        }
    }
    finish("08 translate coherence and witness consistency", failures);
}

#[test]
fn criterion_09_case_a_closures() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut regimes = [0usize; 3];
    for n in 1..=6usize {
        let gl = build(Kind::Gl, n).unwrap();
        for p in 0..=n {
            let q = n - p;
            for k in 1..=6usize {
                if n <= k {
                    regimes[0] += 1;
                } else if n <= 2 * k {
                    regimes[1] += 1;
                } else {
                    regimes[2] += 1;
                }
                match closure_case_a(&gl, p, q, k, 3) {
                    Err(e) => failures.push(format!("p={p} q={q} k={k}: {e}")),
                    Ok(rep) => {
                        if !rep.oracle_agreement {
                            failures.push(format!("p={p} q={q} k={k}: oracle disagrees"));
                        }
                        if !rep.full_space && rep.dims.iter().any(|&d| d != k) {
                            failures.push(format!("p={p} q={q} k={k}: component dim != k"));
                        }
                    }
                }
            }
        }
    }
    if regimes.iter().any(|&c| c == 0) {
        failures.push(format!("regime coverage incomplete: {regimes:?}"));
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 9 took {elapsed:?}");
    finish("09 first-case closures match the stratum hulls", failures);
}

#[test]
fn criterion_10_case_a_witnesses() {
    let mut failures = Vec::new();
    for n in 2..=6usize {
        let gl = build(Kind::Gl, n).unwrap();
        for k in 1..n {
            for i in 0..=(n - k) {
                if let Err(e) = witness_case_a(&gl, i, n, k) {
                    failures.push(format!("n={n} k={k} i={i}: {e}"));
                }
            }
        }
    }
    finish("10 explicit witnesses carry and normalize the components", failures);
}

#[test]
fn criterion_11_case_b_closures_fcr_and_odd() {
    let mut failures = Vec::new();
    for n in 2..=5usize {
        let c = build(Kind::C, n).unwrap();
        let g = enumerate_group(&c).unwrap();
        for p in 1..=2.min(n - 1) {
            match closure_case_b(&c, n, p, 3) {
                Err(e) => failures.push(format!("closure n={n} p={p}: {e}")),
                Ok(rep) => {
                    if !rep.oracle_agreement {
                        failures.push(format!("closure n={n} p={p}: oracle disagrees"));
                    }
                    let expect: Vec<usize> = (0..=p.min(n - p)).map(|i| p - i).collect();
                    if rep.dims != expect {
                        failures.push(format!("closure n={n} p={p}: dims {:?}", rep.dims));
                    }
                }
            }
            match case_b_fcr(&c, &g, n, p) {
                Err(e) => failures.push(format!("fcr n={n} p={p}: {e}")),
                Ok(r) => {
                    if r.verdict.status != FcrStatus::Fcr {
                        failures.push(format!("fcr n={n} p={p}: {}", r.verdict.status.as_str()));
                    }
                }
            }
        }
    }
    for n in 1..=3usize {
        let c = build(Kind::C, n).unwrap();
        let g = enumerate_group(&c).unwrap();
        for k in [1usize, 3] {
            if k >= 2 * n {
                continue;
            }
            match odd_k_case_b(&c, &g, n, k, 3) {
                Err(e) => failures.push(format!("odd n={n} k={k}: {e}")),
                Ok(rep) => {
                    if !rep.empty {
                        failures.push(format!("odd n={n} k={k}: not certified empty"));
                    }
                    if rep
                        .certificates
                        .iter()
                        .any(|per_w| per_w.iter().any(|c| c.is_none()))
                    {
                        failures.push(format!("odd n={n} k={k}: missing certificate"));
                    }
                }
            }
        }
    }
    finish("11 second-case closures, base transport, odd emptiness", failures);
}

#[test]
fn criterion_12_canonical_decisions() {
    let mut failures = Vec::new();

    let check = |name: &str, elapsed_ok: bool, ok: bool, failures: &mut Vec<String>| {
        if !ok {
            failures.push(format!("{name}: wrong verdict"));
        }
        if !elapsed_ok {
            failures.push(format!("{name}: over time budget"));
        }
    };

    // Point ideal of a dominant weight: finite dimensional.
    let c2 = build(Kind::C, 2).unwrap();
    let g2 = enumerate_group(&c2).unwrap();
    let t = Instant::now();
    let v = fcr_decide(&g2, &point_ideal(&c2, &RatVec::from_ints(&[2, 1]))).unwrap();
    check(
        "dominant point",
        t.elapsed().as_secs_f64() < 1.0,
        v.status == FcrStatus::FiniteDimensional,
        &mut failures,
    );

    // Rank-one shifted ideal: not FCR.
    let a1 = build(Kind::A, 2).unwrap();
    let ga = enumerate_group(&a1).unwrap();
    let shifted = canonicalize(&a1, &[(RatVec::from_ints(&[1, -1]), rat_int(2))]).unwrap();
    let t = Instant::now();
    let v = fcr_decide(&ga, &shifted).unwrap();
    check(
        "shifted rank one",
        t.elapsed().as_secs_f64() < 1.0,
        v.status == FcrStatus::NotFcr,
        &mut failures,
    );

    // Dense second-case component: FCR.
    let c3 = build(Kind::C, 3).unwrap();
    let g3 = enumerate_group(&c3).unwrap();
    let omega0 = weylfcr_core::howe::omega_case_b(&c3, 0, 3, 1).unwrap();
    let t = Instant::now();
    let v = fcr_decide(&g3, &omega0).unwrap();
    check(
        "dense component",
        t.elapsed().as_secs_f64() < 1.0,
        v.status == FcrStatus::Fcr,
        &mut failures,
    );

    finish("12 canonical verdicts", failures);
}

/// Not a numbered criterion: inversion sets of simple reflections and a few
/// fixed identities guarding the shared helpers the criteria lean on.
#[test]
fn supporting_identities() {
    let rs = build(Kind::C, 3).unwrap();
    let g = enumerate_group(&rs).unwrap();
    for (i, alpha) in rs.simple_roots().iter().enumerate() {
        let s = WeylElement::simple_reflection(&rs, i).unwrap();
        let inv = inversion_set(&rs, &s);
        assert_eq!(inv.len(), 1);
        assert_eq!(rs.root(inv[0]), alpha);
    }
    // Longest-element inversion count equals the number of positive roots.
    let longest = g.elements().iter().map(|w| length(&rs, w)).max().unwrap();
    assert_eq!(longest, rs.num_positive());
    let _: &WeylGroup = &g;
}
