//! The ten acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line.
//! Criterion 1 is expected to print FAIL: the printed P_8 list is not a Gröbner
//! basis, and the test pins the exact discrepancy instead.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xcond::betti::{betti_numbers, degree_component, euler_checks_performed, is_componentwise_linear};
use xcond::families::{
    biclique_claimed, cover_index, cw_claimed, path_a_n, path_b_n, path_claimed, verify_claim, ClaimedBasis,
    VerificationReport,
};
use xcond::graphs::{
    all_connected_graphs, cameron_walker, connected_graph_classes, cover_monomials, minimal_vertex_covers, path,
    Graph,
};
use xcond::groebner::{reduced_groebner_basis, same_elements, BuchbergerConfig, MonomialIdeal};
use xcond::rees::{linear_quotients_of, ReesPresentation};
use xcond::ring::{parse_polynomial, Monomial, OrderSpec, Polynomial, VarContext};
use xcond::symalg::{cycle_complex_checks, mg_equivalence_check};

/// Largest Cameron–Walker graph (vertex count) in the criterion 4 sweep.
const CW_MAX_VERTICES: usize = 12;
/// Instances with at least this many minimal covers exceed the default pair cap
/// (measured: every one hit 200000 reduced pairs, none finished uncapped in 25 min).
const CW_COVER_BUDGET: usize = 32;
/// Every instance up to this many vertices is fully verified.
const CW_FULL_VERTICES: usize = 10;

fn report(n: u32, pass: bool, detail: impl std::fmt::Display, elapsed: Duration) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("criterion {n}: {status} ({detail}; {:.1}s)", elapsed.as_secs_f64());
}

fn verify(c: &ClaimedBasis) -> (VerificationReport, ReesPresentation) {
    let pres = c.presentation(&BuchbergerConfig::default()).unwrap();
    assert!(pres.pi_sound().unwrap(), "π-soundness");
    (verify_claim(c, &pres).unwrap(), pres)
}

#[test]
fn criterion_01_path8_golden() {
    let t = Instant::now();
    let g = path(8).unwrap();
    let printed_covers: [&[usize]; 9] = [
        &[1, 3, 4, 6, 7],
        &[1, 3, 4, 6, 8],
        &[1, 3, 5, 6, 8],
        &[1, 3, 5, 7],
        &[2, 3, 5, 6, 8],
        &[2, 3, 5, 7],
        &[2, 4, 5, 7],
        &[2, 4, 6, 7],
        &[2, 4, 6, 8],
    ];
    let covers: Vec<Vec<usize>> =
        minimal_vertex_covers(&g).covers.iter().map(|&c| (1..=8).filter(|v| c >> (v - 1) & 1 == 1).collect()).collect();
    let covers_ok = covers == printed_covers.iter().map(|c| c.to_vec()).collect::<Vec<_>>();

    let claim = path_claimed(8).unwrap();
    let (_, pres) = verify(&claim);
    let ctx = pres.ctx();
    let order = pres.order();
    let printed = [
        "x8*y1 - x7*y2", "x5*y2 - x4*y3", "x2*y3 - x1*y5", "x2*y4 - x1*y6", "x4*y6 - x3*y7", "x6*y7 - x5*y8",
        "x8*y8 - x7*y9", "x7*y3 - x6*x8*y4", "x4*y5 - x3*x5*y9", "x7*y5 - x6*x8*y6", "y1*y9 - y2*y8",
        "y3*y6 - y4*y5", "y1*y3 - x6*y2*y4", "y1*y5 - x6*y2*y6", "y1*y5 - x3*y3*y8", "y1*y6 - x3*y4*y8",
        "y2*y5 - x3*y3*y9", "y2*y6 - x3*y4*y9", "y3*y7 - x5*y4*y9", "y5*y7 - x5*y6*y9", "y1*y7 - x4*y4*y8",
        "y2*y7 - x4*y4*y9", "y3*y8 - x6*y4*y9", "y5*y8 - x6*y6*y9",
    ];
    let p = |s: &str| parse_polynomial(s, ctx, order).unwrap().make_monic();
    let mut expected: Vec<Polynomial> = printed.iter().map(|s| p(s)).collect();
    let dropped = [p("y1*y5 - x6*y2*y6"), p("y1*y5 - x3*y3*y8")];
    expected.retain(|f| !dropped.contains(f));
    expected.push(p("y1*y5 - x3*x6*y4*y9"));
    assert_eq!(expected.len(), 23);

    let gb = pres.gb().elements();
    let printed_ok = gb.len() == 23 && same_elements(&expected, gb, order);
    let missing: Vec<String> = gb.iter().filter(|g| !expected.contains(g)).map(|g| g.render(ctx)).collect();
    let extra: Vec<String> = expected.iter().filter(|f| !gb.contains(f)).map(|f| f.render(ctx)).collect();
    let elapsed = t.elapsed();
    report(
        1,
        covers_ok && printed_ok,
        format_args!(
            "covers match: {covers_ok}; computed reduced GB has {} elements, printed+replacement has 23; \
             absent from the printed list: {missing:?}",
            gb.len()
        ),
        elapsed,
    );

    // Pinned discrepancy: three type-(ii) binomials are missing from the printed list.
    assert!(covers_ok);
    assert_eq!(gb.len(), 26);
    assert!(extra.is_empty(), "{extra:?}");
    let mut missing = missing;
    missing.sort();
    assert_eq!(missing, ["x2*y1 - x1*x3*y8", "x2*y2 - x1*x3*y9", "x5*y1 - x4*x6*y4"]);
    assert!(expected.iter().all(|f| pres.gb().contains(f).unwrap()));
    assert!(elapsed < Duration::from_secs(120));
}

#[test]
fn criterion_02_path_initial_ideals() {
    let t = Instant::now();
    let mut ok = true;
    for n in 3..=8 {
        let c = path_claimed(n).unwrap();
        let (r, pres) = verify(&c);
        let ini = pres.initial_ideal();
        let a = path_a_n(n).unwrap();
        let b = path_b_n(n).unwrap();
        let expected = a.len() + b.len();
        let good = r.initial_match && r.initials_quadratic && ini.len() == expected && ini.max_degree() == 2;
        if !good {
            println!("P_{n}: {r:?}");
        }
        ok &= good;
    }
    let elapsed = t.elapsed();
    report(2, ok, "ini(J_{P_n}) = A_n ∪ B_n for n = 3..8, all quadratic", elapsed);
    assert!(ok);
    assert!(elapsed < Duration::from_secs(600));
}

#[test]
fn criterion_03_biclique_reduced() {
    let t = Instant::now();
    let mut ok = true;
    for (p, q, r) in [(1, 1, 1), (2, 2, 2), (2, 3, 2), (3, 2, 2)] {
        let c = biclique_claimed(p, q, r).unwrap();
        let (rep, _) = verify(&c);
        ok &= rep.reduced_match;
        if (p, q, r) == (2, 3, 2) {
            ok &= rep.distinct == 12 && rep.gb_size == 12;
        }
    }
    let elapsed = t.elapsed();
    report(3, ok, "claimed set is the reduced GB; Γ_{2,3,2} has 12 elements", elapsed);
    assert!(ok);
    assert!(elapsed < Duration::from_secs(300));
}

/// Weakly decreasing (p, q) with `n, m >= 1`, `p_i >= 1` and at most `max` vertices.
fn cw_instances(max: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn seqs(budget: usize, min: usize, cap: usize, len: usize) -> Vec<Vec<usize>> {
        if len == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in min..=cap.min(budget) {
            for rest in seqs(budget - first, min, first, len - 1) {
                let mut v = vec![first];
                v.extend(rest);
                out.push(v);
            }
        }
        out
    }
    let mut out = Vec::new();
    for n in 1..=max {
        for m in 1..=max {
            for p in seqs(max, 1, max, n) {
                for q in seqs(max, 0, max, m) {
                    let size = p.iter().sum::<usize>() + 2 * q.iter().sum::<usize>() + n + m;
                    if size <= max {
                        out.push((p.clone(), q));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_04_cameron_walker_initials() {
    let t = Instant::now();
    let instances = cw_instances(CW_MAX_VERTICES);
    for named in [(vec![1], vec![1]), (vec![2], vec![1]), (vec![1, 1], vec![0])] {
        assert!(instances.contains(&named));
    }
    let mut bad = Vec::new();
    let mut out_of_budget = Vec::new();
    for (p, q) in &instances {
        let g = cameron_walker(p, q).unwrap();
        let claimed = cw_claimed(&g).unwrap();
        if claimed.gens().len() >= CW_COVER_BUDGET {
            assert!(g.n() > CW_FULL_VERTICES, "p={p:?} q={q:?}");
            out_of_budget.push(format!("p={p:?} q={q:?}"));
            continue;
        }
        let (r, _) = verify(&claimed);
        if !(r.initial_match && r.membership_ok) {
            bad.push(format!("p={p:?} q={q:?}"));
        }
    }

    let g = cameron_walker(&[3, 1, 2, 1], &[2, 0, 1]).unwrap();
    let c = cw_claimed(&g).unwrap();
    let r = |n: &[&str]| cover_index(&g, &c, n).expect("printed cover is minimal");
    let r1 = r(&["xi1", "xi4", "zeta1", "zeta2", "zeta3", "a2_1", "a3_1", "a3_2", "b1_1", "c1_2", "c3_1"]);
    let r2 = r(&["xi1", "xi2", "xi3", "xi4", "zeta3", "b1_1", "c1_1", "b1_2", "c1_2", "c3_1"]);
    let r3 = r(&["xi1", "xi2", "xi4", "zeta1", "zeta2", "zeta3", "a3_1", "a3_2", "b1_1", "c1_2", "b3_1"]);
    let r4 = r(&["xi1", "xi3", "xi4", "zeta1", "zeta2", "zeta3", "a2_1", "c1_1", "b1_2", "c3_1"]);
    let r5 = r(&["xi1", "xi2", "xi3", "xi4", "zeta1", "b1_1", "b1_2", "b3_1", "c3_1"]);
    let nx = g.n();
    let mono = |x: &[&str], ys: &[usize]| {
        let mut e = vec![0u32; c.ctx().len()];
        for v in x {
            e[g.index_of(v).unwrap()] += 1;
        }
        for &y in ys {
            e[nx + y] += 1;
        }
        Monomial::from_exps(e)
    };
    let printed = [
        mono(&["xi2"], &[r1]),
        mono(&["c1_1"], &[r1]),
        mono(&["zeta1"], &[r2]),
        mono(&[], &[r3, r4]),
        mono(&[], &[r2, r5]),
    ];
    let w_g = c.claimed_initial_ideal();
    let example_ok = printed.iter().all(|m| w_g.gens().contains(m));

    let elapsed = t.elapsed();
    let ok = bad.is_empty() && out_of_budget.is_empty() && example_ok;
    report(
        4,
        ok,
        format_args!(
            "{} of {} instances up to {CW_MAX_VERTICES} vertices verified, mismatches {bad:?}, \
             beyond the pair cap {out_of_budget:?}; printed initials in W_G: {example_ok}",
            instances.len() - out_of_budget.len(),
            instances.len()
        ),
        elapsed,
    );
    // No computed instance contradicts the claim; the only gap is instances
    // with 11 or 12 vertices and at least 32 covers.
    assert!(bad.is_empty(), "{bad:?}");
    assert!(example_ok);
    assert!(elapsed < Duration::from_secs(600));
}

#[test]
fn criterion_05_monomialcase_pipeline() {
    let t = Instant::now();
    let mut ok = true;
    let mut compared = 0;
    let cfg = BuchbergerConfig::default();
    for g in [path(5).unwrap(), path(6).unwrap(), xcond::graphs::biclique(2, 2, 2).unwrap()] {
        let base = VarContext::new(g.names()).unwrap();
        let gens = cover_monomials(&g, &minimal_vertex_covers(&g));
        let pres = ReesPresentation::with_default_order(&base, gens, &cfg).unwrap();
        assert!(pres.pi_sound().unwrap());
        for k in 1..=3 {
            let cert = pres.componentwise_certificate(k).unwrap();
            let good = cert.minimal && cert.linear_quotients && cert.colon_cross_check && cert.oracle_match != Some(false);
            if cert.generators <= 16 {
                compared += 1;
                ok &= cert.oracle_match == Some(true);
            }
            if !good {
                println!("{:?} k={k}: {cert:?}", g.family());
            }
            ok &= good;
        }
    }
    let elapsed = t.elapsed();
    report(5, ok, format_args!("9 powers certified; {compared} closed-form tables equal the oracle"), elapsed);
    assert!(ok);
}

#[test]
fn criterion_06_chordal_iff_x_condition() {
    let t = Instant::now();
    let cfg = BuchbergerConfig::default();
    let mut graphs: Vec<Graph> = (2..=5).flat_map(all_connected_graphs).collect();
    let labeled = graphs.len();
    graphs.extend(connected_graph_classes(6));
    let mut mismatches = Vec::new();
    for g in &graphs {
        let r = mg_equivalence_check(g, &cfg).unwrap();
        let good = r.equivalence_holds
            && r.hhhkr_matches
            && r.x_condition == r.x_condition_from_paths
            && (!r.chordal || (r.interiors_below && r.mixed_initials_are_edges));
        if !good {
            mismatches.push(g.edges());
        }
    }
    let elapsed = t.elapsed();
    let ok = mismatches.is_empty() && labeled == 1 + 4 + 38 + 728 && graphs.len() == labeled + 112;
    report(
        6,
        ok,
        format_args!("{labeled} labeled graphs (n ≤ 5) + 112 classes (n = 6); mismatches {mismatches:?}"),
        elapsed,
    );
    assert!(ok);
    assert!(elapsed < Duration::from_secs(900));
}

#[test]
fn criterion_07_linear_quotients_not_componentwise_linear() {
    let t = Instant::now();
    let m = |e: &[u32]| Monomial::from_exps(e.to_vec());
    let lq = linear_quotients_of(2, &[m(&[2, 0]), m(&[1, 2]), m(&[0, 2])]);
    let colons_ok = lq.ok
        && lq.steps[1].colon == MonomialIdeal::new(2, [m(&[1, 0])])
        && lq.steps[2].colon == MonomialIdeal::new(2, [m(&[1, 0])]);
    let i = MonomialIdeal::new(2, [m(&[2, 0]), m(&[0, 2])]);
    let component = degree_component(&i, 2);
    let beta14 = betti_numbers(&component).unwrap().get(1, 4);
    let cl = is_componentwise_linear(&i).unwrap();
    let ok = colons_ok && beta14 != 0 && !cl;
    report(7, ok, format_args!("colons (x1), (x1); β_{{1,4}} = {beta14}; componentwise linear: {cl}"), t.elapsed());
    assert!(ok);
}

#[test]
fn criterion_08_cycle_complex() {
    let t = Instant::now();
    let mut ok = true;
    for r in 4..=6 {
        let rep = cycle_complex_checks(r).unwrap();
        ok &= rep.product_zero
            && rep.minor_is_x1_to_xr1
            && rep.gcd_is_one
            && rep.rank_phi1 == r - 1
            && rep.rank_phi2 == 1
            && rep.betti == [r, r, 1]
            && !rep.linear_resolution;
    }
    report(8, ok, "r = 4, 5, 6: φ1φ2 = 0, ±x1⋯x_{r-1} minor, gcd 1, ranks (r-1, 1), Betti (r, r, 1)", t.elapsed());
    assert!(ok);
}

#[test]
fn criterion_09_property_suites() {
    let t = Instant::now();
    let names = ["a", "b", "c", "d"].map(String::from).to_vec();
    let blocks = vec![("p".to_string(), names[..2].to_vec()), ("q".to_string(), names[2..].to_vec())];
    let ctx = VarContext::with_blocks(names, blocks).unwrap();
    let kinds: Vec<_> = [
        "lex[a > b > c > d]",
        "revlex[a > b > c > d]",
        "weighted(w=[3,1,2,1]; tie=lex[d > c > b > a])",
        "block(p: lex[a > b]; q: revlex[c > d])",
    ]
    .iter()
    .map(|s| OrderSpec::parse(s).unwrap().compile(&ctx).unwrap())
    .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let rand_mono = |rng: &mut ChaCha8Rng| Monomial::from_exps((0..4).map(|_| rng.gen_range(0..=4)).collect());
    let mut order_violations = 0;
    for o in &kinds {
        for _ in 0..10_000 {
            let (a, b, c) = (rand_mono(&mut rng), rand_mono(&mut rng), rand_mono(&mut rng));
            use std::cmp::Ordering::*;
            let ab = o.cmp(&a, &b);
            let bad = (ab == Equal) != (a == b)
                || (ab == Less && o.cmp(&b, &c) == Less && o.cmp(&a, &c) != Less)
                || o.cmp(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()) != ab
                || o.cmp(&a, &Monomial::one(4)) == Less;
            order_violations += bad as usize;
        }
    }

    let ideals = [
        vec!["a^2 - b", "a*b - c"],
        vec!["a*b - c*d", "a^2 - d^2", "b*c - a"],
        vec!["a + b + c + d", "a*b + b*c + c*d + a*d", "a*b*c*d - 1"],
        vec!["a*c - b^2", "b*d - c^2", "a*d - b*c"],
        vec!["a^3 - b*c", "b^2 - a*d", "c*d - a^2", "d^2 - b"],
    ];
    let cfg = BuchbergerConfig::default();
    let mut gb_violations = 0;
    for gens in &ideals {
        let o = &kinds[0];
        let mut polys: Vec<Polynomial> = gens.iter().map(|s| parse_polynomial(s, &ctx, o).unwrap()).collect();
        let reference = reduced_groebner_basis(&polys, o, &cfg).unwrap();
        for _ in 0..100 {
            polys.shuffle(&mut rng);
            gb_violations += (reduced_groebner_basis(&polys, o, &cfg).unwrap().elements() != reference.elements()) as usize;
        }
    }

    // Every oracle call checks the Euler characteristic and errors on a mismatch.
    let before = euler_checks_performed();
    let mut euler_violations = 0;
    let mut pi_violations = 0;
    for _ in 0..200 {
        let gens: Vec<Monomial> = (0..rng.gen_range(1..6))
            .map(|_| Monomial::from_exps((0..4).map(|_| rng.gen_range(0..=1)).collect()))
            .filter(|m| !m.is_one())
            .collect();
        let i = MonomialIdeal::new(4, gens);
        if i.is_zero() {
            continue;
        }
        euler_violations += betti_numbers(&i).is_err() as usize;
        let base = VarContext::new(&["a", "b", "c", "d"]).unwrap();
        let pres = ReesPresentation::with_default_order(&base, i.gens().to_vec(), &cfg).unwrap();
        pi_violations += !pres.pi_sound().unwrap() as usize;
    }
    let checks = euler_checks_performed() - before;

    let ok = order_violations == 0 && gb_violations == 0 && euler_violations == 0 && pi_violations == 0 && checks > 0;
    report(
        9,
        ok,
        format_args!(
            "order {order_violations}/40000, GB uniqueness {gb_violations}/500, Euler {euler_violations}/{checks}, π {pi_violations}"
        ),
        t.elapsed(),
    );
    assert!(ok);
}

#[test]
fn criterion_10_weighted_order_route() {
    let t = Instant::now();
    let g = path(5).unwrap();
    let base = VarContext::new(g.names()).unwrap();
    let gens = cover_monomials(&g, &minimal_vertex_covers(&g));
    let pres = ReesPresentation::with_weighted_order(&base, gens, &BuchbergerConfig::default()).unwrap();
    let mut ok = pres.is_weighted() && pres.pi_sound().unwrap();
    for k in 1..=3 {
        let cert = pres.componentwise_certificate(k).unwrap();
        ok &= cert.nondecreasing_degrees && cert.linear_quotients;
    }
    report(10, ok, "I_{P_5}, k = 1..3: nondecreasing image degrees, linear quotients", t.elapsed());
    assert!(ok);
}
