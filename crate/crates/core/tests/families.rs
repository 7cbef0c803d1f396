use xcond::families::{biclique_claimed, cw_claimed, path_claimed, verify_claim, ClaimedBasis, VerificationReport};
use xcond::graphs::cameron_walker;
use xcond::groebner::BuchbergerConfig;

fn run(c: &ClaimedBasis) -> VerificationReport {
    let pres = c.presentation(&BuchbergerConfig::default()).unwrap();
    verify_claim(c, &pres).unwrap()
}

#[test]
fn paths_initial_ideal_is_a_n_union_b_n() {
    for n in 3..=8 {
        let c = path_claimed(n).unwrap();
        let r = run(&c);
        assert!(r.membership_ok && r.spair_ok && r.initial_match && r.reduces_to_gb, "P_{n}: {r:?}");
        assert!(r.initials_quadratic);
    }
}

#[test]
fn biclique_grid_is_reduced() {
    for p in 1..=3 {
        for q in 1..=3 {
            for r in 1..=3 {
                let c = biclique_claimed(p, q, r).unwrap();
                let rep = run(&c);
                assert!(rep.reduced_match && rep.initial_match, "({p},{q},{r}): {rep:?}");
            }
        }
    }
}

/// All (p, q) with at most `max` vertices, n, m >= 1.
fn cw_params(max: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn parts(total: usize, min: usize, len: usize) -> Vec<Vec<usize>> {
        // Weakly decreasing sequences are enough up to symmetry, but keep all orders for coverage.
        if len == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in min..=total {
            for rest in parts(total - first, min, len - 1) {
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
            for p in parts(max, 1, n) {
                for q in parts(max, 0, m) {
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
fn cameron_walker_small_instances() {
    let mut count = 0;
    for (p, q) in cw_params(9) {
        let g = cameron_walker(&p, &q).unwrap();
        let c = cw_claimed(&g).unwrap();
        let r = run(&c);
        assert!(r.membership_ok && r.initial_match, "p={p:?} q={q:?}: {r:?}");
        count += 1;
    }
    println!("{count} instances");
}
