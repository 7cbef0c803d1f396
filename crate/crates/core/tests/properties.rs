use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use xcond::betti::{betti_numbers, euler_checks_performed, hilbert_numerator};
use xcond::groebner::{
    buchberger_observed, combine, normal_form_with_quotients, reduced_groebner_basis, BuchbergerConfig, MonomialIdeal,
};
use xcond::rees::ReesPresentation;
use xcond::ring::{parse_polynomial, Monomial, MonomialOrder, OrderSpec, Polynomial, VarContext};

const NV: usize = 4;

fn ctx() -> VarContext {
    let names = ["a", "b", "c", "d"].map(String::from).to_vec();
    let blocks = vec![("p".to_string(), names[..2].to_vec()), ("q".to_string(), names[2..].to_vec())];
    VarContext::with_blocks(names, blocks).unwrap()
}

fn order_kinds() -> Vec<(&'static str, MonomialOrder)> {
    let c = ctx();
    let specs = [
        ("lex", "lex[a > b > c > d]"),
        ("revlex", "revlex[a > b > c > d]"),
        ("weighted", "weighted(w=[3,1,2,1]; tie=lex[d > c > b > a])"),
        ("block", "block(p: lex[a > b]; q: revlex[c > d])"),
    ];
    specs.iter().map(|(k, s)| (*k, OrderSpec::parse(s).unwrap().compile(&c).unwrap())).collect()
}

fn mono(max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, NV).prop_map(Monomial::from_exps)
}

fn poly() -> impl Strategy<Value = Vec<(i64, Monomial)>> {
    prop::collection::vec((-5i64..=5, mono(3)), 0..5)
}

fn build(terms: &[(i64, Monomial)], order: &MonomialOrder) -> Polynomial {
    Polynomial::from_terms(terms.iter().map(|(c, m)| (BigRational::from_integer(BigInt::from(*c)), m.clone())).collect(), order)
}

fn lex() -> MonomialOrder {
    order_kinds().remove(0).1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn order_axioms(a in mono(4), b in mono(4), c in mono(4)) {
        for (kind, o) in order_kinds() {
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b, "{} total", kind);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse(), "{} antisymmetric", kind);
            if o.cmp(&a, &b) == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.cmp(&a, &c), Ordering::Less, "{} transitive", kind);
            }
            let (ac, bc) = (a.mul(&c).unwrap(), b.mul(&c).unwrap());
            prop_assert_eq!(o.cmp(&ac, &bc), o.cmp(&a, &b), "{} multiplicative", kind);
            prop_assert_ne!(o.cmp(&a, &Monomial::one(NV)), Ordering::Less, "{} well-ordered", kind);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        let o = lex();
        let (p, q, r) = (build(&p, &o), build(&q, &o), build(&r, &o));
        prop_assert_eq!(p.add(&q, &o), q.add(&p, &o));
        prop_assert_eq!(p.add(&q, &o).add(&r, &o), p.add(&q.add(&r, &o), &o));
        prop_assert_eq!(p.mul(&q, &o).unwrap(), q.mul(&p, &o).unwrap());
        prop_assert_eq!(
            p.mul(&q.add(&r, &o), &o).unwrap(),
            p.mul(&q, &o).unwrap().add(&p.mul(&r, &o).unwrap(), &o)
        );
        prop_assert!(p.sub(&p, &o).is_zero());
        prop_assert!(p.is_sorted_by(&o));
    }

    #[test]
    fn parse_render_round_trip(p in poly()) {
        let c = ctx();
        for (_, o) in order_kinds() {
            let f = build(&p, &o);
            let text = f.render(&c);
            prop_assert_eq!(parse_polynomial(&text, &c, &o).unwrap(), f);
        }
    }

    #[test]
    fn colon_matches_brute_force(gens in prop::collection::vec(mono(2), 1..5), m in mono(2), w in mono(3)) {
        let i = MonomialIdeal::new(NV, gens);
        let colon = i.colon(&m);
        prop_assert_eq!(colon.contains(&w), i.contains(&w.mul(&m).unwrap()));
        for g in colon.gens() {
            prop_assert!(i.contains(&g.mul(&m).unwrap()));
        }
    }

    #[test]
    fn division_trace_certifies(f in poly(), gs in prop::collection::vec(poly(), 1..4)) {
        let o = lex();
        let f = build(&f, &o);
        let gs: Vec<Polynomial> = gs.iter().map(|g| build(g, &o)).collect();
        let (q, r) = normal_form_with_quotients(&f, &gs, &o).unwrap();
        prop_assert_eq!(combine(&q, &gs, &o).unwrap().add(&r, &o), f);
        for t in r.terms() {
            prop_assert!(gs.iter().filter_map(|g| g.leading_monomial()).all(|lm| !lm.divides(&t.mono)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn betti_euler_consistency(gens in prop::collection::vec(mono(2), 1..6)) {
        let i = MonomialIdeal::new(NV, gens);
        let before = euler_checks_performed();
        let table = betti_numbers(&i).unwrap();
        prop_assert!(euler_checks_performed() > before);
        // 1 - Σ (-1)^i β_{i,j} t^j is the Hilbert numerator of S/I.
        let num = hilbert_numerator(&i).unwrap();
        let mut from_table = vec![0i64; num.len().max(1)];
        from_table[0] = 1;
        for (&(k, j), &b) in table.entries() {
            let j = j as usize;
            if from_table.len() <= j {
                from_table.resize(j + 1, 0);
            }
            from_table[j] -= if k % 2 == 0 { b as i64 } else { -(b as i64) };
        }
        while from_table.len() > 1 && from_table.last() == Some(&0) {
            from_table.pop();
        }
        prop_assert_eq!(from_table, num);
    }

    #[test]
    fn rees_basis_is_pi_sound(raw in prop::collection::vec(prop::collection::vec(0u32..=1, NV), 1..5)) {
        let gens: Vec<Monomial> = raw.into_iter().map(Monomial::from_exps).filter(|m| !m.is_one()).collect();
        let minimal = MonomialIdeal::new(NV, gens);
        prop_assume!(!minimal.is_zero());
        let p = ReesPresentation::with_default_order(&ctx(), minimal.gens().to_vec(), &BuchbergerConfig::default()).unwrap();
        prop_assert!(p.pi_sound().unwrap());
        for g in p.gb().elements() {
            prop_assert!(p.pi(g).unwrap().is_zero());
        }
    }

    #[test]
    fn binomials_stay_unit(pairs in prop::collection::vec((mono(2), mono(2)), 1..5)) {
        let o = lex();
        let gens: Vec<Polynomial> = pairs
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| Polynomial::binomial(a, b, &o))
            .collect();
        let mut bad = 0;
        let cfg = BuchbergerConfig::default();
        buchberger_observed(&gens, &o, &cfg, &mut |g| {
            if !(g.is_unit_binomial() || g.len() == 1) {
                bad += 1;
            }
        })
        .unwrap();
        prop_assert_eq!(bad, 0);
    }
}

#[test]
fn reduced_basis_is_unique_under_permutation() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    let c = ctx();
    let ideals = [
        vec!["a^2 - b", "a*b - c"],
        vec!["a*b - c*d", "a^2 - d^2", "b*c - a"],
        vec!["a + b + c + d", "a*b + b*c + c*d + a*d", "a*b*c*d - 1"],
        vec!["a*c - b^2", "b*d - c^2", "a*d - b*c"],
        vec!["a^3 - b*c", "b^2 - a*d", "c*d - a^2", "d^2 - b"],
    ];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let cfg = BuchbergerConfig::default();
    let kinds = order_kinds();
    for gens in &ideals {
        let references: Vec<_> = kinds
            .iter()
            .map(|(_, o)| {
                let polys: Vec<Polynomial> = gens.iter().map(|s| parse_polynomial(s, &c, o).unwrap()).collect();
                reduced_groebner_basis(&polys, o, &cfg).unwrap()
            })
            .collect();
        // 100 permutations per ideal, cycling through the order kinds.
        for k in 0..100 {
            let (kind, o) = &kinds[k % kinds.len()];
            let mut polys: Vec<Polynomial> = gens.iter().map(|s| parse_polynomial(s, &c, o).unwrap()).collect();
            polys.shuffle(&mut rng);
            let gb = reduced_groebner_basis(&polys, o, &cfg).unwrap();
            assert_eq!(gb.elements(), references[k % kinds.len()].elements(), "{kind} {gens:?}");
        }
    }
}
