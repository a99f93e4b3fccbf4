mod common;

use common::{
    borel_leq_bfs, random_borel_ideal, random_monomial, random_segment_ideal, random_weight_order,
    rng, segment_ideal_oracle,
};
use ginlab::{borel_leq, is_segment, Monomial, MonomialIdeal, OrderSpec};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn corpus_orders(r: &mut ChaCha8Rng, nvars: usize) -> Vec<OrderSpec> {
    vec![
        OrderSpec::Lex,
        OrderSpec::RevLex,
        random_weight_order(r, nvars),
    ]
}

#[test]
fn order_prefixes_are_segments_and_punctured_prefixes_are_not() {
    let mut r = rng(8001);
    for _ in 0..20 {
        let nvars = r.random_range(2..=4);
        let d = r.random_range(1..=4);
        for order in corpus_orders(&mut r, nvars) {
            let sorted = order.sorted_monomials(nvars, d);
            let k = r.random_range(1..=sorted.len());
            let prefix: Vec<Monomial> = sorted[..k].to_vec();
            assert!(is_segment(&prefix, &order));

            // Removing an interior element leaves a gap the order can see.
            if k >= 2 && k < sorted.len() {
                let mut punctured = prefix.clone();
                punctured.remove(k / 2);
                punctured.push(sorted[k].clone());
                assert!(
                    !is_segment(&punctured, &order),
                    "a set with a hole passed the segment check under {order}"
                );
            }
        }
    }
}

#[test]
fn segment_detection_agrees_with_the_upward_closure_oracle() {
    // Mixed corpus: genuine segment ideals, Borel-fixed ideals, and
    // unconstrained monomial ideals, checked against a brute-force scan
    // that shares no code with the sorted-prefix implementation.
    let mut r = rng(8002);
    for trial in 0..60 {
        let nvars = r.random_range(2..=4);
        for order in corpus_orders(&mut r, nvars) {
            let ideal = match trial % 3 {
                0 => random_segment_ideal(&mut r, &order, nvars),
                1 => random_borel_ideal(&mut r, nvars, 4),
                _ => {
                    let gens: Vec<Monomial> = (0..r.random_range(1..=4))
                        .map(|_| {
                            let d = r.random_range(1..=4);
                            random_monomial(&mut r, nvars, d)
                        })
                        .collect();
                    MonomialIdeal::new(nvars, gens)
                }
            };
            assert_eq!(
                ideal.is_segment_ideal(&order),
                segment_ideal_oracle(&ideal, &order),
                "library and oracle disagree under {order} on {:?}", ideal
            );
        }
    }
}

#[test]
fn built_segment_ideals_always_pass_the_segment_check() {
    let mut r = rng(8003);
    for _ in 0..30 {
        let nvars = r.random_range(2..=4);
        for order in corpus_orders(&mut r, nvars) {
            let ideal = random_segment_ideal(&mut r, &order, nvars);
            assert!(
                ideal.is_segment_ideal(&order),
                "constructed segment ideal failed under {order}: {:?}", ideal
            );
        }
    }
}

#[test]
fn segment_ideals_are_borel_fixed() {
    // Every admissible order refines the exchange-move partial order, so an
    // ideal generated by top segments is closed under raising exchanges.
    let mut r = rng(8004);
    for _ in 0..30 {
        let nvars = r.random_range(2..=4);
        for order in corpus_orders(&mut r, nvars) {
            let ideal = random_segment_ideal(&mut r, &order, nvars);
            assert!(
                ideal.is_borel_fixed(),
                "segment ideal under {order} is not Borel-fixed: {:?}", ideal
            );
        }
    }
}

#[test]
fn borel_dominance_matches_breadth_first_reachability() {
    let mut r = rng(8005);
    for _ in 0..300 {
        let nvars = r.random_range(2..=4);
        let d = r.random_range(1..=5);
        let a = random_monomial(&mut r, nvars, d);
        let b = random_monomial(&mut r, nvars, d);
        assert!(borel_leq(&a, &a));
        assert_eq!(
            borel_leq(&a, &b),
            borel_leq_bfs(&a, &b),
            "prefix-sum test and exchange search disagree on {:?} vs {:?}",
            a.exponents(),
            b.exponents()
        );
    }
}

#[test]
fn top_segments_are_closed_under_raising_exchanges() {
    let mut r = rng(8006);
    for _ in 0..20 {
        let nvars = r.random_range(2..=4);
        let d = r.random_range(1..=4);
        for order in corpus_orders(&mut r, nvars) {
            let sorted = order.sorted_monomials(nvars, d);
            let k = r.random_range(1..=sorted.len());
            let prefix = &sorted[..k];
            for m in prefix {
                for j in 0..nvars {
                    if m.exponent(j) == 0 {
                        continue;
                    }
                    for i in 0..j {
                        let raised = m.exchange(i, j).expect("x_j divides m");
                        assert!(
                            prefix.contains(&raised),
                            "raising {:?} left the top segment under {order}",
                            m.exponents()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn minimal_generators_are_minimal_and_reproduce_membership() {
    // The minimal generating set must be antichain under divisibility, and
    // rebuilding the ideal from any redundant superset must return it.
    let mut r = rng(8007);
    for _ in 0..30 {
        let nvars = r.random_range(2..=4);
        let ideal = random_borel_ideal(&mut r, nvars, 4);
        let gens = ideal.min_gens();
        for (i, g) in gens.iter().enumerate() {
            for (j, h) in gens.iter().enumerate() {
                if i != j {
                    assert!(!g.divides(h), "{g:?} divides {h:?} in a minimal set");
                }
            }
        }
        let mut padded: Vec<Monomial> = gens.to_vec();
        let extra = gens[0].mul(&Monomial::var(nvars, r.random_range(0..nvars)));
        padded.push(extra);
        assert_eq!(MonomialIdeal::new(nvars, padded), ideal);
    }
}
