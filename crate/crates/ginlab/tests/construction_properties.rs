mod common;

use common::{random_weight_order, rng};
use ginlab::{
    buchberger, count_monomials_of_degree, first_disagreement, gin, membership,
    regularity_gap_ideal, rlex_gap_witness, GinConfig, Monomial, OrderSpec, Ring,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_pair(r: &mut ChaCha8Rng, nvars: usize) -> (OrderSpec, OrderSpec) {
    let pool = [
        OrderSpec::Lex,
        OrderSpec::RevLex,
        random_weight_order(r, nvars),
        random_weight_order(r, nvars),
    ];
    let a = pool[r.random_range(0..pool.len())].clone();
    let b = pool[r.random_range(0..pool.len())].clone();
    (a, b)
}

#[test]
fn disagreements_are_symmetric_and_genuinely_first() {
    let mut r = rng(11_001);
    for _ in 0..40 {
        let nvars = r.random_range(3..=4);
        let (first, second) = random_pair(&mut r, nvars);
        let forward = first_disagreement(&first, &second, nvars, 6);
        let backward = first_disagreement(&second, &first, nvars, 6);
        match (forward, backward) {
            (None, None) => {
                for d in 1..=6 {
                    assert_eq!(
                        first.sorted_monomials(nvars, d),
                        second.sorted_monomials(nvars, d),
                        "no disagreement reported, yet degree {d} sorts differ"
                    );
                }
            }
            (Some(f), Some(b)) => {
                assert_eq!(f.degree, b.degree);
                assert_eq!(f.position, b.position);
                assert_eq!(f.first, b.second);
                assert_eq!(f.second, b.first);
                // Everything before the reported slot agrees, the slot itself
                // does not.
                let lhs = first.sorted_monomials(nvars, f.degree);
                let rhs = second.sorted_monomials(nvars, f.degree);
                assert_eq!(lhs[..f.position - 1], rhs[..f.position - 1]);
                assert_eq!(lhs[f.position - 1], f.first);
                assert_eq!(rhs[f.position - 1], f.second);
                for d in 1..f.degree {
                    assert_eq!(
                        first.sorted_monomials(nvars, d),
                        second.sorted_monomials(nvars, d),
                        "a disagreement below the reported degree was missed"
                    );
                }
            }
            (f, b) => panic!("asymmetric disagreement: {f:?} vs {b:?}"),
        }
    }
}

#[test]
fn distinguishing_ideals_separate_the_generic_initial_ideals() {
    let mut r = rng(11_002);
    let mut separated = 0;
    while separated < 6 {
        let nvars = r.random_range(3..=4);
        let ring = Ring::with_numbered_vars(nvars).unwrap();
        let (first, second) = random_pair(&mut r, nvars);
        let Some(found) = first_disagreement(&first, &second, nvars, 6) else {
            continue;
        };
        let ideal = ginlab::distinguishing_ideal(&first, &second, &ring, 6).unwrap();
        let config = GinConfig::with_seed(31);
        let gin_first = gin(&ideal, &first, &config).unwrap().ideal;
        let gin_second = gin(&ideal, &second, &config).unwrap().ideal;
        assert_ne!(
            gin_first, gin_second,
            "orders {first} and {second} disagree at {found:?} but the gins coincide"
        );

        // In the disagreement degree each gin is the top segment of its own
        // order, as long as the respective first monomials differ.
        let d = found.degree;
        let k = found.position;
        for (order, result) in [(&first, &gin_first), (&second, &gin_second)] {
            let segment: Vec<Monomial> = order
                .sorted_monomials(nvars, d)
                .into_iter()
                .take(k)
                .collect();
            let stratum: Vec<Monomial> = order
                .sorted_monomials(nvars, d)
                .into_iter()
                .filter(|m| result.contains(m))
                .collect();
            assert_eq!(
                stratum, segment,
                "gin under {order} is not the top-{k} segment in degree {d}"
            );
        }
        separated += 1;
    }
}

#[test]
fn gap_witnesses_are_verified_and_minimal() {
    let mut r = rng(11_003);
    let mut orders: Vec<OrderSpec> = vec![OrderSpec::Lex];
    for _ in 0..6 {
        let nvars = r.random_range(3..=5);
        orders.push(random_weight_order(&mut r, nvars));
    }
    for order in orders {
        let nvars = 5;
        if order.validate(nvars).is_err() {
            continue;
        }
        let Some(witness) = rlex_gap_witness(&order, nvars, 8) else {
            continue;
        };
        let product = Monomial::from_pairs(nvars, &[(0, witness.d), (witness.k - 1, 1)]);
        let power = Monomial::from_pairs(nvars, &[(witness.k - 2, witness.d + 1)]);
        assert_eq!(
            order.cmp(&product, &power),
            std::cmp::Ordering::Greater,
            "reported witness does not witness under {order}"
        );
        // Nothing smaller in the (degree, variable) scan may already violate
        // the reverse-lex comparison pattern.
        for d in 1..=witness.d {
            for k in 3..=nvars {
                if d == witness.d && k >= witness.k {
                    break;
                }
                let product = Monomial::from_pairs(nvars, &[(0, d), (k - 1, 1)]);
                let power = Monomial::from_pairs(nvars, &[(k - 2, d + 1)]);
                assert_ne!(
                    order.cmp(&product, &power),
                    std::cmp::Ordering::Greater,
                    "earlier violation at k={k}, d={d} under {order}"
                );
            }
        }
    }
}

#[test]
fn constant_weights_with_reverse_lex_tie_behave_like_reverse_lex() {
    for nvars in 2..=5 {
        let weights = vec![7u64; nvars];
        let order = OrderSpec::weight(weights, OrderSpec::RevLex).unwrap();
        assert!(rlex_gap_witness(&order, nvars, 8).is_none());
        for d in 1..=4 {
            assert_eq!(
                order.sorted_monomials(nvars, d),
                OrderSpec::RevLex.sorted_monomials(nvars, d)
            );
        }
    }
}

#[test]
fn gap_ideals_have_the_advertised_shape_and_members() {
    let mut checked = 0;
    for nvars in 3..=5 {
        let ring = Ring::with_numbered_vars(nvars).unwrap();
        for k in 3..=nvars {
            for d in 1..=2u32 {
                let ideal = regularity_gap_ideal(k, d, &ring).unwrap();
                checked += 1;
                // One generator per degree-(d+1) monomial in the first k-1
                // variables: the pure power is folded into the binomial.
                assert_eq!(
                    ideal.generators().len(),
                    count_monomials_of_degree(k - 1, d + 1)
                );
                for g in ideal.generators() {
                    assert_eq!(g.homogeneous_degree(), Some(d + 1));
                }
                let binomials = ideal
                    .generators()
                    .iter()
                    .filter(|g| g.num_terms() == 2)
                    .count();
                assert_eq!(binomials, 1, "exactly one generator mixes two monomials");

                // The next power of the pivot variable falls into the ideal.
                let gb = buchberger(&ideal, &OrderSpec::RevLex);
                let next_power = ginlab::Polynomial::from_monomial(Monomial::from_pairs(
                    nvars,
                    &[(k - 2, d + 2)],
                ));
                assert!(
                    membership(&next_power, &gb),
                    "pivot power missing from the k={k}, d={d} ideal"
                );
            }
        }
    }
    assert_eq!(checked, 12);
}
