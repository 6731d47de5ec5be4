//! Structural invariants over random square-free ideals.

mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;

use sfpack::hypergraph::{incidence_matrix, prime_matrix};
use sfpack::lp::{solve_ip, solve_lp, IpOptions, Program, Rational};
use sfpack::packing::{
    is_packed, packed_consequences, partite_lower_bound_check, rainbow_coloring, symbolic_equals_ordinary, Limits,
};
use sfpack::polyhedra::{np_contains, sp_contains, sp_is_integral, waldschmidt};
use sfpack::{alexander_dual, blocker, edge_ideal, hypergraph_of, Hypergraph, Monomial, VertexSet};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn decomposition_round_trip((n, edges) in edges_strategy(7, 7)) {
        let i = ideal_from(n, &edges);
        let back = i.prime_decompose().unwrap().intersection().unwrap();
        prop_assert!(back.equals(&i).unwrap());
    }

    #[test]
    fn dual_is_an_involution((n, edges) in edges_strategy(7, 7)) {
        let i = ideal_from(n, &edges);
        let dd = alexander_dual(&alexander_dual(&i).unwrap()).unwrap();
        prop_assert_eq!(dd, i);
    }

    #[test]
    fn matrices_swap_under_duality((n, edges) in edges_strategy(6, 6)) {
        let i = ideal_from(n, &edges);
        let h = hypergraph_of(&i).unwrap();
        let d = alexander_dual(&i).unwrap();
        let hd = hypergraph_of(&d).unwrap();
        // A^∨ = Bᵀ and B^∨ = Aᵀ
        prop_assert_eq!(prime_matrix(&d).unwrap(), incidence_matrix(&h).transpose());
        prop_assert_eq!(incidence_matrix(&hd), prime_matrix(&i).unwrap().transpose());
        prop_assert_eq!(blocker(&h), hd);
    }

    #[test]
    fn minors_commute_with_duality((n, edges) in edges_strategy(6, 6), pattern in proptest::collection::vec(0u8..3, 6)) {
        let i = ideal_from(n, &edges);
        let zero: VertexSet = (0..n).filter(|&v| pattern[v] == 1).collect();
        let one: VertexSet = (0..n).filter(|&v| pattern[v] == 2).collect();
        let d = alexander_dual(&i).unwrap();
        // deleting (0) on one side is contracting (1) on the other
        let lhs = alexander_dual(&i.substitute(zero, one).unwrap()).unwrap();
        let rhs = d.substitute(one, zero).unwrap();
        prop_assert_eq!(lhs, rhs);
        let h = Hypergraph::new(ctx(n), edges.clone()).unwrap();
        let via_minor = h.minor(zero, one).unwrap();
        prop_assert_eq!(edge_ideal(&via_minor), i.substitute(zero, one).unwrap());
    }

    #[test]
    fn power_containments((n, edges) in edges_strategy(5, 4), m in 1u32..3, k in 1u32..3) {
        let i = ideal_from(n, &edges);
        let im = i.power(m).unwrap();
        let ik = i.power(k).unwrap();
        let sym = i.symbolic_power(m + k).unwrap();
        prop_assert!(im.multiply(&ik).unwrap().is_subideal_of(&sym).unwrap());
        prop_assert!(im.is_subideal_of(&i.symbolic_power(m).unwrap()).unwrap());
        prop_assert!(i.symbolic_power(m + 1).unwrap().is_subideal_of(&i.symbolic_power(m).unwrap()).unwrap());
    }

    #[test]
    fn duality_chain((n, edges) in edges_strategy(8, 10)) {
        let h = Hypergraph::new(ctx(n), edges).unwrap();
        let opts = IpOptions::default();
        let tau = solve_ip(&Program::transversal(&h).integral(), &opts).unwrap().value;
        let pi = solve_ip(&Program::packing(&h).integral(), &opts).unwrap().value;
        let tau_f = solve_lp(&Program::transversal(&h)).unwrap().value;
        let pi_f = solve_lp(&Program::packing(&h)).unwrap().value;
        prop_assert!(pi <= pi_f);
        prop_assert_eq!(&pi_f, &tau_f);
        prop_assert!(tau_f <= tau);
    }

    #[test]
    fn newton_inside_symbolic((n, edges) in edges_strategy(5, 5), pts in proptest::collection::vec(proptest::collection::vec(0i64..7, 5), 12)) {
        let i = ideal_from(n, &edges);
        for g in i.generators() {
            let a: Vec<Rational> = g.exponents().iter().map(|&e| int(e as i64)).collect();
            prop_assert!(np_contains(&i, &a).unwrap());
            prop_assert!(sp_contains(&i, &a).unwrap());
        }
        for p in pts {
            let a: Vec<Rational> = p[..n].iter().map(|&x| Rational::new(BigInt::from(x), BigInt::from(3))).collect();
            if np_contains(&i, &a).unwrap() {
                prop_assert!(sp_contains(&i, &a).unwrap());
            }
        }
    }

    #[test]
    fn waldschmidt_bounds((n, edges) in edges_strategy(6, 6)) {
        let i = ideal_from(n, &edges);
        let w = waldschmidt(&i).unwrap();
        prop_assert!(w >= int(1));
        prop_assert!(w <= int(i.initial_degree().unwrap() as i64));
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn colorings_give_lower_bounds((n, edges) in edges_strategy(6, 6), a in 1u32..5, b in 1u32..3) {
        prop_assume!(a >= b);
        let i = ideal_from(n, &edges);
        let h = hypergraph_of(&i).unwrap();
        if let Some(c) = rainbow_coloring(&h, a, b).unwrap() {
            prop_assert!(c.is_valid_for(&h));
            let r = partite_lower_bound_check(&i, &c).unwrap();
            prop_assert!(r.holds, "{:?}", r);
        }
    }

    #[test]
    fn packed_ideals_satisfy_the_consequences((n, edges) in edges_strategy(6, 5)) {
        let i = ideal_from(n, &edges);
        let limits = Limits::default();
        let v = is_packed(&i).unwrap();
        prop_assert!(!v.packed || v.konig);
        if v.packed {
            let objectives: Vec<Vec<Rational>> = (0..n).map(|k| (0..n).map(|j| int(((j * 7 + k * 3) % 4) as i64)).collect()).collect();
            let r = packed_consequences(&i, &objectives, &limits).unwrap();
            prop_assert!(r.holds(), "{:?}", r);
            for p in symbolic_equals_ordinary(&i, 2).unwrap() {
                prop_assert!(p.equal);
            }
        }
        let r = sfpack::polyhedra::integrality_report(&i, 12).unwrap();
        prop_assert!(r.all_agree(), "{:?}", r);
    }

    #[test]
    fn symbolic_powers_are_scaled_newton_points((n, edges) in edges_strategy(4, 4)) {
        // with SP(I) integral, x^a ∈ I^(m) iff a/m ∈ NP(I)
        let i = ideal_from(n, &edges);
        prop_assume!(sp_is_integral(&i).unwrap());
        for m in 1u32..=3 {
            let sym = i.symbolic_power(m).unwrap();
            let mut x = vec![0u32; n];
            loop {
                let a: Vec<Rational> = x.iter().map(|&e| Rational::new(BigInt::from(e), BigInt::from(m))).collect();
                let member = sym.contains(&Monomial::new(x.clone())).unwrap();
                prop_assert_eq!(member, np_contains(&i, &a).unwrap(), "m = {}, x = {:?}", m, x);
                let mut k = 0;
                while k < n && x[k] == m {
                    x[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                x[k] += 1;
            }
        }
    }
}
