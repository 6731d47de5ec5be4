//! Library results against brute-force oracles on random small instances.

mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sfpack::hypergraph::{incidence_matrix, prime_matrix};
use sfpack::lp::{solve_ip, solve_lp, vertex_enumerate, IpOptions, Program, Rational};
use sfpack::packing::{is_konig, is_packed, konig_edges, packing_number, transversal_number};
use sfpack::polyhedra::{np_contains, NewtonPolyhedron};
use sfpack::sets::minimal_family;
use sfpack::{edge_ideal, Hypergraph, Monomial, MonomialIdeal, VertexSet, ZeroOneMatrix};

#[test]
fn prime_decomposition_matches_cover_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=7);
        let edges = random_edges(&mut rng, n, 8);
        let i = ideal_from(n, &edges);
        let dec = i.prime_decompose().unwrap();
        assert_eq!(
            dec.primes(),
            covers_oracle(n, &minimal_oracle(&edges)).as_slice(),
            "{edges:?}"
        );
        assert_eq!(i.supports(), minimal_oracle(&edges));
    }
}

#[test]
fn transversal_and_matching_numbers() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=8);
        let edges = minimal_family(random_edges(&mut rng, n, 10));
        let (tau, pi) = (tau_oracle(n, &edges), pi_oracle(&edges));
        assert_eq!(transversal_number(&edges), tau, "{edges:?}");
        assert_eq!(packing_number(&edges), pi, "{edges:?}");
        assert_eq!(konig_edges(&edges), tau == pi);
        let i = ideal_from(n, &edges);
        assert_eq!(i.height().unwrap(), tau);
        assert_eq!(is_konig(&i).unwrap().konig, tau == pi);

        let h = Hypergraph::new(ctx(n), edges.clone()).unwrap();
        let opts = IpOptions::default();
        assert_eq!(
            solve_ip(&Program::transversal(&h).integral(), &opts).unwrap().value,
            int(tau as i64)
        );
        assert_eq!(
            solve_ip(&Program::packing(&h).integral(), &opts).unwrap().value,
            int(pi as i64)
        );
    }
}

#[test]
fn vertex_enumeration_matches_subset_solving() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..150 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let rows = random_edges(&mut rng, n, 7);
        let m = ZeroOneMatrix::from_set_rows(&rows, n);
        assert_eq!(vertex_enumerate(&m).unwrap(), vertices_oracle(&rows, n), "{rows:?}");
    }
}

#[test]
fn fractional_cover_is_the_best_vertex() {
    // τ_f is a minimum of Σx over Q(H), attained at a vertex
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let edges = minimal_family(random_edges(&mut rng, n, 7));
        let h = Hypergraph::new(ctx(n), edges.clone()).unwrap();
        let best = vertices_oracle(&edges, n)
            .into_iter()
            .map(|v| v.into_iter().sum::<Rational>())
            .min()
            .unwrap();
        assert_eq!(solve_lp(&Program::transversal(&h)).unwrap().value, best);
        assert_eq!(solve_lp(&Program::packing(&h)).unwrap().value, best);
    }
}

#[test]
fn matrices_follow_their_definitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let edges = minimal_family(random_edges(&mut rng, n, 6));
        let h = Hypergraph::new(ctx(n), edges.clone()).unwrap();
        let b = incidence_matrix(&h);
        for (j, e) in edges.iter().enumerate() {
            for i in 0..n {
                assert_eq!(b.get(i, j) == 1, e.contains(i));
            }
        }
        let a = prime_matrix(&edge_ideal(&h)).unwrap();
        let covers = covers_oracle(n, &edges);
        assert_eq!(a.rows(), covers.len());
        for (r, c) in covers.iter().enumerate() {
            assert_eq!(a.row_set(r), *c);
        }
    }
}

#[test]
fn newton_membership_in_the_plane() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let k = rand::Rng::gen_range(&mut rng, 1..=4);
        let gens: Vec<[u32; 2]> = (0..k)
            .map(|_| {
                [
                    rand::Rng::gen_range(&mut rng, 0..5),
                    rand::Rng::gen_range(&mut rng, 0..5),
                ]
            })
            .collect();
        let i = MonomialIdeal::new(ctx(2), gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap();
        let np = NewtonPolyhedron::new(&i);
        for _ in 0..20 {
            let a = [
                Rational::new(rand::Rng::gen_range(&mut rng, 0..12).into(), 2.into()),
                Rational::new(rand::Rng::gen_range(&mut rng, 0..12).into(), 2.into()),
            ];
            let expected = np_contains_2d(&gens, &a);
            assert_eq!(np_contains(&i, &a).unwrap(), expected, "{gens:?} {a:?}");
            assert_eq!(np.contains_by_lp(&a).unwrap(), expected);
        }
    }
}

/// Packing by definition: substitute every pattern and compare τ with π.
fn packed_oracle(n: usize, edges: &[VertexSet]) -> bool {
    let i = ideal_from(n, edges);
    let mut pattern = vec![0u8; n];
    loop {
        let zero: VertexSet = (0..n).filter(|&v| pattern[v] == 1).collect();
        let one: VertexSet = (0..n).filter(|&v| pattern[v] == 2).collect();
        let minor = i.substitute(zero, one).unwrap();
        let e = minor.supports();
        if !e.is_empty() && tau_oracle(n, &e) != pi_oracle(&e) {
            return false;
        }
        let mut k = 0;
        loop {
            if k == n {
                return true;
            }
            pattern[k] += 1;
            if pattern[k] < 3 {
                break;
            }
            pattern[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn packing_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut packed = 0;
    for _ in 0..150 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let edges = minimal_family(random_edges(&mut rng, n, 6));
        let expected = packed_oracle(n, &edges);
        packed += expected as usize;
        let v = is_packed(&ideal_from(n, &edges)).unwrap();
        assert_eq!(v.packed, expected, "{edges:?}");
        if let Some((z, o)) = v.failing_minor {
            let m = ideal_from(n, &edges).substitute(z, o).unwrap();
            assert!(!is_konig(&m).unwrap().konig);
        }
    }
    assert!(packed > 0 && packed < 150);
}
