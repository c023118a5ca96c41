mod common;

use proptest::prelude::*;
use zfw::bounds::is_decycling_set;
use zfw::canon::{are_isomorphic, canonical_form};
use zfw::forcing::{
    canonical_forces, closure, enumerate_minimal_forts, is_fort, is_zero_forcing_set, zero_forcing_number,
};
use zfw::graph6::{parse_graph6, write_graph6};
use zfw::independence::{is_independent, maximum_independent_set};
use zfw::{Graph, VertexSet};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), any::<u64>().prop_map(move |b| VertexSet::from_bits(b) & VertexSet::full(n)))
    })
}

fn permute(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut x = seed | 1;
    for i in (1..perm.len()).rev() {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        perm.swap(i, (x % (i as u64 + 1)) as usize);
    }
    g.permuted(&perm)
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let text = write_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn closure_is_extensive_idempotent_and_monotone((g, b) in arb_graph_and_set(14), extra in any::<u64>()) {
        let c = closure(&g, b).blue;
        prop_assert!(b.is_subset(c));
        prop_assert_eq!(closure(&g, c).blue, c);
        let bigger = b | (VertexSet::from_bits(extra) & g.vertices());
        prop_assert!(c.is_subset(closure(&g, bigger).blue));
    }

    #[test]
    fn closure_is_order_independent((g, b) in arb_graph_and_set(14)) {
        // The lowest-forcer order and the reference one-at-a-time simulation agree.
        let record = canonical_forces(&g, b);
        prop_assert_eq!(record.final_blue(), closure(&g, b).blue);
        prop_assert_eq!(common::simulate(&g, b), closure(&g, b).blue);
        prop_assert!(record.replay_valid(&g));
    }

    #[test]
    fn white_remainder_of_a_stall_is_a_fort((g, b) in arb_graph_and_set(12)) {
        let c = closure(&g, b).blue;
        let white = g.vertices() - c;
        if !white.is_empty() {
            prop_assert!(is_fort(&g, white).unwrap());
        }
    }

    #[test]
    fn minimum_sets_meet_every_fort(g in arb_graph(9)) {
        let zf = zero_forcing_number(&g);
        prop_assert!(is_zero_forcing_set(&g, zf.witness));
        for f in enumerate_minimal_forts(&g, 50) {
            prop_assert!(f.members.intersects(zf.witness));
        }
    }

    #[test]
    fn invariants_survive_relabeling(g in arb_graph(10), seed in any::<u64>()) {
        let h = permute(&g, seed);
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(zero_forcing_number(&g).z, zero_forcing_number(&h).z);
        let mis = maximum_independent_set(&h);
        prop_assert_eq!(maximum_independent_set(&g).alpha, mis.alpha);
        prop_assert!(is_independent(&h, mis.witness));
    }

    #[test]
    fn decycling_witness_is_valid(g in arb_graph(10)) {
        let (k, s) = zfw::bounds::decycling_number(&g);
        prop_assert_eq!(s.len(), k);
        prop_assert!(is_decycling_set(&g, s));
    }
}
