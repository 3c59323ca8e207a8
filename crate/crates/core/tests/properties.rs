mod support;

use proptest::prelude::*;
use tomtri::generators::staircase;
use tomtri::{face_types, strong_path, ElementSet, TropicalType};

fn tropical_type(n: usize, d: usize) -> impl Strategy<Value = TropicalType> {
    prop::collection::vec(1u64..(1u64 << d), n)
        .prop_map(move |masks| TropicalType::new(d, masks.into_iter().map(ElementSet::from_bits).collect()).unwrap())
}

fn type_pair() -> impl Strategy<Value = (TropicalType, TropicalType)> {
    (1usize..6, 1usize..7).prop_flat_map(|(n, d)| (tropical_type(n, d), tropical_type(n, d)))
}

/// Spanning trees of `K_{n,d}` built by attaching vertices one at a time.
fn spanning_tree() -> impl Strategy<Value = TropicalType> {
    (1usize..5, 1usize..6)
        .prop_flat_map(|(n, d)| {
            let steps = n + d - 1;
            (
                Just((n, d)),
                prop::collection::vec(any::<prop::sample::Index>(), steps * 2),
            )
        })
        .prop_map(|((n, d), picks)| {
            // Start from left vertex 0, then add the remaining vertices in a fixed order,
            // each joined to an already placed vertex of the other side.
            let mut coords = vec![ElementSet::EMPTY; n];
            let mut placed_left = vec![0usize];
            let mut placed_right: Vec<usize> = Vec::new();
            let mut order: Vec<(bool, usize)> = (1..=d).map(|j| (true, j)).collect();
            order.extend((1..n).map(|i| (false, i)));
            for (k, (is_right, v)) in order.into_iter().enumerate() {
                let pick = picks[k];
                if is_right {
                    let i = *pick.get(&placed_left);
                    coords[i] = coords[i].with(v);
                    placed_right.push(v);
                } else {
                    let j = *pick.get(&placed_right);
                    coords[v] = coords[v].with(j);
                    placed_left.push(v);
                }
            }
            TropicalType::new(d, coords).unwrap()
        })
}

proptest! {
    #[test]
    fn rank_and_delta_are_symmetric((a, b) in type_pair()) {
        prop_assert_eq!(a.rank(&b).unwrap(), b.rank(&a).unwrap());
        prop_assert_eq!(a.delta(&b).unwrap(), b.delta(&a).unwrap());
        prop_assert_eq!(a.delta(&b).unwrap() == 0, a == b);
    }

    #[test]
    fn comparability_agrees_with_closure_oracle((a, b) in type_pair()) {
        let g = tomtri::comparability_graph(&a, &b).unwrap();
        prop_assert_eq!(g.is_acyclic(), support::comparability_acyclic(&a, &b));
        prop_assert!(tomtri::comparability_graph(&a, &a).unwrap().is_acyclic());
    }

    #[test]
    fn refinement_matches_definition((a, pick) in (1usize..5, 1usize..6).prop_flat_map(|(n, d)| {
        (tropical_type(n, d), any::<prop::sample::Index>())
    })) {
        let partitions = tomtri::OrderedPartition::enumerate(a.d());
        let p = &partitions[pick.index(partitions.len())];
        let blocks: Vec<Vec<usize>> = p.blocks().iter().map(|b| b.iter().collect()).collect();
        prop_assert_eq!(a.refine(p).to_lists(), support::refine_brute(&a, &blocks));
    }

    #[test]
    fn dual_is_an_involution(t in spanning_tree()) {
        prop_assert!(t.is_spanning_tree());
        let dual = t.dual().unwrap();
        prop_assert!(dual.is_spanning_tree());
        prop_assert_eq!(dual.dual().unwrap(), t);
    }

    #[test]
    fn deletions_are_two_block_refinements(t in spanning_tree()) {
        let deletions = t.single_deletion_refinements().unwrap();
        for i in 0..t.n() {
            for k in t.coord(i).iter() {
                if t.coord(i).len() < 2 {
                    continue;
                }
                let deleted = t.with_coord(i, t.coord(i).without(k));
                prop_assert!(deletions.contains(&deleted));
                let p = t.deletion_partition(i, k).unwrap();
                prop_assert_eq!(t.refine(&p), deleted);
            }
        }
    }

    #[test]
    fn facets_match_hull_oracle(t in spanning_tree()) {
        prop_assume!(t.n() + t.d() <= 7);
        let rows = tomtri::facet_matrix(&t).unwrap();
        let from_rows: std::collections::BTreeSet<(Vec<i64>, i64)> =
            rows.rows.iter().map(|r| r.as_upper_bound(t.d())).collect();
        prop_assert_eq!(from_rows.len(), rows.rows.len());
        prop_assert_eq!(from_rows, support::hull_facets(&t));
    }

    #[test]
    fn unit_simplex_matches_hall_oracle(t in spanning_tree()) {
        prop_assert_eq!(tomtri::subdivision::unit_simplex_locations(&t), support::hall_unit_simplices(&t));
        prop_assert_eq!(support::hall_unit_simplices(&t), vec![support::rdv(&t)]);
    }

    #[test]
    fn strong_paths_have_length_delta(x in 0usize..111, y in 0usize..111) {
        thread_local! {
            static SYSTEM: tomtri::TypeSystem = face_types(&staircase(3, 4).unwrap()).unwrap();
        }
        SYSTEM.with(|s| {
            let (a, b) = (&s.types()[x], &s.types()[y]);
            let path = strong_path(s, a, b).unwrap();
            assert_eq!(path.len(), a.delta(b).unwrap());
            assert_eq!(path.members().len(), path.len() + 1);
            assert!(path.is_strong());
            assert!(path.members().iter().all(|t| s.contains(t)));
        });
    }
}
