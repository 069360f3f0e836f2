use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverrep::knit::{self, ZqVertex};
use quiverrep::quiver::{self, Quiver};
use quiverrep::sample;

fn pool() -> Vec<Quiver> {
    vec![
        quiver::type_a(1),
        quiver::type_a(5),
        quiver::type_d(4),
        quiver::type_d(6),
        quiver::type_e(6),
        quiver::type_e(7),
        quiver::type_e(8),
    ]
}

// positive roots of the underlying graph by closing the simple roots under reflections
fn graph_roots(q: &Quiver) -> BTreeSet<Vec<i64>> {
    let n = q.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for a in q.arrows() {
        adj[a.source].push(a.target);
        adj[a.target].push(a.source);
    }
    let mut seen: BTreeSet<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let mut todo: Vec<Vec<i64>> = seen.iter().cloned().collect();
    while let Some(d) = todo.pop() {
        for i in 0..n {
            let c = 2 * d[i] - adj[i].iter().map(|&j| d[j]).sum::<i64>();
            let mut e = d.clone();
            e[i] -= c;
            if e.iter().all(|&x| x >= 0) && e.iter().any(|&x| x > 0) && seen.insert(e.clone()) {
                todo.push(e);
            }
        }
    }
    seen
}

#[test]
fn hammock_values_are_knitted_dims() {
    let mut g = ChaCha8Rng::seed_from_u64(7);
    for base in pool() {
        for _ in 0..3 {
            let q = sample::random_orientation(&base, &mut g);
            let ar = knit::knit_ar_quiver(&q).unwrap();
            let roots = graph_roots(&q);
            assert_eq!(ar.len(), roots.len());
            assert!(ar.dims.iter().all(|d| roots.contains(d)));
            assert!(ar.mesh_relations_hold());
            for x in 0..q.vertex_count() {
                let h = knit::hammock_function(&q, x).unwrap();
                for (i, v) in ar.vertices.iter().enumerate() {
                    assert_eq!(h.value(*v) as i64, ar.dims[i][x]);
                }
                assert!(h.values.keys().all(|v| ar.position(*v).is_some()));
                let total: u64 = h.values.values().sum();
                assert_eq!(total as i64, roots.iter().map(|d| d[x]).sum::<i64>());
            }
        }
    }
}

#[test]
fn hammock_runs_from_projective_to_injective() {
    for q in pool() {
        let ar = knit::knit_ar_quiver(&q).unwrap();
        for x in 0..q.vertex_count() {
            let (_, hm) = knit::knit_hammock(&q, x).unwrap();
            let src = hm.order.minimal();
            let snk = hm.order.maximal();
            assert_eq!(src.len(), 1);
            assert_eq!(snk.len(), 1);
            assert_eq!(hm.vertices[src[0]], ZqVertex::new(x, 0));
            assert_eq!(hm.vertices[snk[0]], ar.vertices[ar.injective(x)]);
        }
    }
}

#[test]
fn poset_hammocks_do_not_depend_on_orientation() {
    let mut g = ChaCha8Rng::seed_from_u64(11);
    for base in pool() {
        for x in 0..base.vertex_count() {
            let h = knit::hammock_function(&base, x).unwrap();
            if !h.is_poset() {
                continue;
            }
            let p = h.hammock().order;
            for _ in 0..3 {
                let o = sample::random_orientation(&base, &mut g);
                let ho = knit::hammock_function(&o, x).unwrap();
                assert!(ho.is_poset());
                assert!(p.is_isomorphic(&ho.hammock().order), "{} at {x}", base.vertex_count());
            }
        }
    }
}

// x: the middle of A5, a short leaf of D6, the end of the long arm of E7
#[test]
fn connected_special_hammocks_nest() {
    let cases = [(quiver::type_a(5), 2, 9), (quiver::type_d(6), 0, 15), (quiver::type_e(7), 5, 27)];
    let mut prev: Option<knit::Poset> = None;
    for (q, x, size) in cases {
        let p = knit::hammock_set_of(&q, &[x]).unwrap().unwrap();
        assert_eq!(p.len(), size);
        assert_eq!(p.antichains(2).len(), size);
        assert_eq!(p.antichains(3).len(), 1);
        assert_eq!(p.width(), 3);
        if let Some(small) = &prev {
            assert!(small.embeds_into(&p));
        }
        prev = Some(p);
    }
}

#[test]
fn special_vertex_sets_are_exactly_the_listed_cases() {
    for q in pool().into_iter().chain([quiver::type_d(5), quiver::type_d(7), quiver::type_a(7)]) {
        for x in 0..q.vertex_count() {
            let special = knit::is_special_vertex_set(&q, &[x]).unwrap();
            let case = knit::classify_special(&q, &[x]).unwrap();
            assert_eq!(special, case != knit::SpecialCase::NotSpecial);
        }
    }
    // dropping the vertex m from D(m+2) leaves D(m) on 0..m and an isolated A1 at m
    for m in 3..=7 {
        let keep: Vec<usize> = (0..m + 2).filter(|&v| v != m).collect();
        let (u, _) = quiver::type_d(m + 2).full_subquiver(&keep);
        let hits: Vec<usize> = (0..m).filter(|&x| knit::is_special_vertex_set(&u, &[x, m]).unwrap()).collect();
        assert!(!hits.is_empty(), "A1+D{m}");
        for x in hits {
            assert_eq!(knit::classify_special(&u, &[x, m]).unwrap(), knit::SpecialCase::A1PlusD(m));
        }
    }
}
