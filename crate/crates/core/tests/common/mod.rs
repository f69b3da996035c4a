//! Seeded corpora and brute-force oracles shared by the integration tests.
//!
//! The oracles only use ideal membership and monomial multiplication, never
//! the colon formula or the engine's search, so they stay independent of the
//! code paths they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vnum_core::engine::GridBound;
use vnum_core::monomial::ExponentBox;
use vnum_core::{Graph, Monomial, MonomialIdeal};

pub fn ideal(rows: &[&[u64]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn mono(e: &[u64]) -> Monomial {
    Monomial::new(e.to_vec()).unwrap()
}

pub fn sample_ideal() -> MonomialIdeal {
    ideal(&[
        &[10, 0, 0],
        &[0, 11, 0],
        &[0, 0, 12],
        &[1, 4, 1],
        &[1, 2, 3],
        &[3, 1, 5],
    ])
}

/// Random m-primary ideal: a pure power of every variable plus random
/// monomials, at most `max_gens` generators, exponents at most `max_exp`.
pub fn random_m_primary(
    rng: &mut StdRng,
    t: usize,
    max_exp: u64,
    max_gens: usize,
) -> MonomialIdeal {
    let powers: Vec<u64> = (0..t).map(|_| rng.gen_range(1..=max_exp)).collect();
    let mut gens: Vec<Monomial> = powers
        .iter()
        .enumerate()
        .map(|(i, &a)| Monomial::pure_power(t, i + 1, a).unwrap())
        .collect();
    let extra = rng.gen_range(0..=max_gens - t);
    for _ in 0..extra {
        // below the pure powers, so most draws survive minimalization
        let e: Vec<u64> = powers.iter().map(|&a| rng.gen_range(0..a)).collect();
        if e.iter().filter(|&&x| x > 0).count() >= 2 {
            gens.push(Monomial::new(e).unwrap());
        }
    }
    MonomialIdeal::minimalize(gens).unwrap()
}

/// `count` m-primary ideals with `t <= 3`, exponents `<= 6`, `<= 8` generators.
pub fn m_primary_corpus(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let t = rng.gen_range(1..=3);
            random_m_primary(&mut rng, t, 6, 8)
        })
        .collect()
}

pub fn two_variable_corpus(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_m_primary(&mut rng, 2, 6, 8))
        .collect()
}

/// Arbitrary (usually not m-primary) monomial ideals.
pub fn general_corpus(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let t = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=5);
        let gens: Vec<Monomial> = (0..k)
            .map(|_| Monomial::new((0..t).map(|_| rng.gen_range(0..=3)).collect()).unwrap())
            .filter(|m| !m.is_one())
            .collect();
        if let Ok(i) = MonomialIdeal::minimalize(gens) {
            out.push(i);
        }
    }
    out
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    if edges.is_empty() {
        edges.push((1, 2));
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Named small graphs plus seeded random graphs, all with `n <= 12`.
pub fn graph_corpus(seed: u64, random: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=9 {
        out.push(Graph::path(n).unwrap());
    }
    for n in 3..=9 {
        out.push(Graph::cycle(n).unwrap());
    }
    out.push(Graph::join(&Graph::path(3).unwrap(), &Graph::cycle(4).unwrap()).unwrap());
    out.push(
        Graph::clique_sum_1(&Graph::cycle(5).unwrap(), &Graph::path(4).unwrap(), 1, 1).unwrap(),
    );
    out.push(
        Graph::clique_sum_1(&Graph::cycle(4).unwrap(), &Graph::cycle(5).unwrap(), 2, 3).unwrap(),
    );
    out.push(Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap());
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..random {
        let n = rng.gen_range(3..=12);
        let p = rng.gen_range(0.15..0.6);
        out.push(random_graph(&mut rng, n, p));
    }
    out
}

/// The prime `(I : f)` computed from membership alone, or `None`.
///
/// `P = { i : f x_i in I }`; the colon is `P` iff `f` is not in `I` and, for
/// every `m` in the grid box, `f m in I` exactly when `m` meets `P`. The box
/// suffices because every generator of either ideal lies inside it.
pub fn brute_colon_prime(ideal: &MonomialIdeal, f: &Monomial) -> Option<BTreeSet<usize>> {
    let t = ideal.ambient();
    if ideal.contains(f).unwrap() {
        return None;
    }
    let support: BTreeSet<usize> = (1..=t)
        .filter(|&i| {
            ideal
                .contains(&f.mul(&Monomial::var(t, i).unwrap()).unwrap())
                .unwrap()
        })
        .collect();
    if support.is_empty() {
        return None;
    }
    let caps = GridBound::of(ideal).caps().to_vec();
    for exps in ExponentBox::new(caps) {
        let m = Monomial::new(exps).unwrap();
        let in_colon = ideal.contains(&f.mul(&m).unwrap()).unwrap();
        let meets = m.support().iter().any(|i| support.contains(i));
        if in_colon != meets {
            return None;
        }
    }
    Some(support)
}

/// `v(I)` by scanning the grid box in degree order with [`brute_colon_prime`].
pub fn brute_v(ideal: &MonomialIdeal) -> u64 {
    let caps = GridBound::of(ideal).caps().to_vec();
    let mut points: Vec<Monomial> = ExponentBox::new(caps)
        .map(|e| Monomial::new(e).unwrap())
        .collect();
    points.sort_by_key(|m| m.degree());
    points
        .iter()
        .find(|m| brute_colon_prime(ideal, m).is_some())
        .map(|m| m.degree())
        .expect("every proper monomial ideal has an associated prime")
}

/// Every stable set's neighborhood tested directly, smallest size first.
pub fn brute_v_graph(graph: &Graph) -> usize {
    let n = graph.vertex_count();
    let mut best = usize::MAX;
    for mask in 1u32..1 << n {
        let set: BTreeSet<usize> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| i + 1)
            .collect();
        if set.len() >= best || !graph.is_stable(&set).unwrap() {
            continue;
        }
        let nb = graph.neighborhood(&set).unwrap();
        if graph.is_minimal_vertex_cover(&nb).unwrap() {
            best = set.len();
        }
    }
    best
}
