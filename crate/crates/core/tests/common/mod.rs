#![allow(dead_code)]

use std::path::PathBuf;

use gbpkit::io::dsl::{parse_document, Document};
use gbpkit::lincomb::int;
use gbpkit::{BoundPathAlgebra, LinComb, Path, Quiver};
use rand::Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture(name: &str) -> Document {
    let src = std::fs::read_to_string(fixture_path(name)).unwrap();
    parse_document(&src).unwrap()
}

pub const FIXTURES: [&str; 4] = ["chain_expansion.gbp", "fan.gbp", "small.gbp", "square.gbp"];

/// Vertices `1..=n`, arrows `a0, a1, ...` always pointing from a smaller
/// to a larger vertex.
pub fn acyclic_quiver(n: usize, edges: &[(usize, usize)]) -> Quiver {
    let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = edges
        .iter()
        .filter(|(i, j)| i != j)
        .enumerate()
        .map(|(k, &(i, j))| (format!("a{k}"), (i.min(j) + 1).to_string(), (i.max(j) + 1).to_string()))
        .collect();
    let triples: Vec<(&str, &str, &str)> =
        arrows.iter().map(|(a, s, t)| (a.as_str(), s.as_str(), t.as_str())).collect();
    Quiver::from_triples(vs, &triples).unwrap()
}

pub fn length_two_paths(q: &Quiver) -> Vec<Path> {
    q.enumerate_paths(2).into_iter().filter(|p| p.len() == 2).collect()
}

/// A random acyclic bound quiver algebra: up to `max_v` vertices, up to
/// `max_a` arrows and up to `max_r` relations of length two. A relation is
/// a monomial, or a binomial when a parallel length-two path exists.
pub fn random_acyclic(rng: &mut impl Rng, max_v: usize, max_a: usize, max_r: usize) -> BoundPathAlgebra {
    let n = rng.gen_range(1..=max_v);
    let arrows = if n == 1 { 0 } else { rng.gen_range(0..=max_a) };
    let edges: Vec<(usize, usize)> = (0..arrows)
        .map(|_| {
            let i = rng.gen_range(0..n - 1);
            (i, rng.gen_range(i + 1..n))
        })
        .collect();
    let q = acyclic_quiver(n, &edges);
    let paths = length_two_paths(&q);
    let mut rels = Vec::new();
    if !paths.is_empty() {
        for _ in 0..rng.gen_range(0..=max_r) {
            let p = paths[rng.gen_range(0..paths.len())].clone();
            let parallel: Vec<&Path> = paths
                .iter()
                .filter(|r| **r != p && q.source(r) == q.source(&p) && q.target(r) == q.target(&p))
                .collect();
            let rel = if !parallel.is_empty() && rng.gen_bool(0.5) {
                let r = parallel[rng.gen_range(0..parallel.len())].clone();
                LinComb::from_terms([(int(1), p), (int(rng.gen_range(1..=3)), r)])
            } else {
                LinComb::path(p)
            };
            rels.push(rel);
        }
    }
    BoundPathAlgebra::new(q, rels).unwrap()
}

pub fn chain(n: usize) -> BoundPathAlgebra {
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    BoundPathAlgebra::free(acyclic_quiver(n, &edges))
}

/// Bell numbers from the Bell triangle.
pub fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}
