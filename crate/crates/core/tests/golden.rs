//! The GATTACA/GCATGCT matrix frozen from a brute-force recursion.

use memrace::alignment::{dp_fill, ScoringScheme, SeedContext, Sequence};
use memrace::lattice::{build_lattice, simulate};
use memrace::Score;

const GOLDEN: &str = include_str!("../data/golden_gattaca.txt");

fn field(key: &str) -> &'static str {
    GOLDEN
        .lines()
        .filter_map(|l| l.split_once('='))
        .find(|(k, _)| k.trim() == key)
        .map(|(_, v)| v.trim())
        .unwrap_or_else(|| panic!("golden file lacks {key}"))
}

fn golden_matrix() -> Vec<Vec<Score>> {
    (0..=7)
        .map(|i| field(&format!("row.{i}")).split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect()
}

fn inputs() -> (Sequence, Sequence) {
    (field("query").parse().unwrap(), field("reference").parse().unwrap())
}

#[test]
fn dp_reproduces_golden_matrix_and_outputs() {
    let (q, r) = inputs();
    let dp = dp_fill(&q, &r, ScoringScheme::default(), SeedContext::default());
    assert_eq!(dp.matrix.to_rows().unwrap(), golden_matrix());
    let out = dp.outputs.unwrap();
    assert_eq!(out.local_best.score, field("local_best.score").parse::<Score>().unwrap());
    assert_eq!(out.local_best.row, field("local_best.row").parse::<usize>().unwrap());
    assert_eq!(out.local_best.col, field("local_best.col").parse::<usize>().unwrap());
    assert_eq!(out.global_score, field("global_score").parse::<Score>().unwrap());
    assert_eq!(out.max_offset, field("max_offset").parse::<usize>().unwrap());
}

#[test]
fn lattice_reproduces_golden_matrix() {
    let (q, r) = inputs();
    let lattice = build_lattice(7, ScoringScheme::default()).unwrap();
    let map = simulate(&lattice, &q, &r, SeedContext::default()).unwrap();
    assert_eq!(map.to_rows(), golden_matrix());
    assert_eq!(map.global_out(), 3);
}
