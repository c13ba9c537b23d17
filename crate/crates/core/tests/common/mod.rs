//! Shared fixtures: the small algebras, posets, and systems the suites run on.
#![allow(dead_code)] // each test target uses its own slice of the corpus

use esakia_core::lattice::{build_lattice, residuate, HeytingAlgebra, LatticeSpec};
use esakia_core::poset::Poset;
use esakia_core::topsys::{build_system, canonical_system, ITopSystem};
use esakia_core::upset_algebra;

pub fn chain_algebra(n: usize) -> HeytingAlgebra {
    let names: Vec<String> = match n {
        3 => vec!["0".into(), "a".into(), "1".into()],
        _ => (0..n).map(|i| format!("e{i}")).collect(),
    };
    let order: Vec<(String, String)> = (1..n)
        .map(|i| (names[i - 1].clone(), names[i].clone()))
        .collect();
    let spec = LatticeSpec::new(names, order, true).unwrap();
    residuate(&build_lattice(&spec).unwrap()).unwrap()
}

pub fn diamond_algebra() -> HeytingAlgebra {
    let spec = LatticeSpec::new(
        vec!["0".into(), "x".into(), "y".into(), "1".into()],
        vec![
            ("0".into(), "x".into()),
            ("0".into(), "y".into()),
            ("x".into(), "1".into()),
            ("y".into(), "1".into()),
        ],
        true,
    )
    .unwrap();
    residuate(&build_lattice(&spec).unwrap()).unwrap()
}

pub fn vee_poset() -> Poset {
    Poset::from_named_pairs(&["b", "t1", "t2"], &[("b", "t1"), ("b", "t2")]).unwrap()
}

pub fn lambda_poset() -> Poset {
    Poset::from_named_pairs(&["b1", "b2", "t"], &[("b1", "t"), ("b2", "t")]).unwrap()
}

pub fn two_antichain() -> Poset {
    Poset::from_named_pairs(&["p", "q"], &[]).unwrap()
}

/// The two-point system over the three-chain whose points carry the two
/// spectrum homs.
pub fn two_point_system() -> ITopSystem {
    build_system(
        vec!["x".into(), "y".into()],
        chain_algebra(3),
        vec![vec![false, false, true], vec![false, true, true]],
    )
    .unwrap()
}

/// A valid system whose `p*` misses part of the spectrum.
pub fn partial_system() -> ITopSystem {
    build_system(
        vec!["x".into()],
        chain_algebra(3),
        vec![vec![false, true, true]],
    )
    .unwrap()
}

/// Algebras of at most six elements, for the exhaustive hom enumerations.
pub fn corpus_algebras() -> Vec<HeytingAlgebra> {
    vec![
        chain_algebra(1),
        HeytingAlgebra::two(),
        chain_algebra(3),
        chain_algebra(4),
        diamond_algebra(),
        upset_algebra(&two_antichain()),
        upset_algebra(&vee_poset()),
        upset_algebra(&lambda_poset()),
    ]
}

/// Valid systems with antisymmetric `p*` pullbacks.
pub fn corpus_systems() -> Vec<ITopSystem> {
    let mut out = vec![two_point_system(), partial_system()];
    for algebra in corpus_algebras() {
        out.push(canonical_system(&algebra));
    }
    out
}
