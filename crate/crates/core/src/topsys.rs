//! I-topological systems: points satisfying elements of a Heyting algebra,
//! subject to four satisfaction axioms, together with system morphisms,
//! classification, canonical systems over a spectrum, and the unit/counit
//! triangle checks of the finite dual adjunction.
//!
//! A system is stored extensionally as a full satisfaction matrix and
//! validated rather than synthesized: the axioms are checked clause by clause
//! on construction, with the implication clause evaluated through `p*` and
//! the pointwise order on its image.

use std::fmt;

use thiserror::Error;

use crate::duality::{spectrum, SpectrumPoset, TwoValuedHom};
use crate::lattice::{
    check_hom, enumerate_homs, HeytingAlgebra, HomCandidate, HomKind, HomViolation,
};

/// The satisfaction clause that failed, in the numbering of the definition:
/// bottom is never satisfied (1), meets (2), joins (3), implication via the
/// pointwise order on `p*` images (4); plus the two derived clauses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemClause {
    Falsum,
    Conjunction,
    Disjunction,
    Implication,
    /// Derived: the top element is satisfied at every point.
    Verum,
    /// Derived: every satisfaction row is a bounded-lattice hom into 2.
    PointHom,
}

impl fmt::Display for SystemClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemClause::Falsum => write!(f, "axiom 1 (no point satisfies 0)"),
            SystemClause::Conjunction => write!(f, "axiom 2 (meets)"),
            SystemClause::Disjunction => write!(f, "axiom 3 (joins)"),
            SystemClause::Implication => write!(f, "axiom 4 (implication)"),
            SystemClause::Verum => write!(f, "derived clause (every point satisfies 1)"),
            SystemClause::PointHom => write!(f, "derived clause (rows are homs)"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("point name must be nonempty")]
    EmptyPointName,
    #[error("duplicate point name `{0}`")]
    DuplicatePoint(String),
    #[error("satisfaction matrix has {rows} rows for {points} points")]
    RowCountMismatch { rows: usize, points: usize },
    #[error("satisfaction row for `{point}` has {got} entries, expected {expected}")]
    RowWidthMismatch {
        point: String,
        expected: usize,
        got: usize,
    },
    #[error("{clause} violated at point `{point}` on ({})", elements.join(", "))]
    AxiomViolation {
        clause: SystemClause,
        point: String,
        elements: Vec<String>,
    },
    #[error("row of `{point}` is not a bounded-lattice hom into 2")]
    PointNotAHom { point: String },
    #[error("morphism component f2 is not a Heyting homomorphism: {}", violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    MorphismNotAHom { violations: Vec<HomViolation> },
    #[error("morphism is not continuous at point `{point}`, element `{element}`")]
    MorphismNotContinuous { point: String, element: String },
    #[error("morphism point map has {got} entries, expected {expected}")]
    MorphismWrongLength { expected: usize, got: usize },
    #[error("morphism point map value at position {position} is out of range")]
    MorphismValueOutOfRange { position: usize },
    #[error("triangle does not commute at {location}")]
    TriangleFailure { location: String },
}

/// A validated I-topological system: named points, a Heyting algebra, and a
/// satisfaction matrix (`sat[x][a]` means point `x` satisfies element `a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ITopSystem {
    points: Vec<String>,
    algebra: HeytingAlgebra,
    sat: Vec<Vec<bool>>,
}

/// Validates every satisfaction axiom and derived clause. The implication
/// clause is checked in both directions, via `p*` and the pointwise order on
/// its image.
pub fn build_system(
    points: Vec<String>,
    algebra: HeytingAlgebra,
    sat: Vec<Vec<bool>>,
) -> Result<ITopSystem, SystemError> {
    for (i, p) in points.iter().enumerate() {
        if p.is_empty() {
            return Err(SystemError::EmptyPointName);
        }
        if points[..i].contains(p) {
            return Err(SystemError::DuplicatePoint(p.clone()));
        }
    }
    if sat.len() != points.len() {
        return Err(SystemError::RowCountMismatch {
            rows: sat.len(),
            points: points.len(),
        });
    }
    for (x, row) in sat.iter().enumerate() {
        if row.len() != algebra.n() {
            return Err(SystemError::RowWidthMismatch {
                point: points[x].clone(),
                expected: algebra.n(),
                got: row.len(),
            });
        }
    }

    let violation = |clause, x: usize, elements: Vec<usize>| SystemError::AxiomViolation {
        clause,
        point: points[x].clone(),
        elements: elements
            .into_iter()
            .map(|a| algebra.name(a).to_string())
            .collect(),
    };

    let n = algebra.n();
    for x in 0..points.len() {
        if n > 0 && sat[x][algebra.bottom()] {
            return Err(violation(SystemClause::Falsum, x, vec![algebra.bottom()]));
        }
        for a in 0..n {
            for b in 0..n {
                if sat[x][algebra.meet(a, b)] != (sat[x][a] && sat[x][b]) {
                    return Err(violation(SystemClause::Conjunction, x, vec![a, b]));
                }
                if sat[x][algebra.join(a, b)] != (sat[x][a] || sat[x][b]) {
                    return Err(violation(SystemClause::Disjunction, x, vec![a, b]));
                }
            }
        }
        if n > 0 && !sat[x][algebra.top()] {
            return Err(violation(SystemClause::Verum, x, vec![algebra.top()]));
        }
    }

    // Rows must be bounded-lattice homs before axiom 4 can quantify over the
    // pointwise order on p* images.
    let two = HeytingAlgebra::two();
    for (x, row) in sat.iter().enumerate() {
        let candidate = HomCandidate::new(
            row.iter().map(|&b| usize::from(b)).collect(),
            &algebra,
            &two,
        )
        .expect("row width was checked");
        if !check_hom(&candidate, &algebra, &two, HomKind::BoundedLattice).is_ok() {
            return Err(SystemError::PointNotAHom {
                point: points[x].clone(),
            });
        }
    }

    let row_leq = |x: usize, y: usize| (0..n).all(|a| !sat[x][a] || sat[y][a]);
    for x in 0..points.len() {
        for a in 0..n {
            for b in 0..n {
                let lhs = sat[x][algebra.imp(a, b)];
                let rhs = (0..points.len()).all(|y| !row_leq(x, y) || !sat[y][a] || sat[y][b]);
                if lhs != rhs {
                    return Err(violation(SystemClause::Implication, x, vec![a, b]));
                }
            }
        }
    }

    Ok(ITopSystem {
        points,
        algebra,
        sat,
    })
}

impl ITopSystem {
    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, x: usize) -> &str {
        &self.points[x]
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn algebra(&self) -> &HeytingAlgebra {
        &self.algebra
    }

    pub fn satisfies(&self, x: usize, a: usize) -> bool {
        self.sat[x][a]
    }

    pub fn sat_row(&self, x: usize) -> &[bool] {
        &self.sat[x]
    }

    /// The map `p*`: each point's satisfaction row as a two-valued hom. Rows
    /// were validated as homs at construction; this re-checks them so that a
    /// matrix corrupted after the fact is still caught.
    pub fn p_star(&self) -> Result<Vec<TwoValuedHom>, SystemError> {
        let sp = spectrum(&self.algebra);
        self.sat
            .iter()
            .enumerate()
            .map(|(x, row)| {
                sp.index_of_bits(row)
                    .map(|i| sp.hom(i).clone())
                    .ok_or_else(|| SystemError::PointNotAHom {
                        point: self.points[x].clone(),
                    })
            })
            .collect()
    }

    /// Indices of each point's row inside the spectrum of the algebra.
    pub(crate) fn p_star_indices(&self, sp: &SpectrumPoset) -> Vec<usize> {
        self.sat
            .iter()
            .map(|row| {
                sp.index_of_bits(row)
                    .expect("validated rows are prime filters")
            })
            .collect()
    }

    /// Heyting-algebraic iff `p*` is a bijection onto the spectrum; Gödel
    /// algebraic iff additionally the algebra is Gödel; T0 iff distinct
    /// points have distinct rows.
    pub fn classify(&self) -> SystemClassification {
        let sp = spectrum(&self.algebra);
        let indices = self.p_star_indices(&sp);
        let injective = (0..indices.len()).all(|i| (0..i).all(|j| indices[i] != indices[j]));
        let surjective = (0..sp.len()).all(|h| indices.contains(&h));
        let heyting_algebraic = injective && surjective;
        SystemClassification {
            heyting_algebraic,
            goedel_algebraic: heyting_algebraic && self.algebra.is_goedel(),
            t0: injective,
        }
    }
}

/// See Def. of Heyting/Gödel algebraic and T0 systems; the implications
/// `goedel ⇒ heyting ⇒ t0` hold by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SystemClassification {
    pub heyting_algebraic: bool,
    pub goedel_algebraic: bool,
    pub t0: bool,
}

/// The canonical system of an algebra: points are the spectrum homs, named
/// `h0`, `h1`, ..., and a point satisfies exactly the elements it maps to 1.
/// Running the result back through [`build_system`] re-proves the
/// satisfaction axioms on each instance.
pub fn canonical_system(algebra: &HeytingAlgebra) -> ITopSystem {
    let sp = spectrum(algebra);
    let points: Vec<String> = (0..sp.len()).map(|i| format!("h{i}")).collect();
    let sat: Vec<Vec<bool>> = sp.homs().iter().map(|h| h.bits().to_vec()).collect();
    build_system(points, algebra.clone(), sat)
        .expect("the canonical satisfaction relation satisfies the axioms")
}

/// A morphism of systems `(f1, f2) : S → T`: a point map `f1 : X → Y` and a
/// Heyting homomorphism `f2 : B → A` running the other way, subject to the
/// continuity condition `x ⊨ f2(b)` iff `f1(x) ⊨' b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemMorphism {
    pub f1: Vec<usize>,
    pub f2: HomCandidate,
}

#[derive(Debug, Clone)]
pub struct MorphismReport {
    pub hom_violations: Vec<HomViolation>,
    /// Failed continuity instances as (point, element) names.
    pub continuity_violations: Vec<(String, String)>,
}

impl MorphismReport {
    pub fn is_ok(&self) -> bool {
        self.hom_violations.is_empty() && self.continuity_violations.is_empty()
    }
}

/// Checks `m` as a morphism from `source` to `target`: `f2` must be a
/// Heyting hom from the target's algebra to the source's, and continuity
/// must hold at every point/element pair.
pub fn check_morphism(
    source: &ITopSystem,
    target: &ITopSystem,
    m: &SystemMorphism,
) -> Result<MorphismReport, SystemError> {
    if m.f1.len() != source.len() {
        return Err(SystemError::MorphismWrongLength {
            expected: source.len(),
            got: m.f1.len(),
        });
    }
    if let Some(position) = (0..m.f1.len()).find(|&x| m.f1[x] >= target.len()) {
        return Err(SystemError::MorphismValueOutOfRange { position });
    }
    if m.f2.map().len() != target.algebra().n() {
        return Err(SystemError::MorphismWrongLength {
            expected: target.algebra().n(),
            got: m.f2.map().len(),
        });
    }
    if let Some(position) = (0..m.f2.map().len()).find(|&b| m.f2.map()[b] >= source.algebra().n()) {
        return Err(SystemError::MorphismValueOutOfRange { position });
    }

    let hom_violations =
        check_hom(&m.f2, target.algebra(), source.algebra(), HomKind::Heyting).violations;
    let mut continuity_violations = Vec::new();
    for x in 0..source.len() {
        for b in 0..target.algebra().n() {
            if source.satisfies(x, m.f2.apply(b)) != target.satisfies(m.f1[x], b) {
                continuity_violations.push((
                    source.point(x).to_string(),
                    target.algebra().name(b).to_string(),
                ));
            }
        }
    }
    Ok(MorphismReport {
        hom_violations,
        continuity_violations,
    })
}

/// The dual of a Heyting hom `f : B → A` at the system level: the morphism
/// `(_∘f, f)` from the canonical system of `A` to the canonical system of
/// `B`. Continuity is re-checked concretely on the result.
#[derive(Debug, Clone)]
pub struct DualSystemMorphism {
    /// Canonical system of the hom's target algebra.
    pub source: ITopSystem,
    /// Canonical system of the hom's source algebra.
    pub target: ITopSystem,
    pub morphism: SystemMorphism,
}

pub fn dual_system_morphism(
    f: &HomCandidate,
    hom_source: &HeytingAlgebra,
    hom_target: &HeytingAlgebra,
) -> Result<DualSystemMorphism, SystemError> {
    let report = check_hom(f, hom_source, hom_target, HomKind::Heyting);
    if !report.is_ok() {
        return Err(SystemError::MorphismNotAHom {
            violations: report.violations,
        });
    }
    let source = canonical_system(hom_target);
    let target = canonical_system(hom_source);
    let sp_target = spectrum(hom_source);
    let sp_source = spectrum(hom_target);
    let f1: Vec<usize> = sp_source
        .homs()
        .iter()
        .map(|v| {
            sp_target
                .index_of_bits(v.precompose(f).bits())
                .expect("precomposition with a Heyting hom lands in the spectrum")
        })
        .collect();
    let morphism = SystemMorphism { f1, f2: f.clone() };
    let checked = check_morphism(&source, &target, &morphism)?;
    assert!(checked.is_ok(), "(_∘f, f) must be continuous");
    Ok(DualSystemMorphism {
        source,
        target,
        morphism,
    })
}

/// Whether the mediating hom's uniqueness was established by exhausting all
/// Heyting homs, or skipped because the algebras exceed the size bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniquenessCheck {
    Verified,
    Skipped,
}

#[derive(Debug, Clone)]
pub struct TriangleReport {
    /// The unit `η = (p*, id)` into the canonical system of the algebra.
    pub unit: SystemMorphism,
    /// The mediating hom `f̂ = f2`.
    pub mediating: HomCandidate,
    pub uniqueness: UniquenessCheck,
    /// True when the unit is an isomorphism of systems (both components
    /// bijective and the inverse continuous), i.e. when the system is
    /// Heyting algebraic.
    pub unit_is_isomorphism: bool,
}

const UNIQUENESS_BOUND: usize = 6;

/// Given a morphism `m : S → canonical_system(B)`, computes the unit
/// `η = (p*, id)`, factors `m` through it as `S(f̂)∘η` with `f̂ = f2`, and
/// verifies that the triangle commutes componentwise. Uniqueness of `f̂` is
/// established exhaustively for algebras of at most `6` elements.
pub fn unit_and_triangle(
    system: &ITopSystem,
    target_algebra: &HeytingAlgebra,
    m: &SystemMorphism,
) -> Result<TriangleReport, SystemError> {
    let canonical_target = canonical_system(target_algebra);
    let report = check_morphism(system, &canonical_target, m)?;
    if let Some(v) = report.hom_violations.first() {
        return Err(SystemError::MorphismNotAHom {
            violations: vec![v.clone()],
        });
    }
    if let Some((point, element)) = report.continuity_violations.first() {
        return Err(SystemError::MorphismNotContinuous {
            point: point.clone(),
            element: element.clone(),
        });
    }

    let algebra = system.algebra();
    let sp = spectrum(algebra);
    let unit = SystemMorphism {
        f1: system.p_star_indices(&sp),
        f2: HomCandidate::identity(algebra),
    };

    let mediating = m.f2.clone();
    let dual = dual_system_morphism(&mediating, target_algebra, algebra)?;

    // Point component of S(f̂)∘η against m.f1.
    for x in 0..system.len() {
        let composite = dual.morphism.f1[unit.f1[x]];
        if composite != m.f1[x] {
            return Err(SystemError::TriangleFailure {
                location: format!("point `{}`", system.point(x)),
            });
        }
    }
    // Algebra component: id∘f̂ against m.f2.
    for b in 0..target_algebra.n() {
        if unit.f2.apply(mediating.apply(b)) != m.f2.apply(b) {
            return Err(SystemError::TriangleFailure {
                location: format!("element `{}`", target_algebra.name(b)),
            });
        }
    }

    let uniqueness = if algebra.n() <= UNIQUENESS_BOUND && target_algebra.n() <= UNIQUENESS_BOUND {
        for g in enumerate_homs(target_algebra, algebra, HomKind::Heyting) {
            if g == mediating {
                continue;
            }
            let dual_g = dual_system_morphism(&g, target_algebra, algebra)?;
            let same_points = (0..system.len()).all(|x| dual_g.morphism.f1[unit.f1[x]] == m.f1[x]);
            if same_points && g == m.f2 {
                return Err(SystemError::TriangleFailure {
                    location: "uniqueness: a second mediating hom factors m".into(),
                });
            }
        }
        UniquenessCheck::Verified
    } else {
        UniquenessCheck::Skipped
    };

    let canonical_self = canonical_system(algebra);
    let unit_report = check_morphism(system, &canonical_self, &unit)?;
    assert!(unit_report.is_ok(), "the unit is always continuous");
    let classification = system.classify();
    let unit_is_isomorphism = classification.heyting_algebraic && {
        // Invert the point map and check the inverse morphism concretely.
        let mut inverse = vec![usize::MAX; canonical_self.len()];
        for (x, &h) in unit.f1.iter().enumerate() {
            inverse[h] = x;
        }
        let back = SystemMorphism {
            f1: inverse,
            f2: HomCandidate::identity(algebra),
        };
        check_morphism(&canonical_self, system, &back)?.is_ok()
    };

    Ok(TriangleReport {
        unit,
        mediating,
        uniqueness,
        unit_is_isomorphism,
    })
}

/// The counit of the adjunction is the identity: the algebra of the
/// canonical system of `A` is `A` itself, table for table.
pub fn counit_is_identity(algebra: &HeytingAlgebra) -> bool {
    canonical_system(algebra).algebra() == algebra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::upset_algebra;
    use crate::lattice::{build_lattice, residuate, LatticeSpec};
    use crate::poset::{enumerate_posets_upto, Poset};

    fn chain(n: usize) -> HeytingAlgebra {
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

    /// The two-point system over the three-chain: the bottom point satisfies
    /// only 1, the top point satisfies a and 1.
    fn two_point_system() -> ITopSystem {
        build_system(
            vec!["x".into(), "y".into()],
            chain(3),
            vec![vec![false, false, true], vec![false, true, true]],
        )
        .unwrap()
    }

    #[test]
    fn two_point_system_is_valid_and_refutes_excluded_middle() {
        let s = two_point_system();
        let alg = s.algebra();
        let a = alg.element_index("a").unwrap();
        let lem = alg.join(a, alg.neg(a));
        assert!(!s.satisfies(0, lem), "x does not satisfy a∨¬a");
        assert!(s.satisfies(1, lem), "y satisfies a∨¬a");
    }

    #[test]
    fn empty_system_is_valid() {
        let s = build_system(vec![], chain(3), vec![]).unwrap();
        assert!(s.is_empty());
        assert!(s.classify().t0);
    }

    #[test]
    fn single_point_over_two() {
        let s = build_system(
            vec!["x".into()],
            HeytingAlgebra::two(),
            vec![vec![false, true]],
        )
        .unwrap();
        assert!(s.satisfies(0, 1));
        let broken = build_system(
            vec!["x".into()],
            HeytingAlgebra::two(),
            vec![vec![false, false]],
        );
        assert!(matches!(
            broken,
            Err(SystemError::AxiomViolation {
                clause: SystemClause::Verum,
                ..
            })
        ));
    }

    #[test]
    fn axiom_violations_name_the_clause() {
        // Satisfying bottom breaks axiom 1.
        let err = build_system(
            vec!["x".into()],
            HeytingAlgebra::two(),
            vec![vec![true, true]],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            SystemError::AxiomViolation {
                clause: SystemClause::Falsum,
                ..
            }
        ));

        // A row that is not meet-consistent breaks axiom 2 or 3.
        let err = build_system(
            vec!["x".into()],
            upset_algebra(&Poset::from_named_pairs(&["p", "q"], &[]).unwrap()),
            vec![vec![false, true, true, false]],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            SystemError::AxiomViolation {
                clause: SystemClause::Disjunction | SystemClause::Conjunction | SystemClause::Verum,
                ..
            }
        ));
    }

    #[test]
    fn implication_axiom_rejects_the_bottom_hom_alone() {
        // The single point carrying h2 = {1} fails axiom 4: a→0 would have to
        // be satisfied since no reachable point satisfies a.
        let err =
            build_system(vec!["x".into()], chain(3), vec![vec![false, false, true]]).unwrap_err();
        match err {
            SystemError::AxiomViolation {
                clause: SystemClause::Implication,
                point,
                elements,
            } => {
                assert_eq!(point, "x");
                assert_eq!(elements, vec!["a", "0"]);
            }
            other => panic!("expected implication violation, got {other:?}"),
        }
    }

    #[test]
    fn nonempty_system_over_trivial_algebra_is_rejected() {
        let one = chain(1);
        assert!(build_system(vec![], one.clone(), vec![]).is_ok());
        let err = build_system(vec!["x".into()], one, vec![vec![false]]).unwrap_err();
        assert!(matches!(err, SystemError::AxiomViolation { .. }));
    }

    #[test]
    fn p_star_of_the_two_point_system() {
        let s = two_point_system();
        let homs = s.p_star().unwrap();
        assert_eq!(homs[0].bits(), &[false, false, true], "p*(x) = h2");
        assert_eq!(homs[1].bits(), &[false, true, true], "p*(y) = h1");
        for h in &homs {
            assert!(h.value(s.algebra().top()), "p*(x)(1) = 1");
        }
    }

    #[test]
    fn p_star_of_canonical_system_is_the_identity_assignment() {
        let alg = chain(3);
        let s = canonical_system(&alg);
        let sp = spectrum(&alg);
        let homs = s.p_star().unwrap();
        for (i, h) in homs.iter().enumerate() {
            assert_eq!(h.bits(), sp.hom(i).bits());
        }
    }

    #[test]
    fn classification_of_small_systems() {
        let s = two_point_system();
        let c = s.classify();
        assert!(c.heyting_algebraic);
        assert!(c.goedel_algebraic, "the three-chain is a Gödel algebra");
        assert!(c.t0);

        // One point carrying h1 misses h2: valid but not Heyting algebraic.
        let partial =
            build_system(vec!["x".into()], chain(3), vec![vec![false, true, true]]).unwrap();
        let c = partial.classify();
        assert!(!c.heyting_algebraic);
        assert!(!c.goedel_algebraic);
        assert!(c.t0);

        // Duplicate rows are not T0.
        let dup = build_system(
            vec!["x".into(), "y".into()],
            chain(3),
            vec![vec![false, true, true], vec![false, true, true]],
        )
        .unwrap();
        let c = dup.classify();
        assert!(!c.t0);
        assert!(!c.heyting_algebraic);
    }

    #[test]
    fn canonical_system_of_the_three_chain_is_the_two_point_system() {
        let s = canonical_system(&chain(3));
        assert_eq!(s.points(), &["h0", "h1"]);
        assert_eq!(s.sat_row(0), &[false, false, true]);
        assert_eq!(s.sat_row(1), &[false, true, true]);
        let alg = s.algebra();
        let a = alg.element_index("a").unwrap();
        let lem = alg.join(a, alg.neg(a));
        assert!(!s.satisfies(0, lem), "the bottom point refutes a∨¬a");
    }

    #[test]
    fn canonical_system_of_two_has_a_single_point_forcing_one() {
        let s = canonical_system(&HeytingAlgebra::two());
        assert_eq!(s.len(), 1);
        assert_eq!(s.sat_row(0), &[false, true]);
    }

    #[test]
    fn canonical_systems_over_small_posets_are_heyting_algebraic() {
        for poset in enumerate_posets_upto(4) {
            let s = canonical_system(&upset_algebra(&poset));
            assert!(s.classify().heyting_algebraic);
        }
    }

    #[test]
    fn separation_properties_of_canonical_systems() {
        for alg in [chain(2), chain(3), chain(4)] {
            let s = canonical_system(&alg);
            // Distinct elements have distinct columns.
            for a in 0..alg.n() {
                for b in (a + 1)..alg.n() {
                    let col_a: Vec<bool> = (0..s.len()).map(|x| s.satisfies(x, a)).collect();
                    let col_b: Vec<bool> = (0..s.len()).map(|x| s.satisfies(x, b)).collect();
                    assert_ne!(col_a, col_b, "columns of distinct elements differ");
                }
            }
            // Distinct points have distinct rows.
            assert!(s.classify().t0);
        }
    }

    #[test]
    fn identity_morphism_is_continuous() {
        let s = two_point_system();
        let id = SystemMorphism {
            f1: (0..s.len()).collect(),
            f2: HomCandidate::identity(s.algebra()),
        };
        assert!(check_morphism(&s, &s, &id).unwrap().is_ok());
    }

    #[test]
    fn unit_morphism_is_continuous_for_every_system() {
        for s in [
            two_point_system(),
            canonical_system(&chain(4)),
            build_system(vec!["x".into()], chain(3), vec![vec![false, true, true]]).unwrap(),
        ] {
            let sp = spectrum(s.algebra());
            let unit = SystemMorphism {
                f1: s.p_star_indices(&sp),
                f2: HomCandidate::identity(s.algebra()),
            };
            let canonical = canonical_system(s.algebra());
            assert!(check_morphism(&s, &canonical, &unit).unwrap().is_ok());
        }
    }

    #[test]
    fn permuted_point_map_breaks_continuity() {
        let s = two_point_system();
        let canonical = canonical_system(s.algebra());
        let swapped = SystemMorphism {
            f1: vec![1, 0],
            f2: HomCandidate::identity(s.algebra()),
        };
        let report = check_morphism(&s, &canonical, &swapped).unwrap();
        assert!(!report.is_ok());
        assert_eq!(report.continuity_violations[0].0, "x");
    }

    #[test]
    fn dual_of_identity_is_identity() {
        let alg = chain(3);
        let dual = dual_system_morphism(&HomCandidate::identity(&alg), &alg, &alg).unwrap();
        assert_eq!(dual.morphism.f1, vec![0, 1]);
    }

    #[test]
    fn dual_of_the_embedding_collapses_points() {
        let two = HeytingAlgebra::two();
        let three = chain(3);
        let embed = enumerate_homs(&two, &three, HomKind::Heyting)
            .into_iter()
            .next()
            .unwrap();
        let dual = dual_system_morphism(&embed, &two, &three).unwrap();
        assert_eq!(dual.source.len(), 2);
        assert_eq!(dual.target.len(), 1);
        assert_eq!(dual.morphism.f1, vec![0, 0]);
    }

    #[test]
    fn dual_morphisms_compose() {
        let two = HeytingAlgebra::two();
        let three = chain(3);
        let four = chain(4);
        for f in enumerate_homs(&two, &three, HomKind::Heyting) {
            for g in enumerate_homs(&three, &four, HomKind::Heyting) {
                let gf = g.compose(&f);
                let dual_gf = dual_system_morphism(&gf, &two, &four).unwrap();
                let dual_f = dual_system_morphism(&f, &two, &three).unwrap();
                let dual_g = dual_system_morphism(&g, &three, &four).unwrap();
                let composed: Vec<usize> = dual_g
                    .morphism
                    .f1
                    .iter()
                    .map(|&v| dual_f.morphism.f1[v])
                    .collect();
                assert_eq!(dual_gf.morphism.f1, composed);
                assert_eq!(
                    dual_gf.morphism.f2.map(),
                    dual_g.morphism.f2.compose(&dual_f.morphism.f2).map()
                );
            }
        }
    }

    #[test]
    fn dual_requires_a_heyting_hom() {
        let three = chain(3);
        let two = HeytingAlgebra::two();
        let h2 = HomCandidate::new(vec![0, 0, 1], &three, &two).unwrap();
        assert!(matches!(
            dual_system_morphism(&h2, &three, &two),
            Err(SystemError::MorphismNotAHom { .. })
        ));
    }

    #[test]
    fn identity_triangle_on_a_canonical_system() {
        let alg = chain(3);
        let s = canonical_system(&alg);
        let m = SystemMorphism {
            f1: (0..s.len()).collect(),
            f2: HomCandidate::identity(&alg),
        };
        let report = unit_and_triangle(&s, &alg, &m).unwrap();
        assert_eq!(report.mediating, HomCandidate::identity(&alg));
        assert_eq!(report.uniqueness, UniquenessCheck::Verified);
        assert!(report.unit_is_isomorphism);
    }

    #[test]
    fn unit_triangle_on_the_two_point_system() {
        let s = two_point_system();
        let alg = s.algebra().clone();
        let sp = spectrum(&alg);
        let m = SystemMorphism {
            f1: s.p_star_indices(&sp),
            f2: HomCandidate::identity(&alg),
        };
        let report = unit_and_triangle(&s, &alg, &m).unwrap();
        assert!(
            report.unit_is_isomorphism,
            "the unit is an isomorphism here"
        );
        assert_eq!(report.uniqueness, UniquenessCheck::Verified);
    }

    #[test]
    fn unit_is_not_an_isomorphism_on_a_partial_system() {
        let s = build_system(vec!["x".into()], chain(3), vec![vec![false, true, true]]).unwrap();
        let alg = s.algebra().clone();
        let sp = spectrum(&alg);
        let m = SystemMorphism {
            f1: s.p_star_indices(&sp),
            f2: HomCandidate::identity(&alg),
        };
        let report = unit_and_triangle(&s, &alg, &m).unwrap();
        assert!(!report.unit_is_isomorphism);
    }

    #[test]
    fn triangle_failure_is_reported() {
        let s = two_point_system();
        let alg = s.algebra().clone();
        // A morphism with a deliberately wrong point map is rejected as
        // discontinuous before any triangle is formed.
        let m = SystemMorphism {
            f1: vec![1, 0],
            f2: HomCandidate::identity(&alg),
        };
        assert!(matches!(
            unit_and_triangle(&s, &alg, &m),
            Err(SystemError::MorphismNotContinuous { .. })
        ));
    }

    #[test]
    fn counit_is_the_identity_on_small_algebras() {
        for alg in [HeytingAlgebra::two(), chain(3), chain(4)] {
            assert!(counit_is_identity(&alg));
        }
    }

    #[test]
    fn goedel_systems_have_forest_spectra() {
        for alg in [chain(2), chain(3), chain(4)] {
            assert!(alg.is_goedel());
            assert!(spectrum(&alg).to_poset().is_forest());
        }
    }
}
