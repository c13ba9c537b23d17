//! Finite bounded distributive lattices, Heyting algebras, and Gödel
//! algebras, together with homomorphism checking.
//!
//! Everything is table-driven: a lattice is its order plus meet/join tables
//! over a canonical element indexing, and a Heyting algebra adds the residuum
//! table for `→`. All laws are validated at construction time, with errors
//! that carry a concrete witness.

use std::fmt;

use thiserror::Error;

use crate::poset::{transitive_close, Poset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("element name must be nonempty")]
    EmptyElementName,
    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("not a poset: `{x}` and `{y}` are distinct but below each other")]
    NotAPoset { x: String, y: String },
    #[error("not a lattice: `{x}` and `{y}` have no {op}")]
    NotALattice {
        op: MeetOrJoin,
        x: String,
        y: String,
    },
    #[error("not bounded: the lattice has no {end} element")]
    NotBounded { end: BoundKind },
    #[error("not distributive at ({x}, {y}, {z}): {x}∧({y}∨{z}) ≠ ({x}∧{y})∨({x}∧{z})")]
    NotDistributive { x: String, y: String, z: String },
    #[error("residuation failed at ({x}, {y}): {x}∧({x}→{y}) ≰ {y}")]
    ResiduationFailure { x: String, y: String },
    #[error("homomorphism map has {got} entries, expected {expected}")]
    HomWrongLength { expected: usize, got: usize },
    #[error("homomorphism value at position {position} is out of range")]
    HomValueOutOfRange { position: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeetOrJoin {
    Meet,
    Join,
}

impl fmt::Display for MeetOrJoin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeetOrJoin::Meet => write!(f, "meet"),
            MeetOrJoin::Join => write!(f, "join"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Bottom,
    Top,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Bottom => write!(f, "bottom"),
            BoundKind::Top => write!(f, "top"),
        }
    }
}

/// Input encoding of a lattice: named elements plus order pairs. `covers`
/// records whether the pairs were declared as a cover relation or as (part
/// of) the full order; both are closed reflexively and transitively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    elements: Vec<String>,
    order: Vec<(String, String)>,
    covers: bool,
}

impl LatticeSpec {
    pub fn new(
        elements: Vec<String>,
        order: Vec<(String, String)>,
        covers: bool,
    ) -> Result<LatticeSpec, LatticeError> {
        for (i, name) in elements.iter().enumerate() {
            if name.is_empty() {
                return Err(LatticeError::EmptyElementName);
            }
            if elements[..i].contains(name) {
                return Err(LatticeError::DuplicateElement(name.clone()));
            }
        }
        for (x, y) in &order {
            for name in [x, y] {
                if !elements.contains(name) {
                    return Err(LatticeError::UnknownElement(name.clone()));
                }
            }
        }
        Ok(LatticeSpec {
            elements,
            order,
            covers,
        })
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn order(&self) -> &[(String, String)] {
        &self.order
    }

    pub fn covers(&self) -> bool {
        self.covers
    }
}

/// A finite bounded distributive lattice over a canonical element indexing.
/// The element order is a linear extension of `leq` (ties broken by name),
/// so index 0 is always the bottom and the last index the top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributiveLattice {
    pub(crate) names: Vec<String>,
    pub(crate) leq: Vec<Vec<bool>>,
    pub(crate) meet: Vec<Vec<usize>>,
    pub(crate) join: Vec<Vec<usize>>,
    pub(crate) bottom: usize,
    pub(crate) top: usize,
}

impl DistributiveLattice {
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn element_index(&self, name: &str) -> Result<usize, LatticeError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// The underlying order as a poset on the same names.
    pub fn as_poset(&self) -> Poset {
        Poset::from_closed_matrix(self.names.clone(), self.leq.clone())
    }

    /// The Hasse diagram edges of the order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.as_poset().covers()
    }
}

/// Builds and fully validates a lattice from its input encoding. The element
/// order of the result is the canonical topological sort of the input order,
/// with incomparable elements ordered by name.
pub fn build_lattice(spec: &LatticeSpec) -> Result<DistributiveLattice, LatticeError> {
    let input_names = spec.elements();
    let n = input_names.len();
    let index = |name: &str| input_names.iter().position(|x| x == name).unwrap();

    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for (x, y) in spec.order() {
        leq[index(x)][index(y)] = true;
    }
    transitive_close(&mut leq);
    for i in 0..n {
        for j in (i + 1)..n {
            if leq[i][j] && leq[j][i] {
                return Err(LatticeError::NotAPoset {
                    x: input_names[i].clone(),
                    y: input_names[j].clone(),
                });
            }
        }
    }

    // Canonical reindexing: repeatedly take the name-least element whose
    // strict predecessors are all placed.
    let mut placed = vec![false; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&i| !placed[i] && (0..n).all(|j| j == i || !leq[j][i] || placed[j]))
            .min_by(|&a, &b| input_names[a].cmp(&input_names[b]))
            .expect("antisymmetric and finite, so some minimal element remains");
        placed[next] = true;
        order.push(next);
    }
    let names: Vec<String> = order.iter().map(|&i| input_names[i].clone()).collect();
    let leq: Vec<Vec<bool>> = order
        .iter()
        .map(|&i| order.iter().map(|&j| leq[i][j]).collect())
        .collect();

    let bottom = (0..n)
        .find(|&b| (0..n).all(|x| leq[b][x]))
        .ok_or(LatticeError::NotBounded {
            end: BoundKind::Bottom,
        })?;
    let top = (0..n)
        .find(|&t| (0..n).all(|x| leq[x][t]))
        .ok_or(LatticeError::NotBounded {
            end: BoundKind::Top,
        })?;

    let mut meet = vec![vec![0usize; n]; n];
    let mut join = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            meet[a][b] =
                bound(&leq, a, b, MeetOrJoin::Meet).ok_or_else(|| LatticeError::NotALattice {
                    op: MeetOrJoin::Meet,
                    x: names[a].clone(),
                    y: names[b].clone(),
                })?;
            join[a][b] =
                bound(&leq, a, b, MeetOrJoin::Join).ok_or_else(|| LatticeError::NotALattice {
                    op: MeetOrJoin::Join,
                    x: names[a].clone(),
                    y: names[b].clone(),
                })?;
        }
    }

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                    return Err(LatticeError::NotDistributive {
                        x: names[a].clone(),
                        y: names[b].clone(),
                        z: names[c].clone(),
                    });
                }
            }
        }
    }

    Ok(DistributiveLattice {
        names,
        leq,
        meet,
        join,
        bottom,
        top,
    })
}

/// Greatest lower / least upper bound of `{a, b}` w.r.t. `leq`, if it exists.
fn bound(leq: &[Vec<bool>], a: usize, b: usize, which: MeetOrJoin) -> Option<usize> {
    let n = leq.len();
    let candidates: Vec<usize> = (0..n)
        .filter(|&c| match which {
            MeetOrJoin::Meet => leq[c][a] && leq[c][b],
            MeetOrJoin::Join => leq[a][c] && leq[b][c],
        })
        .collect();
    candidates.iter().copied().find(|&m| {
        candidates.iter().all(|&c| match which {
            MeetOrJoin::Meet => leq[c][m],
            MeetOrJoin::Join => leq[m][c],
        })
    })
}

/// A Heyting algebra: a bounded distributive lattice with its residuum table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeytingAlgebra {
    pub(crate) lattice: DistributiveLattice,
    pub(crate) residuum: Vec<Vec<usize>>,
}

impl HeytingAlgebra {
    pub fn lattice(&self) -> &DistributiveLattice {
        &self.lattice
    }

    pub fn n(&self) -> usize {
        self.lattice.n()
    }

    pub fn names(&self) -> &[String] {
        self.lattice.names()
    }

    pub fn name(&self, i: usize) -> &str {
        self.lattice.name(i)
    }

    pub fn element_index(&self, name: &str) -> Result<usize, LatticeError> {
        self.lattice.element_index(name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom
    }

    pub fn top(&self) -> usize {
        self.lattice.top
    }

    /// Relative pseudo-complement `a → b`.
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.residuum[a][b]
    }

    /// Negation `¬a = a → 0`.
    pub fn neg(&self, a: usize) -> usize {
        self.residuum[a][self.lattice.bottom]
    }

    pub fn as_poset(&self) -> Poset {
        self.lattice.as_poset()
    }

    /// Prelinearity witness: a pair `(a, b)` with `(a→b)∨(b→a) ≠ 1`, if any.
    pub fn goedel_witness(&self) -> Option<(usize, usize)> {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                if self.join(self.imp(a, b), self.imp(b, a)) != self.top() {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_goedel(&self) -> bool {
        self.goedel_witness().is_none()
    }

    /// Re-checks every defining law of the structure; used to validate
    /// algebras assembled outside `build_lattice`/`residuate`.
    pub fn validate(&self) -> Result<(), LatticeError> {
        let spec = LatticeSpec::new(self.names().to_vec(), pairs_of(&self.lattice), false)?;
        let rebuilt = build_lattice(&spec)?;
        if rebuilt != self.lattice {
            return Err(LatticeError::NotAPoset {
                x: "internal".into(),
                y: "mismatch".into(),
            });
        }
        let res = residuate(&self.lattice)?;
        if res.residuum != self.residuum {
            let n = self.n();
            for a in 0..n {
                for b in 0..n {
                    if res.residuum[a][b] != self.residuum[a][b] {
                        return Err(LatticeError::ResiduationFailure {
                            x: self.name(a).to_string(),
                            y: self.name(b).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The two-element Boolean algebra, the target of spectrum homs.
    pub fn two() -> HeytingAlgebra {
        let spec = LatticeSpec::new(
            vec!["0".into(), "1".into()],
            vec![("0".into(), "1".into())],
            true,
        )
        .expect("valid spec");
        residuate(&build_lattice(&spec).expect("valid lattice")).expect("valid residuum")
    }
}

fn pairs_of(lattice: &DistributiveLattice) -> Vec<(String, String)> {
    let n = lattice.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && lattice.leq[i][j] {
                out.push((lattice.names[i].clone(), lattice.names[j].clone()));
            }
        }
    }
    out
}

/// Computes the residuum table: `a → b` is the join of `{c : a∧c ≤ b}`,
/// which in a finite distributive lattice is the maximum of that set. The
/// adjunction `a∧(a→b) ≤ b` is checked on every entry to guard against
/// corrupted tables.
pub fn residuate(lattice: &DistributiveLattice) -> Result<HeytingAlgebra, LatticeError> {
    let n = lattice.n();
    let mut residuum = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let mut r = lattice.bottom;
            for c in 0..n {
                if lattice.leq[lattice.meet[a][c]][b] {
                    r = lattice.join[r][c];
                }
            }
            if !lattice.leq[lattice.meet[a][r]][b] {
                return Err(LatticeError::ResiduationFailure {
                    x: lattice.names[a].clone(),
                    y: lattice.names[b].clone(),
                });
            }
            residuum[a][b] = r;
        }
    }
    Ok(HeytingAlgebra {
        lattice: lattice.clone(),
        residuum,
    })
}

/// A candidate homomorphism between two algebras: a total assignment of
/// target elements to source elements, by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCandidate {
    pub(crate) map: Vec<usize>,
}

impl HomCandidate {
    pub fn new(
        map: Vec<usize>,
        source: &HeytingAlgebra,
        target: &HeytingAlgebra,
    ) -> Result<HomCandidate, LatticeError> {
        if map.len() != source.n() {
            return Err(LatticeError::HomWrongLength {
                expected: source.n(),
                got: map.len(),
            });
        }
        if let Some(position) = (0..map.len()).find(|&i| map[i] >= target.n()) {
            return Err(LatticeError::HomValueOutOfRange { position });
        }
        Ok(HomCandidate { map })
    }

    pub fn identity(algebra: &HeytingAlgebra) -> HomCandidate {
        HomCandidate {
            map: (0..algebra.n()).collect(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `self ∘ inner`, where `inner` feeds into `self`.
    pub fn compose(&self, inner: &HomCandidate) -> HomCandidate {
        HomCandidate {
            map: inner.map.iter().map(|&a| self.map[a]).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    /// Preservation of ∧, ∨, 0 and 1.
    BoundedLattice,
    /// Bounded-lattice preservation plus →.
    Heyting,
}

/// One failed preservation equation, with the offending arguments by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomViolation {
    Bottom,
    Top,
    Meet { a: String, b: String },
    Join { a: String, b: String },
    Implication { a: String, b: String },
}

impl fmt::Display for HomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomViolation::Bottom => write!(f, "f(0) ≠ 0"),
            HomViolation::Top => write!(f, "f(1) ≠ 1"),
            HomViolation::Meet { a, b } => write!(f, "f({a}∧{b}) ≠ f({a})∧f({b})"),
            HomViolation::Join { a, b } => write!(f, "f({a}∨{b}) ≠ f({a})∨f({b})"),
            HomViolation::Implication { a, b } => write!(f, "f({a}→{b}) ≠ f({a})→f({b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomReport {
    pub violations: Vec<HomViolation>,
}

impl HomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every preservation equation of the requested kind and reports all
/// failures. The bounded-lattice kind requires `f(1) = 1` explicitly; for the
/// Heyting kind the same equation follows from preservation of `→`, but it is
/// checked all the same.
pub fn check_hom(
    f: &HomCandidate,
    source: &HeytingAlgebra,
    target: &HeytingAlgebra,
    kind: HomKind,
) -> HomReport {
    let mut violations = Vec::new();
    let n = source.n();
    if f.map[source.bottom()] != target.bottom() {
        violations.push(HomViolation::Bottom);
    }
    if f.map[source.top()] != target.top() {
        violations.push(HomViolation::Top);
    }
    for a in 0..n {
        for b in 0..n {
            if f.map[source.meet(a, b)] != target.meet(f.map[a], f.map[b]) {
                violations.push(HomViolation::Meet {
                    a: source.name(a).to_string(),
                    b: source.name(b).to_string(),
                });
            }
            if f.map[source.join(a, b)] != target.join(f.map[a], f.map[b]) {
                violations.push(HomViolation::Join {
                    a: source.name(a).to_string(),
                    b: source.name(b).to_string(),
                });
            }
            if kind == HomKind::Heyting && f.map[source.imp(a, b)] != target.imp(f.map[a], f.map[b])
            {
                violations.push(HomViolation::Implication {
                    a: source.name(a).to_string(),
                    b: source.name(b).to_string(),
                });
            }
        }
    }
    HomReport { violations }
}

/// Enumerates every homomorphism of the given kind from `source` to `target`
/// by exhausting all `|target|^|source|` assignments, in lexicographic order
/// of the map vector. Intended for small algebras.
pub fn enumerate_homs(
    source: &HeytingAlgebra,
    target: &HeytingAlgebra,
    kind: HomKind,
) -> Vec<HomCandidate> {
    let n = source.n();
    let t = target.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut map = vec![0usize; n];
    loop {
        let candidate = HomCandidate { map: map.clone() };
        if check_hom(&candidate, source, target, kind).is_ok() {
            out.push(candidate);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            map[pos] += 1;
            if map[pos] < t {
                break;
            }
            map[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn chain(n: usize) -> HeytingAlgebra {
        let names: Vec<String> = match n {
            0 => vec![],
            1 => vec!["0".into()],
            2 => vec!["0".into(), "1".into()],
            3 => vec!["0".into(), "a".into(), "1".into()],
            _ => (0..n).map(|i| format!("e{i}")).collect(),
        };
        let order: Vec<(String, String)> = (1..n)
            .map(|i| (names[i - 1].clone(), names[i].clone()))
            .collect();
        let spec = LatticeSpec::new(names, order, true).unwrap();
        residuate(&build_lattice(&spec).unwrap()).unwrap()
    }

    pub(crate) fn diamond() -> HeytingAlgebra {
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

    fn pentagon() -> Result<DistributiveLattice, LatticeError> {
        // N5: 0 < a < 1 and 0 < b < c < 1 with a incomparable to b, c.
        let spec = LatticeSpec::new(
            vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
            vec![
                ("0".into(), "a".into()),
                ("a".into(), "1".into()),
                ("0".into(), "b".into()),
                ("b".into(), "c".into()),
                ("c".into(), "1".into()),
            ],
            true,
        )
        .unwrap();
        build_lattice(&spec)
    }

    #[test]
    fn two_element_boolean_lattice() {
        let two = HeytingAlgebra::two();
        assert_eq!(two.n(), 2);
        assert_eq!(two.bottom(), 0);
        assert_eq!(two.top(), 1);
        // Classical implication truth table.
        assert_eq!(two.imp(0, 0), 1);
        assert_eq!(two.imp(0, 1), 1);
        assert_eq!(two.imp(1, 0), 0);
        assert_eq!(two.imp(1, 1), 1);
        assert_eq!(two.neg(0), 1);
        assert_eq!(two.neg(1), 0);
    }

    #[test]
    fn three_chain_has_canonical_order_and_tables() {
        let a = chain(3);
        assert_eq!(a.names(), &["0", "a", "1"]);
        let (zero, mid, one) = (0, 1, 2);
        assert_eq!(a.meet(mid, mid), mid);
        assert_eq!(a.join(mid, one), one);
        // Frozen residuum, from maximizing {c : x∧c ≤ y} by hand.
        assert_eq!(a.imp(mid, zero), zero);
        assert_eq!(a.imp(zero, mid), one);
        assert_eq!(a.imp(one, mid), mid);
        assert_eq!(a.neg(mid), zero);
        assert_eq!(a.neg(zero), one);
        assert_eq!(a.neg(one), zero);
    }

    #[test]
    fn canonical_order_sorts_incomparable_elements_by_name() {
        let spec = LatticeSpec::new(
            vec!["1".into(), "y".into(), "x".into(), "0".into()],
            vec![
                ("0".into(), "x".into()),
                ("0".into(), "y".into()),
                ("x".into(), "1".into()),
                ("y".into(), "1".into()),
            ],
            true,
        )
        .unwrap();
        let lattice = build_lattice(&spec).unwrap();
        assert_eq!(lattice.names(), &["0", "x", "y", "1"]);
        assert_eq!(lattice.bottom(), 0);
        assert_eq!(lattice.top(), 3);
    }

    #[test]
    fn diamond_is_accepted_and_distributive() {
        let d = diamond();
        assert_eq!(d.n(), 4);
        // Brute-force distributivity over all 64 triples as an oracle.
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(d.meet(a, d.join(b, c)), d.join(d.meet(a, b), d.meet(a, c)));
                }
            }
        }
    }

    #[test]
    fn pentagon_is_rejected_with_witness() {
        let err = pentagon().unwrap_err();
        match err {
            LatticeError::NotDistributive { x, y, z } => {
                // Re-check the witness against the raw definition.
                assert!([x, y, z]
                    .iter()
                    .all(|n| ["0", "a", "b", "c", "1"].contains(&n.as_str())));
            }
            other => panic!("expected NotDistributive, got {other:?}"),
        }
    }

    #[test]
    fn order_cycles_and_missing_bounds_are_reported() {
        let spec = LatticeSpec::new(
            vec!["x".into(), "y".into()],
            vec![("x".into(), "y".into()), ("y".into(), "x".into())],
            false,
        )
        .unwrap();
        assert!(matches!(
            build_lattice(&spec),
            Err(LatticeError::NotAPoset { .. })
        ));

        let spec = LatticeSpec::new(vec!["x".into(), "y".into()], vec![], false).unwrap();
        assert!(matches!(
            build_lattice(&spec),
            Err(LatticeError::NotALattice { .. }) | Err(LatticeError::NotBounded { .. })
        ));

        let spec = LatticeSpec::new(vec![], vec![], false).unwrap();
        assert!(matches!(
            build_lattice(&spec),
            Err(LatticeError::NotBounded { .. })
        ));
    }

    #[test]
    fn spec_validation_rejects_bad_names() {
        assert_eq!(
            LatticeSpec::new(vec!["x".into(), "x".into()], vec![], false),
            Err(LatticeError::DuplicateElement("x".into()))
        );
        assert_eq!(
            LatticeSpec::new(vec!["".into()], vec![], false),
            Err(LatticeError::EmptyElementName)
        );
        assert_eq!(
            LatticeSpec::new(vec!["x".into()], vec![("x".into(), "q".into())], false),
            Err(LatticeError::UnknownElement("q".into()))
        );
    }

    #[test]
    fn full_relation_input_matches_cover_input() {
        let by_covers = chain(3);
        let spec = LatticeSpec::new(
            vec!["0".into(), "a".into(), "1".into()],
            vec![
                ("0".into(), "a".into()),
                ("a".into(), "1".into()),
                ("0".into(), "1".into()),
            ],
            false,
        )
        .unwrap();
        let by_full = residuate(&build_lattice(&spec).unwrap()).unwrap();
        assert_eq!(by_covers, by_full);
    }

    #[test]
    fn residuation_identities_hold_everywhere() {
        for alg in [chain(1), chain(2), chain(3), chain(4), diamond()] {
            let n = alg.n();
            for a in 0..n {
                assert_eq!(alg.imp(a, a), alg.top(), "a→a = 1");
                for b in 0..n {
                    assert_eq!(alg.imp(alg.top(), b), b, "1→b = b");
                    assert!(alg.leq(b, alg.imp(a, b)), "b ≤ a→b");
                }
            }
        }
    }

    #[test]
    fn residuation_law_quantified_over_all_triples() {
        for alg in [chain(3), chain(4), diamond()] {
            let n = alg.n();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(
                            alg.leq(c, alg.imp(a, b)),
                            alg.leq(alg.meet(a, c), b),
                            "c ≤ a→b iff a∧c ≤ b"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn residuate_matches_max_scan_oracle() {
        for alg in [chain(3), chain(4), diamond()] {
            let n = alg.n();
            for a in 0..n {
                for b in 0..n {
                    // Independent route: the unique maximum of {c : a∧c ≤ b}.
                    let candidates: Vec<usize> =
                        (0..n).filter(|&c| alg.leq(alg.meet(a, c), b)).collect();
                    let max = candidates
                        .iter()
                        .copied()
                        .find(|&m| candidates.iter().all(|&c| alg.leq(c, m)))
                        .expect("maximum exists in a finite distributive lattice");
                    assert_eq!(alg.imp(a, b), max);
                }
            }
        }
    }

    #[test]
    fn lattice_laws_hold_on_small_algebras() {
        for alg in [chain(2), chain(3), chain(4), diamond()] {
            let n = alg.n();
            assert!(n <= 8);
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(alg.meet(a, b), alg.meet(b, a));
                    assert_eq!(alg.join(a, b), alg.join(b, a));
                    assert_eq!(alg.meet(a, alg.join(a, b)), a, "absorption");
                    assert_eq!(alg.join(a, alg.meet(a, b)), a, "absorption");
                    for c in 0..n {
                        assert_eq!(alg.meet(a, alg.meet(b, c)), alg.meet(alg.meet(a, b), c));
                        assert_eq!(alg.join(a, alg.join(b, c)), alg.join(alg.join(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn one_element_lattice_is_accepted() {
        let one = chain(1);
        assert_eq!(one.n(), 1);
        assert_eq!(one.bottom(), one.top());
        assert!(one.is_goedel());
    }

    #[test]
    fn chains_are_goedel() {
        for n in 1..=5 {
            assert!(chain(n).is_goedel());
        }
    }

    #[test]
    fn goedel_agrees_with_brute_force_prelinearity() {
        for alg in [chain(3), chain(4), diamond()] {
            let n = alg.n();
            let brute =
                (0..n).all(|a| (0..n).all(|b| alg.join(alg.imp(a, b), alg.imp(b, a)) == alg.top()));
            assert_eq!(alg.is_goedel(), brute);
        }
    }

    #[test]
    fn residuate_guards_corrupted_tables() {
        let mut lattice = chain(3).lattice().clone();
        // Corrupt join(0,0) so the computed "maximum" overshoots.
        lattice.join[0][0] = 2;
        assert!(matches!(
            residuate(&lattice),
            Err(LatticeError::ResiduationFailure { .. })
        ));
    }

    #[test]
    fn figure_one_homs_into_two() {
        let three = chain(3);
        let two = HeytingAlgebra::two();
        let h1 = HomCandidate::new(vec![0, 1, 1], &three, &two).unwrap();
        let h2 = HomCandidate::new(vec![0, 0, 1], &three, &two).unwrap();

        assert!(check_hom(&h1, &three, &two, HomKind::BoundedLattice).is_ok());
        assert!(check_hom(&h1, &three, &two, HomKind::Heyting).is_ok());
        assert!(check_hom(&h2, &three, &two, HomKind::BoundedLattice).is_ok());

        let report = check_hom(&h2, &three, &two, HomKind::Heyting);
        assert_eq!(
            report.violations,
            vec![HomViolation::Implication {
                a: "a".into(),
                b: "0".into()
            }]
        );
    }

    #[test]
    fn identity_is_a_heyting_hom() {
        for alg in [chain(2), chain(3), diamond()] {
            let id = HomCandidate::identity(&alg);
            assert!(check_hom(&id, &alg, &alg, HomKind::BoundedLattice).is_ok());
            assert!(check_hom(&id, &alg, &alg, HomKind::Heyting).is_ok());
        }
    }

    #[test]
    fn heyting_homs_are_bounded_lattice_homs() {
        let three = chain(3);
        let four = chain(4);
        for f in enumerate_homs(&three, &four, HomKind::Heyting) {
            assert!(check_hom(&f, &three, &four, HomKind::BoundedLattice).is_ok());
        }
    }

    #[test]
    fn hom_enumeration_on_figure_one() {
        let three = chain(3);
        let two = HeytingAlgebra::two();
        let bounded = enumerate_homs(&three, &two, HomKind::BoundedLattice);
        assert_eq!(
            bounded.iter().map(|f| f.map().to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 0, 1], vec![0, 1, 1]]
        );
        let heyting = enumerate_homs(&three, &two, HomKind::Heyting);
        assert_eq!(
            heyting.iter().map(|f| f.map().to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 1, 1]],
            "h1 is the only Heyting homomorphism"
        );
    }

    #[test]
    fn hom_candidate_validation() {
        let three = chain(3);
        let two = HeytingAlgebra::two();
        assert_eq!(
            HomCandidate::new(vec![0, 1], &three, &two),
            Err(LatticeError::HomWrongLength {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            HomCandidate::new(vec![0, 1, 7], &three, &two),
            Err(LatticeError::HomValueOutOfRange { position: 2 })
        );
    }

    #[test]
    fn validate_accepts_well_formed_algebras() {
        for alg in [chain(1), chain(3), diamond()] {
            assert!(alg.validate().is_ok());
        }
        let mut broken = chain(3);
        broken.residuum[1][0] = 2;
        assert!(matches!(
            broken.validate(),
            Err(LatticeError::ResiduationFailure { .. })
        ));
    }
}
