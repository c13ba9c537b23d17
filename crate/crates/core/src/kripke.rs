//! Kripke frames and models for intuitionistic logic: forcing, validity,
//! the model extracted from an I-topological system, and bounded
//! countermodel search over all small frames.

use thiserror::Error;

use crate::formula::Formula;
use crate::poset::{enumerate_posets, Poset};
use crate::topsys::ITopSystem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KripkeError {
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("valuation has {rows} rows for {worlds} worlds")]
    RowCountMismatch { rows: usize, worlds: usize },
    #[error("valuation row for `{world}` has {got} entries, expected {expected}")]
    RowWidthMismatch {
        world: String,
        expected: usize,
        got: usize,
    },
    #[error("heredity violated: `{atom}` holds at `{lower}` but not at `{upper}` above it")]
    HeredityViolation {
        lower: String,
        upper: String,
        atom: String,
    },
    #[error("the induced relation is not antisymmetric: `{x}` and `{y}` carry the same hom")]
    NotAntisymmetric { x: String, y: String },
}

/// A Kripke model: a finite poset of worlds (the frame) and a hereditary
/// valuation of atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeModel {
    frame: Poset,
    atoms: Vec<String>,
    val: Vec<Vec<bool>>,
}

impl KripkeModel {
    /// Validates dimensions and the heredity of every atom.
    pub fn new(
        frame: Poset,
        atoms: Vec<String>,
        val: Vec<Vec<bool>>,
    ) -> Result<KripkeModel, KripkeError> {
        for (i, atom) in atoms.iter().enumerate() {
            if atoms[..i].contains(atom) {
                return Err(KripkeError::DuplicateAtom(atom.clone()));
            }
        }
        if val.len() != frame.len() {
            return Err(KripkeError::RowCountMismatch {
                rows: val.len(),
                worlds: frame.len(),
            });
        }
        for (w, row) in val.iter().enumerate() {
            if row.len() != atoms.len() {
                return Err(KripkeError::RowWidthMismatch {
                    world: frame.name(w).to_string(),
                    expected: atoms.len(),
                    got: row.len(),
                });
            }
        }
        for w in 0..frame.len() {
            for u in 0..frame.len() {
                if frame.leq(w, u) {
                    for (p, atom) in atoms.iter().enumerate() {
                        if val[w][p] && !val[u][p] {
                            return Err(KripkeError::HeredityViolation {
                                lower: frame.name(w).to_string(),
                                upper: frame.name(u).to_string(),
                                atom: atom.clone(),
                            });
                        }
                    }
                }
            }
        }
        Ok(KripkeModel { frame, atoms, val })
    }

    pub fn frame(&self) -> &Poset {
        &self.frame
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn holds(&self, world: usize, atom: usize) -> bool {
        self.val[world][atom]
    }

    pub fn world_index(&self, name: &str) -> Result<usize, KripkeError> {
        self.frame
            .index_of(name)
            .ok_or_else(|| KripkeError::UnknownWorld(name.to_string()))
    }

    fn atom_index(&self, name: &str) -> Result<usize, KripkeError> {
        self.atoms
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| KripkeError::UnknownAtom(name.to_string()))
    }

    /// Forcing by the standard clauses: atoms by the valuation, ⊥ nowhere,
    /// ∧/∨ pointwise, and `a → b` quantified over all worlds above.
    pub fn forces(&self, world: usize, formula: &Formula) -> Result<bool, KripkeError> {
        Ok(match formula {
            Formula::Atom(name) => self.val[world][self.atom_index(name)?],
            Formula::Bot => false,
            Formula::And(a, b) => self.forces(world, a)? && self.forces(world, b)?,
            Formula::Or(a, b) => self.forces(world, a)? || self.forces(world, b)?,
            Formula::Imp(a, b) => {
                for u in 0..self.frame.len() {
                    if self.frame.leq(world, u) && self.forces(u, a)? && !self.forces(u, b)? {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }

    pub fn forces_named(&self, world: &str, formula: &Formula) -> Result<bool, KripkeError> {
        let w = self.world_index(world)?;
        self.forces(w, formula)
    }

    /// `Ok(None)` when every world forces the formula; otherwise the least
    /// counter-world in canonical order.
    pub fn validates(&self, formula: &Formula) -> Result<Option<usize>, KripkeError> {
        for w in 0..self.frame.len() {
            if !self.forces(w, formula)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}

/// Extracts the Kripke model of a system: worlds are the points, the
/// accessibility order is the pullback of the pointwise order along `p*`,
/// atoms are the algebra's element names, and the valuation is the
/// satisfaction matrix. Rejected when two distinct points carry the same
/// hom, since the pulled-back relation is then only a preorder.
pub fn model_from_system(system: &ITopSystem) -> Result<KripkeModel, KripkeError> {
    let n = system.len();
    let width = system.algebra().n();
    let row_leq =
        |x: usize, y: usize| (0..width).all(|a| !system.satisfies(x, a) || system.satisfies(y, a));
    for x in 0..n {
        for y in (x + 1)..n {
            if row_leq(x, y) && row_leq(y, x) {
                return Err(KripkeError::NotAntisymmetric {
                    x: system.point(x).to_string(),
                    y: system.point(y).to_string(),
                });
            }
        }
    }
    let mut leq = vec![vec![false; n]; n];
    for (x, row) in leq.iter_mut().enumerate() {
        for (y, slot) in row.iter_mut().enumerate() {
            *slot = row_leq(x, y);
        }
    }
    let frame = Poset::from_closed_matrix(system.points().to_vec(), leq);
    let atoms = system.algebra().names().to_vec();
    let val: Vec<Vec<bool>> = (0..n).map(|x| system.sat_row(x).to_vec()).collect();
    KripkeModel::new(frame, atoms, val)
}

/// Searches for a countermodel of the formula over all posets with at most
/// `max_worlds` worlds (up to isomorphism) and all hereditary valuations of
/// the formula's atoms. Returns the first refuting model and its least
/// refuting world, in canonical enumeration order.
pub fn countermodel_search(formula: &Formula, max_worlds: usize) -> Option<(KripkeModel, usize)> {
    assert!(max_worlds >= 1, "the search needs at least one world");
    let atoms = formula.atoms();
    for n in 1..=max_worlds {
        for frame in enumerate_posets(n) {
            if let Some(found) = search_frame(&frame, formula, &atoms) {
                return Some(found);
            }
        }
    }
    None
}

/// Iterates hereditary valuations on one frame: each atom independently
/// ranges over the frame's up-sets, first atom slowest.
fn search_frame(
    frame: &Poset,
    formula: &Formula,
    atoms: &[String],
) -> Option<(KripkeModel, usize)> {
    let n = frame.len();
    assert!(n <= 64, "worlds are packed into u64 masks");
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let cones: Vec<u64> = (0..n)
        .map(|w| {
            (0..n)
                .filter(|&u| frame.leq(w, u))
                .fold(0u64, |m, u| m | (1 << u))
        })
        .collect();
    let up_sets: Vec<u64> = frame
        .up_sets()
        .into_iter()
        .map(|u| (0..n).filter(|&w| u[w]).fold(0u64, |m, w| m | (1 << w)))
        .collect();

    let mut choice = vec![0usize; atoms.len()];
    loop {
        let extents: Vec<u64> = choice.iter().map(|&c| up_sets[c]).collect();
        let truth = extension(formula, atoms, &extents, &cones, n);
        if truth != full {
            let world = (0..n).find(|&w| truth & (1 << w) == 0).unwrap();
            let val: Vec<Vec<bool>> = (0..n)
                .map(|w| extents.iter().map(|&e| e & (1 << w) != 0).collect())
                .collect();
            let model = KripkeModel::new(frame.clone(), atoms.to_vec(), val)
                .expect("up-set extents are hereditary");
            return Some((model, world));
        }
        // Next valuation: odometer with the last atom fastest.
        let mut pos = atoms.len();
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < up_sets.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// World-set semantics over a packed frame: computes `{w : w ⊩ φ}` in one
/// bottom-up pass. Agreement with [`KripkeModel::forces`] is covered by a
/// property test.
fn extension(formula: &Formula, atoms: &[String], extents: &[u64], cones: &[u64], n: usize) -> u64 {
    match formula {
        Formula::Atom(name) => {
            let i = atoms
                .iter()
                .position(|a| a == name)
                .expect("atom collected");
            extents[i]
        }
        Formula::Bot => 0,
        Formula::And(a, b) => {
            extension(a, atoms, extents, cones, n) & extension(b, atoms, extents, cones, n)
        }
        Formula::Or(a, b) => {
            extension(a, atoms, extents, cones, n) | extension(b, atoms, extents, cones, n)
        }
        Formula::Imp(a, b) => {
            let bad =
                extension(a, atoms, extents, cones, n) & !extension(b, atoms, extents, cones, n);
            (0..n)
                .filter(|&w| cones[w] & bad == 0)
                .fold(0u64, |m, w| m | (1 << w))
        }
    }
}
