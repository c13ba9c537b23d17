//! Finite posets with named points: order validation, up-sets and down-sets,
//! cover relations, forest checks, and enumeration up to isomorphism.
//!
//! In the finite-discrete setting a poset carries the whole structure of an
//! ordered Stone space: every subset is clopen, so the only data left is the
//! order itself. The separation and down-set clauses that matter for infinite
//! spaces are checked here concretely instead of being assumed.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("point name must be nonempty")]
    EmptyName,
    #[error("duplicate point name `{0}`")]
    DuplicateName(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("not a partial order: `{x}` and `{y}` are distinct but below each other")]
    NotAPoset { x: String, y: String },
}

/// A finite partial order on named points. `leq` is stored reflexively and
/// transitively closed; antisymmetry is checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds a poset from order pairs `(i, j)` meaning `i ≤ j`. The pairs may
    /// be any generating relation (covers or the full order); the
    /// reflexive-transitive closure is taken before antisymmetry is checked.
    pub fn from_pairs(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset, PosetError> {
        validate_names(&names)?;
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in pairs {
            leq[i][j] = true;
        }
        transitive_close(&mut leq);
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i][j] && leq[j][i] {
                    return Err(PosetError::NotAPoset {
                        x: names[i].clone(),
                        y: names[j].clone(),
                    });
                }
            }
        }
        Ok(Poset { names, leq })
    }

    /// Same as [`Poset::from_pairs`] but with pairs given by point name.
    pub fn from_named_pairs(names: &[&str], pairs: &[(&str, &str)]) -> Result<Poset, PosetError> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        validate_names(&owned)?;
        let index = |n: &str| {
            owned
                .iter()
                .position(|x| x == n)
                .ok_or_else(|| PosetError::UnknownPoint(n.to_string()))
        };
        let mut resolved = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            resolved.push((index(x)?, index(y)?));
        }
        Poset::from_pairs(owned, &resolved)
    }

    /// Internal constructor for matrices that are already valid partial orders.
    pub(crate) fn from_closed_matrix(names: Vec<String>, leq: Vec<Vec<bool>>) -> Poset {
        debug_assert!(is_partial_order(&leq));
        Poset { names, leq }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// The principal up-set `↑i` as a membership vector.
    pub fn up_set(&self, i: usize) -> Vec<bool> {
        (0..self.len()).map(|j| self.leq[i][j]).collect()
    }

    /// The principal down-set `↓i` as a membership vector.
    pub fn down_set(&self, i: usize) -> Vec<bool> {
        (0..self.len()).map(|j| self.leq[j][i]).collect()
    }

    /// All up-sets (upward-closed subsets), sorted lexicographically on their
    /// membership vectors. The empty set comes first and the full carrier last.
    pub fn up_sets(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let topo = self.topological_order();
        let mut out = Vec::new();
        let mut cur = vec![false; n];
        // Decide membership from the top of the order downward: an element may
        // join only if everything strictly above it is already in.
        fn rec(
            p: &Poset,
            topo: &[usize],
            pos: usize,
            cur: &mut Vec<bool>,
            out: &mut Vec<Vec<bool>>,
        ) {
            if pos == topo.len() {
                out.push(cur.clone());
                return;
            }
            let e = topo[topo.len() - 1 - pos];
            rec(p, topo, pos + 1, cur, out);
            let closed = (0..p.len()).all(|f| !p.lt(e, f) || cur[f]);
            if closed {
                cur[e] = true;
                rec(p, topo, pos + 1, cur, out);
                cur[e] = false;
            }
        }
        rec(self, &topo, 0, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All down-sets, sorted lexicographically. These are exactly the
    /// complements of the up-sets.
    pub fn down_sets(&self) -> Vec<Vec<bool>> {
        let mut out: Vec<Vec<bool>> = self
            .up_sets()
            .into_iter()
            .map(|u| u.iter().map(|b| !b).collect())
            .collect();
        out.sort();
        out
    }

    /// `{x : ∃y ∈ set, x ≤ y}` computed as a relational preimage.
    pub fn preimage_under_leq(&self, set: &[bool]) -> Vec<bool> {
        (0..self.len())
            .map(|x| (0..self.len()).any(|y| set[y] && self.leq[x][y]))
            .collect()
    }

    /// The down-closure of a set, computed pointwise as a union of principal
    /// down-sets.
    pub fn down_closure(&self, set: &[bool]) -> Vec<bool> {
        let mut out = vec![false; self.len()];
        for (y, &inside) in set.iter().enumerate() {
            if inside {
                for (x, slot) in out.iter_mut().enumerate() {
                    *slot |= self.leq[x][y];
                }
            }
        }
        out
    }

    pub fn is_up_set(&self, set: &[bool]) -> bool {
        (0..self.len()).all(|x| !set[x] || (0..self.len()).all(|y| !self.lt(x, y) || set[y]))
    }

    /// Cover relation: `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && (0..n).all(|k| !(self.lt(i, k) && self.lt(k, j))) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A forest here is a poset in which every principal up-set is a chain.
    pub fn is_forest(&self) -> bool {
        self.forest_witness().is_none()
    }

    /// Returns `(x, y, z)` with `y, z ≥ x` incomparable when the poset is not
    /// a forest.
    pub fn forest_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in (y + 1)..n {
                    if self.leq[x][y] && self.leq[x][z] && !self.leq[y][z] && !self.leq[z][y] {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Priestley separation, concretely: whenever `x ≰ y` there is an up-set
    /// containing `x` but not `y`. Always true for a finite poset (take `↑x`);
    /// asserted by computation rather than assumption.
    pub fn priestley_separation(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                if self.leq[x][y] {
                    true
                } else {
                    let up = self.up_set(x);
                    up[x] && !up[y] && self.is_up_set(&up)
                }
            })
        })
    }

    /// Some linear extension: strictly smaller elements appear earlier.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .find(|&i| !placed[i] && (0..n).all(|j| !self.lt(j, i) || placed[j]))
                .expect("acyclic by construction");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    /// Canonical invariant of the isomorphism class: the lexicographically
    /// least strict-order matrix over all relabelings. Factorial in the number
    /// of points; intended for small posets only.
    pub fn canonical_key(&self) -> Vec<bool> {
        let n = self.len();
        let strict: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| self.lt(i, j)).collect())
            .collect();
        canonical_key_of(&strict, &permutations(n))
    }

    /// The same poset with points renamed positionally.
    pub fn renamed(&self, names: Vec<String>) -> Result<Poset, PosetError> {
        assert_eq!(names.len(), self.len(), "name count must match point count");
        validate_names(&names)?;
        Ok(Poset {
            names,
            leq: self.leq.clone(),
        })
    }
}

fn validate_names(names: &[String]) -> Result<(), PosetError> {
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(PosetError::EmptyName);
        }
        if names[..i].contains(name) {
            return Err(PosetError::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

pub(crate) fn transitive_close(rel: &mut [Vec<bool>]) {
    let n = rel.len();
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
}

fn is_partial_order(leq: &[Vec<bool>]) -> bool {
    let n = leq.len();
    let refl = (0..n).all(|i| leq[i][i]);
    let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(leq[i][j] && leq[j][i])));
    let trans =
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(leq[i][j] && leq[j][k]) || leq[i][k])));
    refl && antisym && trans
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    if n == 0 {
        return vec![vec![]];
    }
    out
}

fn canonical_key_of(strict: &[Vec<bool>], perms: &[Vec<usize>]) -> Vec<bool> {
    let n = strict.len();
    let mut best: Option<Vec<bool>> = None;
    for perm in perms {
        let mut flat = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                flat.push(strict[perm[i]][perm[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| flat < *b) {
            best = Some(flat);
        }
    }
    best.unwrap_or_default()
}

/// All posets on exactly `n` points, one representative per isomorphism
/// class, in a deterministic order (sorted by canonical key). Representatives
/// are naturally labeled: `i ≤ j` in the order implies `i ≤ j` as indices.
pub fn enumerate_posets(n: usize) -> Vec<Poset> {
    let mut reps: Vec<Vec<Vec<bool>>> = vec![vec![]];
    for k in 1..=n {
        reps = extend_by_maximal_point(&reps, k);
    }
    reps.into_iter().map(poset_from_strict).collect()
}

/// All posets on `0..=n` points up to isomorphism, smaller sizes first.
pub fn enumerate_posets_upto(n: usize) -> Vec<Poset> {
    (0..=n).flat_map(enumerate_posets).collect()
}

fn extend_by_maximal_point(reps: &[Vec<Vec<bool>>], k: usize) -> Vec<Vec<Vec<bool>>> {
    let perms = permutations(k);
    let mut by_key: BTreeMap<Vec<bool>, Vec<Vec<bool>>> = BTreeMap::new();
    for rep in reps {
        for below in down_closed_subsets(rep) {
            let mut m = vec![vec![false; k]; k];
            for i in 0..(k - 1) {
                for j in 0..(k - 1) {
                    m[i][j] = rep[i][j];
                }
                m[i][k - 1] = below[i];
            }
            let key = canonical_key_of(&m, &perms);
            by_key.entry(key).or_insert(m);
        }
    }
    by_key.into_values().collect()
}

/// Subsets of a strict order's carrier that are closed downward, as
/// membership vectors, in ascending bitmask order.
fn down_closed_subsets(strict: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = strict.len();
    assert!(n < usize::BITS as usize, "poset too large to enumerate");
    let mut out = Vec::new();
    for mask in 0..(1usize << n) {
        let member = |i: usize| mask & (1 << i) != 0;
        let closed = (0..n).all(|i| !member(i) || (0..n).all(|j| !strict[j][i] || member(j)));
        if closed {
            out.push((0..n).map(member).collect());
        }
    }
    out
}

fn poset_from_strict(strict: Vec<Vec<bool>>) -> Poset {
    let n = strict.len();
    let names = (0..n).map(|i| format!("w{i}")).collect();
    let mut leq = strict;
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    Poset::from_closed_matrix(names, leq)
}
