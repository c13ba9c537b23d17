//! Two-valued hom spectra, prime filters, and the finite duality round trips
//! between Heyting algebras and posets.
//!
//! In the finite case the dual space of an algebra is just the poset of its
//! bounded-lattice homs into the two-element algebra (equivalently its prime
//! filters ordered by inclusion), and the dual algebra of a poset is its
//! lattice of up-sets. Both directions are computed here, together with the
//! witnessing isomorphisms and the dualization of homomorphisms.

use thiserror::Error;

use crate::lattice::{check_hom, DistributiveLattice, HeytingAlgebra, HomCandidate, HomKind};
use crate::poset::Poset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualityError {
    #[error("the map is not a Heyting homomorphism")]
    NotAHom,
    #[error("round trips need at least two elements (0 ≠ 1)")]
    DegenerateAlgebra,
    #[error("not isomorphic: {detail}")]
    NotIsomorphic { detail: String },
}

/// A bounded-lattice homomorphism into the two-element algebra, stored as its
/// indicator bits over the source elements. The set `bits⁻¹(1)` is a prime
/// filter of the source.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwoValuedHom {
    bits: Vec<bool>,
}

impl TwoValuedHom {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn value(&self, a: usize) -> bool {
        self.bits[a]
    }

    /// The prime filter `bits⁻¹(1)` as element indices.
    pub fn filter(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&a| self.bits[a]).collect()
    }

    pub fn filter_names(&self, algebra: &HeytingAlgebra) -> Vec<String> {
        self.filter()
            .into_iter()
            .map(|a| algebra.name(a).to_string())
            .collect()
    }

    /// The same map as a candidate homomorphism into [`HeytingAlgebra::two`].
    pub fn as_hom_candidate(&self) -> HomCandidate {
        HomCandidate {
            map: self.bits.iter().map(|&b| usize::from(b)).collect(),
        }
    }

    pub fn pointwise_leq(&self, other: &TwoValuedHom) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    /// Precomposition `self ∘ f` for `f : B → A` with `self : A → 2`.
    pub fn precompose(&self, f: &HomCandidate) -> TwoValuedHom {
        TwoValuedHom {
            bits: f.map().iter().map(|&a| self.bits[a]).collect(),
        }
    }
}

/// The poset of all two-valued homs of an algebra, ordered pointwise. Homs
/// are kept in lexicographic order of their bit vectors, and the order `R`
/// (`h R h'` iff `h(a) ≤ h'(a)` for all `a`) is stored as a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumPoset {
    homs: Vec<TwoValuedHom>,
    leq: Vec<Vec<bool>>,
}

impl SpectrumPoset {
    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    pub fn homs(&self) -> &[TwoValuedHom] {
        &self.homs
    }

    pub fn hom(&self, i: usize) -> &TwoValuedHom {
        &self.homs[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn index_of_bits(&self, bits: &[bool]) -> Option<usize> {
        self.homs.iter().position(|h| h.bits == bits)
    }

    /// The spectrum as a plain poset with points named `h0`, `h1`, ...
    pub fn to_poset(&self) -> Poset {
        let names = (0..self.len()).map(|i| format!("h{i}")).collect();
        Poset::from_closed_matrix(names, self.leq.clone())
    }
}

/// Enumerates all bounded-lattice homs from `algebra` into the two-element
/// algebra, i.e. all prime filters. Candidate filters are generated as
/// up-sets of the algebra's order and screened by the prime filter axioms;
/// the brute-force check over all bit assignments is kept in the tests as the
/// anchoring oracle.
pub fn spectrum(algebra: &HeytingAlgebra) -> SpectrumPoset {
    let n = algebra.n();
    let mut homs: Vec<TwoValuedHom> = algebra
        .as_poset()
        .up_sets()
        .into_iter()
        .filter(|u| is_prime_filter(algebra, u))
        .map(|bits| TwoValuedHom { bits })
        .collect();
    homs.sort();
    let leq: Vec<Vec<bool>> = homs
        .iter()
        .map(|h| homs.iter().map(|k| h.pointwise_leq(k)).collect())
        .collect();
    debug_assert!(n == 0 || homs.iter().all(|h| h.bits.len() == n));
    SpectrumPoset { homs, leq }
}

/// Prime filter axioms for an upward-closed candidate: contains 1, excludes
/// 0, closed under ∧, and `a∨b` inside forces `a` or `b` inside.
fn is_prime_filter(algebra: &HeytingAlgebra, set: &[bool]) -> bool {
    let n = algebra.n();
    if n == 0 || !set[algebra.top()] || set[algebra.bottom()] {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            if set[a] && set[b] && !set[algebra.meet(a, b)] {
                return false;
            }
            if !set[a] && !set[b] && set[algebra.join(a, b)] {
                return false;
            }
        }
    }
    true
}

/// The prime filters of the algebra, in the same canonical order as
/// [`spectrum`], so that `filters[i]` is the filter of hom `i`.
pub fn prime_filters(algebra: &HeytingAlgebra) -> Vec<Vec<usize>> {
    spectrum(algebra)
        .homs()
        .iter()
        .map(|h| h.filter())
        .collect()
}

/// The Heyting algebra of all up-sets of a poset: joins are unions, meets
/// are intersections, bottom is the empty set, top the full carrier, and
/// `U → V = {x : every y ≥ x in U is in V}`. The residuation law for the
/// directly computed implication is asserted against the order.
pub fn upset_algebra(poset: &Poset) -> HeytingAlgebra {
    let ups = poset.up_sets();
    let n = ups.len();
    let index_of = |set: &[bool]| -> usize {
        ups.binary_search_by(|u| u.as_slice().cmp(set))
            .expect("meets, joins, and implications of up-sets are up-sets")
    };
    let names: Vec<String> = ups.iter().map(|u| set_name(poset, u)).collect();
    let leq: Vec<Vec<bool>> = ups
        .iter()
        .map(|u| ups.iter().map(|v| subset(u, v)).collect())
        .collect();
    let mut meet = vec![vec![0usize; n]; n];
    let mut join = vec![vec![0usize; n]; n];
    let mut residuum = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let cap: Vec<bool> = ups[a].iter().zip(&ups[b]).map(|(&x, &y)| x && y).collect();
            let cup: Vec<bool> = ups[a].iter().zip(&ups[b]).map(|(&x, &y)| x || y).collect();
            meet[a][b] = index_of(&cap);
            join[a][b] = index_of(&cup);
            let imp: Vec<bool> = (0..poset.len())
                .map(|x| (0..poset.len()).all(|y| !poset.leq(x, y) || !ups[a][y] || ups[b][y]))
                .collect();
            residuum[a][b] = index_of(&imp);
        }
    }
    let bottom = 0;
    let top = n - 1;
    let lattice = DistributiveLattice {
        names,
        leq,
        meet,
        join,
        bottom,
        top,
    };
    let algebra = HeytingAlgebra { lattice, residuum };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                assert_eq!(
                    algebra.leq(c, algebra.imp(a, b)),
                    algebra.leq(algebra.meet(a, c), b),
                    "residuation law must hold for up-set implication"
                );
            }
        }
    }
    algebra
}

fn subset(u: &[bool], v: &[bool]) -> bool {
    u.iter().zip(v).all(|(&x, &y)| !x || y)
}

fn set_name(poset: &Poset, set: &[bool]) -> String {
    let members: Vec<&str> = (0..poset.len())
        .filter(|&i| set[i])
        .map(|i| poset.name(i))
        .collect();
    format!("{{{}}}", members.join(","))
}

/// A pair of mutually inverse index maps witnessing an isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct AlgebraRoundTrip {
    /// The spectrum of the input algebra.
    pub spectrum: SpectrumPoset,
    /// The up-set algebra of that spectrum.
    pub image: HeytingAlgebra,
    /// `a ↦ {h : h(a) = 1}` and its inverse.
    pub iso: Isomorphism,
}

/// Checks that `a ↦ {h : h(a)=1}` is a Heyting isomorphism from the algebra
/// onto the up-set algebra of its spectrum, and returns the witness.
pub fn roundtrip_algebra(algebra: &HeytingAlgebra) -> Result<AlgebraRoundTrip, DualityError> {
    if algebra.n() < 2 {
        return Err(DualityError::DegenerateAlgebra);
    }
    let sp = spectrum(algebra);
    let sp_poset = sp.to_poset();
    let image = upset_algebra(&sp_poset);
    let ups = sp_poset.up_sets();

    let mut forward = Vec::with_capacity(algebra.n());
    for a in 0..algebra.n() {
        let extent: Vec<bool> = (0..sp.len()).map(|h| sp.hom(h).value(a)).collect();
        if !sp_poset.is_up_set(&extent) {
            return Err(DualityError::NotIsomorphic {
                detail: format!("extent of `{}` is not an up-set", algebra.name(a)),
            });
        }
        let target =
            ups.iter()
                .position(|u| *u == extent)
                .ok_or_else(|| DualityError::NotIsomorphic {
                    detail: format!(
                        "extent of `{}` missing from the up-set algebra",
                        algebra.name(a)
                    ),
                })?;
        forward.push(target);
    }

    if image.n() != algebra.n() {
        return Err(DualityError::NotIsomorphic {
            detail: format!("carrier sizes differ: {} vs {}", algebra.n(), image.n()),
        });
    }
    let mut backward = vec![usize::MAX; image.n()];
    for (a, &u) in forward.iter().enumerate() {
        if backward[u] != usize::MAX {
            return Err(DualityError::NotIsomorphic {
                detail: format!("element map is not injective at `{}`", algebra.name(a)),
            });
        }
        backward[u] = a;
    }

    let fwd = HomCandidate {
        map: forward.clone(),
    };
    let bwd = HomCandidate {
        map: backward.clone(),
    };
    for (hom, src, dst) in [(&fwd, algebra, &image), (&bwd, &image, algebra)] {
        let report = check_hom(hom, src, dst, HomKind::Heyting);
        if let Some(v) = report.violations.first() {
            return Err(DualityError::NotIsomorphic {
                detail: format!("structure not preserved: {v}"),
            });
        }
    }

    Ok(AlgebraRoundTrip {
        spectrum: sp,
        image,
        iso: Isomorphism { forward, backward },
    })
}

#[derive(Debug, Clone)]
pub struct PosetRoundTrip {
    /// The up-set algebra of the input poset.
    pub algebra: HeytingAlgebra,
    /// The spectrum of that algebra.
    pub spectrum: SpectrumPoset,
    /// `x ↦ h_x` with `h_x(U) = 1` iff `x ∈ U`, and its inverse.
    pub iso: Isomorphism,
}

/// Checks that `x ↦ h_x` is an order isomorphism from the poset onto the
/// spectrum of its up-set algebra, and returns the witness.
pub fn roundtrip_poset(poset: &Poset) -> Result<PosetRoundTrip, DualityError> {
    let algebra = upset_algebra(poset);
    let sp = spectrum(&algebra);
    let ups = poset.up_sets();

    let mut forward = Vec::with_capacity(poset.len());
    for x in 0..poset.len() {
        let bits: Vec<bool> = ups.iter().map(|u| u[x]).collect();
        let target = sp
            .index_of_bits(&bits)
            .ok_or_else(|| DualityError::NotIsomorphic {
                detail: format!("evaluation at `{}` is not a prime filter", poset.name(x)),
            })?;
        forward.push(target);
    }

    if sp.len() != poset.len() {
        return Err(DualityError::NotIsomorphic {
            detail: format!("point counts differ: {} vs {}", poset.len(), sp.len()),
        });
    }
    let mut backward = vec![usize::MAX; sp.len()];
    for (x, &h) in forward.iter().enumerate() {
        if backward[h] != usize::MAX {
            return Err(DualityError::NotIsomorphic {
                detail: format!("point map is not injective at `{}`", poset.name(x)),
            });
        }
        backward[h] = x;
    }

    for x in 0..poset.len() {
        for y in 0..poset.len() {
            if poset.leq(x, y) != sp.leq(forward[x], forward[y]) {
                return Err(DualityError::NotIsomorphic {
                    detail: format!(
                        "order not preserved at (`{}`, `{}`)",
                        poset.name(x),
                        poset.name(y)
                    ),
                });
            }
        }
    }

    Ok(PosetRoundTrip {
        algebra,
        spectrum: sp,
        iso: Isomorphism { forward, backward },
    })
}

/// The dual of a Heyting homomorphism `f : B → A`: the precomposition map
/// `v ↦ v∘f` from the spectrum of `A` to the spectrum of `B`, together with
/// the monotonicity and bounded-morphism (p-morphism) checks.
#[derive(Debug, Clone)]
pub struct DualizedHom {
    /// Spectrum of the hom's target algebra (the dual map's domain).
    pub domain: SpectrumPoset,
    /// Spectrum of the hom's source algebra (the dual map's codomain).
    pub codomain: SpectrumPoset,
    /// `map[v] = v∘f` by spectrum index.
    pub map: Vec<usize>,
    pub monotone: bool,
    pub monotone_witness: Option<(usize, usize)>,
    /// The back condition: `map[v] R w` implies some `v' ≥ v` maps to `w`.
    pub bounded_morphism: bool,
    pub bounded_morphism_witness: Option<(usize, usize)>,
}

pub fn dualize_hom(
    f: &HomCandidate,
    source: &HeytingAlgebra,
    target: &HeytingAlgebra,
) -> Result<DualizedHom, DualityError> {
    if !check_hom(f, source, target, HomKind::Heyting).is_ok() {
        return Err(DualityError::NotAHom);
    }
    let domain = spectrum(target);
    let codomain = spectrum(source);
    let map: Vec<usize> = domain
        .homs()
        .iter()
        .map(|v| {
            codomain
                .index_of_bits(v.precompose(f).bits())
                .expect("composition with a Heyting hom is a bounded-lattice hom")
        })
        .collect();

    let mut monotone = true;
    let mut monotone_witness = None;
    'mono: for v in 0..domain.len() {
        for w in 0..domain.len() {
            if domain.leq(v, w) && !codomain.leq(map[v], map[w]) {
                monotone = false;
                monotone_witness = Some((v, w));
                break 'mono;
            }
        }
    }

    let mut bounded_morphism = true;
    let mut bounded_morphism_witness = None;
    'bounded: for v in 0..domain.len() {
        for w in 0..codomain.len() {
            if codomain.leq(map[v], w) {
                let lifted = (0..domain.len()).any(|v2| domain.leq(v, v2) && map[v2] == w);
                if !lifted {
                    bounded_morphism = false;
                    bounded_morphism_witness = Some((v, w));
                    break 'bounded;
                }
            }
        }
    }

    Ok(DualizedHom {
        domain,
        codomain,
        map,
        monotone,
        monotone_witness,
        bounded_morphism,
        bounded_morphism_witness,
    })
}
