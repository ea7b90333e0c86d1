//! Degree-by-degree exact linear algebra over `k[S]` and its Artinian
//! truncations `k[S]/t^{>=N}`.
//!
//! Free modules are direct sums of twists R(-t). A homogeneous degree-0 map
//! between them has one monomial (or zero) per entry, pinned by the twist
//! difference. Every functor we need -- Hom(-,R), Hom(-,N), - tensor N, Ext,
//! Tor -- reduces to assembling, per internal degree, a small rational matrix
//! whose rows and columns are the graded pieces alive in that degree. Kernels
//! and ranks of those matrices drive syzygy computation, resolutions, and the
//! cohomology checks.

mod hom;
mod resolve;

pub use hom::{
    ext_dims, ext_vanishes, hom_equality, hom_generators, tor_dims, trace_of_module,
    ExtCertificate, HomEquality, HomGenerator, HomModule,
};
pub use resolve::{default_degree_bound, minimal_resolution, presentation_of_ideal};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialFractionalIdeal;
use crate::linalg::{self, Q};
use crate::semigroup::NumericalSemigroup;

/// The ambient graded ring: `k[S]`, optionally truncated by killing all
/// degrees >= N (an Artinian quotient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing {
    pub semigroup: Arc<NumericalSemigroup>,
    pub truncation: Option<u64>,
}

impl GradedRing {
    pub fn new(semigroup: Arc<NumericalSemigroup>) -> Self {
        Self {
            semigroup,
            truncation: None,
        }
    }

    pub fn truncated(semigroup: Arc<NumericalSemigroup>, n: u64) -> Self {
        Self {
            semigroup,
            truncation: Some(n),
        }
    }

    /// Degree u carries a nonzero piece of R.
    pub fn alive(&self, u: i64) -> bool {
        self.semigroup.contains(u) && self.truncation.is_none_or(|n| u < n as i64)
    }

    pub fn is_truncated(&self) -> bool {
        self.truncation.is_some()
    }

    /// Width of the no-new-generators window required before a syzygy step is
    /// certified complete. Truncated rings need none (sweeps are finite).
    pub fn stabilization_window(&self) -> i64 {
        (self.semigroup.frobenius() + 1).max(1)
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.truncation {
            None => write!(f, "k[{}]", self.semigroup),
            Some(n) => write!(f, "k[{}]/t^>={}", self.semigroup, n),
        }
    }
}

/// Which graded object supplies the pieces when a free module is tensored
/// against it: the ring itself, or a monomial fractional ideal viewed as a
/// rank-one module.
#[derive(Clone, Copy)]
pub enum Support<'a> {
    Ring(&'a GradedRing),
    Module(&'a GradedRing, &'a MonomialFractionalIdeal),
}

impl Support<'_> {
    pub fn alive(&self, u: i64) -> bool {
        match self {
            Support::Ring(r) => r.alive(u),
            Support::Module(r, m) => {
                m.contains_exponent(u) && r.truncation.is_none_or(|n| u < n as i64)
            }
        }
    }
}

/// Sparse polynomial with exact rational coefficients, keyed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedPoly {
    terms: BTreeMap<i64, Q>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(degree: i64, coeff: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(degree, coeff);
        }
        Self { terms }
    }

    pub fn one_monomial(degree: i64) -> Self {
        Self::monomial(degree, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    /// The (degree, coefficient) of a single-term polynomial.
    pub fn single(&self) -> Option<(i64, &Q)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&d, c)| (d, c))
        } else {
            None
        }
    }

    pub fn coefficient(&self, degree: i64) -> Q {
        self.terms.get(&degree).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&d, c) in &other.terms {
            let entry = terms.entry(d).or_insert_with(Q::zero);
            *entry = &*entry + c;
            if entry.is_zero() {
                terms.remove(&d);
            }
        }
        Self { terms }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&d, c)| (d, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<i64, Q> = BTreeMap::new();
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in &other.terms {
                let entry = acc.entry(d1 + d2).or_insert_with(Q::zero);
                *entry = &*entry + &(c1 * c2);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self { terms: acc }
    }

    pub fn scale(&self, factor: &Q) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&d, c)| (d, c * factor)).collect(),
        }
    }

    /// Drops all terms of degree >= n.
    pub fn truncate(&self, n: u64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&d, _)| d < n as i64)
                .map(|(&d, c)| (d, c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*t^{d}")?;
        }
        Ok(())
    }
}

/// A graded free module, the direct sum of R(-t) over its twist list. Row and
/// column indices of maps refer to this list's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedFreeModule {
    twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        Self { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// Dual module: R(-t)* = R(t).
    pub fn dual(&self) -> Self {
        Self {
            twists: self.twists.iter().map(|&t| -t).collect(),
        }
    }

    /// Dimension of the degree-d piece when tensored against `support`.
    pub fn piece_dim(&self, d: i64, support: Support<'_>) -> usize {
        self.twists
            .iter()
            .filter(|&&t| support.alive(d - t))
            .count()
    }
}

/// Degree-d slice of a graded map: the dense rational matrix between the
/// alive pieces, together with the indices it covers.
pub struct PieceMatrix {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub data: Vec<Vec<Q>>,
}

impl PieceMatrix {
    pub fn rank(&self) -> usize {
        linalg::rank(&self.data, self.cols.len())
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols.len() - self.rank()
    }

    /// Kernel basis embedded into the full source coordinate space.
    pub fn kernel_embedded(&self, full_rank: usize) -> Vec<Vec<Q>> {
        linalg::kernel_basis(&self.data, self.cols.len())
            .into_iter()
            .map(|v| {
                let mut full = vec![Q::zero(); full_rank];
                for (slot, &col) in self.cols.iter().enumerate() {
                    full[col] = v[slot].clone();
                }
                full
            })
            .collect()
    }
}

/// A homogeneous degree-0 map between graded free modules. Entry (i, j) has
/// all of its support in the single degree source.twist(j) - target.twist(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedFreeModule,
    target: GradedFreeModule,
    entries: Vec<Vec<GradedPoly>>, // target.rank() rows x source.rank() cols
}

impl GradedMap {
    pub fn new(
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<GradedPoly>>,
    ) -> Self {
        debug_assert_eq!(entries.len(), target.rank());
        debug_assert!(entries.iter().all(|r| r.len() == source.rank()));
        Self {
            source,
            target,
            entries,
        }
    }

    pub fn zero_map(source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let entries = vec![vec![GradedPoly::zero(); source.rank()]; target.rank()];
        Self::new(source, target, entries)
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn entry(&self, row: usize, col: usize) -> &GradedPoly {
        &self.entries[row][col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(GradedPoly::is_zero)
    }

    /// Checks homogeneity: every nonzero entry is a single monomial sitting in
    /// the twist-difference degree, that degree is a semigroup member, and
    /// truncated degrees are absent.
    pub fn validate(&self, ring: &GradedRing) -> std::result::Result<(), String> {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, poly) in row.iter().enumerate() {
                if poly.is_zero() {
                    continue;
                }
                let want = self.source.twists()[j] - self.target.twists()[i];
                let Some((d, _)) = poly.single() else {
                    return Err(format!("entry ({i},{j}) has several terms: {poly}"));
                };
                if d != want {
                    return Err(format!(
                        "entry ({i},{j}) has degree {d}, twists demand {want}"
                    ));
                }
                if !ring.semigroup.contains(d) {
                    return Err(format!("entry ({i},{j}) degree {d} is not in S"));
                }
                if let Some(n) = ring.truncation {
                    if d >= n as i64 {
                        return Err(format!(
                            "entry ({i},{j}) degree {d} survives truncation {n}"
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Every nonzero entry has positive degree, i.e. the image lies in mF.
    pub fn entries_in_maximal_ideal(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, p)| p.is_zero() || self.source.twists()[j] - self.target.twists()[i] > 0)
        })
    }

    /// R(-t)* = R(t) dual with the transposed matrix; entry degrees are
    /// unchanged.
    pub fn dual(&self) -> Self {
        let rows = self.source.rank();
        let cols = self.target.rank();
        let entries: Vec<Vec<GradedPoly>> = (0..rows)
            .map(|i| (0..cols).map(|j| self.entries[j][i].clone()).collect())
            .collect();
        Self::new(self.target.dual(), self.source.dual(), entries)
    }

    /// Matrix product self . other (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.source.twists(), other.target.twists());
        let rows = self.target.rank();
        let cols = other.source.rank();
        let mid = self.source.rank();
        let entries: Vec<Vec<GradedPoly>> = (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| {
                        let mut acc = GradedPoly::zero();
                        for k in 0..mid {
                            acc = acc.add(&self.entries[r][k].mul(&other.entries[k][c]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Self::new(other.source.clone(), self.target.clone(), entries)
    }

    /// Dense matrix of the degree-d slice over the pieces alive in the given
    /// supports (rows from the target, columns from the source).
    pub fn piece_matrix(&self, d: i64, row_sup: Support<'_>, col_sup: Support<'_>) -> PieceMatrix {
        let cols: Vec<usize> = (0..self.source.rank())
            .filter(|&j| col_sup.alive(d - self.source.twists()[j]))
            .collect();
        let rows: Vec<usize> = (0..self.target.rank())
            .filter(|&i| row_sup.alive(d - self.target.twists()[i]))
            .collect();
        let data: Vec<Vec<Q>> = rows
            .iter()
            .map(|&i| {
                cols.iter()
                    .map(|&j| {
                        let deg = self.source.twists()[j] - self.target.twists()[i];
                        self.entries[i][j].coefficient(deg)
                    })
                    .collect()
            })
            .collect();
        PieceMatrix { rows, cols, data }
    }

    /// Removes unit (degree-zero) entries by column reduction, deleting the
    /// pivot row and column each time, then drops zero columns. Pivots are
    /// chosen in (row, column) order for reproducibility.
    #[allow(clippy::needless_range_loop)] // simultaneous row/col indexing
    pub fn minimized(&self) -> Self {
        let mut src = self.source.twists().to_vec();
        let mut tgt = self.target.twists().to_vec();
        let mut ent = self.entries.clone();
        loop {
            let mut pivot = None;
            'scan: for i in 0..tgt.len() {
                for j in 0..src.len() {
                    if src[j] == tgt[i] && !ent[i][j].is_zero() {
                        pivot = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            let c = ent[pi][pj].coefficient(0);
            for j in 0..src.len() {
                if j == pj || ent[pi][j].is_zero() {
                    continue;
                }
                // col_j -= (entry(pi,j)/c) * col_pj keeps homogeneity: the
                // factor's degree is src[j] - tgt[pi] = src[j] - src[pj].
                let factor = ent[pi][j].scale(&(Q::one() / &c));
                for i in 0..tgt.len() {
                    let sub = factor.mul(&ent[i][pj]).neg();
                    ent[i][j] = ent[i][j].add(&sub);
                }
            }
            for row in ent.iter_mut() {
                row.remove(pj);
            }
            ent.remove(pi);
            src.remove(pj);
            tgt.remove(pi);
        }
        // Zero columns present no relation; drop them.
        let keep: Vec<usize> = (0..src.len())
            .filter(|&j| ent.iter().any(|row| !row[j].is_zero()))
            .collect();
        let src_kept: Vec<i64> = keep.iter().map(|&j| src[j]).collect();
        let ent_kept: Vec<Vec<GradedPoly>> = ent
            .iter()
            .map(|row| keep.iter().map(|&j| row[j].clone()).collect())
            .collect();
        Self::new(
            GradedFreeModule::new(src_kept),
            GradedFreeModule::new(tgt),
            ent_kept,
        )
    }
}

/// A module given as the cokernel of a map of graded frees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub ring: GradedRing,
    pub map: GradedMap,
}

impl Presentation {
    pub fn new(ring: GradedRing, map: GradedMap) -> Self {
        Self { ring, map }
    }

    /// Presentation of R itself: cokernel of the empty map into R(0).
    pub fn of_ring(ring: GradedRing) -> Self {
        let map = GradedMap::zero_map(
            GradedFreeModule::new(vec![]),
            GradedFreeModule::new(vec![0]),
        );
        Self { ring, map }
    }

    /// Presentation of R/I for an integral monomial ideal I: one relation
    /// t^e per minimal exponent. R/m is the residue field.
    pub fn of_quotient(ring: GradedRing, ideal: &MonomialFractionalIdeal) -> Result<Self> {
        let Some(exps) = ideal.exponents() else {
            return Ok(Self::of_ring(ring));
        };
        if !ideal.is_integral() {
            return Err(Error::NotIntegral {
                exponent: *exps.first().unwrap(),
            });
        }
        let mut entries = vec![Vec::with_capacity(exps.len())];
        for &e in exps {
            let poly = GradedPoly::one_monomial(e);
            let poly = match ring.truncation {
                Some(n) => poly.truncate(n),
                None => poly,
            };
            entries[0].push(poly);
        }
        let map = GradedMap::new(
            GradedFreeModule::new(exps.to_vec()),
            GradedFreeModule::new(vec![0]),
            entries,
        );
        Ok(Self { ring, map }.minimized())
    }

    pub fn minimized(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            map: self.map.minimized(),
        }
    }

    pub fn is_minimal(&self) -> bool {
        self.map.entries_in_maximal_ideal()
    }

    /// Auslander transpose: the cokernel of the dualized presentation map.
    /// Meaningful for minimal presentations.
    pub fn transpose(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            map: self.map.dual(),
        }
    }

    /// Dimension of the degree-d piece of the cokernel.
    pub fn coker_dim(&self, d: i64) -> usize {
        let sup = Support::Ring(&self.ring);
        let alive = self.map.target().piece_dim(d, sup);
        alive - self.map.piece_matrix(d, sup, sup).rank()
    }

    /// Removes rows that are identically zero; each is a free summand
    /// R(-t) of the cokernel. Returns the stripped presentation and the
    /// twists removed.
    pub fn strip_free(&self) -> (Self, Vec<i64>) {
        let zero_rows: Vec<usize> = (0..self.map.target().rank())
            .filter(|&i| (0..self.map.source().rank()).all(|j| self.map.entry(i, j).is_zero()))
            .collect();
        let removed: Vec<i64> = zero_rows
            .iter()
            .map(|&i| self.map.target().twists()[i])
            .collect();
        let kept: Vec<usize> = (0..self.map.target().rank())
            .filter(|i| !zero_rows.contains(i))
            .collect();
        let tgt = GradedFreeModule::new(
            kept.iter()
                .map(|&i| self.map.target().twists()[i])
                .collect(),
        );
        let entries: Vec<Vec<GradedPoly>> = kept
            .iter()
            .map(|&i| {
                (0..self.map.source().rank())
                    .map(|j| self.map.entry(i, j).clone())
                    .collect()
            })
            .collect();
        let map = GradedMap::new(self.map.source().clone(), tgt, entries);
        (
            Self {
                ring: self.ring.clone(),
                map,
            },
            removed,
        )
    }
}

/// Certificate attached to each computed syzygy step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepCertificate {
    pub step: usize,
    /// Degree of the last minimal generator found, if any.
    pub last_new_degree: Option<i64>,
    /// Sweep covered degrees up to here.
    pub swept_to: i64,
    /// True when the sweep was provably complete (truncated rings).
    pub exact: bool,
}

/// A chain of maps d_1, ..., d_jmax with d_i . d_{i+1} = 0, exact degree by
/// degree up to the recorded bound.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub ring: GradedRing,
    maps: Vec<GradedMap>,
    pub degree_bound: i64,
    pub minimal: bool,
    pub certificates: Vec<StepCertificate>,
}

impl Resolution {
    pub(crate) fn from_parts(
        ring: GradedRing,
        maps: Vec<GradedMap>,
        degree_bound: i64,
        minimal: bool,
        certificates: Vec<StepCertificate>,
    ) -> Self {
        Self {
            ring,
            maps,
            degree_bound,
            minimal,
            certificates,
        }
    }

    pub fn steps(&self) -> usize {
        self.maps.len()
    }

    /// The map d_j, 1-indexed.
    pub fn map(&self, j: usize) -> &GradedMap {
        &self.maps[j - 1]
    }

    /// Betti numbers (beta_0, ..., beta_jmax).
    pub fn betti(&self) -> Vec<usize> {
        let mut b = vec![self.maps[0].target().rank()];
        b.extend(self.maps.iter().map(|m| m.source().rank()));
        b
    }

    /// Ideal generated by the entries of d_j, as minimal monomial exponents.
    /// Zero ideal when the step vanishes.
    pub fn entry_ideal(&self, j: usize) -> MonomialFractionalIdeal {
        let map = self.map(j);
        let mut exps = Vec::new();
        for i in 0..map.target().rank() {
            for c in 0..map.source().rank() {
                if let Some((d, _)) = map.entry(i, c).single() {
                    exps.push(d);
                }
            }
        }
        MonomialFractionalIdeal::new(self.ring.semigroup.clone(), &exps)
    }

    /// Raw nonzero entry list of d_j as (row, col, degree) triples.
    pub fn entries_of(&self, j: usize) -> Vec<(usize, usize, i64)> {
        let map = self.map(j);
        let mut out = Vec::new();
        for i in 0..map.target().rank() {
            for c in 0..map.source().rank() {
                if let Some((d, _)) = map.entry(i, c).single() {
                    out.push((i, c, d));
                }
            }
        }
        out
    }

    /// Presentation of the j-th syzygy module Omega^j M = im(d_j), which is
    /// the cokernel of d_{j+1}. Requires the resolution to reach step j+1.
    pub fn syzygy_presentation(&self, j: usize) -> Presentation {
        Presentation::new(self.ring.clone(), self.map(j + 1).clone())
    }

    /// d_i . d_{i+1} = 0, checked symbolically, with composite entries
    /// reduced modulo the truncation first.
    pub fn verify_complex(&self) -> std::result::Result<(), String> {
        for i in 1..self.steps() {
            let composite = self.map(i).compose(self.map(i + 1));
            let zero = match self.ring.truncation {
                None => composite.is_zero(),
                Some(n) => (0..composite.target().rank()).all(|r| {
                    (0..composite.source().rank())
                        .all(|c| composite.entry(r, c).truncate(n).is_zero())
                }),
            };
            if !zero {
                return Err(format!("d_{i} . d_{} is nonzero", i + 1));
            }
        }
        Ok(())
    }

    /// Exactness at each interior step and degree: dim ker(d_i)_d equals
    /// rank(d_{i+1})_d for all swept degrees.
    pub fn verify_exactness(&self) -> std::result::Result<(), String> {
        let sup = Support::Ring(&self.ring);
        for i in 1..self.steps() {
            let lo = self
                .map(i)
                .source()
                .twists()
                .iter()
                .copied()
                .min()
                .unwrap_or(0);
            for d in lo..=self.degree_bound {
                let ker = self.map(i).piece_matrix(d, sup, sup).kernel_dim();
                let im = self.map(i + 1).piece_matrix(d, sup, sup).rank();
                if ker != im {
                    return Err(format!(
                        "exactness fails at step {i}, degree {d}: ker {ker} vs im {im}"
                    ));
                }
            }
        }
        Ok(())
    }
}
