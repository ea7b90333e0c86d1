//! Numerical semigroups `S = <a1,...,an>` and the ring invariants of `k[S]`.
//!
//! A numerical semigroup is a cofinite additive submonoid of the nonnegative
//! integers. Everything here is characteristic-free combinatorics: membership,
//! Apery sets, the Frobenius number, maximal factorization lengths (which give
//! m-adic orders of monomials), the monomial Loewy length surrogate, and a
//! genus-tree enumerator.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Hard cap on the genus accepted by the enumerator. The tree of numerical
/// semigroups grows roughly like a Fibonacci sequence in the genus, so this
/// keeps runs desk-scale.
pub const GENUS_CAP: u64 = 18;

/// A numerical semigroup in fully computed form: minimal generators,
/// Frobenius number, gap set, and a membership table on `[0, frobenius]`.
/// Everything above the Frobenius number is a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    gaps: Vec<u64>,
    membership: Vec<bool>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, minimalizing the generator
    /// list and computing the Frobenius number and gap set.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let g = gens.iter().fold(0u64, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }
        let mut sorted: Vec<u64> = gens.iter().copied().filter(|&x| x > 0).collect();
        sorted.sort_unstable();
        sorted.dedup();

        if sorted[0] == 1 {
            return Ok(Self {
                generators: vec![1],
                frobenius: -1,
                gaps: Vec::new(),
                membership: Vec::new(),
            });
        }

        // Least member of S in each residue class mod the multiplicity,
        // by Dijkstra over residues with one edge per generator.
        let m = sorted[0] as usize;
        let apery = least_members_mod(&sorted, m as u64);
        let frobenius = (*apery.iter().max().unwrap() as i64) - m as i64;

        let membership: Vec<bool> = (0..=frobenius as u64)
            .map(|x| apery[(x % m as u64) as usize] <= x)
            .collect();
        let gaps: Vec<u64> = (1..=frobenius as u64)
            .filter(|&x| !membership[x as usize])
            .collect();

        // A generator is redundant iff it decomposes as a sum of two nonzero
        // members; it suffices to subtract smaller generators.
        let contains = |s: i64| -> bool {
            if s < 0 {
                return false;
            }
            if s > frobenius {
                return true;
            }
            membership[s as usize]
        };
        let minimal: Vec<u64> = sorted
            .iter()
            .copied()
            .filter(|&g| {
                !sorted
                    .iter()
                    .take_while(|&&h| h < g)
                    .any(|&h| contains(g as i64 - h as i64) && g != h)
            })
            .collect();

        Ok(Self {
            generators: minimal,
            frobenius,
            gaps,
            membership,
        })
    }

    /// Rebuilds a semigroup from its (finite) gap set. Used by the enumerator,
    /// which walks gap sets directly.
    pub(crate) fn from_gap_set(gaps: &[u64]) -> Self {
        if gaps.is_empty() {
            return Self {
                generators: vec![1],
                frobenius: -1,
                gaps: Vec::new(),
                membership: Vec::new(),
            };
        }
        let frobenius = *gaps.iter().max().unwrap() as i64;
        let mut membership = vec![true; frobenius as usize + 1];
        for &g in gaps {
            membership[g as usize] = false;
        }
        let contains = |s: i64| -> bool {
            if s < 0 {
                return false;
            }
            if s > frobenius {
                return true;
            }
            membership[s as usize]
        };
        // Scan members ascending; s is a minimal generator iff it is not a
        // previously found generator plus a nonzero member.
        let mut generators: Vec<u64> = Vec::new();
        let multiplicity = (1..).find(|&s| contains(s)).unwrap();
        for s in multiplicity..=(frobenius + multiplicity) {
            if contains(s)
                && !generators
                    .iter()
                    .any(|&g| s - g as i64 > 0 && contains(s - g as i64))
            {
                generators.push(s as u64);
            }
        }
        let mut gaps = gaps.to_vec();
        gaps.sort_unstable();
        Self {
            generators,
            frobenius,
            gaps,
            membership,
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Largest integer not in S; -1 when S is all of the nonnegative integers.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Smallest positive member, which equals the Hilbert-Samuel multiplicity
    /// e(R) of `k[S]`.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Number of minimal generators, which equals mu(m) for `k[S]`.
    pub fn embedding_dimension(&self) -> u64 {
        self.generators.len() as u64
    }

    /// e(R) = mu(m), the maximal-embedding-dimension case.
    pub fn has_minimal_multiplicity(&self) -> bool {
        self.multiplicity() == self.embedding_dimension()
    }

    pub fn contains(&self, s: i64) -> bool {
        if s < 0 {
            return false;
        }
        if s > self.frobenius {
            return true;
        }
        self.membership[s as usize]
    }

    /// Least member of S in each residue class mod `n`, indexed by residue.
    /// The Frobenius number is `max(apery) - n`.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || !self.contains(n as i64) {
            return Err(Error::NotAMember { value: n });
        }
        Ok(least_members_mod(&self.generators, n))
    }

    /// Largest number of generators summing to `s`, i.e. the largest `k` with
    /// t^s in m^k. Computed by dynamic programming over `[0, s]`.
    pub fn max_factor_length(&self, s: u64) -> Result<u64> {
        if !self.contains(s as i64) {
            return Err(Error::NotAMember { value: s });
        }
        // L(0) = 0; L(x) = 1 + max over generators g with x - g in S of L(x - g).
        let mut table = vec![0u64; s as usize + 1];
        for x in 1..=s {
            if !self.contains(x as i64) {
                continue;
            }
            table[x as usize] = self
                .generators
                .iter()
                .filter(|&&g| g <= x && self.contains((x - g) as i64))
                .map(|&g| 1 + table[(x - g) as usize])
                .max()
                .unwrap_or(0);
        }
        Ok(table[s as usize])
    }

    /// Monomial Loewy length: least `i` such that m^i lands in a principal
    /// monomial parameter ideal (t^a). Minimizing only over monomial
    /// parameters gives an upper surrogate for the generalized Loewy length,
    /// which minimizes over all parameter systems.
    ///
    /// With a truncation N the ring `k[S]/t^{>=N}` is Artinian, the zero ideal
    /// is a parameter ideal, and the value returned is the exact Loewy length
    /// min { i : m^i = 0 }.
    ///
    /// Search bound for the parameter exponent: a in S with 1 <= a <= F+a1.
    /// Any larger member a' has a' - a1 > F, so (t^{a'}) is contained in
    /// (t^{a1 + ((a'-a1) mod a1 shifts)}) ... concretely a' - a1 is again a
    /// member and (t^{a'}) lies inside (t^{a''}) for some member a'' <= F+a1,
    /// hence larger exponents cannot improve the minimum.
    pub fn monomial_loewy_length(&self, truncation: Option<u64>) -> u64 {
        if let Some(n) = truncation {
            // 1 + max factorization length among members below N.
            return 1
                + (0..n)
                    .filter(|&s| self.contains(s as i64))
                    .map(|s| self.max_factor_length(s).unwrap())
                    .max()
                    .unwrap_or(0);
        }
        if self.frobenius < 0 {
            return 1; // m = (t) is itself a parameter
        }
        let f = self.frobenius;
        let m = self.multiplicity() as i64;
        let mut best = u64::MAX;
        for a in 1..=(f + m) {
            if !self.contains(a) {
                continue;
            }
            // m^i <= (t^a) iff every member x with L(x) >= i has x - a in S.
            // Members x > a + F pass automatically, so scan x in [0, a+F].
            let worst = (0..=(a + f))
                .filter(|&x| self.contains(x) && !self.contains(x - a))
                .map(|x| self.max_factor_length(x as u64).unwrap())
                .max();
            let i_min = match worst {
                Some(l) => l + 1,
                None => 1,
            };
            best = best.min(i_min);
        }
        best
    }

    /// S is symmetric iff exactly one of x, F-x is a member for every integer
    /// x, iff genus = (F+1)/2. Symmetric semigroups are the Gorenstein ones.
    pub fn is_symmetric(&self) -> bool {
        if self.frobenius < 0 {
            return true;
        }
        (0..=self.frobenius).all(|x| self.contains(x) != self.contains(self.frobenius - x))
    }

    /// Invariant record emitted by the CLI.
    pub fn invariants(&self) -> SemigroupInvariants {
        SemigroupInvariants {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            genus: self.genus(),
            multiplicity: self.multiplicity(),
            embdim: self.embedding_dimension(),
            llmon: self.monomial_loewy_length(None),
            symmetric: self.is_symmetric(),
            apery: self.apery_set(self.multiplicity()).unwrap(),
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupInvariants {
    pub generators: Vec<u64>,
    pub frobenius: i64,
    pub genus: u64,
    pub multiplicity: u64,
    pub embdim: u64,
    pub llmon: u64,
    pub symmetric: bool,
    pub apery: Vec<u64>,
}

/// Least element of the monoid generated by `gens` in each residue class
/// mod `n`, by Dijkstra on the residue graph (one edge of weight g per
/// generator g).
fn least_members_mod(gens: &[u64], n: u64) -> Vec<u64> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let n = n as usize;
    let mut dist = vec![u64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nd = d + g;
            let nr = (r + g as usize) % n;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Filter for the genus-tree enumerator. `genus_max` is mandatory since the
/// other predicates admit infinite families.
#[derive(Debug, Clone)]
pub struct EnumerationFilter {
    pub genus_max: u64,
    pub multiplicity_max: Option<u64>,
    /// Keep only semigroups with e(R) - mu(m) equal to this value.
    pub e_minus_mu: Option<u64>,
}

impl EnumerationFilter {
    pub fn by_genus(genus_max: u64) -> Self {
        Self {
            genus_max,
            multiplicity_max: None,
            e_minus_mu: None,
        }
    }
}

/// Enumerates every numerical semigroup passing the filter exactly once, in
/// deterministic order, by walking the genus tree: the children of S are the
/// semigroups S minus one minimal generator larger than the Frobenius number.
pub fn enumerate_semigroups(
    filter: &EnumerationFilter,
) -> Result<impl Iterator<Item = Arc<NumericalSemigroup>>> {
    if filter.genus_max > GENUS_CAP {
        return Err(Error::BoundTooLarge {
            requested: filter.genus_max,
            cap: GENUS_CAP,
        });
    }
    let filter = filter.clone();
    let root = Arc::new(NumericalSemigroup::from_gap_set(&[]));
    let mut stack = vec![root];
    Ok(std::iter::from_fn(move || {
        while let Some(s) = stack.pop() {
            if s.genus() < filter.genus_max {
                // Children: remove a minimal generator above the Frobenius
                // number. Push in descending order so DFS yields ascending.
                let mut children: Vec<Arc<NumericalSemigroup>> = s
                    .generators()
                    .iter()
                    .copied()
                    .filter(|&g| (g as i64) > s.frobenius())
                    .map(|g| {
                        let mut gaps = s.gaps().to_vec();
                        gaps.push(g);
                        Arc::new(NumericalSemigroup::from_gap_set(&gaps))
                    })
                    .collect();
                if let Some(mm) = filter.multiplicity_max {
                    // Multiplicity weakly increases down the tree.
                    children.retain(|c| c.multiplicity() <= mm);
                }
                children.reverse();
                stack.extend(children);
            }
            let keep = filter
                .multiplicity_max
                .is_none_or(|mm| s.multiplicity() <= mm)
                && filter
                    .e_minus_mu
                    .is_none_or(|d| s.multiplicity() - s.embedding_dimension() == d);
            if keep {
                return Some(s);
            }
        }
        None
    }))
}
