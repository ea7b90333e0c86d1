//! Syzygy computation by degree sweep.
//!
//! The kernel of a homogeneous map is a graded submodule of the source. We
//! walk the internal degrees in ascending order, compute the kernel slice in
//! each, and call a kernel class a new minimal generator exactly when it lies
//! outside the span of every earlier slice shifted up by ring elements. Over
//! a truncated ring the sweep range is provably complete; otherwise the step
//! is certified only after a trailing window of width F(S)+1 produces no new
//! generators, and the sweep fails loudly when the degree bound is too small
//! for that.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::MonomialFractionalIdeal;
use crate::linalg::{self, RowSpace, Q};

use super::{
    GradedFreeModule, GradedMap, GradedPoly, GradedRing, Presentation, Resolution, StepCertificate,
    Support,
};

/// Default internal degree bound: twice the conductor height plus the largest
/// generator twist plus one largest semigroup generator per requested step.
pub fn default_degree_bound(ring: &GradedRing, max_twist: i64, steps: usize) -> i64 {
    let f = ring.semigroup.frobenius();
    let an = *ring.semigroup.generators().last().unwrap() as i64;
    2 * (f + 1) + max_twist.max(0) + steps as i64 * an
}

struct Sweep {
    new_gens: Vec<(i64, Vec<Q>)>,
    cert: StepCertificate,
}

/// Generic kernel sweep over `source`. `kernel_at(d)` returns a basis of the
/// degree-d kernel slice embedded in the full coordinate space of `source`;
/// `alive(d, j)` says whether coordinate j carries a nonzero piece in degree
/// d (used to shift earlier slices up, killing truncated components).
fn sweep_kernel(
    ring: &GradedRing,
    source: &GradedFreeModule,
    step: usize,
    degree_bound: i64,
    alive: impl Fn(i64, usize) -> bool,
    kernel_at: impl Fn(i64) -> Vec<Vec<Q>>,
) -> Result<Sweep> {
    if source.rank() == 0 {
        return Ok(Sweep {
            new_gens: Vec::new(),
            cert: StepCertificate {
                step,
                last_new_degree: None,
                swept_to: degree_bound,
                exact: true,
            },
        });
    }
    let d_lo = *source.twists().iter().min().unwrap();
    let (d_hi, exact) = match ring.truncation {
        Some(n) => (source.twists().iter().max().unwrap() + n as i64 - 1, true),
        None => (degree_bound, false),
    };

    let mut slices: BTreeMap<i64, Vec<Vec<Q>>> = BTreeMap::new();
    let mut new_gens: Vec<(i64, Vec<Q>)> = Vec::new();
    for d in d_lo..=d_hi {
        let kernel = kernel_at(d);
        if kernel.is_empty() {
            continue;
        }
        // Span of m * Z in this degree: every earlier slice moved up by a
        // nonzero ring element, with components the truncation kills zeroed.
        let mut span = RowSpace::new();
        for (&dp, vecs) in slices.range(..d) {
            if !ring.semigroup.contains(d - dp) {
                continue;
            }
            for v in vecs {
                let shifted: Vec<Q> = v
                    .iter()
                    .enumerate()
                    .map(|(j, x)| {
                        if alive(d, j) {
                            x.clone()
                        } else {
                            Q::from_integer(0.into())
                        }
                    })
                    .collect();
                span.insert(&shifted);
            }
        }
        for v in &kernel {
            if span.insert(v) {
                new_gens.push((d, v.clone()));
            }
        }
        slices.insert(d, kernel);
    }

    let last_new = new_gens.iter().map(|&(d, _)| d).max();
    if !exact {
        let window = ring.stabilization_window();
        let needed = last_new.map_or(d_lo, |l| l + window);
        if needed > d_hi {
            return Err(Error::DegreeBoundTooSmall {
                used: d_hi,
                suggested: needed + window,
            });
        }
    }
    Ok(Sweep {
        new_gens,
        cert: StepCertificate {
            step,
            last_new_degree: last_new,
            swept_to: d_hi,
            exact,
        },
    })
}

/// Packs sweep output into the next map of the resolution: one column per new
/// generator, with entries x_j t^{d - twist_j}.
fn sweep_to_map(source: &GradedFreeModule, sweep: &Sweep) -> GradedMap {
    let new_twists: Vec<i64> = sweep.new_gens.iter().map(|&(d, _)| d).collect();
    let rows = source.rank();
    let entries: Vec<Vec<GradedPoly>> = (0..rows)
        .map(|i| {
            sweep
                .new_gens
                .iter()
                .map(|(d, v)| GradedPoly::monomial(d - source.twists()[i], v[i].clone()))
                .collect()
        })
        .collect();
    GradedMap::new(GradedFreeModule::new(new_twists), source.clone(), entries)
}

/// Minimal first syzygies of the generators of a nonzero monomial fractional
/// ideal: the kernel of the evaluation map F0 -> I sending the j-th basis
/// element to t^{e_j}. In each degree the target is at most one-dimensional,
/// so a kernel slice is cut out by a single all-ones linear condition (or by
/// none, when the truncation kills the target piece).
pub(super) fn syzygies_of_ideal(
    ring: &GradedRing,
    ideal: &MonomialFractionalIdeal,
    degree_bound: i64,
    step: usize,
) -> Result<(GradedMap, StepCertificate)> {
    let exps = ideal.exponents().ok_or(Error::ZeroDivisorIdeal)?;
    let source = GradedFreeModule::new(exps.to_vec());
    let full = source.rank();
    let alive = |d: i64, j: usize| ring.alive(d - exps[j]);
    let kernel_at = |d: i64| -> Vec<Vec<Q>> {
        let cols: Vec<usize> = (0..full).filter(|&j| alive(d, j)).collect();
        if cols.is_empty() {
            return Vec::new();
        }
        let target_alive = ring.truncation.is_none_or(|n| d < n as i64);
        let data: Vec<Vec<Q>> = if target_alive {
            vec![vec![Q::from_integer(1.into()); cols.len()]]
        } else {
            Vec::new()
        };
        linalg::kernel_basis(&data, cols.len())
            .into_iter()
            .map(|v| {
                let mut fullv = vec![Q::from_integer(0.into()); full];
                for (slot, &j) in cols.iter().enumerate() {
                    fullv[j] = v[slot].clone();
                }
                fullv
            })
            .collect()
    };
    let sweep = sweep_kernel(ring, &source, step, degree_bound, alive, kernel_at)?;
    Ok((sweep_to_map(&source, &sweep), sweep.cert))
}

/// Minimal generators of ker(f) as the next map of a minimal resolution.
pub(super) fn syzygies_of_map(
    ring: &GradedRing,
    f: &GradedMap,
    degree_bound: i64,
    step: usize,
) -> Result<(GradedMap, StepCertificate)> {
    let source = f.source().clone();
    let sup = Support::Ring(ring);
    let alive = |d: i64, j: usize| ring.alive(d - source.twists()[j]);
    let kernel_at = |d: i64| f.piece_matrix(d, sup, sup).kernel_embedded(source.rank());
    let sweep = sweep_kernel(ring, &source, step, degree_bound, alive, kernel_at)?;
    Ok((sweep_to_map(&source, &sweep), sweep.cert))
}

/// Minimal presentation of a nonzero monomial fractional ideal: F0 has one
/// twist per minimal exponent and the relation matrix holds the minimal first
/// syzygies.
pub fn presentation_of_ideal(
    ring: &GradedRing,
    ideal: &MonomialFractionalIdeal,
    degree_bound: Option<i64>,
) -> Result<Presentation> {
    let exps = ideal.exponents().ok_or(Error::ZeroDivisorIdeal)?;
    let bound =
        degree_bound.unwrap_or_else(|| default_degree_bound(ring, *exps.iter().max().unwrap(), 1));
    let (map, _cert) = syzygies_of_ideal(ring, ideal, bound, 1)?;
    Ok(Presentation::new(ring.clone(), map))
}

/// Minimal free resolution of coker(P) out to `j_max` maps. The presentation
/// is minimized first; each further step is a syzygy sweep, so every map has
/// entries in the maximal ideal and the chain is exact degree by degree up to
/// the recorded bound.
pub fn minimal_resolution(
    presentation: &Presentation,
    j_max: usize,
    degree_bound: Option<i64>,
) -> Result<Resolution> {
    assert!(j_max >= 1, "a resolution needs at least one step");
    let ring = presentation.ring.clone();
    let first = presentation.map.minimized();
    let max_twist = first
        .source()
        .twists()
        .iter()
        .chain(first.target().twists())
        .copied()
        .max()
        .unwrap_or(0);
    let bound = degree_bound.unwrap_or_else(|| default_degree_bound(&ring, max_twist, j_max));

    let mut maps = vec![first];
    let mut certs = vec![StepCertificate {
        step: 1,
        last_new_degree: maps[0].source().twists().iter().copied().max(),
        swept_to: bound,
        exact: ring.is_truncated(),
    }];
    for step in 2..=j_max {
        let (next, cert) = syzygies_of_map(&ring, maps.last().unwrap(), bound, step)?;
        maps.push(next);
        certs.push(cert);
    }
    let swept = certs.iter().map(|c| c.swept_to).max().unwrap_or(bound);
    let recorded = if ring.is_truncated() { swept } else { bound };
    Ok(Resolution::from_parts(ring, maps, recorded, true, certs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;
    use std::sync::Arc;

    fn ring(gens: &[u64]) -> GradedRing {
        GradedRing::new(Arc::new(NumericalSemigroup::from_generators(gens).unwrap()))
    }

    #[test]
    fn first_syzygies_of_maximal_ideal() {
        let r = ring(&[3, 5]);
        let m = MonomialFractionalIdeal::maximal(r.semigroup.clone());
        let p = presentation_of_ideal(&r, &m, None).unwrap();
        assert_eq!(p.map.target().twists(), &[3, 5]);
        // Two minimal syzygies, in degrees 8 and 15; the degree-8 column is
        // (t^5, -t^3) up to scale.
        assert_eq!(p.map.source().twists(), &[8, 15]);
        let e00 = p.map.entry(0, 0).single().unwrap();
        let e10 = p.map.entry(1, 0).single().unwrap();
        assert_eq!(e00.0, 5);
        assert_eq!(e10.0, 3);
        assert_eq!(e00.1 + e10.1, Q::from_integer(0.into()));
        p.map.validate(&r).unwrap();
    }

    #[test]
    fn syzygies_of_unit_and_principal() {
        let r = ring(&[3, 5]);
        let unit = MonomialFractionalIdeal::unit(r.semigroup.clone());
        let p = presentation_of_ideal(&r, &unit, None).unwrap();
        assert_eq!(p.map.source().rank(), 0);
        let pr = MonomialFractionalIdeal::principal(r.semigroup.clone(), 6);
        let p = presentation_of_ideal(&r, &pr, None).unwrap();
        assert_eq!(p.map.source().rank(), 0, "principal ideals are free");
    }

    #[test]
    fn syzygies_of_conductor() {
        let r = ring(&[3, 5]);
        let c = MonomialFractionalIdeal::conductor(r.semigroup.clone());
        let p = presentation_of_ideal(&r, &c, None).unwrap();
        assert_eq!(p.map.target().twists(), &[8, 9, 10]);
        // rank F1 = 2 over the hypersurface k[t^3,t^5]: c is MCM of rank 1,
        // so beta_1 = beta_0 - 1 cannot hold in general; instead verify the
        // kernel dimension count degree by degree.
        let res = minimal_resolution(&p, 2, None).unwrap();
        res.verify_complex().unwrap();
        res.verify_exactness().unwrap();
        assert!(p.map.entries_in_maximal_ideal());
    }

    #[test]
    fn betti_numbers_of_residue_field() {
        let r = ring(&[3, 5]);
        let m = MonomialFractionalIdeal::maximal(r.semigroup.clone());
        let p = Presentation::of_quotient(r.clone(), &m).unwrap();
        let res = minimal_resolution(&p, 5, None).unwrap();
        assert_eq!(res.betti(), vec![1, 2, 2, 2, 2, 2]);
        res.verify_complex().unwrap();
        res.verify_exactness().unwrap();
    }

    #[test]
    fn betti_numbers_of_maximal_ideal_module() {
        let r = ring(&[3, 5]);
        let m = MonomialFractionalIdeal::maximal(r.semigroup.clone());
        let p = presentation_of_ideal(&r, &m, None).unwrap();
        let res = minimal_resolution(&p, 3, None).unwrap();
        assert_eq!(res.betti(), vec![2, 2, 2, 2]);
        res.verify_complex().unwrap();
        res.verify_exactness().unwrap();
        // Entry ideal of the first map is m itself.
        let e1 = res.entry_ideal(1);
        assert_eq!(e1.exponents(), Some(&[3, 5][..]));
    }

    #[test]
    fn resolution_of_free_module() {
        let r = ring(&[3, 5]);
        let p = Presentation::of_ring(r);
        let res = minimal_resolution(&p, 3, None).unwrap();
        assert_eq!(res.betti(), vec![1, 0, 0, 0]);
        assert!(res.entry_ideal(1).is_zero());
    }

    #[test]
    fn truncated_residue_field_is_periodic() {
        // k over k[t]/(t^3): maps alternate t and t^2.
        let s = Arc::new(NumericalSemigroup::from_generators(&[1]).unwrap());
        let r = GradedRing::truncated(s.clone(), 3);
        let m = MonomialFractionalIdeal::maximal(s);
        let p = Presentation::of_quotient(r, &m).unwrap();
        let res = minimal_resolution(&p, 4, None).unwrap();
        assert_eq!(res.betti(), vec![1, 1, 1, 1, 1]);
        let degs: Vec<i64> = (1..=4).map(|j| res.entries_of(j)[0].2).collect();
        assert_eq!(degs, vec![1, 2, 1, 2]);
        assert!(res.certificates.iter().all(|c| c.exact));
        res.verify_complex().unwrap();
    }

    #[test]
    fn resolution_of_zero_module() {
        // R/R minimizes to the zero module; everything downstream is rank 0.
        let r = ring(&[3, 5]);
        let unit = MonomialFractionalIdeal::unit(r.semigroup.clone());
        let p = Presentation::of_quotient(r, &unit).unwrap();
        let res = minimal_resolution(&p, 3, None).unwrap();
        assert_eq!(res.betti(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn degree_bound_failure_is_loud() {
        let r = ring(&[3, 5]);
        let m = MonomialFractionalIdeal::maximal(r.semigroup.clone());
        // Syzygies live in degrees 8 and 15; a bound of 12 cannot certify.
        let err = presentation_of_ideal(&r, &m, Some(12)).unwrap_err();
        assert!(matches!(err, Error::DegreeBoundTooSmall { .. }));
    }

    #[test]
    fn hypersurface_2_7() {
        let r = ring(&[2, 7]);
        let m = MonomialFractionalIdeal::maximal(r.semigroup.clone());
        let p = Presentation::of_quotient(r, &m).unwrap();
        let res = minimal_resolution(&p, 4, None).unwrap();
        assert_eq!(res.betti(), vec![1, 2, 2, 2, 2]);
        res.verify_complex().unwrap();
        res.verify_exactness().unwrap();
    }
}
