//! Monomial fractional ideals of a numerical semigroup ring `k[S]`.
//!
//! A nonzero monomial fractional ideal is a union of shifted copies of S,
//! stored as its unique antichain of minimal generating exponents (possibly
//! negative). All arithmetic is exact set combinatorics: colon, product, sum,
//! powers, trace, conductor, canonical ideal, and m-adic order.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// m-adic order of an ideal; the zero ideal sits inside every power of m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// A monomial fractional ideal, either zero or the union of `e + S` over its
/// minimal exponents `e`. Equality is by the canonical minimal exponent list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialFractionalIdeal {
    semigroup: Arc<NumericalSemigroup>,
    /// None encodes the zero ideal; otherwise a sorted nonempty antichain.
    exponents: Option<Vec<i64>>,
}

impl MonomialFractionalIdeal {
    /// The ideal generated by `exponents`; redundant exponents are dropped.
    /// An empty list gives the zero ideal.
    pub fn new(semigroup: Arc<NumericalSemigroup>, exponents: &[i64]) -> Self {
        if exponents.is_empty() {
            return Self {
                semigroup,
                exponents: None,
            };
        }
        let exps = minimalize(&semigroup, exponents);
        Self {
            semigroup,
            exponents: Some(exps),
        }
    }

    pub fn zero(semigroup: Arc<NumericalSemigroup>) -> Self {
        Self {
            semigroup,
            exponents: None,
        }
    }

    /// The unit ideal R.
    pub fn unit(semigroup: Arc<NumericalSemigroup>) -> Self {
        Self::new(semigroup, &[0])
    }

    /// The maximal ideal m, generated by the semigroup generators.
    pub fn maximal(semigroup: Arc<NumericalSemigroup>) -> Self {
        let exps: Vec<i64> = semigroup.generators().iter().map(|&g| g as i64).collect();
        Self::new(semigroup, &exps)
    }

    /// Principal ideal (t^a).
    pub fn principal(semigroup: Arc<NumericalSemigroup>, a: i64) -> Self {
        Self::new(semigroup, &[a])
    }

    /// Conductor c = (R : Rbar), the set of all integers >= F(S)+1.
    pub fn conductor(semigroup: Arc<NumericalSemigroup>) -> Self {
        let f = semigroup.frobenius();
        let m = semigroup.multiplicity() as i64;
        let exps: Vec<i64> = (f + 1..=f + m).collect();
        Self::new(semigroup, &exps)
    }

    /// Canonical ideal, the gap dual { z : F(S) - z not in S }, normalized so
    /// that its minimal exponent is 0 (automatic for this construction). It
    /// contains R, equals R exactly when S is symmetric, and the semigroup
    /// ring is Gorenstein in that case.
    pub fn canonical(semigroup: Arc<NumericalSemigroup>) -> Self {
        let f = semigroup.frobenius();
        let m = semigroup.multiplicity() as i64;
        let exps: Vec<i64> = (0..=f + m)
            .filter(|&z| !semigroup.contains(f - z))
            .collect();
        Self::new(semigroup, &exps)
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.is_none()
    }

    /// Minimal generating exponents; None for the zero ideal.
    pub fn exponents(&self) -> Option<&[i64]> {
        self.exponents.as_deref()
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.as_ref().is_some_and(|e| e.len() == 1)
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.as_deref() == Some(&[0])
    }

    /// z lies in the ideal iff z - e is a member for some generator e.
    pub fn contains_exponent(&self, z: i64) -> bool {
        match &self.exponents {
            None => false,
            Some(exps) => exps.iter().any(|&e| self.semigroup.contains(z - e)),
        }
    }

    /// Set containment, tested on generators.
    pub fn is_subideal_of(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        match &self.exponents {
            None => Ok(true),
            Some(exps) => Ok(exps.iter().all(|&e| other.contains_exponent(e))),
        }
    }

    /// All exponents lie in S, i.e. the ideal sits inside R.
    pub fn is_integral(&self) -> bool {
        match &self.exponents {
            None => true,
            Some(exps) => exps.iter().all(|&e| self.semigroup.contains(e)),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.semigroup.generators() != other.semigroup.generators() {
            return Err(Error::MixedSemigroups);
        }
        Ok(())
    }

    /// Colon ideal (X : M) = { z : z + M is contained in X }, for M nonzero.
    ///
    /// Scan window: any colon element z satisfies z >= min(X) - max(M), and
    /// every z >= min(X) + F + 1 - min(M) works because z + m >= min(X) + F + 1
    /// lands in the full tail of X. Minimal generators therefore appear at
    /// most a1 - 1 above that stable bound, and the scan covers them all.
    pub fn colon(&self, m: &Self) -> Result<Self> {
        self.check_same(m)?;
        let m_exps = m.exponents().ok_or(Error::ZeroDivisorIdeal)?;
        let Some(x_exps) = self.exponents() else {
            return Ok(Self::zero(self.semigroup.clone())); // (0 : M) = 0 in a domain
        };
        let f = self.semigroup.frobenius();
        let a1 = self.semigroup.multiplicity() as i64;
        let x_min = *x_exps.first().unwrap();
        let m_min = *m_exps.first().unwrap();
        let m_max = *m_exps.last().unwrap();
        let lo = x_min - m_max;
        let hi = x_min + f + 1 - m_min + a1;
        let hits: Vec<i64> = (lo..=hi)
            .filter(|&z| m_exps.iter().all(|&e| self.contains_exponent(z + e)))
            .collect();
        Ok(Self::new(self.semigroup.clone(), &hits))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        match (&self.exponents, &other.exponents) {
            (Some(a), Some(b)) => {
                let sums: Vec<i64> = a
                    .iter()
                    .flat_map(|&x| b.iter().map(move |&y| x + y))
                    .collect();
                Ok(Self::new(self.semigroup.clone(), &sums))
            }
            _ => Ok(Self::zero(self.semigroup.clone())),
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        match (&self.exponents, &other.exponents) {
            (Some(a), Some(b)) => {
                let mut all = a.clone();
                all.extend_from_slice(b);
                Ok(Self::new(self.semigroup.clone(), &all))
            }
            (Some(_), None) => Ok(self.clone()),
            (None, _) => Ok(other.clone()),
        }
    }

    /// I^n, with I^0 = R.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(self.semigroup.clone());
        for _ in 0..n {
            acc = acc.product(self).unwrap();
        }
        acc
    }

    /// Trace ideal tr(M) = (R : M) M. Idempotent; equals R exactly when R is
    /// a direct summand of M, e.g. for every principal ideal.
    pub fn trace(&self) -> Result<Self> {
        let unit = Self::unit(self.semigroup.clone());
        unit.tau(self)
    }

    /// tau_X(M) = (X : M) M, the sum of images of all maps M -> X.
    pub fn tau(&self, m: &Self) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::ZeroDivisorIdeal);
        }
        self.colon(m)?.product(m)
    }

    pub fn is_trace_ideal(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroDivisorIdeal);
        }
        Ok(self.trace()? == *self)
    }

    /// m-adic order: the largest n with I inside m^n. For a monomial ideal
    /// this is the least maximal factorization length over the generators;
    /// the zero ideal has infinite order. Defined for integral ideals.
    pub fn ord(&self) -> Result<Order> {
        let Some(exps) = self.exponents() else {
            return Ok(Order::Infinite);
        };
        let mut best = u64::MAX;
        for &e in exps {
            if e < 0 || !self.semigroup.contains(e) {
                return Err(Error::NotIntegral { exponent: e });
            }
            best = best.min(self.semigroup.max_factor_length(e as u64)?);
        }
        Ok(Order::Finite(best))
    }
}

impl fmt::Display for MonomialFractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exponents {
            None => write!(f, "0"),
            Some(exps) => {
                write!(f, "[")?;
                for (i, e) in exps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Sorted antichain of minimal exponents: e is dropped when e - e' is a
/// member for some kept e' < e.
fn minimalize(s: &NumericalSemigroup, exponents: &[i64]) -> Vec<i64> {
    let mut exps = exponents.to_vec();
    exps.sort_unstable();
    exps.dedup();
    let mut kept: Vec<i64> = Vec::with_capacity(exps.len());
    for e in exps {
        if !kept.iter().any(|&k| s.contains(e - k)) {
            kept.push(e);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{enumerate_semigroups, EnumerationFilter};
    use proptest::prelude::*;

    fn sgp(gens: &[u64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    #[test]
    fn minimalization() {
        let s = sgp(&[3, 4, 5]);
        let i = MonomialFractionalIdeal::new(s.clone(), &[6, 7, 8, 9, 10]);
        // 9 = 6+3 and 10 = 6+4 are redundant over <3,4,5>.
        assert_eq!(i.exponents(), Some(&[6, 7, 8][..]));
        let z = MonomialFractionalIdeal::new(s, &[]);
        assert!(z.is_zero());
    }

    #[test]
    fn colon_examples() {
        let s = sgp(&[3, 5]);
        let r = MonomialFractionalIdeal::unit(s.clone());
        assert_eq!(r.colon(&r).unwrap(), r);

        let c = MonomialFractionalIdeal::conductor(s.clone());
        assert_eq!(c.exponents(), Some(&[8, 9, 10][..]));
        let rc = r.colon(&c).unwrap();
        assert_eq!(rc.exponents(), Some(&[0, 1, 2][..]));

        let m = MonomialFractionalIdeal::maximal(s.clone());
        let mm = m.colon(&m).unwrap();
        assert_eq!(mm.exponents(), Some(&[0, 7][..]));

        let z = MonomialFractionalIdeal::zero(s);
        assert_eq!(r.colon(&z), Err(Error::ZeroDivisorIdeal));
    }

    #[test]
    fn product_and_power() {
        let s = sgp(&[3, 4, 5]);
        let m = MonomialFractionalIdeal::maximal(s.clone());
        let m2 = m.product(&m).unwrap();
        assert_eq!(m2.exponents(), Some(&[6, 7, 8][..]));
        let r = MonomialFractionalIdeal::unit(s.clone());
        let i = MonomialFractionalIdeal::new(s, &[4, 6]);
        assert_eq!(i.product(&r).unwrap(), i);

        let s35 = sgp(&[3, 5]);
        let m = MonomialFractionalIdeal::maximal(s35.clone());
        assert_eq!(m.power(3).exponents(), Some(&[9, 11, 13][..]));
        assert!(m.power(0).is_unit());

        let other = MonomialFractionalIdeal::maximal(sgp(&[2, 7]));
        assert_eq!(m.product(&other), Err(Error::MixedSemigroups));
    }

    #[test]
    fn trace_examples() {
        let s = sgp(&[3, 5]);
        for a in [3i64, 5, 8, 100] {
            let p = MonomialFractionalIdeal::principal(s.clone(), a);
            assert!(p.trace().unwrap().is_unit(), "trace of principal is R");
        }
        let c = MonomialFractionalIdeal::conductor(s.clone());
        assert_eq!(c.trace().unwrap(), c);
        assert!(c.is_trace_ideal().unwrap());
        let m = MonomialFractionalIdeal::maximal(s.clone());
        assert_eq!(m.trace().unwrap(), m);
        assert!(!MonomialFractionalIdeal::principal(s, 3)
            .is_trace_ideal()
            .unwrap());
    }

    #[test]
    fn tau_examples() {
        let s = sgp(&[3, 4, 5]);
        let w = MonomialFractionalIdeal::canonical(s.clone());
        assert_eq!(w.tau(&w).unwrap(), w);
        let r = MonomialFractionalIdeal::unit(s.clone());
        assert_eq!(w.tau(&r).unwrap(), w);
        let m = MonomialFractionalIdeal::maximal(s);
        assert_eq!(r.tau(&m).unwrap(), m.trace().unwrap());
    }

    #[test]
    fn conductor_examples() {
        assert!(MonomialFractionalIdeal::conductor(sgp(&[1])).is_unit());
        let s = sgp(&[3, 4, 5]);
        let c = MonomialFractionalIdeal::conductor(s.clone());
        assert_eq!(c, MonomialFractionalIdeal::maximal(s));
    }

    #[test]
    fn canonical_examples() {
        assert!(MonomialFractionalIdeal::canonical(sgp(&[3, 5])).is_unit());
        assert!(MonomialFractionalIdeal::canonical(sgp(&[1])).is_unit());
        let w = MonomialFractionalIdeal::canonical(sgp(&[3, 4, 5]));
        assert_eq!(w.exponents(), Some(&[0, 1][..]));
    }

    #[test]
    fn ord_examples() {
        let s = sgp(&[3, 5]);
        assert_eq!(
            MonomialFractionalIdeal::conductor(s.clone()).ord().unwrap(),
            Order::Finite(2)
        );
        assert_eq!(
            MonomialFractionalIdeal::unit(s.clone()).ord().unwrap(),
            Order::Finite(0)
        );
        assert_eq!(
            MonomialFractionalIdeal::zero(s.clone()).ord().unwrap(),
            Order::Infinite
        );
        assert_eq!(
            MonomialFractionalIdeal::new(s, &[-1, 4]).ord(),
            Err(Error::NotIntegral { exponent: -1 })
        );
        assert_eq!(
            MonomialFractionalIdeal::conductor(sgp(&[3, 4, 5]))
                .ord()
                .unwrap(),
            Order::Finite(1)
        );
    }

    #[test]
    fn canonical_duality() {
        // (w : (w : I)) = I for nonzero monomial ideals in dimension one.
        for gens in [
            vec![3u64, 5],
            vec![3, 4, 5],
            vec![4, 9],
            vec![5, 6, 7, 8, 9],
        ] {
            let s = sgp(&gens);
            let w = MonomialFractionalIdeal::canonical(s.clone());
            for exps in [
                vec![0i64],
                gens.iter().map(|&g| g as i64).collect(),
                vec![6, 8, 10],
            ] {
                let i = MonomialFractionalIdeal::new(s.clone(), &exps);
                let dual = w.colon(&i).unwrap();
                let double = w.colon(&dual).unwrap();
                assert_eq!(double, i, "duality failed for {i} over {s}");
            }
        }
    }

    #[test]
    fn gorenstein_detection() {
        for s in enumerate_semigroups(&EnumerationFilter::by_genus(7)).unwrap() {
            let w = MonomialFractionalIdeal::canonical(s.clone());
            let tr = w.trace().unwrap();
            assert_eq!(tr.is_unit(), s.is_symmetric(), "over {s}");
        }
    }

    #[test]
    fn conductor_order_below_loewy_length() {
        // ord(c) <= llmon - 1 on every enumerated proper semigroup.
        for s in enumerate_semigroups(&EnumerationFilter::by_genus(7)).unwrap() {
            let ord = MonomialFractionalIdeal::conductor(s.clone())
                .ord()
                .unwrap()
                .finite()
                .unwrap();
            let ll = s.monomial_loewy_length(None);
            assert!(ord < ll, "over {s}: ord {ord}, llmon {ll}");
        }
    }

    /// Materialized window oracle used by the property tests below.
    #[derive(Debug)]
    struct SetIdeal {
        lo: i64,
        members: Vec<bool>, // membership on [lo, hi]
    }

    impl SetIdeal {
        fn build(i: &MonomialFractionalIdeal, lo: i64, hi: i64) -> Self {
            let members = (lo..=hi).map(|z| i.contains_exponent(z)).collect();
            Self { lo, members }
        }
        fn contains(&self, z: i64) -> bool {
            let idx = z - self.lo;
            idx >= 0 && (idx as usize) < self.members.len() && self.members[idx as usize]
        }
    }

    /// Pool of semigroups with F <= 60; sampling an index avoids the reject
    /// storms a raw generator strategy would hit on the gcd-1 constraint.
    fn arb_semigroup() -> impl Strategy<Value = Arc<NumericalSemigroup>> {
        let pool: Vec<Arc<NumericalSemigroup>> = [
            &[2u64, 3][..],
            &[3, 5],
            &[2, 7],
            &[3, 4, 5],
            &[4, 9],
            &[4, 5, 6, 7],
            &[5, 7, 9, 11],
            &[4, 6, 9],
            &[5, 6, 7],
            &[3, 7],
            &[5, 8],
            &[7, 8],
        ]
        .iter()
        .map(|g| sgp(g))
        .collect();
        (0..pool.len()).prop_map(move |i| pool[i].clone())
    }

    fn arb_exponents() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-20i64..=40, 1..=4)
    }

    proptest! {
        #[test]
        fn membership_matches_set_oracle(s in arb_semigroup(), exps in arb_exponents()) {
            let i = MonomialFractionalIdeal::new(s.clone(), &exps);
            // Oracle from the raw generator list, before minimalization.
            for z in -100i64..=200 {
                let raw = exps.iter().any(|&e| s.contains(z - e));
                prop_assert_eq!(i.contains_exponent(z), raw);
            }
        }

        #[test]
        fn colon_matches_set_oracle(
            s in arb_semigroup(),
            xe in arb_exponents(),
            me in arb_exponents()
        ) {
            let x = MonomialFractionalIdeal::new(s.clone(), &xe);
            let m = MonomialFractionalIdeal::new(s.clone(), &me);
            let c = x.colon(&m).unwrap();
            let x_set = SetIdeal::build(&x, -100, 200);
            // z in (X : M) iff z + y in X for every y in M; past the stable
            // tail of X the checks hold automatically, so the window suffices.
            let x_min = x.exponents().unwrap().iter().min().copied().unwrap();
            let stable = x_min + s.frobenius() + 1;
            for z in -100i64..=100 {
                let mut ok = true;
                for y in -100i64..=200 {
                    if m.contains_exponent(y) && z + y < stable && !x_set.contains(z + y) {
                        ok = false;
                        break;
                    }
                }
                prop_assert_eq!(c.contains_exponent(z), ok, "z = {}", z);
            }
        }

        #[test]
        fn product_matches_set_oracle(
            s in arb_semigroup(),
            ae in arb_exponents(),
            be in arb_exponents()
        ) {
            let a = MonomialFractionalIdeal::new(s.clone(), &ae);
            let b = MonomialFractionalIdeal::new(s.clone(), &be);
            let p = a.product(&b).unwrap();
            for z in -60i64..=120 {
                let brute = ae.iter().any(|&x| {
                    be.iter().any(|&y| s.contains(z - x - y))
                });
                prop_assert_eq!(p.contains_exponent(z), brute);
            }
        }

        #[test]
        fn sum_matches_union(s in arb_semigroup(), ae in arb_exponents(), be in arb_exponents()) {
            let a = MonomialFractionalIdeal::new(s.clone(), &ae);
            let b = MonomialFractionalIdeal::new(s.clone(), &be);
            let u = a.sum(&b).unwrap();
            for z in -60i64..=120 {
                prop_assert_eq!(
                    u.contains_exponent(z),
                    a.contains_exponent(z) || b.contains_exponent(z)
                );
            }
        }

        #[test]
        fn trace_is_idempotent(s in arb_semigroup(), exps in arb_exponents()) {
            let i = MonomialFractionalIdeal::new(s, &exps);
            let t = i.trace().unwrap();
            prop_assert_eq!(t.trace().unwrap(), t);
        }

        #[test]
        fn ord_is_superadditive(s in arb_semigroup(), ae in arb_exponents(), be in arb_exponents()) {
            let members = |exps: &[i64]| -> Vec<i64> {
                exps.iter().map(|&e| e.rem_euclid(30)).filter(|&e| s.contains(e)).collect()
            };
            let (ae, be) = (members(&ae), members(&be));
            prop_assume!(!ae.is_empty() && !be.is_empty());
            let a = MonomialFractionalIdeal::new(s.clone(), &ae);
            let b = MonomialFractionalIdeal::new(s.clone(), &be);
            let oa = a.ord().unwrap().finite().unwrap();
            let ob = b.ord().unwrap().finite().unwrap();
            let op = a.product(&b).unwrap().ord().unwrap().finite().unwrap();
            prop_assert!(op >= oa + ob);
        }

        #[test]
        fn canonical_duality_random(s in arb_semigroup(), exps in arb_exponents()) {
            // (w : (w : I)) = I for every nonzero monomial fractional ideal
            // in the one-dimensional setting.
            let i = MonomialFractionalIdeal::new(s.clone(), &exps);
            let w = MonomialFractionalIdeal::canonical(s);
            let dual = w.colon(&i).unwrap();
            prop_assert_eq!(w.colon(&dual).unwrap(), i);
        }
    }
}
