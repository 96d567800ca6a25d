//! Integer Laurent polynomials, used to solve the commutation equation
//! `a·(1 - x^t) = b·(1 - x^s)` in the base of `Z wr Z`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Laurent(BTreeMap<i64, BigInt>);

impl Laurent {
    pub fn from_map(map: &BTreeMap<i64, BigInt>) -> Self {
        Self(map.clone())
    }

    pub fn into_map(self) -> BTreeMap<i64, BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `1 - x^e`.
    pub fn one_minus_monomial(e: i64) -> Self {
        let mut map = BTreeMap::new();
        if e != 0 {
            map.insert(0, BigInt::one());
            map.insert(e, -BigInt::one());
        }
        Self(map)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &other.0 {
                *map.entry(ea + eb).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Self(map)
    }

    /// Exact quotient `self / divisor` in `Z[x, x⁻¹]`, or `None` when the
    /// divisor does not divide. Monomial factors are units and get split off
    /// first; the rest is long division in `Z[x]`, which is exact for integer
    /// quotients because the divisor's constant term is then nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(
            !divisor.is_zero(),
            "division by the zero Laurent polynomial"
        );
        if self.is_zero() {
            return Some(Self::default());
        }
        let (num_low, num) = self.dense();
        let (den_low, den) = divisor.dense();
        if num.len() < den.len() {
            return None;
        }
        let lead = den.last().expect("nonzero divisor");
        let den_deg = den.len() - 1;
        let mut rem = num;
        let mut quot = vec![BigInt::zero(); rem.len() - den_deg];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + den_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let offset = num_low - den_low;
        let map = quot
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (offset + i as i64, c))
            .collect();
        Some(Self(map))
    }

    fn dense(&self) -> (i64, Vec<BigInt>) {
        let low = *self.0.keys().next().expect("nonzero polynomial");
        let high = *self.0.keys().next_back().expect("nonzero polynomial");
        let mut coeffs = vec![BigInt::zero(); (high - low) as usize + 1];
        for (e, c) in &self.0 {
            coeffs[(e - low) as usize] = c.clone();
        }
        (low, coeffs)
    }
}
