//! Monomials packed four bits per variable into a `u128`.
//!
//! Each nibble holds an exponent in `0..=7`; the top bit of every nibble is
//! kept clear so it can act as a guard bit for SWAR comparisons.

use crate::monomial::Monomial;

pub const MAX_PACKED_VARS: usize = 32;
pub const MAX_PACKED_EXPONENT: u8 = 7;

const GUARD: u128 = 0x8888_8888_8888_8888_8888_8888_8888_8888;
const LOW: u128 = 0x1111_1111_1111_1111_1111_1111_1111_1111;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Packed(pub u128);

impl Packed {
    pub fn from_monomial(m: &Monomial) -> Option<Packed> {
        if m.nvars() > MAX_PACKED_VARS {
            return None;
        }
        let mut w = 0u128;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > MAX_PACKED_EXPONENT {
                return None;
            }
            w |= (e as u128) << (4 * i);
        }
        Some(Packed(w))
    }

    pub fn to_monomial(self, nvars: usize) -> Monomial {
        Monomial::from_exponents((0..nvars).map(|i| self.exponent(i)).collect())
    }

    /// Exponent of the 0-indexed variable `i`.
    #[inline]
    pub fn exponent(self, i: usize) -> u8 {
        (self.0 >> (4 * i) & 0xf) as u8
    }

    /// Guard bits set where `self_i >= other_i`.
    #[inline]
    fn ge_guards(self, other: Packed) -> u128 {
        ((self.0 | GUARD) - other.0) & GUARD
    }

    #[inline]
    pub fn divides(self, other: Packed) -> bool {
        other.ge_guards(self) == GUARD
    }

    #[inline]
    pub fn lcm(self, other: Packed) -> Packed {
        let ge = self.ge_guards(other) >> 3;
        let mask = ge * 0xf;
        Packed((self.0 & mask) | (other.0 & !mask))
    }

    /// Guard bits of the nibbles where `self_i < other_i`.
    #[inline]
    pub fn lt_guards(self, other: Packed) -> u128 {
        !self.ge_guards(other) & GUARD
    }

    /// Guard bits of the nonzero nibbles.
    #[inline]
    pub fn support_guards(self) -> u128 {
        // adding 7 to a nonzero nibble (at most 7) sets its top bit
        (self.0 + LOW * 7) & GUARD
    }

    pub fn degree(self) -> usize {
        let mut w = self.0;
        let mut d = 0;
        while w != 0 {
            d += (w & 0xf) as usize;
            w >>= 4;
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn exps(n: usize) -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0u8..=7, n)
    }

    proptest! {
        #[test]
        fn swar_matches_scalar(a in exps(32), b in exps(32)) {
            let (ma, mb) = (Monomial::from_exponents(a.clone()), Monomial::from_exponents(b.clone()));
            let (pa, pb) = (Packed::from_monomial(&ma).unwrap(), Packed::from_monomial(&mb).unwrap());
            prop_assert_eq!(pa.divides(pb), ma.divides(&mb));
            prop_assert_eq!(pa.lcm(pb).to_monomial(32), ma.lcm(&mb));
            prop_assert_eq!(pa.degree(), ma.degree());
            let lt = pa.lt_guards(pb);
            let supp = pa.support_guards();
            for i in 0..32 {
                prop_assert_eq!(lt >> (4 * i + 3) & 1 == 1, a[i] < b[i]);
                prop_assert_eq!(supp >> (4 * i + 3) & 1 == 1, a[i] > 0);
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Packed::from_monomial(&Monomial::from_exponents(vec![8])).is_none());
        assert!(Packed::from_monomial(&Monomial::unit(33)).is_none());
    }
}
