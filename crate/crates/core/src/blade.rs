//! Basis blades of Cl(2,6) as 8-bit generator sets.

/// A basis blade: bit `i` set means generator `i` participates, with the
/// generators kept in canonical ascending order.
///
/// Generators 0-3 are the frame vectors of particle space 1, generators 4-7
/// those of particle space 2. The fixed metric is (+,-,-,-,+,-,-,-).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Blade(pub u8);

/// Generators that square to -1 under the fixed metric.
const NEGATIVE_MASK: u8 = 0b1110_1110;

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Blade holding the single generator `i` (0..=7).
    pub fn generator(i: u8) -> Blade {
        assert!(i < 8, "generator index {i} out of range");
        Blade(1 << i)
    }

    pub fn grade(self) -> u8 {
        self.0.count_ones() as u8
    }

    /// Geometric product of two basis blades.
    ///
    /// The sign counts the transpositions needed to move every generator of
    /// `other` into canonical position past the generators of `self`, then
    /// contracts repeated generators through the metric.
    pub fn product(self, other: Blade) -> (Blade, f64) {
        let mut swaps = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let i = rest.trailing_zeros();
            swaps += (u32::from(self.0) >> (i + 1)).count_ones();
            rest &= rest - 1;
        }
        let mut negative = swaps & 1 == 1;
        if (self.0 & other.0 & NEGATIVE_MASK).count_ones() & 1 == 1 {
            negative = !negative;
        }
        (Blade(self.0 ^ other.0), if negative { -1.0 } else { 1.0 })
    }

    /// Sign picked up when the generator order is reversed: (-1)^(k(k-1)/2).
    pub fn reverse_sign(self) -> f64 {
        match self.grade() % 4 {
            2 | 3 => -1.0,
            _ => 1.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_squares() {
        for i in 0..8u8 {
            let b = Blade::generator(i);
            let (m, s) = b.product(b);
            assert_eq!(m, Blade::SCALAR);
            let expected = if i % 4 == 0 { 1.0 } else { -1.0 };
            assert_eq!(s, expected, "generator {i}");
        }
    }

    #[test]
    fn cross_space_anticommutes() {
        let a = Blade::generator(0);
        let b = Blade::generator(4);
        let (mab, sab) = a.product(b);
        let (mba, sba) = b.product(a);
        assert_eq!(mab, mba);
        assert_eq!(sab, -sba);
    }

    #[test]
    fn reverse_signs() {
        assert_eq!(Blade(0b0000_0011).reverse_sign(), -1.0);
        assert_eq!(Blade(0b0000_0001).reverse_sign(), 1.0);
        assert_eq!(Blade(0b0000_1111).reverse_sign(), 1.0);
        assert_eq!(Blade(0b0001_1111).reverse_sign(), 1.0);
        assert_eq!(Blade(0b0011_1111).reverse_sign(), -1.0);
    }
}
