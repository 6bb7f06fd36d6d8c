use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A finitely generated abelian group `Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` in
/// invariant-factor form: `1 < d_1 | d_2 | ... | d_k`.
///
/// The representation is canonical, so structural equality is group
/// isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    /// Builds the group `Z^rank ⊕ ⊕_i Z/orders[i]` from cyclic orders in any
    /// order. Zero orders count as free summands, units vanish, signs are
    /// ignored.
    pub fn from_cyclic<I>(rank: usize, orders: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let mut rank = rank;
        let mut finite = Vec::new();
        for d in orders {
            let d: BigInt = d.into().abs();
            if d.is_zero() {
                rank += 1;
            } else if !d.is_one() {
                finite.push(d);
            }
        }
        AbelianGroup { rank, torsion: normalize_chain(finite) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Invariant factors of the torsion subgroup, ascending along the
    /// divisibility chain.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn torsion_subgroup(&self) -> AbelianGroup {
        AbelianGroup { rank: 0, torsion: self.torsion.clone() }
    }

    /// Number of cyclic factors of even order: the dimension of the 2-torsion
    /// tensored down to the field with two elements.
    pub fn even_torsion_count(&self) -> usize {
        self.torsion.iter().filter(|d| d.is_even()).count()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup::from_cyclic(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }
}

/// Rebuilds a divisibility chain from arbitrary finite cyclic orders using
/// `Z/a ⊕ Z/b ≅ Z/gcd(a,b) ⊕ Z/lcm(a,b)`.
fn normalize_chain(mut orders: Vec<BigInt>) -> Vec<BigInt> {
    let n = orders.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = orders[i].gcd(&orders[j]);
            let l = orders[i].lcm(&orders[j]);
            orders[i] = g;
            orders[j] = l;
        }
    }
    orders.retain(|d| !d.is_one());
    orders
}

/// Renders `Z^r ⊕ Z/d ⊕ ...`, compressing repeated factors as `(Z/d)^k`;
/// the trivial group prints as `0`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            if run == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{run}"));
            }
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Canonical form through prime-power components, the textbook route.
    fn prime_power_chain(orders: &[u64]) -> Vec<BigInt> {
        let mut powers: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &d in orders {
            let mut d = d;
            let mut p = 2;
            while d > 1 {
                if d % p == 0 {
                    let mut q = 1;
                    while d % p == 0 {
                        d /= p;
                        q *= p;
                    }
                    powers.entry(p).or_default().push(q);
                }
                p += 1;
            }
        }
        let len = powers.values().map(Vec::len).max().unwrap_or(0);
        let mut chain = vec![1u64; len];
        for qs in powers.values_mut() {
            qs.sort_unstable_by(|a, b| b.cmp(a));
            for (k, q) in qs.iter().enumerate() {
                chain[len - 1 - k] *= q;
            }
        }
        chain.into_iter().map(BigInt::from).collect()
    }

    #[test]
    fn chain_normalization() {
        let g = AbelianGroup::from_cyclic(0, [2, 3]);
        assert_eq!(g.torsion(), ints(&[6]).as_slice());
        let g = AbelianGroup::from_cyclic(1, [4, 6, 1, 0, -2]);
        assert_eq!(g.rank(), 2);
        assert_eq!(g.torsion(), ints(&[2, 2, 12]).as_slice());
    }

    #[test]
    fn rendering() {
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::free(10).to_string(), "Z^10");
        assert_eq!(AbelianGroup::from_cyclic(1, [2, 6]).to_string(), "Z ⊕ Z/2 ⊕ Z/6");
        assert_eq!(AbelianGroup::from_cyclic(0, [2; 9]).to_string(), "(Z/2)^9");
    }

    proptest! {
        #[test]
        fn matches_prime_power_route(orders in prop::collection::vec(2u64..60, 0..6)) {
            let g = AbelianGroup::from_cyclic(0, orders.iter().copied());
            prop_assert_eq!(g.torsion().to_vec(), prime_power_chain(&orders));
        }

        #[test]
        fn direct_sum_is_commutative(
            a in prop::collection::vec(2u64..40, 0..4),
            b in prop::collection::vec(2u64..40, 0..4),
            r in 0usize..3,
        ) {
            let ga = AbelianGroup::from_cyclic(r, a);
            let gb = AbelianGroup::from_cyclic(0, b);
            prop_assert_eq!(ga.direct_sum(&gb), gb.direct_sum(&ga));
        }
    }
}
