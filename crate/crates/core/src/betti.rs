use num_bigint::BigUint;

/// Torsion in one homology degree, as the invariant factors > 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionSummand {
    pub degree: usize,
    pub factors: Vec<BigUint>,
}

/// Ranks of the integral homology groups, lowest degree first, plus any
/// torsion found. The rank formulas always produce free groups; the grid
/// oracle reports whatever it computes, which is how "no torsion" gets
/// verified rather than assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    pub ranks: Vec<u64>,
    pub torsion: Vec<TorsionSummand>,
}

impl BettiVector {
    pub fn free(ranks: Vec<u64>) -> Self {
        BettiVector { ranks, torsion: Vec::new() }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Element-wise equality with zero-padding on the right, torsion
    /// included. This is the agreement test between a length-k formula
    /// output and a length-(k+1) oracle output.
    pub fn agrees_with(&self, other: &BettiVector) -> bool {
        let len = self.ranks.len().max(other.ranks.len());
        let get = |v: &[u64], j: usize| v.get(j).copied().unwrap_or(0);
        (0..len).all(|j| get(&self.ranks, j) == get(&other.ranks, j))
            && self.torsion == other.torsion
    }
}

/// Alternating sum of the ranks.
pub fn euler_characteristic(bv: &BettiVector) -> i64 {
    bv.ranks
        .iter()
        .enumerate()
        .map(|(j, &r)| if j % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_alternates() {
        assert_eq!(euler_characteristic(&BettiVector::free(vec![1, 6, 1])), -4);
        assert_eq!(euler_characteristic(&BettiVector::free(vec![1, 1])), 0);
        assert_eq!(euler_characteristic(&BettiVector::free(vec![0, 0, 0])), 0);
    }

    #[test]
    fn agreement_pads_with_zeros() {
        let formula = BettiVector::free(vec![1, 1]);
        let oracle = BettiVector::free(vec![1, 1, 0]);
        assert!(formula.agrees_with(&oracle));
        assert!(!formula.agrees_with(&BettiVector::free(vec![1, 1, 1])));
    }
}
