use std::fmt;

use serde::{Serialize, Serializer};

use crate::color::{Color, ColorSet};

/// A cyclic ordering of `{0, ..., d}` up to rotation and reflection.
///
/// Stored canonically with `d` last and the first entry smaller than the
/// entry before `d`, so there are exactly `d!/2` of them for `d >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicPermutation {
    order: Vec<Color>,
}

impl CyclicPermutation {
    /// Canonical form of any arrangement of `{0, ..., d}` read cyclically.
    pub fn canonical(sequence: &[Color]) -> Option<Self> {
        let d = sequence.len().checked_sub(1)?;
        let mut seen = vec![false; d + 1];
        for &c in sequence {
            if c > d || std::mem::replace(&mut seen[c], true) {
                return None;
            }
        }
        let at = sequence.iter().position(|&c| c == d)?;
        let mut order: Vec<Color> = (1..=d + 1).map(|k| sequence[(at + k) % (d + 1)]).collect();
        // order now ends with d
        if d >= 2 && order[0] > order[d - 1] {
            order[..d].reverse();
        }
        Some(CyclicPermutation { order })
    }

    /// All canonical cyclic permutations of `{0, ..., d}`, lexicographically.
    pub fn enumerate(dimension: usize) -> Vec<CyclicPermutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(dimension + 1);
        let mut used = vec![false; dimension];
        fn rec(
            d: usize,
            current: &mut Vec<Color>,
            used: &mut [bool],
            out: &mut Vec<CyclicPermutation>,
        ) {
            if current.len() == d {
                if d < 2 || current[0] < current[d - 1] {
                    let mut order = current.clone();
                    order.push(d);
                    out.push(CyclicPermutation { order });
                }
                return;
            }
            for c in 0..d {
                if !used[c] {
                    used[c] = true;
                    current.push(c);
                    rec(d, current, used, out);
                    current.pop();
                    used[c] = false;
                }
            }
        }
        rec(dimension, &mut current, &mut used, &mut out);
        out
    }

    pub fn dimension(&self) -> usize {
        self.order.len() - 1
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.order
    }

    pub fn get(&self, i: usize) -> Color {
        self.order[i % self.order.len()]
    }

    /// The `d+1` cyclically consecutive color pairs `{ε_i, ε_{i+1}}`.
    pub fn cyclic_pairs(&self) -> impl Iterator<Item = ColorSet> + '_ {
        (0..self.order.len()).map(move |i| ColorSet::single(self.get(i)).with(self.get(i + 1)))
    }

    /// `{ε_0, ε_{d-1}}`, the two cyclic neighbours of `d`.
    pub fn boundary_pair(&self) -> ColorSet {
        let d = self.dimension();
        ColorSet::single(self.order[0]).with(self.order[d - 1])
    }

    /// For `d = 4`: `(ε_1, ε_3, ε_0, ε_2, 4)`, whose cyclic pairs are the
    /// complement of this permutation's pairs.
    pub fn partner(&self) -> Option<CyclicPermutation> {
        if self.dimension() != 4 {
            return None;
        }
        let e = &self.order;
        CyclicPermutation::canonical(&[e[1], e[3], e[0], e[2], e[4]])
    }

    /// Transposes two colors and re-canonicalizes.
    pub fn swap_colors(&self, a: Color, b: Color) -> CyclicPermutation {
        let swapped: Vec<Color> = self
            .order
            .iter()
            .map(|&c| {
                if c == a {
                    b
                } else if c == b {
                    a
                } else {
                    c
                }
            })
            .collect();
        CyclicPermutation::canonical(&swapped).expect("still a permutation")
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.order.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for CyclicPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_half_factorial() {
        assert_eq!(CyclicPermutation::enumerate(2).len(), 1);
        assert_eq!(CyclicPermutation::enumerate(2)[0].as_slice(), &[0, 1, 2]);
        assert_eq!(CyclicPermutation::enumerate(3).len(), 3);
        assert_eq!(CyclicPermutation::enumerate(4).len(), 12);
        assert_eq!(CyclicPermutation::enumerate(5).len(), 60);
        assert_eq!(CyclicPermutation::enumerate(1).len(), 1);
    }

    /// Brute force: canonicalize all (d+1)! sequences and count distinct classes.
    #[test]
    fn enumeration_matches_canonicalized_brute_force() {
        fn perms(v: Vec<usize>) -> Vec<Vec<usize>> {
            if v.len() <= 1 {
                return vec![v];
            }
            let mut out = Vec::new();
            for i in 0..v.len() {
                let mut rest = v.clone();
                let x = rest.remove(i);
                for mut p in perms(rest) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        for d in 2..=5 {
            let mut classes: Vec<_> = perms((0..=d).collect())
                .iter()
                .map(|s| CyclicPermutation::canonical(s).unwrap())
                .collect();
            classes.sort();
            classes.dedup();
            assert_eq!(classes, CyclicPermutation::enumerate(d));
        }
    }

    #[test]
    fn canonical_handles_rotation_and_reflection() {
        let a = CyclicPermutation::canonical(&[4, 3, 1, 2, 0]).unwrap();
        assert_eq!(a.as_slice(), &[0, 2, 1, 3, 4]);
        assert!(CyclicPermutation::canonical(&[0, 0, 1]).is_none());
        assert!(CyclicPermutation::canonical(&[0, 3, 1]).is_none());
    }

    #[test]
    fn partner_pairs_are_complementary() {
        for eps in CyclicPermutation::enumerate(4) {
            let partner = eps.partner().unwrap();
            let mut all: Vec<ColorSet> = eps.cyclic_pairs().chain(partner.cyclic_pairs()).collect();
            all.sort();
            all.dedup();
            assert_eq!(all.len(), 10, "{eps} vs {partner}");
        }
        assert!(CyclicPermutation::enumerate(3)[0].partner().is_none());
    }

    #[test]
    fn display_format() {
        assert_eq!(
            CyclicPermutation::enumerate(4)[0].to_string(),
            "(0,1,2,3,4)"
        );
    }
}
