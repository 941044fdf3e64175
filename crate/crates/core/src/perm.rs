//! Permutations of a dense index range, stored as image tables.

use crate::error::{Error, Result};

/// A bijection of `0..degree`, with `image[i]` the image of point `i`.
///
/// External serialization goes through [`Permutation::to_one_based`] so that
/// reports keep 1-based labels; the in-memory table is 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            image: (0..degree).collect(),
        }
    }

    /// Builds from an image table, validating bijectivity.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds from disjoint cycles over `0..degree`; points not mentioned are
    /// fixed. Used mostly by tests and the canonical family generators.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut image: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in cycle.windows(2) {
                if w[0] >= degree || w[1] >= degree {
                    return Err(Error::InvalidPermutation("cycle point out of range".into()));
                }
                image[w[0]] = w[1];
            }
            if let (Some(&first), Some(&last)) = (cycle.first(), cycle.last()) {
                if last >= degree {
                    return Err(Error::InvalidPermutation("cycle point out of range".into()));
                }
                image[last] = first;
            }
        }
        Permutation::from_images(image)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.image[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// First point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.image.iter().enumerate().find(|&(i, &x)| i != x).map(|(i, _)| i)
    }

    /// Composition "self then other": the result maps `i` to `other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }

    /// Cycle notation with 1-based points, fixed points omitted; the identity
    /// renders as `()`. Example: `(1, 7)(2, 6)(3, 5)`.
    pub fn cycle_notation(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.image[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.image[cur];
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|p| (p + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// 1-based image table, the form used in JSON reports.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.image.iter().map(|&x| x + 1).collect()
    }

    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        let shifted: Vec<usize> = image
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation("labels are 1-based".into()))
            })
            .collect::<Result<_>>()?;
        Permutation::from_images(shifted)
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let a = Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(5, &[&[2, 3]]).unwrap();
        let ab = a.then(&b);
        // 0 -> a:1 -> b:1; 2 -> a:0 -> b:0; 1 -> a:2 -> b:3
        assert_eq!(ab.apply(0), 1);
        assert_eq!(ab.apply(1), 3);
        assert_eq!(ab.apply(2), 0);
        assert!(a.then(&a.inverse()).is_identity());
        assert!(a.inverse().then(&a).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn cycle_notation_matches_convention() {
        let rev = Permutation::from_images(vec![6, 5, 4, 3, 2, 1, 0]).unwrap();
        assert_eq!(rev.cycle_notation(), "(1, 7)(2, 6)(3, 5)");
        assert_eq!(Permutation::identity(4).cycle_notation(), "()");
    }

    #[test]
    fn one_based_roundtrip() {
        let p = Permutation::from_cycles(6, &[&[0, 1], &[3, 4, 5]]).unwrap();
        let ob = p.to_one_based();
        assert_eq!(Permutation::from_one_based(&ob).unwrap(), p);
    }
}
