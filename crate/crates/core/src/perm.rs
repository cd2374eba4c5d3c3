//! Permutations of [n] in one-line notation, with the Bruhat order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the symmetric group S_n, stored in one-line notation
/// `[w(1) ... w(n)]` with 1-based values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::Parse(format!("not a bijection of [{n}]: {images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The simple reflection s_i (transposition of i and i+1) in S_n.
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "simple reflection index out of range");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// The transposition of a and b.
    pub fn transposition(a: usize, b: usize, n: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n && a != b);
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// The longest element w_0 = [n, n-1, ..., 1].
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// w(k) for 1-based k.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Composition (self ∘ other)(k) = self(other(k)).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(Permutation {
            images: (1..=self.n()).map(|k| self.image(other.image(k))).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// s_i · w (swaps the values i and i+1).
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { images }
    }

    /// w · s_i (swaps the entries in positions i and i+1).
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// True iff ℓ(s_i w) < ℓ(w), i.e. w⁻¹(i) > w⁻¹(i+1).
    pub fn has_left_descent(&self, i: usize) -> bool {
        let mut pos_i = 0;
        let mut pos_i1 = 0;
        for (p, &v) in self.images.iter().enumerate() {
            if v == i {
                pos_i = p;
            } else if v == i + 1 {
                pos_i1 = p;
            }
        }
        pos_i > pos_i1
    }

    /// Smallest i with ℓ(s_i w) < ℓ(w), if any.
    pub fn min_left_descent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.has_left_descent(i))
    }

    /// Bruhat order via the rank-matrix dominance criterion:
    /// u ≤ w iff #{a ≤ i : u(a) ≥ j} ≤ #{a ≤ i : w(a) ≥ j} for all i, j.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        let n = self.n();
        if n != other.n() {
            return Err(Error::RankMismatch(n, other.n()));
        }
        for i in 1..n {
            // running counts of values ≥ j among the first i entries
            for j in 2..=n {
                let cu = self.images[..i].iter().filter(|&&v| v >= j).count();
                let cw = other.images[..i].iter().filter(|&&v| v >= j).count();
                if cu > cw {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Bruhat covers of self: all u·t with ℓ(u·t) = ℓ(u) + 1, t a transposition.
    pub fn bruhat_covers_above(&self) -> Vec<Permutation> {
        let n = self.n();
        let len = self.length();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                let t = Permutation::transposition(a, b, n);
                let c = self.compose(&t).unwrap();
                if c.length() == len + 1 {
                    out.push(c);
                }
            }
        }
        out
    }
}

/// All n! permutations of S_n, in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { images: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        if self.n() < 10 {
            for &v in &self.images {
                write!(f, "{v}")?;
            }
        } else {
            for (i, &v) in self.images.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses "[4231]" (digits, n ≤ 9) or "[10,2,3,...]" (comma separated).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected bracketed one-line notation, got {s:?}")))?;
        let images: Vec<usize> = if inner.contains(',') {
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
                .collect::<Result<_>>()?
        } else {
            inner
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_images(images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_images(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        let s2 = Permutation::simple(2, 3);
        assert_eq!(s2.compose(&s2).unwrap(), Permutation::identity(3));
        assert_eq!(p("[321]").compose(&p("[123]")).unwrap(), p("[321]"));
        // s2 ∘ s3 in S4
        let s2 = Permutation::simple(2, 4);
        let s3 = Permutation::simple(3, 4);
        assert_eq!(s2.compose(&s3).unwrap(), p("[1342]"));
    }

    #[test]
    fn compose_rank_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(a.compose(&b), Err(Error::RankMismatch(3, 4))));
    }

    #[test]
    fn length_examples() {
        assert_eq!(p("[123]").length(), 0);
        assert_eq!(p("[321]").length(), 3);
        assert_eq!(p("[4231]").length(), 5);
    }

    #[test]
    fn longest_element() {
        assert_eq!(Permutation::longest(2), p("[21]"));
        assert_eq!(Permutation::longest(4), p("[4321]"));
        assert_eq!(Permutation::longest(3).length(), 3);
    }

    #[test]
    fn bruhat_examples() {
        let e = Permutation::identity(3);
        for w in all_permutations(3) {
            assert!(e.bruhat_leq(&w).unwrap());
        }
        assert!(p("[132]").bruhat_leq(&p("[312]")).unwrap());
        assert!(p("[3142]").bruhat_leq(&p("[4231]")).unwrap());
        assert!(!p("[321]").bruhat_leq(&p("[312]")).unwrap());
    }

    #[test]
    fn bruhat_agrees_with_length_on_covers() {
        for w in all_permutations(4) {
            for c in w.bruhat_covers_above() {
                assert!(w.bruhat_leq(&c).unwrap());
                assert!(!c.bruhat_leq(&w).unwrap());
            }
        }
    }

    #[test]
    fn parse_roundtrip() {
        assert_eq!(p("[4231]").to_string(), "[4231]");
        let big = Permutation::longest(11);
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }

    #[test]
    fn all_permutations_count() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(1).len(), 1);
    }
}
