use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A freely reduced word in the generators. Letter `k > 0` stands for
/// generator `k - 1`, letter `-k` for its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<i32>);

/// Total order on letters used for canonical forms: `1 < -1 < 2 < -2 < …`.
#[inline]
pub fn letter_key(l: i32) -> (u32, bool) {
    (l.unsigned_abs(), l < 0)
}

fn cmp_letters(a: &[i32], b: &[i32]) -> Ordering {
    a.iter()
        .map(|&l| letter_key(l))
        .cmp(b.iter().map(|&l| letter_key(l)))
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Freely reduces the given letters. Zero letters are rejected.
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn letter(generator: usize, inverse: bool) -> Self {
        let l = generator as i32 + 1;
        Word(vec![if inverse { -l } else { l }])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Appends a letter known not to cancel.
    pub(crate) fn pushed(&self, l: i32) -> Word {
        debug_assert!(self.0.last() != Some(&-l));
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(l);
        Word(v)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&f), Some(&l)) => self.0.len() == 1 || f != -l,
            _ => true,
        }
    }

    /// Strips matching inverse letters from both ends.
    pub fn cyclic_reduction(&self) -> Word {
        let v = &self.0;
        let (mut i, mut j) = (0, v.len());
        while j - i >= 2 && v[i] == -v[j - 1] {
            i += 1;
            j -= 1;
        }
        Word(v[i..j].to_vec())
    }

    fn least_rotation(v: &[i32]) -> Vec<i32> {
        let n = v.len();
        let mut best: Option<Vec<i32>> = None;
        for s in 0..n {
            let rot: Vec<i32> = v[s..].iter().chain(v[..s].iter()).copied().collect();
            if best
                .as_ref()
                .is_none_or(|b| cmp_letters(&rot, b) == Ordering::Less)
            {
                best = Some(rot);
            }
        }
        best.unwrap_or_default()
    }

    /// Canonical representative of the unoriented conjugacy class: the least
    /// rotation of the cyclic reduction of the word or of its inverse.
    pub fn conjugacy_canonical(&self) -> Word {
        let c = self.cyclic_reduction();
        let fwd = Word::least_rotation(&c.0);
        let bwd = Word::least_rotation(&c.inverse().0);
        if cmp_letters(&bwd, &fwd) == Ordering::Less {
            Word(bwd)
        } else {
            Word(fwd)
        }
    }

    /// True when the word is a proper power `u^k`, `k ≥ 2`, up to rotation.
    pub fn is_proper_power(&self) -> bool {
        let c = self.cyclic_reduction();
        let v = &c.0;
        let n = v.len();
        (1..n).any(|p| n.is_multiple_of(p) && (0..n).all(|i| v[i] == v[i % p]))
    }

    /// Lexicographic comparison in the canonical letter order.
    pub fn cmp_canonical(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| cmp_letters(&self.0, &other.0))
    }

    pub fn display_with<'a, S: AsRef<str>>(&'a self, labels: &'a [S]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, labels }
    }
}

struct WordDisplay<'a, S> {
    word: &'a Word,
    labels: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for WordDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, &l) in self.word.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let idx = l.unsigned_abs() as usize - 1;
            match self.labels.get(idx) {
                Some(s) => write!(f, "{}", s.as_ref())?,
                None => write!(f, "g{}", idx + 1)?,
            }
            if l < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NONE: [&str; 0] = [];
        WordDisplay {
            word: self,
            labels: &NONE,
        }
        .fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_inverse() {
        let w = Word::new([1, 2, -2, -1, 1]);
        assert_eq!(w.letters(), &[1]);
        let w = Word::new([1, 2, -1]);
        assert!(w.concat(&w.inverse()).is_empty());
        assert_eq!(Word::new([1, 2]).pow(-2).letters(), &[-2, -1, -2, -1]);
    }

    #[test]
    fn canonical_under_rotation_and_inversion() {
        let w = Word::new([2, 1, -2, 1]);
        let c = w.conjugacy_canonical();
        for rot in [vec![1, -2, 1, 2], vec![-2, 1, 2, 1], vec![1, 2, 1, -2]] {
            assert_eq!(Word::new(rot).conjugacy_canonical(), c);
        }
        assert_eq!(w.inverse().conjugacy_canonical(), c);
        // Conjugating by a letter does not change the class.
        let conj = Word::new([2]).concat(&w).concat(&Word::new([-2]));
        assert_eq!(conj.conjugacy_canonical(), c);
    }

    #[test]
    fn powers_detected() {
        assert!(Word::new([1, 2, 1, 2]).is_proper_power());
        assert!(!Word::new([1, 2, 2]).is_proper_power());
        assert!(!Word::new([1]).is_proper_power());
        assert!(Word::new([2, 1, 2, 1, 2, -2]).is_proper_power());
        assert!(!Word::new([-2, 1, 2, 1, 2, -1, 2]).is_proper_power());
    }

    #[test]
    fn display() {
        let w = Word::new([1, -2]);
        assert_eq!(w.display_with(&["X", "G"]).to_string(), "X G^-1");
        assert_eq!(Word::identity().to_string(), "1");
    }
}
