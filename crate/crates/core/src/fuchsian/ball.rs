use super::group::FuchsianGroup;
use super::word::{letter_key, Word};
use crate::error::Result;
use crate::exec;
use crate::hyperbolic::{MatrixDD, MoebiusMap};
use crate::{Config, Precision};

#[derive(Debug, Clone, PartialEq)]
pub struct BallEntry {
    pub word: Word,
    pub map: MoebiusMap,
}

/// All freely reduced words of length at most `depth` together with their
/// matrices, ordered by length and then by the canonical letter order.
#[derive(Debug, Clone)]
pub struct Ball {
    depth: usize,
    entries: Vec<BallEntry>,
    /// Start index of each length shell; `shells[k]..shells[k + 1]` holds
    /// the words of length `k`.
    shells: Vec<usize>,
}

/// Number of reduced words of length `≤ depth` in a free group of the given rank.
pub fn ball_size(rank: usize, depth: usize) -> usize {
    if rank == 0 {
        return 1;
    }
    let mut total = 1usize;
    let mut shell = 2 * rank;
    for _ in 0..depth {
        total += shell;
        shell *= 2 * rank - 1;
    }
    total
}

fn sorted_letters(rank: usize) -> Vec<i32> {
    let mut letters: Vec<i32> = (1..=rank as i32).flat_map(|k| [k, -k]).collect();
    letters.sort_by_key(|&l| letter_key(l));
    letters
}

impl Ball {
    pub fn new(group: &FuchsianGroup, depth: usize, cfg: &Config) -> Result<Self> {
        group.require_free()?;
        let letters = sorted_letters(group.rank());
        let mut entries = vec![BallEntry {
            word: Word::identity(),
            map: MoebiusMap::IDENTITY,
        }];
        let mut shells = vec![0, 1];
        match cfg.precision {
            Precision::Double => {
                let mut frontier: Vec<(Word, MoebiusMap)> =
                    vec![(Word::identity(), MoebiusMap::IDENTITY)];
                for _ in 0..depth {
                    frontier = exec::flat_map(cfg.exec, &frontier, |(w, m)| {
                        letters
                            .iter()
                            .filter(|&&l| w.letters().last() != Some(&-l))
                            .map(|&l| (w.pushed(l), *m * group.letter_map(l)))
                            .collect()
                    });
                    entries.extend(frontier.iter().map(|(w, m)| BallEntry {
                        word: w.clone(),
                        map: *m,
                    }));
                    shells.push(entries.len());
                }
            }
            Precision::Extended => {
                let gens: Vec<MatrixDD> = letters
                    .iter()
                    .map(|&l| group.letter_map(l).to_dd())
                    .collect();
                let mut frontier: Vec<(Word, MatrixDD)> =
                    vec![(Word::identity(), MatrixDD::IDENTITY)];
                for _ in 0..depth {
                    frontier = exec::flat_map(cfg.exec, &frontier, |(w, m)| {
                        letters
                            .iter()
                            .zip(&gens)
                            .filter(|(&l, _)| w.letters().last() != Some(&-l))
                            .map(|(&l, g)| (w.pushed(l), *m * *g))
                            .collect()
                    });
                    entries.extend(frontier.iter().map(|(w, m)| BallEntry {
                        word: w.clone(),
                        map: m.to_f64(),
                    }));
                    shells.push(entries.len());
                }
            }
        }
        Ok(Ball {
            depth,
            entries,
            shells,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BallEntry] {
        &self.entries
    }

    /// Entries other than the identity.
    pub fn nontrivial(&self) -> &[BallEntry] {
        &self.entries[1..]
    }

    /// Words of length exactly `k`.
    pub fn shell(&self, k: usize) -> &[BallEntry] {
        if k > self.depth {
            return &[];
        }
        &self.entries[self.shells[k]..self.shells[k + 1]]
    }

    /// Words of maximal length.
    pub fn sphere(&self) -> &[BallEntry] {
        self.shell(self.depth)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &MoebiusMap)> {
        self.entries.iter().map(|e| (&e.word, &e.map))
    }
}

/// Enumerates the depth-ball of `group`; see [`Ball`].
pub fn ball(group: &FuchsianGroup, depth: usize, cfg: &Config) -> Result<Ball> {
    Ball::new(group, depth, cfg)
}
