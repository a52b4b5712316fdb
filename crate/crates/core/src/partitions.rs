//! Integer partitions, compositions, and the shape operations used by the
//! tableau and character code.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Indexing past the last part yields `0`, which matches the usual
/// convention of padding a partition with zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting increasing or zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts the given positive parts into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part at 0-based `i`, or 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        contains(self, inner)
    }

    /// Iterates over the (row, column) cells of the Young diagram, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated text form; `-` (or an empty string) is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A sequence of nonnegative integers where order matters and zeros are
/// allowed. Used for content vectors, never as a shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Composition {
    entries: Vec<usize>,
}

impl Composition {
    pub fn new(entries: Vec<usize>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Entry at 0-based `i`, 0 beyond the end.
    pub fn get(&self, i: usize) -> usize {
        self.entries.get(i).copied().unwrap_or(0)
    }

    /// Drops trailing zeros so that equal contents compare equal.
    pub fn trimmed(mut self) -> Self {
        while self.entries.last() == Some(&0) {
            self.entries.pop();
        }
        self
    }

    /// Interprets the entries as a partition if they are weakly decreasing
    /// after trimming trailing zeros.
    pub fn as_partition(&self) -> Option<Partition> {
        let trimmed = self.clone().trimmed();
        Partition::new(trimmed.entries).ok()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition::new(p.parts().to_vec())
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    let width = p.part(0);
    let parts = (0..width)
        .map(|j| p.parts().iter().take_while(|&&x| x > j).count())
        .collect();
    Partition { parts }
}

/// `inner ⊆ outer` as Young diagrams.
pub fn contains(outer: &Partition, inner: &Partition) -> bool {
    inner.length() <= outer.length()
        && inner.parts().iter().zip(outer.parts()).all(|(i, o)| o >= i)
}

/// The rectangle `(m^t)`.
pub fn make_rectangle(m: usize, t: usize) -> Result<Partition> {
    if m == 0 || t == 0 {
        return Err(Error::InvalidPartition(format!("rectangle needs m, t >= 1 (got {m}, {t})")));
    }
    Ok(Partition { parts: vec![m; t] })
}

/// The hook `(n-d, 1^d)`.
pub fn make_hook(n: usize, d: usize) -> Result<Partition> {
    if n == 0 || d >= n {
        return Err(Error::InvalidHook { n, d });
    }
    let mut parts = vec![n - d];
    parts.extend(std::iter::repeat_n(1, d));
    Ok(Partition { parts })
}

/// Inserts a part `m` into `nu` and re-sorts.
pub fn add_row_sorted(nu: &Partition, m: usize) -> Partition {
    let pos = nu.parts().iter().take_while(|&&p| p >= m).count();
    let mut parts = nu.parts().to_vec();
    if m > 0 {
        parts.insert(pos, m);
    }
    Partition { parts }
}

/// Removes one part equal to `m`, if present. Inverse of [`add_row_sorted`].
pub fn remove_row(nu: &Partition, m: usize) -> Option<Partition> {
    let pos = nu.parts().iter().position(|&p| p == m)?;
    let mut parts = nu.parts().to_vec();
    parts.remove(pos);
    Some(Partition { parts })
}

/// Centralizer order `z_mu = prod_k k^{m_k} m_k!`.
pub fn z_of(mu: &Partition) -> u128 {
    let mut z: u128 = 1;
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let mut mult = 0u128;
        while i < parts.len() && parts[i] == k {
            mult += 1;
            i += 1;
            z *= k as u128 * mult;
        }
    }
    z
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Reverse-lexicographic enumeration of the partitions of `n` with optional
/// bounds on the number of parts and on the largest part.
pub fn partitions_of(
    n: usize,
    max_length: Option<usize>,
    max_part: Option<usize>,
) -> PartitionsOf {
    PartitionsOf::new(n, max_length.unwrap_or(usize::MAX), max_part.unwrap_or(n))
}

/// Iterator returned by [`partitions_of`].
pub struct PartitionsOf {
    max_length: usize,
    max_part: usize,
    next: Option<Vec<usize>>,
}

impl PartitionsOf {
    fn new(n: usize, max_length: usize, max_part: usize) -> Self {
        let mut it = Self { max_length, max_part, next: None };
        it.next = it.fill(Vec::new(), n, max_part.min(n));
        it
    }

    /// Greedily completes `prefix` with the lexicographically largest
    /// admissible tail summing to `rest`, with parts at most `cap`.
    fn fill(&self, mut prefix: Vec<usize>, mut rest: usize, cap: usize) -> Option<Vec<usize>> {
        let mut cap = cap;
        while rest > 0 {
            if cap == 0 || prefix.len() >= self.max_length {
                return None;
            }
            let part = cap.min(rest);
            prefix.push(part);
            rest -= part;
            cap = part;
        }
        Some(prefix)
    }

    fn advance(&self, current: &[usize]) -> Option<Vec<usize>> {
        // Walk back to the last part we can decrement, then refill greedily.
        // A smaller cap never helps a tail that already overflowed the
        // length bound, so one attempt per position suffices.
        let mut prefix = current.to_vec();
        let mut rest = 0usize;
        while let Some(last) = prefix.pop() {
            rest += last;
            if last > 1 {
                let lowered = last - 1;
                let mut candidate = prefix.clone();
                candidate.push(lowered);
                if let Some(done) = self.fill(candidate, rest - lowered, lowered) {
                    return Some(done);
                }
            }
        }
        None
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        debug_assert!(current.iter().all(|&p| p <= self.max_part));
        self.next = self.advance(&current);
        Some(Partition { parts: current })
    }
}
