//! Character-theoretic ground truth: irreducible characters of the
//! symmetric group by the Murnaghan–Nakayama recursion, and Kronecker
//! coefficients as class-weighted sums of character triples.

use std::collections::HashMap;
use std::io::Write;
use std::path::Path;
use std::sync::RwLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{factorial, partitions_of, z_of, Partition};

/// Memo table keyed by (shape, cycle type). Safe to share between threads;
/// concurrent writers always store the same value for a key.
#[derive(Debug, Default)]
pub struct CharacterCache {
    table: RwLock<HashMap<(Partition, Partition), i64>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, shape: &Partition, cycle_type: &Partition) -> Option<i64> {
        let table = self.table.read().expect("cache lock");
        table.get(&(shape.clone(), cycle_type.clone())).copied()
    }

    fn insert(&self, shape: Partition, cycle_type: Partition, value: i64) {
        self.table
            .write()
            .expect("cache lock")
            .insert((shape, cycle_type), value);
    }

    /// Reads `shape|cycle_type|value` lines. A missing file yields an empty
    /// cache.
    pub fn load(path: &Path) -> Result<Self> {
        let cache = Self::new();
        let text = match std::fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e.into()),
        };
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let fields: Vec<&str> = line.split('|').collect();
            let [shape, cycle, value] = fields[..] else {
                return Err(Error::Parse(format!("bad cache line {line:?}")));
            };
            let shape: Partition = shape.parse()?;
            let cycle: Partition = cycle.parse()?;
            if shape.size() != cycle.size() {
                return Err(Error::Parse(format!("size mismatch in cache line {line:?}")));
            }
            let value = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad cache value in {line:?}")))?;
            cache.insert(shape, cycle, value);
        }
        Ok(cache)
    }

    /// Writes the cache through a temporary file renamed into place.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut entries: Vec<_> = self
            .table
            .read()
            .expect("cache lock")
            .iter()
            .map(|((s, c), v)| (s.clone(), c.clone(), *v))
            .collect();
        entries.sort();
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        for (s, c, v) in entries {
            writeln!(tmp, "{s}|{c}|{v}")?;
        }
        tmp.flush()?;
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }
}

fn check_sizes(what: &str, parts: &[&Partition]) -> Result<usize> {
    let n = parts[0].size();
    if parts.iter().any(|p| p.size() != n) {
        let sizes: Vec<String> = parts.iter().map(|p| format!("{p} ({})", p.size())).collect();
        return Err(Error::Query(format!("{what}: sizes differ: {}", sizes.join(", "))));
    }
    Ok(n)
}

/// Shapes left after removing a border strip of size `k`, with the sign
/// `(-1)^height`.
///
/// Works on the beta-set `shape_i + (len - 1 - i)`: removing a strip of
/// size `k` lowers one beta number by `k` onto a free slot, and the height
/// of the strip is the number of beta numbers jumped over.
fn strip_removals(shape: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = shape.length();
    let beta: Vec<usize> = (0..len).map(|i| shape.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

fn mn(shape: &Partition, cycle_type: &Partition, cache: &CharacterCache) -> i64 {
    if cycle_type.is_empty() {
        return 1;
    }
    if let Some(v) = cache.get(shape, cycle_type) {
        return v;
    }
    let rest = Partition::new(cycle_type.parts()[1..].to_vec()).expect("suffix of a partition");
    let value = strip_removals(shape, cycle_type.part(0))
        .into_iter()
        .map(|(smaller, sign)| sign * mn(&smaller, &rest, cache))
        .sum();
    cache.insert(shape.clone(), cycle_type.clone(), value);
    value
}

/// `χ^shape` evaluated on the class of `cycle_type`.
pub fn character(shape: &Partition, cycle_type: &Partition, cache: &CharacterCache) -> Result<i64> {
    check_sizes("character", &[shape, cycle_type])?;
    Ok(mn(shape, cycle_type, cache))
}

/// Degree of the irreducible representation, `χ^shape(1^n)`.
pub fn dimension(shape: &Partition, cache: &CharacterCache) -> u64 {
    let identity = Partition::new(vec![1; shape.size()]).expect("all ones");
    mn(shape, &identity, cache) as u64
}

/// `g(λ, μ, ν) = (1/n!) Σ_ρ (n!/z_ρ) χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)`, in exact
/// integer arithmetic.
pub fn kronecker_oracle(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cache: &CharacterCache,
) -> Result<u64> {
    let n = check_sizes("kronecker", &[lambda, mu, nu])?;
    let order = factorial(n) as i128;
    let classes: Vec<Partition> = partitions_of(n, None, None).collect();
    let total: i128 = classes
        .par_iter()
        .map(|rho| {
            let class_size = order / z_of(rho) as i128;
            let product = mn(lambda, rho, cache) as i128
                * mn(mu, rho, cache) as i128
                * mn(nu, rho, cache) as i128;
            class_size * product
        })
        .sum();
    if total % order != 0 {
        return Err(Error::Consistency(format!(
            "character sum for ({lambda}; {mu}; {nu}) is {total}, not a multiple of {n}!"
        )));
    }
    let g = total / order;
    u64::try_from(g).map_err(|_| {
        Error::Consistency(format!("negative multiplicity {g} for ({lambda}; {mu}; {nu})"))
    })
}
