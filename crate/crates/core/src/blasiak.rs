//! Counting colored Yamanouchi tableaux: Kronecker coefficients
//! `g(λ, (n-d, 1^d), ν)` and full decompositions of `s_(n-d,1^d) * s_λ`.
//!
//! Two enumeration routes are provided. The default one fills tableaux in
//! the small-bar order, where the composite tableau's reading word can be
//! checked letter by letter while filling, and then converts survivors to
//! the natural order. [`enumerate_yamanouchi_direct`] walks every
//! natural-order colored tableau and tests each completed filling; it is
//! much slower and exists as a cross-check.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::conversion::to_natural;
use crate::error::{Error, Result};
use crate::oracle::{dimension, CharacterCache};
use crate::partitions::{conjugate, make_hook, make_rectangle, partitions_of, Partition};
use crate::tableaux::{
    column_ok, is_yamanouchi, row_ok, sw_corner_unbarred, ColoredLetter, ColoredTableau, Order,
};

/// Inputs of `g(λ, (n-d, 1^d), ν)`: λ is the content, ν the shape and d
/// the total color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientQuery {
    pub lambda: Partition,
    pub d: usize,
    pub nu: Partition,
}

impl CoefficientQuery {
    pub fn new(lambda: Partition, d: usize, nu: Partition) -> Result<Self> {
        let q = Self { lambda, d, nu };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.lambda.size();
        if self.nu.size() != n {
            return Err(Error::Query(format!(
                "|lambda| = {n} but |nu| = {} for nu = {}",
                self.nu.size(),
                self.nu
            )));
        }
        if n == 0 || self.d >= n {
            return Err(Error::Query(format!("d = {} must be below n = {n}", self.d)));
        }
        if self.lambda.length() > u8::MAX as usize {
            return Err(Error::Query("content has too many letters".into()));
        }
        Ok(())
    }

    pub fn hook(&self) -> Partition {
        make_hook(self.lambda.size(), self.d).expect("validated query")
    }
}

/// A Schur expansion `Σ c_ν s_ν` with strictly positive coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    terms: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn new(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    /// Adds a term; zero coefficients are dropped.
    pub fn insert(&mut self, nu: Partition, coefficient: u64) {
        debug_assert_eq!(nu.size(), self.n);
        if coefficient > 0 {
            self.terms.insert(nu, coefficient);
        }
    }

    pub fn coefficient(&self, nu: &Partition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    /// Terms in reverse-lexicographic order of the shapes.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ c_ν · dim ν`.
    pub fn dimension_total(&self, cache: &CharacterCache) -> u64 {
        self.terms().map(|(nu, c)| c * dimension(nu, cache)).sum()
    }

    /// `ν : c` lines.
    pub fn to_text(&self) -> String {
        self.terms().map(|(nu, c)| format!("{nu} : {c}\n")).collect()
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (nu, c) in self.terms() {
            map.serialize_entry(&nu.to_string(), &c)?;
        }
        map.end()
    }
}

/// Backtracking filler for small-bar tableaux whose composite reading word
/// is a lattice word.
///
/// Cells are visited in the order their letters occur in that reading
/// word: unbarred cells row by row, right to left, then the barred region
/// column by column, bottom to top.
struct SmallBarFiller<'a> {
    nu: &'a Partition,
    eta: &'a Partition,
    caps: &'a [usize],
    order: Vec<(usize, usize, bool)>,
    grid: Vec<Vec<ColoredLetter>>,
    counts: Vec<usize>,
}

impl<'a> SmallBarFiller<'a> {
    fn new(nu: &'a Partition, eta: &'a Partition, caps: &'a [usize]) -> Self {
        let mut order = Vec::with_capacity(nu.size());
        for r in 0..nu.length() {
            for c in (eta.part(r)..nu.part(r)).rev() {
                order.push((r, c, false));
            }
        }
        let eta_t = conjugate(eta);
        for (c, &height) in eta_t.parts().iter().enumerate() {
            for r in (0..height).rev() {
                order.push((r, c, true));
            }
        }
        let grid = nu
            .parts()
            .iter()
            .map(|&len| vec![ColoredLetter::unbarred(1); len])
            .collect();
        Self {
            nu,
            eta,
            caps,
            order,
            grid,
            counts: vec![0; caps.len() + 1],
        }
    }

    fn admissible(&self, v: usize) -> bool {
        self.counts[v] < self.caps[v - 1] && (v == 1 || self.counts[v] < self.counts[v - 1])
    }

    fn run(&mut self, k: usize, emit: &mut dyn FnMut(&[Vec<ColoredLetter>])) {
        if k == self.order.len() {
            emit(&self.grid);
            return;
        }
        let (r, c, barred) = self.order[k];
        let letters = self.caps.len();
        let (lo, hi) = if barred {
            // strict along the row, weak down the column
            let lo = if c > 0 { self.grid[r][c - 1].value as usize + 1 } else { 1 };
            let hi = if r + 1 < self.nu.length() && c < self.eta.part(r + 1) {
                self.grid[r + 1][c].value as usize
            } else {
                letters
            };
            (lo, hi)
        } else {
            let lo = if r > 0 && c >= self.eta.part(r - 1) {
                self.grid[r - 1][c].value as usize + 1
            } else {
                1
            };
            let hi = if c + 1 < self.nu.part(r) {
                self.grid[r][c + 1].value as usize
            } else {
                letters
            };
            (lo, hi)
        };
        for v in lo..=hi.min(letters) {
            if !self.admissible(v) {
                continue;
            }
            self.counts[v] += 1;
            self.grid[r][c] = ColoredLetter { value: v as u8, barred };
            self.run(k + 1, emit);
            self.counts[v] -= 1;
        }
    }
}

fn barred_shapes(nu: &Partition, d: usize) -> impl Iterator<Item = Partition> + '_ {
    partitions_of(d, Some(nu.length()), Some(nu.part(0))).filter(move |eta| nu.contains(eta))
}

fn for_each_small_bar_yamanouchi(
    nu: &Partition,
    lambda: &Partition,
    d: usize,
    mut emit: impl FnMut(&[Vec<ColoredLetter>]),
) {
    if nu.size() != lambda.size() {
        return;
    }
    for eta in barred_shapes(nu, d) {
        let mut filler = SmallBarFiller::new(nu, &eta, lambda.parts());
        filler.run(0, &mut emit);
    }
}

/// Small-bar semistandard Yamanouchi tableaux of shape `nu`, content
/// `lambda` and total color `d`.
pub fn enumerate_small_bar_yamanouchi(
    nu: &Partition,
    lambda: &Partition,
    d: usize,
) -> Vec<ColoredTableau> {
    let mut out = Vec::new();
    for_each_small_bar_yamanouchi(nu, lambda, d, |grid| {
        out.push(ColoredTableau::straight(grid.to_vec(), Order::SmallBar).expect("shape nu"));
    });
    out
}

/// The same over every shape of size `|lambda|`, shapes in reverse-lex order.
pub fn enumerate_small_bar_yamanouchi_all_shapes(
    lambda: &Partition,
    d: usize,
) -> Vec<ColoredTableau> {
    partitions_of(lambda.size(), None, None)
        .flat_map(|nu| enumerate_small_bar_yamanouchi(&nu, lambda, d))
        .collect()
}

fn natural_sort_key(t: &ColoredTableau) -> Vec<u16> {
    t.letters().map(ColoredLetter::natural_key).collect()
}

/// Natural-order Yamanouchi colored tableaux of shape `nu`, content
/// `lambda`, total color `d`; optionally only those with an unbarred SW
/// corner. Sorted by their letter sequence under the natural order.
pub fn enumerate_yamanouchi(
    nu: &Partition,
    lambda: &Partition,
    d: usize,
    require_sw_unbarred: bool,
) -> Result<Vec<ColoredTableau>> {
    let mut out = Vec::new();
    for t_small in enumerate_small_bar_yamanouchi(nu, lambda, d) {
        let (t_natural, _) = to_natural(&t_small)?;
        if !require_sw_unbarred || t_natural.cell_count() == 0 || sw_corner_unbarred(&t_natural)? {
            out.push(t_natural);
        }
    }
    out.sort_by_cached_key(natural_sort_key);
    Ok(out)
}

/// Every natural-order semistandard colored tableau of shape `nu`, content
/// `lambda` and total color `d`, filled cell by cell in row-major order.
pub fn enumerate_natural_colored(
    nu: &Partition,
    lambda: &Partition,
    d: usize,
) -> Vec<ColoredTableau> {
    struct Walk<'a> {
        caps: &'a [usize],
        d: usize,
        cells: Vec<(usize, usize)>,
        grid: Vec<Vec<ColoredLetter>>,
        counts: Vec<usize>,
        bars: usize,
        out: Vec<ColoredTableau>,
    }

    impl Walk<'_> {
        fn run(&mut self, k: usize) {
            if k == self.cells.len() {
                if self.bars == self.d {
                    let t = ColoredTableau::straight(self.grid.clone(), Order::Natural)
                        .expect("shape nu");
                    self.out.push(t);
                }
                return;
            }
            let remaining = self.cells.len() - k;
            if self.bars + remaining < self.d {
                return;
            }
            let (r, c) = self.cells[k];
            for v in 1..=self.caps.len() {
                if self.counts[v] >= self.caps[v - 1] {
                    continue;
                }
                for barred in [true, false] {
                    if barred && self.bars == self.d {
                        continue;
                    }
                    let letter = ColoredLetter { value: v as u8, barred };
                    if c > 0 && !row_ok(self.grid[r][c - 1], letter, Order::Natural) {
                        continue;
                    }
                    if r > 0 && !column_ok(self.grid[r - 1][c], letter, Order::Natural) {
                        continue;
                    }
                    self.grid[r][c] = letter;
                    self.counts[v] += 1;
                    self.bars += usize::from(barred);
                    self.run(k + 1);
                    self.counts[v] -= 1;
                    self.bars -= usize::from(barred);
                }
            }
        }
    }

    if nu.size() != lambda.size() {
        return Vec::new();
    }
    let mut walk = Walk {
        caps: lambda.parts(),
        d,
        cells: nu.cells().collect(),
        grid: nu
            .parts()
            .iter()
            .map(|&len| vec![ColoredLetter::unbarred(1); len])
            .collect(),
        counts: vec![0; lambda.length() + 1],
        bars: 0,
        out: Vec::new(),
    };
    walk.run(0);
    walk.out
}

/// Reference route: test every natural-order colored tableau directly.
pub fn enumerate_yamanouchi_direct(
    nu: &Partition,
    lambda: &Partition,
    d: usize,
    require_sw_unbarred: bool,
) -> Result<Vec<ColoredTableau>> {
    let mut out = Vec::new();
    for t in enumerate_natural_colored(nu, lambda, d) {
        if require_sw_unbarred && t.cell_count() > 0 && !sw_corner_unbarred(&t)? {
            continue;
        }
        if is_yamanouchi(&t)? {
            out.push(t);
        }
    }
    out.sort_by_cached_key(natural_sort_key);
    Ok(out)
}

/// `g(λ, (n-d, 1^d), ν)` as a count of Yamanouchi colored tableaux with an
/// unbarred SW corner.
pub fn hook_kronecker(q: &CoefficientQuery) -> Result<u64> {
    q.validate()?;
    let mut count = 0u64;
    let mut failure = None;
    for_each_small_bar_yamanouchi(&q.nu, &q.lambda, q.d, |grid| {
        if failure.is_some() {
            return;
        }
        let t = ColoredTableau::straight(grid.to_vec(), Order::SmallBar).expect("shape nu");
        match to_natural(&t) {
            Ok((natural, _)) => {
                let sw = natural.rows().last().and_then(|row| row.first());
                if sw.is_some_and(|l| !l.barred) {
                    count += 1;
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// The decomposition of `s_(n-d,1^d) * s_lambda` over all shapes of size
/// `n`, evaluated in parallel.
pub fn decompose_hook(lambda: &Partition, d: usize) -> Result<SchurExpansion> {
    let n = lambda.size();
    if n == 0 || d >= n {
        return Err(Error::Query(format!("d = {d} must be below n = {n}")));
    }
    let shapes: Vec<Partition> = partitions_of(n, None, None).collect();
    let counts: Vec<Result<u64>> = shapes
        .par_iter()
        .map(|nu| hook_kronecker(&CoefficientQuery { lambda: lambda.clone(), d, nu: nu.clone() }))
        .collect();
    let mut expansion = SchurExpansion::new(n);
    for (nu, count) in shapes.into_iter().zip(counts) {
        expansion.insert(nu, count?);
    }
    Ok(expansion)
}

/// The decomposition of `s_(mt-d,1^d) * s_(m^t)`.
pub fn decompose_hook_rect(m: usize, t: usize, d: usize) -> Result<SchurExpansion> {
    let rect = make_rectangle(m, t).map_err(|e| Error::Query(e.to_string()))?;
    decompose_hook(&rect, d)
}

/// Checks `Σ_ν g_ν dim ν = dim(hook) · dim(λ)` for an expansion of
/// `s_(n-d,1^d) * s_λ`.
pub fn dimension_identity(
    lambda: &Partition,
    d: usize,
    expansion: &SchurExpansion,
    cache: &CharacterCache,
) -> (u64, u64) {
    let hook = make_hook(lambda.size(), d).expect("valid hook");
    let expected = dimension(&hook, cache) * dimension(lambda, cache);
    (expansion.dimension_total(cache), expected)
}
