//! Colored tableaux over the alphabet of barred and unbarred letters.
//!
//! A [`ColoredTableau`] stores a (possibly skew) shape together with the
//! alphabet order it is meant to be semistandard for. Both orders share one
//! validity rule: along a row letters weakly increase and only unbarred
//! letters may repeat; down a column letters weakly increase and only barred
//! letters may repeat.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::conversion;
use crate::error::{Error, Result};
use crate::partitions::{conjugate, Composition, Partition};

/// A letter `k` or `k̄`. Values start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColoredLetter {
    pub value: u8,
    pub barred: bool,
}

impl ColoredLetter {
    pub const fn unbarred(value: u8) -> Self {
        Self { value, barred: false }
    }

    pub const fn barred(value: u8) -> Self {
        Self { value, barred: true }
    }

    /// Sort key for `1̄ < 1 < 2̄ < 2 < ...`.
    #[inline]
    pub fn natural_key(self) -> u16 {
        2 * self.value as u16 + u16::from(!self.barred)
    }

    /// Sort key for `1̄ ≺ 2̄ ≺ ... ≺ 1 ≺ 2 ≺ ...`.
    #[inline]
    pub fn small_bar_key(self) -> u16 {
        if self.barred {
            self.value as u16
        } else {
            0x100 + self.value as u16
        }
    }

    #[inline]
    pub fn key(self, order: Order) -> u16 {
        match order {
            Order::Natural => self.natural_key(),
            Order::SmallBar => self.small_bar_key(),
        }
    }

    pub fn cmp_in(self, other: Self, order: Order) -> Ordering {
        self.key(order).cmp(&other.key(order))
    }

    pub fn without_bar(self) -> Self {
        Self::unbarred(self.value)
    }
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}~", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for ColoredLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digits, barred) = match s.strip_suffix('~') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let value: u8 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if value == 0 {
            return Err(Error::Parse(format!("letters start at 1, got {s:?}")));
        }
        Ok(Self { value, barred })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Natural,
    SmallBar,
}

impl Order {
    pub fn name(self) -> &'static str {
        match self {
            Order::Natural => "natural",
            Order::SmallBar => "small-bar",
        }
    }
}

/// Whether `left` may sit immediately left of `right` in a row.
#[inline]
pub fn row_ok(left: ColoredLetter, right: ColoredLetter, order: Order) -> bool {
    match left.key(order).cmp(&right.key(order)) {
        Ordering::Less => true,
        Ordering::Equal => !left.barred,
        Ordering::Greater => false,
    }
}

/// Whether `top` may sit immediately above `bottom` in a column.
#[inline]
pub fn column_ok(top: ColoredLetter, bottom: ColoredLetter, order: Order) -> bool {
    match top.key(order).cmp(&bottom.key(order)) {
        Ordering::Less => true,
        Ordering::Equal => top.barred,
        Ordering::Greater => false,
    }
}

/// Letter counts and number of barred cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentProfile {
    pub content: Composition,
    pub total_color: usize,
}

/// A filling of `outer / inner` by colored letters, stored row by row
/// (only the cells of the skew shape).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<ColoredLetter>>,
    order: Order,
}

impl ColoredTableau {
    pub fn new(
        outer: Partition,
        inner: Partition,
        rows: Vec<Vec<ColoredLetter>>,
        order: Order,
    ) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Structure(format!("inner shape {inner} not inside {outer}")));
        }
        if rows.len() != outer.length() {
            return Err(Error::Structure(format!(
                "{} rows given for shape {outer}",
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != outer.part(r) - inner.part(r) {
                return Err(Error::Structure(format!(
                    "row {} has {} cells, skew shape {outer}/{inner} needs {}",
                    r + 1,
                    row.len(),
                    outer.part(r) - inner.part(r)
                )));
            }
        }
        Ok(Self { outer, inner, rows, order })
    }

    /// A straight-shape tableau whose shape is read off the row lengths.
    pub fn straight(rows: Vec<Vec<ColoredLetter>>, order: Order) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::Structure(e.to_string()))?;
        Self::new(outer, Partition::empty(), rows, order)
    }

    pub fn empty(order: Order) -> Self {
        Self {
            outer: Partition::empty(),
            inner: Partition::empty(),
            rows: Vec::new(),
            order,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.outer
    }

    pub fn inner_shape(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<ColoredLetter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<ColoredLetter>> {
        self.rows
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn with_order(mut self, order: Order) -> Self {
        self.order = order;
        self
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Letter at absolute position (row, column), if that cell is in the
    /// skew shape.
    pub fn get(&self, r: usize, c: usize) -> Option<ColoredLetter> {
        let start = self.inner.part(r);
        if c < start {
            return None;
        }
        self.rows.get(r)?.get(c - start).copied()
    }

    pub fn letters(&self) -> impl Iterator<Item = ColoredLetter> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// First row/column rule broken under the tableau's own order.
    pub fn first_violation(&self) -> Option<String> {
        self.first_violation_in(self.order)
    }

    pub fn first_violation_in(&self, order: Order) -> Option<String> {
        for (r, row) in self.rows.iter().enumerate() {
            let start = self.inner.part(r);
            for (k, pair) in row.windows(2).enumerate() {
                if !row_ok(pair[0], pair[1], order) {
                    return Some(format!(
                        "row {}: {} then {} at columns {}-{}",
                        r + 1,
                        pair[0],
                        pair[1],
                        start + k + 1,
                        start + k + 2
                    ));
                }
            }
            if r == 0 {
                continue;
            }
            for (k, &below) in row.iter().enumerate() {
                let c = start + k;
                if let Some(above) = self.get(r - 1, c) {
                    if !column_ok(above, below, order) {
                        return Some(format!(
                            "column {}: {} above {} at rows {}-{}",
                            c + 1,
                            above,
                            below,
                            r,
                            r + 1
                        ));
                    }
                }
            }
        }
        None
    }

    /// Text form: one row per line, cells separated by spaces, `~` marks a
    /// barred letter and `.` marks a cell of the inner shape.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (r, row) in self.rows.iter().enumerate() {
            let cells = std::iter::repeat_n(".".to_string(), self.inner.part(r))
                .chain(row.iter().map(ToString::to_string))
                .collect::<Vec<_>>();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text form; blank lines and `#` comment lines are skipped.
    pub fn parse(text: &str, order: Order) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let offset = tokens.iter().take_while(|&&tok| tok == ".").count();
            let row = tokens[offset..]
                .iter()
                .map(|tok| tok.parse::<ColoredLetter>())
                .collect::<Result<Vec<_>>>()?;
            outer.push(tokens.len());
            inner.push(offset);
            rows.push(row);
        }
        let outer = Partition::new(outer).map_err(|e| Error::Structure(e.to_string()))?;
        while inner.last() == Some(&0) {
            inner.pop();
        }
        let inner = Partition::new(inner).map_err(|e| Error::Structure(e.to_string()))?;
        Self::new(outer, inner, rows, order)
    }

    /// The same tableau with every bar removed.
    pub fn unbarred_copy(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|l| l.without_bar()).collect())
            .collect();
        Self { rows, ..self.clone() }
    }
}

impl fmt::Display for ColoredTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn is_semistandard(t: &ColoredTableau) -> bool {
    t.first_violation().is_none()
}

pub fn content_profile(t: &ColoredTableau) -> ContentProfile {
    let mut content = Vec::new();
    let mut total_color = 0;
    for letter in t.letters() {
        let idx = letter.value as usize - 1;
        if content.len() <= idx {
            content.resize(idx + 1, 0);
        }
        content[idx] += 1;
        total_color += usize::from(letter.barred);
    }
    ContentProfile {
        content: Composition::new(content),
        total_color,
    }
}

fn require_straight(t: &ColoredTableau, what: &str) -> Result<()> {
    if t.is_straight() {
        Ok(())
    } else {
        Err(Error::Structure(format!("{what} needs a straight shape")))
    }
}

/// Shape of the barred region of a small-bar tableau, with an error when
/// the barred cells are not a top-left justified Young diagram.
pub fn barred_shape(t_small: &ColoredTableau) -> Result<Partition> {
    require_straight(t_small, "barred subtableau")?;
    let mut parts = Vec::new();
    for (r, row) in t_small.rows().iter().enumerate() {
        let lead = row.iter().take_while(|l| l.barred).count();
        if row[lead..].iter().any(|l| l.barred) {
            return Err(Error::InvalidOrder {
                expected: Order::SmallBar.name(),
                detail: format!("row {} has a barred letter right of an unbarred one", r + 1),
            });
        }
        parts.push(lead);
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::new(parts).map_err(|_| Error::InvalidOrder {
        expected: Order::SmallBar.name(),
        detail: "barred cells do not form a Young diagram".into(),
    })
}

/// `T^b`: the barred letters of a small-bar tableau, as a straight tableau.
pub fn barred_subtableau(t_small: &ColoredTableau) -> Result<ColoredTableau> {
    let eta = barred_shape(t_small)?;
    if let Some(v) = t_small.first_violation_in(Order::SmallBar) {
        return Err(Error::InvalidOrder {
            expected: Order::SmallBar.name(),
            detail: v,
        });
    }
    let rows = eta
        .parts()
        .iter()
        .zip(t_small.rows())
        .map(|(&len, row)| row[..len].to_vec())
        .collect();
    ColoredTableau::new(eta, Partition::empty(), rows, Order::SmallBar)
}

/// The composite tableau: `T^≺ / T^b` shifted up and to the right so that
/// its SE corner touches the NW corner of the transpose of `T^b`, with all
/// bars erased.
pub fn build_composite(t_small: &ColoredTableau) -> Result<ColoredTableau> {
    let tb = barred_subtableau(t_small)?;
    let eta = tb.shape().clone();
    let eta_t = conjugate(&eta);
    let shift = eta_t.part(0);
    let nu = t_small.shape();

    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for (r, row) in t_small.rows().iter().enumerate() {
        outer.push(nu.part(r) + shift);
        inner.push(eta.part(r) + shift);
        rows.push(row[eta.part(r)..].iter().map(|l| l.without_bar()).collect());
    }
    for (c, &height) in eta_t.parts().iter().enumerate() {
        outer.push(height);
        rows.push((0..height).map(|r| tb.rows()[r][c].without_bar()).collect());
    }
    ColoredTableau::new(
        Partition::new(outer)?,
        Partition::from_unsorted(inner),
        rows,
        Order::Natural,
    )
}

/// Rows top to bottom, each read right to left.
pub fn reverse_reading_word(t: &ColoredTableau) -> Vec<u8> {
    t.rows()
        .iter()
        .flat_map(|row| row.iter().rev().map(|l| l.value))
        .collect()
}

/// Every prefix has at least as many `i` as `i+1`.
pub fn is_lattice(word: &[u8]) -> bool {
    let mut counts = [0usize; 257];
    for &v in word {
        let v = v as usize;
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// Yamanouchi test for a tableau already in the small-bar order.
pub fn is_yamanouchi_small_bar(t_small: &ColoredTableau) -> Result<bool> {
    Ok(is_lattice(&reverse_reading_word(&build_composite(t_small)?)))
}

/// Yamanouchi test for a natural-order tableau: convert, build the
/// composite, check the reading word.
pub fn is_yamanouchi(t_natural: &ColoredTableau) -> Result<bool> {
    let (t_small, _) = conversion::to_small_bar(t_natural)?;
    is_yamanouchi_small_bar(&t_small)
}

pub fn sw_corner_unbarred(t: &ColoredTableau) -> Result<bool> {
    require_straight(t, "SW corner test")?;
    t.rows()
        .last()
        .and_then(|row| row.first())
        .map(|l| !l.barred)
        .ok_or_else(|| Error::Structure("SW corner of an empty tableau".into()))
}
