//! Row-insertion stability for a hook times a rectangle.
//!
//! With `t = d + w`, the map [`phi`] sends a small-bar Yamanouchi tableau of
//! content `(m^t)` and total color `d` to one of content `(m^{t+1})` by
//! shifting the barred letters up by one and inserting a row of length `m`
//! below row `ℓ(η) + w - 1`, where `η` is the shape of the barred region.
//! [`psi`] is the same map seen through the natural order. For `w >= 2`
//! both are bijections and `ψ` keeps the SW corner's bar, which yields
//! `g((m^t), (n-d,1^d), ν) = g((m^{t+1}), (n-d+m,1^d), ν ∪ {m})`.

use serde::{Serialize, Serializer};

use crate::blasiak::{decompose_hook_rect, enumerate_small_bar_yamanouchi_all_shapes, SchurExpansion};
use crate::conversion::{to_natural, to_small_bar};
use crate::error::{Error, Result};
use crate::partitions::{add_row_sorted, conjugate, make_rectangle, remove_row, Partition};
use crate::tableaux::{
    barred_shape, content_profile, is_yamanouchi_small_bar, ColoredLetter, ColoredTableau, Order,
};

/// Facts about a member of `A_w^≺` that the maps below rely on.
struct Member {
    w: usize,
    eta: Partition,
}

fn rectangle_height(t: &ColoredTableau, m: usize) -> Result<usize> {
    let profile = content_profile(t);
    let content = profile.content.entries();
    if m == 0 || content.is_empty() || content.iter().any(|&c| c != m) {
        return Err(Error::Domain(format!(
            "content {:?} is not a rectangle with rows of length {m}",
            content
        )));
    }
    Ok(content.len())
}

fn member(t_small: &ColoredTableau, m: usize, d: usize, min_w: usize) -> Result<Member> {
    if !t_small.is_straight() || t_small.order() != Order::SmallBar {
        return Err(Error::Domain("expected a straight small-bar tableau".into()));
    }
    if let Some(v) = t_small.first_violation() {
        return Err(Error::Domain(format!("not small-bar semistandard: {v}")));
    }
    let t = rectangle_height(t_small, m)?;
    let color = content_profile(t_small).total_color;
    if color != d {
        return Err(Error::Domain(format!("total color is {color}, expected {d}")));
    }
    if t < d + min_w {
        return Err(Error::Domain(format!("t = {t}, d = {d} gives w below {min_w}")));
    }
    if !is_yamanouchi_small_bar(t_small)? {
        return Err(Error::Domain("tableau is not Yamanouchi".into()));
    }
    Ok(Member { w: t - d, eta: barred_shape(t_small)? })
}

fn shifted(row: &[ColoredLetter], by: i32) -> Result<Vec<ColoredLetter>> {
    row.iter()
        .map(|l| {
            let v = l.value as i32 + by;
            u8::try_from(v)
                .ok()
                .filter(|&v| v >= 1)
                .map(|value| ColoredLetter { value, barred: l.barred })
                .ok_or_else(|| Error::Consistency(format!("letter {l} shifted out of range")))
        })
        .collect()
}

/// Unbarred content of the first `rows` rows, indexed by letter value.
fn upper_content(t_small: &ColoredTableau, rows: usize) -> Vec<usize> {
    let mut xi = Vec::new();
    for l in t_small.rows()[..rows].iter().flatten().filter(|l| !l.barred) {
        let v = l.value as usize;
        if xi.len() < v {
            xi.resize(v, 0);
        }
        xi[v - 1] += 1;
    }
    xi
}

/// The row whose letter `i` occurs `ξ_{i-1} - ξ_i` times, `ξ_0 = m`, where
/// `ξ` is the unbarred content of the first `ℓ(η)` rows.
fn determined_first_row(t_small: &ColoredTableau, m: usize, eta_len: usize) -> Result<Vec<ColoredLetter>> {
    let xi = upper_content(t_small, eta_len);
    if xi.len() > eta_len {
        return Err(Error::Consistency(format!(
            "letter {} appears in the first {eta_len} rows",
            xi.len()
        )));
    }
    let at = |i: usize| if i == 0 { m } else { xi.get(i - 1).copied().unwrap_or(0) };
    let mut row = Vec::with_capacity(m);
    for i in 1..=eta_len + 1 {
        let (prev, cur) = (at(i - 1), at(i));
        if prev < cur {
            return Err(Error::Consistency(format!("content of the upper rows increases at {i}")));
        }
        row.extend(std::iter::repeat_n(ColoredLetter::unbarred(i as u8), prev - cur));
    }
    Ok(row)
}

/// `φ: A_w^≺ → A_{w+1}^≺` for `w >= 1`.
pub fn phi(t_small: &ColoredTableau, m: usize, d: usize) -> Result<ColoredTableau> {
    let Member { w, eta, .. } = member(t_small, m, d, 1)?;
    let keep = eta.length() + w - 1;
    let rows = t_small.rows();

    let mut out = Vec::with_capacity(rows.len() + 1);
    for row in &rows[..keep.min(rows.len())] {
        let bumped = row
            .iter()
            .map(|l| if l.barred { ColoredLetter::barred(l.value + 1) } else { *l })
            .collect();
        out.push(bumped);
    }
    let inserted = if w >= 2 {
        let above = rows.get(keep - 1).filter(|r| r.len() == m).ok_or_else(|| {
            Error::Consistency(format!("row {keep} does not have length {m}"))
        })?;
        shifted(above, 1)?
    } else {
        determined_first_row(t_small, m, eta.length())?
    };
    out.push(inserted);
    for row in rows.iter().skip(keep) {
        out.push(shifted(row, 1)?);
    }

    let result = ColoredTableau::straight(out, Order::SmallBar)
        .map_err(|e| Error::Consistency(format!("phi produced a non-partition shape: {e}")))?;
    if let Some(v) = result.first_violation() {
        return Err(Error::Consistency(format!("phi produced a non-semistandard tableau: {v}")));
    }
    Ok(result)
}

/// Inverse of [`phi`]: input in `A_{w+1}^≺` with `w >= 1`.
pub fn phi_inverse(t_small: &ColoredTableau, m: usize, d: usize) -> Result<ColoredTableau> {
    let Member { w, eta, .. } = member(t_small, m, d, 2)?;
    let w = w - 1;
    let keep = eta.length() + w - 1;
    let rows = t_small.rows();
    if rows.get(keep).map(Vec::len) != Some(m) {
        return Err(Error::Consistency(format!(
            "no row of length {m} to delete at position {}",
            keep + 1
        )));
    }

    let mut out = Vec::with_capacity(rows.len() - 1);
    for row in &rows[..keep] {
        let lowered = row
            .iter()
            .map(|l| {
                if l.barred {
                    shifted(std::slice::from_ref(l), -1).map(|v| v[0])
                } else {
                    Ok(*l)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(lowered);
    }
    for row in rows.iter().skip(keep + 1) {
        out.push(shifted(row, -1)?);
    }
    let result = ColoredTableau::straight(out, Order::SmallBar)
        .map_err(|e| Error::Consistency(format!("phi inverse produced a non-partition shape: {e}")))?;
    if let Some(v) = result.first_violation() {
        return Err(Error::Consistency(format!(
            "phi inverse produced a non-semistandard tableau: {v}"
        )));
    }
    Ok(result)
}

/// `ψ = (·)^< ∘ φ ∘ (·)^≺` on natural-order tableaux.
pub fn psi(t_natural: &ColoredTableau, m: usize, d: usize) -> Result<ColoredTableau> {
    let (t_small, _) = to_small_bar(t_natural)?;
    let lifted = phi(&t_small, m, d)?;
    Ok(to_natural(&lifted)?.0)
}

/// `A_w^≺`: small-bar Yamanouchi tableaux of content `(m^t)` and total color
/// `d`, every shape.
pub fn small_bar_family(m: usize, t: usize, d: usize) -> Result<Vec<ColoredTableau>> {
    let rect = make_rectangle(m, t)?;
    Ok(enumerate_small_bar_yamanouchi_all_shapes(&rect, d))
}

/// `B_w^<`: the natural-order counterparts of [`small_bar_family`].
pub fn natural_family(m: usize, t: usize, d: usize) -> Result<Vec<ColoredTableau>> {
    small_bar_family(m, t, d)?
        .iter()
        .map(|s| to_natural(s).map(|(n, _)| n))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

/// Structural facts about a colored Yamanouchi tableau of rectangular
/// content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralDiagnostics {
    /// Shape of the barred region of the small-bar form.
    pub eta: Partition,
    /// `t - d`.
    pub w: i64,
    /// Largest `s` with `s̄` absent from the barred region, 0 if none is absent.
    pub j: usize,
    pub violations: Vec<Violation>,
}

impl StructuralDiagnostics {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs the structural checks on a natural-order tableau of content
/// `(m^t)` and total color `d`.
///
/// Malformed input (not semistandard, wrong content or color) is a domain
/// error. A failed Yamanouchi test is reported as a violation so that
/// corrupted tableaux can be diagnosed rather than rejected.
pub fn diagnose(t_natural: &ColoredTableau, m: usize, t: usize, d: usize) -> Result<StructuralDiagnostics> {
    if !t_natural.is_straight() {
        return Err(Error::Domain("expected a straight natural-order tableau".into()));
    }
    if let Some(v) = t_natural.first_violation_in(Order::Natural) {
        return Err(Error::Domain(format!("not natural-order semistandard: {v}")));
    }
    let height = rectangle_height(t_natural, m)?;
    if height != t {
        return Err(Error::Domain(format!("content has {height} letters, expected {t}")));
    }
    let color = content_profile(t_natural).total_color;
    if color != d {
        return Err(Error::Domain(format!("total color is {color}, expected {d}")));
    }
    let (t_small, _) = to_small_bar(t_natural)?;
    Ok(diagnose_small_bar(&t_small, m, t, d))
}

/// The checks of [`diagnose`] on a tableau already in the small-bar order.
pub fn diagnose_small_bar(t_small: &ColoredTableau, m: usize, t: usize, d: usize) -> StructuralDiagnostics {
    let mut violations = Vec::new();
    let mut flag = |check: &'static str, detail: String| violations.push(Violation { check, detail });

    if !is_yamanouchi_small_bar(t_small).unwrap_or(false) {
        flag("yamanouchi", "composite reading word is not a lattice word".into());
    }

    let eta = barred_shape(t_small).unwrap_or_default();
    let w = t as i64 - d as i64;
    let rows = t_small.rows();
    let barred_rows: Vec<&[ColoredLetter]> =
        eta.parts().iter().zip(rows).map(|(&len, row)| &row[..len]).collect();

    // Each barred row reads t̄, t-1̄, ... from right to left.
    for (r, row) in barred_rows.iter().enumerate() {
        let expected: Vec<u8> = (0..row.len()).map(|k| (t - row.len() + 1 + k) as u8).collect();
        let found: Vec<u8> = row.iter().map(|l| l.value).collect();
        if found != expected {
            flag("barred-rows", format!("barred row {} is {found:?}, expected {expected:?}", r + 1));
        }
    }

    // Barred content read from t̄ downwards is η'.
    let mut barred_content = vec![0usize; t + 1];
    for l in barred_rows.iter().flat_map(|r| r.iter()) {
        if (l.value as usize) <= t {
            barred_content[l.value as usize] += 1;
        }
    }
    let mut reversed: Vec<usize> = (1..=t).rev().map(|s| barred_content[s]).collect();
    while reversed.last() == Some(&0) {
        reversed.pop();
    }
    let eta_t = conjugate(&eta);
    if reversed != eta_t.parts() {
        flag("barred-content", format!("reversed barred content {reversed:?} differs from {eta_t}"));
    }

    let j = (1..=t).rev().find(|&s| barred_content[s] == 0).unwrap_or(0);
    let l = eta.length() as i64;

    if w >= 1 {
        let floor = l + w;
        if let Some(low) = barred_rows.iter().flat_map(|r| r.iter()).find(|x| (x.value as i64) < floor) {
            flag("barred-floor", format!("barred letter {low} is below {floor}"));
        }
        if (j as i64) < l + w - 1 {
            flag("barred-gap", format!("j = {j} is below {}", l + w - 1));
        }
    }

    if w >= 2 {
        let l = l as usize;
        let w = w as usize;
        for p in 1..w {
            let len = t_small.shape().part(l + p - 1);
            if len != m {
                flag("rows-of-length-m", format!("row {} has length {len}, expected {m}", l + p));
            }
        }
        match determined_first_row(t_small, m, l) {
            Ok(expected) => {
                if rows.get(l).map(Vec::as_slice) != Some(expected.as_slice()) {
                    flag("determined-rows", format!("row {} differs from the determined filling", l + 1));
                }
            }
            Err(e) => flag("determined-rows", e.to_string()),
        }
        for k in 2..w {
            let (above, below) = (rows.get(l + k - 2), rows.get(l + k - 1));
            let ok = match (above, below) {
                (Some(a), Some(b)) => {
                    a.len() == b.len()
                        && a.iter().zip(b).all(|(x, y)| !x.barred && !y.barred && y.value == x.value + 1)
                }
                _ => false,
            };
            if !ok {
                flag("determined-rows", format!("row {} is not row {} plus one", l + k, l + k - 1));
            }
        }
    }

    StructuralDiagnostics { eta, w, j, violations }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    Unstable,
    /// `w = 1`: reported for information, never asserted.
    Conjectural,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Stable => "stable",
            Verdict::Unstable => "unstable",
            Verdict::Conjectural => "conjectural",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityPair {
    pub nu: Partition,
    pub nu_tilde: Partition,
    pub g_t: u64,
    pub g_t1: u64,
}

/// Expansions at `t` and `t + 1` side by side.
#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub m: usize,
    pub d: usize,
    pub t: usize,
    pub bound_satisfied: bool,
    pub pairs: Vec<StabilityPair>,
    pub unmatched_in_lifted: Vec<Partition>,
    pub verdict: Verdict,
    /// Whether coefficients matched and no new shapes appeared.
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub base: SchurExpansion,
    #[serde(skip)]
    pub lifted: SchurExpansion,
}

impl StabilityReport {
    pub fn coefficient_mismatches(&self) -> Vec<&StabilityPair> {
        self.pairs.iter().filter(|p| p.g_t != p.g_t1).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "m={} d={} t={} bound_satisfied={} verdict={} holds={}\n",
            self.m,
            self.d,
            self.t,
            self.bound_satisfied,
            self.verdict.as_str(),
            self.holds
        );
        if let Some(note) = &self.note {
            out.push_str(&format!("note: {note}\n"));
        }
        for p in &self.pairs {
            let mark = if p.g_t == p.g_t1 { "" } else { "  MISMATCH" };
            out.push_str(&format!("{} -> {} : {} -> {}{mark}\n", p.nu, p.nu_tilde, p.g_t, p.g_t1));
        }
        for gamma in &self.unmatched_in_lifted {
            out.push_str(&format!("new in lifted: {gamma} : {}\n", self.lifted.coefficient(gamma)));
        }
        out
    }
}

/// Compares the decompositions at `t` and `t + 1`. Never fails on the
/// outcome; the verdict carries it.
pub fn verify_stability(m: usize, d: usize, t: usize) -> Result<StabilityReport> {
    let base = decompose_hook_rect(m, t, d)?;
    let lifted = decompose_hook_rect(m, t + 1, d)?;

    let pairs: Vec<StabilityPair> = base
        .terms()
        .map(|(nu, g_t)| {
            let nu_tilde = add_row_sorted(nu, m);
            let g_t1 = lifted.coefficient(&nu_tilde);
            StabilityPair { nu: nu.clone(), nu_tilde, g_t, g_t1 }
        })
        .collect();
    let unmatched_in_lifted: Vec<Partition> = lifted
        .terms()
        .filter(|(gamma, _)| match remove_row(gamma, m) {
            Some(nu) => base.coefficient(&nu) == 0,
            None => true,
        })
        .map(|(gamma, _)| gamma.clone())
        .collect();
    let holds = unmatched_in_lifted.is_empty() && pairs.iter().all(|p| p.g_t == p.g_t1);

    Ok(StabilityReport {
        m,
        d,
        t,
        bound_satisfied: t >= d + 2,
        pairs,
        unmatched_in_lifted,
        verdict: if holds { Verdict::Stable } else { Verdict::Unstable },
        holds,
        note: None,
        base,
        lifted,
    })
}

/// The `w = 1` case `t = d + 1`, labelled as informational.
pub fn probe_w1(m: usize, d: usize) -> Result<StabilityReport> {
    let mut report = verify_stability(m, d, d + 1)?;
    report.verdict = Verdict::Conjectural;
    report.note = Some("conjectural regime (w = 1), informational only".into());
    Ok(report)
}

/// Every `(m, d, t)` with `t >= d + 2` and `m (t + 1) <= max_lifted_size`.
pub fn stable_range(max_lifted_size: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for m in 1..=max_lifted_size {
        for t in 2.. {
            if m * (t + 1) > max_lifted_size {
                break;
            }
            for d in 0..=t - 2 {
                out.push((m, d, t));
            }
        }
    }
    out
}
