//! Bundled worked examples in the tableau text format.

use std::path::Path;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::{ColoredTableau, Order};

pub const FIG3: &str = include_str!("../fixtures/fig3_skew_ssyt.txt");
pub const FIG4: &str = include_str!("../fixtures/fig4_reading_word.txt");
pub const FIG5_CHAIN: [&str; 6] = [
    include_str!("../fixtures/fig5_step0.txt"),
    include_str!("../fixtures/fig5_step1.txt"),
    include_str!("../fixtures/fig5_step2.txt"),
    include_str!("../fixtures/fig5_step3.txt"),
    include_str!("../fixtures/fig5_step4.txt"),
    include_str!("../fixtures/fig5_step5.txt"),
];
pub const FIG6_NATURAL: &str = include_str!("../fixtures/fig6_natural.txt");
pub const FIG6_SMALL_BAR: &str = include_str!("../fixtures/fig6_small_bar.txt");
pub const FIG6_BARRED: &str = include_str!("../fixtures/fig6_barred.txt");
pub const FIG6_COMPOSITE: &str = include_str!("../fixtures/fig6_composite.txt");
pub const NEGATIVE_CONTROL: &str = include_str!("../fixtures/negative_control.txt");
pub const GOLDEN_VALUES: &str = include_str!("../fixtures/golden_values.txt");

/// Names accepted by [`bundled`] and [`load`], with their file names.
pub const NAMES: &[(&str, &str)] = &[
    ("fig3", "fig3_skew_ssyt.txt"),
    ("fig4", "fig4_reading_word.txt"),
    ("fig5-left", "fig5_step0.txt"),
    ("fig5-right", "fig5_step5.txt"),
    ("fig6-natural", "fig6_natural.txt"),
    ("fig6-small-bar", "fig6_small_bar.txt"),
    ("fig6-barred", "fig6_barred.txt"),
    ("fig6-composite", "fig6_composite.txt"),
    ("negative-control", "negative_control.txt"),
];

pub fn bundled(name: &str) -> Option<&'static str> {
    Some(match name {
        "fig3" => FIG3,
        "fig4" => FIG4,
        "fig5-left" => FIG5_CHAIN[0],
        "fig5-right" => FIG5_CHAIN[5],
        "fig6-natural" => FIG6_NATURAL,
        "fig6-small-bar" => FIG6_SMALL_BAR,
        "fig6-barred" => FIG6_BARRED,
        "fig6-composite" => FIG6_COMPOSITE,
        "negative-control" => NEGATIVE_CONTROL,
        _ => return None,
    })
}

/// Loads a named fixture from `dir` if given, otherwise from the bundled set.
pub fn load(name: &str, dir: Option<&Path>) -> Result<String> {
    let file = NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| *f)
        .ok_or_else(|| Error::Parse(format!("unknown fixture {name:?}")))?;
    match dir {
        Some(dir) => Ok(std::fs::read_to_string(dir.join(file))?),
        None => Ok(bundled(name).expect("every listed name is bundled").to_string()),
    }
}

/// A `lambda | d | nu | g` row of the golden value table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenValue {
    pub lambda: Partition,
    pub d: usize,
    pub nu: Partition,
    pub g: u64,
}

pub fn golden_values() -> Vec<GoldenValue> {
    parse_golden(GOLDEN_VALUES).expect("bundled golden table parses")
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenValue>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            let [lambda, d, nu, g] = fields[..] else {
                return Err(Error::Parse(format!("golden row needs 4 fields: {line:?}")));
            };
            let num = |s: &str| s.parse().map_err(|_| Error::Parse(format!("bad number {s:?}")));
            Ok(GoldenValue {
                lambda: lambda.parse()?,
                d: num(d)? as usize,
                nu: nu.parse()?,
                g: num(g)?,
            })
        })
        .collect()
}

fn parse(text: &str, order: Order) -> ColoredTableau {
    ColoredTableau::parse(text, order).expect("bundled fixture parses")
}

pub fn fig3() -> ColoredTableau {
    parse(FIG3, Order::Natural)
}

pub fn fig4() -> ColoredTableau {
    parse(FIG4, Order::Natural)
}

pub fn fig5_left() -> ColoredTableau {
    parse(FIG5_CHAIN[0], Order::SmallBar)
}

pub fn fig5_right() -> ColoredTableau {
    parse(FIG5_CHAIN[5], Order::Natural)
}

pub fn fig6_natural() -> ColoredTableau {
    parse(FIG6_NATURAL, Order::Natural)
}

pub fn fig6_small_bar() -> ColoredTableau {
    parse(FIG6_SMALL_BAR, Order::SmallBar)
}

pub fn fig6_composite() -> ColoredTableau {
    parse(FIG6_COMPOSITE, Order::Natural)
}

/// A natural-order tableau for `m = 2, t = 3, d = 1` that is semistandard
/// but not Yamanouchi.
pub fn negative_control() -> ColoredTableau {
    parse(NEGATIVE_CONTROL, Order::Natural)
}
