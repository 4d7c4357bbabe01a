//! Built-in example diagrams, used throughout the test suite and handy for
//! experimenting from the CLI.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{Crossing, DiskStrand, MixedDiagram};

fn d(
    p: i64,
    q: i64,
    components: Vec<Vec<&str>>,
    crossings: Vec<(i8, &str, &str, &str)>,
    strands: Vec<(&str, &str, i8)>,
) -> MixedDiagram {
    MixedDiagram {
        p,
        q,
        components: components
            .into_iter()
            .map(|c| c.into_iter().map(|a| a.to_string()).collect())
            .collect(),
        crossings: crossings
            .into_iter()
            .map(|(sign, over, ui, uo)| Crossing {
                sign,
                over: over.to_string(),
                under_in: ui.to_string(),
                under_out: uo.to_string(),
            })
            .collect(),
        disk_strands: strands
            .into_iter()
            .map(|(above, below, eps)| DiskStrand {
                above: above.to_string(),
                below: below.to_string(),
                eps,
            })
            .collect(),
        over_order: BTreeMap::new(),
    }
}

/// Right-handed trefoil disjoint from the surgery disk.
pub fn trefoil(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec!["t0", "t1", "t2"]],
        vec![
            (1, "t2", "t0", "t1"),
            (1, "t0", "t1", "t2"),
            (1, "t1", "t2", "t0"),
        ],
        vec![],
    )
}

/// Trefoil with one arc pushed once through the surgery disk (flux 1).
pub fn trefoil_pierced_once(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec!["t0", "t3", "t1", "t2"]],
        vec![
            (1, "t2", "t3", "t1"),
            (1, "t0", "t1", "t2"),
            (1, "t1", "t2", "t0"),
        ],
        vec![("t3", "t0", 1)],
    )
}

/// Trefoil as a 2-braid closure through the surgery disk (flux 2).
pub fn trefoil_pierced_twice(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec!["a", "c", "e", "b", "d"]],
        vec![
            (-1, "b", "a", "c"),
            (-1, "c", "b", "d"),
            (-1, "d", "c", "e"),
        ],
        vec![("a", "d", 1), ("b", "e", 1)],
    )
}

/// Figure-eight knot disjoint from the surgery disk.
pub fn figure_eight(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec!["W", "X", "Y", "Z"]],
        vec![
            (1, "Y", "Z", "W"),
            (-1, "X", "Y", "Z"),
            (1, "W", "X", "Y"),
            (-1, "Z", "W", "X"),
        ],
        vec![],
    )
}

/// Figure-eight with one arc pushed once through the surgery disk (flux 1).
pub fn figure_eight_pierced(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec!["W", "x_lo", "x_hi", "Y", "Z"]],
        vec![
            (1, "Y", "Z", "W"),
            (-1, "x_hi", "Y", "Z"),
            (1, "W", "x_hi", "Y"),
            (-1, "Z", "W", "x_lo"),
        ],
        vec![("x_hi", "x_lo", 1)],
    )
}

/// n parallel unknots, each passing once through the surgery disk (flux n).
pub fn parallel_unknots(p: i64, q: i64, n: usize) -> MixedDiagram {
    let names: Vec<alloc::string::String> =
        (0..n).map(|i| alloc::format!("A{i}")).collect();
    MixedDiagram {
        p,
        q,
        components: names.iter().map(|a| vec![a.clone()]).collect(),
        crossings: vec![],
        disk_strands: names
            .iter()
            .map(|a| DiskStrand { above: a.clone(), below: a.clone(), eps: 1 })
            .collect(),
        over_order: BTreeMap::new(),
    }
}

/// Unknot passing once through the surgery disk (flux 1).
pub fn pierced_unknot(p: i64, q: i64) -> MixedDiagram {
    parallel_unknots(p, q, 1)
}

/// Unknot winding twice through the surgery disk with one negative kink
/// (flux 2): the annular closure of σ₁⁻¹, whose union with the surgery
/// circle is the (2,4) torus link.
pub fn l4a1_knot(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec!["a", "c", "b"]],
        vec![(-1, "b", "a", "c")],
        vec![("a", "b", 1), ("b", "c", 1)],
    )
}

/// Unknot clasping the surgery circle: passes through the disk once in each
/// direction (flux 0), with a clasp of two crossings whose over-arc
/// overpasses both. Exercises the over_order extension.
pub fn zero_flux_clasp(p: i64, q: i64) -> MixedDiagram {
    let mut diag = d(
        p,
        q,
        vec![vec!["P", "Q", "R", "S"]],
        vec![(1, "Q", "R", "S"), (1, "Q", "Q", "R")],
        vec![("Q", "P", 1), ("S", "P", -1)],
    );
    diag.over_order.insert("Q".to_string(), vec![0, 1]);
    diag
}

/// Unknot whose up- and down-strands clasp the surgery circle: flux 0, but
/// the underlying two-component link L'∪U is not split.
pub fn whitehead_clasp(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec!["P", "Q", "R", "S"]],
        vec![(1, "Q", "Q", "R"), (1, "P", "R", "S")],
        vec![("Q", "P", 1), ("S", "P", -1)],
    )
}

/// The (4,3) torus knot wound four times through the surgery disk: the
/// annular closure of the 4-strand braid (σ₁σ₂σ₃)⁻³ (flux 4). Its union
/// with the surgery circle is the link of the torus knot and its core axis.
pub fn l10n42_knot(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec![
            "x0", "x4", "x5", "x6", "x1", "x7", "x8", "x9", "x2", "x10",
            "x11", "x12", "x3",
        ]],
        vec![
            (-1, "x1", "x0", "x4"),
            (-1, "x2", "x4", "x5"),
            (-1, "x3", "x5", "x6"),
            (-1, "x2", "x1", "x7"),
            (-1, "x3", "x7", "x8"),
            (-1, "x6", "x8", "x9"),
            (-1, "x3", "x2", "x10"),
            (-1, "x6", "x10", "x11"),
            (-1, "x9", "x11", "x12"),
        ],
        vec![
            ("x0", "x3", 1),
            ("x1", "x6", 1),
            ("x2", "x9", 1),
            ("x3", "x12", 1),
        ],
    )
}

/// Unknot passing up and then back down through the surgery disk (flux 0,
/// no internal crossings).
pub fn zero_flux_loop(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec!["A", "B"]],
        vec![],
        vec![("B", "A", 1), ("B", "A", -1)],
    )
}

/// Unknot with one positive kink, passing once through the disk (flux 1).
pub fn kinked_unknot(p: i64, q: i64) -> MixedDiagram {
    d(
        p,
        q,
        vec![vec!["A", "B"]],
        vec![(1, "B", "B", "A")],
        vec![("B", "A", 1)],
    )
}
