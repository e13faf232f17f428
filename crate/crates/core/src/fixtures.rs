//! Hand-transcribed example forms.
//!
//! Three-dimensional pictures are given as `(x, y, z, label)` points; `x`
//! maps to player 0, `y` to player 1 read from the top row down, and `z` to
//! player 2.

use crate::error::{Error, Result};
use crate::form::{Alphabet, GameForm, Hyperplane, UNDEFINED};
use crate::hardness::{sequence_fixture, GadgetBlock, GadgetType};

type Point = (i32, i32, i32, &'static str);

fn from_points(points: &[Point]) -> Result<GameForm> {
    let (mut lo, mut hi) = ([i32::MAX; 3], [i32::MIN; 3]);
    for &(x, y, z, _) in points {
        for (t, v) in [x, y, z].into_iter().enumerate() {
            lo[t] = lo[t].min(v);
            hi[t] = hi[t].max(v);
        }
    }
    let dims: Vec<usize> = (0..3).map(|t| (hi[t] - lo[t] + 1) as usize).collect();
    let mut alphabet = Alphabet::default();
    let mut cells = vec![UNDEFINED; dims.iter().product()];
    for &(x, y, z, label) in points {
        let c = [
            (x - lo[0]) as usize,
            (hi[1] - y) as usize,
            (z - lo[2]) as usize,
        ];
        let idx = (c[0] * dims[1] + c[1]) * dims[2] + c[2];
        cells[idx] = alphabet.intern(label).0;
    }
    GameForm::from_raw(dims, alphabet, cells)
}

/// Points of a `3 × 3 × 3` picture from its nine labels per `x`, listed by
/// `(y, z)` in the order (1,1) (2,1) (3,1) (1,2) … (3,3).
fn cube3(planes: [&'static str; 3]) -> Vec<Point> {
    let mut points = Vec::new();
    for (x, plane) in planes.iter().enumerate() {
        for (t, label) in plane.split_whitespace().enumerate() {
            let (y, z) = (t % 3 + 1, t / 3 + 1);
            points.push((x as i32 + 1, y as i32, z as i32, label));
        }
    }
    points
}

/// The five 2-person examples; `k` in `1..=5`.
pub fn examples(k: usize) -> Result<GameForm> {
    let rows: &[&str] = match k {
        1 => &["a b", "c d"],
        2 => &["a a c", "a b b", "c b c"],
        3 => &["a b c", "b c a"],
        4 => &["a a b b", "c d c d"],
        5 => &["a a b", "a a c", "b c b"],
        _ => return Err(Error::argument(format!("no example {k} (have 1..=5)"))),
    };
    GameForm::from_rows(rows)
}

/// The 2-person form without a sink row or column.
pub fn no_sink_2d() -> GameForm {
    GameForm::from_rows(&["a a c", "a b b", "c b c"]).expect("static")
}

/// Ten outcomes on nine hyperplanes: not assignable, all projections are.
pub fn fig_no_3d() -> GameForm {
    from_points(&cube3([
        "0 0 1 0 2 0 3 0 0",
        "6 0 0 0 0 4 0 5 0",
        "0 8 0 9 0 0 0 0 7",
    ]))
    .expect("static")
}

/// Number of free cells in [`fig_3d_no_2d_with`].
pub const FIG_3D_NO_2D_FREE: usize = 15;

/// Assignable with no assignable projection, free cells all `fill`.
pub fn fig_3d_no_2d(fill: &'static str) -> Result<GameForm> {
    fig_3d_no_2d_with(&[fill; FIG_3D_NO_2D_FREE])
}

/// Same, with the free cells filled in order from `fills`; each must be
/// `a`, `b` or `c`.
pub fn fig_3d_no_2d_with(fills: &[&'static str]) -> Result<GameForm> {
    if fills.len() != FIG_3D_NO_2D_FREE {
        return Err(Error::argument(format!(
            "need {FIG_3D_NO_2D_FREE} fills, got {}",
            fills.len()
        )));
    }
    if let Some(bad) = fills.iter().find(|f| !["a", "b", "c"].contains(f)) {
        return Err(Error::argument(format!(
            "fill {bad:?} is not one of a, b, c"
        )));
    }
    let mut points = cube3([
        "c b a a c b * a c",
        "* * b * * c * * *",
        "* * c * * a * * *",
    ]);
    let mut next = fills.iter();
    for p in &mut points {
        if p.3 == "*" {
            p.3 = next.next().expect("counted");
        }
    }
    let form = from_points(&points)?;
    // keep a, b, c as outcomes 0, 1, 2 whatever the fills
    let mut alphabet = Alphabet::new(["a", "b", "c"])?;
    let cells = form
        .cells()
        .map(|c| Some(alphabet.intern(form.alphabet().name(c.expect("fully defined")))))
        .collect();
    GameForm::new(form.dims().to_vec(), alphabet, cells)
}

/// First 3-person WTT form without a sink hyperplane.
pub fn nosink_3d_1() -> GameForm {
    from_points(&cube3([
        "a a a a a a c a a",
        "a a a b b a b b a",
        "c a a b b a c b c",
    ]))
    .expect("static")
}

/// Second one; differs from the first only in the last `x` plane.
pub fn nosink_3d_2() -> GameForm {
    from_points(&cube3([
        "a a a a a a c a a",
        "a a a b b a b b a",
        "c c c c b c c c c",
    ]))
    .expect("static")
}

/// A `2 × 2 × 2` cube with six outcomes, and the planes forced to `a`
/// (front) and `b` (back).
#[derive(Clone, Debug)]
pub struct ForcingCube {
    pub form: GameForm,
    pub front: Hyperplane,
    pub back: Hyperplane,
}

pub fn forcing_cube(right: bool) -> ForcingCube {
    let back: [&str; 4] = if right {
        ["b", "e", "f", "b"]
    } else {
        ["f", "b", "b", "e"]
    };
    let form = from_points(&[
        (1, 1, 1, "d"),
        (1, 2, 1, "a"),
        (2, 1, 1, "a"),
        (2, 2, 1, "c"),
        (1, 1, 2, back[0]),
        (1, 2, 2, back[1]),
        (2, 1, 2, back[2]),
        (2, 2, 2, back[3]),
    ])
    .expect("static");
    ForcingCube {
        form,
        front: Hyperplane::new(2, 0),
        back: Hyperplane::new(2, 1),
    }
}

/// The four drawn gadgets as stand-alone blocks; `k` in `1..=4`.
pub fn gadget_figure(k: usize) -> Result<GadgetBlock> {
    let cube: [Point; 8] = [
        (1, 1, 1, "a"),
        (1, 2, 1, "c"),
        (2, 1, 1, "d"),
        (2, 2, 1, "a"),
        (1, 1, 2, "b"),
        (1, 2, 2, "f"),
        (2, 1, 2, "e"),
        (2, 2, 2, "b"),
    ];
    let (points, kind, first, second): (Vec<Point>, _, _, _) = match k {
        1 => (
            vec![
                (1, 1, 1, "ci"),
                (1, 2, 1, "a"),
                (2, 1, 1, "a"),
                (2, 2, 1, "cj"),
                (1, 1, 2, "b"),
                (1, 2, 2, "d"),
                (2, 1, 2, "e"),
                (2, 2, 2, "b"),
            ],
            GadgetType::SameEqual,
            Hyperplane::new(0, 0),
            Hyperplane::new(0, 1),
        ),
        2 => (
            vec![
                (1, 1, 1, "a"),
                (1, 2, 1, "ci"),
                (2, 1, 1, "d"),
                (2, 2, 1, "a"),
                (1, 1, 2, "b"),
                (1, 2, 2, "cj"),
                (2, 1, 2, "e"),
                (2, 2, 2, "b"),
            ],
            GadgetType::CrossEqual,
            Hyperplane::new(0, 0),
            Hyperplane::new(1, 0),
        ),
        3 => {
            let mut p = cube.to_vec();
            p.extend([
                (-1, 3, 1, "e"),
                (-1, 4, 1, "ci"),
                (0, 3, 1, "f"),
                (0, 4, 1, "cj"),
            ]);
            (
                p,
                GadgetType::SameOpposite,
                Hyperplane::new(0, 0),
                Hyperplane::new(0, 1),
            )
        }
        4 => {
            let mut p = cube.to_vec();
            p.extend([
                (-1, 3, 1, "ci"),
                (-1, 4, 1, "e"),
                (0, 3, 1, "f"),
                (0, 4, 1, "cj"),
            ]);
            (
                p,
                GadgetType::CrossOpposite,
                Hyperplane::new(0, 0),
                Hyperplane::new(1, 0),
            )
        }
        _ => {
            return Err(Error::argument(format!(
                "no gadget figure {k} (have 1..=4)"
            )))
        }
    };
    let form = from_points(&points)?;
    let get = |name: &str| form.alphabet().get(name).expect("drawn outcome");
    Ok(GadgetBlock {
        kind,
        first,
        second,
        first_true: get("ci"),
        second_true: get("cj"),
        front: Hyperplane::new(2, 0),
        back: Hyperplane::new(2, 1),
        front_outcome: get("a"),
        back_outcome: get("b"),
        form,
    })
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "examples-1",
    "examples-2",
    "examples-3",
    "examples-4",
    "examples-5",
    "seq-3",
    "seq-4",
    "seq-5",
    "form-3",
    "fig-no-3d",
    "fig-3d-no-2d",
    "nosink-3d-1",
    "nosink-3d-2",
    "forcing-cube-left",
    "forcing-cube-right",
    "gadget-1",
    "gadget-2",
    "gadget-3",
    "gadget-4",
];

/// Looks up a bundled form; `fig-3d-no-2d` has its free cells set to `a`.
pub fn by_name(name: &str) -> Result<GameForm> {
    let suffix = |prefix: &str| {
        name.strip_prefix(prefix)
            .and_then(|s| s.parse::<usize>().ok())
    };
    match name {
        "form-3" => Ok(no_sink_2d()),
        "fig-no-3d" => Ok(fig_no_3d()),
        "fig-3d-no-2d" => fig_3d_no_2d("a"),
        "nosink-3d-1" => Ok(nosink_3d_1()),
        "nosink-3d-2" => Ok(nosink_3d_2()),
        "forcing-cube-left" => Ok(forcing_cube(false).form),
        "forcing-cube-right" => Ok(forcing_cube(true).form),
        _ => {
            if let Some(k) = suffix("examples-") {
                examples(k)
            } else if let Some(t) = suffix("seq-") {
                sequence_fixture(t)
            } else if let Some(k) = suffix("gadget-") {
                Ok(gadget_figure(k)?.form)
            } else {
                Err(Error::argument(format!("unknown fixture {name:?}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in NAMES {
            by_name(name).unwrap();
        }
        assert!(by_name("examples-6").is_err());
    }

    #[test]
    fn last_plane_of_first_nosink_is_the_2d_form() {
        let h = nosink_3d_1()
            .hyperplane_form(Hyperplane::new(0, 2))
            .unwrap();
        let expected = no_sink_2d();
        let labels = |g: &GameForm| {
            (0..g.len())
                .map(|i| g.label(i).unwrap().to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(labels(&h), labels(&expected));
    }

    #[test]
    fn first_3d_fixture_uses_ten_outcomes() {
        let g = fig_no_3d();
        assert_eq!(g.dims(), &[3, 3, 3]);
        assert_eq!(g.alphabet().len(), 10);
        assert!(g.is_fully_defined());
    }

    #[test]
    fn gadget_figures_have_expected_shapes() {
        let dims: Vec<Vec<usize>> = (1..=4)
            .map(|k| gadget_figure(k).unwrap().form.dims().to_vec())
            .collect();
        assert_eq!(
            dims,
            vec![vec![2, 2, 2], vec![2, 2, 2], vec![4, 4, 2], vec![4, 4, 2]]
        );
    }
}
