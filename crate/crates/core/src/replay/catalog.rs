//! The demo scenes, built deterministically by name.

use crate::elements::{
    ChatoyantPolygon, Comment, CommentOwner, CommentedControl, DependentFrame, FramedControl, Group,
    LinkedRectangles, NNodeDisc, NNodeRing, PlotComposite, Scale, SceneElement, StackLayout,
};
use crate::frame::{Side, SizeLimits};
use crate::geometry::{Angle, Point, Rect, Size};
use crate::scene::Scene;

pub const SCENES: [&str; 7] = ["calculator", "data-selection", "personal-info", "panels", "plots", "polygon", "nnode"];

pub fn build(name: &str) -> Option<Scene> {
    Some(match name {
        "calculator" => calculator(),
        "data-selection" => data_selection(),
        "personal-info" => personal_info(),
        "panels" => panels(),
        "plots" => plots(),
        "polygon" => polygon(),
        "nnode" => nnode(),
        _ => return None,
    })
}

fn limits(min: (f64, f64), max: (f64, f64)) -> SizeLimits<f64> {
    SizeLimits::new(Size::new(min.0, min.1), Size::new(max.0, max.1)).expect("valid catalog limits")
}

fn add(scene: &mut Scene, tag: &str, element: impl SceneElement + 'static) {
    scene.add(tag, Box::new(element)).expect("catalog tags are unique");
}

/// Calculator key grid geometry. Keys are 56×36 with 16 px gaps, so
/// neighbouring 6 px frames never touch.
pub mod keypad {
    pub const LEFT: f64 = 24.0;
    pub const TOP: f64 = 80.0;
    pub const KEY_W: f64 = 56.0;
    pub const KEY_H: f64 = 36.0;
    pub const GAP: f64 = 16.0;

    pub const ROWS: [[(&str, &str); 4]; 5] = [
        [("clear", "C"), ("sign", "+/-"), ("percent", "%"), ("divide", "/")],
        [("b7", "7"), ("b8", "8"), ("b9", "9"), ("multiply", "*")],
        [("b4", "4"), ("b5", "5"), ("b6", "6"), ("minus", "-")],
        [("b1", "1"), ("b2", "2"), ("b3", "3"), ("plus", "+")],
        [("b0", "0"), ("point", "."), ("back", "<-"), ("equals", "=")],
    ];

    /// Top-left corner of the key in `row`, `col`.
    pub fn key_origin(row: usize, col: usize) -> (f64, f64) {
        (LEFT + col as f64 * (KEY_W + GAP), TOP + row as f64 * (KEY_H + GAP))
    }
}

fn calculator() -> Scene {
    use keypad::*;
    let mut s = Scene::new("calculator");
    let width = 4.0 * KEY_W + 3.0 * GAP;
    add(
        &mut s,
        "display",
        FramedControl::new(Rect::new(LEFT, 24.0, width, 40.0), limits((120.0, 40.0), (600.0, 40.0)), "0"),
    );
    let key_limits = limits((40.0, 28.0), (200.0, 80.0));
    for (r, row) in ROWS.iter().enumerate() {
        for (c, (tag, label)) in row.iter().enumerate() {
            let (x, y) = key_origin(r, c);
            add(&mut s, tag, FramedControl::new(Rect::new(x, y, KEY_W, KEY_H), key_limits, *label));
        }
    }
    s
}

fn stacked(heights: Vec<Option<f64>>) -> StackLayout {
    StackLayout { padding: 10.0, header: 20.0, gap: 5.0, heights }
}

fn data_selection() -> Scene {
    let mut s = Scene::new("data-selection");
    let range = limits((160.0, 200.0), (480.0, 600.0));
    let wide = limits((100.0, 100.0), (1000.0, 1000.0));
    let row = limits((100.0, 24.0), (1000.0, 24.0));
    let probe = Rect::new(0.0, 0.0, 100.0, 100.0);
    let sources = Group::new(
        Rect::new(20.0, 20.0, 240.0, 300.0),
        "Available",
        range,
        vec![
            ("list".into(), FramedControl::new(probe, wide, "available items")),
            ("filter".into(), FramedControl::new(Rect::new(0.0, 0.0, 100.0, 24.0), row, "filter")),
        ],
        stacked(vec![None, Some(24.0)]),
    )
    .expect("valid group");
    let selected = Group::new(
        Rect::new(380.0, 20.0, 240.0, 300.0),
        "Selected",
        range,
        vec![("list".into(), FramedControl::new(probe, wide, "selected items"))],
        stacked(vec![None]),
    )
    .expect("valid group");
    add(&mut s, "sources", sources);
    add(&mut s, "selected", selected);
    add(
        &mut s,
        "transfer",
        FramedControl::new(Rect::new(280.0, 150.0, 80.0, 28.0), limits((60.0, 28.0), (140.0, 40.0)), "->"),
    );
    s
}

fn field(x: f64, y: f64, w: f64, label: &str) -> Box<dyn SceneElement> {
    let control = FramedControl::new(Rect::new(x, y, w, 24.0), limits((60.0, 24.0), (400.0, 24.0)), label);
    Box::new(CommentedControl::labelled(control, label))
}

fn personal_info() -> Scene {
    let mut s = Scene::new("personal-info");
    let name = DependentFrame::new(
        vec![
            ("first".into(), field(140.0, 40.0, 160.0, "First")),
            ("last".into(), field(140.0, 80.0, 160.0, "Last")),
        ],
        10.0,
    );
    let address = DependentFrame::new(
        vec![
            ("street".into(), field(140.0, 170.0, 200.0, "Street")),
            ("city".into(), field(140.0, 210.0, 140.0, "City")),
            ("zip".into(), field(140.0, 250.0, 80.0, "Zip")),
        ],
        10.0,
    );
    add(&mut s, "name", name);
    add(&mut s, "address", address);
    s.add("email", field(140.0, 330.0, 200.0, "E-mail")).expect("unique tag");
    add(&mut s, "save", FramedControl::fixed(Rect::new(140.0, 390.0, 80.0, 28.0), "Save"));
    s
}

fn panels() -> Scene {
    let mut s = Scene::new("panels");
    add(
        &mut s,
        "button",
        FramedControl::new(Rect::new(20.0, 20.0, 100.0, 28.0), limits((60.0, 24.0), (200.0, 60.0)), "Button"),
    );
    add(
        &mut s,
        "age",
        CommentedControl::labelled(
            FramedControl::new(Rect::new(80.0, 80.0, 60.0, 24.0), limits((40.0, 24.0), (160.0, 24.0)), "42"),
            "Age",
        ),
    );
    let options = Group::new(
        Rect::new(20.0, 140.0, 200.0, 160.0),
        "Options",
        limits((140.0, 120.0), (400.0, 320.0)),
        vec![
            ("choices".into(), FramedControl::new(Rect::new(0.0, 0.0, 100.0, 60.0), limits((100.0, 40.0), (1000.0, 1000.0)), "choices")),
            ("apply".into(), FramedControl::new(Rect::new(0.0, 0.0, 100.0, 24.0), limits((100.0, 24.0), (1000.0, 24.0)), "apply")),
        ],
        stacked(vec![None, Some(24.0)]),
    )
    .expect("valid group");
    add(&mut s, "options", options);
    add(
        &mut s,
        "pair",
        DependentFrame::new(
            vec![
                ("left".into(), Box::new(FramedControl::fixed(Rect::new(280.0, 30.0, 60.0, 24.0), "L"))),
                ("right".into(), Box::new(FramedControl::fixed(Rect::new(370.0, 60.0, 60.0, 24.0), "R"))),
            ],
            8.0,
        ),
    );
    add(
        &mut s,
        "linked",
        LinkedRectangles::new(&[
            Rect::new(280.0, 140.0, 60.0, 40.0),
            Rect::new(360.0, 170.0, 40.0, 40.0),
            Rect::new(300.0, 230.0, 80.0, 20.0),
        ]),
    );
    add(&mut s, "shape", ChatoyantPolygon::regular(Point::new(560.0, 90.0), 50.0, 5).expect("regular polygon"));
    add(&mut s, "disc", NNodeDisc::new(Point::new(520.0, 250.0), 40.0));
    add(&mut s, "ring", NNodeRing::new(Point::new(660.0, 250.0), 20.0, 50.0).expect("valid ring"));
    add(
        &mut s,
        "chart",
        PlotComposite::new(Rect::new(300.0, 340.0, 200.0, 120.0), limits((100.0, 60.0), (600.0, 400.0)))
            .with_scale(Scale::new(Side::Bottom, 20.0))
            .with_comment(CommentOwner::Area, Comment::new("Chart", Point::new(0.5, -0.15))),
    );
    s
}

fn plot(area: Rect<f64>, title: &str) -> PlotComposite {
    let mut vertical = Comment::new("value", Point::new(-0.5, 0.5));
    vertical.angle = Angle::from_degrees(-90.0);
    PlotComposite::new(area, limits((160.0, 100.0), (800.0, 600.0)))
        .with_scale(Scale::new(Side::Bottom, 24.0))
        .with_scale(Scale::new(Side::Left, 40.0))
        .with_comment(CommentOwner::Area, Comment::new(title, Point::new(0.5, -0.12)))
        .with_comment(CommentOwner::Scale(0), Comment::new("time", Point::new(0.5, 1.5)))
        .with_comment(CommentOwner::Scale(1), vertical)
}

fn plots() -> Scene {
    let mut s = Scene::new("plots");
    add(&mut s, "upper", plot(Rect::new(100.0, 50.0, 400.0, 200.0), "Prices"));
    add(&mut s, "lower", plot(Rect::new(100.0, 360.0, 400.0, 160.0), "Volume"));
    let button = limits((60.0, 24.0), (160.0, 40.0));
    add(&mut s, "zoom", FramedControl::new(Rect::new(560.0, 50.0, 80.0, 28.0), button, "Zoom"));
    add(&mut s, "reset", FramedControl::new(Rect::new(560.0, 100.0, 80.0, 28.0), button, "Reset"));
    s
}

fn polygon() -> Scene {
    let mut s = Scene::new("polygon");
    add(&mut s, "hexagon", ChatoyantPolygon::regular(Point::new(300.0, 240.0), 100.0, 6).expect("regular polygon"));
    s
}

fn nnode() -> Scene {
    let mut s = Scene::new("nnode");
    add(&mut s, "disc", NNodeDisc::new(Point::new(200.0, 200.0), 80.0));
    add(&mut s, "ring", NNodeRing::new(Point::new(480.0, 200.0), 40.0, 90.0).expect("valid ring"));
    s
}
