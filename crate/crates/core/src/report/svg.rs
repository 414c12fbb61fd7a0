//! Static SVG pictures of rank 2 apartments.
//!
//! The apartment is drawn in the Euclidean plane obtained from the
//! invariant form on the coroot lattice, scaled so that the shortest simple
//! coroot has length 1 and then by [`PIXELS_PER_UNIT`]. The picture shows
//! every alcove of the input meeting the open disk of the given radius
//! around the origin, plus the base alcove. The y axis points up.
//!
//! Palette, fixed:
//!
//! | fill       | colour    |
//! |------------|-----------|
//! | empty      | `#ffffff` |
//! | nonempty   | `#a0a0a0` |
//! | base       | `#000000` |
//! | light      | `#e4e4e4` |
//! | medium     | `#b4b4b4` |
//! | dark       | `#5a5a5a` |

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::adlv_flag::PartialFoldClass;
use crate::affweyl::{AffineElt, AffineWeyl};
use crate::{Error, Result};

pub const PIXELS_PER_UNIT: f64 = 48.0;

/// Fill of one alcove.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fill {
    Empty,
    Nonempty,
    Base,
    Light,
    Medium,
    Dark,
}

impl Fill {
    pub fn colour(self) -> &'static str {
        match self {
            Fill::Empty => "#ffffff",
            Fill::Nonempty => "#a0a0a0",
            Fill::Base => "#000000",
            Fill::Light => "#e4e4e4",
            Fill::Medium => "#b4b4b4",
            Fill::Dark => "#5a5a5a",
        }
    }

    pub fn from_class(class: PartialFoldClass) -> Fill {
        match class {
            PartialFoldClass::White => Fill::Empty,
            PartialFoldClass::Light => Fill::Light,
            PartialFoldClass::Medium => Fill::Medium,
            PartialFoldClass::Dark => Fill::Dark,
        }
    }
}

/// One alcove to draw.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub elt: AffineElt,
    pub fill: Fill,
    pub label: Option<String>,
}

/// Which legend to print under the picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Legend {
    /// White, gray and black for empty, nonempty and the base alcove.
    Census,
    /// The four shades of the partial folding picture.
    PartialFolding,
}

/// Linear map from simple-coroot coordinates to the plane.
#[derive(Clone, Copy, Debug)]
struct Frame {
    e1: (f64, f64),
    e2: (f64, f64),
}

impl Frame {
    fn new(aw: &AffineWeyl) -> Frame {
        let g = aw.root_system().coweight_gram();
        let unit = g[0][0].min(g[1][1]) as f64;
        let (g11, g12, g22) = (g[0][0] as f64 / unit, g[0][1] as f64 / unit, g[1][1] as f64 / unit);
        let a = g11.sqrt();
        let b = g12 / a;
        Frame { e1: (a, 0.0), e2: (b, (g22 - b * b).sqrt()) }
    }

    fn map(&self, c: &[f64]) -> (f64, f64) {
        (c[0] * self.e1.0 + c[1] * self.e2.0, c[0] * self.e1.1 + c[1] * self.e2.1)
    }
}

fn polygon(aw: &AffineWeyl, frame: &Frame, x: AffineElt) -> Vec<(f64, f64)> {
    aw.vertices(x)
        .iter()
        .map(|v| {
            let c: Vec<f64> = v.iter().map(|r| r.to_f64().expect("finite coordinate")).collect();
            frame.map(&c)
        })
        .collect()
}

fn segment_distance(p: (f64, f64), q: (f64, f64)) -> f64 {
    let (dx, dy) = (q.0 - p.0, q.1 - p.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (-(p.0 * dx + p.1 * dy) / len2).clamp(0.0, 1.0) };
    let (x, y) = (p.0 + t * dx, p.1 + t * dy);
    (x * x + y * y).sqrt()
}

/// Distance from the origin to a convex polygon.
fn origin_distance(poly: &[(f64, f64)]) -> f64 {
    let n = poly.len();
    let cross = |i: usize| {
        let (p, q) = (poly[i], poly[(i + 1) % n]);
        p.0 * q.1 - p.1 * q.0
    };
    let signs: Vec<f64> = (0..n).map(cross).collect();
    if signs.iter().all(|&s| s >= 0.0) || signs.iter().all(|&s| s <= 0.0) {
        return 0.0;
    }
    (0..n)
        .map(|i| segment_distance(poly[i], poly[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

/// Largest radius for which every alcove meeting the open disk has length
/// at most `max_len`: the distance to the nearest alcove of length
/// `max_len + 1`.
pub fn safe_radius(aw: &AffineWeyl, max_len: usize) -> Result<f64> {
    require_rank_two(aw)?;
    let frame = Frame::new(aw);
    Ok(aw
        .enumerate(max_len + 1)
        .into_iter()
        .filter(|(_, w)| w.len() == max_len + 1)
        .map(|(x, _)| origin_distance(&polygon(aw, &frame, x)))
        .fold(f64::INFINITY, f64::min))
}

fn require_rank_two(aw: &AffineWeyl) -> Result<()> {
    if aw.rank() == 2 {
        Ok(())
    } else {
        Err(Error::Domain(format!("apartment pictures need rank 2, got {}", aw.root_system().label())))
    }
}

fn px(v: f64) -> String {
    let r = (v * PIXELS_PER_UNIT * 100.0).round() / 100.0;
    let s = format!("{r:.2}");
    if s == "-0.00" { "0.00".to_string() } else { s }
}

/// SVG document for the given cells.
pub fn render_apartment(aw: &AffineWeyl, cells: &[Cell], radius: f64, legend: Legend, title: &str) -> Result<String> {
    require_rank_two(aw)?;
    if !(radius >= 0.0 && radius.is_finite()) {
        return Err(Error::Config(format!("radius must be finite and non-negative, got {radius}")));
    }
    let frame = Frame::new(aw);
    let half = (radius.max(1.0) + 0.5) * PIXELS_PER_UNIT;
    let legend_rows = match legend {
        Legend::Census => 3,
        Legend::PartialFolding => 4,
    };
    let legend_height = 22.0 * legend_rows as f64 + 30.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.2} {:.2} {:.2} {:.2}" font-family="sans-serif">"#,
        -half,
        -half,
        2.0 * half,
        2.0 * half + legend_height
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let mut drawn: Vec<&Cell> = cells
        .iter()
        .filter(|c| c.elt == AffineElt::IDENTITY || origin_distance(&polygon(aw, &frame, c.elt)) < radius)
        .collect();
    drawn.sort_by_key(|c| c.elt);
    drawn.dedup_by_key(|c| c.elt);
    let font = PIXELS_PER_UNIT * 0.22;
    for cell in &drawn {
        let poly = polygon(aw, &frame, cell.elt);
        let points: Vec<String> = poly.iter().map(|&(x, y)| format!("{},{}", px(x), px(-y))).collect();
        let fill = if cell.elt == AffineElt::IDENTITY { Fill::Base } else { cell.fill };
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="{}" stroke="#404040" stroke-width="0.6"/>"##,
            points.join(" "),
            fill.colour()
        );
        if let Some(label) = &cell.label {
            let n = poly.len() as f64;
            let cx = poly.iter().map(|p| p.0).sum::<f64>() / n;
            let cy = poly.iter().map(|p| p.1).sum::<f64>() / n;
            let colour = if fill == Fill::Base || fill == Fill::Dark { "#ffffff" } else { "#000000" };
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="{font:.2}" text-anchor="middle" dominant-baseline="central" fill="{colour}">{}</text>"#,
                px(cx),
                px(-cy),
                escape(label)
            );
        }
    }
    let _ = writeln!(out, r##"<circle cx="0.00" cy="0.00" r="3.00" fill="#d01010"/>"##);
    let entries: &[(Fill, &str)] = match legend {
        Legend::Census => &[
            (Fill::Empty, "empty"),
            (Fill::Nonempty, "nonempty, labelled by dimension"),
            (Fill::Base, "base alcove"),
        ],
        Legend::PartialFolding => &[
            (Fill::Empty, "white: X_x(1) empty"),
            (Fill::Light, "light gray: no folding toward the chamber"),
            (Fill::Medium, "medium gray: folding below the dimension"),
            (Fill::Dark, "dark gray: folding attains the dimension"),
        ],
    };
    for (k, (fill, text)) in entries.iter().enumerate() {
        let y = half + 16.0 + 22.0 * k as f64;
        let _ = writeln!(
            out,
            r##"<rect x="{:.2}" y="{y:.2}" width="14.00" height="14.00" fill="{}" stroke="#404040"/>"##,
            -half + 10.0,
            fill.colour()
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="12.00">{}</text>"#,
            -half + 32.0,
            y + 11.0,
            escape(text)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_only() {
        let aw = AffineWeyl::from_label("A2").unwrap();
        assert_eq!(safe_radius(&aw, 0).unwrap(), 0.0);
        let cells = vec![Cell { elt: AffineElt::IDENTITY, fill: Fill::Nonempty, label: None }];
        let svg = render_apartment(&aw, &cells, 0.0, Legend::Census, "A2").unwrap();
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.contains(r##"fill="#000000""##));
        assert_eq!(svg.matches("<circle").count(), 1);
    }

    #[test]
    fn rank_is_checked() {
        let aw = AffineWeyl::from_label("A3").unwrap();
        assert!(matches!(render_apartment(&aw, &[], 1.0, Legend::Census, ""), Err(Error::Domain(_))));
        assert!(safe_radius(&aw, 1).is_err());
    }

    #[test]
    fn safe_radius_grows() {
        for label in ["A2", "C2", "G2"] {
            let aw = AffineWeyl::from_label(label).unwrap();
            let r: Vec<f64> = (0..8).map(|l| safe_radius(&aw, l).unwrap()).collect();
            assert!(r.windows(2).all(|w| w[0] <= w[1]), "{label} {r:?}");
            assert!(r[7] > 0.0);
        }
    }
}
