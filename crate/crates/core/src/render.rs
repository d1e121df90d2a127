//! Arc diagrams of queue layouts as SVG.

use std::fmt::Write;

use crate::layout::QueueLayout;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22",
    "#7f7f7f",
];

const SPACING: f64 = 24.0;
const MARGIN: f64 = 20.0;

/// Colour of queue `q`: a fixed palette first, then evenly spread hues.
pub fn queue_colour(q: usize) -> String {
    match PALETTE.get(q) {
        Some(c) => (*c).to_string(),
        None => format!("hsl({:.1},65%,45%)", (q as f64 * 137.508) % 360.0),
    }
}

/// Vertices on a horizontal line in ordering position, every edge a
/// semicircle above the line coloured by its queue. The output depends
/// only on the layout.
pub fn render_svg(layout: &QueueLayout) -> String {
    let n = layout.vertex_count();
    let span = SPACING * n.saturating_sub(1) as f64;
    let width = span + 2.0 * MARGIN;
    let base = MARGIN + span / 2.0;
    let height = base + MARGIN;
    let x = |v: usize| MARGIN + SPACING * layout.position(v) as f64;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke-width="1.5">"#);
    for (i, &(u, v)) in layout.edges().iter().enumerate() {
        let (a, b) = if x(u) < x(v) { (x(u), x(v)) } else { (x(v), x(u)) };
        let r = (b - a) / 2.0;
        let q = layout.queue_of(i);
        let _ = writeln!(
            out,
            r#"<path class="arc" data-queue="{q}" d="M {a:.1} {base:.1} A {r:.1} {r:.1} 0 0 1 {b:.1} {base:.1}" stroke="{}"><title>{u}-{v} queue {q}</title></path>"#,
            queue_colour(q)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="black">"#);
    for &v in layout.ordering() {
        let _ = writeln!(
            out,
            r#"<circle class="vertex" cx="{:.1}" cy="{base:.1}" r="3"><title>{v}</title></circle>"#,
            x(v)
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::layout::{assign_queues_by_depth, grid_layout};

    #[test]
    fn grid_counts() {
        let svg = render_svg(&grid_layout(3).unwrap());
        assert_eq!(svg.matches("<circle").count(), 9);
        assert_eq!(svg.matches("<path").count(), 12);
        assert_eq!(svg.matches(r#"data-queue="0""#).count(), 12);
    }

    #[test]
    fn two_queues_two_colours() {
        let l = assign_queues_by_depth(&families::complete(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!(l.queue_count(), 2);
        let svg = render_svg(&l);
        assert!(svg.contains(PALETTE[0]) && svg.contains(PALETTE[1]));
        assert_eq!(svg, render_svg(&l));
    }

    #[test]
    fn many_colours_are_distinct() {
        let cs: std::collections::HashSet<String> = (0..40).map(queue_colour).collect();
        assert_eq!(cs.len(), 40);
    }
}
