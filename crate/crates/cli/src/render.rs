//! ASCII and SVG drawings of documents and block decompositions. The top
//! row is the largest `y`.

use std::collections::BTreeMap;

use snake_core::certify::{is_odd_cell, BlockDecomposition, BlockKind};
use snake_core::{Cell, MoveRule};

use crate::doc::{Document, Kind};

const CELL: i32 = 20;

fn weight_char(w: u64) -> char {
    match w {
        1..=9 => char::from(b'0' + w as u8),
        10..=35 => char::from(b'a' + (w - 10) as u8),
        _ => '+',
    }
}

/// One character per cell. Paths under unit-step rules are drawn on a
/// doubled grid with the edges between cells.
pub fn ascii(doc: &Document) -> String {
    let members: BTreeMap<Cell, u64> = doc
        .cells
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, doc.weights.get(i).copied().unwrap_or(1)))
        .collect();
    let mark = |c: Cell| match members.get(&c) {
        None => '.',
        Some(&w) if doc.kind == Kind::WeightedSet => weight_char(w),
        Some(_) => '#',
    };
    let (m, n) = (doc.m as i32, doc.n as i32);
    let unit_steps = matches!(doc.rule, MoveRule::King | MoveRule::Wazir | MoveRule::Fers);
    let mut out = String::new();
    if matches!(doc.kind, Kind::Path | Kind::Cycle) && unit_steps {
        let (h, w) = (2 * m - 1, 2 * n - 1);
        let mut grid = vec![vec![' '; w as usize]; h as usize];
        for y in 0..m {
            for x in 0..n {
                grid[(2 * y) as usize][(2 * x) as usize] = mark(Cell::new(x, y));
            }
        }
        for (a, b) in doc.cell_path().edges() {
            let (dx, dy) = (b.x - a.x, b.y - a.y);
            if dx.abs() > 1 || dy.abs() > 1 {
                continue;
            }
            let slot = &mut grid[(a.y + b.y) as usize][(a.x + b.x) as usize];
            let glyph = match (dx, dy) {
                (_, 0) => '-',
                (0, _) => '|',
                _ if dx == dy => '/',
                _ => '\\',
            };
            *slot = if (*slot == '/' && glyph == '\\') || (*slot == '\\' && glyph == '/') {
                'X'
            } else {
                glyph
            };
        }
        for row in grid.iter().rev() {
            out.push_str(row.iter().collect::<String>().trim_end());
            out.push('\n');
        }
    } else {
        for y in (0..m).rev() {
            out.extend((0..n).map(|x| mark(Cell::new(x, y))));
            out.push('\n');
        }
    }
    out
}

/// Number of blocks covering each cell, `o` marking uncovered odd cells.
pub fn ascii_blocks(d: &BlockDecomposition) -> String {
    let mut count: BTreeMap<Cell, usize> = BTreeMap::new();
    for b in &d.blocks {
        for c in b.cells.iter() {
            *count.entry(c).or_default() += 1;
        }
    }
    let n = d.n as i32;
    let mut out = String::new();
    for y in (0..n).rev() {
        for x in 0..n {
            let c = Cell::new(x, y);
            out.push(match count.get(&c) {
                Some(&k) => weight_char(k as u64),
                None if is_odd_cell(c) => 'o',
                None => '.',
            });
        }
        out.push('\n');
    }
    out
}

fn centre(c: Cell, m: i32) -> (i32, i32) {
    (c.x * CELL + CELL / 2, (m - 1 - c.y) * CELL + CELL / 2)
}

fn svg_open(m: i32, n: i32) -> String {
    let (w, h) = (n * CELL, m * CELL);
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\" font-size=\"10\">\n"
    )
}

/// One `rect` of class `cell` per board cell, one `line` of class `edge`
/// per path edge, and a `text` label per weight.
pub fn svg(doc: &Document) -> String {
    let (m, n) = (doc.m as i32, doc.n as i32);
    let members: BTreeMap<Cell, u64> = doc
        .cells
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, doc.weights.get(i).copied().unwrap_or(1)))
        .collect();
    let mut s = svg_open(m, n);
    s.push_str(&format!(
        "<title>{} {} on {} x {}</title>\n",
        doc.rule, doc.kind, doc.m, doc.n
    ));
    for y in 0..m {
        for x in 0..n {
            let c = Cell::new(x, y);
            let fill = if members.contains_key(&c) {
                "#9bc1e0"
            } else {
                "#ffffff"
            };
            s.push_str(&format!(
                "<rect class=\"cell\" x=\"{}\" y=\"{}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"#bbbbbb\"/>\n",
                x * CELL,
                (m - 1 - y) * CELL
            ));
        }
    }
    if matches!(doc.kind, Kind::Path | Kind::Cycle) {
        for (a, b) in doc.cell_path().edges() {
            let ((x1, y1), (x2, y2)) = (centre(a, m), centre(b, m));
            s.push_str(&format!(
                "<line class=\"edge\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#1f3f66\" stroke-width=\"2\"/>\n"
            ));
        }
    }
    if doc.kind == Kind::WeightedSet {
        for (&c, w) in &members {
            let (x, y) = centre(c, m);
            s.push_str(&format!(
                "<text class=\"weight\" x=\"{x}\" y=\"{}\" text-anchor=\"middle\">{w}</text>\n",
                y + 4
            ));
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Board cells, odd cells shaded, and each block's edges in its own group.
pub fn svg_blocks(d: &BlockDecomposition) -> String {
    let n = d.n as i32;
    let mut s = svg_open(n, n);
    for y in 0..n {
        for x in 0..n {
            let fill = if is_odd_cell(Cell::new(x, y)) {
                "#dddddd"
            } else {
                "#ffffff"
            };
            s.push_str(&format!(
                "<rect class=\"cell\" x=\"{}\" y=\"{}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"#bbbbbb\"/>\n",
                x * CELL,
                (n - 1 - y) * CELL
            ));
        }
    }
    const PALETTE: [&str; 6] = [
        "#c0392b", "#2874a6", "#1e8449", "#b9770e", "#7d3c98", "#117a65",
    ];
    for (i, b) in d.blocks.iter().enumerate() {
        let kind = match b.kind {
            BlockKind::Little => "little",
            BlockKind::Large => "large",
        };
        s.push_str(&format!(
            "<g class=\"block {kind}\" stroke=\"{}\" stroke-width=\"2\">\n",
            PALETTE[i % PALETTE.len()]
        ));
        for &(a, c) in &b.edges {
            let ((x1, y1), (x2, y2)) = (centre(a, n), centre(c, n));
            s.push_str(&format!(
                "<line class=\"block-edge\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>\n"
            ));
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}
