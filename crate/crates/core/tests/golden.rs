mod common;

use common::*;
use frieze_core::pattern::{emit_json, emit_text};
use frieze_core::{render_pattern, Diagonal};

fn golden_tokens() -> Vec<Vec<String>> {
    include_str!("golden/nine_gon_pattern.txt")
        .lines()
        .map(|line| line.split_whitespace().map(str::to_string).collect())
        .collect()
}

#[test]
fn nine_gon_pattern_matches_figure() {
    let (_, _, f) = nine_gon();
    let grid = render_pattern(&f);
    assert_eq!(grid.strip_window(0, 20), golden_tokens());
}

#[test]
fn boundary_rows_and_marked_entry() {
    let (_, _, f) = nine_gon();
    let grid = render_pattern(&f);
    assert!(grid.row(1).iter().all(|v| *v == q(1, 1)));
    assert!(grid.row(8).iter().all(|v| *v == q(1, 1)));
    // f(4, 0) sits in row 5 at i = 4
    assert_eq!(*grid.entry(4, 5), q(4, 1));
    assert_eq!(grid.to_map().get(Diagonal::new(0, 4)), &q(4, 1));
}

#[test]
fn text_rows_carry_the_figure_tokens() {
    let (_, _, f) = nine_gon();
    let grid = render_pattern(&f);
    let text = emit_text(&grid, 2);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    let windows = grid.strip_window(0, 20);
    for (k, (line, window)) in lines.iter().zip(&windows).enumerate() {
        let r = 8 - k as i64;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(tokens.len(), 18);
        // text row r starts at i = 0, the window at strip position x = 0
        for (m, token) in window.iter().enumerate() {
            let i = (m as i64 - r / 2).rem_euclid(9) as usize;
            assert_eq!(tokens[i], token);
        }
    }
    assert_eq!(emit_json(&grid)["rows"][4][4], "4");
}
