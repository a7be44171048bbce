//! Graphviz DOT rendering of shift graphs.
//!
//! Unit edges are `style=solid`, stride edges `style=dashed`. When a packing
//! is supplied, the vertices of cycle `i` are filled with color `i % 9 + 1`
//! of `colorscheme=set19`.

use std::fmt::Write;

use crate::shift::{Packing, ShiftGraph};

/// Renders the graph, optionally coloring a packing's cycles.
pub fn render_dot(g: &ShiftGraph, packing: Option<&Packing>) -> String {
    let n = g.n();
    let mut cycle_of = vec![None; n as usize];
    if let Some(p) = packing {
        for (index, cycle) in p.cycles().iter().enumerate() {
            for &v in cycle.vertices() {
                cycle_of[v as usize] = Some(index);
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"Shift({},{})\" {{", n, g.m());
    for v in 0..n {
        match cycle_of[v as usize] {
            Some(index) => {
                let _ = writeln!(
                    out,
                    "  {v} [label=\"{v}\", style=filled, colorscheme=set19, fillcolor={}];",
                    index % 9 + 1
                );
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{v}\"];");
            }
        }
    }
    for v in 0..n {
        let _ = writeln!(out, "  {v} -> {} [style=solid];", g.unit_successor(v));
        let _ = writeln!(out, "  {v} -> {} [style=dashed];", g.stride_successor(v));
    }
    out.push_str("}\n");
    out
}
