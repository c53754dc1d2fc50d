//! Plain-text pictures of rigged configurations: per index, one line per
//! row with the vacancy number on the left, the row as boxes, and the
//! rigging on the right.

use std::fmt::Write;

use borcherds_rc::{BorcherdsCartanDatum, RiggedConfiguration};

pub fn render_rc(d: &BorcherdsCartanDatum, rc: &RiggedConfiguration) -> String {
    let mut out = String::new();
    for a in d.indices() {
        let rows = rc.part(a).rows();
        let _ = writeln!(out, "({})", d.label(a));
        if rows.is_empty() {
            out.push_str("  ∅\n");
            continue;
        }
        let vac: Vec<String> = rows.iter().map(|r| rc.vacancy(d, a, r.length).to_string()).collect();
        let rig: Vec<String> = rows.iter().map(|r| r.rigging.to_string()).collect();
        let vw = vac.iter().map(|s| s.len()).max().unwrap_or(0);
        let rw = rig.iter().map(|s| s.len()).max().unwrap_or(0);
        let bw = rows[0].length as usize * 3;
        for ((row, v), x) in rows.iter().zip(&vac).zip(&rig) {
            let boxes = "[ ]".repeat(row.length as usize);
            let _ = writeln!(out, "  {:<vw$} {:<bw$} {:>rw$}", v, boxes, x);
        }
    }
    out
}
