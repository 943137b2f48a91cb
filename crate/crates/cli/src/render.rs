use lppkit_core::{GkExpansion, GkRectangle, MonomialIdeal};

/// Rectangle of coefficient rows for columns `0..=d+1`, expansion terms boxed.
pub fn rectangle(rect: &GkRectangle, exp: Option<&GkExpansion>, d: u32) -> String {
    let cols = d as usize + 2;
    let labels: Vec<String> = (1..=rect.n())
        .map(|r| {
            let l: Vec<String> = rect.label(r).iter().map(u32::to_string).collect();
            format!("({})", l.join(","))
        })
        .collect();
    let label_w = labels.iter().map(String::len).max().unwrap_or(0);
    let boxed = |r: usize, t: usize| {
        exp.is_some_and(|e| e.terms.iter().any(|x| x.row == r && x.column as usize == t))
    };
    let cells: Vec<Vec<String>> = (1..=rect.n())
        .map(|r| {
            (0..cols)
                .map(|t| {
                    let v = rect.get(r, t);
                    if boxed(r, t) { format!("[{v}]") } else { format!(" {v} ") }
                })
                .collect()
        })
        .collect();
    let widths: Vec<usize> = (0..cols)
        .map(|t| cells.iter().map(|row| row[t].len()).max().unwrap_or(0).max(t.to_string().len() + 2))
        .collect();
    let mut out = format!("{:label_w$} ", "t");
    for (t, w) in widths.iter().enumerate() {
        out.push_str(&format!("{:>w$}", format!("{t} ")));
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for (label, row) in labels.iter().zip(&cells) {
        let mut line = format!("{label:label_w$} ");
        for (cell, w) in row.iter().zip(&widths) {
            line.push_str(&format!("{cell:>w$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Two-variable picture inside the `a x b` box: `•` standard, `○` in the ideal.
/// Row `r` from the top holds the monomials `x^{a-1-r} y^c`, `c = 0..b`.
pub fn staircase(ideal: &MonomialIdeal, a: u32, b: u32) -> String {
    let mut out = String::new();
    for r in 0..a {
        let row: Vec<&str> = (0..b)
            .map(|c| {
                let m = lppkit_core::Monomial::new(vec![a - 1 - r, c]).unwrap();
                if ideal.contains(&m) { "○" } else { "•" }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
