//! Plain-text tables for `--format table`.

use crate::report::{
    matrix_string, CheckFloatDocument, FamilyDocument, SearchDocument, SymmetrySummary,
    VerifyDocument,
};

/// Left-aligned columns separated by two spaces, trailing space trimmed.
pub fn columns(header: Option<&[&str]>, rows: &[Vec<String>]) -> String {
    let ncols = rows
        .iter()
        .map(Vec::len)
        .chain(header.map(<[&str]>::len))
        .max()
        .unwrap_or(0);
    let mut widths = vec![0; ncols];
    let all = header
        .map(|h| h.iter().map(|s| s.to_string()).collect::<Vec<_>>())
        .into_iter()
        .chain(rows.iter().cloned())
        .collect::<Vec<_>>();
    for r in &all {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in &all {
        let line = r
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), T::to_string)
}

fn summary_rows(s: &SymmetrySummary) -> Vec<Vec<String>> {
    let t = &s.transform;
    let mut rows = vec![vec!["lattice".into(), t.lattice.clone()]];
    if let Some(k) = &t.k {
        rows.push(vec!["k".into(), k.radical.clone()]);
    }
    rows.push(vec![
        "tan_theta".into(),
        format!("{} = {}", t.tan_theta.display(), t.tan_theta.decimal),
    ]);
    rows.push(vec!["theta_degrees".into(), t.theta_degrees.clone()]);
    rows.push(vec![
        "scale".into(),
        format!("{} = {}", t.scale.display(), t.scale.decimal),
    ]);
    if let Some(c) = &s.scalar {
        rows.push(vec![
            "scalar".into(),
            format!("{} = {}", c.display(), c.decimal),
        ]);
    }
    if let Some(m) = &s.matrix {
        rows.push(vec!["matrix".into(), matrix_string(m)]);
    }
    if let Some(m) = &s.raw_matrix {
        rows.push(vec!["raw_matrix".into(), matrix_string(m)]);
    }
    rows.push(vec!["det".into(), opt(&s.det)]);
    rows.push(vec!["raw_det".into(), opt(&s.raw_det)]);
    rows.push(vec!["sublattice_index".into(), opt(&s.sublattice_index)]);
    if let Some(im) = &s.image {
        let g = im
            .generator
            .as_ref()
            .map_or_else(|| "-".into(), |g| format!("({}, {})", g.m, g.n));
        rows.push(vec![
            "image".into(),
            format!(
                "principal = {}, generator = {}, index = {}",
                im.principal, g, im.index
            ),
        ]);
    }
    if let Some(g) = &s.grid {
        rows.push(vec![
            "grid".into(),
            format!(
                "radius {}: {} checked, {} failures, injective = {}",
                g.radius, g.checked, g.failures, g.injective
            ),
        ]);
    }
    rows.push(vec!["verified".into(), s.verified.to_string()]);
    if !s.notes.is_empty() {
        rows.push(vec!["notes".into(), s.notes.clone()]);
    }
    rows
}

pub fn verify(doc: &VerifyDocument) -> String {
    columns(None, &summary_rows(&doc.results))
}

const SUMMARY_HEADER: [&str; 9] = [
    "k",
    "tan_theta",
    "theta_deg",
    "S_r",
    "matrix",
    "scalar",
    "det",
    "raw_det",
    "index",
];

fn summary_line(s: &SymmetrySummary) -> Vec<String> {
    let t = &s.transform;
    vec![
        t.k.as_ref()
            .map_or_else(|| "-".into(), |k| k.radical.clone()),
        format!("{} = {}", t.tan_theta.display(), t.tan_theta.decimal),
        t.theta_degrees.clone(),
        format!("{} = {}", t.scale.display(), t.scale.decimal),
        s.matrix.as_ref().map_or_else(|| "-".into(), matrix_string),
        s.scalar
            .as_ref()
            .map_or_else(|| "-".into(), |c| c.display().to_string()),
        opt(&s.det),
        opt(&s.raw_det),
        opt(&s.sublattice_index),
    ]
}

pub fn family(doc: &FamilyDocument) -> String {
    let rows: Vec<_> = doc.results.rows.iter().map(summary_line).collect();
    columns(Some(&SUMMARY_HEADER), &rows)
}

pub fn search(doc: &SearchDocument) -> String {
    let mut out = format!(
        "{} lattice: {} candidates, {} findings\n",
        doc.inputs.lattice,
        doc.results.candidates,
        doc.results.findings.len()
    );
    if !doc.results.findings.is_empty() {
        let rows: Vec<_> = doc.results.findings.iter().map(summary_line).collect();
        out.push_str(&columns(Some(&SUMMARY_HEADER), &rows));
    }
    out
}

pub fn check_float(doc: &CheckFloatDocument) -> String {
    let r = &doc.results;
    columns(
        None,
        &[
            vec!["lattice".into(), doc.inputs.lattice.clone()],
            vec!["k".into(), opt(&doc.inputs.k)],
            vec!["samples".into(), r.samples.to_string()],
            vec!["seed".into(), doc.inputs.seed.to_string()],
            vec!["tol".into(), doc.inputs.tol.clone()],
            vec!["max_deviation".into(), r.max_deviation.clone()],
            vec!["worst".into(), format!("({}, {})", r.worst.m, r.worst.n)],
            vec!["passed".into(), r.passed.to_string()],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let t = columns(
            Some(&["a", "bb"]),
            &[vec!["ccc".into(), "d".into()], vec!["e".into(), "".into()]],
        );
        assert_eq!(t, "a    bb\nccc  d\ne\n");
    }
}
