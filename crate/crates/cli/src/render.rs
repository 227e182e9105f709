//! Plain-text and CSV renderings of command results.

use std::fmt::Write;

use bipyr::diagram::MulticrossingDiagram;
use bipyr::enumeration::Census;
use bipyr::volume::{format_sig6, signature_volume, TableRow};
use bipyr::AnalyzeOutput;

pub fn list(xs: &[u32]) -> String {
    let parts: Vec<String> = xs.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn spaced(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

pub fn analyze(r: &AnalyzeOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "diagram      {}", r.name);
    let _ = writeln!(s, "surface      {} (genus {})", r.surface, r.genus);
    let _ = writeln!(s, "V / E / F    {} / {} / {}", r.vertices, r.edges, r.faces);
    let _ = writeln!(s, "components   {}", r.link_components);
    let _ = writeln!(
        s,
        "tetrahedra   {} face-centered, {} crossing-centered",
        r.tetrahedra.face_centered, r.tetrahedra.crossing_centered
    );
    let _ = writeln!(s, "mccb         {}", format_sig6(r.mccb));
    let _ = writeln!(s, "mfcb         {}", format_sig6(r.mfcb));
    let _ = writeln!(s, "octahedral   {}", format_sig6(r.octahedral));
    if let Some(d) = r.density.mccb_per_crossing {
        let _ = writeln!(s, "per crossing {}", format_sig6(d));
    }
    if let Some(d) = r.density.triple_density_bound {
        let _ = writeln!(
            s,
            "per 3-crossing {} (maximum {})",
            format_sig6(d),
            format_sig6(r.density.triple_reference)
        );
    }
    let _ = writeln!(s, "\ncrossing  levels  signature  octahedra  mccb");
    for c in &r.volume.per_crossing {
        let _ = writeln!(
            s,
            "{:>8}  {}  {}  {}  {}",
            c.crossing,
            list(&c.levels),
            list(&c.signature),
            c.octahedra,
            format_sig6(c.mccb)
        );
    }
    let _ = writeln!(s, "\nface  size  volume");
    for f in &r.volume.per_face {
        let _ = writeln!(s, "{:>4}  {:>4}  {}", f.face, f.size, format_sig6(f.volume));
    }
    s
}

pub fn census_csv(c: &Census) -> String {
    let mut s = String::from("levels,signature,tetrahedra,mccb_contribution\n");
    for (levels, sig) in c.rows() {
        let tets: u32 = sig.iter().sum();
        let _ = writeln!(
            s,
            "{},{},{},{}",
            spaced(&levels),
            spaced(&sig),
            tets,
            format_sig6(signature_volume(&sig))
        );
    }
    s
}

pub fn census_summary(c: &Census) -> String {
    let mut s = String::new();
    let kind = if c.fold_reflections { " up to reflection" } else { "" };
    let _ = writeln!(s, "{} configurations of {} strands{kind}", c.total, c.n);
    let _ = writeln!(s, "{} signatures\n", c.entries.len());
    let _ = writeln!(s, "signature  count  mccb  example");
    for (sig, perms) in &c.entries {
        let _ = writeln!(
            s,
            "{}  {}  {}  {}",
            list(sig),
            perms.len(),
            format_sig6(signature_volume(sig)),
            list(&perms[0])
        );
    }
    s
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut s = String::from("n,best_mccb,worst_mccb,octahedral\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{}",
            r.n,
            format_sig6(r.best_mccb),
            format_sig6(r.worst_mccb),
            format_sig6(r.octahedral)
        );
    }
    s
}

pub fn examples(diagrams: &[MulticrossingDiagram]) -> String {
    let mut s = String::new();
    for d in diagrams {
        let sizes: Vec<u32> = d.crossings().iter().map(|c| c.size() as u32).collect();
        let _ = writeln!(s, "{:<22} {:<7} crossing sizes {}", d.name(), d.declared_surface(), list(&sizes));
    }
    s
}
