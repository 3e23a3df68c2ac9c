//! Structured analysis reports: one JSON-serializable document per run,
//! mirrored by a plain-text rendering that carries identical data.

use crate::borel_smith::{borel_smith_basis, IntegerLattice};
use crate::classes::{ClassTable, Scope};
use crate::error::Result;
use crate::group::{centralizer, FiniteGroup};
use crate::signspace::{p2_surjectivity, stable_sign_subspace, unit_space_of_sylow};
use crate::superclass::SignFunction;
use crate::tuples::reduced_tuple_group;
use crate::verdict::{lefschetz_verdict, Verdict};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "plocal/analysis/v1";

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct GroupSummary {
    pub descriptor: String,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ClassInfo {
    pub index: usize,
    pub order: usize,
    pub cyclic: bool,
    pub representative: String,
    pub normalizer_order: usize,
    pub centralizer_order: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ClassSummary {
    pub sylow_order: usize,
    pub sylow_class_count: usize,
    pub group_class_count: usize,
    pub cyclic_class_count: usize,
    pub classes: Vec<ClassInfo>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct LatticeSection {
    /// Class representative generator sets, one per column.
    pub header: Vec<String>,
    pub rank: usize,
    pub hermite_normal_form: bool,
    pub rows: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct UnitSection {
    pub header: Vec<String>,
    pub unit_dim: usize,
    pub stable_dim: usize,
    pub image_dim: usize,
    pub stable_basis: Vec<Vec<i8>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TupleComponentInfo {
    pub class: usize,
    pub quotient_order: usize,
    pub hom_factors: Vec<u64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TupleBasisEntry {
    /// Concatenated coordinates of the tuple.
    pub coords: Vec<u64>,
    pub order: u64,
    /// Per class: values of the tuple's character at the quotient coset
    /// representatives, additively mod m.
    pub values: Vec<TupleComponentValues>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TupleComponentValues {
    pub class: usize,
    pub on_cosets: Vec<u64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TupleSection {
    pub components: Vec<TupleComponentInfo>,
    pub constraint_count: usize,
    pub invariant_factors: Vec<u64>,
    pub order: u64,
    pub min_generators: usize,
    pub basis: Vec<TupleBasisEntry>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Section<T> {
    Present { data: T },
    Skipped { reason: String },
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub schema: String,
    pub group: GroupSummary,
    pub prime: u64,
    pub unit_order: u64,
    pub classes: ClassSummary,
    pub borel_smith: LatticeSection,
    pub unit_spaces: Section<UnitSection>,
    pub tuple_group: Section<TupleSection>,
    pub verdict: Verdict,
}

pub fn group_summary(group: &FiniteGroup, descriptor: &str) -> GroupSummary {
    GroupSummary {
        descriptor: descriptor.to_string(),
        degree: group.degree(),
        order: group.order(),
        generators: group.generators().iter().map(|g| g.to_string()).collect(),
    }
}

fn class_summary(group: &FiniteGroup, table: &ClassTable) -> ClassSummary {
    let classes = (0..table.class_count(Scope::Group))
        .map(|c| ClassInfo {
            index: c,
            order: table.rep_subgroup(c, Scope::Group).order(),
            cyclic: table.g_cyclic[c],
            representative: table.class_label(group, c, Scope::Group),
            normalizer_order: table.g_normalizers[c].order(),
            centralizer_order: table.g_centralizers[c].order(),
        })
        .collect();
    ClassSummary {
        sylow_order: table.sylow.order(),
        sylow_class_count: table.class_count(Scope::Sylow),
        group_class_count: table.class_count(Scope::Group),
        cyclic_class_count: table.cyclic_class_count(Scope::Group),
        classes,
    }
}

fn header(group: &FiniteGroup, table: &ClassTable, scope: Scope) -> Vec<String> {
    (0..table.class_count(scope))
        .map(|c| table.class_label(group, c, scope))
        .collect()
}

pub fn lattice_section(
    group: &FiniteGroup,
    table: &ClassTable,
    lattice: &IntegerLattice,
    scope: Scope,
) -> LatticeSection {
    LatticeSection {
        header: header(group, table, scope),
        rank: lattice.rank(),
        hermite_normal_form: true,
        rows: lattice.rows.clone(),
    }
}

/// Builds the full analysis document.
pub fn analyze(
    group: &FiniteGroup,
    table: &ClassTable,
    descriptor: &str,
    m: u64,
) -> Result<AnalysisReport> {
    let basis = borel_smith_basis(group, table, Scope::Group)?;
    let borel_smith = lattice_section(group, table, &basis, Scope::Group);

    let unit_spaces = if table.p == 2 {
        let units = unit_space_of_sylow(group, table)?;
        let stable = stable_sign_subspace(&units, table);
        let out = p2_surjectivity(group, table)?;
        Section::Present {
            data: UnitSection {
                header: header(group, table, Scope::Sylow),
                unit_dim: units.dim(),
                stable_dim: stable.dim(),
                image_dim: out.image.dim(),
                stable_basis: stable
                    .basis
                    .iter()
                    .map(|b| SignFunction { bits: b.clone() }.signs())
                    .collect(),
            },
        }
    } else {
        Section::Skipped {
            reason: format!("unit spaces are a p = 2 construction (p = {})", table.p),
        }
    };

    let tuple_group = if table.p != 2 {
        let tg = reduced_tuple_group(group, table, m)?;
        let basis = tg
            .basis
            .iter()
            .zip(&tg.structure.invariant_factors)
            .map(|(coords, &order)| TupleBasisEntry {
                coords: coords.clone(),
                order,
                values: tg
                    .components
                    .iter()
                    .filter(|c| !c.hom.is_trivial())
                    .map(|c| TupleComponentValues {
                        class: c.class,
                        on_cosets: (0..c.quotient.order())
                            .map(|coset| {
                                let n = c.hom.coordinate_count();
                                c.hom.eval(&coords[c.offset..c.offset + n], coset)
                            })
                            .collect(),
                    })
                    .collect(),
            })
            .collect();
        Section::Present {
            data: TupleSection {
                components: tg
                    .components
                    .iter()
                    .map(|c| TupleComponentInfo {
                        class: c.class,
                        quotient_order: c.quotient.order(),
                        hom_factors: c.hom.factors.clone(),
                    })
                    .collect(),
                constraint_count: tg.constraints.len(),
                invariant_factors: tg.structure.invariant_factors.clone(),
                order: tg.order(),
                min_generators: crate::abelian::min_generators(&tg.structure),
                basis,
            },
        }
    } else if m == 1 {
        Section::Skipped {
            reason: "character tuples vanish over the two-element field".to_string(),
        }
    } else {
        Section::Skipped {
            reason: "tuple groups are computed for odd p".to_string(),
        }
    };

    let verdict = lefschetz_verdict(group, table, m)?;
    Ok(AnalysisReport {
        schema: SCHEMA.to_string(),
        group: group_summary(group, descriptor),
        prime: table.p,
        unit_order: m,
        classes: class_summary(group, table),
        borel_smith,
        unit_spaces,
        tuple_group,
        verdict,
    })
}

pub fn to_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

/// Plain-text rendering carrying the same data as the JSON document.
pub fn to_text(r: &AnalysisReport) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "group {} | degree {} | order {}",
        r.group.descriptor, r.group.degree, r.group.order
    );
    let _ = writeln!(s, "prime {} | unit order {}", r.prime, r.unit_order);
    let _ = writeln!(
        s,
        "classes: {} under the group, {} under the Sylow subgroup, {} cyclic (Sylow order {})",
        r.classes.group_class_count,
        r.classes.sylow_class_count,
        r.classes.cyclic_class_count,
        r.classes.sylow_order
    );
    for c in &r.classes.classes {
        let _ = writeln!(
            s,
            "  class {}: order {}{} rep {} |N|={} |C|={}",
            c.index,
            c.order,
            if c.cyclic { " cyclic" } else { "" },
            c.representative,
            c.normalizer_order,
            c.centralizer_order
        );
    }
    let _ = writeln!(
        s,
        "admissible-function lattice: rank {}",
        r.borel_smith.rank
    );
    let _ = writeln!(s, "  columns: {}", r.borel_smith.header.join("  "));
    for row in &r.borel_smith.rows {
        let _ = writeln!(s, "  {}", join_i64(row));
    }
    match &r.unit_spaces {
        Section::Present { data } => {
            let _ = writeln!(
                s,
                "unit spaces: units {} | stable {} | image {}",
                data.unit_dim, data.stable_dim, data.image_dim
            );
            let _ = writeln!(s, "  columns: {}", data.header.join("  "));
            for row in &data.stable_basis {
                let _ = writeln!(
                    s,
                    "  {}",
                    row.iter()
                        .map(|v| format!("{v:+}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
        }
        Section::Skipped { reason } => {
            let _ = writeln!(s, "unit spaces: skipped ({reason})");
        }
    }
    match &r.tuple_group {
        Section::Present { data } => {
            let _ = writeln!(
                s,
                "tuple group: order {} | invariant factors [{}] | min generators {} | constraints {}",
                data.order,
                data.invariant_factors
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                data.min_generators,
                data.constraint_count
            );
            for comp in &data.components {
                let _ = writeln!(
                    s,
                    "  component at class {}: quotient order {}, factors {:?}",
                    comp.class, comp.quotient_order, comp.hom_factors
                );
            }
            for (i, b) in data.basis.iter().enumerate() {
                let _ = writeln!(s, "  basis tuple {} (order {}): {:?}", i, b.order, b.coords);
            }
        }
        Section::Skipped { reason } => {
            let _ = writeln!(s, "tuple group: skipped ({reason})");
        }
    }
    let _ = writeln!(s, "verdict: {:?}", r.verdict.outcome);
    for reason in &r.verdict.reasons {
        let _ = writeln!(s, "  [{}] {}", reason.criterion, reason.evidence);
    }
    if let Some(cert) = &r.verdict.certificate {
        match cert {
            crate::verdict::Certificate::PreimageBasis(pairs) => {
                let _ = writeln!(s, "  certificate: preimage basis ({} units)", pairs.len());
                for (u, f) in pairs {
                    let _ = writeln!(
                        s,
                        "    unit {} <- {}",
                        u.iter()
                            .map(|v| format!("{v:+}"))
                            .collect::<Vec<_>>()
                            .join(" "),
                        join_i64(f)
                    );
                }
            }
            crate::verdict::Certificate::MissingUnit(u) => {
                let _ = writeln!(
                    s,
                    "  certificate: stable unit with no stable preimage: {}",
                    u.iter()
                        .map(|v| format!("{v:+}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            crate::verdict::Certificate::GeneratorCount {
                min_generators,
                cyclic_classes,
            } => {
                let _ = writeln!(
                    s,
                    "  certificate: minimal generator count {min_generators}, cyclic classes {cyclic_classes}"
                );
            }
        }
    }
    s
}

fn join_i64(row: &[i64]) -> String {
    row.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Structural labels for the Sylow-level classes of a dihedral Sylow
/// 2-subgroup of order at least 8: trivial "1", the central order-2 class
/// "C2", the reflection classes "K1"/"K2", cyclic classes "C{order}", the
/// two maximal noncyclic classes "H1"/"H2", and the full subgroup "D{order}".
/// When exactly one reflection class is fused with the center, that class is
/// "K1" and its containing maximal subgroup "H1".
pub fn dihedral_class_labels(
    group: &FiniteGroup,
    table: &ClassTable,
) -> Option<Vec<Option<String>>> {
    let m = table.sylow.order();
    if table.p != 2 || m < 8 {
        return None;
    }
    let n_s = table.class_count(Scope::Sylow);
    let center = centralizer_in_sylow(group, table);
    if center.len() != 2 {
        return None;
    }
    let mut labels: Vec<Option<String>> = vec![None; n_s];
    let mut reflection_classes = Vec::new();
    let mut maximal_noncyclic = Vec::new();
    for c in 0..n_s {
        let rep = table.rep_subgroup(c, Scope::Sylow);
        match rep.order() {
            1 => labels[c] = Some("1".to_string()),
            2 => {
                if rep.elements().iter().all(|e| center.contains(e)) {
                    labels[c] = Some("C2".to_string());
                } else {
                    reflection_classes.push(c);
                }
            }
            o if o == m => labels[c] = Some(format!("D{m}")),
            o => {
                if table.s_cyclic[c] {
                    labels[c] = Some(format!("C{o}"));
                } else if o == m / 2 {
                    maximal_noncyclic.push(c);
                }
            }
        }
    }
    if reflection_classes.len() != 2 || maximal_noncyclic.len() != 2 {
        return None;
    }
    // order the K classes: a class fused with the center comes first
    let center_class = (0..n_s).find(|&c| labels[c].as_deref() == Some("C2"))?;
    let fused_with_center = |c: usize| table.s_to_g[c] == table.s_to_g[center_class];
    let (k1, k2) = match (
        fused_with_center(reflection_classes[0]),
        fused_with_center(reflection_classes[1]),
    ) {
        (false, true) => (reflection_classes[1], reflection_classes[0]),
        _ => (reflection_classes[0], reflection_classes[1]),
    };
    labels[k1] = Some("K1".to_string());
    labels[k2] = Some("K2".to_string());
    // H_i contains the members of K_i
    let k1_members: Vec<usize> = (0..table.subgroups.len())
        .filter(|&i| table.s_class_of[i] == k1)
        .collect();
    let h_of_k1 = maximal_noncyclic.iter().copied().find(|&h| {
        let h_rep = table.rep_subgroup(h, Scope::Sylow);
        k1_members
            .iter()
            .any(|&i| table.subgroups[i].is_subset_of(h_rep))
    })?;
    let h_other = maximal_noncyclic.iter().copied().find(|&h| h != h_of_k1)?;
    labels[h_of_k1] = Some("H1".to_string());
    labels[h_other] = Some("H2".to_string());
    let _ = group;
    Some(labels)
}

fn centralizer_in_sylow(group: &FiniteGroup, table: &ClassTable) -> Vec<usize> {
    let z = centralizer(group, &table.sylow);
    z.elements()
        .iter()
        .copied()
        .filter(|&e| table.sylow.contains(e))
        .collect()
}

/// Looks up the Sylow-level class index carrying a given dihedral label.
pub fn labeled_class(labels: &[Option<String>], name: &str) -> Option<usize> {
    labels.iter().position(|l| l.as_deref() == Some(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::p_subgroup_classes;
    use crate::families::{named_group, Family};

    #[test]
    fn labels_on_d8() {
        let d8 = named_group(Family::Dihedral(8)).unwrap();
        let t = p_subgroup_classes(&d8, 2).unwrap();
        let labels = dihedral_class_labels(&d8, &t).unwrap();
        let mut found: Vec<&str> = labels.iter().flatten().map(|s| s.as_str()).collect();
        found.sort_unstable();
        assert_eq!(found, vec!["1", "C2", "C4", "D8", "H1", "H2", "K1", "K2"]);
    }

    #[test]
    fn labels_on_s4_put_fused_class_first() {
        let s4 = named_group(Family::Symmetric(4)).unwrap();
        let t = p_subgroup_classes(&s4, 2).unwrap();
        let labels = dihedral_class_labels(&s4, &t).unwrap();
        let k1 = labeled_class(&labels, "K1").unwrap();
        let c2 = labeled_class(&labels, "C2").unwrap();
        assert_eq!(t.s_to_g[k1], t.s_to_g[c2], "K1 must be the fused class");
        // K1 lies inside H1
        let h1 = labeled_class(&labels, "H1").unwrap();
        let h1_rep = t.rep_subgroup(h1, Scope::Sylow);
        assert!((0..t.subgroups.len())
            .filter(|&i| t.s_class_of[i] == k1)
            .any(|i| t.subgroups[i].is_subset_of(h1_rep)));
    }

    #[test]
    fn analysis_reports_round_trip() {
        let s4 = named_group(Family::Symmetric(4)).unwrap();
        let t = p_subgroup_classes(&s4, 2).unwrap();
        let r = analyze(&s4, &t, "symmetric:4", 1).unwrap();
        let json = to_json(&r);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["schema"], SCHEMA);
        assert_eq!(parsed["classes"]["cyclic_class_count"], 4);
        let text = to_text(&r);
        assert!(text.contains("rank 4"));
        assert!(text.contains("Surjective"));
    }

    #[test]
    fn report_round_trips_losslessly() {
        for (fam, p, m) in [
            (Family::Symmetric(4), 2u64, 1u64),
            (Family::S2pNormalizer(3), 3, 2),
        ] {
            let g = named_group(fam).unwrap();
            let t = p_subgroup_classes(&g, p).unwrap();
            let r = analyze(&g, &t, &fam.describe(), m).unwrap();
            let json = to_json(&r);
            let back: AnalysisReport = serde_json::from_str(&json).unwrap();
            assert_eq!(r, back);
            assert_eq!(json, to_json(&back));
        }
    }

    #[test]
    fn odd_p_report_has_tuple_section() {
        let g = named_group(Family::S2pNormalizer(3)).unwrap();
        let t = p_subgroup_classes(&g, 3).unwrap();
        let r = analyze(&g, &t, "s2p_normalizer:3", 2).unwrap();
        match &r.tuple_group {
            Section::Present { data } => {
                assert_eq!(data.min_generators, 2);
                assert_eq!(data.order, 4);
            }
            Section::Skipped { .. } => panic!("tuple section expected"),
        }
        match &r.unit_spaces {
            Section::Skipped { .. } => {}
            _ => panic!("unit section must be skipped for odd p"),
        }
    }
}
