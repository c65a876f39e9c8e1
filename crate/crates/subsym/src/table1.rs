use crate::zoo::ZooResult;
use crate::SubsymError;
use holonomy::HolLabel;

/// One rendered row of the stored sub-symmetric holonomy table:
/// τ status, space label, hol(∇), hol(∇^τ).
#[derive(Debug, Clone, PartialEq)]
pub struct Table1Row {
    pub row_id: &'static str,
    pub tau_nonzero: bool,
    pub space: String,
    pub hol_horizontal: HolLabel,
    pub hol_adapted: HolLabel,
    pub dims: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct Table1Diff {
    pub row_id: &'static str,
    pub field: &'static str,
    pub expected: String,
    pub computed: String,
}

/// Stored expected rows at m = 3 (the fixture the reproduction is diffed
/// against).
pub fn expected_row(row_id: &str, m: usize) -> Option<Table1Row> {
    let so_dim = m * (m - 1) / 2;
    match row_id {
        "heisenberg" => Some(Table1Row {
            row_id: "heisenberg",
            tau_nonzero: false,
            space: format!("H^{}", 2 * m + 1),
            hol_horizontal: HolLabel::Trivial,
            hol_adapted: HolLabel::Trivial,
            dims: (0, 0),
        }),
        "s1-bundle" => Some(Table1Row {
            row_id: "s1-bundle",
            tau_nonzero: false,
            space: format!("S^1-bundle over CP^{m}"),
            hol_horizontal: HolLabel::SuM,
            hol_adapted: HolLabel::UM,
            dims: (m * m - 1, m * m),
        }),
        "torsion-scal-nonzero" => Some(Table1Row {
            row_id: "torsion-scal-nonzero",
            tau_nonzero: true,
            space: "SO(m+2)/SO(m), SO(2,m)/SO(m), SO(1,m+1)/SO(m) (scal≠0), motions".into(),
            hol_horizontal: HolLabel::SoMLagrangian,
            hol_adapted: HolLabel::SoMPlusU1,
            dims: (so_dim, so_dim + 1),
        }),
        "torsion-scal-zero" => Some(Table1Row {
            row_id: "torsion-scal-zero",
            tau_nonzero: true,
            space: "SO(1,m+1)/SO(m) with scal=0".into(),
            hol_horizontal: HolLabel::SoMLagrangian,
            hol_adapted: HolLabel::SoMLagrangian,
            dims: (so_dim, so_dim),
        }),
        _ => None,
    }
}

fn row_id_for(z: &ZooResult) -> &'static str {
    if z.kind_name.starts_with("heisenberg") {
        "heisenberg"
    } else if z.kind_name.starts_with("s1-bundle") {
        "s1-bundle"
    } else if z.tau_star_zero {
        "heisenberg"
    } else if num::traits::Zero::is_zero(&z.scal_tau) {
        "torsion-scal-zero"
    } else {
        "torsion-scal-nonzero"
    }
}

/// Render each zoo result into its table row and diff against the stored
/// fixture; Err(Mismatch) lists every differing field.
pub fn table1_report(results: &[(usize, ZooResult)]) -> Result<Vec<Table1Row>, SubsymError> {
    let mut rows = Vec::new();
    let mut diffs: Vec<Table1Diff> = Vec::new();
    for (m, z) in results {
        let row_id = row_id_for(z);
        let computed = Table1Row {
            row_id,
            tau_nonzero: !z.tau_star_zero,
            space: z.kind_name.clone(),
            hol_horizontal: z.hol_horizontal_label,
            hol_adapted: z.hol_adapted_label,
            dims: (z.hol_horizontal_dim, z.hol_adapted_dim),
        };
        let expected = expected_row(row_id, *m)
            .ok_or_else(|| SubsymError::Mismatch(format!("no stored row `{row_id}`")))?;
        if computed.tau_nonzero != expected.tau_nonzero {
            diffs.push(Table1Diff {
                row_id,
                field: "tau_status",
                expected: format!("{}", expected.tau_nonzero),
                computed: format!("{}", computed.tau_nonzero),
            });
        }
        if computed.hol_horizontal != expected.hol_horizontal {
            diffs.push(Table1Diff {
                row_id,
                field: "hol_horizontal",
                expected: format!("{:?}", expected.hol_horizontal),
                computed: format!("{:?}", computed.hol_horizontal),
            });
        }
        if computed.hol_adapted != expected.hol_adapted {
            diffs.push(Table1Diff {
                row_id,
                field: "hol_adapted",
                expected: format!("{:?}", expected.hol_adapted),
                computed: format!("{:?}", computed.hol_adapted),
            });
        }
        if computed.dims != expected.dims {
            diffs.push(Table1Diff {
                row_id,
                field: "dims",
                expected: format!("{:?}", expected.dims),
                computed: format!("{:?}", computed.dims),
            });
        }
        rows.push(computed);
    }
    if diffs.is_empty() {
        Ok(rows)
    } else {
        Err(SubsymError::Mismatch(
            diffs
                .iter()
                .map(|d| format!("[{} / {}] expected {} computed {}", d.row_id, d.field, d.expected, d.computed))
                .collect::<Vec<_>>()
                .join("; "),
        ))
    }
}
