//! Report serialization: the stable JSON schema and a markdown table
//! grouped by catalog section.

use crate::report::{CheckStatus, Report};

/// JSON document with the stable field layout
/// {tool_version, tol_scale, summary:{...}, outcomes:[...]}.
pub fn to_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serialization is infallible")
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skipped => "skipped",
        CheckStatus::Experimental => "experimental",
    }
}

fn section_title(section: u8) -> String {
    if section == 0 {
        "Plumbing self-tests".to_string()
    } else {
        format!("Section {section}")
    }
}

/// Markdown rendering: one table per catalog section, plus the summary.
pub fn to_markdown(report: &Report, sections: &[(String, u8)]) -> String {
    let mut out = String::new();
    out.push_str("# Identity verification report\n\n");
    out.push_str(&format!(
        "tool version {} | tolerance scale {} | pass {} | fail {} | skipped {} | experimental {}\n\n",
        report.tool_version,
        report.tol_scale,
        report.summary.pass,
        report.summary.fail,
        report.summary.skipped,
        report.summary.experimental
    ));

    let section_of = |id: &str| {
        sections
            .iter()
            .find(|(sid, _)| sid == id)
            .map(|(_, s)| *s)
            .unwrap_or(0)
    };
    let mut groups: Vec<u8> = report.outcomes.iter().map(|o| section_of(&o.check_id)).collect();
    groups.sort_unstable();
    groups.dedup();

    for g in groups {
        out.push_str(&format!("## {}\n\n", section_title(g)));
        out.push_str("| check | params | lhs | rhs | abs residual | status |\n");
        out.push_str("|---|---|---:|---:|---:|---|\n");
        for o in &report.outcomes {
            let sec = sections
                .iter()
                .find(|(id, _)| *id == o.check_id)
                .map(|(_, s)| *s)
                .unwrap_or(0);
            if sec != g {
                continue;
            }
            let params = o
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v:.6}"))
                .collect::<Vec<_>>()
                .join(", ");
            let note = o
                .message
                .as_deref()
                .map(|m| format!(" ({m})"))
                .unwrap_or_default();
            out.push_str(&format!(
                "| {} | {} | {:.12e} | {:.12e} | {:.3e} | {}{} |\n",
                o.check_id,
                params,
                o.lhs,
                o.rhs,
                o.abs_residual,
                status_str(o.status),
                note
            ));
        }
        out.push('\n');
    }
    out
}
