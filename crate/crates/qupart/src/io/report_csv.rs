use qupart_core::stats::RatioReport;
use qupart_core::MeasurementPlan;

/// `length,mean_sqc,mean_c,ratio`, one row per length.
pub fn write_ratio_csv(report: &RatioReport) -> String {
    let mut out = String::from("length,mean_sqc,mean_c,ratio\n");
    for r in &report.records {
        out.push_str(&format!("{},{},{},{}\n", r.length, r.mean_parts_single_qudit, r.mean_parts_clifford, r.ratio));
    }
    out
}

/// `part,num_terms,num_gates,num_sum_gates`, one row per part.
pub fn write_plan_csv(plan: &MeasurementPlan) -> String {
    let mut out = String::from("part,num_terms,num_gates,num_sum_gates\n");
    for (k, p) in plan.parts.iter().enumerate() {
        out.push_str(&format!("{k},{},{},{}\n", p.indices.len(), p.circuit.len(), p.circuit.sum_count()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qupart_core::stats::RatioRecord;

    #[test]
    fn ratio_rows() {
        let report = RatioReport {
            records: vec![
                RatioRecord { length: 1, mean_parts_single_qudit: 3.0, mean_parts_clifford: 3.0, ratio: 1.0 },
                RatioRecord { length: 2, mean_parts_single_qudit: 7.5, mean_parts_clifford: 5.0, ratio: 1.5 },
            ],
        };
        assert_eq!(write_ratio_csv(&report), "length,mean_sqc,mean_c,ratio\n1,3,3,1\n2,7.5,5,1.5\n");
    }
}
