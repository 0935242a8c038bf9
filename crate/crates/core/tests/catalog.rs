use gorlink::catalog::{
    build_table, enumerate_ag, render_csv, render_json, render_markdown, BValue, MhkStatus,
    TableData,
};
use gorlink::dimension::dim_pgor;
use gorlink::hvector::curve_degree_genus;
use gorlink::liaison::ag_from_curve;
use gorlink::HVector;

const GOLDEN: &str = include_str!("data/golden_table.csv");

fn golden_rows() -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(GOLDEN.as_bytes())
        .records()
        .map(|r| r.unwrap())
        .collect()
}

#[test]
fn csv_matches_golden_file_byte_for_byte() {
    let table = build_table(30, &TableData::embedded()).unwrap();
    assert_eq!(render_csv(&table).unwrap(), GOLDEN);
}

#[test]
fn golden_h_column_is_the_enumeration() {
    let mut from_golden: Vec<HVector> = golden_rows()
        .iter()
        .map(|r| r[1].parse().unwrap())
        .collect();
    from_golden.dedup();
    assert_eq!(enumerate_ag(30, true).unwrap(), from_golden);
}

#[test]
fn golden_dimensions_and_round_trips() {
    for r in golden_rows() {
        let h: HVector = r[1].parse().unwrap();
        let a: i64 = r[2].parse().unwrap();
        let m: i64 = r[3].parse().unwrap();
        let c: HVector = r[4].parse().unwrap();
        assert_eq!(dim_pgor(&h).unwrap().value, a, "{h}");
        assert_eq!(ag_from_curve(&c, m, 1).unwrap(), h, "{c}, m={m}");
        let dg = (r[5].parse().unwrap(), r[6].parse().unwrap());
        assert_eq!(curve_degree_genus(&c).unwrap(), dg, "{c}");
    }
}

#[test]
fn outputs_are_deterministic() {
    let data = TableData::embedded();
    let a = build_table(30, &data).unwrap();
    let b = build_table(30, &data).unwrap();
    assert_eq!(render_csv(&a).unwrap(), render_csv(&b).unwrap());
    assert_eq!(render_json(&a).unwrap(), render_json(&b).unwrap());
    assert_eq!(render_markdown(&a), render_markdown(&b));
}

#[test]
fn json_carries_every_curve() {
    let table = build_table(30, &TableData::embedded()).unwrap();
    let json: serde_json::Value = serde_json::from_str(&render_json(&table).unwrap()).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), 30);
    let curves: usize = rows
        .iter()
        .map(|r| r["curves"].as_array().unwrap().len())
        .sum();
    assert_eq!(curves, golden_rows().len());
    assert_eq!(rows[0]["h"], "1,3,1");
    assert_eq!(rows[0]["curves"][0]["B"], "15");
}

#[test]
fn markdown_layout() {
    let table = build_table(14, &TableData::embedded()).unwrap();
    let md = render_markdown(&table);
    assert!(
        md.contains("| 14 | {1,3,6,3,1} | 35 | 3 | {1,2,3} | (6,3) | 35 | ✓ | 12 | 11 | 11 ^a |")
    );
    assert!(md.contains("|  |  |  |  | {1,2,1} | (4,1) | 21 | ✓ | 8 | 7 |  |"));
    assert!(md.contains("- e: complete intersection case"));
}

#[test]
fn unknown_cells_stay_unknown() {
    let table = build_table(30, &TableData::embedded()).unwrap();
    let row = table
        .iter()
        .find(|r| r.h.to_string() == "1,3,6,6,3,1")
        .unwrap();
    let c = row
        .curves
        .iter()
        .find(|c| c.h.to_string() == "1,2,3,2")
        .unwrap();
    assert_eq!(c.b, BValue::AtMost(44));
    assert_eq!(c.status, MhkStatus::Unknown);
    assert_eq!((c.mu_tilde.lo, c.mu_tilde.hi), (None, None));
    assert_eq!(c.delta, None);
}

#[test]
fn alternate_data_file_via_path() {
    let dir = std::env::temp_dir().join(format!("gorlink-data-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("data.json");
    std::fs::write(
        &path,
        r#"{"version":1,"rows":[{"h":"1,3,1","A":15,"mhk_status":{"1,2":"yes"},"delta":{"1,2":2}}]}"#,
    )
    .unwrap();
    let data = TableData::from_path(&path).unwrap();
    let table = build_table(5, &data).unwrap();
    assert_eq!(table[0].curves[0].b, BValue::Exact(15));
    std::fs::remove_dir_all(&dir).unwrap();
}
