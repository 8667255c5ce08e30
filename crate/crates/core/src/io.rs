//! cdd/lrs `.ine` reading and writing, and vertex-list output as CSV or JSON.
//!
//! An `.ine` row `b a_1 ... a_n` stands for `b + a·x >= 0`, i.e. `(-a)·x <= b`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::enumerator::EnumerationReport;
use crate::error::{Error, Result};
use crate::polytope::HPolytope;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberType {
    Integer,
    Rational,
    Real,
}

impl NumberType {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "integer" => Some(Self::Integer),
            "rational" => Some(Self::Rational),
            "real" => Some(Self::Real),
            _ => None,
        }
    }
}

/// Raw contents of an H-representation `.ine` file.
#[derive(Debug, Clone, PartialEq)]
pub struct IneDocument {
    pub name: Option<String>,
    pub number_type: NumberType,
    /// 1-based indices of equality rows.
    pub linearity: Vec<usize>,
    /// `m` rows of `n + 1` entries, offset first.
    pub rows: Vec<Vec<f64>>,
}

impl IneDocument {
    pub fn to_polytope(&self) -> Result<HPolytope> {
        let mut a = Vec::with_capacity(self.rows.len() + self.linearity.len());
        let mut b = Vec::with_capacity(self.rows.len() + self.linearity.len());
        for row in &self.rows {
            b.push(row[0]);
            a.push(row[1..].iter().map(|v| -v).collect::<Vec<f64>>());
        }
        for &i in &self.linearity {
            let row = &self.rows[i - 1];
            b.push(-row[0]);
            a.push(row[1..].to_vec());
        }
        HPolytope::new(a, b)
    }
}

fn parse_number(tok: &str, line: usize) -> Result<f64> {
    let err = || Error::Parse { line, message: format!("invalid number '{tok}'") };
    let v = match tok.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.parse().map_err(|_| err())?;
            let q: f64 = q.parse().map_err(|_| err())?;
            if q == 0.0 {
                return Err(err());
            }
            p / q
        }
        None => tok.parse().map_err(|_| err())?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(err())
    }
}

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line, message: format!("invalid {what} '{tok}' on begin line") })
}

/// Parses the text of an `.ine` file.
pub fn parse_ine_document(text: &str) -> Result<IneDocument> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let mut name = None;
    let mut linearity = Vec::new();

    loop {
        let Some((ln, line)) = lines.next() else {
            return Err(Error::Parse { line: 0, message: "missing 'begin'".into() });
        };
        if line.is_empty() || line.starts_with('*') {
            continue;
        }
        if line == "begin" {
            break;
        }
        if line == "H-representation" {
            continue;
        }
        if line == "V-representation" {
            return Err(Error::Parse {
                line: ln,
                message: "V-representation files are not supported".into(),
            });
        }
        let mut toks = line.split_whitespace();
        if toks.next() == Some("linearity") {
            let k = parse_count(toks.next().unwrap_or(""), ln, "linearity count")?;
            let idx = toks.map(|t| parse_count(t, ln, "linearity index")).collect::<Result<Vec<_>>>()?;
            if idx.len() != k {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("linearity lists {} indices but declares {k}", idx.len()),
                });
            }
            linearity = idx;
            continue;
        }
        if name.is_none() {
            name = Some(line.to_string());
        }
    }

    let (ln, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty() && !l.starts_with('*'))
        .ok_or(Error::Parse { line: 0, message: "missing begin line".into() })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 {
        return Err(Error::Parse {
            line: ln,
            message: format!("begin line needs 'm n+1 type', got '{header}'"),
        });
    }
    let m = parse_count(toks[0], ln, "row count")?;
    let cols = parse_count(toks[1], ln, "column count")?;
    let number_type = NumberType::parse(toks[2])
        .ok_or_else(|| Error::Parse { line: ln, message: format!("unknown number type '{}'", toks[2]) })?;
    if cols < 2 {
        return Err(Error::Parse { line: ln, message: format!("column count {cols} < 2") });
    }

    let mut rows = Vec::with_capacity(m);
    let mut last = ln;
    let mut ended = false;
    for (ln, line) in lines.by_ref() {
        last = ln;
        if line.is_empty() || line.starts_with('*') {
            continue;
        }
        if line == "end" {
            ended = true;
            break;
        }
        let row = line.split_whitespace().map(|t| parse_number(t, ln)).collect::<Result<Vec<f64>>>()?;
        if row.len() != cols {
            return Err(Error::Parse {
                line: ln,
                message: format!("row has {} entries, expected {cols}", row.len()),
            });
        }
        if rows.len() == m {
            return Err(Error::Parse { line: ln, message: format!("more than {m} rows") });
        }
        rows.push(row);
    }
    if !ended {
        return Err(Error::Parse { line: last, message: "missing 'end'".into() });
    }
    if rows.len() != m {
        return Err(Error::Parse { line: last, message: format!("expected {m} rows, found {}", rows.len()) });
    }
    if let Some(&bad) = linearity.iter().find(|&&i| i == 0 || i > m) {
        return Err(Error::Parse { line: 0, message: format!("linearity index {bad} out of range") });
    }
    Ok(IneDocument { name, number_type, linearity, rows })
}

/// Parses `.ine` text into a polytope; equality rows become inequality pairs.
pub fn parse_ine(text: &str) -> Result<HPolytope> {
    let doc = parse_ine_document(text)?;
    doc.to_polytope().map_err(|e| Error::Parse { line: 0, message: e.to_string() })
}

/// 17 significant digits, enough to round-trip any `f64`.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes `p` as an `.ine` file with `real` entries.
pub fn write_ine(p: &HPolytope, name: &str) -> String {
    let mut out = String::new();
    if !name.is_empty() {
        out.push_str(name);
        out.push('\n');
    }
    out.push_str("H-representation\nbegin\n");
    let _ = writeln!(out, "{} {} real", p.num_constraints(), p.dim() + 1);
    for (row, bi) in p.a().iter().zip(p.b()) {
        out.push_str(&fmt17(*bi));
        for v in row {
            out.push(' ');
            out.push_str(&fmt17(-v));
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexFormat {
    Csv,
    Json,
}

#[derive(Serialize)]
struct JsonVertex {
    theta_deg: f64,
    x: f64,
    y: f64,
}

#[derive(Serialize)]
struct JsonReport {
    dims: [usize; 2],
    epsilon_deg: f64,
    vertices: Vec<JsonVertex>,
    lp_calls: u64,
    wall_ms: f64,
}

/// Renders an enumeration result as CSV (`theta_deg,x,y`) or JSON.
pub fn write_vertices(report: &EnumerationReport, format: VertexFormat) -> String {
    let verts = &report.result.vertices;
    match format {
        VertexFormat::Csv => {
            let mut out = String::from("theta_deg,x,y\n");
            for v in verts {
                let _ = writeln!(out, "{},{},{}", fmt17(v.theta_deg), fmt17(v.point[0]), fmt17(v.point[1]));
            }
            out
        }
        VertexFormat::Json => {
            let plane = report.result.plane;
            let doc = JsonReport {
                dims: [plane.d1(), plane.d2()],
                epsilon_deg: report.params.epsilon_deg,
                vertices: verts
                    .iter()
                    .map(|v| JsonVertex { theta_deg: v.theta_deg, x: v.point[0], y: v.point[1] })
                    .collect(),
                lp_calls: report.lp_calls,
                wall_ms: report.wall_ms,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerator::{enumerate_vertices, EnumerationParams, ProjectedVertexList};
    use crate::polytope::{make_hypercube, make_permutahedron, make_random_bounded};
    use crate::support::PlaneSpec;
    use proptest::prelude::*;

    #[test]
    fn parses_square() {
        let p = parse_ine("begin\n4 3 real\n1 -1 0\n1 1 0\n1 0 -1\n1 0 1\nend").unwrap();
        assert_eq!(p.b(), &[1.0; 4]);
        let rows: Vec<Vec<f64>> = p.a().to_vec();
        let want = [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]];
        for (r, w) in rows.iter().zip(want) {
            assert_eq!(r[0], w[0]);
            assert_eq!(r[1], w[1]);
        }
    }

    #[test]
    fn parses_rational() {
        let doc = parse_ine_document("begin\n1 3 rational\n1/2 -1 0\nend").unwrap();
        assert_eq!(doc.number_type, NumberType::Rational);
        let p = doc.to_polytope().unwrap();
        assert_eq!(p.b(), &[0.5]);
        assert_eq!(p.a()[0][0], 1.0);
    }

    #[test]
    fn row_arity_error_has_line() {
        let err = parse_ine("begin\n2 3 real\n1 -1\nend").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn other_errors() {
        assert!(matches!(parse_ine("begin\n1 3 real\n1 0 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ine("begin\n1 3\n1 0 0\nend"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ine("begin\n1 3 real\n1 x 0\nend"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_ine("begin\n1 3 complex\n1 0 0\nend"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ine("1 3 real\n1 0 0\nend"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ine("begin\n2 3 real\n1 0 0\nend"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ine("begin\n1 3 real\n1 inf 0\nend"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ine("begin\n1 3 real\n1/0 1 0\nend"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_ine("V-representation\nbegin\n1 3 real\n1 0 0\nend"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn name_comments_options_and_linearity() {
        let text = "* a comment\nmytri\nH-representation\nlinearity 1 3\nbegin\n3 3 integer\n\
                    1 -1 0\n1 0 -1\n0 1 1\nend\nincidence\nmaximize 0 1 1\n";
        let doc = parse_ine_document(text).unwrap();
        assert_eq!(doc.name.as_deref(), Some("mytri"));
        assert_eq!(doc.linearity, vec![3]);
        let p = doc.to_polytope().unwrap();
        assert_eq!(p.num_constraints(), 4);
        // x + y >= 0 and its reverse
        assert_eq!(p.a()[2], vec![-1.0, -1.0]);
        assert_eq!(p.a()[3], vec![1.0, 1.0]);
        assert_eq!(p.b()[3], 0.0);
        assert!(parse_ine("linearity 1 9\nbegin\n1 3 real\n1 0 0\nend").is_err());
    }

    fn bits(p: &HPolytope) -> Vec<u64> {
        p.a().iter().flatten().chain(p.b()).map(|v| v.to_bits()).collect()
    }

    #[test]
    fn round_trips_fixed() {
        for p in [
            make_hypercube(2, 1.0).unwrap(),
            make_permutahedron(4).unwrap(),
            make_random_bounded(4, 9, 42).unwrap(),
        ] {
            let back = parse_ine(&write_ine(&p, "x")).unwrap();
            assert_eq!(bits(&back), bits(&p));
        }
    }

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(
            rows in proptest::collection::vec(proptest::collection::vec(-1e300f64..1e300, 3), 1..8),
            b in proptest::collection::vec(proptest::num::f64::NORMAL | proptest::num::f64::ZERO | proptest::num::f64::SUBNORMAL, 8),
        ) {
            let b = b[..rows.len()].to_vec();
            let p = HPolytope::new(rows, b).unwrap();
            let back = parse_ine(&write_ine(&p, "prop")).unwrap();
            prop_assert_eq!(bits(&back), bits(&p));
        }

        #[test]
        fn mangled_begin_line_is_a_parse_error(m in "[a-z0-9/ -]{0,12}") {
            let text = format!("begin\n{m}\n1 -1 0\nend\n");
            match parse_ine(&text) {
                Ok(p) => prop_assert_eq!(p.num_constraints(), 1),
                Err(e) => prop_assert!(matches!(e, Error::Parse { .. }), "{:?}", e),
            }
        }
    }

    #[test]
    fn csv_and_json_agree() {
        let sq = make_hypercube(2, 1.0).unwrap();
        let rep =
            enumerate_vertices(&sq, PlaneSpec::new(1, 2, 2).unwrap(), &EnumerationParams::default()).unwrap();
        let csv = write_vertices(&rep, VertexFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "theta_deg,x,y");
        assert_eq!(lines.len(), 5);
        let first: Vec<f64> = lines[1].split(',').map(|t| t.parse().unwrap()).collect();
        assert_eq!(first, vec![0.0, 1.0, 1.0]);

        let json: serde_json::Value =
            serde_json::from_str(&write_vertices(&rep, VertexFormat::Json)).unwrap();
        assert_eq!(json["vertices"].as_array().unwrap().len(), lines.len() - 1);
        assert_eq!(json["dims"], serde_json::json!([1, 2]));
        assert_eq!(json["epsilon_deg"], 0.5);
        assert_eq!(json["lp_calls"].as_u64().unwrap(), rep.lp_calls);
        assert!(json["wall_ms"].is_number());
    }

    #[test]
    fn empty_list_is_header_only() {
        let rep = EnumerationReport {
            result: ProjectedVertexList { vertices: vec![], plane: PlaneSpec::new(1, 2, 2).unwrap() },
            params: EnumerationParams::default(),
            lp_calls: 0,
            binsearch_iters: 0,
            wall_ms: 0.0,
        };
        assert_eq!(write_vertices(&rep, VertexFormat::Csv), "theta_deg,x,y\n");
    }
}
