//! Serialization of reports and evaluations.
//!
//! Floats are always written as `{:.16e}` (17 significant digits) so that two
//! runs with the same configuration produce identical bytes.

use koshliakov::identities::{ParamValue, VerifyReport};
use koshliakov::roots::KoshParam;
use serde::ser::{Serialize, Serializer};
use serde_json::value::RawValue;

/// Fixed-format float; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw = RawValue::from_string(fmt_f64(self.0)).map_err(serde::ser::Error::custom)?;
            raw.serialize(s)
        } else {
            s.serialize_none()
        }
    }
}

pub fn fmt_p(p: KoshParam) -> String {
    match p {
        KoshParam::Zero => "zero".into(),
        KoshParam::Infinity => "inf".into(),
        KoshParam::Finite(v) => fmt_f64(v),
    }
}

pub fn fmt_param(v: &ParamValue) -> String {
    match v {
        ParamValue::Real(x) => fmt_f64(*x),
        ParamValue::Int(n) => n.to_string(),
        ParamValue::Complex(z) => format!("{}{}{}i", fmt_f64(z.re), if z.im < 0.0 { "" } else { "+" }, fmt_f64(z.im)),
        ParamValue::P(p) => fmt_p(*p),
    }
}

/// Ordered string-keyed map.
pub struct OrderedMap<'a, V>(pub Vec<(&'a str, V)>);

impl<V: Serialize> Serialize for OrderedMap<'_, V> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(serde::Serialize)]
#[serde(untagged)]
enum ParamOut {
    Num(Num),
    Int(i64),
    Text(String),
}

fn param_out(v: &ParamValue) -> ParamOut {
    match v {
        ParamValue::Real(x) => ParamOut::Num(Num(*x)),
        ParamValue::Int(n) => ParamOut::Int(*n),
        ParamValue::Complex(_) => ParamOut::Text(fmt_param(v)),
        ParamValue::P(KoshParam::Finite(x)) => ParamOut::Num(Num(*x)),
        ParamValue::P(_) => ParamOut::Text(fmt_param(v)),
    }
}

#[derive(serde::Serialize)]
struct SideOut<'a> {
    label: &'a str,
    re: Num,
    im: Num,
    group: usize,
}

#[derive(serde::Serialize)]
struct ConstraintOut<'a> {
    label: &'a str,
    lhs: Num,
    rhs: Num,
    holds: bool,
}

#[derive(serde::Serialize)]
struct DiagOut<'a> {
    terms: usize,
    nodes: usize,
    #[serde(rename = "T")]
    horizon: Option<Num>,
    extra: OrderedMap<'a, Num>,
}

/// JSON form of a [`VerifyReport`].
#[derive(serde::Serialize)]
pub struct ReportOut<'a> {
    id: &'a str,
    params: OrderedMap<'a, ParamOut>,
    sides: Vec<SideOut<'a>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    constraints: Vec<ConstraintOut<'a>>,
    max_abs_dev: Num,
    max_rel_dev: Num,
    tol: Num,
    pass: bool,
    diag: DiagOut<'a>,
}

impl<'a> ReportOut<'a> {
    pub fn new(r: &'a VerifyReport) -> Self {
        let extra = OrderedMap(r.diag.extra.iter().map(|(k, v)| (k.as_str(), Num(*v))).collect());
        ReportOut {
            id: &r.identity_id,
            params: OrderedMap(r.params.iter().map(|(k, v)| (k.as_str(), param_out(v))).collect()),
            sides: r
                .sides
                .iter()
                .map(|s| SideOut {
                    label: &s.label,
                    re: Num(s.value.re),
                    im: Num(s.value.im),
                    group: s.group,
                })
                .collect(),
            constraints: r
                .constraints
                .iter()
                .map(|c| ConstraintOut {
                    label: &c.label,
                    lhs: Num(c.lhs),
                    rhs: Num(c.rhs),
                    holds: c.holds,
                })
                .collect(),
            max_abs_dev: Num(r.max_abs_dev),
            max_rel_dev: Num(r.max_rel_dev),
            tol: Num(r.tol),
            pass: r.pass,
            diag: DiagOut {
                terms: r.diag.terms,
                nodes: r.diag.nodes,
                horizon: r.diag.horizon.map(Num),
                extra,
            },
        }
    }
}

/// Plain-text rendering used by `--format text`.
pub fn report_text(r: &VerifyReport) -> String {
    let mut out = String::new();
    let params: Vec<String> = r
        .params
        .iter()
        .map(|(k, v)| format!("{k}={}", fmt_param(v)))
        .collect();
    out.push_str(&format!(
        "{} [{}] {}\n",
        r.identity_id,
        params.join(", "),
        if r.pass { "PASS" } else { "FAIL" }
    ));
    for s in &r.sides {
        if s.value.im == 0.0 {
            out.push_str(&format!("  [{}] {:<44} {}\n", s.group, s.label, fmt_f64(s.value.re)));
        } else {
            out.push_str(&format!(
                "  [{}] {:<44} {} {:+.16e}i\n",
                s.group,
                s.label,
                fmt_f64(s.value.re),
                s.value.im
            ));
        }
    }
    for c in &r.constraints {
        out.push_str(&format!(
            "  {} : {} < {} {}\n",
            c.label,
            fmt_f64(c.lhs),
            fmt_f64(c.rhs),
            if c.holds { "holds" } else { "VIOLATED" }
        ));
    }
    out.push_str(&format!(
        "  max_abs_dev={} max_rel_dev={} tol={}\n",
        fmt_f64(r.max_abs_dev),
        fmt_f64(r.max_rel_dev),
        fmt_f64(r.tol)
    ));
    out
}

/// Long-format CSV rows, one per side: identity, params, group, side, re, im,
/// deviations, pass.
pub fn reports_csv_long(reports: &[&VerifyReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "identity", "params", "group", "side", "re", "im", "max_abs_dev", "max_rel_dev", "pass",
    ])
    .expect("in-memory write");
    for r in reports {
        let params: Vec<String> = r
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", fmt_param(v)))
            .collect();
        let params = params.join(";");
        for s in &r.sides {
            w.write_record([
                r.identity_id.as_str(),
                &params,
                &s.group.to_string(),
                &s.label,
                &fmt_f64(s.value.re),
                &fmt_f64(s.value.im),
                &fmt_f64(r.max_abs_dev),
                &fmt_f64(r.max_rel_dev),
                if r.pass { "true" } else { "false" },
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Wide CSV for a sweep of one identity: identity, one column per parameter,
/// the real part of each side, deviations, pass.
pub fn reports_csv_wide(reports: &[&VerifyReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(first) = reports.first() {
        let mut header = vec!["identity".to_string()];
        header.extend(first.params.iter().map(|(k, _)| k.clone()));
        header.extend(first.sides.iter().map(|s| s.label.clone()));
        header.extend(["max_abs_dev", "max_rel_dev", "pass"].map(String::from));
        w.write_record(&header).expect("in-memory write");
        for r in reports {
            let mut row = vec![r.identity_id.clone()];
            row.extend(r.params.iter().map(|(_, v)| fmt_param(v)));
            row.extend(r.sides.iter().map(|s| fmt_f64(s.value.re)));
            row.push(fmt_f64(r.max_abs_dev));
            row.push(fmt_f64(r.max_rel_dev));
            row.push(r.pass.to_string());
            w.write_record(&row).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// CSV with a header and rows of already formatted cells.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
