//! End-to-end reproduction of the two worked examples.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{self, hermitian_part, Matrix, Tolerance, C64};
use crate::numrad::{numerical_radius, DEFAULT_EPS};
use crate::transform::{accretive_via_disk, is_accretive, transform_c, Window};

#[derive(Clone, Debug, Serialize)]
pub struct DemoRow {
    pub example: String,
    pub quantity: String,
    /// Published value, when one is printed.
    pub expected: Option<f64>,
    pub computed: f64,
    pub abs_diff: Option<f64>,
    pub tolerance: Option<f64>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DemoReport {
    pub rows: Vec<DemoRow>,
    pub remark_transform: Matrix,
    pub example_real_part: Matrix,
    pub remark_omega: [f64; 2],
    pub all_ok: bool,
}

fn row(example: &str, quantity: &str, expected: Option<f64>, computed: f64, tolerance: Option<f64>) -> DemoRow {
    let abs_diff = expected.map(|e| (e - computed).abs());
    let ok = match (abs_diff, tolerance) {
        (Some(d), Some(t)) => d <= t,
        _ => computed.is_finite(),
    };
    DemoRow { example: example.into(), quantity: quantity.into(), expected, computed, abs_diff, tolerance, ok }
}

fn flag(example: &str, quantity: &str, value: bool) -> DemoRow {
    let v = f64::from(u8::from(value));
    DemoRow {
        example: example.into(),
        quantity: quantity.into(),
        expected: Some(1.0),
        computed: v,
        abs_diff: Some(1.0 - v),
        tolerance: Some(0.0),
        ok: value,
    }
}

pub fn remark_matrix() -> Matrix {
    let c = C64::new;
    Matrix::from_rows(&[vec![c(5.0, -4.0), c(0.0, 2.0)], vec![c(1.0, 1.0), c(6.0, 0.0)]]).expect("2x2")
}

pub fn remark_transform_expected() -> Matrix {
    let c = C64::new;
    Matrix::from_rows(&[vec![c(27.0, -184.0), c(6.0, 92.0)], vec![c(52.0, 46.0), c(84.0, 0.0)]]).expect("2x2")
}

pub fn example_matrix() -> Matrix {
    Matrix::from_real_rows(&[vec![2.0, 0.0], vec![-1.0, 4.0]]).expect("2x2")
}

pub fn demo_paper() -> Result<DemoReport> {
    let tol = Tolerance::default();
    let mut rows = Vec::new();

    let ex = "remark";
    let a = remark_matrix();
    let w = Window::new(4.0, 50.0)?;
    let c = transform_c(&a, w);
    let expected = remark_transform_expected();
    for i in 0..2 {
        for j in 0..2 {
            rows.push(row(ex, &format!("Re C[{i}][{j}]"), Some(expected[(i, j)].re), c[(i, j)].re, Some(1e-9)));
            rows.push(row(ex, &format!("Im C[{i}][{j}]"), Some(expected[(i, j)].im), c[(i, j)].im, Some(1e-9)));
        }
    }
    let direct = is_accretive(&c, tol)?;
    let disk = accretive_via_disk(&a, w, tol)?;
    rows.push(flag(ex, "C accretive (Re C PSD)", direct));
    rows.push(flag(ex, "C accretive (disk criterion)", disk));
    let norm = linalg::spectral_norm(&a)?;
    let low = w.constants().low_k * norm;
    rows.push(row(ex, "2 sqrt(Mm)/(M+m) ||A||", Some(3.56083), low, Some(1e-3)));
    rows.push(row(ex, "||A||/2", Some(3.3991), norm / 2.0, Some(1e-3)));
    let om = numerical_radius(&a, DEFAULT_EPS)?;
    rows.push(row(ex, "w(A) lower end", None, om.lo, None));
    rows.push(row(ex, "w(A) upper end", None, om.hi, None));
    rows.push(flag(ex, "w(A) lower end >= 3.56083 - 1e-6", om.lo >= 3.56083 - 1e-6));

    let ex = "example";
    let b = example_matrix();
    let wb = Window::new(0.01, 8.0)?;
    let cb = transform_c(&b, wb);
    let re = hermitian_part(&cb);
    let direct = is_accretive(&cb, tol)?;
    let disk = accretive_via_disk(&b, wb, tol)?;
    rows.push(flag(ex, "C accretive (Re C PSD)", direct));
    rows.push(flag(ex, "C accretive (disk criterion)", disk));
    rows.push(flag(ex, "two criteria agree", direct == disk));
    rows.push(row(ex, "lambda_min(Re C)", None, linalg::lambda_min(&re)?, None));
    let diff = wb.big_m() - wb.m();
    rows.push(row(ex, "M - m", Some(7.99), diff, Some(1e-12)));
    let two_norm = 2.0 * linalg::spectral_norm(&b)?;
    rows.push(row(ex, "2||A||", Some(8.31), two_norm, Some(0.01)));
    rows.push(row(ex, "2||A|| - (M - m)", None, two_norm - diff, None));
    rows.push(flag(ex, "improvement margin positive", two_norm - diff > 0.0));

    let all_ok = rows.iter().all(|r| r.ok);
    Ok(DemoReport {
        rows,
        remark_transform: c,
        example_real_part: re.into_matrix(),
        remark_omega: [om.lo, om.hi],
        all_ok,
    })
}

impl DemoReport {
    pub fn to_table(&self) -> String {
        let fmt = |x: Option<f64>| x.map(|v| format!("{v:.10}")).unwrap_or_else(|| "-".into());
        let mut out = format!("{:<8} {:<36} {:>18} {:>18} {:>12}  ok\n", "example", "quantity", "expected", "computed", "|diff|");
        for r in &self.rows {
            out.push_str(&format!(
                "{:<8} {:<36} {:>18} {:>18} {:>12}  {}\n",
                r.example,
                r.quantity,
                fmt(r.expected),
                format!("{:.10}", r.computed),
                r.abs_diff.map(|d| format!("{d:.2e}")).unwrap_or_else(|| "-".into()),
                if r.ok { "yes" } else { "NO" }
            ));
        }
        out
    }
}
